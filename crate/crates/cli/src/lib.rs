//! Argument grammar, report type and command implementations of the `g2crit`
//! binary. The binary itself only parses, runs and emits.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use g2crit::archfactors::{cocycle_chain, combined_ratio, verify_cocycle_identity, CChar, GammaRatio};
use g2crit::comblemma::{coverage_report, critical_regions, twisted_regions, verify_lemma};
use g2crit::kostant::{
    kostant_reps, natural_basis, prime_involution, wprime_component_identity, KostantPair, DIM_U,
};
use g2crit::lcrit::{crit_set, crit_set_product, kinds, poe_check, tate_traversal_bounds, widths, LKind};
use g2crit::numeric::{fmt_q, parse_q, HalfInt};
use g2crit::purity::{PurePair, PureWeight};
use g2crit::rootsys::{
    pairing_int, parabolic_data, positive_roots, r7_restriction, root_label, Maximal, Parabolic, ALPHA, BETA,
};
use g2crit::sampling::{dominant_lambda, right_of_axis_critical, rng};
use g2crit::tables::{
    printed_twisted_table, table_mismatches, twisted_table, weyl_table, weyl_table_mismatches, TABLE_PWS,
    TABLE_SPAN,
};
use g2crit::weights::{Basis, WeightCoords};
use g2crit::Error;

/// Exact G2 combinatorics for Eisenstein constant terms.
#[derive(Parser, Debug)]
#[command(name = "g2crit", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reproduce a table of root, Weyl or parabolic data.
    #[command(subcommand)]
    Table(TableCmd),
    /// Critical sets and the point-of-evaluation test for one weight.
    #[command(subcommand)]
    Crit(CritCmd),
    /// Run a verification suite.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Lattice points of the region systems.
    #[command(subcommand)]
    Regions(RegionsCmd),
    /// Archimedean Gamma ratios.
    #[command(subcommand)]
    Arch(ArchCmd),
}

#[derive(Subcommand, Debug)]
pub enum TableCmd {
    /// `(w, w^{-1}α, w^{-1}β)` for the twelve Weyl group elements.
    Weyl,
    /// Positive roots and their simple coroot pairings.
    Roots,
    /// Unipotent roots, `ρ_P`, evaluation point and adjoint grading.
    Parabolic {
        /// `alpha`, `beta` or `borel`.
        #[arg(long, value_parser = parse_parabolic)]
        parabolic: Parabolic,
    },
    /// `w^{-1}.(a,b)` and `w^{-1}.(w-b,w-a)` for the Kostant representatives.
    Twisted(ParabolicArg),
    /// Restriction of the seven-dimensional representation to the Levi factor.
    R7(ParabolicArg),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ParabolicArg {
    /// `alpha` or `beta`.
    #[arg(long, value_parser = parse_maximal)]
    pub parabolic: Maximal,
}

#[derive(Args, Debug, Clone)]
pub struct WeightArg {
    /// `a,b,a*,b*` per place, places separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,
    /// `alpha` or `beta`.
    #[arg(long, value_parser = parse_maximal)]
    pub parabolic: Maximal,
    /// Coordinates of the weight; defaults to the natural ones of the parabolic.
    #[arg(long, value_parser = parse_basis)]
    pub basis: Option<Basis>,
}

impl WeightArg {
    fn weight(&self) -> Result<PureWeight, Error> {
        let basis = self.basis.unwrap_or_else(|| natural_basis(self.parabolic));
        parse_weight(&self.weight, basis)
    }
}

#[derive(Subcommand, Debug)]
pub enum CritCmd {
    /// Critical set of each factor, or of one with `--kind`.
    Set {
        #[command(flatten)]
        w: WeightArg,
        /// `ad3`, `omega`, `std` or `stdtwist`.
        #[arg(long, value_parser = parse_kind)]
        kind: Option<LKind>,
    },
    /// Critical points of the product of the factors.
    Product(WeightArg),
    /// Statement (1) at the point of evaluation with both inequality families.
    Poe(WeightArg),
    /// Tate twists that keep statement (1).
    Twists(WeightArg),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Statements (1) and (3) of the combinatorial lemma over a lattice window.
    Comblemma {
        #[command(flatten)]
        p: ParabolicArg,
        /// Purity weights `lo..hi`, inclusive.
        #[arg(long, default_value = "-30..10", allow_hyphen_values = true, value_parser = parse_range)]
        pw: (i64, i64),
        #[arg(long, default_value_t = 60)]
        window: i64,
    },
    /// Critical and twisted-action regions cover the same lattice points.
    Coverage {
        #[command(flatten)]
        p: ParabolicArg,
        #[arg(long, default_value = "-12..3", allow_hyphen_values = true, value_parser = parse_range)]
        pw: (i64, i64),
        #[arg(long, default_value_t = 40)]
        window: i64,
    },
    /// The published tables against the computed ones.
    Tables {
        /// Grid half-width for the twisted-action tables.
        #[arg(long, default_value_t = TABLE_SPAN)]
        span: i64,
    },
    /// Product of the rank-one ratios against the combined ratio.
    Cocycle {
        #[command(flatten)]
        p: ParabolicArg,
        /// Check one weight instead of a seeded sample.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// The `w ↦ w'` involution and its identity on dominant weights.
    Involution {
        #[command(flatten)]
        p: ParabolicArg,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegionKind {
    Crit,
    Twisted,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum RegionsCmd {
    /// Lattice points `(a, b)`, `a >= b`, with the regions containing them.
    Emit {
        #[command(flatten)]
        p: ParabolicArg,
        #[arg(long, allow_hyphen_values = true)]
        pw: i64,
        #[arg(long, default_value_t = 20)]
        window: i64,
        #[arg(long, value_enum, default_value_t = RegionKind::Both)]
        kind: RegionKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum ArchCmd {
    /// The five rank-one steps of the long intertwining operator.
    Chain(WeightArg),
    /// Combined ratio `∏ L(jm) / L(1 + jm)` over the factors.
    Ratio {
        #[command(flatten)]
        w: WeightArg,
        /// Point `m`; defaults to the point of evaluation.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_half)]
        m: Option<HalfInt>,
    },
    /// Chain product against the combined ratio at the point of evaluation.
    Verify(WeightArg),
}

/// Outcome of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Degenerate,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Degenerate => "DEGENERATE",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail | Status::Degenerate => 1,
        }
    }
}

/// A command's output. `FAIL` always comes with counterexamples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub counterexamples: Vec<String>,
}

impl Report {
    fn new(command: &str, columns: &[&str]) -> Self {
        Report {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            counterexamples: Vec::new(),
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    fn fail(&mut self, counterexample: String) {
        self.status = Status::Fail;
        self.counterexamples.push(counterexample);
    }

    /// Serializes in the chosen format; both end with a newline.
    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Tsv => self.tsv(),
        }
    }

    fn tsv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# command\t{}", self.command);
        for (k, v) in &self.parameters {
            let _ = writeln!(s, "# {k}\t{v}");
        }
        let _ = writeln!(s, "# status\t{}", self.status.name());
        let _ = writeln!(s, "{}", self.columns.join("\t"));
        for r in &self.rows {
            let _ = writeln!(s, "{}", r.join("\t"));
        }
        for c in &self.counterexamples {
            let _ = writeln!(s, "# counterexample\t{c}");
        }
        s
    }
}

// Parsers ---------------------------------------------------------------------

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub fn parse_maximal(s: &str) -> Result<Maximal, String> {
    Maximal::parse(s).map_err(|e| e.to_string())
}

pub fn parse_parabolic(s: &str) -> Result<Parabolic, String> {
    if s.trim().eq_ignore_ascii_case("borel") {
        return Ok(Parabolic::Borel);
    }
    parse_maximal(s).map(Parabolic::Max)
}

pub fn parse_basis(s: &str) -> Result<Basis, String> {
    Basis::parse(s).map_err(|e| e.to_string())
}

pub fn parse_kind(s: &str) -> Result<LKind, String> {
    LKind::parse(s).map_err(|e| e.to_string())
}

pub fn parse_half(s: &str) -> Result<HalfInt, String> {
    parse_q(s).and_then(HalfInt::from_q).map_err(|e| e.to_string())
}

/// `lo..hi`, inclusive at both ends.
pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad lower bound in {s:?}"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad upper bound in {s:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

/// `a,b,a*,b*;a,b,a*,b*;...`.
pub fn parse_weight(s: &str, basis: Basis) -> Result<PureWeight, Error> {
    let mut pairs = Vec::new();
    for place in s.split(';').filter(|p| !p.trim().is_empty()) {
        let n: Vec<i64> = place
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| domain(format!("bad integer in place {place:?}")))?;
        let [a, b, a_s, b_s] = n[..] else {
            return Err(domain(format!("place {place:?} needs four entries a,b,a*,b*")));
        };
        pairs.push(PurePair::new(a, b, a_s, b_s));
    }
    PureWeight::new(pairs, basis)
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn pair_text(p: (i64, i64)) -> String {
    format!("({},{})", p.0, p.1)
}

fn char_text(pair: (CChar, CChar)) -> String {
    format!("({}; {})", pair.0, pair.1)
}

fn ratio_cells(r: GammaRatio) -> Vec<String> {
    vec![r.to_string(), r.pretty()]
}

// Commands --------------------------------------------------------------------

/// Runs a parsed command. Domain errors propagate; Gamma poles become a
/// `DEGENERATE` report.
pub fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Table(t) => Ok(table(t)),
        Command::Crit(c) => crit(c),
        Command::Verify(v) => verify(v),
        Command::Regions(RegionsCmd::Emit { p, pw, window, kind }) => regions(p.parabolic, *pw, *window, *kind),
        Command::Arch(a) => arch(a),
    }
}

fn table(t: &TableCmd) -> Report {
    match t {
        TableCmd::Weyl => {
            let mut r = Report::new("table weyl", &["w", "word", "length", "w^-1(alpha)", "w^-1(beta)"]);
            for (row, len) in weyl_table().into_iter().zip(g2crit::rootsys::weyl_group().iter().map(|w| w.length)) {
                r.row(vec![row.w, row.word, len.to_string(), row.inv_alpha, row.inv_beta]);
            }
            r
        }
        TableCmd::Roots => {
            let mut r = Report::new("table roots", &["root", "x", "y", "<root,alpha^v>", "<root,beta^v>"]);
            for v in positive_roots() {
                r.row(vec![
                    root_label(v),
                    v.x.to_string(),
                    v.y.to_string(),
                    pairing_int(v, ALPHA).expect("root").to_string(),
                    pairing_int(v, BETA).expect("root").to_string(),
                ]);
            }
            r
        }
        TableCmd::Parabolic { parabolic } => {
            let d = parabolic_data(*parabolic);
            let name = match parabolic {
                Parabolic::Borel => "borel".to_string(),
                Parabolic::Max(p) => p.name().to_string(),
            };
            let mut r = Report::new("table parabolic", &["field", "value"]).param("parabolic", &name);
            let roots = |v: &[g2crit::rootsys::RootVector]| {
                v.iter().map(|x| root_label(*x)).collect::<Vec<_>>().join(", ")
            };
            let opt = |o: Option<String>| o.unwrap_or_else(|| "-".to_string());
            let grading: Vec<String> = d.adjoint_grading.iter().map(|g| format!("{{{}}}", roots(g))).collect();
            let h: Vec<String> = d.h_values.iter().map(|x| fmt_q(*x)).collect();
            for (k, v) in [
                ("levi_simple_root", opt(d.levi_simple_root.map(root_label))),
                ("unipotent_roots", roots(&d.unipotent_roots)),
                ("rho_p", d.rho_p.to_string()),
                ("fundamental_weight", opt(d.fundamental_weight.map(root_label))),
                ("evaluation_point", opt(d.evaluation_point.map(|k| k.to_string()))),
                ("modulus_exponent", opt(d.modulus_exponent.map(|m| m.to_string()))),
                ("m", opt(d.m.map(|m| m.to_string()))),
                ("adjoint_grading", grading.join(" ")),
                ("h_values", h.join(", ")),
                ("criticality_holds", yes(d.criticality_holds())),
            ] {
                r.row(vec![k.to_string(), v]);
            }
            r
        }
        TableCmd::Twisted(ParabolicArg { parabolic }) => {
            let mut r = Report::new(
                "table twisted",
                &["w", "length", "w^-1.(a,b)", "w^-1.(w-b,w-a)", "printed (a,b)", "printed (w-b,w-a)"],
            )
            .param("parabolic", parabolic);
            let printed = printed_twisted_table(*parabolic);
            let reps = kostant_reps((*parabolic).into());
            for ((row, p), w) in twisted_table(*parabolic).iter().zip(&printed).zip(&reps) {
                r.row(vec![
                    row.w.clone(),
                    w.length.to_string(),
                    row.eta_text(),
                    row.etabar_text(),
                    p.eta_text(),
                    p.etabar_text(),
                ]);
            }
            r
        }
        TableCmd::R7(ParabolicArg { parabolic }) => {
            let mut r = Report::new("table r7", &["block", "exponents"]).param("parabolic", parabolic);
            for b in r7_restriction(*parabolic) {
                let e: Vec<String> = b.exponents.iter().map(|x| pair_text(*x)).collect();
                r.row(vec![b.name, e.join(" ")]);
            }
            r
        }
    }
}

fn weight_params(r: Report, w: &WeightArg, mu: &PureWeight) -> Report {
    r.param("parabolic", w.parabolic)
        .param("weight", &w.weight)
        .param("basis", mu.basis().name())
        .param("pw", mu.pw())
}

fn crit(c: &CritCmd) -> Result<Report, Error> {
    Ok(match c {
        CritCmd::Set { w, kind } => {
            let mu = w.weight()?;
            let mut r = weight_params(
                Report::new("crit set", &["kind", "j", "lattice", "abelian", "cuspidal", "critical", "points"]),
                w,
                &mu,
            );
            let list: Vec<LKind> = match kind {
                Some(k) => vec![*k],
                None => kinds(w.parabolic).to_vec(),
            };
            for k in list {
                let wd = widths(&mu, k);
                let set = crit_set(&mu, k);
                r.row(vec![
                    k.name().to_string(),
                    k.scale().to_string(),
                    k.lattice().name().to_string(),
                    fmt_q(wd.abelian),
                    wd.cuspidal.to_string(),
                    set.to_string(),
                    set.len().to_string(),
                ]);
            }
            r
        }
        CritCmd::Product(w) => {
            let mu = w.weight()?;
            let mut r = weight_params(Report::new("crit product", &["critical", "points", "k", "k critical"]), w, &mu);
            let set = crit_set_product(&mu, w.parabolic);
            let k = w.parabolic.evaluation_point();
            r.row(vec![set.to_string(), set.len().to_string(), k.to_string(), yes(set.contains(k))]);
            r
        }
        CritCmd::Poe(w) => {
            let mu = w.weight()?;
            let poe = poe_check(&mu, w.parabolic);
            let mut r = weight_params(Report::new("crit poe", &["check", "holds"]), w, &mu);
            r.row(vec![format!("k = {} critical", poe.k), yes(poe.critical_at_k)]);
            r.row(vec!["1 + jk critical for every factor".to_string(), yes(poe.critical_at_k_plus_1)]);
            r.row(vec!["k + 1 in the product set".to_string(), yes(poe.k_plus_1_in_product)]);
            r.row(vec!["statement (1)".to_string(), yes(poe.statement_1)]);
            for fam in [&poe.derived, &poe.printed] {
                for c in &fam.checks {
                    r.row(vec![format!("{}: {}", fam.name, c.label), yes(c.holds)]);
                }
            }
            if !poe.statement_1 {
                r.fail(format!("statement (1) fails for {mu}"));
            }
            r
        }
        CritCmd::Twists(w) => {
            let mu = w.weight()?;
            let mut r = weight_params(Report::new("crit twists", &["lowest t", "highest t"]), w, &mu);
            match tate_traversal_bounds(&mu, w.parabolic)? {
                Some((lo, hi)) => r.row(vec![lo.to_string(), hi.to_string()]),
                None => {
                    r.row(vec!["NONE".to_string(), "NONE".to_string()]);
                    r.fail(format!("no Tate twist of {mu} satisfies statement (1)"));
                }
            }
            r
        }
    })
}

const MAX_COUNTEREXAMPLES: usize = 20;

fn verify(v: &VerifyCmd) -> Result<Report, Error> {
    Ok(match v {
        VerifyCmd::Comblemma { p, pw, window } => {
            let rep = verify_lemma(p.parabolic, *pw, *window)?;
            let mut r = Report::new("verify comblemma", &["quantity", "value"])
                .param("parabolic", p.parabolic)
                .param("pw", format!("{}..{}", pw.0, pw.1))
                .param("window", window);
            for (k, val) in [
                ("points", rep.points),
                ("critical points", rep.critical_points),
                ("disagreements (1) vs (3)", rep.disagreements.len()),
                ("derived family mismatches", rep.derived_mismatches),
                ("printed bounds mismatches", rep.printed_mismatches),
                ("literal k+1 reading mismatches", rep.literal_mismatches),
                ("max balanced shapes at a point", rep.max_shapes),
            ] {
                r.row(vec![k.to_string(), val.to_string()]);
            }
            for d in rep.disagreements.iter().take(MAX_COUNTEREXAMPLES) {
                r.fail(format!(
                    "pw={} (a,b)=({},{}): (1)={} (3)={}",
                    d.pw, d.a, d.b, d.statement_1, d.statement_3
                ));
            }
            r
        }
        VerifyCmd::Coverage { p, pw, window } => {
            let mut r = Report::new(
                "verify coverage",
                &["pw", "critical points", "twisted points", "symmetric difference", "boundary overlaps"],
            )
            .param("parabolic", p.parabolic)
            .param("pw", format!("{}..{}", pw.0, pw.1))
            .param("window", window);
            for w in pw.0..=pw.1 {
                let c = coverage_report(w, p.parabolic, *window)?;
                r.row(vec![
                    w.to_string(),
                    c.crit_points.to_string(),
                    c.twist_points.to_string(),
                    c.symmetric_difference.len().to_string(),
                    c.crit_overlaps.to_string(),
                ]);
                for pt in c.symmetric_difference.iter().take(MAX_COUNTEREXAMPLES) {
                    r.fail(format!("pw={w} (a,b)={}", pair_text(*pt)));
                }
            }
            r
        }
        VerifyCmd::Tables { span } => {
            if *span < 0 {
                return Err(domain("span must be nonnegative"));
            }
            let mut r = Report::new("verify tables", &["table", "w", "column", "printed", "computed", "points off"])
                .param("span", span)
                .param("pw", TABLE_PWS.map(|x| x.to_string()).join(","));
            for m in weyl_table_mismatches() {
                r.fail(format!("inverse action: {m}"));
            }
            for p in Maximal::BOTH {
                for m in table_mismatches(&printed_twisted_table(p), p, *span, &TABLE_PWS) {
                    r.row(vec![
                        format!("twisted {p}"),
                        m.w.clone(),
                        m.column.to_string(),
                        m.printed.clone(),
                        m.derived.clone(),
                        m.points.to_string(),
                    ]);
                    r.fail(format!("{p} {} column {}: printed {} but w^-1. gives {}", m.w, m.column, m.printed, m.derived));
                }
            }
            r
        }
        VerifyCmd::Cocycle { p, weight, count, seed } => {
            let mut r = Report::new("verify cocycle", &["weight", "chain product", "combined ratio", "equal"])
                .param("parabolic", p.parabolic);
            let sample: Vec<PureWeight> = match weight {
                Some(w) => vec![parse_weight(w, natural_basis(p.parabolic))?],
                None => {
                    r = r.param("count", count).param("seed", seed);
                    let mut g = rng(*seed);
                    (0..*count).map(|_| right_of_axis_critical(&mut g, p.parabolic, 20)).collect()
                }
            };
            for mu in &sample {
                match verify_cocycle_identity(mu, p.parabolic) {
                    Ok(c) => {
                        r.row(vec![mu.to_string(), c.chain_product.to_string(), c.combined.to_string(), yes(c.equal)]);
                        if !c.equal {
                            r.fail(format!("{mu}: {} != {}", c.chain_product, c.combined));
                        }
                    }
                    Err(Error::Degenerate(msg)) => return Ok(degenerate(r, msg)),
                    Err(e) => return Err(e),
                }
            }
            r
        }
        VerifyCmd::Involution { p, count, seed } => {
            let pm = p.parabolic;
            let mut r = Report::new("verify involution", &["w", "w'", "l(w)+l(w')", "w''=w", "identity holds"])
                .param("parabolic", pm)
                .param("count", count)
                .param("seed", seed);
            let reps = kostant_reps(pm.into());
            let basis = natural_basis(pm);
            let mut g = rng(*seed);
            let lambdas: Vec<(i64, i64)> = (0..*count).map(|_| dominant_lambda(&mut g, pm, 30)).collect();
            for w in &reps {
                let wp = prime_involution(w, pm)?;
                let back = prime_involution(&wp, pm)? == *w;
                let mut good = 0;
                for &(u, v) in &lambdas {
                    let id = wprime_component_identity(WeightCoords::int(basis, u, v), w, pm)?;
                    if id.equal {
                        good += 1;
                    } else {
                        r.fail(format!("{w} at ({u},{v}): {} vs {}", pair_text(id.lhs), pair_text(id.rhs)));
                    }
                }
                let total = w.length + wp.length;
                r.row(vec![w.name(), wp.name(), total.to_string(), yes(back), format!("{good}/{count}")]);
                if !back || total != DIM_U {
                    r.fail(format!("{w}: w'={wp}, w''=w {back}, lengths {total}"));
                }
            }
            for x in &reps {
                for y in &reps {
                    let pair = KostantPair::new(x.clone(), y.clone());
                    if pair.is_balanced() != pair.prime(pm)?.is_balanced() {
                        r.fail(format!("balance of {pair} is not preserved"));
                    }
                }
            }
            r
        }
    })
}

fn degenerate(mut r: Report, msg: String) -> Report {
    r.status = Status::Degenerate;
    r.counterexamples.push(msg);
    r
}

fn regions(p: Maximal, pw: i64, window: i64, kind: RegionKind) -> Result<Report, Error> {
    if window < 1 {
        return Err(domain("window must be at least 1"));
    }
    let crit = critical_regions(pw, p);
    let twist = twisted_regions(pw, p);
    let mut r = Report::new("regions emit", &["a", "b", "critical", "twisted"])
        .param("parabolic", p)
        .param("pw", pw)
        .param("window", window)
        .param("kind", format!("{kind:?}").to_lowercase());
    let names = |list: &[g2crit::comblemma::RegionSystem], a: i64, b: i64| {
        let mut n: Vec<&str> = list.iter().filter(|s| s.contains(a, b, pw)).map(|s| s.name.as_str()).collect();
        n.dedup();
        n.join(",")
    };
    for a in -window..=window {
        for b in -window..=a {
            let (c, t) = (names(&crit, a, b), names(&twist, a, b));
            let keep = match kind {
                RegionKind::Crit => !c.is_empty(),
                RegionKind::Twisted => !t.is_empty(),
                RegionKind::Both => !c.is_empty() || !t.is_empty(),
            };
            if keep {
                let dash = |s: String| if s.is_empty() { "-".to_string() } else { s };
                r.row(vec![a.to_string(), b.to_string(), dash(c), dash(t)]);
            }
        }
    }
    Ok(r)
}

fn arch(a: &ArchCmd) -> Result<Report, Error> {
    let result = match a {
        ArchCmd::Chain(w) => {
            let mu = w.weight()?;
            let mut r = weight_params(
                Report::new("arch chain", &["step", "reflection", "source", "character", "ratio", "pretty"]),
                w,
                &mu,
            );
            match cocycle_chain(&mu, w.parabolic) {
                Ok(chain) => {
                    for (i, s) in chain.steps.iter().enumerate() {
                        let mut cells = vec![
                            (i + 1).to_string(),
                            s.reflection.symbol().to_string(),
                            char_text(s.source),
                            s.character.to_string(),
                        ];
                        cells.extend(ratio_cells(s.ratio));
                        r.row(cells);
                    }
                    let mut cells = vec!["product".into(), "-".into(), char_text(chain.final_pair), "-".into()];
                    cells.extend(ratio_cells(chain.product()));
                    r.row(cells);
                    Ok(r)
                }
                Err(e) => Err((r, e)),
            }
        }
        ArchCmd::Ratio { w, m } => {
            let mu = w.weight()?;
            let m = m.unwrap_or_else(|| w.parabolic.evaluation_point());
            let r = weight_params(Report::new("arch ratio", &["m", "ratio", "pretty"]), w, &mu).param("m", m);
            match combined_ratio(&mu, w.parabolic, m) {
                Ok(x) => {
                    let mut r = r;
                    let mut cells = vec![m.to_string()];
                    cells.extend(ratio_cells(x));
                    r.row(cells);
                    Ok(r)
                }
                Err(e) => Err((r, e)),
            }
        }
        ArchCmd::Verify(w) => {
            let mu = w.weight()?;
            let r = weight_params(Report::new("arch verify", &["side", "ratio", "pretty"]), w, &mu);
            match verify_cocycle_identity(&mu, w.parabolic) {
                Ok(c) => {
                    let mut r = r;
                    for (side, x) in [("chain product", c.chain_product), ("combined ratio", c.combined)] {
                        let mut cells = vec![side.to_string()];
                        cells.extend(ratio_cells(x));
                        r.row(cells);
                    }
                    if !c.equal {
                        r.fail(format!("{} != {}", c.chain_product, c.combined));
                    }
                    Ok(r)
                }
                Err(e) => Err((r, e)),
            }
        }
    };
    match result {
        Ok(r) => Ok(r),
        Err((r, Error::Degenerate(msg))) => Ok(degenerate(r, msg)),
        Err((_, e)) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsers() {
        assert_eq!(parse_range("-30..10"), Ok((-30, 10)));
        assert!(parse_range("3..1").is_err());
        assert_eq!(parse_half("-5/2"), Ok(HalfInt::from_twice(-5)));
        let mu = parse_weight("3,2,-8,-9", Basis::TBeta).unwrap();
        assert_eq!(mu.pw(), -6);
        assert_eq!(parse_weight("3,2,-8,-9;1,0,-6,-7", Basis::TBeta).unwrap().places(), 2);
        assert!(parse_weight("3,2,-8", Basis::TBeta).is_err());
        assert!(parse_weight("3,2,-8,-8", Basis::TBeta).is_err());
    }

    #[test]
    fn tsv_layout() {
        let mut r = Report::new("x", &["a", "b"]).param("k", 1);
        r.row(vec!["1".into(), "-5/2".into()]);
        assert_eq!(r.emit(Format::Tsv), "# command\tx\n# k\t1\n# status\tPASS\na\tb\n1\t-5/2\n");
        r.fail("bad".into());
        assert!(r.emit(Format::Tsv).ends_with("# counterexample\tbad\n"));
    }
}
