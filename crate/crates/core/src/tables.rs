//! The published inverse-action tables, their derived counterparts and a
//! grid comparison between the two.
//!
//! Rows of the twisted-action tables are affine in the entries of a pure pair
//! `((a,b),(w-b,w-a))`, so each cell is stored as a pair of [`Affine`] forms
//! in `a`, `b` and the purity weight `w`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::kostant::{inverse_dot, kostant_reps};
use crate::rootsys::{root_label, weyl_group, Maximal, WeylElement, ALPHA, BETA};

/// One row of the inverse-action table of the Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylRow {
    pub w: String,
    pub word: String,
    pub inv_alpha: String,
    pub inv_beta: String,
}

/// `(w, w^{-1}α, w^{-1}β)` for all twelve elements in table order.
pub fn weyl_table() -> Vec<WeylRow> {
    weyl_group()
        .iter()
        .map(|w| WeylRow {
            w: w.name(),
            word: w.ascii(),
            inv_alpha: root_label(w.inverse_act(ALPHA)),
            inv_beta: root_label(w.inverse_act(BETA)),
        })
        .collect()
}

/// `(w, w^{-1}α, w^{-1}β)` as published, in table order.
pub const PRINTED_WEYL_TABLE: [(&str, &str, &str); 12] = [
    ("1", "α", "β"),
    ("w_β", "α+β", "-β"),
    ("w_βα", "γ_s", "-(3α+β)"),
    ("w_βαβ", "γ_s", "-γ_l"),
    ("w_βαβα", "α+β", "-γ_l"),
    ("w_βαβαβ", "α", "-(3α+β)"),
    ("w_α", "-α", "3α+β"),
    ("w_αβ", "-(α+β)", "γ_l"),
    ("w_αβα", "-γ_s", "γ_l"),
    ("w_αβαβ", "-γ_s", "3α+β"),
    ("w_αβαβα", "-(α+β)", "β"),
    ("w_G", "-α", "-β"),
];

/// Rows of [`weyl_table`] that differ from the published table.
pub fn weyl_table_mismatches() -> Vec<String> {
    weyl_table()
        .iter()
        .zip(PRINTED_WEYL_TABLE)
        .filter(|(r, p)| (r.w.as_str(), r.inv_alpha.as_str(), r.inv_beta.as_str()) != *p)
        .map(|(r, p)| format!("{}: computed ({}, {}), printed ({}, {})", p.0, r.inv_alpha, r.inv_beta, p.1, p.2))
        .collect()
}

/// `ca*a + cb*b + cw*w + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Affine {
    pub ca: i64,
    pub cb: i64,
    pub cw: i64,
    pub c0: i64,
}

impl Affine {
    pub const fn new(ca: i64, cb: i64, cw: i64, c0: i64) -> Self {
        Affine { ca, cb, cw, c0 }
    }

    pub fn eval(self, a: i64, b: i64, w: i64) -> i64 {
        self.ca * a + self.cb * b + self.cw * w + self.c0
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, v) in [(self.ca, "a"), (self.cb, "b"), (self.cw, "w")] {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            out.push_str(&format!("{sign}{mag}{v}"));
        }
        if self.c0 != 0 || out.is_empty() {
            if self.c0 >= 0 && !out.is_empty() {
                out.push('+');
            }
            out.push_str(&self.c0.to_string());
        }
        f.write_str(&out)
    }
}

/// A point `(x, y)` whose coordinates are affine forms.
pub type AffinePoint = (Affine, Affine);

fn fmt_point(p: AffinePoint) -> String {
    format!("({}, {})", p.0, p.1)
}

/// One row of a twisted-action table: `w^{-1}.(a,b)` and `w^{-1}.(w-b,w-a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedRow {
    pub w: String,
    pub eta: AffinePoint,
    pub etabar: AffinePoint,
}

impl TwistedRow {
    pub fn eta_text(&self) -> String {
        fmt_point(self.eta)
    }

    pub fn etabar_text(&self) -> String {
        fmt_point(self.etabar)
    }
}

/// Reads off the affine map `(a, b, w) ↦ f(a, b, w)` from four evaluations.
fn interpolate(f: impl Fn(i64, i64, i64) -> (i64, i64)) -> AffinePoint {
    let o = f(0, 0, 0);
    let (da, db, dw) = (f(1, 0, 0), f(0, 1, 0), f(0, 0, 1));
    let coord = |pick: fn((i64, i64)) -> i64| {
        let c0 = pick(o);
        Affine::new(pick(da) - c0, pick(db) - c0, pick(dw) - c0, c0)
    };
    (coord(|p| p.0), coord(|p| p.1))
}

/// The table for `p` computed from the twisted action.
pub fn twisted_table(p: Maximal) -> Vec<TwistedRow> {
    kostant_reps(p.into())
        .iter()
        .map(|w| TwistedRow {
            w: w.name(),
            eta: interpolate(|a, b, _| inverse_dot(w, p, (a, b))),
            etabar: interpolate(|a, b, pw| inverse_dot(w, p, (pw - b, pw - a))),
        })
        .collect()
}

const fn f(ca: i64, cb: i64, cw: i64, c0: i64) -> Affine {
    Affine::new(ca, cb, cw, c0)
}

fn printed_row(w: &str, eta: AffinePoint, etabar: AffinePoint) -> TwistedRow {
    let name = WeylElement::parse(w).expect("table words are valid").name();
    TwistedRow { w: name, eta, etabar }
}

/// The table for `p` as published, cell for cell.
pub fn printed_twisted_table(p: Maximal) -> Vec<TwistedRow> {
    match p {
        Maximal::Beta => vec![
            printed_row("1", (f(1, 0, 0, 0), f(0, 1, 0, 0)), (f(0, -1, 1, 0), f(-1, 0, 1, 0))),
            printed_row("a", (f(1, 0, 0, 0), f(1, -1, 0, -1)), (f(0, -1, 1, 0), f(1, -1, 0, -1))),
            printed_row("ab", (f(1, -1, 0, -2), f(1, 0, 0, 1)), (f(1, -1, 0, -2), f(0, -1, 1, 1))),
            printed_row("aba", (f(1, -1, 0, -2), f(0, -1, 0, -4)), (f(1, -1, 0, -2), f(1, 0, -1, -4))),
            printed_row("abab", (f(0, -1, 0, -5), f(1, -1, 0, -1)), (f(1, 0, -1, -5), f(1, -1, 0, -1))),
            printed_row("ababa", (f(0, -1, 0, -5), f(-1, 0, 0, -5)), (f(1, 0, -1, -5), f(0, 1, -1, -5))),
        ],
        Maximal::Alpha => vec![
            printed_row("1", (f(1, 0, 0, 0), f(0, 1, 0, 0)), (f(0, -1, 1, 0), f(-1, 0, 1, 0))),
            printed_row("b", (f(1, 1, 0, 1), f(0, -1, 0, -2)), (f(-1, -1, 2, 1), f(0, 1, -1, -1))),
            printed_row("ba", (f(1, -1, 0, -1), f(0, 1, 0, -1)), (f(1, -1, 0, -1), f(0, -1, 1, -1))),
            printed_row("bab", (f(1, 0, 0, 0), f(-1, 1, 0, -2)), (f(0, -1, 1, 0), f(-1, 1, 0, -2))),
            printed_row("baba", (f(-1, -1, 0, -5), f(1, 0, 0, 1)), (f(1, 1, -2, -5), f(0, -1, 1, 1))),
            printed_row("babab", (f(0, -1, 0, -3), f(-1, 0, 0, -3)), (f(1, 0, -1, -3), f(0, 1, -1, -3))),
        ],
    }
}

/// A printed cell that disagrees with the twisted action somewhere on the grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellMismatch {
    pub w: String,
    /// `1` for `w^{-1}.(a,b)`, `2` for `w^{-1}.(w-b,w-a)`.
    pub column: u8,
    pub printed: String,
    pub derived: String,
    /// Grid points at which the two values differ.
    pub points: usize,
}

/// Evaluates every printed cell against [`inverse_dot`] at all `(a, b)` with
/// `|a|, |b| <= span` and every purity weight in `pws`.
pub fn table_mismatches(rows: &[TwistedRow], p: Maximal, span: i64, pws: &[i64]) -> Vec<CellMismatch> {
    let reps = kostant_reps(p.into());
    let derived = twisted_table(p);
    let mut out = Vec::new();
    for row in rows {
        let w = reps
            .iter()
            .find(|w| w.name() == row.w)
            .expect("printed rows name Kostant representatives");
        let d = derived.iter().find(|d| d.w == row.w).expect("same representatives");
        for (column, cell, dcell) in [(1u8, row.eta, d.eta), (2, row.etabar, d.etabar)] {
            let mut points = 0;
            for &pw in pws {
                for a in -span..=span {
                    for b in -span..=span {
                        let input = if column == 1 { (a, b) } else { (pw - b, pw - a) };
                        let actual = inverse_dot(w, p, input);
                        let printed = (cell.0.eval(a, b, pw), cell.1.eval(a, b, pw));
                        points += usize::from(actual != printed);
                    }
                }
            }
            if points > 0 {
                out.push(CellMismatch {
                    w: row.w.clone(),
                    column,
                    printed: fmt_point(cell),
                    derived: fmt_point(dcell),
                    points,
                });
            }
        }
    }
    out
}

/// The grid used by the reproduction check.
pub const TABLE_SPAN: i64 = 20;
/// Purity weights used by the reproduction check.
pub const TABLE_PWS: [i64; 5] = [-12, -6, -5, 0, 3];
