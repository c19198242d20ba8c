/* tslint:disable */
/* eslint-disable */

/**
 * Critical set of each factor, of the product, and the balanced pairs.
 */
export function critical_sets(weight_text: string, parabolic: string): string;

/**
 * Lattice points `(a, b)` with `a >= b` in the window, with the critical and
 * twisted-action regions containing each, plus the uncovered slivers.
 */
export function region_lattice(parabolic: string, pw: bigint, window: bigint): string;

/**
 * The twisted-action table for `parabolic`, symbolic and evaluated at `(a, b)`.
 */
export function twisted_action(parabolic: string, a: bigint, b: bigint, pw: bigint): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly critical_sets: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly region_lattice: (a: number, b: number, c: bigint, d: bigint) => [number, number, number, number];
    readonly twisted_action: (a: number, b: number, c: bigint, d: bigint, e: bigint) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
