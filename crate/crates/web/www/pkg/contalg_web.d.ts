/* tslint:disable */
/* eslint-disable */

/**
 * Structural report for a ring expression such as `Z2xZ4`.
 */
export function analyze_ring(expr: string): string;

/**
 * Least `n` with `c(f)^n c(g) = c(f)^(n-1) c(fg)` in `R[X]`.
 */
export function dm_exponent(expr: string, f: string, g: string): string;

/**
 * Zero-divisor graph of the ring (`degree == 0`) or of its polynomials
 * up to `degree`.
 */
export function zero_divisor_graph(expr: string, degree: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly analyze_ring: (a: number, b: number) => [number, number];
    readonly dm_exponent: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly zero_divisor_graph: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
