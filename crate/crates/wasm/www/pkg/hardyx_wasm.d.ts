/* tslint:disable */
/* eslint-disable */

/**
 * `Phi_1(p, t_i)` on `t_i = i/(n-1)`.
 */
export function phi1_curve(p: number, n: number): Float64Array;

/**
 * `[value, regime, alpha, beta]` at one point; regime is 0 for the
 * Moebius-outer branch, 1 for the outer branch, 2 when both attain it.
 * Missing parameters are NaN.
 */
export function phi1_point(p: number, t: number): Float64Array;

/**
 * The limit `k^{1-p}` the sharpness ratios approach.
 */
export function sharpness_limit(p: number, k: number): number;

/**
 * Sharpness ratios for each `eps`, in order.
 */
export function sharpness_ratios(p: number, k: number, eps: Float64Array): Float64Array;

/**
 * `t_p` for `0 < p < 1`.
 */
export function t_p(p: number): number;

/**
 * Interleaved `[p, t_p, lower, upper]` rows on `p_i = i/(n+1)`.
 */
export function t_p_band_curve(n: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly phi1_curve: (a: number, b: number) => [number, number, number, number];
    readonly phi1_point: (a: number, b: number) => [number, number, number, number];
    readonly sharpness_limit: (a: number, b: number) => number;
    readonly sharpness_ratios: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly t_p: (a: number) => [number, number, number];
    readonly t_p_band_curve: (a: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
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
