/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const phi1_curve: (a: number, b: number) => [number, number, number, number];
export const phi1_point: (a: number, b: number) => [number, number, number, number];
export const sharpness_limit: (a: number, b: number) => number;
export const sharpness_ratios: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const t_p: (a: number) => [number, number, number];
export const t_p_band_curve: (a: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
