/* tslint:disable */
/* eslint-disable */

/**
 * Names accepted by the `series` argument of [`staircase`].
 */
export function catalog_names(): string;

/**
 * Sine partial sums of `f` with `terms` modes, raw and with the endpoint
 * jump moved into the closed-form boundary term.
 */
export function gibbs_partial_sum(f: string, terms: number, points: number): string;

/**
 * `u(x, t)` for `u_t = u_xx` on `[0, π]`; `f`, `g`, `h` are built-in
 * function names.
 */
export function heat_profile(f: string, g: string, h: string, modes: number, t: number, accelerate: boolean, points: number): string;

/**
 * Staircase `[0/0], [0/1], [1/1], ...` of a catalog series at `z`.
 */
export function staircase(series: string, z: string, depth: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly catalog_names: () => [number, number];
    readonly gibbs_partial_sum: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly heat_profile: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number) => [number, number, number, number];
    readonly staircase: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
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
