/* tslint:disable */
/* eslint-disable */

/**
 * Ids and descriptions of the identity registry.
 */
export function identity_list(): string;

/**
 * Verifies one identity over `n_lo..=n_hi`.
 */
export function identity_sweep(id: string, n_lo: number, n_hi: number): string;

/**
 * Rows `n = 1..=n_max` of `p(n, k)` and `Λ(n, k)`, each cross-checked.
 */
export function partition_table(n_max: number): string;

/**
 * `spt_(a,b)(n, k)` against `p(n, k)` for every `k`, plus the totals.
 */
export function spt_profile(a: number, b: number, n: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly identity_list: () => [number, number];
    readonly identity_sweep: (a: number, b: number, c: number, d: number) => [number, number];
    readonly partition_table: (a: number) => [number, number];
    readonly spt_profile: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
