/* tslint:disable */
/* eslint-disable */

/**
 * Realizes each derived set of `input` (a set term, or an ordinal α meaning
 * the canonical set of rank α+1) as points of `[0, 1]` for plotting.
 */
export function derived_chain(input: string, depth: number): string;

/**
 * Evaluates an expression such as `w*2 + 1` or `2^aleph_0 > aleph_0`.
 */
export function evaluate(expr: string, gch: boolean): string;

/**
 * Lists the rearrangement of the naturals of type `alpha`, showing `k`
 * elements of each ω-block, together with the first `k` positions of each
 * element below `probe`.
 */
export function order_prefix(alpha: string, k: number, probe: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly derived_chain: (a: number, b: number, c: number) => [number, number];
    readonly evaluate: (a: number, b: number, c: number) => [number, number];
    readonly order_prefix: (a: number, b: number, c: number, d: number) => [number, number];
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
