/* tslint:disable */
/* eslint-disable */

/**
 * Builds an example on sets (or a chain) of size up to `size`, runs the law
 * suite and the strictness and univalence deciders.
 */
export function check_example(name: string, size: number): string;

/**
 * Composes relations `h ⊆ x × y` and `k ⊆ y × z`, given as boolean
 * matrices in JSON, through the Kleisli composite for the powerset monad.
 */
export function compose_relations(h: string, k: string, y: number, z: number): string;

/**
 * Validates a `dblcat/1` document at its deepest layer.
 */
export function validate_document(text: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly check_example: (a: number, b: number, c: number) => [number, number];
    readonly compose_relations: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly validate_document: (a: number, b: number) => [number, number];
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
