/**
 * Debounced dictionary search driving the replace picker.
 *
 * Keystrokes are coalesced, short queries never hit the service, and a
 * response that arrives after a newer query has been issued is dropped,
 * so the rendered matches always belong to the latest input.
 */

import type { TermSearchResponse, TermSummary } from "./types.js";

export interface TypeaheadCallbacks {
  /** Matches for the given query; an empty list clears the dropdown. */
  onResults(matches: TermSummary[], query: string): void;
  /** Search failure worth showing; stale failures are dropped too. */
  onError?(message: string): void;
}

export interface TypeaheadOptions {
  /** Quiet time after the last keystroke before searching. */
  delayMs?: number;
  /** Queries shorter than this (after trimming) just clear results. */
  minLength?: number;
  /** Match cap requested from the service. */
  limit?: number;
}

type SearchFn = (query: string, limit: number) => Promise<TermSearchResponse>;

export class Typeahead {
  private readonly search: SearchFn;
  private readonly callbacks: TypeaheadCallbacks;
  private readonly delayMs: number;
  private readonly minLength: number;
  private readonly limit: number;

  private timer: ReturnType<typeof setTimeout> | null = null;
  private generation = 0;

  constructor(search: SearchFn, callbacks: TypeaheadCallbacks, options: TypeaheadOptions = {}) {
    this.search = search;
    this.callbacks = callbacks;
    this.delayMs = options.delayMs ?? 150;
    this.minLength = options.minLength ?? 2;
    this.limit = options.limit ?? 10;
  }

  /** Feed the current input value; call on every keystroke. */
  input(rawQuery: string): void {
    const query = rawQuery.trim();
    this.cancel();
    if (query.length < this.minLength) {
      this.callbacks.onResults([], query);
      return;
    }
    const generation = this.generation;
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.run(query, generation);
    }, this.delayMs);
  }

  /** Drop the pending query and invalidate in-flight responses. */
  cancel(): void {
    this.generation += 1;
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  private async run(query: string, generation: number): Promise<void> {
    try {
      const response = await this.search(query, this.limit);
      if (generation === this.generation) {
        this.callbacks.onResults(response.matches, response.query);
      }
    } catch (error) {
      if (generation === this.generation) {
        this.callbacks.onError?.(error instanceof Error ? error.message : String(error));
      }
    }
  }
}
