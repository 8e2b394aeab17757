/**
 * Review state derived from the session resource.
 *
 * The server is the single source of truth: a state built with
 * `fromSession` on a re-fetched resource reproduces the same cards, so
 * reloading the page loses nothing.  Local mutations exist only as the
 * optimistic step of one in-flight decision and are either settled by
 * the server's response or rolled back.
 */

import type {
  DecisionAction,
  DecisionRecord,
  SelectedTerm,
  SessionResource,
  TermSummary,
} from "./types.js";

/** One candidate card: the proposed term plus its review decision. */
export interface CardState {
  term: SelectedTerm;
  decision: { action: DecisionAction; replacementCode: string | null } | null;
  /** Resolved replacement term for display; null when only the code is known. */
  replacement: TermSummary | null;
  /** True while an optimistic decision awaits the server's acknowledgement. */
  pending: boolean;
  /** Last per-card service rejection, cleared by the next attempt. */
  error: string | null;
}

export interface ReviewState {
  session: SessionResource;
  cards: CardState[];
  /** Term texts learned so far (proposal, picks, final set), keyed by code. */
  knownTerms: ReadonlyMap<string, TermSummary>;
}

/** Latest decision per target code; earlier revisions are audit history. */
export function effectiveDecisions(decisions: DecisionRecord[]): Map<string, DecisionRecord> {
  const latest = new Map<string, DecisionRecord>();
  for (const decision of decisions) {
    latest.set(decision.target_llt_code, decision);
  }
  return latest;
}

function collectTerms(
  session: SessionResource,
  extra?: Iterable<TermSummary>,
): Map<string, TermSummary> {
  const known = new Map<string, TermSummary>();
  const add = (term: TermSummary) => {
    known.set(term.llt_code, {
      llt_code: term.llt_code,
      llt_text: term.llt_text,
      pt_code: term.pt_code,
      pt_text: term.pt_text,
    });
  };
  for (const term of extra ?? []) add(term);
  for (const term of session.proposal.selected) add(term);
  for (const term of session.final_set ?? []) add(term);
  return known;
}

/**
 * Build the complete review state from a session resource.
 *
 * `extraTerms` only enriches how replacements are displayed (text
 * instead of bare code); it never changes which decisions the cards
 * carry.
 */
export function fromSession(
  session: SessionResource,
  extraTerms?: Iterable<TermSummary>,
): ReviewState {
  const knownTerms = collectTerms(session, extraTerms);
  const latest = effectiveDecisions(session.decisions);

  const cards: CardState[] = session.proposal.selected.map((term) => {
    const record = latest.get(term.llt_code);
    if (record === undefined) {
      return { term, decision: null, replacement: null, pending: false, error: null };
    }
    const replacementCode = record.action === "replace" ? record.replacement_llt_code : null;
    return {
      term,
      decision: { action: record.action, replacementCode },
      replacement: replacementCode !== null ? (knownTerms.get(replacementCode) ?? null) : null,
      pending: false,
      error: null,
    };
  });

  return { session, cards, knownTerms };
}

function updateCard(
  state: ReviewState,
  code: string,
  update: (card: CardState) => CardState,
): ReviewState {
  const cards = state.cards.map((card) => (card.term.llt_code === code ? update(card) : card));
  return { ...state, cards };
}

/**
 * Apply a decision optimistically, before the server has acknowledged
 * it.  Settle with `settle` on success or revert with `rollback` on
 * failure.
 */
export function decideLocally(
  state: ReviewState,
  code: string,
  action: DecisionAction,
  replacement?: TermSummary,
): ReviewState {
  const knownTerms = new Map(state.knownTerms);
  if (replacement !== undefined) {
    knownTerms.set(replacement.llt_code, replacement);
  }
  const next = updateCard(state, code, (card) => ({
    ...card,
    decision: {
      action,
      replacementCode: action === "replace" ? (replacement?.llt_code ?? null) : null,
    },
    replacement: action === "replace" ? (replacement ?? null) : null,
    pending: true,
    error: null,
  }));
  return { ...next, knownTerms };
}

/**
 * Adopt the server's view after a successful call.  Cards are rebuilt
 * from the resource; unrelated per-card errors are carried over so one
 * settling decision does not wipe another card's visible rejection.
 */
export function settle(state: ReviewState, session: SessionResource): ReviewState {
  const next = fromSession(session, state.knownTerms.values());
  const errors = new Map(
    state.cards
      .filter((card) => card.error !== null && !card.pending)
      .map((card) => [card.term.llt_code, card.error] as const),
  );
  return {
    ...next,
    cards: next.cards.map((card) => ({
      ...card,
      error: errors.get(card.term.llt_code) ?? null,
    })),
  };
}

/** Revert one card to its state before a failed optimistic decision. */
export function rollback(
  state: ReviewState,
  before: ReviewState,
  code: string,
  message: string,
): ReviewState {
  const previous = before.cards.find((card) => card.term.llt_code === code);
  return updateCard(state, code, (card) => ({
    term: previous?.term ?? card.term,
    decision: previous?.decision ?? null,
    replacement: previous?.replacement ?? null,
    pending: false,
    error: message,
  }));
}

/** Codes still lacking a decision, in display order. */
export function undecidedCodes(state: ReviewState): string[] {
  return state.cards
    .filter((card) => card.decision === null)
    .map((card) => card.term.llt_code);
}

/** The validate button is live only when every card is decided and settled. */
export function validateEnabled(state: ReviewState): boolean {
  return (
    state.session.status === "open" &&
    state.cards.every((card) => card.decision !== null && !card.pending)
  );
}
