/**
 * Markup builders.
 *
 * Pure string-producing functions so every visual state can be tested
 * without a browser; the app shell assigns the result to innerHTML and
 * wires events by delegation on data attributes.
 */

import type { HighlightSegment } from "./highlight.js";
import type { CardState, ReviewState } from "./session.js";
import { undecidedCodes, validateEnabled } from "./session.js";
import type { NegationWarning, TermSummary } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;")
    .replaceAll("'", "&#39;");
}

/** The reviewed description with covered words marked. */
export function renderSegments(segments: HighlightSegment[]): string {
  const parts = segments.map((segment) => {
    const text = escapeHtml(segment.text);
    if (segment.kind === "plain") {
      return text;
    }
    const hint = segment.kind === "stem" ? ' title="matched via stem"' : "";
    return `<mark class="tok tok-${segment.kind}"${hint}>${text}</mark>`;
  });
  return `<p class="description">${parts.join("")}</p>`;
}

/** Negation notice, empty string when there is nothing to flag. */
export function renderWarnings(warnings: NegationWarning[]): string {
  if (warnings.length === 0) {
    return "";
  }
  const words = warnings.map((warning) => `<b>${escapeHtml(warning.word)}</b>`);
  return `<p class="warnings">May contain negations: ${words.join(", ")}</p>`;
}

function decisionBadge(card: CardState): string {
  if (card.decision === null) {
    return `<span class="badge badge-undecided">undecided</span>`;
  }
  const action = card.decision.action;
  if (action === "replace") {
    const code = card.decision.replacementCode ?? "";
    const label = card.replacement !== null ? card.replacement.llt_text : code;
    return `<span class="badge badge-replace">replaced by ${escapeHtml(label)}</span>`;
  }
  return `<span class="badge badge-${action}">${action}ed</span>`;
}

/**
 * One candidate card.  The five ranking weights appear only in the
 * title attribute: reviewers need the ordering, not the formulas, so
 * the numbers surface on hover alone.
 */
export function renderCard(card: CardState, index: number): string {
  const term = card.term;
  const { c1, c2, c3, c4, c5 } = term.weights;
  const weights = [c1, c2, c3, c4, c5].map((w) => w.toFixed(3)).join(" ");
  const classes = ["card"];
  if (card.decision !== null) classes.push(`card-${card.decision.action}`);
  if (card.pending) classes.push("card-pending");
  const stem = term.stem_used ? `<span class="chip chip-stem">stem match</span>` : "";
  const error =
    card.error !== null ? `<p class="card-error">${escapeHtml(card.error)}</p>` : "";
  const disabled = card.pending ? " disabled" : "";
  return `
<li class="${classes.join(" ")}" data-code="${escapeHtml(term.llt_code)}" title="weights: ${weights}">
  <header>
    <span class="card-rank">${index + 1}</span>
    <span class="card-term">${escapeHtml(term.llt_text)}</span>
    ${stem}
    ${decisionBadge(card)}
  </header>
  <p class="card-pt">${escapeHtml(term.pt_text)} <code>${escapeHtml(term.pt_code)}</code></p>
  ${error}
  <footer>
    <button data-action="accept" data-code="${escapeHtml(term.llt_code)}"${disabled}>Accept</button>
    <button data-action="reject" data-code="${escapeHtml(term.llt_code)}"${disabled}>Reject</button>
    <button data-action="open-replace" data-code="${escapeHtml(term.llt_code)}"${disabled}>Replace…</button>
  </footer>
</li>`;
}

/** The card list, or the explicit empty state when nothing was proposed. */
export function renderCards(state: ReviewState): string {
  if (state.cards.length === 0) {
    return `<p class="no-candidates">No candidate terms were proposed. Use the search below to look terms up manually.</p>`;
  }
  const items = state.cards.map((card, index) => renderCard(card, index)).join("\n");
  const note = state.session.proposal.truncated
    ? `<p class="truncated">Further candidates were suppressed by the display cap.</p>`
    : "";
  return `<ol class="cards">${items}</ol>${note}`;
}

/** Typeahead dropdown entries for the replace picker. */
export function renderMatches(matches: TermSummary[]): string {
  if (matches.length === 0) {
    return `<p class="no-matches">No matching terms.</p>`;
  }
  const rows = matches.map(
    (term) => `
<li>
  <button data-action="pick" data-code="${escapeHtml(term.llt_code)}">
    ${escapeHtml(term.llt_text)} <small>${escapeHtml(term.pt_text)}</small>
  </button>
</li>`,
  );
  return `<ul class="matches">${rows.join("")}</ul>`;
}

/** Validate control plus the outstanding-work hint. */
export function renderValidate(state: ReviewState): string {
  if (state.session.status === "validated") {
    return "";
  }
  const undecided = undecidedCodes(state).length;
  const hint =
    undecided > 0
      ? `<span class="validate-hint">${undecided} card${undecided === 1 ? "" : "s"} undecided</span>`
      : "";
  const disabled = validateEnabled(state) ? "" : " disabled";
  return `<button class="validate" data-action="validate"${disabled}>Validate</button>${hint}`;
}

/** The validated outcome: what will be reported. */
export function renderFinalSet(terms: TermSummary[]): string {
  if (terms.length === 0) {
    return `<p class="final-empty">Validated with no terms.</p>`;
  }
  const rows = terms.map(
    (term) => `
<li><span class="final-term">${escapeHtml(term.llt_text)}</span> <code>${escapeHtml(term.llt_code)}</code> → ${escapeHtml(term.pt_text)}</li>`,
  );
  return `<ul class="final-set">${rows.join("")}</ul>`;
}
