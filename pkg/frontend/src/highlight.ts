/**
 * Description highlighting.
 *
 * The service reports which tokens were covered by released terms; the
 * reviewer additionally needs to see which of those matched only after
 * stemming, because stem matches are the engine's known false-positive
 * hazard (e.g. "mano" / "mania" sharing a stem).  Exact and stem
 * matches therefore get distinct styles.
 */

import type { SelectedTerm, TokenView } from "./types.js";

export type HighlightKind = "plain" | "exact" | "stem";

/** One run of the description: either plain text or a highlighted token. */
export interface HighlightSegment {
  start: number;
  end: number;
  text: string;
  kind: HighlightKind;
}

/**
 * Split a term text into its comparable words: maximal letter runs,
 * lowercased.  This is the same word rule the service applies to both
 * descriptions and dictionary terms, so word positions in `voted` line
 * up with the array returned here.
 */
export function termWords(text: string): string[] {
  return (text.match(/\p{L}+/gu) ?? []).map((word) => word.toLowerCase());
}

/**
 * Classify each token: "exact" when some selected term matched it by
 * surface equality, "stem" when it is covered but every matching vote
 * went through the stemmed index, "plain" when no released term covers
 * it.
 *
 * A vote is exact precisely when the token surface equals the term word
 * at the voted position: the exact index is probed first and wins, so a
 * stem vote can only land on a term containing no word equal to the
 * surface.
 */
export function tokenStyles(tokens: TokenView[], selected: SelectedTerm[]): HighlightKind[] {
  const styles: HighlightKind[] = tokens.map((token) => (token.covered ? "stem" : "plain"));

  for (const term of selected) {
    const words = termWords(term.llt_text);
    term.voters.forEach((tokenIndex, i) => {
      const token = tokens[tokenIndex];
      if (token === undefined || styles[tokenIndex] !== "stem") {
        return;
      }
      const position = term.voted[i];
      if (position !== undefined && words[position] === token.surface) {
        styles[tokenIndex] = "exact";
      }
    });
  }

  return styles;
}

/**
 * Cut the description into non-overlapping segments that concatenate
 * back to the full string: plain gaps between tokens plus one segment
 * per token carrying its highlight kind.
 */
export function buildSegments(
  description: string,
  tokens: TokenView[],
  styles: HighlightKind[],
): HighlightSegment[] {
  const segments: HighlightSegment[] = [];
  let offset = 0;

  const push = (start: number, end: number, kind: HighlightKind) => {
    if (end > start) {
      segments.push({ start, end, text: description.slice(start, end), kind });
    }
  };

  tokens.forEach((token, i) => {
    // token spans arrive strictly increasing; clamp defensively so a
    // malformed span can never produce overlapping segments
    const start = Math.max(token.start, offset);
    const end = Math.min(Math.max(token.end, start), description.length);
    push(offset, start, "plain");
    push(start, end, styles[i] ?? "plain");
    offset = end;
  });

  push(offset, description.length, "plain");
  return segments;
}

/** Convenience wrapper: styles + segments in one call. */
export function highlightDescription(
  description: string,
  tokens: TokenView[],
  selected: SelectedTerm[],
): HighlightSegment[] {
  return buildSegments(description, tokens, tokenStyles(tokens, selected));
}
