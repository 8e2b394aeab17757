/**
 * Hand-built payload builders for unit tests, plus one payload captured
 * verbatim from the running service (fixtures/session-d1.json) so the
 * types and the view code are exercised against the real wire shape.
 */

import type {
  EncodeResponse,
  SelectedTerm,
  SessionResource,
  TermSummary,
  TermWeights,
  TokenView,
} from "../src/types.js";

export function weights(partial: Partial<TermWeights> = {}): TermWeights {
  return { c1: 0, c2: 0, c3: 0, c4: 1, c5: 0, ...partial };
}

type TermSeed = Partial<SelectedTerm> & Pick<SelectedTerm, "llt_code" | "llt_text">;

export function term(seed: TermSeed): SelectedTerm {
  return {
    pt_code: `pt-${seed.llt_code}`,
    pt_text: seed.llt_text,
    weights: weights(),
    voters: [],
    voted: [],
    stem_used: false,
    ...seed,
  };
}

export function summary(code: string, text: string): TermSummary {
  return { llt_code: code, llt_text: text, pt_code: `pt-${code}`, pt_text: text };
}

/**
 * Tokenize `text` with the service's word rule (maximal letter runs,
 * lowercased) into token views; `covered` marks surfaces to flag.
 */
export function tokensFor(text: string, covered: Iterable<string> = []): TokenView[] {
  const flagged = new Set(covered);
  const tokens: TokenView[] = [];
  for (const match of text.matchAll(/\p{L}+/gu)) {
    const surface = match[0].toLowerCase();
    tokens.push({
      surface,
      start: match.index,
      end: match.index + match[0].length,
      stem: surface,
      covered: flagged.has(surface),
    });
  }
  return tokens;
}

export function proposal(partial: Partial<EncodeResponse> = {}): EncodeResponse {
  const tokens = partial.tokens ?? [];
  return {
    selected: [],
    covered_tokens: tokens.map((token) => token.covered),
    truncated: false,
    tokens,
    warnings: [],
    dictionary_version: "testdict00001",
    ...partial,
  };
}

let sessionCounter = 0;

export function session(partial: Partial<SessionResource> = {}): SessionResource {
  sessionCounter += 1;
  return {
    session_id: sessionCounter.toString(16).padStart(32, "0"),
    status: "open",
    created_at: "2025-11-03T09:00:00.000+00:00",
    validated_at: null,
    dictionary_version: "testdict00001",
    description: "",
    proposal: proposal(),
    decisions: [],
    final_set: null,
    ...partial,
  };
}

/**
 * A ready-made three-card session: accepted wisdom for most state
 * tests.  Description "mal di testa e nausea forte" with terms voting
 * disjoint tokens.
 */
export function threeCardSession(): SessionResource {
  const description = "mal di testa e nausea forte";
  const tokens = tokensFor(description, ["mal", "di", "testa", "nausea"]);
  const selected = [
    term({
      llt_code: "1001",
      llt_text: "Mal di testa",
      voters: [0, 1, 2],
      voted: [0, 1, 2],
      weights: weights({ c5: 3 }),
    }),
    term({ llt_code: "1002", llt_text: "Nausea", voters: [4], voted: [0] }),
    term({
      llt_code: "1003",
      llt_text: "Nausea mattutina",
      voters: [4],
      voted: [0],
      weights: weights({ c1: 0.5 }),
    }),
  ];
  return session({
    description,
    proposal: proposal({ selected, tokens }),
  });
}
