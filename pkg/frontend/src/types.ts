/**
 * JSON contracts of the review service.
 *
 * These mirror the HTTP payloads byte for byte; the client performs no
 * transformation beyond parsing, so a view rebuilt from a re-fetched
 * session resource is identical to the view built from the original
 * response.
 */

/** Ranking criteria; lower is better, compared c1 through c5 in order. */
export interface TermWeights {
  /** Share of the term's words left unmatched. */
  c1: number;
  /** 1 when any match needed stemming, else 0. */
  c2: number;
  /** Bigram distance between the term and the matching words. */
  c3: number;
  /** Spread of the matching tokens relative to the term length. */
  c4: number;
  /** Sum of the matched word positions inside the term. */
  c5: number;
}

/** One candidate term as released by the encoder. */
export interface SelectedTerm {
  /** Dictionary code of the specific term. */
  llt_code: string;
  /** Term text as it appears in the dictionary. */
  llt_text: string;
  /** Code of the grouping (preferred) term. */
  pt_code: string;
  /** Text of the grouping (preferred) term. */
  pt_text: string;
  weights: TermWeights;
  /** Indexes of the description tokens that matched this term. */
  voters: number[];
  /** Word positions inside the term matched by each voter (parallel to voters). */
  voted: number[];
  /** True when at least one vote came from the stemmed index. */
  stem_used: boolean;
}

/** One description token with its span in the original text. */
export interface TokenView {
  /** Casefolded word. */
  surface: string;
  /** Character offset of the word start in the original text. */
  start: number;
  /** Character offset one past the word end. */
  end: number;
  /** Stemmed form of the surface. */
  stem: string;
  /** True when some released term matched this token. */
  covered: boolean;
}

/** A possibly-negating word found in the raw description. */
export interface NegationWarning {
  word: string;
  start: number;
  end: number;
}

/** Response body of POST /encode; also the `proposal` of a session. */
export interface EncodeResponse {
  selected: SelectedTerm[];
  covered_tokens: boolean[];
  /** True when more terms were released than the display cap allows. */
  truncated: boolean;
  tokens: TokenView[];
  warnings: NegationWarning[];
  dictionary_version: string;
}

export type DecisionAction = "accept" | "reject" | "replace";

/** One recorded review decision (audit history keeps every revision). */
export interface DecisionRecord {
  target_llt_code: string;
  action: DecisionAction;
  replacement_llt_code: string | null;
  decided_at: string;
}

/** Body of POST /sessions/{id}/decisions. */
export interface DecisionRequest {
  target_llt_code: string;
  action: DecisionAction;
  replacement_llt_code?: string;
}

/** Term identity without ranking data, as returned by search and validation. */
export interface TermSummary {
  llt_code: string;
  llt_text: string;
  pt_code: string;
  pt_text: string;
}

export type SessionStatus = "open" | "validated";

/** Response body of the /sessions endpoints. */
export interface SessionResource {
  session_id: string;
  status: SessionStatus;
  created_at: string;
  validated_at: string | null;
  dictionary_version: string;
  description: string;
  proposal: EncodeResponse;
  decisions: DecisionRecord[];
  final_set: TermSummary[] | null;
}

/** Response body of GET /terms. */
export interface TermSearchResponse {
  query: string;
  dictionary_version: string;
  matches: TermSummary[];
}

/** Detail payload of a 409 validate conflict listing unresolved cards. */
export interface UndecidedDetail {
  message: string;
  undecided: string[];
}

/** Error body: FastAPI wraps every error detail in this envelope. */
export interface ErrorBody {
  detail: string | UndecidedDetail;
}
