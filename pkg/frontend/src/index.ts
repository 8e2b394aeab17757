export { ApiError, ReviewApi } from "./api.js";
export type { FetchLike } from "./api.js";
export { ReviewApp, mount } from "./app.js";
export {
  buildSegments,
  highlightDescription,
  termWords,
  tokenStyles,
} from "./highlight.js";
export type { HighlightKind, HighlightSegment } from "./highlight.js";
export {
  decideLocally,
  effectiveDecisions,
  fromSession,
  rollback,
  settle,
  undecidedCodes,
  validateEnabled,
} from "./session.js";
export type { CardState, ReviewState } from "./session.js";
export { Typeahead } from "./typeahead.js";
export type { TypeaheadCallbacks, TypeaheadOptions } from "./typeahead.js";
export type {
  DecisionAction,
  DecisionRecord,
  DecisionRequest,
  EncodeResponse,
  ErrorBody,
  NegationWarning,
  SelectedTerm,
  SessionResource,
  SessionStatus,
  TermSearchResponse,
  TermSummary,
  TermWeights,
  TokenView,
  UndecidedDetail,
} from "./types.js";
