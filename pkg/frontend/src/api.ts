/**
 * Thin fetch client for the review service.
 *
 * Every method resolves with the parsed JSON body on 2xx and rejects
 * with an ApiError carrying the HTTP status and the service's `detail`
 * payload otherwise, so callers can branch on status codes (409
 * conflicts, 422 domain rejections) without touching the transport.
 */

import type {
  DecisionRequest,
  EncodeResponse,
  ErrorBody,
  SessionResource,
  TermSearchResponse,
  UndecidedDetail,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Service-reported failure; `detail` is the body the service sent. */
export class ApiError extends Error {
  readonly status: number;
  readonly detail: string | UndecidedDetail;

  constructor(status: number, detail: string | UndecidedDetail) {
    super(typeof detail === "string" ? detail : detail.message);
    this.name = "ApiError";
    this.status = status;
    this.detail = detail;
  }

  /** Codes listed by a 409 validate conflict, empty otherwise. */
  get undecided(): string[] {
    return typeof this.detail === "string" ? [] : this.detail.undecided;
  }
}

async function readDetail(response: Response): Promise<string | UndecidedDetail> {
  try {
    const body = (await response.json()) as ErrorBody;
    if (body && typeof body === "object" && "detail" in body) {
      return body.detail;
    }
  } catch {
    // fall through: body was empty or not JSON
  }
  return `${response.status} ${response.statusText}`.trim();
}

export class ReviewApi {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl: string = "", fetchFn: FetchLike = (...args) => fetch(...args)) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchFn = fetchFn;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      throw new ApiError(response.status, await readDetail(response));
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  /** Stateless encoding preview for a description. */
  encode(text: string): Promise<EncodeResponse> {
    return this.post("/encode", { text });
  }

  /** Open a review session: freezes the proposal for `text`. */
  createSession(text: string): Promise<SessionResource> {
    return this.post("/sessions", { text });
  }

  /** Fetch the current state of a session. */
  getSession(sessionId: string): Promise<SessionResource> {
    return this.request(`/sessions/${encodeURIComponent(sessionId)}`);
  }

  /** Record one accept / reject / replace decision. */
  addDecision(sessionId: string, decision: DecisionRequest): Promise<SessionResource> {
    return this.post(`/sessions/${encodeURIComponent(sessionId)}/decisions`, decision);
  }

  /** Close the session; fails with 409 while any card is undecided. */
  validate(sessionId: string): Promise<SessionResource> {
    return this.post(`/sessions/${encodeURIComponent(sessionId)}/validate`, {});
  }

  /** Prefix-ranked dictionary search backing the replace typeahead. */
  searchTerms(query: string, limit = 20): Promise<TermSearchResponse> {
    const params = new URLSearchParams({ q: query, limit: String(limit) });
    return this.request(`/terms?${params}`);
  }
}
