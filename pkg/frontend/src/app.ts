/**
 * App shell: mounts the review flow onto a root element.
 *
 * The shell owns transient concerns only (which replace picker is
 * open, in-flight flags, error banners); everything durable lives in
 * the session resource, and the view is re-rendered from scratch after
 * every change.
 */

import { ApiError, ReviewApi } from "./api.js";
import { highlightDescription } from "./highlight.js";
import {
  renderCards,
  renderFinalSet,
  renderMatches,
  renderSegments,
  renderValidate,
  renderWarnings,
  escapeHtml,
} from "./render.js";
import type { ReviewState } from "./session.js";
import { decideLocally, fromSession, rollback, settle } from "./session.js";
import { Typeahead } from "./typeahead.js";
import type { DecisionAction, SessionResource, TermSummary } from "./types.js";

interface ShellState {
  draft: string;
  submitting: boolean;
  banner: string | null;
  review: ReviewState | null;
  /** Card whose replace picker is open, if any. */
  replaceTarget: string | null;
  searchQuery: string;
  matches: TermSummary[];
  searchNote: string | null;
}

function errorMessage(error: unknown): string {
  if (error instanceof ApiError) {
    return typeof error.detail === "string" ? error.detail : error.detail.message;
  }
  return error instanceof Error ? error.message : String(error);
}

export class ReviewApp {
  private readonly root: HTMLElement;
  private readonly api: ReviewApi;
  private readonly typeahead: Typeahead;
  private state: ShellState = {
    draft: "",
    submitting: false,
    banner: null,
    review: null,
    replaceTarget: null,
    searchQuery: "",
    matches: [],
    searchNote: null,
  };

  constructor(root: HTMLElement, api: ReviewApi, typeaheadDelayMs = 150) {
    this.root = root;
    this.api = api;
    this.typeahead = new Typeahead(
      (query, limit) => this.api.searchTerms(query, limit),
      {
        onResults: (matches) => {
          this.state.matches = matches;
          this.state.searchNote = null;
          this.render();
        },
        onError: (message) => {
          this.state.matches = [];
          this.state.searchNote = message;
          this.render();
        },
      },
      { delayMs: typeaheadDelayMs },
    );
    this.root.addEventListener("click", (event) => this.onClick(event));
    this.root.addEventListener("input", (event) => this.onInput(event));
    this.render();
  }

  /** Open an existing session, e.g. after a page reload. */
  async load(sessionId: string): Promise<void> {
    try {
      this.adopt(await this.api.getSession(sessionId));
    } catch (error) {
      this.state.banner = errorMessage(error);
      this.render();
    }
  }

  private adopt(session: SessionResource): void {
    const previous = this.state.review;
    this.state.review =
      previous === null ? fromSession(session) : settle(previous, session);
    this.state.banner = null;
    this.state.replaceTarget = null;
    this.state.searchQuery = "";
    this.state.matches = [];
    this.state.searchNote = null;
    this.render();
  }

  private onInput(event: Event): void {
    const target = event.target as HTMLElement;
    if (target instanceof HTMLTextAreaElement && target.dataset.role === "draft") {
      this.state.draft = target.value;
      this.syncSubmitButton();
    } else if (target instanceof HTMLInputElement && target.dataset.role === "search") {
      this.state.searchQuery = target.value;
      this.typeahead.input(target.value);
    }
  }

  private onClick(event: Event): void {
    const target = (event.target as HTMLElement).closest<HTMLElement>("[data-action]");
    if (target === null || target.hasAttribute("disabled")) {
      return;
    }
    const action = target.dataset.action;
    const code = target.dataset.code ?? "";
    if (action === "submit") {
      void this.submit();
    } else if (action === "accept" || action === "reject") {
      void this.decide(code, action);
    } else if (action === "open-replace") {
      this.state.replaceTarget = this.state.replaceTarget === code ? null : code;
      this.state.searchQuery = "";
      this.state.matches = [];
      this.state.searchNote = null;
      this.typeahead.cancel();
      this.render();
    } else if (action === "pick") {
      const term = this.state.matches.find((match) => match.llt_code === code);
      if (term !== undefined && this.state.replaceTarget !== null) {
        void this.decide(this.state.replaceTarget, "replace", term);
      }
    } else if (action === "validate") {
      void this.validate();
    }
  }

  private async submit(): Promise<void> {
    const text = this.state.draft.trim();
    if (text.length === 0 || this.state.submitting) {
      return;
    }
    this.state.submitting = true;
    this.state.banner = null;
    this.render();
    try {
      const session = await this.api.createSession(text);
      this.state.review = fromSession(session);
      this.state.replaceTarget = null;
      this.state.matches = [];
    } catch (error) {
      // the form (and its draft) stays; only a banner appears
      this.state.banner = errorMessage(error);
    } finally {
      this.state.submitting = false;
      this.render();
    }
  }

  private async decide(code: string, action: DecisionAction, term?: TermSummary): Promise<void> {
    const review = this.state.review;
    if (review === null) {
      return;
    }
    const before = review;
    this.state.review = decideLocally(review, code, action, term);
    this.state.replaceTarget = null;
    this.state.matches = [];
    this.render();
    try {
      const session = await this.api.addDecision(review.session.session_id, {
        target_llt_code: code,
        action,
        ...(action === "replace" && term !== undefined
          ? { replacement_llt_code: term.llt_code }
          : {}),
      });
      this.adopt(session);
    } catch (error) {
      this.state.review = rollback(this.state.review, before, code, errorMessage(error));
      this.render();
    }
  }

  private async validate(): Promise<void> {
    const review = this.state.review;
    if (review === null) {
      return;
    }
    try {
      this.adopt(await this.api.validate(review.session.session_id));
    } catch (error) {
      this.state.banner = errorMessage(error);
      this.render();
    }
  }

  private syncSubmitButton(): void {
    const button = this.root.querySelector<HTMLButtonElement>('[data-action="submit"]');
    if (button !== null) {
      button.disabled = this.state.draft.trim().length === 0 || this.state.submitting;
    }
  }

  private render(): void {
    const document = this.root.ownerDocument;
    const focused = document.activeElement;
    const searchHadFocus =
      focused instanceof HTMLElement && focused.dataset.role === "search";

    const { banner, review } = this.state;
    const bannerHtml =
      banner !== null ? `<p class="banner" role="alert">${escapeHtml(banner)}</p>` : "";
    this.root.innerHTML = `
<section class="review-app">
  ${this.renderForm()}
  ${bannerHtml}
  ${review !== null ? this.renderSession(review) : ""}
</section>`;

    if (searchHadFocus) {
      const input = this.root.querySelector<HTMLInputElement>('[data-role="search"]');
      if (input !== null) {
        input.focus();
        input.setSelectionRange(input.value.length, input.value.length);
      }
    }
  }

  private renderForm(): string {
    const disabled =
      this.state.draft.trim().length === 0 || this.state.submitting ? " disabled" : "";
    return `
<form class="submit-form" onsubmit="return false">
  <textarea data-role="draft" rows="3"
    placeholder="Describe the adverse reaction…">${escapeHtml(this.state.draft)}</textarea>
  <button data-action="submit"${disabled}>${this.state.submitting ? "Encoding…" : "Encode"}</button>
</form>`;
  }

  private renderSession(review: ReviewState): string {
    const proposal = review.session.proposal;
    const segments = highlightDescription(
      review.session.description,
      proposal.tokens,
      proposal.selected,
    );
    const picker = this.renderPicker();
    const outcome =
      review.session.status === "validated" && review.session.final_set !== null
        ? renderFinalSet(review.session.final_set)
        : renderValidate(review);
    return `
<section class="session" data-session-id="${escapeHtml(review.session.session_id)}"
  data-status="${review.session.status}">
  ${renderSegments(segments)}
  ${renderWarnings(proposal.warnings)}
  ${renderCards(review)}
  ${picker}
  ${outcome}
</section>`;
  }

  private renderPicker(): string {
    const review = this.state.review;
    const show =
      this.state.replaceTarget !== null ||
      (review !== null && review.cards.length === 0 && review.session.status === "open");
    if (!show) {
      return "";
    }
    const note =
      this.state.searchNote !== null
        ? `<p class="search-note">${escapeHtml(this.state.searchNote)}</p>`
        : "";
    const heading =
      this.state.replaceTarget !== null
        ? `Replacement for <code>${escapeHtml(this.state.replaceTarget)}</code>`
        : "Term lookup";
    return `
<section class="picker">
  <h3>${heading}</h3>
  <input data-role="search" type="search" placeholder="Search dictionary terms…"
    value="${escapeHtml(this.state.searchQuery)}">
  ${note}
  ${renderMatches(this.state.matches)}
</section>`;
  }
}

/** Mount the app on `root`, talking to the service at `baseUrl`. */
export function mount(root: HTMLElement, baseUrl = ""): ReviewApp {
  return new ReviewApp(root, new ReviewApi(baseUrl));
}
