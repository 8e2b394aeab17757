import { describe, expect, it } from "vitest";

import {
  decideLocally,
  effectiveDecisions,
  fromSession,
  rollback,
  settle,
  undecidedCodes,
  validateEnabled,
} from "../src/session.js";
import type { DecisionRecord, SessionResource } from "../src/types.js";
import { session, summary, threeCardSession } from "./fixtures.js";
import d1 from "./fixtures/session-d1.json";

const d1Session = d1 as SessionResource;

function record(partial: Partial<DecisionRecord> & Pick<DecisionRecord, "target_llt_code">): DecisionRecord {
  return {
    action: "accept",
    replacement_llt_code: null,
    decided_at: "2025-11-03T10:05:00.000+00:00",
    ...partial,
  };
}

describe("effectiveDecisions", () => {
  it("keeps only the last decision per target", () => {
    const latest = effectiveDecisions([
      record({ target_llt_code: "1001", action: "accept" }),
      record({ target_llt_code: "1002", action: "reject" }),
      record({ target_llt_code: "1001", action: "reject" }),
    ]);
    expect(latest.get("1001")?.action).toBe("reject");
    expect(latest.get("1002")?.action).toBe("reject");
    expect(latest.size).toBe(2);
  });
});

describe("fromSession", () => {
  it("derives one undecided card per proposed term, in proposal order", () => {
    const state = fromSession(threeCardSession());
    expect(state.cards.map((card) => card.term.llt_code)).toEqual(["1001", "1002", "1003"]);
    expect(state.cards.every((card) => card.decision === null)).toBe(true);
    expect(state.cards.every((card) => !card.pending && card.error === null)).toBe(true);
  });

  it("applies recorded decisions with last-revision-wins", () => {
    const base = threeCardSession();
    const resource: SessionResource = {
      ...base,
      decisions: [
        record({ target_llt_code: "1001", action: "accept" }),
        record({ target_llt_code: "1001", action: "reject" }),
        record({ target_llt_code: "1002", action: "replace", replacement_llt_code: "2001" }),
      ],
    };
    const state = fromSession(resource);
    expect(state.cards[0]?.decision).toEqual({ action: "reject", replacementCode: null });
    expect(state.cards[1]?.decision).toEqual({ action: "replace", replacementCode: "2001" });
    expect(state.cards[2]?.decision).toBeNull();
  });

  it("resolves replacement display text from known terms", () => {
    const base = threeCardSession();
    const resource: SessionResource = {
      ...base,
      decisions: [record({ target_llt_code: "1001", action: "replace", replacement_llt_code: "2001" })],
    };
    const bare = fromSession(resource);
    expect(bare.cards[0]?.replacement).toBeNull();

    const enriched = fromSession(resource, [summary("2001", "Cefalea")]);
    expect(enriched.cards[0]?.replacement?.llt_text).toBe("Cefalea");
  });

  it("is a pure function of the resource", () => {
    const resource = threeCardSession();
    expect(fromSession(resource)).toEqual(fromSession(resource));
  });

  it("accepts the captured service payload", () => {
    const state = fromSession(d1Session);
    expect(state.cards.map((card) => card.term.llt_text)).toEqual([
      "Ipotensione",
      "Shock anafilattico",
      "Rash cutaneo",
    ]);
    expect(validateEnabled(state)).toBe(false);
  });
});

describe("optimistic decisions", () => {
  it("marks the card pending until settled", () => {
    const state = fromSession(threeCardSession());
    const next = decideLocally(state, "1002", "accept");
    const card = next.cards[1]!;
    expect(card.decision).toEqual({ action: "accept", replacementCode: null });
    expect(card.pending).toBe(true);
    expect(next.cards[0]?.pending).toBe(false);
    // the input state is untouched
    expect(state.cards[1]?.decision).toBeNull();
  });

  it("records the picked replacement term for display", () => {
    const state = fromSession(threeCardSession());
    const pick = summary("2001", "Cefalea");
    const next = decideLocally(state, "1001", "replace", pick);
    expect(next.cards[0]?.decision).toEqual({ action: "replace", replacementCode: "2001" });
    expect(next.cards[0]?.replacement).toEqual(pick);
  });

  it("settle adopts the server resource and clears pending", () => {
    const resource = threeCardSession();
    const optimistic = decideLocally(fromSession(resource), "1001", "accept");
    const fromServer: SessionResource = {
      ...resource,
      decisions: [record({ target_llt_code: "1001", action: "accept" })],
    };
    const settled = settle(optimistic, fromServer);
    expect(settled.cards[0]?.decision).toEqual({ action: "accept", replacementCode: null });
    expect(settled.cards.every((card) => !card.pending)).toBe(true);
  });

  it("settle keeps replacement texts learned from earlier picks", () => {
    const resource = threeCardSession();
    const pick = summary("2001", "Cefalea");
    const optimistic = decideLocally(fromSession(resource), "1001", "replace", pick);
    const fromServer: SessionResource = {
      ...resource,
      decisions: [
        record({ target_llt_code: "1001", action: "replace", replacement_llt_code: "2001" }),
      ],
    };
    const settled = settle(optimistic, fromServer);
    expect(settled.cards[0]?.replacement?.llt_text).toBe("Cefalea");
  });

  it("settle carries unrelated card errors across", () => {
    const resource = threeCardSession();
    let state = fromSession(resource);
    const before = state;
    state = decideLocally(state, "1002", "accept");
    state = rollback(state, before, "1002", "boom");
    state = decideLocally(state, "1001", "accept");
    const fromServer: SessionResource = {
      ...resource,
      decisions: [record({ target_llt_code: "1001", action: "accept" })],
    };
    const settled = settle(state, fromServer);
    expect(settled.cards[1]?.error).toBe("boom");
    expect(settled.cards[0]?.error).toBeNull();
  });

  it("rollback restores the pre-optimistic decision and surfaces the error", () => {
    const resource: SessionResource = {
      ...threeCardSession(),
      decisions: [record({ target_llt_code: "1001", action: "accept" })],
    };
    const before = fromSession(resource);
    const optimistic = decideLocally(before, "1001", "reject");
    const rolledBack = rollback(optimistic, before, "1001", "service said no");
    const card = rolledBack.cards[0]!;
    expect(card.decision).toEqual({ action: "accept", replacementCode: null });
    expect(card.pending).toBe(false);
    expect(card.error).toBe("service said no");
    expect(rolledBack.cards[1]).toEqual(optimistic.cards[1]);
  });
});

describe("validate gating", () => {
  it("stays disabled while any card is undecided", () => {
    let state = fromSession(threeCardSession());
    expect(validateEnabled(state)).toBe(false);
    expect(undecidedCodes(state)).toEqual(["1001", "1002", "1003"]);

    state = decideLocally(state, "1001", "accept");
    state = decideLocally(state, "1002", "reject");
    expect(validateEnabled(state)).toBe(false);
    expect(undecidedCodes(state)).toEqual(["1003"]);
  });

  it("stays disabled while a decision is pending", () => {
    let state = fromSession(threeCardSession());
    state = decideLocally(state, "1001", "accept");
    state = decideLocally(state, "1002", "reject");
    state = decideLocally(state, "1003", "accept");
    expect(undecidedCodes(state)).toEqual([]);
    expect(validateEnabled(state)).toBe(false); // all three still pending
  });

  it("enables once every card is decided and settled", () => {
    const resource: SessionResource = {
      ...threeCardSession(),
      decisions: [
        record({ target_llt_code: "1001", action: "accept" }),
        record({ target_llt_code: "1002", action: "reject" }),
        record({ target_llt_code: "1003", action: "accept" }),
      ],
    };
    expect(validateEnabled(fromSession(resource))).toBe(true);
  });

  it("is disabled on a validated session", () => {
    const resource: SessionResource = {
      ...threeCardSession(),
      status: "validated",
      validated_at: "2025-11-03T10:10:00.000+00:00",
      decisions: [
        record({ target_llt_code: "1001", action: "accept" }),
        record({ target_llt_code: "1002", action: "accept" }),
        record({ target_llt_code: "1003", action: "accept" }),
      ],
      final_set: [],
    };
    expect(validateEnabled(fromSession(resource))).toBe(false);
  });

  it("is vacuously enabled for an empty proposal", () => {
    expect(validateEnabled(fromSession(session()))).toBe(true);
  });
});
