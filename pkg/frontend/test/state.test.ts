import { describe, expect, it } from "vitest";

import {
  buttonViews,
  initialState,
  queryChanged,
  requestFailed,
  requestRejected,
  requestStarted,
  responseArrived,
  suggestionTapped,
} from "../src/state.js";
import type { Diagnostics, ParsePayload, QueryTuple } from "../src/types.js";

function makeDiagnostics(overrides: Partial<Diagnostics> = {}): Diagnostics {
  return {
    flags: { question_word: true, time: true, subject: true },
    time_defaulted: false,
    suggestions: { question_word: [], time: [], subject: [] },
    overall_ok: true,
    ...overrides,
  };
}

function makeTuple(): QueryTuple {
  return {
    question_word: "when",
    tense: "past",
    times: [{ source: "inferred_last_occurrence", term: "", position: -1 }],
    subjects: ["talk"],
    qualifiers: ["salli"],
    aggregations: [],
    is_comparison: false,
    comparison_arms: [],
    mode: "ivt",
  };
}

function payload(diag: Diagnostics): ParsePayload {
  return { tuple: makeTuple(), diagnostics: diag };
}

describe("state transitions", () => {
  it("starts neutral and pending-free", () => {
    const state = initialState();
    expect(state.lastDiagnostics).toBeNull();
    expect(state.pending).toBe(false);
    expect(state.mode).toBe("ivt");
  });

  it("clearing the query resets diagnostics to neutral", () => {
    let state = initialState();
    const started = requestStarted(queryChanged(state, "when did I eat"));
    state = responseArrived(started.state, started.seq, payload(makeDiagnostics()));
    expect(state.lastDiagnostics).not.toBeNull();
    state = queryChanged(state, "");
    expect(state.lastDiagnostics).toBeNull();
    expect(buttonViews(state).every((b) => b.color === "neutral")).toBe(true);
  });

  it("discards stale responses, latest wins", () => {
    let state = queryChanged(initialState(), "when did I eat");
    const first = requestStarted(state);
    const second = requestStarted(first.state);
    state = second.state;

    const fresh = makeDiagnostics();
    const stale = makeDiagnostics({
      flags: { question_word: false, time: true, subject: true },
      overall_ok: false,
    });
    state = responseArrived(state, second.seq, payload(fresh));
    const afterStale = responseArrived(state, first.seq, payload(stale));
    expect(afterStale).toBe(state);
    expect(afterStale.lastDiagnostics).toEqual(fresh);
  });

  it("stale failures are ignored too", () => {
    let state = queryChanged(initialState(), "when");
    const first = requestStarted(state);
    const second = requestStarted(first.state);
    state = responseArrived(second.state, second.seq, payload(makeDiagnostics()));
    expect(requestFailed(state, first.seq, "boom")).toBe(state);
  });

  it("failure clears diagnostics and records the error", () => {
    let state = queryChanged(initialState(), "when");
    const started = requestStarted(state);
    state = requestFailed(started.state, started.seq, "service unreachable");
    expect(state.error).toBe("service unreachable");
    expect(buttonViews(state).every((b) => b.color === "neutral")).toBe(true);
  });

  it("a rejected parse (empty query server-side) goes neutral without an error", () => {
    let state = queryChanged(initialState(), "the the");
    const started = requestStarted(state);
    state = requestRejected(started.state, started.seq);
    expect(state.error).toBeNull();
    expect(state.lastDiagnostics).toBeNull();
  });
});

describe("suggestion taps", () => {
  const diag = makeDiagnostics({
    flags: { question_word: true, time: true, subject: false },
    suggestions: { question_word: [], time: [], subject: ["sleep", "eat"] },
    overall_ok: false,
  });

  it("appends a valid suggestion with a single space", () => {
    let state = queryChanged(initialState(), "how much yesterday");
    const started = requestStarted(state);
    state = responseArrived(started.state, started.seq, payload(diag));
    expect(suggestionTapped(state, "subject", "sleep")).toBe("how much yesterday sleep");
  });

  it("is a no-op for words not currently suggested", () => {
    let state = queryChanged(initialState(), "how much yesterday");
    const started = requestStarted(state);
    state = responseArrived(started.state, started.seq, payload(diag));
    expect(suggestionTapped(state, "subject", "jogging")).toBeNull();
    expect(suggestionTapped(state, "question_word", "what")).toBeNull();
  });

  it("is a no-op with no diagnostics at all", () => {
    expect(suggestionTapped(initialState(), "subject", "sleep")).toBeNull();
  });
});

describe("button views", () => {
  it("renders exactly three buttons in q_w, t, s order", () => {
    const views = buttonViews(initialState());
    expect(views.map((v) => v.category)).toEqual(["question_word", "time", "subject"]);
    expect(views.map((v) => v.label)).toEqual(["q_w", "t", "s"]);
  });

  it("colors derive from flags alone", () => {
    let state = queryChanged(initialState(), "how much yesterday");
    const started = requestStarted(state);
    state = responseArrived(
      started.state,
      started.seq,
      payload(
        makeDiagnostics({
          flags: { question_word: true, time: true, subject: false },
          suggestions: { question_word: [], time: [], subject: ["sleep"] },
          overall_ok: false,
        }),
      ),
    );
    const [qw, time, subject] = buttonViews(state);
    expect(qw.color).toBe("green");
    expect(time.color).toBe("green");
    expect(subject.color).toBe("red");
    expect(subject.suggestions).toEqual(["sleep"]);
    expect(qw.suggestions).toEqual([]);
  });

  it("shows the time hint iff the parse defaulted the time", () => {
    let state = queryChanged(initialState(), "when did I talk");
    const started = requestStarted(state);
    state = responseArrived(
      started.state,
      started.seq,
      payload(makeDiagnostics({ time_defaulted: true })),
    );
    const time = buttonViews(state)[1];
    expect(time.color).toBe("green");
    expect(time.hint).toMatch(/assuming now/);
  });
});
