import type { CategoryKey, Diagnostics, Mode, ParsePayload, QueryTuple } from "./types.js";

// All UI state in one immutable object; every transition returns a new
// state and the render is a pure function of it.

export interface UiState {
  queryText: string;
  mode: Mode;
  pending: boolean;
  lastTuple: QueryTuple | null;
  lastDiagnostics: Diagnostics | null;
  error: string | null;
  /** Sequence number of the newest request sent. */
  latestSeq: number;
  /** Sequence number of the newest response applied. */
  appliedSeq: number;
}

export function initialState(mode: Mode = "ivt"): UiState {
  return {
    queryText: "",
    mode,
    pending: false,
    lastTuple: null,
    lastDiagnostics: null,
    error: null,
    latestSeq: 0,
    appliedSeq: 0,
  };
}

export function queryChanged(state: UiState, text: string): UiState {
  const next = { ...state, queryText: text, error: null };
  if (text.trim() === "") {
    // Empty input resets to the neutral face; nothing to ask the service.
    return { ...next, pending: false, lastTuple: null, lastDiagnostics: null };
  }
  return next;
}

export function modeChanged(state: UiState, mode: Mode): UiState {
  return { ...state, mode };
}

export function requestStarted(state: UiState): { state: UiState; seq: number } {
  const seq = state.latestSeq + 1;
  return { state: { ...state, pending: true, latestSeq: seq }, seq };
}

function isStale(state: UiState, seq: number): boolean {
  return seq !== state.latestSeq;
}

export function responseArrived(state: UiState, seq: number, payload: ParsePayload): UiState {
  if (isStale(state, seq)) {
    return state;
  }
  return {
    ...state,
    pending: false,
    appliedSeq: seq,
    lastTuple: payload.tuple,
    lastDiagnostics: payload.diagnostics,
    error: null,
  };
}

/** The service answered but refused the query (e.g. only stop words). */
export function requestRejected(state: UiState, seq: number): UiState {
  if (isStale(state, seq)) {
    return state;
  }
  return { ...state, pending: false, appliedSeq: seq, lastTuple: null, lastDiagnostics: null };
}

export function requestFailed(state: UiState, seq: number, message: string): UiState {
  if (isStale(state, seq)) {
    return state;
  }
  return {
    ...state,
    pending: false,
    appliedSeq: seq,
    lastTuple: null,
    lastDiagnostics: null,
    error: message,
  };
}

/**
 * Text after tapping a suggested word, or null when the tap is a no-op
 * (word not among the current suggestions for that category).
 */
export function suggestionTapped(state: UiState, category: CategoryKey, word: string): string | null {
  const suggestions = state.lastDiagnostics?.suggestions[category] ?? [];
  if (!suggestions.includes(word)) {
    return null;
  }
  const base = state.queryText.replace(/\s+$/, "");
  return base === "" ? word : `${base} ${word}`;
}

export type ButtonColor = "green" | "red" | "neutral";

export interface ButtonView {
  category: CategoryKey;
  label: string;
  color: ButtonColor;
  /** Tooltip words; non-empty only when the button is red. */
  suggestions: string[];
  /** Informational note (time defaulting), independent of color. */
  hint: string | null;
}

const BUTTON_ORDER: { category: CategoryKey; label: string }[] = [
  { category: "question_word", label: "q_w" },
  { category: "time", label: "t" },
  { category: "subject", label: "s" },
];

/** Exactly three buttons, always q_w, t, s. */
export function buttonViews(state: UiState): ButtonView[] {
  const diag = state.lastDiagnostics;
  return BUTTON_ORDER.map(({ category, label }) => {
    if (!diag) {
      return { category, label, color: "neutral" as ButtonColor, suggestions: [], hint: null };
    }
    const present = diag.flags[category];
    const hint =
      category === "time" && diag.time_defaulted ? "no time given; assuming now" : null;
    return {
      category,
      label,
      color: (present ? "green" : "red") as ButtonColor,
      suggestions: present ? [] : diag.suggestions[category] ?? [],
      hint,
    };
  });
}
