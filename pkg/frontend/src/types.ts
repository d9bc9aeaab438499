// Wire types for the local parse service.

export type Mode = "bl" | "iv" | "ivt";

export type CategoryKey = "question_word" | "time" | "subject";

export interface TemporalRef {
  source: string;
  term: string;
  position: number;
}

export interface ComparisonArm {
  time: TemporalRef;
  aggregation: string | null;
}

export interface QueryTuple {
  question_word: string | null;
  tense: string;
  times: TemporalRef[];
  subjects: string[];
  qualifiers: string[];
  aggregations: string[];
  is_comparison: boolean;
  comparison_arms: ComparisonArm[];
  mode: Mode;
}

export interface Diagnostics {
  flags: Record<CategoryKey, boolean>;
  time_defaulted: boolean;
  suggestions: Record<CategoryKey, string[]>;
  overall_ok: boolean;
}

export interface ParsePayload {
  tuple: QueryTuple;
  diagnostics: Diagnostics;
}
