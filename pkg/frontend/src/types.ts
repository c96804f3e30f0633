// Payload shapes of the /api/v1 analytics surface.

export interface ParamAxis {
  name: string;
  kind: "continuous" | "integer" | "categorical" | "objective";
  low?: number;
  high?: number;
  scale?: "linear" | "log";
  choices?: readonly string[] | null;
}

export interface ExplorationPoint {
  iteration: number;
  trial_id: number;
  value: number | string | null;
  objective: number | null;
  kind: "sample" | "mutate";
  parent: number | null;
  parent_value: number | string | null;
  status: string;
}

export interface ParamSeries extends ParamAxis {
  points: readonly ExplorationPoint[];
}

export interface ChainPoint {
  iteration: number;
  trial_id: number;
  objective: number | null;
  budget: number;
}

export interface Chain {
  trial_ids: readonly number[];
  points: readonly ChainPoint[];
  values: Record<string, number | string | null>;
}

export interface MutationLink {
  parent: number;
  child: number;
  iteration: number;
}

export interface PeakPoint {
  seq: number;
  iteration: number;
  trial_id: number;
  objective: number;
  best: number;
}

export interface ExplorationPayload {
  schema_version: number;
  process_id: string;
  params: readonly ParamSeries[];
  chains: readonly Chain[];
  links: readonly MutationLink[];
  peak: readonly PeakPoint[];
}

export interface TrialRow {
  trial_id: number;
  process_id: string;
  assignment: Record<string, number | string>;
  origin: string;
  parent: number | null;
  iteration: number;
  status: string;
  objective: number | null;
  budget_consumed: number;
  aux: Record<string, number>;
}

export interface ImportanceEntry {
  subset: readonly string[];
  fraction: number;
  std: number;
}

export interface ImportancePayload {
  schema_version: number;
  process_id: string;
  entries: readonly ImportanceEntry[];
  total_variance: readonly number[];
  zero_variance: boolean;
  warning: string | null;
}

export interface MarginalPayload {
  schema_version: number;
  process_id: string;
  params: readonly string[];
  grid: readonly number[] | readonly (readonly number[])[];
  grid_native: readonly unknown[];
  mean: readonly number[];
  std: readonly number[];
}

export interface TradeoffPoint {
  trial_id: number;
  process_id: string;
  x: number;
  y: number;
  on_front: boolean;
}

export interface TradeoffPayload {
  schema_version: number;
  x: string;
  y: string;
  points: readonly TradeoffPoint[];
  skipped: number;
}

export interface ParallelPayload {
  schema_version: number;
  axes: readonly ParamAxis[];
  trials: readonly { trial_id: number; process_id: string }[];
  matrix: readonly (readonly (number | null)[])[];
}

export interface ProcessSummary {
  process_id: string;
  status: string;
  algorithm: string;
  direction: "maximize" | "minimize";
  objective_metric: string;
  counts: Record<string, number>;
  total_trials: number;
  best_objective: number | null;
  objective_mean: number | null;
  objective_std: number | null;
  histograms: Record<string, { edges: readonly number[]; counts: readonly number[] }>;
}

export interface StudySummary {
  schema_version: number;
  study_id: string;
  name: string;
  processes: readonly ProcessSummary[];
}

export interface MetricsPayload {
  schema_version: number;
  trial_id: number;
  name: string;
  points: readonly (readonly [number, number])[];
  smoothed: readonly (readonly [number, number])[] | null;
}

export interface StudyInfo {
  study_id: string;
  name: string;
  created_at: number;
  process_ids: readonly string[];
}

export interface ProcessInfo {
  process_id: string;
  study_id: string;
  status: string;
  config: { space: { params: readonly ParamAxis[] }; [key: string]: unknown };
}

export interface RefineEdit {
  op: "narrow" | "widen" | "drop_and_fix";
  name: string;
  low?: number;
  high?: number;
  value?: number | string;
}

export interface RefinementDraft {
  source_process_ids: string[];
  edits: RefineEdit[];
  overrides?: Record<string, unknown>;
}
