// Turns the current brush state into a refinement draft: brushed ranges
// become narrow edits with bounds exactly equal to the brush values, and
// low-importance params can be dropped to a fixed value.

import type { ImportancePayload, RefineEdit, RefinementDraft } from "./types.js";

export function buildDraft(
  sourceProcessIds: string[],
  brushes: Record<string, [number, number]>,
  drops: Record<string, number | string> = {},
  overrides: Record<string, unknown> = {},
): RefinementDraft {
  const edits: RefineEdit[] = [];
  for (const [name, [lo, hi]] of Object.entries(brushes)) {
    if (name in drops) continue;
    edits.push({ op: "narrow", name, low: lo, high: hi });
  }
  for (const [name, value] of Object.entries(drops)) {
    edits.push({ op: "drop_and_fix", name, value });
  }
  const draft: RefinementDraft = { source_process_ids: [...sourceProcessIds], edits };
  if (Object.keys(overrides).length > 0) draft.overrides = overrides;
  return draft;
}

/** Params whose single-effect fraction falls below the threshold: candidates
 * for dropping in the refinement form. */
export function dropSuggestions(importance: ImportancePayload,
                                threshold = 0.05): string[] {
  return importance.entries
    .filter((e) => e.subset.length === 1 && e.fraction < threshold)
    .map((e) => e.subset[0]);
}
