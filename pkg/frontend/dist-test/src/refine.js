// Turns the current brush state into a refinement draft: brushed ranges
// become narrow edits with bounds exactly equal to the brush values, and
// low-importance params can be dropped to a fixed value.
export function buildDraft(sourceProcessIds, brushes, drops = {}, overrides = {}) {
    const edits = [];
    for (const [name, [lo, hi]] of Object.entries(brushes)) {
        if (name in drops)
            continue;
        edits.push({ op: "narrow", name, low: lo, high: hi });
    }
    for (const [name, value] of Object.entries(drops)) {
        edits.push({ op: "drop_and_fix", name, value });
    }
    const draft = { source_process_ids: [...sourceProcessIds], edits };
    if (Object.keys(overrides).length > 0)
        draft.overrides = overrides;
    return draft;
}
/** Params whose single-effect fraction falls below the threshold: candidates
 * for dropping in the refinement form. */
export function dropSuggestions(importance, threshold = 0.05) {
    return importance.entries
        .filter((e) => e.subset.length === 1 && e.fraction < threshold)
        .map((e) => e.subset[0]);
}
