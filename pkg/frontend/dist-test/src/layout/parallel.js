// Parallel-coordinates geometry over the merged axes, with brushing.
// Brushes are stored in native units; a row passes when every brushed axis
// has a value inside its range.
import { makeScale } from "./scales.js";
export function layoutParallel(payload) {
    const scales = payload.axes.map(makeScale);
    const n = payload.axes.length;
    const xOf = (i) => (n <= 1 ? 0.5 : i / (n - 1));
    const lines = payload.matrix.map((row, r) => ({
        row: r,
        trialId: payload.trials[r].trial_id,
        processId: payload.trials[r].process_id,
        ys: row.map((v, i) => {
            if (v === null)
                return null;
            const axis = payload.axes[i];
            // categorical columns carry choice indices in the matrix
            return scales[i].position(axis.kind === "categorical" ? v : v);
        }),
    }));
    return { axes: payload.axes, scales, xOf, lines };
}
/** Native value of matrix cell (categorical cells hold choice indices). */
function cellValue(axis, v) {
    return v;
}
/** Row indices whose brushed axes all fall inside their ranges. Categorical
 * brushes select index ranges. Rows missing a brushed axis are excluded. */
export function brushFilter(payload, brushes) {
    const axisIndex = new Map(payload.axes.map((a, i) => [a.name, i]));
    for (const name of Object.keys(brushes)) {
        if (!axisIndex.has(name))
            throw new Error(`brush on unknown axis ${name}`);
    }
    const out = [];
    payload.matrix.forEach((row, r) => {
        for (const [name, [lo, hi]] of Object.entries(brushes)) {
            const v = cellValue(payload.axes[axisIndex.get(name)], row[axisIndex.get(name)]);
            if (v === null || v < lo || v > hi)
                return;
        }
        out.push(r);
    });
    return out;
}
/** Trial references (process, trial) selected by the brushes. */
export function brushedTrials(payload, brushes) {
    return brushFilter(payload, brushes).map((r) => payload.trials[r]);
}
/** Two-layer importance strip above the axes: bar widths are relative
 * importance, connectors run to the matching axis. */
export function importanceStrip(fractions, axes, xOf) {
    const singles = fractions.filter((e) => e.subset.length === 1);
    const total = singles.reduce((s, e) => s + e.fraction, 0) || 1;
    const ordered = [...singles].sort((a, b) => b.fraction - a.fraction);
    const bars = [];
    let x = 0;
    for (const e of ordered) {
        const w = e.fraction / total;
        const axisIdx = axes.findIndex((a) => a.name === e.subset[0]);
        bars.push({ name: e.subset[0], width: w, x, axisX: axisIdx >= 0 ? xOf(axisIdx) : 0 });
        x += w;
    }
    return bars;
}
