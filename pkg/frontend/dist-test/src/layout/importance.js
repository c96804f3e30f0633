// UpSet-style matrix rows for the importance view: one row per measured
// subset, filled circles marking members, a connecting line for pairs,
// "fraction +/- std" labels, rows sorted by fraction descending.
export function layoutUpset(payload) {
    const columns = [];
    for (const e of payload.entries) {
        for (const name of e.subset) {
            if (!columns.includes(name))
                columns.push(name);
        }
    }
    const rows = [...payload.entries]
        .sort((a, b) => b.fraction - a.fraction)
        .map((e) => toRow(e, columns));
    return { columns, rows, warning: payload.warning };
}
function toRow(e, columns) {
    const idx = e.subset.map((name) => columns.indexOf(name)).sort((a, b) => a - b);
    return {
        subset: e.subset,
        fraction: e.fraction,
        std: e.std,
        label: `${e.fraction.toFixed(3)} ± ${e.std.toFixed(3)}`,
        memberIndices: idx,
        connector: idx.length > 1 ? [idx[0], idx[idx.length - 1]] : null,
    };
}
/** What detail the row selection opens: the 1-D line+band or the 2-D heatmap. */
export function detailKind(row) {
    return row.subset.length === 1 ? "line" : "heatmap";
}
