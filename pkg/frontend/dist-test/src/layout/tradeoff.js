// Trade-off scatter: Pareto-front points emphasized, dominated points grey,
// plus histogram geometry for the overview's per-metric distributions.
export function layoutTradeoff(payload) {
    if (payload.points.length === 0) {
        return { points: [], frontPolyline: [], xRange: [0, 1], yRange: [0, 1] };
    }
    const xs = payload.points.map((p) => p.x);
    const ys = payload.points.map((p) => p.y);
    const xlo = Math.min(...xs), xhi = Math.max(...xs);
    const ylo = Math.min(...ys), yhi = Math.max(...ys);
    const sx = (v) => (xhi === xlo ? 0.5 : (v - xlo) / (xhi - xlo));
    const sy = (v) => (yhi === ylo ? 0.5 : (v - ylo) / (yhi - ylo));
    const points = payload.points.map((p) => ({
        trialId: p.trial_id,
        processId: p.process_id,
        x: sx(p.x),
        y: sy(p.y),
        onFront: p.on_front,
    }));
    const frontPolyline = points.filter((p) => p.onFront).sort((a, b) => a.x - b.x);
    return { points, frontPolyline, xRange: [xlo, xhi], yRange: [ylo, yhi] };
}
export function layoutHistogram(hist) {
    const lo = hist.edges[0];
    const hi = hist.edges[hist.edges.length - 1];
    const span = hi - lo || 1;
    const peak = Math.max(...hist.counts, 1);
    return hist.counts.map((count, i) => ({
        x0: (hist.edges[i] - lo) / span,
        x1: (hist.edges[i + 1] - lo) / span,
        height: count / peak,
        count,
    }));
}
