// Learning-curve series for the model analysis view: raw or smoothed points
// (the moving average is computed server-side so every surface agrees), with
// area-zoom windowing on the client.
export function curveSeries(trialRef, payload, useSmoothed) {
    const source = useSmoothed && payload.smoothed ? payload.smoothed : payload.points;
    return { trialRef, points: source.map(([step, value]) => ({ step, value })) };
}
export function zoomed(series, window) {
    if (!window)
        return series;
    return {
        trialRef: series.trialRef,
        points: series.points.filter((p) => p.step >= window.step0 && p.step <= window.step1),
    };
}
export function bounds(all) {
    const xs = all.flatMap((s) => s.points.map((p) => p.step));
    const ys = all.flatMap((s) => s.points.map((p) => p.value));
    if (xs.length === 0)
        return { x: [0, 1], y: [0, 1] };
    return { x: [Math.min(...xs), Math.max(...xs)], y: [Math.min(...ys), Math.max(...ys)] };
}
