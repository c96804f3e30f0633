// Axis scales: native values -> [0, 1] positions, honoring log axes and
// categorical index placement.
export function makeScale(axis) {
    if (axis.kind === "categorical" && axis.choices) {
        const choices = axis.choices;
        return {
            axis,
            position(value) {
                if (value === null)
                    return null;
                const idx = typeof value === "number" ? value : choices.indexOf(value);
                if (idx < 0)
                    return null;
                return (idx + 0.5) / choices.length;
            },
            ticks() {
                return choices.map((c, i) => ({ t: (i + 0.5) / choices.length, label: c }));
            },
        };
    }
    const low = axis.low ?? 0;
    const high = axis.high ?? 1;
    const log = axis.scale === "log";
    const lo = log ? Math.log(low) : low;
    const hi = log ? Math.log(high) : high;
    return {
        axis,
        position(value) {
            if (value === null || typeof value === "string")
                return null;
            const v = log ? Math.log(value) : value;
            if (hi === lo)
                return 0.5;
            return Math.min(Math.max((v - lo) / (hi - lo), 0), 1);
        },
        ticks(n = 5) {
            const out = [];
            for (let i = 0; i < n; i++) {
                const t = i / (n - 1);
                const v = log ? Math.exp(lo + t * (hi - lo)) : lo + t * (hi - lo);
                out.push({ t, label: formatNumber(v) });
            }
            return out;
        },
    };
}
export function formatNumber(v) {
    if (v === 0)
        return "0";
    const a = Math.abs(v);
    if (a >= 0.01 && a < 10000)
        return v.toPrecision(3).replace(/\.?0+$/, "");
    return v.toExponential(1);
}
/** Objective -> [0, 1] darkness within a user-adjustable color domain. */
export function colorScale(domain) {
    return (objective) => {
        if (objective === null)
            return 0;
        if (domain.max === domain.min)
            return 0.5;
        return Math.min(Math.max((objective - domain.min) / (domain.max - domain.min), 0), 1);
    };
}
