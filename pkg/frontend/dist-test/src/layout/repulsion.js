// Deterministic jitter for overlapping categorical points: seeded by trial
// id so repeated renders (and screenshots) are identical.
function mulberry32(seed) {
    let a = seed >>> 0;
    return () => {
        a = (a + 0x6d2b79f5) >>> 0;
        let t = a;
        t = Math.imul(t ^ (t >>> 15), t | 1);
        t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
        return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
    };
}
/** Spread amplitude is half a category bin; points never leave their bin. */
export function categoricalJitter(trialId, binWidth) {
    const rng = mulberry32(trialId * 2654435761 + 97);
    return (rng() - 0.5) * binWidth * 0.6;
}
