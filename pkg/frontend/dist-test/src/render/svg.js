// Minimal SVG/DOM building helpers against a narrow document interface so
// views render identically in the browser and under the test stub.
export const SVG_NS = "http://www.w3.org/2000/svg";
export function svgEl(doc, tag, attrs = {}, text) {
    const el = doc.createElementNS(SVG_NS, tag);
    for (const [k, v] of Object.entries(attrs))
        el.setAttribute(k, String(v));
    if (text !== undefined)
        el.textContent = text;
    return el;
}
export function htmlEl(doc, tag, attrs = {}, text) {
    const el = doc.createElement(tag);
    for (const [k, v] of Object.entries(attrs))
        el.setAttribute(k, v);
    if (text !== undefined)
        el.textContent = text;
    return el;
}
/** Objective darkness -> fill color (light grey to near-black blue). */
export function darknessColor(d) {
    const level = Math.round(225 - 195 * Math.min(Math.max(d, 0), 1));
    return `rgb(${level},${level + 10},${Math.min(level + 30, 255)})`;
}
export function curvePath(x0, y0, x1, y1) {
    const mx = (x0 + x1) / 2;
    return `M ${x0} ${y0} C ${mx} ${y0}, ${mx} ${y1}, ${x1} ${y1}`;
}
export function polylinePath(pts) {
    return pts.map((p, i) => `${i === 0 ? "M" : "L"} ${p.x} ${p.y}`).join(" ");
}
