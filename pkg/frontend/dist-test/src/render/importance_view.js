// Hyperparameter importance view: UpSet-style matrix plus the selected
// row's detail (1-D line with std band, or 2-D heatmap).
import { detailKind, layoutUpset } from "../layout/importance.js";
import { darknessColor, polylinePath, svgEl } from "./svg.js";
const W = 320;
const ROW_H = 22;
const COL_W = 26;
const LEFT = 120;
export function renderUpset(doc, payload, onSelect) {
    const layout = layoutUpset(payload);
    const height = 30 + layout.rows.length * ROW_H;
    const svg = svgEl(doc, "svg", { viewBox: `0 0 ${W} ${height}`, class: "upset-plot", width: "100%" });
    if (layout.warning) {
        svg.appendChild(svgEl(doc, "text", { x: 4, y: 12, class: "warning" }, `unreliable: ${layout.warning}`));
    }
    layout.columns.forEach((name, c) => {
        svg.appendChild(svgEl(doc, "text", {
            x: LEFT + c * COL_W + COL_W / 2, y: 24, class: "upset-col-label",
            "text-anchor": "middle",
        }, name.length > 6 ? name.slice(0, 6) : name));
    });
    layout.rows.forEach((row, r) => {
        const y = 30 + r * ROW_H + ROW_H / 2;
        const g = svgEl(doc, "g", { class: "upset-row", "data-subset": row.subset.join("+") });
        if (onSelect && g.addEventListener) {
            g.addEventListener("click", () => onSelect(row));
        }
        g.appendChild(svgEl(doc, "rect", {
            x: 0, y: y - ROW_H / 2, width: W, height: ROW_H, class: "upset-row-bg",
            fill: r % 2 ? "#f6f6f6" : "#ffffff",
        }));
        g.appendChild(svgEl(doc, "text", { x: 4, y: y + 4, class: "upset-value" }, row.label));
        if (row.connector) {
            g.appendChild(svgEl(doc, "line", {
                x1: LEFT + row.connector[0] * COL_W + COL_W / 2, y1: y,
                x2: LEFT + row.connector[1] * COL_W + COL_W / 2, y2: y,
                stroke: "#333", "stroke-width": 2, class: "upset-connector",
            }));
        }
        layout.columns.forEach((_, c) => {
            const member = row.memberIndices.includes(c);
            g.appendChild(svgEl(doc, "circle", {
                cx: LEFT + c * COL_W + COL_W / 2, cy: y, r: 6,
                fill: member ? "#333" : "#ddd",
                class: member ? "upset-dot member" : "upset-dot",
            }));
        });
        svg.appendChild(g);
    });
    return svg;
}
const DH = 180;
const DPAD = { left: 46, right: 10, top: 10, bottom: 26 };
export function renderMarginalDetail(doc, payload) {
    const svg = svgEl(doc, "svg", { viewBox: `0 0 ${W} ${DH}`, class: "marginal-detail", width: "100%" });
    if (payload.params.length === 2) {
        return renderHeatmap(doc, payload);
    }
    const grid = payload.grid;
    const mean = payload.mean;
    const std = payload.std;
    const lo = Math.min(...mean.map((m, i) => m - std[i]));
    const hi = Math.max(...mean.map((m, i) => m + std[i]));
    const sx = (t) => DPAD.left + t * (W - DPAD.left - DPAD.right);
    const sy = (v) => DPAD.top
        + (1 - (hi === lo ? 0.5 : (v - lo) / (hi - lo))) * (DH - DPAD.top - DPAD.bottom);
    const bandPts = [
        ...grid.map((g, i) => `${i === 0 ? "M" : "L"} ${sx(g)} ${sy(mean[i] + std[i])}`),
        ...[...grid].reverse().map((g, j) => {
            const i = grid.length - 1 - j;
            return `L ${sx(g)} ${sy(mean[i] - std[i])}`;
        }),
        "Z",
    ].join(" ");
    // the std band: green interval around the estimate
    svg.appendChild(svgEl(doc, "path", { d: bandPts, fill: "#a9d3ab", opacity: 0.6, class: "std-band" }));
    svg.appendChild(svgEl(doc, "path", {
        d: polylinePath(grid.map((g, i) => ({ x: sx(g), y: sy(mean[i]) }))),
        fill: "none", stroke: "#2a6f2e", "stroke-width": 1.6, class: "marginal-line",
    }));
    svg.appendChild(svgEl(doc, "text", { x: W / 2, y: DH - 6, class: "axis-label", "text-anchor": "middle" }, payload.params[0]));
    return svg;
}
function renderHeatmap(doc, payload) {
    const svg = svgEl(doc, "svg", { viewBox: `0 0 ${W} ${DH}`, class: "marginal-heatmap", width: "100%" });
    const [ga, gb] = payload.grid;
    const mean = payload.mean;
    const lo = Math.min(...mean);
    const hi = Math.max(...mean);
    const cw = (W - DPAD.left - DPAD.right) / ga.length;
    const ch = (DH - DPAD.top - DPAD.bottom) / gb.length;
    ga.forEach((_, i) => {
        gb.forEach((_, j) => {
            const v = mean[i * gb.length + j];
            const t = hi === lo ? 0.5 : (v - lo) / (hi - lo);
            svg.appendChild(svgEl(doc, "rect", {
                x: DPAD.left + i * cw, y: DPAD.top + (gb.length - 1 - j) * ch,
                width: cw + 0.5, height: ch + 0.5, fill: darknessColor(t), class: "heat-cell",
            }));
        });
    });
    svg.appendChild(svgEl(doc, "text", { x: W / 2, y: DH - 6, class: "axis-label", "text-anchor": "middle" }, `${payload.params[0]} vs ${payload.params[1]}`));
    return svg;
}
export { detailKind };
