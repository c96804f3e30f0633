// Minimal SVG/DOM building helpers against a narrow document interface so
// views render identically in the browser and under the test stub.

export interface ElementLike {
  setAttribute(name: string, value: string): void;
  appendChild(child: ElementLike): ElementLike;
  addEventListener?(type: string, handler: (ev: unknown) => void): void;
  textContent: string | null;
  innerHTML?: string;
  remove?(): void;
}

export interface DocLike {
  createElementNS(ns: string, tag: string): ElementLike;
  createElement(tag: string): ElementLike;
}

export const SVG_NS = "http://www.w3.org/2000/svg";

export function svgEl(doc: DocLike, tag: string,
                      attrs: Record<string, string | number> = {},
                      text?: string): ElementLike {
  const el = doc.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, String(v));
  if (text !== undefined) el.textContent = text;
  return el;
}

export function htmlEl(doc: DocLike, tag: string,
                       attrs: Record<string, string> = {},
                       text?: string): ElementLike {
  const el = doc.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v);
  if (text !== undefined) el.textContent = text;
  return el;
}

/** Objective darkness -> fill color (light grey to near-black blue). */
export function darknessColor(d: number): string {
  const level = Math.round(225 - 195 * Math.min(Math.max(d, 0), 1));
  return `rgb(${level},${level + 10},${Math.min(level + 30, 255)})`;
}

export function curvePath(x0: number, y0: number, x1: number, y1: number): string {
  const mx = (x0 + x1) / 2;
  return `M ${x0} ${y0} C ${mx} ${y0}, ${mx} ${y1}, ${x1} ${y1}`;
}

export function polylinePath(pts: { x: number; y: number }[]): string {
  return pts.map((p, i) => `${i === 0 ? "M" : "L"} ${p.x} ${p.y}`).join(" ");
}
