// Read-only visualizations: Kripke/graph pictures and feedback payloads.

import type { El } from "./dom.js";
import type { FeedbackItem, GraphJson, KripkeJson } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

type Positioned = { name: string; x: number; y: number };

function circleLayout(names: string[], radius: number, cx: number, cy: number): Positioned[] {
  if (names.length === 1) return [{ name: names[0], x: cx, y: cy }];
  return names.map((name, i) => {
    const angle = (2 * Math.PI * i) / names.length - Math.PI / 2;
    return { name, x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) };
  });
}

// A small node-and-edge picture; highlighted nodes get the given CSS class.
export function structurePicture(
  doc: Document,
  nodes: string[],
  edges: Array<[string, string]> | string[][],
  labels: Record<string, string[]>,
  options: {
    designated?: string | null;
    highlight?: Map<string, string>;
  } = {},
): SVGSVGElement {
  const size = 220;
  const svg = doc.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${size} ${size}`);
  svg.setAttribute("class", "structure");
  const defs = doc.createElementNS(SVG_NS, "defs");
  const marker = doc.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "arrow");
  marker.setAttribute("markerWidth", "8");
  marker.setAttribute("markerHeight", "8");
  marker.setAttribute("refX", "7");
  marker.setAttribute("refY", "3");
  marker.setAttribute("orient", "auto");
  const tip = doc.createElementNS(SVG_NS, "path");
  tip.setAttribute("d", "M0,0 L7,3 L0,6 z");
  marker.append(tip);
  defs.append(marker);
  svg.append(defs);

  const sorted = [...nodes].sort();
  const placed = circleLayout(sorted, size / 2 - 40, size / 2, size / 2);
  const at = new Map(placed.map((p) => [p.name, p]));
  for (const [from, to] of edges as Array<[string, string]>) {
    const a = at.get(from)!;
    const b = at.get(to)!;
    if (from === to) {
      const loop = doc.createElementNS(SVG_NS, "path");
      loop.setAttribute(
        "d",
        `M ${a.x - 8} ${a.y - 14} C ${a.x - 26} ${a.y - 44}, ${a.x + 26} ${a.y - 44}, ${a.x + 8} ${a.y - 14}`,
      );
      loop.setAttribute("class", "edge");
      loop.setAttribute("marker-end", "url(#arrow)");
      svg.append(loop);
      continue;
    }
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.hypot(dx, dy) || 1;
    const line = doc.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(a.x + (dx / len) * 16));
    line.setAttribute("y1", String(a.y + (dy / len) * 16));
    line.setAttribute("x2", String(b.x - (dx / len) * 18));
    line.setAttribute("y2", String(b.y - (dy / len) * 18));
    line.setAttribute("class", "edge");
    line.setAttribute("marker-end", "url(#arrow)");
    svg.append(line);
  }
  for (const p of placed) {
    const group = doc.createElementNS(SVG_NS, "g");
    const circle = doc.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(p.x));
    circle.setAttribute("cy", String(p.y));
    circle.setAttribute("r", "14");
    const highlightClass = options.highlight?.get(p.name) ?? "";
    circle.setAttribute(
      "class",
      `node ${p.name === options.designated ? "designated" : ""} ${highlightClass}`.trim(),
    );
    circle.setAttribute("data-node", p.name);
    const text = doc.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(p.x));
    text.setAttribute("y", String(p.y + 4));
    text.setAttribute("text-anchor", "middle");
    text.textContent = p.name;
    const tag = doc.createElementNS(SVG_NS, "text");
    tag.setAttribute("x", String(p.x));
    tag.setAttribute("y", String(p.y + 30));
    tag.setAttribute("text-anchor", "middle");
    tag.setAttribute("class", "labels");
    tag.textContent = (labels[p.name] ?? []).join(",");
    group.append(circle, text, tag);
    svg.append(group);
  }
  return svg;
}

export function kripkePicture(doc: Document, k: KripkeJson): SVGSVGElement {
  return structurePicture(doc, k.worlds, k.edges, k.labels, { designated: k.designated });
}

export function graphPicture(
  doc: Document,
  g: GraphJson,
  highlight?: Map<string, string>,
): SVGSVGElement {
  return structurePicture(doc, g.nodes, g.edges, g.colors, { highlight });
}

// ---- feedback rendering -----------------------------------------------------

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

export function renderFeedbackItem(doc: Document, el: El, item: FeedbackItem): HTMLElement {
  const body = el("div", { class: `feedback-item ${item.severity}`, "data-generator": item.generator });
  body.append(el("span", { class: "severity" }, item.severity), " ", item.message);
  const payload = item.payload;
  if (!isRecord(payload)) return body;

  // a formula position: underline the reported span
  if (typeof payload.formula === "string" && Array.isArray(payload.span)) {
    const [start, end] = payload.span as [number, number];
    const text = payload.formula;
    const line = el("div", { class: "formula-highlight" });
    line.append(text.slice(0, start), el("u", {}, text.slice(start, end)), text.slice(end));
    body.append(line);
  }

  // node-set diff: missing nodes outlined, wrongly selected nodes crossed
  if (Array.isArray(payload.missing) || Array.isArray(payload.extra)) {
    const diff = el("div", { class: "node-diff" });
    for (const name of (payload.missing as string[]) ?? []) {
      diff.append(el("span", { class: "missing-node", "data-node": String(name) }, String(name)));
    }
    for (const name of (payload.extra as string[]) ?? []) {
      diff.append(el("span", { class: "extra-node", "data-node": String(name) }, String(name)));
    }
    body.append(diff);
  }

  // a distinguishing interpretation
  if (isRecord(payload.witness)) {
    const witness = payload.witness;
    if (witness.kind === "valuation" && isRecord(witness.value)) {
      const table = el("table", { class: "valuation" });
      for (const [atom, value] of Object.entries(witness.value)) {
        table.append(el("tr", {}, el("td", {}, atom), el("td", {}, value ? "1" : "0")));
      }
      body.append(table);
    } else if (witness.kind === "kripke") {
      body.append(kripkePicture(doc, witness.value as KripkeJson));
    }
  }
  return body;
}
