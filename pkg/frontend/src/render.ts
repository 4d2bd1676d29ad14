// SVG rendering of one board layout.  Re-rendered from scratch after every
// confirmed move, so removed glyphs simply stop existing.

import type { BoardLayout, EdgeGlyph, VertexGlyph } from "./layout.js";
import type { WireMove } from "./types.js";
import { sameMove } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const VIEW = 440;

const SUBCAT_FILL: Record<string, string> = {
  A: "#1f77b4",
  B: "#2ca02c",
  C: "#7f7f7f",
};

export interface RenderOptions {
  clickable: boolean;
  highlight: WireMove[]; // advice overlay
  onMove: (move: WireMove) => void;
}

function el(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

function lobePath(points: { x: number; y: number }[]): string {
  // Closed curve through the member points, bulging outward a little.
  const cx = points.reduce((s, p) => s + p.x, 0) / points.length;
  const cy = points.reduce((s, p) => s + p.y, 0) / points.length;
  const parts = points.map((p, i) => {
    const q = points[(i + 1) % points.length];
    const mx = (p.x + q.x) / 2 + ((p.x + q.x) / 2 - cx) * 0.45;
    const my = (p.y + q.y) / 2 + ((p.y + q.y) / 2 - cy) * 0.45;
    return `Q ${mx} ${my} ${q.x} ${q.y}`;
  });
  return `M ${points[0].x} ${points[0].y} ${parts.join(" ")} Z`;
}

function edgeElement(edge: EdgeGlyph, outlineRadius: number): SVGElement {
  if (edge.kind === "outline") {
    return el("circle", {
      cx: "0", cy: "0", r: String(outlineRadius),
      class: "edge edge-outline",
    });
  }
  if (edge.kind === "lobe") {
    return el("path", { d: lobePath(edge.points), class: "edge edge-lobe" });
  }
  const [a, b] = edge.points;
  return el("line", {
    x1: String(a.x), y1: String(a.y), x2: String(b.x), y2: String(b.y),
    class: "edge edge-link",
  });
}

export function renderBoard(
  container: HTMLElement,
  layout: BoardLayout,
  options: RenderOptions,
): void {
  container.replaceChildren();
  const svg = el("svg", {
    viewBox: `${-VIEW / 2} ${-VIEW / 2} ${VIEW} ${VIEW}`,
    class: "board-svg",
  });

  for (const edge of layout.edges) {
    const move: WireMove = { type: "edge", members: edge.members };
    const node = edgeElement(edge, layout.outlineRadius);
    if (options.highlight.some((m) => sameMove(m, move))) {
      node.classList.add("winning");
    }
    if (options.clickable) {
      node.classList.add("clickable");
      node.addEventListener("click", () => options.onMove(move));
    }
    node.appendChild(titleFor(`edge {${edge.members.join(",")}}`));
    svg.appendChild(node);
  }

  for (const vertex of layout.vertices) {
    const move: WireMove = { type: "vertex", name: vertex.name };
    const group = el("g", { class: `vertex vertex-${vertex.kind}` });
    const circle = el("circle", {
      cx: String(vertex.x), cy: String(vertex.y), r: "14",
      fill: vertex.kind === "special"
        ? "#d62728"
        : SUBCAT_FILL[vertex.subcategory ?? ""] ?? "#444",
    });
    if (options.highlight.some((m) => sameMove(m, move))) {
      circle.classList.add("winning");
    }
    const label = el("text", {
      x: String(vertex.x), y: String(vertex.y + 5),
      "text-anchor": "middle", class: "vertex-label",
    });
    label.textContent = vertex.name;
    group.appendChild(circle);
    group.appendChild(label);
    if (options.clickable) {
      group.classList.add("clickable");
      group.addEventListener("click", () => options.onMove(move));
    }
    group.appendChild(titleFor(`vertex ${vertex.name}`));
    svg.appendChild(group);
  }

  container.appendChild(svg);
}

function titleFor(text: string): SVGElement {
  const title = document.createElementNS(SVG_NS, "title");
  title.textContent = text;
  return title;
}
