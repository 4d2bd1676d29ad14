// Board geometry, kept pure so it is unit-testable without a DOM.
//
// Convention: the special vertex sits at the center, the even-edge
// vertices on a ring around it; the even edge is drawn as an enclosing
// outline and each 3-edge as a lobe through the center.

import type { InstanceDoc, StructureReportPayload } from "./types.js";

export interface VertexGlyph {
  name: string;
  x: number;
  y: number;
  kind: "special" | "catx" | "other";
  subcategory: string | null;
}

export interface EdgeGlyph {
  members: string[]; // sorted
  kind: "outline" | "lobe" | "link";
  points: { x: number; y: number }[];
}

export interface BoardLayout {
  vertices: VertexGlyph[];
  edges: EdgeGlyph[];
  outlineRadius: number;
}

export const RING_RADIUS = 120;
export const OUTLINE_RADIUS = 150;
export const OUTER_RADIUS = 200;

function onCircle(index: number, count: number, radius: number) {
  const angle = (2 * Math.PI * index) / Math.max(count, 1) - Math.PI / 2;
  return { x: radius * Math.cos(angle), y: radius * Math.sin(angle) };
}

export function layoutBoard(
  position: InstanceDoc,
  report: StructureReportPayload | null,
): BoardLayout {
  const special = report?.special_vertex ?? null;
  const catx = new Set(report?.cat_x_edge ?? []);
  const coords = new Map<string, { x: number; y: number }>();
  const vertices: VertexGlyph[] = [];

  const ring = position.vertices.filter((v) => catx.has(v));
  const others = position.vertices.filter((v) => v !== special && !catx.has(v));

  // With no classification everything except the special vertex rings.
  const ringNames = ring.length > 0 ? ring : others.splice(0, others.length);

  ringNames.forEach((name, i) => {
    const p = onCircle(i, ringNames.length, RING_RADIUS);
    coords.set(name, p);
    vertices.push({
      name,
      ...p,
      kind: catx.has(name) ? "catx" : "other",
      subcategory: report?.subcategories[name] ?? null,
    });
  });
  if (special !== null && position.vertices.includes(special)) {
    coords.set(special, { x: 0, y: 0 });
    vertices.push({ name: special, x: 0, y: 0, kind: "special", subcategory: null });
  }
  others.forEach((name, i) => {
    const p = onCircle(i, others.length, OUTER_RADIUS);
    coords.set(name, p);
    vertices.push({ name, ...p, kind: "other", subcategory: null });
  });

  const catxEdge = report?.cat_x_edge ? [...report.cat_x_edge].sort() : null;
  const edges: EdgeGlyph[] = position.edges.map((edge) => {
    const members = [...edge].sort();
    const points = members.map((v) => coords.get(v)!);
    if (catxEdge && members.length === catxEdge.length &&
        members.every((v, i) => v === catxEdge[i])) {
      return { members, kind: "outline" as const, points };
    }
    return {
      members,
      kind: members.length >= 3 ? ("lobe" as const) : ("link" as const),
      points,
    };
  });

  return { vertices, edges, outlineRadius: OUTLINE_RADIUS };
}
