// Wire types for the take-away game service.

export interface InstanceDoc {
  vertices: string[];
  edges: string[][];
}

export type WireMove =
  | { type: "vertex"; name: string }
  | { type: "edge"; members: string[] };

export interface GrundyPayload {
  value: number;
  options: { move: WireMove; value: number }[];
  winning_moves: WireMove[];
}

export interface StructureReportPayload {
  group: string;
  special_vertex: string | null;
  cat_x_edge: string[] | null;
  cat_y_edges: string[][];
  subcategories: Record<string, string>;
  cat_y_degree: Record<string, number>;
  n_vertices: number;
  n_edges: number;
  violations: string[];
}

export interface NewGameResponse {
  session_id: string;
  position: InstanceDoc;
  structure_report: StructureReportPayload;
  prediction: { value: number | null; source: string };
  grundy: GrundyPayload;
  to_move: string | null;
}

export interface HistoryEntry {
  mover: string;
  move: WireMove;
}

export interface GameStateResponse {
  session_id: string;
  position: InstanceDoc;
  history: HistoryEntry[];
  grundy: GrundyPayload;
  to_move: string | null;
  game_over: boolean;
  winner: string | null;
}

export interface MoveResponse {
  move: WireMove;
  engine_reply: WireMove | null;
  position: InstanceDoc;
  grundy: GrundyPayload;
  to_move: string | null;
  game_over: boolean;
  winner: string | null;
}

export interface AdviceResponse {
  value: number;
  winning_moves: WireMove[];
}

export interface ApiErrorBody {
  error_code: string;
  message: string;
}

export function sameMove(a: WireMove, b: WireMove): boolean {
  if (a.type === "vertex" && b.type === "vertex") return a.name === b.name;
  if (a.type === "edge" && b.type === "edge") {
    const x = [...a.members].sort();
    const y = [...b.members].sort();
    return x.length === y.length && x.every((v, i) => v === y[i]);
  }
  return false;
}

export function moveLabel(m: WireMove): string {
  return m.type === "vertex"
    ? `remove vertex ${m.name}`
    : `remove edge {${[...m.members].sort().join(",")}}`;
}
