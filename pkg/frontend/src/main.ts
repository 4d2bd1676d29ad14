// Application wiring: catalog picker, board, structure panel, advice
// overlay and game log.  All state lives on the server; we only mirror it.

import { ApiClient, ApiError } from "./api.js";
import { CATALOG } from "./catalog.js";
import { layoutBoard } from "./layout.js";
import { renderBoard } from "./render.js";
import type {
  GrundyPayload,
  InstanceDoc,
  StructureReportPayload,
  WireMove,
} from "./types.js";
import { moveLabel } from "./types.js";

const api = new ApiClient("");

interface AppState {
  sessionId: string | null;
  position: InstanceDoc | null;
  report: StructureReportPayload | null;
  grundy: GrundyPayload | null;
  gameOver: boolean;
  winner: string | null;
  adviceOn: boolean;
  adviceMoves: WireMove[];
  busy: boolean; // one in-flight move at a time
}

const state: AppState = {
  sessionId: null,
  position: null,
  report: null,
  grundy: null,
  gameOver: false,
  winner: null,
  adviceOn: false,
  adviceMoves: [],
  busy: false,
};

function $(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function showBanner(text: string | null): void {
  const banner = $("banner");
  banner.textContent = text ?? "";
  banner.classList.toggle("hidden", text === null);
}

function log(text: string): void {
  const item = document.createElement("li");
  item.textContent = text;
  $("log").appendChild(item);
}

function describeGroup(report: StructureReportPayload): string {
  if (report.group === "BC") return "outside paper taxonomy (BC shape)";
  if (report.group === "NonConforming") return "non-conforming";
  return `group ${report.group}`;
}

function redraw(): void {
  if (!state.position) return;
  renderBoard($("board"), layoutBoard(state.position, state.report), {
    clickable: !state.gameOver && !state.busy,
    highlight: state.adviceOn ? state.adviceMoves : [],
    onMove: (move) => void submitMove(move),
  });

  const status = $("status");
  if (state.gameOver) {
    status.textContent = `game over: ${state.winner ?? "?"} wins`;
  } else if (state.adviceOn && state.adviceMoves.length === 0) {
    status.textContent = "losing position (no winning move)";
  } else {
    status.textContent = `position value g = ${state.grundy?.value ?? "?"}`;
  }
}

function renderStructurePanel(report: StructureReportPayload,
                              prediction: { value: number | null; source: string }): void {
  const lines = [`${describeGroup(report)}`];
  if (report.special_vertex) lines.push(`special vertex: ${report.special_vertex}`);
  const byCat = new Map<string, string[]>();
  for (const [v, c] of Object.entries(report.subcategories)) {
    byCat.set(c, [...(byCat.get(c) ?? []), v]);
  }
  for (const c of ["A", "B", "C"]) {
    if (byCat.has(c)) lines.push(`subcategory ${c}: ${byCat.get(c)!.sort().join(", ")}`);
  }
  for (const v of report.violations) lines.push(`violation: ${v}`);
  lines.push(prediction.value === null
    ? `prediction: none (${prediction.source})`
    : `predicted g = ${prediction.value} (${prediction.source})`);
  $("structure").replaceChildren(
    ...lines.map((text) => {
      const li = document.createElement("li");
      li.textContent = text;
      return li;
    }));
}

async function refreshAdvice(): Promise<void> {
  if (!state.sessionId || !state.adviceOn || state.gameOver) {
    state.adviceMoves = [];
    return;
  }
  const advice = await api.advice(state.sessionId);
  state.adviceMoves = advice.winning_moves;
}

async function newGame(instance: InstanceDoc): Promise<void> {
  showBanner(null);
  try {
    const created = await api.newGame(instance);
    state.sessionId = created.session_id;
    state.position = created.position;
    state.report = created.structure_report;
    state.grundy = created.grundy;
    state.gameOver = created.position.vertices.length === 0;
    state.winner = null;
    $("log").replaceChildren();
    renderStructurePanel(created.structure_report, created.prediction);
    log(`new game: g = ${created.grundy.value}`);
    await refreshAdvice();
    redraw();
  } catch (err) {
    showBanner(err instanceof ApiError ? `${err.errorCode}: ${err.message}` : String(err));
  }
}

async function submitMove(move: WireMove): Promise<void> {
  if (!state.sessionId || state.busy || state.gameOver) return;
  state.busy = true;
  redraw();
  try {
    const result = await api.submitMove(state.sessionId, move);
    log(`you: ${moveLabel(move)}`);
    if (result.engine_reply) log(`engine: ${moveLabel(result.engine_reply)}`);
    state.position = result.position;
    state.grundy = result.grundy;
    state.gameOver = result.game_over;
    state.winner = result.winner;
    if (result.game_over) log(`game over: ${result.winner} wins`);
    await refreshAdvice();
  } catch (err) {
    if (err instanceof ApiError && err.errorCode === "illegal_move") {
      showBanner(`illegal move: ${err.message}`);
    } else {
      showBanner(err instanceof ApiError ? `${err.errorCode}: ${err.message}` : String(err));
    }
  } finally {
    state.busy = false;
    redraw();
  }
}

function init(): void {
  const picker = $("catalog") as HTMLSelectElement;
  CATALOG.forEach((entry, i) => {
    const option = document.createElement("option");
    option.value = String(i);
    option.textContent = entry.label;
    picker.appendChild(option);
  });

  $("new-game").addEventListener("click", () => {
    void newGame(CATALOG[Number(picker.value)].instance);
  });

  $("load-custom").addEventListener("click", () => {
    const text = ($("custom-instance") as HTMLTextAreaElement).value;
    try {
      void newGame(JSON.parse(text) as InstanceDoc);
    } catch {
      showBanner("malformed: instance is not valid JSON");
    }
  });

  ($("advice-toggle") as HTMLInputElement).addEventListener("change", (event) => {
    state.adviceOn = (event.target as HTMLInputElement).checked;
    void refreshAdvice().then(redraw);
  });

  void newGame(CATALOG[0].instance);
}

init();
