// Circular board view. Wedge angles are proportional to slice size with a
// floor so zero slices stay visible and clickable; ownership colors, legal
// highlights, last-move marker and shift/jump badges come straight from the
// session payload. All numbers shown are the service's exact strings.

import { fractionToNumber } from "./fraction.js";
import type { AnalysisView, SessionView } from "./types.js";
import { h, VNode } from "./view.js";

export interface BoardHandlers {
  onSelect: (index: number) => void;
}

const TAU = Math.PI * 2;
const MIN_WEDGE = TAU / 72; // visual floor for zero-size slices
const R = 150;
const CX = 170;
const CY = 170;

interface WedgeGeometry {
  index: number;
  start: number;
  end: number;
}

export function wedgeAngles(sizes: number[]): WedgeGeometry[] {
  const n = sizes.length;
  const floored = sizes.map((s) => (s > 0 ? 0 : MIN_WEDGE));
  const reserved = floored.reduce((a, b) => a + b, 0);
  const totalSize = sizes.reduce((a, b) => a + b, 0);
  const scale = totalSize > 0 ? (TAU - reserved) / totalSize : 0;
  const fallback = totalSize > 0 ? 0 : TAU / n;
  let angle = -Math.PI / 2; // 12 o'clock, clockwise
  const out: WedgeGeometry[] = [];
  for (let i = 0; i < n; i++) {
    const span = sizes[i] > 0 ? sizes[i] * scale : Math.max(MIN_WEDGE, fallback);
    out.push({ index: i, start: angle, end: angle + span });
    angle += span;
  }
  return out;
}

function wedgePath(start: number, end: number): string {
  const x1 = CX + R * Math.cos(start);
  const y1 = CY + R * Math.sin(start);
  const x2 = CX + R * Math.cos(end);
  const y2 = CY + R * Math.sin(end);
  const large = end - start > Math.PI ? 1 : 0;
  return `M ${CX} ${CY} L ${x1.toFixed(2)} ${y1.toFixed(2)} A ${R} ${R} 0 ${large} 1 ${x2.toFixed(2)} ${y2.toFixed(2)} Z`;
}

function ownerOf(session: SessionView, index: number): "alice" | "bob" | null {
  for (const move of session.history) {
    if (move.index === index) return move.player;
  }
  return null;
}

export function buildBoard(
  session: SessionView,
  analysis: AnalysisView | null,
  handlers: BoardHandlers,
): VNode {
  const sizes = session.cutting.map(fractionToNumber);
  const legal = new Set(
    session.status === "awaiting-human" ? session.position.legal_moves : [],
  );
  const values = new Map(
    (analysis?.moves ?? []).map((m) => [m.index, m]),
  );
  const lastMove = session.history[session.history.length - 1];
  const wedges: VNode[] = [];
  for (const geo of wedgeAngles(sizes)) {
    const owner = ownerOf(session, geo.index);
    const classes = ["wedge"];
    if (owner) classes.push(`taken-${owner}`);
    else classes.push("remaining");
    if (legal.has(geo.index)) classes.push("legal");
    if (lastMove && lastMove.index === geo.index) classes.push("last-move");
    const info = values.get(geo.index);
    const on: Record<string, (event?: unknown) => void> = {};
    if (legal.has(geo.index)) {
      on.click = () => handlers.onSelect(geo.index);
    }
    const title = info
      ? `slice ${geo.index}: take for ${info.value} (${info.kind}${info.optimal ? ", optimal" : ""})`
      : `slice ${geo.index}`;
    wedges.push(
      h(
        "path",
        {
          class: classes.join(" "),
          d: wedgePath(geo.start, geo.end),
          "data-index": String(geo.index),
          "data-value": info ? info.value : "",
        },
        [h("title", {}, [title])],
        on,
      ),
    );
    const mid = (geo.start + geo.end) / 2;
    const lx = CX + R * 0.72 * Math.cos(mid);
    const ly = CY + R * 0.72 * Math.sin(mid);
    wedges.push(
      h(
        "text",
        {
          class: "slice-label",
          x: lx.toFixed(1),
          y: ly.toFixed(1),
          "text-anchor": "middle",
        },
        [session.cutting[geo.index]],
      ),
    );
  }
  const badges: VNode[] = [];
  if (lastMove && lastMove.kind !== "first") {
    badges.push(
      h("div", { class: `move-badge kind-${lastMove.kind}` }, [
        `${lastMove.player} took slice ${lastMove.index}: ${lastMove.kind}`,
      ]),
    );
  }
  return h("div", { class: "board" }, [
    h(
      "svg",
      { viewBox: "0 0 340 340", class: "pizza", role: "img" },
      wedges,
    ),
    ...badges,
    buildScore(session),
  ]);
}

export function buildScore(session: SessionView): VNode {
  const label =
    session.status === "finished"
      ? "final"
      : `turn ${session.position.turn_number}, ${session.position.to_move} to move`;
  return h("div", { class: "score" }, [
    h("span", { class: "score-alice" }, [`alice: ${session.gains.alice}`]),
    h("span", { class: "score-bob" }, [`bob: ${session.gains.bob}`]),
    h("span", { class: "score-total" }, [`of ${session.total}`]),
    h("span", { class: "score-status" }, [label]),
  ]);
}

export function buildHistory(session: SessionView): VNode {
  return h(
    "ol",
    { class: "history" },
    session.history.map((m) =>
      h("li", { class: `history-${m.player} kind-${m.kind}` }, [
        `#${m.turn} ${m.player} takes ${m.index} (${m.kind}, ${m.size})`,
      ]),
    ),
  );
}
