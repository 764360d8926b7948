import { describe, expect, it, vi } from "vitest";

import { buildBoard, buildScore, wedgeAngles } from "../src/board.js";
import type { SessionView } from "../src/types.js";
import { findAll, findByClass, textOf } from "../src/view.js";

import fixture from "./fixtures/p15_replay.json";

const created = fixture.created as unknown as SessionView;
const afterFirst = fixture.steps[0].session as unknown as SessionView;
const finished = fixture.steps[fixture.steps.length - 1]
  .session as unknown as SessionView;

function wedges(tree: ReturnType<typeof buildBoard>) {
  return findAll(tree, (n) => n.tag === "path");
}

describe("wedge geometry", () => {
  it("gives every slice positive width, zeros at the visual floor", () => {
    const geo = wedgeAngles([1, 0, 2, 0]);
    expect(geo).toHaveLength(4);
    for (const w of geo) expect(w.end).toBeGreaterThan(w.start);
    const zero = geo[1].end - geo[1].start;
    const two = geo[2].end - geo[2].start;
    expect(two).toBeGreaterThan(zero);
    const total = geo.reduce((a, w) => a + (w.end - w.start), 0);
    expect(total).toBeCloseTo(Math.PI * 2, 9);
  });

  it("handles the all-zero cutting", () => {
    const geo = wedgeAngles([0, 0, 0]);
    const total = geo.reduce((a, w) => a + (w.end - w.start), 0);
    expect(total).toBeCloseTo(Math.PI * 2, 9);
  });
});

describe("board rendering", () => {
  it("only legal wedges are clickable and report their index", () => {
    const seen: number[] = [];
    const tree = buildBoard(created, null, { onSelect: (i) => seen.push(i) });
    const legal = new Set(created.position.legal_moves);
    for (const wedge of wedges(tree)) {
      const index = Number(wedge.attrs["data-index"]);
      if (legal.has(index)) {
        expect(wedge.on.click).toBeDefined();
        wedge.on.click!();
      } else {
        expect(wedge.on.click).toBeUndefined();
      }
    }
    expect(seen.sort((a, b) => a - b)).toEqual([...legal].sort((a, b) => a - b));
  });

  it("renders the engine's move as taken", () => {
    const tree = buildBoard(afterFirst, null, { onSelect: vi.fn() });
    const engineMoves = afterFirst.history.filter((m) => m.player === "alice");
    expect(engineMoves.length).toBeGreaterThan(0);
    for (const move of engineMoves) {
      const wedge = wedges(tree).find(
        (w) => Number(w.attrs["data-index"]) === move.index,
      )!;
      expect(wedge.attrs.class).toContain("taken-alice");
      expect(wedge.on.click).toBeUndefined();
    }
  });

  it("no wedge is clickable once the game is finished", () => {
    const tree = buildBoard(finished, null, { onSelect: vi.fn() });
    for (const wedge of wedges(tree)) {
      expect(wedge.on.click).toBeUndefined();
    }
  });

  it("shows the exact payload fractions in the score panel", () => {
    const score = buildScore(finished);
    const text = textOf(score);
    expect(text).toContain(`alice: ${finished.gains.alice}`);
    expect(text).toContain(`bob: ${finished.gains.bob}`);
    expect(text).toContain(`of ${finished.total}`);
  });

  it("slice labels are the exact size strings", () => {
    const tree = buildBoard(created, null, { onSelect: vi.fn() });
    const labels = findByClass(tree, "slice-label").map(textOf);
    expect(labels).toEqual(created.cutting);
    expect(labels).toContain("3/2"); // exact rational, never 1.5
  });

  it("exposes exact move values from the analysis payload", () => {
    const analysis = fixture.created_analysis;
    const tree = buildBoard(created, analysis as never, { onSelect: vi.fn() });
    for (const move of analysis.moves) {
      const wedge = wedges(tree).find(
        (w) => Number(w.attrs["data-index"]) === move.index,
      )!;
      expect(wedge.attrs["data-value"]).toBe(move.value);
    }
  });

  it("marks the last move and its kind", () => {
    const tree = buildBoard(afterFirst, null, { onSelect: vi.fn() });
    const last = afterFirst.history[afterFirst.history.length - 1];
    const marked = wedges(tree).filter((w) =>
      w.attrs.class.includes("last-move"),
    );
    expect(marked).toHaveLength(1);
    expect(Number(marked[0].attrs["data-index"])).toBe(last.index);
  });
});
