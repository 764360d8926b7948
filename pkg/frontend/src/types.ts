// Wire contract of the game service. Field names are stable; exact values
// travel as "num/den" strings and the client never recomputes them.

export interface PositionView {
  turn_number: number;
  to_move: "alice" | "bob" | null;
  remaining_start: number | null;
  remaining_length: number;
  last_taken_end: "left" | "right" | null;
  legal_moves: number[];
}

export interface HistoryMove {
  turn: number;
  player: "alice" | "bob";
  index: number;
  kind: "first" | "shift" | "jump";
  size: string;
}

export type SessionStatus = "awaiting-human" | "awaiting-engine" | "finished";

export interface SessionView {
  id: string;
  cutting: string[];
  n: number;
  total: string;
  engine: string;
  human_side: "alice" | "bob";
  status: SessionStatus;
  position: PositionView;
  history: HistoryMove[];
  gains: { alice: string; bob: string };
  gains_decimal: { alice: number; bob: number };
}

export interface MoveAnalysis {
  index: number;
  kind: "first" | "shift" | "jump";
  value: string;
  value_decimal: number;
  optimal: boolean;
}

export interface AnalysisView {
  id: string;
  status: SessionStatus;
  turn_number?: number;
  to_move?: "alice" | "bob";
  moves: MoveAnalysis[];
  gains: { alice: string; bob: string };
  potentials?: { per_slice: string[]; cycle_potential: string };
}

export interface EngineInfo {
  name: string;
  plays: "alice" | "bob" | "both";
}

export interface FamilyParamInfo {
  name: string;
  kind: "rational" | "int";
  default: string;
  min: string | null;
  max: string | null;
}

export interface FamilyInfo {
  name: string;
  summary: string;
  params: FamilyParamInfo[];
}

export interface CreateGameRequest {
  cutting?: string;
  family?: string;
  params?: Record<string, string>;
  engine: string;
  engine_params?: Record<string, string>;
  human_side: "alice" | "bob";
}
