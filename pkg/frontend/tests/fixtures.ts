import type { GameState } from "../src/types.js";

// Column letters as the service reports them: A through S, I included.
export const COLUMNS = [..."ABCDEFGHIJKLMNOPQRS"];

const EMPTY_ROW = ".".repeat(19);

/** A plausible server payload with overridable fields. */
export function makeState(over: Partial<GameState> = {}): GameState {
  return {
    id: "g1",
    size: 19,
    history: ["J10"],
    board: Array.from({ length: 19 }, () => EMPTY_ROW),
    to_move: "white",
    status: { over: false, winner: null, winning_square: null, winning_stone: null },
    threats: { black: [], white: [] },
    case: "pending",
    frame: null,
    mode: "opening",
    last_engine_move: "J10",
    columns: COLUMNS,
    created: "2026-08-16T00:00:00Z",
    updated: "2026-08-16T00:00:00Z",
    ...over,
  };
}
