// Shapes returned by the game service. The UI treats the server as
// authoritative and never derives threats or game results itself.

export interface GameStatus {
  over: boolean;
  winner: "black" | "white" | null;
  winning_square: string[] | null;
  winning_stone: number | null;
}

export interface Threats {
  black: string[];
  white: string[];
}

export type CaseName = "pending" | "in-W" | "out-of-W";

export interface GameState {
  id: string;
  size: number;
  history: string[];
  board: string[];
  to_move: "black" | "white" | null;
  status: GameStatus;
  threats: Threats;
  case: CaseName;
  frame: string | null;
  mode: string;
  last_engine_move: string | null;
  columns: string[];
  created: string;
  updated: string;
}

export interface HealthInfo {
  status: string;
  book_cases: number;
}

export interface ApiErrorBody {
  error: string;
  detail: string;
}
