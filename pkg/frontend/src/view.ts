// Pure view models derived from server state. Everything the board and
// panels display is computed here so it can be tested without a DOM.

import type { GameState } from "./types.js";

export interface Point {
  col: number;
  row: number;
}

export function coordToPoint(coord: string, columns: string[]): Point {
  const col = columns.indexOf(coord.charAt(0));
  const row = parseInt(coord.slice(1), 10) - 1;
  if (col < 0 || Number.isNaN(row)) {
    throw new Error(`bad coordinate from server: ${coord}`);
  }
  return { col, row };
}

export function pointToCoord(p: Point, columns: string[]): string {
  return `${columns[p.col]}${p.row + 1}`;
}

export interface StoneView {
  coord: string;
  col: number;
  row: number;
  color: "black" | "white";
  stone: number; // 1-based placement index, drawn on the stone
  isLast: boolean;
  onWinningSquare: boolean;
  tooltip: string | null;
}

export interface ThreatMark {
  coord: string;
  col: number;
  row: number;
  side: "black" | "white";
}

export interface WinningRect {
  col0: number;
  row0: number;
  side: number;
  corners: string[];
}

export interface BoardView {
  size: number;
  stones: StoneView[];
  threats: ThreatMark[];
  winning: WinningRect | null;
  occupied: Set<string>;
  clickable: boolean;
}

/** What the engine is pressing right now, shown on its latest stone. */
export function engineTooltip(state: GameState): string | null {
  const threats = state.threats.black;
  if (state.status.over || threats.length === 0) {
    return null;
  }
  if (threats.length === 1) {
    return `pressing a threat at ${threats[0]}`;
  }
  return `double threat at ${threats.join(", ")}`;
}

export function buildBoardView(state: GameState | null, pending: boolean): BoardView {
  if (state === null) {
    return {
      size: 19,
      stones: [],
      threats: [],
      winning: null,
      occupied: new Set(),
      clickable: false,
    };
  }
  const cols = state.columns;
  const winningCorners = state.status.winning_square ?? [];
  const lastIndex = state.history.length - 1;
  const tooltip = engineTooltip(state);
  const stones: StoneView[] = state.history.map((coord, i) => {
    const p = coordToPoint(coord, cols);
    const color = i % 2 === 0 ? "black" : "white";
    return {
      coord,
      col: p.col,
      row: p.row,
      color,
      stone: i + 1,
      isLast: i === lastIndex,
      onWinningSquare: winningCorners.includes(coord),
      tooltip: color === "black" && coord === state.last_engine_move ? tooltip : null,
    };
  });
  const threats: ThreatMark[] = (["black", "white"] as const).flatMap((side) =>
    state.threats[side].map((coord) => {
      const p = coordToPoint(coord, cols);
      return { coord, col: p.col, row: p.row, side };
    }),
  );
  let winning: WinningRect | null = null;
  if (winningCorners.length === 4) {
    const pts = winningCorners.map((c) => coordToPoint(c, cols));
    const col0 = Math.min(...pts.map((p) => p.col));
    const row0 = Math.min(...pts.map((p) => p.row));
    const side = Math.max(...pts.map((p) => p.col)) - col0;
    winning = { col0, row0, side, corners: winningCorners };
  }
  return {
    size: state.size,
    stones,
    threats,
    winning,
    occupied: new Set(state.history),
    clickable: !pending && !state.status.over && state.to_move === "white",
  };
}

export function caseBanner(state: GameState | null): string | null {
  if (state === null || state.case === "pending") {
    return null;
  }
  return state.case === "in-W"
    ? "stone 4 inside W - searched line"
    : "stone 4 outside W - scripted line";
}

export function statusLine(state: GameState | null, pending: boolean): string {
  if (state === null) {
    return "no game";
  }
  if (state.status.over) {
    const st = state.status;
    const square = (st.winning_square ?? []).join(" ");
    const who = st.winner === "black" ? "Black (engine)" : "White";
    return `${who} wins at stone ${st.winning_stone} with square ${square}`;
  }
  if (pending) {
    return "engine replying...";
  }
  return state.to_move === "white" ? "your move (White)" : "engine to move";
}

export interface MoveEntry {
  stone: number;
  coord: string;
  color: "black" | "white";
}

export function moveList(state: GameState | null): MoveEntry[] {
  if (state === null) {
    return [];
  }
  return state.history.map((coord, i) => ({
    stone: i + 1,
    coord,
    color: i % 2 === 0 ? "black" : "white",
  }));
}
