// DOM layer: materializes the view models into SVG and panels. Kept as
// thin as possible; anything worth testing lives in view.ts and store.ts.

import type { GameStore } from "./store.js";
import {
  buildBoardView,
  caseBanner,
  moveList,
  pointToCoord,
  statusLine,
} from "./view.js";
import type { BoardView, Point } from "./view.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export const CELL = 34;
export const MARGIN = 40;

export function boardPixels(size: number): number {
  return MARGIN * 2 + CELL * (size - 1);
}

function px(col: number): number {
  return MARGIN + col * CELL;
}

// row 1 is drawn at the bottom edge
function py(row: number, size: number): number {
  return MARGIN + (size - 1 - row) * CELL;
}

/** Grid point near pixel (x, y), or null when the click is off the lattice. */
export function nearestPoint(x: number, y: number, size: number): Point | null {
  const col = Math.round((x - MARGIN) / CELL);
  const rowFromTop = Math.round((y - MARGIN) / CELL);
  const row = size - 1 - rowFromTop;
  if (col < 0 || col >= size || row < 0 || row >= size) {
    return null;
  }
  const dx = x - px(col);
  const dy = y - py(row, size);
  const reach = CELL * 0.45;
  return dx * dx + dy * dy <= reach * reach ? { col, row } : null;
}

function svg(tag: string, attrs: Record<string, string | number>): SVGElement {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) {
    el.setAttribute(k, String(v));
  }
  return el;
}

function drawBoard(view: BoardView, columns: string[], store: GameStore): SVGSVGElement {
  const size = view.size;
  const pixels = boardPixels(size);
  const root = svg("svg", {
    viewBox: `0 0 ${pixels} ${pixels}`,
    class: "board" + (view.clickable ? " clickable" : ""),
  }) as SVGSVGElement;

  const bg = svg("rect", { x: 0, y: 0, width: pixels, height: pixels, class: "wood" });
  root.appendChild(bg);

  for (let i = 0; i < size; i++) {
    root.appendChild(
      svg("line", { x1: px(0), y1: py(i, size), x2: px(size - 1), y2: py(i, size), class: "grid" }),
    );
    root.appendChild(
      svg("line", { x1: px(i), y1: py(0, size), x2: px(i), y2: py(size - 1, size), class: "grid" }),
    );
    const letter = columns[i] ?? "";
    const label = svg("text", { x: px(i), y: pixels - 10, class: "label" });
    label.textContent = letter;
    root.appendChild(label);
    const num = svg("text", { x: 14, y: py(i, size) + 4, class: "label" });
    num.textContent = String(i + 1);
    root.appendChild(num);
  }

  if (view.winning) {
    const { col0, row0, side } = view.winning;
    root.appendChild(
      svg("rect", {
        x: px(col0),
        y: py(row0 + side, size),
        width: side * CELL,
        height: side * CELL,
        class: "winning-square",
      }),
    );
  }

  for (const mark of view.threats) {
    root.appendChild(
      svg("circle", {
        cx: px(mark.col),
        cy: py(mark.row, size),
        r: 8,
        class: `threat threat-${mark.side}`,
        "data-coord": mark.coord,
      }),
    );
  }

  for (const stone of view.stones) {
    const group = svg("g", {
      class:
        `stone ${stone.color}` +
        (stone.isLast ? " last" : "") +
        (stone.onWinningSquare ? " winner" : ""),
      "data-coord": stone.coord,
    });
    group.appendChild(svg("circle", { cx: px(stone.col), cy: py(stone.row, size), r: 15 }));
    const num = svg("text", { x: px(stone.col), y: py(stone.row, size) + 4.5 });
    num.textContent = String(stone.stone);
    group.appendChild(num);
    if (stone.tooltip) {
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = stone.tooltip;
      group.appendChild(title);
    }
    root.appendChild(group);
  }

  root.addEventListener("click", (ev) => {
    if (!view.clickable) {
      return;
    }
    const rect = root.getBoundingClientRect();
    const scale = pixels / rect.width;
    const point = nearestPoint(
      (ev.clientX - rect.left) * scale,
      (ev.clientY - rect.top) * scale,
      size,
    );
    if (point) {
      void store.clickPoint(pointToCoord(point, columns));
    }
  });
  return root;
}

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function drawPanel(store: GameStore): HTMLElement {
  const { game, pending, inlineError, networkError } = store.state;
  const panel = el("div", "panel");

  const status = el("div", "status", statusLine(game, pending));
  panel.appendChild(status);

  const banner = caseBanner(game);
  if (banner) {
    panel.appendChild(el("div", "case-banner", banner));
  }
  if (inlineError) {
    panel.appendChild(el("div", "inline-error", inlineError));
  }
  if (networkError) {
    const box = el("div", "network-error", `connection problem: ${networkError} `);
    const retry = el("button", "retry", "retry") as HTMLButtonElement;
    retry.addEventListener("click", () => void store.retry());
    box.appendChild(retry);
    panel.appendChild(box);
  }

  const newGame = el("button", "new-game", "New Game") as HTMLButtonElement;
  newGame.disabled = pending;
  newGame.addEventListener("click", () => void store.newGame());
  panel.appendChild(newGame);

  const list = el("ol", "moves");
  for (const entry of moveList(game)) {
    const item = el("li", `move ${entry.color}`);
    const btn = el("button", "replay", `${entry.stone}. ${entry.coord}`) as HTMLButtonElement;
    btn.title = "replay from here";
    btn.disabled = pending;
    btn.addEventListener("click", () => void store.replayFrom(entry.stone - 1));
    item.appendChild(btn);
    list.appendChild(item);
  }
  panel.appendChild(list);
  return panel;
}

export function mount(root: HTMLElement, store: GameStore): void {
  const redraw = () => {
    const game = store.state.game;
    const view = buildBoardView(game, store.state.pending);
    const columns = game?.columns ?? "ABCDEFGHIJKLMNOPQRS".split("");
    root.replaceChildren(drawBoard(view, columns, store), drawPanel(store));
  };
  store.subscribe(redraw);
  redraw();
}
