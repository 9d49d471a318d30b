import { ApiError, type GameApi } from "./api.js";
import type { GameState } from "./types.js";

export interface UiState {
  game: GameState | null;
  pending: boolean;
  inlineError: string | null; // refused move, shown next to the board
  networkError: string | null; // connectivity problem, shown as a retry banner
}

type Listener = () => void;

/**
 * Holds the single active game and serializes requests: while one is in
 * flight the UI ignores input, so an illegal placement is never submitted
 * twice without a fresh user action. State always comes back from the
 * server; nothing is patched optimistically.
 */
export class GameStore {
  state: UiState = { game: null, pending: false, inlineError: null, networkError: null };

  private listeners: Listener[] = [];
  private lastAction: (() => Promise<void>) | null = null;

  constructor(private readonly api: GameApi) {}

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) {
      fn();
    }
  }

  private async run(action: () => Promise<void>): Promise<void> {
    if (this.state.pending) {
      return;
    }
    this.state.pending = true;
    this.state.inlineError = null;
    this.emit();
    try {
      await action();
      this.state.networkError = null;
      this.lastAction = null;
    } catch (err) {
      if (err instanceof ApiError) {
        this.state.inlineError = err.message || err.code;
      } else {
        this.state.networkError = err instanceof Error ? err.message : String(err);
        this.lastAction = action;
      }
    } finally {
      this.state.pending = false;
      this.emit();
    }
  }

  async newGame(): Promise<void> {
    await this.run(async () => {
      this.state.game = await this.api.createGame();
    });
  }

  async clickPoint(coord: string): Promise<void> {
    const game = this.state.game;
    if (!game || this.state.pending || game.status.over || game.to_move !== "white") {
      return;
    }
    await this.run(async () => {
      this.state.game = await this.api.playMove(game.id, coord);
    });
  }

  /**
   * Fresh game that resubmits every White move of the current history up
   * to and including index k. The engine is deterministic, so the prefix
   * comes back identical.
   */
  async replayFrom(index: number): Promise<void> {
    const game = this.state.game;
    if (!game) {
      return;
    }
    const whites = game.history
      .slice(0, index + 1)
      .filter((_coord, i) => i % 2 === 1);
    await this.run(async () => {
      let next = await this.api.createGame();
      for (const coord of whites) {
        next = await this.api.playMove(next.id, coord);
      }
      this.state.game = next;
    });
  }

  async retry(): Promise<void> {
    const action = this.lastAction;
    if (!action) {
      return;
    }
    this.state.networkError = null;
    await this.run(action);
  }
}
