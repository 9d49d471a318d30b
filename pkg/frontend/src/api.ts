import type { GameState, HealthInfo } from "./types.js";

/** A non-2xx reply from the service; `code` is its machine-readable error. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    detail: string,
  ) {
    super(detail || code);
    this.name = "ApiError";
  }
}

/** The slice of the service the UI uses; fakes implement this in tests. */
export interface GameApi {
  health(): Promise<HealthInfo>;
  createGame(): Promise<GameState>;
  getGame(id: string): Promise<GameState>;
  playMove(id: string, coord: string): Promise<GameState>;
  deleteGame(id: string): Promise<void>;
}

export class ServiceClient implements GameApi {
  constructor(
    private readonly base: string,
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchFn(this.base + path, init);
    if (res.status === 204) {
      return undefined as T;
    }
    let body: unknown = null;
    try {
      body = await res.json();
    } catch {
      // non-JSON reply; fall through to the status check
    }
    if (!res.ok) {
      const err = body as { error?: string; detail?: string } | null;
      throw new ApiError(res.status, err?.error ?? "http_error", err?.detail ?? "");
    }
    return body as T;
  }

  health(): Promise<HealthInfo> {
    return this.request("/health");
  }

  createGame(): Promise<GameState> {
    return this.request("/games", { method: "POST" });
  }

  getGame(id: string): Promise<GameState> {
    return this.request(`/games/${id}`);
  }

  playMove(id: string, coord: string): Promise<GameState> {
    return this.request(`/games/${id}/moves`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ coord }),
    });
  }

  deleteGame(id: string): Promise<void> {
    return this.request(`/games/${id}`, { method: "DELETE" });
  }
}
