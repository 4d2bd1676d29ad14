// Thin client for the game service wire protocol.  The UI never builds
// game state locally: every displayed position comes from these calls.

import type {
  AdviceResponse,
  ApiErrorBody,
  GameStateResponse,
  InstanceDoc,
  MoveResponse,
  NewGameResponse,
  WireMove,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly errorCode: string,
    message: string,
    public readonly status: number,
  ) {
    super(message);
  }
}

type FetchLike = typeof fetch;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: body !== undefined ? { "Content-Type": "application/json" } : undefined,
      body: body !== undefined ? JSON.stringify(body) : undefined,
    });
    if (!response.ok) {
      let payload: ApiErrorBody = { error_code: "unknown", message: response.statusText };
      try {
        payload = (await response.json()) as ApiErrorBody;
      } catch {
        // non-JSON error body; keep the fallback
      }
      throw new ApiError(payload.error_code, payload.message, response.status);
    }
    return (await response.json()) as T;
  }

  newGame(instance: InstanceDoc): Promise<NewGameResponse> {
    return this.request("POST", "/api/games", { instance });
  }

  gameState(sessionId: string): Promise<GameStateResponse> {
    return this.request("GET", `/api/games/${sessionId}`);
  }

  submitMove(sessionId: string, move: WireMove): Promise<MoveResponse> {
    return this.request("POST", `/api/games/${sessionId}/moves`, move);
  }

  advice(sessionId: string): Promise<AdviceResponse> {
    return this.request("GET", `/api/games/${sessionId}/advice`);
  }
}
