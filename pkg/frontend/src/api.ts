// Thin fetch wrapper over the JSON API. A fetch implementation is injected
// so tests can run under node or point at a live server.

import type {
  ApiErrorBody,
  ExerciseListing,
  RevealResponse,
  SessionView,
  SubmitBody,
  SubmitResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(body.message);
  }
}

export class NetworkFailure extends Error {
  constructor(readonly reason: unknown) {
    super("network failure");
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private clientId: string | null = null;

  constructor(
    readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => globalThis.fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = { "Content-Type": "application/json" };
    if (this.clientId) headers["X-Client-Id"] = this.clientId;
    let response: Response;
    try {
      response = await this.fetchImpl(this.baseUrl + path, {
        method,
        headers,
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (cause) {
      throw new NetworkFailure(cause);
    }
    const issued = response.headers.get("X-Client-Id");
    if (issued) this.clientId = issued;
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload as ApiErrorBody);
    }
    return payload as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("GET", "/health");
  }

  listExercises(): Promise<ExerciseListing[]> {
    return this.request("GET", "/exercises");
  }

  createSession(exerciseId: string): Promise<SessionView> {
    return this.request("POST", `/exercises/${encodeURIComponent(exerciseId)}/sessions`);
  }

  getSession(sessionId: string): Promise<SessionView> {
    return this.request("GET", `/sessions/${encodeURIComponent(sessionId)}`);
  }

  submit(sessionId: string, body: SubmitBody): Promise<SubmitResponse> {
    return this.request("POST", `/sessions/${encodeURIComponent(sessionId)}/submit`, body);
  }

  reveal(sessionId: string): Promise<RevealResponse> {
    return this.request("POST", `/sessions/${encodeURIComponent(sessionId)}/reveal`, {});
  }
}
