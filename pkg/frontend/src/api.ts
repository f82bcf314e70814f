import {
  FeedbackBody,
  GraphMode,
  GraphPayload,
  HealthPayload,
  PublicationsPayload,
  Suggestion,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Non-2xx answer from the server; carries the payload's error message. */
export class ApiError extends Error {
  status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function errorFrom(response: Response): Promise<ApiError> {
  let message = `request failed (${response.status})`;
  try {
    const body = await response.json();
    if (body && typeof body.error === "string") {
      message = body.error;
    }
  } catch {
    // non-JSON error body, keep the generic message
  }
  return new ApiError(response.status, message);
}

/**
 * Thin typed client over the read-only endpoints plus the one write
 * (feedback). The fetch function is injected so tests can fake the
 * network and the app can pass the browser's fetch bound to window.
 */
export class ApiClient {
  private base: string;
  private fetchFn: FetchLike;

  constructor(base = "", fetchFn?: FetchLike) {
    this.base = base.replace(/\/+$/, "");
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchFn(this.base + path);
    if (!response.ok) {
      throw await errorFrom(response);
    }
    return (await response.json()) as T;
  }

  health(): Promise<HealthPayload> {
    return this.getJson("/api/health");
  }

  suggest(q: string, k = 10): Promise<Suggestion[]> {
    const query = new URLSearchParams({ q, k: String(k) });
    return this.getJson(`/api/suggest?${query.toString()}`);
  }

  graph(conceptId: string, semanticType: string, mode: GraphMode): Promise<GraphPayload> {
    const query = new URLSearchParams({ semantic_type: semanticType, mode });
    return this.getJson(
      `/api/graph/${encodeURIComponent(conceptId)}?${query.toString()}`,
    );
  }

  edgePublications(a: string, b: string): Promise<PublicationsPayload> {
    return this.getJson(
      `/api/edge/${encodeURIComponent(a)}/${encodeURIComponent(b)}/publications`,
    );
  }

  async postFeedback(body: FeedbackBody): Promise<void> {
    const response = await this.fetchFn(this.base + "/api/feedback", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (response.status !== 202) {
      throw await errorFrom(response);
    }
  }
}
