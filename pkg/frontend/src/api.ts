import type {
  AnswerResponse,
  BankInfo,
  QuestionResponse,
  SummaryResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

/** The session id no longer exists (e.g. the server restarted). */
export class SessionLostError extends ApiError {
  constructor() {
    super("session lost", 404);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin client for the quiz session endpoints; fetch is injectable so
 *  tests can point it anywhere or record traffic. */
export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "Content-Type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const resp = await this.fetchFn(`${this.baseUrl}${path}`, init);
    if (resp.status === 404 && path.startsWith("/api/sessions/")) {
      throw new SessionLostError();
    }
    if (!resp.ok) {
      throw new ApiError(`${method} ${path} failed: ${resp.status}`, resp.status);
    }
    return (await resp.json()) as T;
  }

  listBanks(): Promise<BankInfo[]> {
    return this.request("GET", "/api/banks");
  }

  async createSession(bank: string): Promise<{ session: string; size: number }> {
    return this.request("POST", "/api/sessions", { bank });
  }

  getQuestion(session: string, index?: number): Promise<QuestionResponse> {
    const suffix = index === undefined ? "" : `?index=${index}`;
    return this.request("GET", `/api/sessions/${session}/question${suffix}`);
  }

  submitAnswer(session: string, answer: unknown): Promise<AnswerResponse> {
    return this.request("POST", `/api/sessions/${session}/answer`, { answer });
  }

  advance(session: string): Promise<{ cursor: number; done: boolean }> {
    return this.request("POST", `/api/sessions/${session}/advance`);
  }

  summary(session: string): Promise<SummaryResponse> {
    return this.request("GET", `/api/sessions/${session}/summary`);
  }
}
