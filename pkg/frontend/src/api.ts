import type {
  AnalysisView,
  CreateGameRequest,
  EngineInfo,
  FamilyInfo,
  SessionView,
} from "./types.js";

export class ServiceError extends Error {
  status: number;
  detail: unknown;

  constructor(status: number, detail: unknown) {
    super(typeof detail === "string" ? detail : JSON.stringify(detail));
    this.status = status;
    this.detail = detail;
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private base: string;
  private fetchFn: FetchLike;

  constructor(base = "", fetchFn: FetchLike = (...args) => fetch(...args)) {
    this.base = base.replace(/\/$/, "");
    this.fetchFn = fetchFn;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await this.fetchFn(this.base + path, init);
    let body: unknown = null;
    try {
      body = await resp.json();
    } catch {
      body = null;
    }
    if (!resp.ok) {
      const detail =
        body && typeof body === "object" && "detail" in body
          ? (body as { detail: unknown }).detail
          : body;
      throw new ServiceError(resp.status, detail);
    }
    return body as T;
  }

  listEngines(): Promise<EngineInfo[]> {
    return this.request("/engines");
  }

  listFamilies(): Promise<FamilyInfo[]> {
    return this.request("/cuttings/families");
  }

  createGame(req: CreateGameRequest): Promise<SessionView> {
    return this.request("/games", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(req),
    });
  }

  getGame(id: string): Promise<SessionView> {
    return this.request(`/games/${id}`);
  }

  submitMove(id: string, index: number): Promise<SessionView> {
    return this.request(`/games/${id}/moves`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ index }),
    });
  }

  getAnalysis(id: string): Promise<AnalysisView> {
    return this.request(`/games/${id}/analysis`);
  }
}
