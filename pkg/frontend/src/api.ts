/** Typed client for the consistency service's HTTP endpoints.
 *
 * The UI performs no numeric computation of its own: every displayed
 * figure comes verbatim from these responses.
 */

export interface Fill {
  i: number;
  j: number;
  value: number;
}

/** Analysis view of the session's current (or hypothetical) matrix. */
export interface Snapshot {
  n: number;
  m: number;
  connected: boolean;
  spanning_tree: boolean;
  matrix: string;
  threshold: number;
  components?: number[][];
  lambda_max?: number;
  ci?: number;
  fills?: Fill[];
  ri?: number | null;
  ri_source?: string | null;
  cr?: number | null;
  accepted?: boolean | null;
  note?: string;
}

export interface HistoryEntry {
  timestamp: number;
  i: number;
  j: number;
  old: number | null;
  new: number | null;
}

export interface SessionInfo {
  session_id: string;
  n: number;
  history: HistoryEntry[];
  snapshot: Snapshot;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) =>
      fetch(input, init),
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const resp = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!resp.ok) {
      let detail = `HTTP ${resp.status}`;
      try {
        const payload = (await resp.json()) as { detail?: string };
        if (payload.detail) detail = payload.detail;
      } catch {
        /* non-JSON error body; keep the status text */
      }
      throw new ApiError(resp.status, detail);
    }
    return (await resp.json()) as T;
  }

  createSession(n: number): Promise<{ session_id: string; snapshot: Snapshot }> {
    return this.request("POST", "/sessions", { n });
  }

  getSession(sid: string): Promise<SessionInfo> {
    return this.request("GET", `/sessions/${sid}`);
  }

  setEntry(
    sid: string,
    i: number,
    j: number,
    value: number | null,
  ): Promise<Snapshot> {
    return this.request("POST", `/sessions/${sid}/entries`, { i, j, value });
  }

  whatIf(
    sid: string,
    i: number,
    j: number,
    value: number | null,
  ): Promise<Snapshot> {
    return this.request("POST", `/sessions/${sid}/what-if`, { i, j, value });
  }

  exportMatrix(sid: string): Promise<{ matrix: string }> {
    return this.request("GET", `/sessions/${sid}/export`);
  }
}
