// Thin client over the service API with stale-response protection:
// every explore call gets a sequence number, and responses that are no
// longer the newest are surfaced as `stale` so callers can drop them.

import type { ExploreRequestBody, ExplorationResult, Preset } from "./types.js";

export interface ExploreOutcome {
  result?: ExplorationResult;
  error?: string;
  stage?: string;
  stale: boolean;
  seq: number;
}

export class ApiClient {
  private seq = 0;

  constructor(
    private baseUrl: string = "",
    private fetchFn: typeof fetch = fetch.bind(globalThis),
  ) {}

  get inFlightSeq(): number {
    return this.seq;
  }

  async explore(body: ExploreRequestBody): Promise<ExploreOutcome> {
    const seq = ++this.seq;
    try {
      const response = await this.fetchFn(`${this.baseUrl}/api/explore`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
      const stale = seq !== this.seq;
      if (!response.ok) {
        const detail = await response.json().catch(() => null);
        const inner = detail?.detail;
        if (inner && typeof inner === "object" && "stage" in inner) {
          return { error: String(inner.error), stage: String(inner.stage), stale, seq };
        }
        return { error: inner ? String(inner) : `HTTP ${response.status}`, stale, seq };
      }
      const result = (await response.json()) as ExplorationResult;
      return { result, stale, seq };
    } catch (err) {
      return { error: String(err), stale: seq !== this.seq, seq };
    }
  }

  async presets(): Promise<Preset[]> {
    const response = await this.fetchFn(`${this.baseUrl}/api/presets`);
    if (!response.ok) return [];
    return (await response.json()) as Preset[];
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchFn(`${this.baseUrl}/api/health`);
      return response.ok;
    } catch {
      return false;
    }
  }
}
