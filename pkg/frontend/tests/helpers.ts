// Shared fixtures and a stubbed service for the UI tests.

import { ApiClient } from "../src/api.js";
import { mountApp, type App } from "../src/app.js";
import type { ClusterTab, ExplorationResult, ScatterPoint } from "../src/types.js";

import fixtureResult from "./fixtures/result60.json";

export function loadFixtureResult(): ExplorationResult {
  // Deep copy so tests can mutate their own view of the fixture.
  return JSON.parse(JSON.stringify(fixtureResult)) as ExplorationResult;
}

// Synthetic result with a configurable cluster count (3 papers each).
export function makeResult(
  nClusters: number,
  opts: { noise?: number } = {},
): ExplorationResult {
  const noise = opts.noise ?? 0;
  const clusters: ClusterTab[] = [];
  const scatter: ScatterPoint[] = [];
  const labels: number[] = [];
  let index = 0;
  const ids = [...Array(nClusters).keys()];
  if (noise > 0) ids.push(-1);
  for (const id of ids) {
    const count = id === -1 ? noise : 3;
    const papers = [];
    for (let i = 0; i < count; i++) {
      const year = 2021 + ((index + i) % 5);
      papers.push({
        index: index + i,
        arxiv_id: `2401.${10000 + index + i}`,
        title: `Paper ${index + i}`,
        authors: ["A. One"],
        categories: ["cs.LG"],
        abstract: "Abstract text.",
        url: `http://arxiv.org/abs/2401.${10000 + index + i}`,
        published: `${year}-03-05`,
        year,
      });
      scatter.push({
        index: index + i,
        date: `${year}-03-05`,
        year,
        cluster: id,
        title: `Paper ${index + i}`,
      });
      labels.push(id);
    }
    clusters.push({
      id,
      size: count,
      uncategorized: id === -1,
      keywords: [
        { term: `term${id}a`, weight: 2.0 },
        { term: `term${id}b`, weight: 1.0 },
      ],
      years: { "2024": count },
      papers,
    });
    index += count;
  }
  return {
    key: "fixture-key",
    cached: false,
    query: { terms: ["test query"], sort: "relevance", max_results: 100 },
    snapshot: { fetched_at: "2026-01-15T12:00:00Z", source: "fixture", n_papers: index },
    config: { mode: "automatic" },
    labels,
    n_clusters: nClusters,
    n_noise: noise,
    suggested_k: nClusters,
    clusters,
    metrics: {
      sil: 0.61, chi: 145.2, dbi: 0.93, c_v: 0.47, c_npmi: -0.21,
      n_clusters: nClusters, n_noise: noise, space: "reduced", reasons: {},
    },
    trends: { series: {}, scatter },
    timing: { reduce: 0.1 },
    warnings: [],
  };
}

export interface StubService {
  api: ApiClient;
  calls: { url: string; body?: unknown }[];
  respondWith: (result: ExplorationResult) => void;
  failWith: (status: number, detail: unknown) => void;
  holdNext: () => () => void;
}

// fetch stub implementing just enough of the service API.
export function stubService(result: ExplorationResult): StubService {
  const calls: { url: string; body?: unknown }[] = [];
  let payload = result;
  let failure: { status: number; detail: unknown } | null = null;
  let gate: Promise<void> | null = null;

  const fetchFn = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    calls.push({ url, body });
    if (url.endsWith("/api/presets")) return jsonResponse(200, []);
    if (url.endsWith("/api/health")) return jsonResponse(200, { status: "ok" });
    if (gate) {
      const pending = gate;
      gate = null;
      await pending;
    }
    if (failure) {
      const current = failure;
      failure = null;
      return jsonResponse(current.status, { detail: current.detail });
    }
    return jsonResponse(200, payload);
  }) as typeof fetch;

  return {
    api: new ApiClient("", fetchFn),
    calls,
    respondWith: (next) => {
      payload = next;
    },
    failWith: (status, detail) => {
      failure = { status, detail };
    },
    holdNext: () => {
      let release!: () => void;
      gate = new Promise<void>((resolve) => {
        release = resolve;
      });
      return release;
    },
  };
}

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export function mountWithStub(stub: StubService): { app: App; root: HTMLElement } {
  const root = document.createElement("main");
  document.body.append(root);
  const app = mountApp(root, stub.api);
  return { app, root };
}

export function exploreCalls(stub: StubService) {
  return stub.calls.filter((call) => call.url.endsWith("/api/explore"));
}

export async function settle(): Promise<void> {
  await new Promise((resolve) => setTimeout(resolve, 0));
  await new Promise((resolve) => setTimeout(resolve, 0));
}
