// Wire types for the exploration service API. The UI renders these
// fields verbatim; it never computes metrics, sizes, or counts itself.

export interface Keyword {
  term: string;
  weight: number;
}

export interface PaperRow {
  index: number;
  arxiv_id: string;
  title: string;
  authors: string[];
  categories: string[];
  abstract: string;
  url: string;
  published: string;
  year: number;
}

export interface ClusterTab {
  id: number;
  size: number;
  uncategorized: boolean;
  keywords: Keyword[];
  years: Record<string, number>;
  papers: PaperRow[];
}

export interface MetricsReport {
  sil: number | null;
  chi: number | null;
  dbi: number | null;
  c_v: number | null;
  c_npmi: number | null;
  n_clusters: number;
  n_noise: number;
  space: string;
  reasons: Record<string, string | number>;
}

export interface ScatterPoint {
  index: number;
  date: string;
  year: number;
  cluster: number;
  title: string;
}

export interface TrendsPayload {
  series: Record<string, Record<string, number>>;
  scatter: ScatterPoint[];
}

export interface ExplorationResult {
  key: string;
  cached: boolean;
  query: QueryPayload;
  snapshot: { fetched_at: string; source: string; n_papers: number };
  config: Record<string, unknown>;
  labels: number[];
  n_clusters: number;
  n_noise: number;
  suggested_k: number;
  clusters: ClusterTab[];
  metrics: MetricsReport;
  trends: TrendsPayload;
  timing: Record<string, number>;
  warnings: string[];
}

export interface QueryPayload {
  terms: string[];
  category?: string;
  date_start?: string;
  date_end?: string;
  sort: string;
  max_results: number;
}

export interface ExploreConfig {
  mode: "automatic" | "user_controlled";
  k?: number;
  representation?: string;
  seed?: number;
  max_results?: number;
  sort?: string;
}

export interface ExploreRequestBody {
  query: QueryPayload;
  config: ExploreConfig;
}

export interface Preset {
  id: string;
  area: string;
  topic: string;
  query: QueryPayload;
}

export interface StageErrorDetail {
  stage: string;
  error: string;
}
