// Central view state. Mutations go through small helpers that keep the
// invariants: K slider only matters in user-controlled mode, and the
// selected tab always exists in the current result.

import type { ExplorationResult } from "./types.js";

export interface FormState {
  terms: string;
  category: string;
  dateFrom: string;
  dateTo: string;
  sort: "relevance" | "submitted_date";
  maxResults: number;
  mode: "automatic" | "user_controlled";
  k: number;
}

export interface ViewState {
  form: FormState;
  loading: boolean;
  error: string | null;
  errorStage: string | null;
  result: ExplorationResult | null;
  selectedTab: number | null;
  pageByTab: Map<number, number>;
  showAllClusters: boolean;
  hiddenClusters: Set<number>;
}

export const MAX_RESULTS_MIN = 20;
export const MAX_RESULTS_MAX = 500;
export const PAGE_SIZE = 10;
export const OVERVIEW_CARD_LIMIT = 8;

export function initialState(): ViewState {
  return {
    form: {
      terms: "",
      category: "",
      dateFrom: "",
      dateTo: "",
      sort: "relevance",
      maxResults: 300,
      mode: "automatic",
      k: 8,
    },
    loading: false,
    error: null,
    errorStage: null,
    result: null,
    selectedTab: null,
    pageByTab: new Map(),
    showAllClusters: false,
    hiddenClusters: new Set(),
  };
}

export interface ValidationIssue {
  field: string;
  message: string;
}

export function validateForm(form: FormState): ValidationIssue[] {
  const issues: ValidationIssue[] = [];
  const terms = splitTerms(form.terms);
  if (terms.length === 0) {
    issues.push({ field: "terms", message: "enter at least one phrase" });
  }
  if (form.maxResults < MAX_RESULTS_MIN || form.maxResults > MAX_RESULTS_MAX) {
    issues.push({
      field: "maxResults",
      message: `results must be between ${MAX_RESULTS_MIN} and ${MAX_RESULTS_MAX}`,
    });
  }
  if (form.mode === "user_controlled" && (!Number.isInteger(form.k) || form.k < 2)) {
    issues.push({ field: "k", message: "cluster count must be an integer >= 2" });
  }
  if (form.dateFrom && form.dateTo && form.dateFrom > form.dateTo) {
    issues.push({ field: "dates", message: "start date is after end date" });
  }
  return issues;
}

export function splitTerms(raw: string): string[] {
  return raw
    .split(",")
    .map((t) => t.trim())
    .filter((t) => t.length > 0);
}

// A new result replaces the old one atomically; tab selection resets to
// the first tab so it always points into the fresh result.
export function applyResult(state: ViewState, result: ExplorationResult): void {
  state.result = result;
  state.loading = false;
  state.error = null;
  state.errorStage = null;
  state.pageByTab = new Map();
  state.showAllClusters = false;
  state.hiddenClusters = new Set();
  state.selectedTab = result.clusters.length ? result.clusters[0].id : null;
}

export function selectTab(state: ViewState, tabId: number): void {
  if (state.result && state.result.clusters.some((c) => c.id === tabId)) {
    state.selectedTab = tabId;
  }
}

export function pageFor(state: ViewState, tabId: number): number {
  return state.pageByTab.get(tabId) ?? 0;
}

export function setPage(state: ViewState, tabId: number, page: number): void {
  state.pageByTab.set(tabId, Math.max(0, page));
}
