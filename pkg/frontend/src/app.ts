// Application shell: owns the state, talks to the API, re-renders the
// panels. One explore request in flight at a time; superseded responses
// are discarded by sequence number, and the previous result stays on
// screen until a newer one actually lands.

import { ApiClient } from "./api.js";
import { clear, el } from "./dom.js";
import { renderForm } from "./form.js";
import { renderMetrics } from "./metrics.js";
import { renderOverview } from "./overview.js";
import { renderScatter } from "./scatter.js";
import {
  FormState,
  PAGE_SIZE,
  ValidationIssue,
  ViewState,
  applyResult,
  initialState,
  selectTab,
  setPage,
  splitTerms,
  validateForm,
} from "./state.js";
import { renderTabs } from "./tabs.js";
import type { ExploreRequestBody, Preset, ScatterPoint } from "./types.js";

export interface AppPanels {
  form: HTMLElement;
  banner: HTMLElement;
  metrics: HTMLElement;
  overview: HTMLElement;
  scatter: HTMLElement;
  tabs: HTMLElement;
}

export class App {
  state: ViewState = initialState();
  issues: ValidationIssue[] = [];
  presets: Preset[] = [];
  requestsIssued = 0;

  constructor(
    private panels: AppPanels,
    private api: ApiClient,
  ) {}

  async loadPresets(): Promise<void> {
    this.presets = await this.api.presets();
    this.render();
  }

  buildRequestBody(): ExploreRequestBody {
    const form = this.state.form;
    const query: ExploreRequestBody["query"] = {
      terms: splitTerms(form.terms),
      sort: form.sort,
      max_results: form.maxResults,
    };
    if (form.category.trim()) query.category = form.category.trim();
    if (form.dateFrom) query.date_start = `${form.dateFrom}-01`;
    if (form.dateTo) query.date_end = lastDayOfMonth(form.dateTo);
    const config: ExploreRequestBody["config"] = {
      mode: form.mode,
      max_results: form.maxResults,
      sort: form.sort,
    };
    if (form.mode === "user_controlled") config.k = form.k;
    return { query, config };
  }

  async submit(): Promise<void> {
    this.issues = validateForm(this.state.form);
    if (this.issues.length) {
      this.render();
      return;
    }
    this.state.loading = true;
    this.state.error = null;
    this.state.errorStage = null;
    this.render();
    this.requestsIssued += 1;
    const outcome = await this.api.explore(this.buildRequestBody());
    if (outcome.stale) {
      return; // a newer submission owns the screen
    }
    if (outcome.result) {
      applyResult(this.state, outcome.result);
    } else {
      this.state.loading = false;
      this.state.error = outcome.error ?? "request failed";
      this.state.errorStage = outcome.stage ?? null;
    }
    this.render();
  }

  onFormChange(patch: Partial<FormState>): void {
    const previousK = this.state.form.k;
    Object.assign(this.state.form, patch);
    // A K change in user-controlled mode re-runs the query; the current
    // result stays visible until the new one arrives.
    if (
      patch.k !== undefined &&
      patch.k !== previousK &&
      this.state.form.mode === "user_controlled" &&
      this.state.result !== null
    ) {
      void this.submit();
      return;
    }
    this.render();
  }

  onPreset(preset: Preset): void {
    this.state.form.terms = preset.query.terms.join(", ");
    this.state.form.category = preset.query.category ?? "";
    this.state.form.maxResults = preset.query.max_results;
    this.render();
  }

  focusPaper(point: ScatterPoint): void {
    selectTab(this.state, point.cluster);
    const tab = this.state.result?.clusters.find((c) => c.id === point.cluster);
    if (tab) {
      const position = tab.papers.findIndex((p) => p.index === point.index);
      if (position >= 0) {
        setPage(this.state, point.cluster, Math.floor(position / PAGE_SIZE));
      }
    }
    this.render();
    const row = this.panels.tabs.querySelector(
      `.paper[data-index="${point.index}"]`,
    );
    if (row && "scrollIntoView" in row) {
      (row as HTMLElement).scrollIntoView({ block: "nearest" });
    }
  }

  toggleCluster(clusterId: number): void {
    if (this.state.hiddenClusters.has(clusterId)) {
      this.state.hiddenClusters.delete(clusterId);
    } else {
      this.state.hiddenClusters.add(clusterId);
    }
    this.render();
  }

  render(): void {
    renderForm(this.panels.form, this.state, this.issues, this.presets, {
      onSubmit: () => void this.submit(),
      onChange: (patch) => this.onFormChange(patch),
      onPreset: (preset) => this.onPreset(preset),
    });

    clear(this.panels.banner);
    if (this.state.error) {
      const stage = this.state.errorStage
        ? `stage '${this.state.errorStage}': `
        : "";
      this.panels.banner.append(
        el("div", { class: "error-banner", role: "alert", text: `${stage}${this.state.error}` }),
      );
    }
    for (const warning of this.state.result?.warnings ?? []) {
      this.panels.banner.append(
        el("div", { class: "warning-banner", text: warning }),
      );
    }

    renderMetrics(this.panels.metrics, this.state.result?.metrics ?? null);
    renderOverview(this.panels.overview, this.state, {
      onSelectCluster: (id) => {
        selectTab(this.state, id);
        this.render();
      },
      onToggleShowAll: () => {
        this.state.showAllClusters = !this.state.showAllClusters;
        this.render();
      },
    });
    renderScatter(this.panels.scatter, this.state, {
      onPointClick: (point) => this.focusPaper(point),
      onToggleCluster: (id) => this.toggleCluster(id),
    });
    renderTabs(this.panels.tabs, this.state, {
      onSelectTab: (id) => {
        selectTab(this.state, id);
        this.render();
      },
      onSetPage: (id, page) => {
        setPage(this.state, id, page);
        this.render();
      },
    });
  }
}

function lastDayOfMonth(yearMonth: string): string {
  const [year, month] = yearMonth.split("-").map(Number);
  const last = new Date(Date.UTC(year, month, 0)).getUTCDate();
  return `${yearMonth}-${String(last).padStart(2, "0")}`;
}

export function mountApp(root: HTMLElement, api?: ApiClient): App {
  const panels: AppPanels = {
    form: el("section", { id: "panel-form" }),
    banner: el("section", { id: "panel-banner" }),
    metrics: el("section", { id: "panel-metrics" }),
    overview: el("section", { id: "panel-overview" }),
    scatter: el("section", { id: "panel-scatter" }),
    tabs: el("section", { id: "panel-tabs" }),
  };
  clear(root);
  root.append(
    el("h1", { text: "litscope" }),
    el("p", {
      class: "tagline",
      text: "Query-time arXiv exploration: themes, keywords, and trends you can audit.",
    }),
    panels.form,
    panels.banner,
    panels.metrics,
    panels.overview,
    panels.scatter,
    panels.tabs,
  );
  const app = new App(panels, api ?? new ApiClient());
  app.render();
  void app.loadPresets();
  return app;
}
