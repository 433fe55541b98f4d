// Metric strip: intrinsic quality numbers with direction-of-better hints.

import { clear, el } from "./dom.js";
import type { MetricsReport } from "./types.js";

const DESCRIPTIONS: Record<string, { label: string; hint: string }> = {
  sil: {
    label: "SIL",
    hint: "Silhouette: cohesion vs separation, in [-1, 1]; higher is better.",
  },
  chi: {
    label: "CHI",
    hint: "Calinski-Harabasz: between/within dispersion ratio; higher is better.",
  },
  dbi: {
    label: "DBI",
    hint: "Davies-Bouldin: average worst-pair similarity; lower is better.",
  },
  c_v: {
    label: "C_V",
    hint: "Keyword coherence from co-occurrence contexts; higher is better.",
  },
  c_npmi: {
    label: "C_NPMI",
    hint: "Normalized pointwise mutual information of keywords, in [-1, 1]; higher is better.",
  },
};

function formatValue(value: number | null): string {
  if (value === null || value === undefined) return "–";
  return Math.abs(value) >= 100 ? value.toFixed(1) : value.toFixed(3);
}

export function renderMetrics(container: HTMLElement, metrics: MetricsReport | null): void {
  clear(container);
  if (!metrics) return;
  const strip = el("div", { class: "metric-strip" });
  for (const key of ["sil", "chi", "dbi", "c_v", "c_npmi"] as const) {
    const meta = DESCRIPTIONS[key];
    const value = metrics[key];
    strip.append(
      el("span", { class: "metric", title: meta.hint, "data-metric": key }, [
        el("strong", { text: meta.label }),
        el("span", { text: formatValue(value) }),
      ]),
    );
  }
  strip.append(
    el("span", { class: "metric", title: "Clusters found / uncategorized papers" }, [
      el("strong", { text: "clusters" }),
      el("span", { text: `${metrics.n_clusters} (+${metrics.n_noise} noise)` }),
    ]),
  );
  container.append(strip);
}
