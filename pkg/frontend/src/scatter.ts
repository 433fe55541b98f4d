// Temporal scatter: x = publication date, y = cluster id, color by
// cluster. Hover shows title/year, clicking a point focuses the paper's
// tab, and legend entries toggle cluster visibility. Points come
// verbatim from the result's trends.scatter payload.

import { clear, clusterColor, clusterName, el, svgEl } from "./dom.js";
import type { ViewState } from "./state.js";
import type { ScatterPoint } from "./types.js";

export interface ScatterCallbacks {
  onPointClick: (point: ScatterPoint) => void;
  onToggleCluster: (clusterId: number) => void;
}

const WIDTH = 760;
const HEIGHT = 280;
const MARGIN = { left: 90, right: 20, top: 16, bottom: 28 };

function dayNumber(date: string): number {
  return Date.parse(`${date}T00:00:00Z`) / 86400000;
}

export function renderScatter(
  container: HTMLElement,
  state: ViewState,
  callbacks: ScatterCallbacks,
): void {
  clear(container);
  const result = state.result;
  if (!result || result.trends.scatter.length === 0) {
    container.append(el("p", { class: "empty", text: "No temporal data yet." }));
    return;
  }
  const points = result.trends.scatter;
  const clusterIds = result.clusters.map((c) => c.id);
  const xs = points.map((p) => dayNumber(p.date));
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const xSpan = Math.max(xMax - xMin, 1);
  const rowOf = new Map(clusterIds.map((id, row) => [id, row]));
  const innerW = WIDTH - MARGIN.left - MARGIN.right;
  const innerH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const rowGap = innerH / Math.max(clusterIds.length, 1);

  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: "scatter",
    role: "img",
  });

  // Year gridlines and labels.
  const firstYear = new Date(xMin * 86400000).getUTCFullYear();
  const lastYear = new Date(xMax * 86400000).getUTCFullYear();
  for (let year = firstYear; year <= lastYear + 1; year++) {
    const day = Date.UTC(year, 0, 1) / 86400000;
    if (day < xMin || day > xMax) continue;
    const x = MARGIN.left + ((day - xMin) / xSpan) * innerW;
    svg.append(
      svgEl("line", {
        x1: String(x), x2: String(x),
        y1: String(MARGIN.top), y2: String(HEIGHT - MARGIN.bottom),
        class: "gridline",
      }),
    );
    const label = svgEl("text", {
      x: String(x + 3), y: String(HEIGHT - 8), class: "axis-label",
    });
    label.textContent = String(year);
    svg.append(label);
  }

  // Cluster row labels.
  for (const id of clusterIds) {
    const y = MARGIN.top + (rowOf.get(id)! + 0.5) * rowGap;
    const label = svgEl("text", {
      x: "6", y: String(y + 4), class: "axis-label",
    });
    label.textContent = clusterName(id);
    svg.append(label);
  }

  const tooltip = el("div", { class: "tooltip hidden" });
  for (const point of points) {
    if (state.hiddenClusters.has(point.cluster)) continue;
    const row = rowOf.get(point.cluster);
    if (row === undefined) continue;
    const cx = MARGIN.left + ((dayNumber(point.date) - xMin) / xSpan) * innerW;
    const jitter = ((point.index * 37) % 11) - 5;
    const cy = MARGIN.top + (row + 0.5) * rowGap + jitter;
    const dot = svgEl("circle", {
      cx: String(cx),
      cy: String(cy),
      r: "4",
      fill: clusterColor(point.cluster),
      class: "point",
      "data-index": String(point.index),
      "data-cluster": String(point.cluster),
    });
    dot.addEventListener("mouseenter", () => {
      tooltip.textContent = `${point.title} (${point.year})`;
      tooltip.classList.remove("hidden");
    });
    dot.addEventListener("mouseleave", () => tooltip.classList.add("hidden"));
    dot.addEventListener("click", () => callbacks.onPointClick(point));
    svg.append(dot);
  }
  container.append(svg, tooltip);

  const legend = el("div", { class: "legend" });
  for (const id of clusterIds) {
    const item = el(
      "button",
      {
        class: state.hiddenClusters.has(id) ? "legend-item off" : "legend-item",
        "data-cluster": String(id),
      },
      [
        el("span", { class: "swatch", style: `background:${clusterColor(id)}` }),
        el("span", { text: clusterName(id) }),
      ],
    );
    item.addEventListener("click", () => callbacks.onToggleCluster(id));
    legend.append(item);
  }
  container.append(legend);
}
