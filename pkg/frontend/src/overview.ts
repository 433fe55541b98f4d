// Cluster-card overview: at most 8 cards up front, the rest behind a
// Show All expander. The uncategorized card is visually distinct.

import { clear, clusterColor, clusterName, el } from "./dom.js";
import { OVERVIEW_CARD_LIMIT, ViewState } from "./state.js";
import type { ClusterTab } from "./types.js";

export interface OverviewCallbacks {
  onSelectCluster: (clusterId: number) => void;
  onToggleShowAll: () => void;
}

function card(tab: ClusterTab, callbacks: OverviewCallbacks): HTMLElement {
  const keywords = tab.keywords.slice(0, 5).map((k) => k.term).join(", ");
  const node = el(
    "article",
    {
      class: tab.uncategorized ? "cluster-card uncategorized" : "cluster-card",
      "data-cluster": String(tab.id),
    },
    [
      el("header", {}, [
        el("span", {
          class: "swatch",
          style: `background:${clusterColor(tab.id)}`,
        }),
        el("strong", { text: clusterName(tab.id) }),
        el("span", { class: "size", text: `${tab.size} papers` }),
      ]),
      el("p", { class: "keywords", text: keywords || "(no keywords)" }),
    ],
  );
  node.addEventListener("click", () => callbacks.onSelectCluster(tab.id));
  return node;
}

export function renderOverview(
  container: HTMLElement,
  state: ViewState,
  callbacks: OverviewCallbacks,
): void {
  clear(container);
  const result = state.result;
  if (!result) {
    container.append(el("p", { class: "empty", text: "Run a query to see clusters." }));
    return;
  }
  if (result.clusters.length === 0) {
    container.append(
      el("p", {
        class: "empty",
        text: `No papers matched "${result.query.terms.join(", ")}".`,
      }),
    );
    return;
  }
  const visible = state.showAllClusters
    ? result.clusters
    : result.clusters.slice(0, OVERVIEW_CARD_LIMIT);
  const grid = el("div", { class: "card-grid" });
  for (const tab of visible) {
    grid.append(card(tab, callbacks));
  }
  container.append(grid);
  if (result.clusters.length > OVERVIEW_CARD_LIMIT) {
    const label = state.showAllClusters
      ? "Show fewer"
      : `Show all (${result.clusters.length})`;
    const button = el("button", { class: "show-all", text: label });
    button.addEventListener("click", () => callbacks.onToggleShowAll());
    container.append(button);
  }
}
