// Per-cluster paper tabs with 10-papers-per-page pagination.

import { clear, clusterColor, clusterName, el } from "./dom.js";
import { PAGE_SIZE, ViewState, pageFor } from "./state.js";
import type { ClusterTab } from "./types.js";

export interface TabsCallbacks {
  onSelectTab: (tabId: number) => void;
  onSetPage: (tabId: number, page: number) => void;
}

function paperRow(paper: ClusterTab["papers"][number]): HTMLElement {
  return el("li", { class: "paper", "data-index": String(paper.index) }, [
    el("a", { href: paper.url, target: "_blank", rel: "noopener", text: paper.title }),
    el("div", { class: "meta", text: `${paper.authors.join(", ")} · ${paper.published} · ${paper.categories.join(" ")}` }),
    el("p", { class: "abstract", text: paper.abstract }),
  ]);
}

export function renderTabs(
  container: HTMLElement,
  state: ViewState,
  callbacks: TabsCallbacks,
): void {
  clear(container);
  const result = state.result;
  if (!result || result.clusters.length === 0) return;

  const bar = el("div", { class: "tab-bar", role: "tablist" });
  for (const tab of result.clusters) {
    const selected = state.selectedTab === tab.id;
    const button = el(
      "button",
      {
        class: selected ? "tab selected" : "tab",
        role: "tab",
        "data-tab": String(tab.id),
        "aria-selected": String(selected),
      },
      [
        el("span", { class: "swatch", style: `background:${clusterColor(tab.id)}` }),
        el("span", { text: `${clusterName(tab.id)} (${tab.size})` }),
      ],
    );
    button.addEventListener("click", () => callbacks.onSelectTab(tab.id));
    bar.append(button);
  }
  container.append(bar);

  const active = result.clusters.find((c) => c.id === state.selectedTab);
  if (!active) return;
  const page = pageFor(state, active.id);
  const pageCount = Math.max(1, Math.ceil(active.papers.length / PAGE_SIZE));
  const slice = active.papers.slice(page * PAGE_SIZE, (page + 1) * PAGE_SIZE);

  const panel = el("div", { class: "tab-panel", role: "tabpanel", "data-tab": String(active.id) });
  panel.append(
    el("ul", { class: "paper-list" }, slice.map(paperRow)),
  );

  const pager = el("div", { class: "pager" });
  const prev = el("button", { text: "‹ prev", class: "page-btn" });
  const next = el("button", { text: "next ›", class: "page-btn" });
  if (page === 0) prev.setAttribute("disabled", "true");
  if (page >= pageCount - 1) next.setAttribute("disabled", "true");
  prev.addEventListener("click", () => callbacks.onSetPage(active.id, page - 1));
  next.addEventListener("click", () => callbacks.onSetPage(active.id, page + 1));
  pager.append(
    prev,
    el("span", { class: "page-info", text: `page ${page + 1} / ${pageCount}` }),
    next,
  );
  panel.append(pager);
  container.append(panel);
}
