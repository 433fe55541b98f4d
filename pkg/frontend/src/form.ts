// Search panel: terms, category, date range, sort, fetch-cap slider,
// mode toggle with a K slider that only applies in user-controlled mode.

import { clear, el } from "./dom.js";
import {
  FormState,
  MAX_RESULTS_MAX,
  MAX_RESULTS_MIN,
  ValidationIssue,
  ViewState,
} from "./state.js";
import type { Preset } from "./types.js";

export interface FormCallbacks {
  onSubmit: () => void;
  onChange: (patch: Partial<FormState>) => void;
  onPreset: (preset: Preset) => void;
}

export function renderForm(
  container: HTMLElement,
  state: ViewState,
  issues: ValidationIssue[],
  presets: Preset[],
  callbacks: FormCallbacks,
): void {
  clear(container);
  const form = el("form", { class: "search-panel", novalidate: "true" });
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    callbacks.onSubmit();
  });
  const issueFor = (field: string) =>
    issues.find((issue) => issue.field === field)?.message;

  const termsInput = el("input", {
    id: "terms",
    type: "text",
    value: state.form.terms,
    placeholder: "comma-separated phrases, e.g. large language models",
  });
  termsInput.addEventListener("input", () =>
    callbacks.onChange({ terms: termsInput.value }),
  );
  form.append(field("Search terms", termsInput, issueFor("terms")));

  const categoryInput = el("input", {
    id: "category",
    type: "text",
    value: state.form.category,
    placeholder: "arXiv category, e.g. cs or q-fin.PM",
  });
  categoryInput.addEventListener("input", () =>
    callbacks.onChange({ category: categoryInput.value }),
  );
  form.append(field("Category", categoryInput));

  const fromInput = el("input", { id: "date-from", type: "month", value: state.form.dateFrom });
  fromInput.addEventListener("input", () => callbacks.onChange({ dateFrom: fromInput.value }));
  const toInput = el("input", { id: "date-to", type: "month", value: state.form.dateTo });
  toInput.addEventListener("input", () => callbacks.onChange({ dateTo: toInput.value }));
  form.append(field("From", fromInput, issueFor("dates")));
  form.append(field("To", toInput));

  const sortSelect = el("select", { id: "sort" }, [
    el("option", { value: "relevance", text: "relevance" }),
    el("option", { value: "submitted_date", text: "submitted date" }),
  ]);
  (sortSelect as HTMLSelectElement).value = state.form.sort;
  sortSelect.addEventListener("change", () =>
    callbacks.onChange({ sort: (sortSelect as HTMLSelectElement).value as FormState["sort"] }),
  );
  form.append(field("Sort by", sortSelect));

  const maxSlider = el("input", {
    id: "max-results",
    type: "range",
    min: String(MAX_RESULTS_MIN),
    max: String(MAX_RESULTS_MAX),
    step: "10",
    value: String(state.form.maxResults),
  });
  maxSlider.addEventListener("input", () =>
    callbacks.onChange({ maxResults: Number(maxSlider.value) }),
  );
  form.append(
    field(
      `Max results: ${state.form.maxResults}`,
      maxSlider,
      issueFor("maxResults"),
    ),
  );

  const modeWrap = el("div", { class: "mode-toggle" });
  for (const mode of ["automatic", "user_controlled"] as const) {
    const id = `mode-${mode}`;
    const radio = el("input", { id, type: "radio", name: "mode", value: mode });
    (radio as HTMLInputElement).checked = state.form.mode === mode;
    radio.addEventListener("change", () => callbacks.onChange({ mode }));
    modeWrap.append(
      radio,
      el("label", { for: id, text: mode === "automatic" ? "automatic" : "user-controlled" }),
    );
  }
  form.append(field("Clustering mode", modeWrap));

  const kSlider = el("input", {
    id: "k-slider",
    type: "range",
    min: "2",
    max: "15",
    step: "1",
    value: String(state.form.k),
  });
  if (state.form.mode !== "user_controlled") {
    kSlider.setAttribute("disabled", "true");
  }
  kSlider.addEventListener("input", () =>
    callbacks.onChange({ k: Number(kSlider.value) }),
  );
  const suggestion =
    state.result && state.form.mode === "user_controlled"
      ? ` (suggested: ${state.result.suggested_k})`
      : "";
  form.append(
    field(`Clusters K: ${state.form.k}${suggestion}`, kSlider, issueFor("k")),
  );

  if (presets.length) {
    const select = el("select", { id: "preset" }, [
      el("option", { value: "", text: "– preset queries –" }),
      ...presets.map((p) =>
        el("option", { value: p.id, text: `${p.area}: ${p.topic}` }),
      ),
    ]);
    select.addEventListener("change", () => {
      const chosen = presets.find((p) => p.id === (select as HTMLSelectElement).value);
      if (chosen) callbacks.onPreset(chosen);
    });
    form.append(field("Presets", select));
  }

  const submit = el("button", {
    type: "submit",
    class: "submit",
    text: state.loading ? "Exploring…" : "Explore",
  });
  if (state.loading) submit.setAttribute("disabled", "true");
  form.append(submit);
  if (state.loading) {
    form.append(el("span", { class: "spinner", text: "⌛" }));
  }
  container.append(form);
}

function field(label: string, control: HTMLElement, issue?: string): HTMLElement {
  const wrap = el("div", { class: issue ? "field invalid" : "field" }, [
    el("label", { text: label }),
    control,
  ]);
  if (issue) {
    wrap.append(el("span", { class: "issue", text: issue }));
  }
  return wrap;
}
