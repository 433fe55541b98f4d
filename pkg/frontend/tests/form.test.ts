import { beforeEach, describe, expect, it } from "vitest";

import { exploreCalls, makeResult, mountWithStub, settle, stubService } from "./helpers.js";
import type { ExploreRequestBody } from "../src/types.js";

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("search panel", () => {
  it("valid form posts a body matching the API schema", async () => {
    const stub = stubService(makeResult(3));
    const { app } = mountWithStub(stub);
    app.state.form.terms = "large language models, agents";
    app.state.form.category = "cs";
    app.state.form.dateFrom = "2024-04";
    app.state.form.dateTo = "2026-04";
    app.state.form.maxResults = 120;
    await app.submit();
    await settle();

    const calls = exploreCalls(stub);
    expect(calls.length).toBe(1);
    const body = calls[0].body as ExploreRequestBody;
    expect(body.query).toEqual({
      terms: ["large language models", "agents"],
      category: "cs",
      date_start: "2024-04-01",
      date_end: "2026-04-30",
      sort: "relevance",
      max_results: 120,
    });
    expect(body.config.mode).toBe("automatic");
    expect(body.config.max_results).toBe(120);
  });

  it("empty terms block submission with an inline message and no request", async () => {
    const stub = stubService(makeResult(3));
    const { app, root } = mountWithStub(stub);
    app.state.form.terms = "   ";
    await app.submit();
    expect(exploreCalls(stub).length).toBe(0);
    expect(root.querySelector(".field.invalid .issue")?.textContent).toContain(
      "at least one phrase",
    );
  });

  it("max-results outside 20..500 blocks submission", async () => {
    const stub = stubService(makeResult(3));
    const { app } = mountWithStub(stub);
    app.state.form.terms = "x";
    app.state.form.maxResults = 700;
    await app.submit();
    expect(exploreCalls(stub).length).toBe(0);
  });

  it("K slider is disabled in automatic mode and enabled in user mode", async () => {
    const stub = stubService(makeResult(3));
    const { app, root } = mountWithStub(stub);
    let slider = root.querySelector("#k-slider") as HTMLInputElement;
    expect(slider.hasAttribute("disabled")).toBe(true);
    app.onFormChange({ mode: "user_controlled" });
    slider = root.querySelector("#k-slider") as HTMLInputElement;
    expect(slider.hasAttribute("disabled")).toBe(false);
  });

  it("user mode includes k in the request config", async () => {
    const stub = stubService(makeResult(5));
    const { app } = mountWithStub(stub);
    app.state.form.terms = "x";
    app.state.form.mode = "user_controlled";
    app.state.form.k = 5;
    await app.submit();
    await settle();
    const body = exploreCalls(stub)[0].body as ExploreRequestBody;
    expect(body.config).toMatchObject({ mode: "user_controlled", k: 5 });
  });

  it("changing K re-requests exactly once and keeps the old result until the new arrives", async () => {
    const stub = stubService(makeResult(4));
    const { app } = mountWithStub(stub);
    app.state.form.terms = "x";
    app.state.form.mode = "user_controlled";
    app.state.form.k = 4;
    await app.submit();
    await settle();
    expect(exploreCalls(stub).length).toBe(1);
    const firstResult = app.state.result;
    expect(firstResult).not.toBeNull();

    const release = stub.holdNext();
    stub.respondWith(makeResult(6));
    app.onFormChange({ k: 6 });
    expect(exploreCalls(stub).length).toBe(2); // exactly one new request
    // Old result still on screen while the request is held open.
    expect(app.state.result).toBe(firstResult);
    expect(app.state.loading).toBe(true);

    release();
    await settle();
    expect(exploreCalls(stub).length).toBe(2);
    expect(app.state.result?.n_clusters).toBe(6);
  });

  it("K changes in automatic mode do not issue requests", async () => {
    const stub = stubService(makeResult(4));
    const { app } = mountWithStub(stub);
    app.state.form.terms = "x";
    await app.submit();
    await settle();
    expect(exploreCalls(stub).length).toBe(1);
    app.onFormChange({ k: 9 });
    await settle();
    expect(exploreCalls(stub).length).toBe(1);
  });

  it("a stage error renders a banner naming the stage", async () => {
    const stub = stubService(makeResult(3));
    stub.failWith(500, { stage: "represent", error: "endpoint unreachable" });
    const { app, root } = mountWithStub(stub);
    app.state.form.terms = "x";
    await app.submit();
    await settle();
    const banner = root.querySelector(".error-banner");
    expect(banner?.textContent).toContain("represent");
    expect(banner?.textContent).toContain("endpoint unreachable");
    expect(app.state.result).toBeNull();
  });

  it("stale responses are discarded by sequence number", async () => {
    const stub = stubService(makeResult(3));
    const { app } = mountWithStub(stub);
    app.state.form.terms = "x";

    const releaseFirst = stub.holdNext();
    const first = app.submit(); // held open
    stub.respondWith(makeResult(7));
    const second = app.submit(); // newer request wins
    await second;
    stub.respondWith(makeResult(3));
    releaseFirst();
    await first;
    await settle();
    expect(app.state.result?.n_clusters).toBe(7);
  });
});
