// Application shell: exercise picker, session screen, submit/reveal flow.
//
// The server is authoritative: every view renders from the latest snapshot,
// one mutation is in flight at a time, and reloading mid-session re-fetches
// the snapshot (the session id travels in the location hash).

import { ApiClient, ApiError, NetworkFailure } from "./api.js";
import { maker } from "./dom.js";
import { renderEditor } from "./editors.js";
import { initialState, type AppState } from "./state.js";
import type { SubmitBody } from "./types.js";
import { renderFeedbackItem } from "./views.js";

export class App {
  readonly doc: Document;
  readonly el: ReturnType<typeof maker>;
  state: AppState = initialState();
  drafts = new Map<string, Record<string, unknown>>();
  private lastBody: SubmitBody | null = null;
  private exercises: Array<{ id: string; title: string; description: string }> = [];

  constructor(
    readonly root: HTMLElement,
    readonly api: ApiClient,
    private readonly onHashChange: (hash: string) => void = () => {},
  ) {
    this.doc = root.ownerDocument;
    this.el = maker(this.doc);
  }

  async start(hash: string = ""): Promise<void> {
    const match = hash.match(/#s=([A-Za-z0-9_-]+)/);
    if (match) {
      try {
        this.state.session = await this.api.getSession(match[1]);
        this.state.view = "session";
        this.render();
        return;
      } catch {
        // stale hash: fall through to the picker
      }
    }
    this.exercises = await this.api.listExercises();
    this.state.view = "picker";
    this.render();
  }

  draftFor(taskId: string): Record<string, unknown> {
    let draft = this.drafts.get(taskId);
    if (!draft) {
      draft = {};
      this.drafts.set(taskId, draft);
    }
    return draft;
  }

  async openExercise(id: string): Promise<void> {
    this.state.session = await this.api.createSession(id);
    this.state.view = "session";
    this.state.error = null;
    this.state.retry = false;
    this.onHashChange(`#s=${this.state.session.session_id}`);
    this.render();
  }

  async submit(body: SubmitBody): Promise<void> {
    const session = this.state.session;
    if (!session || this.state.busy) return;
    this.state.busy = true;
    this.lastBody = body;
    this.render();
    try {
      const response = await this.api.submit(session.session_id, body);
      this.state.session = response.session;
      this.state.error = null;
      this.state.retry = false;
      if (response.transition.kind !== "stay") {
        this.drafts.clear(); // fresh task, fresh scratch
      }
    } catch (error) {
      if (error instanceof NetworkFailure) {
        this.state.retry = true; // the draft is preserved for a retry
      } else if (error instanceof ApiError) {
        this.state.error = `${error.body.code}: ${error.body.message}`;
      } else {
        this.state.error = String(error);
      }
    } finally {
      this.state.busy = false;
      this.render();
    }
  }

  async retryLast(): Promise<void> {
    if (this.lastBody) {
      this.state.retry = false;
      await this.submit(this.lastBody);
    }
  }

  async uncover(): Promise<void> {
    const session = this.state.session;
    if (!session || this.state.busy) return;
    this.state.busy = true;
    try {
      const response = await this.api.reveal(session.session_id);
      if (response.item) session.feedback.push(response.item);
      session.has_more_feedback = response.has_more_feedback;
      this.state.error = null;
    } catch (error) {
      if (error instanceof NetworkFailure) this.state.retry = true;
      else this.state.error = String(error);
    } finally {
      this.state.busy = false;
      this.render();
    }
  }

  render(): void {
    const { el } = this;
    this.root.textContent = "";
    if (this.state.view === "picker") {
      const list = el("div", { class: "exercise-list" });
      for (const exercise of this.exercises) {
        list.append(
          el(
            "div",
            { class: "exercise-card" },
            el("h2", {}, exercise.title),
            el("p", {}, exercise.description),
            el(
              "button",
              {
                type: "button",
                class: "open-exercise",
                "data-exercise": exercise.id,
                onclick: () => void this.openExercise(exercise.id),
              },
              "Start",
            ),
          ),
        );
      }
      this.root.append(el("h1", {}, "logicbench"), list);
      return;
    }
    const session = this.state.session;
    if (!session) return;
    const header = el(
      "header",
      {},
      el("h1", {}, session.title),
      el("p", { class: "description" }, session.description),
    );
    this.root.append(header);

    if (this.state.retry) {
      this.root.append(
        el(
          "div",
          { class: "banner retry-banner" },
          "Network problem - your input is preserved. ",
          el(
            "button",
            { type: "button", class: "retry", onclick: () => void this.retryLast() },
            "Retry",
          ),
        ),
      );
    }
    if (this.state.error) {
      this.root.append(el("div", { class: "banner error-banner" }, this.state.error));
    }

    if (session.status === "finished") {
      this.root.append(el("div", { class: "finished" }, "Exercise complete."));
    } else if (session.current_task) {
      const task = session.current_task;
      this.root.append(
        renderEditor({
          doc: this.doc,
          el: this.el,
          task,
          draft: this.draftFor(task.id),
          submit: (body) => void this.submit(body),
          submitRender: () => this.render(),
        }),
      );
    }

    const feedback = el("div", { class: "feedback-panel" });
    for (const item of session.feedback) {
      feedback.append(renderFeedbackItem(this.doc, this.el, item));
    }
    feedback.append(
      el(
        "button",
        {
          type: "button",
          class: "uncover",
          ...(session.has_more_feedback ? {} : { disabled: true }),
          onclick: () => void this.uncover(),
        },
        "Uncover more feedback",
      ),
    );
    this.root.append(feedback);
  }
}
