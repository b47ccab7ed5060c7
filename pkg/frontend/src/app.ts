import { ApiClient, SessionLostError } from "./api.js";
import { renderGraph } from "./render.js";
import { answerWidget, type AnswerWidget } from "./widgets.js";
import { isDone, type GradeReport, type QuestionView } from "./types.js";

const TASK_HINTS: Record<string, string> = {
  dijkstra: "Shortest-path distances from the highlighted source.",
  "bellman-ford": "Shortest-path distances from the highlighted source.",
  "dag-shortest-path": "Pick a topological order, then the distances from the source, in that order.",
  "topological-order": "Give any valid topological order.",
  bfs: "Breadth-first visit order from the highlighted root (ascending neighbors).",
  dfs: "Depth-first visit order from the highlighted root (ascending neighbors).",
  kruskal: "Build a minimum spanning tree, cheapest edges first.",
  prim: "Grow a minimum spanning tree from the highlighted start vertex.",
  "ff-iteration": "One max-flow iteration: the next augmenting path and its bottleneck.",
  "flow-validity": "Is the given flow assignment valid for this network?",
  "residual-graph": "Give the arcs of the residual graph for the shown flow.",
  planarity: "Can this graph be drawn without crossing edges?",
  "connectivity-count": "How many connected components?",
  "chromatic-number": "Minimum number of colors for a proper coloring?",
  "subgraph-presence": "Does the pattern embed into the graph?",
  "degree-question": "What is the maximum degree?",
  "eulerian-classification": "Eulerian circuit, path, or neither?",
};

function describe(view: QuestionView): string {
  const q = view.question;
  if (q.kind.startsWith("tf-")) return String(q.prompt["statement"] ?? "");
  let text = TASK_HINTS[q.kind] ?? q.kind;
  if (q.kind === "ff-iteration" || q.kind === "flow-validity" || q.kind === "residual-graph") {
    const flows = q.prompt["flows"] as number[] | undefined;
    if (flows) text += ` Current flow per arc: [${flows.join(", ")}].`;
  }
  if (q.kind === "subgraph-presence") {
    text += ` Pattern: ${String(q.prompt["pattern_name"])}.`;
  }
  return text;
}

/** The quiz loop: fetch question, collect an answer, submit, show the
 *  per-part verdicts, retry or advance. All grading happens server-side. */
export class QuizApp {
  private session: string | null = null;
  private view: QuestionView | null = null;
  private widget: AnswerWidget | null = null;
  private lastReport: GradeReport | null = null;

  readonly statusLine: HTMLElement;
  readonly questionArea: HTMLElement;
  readonly feedbackArea: HTMLElement;
  readonly submitButton: HTMLButtonElement;
  readonly nextButton: HTMLButtonElement;
  readonly banner: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly doc: Document = root.ownerDocument,
  ) {
    this.statusLine = this.doc.createElement("p");
    this.statusLine.className = "status-line";
    this.questionArea = this.doc.createElement("div");
    this.questionArea.className = "question-area";
    this.feedbackArea = this.doc.createElement("div");
    this.feedbackArea.className = "feedback-area";
    this.banner = this.doc.createElement("div");
    this.banner.className = "banner hidden";
    this.submitButton = this.doc.createElement("button");
    this.submitButton.className = "submit";
    this.submitButton.textContent = "submit answer";
    this.submitButton.addEventListener("click", () => void this.submit());
    this.nextButton = this.doc.createElement("button");
    this.nextButton.className = "next";
    this.nextButton.textContent = "next question";
    this.nextButton.disabled = true;
    this.nextButton.addEventListener("click", () => void this.next());
    root.append(this.banner, this.statusLine, this.questionArea,
                this.submitButton, this.nextButton, this.feedbackArea);
  }

  get currentView(): QuestionView | null {
    return this.view;
  }

  async start(bankId: string): Promise<void> {
    const created = await this.api.createSession(bankId);
    this.session = created.session;
    await this.loadQuestion();
  }

  async loadQuestion(): Promise<void> {
    if (!this.session) throw new Error("no session");
    const resp = await this.api.getQuestion(this.session);
    this.questionArea.replaceChildren();
    this.feedbackArea.replaceChildren();
    this.lastReport = null;
    this.hideBanner();
    if (isDone(resp)) {
      await this.showSummary();
      return;
    }
    this.view = resp;
    const q = resp.question;
    this.statusLine.textContent = `question ${resp.index + 1} of ${resp.total} (${q.kind})`;

    const prompt = this.doc.createElement("p");
    prompt.className = "prompt";
    prompt.textContent = describe(resp);
    this.questionArea.appendChild(prompt);

    this.widget = answerWidget(this.doc, q);
    const drawing = renderGraph(this.doc, q, {
      onVertexClick: (v) => this.widget?.onVertexClick?.(v),
    });
    this.questionArea.appendChild(drawing);
    this.questionArea.appendChild(this.widget.element);
    this.submitButton.disabled = false;
    this.nextButton.disabled = true;
  }

  async submit(): Promise<void> {
    if (!this.session || !this.widget) return;
    const answer = this.widget.read();
    if (answer === null) {
      this.showBanner("complete the answer before submitting", false);
      return;
    }
    this.hideBanner();
    let resp;
    try {
      resp = await this.api.submitAnswer(this.session, answer);
    } catch (err) {
      if (err instanceof SessionLostError) {
        this.showSessionLost();
      } else {
        // network trouble: keep the draft, offer a retry
        this.showBanner("could not reach the server - your answer is kept, try again", true);
      }
      return;
    }
    this.lastReport = resp.report;
    this.widget.clearFeedback();
    this.widget.showFeedback(resp.report);
    this.renderFeedback(resp.report, resp.best_mark, resp.score);
    if (resp.best_mark >= 1.0) {
      this.nextButton.disabled = false; // advance unlocks on full marks
    }
  }

  private renderFeedback(report: GradeReport, bestMark: number, score: number): void {
    this.feedbackArea.replaceChildren();
    const headline = this.doc.createElement("p");
    headline.className = "mark-line";
    headline.textContent = `mark ${report.mark} (best ${bestMark}) - total score ${score}`;
    this.feedbackArea.appendChild(headline);
    const list = this.doc.createElement("ul");
    list.className = "part-list";
    for (const part of report.results) {
      const item = this.doc.createElement("li");
      item.className = part.status === "pass" ? "part-pass" : "part-fail";
      item.setAttribute("data-part", part.name);
      item.textContent = part.feedback
        ? `${part.name}: ${part.status} (${part.feedback})`
        : `${part.name}: ${part.status}`;
      list.appendChild(item);
    }
    this.feedbackArea.appendChild(list);
  }

  async next(): Promise<void> {
    if (!this.session) return;
    try {
      await this.api.advance(this.session);
      await this.loadQuestion();
    } catch (err) {
      if (err instanceof SessionLostError) this.showSessionLost();
      else this.showBanner("could not reach the server - try again", true);
    }
  }

  async showSummary(): Promise<void> {
    if (!this.session) return;
    const summary = await this.api.summary(this.session);
    this.statusLine.textContent = `finished: score ${summary.score} over ${summary.total} questions`;
    this.submitButton.disabled = true;
    this.nextButton.disabled = true;
    const table = this.doc.createElement("table");
    table.className = "summary-table";
    for (const entry of summary.per_question) {
      const row = this.doc.createElement("tr");
      const cells = [String(entry.index + 1), `${entry.attempts} attempt(s)`, `best ${entry.best_mark}`];
      for (const text of cells) {
        const td = this.doc.createElement("td");
        td.textContent = text;
        row.appendChild(td);
      }
      table.appendChild(row);
    }
    this.questionArea.replaceChildren(table);
  }

  private showSessionLost(): void {
    this.showBanner("this session no longer exists on the server", false);
    const fresh = this.doc.createElement("button");
    fresh.className = "new-session";
    fresh.textContent = "start a new session";
    fresh.addEventListener("click", () => {
      this.root.dispatchEvent(new Event("graphquiz:new-session"));
    });
    this.banner.appendChild(fresh);
    this.submitButton.disabled = true;
    this.nextButton.disabled = true;
  }

  private showBanner(message: string, retryable: boolean): void {
    this.banner.replaceChildren();
    this.banner.classList.remove("hidden");
    this.banner.classList.toggle("retryable", retryable);
    const text = this.doc.createElement("span");
    text.textContent = message;
    this.banner.appendChild(text);
    if (retryable) {
      const retry = this.doc.createElement("button");
      retry.className = "retry";
      retry.textContent = "retry";
      retry.addEventListener("click", () => void this.submit());
      this.banner.appendChild(retry);
    }
  }

  private hideBanner(): void {
    this.banner.classList.add("hidden");
    this.banner.replaceChildren();
  }
}
