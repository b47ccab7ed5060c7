import type { GradeReport, QuestionPayload } from "./types.js";

/**
 * A kind-specific answer control. read() returns the answer object to
 * submit, or null while the draft is incomplete (submit stays blocked).
 */
export interface AnswerWidget {
  element: HTMLElement;
  read(): Record<string, unknown> | null;
  setEnabled(enabled: boolean): void;
  showFeedback(report: GradeReport): void;
  clearFeedback(): void;
  /** hook for the graph renderer: vertex clicks feed path/order pickers */
  onVertexClick?: (v: number) => void;
}

const BOOLEAN_FIELD: Record<string, string> = {
  planarity: "planar",
  "subgraph-presence": "contains",
  "flow-validity": "valid",
};

const NUMERIC_FIELD: Record<string, string> = {
  "connectivity-count": "components",
  "chromatic-number": "chromatic_number",
  "degree-question": "max_degree",
};

export function answerWidget(doc: Document, q: QuestionPayload): AnswerWidget {
  const kind = q.kind;
  if (kind === "dijkstra" || kind === "bellman-ford") return distancesWidget(doc, q);
  if (kind === "dag-shortest-path") return dagWidget(doc, q);
  if (kind === "topological-order") return orderWidget(doc, q, "order", "Build a topological order by clicking the vertices:");
  if (kind === "bfs" || kind === "dfs") return orderWidget(doc, q, "order", "Click the vertices in visit order:");
  if (kind === "kruskal" || kind === "prim") return edgeOrderWidget(doc, q);
  if (kind === "ff-iteration") return flowIterationWidget(doc, q);
  if (kind === "residual-graph") return residualWidget(doc, q);
  if (kind === "eulerian-classification") return choiceWidget(doc, "classification", ["circuit", "path", "none"]);
  if (kind.startsWith("tf-")) return toggleWidget(doc, "truth");
  if (kind in BOOLEAN_FIELD) return toggleWidget(doc, BOOLEAN_FIELD[kind]!);
  if (kind in NUMERIC_FIELD) return numericWidget(doc, NUMERIC_FIELD[kind]!);
  return unknownKindWidget(doc, kind);
}

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function wrongParts(report: GradeReport): Set<string> {
  return new Set(report.results.filter((r) => r.status !== "pass").map((r) => r.name));
}

/** "inf" (any case) or an integer; undefined when not parseable. */
export function parseDistance(raw: string): number | "inf" | undefined {
  const text = raw.trim();
  if (text === "") return undefined;
  if (text.toLowerCase() === "inf") return "inf";
  if (/^-?\d+$/.test(text)) return parseInt(text, 10);
  return undefined;
}

// -- per-vertex distances ------------------------------------------------------

function distancesWidget(doc: Document, q: QuestionPayload): AnswerWidget {
  const n = q.graph?.num_vertices ?? 0;
  const element = el(doc, "div", "widget widget-distances");
  element.appendChild(el(doc, "p", "hint", 'One distance per vertex; type "inf" for unreachable.'));
  const inputs: HTMLInputElement[] = [];
  const grid = el(doc, "div", "distance-grid");
  for (let v = 0; v < n; v++) {
    const row = el(doc, "label", "distance-row");
    row.appendChild(el(doc, "span", "distance-vertex", `vertex ${v}`));
    const input = doc.createElement("input");
    input.type = "text";
    input.setAttribute("data-part", `distance[${v}]`);
    row.appendChild(input);
    grid.appendChild(row);
    inputs.push(input);
  }
  element.appendChild(grid);
  return {
    element,
    read() {
      const values = inputs.map((i) => parseDistance(i.value));
      if (values.some((v) => v === undefined)) return null;
      return { distances: values as (number | "inf")[] };
    },
    setEnabled(enabled) {
      inputs.forEach((i) => (i.disabled = !enabled));
    },
    showFeedback(report) {
      const wrong = wrongParts(report);
      inputs.forEach((input) => {
        const part = input.getAttribute("data-part")!;
        input.classList.toggle("wrong", wrong.has(part));
        input.classList.toggle("right", !wrong.has(part));
      });
    },
    clearFeedback() {
      inputs.forEach((i) => i.classList.remove("wrong", "right"));
    },
  };
}

// -- click-to-order vertex sequences ---------------------------------------------

function orderWidget(doc: Document, q: QuestionPayload, field: string, hint: string): AnswerWidget {
  const n = q.graph?.num_vertices ?? 0;
  const element = el(doc, "div", "widget widget-order");
  element.appendChild(el(doc, "p", "hint", hint));
  const chosen: number[] = [];
  const sequence = el(doc, "p", "order-sequence", "(empty)");
  const buttons: HTMLButtonElement[] = [];
  const bar = el(doc, "div", "vertex-buttons");
  const requireAll = field === "order" && q.kind === "topological-order";

  const repaint = () => {
    sequence.textContent = chosen.length ? chosen.join(" → ") : "(empty)";
    buttons.forEach((b, v) => (b.disabled = chosen.includes(v)));
  };
  const pick = (v: number) => {
    if (!chosen.includes(v)) {
      chosen.push(v);
      repaint();
    }
  };
  for (let v = 0; v < n; v++) {
    const b = el(doc, "button", "vertex-pick", String(v));
    b.setAttribute("data-pick", String(v));
    b.addEventListener("click", () => pick(v));
    bar.appendChild(b);
    buttons.push(b);
  }
  const reset = el(doc, "button", "order-reset", "start over");
  reset.addEventListener("click", () => {
    chosen.length = 0;
    repaint();
  });
  element.appendChild(bar);
  element.appendChild(sequence);
  element.appendChild(reset);
  repaint();

  return {
    element,
    onVertexClick: pick,
    read() {
      if (chosen.length === 0) return null;
      if (requireAll && chosen.length !== n) return null;
      return { [field]: [...chosen] };
    },
    setEnabled(enabled) {
      buttons.forEach((b, v) => (b.disabled = !enabled || chosen.includes(v)));
      reset.disabled = !enabled;
    },
    showFeedback(report) {
      const wrong = wrongParts(report);
      sequence.classList.toggle("wrong", wrong.has(field));
      sequence.classList.toggle("right", !wrong.has(field));
    },
    clearFeedback() {
      sequence.classList.remove("wrong", "right");
    },
  };
}

// -- topological order + distances in that order ---------------------------------

function dagWidget(doc: Document, q: QuestionPayload): AnswerWidget {
  const n = q.graph?.num_vertices ?? 0;
  const order = orderWidget(doc, q, "order", "First pick a topological order:");
  const element = el(doc, "div", "widget widget-dag");
  element.appendChild(order.element);
  element.appendChild(el(doc, "p", "hint", "Then give the distance to each vertex, in your chosen order:"));
  const inputs: HTMLInputElement[] = [];
  const grid = el(doc, "div", "distance-grid");
  for (let i = 0; i < n; i++) {
    const row = el(doc, "label", "distance-row");
    row.appendChild(el(doc, "span", "distance-vertex", `position ${i}`));
    const input = doc.createElement("input");
    input.type = "text";
    input.setAttribute("data-part", `distance[${i}]`);
    row.appendChild(input);
    grid.appendChild(row);
    inputs.push(input);
  }
  element.appendChild(grid);
  return {
    element,
    onVertexClick: order.onVertexClick,
    read() {
      const head = order.read();
      if (head === null || (head.order as number[]).length !== n) return null;
      const values = inputs.map((i) => parseDistance(i.value));
      if (values.some((v) => v === undefined)) return null;
      return { order: head.order, distances: values as (number | "inf")[] };
    },
    setEnabled(enabled) {
      order.setEnabled(enabled);
      inputs.forEach((i) => (i.disabled = !enabled));
    },
    showFeedback(report) {
      order.showFeedback(report);
      const wrong = wrongParts(report);
      inputs.forEach((input) => {
        const part = input.getAttribute("data-part")!;
        input.classList.toggle("wrong", wrong.has(part));
        input.classList.toggle("right", !wrong.has(part));
      });
    },
    clearFeedback() {
      order.clearFeedback();
      inputs.forEach((i) => i.classList.remove("wrong", "right"));
    },
  };
}

// -- click-to-order edge list (kruskal / prim) ------------------------------------

function componentCount(n: number, edges: [number, number, number][]): number {
  const parent = Array.from({ length: n }, (_, i) => i);
  const find = (x: number): number => {
    while (parent[x] !== x) {
      parent[x] = parent[parent[x]!]!;
      x = parent[x]!;
    }
    return x;
  };
  let count = n;
  for (const [u, v] of edges) {
    const ru = find(u);
    const rv = find(v);
    if (ru !== rv) {
      parent[ru] = rv;
      count--;
    }
  }
  return count;
}

function edgeOrderWidget(doc: Document, q: QuestionPayload): AnswerWidget {
  const graph = q.graph!;
  const needed = graph.num_vertices - componentCount(graph.num_vertices, graph.edges);
  const element = el(doc, "div", "widget widget-edges");
  element.appendChild(
    el(doc, "p", "hint", `Click the tree edges in the order the algorithm takes them (${needed} needed):`),
  );
  const chosen: number[] = [];
  const sequence = el(doc, "p", "edge-sequence", "(empty)");
  const buttons: HTMLButtonElement[] = [];
  const bar = el(doc, "div", "edge-buttons");
  const repaint = () => {
    sequence.textContent = chosen.length
      ? chosen.map((i) => `${graph.edges[i]![0]}–${graph.edges[i]![1]}`).join(", ")
      : "(empty)";
    buttons.forEach((b, i) => (b.disabled = chosen.includes(i)));
  };
  graph.edges.forEach(([u, v, w], index) => {
    const b = el(doc, "button", "edge-pick", `${u}–${v} (${w})`);
    b.setAttribute("data-edge", String(index));
    b.addEventListener("click", () => {
      if (!chosen.includes(index)) {
        chosen.push(index);
        repaint();
      }
    });
    bar.appendChild(b);
    buttons.push(b);
  });
  const reset = el(doc, "button", "order-reset", "start over");
  reset.addEventListener("click", () => {
    chosen.length = 0;
    repaint();
  });
  element.appendChild(bar);
  element.appendChild(sequence);
  element.appendChild(reset);
  repaint();
  return {
    element,
    read() {
      if (chosen.length !== needed) return null;
      return { edges: chosen.map((i) => [graph.edges[i]![0], graph.edges[i]![1]]) };
    },
    setEnabled(enabled) {
      buttons.forEach((b, i) => (b.disabled = !enabled || chosen.includes(i)));
      reset.disabled = !enabled;
    },
    showFeedback(report) {
      const wrong = wrongParts(report);
      sequence.classList.toggle("wrong", wrong.has("tree"));
      sequence.classList.toggle("right", !wrong.has("tree"));
    },
    clearFeedback() {
      sequence.classList.remove("wrong", "right");
    },
  };
}

// -- one Ford-Fulkerson iteration --------------------------------------------------

function flowIterationWidget(doc: Document, q: QuestionPayload): AnswerWidget {
  const source = q.prompt["source"] as number;
  const sink = q.prompt["sink"] as number;
  const element = el(doc, "div", "widget widget-flow");
  element.appendChild(
    el(doc, "p", "hint", `Click the vertices of the next augmenting path, from ${source} to ${sink}:`),
  );
  const path: number[] = [source];
  const sequence = el(doc, "p", "path-sequence", String(source));
  const repaint = () => {
    sequence.textContent = path.join(" → ");
  };
  const pick = (v: number) => {
    if (!path.includes(v)) {
      path.push(v);
      repaint();
    }
  };
  const reset = el(doc, "button", "order-reset", "start over");
  reset.addEventListener("click", () => {
    path.length = 1;
    repaint();
  });
  const bottleneckRow = el(doc, "label", "bottleneck-row");
  bottleneckRow.appendChild(el(doc, "span", undefined, "bottleneck:"));
  const bottleneck = doc.createElement("input");
  bottleneck.type = "text";
  bottleneck.setAttribute("data-part", "bottleneck");
  bottleneckRow.appendChild(bottleneck);
  element.appendChild(sequence);
  element.appendChild(reset);
  element.appendChild(bottleneckRow);
  repaint();
  return {
    element,
    onVertexClick: pick,
    read() {
      if (path.length < 2 || path[path.length - 1] !== sink) return null;
      const b = parseDistance(bottleneck.value);
      if (b === undefined || b === "inf") return null;
      return { path: [...path], bottleneck: b };
    },
    setEnabled(enabled) {
      bottleneck.disabled = !enabled;
      reset.disabled = !enabled;
    },
    showFeedback(report) {
      const wrong = wrongParts(report);
      sequence.classList.toggle("wrong", wrong.has("path"));
      sequence.classList.toggle("right", !wrong.has("path"));
      bottleneck.classList.toggle("wrong", wrong.has("bottleneck"));
      bottleneck.classList.toggle("right", !wrong.has("bottleneck"));
    },
    clearFeedback() {
      sequence.classList.remove("wrong", "right");
      bottleneck.classList.remove("wrong", "right");
    },
  };
}

// -- residual arcs as a small text grid ---------------------------------------------

function residualWidget(doc: Document, q: QuestionPayload): AnswerWidget {
  const element = el(doc, "div", "widget widget-residual");
  element.appendChild(
    el(doc, "p", "hint", 'Residual arcs, one per line as "from to capacity":'),
  );
  const area = doc.createElement("textarea");
  area.rows = 8;
  area.setAttribute("data-part", "arcs");
  element.appendChild(area);
  return {
    element,
    read() {
      const lines = area.value.split("\n").map((l) => l.trim()).filter((l) => l.length > 0);
      if (lines.length === 0) return null;
      const arcs: number[][] = [];
      for (const line of lines) {
        const parts = line.split(/\s+/);
        if (parts.length !== 3 || parts.some((p) => !/^\d+$/.test(p))) return null;
        arcs.push(parts.map((p) => parseInt(p, 10)));
      }
      return { arcs };
    },
    setEnabled(enabled) {
      area.disabled = !enabled;
    },
    showFeedback(report) {
      const wrong = wrongParts(report);
      area.classList.toggle("wrong", wrong.has("arcs"));
      area.classList.toggle("right", !wrong.has("arcs"));
    },
    clearFeedback() {
      area.classList.remove("wrong", "right");
    },
  };
}

// -- simple scalar widgets ------------------------------------------------------------

function toggleWidget(doc: Document, field: string): AnswerWidget {
  const element = el(doc, "div", "widget widget-toggle");
  let value: boolean | null = null;
  const yes = el(doc, "button", "toggle-true", "true");
  const no = el(doc, "button", "toggle-false", "false");
  const repaint = () => {
    yes.classList.toggle("selected", value === true);
    no.classList.toggle("selected", value === false);
  };
  yes.addEventListener("click", () => {
    value = true;
    repaint();
  });
  no.addEventListener("click", () => {
    value = false;
    repaint();
  });
  element.appendChild(yes);
  element.appendChild(no);
  return {
    element,
    read: () => (value === null ? null : { [field]: value }),
    setEnabled(enabled) {
      yes.disabled = !enabled;
      no.disabled = !enabled;
    },
    showFeedback(report) {
      const wrong = wrongParts(report);
      element.classList.toggle("wrong", wrong.has(field));
      element.classList.toggle("right", !wrong.has(field));
    },
    clearFeedback() {
      element.classList.remove("wrong", "right");
    },
  };
}

function numericWidget(doc: Document, field: string): AnswerWidget {
  const element = el(doc, "div", "widget widget-numeric");
  const input = doc.createElement("input");
  input.type = "text";
  input.setAttribute("data-part", field);
  element.appendChild(input);
  return {
    element,
    read() {
      const v = parseDistance(input.value);
      if (v === undefined || v === "inf") return null;
      return { [field]: v };
    },
    setEnabled(enabled) {
      input.disabled = !enabled;
    },
    showFeedback(report) {
      const wrong = wrongParts(report);
      input.classList.toggle("wrong", wrong.has(field));
      input.classList.toggle("right", !wrong.has(field));
    },
    clearFeedback() {
      input.classList.remove("wrong", "right");
    },
  };
}

function choiceWidget(doc: Document, field: string, options: string[]): AnswerWidget {
  const element = el(doc, "div", "widget widget-choice");
  let value: string | null = null;
  const buttons = options.map((option) => {
    const b = el(doc, "button", "choice-option", option);
    b.addEventListener("click", () => {
      value = option;
      buttons.forEach((x) => x.classList.toggle("selected", x === b));
    });
    element.appendChild(b);
    return b;
  });
  return {
    element,
    read: () => (value === null ? null : { [field]: value }),
    setEnabled(enabled) {
      buttons.forEach((b) => (b.disabled = !enabled));
    },
    showFeedback(report) {
      const wrong = wrongParts(report);
      element.classList.toggle("wrong", wrong.has(field));
      element.classList.toggle("right", !wrong.has(field));
    },
    clearFeedback() {
      element.classList.remove("wrong", "right");
    },
  };
}

function unknownKindWidget(doc: Document, kind: string): AnswerWidget {
  const element = el(doc, "div", "widget widget-unknown");
  element.appendChild(
    el(doc, "p", "diagnostic", `This client cannot answer questions of kind "${kind}" yet; read-only view.`),
  );
  return {
    element,
    read: () => null,
    setEnabled() {},
    showFeedback() {},
    clearFeedback() {},
  };
}
