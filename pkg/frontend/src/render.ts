import { circularLayout, edgeLabelPos, VIEW_SIZE } from "./layout.js";
import type { GraphPayload, QuestionPayload } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface RenderHooks {
  onVertexClick?: (v: number) => void;
  onEdgeClick?: (index: number) => void;
}

function roleOf(q: QuestionPayload, name: string): number | null {
  const value = q.prompt[name];
  return typeof value === "number" ? value : null;
}

/**
 * Draw the question's graph as SVG: vertices on the deterministic circle,
 * weights on the edges, source/sink (or root/start) highlighted. Returns
 * a plain notice element when there is no graph to draw.
 */
export function renderGraph(
  doc: Document,
  q: QuestionPayload,
  hooks: RenderHooks = {},
): Element {
  const graph = q.graph;
  if (graph === null || graph.num_vertices === 0) {
    const notice = doc.createElement("p");
    notice.className = "empty-graph-notice";
    notice.textContent = "This question has no graph to draw.";
    return notice;
  }

  const svg = doc.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${VIEW_SIZE} ${VIEW_SIZE}`);
  svg.setAttribute("class", "graph-canvas");
  if (graph.directed) {
    const defs = doc.createElementNS(SVG_NS, "defs");
    const marker = doc.createElementNS(SVG_NS, "marker");
    marker.setAttribute("id", "arrow");
    marker.setAttribute("viewBox", "0 0 10 10");
    marker.setAttribute("refX", "22");
    marker.setAttribute("refY", "5");
    marker.setAttribute("markerWidth", "7");
    marker.setAttribute("markerHeight", "7");
    marker.setAttribute("orient", "auto-start-reverse");
    const tip = doc.createElementNS(SVG_NS, "path");
    tip.setAttribute("d", "M 0 0 L 10 5 L 0 10 z");
    marker.appendChild(tip);
    defs.appendChild(marker);
    svg.appendChild(defs);
  }

  const points = circularLayout(graph);
  const unitWeights = graph.edges.every(([, , w]) => w === 1);

  graph.edges.forEach(([u, v, w], index) => {
    const a = points[u]!;
    const b = points[v]!;
    const line = doc.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", a.x.toFixed(1));
    line.setAttribute("y1", a.y.toFixed(1));
    line.setAttribute("x2", b.x.toFixed(1));
    line.setAttribute("y2", b.y.toFixed(1));
    line.setAttribute("class", "edge");
    line.setAttribute("data-edge", String(index));
    if (graph.directed) line.setAttribute("marker-end", "url(#arrow)");
    if (hooks.onEdgeClick) {
      line.addEventListener("click", () => hooks.onEdgeClick!(index));
    }
    svg.appendChild(line);
    if (!unitWeights) {
      const pos = edgeLabelPos(a, b);
      const label = doc.createElementNS(SVG_NS, "text");
      label.setAttribute("x", pos.x.toFixed(1));
      label.setAttribute("y", pos.y.toFixed(1));
      label.setAttribute("class", "edge-weight");
      label.textContent = String(w);
      svg.appendChild(label);
    }
  });

  const source = roleOf(q, "source") ?? roleOf(q, "root") ?? roleOf(q, "start");
  const sink = roleOf(q, "sink");
  for (let v = 0; v < graph.num_vertices; v++) {
    const p = points[v]!;
    const group = doc.createElementNS(SVG_NS, "g");
    group.setAttribute("data-vertex", String(v));
    let klass = "vertex";
    if (v === source) klass += " role-source";
    if (v === sink) klass += " role-sink";
    group.setAttribute("class", klass);
    const circle = doc.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", p.x.toFixed(1));
    circle.setAttribute("cy", p.y.toFixed(1));
    circle.setAttribute("r", "14");
    const label = doc.createElementNS(SVG_NS, "text");
    label.setAttribute("x", p.x.toFixed(1));
    label.setAttribute("y", (p.y + 4).toFixed(1));
    label.setAttribute("class", "vertex-label");
    label.textContent = graph.labels?.[v] ?? String(v);
    group.appendChild(circle);
    group.appendChild(label);
    if (hooks.onVertexClick) {
      group.addEventListener("click", () => hooks.onVertexClick!(v));
    }
    svg.appendChild(group);
  }
  return svg;
}
