/** Wire types of the quiz session API (student mode: no answer keys). */

export interface GraphPayload {
  num_vertices: number;
  edges: [number, number, number][];
  directed: boolean;
  simple?: boolean;
  labels?: string[];
}

export interface QuestionPayload {
  id: string;
  kind: string;
  seed: number;
  graph: GraphPayload | null;
  prompt: Record<string, unknown>;
  language: string;
}

export interface QuestionEnvelope {
  index: number;
  total: number;
  question: QuestionPayload;
}

export interface SessionDone {
  done: true;
  index: number;
  total: number;
}

export type QuestionResponse = QuestionEnvelope | SessionDone;

export function isDone(r: QuestionResponse): r is SessionDone {
  return (r as SessionDone).done === true;
}

export interface PartResult {
  name: string;
  status: "pass" | "wrong-answer" | "protocol-error" | "timeout" | "crash";
  weight: number;
  visibility: string;
  feedback?: string;
  detail?: string;
}

export interface GradeReport {
  results: PartResult[];
  mark: string;
  mark_value: number;
  modified_input: boolean;
}

export interface AnswerResponse {
  index: number;
  report: GradeReport;
  best_mark: number;
  score: number;
}

export interface SummaryEntry {
  index: number;
  attempts: number;
  best_mark: number;
}

export interface SummaryResponse {
  session: string;
  bank: string;
  cursor: number;
  total: number;
  score: number;
  per_question: SummaryEntry[];
}

export interface BankInfo {
  id: string;
  size: number;
  kinds: string[];
  language: string;
}

/** One question as the UI holds it: payload plus local draft state. */
export interface QuestionView {
  index: number;
  total: number;
  question: QuestionPayload;
}
