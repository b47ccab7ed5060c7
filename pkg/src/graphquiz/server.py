"""HTTP quiz session service consumed by the web UI.

Endpoints (JSON bodies throughout):

    GET  /api/banks                        list available banks
    POST /api/sessions {"bank": id}        201 {"session": token, ...}
    GET  /api/sessions/{id}/question       current question, key stripped
    POST /api/sessions/{id}/answer         grade; report + running score
    POST /api/sessions/{id}/advance        move the cursor forward
    GET  /api/sessions/{id}/summary        best marks and total score
    GET  /api/banks/{id}/full              with keys; teacher secret gated

Sessions live in memory; with ``--persist`` every event is journalled to
an append-only JSON-lines file and replayed at startup (answers are
re-graded on replay, so scores stay reproducible).  Student-mode payloads
never contain answer keys or acceptance descriptors.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Header, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .export import bank_from_json
from .generate import QuestionBank
from .grading import grade_answer


@dataclass
class QuizSession:
    session_id: str
    bank_id: str
    cursor: int = 0
    # per question index: list of {answer, report, timestamp}
    attempts: dict[int, list[dict]] = field(default_factory=dict)
    best: dict[int, float] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def score(self) -> float:
        return sum(self.best.values())


def _student_question(bank: QuestionBank, index: int) -> dict:
    q = bank.instances[index]
    return {
        "index": index,
        "total": len(bank.instances),
        "question": q.to_dict(include_key=False),
    }


class QuizService:
    def __init__(self, bank_dir: Path, persist: Path | None = None, teacher_secret: str | None = None):
        self.bank_dir = Path(bank_dir)
        self.persist = Path(persist) if persist else None
        self.teacher_secret = teacher_secret
        self.banks: dict[str, QuestionBank] = {}
        self.sessions: dict[str, QuizSession] = {}
        self._journal_lock = threading.Lock()
        self._load_banks()
        if self.persist and self.persist.exists():
            self._replay_journal()

    def _load_banks(self) -> None:
        for path in sorted(self.bank_dir.glob("*.json")):
            try:
                self.banks[path.stem] = bank_from_json(path.read_text(encoding="utf-8"))
            except (ValueError, KeyError):
                continue  # not a bank file; ignore

    # -- persistence -----------------------------------------------------

    def _journal(self, event: dict) -> None:
        if not self.persist:
            return
        with self._journal_lock:
            with open(self.persist, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(event, sort_keys=True) + "\n")

    def _replay_journal(self) -> None:
        for line in self.persist.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            event = json.loads(line)
            kind = event["event"]
            if kind == "session":
                sid, bank_id = event["session"], event["bank"]
                if bank_id in self.banks:
                    self.sessions[sid] = QuizSession(sid, bank_id)
            elif kind == "answer":
                session = self.sessions.get(event["session"])
                if session is not None:
                    self._record_answer(session, event["index"], event["answer"],
                                        timestamp=event.get("timestamp"))
            elif kind == "advance":
                session = self.sessions.get(event["session"])
                if session is not None:
                    bank = self.banks[session.bank_id]
                    session.cursor = min(session.cursor + 1, len(bank.instances))

    # -- session operations ------------------------------------------------

    def create_session(self, bank_id: str) -> QuizSession:
        if bank_id not in self.banks:
            raise KeyError(bank_id)
        sid = secrets.token_urlsafe(12)
        session = QuizSession(sid, bank_id)
        self.sessions[sid] = session
        self._journal({"event": "session", "session": sid, "bank": bank_id})
        return session

    def _record_answer(self, session: QuizSession, index: int, answer, timestamp=None) -> dict:
        bank = self.banks[session.bank_id]
        question = bank.instances[index]
        report = grade_answer(question, answer)
        entry = {
            "answer": answer,
            "report": report.to_dict(redact_hidden=True),
            "timestamp": timestamp or datetime.now(timezone.utc).isoformat(),
        }
        session.attempts.setdefault(index, []).append(entry)
        mark = float(report.mark)
        session.best[index] = max(session.best.get(index, 0.0), mark)
        return entry

    def answer(self, sid: str, index: int | None, answer) -> dict:
        session = self._session(sid)
        bank = self.banks[session.bank_id]
        with session.lock:
            if index is None:
                index = session.cursor
            if not 0 <= index < len(bank.instances):
                raise IndexError(index)
            entry = self._record_answer(session, index, answer)
            self._journal({"event": "answer", "session": sid, "index": index,
                           "answer": answer, "timestamp": entry["timestamp"]})
            return {
                "index": index,
                "report": entry["report"],
                "best_mark": session.best[index],
                "score": session.score(),
            }

    def advance(self, sid: str) -> dict:
        session = self._session(sid)
        bank = self.banks[session.bank_id]
        with session.lock:
            session.cursor = min(session.cursor + 1, len(bank.instances))
            self._journal({"event": "advance", "session": sid})
            return {"cursor": session.cursor, "done": session.cursor >= len(bank.instances)}

    def _session(self, sid: str) -> QuizSession:
        try:
            return self.sessions[sid]
        except KeyError:
            raise KeyError(sid) from None


def create_app(bank_dir, persist=None, teacher_secret: str | None = None) -> FastAPI:
    service = QuizService(Path(bank_dir), Path(persist) if persist else None, teacher_secret)
    app = FastAPI(title="graphquiz", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.service = service

    def get_session(sid: str) -> QuizSession:
        try:
            return service._session(sid)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown session")

    @app.get("/api/banks")
    def list_banks():
        return [
            {
                "id": bank_id,
                "size": len(bank.instances),
                "kinds": sorted({q.kind for q in bank.instances}),
                "language": bank.metadata.get("language", "en"),
            }
            for bank_id, bank in sorted(service.banks.items())
        ]

    @app.get("/api/banks/{bank_id}/full")
    def full_bank(bank_id: str, x_teacher_secret: str | None = Header(default=None)):
        if not service.teacher_secret or x_teacher_secret != service.teacher_secret:
            raise HTTPException(status_code=403, detail="teacher endpoints are gated")
        bank = service.banks.get(bank_id)
        if bank is None:
            raise HTTPException(status_code=404, detail="unknown bank")
        return bank.to_dict(include_keys=True)

    @app.post("/api/sessions", status_code=201)
    def create_session(body: dict):
        bank_id = body.get("bank")
        try:
            session = service.create_session(bank_id)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown bank")
        return {
            "session": session.session_id,
            "bank": bank_id,
            "size": len(service.banks[bank_id].instances),
        }

    @app.get("/api/sessions/{sid}/question")
    def get_question(sid: str, index: int | None = None):
        session = get_session(sid)
        bank = service.banks[session.bank_id]
        at = session.cursor if index is None else index
        if at >= len(bank.instances):
            return {"done": True, "index": len(bank.instances), "total": len(bank.instances)}
        if at < 0:
            raise HTTPException(status_code=400, detail="index out of range")
        return _student_question(bank, at)

    @app.post("/api/sessions/{sid}/answer")
    def post_answer(sid: str, body: dict):
        session = get_session(sid)
        if "answer" not in body:
            raise HTTPException(status_code=400, detail="body needs an 'answer' field")
        try:
            return service.answer(sid, body.get("index"), body["answer"])
        except IndexError:
            raise HTTPException(status_code=400, detail="question index out of range")

    @app.post("/api/sessions/{sid}/advance")
    def post_advance(sid: str):
        get_session(sid)
        return service.advance(sid)

    @app.get("/api/sessions/{sid}/summary")
    def summary(sid: str):
        session = get_session(sid)
        bank = service.banks[session.bank_id]
        return {
            "session": session.session_id,
            "bank": session.bank_id,
            "cursor": session.cursor,
            "total": len(bank.instances),
            "score": session.score(),
            "per_question": [
                {
                    "index": i,
                    "attempts": len(session.attempts.get(i, [])),
                    "best_mark": session.best.get(i, 0.0),
                }
                for i in range(len(bank.instances))
            ],
        }

    @app.get("/healthz")
    def health():
        return {"ok": True, "banks": len(service.banks)}

    return app


def serve(bank_dir, host: str = "127.0.0.1", port: int = 8470,
          persist=None, teacher_secret: str | None = None) -> None:
    import uvicorn

    app = create_app(bank_dir, persist, teacher_secret)
    uvicorn.run(app, host=host, port=port, log_level="warning")
