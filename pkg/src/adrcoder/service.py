"""HTTP service: encoding endpoint plus the human review workflow.

A review session freezes one encoding proposal, collects per-term
decisions (accept / reject / replace), and on validation produces the
final term set.  Sessions persist as append-only JSON-lines event logs,
one file per session, fsynced before a write is acknowledged; state is
rebuilt by replaying the log, so a restart loses nothing.
"""

from __future__ import annotations

import json
import os
import re
import threading
import uuid
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterator, Optional

from fastapi import Body, FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .config import AppConfig, load_config
from .dictionary import Term, TermDictionary
from .encoder import encode
from .textprep import word_spans

_SESSION_ID = re.compile(r"^[0-9a-f]{32}$")
_ACTIONS = ("accept", "reject", "replace")


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="milliseconds")


def _term_payload(term: Term) -> dict:
    return {
        "llt_code": term.llt_code,
        "llt_text": term.llt_text,
        "pt_code": term.pt_code,
        "pt_text": term.pt_text,
    }


# ---------------------------------------------------------------------------
# session store
# ---------------------------------------------------------------------------

@dataclass
class Session:
    """Replayed state of one review session."""

    session_id: str
    description: str
    created_at: str
    dictionary_version: str
    proposal: dict
    decisions: list[dict] = field(default_factory=list)
    status: str = "open"
    validated_at: Optional[str] = None
    final_set: Optional[list[dict]] = None

    def effective_decisions(self) -> dict[str, dict]:
        """Latest decision per target; earlier ones are audit history."""
        latest: dict[str, dict] = {}
        for decision in self.decisions:
            latest[decision["target_llt_code"]] = decision
        return latest

    def displayed_codes(self) -> list[str]:
        return [entry["llt_code"] for entry in self.proposal["selected"]]

    def as_payload(self) -> dict:
        return {
            "session_id": self.session_id,
            "status": self.status,
            "created_at": self.created_at,
            "validated_at": self.validated_at,
            "dictionary_version": self.dictionary_version,
            "description": self.description,
            "proposal": self.proposal,
            "decisions": list(self.decisions),
            "final_set": self.final_set,
        }


class SessionStore:
    """One JSON-lines event log per session under data_dir/sessions.

    Every append is flushed and fsynced before the caller proceeds, so
    an acknowledged decision survives a crash.  An index file lists the
    session ids in creation order.  Mutations happen only inside
    ``transact``, which serializes writers per session.
    """

    def __init__(self, data_dir: str | Path):
        self.sessions_dir = Path(data_dir) / "sessions"
        self.sessions_dir.mkdir(parents=True, exist_ok=True)
        self.index_path = Path(data_dir) / "sessions.index"
        self._registry_lock = threading.Lock()
        self._locks: dict[str, threading.Lock] = {}
        self._cache: dict[str, Session] = {}

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            lock = self._locks.get(session_id)
            if lock is None:
                lock = self._locks[session_id] = threading.Lock()
            return lock

    def _log_path(self, session_id: str) -> Path:
        return self.sessions_dir / f"{session_id}.jsonl"

    @staticmethod
    def _append(path: Path, event: dict) -> None:
        # insertion order is preserved on replay, so responses rebuilt
        # from the log serialize byte-identically
        line = json.dumps(event, ensure_ascii=False)
        with open(path, "a", encoding="utf-8") as handle:
            handle.write(line + "\n")
            handle.flush()
            os.fsync(handle.fileno())

    def create(self, description: str, dictionary_version: str, proposal: dict) -> Session:
        session_id = uuid.uuid4().hex
        session = Session(
            session_id=session_id,
            description=description,
            created_at=_now(),
            dictionary_version=dictionary_version,
            proposal=proposal,
        )
        with self._lock_for(session_id):
            self._append(
                self._log_path(session_id),
                {
                    "event": "created",
                    "session_id": session_id,
                    "created_at": session.created_at,
                    "description": description,
                    "dictionary_version": dictionary_version,
                    "proposal": proposal,
                },
            )
            self._append(self.index_path, {"session_id": session_id})
            self._cache[session_id] = session
        return session

    def get(self, session_id: str) -> Optional[Session]:
        with self.transact(session_id) as session:
            return session

    @contextmanager
    def transact(self, session_id: str) -> Iterator[Optional[Session]]:
        """Yield the session (or None) while holding its writer lock."""
        if not _SESSION_ID.match(session_id):
            yield None
            return
        with self._lock_for(session_id):
            yield self._loaded(session_id)

    def _loaded(self, session_id: str) -> Optional[Session]:
        # caller holds the session lock
        session = self._cache.get(session_id)
        if session is not None:
            return session
        path = self._log_path(session_id)
        if not path.exists():
            return None
        session = self._replay(path)
        self._cache[session_id] = session
        return session

    @staticmethod
    def _replay(path: Path) -> Session:
        session: Optional[Session] = None
        with open(path, encoding="utf-8") as handle:
            for line in handle:
                if not line.strip():
                    continue
                event = json.loads(line)
                kind = event.get("event")
                if kind == "created":
                    session = Session(
                        session_id=event["session_id"],
                        description=event["description"],
                        created_at=event["created_at"],
                        dictionary_version=event["dictionary_version"],
                        proposal=event["proposal"],
                    )
                elif kind == "decision":
                    assert session is not None, f"{path}: decision before created"
                    session.decisions.append(event["decision"])
                elif kind == "validated":
                    assert session is not None, f"{path}: validated before created"
                    session.status = "validated"
                    session.validated_at = event["validated_at"]
                    session.final_set = event["final_set"]
        if session is None:
            raise ValueError(f"{path}: empty session log")
        return session

    def append_decision(self, session: Session, decision: dict) -> None:
        """Persist and apply one decision; caller holds the session lock."""
        self._append(self._log_path(session.session_id), {"event": "decision", "decision": decision})
        session.decisions.append(decision)

    def append_validated(self, session: Session, validated_at: str, final_set: list[dict]) -> None:
        """Persist and apply validation; caller holds the session lock."""
        self._append(
            self._log_path(session.session_id),
            {"event": "validated", "validated_at": validated_at, "final_set": final_set},
        )
        session.status = "validated"
        session.validated_at = validated_at
        session.final_set = final_set


# ---------------------------------------------------------------------------
# application
# ---------------------------------------------------------------------------

def create_app(
    config: AppConfig | None = None,
    *,
    dictionary: TermDictionary | None = None,
    negation: frozenset[str] | None = None,
) -> FastAPI:
    """Build the service; pass a prebuilt dictionary to skip file loading."""
    config = config if config is not None else load_config()
    if dictionary is None:
        try:
            dictionary = config.load_dictionary()
        except Exception:
            dictionary = None
    if negation is None:
        try:
            negation = config.load_negation_words()
        except Exception:
            negation = frozenset()

    app = FastAPI(title="adrcoder review service")
    app.state.config = config
    app.state.dictionary = dictionary
    app.state.negation = negation
    app.state.store = SessionStore(config.data_dir)
    options = config.encode_options()

    @app.exception_handler(RequestValidationError)
    async def malformed_request(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request"})

    def require_dictionary() -> TermDictionary:
        if app.state.dictionary is None:
            raise HTTPException(status_code=503, detail="dictionary not loaded")
        return app.state.dictionary

    def read_text_field(body: dict) -> str:
        text = body.get("text")
        if not isinstance(text, str):
            raise HTTPException(status_code=400, detail="field 'text' (string) is required")
        if len(text) > config.max_text_length:
            raise HTTPException(
                status_code=413,
                detail=f"text exceeds {config.max_text_length} characters",
            )
        return text

    def encode_payload(text: str, dictionary: TermDictionary) -> dict:
        result = encode(text, dictionary, options)
        tokens = [
            {
                "surface": token.surface,
                "start": token.start,
                "end": token.end,
                "stem": token.stem,
                "covered": covered,
            }
            for token, covered in zip(result.tokens, result.covered_tokens)
        ]
        warnings = [
            {"word": text[start:end].casefold(), "start": start, "end": end}
            for start, end in word_spans(text)
            if text[start:end].casefold() in app.state.negation
        ]
        payload = result.as_dict(display_cap=options.display_cap)
        payload["tokens"] = tokens
        payload["warnings"] = warnings
        payload["dictionary_version"] = dictionary.version
        return payload

    @app.post("/encode")
    def encode_endpoint(body: dict = Body(...)):
        dictionary = require_dictionary()
        text = read_text_field(body)
        return encode_payload(text, dictionary)

    @app.post("/sessions", status_code=201)
    def create_session(body: dict = Body(...)):
        dictionary = require_dictionary()
        text = read_text_field(body)
        proposal = encode_payload(text, dictionary)
        session = app.state.store.create(text, dictionary.version, proposal)
        return session.as_payload()

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = app.state.store.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return session.as_payload()

    @app.post("/sessions/{session_id}/decisions")
    def add_decision(session_id: str, body: dict = Body(...)):
        dictionary = require_dictionary()
        with app.state.store.transact(session_id) as session:
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            if session.status == "validated":
                raise HTTPException(status_code=409, detail="session already validated")

            target = body.get("target_llt_code")
            action = body.get("action")
            replacement = body.get("replacement_llt_code")
            if not isinstance(target, str) or not isinstance(action, str):
                raise HTTPException(
                    status_code=400,
                    detail="fields 'target_llt_code' and 'action' (strings) are required",
                )
            if action not in _ACTIONS:
                raise HTTPException(
                    status_code=422,
                    detail=f"action must be one of {', '.join(_ACTIONS)}",
                )
            if target not in session.displayed_codes():
                raise HTTPException(
                    status_code=422, detail=f"term {target!r} is not part of the proposal"
                )
            if action == "replace":
                if not isinstance(replacement, str):
                    raise HTTPException(
                        status_code=422, detail="replacement_llt_code is required for replace"
                    )
                if replacement not in dictionary.by_code:
                    raise HTTPException(
                        status_code=422, detail=f"replacement {replacement!r} not in dictionary"
                    )
            elif replacement is not None:
                raise HTTPException(
                    status_code=422,
                    detail="replacement_llt_code is only valid with action=replace",
                )

            decision = {
                "target_llt_code": target,
                "action": action,
                "replacement_llt_code": replacement if action == "replace" else None,
                "decided_at": _now(),
            }
            app.state.store.append_decision(session, decision)
            return session.as_payload()

    @app.post("/sessions/{session_id}/validate")
    def validate_session(session_id: str):
        dictionary = require_dictionary()
        with app.state.store.transact(session_id) as session:
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            if session.status == "validated":
                raise HTTPException(status_code=409, detail="session already validated")

            latest = session.effective_decisions()
            displayed = session.displayed_codes()
            undecided = [code for code in displayed if code not in latest]
            if undecided:
                raise HTTPException(
                    status_code=409,
                    detail={"message": "undecided terms", "undecided": undecided},
                )

            final: list[dict] = []
            seen: set[str] = set()
            for code in displayed:
                decision = latest[code]
                if decision["action"] == "reject":
                    continue
                wanted = decision["replacement_llt_code"] if decision["action"] == "replace" else code
                term = dictionary.by_code.get(wanted)
                if term is None:
                    # dictionary swapped since the session was created
                    raise HTTPException(
                        status_code=409,
                        detail=f"term {wanted!r} no longer in the loaded dictionary",
                    )
                if term.llt_code not in seen:
                    seen.add(term.llt_code)
                    final.append(_term_payload(term))

            app.state.store.append_validated(session, _now(), final)
            return session.as_payload()

    @app.get("/terms")
    def search_terms(q: str = "", limit: int = 20):
        dictionary = require_dictionary()
        query = q.strip()
        if not query:
            raise HTTPException(status_code=400, detail="query parameter 'q' is required")
        if not 1 <= limit <= 50:
            raise HTTPException(status_code=400, detail="limit must be between 1 and 50")
        matches = dictionary.search(query, limit=limit)
        return {
            "query": query,
            "dictionary_version": dictionary.version,
            "matches": [_term_payload(term) for term in matches],
        }

    return app


def run(config: AppConfig | None = None) -> None:
    """Serve the app with uvicorn (blocking)."""
    import uvicorn

    config = config if config is not None else load_config()
    uvicorn.run(create_app(config), host=config.host, port=config.port)
