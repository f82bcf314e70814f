"""HTTP API over a loaded index: suggestions, graphs, publications, feedback.

Payload builders are plain functions returning dicts with fixed key order;
the CLI subcommands print exactly the same JSON the endpoints serve.
Responses are serialized with compact separators, so equal requests over an
unchanged index yield byte-equal bodies.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import Response

from .errors import UnknownConcept, UnknownEdge
from .query import (
    DISEASE_SEMANTIC_TYPE,
    PublicationList,
    Suggestion,
    edge_publications,
    neighbors,
    suggest,
)
from .store import FORMAT_VERSION, IndexBundle, load_index
from .treeviz import build_hierarchy, flat_view, leaf_count, serialize_node

MODE_HIERARCHICAL = "hierarchical"
MODE_FLAT = "flat"
MODES = (MODE_HIERARCHICAL, MODE_FLAT)

# Sentinel accepted by the graph endpoint to disable the semantic-type filter.
SEMANTIC_TYPE_ALL = "all"

SUGGEST_DEFAULT_K = 10
SUGGEST_MAX_K = 50
FEEDBACK_MAX_CHARS = 4096


@dataclass
class ApiConfig:
    bind_address: str = "127.0.0.1:8787"
    index_dir: str | Path = "index"
    cors_allowed_origin: str = "*"
    feedback_log: str | Path | None = None

    def host_port(self) -> tuple[str, int]:
        host, _, port_text = self.bind_address.rpartition(":")
        if not host or not port_text.isdigit():
            raise ValueError(f"bind_address must be host:port, got {self.bind_address!r}")
        return host, int(port_text)

    def feedback_path(self) -> Path:
        if self.feedback_log is not None:
            return Path(self.feedback_log)
        return Path(self.index_dir) / "feedback.log"


def suggestion_payload(suggestions: list[Suggestion]) -> list[dict]:
    return [
        {"concept_id": s.concept_id, "display": s.display, "distance": s.distance}
        for s in suggestions
    ]


def graph_payload(bundle: IndexBundle, concept_id: str, semantic_type: str | None,
                  mode: str) -> dict:
    entries = neighbors(bundle, concept_id, semantic_type)
    if mode == MODE_FLAT:
        tree = flat_view(concept_id, entries, bundle.dictionary)
    else:
        tree = build_hierarchy(concept_id, entries, bundle.dictionary)
    return {
        "query_id": concept_id,
        "mode": mode,
        "semantic_type": semantic_type,
        "leaf_count": leaf_count(tree),
        "tree": serialize_node(tree),
    }


def publications_payload(publications: PublicationList) -> dict:
    return {
        "total": publications.total,
        "items": [
            {
                "doc_id": item.doc_id,
                "title": item.title,
                "year": item.year,
                "url": item.url,
                "source_kind": item.source_kind,
            }
            for item in publications.items
        ],
        "decade_histogram": {str(decade): count
                             for decade, count in publications.decade_histogram.items()},
    }


def payload_json(payload: object) -> str:
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


class _FeedbackLog:
    """Serialized appender; one JSON line per submission."""

    def __init__(self, path: Path):
        self.path = path
        self._lock = threading.Lock()

    def append(self, text: str, context_url: str | None) -> None:
        entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "text": text,
            "context_url": context_url,
        }
        line = json.dumps(entry, ensure_ascii=False) + "\n"
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as handle:
                handle.write(line)


def _json_response(payload: object, status_code: int = 200) -> Response:
    return Response(content=payload_json(payload), status_code=status_code,
                    media_type="application/json")


def _error(status_code: int, message: str) -> Response:
    return _json_response({"error": message}, status_code)


def create_app(config: ApiConfig, bundle: IndexBundle | None = None) -> FastAPI:
    """Build the application; the index must load or this raises."""
    if bundle is None:
        bundle = load_index(config.index_dir)
    feedback = _FeedbackLog(config.feedback_path())
    app = FastAPI(title="coocnet", docs_url=None, redoc_url=None)

    @app.middleware("http")
    async def add_cors(request: Request, call_next):
        response = await call_next(request)
        response.headers["Access-Control-Allow-Origin"] = config.cors_allowed_origin
        return response

    @app.get("/api/health")
    def health() -> Response:
        return _json_response({
            "status": "ok",
            "format_version": FORMAT_VERSION,
            "build_stats": bundle.stats.to_json_obj(),
        })

    @app.get("/api/suggest")
    def api_suggest(q: str = "", k: int = SUGGEST_DEFAULT_K) -> Response:
        if not q.strip():
            return _error(400, "query parameter q must be nonempty")
        if k < 1:
            return _error(400, "k must be at least 1")
        k = min(k, SUGGEST_MAX_K)
        return _json_response(suggestion_payload(suggest(bundle.dictionary, q, k)))

    @app.get("/api/graph/{concept_id}")
    def api_graph(concept_id: str, semantic_type: str = DISEASE_SEMANTIC_TYPE,
                  mode: str = MODE_HIERARCHICAL) -> Response:
        if mode not in MODES:
            return _error(400, f"mode must be one of {MODES}")
        type_filter = None if semantic_type == SEMANTIC_TYPE_ALL else semantic_type
        try:
            payload = graph_payload(bundle, concept_id, type_filter, mode)
        except UnknownConcept as exc:
            return _error(404, str(exc))
        return _json_response(payload)

    @app.get("/api/edge/{a}/{b}/publications")
    def api_edge_publications(a: str, b: str) -> Response:
        try:
            payload = publications_payload(edge_publications(bundle, a, b))
        except (UnknownConcept, UnknownEdge) as exc:
            return _error(404, str(exc))
        return _json_response(payload)

    @app.post("/api/feedback")
    async def api_feedback(request: Request) -> Response:
        try:
            body = await request.json()
        except Exception:
            return _error(400, "body must be a JSON object")
        if not isinstance(body, dict):
            return _error(400, "body must be a JSON object")
        text = body.get("text")
        if not isinstance(text, str) or not text.strip():
            return _error(400, "field 'text' must be nonempty")
        if len(text) > FEEDBACK_MAX_CHARS:
            return _error(400, f"field 'text' exceeds {FEEDBACK_MAX_CHARS} characters")
        context_url = body.get("context_url")
        if context_url is not None and not isinstance(context_url, str):
            return _error(400, "field 'context_url' must be a string")
        feedback.append(text, context_url)
        return _json_response({"status": "accepted"}, 202)

    return app
