"""Local HTTP service for the watch-face UI.

Plain stdlib server: the parser is fast enough that a framework would
only add weight.  All state is the immutable lexicon, so the threading
server needs no locks.  CORS is wide open because the UI is served from
a different origin (file:// or a static dev server).
"""

from __future__ import annotations

import json
from functools import partial
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import analyze
from .lexicon import Lexicon
from .qparse import EmptyQuery, Mode

DEFAULT_PORT = 7878


class QueryHandler(BaseHTTPRequestHandler):
    def __init__(self, lex: Lexicon, *args, **kwargs):
        self.lex = lex
        super().__init__(*args, **kwargs)

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        pass

    def _send(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self._send_cors()
        self.end_headers()
        self.wfile.write(body)

    def _send_cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def do_OPTIONS(self):  # noqa: N802 - stdlib naming
        self.send_response(204)
        self._send_cors()
        self.end_headers()

    def do_GET(self):  # noqa: N802
        if self.path == "/health":
            self._send(200, {"status": "ok"})
        elif self.path == "/lexicon/version":
            self._send(200, {"version": self.lex.version})
        else:
            self._send(404, {"error": "not found"})

    def do_POST(self):  # noqa: N802
        if self.path != "/parse":
            self._send(404, {"error": "not found"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            data = json.loads(self.rfile.read(length).decode("utf-8"))
        except (ValueError, UnicodeDecodeError):
            self._send(400, {"error": "body must be a JSON object"})
            return
        if not isinstance(data, dict) or not isinstance(data.get("query"), str):
            self._send(400, {"error": "body must carry a string 'query'"})
            return
        try:
            mode = Mode(data.get("mode", Mode.IVT.value))
        except ValueError:
            self._send(400, {"error": f"unknown mode: {data.get('mode')!r}"})
            return
        try:
            self._send(200, analyze(self.lex, data["query"], mode))
        except EmptyQuery:
            self._send(400, {"error": "empty query"})


def make_server(lex: Lexicon, host: str = "127.0.0.1", port: int = DEFAULT_PORT) -> ThreadingHTTPServer:
    """Build (but do not start) the HTTP server; port 0 picks a free port."""
    return ThreadingHTTPServer((host, port), partial(QueryHandler, lex))
