"""Hermetic completion endpoint for tests and offline runs.

Implements the reference wire contract: POST /v1/completions with
logprob echo plus the decoding extension fields. Behavior (tokenizer,
per-token logprobs, completion text) is pluggable so tests can construct
exact known score distributions. The server counts in-flight requests,
which makes the client's concurrency bound observable.
"""

from __future__ import annotations

import hashlib
import json
import re
import threading
import time
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Callable

_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[0-9]+|[^\sA-Za-z0-9_]|\s+")

EXTENSION_FIELDS = ("num_beams", "early_stopping", "penalty_alpha")


def simple_tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text)


def hash_logprob(token: str, index: int) -> float:
    """Deterministic pseudo-logprob in [-2.55, -0.05]."""
    digest = hashlib.sha256(f"{index}:{token}".encode("utf-8")).hexdigest()
    frac = int(digest[:8], 16) / 0xFFFFFFFF
    return -0.05 - 2.5 * frac


@dataclass
class StubBehavior:
    tokenize: Callable[[str], list[str]] = simple_tokenize
    logprob_fn: Callable[[str, int], float] = hash_logprob
    completion_fn: Callable[[str, dict], str] = lambda prompt, payload: "\n    return 0\n"
    # Request-aware override: (payload, token, index) -> logprob
    logprob_for_request: "Callable[[dict, str, int], float] | None" = None
    supports_echo_logprobs: bool = True
    supports_extensions: bool = True
    delay: float = 0.0
    fail_first: int = 0
    model: str = "stub-model"


class _Handler(BaseHTTPRequestHandler):
    server: "StubServer"

    def log_message(self, *args):  # quiet test output
        pass

    def _reply(self, status: int, payload: dict) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_POST(self):
        server = self.server
        with server.track_inflight():
            behavior = server.behavior
            if behavior.delay:
                time.sleep(behavior.delay)
            if server.consume_failure():
                self._reply(500, {"error": {"code": "internal", "message": "injected failure"}})
                return
            if self.path != "/v1/completions":
                self._reply(404, {"error": {"code": "not_found", "message": self.path}})
                return
            length = int(self.headers.get("Content-Length", "0"))
            try:
                payload = json.loads(self.rfile.read(length).decode("utf-8"))
            except ValueError:
                self._reply(400, {"error": {"code": "bad_json", "message": "unreadable body"}})
                return
            self._completions(payload, behavior)

    def _completions(self, payload: dict, behavior: StubBehavior) -> None:
        prompt = payload.get("prompt", "")
        echo = bool(payload.get("echo", False))
        want_logprobs = payload.get("logprobs") is not None
        max_tokens = int(payload.get("max_tokens", 0))

        if not behavior.supports_extensions and any(k in payload for k in EXTENSION_FIELDS):
            present = [k for k in EXTENSION_FIELDS if k in payload]
            self._reply(
                400,
                {"error": {"code": "unsupported_parameter", "message": f"unsupported: {present}"}},
            )
            return
        if echo and want_logprobs and not behavior.supports_echo_logprobs:
            self._reply(
                400,
                {"error": {"code": "unsupported_parameter", "message": "echo logprobs unsupported"}},
            )
            return

        generated = ""
        if max_tokens > 0:
            completion = behavior.completion_fn(prompt, payload)
            gen_tokens = behavior.tokenize(completion)[:max_tokens]
            generated = "".join(gen_tokens)
        else:
            gen_tokens = []

        text = (prompt if echo else "") + generated
        scored_tokens = (behavior.tokenize(prompt) if echo else []) + gen_tokens

        logprobs = None
        if want_logprobs:
            offsets = []
            cursor = 0
            for tok in scored_tokens:
                offsets.append(cursor)
                cursor += len(tok)
            if behavior.logprob_for_request is not None:
                values = [
                    behavior.logprob_for_request(payload, tok, k)
                    for k, tok in enumerate(scored_tokens)
                ]
            else:
                values = [behavior.logprob_fn(tok, k) for k, tok in enumerate(scored_tokens)]
            logprobs = {
                "tokens": scored_tokens,
                "token_logprobs": values,
                "text_offset": offsets,
            }

        self._reply(
            200,
            {
                "id": "stub-cmpl",
                "model": behavior.model,
                "choices": [
                    {"text": text, "index": 0, "logprobs": logprobs, "finish_reason": "stop"}
                ],
            },
        )


@dataclass
class _InflightGauge:
    lock: threading.Lock = field(default_factory=threading.Lock)
    current: int = 0
    peak: int = 0
    total: int = 0


class StubServer(ThreadingHTTPServer):
    """Threaded stub endpoint; use as a context manager."""

    def __init__(self, behavior: StubBehavior | None = None):
        super().__init__(("127.0.0.1", 0), _Handler)
        self.behavior = behavior or StubBehavior()
        self._gauge = _InflightGauge()
        self._failures_left = self.behavior.fail_first
        self._thread: threading.Thread | None = None

    @property
    def base_url(self) -> str:
        host, port = self.server_address[:2]
        return f"http://{host}:{port}"

    @property
    def peak_inflight(self) -> int:
        return self._gauge.peak

    @property
    def request_count(self) -> int:
        return self._gauge.total

    def track_inflight(self):
        gauge = self._gauge

        class _Tracker:
            def __enter__(self):
                with gauge.lock:
                    gauge.current += 1
                    gauge.total += 1
                    gauge.peak = max(gauge.peak, gauge.current)

            def __exit__(self, *exc):
                with gauge.lock:
                    gauge.current -= 1

        return _Tracker()

    def consume_failure(self) -> bool:
        with self._gauge.lock:
            if self._failures_left > 0:
                self._failures_left -= 1
                return True
        return False

    def __enter__(self) -> "StubServer":
        self._thread = threading.Thread(target=self.serve_forever, daemon=True)
        self._thread.start()
        return self

    def __exit__(self, *exc):
        self.shutdown()
        self.server_close()
        if self._thread:
            self._thread.join(timeout=5)


def mitigation_stub_behavior(
    pairs: list[tuple[str, str]],
    baseline_prob: float = 0.75,
    treatment_prob: float = 0.25,
    treatment_marker: str = "Code smells to avoid:",
) -> StubBehavior:
    """Stub profile for the hermetic mitigation experiment.

    pairs are (snippet, canned completion): a request whose prompt
    contains the snippet gets that completion. Every token scores
    ln(baseline_prob), or ln(treatment_prob) when the prompt carries the
    structured-prompt marker, so expected medians are known exactly.
    """
    import math

    def completion_fn(prompt: str, payload: dict) -> str:
        for snippet, completion in pairs:
            if snippet in prompt:
                return completion
        return "\n    return 0\n"

    def logprob_for_request(payload: dict, token: str, index: int) -> float:
        p = treatment_prob if treatment_marker in str(payload.get("prompt", "")) else baseline_prob
        return math.log(p)

    return StubBehavior(
        completion_fn=completion_fn,
        logprob_for_request=logprob_for_request,
    )


def main() -> None:  # pragma: no cover - manual utility
    """Serve the default stub endpoint until interrupted."""
    import signal

    server = StubServer()
    print(f"stub endpoint listening on {server.base_url}")
    signal.signal(signal.SIGINT, lambda *a: server.shutdown())
    server.serve_forever()


if __name__ == "__main__":  # pragma: no cover
    main()

