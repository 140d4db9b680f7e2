"""Client for logprob-exposing completion endpoints.

Reference adapter for the OpenAI-compatible completions shape with
logprob echo; decoding extension fields are forwarded verbatim, and
servers that lack them reject with an unsupported-parameter error rather
than silently downgrading. Requests retry with exponential backoff plus
jitter, and at most max_concurrent requests are in flight at once.
"""

from __future__ import annotations

import json
import math
import os
import random
import threading
import urllib.error
import urllib.request
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..core import TokenRecord, TokenTrace, validate_trace
from ..errors import EmptyCompletionError, EndpointError, UnsupportedError
from .decoding import DecodingConfig

API_KEY_ENV = "PSCKIT_API_KEY"


@dataclass(frozen=True)
class EndpointConfig:
    base_url: str
    model: str
    api_key: str | None = None
    request_timeout: float = 60.0
    max_concurrent: int = 4
    retries: int = 2

    def __post_init__(self):
        if self.max_concurrent < 1:
            raise ValueError("max_concurrent must be >= 1")
        if self.retries < 0:
            raise ValueError("retries must be >= 0")
        if self.api_key is None:
            object.__setattr__(self, "api_key", os.environ.get(API_KEY_ENV))


class CompletionsClient:
    def __init__(self, endpoint: EndpointConfig, backoff_base: float = 0.25):
        self.endpoint = endpoint
        self.backoff_base = backoff_base
        self._gate = threading.BoundedSemaphore(endpoint.max_concurrent)
        self._rng = random.Random(0xC0FFEE)

    # -- transport ---------------------------------------------------------

    def _post(self, payload: dict) -> dict:
        url = f"{self.endpoint.base_url.rstrip('/')}/v1/completions"
        body = json.dumps(payload).encode("utf-8")
        headers = {"Content-Type": "application/json"}
        if self.endpoint.api_key:
            headers["Authorization"] = f"Bearer {self.endpoint.api_key}"
        last_error: Exception | None = None
        for attempt in range(self.endpoint.retries + 1):
            request = urllib.request.Request(url, data=body, headers=headers)
            try:
                with self._gate:
                    with urllib.request.urlopen(
                        request, timeout=self.endpoint.request_timeout
                    ) as response:
                        return json.loads(response.read().decode("utf-8"))
            except urllib.error.HTTPError as exc:
                detail = _error_detail(exc)
                if exc.code == 400 and "unsupported" in detail.get("code", ""):
                    raise UnsupportedError(detail.get("message", "unsupported request")) from exc
                last_error = EndpointError(f"HTTP {exc.code}: {detail.get('message', exc.reason)}")
                if exc.code < 500:
                    raise last_error from exc
            except (urllib.error.URLError, OSError, ValueError) as exc:
                last_error = EndpointError(f"transport failure: {exc}")
            if attempt < self.endpoint.retries:
                delay = self.backoff_base * (2**attempt) * (0.5 + self._rng.random())
                threading.Event().wait(delay)
        raise last_error if last_error else EndpointError("request failed")

    # -- operations ----------------------------------------------------------

    def score_fixed(self, snippet: str, sample_id: str = "") -> TokenTrace:
        """Teacher-forced scoring of a fixed snippet (prompt echo with logprobs)."""
        if not snippet:
            raise ValueError("snippet must be non-empty")
        payload = {
            "model": self.endpoint.model,
            "prompt": snippet,
            "max_tokens": 0,
            "echo": True,
            "logprobs": 1,
        }
        response = self._post(payload)
        text, tokens, logprobs, meta_extra = _parse_choice(response, require_logprobs=True)
        if text != snippet:
            raise EndpointError("endpoint echoed a different prompt than was sent")
        meta = {
            "model": str(response.get("model", self.endpoint.model)),
            "mode": "fixed",
            **meta_extra,
        }
        return _build_trace(
            sample_id or _default_sample_id(snippet),
            source=snippet,
            token_texts=tokens,
            logprobs=logprobs,
            start_byte=0,
            generated_from=None,
            meta=meta,
        )

    def complete_prefix(
        self,
        snippet: str,
        cut_fraction: float,
        config: DecodingConfig,
        sample_id: str = "",
    ) -> TokenTrace:
        """Truncate the snippet at a token fraction and score the completion.

        The prefix keeps max(1, floor(cut_fraction * n_tokens)) tokens,
        counted on the endpoint's tokenizer; the returned trace holds the
        prefix plus the generated text, with generated_from at the byte
        length of the prefix and logprobs covering the generated segment.
        """
        if not 0.0 < cut_fraction < 1.0:
            raise ValueError("cut_fraction must be in (0, 1)")
        probe = self.score_fixed(snippet, sample_id=sample_id or "probe")
        n_tokens = len(probe.tokens)
        if n_tokens < 2:
            raise ValueError("snippet must tokenize to at least 2 tokens")
        keep = max(1, math.floor(cut_fraction * n_tokens))
        prefix_end = probe.tokens[keep - 1].byte_end
        prefix = snippet.encode("utf-8")[:prefix_end].decode("utf-8")

        return self.complete_text(
            prefix,
            config,
            source_prefix=prefix,
            sample_id=sample_id or _default_sample_id(snippet),
        )

    def complete_text(
        self,
        prompt: str,
        config: DecodingConfig,
        source_prefix: str,
        sample_id: str = "",
    ) -> TokenTrace:
        """Request a completion of the prompt and trace the generated code.

        The trace's source is source_prefix plus the generated text (the
        prompt may carry instructions that are not part of the code), with
        generated_from at the byte length of source_prefix.
        """
        payload = {
            "model": self.endpoint.model,
            "prompt": prompt,
            "max_tokens": config.max_new_tokens,
            "echo": False,
            "logprobs": 1,
        }
        payload.update(config.request_fields())
        response = self._post(payload)
        text, tokens, logprobs, meta_extra = _parse_choice(response, require_logprobs=True)
        if not tokens:
            raise EmptyCompletionError("endpoint returned no completion tokens")
        meta = {
            "model": str(response.get("model", self.endpoint.model)),
            "mode": "completion",
            "decoding": config.config_id(),
            "probability_source": "decoding_pass",
            **meta_extra,
        }
        prefix_bytes = len(source_prefix.encode("utf-8"))
        return _build_trace(
            sample_id or _default_sample_id(prompt),
            source=source_prefix + text,
            token_texts=tokens,
            logprobs=logprobs,
            start_byte=prefix_bytes,
            generated_from=prefix_bytes,
            meta=meta,
        )

    def score_many(
        self, snippets: Sequence[tuple[str, str]]
    ) -> list["TokenTrace | Exception"]:
        """Score (sample_id, snippet) pairs with bounded parallelism."""
        return self._map(lambda item: self.score_fixed(item[1], sample_id=item[0]), snippets)

    def _map(self, fn, items: Iterable) -> list:
        results = []
        with ThreadPoolExecutor(max_workers=self.endpoint.max_concurrent) as pool:
            futures = [pool.submit(fn, item) for item in items]
            for future in futures:
                try:
                    results.append(future.result())
                except Exception as exc:  # noqa: BLE001 - per-sample failures surface to caller
                    results.append(exc)
        return results


def _error_detail(exc: urllib.error.HTTPError) -> dict:
    try:
        payload = json.loads(exc.read().decode("utf-8"))
        detail = payload.get("error", {})
        return detail if isinstance(detail, dict) else {}
    except (ValueError, OSError):
        return {}


def _parse_choice(response: dict, require_logprobs: bool) -> tuple[str, list[str], list, dict]:
    choices = response.get("choices")
    if not choices:
        raise EndpointError("response carries no choices")
    choice = choices[0]
    text = choice.get("text", "")
    logprobs = choice.get("logprobs")
    if require_logprobs and not logprobs:
        raise UnsupportedError("endpoint cannot return token logprobs")
    tokens = list(logprobs.get("tokens", []))
    values = list(logprobs.get("token_logprobs", []))
    if len(tokens) != len(values):
        raise EndpointError("token and logprob arrays disagree in length")
    meta_extra = {}
    if any(v is None for v in values):
        meta_extra["missing_logprobs"] = str(sum(1 for v in values if v is None))
    return text, tokens, values, meta_extra


def _build_trace(
    sample_id: str,
    source: str,
    token_texts: list[str],
    logprobs: list,
    start_byte: int,
    generated_from: int | None,
    meta: dict[str, str],
) -> TokenTrace:
    records = []
    cursor = start_byte
    for text, logprob in zip(token_texts, logprobs):
        width = len(text.encode("utf-8"))
        records.append(
            {
                "text": text,
                "byte_start": cursor,
                "byte_end": cursor + width,
                # endpoints may omit the first prompt logprob; certainty placeholder
                "logprob": 0.0 if logprob is None else float(logprob),
            }
        )
        cursor += width
    return validate_trace(
        {
            "sample_id": sample_id,
            "source": source,
            "generated_from": generated_from,
            "meta": meta,
            "tokens": records,
        }
    )


def _default_sample_id(snippet: str) -> str:
    import hashlib

    return "sample-" + hashlib.sha256(snippet.encode("utf-8")).hexdigest()[:12]
