"""Trace acquisition: endpoint client, JSONL trace files, stub server."""

from .client import API_KEY_ENV, CompletionsClient, EndpointConfig
from .decoding import DecodingConfig, Strategy
from .stub import StubBehavior, StubServer, hash_logprob, simple_tokenize
from .traces import read_traces, write_traces

__all__ = [
    "API_KEY_ENV",
    "CompletionsClient",
    "DecodingConfig",
    "EndpointConfig",
    "Strategy",
    "StubBehavior",
    "StubServer",
    "hash_logprob",
    "read_traces",
    "simple_tokenize",
    "write_traces",
]
