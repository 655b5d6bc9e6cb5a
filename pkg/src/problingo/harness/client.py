"""Chat-completion endpoint client: bounded retries, env-sourced credential.

The wire shape is the de-facto chat completions API: POST
``{base_url}/chat/completions`` with ``{model, messages, temperature, top_p,
max_tokens}``. Everything downstream only sees a ``CompletionFn`` — a
callable from a messages array to the completion text — so tests and other
protocols can substitute their own.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import Any, Callable

import requests

from ..errors import ConfigError, EndpointError

CompletionFn = Callable[[list[dict[str, str]]], str]


@dataclass(frozen=True)
class ModelEndpointConfig:
    base_url: str
    model: str
    temperature: float = 0.7
    top_p: float = 0.95
    max_tokens: int = 2048
    timeout_s: float = 120.0
    max_retries: int = 3
    backoff_base_s: float = 1.0
    max_concurrency: int = 4
    api_key_env: str = "PROBLINGO_API_KEY"

    def __post_init__(self) -> None:
        if not self.base_url:
            raise ConfigError("endpoint base_url must be set")
        if not self.model:
            raise ConfigError("endpoint model must be set")
        if self.max_concurrency < 1:
            raise ConfigError("max_concurrency must be >= 1")
        if self.max_retries < 0:
            raise ConfigError("max_retries must be >= 0")

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "ModelEndpointConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"unknown endpoint config keys: {sorted(unknown)}")
        return cls(**raw)


def build_http_completer(config: ModelEndpointConfig) -> CompletionFn:
    """HTTP CompletionFn with exponential backoff. Raises EndpointError once
    retries are exhausted; callers decide what a dead request means."""
    api_key = os.environ.get(config.api_key_env, "")
    headers = {"Content-Type": "application/json"}
    if api_key:
        headers["Authorization"] = f"Bearer {api_key}"
    url = config.base_url.rstrip("/") + "/chat/completions"

    def complete(messages: list[dict[str, str]]) -> str:
        body = {
            "model": config.model,
            "messages": messages,
            "temperature": config.temperature,
            "top_p": config.top_p,
            "max_tokens": config.max_tokens,
        }
        last_error: Exception | None = None
        for attempt in range(config.max_retries + 1):
            if attempt:
                time.sleep(config.backoff_base_s * 2 ** (attempt - 1))
            try:
                response = requests.post(
                    url, json=body, headers=headers, timeout=config.timeout_s
                )
                if response.status_code >= 400:
                    last_error = EndpointError(
                        f"HTTP {response.status_code}: {response.text[:200]}"
                    )
                    continue
                payload = response.json()
                return payload["choices"][0]["message"]["content"]
            except Exception as exc:  # connection errors, bad JSON, missing keys
                last_error = exc
        raise EndpointError(f"request failed after {config.max_retries + 1} tries: {last_error}")

    return complete
