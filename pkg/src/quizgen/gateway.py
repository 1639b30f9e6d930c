"""Provider-agnostic chat completion with a one-round search-tool loop.

Three backends share one interface: a live JSON-over-HTTP backend (OpenAI-style
chat completions wire format), a recording wrapper, and a deterministic replay
store for offline tests (directory of JSON files keyed by exchange hash, see
docs/replay-format.md).  API keys live in the environment and in request
headers only; they are never written to transcripts or replay files.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Protocol

import httpx

from .context import build_context, estimate_tokens
from .graph import KnowledgeGraph
from .prompt import GenerationRequest, MasterPromptTemplate, assemble_prompt, load_template

DEFAULT_MODEL = "gpt-4-turbo"
DEFAULT_TEMPERATURE = 1.0
DEFAULT_MAX_OUTPUT_TOKENS = 4096
SEARCH_TOOL_NAME = "search"
SEARCH_RESULT_COUNT = 10
SEARCH_RESULTS_HEADER = "=== SEARCH RESULTS ==="

TOOL_INSTRUCTION = (
    "You may call the function `search` with a sequence of arbitrary strings to "
    "look up definitions from the course corpus. Use it to determine how to "
    "semantically annotate any text that refers to a concept from the domain of "
    "the course."
)

ENV_ENDPOINT = "QUIZGEN_LLM_ENDPOINT"
ENV_MODEL = "QUIZGEN_LLM_MODEL"
ENV_API_KEY = "QUIZGEN_LLM_API_KEY"


class GatewayError(Exception):
    pass


class TransportFailure(GatewayError):
    """Network-level failure; safe to retry."""


class ProviderRefusal(GatewayError):
    """Non-retryable provider response, surfaced verbatim."""


class ReplayMiss(GatewayError):
    def __init__(self, digest: str):
        super().__init__(f"replay store has no outcome for exchange {digest}")
        self.digest = digest


class ToolLoopExceeded(GatewayError):
    """The model asked for a second tool round; only one is ever granted."""


@dataclass(frozen=True)
class Message:
    role: str  # system | user | assistant | tool
    text: str


@dataclass(frozen=True)
class CompletionParams:
    model: str = DEFAULT_MODEL
    temperature: float = DEFAULT_TEMPERATURE
    max_output_tokens: int = DEFAULT_MAX_OUTPUT_TOKENS


@dataclass(frozen=True)
class ToolCall:
    name: str
    arguments: tuple[str, ...]


_ROLES = ("system", "user", "assistant", "tool")


@dataclass(frozen=True)
class ChatExchange:
    messages: tuple[Message, ...]
    params: CompletionParams = CompletionParams()
    declare_search_tool: bool = False

    def __post_init__(self):
        for message in self.messages:
            if message.role not in _ROLES:
                raise ValueError(f"unknown message role: {message.role}")
        # System messages, when present, lead the conversation.
        non_system_seen = False
        for message in self.messages:
            if message.role != "system":
                non_system_seen = True
            elif non_system_seen:
                raise ValueError("system messages must precede all other roles")


@dataclass(frozen=True)
class CompletionOutcome:
    text: Optional[str] = None
    call: Optional[ToolCall] = None
    usage: tuple[int, int] = (0, 0)  # (prompt tokens, output tokens) estimates

    def __post_init__(self):
        if (self.text is None) == (self.call is None):
            raise ValueError("outcome must be exactly one of text or call")


def exchange_hash(exchange: ChatExchange) -> str:
    """Content hash over message roles/texts and sampling params."""
    payload = {
        "messages": [[m.role, m.text] for m in exchange.messages],
        "params": {
            "model": exchange.params.model,
            "temperature": exchange.params.temperature,
            "max_output_tokens": exchange.params.max_output_tokens,
        },
    }
    canonical = json.dumps(payload, sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _prompt_tokens(exchange: ChatExchange) -> int:
    return sum(estimate_tokens(m.text) for m in exchange.messages)


def outcome_to_dict(outcome: CompletionOutcome) -> dict:
    if outcome.text is not None:
        body: dict = {"type": "text", "text": outcome.text}
    else:
        assert outcome.call is not None
        body = {"type": "call", "name": outcome.call.name, "arguments": list(outcome.call.arguments)}
    return body


def outcome_from_dict(data: dict, prompt_tokens: int) -> CompletionOutcome:
    if data["type"] == "text":
        text = data["text"]
        return CompletionOutcome(text=text, usage=(prompt_tokens, estimate_tokens(text)))
    if data["type"] == "call":
        call = ToolCall(name=data["name"], arguments=tuple(data["arguments"]))
        return CompletionOutcome(call=call, usage=(prompt_tokens, 0))
    raise ValueError(f"unknown outcome type {data['type']!r}")


class Backend(Protocol):
    def complete(self, exchange: ChatExchange) -> CompletionOutcome: ...


class ReplayBackend:
    """Deterministic offline backend: one JSON file per exchange hash."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def complete(self, exchange: ChatExchange) -> CompletionOutcome:
        digest = exchange_hash(exchange)
        path = self.directory / f"{digest}.json"
        if not path.is_file():
            raise ReplayMiss(digest)
        data = json.loads(path.read_text(encoding="utf-8"))
        return outcome_from_dict(data["outcome"], _prompt_tokens(exchange))


class RecordingBackend:
    """Wraps a live backend and freezes every outcome into a replay store."""

    def __init__(self, inner: Backend, directory: str | Path):
        self.inner = inner
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._write_lock = threading.Lock()

    def complete(self, exchange: ChatExchange) -> CompletionOutcome:
        outcome = self.inner.complete(exchange)
        digest = exchange_hash(exchange)
        record = {"hash": digest, "outcome": outcome_to_dict(outcome)}
        payload = json.dumps(record, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        with self._write_lock:
            (self.directory / f"{digest}.json").write_text(payload, encoding="utf-8")
        return outcome


_SEARCH_TOOL_SPEC = {
    "type": "function",
    "function": {
        "name": SEARCH_TOOL_NAME,
        "description": "Search the course corpus for definitions of the given terms.",
        "parameters": {
            "type": "object",
            "properties": {
                "queries": {"type": "array", "items": {"type": "string"}},
            },
            "required": ["queries"],
        },
    },
}


class LiveBackend:
    """JSON-over-HTTP chat completions (OpenAI-compatible request/response shape).

    Endpoint, model, and key come from arguments or the QUIZGEN_LLM_* environment
    variables.  ``transport`` is injectable for wire-format tests.
    """

    def __init__(
        self,
        endpoint: Optional[str] = None,
        model: Optional[str] = None,
        api_key: Optional[str] = None,
        timeout: float = 120.0,
        transport: Optional[httpx.BaseTransport] = None,
    ):
        self.endpoint = endpoint or os.environ.get(ENV_ENDPOINT, "")
        self.model = model or os.environ.get(ENV_MODEL, DEFAULT_MODEL)
        self._api_key = api_key if api_key is not None else os.environ.get(ENV_API_KEY, "")
        if not self.endpoint:
            raise GatewayError(f"no endpoint configured (set {ENV_ENDPOINT})")
        self._client = httpx.Client(timeout=timeout, transport=transport)

    def build_payload(self, exchange: ChatExchange) -> dict:
        payload = {
            "model": exchange.params.model or self.model,
            "messages": [{"role": m.role, "content": m.text} for m in exchange.messages],
            "temperature": exchange.params.temperature,
            "max_tokens": exchange.params.max_output_tokens,
        }
        if exchange.declare_search_tool:
            payload["tools"] = [_SEARCH_TOOL_SPEC]
        return payload

    def complete(self, exchange: ChatExchange) -> CompletionOutcome:
        headers = {"Content-Type": "application/json"}
        if self._api_key:
            headers["Authorization"] = f"Bearer {self._api_key}"
        try:
            response = self._client.post(
                self.endpoint, json=self.build_payload(exchange), headers=headers
            )
        except httpx.HTTPError as err:
            raise TransportFailure(str(err)) from err
        if response.status_code == 429 or response.status_code >= 500:
            raise TransportFailure(f"HTTP {response.status_code}: {response.text}")
        if response.status_code >= 400:
            raise ProviderRefusal(f"HTTP {response.status_code}: {response.text}")
        return self._parse_response(response.json(), _prompt_tokens(exchange))

    @staticmethod
    def _parse_response(data: dict, prompt_tokens: int) -> CompletionOutcome:
        try:
            message = data["choices"][0]["message"]
        except (KeyError, IndexError) as err:
            raise ProviderRefusal(f"malformed completion response: {data!r}") from err
        usage = data.get("usage", {})
        prompt_count = usage.get("prompt_tokens", prompt_tokens)
        tool_calls = message.get("tool_calls") or []
        if tool_calls:
            function = tool_calls[0].get("function", {})
            try:
                arguments = json.loads(function.get("arguments", "{}")).get("queries", [])
            except json.JSONDecodeError:
                arguments = []
            call = ToolCall(name=function.get("name", ""), arguments=tuple(arguments))
            return CompletionOutcome(call=call, usage=(prompt_count, 0))
        text = message.get("content") or ""
        output_count = usage.get("completion_tokens", estimate_tokens(text))
        return CompletionOutcome(text=text, usage=(prompt_count, output_count))


# ---------------------------------------------------------------------------
# Generation session
# ---------------------------------------------------------------------------


@dataclass
class SessionResult:
    output: str
    transcript: list[dict] = field(default_factory=list)
    prompt: str = ""
    context_entries: tuple[tuple[str, str], ...] = ()


def render_search_results(graph: KnowledgeGraph, queries: tuple[str, ...]) -> str:
    """The delimited section appended to the prompt after a search call."""
    per_query = graph.search_definitions(list(queries), k=SEARCH_RESULT_COUNT)
    lines = [SEARCH_RESULTS_HEADER, ""]
    for query, fragments in zip(queries, per_query):
        lines.append(f"query: {query}")
        lines.append("")
        for fragment in fragments:
            lines.append(fragment.id)
            lines.append(fragment.text)
            lines.append("")
    return "\n".join(lines).rstrip("\n")


def _transcript_entry(exchange: ChatExchange, outcome: CompletionOutcome) -> dict:
    return {
        "exchange": {
            "messages": [[m.role, m.text] for m in exchange.messages],
            "params": {
                "model": exchange.params.model,
                "temperature": exchange.params.temperature,
                "max_output_tokens": exchange.params.max_output_tokens,
            },
            "search_tool_declared": exchange.declare_search_tool,
            "hash": exchange_hash(exchange),
        },
        "outcome": outcome_to_dict(outcome),
        "usage": {"prompt_tokens": outcome.usage[0], "output_tokens": outcome.usage[1]},
    }


def run_generation_session(
    request: GenerationRequest,
    graph: KnowledgeGraph,
    backend: Backend,
    template: Optional[MasterPromptTemplate] = None,
    params: CompletionParams = CompletionParams(),
    enable_search_tool: bool = True,
) -> SessionResult:
    """Build context, assemble the prompt, and complete with at most one tool round.

    A search tool call is answered by appending the top results in a delimited
    section while dropping the tool instruction, then completing exactly once
    more.  A second call raises :class:`ToolLoopExceeded`.
    """
    template = template or load_template()
    bundle = build_context(graph, request.primary_concept, request.granularity, request.token_budget)
    base_prompt = assemble_prompt(template, request, bundle)

    transcript: list[dict] = []
    if enable_search_tool:
        first_prompt = base_prompt + "\n\n" + TOOL_INSTRUCTION
    else:
        first_prompt = base_prompt
    exchange = ChatExchange(
        messages=(Message("user", first_prompt),),
        params=params,
        declare_search_tool=enable_search_tool,
    )
    outcome = backend.complete(exchange)
    transcript.append(_transcript_entry(exchange, outcome))

    if outcome.call is not None:
        results_section = render_search_results(graph, outcome.call.arguments)
        second_prompt = base_prompt + "\n\n" + results_section
        second = ChatExchange(
            messages=(Message("user", second_prompt),),
            params=params,
            declare_search_tool=False,
        )
        outcome = backend.complete(second)
        transcript.append(_transcript_entry(second, outcome))
        if outcome.call is not None:
            raise ToolLoopExceeded("model requested a second tool round")

    assert outcome.text is not None
    return SessionResult(
        output=outcome.text,
        transcript=transcript,
        prompt=base_prompt,
        context_entries=bundle.entries,
    )
