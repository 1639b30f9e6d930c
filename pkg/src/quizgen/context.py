"""Retrieval context assembly under a token budget.

Fragments for the requested concept are rendered as an id line followed by the
verbatim fragment text.  Fragments that define the concept are packed first and
are never dropped while budget remains; the final entry list is reported in
document order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Fragment, Granularity, KnowledgeGraph, SymbolId, UnknownSymbol

DEFAULT_TOKEN_BUDGET = 100_000


class BudgetTooSmall(ValueError):
    def __init__(self, fragment_id: str, cost: int, budget: int):
        super().__init__(
            f"defining fragment {fragment_id} needs {cost} tokens, budget is {budget}"
        )
        self.fragment_id = fragment_id
        self.cost = cost
        self.budget = budget


@dataclass(frozen=True)
class ContextBundle:
    entries: tuple[tuple[str, str], ...]  # (fragment id, verbatim text)
    estimated_tokens: int
    truncated: bool

    def rendered(self) -> str:
        """The learning-objects block: each entry is its id line plus text."""
        return "\n\n".join(f"{fid}\n{text}" for fid, text in self.entries)


def estimate_tokens(text: str) -> int:
    """Deterministic, provider-independent estimate: ceil(utf-8 bytes / 4)."""
    return math.ceil(len(text.encode("utf-8")) / 4)


def _entry_cost(fragment: Fragment) -> int:
    return estimate_tokens(f"{fragment.id}\n{fragment.text}")


def build_context(
    graph: KnowledgeGraph,
    symbol: str | SymbolId,
    granularity: Granularity,
    budget: int = DEFAULT_TOKEN_BUDGET,
) -> ContextBundle:
    """Select and pack concept fragments greedily until the budget is hit.

    Packing order puts defining fragments first; the walk stops at the first
    fragment that would overflow, so a larger budget always keeps a superset.
    Raises :class:`BudgetTooSmall` when not even the first defining fragment
    fits, and :class:`UnknownSymbol` for symbols outside the graph.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    uri = symbol.uri if isinstance(symbol, SymbolId) else symbol
    info = graph.symbols.get(uri)
    if info is None:
        raise UnknownSymbol(uri)

    fragments = graph.fragments_for_concept(uri, granularity)
    defining_ids = set(info.defining_fragment_ids)
    packing_order = [f for f in fragments if f.id in defining_ids] + [
        f for f in fragments if f.id not in defining_ids
    ]

    if packing_order and packing_order[0].id in defining_ids:
        first_cost = _entry_cost(packing_order[0])
        if first_cost > budget:
            raise BudgetTooSmall(packing_order[0].id, first_cost, budget)

    taken: list[Fragment] = []
    total = 0
    truncated = False
    for fragment in packing_order:
        cost = _entry_cost(fragment)
        if total + cost > budget:
            truncated = True
            break
        taken.append(fragment)
        total += cost

    taken.sort(key=lambda f: f.ordinal)
    return ContextBundle(
        entries=tuple((f.id, f.text) for f in taken),
        estimated_tokens=total,
        truncated=truncated,
    )
