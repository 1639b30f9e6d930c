"""Module/symbol graph over parsed course materials.

Builds one :class:`ModuleEntry` per ``smodule``, one symbol per
``\\symdecl``/``\\symdef``, segments every document into retrieval fragments at
paragraph and environment boundaries, and mirrors the sectioning commands in a
section tree.  The graph is immutable after :func:`build_graph`; all query
methods are read-only and safe to call concurrently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional

from .stex import (
    DOCUMENT_ENV,
    GROUP_ENV,
    DocumentAst,
    NodeKind,
    SourceDocument,
    StexNode,
    StexSyntaxError,
    parse_document,
)


class GraphError(Exception):
    pass


class ParseFailure(GraphError):
    def __init__(self, doc_id: str, cause: StexSyntaxError):
        super().__init__(f"{doc_id}: {cause}")
        self.doc_id = doc_id
        self.cause = cause


class DuplicateSymbol(GraphError):
    def __init__(self, name: str, module_uri: str):
        super().__init__(f"module {module_uri} declares symbol '{name}' twice")
        self.name = name
        self.module_uri = module_uri


class UnknownModule(GraphError):
    pass


class UnknownSymbol(GraphError):
    pass


class AmbiguousSymbol(GraphError):
    def __init__(self, name: str, candidates: list[str]):
        super().__init__(f"symbol '{name}' is ambiguous: {', '.join(candidates)}")
        self.name = name
        self.candidates = candidates


class FragmentKind(str, Enum):
    DEFINITION = "Definition"
    EXAMPLE = "Example"
    REMARK = "Remark"
    PLAIN = "Plain"


class Granularity(str, Enum):
    CHAPTER = "Chapter"
    SECTION = "Section"
    SUBSECTION = "Subsection"


_GRANULARITY_LEVEL = {Granularity.CHAPTER: 1, Granularity.SECTION: 2, Granularity.SUBSECTION: 3}

_KIND_BY_ENV = {
    "definition": FragmentKind.DEFINITION,
    "sdefinition": FragmentKind.DEFINITION,
    "example": FragmentKind.EXAMPLE,
    "sexample": FragmentKind.EXAMPLE,
    "remark": FragmentKind.REMARK,
}

_PARAGRAPH_BREAK = re.compile(r"\n[ \t]*\n")
# Hyphens bind: "arc-consistency" is one token, distinct from "arc".
_TOKEN = re.compile(r"[a-z0-9]+(?:-[a-z0-9]+)*")


def _symbol_name_tokens(name: str) -> set[str]:
    """Match targets for the symbol-name boost: the name and its hyphen parts."""
    lowered = name.lower()
    tokens = {lowered}
    tokens.update(part for part in lowered.split("-") if part)
    return tokens


@dataclass(frozen=True)
class SymbolId:
    """Corpus-unique symbol URI of shape ``<doc_id>?<module path>?<symbol name>``."""

    uri: str

    @property
    def name(self) -> str:
        return self.uri.rsplit("?", 1)[1]

    @property
    def module_uri(self) -> str:
        return self.uri.rsplit("?", 1)[0]

    def __str__(self) -> str:
        return self.uri


@dataclass
class ModuleEntry:
    id: str
    name: str
    path: str
    doc_id: str
    imports: list[str] = field(default_factory=list)
    symbols: list[SymbolId] = field(default_factory=list)


@dataclass
class SymbolInfo:
    id: SymbolId
    name: str
    module_uri: str
    decl_macro: str
    decl_span: tuple[int, int]
    defining_fragment_ids: list[str] = field(default_factory=list)
    verbalizations: set[str] = field(default_factory=set)


@dataclass
class SectionNode:
    title: str
    level: int  # 0 = document root, 1 = chapter, 2 = section, 3 = subsection
    doc_id: str
    parent: Optional["SectionNode"] = None
    children: list["SectionNode"] = field(default_factory=list)
    fragment_ids: list[str] = field(default_factory=list)

    def subtree_fragment_ids(self) -> set[str]:
        ids = set(self.fragment_ids)
        for child in self.children:
            ids |= child.subtree_fragment_ids()
        return ids

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass
class Fragment:
    id: str
    kind: FragmentKind
    section_path: tuple[str, ...]
    text: str
    mentioned_symbols: frozenset[str]
    doc_id: str
    span: tuple[int, int]
    ordinal: int
    module_uri: Optional[str] = None
    section: Optional[SectionNode] = None


@dataclass
class KnowledgeGraph:
    modules: dict[str, ModuleEntry] = field(default_factory=dict)
    symbols: dict[str, SymbolInfo] = field(default_factory=dict)
    fragments: list[Fragment] = field(default_factory=list)
    section_roots: list[SectionNode] = field(default_factory=list)
    dangling_imports: list[tuple[str, str]] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)
    documents: dict[str, SourceDocument] = field(default_factory=dict)
    _fragments_by_id: dict[str, Fragment] = field(default_factory=dict, repr=False)
    _visibility_cache: dict[str, dict[str, frozenset[str]]] = field(default_factory=dict, repr=False)

    # -- lookup ------------------------------------------------------------------

    def fragment(self, fragment_id: str) -> Fragment:
        try:
            return self._fragments_by_id[fragment_id]
        except KeyError:
            raise GraphError(f"unknown fragment {fragment_id}") from None

    def top_level_sections(self) -> list[SectionNode]:
        """Sections sitting directly under a document root, in document order."""
        result = []
        for root in self.section_roots:
            result.extend(root.children)
        return result

    def resolve_module_ref(self, raw: str) -> Optional[str]:
        """Resolve an import target as written in markup to a module URI.

        Accepts a full URI, a module path, or a bare module name (the part
        after the last ``?`` or ``/``); None when nothing or more than one
        module matches.
        """
        raw = raw.strip()
        if raw in self.modules:
            return raw
        tail = raw.rsplit("?", 1)[-1].rsplit("/", 1)[-1].strip()
        candidates = [
            uri
            for uri, entry in self.modules.items()
            if entry.path == raw or entry.name == tail
        ]
        if len(candidates) == 1:
            return candidates[0]
        return None

    def visible_symbols(self, module_uri: str) -> dict[str, frozenset[str]]:
        """name -> symbol URIs visible in the module (local + transitive imports)."""
        if module_uri not in self.modules:
            raise UnknownModule(module_uri)
        cached = self._visibility_cache.get(module_uri)
        if cached is not None:
            return cached
        reachable: list[str] = []
        seen = {module_uri}
        queue = [module_uri]
        while queue:
            uri = queue.pop(0)
            reachable.append(uri)
            for target in self.modules[uri].imports:
                if target in self.modules and target not in seen:
                    seen.add(target)
                    queue.append(target)
        visible: dict[str, set[str]] = {}
        for uri in reachable:
            for sym in self.modules[uri].symbols:
                visible.setdefault(sym.name, set()).add(sym.uri)
        frozen = {name: frozenset(uris) for name, uris in visible.items()}
        self._visibility_cache[module_uri] = frozen
        return frozen

    def resolve_symbol(self, name: str, scope: str) -> SymbolId:
        """The unique symbol called ``name`` visible from module ``scope``.

        Raises :class:`UnknownSymbol` or :class:`AmbiguousSymbol`; never guesses.
        """
        visible = self.visible_symbols(scope)
        candidates = visible.get(name, frozenset())
        return self._pick_candidate(name, candidates)

    def resolve_in_modules(self, name: str, scopes: list[str]) -> SymbolId:
        """Like :meth:`resolve_symbol` over the union of several module scopes."""
        candidates: set[str] = set()
        for scope in scopes:
            candidates |= self.visible_symbols(scope).get(name, frozenset())
        return self._pick_candidate(name, frozenset(candidates))

    def _pick_candidate(self, name: str, candidates: frozenset[str]) -> SymbolId:
        if not candidates:
            raise UnknownSymbol(name)
        if len(candidates) > 1:
            raise AmbiguousSymbol(name, sorted(candidates))
        return self.symbols[next(iter(candidates))].id

    def symbol_search(self, query: str) -> list[SymbolInfo]:
        """Substring search over symbol names and URIs (concept picker support)."""
        needle = query.strip().lower()
        return [
            info
            for info in self.symbols.values()
            if needle in info.name.lower() or needle in info.id.uri.lower()
        ]

    def summary(self) -> dict[str, int]:
        return {
            "documents": len(self.documents),
            "modules": len(self.modules),
            "symbols": len(self.symbols),
            "fragments": len(self.fragments),
            "top_level_sections": len(self.top_level_sections()),
        }

    # -- retrieval ---------------------------------------------------------------

    def fragments_for_concept(self, symbol: str | SymbolId, granularity: Granularity) -> list[Fragment]:
        """All fragments of the granularity-level section introducing the symbol.

        The section containing the symbol's first defining fragment is widened
        (or clamped) to the requested level; a document without sectioning at
        that level falls back to the whole document.  Symbols without a
        defining fragment yield an empty list.
        """
        uri = symbol.uri if isinstance(symbol, SymbolId) else symbol
        info = self.symbols.get(uri)
        if info is None:
            raise UnknownSymbol(uri)
        if not info.defining_fragment_ids:
            return []
        first = self.fragment(info.defining_fragment_ids[0])
        target_level = _GRANULARITY_LEVEL[granularity]
        node = first.section
        best = None
        while node is not None:
            if node.level <= target_level:
                best = node
                break
            node = node.parent
        assert best is not None  # the level-0 document root always qualifies
        wanted = best.subtree_fragment_ids()
        return [f for f in self.fragments if f.id in wanted]

    def search_definitions(self, queries: list[str], k: int = 10) -> list[list[Fragment]]:
        """Per-query top-k Definition fragments.

        Score: case-insensitive term frequency of the query tokens in the
        fragment text, doubled for tokens that also occur in a symbol name
        declared in the fragment's module; ties broken by document order.
        """
        if k < 1:
            raise ValueError("k must be >= 1")
        definitions = [f for f in self.fragments if f.kind is FragmentKind.DEFINITION]
        prepared = []
        for frag in definitions:
            tokens = _TOKEN.findall(frag.text.lower())
            counts: dict[str, int] = {}
            for token in tokens:
                counts[token] = counts.get(token, 0) + 1
            name_tokens: set[str] = set()
            if frag.module_uri and frag.module_uri in self.modules:
                for sym in self.modules[frag.module_uri].symbols:
                    name_tokens.update(_symbol_name_tokens(sym.name))
            prepared.append((frag, counts, name_tokens))

        results: list[list[Fragment]] = []
        for query in queries:
            query_tokens = _TOKEN.findall(query.lower())
            scored = []
            for frag, counts, name_tokens in prepared:
                score = 0
                for token in query_tokens:
                    weight = 2 if token in name_tokens else 1
                    score += counts.get(token, 0) * weight
                if score > 0:
                    scored.append((score, frag))
            scored.sort(key=lambda pair: (-pair[0], pair[1].ordinal))
            results.append([frag for _, frag in scored[:k]])
        return results


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def read_manifest(path: str | Path) -> list[SourceDocument]:
    """Load a corpus manifest: one relative ``.tex`` path per line, in order."""
    manifest = Path(path)
    base = manifest.parent
    docs = []
    for line in manifest.read_text(encoding="utf-8").splitlines():
        rel = line.strip()
        if not rel:
            continue
        target = base / rel
        if not target.is_file():
            raise FileNotFoundError(f"manifest entry not found: {target}")
        docs.append(SourceDocument(doc_id=rel, text=target.read_text(encoding="utf-8")))
    return docs


def build_graph(docs: list[SourceDocument]) -> KnowledgeGraph:
    """Assemble the knowledge graph for an ordered corpus.

    Raises :class:`ParseFailure` on the first unparseable document and
    :class:`DuplicateSymbol` when a module declares one name twice.  Imports
    that do not resolve are recorded as dangling, never dropped.
    """
    graph = KnowledgeGraph()
    asts: list[DocumentAst] = []
    seen_doc_ids: set[str] = set()
    for doc in docs:
        if doc.doc_id in seen_doc_ids:
            raise GraphError(f"duplicate doc_id in corpus: {doc.doc_id}")
        seen_doc_ids.add(doc.doc_id)
        try:
            asts.append(parse_document(doc))
        except StexSyntaxError as err:
            raise ParseFailure(doc.doc_id, err) from err
        graph.documents[doc.doc_id] = doc

    raw_imports: list[tuple[str, str]] = []  # (module uri, raw target)
    doc_uses: dict[str, list[str]] = {}

    for ast in asts:
        _register_modules(graph, ast, raw_imports, doc_uses)

    for module_uri, raw in raw_imports:
        resolved = graph.resolve_module_ref(raw)
        if resolved is None:
            graph.modules[module_uri].imports.append(raw)
            graph.dangling_imports.append((module_uri, raw))
        else:
            graph.modules[module_uri].imports.append(resolved)

    for ast in asts:
        _collect_fragments(graph, ast, doc_uses.get(ast.doc_id, []))

    _attach_defining_fragments(graph)
    return graph


def _register_modules(
    graph: KnowledgeGraph,
    ast: DocumentAst,
    raw_imports: list[tuple[str, str]],
    doc_uses: dict[str, list[str]],
) -> None:
    doc_id = ast.doc_id

    def walk(node: StexNode, module_path: list[str]) -> None:
        for child in node.children:
            if child.kind is NodeKind.MODULE_DECL:
                path = module_path + [child.attributes["name"]]
                uri = f"{doc_id}?{'/'.join(path)}"
                if uri in graph.modules:
                    graph.diagnostics.append(f"{doc_id}: module '{uri}' redeclared")
                else:
                    graph.modules[uri] = ModuleEntry(
                        id=uri, name=path[-1], path="/".join(path), doc_id=doc_id
                    )
                walk(child, path)
            elif child.kind is NodeKind.USE_MODULE:
                target = child.attributes["module"]
                if module_path:
                    uri = f"{doc_id}?{'/'.join(module_path)}"
                    raw_imports.append((uri, target))
                else:
                    doc_uses.setdefault(doc_id, []).append(target)
                walk(child, module_path)
            elif child.kind in (NodeKind.SYMBOL_DECL, NodeKind.SYMBOL_DEF):
                name = child.attributes["name"]
                if not module_path:
                    graph.diagnostics.append(
                        f"{doc_id}: symbol '{name}' declared outside any module, skipped"
                    )
                    continue
                module_uri = f"{doc_id}?{'/'.join(module_path)}"
                uri = f"{module_uri}?{name}"
                entry = graph.modules[module_uri]
                if any(s.name == name for s in entry.symbols):
                    raise DuplicateSymbol(name, module_uri)
                sym = SymbolId(uri)
                entry.symbols.append(sym)
                graph.symbols[uri] = SymbolInfo(
                    id=sym,
                    name=name,
                    module_uri=module_uri,
                    decl_macro=child.attributes["macro"],
                    decl_span=child.span,
                )
            else:
                walk(child, module_path)

    walk(ast.root, [])


def _collect_fragments(graph: KnowledgeGraph, ast: DocumentAst, doc_uses: list[str]) -> None:
    doc_id = ast.doc_id
    text = graph.documents[doc_id].text
    root_section = SectionNode(title=doc_id, level=0, doc_id=doc_id)
    graph.section_roots.append(root_section)
    section_stack = [root_section]
    ordinal = 0

    # Symbol references with their resolution scope, gathered up front so each
    # fragment can claim the ones inside its span.
    refs: list[tuple[tuple[int, int], str, str, Optional[str]]] = []

    def gather_refs(node: StexNode, module_path: list[str]) -> None:
        for child in node.children:
            path = module_path
            if child.kind is NodeKind.MODULE_DECL:
                path = module_path + [child.attributes["name"]]
            elif child.kind is NodeKind.SYMBOL_REF:
                module_uri = f"{doc_id}?{'/'.join(module_path)}" if module_path else None
                refs.append(
                    (child.span, child.attributes["name"], child.attributes["verbalization"], module_uri)
                )
            gather_refs(child, path)

    gather_refs(ast.root, [])

    def resolve_mention(name: str, module_uri: Optional[str]) -> Optional[str]:
        scopes: list[str] = []
        if module_uri and module_uri in graph.modules:
            scopes.append(module_uri)
        for raw in doc_uses:
            resolved = graph.resolve_module_ref(raw)
            if resolved:
                scopes.append(resolved)
        candidates: set[str] = set()
        for scope in scopes:
            candidates |= graph.visible_symbols(scope).get(name, frozenset())
        if not candidates:
            candidates = {
                uri for uri, info in graph.symbols.items() if info.name == name
            }
        if len(candidates) == 1:
            return next(iter(candidates))
        if candidates:
            graph.diagnostics.append(f"{doc_id}: ambiguous mention of '{name}'")
        else:
            graph.diagnostics.append(f"{doc_id}: unresolved mention of '{name}'")
        return None

    def emit(span: tuple[int, int], kind: FragmentKind, module_uri: Optional[str]) -> None:
        nonlocal ordinal
        raw = text[span[0] : span[1]]
        stripped = raw.strip()
        if not stripped:
            return
        lead = len(raw) - len(raw.lstrip())
        start = span[0] + lead
        end = start + len(stripped)
        mentioned = set()
        for ref_span, name, verbalization, ref_module in refs:
            if start <= ref_span[0] and ref_span[1] <= end:
                resolved = resolve_mention(name, ref_module)
                if resolved:
                    mentioned.add(resolved)
                    graph.symbols[resolved].verbalizations.add(verbalization)
        section = section_stack[-1]
        fragment = Fragment(
            id=f"{doc_id}#{ordinal}",
            kind=kind,
            section_path=tuple(
                node.title for node in section_stack[1:]
            ),
            text=stripped,
            mentioned_symbols=frozenset(mentioned),
            doc_id=doc_id,
            span=(start, end),
            ordinal=len(graph.fragments),
            module_uri=module_uri,
            section=section,
        )
        ordinal += 1
        graph.fragments.append(fragment)
        graph._fragments_by_id[fragment.id] = fragment
        section.fragment_ids.append(fragment.id)

    _SECTION_LEVEL = {"chapter": 1, "section": 2, "subsection": 3}

    def walk(node: StexNode, module_path: list[str]) -> None:
        module_uri = f"{doc_id}?{'/'.join(module_path)}" if module_path else None
        run: Optional[tuple[int, int]] = None

        def flush_run() -> None:
            nonlocal run
            if run is not None:
                emit(run, FragmentKind.PLAIN, module_uri)
                run = None

        for child in node.children:
            kind = child.kind
            if kind is NodeKind.SECTION_MARKER:
                flush_run()
                level = _SECTION_LEVEL[child.attributes["level"]]
                while section_stack[-1].level >= level:
                    section_stack.pop()
                new_node = SectionNode(
                    title=child.attributes["title"],
                    level=level,
                    doc_id=doc_id,
                    parent=section_stack[-1],
                )
                section_stack[-1].children.append(new_node)
                section_stack.append(new_node)
            elif kind is NodeKind.MODULE_DECL:
                flush_run()
                walk(child, module_path + [child.attributes["name"]])
            elif kind is NodeKind.PROBLEM:
                flush_run()
                emit(child.span, FragmentKind.PLAIN, module_uri)
            elif kind is NodeKind.ENVIRONMENT and child.attributes.get("name") not in (
                GROUP_ENV,
                DOCUMENT_ENV,
            ):
                flush_run()
                env_kind = _KIND_BY_ENV.get(child.attributes["name"], FragmentKind.PLAIN)
                emit(child.span, env_kind, module_uri)
            elif kind is NodeKind.TEXT:
                # Paragraph breaks inside a text run split the fragment.
                content = child.attributes["text"]
                base = child.span[0]
                cursor = 0
                for match in _PARAGRAPH_BREAK.finditer(content):
                    piece_span = (base + cursor, base + match.start())
                    run = (run[0], piece_span[1]) if run else piece_span
                    flush_run()
                    cursor = match.end()
                tail_span = (base + cursor, child.span[1])
                run = (run[0], tail_span[1]) if run else tail_span
            else:
                run = (run[0], child.span[1]) if run else child.span
        flush_run()

    walk(ast.root, [])


def _attach_defining_fragments(graph: KnowledgeGraph) -> None:
    """Definition fragments that mention or declare a symbol define it."""
    for info in graph.symbols.values():
        for fragment in graph.fragments:
            if fragment.kind is not FragmentKind.DEFINITION:
                continue
            declares = (
                fragment.doc_id == info.id.uri.split("?", 1)[0]
                and fragment.span[0] <= info.decl_span[0]
                and info.decl_span[1] <= fragment.span[1]
            )
            if declares or info.id.uri in fragment.mentioned_symbols:
                info.defining_fragment_ids.append(fragment.id)
