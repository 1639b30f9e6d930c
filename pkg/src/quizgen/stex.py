"""Tokenizer, parser, and serializer for the sTeX subset used by course materials.

The grammar recognized here is deliberately small (see docs/grammar.md for the
exact list with examples): module declarations, symbol declarations and
references, problem environments with choice blocks and fill-in boxes,
objectives/preconditions, sectioning, and opaque math.  Everything else is
preserved verbatim as Text or generic Environment nodes, so parsing is total
for any input with balanced braces and environments.

Thread safety: parsing is a pure function over an immutable string; the
returned AST is never mutated by this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

Span = tuple[int, int]


class Origin(str, Enum):
    COURSE_MATERIAL = "CourseMaterial"
    GENERATED_OUTPUT = "GeneratedOutput"


class NodeKind(str, Enum):
    MODULE_DECL = "ModuleDecl"
    USE_MODULE = "UseModule"
    SYMBOL_DECL = "SymbolDecl"
    SYMBOL_DEF = "SymbolDef"
    SYMBOL_REF = "SymbolRef"
    PROBLEM = "Problem"
    MULTI_CHOICE_BLOCK = "MultiChoiceBlock"
    SINGLE_CHOICE_BLOCK = "SingleChoiceBlock"
    CHOICE_OPTION = "ChoiceOption"
    FILL_IN_SOL = "FillInSol"
    OBJECTIVE = "Objective"
    SECTION_MARKER = "SectionMarker"
    TEXT = "Text"
    MATH = "Math"
    ENVIRONMENT = "Environment"


@dataclass(frozen=True)
class SourceDocument:
    """A single input file: ``doc_id`` is a path-like identifier, unique per corpus."""

    doc_id: str
    text: str
    origin: Origin = Origin.COURSE_MATERIAL

    def __post_init__(self) -> None:
        if not self.doc_id:
            raise ValueError("doc_id must be non-empty")


@dataclass
class StexNode:
    kind: NodeKind
    attributes: dict[str, str] = field(default_factory=dict)
    children: list["StexNode"] = field(default_factory=list)
    span: Span = (0, 0)

    def walk(self) -> Iterator["StexNode"]:
        """Pre-order traversal (document order)."""
        yield self
        for child in self.children:
            yield from child.walk()

    def structurally_equal(self, other: "StexNode") -> bool:
        """Equality on kind/attributes/children, ignoring spans."""
        if self.kind is not other.kind or self.attributes != other.attributes:
            return False
        if len(self.children) != len(other.children):
            return False
        return all(a.structurally_equal(b) for a, b in zip(self.children, other.children))


@dataclass(frozen=True)
class Diagnostic:
    message: str
    span: Span


@dataclass
class DocumentAst:
    root: StexNode
    doc_id: str
    diagnostics: list[Diagnostic] = field(default_factory=list)


class StexSyntaxError(ValueError):
    """Input violates the balanced-brace/environment precondition."""

    def __init__(self, message: str, span: Span, at_eof: bool = False):
        super().__init__(f"{message} at offset {span[0]}")
        self.span = span
        # Errors hitting end-of-input are re-anchored to the outermost still
        # pending construct, so the earliest offending offset is reported.
        self.at_eof = at_eof


class UnbalancedBraces(StexSyntaxError):
    def __init__(self, span: Span, at_eof: bool = False):
        super().__init__("unbalanced braces", span, at_eof)


class UnclosedEnvironment(StexSyntaxError):
    def __init__(self, name: str, span: Span, at_eof: bool = False):
        super().__init__(f"unclosed environment '{name}'", span, at_eof)
        self.name = name


# Environments with dedicated node kinds.  mcb/scb children may contain
# \mcc/\scc options; everything else gets the generic Environment kind.
_ENV_KINDS = {
    "smodule": NodeKind.MODULE_DECL,
    "sproblem": NodeKind.PROBLEM,
    "mcb": NodeKind.MULTI_CHOICE_BLOCK,
    "scb": NodeKind.SINGLE_CHOICE_BLOCK,
}

_SECTION_LEVELS = {"chapter": 1, "section": 2, "subsection": 3}

# Root/anonymous-group sentinels for Environment nodes.
DOCUMENT_ENV = "#document"
GROUP_ENV = ""

_LETTERS = re.compile(r"[A-Za-z]+")


def parse_document(doc: SourceDocument) -> DocumentAst:
    """Parse a source document into a typed AST.

    Total for balanced input: unknown macros and environments are preserved
    verbatim rather than rejected.  Raises :class:`UnbalancedBraces` or
    :class:`UnclosedEnvironment` at the earliest offending offset otherwise.
    """
    parser = _Parser(doc.text)
    children = parser.parse_nodes(stop_env=None, stop_brace=False, in_choice_block=False)
    root = StexNode(
        kind=NodeKind.ENVIRONMENT,
        attributes={"name": DOCUMENT_ENV},
        children=children,
        span=(0, len(doc.text)),
    )
    return DocumentAst(root=root, doc_id=doc.doc_id, diagnostics=parser.diagnostics)


def parse_text(text: str, doc_id: str = "<inline>") -> DocumentAst:
    """Convenience wrapper for parsing a bare string."""
    return parse_document(SourceDocument(doc_id=doc_id, text=text, origin=Origin.GENERATED_OUTPUT))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.diagnostics: list[Diagnostic] = []

    # -- character-level helpers -------------------------------------------------

    def _at_end(self) -> bool:
        return self.pos >= len(self.text)

    def _warn(self, message: str, span: Span) -> None:
        self.diagnostics.append(Diagnostic(message, span))

    def _skip_arg_whitespace(self, start: int) -> int:
        """Skip whitespace between a macro and its arguments.

        A blank line ends argument scanning (TeX paragraph break), so at most
        one newline is crossed.
        """
        pos = start
        newlines = 0
        while pos < len(self.text) and self.text[pos] in " \t\n":
            if self.text[pos] == "\n":
                newlines += 1
                if newlines > 1:
                    return start
            pos += 1
        return pos

    def _scan_group(self, open_pos: int) -> tuple[str, int]:
        """Scan ``{...}`` starting at ``open_pos``; return (interior, end-after-brace).

        Nested braces must balance; ``\\{`` and ``\\}`` do not count.
        """
        assert self.text[open_pos] == "{"
        depth = 0
        pos = open_pos
        while pos < len(self.text):
            ch = self.text[pos]
            if ch == "\\" and pos + 1 < len(self.text):
                pos += 2
                continue
            if ch == "{":
                depth += 1
            elif ch == "}":
                depth -= 1
                if depth == 0:
                    return self.text[open_pos + 1 : pos], pos + 1
            pos += 1
        raise UnbalancedBraces((open_pos, open_pos + 1))

    def _scan_bracket(self, open_pos: int) -> tuple[str, int]:
        """Scan ``[...]``; a ``]`` only closes at brace depth zero."""
        assert self.text[open_pos] == "["
        depth = 0
        pos = open_pos + 1
        while pos < len(self.text):
            ch = self.text[pos]
            if ch == "\\" and pos + 1 < len(self.text):
                pos += 2
                continue
            if ch == "{":
                depth += 1
            elif ch == "}":
                depth -= 1
            elif ch == "]" and depth == 0:
                return self.text[open_pos + 1 : pos], pos + 1
            pos += 1
        raise UnbalancedBraces((open_pos, open_pos + 1))

    def _try_required_group(self, start: int) -> Optional[tuple[str, int]]:
        pos = self._skip_arg_whitespace(start)
        if pos < len(self.text) and self.text[pos] == "{":
            return self._scan_group(pos)
        return None

    def _try_optional_bracket(self, start: int) -> Optional[tuple[str, int]]:
        pos = self._skip_arg_whitespace(start)
        if pos < len(self.text) and self.text[pos] == "[":
            return self._scan_bracket(pos)
        return None

    # -- node assembly -----------------------------------------------------------

    @staticmethod
    def _append(nodes: list[StexNode], node: StexNode) -> None:
        """Append, merging adjacent Text nodes so serialization round-trips."""
        if (
            node.kind is NodeKind.TEXT
            and nodes
            and nodes[-1].kind is NodeKind.TEXT
        ):
            prev = nodes[-1]
            prev.attributes["text"] += node.attributes["text"]
            prev.span = (prev.span[0], node.span[1])
        else:
            nodes.append(node)

    def _flush_text(self, nodes: list[StexNode], buf_start: int, buf_end: int) -> None:
        if buf_end > buf_start:
            self._append(
                nodes,
                StexNode(
                    kind=NodeKind.TEXT,
                    attributes={"text": self.text[buf_start:buf_end]},
                    span=(buf_start, buf_end),
                ),
            )

    # -- main loop ---------------------------------------------------------------

    def parse_nodes(
        self,
        stop_env: Optional[str],
        stop_brace: bool,
        in_choice_block: bool,
        env_open_pos: int = 0,
    ) -> list[StexNode]:
        """Parse until ``\\end{stop_env}``, a closing ``}``, or end of input.

        The terminator itself is consumed for environments but left in place
        for braces (the group scanner owns it).  ``env_open_pos`` anchors the
        error span when ``stop_env`` is never closed.
        """
        nodes: list[StexNode] = []
        buf_start = self.pos
        text = self.text

        while self.pos < len(text):
            ch = text[self.pos]

            if ch == "\\":
                nxt = text[self.pos + 1] if self.pos + 1 < len(text) else ""
                if nxt == "[":
                    self._flush_text(nodes, buf_start, self.pos)
                    self._append(nodes, self._parse_display_math())
                    buf_start = self.pos
                elif nxt and not nxt.isalpha():
                    # Control symbol (\$, \{, \%, \\, ...): literal text.
                    self.pos += 2
                else:
                    name_match = _LETTERS.match(text, self.pos + 1)
                    if name_match is None:
                        self.pos += 1  # lone trailing backslash
                        continue
                    name = name_match.group()
                    word_end = name_match.end()
                    if name == "begin":
                        self._flush_text(nodes, buf_start, self.pos)
                        self._append(nodes, self._parse_environment(self.pos, word_end))
                        buf_start = self.pos
                    elif name == "end":
                        env_name, after = self._read_env_name(word_end)
                        if stop_env is not None and env_name == stop_env:
                            self._flush_text(nodes, buf_start, self.pos)
                            self.pos = after
                            return nodes
                        # An \end that does not close anything we opened.
                        if stop_env is not None:
                            raise UnclosedEnvironment(stop_env, (env_open_pos, env_open_pos + 1))
                        self._warn(f"stray \\end{{{env_name}}}", (self.pos, after))
                        self.pos = after
                    else:
                        handled = self._parse_macro(name, self.pos, word_end, nodes, buf_start, in_choice_block)
                        if handled:
                            buf_start = self.pos
                        # else: unknown macro, keep scanning as text
            elif ch == "$":
                self._flush_text(nodes, buf_start, self.pos)
                self._append(nodes, self._parse_inline_math())
                buf_start = self.pos
            elif ch == "{":
                group_node, group_end, pure_text = self._parse_group(self.pos, in_choice_block=False)
                if pure_text:
                    # Keep the braces inside the surrounding text run.
                    self.pos = group_end
                else:
                    self._flush_text(nodes, buf_start, self.pos)
                    self._append(nodes, group_node)
                    self.pos = group_end
                    buf_start = self.pos
            elif ch == "}":
                if stop_brace:
                    self._flush_text(nodes, buf_start, self.pos)
                    return nodes
                raise UnbalancedBraces((self.pos, self.pos + 1))
            else:
                self.pos += 1

        if stop_env is not None:
            raise UnclosedEnvironment(stop_env, (env_open_pos, env_open_pos + 1), at_eof=True)
        if stop_brace:
            raise UnbalancedBraces((env_open_pos, env_open_pos + 1), at_eof=True)
        self._flush_text(nodes, buf_start, self.pos)
        return nodes

    # -- math --------------------------------------------------------------------

    def _parse_inline_math(self) -> StexNode:
        start = self.pos
        pos = self.pos + 1
        text = self.text
        while pos < len(text):
            ch = text[pos]
            if ch == "\\" and pos + 1 < len(text):
                pos += 2
                continue
            if ch == "$":
                self.pos = pos + 1
                return StexNode(
                    kind=NodeKind.MATH,
                    attributes={"body": text[start + 1 : pos], "display": "false"},
                    span=(start, pos + 1),
                )
            pos += 1
        raise UnclosedEnvironment("$", (start, start + 1))

    def _parse_display_math(self) -> StexNode:
        start = self.pos  # at the backslash of \[
        idx = self.text.find("\\]", start + 2)
        if idx < 0:
            raise UnclosedEnvironment("\\[", (start, start + 2))
        self.pos = idx + 2
        return StexNode(
            kind=NodeKind.MATH,
            attributes={"body": self.text[start + 2 : idx], "display": "true"},
            span=(start, idx + 2),
        )

    # -- groups ------------------------------------------------------------------

    def _parse_group(self, open_pos: int, in_choice_block: bool) -> tuple[StexNode, int, bool]:
        """Parse a brace group in text context.

        Returns (node, end, pure_text).  Pure-text groups (no structure inside)
        are flattened back into the surrounding text run; others become an
        anonymous-group Environment so spans stay brace-balanced.
        """
        saved = self.pos
        self.pos = open_pos + 1
        try:
            children = self.parse_nodes(
                stop_env=None, stop_brace=True, in_choice_block=in_choice_block, env_open_pos=open_pos
            )
        except StexSyntaxError as err:
            if err.at_eof:
                raise UnbalancedBraces((open_pos, open_pos + 1), at_eof=True) from None
            raise
        if self._at_end() or self.text[self.pos] != "}":
            raise UnbalancedBraces((open_pos, open_pos + 1))
        end = self.pos + 1
        self.pos = saved
        pure_text = all(c.kind is NodeKind.TEXT for c in children)
        node = StexNode(
            kind=NodeKind.ENVIRONMENT,
            attributes={"name": GROUP_ENV},
            children=children,
            span=(open_pos, end),
        )
        return node, end, pure_text

    # -- environments ------------------------------------------------------------

    def _read_env_name(self, after_word: int) -> tuple[str, int]:
        grp = self._try_required_group(after_word)
        if grp is None:
            raise StexSyntaxError("missing environment name", (after_word, after_word))
        return grp[0].strip(), grp[1]

    def _parse_environment(self, start: int, after_word: int) -> StexNode:
        env_name, pos = self._read_env_name(after_word)
        attributes: dict[str, str] = {}
        kind = _ENV_KINDS.get(env_name, NodeKind.ENVIRONMENT)

        opt = self._try_optional_bracket(pos)
        if opt is not None:
            attributes["opts"] = opt[0]
            pos = opt[1]

        if kind is NodeKind.MODULE_DECL:
            grp = self._try_required_group(pos)
            if grp is None:
                raise StexSyntaxError("smodule requires a name argument", (pos, pos))
            attributes["name"] = grp[0].strip()
            pos = grp[1]
        elif kind is NodeKind.ENVIRONMENT:
            attributes["name"] = env_name

        self.pos = pos
        in_choice = kind in (NodeKind.MULTI_CHOICE_BLOCK, NodeKind.SINGLE_CHOICE_BLOCK)
        try:
            children = self.parse_nodes(
                stop_env=env_name, stop_brace=False, in_choice_block=in_choice, env_open_pos=start
            )
        except StexSyntaxError as err:
            if err.at_eof:
                raise UnclosedEnvironment(env_name, (start, start + 1), at_eof=True) from None
            raise
        return StexNode(kind=kind, attributes=attributes, children=children, span=(start, self.pos))

    # -- macros ------------------------------------------------------------------

    def _parse_macro(
        self,
        name: str,
        start: int,
        after_word: int,
        nodes: list[StexNode],
        buf_start: int,
        in_choice_block: bool,
    ) -> bool:
        """Dispatch a recognized macro.

        Returns True when a node was emitted (text flushed, ``self.pos``
        advanced past the construct); False leaves the macro to the text run.
        """
        builder = None
        if name in ("usemodule", "importmodule"):
            builder = self._macro_use_module
        elif name in ("symdecl", "symdef"):
            builder = self._macro_symbol_intro
        elif name in ("symref", "sr", "sn"):
            builder = self._macro_symbol_ref
        elif name == "fillinsol":
            builder = self._macro_fillinsol
        elif name in ("objective", "precondition"):
            builder = self._macro_objective
        elif name in _SECTION_LEVELS:
            builder = self._macro_section
        elif name in ("mcc", "scc"):
            if not in_choice_block:
                self._warn(
                    f"\\{name} outside a choice block is kept as plain text",
                    (start, after_word),
                )
                self.pos = after_word
                return False
            builder = self._macro_choice_option
        else:
            self.pos = after_word
            return False

        node = builder(name, start, after_word)
        if node is None:
            # Malformed arguments: fall back to literal text for totality.
            self._warn(f"malformed \\{name}, kept as plain text", (start, after_word))
            self.pos = after_word
            return False
        self._flush_text(nodes, buf_start, start)
        self._append(nodes, node)
        return True

    def _macro_use_module(self, name: str, start: int, pos: int) -> Optional[StexNode]:
        attributes = {"macro": name}
        opt = self._try_optional_bracket(pos)
        if opt is not None:
            attributes["archive"] = opt[0]
            pos = opt[1]
        grp = self._try_required_group(pos)
        if grp is None:
            return None
        attributes["module"] = grp[0].strip()
        self.pos = grp[1]
        return StexNode(kind=NodeKind.USE_MODULE, attributes=attributes, span=(start, self.pos))

    def _macro_symbol_intro(self, name: str, start: int, pos: int) -> Optional[StexNode]:
        grp = self._try_required_group(pos)
        if grp is None:
            return None
        attributes = {"macro": name, "name": grp[0].strip()}
        pos = grp[1]
        opt = self._try_optional_bracket(pos)
        if opt is not None:
            attributes["opts"] = opt[0]
            pos = opt[1]
        self.pos = pos
        kind = NodeKind.SYMBOL_DECL if name == "symdecl" else NodeKind.SYMBOL_DEF
        return StexNode(kind=kind, attributes=attributes, span=(start, self.pos))

    def _macro_symbol_ref(self, name: str, start: int, pos: int) -> Optional[StexNode]:
        grp = self._try_required_group(pos)
        if grp is None:
            return None
        symbol = grp[0].strip()
        pos = grp[1]
        if name == "sn":
            verbalization = symbol
        else:
            second = self._try_required_group(pos)
            if second is None:
                return None
            verbalization = second[0]
            pos = second[1]
        self.pos = pos
        return StexNode(
            kind=NodeKind.SYMBOL_REF,
            attributes={"macro": name, "name": symbol, "verbalization": verbalization},
            span=(start, self.pos),
        )

    def _macro_fillinsol(self, name: str, start: int, pos: int) -> Optional[StexNode]:
        attributes: dict[str, str] = {}
        opt = self._try_optional_bracket(pos)
        if opt is not None:
            attributes["opts"] = opt[0]
            pos = opt[1]
        grp = self._try_required_group(pos)
        if grp is None:
            return None
        attributes["solution"] = grp[0]
        self.pos = grp[1]
        return StexNode(kind=NodeKind.FILL_IN_SOL, attributes=attributes, span=(start, self.pos))

    def _macro_objective(self, name: str, start: int, pos: int) -> Optional[StexNode]:
        first = self._try_required_group(pos)
        if first is None:
            return None
        second = self._try_required_group(first[1])
        if second is None:
            return None
        self.pos = second[1]
        return StexNode(
            kind=NodeKind.OBJECTIVE,
            attributes={"macro": name, "dimension": first[0].strip(), "symbol": second[0].strip()},
            span=(start, self.pos),
        )

    def _macro_section(self, name: str, start: int, pos: int) -> Optional[StexNode]:
        grp = self._try_required_group(pos)
        if grp is None:
            return None
        self.pos = grp[1]
        return StexNode(
            kind=NodeKind.SECTION_MARKER,
            attributes={"level": name, "title": grp[0]},
            span=(start, self.pos),
        )

    def _macro_choice_option(self, name: str, start: int, pos: int) -> Optional[StexNode]:
        attributes = {"macro": name}
        opt = self._try_optional_bracket(pos)
        if opt is not None:
            attributes["raw_opts"] = opt[0]
            attributes.update(_parse_choice_opts(opt[0]))
            pos = opt[1]
        grp_pos = self._skip_arg_whitespace(pos)
        if grp_pos >= len(self.text) or self.text[grp_pos] != "{":
            return None
        saved = self.pos
        self.pos = grp_pos + 1
        try:
            children = self.parse_nodes(
                stop_env=None, stop_brace=True, in_choice_block=False, env_open_pos=grp_pos
            )
        except StexSyntaxError as err:
            if err.at_eof:
                raise UnbalancedBraces((grp_pos, grp_pos + 1), at_eof=True) from None
            raise
        if self._at_end() or self.text[self.pos] != "}":
            raise UnbalancedBraces((grp_pos, grp_pos + 1))
        end = self.pos + 1
        self.pos = end
        return StexNode(
            kind=NodeKind.CHOICE_OPTION,
            attributes=attributes,
            children=children,
            span=(start, end),
        )


_GRADING_KEYS = ("set", "add", "deduct")


def _split_top_level(raw: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside of braces (feedback values may contain commas)."""
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    i = 0
    while i < len(raw):
        ch = raw[i]
        if ch == "\\" and i + 1 < len(raw):
            current.append(raw[i : i + 2])
            i += 2
            continue
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
        i += 1
    parts.append("".join(current))
    return parts


def _parse_choice_opts(raw: str) -> dict[str, str]:
    """Parse an ``\\mcc``/``\\scc`` option list into typed attributes.

    Understood items: bare ``T``/``F`` truth flags, ``feedback={...}``, and
    grading actions ``set=``/``add=``/``deduct=``.  Unknown items stay in the
    raw option string and are otherwise ignored.
    """
    attributes: dict[str, str] = {}
    for item in _split_top_level(raw):
        item = item.strip()
        if not item:
            continue
        if item in ("T", "F"):
            attributes.setdefault("truth", item)
            continue
        if "=" in item:
            key, value = item.split("=", 1)
            key = key.strip()
            value = value.strip()
            if value.startswith("{") and value.endswith("}"):
                value = value[1:-1]
            if key == "feedback":
                attributes.setdefault("feedback", value)
            elif key in _GRADING_KEYS and "grading_kind" not in attributes:
                attributes["grading_kind"] = key
                attributes["grading_points"] = value
    return attributes


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def serialize(ast: DocumentAst) -> str:
    """Render an AST back to markup that re-parses to a structurally equal AST."""
    return serialize_nodes(ast.root.children)


def serialize_nodes(nodes: list[StexNode]) -> str:
    return "".join(serialize_node(n) for n in nodes)


def serialize_node(node: StexNode) -> str:
    attrs = node.attributes
    kind = node.kind
    if kind is NodeKind.TEXT:
        return attrs["text"]
    if kind is NodeKind.MATH:
        if attrs.get("display") == "true":
            return "\\[" + attrs["body"] + "\\]"
        return "$" + attrs["body"] + "$"
    if kind is NodeKind.USE_MODULE:
        archive = f"[{attrs['archive']}]" if "archive" in attrs else ""
        return f"\\{attrs['macro']}{archive}{{{attrs['module']}}}"
    if kind in (NodeKind.SYMBOL_DECL, NodeKind.SYMBOL_DEF):
        opts = f"[{attrs['opts']}]" if "opts" in attrs else ""
        return f"\\{attrs['macro']}{{{attrs['name']}}}{opts}"
    if kind is NodeKind.SYMBOL_REF:
        if attrs["macro"] == "sn":
            return f"\\sn{{{attrs['name']}}}"
        return f"\\{attrs['macro']}{{{attrs['name']}}}{{{attrs['verbalization']}}}"
    if kind is NodeKind.FILL_IN_SOL:
        opts = f"[{attrs['opts']}]" if "opts" in attrs else ""
        return f"\\fillinsol{opts}{{{attrs['solution']}}}"
    if kind is NodeKind.OBJECTIVE:
        return f"\\{attrs['macro']}{{{attrs['dimension']}}}{{{attrs['symbol']}}}"
    if kind is NodeKind.SECTION_MARKER:
        return f"\\{attrs['level']}{{{attrs['title']}}}"
    if kind is NodeKind.CHOICE_OPTION:
        opts = f"[{attrs['raw_opts']}]" if "raw_opts" in attrs else ""
        return f"\\{attrs['macro']}{opts}{{{serialize_nodes(node.children)}}}"
    if kind is NodeKind.MODULE_DECL:
        opts = f"[{attrs['opts']}]" if "opts" in attrs else ""
        body = serialize_nodes(node.children)
        return f"\\begin{{smodule}}{opts}{{{attrs['name']}}}{body}\\end{{smodule}}"
    if kind is NodeKind.PROBLEM:
        return _serialize_env("sproblem", node)
    if kind is NodeKind.MULTI_CHOICE_BLOCK:
        return _serialize_env("mcb", node)
    if kind is NodeKind.SINGLE_CHOICE_BLOCK:
        return _serialize_env("scb", node)
    if kind is NodeKind.ENVIRONMENT:
        name = attrs.get("name", "")
        if name == DOCUMENT_ENV:
            return serialize_nodes(node.children)
        if name == GROUP_ENV:
            return "{" + serialize_nodes(node.children) + "}"
        return _serialize_env(name, node)
    raise AssertionError(f"unhandled node kind {kind}")


def _serialize_env(name: str, node: StexNode) -> str:
    opts = f"[{node.attributes['opts']}]" if "opts" in node.attributes else ""
    return f"\\begin{{{name}}}{opts}{serialize_nodes(node.children)}\\end{{{name}}}"


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------


def extract_symbol_references(ast: DocumentAst) -> list[tuple[str, str, Span]]:
    """All symbol references in document order: (name, verbalization, span).

    ``\\sn{x}`` reports its own name as the verbalization.
    """
    return [
        (n.attributes["name"], n.attributes["verbalization"], n.span)
        for n in ast.root.walk()
        if n.kind is NodeKind.SYMBOL_REF
    ]


def plain_text(nodes: list[StexNode]) -> str:
    """Human-visible text of a node list: text runs, math bodies, verbalizations."""
    parts: list[str] = []
    for node in nodes:
        if node.kind is NodeKind.TEXT:
            parts.append(node.attributes["text"])
        elif node.kind is NodeKind.MATH:
            parts.append(node.attributes["body"])
        elif node.kind is NodeKind.SYMBOL_REF:
            parts.append(node.attributes["verbalization"])
        elif node.kind is NodeKind.FILL_IN_SOL:
            parts.append("_____")
        elif node.children:
            parts.append(plain_text(node.children))
    return "".join(parts)
