"""Parser/serializer behavior, pinned by the grammar contract."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quizgen.stex import (
    DOCUMENT_ENV,
    GROUP_ENV,
    NodeKind,
    SourceDocument,
    UnbalancedBraces,
    UnclosedEnvironment,
    extract_symbol_references,
    parse_document,
    parse_text,
    plain_text,
    serialize,
    serialize_node,
)


def roundtrip(text: str) -> None:
    first = parse_text(text)
    rendered = serialize(first)
    second = parse_text(rendered)
    assert first.root.structurally_equal(second.root), (
        f"round-trip mismatch:\n--- source ---\n{text}\n--- rendered ---\n{rendered}"
    )


def kinds_of(nodes) -> list[NodeKind]:
    return [n.kind for n in nodes]


class TestBasicProductions:
    def test_module_with_symdecl(self):
        ast = parse_text(r"\begin{smodule}{arith}\symdecl{plus}\end{smodule}")
        (module,) = ast.root.children
        assert module.kind is NodeKind.MODULE_DECL
        assert module.attributes["name"] == "arith"
        (decl,) = module.children
        assert decl.kind is NodeKind.SYMBOL_DECL
        assert decl.attributes["name"] == "plus"

    def test_symref_splits_text(self):
        ast = parse_text(r"what is 2 \symref{plus}{added to} 2?")
        assert kinds_of(ast.root.children) == [NodeKind.TEXT, NodeKind.SYMBOL_REF, NodeKind.TEXT]
        ref = ast.root.children[1]
        assert ref.attributes["name"] == "plus"
        assert ref.attributes["verbalization"] == "added to"

    def test_sn_reports_name_as_verbalization(self):
        ast = parse_text(r"\sn{injective}")
        (ref,) = ast.root.children
        assert ref.attributes["verbalization"] == "injective"

    def test_sr_form(self):
        ast = parse_text(r"$a$ \sr{addition}{plus} $b$")
        refs = extract_symbol_references(ast)
        assert [(r[0], r[1]) for r in refs] == [("addition", "plus")]

    def test_usemodule_with_archive(self):
        ast = parse_text(r"\usemodule[smglom/sets]{mod?bijective}")
        (use,) = ast.root.children
        assert use.kind is NodeKind.USE_MODULE
        assert use.attributes["archive"] == "smglom/sets"
        assert use.attributes["module"] == "mod?bijective"

    def test_sectioning(self):
        ast = parse_text("\\chapter{One}\n\\section{Two}\n\\subsection{Three}\n")
        markers = [n for n in ast.root.children if n.kind is NodeKind.SECTION_MARKER]
        assert [(m.attributes["level"], m.attributes["title"]) for m in markers] == [
            ("chapter", "One"),
            ("section", "Two"),
            ("subsection", "Three"),
        ]

    def test_objective_and_precondition(self):
        ast = parse_text(r"\objective{understand}{plus}\precondition{remember}{plus}")
        a, b = ast.root.children
        assert a.kind is NodeKind.OBJECTIVE and a.attributes["macro"] == "objective"
        assert b.kind is NodeKind.OBJECTIVE and b.attributes["macro"] == "precondition"
        assert b.attributes["dimension"] == "remember"

    def test_fillinsol(self):
        ast = parse_text(r"the answer is \fillinsol[width=3cm]{42}.")
        fib = ast.root.children[1]
        assert fib.kind is NodeKind.FILL_IN_SOL
        assert fib.attributes["solution"] == "42"
        assert fib.attributes["opts"] == "width=3cm"


class TestPaperExemplar:
    def test_mcq_structure(self, mcq_exemplar_text):
        ast = parse_text(mcq_exemplar_text)
        problems = [n for n in ast.root.walk() if n.kind is NodeKind.PROBLEM]
        assert len(problems) == 1
        problem = problems[0]
        uses = [n for n in problem.walk() if n.kind is NodeKind.USE_MODULE]
        objectives = [n for n in problem.walk() if n.kind is NodeKind.OBJECTIVE]
        blocks = [n for n in problem.walk() if n.kind is NodeKind.MULTI_CHOICE_BLOCK]
        assert len(uses) == 3
        assert len(objectives) == 3
        assert len(blocks) == 1
        options = [n for n in blocks[0].children if n.kind is NodeKind.CHOICE_OPTION]
        assert len(options) == 5
        true_flags = [o for o in options if o.attributes.get("truth") == "T"]
        assert len(true_flags) == 2

    def test_mcq_roundtrip(self, mcq_exemplar_text):
        roundtrip(mcq_exemplar_text)

    def test_feedback_survives_commas_and_braces(self, mcq_exemplar_text):
        ast = parse_text(mcq_exemplar_text)
        options = [n for n in ast.root.walk() if n.kind is NodeKind.CHOICE_OPTION]
        assert options[0].attributes["feedback"] == "No, $f$ and $g$ are unrelated"


class TestMathOpacity:
    def test_inline_math_preserved_verbatim(self):
        source = r"$\compose{g,f}$"
        ast = parse_text(source)
        (math,) = ast.root.children
        assert math.kind is NodeKind.MATH
        assert math.attributes["body"] == r"\compose{g,f}"
        assert serialize(ast) == source

    def test_macros_inside_math_are_not_nodes(self):
        ast = parse_text(r"$2 \symref{plus}{added to} 2$")
        assert extract_symbol_references(ast) == []

    def test_display_math(self):
        roundtrip("before \\[ \\sum_{i=0}^n x_i \\] after")

    def test_escaped_dollar_is_text(self):
        ast = parse_text(r"costs \$5 total")
        assert kinds_of(ast.root.children) == [NodeKind.TEXT]


class TestTotality:
    def test_unknown_macro_kept_as_text(self):
        source = r"\textbf{keep me} and \emph{me too}"
        ast = parse_text(source)
        assert kinds_of(ast.root.children) == [NodeKind.TEXT]
        assert serialize(ast) == source

    def test_unknown_environment_preserved(self):
        source = "\\begin{theorem}[name=euler]body with $x$\\end{theorem}"
        ast = parse_text(source)
        (env,) = ast.root.children
        assert env.kind is NodeKind.ENVIRONMENT
        assert env.attributes["name"] == "theorem"
        assert env.attributes["opts"] == "name=euler"
        roundtrip(source)

    def test_group_with_markup_becomes_anonymous_environment(self):
        ast = parse_text(r"{see \sn{plus}}")
        (group,) = ast.root.children
        assert group.kind is NodeKind.ENVIRONMENT
        assert group.attributes["name"] == GROUP_ENV
        assert kinds_of(group.children) == [NodeKind.TEXT, NodeKind.SYMBOL_REF]
        roundtrip(r"{see \sn{plus}}")

    def test_plain_group_flattened_into_text(self):
        ast = parse_text(r"\emph{just words} trailing")
        assert kinds_of(ast.root.children) == [NodeKind.TEXT]
        assert ast.root.children[0].attributes["text"] == r"\emph{just words} trailing"

    def test_stray_end_is_diagnostic_not_error(self):
        ast = parse_text(r"leading \end{itemize} trailing")
        assert kinds_of(ast.root.children) == [NodeKind.TEXT]
        assert any("stray" in d.message for d in ast.diagnostics)
        roundtrip(r"leading \end{itemize} trailing")

    def test_mcc_outside_choice_block_is_text(self):
        ast = parse_text(r"\mcc[T]{orphan}")
        assert all(n.kind is not NodeKind.CHOICE_OPTION for n in ast.root.walk())
        assert any("choice block" in d.message for d in ast.diagnostics)


class TestErrors:
    def test_unbalanced_open_brace(self):
        with pytest.raises(UnbalancedBraces) as exc:
            parse_text("text { never closed")
        assert exc.value.span[0] == 5

    def test_stray_close_brace(self):
        with pytest.raises(UnbalancedBraces) as exc:
            parse_text("text } here")
        assert exc.value.span[0] == 5

    def test_unclosed_environment(self):
        with pytest.raises(UnclosedEnvironment) as exc:
            parse_text("x \\begin{smodule}{m} content")
        assert exc.value.name == "smodule"
        assert exc.value.span[0] == 2

    def test_unclosed_math(self):
        with pytest.raises(UnclosedEnvironment):
            parse_text("only one $ delimiter")

    def test_earliest_offset_reported(self):
        with pytest.raises(UnbalancedBraces) as exc:
            parse_text("a { b { c")
        assert exc.value.span[0] == 2


class TestSerialization:
    def test_single_symdecl_identity(self):
        ast = parse_text(r"\symdecl{plus}")
        out = serialize(ast)
        assert out.count(r"\symdecl{plus}") == 1
        assert out == r"\symdecl{plus}"

    def test_canonicalizes_whitespace_between_args(self):
        # Argument whitespace is consumed into the node, not duplicated.
        ast = parse_text("\\mcc-free \\symref {plus}\n{added to} x")
        rendered = serialize(ast)
        assert "\\symref{plus}{added to}" in rendered
        roundtrip("\\symref {plus}\n{added to} x")

    def test_serializer_rejects_nothing_on_valid_ast(self, mcq_exemplar_text):
        ast = parse_text(mcq_exemplar_text)
        for node in ast.root.walk():
            serialize_node(node)


class TestSpans:
    def test_spans_nest_and_do_not_overlap(self, mcq_exemplar_text):
        ast = parse_text(mcq_exemplar_text)

        def check(node):
            prev_end = node.span[0]
            for child in node.children:
                assert node.span[0] <= child.span[0] <= child.span[1] <= node.span[1]
                assert child.span[0] >= prev_end
                prev_end = child.span[1]
                check(child)

        check(ast.root)

    def test_slice_reparses_to_same_subtree(self, mcq_exemplar_text):
        doc = SourceDocument(doc_id="mcq", text=mcq_exemplar_text)
        ast = parse_document(doc)
        for node in ast.root.walk():
            if node.kind is NodeKind.ENVIRONMENT and node.attributes.get("name") == DOCUMENT_ENV:
                continue
            piece = doc.text[node.span[0] : node.span[1]]
            if node.kind is NodeKind.CHOICE_OPTION:
                piece = "\\begin{mcb}" + piece + "\\end{mcb}"
                reparsed = parse_text(piece).root.children[0].children
            else:
                reparsed = parse_text(piece).root.children
            matches = [n for n in reparsed if n.kind is node.kind]
            assert any(node.structurally_equal(m) for m in matches), (
                f"span slice of {node.kind} did not re-parse to itself: {piece!r}"
            )


class TestExtraction:
    def test_reference_listing_in_document_order(self):
        ast = parse_text(r"2 \symref{plus}{added to} 2 and \sn{times}")
        refs = extract_symbol_references(ast)
        assert [(r[0], r[1]) for r in refs] == [("plus", "added to"), ("times", "times")]
        assert refs[0][2][0] < refs[1][2][0]

    def test_empty_document(self):
        assert extract_symbol_references(parse_text("")) == []

    def test_plain_text_rendering(self):
        ast = parse_text(r"fill \fillinsol{4} and \sn{plus} in $x+1$")
        assert plain_text(ast.root.children) == "fill _____ and plus in x+1"


# -- property-based checks ---------------------------------------------------

_WORDS = st.text(alphabet="abcdefg -\n", min_size=0, max_size=12)
_NAMES = st.sampled_from(["plus", "times", "arc", "revise"])


def _snippet() -> st.SearchStrategy[str]:
    word = _WORDS
    leaf = st.one_of(
        word,
        _NAMES.map(lambda n: f"\\symdecl{{{n}}}"),
        _NAMES.map(lambda n: f"\\sn{{{n}}}"),
        st.tuples(_NAMES, word).map(lambda t: f"\\symref{{{t[0]}}}{{{t[1].strip() or 'x'}}}"),
        word.map(lambda w: f"${w or 'x'}$"),
        word.map(lambda w: "{" + w + "}"),
        word.map(lambda w: f"\\unknown{{{w}}}"),
    )
    return st.recursive(
        leaf,
        lambda inner: st.one_of(
            st.tuples(st.sampled_from(["definition", "example", "remark"]), st.lists(inner, max_size=3)).map(
                lambda t: f"\\begin{{{t[0]}}}" + "".join(t[1]) + f"\\end{{{t[0]}}}"
            ),
            st.tuples(_NAMES, st.lists(inner, max_size=3)).map(
                lambda t: f"\\begin{{smodule}}{{{t[0]}}}" + "".join(t[1]) + "\\end{smodule}"
            ),
        ),
        max_leaves=12,
    )


@given(st.lists(_snippet(), max_size=6).map("".join))
@settings(max_examples=150, deadline=None)
def test_roundtrip_property(source):
    roundtrip(source)


@given(st.lists(_snippet(), max_size=6).map("".join))
@settings(max_examples=150, deadline=None)
def test_totality_property(source):
    ast = parse_text(source)
    assert ast.root is not None
