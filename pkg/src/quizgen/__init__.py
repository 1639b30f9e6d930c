"""Course-grounded quiz question generation toolkit."""

__version__ = "0.1.0"

from .graph import Granularity, KnowledgeGraph, build_graph, read_manifest
from .prompt import Difficulty, GenerationRequest, assemble_prompt, load_template
from .questions import QuestionType, QuizQuestion, ReviewStatus, StudentResponse, grade
from .service import AppService
from .stex import SourceDocument, parse_document, parse_text, serialize
from .validation import validate

__all__ = [
    "AppService",
    "Difficulty",
    "GenerationRequest",
    "Granularity",
    "KnowledgeGraph",
    "QuestionType",
    "QuizQuestion",
    "ReviewStatus",
    "SourceDocument",
    "StudentResponse",
    "assemble_prompt",
    "build_graph",
    "grade",
    "load_template",
    "parse_document",
    "parse_text",
    "read_manifest",
    "serialize",
    "validate",
]
