#!/usr/bin/env python3
"""Dump a real /generate response for the frontend mock server.

Runs the replayed arc-consistency session through the actual service and API
serializer, so the mock server's payloads carry the exact schema the HTTP API
produces.  Run from the repository root:

    python3 scripts/build_frontend_fixture.py
"""

from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from quizgen.api import draft_to_json
from quizgen.gateway import ReplayBackend
from quizgen.service import AppService, request_from_dict

FIXTURES = ROOT / "tests" / "fixtures"
OUT = ROOT / "frontend" / "src" / "mock" / "fixtures.ts"


def main() -> None:
    request = request_from_dict(
        json.loads((FIXTURES / "replay" / "request.json").read_text(encoding="utf-8"))
    )
    with tempfile.TemporaryDirectory() as tmp:
        service = AppService(
            data_dir=Path(tmp) / "data",
            backend=ReplayBackend(FIXTURES / "replay" / "arc_session"),
        )
        summary = service.ingest_corpus(FIXTURES / "corpus" / "manifest.txt")
        result = service.run_generation_pipeline(summary.corpus_id, request)
        drafts = [draft_to_json(service, d) for d in result.drafts]
        symbols = service.search_symbols(summary.corpus_id, "")
        instrument = service.survey_instrument(result.drafts[0].draft_id).to_dict()

    payload = {
        "corpus_id": summary.corpus_id,
        "transcript_ref": result.transcript_ref,
        "drafts": drafts,
        "symbols": symbols,
        "instrument": instrument,
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    body = json.dumps(payload, indent=2, sort_keys=True)
    OUT.write_text(
        "// Generated by scripts/build_frontend_fixture.py from the replayed\n"
        "// arc-consistency session; payload shapes match the HTTP API exactly.\n"
        f"export const FIXTURES = {body} as const;\n",
        encoding="utf-8",
    )
    print(f"wrote {OUT} ({len(drafts)} drafts, {len(symbols)} symbols)")


if __name__ == "__main__":
    main()
