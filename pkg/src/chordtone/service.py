"""HTTP facade: generation endpoint plus durable like/dislike feedback.

Endpoints:
  POST /api/generate  run the pipeline against a preference snapshot
  POST /api/feedback  record one like/dislike for a shape fingerprint
  GET  /api/health    liveness + wire-format version

Validation problems answer 400 with the offending field path; a chord
that yields no playable shapes answers 422 naming the chord. With a
static directory configured the app also serves the web UI, making the
whole practice tool one process.
"""

from __future__ import annotations

import argparse
import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .errors import (
    ChordParseError,
    EmptyLayerError,
    NoShapesError,
    PatternTooShortError,
)
from .pipeline import GenerationSettings, generate
from .prefs import PreferenceStore, is_valid_fingerprint
from .tabrender import FORMAT_VERSION


class WeightCoeffs(BaseModel):
    transition: float = Field(1.0, ge=0)
    handMove: float = Field(0.0, ge=0)
    preference: float = Field(0.0, ge=0)
    preferenceUnit: float = Field(1.0, ge=0)
    stringChangePenalty: float = Field(2.0, ge=0)


class GenerateRequest(BaseModel):
    progression: str
    npm: int = Field(4, ge=1)
    stretch: int = Field(4, ge=1)
    seed: int | None = None
    randomizeStart: bool = False
    coeffs: WeightCoeffs = Field(default_factory=WeightCoeffs)


class FeedbackRequest(BaseModel):
    fingerprint: str
    verdict: str


def _field_error(field: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": "validation", "detail": [{"field": field, "message": message}]},
    )


def create_app(
    prefs_path: str | Path, static_dir: str | Path | None = None
) -> FastAPI:
    app = FastAPI(title="chordtone", version="0.1.0")
    store = PreferenceStore(prefs_path)
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        detail = [
            {
                "field": ".".join(str(part) for part in err["loc"]),
                "message": err["msg"],
            }
            for err in exc.errors()
        ]
        return JSONResponse(
            status_code=400, content={"error": "validation", "detail": detail}
        )

    @app.get("/api/health")
    def health():
        return {"status": "ok", "formatVersion": FORMAT_VERSION}

    @app.post("/api/generate")
    def generate_line(req: GenerateRequest):
        settings = GenerationSettings(
            progression_text=req.progression,
            npm=req.npm,
            stretch=req.stretch,
            seed=req.seed,
            randomize_start=req.randomizeStart,
            string_change_penalty=req.coeffs.stringChangePenalty,
            coeff_transition=req.coeffs.transition,
            coeff_hand_move=req.coeffs.handMove,
            coeff_preference=req.coeffs.preference,
            preference_unit=req.coeffs.preferenceUnit,
        )
        try:
            result = generate(settings, prefs=store.snapshot())
        except ChordParseError as exc:
            return _field_error("body.progression", str(exc))
        except (EmptyLayerError, NoShapesError, PatternTooShortError) as exc:
            content = {"error": "generation", "detail": str(exc)}
            if isinstance(exc, EmptyLayerError):
                content["chord"] = exc.chord_text
                content["chordIndex"] = exc.chord_index
            return JSONResponse(status_code=422, content=content)
        return {
            "tab": result.tab.text,
            "notes": result.document,
            "shapes": [
                {
                    "chordIndex": node.chord_index,
                    "fingerprint": node.shape_ref,
                    "positions": [[p.string_idx, p.fret] for p in node.positions],
                }
                for node in result.chosen_nodes
            ],
            "totalCost": result.path.total_cost,
            "seedUsed": result.seed_used,
        }

    @app.post("/api/feedback")
    def feedback(req: FeedbackRequest):
        if req.verdict not in ("like", "dislike"):
            return _field_error("body.verdict", "must be 'like' or 'dislike'")
        if not is_valid_fingerprint(req.fingerprint):
            return _field_error("body.fingerprint", "must be 16 lowercase hex digits")
        likes, dislikes = store.add(req.fingerprint, req.verdict)
        return {"fingerprint": req.fingerprint, "likes": likes, "dislikes": dislikes}

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app


def entrypoint() -> None:
    parser = argparse.ArgumentParser(
        prog="chordtone-serve", description="Serve the chordtone HTTP API and web UI."
    )
    parser.add_argument("--host", default=os.environ.get("CHORDTONE_HOST", "127.0.0.1"))
    parser.add_argument(
        "--port", type=int, default=int(os.environ.get("CHORDTONE_PORT", "8000"))
    )
    parser.add_argument(
        "--prefs-file",
        default=os.environ.get("CHORDTONE_PREFS_FILE", "chordtone-prefs.json"),
    )
    parser.add_argument(
        "--static-dir", default=os.environ.get("CHORDTONE_STATIC_DIR") or None
    )
    args = parser.parse_args()

    import uvicorn

    app = create_app(args.prefs_file, args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port)


if __name__ == "__main__":
    entrypoint()
