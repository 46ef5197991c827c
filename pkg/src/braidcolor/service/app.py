"""HTTP wrapper around the handlers.

Domain errors (bad tables, unknown selectors, blown budgets) become 400
responses with the exception class name; malformed request bodies are
422s from the model validation layer.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import BraidcolorError
from ..registry import registry_listing
from . import handlers
from .models import CheckRequest, ColorRequest, InvarianceRequest, LinkinfoRequest

app = FastAPI(title="braidcolor", version="0.1.0")


@app.exception_handler(BraidcolorError)
async def _domain_error(request: Request, exc: BraidcolorError):
    return JSONResponse(
        status_code=400,
        content={"error": type(exc).__name__, "detail": str(exc)},
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "service": "braidcolor", "version": app.version}


@app.get("/registry")
def registry() -> dict:
    return registry_listing()


@app.post("/check")
def check(req: CheckRequest) -> dict:
    return handlers.run_check(req)


@app.post("/color")
def color(req: ColorRequest) -> dict:
    return handlers.run_color(req)


@app.post("/linkinfo")
def linkinfo(req: LinkinfoRequest) -> dict:
    return handlers.run_linkinfo(req)


@app.post("/invariance")
def invariance(req: InvarianceRequest) -> dict:
    return handlers.run_invariance(req)
