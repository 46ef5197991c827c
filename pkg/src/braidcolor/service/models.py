"""Request schemas for the HTTP endpoints.

Every request that names an algebraic object accepts either a registry
``selector`` or an inline ``document`` (the JSON table format), exactly one
of the two.  Responses are plain JSON objects; their shapes are documented
on the handlers and in the README.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

DEFAULT_BUDGET = 10**8


class CheckRequest(BaseModel):
    kind: Literal["group", "brace", "quandle", "biquandle"]
    selector: Optional[str] = None
    document: Optional[dict] = None
    mode: Literal["auto", "exhaustive", "sampled"] = "auto"
    samples: int = Field(default=1000, ge=1, le=10**6)
    tolerance: float = Field(default=1e-9, gt=0)
    seed: int = 0


class ColorRequest(BaseModel):
    biquandle: Optional[str] = None
    document: Optional[dict] = None
    braid: str
    samples: int = Field(default=20, ge=1, le=10**4)
    tolerance: float = Field(default=1e-9, gt=0)
    seed: int = 0
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)
    max_iterations: int = Field(default=100, ge=1, le=10**5)


class LinkinfoRequest(BaseModel):
    braid: str
    samples: int = Field(default=0, ge=0, le=10**4,
                         description="cross-check sample count, 0 skips it")
    tolerance: float = Field(default=1e-9, gt=0)
    seed: int = 0


class InvarianceRequest(BaseModel):
    biquandle: Optional[str] = None
    document: Optional[dict] = None
    braid: str
    conjugates: int = Field(default=5, ge=0, le=1000)
    stabilize: bool = True
    seed: int = 0
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)
