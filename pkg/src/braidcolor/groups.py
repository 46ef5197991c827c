"""Finite groups as Cayley tables, continuous groups as callables, and the
axiom validators that report witnesses instead of raising.

Tables use 0-based element indices throughout; table[a][b] is the product
of a and b.  Malformed tables (non-square, out-of-range entries) raise
FormatError at construction; axiom failures of well-formed tables are the
validator's job and come back in a ValidationReport.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .carriers import FiniteCarrier
from .errors import FormatError


@dataclass
class Violation:
    axiom: str
    witness: object
    residual: float | None = None

    def to_json(self):
        doc = {"axiom": self.axiom, "witness": self.witness}
        if self.residual is not None:
            doc["residual"] = float(self.residual)
        return doc


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    checked: list = field(default_factory=list)
    max_residual: float | None = None

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, axiom: str, witness, residual=None):
        self.violations.append(Violation(axiom, witness, residual))

    def merge(self, other: "ValidationReport", prefix: str = ""):
        for v in other.violations:
            self.violations.append(Violation(prefix + v.axiom, v.witness, v.residual))
        self.checked.extend(prefix + c for c in other.checked)
        if other.max_residual is not None:
            self.max_residual = max(self.max_residual or 0.0, other.max_residual)

    def bump_residual(self, r: float):
        self.max_residual = max(self.max_residual or 0.0, float(r))

    def to_json(self):
        doc = {
            "valid": self.valid,
            "violations": [v.to_json() for v in self.violations],
            "checked": list(self.checked),
        }
        if self.max_residual is not None:
            doc["max_residual"] = float(self.max_residual)
        return doc


def _as_table(table, what="table") -> np.ndarray:
    try:
        arr = np.array(table, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise FormatError(f"{what} is not a rectangular integer array: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise FormatError(f"{what} must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n < 1:
        raise FormatError(f"{what} must be nonempty")
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise FormatError(
            f"{what} entry at ({bad[0]}, {bad[1]}) is {arr[bad[0], bad[1]]}, "
            f"outside 0..{n - 1}"
        )
    return arr


class FiniteGroup:
    """A finite magma given by a Cayley table; a group when validate_group
    comes back clean.  Identity and inverses are derived when they exist."""

    def __init__(self, table, name: str = ""):
        self.table = _as_table(table, "group table")
        self.order = self.table.shape[0]
        self.name = name
        self.carrier = FiniteCarrier(self.order)
        self.identity = self._find_identity()
        self.inverse = self._find_inverses()

    def _find_identity(self):
        idx = np.arange(self.order)
        for e in range(self.order):
            if np.array_equal(self.table[e], idx) and np.array_equal(self.table[:, e], idx):
                return e
        return None

    def _find_inverses(self):
        if self.identity is None:
            return None
        inv = np.full(self.order, -1, dtype=np.int64)
        for a in range(self.order):
            hits = np.nonzero(self.table[a] == self.identity)[0]
            for b in hits:
                if self.table[b, a] == self.identity:
                    inv[a] = b
                    break
        return inv if (inv >= 0).all() else None

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        if self.inverse is None:
            raise FormatError(f"group {self.name!r} has no complete inverse map")
        return int(self.inverse[a])

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __repr__(self):
        tag = self.name or "unnamed"
        return f"FiniteGroup({tag}, order={self.order})"


@dataclass
class ContinuousGroup:
    """A group structure on a continuous carrier, given by callables."""

    carrier: object
    op: Callable
    inv: Callable
    identity: object
    name: str = ""

    def __repr__(self):
        return f"ContinuousGroup({self.name or 'unnamed'})"


# ---------------------------------------------------------------------------
# built-in finite groups

def cyclic_group(n: int) -> FiniteGroup:
    """Integers mod n under addition."""
    if n < 1:
        raise FormatError(f"cyclic group order must be positive, got {n}")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, name=f"Z{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """All permutations of n points in lexicographic order, composed so that
    the right factor acts first: (p * q)(x) = p(q(x))."""
    if n < 1 or n > 6:
        raise FormatError(f"symmetric group supported for 1 <= n <= 6, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[x]] for x in range(n))] for q in perms]
        for p in perms
    ]
    return FiniteGroup(table, name=f"S{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of a regular n-gon, order 2n.  Element 2k is the rotation
    by k steps and 2k+1 the reflection following it."""
    if n < 1:
        raise FormatError(f"dihedral group parameter must be positive, got {n}")
    order = 2 * n

    def mul(a, b):
        ka, fa = divmod(a, 2)
        kb, fb = divmod(b, 2)
        k = (ka + (kb if fa == 0 else -kb)) % n
        return 2 * k + (fa ^ fb)

    table = [[mul(a, b) for b in range(order)] for a in range(order)]
    return FiniteGroup(table, name=f"D{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs, indexed as a * |h| + b."""
    m = h.order
    table = [
        [g.table[a1, a2] * m + h.table[b1, b2] for a2 in range(g.order) for b2 in range(m)]
        for a1 in range(g.order)
        for b1 in range(m)
    ]
    return FiniteGroup(table, name=f"{g.name}x{h.name}")


def group_from_json(doc) -> FiniteGroup:
    """Load a finite group from {"order": n, "table": [[...]]}."""
    if not isinstance(doc, dict):
        raise FormatError("group document must be a JSON object")
    if "table" not in doc:
        raise FormatError('group document needs a "table" field')
    g = FiniteGroup(doc["table"], name=str(doc.get("name", "")))
    if "order" in doc and int(doc["order"]) != g.order:
        raise FormatError(
            f'group document order {doc["order"]} does not match table size {g.order}'
        )
    return g


# ---------------------------------------------------------------------------
# validation

def _validate_finite_group(g: FiniteGroup) -> ValidationReport:
    report = ValidationReport(checked=["closure", "identity", "inverse", "associativity"])
    n = g.order
    t = g.table

    # closure cannot fail for a table that passed construction, but the check
    # is kept for tables built programmatically and patched afterwards
    bad = np.argwhere((t < 0) | (t >= n))
    if len(bad):
        i, j = bad[0]
        report.add("closure", [int(i), int(j)])

    if g.identity is None:
        report.add("identity", [])
    elif g.inverse is None:
        for a in range(n):
            if not any(t[a, b] == g.identity and t[b, a] == g.identity for b in range(n)):
                report.add("inverse", [a])
                break

    for a in range(n):
        lhs = t[t[a, :], :]          # lhs[b, c] = (a b) c
        rhs = t[a, t]                # rhs[b, c] = a (b c)
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            report.add("associativity", [int(a), int(b), int(c)])
            break

    return report


def _validate_continuous_group(
    g: ContinuousGroup, samples: int, tolerance: float, rng
) -> ValidationReport:
    report = ValidationReport(checked=["identity", "inverse", "associativity"])
    carrier = g.carrier
    worst = {"identity": (0.0, None), "inverse": (0.0, None), "associativity": (0.0, None)}

    for _ in range(samples):
        a = carrier.sample(rng)
        b = carrier.sample(rng)
        c = carrier.sample(rng)

        r = max(carrier.distance(g.op(a, g.identity), a),
                carrier.distance(g.op(g.identity, a), a))
        report.bump_residual(r)
        if r > worst["identity"][0]:
            worst["identity"] = (r, [carrier.to_json(a)])

        ai = g.inv(a)
        r = max(carrier.distance(g.op(a, ai), g.identity),
                carrier.distance(g.op(ai, a), g.identity))
        report.bump_residual(r)
        if r > worst["inverse"][0]:
            worst["inverse"] = (r, [carrier.to_json(a)])

        r = carrier.distance(g.op(g.op(a, b), c), g.op(a, g.op(b, c)))
        report.bump_residual(r)
        if r > worst["associativity"][0]:
            worst["associativity"] = (r, [carrier.to_json(a), carrier.to_json(b), carrier.to_json(c)])

    for axiom in ("identity", "inverse", "associativity"):
        r, witness = worst[axiom]
        if r > tolerance:
            report.add(axiom, witness, residual=r)
    return report


def validate_group(g, *, samples: int = 1000, tolerance: float = 1e-9, seed: int = 0) -> ValidationReport:
    """Check the group axioms.  Finite groups are checked exhaustively with
    the lexicographically smallest witness per broken axiom; continuous
    groups are checked at sampled points against the tolerance."""
    if isinstance(g, FiniteGroup):
        return _validate_finite_group(g)
    if isinstance(g, ContinuousGroup):
        rng = np.random.default_rng(seed)
        return _validate_continuous_group(g, samples, tolerance, rng)
    raise FormatError(f"cannot validate object of type {type(g).__name__}")
