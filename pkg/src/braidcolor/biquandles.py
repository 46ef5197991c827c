"""Biquandles and quandles, with constructors from groups and skew braces.

A biquandle on a carrier X is an invertible map r(a, b) = (b STAR a, a AST b)
on X x X satisfying the braid equation

    (id x r)(r x id)(id x r) = (r x id)(id x r)(r x id),

whose one-sided maps AST b and STAR a are bijections and whose sideways
pairing S(b STAR a, a) = (a AST b, b) fixes the diagonal up to a single
twist map.  A quandle is the one-sided special case where STAR returns its
first argument.

Every skew brace yields a biquandle through

    a AST b = (-a + a o b)' o (a o b),      b STAR a = -a + a o b,

and the two continuous brace families admit short closed forms for r which
are implemented separately so the generic construction can be tested
against them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .braces import SkewBrace, heisenberg_brace, torus_brace
from .carriers import FiniteCarrier, SphereCarrier, TorusCarrier
from .errors import (
    AxiomViolationError,
    ConstructionError,
    FormatError,
    UnsupportedInverseError,
)
from .groups import FiniteGroup, ValidationReport, _as_table

PROVENANCES = (
    "from-skew-brace",
    "closed-form-r1-heis",
    "closed-form-r2-heis",
    "closed-form-r1-torus",
    "closed-form-r2-torus",
    "quandle-lift",
    "wada",
    "alexander",
    "custom",
)


class Biquandle:
    """Carrier plus the four structure maps.

    ast(a, b) is a acted on by b; star(b, a) is b acted on by a from the
    other side; astinv and starinv undo them in the acted-on argument.
    Finite biquandles keep everything as index tables (ast_table[a][b],
    star_table[b][a]) with inverses found by table inversion.
    """

    def __init__(self, carrier, ast, star, astinv=None, starinv=None, *,
                 provenance="custom", brace=None, name="", lift=False):
        if provenance not in PROVENANCES:
            raise FormatError(f"unknown provenance {provenance!r}")
        self.carrier = carrier
        self._ast = ast
        self._star = star
        self._astinv = astinv
        self._starinv = starinv
        self.provenance = provenance
        self.brace = brace
        self.name = name
        self.lift = lift            # STAR is the first-argument projection
        self.ast_table = None
        self.star_table = None
        self._astinv_table = None
        self._starinv_table = None
        self._r = None
        self._rinv = None

    @classmethod
    def from_tables(cls, ast_table, star_table, *, provenance="custom",
                    brace=None, name="", lift=False):
        ast_t = _as_table(ast_table, "ast table")
        star_t = _as_table(star_table, "star table")
        if ast_t.shape != star_t.shape:
            raise FormatError(
                f"ast and star tables differ in size: {ast_t.shape} vs {star_t.shape}"
            )
        n = ast_t.shape[0]
        q = cls(
            FiniteCarrier(n),
            lambda a, b: int(ast_t[a, b]),
            lambda b, a: int(star_t[b, a]),
            provenance=provenance,
            brace=brace,
            name=name,
            lift=lift,
        )
        q.ast_table = ast_t
        q.star_table = star_t
        q._astinv_table = _invert_columns(ast_t)
        q._starinv_table = _invert_columns(star_t)
        return q

    @property
    def is_finite(self) -> bool:
        return isinstance(self.carrier, FiniteCarrier)

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise FormatError(f"biquandle {self.name!r} is not finite")
        return self.carrier.order

    # -- structure maps ----------------------------------------------------

    def ast(self, a, b):
        return self._ast(a, b)

    def star(self, b, a):
        return self._star(b, a)

    def astinv(self, c, b):
        """The unique a with ast(a, b) = c."""
        if self.is_finite:
            if self._astinv_table is None:
                raise UnsupportedInverseError(
                    f"{self.name or 'biquandle'}: some ast column is not a bijection"
                )
            return int(self._astinv_table[c, b])
        if self._astinv is None:
            raise UnsupportedInverseError(
                f"{self.name or 'biquandle'} provides no ast inverse"
            )
        return self._astinv(c, b)

    def starinv(self, c, a):
        """The unique b with star(b, a) = c."""
        if self.is_finite:
            if self._starinv_table is None:
                raise UnsupportedInverseError(
                    f"{self.name or 'biquandle'}: some star column is not a bijection"
                )
            return int(self._starinv_table[c, a])
        if self._starinv is None:
            raise UnsupportedInverseError(
                f"{self.name or 'biquandle'} provides no star inverse"
            )
        return self._starinv(c, a)

    def yb(self, a, b):
        return (self._star(b, a), self._ast(a, b))

    def yb_inv(self, c, d):
        """The pair (a, b) with yb(a, b) = (c, d)."""
        if self.is_finite:
            inv1, inv2 = self.rinv_tables()
            return (int(inv1[c, d]), int(inv2[c, d]))
        if self.brace is not None:
            br = self.brace
            g = br.circ(c, d)
            a = br.add(g, br.neg(c))
            return (a, br.circ(br.circinv(a), g))
        if self.lift:
            return (self.astinv(d, c), c)
        raise UnsupportedInverseError(
            f"{self.name or 'biquandle'} has no usable inverse for the pair map"
        )

    # -- finite lookup tables ----------------------------------------------

    def r_tables(self):
        """(first, second) with first[a, b], second[a, b] the two outputs."""
        if self._r is None:
            if not self.is_finite:
                raise FormatError("r tables exist only for finite biquandles")
            self._r = (np.ascontiguousarray(self.star_table.T), self.ast_table)
        return self._r

    def rinv_tables(self):
        if self._rinv is None:
            r1, r2 = self.r_tables()
            n = self.order
            inv1 = np.full((n, n), -1, dtype=np.int64)
            inv2 = np.full((n, n), -1, dtype=np.int64)
            grid_a = np.repeat(np.arange(n), n)
            grid_b = np.tile(np.arange(n), n)
            c = r1[grid_a, grid_b]
            d = r2[grid_a, grid_b]
            inv1[c, d] = grid_a
            inv2[c, d] = grid_b
            if (inv1 < 0).any():
                raise UnsupportedInverseError(
                    f"{self.name or 'biquandle'}: pair map is not a bijection, "
                    "cannot invert its table"
                )
            self._rinv = (inv1, inv2)
        return self._rinv

    def __repr__(self):
        return f"Biquandle({self.name or self.provenance})"


def _invert_columns(table):
    """Invert a table column by column: out[c, j] = the i with table[i, j] = c.
    Returns None when any column fails to be a permutation."""
    n = table.shape[0]
    out = np.full((n, n), -1, dtype=np.int64)
    rows = np.arange(n)
    for j in range(n):
        col = table[:, j]
        out[col, j] = rows
    return None if (out < 0).any() else out


# ---------------------------------------------------------------------------
# module-level operation names

def yb_map(q: Biquandle, a, b):
    return q.yb(a, b)


def yb_map_inverse(q: Biquandle, c, d):
    return q.yb_inv(c, d)


def s_map(q: Biquandle, u, v):
    """The sideways pairing: S(b STAR a, a) = (a AST b, b)."""
    b = q.starinv(u, v)
    return (q.ast(v, b), b)


def tau(q: Biquandle, a):
    """The twist map from the diagonal of the sideways pairing."""
    if q.brace is not None:
        return q.brace.neg(q.brace.circinv(a))
    first, second = s_map(q, a, a)
    if q.is_finite:
        agree = first == second
    else:
        agree = q.carrier.distance(first, second) <= 1e-9
    if not agree:
        raise AxiomViolationError(
            f"{q.name or 'biquandle'}: sideways pairing is not diagonal at {a!r}"
        )
    return second


# ---------------------------------------------------------------------------
# constructors

def brace_to_biquandle(brace: SkewBrace) -> Biquandle:
    """The generic biquandle of a skew brace."""
    add, neg, circ, cinv = brace.add, brace.neg, brace.circ, brace.circinv

    def star(b, a):
        return add(neg(a), circ(a, b))

    def ast(a, b):
        g = circ(a, b)
        return circ(cinv(add(neg(a), g)), g)

    def starinv(c, a):
        return circ(cinv(a), add(a, c))

    def astinv(c, b):
        return cinv(add(circ(b, cinv(c)), neg(b)))

    name = f"biquandle({brace.name})"
    if brace.is_finite:
        n = brace.carrier.order
        ast_t = np.empty((n, n), dtype=np.int64)
        star_t = np.empty((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(n):
                ast_t[a, b] = ast(a, b)
                star_t[b, a] = star(b, a)
        return Biquandle.from_tables(ast_t, star_t, provenance="from-skew-brace",
                                     brace=brace, name=name)
    return Biquandle(brace.carrier, ast, star, astinv, starinv,
                     provenance="from-skew-brace", brace=brace, name=name)


def closed_form_biquandle(which: str, n: int = 1) -> Biquandle:
    """The hardcoded pair maps for the two continuous brace families.

    which is one of r1-heis, r2-heis, r1-torus, r2-torus; n sizes the
    coordinate carrier for the heis forms (2n+1 coordinates).  The matching
    brace rides along so inverses and the twist map stay available.
    """
    if which == "r1-heis":
        brace = heisenberg_brace(n, "plus-circ")

        def star(b, a):
            out = np.asarray(b, dtype=float).copy()
            out[-1] += float(np.dot(a[:n], b[n:2 * n]))
            return out

        def ast(a, b):
            out = np.asarray(a, dtype=float).copy()
            out[-1] -= float(np.dot(b[:n], a[n:2 * n]))
            return out

        provenance = "closed-form-r1-heis"

    elif which == "r2-heis":
        brace = heisenberg_brace(n, "circ-plus")

        def star(b, a):
            out = np.asarray(b, dtype=float).copy()
            out[-1] -= float(np.dot(a[:n], b[n:2 * n]))
            return out

        def ast(a, b):
            out = np.asarray(a, dtype=float).copy()
            out[-1] += float(np.dot(a[:n], b[n:2 * n]))
            return out

        provenance = "closed-form-r2-heis"

    elif which == "r1-torus":
        brace = torus_brace("plus-circ")
        point = TorusCarrier.point

        def star(b, a):
            return point(b[0], a[0] * b[1])

        def ast(a, b):
            return point(a[0], np.conj(b[0]) * a[1])

        provenance = "closed-form-r1-torus"

    elif which == "r2-torus":
        brace = torus_brace("circ-plus")
        point = TorusCarrier.point

        def star(b, a):
            return point(b[0], np.conj(a[0]) * b[1])

        def ast(a, b):
            return point(a[0], a[1] + (1.0 - np.conj(a[0])) * b[1])

        provenance = "closed-form-r2-torus"

    else:
        raise FormatError(f"unknown closed form {which!r}")

    generic = brace_to_biquandle(brace)
    return Biquandle(brace.carrier, ast, star,
                     generic._astinv, generic._starinv,
                     provenance=provenance, brace=brace, name=which)


def make_wada(group: FiniteGroup) -> Biquandle:
    """The biquandle a AST b = b^-1 a^-1 b, b STAR a = a^2 b on a group."""
    if group.identity is None or group.inverse is None:
        raise ConstructionError(f"{group.name or 'group'} is not a group")
    n = group.order
    ast_t = np.empty((n, n), dtype=np.int64)
    star_t = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            ast_t[a, b] = group.mul(group.inv(b), group.mul(group.inv(a), b))
            star_t[b, a] = group.mul(group.mul(a, a), b)
    return Biquandle.from_tables(ast_t, star_t, provenance="wada",
                                 name=f"wada:{group.name}")


def make_alexander(p: int, t: int, s: int) -> Biquandle:
    """The linear biquandle a AST b = t a + (1 - s t) b, b STAR a = s b on
    integers mod p; t and s must be units."""
    if p < 1:
        raise ConstructionError(f"modulus must be positive, got {p}")
    t %= p
    s %= p
    if math.gcd(t, p) != 1:
        raise ConstructionError(f"t = {t} is not a unit mod {p}")
    if math.gcd(s, p) != 1:
        raise ConstructionError(f"s = {s} is not a unit mod {p}")
    idx = np.arange(p)
    ast_t = (t * idx[:, None] + (1 - s * t) * idx[None, :]) % p
    star_t = np.broadcast_to((s * idx[:, None]) % p, (p, p)).copy()
    return Biquandle.from_tables(ast_t, star_t, provenance="alexander",
                                 name=f"alexander:{p}:{t}:{s}")


def biquandle_from_json(doc) -> Biquandle:
    """Load {"order": n, "ast": [[...]], "star": [[...]]}; ast[a][b] is
    a AST b and star[b][a] is b STAR a."""
    if not isinstance(doc, dict):
        raise FormatError("biquandle document must be a JSON object")
    for key in ("ast", "star"):
        if key not in doc:
            raise FormatError(f'biquandle document needs an "{key}" table')
    q = Biquandle.from_tables(doc["ast"], doc["star"], provenance="custom",
                              name=str(doc.get("name", "file")))
    if "order" in doc and int(doc["order"]) != q.order:
        raise FormatError(
            f'biquandle document order {doc["order"]} does not match table size {q.order}'
        )
    return q


# ---------------------------------------------------------------------------
# quandles

class Quandle:
    """One operation ast(a, b) with the idempotence, bijectivity and
    self-distributivity laws; astinv undoes the acting element when known."""

    def __init__(self, carrier, ast, astinv=None, *, name="", ast_table=None):
        self.carrier = carrier
        self._ast = ast
        self._astinv = astinv
        self.name = name
        self.ast_table = ast_table
        self._astinv_table = None if ast_table is None else _invert_columns(ast_table)

    @classmethod
    def from_table(cls, table, name=""):
        t = _as_table(table, "quandle table")
        return cls(FiniteCarrier(t.shape[0]),
                   lambda a, b: int(t[a, b]), name=name, ast_table=t)

    @property
    def is_finite(self) -> bool:
        return isinstance(self.carrier, FiniteCarrier)

    def ast(self, a, b):
        return self._ast(a, b)

    def astinv(self, c, b):
        if self.is_finite:
            if self._astinv_table is None:
                raise UnsupportedInverseError(
                    f"{self.name or 'quandle'}: some column is not a bijection"
                )
            return int(self._astinv_table[c, b])
        if self._astinv is None:
            raise UnsupportedInverseError(f"{self.name or 'quandle'} has no inverse map")
        return self._astinv(c, b)

    def __repr__(self):
        return f"Quandle({self.name or 'unnamed'})"


def make_trivial_quandle(n: int) -> Quandle:
    table = np.broadcast_to(np.arange(n)[:, None], (n, n)).copy()
    return Quandle.from_table(table, name=f"trivial:{n}")


def make_conjugation_quandle(group: FiniteGroup) -> Quandle:
    if group.identity is None or group.inverse is None:
        raise ConstructionError(f"{group.name or 'group'} is not a group")
    n = group.order
    table = [
        [group.mul(group.inv(b), group.mul(a, b)) for b in range(n)]
        for a in range(n)
    ]
    return Quandle.from_table(table, name=f"conj:{group.name}")


def make_core_quandle(group: FiniteGroup) -> Quandle:
    if group.identity is None or group.inverse is None:
        raise ConstructionError(f"{group.name or 'group'} is not a group")
    n = group.order
    table = [
        [group.mul(b, group.mul(group.inv(a), b)) for b in range(n)]
        for a in range(n)
    ]
    return Quandle.from_table(table, name=f"core:{group.name}")


def make_sphere_quandle(dim: int = 2) -> Quandle:
    """Point reflection on the unit sphere: x AST y = 2 (x . y) y - x."""
    carrier = SphereCarrier(dim)

    def reflect(x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return 2.0 * float(np.dot(x, y)) * y - x

    return Quandle(carrier, reflect, astinv=reflect, name=f"sphere:{dim}")


def quandle_from_json(doc) -> Quandle:
    if not isinstance(doc, dict):
        raise FormatError("quandle document must be a JSON object")
    if "ast" not in doc:
        raise FormatError('quandle document needs an "ast" table')
    q = Quandle.from_table(doc["ast"], name=str(doc.get("name", "file")))
    if "order" in doc and int(doc["order"]) != q.carrier.order:
        raise FormatError(
            f'quandle document order {doc["order"]} does not match table size'
        )
    return q


def quandle_to_biquandle(q: Quandle) -> Biquandle:
    """Lift a quandle: STAR becomes the first-argument projection."""
    if q.is_finite:
        n = q.carrier.order
        star_t = np.broadcast_to(np.arange(n)[:, None], (n, n)).copy()
        return Biquandle.from_tables(q.ast_table, star_t, provenance="quandle-lift",
                                     name=f"lift({q.name})", lift=True)
    return Biquandle(
        q.carrier,
        q.ast,
        lambda b, a: b,
        astinv=q.astinv if q._astinv is not None else None,
        starinv=lambda c, a: c,
        provenance="quandle-lift",
        name=f"lift({q.name})",
        lift=True,
    )


# ---------------------------------------------------------------------------
# axiom checks

def _ybe_sides(q: Biquandle, a, b, c):
    u, v = q.yb(b, c)
    p, s = q.yb(a, u)
    lhs = (p,) + q.yb(s, v)
    p2, s2 = q.yb(a, b)
    u2, v2 = q.yb(s2, c)
    rhs = q.yb(p2, u2) + (v2,)
    return lhs, rhs


def _first_column_collision(table, j):
    seen = {}
    for i in range(table.shape[0]):
        v = int(table[i, j])
        if v in seen:
            return [seen[v], i, j]
        seen[v] = i
    return None


def _check_finite_biquandle(q: Biquandle) -> ValidationReport:
    report = ValidationReport(checked=[
        "ast-bijectivity", "star-bijectivity", "yang-baxter",
        "s-diagonal", "s-bijectivity",
    ])
    n = q.order
    ast_t, star_t = q.ast_table, q.star_table
    rows = np.arange(n)

    for j in range(n):
        if not np.array_equal(np.sort(ast_t[:, j]), rows):
            report.add("ast-bijectivity", _first_column_collision(ast_t, j))
            break
    for j in range(n):
        if not np.array_equal(np.sort(star_t[:, j]), rows):
            report.add("star-bijectivity", _first_column_collision(star_t, j))
            break

    r1, r2 = q.r_tables()
    grid_b, grid_c = np.meshgrid(rows, rows, indexing="ij")
    for a in range(n):
        u = r1[grid_b, grid_c]
        v = r2[grid_b, grid_c]
        p = r1[a][u]
        s = r2[a][u]
        lhs = (p, r1[s, v], r2[s, v])
        p2 = r1[a][grid_b]
        s2 = r2[a][grid_b]
        u2 = r1[s2, grid_c]
        v2 = r2[s2, grid_c]
        rhs = (r1[p2, u2], r2[p2, u2], v2)
        bad = (lhs[0] != rhs[0]) | (lhs[1] != rhs[1]) | (lhs[2] != rhs[2])
        if bad.any():
            b, c = np.argwhere(bad)[0]
            report.add("yang-baxter", [int(a), int(b), int(c)])
            break

    if q._starinv_table is not None:
        for a in range(n):
            b = int(q._starinv_table[a, a])
            if int(ast_t[a, b]) != b:
                report.add("s-diagonal", [a])
                break
        # the sideways pairing as a map on pairs must be a bijection
        grid_u, grid_v = np.meshgrid(rows, rows, indexing="ij")
        bb = q._starinv_table[grid_u, grid_v]
        first = ast_t[grid_v, bb]
        pair_index = first * n + bb
        if len(np.unique(pair_index)) != n * n:
            flat = pair_index.ravel()
            order_idx = np.argsort(flat, kind="stable")
            dup = order_idx[np.nonzero(np.diff(flat[order_idx]) == 0)[0][0]]
            report.add("s-bijectivity", [int(dup // n), int(dup % n)])

    return report


def _check_continuous_biquandle(q: Biquandle, samples, tolerance, rng) -> ValidationReport:
    carrier = q.carrier
    report = ValidationReport(checked=["yang-baxter"])
    worst = {}

    def track(axiom, r, witness):
        report.bump_residual(r)
        cur = worst.get(axiom, (0.0, None))
        if r > cur[0]:
            worst[axiom] = (r, witness)

    has_astinv = q._astinv is not None or q.brace is not None
    has_starinv = q._starinv is not None or q.brace is not None
    can_invert_pairs = q.brace is not None or q.lift
    if has_astinv:
        report.checked.append("ast-invertibility")
    if has_starinv:
        report.checked.append("star-invertibility")
    if can_invert_pairs:
        report.checked.append("yb-invertibility")
    if has_starinv:
        report.checked.append("s-diagonal")

    for _ in range(samples):
        a = carrier.sample(rng)
        b = carrier.sample(rng)
        c = carrier.sample(rng)

        lhs, rhs = _ybe_sides(q, a, b, c)
        r = max(carrier.distance(x, y) for x, y in zip(lhs, rhs))
        track("yang-baxter", r,
              [carrier.to_json(a), carrier.to_json(b), carrier.to_json(c)])

        if has_astinv:
            r = max(carrier.distance(q.astinv(q.ast(a, b), b), a),
                    carrier.distance(q.ast(q.astinv(a, b), b), a))
            track("ast-invertibility", r, [carrier.to_json(a), carrier.to_json(b)])
        if has_starinv:
            r = max(carrier.distance(q.starinv(q.star(a, b), b), a),
                    carrier.distance(q.star(q.starinv(a, b), b), a))
            track("star-invertibility", r, [carrier.to_json(a), carrier.to_json(b)])
        if can_invert_pairs:
            u, v = q.yb(a, b)
            aa, bb = q.yb_inv(u, v)
            r = max(carrier.distance(aa, a), carrier.distance(bb, b))
            track("yb-invertibility", r, [carrier.to_json(a), carrier.to_json(b)])
        if has_starinv:
            first, second = s_map(q, a, a)
            track("s-diagonal", carrier.distance(first, second), [carrier.to_json(a)])

    for axiom in report.checked:
        r, witness = worst.get(axiom, (0.0, None))
        if r > tolerance:
            report.add(axiom, witness, residual=r)
    return report


def check_biquandle_axioms(q: Biquandle, *, samples: int = 1000,
                           tolerance: float = 1e-9, seed: int = 0) -> ValidationReport:
    """Exhaustive for finite carriers (lexicographically smallest witness per
    axiom), sampled for continuous ones."""
    if q.is_finite:
        return _check_finite_biquandle(q)
    rng = np.random.default_rng(seed)
    return _check_continuous_biquandle(q, samples, tolerance, rng)


def check_quandle_axioms(q: Quandle, *, samples: int = 1000,
                         tolerance: float = 1e-9, seed: int = 0) -> ValidationReport:
    if q.is_finite:
        report = ValidationReport(checked=[
            "idempotence", "right-bijectivity", "self-distributivity",
        ])
        t = q.ast_table
        n = t.shape[0]
        rows = np.arange(n)

        diag = t[rows, rows]
        if not np.array_equal(diag, rows):
            report.add("idempotence", [int(np.nonzero(diag != rows)[0][0])])

        for j in range(n):
            if not np.array_equal(np.sort(t[:, j]), rows):
                report.add("right-bijectivity", _first_column_collision(t, j))
                break

        for a in range(n):
            lhs = t[t[a]]                                   # lhs[b, c] = (a*b)*c
            rhs = t[t[a][None, :].repeat(n, axis=0), t]     # rhs[b, c] = (a*c)*(b*c)
            if not np.array_equal(lhs, rhs):
                b, c = np.argwhere(lhs != rhs)[0]
                report.add("self-distributivity", [int(a), int(b), int(c)])
                break
        return report

    carrier = q.carrier
    rng = np.random.default_rng(seed)
    report = ValidationReport(checked=["idempotence", "self-distributivity"])
    has_inv = q._astinv is not None
    if has_inv:
        report.checked.insert(1, "right-bijectivity")
    worst = {}

    def track(axiom, r, witness):
        report.bump_residual(r)
        cur = worst.get(axiom, (0.0, None))
        if r > cur[0]:
            worst[axiom] = (r, witness)

    for _ in range(samples):
        a = carrier.sample(rng)
        b = carrier.sample(rng)
        c = carrier.sample(rng)
        track("idempotence", carrier.distance(q.ast(a, a), a), [carrier.to_json(a)])
        if has_inv:
            r = max(carrier.distance(q.astinv(q.ast(a, b), b), a),
                    carrier.distance(q.ast(q.astinv(a, b), b), a))
            track("right-bijectivity", r, [carrier.to_json(a), carrier.to_json(b)])
        lhs = q.ast(q.ast(a, b), c)
        rhs = q.ast(q.ast(a, c), q.ast(b, c))
        track("self-distributivity", carrier.distance(lhs, rhs),
              [carrier.to_json(a), carrier.to_json(b), carrier.to_json(c)])

    for axiom in report.checked:
        r, witness = worst.get(axiom, (0.0, None))
        if r > tolerance:
            report.add(axiom, witness, residual=r)
    return report


# ---------------------------------------------------------------------------
# derived structure queries

@dataclass
class InvolutivityResult:
    involutive: bool
    witness: dict | None = None
    max_residual: float | None = None

    def to_json(self):
        doc = {"involutive": self.involutive, "witness": self.witness}
        if self.max_residual is not None:
            doc["max_residual"] = float(self.max_residual)
        return doc


def is_involutive(q: Biquandle, *, samples: int = 1000,
                  tolerance: float = 1e-9, seed: int = 0) -> InvolutivityResult:
    """Does applying the pair map twice return every pair to itself?"""
    if q.is_finite:
        n = q.order
        r1, r2 = q.r_tables()
        u, v = r1, r2
        w = r1[u, v]
        z = r2[u, v]
        grid_a = np.arange(n)[:, None]
        grid_b = np.arange(n)[None, :]
        bad = (w != grid_a) | (z != grid_b)
        if not bad.any():
            return InvolutivityResult(True)
        a, b = (int(x) for x in np.argwhere(bad)[0])
        witness = {
            "pair": [a, b],
            "image": [int(w[a, b]), int(z[a, b])],
            "displacement": 1.0,
        }
        return InvolutivityResult(False, witness)

    carrier = q.carrier
    rng = np.random.default_rng(seed)
    worst = (0.0, None)
    for _ in range(samples):
        a = carrier.sample(rng)
        b = carrier.sample(rng)
        u, v = q.yb(a, b)
        w, z = q.yb(u, v)
        r = max(carrier.distance(w, a), carrier.distance(z, b))
        if r > worst[0]:
            worst = (r, {
                "pair": [carrier.to_json(a), carrier.to_json(b)],
                "image": [carrier.to_json(w), carrier.to_json(z)],
                "displacement": float(r),
            })
    if worst[0] <= tolerance:
        return InvolutivityResult(True, max_residual=worst[0])
    return InvolutivityResult(False, worst[1], max_residual=worst[0])


def detect_quandle(q: Biquandle, *, samples: int = 1000,
                   tolerance: float = 1e-9, seed: int = 0):
    """Decide whether STAR is the first-argument projection and AST alone
    satisfies the quandle laws.  Returns (flag, recovered quandle or None)."""
    if q.is_finite:
        n = q.order
        grid = np.broadcast_to(np.arange(n)[:, None], (n, n))
        if not np.array_equal(q.star_table, grid):
            return (False, None)
        view = Quandle.from_table(q.ast_table, name=f"ast({q.name})")
        if not check_quandle_axioms(view).valid:
            return (False, None)
        return (True, view)

    carrier = q.carrier
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        a = carrier.sample(rng)
        b = carrier.sample(rng)
        if carrier.distance(q.star(b, a), b) > tolerance:
            return (False, None)
    view = Quandle(carrier, q.ast,
                   astinv=(q.astinv if (q._astinv is not None or q.brace is not None) else None),
                   name=f"ast({q.name})")
    ok = check_quandle_axioms(view, samples=samples, tolerance=tolerance,
                              seed=seed + 1).valid
    return (ok, view if ok else None)
