"""Named constructors for the built-in groups, braces, quandles and
biquandles, addressed by compact selector strings.

Selectors are colon-separated: a family name followed by its parameters,
for example ``Z12``, ``trivial:S3``, ``heisenberg:2:circ-plus`` or
``alexander:5:2:3``.  ``registry_listing`` returns the catalogue that the
service exposes and the README reproduces.
"""

from __future__ import annotations

import numpy as np

from . import braces, biquandles
from .errors import FormatError
from .groups import FiniteGroup, cyclic_group, dihedral_group, symmetric_group

MAX_CYCLIC = 4096


def _bad(kind, selector, reason=""):
    extra = f" ({reason})" if reason else ""
    return FormatError(f"unknown {kind} selector {selector!r}{extra}")


def _int_param(kind, selector, token, low, high):
    try:
        value = int(token)
    except ValueError:
        raise _bad(kind, selector, f"{token!r} is not an integer") from None
    if not low <= value <= high:
        raise _bad(kind, selector, f"{value} outside [{low}, {high}]")
    return value


def resolve_group(selector: str) -> FiniteGroup:
    if selector.startswith("Z"):
        n = _int_param("group", selector, selector[1:], 1, MAX_CYCLIC)
        return cyclic_group(n)
    if selector.startswith("S"):
        n = _int_param("group", selector, selector[1:], 1, 6)
        return symmetric_group(n)
    if selector.startswith("D"):
        n = _int_param("group", selector, selector[1:], 1, MAX_CYCLIC // 2)
        return dihedral_group(n)
    raise _bad("group", selector)


def _negation_semidirect(n: int):
    cyc = cyclic_group(n)
    ident = np.arange(n)
    negate = (-ident) % n
    return braces.make_semidirect_brace(
        cyc, cyclic_group(2), lambda a: negate if a else ident
    )


def resolve_brace(selector: str) -> braces.SkewBrace:
    parts = selector.split(":")
    head = parts[0]
    if head == "trivial" and len(parts) == 2:
        return braces.make_trivial_brace(resolve_group(parts[1]))
    if head == "semidirect" and len(parts) == 3 and parts[2] == "Z2" \
            and parts[1].startswith("Z"):
        n = _int_param("brace", selector, parts[1][1:], 1, MAX_CYCLIC)
        return _negation_semidirect(n)
    if head == "radical" and parts[1:] == ["2Z8"]:
        return braces.even_residue_ring_brace()
    if head == "heisenberg" and len(parts) <= 3:
        n = _int_param("brace", selector, parts[1], 1, 16) if len(parts) >= 2 else 1
        order = parts[2] if len(parts) == 3 else "plus-circ"
        if order not in ("plus-circ", "circ-plus"):
            raise _bad("brace", selector, f"bad group order {order!r}")
        return braces.heisenberg_brace(n, order)
    if head == "torus" and len(parts) <= 2:
        order = parts[1] if len(parts) == 2 else "plus-circ"
        if order not in ("plus-circ", "circ-plus"):
            raise _bad("brace", selector, f"bad group order {order!r}")
        return braces.torus_brace(order)
    raise _bad("brace", selector)


def resolve_quandle(selector: str) -> biquandles.Quandle:
    parts = selector.split(":")
    head = parts[0]
    if head == "trivial" and len(parts) == 2:
        n = _int_param("quandle", selector, parts[1], 1, MAX_CYCLIC)
        return biquandles.make_trivial_quandle(n)
    if head == "conj" and len(parts) == 2:
        return biquandles.make_conjugation_quandle(resolve_group(parts[1]))
    if head == "core" and len(parts) == 2:
        return biquandles.make_core_quandle(resolve_group(parts[1]))
    if head == "sphere" and len(parts) <= 2:
        d = _int_param("quandle", selector, parts[1], 1, 64) if len(parts) == 2 else 2
        return biquandles.make_sphere_quandle(d)
    raise _bad("quandle", selector)


def resolve_biquandle(selector: str) -> biquandles.Biquandle:
    parts = selector.split(":")
    head = parts[0]
    if head == "wada" and len(parts) == 2:
        return biquandles.make_wada(resolve_group(parts[1]))
    if head == "alexander" and len(parts) == 4:
        p = _int_param("biquandle", selector, parts[1], 2, MAX_CYCLIC)
        t = _int_param("biquandle", selector, parts[2], 0, MAX_CYCLIC)
        s = _int_param("biquandle", selector, parts[3], 0, MAX_CYCLIC)
        return biquandles.make_alexander(p, t, s)
    if head == "brace" and len(parts) >= 2:
        return biquandles.brace_to_biquandle(resolve_brace(":".join(parts[1:])))
    if head == "lift" and len(parts) >= 2:
        return biquandles.quandle_to_biquandle(resolve_quandle(":".join(parts[1:])))
    if head in ("conj", "core-lift") and len(parts) == 2:
        base = "conj" if head == "conj" else "core"
        return biquandles.quandle_to_biquandle(resolve_quandle(f"{base}:{parts[1]}"))
    if head in ("r1-heis", "r2-heis") and len(parts) <= 2:
        n = _int_param("biquandle", selector, parts[1], 1, 16) if len(parts) == 2 else 1
        return biquandles.closed_form_biquandle(head, n)
    if head in ("r1-torus", "r2-torus") and len(parts) == 1:
        return biquandles.closed_form_biquandle(head)
    raise _bad("biquandle", selector)


def registry_listing() -> dict:
    return {
        "group": [
            {"pattern": "Z<n>", "description": "integers mod n, 1 <= n <= 4096"},
            {"pattern": "S<n>", "description": "permutations of n symbols, 1 <= n <= 6"},
            {"pattern": "D<n>", "description": "dihedral group of order 2n"},
        ],
        "brace": [
            {"pattern": "trivial:<group>",
             "description": "both operations equal to the group operation"},
            {"pattern": "semidirect:Z<n>:Z2",
             "description": "additive product group, multiplicative semidirect "
                            "product where Z2 acts by negation"},
            {"pattern": "radical:2Z8",
             "description": "even residues mod 8 under a+b and a+ab+b"},
            {"pattern": "heisenberg[:<n>[:plus-circ|circ-plus]]",
             "description": "coordinate space of dimension 2n+1 with the "
                            "shear product; the third field picks which "
                            "operation is additive"},
            {"pattern": "torus[:plus-circ|circ-plus]",
             "description": "unit circle times the plane with the twisted "
                            "product; the second field picks which operation "
                            "is additive"},
        ],
        "quandle": [
            {"pattern": "trivial:<n>", "description": "n elements, x*y = x"},
            {"pattern": "conj:<group>", "description": "conjugation y^-1 x y"},
            {"pattern": "core:<group>", "description": "core operation y x^-1 y"},
            {"pattern": "sphere[:<d>]",
             "description": "unit sphere in d+1 coordinates under reflection "
                            "through a point (default d=2)"},
        ],
        "biquandle": [
            {"pattern": "wada:<group>",
             "description": "a*b = b^-1 a^-1 b, b#a = a a b on the group"},
            {"pattern": "alexander:<p>:<t>:<s>",
             "description": "integers mod p with a*b = t a + (1 - s t) b and "
                            "b#a = s b; t and s must be units"},
            {"pattern": "brace:<brace>",
             "description": "the generic construction applied to a named "
                            "brace"},
            {"pattern": "lift:<quandle> | conj:<group> | core-lift:<group>",
             "description": "a quandle viewed as a biquandle with trivial "
                            "second operation"},
            {"pattern": "r1-heis[:<n>] / r2-heis[:<n>]",
             "description": "closed forms on coordinate space of dimension "
                            "2n+1 (the two group orderings)"},
            {"pattern": "r1-torus / r2-torus",
             "description": "closed forms on the circle times the plane"},
        ],
    }
