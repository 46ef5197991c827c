"""Closure components, crossing bookkeeping, and the bilinear coloring
system of a braid closure under the quadratic closed form on coordinate
space.

Conventions (recorded in linkinfo output): a positive letter makes the
strand entering at the smaller position the under strand, a negative
letter makes it the over strand; the crossing sign is the letter's sign.
c[i][j] sums the signs of crossings where component i passes under
component j, diagonal entries are dropped, and c + c^T is twice the
pairwise linking matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .biquandles import closed_form_biquandle
from .braids import BraidWord, braid_permutation, render_braid
from .errors import PreconditionError
from .fixedpoints import fixed_residual

CONVENTION = {
    "under_strand": "position-i strand on a positive letter i, position-i+1 on a negative one",
    "crossing_sign": "sign of the letter",
}


def closure_components(word: BraidWord):
    """Assign each starting position to a closure component.  Components are
    numbered 0.. in order of their smallest starting position."""
    perm = braid_permutation(word)
    comp = [-1] * word.strands
    count = 0
    for p in range(word.strands):
        if comp[p] >= 0:
            continue
        cur = p
        while comp[cur] < 0:
            comp[cur] = count
            cur = perm[cur]
        count += 1
    return comp, count


@dataclass
class LinkProfile:
    components: int
    c: np.ndarray
    lk: np.ndarray
    strand_components: list

    def to_json(self):
        return {
            "components": self.components,
            "c": [[int(v) for v in row] for row in self.c],
            "lk": [[int(v) for v in row] for row in self.lk],
        }


def crossing_matrix(word: BraidWord) -> LinkProfile:
    """Walk the word once, crediting each mixed crossing's sign to the
    (under component, over component) cell."""
    comp, count = closure_components(word)
    occupant = list(range(word.strands))
    c = np.zeros((count, count), dtype=np.int64)
    for e in word.letters:
        i = abs(e) - 1
        if e > 0:
            under, over, w = occupant[i], occupant[i + 1], 1
        else:
            under, over, w = occupant[i + 1], occupant[i], -1
        cu, co = comp[under], comp[over]
        if cu != co:
            c[cu, co] += w
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]

    doubled = c + c.T
    if (doubled % 2).any():
        raise PreconditionError("mixed crossing counts came out odd; "
                                "the under/over bookkeeping is inconsistent")
    return LinkProfile(count, c, doubled // 2, comp)


@dataclass
class BilinearSystem:
    """One equation per component i:
    sum_j c[i][j] x_i y_j = sum_j c[j][i] x_j y_i.  The equations sum to
    zero identically, so the last one is redundant."""

    c: np.ndarray
    texts: list = field(default_factory=list)

    @property
    def size(self) -> int:
        return self.c.shape[0]

    def matrix(self, x):
        """Coefficient matrix A(x) acting on y: row i is equation i."""
        x = np.asarray(x, dtype=float)
        a = self.c * x[:, None]
        a[np.diag_indices(self.size)] -= self.c.T @ x
        return a

    def residual(self, x, y) -> float:
        return float(np.max(np.abs(self.matrix(x) @ np.asarray(y, dtype=float)))) \
            if self.size else 0.0

    def to_json(self):
        return {
            "lhs": [[int(v) for v in row] for row in self.c],
            "rhs": [[int(v) for v in row] for row in self.c.T],
            "equations": list(self.texts),
            "redundant_last": True,
        }


def _side_text(coeffs, fixed, moving, fixed_index):
    terms = []
    for j, cv in enumerate(coeffs):
        if cv == 0:
            continue
        mag = "" if abs(cv) == 1 else f"{abs(cv)}*"
        term = f"{mag}{fixed}{fixed_index + 1}*{moving}{j + 1}"
        if not terms:
            terms.append(term if cv > 0 else f"-{term}")
        else:
            terms.append(f"{'+' if cv > 0 else '-'} {term}")
    return " ".join(terms) if terms else "0"


def coloring_space_system(profile: LinkProfile) -> BilinearSystem:
    c = profile.c
    texts = []
    for i in range(profile.components):
        lhs = _side_text(c[i], "x", "y", i)
        rhs_terms = []
        for j in range(profile.components):
            cv = int(c[j, i])
            if cv == 0:
                continue
            mag = "" if abs(cv) == 1 else f"{abs(cv)}*"
            term = f"{mag}x{j + 1}*y{i + 1}"
            if not rhs_terms:
                rhs_terms.append(term if cv > 0 else f"-{term}")
            else:
                rhs_terms.append(f"{'+' if cv > 0 else '-'} {term}")
        rhs = " ".join(rhs_terms) if rhs_terms else "0"
        texts.append(f"{lhs} = {rhs}")
    return BilinearSystem(c.copy(), texts)


# ---------------------------------------------------------------------------
# consistency between the system and the braid-engine fixed points

def _strand_shifts(word: BraidWord, comp, x, y):
    """Total quadratic z-offset each strand picks up in one pass through the
    braid, computed by the same under/over bookkeeping as crossing_matrix."""
    shifts = np.zeros(word.strands)
    occupant = list(range(word.strands))
    for e in word.letters:
        i = abs(e) - 1
        if e > 0:
            under, over, w = occupant[i], occupant[i + 1], 1
        else:
            under, over, w = occupant[i + 1], occupant[i], -1
        gain = w * x[comp[under]] * y[comp[over]]
        shifts[under] += gain
        shifts[over] -= gain
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    return shifts


def propagate_state(word: BraidWord, x, y, base_z, comp=None):
    """Build a full coloring from per-component plane coordinates and one
    free offset per component, pushing offsets forward along each cycle."""
    if comp is None:
        comp, _ = closure_components(word)
    perm = braid_permutation(word)
    shifts = _strand_shifts(word, comp, x, y)
    z = [None] * word.strands
    seen = [False] * word.strands
    for p in range(word.strands):
        if seen[p]:
            continue
        z[p] = float(base_z[comp[p]])
        seen[p] = True
        cur = p
        while not seen[perm[cur]]:
            z[perm[cur]] = z[cur] + shifts[cur]
            seen[perm[cur]] = True
            cur = perm[cur]
    return tuple(
        np.array([x[comp[p]], y[comp[p]], z[p]], dtype=float)
        for p in range(word.strands)
    )


def _sample_away_from_zero(rng, size, low=0.5, high=10.0):
    mag = rng.uniform(low, high, size)
    sign = np.where(rng.uniform(size=size) < 0.5, -1.0, 1.0)
    return mag * sign


def _kernel_basis(a, cutoff=1e-9):
    if a.shape[0] == 0:
        return np.eye(a.shape[1])
    u, s, vt = np.linalg.svd(a)
    top = s[0] if len(s) else 0.0
    keep = s <= cutoff * max(top, 1.0)
    null = vt[len(s):].tolist() + vt[:len(s)][keep].tolist()
    return np.array(null) if null else np.empty((0, a.shape[1]))


def verify_system_vs_fixed_points(word: BraidWord, *, samples: int = 100,
                                  tolerance: float = 1e-9, seed: int = 0,
                                  off_threshold: float = 1e-3) -> dict:
    """Cross-check the bilinear system against the braid-engine route.

    Points on the system's solution set (plane coordinates from the kernel
    of A(x), offsets propagated forward) must be fixed points of the
    induced map; points driven off the set must fail to be fixed; and
    solving only the first k-1 equations must already satisfy the last.
    """
    profile = crossing_matrix(word)
    system = coloring_space_system(profile)
    q = closed_form_biquandle("r2-heis", 1)
    rng = np.random.default_rng(seed)
    k = profile.components
    comp = profile.strand_components

    max_on = 0.0
    min_off = None
    max_last = 0.0

    for _ in range(samples):
        x = _sample_away_from_zero(rng, k)
        basis = _kernel_basis(system.matrix(x))
        coeffs = rng.normal(size=basis.shape[0])
        y = basis.T @ coeffs
        if np.max(np.abs(y)) < 1e-12:
            y = basis[0]
        y = y * (rng.uniform(1.0, 8.0) / np.max(np.abs(y)))
        base_z = rng.uniform(-10.0, 10.0, k)
        state = propagate_state(word, x, y, base_z, comp)
        max_on = max(max_on, fixed_residual(q, word, state))

        # drive y off the solution set when the system can exclude anything
        for _ in range(50):
            y_off = rng.uniform(-10.0, 10.0, k)
            if system.residual(x, y_off) > 10.0 * off_threshold:
                state_off = propagate_state(word, x, y_off, base_z, comp)
                r = fixed_residual(q, word, state_off)
                min_off = r if min_off is None else min(min_off, r)
                break

        if k >= 2:
            reduced = system.matrix(x)[:-1]
            basis_red = _kernel_basis(reduced)
            coeffs = rng.normal(size=basis_red.shape[0])
            y_red = basis_red.T @ coeffs
            last = float(abs(system.matrix(x)[-1] @ y_red))
            scale = max(np.max(np.abs(y_red)), 1.0)
            max_last = max(max_last, last / scale)

    passed = max_on <= tolerance and (min_off is None or min_off > off_threshold) \
        and max_last <= tolerance
    return {
        "word": render_braid(word),
        "components": k,
        "samples": samples,
        "max_on_residual": float(max_on),
        "min_off_residual": None if min_off is None else float(min_off),
        "max_redundant_residual": float(max_last),
        "passed": bool(passed),
    }
