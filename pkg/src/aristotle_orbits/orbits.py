"""Dual space, coadjoint action, orbit invariants and classification.

Dual coordinates (p, e, f, k, y) are momentum, energy, force, Hooke
constant and yank, paired with algebra coefficients by

    <mu, X> = p X_P + e X_E + f X_F + k X_Lambda + y X_Y.

Two implementations of the action are provided.  ``coadjoint`` is the
canonical one, mu . Ad_{g^-1}, computed from the group-level adjoint
matrices, so it is correct by construction for the derived group law.
``coadjoint_printed`` transcribes the closed formulas of the source text.
Both were compared empirically point by point; they agree identically,
which is recorded in ``PRINTED_ACTION_CONVENTION`` and pinned by a test.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .backend import EPS_CLASS, Scalar, exact_div, is_zero
from .lie_core import AlgebraElement, GroupElement, adjoint_of_group, inverse

HALF = Fraction(1, 2)

# How coadjoint(g, mu) relates to coadjoint_printed(g.x, g.t, g.zeta, mu):
# they coincide with no inversion and no sign flips.  Determined by
# evaluating both on random points before freezing, and kept as data so
# downstream reports can cite it.
PRINTED_ACTION_CONVENTION = "identity"


@dataclass(frozen=True)
class DualElement:
    """Point of the dual space in pairing order (p, e, f, k, y)."""

    p: Scalar
    e: Scalar
    f: Scalar
    k: Scalar
    y: Scalar

    @classmethod
    def from_seq(cls, seq: Sequence[Scalar]) -> "DualElement":
        p, e, f, k, y = seq
        return cls(p, e, f, k, y)

    def as_tuple(self) -> tuple:
        return (self.p, self.e, self.f, self.k, self.y)

    def is_float_backed(self) -> bool:
        return any(isinstance(c, float) for c in self.as_tuple())


class OrbitClass(Enum):
    GENERIC = "GENERIC"
    HOOKE_ONLY = "HOOKE_ONLY"
    YANK_ONLY = "YANK_ONLY"
    FORCE_ONLY = "FORCE_ONLY"
    FIXED_POINT = "FIXED_POINT"


@dataclass(frozen=True)
class InvariantSet:
    """Orbit invariants; entries whose defining division fails are None.

    v = y/k and s = k/y are the invariant velocity and slowness; q = f/k
    and tau = f/y the chart positions; U and pi the internal energy and
    momentum; psi = 2ke - f^2 + 2py is defined everywhere.  f itself is
    invariant (and therefore echoed) exactly when k = y = 0.
    """

    k: Scalar
    y: Scalar
    psi: Scalar
    v: Optional[Scalar] = None
    s: Optional[Scalar] = None
    q: Optional[Scalar] = None
    tau: Optional[Scalar] = None
    u: Optional[Scalar] = None
    pi: Optional[Scalar] = None
    f: Optional[Scalar] = None

    def as_dict(self) -> dict:
        out = {"k": self.k, "y": self.y, "psi": self.psi}
        for name in ("v", "s", "q", "tau", "u", "pi", "f"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out


def pair(mu: DualElement, element: AlgebraElement) -> Scalar:
    """Natural pairing; the result has the dimension of action."""
    return sum(c * a for c, a in zip(mu.as_tuple(), element.coeffs))


def coadjoint(g: GroupElement, mu: DualElement) -> DualElement:
    """mu . Ad_{g^-1}, via the transpose of the group adjoint matrix.

    Left action: coadjoint(compose(g, h), mu) = coadjoint(g, coadjoint(h, mu)).
    The central coordinates (a, b) of g act trivially.
    """
    matrix = adjoint_of_group(inverse(g))
    return DualElement.from_seq(matrix.transpose_apply(mu.as_tuple()))


def coadjoint_printed(x: Scalar, t: Scalar, zeta: Scalar, mu: DualElement) -> DualElement:
    """The closed-form action transcribed from the source text.

    A genuine left action for the first-extension law on (x, t, zeta)
    with zeta'' = zeta + zeta' + x t'; k and y are untouched.
    """
    p, e, f, k, y = mu.as_tuple()
    return DualElement(
        p + f * t + k * (zeta - x * t) + HALF * y * t * t,
        e - f * x + HALF * k * x * x - y * zeta,
        f - k * x + y * t,
        k,
        y,
    )


def classify(mu: DualElement, tol: float = EPS_CLASS) -> OrbitClass:
    """Orbit family of mu, split on (k, y, f).

    Rational inputs are tested exactly; float inputs use a relative zero
    test with tolerance ``tol`` against the largest component (so the
    classification of scaled points is stable).
    """
    scale = max(1, *(abs(c) for c in mu.as_tuple())) if mu.is_float_backed() else 1
    k_zero = is_zero(mu.k, tol, scale)
    y_zero = is_zero(mu.y, tol, scale)
    if not k_zero and not y_zero:
        return OrbitClass.GENERIC
    if not k_zero:
        return OrbitClass.HOOKE_ONLY
    if not y_zero:
        return OrbitClass.YANK_ONLY
    if not is_zero(mu.f, tol, scale):
        return OrbitClass.FORCE_ONLY
    return OrbitClass.FIXED_POINT


def invariants(mu: DualElement, tol: float = EPS_CLASS) -> InvariantSet:
    """All invariants defined at mu; see InvariantSet for the presence rules."""
    p, e, f, k, y = mu.as_tuple()
    scale = max(1, *(abs(c) for c in mu.as_tuple())) if mu.is_float_backed() else 1
    k_zero = is_zero(k, tol, scale)
    y_zero = is_zero(y, tol, scale)

    v = s = q = tau = u = pi = f_echo = None
    if not k_zero:
        v = exact_div(y, k)
        q = exact_div(f, k)
        u = e - HALF * k * q * q + p * v
    if not y_zero:
        s = exact_div(k, y)
        tau = exact_div(f, y)
        pi = p - HALF * y * tau * tau + e * s
    if k_zero and y_zero:
        f_echo = f
    psi = 2 * k * e - f * f + 2 * p * y
    return InvariantSet(k=k, y=y, psi=psi, v=v, s=s, q=q, tau=tau, u=u, pi=pi, f=f_echo)


def coadjoint_generators(mu: DualElement) -> tuple:
    """Rows d/ds coadjoint(exp(s X), mu) at s = 0 for X in (P, E, F).

    Each component is a polynomial in s of degree at most two, so the
    centered difference (g(1) - g(-1))/2 is the exact derivative on both
    backends.  Central generators act trivially and contribute no rows.
    """
    rows = []
    for slot in range(3):
        plus = [0, 0, 0]
        minus = [0, 0, 0]
        plus[slot] = 1
        minus[slot] = -1
        forward = coadjoint_printed(*plus, mu).as_tuple()
        backward = coadjoint_printed(*minus, mu).as_tuple()
        rows.append(tuple(HALF * (a - b) for a, b in zip(forward, backward)))
    return tuple(rows)


def orbit_dimension(mu: DualElement, tol: float = EPS_CLASS) -> int:
    """Rank of the generator matrix at mu; 2 on every nonzero orbit, else 0."""
    return linalg.rank(coadjoint_generators(mu), tol)
