"""Dominant integral weights of gl(m|n) and their weight diagrams.

Weights are handled in shifted-tuple form: adding the Weyl vector

    rho = m*eps_1 + (m-1)*eps_2 + ... + eps_m - delta_1 - 2*delta_2 - ... - n*delta_n

and pairing with the basis functionals (eps_i, eps_j) = delta_ij =
-(delta_i, delta_j) turns a weight into integer tuples

    (a_1, ..., a_m | b_1, ..., b_n),   a_i = (lam + rho, eps_i),  b_j = (lam + rho, delta_j)

with dominance equivalent to a_1 > ... > a_m and b_1 < ... < b_n.  Sorting
into these orderings is the dot-action representative, so no permutation
machinery is needed.  The diagram of a weight has a cross at each value
shared by both sides, ``>`` at left-only values, ``<`` at right-only values;
this is a bijection, inverted by reading the positions back off.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import WeightDiagram, from_spec
from .errors import EmptyWeight, NotDominant, ParseError


@dataclass(frozen=True)
class EpsilonDeltaWeight:
    """A weight in eps/delta coefficients, unshifted."""

    eps: tuple[int, ...]
    delta: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(self.eps))
        object.__setattr__(self, "delta", tuple(self.delta))

    @property
    def m(self) -> int:
        return len(self.eps)

    @property
    def n(self) -> int:
        return len(self.delta)


@dataclass(frozen=True)
class DominantWeight:
    """A shifted tuple (a_1..a_m | b_1..b_n), a strictly decreasing and b
    strictly increasing."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        if not self.left or not self.right:
            raise EmptyWeight("need m >= 1 and n >= 1")
        if any(a <= b for a, b in zip(self.left, self.left[1:])):
            raise NotDominant(f"left entries not strictly decreasing: {self.left}")
        if any(a >= b for a, b in zip(self.right, self.right[1:])):
            raise NotDominant(f"right entries not strictly increasing: {self.right}")

    @property
    def m(self) -> int:
        return len(self.left)

    @property
    def n(self) -> int:
        return len(self.right)

    def __str__(self) -> str:
        return serialize_weight(self)


def rho(m: int, n: int) -> EpsilonDeltaWeight:
    """The Weyl vector: eps coefficients m..1, delta coefficients -1..-n."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    return EpsilonDeltaWeight(
        tuple(range(m, 0, -1)), tuple(range(-1, -n - 1, -1))
    )


def shift(lam: EpsilonDeltaWeight) -> DominantWeight:
    """Shifted tuple of ``lam``: a_i = eps_i + (m+1-i), b_j = -delta_j + j.

    The minus sign on the right comes from the form being negative definite
    on the delta part.  Raises NotDominant when the strict orderings fail.
    """
    m, n = lam.m, lam.n
    left = tuple(lam.eps[i] + (m - i) for i in range(m))
    right = tuple(-lam.delta[j] + (j + 1) for j in range(n))
    return DominantWeight(left, right)


def to_diagram(w: DominantWeight) -> WeightDiagram:
    """Crosses at shared entries, ``>`` at left-only, ``<`` at right-only."""
    left, right = set(w.left), set(w.right)
    return from_spec(left & right, left - right, right - left)


def from_diagram(f: WeightDiagram) -> DominantWeight:
    """Inverse of :func:`to_diagram`; EmptyWeight for the empty diagram."""
    if not f.support:
        raise EmptyWeight("the empty diagram has m = n = 0")
    left = sorted(f.core_left | f.crosses, reverse=True)
    right = sorted(f.core_right | f.crosses)
    return DominantWeight(tuple(left), tuple(right))


def atypicality(w: DominantWeight) -> int:
    """Number of entries shared by the two sides."""
    return len(set(w.left) & set(w.right))


def serialize_weight(w: DominantWeight) -> str:
    return (
        ",".join(str(a) for a in w.left) + "|" + ",".join(str(b) for b in w.right)
    )


def _parse_side(text: str, offset: int) -> tuple[int, ...]:
    values = []
    pos = offset
    for item in text.split(","):
        body = item[1:] if item[:1] == "-" else item
        if not body or not body.isdigit():
            raise ParseError(f"expected an integer, got {item!r}", pos)
        values.append(int(item))
        pos += len(item) + 1
    return tuple(values)


def parse_weight(text: str) -> DominantWeight:
    """Parse ``a_1,...,a_m|b_1,...,b_n`` (shifted tuple form)."""
    left, bar, right = text.partition("|")
    if not bar:
        raise ParseError("weight tuple lacks '|'", len(text))
    return DominantWeight(
        _parse_side(left, 0), _parse_side(right, len(left) + 1)
    )


def parse_epsdelta(text: str) -> EpsilonDeltaWeight:
    """Parse ``e_1,...,e_m|d_1,...,d_n`` (eps/delta coefficients)."""
    left, bar, right = text.partition("|")
    if not bar:
        raise ParseError("coefficient tuple lacks '|'", len(text))
    return EpsilonDeltaWeight(
        _parse_side(left, 0), _parse_side(right, len(left) + 1)
    )


def weight_to_json_obj(w: DominantWeight) -> dict:
    return {"left": list(w.left), "right": list(w.right)}


def weight_from_json_obj(obj: dict) -> DominantWeight:
    return DominantWeight(tuple(obj["left"]), tuple(obj["right"]))
