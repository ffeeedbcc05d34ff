"""Rank data for V(sl_2m, (c_1 w_m, ..., c_n w_m), level).

The closed-form classifier works from the certificate ``(k, p, tail)`` of the
descending weights: ``sum(c) = 2(k*level + p)`` with ``1 <= p <= level`` and
``tail = c_{2k+2} + ... + c_n``.  Exact ranks (m = 1 only) count proper tableaux
on the reduced shape ``(level^2k, p, p)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import UnsupportedError, ValidationError
from .kostka import count_proper_tableaux
from .shapes import reduced_shape


class RankClass(enum.Enum):
    ZERO = "Zero"
    ONE = "One"
    MORE_THAN_ONE = "MoreThanOne"

    @classmethod
    def of_count(cls, count: int) -> "RankClass":
        return cls.ZERO if count == 0 else cls.ONE if count == 1 else cls.MORE_THAN_ONE


class Reason(enum.Enum):
    ALL_ZERO = "all-zero"
    ODD_TOTAL = "odd-total"
    TAIL_BELOW_P = "tail<p"
    TAIL_EQUALS_P = "tail=p"
    MAXIMAL = "maximal"
    # p = level and n = 2k + 3: the reduced shape is a full rectangle whose
    # columns each omit exactly one flavor, which forces the filling
    FULL_RECTANGLE = "full-rectangle"
    SURPLUS = "non-maximal-surplus"


@dataclass(frozen=True)
class BundleSpec:
    level: int
    weights: tuple[int, ...]
    m: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(c) for c in self.weights))
        if self.m < 1:
            raise ValidationError(f"m must be positive, got {self.m}")
        if self.level < 1:
            raise ValidationError(f"level must be positive, got {self.level}")
        if len(self.weights) < 3:
            raise ValidationError(f"need at least 3 marked points, got {len(self.weights)}")
        bad = [c for c in self.weights if not 0 <= c <= self.level]
        if bad:
            raise ValidationError(f"weights {bad} lie outside [0, {self.level}]")

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def algebra(self) -> str:
        return f"sl{2 * self.m}"

    def sorted_weights(self) -> tuple[int, ...]:
        """Nonzero weights in descending order."""
        return tuple(sorted((c for c in self.weights if c), reverse=True))

    def at(self, m: int) -> "BundleSpec":
        return BundleSpec(self.level, self.weights, m)


@dataclass(frozen=True)
class Classification:
    rank_class: RankClass
    reason: Reason
    weights: tuple[int, ...]
    k: int | None = None
    p: int | None = None
    lambda_tail: int | None = None
    maximal: bool = False


def split_total(total: int, level: int) -> tuple[int, int] | None:
    """``(k, p)`` with ``total = 2(k*level + p)``, ``1 <= p <= level``; ``None`` if impossible."""
    if total <= 0 or total % 2:
        return None
    half = total // 2
    k = -(-half // level) - 1
    return k, half - k * level


def kp_decompose(spec: BundleSpec) -> tuple[int, int] | None:
    return split_total(sum(spec.weights), spec.level)


def is_maximal(spec: BundleSpec) -> bool:
    """At least n - 3 of the nonzero weights equal the level."""
    ws = spec.sorted_weights()
    return sum(1 for c in ws if c == spec.level) >= len(ws) - 3


def classify(spec: BundleSpec, rectangle_rule: bool = True) -> Classification:
    """Zero / One / MoreThanOne from the certificate alone; identical for every m.

    ``rectangle_rule=False`` drops the full-rectangle case and reproduces the bare
    tail-sum/maximality rule, which overstates the rank when ``p == level`` and
    ``n == 2k + 3``.
    """
    ws = spec.sorted_weights()
    if not ws:
        return Classification(RankClass.ONE, Reason.ALL_ZERO, ws)
    kp = split_total(sum(ws), spec.level)
    if kp is None:
        return Classification(RankClass.ZERO, Reason.ODD_TOTAL, ws)
    k, p = kp
    tail = sum(ws[2 * k + 1:])
    maximal = is_maximal(spec)
    cert = dict(weights=ws, k=k, p=p, lambda_tail=tail, maximal=maximal)
    if tail < p:
        return Classification(RankClass.ZERO, Reason.TAIL_BELOW_P, **cert)
    if tail == p:
        return Classification(RankClass.ONE, Reason.TAIL_EQUALS_P, **cert)
    if maximal:
        return Classification(RankClass.ONE, Reason.MAXIMAL, **cert)
    if rectangle_rule and p == spec.level and len(ws) == 2 * k + 3:
        return Classification(RankClass.ONE, Reason.FULL_RECTANGLE, **cert)
    return Classification(RankClass.MORE_THAN_ONE, Reason.SURPLUS, **cert)


@lru_cache(maxsize=None)
def _sl2_rank(level: int, ws: tuple[int, ...]) -> int:
    kp = split_total(sum(ws), level)
    if not ws:
        return 1
    if kp is None:
        return 0
    return count_proper_tableaux(reduced_shape(level, *kp), ws, level)


def sl2_rank(level: int, weights: Sequence[int]) -> int:
    """Exact rank of V(sl2, weights, level) for any number of points (zeros ignored)."""
    if any(not 0 <= c <= level for c in weights):
        raise ValidationError(f"weights {tuple(weights)} lie outside [0, {level}]")
    return _sl2_rank(level, tuple(sorted((c for c in weights if c), reverse=True)))


def rank_exact(spec: BundleSpec) -> int:
    if spec.m != 1:
        raise UnsupportedError("exact rank unsupported for m>1")
    return sl2_rank(spec.level, spec.weights)


class WittenDegree(NamedTuple):
    s: int
    quantum: bool


def witten_s(spec: BundleSpec) -> WittenDegree:
    """``s`` with total area ``2m(level + s)``; quantum products are needed when ``s > 0``."""
    area = spec.m * sum(spec.weights)
    if area % (2 * spec.m):
        raise ValidationError(f"total area {area} is not divisible by {2 * spec.m}; no bundle")
    s = area // (2 * spec.m) - spec.level
    return WittenDegree(s, s > 0)


@dataclass(frozen=True)
class SymplecticRelabel:
    algebra: str
    weights: tuple[str, ...]
    level: int
    rank_class: RankClass


def sp_relabel(spec: BundleSpec) -> SymplecticRelabel:
    """The level-one sp_{2l} bundle with transposed weights; it has the same rank."""
    if spec.m != 1:
        raise UnsupportedError("the symplectic relabeling applies to sl2 only")
    names = tuple(f"w{c}" if c else "0" for c in spec.weights)
    return SymplecticRelabel(f"sp{2 * spec.level}", names, 1, classify(spec).rank_class)


def result_record(spec: BundleSpec, exact: bool = False) -> dict:
    """JSON-ready summary of a bundle's rank data."""
    cls = classify(spec)
    total_even = sum(spec.weights) % 2 == 0
    record = {
        "algebra": spec.algebra,
        "level": spec.level,
        "weights": list(spec.weights),
        "s": witten_s(spec).s if total_even else None,
        "k": cls.k,
        "p": cls.p,
        "lambda_tail": cls.lambda_tail,
        "maximal": cls.maximal,
        "class": cls.rank_class.value,
        "reason": cls.reason.value,
    }
    if exact:
        record["exact_rank"] = rank_exact(spec)
    return record
