"""First Chern classes of rectangular-weight bundles: Casimir numbers, 4-point
degrees, F-curve intersection numbers and the level-one decomposition.

Point indices are 1-based throughout.  The decomposition is computed on the
descending-sorted nonzero weights (labels ``A``, ``B`` refer to those sorted
positions) and its supports are mapped back to the caller's point order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .bundles import BundleSpec, RankClass, Reason, classify, sl2_rank
from .errors import InvariantViolation, UnsupportedError, ValidationError
from .fills import combined_fill

# --------------------------------------------------------------------- Casimir


@dataclass(frozen=True)
class CasimirInput:
    rank_plus_one: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.rank_plus_one < 2:
            raise ValidationError(f"need sl_N with N >= 2, got N={self.rank_plus_one}")
        if len(self.coeffs) != self.rank_plus_one - 1:
            raise ValidationError(
                f"sl{self.rank_plus_one} takes {self.rank_plus_one - 1} coefficients, got {len(self.coeffs)}"
            )
        if any(c < 0 for c in self.coeffs):
            raise ValidationError(f"coefficients must be nonnegative: {self.coeffs}")


def casimir(inp: CasimirInput) -> Fraction:
    """Casimir number of the sl_N weight ``sum c_i w_i``, exactly."""
    n = inp.rank_plus_one
    c = inp.coeffs
    r = n - 1
    square = sum((n - i) * i * c[i - 1] ** 2 for i in range(1, r + 1))
    cross = sum(
        (n - j) * i * c[i - 1] * c[j - 1]
        for i in range(1, r + 1)
        for j in range(i + 1, r + 1)
    )
    linear = sum((n - i) * i * c[i - 1] for i in range(1, r + 1))
    return Fraction(square, n) + Fraction(2 * cross, n) + linear


def casimir_sl2(c: int) -> Fraction:
    return casimir(CasimirInput(2, (c,)))


def casimir_scaling_check(m: int, base: CasimirInput) -> bool:
    """Does ``c*w_1`` for sl2 scale to ``m*c*w_m`` for sl_2m with a factor ``m**3``?"""
    if m < 1:
        raise ValidationError(f"m must be positive, got {m}")
    if base.rank_plus_one != 2:
        raise ValidationError("the scaling identity starts from an sl2 weight")
    coeffs = [0] * (2 * m - 1)
    coeffs[m - 1] = m * base.coeffs[0]
    return casimir(CasimirInput(2 * m, tuple(coeffs))) == m**3 * casimir(base)


# ------------------------------------------------------------------ 4-point


def dual(weight: int) -> int:
    """sl2 weights are self-dual."""
    return weight


def rank3(level: int, a: int, b: int, c: int) -> int:
    cls = classify(BundleSpec(level, (a, b, c))).rank_class
    if cls is RankClass.MORE_THAN_ONE:
        raise InvariantViolation(f"3-point rank above one at level {level}: {(a, b, c)}")
    return 0 if cls is RankClass.ZERO else 1


_PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


@lru_cache(maxsize=None)
def _degree4(level: int, ws: tuple[int, int, int, int]) -> int:
    rk = sl2_rank(level, ws)
    if rk == 0:
        return 0
    # the point term carries the rank of the 4-point bundle
    total = rk * sum(casimir_sl2(c) for c in ws)
    for (a, b), (c, d) in _PAIRINGS:
        for lam in range(level + 1):
            total -= (
                casimir_sl2(lam)
                * rank3(level, ws[a], ws[b], lam)
                * rank3(level, ws[c], ws[d], dual(lam))
            )
    deg = total / (2 * (2 + level))
    if deg.denominator != 1 or deg < 0:
        raise InvariantViolation(f"degree {deg} of level {level} weights {ws} is not a nonnegative integer")
    return int(deg)


def degree4(level: int, weights: Sequence[int]) -> int:
    """Degree of c_1 of the 4-point sl2 bundle on the moduli space of 4-pointed lines."""
    if len(weights) != 4:
        raise ValidationError(f"need exactly 4 weights, got {len(weights)}")
    if level < 1 or any(not 0 <= c <= level for c in weights):
        raise ValidationError(f"weights {tuple(weights)} lie outside [0, {level}]")
    # the degree is symmetric in the four points
    return _degree4(level, tuple(sorted(weights, reverse=True)))


# ------------------------------------------------------------------ F-curves


@dataclass(frozen=True)
class FCurve:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        if len(blocks) != 4 or any(not b for b in blocks):
            raise ValidationError(f"an F-curve needs 4 nonempty blocks, got {blocks}")
        points = [i for b in blocks for i in b]
        if sorted(points) != list(range(1, len(points) + 1)):
            raise ValidationError(f"blocks {blocks} do not partition 1..{len(points)}")
        object.__setattr__(self, "blocks", tuple(sorted(blocks)))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @classmethod
    def parse(cls, text: str) -> "FCurve":
        """``"1,2|3|4|5,6"`` style notation."""
        try:
            blocks = [tuple(int(x) for x in part.split(",")) for part in text.split("|")]
        except ValueError as exc:
            raise ValidationError(f"malformed F-curve {text!r}") from exc
        return cls(tuple(blocks))

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks)


def fcurves(n: int) -> Iterator[FCurve]:
    """All partitions of 1..n into 4 blocks, blocks ordered by their minimum."""
    if n < 4:
        return

    def rec(i: int, labels: list[int], used: int) -> Iterator[list[int]]:
        if i == n:
            if used == 4:
                yield labels
            return
        if 4 - used > n - i:
            return
        for lab in range(min(used + 1, 4)):
            labels.append(lab)
            yield from rec(i + 1, labels, max(used, lab + 1))
            labels.pop()

    for labels in rec(0, [], 0):
        blocks = [[] for _ in range(4)]
        for i, lab in enumerate(labels, 1):
            blocks[lab].append(i)
        yield FCurve(tuple(tuple(b) for b in blocks))


@lru_cache(maxsize=None)
def _leg(level: int, ws: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sl2_rank(level, ws + (mu,)) for mu in range(level + 1))


def _fcurve_degree_sl2(level: int, weights: tuple[int, ...], curve: FCurve) -> int:
    legs = [
        _leg(level, tuple(sorted((weights[i - 1] for i in b), reverse=True)))
        for b in curve.blocks
    ]
    support = [[(mu, r) for mu, r in enumerate(leg) if r] for leg in legs]
    total = 0
    for (m1, r1), (m2, r2), (m3, r3), (m4, r4) in product(*support):
        d = degree4(level, (m1, m2, m3, m4))
        if d:
            total += d * r1 * r2 * r3 * r4
    return total


def fcurve_degree(spec: BundleSpec, curve: FCurve) -> int:
    """Intersection number of c_1 of the bundle with an F-curve."""
    if curve.n != spec.n:
        raise ValidationError(f"curve on {curve.n} points, bundle on {spec.n}")
    if spec.m > 1:
        cls = classify(spec).rank_class
        if cls is RankClass.ZERO:
            return 0
        if cls is RankClass.MORE_THAN_ONE:
            raise UnsupportedError("F-curve degrees for m>1 need a rank-one bundle")
        return spec.m * fcurve_degree(spec.at(1), curve)
    return _fcurve_degree_sl2(spec.level, spec.weights, curve)


# --------------------------------------------------------------- level one


@dataclass(frozen=True)
class LevelOneVector:
    n: int
    support: tuple[int, ...]
    A: frozenset[int]
    B: frozenset[int]
    k: int
    m: int = 1

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.support, 1) if v)

    def bundle(self) -> BundleSpec:
        return BundleSpec(1, self.support, self.m)

    def label(self) -> str:
        def fmt(s: frozenset[int]) -> str:
            if not s:
                return "0"
            return str(next(iter(s))) if len(s) == 1 else "{" + ",".join(map(str, sorted(s))) + "}"

        return f"V_{fmt(self.A)},{fmt(self.B)}"


def make_vab(n: int, k: int, m: int = 1, A: Iterable[int] = (), B: Iterable[int] = ()) -> LevelOneVector:
    """Weight vector supported on ``({1..2k+1} minus A) union B``."""
    A, B = frozenset(A), frozenset(B)
    if k < 0 or 2 * k + 1 > n:
        raise ValidationError(f"k={k} needs 2k+1 <= n={n}")
    if not A <= set(range(1, 2 * k + 2)):
        raise ValidationError(f"A={sorted(A)} must lie in 1..{2 * k + 1}")
    if not B <= set(range(2 * k + 2, n + 1)):
        raise ValidationError(f"B={sorted(B)} must lie in {2 * k + 2}..{n}")
    on = (set(range(1, 2 * k + 2)) - A) | B
    return LevelOneVector(n, tuple(int(i in on) for i in range(1, n + 1)), A, B, k, m)


@dataclass(frozen=True)
class DivisorCombo:
    terms: tuple[tuple[int, LevelOneVector], ...]
    scale: int = 1
    case: str = ""

    def by_support(self) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = {}
        for coeff, vec in self.terms:
            out[vec.support] = out.get(vec.support, 0) + coeff
        return out

    def same_divisor(self, other: "DivisorCombo") -> bool:
        return self.scale == other.scale and self.by_support() == other.by_support()

    def to_list(self) -> list[dict]:
        return [
            {
                "coefficient": coeff,
                "support": list(vec.support),
                "A": sorted(vec.A),
                "B": sorted(vec.B),
            }
            for coeff, vec in self.terms
        ]

    def __str__(self) -> str:
        parts = [vec.label() if c == 1 else f"{c}*{vec.label()}" for c, vec in self.terms]
        body = " + ".join(parts) or "0"
        return body if self.scale == 1 else f"{self.scale}*({body})"


def _sorted_order(weights: Sequence[int]) -> list[int]:
    """Original 1-based indices of the nonzero weights, largest first (stable)."""
    idx = [i for i in range(1, len(weights) + 1) if weights[i - 1]]
    return sorted(idx, key=lambda i: -weights[i - 1])


def _to_original(vec: LevelOneVector, order: list[int], n: int) -> LevelOneVector:
    support = [0] * n
    for t, i in enumerate(order, 1):
        support[i - 1] = vec.support[t - 1]
    return LevelOneVector(n, tuple(support), vec.A, vec.B, vec.k, vec.m)


def _finish(spec: BundleSpec, raw: list[tuple[int, LevelOneVector]], case: str) -> DivisorCombo:
    ws = spec.sorted_weights()
    order = _sorted_order(spec.weights)
    terms = []
    for coeff, vec in raw:
        if coeff < 0:
            raise InvariantViolation(f"negative coefficient {coeff} on {vec.label()} for {spec}")
        if coeff == 0:
            continue
        vec = _to_original(vec, order, spec.n)
        if len(vec.points) % 2 or classify(vec.bundle()).rank_class is not RankClass.ONE:
            raise InvariantViolation(f"{vec.label()} is not a nonzero level-one bundle")
        terms.append((coeff, vec))
    # each point's weight is the coefficient-weighted count of supports through it
    recon = [sum(c for c, v in raw if v.support[t]) for t in range(len(ws))]
    if tuple(recon) != ws or sum(c for c, _ in raw) != spec.level:
        raise InvariantViolation(f"decomposition of {spec} does not reproduce its weights")
    return DivisorCombo(tuple(terms), spec.m, case)


def decompose(spec: BundleSpec) -> DivisorCombo:
    """c_1 of a rank-one bundle as a nonnegative sum of level-one classes."""
    cls = classify(spec)
    if cls.rank_class is not RankClass.ONE:
        raise ValidationError(f"decomposition needs rank one, {spec} is {cls.rank_class.value}")
    level, c = spec.level, cls.weights
    if not c:
        return DivisorCombo((), spec.m, "trivial")
    n, k, p = len(c), cls.k, cls.p
    at = lambda i: c[i - 1]  # noqa: E731
    vab = lambda A=(), B=(): make_vab(n, k, spec.m, A, B)  # noqa: E731

    if cls.reason is Reason.TAIL_EQUALS_P:
        raw = [(level - at(i), vab(A={i})) for i in range(1, 2 * k + 2)]
        raw += [(at(j), vab(B={j})) for j in range(2 * k + 2, n + 1)]
        return _finish(spec, raw, "tail=p")
    if cls.reason is Reason.FULL_RECTANGLE:
        # every column of the level x (2k+2) rectangle misses one of 2k+3 flavors
        top = set(range(2 * k + 2, n + 1))
        raw = [(level - at(i), vab(A={i}, B=top)) for i in range(1, 2 * k + 2)]
        raw += [(level - at(j), vab(B=top - {j})) for j in sorted(top)]
        return _finish(spec, raw, "full-rectangle")
    if cls.reason is Reason.MAXIMAL:
        if n - 3 == 2 * k:
            raw = [
                (level - p, vab(A={n - 2})),
                (p - at(n), vab(B={n - 1})),
                (p - at(n - 1), vab(B={n})),
                (p - at(n - 2), vab(A={n - 2}, B={n - 1, n})),
            ]
            return _finish(spec, raw, "maximal n-3=2k")
        if n - 3 == 2 * k - 1:
            # n-1 = 2k+1 is already in the base support, so B={n} gives the same vector
            raw = [
                (p, vab(B={n})),
                (at(n - 2) - p, vab(A={n - 1})),
                (at(n - 1) - p, vab(A={n - 2})),
                (at(n) - p, vab(A={n - 2, n - 1}, B={n})),
            ]
            return _finish(spec, raw, "maximal n-3=2k-1")
        raise InvariantViolation(f"maximal content with n={n}, k={k} fits neither branch")
    raise InvariantViolation(f"no decomposition rule for reason {cls.reason.value}")


def decompose_by_columns(spec: BundleSpec) -> DivisorCombo:
    """Decomposition read off the columns of the unique tableau.

    Each column's set of flavors is the support of one level-one vector.  After
    each column is peeled the rest must still be a rank-one bundle one level down.
    """
    cls = classify(spec)
    if cls.rank_class is not RankClass.ONE or cls.reason is not Reason.TAIL_EQUALS_P:
        raise UnsupportedError("column decomposition needs rank one with tail sum equal to p")
    level, c, k, p = spec.level, cls.weights, cls.k, cls.p
    n = len(c)
    t = combined_fill(level, k, p, c)
    base = set(range(1, 2 * k + 2))
    remaining = list(c)
    raw: list[tuple[int, LevelOneVector]] = []
    area = 0
    for b in range(level, 0, -1):
        col = set(t.column(b))
        area += len(col)
        vec = make_vab(n, k, spec.m, base - col, col - base)
        if set(vec.points) != col:
            raise InvariantViolation(f"column {b} flavors {sorted(col)} are not a V_A,B support")
        raw.append((1, vec))
        for f in col:
            remaining[f - 1] -= 1
        if b > 1 and sl2_rank(b - 1, remaining) != 1:
            raise InvariantViolation(f"peeling column {b} of {spec} breaks uniqueness")
    if area != sum(c):
        raise InvariantViolation(f"columns hold {area} boxes, weights total {sum(c)}")
    merged: dict[tuple[int, ...], list] = {}
    for coeff, vec in raw:
        if vec.support in merged:
            merged[vec.support][0] += coeff
        else:
            merged[vec.support] = [coeff, vec]
    reference = decompose(spec)
    order_key = {v.support: i for i, (_, v) in enumerate(reference.terms)}
    ordered = [(cf, v) for cf, v in merged.values()]
    combo = _finish(spec, ordered, "columns")
    combo = DivisorCombo(
        tuple(sorted(combo.terms, key=lambda tv: order_key.get(tv[1].support, len(order_key)))),
        combo.scale,
        "columns",
    )
    return combo


# --------------------------------------------------------------- verification


@dataclass
class VerificationReport:
    spec: BundleSpec
    combo: DivisorCombo | None
    records: list[dict] = field(default_factory=list)
    error: str | None = None

    @property
    def violations(self) -> list[dict]:
        return [r for r in self.records if not r["ok"]]

    @property
    def ok(self) -> bool:
        return self.error is None and not self.violations

    def to_dict(self, all_records: bool = False) -> dict:
        return {
            "level": self.spec.level,
            "weights": list(self.spec.weights),
            "curves": len(self.records),
            "violations": len(self.violations),
            "error": self.error,
            "records": self.records if all_records else self.violations,
        }


def _check_curves(args: tuple[BundleSpec, DivisorCombo, list[FCurve]]) -> list[dict]:
    spec, combo, curves = args
    base = spec.at(1)
    out = []
    for curve in curves:
        lhs = fcurve_degree(base, curve)
        rhs = sum(coeff * fcurve_degree(vec.bundle().at(1), curve) for coeff, vec in combo.terms)
        out.append({"curve": [list(b) for b in curve.blocks], "lhs": lhs, "rhs": rhs, "ok": lhs == rhs})
    return out


def verify_decomposition(spec: BundleSpec, jobs: int = 1) -> VerificationReport:
    """Compare degrees of both sides on every F-curve (at m=1; both sides scale by m)."""
    try:
        combo = decompose(spec)
    except (ValidationError, UnsupportedError, InvariantViolation) as exc:
        return VerificationReport(spec, None, error=str(exc))
    curves = list(fcurves(spec.n))
    if jobs <= 1 or len(curves) < 64:
        records = _check_curves((spec, combo, curves))
    else:
        size = -(-len(curves) // jobs)
        chunks = [(spec, combo, curves[i:i + size]) for i in range(0, len(curves), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [r for part in pool.map(_check_curves, chunks) for r in part]
    return VerificationReport(spec, combo, records)
