"""Orbit labels for the four grading families AI, AII, CII, DII.

Provides the per-family admissibility test for filled diagrams, component
group orders, the two distinguishedness predicates, the sign-flip duality on
diagrams, the peeling maps that split a diagram into a uniform padding plus a
distinguished residual, and enumeration of stratum labels.

Diagrams labelling orbits on the negative side of the grading use the '-'
fill convention; all stratum residuals are stored on that side as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagrams import (
    DimensionVector,
    FilledDiagram,
    FilledRow,
    MINUS,
    MultiPartition,
    PLUS,
    Partition,
    canonicalize,
    empty_diagram,
    enumerate_diagrams,
    reduce_label,
)

CASES = ("AI", "AII", "CII", "DII")
TYPE_II_CASES = ("AII", "CII", "DII")


@dataclass(frozen=True)
class GradingSpec:
    """A grading family, its modulus and the box counts per label."""

    case: str
    modulus: int
    dims: DimensionVector

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")
        k = self.modulus
        if k < 1:
            raise ValueError(f"modulus must be >= 1, got {k}")
        dims = tuple(int(v) for v in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) != k:
            raise ValueError(f"expected {k} dimensions, got {len(dims)}")
        if any(v < 0 for v in dims):
            raise ValueError("dimensions must be nonnegative")
        if self.case == "AII":
            if k % 2 == 0:
                raise ValueError("AII modulus must be odd")
            half = (k - 1) // 2
            for i in range(1, half + 1):
                if dims[i - 1] != dims[k - i]:
                    raise ValueError(f"AII requires d_{i} == d_{k + 1 - i}")
            if dims[half] % 2:
                raise ValueError(f"AII requires d_{half + 1} even")
        elif self.case == "CII":
            if k % 2:
                raise ValueError("CII modulus must be even")
            half = k // 2
            for i in range(1, half):
                if dims[i - 1] != dims[k - i - 1]:
                    raise ValueError(f"CII requires d_{i} == d_{k - i}")
            if dims[half - 1] % 2 or dims[k - 1] % 2:
                raise ValueError(f"CII requires d_{half} and d_{k} even")
        elif self.case == "DII":
            if k % 2:
                raise ValueError("DII modulus must be even")
            for i in range(1, k + 1):
                if dims[i - 1] != dims[k - i]:
                    raise ValueError(f"DII requires d_{i} == d_{k + 1 - i}")

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def half(self) -> int:
        """The parameter l: (modulus - 1) / 2 for AII, modulus / 2 for CII/DII."""
        if self.case == "AII":
            return (self.modulus - 1) // 2
        if self.case in ("CII", "DII"):
            return self.modulus // 2
        raise ValueError("half is defined for the type II cases only")

    @property
    def rank(self) -> int:
        if self.case == "AI":
            return min(self.dims)
        return min(v // 2 for v in self.dims)

    @property
    def dim_g1(self) -> int:
        """Dimension of the degree-1 piece (AI only): sum of d_i * d_{i-1}."""
        if self.case != "AI":
            raise ValueError("dim_g1 is implemented for case AI only")
        return sum(self.dims[i] * self.dims[i - 1] for i in range(self.modulus))


def admissible_for_case(diagram: FilledDiagram, case: str) -> bool:
    """Whether the diagram's fill satisfies the case's pairing conditions.

    AI accepts everything.  For the type II cases, rows of each length pair up
    start labels a <-> b whenever a + b is congruent to the length (AII, DII)
    or the length minus one (CII); paired labels must carry equal row counts
    and self-paired labels an even count.
    """
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}")
    if case == "AI":
        return True
    k = diagram.modulus
    shift = 1 if case == "CII" else 0
    for length in diagram.parts:
        p = diagram.multiplicities(length)
        target = length - shift
        for a in range(1, k + 1):
            b = reduce_label(target - a, k)
            if b == a:
                if p[a - 1] % 2:
                    return False
            elif p[a - 1] != p[b - 1]:
                return False
    return True


def admissible(diagram: FilledDiagram, grading: GradingSpec) -> bool:
    if diagram.modulus != grading.modulus:
        raise ValueError("diagram modulus does not match grading modulus")
    return admissible_for_case(diagram, grading.case)


def component_group_order(diagram: FilledDiagram, grading: GradingSpec) -> int:
    """Order of the stabilizer component group: gcd of the parts for AI
    (0 for the empty diagram), 1 for the type II cases."""
    if grading.case == "AI":
        return diagram.part_gcd
    return 1


def is_distinguished_ai(diagram: FilledDiagram, a: int) -> bool:
    """AI distinguishedness at order a.

    Requires a to divide every part, and, with d = gcd(a, modulus), that for
    each part length every residue class of labels mod d contains a label with
    no row of that length.
    """
    if a < 1:
        raise ValueError("order must be >= 1")
    if diagram.part_gcd % a:
        return False
    m = diagram.modulus
    d = gcd(a, m)
    for length in diagram.parts:
        p = diagram.multiplicities(length)
        for i in range(1, d + 1):
            if all(p[i + j * d - 1] for j in range(m // d)):
                return False
    return True


def is_distinguished_ii(diagram: FilledDiagram) -> bool:
    """Type II distinguishedness: every part length has some label with at
    most one row (zero multiplicities count)."""
    for length in diagram.parts:
        if min(diagram.multiplicities(length)) > 1:
            return False
    return True


def duality(diagram: FilledDiagram) -> FilledDiagram:
    """Sign-flip bijection keeping every row's box-label multiset.

    A '-'-row with boxes b, b+1, ..., b+p-1 becomes the '+'-row starting at
    b+p-1 on the same boxes, and conversely.  An involution preserving the
    modulus, size, box counts, underlying partition and part gcd.
    """
    k = diagram.modulus
    if diagram.sign == MINUS:
        rows = [
            (r.length, reduce_label(r.start + r.length - 1, k)) for r in diagram.rows
        ]
        return canonicalize(rows, k, PLUS)
    rows = [(r.length, reduce_label(r.start - r.length + 1, k)) for r in diagram.rows]
    return canonicalize(rows, k, MINUS)


@dataclass(frozen=True)
class PeelAI:
    """Result of the order-a peeling: a multipartition with gcd(a, m)
    components and the distinguished residual diagram."""

    tau: MultiPartition
    residue: FilledDiagram

    @property
    def rank(self) -> int:
        return sum(sum(component) for component in self.tau)


@dataclass(frozen=True)
class PeelII:
    nu: Partition
    residue: FilledDiagram

    @property
    def rank(self) -> int:
        return sum(self.nu)


def peel_ai(diagram: FilledDiagram, a: int) -> PeelAI:
    """Split off, per part length and per label class mod d = gcd(a, m), the
    largest uniform family of rows present at every label of the class.

    Parts are recorded in the tau components divided by a; the leftover row
    multiplicities form the residual diagram, which is distinguished at a.
    """
    if a < 1:
        raise ValueError("order must be >= 1")
    m = diagram.modulus
    if diagram.part_gcd % a:
        raise ValueError(f"every part must be divisible by {a}")
    d = gcd(a, m)
    components: list[list[int]] = [[] for _ in range(d)]
    residue_rows: list[FilledRow] = []
    for length in diagram.parts:
        p = diagram.multiplicities(length)
        for i in range(1, d + 1):
            labels = [i + j * d for j in range(m // d)]
            low = min(p[lab - 1] for lab in labels)
            if low:
                components[i - 1].extend([length // a] * low)
            for lab in labels:
                extra = p[lab - 1] - low
                residue_rows.extend([FilledRow(length, lab)] * extra)
    tau = tuple(tuple(comp) for comp in components)
    return PeelAI(tau, canonicalize(residue_rows, m, diagram.sign))


def peel_ii(diagram: FilledDiagram) -> PeelII:
    """Split off, per part length, the largest number of full label rounds of
    row pairs; the leftover multiplicities form a distinguished residual."""
    m = diagram.modulus
    nu: list[int] = []
    residue_rows: list[FilledRow] = []
    for length in diagram.parts:
        p = diagram.multiplicities(length)
        low = min(v // 2 for v in p)
        nu.extend([length] * low)
        for lab in range(1, m + 1):
            extra = p[lab - 1] - 2 * low
            residue_rows.extend([FilledRow(length, lab)] * extra)
    return PeelII(tuple(nu), canonicalize(residue_rows, m, diagram.sign))


def d_check_stratum(a: int, mu: FilledDiagram) -> int:
    """Cyclic component-group order attached to an AI stratum residual:
    gcd(m*a/d, part gcd of mu), or m*a/d when mu is empty."""
    m = mu.modulus
    d = gcd(a, m)
    base = m * a // d
    if mu.is_empty:
        return base
    return gcd(base, mu.part_gcd)


def d_check_dual(diagram: FilledDiagram) -> int:
    """Cyclic component-group order on the dual stratum of an AI orbit whose
    diagram has some part present at every label."""
    peel = peel_ai(diagram, 1)
    if peel.rank == 0:
        raise ValueError("no part has a row at every label")
    m = diagram.modulus
    mu = peel.residue
    if mu.is_empty:
        return m * diagram.part_gcd
    g = mu.part_gcd
    for part in set(peel.tau[0]):
        g = gcd(g, m * part)
    return g


@dataclass(frozen=True)
class StratumAI:
    """AI stratum label: order a, braid rank, residual diagram and the
    attached cyclic group order."""

    a: int
    rank: int
    mu: FilledDiagram
    d_check: int


@dataclass(frozen=True)
class StratumII:
    rank: int
    mu: FilledDiagram


def enumerate_strata_ai(grading: GradingSpec, a: int) -> list[StratumAI]:
    """All AI stratum labels at order a for the given grading.

    Empty unless a divides the total box count.  When gcd(a, m) = m the only
    candidate is the fully padded stratum, which exists exactly when the box
    counts are uniform.
    """
    if grading.case != "AI":
        raise ValueError("strata at an order are defined for case AI")
    if a < 1:
        raise ValueError("order must be >= 1")
    m = grading.modulus
    total = grading.total
    if total % a:
        return []
    d = gcd(a, m)
    out: list[StratumAI] = []
    if d == m:
        uniform = total // m
        if all(v == uniform for v in grading.dims):
            mu = empty_diagram(m, MINUS)
            out.append(StratumAI(a, total // a, mu, d_check_stratum(a, mu)))
        return out
    per_label = a // d
    max_rank = total * d // (m * a)
    for rank in range(max_rank + 1):
        sub = tuple(v - per_label * rank for v in grading.dims)
        if any(v < 0 for v in sub):
            continue
        for mu in enumerate_diagrams(m, MINUS, sub):
            if is_distinguished_ai(mu, a):
                out.append(StratumAI(a, rank, mu, d_check_stratum(a, mu)))
    return out


def braid_rank_ai(a: int, mu: FilledDiagram, grading: GradingSpec) -> int:
    """Braid rank of the stratum with residual mu: d(N - |mu|) / (m a)."""
    m = grading.modulus
    num = gcd(a, m) * (grading.total - mu.size)
    den = m * a
    if num % den:
        raise ValueError("inconsistent stratum: braid rank is not an integer")
    return num // den


def enumerate_strata_ii(grading: GradingSpec) -> list[StratumII]:
    """All type II stratum labels: padding depth k plus an admissible
    distinguished residual accounting for the remaining boxes."""
    if grading.case not in TYPE_II_CASES:
        raise ValueError("type II strata require case AII, CII or DII")
    m = grading.modulus
    out: list[StratumII] = []
    max_rank = min(v // 2 for v in grading.dims)
    for rank in range(max_rank + 1):
        sub = tuple(v - 2 * rank for v in grading.dims)
        for mu in enumerate_diagrams(m, MINUS, sub):
            if admissible_for_case(mu, grading.case) and is_distinguished_ii(mu):
                out.append(StratumII(rank, mu))
    return out


def full_support_stratum_ii(grading: GradingSpec) -> StratumII:
    """The unique dense stratum: maximal padding depth, residual made of
    single-box rows soaking up the leftover box counts."""
    if grading.case not in TYPE_II_CASES:
        raise ValueError("type II strata require case AII, CII or DII")
    r = grading.rank
    rows = []
    for start, v in enumerate(grading.dims, start=1):
        rows.extend([FilledRow(1, start)] * (v - 2 * r))
    return StratumII(r, canonicalize(rows, grading.modulus, MINUS))


def support_diagram_ai(stratum: StratumAI) -> FilledDiagram:
    """Orbit diagram of an AI stratum: `rank` rows of length a/d at every
    label, joined with the residual."""
    mu = stratum.mu
    m = mu.modulus
    length = stratum.a // gcd(stratum.a, m)
    rows = list(mu.rows)
    for start in range(1, m + 1):
        rows.extend([FilledRow(length, start)] * stratum.rank)
    return canonicalize(rows, m, mu.sign)


def support_diagram_ii(stratum: StratumII) -> FilledDiagram:
    """Orbit diagram of a type II stratum: 2k single-box rows at every label,
    joined with the residual."""
    mu = stratum.mu
    m = mu.modulus
    rows = list(mu.rows)
    for start in range(1, m + 1):
        rows.extend([FilledRow(1, start)] * (2 * stratum.rank))
    return canonicalize(rows, m, mu.sign)
