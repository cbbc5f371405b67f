"""Sheaf-label catalogs, central-character bookkeeping and bijection checks.

A label couples a stratum with a character of the attached cyclic group and a
(multi)partition.  Catalogs are produced directly from the stratum
enumeration; independently, every orbit-with-character pair is mapped through
the peeling construction, and `verify_bijection` compares the two routes.

Conjectural outputs (the nilpotent-support and cuspidal flags) are marked as
such on the labels; only their combinatorics is verified here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .diagrams import (
    FilledDiagram,
    MINUS,
    MultiPartition,
    empty_diagram,
    enumerate_diagrams,
    multipartitions,
    partitions,
)
from .orbits import (
    GradingSpec,
    StratumAI,
    StratumII,
    admissible_for_case,
    d_check_stratum,
    enumerate_strata_ai,
    enumerate_strata_ii,
    full_support_stratum_ii,
    peel_ai,
    peel_ii,
)
from .oracle import stratum_dim_ai


def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of n, ascending; for n = 0 only 1 is reported (the
    zero grading carries just the trivial character)."""
    if n < 0:
        raise ValueError("expected a nonnegative integer")
    if n == 0:
        return (1,)
    return tuple(k for k in range(1, n + 1) if n % k == 0)


@dataclass(frozen=True)
class CentralCharacter:
    """Residue `index` in Z/modulus, standing for a character of that exact
    additive order.  Modulus 0 encodes the trivial group."""

    modulus: int
    index: int

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be nonnegative")
        if self.modulus == 0:
            if self.index != 0:
                raise ValueError("the trivial group has index 0 only")
        elif not 0 <= self.index < self.modulus:
            raise ValueError(f"index {self.index} out of range [0, {self.modulus})")

    @property
    def order(self) -> int:
        if self.modulus == 0:
            return 1
        return self.modulus // gcd(self.index, self.modulus)


def exact_order_characters(modulus: int, order: int) -> list[CentralCharacter]:
    """All residues of exact additive order `order` in Z/modulus, ascending.

    Empty unless the order divides the modulus; the count is Euler phi of the
    order.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if modulus < 0:
        raise ValueError("modulus must be nonnegative")
    if modulus == 0:
        return [CentralCharacter(0, 0)] if order == 1 else []
    if modulus % order:
        return []
    step = modulus // order
    return [
        CentralCharacter(modulus, c)
        for c in range(modulus)
        if gcd(c, modulus) == step
    ]


@dataclass(frozen=True)
class SheafLabel:
    case: str  # "AI" or "II"
    stratum: StratumAI | StratumII
    psi: CentralCharacter
    tau: MultiPartition
    nilpotent_support: bool
    full_support: bool
    cuspidal_conjectural: bool


def orbital_complexes(grading: GradingSpec, a: int = 1):
    """All (orbit diagram, character) pairs on the negative side.

    For AI at order a these are the diagrams whose part gcd is divisible by a,
    each with every exact-order-a character of its component group.  For the
    type II cases the component groups are trivial and a is ignored.
    """
    out = []
    if grading.case == "AI":
        if a < 1:
            raise ValueError("order must be >= 1")
        for lam in enumerate_diagrams(grading.modulus, MINUS, grading.dims):
            for psi in exact_order_characters(lam.part_gcd, a):
                out.append((lam, psi))
        return out
    trivial = CentralCharacter(1, 0)
    for lam in enumerate_diagrams(grading.modulus, MINUS, grading.dims):
        if admissible_for_case(lam, grading.case):
            out.append((lam, trivial))
    return out


def _is_cuspidal_ai(grading: GradingSpec, a: int, stratum: StratumAI) -> bool:
    m = grading.modulus
    total = grading.total
    if total == 0:
        return False
    if total % m:
        return a == total and stratum.rank == 0 and stratum.mu.partition == (total,)
    if any(v != total // m for v in grading.dims):
        return False
    d = gcd(a, m)
    return (
        stratum.mu.is_empty
        and a * m == d * total
        and gcd(total // m, m // d) == 1
    )


def _flags_ai(grading: GradingSpec, a: int, stratum: StratumAI):
    nilp = stratum.rank == 0
    full = stratum_dim_ai(stratum, grading) == grading.dim_g1
    return nilp, full, _is_cuspidal_ai(grading, a, stratum)


def catalog_ai(grading: GradingSpec, a: int) -> list[SheafLabel]:
    """The full AI label catalog at order a: every stratum paired with every
    exact-order-a character of its cyclic group and every multipartition of
    its braid rank into gcd(a, m) components."""
    if grading.case != "AI":
        raise ValueError("catalog_ai requires case AI")
    d = gcd(a, grading.modulus)
    labels = []
    for stratum in enumerate_strata_ai(grading, a):
        nilp, full, cusp = _flags_ai(grading, a, stratum)
        for psi in exact_order_characters(stratum.d_check, a):
            for tau in multipartitions(d, stratum.rank):
                labels.append(SheafLabel("AI", stratum, psi, tau, nilp, full, cusp))
    return labels


def catalog_ii(grading: GradingSpec) -> list[SheafLabel]:
    """The type II label catalog: every stratum paired with every partition
    of its braid rank; characters are trivial."""
    full_stratum = full_support_stratum_ii(grading)
    trivial = CentralCharacter(1, 0)
    labels = []
    for stratum in enumerate_strata_ii(grading):
        nilp = stratum.rank == 0
        full = stratum == full_stratum
        for rho in partitions(stratum.rank):
            labels.append(SheafLabel("II", stratum, trivial, (rho,), nilp, full, False))
    return labels


def map_sheaf_ai(lam: FilledDiagram, psi: CentralCharacter, a: int, grading: GradingSpec) -> SheafLabel:
    """Image of an AI orbital complex under the peeling bijection.

    The character is transported to the stratum's cyclic group by matching
    positions in the canonical ascending enumerations of exact-order-a
    residues on both sides.
    """
    source = exact_order_characters(lam.part_gcd, a)
    if psi not in source:
        raise ValueError("character is not an exact-order-a character of this orbit")
    peel = peel_ai(lam, a)
    stratum = StratumAI(a, peel.rank, peel.residue, d_check_stratum(a, peel.residue))
    target = exact_order_characters(stratum.d_check, a)
    moved = target[source.index(psi)]
    nilp, full, cusp = _flags_ai(grading, a, stratum)
    return SheafLabel("AI", stratum, moved, peel.tau, nilp, full, cusp)


def map_sheaf_ii(lam: FilledDiagram, grading: GradingSpec) -> SheafLabel:
    """Image of a type II orbit under the peeling bijection."""
    if not admissible_for_case(lam, grading.case):
        raise ValueError("diagram is not admissible for this grading")
    peel = peel_ii(lam)
    stratum = StratumII(peel.rank, peel.residue)
    full = stratum == full_support_stratum_ii(grading)
    return SheafLabel(
        "II",
        stratum,
        CentralCharacter(1, 0),
        (peel.nu,),
        stratum.rank == 0,
        full,
        False,
    )


@dataclass(frozen=True)
class BijectionReport:
    case: str
    a: int
    complexes: int
    labels: int
    counts_equal: bool
    injective: bool
    surjective: bool

    @property
    def ok(self) -> bool:
        return self.counts_equal and self.injective and self.surjective


def verify_bijection(grading: GradingSpec, a: int = 1) -> BijectionReport:
    """Compare the two label routes: orbital complexes mapped through the
    peeling construction against the directly enumerated catalog."""
    if grading.case == "AI":
        pairs = orbital_complexes(grading, a)
        image = [map_sheaf_ai(lam, psi, a, grading) for lam, psi in pairs]
        catalog = catalog_ai(grading, a)
    else:
        pairs = orbital_complexes(grading)
        image = [map_sheaf_ii(lam, grading) for lam, _ in pairs]
        catalog = catalog_ii(grading)
    injective = len(set(image)) == len(image)
    surjective = set(image) == set(catalog)
    return BijectionReport(
        grading.case,
        a if grading.case == "AI" else 1,
        len(pairs),
        len(catalog),
        len(pairs) == len(catalog),
        injective,
        surjective,
    )


def cuspidal_ai(grading: GradingSpec) -> list[SheafLabel]:
    """Conjectural cuspidal labels for case AI.

    When the modulus does not divide the total, these exist only if a single
    row accounts for all the box counts, and sit on that orbit with the
    maximal-order characters.  When it does divide, they exist only for
    uniform box counts, at the orders d'*N/m for divisors d' of m coprime to
    m/d' against N/m.
    """
    if grading.case != "AI":
        raise ValueError("the cuspidal catalog is implemented for case AI")
    m = grading.modulus
    total = grading.total
    if total == 0:
        return []
    out = []
    if total % m:
        regular = next(
            (
                lam
                for lam in enumerate_diagrams(m, MINUS, grading.dims)
                if lam.partition == (total,)
            ),
            None,
        )
        if regular is None:
            return []
        stratum = StratumAI(total, 0, regular, d_check_stratum(total, regular))
        tau = multipartitions(gcd(total, m), 0)[0]
        nilp, full, cusp = _flags_ai(grading, total, stratum)
        for psi in exact_order_characters(stratum.d_check, total):
            out.append(SheafLabel("AI", stratum, psi, tau, nilp, full, cusp))
        return out
    uniform = total // m
    if any(v != uniform for v in grading.dims):
        return []
    mu = empty_diagram(m, MINUS)
    for d_prime in divisors(m):
        if gcd(uniform, m // d_prime) != 1:
            continue
        a = d_prime * uniform
        stratum = StratumAI(a, 1, mu, d_check_stratum(a, mu))
        nilp, full, cusp = _flags_ai(grading, a, stratum)
        for psi in exact_order_characters(stratum.d_check, a):
            for tau in multipartitions(d_prime, 1):
                out.append(SheafLabel("AI", stratum, psi, tau, nilp, full, cusp))
    return out
