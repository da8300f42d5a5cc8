"""
Field forge: totally real fields with certified symmetric Galois group.

The forge picks target factorization shapes modulo three small primes,
glues them with CRT around a template whose roots are widely separated
integers, and accepts the first lift that Sturm confirms is totally real.
The shapes mod the three primes are the Galois certificate.
"""
from __future__ import annotations

from typing import Optional

from sympy import isprime, nextprime, primerange

from shimforge.arithmetic.crt import crt_lift
from shimforge.arithmetic.finite_field import (
    DegreePattern,
    degree_pattern_mod,
    polynomial_with_pattern,
    reduce_mod,
    roots_mod,
)
from shimforge.arithmetic.polynomial import (
    IntPolynomial,
    isolate_real_roots,
    is_squarefree,
    sturm_real_root_count,
)
from shimforge.config.settings import (
    DEFAULT_PRIME_BOUND,
    SPLIT_PRIME_BUDGET,
    resolve_forge_budget,
)
from shimforge.errors import (
    NoWitnessFound,
    NotSquarefreeModP,
    NotTotallyReal,
    PreconditionError,
    SearchExhausted,
)
from shimforge.fields.field_types import GaloisCertificate, SplitPrimeWitness, TotallyRealField
from shimforge.fields.galois import certify_symmetric, replay_galois_certificate
from shimforge.utils.logger import log


def transposition_shape(d: int) -> DegreePattern:
    """
    Target shape for the transposition witness.

    One quadratic plus distinct odd parts when d - 2 is odd; otherwise the
    residual even r splits as 1 + (r - 1). For d = 4 the residual 2 only
    splits as 1 + 1, giving the plain transposition cycle type {2,1,1}.
    """
    r = d - 2
    if r % 2 == 1:
        return DegreePattern((2, r))
    if r == 2:
        return DegreePattern((2, 1, 1))
    return DegreePattern((2, 1, r - 1))


def target_shapes(d: int) -> list[tuple[str, DegreePattern]]:
    return [
        ("transitive", DegreePattern((d,))),
        ("cycle", DegreePattern((1, d - 1))),
        ("transposition", transposition_shape(d)),
    ]


def _choose_targets(
    d: int, seed: int, prime_bound: int
) -> list[tuple[int, IntPolynomial, DegreePattern]]:
    """Smallest unused prime admitting each shape, with a seed-chosen target mod p."""
    used: set[int] = set()
    targets = []
    for name, pattern in target_shapes(d):
        for p in primerange(2, prime_bound + 1):
            p = int(p)
            if p in used:
                continue
            try:
                target = polynomial_with_pattern(pattern, p, offset=seed)
            except PreconditionError:
                log.debug(f"shape {pattern} unavailable mod {p}")
                continue
            used.add(p)
            targets.append((p, target, pattern))
            log.debug(f"{name} witness: pattern {pattern} mod {p} via {target}")
            break
        else:
            raise PreconditionError(f"no prime up to {prime_bound} admits shape {pattern}")
    return targets


def forge_field(
    d: int, seed: int = 0, budget: Optional[int] = None, prime_bound: Optional[int] = None
) -> tuple[TotallyRealField, GaloisCertificate]:
    """
    Forge a totally real field of degree d >= 3 whose Galois group is S_d.

    Args:
        d: field degree
        seed: selects the irreducible factors used as CRT targets
        budget: number of template scale doublings (FORGE_BUDGET or config default)
        prime_bound: largest prime considered for the three witness shapes

    Returns:
        (field, certificate); identical inputs give identical outputs
    """
    if d < 3:
        raise PreconditionError(f"forge_field needs d >= 3, got {d}")
    budget = resolve_forge_budget() if budget is None else budget
    prime_bound = DEFAULT_PRIME_BOUND if prime_bound is None else prime_bound

    targets = _choose_targets(d, seed, prime_bound)
    lift_targets = [(p, target) for p, target, _ in targets]

    for k in range(budget):
        scale = 2**k
        template = IntPolynomial.from_roots(scale * j for j in range(1, d + 1))
        candidate = crt_lift(lift_targets, template)
        real_roots = sturm_real_root_count(candidate)
        log.debug(f"scale {scale}: candidate {candidate} has {real_roots} real roots")
        if real_roots == d and is_squarefree(candidate):
            break
    else:
        raise SearchExhausted(budget, "forge_field")

    (p1, _, s1), (p2, _, s2), (p3, _, s3) = targets
    certificate = GaloisCertificate(
        degree=d,
        p_transitive=p1,
        pattern_transitive=s1,
        p_cycle=p2,
        pattern_cycle=s2,
        p_transposition=p3,
        pattern_transposition=s3,
    )
    if not replay_galois_certificate(candidate, certificate):
        raise RuntimeError(f"forged definer {candidate} does not reproduce its target shapes")

    field = TotallyRealField(
        degree=d,
        definer=candidate,
        embeddings=isolate_real_roots(candidate),
        aut_certificate=certificate,
    )
    log.info(f"Forged degree-{d} field (seed {seed}): {candidate}")
    return field, certificate


def field_from_definer(f: IntPolynomial, prime_bound: Optional[int] = None) -> TotallyRealField:
    """
    Field for a given monic definer, verified totally real and irreducible.

    A symmetric-group certificate is attempted for d >= 3; an inconclusive
    scan leaves the field uncertified.
    """
    prime_bound = DEFAULT_PRIME_BOUND if prime_bound is None else prime_bound
    if not f.is_monic:
        raise PreconditionError(f"definer must be monic: {f}")
    if f.degree < 1:
        raise PreconditionError("definer must have degree >= 1")
    embeddings = isolate_real_roots(f)
    if embeddings.count != f.degree:
        raise NotTotallyReal(f"{f} has {embeddings.count} real roots, degree {f.degree}")

    certificate = None
    if f.degree >= 3:
        try:
            certificate = certify_symmetric(f, prime_bound)
        except NoWitnessFound as exc:
            log.warning(f"Galois scan for {f} inconclusive: {exc}")

    if certificate is None and not f.to_poly().is_irreducible:
        raise PreconditionError(f"definer {f} is reducible over Q")

    return TotallyRealField(
        degree=f.degree,
        definer=f,
        embeddings=embeddings,
        aut_certificate=certificate,
    )


def split_witness_at(f: IntPolynomial, p: int) -> SplitPrimeWitness:
    """Witness for a prime p at which f splits into distinct linear factors."""
    pattern = degree_pattern_mod(f, p)
    if not pattern.is_totally_split:
        raise PreconditionError(f"{f} does not split completely mod {p} (pattern {pattern})")
    return SplitPrimeWitness(p=p, residues=roots_mod(f, p))


def find_split_prime(
    f: IntPolynomial, start: int = 2, budget: Optional[int] = None
) -> SplitPrimeWitness:
    """Smallest completely split prime p >= start."""
    if not f.is_monic:
        raise PreconditionError(f"find_split_prime expects a monic polynomial: {f}")
    budget = SPLIT_PRIME_BUDGET if budget is None else budget
    p = max(2, start)
    if not isprime(p):
        p = int(nextprime(p))

    for _ in range(budget):
        try:
            witness = split_witness_at(f, p)
            log.debug(f"{f} splits completely mod {p}: {witness.residues}")
            return witness
        except (NotSquarefreeModP, PreconditionError):
            pass
        p = int(nextprime(p))
    raise SearchExhausted(budget, "split-prime scan")


def attach_split_primes(field: TotallyRealField, count: int, start: int = 2) -> TotallyRealField:
    """Attach the first `count` completely split primes >= start to a field."""
    p = start
    for _ in range(count):
        witness = find_split_prime(field.definer, p)
        field = field.with_split_witness(witness)
        p = witness.p + 1
    return field


def replay_split_witness(f: IntPolynomial, witness: SplitPrimeWitness) -> bool:
    """Check a stored witness: totally split pattern and every residue a root."""
    p = witness.p
    if len(witness.residues) != f.degree:
        return False
    if any(not 0 <= r < p for r in witness.residues):
        return False
    try:
        reduce_mod(f, p)
        pattern = degree_pattern_mod(f, p)
    except ValueError:
        return False
    if not pattern.is_totally_split:
        return False
    return all(f.evaluate(r).numerator % p == 0 for r in witness.residues)
