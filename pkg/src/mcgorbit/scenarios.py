"""Bundled verification scenarios.

Each scenario replays one reference computation end to end and checks the
engine against an independently constructed expectation: a value printed
in the literature, a definitionally forced answer, or a brute-force oracle
computed inside the scenario itself.  The origin field records which of
the three backs the expectation ("published" / "elementary" / "computed").

The same scenarios back both the verify-paper CLI command and the
acceptance test module.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable, Optional

from . import fileio
from .autgen import MoveSet, apply_substitution, nielsen_move, nielsen_moves, substitution_for_move
from .conj import are_conjugate, conjugated, fingerprint
from .errors import InputError
from .finimg import group_closure, image_verdict
from .matrep import (
    RepTuple,
    SquareMatrix,
    direct_sum,
    free_shape,
    matrix_finite_order,
    tensor,
)
from .numfield import NumberField, field_new, rational_field
from .orbit import OrbitBudget, enumerate_orbit, mcg_finite_check, rank1_verdict, verify_closure
from .qpoly import cyclotomic


@dataclass(frozen=True)
class Scenario:
    name: str
    description: str
    origin: str  # "published" | "elementary" | "computed"
    budget_seconds: float
    run: Callable[[], str]  # returns a detail string; raises on failure


@dataclass(frozen=True)
class ScenarioResult:
    name: str
    passed: bool
    seconds: float
    budget_seconds: float
    origin: str
    details: str


class ScenarioFailure(AssertionError):
    pass


def _require(condition: bool, message: str):
    if not condition:
        raise ScenarioFailure(message)


# --- bundled inputs ---------------------------------------------------


def bundled_path(name: str):
    return resources.files("mcgorbit.data").joinpath(name)


def load_bundled_rep(name: str) -> RepTuple:
    with resources.as_file(bundled_path(name)) as path:
        return fileio.load_rep(path)


def potapchik_rep() -> RepTuple:
    """The rank-3 unipotent pair for the free group of rank 2 whose
    conjugacy class is a fixed point of all four moves."""
    return load_bundled_rep("potapchik_f2.json")


def s3_pair() -> RepTuple:
    return load_bundled_rep("s3_pair.json")


def quaternion_pair() -> RepTuple:
    return load_bundled_rep("quaternion_pair.json")


def dihedral_pair(m: int) -> RepTuple:
    return load_bundled_rep(f"dihedral_{m}.json")


def gaussian_field() -> NumberField:
    return field_new([1, 0, 1], var="i")


def rank1_tuple(field: NumberField, scalars) -> RepTuple:
    mats = tuple(
        SquareMatrix.from_rows(field, [[s]]) for s in scalars
    )
    return RepTuple(free_shape(len(mats)), mats)


# --- independent oracles ----------------------------------------------


def s3_elements(field: NumberField) -> set[SquareMatrix]:
    """All six permutation matrices, enumerated directly."""
    import itertools

    out = set()
    for perm in itertools.permutations(range(3)):
        rows = [[1 if perm[i] == j else 0 for j in range(3)] for i in range(3)]
        out.add(SquareMatrix.from_rows(field, rows))
    return out


def quaternion_elements(field: NumberField) -> set[SquareMatrix]:
    """The eight unit quaternions as 2x2 matrices over Q(i), written down."""
    i = field.gen()
    zero, one = field.zero(), field.one()
    a = SquareMatrix.from_rows(field, [[i, zero], [zero, -i]])
    b = SquareMatrix.from_rows(field, [[zero, one], [-one, zero]])
    ident = SquareMatrix.identity(field, 2)
    out = set()
    for k in range(4):
        out.add(a ** k)
        out.add((a ** k) * b)
    _require(len(out) == 8 and ident in out, "quaternion element list is wrong")
    return out


def dihedral_elements(field: NumberField, m: int) -> set[SquareMatrix]:
    """Rotations diag(z^k, z^-k) and reflections, enumerated directly."""
    z = field.gen()
    zero = field.zero()
    out = set()
    for k in range(m):
        zk = z ** k
        zkinv = zk.inverse()
        out.add(SquareMatrix.from_rows(field, [[zk, zero], [zero, zkinv]]))
        out.add(SquareMatrix.from_rows(field, [[zero, zk], [zkinv, zero]]))
    _require(len(out) == 2 * m, f"dihedral element list has {len(out)} != {2*m}")
    return out


def companion_matrix(field: NumberField, poly) -> SquareMatrix:
    n = len(poly) - 1
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -poly[i]
    return SquareMatrix.from_rows(field, rows)


def _random_invertible(rng: random.Random, field: NumberField, r: int) -> SquareMatrix:
    while True:
        m = SquareMatrix.from_rows(
            field,
            [[Fraction(rng.randint(-3, 3)) for _ in range(r)] for _ in range(r)],
        )
        if not m.det().is_zero():
            return m


def _random_tuple(rng: random.Random, field: NumberField, n: int, r: int) -> RepTuple:
    return RepTuple(
        free_shape(n), tuple(_random_invertible(rng, field, r) for _ in range(n))
    )


# --- the scenarios -----------------------------------------------------


def run_fixed_class() -> str:
    rep = potapchik_rep()
    moves = nielsen_moves()
    result = mcg_finite_check(rep, moves)
    _require(result.verdict == "finite", f"orbit verdict {result.verdict}")
    _require(result.class_count == 1, f"{result.class_count} classes, expected 1")
    _require(verify_closure(result, moves), "closure re-check failed")
    image = image_verdict(rep)
    _require(image.kind == "infinite_image", f"image verdict {image.kind}")
    _require(image.reason == "unipotent_nontrivial", f"reason {image.reason}")
    _require(image.witness.length == 1, f"witness length {image.witness.length}")
    return "orbit is one fixed class; image certified infinite by a unipotent generator"


def run_rank1_dichotomy() -> str:
    field = gaussian_field()
    i = field.gen()
    mu4 = [field.one(), i, -field.one(), -i]
    # independent model: exponents mod 4, moves acting on exponent pairs
    def brute_orbit(a: int, b: int) -> set[tuple[int, int]]:
        seen = {(a, b)}
        frontier = [(a, b)]
        while frontier:
            x, y = frontier.pop()
            for img in ((y, x), ((-x) % 4, y), ((x + y) % 4, y)):
                if img not in seen:
                    seen.add(img)
                    frontier.append(img)
        return seen

    exponent_of = {mu4[k]: k for k in range(4)}
    checked = 0
    for a in range(4):
        for b in range(4):
            rep = rank1_tuple(field, (mu4[a], mu4[b]))
            verdict = rank1_verdict(rep)
            _require(
                verdict.kind == "finite_orbit", f"({a},{b}) not finite_orbit"
            )
            engine = {
                (exponent_of[s], exponent_of[t]) for s, t in verdict.orbit
            }
            _require(
                engine == brute_orbit(a, b),
                f"orbit mismatch at exponents ({a},{b})",
            )
            checked += 1
    infinite = rank1_verdict(rank1_tuple(field, (i, field.from_rational(2))))
    _require(infinite.kind == "infinite_orbit", "(i, 2) not certified infinite")
    _require(infinite.witness_index == 2, f"witness index {infinite.witness_index}")
    return f"{checked} torsion tuples match brute force; (i, 2) escapes via generator 2"


def run_jordan_sweep() -> str:
    from .finimg import jordan_commutator_test

    count = 0
    for r in range(2, 7):
        for n in range(1, 101):
            _require(
                jordan_commutator_test(r, n), f"commutator trivial at r={r}, n={n}"
            )
            count += 1
    return f"{count} commutators all nontrivial"


def run_conjugacy_oracle() -> str:
    rng = random.Random(20240601)
    field = rational_field()
    for trial in range(200):
        n = rng.randint(1, 3)
        r = rng.randint(1, 3)
        rep = _random_tuple(rng, field, n, r)
        b = conjugated(rep, _random_invertible(rng, field, r))
        verdict = are_conjugate(rep, b)
        _require(
            verdict.kind == "conjugate", f"recovery failed on trial {trial}"
        )
        inv = verdict.conjugator.inverse()
        for x, y in zip(rep.matrices, b.matrices):
            _require(
                verdict.conjugator * y * inv == x,
                f"conjugator fails re-verification on trial {trial}",
            )
    distinguished = 0
    while distinguished < 200:
        n = rng.randint(1, 3)
        r = rng.randint(1, 3)
        a = _random_tuple(rng, field, n, r)
        b = _random_tuple(rng, field, n, r)
        if fingerprint(a) == fingerprint(b):
            continue
        verdict = are_conjugate(a, b)
        _require(
            verdict.kind == "not_conjugate",
            "fingerprint-distinguished pair not refuted",
        )
        distinguished += 1
    return "200 conjugations recovered and re-verified; 200 distinguished pairs refuted"


def run_closure_orders() -> str:
    details = []
    s3 = s3_pair()
    closure = group_closure(s3)
    _require(closure.kind == "finite", "S3 closure did not finish")
    _require(closure.order == 6, f"S3 order {closure.order}")
    _require(set(closure.elements) == s3_elements(s3.field), "S3 element set mismatch")
    details.append("S3=6")

    quat = quaternion_pair()
    closure = group_closure(quat)
    _require(closure.order == 8, f"quaternion order {closure.order}")
    _require(
        set(closure.elements) == quaternion_elements(quat.field),
        "quaternion element set mismatch",
    )
    details.append("Q8=8")

    for m in (3, 4, 5, 6, 12):
        rep = dihedral_pair(m)
        closure = group_closure(rep)
        _require(
            closure.order == 2 * m, f"dihedral m={m} order {closure.order}"
        )
        _require(
            set(closure.elements) == dihedral_elements(rep.field, m),
            f"dihedral m={m} element set mismatch",
        )
        details.append(f"D{m}={2*m}")
    return "orders " + ", ".join(details)


def run_finite_order_oracle() -> str:
    field = rational_field()
    for m in range(1, 31):
        comp = companion_matrix(field, cyclotomic(m))
        got = matrix_finite_order(comp)
        _require(got == m, f"companion of index {m} has computed order {got}")
    uni = SquareMatrix.from_rows(field, [[1, 1], [0, 1]])
    _require(matrix_finite_order(uni) is None, "unipotent got a finite order")
    return "companion orders 1..30 exact; the unipotent is certified non-torsion"


def run_sum_tensor_closure() -> str:
    rep = potapchik_rep()
    field = rep.field
    triv = RepTuple(
        rep.shape,
        tuple(SquareMatrix.identity(field, 1) for _ in range(rep.n_generators)),
    )
    moves = nielsen_moves()
    summed = mcg_finite_check(direct_sum(rep, triv), moves)
    _require(summed.verdict == "finite", f"direct sum verdict {summed.verdict}")
    tensored = mcg_finite_check(tensor(rep, triv), moves)
    _require(tensored.verdict == "finite", f"tensor verdict {tensored.verdict}")
    return (
        f"direct sum finite with {summed.class_count} class(es), "
        f"tensor finite with {tensored.class_count} class(es)"
    )


def run_finite_image_orbit() -> str:
    rng = random.Random(987123)
    groups = [
        ("S3", s3_pair, s3_elements, None),
        ("Q8", quaternion_pair, quaternion_elements, None),
        ("D4", lambda: dihedral_pair(4), dihedral_elements, 4),
    ]
    moves = nielsen_moves()
    for trial in range(20):
        name, pair, elements_of, m = groups[trial % len(groups)]
        ambient_rep = pair()
        field = ambient_rep.field
        ambient = (
            elements_of(field) if m is None else elements_of(field, m)
        )
        pool = sorted(
            ambient, key=lambda mat: fileio.dumps_canonical(fileio.matrix_to_obj(mat))
        )
        mats = tuple(pool[rng.randrange(len(pool))] for _ in range(2))
        rep = RepTuple(free_shape(2), mats)
        result = enumerate_orbit(rep, moves, OrbitBudget(max_classes=4000))
        _require(
            result.verdict == "finite",
            f"trial {trial} in {name}: verdict {result.verdict}",
        )
        for class_rep in result.representatives:
            for mat in class_rep.matrices:
                _require(
                    mat in ambient,
                    f"trial {trial} in {name}: representative leaves the group",
                )
    return "20 random tuples in bundled finite groups all closed inside the group"


def run_determinism() -> str:
    rng = random.Random(55221)
    field = rational_field()
    for trial in range(50):
        n = rng.randint(2, 4)
        r = rng.randint(1, 3)
        rep = _random_tuple(rng, field, n, r)
        for move in ("c", "tau", "eps", "d"):
            direct = nielsen_move(rep, move)
            via_sub = apply_substitution(rep, substitution_for_move(move, n))
            _require(
                direct == via_sub,
                f"move {move} disagrees with its substitution on trial {trial}",
            )
    moves = nielsen_moves()
    targets = [
        potapchik_rep(),
        rank1_tuple(gaussian_field(), (gaussian_field().gen(), gaussian_field().from_rational(-1))),
    ]
    for rep in targets:
        blobs = set()
        for workers in (1, 2, 8):
            result = mcg_finite_check(rep, moves, workers=workers)
            blobs.add(fileio.dumps_canonical(fileio.orbit_result_to_obj(result)))
        _require(len(blobs) == 1, "orbit serialization varies with worker count")
    return "50 reps move-consistent; orbit results byte-identical across 1, 2, 8 workers"


SCENARIOS: tuple[Scenario, ...] = (
    Scenario(
        name="fixed-class-unipotent-pair",
        description="rank-3 unipotent pair: one fixed class, infinite image",
        origin="published",
        budget_seconds=5.0,
        run=run_fixed_class,
    ),
    Scenario(
        name="rank1-dichotomy",
        description="all 16 fourth-root tuples finite vs (i, 2) infinite",
        origin="computed",
        budget_seconds=1.0,
        run=run_rank1_dichotomy,
    ),
    Scenario(
        name="jordan-commutator-sweep",
        description="[g1^n, g2^n] != I for 2 <= r <= 6, 1 <= n <= 100",
        origin="published",
        budget_seconds=1.0,
        run=run_jordan_sweep,
    ),
    Scenario(
        name="conjugacy-oracle",
        description="200 random conjugations recovered, 200 distinguished pairs refuted",
        origin="computed",
        budget_seconds=60.0,
        run=run_conjugacy_oracle,
    ),
    Scenario(
        name="closure-orders",
        description="S3, quaternion and dihedral closures match direct enumeration",
        origin="computed",
        budget_seconds=10.0,
        run=run_closure_orders,
    ),
    Scenario(
        name="finite-order-oracle",
        description="cyclotomic companion matrices have exact order; unipotent has none",
        origin="computed",
        budget_seconds=5.0,
        run=run_finite_order_oracle,
    ),
    Scenario(
        name="sum-tensor-closure",
        description="direct sum and tensor with the trivial line stay orbit-finite",
        origin="computed",
        budget_seconds=30.0,
        run=run_sum_tensor_closure,
    ),
    Scenario(
        name="finite-image-finite-orbit",
        description="tuples inside finite groups enumerate to finite orbits in-group",
        origin="computed",
        budget_seconds=60.0,
        run=run_finite_image_orbit,
    ),
    Scenario(
        name="determinism-and-moves",
        description="tuple moves match substitutions; workers do not change results",
        origin="computed",
        budget_seconds=30.0,
        run=run_determinism,
    ),
)


def run_scenario(scenario: Scenario) -> ScenarioResult:
    start = time.monotonic()
    try:
        details = scenario.run()
        passed = True
    except ScenarioFailure as exc:
        details = str(exc)
        passed = False
    elapsed = time.monotonic() - start
    if passed and elapsed > scenario.budget_seconds:
        passed = False
        details = f"runtime {elapsed:.2f}s exceeds budget {scenario.budget_seconds}s"
    return ScenarioResult(
        name=scenario.name,
        passed=passed,
        seconds=elapsed,
        budget_seconds=scenario.budget_seconds,
        origin=scenario.origin,
        details=details,
    )


def run_all(only: Optional[str] = None) -> list[ScenarioResult]:
    selected = [
        s for s in SCENARIOS if only is None or only in s.name
    ]
    if not selected:
        raise InputError(f"no scenario matches {only!r}")
    return [run_scenario(s) for s in selected]
