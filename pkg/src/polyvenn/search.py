"""Simulated-annealing search for rotationally symmetric Venn diagrams.

A single generator polygon is jittered corner by corner; every candidate is
expanded into the n-fold rotational family and scored by an integer
deficiency that is zero exactly when the family verifies to the configured
target.  All moves are rational on a fixed 1e-9 grid, so candidate evaluation
stays exact and a run is reproducible from its seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arrangement import (
    DegeneracyError,
    PolygonFamily,
    build,
    degree_histogram,
)
from .classify import census
from .geometry import ConvexPolygon, Point, Rat, rotate_about_origin, validate_convex
from .transform import TransformError, perturb

GRID = 10 ** 9  # denominator bound for generator coordinates and moves

VENN = "venn"
SIMPLE_VENN = "simple_venn"


def symmetric_family(generator: ConvexPolygon, n: int, digits: int = 12) -> PolygonFamily:
    """The n-fold rotational family of a generator: copy i is the exact i-th
    power of one rational base rotation, labelled C1..Cn."""
    problem = validate_convex(generator)
    if problem is not None:
        raise ValueError(f"invalid generator: {problem}")
    polys = []
    for i in range(n):
        rotated = rotate_about_origin(generator, i, n, digits)
        polys.append(ConvexPolygon(rotated.corners, f"C{i+1}"))
    return PolygonFamily(tuple(polys))


def deficiency(family: PolygonFamily, target: str = SIMPLE_VENN, *,
               auto_perturb_epsilon: Rat = Fraction(1, 10 ** 7),
               auto_perturb_seed: int = 0) -> int:
    """Integer distance from the target: missing sign vectors, plus excess
    duplicate faces, plus (for the simple target) vertices of degree > 4.

    Degenerate families are nudged into general position with a deterministic
    sub-seeded perturbation rather than rejected.
    """
    if target not in (VENN, SIMPLE_VENN):
        raise ValueError(f"unknown target {target!r}")
    try:
        arr = build(family)
    except DegeneracyError:
        arr = build(perturb(family, auto_perturb_epsilon, auto_perturb_seed))
    cens = census(arr)
    score = len(cens.missing)
    score += sum(len(faces) - 1 for faces in cens.duplicated.values())
    if target == SIMPLE_VENN:
        score += sum(count for deg, count in degree_histogram(arr).items()
                     if deg > 4)
    return score


@dataclass(frozen=True)
class SearchConfig:
    n: int
    k: int
    initial_generator: ConvexPolygon
    seed: int = 0
    digits: int = 12
    jitter_initial: Rat = Fraction(1, 50)
    jitter_final: Rat = Fraction(1, 5000)
    max_iterations: int = 10_000
    target: str = SIMPLE_VENN
    temperature_initial: float = 1.5
    temperature_final: float = 0.02
    progress_every: int = 200

    def validate(self) -> None:
        if self.n < 1 or self.k < 3:
            raise ValueError(f"need n >= 1 and k >= 3, got n={self.n}, k={self.k}")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not 0 < self.jitter_final <= self.jitter_initial:
            raise ValueError("jitter schedule must satisfy 0 < final <= initial")
        if self.initial_generator.k != self.k:
            raise ValueError(
                f"generator has {self.initial_generator.k} corners, expected {self.k}")
        problem = validate_convex(self.initial_generator)
        if problem is not None:
            raise ValueError(f"invalid initial generator: {problem}")


@dataclass(frozen=True)
class SearchState:
    generator: ConvexPolygon
    deficiency: int
    iteration: int


def _exact_number(value, name: str) -> Rat:
    if isinstance(value, str):
        from .familydoc import parse_coord

        return parse_coord(value)
    if isinstance(value, int):
        return Fraction(value)
    raise ValueError(f"{name} must be an int or a decimal string, got {value!r}")


def config_from_json(data: dict) -> SearchConfig:
    """Build a SearchConfig from its JSON form.

    Coordinates and jitter magnitudes are decimal strings (or ints) so the
    configuration is exact; temperatures are plain floats.
    """
    from .familydoc import parse_coord

    if not isinstance(data, dict):
        raise ValueError("search config must be a JSON object")
    try:
        gen = data["initial_generator"]
        corners = tuple(Point(parse_coord(c[0]), parse_coord(c[1]))
                        for c in gen["corners"])
        generator = ConvexPolygon(corners, gen.get("label", "C1"))
        config = SearchConfig(
            n=int(data["n"]),
            k=int(data["k"]),
            initial_generator=generator,
            seed=int(data.get("seed", 0)),
            digits=int(data.get("digits", 12)),
            jitter_initial=_exact_number(data.get("jitter_initial", "0.02"),
                                         "jitter_initial"),
            jitter_final=_exact_number(data.get("jitter_final", "0.0002"),
                                       "jitter_final"),
            max_iterations=int(data.get("max_iterations", 10_000)),
            target=data.get("target", SIMPLE_VENN),
            temperature_initial=float(data.get("temperature_initial", 1.5)),
            temperature_final=float(data.get("temperature_final", 0.02)),
            progress_every=int(data.get("progress_every", 200)),
        )
    except (KeyError, TypeError, IndexError) as err:
        raise ValueError(f"bad search config: {err!r}") from err
    config.validate()
    return config


ProgressCallback = Callable[[SearchState, SearchState], None]


def _snap(value: Rat) -> Rat:
    return Fraction(round(value * GRID), GRID)


def _snap_polygon(p: ConvexPolygon) -> ConvexPolygon:
    return ConvexPolygon(tuple(Point(_snap(c.x), _snap(c.y)) for c in p.corners),
                         p.label)


def anneal(config: SearchConfig,
           progress: ProgressCallback | None = None,
           should_stop: Callable[[], bool] | None = None) -> SearchState:
    """Anneal the generator towards deficiency zero.

    Geometric cooling on both the jitter magnitude and the acceptance
    temperature; single-corner moves; returns the best state seen.  Stops at
    deficiency zero, iteration budget exhaustion, or should_stop().
    """
    config.validate()
    rng = random.Random(config.seed)

    def evaluate(generator: ConvexPolygon, sub_seed: int) -> int:
        fam = symmetric_family(generator, config.n, config.digits)
        return deficiency(fam, config.target, auto_perturb_seed=sub_seed)

    current = _snap_polygon(config.initial_generator)
    current_score = evaluate(current, config.seed)
    best = SearchState(current, current_score, 0)
    if progress is not None:
        progress(SearchState(current, current_score, 0), best)
    if current_score == 0:
        return best

    span = max(config.max_iterations - 1, 1)
    jitter_ratio = float(config.jitter_final / config.jitter_initial)
    temp_ratio = config.temperature_final / config.temperature_initial

    for iteration in range(1, config.max_iterations + 1):
        if should_stop is not None and should_stop():
            break
        frac = (iteration - 1) / span
        magnitude = float(config.jitter_initial) * jitter_ratio ** frac
        temperature = config.temperature_initial * temp_ratio ** frac

        corner = rng.randrange(config.k)
        dx = _snap(Fraction(rng.uniform(-magnitude, magnitude)))
        dy = _snap(Fraction(rng.uniform(-magnitude, magnitude)))
        moved = current.corners[corner].translated(dx, dy)
        candidate = current.with_corner(corner, moved)
        if validate_convex(candidate) is not None:
            continue
        try:
            score = evaluate(candidate, config.seed + iteration)
        except TransformError:
            continue

        delta = score - current_score
        if delta <= 0 or rng.random() < math.exp(-delta / temperature):
            current, current_score = candidate, score
            if score < best.deficiency:
                best = SearchState(candidate, score, iteration)
        if progress is not None and (iteration % config.progress_every == 0
                                     or current_score == 0):
            progress(SearchState(current, current_score, iteration), best)
        if current_score == 0:
            break

    return best
