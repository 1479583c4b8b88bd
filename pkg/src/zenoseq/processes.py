"""Geometric event processes: the chase generalized, plus two classic kin.

A geometric event process fires event k at time

    first_interval * (1 + ratio + ... + ratio^k),

so consecutive inter-event intervals shrink (or grow) by a constant
ratio. For ratio < 1 the event times accumulate at a finite instant,
first_interval/(1 - ratio): infinitely many events inside a finite time
interval. The chase race, the half-the-remaining-distance walk, and the
bouncing ball whose flight times shrink geometrically are all instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateRatioError, DivergenceError
from .race import RaceConfig, StepEvent, as_exact

__all__ = [
    "GeometricEventProcess",
    "DichotomyConfig",
    "BounceConfig",
    "event_time",
    "event_times",
    "accumulation_point",
    "race_as_process",
    "dichotomy_process",
    "dichotomy_sequence",
    "bounce_process",
]


@dataclass(frozen=True)
class GeometricEventProcess:
    """Event intervals first_interval, first_interval*ratio, ..."""

    first_interval: Fraction
    ratio: Fraction

    def __post_init__(self):
        object.__setattr__(
            self, "first_interval", as_exact(self.first_interval, "first_interval")
        )
        object.__setattr__(self, "ratio", as_exact(self.ratio, "ratio"))
        if self.first_interval <= 0:
            raise ValueError("first_interval must be > 0")
        if self.ratio < 0:
            raise ValueError("ratio must be >= 0")


@dataclass(frozen=True)
class DichotomyConfig:
    """A runner on a track of the given length, forever covering half of
    what remains."""

    length: Fraction
    speed: Fraction

    def __post_init__(self):
        object.__setattr__(self, "length", as_exact(self.length, "length"))
        object.__setattr__(self, "speed", as_exact(self.speed, "speed"))
        if self.length <= 0:
            raise ValueError("length must be > 0")
        if self.speed <= 0:
            raise ValueError("speed must be > 0")


@dataclass(frozen=True)
class BounceConfig:
    """A ball whose successive flight times shrink by a constant ratio.

    Parameterized directly in the time domain: the physical form (drop
    height, restitution c, gravity) needs square roots, which leave exact
    rational arithmetic. For a coefficient of restitution c, successive
    flight times scale by c, so time_ratio = c.
    """

    first_flight: Fraction
    time_ratio: Fraction

    def __post_init__(self):
        object.__setattr__(
            self, "first_flight", as_exact(self.first_flight, "first_flight")
        )
        object.__setattr__(self, "time_ratio", as_exact(self.time_ratio, "time_ratio"))
        if self.first_flight <= 0:
            raise ValueError("first_flight must be > 0")
        if not 0 <= self.time_ratio < 1:
            raise ValueError("time_ratio must satisfy 0 <= ratio < 1")


def event_time(process: GeometricEventProcess, k: int) -> Fraction:
    """Closed-form time of event k: first_interval*(1 - ratio^(k+1))/(1 - ratio)."""
    if k < 0:
        raise ValueError("event index must be >= 0")
    r = process.ratio
    if r == 1:
        raise DegenerateRatioError("closed form undefined at ratio 1; use event_times")
    return process.first_interval * (1 - r ** (k + 1)) / (1 - r)


def event_times(process: GeometricEventProcess, count: int) -> list[Fraction]:
    """Times of events 0..count-1 by direct accumulation; any ratio.

    Partial sums are well defined whether or not the process converges,
    so unlike event_time this also covers ratio = 1 (an arithmetic
    progression of event times).
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    times = []
    total = Fraction(0)
    interval = process.first_interval
    for _ in range(count):
        total += interval
        times.append(total)
        interval *= process.ratio
    return times


def accumulation_point(process: GeometricEventProcess) -> Fraction:
    """The finite instant first_interval/(1 - ratio) the event times crowd
    against; requires ratio < 1."""
    if process.ratio >= 1:
        raise DivergenceError("no accumulation point: ratio >= 1")
    return process.first_interval / (1 - process.ratio)


def race_as_process(config: RaceConfig) -> GeometricEventProcess:
    """The chase's step times as an event process.

    The inter-step intervals are t_0 = x0/sa, then shrink by r per step,
    so the accumulation point of the result is exactly the catch-up time.
    """
    r = config.ratio
    if r >= 1:
        raise DivergenceError("no catch-up: ratio >= 1")
    return GeometricEventProcess(first_interval=config.x0 / config.sa, ratio=r)


def dichotomy_process(config: DichotomyConfig) -> GeometricEventProcess:
    """The halving walk as an event process: first half takes length/(2*speed),
    each further half takes half as long again."""
    return GeometricEventProcess(
        first_interval=config.length / (2 * config.speed), ratio=Fraction(1, 2)
    )


def dichotomy_sequence(config: DichotomyConfig, count: int) -> list[StepEvent]:
    """Events 0..count-1 of the halving walk.

    Event n is the runner reaching length*(1 - (1/2)^(n+1)), generated by
    repeatedly splitting the remaining distance; every position falls
    strictly short of the full length.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    events = []
    covered = Fraction(0)
    remaining = config.length
    for n in range(count):
        covered += remaining / 2
        remaining = config.length - covered
        events.append(StepEvent(n=n, t=covered / config.speed, x=covered))
    return events


def bounce_process(config: BounceConfig) -> GeometricEventProcess:
    """Flight times as an event process; its accumulation point is the
    instant the ball comes to rest after infinitely many bounces."""
    return GeometricEventProcess(
        first_interval=config.first_flight, ratio=config.time_ratio
    )
