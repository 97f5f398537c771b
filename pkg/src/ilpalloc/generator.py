"""Seeded random instances.

The stream is a xorshift64* generator (Marsaglia shifts 12/25/27, multiplier
0x2545F4914F6CDD1D) whose state is derived from ``(seed, I, J)`` through
three rounds of splitmix64:

    state = sm(sm(sm(seed) ^ I) ^ J)      (state 0 is replaced by 1)

Integers in ``[lo, hi]`` are drawn by rejection so there is no modulo bias.
Draw order is: for each component ``mem, cpu``; then for each machine
``mem, cpu, weight``.  Only the integer arithmetic above is involved, so a
given parameter set produces the same instance on every platform.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, replace

from .errors import InvalidRange
from .model import Component, Instance, Machine, validate_instance

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class XorShift64Star:
    def __init__(self, state: int):
        self.state = (state & MASK64) or 1

    @classmethod
    def for_instance(cls, seed: int, n_components: int, n_machines: int) -> XorShift64Star:
        s = splitmix64(splitmix64(splitmix64(seed & MASK64) ^ n_components) ^ n_machines)
        return cls(s)

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def randint(self, lo: int, hi: int) -> int:
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            r = self.next_u64()
            if r < limit:
                return lo + r % span


@dataclass(frozen=True)
class GeneratorParams:
    seed: int
    n_components: int
    n_machines: int
    mem_req: tuple[int, int] = (256, 4096)
    cpu_req: tuple[int, int] = (100, 2000)
    mem_cap: tuple[int, int] = (4096, 16384)
    cpu_cap: tuple[int, int] = (2000, 8000)
    weight: tuple[int, int] = (1, 1)

    def check(self) -> None:
        if self.n_components < 0 or self.n_machines < 0:
            raise InvalidRange("component and machine counts must be non-negative")
        if not 0 <= self.seed <= MASK64:
            raise InvalidRange("seed must be a 64-bit unsigned integer")
        for name in ("mem_req", "cpu_req", "mem_cap", "cpu_cap", "weight"):
            lo, hi = getattr(self, name)
            if lo < 0 or lo > hi:
                raise InvalidRange(f"{name}: invalid interval [{lo}, {hi}]")
        if self.weight[0] < 1:
            raise InvalidRange("weight lower bound must be at least 1")


@dataclass(frozen=True)
class GeneratedInstance:
    instance: Instance
    params: GeneratorParams
    final_seed: int
    attempts: int

    def metadata(self) -> dict:
        meta = asdict(self.params)
        meta = {k: list(v) if isinstance(v, tuple) else v for k, v in meta.items()}
        meta.update(final_seed=self.final_seed, attempts=self.attempts)
        return meta


MAX_ATTEMPTS = 100


def draw_instance(params: GeneratorParams) -> Instance:
    """One draw for exactly ``params.seed``, with no feasibility screening."""
    params.check()
    rng = XorShift64Star.for_instance(params.seed, params.n_components, params.n_machines)
    comps = tuple(
        Component(i, rng.randint(*params.mem_req), rng.randint(*params.cpu_req))
        for i in range(params.n_components)
    )
    machs = []
    for j in range(params.n_machines):
        mem = rng.randint(*params.mem_cap)
        cpu = rng.randint(*params.cpu_cap)
        machs.append(Machine(j, mem, cpu, rng.randint(*params.weight)))
    return Instance(comps, tuple(machs))


def generate(params: GeneratorParams) -> GeneratedInstance:
    """Draw an instance; redraw with seed+1 while some component fits on no machine.

    Gives up after ``MAX_ATTEMPTS`` draws and returns the last one.
    """
    seed = params.seed
    for attempt in range(1, MAX_ATTEMPTS + 1):
        inst = draw_instance(replace(params, seed=seed))
        if not validate_instance(inst).fits_nowhere or attempt == MAX_ATTEMPTS:
            return GeneratedInstance(inst, params, seed, attempt)
        seed = (seed + 1) & MASK64
    raise AssertionError("unreachable")


def generate_instance(params: GeneratorParams) -> Instance:
    return generate(params).instance


def reference_instance() -> Instance:
    """Synthetic 10 components x 5 machines instance from seed 1 with default ranges."""
    return generate_instance(GeneratorParams(seed=1, n_components=10, n_machines=5))
