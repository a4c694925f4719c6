"""Partition combinatorics: transposes, containment, hook constraints, and
the truncation map onto (m + n)-tuples."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class NotAHook(ValueError):
    """Partition violates the (p, q)-hook constraint."""


@dataclass(frozen=True)
class HookParams:
    """Hook shape: p unconstrained rows, every later row of length <= q."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise ValueError(f"hook parameters must be positive, got ({self.p}, {self.q})")


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative integers; trailing zeros are stripped so
    structural equality is mathematical equality."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(v) for v in self.parts)
        if any(v < 0 for v in parts):
            raise ValueError(f"negative part in {parts!r}")
        n = len(parts)
        while n and parts[n - 1] == 0:
            n -= 1
        parts = parts[:n]
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse a comma-separated part list; "" and "∅" denote the empty
        partition."""
        text = text.strip()
        if text in ("", "∅"):
            return cls()
        return cls(tuple(int(tok) for tok in text.split(",")))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.parts) if self.parts else "∅"

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """Row length, 1-based, zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def transpose(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for v in self.parts:
            for j in range(v):
                cols[j] += 1
        return Partition(tuple(cols))

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i + 1) >= v for i, v in enumerate(other.parts))

    def is_hook(self, hp: HookParams) -> bool:
        return self.part(hp.p + 1) <= hp.q

    def boxes(self):
        """Yield the diagram cells (i, j), 1-based."""
        for i, v in enumerate(self.parts, start=1):
            for j in range(1, v + 1):
                yield i, j

    def dominates(self, other: "Partition") -> bool:
        """Dominance order; only comparable at equal size."""
        if self.size != other.size:
            return False
        run_self = run_other = 0
        for i in range(1, max(len(self.parts), len(other.parts)) + 1):
            run_self += self.part(i)
            run_other += other.part(i)
            if run_self < run_other:
                return False
        return True


def sort_key(lam: Partition) -> tuple:
    """(size, reverse-lexicographic) enumeration key."""
    return (lam.size, tuple(-v for v in lam.parts))


def transpose(lam: Partition) -> Partition:
    return lam.transpose()


def contains(lam: Partition, mu: Partition) -> bool:
    return lam.contains(mu)


def is_hook(lam: Partition, hp: HookParams) -> bool:
    return lam.is_hook(hp)


@lru_cache(maxsize=None)
def partitions_of(d: int) -> tuple[Partition, ...]:
    """All partitions of d in reverse-lexicographic order."""
    if d < 0:
        raise ValueError("size must be nonnegative")
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for v in range(min(cap, remaining), 0, -1):
            rec(remaining - v, v, prefix + (v,))

    rec(d, d, ())
    out.sort(key=lambda t: tuple(-v for v in t))
    return tuple(Partition(t) for t in out)


@lru_cache(maxsize=None)
def _hooks_exact(p: int, q: int, d: int) -> tuple[Partition, ...]:
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, cap: int, row: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        limit = min(cap, remaining)
        if row > p:
            limit = min(limit, q)
        for v in range(limit, 0, -1):
            rec(remaining - v, v, row + 1, prefix + (v,))

    rec(d, d, 1, ())
    out.sort(key=lambda t: tuple(-v for v in t))
    return tuple(Partition(t) for t in out)


def enumerate_hooks(hp: HookParams, d: int, mode: str = "exact") -> list[Partition]:
    """(p, q)-hook partitions of size d ("exact") or of size <= d ("upto"),
    in (size, reverse-lexicographic) order, duplicate-free."""
    if d < 0:
        raise ValueError("size bound must be nonnegative")
    if mode == "exact":
        return list(_hooks_exact(hp.p, hp.q, d))
    if mode == "upto":
        out: list[Partition] = []
        for e in range(d + 1):
            out.extend(_hooks_exact(hp.p, hp.q, e))
        return out
    raise ValueError(f"unknown enumeration mode: {mode!r}")


def lambda_natural(lam: Partition, m: int, n: int) -> tuple[int, ...]:
    """(lam_1 .. lam_m, <lam'_1 - m>, ..., <lam'_n - m>) where <x> = max(x, 0);
    the tail lists the column lengths left after removing the first m rows."""
    if lam.part(m + 1) > n:
        raise NotAHook(f"{lam} is not an ({m}, {n})-hook partition")
    lamt = lam.transpose()
    head = tuple(lam.part(i) for i in range(1, m + 1))
    tail = tuple(max(lamt.part(j) - m, 0) for j in range(1, n + 1))
    return head + tail
