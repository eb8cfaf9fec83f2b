"""Raft designations and the weight-changing moves on distinct-part partitions.

A designated raft [k, k+1] is the top pair of a run, so k+2 is never a part.
The forward move lifts the pair by one step, gaining weight 2.  In part-set
terms both cases of the move are the same swap:

  clear ahead (k+3 absent):      remove k, add k+2; the raft becomes [k+1, k+2]
  obstacle (run at k+3..k+s+2):  remove k, add k+2; after relabelling, the
                                 raft re-emerges at the top of the merged run

A forward move is refused when the obstacle run already ends in a designated
raft: letting the two rafts merge would break admissibility, and the
composition scheme never needs that case.  The backward move is the exact
mirror (remove a+1, add a-1, where a is the start of the raft's run), refused
when it would need a part 0 or land on a+1-type conflicts with a designated
raft ending at a-2.

A configuration is minimal when no designated raft can move backward.
Minimal configurations have rigid structure (consecutive parts from 1 up with
one missing part above each lower raft), captured by MinimalProfile, and every
configuration decomposes uniquely as moves applied to a minimal one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .partitions import (
    EvenPartition,
    Partition,
    iter_distinct_parts,
    parse_rafted_text,
    render_rafted_text,
    runs_of,
)

__all__ = [
    "RaftedPartition",
    "MinimalProfile",
    "RaftError",
    "MoveError",
    "decompose",
    "decompose_with_trace",
    "compose",
    "compose_with_trace",
    "enumerate_minimal",
    "enumerate_rafted",
    "minimal_profile",
    "is_minimal_structural",
]


class RaftError(ValueError):
    """An invalid raft designation (broken pair, collision, non-terminal)."""

    def __init__(self, reason: str, detail: str):
        self.reason = reason
        super().__init__(f"{reason}: {detail}")


class MoveError(ValueError):
    """A raft move that is not applicable in the current configuration."""


@dataclass(frozen=True, slots=True)
class RaftedPartition:
    """A distinct-part partition plus a set of designated rafts.

    Rafts are named by their smaller member and stored sorted.  Validation
    enforces, in order: both pair members present; at most one designated
    raft per run; k+2 absent for every designated raft k.
    """

    partition: Partition
    rafts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rafts", tuple(sorted(self.rafts)))
        parts = set(self.partition.parts)
        for k in self.rafts:
            if k not in parts or k + 1 not in parts:
                raise RaftError("raft-pair-broken",
                                f"raft [{k},{k + 1}] needs both members in {self.partition}")
        if len(set(self.rafts)) != len(self.rafts):
            raise RaftError("colliding-rafts", f"repeated raft in {self.rafts}")
        run_of: dict[int, int] = {}
        for idx, (start, length) in enumerate(runs_of(self.partition.parts)):
            for v in range(start, start + length):
                run_of[v] = idx
        seen: dict[int, int] = {}
        for k in self.rafts:
            idx = run_of[k]
            if idx in seen:
                raise RaftError("colliding-rafts",
                                f"rafts [{seen[idx]},{seen[idx] + 1}] and [{k},{k + 1}] "
                                f"share a run in {self.partition}")
            seen[idx] = k
        for k in self.rafts:
            if k + 2 in parts:
                raise RaftError("raft-not-terminal",
                                f"raft [{k},{k + 1}] has {k + 2} present in {self.partition}")

    # -- conveniences -------------------------------------------------------

    @classmethod
    def of(cls, parts, rafts=()) -> "RaftedPartition":
        return cls(Partition(tuple(sorted(parts))), tuple(sorted(rafts)))

    @classmethod
    def parse(cls, text: str) -> "RaftedPartition":
        parts, rafts = parse_rafted_text(text)
        return cls(Partition(parts), rafts)

    @property
    def weight(self) -> int:
        return self.partition.weight

    def __str__(self) -> str:
        return render_rafted_text(self.partition.parts, self.rafts)

    def _require_raft(self, k: int) -> None:
        if k not in self.rafts:
            raise MoveError(f"move-not-applicable: {k} is not a designated raft of {self}")

    # -- forward move -------------------------------------------------------

    def can_forward(self, k: int) -> bool:
        if k not in self.rafts:
            return False
        parts = set(self.partition.parts)
        if k + 3 not in parts:
            return True
        e = k + 3
        while e + 1 in parts:
            e += 1
        return (e - 1) not in self.rafts

    def forward(self, k: int) -> "RaftedPartition":
        """Move raft k up, gaining weight 2: remove k, add k+2."""
        self._require_raft(k)
        parts = set(self.partition.parts)
        if k + 3 in parts:
            e = k + 3
            while e + 1 in parts:
                e += 1
            if (e - 1) in self.rafts:
                raise MoveError(
                    f"move-not-applicable: raft [{k},{k + 1}] is blocked by designated "
                    f"raft [{e - 1},{e}] at the end of the run ahead"
                )
        parts.discard(k)
        parts.add(k + 2)
        e = k + 2
        while e + 1 in parts:
            e += 1
        new_rafts = tuple(r for r in self.rafts if r != k) + (e - 1,)
        return RaftedPartition(Partition(tuple(sorted(parts))), new_rafts)

    # -- backward move ------------------------------------------------------

    def _run_start(self, k: int) -> int:
        parts = set(self.partition.parts)
        a = k
        while a - 1 in parts:
            a -= 1
        return a

    def can_backward(self, k: int) -> bool:
        if k not in self.rafts:
            return False
        a = self._run_start(k)
        return a >= 2 and (a - 3) not in self.rafts

    def backward(self, k: int) -> "RaftedPartition":
        """Move raft k down, losing weight 2: remove a+1, add a-1 (a = run start)."""
        self._require_raft(k)
        a = self._run_start(k)
        if a < 2:
            raise MoveError(
                f"move-not-applicable: raft [{k},{k + 1}] sits on a run starting at 1"
            )
        if (a - 3) in self.rafts:
            raise MoveError(
                f"move-not-applicable: raft [{k},{k + 1}] is blocked by designated "
                f"raft [{a - 3},{a - 2}] just below its run"
            )
        parts = set(self.partition.parts)
        parts.discard(a + 1)
        parts.add(a - 1)
        new_rafts = tuple(r for r in self.rafts if r != k) + (a - 1,)
        return RaftedPartition(Partition(tuple(sorted(parts))), new_rafts)

    # -- minimality ---------------------------------------------------------

    def is_minimal(self) -> bool:
        """No designated raft admits a backward move."""
        return all(not self.can_backward(k) for k in self.rafts)


def is_minimal_structural(rp: RaftedPartition) -> bool:
    """Shape test for minimality, independent of the move rules.

    With rafts r_1 < ... < r_k: every part 1..r_k+1 is present except exactly
    r_j+2 for j < k (forcing r_{j+1} >= r_j + 3), and the remaining parts all
    sit at r_k + 3 or higher.
    """
    if not rp.rafts:
        return True
    r = rp.rafts
    missing = {rj + 2 for rj in r[:-1]}
    expected_low = set(range(1, r[-1] + 2)) - missing
    parts = set(rp.partition.parts)
    low = {p for p in parts if p <= r[-1] + 1}
    if low != expected_low:
        return False
    if any(b - a < 3 for a, b in zip(r, r[1:])):
        return False
    return all(p >= r[-1] + 3 for p in parts - low)


# ---------------------------------------------------------------------------
# decomposition into (minimal, even partition)


def decompose_with_trace(
    rp: RaftedPartition,
) -> tuple[RaftedPartition, EvenPartition, list[tuple[RaftedPartition, int, RaftedPartition]]]:
    """Back every raft down, smallest first; record each move.

    Returns (beta, eta, moves) where eta = (eta_1 >= ... >= eta_k) lists twice
    the number of backward moves applied to the largest raft first, and moves
    holds (before, raft, after) triples in execution order.
    """
    current = rp
    counts: list[int] = []  # smallest raft first
    moves: list[tuple[RaftedPartition, int, RaftedPartition]] = []
    for rank in range(len(rp.rafts)):
        n = 0
        while True:
            k = current.rafts[rank]
            if not current.can_backward(k):
                break
            nxt = current.backward(k)
            moves.append((current, k, nxt))
            current = nxt
            n += 1
        counts.append(2 * n)
    eta = EvenPartition(tuple(reversed(counts)))
    return current, eta, moves


def decompose(rp: RaftedPartition) -> tuple[RaftedPartition, EvenPartition]:
    beta, eta, _ = decompose_with_trace(rp)
    return beta, eta


def compose_with_trace(
    beta: RaftedPartition, eta: EvenPartition
) -> tuple[RaftedPartition, list[tuple[RaftedPartition, int, RaftedPartition]]]:
    """Replay eta on a minimal configuration, largest raft first.

    eta_i/2 forward moves go to the i-th largest raft.  Raises MoveError with
    reason not-minimal when beta admits a backward move, and ValueError with
    reason invalid-eta when eta does not fit beta's raft count.
    """
    k = len(beta.rafts)
    if len(eta) != k:
        raise ValueError(
            f"invalid-eta: {len(eta.parts)} parts for {k} rafts in {beta}"
        )
    if not beta.is_minimal():
        raise MoveError(f"not-minimal: {beta} admits a backward move")
    current = beta
    moves: list[tuple[RaftedPartition, int, RaftedPartition]] = []
    for i, amount in enumerate(eta.parts):
        rank = k - 1 - i  # largest raft first
        for _ in range(amount // 2):
            r = current.rafts[rank]
            nxt = current.forward(r)
            moves.append((current, r, nxt))
            current = nxt
    return current, moves


def compose(beta: RaftedPartition, eta: EvenPartition) -> RaftedPartition:
    result, _ = compose_with_trace(beta, eta)
    return result


# ---------------------------------------------------------------------------
# minimal configurations


@dataclass(frozen=True, slots=True)
class MinimalProfile:
    """Coordinates of a minimal configuration.

    raft_positions r_1 < ... < r_k; mu_j = r_{k-j} + 2 - 3(k-j) lists the
    offsets of the k-1 missing parts against the tightest staircase 3, 6, ...,
    3(k-1), largest offset first (non-increasing, each <= r_k - 3k + 2); tail
    holds the free parts at r_k + 3 and above.
    """

    raft_positions: tuple[int, ...]
    mu: tuple[int, ...]
    tail: tuple[int, ...]

    def __post_init__(self) -> None:
        r = self.raft_positions
        if not r:
            raise ValueError("a profile needs at least one raft")
        if any(b - a < 3 for a, b in zip(r, r[1:])) or r[0] < 1:
            raise ValueError(f"raft positions must climb by >= 3 from >= 1, got {r}")
        k = len(r)
        expected = tuple(r[k - 1 - j] + 2 - 3 * (k - j) for j in range(1, k))
        if self.mu != expected:
            raise ValueError(f"mu {self.mu} does not match raft positions {r}")
        bound = r[-1] - 3 * k + 2
        if any(m < 0 or m > bound for m in self.mu):
            raise ValueError(f"mu parts must lie in [0, {bound}], got {self.mu}")
        if any(p < r[-1] + 3 for p in self.tail):
            raise ValueError(f"tail parts must be >= {r[-1] + 3}, got {self.tail}")

    @classmethod
    def from_positions(cls, raft_positions, tail=()) -> "MinimalProfile":
        r = tuple(sorted(raft_positions))
        k = len(r)
        mu = tuple(r[k - 1 - j] + 2 - 3 * (k - j) for j in range(1, k))
        return cls(r, mu, tuple(sorted(tail)))

    def to_rafted(self) -> RaftedPartition:
        r = self.raft_positions
        missing = {rj + 2 for rj in r[:-1]}
        low = [p for p in range(1, r[-1] + 2) if p not in missing]
        return RaftedPartition(Partition(tuple(low) + self.tail), r)


def minimal_profile(rp: RaftedPartition) -> MinimalProfile:
    """Extract the profile of a minimal configuration with >= 1 raft."""
    if not rp.rafts:
        raise ValueError("a profile needs at least one raft")
    if not rp.is_minimal():
        raise MoveError(f"not-minimal: {rp} admits a backward move")
    tail = tuple(p for p in rp.partition.parts if p > rp.rafts[-1] + 1)
    return MinimalProfile.from_positions(rp.rafts, tail)


def enumerate_minimal(k: int, max_weight: int) -> Iterator[RaftedPartition]:
    """All minimal configurations with exactly k rafts and weight <= max_weight.

    Constructive: choose raft positions climbing by >= 3, fill in the forced
    prefix, then append any distinct-part tail at r_k + 3 or above.  Ordered
    by (weight, parts, rafts).
    """
    if k < 0:
        raise ValueError(f"raft count must be >= 0, got {k}")
    if k == 0:
        for parts in sorted(iter_distinct_parts(max_weight), key=lambda t: (sum(t), t)):
            yield RaftedPartition(Partition(parts), ())
        return

    def prefix_weight(r: tuple[int, ...]) -> int:
        top = r[-1] + 1
        return top * (top + 1) // 2 - sum(rj + 2 for rj in r[:-1])

    def vectors(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        j = len(prefix)
        if j == k:
            if prefix_weight(prefix) <= max_weight:
                yield prefix
            return
        start = prefix[-1] + 3 if prefix else 1
        for r in itertools.count(start):
            tight = prefix + tuple(r + 3 * i for i in range(k - j))
            if prefix_weight(tight) > max_weight:
                break
            yield from vectors(prefix + (r,))

    found: list[RaftedPartition] = []
    for r in vectors(()):
        w0 = prefix_weight(r)
        for tail in iter_distinct_parts(max_weight - w0, min_part=r[-1] + 3):
            found.append(MinimalProfile.from_positions(r, tail).to_rafted())
    found.sort(key=lambda rp: (rp.weight, rp.partition.parts, rp.rafts))
    yield from found


def enumerate_rafted(k: int, max_weight: int) -> Iterator[RaftedPartition]:
    """All configurations with exactly k designated rafts, weight <= max_weight.

    Filter route: every distinct-part partition crossed with every size-k
    subset of its eligible rafts.  Ordered by (weight, parts, rafts).
    """
    found: list[RaftedPartition] = []
    for parts in iter_distinct_parts(max_weight):
        p = Partition(parts)
        elig = p.eligible_rafts()
        if len(elig) < k:
            continue
        for combo in itertools.combinations(elig, k):
            found.append(RaftedPartition(p, combo))
    found.sort(key=lambda rp: (rp.weight, rp.partition.parts, rp.rafts))
    yield from found
