"""Deterministic, portable pseudo-randomness.

Every draw in the package flows through :class:`Rng`, a pure-Python
xoshiro256** generator seeded via splitmix64. Python integers are exact, so
the stream is identical on every platform and interpreter version; nothing
here touches ``random`` or OS entropy.

Stream derivation: ``derive_rng(dataset_seed, index, task_id)`` hashes the
triple with 64-bit FNV-1a over a fixed byte encoding. Instance ``i`` of a
dataset is therefore derivable without generating instances ``0..i-1``.
"""

from __future__ import annotations

from typing import Any, Sequence, TypeVar

_MASK64 = (1 << 64) - 1

T = TypeVar("T")


def _splitmix64(x: int) -> tuple[int, int]:
    """Advance a splitmix64 state, returning (new_state, output)."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


def fnv1a64(data: bytes) -> int:
    """64-bit FNV-1a hash; stable across platforms by construction."""
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & _MASK64
    return h


def stream_key(dataset_seed: int, index: int, task_id: str) -> int:
    """Stable 64-bit key for the (dataset_seed, index, task_id) triple."""
    payload = (
        dataset_seed.to_bytes(8, "little")
        + index.to_bytes(8, "little")
        + task_id.encode("utf-8")
    )
    return fnv1a64(payload)


class Rng:
    """xoshiro256** generator with convenience draws used by task generators.

    ``draw_count`` tracks how many raw 64-bit words were consumed; rendering
    neutrality tests compare it across languages.
    """

    __slots__ = ("_s0", "_s1", "_s2", "_s3", "draw_count")

    def __init__(self, seed: int) -> None:
        state = seed & _MASK64
        words = []
        for _ in range(4):
            state, out = _splitmix64(state)
            words.append(out)
        if not any(words):  # all-zero state is the one forbidden state
            words[0] = 1
        self._s0, self._s1, self._s2, self._s3 = words
        self.draw_count = 0

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        self.draw_count += 1
        return result

    def state(self) -> tuple[int, int, int, int]:
        return (self._s0, self._s1, self._s2, self._s3)

    def random(self) -> float:
        """Float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive, via unbiased rejection."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        n = hi - lo + 1
        limit = ((1 << 64) // n) * n
        while True:
            r = self.next_u64()
            if r < limit:
                return lo + (r % n)

    def choice(self, seq: Sequence[T]) -> T:
        if not seq:
            raise ValueError("choice from empty sequence")
        return seq[self.randint(0, len(seq) - 1)]

    def shuffle(self, items: list[Any]) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq: Sequence[T], k: int) -> list[T]:
        """k distinct elements, order randomized (partial Fisher-Yates)."""
        if k < 0 or k > len(seq):
            raise ValueError(f"cannot sample {k} from {len(seq)} items")
        pool = list(seq)
        out: list[T] = []
        for i in range(k):
            j = self.randint(i, len(pool) - 1)
            pool[i], pool[j] = pool[j], pool[i]
            out.append(pool[i])
        return out


def derive_rng(dataset_seed: int, index: int, task_id: str) -> Rng:
    """Independent stream for one instance of one task."""
    return Rng(stream_key(dataset_seed, index, task_id))
