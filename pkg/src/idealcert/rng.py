"""Deterministic counter-based randomness for certificate searches.

Every value is a pure function of (seed, stream, draw index, position), via
SHA-256 in counter mode.  Certificates record the seed and draw index, so a
run replays bit-for-bit on any platform and independent searches can split
the generator by stream label without coordination.
"""

import hashlib


def _chunk_words(seed, stream, draw, block):
    data = f"{seed}|{stream}|{draw}|{block}".encode()
    digest = hashlib.sha256(data).digest()
    return [int.from_bytes(digest[i : i + 4], "big") for i in range(0, 32, 4)]


class DrawSource:
    """Splittable source of small integer draws, addressed by draw index."""

    def __init__(self, seed, stream=""):
        self.seed = int(seed)
        self.stream = stream

    def split(self, label):
        return DrawSource(self.seed, f"{self.stream}/{label}")

    def integers(self, draw, count, bound):
        """`count` integers uniform in [-bound, bound] for this draw index."""
        span = 2 * bound + 1
        out = []
        block = 0
        while len(out) < count:
            for word in _chunk_words(self.seed, self.stream, draw, block):
                out.append(word % span - bound)
                if len(out) == count:
                    break
            block += 1
        return out

    def matrix(self, draw, rows, cols, bound):
        """rows x cols integer matrix with entries in [-bound, bound]."""
        flat = self.integers(draw, rows * cols, bound)
        return tuple(tuple(flat[i * cols : (i + 1) * cols]) for i in range(rows))
