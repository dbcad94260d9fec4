"""
Sequences with a direct formula for term n, defined for negative indices
where the formula allows it
"""

from ..exceptions import OutOfRange

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def rook(n: int) -> int:
    """
    The binary digit just above the lowest set bit of ``n``; 0 at ``n = 0``
    and ``1 - rook(-n)`` for negative ``n``
    """
    if n == 0:
        return 0
    if n < 0:
        return 1 - rook(-n)
    lowest = n & -n
    return 1 if n & (lowest << 1) else 0


def rook_difference(n: int) -> int:
    """``R(n+1) - R(n-1)`` as a plain integer in -1..1"""
    return rook(n + 1) - rook(n - 1)


def knight(n: int) -> int:
    return rook_difference(n) % 2


def pagoda(n: int, p: int = 3) -> int:
    return rook_difference(n) % p


def rueppel(n: int) -> int:
    if n < 0:
        raise OutOfRange('The Rueppel sequence starts at n = 0, got {}'.format(n))
    return 1 if (n + 1) & n == 0 else 0


def thue_morse(n: int) -> int:
    if n < 0:
        raise OutOfRange('The Thue-Morse sequence starts at n = 0, got {}'.format(n))
    return bin(n).count('1') % 2


def _splitmix64(state: int) -> int:
    z = (state + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def libran(n: int, seed: int, base: int) -> int:
    """
    Pseudorandom digit ``0 <= d < base`` for any signed index ``n``.

    Counter based: term ``n`` is a SplitMix64 hash of ``(seed, n)``, so any
    window of the sequence can be produced without generating its prefix.
    """
    if base < 1:
        raise ValueError('base must be positive')
    state = _splitmix64(seed & MASK64) ^ (n & MASK64)
    return _splitmix64(state) % base
