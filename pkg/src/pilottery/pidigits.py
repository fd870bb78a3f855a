"""Decimal digits of pi, digit groups, and the shift transform.

The digit cache is the experiments' ground truth, so it never rests on a
single implementation: a streaming spigot and two binary-splitting series
(Machin arctans and Chudnovsky) are available and must agree. Digit groups
are strings, not numbers: leading zeros are load-bearing.
"""

from __future__ import annotations

import hashlib
import math
import struct
from dataclasses import dataclass
from math import isqrt

from .errors import CacheExhausted

ALGORITHMS = ("spigot", "machin", "chudnovsky")
SERIES_ALIAS = "machin"  # the arctan/binary-splitting series


@dataclass(frozen=True)
class DigitCache:
    """Decimals of pi after the point, 1-indexed via pi_group."""

    digits: str
    checksum: str
    algorithm: str

    def __post_init__(self):
        if self.digits[:5] != "14159":
            raise ValueError("pi digit cache must start 1,4,1,5,9")

    @property
    def count(self) -> int:
        return len(self.digits)


def _checksum(digits: str) -> str:
    return hashlib.sha256(digits.encode("ascii")).hexdigest()


# ---------------------------------------------------------------------------
# Algorithm 1: streaming spigot (linear fraction composition)
# ---------------------------------------------------------------------------

def _digits_spigot(n: int) -> str:
    """Unbounded streaming spigot; quadratic, fine into the tens of
    thousands of digits."""
    out = []
    q, r, s, t = 1, 0, 0, 1
    k = 1
    want = n + 1  # include the leading 3, dropped at the end
    while len(out) < want:
        y3 = (q * 3 + r) // (s * 3 + t)
        y4 = (q * 4 + r) // (s * 4 + t)
        if y3 == y4:
            out.append(y3)
            q, r = 10 * q, 10 * (r - y3 * t)
        else:
            q, r, s, t = (q * k, (4 * k + 2) * q + r * (2 * k + 1),
                          s * k, s * (2 * k + 1) + t * (2 * k + 1))
            k += 1
    if out[0] != 3:
        raise AssertionError("spigot lost the integer part")
    return "".join(str(d) for d in out[1:want])


# ---------------------------------------------------------------------------
# Algorithm 2: Machin arctans via binary splitting
# ---------------------------------------------------------------------------

def _atan_inv_scaled(q: int, prec: int) -> int:
    """floor(atan(1/q) * 10^prec) up to the tail term, by binary splitting
    of the alternating series for atan(1/q)."""
    n_terms = int(prec * math.log(10) / (2 * math.log(q))) + 2

    def split(a: int, b: int) -> tuple[int, int, int]:
        # term ratio: c_k / c_{k-1} = -(2k-1) / ((2k+1) q^2)
        if b - a == 1:
            p = -(2 * a - 1)
            qq = (2 * a + 1) * q * q
            return p, qq, p
        m = (a + b) // 2
        p1, q1, t1 = split(a, m)
        p2, q2, t2 = split(m, b)
        return p1 * p2, q1 * q2, t1 * q2 + p1 * t2

    if n_terms <= 1:
        return 10 ** prec // q
    _p, qq, tt = split(1, n_terms)
    # atan(1/q) = (1/q) * (1 + sum of partial products) = (qq + tt) / (qq * q)
    return (qq + tt) * 10 ** prec // (qq * q)


def _digits_machin(n: int) -> str:
    """pi = 16 atan(1/5) - 4 atan(1/239), with guard digits."""
    guard = 15
    prec = n + guard
    pi_scaled = 16 * _atan_inv_scaled(5, prec) - 4 * _atan_inv_scaled(239, prec)
    return _scaled_to_digits(pi_scaled, prec, n)


# ---------------------------------------------------------------------------
# Algorithm 3: Chudnovsky via binary splitting
# ---------------------------------------------------------------------------

def _chud_split(a: int, b: int) -> tuple[int, int, int]:
    if b - a == 1:
        if a == 0:
            return 1, 1, 13591409
        k = a
        p = (6 * k - 5) * (2 * k - 1) * (6 * k - 1)
        q = k * k * k * 10939058860032000  # 640320^3 / 24
        t = (13591409 + 545140134 * k) * p
        if k % 2 == 1:
            t = -t
        return p, q, t
    m = (a + b) // 2
    p1, q1, t1 = _chud_split(a, m)
    p2, q2, t2 = _chud_split(m, b)
    return p1 * p2, q1 * q2, q2 * t1 + p1 * t2


def _digits_chudnovsky(n: int) -> str:
    guard = 15
    prec = n + guard
    terms = n // 14 + 2
    _p, q, t = _chud_split(0, terms)
    sqrt_c = isqrt(10005 * 10 ** (2 * prec))
    pi_scaled = q * 426880 * sqrt_c // t
    return _scaled_to_digits(pi_scaled, prec, n)


def _scaled_to_digits(pi_scaled: int, prec: int, n: int) -> str:
    text = str(pi_scaled)
    if not text.startswith("3"):
        raise AssertionError("series produced a wrong integer part")
    if len(text) != prec + 1:
        raise AssertionError("series produced a wrong magnitude")
    return text[1:n + 1]


_BUILDERS = {
    "spigot": _digits_spigot,
    "machin": _digits_machin,
    "chudnovsky": _digits_chudnovsky,
}


def build_cache(n: int, algorithm: str = "machin") -> DigitCache:
    """First n decimals of pi; 'series' selects the Machin arctans."""
    if n < 1:
        raise ValueError("need at least one digit")
    name = SERIES_ALIAS if algorithm == "series" else algorithm
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; "
                         f"choose from {ALGORITHMS}") from None
    digits = builder(n)
    return DigitCache(digits, _checksum(digits), name)


# ---------------------------------------------------------------------------
# Digit groups and the shift transform
# ---------------------------------------------------------------------------

def pi_group(m: int, n: int, cache: DigitCache) -> str:
    """The n successive decimals starting at the m-th, as a width-n string."""
    if m < 1 or n < 1:
        raise ValueError("digit positions and widths are 1-based positives")
    end = m + n - 1
    if end > cache.count:
        raise CacheExhausted(end, cache.count)
    return cache.digits[m - 1:end]


def t_k(group: str, k: int) -> str:
    """Add k modulo 10^width, preserving the width with leading zeros."""
    if not group or not group.isdigit():
        raise ValueError("digit group must be a nonempty decimal string")
    if k < 0:
        raise ValueError("shift must be a natural number")
    width = len(group)
    return str((int(group) + k) % 10 ** width).zfill(width)


# ---------------------------------------------------------------------------
# Cache files: magic, version, count, two digits per byte, checksum
# ---------------------------------------------------------------------------

_MAGIC = b"PIDC"
_VERSION = 1


def save_cache(path, cache: DigitCache) -> None:
    digits = cache.digits
    payload = bytearray()
    for i in range(0, len(digits) - 1, 2):
        payload.append((int(digits[i]) << 4) | int(digits[i + 1]))
    if len(digits) % 2:
        payload.append((int(digits[-1]) << 4) | 0x0F)
    blob = (_MAGIC + struct.pack(">BQ", _VERSION, len(digits))
            + bytes(payload) + bytes.fromhex(cache.checksum))
    with open(path, "wb") as fh:
        fh.write(blob)


def load_cache(path) -> DigitCache:
    with open(path, "rb") as fh:
        blob = fh.read()
    if blob[:4] != _MAGIC:
        raise ValueError("not a pi digit cache file")
    version, count = struct.unpack(">BQ", blob[4:13])
    if version != _VERSION:
        raise ValueError(f"unsupported cache version {version}")
    payload_len = (count + 1) // 2
    payload = blob[13:13 + payload_len]
    checksum = blob[13 + payload_len:].hex()
    chars = []
    for byte in payload:
        chars.append(str(byte >> 4))
        low = byte & 0x0F
        if low != 0x0F:
            chars.append(str(low))
    digits = "".join(chars)[:count]
    if len(digits) != count:
        raise ValueError("cache payload truncated")
    if _checksum(digits) != checksum:
        raise ValueError("cache checksum mismatch")
    return DigitCache(digits, checksum, "file")
