"""Pure-Python polynomial kernels over the integers.

Polynomials are dense lists of Python ints, lowest degree first.  Products
and exact quotients go through Kronecker substitution: pack the coefficient
vector into one big integer at radix ``2**B``, use the interpreter's bignum
multiply/divide, then unpack with signed digits.
"""

from __future__ import annotations

from functools import lru_cache

NAME = "python"

# below this length schoolbook loops beat packing
_SHORT = 6


@lru_cache(maxsize=512)
def _bias(n: int, nbytes: int) -> int:
    # sum_{i<n} 2**(8*nbytes*i + 8*nbytes - 1)
    return int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * n, "little")


def _pack(a: list[int], nbytes: int) -> int:
    half = 1 << (8 * nbytes - 1)
    raw = b"".join((c + half).to_bytes(nbytes, "little") for c in a)
    return int.from_bytes(raw, "little") - _bias(len(a), nbytes)


def _unpack(v: int, n: int, nbytes: int) -> list[int] | None:
    """Decode ``n`` signed digits; None if ``v`` does not fit."""
    half = 1 << (8 * nbytes - 1)
    w = v + _bias(n, nbytes)
    if w < 0 or w.bit_length() > 8 * nbytes * n:
        return None
    raw = w.to_bytes(nbytes * n, "little")
    return [
        int.from_bytes(raw[i : i + nbytes], "little") - half
        for i in range(0, nbytes * n, nbytes)
    ]


def _maxbits(a: list[int]) -> int:
    return max(abs(max(a)), abs(min(a))).bit_length()


def mul(a: list[int], b: list[int]) -> list[int]:
    """Product of two dense integer polynomials."""
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        c = b[0]
        return [c * x for x in a]
    if len(b) <= _SHORT:
        out = [0] * (len(a) + len(b) - 1)
        for j, y in enumerate(b):
            if y:
                for i, x in enumerate(a):
                    out[i + j] += x * y
        return out
    bits = _maxbits(a) + _maxbits(b) + len(b).bit_length() + 2
    nbytes = (bits + 7) // 8
    prod = _pack(a, nbytes) * _pack(b, nbytes)
    out = _unpack(prod, len(a) + len(b) - 1, nbytes)
    assert out is not None
    return out


def _longdiv(a: list[int], b: list[int]) -> list[int] | None:
    n, m = len(a), len(b)
    rem = list(a)
    lead = b[-1]
    q = [0] * (n - m + 1)
    for i in range(n - m, -1, -1):
        top = rem[i + m - 1]
        if top:
            qi, r = divmod(top, lead)
            if r:
                return None
            q[i] = qi
            for j in range(m):
                rem[i + j] -= qi * b[j]
    if any(rem[: m - 1]):
        return None
    return q


def divexact(a: list[int], b: list[int]) -> list[int] | None:
    """Quotient ``a / b`` if ``b`` divides ``a`` in Z[x], else None.

    ``b`` must be nonzero with nonzero leading coefficient.
    """
    if not a:
        return []
    m = len(b)
    if m == 1:
        c = b[0]
        out = []
        for x in a:
            qx, r = divmod(x, c)
            if r:
                return None
            out.append(qx)
        return out
    n = len(a)
    if n < m:
        return None
    if m <= _SHORT and n <= 4 * _SHORT:
        return _longdiv(a, b)
    bits = _maxbits(a) + _maxbits(b) + n.bit_length() + 4
    for _ in range(4):
        nbytes = (bits + 7) // 8
        av = _pack(a, nbytes)
        bv = _pack(b, nbytes)
        qv, r = divmod(av, bv)
        if r:
            return None
        q = _unpack(qv, n - m + 1, nbytes)
        if q is not None and mul(q, b) == a:
            return q
        bits *= 2
    return _longdiv(a, b)
