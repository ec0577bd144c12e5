"""Kronecker substitution: long integer-polynomial products via big integers.

A polynomial with |coefficients| < 2^(k-1) is packed into the integer
Σ c_i 2^(k i); evaluation at 2^k is a ring map, so one bigint product yields
the packed result.  Packing goes through byte strings
with each digit biased by 2^(k-1) so that signed digits unpack cleanly.
"""

KRON_MIN = 24  # use the packed route when both operands are at least this long


def _bias(n, nbytes):
    return int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * n, "little")


def _pack(a, nbytes):
    half = 1 << (8 * nbytes - 1)
    raw = b"".join((c + half).to_bytes(nbytes, "little") for c in a)
    return int.from_bytes(raw, "little") - _bias(len(a), nbytes)


def _unpack(x, n, nbytes):
    half = 1 << (8 * nbytes - 1)
    raw = (x + _bias(n, nbytes)).to_bytes(n * nbytes, "little")
    out = [int.from_bytes(raw[k:k + nbytes], "little") - half
           for k in range(0, n * nbytes, nbytes)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _maxbits(a):
    return max(abs(c) for c in a).bit_length()


def kron_mul(a, b):
    bits = _maxbits(a) + _maxbits(b) + min(len(a), len(b)).bit_length() + 1
    nbytes = bits // 8 + 1
    n = len(a) + len(b) - 1
    return _unpack(_pack(a, nbytes) * _pack(b, nbytes), n, nbytes)
