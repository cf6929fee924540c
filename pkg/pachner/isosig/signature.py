"""Isomorphism signatures.

Layout, as base-64 digits: the size ``n`` as a variable-length quantity
(5 payload bits per digit, most significant first, 32 added to every digit
but the last), then for each tetrahedron and face in row-major order the
adjacent tetrahedron in ``w`` big-endian digits followed by the gluing
permutation index in one digit, where ``w = ceil(log2(max(n, 2)) / 6)``.
The signature is the smallest digit sequence over all canonical labellings,
written in the alphabet ``a-z A-Z 0-9 + -``.
"""

from __future__ import annotations

import string

from pachner.core.perm import COMPOSE, INVERSE, PERMS
from pachner.core.triangulation import Triangulation, from_arrays
from pachner.errors import MalformedSignature, TriangulationError
from pachner.isosig.labelling import CanonicalLabelling, apply_labelling

ALPHABET = string.ascii_lowercase + string.ascii_uppercase + string.digits + "+-"
_DIGIT = {char: value for value, char in enumerate(ALPHABET)}


def adjacency_width(n: int) -> int:
    """Base-64 digits used per adjacent-tetrahedron field."""
    return max(1, -(-(max(n, 2) - 1).bit_length() // 6))


def _vlq(n: int) -> list[int]:
    digits = [n & 31]
    n >>= 5
    while n:
        digits.append((n & 31) + 32)
        n >>= 5
    digits.reverse()
    return digits


def signature_length(n: int) -> int:
    """Length in characters of every signature of size ``n``."""
    return len(_vlq(n)) + 4 * n * (adjacency_width(n) + 1)


def signature_size(sig: str) -> int:
    """Number of tetrahedra, read from the size field alone."""
    n = 0
    for char in sig:
        digit = _DIGIT.get(char)
        if digit is None:
            raise MalformedSignature(f"Illegal character {char!r} in signature")
        n = (n << 5) | (digit & 31)
        if digit < 32:
            return n
    raise MalformedSignature("Signature ends inside the size field")


def to_text(digits: bytes) -> str:
    """Spell base-64 digit values in the signature alphabet."""
    return "".join(ALPHABET[d] for d in digits)


def encode_table(t: Triangulation) -> bytes:
    """Digits of ``t`` exactly as labelled."""
    width = adjacency_width(t.n)
    digits = _vlq(t.n)
    for slot in range(4 * t.n):
        other = t.adj[slot]
        digits.extend((other >> (6 * shift)) & 63 for shift in range(width - 1, -1, -1))
        digits.append(t.glu[slot])
    return bytes(digits)


def encode_labelled(t: Triangulation, labelling: CanonicalLabelling) -> bytes:
    """Digits of ``t`` under ``labelling``."""
    return encode_table(apply_labelling(t, labelling))


def _candidate(
    t: Triangulation, width: int, start: int, perm: int, best: list[int] | None
) -> list[int] | None:
    """Body digits under one canonical labelling, or None if not below ``best``."""
    n, adj, glu = t.n, t.adj, t.glu
    new_of = [-1] * n
    sigma = [0] * n
    order = [start]
    new_of[start] = 0
    sigma[start] = perm

    out: list[int] = []
    tied = best is not None
    for tet in order:
        s = sigma[tet]
        inverse = INVERSE[s]
        old_face = PERMS[inverse]
        for new_face in range(4):
            slot = 4 * tet + old_face[new_face]
            other = adj[slot]
            if new_of[other] < 0:
                new_of[other] = len(order)
                sigma[other] = COMPOSE[s][INVERSE[glu[slot]]]
                order.append(other)
                gluing = 0
            else:
                gluing = COMPOSE[COMPOSE[sigma[other]][glu[slot]]][inverse]

            label = new_of[other]
            for shift in range(width, -1, -1):
                digit = gluing if shift == 0 else (label >> (6 * (shift - 1))) & 63
                if tied:
                    previous = best[len(out)]  # type: ignore[index]
                    if digit > previous:
                        return None
                    if digit < previous:
                        tied = False
                out.append(digit)
    return None if tied else out


def isosig(t: Triangulation) -> str:
    """Isomorphism signature of ``t``."""
    width = adjacency_width(t.n)
    best: list[int] | None = None
    for start in range(t.n):
        for perm in range(24):
            candidate = _candidate(t, width, start, perm, best)
            if candidate is not None:
                best = candidate
    return to_text(bytes(_vlq(t.n) + best))  # type: ignore[operator]


def decode(sig: str, *, canonical: bool = True) -> Triangulation:
    """Rebuild a triangulation from its signature.

    With ``canonical=False`` any labelled encoding is accepted and the least-
    encoding check is skipped.

    Raises:
        MalformedSignature: Bad characters, wrong length, out-of-range fields,
            a table that is not a closed connected triangulation, or (when
            ``canonical``) an encoding that is not the least one.

    """
    if not sig:
        raise MalformedSignature("Empty signature")
    try:
        digits = [_DIGIT[char] for char in sig]
    except KeyError as e:
        raise MalformedSignature(
            f"Illegal character {e.args[0]!r} in signature"
        ) from None

    if digits[0] == 32:
        raise MalformedSignature("Size has a leading zero digit")
    n = 0
    pos = 0
    while True:
        if pos == len(digits):
            raise MalformedSignature("Signature ends inside the size field")
        digit = digits[pos]
        pos += 1
        n = (n << 5) | (digit & 31)
        if digit < 32:
            break
    if n == 0:
        raise MalformedSignature("Signature declares zero tetrahedra")

    width = adjacency_width(n)
    expected = pos + 4 * n * (width + 1)
    if len(digits) != expected:
        raise MalformedSignature(
            f"Expected {expected} characters for size {n}, got {len(digits)}"
        )

    adj: list[int] = []
    glu: list[int] = []
    for _ in range(4 * n):
        other = 0
        for _ in range(width):
            other = (other << 6) | digits[pos]
            pos += 1
        gluing = digits[pos]
        pos += 1
        if other >= n or gluing >= 24:
            raise MalformedSignature(f"Field out of range at character {pos}")
        adj.append(other)
        glu.append(gluing)

    try:
        t = from_arrays(adj, glu)
    except TriangulationError as e:
        raise MalformedSignature(
            f"Signature does not describe a triangulation: {e}"
        ) from e
    if canonical and isosig(t) != sig:
        raise MalformedSignature("Signature is not in canonical form")
    return t


def is_isomorphic(a: Triangulation, b: Triangulation) -> bool:
    """Whether ``a`` and ``b`` are combinatorially isomorphic."""
    return a.n == b.n and isosig(a) == isosig(b)
