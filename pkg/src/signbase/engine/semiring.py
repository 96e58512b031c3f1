# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""
Sign semiring arithmetic and bit-packed sign matrices.

A Sign is the set of signs carried by a family of walks, encoded as a
two-bit mask: bit 0 for a positive witness, bit 1 for a negative one.
Addition is set union and multiplication is the elementwise product of
sets, which gives exactly the four-element semiring {0, +, -, #}.

A SignMatrix stores each row as two Python integers (the positive and the
negative bitplane), so a row of a product is computed by OR-ing whole rows
of the right factor.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import IntEnum


class Sign(IntEnum):
    """Element of the sign semiring."""

    ZERO = 0
    PLUS = 1
    MINUS = 2
    AMBIGUOUS = 3

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def from_symbol(cls, symbol: str) -> Sign:
        try:
            return _FROM_SYMBOL[symbol]
        except KeyError:
            raise ValueError(f"unknown sign symbol: {symbol!r}") from None

    @classmethod
    def from_int(cls, value: int) -> Sign:
        """Map an integer sign (+1, -1, 0) to its semiring element."""
        if value > 0:
            return cls.PLUS
        if value < 0:
            return cls.MINUS
        return cls.ZERO

    def __add__(self, other: object) -> Sign:  # type: ignore[override]
        if not isinstance(other, Sign):
            return NotImplemented
        return sign_add(self, other)

    def __mul__(self, other: object) -> Sign:  # type: ignore[override]
        if not isinstance(other, Sign):
            return NotImplemented
        return sign_mul(self, other)

    def __str__(self) -> str:
        return self.symbol


_SYMBOLS = {Sign.ZERO: "0", Sign.PLUS: "+", Sign.MINUS: "-", Sign.AMBIGUOUS: "#"}
_FROM_SYMBOL = {symbol: sign for sign, symbol in _SYMBOLS.items()}
_FROM_SYMBOL["−"] = Sign.MINUS


def _build_product_table() -> tuple[tuple[Sign, ...], ...]:
    table = []
    for a in range(4):
        row = []
        for b in range(4):
            mask = 0
            for x in (Sign.PLUS, Sign.MINUS):
                for y in (Sign.PLUS, Sign.MINUS):
                    if a & x and b & y:
                        mask |= Sign.PLUS if x == y else Sign.MINUS
            row.append(Sign(mask))
        table.append(tuple(row))
    return tuple(table)


_PRODUCT = _build_product_table()


def sign_add(a: Sign, b: Sign) -> Sign:
    """Combine two parallel walk families."""
    return Sign(a | b)


def sign_mul(a: Sign, b: Sign) -> Sign:
    """Concatenate two walk families."""
    return _PRODUCT[a][b]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SignMatrix:
    """Square matrix over the sign semiring with rows packed into bitplanes.

    Bit ``j`` of ``pos[i]`` is set when entry (i, j) has a positive witness;
    ``neg[i]`` likewise for negative witnesses. Indices are 0-based.
    """

    order: int
    pos: tuple[int, ...]
    neg: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("matrix order must be positive")
        if len(self.pos) != self.order or len(self.neg) != self.order:
            raise ValueError("bitplane length does not match matrix order")

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[Sign | str]]) -> SignMatrix:
        """Build a matrix from rows of Sign values or symbols."""
        order = len(rows)
        pos: list[int] = []
        neg: list[int] = []
        for row in rows:
            if len(row) != order:
                raise ValueError("sign matrix must be square")
            p = q = 0
            for j, entry in enumerate(row):
                sign = Sign.from_symbol(entry) if isinstance(entry, str) else Sign(entry)
                if sign & Sign.PLUS:
                    p |= 1 << j
                if sign & Sign.MINUS:
                    q |= 1 << j
            pos.append(p)
            neg.append(q)
        return cls(order, tuple(pos), tuple(neg))

    @classmethod
    def identity(cls, order: int) -> SignMatrix:
        return cls(order, tuple(1 << i for i in range(order)), (0,) * order)

    @classmethod
    def filled(cls, order: int, sign: Sign) -> SignMatrix:
        full = (1 << order) - 1
        p = full if sign & Sign.PLUS else 0
        q = full if sign & Sign.MINUS else 0
        return cls(order, (p,) * order, (q,) * order)

    @property
    def full_row(self) -> int:
        return (1 << self.order) - 1

    def entry(self, i: int, j: int) -> Sign:
        bit = 1 << j
        return Sign((1 if self.pos[i] & bit else 0) | (2 if self.neg[i] & bit else 0))

    def entries(self) -> list[list[Sign]]:
        return [[self.entry(i, j) for j in range(self.order)] for i in range(self.order)]

    def support_rows(self) -> tuple[int, ...]:
        """Boolean shadow: bit j of row i is set iff entry (i, j) is nonzero."""
        return tuple(p | q for p, q in zip(self.pos, self.neg))

    def ambiguous_rows(self) -> tuple[int, ...]:
        return tuple(p & q for p, q in zip(self.pos, self.neg))

    def is_all_ambiguous(self) -> bool:
        full = self.full_row
        return all(p == full and q == full for p, q in zip(self.pos, self.neg))

    def has_ambiguous(self) -> bool:
        return any(p & q for p, q in zip(self.pos, self.neg))

    def is_nonzero_everywhere(self) -> bool:
        full = self.full_row
        return all(p | q == full for p, q in zip(self.pos, self.neg))

    def to_symbols(self) -> list[list[str]]:
        return [[sign.symbol for sign in row] for row in self.entries()]

    def __str__(self) -> str:
        return "\n".join(" ".join(row) for row in self.to_symbols())


def mat_mul(a: SignMatrix, b: SignMatrix) -> SignMatrix:
    """Semiring product: entry (i, j) is the sum over k of a(i, k) * b(k, j)."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    pos_rows: list[int] = []
    neg_rows: list[int] = []
    for ap, an in zip(a.pos, a.neg):
        p = q = 0
        for k in iter_bits(ap | an):
            bit = 1 << k
            if ap & bit:
                p |= b.pos[k]
                q |= b.neg[k]
            if an & bit:
                p |= b.neg[k]
                q |= b.pos[k]
        pos_rows.append(p)
        neg_rows.append(q)
    return SignMatrix(a.order, tuple(pos_rows), tuple(neg_rows))


def power_stream(a: SignMatrix, cap: int) -> Iterator[SignMatrix]:
    """Yield a^1, a^2, ..., a^cap lazily."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    current = a
    yield current
    for _ in range(cap - 1):
        current = mat_mul(current, a)
        yield current


def boolean_mul(a_rows: Sequence[int], b_rows: Sequence[int]) -> tuple[int, ...]:
    """Boolean matrix product on bitset rows."""
    result = []
    for row in a_rows:
        acc = 0
        for k in iter_bits(row):
            acc |= b_rows[k]
        result.append(acc)
    return tuple(result)
