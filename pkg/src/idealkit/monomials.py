"""Monomials and monomial ideals with exact integer exponents.

Everything here is an immutable value: operations return new objects, so
instances are safe to share and to use as dict keys.  A ``MonomialIdeal``
is kept in canonical form at all times -- its generator tuple is the unique
minimal antichain under divisibility, sorted in descending graded-lex order
-- so ``==`` decides mathematical equality of ideals.

The zero ideal (no generators) and the unit ideal (generated by 1) are
distinct values, and ``I**0`` is the unit ideal by convention.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError, ResourceCapError, RingMismatchError

DEFAULT_EXPONENT_CAP = 10**6

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Ring:
    """A polynomial ring described by its ordered tuple of variable names.

    ``max_exponent`` guards against runaway exponent growth (repeated
    squaring of ideals, Frobenius powers); it does not participate in
    equality so rings with different caps still interoperate.
    """

    variables: tuple[str, ...]
    max_exponent: int = field(default=DEFAULT_EXPONENT_CAP, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        for name in self.variables:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"bad variable name {name!r}")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if self.max_exponent < 1:
            raise ValueError("max_exponent must be positive")

    @property
    def n(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def one(self):
        return Monomial(self, (0,) * self.n)

    def variable(self, name):
        exps = [0] * self.n
        exps[self.index(name)] = 1
        return Monomial(self, tuple(exps))

    def monomial(self, text):
        return parse_monomial(self, text)

    def ideal(self, text):
        return parse_ideal(self, text)

    def __str__(self):
        return "ring " + ",".join(self.variables)


@dataclass(frozen=True)
class Monomial:
    """A monomial x^a, stored as the exponent vector a."""

    ring: Ring
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if len(self.exponents) != self.ring.n:
            raise ValueError("exponent vector length does not match the ring")
        cap = self.ring.max_exponent
        for e in self.exponents:
            if e < 0:
                raise ValueError("negative exponent")
            if e > cap:
                raise ResourceCapError(f"exponent {e} exceeds cap {cap}")

    @property
    def degree(self):
        return sum(self.exponents)

    @property
    def support(self):
        return frozenset(i for i, e in enumerate(self.exponents) if e > 0)

    @property
    def is_one(self):
        return not any(self.exponents)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("monomials from different rings")

    def divides(self, other):
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other):
        self._check(other)
        return Monomial(
            self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def __truediv__(self, other):
        """Exact quotient; raises ValueError when other does not divide self."""
        self._check(other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(
            self.ring, tuple(a - b for a, b in zip(self.exponents, other.exponents))
        )

    def lcm(self, other):
        self._check(other)
        return Monomial(
            self.ring, tuple(max(a, b) for a, b in zip(self.exponents, other.exponents))
        )

    def gcd(self, other):
        self._check(other)
        return Monomial(
            self.ring, tuple(min(a, b) for a, b in zip(self.exponents, other.exponents))
        )

    def squarefree_part(self):
        return Monomial(self.ring, tuple(min(e, 1) for e in self.exponents))

    def __str__(self):
        if self.is_one:
            return "1"
        parts = []
        for name, e in zip(self.ring.variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self):
        return f"Monomial({self})"


def _divides_row(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _minimal_rows(rows):
    """Divisibility-minimal antichain of exponent tuples, as a list.

    Processing in ascending (degree, tuple) order means any divisor of a
    candidate was already seen, so one pass against the kept list suffices.
    """
    kept = []
    for r in sorted(set(rows), key=lambda t: (sum(t), t)):
        if not any(_divides_row(k, r) for k in kept):
            kept.append(r)
    return kept


def _canonical_rows(rows):
    # descending graded-lex: highest degree first, then lex-largest exponents
    return tuple(sorted(rows, key=lambda t: (sum(t), t), reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, canonically presented by its minimal generators.

    Build instances with :meth:`from_generators`; the raw constructor
    assumes ``generators`` is already the canonical antichain.
    """

    ring: Ring
    generators: tuple[Monomial, ...]

    @classmethod
    def from_generators(cls, ring, generators):
        gens = list(generators)
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator from a different ring")
        rows = _minimal_rows([g.exponents for g in gens])
        return cls(ring, tuple(Monomial(ring, r) for r in _canonical_rows(rows)))

    @classmethod
    def zero(cls, ring):
        return cls(ring, ())

    @classmethod
    def unit(cls, ring):
        return cls(ring, (ring.one(),))

    @property
    def is_zero(self):
        return not self.generators

    @property
    def is_unit(self):
        return len(self.generators) == 1 and self.generators[0].is_one

    @property
    def is_proper(self):
        return not self.is_unit

    @property
    def is_squarefree(self):
        return all(e <= 1 for g in self.generators for e in g.exponents)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("ideals from different rings")

    def _rows(self):
        return [g.exponents for g in self.generators]

    def contains(self, m):
        if m.ring != self.ring:
            raise RingMismatchError("monomial from a different ring")
        me = m.exponents
        return any(_divides_row(g.exponents, me) for g in self.generators)

    def __contains__(self, m):
        return self.contains(m)

    def contains_ideal(self, other):
        """True when every generator of other lies in self."""
        self._check(other)
        return all(self.contains(g) for g in other.generators)

    def __mul__(self, other):
        self._check(other)
        cap = self.ring.max_exponent
        rows = set()
        for a in self._rows():
            for b in other._rows():
                s = tuple(x + y for x, y in zip(a, b))
                if any(e > cap for e in s):
                    raise ResourceCapError(f"exponent exceeds cap {cap} in product")
                rows.add(s)
        return _ideal_from_rows(self.ring, rows)

    def power(self, k):
        """I^k by repeated squaring, minimalizing after every product."""
        if k < 0:
            raise ValueError("negative power of an ideal")
        result = MonomialIdeal.unit(self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __pow__(self, k):
        return self.power(k)

    def intersect(self, other):
        self._check(other)
        rows = set()
        for a in self._rows():
            for b in other._rows():
                rows.add(tuple(max(x, y) for x, y in zip(a, b)))
        return _ideal_from_rows(self.ring, rows)

    def __and__(self, other):
        return self.intersect(other)

    def colon(self, m):
        """(I : m), generated by g / gcd(g, m) over the generators g."""
        if m.ring != self.ring:
            raise RingMismatchError("monomial from a different ring")
        me = m.exponents
        rows = {
            tuple(max(a - b, 0) for a, b in zip(g.exponents, me))
            for g in self.generators
        }
        return _ideal_from_rows(self.ring, rows)

    def radical(self):
        """Radical: generated by the squarefree parts of the generators."""
        rows = {tuple(min(e, 1) for e in g.exponents) for g in self.generators}
        return _ideal_from_rows(self.ring, rows)

    def minor(self, zeros=(), ones=()):
        """Substitute 0 for ``zeros`` and 1 for ``ones``, over the smaller ring.

        Generators meeting a zero variable are deleted; the remaining ones are
        projected to the surviving variables.  At least one variable must
        survive.
        """
        zset = {self.ring.index(v) for v in zeros}
        oset = {self.ring.index(v) for v in ones}
        if zset & oset:
            raise ValueError("zeros and ones overlap")
        keep = [i for i in range(self.ring.n) if i not in zset and i not in oset]
        if not keep:
            raise ValueError("minor would eliminate every variable")
        sub = Ring(
            tuple(self.ring.variables[i] for i in keep),
            max_exponent=self.ring.max_exponent,
        )
        rows = set()
        for g in self.generators:
            e = g.exponents
            if any(e[i] > 0 for i in zset):
                continue
            rows.add(tuple(e[i] for i in keep))
        return _ideal_from_rows(sub, rows)

    def __str__(self):
        if self.is_zero:
            return "0"
        return ", ".join(str(g) for g in self.generators)

    def __repr__(self):
        return f"MonomialIdeal({self})"


def _ideal_from_rows(ring, rows):
    minimal = _minimal_rows(rows)
    return MonomialIdeal(
        ring, tuple(Monomial(ring, r) for r in _canonical_rows(minimal))
    )


def parse_ring(text):
    """Parse ``ring x,y,z`` (the header keyword is optional)."""
    body = text.strip()
    if body.startswith("ring"):
        rest = body[4:]
        if rest and not rest[0].isspace():
            raise ParseError("expected whitespace after 'ring'", column=5)
        body = rest.strip()
    if not body:
        raise ParseError("empty ring description")
    names = [part.strip() for part in body.split(",")]
    for name in names:
        if not _NAME_RE.fullmatch(name):
            raise ParseError(f"bad variable name {name!r}")
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names")
    return Ring(tuple(names))


def parse_monomial(ring, text, offset=0):
    """Parse ``x^2*y`` style monomials; ``1`` is the unit monomial.

    ``offset`` shifts reported column numbers when the text is a slice of a
    larger input.
    """
    s = text
    i = 0
    n = len(s)

    def skip_ws():
        nonlocal i
        while i < n and s[i].isspace():
            i += 1

    def fail(msg, at):
        raise ParseError(msg, column=offset + at + 1)

    skip_ws()
    if i >= n:
        fail("empty monomial", i)
    if s[i] == "1":
        i += 1
        skip_ws()
        if i < n:
            fail("unexpected text after '1'", i)
        return ring.one()

    exps = [0] * ring.n
    while True:
        skip_ws()
        m = _NAME_RE.match(s, i)
        if not m:
            fail("expected a variable name", i)
        name = m.group(0)
        try:
            idx = ring.index(name)
        except ValueError:
            fail(f"unknown variable {name!r}", i)
        i = m.end()
        e = 1
        skip_ws()
        if i < n and s[i] == "^":
            i += 1
            skip_ws()
            j = i
            while j < n and s[j].isdigit():
                j += 1
            if j == i:
                fail("expected an exponent after '^'", i)
            e = int(s[i:j])
            i = j
        exps[idx] += e
        skip_ws()
        if i >= n:
            break
        if s[i] != "*":
            fail("expected '*' between factors", i)
        i += 1
    return Monomial(ring, tuple(exps))


def parse_ideal(ring, text):
    """Parse a comma-separated generator list; ``0`` denotes the zero ideal."""
    if not text.strip():
        raise ParseError("empty ideal description")
    if text.strip() == "0":
        return MonomialIdeal.zero(ring)
    gens = []
    pos = 0
    for chunk in text.split(","):
        if not chunk.strip():
            raise ParseError("empty generator", column=pos + 1)
        gens.append(parse_monomial(ring, chunk, offset=pos))
        pos += len(chunk) + 1
    return MonomialIdeal.from_generators(ring, gens)
