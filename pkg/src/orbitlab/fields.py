"""Exact scalar fields: the rationals and finite fields F_{p^k}.

Finite-field elements are encoded as integers in ``[0, p**k)`` whose base-p
digits are the coefficients of the residue polynomial (lowest degree first).
The defining modulus for each (p, k) comes from ``data/moduli.json``; those are
Conway polynomials, so the embeddings between fields of the same
characteristic are compatible.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any, Iterator, Sequence

__all__ = [
    "FieldSpec",
    "FieldElement",
    "QQ",
    "GF",
    "embed_extension",
    "is_prime",
    "poly_is_irreducible",
]

_TABLE_LIMIT = 1 << 16  # build log/exp tables up to this order
_ADD_TABLE_LIMIT = 729


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over F_p, coefficient lists lowest degree first -------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return poly_mod(prod, m, p)


def poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, m, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, m, p)
        base = poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    for code in range(p ** degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(code % p)
            code //= p
        yield coeffs + [1]


def poly_is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    f = list(f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for g in _monic_polys(p, d):
            if not poly_mod(f, g, p):
                return False
    return True


# --- moduli table -------------------------------------------------------------

@lru_cache(maxsize=None)
def _moduli_table() -> dict[tuple[int, int], tuple[int, ...]]:
    raw = json.loads(resources.files("orbitlab").joinpath("data/moduli.json").read_text())
    return {(int(e["p"]), int(e["k"])): tuple(e["modulus"]) for e in raw["moduli"]}


def table_modulus(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    try:
        return _moduli_table()[(p, k)]
    except KeyError:
        raise ValueError(f"no tabulated modulus for p={p}, k={k}") from None


@lru_cache(maxsize=None)
def _checked_irreducible(p: int, modulus: tuple[int, ...]) -> bool:
    return poly_is_irreducible(modulus, p)


# --- field specification ------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """A field: ``kind`` is ``"Q"`` or ``"Fq"``.

    Raw values are ``Fraction`` for Q and ``int`` codes for Fq.  All arithmetic
    helpers operate on raw values so matrix code can avoid wrapper objects.
    """

    kind: str
    p: int = 0
    k: int = 1
    modulus: tuple[int, ...] = ()
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind == "Q":
            return
        if self.kind != "Fq":
            raise ValueError(f"unknown field kind {self.kind!r}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        if not self.modulus:
            object.__setattr__(self, "modulus", table_modulus(self.p, self.k))
        mod = tuple(int(c) % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) != self.k + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _checked_irreducible(self.p, mod):
            raise ValueError(f"modulus {mod} is reducible over F_{self.p}")

    # identity ---------------------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.kind == "Q"

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    @property
    def order(self) -> int | None:
        return None if self.kind == "Q" else self.p ** self.k

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "Fq" and self.k == 1

    def __repr__(self) -> str:
        if self.kind == "Q":
            return "QQ"
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (FieldSpec, (self.kind, self.p, self.k, self.modulus))

    # constants --------------------------------------------------------------
    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def from_int(self, n: int):
        if self.kind == "Q":
            return Fraction(n)
        return n % self.p

    def __call__(self, value) -> "FieldElement":
        """Element from an int (read mod p), Fraction, string or coefficient list."""
        return FieldElement(self, self.convert(value))

    def element(self, raw) -> "FieldElement":
        """Wrap an already-encoded raw value."""
        return FieldElement(self, raw)

    def convert(self, value):
        """Coerce ints, Fractions, strings, coefficient lists or FieldElements."""
        if isinstance(value, FieldElement):
            if value.spec == self:
                return value.value
            return embed_extension(value, self).value
        if self.kind == "Q":
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            if isinstance(value, str):
                return Fraction(value.strip())
            raise TypeError(f"cannot convert {value!r} to a rational")
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            s = value.strip()
            if s.startswith("["):
                return self.from_coeffs(json.loads(s))
            return int(s) % self.p
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        raise TypeError(f"cannot convert {value!r} to an element of {self!r}")

    # Fq encoding --------------------------------------------------------------
    def to_coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.k:
            c = poly_mod(c, self.modulus, self.p)
        code = 0
        for x in reversed(c):
            code = code * self.p + x
        return code

    @property
    def generator(self):
        """The class of x: a primitive element for tabulated (Conway) moduli."""
        if self.kind == "Q":
            raise ValueError("QQ has no generator")
        if self.k == 1:
            return self._tables()["gen"]
        return self.p

    def _tables(self) -> dict:
        t = self._cache.get("tables")
        if t is not None:
            return t
        q, p = self.p ** self.k, self.p
        t = {"log": None, "exp": None, "add": None, "gen": None}
        if q <= _TABLE_LIMIT:
            # find a primitive element and build log/exp tables
            for g in range(2 if q > 2 else 1, q):
                exp = [0] * (q - 1)
                x = 1
                ok = True
                for i in range(q - 1):
                    exp[i] = x
                    x = self._slow_mul(x, g)
                    if x == 1 and i < q - 2:
                        ok = False
                        break
                if ok:
                    break
            log = [0] * q
            for i, v in enumerate(exp):
                log[v] = i
            t["exp"], t["log"], t["gen"] = exp + exp, log, g
        if self.k > 1 and p > 2 and q <= _ADD_TABLE_LIMIT:
            t["add"] = [[self._slow_add(a, b) for b in range(q)] for a in range(q)]
        self._cache["tables"] = t
        return t

    def _slow_add(self, a: int, b: int) -> int:
        p, out, place = self.p, 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def _slow_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        return self.from_coeffs(poly_mulmod(self.to_coeffs(a), self.to_coeffs(b), self.modulus, self.p))

    # raw arithmetic -------------------------------------------------------------
    def add(self, a, b):
        if self.kind == "Q":
            return a + b
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        t = self._tables()["add"]
        if t is not None:
            return t[a][b]
        return self._slow_add(a, b)

    def neg(self, a):
        if self.kind == "Q":
            return -a
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p, out, place = self.p, 0, 1
        while a:
            out += (-(a % p) % p) * place
            a //= p
            place *= p
        return out

    def sub(self, a, b):
        if self.kind == "Q":
            return a - b
        if self.k == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.kind == "Q":
            return a * b
        if self.k == 1:
            return a * b % self.p
        if not a or not b:
            return 0
        t = self._tables()
        if t["log"] is not None:
            return t["exp"][t["log"][a] + t["log"][b]]
        return self._slow_mul(a, b)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        if self.kind == "Q":
            return 1 / a
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        t = self._tables()
        if t["log"] is not None:
            q1 = self.p ** self.k - 1
            return t["exp"][(q1 - t["log"][a]) % q1]
        return self.pow(a, self.p ** self.k - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius(self, a):
        return a if self.kind == "Q" else self.pow(a, self.p)

    # enumeration / sampling ------------------------------------------------------
    def elements(self) -> Iterator:
        if self.kind == "Q":
            raise ValueError("QQ is infinite")
        return iter(range(self.p ** self.k))

    def random(self, rng: random.Random, height: int = 5):
        if self.kind == "Q":
            num = rng.randint(-height, height)
            den = rng.randint(1, max(1, height // 2))
            return Fraction(num, den)
        return rng.randrange(self.p ** self.k)

    def random_nonzero(self, rng: random.Random, height: int = 5):
        while True:
            a = self.random(rng, height)
            if a:
                return a

    # serialization -----------------------------------------------------------------
    def format(self, a) -> str:
        if self.kind == "Q":
            return str(a)
        if self.k == 1:
            return str(a)
        return json.dumps(self.to_coeffs(a), separators=(",", ":"))

    def to_json(self) -> dict[str, Any]:
        if self.kind == "Q":
            return {"kind": "Q"}
        d = {"kind": "Fq", "p": self.p, "k": self.k}
        try:
            default = table_modulus(self.p, self.k)
        except ValueError:
            default = None
        if self.k > 1 and tuple(self.modulus) != default:
            d["modulus"] = list(self.modulus)
        return d

    @staticmethod
    def from_json(d: dict[str, Any]) -> "FieldSpec":
        if d["kind"] == "Q":
            return QQ
        if d.get("modulus"):
            return FieldSpec("Fq", int(d["p"]), int(d.get("k", 1)), tuple(int(c) for c in d["modulus"]))
        return GF(int(d["p"]), int(d.get("k", 1)))


QQ = FieldSpec("Q")


@lru_cache(maxsize=None)
def GF(p: int, k: int = 1) -> FieldSpec:
    return FieldSpec("Fq", p, k)


class FieldElement:
    """A field value bundled with its field; supports the usual operators."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        self.spec = spec
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError(f"field mismatch: {self.spec!r} vs {other.spec!r}")
            return other.value
        return self.spec.convert(other)

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self.value, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self._coerce(other), self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        try:
            return self.value == self.spec.convert(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.spec.kind, self.spec.p, self.spec.k, self.value))

    def multiplicative_order(self) -> int:
        if not self.value:
            raise ValueError("zero has no multiplicative order")
        x, n = self.value, 1
        while x != self.spec.one:
            x = self.spec.mul(x, self.value)
            n += 1
            if self.spec.kind == "Q" and n > 2:
                return 0  # infinite order
        return n

    def __repr__(self):
        return f"{self.spec!r}({self.spec.format(self.value)})"

    def __str__(self):
        return self.spec.format(self.value)


def embed_extension(e: FieldElement, target: FieldSpec) -> FieldElement:
    """Image of ``e`` under the canonical embedding F_{p^k} -> F_{p^k'}.

    The generator of the source goes to ``g**((p^k' - 1)/(p^k - 1))`` where g is
    the generator of the target; with Conway moduli this is the compatible
    choice, and it maps prime-field elements to themselves.
    """
    src = e.spec
    if src == target:
        return e
    if src.kind == "Q" or target.kind == "Q":
        raise ValueError(f"cannot embed {src!r} into {target!r}")
    if src.p != target.p or target.k % src.k != 0:
        raise ValueError(f"{target!r} does not extend {src!r}")
    if src.k == 1:
        return FieldElement(target, target.from_int(e.value))
    image_gen = target.pow(target.generator, (target.order - 1) // (src.order - 1))
    acc, power = target.zero, target.one
    for c in src.to_coeffs(e.value):
        if c:
            acc = target.add(acc, target.mul(target.from_int(c), power))
        power = target.mul(power, image_gen)
    return FieldElement(target, acc)
