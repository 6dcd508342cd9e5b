"""Exact arithmetic in GF(p^m).

Field elements are plain integers in [0, q): the base-p digits of an element
are the coefficients of its residue polynomial, so 0 is the additive identity,
1 the multiplicative identity, and matrices serialize as integer grids.
Multiplication and inversion go through log/antilog tables (q <= 2^16).
"""

from __future__ import annotations

import functools

import numpy as np

# Largest field order for which dense q x q operation tables are built.
# These back the jitted kernels; everything else uses the log/antilog path.
TABLE_MAX = 1024

_ORDER_MAX = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Dense polynomial arithmetic over GF(p), ascending coefficient lists.
# Only used at field-construction time (irreducibility tests, table builds).
# ---------------------------------------------------------------------------

def _poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _poly_trim(out)


def _poly_mod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    ginv = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        c = (f[-1] * ginv) % p
        for i, b in enumerate(g):
            f[i + shift] = (f[i + shift] - c * b) % p
        _poly_trim(f)
    return f


def _poly_powmod(f, e, mod, p):
    result = [1]
    base = _poly_mod(list(f), mod, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), mod, p)
        base = _poly_mod(_poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _poly_gcd(f, g, p):
    f, g = list(f), list(g)
    while g:
        f, g = g, _poly_mod(f, g, p)
    return f


def is_irreducible(coeffs, p: int) -> bool:
    """Rabin test for a monic polynomial over GF(p), ascending coefficients."""
    f = _poly_trim(list(coeffs))
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    # h_j = x^(p^j) mod f, built incrementally.
    h = list(x)
    powers = {}
    for j in range(1, m + 1):
        h = _poly_powmod(h, p, f, p)
        powers[j] = list(h)
    if _poly_trim([(a - b) % p for a, b in
                   zip(powers[m] + [0] * 2, x + [0] * len(powers[m]))]):
        return False
    for t in _prime_factors(m):
        j = m // t
        diff = list(powers[j])
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(f, _poly_trim(diff), p)
        if len(g) - 1 > 0:
            return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    Candidates are ordered by the base-p integer encoding of their lower
    coefficients, which makes the choice reproducible across runs.
    """
    if m == 1:
        return (0, 1)
    if p ** m > _ORDER_MAX:
        raise ValueError(
            f"no built-in modulus for q = {p}^{m} > 2^16; supply one explicitly")
    for val in range(p ** m):
        coeffs = []
        v = val
        for _ in range(m):
            coeffs.append(v % p)
            v //= p
        coeffs.append(1)
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("unreachable: an irreducible of every degree exists")


class GF:
    """The finite field GF(p^m) with q = p^m elements.

    Instances are immutable after construction and every operation is pure,
    so a field may be shared freely across threads.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = tuple(int(c) for c in modulus)
        self._exp, self._log, self.generator = self._build_log_tables()

    # -- construction helpers ------------------------------------------------

    def _digits(self, rep):
        out = []
        for _ in range(self.m):
            out.append(rep % self.p)
            rep //= self.p
        return out

    def _undigits(self, digits):
        rep = 0
        for c in reversed(digits):
            rep = rep * self.p + c
        return rep

    def _mul_slow(self, a, b):
        prod = _poly_mul(self._digits(a), self._digits(b), self.p)
        red = _poly_mod(prod, list(self.modulus), self.p)
        red += [0] * (self.m - len(red))
        return self._undigits(red)

    def _pow_slow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    def _build_log_tables(self):
        q = self.q
        if q == 2:
            gen = 1
        else:
            factors = _prime_factors(q - 1)
            gen = None
            for cand in range(2, q):
                if all(self._pow_slow(cand, (q - 1) // f) != 1 for f in factors):
                    gen = cand
                    break
            if gen is None:
                raise AssertionError("no generator found; modulus not irreducible?")
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, gen)
        if x != 1:
            raise ValueError("modulus is reducible: multiplicative group broken")
        return exp, log, gen

    # -- scalar operations ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        out, pk = 0, 1
        for _ in range(self.m):
            out += ((a // pk + b // pk) % self.p) * pk
            pk *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        out, pk = 0, 1
        for _ in range(self.m):
            out += ((-(a // pk)) % self.p) * pk
            pk *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 0
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    # -- vectorized operations on integer ndarrays ----------------------------

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pk = 1
        for _ in range(self.m):
            out += ((a // pk + b // pk) % self.p) * pk
            pk *= self.p
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.m == 1:
            return (-a) % self.p
        out = np.zeros(a.shape, dtype=np.int64)
        pk = 1
        for _ in range(self.m):
            out += ((-(a // pk)) % self.p) * pk
            pk *= self.p
        return out

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        mask = (a != 0) & (b != 0)
        prod = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where(mask, prod, 0)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    # -- dense pairwise tables (kernel backing) --------------------------------

    def _require_tables(self):
        if self.q > TABLE_MAX:
            raise ValueError(f"dense op tables unavailable for q = {self.q} > {TABLE_MAX}")

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        self._require_tables()
        r = np.arange(self.q, dtype=np.int64)
        return np.ascontiguousarray(self.vadd(r[:, None], r[None, :]))

    @functools.cached_property
    def mul_table(self) -> np.ndarray:
        self._require_tables()
        r = np.arange(self.q, dtype=np.int64)
        return np.ascontiguousarray(self.vmul(r[:, None], r[None, :]))

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        self._require_tables()
        return np.ascontiguousarray(self.vneg(np.arange(self.q, dtype=np.int64)))

    @functools.cached_property
    def inv_table(self) -> np.ndarray:
        self._require_tables()
        t = np.zeros(self.q, dtype=np.int64)
        t[1:] = self._exp[(-self._log[np.arange(1, self.q)]) % (self.q - 1)]
        return np.ascontiguousarray(t)

    # -- misc ------------------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return (isinstance(other, GF)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.p}^{self.m})"


@functools.lru_cache(maxsize=None)
def _cached_field(p, m, modulus):
    return GF(p, m, modulus)


def build_field(p: int, m: int = 1, modulus=None) -> GF:
    """Construct GF(p^m), validating primality and irreducibility.

    When `modulus` is omitted the deterministic built-in choice
    (lexicographically smallest monic irreducible) is used; that requires
    q <= 2^16.  An explicit modulus is an ascending coefficient list of
    length m+1 that must be monic and irreducible over GF(p).
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p ** m > _ORDER_MAX:
        raise ValueError(f"field order {p}^{m} exceeds the supported 2^16")
    if modulus is None:
        modulus = default_modulus(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
    return _cached_field(p, m, tuple(modulus))


def field_with_order(q: int) -> GF:
    """GF(q) for a prime power q, with the default modulus."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    p = min(_prime_factors(q))
    m = 0
    t = q
    while t % p == 0:
        t //= p
        m += 1
    if t != 1:
        raise ValueError(f"{q} is not a prime power")
    return build_field(p, m)
