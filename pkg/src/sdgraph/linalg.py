"""Exact integer linear algebra for Laplacians.

No floating point: determinants and ranks use fraction-free (Bareiss)
elimination over Z, and characteristic polynomials are computed modulo a
set of word-size primes and lifted by CRT under a proven coefficient bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import SimpleGraph, bits


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        ncols = len(entries[0]) if entries else 0
        if any(len(r) != ncols for r in entries):
            raise ValueError("ragged matrix")
        return cls(len(entries), ncols, entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def minor(self, drop_row: int, drop_col: int) -> "IntMatrix":
        return IntMatrix.from_rows(
            [r[:drop_col] + r[drop_col + 1:] for i, r in enumerate(self.entries) if i != drop_row]
        )

    def shifted(self, lam: int) -> "IntMatrix":
        """M - lam*I."""
        return IntMatrix.from_rows(
            [[x - lam if i == j else x for j, x in enumerate(r)] for i, r in enumerate(self.entries)]
        )

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(min(self.rows, self.cols)))


@dataclass(frozen=True)
class BigPolynomial:
    """Integer polynomial, coefficients in ascending degree, no trailing zeros."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(int(x) for x in c))

    @classmethod
    def from_roots(cls, roots: dict[int, int] | list[tuple[int, int]]) -> "BigPolynomial":
        """Π (x - root)^mult."""
        items = roots.items() if isinstance(roots, dict) else roots
        p = cls((1,))
        for r, k in items:
            for _ in range(k):
                p = p * cls((-r, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __mul__(self, other: "BigPolynomial") -> "BigPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return BigPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return BigPolynomial(tuple(out))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def coefficient(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data: list) -> "BigPolynomial":
        return cls(tuple(int(c) for c in data))


@dataclass(frozen=True)
class SpectrumMultiset:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        merged: dict[int, int] = {}
        for lam, k in self.pairs:
            if k <= 0:
                raise ValueError("multiplicities must be positive")
            merged[lam] = merged.get(lam, 0) + k
        object.__setattr__(self, "pairs", tuple(sorted(merged.items())))

    @classmethod
    def of(cls, mapping: dict[int, int]) -> "SpectrumMultiset":
        return cls(tuple(mapping.items()))

    @property
    def dimension(self) -> int:
        return sum(k for _, k in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def polynomial(self) -> BigPolynomial:
        return BigPolynomial.from_roots(self.pairs)

    def to_json(self) -> list[list[int]]:
        return [[lam, k] for lam, k in self.pairs]


def laplacian(graph: SimpleGraph) -> IntMatrix:
    n = graph.vertex_count
    rows = []
    for v in range(n):
        r = [0] * n
        for u in bits(graph.adjacency[v]):
            r[u] = -1
        r[v] = graph.degrees[v]
        rows.append(r)
    return IntMatrix.from_rows(rows)


def bareiss_determinant(m: IntMatrix) -> int:
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.entries]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def bareiss_rank(m: IntMatrix) -> int:
    a = [list(r) for r in m.entries]
    nr, nc = m.rows, m.cols
    rank, prev = 0, 1
    for col in range(nc):
        if rank == nr:
            break
        piv = next((i for i in range(rank, nr) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        rr = a[rank]
        for i in range(rank + 1, nr):
            ri = a[i]
            f = ri[col]
            for j in range(col + 1, nc):
                ri[j] = (p * ri[j] - f * rr[j]) // prev
            ri[col] = 0
        prev = p
        rank += 1
    return rank


# characteristic polynomial

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _prime(i: int) -> int:
    """i-th prime below 2^31, descending."""
    p = (1 << 31) - 1 if i == 0 else _prime(i - 1) - 2
    while not _is_prime(p):
        p -= 2
    return p


def _charpoly_mod(a: list[list[int]], p: int) -> list[int]:
    """det(xI - A) mod p via Hessenberg reduction; ascending coefficients."""
    n = len(a)
    h = np.array([[x % p for x in row] for row in a], dtype=np.int64)
    for k in range(n - 2):
        piv = next((i for i in range(k + 1, n) if h[i, k] != 0), None)
        if piv is None:
            continue
        if piv != k + 1:
            h[[k + 1, piv], :] = h[[piv, k + 1], :]
            h[:, [k + 1, piv]] = h[:, [piv, k + 1]]
        inv = pow(int(h[k + 1, k]), p - 2, p)
        for i in range(k + 2, n):
            f = int(h[i, k]) * inv % p
            if f:
                # R_i -= f R_{k+1}; C_{k+1} += f C_i keeps the similarity
                h[i, :] = (h[i, :] - f * h[k + 1, :]) % p
                h[:, k + 1] = (h[:, k + 1] + f * h[:, i]) % p
    hh = [[int(x) for x in row] for row in h]
    # polys[k] = char poly of leading k x k block, ascending coefficients
    polys = [[1]]
    for k in range(1, n + 1):
        m = k - 1
        prev = polys[k - 1]
        cur = [0] * (k + 1)
        for i, c in enumerate(prev):
            cur[i + 1] = (cur[i + 1] + c) % p
            cur[i] = (cur[i] - hh[m][m] * c) % p
        t = 1
        for i in range(m - 1, -1, -1):
            t = t * hh[i + 1][i] % p
            if t == 0:
                break
            coef = t * hh[i][m] % p
            if coef:
                for j, c in enumerate(polys[i]):
                    cur[j] = (cur[j] - coef * c) % p
        polys.append(cur)
    return polys[n]


def _coefficient_bound(m: IntMatrix) -> int:
    # |e_k| <= C(n,k) R^k with R a bound on row 2-norms (Hadamard on principal minors)
    r = max((math.isqrt(sum(x * x for x in row)) + 1 for row in m.entries), default=1)
    return (1 + r) ** m.rows


def char_poly(m: IntMatrix) -> BigPolynomial:
    """det(xI - M), exact."""
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    if n == 0:
        return BigPolynomial((1,))
    bound = 2 * _coefficient_bound(m) + 1
    residues, moduli = [], []
    modulus = 1
    i = 0
    while modulus <= bound:
        p = _prime(i)
        residues.append(_charpoly_mod([list(r) for r in m.entries], p))
        moduli.append(p)
        modulus *= p
        i += 1
    coeffs = []
    for j in range(n + 1):
        x = 0
        for r, p in zip(residues, moduli):
            mp = modulus // p
            x += r[j] * mp * pow(mp, -1, p)
        x %= modulus
        if x > modulus // 2:
            x -= modulus
        coeffs.append(x)
    return BigPolynomial(tuple(coeffs))


@dataclass(frozen=True)
class SpectrumCertificate:
    ok: bool
    rank_route: bool
    poly_route: bool
    failing_eigenvalue: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def certify_spectrum(m: IntMatrix, claimed: SpectrumMultiset) -> SpectrumCertificate:
    """Check a claimed integer spectrum of a symmetric matrix two ways.

    Rank route: rank(M - λI) = dim - k for each claimed (λ, k).  Polynomial
    route: Π (x - λ)^k equals the characteristic polynomial.  Both must agree.
    """
    if claimed.dimension != m.rows:
        return SpectrumCertificate(False, False, False, None)
    failing = None
    rank_ok = True
    for lam, k in claimed.pairs:
        if bareiss_rank(m.shifted(lam)) != m.rows - k:
            rank_ok = False
            failing = lam
            break
    poly_ok = claimed.polynomial() == char_poly(m)
    if failing is None and not poly_ok:
        phi = char_poly(m)
        failing = next((lam for lam, _ in claimed.pairs if phi(lam) != 0), claimed.pairs[0][0])
    if rank_ok != poly_ok:
        raise AssertionError("rank and characteristic-polynomial routes disagree")
    return SpectrumCertificate(rank_ok and poly_ok, rank_ok, poly_ok, failing)


def spanning_tree_count(graph: SimpleGraph) -> int:
    """Matrix-Tree theorem: determinant of L with the last row and column deleted."""
    n = graph.vertex_count
    if n <= 1:
        return 1
    lap = laplacian(graph)
    return bareiss_determinant(lap.minor(n - 1, n - 1))


def laplacian_spectrum(graph: SimpleGraph) -> SpectrumMultiset:
    """Integer Laplacian spectrum read off the characteristic polynomial.

    Raises ``ValueError`` when some eigenvalue is not an integer.
    """
    phi = char_poly(laplacian(graph))
    n = graph.vertex_count
    found: dict[int, int] = {}
    rest = phi
    # integer roots of a Laplacian lie in [0, n]
    for lam in range(0, n + 1):
        while rest.degree > 0 and rest(lam) == 0:
            rest = _divide_linear(rest, lam)
            found[lam] = found.get(lam, 0) + 1
    if rest.degree > 0:
        raise ValueError("Laplacian spectrum is not integral")
    return SpectrumMultiset.of(found)


def _divide_linear(p: BigPolynomial, r: int) -> BigPolynomial:
    """p / (x - r), assuming exact."""
    c = p.coefficients
    out = [0] * (len(c) - 1)
    acc = 0
    for i in range(len(c) - 1, 0, -1):
        acc = c[i] + acc * r
        out[i - 1] = acc
    return BigPolynomial(tuple(out))
