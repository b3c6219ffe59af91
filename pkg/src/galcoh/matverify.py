"""Exact verification of the SU(2,2)/SU(4) story over the Gaussian
rationals: Hermitian forms, semilinear structures, cocycle twisting, the
transporter set, and the signature obstruction to real points.

All arithmetic is over Q(i) with fractions.Fraction components.  No
floating point anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NotACocycleForStructure,
    NotSL,
    NotSymmetric,
    Singular,
)


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def to_json(self):
        return {"re": str(self.re), "im": str(self.im)}

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{'+' if self.im > 0 else ''}{self.im}i"


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


ZERO = gr(0)
ONE = gr(1)
I_UNIT = gr(0, 1)


def gr_from_json(obj, path="value"):
    from .errors import SchemaError

    if not isinstance(obj, dict) or set(obj) - {"re", "im"}:
        raise SchemaError(path, "expected an object with fields re and im")
    try:
        return GaussianRational(
            Fraction(str(obj.get("re", "0"))), Fraction(str(obj.get("im", "0")))
        )
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(path, f"not a rational: {e}")


# matrices are tuples of tuples of GaussianRational


def matrix(rows):
    return tuple(tuple(x for x in row) for row in rows)


def identity(n):
    return matrix(
        [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    )


def diagonal(entries):
    n = len(entries)
    return matrix(
        [[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)]
    )


def i22(n=4):
    """diag(1, ..., 1, -1, ..., -1) with equal blocks."""
    if n % 2:
        raise ValueError("split signature form needs even dimension")
    return diagonal([ONE] * (n // 2) + [-ONE] * (n // 2))


def mmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = ZERO
            for k in range(m):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def conj_transpose(A):
    return tuple(
        tuple(A[i][j].conj() for i in range(len(A))) for j in range(len(A[0]))
    )


def mat_eq(A, B):
    if len(A) != len(B):
        return False
    return all(
        len(ra) == len(rb) and all((a - b).is_zero() for a, b in zip(ra, rb))
        for ra, rb in zip(A, B)
    )


def determinant(A):
    """Exact determinant by fraction-free-enough Gaussian elimination over
    Q(i)."""
    n = len(A)
    M = [list(row) for row in A]
    det = ONE
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det = det * M[c][c]
        inv = ONE / M[c][c]
        for r in range(c + 1, n):
            if M[r][c]:
                f = M[r][c] * inv
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def inverse(A):
    n = len(A)
    M = [list(row) + list(identity(n)[i]) for i, row in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            raise Singular()
        M[c], M[piv] = M[piv], M[c]
        inv = ONE / M[c][c]
        M[c] = [inv * a for a in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return matrix([row[n:] for row in M])


@dataclass(frozen=True)
class HermitianForm:
    J: tuple  # matrix

    def __post_init__(self):
        if not mat_eq(self.J, conj_transpose(self.J)):
            raise NotSymmetric("form matrix is not Hermitian")
        if determinant(self.J).is_zero():
            raise Singular()

    @property
    def n(self):
        return len(self.J)


@dataclass(frozen=True)
class SemilinearStructure:
    """The antiholomorphic involution g -> J * (conj(g)^t)^-1 * J^-1.

    Its fixed points among determinant-1 matrices are exactly the J-unitary
    ones.
    """

    form: HermitianForm

    def __call__(self, g):
        J = self.form.J
        return mmul(mmul(J, inverse(conj_transpose(g))), inverse(J))


def unitary_check(g, J) -> bool:
    """Exact test of g * J * conj(g)^t = J, after requiring det(g) = 1."""
    if isinstance(J, HermitianForm):
        J = J.J
    d = determinant(g)
    if not (d - ONE).is_zero():
        raise NotSL(f"determinant is {d}, not 1")
    return mat_eq(mmul(mmul(g, J), conj_transpose(g)), J)


def apply_structure(S: SemilinearStructure, g):
    return S(g)


@dataclass(frozen=True)
class TwistedStructure:
    """g -> ctilde * S(g) * ctilde^-1, the structure twisted by a matrix
    1-cocycle for the order-2 Galois group."""

    base: SemilinearStructure
    ctilde: tuple

    def __post_init__(self):
        n = self.base.form.n
        prod = mmul(self.ctilde, self.base(self.ctilde))
        if not mat_eq(prod, identity(n)):
            raise NotACocycleForStructure(
                "ctilde * S(ctilde) is not the identity"
            )

    def __call__(self, g):
        return mmul(mmul(self.ctilde, self.base(g)), inverse(self.ctilde))


def twist_structure(S: SemilinearStructure, ctilde) -> TwistedStructure:
    return TwistedStructure(S, matrix(ctilde))


def transporter(g):
    """g * conj(g)^t, the quantity the transporter set pins to the split
    form."""
    return mmul(g, conj_transpose(g))


def transporter_check(g, target=None) -> bool:
    """Exact test g * conj(g)^t = target (split form by default), after
    requiring det(g) = 1."""
    d = determinant(g)
    if not (d - ONE).is_zero():
        raise NotSL(f"determinant is {d}, not 1")
    if target is None:
        target = i22(len(g))
    elif isinstance(target, HermitianForm):
        target = target.J
    return mat_eq(transporter(g), target)


def signature(A):
    """(positives, negatives, zeros) of a symmetric rational matrix, by
    exact symmetric elimination (Sylvester's law)."""
    n = len(A)
    for i in range(n):
        for j in range(n):
            if A[i][j].im != 0:
                raise NotSymmetric("matrix has nonreal entries")
            if A[i][j].re != A[j][i].re:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    M = [[A[i][j].re for j in range(n)] for i in range(n)]
    pos = neg = zero = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if M[i][i] != 0), None)
        if piv is None:
            # all remaining diagonal entries vanish; a nonzero off-diagonal
            # entry can be pulled onto the diagonal by a symmetric add
            od = next(
                (
                    (i, j)
                    for i in range(k, n)
                    for j in range(i + 1, n)
                    if M[i][j] != 0
                ),
                None,
            )
            if od is None:
                zero += n - k
                break
            i, j = od
            for c in range(n):
                M[i][c] += M[j][c]
            for r in range(n):
                M[r][i] += M[r][j]
            piv = i
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            for r in range(n):
                M[r][k], M[r][piv] = M[r][piv], M[r][k]
        d = M[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in range(k + 1, n):
            if M[r][k] != 0:
                f = Fraction(M[r][k], 1) / d
                for c in range(n):
                    M[r][c] -= f * M[k][c]
                for c in range(n):
                    M[c][r] -= f * M[c][k]
        k += 1
    return (pos, neg, zero)


# --- seeded samplers -------------------------------------------------------


def _random_fraction(rng: random.Random, height):
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_matrix(rng: random.Random, n, height=3):
    return matrix(
        [
            [
                GaussianRational(
                    _random_fraction(rng, height), _random_fraction(rng, height)
                )
                for _ in range(n)
            ]
            for _ in range(n)
        ]
    )


def random_invertible(rng: random.Random, n, height=3):
    while True:
        g = random_matrix(rng, n, height)
        if not determinant(g).is_zero():
            return g


def random_real_invertible(rng: random.Random, n, height=3):
    while True:
        g = matrix(
            [
                [
                    GaussianRational(_random_fraction(rng, height), Fraction(0))
                    for _ in range(n)
                ]
                for _ in range(n)
            ]
        )
        if not determinant(g).is_zero():
            return g


def random_special_unitary(rng: random.Random, J, height=2):
    """A random element of SU(J) over Q(i) for a real diagonal form J:
    Cayley transform of a J-anti-selfadjoint matrix, then a diagonal
    determinant fix.
    """
    if isinstance(J, HermitianForm):
        J = J.J
    n = len(J)
    for i in range(n):
        for j in range(n):
            if i != j and J[i][j]:
                raise ValueError("sampler needs a diagonal form")
        if J[i][i].im != 0:
            raise ValueError("sampler needs a real form")
    Jinv = inverse(J)
    I = identity(n)
    while True:
        Y = random_matrix(rng, n, height)
        # X = Y - J * conj(Y)^t * J^-1 satisfies J*conj(X)^t*J^-1 = -X
        corr = mmul(mmul(J, conj_transpose(Y)), Jinv)
        X = matrix(
            [[Y[i][j] - corr[i][j] for j in range(n)] for i in range(n)]
        )
        IplusX = matrix(
            [[I[i][j] + X[i][j] for j in range(n)] for i in range(n)]
        )
        if determinant(IplusX).is_zero():
            continue
        IminusX = matrix(
            [[I[i][j] - X[i][j] for j in range(n)] for i in range(n)]
        )
        g0 = mmul(IminusX, inverse(IplusX))
        d = determinant(g0)
        fix = diagonal([d.conj()] + [ONE] * (n - 1))
        g = mmul(fix, g0)
        if not unitary_check(g, J):
            raise AssertionError("Cayley sample failed the unitary identity")
        return g


# --- the worked example ----------------------------------------------------


def verify_example(seed=0, samples=100):
    """Run every identity of the split-form example exactly on `samples`
    seeded random matrices.  Returns a list of check reports; every check
    uses exact equality (zero tolerance)."""
    rng = random.Random(seed)
    n = 4
    J22 = HermitianForm(i22(n))
    J4 = HermitianForm(identity(n))
    S22 = SemilinearStructure(J22)
    S4 = SemilinearStructure(J4)
    ctilde = i22(n)
    checks = []

    def record(name, ok, detail=""):
        checks.append({"check": name, "passed": bool(ok), "detail": detail})

    record(
        "cocycle_condition",
        mat_eq(mmul(ctilde, S22(ctilde)), identity(n)),
        "ctilde * S(ctilde) = identity for ctilde the split form",
    )
    twisted = twist_structure(S22, ctilde)

    record("signature_definite_form", signature(J4.J) == (4, 0, 0))
    record("signature_split_form", signature(J22.J) == (2, 2, 0))

    ok_twist = ok_inv = ok_fix = ok_equiv = ok_closure = ok_sig = True
    ok_transporter_diag = True
    for _ in range(samples):
        g = random_invertible(rng, n)
        # the twist by the split form carries one structure to the other
        ok_twist = ok_twist and mat_eq(twisted(g), S4(g))
        # both structures are involutions
        ok_inv = ok_inv and mat_eq(S22(S22(g)), g) and mat_eq(S4(S4(g)), g)

        h1 = random_special_unitary(rng, J22)
        h2 = random_special_unitary(rng, J4)
        # fixed points of each structure are its unitary group
        ok_fix = (
            ok_fix
            and mat_eq(S22(h1), h1)
            and mat_eq(S4(h2), h2)
            and (mat_eq(S22(h2), h2) == unitary_check(h2, J22))
        )
        # mu(g) = ctilde * S(g) intertwines left translation with the
        # twisted structure
        ok_equiv = ok_equiv and mat_eq(
            mmul(ctilde, S22(mmul(h1, g))),
            mmul(twisted(h1), mmul(ctilde, S22(g))),
        )
        # transporter transform rule: T(h1 g h2^-1) = h1 T(g) conj(h1)^t,
        # so the transporter set is stable under the two-sided action
        ok_closure = ok_closure and mat_eq(
            transporter(mmul(mmul(h1, g), inverse(h2))),
            mmul(mmul(h1, transporter(g)), conj_transpose(h1)),
        )
        # real matrices never land in the transporter set: the signature
        # of g * g^t is definite, never split
        r = random_real_invertible(rng, n)
        ok_sig = ok_sig and signature(transporter(r)) == (4, 0, 0)
        # and the diagonal of g * conj(g)^t is positive for any g, so the
        # exact test against the split form fails outright
        T = transporter(g)
        ok_transporter_diag = ok_transporter_diag and all(
            T[i][i].im == 0 and T[i][i].re > 0 for i in range(n)
        )

    record(
        "twisted_structure_is_definite_structure",
        ok_twist,
        f"ctilde * S_split(g) * ctilde^-1 = (conj(g)^t)^-1 on {samples} samples",
    )
    record("structures_are_involutions", ok_inv)
    record(
        "fixed_points_are_unitary_groups",
        ok_fix,
        "checked on Cayley-sampled special unitary elements",
    )
    record(
        "equivariance_of_transporter_map",
        ok_equiv,
        "mu(h g) = twisted(h) * mu(g) with mu(g) = ctilde * S(g)",
    )
    record(
        "transporter_two_sided_stability",
        ok_closure,
        "T(h1 g h2^-1) = h1 T(g) conj(h1)^t",
    )
    record(
        "no_real_points_signature_obstruction",
        ok_sig,
        f"signature(g g^t) = (4,0,0) for {samples} random real invertible g",
    )
    record(
        "transporter_diagonal_positivity",
        ok_transporter_diag,
        "diag of g conj(g)^t is real positive, so no rational point "
        "matches the split form",
    )
    return checks
