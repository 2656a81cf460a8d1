"""Formal connection germs in a framing, and irregular-type extraction.

A germ of pole bound k stores the matrix of one-forms f_ij(z) dz with
f_ij known exactly from order -(k+1) through order N-1.  Gauge elements
are polynomial matrices with invertible constant term; they act by
g M g^{-1} + dg g^{-1}.  Because a gauge element is known exactly (all
coefficients beyond its stored degree vanish), the action loses no
precision: only the germ's own truncation limits the output.

The untwisted test asks the off-diagonal part to vanish strictly below
the residue order; extraction reads the diagonal principal part through
the isomorphism sending z^{-l} to -l z^{-(l+1)} dz and discards the
residue.  The diagonalization routine brings a leading-regular germ with
Gaussian-rational spectrum to untwisted shape one pole order at a time.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    LeadingNotRegular,
    MalformedInput,
    NotSplitOverField,
    OutOfRange,
    PrecisionExhausted,
    ShapeMismatch,
    Twisted,
)
from .irregular import IrregularType
from .linalg import kernel_basis, mat_identity, mat_inverse, mat_mul
from .rootsystems import RootSystem, build_root_system
from .scalars import G_ONE, G_ZERO, GaussianRational, ScalarLike
from .series import LaurentTail, TruncatedSeries

GMatrix = List[List[GaussianRational]]


def gl_cartan_system(r: int) -> RootSystem:
    """Root data of the full diagonal Cartan of gl_r: all e_i - e_j."""
    if r < 1:
        raise MalformedInput("matrix size must be positive")
    if r == 1:
        return RootSystem(1, [])
    return build_root_system("A", r - 1)


def _zero_matrix(r: int) -> GMatrix:
    return [[G_ZERO for _ in range(r)] for _ in range(r)]


class _Lau:
    """Matrix Laurent polynomial with a knowledge bound.

    ``coeffs`` maps orders to r x r matrices; orders at or above ``hi``
    are unknown (``hi`` None means exactly known everywhere).  ``floor``
    is a valuation lower bound used for propagating knowledge through
    products.
    """

    __slots__ = ("r", "coeffs", "hi", "floor")

    def __init__(self, r: int, coeffs: Dict[int, GMatrix], hi: Optional[int], floor: int):
        self.r = r
        self.coeffs = {l: m for l, m in coeffs.items() if any(any(x for x in row) for row in m)}
        self.hi = hi
        self.floor = floor
        for l in self.coeffs:
            if l < floor or (hi is not None and l >= hi):
                raise MalformedInput("Laurent coefficient outside the known window")

    def coefficient(self, order: int) -> GMatrix:
        return self.coeffs.get(order, _zero_matrix(self.r))

    def add(self, other: "_Lau") -> "_Lau":
        hi = _min_hi(self.hi, other.hi)
        out: Dict[int, GMatrix] = {}
        for l in set(self.coeffs) | set(other.coeffs):
            if hi is not None and l >= hi:
                continue
            a, b = self.coefficient(l), other.coefficient(l)
            out[l] = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
        return _Lau(self.r, out, hi, min(self.floor, other.floor))

    def mul(self, other: "_Lau") -> "_Lau":
        hi = _min_hi(
            None if self.hi is None else self.hi + other.floor,
            None if other.hi is None else other.hi + self.floor,
        )
        out: Dict[int, GMatrix] = {}
        for la, ma in self.coeffs.items():
            for lb, mb in other.coeffs.items():
                l = la + lb
                if hi is not None and l >= hi:
                    continue
                prod = mat_mul(ma, mb)
                if l in out:
                    out[l] = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(out[l], prod)]
                else:
                    out[l] = prod
        return _Lau(self.r, out, hi, self.floor + other.floor)

    def derivative(self) -> "_Lau":
        out: Dict[int, GMatrix] = {}
        for l, m in self.coeffs.items():
            if l == 0:
                continue
            factor = GaussianRational.of(l)
            out[l - 1] = [[x * factor for x in row] for row in m]
        hi = None if self.hi is None else self.hi - 1
        floor = self.floor if self.floor == 0 else self.floor - 1
        return _Lau(self.r, out, hi, floor)


def _min_hi(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _series_matrix_inverse(poly: "_Lau", order: int) -> "_Lau":
    """Inverse of an exactly known polynomial matrix, modulo z^order."""
    if poly.floor < 0 or poly.hi is not None:
        raise MalformedInput("series inversion needs an exact non-negative-order input")
    r = poly.r
    const = poly.coefficient(0)
    inv0 = mat_inverse(const, G_ONE, G_ZERO)
    out: Dict[int, GMatrix] = {0: inv0}
    for l in range(1, order):
        acc = _zero_matrix(r)
        for a in range(1, l + 1):
            ga = poly.coeffs.get(a)
            if ga is None:
                continue
            prod = mat_mul(ga, out[l - a])
            acc = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(acc, prod)]
        neg = mat_mul(inv0, acc)
        out[l] = [[-x for x in row] for row in neg]
    return _Lau(r, out, order, 0)


class GaugeElement:
    """Polynomial matrix gauge with invertible constant term.

    Entries are coefficient tuples of one common length (the order);
    coefficients beyond the stored degree are exactly zero, so a gauge
    element carries full information about itself.
    """

    __slots__ = ("r", "order", "entries")

    def __init__(self, r: int, entries: Sequence[Sequence[Sequence[ScalarLike]]]):
        if r < 1:
            raise MalformedInput("matrix size must be positive")
        if len(entries) != r or any(len(row) != r for row in entries):
            raise MalformedInput("gauge entries must form an r x r matrix")
        lengths = {len(cell) for row in entries for cell in row}
        if len(lengths) != 1 or min(lengths) < 1:
            raise MalformedInput("gauge entries must share one positive order")
        order = lengths.pop()
        coerced = tuple(
            tuple(tuple(GaussianRational.of(c) for c in cell) for cell in row)
            for row in entries
        )
        const = [[coerced[i][j][0] for j in range(r)] for i in range(r)]
        mat_inverse(const, G_ONE, G_ZERO)  # raises NotAUnit when singular
        self.r = r
        self.order = order
        self.entries = coerced

    @staticmethod
    def identity(r: int, order: int = 1) -> "GaugeElement":
        entries = [
            [[G_ONE if i == j else G_ZERO] + [G_ZERO] * (order - 1) for j in range(r)]
            for i in range(r)
        ]
        return GaugeElement(r, entries)

    @staticmethod
    def from_constant(matrix: Sequence[Sequence[ScalarLike]]) -> "GaugeElement":
        return GaugeElement(len(matrix), [[[c] for c in row] for row in matrix])

    def constant_term(self) -> GMatrix:
        return [[self.entries[i][j][0] for j in range(self.r)] for i in range(self.r)]

    def is_identity_mod_z(self) -> bool:
        ident = mat_identity(self.r, G_ONE, G_ZERO)
        return self.constant_term() == ident

    def to_lau(self) -> _Lau:
        coeffs: Dict[int, GMatrix] = {}
        for l in range(self.order):
            m = [[self.entries[i][j][l] for j in range(self.r)] for i in range(self.r)]
            if any(any(x for x in row) for row in m):
                coeffs[l] = m
        return _Lau(self.r, coeffs, None, 0)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GaugeElement)
            and self.r == other.r
            and self.order == other.order
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"GaugeElement(r={self.r}, order={self.order})"


def gauge_compose(second: GaugeElement, first: GaugeElement) -> GaugeElement:
    """Polynomial product second * first: apply ``first``, then ``second``."""
    if second.r != first.r:
        raise ShapeMismatch("gauge sizes differ")
    prod = second.to_lau().mul(first.to_lau())
    order = second.order + first.order - 1
    entries = [
        [
            [prod.coefficient(l)[i][j] for l in range(order)]
            for j in range(first.r)
        ]
        for i in range(first.r)
    ]
    return GaugeElement(first.r, entries)


class ConnectionGerm:
    """Matrix of one-forms f_ij dz, exact from order -(k+1) to N-1."""

    __slots__ = ("r", "pole_bound", "precision", "entries")

    def __init__(
        self,
        r: int,
        pole_bound: int,
        entries: Sequence[Sequence[Tuple[LaurentTail, TruncatedSeries]]],
    ):
        if r < 1:
            raise MalformedInput("matrix size must be positive")
        if pole_bound < 0:
            raise MalformedInput("pole bound must be non-negative")
        if len(entries) != r or any(len(row) != r for row in entries):
            raise MalformedInput("entries must form an r x r matrix")
        precisions = set()
        for row in entries:
            for tail, regular in row:
                if not isinstance(tail, LaurentTail) or not isinstance(regular, TruncatedSeries):
                    raise MalformedInput("each entry must pair a tail with a series")
                if tail.pole_order_bound != pole_bound + 1:
                    raise MalformedInput("tail bound must equal pole_bound + 1")
                precisions.add(regular.order)
        if len(precisions) != 1:
            raise MalformedInput("entries must share one regular precision")
        self.r = r
        self.pole_bound = pole_bound
        self.precision = precisions.pop()
        self.entries = tuple(tuple(row) for row in entries)

    @staticmethod
    def from_order_dict(
        r: int, pole_bound: int, precision: int, data: Dict[int, Sequence[Sequence[ScalarLike]]]
    ) -> "ConnectionGerm":
        """Build from a map order -> matrix; orders outside the window reject."""
        for l, matrix in data.items():
            if l < -(pole_bound + 1) or l >= precision:
                raise MalformedInput(f"order {l} outside the germ window")
            if len(matrix) != r or any(len(row) != r for row in matrix):
                raise MalformedInput(f"coefficient matrix at order {l} is not {r} x {r}")

        def at(i: int, j: int, l: int) -> GaussianRational:
            return GaussianRational.of(data[l][i][j]) if l in data else G_ZERO

        entries = []
        for i in range(r):
            row = []
            for j in range(r):
                tail = tuple(at(i, j, l) for l in range(-(pole_bound + 1), 0))
                reg = tuple(at(i, j, l) for l in range(precision))
                row.append(
                    (LaurentTail(pole_bound + 1, tail), TruncatedSeries(precision, reg))
                )
            entries.append(row)
        return ConnectionGerm(r, pole_bound, entries)

    def coefficient(self, i: int, j: int, order: int) -> GaussianRational:
        tail, regular = self.entries[i][j]
        if order < -(self.pole_bound + 1):
            return G_ZERO
        if order < 0:
            return tail.coefficient(order)
        if order < self.precision:
            return regular.coeffs[order]
        raise PrecisionExhausted(f"order {order} beyond the stored precision")

    def coefficient_matrix(self, order: int) -> GMatrix:
        return [
            [self.coefficient(i, j, order) for j in range(self.r)] for i in range(self.r)
        ]

    def to_lau(self) -> _Lau:
        coeffs: Dict[int, GMatrix] = {}
        for l in range(-(self.pole_bound + 1), self.precision):
            m = self.coefficient_matrix(l)
            if any(any(x for x in row) for row in m):
                coeffs[l] = m
        return _Lau(self.r, coeffs, self.precision, -(self.pole_bound + 1))

    @staticmethod
    def from_lau(lau: _Lau, pole_bound: int) -> "ConnectionGerm":
        if lau.hi is None:
            raise MalformedInput("a germ needs a finite precision bound")
        if lau.hi < 1:
            raise PrecisionExhausted("resulting germ has no regular coefficients left")
        data = dict(lau.coeffs)
        for l in data:
            if l < -(pole_bound + 1):
                raise MalformedInput("pole deeper than the declared bound")
        return ConnectionGerm.from_order_dict(lau.r, pole_bound, lau.hi, data)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ConnectionGerm)
            and self.r == other.r
            and self.pole_bound == other.pole_bound
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return (
            f"ConnectionGerm(r={self.r}, pole_bound={self.pole_bound}, "
            f"precision={self.precision})"
        )


def gauge_transform(germ: ConnectionGerm, g: GaugeElement) -> ConnectionGerm:
    """Apply g M g^{-1} + dg g^{-1}; precision follows the germ.

    The inverse is computed far enough past the pole that the only
    unknown orders are the germ's own, so the output window equals the
    input window.
    """
    if germ.r != g.r:
        raise ShapeMismatch("gauge and germ sizes differ")
    depth = germ.pole_bound + 1
    glau = g.to_lau()
    ginv = _series_matrix_inverse(glau, germ.precision + depth)
    m = germ.to_lau()
    conjugated = glau.mul(m).mul(ginv)
    correction = glau.derivative().mul(ginv)
    total = conjugated.add(correction)
    return ConnectionGerm.from_lau(total, germ.pole_bound)


def is_untwisted_in_basis(germ: ConnectionGerm) -> bool:
    """Off-diagonal coefficients vanish at z^{-j} dz for every j >= 2."""
    for i in range(germ.r):
        for j in range(germ.r):
            if i == j:
                continue
            tail, _ = germ.entries[i][j]
            for order in range(-(germ.pole_bound + 1), -1):
                if tail.coefficient(order):
                    return False
    return True


def extract_irregular_type(germ: ConnectionGerm) -> IrregularType:
    """Diagonal principal part as an irregular type, residue discarded.

    Inverts d: the coefficient of z^{-(l+1)} dz on the diagonal equals
    -l A_l, for l = 1 .. pole_bound.
    """
    if not is_untwisted_in_basis(germ):
        raise Twisted("off-diagonal principal part below residue order")
    system = gl_cartan_system(germ.r)
    vectors = []
    for l in range(1, germ.pole_bound + 1):
        inv = GaussianRational.of(Fraction(-1, l))
        vectors.append(
            [germ.coefficient(i, i, -(l + 1)) * inv for i in range(germ.r)]
        )
    return IrregularType(system, germ.pole_bound, vectors)


def verify_framing_invariance(germ: ConnectionGerm, g: GaugeElement) -> bool:
    """Extraction is blind to framing-compatible gauges (g = Id mod z).

    Both the input and its transform must be untwisted in the given
    basis; the extracted irregular types are then compared exactly.
    """
    if germ.r != g.r:
        raise ShapeMismatch("gauge and germ sizes differ")
    if not g.is_identity_mod_z():
        raise MalformedInput("gauge must be the identity modulo z")
    transformed = gauge_transform(germ, g)
    if not is_untwisted_in_basis(germ) or not is_untwisted_in_basis(transformed):
        raise Twisted("both connections must be untwisted in this basis")
    return extract_irregular_type(germ) == extract_irregular_type(transformed)


def _to_sympy_gauss(value: GaussianRational):
    import sympy

    return sympy.Rational(value.re.numerator, value.re.denominator) + sympy.Rational(
        value.im.numerator, value.im.denominator
    ) * sympy.I


def _from_sympy_gauss(expr) -> GaussianRational:
    import sympy

    re_part, im_part = sympy.expand(expr).as_real_imag()
    re_q = sympy.Rational(re_part)
    im_q = sympy.Rational(im_part)
    return GaussianRational(
        Fraction(int(re_q.p), int(re_q.q)), Fraction(int(im_q.p), int(im_q.q))
    )


def _qi_eigenvalues(matrix: GMatrix) -> List[GaussianRational]:
    """Distinct eigenvalues in the Gaussian rationals, sorted.

    Raises ``LeadingNotRegular`` on any repeated eigenvalue (split or
    not) and ``NotSplitOverField`` when an eigenvalue lies outside the
    field.  Exact: factors the characteristic polynomial over the
    Gaussian rationals.
    """
    import sympy

    from .linalg import char_poly

    n = len(matrix)
    coeffs = char_poly(matrix, G_ONE, G_ZERO)
    lam = sympy.Symbol("lam")
    expr = sum(
        _to_sympy_gauss(c) * lam ** (n - i) for i, c in enumerate(coeffs)
    )
    poly = sympy.Poly(expr, lam, domain="QQ_I")
    _, factors = poly.factor_list()
    roots: List[GaussianRational] = []
    for factor, exponent in factors:
        if exponent > 1:
            raise LeadingNotRegular("leading coefficient has a repeated eigenvalue")
        if factor.degree() > 1:
            raise NotSplitOverField(
                "an eigenvalue of the leading coefficient is not Gaussian rational"
            )
        a, b = factor.all_coeffs()
        roots.append(_from_sympy_gauss(-b / a))
    roots.sort(key=lambda v: (v.re, v.im))
    return roots


def _eigenvector(matrix: GMatrix, eigenvalue: GaussianRational) -> List[GaussianRational]:
    n = len(matrix)
    shifted = [
        [matrix[i][j] - (eigenvalue if i == j else G_ZERO) for j in range(n)]
        for i in range(n)
    ]
    basis = kernel_basis(shifted, n, G_ONE, G_ZERO)
    if len(basis) != 1:
        raise LeadingNotRegular("eigenvalue is not geometrically simple")
    vec = basis[0]
    lead = next(x for x in vec if x)
    inv = lead.inverse()
    return [x * inv for x in vec]


def _principal_diagonal_ok(germ: ConnectionGerm) -> bool:
    if not is_untwisted_in_basis(germ):
        return False
    leading = germ.coefficient_matrix(-(germ.pole_bound + 1))
    return all(
        not leading[i][j] for i in range(germ.r) for j in range(germ.r) if i != j
    )


def leading_regular_diagonalize(
    germ: ConnectionGerm,
) -> Tuple[GaugeElement, ConnectionGerm]:
    """Gauge a leading-regular germ to untwisted shape.

    The leading coefficient must have r distinct Gaussian-rational
    eigenvalues.  A constant gauge moves to the eigenbasis; then for
    each principal order above the leading one, a commutator equation
    against the leading diagonal removes the off-diagonal part without
    disturbing anything below.  Needs k >= 1 and precision >= k.
    """
    k = germ.pole_bound
    if k < 1:
        raise OutOfRange("diagonalization needs a pole of order at least 2")
    if germ.precision < k:
        raise PrecisionExhausted(
            f"precision {germ.precision} below the pole bound {k}"
        )
    r = germ.r
    leading = germ.coefficient_matrix(-(k + 1))
    if _principal_diagonal_ok(germ):
        diag = [leading[i][i] for i in range(r)]
        if len({(d.re, d.im) for d in diag}) != r:
            raise LeadingNotRegular("repeated leading diagonal entries")
        return GaugeElement.identity(r), germ
    values = _qi_eigenvalues(leading)
    columns = [_eigenvector(leading, lam) for lam in values]
    change = [[columns[j][i] for j in range(r)] for i in range(r)]
    constant = mat_inverse(change, G_ONE, G_ZERO)
    total = GaugeElement.from_constant(constant)
    current = gauge_transform(germ, total)
    for j in range(1, k):
        target = j - k - 1
        coeff = current.coefficient_matrix(target)
        correction = _zero_matrix(r)
        nontrivial = False
        for a in range(r):
            for b in range(r):
                if a != b and coeff[a][b]:
                    correction[a][b] = coeff[a][b] / (values[a] - values[b])
                    nontrivial = True
        if not nontrivial:
            continue
        entries = [
            [
                [G_ONE if (a == b and l == 0) else (correction[a][b] if l == j else G_ZERO) for l in range(j + 1)]
                for b in range(r)
            ]
            for a in range(r)
        ]
        step = GaugeElement(r, entries)
        current = gauge_transform(current, step)
        total = gauge_compose(step, total)
    if not is_untwisted_in_basis(current):
        raise LeadingNotRegular("diagonalization failed to clear the principal part")
    return total, current
