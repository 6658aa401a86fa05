# File: toric/symbolic.py
"""
Exact verification of the one-parameter subgroups attached to roots.

For roots alpha_1, ..., alpha_l of ray v_i the automorphism

    tau_t(x^b) = x^b * (1 + t_1 x^alpha_1 + ... + t_l x^alpha_l) ** v_i(b)

of the function field k(M) is built symbolically, with the t's as formal
parameters. Rational functions are pairs of sympy sparse polynomials and are
never reduced; two of them are equal when their cross products agree.

Every map is a field endomorphism fixed by the images of x_1..x_n, so two
maps agree on x^b exactly when the product of (left_k / right_k) ** b_k over
the generators is 1. Factors with left_k = right_k drop out of that product
before anything is expanded.

"""
import logging
from dataclasses import dataclass
from math import comb
from typing import Tuple

from sympy import QQ
from sympy.polys.rings import ring

from toric.exceptions import CaseNotApplicable, LawViolation, NotARoot
from toric.intlin import int_matrix, smith_normal_form
from toric.roots import is_root
from toric.utils import add, box_points, dot, monomial_box

logger = logging.getLogger(__name__)


class LaurentRational:
    """ A fraction num / den of polynomials over QQ in one shared ring. """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.ring.one
        if not den:
            raise ZeroDivisionError("LaurentRational with zero denominator.")
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    def _coerce(self, other):
        if isinstance(other, LaurentRational):
            return other
        return LaurentRational(self.ring(other))

    def __add__(self, other):
        other = self._coerce(other)
        return LaurentRational(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return LaurentRational(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return LaurentRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        return LaurentRational(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent
        return LaurentRational(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other):
        other = self._coerce(other)
        return self.num * other.den == other.num * self.den

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    @property
    def is_zero(self):
        return not self.num

    def __repr__(self):
        return "LaurentRational((%s) / (%s))" % (self.num, self.den)


class SymbolicSpace:
    """
    The polynomial ring holding x_1..x_n (coordinates of M), the named formal
    parameters, and optionally torus parameters l_1..l_r.

    """

    def __init__(self, rank, parameters=(), torus_rank=0):
        self.rank = rank
        self.parameters = tuple(parameters)
        self.torus_rank = torus_rank
        names = ["x%d" % (k + 1) for k in range(rank)]
        names += list(self.parameters)
        names += ["l%d" % (k + 1) for k in range(torus_rank)]
        self.ring = ring(",".join(names), QQ)[0]
        self.size = len(names)

    def _exponents(self, offset, vector):
        exponents = [0] * self.size
        for k, e in enumerate(vector):
            exponents[offset + k] = e
        return exponents

    def _laurent(self, exponents, coeff=1):
        top = tuple(max(e, 0) for e in exponents)
        bottom = tuple(max(-e, 0) for e in exponents)
        return LaurentRational(
            self.ring.from_dict({top: QQ(coeff)}),
            self.ring.from_dict({bottom: QQ(1)}),
        )

    def monomial(self, alpha, coeff=1):
        """ coeff * x^alpha; negative exponents go to the denominator. """
        return self._laurent(self._exponents(0, alpha), coeff)

    def parameter(self, name):
        index = self.rank + self.parameters.index(name)
        return LaurentRational(self.ring.gens[index])

    def torus(self, weights):
        """ l^weights for a weight vector over the torus parameters. """
        return self._laurent(self._exponents(self.rank + len(self.parameters), weights))

    def constant(self, value):
        return LaurentRational(self.ring(value))

    def generator(self, k):
        return LaurentRational(self.ring.gens[k])


class FieldMap:
    """
    A ring endomorphism of k(M) that fixes every parameter, given by the
    images of the generators x_1..x_n.

    Maps compose by substituting generator images, so the image of x^b is
    the product of the generator images raised to b.

    """

    def __init__(self, space, images):
        self.space = space
        self.images = tuple(images)
        self._powers = {}

    def _power(self, k, exponent):
        key = (k, exponent)
        if key not in self._powers:
            image = self.images[k]
            self._powers[key] = (image.num ** exponent, image.den ** exponent)
        return self._powers[key]

    def monomial_image(self, beta):
        one = self.space.ring.one
        num, den = one, one
        for k, b in enumerate(beta):
            if not b:
                continue
            top, bottom = self._power(k, abs(b))
            if b < 0:
                top, bottom = bottom, top
            num *= top
            den *= bottom
        return LaurentRational(num, den)

    def _substitute(self, poly):
        """ The image of a polynomial as a (numerator, denominator) pair. """
        poly_ring = self.space.ring
        terms = poly.terms()
        if not terms:
            return poly_ring.zero, poly_ring.one

        n = self.space.rank
        highest = [max(monom[k] for monom, _ in terms) for k in range(n)]
        den = poly_ring.one
        for k, e in enumerate(highest):
            den *= self._power(k, e)[1]

        num = poly_ring.zero
        for monom, coeff in terms:
            term = poly_ring.from_dict({(0,) * n + monom[n:]: coeff})
            for k in range(n):
                term *= self._power(k, monom[k])[0]
                term *= self._power(k, highest[k] - monom[k])[1]
            num += term
        return num, den

    def __call__(self, value):
        a_num, a_den = self._substitute(value.num)
        b_num, b_den = self._substitute(value.den)
        return LaurentRational(a_num * b_den, a_den * b_num)

    def after(self, other):
        """ self o other """
        return FieldMap(self.space, [self(image) for image in other.images])


def identity_map(space):
    return FieldMap(space, [space.generator(k) for k in range(space.rank)])


class OneParameterMap(FieldMap):
    """
    tau(x^b) = x^b * u ** ray(b), u = 1 + sum of coeff_j * x^alpha_j.

    ``terms`` pairs each coefficient (a LaurentRational in the formal
    parameters) with its root.

    """

    def __init__(self, space, ray, terms):
        self.ray = tuple(ray)
        self.terms = list(terms)
        u = space.constant(1)
        for coeff, alpha in self.terms:
            u = u + coeff * space.monomial(alpha)
        self.multiplier = u
        super(OneParameterMap, self).__init__(
            space, [space.generator(k) * u ** v for k, v in enumerate(self.ray)]
        )

    def monomial_image(self, beta):
        return self.space.monomial(beta) * self.multiplier ** dot(self.ray, beta)

    def scaled(self, scalar):
        terms = [(coeff * scalar, alpha) for coeff, alpha in self.terms]
        return OneParameterMap(self.space, self.ray, terms)


def torus_action(space, vfan, inverse=False):
    """ h_l(x^b) = l^v(b) x^b, the action of the Cox torus on k(M). """
    sign = -1 if inverse else 1
    images = []
    for k in range(space.rank):
        weights = [sign * ray[k] for ray in vfan.rays]
        images.append(space.generator(k) * space.torus(weights))
    return FieldMap(space, images)


def _check_roots(vfan, i, alphas):
    for alpha in alphas:
        if not is_root(vfan, alpha, i):
            raise NotARoot("%r is not a root of ray %d." % (tuple(alpha), i))


def parameter_names(prefix, count):
    return ["%s%d" % (prefix, k + 1) for k in range(count)]


def one_parameter_map(space, vfan, i, alphas, parameters):
    _check_roots(vfan, i, alphas)
    coefficients = [
        p if isinstance(p, LaurentRational) else space.parameter(p) for p in parameters
    ]
    return OneParameterMap(space, vfan.rays[i], list(zip(coefficients, alphas)))


def apply_one_param(vfan, i, alphas, alpha):
    """
    tau_t(x^alpha) for roots alphas of ray i, with parameters t1..tl.

    Returns the LaurentRational and the space it lives in.

    """
    alphas = [tuple(a) for a in alphas]
    space = SymbolicSpace(vfan.rank, parameter_names("t", len(alphas)))
    tau = one_parameter_map(space, vfan, i, alphas, space.parameters)
    return tau.monomial_image(alpha), space


@dataclass(frozen=True)
class CheckReport:
    check: str
    subject: dict
    monomials: int
    passed: bool = True

    def as_dict(self):
        return {
            "check": self.check,
            "subject": self.subject,
            "monomials": self.monomials,
            "passed": self.passed,
        }


def _sample(vfan, box):
    return box_points(vfan.rank, monomial_box() if box is None else box)


def _violation(check, beta, details):
    return LawViolation(
        "%s fails on x^%s." % (check, list(beta)),
        check=check,
        monomial=list(beta),
        **details
    )


def _compare(check, left, right, beta, **details):
    if left != right:
        raise _violation(check, beta, details)


def _compare_maps(check, left, right, monomials, **details):
    """ Require left(x^b) = right(x^b) for every b in monomials. """
    factors = []
    for image, other in zip(left.images, right.images):
        a, b = image.num * other.den, other.num * image.den
        factors.append(None if a == b else (a, b))

    one = left.space.ring.one
    for beta in monomials:
        lhs, rhs = one, one
        for pair, e in zip(factors, beta):
            if pair is None or not e:
                continue
            a, b = pair if e > 0 else pair[::-1]
            lhs *= a ** abs(e)
            rhs *= b ** abs(e)
        if lhs != rhs:
            raise _violation(check, beta, details)


def check_group_law(vfan, i, alphas, box=None):
    """
    Verify tau_(t+s) = tau_t o tau_s, tau_t o tau_-t = id and tau_0 = id on
    every monomial of the sample box.

    """
    alphas = [tuple(a) for a in alphas]
    l = len(alphas)
    space = SymbolicSpace(vfan.rank, parameter_names("t", l) + parameter_names("s", l))
    t = [space.parameter(name) for name in parameter_names("t", l)]
    s = [space.parameter(name) for name in parameter_names("s", l)]

    tau_t = one_parameter_map(space, vfan, i, alphas, t)
    tau_s = one_parameter_map(space, vfan, i, alphas, s)
    tau_sum = one_parameter_map(space, vfan, i, alphas, [a + b for a, b in zip(t, s)])
    identity = identity_map(space)

    monomials = _sample(vfan, box)
    subject = {"ray": i, "roots": [list(a) for a in alphas]}
    _compare_maps("group_law", tau_sum, tau_t.after(tau_s), monomials, **subject)
    _compare_maps(
        "inverse", tau_t.after(tau_t.scaled(-1)), identity, monomials, **subject
    )
    _compare_maps("identity", tau_t.scaled(0), identity, monomials, **subject)

    logger.debug("Group law for ray %d checked on %d monomials", i, len(monomials))
    return CheckReport("group_law", subject, len(monomials))


def check_commutation(vfan, root_i, root_j, box=None):
    """
    Verify how tau for root_i (ray i) and tau' for root_j (ray j) interact.

    When neither value v_i(r_j), v_j(r_i) is positive the two maps commute.
    When v_j(r_i) = 0 < m = v_i(r_j), the conjugate tau o tau' o tau^-1 is
    the map of ray j over the roots r_j + k r_i with coefficients
    s * C(m, k) * t^k, 0 <= k <= m.

    """
    i, ri = root_i.ray, tuple(root_i.alpha)
    j, rj = root_j.ray, tuple(root_j.alpha)
    if i == j or not any(add(ri, rj)):
        raise CaseNotApplicable(
            "Roots %r and %r are on the same ray or opposite." % (ri, rj)
        )

    m = vfan.value(i, rj)
    back = vfan.value(j, ri)
    if m == 0 and back == 0:
        case = "commute"
    elif back == 0 and m > 0:
        case = "conjugate"
    else:
        raise CaseNotApplicable(
            "Roots %r and %r have values %d and %d." % (ri, rj, m, back)
        )

    space = SymbolicSpace(vfan.rank, ("t", "s"))
    t, s = space.parameter("t"), space.parameter("s")
    tau = one_parameter_map(space, vfan, i, [ri], [t])
    other = one_parameter_map(space, vfan, j, [rj], [s])

    if case == "commute":
        left, right = tau.after(other), other.after(tau)
    else:
        shifted = [add(rj, ri, scale=k) for k in range(m + 1)]
        coefficients = [s * comb(m, k) * t ** k for k in range(m + 1)]
        left = tau.after(other).after(tau.scaled(-1))
        right = one_parameter_map(space, vfan, j, shifted, coefficients)

    monomials = _sample(vfan, box)
    subject = {"case": case, "roots": [list(ri), list(rj)], "rays": [i, j]}
    _compare_maps("commutation", left, right, monomials, **subject)
    return CheckReport("commutation", subject, len(monomials))


def check_torus_conjugation(vfan, root, box=None):
    """ Verify h_l o tau_t o h_l^-1 = tau_(t * l^v(alpha)) with formal l. """
    alpha = tuple(root.alpha)
    space = SymbolicSpace(vfan.rank, ("t",), torus_rank=vfan.ray_count)
    t = space.parameter("t")
    tau = one_parameter_map(space, vfan, root.ray, [alpha], [t])
    scaled = tau.scaled(space.torus(vfan.evaluate(alpha)))
    h = torus_action(space, vfan)
    h_inverse = torus_action(space, vfan, inverse=True)

    monomials = _sample(vfan, box)
    subject = {
        "ray": root.ray,
        "root": list(alpha),
        "weight": list(vfan.evaluate(alpha)),
    }
    _compare_maps(
        "torus_conjugation", h.after(tau).after(h_inverse), scaled, monomials, **subject
    )
    return CheckReport("torus_conjugation", subject, len(monomials))


def check_tangent(vfan, root, box=None):
    """ The coefficient of t in tau_t(x^b) is v_i(b) * x^(b + alpha). """
    alpha = tuple(root.alpha)
    space = SymbolicSpace(vfan.rank, ("t",))
    t = space.ring.gens[vfan.rank]
    tau = one_parameter_map(space, vfan, root.ray, [alpha], ["t"])

    monomials = _sample(vfan, box)
    subject = {"ray": root.ray, "root": list(alpha)}
    for beta in monomials:
        image = tau.monomial_image(beta)
        num, den = image.num, image.den
        derivative = LaurentRational(
            (num.diff(t) * den - num * den.diff(t)).subs(t, 0), (den * den).subs(t, 0)
        )
        expected = space.monomial(add(beta, alpha), vfan.value(root.ray, beta))
        _compare("tangent", derivative, expected, beta, **subject)

    return CheckReport("tangent", subject, len(monomials))


def check_injectivity(vfan, i, alphas):
    """
    tau_t(x^b) - x^b = sum t_j x^(b + alpha_j) for any b with v_i(b) = 1, so
    tau_t is the identity only for t = 0.

    """
    alphas = [tuple(a) for a in alphas]
    snf = smith_normal_form(int_matrix([vfan.rays[i]]))
    beta = tuple(int(snf.U[0, 0]) * int(snf.V[k, 0]) for k in range(vfan.rank))

    image, space = apply_one_param(vfan, i, alphas, beta)
    expected = space.constant(0)
    for name, alpha in zip(space.parameters, alphas):
        expected = expected + space.parameter(name) * space.monomial(add(beta, alpha))

    subject = {"ray": i, "witness": list(beta), "roots": [list(a) for a in alphas]}
    _compare("injectivity", image - space.monomial(beta), expected, beta, **subject)
    return CheckReport("injectivity", subject, 1)


@dataclass(frozen=True)
class SuiteReport:
    checks: Tuple[CheckReport, ...]
    box: int

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def counts(self):
        tally = {}
        for check in self.checks:
            tally[check.check] = tally.get(check.check, 0) + 1
        return tally


def run_suite(vfan, roots, box=None):
    """
    Run every check on every root, every ray and every applicable ordered
    pair of roots. The first failure raises LawViolation.

    """
    box = monomial_box() if box is None else box
    checks = []
    by_ray = {}
    for root in roots:
        by_ray.setdefault(root.ray, []).append(tuple(root.alpha))
        checks.append(check_group_law(vfan, root.ray, [root.alpha], box))
        checks.append(check_tangent(vfan, root, box))
        checks.append(check_torus_conjugation(vfan, root, box))

    for i, alphas in sorted(by_ray.items()):
        if len(alphas) > 1:
            checks.append(check_group_law(vfan, i, alphas, box))
        checks.append(check_injectivity(vfan, i, alphas))

    for first in roots:
        for second in roots:
            try:
                checks.append(check_commutation(vfan, first, second, box))
            except CaseNotApplicable:
                continue

    logger.debug("Symbolic suite ran %d checks with box %d", len(checks), box)
    return SuiteReport(checks=tuple(checks), box=box)
