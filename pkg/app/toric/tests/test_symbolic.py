# File: toric/tests/test_symbolic.py
import random
import time
from unittest import mock

from django.test import SimpleTestCase, override_settings

from toric import fan as fans
from toric.exceptions import CaseNotApplicable, LawViolation, NotARoot
from toric.roots import Root, classify_roots, enumerate_roots
from toric.symbolic import (
    LaurentRational,
    SymbolicSpace,
    apply_one_param,
    check_commutation,
    check_group_law,
    check_injectivity,
    check_tangent,
    check_torus_conjugation,
    identity_map,
    one_parameter_map,
    run_suite,
    torus_action,
)
from toric.tests import oracles
from toric.tests.test_fan import example_fans
from toric.utils import box_points


class LaurentRationalTestCase(SimpleTestCase):
    def setUp(self):
        self.space = SymbolicSpace(2, ("t",))
        self.x = self.space.monomial((1, 0))
        self.t = self.space.parameter("t")

    def test_unreduced_equality(self):
        """ Test that equal fractions compare equal without reduction """
        left = (self.x + 1) / self.x
        right = (self.x * self.x + self.x) / (self.x * self.x)

        self.assertEqual(left, right)
        self.assertNotEqual(left, self.x)

    def test_negative_exponents(self):
        """ Test that x^-1 lands in the denominator """
        inverse = self.space.monomial((-1, 0))

        self.assertEqual(inverse * self.x, 1)
        self.assertEqual(self.x ** -2, inverse * inverse)
        self.assertEqual(
            self.space.monomial((2, -3), 5).den, self.space.ring.gens[1] ** 3
        )

    def test_arithmetic(self):
        """ Test subtraction, is_zero and mixing with integers """
        value = (self.t + 2) - self.t

        self.assertEqual(value, 2)
        self.assertTrue((value - 2).is_zero)
        self.assertEqual(3 - self.t + self.t, 3)

    def test_zero_denominator(self):
        """ Test that a zero denominator is refused """
        with self.assertRaises(ZeroDivisionError):
            LaurentRational(self.space.ring.one, self.space.ring.zero)


class LaurentRationalLawsTestCase(SimpleTestCase):
    def setUp(self):
        self.space = SymbolicSpace(2, ("t",))
        self.rng = random.Random(17)

    def random_value(self):
        value = self.space.constant(self.rng.randint(1, 3))
        for _ in range(self.rng.randint(1, 3)):
            alpha = (self.rng.randint(-2, 2), self.rng.randint(-2, 2))
            coeff = self.rng.choice([-2, -1, 1, 2, 3])
            value = value + self.space.monomial(alpha, coeff)
            if self.rng.random() < 0.5:
                value = value * self.space.parameter("t")
        return value

    def random_nonzero(self):
        while True:
            value = self.random_value()
            if not value.is_zero:
                return value

    def rewritten(self, value):
        """ The same fraction with numerator and denominator scaled together. """
        factor = self.random_nonzero()
        return LaurentRational(value.num * factor.num, value.den * factor.num)

    def test_congruence(self):
        """ Test that equality is an equivalence respected by the arithmetic """
        for _ in range(25):
            a, b = self.random_value(), self.random_nonzero()
            a1 = self.rewritten(a)
            a2 = self.rewritten(a1)

            self.assertEqual(a, a)
            self.assertEqual(a1, a)
            self.assertEqual(a, a1)
            self.assertEqual(a, a2)
            self.assertEqual(a1 + b, a + b)
            self.assertEqual(a1 * b, a * b)
            self.assertEqual(a1 - b, a - b)
            self.assertEqual(a1 / b, a / b)

    def test_field_laws(self):
        """ Test the field axioms on random fractions """
        for _ in range(25):
            a, b, c = self.random_value(), self.random_value(), self.random_nonzero()

            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)
            self.assertEqual(c / c, 1)
            self.assertEqual(c ** -2 * c ** 2, 1)
            self.assertTrue((a - a).is_zero)


class ApplyOneParamTestCase(SimpleTestCase):
    def test_weighted_plane(self):
        """ Test the map attached to the root (0, -1) of the weight 2 ray """
        vfan = fans.weighted_plane(2)

        value, space = apply_one_param(vfan, 1, [(0, -1)], (0, 1))
        t = space.parameter("t1")
        self.assertEqual(value, space.monomial((0, 1)) + t)

        value, space = apply_one_param(vfan, 1, [(0, -1)], (0, -1))
        t = space.parameter("t1")
        down = space.monomial((0, -1))
        self.assertEqual(value, down / (1 + t * down))

    def test_matches_naive_expansion(self):
        """ Test the sparse map against a direct sympy expression """
        vfan = fans.hirzebruch(1)
        roots = [(0, 1), (1, 1)]
        for beta in box_points(2, 1):
            value, space = apply_one_param(vfan, 3, roots, beta)
            expected, _, _ = oracles.naive_one_parameter(vfan.rays[3], roots, beta)

            self.assertTrue(
                oracles.expressions_equal(
                    oracles.laurent_to_expr(value, space), expected
                )
            )

    def test_not_a_root(self):
        """ Test that a non-root is refused """
        with self.assertRaises(NotARoot):
            apply_one_param(fans.projective_space(2), 0, [(1, 1)], (1, 0))


class GroupLawTestCase(SimpleTestCase):
    def test_single_root(self):
        """ Test the additive group law for one root of P2 """
        report = check_group_law(fans.projective_space(2), 0, [(-1, 0)], box=1)

        self.assertTrue(report.passed)
        self.assertEqual(report.monomials, 9)
        self.assertEqual(report.subject, {"ray": 0, "roots": [[-1, 0]]})

    def test_joint_roots(self):
        """ Test the group law for all roots of v_4 on F_1 together """
        report = check_group_law(fans.hirzebruch(1), 3, [(0, 1), (1, 1)], box=1)

        self.assertTrue(report.passed)


class FieldMapTestCase(SimpleTestCase):
    def setUp(self):
        self.vfan = fans.hirzebruch(1)
        self.space = SymbolicSpace(2, ("t", "s"))
        self.t = self.space.parameter("t")
        self.s = self.space.parameter("s")

    def test_composite_matches_closed_form(self):
        """ Test that composing by generator images gives tau_(t+s) on monomials """
        tau_t = one_parameter_map(self.space, self.vfan, 3, [(0, 1)], [self.t])
        tau_s = one_parameter_map(self.space, self.vfan, 3, [(0, 1)], [self.s])
        tau_sum = one_parameter_map(
            self.space, self.vfan, 3, [(0, 1)], [self.t + self.s]
        )
        composite = tau_t.after(tau_s)
        for beta in box_points(2, 1):
            self.assertEqual(
                composite.monomial_image(beta), tau_sum.monomial_image(beta)
            )

    def test_substitution(self):
        """ Test that a map applied to a sum of monomials acts term by term """
        tau = one_parameter_map(self.space, self.vfan, 0, [(-1, 0)], [self.t])
        value = self.space.monomial((1, 0)) + self.space.monomial((0, -1), 2)

        self.assertEqual(
            tau(value),
            tau.monomial_image((1, 0)) + 2 * tau.monomial_image((0, -1)),
        )
        self.assertEqual(identity_map(self.space)(value), value)

    def test_torus_inverse(self):
        """ Test that h_l and its inverse compose to the identity """
        space = SymbolicSpace(2, torus_rank=self.vfan.ray_count)
        h = torus_action(space, self.vfan)
        composite = h.after(torus_action(space, self.vfan, inverse=True))

        for image, generator in zip(composite.images, identity_map(space).images):
            self.assertEqual(image, generator)
        self.assertEqual(
            h.monomial_image((1, 1)),
            space.monomial((1, 1)) * space.torus(self.vfan.evaluate((1, 1))),
        )


class CommutationTestCase(SimpleTestCase):
    def test_commuting_roots(self):
        """ Test that roots of the two rulings of P1 x P1 commute """
        vfan = fans.product(fans.projective_space(1), fans.projective_space(1))
        report = check_commutation(vfan, Root((-1, 0), 0), Root((0, -1), 2), box=1)

        self.assertEqual(report.subject["case"], "commute")

    def test_conjugate_roots(self):
        """ Test the binomial conjugation formula on F_1 """
        vfan = fans.hirzebruch(1)
        report = check_commutation(vfan, Root((-1, 0), 0), Root((1, 1), 3), box=1)

        self.assertEqual(report.subject["case"], "conjugate")
        self.assertEqual(report.subject["rays"], [0, 3])

    def test_opposite_roots(self):
        """ Test that opposite roots are not a commutation case """
        with self.assertRaises(CaseNotApplicable):
            check_commutation(
                fans.projective_space(1), Root((-1,), 0), Root((1,), 1), box=1
            )

    def test_reversed_pair(self):
        """ Test that the reversed conjugate pair is not applicable """
        with self.assertRaises(CaseNotApplicable):
            check_commutation(
                fans.hirzebruch(1), Root((1, 1), 3), Root((-1, 0), 0), box=1
            )

    def test_wrong_coefficients_fail(self):
        """ Test that a wrong binomial coefficient raises LawViolation """
        vfan = fans.hirzebruch(1)
        with mock.patch("toric.symbolic.comb", lambda m, k: 1 + m * k):
            with self.assertRaises(LawViolation) as raised:
                check_commutation(vfan, Root((-1, 0), 0), Root((1, 1), 3), box=1)

        self.assertEqual(raised.exception.details["check"], "commutation")
        self.assertEqual(raised.exception.details["case"], "conjugate")
        self.assertIn(tuple(raised.exception.details["monomial"]), box_points(2, 1))


class TorusConjugationTestCase(SimpleTestCase):
    def test_projective_plane(self):
        """ Test conjugation by the Cox torus for the root (1, 0) of v_3 """
        vfan = fans.projective_space(2)
        report = check_torus_conjugation(vfan, Root((1, 0), 2), box=1)

        self.assertTrue(report.passed)
        self.assertEqual(report.subject["weight"], [1, 0, -1])


class TangentTestCase(SimpleTestCase):
    def test_derivation(self):
        """ Test that tau_t is tangent to x^alpha D_v """
        for root in enumerate_roots(fans.hirzebruch(2)):
            self.assertTrue(check_tangent(fans.hirzebruch(2), root, box=1).passed)


class InjectivityTestCase(SimpleTestCase):
    def test_witness(self):
        """ Test that the witness monomial has value 1 on the ray """
        vfan = fans.hirzebruch(2)
        report = check_injectivity(vfan, 2, [(1, 0)])

        self.assertEqual(vfan.value(2, report.subject["witness"]), 1)
        self.assertEqual(report.monomials, 1)

    def test_several_roots(self):
        """ Test injectivity for the three roots of v_4 on F_2 """
        report = check_injectivity(fans.hirzebruch(2), 3, [(0, 1), (1, 1), (2, 1)])

        self.assertTrue(report.passed)


class RunSuiteTestCase(SimpleTestCase):
    def test_projective_line(self):
        """ Test the suite on P1, where no pair of roots is a commutation case """
        vfan = fans.projective_space(1)
        suite = run_suite(vfan, classify_roots(enumerate_roots(vfan)), box=1)

        self.assertTrue(suite.passed)
        self.assertEqual(
            suite.counts(),
            {"group_law": 2, "tangent": 2, "torus_conjugation": 2, "injectivity": 2},
        )

    @override_settings(TORIC_MONOMIAL_BOX=1)
    def test_hirzebruch_one(self):
        """ Test the suite on F_1 with the configured box """
        vfan = fans.hirzebruch(1)
        suite = run_suite(vfan, classify_roots(enumerate_roots(vfan), vfan))

        self.assertEqual(suite.box, 1)
        self.assertTrue(suite.passed)
        self.assertGreater(suite.counts()["commutation"], 0)
        self.assertEqual(suite.counts()["injectivity"], 3)

    def test_example_fans_box_two(self):
        """ Test that every example fan passes the suite on [-2, 2]^n in 10 s """
        start = time.perf_counter()
        for vfan in example_fans():
            suite = run_suite(vfan, classify_roots(enumerate_roots(vfan), vfan), box=2)

            self.assertTrue(suite.passed, vfan.name)
            self.assertEqual(suite.box, 2)
            for check in suite.checks:
                if check.check != "injectivity":
                    self.assertEqual(check.monomials, 5 ** vfan.rank)
        self.assertLess(time.perf_counter() - start, 10)
