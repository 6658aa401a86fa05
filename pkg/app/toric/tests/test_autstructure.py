# File: toric/tests/test_autstructure.py
from django.test import SimpleTestCase

from toric import fan as fans
from toric.autstructure import (
    RepDecomposition,
    aut0_report,
    formula,
    rep_decomposition,
)
from toric.exceptions import DecompositionMismatch
from toric.roots import Root, class_order, ray_classes
from toric.tests.test_fan import example_fans


class ProjectiveSpaceTestCase(SimpleTestCase):
    def test_dimensions(self):
        """ Test that Aut0 of P^n is PGL_(n+1) """
        for n in (1, 2, 3):
            report = aut0_report(fans.projective_space(n))

            self.assertEqual(report.total_dimension, (n + 1) ** 2 - 1)
            self.assertEqual(report.reductive.gl_factors, (n + 1,))
            self.assertEqual(report.unipotent.total_dimension, 0)
            self.assertEqual(report.representations, ())

    def test_radical(self):
        """ Test that the semisimple roots of P2 span M """
        report = aut0_report(fans.projective_space(2))

        self.assertEqual(report.radical.semisimple_span_rank, 2)
        self.assertEqual(report.radical.quotient_rank, 0)
        self.assertEqual(report.formula, "Aut0 = GL_3/T_N")


class ProductOfLinesTestCase(SimpleTestCase):
    def test_reductive(self):
        """ Test that Aut0 of P1 x P1 is (GL_2 x GL_2)/T """
        report = aut0_report(
            fans.product(fans.projective_space(1), fans.projective_space(1))
        )

        self.assertEqual(report.total_dimension, 6)
        self.assertEqual(report.reductive.gl_factors, (2, 2))
        self.assertEqual(report.reductive.torus_free_rank, 2)
        self.assertEqual(report.reductive.dimension, 6)


class HirzebruchTestCase(SimpleTestCase):
    def test_dimensions(self):
        """ Test dimension a + 5 with a unipotent layer of dimension a + 1 """
        for a in (1, 2, 3):
            report = aut0_report(fans.hirzebruch(a))

            self.assertEqual(report.total_dimension, a + 5)
            self.assertEqual(report.reductive.dimension, 4)
            self.assertEqual(report.unipotent.total_dimension, a + 1)
            self.assertEqual(len(report.unipotent.layers), 1)
            self.assertEqual(report.unipotent.layers[0].dimension, a + 1)
            self.assertEqual(report.unipotent.chain, (a + 1,))

    def test_symmetric_power(self):
        """ Test that V_4 is S^a of the standard module of GL_F """
        for a in (1, 2, 3):
            report = aut0_report(fans.hirzebruch(a))
            acting = report.classes.class_of(0)
            found = [
                r
                for r in report.representations
                if r.acting_class == acting and r.target_ray == 3
            ]

            self.assertEqual(len(found), 1)
            self.assertEqual(found[0].action, "symmetric")
            self.assertEqual(found[0].summands, ((a, 1),))
            self.assertEqual(found[0].dimension(2), a + 1)

    def test_radical(self):
        """ Test that the radical torus of F_1 has rank 1 """
        report = aut0_report(fans.hirzebruch(1))

        self.assertEqual(report.radical.semisimple_span_rank, 1)
        self.assertEqual(report.radical.quotient_rank, 1)
        self.assertEqual(report.radical.cox_torus_rank, 3)
        self.assertEqual(report.formula, "Aut0 = R_u ⋊ (GL_2 × GL_1 × GL_1)/T_N")

    def test_dual_and_trivial(self):
        """ Test the action of GL_F on its own roots and on unrelated ones """
        report = aut0_report(fans.hirzebruch(1))
        classes = report.classes
        bottom = classes.class_of(3)

        own = [r for r in report.representations if r.acting_class == bottom]
        dual = RepDecomposition(
            acting_class=bottom, action="dual", summands=((1, 2),), target_class=bottom
        )
        self.assertEqual(own, [dual])

        middle = [
            r
            for r in report.representations
            if r.acting_class == classes.class_of(1) and r.target_ray == 3
        ]
        self.assertEqual(middle[0].action, "symmetric")
        self.assertEqual(middle[0].summands, ((1, 2),))


class WeightedPlaneTestCase(SimpleTestCase):
    def test_dimensions(self):
        """ Test dimension 7 = 4 + 3 """
        report = aut0_report(fans.weighted_plane(2))

        self.assertEqual(report.total_dimension, 7)
        self.assertEqual(report.reductive.dimension, 4)
        self.assertEqual(report.unipotent.total_dimension, 3)
        self.assertEqual(report.semisimple_count, 2)

    def test_second_symmetric_power(self):
        """ Test that V_2 is S^2 of the standard module """
        report = aut0_report(fans.weighted_plane(2))
        found = [
            r
            for r in report.representations
            if r.acting_class == report.classes.class_of(0) and r.target_ray == 1
        ]

        self.assertEqual(found[0].summands, ((2, 1),))
        self.assertEqual(found[0].dimension(2), 3)


class AccountingTestCase(SimpleTestCase):
    def assertAccounting(self, vfan):
        report = aut0_report(vfan)
        sizes = report.reductive.gl_factors
        non_semisimple = len(report.roots) - report.semisimple_count
        reductive = sum(l * l for l in sizes) - (vfan.ray_count - vfan.rank)

        self.assertEqual(vfan.rank + len(report.roots), reductive + non_semisimple)
        self.assertEqual(report.semisimple_count, sum(l * (l - 1) for l in sizes))
        self.assertEqual(report.lie_dimension, report.total_dimension)
        self.assertEqual(
            report.radical.semisimple_span_rank + report.radical.quotient_rank,
            vfan.rank,
        )

    def test_identity_on_examples(self):
        """
        Test n + #roots = (sum l^2 - (r - n)) + #non-semisimple on every
        example fan and on products

        """
        extra = [
            fans.product(fans.hirzebruch(1), fans.projective_space(1)),
            fans.product(fans.weighted_plane(2), fans.projective_space(1)),
        ]
        for vfan in example_fans() + extra:
            self.assertAccounting(vfan)

    def test_identity_on_random_fans(self):
        """ Test the accounting identities on seeded random fans """
        for vfan in fans.random_fans(seed=7, count=30):
            with self.subTest(fan=vfan.name, rays=vfan.rays):
                self.assertAccounting(vfan)

    def test_binomial_constraint(self):
        """ Test that every decomposition has the dimension of its roots """
        for vfan in example_fans():
            report = aut0_report(vfan)
            counts = report.unipotent.ray_dimensions
            for decomposition in report.representations:
                size = report.reductive.gl_factors[decomposition.acting_class]
                if decomposition.target_ray is not None:
                    self.assertEqual(
                        decomposition.dimension(size), counts[decomposition.target_ray]
                    )
                else:
                    self.assertEqual(
                        decomposition.dimension(size),
                        report.unipotent.class_dimensions[decomposition.target_class],
                    )


class DecompositionMismatchTestCase(SimpleTestCase):
    def test_missing_root(self):
        """ Test that a root bundle of the wrong size is reported """
        vfan = fans.hirzebruch(2)
        roots = [
            Root((-1, 0), 0, True, 2),
            Root((1, 0), 2, True, 0),
            Root((0, 1), 3),
            Root((2, 1), 3),
        ]
        classes = ray_classes(vfan, roots)
        ordered = class_order(vfan, roots, classes)

        with self.assertRaises(DecompositionMismatch):
            rep_decomposition(classes, ordered, roots, vfan)


class FormulaTestCase(SimpleTestCase):
    def test_examples(self):
        """ Test the formula text on two shapes """
        self.assertEqual(
            aut0_report(fans.weighted_plane(2)).formula,
            "Aut0 = R_u ⋊ (GL_2 × GL_1)/T_N",
        )
        report = aut0_report(fans.projective_space(1))
        self.assertEqual(formula(report.reductive, report.unipotent), "Aut0 = GL_2/T_N")
