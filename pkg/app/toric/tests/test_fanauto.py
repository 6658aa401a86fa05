# File: toric/tests/test_fanauto.py
from math import factorial, prod

from django.test import SimpleTestCase, override_settings

from toric import fan as fans
from toric.exceptions import InternalInconsistency, SearchTooLarge
from toric.fanauto import (
    LatticeAut,
    class_compatibility,
    class_permutations,
    component_group,
    compose,
    is_fan_automorphism,
    lattice_automorphisms,
    weyl_embedding,
)
from toric.roots import classify_roots, enumerate_roots, ray_classes
from toric.tests import oracles
from toric.tests.test_fan import example_fans


def classes_of(vfan):
    return ray_classes(vfan, classify_roots(enumerate_roots(vfan), vfan))


def lines():
    return fans.product(fans.projective_space(1), fans.projective_space(1))


class LatticeAutomorphismsTestCase(SimpleTestCase):
    def test_orders(self):
        """ Test the size of Aut_Delta M on standard fans """
        expected = [
            (fans.projective_space(1), 2),
            (fans.projective_space(2), 6),
            (fans.projective_space(3), 24),
            (lines(), 8),
            (fans.hirzebruch(1), 2),
            (fans.hirzebruch(2), 2),
            (fans.hirzebruch(3), 2),
            (fans.weighted_plane(2), 2),
        ]
        for vfan, order in expected:
            self.assertEqual(len(lattice_automorphisms(vfan)), order)

    def test_matches_brute_force(self):
        """ Test the anchored search against a scan of small matrices """
        for vfan in [
            fans.projective_space(2),
            lines(),
            fans.hirzebruch(1),
            fans.hirzebruch(2),
            fans.hirzebruch(3),
            fans.weighted_plane(2),
        ]:
            found = [g.entries for g in lattice_automorphisms(vfan)]

            self.assertEqual(sorted(found), oracles.brute_force_automorphisms(vfan))

    def test_hirzebruch_swap(self):
        """ Test the non-trivial automorphism of F_1 """
        group = lattice_automorphisms(fans.hirzebruch(1))
        swap = [g for g in group if not g.is_identity]

        self.assertEqual(swap[0].entries, ((-1, 1), (0, 1)))
        self.assertEqual(swap[0].ray_permutation, (2, 1, 0, 3))
        self.assertEqual(swap[0].det, -1)

    def test_not_an_automorphism(self):
        """ Test that a shear of P2 does not preserve the fan """
        vfan = fans.projective_space(2)

        self.assertIsNone(is_fan_automorphism(vfan, [[1, 1], [0, 1]]))
        self.assertIsNone(is_fan_automorphism(vfan, [[2, 0], [0, 1]]))

    @override_settings(TORIC_MAX_SEARCH_RAYS=3)
    def test_search_limit(self):
        """ Test that a fan above the ray limit is refused """
        with self.assertRaises(SearchTooLarge):
            lattice_automorphisms(lines())


class WeylEmbeddingTestCase(SimpleTestCase):
    def test_identity(self):
        """ Test that the identity permutation maps to the identity matrix """
        vfan = fans.projective_space(2)
        element = weyl_embedding(vfan, classes_of(vfan), (0, 1, 2))

        self.assertEqual(element.entries, ((1, 0), (0, 1)))

    def test_hirzebruch_transposition(self):
        """ Test the image of swapping v_1 and v_3 on F_1 """
        vfan = fans.hirzebruch(1)
        element = weyl_embedding(vfan, classes_of(vfan), (2, 1, 0, 3))

        self.assertEqual(element.entries, ((-1, 1), (0, 1)))

    def test_homomorphism(self):
        """ Test W_p * W_q = W_(p o q) over the symmetric group of P2 """
        vfan = fans.projective_space(2)
        classes = classes_of(vfan)
        permutations = list(class_permutations(classes, vfan.ray_count))
        self.assertEqual(len(permutations), 6)

        for p in permutations:
            for q in permutations:
                composed = tuple(p[q[i]] for i in range(vfan.ray_count))
                product = compose(
                    vfan,
                    weyl_embedding(vfan, classes, p),
                    weyl_embedding(vfan, classes, q),
                )

                self.assertEqual(
                    product.entries, weyl_embedding(vfan, classes, composed).entries
                )

    def test_inverse_permutation(self):
        """ Test that W_p moves ray i to ray p^-1(i) """
        vfan = fans.projective_space(2)
        element = weyl_embedding(vfan, classes_of(vfan), (1, 2, 0))

        self.assertEqual(element.ray_permutation, (2, 0, 1))

    def test_mixed_classes(self):
        """ Test that a permutation across classes is refused """
        vfan = fans.hirzebruch(1)
        with self.assertRaises(ValueError):
            weyl_embedding(vfan, classes_of(vfan), (1, 0, 2, 3))


class ComponentGroupTestCase(SimpleTestCase):
    def test_orders(self):
        """ Test the component group order on standard fans """
        for vfan, order in [
            (fans.projective_space(1), 1),
            (fans.projective_space(2), 1),
            (fans.projective_space(3), 1),
            (lines(), 2),
            (fans.hirzebruch(1), 1),
            (fans.hirzebruch(2), 1),
            (fans.hirzebruch(3), 1),
            (fans.weighted_plane(2), 1),
        ]:
            report = component_group(vfan, classes_of(vfan))

            self.assertEqual(report.order, order)
            self.assertEqual(len(report.cosets), order)

    def test_order_times_weyl(self):
        """ Test |Aut_Delta M| = order * prod l! on every example fan """
        for vfan in example_fans():
            report = component_group(vfan, classes_of(vfan))
            weyl = prod(factorial(l) for l in report.class_sizes)

            self.assertEqual(len(report.aut_delta), report.order * weyl)
            self.assertEqual(len(report.weyl_image), weyl)

    def test_product_of_lines(self):
        """ Test that the component group of P1 x P1 swaps the factors """
        vfan = lines()
        report = component_group(vfan, classes_of(vfan))

        self.assertEqual(len(report.aut_delta), 8)
        self.assertEqual(len(report.weyl_image), 4)
        self.assertEqual(report.class_sizes, (2, 2))
        self.assertEqual(report.cosets[0].entries, ((-1, 0), (0, -1)))
        self.assertEqual(
            frozenset(report.cosets[1].ray_permutation[i] for i in (0, 1)),
            frozenset((2, 3)),
        )

    def test_class_compatibility(self):
        """ Test that a permutation breaking ray classes is caught """
        vfan = fans.hirzebruch(1)
        classes = classes_of(vfan)
        bogus = LatticeAut(
            entries=((1, 0), (0, 1)), det=1, ray_permutation=(1, 0, 2, 3)
        )

        self.assertTrue(class_compatibility(vfan, classes, lattice_automorphisms(vfan)))
        with self.assertRaises(InternalInconsistency):
            class_compatibility(vfan, classes, [bogus])
