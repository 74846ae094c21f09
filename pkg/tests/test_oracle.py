# This file is part of python-cantorvals test suite
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

from fractions import Fraction as F
import os
import time
import unittest

from cantorvals.errors import (CertificateMissing, DepthCapExceeded,
	PreconditionError, StructuralError)
from cantorvals.geometry import Interval, difference_union
from cantorvals.oracle import (CatalogReport, certificate, conjecture_probe,
	contains, enumerate_difference, gap_catalog_crosscheck, measure_at_depth,
	origin_interior_radius, verify_containment)
from cantorvals.params import ParamSequence, rank_indices

try:
	from hypothesis import given, strategies
except ImportError:
	given = None

HALF = ParamSequence.constant('1/2')
THIRD = ParamSequence.constant('1/3')
ONE_FIFTEENTH = ParamSequence(period=['1/15', '11/21'])
ONE_THIRTY_FIFTH = ParamSequence(period=['1/35', '7/17'])

SLOW_TESTS = os.environ.get('CANTORVALS_SLOW_TESTS')
CPU_COUNT = os.cpu_count() or 1


def _mirrored(pairs, unit):
	gaps = set()
	for left, right in pairs:
		gaps.add((F(left, unit), F(right, unit)))
		gaps.add((F(-right, unit), F(-left, unit)))
	return gaps


class EnumerationTest(unittest.TestCase):
	def test_full_interval(self):
		depth_slice = enumerate_difference(THIRD, 3)
		self.assertEqual([(F(-1), F(1))], list(depth_slice.union.pairs()))
		self.assertEqual(0, depth_slice.gap_count)

	def test_constant_half(self):
		depth_slice = enumerate_difference(HALF, 1)
		self.assertEqual([Interval(-1, F(-1, 2)), Interval(F(-1, 4), F(1, 4)),
			Interval(F(1, 2), 1)], depth_slice.union.parts)
		self.assertEqual([Interval.open(F(-1, 2), F(-1, 4)), Interval.open(F(1, 4), F(1, 2))],
			depth_slice.gaps)
		self.assertEqual(F(3, 2), depth_slice.total_measure)

	def test_measures(self):
		self.assertEqual(F(26, 15), enumerate_difference(ONE_FIFTEENTH, 2).total_measure)
		self.assertEqual(F(74, 45), enumerate_difference(ONE_FIFTEENTH, 4).total_measure)
		self.assertEqual(F(130, 81), enumerate_difference(ONE_FIFTEENTH, 8).total_measure)
		self.assertEqual(2 - F(8, 49), enumerate_difference(ONE_THIRTY_FIFTH, 4).total_measure)

	def test_depth_four_gaps(self):
		depth_slice = enumerate_difference(ONE_FIFTEENTH, 4)
		self.assertEqual(8, depth_slice.gap_count)
		expected = _mirrored([(-315, -261), (-395, -389), (-331, -325), (-251, -245)], 405)
		self.assertEqual(expected, set(gap.pair() for gap in depth_slice.gaps))
		depth_slice = enumerate_difference(ONE_THIRTY_FIFTH, 4)
		expected = _mirrored([(-175, -161), (-235, -233), (-187, -185), (-151, -149)], 245)
		self.assertEqual(expected, set(gap.pair() for gap in depth_slice.gaps))

	def test_matches_direct_union(self):
		for seq in (HALF, ONE_FIFTEENTH, ParamSequence(['1/2'], ['1/5', '3/5'])):
			for depth in range(6):
				self.assertEqual(difference_union(seq, depth),
					enumerate_difference(seq, depth).union)

	def test_root(self):
		self.assertEqual(difference_union(ONE_FIFTEENTH, 4, root=(1,)),
			enumerate_difference(ONE_FIFTEENTH, 4, root=(1,)).union)
		self.assertEqual(difference_union(ONE_FIFTEENTH, 3, root=(2, 0, 1)),
			enumerate_difference(ONE_FIFTEENTH, 3, root=(2, 0, 1)).union)
		self.assertRaises(PreconditionError, enumerate_difference, ONE_FIFTEENTH, 1, root=(0, 0))

	def test_workers(self):
		serial = enumerate_difference(ONE_THIRTY_FIFTH, 6, workers=1)
		parallel = enumerate_difference(ONE_THIRTY_FIFTH, 6, workers=3)
		self.assertEqual(serial.union, parallel.union)

	def test_depth_cap(self):
		self.assertRaises(DepthCapExceeded, enumerate_difference, HALF, 14)
		self.assertRaises(DepthCapExceeded, enumerate_difference, HALF, 4, cap=3)

	def test_outputs(self):
		depth_slice = enumerate_difference(HALF, 1)
		self.assertEqual({'depth': 1, 'measure': '3/2'}, depth_slice.to_json(emit='measure'))
		data = depth_slice.to_json(emit='gaps')
		self.assertNotIn('parts', data)
		self.assertEqual(2, len(data['gaps']))
		self.assertEqual(3, len(depth_slice.to_json()['parts']))
		self.assertEqual(['kind,l,r', 'part,-1,-1/2', 'gap,-1/2,-1/4', 'part,-1/4,1/4',
			'gap,1/4,1/2', 'part,1/2,1'], depth_slice.to_csv().splitlines())

	def test_components(self):
		depth_slice = enumerate_difference(HALF, 1)
		self.assertEqual(Interval(F(-1, 4), F(1, 4)), depth_slice.component_at(0))
		self.assertIsNone(depth_slice.component_at(F(3, 8)))
		self.assertEqual(F(1, 2), depth_slice.longest_component())


@unittest.skipUnless(SLOW_TESTS, 'slow tests not requested')
class DefaultCapDepthTest(unittest.TestCase):
	def timed(self, seq, workers):
		started = time.perf_counter()
		depth_slice = enumerate_difference(seq, 13, workers=workers)
		return depth_slice, time.perf_counter() - started

	def test_serial_time(self):
		for seq in (HALF, ONE_THIRTY_FIFTH):
			depth_slice, elapsed = self.timed(seq, 1)
			self.assertLess(elapsed, 10)
			self.assertEqual(depth_slice.union, depth_slice.union.negate())

	@unittest.skipIf(CPU_COUNT < 2, 'needs two processors')
	def test_parallel_matches_serial(self):
		for seq in (HALF, ONE_THIRTY_FIFTH):
			serial, _ = self.timed(seq, 1)
			parallel, _ = self.timed(seq, CPU_COUNT)
			self.assertEqual(serial.bounds, parallel.bounds)
			self.assertEqual(serial.total_measure, parallel.total_measure)

	@unittest.skipIf(CPU_COUNT < 4, 'needs four processors')
	def test_parallel_speedup(self):
		serial, serial_time = self.timed(ONE_THIRTY_FIFTH, 1)
		parallel, parallel_time = self.timed(ONE_THIRTY_FIFTH, 4)
		self.assertEqual(serial.bounds, parallel.bounds)
		self.assertGreaterEqual(serial_time / parallel_time, 2)


class MeasureAtDepthTest(unittest.TestCase):
	def test_rank_measures(self):
		ranks = rank_indices(ONE_FIFTEENTH)
		self.assertEqual(F(130, 81), measure_at_depth(ONE_FIFTEENTH, ranks, 4))
		ranks = rank_indices(ONE_THIRTY_FIFTH)
		self.assertEqual(F(3114, 1715), measure_at_depth(ONE_THIRTY_FIFTH, ranks, 3))

	def test_decreases_to_limit(self):
		ranks = rank_indices(ONE_THIRTY_FIFTH)
		previous = 2
		for N in range(1, 4):
			measure = measure_at_depth(ONE_THIRTY_FIFTH, ranks, N)
			self.assertLess(measure, previous)
			self.assertGreater(measure, F(9, 5))
			previous = measure


class ContainsTest(unittest.TestCase):
	def test_points(self):
		self.assertTrue(contains(HALF, 3, 0))
		self.assertTrue(contains(HALF, 3, 1))
		self.assertTrue(contains(HALF, 3, -1))
		self.assertFalse(contains(HALF, 3, F(3, 8)))
		self.assertFalse(contains(HALF, 3, 2))
		self.assertTrue(contains(THIRD, 6, F(5, 7)))
		self.assertFalse(contains(ONE_FIFTEENTH, 2, F(-32, 45)))
		self.assertTrue(contains(ONE_FIFTEENTH, 2, F(1, 6)))
		self.assertTrue(contains(ONE_FIFTEENTH, 2, F(1, 9)))

	def test_agrees_with_union(self):
		union = enumerate_difference(ONE_FIFTEENTH, 6).union
		for numerator in range(-100, 101):
			x = F(numerator, 97)
			self.assertEqual(union.contains_point(x), contains(ONE_FIFTEENTH, 6, x))


class RadiusTest(unittest.TestCase):
	def test_radius(self):
		self.assertEqual(1, origin_interior_radius(THIRD, 4))
		self.assertEqual(F(1, 4), origin_interior_radius(HALF, 1))
		self.assertEqual(F(1, 16), origin_interior_radius(HALF, 2))
		self.assertEqual(F(23, 35), origin_interior_radius(ONE_THIRTY_FIFTH, 2))
		self.assertEqual(F(149, 245), origin_interior_radius(ONE_THIRTY_FIFTH, 4))

	def test_probe(self):
		probe = conjecture_probe(ONE_THIRTY_FIFTH, [2, 4])
		self.assertEqual(['23/35', '149/245'], [row['radius'] for row in probe])
		self.assertEqual([2, 8], [row['gaps'] for row in probe])
		self.assertEqual('46/35', probe[0]['longest_component'])


class CertificateTest(unittest.TestCase):
	def test_certificate(self):
		self.assertEqual('main-star', certificate(ONE_THIRTY_FIFTH))
		self.assertEqual('fn-equality', certificate(ONE_FIFTEENTH))
		self.assertRaises(CertificateMissing, certificate, HALF)
		self.assertRaises(CertificateMissing, certificate, ParamSequence(period=['2/25', '13/23']))


class ContainmentTest(unittest.TestCase):
	def test_whole_interval(self):
		for seq, name in ((ONE_THIRTY_FIFTH, 'main-star'), (ONE_FIFTEENTH, 'fn-equality')):
			ranks = rank_indices(seq)
			report = verify_containment(seq, ranks, (), 2)
			self.assertTrue(report.covered)
			self.assertEqual(name, report.certificate)
			self.assertEqual(8, report.removed)
			self.assertEqual([], report.to_json()['uncovered'])

	def test_subinterval(self):
		ranks = rank_indices(ONE_THIRTY_FIFTH)
		for t in ((0,), (1,), (2,)):
			self.assertTrue(verify_containment(ONE_THIRTY_FIFTH, ranks, t, 2).covered)

	def test_uncertified(self):
		seq = ParamSequence(period=['2/25', '13/23'])
		self.assertRaises(CertificateMissing, verify_containment, seq, rank_indices(seq), (), 2)


class CatalogTest(unittest.TestCase):
	def test_goldens(self):
		ranks = rank_indices(ONE_THIRTY_FIFTH)
		report = gap_catalog_crosscheck(ONE_THIRTY_FIFTH, ranks, 2)
		self.assertTrue(report.matches)
		self.assertEqual(8, report.oracle_count)
		report = gap_catalog_crosscheck(ONE_THIRTY_FIFTH, ranks, 3)
		self.assertTrue(report.matches)
		self.assertEqual(26, report.family_count)
		report = gap_catalog_crosscheck(ONE_FIFTEENTH, rank_indices(ONE_FIFTEENTH), 3)
		self.assertTrue(report.matches)
		report.raise_for_mismatch()
		self.assertTrue(report.to_json()['matches'])

	def test_mismatch(self):
		report = CatalogReport(2, 7, 8, 8, [], [])
		self.assertFalse(report.matches)
		self.assertRaises(StructuralError, report.raise_for_mismatch)

	def test_preconditions(self):
		self.assertRaises(CertificateMissing, gap_catalog_crosscheck, HALF, None, 2)
		seq = ParamSequence(['1/2'], ['1/15', '11/21'])
		self.assertRaises(PreconditionError, gap_catalog_crosscheck, seq, rank_indices(seq), 2)


if given is not None:
	class MembershipPropertyTest(unittest.TestCase):
		@given(strategies.fractions(F(-6, 5), F(6, 5), max_denominator=1000))
		def test_contains_matches_union(self, x):
			union = enumerate_difference(ONE_THIRTY_FIFTH, 5).union
			self.assertEqual(union.contains_point(x), contains(ONE_THIRTY_FIFTH, 5, x))


if __name__ == '__main__':
	unittest.main()
