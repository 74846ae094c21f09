# This file is part of python-cantorvals test suite
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

from fractions import Fraction as F
import os
import shutil
import tempfile
import unittest

from cantorvals.common import (exact_sqrt, format_decimal, format_scalar,
	load_settings, parse_scalar, SETTINGS_FILE_NAME)
from cantorvals.errors import (DomainError, IndexOutOfRange,
	NoIndexAboveOneThird, NoStartIndex, NotEventuallyPeriodic)
from cantorvals.params import ParamSequence, rank_indices, tail_weight_sum

try:
	from hypothesis import given, strategies
except ImportError:
	given = None

ONE_FIFTEENTH = ParamSequence(period=['1/15', '11/21'])
ONE_THIRTY_FIFTH = ParamSequence(period=['1/35', '7/17'])
PREFIXED = ParamSequence(['1/2'], ['1/15', '11/21'])


class ScalarTest(unittest.TestCase):
	def test_parse_scalar(self):
		self.assertEqual(F(11, 21), parse_scalar('11/21'))
		self.assertEqual(F(7, 20), parse_scalar('0.35'))
		self.assertEqual(F(3), parse_scalar(3))
		self.assertRaises(ValueError, parse_scalar, 0.35)
		self.assertRaises(ValueError, parse_scalar, True)
		self.assertRaises(ValueError, parse_scalar, 'abc')

	def test_format_scalar(self):
		self.assertEqual('11/21', format_scalar(F(11, 21)))
		self.assertEqual('-2', format_scalar(F(-2)))
		self.assertEqual('inf', format_scalar(float('inf')))
		self.assertEqual('-inf', format_scalar(float('-inf')))

	def test_format_decimal(self):
		self.assertEqual('1.6', format_decimal(F(8, 5)))
		self.assertEqual('0.3333333333', format_decimal(F(1, 3), digits=10))

	def test_exact_sqrt(self):
		self.assertEqual(F(204, 35), exact_sqrt(F(41616, 1225)))
		self.assertIsNone(exact_sqrt(2))
		self.assertIsNone(exact_sqrt(-1))


class SettingsTest(unittest.TestCase):
	def setUp(self):
		self.directory = tempfile.mkdtemp()

	def tearDown(self):
		shutil.rmtree(self.directory)

	def test_settings_file(self):
		with open(os.path.join(self.directory, SETTINGS_FILE_NAME), 'w') as settings_file:
			settings_file.write('# caps\ndepth_cap = 9\nworkers=3\nunknown = 1\nsamples = many\n')
		with self.assertLogs('cantorvals.common', 'WARNING'):
			settings = load_settings(self.directory)
		self.assertEqual(9, settings['depth_cap'])
		self.assertEqual(3, settings['workers'])
		self.assertNotIn('unknown', settings)


class SequenceTest(unittest.TestCase):
	def test_ratio(self):
		self.assertEqual(F(1, 3), ParamSequence.constant('1/3').ratio(5))
		self.assertEqual(F(1, 15), ONE_FIFTEENTH.ratio(3))
		self.assertEqual(F(1, 15), PREFIXED.ratio(2))
		self.assertEqual(F(1, 2), PREFIXED.ratio(1))

	def test_ratio_out_of_range(self):
		finite = ParamSequence(['1/2', '1/4'])
		self.assertEqual(F(1, 4), finite.ratio(2))
		self.assertRaises(IndexOutOfRange, finite.ratio, 3)
		self.assertRaises(IndexError, finite.ratio, 0)
		self.assertFalse(finite.supports(3))

	def test_invalid_entries(self):
		for entry in (0, 1, '3/2', '-1/2', 'abc'):
			self.assertRaises(DomainError, ParamSequence, period=[entry])

	def test_d(self):
		self.assertEqual(F(1, 81), ParamSequence.constant('1/3').d(4))
		self.assertEqual(F(1), ONE_FIFTEENTH.d(0))
		self.assertEqual(F(7, 15), ONE_FIFTEENTH.d(1))
		self.assertEqual(F(1, 9), ONE_FIFTEENTH.d(2))
		self.assertEqual(F(1, 7), ONE_THIRTY_FIFTH.d(2))

	def test_weight(self):
		self.assertEqual(F(2, 9), ParamSequence.constant('1/3').weight(2))
		self.assertEqual(F(16, 45), ONE_FIFTEENTH.weight(2))
		self.assertEqual(F(12, 35), ONE_THIRTY_FIFTH.weight(2))
		self.assertRaises(IndexOutOfRange, ONE_FIFTEENTH.weight, 0)

	def test_period_factor(self):
		self.assertEqual(F(1, 9), ONE_FIFTEENTH.period_factor())
		self.assertEqual(F(1, 7), ONE_THIRTY_FIFTH.period_factor())
		self.assertRaises(NotEventuallyPeriodic, ParamSequence(['1/2']).period_factor)

	def test_normalized(self):
		seq = ParamSequence(['11/21'], ['1/15', '11/21', '1/15', '11/21'])
		normalized = seq.normalized()
		self.assertEqual((), normalized.prefix)
		self.assertEqual((F(11, 21), F(1, 15)), normalized.period)
		self.assertEqual(ParamSequence.constant('1/3'), ParamSequence(period=['1/3', '1/3']))
		self.assertEqual(hash(ParamSequence.constant('1/3')),
			hash(ParamSequence(['1/3'], ['1/3', '1/3'])))
		self.assertNotEqual(ONE_FIFTEENTH, PREFIXED)

	def test_json(self):
		data = {'prefix': ['1/2'], 'period': ['1/15', '11/21']}
		self.assertEqual(PREFIXED, ParamSequence.from_json(data))
		self.assertEqual(data, PREFIXED.to_json())
		self.assertEqual(ONE_FIFTEENTH, ParamSequence.from_json('{"period": ["1/15", "11/21"]}'))
		self.assertRaises(DomainError, ParamSequence.from_json, {'periods': []})
		self.assertRaises(DomainError, ParamSequence.from_json, '[1]')


class RankIndexTest(unittest.TestCase):
	def test_periodic(self):
		ranks = rank_indices(ONE_FIFTEENTH)
		self.assertEqual(0, ranks.k0)
		self.assertEqual((2, 4, 6, 8, 10, 12, 14, 16), ranks.ks)
		self.assertEqual(40, ranks.k(20))

	def test_prefix(self):
		ranks = rank_indices(PREFIXED, count=3)
		self.assertEqual(1, ranks.k0)
		self.assertEqual((3, 5, 7), ranks.ks)
		self.assertEqual(21, ranks.k(10))

	def test_cycle_start(self):
		self.assertEqual(1, rank_indices(ONE_FIFTEENTH).cycle_start)
		ranks = rank_indices(ParamSequence(period=['1/5', '1/2', '1/5']))
		self.assertEqual(2, ranks.cycle_start)
		self.assertEqual((2, 5, 8), ranks.ks[:3])
		self.assertEqual(59, ranks.k(20))
		ranks = rank_indices(ParamSequence(['1/5', '1/2'], ['2/5', '1/5']))
		self.assertEqual(3, ranks.cycle_start)
		self.assertEqual((2, 3, 5, 7), ranks.ks[:4])
		self.assertEqual(19, ranks.k(10))

	def test_errors(self):
		self.assertRaises(NoIndexAboveOneThird, rank_indices, ParamSequence.constant('1/3'))
		self.assertRaises(NoStartIndex, rank_indices, ParamSequence.constant('1/2'))
		self.assertRaises(NoIndexAboveOneThird, rank_indices, ParamSequence(['1/4', '1/5']))

	def test_finite(self):
		ranks = rank_indices(ParamSequence(['1/2', '1/4', '1/2', '1/5', '3/5']))
		self.assertEqual(1, ranks.k0)
		self.assertEqual((3, 5), ranks.ks)
		self.assertRaises(IndexOutOfRange, ranks.k, 3)

	def test_rank_lookup(self):
		ranks = rank_indices(ONE_FIFTEENTH)
		self.assertEqual(1, ranks.rank_for_length(0))
		self.assertEqual(1, ranks.rank_for_length(1))
		self.assertEqual(2, ranks.rank_for_length(2))
		self.assertEqual(2, ranks.rank_for_length(3))
		self.assertEqual(2, ranks.rank_of_index(4))
		self.assertIsNone(ranks.rank_of_index(3))


class TailSumTest(unittest.TestCase):
	def test_closed_forms(self):
		for seq in (ONE_FIFTEENTH, ONE_THIRTY_FIFTH):
			ranks = rank_indices(seq)
			self.assertEqual(F(2, 5), tail_weight_sum(seq, ranks, 1, inclusive=True))
			self.assertEqual(F(2, 5), tail_weight_sum(seq, ranks, 0))
		ranks = rank_indices(ONE_FIFTEENTH)
		self.assertEqual(F(2, 45), tail_weight_sum(ONE_FIFTEENTH, ranks, 1))
		self.assertEqual(F(2, 405), tail_weight_sum(ONE_FIFTEENTH, ranks, 2))

	def test_prefix(self):
		ranks = rank_indices(PREFIXED)
		# weights of the prefixed sequence are those of the plain one scaled by 1/4
		self.assertEqual(F(1, 10), tail_weight_sum(PREFIXED, ranks, 1, inclusive=True))

	def test_partial_sums(self):
		ranks = rank_indices(ONE_THIRTY_FIFTH)
		closed = tail_weight_sum(ONE_THIRTY_FIFTH, ranks, 1)
		partial = F(0)
		for i in range(2, 12):
			partial += ONE_THIRTY_FIFTH.weight(ranks.k(i))
			self.assertLess(partial, closed)
			self.assertLessEqual(closed - partial, ONE_THIRTY_FIFTH.d(ranks.k(i)))

	def test_requires_period(self):
		seq = ParamSequence(['1/5', '1/2', '1/5', '1/2'])
		self.assertRaises(NotEventuallyPeriodic, tail_weight_sum, seq, rank_indices(seq), 1)


if given is not None:
	entries = strategies.fractions(F(1, 50), F(49, 50), max_denominator=50)

	class SequencePropertyTest(unittest.TestCase):
		@given(strategies.lists(entries, max_size=2), strategies.lists(entries, min_size=1, max_size=3))
		def test_d_decreases(self, prefix, period):
			seq = ParamSequence(prefix, period)
			for n in range(1, 9):
				self.assertLess(seq.d(n), seq.d(n - 1) / 2)
				self.assertGreater(seq.weight(n), seq.d(n))
				if n > 1:
					self.assertLess(seq.weight(n), seq.weight(n - 1))

		@given(strategies.lists(entries, min_size=1, max_size=3),
			strategies.integers(0, 5), strategies.integers(1, 5))
		def test_telescoping(self, period, start, count):
			seq = ParamSequence(period=period)
			total = sum((seq.weight(i) for i in range(start + 1, start + count + 1)), F(0))
			self.assertEqual(seq.d(start) - seq.d(start + count), total)

		@given(strategies.lists(entries, min_size=1, max_size=3), strategies.integers(1, 4))
		def test_tail_bound(self, period, n):
			seq = ParamSequence(period=period)
			try:
				ranks = rank_indices(seq)
			except ValueError:
				return
			self.assertLessEqual(tail_weight_sum(seq, ranks, n), seq.d(ranks.k(n)))

		@given(strategies.lists(entries, max_size=2), strategies.lists(entries, min_size=1, max_size=3))
		def test_normalized_keeps_values(self, prefix, period):
			seq = ParamSequence(prefix, period)
			normalized = seq.normalized()
			for n in range(1, 13):
				self.assertEqual(seq.ratio(n), normalized.ratio(n))


if __name__ == '__main__':
	unittest.main()
