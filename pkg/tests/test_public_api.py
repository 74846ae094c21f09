# This file is part of python-cantorvals test suite
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

import cantorvals
from cantorvals.abstract import AbstractCriterion, Verdict, CANTOR_SET, KINDS
from cantorvals.common import STATEMENT
import unittest

class OddCriterion(AbstractCriterion):
	name = 'odd-test'
	kind = CANTOR_SET
	priority = 5

	def decide(self):
		if self.seq.ratio(1) == self.seq.ratio(2):
			return Verdict(self.kind, self.name)

class UnavailableCriterion(OddCriterion):
	name = 'unavailable-test'

	@staticmethod
	def available():
		return False

class APITest(unittest.TestCase):
	def test_api(self):
		all_criteria = cantorvals.get_all_criteria()
		self.assertIn(cantorvals.MainStarCriterion, all_criteria)
		self.assertIn(cantorvals.FNEqualityCriterion, all_criteria)
		criterion_class = cantorvals.find_criterion_class_by_name('fn-equality')
		self.assertEqual(cantorvals.FNEqualityCriterion, criterion_class)
		criterion_class = cantorvals.find_criterion_class_by_name('Main-Star')
		self.assertEqual(cantorvals.MainStarCriterion, criterion_class)
		self.assertIsNone(cantorvals.find_criterion_class_by_name('nonexistent'))

	def test_priority_order(self):
		names = [criterion.name for criterion in cantorvals.get_all_criteria()]
		builtin = [name for name in names if name in
			('tw1-1', 'tw1-2', 'sannami', 'main-star', 'fn-equality')]
		self.assertEqual(['tw1-1', 'tw1-2', 'sannami', 'main-star', 'fn-equality'], builtin)

	def test_available_criteria(self):
		available_criteria = cantorvals.get_available_criteria()
		self.assertIn(cantorvals.CantorSetCriterion, available_criteria)
		for criterion in available_criteria:
			self.assertIn(STATEMENT, criterion.attributes)

	def test_custom_criteria(self):
		seq = cantorvals.ParamSequence(period=['1/35', '7/17'])
		verdict = cantorvals.classify(seq, criteria=[OddCriterion] + cantorvals.builtin_criteria)
		self.assertEqual('main-star', verdict.provenance)
		seq = cantorvals.ParamSequence(period=['1/5', '1/5'])
		verdict = cantorvals.classify(seq, criteria=[OddCriterion] + cantorvals.builtin_criteria)
		self.assertEqual(Verdict(CANTOR_SET, 'odd-test'), verdict)
		self.assertFalse(UnavailableCriterion.available())

	def test_abstract(self):
		self.assertRaises(NotImplementedError, AbstractCriterion(None).decide)
		self.assertRaises(ValueError, Verdict, 'Cantorvalish')
		self.assertEqual(5, len(KINDS))

	def test_shortcuts(self):
		seq = cantorvals.ParamSequence(period=['1/15', '11/21'])
		self.assertTrue(cantorvals.condition_fn(seq).holds)
		self.assertFalse(cantorvals.condition_star(seq).holds)
		self.assertFalse(cantorvals.corollary_region('1/15', '11/21'))
		self.assertEqual(2, cantorvals.rank_indices(seq).k(1))
		self.assertEqual(cantorvals.cantorval_measure(seq) * 5, 8)
		self.assertRegex(cantorvals.__version__, r'^\d+\.\d+\.\d+$')
