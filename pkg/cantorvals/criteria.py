# vim: ts=8:sts=8:sw=8:noexpandtab

# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

import logging

import cantorvals.common as common
from cantorvals.abstract import (AbstractCriterion, Verdict, FULL_INTERVAL,
	FINITE_UNION, CANTOR_SET, CANTORVAL)
from cantorvals.classify import condition_star, condition_fn
from cantorvals.errors import HypothesesUnsatisfied

logger = logging.getLogger(__name__)


class FullIntervalCriterion(AbstractCriterion):
	"""The difference set is :math:`[-1, 1]` if and only if
	:math:`a_n \\le 1/3` for all `n`.
	"""
	name = 'tw1-1'
	kind = FULL_INTERVAL
	priority = 10
	attributes = {
		common.STATEMENT: 'C(a) - C(a) = [-1, 1] iff a_n <= 1/3 for all n',
	}

	def decide(self):
		if all(x <= common.ONE_THIRD for x in self.seq.entries()):
			return Verdict(self.kind, self.name)


class FiniteUnionCriterion(AbstractCriterion):
	"""The difference set is a finite union of closed intervals if and
	only if only finitely many entries exceed 1/3.
	"""
	name = 'tw1-2'
	kind = FINITE_UNION
	priority = 20
	attributes = {
		common.STATEMENT: 'C(a) - C(a) is a finite union of intervals '
			'iff {n : a_n > 1/3} is finite',
	}

	def decide(self):
		if all(x <= common.ONE_THIRD for x in self.seq.period):
			above = [n for n, x in enumerate(self.seq.prefix, 1) if x > common.ONE_THIRD]
			return Verdict(self.kind, self.name, {'indices_above_one_third': above})


class CantorSetCriterion(AbstractCriterion):
	"""If :math:`a_n > 1/3` for all `n`, the difference set is a Cantor set."""
	name = 'sannami'
	kind = CANTOR_SET
	priority = 30
	attributes = {
		common.STATEMENT: 'a_n > 1/3 for all n implies C(a) - C(a) is a Cantor set',
	}

	def decide(self):
		if all(x > common.ONE_THIRD for x in self.seq.entries()):
			return Verdict(self.kind, self.name)


class _ConditionCriterion(AbstractCriterion):
	kind = CANTORVAL
	condition = None

	def decide(self):
		try:
			report = type(self).condition(self.seq)
		except HypothesesUnsatisfied as exc:
			logger.debug('%s does not apply to %r: %s', self.name, self.seq, exc)
			return None
		if report.holds and report.reduced:
			return Verdict(self.kind, self.name, report.to_json())
		if report.holds:
			logger.warning('%s holds for %r only up to rank %d; not certifying',
				self.name, self.seq, report.verified_up_to)


class MainStarCriterion(_ConditionCriterion):
	"""Condition :math:`m_n \\ge 2\\sum_{i>n}(d_{k_i-1} - d_{k_i})` for all
	`n` certifies a Cantorval.
	"""
	name = 'main-star'
	priority = 40
	condition = staticmethod(condition_star)
	attributes = {
		common.STATEMENT: 'm_n >= 2 sum_{i>n} (d_{k_i-1} - d_{k_i}) for all n '
			'implies C(a) - C(a) is a Cantorval',
	}


class FNEqualityCriterion(_ConditionCriterion):
	"""The equality :math:`m'_n = M'_n = \\sum_{i\\ge n}(d_{k_i-1} - d_{k_i})`
	for all `n` certifies a Cantorval.
	"""
	name = 'fn-equality'
	priority = 50
	condition = staticmethod(condition_fn)
	attributes = {
		common.STATEMENT: "m'_n = M'_n = sum_{i>=n} (d_{k_i-1} - d_{k_i}) for all n "
			'implies C(a) - C(a) is a Cantorval',
	}
