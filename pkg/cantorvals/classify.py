# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

"""Sufficient conditions, verdicts, exact measures and the two-parameter
Cantorval region.

Every "for all n" condition is decided on an eventually periodic
sequence by periodic reduction: from the rank where the rank indices
start repeating, every quantity of the condition is multiplied by the
period factor :math:`\\rho` once per cycle of ranks, so one cycle of
ranks past the preperiod decides the condition.  The scaling identity is
itself checked on the following cycle; if it ever fails, a bounded scan
is reported instead of a definitive answer.
"""

import collections
import csv
import io
import logging
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from cantorvals.abstract import Verdict, CANTORVAL, UNKNOWN
from cantorvals.common import (ONE_THIRD, INFINITY, exact_sqrt, format_scalar,
	parse_scalar)
from cantorvals.errors import (DomainError, DivergentRatio,
	FormulaNotApplicable, HypothesesUnsatisfied, NotEventuallyPeriodic,
	NoIndexAboveOneThird, NoStartIndex, StructuralError)
from cantorvals.params import rank_indices, tail_weight_sum

logger = logging.getLogger(__name__)

#: number of rank cycles inspected when the scaling identity fails
FALLBACK_CYCLES = 12

#: abscissa where the two boundary branches of the region meet
BRANCH_JUNCTION_A1 = Fraction(1, 35)

#: right end of the second boundary branch, (6 sqrt(5) - 13) / 11
SECOND_BRANCH_LIMIT = (6 * math.sqrt(5) - 13) / 11


ConditionRow = collections.namedtuple('ConditionRow', 'n delta Delta m M tail margin')
ConditionRow.__doc__ = """One checked rank of a condition.

For condition (*) ``m`` is :math:`m_n`, ``tail`` the sum over ranks
above `n` and ``margin = m - 2 tail``; ``M`` is ``None``.  For the
equality condition ``m``/``M`` are the lower and upper bounds compared
with the inclusive tail and ``margin = m - tail``.
"""


class ConditionReport(object):
	"""Outcome of a periodic-reduction check.

	:param name: the condition name
	:param rows: the checked :class:`ConditionRow` values
	:param reduced: whether the periodic reduction applied
	:param holds: the decision
	:param verified_up_to: last rank of a bounded scan, ``None`` when
	                       the reduction applied
	"""

	def __init__(self, name, rows, reduced, holds, verified_up_to=None, cycle=None):
		self.name = name
		self.rows = list(rows)
		self.reduced = reduced
		self.holds = holds
		self.verified_up_to = verified_up_to
		self.cycle = cycle

	@property
	def margins(self):
		return [row.margin for row in self.rows]

	def to_json(self):
		fields = ConditionRow._fields
		data = {
			'condition': self.name,
			'holds': self.holds,
			'reduced': self.reduced,
			'rows': [dict((field, None if value is None else
				(value if field == 'n' else format_scalar(value)))
				for field, value in zip(fields, row)) for row in self.rows],
		}
		if self.cycle is not None:
			data['cycle'] = self.cycle
		if self.verified_up_to is not None:
			data['verified_up_to'] = self.verified_up_to
		return data


def delta_bounds(seq, ranks, n):
	"""
	:returns: :math:`(\\delta_n, \\Delta_n)`, the minimum and maximum of
	          :math:`3d_i - d_{i-1}` over
	          :math:`k_{n-1} < i < k_n`; ``(inf, -inf)`` for an empty band
	"""
	values = [3 * seq.d(i) - seq.d(i - 1) for i in range(ranks.k(n - 1) + 1, ranks.k(n))]
	if not values:
		return INFINITY, -INFINITY
	return min(values), max(values)


def margin_m(seq, ranks, n):
	"""
	:returns: :math:`m_n = \\min\\{\\delta_n - w_{k_n}, 4d_{k_n} - \\Delta_n\\}`
	          (``inf`` for an empty band)
	"""
	delta, Delta = delta_bounds(seq, ranks, n)
	k = ranks.k(n)
	return min(delta - seq.weight(k), 4 * seq.d(k) - Delta)


def _hypotheses(seq, ranks=None):
	if not seq.periodic:
		raise NotEventuallyPeriodic('conditions on all n need a periodic tail')
	if not any(x <= ONE_THIRD for x in seq.period):
		raise HypothesesUnsatisfied('only finitely many entries are at most 1/3')
	if ranks is None:
		try:
			ranks = rank_indices(seq)
		except (NoIndexAboveOneThird, NoStartIndex) as exc:
			raise HypothesesUnsatisfied(str(exc))
	return ranks


def _star_row(seq, ranks, n):
	delta, Delta = delta_bounds(seq, ranks, n)
	m = margin_m(seq, ranks, n)
	tail = tail_weight_sum(seq, ranks, n)
	return ConditionRow(n, delta, Delta, m, None, tail, m - 2 * tail)


def _fn_row(seq, ranks, n):
	delta, Delta = delta_bounds(seq, ranks, n)
	if n == 1:
		lower, upper = delta, Delta
	else:
		previous, Previous = delta_bounds(seq, ranks, n - 1)
		k = ranks.k(n - 1)
		candidates = (previous - seq.weight(k), 4 * seq.d(k) - Previous)
		lower = min(candidates + (delta,))
		upper = max(candidates + (Delta,))
	tail = tail_weight_sum(seq, ranks, n, inclusive=True)
	return ConditionRow(n, delta, Delta, lower, upper, tail, lower - tail)


def _star_passes(row):
	return row.margin >= 0


def _fn_passes(row):
	return row.m == row.M == row.tail


def _scales(row, later, factor):
	for value, scaled in zip(row[1:], later[1:]):
		if value is None or scaled is None:
			if value is not scaled:
				return False
		elif math.isinf(value):
			if scaled != value:
				return False
		elif scaled != factor * value:
			return False
	return True


def _reduced_check(name, seq, ranks, make_row, passes, lag):
	first = ranks.cycle_start + lag
	cycle = ranks.cycle_ranks
	factor = seq.period_factor()
	rows = [make_row(seq, ranks, n) for n in range(1, first + cycle)]
	following = [make_row(seq, ranks, n) for n in range(first + cycle, first + 2 * cycle)]
	cycle_info = {'start': first, 'ranks': cycle, 'length': ranks.cycle_length,
		'factor': format_scalar(factor)}
	if all(_scales(rows[first + i - 1], following[i], factor) for i in range(cycle)):
		holds = all(passes(row) for row in rows + following)
		logger.debug('%s: reduced over ranks 1..%d, holds=%s', name,
			first + 2 * cycle - 1, holds)
		return ConditionReport(name, rows + following, True, holds, cycle=cycle_info)
	limit = first + FALLBACK_CYCLES * cycle
	warnings.warn('%s: the scaling identity failed for %r; scanning up to rank %d'
		% (name, seq, limit), RuntimeWarning)
	rows = [make_row(seq, ranks, n) for n in range(1, limit + 1)]
	return ConditionReport(name, rows, False, all(passes(row) for row in rows),
		verified_up_to=limit, cycle=cycle_info)


def condition_star(seq, ranks=None):
	"""Decides :math:`m_n \\ge 2 \\sum_{i > n} (d_{k_i-1} - d_{k_i})` for
	all `n`.

	:rtype: ConditionReport
	:raises NotEventuallyPeriodic: for a finite sequence
	:raises HypothesesUnsatisfied: unless infinitely many entries lie on
	                               both sides of 1/3
	"""
	ranks = _hypotheses(seq, ranks)
	return _reduced_check('main-star', seq, ranks, _star_row, _star_passes, 0)


def condition_fn(seq, ranks=None):
	"""Decides the equality condition
	:math:`m'_n = M'_n = \\sum_{i \\ge n} (d_{k_i-1} - d_{k_i})` for all `n`,
	where :math:`m'_1 = \\delta_1`, :math:`M'_1 = \\Delta_1` and for
	:math:`n \\ge 2`

	.. math::

	   m'_n = \\min\\{\\delta_{n-1} - w_{k_{n-1}},\\ 4d_{k_{n-1}} - \\Delta_{n-1},\\ \\delta_n\\}

	with :math:`M'_n` the corresponding maximum taken with :math:`\\Delta_n`.

	:rtype: ConditionReport
	"""
	ranks = _hypotheses(seq, ranks)
	return _reduced_check('fn-equality', seq, ranks, _fn_row, _fn_passes, 1)


def classify(seq, criteria=None):
	"""Runs the criteria cascade.

	:param criteria: criterion classes to use; all available registered
	                 criteria by default
	:returns: the verdict of the first criterion that applies, otherwise
	          ``Unknown``
	:rtype: cantorvals.abstract.Verdict
	"""
	if not seq.periodic:
		raise NotEventuallyPeriodic('classification needs a periodic tail')
	if criteria is None:
		from cantorvals import get_available_criteria
		criteria = get_available_criteria()
	for criterion in sorted(criteria, key=lambda c: (c.priority, c.name)):
		verdict = criterion(seq).decide()
		if verdict is not None:
			logger.info('%r: %s by %s', seq, verdict.kind, verdict.provenance)
			return verdict
	return Verdict(UNKNOWN, 'none')


def gap_mass_series(seq, ranks):
	"""
	:returns: :math:`\\sum_{n \\ge 1} 3^{n-1} (d_{k_n-1} - 3 d_{k_n})` in
	          closed form
	:raises DivergentRatio: when the terms do not decay geometrically
	"""
	first, cycle = ranks.cycle_start, ranks.cycle_ranks

	def term(n):
		k = ranks.k(n)
		return 3 ** (n - 1) * (seq.d(k - 1) - 3 * seq.d(k))

	ratio = 3 ** cycle * seq.period_factor()
	if ratio >= 1:
		raise DivergentRatio('gap terms grow by %s per cycle' % format_scalar(ratio))
	head = sum((term(n) for n in range(1, first)), Fraction(0))
	block = sum((term(n) for n in range(first, first + cycle)), Fraction(0))
	return head + block / (1 - ratio)


def cantorval_measure(seq, ranks=None):
	"""
	:returns: the Lebesgue measure
	          :math:`2 - 2 \\sum_{n \\ge 1} 3^{n-1} (d_{k_n-1} - 3 d_{k_n})`
	          of a certified Cantorval
	:raises FormulaNotApplicable: without a Cantorval certificate or
	                              when :math:`k_0 \\ne 0`
	"""
	verdict = classify(seq)
	if verdict.kind != CANTORVAL:
		raise FormulaNotApplicable('no Cantorval certificate (verdict %s)' % verdict.kind)
	ranks = ranks or rank_indices(seq)
	if ranks.k0 != 0:
		raise FormulaNotApplicable('the measure formula needs a_1 < 1/3')
	return 2 - 2 * gap_mass_series(seq, ranks)


def _region_quantities(a1, a2):
	d1 = (1 - a1) / 2
	d2 = d1 * (1 - a2) / 2
	bound = 2 * d2 * (d1 - d2) / (1 - d2)
	return d2 + 2 * d1 - 1 - bound, 4 * d2 - 3 * d1 + 1 - bound


def corollary_slacks(a1, a2):
	"""
	:returns: the slacks of the two rational inequalities defining the
	          region (both nonnegative inside it)
	:raises DomainError: unless :math:`0 < a_1 < 1/3 < a_2 < 1`
	"""
	a1, a2 = parse_scalar(a1), parse_scalar(a2)
	if not (0 < a1 < ONE_THIRD < a2 < 1):
		raise DomainError('the region needs 0 < a1 < 1/3 < a2 < 1, got (%s, %s)'
			% (format_scalar(a1), format_scalar(a2)))
	return _region_quantities(a1, a2)


def corollary_region(a1, a2):
	"""
	:returns: whether the period-2 sequence :math:`(a_1, a_2)` lies in the
	          region where condition (*) holds, decided exactly by

	          .. math::

	             d_2 + 2d_1 - 1 \\ge 2d_2 \\frac{d_1 - d_2}{1 - d_2}, \\qquad
	             4d_2 - 3d_1 + 1 \\ge 2d_2 \\frac{d_1 - d_2}{1 - d_2}
	:rtype: bool
	"""
	first, second = corollary_slacks(a1, a2)
	return first >= 0 and second >= 0


def first_branch(a1):
	"""Upper boundary :math:`a_2(a_1)` for :math:`a_1 \\le 1/35` (float)."""
	a1 = float(a1)
	return (-a1 - 5 + math.sqrt(a1 * a1 + 34 * a1 + 33)) / (2 - 2 * a1)


def second_branch(a1):
	"""Upper boundary :math:`a_2(a_1)` for :math:`1/35 < a_1` (float)."""
	a1 = float(a1)
	return (3 * a1 + 1 - 4 * math.sqrt(a1 * a1 + a1)) / (1 - a1)


def branch_junction():
	"""
	:returns: the exact point where both boundary branches meet, the
	          topmost point of the region
	:raises StructuralError: if the branches disagree there
	"""
	a1 = BRANCH_JUNCTION_A1
	first = (-a1 - 5 + exact_sqrt(a1 * a1 + 34 * a1 + 33)) / (2 - 2 * a1)
	second = (3 * a1 + 1 - 4 * exact_sqrt(a1 * a1 + a1)) / (1 - a1)
	if first != second:
		raise StructuralError('boundary branches disagree at a1 = 1/35')
	return a1, first


def boundary_curves(samples=200):
	"""
	:returns: two lists of float ``(a1, a2)`` samples, the first branch on
	          :math:`(0, 1/35]` and the second on
	          :math:`[1/35, (6\\sqrt5 - 13)/11]`
	"""
	junction = float(BRANCH_JUNCTION_A1)
	first = [(junction * i / samples, first_branch(junction * i / samples))
		for i in range(1, samples + 1)]
	span = SECOND_BRANCH_LIMIT - junction
	second = [(junction + span * i / samples, second_branch(junction + span * i / samples))
		for i in range(samples + 1)]
	return first, second


GridSpec = collections.namedtuple('GridSpec', 'start end steps')


def parse_grid(text):
	"""Parses ``start:end:steps`` with exact rational endpoints.

	>>> parse_grid('0:0.06:600').end
	Fraction(3, 50)
	"""
	try:
		start, end, steps = str(text).split(':')
		spec = GridSpec(parse_scalar(start), parse_scalar(end), int(steps))
	except (ValueError, ZeroDivisionError):
		raise ValueError('grid spec must look like start:end:steps, got %r' % (text,))
	if spec.steps < 1 or spec.end < spec.start:
		raise ValueError('grid spec %r is empty' % (text,))
	return spec


def grid_nodes(spec):
	step = (spec.end - spec.start) / spec.steps
	return [spec.start + i * step for i in range(spec.steps + 1)]


def in_region(a1, a2):
	"""Like :func:`corollary_region`, but ``False`` outside its domain."""
	if not (0 < a1 < ONE_THIRD < a2 < 1):
		return False
	first, second = _region_quantities(a1, a2)
	return first >= 0 and second >= 0


def _scan_row(args):
	a1, column = args
	return [in_region(a1, a2) for a2 in column]


class RegionScan(object):
	"""A grid of exact region decisions plus float boundary samples."""

	def __init__(self, a1_nodes, a2_nodes, cells, samples=200):
		self.a1_nodes = a1_nodes
		self.a2_nodes = a2_nodes
		self.cells = cells
		self.apex = branch_junction()
		self.first_branch, self.second_branch = boundary_curves(samples)

	def rows(self):
		for i, a1 in enumerate(self.a1_nodes):
			for j, a2 in enumerate(self.a2_nodes):
				yield a1, a2, self.cells[i][j]

	def region_points(self):
		return [(a1, a2) for a1, a2, inside in self.rows() if inside]

	def to_csv(self):
		output = io.StringIO()
		writer = csv.writer(output, lineterminator='\n')
		writer.writerow(['a1', 'a2', 'in_region'])
		for a1, a2, inside in self.rows():
			writer.writerow([format_scalar(a1), format_scalar(a2), int(inside)])
		return output.getvalue()


def region_scan(a1_spec, a2_spec, workers=1, samples=200):
	"""Evaluates :func:`in_region` on a rational grid, one task per
	:math:`a_1` row; rows are collected in grid order.

	:rtype: RegionScan
	"""
	if not isinstance(a1_spec, GridSpec):
		a1_spec = parse_grid(a1_spec)
	if not isinstance(a2_spec, GridSpec):
		a2_spec = parse_grid(a2_spec)
	a1_nodes, a2_nodes = grid_nodes(a1_spec), grid_nodes(a2_spec)
	tasks = [(a1, a2_nodes) for a1 in a1_nodes]
	if workers > 1:
		with ProcessPoolExecutor(max_workers=workers) as executor:
			cells = list(executor.map(_scan_row, tasks))
	else:
		cells = [_scan_row(task) for task in tasks]
	logger.info('region scan: %d x %d nodes', len(a1_nodes), len(a2_nodes))
	return RegionScan(a1_nodes, a2_nodes, cells, samples)
