# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

"""Named structural checks, each returning a :class:`CheckResult`.

The interval calculus checks run on any sequence; the gap family checks
need rank indices, and the disjointness of associated families is only
asserted where condition (*) holds.  :func:`run_suite` runs everything
on a list of sequences and collects the results.
"""

import collections
import json
import logging
import random
from fractions import Fraction

from cantorvals.classify import condition_star
from cantorvals.common import ONE_THIRD, format_scalar
from cantorvals.errors import CantorvalsError, PreconditionError
from cantorvals.gapcalc import (GapRef, associated_pairs, boundary_family,
	covering_check, extremal_sequence, family, last_index)
from cantorvals.geometry import (children, codes, difference_union, gap,
	interval_J, overlap, refine_invariance_check, sumset_union)
from cantorvals.oracle import (certificate, contains, enumerate_difference,
	gap_catalog_crosscheck, verify_containment)
from cantorvals.params import ParamSequence, rank_indices

logger = logging.getLogger(__name__)


class CheckResult(collections.namedtuple('CheckResult', 'name passed detail')):
	"""``passed`` is ``None`` for a skipped check."""
	__slots__ = ()

	@property
	def skipped(self):
		return self.passed is None

	@property
	def failed(self):
		return self.passed is False

	def to_json(self):
		status = 'skipped' if self.skipped else ('pass' if self.passed else 'fail')
		return {'name': self.name, 'status': status, 'detail': self.detail}


def _result(name, failures, checked):
	if failures:
		return CheckResult(name, False, '%d of %d failed, first: %s'
			% (len(failures), checked, failures[0]))
	return CheckResult(name, True, '%d checked' % checked)


def _skipped(name, reason):
	return CheckResult(name, None, 'skipped: %s' % reason)


# Interval calculus

def check_interval_lengths(seq, depth):
	failures = []
	checked = 0
	for n in range(depth + 1):
		for s in codes(n):
			checked += 1
			if interval_J(seq, s).length != 2 * seq.d(n):
				failures.append(str(s))
	return _result('interval-length', failures, checked)


def check_endpoint_anchors(seq, depth):
	failures = []
	checked = 0
	for n in range(depth):
		for s in codes(n):
			parent = interval_J(seq, s)
			for k in range(1, depth - n + 1):
				checked += 1
				if (interval_J(seq, s.pad(0, k)).left != parent.left
						or interval_J(seq, s.pad(1, k)).center != parent.center
						or interval_J(seq, s.pad(2, k)).right != parent.right):
					failures.append('%s+%d' % (s, k))
	return _result('endpoint-anchors', failures, checked)


def check_weights_decreasing(seq, depth):
	weights = [seq.weight(n) for n in range(1, depth + 2)]
	failures = [str(n) for n in range(1, len(weights)) if not weights[n] < weights[n - 1]]
	failures += [str(n) for n in range(1, depth + 2) if not seq.d(n) < seq.d(n - 1) / 2]
	return _result('weights-decreasing', failures, 2 * depth + 1)


def check_endpoint_differences(seq, depth, rng, pairs=50):
	failures = []
	for _ in range(pairs):
		s = [rng.randrange(3) for _ in range(depth)]
		u = [rng.randrange(3) for _ in range(depth)]
		expected = sum(((a - b) * seq.weight(r) for r, (a, b) in enumerate(zip(s, u), 1)),
			Fraction(0))
		if interval_J(seq, s).left - interval_J(seq, u).left != expected:
			failures.append('%s/%s' % (''.join(map(str, s)), ''.join(map(str, u))))
	return _result('endpoint-differences', failures, pairs)


def check_children(seq, depth):
	"""Children agree with the closed form; gaps and overlaps have the
	expected widths and the children tile the parent otherwise.
	"""
	failures = []
	checked = 0
	for n in range(depth):
		width = seq.d(n) - 3 * seq.d(n + 1)
		for s in codes(n):
			checked += 1
			triple = children(seq, s)
			if triple != tuple(interval_J(seq, s.extend(j)) for j in range(3)):
				failures.append('children of %s' % s)
				continue
			if seq.ratio(n + 1) > ONE_THIRD:
				if any(gap(seq, s, side).length != width for side in (0, 1)):
					failures.append('gap width at %s' % s)
			elif any(overlap(seq, s, side).length != -width for side in (0, 1)):
				failures.append('overlap width at %s' % s)
	return _result('children', failures, checked)


def check_refine_invariance(seq, depth):
	failures = []
	checked = 0
	for n in range(depth):
		k = 0
		while n + k < depth and seq.ratio(n + k + 1) <= ONE_THIRD:
			k += 1
		if k:
			checked += 1
			if not refine_invariance_check(seq, n, k):
				failures.append('%d+%d' % (n, k))
	return _result('refine-invariance', failures, checked)


def check_nesting_and_symmetry(seq, depth):
	failures = []
	previous = None
	for n in range(depth + 1):
		union = difference_union(seq, n)
		if union.negate() != union:
			failures.append('asymmetric at depth %d' % n)
		if previous is not None and not union.issubset(previous):
			failures.append('depth %d escapes depth %d' % (n, n - 1))
		previous = union
	return _result('nesting-symmetry', failures, depth + 1)


def check_sumset_shift(seq, depth):
	depth = min(depth, 5)
	failures = [str(n) for n in range(depth + 1)
		if difference_union(seq, n).shift(1) != sumset_union(seq, n)]
	return _result('sumset-shift', failures, depth + 1)


def check_oracle_agreement(seq, depth, rng, points=200):
	"""The integer sweep matches direct enumeration, and branch-and-bound
	membership matches the sweep on random rational points.
	"""
	depth_slice = enumerate_difference(seq, depth)
	union = depth_slice.union
	failures = []
	if union != difference_union(seq, depth):
		failures.append('sweep differs from direct enumeration at depth %d' % depth)
	for _ in range(points):
		denominator = rng.randint(1, 500)
		x = Fraction(rng.randint(-denominator, denominator), denominator)
		if contains(seq, depth, x) != union.contains_point(x):
			failures.append('membership of %s' % format_scalar(x))
	if depth_slice.total_measure != 2 - sum((g.length for g in depth_slice.gaps), Fraction(0)):
		failures.append('measure is not 2 minus the gap lengths')
	return _result('oracle-agreement', failures, points + 2)


# Gap families

def _rank_span_codes(ranks, m):
	for k in range(ranks.k(m - 1), ranks.k(m)):
		for s in codes(k):
			yield s, k


def check_extremal_sequences(seq, ranks, rank_span):
	"""Monotonicity and closed-form endpoints of the extremal gap sequences."""
	failures = []
	checked = 0
	for m in (1, 2):
		for s, k in _rank_span_codes(ranks, m):
			j_s = interval_J(seq, s)
			left = [extremal_sequence(seq, ranks, s, 0, n).interval(seq)
				for n in range(m, m + rank_span + 1)]
			right = [extremal_sequence(seq, ranks, s, 1, n).interval(seq)
				for n in range(m, m + rank_span + 1)]
			total = Fraction(0)
			for offset, n in enumerate(range(m, m + rank_span + 1)):
				checked += 1
				step = seq.weight(ranks.k(n))
				total += step
				if left[offset].right != j_s.left + total or right[offset].left != j_s.right - total:
					failures.append('endpoints of %s at rank %d' % (s, n))
				if offset and not (left[offset].left > left[offset - 1].left
						and left[offset].right - left[offset - 1].right == step
						and right[offset].right < right[offset - 1].right
						and right[offset - 1].left - right[offset].left == step):
					failures.append('monotonicity of %s at rank %d' % (s, n))
	return _result('extremal-sequences', failures, checked)


def _inside(inner, outer_left, outer_right):
	return outer_left <= inner.left and inner.right <= outer_right


def check_family_bounds(seq, ranks, rank_span):
	"""The strict orderings around :math:`G^i_s` and the two-sided
	localisation of every family member.
	"""
	failures = []
	checked = 0
	for m in (1, 2):
		for s in codes(ranks.k(m) - 1):
			families = [family(seq, ranks, s, i, m + rank_span) for i in (0, 1)]
			own = [gap(seq, s, i) for i in (0, 1)]
			for n in range(m + 1, m + rank_span + 1):
				low = dict((i, extremal_sequence(seq, ranks, s, i, n).interval(seq)) for i in (0, 1))
				low0 = dict((i, extremal_sequence(seq, ranks, s.extend(0), i, n).interval(seq))
					for i in (0, 1))
				low2 = dict((i, extremal_sequence(seq, ranks, s.extend(2), i, n).interval(seq))
					for i in (0, 1))
				checked += 1
				if not low0[1].right < own[0].left < own[0].right < low[0].left:
					failures.append('left ordering of %s at rank %d' % (s, n))
				if not low[1].right < own[1].left < own[1].right < low2[0].left:
					failures.append('right ordering of %s at rank %d' % (s, n))
				for member in [ref.interval(seq) for ref in families[0].by_rank[n]]:
					checked += 1
					if not (member.right <= low0[0].right
							or _inside(member, low0[1].left, low[0].right)):
						failures.append('side-0 member %s of %s at rank %d' % (member, s, n))
				for member in [ref.interval(seq) for ref in families[1].by_rank[n]]:
					checked += 1
					if not (member.left >= low2[1].left
							or _inside(member, low[1].left, low2[0].right)):
						failures.append('side-1 member %s of %s at rank %d' % (member, s, n))
	return _result('family-bounds', failures, checked)


def check_outside_family_index(seq, ranks, rank_span):
	"""A rank-`n` gap below `t` that is not in the boundary family of `t`
	has its last index beyond :math:`|t|`.
	"""
	failures = []
	checked = 0
	for k in range(ranks.k0, ranks.k(1) + 1):
		m = ranks.rank_for_length(k)
		top = m + max(rank_span - 1, 0)
		for t in codes(k):
			left_family, right_family = boundary_family(seq, ranks, t, top)
			members = set(left_family.gaps() + right_family.gaps())
			for n in range(m, top + 1):
				for tail in codes(ranks.k(n) - 1 - k):
					s = t + tail
					for i in (0, 1):
						checked += 1
						if GapRef(s, i, n) not in members and last_index(s, i) <= k:
							failures.append('G^%d_%s below %s' % (i, s, t))
	return _result('outside-family-index', failures, checked)


def check_covering(seq, ranks):
	try:
		certificate(seq, ranks)
	except PreconditionError as exc:
		return _skipped('covering', str(exc))
	failures = []
	checked = 0
	for n in (1, 2):
		for s, u in associated_pairs(ranks, n):
			checked += 1
			if not covering_check(seq, ranks, s, u).holds:
				failures.append('%s/%s' % (s, u))
	return _result('covering', failures, checked)


def _disjoint(first, second):
	return not any(a.intersects(b) for a in first for b in second)


def check_associated_disjointness(seq, ranks, rank_span):
	try:
		report = condition_star(seq, ranks)
	except PreconditionError as exc:
		return _skipped('associated-disjointness', str(exc))
	if not (report.holds and report.reduced):
		return _skipped('associated-disjointness', 'condition (*) does not hold')
	failures = []
	checked = 0
	for n in (1, 2):
		for s, u in associated_pairs(ranks, n):
			checked += 1
			top = n + rank_span
			g, d = [family(seq, ranks, s, i, top).intervals(seq) for i in (0, 1)]
			f, h = [family(seq, ranks, u, i, top).intervals(seq) for i in (0, 1)]
			if not (_disjoint(g, h) and _disjoint(d, h) and _disjoint(g, f)
					and _disjoint(d, f)):
				failures.append('%s/%s' % (s, u))
	return _result('associated-disjointness', failures, checked)


def _largest_rank(ranks, depth):
	N = 0
	while ranks.k(N + 1) <= depth:
		N += 1
	return N


def check_containment(seq, ranks, depth):
	try:
		certificate(seq, ranks)
	except PreconditionError as exc:
		return _skipped('containment', str(exc))
	N = _largest_rank(ranks, depth)
	if N < 1:
		return _skipped('containment', 'k_1 exceeds depth %d' % depth)
	failures = []
	roots = [t for length in (ranks.k0, ranks.k0 + 1) for t in codes(length)
		if ranks.rank_for_length(length) <= N]
	for t in roots:
		report = verify_containment(seq, ranks, t, N)
		if not report.covered:
			failures.append('J_%s: %s' % (report.t, ', '.join(map(str, report.uncovered[:3]))))
	return _result('containment', failures, len(roots))


def check_gap_catalog(seq, ranks, depth):
	try:
		certificate(seq, ranks)
	except PreconditionError as exc:
		return _skipped('gap-catalog', str(exc))
	if ranks.k0 != 0:
		return _skipped('gap-catalog', 'k0 = %d' % ranks.k0)
	N = _largest_rank(ranks, depth)
	if N < 1:
		return _skipped('gap-catalog', 'k_1 exceeds depth %d' % depth)
	report = gap_catalog_crosscheck(seq, ranks, N)
	if report.matches:
		return CheckResult('gap-catalog', True, '%d gaps up to rank %d' % (report.oracle_count, N))
	try:
		report.raise_for_mismatch()
	except CantorvalsError as exc:
		return CheckResult('gap-catalog', False, str(exc))


# Suites

def random_sequence(rng, max_denominator=40):
	"""A random eventually periodic sequence with small rational entries."""
	def entry():
		denominator = rng.randint(2, max_denominator)
		return Fraction(rng.randint(1, denominator - 1), denominator)
	prefix = [entry() for _ in range(rng.randint(0, 2))]
	period = [entry() for _ in range(rng.randint(1, 3))]
	return ParamSequence(prefix, period)


def interval_checks(seq, depth, rng):
	return [
		check_interval_lengths(seq, depth),
		check_endpoint_anchors(seq, depth),
		check_weights_decreasing(seq, depth),
		check_endpoint_differences(seq, depth, rng),
		check_children(seq, depth),
		check_refine_invariance(seq, depth),
		check_nesting_and_symmetry(seq, depth),
		check_sumset_shift(seq, depth),
		check_oracle_agreement(seq, depth, rng),
	]


def family_checks(seq, depth, rank_span):
	try:
		ranks = rank_indices(seq)
	except PreconditionError as exc:
		return [_skipped(name, str(exc)) for name in ('extremal-sequences',
			'family-bounds', 'outside-family-index', 'covering',
			'associated-disjointness', 'containment', 'gap-catalog')]
	return [
		check_extremal_sequences(seq, ranks, rank_span),
		check_family_bounds(seq, ranks, rank_span),
		check_outside_family_index(seq, ranks, rank_span),
		check_covering(seq, ranks),
		check_associated_disjointness(seq, ranks, rank_span),
		check_containment(seq, ranks, depth),
		check_gap_catalog(seq, ranks, depth),
	]


class SuiteReport(object):

	def __init__(self, entries):
		#: list of ``(seq, [CheckResult, ...])``
		self.entries = entries

	@property
	def failures(self):
		return [(seq, result) for seq, results in self.entries
			for result in results if result.failed]

	@property
	def passed(self):
		return not self.failures

	def to_json(self):
		return {
			'passed': self.passed,
			'sequences': [{'seq': seq.to_json(), 'checks': [r.to_json() for r in results]}
				for seq, results in self.entries],
		}

	def dumps(self):
		return json.dumps(self.to_json(), indent=2, sort_keys=True)


def run_suite(sequences, depth=6, rank_span=3, random_count=0, seed=0):
	"""Runs every check on each sequence, plus the interval calculus checks
	on `random_count` random sequences.

	:rtype: SuiteReport
	"""
	rng = random.Random(seed)
	entries = []
	for seq in sequences:
		results = interval_checks(seq, depth, rng) + family_checks(seq, depth, rank_span)
		entries.append((seq, results))
	for _ in range(random_count):
		seq = random_sequence(rng)
		entries.append((seq, interval_checks(seq, depth, rng)))
	report = SuiteReport(entries)
	for seq, result in report.failures:
		logger.error('%r: %s failed (%s)', seq, result.name, result.detail)
	return report
