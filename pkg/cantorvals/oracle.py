# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

"""Brute-force ground truth at finite depth.

:func:`enumerate_difference` brings all endpoints of the depth-`n`
intervals over one common denominator, so the sweep runs on integers.
The codes are split into a prefix and a suffix part: the suffix sums
are generated and swept once, then shifted by every prefix sum.  Prefix
chunks are merged independently (optionally in worker processes) and
the partial unions are merged again in chunk order.
"""

import csv
import functools
import io
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from cantorvals.classify import condition_star, condition_fn
from cantorvals.common import DEFAULT_SETTINGS, format_scalar
from cantorvals.errors import (CertificateMissing, DepthCapExceeded,
	PreconditionError, StructuralError)
from cantorvals.gapcalc import boundary_family
from cantorvals.geometry import (Interval, IntervalUnion, TernaryCode,
	interval_J, sweep)

logger = logging.getLogger(__name__)


def _lcm(a, b):
	return a * b // math.gcd(a, b)


def _digit_sums(weights, start=0):
	sums = [start]
	for weight in weights:
		double = 2 * weight
		sums = [value + step for value in sums for step in (0, weight, double)]
	return sums


def _merge_chunk(task):
	suffix, offsets = task
	pairs = [(left + offset, right + offset) for offset in offsets for left, right in suffix]
	pairs.sort()
	return [tuple(part) for part in sweep(pairs)]


class DepthSlice(object):
	"""The union :math:`C_n(a) - C_n(a)` at depth `n`, kept as integer
	endpoints over the common denominator :attr:`scale`.
	"""

	def __init__(self, depth, scale, bounds):
		self.depth = depth
		self.scale = scale
		self.bounds = bounds

	@property
	def union(self):
		try:
			return self._union
		except AttributeError:
			self._union = IntervalUnion.from_merged(
				tuple((Fraction(l, self.scale), Fraction(r, self.scale)) for l, r in self.bounds))
			return self._union

	@property
	def gaps(self):
		return [Interval.open(Fraction(self.bounds[i][1], self.scale),
			Fraction(self.bounds[i + 1][0], self.scale)) for i in range(len(self.bounds) - 1)]

	@property
	def gap_count(self):
		return len(self.bounds) - 1

	@property
	def total_measure(self):
		return Fraction(sum(r - l for l, r in self.bounds), self.scale)

	def component_at(self, x):
		"""
		:returns: the component containing `x` as an Interval, or ``None``
		"""
		scaled = Fraction(x) * self.scale
		for left, right in self.bounds:
			if left <= scaled <= right:
				return Interval(Fraction(left, self.scale), Fraction(right, self.scale))
			if left > scaled:
				break
		return None

	def longest_component(self):
		return Fraction(max(r - l for l, r in self.bounds), self.scale)

	def to_json(self, emit='slice'):
		if emit == 'measure':
			return {'depth': self.depth, 'measure': format_scalar(self.total_measure)}
		data = {'depth': self.depth, 'measure': format_scalar(self.total_measure),
			'gaps': [gap.to_json() for gap in self.gaps]}
		if emit == 'slice':
			data['parts'] = self.union.to_json()
		return data

	def to_csv(self):
		"""One row per component and per gap, in left-to-right order."""
		output = io.StringIO()
		writer = csv.writer(output, lineterminator='\n')
		writer.writerow(['kind', 'l', 'r'])
		for i, (left, right) in enumerate(self.bounds):
			if i:
				writer.writerow(['gap', format_scalar(Fraction(self.bounds[i - 1][1], self.scale)),
					format_scalar(Fraction(left, self.scale))])
			writer.writerow(['part', format_scalar(Fraction(left, self.scale)),
				format_scalar(Fraction(right, self.scale))])
		return output.getvalue()


def enumerate_difference(seq, depth, workers=None, cap=None, root=()):
	"""Enumerates the :math:`3^{depth}` intervals :math:`J_s` (only those
	extending `root` if given) and merges them.

	:param workers: number of worker processes; 1 merges in-process
	:param cap: largest admissible depth
	:rtype: DepthSlice
	:raises DepthCapExceeded: when `depth` exceeds `cap`
	"""
	cap = DEFAULT_SETTINGS['depth_cap'] if cap is None else cap
	workers = workers or DEFAULT_SETTINGS['workers']
	root = TernaryCode(root)
	if depth > cap:
		raise DepthCapExceeded('depth %d exceeds the cap %d' % (depth, cap))
	if depth < len(root):
		raise PreconditionError('depth %d is shorter than the root %s' % (depth, root))
	fractions = [seq.weight(i) for i in range(1, depth + 1)] + [seq.d(depth)]
	scale = functools.reduce(_lcm, (value.denominator for value in fractions), 1)
	weights = [int(w * scale) for w in fractions[:-1]]
	length = int(2 * fractions[-1] * scale)
	start = -scale + sum(digit * weights[i] for i, digit in enumerate(root))

	free = weights[len(root):]
	split = len(free) // 2
	suffix_sums = _digit_sums(free[split:])
	suffix_sums.sort()
	suffix = [tuple(part) for part in sweep((value, value + length) for value in suffix_sums)]
	offsets = sorted(_digit_sums(free[:split], start))

	chunk_count = max(1, min(workers, len(offsets)))
	size = -(-len(offsets) // chunk_count)
	tasks = [(suffix, offsets[i:i + size]) for i in range(0, len(offsets), size)]
	if chunk_count > 1:
		with ProcessPoolExecutor(max_workers=chunk_count) as executor:
			partial = list(executor.map(_merge_chunk, tasks))
	else:
		partial = [_merge_chunk(task) for task in tasks]
	if len(partial) == 1:
		bounds = partial[0]
	else:
		pairs = [pair for chunk in partial for pair in chunk]
		pairs.sort()
		bounds = [tuple(part) for part in sweep(pairs)]
	logger.debug('depth %d: %d components over denominator %d (%d chunks)',
		depth, len(bounds), scale, len(tasks))
	return DepthSlice(depth, scale, bounds)


def measure_at_depth(seq, ranks, N, workers=None, cap=None):
	""":returns: the measure of the depth-:math:`k_N` union"""
	return enumerate_difference(seq, ranks.k(N), workers, cap).total_measure


def contains(seq, depth, x):
	"""Membership in :math:`C_n(a) - C_n(a)` by branch and bound: only
	prefixes whose interval still contains `x` are extended.

	:rtype: bool
	"""
	x = Fraction(x)
	if not -1 <= x <= 1:
		return False
	lefts = {Fraction(-1)}
	for r in range(1, depth + 1):
		weight, length = seq.weight(r), 2 * seq.d(r)
		lefts = {left + step * weight for left in lefts for step in (0, 1, 2)
			if left + step * weight <= x <= left + step * weight + length}
		if not lefts:
			return False
	return True


def origin_interior_radius(seq, depth, workers=None, cap=None):
	"""
	:returns: the largest :math:`\\varepsilon` with
	          :math:`(-\\varepsilon, \\varepsilon)` inside the depth-`n`
	          union
	"""
	component = enumerate_difference(seq, depth, workers, cap).component_at(0)
	return min(-component.left, component.right)


def conjecture_probe(seq, depths, workers=None, cap=None):
	"""Finite-depth evidence about interior points: for each depth the
	origin radius and the longest component.
	"""
	probe = []
	for depth in depths:
		depth_slice = enumerate_difference(seq, depth, workers, cap)
		component = depth_slice.component_at(0)
		probe.append({
			'depth': depth,
			'radius': format_scalar(min(-component.left, component.right)),
			'longest_component': format_scalar(depth_slice.longest_component()),
			'gaps': depth_slice.gap_count,
		})
	return probe


def certificate(seq, ranks=None):
	"""
	:returns: the name of the condition certifying a Cantorval
	:raises CertificateMissing: when neither condition holds
	"""
	for name, check in (('main-star', condition_star), ('fn-equality', condition_fn)):
		try:
			report = check(seq, ranks)
		except PreconditionError:
			continue
		if report.holds and report.reduced:
			return name
	raise CertificateMissing('no Cantorval certificate for %r' % (seq,))


class ContainmentReport(object):
	"""Whether :math:`J_t` minus its boundary-family gaps is covered by
	the depth-:math:`k_N` intervals extending `t`.
	"""

	def __init__(self, t, N, certificate, uncovered, removed):
		self.t = t
		self.N = N
		self.certificate = certificate
		self.uncovered = uncovered
		self.removed = removed

	@property
	def covered(self):
		return not self.uncovered

	def to_json(self):
		return {'t': str(self.t), 'rank': self.N, 'certificate': self.certificate,
			'removed_gaps': self.removed, 'covered': self.covered,
			'uncovered': [piece.to_json() for piece in self.uncovered]}


def verify_containment(seq, ranks, t, N, workers=None, cap=None):
	"""
	:rtype: ContainmentReport
	:raises CertificateMissing: without a Cantorval certificate
	"""
	name = certificate(seq, ranks)
	t = TernaryCode(t)
	left_family, right_family = boundary_family(seq, ranks, t, N)
	holes = left_family.intervals(seq) + right_family.intervals(seq)
	target = IntervalUnion([interval_J(seq, t)]).subtract_open(holes)
	cover = enumerate_difference(seq, ranks.k(N), workers, cap, root=t).union
	uncovered = target.uncovered(cover)
	if uncovered:
		logger.warning('J_%s: %d pieces not covered at rank %d', t, len(uncovered), N)
	return ContainmentReport(t, N, name, uncovered, len(holes))


class CatalogReport(object):
	"""Comparison of the depth-:math:`k_N` gaps with the boundary-family
	gaps of :math:`J_\\emptyset` up to rank `N`.
	"""

	def __init__(self, N, oracle_count, family_count, expected_count, missing, unexpected):
		self.N = N
		self.oracle_count = oracle_count
		self.family_count = family_count
		self.expected_count = expected_count
		self.missing = missing
		self.unexpected = unexpected

	@property
	def matches(self):
		return (not self.missing and not self.unexpected
			and self.oracle_count == self.family_count == self.expected_count)

	def raise_for_mismatch(self):
		if self.matches:
			return
		offending = [repr(ref) for ref in self.missing] + [str(gap) for gap in self.unexpected]
		raise StructuralError('gap catalog mismatch at rank %d (%d oracle, %d family, '
			'%d expected): %s' % (self.N, self.oracle_count, self.family_count,
			self.expected_count, ', '.join(offending[:10]) or 'counts differ'))

	def to_json(self):
		return {'rank': self.N, 'matches': self.matches,
			'oracle_count': self.oracle_count, 'family_count': self.family_count,
			'expected_count': self.expected_count,
			'missing': [ref.to_json() for ref in self.missing],
			'unexpected': [gap.to_json() for gap in self.unexpected]}


def gap_catalog_crosscheck(seq, ranks, N, workers=None, cap=None):
	"""
	:rtype: CatalogReport
	:raises CertificateMissing: without a Cantorval certificate
	"""
	certificate(seq, ranks)
	if ranks.k0 != 0:
		raise PreconditionError('the gap catalog is defined for k0 = 0')
	depth_slice = enumerate_difference(seq, ranks.k(N), workers, cap)
	oracle = set(gap.pair() for gap in depth_slice.gaps)
	left_family, right_family = boundary_family(seq, ranks, (), N)
	family_gaps = {}
	for ref in left_family.gaps() + right_family.gaps():
		family_gaps[ref.interval(seq).pair()] = ref
	missing = [family_gaps[pair] for pair in sorted(set(family_gaps) - oracle)]
	unexpected = [Interval.open(*pair) for pair in sorted(oracle - set(family_gaps))]
	expected = sum(2 * 3 ** (n - 1) for n in range(1, N + 1))
	return CatalogReport(N, len(oracle), len(family_gaps), expected, missing, unexpected)
