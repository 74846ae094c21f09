# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

"""Gap taxonomy: last indices, extremal gaps, the recursive gap families,
the boundary family of an interval, extremal gap sequences and the
associated (covering) intervals.

A gap of rank `n` is addressed by a code of length :math:`k_n - 1` and
a side; its interval is :func:`cantorvals.geometry.gap`.
"""

import functools
import logging
from fractions import Fraction

from cantorvals.classify import margin_m
from cantorvals.common import format_scalar
from cantorvals.errors import (MisalignedCode, NoAssociate, NotAssociated,
	NotEventuallyPeriodic, RankTooSmall, StructuralError)
from cantorvals.geometry import TernaryCode, codes, gap, interval_J
from cantorvals.params import tail_weight_sum

logger = logging.getLogger(__name__)


@functools.total_ordering
class GapRef(object):
	"""Reference to the gap :math:`G^{side}_{code}` of the given rank."""

	__slots__ = ('code', 'side', 'rank')

	def __init__(self, code, side, rank):
		self.code = TernaryCode(code)
		self.side = side
		self.rank = rank

	@property
	def key(self):
		return (tuple(self.code), self.side)

	def interval(self, seq):
		return gap(seq, self.code, self.side)

	def to_json(self, seq=None):
		data = {'code': str(self.code), 'side': self.side, 'rank': self.rank}
		if seq is not None:
			interval = self.interval(seq)
			data['l'] = format_scalar(interval.left)
			data['r'] = format_scalar(interval.right)
		return data

	def __eq__(self, other):
		if not isinstance(other, GapRef):
			return NotImplemented
		return self.key == other.key

	def __lt__(self, other):
		return self.key < other.key

	def __hash__(self):
		return hash(self.key)

	def __repr__(self):
		return 'GapRef(%r, %d, rank=%d)' % (str(self.code), self.side, self.rank)


class GapFamily(object):
	"""Gaps of a family rooted at ``origin = (code, side)``, by rank."""

	def __init__(self, origin, by_rank):
		self.origin = origin
		self.by_rank = by_rank

	@property
	def ranks(self):
		return sorted(self.by_rank)

	def gaps(self, up_to=None):
		result = []
		for rank in self.ranks:
			if up_to is None or rank <= up_to:
				result.extend(self.by_rank[rank])
		return result

	def count(self, rank):
		return len(self.by_rank.get(rank, ()))

	def intervals(self, seq, up_to=None):
		return [ref.interval(seq) for ref in self.gaps(up_to)]

	def to_json(self, seq):
		return {
			'origin': {'code': str(self.origin[0]), 'side': self.origin[1]},
			'ranks': dict((str(rank), [ref.to_json(seq) for ref in self.by_rank[rank]])
				for rank in self.ranks),
		}


def last_index(s, i):
	"""
	:returns: :math:`N(0, s) = \\max\\{j : s_j > 0\\}` for ``i == 0``,
	          :math:`N(1, s) = \\max\\{j : s_j < 2\\}` for ``i == 1``;
	          0 when no such `j` exists
	"""
	test = (lambda digit: digit > 0) if i == 0 else (lambda digit: digit < 2)
	for j in range(len(s), 0, -1):
		if test(s[j - 1]):
			return j
	return 0


def extremal_gap(seq, ranks, t, n, side):
	"""
	:returns: the leftmost (side 0) or rightmost (side 1) gap of rank `n`
	          inside :math:`J_t`
	:raises RankTooSmall: when :math:`k_n \\le |t|`
	"""
	t = TernaryCode(t)
	k = ranks.k(n)
	if k <= len(t):
		raise RankTooSmall('k_%d = %d does not exceed |t| = %d' % (n, k, len(t)))
	return GapRef(t.pad(2 * side, k - len(t) - 1), side, n)


def _family_rank(ranks, s):
	m = ranks.rank_of_index(len(s) + 1)
	if m is None:
		raise MisalignedCode('|%s| = %d is not k_m - 1 for any rank m' % (s, len(s)))
	return m


def family(seq, ranks, s, i, up_to_rank):
	"""Builds the gap family :math:`\\mathcal{G}^i_s` up to the given rank.

	The family of rank `m` is :math:`\\{G^i_s\\}`; rank `n + 1` holds the
	extremal gap on side `i` of :math:`J_s` and, for each member
	:math:`G^j_t` of an earlier rank, the gaps
	:math:`\\bar G^1_{t j}(n+1)` and :math:`\\bar G^0_{t (j+1)}(n+1)`.

	:raises MisalignedCode: unless :math:`|s| = k_m - 1` for some `m`
	:raises StructuralError: if a rank does not hold exactly
	                         :math:`3^{n-m}` distinct gaps
	"""
	s = TernaryCode(s)
	m = _family_rank(ranks, s)
	if up_to_rank < m:
		raise RankTooSmall('family of rank %d requested up to rank %d' % (m, up_to_rank))
	by_rank = {m: [GapRef(s, i, m)]}
	for n in range(m, up_to_rank):
		members = {}
		spawned = [extremal_gap(seq, ranks, s, n + 1, i)]
		for earlier in range(m, n + 1):
			for parent in by_rank[earlier]:
				j = parent.side
				spawned.append(extremal_gap(seq, ranks, parent.code.extend(j), n + 1, 1))
				spawned.append(extremal_gap(seq, ranks, parent.code.extend(j + 1), n + 1, 0))
		for ref in spawned:
			members[ref.key] = ref
		expected = 3 ** (n + 1 - m)
		if len(members) != expected:
			raise StructuralError('family G^%d_%s has %d gaps of rank %d, expected %d'
				% (i, s, len(members), n + 1, expected))
		by_rank[n + 1] = sorted(members.values())
	return GapFamily((s, i), by_rank)


def boundary_family(seq, ranks, t, up_to_rank):
	"""
	:returns: the pair of families rooted at :math:`t 0^{(k_m-k-1)}` (side 0)
	          and :math:`t 2^{(k_m-k-1)}` (side 1), where
	          :math:`k_{m-1} \\le |t| < k_m`
	"""
	t = TernaryCode(t)
	m = ranks.rank_for_length(len(t))
	padding = ranks.k(m) - len(t) - 1
	return (family(seq, ranks, t.pad(0, padding), 0, up_to_rank),
		family(seq, ranks, t.pad(2, padding), 1, up_to_rank))


def family_gap_mass(seq, ranks, N):
	"""
	:returns: :math:`\\sum_{n \\le N} 2 \\cdot 3^{n-1} (d_{k_n-1} - 3 d_{k_n})`,
	          the total length of the boundary-family gaps of
	          :math:`J_\\emptyset` up to rank `N`
	"""
	return sum((2 * 3 ** (n - 1) * (seq.d(ranks.k(n) - 1) - 3 * seq.d(ranks.k(n)))
		for n in range(1, N + 1)), Fraction(0))


def extremal_sequence(seq, ranks, s, i, n):
	"""
	:returns: :math:`G^i(s, n)`: the code
	          :math:`s\\,c^{(k_m-k-1)}\\,1\\,c^{(k_{m+1}-k_m-1)}\\,1 \\dots c^{(k_n-k_{n-1}-1)}`
	          with :math:`c = 2i`, on side `i`, of rank `n`
	:raises RankTooSmall: when `n` is below the rank `m` of `s`
	"""
	s = TernaryCode(s)
	m = ranks.rank_for_length(len(s))
	if n < m:
		raise RankTooSmall('rank %d is below the rank %d of %s' % (n, m, s))
	pad = 2 * i
	code = s.pad(pad, ranks.k(m) - len(s) - 1)
	for j in range(m + 1, n + 1):
		code = code.extend(1).pad(pad, ranks.k(j) - ranks.k(j - 1) - 1)
	return GapRef(code, i, n)


def associate(ranks, s):
	"""
	:returns: :math:`u = (s|N-1)\\,(s_N - 1)\\,2^{(k_m-N-1)}` with
	          :math:`N = N(0, s)`
	:raises NoAssociate: unless :math:`k_{m-1} < N < k_m`
	"""
	s = TernaryCode(s)
	m = _family_rank(ranks, s)
	N = last_index(s, 0)
	if not ranks.k(m - 1) + 1 <= N <= ranks.k(m) - 1:
		raise NoAssociate('N(0, %s) = %d is outside %d..%d'
			% (s, N, ranks.k(m - 1) + 1, ranks.k(m) - 1))
	return s.restrict(N - 1).extend(s[N - 1] - 1).pad(2, ranks.k(m) - N - 1)


def associated_pairs(ranks, n):
	"""All pairs ``(s, associate(s))`` with :math:`|s| = k_n - 1`."""
	pairs = []
	for s in codes(ranks.k(n) - 1):
		try:
			pairs.append((s, associate(ranks, s)))
		except NoAssociate:
			pass
	return pairs


class CoveringReport(object):
	"""Exact distances and containments for an associated pair."""

	def __init__(self, s, u, rank, distances, margin, tail_bound, containments):
		self.s = s
		self.u = u
		self.rank = rank
		self.distances = distances
		self.margin = margin
		self.tail_bound = tail_bound
		self.containments = containments

	@property
	def holds(self):
		"""Every distance reaches :math:`m_n` and both containments hold."""
		return (all(value >= self.margin for value in self.distances.values())
			and all(self.containments.values()))

	@property
	def flagged(self):
		"""Distances that fall short of twice the tail sum."""
		if self.tail_bound is None:
			return []
		return sorted(name for name, value in self.distances.items()
			if value < self.tail_bound)

	def to_json(self):
		return {
			's': str(self.s), 'u': str(self.u), 'rank': self.rank,
			'distances': dict((name, format_scalar(value))
				for name, value in self.distances.items()),
			'm': format_scalar(self.margin),
			'twice_tail': None if self.tail_bound is None else format_scalar(self.tail_bound),
			'containments': dict(self.containments),
			'holds': self.holds, 'flagged': self.flagged,
		}


def covering_check(seq, ranks, s, u):
	"""Measures how :math:`J_u` covers the side-0 gap of :math:`J_s` and
	:math:`J_s` the side-1 gap of :math:`J_u`.

	:rtype: CoveringReport
	:raises NotAssociated: unless `u` is the associate of `s`
	"""
	s, u = TernaryCode(s), TernaryCode(u)
	try:
		expected = associate(ranks, s)
	except (NoAssociate, MisalignedCode) as exc:
		raise NotAssociated('%s has no associated interval: %s' % (s, exc))
	if expected != u:
		raise NotAssociated('the interval associated with %s is %s, not %s' % (s, expected, u))
	n = ranks.rank_of_index(len(s) + 1)
	left_gap, right_gap = gap(seq, s, 0), gap(seq, u, 1)
	j_s, j_u = interval_J(seq, s), interval_J(seq, u)
	distances = {
		'gap_separation': left_gap.left - right_gap.right,
		'right_clearance': j_u.right - left_gap.right,
		'left_clearance': right_gap.left - j_s.left,
	}
	try:
		tail_bound = 2 * tail_weight_sum(seq, ranks, n)
	except NotEventuallyPeriodic:
		tail_bound = None
	containments = {
		'gap_s_in_child_u2': interval_J(seq, u.extend(2)).contains(left_gap),
		'gap_u_in_child_s0': interval_J(seq, s.extend(0)).contains(right_gap),
	}
	report = CoveringReport(s, u, n, distances, margin_m(seq, ranks, n), tail_bound,
		containments)
	if report.flagged:
		logger.info('covering %s/%s: %s below twice the tail', s, u, ', '.join(report.flagged))
	return report
