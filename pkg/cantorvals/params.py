# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

"""Parameter sequences and the scalar streams derived from them.

A sequence is stored as a finite ``prefix`` followed by an infinitely
repeated ``period``.  With an empty period only finitely many terms
exist and only depth-bounded operations are allowed.
"""

import json
import logging
import threading
from fractions import Fraction

from cantorvals.common import ONE_THIRD, parse_scalar, format_scalar
from cantorvals.errors import (DomainError, IndexOutOfRange,
	NotEventuallyPeriodic, NoIndexAboveOneThird, NoStartIndex,
	PreconditionError)

logger = logging.getLogger(__name__)


def _validated(entries):
	result = []
	for entry in entries:
		try:
			value = parse_scalar(entry)
		except (ValueError, ZeroDivisionError) as exc:
			raise DomainError('invalid rational literal %r: %s' % (entry, exc))
		if not 0 < value < 1:
			raise DomainError('entry %s is not in the open interval (0, 1)'
				% format_scalar(value))
		result.append(value)
	return tuple(result)


class ParamSequence(object):
	"""An eventually periodic sequence :math:`a = (a_n)` with
	:math:`a_n \\in (0, 1)`.

	:param prefix: the preperiod entries
	:param period: the repeated entries (may be empty)

	Entries may be :class:`~fractions.Fraction` objects, integers or
	rational literals such as ``"11/21"``.
	"""

	def __init__(self, prefix=(), period=()):
		self.prefix = _validated(prefix)
		self.period = _validated(period)
		self._d = [Fraction(1)]
		self._lock = threading.Lock()

	@classmethod
	def constant(cls, value):
		return cls(period=(value,))

	@classmethod
	def from_json(cls, data):
		"""Builds a sequence from ``{"prefix": [...], "period": [...]}``
		(a mapping or its JSON text).
		"""
		if isinstance(data, str):
			data = json.loads(data)
		if not isinstance(data, dict):
			raise DomainError('sequence JSON must be an object')
		unknown = set(data) - {'prefix', 'period'}
		if unknown:
			raise DomainError('unknown sequence keys: %s' % ', '.join(sorted(unknown)))
		return cls(data.get('prefix', ()), data.get('period', ()))

	def to_json(self):
		return {
			'prefix': [format_scalar(x) for x in self.prefix],
			'period': [format_scalar(x) for x in self.period],
		}

	@property
	def periodic(self):
		return bool(self.period)

	def normalized(self):
		"""
		:returns: the same sequence with the shortest period and the
		          shortest prefix
		:rtype: ParamSequence
		"""
		prefix, period = list(self.prefix), list(self.period)
		if not period:
			return ParamSequence(prefix)
		size = len(period)
		for length in range(1, size + 1):
			if size % length == 0 and period == period[:length] * (size // length):
				period = period[:length]
				break
		while prefix and prefix[-1] == period[-1]:
			prefix.pop()
			period = period[-1:] + period[:-1]
		return ParamSequence(prefix, period)

	def entries(self):
		"""All distinct stored entries (prefix and period)."""
		return self.prefix + self.period

	def supports(self, n):
		return self.periodic or n <= len(self.prefix)

	def ratio(self, n):
		"""
		:returns: :math:`a_n` (1-based)
		:rtype: Fraction
		"""
		if n < 1:
			raise IndexOutOfRange('sequence indices start at 1, got %d' % n)
		if n <= len(self.prefix):
			return self.prefix[n - 1]
		if not self.period:
			raise IndexOutOfRange('index %d exceeds the finite sequence of length %d'
				% (n, len(self.prefix)))
		return self.period[(n - len(self.prefix) - 1) % len(self.period)]

	def lam(self, n):
		return (1 - self.ratio(n)) / 2

	def d(self, n):
		"""
		:returns: :math:`d_n = \\prod_{i \\le n} (1 - a_i)/2`, the length of
		          every depth-`n` interval of the Cantor construction
		:rtype: Fraction
		"""
		if n < 0:
			raise IndexOutOfRange('negative depth %d' % n)
		cache = self._d
		if n < len(cache):
			return cache[n]
		with self._lock:
			while len(cache) <= n:
				cache.append(cache[-1] * self.lam(len(cache)))
		return cache[n]

	def weight(self, n):
		"""
		:returns: :math:`d_{n-1} - d_n`, the endpoint shift of digit `n`
		:rtype: Fraction
		"""
		if n < 1:
			raise IndexOutOfRange('weights are indexed from 1, got %d' % n)
		return self.d(n - 1) - self.d(n)

	def period_factor(self):
		"""
		:returns: :math:`\\rho`, the product of :math:`(1-a)/2` over one period
		:rtype: Fraction
		"""
		if not self.period:
			raise NotEventuallyPeriodic('the sequence has no period')
		factor = Fraction(1)
		for value in self.period:
			factor *= (1 - value) / 2
		return factor

	def __eq__(self, other):
		if not isinstance(other, ParamSequence):
			return NotImplemented
		mine, theirs = self.normalized(), other.normalized()
		return mine.prefix == theirs.prefix and mine.period == theirs.period

	def __ne__(self, other):
		result = self.__eq__(other)
		return result if result is NotImplemented else not result

	def __hash__(self):
		mine = self.normalized()
		return hash((mine.prefix, mine.period))

	def __repr__(self):
		return 'ParamSequence(prefix=[%s], period=[%s])' % (
			', '.join(map(format_scalar, self.prefix)),
			', '.join(map(format_scalar, self.period)))


class RankIndex(object):
	"""The start index :math:`k_0` and the increasing indices
	:math:`k_1 < k_2 < \\dots` of all terms greater than 1/3 after it.

	For a periodic sequence the indices repeat with a fixed shift: from
	rank :attr:`cycle_start` on, ``k(n + cycle_ranks) == k(n) + cycle_length``,
	and the same shift already holds for ``k(cycle_start - 1)``.
	"""

	def __init__(self, k0, base, cycle_start=None, cycle_ranks=None,
	             cycle_length=None, count=None):
		self.k0 = k0
		self._base = tuple(base)
		self.count = len(self._base) if count is None else count
		self.cycle_start = cycle_start
		self.cycle_ranks = cycle_ranks
		self.cycle_length = cycle_length

	@property
	def periodic(self):
		return self.cycle_ranks is not None

	@property
	def ks(self):
		"""The first :attr:`count` rank indices."""
		return tuple(self.k(n) for n in range(1, self.count + 1))

	def k(self, n):
		"""
		:returns: :math:`k_n`; ``k(0)`` is :math:`k_0`
		:rtype: int
		"""
		if n < 0:
			raise IndexOutOfRange('negative rank %d' % n)
		if n == 0:
			return self.k0
		if n <= len(self._base):
			return self._base[n - 1]
		if not self.periodic:
			raise IndexOutOfRange('rank %d is beyond the %d known rank indices'
				% (n, len(self._base)))
		steps, offset = divmod(n - self.cycle_start, self.cycle_ranks)
		return self._base[self.cycle_start + offset - 1] + steps * self.cycle_length

	def rank_of_index(self, j):
		"""
		:returns: the rank `n` with ``k(n) == j``, or ``None``
		"""
		n = 1
		while True:
			try:
				k = self.k(n)
			except IndexOutOfRange:
				return None
			if k == j:
				return n
			if k > j:
				return None
			n += 1

	def rank_for_length(self, length):
		"""
		:returns: the rank `m` with ``k(m - 1) <= length < k(m)``
		:raises PreconditionError: if `length` is smaller than :math:`k_0`
		"""
		if length < self.k0:
			raise PreconditionError('code length %d is below k0 = %d' % (length, self.k0))
		m = 1
		while self.k(m) <= length:
			m += 1
		return m

	def __repr__(self):
		return 'RankIndex(k0=%d, ks=%r)' % (self.k0, self._base)


def _indices_above(seq, j):
	while True:
		j += 1
		if seq.ratio(j) > ONE_THIRD:
			yield j


def rank_indices(seq, count=8):
	"""Computes :math:`k_0` (minimal, with :math:`a_{k_0+1} < 1/3`) and the
	first `count` rank indices.

	:rtype: RankIndex
	:raises NoIndexAboveOneThird: when no period entry exceeds 1/3
	:raises NoStartIndex: when no entry is below 1/3
	"""
	if seq.periodic and not any(x > ONE_THIRD for x in seq.period):
		raise NoIndexAboveOneThird('no period entry exceeds 1/3; only finitely many gaps')
	prefix_length = len(seq.prefix)
	horizon = prefix_length + len(seq.period)
	k0 = None
	for j in range(horizon):
		if seq.ratio(j + 1) < ONE_THIRD:
			k0 = j
			break
	if k0 is None:
		raise NoStartIndex('no entry is below 1/3')
	if not seq.periodic:
		base = [j for j in range(k0 + 1, prefix_length + 1) if seq.ratio(j) > ONE_THIRD]
		if not base:
			raise NoIndexAboveOneThird('no entry after k0 exceeds 1/3')
		return RankIndex(k0, base)

	cycle_ranks = sum(1 for x in seq.period if x > ONE_THIRD)
	length = len(seq.period)
	above = _indices_above(seq, k0)
	base = []
	cycle_start = None
	n = 1
	# first rank whose band start k(n - 1) shifts by one period to k(n - 1 + cycle_ranks)
	while cycle_start is None:
		while len(base) < n - 1 + cycle_ranks:
			base.append(next(above))
		start = k0 if n == 1 else base[n - 2]
		if start >= prefix_length and base[n + cycle_ranks - 2] == start + length:
			cycle_start = n
		n += 1
	while len(base) < max(count, cycle_start + cycle_ranks - 1):
		base.append(next(above))
	ranks = RankIndex(k0, base, cycle_start, cycle_ranks, length, count)
	logger.debug('rank indices of %r: %r, cycle from rank %d', seq, ranks, cycle_start)
	return ranks


def tail_weight_sum(seq, ranks, n, inclusive=False):
	"""
	:returns: :math:`\\sum_{i > n} (d_{k_i - 1} - d_{k_i})`, or the sum
	          from `i = n` when `inclusive` is true, in closed form
	:rtype: Fraction
	:raises NotEventuallyPeriodic: for a finite sequence
	"""
	if not seq.periodic or not ranks.periodic:
		raise NotEventuallyPeriodic('tail sums need a periodic tail')
	start = n if inclusive else n + 1
	if start < 1:
		raise IndexOutOfRange('tail sums start at rank 1')
	first = max(start, ranks.cycle_start)
	head = sum((seq.weight(ranks.k(i)) for i in range(start, first)), Fraction(0))
	cycle = sum((seq.weight(ranks.k(i)) for i in range(first, first + ranks.cycle_ranks)),
		Fraction(0))
	return head + cycle / (1 - seq.period_factor())
