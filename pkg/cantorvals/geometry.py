# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

"""Index codes, exact intervals and the interval calculus of the
difference set construction.

Endpoints are always computed in closed form::

	l(I_t) = sum(t_i * w_i)          |I_t| = d_n
	l(J_s) = -1 + sum(s_i * w_i)     |J_s| = 2 d_n

where ``w_i = d_{i-1} - d_i``.  :func:`children` evaluates the recursive
formulas independently and is used as a cross-check.
"""

import bisect
import collections
import itertools
import logging
from fractions import Fraction

from cantorvals.common import ONE_THIRD, format_scalar
from cantorvals.errors import NotAGap, NotAnOverlap, PreconditionError

logger = logging.getLogger(__name__)

CLOSED = 'closed'
OPEN = 'open'


class TernaryCode(tuple):
	"""A finite word over ``{0, 1, 2}`` addressing :math:`J_s`.

	>>> TernaryCode('021').extend(2)
	TernaryCode('0212')
	"""
	base = 3

	def __new__(cls, digits=()):
		if isinstance(digits, str):
			digits = [int(c) for c in digits if not c.isspace()]
		digits = tuple(int(x) for x in digits)
		for digit in digits:
			if not 0 <= digit < cls.base:
				raise ValueError('digit %d out of range for %s' % (digit, cls.__name__))
		return tuple.__new__(cls, digits)

	def __add__(self, other):
		return type(self)(tuple(self) + tuple(other))

	def extend(self, *digits):
		return self + digits

	def pad(self, digit, count):
		return self + (digit,) * max(count, 0)

	def restrict(self, n):
		return type(self)(tuple(self)[:n])

	def complement(self):
		"""Digit map :math:`s_i \\mapsto (base - 1) - s_i`."""
		return type(self)(self.base - 1 - x for x in self)

	def __str__(self):
		return ''.join(map(str, self))

	def __repr__(self):
		return '%s(%r)' % (type(self).__name__, str(self))


class BinaryCode(TernaryCode):
	"""A finite word over ``{0, 1}`` addressing :math:`I_t`."""
	base = 2


class Interval(collections.namedtuple('Interval', 'left right kind')):
	"""An interval with exact endpoints; `kind` is ``'closed'`` or ``'open'``."""
	__slots__ = ()

	def __new__(cls, left, right, kind=CLOSED):
		left, right = Fraction(left), Fraction(right)
		if kind not in (CLOSED, OPEN):
			raise ValueError('unknown interval kind %r' % (kind,))
		if left > right or (kind == OPEN and left == right):
			raise ValueError('empty %s interval (%s, %s)' % (kind,
				format_scalar(left), format_scalar(right)))
		return super(Interval, cls).__new__(cls, left, right, kind)

	@classmethod
	def open(cls, left, right):
		return cls(left, right, OPEN)

	@property
	def length(self):
		return self.right - self.left

	@property
	def center(self):
		return (self.left + self.right) / 2

	def contains_point(self, x):
		if self.kind == CLOSED:
			return self.left <= x <= self.right
		return self.left < x < self.right

	def contains(self, other):
		"""Set inclusion ``other ⊆ self``."""
		if self.kind == CLOSED or other.kind == OPEN:
			return self.left <= other.left and other.right <= self.right
		return self.left < other.left and other.right < self.right

	def intersects(self, other):
		if self.kind == CLOSED and other.kind == CLOSED:
			return max(self.left, other.left) <= min(self.right, other.right)
		return max(self.left, other.left) < min(self.right, other.right)

	def pair(self):
		return (self.left, self.right)

	def to_json(self):
		return {'l': format_scalar(self.left), 'r': format_scalar(self.right),
			'kind': self.kind}

	def __str__(self):
		brackets = '[]' if self.kind == CLOSED else '()'
		return '%s%s, %s%s' % (brackets[0], format_scalar(self.left),
			format_scalar(self.right), brackets[1])


def sweep(pairs):
	"""Merges `(left, right)` pairs sorted by `left` into maximal
	components; touching pairs are merged.

	:returns: list of merged `[left, right]` lists
	"""
	merged = []
	for left, right in pairs:
		if merged and left <= merged[-1][1]:
			if right > merged[-1][1]:
				merged[-1][1] = right
		else:
			merged.append([left, right])
	return merged


class IntervalUnion(object):
	"""A finite union of closed intervals in canonical form: sorted,
	pairwise disjoint and non-touching.
	"""

	def __init__(self, intervals=()):
		pairs = sorted(iv.pair() if isinstance(iv, Interval)
			else (Fraction(iv[0]), Fraction(iv[1])) for iv in intervals)
		self._pairs = tuple((l, r) for l, r in sweep(pairs))

	@classmethod
	def from_merged(cls, pairs):
		"""Wraps pairs that are already canonical."""
		union = cls.__new__(cls)
		union._pairs = tuple(pairs)
		return union

	@property
	def parts(self):
		return [Interval(l, r) for l, r in self._pairs]

	def pairs(self):
		return self._pairs

	def __len__(self):
		return len(self._pairs)

	def __iter__(self):
		return iter(self.parts)

	def __eq__(self, other):
		if not isinstance(other, IntervalUnion):
			return NotImplemented
		return self._pairs == other._pairs

	def __ne__(self, other):
		result = self.__eq__(other)
		return result if result is NotImplemented else not result

	def __hash__(self):
		return hash(self._pairs)

	def __repr__(self):
		return 'IntervalUnion(%s)' % ', '.join(str(part) for part in self.parts)

	@property
	def measure(self):
		return sum((r - l for l, r in self._pairs), Fraction(0))

	def gaps(self):
		""":returns: the open intervals between consecutive parts"""
		return [Interval.open(self._pairs[i][1], self._pairs[i + 1][0])
			for i in range(len(self._pairs) - 1)]

	def _part_index(self, x):
		index = bisect.bisect_right(self._pairs, (x, float('inf'))) - 1
		if index >= 0 and self._pairs[index][0] <= x <= self._pairs[index][1]:
			return index
		return None

	def contains_point(self, x):
		return self._part_index(Fraction(x)) is not None

	def component_of(self, x):
		""":returns: the part containing `x`, or ``None``"""
		index = self._part_index(Fraction(x))
		return None if index is None else Interval(*self._pairs[index])

	def covers(self, interval):
		"""Whether `interval` lies inside a single part."""
		index = self._part_index(interval.left)
		return index is not None and interval.right <= self._pairs[index][1]

	def issubset(self, other):
		return all(other.covers(part) for part in self.parts)

	def uncovered(self, other):
		"""
		:returns: the closed pieces of `self` that `other` leaves
		          uncovered, as point-intervals of their closure
		"""
		result = []
		for left, right in self._pairs:
			if left == right:
				if not other.contains_point(left):
					result.append(Interval(left, right))
				continue
			position = left
			for o_left, o_right in other._pairs:
				if o_right < position or o_left > right:
					continue
				if o_left > position:
					result.append(Interval(position, o_left))
				position = max(position, o_right)
				if position >= right:
					break
			if position < right:
				result.append(Interval(position, right))
		return result

	def subtract_open(self, open_intervals):
		"""
		:returns: `self` minus the union of the given open intervals
		:rtype: IntervalUnion
		"""
		pieces = list(self._pairs)
		for hole in sorted(iv.pair() for iv in open_intervals):
			remaining = []
			for left, right in pieces:
				if hole[1] <= left or hole[0] >= right:
					remaining.append((left, right))
					continue
				if left <= hole[0]:
					remaining.append((left, hole[0]))
				if hole[1] <= right:
					remaining.append((hole[1], right))
			pieces = remaining
		return IntervalUnion.from_merged(sorted(pieces))

	def negate(self):
		return IntervalUnion.from_merged(tuple((-r, -l) for l, r in reversed(self._pairs)))

	def reflect(self, about):
		""":returns: the image under :math:`x \\mapsto about - x`"""
		return IntervalUnion.from_merged(
			tuple((about - r, about - l) for l, r in reversed(self._pairs)))

	def shift(self, offset):
		return IntervalUnion.from_merged(tuple((l + offset, r + offset) for l, r in self._pairs))

	def scale(self, factor):
		factor = Fraction(factor)
		if factor <= 0:
			raise ValueError('scale factor must be positive')
		return IntervalUnion.from_merged(tuple((l * factor, r * factor) for l, r in self._pairs))

	def to_json(self):
		return [part.to_json() for part in self.parts]


def _left_sum(seq, code):
	return sum((digit * seq.weight(i) for i, digit in enumerate(code, 1) if digit),
		Fraction(0))


def interval_I(seq, t):
	"""
	:returns: :math:`I_t`, a closed interval of length :math:`d_{|t|}`
	:rtype: Interval
	"""
	t = BinaryCode(t)
	left = _left_sum(seq, t)
	return Interval(left, left + seq.d(len(t)))


def interval_J(seq, s):
	"""
	:returns: :math:`J_s = I_t - I_p`, a closed interval of length
	          :math:`2 d_{|s|}`
	:rtype: Interval
	"""
	s = TernaryCode(s)
	left = _left_sum(seq, s) - 1
	return Interval(left, left + 2 * seq.d(len(s)))


def children(seq, s):
	"""
	:returns: :math:`(J_{s0}, J_{s1}, J_{s2})` evaluated from the parent
	          interval and :math:`d_{n+1}`
	"""
	parent = interval_J(seq, s)
	child = seq.d(len(s) + 1)
	return (Interval(parent.left, parent.left + 2 * child),
		Interval(parent.center - child, parent.center + child),
		Interval(parent.right - 2 * child, parent.right))


def gap(seq, s, side):
	"""
	:returns: the open gap :math:`G^{side}_s` between two children of
	          :math:`J_s`
	:raises NotAGap: when :math:`a_{|s|+1} \\le 1/3`
	"""
	s = TernaryCode(s)
	if side not in (0, 1):
		raise PreconditionError('side must be 0 or 1')
	if seq.ratio(len(s) + 1) <= ONE_THIRD:
		raise NotAGap('a_%d <= 1/3: the children of J_%s overlap' % (len(s) + 1, s))
	lower, upper = children(seq, s)[side:side + 2]
	return Interval.open(lower.right, upper.left)


def overlap(seq, s, side):
	"""
	:returns: the closed overlap :math:`Z^{side}_s` of two children of
	          :math:`J_s` (a single point when :math:`a_{|s|+1} = 1/3`)
	:raises NotAnOverlap: when :math:`a_{|s|+1} > 1/3`
	"""
	s = TernaryCode(s)
	if side not in (0, 1):
		raise PreconditionError('side must be 0 or 1')
	if seq.ratio(len(s) + 1) > ONE_THIRD:
		raise NotAnOverlap('a_%d > 1/3: the children of J_%s are separated' % (len(s) + 1, s))
	lower, upper = children(seq, s)[side:side + 2]
	return Interval(upper.left, lower.right)


def codes(length, base=3):
	"""All words of the given length in lexicographic order."""
	cls = TernaryCode if base == 3 else BinaryCode
	return (cls(digits) for digits in itertools.product(range(base), repeat=length))


def extensions(s, length):
	""":returns: all codes of total `length` extending `s`"""
	s = TernaryCode(s)
	return (s + tail for tail in codes(length - len(s)))


def difference_union(seq, depth, root=()):
	"""Direct enumeration of :math:`C_n(a) - C_n(a)`, optionally restricted
	to the descendants of `root`.
	"""
	return IntervalUnion(interval_J(seq, s) for s in extensions(root, depth))


def cantor_union(seq, depth):
	""":math:`C_n(a)`, the union of all :math:`I_t` with :math:`|t| = n`."""
	return IntervalUnion(interval_I(seq, t) for t in codes(depth, 2))


def sumset_union(seq, depth):
	""":math:`C_n(a) + C_n(a)` from all pairs :math:`I_t + I_p`."""
	pieces = [interval_I(seq, t) for t in codes(depth, 2)]
	return IntervalUnion((a.left + b.left, a.right + b.right)
		for a, b in itertools.product(pieces, repeat=2))


def refine_invariance_check(seq, n, k):
	"""
	:returns: whether the depth-`n` and depth-`n+k` difference unions
	          coincide
	:raises PreconditionError: unless :math:`a_{n+1}, \\dots, a_{n+k}`
	                           are all at most 1/3
	"""
	for i in range(n + 1, n + k + 1):
		if seq.ratio(i) > ONE_THIRD:
			raise PreconditionError('a_%d > 1/3 introduces gaps between depths %d and %d'
				% (i, n, n + k))
	return difference_union(seq, n) == difference_union(seq, n + k)
