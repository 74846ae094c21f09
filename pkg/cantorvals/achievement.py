# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

"""Achievement sets of fast convergent series and their correspondence
with central Cantor sets.

For a fast convergent series :math:`x` with remainders :math:`r_n`,
:math:`E(x) = r_0 \\cdot C(a)` where :math:`a_n = 1 - 2 r_n / r_{n-1}`.
Conversely :math:`C(a) = E(x)` with :math:`x_n = d_{n-1} - d_n`.
"""

import json
import logging
from fractions import Fraction

from cantorvals.common import format_scalar, parse_scalar
from cantorvals.errors import (DomainError, NotEventuallyPeriodic,
	NotFastConvergent, QOutOfRange)
from cantorvals.geometry import IntervalUnion
from cantorvals.params import ParamSequence

logger = logging.getLogger(__name__)

E32_BLOCK = (Fraction(3), Fraction(2))
E32_Q_LIMIT = Fraction(1, 6)


class Multigeometric(object):
	"""The series :math:`(x_1, \\dots, x_k; q)` repeating the block scaled by
	successive powers of `q`.

	:param block: positive, nonincreasing block entries
	:param q: the ratio, in :math:`(0, 1)`
	:raises DomainError: when the full term sequence is not nonincreasing
	"""

	def __init__(self, block, q):
		try:
			self.block = tuple(parse_scalar(x) for x in block)
			self.q = parse_scalar(q)
		except (ValueError, ZeroDivisionError) as exc:
			raise DomainError('invalid multigeometric literal: %s' % exc)
		if not self.block:
			raise DomainError('the block must not be empty')
		if any(x <= 0 for x in self.block):
			raise DomainError('block entries must be positive')
		if not 0 < self.q < 1:
			raise DomainError('the ratio must lie in (0, 1)')
		if any(a < b for a, b in zip(self.block, self.block[1:])):
			raise DomainError('block entries must be nonincreasing')
		if self.block[-1] < self.q * self.block[0]:
			raise DomainError('terms increase across blocks: %s < %s * %s' % (
				format_scalar(self.block[-1]), format_scalar(self.q),
				format_scalar(self.block[0])))

	@classmethod
	def from_json(cls, data):
		if isinstance(data, str):
			data = json.loads(data)
		if not isinstance(data, dict) or set(data) != {'block', 'q'}:
			raise DomainError('multigeometric JSON needs exactly "block" and "q"')
		return cls(data['block'], data['q'])

	def to_json(self):
		return {'block': [format_scalar(x) for x in self.block],
			'q': format_scalar(self.q)}

	@property
	def total(self):
		""":math:`r_0`, the sum of the series"""
		return sum(self.block, Fraction(0)) / (1 - self.q)

	def term(self, n):
		""":returns: :math:`x_n` (1-based)"""
		cycles, position = divmod(n - 1, len(self.block))
		return self.block[position] * self.q ** cycles

	def terms(self, count):
		return [self.term(n) for n in range(1, count + 1)]

	def remainder(self, n):
		""":returns: :math:`r_n = \\sum_{j > n} x_j`"""
		cycles, position = divmod(n, len(self.block))
		rest = sum(self.block[position:], Fraction(0))
		return self.q ** cycles * (rest + self.q * self.total)

	def __repr__(self):
		return 'Multigeometric((%s); %s)' % (', '.join(map(format_scalar, self.block)),
			format_scalar(self.q))


def is_fast_convergent(mg):
	"""
	:returns: whether :math:`x_n > r_n` for every `n`; one block decides
	          since terms and remainders both scale by `q` per block
	:rtype: bool
	"""
	return all(mg.term(n) > mg.remainder(n) for n in range(1, len(mg.block) + 1))


def series_to_cantor(mg):
	"""
	:returns: ``(r0, seq)`` with :math:`E(x) = r_0 \\cdot C(a)`
	:raises NotFastConvergent: when some :math:`x_n \\le r_n`
	"""
	if not is_fast_convergent(mg):
		raise NotFastConvergent('%r is not fast convergent' % (mg,))
	period = [1 - 2 * mg.remainder(n) / mg.remainder(n - 1)
		for n in range(1, len(mg.block) + 1)]
	return mg.total, ParamSequence(period=period).normalized()


def cantor_to_series(seq, count):
	"""
	:returns: the first `count` terms :math:`x_n = d_{n-1} - d_n` of the
	          series with :math:`E(x) = C(a)`
	"""
	return [seq.weight(n) for n in range(1, count + 1)]


def cantor_multigeometric(seq):
	"""
	:returns: the multigeometric series of a purely periodic sequence: the
	          first period of weights, with ratio the period factor
	:rtype: Multigeometric
	"""
	if not seq.periodic or seq.prefix:
		raise NotEventuallyPeriodic('a multigeometric series needs a purely periodic sequence')
	return Multigeometric(cantor_to_series(seq, len(seq.period)), seq.period_factor())


def ratios_from_terms(terms, total):
	"""Recovers :math:`a_1, \\dots, a_n` from the first terms of a series and
	its sum :math:`r_0`.
	"""
	total = Fraction(total)
	ratios = []
	remainder = total
	for term in terms:
		following = remainder - term
		ratios.append(1 - 2 * following / remainder)
		remainder = following
	return ratios


def subset_sums(terms):
	""":returns: the sorted distinct subsums of a finite list of terms"""
	sums = {Fraction(0)}
	for term in terms:
		sums |= {value + term for value in sums}
	return sorted(sums)


def achievement_approximant(mg, n):
	"""
	:returns: the union of :math:`[\\sigma, \\sigma + r_n]` over the subsums
	          :math:`\\sigma` of the first `n` terms
	:rtype: cantorvals.geometry.IntervalUnion
	"""
	tail = mg.remainder(n)
	return IntervalUnion((value, value + tail) for value in subset_sums(mg.terms(n)))


def e3322_structure(q):
	"""Classifies :math:`E(3,3,2,2;q) = E(3,2;q) + E(3,2;q)` through the
	difference set of the central Cantor set of :math:`E(3,2;q)`.

	:rtype: cantorvals.abstract.Verdict
	:raises QOutOfRange: unless :math:`0 < q < 1/6`
	"""
	from cantorvals.classify import classify
	q = parse_scalar(q)
	if not 0 < q < E32_Q_LIMIT:
		raise QOutOfRange('E(3,2;q) is fast convergent only for 0 < q < 1/6, got %s'
			% format_scalar(q))
	scale, seq = series_to_cantor(Multigeometric(E32_BLOCK, q))
	logger.debug('E(3,2;%s) = %s * C(%r)', format_scalar(q), format_scalar(scale), seq)
	return classify(seq)


def e3322_sumset_identity(q, n):
	"""Checks :math:`E(3,3,2,2;q) = E(3,2;q) + E(3,2;q)` at finite depth:
	the subsums of the first :math:`2n` terms of :math:`(3,3,2,2;q)` are
	the pairwise sums of the subsums of the first `n` terms of
	:math:`(3,2;q)`.

	:rtype: bool
	"""
	q = parse_scalar(q)
	doubled = Multigeometric(E32_BLOCK[:1] * 2 + E32_BLOCK[1:] * 2, q)
	single = subset_sums(Multigeometric(E32_BLOCK, q).terms(n))
	pairwise = sorted(set(x + y for x in single for y in single))
	return subset_sums(doubled.terms(2 * n)) == pairwise
