# vim: ts=8:sts=8:sw=8:noexpandtab

# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

import json

FULL_INTERVAL = 'FullInterval'
FINITE_UNION = 'FiniteUnionOfIntervals'
CANTOR_SET = 'CantorSet'
CANTORVAL = 'Cantorval'
UNKNOWN = 'Unknown'

KINDS = (FULL_INTERVAL, FINITE_UNION, CANTOR_SET, CANTORVAL, UNKNOWN)


class AbstractCriterion(object):
	"""Abstract class for sufficient conditions on the structure of
	:math:`C(a) - C(a)`.

	:param seq: the parameter sequence to examine
	:type seq: cantorvals.params.ParamSequence
	"""

	#: provenance tag reported in verdicts
	name = ''
	#: various attributes, like the statement of the criterion
	attributes = {}
	#: the verdict kind this criterion certifies
	kind = UNKNOWN
	#: position in the decision cascade (lower runs first)
	priority = 100

	def __init__(self, seq):
		self.seq = seq

	@staticmethod
	def available():
		"""
		:returns: whether the criterion is ready for use
		:rtype: bool
		"""
		return True

	def decide(self):
		"""
		:returns: a Verdict instance when the criterion applies to the
		          sequence, otherwise ``None``
		:rtype: Verdict or None
		"""
		raise NotImplementedError


class Verdict(object):
	"""This class encapsulates the outcome of a classification.

	Instances of this class are created by :meth:`.AbstractCriterion.decide`
	and by :func:`cantorvals.classify.classify`.
	"""

	def __init__(self, kind, provenance='none', witness=None):
		if kind not in KINDS:
			raise ValueError('unknown verdict kind %r' % (kind,))
		self.kind = kind
		self.provenance = provenance
		self.witness = witness

	def get_kind(self):
		"""
		:returns: one of ``FullInterval``, ``FiniteUnionOfIntervals``,
		          ``CantorSet``, ``Cantorval``, ``Unknown``
		:rtype: str
		"""
		return self.kind

	def get_provenance(self):
		"""
		:returns: the name of the criterion that fired, or ``'none'``
		:rtype: str
		"""
		return self.provenance

	def get_witness(self):
		"""
		:returns: certificate data (JSON-serializable) or ``None``
		"""
		return self.witness

	def to_json(self):
		data = {'kind': self.kind, 'provenance': self.provenance}
		if self.witness is not None:
			data['witness'] = self.witness
		return data

	def dumps(self):
		return json.dumps(self.to_json(), indent=2, sort_keys=True)

	def __eq__(self, other):
		if not isinstance(other, Verdict):
			return NotImplemented
		return (self.kind, self.provenance) == (other.kind, other.provenance)

	def __ne__(self, other):
		result = self.__eq__(other)
		return result if result is NotImplemented else not result

	def __hash__(self):
		return hash((self.kind, self.provenance))

	def __repr__(self):
		return 'Verdict(%r, %r)' % (self.kind, self.provenance)
