# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

"""Exception hierarchy.

Everything raised on purpose by this package derives from
:class:`CantorvalsError`.  Violated preconditions derive from
:class:`PreconditionError` (a :class:`ValueError`), failed
cross-checks from :class:`StructuralError`.
"""


class CantorvalsError(Exception):
	"""Base class of all errors raised by this package."""


class PreconditionError(CantorvalsError, ValueError):
	"""An operation was called outside its domain."""


class StructuralError(CantorvalsError):
	"""A computed structure contradicts a proven identity."""


class DomainError(PreconditionError):
	pass


class IndexOutOfRange(PreconditionError, IndexError):
	pass


class NotEventuallyPeriodic(PreconditionError):
	pass


class NoIndexAboveOneThird(PreconditionError):
	pass


class NoStartIndex(PreconditionError):
	pass


class NotAGap(PreconditionError):
	pass


class NotAnOverlap(PreconditionError):
	pass


class RankTooSmall(PreconditionError):
	pass


class MisalignedCode(PreconditionError):
	pass


class NoAssociate(PreconditionError):
	pass


class NotAssociated(PreconditionError):
	pass


class HypothesesUnsatisfied(PreconditionError):
	pass


class FormulaNotApplicable(PreconditionError):
	pass


class DivergentRatio(PreconditionError):
	pass


class NotFastConvergent(PreconditionError):
	pass


class QOutOfRange(PreconditionError):
	pass


class DepthCapExceeded(PreconditionError):
	pass


class CertificateMissing(PreconditionError):
	pass
