# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

from cantorvals.criteria import (FullIntervalCriterion, FiniteUnionCriterion,
	CantorSetCriterion, MainStarCriterion, FNEqualityCriterion)
from cantorvals.params import ParamSequence, rank_indices, tail_weight_sum
from cantorvals.classify import (classify, condition_star, condition_fn,
	cantorval_measure, corollary_region)

__version_tuple__ = (1, 0, 0)
__version__ = '.'.join(map(str, __version_tuple__))

ENTRY_POINT_GROUP = 'cantorvals.criteria'

builtin_criteria = [FullIntervalCriterion, FiniteUnionCriterion,
	CantorSetCriterion, MainStarCriterion, FNEqualityCriterion]

# Public API

def get_all_criteria():
	"""
	:returns: list of all criteria (both standard and custom ones),
	          ordered by :attr:`~cantorvals.abstract.AbstractCriterion.priority`
	:rtype: list of criterion classes
	"""
	from importlib import metadata
	entry_points = metadata.entry_points()
	if hasattr(entry_points, 'select'):
		entry_points = entry_points.select(group=ENTRY_POINT_GROUP)
	else:
		entry_points = entry_points.get(ENTRY_POINT_GROUP, ())
	criteria = list(builtin_criteria)
	for entry_point in entry_points:
		criterion = entry_point.load()
		if criterion not in criteria:
			criteria.append(criterion)
	return sorted(criteria, key=lambda criterion: (criterion.priority, criterion.name))

def get_available_criteria():
	"""
	:returns: list of all available criteria (criteria whose
	          :meth:`~cantorvals.abstract.AbstractCriterion.available`
	          method returns True)
	:rtype: list of criterion classes
	"""
	available_criteria = []
	for criterion in get_all_criteria():
		if criterion.available():
			available_criteria.append(criterion)
	return available_criteria

def find_criterion_class_by_name(name):
	"""
	:returns: a criterion with
	          :attr:`~cantorvals.abstract.AbstractCriterion.name`
	          attribute matching `name`, if found, otherwise ``None``
	:rtype: class

	>>> import cantorvals
	>>> cantorvals.find_criterion_class_by_name('main-star')
	<class 'cantorvals.criteria.MainStarCriterion'>
	"""
	for criterion in get_all_criteria():
		if criterion.name.lower() == name.lower():
			return criterion
