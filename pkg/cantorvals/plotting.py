# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

"""SVG figures; needs the optional ``matplotlib`` and ``numpy`` packages.

Figures are drawn on a bare :class:`matplotlib.figure.Figure`, so no
global backend is selected.  Floats appear only here.
"""

import logging

from cantorvals.geometry import cantor_union
from cantorvals.oracle import enumerate_difference

logger = logging.getLogger(__name__)

REGION_COLOR = '#9ecae1'
BRANCH_COLORS = ('#08519c', '#a50f15')


def available():
	"""
	:returns: whether matplotlib and numpy can be imported
	:rtype: bool
	"""
	try:
		import matplotlib
		import numpy
	except ImportError:
		return False
	return True


def _figure(width=7, height=5):
	from matplotlib.figure import Figure
	figure = Figure(figsize=(width, height))
	return figure, figure.add_subplot(1, 1, 1)


def draw_region(scan, path):
	"""Draws the grid cells of a :class:`~cantorvals.classify.RegionScan`
	inside the region, both boundary branches and their junction.
	"""
	import numpy as np
	x = np.array([float(a1) for a1 in scan.a1_nodes])
	y = np.array([float(a2) for a2 in scan.a2_nodes])
	X, Y = np.meshgrid(x, y)
	Z = np.array(scan.cells, dtype=float).T
	figure, ax = _figure()
	if len(x) > 1 and len(y) > 1 and Z.any():
		ax.contourf(X, Y, Z, levels=[0.5, 1.5], colors=[REGION_COLOR])
	else:
		points = scan.region_points()
		ax.scatter([float(p[0]) for p in points], [float(p[1]) for p in points],
			s=4, color=REGION_COLOR)
	for samples, color, label in zip((scan.first_branch, scan.second_branch),
			BRANCH_COLORS, ('first branch', 'second branch')):
		ax.plot([p[0] for p in samples], [p[1] for p in samples], color=color,
			linewidth=1.2, label=label)
	apex = scan.apex
	ax.plot([float(apex[0])], [float(apex[1])], marker='o', color='black', linestyle='none',
		label='(%s, %s)' % apex)
	ax.set_xlim(x.min(), x.max())
	ax.set_ylim(y.min(), y.max())
	ax.set_xlabel('$a_1$')
	ax.set_ylabel('$a_2$')
	ax.legend(loc='upper right', fontsize='small')
	figure.savefig(path, format='svg')
	logger.info('region figure written to %s', path)


def draw_construction(seq, depth, path, kind='difference'):
	"""Draws the unions of depths ``0..depth`` as rows of horizontal bars,
	depth 0 on top.

	:param kind: ``'difference'`` for :math:`C_n(a) - C_n(a)`,
	             ``'cantor'`` for :math:`C_n(a)`
	"""
	figure, ax = _figure(height=max(2, depth + 1))
	for n in range(depth + 1):
		if kind == 'cantor':
			pairs = cantor_union(seq, n).pairs()
		else:
			pairs = enumerate_difference(seq, n).union.pairs()
		ax.broken_barh([(float(l), float(r - l)) for l, r in pairs], (depth - n, 0.6),
			facecolors=BRANCH_COLORS[0])
	ax.set_yticks([depth - n + 0.3 for n in range(depth + 1)])
	ax.set_yticklabels([str(n) for n in range(depth + 1)])
	ax.set_ylabel('depth')
	figure.savefig(path, format='svg')
	logger.info('construction figure written to %s', path)
