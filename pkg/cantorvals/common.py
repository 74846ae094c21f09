# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

import decimal
import logging
import math
import os.path
from fractions import Fraction

logger = logging.getLogger(__name__)

# Some common constants and functions
(STATEMENT, SOURCE, REMARK) = range(3)
CONFIGURATION_DIR = (os.getenv('XDG_CONFIG_HOME') or os.getenv('APPDATA') or
	os.path.expanduser('~/.config'))
SETTINGS_FILE_NAME = 'cantorvals.conf'

ONE_THIRD = Fraction(1, 3)
INFINITY = math.inf

DEFAULT_SETTINGS = {
	'depth_cap': 13,
	'workers': 1,
	'rank_cap': 6,
	'samples': 20,
}

def _load_settings_from_file(filename, settings):
	try:
		settings_file = open(filename)
	except IOError:
		return
	with settings_file:
		for line in settings_file:
			line = line.strip()
			if not line or line.startswith('#'):
				continue
			key, sep, value = line.partition('=')
			key = key.strip()
			if not sep or key not in DEFAULT_SETTINGS:
				logger.warning('%s: ignoring line %r', filename, line)
				continue
			try:
				settings[key] = int(value)
			except ValueError:
				logger.warning('%s: %s is not an integer', filename, key)

def load_settings(directory=None):
	"""
	:returns: the effective settings; built-in defaults, overridden by
	          the file in :data:`CONFIGURATION_DIR`, overridden by the
	          file in `directory` (the working directory by default)
	:rtype: dict
	"""
	settings = dict(DEFAULT_SETTINGS)
	_load_settings_from_file(os.path.join(CONFIGURATION_DIR, SETTINGS_FILE_NAME), settings)
	_load_settings_from_file(os.path.join(directory or os.curdir, SETTINGS_FILE_NAME), settings)
	return settings

def parse_scalar(text):
	"""Parses a rational literal ``"p/q"``, ``"p"`` or a finite decimal
	such as ``"0.35"`` exactly.

	>>> parse_scalar('11/21')
	Fraction(11, 21)
	"""
	if isinstance(text, Fraction):
		return text
	if isinstance(text, bool) or isinstance(text, float):
		raise ValueError('not an exact rational literal: %r' % (text,))
	if isinstance(text, int):
		return Fraction(text)
	return Fraction(str(text).strip())

def format_scalar(value):
	"""Renders an exact scalar (or an infinite sentinel) as text."""
	if value == INFINITY:
		return 'inf'
	if value == -INFINITY:
		return '-inf'
	value = Fraction(value)
	if value.denominator == 1:
		return str(value.numerator)
	return '%d/%d' % (value.numerator, value.denominator)

def format_decimal(value, digits=30):
	"""Decimal rendering for the command-line boundary only."""
	value = Fraction(value)
	context = decimal.Context(prec=digits)
	return str(context.divide(decimal.Decimal(value.numerator),
		decimal.Decimal(value.denominator)))

def exact_sqrt(value):
	"""
	:returns: the rational square root of `value` if it is a perfect
	          square of a rational, otherwise ``None``
	"""
	value = Fraction(value)
	if value < 0:
		return None
	num = math.isqrt(value.numerator)
	den = math.isqrt(value.denominator)
	if num * num == value.numerator and den * den == value.denominator:
		return Fraction(num, den)
	return None
