# This file is part of python-cantorvals module
# License: 3-clause BSD, see LICENSE file
# Copyright: (C) python-cantorvals developers, 2018-2026

"""The ``cantorvals`` command.

Exit statuses: 0 on success, 2 for unparsable input, 3 when an
operation is called outside its domain, 4 when a cross-check fails.
"""

import argparse
import json
import logging
import sys

import cantorvals
from cantorvals.achievement import (Multigeometric, cantor_multigeometric,
	cantor_to_series, e3322_structure, series_to_cantor)
from cantorvals.classify import cantorval_measure, classify, region_scan
from cantorvals.common import (ONE_THIRD, SETTINGS_FILE_NAME, format_decimal,
	format_scalar, load_settings, parse_scalar)
from cantorvals.errors import PreconditionError, StructuralError
from cantorvals.geometry import TernaryCode, children, gap, interval_J, overlap
from cantorvals.oracle import (conjecture_probe, contains, enumerate_difference,
	gap_catalog_crosscheck, measure_at_depth)
from cantorvals.params import ParamSequence, rank_indices

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_STRUCTURAL = 0, 2, 3, 4

COMMANDS = ('classify', 'construct', 'oracle', 'region-scan', 'measure', 'convert', 'verify')
SVG_COMMANDS = ('construct', 'region-scan')

GOLDEN_SEQUENCES = (
	{'period': ['1/35', '7/17']},
	{'period': ['1/15', '11/21']},
)


class UsageError(Exception):
	"""Input that cannot be parsed."""


def _load_json(value):
	text = value
	if not value.lstrip().startswith('{'):
		try:
			with open(value) as input_file:
				text = input_file.read()
		except IOError as exc:
			raise UsageError('cannot read %s: %s' % (value, exc))
	try:
		data = json.loads(text)
	except ValueError as exc:
		raise UsageError('invalid JSON: %s' % exc)
	if not isinstance(data, dict):
		raise UsageError('expected a JSON object')
	for key, entries in data.items():
		for entry in entries if isinstance(entries, list) else [entries]:
			try:
				parse_scalar(entry)
			except (ValueError, ZeroDivisionError):
				raise UsageError('invalid rational literal %r in %r' % (entry, key))
	return data


def _scalar(value):
	try:
		return parse_scalar(value)
	except (ValueError, ZeroDivisionError):
		raise UsageError('invalid rational literal %r' % (value,))


class RunConfig(object):
	"""Everything one invocation needs; built from the parsed arguments and
	the effective settings.
	"""

	def __init__(self, command, options, settings):
		if command not in COMMANDS:
			raise UsageError('unknown command %r' % (command,))
		self.command = command
		self.options = options
		self.settings = settings
		self.format = getattr(options, 'format', None) or 'json'
		self.output = getattr(options, 'output', None)
		for name in ('depth_cap', 'workers'):
			value = getattr(options, name, None)
			setattr(self, name, settings[name] if value is None else value)
			if getattr(self, name) < 1:
				raise UsageError('%s must be positive' % name.replace('_', '-'))
		for name in ('rank', 'catalog', 'rank_span'):
			value = getattr(options, name, None)
			if value is not None and not 1 <= value <= settings['rank_cap']:
				raise UsageError('--%s must be between 1 and %d' %
					(name.replace('_', '-'), settings['rank_cap']))
		self.svg = getattr(options, 'svg', None)
		if self.format == 'svg':
			if command not in SVG_COMMANDS:
				raise UsageError('svg output is only available for %s' % ', '.join(SVG_COMMANDS))
			self.svg = self.svg or self.output
			if not self.svg:
				raise UsageError('svg output needs --svg or --output')

	@classmethod
	def from_args(cls, args, settings=None):
		if settings is None:
			settings = load_settings(args.config_dir)
		return cls(args.command, args, settings)

	def sequence(self):
		if self.options.seq is None:
			raise UsageError('--seq is required for %s' % self.command)
		return ParamSequence.from_json(_load_json(self.options.seq))


def _emit(config, payload):
	if isinstance(payload, str):
		text = payload if payload.endswith('\n') else payload + '\n'
	else:
		text = json.dumps(payload, indent=2, sort_keys=True) + '\n'
	if config.output:
		with open(config.output, 'w') as output_file:
			output_file.write(text)
	else:
		sys.stdout.write(text)


def _run_classify(config):
	_emit(config, classify(config.sequence()).dumps())
	return EXIT_OK


def _plotting():
	from cantorvals import plotting
	if not plotting.available():
		raise UsageError('svg output needs matplotlib and numpy')
	return plotting


def _run_construct(config):
	seq = config.sequence()
	options = config.options
	if config.svg:
		_plotting().draw_construction(seq, options.depth, config.svg, options.kind)
		if config.format == 'svg':
			return EXIT_OK
	if options.code is None:
		depth_slice = enumerate_difference(seq, options.depth, config.workers, config.depth_cap)
		_emit(config, depth_slice.to_json('slice'))
		return EXIT_OK
	try:
		s = TernaryCode(options.code)
	except ValueError as exc:
		raise UsageError('invalid code %r: %s' % (options.code, exc))
	data = {'code': str(s), 'J': interval_J(seq, s).to_json(),
		'children': [child.to_json() for child in children(seq, s)]}
	finder = gap if seq.ratio(len(s) + 1) > ONE_THIRD else overlap
	data['gaps' if finder is gap else 'overlaps'] = [finder(seq, s, side).to_json()
		for side in (0, 1)]
	_emit(config, data)
	return EXIT_OK


def _run_oracle(config):
	seq = config.sequence()
	options = config.options
	if options.contains is not None:
		x = _scalar(options.contains)
		_emit(config, {'x': format_scalar(x), 'depth': options.depth,
			'contains': contains(seq, options.depth, x)})
		return EXIT_OK
	if options.probe:
		try:
			depths = [int(depth) for depth in options.probe.split(',')]
		except ValueError:
			raise UsageError('--probe needs comma-separated depths, got %r' % options.probe)
		_emit(config, conjecture_probe(seq, depths, config.workers, config.depth_cap))
		return EXIT_OK
	if options.catalog is not None:
		report = gap_catalog_crosscheck(seq, rank_indices(seq), options.catalog,
			config.workers, config.depth_cap)
		_emit(config, report.to_json())
		report.raise_for_mismatch()
		return EXIT_OK
	depth_slice = enumerate_difference(seq, options.depth, config.workers, config.depth_cap)
	if options.emit == 'csv':
		_emit(config, depth_slice.to_csv())
	else:
		_emit(config, depth_slice.to_json(options.emit))
	return EXIT_OK


def _run_region_scan(config):
	options = config.options
	try:
		scan = region_scan(options.a1, options.a2, config.workers, options.samples)
	except ValueError as exc:
		raise UsageError(str(exc))
	if config.svg:
		_plotting().draw_region(scan, config.svg)
	if options.csv:
		with open(options.csv, 'w') as output_file:
			output_file.write(scan.to_csv())
	if config.format == 'svg':
		return EXIT_OK
	_emit(config, scan.to_csv())
	return EXIT_OK


def _run_measure(config):
	seq = config.sequence()
	value = cantorval_measure(seq)
	data = {'measure': format_scalar(value), 'decimal': format_decimal(value)}
	if config.options.rank is not None:
		partial = measure_at_depth(seq, rank_indices(seq), config.options.rank,
			config.workers, config.depth_cap)
		data['partial'] = {'rank': config.options.rank, 'measure': format_scalar(partial),
			'decimal': format_decimal(partial)}
	_emit(config, data)
	return EXIT_OK


def _run_convert(config):
	options = config.options
	if options.e3322 is not None:
		q = _scalar(options.e3322)
		_emit(config, {'q': format_scalar(q), 'verdict': e3322_structure(q).to_json()})
		return EXIT_OK
	if options.mg is not None:
		data = _load_json(options.mg)
		scale, seq = series_to_cantor(Multigeometric.from_json(data))
		data = seq.to_json()
		data['r0'] = format_scalar(scale)
		_emit(config, data)
		return EXIT_OK
	seq = config.sequence()
	data = {'terms': [format_scalar(x) for x in cantor_to_series(seq, options.terms)]}
	if seq.periodic and not seq.prefix:
		data['multigeometric'] = cantor_multigeometric(seq).to_json()
	_emit(config, data)
	return EXIT_OK


def _run_verify(config):
	from cantorvals.verification import run_suite
	options = config.options
	if options.seq:
		sequences = [ParamSequence.from_json(_load_json(value)) for value in options.seq]
	else:
		sequences = [ParamSequence.from_json(data) for data in GOLDEN_SEQUENCES]
	random_count = config.settings['samples'] if options.random is None else options.random
	report = run_suite(sequences, options.depth, options.rank_span, random_count, options.seed)
	_emit(config, report.dumps())
	return EXIT_OK if report.passed else EXIT_STRUCTURAL


RUNNERS = {
	'classify': _run_classify,
	'construct': _run_construct,
	'oracle': _run_oracle,
	'region-scan': _run_region_scan,
	'measure': _run_measure,
	'convert': _run_convert,
	'verify': _run_verify,
}


def run(config):
	"""
	:returns: the exit status
	:rtype: int
	"""
	try:
		return RUNNERS[config.command](config)
	except UsageError as exc:
		logger.error('%s', exc)
		return EXIT_USAGE
	except PreconditionError as exc:
		logger.error('%s: %s', type(exc).__name__, exc)
		return EXIT_PRECONDITION
	except StructuralError as exc:
		logger.error('%s', exc)
		return EXIT_STRUCTURAL


def build_parser():
	parser = argparse.ArgumentParser(prog='cantorvals',
		description='Central Cantor sets, their difference sets and Cantorvals.')
	parser.add_argument('--version', action='version',
		version='%(prog)s ' + cantorvals.__version__)
	parser.add_argument('-v', '--verbose', action='count', default=0,
		help='more logging (repeat for debug output)')
	parser.add_argument('--config-dir', metavar='DIR',
		help='directory with a %s file (default: the working directory)'
		% SETTINGS_FILE_NAME)
	commands = parser.add_subparsers(dest='command', metavar='command')
	commands.required = True

	def add_command(name, help_text, seq=True):
		command = commands.add_parser(name, help=help_text)
		if seq:
			command.add_argument('--seq', metavar='JSON',
				help='sequence as inline JSON or a path to a JSON file')
		command.add_argument('-o', '--output', metavar='PATH', help='output file')
		command.add_argument('--workers', type=int, help='worker processes')
		command.add_argument('--depth-cap', type=int, help='largest enumeration depth')
		return command

	add_command('classify', 'print the verdict for a sequence')

	construct = add_command('construct', 'intervals of the construction')
	construct.add_argument('--depth', type=int, default=3)
	construct.add_argument('--code', metavar='DIGITS',
		help='show J_s, its children and gaps or overlaps')
	construct.add_argument('--kind', choices=('difference', 'cantor'), default='difference')
	construct.add_argument('--format', choices=('json', 'svg'), default='json')
	construct.add_argument('--svg', metavar='PATH', help='also draw the construction to PATH')

	oracle = add_command('oracle', 'brute-force enumeration at finite depth')
	oracle.add_argument('--depth', type=int, default=6)
	oracle.add_argument('--emit', choices=('slice', 'gaps', 'measure', 'csv'), default='slice')
	oracle.add_argument('--contains', metavar='X', help='membership of a rational point')
	oracle.add_argument('--probe', metavar='DEPTHS',
		help='comma-separated depths for the origin radius probe')
	oracle.add_argument('--catalog', type=int, metavar='RANK',
		help='compare the gaps at depth k_RANK with the boundary families')

	scan = add_command('region-scan', 'grid scan of the two-parameter region', seq=False)
	scan.add_argument('--a1', required=True, metavar='START:END:STEPS')
	scan.add_argument('--a2', required=True, metavar='START:END:STEPS')
	scan.add_argument('--samples', type=int, default=200,
		help='samples per boundary branch')
	scan.add_argument('--format', choices=('csv', 'svg'), default='csv')
	scan.add_argument('--svg', metavar='PATH', help='also draw the region to PATH')
	scan.add_argument('--csv', metavar='PATH', help='also write the grid CSV to PATH')

	measure = add_command('measure', 'exact measure of a Cantorval')
	measure.add_argument('--rank', type=int, help='also enumerate at depth k_RANK')

	convert = add_command('convert', 'series and sequence conversions')
	convert.add_argument('--mg', metavar='JSON', help='multigeometric series {"block", "q"}')
	convert.add_argument('--terms', type=int, default=6)
	convert.add_argument('--e3322', metavar='Q', help='classify E(3,3,2,2;Q)')

	verify = add_command('verify', 'run the structural check suite', seq=False)
	verify.add_argument('--seq', metavar='JSON', action='append',
		help='sequence to check (repeatable; defaults to two built-in sequences)')
	verify.add_argument('--depth', type=int, default=6)
	verify.add_argument('--rank-span', type=int, default=3)
	verify.add_argument('--random', type=int, metavar='COUNT',
		help='number of random sequences for the interval checks')
	verify.add_argument('--seed', type=int, default=0)
	return parser


def main(argv=None):
	args = build_parser().parse_args(argv)
	level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
	logging.basicConfig(level=level, format='%(levelname)s: %(name)s: %(message)s')
	try:
		config = RunConfig.from_args(args)
	except UsageError as exc:
		logger.error('%s', exc)
		return EXIT_USAGE
	return run(config)
