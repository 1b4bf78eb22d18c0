# Copyright (c) 2025-2026 driftscript contributors
#
# Permission is hereby granted, free of charge, to any person obtaining
# a copy of this software and associated documentation files (the
# "Software"), to deal in the Software without restriction, including
# without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to
# the following conditions:
#
# The above copyright notice and this permission notice shall be
# included in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE
# LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION
# OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION
# WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
#
import logging
import sys
from typing import List, Tuple

import click
import click_log

from . import __version__, controllers
from .diagnostics import render_diagnostic
from .exceptions import CompileError, FatalError
from .settings import InvalidSettingsError, get_config, limits_from_config

logger = logging.getLogger('driftscript')
click_log.basic_config('driftscript')


def global_options(f):
    def logfile_callback(ctx, option, path):
        ctx.logfilepath = path

    config = click.option(
        '--config', '-c',
        help='The config file to use.',
        default=None, metavar='PATH'
    )

    logfile = click.option(
        '--logfile', '-l',
        help='The logfile to use [defaults to stderr]',
        type=click.Path(),
        callback=logfile_callback,
        default=None,
        expose_value=False,
        metavar='LOGFILE',
    )

    version = click.version_option(version=__version__)

    return logfile(config(version(f)))


def prepare_context(ctx, config):
    assert ctx.obj is None

    if getattr(ctx, 'logfilepath', None):
        logging.getLogger('driftscript').handlers = [logging.FileHandler(ctx.logfilepath)]
    logger.debug(f'driftscript {__version__}')
    try:
        conf = get_config(config)
    except InvalidSettingsError:
        sys.exit(2)
    else:
        logger.debug('Using config:')
        logger.debug(stringify_conf(conf))

    ctx.obj = {'conf_path': config, 'conf': conf}


def stringify_conf(conf):
    out = []
    for key, value in conf.items():
        out.append(f'[{key}]')
        for subkey, subvalue in value.items():
            out.append(f'  {subkey}: {subvalue}')
    return '\n'.join(out)


def _stdin_is_tty() -> bool:
    return sys.stdin.isatty()


def read_input(path: str) -> str:
    """reads a file, or standard input for `-`

    Bytes are taken as UTF-8, undecodable bytes survive as surrogates and are
    then rejected by the tokenizer with a position.
    """
    try:
        if path == '-':
            data = click.get_binary_stream('stdin').read()
        else:
            with open(path, 'rb') as input_file:
                data = input_file.read()
    except OSError as error:
        logger.fatal(f'cannot read {path}: {error.strerror}')
        sys.exit(2)
    return data.decode('utf-8', errors='surrogateescape')


def _select_inputs(inputs: Tuple[str, ...], wanted: int) -> List[str]:
    if not inputs:
        if wanted != 1 or _stdin_is_tty():
            raise click.UsageError('no input given')
        return ['-']
    if len(inputs) != wanted:
        raise click.UsageError(
            f'expected {wanted} input{"s" if wanted > 1 else ""}, got {len(inputs)}')
    return list(inputs)


def _echo_rows(rows: List[str]) -> None:
    if rows:
        click.echo('\n'.join(rows))


def _get_cli():
    @click.command()
    @click_log.simple_verbosity_option('driftscript')
    @global_options
    @click.option('--check', is_flag=True, help='Only validate, print nothing on success.')
    @click.option('--kinds/--no-kinds', default=None,
                  help='Prefix every payload with its result kind and a tab.')
    @click.option('--stats', is_flag=True, help='Print readability statistics of the input.')
    @click.option('--compare', is_flag=True,
                  help='Compare the statistics of a DriftScript and a Narsese file.')
    @click.argument('inputs', nargs=-1, metavar='[FILE|-]...')
    @click.pass_context
    def driftc(ctx, config, check, kinds, stats, compare, inputs):
        """Compile DriftScript into Narsese.

        Results are printed one per line, diagnostics go to stderr as
        `line:col: error: message`.
        """
        if sum((check, stats, compare)) > 1:
            raise click.UsageError('--check, --stats and --compare are mutually exclusive')
        if kinds and (check or stats or compare):
            raise click.UsageError('--kinds only applies when compiling')
        prepare_context(ctx, config)
        conf = ctx.obj['conf']

        if compare:
            driftscript_path, narsese_path = _select_inputs(inputs, 2)
            _echo_rows(controllers.compare(read_input(driftscript_path),
                                           read_input(narsese_path)))
            return
        path, = _select_inputs(inputs, 1)
        source = read_input(path)
        if stats:
            _echo_rows(controllers.stats(source))
            return

        limits = limits_from_config(conf)
        config_keys = conf['compiler']['config_keys']
        if kinds is None:
            kinds = conf['output']['kinds']
        try:
            if check:
                controllers.check_unit(source, limits=limits, config_keys=config_keys)
            else:
                _echo_rows(controllers.compile_unit(
                    source, limits=limits, config_keys=config_keys, kinds=kinds))
        except CompileError as error:
            click.echo(render_diagnostic(error.diagnostic), err=True)
            sys.exit(1)

    @click.command()
    @click_log.simple_verbosity_option('driftscript')
    @global_options
    @click.option('--category', '-C', 'categories', multiple=True, metavar='NAME',
                  help='Only run this category. Can be specified multiple times.')
    @click.option('--coverage', is_flag=True, help='Also print the NAL construct coverage.')
    @click.option('--jobs', '-j', default=1, type=click.IntRange(min=1),
                  help='Number of cases run in parallel.')
    @click.argument('directory', required=False, metavar='[DIR]')
    @click.pass_context
    def conformance(ctx, config, categories, coverage, jobs, directory):
        """Run the golden fixture corpus.

        DIR defaults to `fixtures` from the [conformance] config section.
        """
        prepare_context(ctx, config)
        directory = directory or ctx.obj['conf']['conformance']['fixtures']
        if not directory:
            raise click.UsageError('no fixture directory given')
        try:
            rows, report = controllers.conformance(
                directory, categories=categories, coverage=coverage, workers=jobs)
        except FatalError as error:
            logger.debug(error, exc_info=True)
            logger.fatal(error)
            sys.exit(2)
        _echo_rows(rows)
        sys.exit(0 if report.ok else 1)

    return driftc, conformance


main_driftc, main_conformance = _get_cli()
