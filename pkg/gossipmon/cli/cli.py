#!/usr/bin/env python
# -*- coding: utf-8 -*-


# (c) 2024 The gossipmon developers
#
# This file is a part of the Gossip Monoid Toolkit (gossipmon) project.
# USE, MODIFICATION, COPYING AND DISTRIBUTION OF THIS SOFTWARE IS SUBJECT TO
# THE TERMS AND CONDITIONS OF THE MIT LICENSE.  YOU SHOULD HAVE RECEIVED A COPY
# OF THE MIT LICENSE ALONG WITH THIS SOFTWARE; IF NOT, YOU CAN DOWNLOAD A COPY
# FROM HTTP://WWW.OPENSOURCE.ORG/.

"""
Synopsis
--------
``gossipmon`` -- a console script to solve, enumerate and reduce problems on
gossip monoids::

    gossipmon [-h | -d | -v | -i DIRECTORY] [--budget N] [--seed S]
              [--configuration FILE] [--log-level LEVEL] [--workers W]
              COMMAND ...

    commands:
      simulate            print the knowledge matrix after each call
      enumerate           enumerate a monoid and print its size and diameter
      member              decide membership in the gossip monoid
      transform           decide whether X G = Y for a gossip element G
      jorder              decide whether U Y V = X for gossip elements U, V
      domset              find a dominating set of at most K vertices
      reduce              write the reduced instance of a problem
      verify              check a witness by multiplication
      factor-conference   print a minimal word of a conference call

Description
-----------
Matrices are read from ``BMAT v1`` files, graphs from ``GRAPH v1`` files and
words from files with one call ``i j`` per line (see
:mod:`gossipmon.formats`).  A decision command prints ``yes``, ``no`` or
``inconclusive``, then ``nodes_expanded=<k>``, then the witness, one call per
line.  The exit status is:

- ``0``: yes (or success);
- ``1``: no (or a rejected witness, or an error);
- ``2``: inconclusive, the search budget ran out;
- ``64``: a malformed instance or command line;
- ``65``: an unreadable or malformed input file.

A configuration file with all tunables is written by::

    gossipmon -i .
"""


import argparse
import sys

from os.path import join, realpath, split
from shutil import copy
from traceback import print_exc

from gossipmon._version import get_version, project_information
from gossipmon.configuration import Configuration
from gossipmon.errors import DimensionError, GossipError, \
    MalformedInstanceError, OutOfRangeError, ParseError
from gossipmon.formats import ReductionMetadata, dump, format_matrix, \
    format_metadata, format_vertex_set, format_word, load, parse_graph, \
    parse_matrix, parse_vertex_set, parse_word
from gossipmon.generators import GeneratorMode
from gossipmon.monoid import enumerate_monoid, factor_conference, \
    random_word
from gossipmon.reductions.domination import reduce_ds_to_mgtp
from gossipmon.reductions.membership import reduce_mgtp_to_gmp, \
    witness_gmp_from_mgtp
from gossipmon.reductions.nesting import reduce_gtp_to_gjp
from gossipmon.semiring import ConferenceSet, simulate
from gossipmon.solvers.domination import solve_dominating_set
from gossipmon.solvers.j_order import solve_gjp
from gossipmon.solvers.membership import solve_gmp
from gossipmon.solvers.transformation import solve_gtp, solve_mgtp
from gossipmon.solvers.verification import verify_dominating_set, \
    verify_j_order, verify_membership, verify_transformation
from gossipmon.utility import logger
from gossipmon.utility.randomness import get_random_generator


__docformat__ = 'reStructuredText'

#: The POSIX exit status to signal success (or a "yes" answer).
__POSIX_EXIT_SUCCESS = 0

#: The POSIX exit status to signal failure (or a "no" answer).
__POSIX_EXIT_FAILURE = 1

#: The exit status of an inconclusive search.
__EXIT_INCONCLUSIVE = 2

#: The exit status of a malformed instance or command line (``EX_USAGE``).
__POSIX_EXIT_USAGE = 64

#: The exit status of an unreadable input file (``EX_DATAERR``).
__POSIX_EXIT_DATAERR = 65

#: The description string.
__DESCRIPTION = """%s

Copyright (c) 2024  The gossipmon developers

This program comes with ABSOLUTELY NO WARRANTY.
THIS IS FREE SOFTWARE, AND YOU ARE WELCOME TO REDISTRIBUTE IT UNDER THE TERMS
AND CONDITIONS OF THE MIT LICENSE.  YOU SHOULD HAVE RECEIVED A COPY OF THE
LICENSE ALONG WITH THIS SOFTWARE; IF NOT, YOU CAN DOWNLOAD A COPY FROM
HTTP://WWW.OPENSOURCE.ORG.
""" % project_information()


class _UsageError(Exception):
    """
    Raised instead of exiting when the command line cannot be parsed.
    """


class _Parser(argparse.ArgumentParser):
    """
    An argument parser that reports errors by an exception, so that
    :func:`run` decides the exit status.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _critical(message, error):
    """
    Prints a critical error report.
    """
    print('***  [gossipmon] CRITICAL - %s:\n' % message, file=sys.stderr)
    if __debug__ and not isinstance(error, GossipError):
        print_exc(file=sys.stderr)
    else:
        print(error, file=sys.stderr)

def _report(outcome, witness_lines=None):
    """
    Prints a search outcome and returns its exit status.
    """
    print(outcome.status.verdict)
    print('nodes_expanded=%d' % outcome.nodes_expanded)
    if outcome.found:
        text = witness_lines if witness_lines is not None \
            else format_word(outcome.witness)
        print(text, end='')
    return outcome.status.exit_code

def _write_witness(path, text):
    if path is not None:
        dump(path, text)

def _parse_set(text):
    try:
        return ConferenceSet(int(token) for token in text.split(',')
                             if token.strip())
    except ValueError as error:
        raise MalformedInstanceError('Option "--set": comma separated node'
                                     ' indices expected (%s)!' % error)

def _simulate(args, configuration):
    if args.word is not None:
        word = load(args.word, parse_word)
    elif args.random is not None:
        word = random_word(args.n, args.random)
    else:
        raise MalformedInstanceError('A word file or the "--random" option'
                                     ' expected!')
    word.check_dimension(args.n)
    for step, (pair, state) in enumerate(simulate(args.n, word), 1):
        print('call %d: %s' % (step, pair))
        print(state)
    return __POSIX_EXIT_SUCCESS

def _enumerate(args, configuration):
    mode = GeneratorMode.parse(args.mode)
    cap = args.cap if args.cap is not None else configuration.cap(mode)
    enumeration = enumerate_monoid(args.n, mode, cap,
                                   workers=configuration.workers)
    line = 'n=%d mode=%s count=%d diameter=%d' \
        % (args.n, mode, enumeration.count, enumeration.diameter)
    if args.idempotents:
        line += ' idempotents=%d' % len(enumeration.idempotents())
    print(line)
    return __POSIX_EXIT_SUCCESS

def _member(args, configuration):
    a = load(args.file, parse_matrix)
    outcome = solve_gmp(a, configuration.budget)
    if outcome.found:
        _write_witness(args.witness, format_word(outcome.witness))
    return _report(outcome)

def _transform(args, configuration):
    x = load(args.file_x, parse_matrix)
    y = load(args.file_y, parse_matrix)
    solver = solve_mgtp if args.maximal else solve_gtp
    outcome = solver(x, y, configuration.budget)
    if outcome.found:
        _write_witness(args.witness, format_word(outcome.witness))
    return _report(outcome)

def _jorder(args, configuration):
    x = load(args.file_x, parse_matrix)
    y = load(args.file_y, parse_matrix)
    outcome = solve_gjp(x, y, configuration.budget,
                        members_certified=args.certified)
    lines = None
    if outcome.found:
        left = format_word(outcome.witness.left)
        right = format_word(outcome.witness.right)
        _write_witness(args.left_witness, left)
        _write_witness(args.right_witness, right)
        lines = 'left:\n%sright:\n%s' % (left, right)
    return _report(outcome, lines)

def _domset(args, configuration):
    graph = load(args.file_g, parse_graph)
    vertices = solve_dominating_set(graph, args.k)
    if vertices is None:
        print('no')
        return __POSIX_EXIT_FAILURE
    print('yes')
    print(format_vertex_set(vertices), end='')
    _write_witness(args.witness, format_vertex_set(vertices))
    return __POSIX_EXIT_SUCCESS

def _reduce(args, configuration):
    if args.reduction == 'ds-mgtp':
        graph = load(args.file_g, parse_graph)
        instance = reduce_ds_to_mgtp(graph, args.k)
        files = {'A.bmat': format_matrix(instance.a),
                 'B.bmat': format_matrix(instance.b)}
        metadata = ReductionMetadata('ds-mgtp', graph.number_of_nodes(),
                                     args.k)
    elif args.reduction == 'gtp-gjp':
        a = load(args.file_a, parse_matrix)
        b = load(args.file_b, parse_matrix)
        instance = reduce_gtp_to_gjp(a, b)
        files = {'X.bmat': format_matrix(instance.x),
                 'Y.bmat': format_matrix(instance.y),
                 'X.word': format_word(instance.upper_word),
                 'Y.word': format_word(instance.lower_word)}
        metadata = ReductionMetadata('gtp-gjp', a.n)
    else:
        a = load(args.file_a, parse_matrix)
        b = load(args.file_b, parse_matrix)
        g_word = None if args.g_word is None \
            else load(args.g_word, parse_word)
        instance = reduce_mgtp_to_gmp(a, b)
        files = {'C.bmat': format_matrix(instance.c)}
        if g_word is not None:
            files['C.word'] = format_word(witness_gmp_from_mgtp(a, b, g_word))
        metadata = ReductionMetadata('mgtp-gmp', a.n)
    files['reduction.meta'] = format_metadata(metadata)
    for name in sorted(files):
        dump(join(args.output, name), files[name])
        print(join(args.output, name))
    return __POSIX_EXIT_SUCCESS

def _verify(args, configuration):
    if args.problem == 'member':
        a = load(args.file, parse_matrix)
        accepted = verify_membership(a, load(args.witness, parse_word))
    elif args.problem == 'transform':
        x = load(args.file_x, parse_matrix)
        y = load(args.file_y, parse_matrix)
        accepted = verify_transformation(x, y,
                                         load(args.witness, parse_word))
    elif args.problem == 'jorder':
        x = load(args.file_x, parse_matrix)
        y = load(args.file_y, parse_matrix)
        accepted = verify_j_order(x, y, load(args.left_witness, parse_word),
                                  load(args.right_witness, parse_word))
    else:
        graph = load(args.file_g, parse_graph)
        accepted = verify_dominating_set(graph, args.k,
                                         load(args.witness,
                                              parse_vertex_set))
    print('accepted' if accepted else 'rejected')
    return __POSIX_EXIT_SUCCESS if accepted else __POSIX_EXIT_FAILURE

def _factor_conference(args, configuration):
    print(format_word(factor_conference(args.n, _parse_set(args.set))),
          end='')
    return __POSIX_EXIT_SUCCESS

def _parser():
    """
    Returns the argument parser of the ``gossipmon`` command.
    """
    parser = _Parser(prog='gossipmon',
                     description='%s' % project_information())
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        '-d', '--description',
        action='store_true',
        help='show description message and exit')
    group.add_argument(
        '-i', '--initialize',
        metavar='DIRECTORY',
        type=str,
        help='write a configuration file to given directory')
    group.add_argument(
        '-v', '--version',
        action='store_true',
        help='show version message and exit')
    parser.add_argument('--budget', type=int, help='search budget in'
                        ' expanded states (default: 10**7)')
    parser.add_argument('--seed', type=int, help='seed of the random'
                        ' generator')
    parser.add_argument('--configuration', metavar='FILE', type=str,
                        help='configuration file')
    parser.add_argument('--log-level', dest='logger_level', type=str,
                        choices=['critical', 'error', 'warning', 'info',
                                 'debug'], help='logging level')
    parser.add_argument('--workers', type=int, help='worker processes of'
                        ' an enumeration')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')

    command = commands.add_parser('simulate', help='print the knowledge'
                                  ' matrix after each call')
    command.add_argument('--n', type=int, required=True)
    command.add_argument('word', metavar='WORD_FILE', nargs='?')
    command.add_argument('--random', metavar='L', type=int,
                         help='simulate a random word of L calls')
    command.set_defaults(handler=_simulate)

    command = commands.add_parser('enumerate', help='enumerate a monoid')
    command.add_argument('--n', type=int, required=True)
    command.add_argument('--mode', choices=['all', 'adjacent'],
                         default='all')
    command.add_argument('--cap', type=int)
    command.add_argument('--idempotents', action='store_true')
    command.set_defaults(handler=_enumerate)

    command = commands.add_parser('member', help='decide membership')
    command.add_argument('file', metavar='FILE')
    command.add_argument('--witness', metavar='OUT')
    command.set_defaults(handler=_member)

    command = commands.add_parser('transform', help='decide the'
                                  ' transformation problem')
    command.add_argument('file_x', metavar='FILE_X')
    command.add_argument('file_y', metavar='FILE_Y')
    command.add_argument('--maximal', action='store_true',
                         help='require the maximal column condition')
    command.add_argument('--witness', metavar='OUT')
    command.set_defaults(handler=_transform)

    command = commands.add_parser('jorder', help='decide the J-order'
                                  ' problem')
    command.add_argument('file_x', metavar='FILE_X')
    command.add_argument('file_y', metavar='FILE_Y')
    command.add_argument('--certified', action='store_true',
                         help='skip the membership searches')
    command.add_argument('--left-witness', metavar='OUT')
    command.add_argument('--right-witness', metavar='OUT')
    command.set_defaults(handler=_jorder)

    command = commands.add_parser('domset', help='find a dominating set')
    command.add_argument('file_g', metavar='FILE_G')
    command.add_argument('--k', type=int, required=True)
    command.add_argument('--witness', metavar='OUT')
    command.set_defaults(handler=_domset)

    command = commands.add_parser('reduce', help='write a reduced instance')
    reductions = command.add_subparsers(dest='reduction',
                                        metavar='REDUCTION')
    reductions.required = True
    reduction = reductions.add_parser('ds-mgtp')
    reduction.add_argument('file_g', metavar='FILE_G')
    reduction.add_argument('--k', type=int, required=True)
    reduction.add_argument('--output', metavar='DIR', required=True)
    for name in ('gtp-gjp', 'mgtp-gmp'):
        reduction = reductions.add_parser(name)
        reduction.add_argument('file_a', metavar='FILE_A')
        reduction.add_argument('file_b', metavar='FILE_B')
        reduction.add_argument('--output', metavar='DIR', required=True)
    reduction.add_argument('--g-word', metavar='FILE')
    command.set_defaults(handler=_reduce)

    command = commands.add_parser('verify', help='check a witness')
    problems = command.add_subparsers(dest='problem', metavar='PROBLEM')
    problems.required = True
    problem = problems.add_parser('member')
    problem.add_argument('file', metavar='FILE')
    problem.add_argument('--witness', metavar='FILE', required=True)
    problem = problems.add_parser('transform')
    problem.add_argument('file_x', metavar='FILE_X')
    problem.add_argument('file_y', metavar='FILE_Y')
    problem.add_argument('--witness', metavar='FILE', required=True)
    problem = problems.add_parser('jorder')
    problem.add_argument('file_x', metavar='FILE_X')
    problem.add_argument('file_y', metavar='FILE_Y')
    problem.add_argument('--left-witness', metavar='FILE', required=True)
    problem.add_argument('--right-witness', metavar='FILE', required=True)
    problem = problems.add_parser('domset')
    problem.add_argument('file_g', metavar='FILE_G')
    problem.add_argument('--k', type=int, required=True)
    problem.add_argument('--witness', metavar='FILE', required=True)
    command.set_defaults(handler=_verify)

    command = commands.add_parser('factor-conference', help='print a minimal'
                                  ' word of a conference call')
    command.add_argument('--n', type=int, required=True)
    command.add_argument('--set', type=str, required=True,
                         help='comma separated nodes, e.g. 1,2,3')
    command.set_defaults(handler=_factor_conference)
    return parser

def run(argv):
    """
    Runs the ``gossipmon`` command with the argument list *argv* (without the
    program name) and returns its exit status.
    """
    parser = _parser()
    if not argv:
        parser.print_help()
        return __POSIX_EXIT_FAILURE
    try:
        args = parser.parse_args(argv)
    except _UsageError as error:
        print('gossipmon: error: %s' % error, file=sys.stderr)
        return __POSIX_EXIT_USAGE
    if args.description:
        print(__DESCRIPTION)
        return __POSIX_EXIT_SUCCESS
    if args.initialize:
        try:
            base_path = split(realpath(__file__))[0]
            copy(join(base_path, '_configuration_template.py'),
                 join(args.initialize, 'configuration.py'))
            return __POSIX_EXIT_SUCCESS
        except Exception as err:
            _critical('cannot write the configuration file', err)
            return __POSIX_EXIT_FAILURE
    if args.version:
        print(get_version())
        return __POSIX_EXIT_SUCCESS
    if args.command is None:
        parser.print_usage()
        print('gossipmon: error: a command expected', file=sys.stderr)
        return __POSIX_EXIT_USAGE
    overrides = dict(budget=args.budget, seed=args.seed,
                     workers=args.workers, logger_level=args.logger_level)
    try:
        if args.configuration is not None:
            configuration = Configuration.from_file(args.configuration,
                                                    **overrides)
        else:
            configuration = Configuration(**overrides)
    except OSError as err:
        _critical('cannot read the configuration file', err)
        return __POSIX_EXIT_DATAERR
    except (GossipError, TypeError, ValueError) as err:
        _critical('cannot initialize the configuration', err)
        return __POSIX_EXIT_USAGE
    logger.create_logger(configuration.logger_level)
    if configuration.seed is not None:
        get_random_generator(configuration.seed)
    try:
        return args.handler(args, configuration)
    except (MalformedInstanceError, DimensionError, OutOfRangeError) as err:
        _critical('malformed instance', err)
        return __POSIX_EXIT_USAGE
    except (ParseError, OSError) as err:
        _critical('cannot read the input', err)
        return __POSIX_EXIT_DATAERR
    except GossipError as err:
        _critical('cannot continue', err)
        return __POSIX_EXIT_FAILURE
    except Exception as err:
        _critical('an unexpected error occurred', err)
        return __POSIX_EXIT_FAILURE

def main():
    """
    The entry point for the ``gossipmon`` console command.
    """
    sys.exit(run(sys.argv[1:]))

if __name__ == "__main__":
    main()
