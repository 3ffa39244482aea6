# -*- coding: utf-8 -*-


"""
gossipmon -- configuration file.

Pass it to the ``gossipmon`` command with ``--configuration FILE``;  options
given on the command line take precedence over the values below.
"""


## EDIT BELOW -----------------------------------------------------------------

## One of: 'critical', 'error', 'warning', 'info', or 'debug'
logger_level = 'warning'

## Largest number of states a search may expand before it gives up and
## answers "inconclusive":
budget = 10 ** 7

## Largest dimensions enumerated exhaustively (all calls / adjacent calls):
all_calls_cap = 6
adjacent_calls_cap = 8

## Worker processes used by enumerations:
workers = 1

## Seed of the random generator (None for a random seed):
seed = None
