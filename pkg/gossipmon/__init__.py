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
This package provides modules for the **gossipmon** toolkit.

The :mod:`gossipmon.semiring` module implements boolean matrices and the call
generators of the gossip monoid, :mod:`gossipmon.monoid` enumerates the monoid,
:mod:`gossipmon.solvers` decides membership, transformation and
:math:`\\mathcal{J}`-order questions exactly, and :mod:`gossipmon.reductions`
builds and checks the hardness reductions between them.
"""
__title__ = 'gossipmon'
__author__ = 'The gossipmon developers'
__copyright__ = 'Copyright (c) 2024 The gossipmon developers'
__license__ = 'MIT'
