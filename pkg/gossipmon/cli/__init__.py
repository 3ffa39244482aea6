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
This package provides the command-line interface of the toolkit, which runs
the solvers, enumerates monoids, and emits and verifies reduced instances.
"""


__docformat__ = 'reStructuredText'

__all__ = ['cli']
