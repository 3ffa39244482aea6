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
This package provides constructors, witness translators and verifiers of the
polynomial reductions between the problems of :mod:`gossipmon.solvers`:

- dominating set to the restricted transformation problem
  (:mod:`gossipmon.reductions.domination`);
- transformation to J-order, through the nesting of an arbitrary matrix in a
  larger gossip monoid (:mod:`gossipmon.reductions.nesting`);
- restricted transformation to membership
  (:mod:`gossipmon.reductions.membership`).

Every constructed certificate is multiplied out before it is returned.
"""


__docformat__ = 'reStructuredText'

__all__ = ['domination', 'membership', 'nesting']
