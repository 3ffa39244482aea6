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
This package provides exact decision procedures, with witnesses, for the
problems on gossip monoids:

- the *transformation problem* (does :math:`XG = Y` hold for some
  :math:`G \\in G_n`) and its restriction to matrices that satisfy the
  maximal column condition (:mod:`gossipmon.solvers.transformation`);
- the *membership problem* (is :math:`A \\in G_n`,
  :mod:`gossipmon.solvers.membership`);
- the *J-order problem* (do :math:`U, V \\in G_n` with :math:`UYV = X` exist,
  :mod:`gossipmon.solvers.j_order`);
- the *dominating set problem* by exhaustive subset search
  (:mod:`gossipmon.solvers.domination`).

Every search is a pruned breadth-first search (see :mod:`gossipmon.search`)
that answers *found*, *proven absent* or *inconclusive*.  Witnesses are
checked by the independent multiply-out code of
:mod:`gossipmon.solvers.verification`.
"""


__docformat__ = 'reStructuredText'

__all__ = ['domination', 'j_order', 'membership', 'transformation',
           'verification']
