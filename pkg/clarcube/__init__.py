# clarcube/__init__.py
# ====================
#
# Copying
# -------
#
# Copyright (c) 2026 clarcube authors and contributors.
#
# This file is part of the *clarcube* project.
#
# Clarcube is a free software project. You can redistribute it and/or
# modify it following the terms of the MIT License.
#
# This software project is distributed *as is*, WITHOUT WARRANTY OF ANY
# KIND; including but not limited to the WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE and NONINFRINGEMENT.
#
# You should have received a copy of the MIT License along with
# *clarcube*. If not, see <http://opensource.org/licenses/MIT>.
#
"""Clar covering polynomials of hexagonal systems and cube polynomials of
their resonance graphs.

"""
__version__ = "0.1.0"

import clarcube.typeset
import clarcube.errors
import clarcube.callable
import clarcube.hexsys
import clarcube.matching
import clarcube.poly
import clarcube.cube
import clarcube.resonance
import clarcube.clar
import clarcube.bijection
import clarcube.task
import clarcube.cli
