# tests/conftest.py
# =================
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
import json
import typing as ty

import pytest
import pkg_resources

import clarcube


#: File name given to the file providing metadata about the test data files.
DATA_META_FNAME = "metadata.json"

#: Catalog members small enough for exhaustive checks.
SMALL_CATALOG = (
    "benzene",
    "naphthalene",
    "anthracene",
    "phenanthrene",
    "triphenylene",
    "pyrene",
)


@pytest.fixture
def lib_data_metadata():
    """Load the metadata about embedded test data files."""
    return json.load(
        pkg_resources.resource_stream("tests.lib", f"data/{DATA_META_FNAME}")
    )


@pytest.fixture(
    params=filter(
        lambda x: x != DATA_META_FNAME,
        pkg_resources.resource_listdir("tests.lib", "data"),
    )
)
def lib_data(request) -> ty.Tuple[str, ty.BinaryIO]:
    """Generate a stream of test data files names an file pointers."""
    name = f"data/{request.param}"
    return name, pkg_resources.resource_stream("tests.lib", name)


@pytest.fixture
def lib_path():
    """Resolve the path of an embedded test data file."""

    def _path(fname: str) -> str:
        return pkg_resources.resource_filename("tests.lib", f"data/{fname}")

    return _path


@pytest.fixture
def benzene():
    return clarcube.hexsys.catalog("benzene")


@pytest.fixture
def naphthalene():
    return clarcube.hexsys.catalog("naphthalene")


@pytest.fixture
def anthracene():
    return clarcube.hexsys.catalog("anthracene")


@pytest.fixture
def pyrene():
    return clarcube.hexsys.catalog("pyrene")


@pytest.fixture
def coronene():
    return clarcube.hexsys.catalog("coronene")


@pytest.fixture
def lone_vertex():
    """A generalized system without perfect matching."""
    return clarcube.hexsys.HexagonalSystem((), [(0, 2)], ())


@pytest.fixture(params=SMALL_CATALOG)
def small_system(request):
    """Generate the small members of the catalog."""
    return clarcube.hexsys.catalog(request.param)
