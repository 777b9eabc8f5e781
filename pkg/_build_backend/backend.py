"""In-tree PEP 517 backend wrapping setuptools.

The repository's setup.py is a standalone copy-to-user-dir install script
that does not call setuptools.setup(), so pip cannot get metadata from it.
This backend runs the default ``setup()`` (configured by pyproject.toml)
instead of executing setup.py.
"""

from setuptools import build_meta as _bm


class _Backend(_bm._BuildMetaBackend):
    def run_setup(self, setup_script="setup.py"):
        from setuptools import setup

        setup()


_BACKEND = _Backend()

get_requires_for_build_wheel = _BACKEND.get_requires_for_build_wheel
get_requires_for_build_sdist = _BACKEND.get_requires_for_build_sdist
prepare_metadata_for_build_wheel = _BACKEND.prepare_metadata_for_build_wheel
build_wheel = _BACKEND.build_wheel
build_sdist = _BACKEND.build_sdist
get_requires_for_build_editable = _BACKEND.get_requires_for_build_editable
prepare_metadata_for_build_editable = _BACKEND.prepare_metadata_for_build_editable
build_editable = _BACKEND.build_editable
