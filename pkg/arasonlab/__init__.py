"""Exact invariants of unitary involutions over quadratic extensions of Q.

Importing the package loads ``settings.yaml`` and makes sure the directories
listed under ``base_dirs`` exist. The REST application lives in
``arasonlab.api`` so that the algebra can be used without the web stack.
"""
import os

from arasonlab.config import config
from .utils.logger import setup_logger

__version__ = "0.3.0"

# Ensure the directory structure defined in settings.yaml exists at import
# time so that any service can safely assume the folders are present.
for _key, _path in config.get('base_dirs', {}).items():
    if _path:
        os.makedirs(_path, exist_ok=True)

setup_logger('arasonlab_init').debug('arasonlab package initialised (version %s).', __version__)
