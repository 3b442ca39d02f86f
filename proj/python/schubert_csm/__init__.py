"""Exact CSM classes, Richardson coefficients and the box product on G/B.

Group elements are reduced words such as "s1 s2" ("e" is the identity, "s"
the reflection in rank 1); classes are dicts {word: coefficient} in the
Schubert basis epsilon^w.
"""

import json

from ._core import Flag, InternalInvariantError, SchubertError, version, verify_json

__all__ = ["Flag", "InternalInvariantError", "SchubertError", "verify", "version"]
__version__ = version()


def verify(type, rank, suites=None, max_length=None, jobs=1):
    """Run verification suites and return the report as a dict."""
    return json.loads(verify_json(type, rank, list(suites or []), max_length, jobs))
