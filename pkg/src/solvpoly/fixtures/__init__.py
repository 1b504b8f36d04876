"""Built-in worked examples.

Each fixture is a problem file shipped with the package; ``load``
returns the parsed ``ProblemFile`` so tests and demos can grab the
algebra, the module and the sample generators without repeating the
JSON.  ``path`` exposes the file itself for exercising the command
line interface.
"""

import os
from typing import List

from ..cli import ProblemFile, parse_problem

_HERE = os.path.dirname(__file__)

NAMES = ("comm2", "weyl1", "qplane", "ex12", "ex14", "qheis")


def path(name: str) -> str:
    """Absolute path of a fixture problem file."""
    if name not in NAMES:
        raise KeyError("unknown fixture %r (have: %s)"
                       % (name, ", ".join(NAMES)))
    return os.path.join(_HERE, name + ".json")


def load(name: str) -> ProblemFile:
    """Parse a fixture problem file."""
    return parse_problem(path(name))


def all_names() -> List[str]:
    return list(NAMES)
