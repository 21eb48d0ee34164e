"""Matrix file I/O.

On-disk format: JSON object {"dim": n, "re": [[...]], "im": [[...]]},
row-major, plain decimal floats.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import BadParameter
from .linalg import as_matrix


def load_matrix(path) -> np.ndarray:
    with open(path) as fh:
        obj = json.load(fh)
    try:
        dim = int(obj["dim"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise BadParameter(f"bad matrix file {path}: {exc}")
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise BadParameter(
            f"bad matrix file {path}: dim={dim} but shapes {re.shape}, {im.shape}"
        )
    return as_matrix(re + 1j * im)


def save_matrix(a, path) -> None:
    a = as_matrix(a)
    obj = {
        "dim": a.shape[0],
        "re": [[float(x) for x in row] for row in a.real],
        "im": [[float(x) for x in row] for row in a.imag],
    }
    Path(path).write_text(json.dumps(obj))
