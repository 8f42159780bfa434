import os
from pathlib import Path

_data = Path(__file__).with_name("data")
if not os.environ.get("MOCKM11_DATA_DIR") and _data.is_dir():
    os.environ["MOCKM11_DATA_DIR"] = str(_data)

from ._core import (  # noqa: E402
    R,
    certify_congruent,
    cohen_eisenstein,
    generalized_H,
    gram,
    hurwitz_H,
    psi1_finite_part,
    series,
    table_diff,
    tunnell_a,
    verify,
)

__all__ = [
    "R",
    "certify_congruent",
    "cohen_eisenstein",
    "generalized_H",
    "gram",
    "hurwitz_H",
    "psi1_finite_part",
    "series",
    "table_diff",
    "tunnell_a",
    "verify",
]
