from .check import check_command  # noqa: F401
from .compute import (  # noqa: F401
    alt_command,
    apply_command,
    compound_command,
    contract_command,
    d_command,
    det_command,
    minor_command,
    pair_command,
    wedge_command,
)
from .enum import enum_command  # noqa: F401
from .info import info_command  # noqa: F401
