"""Workbench for inconsistency-proof lottery problems.

Library layers: word coding (`godel`), formula syntax (`syntax`), proof
kernel (`kernel`, `profiles`), theory codes and the ordered proof-code
stream (`theory`, `psi`), pi digit groups (`pidigits`), the winner and
certificate machinery (`lottery`), and the no-winner probability model
(`probmodel`). The `cli` module wires them into reproducible experiments.
"""

import sys

# Codes of realistic proof words run to thousands of decimal digits; lift
# CPython's int/str conversion guard once, process-wide.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

__version__ = "0.1.0"
