"""Hot solver kernels with interchangeable backends.

Two implementations share one contract: ``_speed`` (Cython) and ``_pure``
(plain Python).  The compiled backend is preferred when importable; set
``REDKIT_KERNELS=pure`` or ``REDKIT_KERNELS=compiled`` to force a choice.

Contract (both backends):

- ``subset_sum_solve(items, target)``: every item in [1, target]; returns an
  ascending index list summing to target, or None.
- ``subset_sum_mod_solve(items, q, target)``: items and target in [0, q);
  returns an ascending index list summing to target mod q, or None.
- ``counter_machine_solve(incs, decs, required, dimension, limit)``: masks of
  +1/-1 coordinates per vector; returns the chosen ascending index list, or
  None; raises RuntimeError once more than ``limit`` states are stored.
- ``ilp01_brute(columns, rhs)``: exhaustive 0-1 search, at most 30 columns;
  returns an 0/1 assignment list, or None.
"""

import os

_choice = os.environ.get("REDKIT_KERNELS", "auto")

if _choice not in ("auto", "pure", "compiled"):
    raise ValueError(f"REDKIT_KERNELS must be auto, pure, or compiled: {_choice!r}")

if _choice == "pure":
    from . import _pure as _impl
    BACKEND = "pure"
else:
    try:
        from . import _speed as _impl
        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
        from . import _pure as _impl
        BACKEND = "pure"

subset_sum_solve = _impl.subset_sum_solve
subset_sum_mod_solve = _impl.subset_sum_mod_solve
counter_machine_solve = _impl.counter_machine_solve
ilp01_brute = _impl.ilp01_brute
