"""Reduction kernel selected at import: compiled extension if built, else pure Python."""

from __future__ import annotations

import os

if os.environ.get("DEGENLAB_PURE_PYTHON"):
    from ._pykernel import IMPLEMENTATION, mono_coprime, mono_divides, mono_lcm, mono_mul, mul_term, normal_form
else:
    try:
        from ._ckernel import IMPLEMENTATION, mono_coprime, mono_divides, mono_lcm, mono_mul, mul_term, normal_form
    except ImportError:  # extension not built
        from ._pykernel import IMPLEMENTATION, mono_coprime, mono_divides, mono_lcm, mono_mul, mul_term, normal_form

__all__ = ["IMPLEMENTATION", "mono_coprime", "mono_divides", "mono_lcm", "mono_mul", "mul_term", "normal_form"]
