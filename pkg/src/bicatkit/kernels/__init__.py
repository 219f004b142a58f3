"""Scan kernel selection: compiled extension when available, else pure Python.

Set ``BICATKIT_PURE=1`` in the environment to force the fallback (used by the
benchmark and the kernel parity tests).
"""
import os

from . import pure

if os.environ.get("BICATKIT_PURE"):
    impl = pure
else:
    try:
        from .. import _core as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pure

IMPLEMENTATION = impl.IMPLEMENTATION

scan_pentagon = impl.scan_pentagon
scan_triangle = impl.scan_triangle
scan_assoc_nat = impl.scan_assoc_nat
scan_unitor_nat = impl.scan_unitor_nat
scan_comp_typing = impl.scan_comp_typing
scan_comp_id = impl.scan_comp_id
scan_interchange = impl.scan_interchange
