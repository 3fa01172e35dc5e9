"""Exact and asymptotic coefficients of weighted partition generating functions.

Thin wrapper over the compiled `_core` extension.  The extension is looked up
first inside the package (installed layout) and then on ``sys.path`` (build
trees where the module sits next to the sources).
"""

try:
    from ._core import (  # noqa: F401
        DomainError,
        IoError,
        NumericError,
        cauchy_count,
        coeffs,
        evaluate_log,
        model,
        saddle,
        zeta_mt2,
        zeta_pk,
        zeta_so5,
    )
except ImportError:  # pragma: no cover - build-tree layout
    from _core import (  # noqa: F401
        DomainError,
        IoError,
        NumericError,
        cauchy_count,
        coeffs,
        evaluate_log,
        model,
        saddle,
        zeta_mt2,
        zeta_pk,
        zeta_so5,
    )

__all__ = [
    "DomainError",
    "IoError",
    "NumericError",
    "cauchy_count",
    "coeffs",
    "evaluate_log",
    "model",
    "saddle",
    "zeta_mt2",
    "zeta_pk",
    "zeta_so5",
]
