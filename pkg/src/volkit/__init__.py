"""volkit: volatility construction and time-series econometrics for aligned
daily financial panels.

A library plus CLI covering GARCH(1,1) and realized-volatility construction,
ADF / Johansen / Granger / White testing, PCA decorrelation, ARDL regression,
and a handful of closed-form finance calculators, with an end-to-end pipeline
that renders the whole analysis as text, CSV + figures, or JSON.
"""

__version__ = "0.1.0"

from . import ardl, factor, ingest, numerics, series, stattests, theory, volatility
from .errors import VolkitError

__all__ = [
    "VolkitError",
    "__version__",
    "ardl",
    "factor",
    "ingest",
    "numerics",
    "series",
    "stattests",
    "theory",
    "volatility",
]
