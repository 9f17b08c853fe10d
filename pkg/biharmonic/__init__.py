"""
Exact biharmonicity analysis for polynomial maps between spheres.

Forms F: R^(m+1) -> R^(n+1) that restrict to sphere maps are checked with
two independent symbolic routes and a seeded floating-point referee.
"""

from typing import Any, Dict

NUMCHECK_DEFAULTS = {
    "seed": 20240917,
    "points": 200,
    "tol": 1e-9,
    "fd_step": 1e-5,
    "fd_rel_tol": 1e-4,
    "fd_abs_tol": 1e-6,
    "laplacian_step": 1e-4,
    "laplacian_tol": 1e-4,
    "witness_threshold": 1e-6,
}

BIHARMONIC_DEFAULT_CONFIG_DATA = {
    "numcheck": NUMCHECK_DEFAULTS,
    "verify": {"workers": 1},
    "logging": {"level": "WARNING"},
}

# Version information
__version__ = "0.1.0"
__author__ = "2MCorp"
__email__ = "contact@2mcorp.com"

# Export main classes and functions
from .config_manager import ConfigManager  # noqa: E402
from .constructors import GalleryEntry, named_form  # noqa: E402
from .errors import BiharmonicError, ParseError  # noqa: E402
from .fields import AnalysisReport, classify  # noqa: E402
from .maps import PolyMap, SphereMapMeta, sphere_restriction_check  # noqa: E402
from .polyalg import Polynomial, RadicalScalar  # noqa: E402
from .report_utils import (  # noqa: E402
    CheckResult,
    CheckStatus,
    MessageType,
    ToolResponse,
    error_message,
    success_message,
    tool_message,
)


# Convenience functions
def generate_config(overwrite: bool = False) -> Dict[str, Any]:
    """Generate the default configuration file."""
    return ConfigManager.generate_config(overwrite=overwrite)


def get_settings() -> Dict[str, Any]:
    """Defaults merged with biharmonic.yml from the working directory."""
    return ConfigManager.get_settings()


def analyze_source(text: str) -> AnalysisReport:
    """Parse a CLI source expression and classify the resulting map."""
    from .cli.sources import resolve_source

    resolved = resolve_source(text)
    return classify(resolved.map, resolved.hint)


# Package exports
__all__ = [
    # Core classes
    "ConfigManager",
    "Polynomial",
    "RadicalScalar",
    "PolyMap",
    "SphereMapMeta",
    "GalleryEntry",
    "AnalysisReport",
    # Operations
    "classify",
    "named_form",
    "sphere_restriction_check",
    # Report utilities
    "tool_message",
    "success_message",
    "error_message",
    "ToolResponse",
    "MessageType",
    "CheckResult",
    "CheckStatus",
    # Errors
    "BiharmonicError",
    "ParseError",
    # Convenience functions
    "analyze_source",
    "generate_config",
    "get_settings",
    # Configuration
    "BIHARMONIC_DEFAULT_CONFIG_DATA",
    "NUMCHECK_DEFAULTS",
    # Version
    "__version__",
    "__author__",
    "__email__",
]
