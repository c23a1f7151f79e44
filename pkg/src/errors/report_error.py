"""Error envelope helpers and exit statuses for the command line."""

from __future__ import annotations

from typing import Any, Dict, Optional, Tuple

from src.config import ConfigurationError
from src.cover.model import CharacterError, CoverValidationError
from src.errors.verification import IdentityFailure
from src.galois.ring import RingModulusError
from src.intersection.forms import IntegralityError
from src.modular.family import ModularParamsError
from src.quadratic.characters import InconclusiveNormError
from src.quadratic.class_group import QuadraticFieldError
from src.quadratic.forms import FormError
from src.resolvent.calculus import ResolventRangeError
from src.schema.cover import CoverFileError

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_INPUT_ERROR = 2

# most specific first
_ERROR_TYPES: Tuple[Tuple[type, str], ...] = (
    (CoverFileError, "cover_file_error"),
    (CoverValidationError, "cover_validation_error"),
    (CharacterError, "character_error"),
    (ResolventRangeError, "resolvent_range_error"),
    (IntegralityError, "integrality_error"),
    (RingModulusError, "ring_modulus_error"),
    (InconclusiveNormError, "norm_inconclusive"),
    (QuadraticFieldError, "quadratic_field_error"),
    (FormError, "quadratic_form_error"),
    (ModularParamsError, "invalid_parameters"),
    (ConfigurationError, "configuration_error"),
)


def map_error_type(exc: BaseException, default: str = "invalid_input") -> str:
    if isinstance(exc, IdentityFailure):
        return "verification_error"
    for cls, name in _ERROR_TYPES:
        if isinstance(exc, cls):
            return name
    return default


def exit_status_for(exc: BaseException) -> int:
    if isinstance(exc, IdentityFailure):
        return EXIT_VERIFICATION_FAILURE
    return EXIT_INPUT_ERROR


def _error_detail(exc: BaseException) -> Optional[Dict[str, Any]]:
    if isinstance(exc, CoverFileError) and exc.position is not None:
        return {"position": exc.position}
    if isinstance(exc, CoverValidationError) and exc.component_id is not None:
        return {"component_id": exc.component_id}
    if isinstance(exc, IntegralityError):
        return {"quantity": exc.quantity, "value": str(exc.value)}
    if isinstance(exc, IdentityFailure):
        return {"identity": exc.identity, "datum": exc.datum}
    return None


def build_report_error(
    error_type: str,
    message: str,
    detail: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    """Return the error envelope written to standard output on failure."""

    return {
        "type": "error",
        "error": {
            "type": error_type,
            "message": message,
            "detail": detail,
        },
    }


def error_envelope(exc: BaseException) -> Dict[str, Any]:
    return build_report_error(map_error_type(exc), str(exc) or type(exc).__name__, _error_detail(exc))
