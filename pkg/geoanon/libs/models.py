"""Building datamodel models from documents read off disk."""
from typing import Any, TypeVar
from datamodel import BaseModel
from datamodel.exceptions import ParserError
from datamodel.exceptions import ValidationError as ModelValidationError
from ..exceptions import ValidationError

M = TypeVar("M", bound=BaseModel)


def build_model(model: type[M], source: str, **fields: Any) -> M:
    """Instantiate ``model``; any model error becomes a geoanon ValidationError.

    ``source`` names the document (file or entry) in the error message.
    """
    try:
        return model(**fields)
    except ModelValidationError as exc:
        payload = getattr(exc, "payload", None)
        raise ValidationError(
            f"Invalid {model.__name__} in {source}: {payload or exc}",
            payload=payload,
        ) from exc
    except (ParserError, TypeError, ValueError, AttributeError) as exc:
        raise ValidationError(f"Invalid {model.__name__} in {source}: {exc}") from exc
