"""Domain types shared by every stage of the pipeline.

These are immutable and cheap: a national dataset holds millions of records,
so they are slotted dataclasses rather than validated models.
"""
from dataclasses import dataclass, field
import math
from typing import Any, Optional
from ..exceptions import ValidationError

EquivalenceClassKey = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Point2D:
    """Planar point in projected units."""
    x: float
    y: float

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True, slots=True)
class InitialRegion:
    """InitialRegion.

    A unit of the fine regionalization (dissemination area, block, ...).
    ``population`` is the number of records referencing the region once a
    dataset is bound; ``group`` is the label used by the synthetic generator
    (e.g. a province).
    """
    id: str
    point: Point2D
    population: int = 0
    group: Optional[str] = None

    def with_population(self, population: int) -> "InitialRegion":
        return InitialRegion(
            id=self.id, point=self.point, population=population, group=self.group
        )


@dataclass(frozen=True, slots=True)
class Attribute:
    name: str
    categories: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class QuasiIdentifierSchema:
    """QuasiIdentifierSchema.

    Ordered quasi-identifier attributes, each with its ordered categories.
    Record values are indices into these category lists.
    """
    attributes: tuple[Attribute, ...] = ()
    _index: dict[str, dict[str, int]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        index: dict[str, dict[str, int]] = {}
        for attr in self.attributes:
            if attr.name in index:
                raise ValidationError(
                    f"Duplicated quasi-identifier attribute '{attr.name}'",
                    attribute=attr.name,
                )
            if not attr.categories:
                raise ValidationError(
                    f"Attribute '{attr.name}' needs at least one category",
                    attribute=attr.name,
                )
            lookup = {label: idx for idx, label in enumerate(attr.categories)}
            if len(lookup) != len(attr.categories):
                raise ValidationError(
                    f"Attribute '{attr.name}' has duplicated categories",
                    attribute=attr.name,
                )
            index[attr.name] = lookup
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "QuasiIdentifierSchema":
        try:
            attributes = tuple(
                Attribute(
                    name=str(item["name"]),
                    categories=tuple(str(c) for c in item["categories"]),
                )
                for item in data.get("attributes", [])
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError(
                f"Invalid schema document, missing {exc}"
            ) from exc
        return cls(attributes=attributes)

    def to_dict(self) -> dict[str, Any]:
        return {
            "attributes": [
                {"name": attr.name, "categories": list(attr.categories)}
                for attr in self.attributes
            ]
        }

    @property
    def d(self) -> int:
        return len(self.attributes)

    @property
    def names(self) -> list[str]:
        return [attr.name for attr in self.attributes]

    @property
    def class_count(self) -> int:
        """Number of distinct keys the schema can produce."""
        return math.prod(len(attr.categories) for attr in self.attributes)

    def lookup(self, name: str) -> dict[str, int]:
        return self._index[name]

    def select(self, names: list[str]) -> "QuasiIdentifierSchema":
        """Sub-schema with the given attributes, in the given order."""
        by_name = {attr.name: attr for attr in self.attributes}
        missing = [name for name in names if name not in by_name]
        if missing:
            raise ValidationError(
                f"Unknown quasi-identifiers: {', '.join(missing)}",
                attributes=missing,
            )
        return QuasiIdentifierSchema(attributes=tuple(by_name[n] for n in names))

    def positions(self, names: list[str]) -> list[int]:
        order = {name: pos for pos, name in enumerate(self.names)}
        return [order[name] for name in names]


@dataclass(frozen=True, slots=True)
class Record:
    """One individual: id, initial region and quasi-identifier indices."""
    id: str
    region_id: str
    values: EquivalenceClassKey = ()

    def project(self, positions: list[int]) -> "Record":
        return Record(
            id=self.id,
            region_id=self.region_id,
            values=tuple(self.values[p] for p in positions),
        )


@dataclass(frozen=True, slots=True)
class EquivalenceClass:
    """Records sharing a key inside one (initial or aggregated) region."""
    key: EquivalenceClassKey
    member_ids: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.member_ids)

    def __len__(self) -> int:
        return len(self.member_ids)


@dataclass(frozen=True, slots=True)
class Site:
    """Voronoi generator point; one site yields one aggregated region."""
    index: int
    location: Point2D
