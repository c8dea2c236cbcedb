"""Equivalence classes.

Geography is never part of a key: classes are always computed inside a scope
(an initial region, or an aggregated region after merging).
"""
from collections import defaultdict
from collections.abc import Hashable, Iterable, Mapping
from typing import Optional
from ..exceptions import ValidationError
from .types import EquivalenceClass, EquivalenceClassKey, QuasiIdentifierSchema, Record


def validate_record(record: Record, schema: QuasiIdentifierSchema) -> None:
    if len(record.values) != schema.d:
        raise ValidationError(
            f"Record {record.id} has {len(record.values)} values, "
            f"schema expects {schema.d}",
            record_id=record.id,
        )
    for value, attr in zip(record.values, schema.attributes):
        if not 0 <= value < len(attr.categories):
            raise ValidationError(
                f"Record {record.id}: category index {value} out of range "
                f"for attribute '{attr.name}'",
                record_id=record.id,
                attribute=attr.name,
            )


def compute_equivalence_classes(
    records: Iterable[Record],
    schema: QuasiIdentifierSchema,
    scope: Optional[Mapping[str, Hashable]] = None,
) -> dict[Hashable, list[EquivalenceClass]]:
    """compute_equivalence_classes.

    Groups records by (scope, key). ``scope`` maps a record id to its scope;
    by default the scope is the record's initial region.

    Returns:
        dict: scope -> classes, both sorted; members keep input order.
    """
    groups: dict[Hashable, dict[EquivalenceClassKey, list[str]]] = defaultdict(
        lambda: defaultdict(list)
    )
    for record in records:
        validate_record(record, schema)
        where = record.region_id if scope is None else scope[record.id]
        groups[where][record.values].append(record.id)
    return {
        where: [
            EquivalenceClass(key=key, member_ids=tuple(members[key]))
            for key in sorted(members)
        ]
        for where, members in sorted(groups.items(), key=lambda item: item[0])
    }


def class_sizes(classes: Iterable[EquivalenceClass]) -> list[int]:
    return [c.size for c in classes]
