# Copyright (c) the metacheck contributors
# SPDX-License-Identifier: Apache-2.0

"""Class-model well-formedness and snapshot conformance checking."""

from ._core import (
    DEFAULT_ENUMERATION_CAP,
    CrossCheckReport,
    Disagreement,
    Model,
    Snapshot,
    Violation,
    all_parents,
    check_model,
    check_snapshot,
    count_snapshots,
    cross_check,
    direct_of,
    enumerate_snapshots,
    has_same_overlapping_constraint,
    indirect_of,
    instances_of,
    is_direct_instance_of,
    ocl_is_kind_of,
    ocl_is_type_of,
    parse_model,
    parse_snapshot,
    render_model,
    render_snapshot,
    specializations_of,
    valid_by_definition,
)

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "CrossCheckReport",
    "Disagreement",
    "Model",
    "Snapshot",
    "Violation",
    "all_parents",
    "check_model",
    "check_snapshot",
    "count_snapshots",
    "cross_check",
    "direct_of",
    "enumerate_snapshots",
    "has_same_overlapping_constraint",
    "indirect_of",
    "instances_of",
    "is_direct_instance_of",
    "ocl_is_kind_of",
    "ocl_is_type_of",
    "parse_model",
    "parse_snapshot",
    "render_model",
    "render_snapshot",
    "specializations_of",
    "valid_by_definition",
]
