"""Sandpile groups of outerplane graphs, polygon chains and flowers."""

from ._core import (
    SandgroupError,
    catalog_names,
    flower,
    group_of_outerplane,
    identity,
    reproduce_table,
    smith_form,
    tau_chain,
    transfer,
)

__all__ = [
    "SandgroupError",
    "catalog_names",
    "flower",
    "group_of_outerplane",
    "identity",
    "reproduce_table",
    "smith_form",
    "tau_chain",
    "transfer",
]
