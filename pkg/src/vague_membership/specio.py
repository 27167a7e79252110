"""Partition documents (``.vpart.json``) and machine reports (``.vreport.json``)."""

from __future__ import annotations

import json
import logging
from importlib import resources
from pathlib import Path
from typing import Any

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from vague_membership.config import BOUNDARY_TOL
from vague_membership.connectives import (
    ConnectiveTriple,
    NegationKind,
    TConormKind,
    TNormKind,
)
from vague_membership.errors import (
    ConstructionError,
    DocumentError,
    DocumentSyntaxError,
    PreconditionError,
    SchemaError,
)
from vague_membership.partition import Block, VaguePartition
from vague_membership.plfunc import Interval, PiecewiseLinearFn

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
PARTITION_SUFFIX = ".vpart.json"
REPORT_SUFFIX = ".vreport.json"

_NUMBER_PAIR = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 2,
}

PARTITION_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": ["format_version", "concept", "attribute", "domain", "blocks"],
    "properties": {
        "format_version": {"const": FORMAT_VERSION},
        "concept": {"type": "string"},
        "attribute": {"type": "string"},
        "domain": _NUMBER_PAIR,
        "blocks": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["name", "breakpoints"],
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "breakpoints": {
                        "type": "array",
                        "minItems": 2,
                        "items": _NUMBER_PAIR,
                    },
                },
            },
        },
        "triple": {
            "type": "object",
            "additionalProperties": False,
            "required": ["negation", "tnorm", "tconorm"],
            "properties": {
                "negation": {"enum": [k.value for k in NegationKind]},
                "tnorm": {"enum": [k.value for k in TNormKind]},
                "tconorm": {"enum": [k.value for k in TConormKind]},
            },
        },
    },
}

_VALIDATOR = Draft202012Validator(PARTITION_SCHEMA)


def _json_path(parts) -> str:
    path = "$"
    for part in parts:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path


def _read_source(source: str | Path) -> tuple[str, str]:
    if isinstance(source, str) and source.lstrip().startswith("{"):
        return source, "<text>"
    path = Path(source)
    return path.read_text(encoding="utf-8"), str(path)


def _decode(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        offset = len(text[: err.pos].encode("utf-8"))
        raise DocumentSyntaxError(err.msg, offset) from None


def parse_partition_document(
    doc: Any,
    default_triple: ConnectiveTriple | None = None,
    tol: float = BOUNDARY_TOL,
) -> tuple[VaguePartition, ConnectiveTriple]:
    """Build and validate a partition from a decoded document.

    Conditions are checked with the absolute slack ``tol``.

    Raises:
        SchemaError: With the JSON path of the offending field.
        PartitionValidationError: If the blocks do not form a vague partition.
    """
    error = best_match(_VALIDATOR.iter_errors(doc))
    if error is not None:
        raise SchemaError(error.message, _json_path(error.absolute_path))

    try:
        domain = Interval(*doc["domain"])
    except ConstructionError as err:
        raise SchemaError(str(err), "$.domain") from None
    blocks = []
    for i, entry in enumerate(doc["blocks"]):
        try:
            fn = PiecewiseLinearFn(domain, tuple(map(tuple, entry["breakpoints"])))
        except ConstructionError as err:
            raise SchemaError(str(err), f"$.blocks[{i}].breakpoints") from None
        blocks.append(Block(entry["name"], fn))
    try:
        partition = VaguePartition(
            domain, tuple(blocks), doc["concept"], doc["attribute"], tol
        )
    except ConstructionError as err:
        raise SchemaError(str(err), "$.blocks") from None

    if "triple" in doc:
        entry = doc["triple"]
        try:
            triple = ConnectiveTriple(
                NegationKind.from_name(entry["negation"]),
                TNormKind.from_name(entry["tnorm"]),
                TConormKind.from_name(entry["tconorm"]),
            )
        except (ConstructionError, PreconditionError) as err:
            raise SchemaError(str(err), "$.triple") from None
    else:
        triple = default_triple or ConnectiveTriple()
    return partition, triple


def load_partition(
    source: str | Path,
    default_triple: ConnectiveTriple | None = None,
    tol: float = BOUNDARY_TOL,
) -> tuple[VaguePartition, ConnectiveTriple]:
    """Load a partition document from a path, or from JSON text starting with ``{``.

    The document's own triple wins over ``default_triple``.
    """
    text, origin = _read_source(source)
    partition, triple = parse_partition_document(
        _decode(text), default_triple, tol
    )
    logger.info(
        "loaded %s: %d block(s) on [%g, %g]",
        origin,
        len(partition),
        partition.domain.lo,
        partition.domain.hi,
    )
    return partition, triple


def dump_partition(
    p: VaguePartition, triple: ConnectiveTriple | None = None
) -> dict[str, Any]:
    """The document form of ``p``; floats keep their shortest exact repr."""
    doc: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "concept": p.concept,
        "attribute": p.attribute,
        "domain": [p.domain.lo, p.domain.hi],
        "blocks": [
            {"name": b.name, "breakpoints": [[x, y] for x, y in b.fn.breakpoints]}
            for b in p.blocks
        ],
    }
    if triple is not None:
        doc["triple"] = {
            "negation": triple.negation.value,
            "tnorm": triple.tnorm.value,
            "tconorm": triple.tconorm.value,
        }
    return doc


def dumps_partition(p: VaguePartition, triple: ConnectiveTriple | None = None) -> str:
    return json.dumps(dump_partition(p, triple), indent=2) + "\n"


def save_partition(
    p: VaguePartition, triple: ConnectiveTriple | None, path: str | Path
) -> str:
    """Write ``p`` to ``path`` and return the document text.

    Raises:
        OSError: If the file cannot be written.
    """
    text = dumps_partition(p, triple)
    Path(path).write_text(text, encoding="utf-8")
    logger.info("saved partition to %s", path)
    return text


def bundled_names() -> list[str]:
    """Names of the partition documents shipped with the package."""
    data = resources.files("vague_membership") / "data"
    return sorted(
        entry.name[: -len(PARTITION_SUFFIX)]
        for entry in data.iterdir()
        if entry.name.endswith(PARTITION_SUFFIX)
    )


def load_bundled(
    name: str,
    default_triple: ConnectiveTriple | None = None,
    tol: float = BOUNDARY_TOL,
) -> tuple[VaguePartition, ConnectiveTriple]:
    """Load a bundled document such as ``height_nl_2006``."""
    entry = resources.files("vague_membership") / "data" / f"{name}{PARTITION_SUFFIX}"
    if not entry.is_file():
        raise DocumentError(
            f"no bundled partition {name!r}; available: {', '.join(bundled_names())}"
        )
    return load_partition(entry.read_text(encoding="utf-8"), default_triple, tol)


def write_report(
    path: str | Path,
    validation=None,
    space=None,
    extra: dict[str, Any] | None = None,
) -> dict[str, Any]:
    """Write a machine-readable report holding whichever parts are given."""
    report: dict[str, Any] = {"format_version": FORMAT_VERSION}
    if validation is not None:
        report["validation"] = validation.to_dict()
    if space is not None:
        report["membership_space"] = space.to_dict()
    if extra:
        report.update(extra)
    Path(path).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    logger.info("wrote report to %s", path)
    return report
