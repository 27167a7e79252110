"""Tests for partition documents and reports."""

import json

import pytest

from vague_membership.connectives import ConnectiveTriple, parse_triple
from vague_membership.errors import (
    DocumentError,
    DocumentSyntaxError,
    PartitionValidationError,
    SchemaError,
)
from vague_membership.measure import check_axioms, judge
from vague_membership.partition import random_partition, scale_block
from vague_membership.plfunc import Interval
from vague_membership.specio import (
    bundled_names,
    dump_partition,
    dumps_partition,
    load_bundled,
    load_partition,
    parse_partition_document,
    save_partition,
    write_report,
)

LUKASIEWICZ = "standard,lukasiewicz,boundedsum"


def ball_doc(**overrides):
    doc = {
        "format_version": 1,
        "concept": "Ball",
        "attribute": "Size",
        "domain": [0, 10],
        "blocks": [
            {"name": "small", "breakpoints": [[0, 1], [4, 1], [6, 0], [10, 0]]},
            {"name": "large", "breakpoints": [[0, 0], [4, 0], [6, 1], [10, 1]]},
        ],
    }
    doc.update(overrides)
    return doc


class TestBundled:
    """Tests for the partitions shipped with the package."""

    def test_names(self):
        assert bundled_names() == ["ball_color", "ball_size", "height_nl_2006"]

    def test_height(self, height):
        assert height.names == ["short", "medium", "tall"]
        assert (height.concept, height.attribute) == ("Man", "Height")
        assert height.regular

    def test_document_triple(self):
        _, triple = load_bundled("height_nl_2006", parse_triple(LUKASIEWICZ))
        assert triple == ConnectiveTriple()

    def test_unknown(self):
        with pytest.raises(DocumentError, match="height_nl_2006"):
            load_bundled("weight")


class TestLoadPartition:
    """Tests for load_partition and parse_partition_document."""

    def test_from_text(self):
        p, triple = load_partition(json.dumps(ball_doc()))
        assert p.names == ["small", "large"]
        assert triple == ConnectiveTriple()

    def test_default_triple_applies_without_document_triple(self):
        _, triple = load_partition(json.dumps(ball_doc()), parse_triple(LUKASIEWICZ))
        assert triple.name == LUKASIEWICZ

    def test_from_path(self, tmp_path):
        path = tmp_path / "ball.vpart.json"
        path.write_text(json.dumps(ball_doc()), encoding="utf-8")
        p, _ = load_partition(path)
        assert p.attribute == "Size"

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_partition(tmp_path / "absent.vpart.json")

    def test_malformed_json(self):
        with pytest.raises(DocumentSyntaxError) as exc_info:
            load_partition('{"format_version": 1,')
        assert exc_info.value.byte_offset == len('{"format_version": 1,')

    def test_offset_counts_bytes(self):
        text = '{"concept": "été", oops}'
        with pytest.raises(DocumentSyntaxError) as exc_info:
            load_partition(text)
        assert exc_info.value.byte_offset == text.index("oops") + 2

    def test_missing_field(self):
        doc = ball_doc()
        del doc["blocks"]
        with pytest.raises(SchemaError) as exc_info:
            parse_partition_document(doc)
        assert exc_info.value.path == "$"
        assert "blocks" in str(exc_info.value)

    def test_empty_block_name(self):
        doc = ball_doc()
        doc["blocks"][0]["name"] = ""
        with pytest.raises(SchemaError) as exc_info:
            parse_partition_document(doc)
        assert exc_info.value.path == "$.blocks[0].name"

    def test_unknown_field(self):
        with pytest.raises(SchemaError):
            parse_partition_document(ball_doc(colour="red"))

    def test_wrong_version(self):
        with pytest.raises(SchemaError) as exc_info:
            parse_partition_document(ball_doc(format_version=2))
        assert exc_info.value.path == "$.format_version"

    def test_degree_out_of_range(self):
        doc = ball_doc()
        doc["blocks"][1]["breakpoints"][-1] = [10, 1.5]
        with pytest.raises(SchemaError) as exc_info:
            parse_partition_document(doc)
        assert exc_info.value.path == "$.blocks[1].breakpoints"

    def test_reversed_domain(self):
        with pytest.raises(SchemaError) as exc_info:
            parse_partition_document(ball_doc(domain=[10, 0]))
        assert exc_info.value.path == "$.domain"

    def test_duplicate_names(self):
        doc = ball_doc()
        doc["blocks"][1]["name"] = "small"
        with pytest.raises(SchemaError) as exc_info:
            parse_partition_document(doc)
        assert exc_info.value.path == "$.blocks"

    def test_unknown_tnorm(self):
        triple = {"negation": "standard", "tnorm": "hamacher", "tconorm": "max"}
        with pytest.raises(SchemaError) as exc_info:
            parse_partition_document(ball_doc(triple=triple))
        assert exc_info.value.path == "$.triple.tnorm"

    def test_non_dual_triple(self):
        triple = {"negation": "standard", "tnorm": "min", "tconorm": "boundedsum"}
        with pytest.raises(SchemaError) as exc_info:
            parse_partition_document(ball_doc(triple=triple))
        assert exc_info.value.path == "$.triple"

    def test_not_a_partition(self):
        doc = ball_doc()
        doc["blocks"][1]["breakpoints"] = [[0, 0], [3, 0], [5, 1], [10, 1]]
        with pytest.raises(PartitionValidationError) as exc_info:
            parse_partition_document(doc)
        assert exc_info.value.report.failed_conditions() == [5]


class TestSavePartition:
    """Tests for dumping and saving."""

    def test_round_trip(self, height, tmp_path):
        path = tmp_path / "height.vpart.json"
        text = save_partition(height, ConnectiveTriple(), path)
        assert path.read_text(encoding="utf-8") == text
        loaded, triple = load_partition(path)
        assert loaded == height
        assert triple == ConnectiveTriple()

    def test_dump_without_triple(self, height):
        doc = dump_partition(height)
        assert "triple" not in doc
        assert doc["blocks"][1]["breakpoints"][1] == [1.35, 0.0]

    def test_dumps_is_indented(self, height):
        text = dumps_partition(height)
        assert text.startswith('{\n  "format_version": 1')
        assert text.endswith("}\n")

    @pytest.mark.parametrize("seed", range(40))
    def test_random_round_trip(self, seed, tmp_path):
        p = random_partition(seed, Interval(-5, 5), 1 + seed % 6, regular=seed % 3 > 0)
        path = tmp_path / f"random-{seed}.vpart.json"
        save_partition(p, None, path)
        loaded, _ = load_partition(path)
        assert loaded == p
        assert loaded.regular == p.regular

    def test_missing_directory(self, height, tmp_path):
        with pytest.raises(OSError):
            save_partition(height, None, tmp_path / "missing" / "height.vpart.json")
        assert not (tmp_path / "missing").exists()

    def test_directory_target(self, height, tmp_path):
        with pytest.raises(OSError):
            save_partition(height, None, tmp_path)

    def test_load_with_tolerance(self, height):
        text = dumps_partition(scale_block(height, "medium", 1 + 1e-7))
        with pytest.raises(PartitionValidationError):
            load_partition(text)
        loaded, _ = load_partition(text, tol=1e-6)
        assert loaded.regular


class TestWriteReport:
    """Tests for write_report."""

    def test_contents(self, height, minmax, tmp_path):
        path = tmp_path / "out.vreport.json"
        write_report(
            path,
            validation=height.report,
            space=check_axioms(judge(height, 1.8), minmax),
            extra={"expression": "medium | tall"},
        )
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["format_version"] == 1
        assert data["validation"]["valid"] is True
        assert data["membership_space"]["regular"] is True
        assert data["expression"] == "medium | tall"

    def test_only_given_parts(self, tmp_path):
        data = write_report(tmp_path / "r.vreport.json")
        assert data == {"format_version": 1}
