# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

from unittest import TestCase

import pytest

from bounds import (
    PROVENANCE_DOUBLING,
    PROVENANCE_PUBLISHED,
    PROVENANCE_SOLVED,
    CountRecord,
    classification_table,
    graph_label,
    propagate_h1_doubling,
    published_records,
)
from graphs import complete_graph, generate_catalog, henneberg_h1, named_graph
from share import InconsistencyException, InvalidArgumentException

_five = henneberg_h1(complete_graph(4), [1, 2, 3])
# three degree-3 vertices joined to the triangle 1,2,3
_three_spikes = henneberg_h1(_five, [1, 2, 3])
# two degree-3 vertices
_two_spikes = henneberg_h1(_five, [1, 2, 4])
# degree-3 vertices 5, 6 and 7; deleting 7 leaves _three_spikes, deleting 5 leaves a copy of _two_spikes
_seven = henneberg_h1(_three_spikes, [1, 2, 4])


@pytest.mark.unit
class TestCountRecord(TestCase):
    def test_record(self) -> None:
        record = CountRecord("abc", 48, 32, PROVENANCE_SOLVED, 7)

        assert record.counts() == (48, 32)
        assert record.doubled("def", 8) == CountRecord("def", 96, 64, PROVENANCE_DOUBLING)
        assert record.to_dict()["provenance"] == "solved"

        with self.subTest("unknown real count doubles to unknown"):
            assert CountRecord("abc", 48, None, PROVENANCE_SOLVED).doubled("def").counts() == (96, None)

    def test_invalid(self) -> None:
        with self.subTest("provenance"):
            with self.assertRaisesRegex(InvalidArgumentException, "Provenance must be one of doubling"):
                CountRecord("abc", 2, 2, "guess")

        with self.subTest("real exceeds complex"):
            with self.assertRaisesRegex(InvalidArgumentException, "Real count 4 exceeds complex count 2 for abc"):
                CountRecord("abc", 2, 4, PROVENANCE_SOLVED)


@pytest.mark.unit
class TestPublishedRecords(TestCase):
    def test_published_records(self) -> None:
        records = published_records()
        by_name = {record.name: record for record in records.values()}

        assert len(records) == 10
        assert by_name["K4"].counts() == (2, 2)
        assert by_name["G48"].counts() == (48, 48)
        assert by_name["G160"].counts() == (160, 132)
        assert by_name["G128"].n == 8
        assert records[graph_label(named_graph("G16"))].r3 == 16
        assert all(record.provenance == PROVENANCE_PUBLISHED for record in records.values())


@pytest.mark.unit
class TestPropagateH1Doubling(TestCase):
    def test_up_to_six_vertices(self) -> None:
        catalog = [graph for n in (4, 5, 6) for graph in generate_catalog(n)]

        records = propagate_h1_doubling(reversed(catalog), published_records())

        assert records[graph_label(_five)] == CountRecord(graph_label(_five), 4, 4, PROVENANCE_DOUBLING)
        for graph in generate_catalog(6):
            label = graph_label(graph)
            with self.subTest(label=label):
                if graph.min_degree() == 3:
                    assert records[label].counts() == (8, 8)
                    assert records[label].provenance == PROVENANCE_DOUBLING
                else:
                    assert records[label].counts() == (16, 16)
                    assert records[label].provenance == PROVENANCE_PUBLISHED

    def test_unresolved_graphs_omitted(self) -> None:
        records = propagate_h1_doubling([_five, _seven], {})

        assert records == {}

    def test_agreeing_parents(self) -> None:
        base = {
            graph_label(_two_spikes): CountRecord(graph_label(_two_spikes), 8, 8, PROVENANCE_SOLVED),
            graph_label(_three_spikes): CountRecord(graph_label(_three_spikes), 8, 8, PROVENANCE_SOLVED),
        }

        records = propagate_h1_doubling([_seven], base)

        assert records[graph_label(_seven)].counts() == (16, 16)

    def test_conflicting_parents(self) -> None:
        assert graph_label(_two_spikes) != graph_label(_three_spikes)

        base = {
            graph_label(_two_spikes): CountRecord(graph_label(_two_spikes), 8, 8, PROVENANCE_SOLVED),
            graph_label(_three_spikes): CountRecord(graph_label(_three_spikes), 8, 6, PROVENANCE_SOLVED),
        }

        with self.assertRaisesRegex(InconsistencyException, "give conflicting doubled counts"):
            propagate_h1_doubling([_seven], base)


@pytest.mark.unit
class TestClassificationTable(TestCase):
    def test_rows(self) -> None:
        k4 = complete_graph(4)
        records = {graph_label(k4): CountRecord(graph_label(k4), 2, 2, PROVENANCE_PUBLISHED)}

        rows = classification_table([k4, _five, named_graph("G16")], records)

        assert rows[0] == {
            "label": graph_label(k4),
            "n": 4,
            "lastStep": "H1-capable",
            "c3": 2,
            "r3": 2,
            "provenance": "published",
        }
        assert (rows[1]["lastStep"], rows[1]["c3"], rows[1]["r3"], rows[1]["provenance"]) == ("H1-capable", "", "", "")
        assert rows[2]["lastStep"] == "H2-required"
