# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import random
from unittest import TestCase

import pytest

from graphs import (
    Graph,
    canonical_form,
    canonical_form_bruteforce,
    canonical_graph,
    complete_graph,
    decode_label,
    named_graph,
    named_graphs,
)
from share import UnsupportedException


def _shuffled(graph: Graph, seed: int) -> Graph:
    labels = list(graph.vertices)
    random.Random(seed).shuffle(labels)

    return graph.relabel(dict(zip(graph.vertices, labels)))


@pytest.mark.unit
class TestCanonicalForm(TestCase):
    def test_relabeling_invariance(self) -> None:
        for name in ("G48", "G32a", "G160"):
            graph = named_graph(name)
            label = canonical_form(graph)
            for seed in range(8):
                with self.subTest(name=name, seed=seed):
                    assert canonical_form(_shuffled(graph, seed)) == label

    def test_separates_classes(self) -> None:
        graphs = named_graphs()
        seven = [name for name, graph in graphs.items() if graph.n == 7]
        labels = {canonical_form(graphs[name]) for name in seven}

        assert len(labels) == len(seven)

    def test_decode(self) -> None:
        graph = named_graph("G24")
        representative = canonical_graph(graph)

        assert representative == decode_label(canonical_form(graph))
        assert canonical_form(representative) == canonical_form(graph)
        assert len(representative) == len(graph)

    def test_short(self) -> None:
        short = canonical_form(complete_graph(4)).short

        assert len(short) == 12
        assert short == canonical_form(_shuffled(complete_graph(4), 1)).short

    def test_bruteforce(self) -> None:
        with self.subTest("agrees with refinement on isomorphism"):
            first, second = named_graph("G32a"), named_graph("G32b")

            assert canonical_form_bruteforce(first) == canonical_form_bruteforce(_shuffled(first, 3))
            assert canonical_form_bruteforce(first) != canonical_form_bruteforce(second)

        with self.subTest("too many vertices"):
            with self.assertRaisesRegex(UnsupportedException, "Brute force canonical form supports up to 8 vertices"):
                canonical_form_bruteforce(complete_graph(9))
