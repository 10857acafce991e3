# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import os
from unittest import TestCase

import pytest

from share import Budget, RunConfig, Tolerances, env_expander, parse_config


@pytest.mark.unit
class TestTolerances(TestCase):
    def test_init(self) -> None:
        with self.subTest("defaults"):
            tolerances = Tolerances()

            assert tolerances.min_step == 1e-14
            assert tolerances.divergence == 1e8
            assert tolerances.residual == 1e-12
            assert tolerances.real == 1e-6
            assert tolerances.near_real == 1e-4
            assert tolerances.dedupe == 1e-8
            assert tolerances.inequality == 1e-9
            assert tolerances.rank == 1e-8
            assert tolerances.max_newton_iterations == 50
            assert tolerances.endgame_start == 0.99
            assert tolerances.endgame_norm == 1e4

        with self.subTest("real not float"):
            with self.assertRaisesRegex(ValueError, "Tolerances real must be of type float"):
                Tolerances(real="1e-6")  # type:ignore

        with self.subTest("real not positive"):
            with self.assertRaisesRegex(ValueError, "Tolerances real must be positive"):
                Tolerances(real=0.0)

        with self.subTest("near real below real"):
            with self.assertRaisesRegex(ValueError, "Tolerances near_real must be greater than real"):
                Tolerances(real=1e-4, near_real=1e-6)

        with self.subTest("endgame start at the target"):
            with self.assertRaisesRegex(ValueError, "Tolerances endgame_start must be below 1"):
                Tolerances(endgame_start=1.0)

        with self.subTest("endgame norm above divergence"):
            with self.assertRaisesRegex(ValueError, "Tolerances endgame_norm must be below divergence"):
                Tolerances(divergence=1e3, endgame_norm=1e4)

        with self.subTest("max newton iterations not int"):
            with self.assertRaisesRegex(ValueError, "Tolerances max_newton_iterations must be of type int"):
                Tolerances(max_newton_iterations=1.5)  # type:ignore

    def test_to_dict(self) -> None:
        tolerances = Tolerances(dedupe=1e-7)

        assert tolerances.to_dict()["dedupe"] == 1e-7
        assert Tolerances(**tolerances.to_dict()).to_dict() == tolerances.to_dict()


@pytest.mark.unit
class TestBudget(TestCase):
    def test_init(self) -> None:
        with self.subTest("defaults"):
            budget = Budget()

            assert budget.seconds == 4 * 3600.0
            assert budget.nodes == 1000
            assert budget.solver_calls == 500
            assert budget.depth == 6

        with self.subTest("zero budget"):
            budget = Budget(seconds=0, nodes=0)

            assert budget.seconds == 0.0
            assert budget.nodes == 0

        with self.subTest("negative nodes"):
            with self.assertRaisesRegex(ValueError, "Budget nodes must not be negative"):
                Budget(nodes=-1)

        with self.subTest("depth not int"):
            with self.assertRaisesRegex(ValueError, "Budget depth must be of type int"):
                Budget(depth="6")  # type:ignore


@pytest.mark.unit
class TestRunConfig(TestCase):
    def test_init(self) -> None:
        with self.subTest("valid init"):
            config = RunConfig(command="count", seed=7, threads=2)

            assert config.command == "count"
            assert config.seed == 7
            assert config.threads == 2
            assert config.formulation == "sphere"
            assert config.strategy == "tree"
            assert config.triangle is None

        with self.subTest("unknown command"):
            with self.assertRaisesRegex(ValueError, "Command must be one of generate,count,maximize,curve,bound"):
                RunConfig(command="plot")

        with self.subTest("seed not int"):
            with self.assertRaisesRegex(ValueError, "RunConfig seed must be of type int"):
                RunConfig(command="count", seed="1")  # type:ignore

        with self.subTest("threads not positive"):
            with self.assertRaisesRegex(ValueError, "RunConfig threads must be positive"):
                RunConfig(command="count", threads=0)

    def test_formulation_and_strategy(self) -> None:
        config = RunConfig(command="count")

        with self.subTest("cm formulation"):
            config.formulation = "cm"
            assert config.formulation == "cm"

        with self.subTest("unknown formulation"):
            with self.assertRaisesRegex(ValueError, "Formulation must be one of sphere,cm"):
                config.formulation = "groebner"

        with self.subTest("unknown strategy"):
            with self.assertRaisesRegex(ValueError, "Strategy must be one of tree,linear,stochastic"):
                config.strategy = "annealing"

    def test_triangle(self) -> None:
        config = RunConfig(command="count")

        with self.subTest("valid triangle"):
            config.triangle = [1, 2, 3]
            assert config.triangle == (1, 2, 3)

        with self.subTest("two vertices"):
            with self.assertRaisesRegex(ValueError, "RunConfig triangle must be a list of 3 vertices"):
                config.triangle = [1, 2]

        with self.subTest("repeated vertex"):
            with self.assertRaisesRegex(ValueError, "Triangle vertices must be distinct"):
                config.triangle = [1, 1, 2]

    def test_inputs(self) -> None:
        config = RunConfig(command="count")

        with self.subTest("path resolved"):
            config.add_input("graph", "graph.json")
            assert config.get_input("graph") == os.path.abspath("graph.json")

        with self.subTest("missing input"):
            assert config.get_input("lengths") is None

        with self.subTest("duplicated input"):
            with self.assertRaisesRegex(ValueError, "Duplicated input graph"):
                config.add_input("graph", "other.json")

    def test_config_hash(self) -> None:
        with self.subTest("threads do not change the hash"):
            single = RunConfig("count", seed=1, threads=1)
            many = RunConfig("count", seed=1, threads=8)

            assert single.config_hash() == many.config_hash()

        with self.subTest("seed changes the hash"):
            assert RunConfig("count", seed=1).config_hash() != RunConfig("count", seed=2).config_hash()

        with self.subTest("options change the hash"):
            config = RunConfig("maximize", seed=1)
            before = config.config_hash()
            config.set_option("target", 48)

            assert config.config_hash() != before
            assert len(before) == 64


@pytest.mark.unit
class TestParseConfig(TestCase):
    def test_parse_config(self) -> None:
        with self.subTest("complete config"):
            config = parse_config(
                config_yaml="""
                command: maximize
                seed: 3
                threads: 2
                formulation: sphere
                strategy: linear
                triangle: [1, 2, 3]
                inputs:
                  graph: graph.json
                output: best.json
                tolerances:
                  real: 1.0e-7
                budget:
                  nodes: 10
                options:
                  target: 48
                """
            )

            assert config.command == "maximize"
            assert config.seed == 3
            assert config.threads == 2
            assert config.strategy == "linear"
            assert config.triangle == (1, 2, 3)
            assert config.get_input("graph") == os.path.abspath("graph.json")
            assert config.output == os.path.abspath("best.json")
            assert config.tolerances.real == 1e-7
            assert config.budget.nodes == 10
            assert config.get_option("target") == 48

        with self.subTest("not a mapping"):
            with self.assertRaisesRegex(ValueError, "Config must be a mapping"):
                parse_config(config_yaml="- count")

        with self.subTest("no command"):
            with self.assertRaisesRegex(ValueError, "Must be provided str command"):
                parse_config(config_yaml="seed: 1")

        with self.subTest("inputs not a mapping"):
            with self.assertRaisesRegex(ValueError, "Inputs must be a mapping of name to path"):
                parse_config(config_yaml="command: count\ninputs: [graph.json]")

        with self.subTest("unknown tolerance"):
            with self.assertRaises(TypeError):
                parse_config(config_yaml="command: count\ntolerances:\n  speed: 1")

    def test_parse_config_with_expander(self) -> None:
        os.environ["REAL_EMBEDDINGS_TEST_SEED"] = "11"
        try:
            config = parse_config(
                config_yaml="command: count\nseed: ${REAL_EMBEDDINGS_TEST_SEED}", expanders=[env_expander]
            )
        finally:
            del os.environ["REAL_EMBEDDINGS_TEST_SEED"]

        assert config.seed == 11


@pytest.mark.unit
class TestEnvExpander(TestCase):
    def test_env_expander(self) -> None:
        with self.subTest("variable not set"):
            with self.assertRaisesRegex(ValueError, "Environment variable not set: REAL_EMBEDDINGS_UNSET"):
                env_expander("seed: ${REAL_EMBEDDINGS_UNSET}")

        with self.subTest("no variables"):
            assert env_expander("seed: 1") == "seed: 1"
