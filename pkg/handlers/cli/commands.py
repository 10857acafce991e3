# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import os
import time
from typing import Any, Optional

import numpy as np

from bounds import (
    asymptotic_base,
    classification_table,
    glue_bound,
    graph_label,
    propagate_h1_doubling,
    published_records,
)
from coupler import (
    STRATEGY_LINEAR,
    STRATEGY_STOCHASTIC,
    GridSpec,
    SampleRecord,
    SamplerState,
    SearchResult,
    SearchState,
    SweepSpec,
    linear_search,
    stochastic_perturbation,
    trace_coupler_curve,
    tree_search,
)
from exporters import CommonExporter, CompositeExporter, ExporterFactory, Provenance, write_catalog
from graphs import Graph, SamplingSubgraph, generate_catalog, named_graph
from share import BudgetExhaustedException, InvalidArgumentException, RunConfig, shared_logger
from solver import count_embeddings
from storage import StorageFactory, read_graph, read_json, read_lengths
from systems import LengthAssignment, generic_lengths, mixed_volume, newton_polytopes, published_lengths

from .utils import EXIT_SUCCESS

_count_columns: list[str] = [
    "graph_id",
    "formulation",
    "triangle",
    "seed",
    "mixedVolume",
    "complexCount",
    "realCount",
    "wall_time_s",
]
_table_columns: list[str] = ["label", "n", "lastStep", "c3", "r3", "provenance"]
_sampling_columns: list[str] = ["subgraph", "phi", "theta", "t", "r", "real_count"]
_curve_columns: list[str] = ["x", "y", "z", "r", "marker"]

_max_mixed_volume_variables: int = 4
_min_catalog_vertices: int = 4


def _provenance(config: RunConfig, **extra: Any) -> Provenance:
    return Provenance(config.seed, config.config_hash(), extra)


def _option(config: RunConfig, name: str) -> Any:
    value = config.get_option(name)
    if value is None:
        raise InvalidArgumentException(f"Command {config.command} needs option `{name}`")

    return value


def load_graph(config: RunConfig) -> Graph:
    """
    Named graph, graph json file or inline graph json
    """

    if config.get_option("graph_name"):
        return named_graph(config.get_option("graph_name"))

    path = config.get_input("graph")
    if path is not None:
        return read_graph(StorageFactory.create("file", path=path))

    return read_graph(StorageFactory.create("payload", payload=_option(config, "graph_payload")))


def load_lengths(config: RunConfig, graph: Graph, required: bool = True) -> Optional[LengthAssignment]:
    """
    Published lengths, lengths json file or inline lengths json, restricted to the graph edges
    """

    if config.get_option("lengths_name"):
        return published_lengths(config.get_option("lengths_name")).lengths.restrict(graph)

    path = config.get_input("lengths")
    if path is not None:
        return read_lengths(StorageFactory.create("file", path=path), graph)

    if config.get_option("lengths_payload"):
        return read_lengths(StorageFactory.create("payload", payload=config.get_option("lengths_payload")), graph)

    if required:
        raise InvalidArgumentException(f"Command {config.command} needs edge lengths")

    return None


def cmd_generate(config: RunConfig) -> int:
    """
    Catalog of the Geiringer graphs on n vertices; with a table path, their classification rows too
    """

    n = _option(config, "n")
    catalog = generate_catalog(n, config.threads)

    write_catalog(config.output, catalog, _provenance(config, n=n))

    table_path = config.get_option("table")
    if table_path:
        lower = [graph for k in range(_min_catalog_vertices, n) for graph in generate_catalog(k, config.threads)]
        records = propagate_h1_doubling(lower + catalog, published_records())

        table = ExporterFactory.create(
            "csv", path=os.path.abspath(table_path), columns=_table_columns, provenance=_provenance(config, n=n)
        )
        for row in classification_table(catalog, records):
            table.export(row)

        table.flush()

    return EXIT_SUCCESS


def cmd_count(config: RunConfig) -> int:
    """
    Complex and real embedding counts of a graph, at given lengths or at generic ones drawn from the seed
    """

    started = time.monotonic()
    graph = load_graph(config)
    lengths = load_lengths(config, graph, required=False)
    if lengths is None:
        lengths = generic_lengths(graph, np.random.default_rng(config.seed))
        shared_logger.info("generic lengths", extra={"lengths": lengths.digest()})

    count = count_embeddings(
        graph,
        lengths,
        config.formulation,
        triangle=config.triangle,
        seed=config.seed,
        tolerances=config.tolerances,
        threads=config.threads,
    )

    bound: Any = ""
    if 0 < count.system.n_variables <= _max_mixed_volume_variables:
        bound = mixed_volume(newton_polytopes(count.system), config.threads)
        if config.formulation == "cm":
            bound *= 2

    exporter = CompositeExporter()
    exporter.add_exporter(
        ExporterFactory.create("csv", path=config.output, columns=_count_columns, provenance=_provenance(config))
    )

    solutions_path = config.get_option("solutions")
    if solutions_path:
        exporter.add_exporter(
            ExporterFactory.create("json", path=os.path.abspath(solutions_path), provenance=_provenance(config))
        )

    # the csv keeps its columns, the dump takes the whole record
    exporter.export(
        {
            "graph_id": graph_label(graph),
            "formulation": config.formulation,
            "triangle": "-".join(str(vertex) for vertex in count.triangle) if count.triangle else "",
            "seed": config.seed,
            "mixedVolume": bound,
            "complexCount": count.complex_count,
            "realCount": count.real_count,
            "wall_time_s": round(time.monotonic() - started, 3),
            "count": count.to_dict(),
            "lengths": lengths.to_dict(),
            "solutions": count.solutions.to_dict(),
        }
    )
    exporter.flush()

    return EXIT_SUCCESS


def _grid(config: RunConfig) -> GridSpec:
    grid = config.get_option("grid")
    if not grid:
        return GridSpec()

    return GridSpec(int(grid[0]), int(grid[1]))


def _resume_state(config: RunConfig) -> Optional[SearchState]:
    checkpoint = config.get_option("checkpoint")
    if not config.get_option("resume") or not checkpoint or not os.path.isfile(checkpoint):
        return None

    state = SearchState.from_dict(read_json(StorageFactory.create("file", path=checkpoint)))
    shared_logger.info("search resumed", extra={"checkpoint": checkpoint, "nodes": state.nodes})

    return state


def cmd_maximize(config: RunConfig) -> int:
    """
    Searches lengths with more real embeddings; writes the best lengths json, the sampling log and checkpoints
    """

    graph = load_graph(config)
    lengths = load_lengths(config, graph)
    assert lengths is not None

    target = int(_option(config, "target"))
    sampler = SamplerState(graph, lengths, config.triangle, config.seed, config.tolerances, config.threads)

    sampling_log: Optional[CommonExporter] = None
    if config.get_option("log"):
        sampling_log = ExporterFactory.create(
            "csv",
            path=os.path.abspath(config.get_option("log")),
            columns=_sampling_columns,
            provenance=_provenance(config, graph=graph_label(graph)),
        )

    def _log_records(records: list[SampleRecord]) -> None:
        if sampling_log is None:
            return

        for record in records:
            sampling_log.export(
                {**record.to_row(), "subgraph": ",".join(str(vertex) for vertex in record.subgraph.as_tuple())}
            )

    def _checkpoint(state: SearchState) -> None:
        path = config.get_option("checkpoint")
        if not path:
            return

        snapshot = ExporterFactory.create("json", path=os.path.abspath(path), provenance=_provenance(config))
        snapshot.export(state.to_dict())
        snapshot.flush()

    result: SearchResult
    if config.strategy == STRATEGY_STOCHASTIC:
        result = stochastic_perturbation(
            graph,
            lengths,
            float(config.get_option("sigma", 0.05)),
            int(config.get_option("iterations", 100)),
            config.seed,
            target,
            config.budget,
            sampler,
        )
    elif config.strategy == STRATEGY_LINEAR:
        order = [SamplingSubgraph.parse(value, graph) for value in config.get_option("order", [])]
        result = linear_search(
            graph,
            lengths,
            order,
            target,
            config.budget,
            _grid(config),
            sampler,
            _resume_state(config),
            _checkpoint,
            _log_records,
        )
    else:
        result = tree_search(
            graph,
            lengths,
            target,
            config.budget,
            _grid(config),
            sampler,
            _resume_state(config),
            _checkpoint,
            _log_records,
        )

    best = ExporterFactory.create("json", path=config.output, provenance=_provenance(config, graph=graph_label(graph)))
    best.export(
        {
            **result.lengths.to_dict(),
            "real_count": result.real_count,
            "start_count": result.state.start_count,
            "path": [list(step) for step in result.path],
            "nodes": result.state.nodes,
        }
    )
    best.flush()

    if sampling_log is not None:
        sampling_log.flush()

    if result.exhausted and result.real_count < target:
        raise BudgetExhaustedException(f"Search stopped at {result.real_count} real embeddings, target {target}")

    return EXIT_SUCCESS


def cmd_curve(config: RunConfig) -> int:
    """
    Point cloud of a coupler curve plus the positions of c in the real embeddings at the given lengths
    """

    graph = load_graph(config)
    lengths = load_lengths(config, graph)
    assert lengths is not None

    subgraph = SamplingSubgraph.parse(_option(config, "subgraph"), graph)
    sweep = SweepSpec(config.get_option("r_min"), config.get_option("r_max"), int(config.get_option("steps", 200)))
    curve = trace_coupler_curve(graph, lengths, subgraph, sweep, config.seed, config.tolerances, config.threads)

    provenance = _provenance(
        config,
        graph=graph_label(graph),
        subgraph=",".join(str(vertex) for vertex in subgraph.as_tuple()),
        t=curve.t,
    )
    exporter = ExporterFactory.create("csv", path=config.output, columns=_curve_columns, provenance=provenance)
    for row in curve.rows():
        exporter.export(row)

    exporter.flush()

    return EXIT_SUCCESS


def cmd_bound(config: RunConfig) -> int:
    """
    Lower bound on the number of real embeddings from gluing copies of G along H, and its growth rate
    """

    r_g, n_g, r_h, n_h, n = (int(_option(config, name)) for name in ("r_g", "n_g", "r_h", "n_h", "n"))
    bound = glue_bound(r_g, n_g, r_h, n_h, n)
    base = asymptotic_base(r_g, n_g, r_h, n_h)

    exporter = ExporterFactory.create("json", path=config.output, provenance=_provenance(config))
    exporter.export({**bound.to_dict(), "base": base})
    exporter.flush()

    return EXIT_SUCCESS
