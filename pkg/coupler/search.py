# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import json
import time
from typing import Any, Callable, Optional, Sequence

import elasticapm
import numpy as np

from graphs import Graph, SamplingSubgraph, spherical_subgraphs
from share import (
    Budget,
    DegenerateException,
    InfeasibleException,
    InvalidArgumentException,
    SolverException,
    UnsupportedException,
    shared_logger,
)
from systems import LengthAssignment

from .clustering import cluster_candidates
from .family import CouplerFamily
from .sampling import GridSpec, SamplerState, SampleRecord, sample_grid

STRATEGY_TREE: str = "tree"
STRATEGY_LINEAR: str = "linear"
STRATEGY_STOCHASTIC: str = "stochastic"

_checkpoint_every: int = 10


class SearchNode:
    """
    Lengths waiting to be expanded, with the subgraphs that led to them
    """

    def __init__(
        self,
        lengths: LengthAssignment,
        real_count: int,
        depth: int = 0,
        stage: int = 0,
        path: Optional[Sequence[tuple[int, ...]]] = None,
    ):
        self.lengths = lengths
        self.real_count = real_count
        self.depth = depth
        self.stage = stage
        self.path: list[tuple[int, ...]] = [tuple(step) for step in (path or [])]

    def to_dict(self) -> dict[str, Any]:
        return {
            "lengths": self.lengths.to_dict(),
            "real_count": self.real_count,
            "depth": self.depth,
            "stage": self.stage,
            "path": [list(step) for step in self.path],
        }

    @staticmethod
    def from_dict(payload: dict[str, Any]) -> "SearchNode":
        return SearchNode(
            LengthAssignment.from_dict(payload["lengths"]),
            int(payload["real_count"]),
            int(payload.get("depth", 0)),
            int(payload.get("stage", 0)),
            payload.get("path", []),
        )


def _better(candidate: SearchNode, best: SearchNode) -> bool:
    if candidate.real_count != best.real_count:
        return candidate.real_count > best.real_count

    return candidate.lengths.ordering_key() < best.lengths.ordering_key()


class SearchState:
    """
    Resumable snapshot of a search: the depth-first frontier, the best node and the counters
    """

    def __init__(self, strategy: str, target: int, start: SearchNode, seed: int = 0):
        self.strategy = strategy
        self.target = target
        self.seed = seed
        self.frontier: list[SearchNode] = [start]
        self.best: SearchNode = start
        self.start_count: int = start.real_count
        self.nodes: int = 0
        self.elapsed: float = 0.0
        self.history: list[int] = [start.real_count]

    def offer(self, node: SearchNode) -> None:
        if _better(node, self.best):
            self.best = node
            self.history.append(node.real_count)
            shared_logger.info(
                "search improved", extra={"real_count": node.real_count, "path": [list(s) for s in node.path]}
            )

    @property
    def reached(self) -> bool:
        return self.best.real_count >= self.target

    def to_dict(self) -> dict[str, Any]:
        return {
            "strategy": self.strategy,
            "target": self.target,
            "seed": self.seed,
            "start_count": self.start_count,
            "nodes": self.nodes,
            "elapsed": self.elapsed,
            "history": self.history,
            "best": self.best.to_dict(),
            "frontier": [node.to_dict() for node in self.frontier],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @staticmethod
    def from_dict(payload: dict[str, Any]) -> "SearchState":
        if not isinstance(payload, dict) or "best" not in payload or "frontier" not in payload:
            raise InvalidArgumentException("Search checkpoint must provide `best` and `frontier`")

        best = SearchNode.from_dict(payload["best"])
        state = SearchState(str(payload["strategy"]), int(payload["target"]), best, int(payload.get("seed", 0)))
        state.frontier = [SearchNode.from_dict(node) for node in payload["frontier"]]
        state.start_count = int(payload.get("start_count", best.real_count))
        state.nodes = int(payload.get("nodes", 0))
        state.elapsed = float(payload.get("elapsed", 0.0))
        state.history = [int(count) for count in payload.get("history", [best.real_count])]

        return state

    @staticmethod
    def from_json(state_json: str) -> "SearchState":
        return SearchState.from_dict(json.loads(state_json))


CheckpointCallable = Callable[[SearchState], None]
RecordsCallable = Callable[[list[SampleRecord]], None]


class SearchResult:
    def __init__(self, state: SearchState, exhausted: bool):
        self.state = state
        self.exhausted = exhausted

    @property
    def lengths(self) -> LengthAssignment:
        return self.state.best.lengths

    @property
    def real_count(self) -> int:
        return self.state.best.real_count

    @property
    def path(self) -> list[tuple[int, ...]]:
        return self.state.best.path

    def __repr__(self) -> str:
        return f"SearchResult(real_count={self.real_count}, nodes={self.state.nodes}, exhausted={self.exhausted})"


def _initial_state(
    strategy: str, lengths: LengthAssignment, target: int, sampler: SamplerState, resume: Optional[SearchState]
) -> SearchState:
    if resume is not None:
        if resume.strategy != strategy:
            raise InvalidArgumentException(
                f"Checkpoint of a {resume.strategy} search cannot resume a {strategy} search"
            )

        return resume

    start = SearchNode(lengths, sampler.count(lengths).real_count)
    return SearchState(strategy, target, start, sampler.seed)


def _expand(
    graph: Graph,
    node: SearchNode,
    subgraph: SamplingSubgraph,
    grid: Optional[GridSpec],
    sampler: SamplerState,
    budget: Budget,
    on_records: Optional[RecordsCallable] = None,
) -> list[SearchNode]:
    try:
        family = CouplerFamily(graph, node.lengths, subgraph)
        records = sample_grid(graph, node.lengths, subgraph, grid, sampler, budget)
        if on_records is not None:
            on_records(records)
    except (DegenerateException, InfeasibleException) as e:
        shared_logger.debug("subgraph skipped", extra={"subgraph": list(subgraph.as_tuple()), "error": str(e)})
        return []

    def _count(lengths: LengthAssignment) -> int:
        return sampler.count(lengths).real_count

    representatives = cluster_candidates(records, family, _count)
    path = node.path + [subgraph.as_tuple()]

    return [
        SearchNode(record.lengths, record.real_count, node.depth + 1, node.stage + 1, path)
        for record in representatives
    ]


class _Clock:
    def __init__(self, state: SearchState, budget: Budget):
        self.state = state
        self.budget = budget
        self.started = time.monotonic() - state.elapsed

    def exhausted(self) -> bool:
        self.state.elapsed = time.monotonic() - self.started
        return self.state.nodes >= self.budget.nodes or self.state.elapsed >= self.budget.seconds


def _run(
    graph: Graph,
    state: SearchState,
    expand: Callable[[SearchNode], Optional[list[SearchNode]]],
    budget: Budget,
    checkpoint: Optional[CheckpointCallable],
) -> SearchResult:
    clock = _Clock(state, budget)
    exhausted = False

    while state.frontier and not state.reached:
        if clock.exhausted():
            shared_logger.warning(
                "search budget exhausted", extra={"nodes": state.nodes, "real_count": state.best.real_count}
            )
            exhausted = True
            break

        node = state.frontier.pop()
        state.nodes += 1

        children = expand(node)
        if children:
            for child in children:
                state.offer(child)

            # highest count popped first
            state.frontier.extend(sorted(children, key=lambda child: (child.real_count, child.lengths.ordering_key())))

        if checkpoint is not None and state.nodes % _checkpoint_every == 0:
            checkpoint(state)

    clock.exhausted()
    if checkpoint is not None:
        checkpoint(state)

    shared_logger.info(
        "search finished",
        extra={
            "strategy": state.strategy,
            "n": graph.n,
            "start_count": state.start_count,
            "real_count": state.best.real_count,
            "nodes": state.nodes,
        },
    )

    return SearchResult(state, exhausted)


@elasticapm.capture_span()
def tree_search(
    graph: Graph,
    lengths: LengthAssignment,
    target: int,
    budget: Optional[Budget] = None,
    grid: Optional[GridSpec] = None,
    sampler: Optional[SamplerState] = None,
    resume: Optional[SearchState] = None,
    checkpoint: Optional[CheckpointCallable] = None,
    on_records: Optional[RecordsCallable] = None,
) -> SearchResult:
    """
    Depth-first search over the lengths produced by sampling every spherical subgraph,
    descending only into cluster representatives whose real count increased
    """

    subgraphs = spherical_subgraphs(graph)
    if not subgraphs:
        raise UnsupportedException("Graph has no spherical subgraph suitable for sampling")

    budget = budget or Budget()
    sampler = sampler or SamplerState(graph, lengths)
    state = _initial_state(STRATEGY_TREE, lengths, target, sampler, resume)

    def _expand_tree(node: SearchNode) -> list[SearchNode]:
        if node.depth >= budget.depth:
            return []

        children = []
        for subgraph in subgraphs:
            increased = [
                child
                for child in _expand(graph, node, subgraph, grid, sampler, budget, on_records)
                if child.real_count > node.real_count
            ]
            children.extend(increased)

            if any(child.real_count >= target for child in increased):
                break

        return children

    return _run(graph, state, _expand_tree, budget, checkpoint)


@elasticapm.capture_span()
def linear_search(
    graph: Graph,
    lengths: LengthAssignment,
    order: Sequence[SamplingSubgraph],
    target: int,
    budget: Optional[Budget] = None,
    grid: Optional[GridSpec] = None,
    sampler: Optional[SamplerState] = None,
    resume: Optional[SearchState] = None,
    checkpoint: Optional[CheckpointCallable] = None,
    on_records: Optional[RecordsCallable] = None,
) -> SearchResult:
    """
    Pipes the lengths through the subgraphs in the given order; every cluster representative of one stage
    is the input of the next stage, branches are explored depth-first
    """

    for subgraph in order:
        if not subgraph.spherical:
            raise UnsupportedException(f"Subgraph {subgraph} is not spherical")

    budget = budget or Budget()
    sampler = sampler or SamplerState(graph, lengths)
    state = _initial_state(STRATEGY_LINEAR, lengths, target, sampler, resume)

    def _expand_linear(node: SearchNode) -> list[SearchNode]:
        if node.stage >= len(order):
            return []

        return _expand(graph, node, order[node.stage], grid, sampler, budget, on_records)

    return _run(graph, state, _expand_linear, budget, checkpoint)


def stochastic_perturbation(
    graph: Graph,
    lengths: LengthAssignment,
    sigma: float,
    iterations: int,
    seed: int = 0,
    target: Optional[int] = None,
    budget: Optional[Budget] = None,
    sampler: Optional[SamplerState] = None,
) -> SearchResult:
    """
    Hill climbing: every length is multiplied by (1 + sigma * gaussian) and the perturbation is kept
    when the real count does not decrease
    """

    if sigma < 0:
        raise InvalidArgumentException(f"Perturbation sigma must not be negative, given: {sigma}")

    budget = budget or Budget()
    sampler = sampler or SamplerState(graph, lengths, seed=seed)
    rng = np.random.default_rng(seed)

    current = SearchNode(lengths, sampler.count(lengths).real_count)
    state = SearchState(STRATEGY_STOCHASTIC, target if target is not None else current.real_count, current, seed)
    state.frontier = []
    clock = _Clock(state, budget)
    exhausted = False

    for _ in range(iterations if sigma > 0 else 0):
        if target is not None and current.real_count >= target:
            break

        if clock.exhausted():
            exhausted = True
            break

        state.nodes += 1
        factors = 1.0 + sigma * rng.standard_normal(len(current.lengths))
        if np.any(factors <= 0):
            continue

        try:
            candidate_lengths = LengthAssignment(
                {edge: value * factor for (edge, value), factor in zip(current.lengths.items(), factors)}
            )
            real_count = sampler.count(candidate_lengths).real_count
        except (InfeasibleException, SolverException):
            continue

        if real_count >= current.real_count:
            current = SearchNode(candidate_lengths, real_count, current.depth + 1)
            if real_count > state.best.real_count:
                state.best = current
                state.history.append(real_count)

    clock.exhausted()
    shared_logger.info(
        "search finished",
        extra={"strategy": STRATEGY_STOCHASTIC, "start_count": state.start_count, "real_count": state.best.real_count},
    )

    return SearchResult(state, exhausted)
