# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.

import argparse
import os
from typing import Callable, Optional, Sequence

from graphs import named_graphs
from share import ConfigFileException, RunConfig, env_expander, parse_config, shared_logger, version
from storage import StorageFactory
from systems import published_names

from .commands import cmd_bound, cmd_count, cmd_curve, cmd_generate, cmd_maximize
from .utils import EXIT_INVALID_INPUT, CommandCallable, capture_transaction, wrap_try_except

_expanders: list[Callable[[str], str]] = [env_expander]

_commands: dict[str, CommandCallable] = {
    "generate": cmd_generate,
    "count": cmd_count,
    "maximize": cmd_maximize,
    "curve": cmd_curve,
    "bound": cmd_bound,
}

_path_options: list[str] = ["table", "log", "checkpoint", "solutions"]


def _triangle(value: str) -> list[int]:
    parts = value.split(",")
    if len(parts) != 3 or not all(part.strip().isdigit() for part in parts):
        raise argparse.ArgumentTypeError(f"Triangle must be given as i,j,k, given: `{value}`")

    return [int(part) for part in parts]


def _pair(value: str) -> list[int]:
    parts = value.split(",")
    if len(parts) != 2 or not all(part.strip().isdigit() for part in parts):
        raise argparse.ArgumentTypeError(f"Grid must be given as phi_points,theta_points, given: `{value}`")

    return [int(part) for part in parts]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML run config; flags override its values")
    common.add_argument("--seed", type=int)
    common.add_argument("--threads", type=int)
    common.add_argument("--budget-seconds", type=float, dest="budget_seconds")
    common.add_argument("--formulation", choices=["sphere", "cm"])
    common.add_argument("--triangle", type=_triangle, help="fixed triangle i,j,k")
    common.add_argument("--output", "-o", help="output path, stdout when omitted")

    parser = argparse.ArgumentParser(prog="real-embeddings", description="Real embeddings of minimally rigid graphs")
    parser.add_argument("--version", action="version", version=version)
    subparsers = parser.add_subparsers(dest="command", required=True)

    generate = subparsers.add_parser("generate", parents=[common], help="catalog of Geiringer graphs")
    generate.add_argument("n", type=int)
    generate.add_argument("--table", help="classification table CSV path")

    count = subparsers.add_parser("count", parents=[common], help="complex and real embedding counts")
    count.add_argument("graph", help="named graph, graph json path or inline graph json")
    count.add_argument("--lengths", help="published lengths name, lengths json path or inline lengths json")
    count.add_argument("--solutions", help="solution dump JSON path")

    maximize = subparsers.add_parser("maximize", parents=[common], help="search lengths with more real embeddings")
    maximize.add_argument("graph")
    maximize.add_argument("--lengths", required=True)
    maximize.add_argument("--strategy", choices=["tree", "linear", "stochastic"])
    maximize.add_argument("--target", type=int, required=True)
    maximize.add_argument("--order", action="append", help="sampling subgraph u,v,w,p,c of a linear search")
    maximize.add_argument("--sigma", type=float)
    maximize.add_argument("--iterations", type=int)
    maximize.add_argument("--budget-nodes", type=int, dest="budget_nodes")
    maximize.add_argument("--grid", type=_pair)
    maximize.add_argument("--log", help="sampling log CSV path")
    maximize.add_argument("--checkpoint", help="search checkpoint JSON path")
    maximize.add_argument("--resume", action="store_true", help="resume from the checkpoint when it exists")

    curve = subparsers.add_parser("curve", parents=[common], help="coupler curve point cloud")
    curve.add_argument("graph")
    curve.add_argument("--lengths", required=True)
    curve.add_argument("--subgraph", required=True, help="sampling subgraph u,v,w,p,c")
    curve.add_argument("--steps", type=int)
    curve.add_argument("--r-min", type=float, dest="r_min")
    curve.add_argument("--r-max", type=float, dest="r_max")

    bound = subparsers.add_parser("bound", parents=[common], help="lower bound from gluing copies of a graph")
    for name in ("r_g", "n_g", "r_h", "n_h", "n"):
        bound.add_argument(name, type=int)

    return parser


def _add_graph(config: RunConfig, value: str) -> None:
    if value in named_graphs():
        config.set_option("graph_name", value)
    elif os.path.isfile(value):
        config.add_input("graph", value)
    else:
        config.set_option("graph_payload", value)


def _add_lengths(config: RunConfig, value: str) -> None:
    if value in published_names():
        config.set_option("lengths_name", value)
    elif os.path.isfile(value):
        config.add_input("lengths", value)
    else:
        config.set_option("lengths_payload", value)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    RunConfig from the YAML file when given, overridden by the flags; paths are resolved here
    """

    try:
        if args.config:
            config = parse_config(StorageFactory.create("file", path=args.config).get_as_string(), _expanders)
            config.command = args.command
        else:
            config = RunConfig(command=args.command)

        if args.seed is not None:
            config.seed = args.seed

        if args.threads is not None:
            config.threads = args.threads

        if args.formulation is not None:
            config.formulation = args.formulation

        if args.triangle is not None:
            config.triangle = args.triangle

        if args.output is not None:
            config.output = args.output

        if args.budget_seconds is not None:
            config.budget.seconds = args.budget_seconds

        if getattr(args, "budget_nodes", None) is not None:
            config.budget.nodes = args.budget_nodes

        if getattr(args, "strategy", None) is not None:
            config.strategy = args.strategy

        if getattr(args, "graph", None) is not None:
            _add_graph(config, args.graph)

        if getattr(args, "lengths", None) is not None:
            _add_lengths(config, args.lengths)

        for name in ("n", "table", "solutions", "target", "order", "sigma", "iterations", "grid", "log"):
            if getattr(args, name, None) is not None:
                config.set_option(name, getattr(args, name))

        for name in ("checkpoint", "resume", "subgraph", "steps", "r_min", "r_max", "r_g", "n_g", "r_h", "n_h"):
            if getattr(args, name, None) is not None:
                config.set_option(name, getattr(args, name))

        for name in _path_options:
            if config.get_option(name):
                config.set_option(name, os.path.abspath(config.get_option(name)))

    except Exception as e:
        raise ConfigFileException(e)

    return config


@wrap_try_except
@capture_transaction
def run_command(config: RunConfig) -> int:
    shared_logger.info(
        "command", extra={"command": config.command, "seed": config.seed, "config": config.config_hash()}
    )

    return _commands[config.command](config)


def cli_handler(argv: Optional[Sequence[str]] = None) -> int:
    """
    Command line front controller: parses the flags into a RunConfig and runs the command
    """

    args = build_parser().parse_args(argv)

    try:
        config = config_from_args(args)
    except ConfigFileException as e:
        shared_logger.error("invalid config", extra={"error": str(e)})
        return EXIT_INVALID_INPUT

    return run_command(config)
