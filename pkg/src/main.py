#!/usr/bin/env python3
"""
Flip toolkit command line
Entry point tying the triangulation, flip, search and annealing modules together
"""

import argparse
import sys
from typing import Any, Dict, List, Optional

from loguru import logger

from . import __version__
from .core import census, flips, generators
from .core.canon import canonical_form, canonical_triangulation
from .core.exceptions import BudgetExhausted, FlipToolError, LimitExceeded, NotFound
from .core.homology import homology_profile
from .core.triangulation import Triangulation
from .models.anneal_models import Objective, ObjectiveKind
from .models.config_models import FlipToolConfig
from .models.flip_models import parse_kinds
from .models.run_models import RunManifest
from .search import annealer, explorer
from .storage.class_store import ClassRecord, ClassStore
from .utils.config import anneal_config, load_config
from .utils.facet_io import (
    load_trace,
    load_triangulation,
    write_text,
    write_trace,
    write_triangulation,
)
from .utils.logging_setup import configure_logging


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def emit(stats: Dict[str, Any]) -> None:
    """Print `key=value` lines on standard output"""
    for key, value in stats.items():
        print(f"{key}={_format_value(value)}")
    sys.stdout.flush()


class FlipToolApp:
    """Runs one parsed command against the configured toolkit"""

    def __init__(self, config: FlipToolConfig, args: argparse.Namespace):
        self.config = config
        self.args = args
        self.manifest = RunManifest(command=args.command, tool_version=__version__)

    # -------------------------------------------------------------- #
    # helpers

    def load(self, path: str) -> Triangulation:
        triangulation = load_triangulation(path)
        self.manifest.input_digests[path] = canonical_form(triangulation).hex_digest
        return triangulation

    def seed(self, value: Optional[int], default: int) -> int:
        seed = default if value is None else value
        self.manifest.rng_seed = seed
        return seed

    def kinds(self, default: str = "23,32"):
        return parse_kinds(getattr(self.args, "kinds", None) or default)

    def run(self) -> int:
        handler = getattr(self, "cmd_" + self.args.command.replace("-", "_"))
        try:
            return handler()
        finally:
            if self.args.manifest:
                self.write_manifest()

    def write_manifest(self) -> None:
        self.manifest.argv = list(self.args.argv)
        self.manifest.parameters = {
            k: v
            for k, v in vars(self.args).items()
            if k not in ("argv", "manifest", "command") and not callable(v)
        }
        write_text(self.manifest.model_dump_json(indent=2) + "\n", self.args.manifest)

    # -------------------------------------------------------------- #
    # complex inspection

    def cmd_validate(self) -> int:
        t = self.load(self.args.input)
        emit(
            {
                "valid": True,
                "n": t.n,
                "facets": len(t.facets),
                "manifold": t.is_combinatorial_manifold(),
                "neighborly": t.is_neighborly(),
            }
        )
        return 0

    def cmd_fvector(self) -> int:
        print(self.load(self.args.input).f_vector().to_line())
        return 0

    def cmd_canon(self) -> int:
        t = self.load(self.args.input)
        write_triangulation(canonical_triangulation(t), self.args.output)
        return 0

    def cmd_homology(self) -> int:
        print(homology_profile(self.load(self.args.input)).to_line())
        return 0

    # -------------------------------------------------------------- #
    # flips and generators

    def cmd_moves(self) -> int:
        t = self.load(self.args.input)
        write_trace(flips.enumerate_moves(t, self.kinds("all")), self.args.output)
        return 0

    def cmd_flip(self) -> int:
        t = self.load(self.args.input)
        result = flips.replay(t, load_trace(self.args.trace))
        write_triangulation(result, self.args.output)
        return 0

    def cmd_gen(self) -> int:
        family = self.args.family
        header = f"{family}"
        if family == "simplex":
            t = generators.boundary_simplex()
        elif family == "cyclic":
            t = generators.cyclic_sphere(self.args.n)
            header += f" n={self.args.n}"
        else:
            seed = self.seed(self.args.seed, self.config.generators.default_seed)
            if family == "stacked":
                t = generators.stacked_sphere(self.args.n, seed)
            else:
                start = generators.cyclic_sphere(self.args.n)
                t = generators.random_walk(start, self.kinds(), self.args.steps, seed).final
            header += f" n={self.args.n} seed={seed}"
        write_triangulation(t, self.args.output, header=header)
        return 0

    def cmd_walk(self) -> int:
        t = self.load(self.args.input)
        seed = self.seed(self.args.seed, self.config.generators.default_seed)
        result = generators.random_walk(t, self.kinds(), self.args.steps, seed)
        write_triangulation(result.final, self.args.output, header=f"walk seed={seed}")
        if self.args.trace:
            write_trace(result.moves, self.args.trace)
        return 0

    # -------------------------------------------------------------- #
    # flip graph search

    def _explorer(self) -> explorer.FlipGraphExplorer:
        search = self.config.search
        return explorer.FlipGraphExplorer(
            kinds=self.kinds(),
            max_classes=self.args.max_classes or search.max_classes,
            max_depth=self.args.max_depth if self.args.max_depth is not None else search.max_depth,
            threads=self.args.threads or search.threads,
        )

    def cmd_bfs(self) -> int:
        t = self.load(self.args.input)
        search = self._explorer()
        report = search.explore(t)
        emit(report.stats())
        if self.args.dump:
            search.store.dump(self.args.dump)
        if not report.frontier_exhausted:
            raise LimitExceeded(f"frontier not exhausted after {report.class_count} classes")
        return 0

    def cmd_seeds(self) -> int:
        t = self.load(self.args.input)
        report = self._explorer().explore(t)
        stats: Dict[str, Any] = {"input_is_seed": explorer.is_seed(t)}
        stats.update(report.stats())
        emit(stats)
        for form in explorer.find_seeds(report):
            print(f"seed={form.hex_digest}")
        return 0

    def cmd_certify(self) -> int:
        t = self.load(self.args.input)
        limits = self.config.certificate
        path = explorer.closure_certificate(
            t,
            max_classes=self.args.max_classes or limits.max_classes,
            max_depth=self.args.max_depth if self.args.max_depth is not None else limits.max_depth,
        )
        if path is None:
            emit({"certified": False})
            raise NotFound("no stacked sphere within the search limits")
        emit({"certified": True, "path_length": len(path), "end": path.end.hex_digest})
        if self.args.trace:
            write_trace(path.moves, self.args.trace)
        return 0

    def cmd_insertions(self) -> int:
        t = self.load(self.args.input)
        limits = self.config.certificate
        report = explorer.insertion_closure_check(
            t,
            max_classes=self.args.max_classes or limits.max_classes,
            max_depth=self.args.max_depth if self.args.max_depth is not None else limits.max_depth,
        )
        emit(report.stats())
        for form in report.uncertified:
            print(f"uncertified={form.hex_digest}")
        if not report.all_certified:
            raise NotFound(f"{len(report.uncertified)} insertion classes not certified")
        return 0

    def cmd_census(self) -> int:
        forms = census.enumerate_spheres(self.args.n)
        emit({"n": self.args.n, "class_count": len(forms)})
        if self.args.dump:
            store = ClassStore()
            for form in forms:
                store.insert_if_absent(ClassRecord(form, form.to_triangulation()))
            store.dump(self.args.dump)
        return 0

    # -------------------------------------------------------------- #
    # annealing

    def _anneal_config(self):
        seed = self.seed(self.args.seed, self.config.anneal.rng_seed)
        overrides = {
            "rng_seed": seed,
            "max_flips": self.args.max_flips,
            "initial_temperature": self.args.temperature,
            "cooling_factor": self.args.cooling,
            "steps_per_temperature": self.args.steps_per_temperature,
            "allowed_kinds": parse_kinds(self.args.kinds) if self.args.kinds else None,
        }
        return anneal_config(self.config, overrides)

    def _finish_anneal(self, result) -> int:
        emit(result.stats())
        if self.args.output:
            write_triangulation(result.final, self.args.output)
        if self.args.trace:
            write_trace(result.moves, self.args.trace)
        if not result.success:
            raise BudgetExhausted(f"no success within {result.proposals} proposals")
        return 0

    def cmd_anneal(self) -> int:
        t = self.load(self.args.input)
        objective = Objective(kind=ObjectiveKind(self.args.objective), weight=self.args.weight)
        attempts = self.args.restarts or self.config.anneal.max_restarts
        result = annealer.run_with_restarts(t, objective, self._anneal_config(), attempts)
        return self._finish_anneal(result)

    def cmd_certify_sphere(self) -> int:
        t = self.load(self.args.input)
        return self._finish_anneal(annealer.reduce_to_simplex(t, self._anneal_config()))

    def cmd_prepare(self) -> int:
        t = self.load(self.args.input)
        prepared = annealer.prepare_unflippable(t)
        emit(
            {
                "new_vertex": prepared.new_vertex,
                "expanding_flips": prepared.expanding_flips,
                "link_size": prepared.link_size,
                "moves": len(prepared.moves),
            }
        )
        if self.args.output:
            write_triangulation(prepared.triangulation, self.args.output)
        if self.args.trace:
            write_trace(prepared.moves, self.args.trace)
        return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fliptool", description="Bistellar flips on triangulated 3-spheres"
    )
    parser.add_argument("--config", default=None, help="Configuration file path")
    parser.add_argument("--log-level", default=None, help="Log level (default from config)")
    parser.add_argument("--manifest", default=None, help="Write a run manifest to this path")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str, with_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="Facet file, - for stdin")
        return p

    def limits(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-classes", type=int, default=None)
        p.add_argument("--max-depth", type=int, default=None)

    command("validate", "Check the triangulation invariants")
    command("fvector", "Print the f-vector")
    command("canon", "Write the canonical facet file").add_argument("-o", "--output", default="-")
    command("homology", "Print integer homology")

    p = command("moves", "List legal moves as trace lines")
    p.add_argument("--kinds", default="all")
    p.add_argument("-o", "--output", default="-")

    p = command("flip", "Apply a flip trace")
    p.add_argument("--trace", required=True)
    p.add_argument("-o", "--output", default="-")

    p = command("gen", "Generate a triangulation", with_input=False)
    p.add_argument("family", choices=["simplex", "stacked", "cyclic", "walk"])
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--kinds", default="23,32")
    p.add_argument("-o", "--output", default="-")

    p = command("walk", "Random flip walk")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--kinds", default="23,32")
    p.add_argument("--trace", default=None)
    p.add_argument("-o", "--output", default="-")

    for name, help_text in (("bfs", "Explore the flip-graph component"), ("seeds", "Seeds in the component")):
        p = command(name, help_text)
        p.add_argument("--kinds", default="23,32")
        p.add_argument("--threads", type=int, default=None)
        limits(p)
        if name == "bfs":
            p.add_argument("--dump", default=None, help="Directory for canonical class files")

    p = command("certify", "Flip path to a stacked sphere")
    p.add_argument("--trace", default=None)
    limits(p)

    p = command("insertions", "Certify every 1-4 insertion class")
    limits(p)

    p = command("census", "Enumerate sphere classes on n vertices", with_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dump", default=None)

    for name, help_text in (("anneal", "Simulated annealing"), ("certify-sphere", "Reduce to the 4-simplex")):
        p = command(name, help_text)
        if name == "anneal":
            p.add_argument("--objective", choices=[k.value for k in ObjectiveKind], default="stacked")
            p.add_argument("--weight", type=int, default=None)
            p.add_argument("--restarts", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--max-flips", type=int, default=None)
        p.add_argument("--temperature", type=float, default=None)
        p.add_argument("--cooling", type=float, default=None)
        p.add_argument("--steps-per-temperature", type=int, default=None)
        p.add_argument("--kinds", default=None)
        p.add_argument("--trace", default=None)
        p.add_argument("-o", "--output", default=None)

    p = command("prepare", "Insert a vertex and grow its link")
    p.add_argument("--trace", default=None)
    p.add_argument("-o", "--output", default=None)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    args.argv = argv

    try:
        config = load_config(args.config)
        configure_logging(args.log_level or config.logging.level)
        return FlipToolApp(config, args).run()
    except FlipToolError as e:
        logger.debug(f"{e.name}: {e}")
        print(f"{e.name}: {e}", file=sys.stderr)
        return 1
    except (FileNotFoundError, ValueError) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

# python -m src.main gen cyclic --n 6 | python -m src.main certify
