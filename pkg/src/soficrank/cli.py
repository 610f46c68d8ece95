"""Command-line front end.

Subcommands: approximate, convert, rank, finiteness, axioms, regularity.
Every run is driven by a group description file plus a schedule, all
randomness flows from --seed, and reports are written as CSV or structured
text with exact rationals rendered as num/den.  Identical config and seed
produce byte-identical reports.

Exit codes: 0 success, 1 property violation found (a counterexample
artifact is written), 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from ._util import exact_fraction, format_fraction
from .approx import (
    defect_pair_table,
    defect_report,
    defect_summary_csv,
    save_approximation,
)
from .bridge import (
    GoodSet,
    LabeledDigraph,
    counting_bound,
    epsilon_threshold,
    graph_to_maps,
    map_agreement_diff,
    maps_to_graph,
)
from .errors import DomainError, ResourceLimitError
from .families import build_family
from .groups import (
    Group,
    GroupDocument,
    ball,
    load_group_document,
    min_radius_covering,
    parse_ring_element,
)
from .rank import (
    direct_finiteness_check,
    pseudo_rank_axioms_check,
    pseudo_rank_sequence,
    regularity_witness_check,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class CliError(Exception):
    """Configuration problem surfaced as exit code 2."""


@dataclass
class RunConfig:
    """Resolved configuration of one command invocation."""

    out_dir: Path
    seed: int
    group_path: str | None = None
    document: GroupDocument | None = None
    prime: int | None = None
    schedule_kind: str | None = None
    schedule_params: list[int] = field(default_factory=list)
    radius: int | None = None

    @property
    def group(self) -> Group:
        if self.document is None:
            raise CliError("this command needs --group")
        return self.document.group


def _parse_schedule(text: str) -> tuple[str, list[int]]:
    kind, sep, rest = text.partition(":")
    if not sep:
        raise CliError(f"schedule {text!r} must look like kind:n1,n2,...")
    kind = kind.strip()
    if kind not in ("quotient", "folner", "copies"):
        raise CliError(f"unknown schedule kind {kind!r}")
    params = [p for p in rest.split(",") if p.strip()]
    if not params:
        raise CliError(f"schedule {text!r} has no levels")
    try:
        values = [int(p) for p in params]
    except ValueError as exc:
        raise CliError(f"schedule {text!r} has a non-integer level") from exc
    if any(b <= a for a, b in zip(values, values[1:])) or any(v < 1 for v in values):
        raise CliError("schedule levels must be positive and strictly increasing")
    return kind, values


def _resolve_config(args, need_group: bool, need_schedule: bool) -> RunConfig:
    cfg = RunConfig(out_dir=Path(args.out), seed=int(args.seed))
    if getattr(args, "group", None):
        cfg.group_path = args.group
        cfg.document = load_group_document(args.group)
        cfg.prime = cfg.document.prime
    elif need_group:
        raise CliError("this command needs --group FILE")
    if getattr(args, "prime", None):
        cfg.prime = int(args.prime)
    if getattr(args, "schedule", None):
        cfg.schedule_kind, cfg.schedule_params = _parse_schedule(args.schedule)
    elif need_schedule:
        raise CliError("this command needs --schedule kind:n1,n2,...")
    if getattr(args, "radius", None) is not None:
        if args.radius < 0:
            raise CliError("--radius must be nonnegative")
        cfg.radius = int(args.radius)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    return cfg


def _resolve_element(cfg: RunConfig, text: str):
    """An element name from the group file, or an inline expression."""
    doc = cfg.document
    if doc is not None and text in doc.elements:
        return doc.elements[text]
    if cfg.prime is None:
        raise CliError("inline elements need --prime (or a prime in the group file)")
    return parse_ring_element(cfg.group, cfg.prime, text)


def _family(cfg: RunConfig, radius: int):
    return build_family(cfg.group, cfg.schedule_kind, cfg.schedule_params, radius)


def _slug(label: str) -> str:
    return label.replace(":", "-").replace("/", "-").replace(" ", "_")


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def _seed_line(cfg: RunConfig) -> str:
    return f"# seed={cfg.seed}\n"


def _radius_for_elements(cfg: RunConfig, elements) -> int:
    if cfg.radius is not None:
        return cfg.radius
    support = {s for el in elements for s in el.support}
    if not support:
        return 1
    return max(1, min_radius_covering(cfg.group, support))


# ---------------------------------------------------------------------------
# subcommands


def cmd_approximate(args) -> int:
    cfg = _resolve_config(args, need_group=True, need_schedule=True)
    radius = cfg.radius if cfg.radius is not None else 1
    family = _family(cfg, radius)
    reports = []
    for approx in family:
        rep = defect_report(approx)
        reports.append(rep)
        slug = _slug(approx.label)
        _write(
            cfg.out_dir / f"defects_{slug}.txt",
            _seed_line(cfg) + defect_pair_table(rep, cfg.group),
        )
        save_approximation(approx, cfg.out_dir / f"approx_{slug}.json")
        print(f"wrote {cfg.out_dir / f'approx_{slug}.json'}")
    _write(cfg.out_dir / "defects.csv", _seed_line(cfg) + defect_summary_csv(reports))
    return EXIT_OK


def _threshold_report(cfg: RunConfig, group: Group, r: int, delta) -> str:
    gens = group.generators
    n_r = len(ball(group, r, gens))
    n_r1 = len(ball(group, r + 1, gens))
    thr = epsilon_threshold(delta, n_r, n_r1, len(gens))
    return (
        f"conversion-radius: {r}\n"
        f"delta: {format_fraction(exact_fraction(delta))}\n"
        f"ball-size: {n_r}\n"
        f"next-ball-size: {n_r1}\n"
        f"generators: {len(gens)}\n"
        f"epsilon-threshold: {format_fraction(thr)}\n"
    )


def cmd_convert(args) -> int:
    direction = args.direction
    if direction == "graph-to-maps":
        return _convert_graph_to_maps(args)
    cfg = _resolve_config(args, need_group=True, need_schedule=True)
    r = args.conversion_radius
    delta = exact_fraction(args.delta)
    family = _family(cfg, 2 * r + 2)
    exit_code = EXIT_OK
    for approx in family:
        slug = _slug(approx.label)
        graph, good = maps_to_graph(approx, r, delta)
        _write(cfg.out_dir / f"graph_{slug}.txt", graph.to_text())
        _write(cfg.out_dir / f"good_{slug}.txt", good.to_text())
        record = counting_bound(approx, r, good)
        _write(
            cfg.out_dir / f"threshold_{slug}.txt",
            _seed_line(cfg)
            + _threshold_report(cfg, cfg.group, r, delta)
            + f"good-vertices: {len(good)}\n"
            f"measured-delta: {format_fraction(good.measured)}\n"
            f"meets-delta-target: {good.meets_target(approx.n_points)}\n"
            + record.to_text(),
        )
        if direction == "round-trip":
            inner = ball(cfg.group, r // 2)
            rebuilt = graph_to_maps(
                graph, good, r, inner, cfg.group, label=f"rebuilt:{slug}"
            )
            compare = ball(cfg.group, r)
            diffs = map_agreement_diff(approx, rebuilt, compare.elements, good.vertices)
            lines = [
                f"level: {approx.label}",
                f"compared-elements: {len(compare)}",
                f"compared-vertices: {len(good)}",
                f"differences: {len(diffs)}",
            ]
            for g, v, a, b in diffs[:20]:
                lines.append(
                    f"  {cfg.group.element_name(g)} at {v}: original {a} rebuilt {b}"
                )
            _write(
                cfg.out_dir / f"roundtrip_{slug}.txt",
                _seed_line(cfg) + "\n".join(lines) + "\n",
            )
            exact_kind = cfg.schedule_kind in ("quotient", "copies")
            if diffs and exact_kind:
                _write(
                    cfg.out_dir / f"counterexample_roundtrip_{slug}.txt",
                    _seed_line(cfg)
                    + f"exact level {approx.label} failed to round-trip: "
                    f"{len(diffs)} differences\n",
                )
                exit_code = EXIT_VIOLATION
    return exit_code


def _convert_graph_to_maps(args) -> int:
    cfg = _resolve_config(args, need_group=True, need_schedule=False)
    if not args.graph_file:
        raise CliError("graph-to-maps needs --graph FILE")
    r = args.conversion_radius
    try:
        graph = LabeledDigraph.from_text(Path(args.graph_file).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CliError(f"cannot read graph file: {exc}") from exc
    if args.good_file:
        try:
            good = GoodSet.from_text(Path(args.good_file).read_text(encoding="utf-8"))
        except OSError as exc:
            raise CliError(f"cannot read good-set file: {exc}") from exc
        vertices = good.vertices
    else:
        vertices = tuple(range(graph.n_vertices))
    window = ball(cfg.group, r // 2)
    approx = graph_to_maps(graph, vertices, r, window, cfg.group, label="charted")
    rep = defect_report(approx)
    _write(
        cfg.out_dir / "defects_charted.txt",
        _seed_line(cfg) + defect_pair_table(rep, cfg.group),
    )
    save_approximation(approx, cfg.out_dir / "approx_charted.json")
    print(f"wrote {cfg.out_dir / 'approx_charted.json'}")
    return EXIT_OK


def cmd_rank(args) -> int:
    cfg = _resolve_config(args, need_group=True, need_schedule=True)
    element = _resolve_element(cfg, args.element)
    radius = _radius_for_elements(cfg, [element])
    family = _family(cfg, radius)
    seq = pseudo_rank_sequence(element, family)
    slug = _slug(args.element)
    text = [
        f"element: {seq.element_text}",
        f"levels: {len(seq.levels)}",
        f"warnings: {len(seq.warnings)}",
    ]
    if seq.levels:
        text.append(f"last: {format_fraction(seq.last)}")
        text.append(f"tail-min: {format_fraction(seq.tail_min)}")
        text.append(f"tail-max: {format_fraction(seq.tail_max)}")
    for w in seq.warnings:
        text.append(f"warning: {w}")
    _write(cfg.out_dir / f"rank_{slug}.csv", _seed_line(cfg) + seq.to_csv())
    _write(cfg.out_dir / f"rank_{slug}.txt", _seed_line(cfg) + "\n".join(text) + "\n")
    return EXIT_OK


def cmd_finiteness(args) -> int:
    cfg = _resolve_config(args, need_group=True, need_schedule=True)
    a = _resolve_element(cfg, args.element_a)
    b = _resolve_element(cfg, args.element_b)
    radius = _radius_for_elements(cfg, [a, b])
    family = _family(cfg, radius)
    verdict = direct_finiteness_check(a, b, family)
    slug = f"{_slug(args.element_a)}_{_slug(args.element_b)}"
    _write(
        cfg.out_dir / f"finiteness_{slug}.txt", _seed_line(cfg) + verdict.to_text()
    )
    csv_lines = ["label,vertices,rank_ab_minus_one,rank_ba_minus_one"]
    ba_by_label = {lv.label: lv for lv in verdict.ba_sequence.levels}
    for lv in verdict.ab_sequence.levels:
        other = ba_by_label.get(lv.label)
        rhs = format_fraction(other.value) if other else "-"
        csv_lines.append(f"{lv.label},{lv.n_points},{format_fraction(lv.value)},{rhs}")
    _write(
        cfg.out_dir / f"finiteness_{slug}.csv",
        _seed_line(cfg) + "\n".join(csv_lines) + "\n",
    )
    corroboration_bad = (
        verdict.ab_is_one and any(lv.value != 0 for lv in verdict.ab_sequence.levels)
    ) or (verdict.ba_is_one and any(lv.value != 0 for lv in verdict.ba_sequence.levels))
    if not verdict.consistent or corroboration_bad:
        _write(
            cfg.out_dir / f"counterexample_finiteness_{slug}.txt",
            _seed_line(cfg)
            + f"a: {verdict.a_text}\nb: {verdict.b_text}\n"
            + f"ab-is-one: {verdict.ab_is_one}\nba-is-one: {verdict.ba_is_one}\n"
            + f"corroboration-bad: {corroboration_bad}\n",
        )
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_axioms(args) -> int:
    cfg = _resolve_config(args, need_group=False, need_schedule=False)
    if args.prime is None:
        raise CliError("axioms needs --prime")
    report = pseudo_rank_axioms_check(int(args.prime), args.size, args.trials, cfg.seed)
    _write(
        cfg.out_dir / f"axioms_p{report.p}_n{report.size}.txt",
        _seed_line(cfg) + report.to_text(),
    )
    if not report.ok:
        _write(
            cfg.out_dir / f"counterexample_axioms_p{report.p}_n{report.size}.txt",
            _seed_line(cfg) + f"{report.first_failure}\n",
        )
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_regularity(args) -> int:
    cfg = _resolve_config(args, need_group=False, need_schedule=False)
    if args.prime is None:
        raise CliError("regularity needs --prime")
    report = regularity_witness_check(int(args.prime), args.size, args.trials, cfg.seed)
    _write(
        cfg.out_dir / f"regularity_p{report.p}.txt", _seed_line(cfg) + report.to_text()
    )
    if not report.ok:
        _write(
            cfg.out_dir / f"counterexample_regularity_p{report.p}.txt",
            _seed_line(cfg) + f"{report.first_failure}\n",
        )
        return EXIT_VIOLATION
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soficrank",
        description="Build and audit finite approximations of groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, group=True, schedule=True):
        if group:
            p.add_argument("--group", help="group description file (JSON)")
        p.add_argument("--prime", type=int, help="coefficient field prime")
        if schedule:
            p.add_argument("--schedule", help="family schedule, e.g. quotient:4,8,16")
            p.add_argument("--radius", type=int, help="window ball radius")
        p.add_argument("--out", default="reports", help="output directory")
        p.add_argument("--seed", type=int, default=0, help="seed embedded in reports")

    p = sub.add_parser("approximate", help="build approximations and measure defects")
    common(p)
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("convert", help="convert between maps and labeled graphs")
    common(p)
    p.add_argument(
        "--direction",
        choices=["maps-to-graph", "graph-to-maps", "round-trip"],
        default="round-trip",
    )
    p.add_argument(
        "--r",
        dest="conversion_radius",
        type=int,
        default=2,
        help="chart radius for the conversion",
    )
    p.add_argument("--delta", default="0.1", help="good-set accuracy target")
    p.add_argument("--graph", dest="graph_file", help="edge-list file to read")
    p.add_argument("--good", dest="good_file", help="good-set file to read")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("rank", help="normalized rank sequence of one element")
    common(p)
    p.add_argument("--element", required=True, help="element name or expression")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("finiteness", help="one-sided inverse audit for a pair")
    common(p)
    p.add_argument("-a", dest="element_a", required=True, help="left factor")
    p.add_argument("-b", dest="element_b", required=True, help="right factor")
    p.set_defaults(func=cmd_finiteness)

    p = sub.add_parser("axioms", help="randomized rank-axioms audit")
    common(p, group=False, schedule=False)
    p.add_argument("--size", type=int, default=32, help="matrix size")
    p.add_argument("--trials", type=int, default=200, help="random trials")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("regularity", help="randomized regular-witness audit")
    common(p, group=False, schedule=False)
    p.add_argument("--size", type=int, default=64, help="largest matrix size")
    p.add_argument("--trials", type=int, default=100, help="random trials")
    p.set_defaults(func=cmd_regularity)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (CliError, DomainError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
