"""CLI entry point: analyze, extend and search binary linear codes."""

import argparse
import json
import logging
import sys
from fractions import Fraction

from dotenv import load_dotenv

from lincode import config
from lincode.code import (
    LinearCode,
    compare_distributions,
    enumerator_string,
    format_distribution,
    griesmer_bound,
    weight_distribution,
)
from lincode.errors import ConsistencyError, FormatError, LincodeError
from lincode.extension import extension_report, extension_requirements
from lincode.gf2 import matrix_order
from lincode.matfile import format_mat, read_mat, write_mat
from lincode.models import SearchConfig
from lincode.orbits import MatrixGroup, burnside_count, format_partition, generate_cyclic, orbit_partition
from lincode.search import search
from lincode.system import (
    DiophantineSystem,
    attach_group,
    build_system,
    evaluate_selection,
    format_selection,
    materialize,
    parse_selection,
    read_system,
    write_system,
)
from lincode.verify import verify_fixtures

load_dotenv()  # reads .env file from the working directory

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _partitions(k: int, workers: int) -> int:
    """Largest power of two <= workers, only worth it for big message spaces."""
    if k < 18 or workers < 2:
        return 1
    return 1 << min(workers.bit_length() - 1, k)


def _load_code(path: str) -> LinearCode:
    return LinearCode(read_mat(path))


def _load_group(path: str) -> MatrixGroup:
    return generate_cyclic(read_mat(path))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_analyze(args: argparse.Namespace) -> int:
    code = _load_code(args.file)
    workers = config.worker_count()
    dist = weight_distribution(code, partitions=_partitions(code.k, workers), workers=workers)
    if args.dist_out:
        with open(args.dist_out, "w", encoding="utf-8") as f:
            f.write(format_distribution(dist))
        log.info("Distribution written to %s", args.dist_out)

    total_ok = dist.total == 1 << code.k
    if args.json:
        print(json.dumps({
            "n": code.n, "k": code.k,
            "d": dist.min_distance, "dmax": dist.max_weight,
            "t": (dist.min_distance - 1) // 2,
            "griesmer_n": griesmer_bound(code.k, dist.min_distance),
            "enumerator": enumerator_string(dist),
            "distribution": dist.to_dict()["counts"],
            "sum_ok": total_ok,
        }, indent=2))
    else:
        print(
            f"n={code.n} k={code.k} d={dist.min_distance} dmax={dist.max_weight} "
            f"t={(dist.min_distance - 1) // 2} griesmer_n={griesmer_bound(code.k, dist.min_distance)}"
        )
        print(enumerator_string(dist))
        print(f"sum={dist.total} expected={1 << code.k} {'OK' if total_ok else 'MISMATCH'}")
        print(format_distribution(dist), end="")
    return EXIT_OK if total_ok else EXIT_FAILED


def cmd_extend(args: argparse.Namespace) -> int:
    code = _load_code(args.file)
    report = extension_report(code, args.pad)
    ext = report.extended
    if args.out:
        write_mat(args.out, ext.gen, comments=[f"[{ext.n},{ext.k},{report.verified_d}] all-one extension, pad={args.pad}"])

    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
        return EXIT_OK

    base = report.base_distribution
    print(f"base=[{code.n},{code.k},{base.min_distance}] dmax={base.max_weight} pad={args.pad}")
    print(f"extended=[{ext.n},{ext.k},{report.verified_d}] predicted_d={report.predicted_d} verified_d={report.verified_d}")
    print(enumerator_string(report.extended_distribution))
    print(format_distribution(report.extended_distribution), end="")
    if not args.out:
        print(format_mat(ext.gen), end="")
    return EXIT_OK


def cmd_order(args: argparse.Namespace) -> int:
    print(f"order={matrix_order(read_mat(args.file))}")
    return EXIT_OK


def cmd_orbits(args: argparse.Namespace) -> int:
    group = _load_group(args.file)
    partition = orbit_partition(group)
    burnside = burnside_count(group)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(format_partition(partition))
        log.info("Partition written to %s", args.out)
    print(f"{partition.num_orbits} orbits")
    print(f"group_order={group.order} burnside={burnside}")
    if burnside != partition.num_orbits:
        log.error("Burnside count %d disagrees with the sweep", burnside)
        return EXIT_FAILED
    return EXIT_OK


def cmd_system(args: argparse.Namespace) -> int:
    group = _load_group(args.file)
    system = build_system(group, args.n, args.d, args.dmax, workers=config.worker_count())
    write_system(args.out, system)
    print(f"rows={system.num_rows} cols={system.num_cols}")
    return EXIT_OK


def _system_with_group(path: str, group_path: str | None) -> DiophantineSystem:
    system = read_system(path)
    if group_path:
        system = attach_group(system, _load_group(group_path))
    return system


def _emit_code(system: DiophantineSystem, selection: tuple[int, ...], mat_path: str | None) -> None:
    if system.col_orbits is None and any(int(v) > 1 for v, x in zip(system.lengths, selection) if x):
        log.warning("Orbit members unknown; pass --group to write the generator matrix")
        return
    code = materialize(system, selection)
    comment = f"[{code.n},{code.k},{code.min_distance}] maximum weight {code.max_weight}"
    if mat_path:
        write_mat(mat_path, code.gen, comments=[comment])
    else:
        print(format_mat(code.gen, comments=[comment]), end="")


def cmd_search(args: argparse.Namespace) -> int:
    system = _system_with_group(args.file, args.group)
    cfg = SearchConfig(
        seed=args.seed,
        max_iterations=args.iters,
        restarts=args.restarts,
        domain=args.domain,
        cap=args.cap,
        length_penalty=Fraction(args.penalty),
        workers=config.worker_count(),
    )
    result = search(system, cfg)
    print(
        f"status={result.status} cost={result.best_cost} "
        f"iterations={result.iterations_used} restart={result.restart_index}"
    )
    if not result.found:
        return EXIT_FAILED

    selection_text = format_selection(result.best_selection)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(selection_text)
        log.info("Selection written to %s", args.out)
    else:
        print(selection_text, end="")
    _emit_code(system, result.best_selection, args.mat)
    return EXIT_OK


def cmd_materialize(args: argparse.Namespace) -> int:
    system = _system_with_group(args.system, args.group)
    with open(args.selection, encoding="utf-8") as f:
        selection = parse_selection(f.read(), system.num_cols)
    report = evaluate_selection(system, selection)
    print(
        f"length={report.total_length} min_weight={report.min_row_weight} "
        f"max_weight={report.max_row_weight} feasible={report.feasible}"
    )
    if not report.feasible:
        return EXIT_FAILED
    _emit_code(system, selection, args.out)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    a = weight_distribution(_load_code(args.first))
    b = weight_distribution(_load_code(args.second))
    cmp = compare_distributions(a, b)
    print(f"d={cmp.min_distance[0]},{cmp.min_distance[1]} dmax={cmp.max_weight[0]},{cmp.max_weight[1]}")
    if cmp.distinguished:
        print(f"distinguished: weight distributions differ at {list(cmp.differing_weights)}")
    else:
        print("not distinguished: identical weight distributions")
    return EXIT_OK


def cmd_plan(args: argparse.Namespace) -> int:
    req = extension_requirements(args.n, args.k, args.d, args.pad)
    print(
        f"need [{req.base_n},{req.base_k},{req.d}] with maximum weight <= {req.max_weight}, "
        f"then pad {req.pad} and add the all-one row"
    )
    print(f"system --n {req.base_n} --d {req.d} --dmax {req.max_weight}")
    return EXIT_OK


def cmd_verify_paper(args: argparse.Namespace) -> int:
    report = verify_fixtures()
    for line in report.lines():
        print(line)
    if report.passed:
        print("PASS")
        return EXIT_OK
    print("FAIL: " + ", ".join(c.name for c in report.failures))
    return EXIT_FAILED


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcode", description="Binary linear code toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="Weight distribution, d and maximum weight of a MAT file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="Print the report as JSON")
    p.add_argument("--dist-out", metavar="FILE", help="Write 'w count' lines to FILE")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("extend", help="Pad with zero columns and add the all-one row")
    p.add_argument("file")
    p.add_argument("--pad", type=int, default=1)
    p.add_argument("--out", metavar="FILE", help="Write the extended generator (MAT format)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("order", help="Multiplicative order of a square matrix")
    p.add_argument("file")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("orbits", help="Orbits of <M> on nonzero vectors")
    p.add_argument("file")
    p.add_argument("--out", metavar="FILE", help="Write 'orbit_id size rep_hex' lines")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("system", help="Build the orbit feasibility system")
    p.add_argument("file", help="group generator (MAT format)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--dmax", type=int, default=None)
    p.add_argument("--out", metavar="FILE", required=True)
    p.set_defaults(func=cmd_system)

    p = sub.add_parser("search", help="Local search for a feasible orbit selection")
    p.add_argument("file", help="system file (DIOSYS format)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=100_000, help="moves per restart")
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--domain", choices=["binary", "bounded"], default="binary")
    p.add_argument("--cap", type=int, default=1, help="largest multiplicity in the bounded domain")
    p.add_argument("--penalty", default="1", help="length penalty (rational, e.g. 1/2)")
    p.add_argument("--group", metavar="FILE", help="group generator, needed to materialize orbits")
    p.add_argument("--out", metavar="FILE", help="Write the selection to FILE")
    p.add_argument("--mat", metavar="FILE", help="Write the materialized generator to FILE")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("materialize", help="Build the generator of a stored selection")
    p.add_argument("system")
    p.add_argument("selection")
    p.add_argument("--group", metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_materialize)

    p = sub.add_parser("compare", help="Compare the weight distributions of two codes")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("plan", help="Base code needed for an all-one extension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--pad", type=int, default=1)
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser(
        "verify-paper",
        aliases=["verify-fixtures"],
        help="Check the published [47,15,16] and [48,16,16] data",
    )
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        level = config.log_level()
    except LincodeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        return args.func(args)
    except FormatError as e:
        source = getattr(args, "file", None) or "input"
        log.error("%s:%d:%d: %s", source, e.line, e.column, e)
        return EXIT_INPUT
    except ConsistencyError as e:
        log.error("Consistency check failed: %s", e)
        return EXIT_FAILED
    except (LincodeError, ValueError, OSError) as e:
        log.error("%s", e)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
