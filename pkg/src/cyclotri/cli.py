"""Command-line frontend.

Subcommands cover generation (cyclic polytope boundaries, the three-parameter
family, torus splittings), verification (manifold and neighbourliness
checks), analysis (homology, Morse vectors, multipliers, fibre data),
expansion of half-orbit families, and format conversion.  ``-`` stands for
stdin or stdout, so the commands compose in pipelines; ``--format json``
emits the same values machine-readably.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import diffcycles, expansion, io as tio, morse, mpqr
from .homology import homology_groups


def _threads_cap() -> int:
    """Worker cap from CYCLOTRI_THREADS; computations here are sequential,
    which trivially respects any positive cap."""
    raw = os.environ.get("CYCLOTRI_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"CYCLOTRI_THREADS={raw!r} is not an integer") from None
    if cap < 1:
        raise ValueError("CYCLOTRI_THREADS must be positive")
    return cap


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as handle:
            return handle.read()
    except OSError as err:
        raise SystemExit(f"cyclotri: cannot read {path}: {err.strerror}")


def _write_output(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as handle:
            handle.write(text)


def _digest(data: str) -> str:
    return hashlib.sha256(data.encode()).hexdigest()[:16]


class Report:
    """Command results, rendered identically as text or JSON."""

    def __init__(self, command: str, input_digest: str):
        self.command = command
        self.input_digest = input_digest
        self.results: dict = {}
        self.status = 0

    def emit(self, fmt: str):
        if fmt == "json":
            payload = {
                "command": self.command,
                "input": self.input_digest,
                "results": self.results,
                "status": self.status,
            }
            print(json.dumps(payload, sort_keys=True))
        else:
            for key, value in self.results.items():
                print(f"{key}: {value}")


def _load_complex(text: str):
    """(simplicial complex, cyclic form or None) from either format."""
    kind = tio.sniff_format(text)
    if kind == "dc":
        cyclic = tio.read_dc(text)
        return cyclic.expand(), cyclic
    return tio.read_tri(text), None


def _cyclic_form(text: str):
    kind = tio.sniff_format(text)
    if kind == "dc":
        return tio.read_dc(text)
    complex_ = tio.read_tri(text)
    return diffcycles.compress(complex_, complex_.n)


# -- subcommand implementations -------------------------------------------------


def _cmd_gen(args) -> int:
    if args.what == "c4":
        cyclic = diffcycles.cyclic_polytope_boundary(args.n)
    elif args.what == "mpqr":
        cyclic = mpqr.build_manifold(args.p, args.q, args.r)
    else:  # torus-split
        first, second = diffcycles.torus_decomposition(args.n, args.l)
        cyclic = first if args.part == "a" else second
    if args.to == "tri":
        _write_output(args.output, tio.write_tri(cyclic.expand()))
    else:
        _write_output(args.output, tio.write_dc(cyclic))
    return 0


def _cmd_verify(args) -> int:
    text = _read_input(args.file)
    complex_, cyclic = _load_complex(text)
    report = Report(f"verify {args.what}", _digest(text))
    if args.what == "manifold":
        vertices = (0,) if cyclic is not None else None
        result = complex_.is_combinatorial_3_manifold(check_vertices=vertices)
        report.results["manifold"] = result.is_manifold
        if not result.is_manifold:
            report.results["failing_vertex"] = result.failing_vertex
            report.results["reason"] = result.reason
            report.status = 1
    else:
        ok = complex_.is_neighbourly()
        report.results["neighbourly"] = ok
        report.status = 0 if ok else 1
    report.emit(args.format)
    return report.status


def _cmd_analyze_homology(args) -> int:
    text = _read_input(args.file)
    complex_, _ = _load_complex(text)
    groups = homology_groups(complex_)
    report = Report("analyze homology", _digest(text))
    report.results["H_*"] = str(groups)
    report.results["betti"] = list(groups.betti)
    report.results["torsion"] = [list(t) for t in groups.torsion]
    report.emit(args.format)
    return 0


def _cmd_analyze_morse(args) -> int:
    text = _read_input(args.file)
    complex_, _ = _load_complex(text)
    report = Report("analyze morse", _digest(text))
    choice = args.rsl
    if choice == "identity":
        f = morse.identity_rsl(complex_)
    elif choice.startswith("random:"):
        f = morse.random_rsl(complex_, int(choice.split(":", 1)[1]))
    elif choice == "random":
        f = morse.random_rsl(complex_, args.seed)
    elif choice == "search":
        bound, f = morse.heegaard_upper_bound(
            complex_, seed=args.seed, restarts=args.restarts, iterations=args.iterations
        )
        report.results["genus_bound"] = bound
        report.results["witness_order"] = list(f.order)
    else:
        raise SystemExit(f"cyclotri: unknown rsl choice {choice!r}")
    points = morse.critical_points(complex_, f)
    vector = morse.morse_vector(complex_, points)
    report.results["morse_vector"] = f"({vector[0]}, {vector[1]}, {vector[2]}, {vector[3]})"
    report.results["critical_points"] = [
        {"vertex": p.vertex, "index": p.index, "multiplicity": p.multiplicity}
        for p in points
    ]
    report.emit(args.format)
    return 0


def _cmd_analyze_multipliers(args) -> int:
    text = _read_input(args.file)
    report = Report("analyze multipliers", _digest(text))
    cyclic = _cyclic_form(text)
    report.results["n"] = cyclic.n
    report.results["multipliers"] = sorted(cyclic.multipliers())
    report.emit(args.format)
    return 0


def _cmd_analyze_seifert(args) -> int:
    data = mpqr.expected_seifert(args.p, args.q, args.r)
    report = Report("analyze seifert", _digest(f"{args.p},{args.q},{args.r}"))
    if data.sfs:
        report.results["type"] = "seifert"
        report.results["base_genus"] = data.base_genus
        report.results["fibres"] = [
            {"alpha": a, "beta": b, "count": m} for a, b, m in data.fibres
        ]
        report.results["consistency_residual"] = data.residual
    else:
        report.results["type"] = "connected_sum"
        report.results["copies_of_s2xs1"] = data.connected_sum_copies
    report.emit(args.format)
    return 0


def _cmd_expand(args) -> int:
    text = _read_input(args.file)
    cyclic = _cyclic_form(text)
    report = Report("expand", _digest(text))
    check = expansion.check_expandable(cyclic)
    report.results["n_even"] = check.n_even
    report.results["short_cycle_present"] = check.short_cycle_present
    report.results["violators"] = [str(v) for v in check.violators]
    report.results["expandable"] = check.expandable
    if not check.expandable:
        report.status = 1
        report.emit(args.format)
        return 1
    if args.check_only:
        report.emit(args.format)
        return 0
    family = expansion.ExpansionFamily.from_cyclic(cyclic)
    stretched = expansion.expand_family(family, args.k)
    _write_output(args.output, tio.write_dc(stretched))
    return 0


def _cmd_convert(args) -> int:
    text = _read_input(args.file)
    kind = tio.sniff_format(text)
    if args.to == "tri":
        complex_ = tio.read_dc(text).expand() if kind == "dc" else tio.read_tri(text)
        _write_output(args.output, tio.write_tri(complex_))
    else:
        cyclic = tio.read_dc(text) if kind == "dc" else _cyclic_form(text)
        _write_output(args.output, tio.write_dc(cyclic))
    return 0


# -- argument wiring -------------------------------------------------------------


def _add_io_options(parser, with_input=True):
    if with_input:
        parser.add_argument("file", help="input path, or - for stdin")
    parser.add_argument("-o", "--output", default="-", help="output path, or - for stdout")
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclotri",
        description="cyclic combinatorial 3-manifolds: generation, verification, analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a complex")
    gsub = gen.add_subparsers(dest="what", required=True)
    g_c4 = gsub.add_parser("c4", help="cyclic 4-polytope boundary")
    g_c4.add_argument("--n", type=int, required=True)
    g_mpqr = gsub.add_parser("mpqr", help="three-parameter family member")
    g_mpqr.add_argument("--p", type=int, required=True)
    g_mpqr.add_argument("--q", type=int, required=True)
    g_mpqr.add_argument("--r", type=int, required=True)
    g_split = gsub.add_parser("torus-split", help="solid-torus half of the polytope boundary")
    g_split.add_argument("--n", type=int, required=True)
    g_split.add_argument("--l", type=int, required=True)
    g_split.add_argument("--part", choices=("a", "b"), required=True)
    for sp in (g_c4, g_mpqr, g_split):
        sp.add_argument("--to", choices=("dc", "tri"), default="dc")
        sp.add_argument("-o", "--output", default="-")
        sp.set_defaults(func=_cmd_gen)

    verify = sub.add_parser("verify", help="check a stored complex")
    vsub = verify.add_subparsers(dest="what", required=True)
    for name in ("manifold", "neighbourly"):
        vp = vsub.add_parser(name)
        _add_io_options(vp)
        vp.set_defaults(func=_cmd_verify)

    analyze = sub.add_parser("analyze", help="compute invariants")
    asub = analyze.add_subparsers(dest="what", required=True)
    a_hom = asub.add_parser("homology")
    _add_io_options(a_hom)
    a_hom.set_defaults(func=_cmd_analyze_homology)
    a_morse = asub.add_parser("morse")
    _add_io_options(a_morse)
    a_morse.add_argument("--rsl", default="identity", help="identity | random:SEED | search")
    a_morse.add_argument("--seed", type=int, default=0)
    a_morse.add_argument("--restarts", type=int, default=16)
    a_morse.add_argument("--iterations", type=int, default=200)
    a_morse.set_defaults(func=_cmd_analyze_morse)
    a_mult = asub.add_parser("multipliers")
    _add_io_options(a_mult)
    a_mult.set_defaults(func=_cmd_analyze_multipliers)
    a_sfs = asub.add_parser("seifert")
    a_sfs.add_argument("--p", type=int, required=True)
    a_sfs.add_argument("--q", type=int, required=True)
    a_sfs.add_argument("--r", type=int, required=True)
    a_sfs.add_argument("--format", choices=("text", "json"), default="text")
    a_sfs.set_defaults(func=_cmd_analyze_seifert)

    expand = sub.add_parser("expand", help="stretch a half-orbit family")
    _add_io_options(expand)
    expand.add_argument("--k", type=int, required=True)
    expand.add_argument("--check-only", action="store_true")
    expand.set_defaults(func=_cmd_expand)

    convert = sub.add_parser("convert", help="translate between .dc and .tri")
    _add_io_options(convert)
    convert.add_argument("--to", choices=("dc", "tri"), required=True)
    convert.set_defaults(func=_cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads_cap()
        return args.func(args)
    except (tio.FormatError, ValueError) as err:
        print(f"cyclotri: {err}", file=sys.stderr)
        return 2
    except SystemExit as err:
        if isinstance(err.code, str):
            print(err.code, file=sys.stderr)
            return 2
        raise
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
