"""Command-line entry point: ``korbits {orbits,classes,graph,verify,locus}``."""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .class_engine import (SCHEMA_VERSION, PathIndependenceError, compute_classes,
                           format_factored, verify_table)
from .closed_orbits import alternate_odd_orthogonal_class, closed_orbit_classes
from .combinatorics import Family, Permutation, SymmetricPairConfig
from .degeneracy import YDisciplineError, rank_conditions, representative_flag, to_chern_formula
from .localization import verify_closed_orbit_class, FixedPointRestrictor, all_permutations
from .weak_order import AmbiguityError, OrbitParameter, component_representative

COMMANDS = ("orbits", "classes", "graph", "verify", "locus")
FORMATS = ("json", "markdown", "latex", "dot", "text")
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    family: Family
    n: int
    command: str
    format: str
    involution: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.format == "dot" and self.command != "graph":
            raise UsageError("--format dot is only available for 'graph'")
        if self.command == "graph" and self.format not in ("dot", "json"):
            raise UsageError("'graph' supports --format dot or json")
        if self.command in ("verify", "locus") and self.format not in ("text", "json"):
            raise UsageError(f"'{self.command}' supports --format text or json")
        if self.command == "locus" and not self.involution:
            raise UsageError("'locus' needs --involution")
        if self.n < 1:
            raise UsageError("--n must be a positive integer")

    @property
    def config(self) -> SymmetricPairConfig:
        return SymmetricPairConfig(self.family, self.n)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="korbits",
        description="Equivariant classes of symmetric-subgroup orbit closures on type A flag varieties.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--family", required=True,
                   help="one of: " + ", ".join(f.value for f in Family))
    p.add_argument("--n", type=int, required=True,
                   help="rank; the ambient space has dimension 2n (2n+1 for o-odd)")
    p.add_argument("--format", choices=FORMATS, default=None,
                   help="output format (default: dot for graph, text otherwise)")
    p.add_argument("--involution", default=None,
                   help="orbit parameter for 'locus', e.g. '(1,3)', '+(1,4)(2,3)' or '3214'")
    return p


def parse_parameter(text: str, config: SymmetricPairConfig) -> OrbitParameter:
    s = text.strip()
    sign = None
    if s[:1] in "+-" and s[1:2] in "(0123456789i":
        sign, s = s[0], s[1:]
    b = Permutation.parse(s, config.ambient)
    param = OrbitParameter(b, sign)
    param.validate(config)
    return param


# -- commands -----------------------------------------------------------------

def _flag_text(b: OrbitParameter, config: SymmetricPairConfig) -> str:
    if b.component is not None:
        w = component_representative(b.involution, b.component, config)
        return "<" + ", ".join(f"e{k}" for k in w.word) + ">"
    return str(representative_flag(b.involution, config))


def cmd_orbits(rc: RunConfig) -> tuple[str, int]:
    cfg = rc.config
    _, table = compute_classes(cfg)
    params = table.parameters()
    if rc.format == "json":
        rows = [{"parameter": b.label(), "involution": b.involution.one_line(),
                 "component": b.component, "representative": _flag_text(b, cfg)}
                for b in params]
        return json.dumps({"schema": SCHEMA_VERSION, "family": cfg.family.value,
                           "n": cfg.rank, "orbits": rows}, indent=2) + "\n", EXIT_OK
    if rc.format == "markdown":
        lines = ["| parameter | representative |", "|---|---|"]
        lines += [f"| {b.label()} | {_flag_text(b, cfg)} |" for b in params]
        return "\n".join(lines) + "\n", EXIT_OK
    if rc.format == "latex":
        lines = ["\\begin{tabular}{ll}", "\\hline", "Parameter & Representative \\\\", "\\hline"]
        for b in params:
            flag = representative_flag(b.involution, cfg) if b.component is None else None
            tex = flag.to_latex() if flag else _flag_text(b, cfg).replace(
                "<", "\\langle ").replace(">", " \\rangle").replace("e", "e_")
            lines.append(f"${b.label()}$ & ${tex}$ \\\\")
        lines += ["\\hline", "\\end{tabular}"]
        return "\n".join(lines) + "\n", EXIT_OK
    width = max(len(b.label()) for b in params)
    out = [f"{b.label():<{width}}  {_flag_text(b, cfg)}" for b in params]
    return "\n".join(out) + "\n", EXIT_OK


def cmd_classes(rc: RunConfig) -> tuple[str, int]:
    _, table = compute_classes(rc.config)
    render = {"json": table.to_json_text, "markdown": table.to_markdown,
              "latex": table.to_latex, "text": table.to_text}[rc.format]
    return render(), EXIT_OK


def cmd_graph(rc: RunConfig) -> tuple[str, int]:
    graph, _ = compute_classes(rc.config)
    if rc.format == "json":
        data = {"schema": SCHEMA_VERSION, **graph.to_json()}
        return json.dumps(data, indent=2) + "\n", EXIT_OK
    return graph.to_dot(), EXIT_OK


def run_verification(config: SymmetricPairConfig, vanishing: bool = True) -> list[tuple[str, bool, str]]:
    """All checks for one configuration as ``(name, passed, detail)``."""
    results = []
    for datum in closed_orbit_classes(config):
        rep = verify_closed_orbit_class(datum.polynomial, config, datum.parameter.component,
                                        name=f"closed orbit {datum.parameter.label()}")
        ok = len(rep) - len(rep.failures)
        results.append((rep.name + " localization", rep.passed, f"{ok}/{len(rep)} fixed points"))
    if config.family is Family.O_ODD:
        alt = alternate_odd_orthogonal_class(config.rank)
        main = closed_orbit_classes(config)[0].polynomial
        fa, fm = FixedPointRestrictor(alt, config), FixedPointRestrictor(main, config)
        bad = [w for w in all_permutations(config.ambient) if fa.restrict(w) != fm.restrict(w)]
        results.append(("alternate closed-orbit representative agrees", not bad,
                        f"{len(bad)} disagreements"))
    graph, table = compute_classes(config)
    results.append(("path independence", True,
                    f"{sum(len(v) > 1 for v in table.provenance.values())} multi-parent nodes"))
    rep = verify_table(table, graph, config, vanishing=vanishing)
    results += [(c.name, c.passed, c.detail) for c in rep.checks]
    return results


def cmd_verify(rc: RunConfig) -> tuple[str, int]:
    cfg = rc.config
    results = run_verification(cfg)
    ok = all(p for _, p, _ in results)
    if rc.format == "json":
        data = {"schema": SCHEMA_VERSION, "family": cfg.family.value, "n": cfg.rank,
                "pass": ok, "checks": [{"name": n, "pass": p, "detail": d}
                                       for n, p, d in results]}
        text = json.dumps(data, indent=2) + "\n"
    else:
        lines = [f"{'PASS' if p else 'FAIL'} {n}" + (f" ({d})" if d else "")
                 for n, p, d in results]
        lines.append(f"{sum(p for _, p, _ in results)}/{len(results)} checks passed for {cfg}")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_FAIL


def cmd_locus(rc: RunConfig) -> tuple[str, int]:
    cfg = rc.config
    try:
        param = parse_parameter(rc.involution, cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _, table = compute_classes(cfg)
    cls = table[param]
    chern = to_chern_formula(cls, cfg)
    conds = rank_conditions(param.involution, cfg)
    if rc.format == "json":
        data = {"schema": SCHEMA_VERSION, "family": cfg.family.value, "n": cfg.rank,
                "parameter": param.label(),
                "rank_conditions": [{"i": i, "j": j, "max_rank": r} for i, j, r in conds],
                "class": str(cls), "chern": chern.to_text(), "chern_latex": chern.to_latex()}
        return json.dumps(data, indent=2) + "\n", EXIT_OK
    lines = [f"parameter: {param.label()} ({cfg})",
             "rank conditions, rank(gamma restricted to F_i x F_j) <= r:"]
    lines += [f"  i={i} j={j} r={r}" for i, j, r in conds] or ["  (none)"]
    lines.append(f"class: {format_factored(cls)}")
    lines.append(f"locus: {chern.to_text()}")
    if param.component is not None:
        lines.append("note: e is the Euler class of the bundle, defined up to sign")
    return "\n".join(lines) + "\n", EXIT_OK


def _join_involution(argv: list[str]) -> list[str]:
    # "-(1,3)(2,4)" would otherwise be read as an option
    out = []
    it = iter(argv)
    for a in it:
        if a == "--involution":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--involution={nxt}")
        else:
            out.append(a)
    return out


HANDLERS = {"orbits": cmd_orbits, "classes": cmd_classes, "graph": cmd_graph,
            "verify": cmd_verify, "locus": cmd_locus}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    argv = _join_involution(list(sys.argv[1:] if argv is None else argv))
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(out):
            ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        fmt = ns.format or ("dot" if ns.command == "graph" else "text")
        rc = RunConfig(Family.parse(ns.family), ns.n, ns.command, fmt, ns.involution)
        text, code = HANDLERS[rc.command](rc)
    except (UsageError, ValueError) as exc:
        if isinstance(exc, YDisciplineError):
            print(f"internal error: {exc}", file=err)
            return EXIT_INTERNAL
        parser.print_usage(err)
        print(f"korbits: error: {exc}", file=err)
        return EXIT_USAGE
    except (AssertionError, AmbiguityError, PathIndependenceError) as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INTERNAL
    out.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
