"""Corpus sweep engine: run every enabled inequality check over a stream of
graph6 records, in parallel if asked, with deterministic sorted output.

Check names:

* ``tough-lower``    exact toughness dominates the three degree/deviation terms
* ``lap-product``    toughness dominates the Laplacian product bound
* ``lap-gap``        toughness dominates the Laplacian gap bound
* ``conn-cap``       algebraic connectivity under the toughness cap, and the
                     equality-iff-join-structure cross check
* ``regular``        the three regular-graph bounds
* ``alpha-bounds``   independence number under its three upper bounds, plus
                     the biregular structure forced at the Laplacian equality
* ``mixing``         both mixing inequalities over every subset pair
                     (only sensible for corpora with n <= 6)
* ``cut-partition``  size bounds for every cut set and component grouping
* ``extremal-iff``   numeric equality in both Laplacian bounds iff the join
                     decomposition with the eigenvalue floor exists

Violations record (graph6, check, lhs, rhs) where the failed comparison was
"lhs within tolerance of rhs".  Results are aggregated order-independently
and sorted, so reports are byte-identical across parallelism degrees apart
from wall_time.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Iterable, Iterator, NamedTuple

from .bounds import (
    algebraic_connectivity_cap,
    independence_upper_bounds,
    laplacian_toughness_bounds,
    mixing_gap,
    mixing_gap_single,
    regular_toughness_bounds,
    semiregular_equality_check,
    toughness_lower_terms,
)
from .extremal import detect_join_form
from .formats import FormatError, parse_graph6
from .graphs import Graph, _component_masks, is_complete, is_connected
from .invariants import independence_number, toughness
from .spectra import spectral_summary

CHECK_NAMES = (
    "tough-lower",
    "lap-product",
    "lap-gap",
    "conn-cap",
    "regular",
    "alpha-bounds",
    "mixing",
    "cut-partition",
    "extremal-iff",
)

# mixing and cut-partition enumerate subset pairs / cut sets; they stay
# opt-in so plain `verify` runs scale past toy sizes
DEFAULT_CHECKS = (
    "tough-lower",
    "lap-product",
    "lap-gap",
    "conn-cap",
    "regular",
    "alpha-bounds",
    "extremal-iff",
)

MIXING_MAX_N = 6


class SweepConfigError(ValueError):
    """Invalid sweep configuration."""


class Violation(NamedTuple):
    graph6: str
    check: str
    lhs: float
    rhs: float


class Interesting(NamedTuple):
    graph6: str
    tag: str


class Diagnostic(NamedTuple):
    lineno: int
    message: str


@dataclass(frozen=True)
class SweepConfig:
    checks: tuple[str, ...] = DEFAULT_CHECKS
    tol: float = 1e-7
    eps_eq: float = 1e-7
    jobs: int = 1
    strict: bool = False
    corpus_id: str = "<corpus>"

    def validate(self) -> None:
        if not self.checks:
            raise SweepConfigError("at least one check must be enabled")
        unknown = [c for c in self.checks if c not in CHECK_NAMES]
        if unknown:
            raise SweepConfigError(f"unknown checks: {', '.join(unknown)}")
        if self.jobs < 1:
            raise SweepConfigError("jobs must be >= 1")


@dataclass(frozen=True)
class SweepReport:
    corpus_id: str
    graphs_checked: int
    violations: tuple[Violation, ...]
    interesting: tuple[Interesting, ...]
    diagnostics: tuple[Diagnostic, ...]
    wall_time: float

    def records_dict(self) -> dict:
        """Deterministic portion of the report (excludes wall_time)."""
        return {
            "corpus_id": self.corpus_id,
            "graphs_checked": self.graphs_checked,
            "violations": [list(v) for v in self.violations],
            "interesting": [list(i) for i in self.interesting],
            "diagnostics": [list(d) for d in self.diagnostics],
        }

    def to_json_dict(self) -> dict:
        out = self.records_dict()
        out["wall_time"] = self.wall_time
        return out

    def summary_line(self) -> str:
        return json.dumps({
            "corpus_id": self.corpus_id,
            "graphs_checked": self.graphs_checked,
            "violations": len(self.violations),
            "interesting": len(self.interesting),
            "diagnostics": len(self.diagnostics),
            "wall_time": round(self.wall_time, 3),
        })


def evaluate_graph(
    g6: str, g: Graph, checks: Iterable[str], tol: float, eps_eq: float
) -> tuple[list[Violation], list[Interesting]]:
    """Run the enabled checks on one graph.

    Checks whose preconditions the graph does not meet (disconnected input
    for toughness checks, edgeless graphs for mixing) are skipped, not
    failed.
    """
    checks = set(checks)
    violations: list[Violation] = []
    interesting: list[Interesting] = []
    n = g.n
    if "mixing" in checks and n > MIXING_MAX_N:
        raise SweepConfigError(
            f"mixing check caps at n = {MIXING_MAX_N} (subset-pair explosion), got n = {n}")

    connected = is_connected(g) if n >= 1 else False
    complete = is_complete(g) if n >= 1 else True
    summary = spectral_summary(g) if n >= 2 else None
    cert = toughness(g) if connected else None
    tau_f = cert.as_float() if cert is not None else None

    bound_checks = connected and not complete and summary is not None
    lap_vals: tuple[float, float] | None = None
    structural: bool | None = None

    def lap_bounds() -> tuple[float, float]:
        nonlocal lap_vals
        if lap_vals is None:
            lap_vals = laplacian_toughness_bounds(g, summary)
        return lap_vals

    def join_structural() -> bool:
        nonlocal structural
        if structural is None:
            witness = detect_join_form(g)
            structural = witness is not None and witness.eigen_condition_ok
        return structural

    if "tough-lower" in checks and bound_checks:
        top = max(toughness_lower_terms(g, summary))
        if top > tau_f + tol:
            violations.append(Violation(g6, "tough-lower", top, tau_f))
        elif abs(tau_f - top) <= eps_eq:
            interesting.append(Interesting(g6, "tough-lower-equality"))

    if "lap-product" in checks and bound_checks:
        value = lap_bounds()[0]
        if value > tau_f + tol:
            violations.append(Violation(g6, "lap-product", value, tau_f))
        elif abs(tau_f - value) <= eps_eq:
            interesting.append(Interesting(g6, "lap-product-equality"))

    if "lap-gap" in checks and bound_checks:
        value = lap_bounds()[1]
        if value > tau_f + tol:
            violations.append(Violation(g6, "lap-gap", value, tau_f))
        elif abs(tau_f - value) <= eps_eq:
            interesting.append(Interesting(g6, "lap-gap-equality"))

    if "conn-cap" in checks and bound_checks:
        cap = algebraic_connectivity_cap(summary, cert.value)
        mu_second = summary.algebraic_connectivity
        if mu_second > cap + tol:
            violations.append(Violation(g6, "conn-cap", mu_second, cap))
        equal = abs(mu_second - cap) <= eps_eq
        if equal != join_structural():
            violations.append(Violation(
                g6, "conn-cap-structure", float(equal), float(join_structural())))
        if equal:
            interesting.append(Interesting(g6, "conn-cap-equality"))

    if "regular" in checks and bound_checks:
        reg = regular_toughness_bounds(g, summary)
        if reg is not None:
            brouwer, strict_bound, alon = reg
            if brouwer > tau_f + tol:
                violations.append(Violation(g6, "regular-brouwer", brouwer, tau_f))
            if tau_f <= strict_bound - tol:
                violations.append(Violation(g6, "regular-brouwer-strict", strict_bound, tau_f))
            if tau_f <= alon - tol:
                violations.append(Violation(g6, "regular-alon", alon, tau_f))

    if "alpha-bounds" in checks and g.m >= 1 and summary is not None:
        alpha_cert = independence_number(g)
        alpha = alpha_cert.alpha
        degree_b, mixing_b, laplacian_b = independence_upper_bounds(g, summary)
        for name, value in (
            ("alpha-degree", degree_b),
            ("alpha-mixing", mixing_b),
            ("alpha-laplacian", laplacian_b),
        ):
            if alpha > value + tol:
                violations.append(Violation(g6, name, float(alpha), value))
        if abs(alpha - laplacian_b) <= eps_eq:
            if semiregular_equality_check(g, alpha_cert.witness, summary):
                interesting.append(Interesting(g6, "alpha-laplacian-equality"))
            else:
                violations.append(Violation(g6, "alpha-semiregular", float(alpha), laplacian_b))

    if "mixing" in checks and g.m >= 1 and summary is not None:
        full = g.full_mask
        for x in range(full + 1):
            lhs, rhs = mixing_gap_single(g, x, summary)
            if lhs > rhs + tol:
                violations.append(Violation(g6, "mixing-single", lhs, rhs))
            for y in range(full + 1):
                lhs, rhs = mixing_gap(g, x, y, summary)
                if lhs > rhs + tol:
                    violations.append(Violation(g6, "mixing-pair", lhs, rhs))

    if "cut-partition" in checks and bound_checks:
        mu1 = summary.laplacian_radius
        mu_second = summary.algebraic_connectivity
        spread = mu1 - mu_second
        cap = spread / (2.0 * mu1) * n
        full = g.full_mask
        for s_mask in range(1, full):
            blocks = _component_masks(g.rows, full & ~s_mask)
            omega = len(blocks)
            if omega < 2:
                continue
            size_s = s_mask.bit_count()
            # unordered groupings of blocks into two nonempty sides
            for pick in range(1, 1 << (omega - 1)):
                x = 0
                y = 0
                for i, b in enumerate(blocks):
                    if pick >> i & 1:
                        x |= b
                    else:
                        y |= b
                size_x, size_y = x.bit_count(), y.bit_count()
                if size_x > size_y:
                    size_x, size_y = size_y, size_x
                floor = 2.0 * mu_second / spread * size_x
                if size_x > cap + tol:
                    violations.append(Violation(g6, "cut-partition-x", float(size_x), cap))
                if size_s < floor - tol:
                    violations.append(Violation(g6, "cut-partition-s", float(size_s), floor))
                if size_x != size_y:
                    # strict grouping: equality in either bound forces equal sides
                    if abs(size_x - cap) <= 1e-9:
                        violations.append(
                            Violation(g6, "cut-partition-x-equality", float(size_x), cap))
                    if abs(size_s - floor) <= 1e-9:
                        violations.append(
                            Violation(g6, "cut-partition-s-equality", float(size_s), floor))

    if "extremal-iff" in checks and bound_checks:
        product, gap = lap_bounds()
        eq_product = abs(tau_f - product) <= eps_eq
        eq_gap = abs(tau_f - gap) <= eps_eq
        if eq_product != join_structural():
            violations.append(Violation(
                g6, "extremal-iff-product", float(eq_product), float(join_structural())))
        if eq_gap != join_structural():
            violations.append(Violation(
                g6, "extremal-iff-gap", float(eq_gap), float(join_structural())))

    return violations, interesting


def _evaluate_chunk(args) -> tuple[int, list[Violation], list[Interesting], list[Diagnostic]]:
    chunk, checks, tol, eps_eq = args
    count = 0
    violations: list[Violation] = []
    interesting: list[Interesting] = []
    diagnostics: list[Diagnostic] = []
    for lineno, line in chunk:
        try:
            g = parse_graph6(line)
        except FormatError as exc:
            diagnostics.append(Diagnostic(lineno, str(exc)))
            continue
        g6 = line.strip()
        v, i = evaluate_graph(g6, g, checks, tol, eps_eq)
        violations += v
        interesting += i
        count += 1
    return count, violations, interesting, diagnostics


def _chunked(lines: Iterable[tuple[int, str]], size: int) -> Iterator[list[tuple[int, str]]]:
    chunk: list[tuple[int, str]] = []
    for item in lines:
        chunk.append(item)
        if len(chunk) >= size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def sweep(config: SweepConfig, lines: Iterable[tuple[int, str]]) -> SweepReport:
    """Evaluate every graph6 record in ``lines`` against the enabled checks.

    ``lines`` yields (line number, text).  Malformed records become
    diagnostics and the sweep continues, unless strict mode is on, in which
    case the first one raises FormatError.  Records are sorted before the
    report is assembled, so the outcome does not depend on worker
    scheduling.
    """
    config.validate()
    start = time.perf_counter()
    count = 0
    violations: list[Violation] = []
    interesting: list[Interesting] = []
    diagnostics: list[Diagnostic] = []

    payload = ((lineno, text) for lineno, text in lines if text.strip())
    if config.jobs == 1:
        results = map(
            _evaluate_chunk,
            ((chunk, config.checks, config.tol, config.eps_eq)
             for chunk in _chunked(payload, 256)),
        )
        for c, v, i, d in results:
            count += c
            violations += v
            interesting += i
            diagnostics += d
            if config.strict and d:
                raise FormatError(f"line {d[0].lineno}: {d[0].message}")
    else:
        ctx = get_context()
        with ctx.Pool(config.jobs) as pool:
            args = ((chunk, config.checks, config.tol, config.eps_eq)
                    for chunk in _chunked(payload, 256))
            for c, v, i, d in pool.imap_unordered(_evaluate_chunk, args):
                count += c
                violations += v
                interesting += i
                diagnostics += d
                if config.strict and d:
                    raise FormatError(f"line {d[0].lineno}: {d[0].message}")

    violations.sort()
    interesting.sort()
    diagnostics.sort()
    return SweepReport(
        corpus_id=config.corpus_id,
        graphs_checked=count,
        violations=tuple(violations),
        interesting=tuple(interesting),
        diagnostics=tuple(diagnostics),
        wall_time=time.perf_counter() - start,
    )
