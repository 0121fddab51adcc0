"""Command-line surface: system files, generators, runs, reports, benches.

Subcommands:

* rank FILE: coefficient-matrix rank and pivot columns.
* solve-basis FILE: sample a small subsystem with the same variety;
  classification Infeasible means the basis generates the unit ideal and so
  certifies that the whole system has no solution (that is a successful
  outcome, exit 0).
* mingen FILE --gamma N: extract a generating set of size <= gamma from a
  homogeneous system.
* verify FILE --basis I,J,K --mode solve|mingen: re-check a claimed basis.
* gen coloring|random: write example system files.
* bench scaling: CSV of mean primitive calls against system size.

System files are plain text: optional directives ('% field Q', '% field P',
'% vars N'), then one polynomial per line over variables x0, x1, ...;
'#' starts a comment. The default field is the prime field modulo
2147483647. Reports are JSON with a fixed key order; identical input bytes,
flags and seed reproduce identical reports except for wall_time_ms.

Exit codes: 0 success (including Infeasible), 2 parse or configuration
error, 3 when a supplied dimension bound proved too small (DeltaTooSmall).
"""

import argparse
import hashlib
import json
import os
import re
import statistics
import sys
import time
from fractions import Fraction

from .groebner import ideal_member, is_unit_ideal, radical_member
from .linalg import build_coeff_matrix, helly_bounds, rank
from .poly import (DEFAULT_PRIME, FieldSpec, MonomialOrder, NonPrimeModulus,
                   Polynomial, PolySystem)
from .spaces import (FEASIBLE, GENERATING_SET, INFEASIBLE, MingenConfig,
                     NotHomogeneous, SolveConfig, mingen, solve_basis)
from .violator import DeltaTooSmall, Rng


class ParseError(Exception):
    """Syntax error in a system file, with 1-based line and column."""

    def __init__(self, line, col, message):
        super().__init__("line %d, col %d: %s" % (line, col, message))
        self.line = line
        self.col = col
        self.message = message


class FieldDirectiveConflict(Exception):
    """More than one % field directive in a single file."""


class OddN(Exception):
    """The coloring family is defined for even n only."""


class CharTwo(Exception):
    """The coloring system degenerates in characteristic 2."""


class InfeasibleParameters(Exception):
    """gen random parameters violate 1 <= rank <= ambient bound <= m."""


# ---------------------------------------------------------------------------
# System file parsing.

_TOKEN = re.compile(r"(\d+)|([A-Za-z]+)|([%^*+/\-])|(\S)")


def _tokenize(line, line_no):
    toks = []
    for mt in _TOKEN.finditer(line):
        col = mt.start() + 1
        if mt.group(1) is not None:
            toks.append(("INT", int(mt.group(1)), col))
        elif mt.group(2) is not None:
            toks.append(("WORD", mt.group(2), col))
        elif mt.group(3) is not None:
            toks.append(("OP", mt.group(3), col))
        else:
            raise ParseError(line_no, col, "unexpected character %r" % mt.group(4))
    return toks


class _PolyParser:
    """Recursive-descent parser for one polynomial line."""

    def __init__(self, toks, line_no, field, declared_vars):
        self.toks = toks
        self.pos = 0
        self.line = line_no
        self.field = field
        self.declared_vars = declared_vars

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        if t is None:
            raise ParseError(self.line, len(self.toks) and self.toks[-1][2] or 1,
                             "unexpected end of line")
        self.pos += 1
        return t

    def fail(self, message):
        t = self.peek()
        col = t[2] if t else (self.toks[-1][2] if self.toks else 1)
        raise ParseError(self.line, col, message)

    def parse(self):
        """poly := ['-'] term (('+'|'-') term)*; returns {varexp dict: coeff}."""
        terms = []
        sign = 1
        t = self.peek()
        if t and t[:2] == ("OP", "-"):
            self.take()
            sign = -1
        while True:
            coeff, mono = self.term()
            terms.append((sign * coeff, mono))
            t = self.peek()
            if t is None:
                break
            if t[0] == "OP" and t[1] in "+-":
                self.take()
                sign = 1 if t[1] == "+" else -1
            else:
                self.fail("expected '+', '-' or end of line")
        acc = {}
        for coeff, mono in terms:
            key = tuple(sorted(mono.items()))
            acc[key] = acc.get(key, Fraction(0)) + coeff
        return acc

    def term(self):
        t = self.peek()
        if t is None:
            self.fail("expected a term")
        if t[0] == "INT":
            coeff = self.coeff()
            t = self.peek()
            if t and t[:2] == ("OP", "*"):
                self.take()
                return coeff, self.monofactors()
            return coeff, {}
        if t[:2][0] == "WORD" and t[1] == "x":
            return Fraction(1), self.monofactors()
        self.fail("expected a coefficient or a variable")

    def coeff(self):
        kind, num, col = self.take()
        if kind != "INT":
            raise ParseError(self.line, col, "expected an integer")
        t = self.peek()
        if t and t[:2] == ("OP", "/"):
            if self.field.kind != "rationals":
                raise ParseError(self.line, t[2],
                                 "fraction coefficients need '% field Q'")
            self.take()
            kind, den, col = self.take()
            if kind != "INT":
                raise ParseError(self.line, col, "expected a denominator")
            if den == 0:
                raise ParseError(self.line, col, "zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def monofactors(self):
        mono = {}
        while True:
            self.monofactor(mono)
            t = self.peek()
            if t and t[:2] == ("OP", "*"):
                self.take()
                continue
            return mono

    def monofactor(self, mono):
        kind, word, col = self.take()
        if kind != "WORD" or word != "x":
            raise ParseError(self.line, col, "expected a variable like x0")
        kind, idx, icol = self.take()
        if kind != "INT":
            raise ParseError(self.line, icol, "expected a variable index")
        if self.declared_vars is not None and idx >= self.declared_vars:
            raise ParseError(self.line, icol,
                             "variable x%d exceeds declared vars %d"
                             % (idx, self.declared_vars))
        exp = 1
        t = self.peek()
        if t and t[:2] == ("OP", "^"):
            self.take()
            kind, exp, ecol = self.take()
            if kind != "INT":
                raise ParseError(self.line, ecol, "expected an exponent")
        mono[idx] = mono.get(idx, 0) + exp


def parse_system(text, warn=None):
    """Parse system-file text into a PolySystem.

    Zero polynomials (terms that cancel) are stripped; `warn` receives one
    message per dropped line. Raises ParseError, FieldDirectiveConflict or
    NonPrimeModulus.
    """
    if warn is None:
        warn = lambda msg: print(msg, file=sys.stderr)
    field = None
    declared_vars = None
    raw_polys = []  # (line_no, {sorted varexp tuple: Fraction})
    seen_poly = False
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        toks = _tokenize(body, line_no)
        if toks[0][:2] == ("OP", "%"):
            if seen_poly:
                raise ParseError(line_no, toks[0][2],
                                 "directives must precede polynomials")
            if len(toks) < 2 or toks[1][0] != "WORD":
                raise ParseError(line_no, toks[-1][2],
                                 "expected 'field' or 'vars' after '%'")
            word = toks[1][1]
            if word == "field":
                if field is not None:
                    raise FieldDirectiveConflict(
                        "line %d: second %% field directive" % line_no)
                if len(toks) == 3 and toks[2][:2] == ("WORD", "Q"):
                    field = FieldSpec.rationals()
                elif len(toks) == 3 and toks[2][0] == "INT":
                    field = FieldSpec.prime(toks[2][1])
                else:
                    raise ParseError(line_no, toks[-1][2],
                                     "expected 'Q' or a prime after '% field'")
            elif word == "vars":
                if declared_vars is not None:
                    raise ParseError(line_no, toks[1][2],
                                     "duplicate '% vars' directive")
                if len(toks) != 3 or toks[2][0] != "INT" or toks[2][1] < 1:
                    raise ParseError(line_no, toks[-1][2],
                                     "expected a positive integer after '% vars'")
                declared_vars = toks[2][1]
            else:
                raise ParseError(line_no, toks[1][2],
                                 "unknown directive %r" % word)
            continue
        seen_poly = True
        if field is None:
            field = FieldSpec.prime(DEFAULT_PRIME)
        parser = _PolyParser(toks, line_no, field, declared_vars)
        raw_polys.append((line_no, parser.parse()))
    if not raw_polys:
        raise ParseError(len(text.splitlines()) + 1, 1,
                         "expected at least one polynomial")
    if declared_vars is not None:
        nvars = declared_vars
    else:
        nvars = 0
        for _, acc in raw_polys:
            for key in acc:
                for idx, _ in key:
                    nvars = max(nvars, idx + 1)
    polys = []
    for line_no, acc in raw_polys:
        terms = {}
        for key, coeff in acc.items():
            mono = [0] * nvars
            for idx, exp in key:
                mono[idx] = exp
            terms[tuple(mono)] = coeff
        p = Polynomial.from_terms(terms, nvars, field)
        if p.is_zero:
            warn("warning: dropping zero polynomial at line %d" % line_no)
        else:
            polys.append(p)
    return PolySystem(polys, nvars, field)


def serialize_system(system):
    """Canonical system-file text; parse_system inverts it exactly."""
    lines = []
    if system.field.kind == "rationals":
        lines.append("% field Q")
    else:
        lines.append("%% field %d" % system.field.p)
    lines.append("%% vars %d" % system.nvars)
    for p in system:
        lines.append(str(p))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Instance generators.

def gen_coloring(n, field=None):
    """The even-n 2-coloring system: an infeasible benchmark family.

    n quadrics x_i^2 - 1 force each vertex variable to a sign; an edge
    polynomial x_i + x_j forces opposite signs across the edge. Edges join
    every even-odd vertex pair (the complete bipartite graph on the two
    parities, which contains the n-cycle) plus the single same-parity edge
    {0, 2}, which creates an odd cycle and makes the system infeasible.
    Order: quadrics x0..x_{n-1}, then all edges sorted lexicographically.
    """
    if n % 2:
        raise OddN("coloring systems need even n, got %d" % n)
    if n < 4:
        raise ValueError("coloring systems need n >= 4, got %d" % n)
    if field is None:
        field = FieldSpec.prime(DEFAULT_PRIME)
    if field.characteristic == 2:
        raise CharTwo("x_i^2 - 1 degenerates in characteristic 2")
    polys = []
    for i in range(n):
        polys.append(Polynomial.from_terms(
            {_unit_mono(i, n, 2): 1, (0,) * n: -1}, n, field))
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if (i - j) % 2 == 1]
    edges.append((0, 2))
    edges.sort()
    for i, j in edges:
        polys.append(Polynomial.from_terms(
            {_unit_mono(i, n, 1): 1, _unit_mono(j, n, 1): 1}, n, field))
    return PolySystem(polys, n, field)


def _unit_mono(i, nvars, exp):
    return tuple(exp if k == i else 0 for k in range(nvars))


def _monomials(nvars, d, homogeneous):
    """Exponent tuples of degree exactly d (homogeneous) or at most d."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == nvars - 1:
            if homogeneous:
                out.append(tuple(prefix) + (remaining,))
            else:
                out.extend(tuple(prefix) + (e,) for e in range(remaining + 1))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e)

    if nvars == 0:
        return [()]
    rec([], d)
    if homogeneous:
        return out
    return sorted(set(out))


def gen_random(nvars, d, m, target_rank, homogeneous=False, seed=0, field=None):
    """Random system of m polynomials whose coefficient matrix has exactly
    the requested rank.

    Draws target_rank dense random core polynomials of degree <= d (exactly
    d when homogeneous), redrawing until their coefficient vectors are
    independent, then emits m random nonzero linear combinations of the
    cores. The emitted system's rank is asserted before returning.
    """
    if field is None:
        field = FieldSpec.prime(DEFAULT_PRIME)
    bound = helly_bounds(nvars, d, homogeneous)
    if not 1 <= target_rank <= bound:
        raise InfeasibleParameters(
            "rank %d outside [1, %d] for nvars=%d d=%d homogeneous=%r"
            % (target_rank, bound, nvars, d, homogeneous))
    if m < target_rank:
        raise InfeasibleParameters("m=%d below rank %d" % (m, target_rank))
    rng = Rng(seed).child("gen_random")
    monos = _monomials(nvars, d, homogeneous)
    order = MonomialOrder.grevlex(nvars)

    def draw_coeff():
        if field.kind == "prime":
            return rng.below(field.p)
        return Fraction(rng.below(19) - 9)

    while True:
        cores = []
        for _ in range(target_rank):
            while True:
                p = Polynomial.from_terms(
                    {mo: draw_coeff() for mo in monos}, nvars, field)
                if not p.is_zero:
                    break
            cores.append(p)
        if rank(build_coeff_matrix(PolySystem(cores, nvars, field), order)).rank != target_rank:
            continue
        polys = []
        for _ in range(m):
            while True:
                combo = [draw_coeff() for _ in cores]
                if any(combo):
                    break
            p = Polynomial.zero(nvars, field)
            for c, core in zip(combo, cores):
                p = p + core.scale(c)
            polys.append(p)
        system = PolySystem(polys, nvars, field)
        if rank(build_coeff_matrix(system, order)).rank == target_rank:
            return system


# ---------------------------------------------------------------------------
# Reports.

def _file_digest(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def _report(command, digest, system, delta_or_gamma, basis, classification,
            calls, rounds_alg1, rounds_alg2, seed, wall_ms, verified):
    return {
        "command": command,
        "input_digest": digest,
        "field": str(system.field),
        "nvars": system.nvars,
        "m": len(system),
        "delta_or_gamma": delta_or_gamma,
        "basis_indices": list(basis),
        "classification": classification,
        "primitive_calls": {
            "alg1_scans": calls.get("alg1_scans", 0),
            "alg2_scans": calls.get("alg2_scans", 0),
            "bruteforce": calls.get("bruteforce", 0),
            "verify": calls.get("verify", 0),
        },
        "rounds": {"alg1": rounds_alg1, "alg2": rounds_alg2},
        "seed": seed,
        "wall_time_ms": wall_ms,
        "verified": verified,
    }


def _emit(report, args):
    text = json.dumps(report, indent=2) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    if getattr(args, "pretty", False):
        print(_pretty_line(report))
    elif not out:
        sys.stdout.write(text)


def _pretty_line(r):
    head = r["command"] + ":"
    if r["classification"]:
        head += " " + r["classification"] + ";"
    head += " basis %r of %d polys" % (r["basis_indices"], r["m"])
    if r["delta_or_gamma"] is not None:
        head += " (bound %d)" % r["delta_or_gamma"]
    c = r["primitive_calls"]
    total = c["alg1_scans"] + c["alg2_scans"] + c["bruteforce"]
    head += "; %d primitive calls" % total
    if c["verify"]:
        head += " + %d verify checks" % c["verify"]
    if r["verified"] is not None:
        head += "; verified %s" % ("yes" if r["verified"] else "NO")
    return head


# ---------------------------------------------------------------------------
# Subcommand implementations.

def _load(path):
    with open(path) as fh:
        text = fh.read()
    return parse_system(text), _file_digest(path)


def _cmd_rank(args):
    system, digest = _load(args.file)
    order = MonomialOrder(args.order, system.nvars)
    t0 = time.perf_counter()
    res = rank(build_coeff_matrix(system, order))
    wall = int((time.perf_counter() - t0) * 1000)
    report = _report("rank", digest, system, res.rank, res.pivot_columns,
                     None, {}, 0, 0, None, wall, None)
    _emit(report, args)
    return 0


def _cmd_solve_basis(args):
    system, digest = _load(args.file)
    order = MonomialOrder(args.order, system.nvars)
    seed = _resolve_seed(args.seed)
    cfg = SolveConfig(system, delta_override=args.delta, order=order, seed=seed)
    t0 = time.perf_counter()
    outcome = solve_basis(cfg, verify=args.verify)
    wall = int((time.perf_counter() - t0) * 1000)
    report = _report("solve-basis", digest, system, outcome.delta_used,
                     outcome.basis, outcome.classification,
                     outcome.result.calls_by_phase, outcome.result.rounds_alg1,
                     outcome.result.rounds_alg2, seed, wall, outcome.verified)
    _emit(report, args)
    return 0


def _cmd_mingen(args):
    system, digest = _load(args.file)
    seed = _resolve_seed(args.seed)
    cfg = MingenConfig(system, gamma=args.gamma, seed=seed,
                       assume_gb=args.assume_gb,
                       allow_inhomogeneous=args.allow_inhomogeneous)
    if args.allow_inhomogeneous and not system.is_homogeneous:
        print("warning: inhomogeneous input, the size guarantee is only "
              "meaningful for graded systems", file=sys.stderr)
    t0 = time.perf_counter()
    try:
        outcome = mingen(cfg, verify=args.verify)
    except DeltaTooSmall:
        print("error: gamma=%d underestimates the minimal generator count; "
              "retry with --gamma %d" % (args.gamma, 2 * args.gamma),
              file=sys.stderr)
        raise
    wall = int((time.perf_counter() - t0) * 1000)
    report = _report("mingen", digest, system, outcome.delta_used,
                     outcome.basis, outcome.classification,
                     outcome.result.calls_by_phase, outcome.result.rounds_alg1,
                     outcome.result.rounds_alg2, seed, wall, outcome.verified)
    _emit(report, args)
    return 0


def _cmd_verify(args):
    system, digest = _load(args.file)
    order = MonomialOrder.grevlex(system.nvars)
    try:
        basis = sorted({int(x) for x in args.basis.split(",")})
    except ValueError:
        raise ValueError("--basis wants comma-separated indices, got %r"
                         % args.basis)
    for i in basis:
        if not 0 <= i < len(system):
            raise ValueError("basis index %d out of range [0, %d)"
                             % (i, len(system)))
    sub = system.subsystem(basis)
    member = radical_member if args.mode == "solve" else ideal_member
    t0 = time.perf_counter()
    checked = 0
    failures = []
    bset = set(basis)
    for h in range(len(system)):
        if h in bset:
            continue
        checked += 1
        if not member(system[h], sub, order):
            failures.append(h)
    if args.mode == "solve":
        classification = INFEASIBLE if is_unit_ideal(sub, order) else FEASIBLE
    else:
        classification = GENERATING_SET
    wall = int((time.perf_counter() - t0) * 1000)
    calls = {"verify": checked}
    report = _report("verify", digest, system, None, basis, classification,
                     calls, 0, 0, None, wall, not failures)
    _emit(report, args)
    if failures:
        print("verification failed for indices %r" % failures, file=sys.stderr)
    return 0


def _cmd_gen(args):
    if args.family == "coloring":
        system = gen_coloring(args.n)
        header = "# 2-coloring system, n=%d\n" % args.n
    else:
        seed = _resolve_seed(args.seed)
        system = gen_random(args.nvars, args.d, args.m, args.rank,
                            homogeneous=args.homogeneous, seed=seed)
        header = ("# random system, nvars=%d d=%d m=%d rank=%d "
                  "homogeneous=%r seed=%d\n"
                  % (args.nvars, args.d, args.m, args.rank,
                     args.homogeneous, seed))
    body = serialize_system(system).splitlines(True)
    # Directives first, then the comment header, then the polynomials.
    text = "".join(body[:2]) + header + "".join(body[2:])
    if args.o:
        with open(args.o, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_bench(args):
    sizes = sorted({int(x) for x in args.sizes.split(",")})
    rows = []
    for size in sizes:
        calls = []
        delta = None
        m_actual = None
        for s in range(args.seeds):
            if args.family == "random":
                system = gen_random(3, 2, size, 6, homogeneous=False, seed=s)
            else:
                system = gen_coloring(size)
            outcome = solve_basis(SolveConfig(system, seed=s))
            delta = outcome.delta_used
            m_actual = len(system)
            calls.append(outcome.result.primitive_calls)
            print("bench %s size=%d seed=%d calls=%d"
                  % (args.family, size, s, calls[-1]), file=sys.stderr)
        rows.append((args.family, m_actual, delta, args.seeds,
                     statistics.fmean(calls), statistics.pstdev(calls)))
    with open(args.out, "w") as fh:
        fh.write("family,m,delta,seed_count,mean_primitive_calls,stddev\n")
        for family, m, delta, nseeds, mean, sd in rows:
            fh.write("%s,%d,%d,%d,%.3f,%.3f\n" % (family, m, delta, nseeds, mean, sd))
    return 0


def _resolve_seed(value):
    if value == "random":
        seed = int.from_bytes(os.urandom(8), "big")
        print("seed %d" % seed, file=sys.stderr)
        return seed
    try:
        seed = int(value)
    except ValueError:
        raise ValueError("--seed wants an integer or 'random', got %r" % value)
    if not 0 <= seed < 2**64:
        raise ValueError("--seed out of range [0, 2^64)")
    return seed


def _build_parser():
    top = argparse.ArgumentParser(
        prog="hellyspace",
        description="Small equivalent subsystems, infeasibility certificates "
                    "and minimal generating sets for polynomial systems, by "
                    "randomized violator-space sampling over exact fields.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="coefficient-matrix rank and pivots")
    p.add_argument("file")
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_rank)

    p = sub.add_parser("solve-basis",
                       help="small subsystem with the same variety")
    p.add_argument("file")
    p.add_argument("--delta", type=int, default=None,
                   help="override the sampling dimension bound (default: rank)")
    p.add_argument("--seed", default="0")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    p.add_argument("--out", default=None)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_solve_basis)

    p = sub.add_parser("mingen",
                       help="generating set of bounded size (homogeneous input)")
    p.add_argument("file")
    p.add_argument("--gamma", type=int, required=True,
                   help="upper bound on the minimal generator count")
    p.add_argument("--assume-gb", action="store_true",
                   help="input contains a Groebner basis; tighten gamma by "
                        "the leading-term estimate")
    p.add_argument("--allow-inhomogeneous", action="store_true")
    p.add_argument("--seed", default="0")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out", default=None)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_mingen)

    p = sub.add_parser("verify", help="re-check a claimed basis")
    p.add_argument("file")
    p.add_argument("--basis", required=True)
    p.add_argument("--mode", choices=["solve", "mingen"], required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("gen", help="write an example system file")
    gsub = p.add_subparsers(dest="family", required=True)
    g = gsub.add_parser("coloring")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("-o", default=None)
    g.set_defaults(fn=_cmd_gen)
    g = gsub.add_parser("random")
    g.add_argument("--nvars", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--rank", type=int, required=True)
    g.add_argument("--homogeneous", action="store_true")
    g.add_argument("--seed", default="0")
    g.add_argument("-o", default=None)
    g.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("bench", help="scaling benchmarks")
    bsub = p.add_subparsers(dest="bench_kind", required=True)
    b = bsub.add_parser("scaling")
    b.add_argument("--family", choices=["coloring", "random"], required=True)
    b.add_argument("--sizes", required=True, help="comma-separated sizes")
    b.add_argument("--seeds", type=int, required=True)
    b.add_argument("--out", required=True)
    b.set_defaults(fn=_cmd_bench)
    return top


def run_command(argv):
    """Parse argv and run; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return 2 if ex.code not in (0, None) else 0
    try:
        return args.fn(args)
    except DeltaTooSmall as ex:
        print("error: %s" % ex, file=sys.stderr)
        return 3
    except (ParseError, FieldDirectiveConflict, NonPrimeModulus, OddN,
            CharTwo, InfeasibleParameters, NotHomogeneous, ValueError,
            OSError) as ex:
        print("error: %s" % ex, file=sys.stderr)
        return 2


def main(argv=None):
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
