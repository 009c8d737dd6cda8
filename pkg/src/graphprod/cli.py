"""Command-line front end.

    graphprod <command> [variant] --spec job.yaml [--field gf2|gf3|q]
              [--nmax N] [--smax S] [--machine]

The job file is YAML (JSON also parses) and holds the complex, the vertex
payloads and command arguments; see the README for the schema.  Results go to
standard output; timing goes to standard error so that stdout is byte-for-byte
reproducible.

Exit codes: 0 success, 1 a verify-all check failed, 2 invalid input,
3 truncation overflow, 4 a differential failed to square to zero.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
import time
from fractions import Fraction

import yaml

from . import barcomplex, galg, groupprod, torform
from .complex import FlagComplex, flag_complete
from .errors import ChainComplexError, TruncationError, ValidationError
from .exactmath import Field, parse_field, series_invert
from .homology import reduced_homology

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_TRUNCATION, EXIT_DSQUARED = 0, 1, 2, 3, 4

COMMANDS = (
    "normalize",
    "multiply",
    "invert",
    "project",
    "split",
    "kernel-gens",
    "equal-oracle",
    "length-census",
    "chordal",
    "homology",
    "lex-order",
    "gp-basis",
    "hilbert",
    "tor-closed",
    "tor-oracle",
    "ep-series",
    "min-generators",
    "is-free",
    "check-acyclic",
    "verify-all",
)
VARIANTS = {"tor-closed": ("aprime", "ak"), "tor-oracle": ("aprime", "ak"), "is-free": ("algebra", "group")}


# ---------------------------------------------------------------------------
# parsing job files
# ---------------------------------------------------------------------------


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValidationError(f"{what} must be an integer, got {x!r}")
    return x


def parse_complex(spec) -> FlagComplex:
    if not isinstance(spec, dict):
        raise ValidationError("'complex' must be a map with keys m and edges")
    m = _int(spec.get("m"), "complex.m")
    edges = spec.get("edges", [])
    if not isinstance(edges, list):
        raise ValidationError("complex.edges must be a list of pairs")
    out = []
    for e in edges:
        if isinstance(e, str):
            e = [int(c) for c in re.split(r"[-,\s]+", e.strip()) if c]
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ValidationError(f"edge {e!r} must be a pair")
        out.append((_int(e[0], "edge endpoint"), _int(e[1], "edge endpoint")))
    return flag_complete(m, out)


_GROUP_SHORT = re.compile(r"^\s*Z\s*/\s*(\d+)\s*$", re.I)


def parse_group(spec) -> tuple[groupprod.LocalGroup, list | None]:
    """A local group plus its optional generating subset."""
    gens = None
    if isinstance(spec, str):
        mt = _GROUP_SHORT.match(spec)
        if mt:
            return groupprod.LocalGroup.cyclic(int(mt.group(1))), None
        if spec.strip().upper() == "Z":
            return groupprod.LocalGroup.integers(), None
        raise ValidationError(f"unknown group shorthand {spec!r}")
    if not isinstance(spec, dict):
        raise ValidationError(f"group spec {spec!r} must be a string or a map")
    kind = str(spec.get("kind", "")).lower()
    if kind == "cyclic":
        G = groupprod.LocalGroup.cyclic(_int(spec.get("order"), "cyclic order"))
    elif kind in ("integers", "z", "infinite"):
        G = groupprod.LocalGroup.integers()
    elif kind == "table":
        G = groupprod.LocalGroup.from_table(spec.get("elements", []), spec.get("table", []), spec.get("identity"))
    else:
        raise ValidationError(f"unknown group kind {kind!r}")
    if "generators" in spec:
        gens = [G.parse(x) for x in spec["generators"]]
        if not gens:
            raise ValidationError("generating subset must be nonempty")
    return G, gens


_ALG_SHORT = re.compile(r"^\s*(exterior|trunc_poly|trunc-poly|free)\s*\(([^)]*)\)\s*$", re.I)


def parse_algebra(spec, n_default: int) -> galg.GradedAlgebraSpec:
    if isinstance(spec, str):
        mt = _ALG_SHORT.match(spec)
        if not mt:
            raise ValidationError(f"unknown algebra shorthand {spec!r}")
        params = [int(p) for p in mt.group(2).split(",") if p.strip()]
        return galg.builtin_algebra(mt.group(1), *params, N=n_default)
    if not isinstance(spec, dict):
        raise ValidationError(f"algebra spec {spec!r} must be a string or a map")
    N = _int(spec.get("trunc", n_default), "algebra truncation")
    if "builtin" in spec:
        kind = str(spec["builtin"]).lower()
        params = spec.get("params")
        if params is None:
            params = [spec.get("degree", 1)]
            if kind.replace("-", "_") == "trunc_poly":
                params.append(spec.get("height", 3))
        return galg.builtin_algebra(kind, *[_int(p, "algebra parameter") for p in params], N=N)
    basis = {}
    for d, names in (spec.get("basis") or {}).items():
        basis[_int(int(d) if isinstance(d, str) and d.isdigit() else d, "basis degree")] = list(names)
    prods = {}
    for row in spec.get("products", []):
        if not isinstance(row, (list, tuple)) or len(row) != 3:
            raise ValidationError(f"product entry {row!r} must be [x, y, [[coeff, z], ...]]")
        x, y, terms = row
        t = {}
        for c, z in terms:
            try:
                t[str(z)] = Fraction(c) if not isinstance(c, str) else Fraction(c.strip())
            except (ValueError, ZeroDivisionError):
                raise ValidationError(f"bad coefficient {c!r}") from None
        prods[(str(x), str(y))] = t
    return galg.GradedAlgebraSpec(str(spec.get("name", "A")), N, basis, prods)


def _per_vertex(K: FlagComplex, spec, what: str) -> dict:
    """Expand a payload given once, as a list, or as a map keyed by vertex."""
    if isinstance(spec, list):
        if len(spec) != K.m:
            raise ValidationError(f"{what}: need one entry per vertex ({K.m}), got {len(spec)}")
        return dict(zip(K.vertices, spec))
    if isinstance(spec, dict) and spec and all(str(k).isdigit() for k in spec):
        out = {int(k): v for k, v in spec.items()}
        if set(out) != set(K.vertices):
            raise ValidationError(f"{what}: every vertex 1..{K.m} needs exactly one entry")
        return out
    return {v: spec for v in K.vertices}


class Job:
    """Parsed job: complex, payloads, field, truncation and command arguments."""

    def __init__(self, doc: dict, command: str, variant: str | None, overrides: dict):
        if not isinstance(doc, dict):
            raise ValidationError("job document must be a map")
        self.doc = doc
        self.command = command
        self.variant = variant
        self.K = parse_complex(doc.get("complex"))
        try:
            self.field: Field = parse_field(overrides.get("field") or doc.get("field", "q"))
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
        self.n_max = _int(overrides.get("nmax") if overrides.get("nmax") is not None else doc.get("nmax", 8), "nmax")
        self.s_max = _int(overrides.get("smax") if overrides.get("smax") is not None else doc.get("smax", 4), "smax")
        if self.n_max < 0 or self.s_max < 0:
            raise ValidationError("nmax and smax must be non-negative")
        self.args = doc.get("args") or {}
        self.product = None
        self.gen_subsets = None
        self.algebras = None
        if "groups" in doc:
            gs = _per_vertex(self.K, doc["groups"], "groups")
            groups, subsets = {}, {}
            for v, g in gs.items():
                groups[v], sub = parse_group(g)
                if sub is not None:
                    subsets[v] = sub
            self.product = groupprod.GraphProduct(self.K, groups)
            self.gen_subsets = subsets or None
        if "algebras" in doc:
            al = _per_vertex(self.K, doc["algebras"], "algebras")
            cache: dict = {}
            self.algebras = {}
            for v, a in al.items():
                key = json.dumps(a, sort_keys=True, default=str)
                if key not in cache:
                    cache[key] = parse_algebra(a, max(self.n_max, 1))
                self.algebras[v] = cache[key]

    def need_groups(self) -> groupprod.GraphProduct:
        if self.product is None:
            raise ValidationError(f"command {self.command!r} needs a 'groups' payload")
        return self.product

    def need_algebras(self) -> dict:
        if self.algebras is None:
            raise ValidationError(f"command {self.command!r} needs an 'algebras' payload")
        return self.algebras


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def word_to_tree(w: groupprod.NormalFormWord) -> list:
    G = w.ambient.groups
    return [{"vertex": v, "element": G[v].name(g)} for v, g in w.letters]


def tree_to_letters(P: groupprod.GraphProduct, tree) -> list:
    if not isinstance(tree, list):
        raise ValidationError("a word must be a list of letters")
    out = []
    for let in tree:
        if isinstance(let, dict):
            v, e = let.get("vertex"), let.get("element")
        elif isinstance(let, (list, tuple)) and len(let) == 2:
            v, e = let
        else:
            raise ValidationError(f"letter {let!r} must be {{vertex, element}} or [vertex, element]")
        v = _int(v, "letter vertex")
        if v not in P.groups:
            raise ValidationError(f"vertex {v} out of range")
        out.append((v, P.groups[v].parse(e)))
    return out


def tree_to_word(P: groupprod.GraphProduct, tree) -> groupprod.NormalFormWord:
    return P.normalize(tree_to_letters(P, tree))


def _coeff_str(c) -> str:
    return str(c)


def sum_to_tree(x: galg.SignedMonomialSum) -> list:
    return [
        {"coeff": _coeff_str(c), "monomial": [{"vertex": v, "element": e} for v, e in mono]}
        for mono, c in x.terms
    ]


def tree_to_sum(P: galg.GraphProductAlgebra, tree) -> galg.SignedMonomialSum:
    out = P.zero
    for term in tree:
        mono = [(_int(t["vertex"], "vertex"), str(t["element"])) for t in term["monomial"]]
        out = P.add(out, P.gp_normalize(P.field(term["coeff"]), mono))
    return out


def table_to_tree(T: barcomplex.TorTable) -> dict:
    return {
        "provenance": T.provenance,
        "trusted_range": {"s_max": T.s_max, "n_max": T.n_max},
        "nonzero": [{"s": s, "n": n, "dim": c} for (s, n), c in sorted(T.dims.items()) if c],
    }


def series_to_tree(s) -> list:
    return [str(c) for c in s.coeffs]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _word_arg(job: Job, key: str = "word"):
    P = job.need_groups()
    if key not in job.args:
        raise ValidationError(f"missing argument args.{key}")
    return tree_to_word(P, job.args[key])


def cmd_normalize(job):
    P = job.need_groups()
    w = _word_arg(job)
    return {"word": word_to_tree(w), "length": len(w), "locally_minimal": P.is_locally_minimal(w.letters)}


def cmd_multiply(job):
    P = job.need_groups()
    words = job.args.get("words")
    if words is None:
        words = [job.args.get("word", []), job.args.get("word2", [])]
    out = P.identity
    for t in words:
        out = P.multiply(out, tree_to_word(P, t))
    return {"word": word_to_tree(out), "length": len(out)}


def cmd_invert(job):
    w = _word_arg(job)
    return {"word": word_to_tree(w.ambient.invert(w))}


def cmd_project(job):
    P = job.need_groups()
    w = _word_arg(job)
    if "vertex" in job.args:
        v = _int(job.args["vertex"], "args.vertex")
        return {"vertex": v, "element": P.groups[v].name(P.project(w, v))} if v in P.groups else _bad_vertex(v)
    return {"ab": [P.groups[v].name(x) for v, x in zip(P.K.vertices, P.ab(w))]}


def _bad_vertex(v):
    raise ValidationError(f"vertex {v} out of range")


def cmd_split(job):
    P = job.need_groups()
    w = _word_arg(job)
    s = P.split(w)
    back = P.unsplit(s)
    return {
        "h": word_to_tree(s.h),
        "gammas": [P.groups[v].name(x) for v, x in zip(P.K.vertices, s.gammas)],
        "h_in_kernel": P.in_kernel(s.h),
        "reconstructs": back == w,
    }


def cmd_kernel_gens(job):
    P = job.need_groups()
    terms = P.kernel_generator_terms(job.gen_subsets)
    return {
        "count": len(terms),
        "generators": [
            {"subset": list(t["subset"]), "t": t["t"], "word": word_to_tree(t["word"]), "length": len(t["word"])}
            for t in terms
        ],
        "all_in_kernel": all(P.in_kernel(t["word"]) for t in terms),
    }


def cmd_equal_oracle(job):
    P = job.need_groups()
    u = tree_to_letters(P, job.args.get("word", []))
    v = tree_to_letters(P, job.args.get("word2", []))
    bound = job.args.get("bound")
    eq = P.equal_oracle(u, v, bound)
    same_nf = P.normal_letters(u) == P.normal_letters(v)
    return {"equal": eq, "same_normal_form": same_nf, "agree": eq == same_nf}


def cmd_length_census(job):
    P = job.need_groups()
    c = P.length_census(job.n_max)
    return {"counts": c["counts"], "predicted": c["predicted"], "agree": c["counts"] == c["predicted"]}


def cmd_chordal(job):
    return {"chordal": job.K.is_chordal()}


def cmd_homology(job):
    I = job.args.get("subset")
    KI = job.K if I is None else job.K.full_subcomplex(I)
    h = reduced_homology(KI, job.field)
    return {
        "subset": list(KI.vertices),
        "reduced_betti": {str(d): b for d, b in sorted(h.dims.items())},
        "empty_complex": h.empty,
        "field": job.field.name,
    }


def cmd_lex_order(job):
    return {"simplices": [list(s) for s in job.K.lex_order_simplices()]}


def _gp(job) -> galg.GraphProductAlgebra:
    return galg.GraphProductAlgebra(job.K, job.need_algebras(), job.field)


def cmd_gp_basis(job):
    P = _gp(job)
    out = {"dims": P.basis_counts(job.n_max)}
    if job.args.get("list"):
        d = _int(job.args.get("degree", job.n_max), "args.degree")
        out["degree"] = d
        out["monomials"] = [[{"vertex": v, "element": e} for v, e in m] for m in P.basis_monomials(d)]
    if "monomial" in job.args:
        out["normalized"] = sum_to_tree(tree_to_sum(P, [{"coeff": 1, "monomial": job.args["monomial"]}]))
    return out


def cmd_hilbert(job):
    P = _gp(job)
    return {"coefficients": P.basis_counts(job.n_max)}


def _variant(job, default="aprime"):
    v = (job.variant or job.args.get("variant") or default).lower().replace("-", "").replace("_", "")
    if v not in ("aprime", "ak"):
        raise ValidationError(f"variant must be aprime or ak, got {v!r}")
    return v


def cmd_tor_closed(job):
    algs = job.need_algebras()
    v = _variant(job)
    f = torform.tor_Aprime_closed if v == "aprime" else torform.tor_AK_closed
    return {"variant": v, "table": table_to_tree(f(job.K, algs, job.s_max, job.n_max, job.field))}


def cmd_tor_oracle(job):
    algs = job.need_algebras()
    v = _variant(job)
    T = barcomplex.tor_dims_polyhedral(job.K, algs, job.s_max, job.n_max, job.field, v)
    return {"variant": v, "table": table_to_tree(T)}


def cmd_ep_series(job):
    algs = job.need_algebras()
    ep = torform.ep_series_Aprime(job.K, algs, job.n_max, job.field)
    return {
        "inverse_Aprime": series_to_tree(ep.inverse),
        "Aprime": series_to_tree(ep.series),
        "AK": series_to_tree(torform.ep_series_AK(job.K, algs, job.n_max, job.field)),
    }


def cmd_min_generators(job):
    algs = job.need_algebras()
    gens = torform.min_generators_Aprime(job.K, algs, job.n_max)
    return {
        "counts": torform.generator_counts(gens, job.n_max),
        "generators": [{"subset": list(g.subset), "t": g.t, "degree": g.degree, "bracket": str(g)} for g in gens],
    }


def cmd_is_free(job):
    v = (job.variant or job.args.get("variant") or "algebra").lower()
    if v == "algebra":
        return {"variant": v, "free": torform.is_free_Aprime(job.K, job.field)}
    if v == "group":
        return {"variant": v, "free": torform.is_free_H_groups(job.K)}
    raise ValidationError(f"is-free variant must be algebra or group, got {v!r}")


def cmd_check_acyclic(job):
    r = barcomplex.check_acyclic_full(job.K, job.need_algebras(), job.s_max, job.n_max, job.field)
    return {
        "acyclic": r.ok,
        "homology": [{"s": s, "n": n, "dim": c} for (s, n), c in sorted(r.homology.items())],
        "trusted_range": {"s_max": r.s_max, "n_max": r.n_max},
    }


# ---------------------------------------------------------------------------
# verify-all
# ---------------------------------------------------------------------------


def _verify_complex(job, checks):
    K = job.K
    chord = K.is_chordal()
    h1_free = torform.is_free_Aprime(K, job.field)
    checks.append(("chordal = no H~_1 in full subcomplexes", chord == h1_free, 1))
    n = 0
    ok = True
    for r in range(1, K.m + 1):
        from itertools import combinations

        for I in combinations(K.vertices, r):
            KI = K.full_subcomplex(I)
            h = reduced_homology(KI, job.field)
            chi = sum((-1) ** (len(s) - 1) for s in KI.simplices() if s) - 1
            ok &= h.euler_characteristic() == chi
            n += 1
    checks.append(("Euler characteristic of full subcomplexes", ok, n))
    ok = all(reduced_homology(K.split_star(v)[0], job.field).is_acyclic() for v in K.vertices)
    checks.append(("vertex stars are acyclic", ok, K.m))


def _verify_groups(job, checks):
    P = job.need_groups()
    L = _int(job.args.get("word_length", 4), "args.word_length")
    if P.is_finite_type:
        space = groupprod.WordSpace(P.groups, L)
        r = groupprod.certify_word_problem(P, space)
        checks.append(("normal forms separate rewrite classes", r["mismatches"] == 0, r["words"]))
        c = P.length_census(min(job.n_max, 6))
        checks.append(("length census matches support words", c["counts"] == c["predicted"], len(c["counts"])))
        ball = P.ball(min(job.n_max, 3))
        ok = all(P.unsplit(P.split(g)) == g for g in ball)
        ok &= len({(P.split(g).h, P.split(g).gammas) for g in ball}) == len(ball)
        checks.append(("split reconstructs and is injective", ok, len(ball)))
    gens = P.kernel_generators(job.gen_subsets)
    checks.append(("kernel generators lie in ker(ab)", all(P.in_kernel(g) for g in gens), len(gens)))
    rng = random.Random(0)
    ok = True
    trials = 200
    for _ in range(trials):
        a, b, c = (P.normalize(P.random_word(rng.randint(0, 5), rng)) for _ in range(3))
        ok &= P.multiply(P.multiply(a, b), c) == P.multiply(a, P.multiply(b, c))
        ok &= all(
            P.project(P.multiply(a, b), i) == P.groups[i].mul(P.project(a, i), P.project(b, i)) for i in P.K.vertices
        )
    checks.append(("associativity and projection multiplicativity", ok, trials))


def _verify_algebras(job, checks):
    algs = job.need_algebras()
    K, f, N, S = job.K, job.field, job.n_max, job.s_max
    P = galg.GraphProductAlgebra(K, algs, f)
    census = P.basis_counts(N)
    ep = torform.ep_series_AK(K, algs, N, f)
    checks.append(("Hilbert series: monomial census = Euler-Poincare", ep.as_ints() == census, N + 1))
    for v in ("aprime", "ak"):
        closed = (torform.tor_Aprime_closed if v == "aprime" else torform.tor_AK_closed)(K, algs, S, N, f)
        oracle = barcomplex.tor_dims_polyhedral(K, algs, S, N, f, v)
        checks.append((f"Tor {v}: closed form = bar oracle", closed.same_values(oracle), (S + 1) * (N + 1)))
    r = barcomplex.check_acyclic_full(K, algs, S, N, f)
    checks.append(("full resolution is acyclic", r.ok, sum(r.sizes.values())))
    gens = torform.min_generators_Aprime(K, algs, N)
    t1 = torform.tor_Aprime_closed(K, algs, 1, N, f).row(1)
    checks.append(("generator count = Tor_1", torform.generator_counts(gens, N) == t1, len(gens)))
    d_min = min(A.d_min for A in algs.values())
    s_all = N // d_min
    T = barcomplex.tor_dims_polyhedral(K, algs, s_all, N, f, "ak")
    lhs = series_invert(P.hilbert_series(N))
    checks.append(("1/P = alternating sum of Tor series", lhs == torform.alternating_tor_series(T, N), N + 1))


def cmd_verify_all(job):
    checks: list = []
    _verify_complex(job, checks)
    if job.product is not None:
        _verify_groups(job, checks)
    if job.algebras is not None:
        _verify_algebras(job, checks)
    passed = all(ok for _, ok, _ in checks)
    return {
        "checks": [{"check": name, "passed": bool(ok), "count": n} for name, ok, n in checks],
        "summary": "all checks passed" if passed else "some checks FAILED",
        "passed": passed,
    }


DISPATCH = {
    "normalize": cmd_normalize,
    "multiply": cmd_multiply,
    "invert": cmd_invert,
    "project": cmd_project,
    "split": cmd_split,
    "kernel-gens": cmd_kernel_gens,
    "equal-oracle": cmd_equal_oracle,
    "length-census": cmd_length_census,
    "chordal": cmd_chordal,
    "homology": cmd_homology,
    "lex-order": cmd_lex_order,
    "gp-basis": cmd_gp_basis,
    "hilbert": cmd_hilbert,
    "tor-closed": cmd_tor_closed,
    "tor-oracle": cmd_tor_oracle,
    "ep-series": cmd_ep_series,
    "min-generators": cmd_min_generators,
    "is-free": cmd_is_free,
    "check-acyclic": cmd_check_acyclic,
    "verify-all": cmd_verify_all,
}


def run(doc: dict, command: str, variant: str | None = None, **overrides) -> dict:
    """Run one job and return the report tree (without timing)."""
    if command not in DISPATCH:
        raise ValidationError(f"unknown command {command!r}")
    job = Job(doc, command, variant, overrides)
    result = DISPATCH[command](job)
    report = {
        "command": command,
        "field": job.field.name,
        "nmax": job.n_max,
        "smax": job.s_max,
        "result": result,
    }
    if variant:
        report["variant"] = variant
    return report


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _human(tree, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(tree, dict):
        for k in sorted(tree):
            v = tree[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(tree, list):
        for v in tree:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_human(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(f"{pad}{_inline(tree)}")
    return lines


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    if isinstance(v, dict):
        return len(v) <= 3 and all(not isinstance(x, (dict, list)) for x in v.values())
    return True


def _inline(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_inline(v[k])}" for k in sorted(v)) + "}"
    return str(v)


def render(report: dict, machine: bool) -> str:
    if machine:
        return json.dumps(report, sort_keys=True, indent=2)
    return "\n".join(_human(report))


def _threads() -> int:
    raw = os.environ.get("GRAPHPROD_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValidationError(f"GRAPHPROD_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValidationError("GRAPHPROD_THREADS must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphprod", description="Graph products of groups and graded algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("variant", nargs="?", default=None, help="aprime|ak for tor-*, algebra|group for is-free")
    p.add_argument("--spec", required=True, help="job file (YAML or JSON)")
    p.add_argument("--field", default=None, help="gf2, gf3, gfp or q")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--smax", type=int, default=None)
    p.add_argument("--machine", action="store_true", help="emit JSON")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    t0 = time.perf_counter()
    try:
        _threads()
        if ns.variant is not None and ns.variant not in VARIANTS.get(ns.command, ()):
            raise ValidationError(f"command {ns.command!r} takes no variant {ns.variant!r}")
        try:
            with open(ns.spec, encoding="utf-8") as fh:
                doc = yaml.safe_load(fh)
        except OSError as exc:
            raise ValidationError(f"cannot read {ns.spec}: {exc.strerror}") from None
        except yaml.YAMLError as exc:
            raise ValidationError(f"cannot parse {ns.spec}: {exc}") from None
        report = run(doc, ns.command, ns.variant, field=ns.field, nmax=ns.nmax, smax=ns.smax)
    except ValidationError as exc:
        print(f"graphprod: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except TruncationError as exc:
        print(f"graphprod: truncation overflow: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION
    except ChainComplexError as exc:
        print(f"graphprod: internal error: {exc}", file=sys.stderr)
        return EXIT_DSQUARED
    print(render(report, ns.machine))
    print(f"elapsed: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    if ns.command == "verify-all" and not report["result"]["passed"]:
        return EXIT_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
