"""Command-line surface: verify / tcok / example / analyze.

Exit codes: 0 success, 1 semantic failure (a check did not hold),
2 input error (unreadable or malformed file).  All file formats are JSON;
matrices may be declared column-oriented, which is accepted for
commutative rings only and transposed on ingestion.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cube import (Cube, CubeMorphism, UnsupportedConfiguration, all_vertices,
                   homotopy_solve, mf0_membership, projective_test,
                   theta_cube, verify_cube)
from .hmf import check_hmf_conditions, extract_hmf, hmf_module_dim
from .homology import check_exactness_truncated, module_invariants, tcok, total_complex
from .polymat import PolyMatrix, pm_from_json, pm_to_json
from .qring import (Ring, canonical_type, check_type_axioms, commutative_ring,
                    qp_add, qp_from_json, qp_monomial, qp_mul, qp_sub, qp_var,
                    quantum_ring, QPoly)
from .scalars import Field


class ParseError(Exception):
    pass


# ---------- file ingestion ----------

def field_from_json(data):
    kind = data.get("kind")
    if kind in ("rationals", "q"):
        return Field()
    if kind in ("fp", "prime_field"):
        return Field(int(data["p"]))
    raise ParseError("unknown field kind %r" % (kind,))


def ring_from_json(data):
    try:
        field = field_from_json(data["field"])
        n = int(data["n"])
        q = [[field.parse(str(c)) for c in row] for row in data["q"]]
        l = [int(x) for x in data["l"]]
        ring = Ring(n, field, q=q, l=l)
        if "omegas" in data:
            omegas = [qp_from_json(ring, om) for om in data["omegas"]]
            ring = Ring(n, field, q=q, l=l, omegas=omegas)
        return ring
    except ParseError:
        raise
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError("bad ring block: %s" % exc)


CUBE_KEYS = {"ring", "dim", "ranks", "edges", "orientation"}


def cube_from_json(data, orient_override=None):
    unknown = set(data) - CUBE_KEYS
    if unknown:
        raise ParseError("unknown cube fields: %s" % ", ".join(sorted(unknown)))
    try:
        ring = ring_from_json(data["ring"])
        dim = int(data["dim"])
        if dim != ring.n:
            raise ParseError("cube dim %d != ring n %d" % (dim, ring.n))
        orientation = orient_override or data.get("orientation", "row")
        ranks = {}
        for bits, r in data["ranks"].items():
            if len(bits) != dim or any(ch not in "01" for ch in bits):
                raise ParseError("bad vertex key %r" % (bits,))
            ranks[tuple(int(ch) for ch in bits)] = int(r)
        edges = {}
        for key, mat in data["edges"].items():
            if "@" not in key or not key.startswith("d"):
                raise ParseError("bad edge key %r" % (key,))
            dpart, bits = key.split("@")
            pos = int(dpart[1:]) - 1
            v = tuple(int(ch) for ch in bits)
            edges[(pos, v)] = pm_from_json(ring, mat, default_orientation=orientation)
        tdata = canonical_type(ring)
        return Cube(ring, tdata, tuple(range(dim)), ranks, edges)
    except ParseError:
        raise
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError("bad cube file: %s" % exc)


def cube_to_json(X, orientation="row"):
    ring = X.ring
    return {"ring": ring.to_json(), "dim": X.dim, "orientation": orientation,
            "ranks": {"".join(map(str, v)): X.ranks[v] for v in X.vertices()},
            "edges": {"d%d@%s" % (p + 1, "".join(map(str, v))):
                      pm_to_json(ring, M, orientation=orientation)
                      for (p, v), M in sorted(X.edges.items())}}


def morphism_from_json(data, orient_override=None):
    try:
        src = cube_from_json(data["source"], orient_override)
        tgt = cube_from_json(data["target"], orient_override)
        orientation = orient_override or data.get("orientation", "row")
        comps = {}
        for bits, mat in data["components"].items():
            v = tuple(int(ch) for ch in bits)
            comps[v] = pm_from_json(src.ring, mat, default_orientation=orientation)
        return CubeMorphism(src, tgt, comps)
    except ParseError:
        raise
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError("bad morphism file: %s" % exc)


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError("cannot read %s: %s" % (path, exc))


# ---------- example generator ----------

def divided_difference(ring, coeffs):
    """(f(x2) - f(x1)) / (x2 - x1) by exact division; f given by its
    one-variable coefficient list, constant first."""
    fld = ring.field
    num = QPoly()
    for k, c in enumerate(coeffs):
        ck = fld.parse(str(c))
        if fld.is_zero(ck):
            continue
        num = qp_sub(ring, num, qp_monomial(ring, (k, 0), ck))
        num = qp_sub(ring, num, qp_monomial(ring, (0, k), fld.neg(ck)))
    den = qp_sub(ring, qp_var(ring, 1), qp_var(ring, 0))
    quo = QPoly()
    rem = num
    while not rem.is_zero():
        lead = max(rem.terms)   # lex with x1 heaviest; den leads with -x1
        if lead[0] == 0:
            raise ValueError("division leaves a remainder")
        qc = fld.neg(rem.terms[lead])
        qterm = qp_monomial(ring, (lead[0] - 1, lead[1]), qc)
        quo = qp_add(ring, quo, qterm)
        rem = qp_sub(ring, rem, qp_mul(ring, qterm, den))
    return quo


def univariate_poly(ring, var, coeffs):
    fld = ring.field
    out = QPoly()
    for k, c in enumerate(coeffs):
        ck = fld.parse(str(c))
        if not fld.is_zero(ck):
            e = [0] * ring.n
            e[var] = k
            out = qp_sub(ring, out, qp_monomial(ring, e, fld.neg(ck)))
    return out


def square_example_cube(field, coeffs, variant="displayed"):
    """The rank-2 two-variable square built from one-variable f: vertices
    all free of rank 2, direction i carrying f(x_i).

    "displayed" uses the divided difference D = (f(x2)-f(x1))/(x2-x1) in
    the off-diagonal entries; "corrected" swaps the roles of D and x1-x2
    (the two give non-isomorphic total cokernels; see the homology notes).
    """
    deg = len(coeffs) - 1
    if deg < 1:
        raise ParseError("f must have degree >= 1")
    scratch = commutative_ring(2, field, l=[deg, deg])
    omegas = [univariate_poly(scratch, 0, coeffs), univariate_poly(scratch, 1, coeffs)]
    ring = commutative_ring(2, field, omegas=omegas)
    fx = univariate_poly(ring, 0, coeffs)
    fy = univariate_poly(ring, 1, coeffs)
    delta = divided_difference(ring, coeffs)
    xmy = qp_sub(ring, qp_var(ring, 0), qp_var(ring, 1))
    if variant == "corrected":
        delta, xmy = xmy, delta
    ymx = qp_sub(ring, QPoly(), xmy)
    neg_delta = qp_sub(ring, QPoly(), delta)
    one = qp_monomial(ring, (0, 0), field.one())
    zero = QPoly()

    # column-oriented entries, exactly as displayed
    mats = {
        "d1@00": [[one, zero], [xmy, fx]],
        "d1@10": [[fx, zero], [ymx, one]],
        "d1@01": [[fx, neg_delta], [zero, one]],
        "d1@11": [[one, delta], [zero, fx]],
        "d2@00": [[one, delta], [xmy, fx]],
        "d2@01": [[fx, neg_delta], [ymx, one]],
        "d2@10": [[fy, zero], [zero, one]],
        "d2@11": [[one, zero], [zero, fy]],
    }
    ranks = {v: 2 for v in all_vertices(2)}
    edges = {}
    for key, rows in mats.items():
        dpart, bits = key.split("@")
        M = PolyMatrix.from_entries(rows).transpose()   # into row convention
        edges[(int(dpart[1:]) - 1, tuple(int(ch) for ch in bits))] = M
    return Cube(ring, canonical_type(ring), (0, 1), ranks, edges)


def hypersurface_cube(field, l, split):
    """1-dimensional factorization of x^l into (x^split, x^(l-split))."""
    ring = commutative_ring(1, field, l=[l])
    a = PolyMatrix.from_entries([[qp_var(ring, 0, split)]])
    b = PolyMatrix.from_entries([[qp_var(ring, 0, l - split)]])
    ranks = {(0,): 1, (1,): 1}
    return Cube(ring, canonical_type(ring), (0,),
                ranks, {(0, (0,)): a, (0, (1,)): b})


def cmd_example(args, out=None):
    out = out if out is not None else sys.stdout
    field = Field(args.p) if args.p else Field()
    if args.name == "hypersurface":
        l = args.l[0] if args.l else 2
        X = hypersurface_cube(field, l, args.split)
        json.dump(cube_to_json(X), out, indent=1)
    elif args.name == "ci2":
        coeffs = [c.strip() for c in (args.f or "0,0,1").split(",")]
        X = square_example_cube(field, coeffs, variant=args.variant)
        data = cube_to_json(X, orientation="column")
        json.dump(data, out, indent=1)
    elif args.name == "quantum2":
        if not args.p:
            raise ParseError("quantum2 needs --p")
        qval = field.parse(str(args.qval if args.qval is not None else 5))
        l = args.l or [2, 2]
        if len(l) != 2:
            raise ParseError("quantum2 needs two exponents")
        ring = quantum_ring(2, field, qval, l)
        beta = tuple(int(ch) for ch in (args.beta or "11"))
        X = theta_cube(ring, canonical_type(ring), beta, args.rank)
        json.dump(cube_to_json(X), out, indent=1)
    elif args.name == "theta":
        l = args.l or [2, 2]
        n = len(l)
        if args.qval is not None and args.p:
            ring = quantum_ring(n, field, field.parse(str(args.qval)), l)
        else:
            ring = commutative_ring(n, field, l=l)
        beta = tuple(int(ch) for ch in (args.beta or "1" * n))
        if len(beta) != n:
            raise ParseError("profile length must match l")
        X = theta_cube(ring, canonical_type(ring), beta, args.rank)
        json.dump(cube_to_json(X), out, indent=1)
    else:
        raise ParseError("unknown example %r" % (args.name,))
    out.write("\n")
    return 0


# ---------- verify / tcok / analyze ----------

def _emit(report, as_json, out):
    if as_json:
        json.dump(report, out, indent=1, sort_keys=True)
        out.write("\n")
    else:
        for line in report["lines"]:
            out.write(line + "\n")


def cmd_verify(args, out=None):
    out = out if out is not None else sys.stdout
    X = cube_from_json(load_json(args.path), args.orient)
    axioms = check_type_axioms(X.ring, X.tdata)
    rep = verify_cube(X)
    ok = axioms["ok"] and rep.ok
    lines = ["type axioms: %s" % ("ok" if axioms["ok"] else "FAIL " + axioms["failures"][0]),
             "cube checks: %d run, %s" % (rep.checks,
                                          "all pass" if rep.ok else
                                          "FAIL at " + rep.failures[0][0])]
    _emit({"ok": ok, "type_axioms": axioms["ok"],
           "checks": rep.checks,
           "failures": [label for label, _ in rep.failures],
           "lines": lines}, args.json, out)
    return 0 if ok else 1


def cmd_tcok(args, out=None):
    out = out if out is not None else sys.stdout
    X = cube_from_json(load_json(args.path), args.orient)
    rep = verify_cube(X)
    if not rep.ok:
        _emit({"ok": False, "lines": ["cube does not verify: " + rep.failures[0][0]]},
              args.json, out)
        return 1
    M = tcok(X)
    lines = ["dim %d" % M.dim]
    report = {"ok": True, "dim": M.dim, "lines": lines}
    if args.invariants:
        inv = module_invariants(M)
        report["invariants"] = {k: inv[k] for k in ("dim", "ann1_dim", "hilbert")}
        lines.append("degree-1 annihilator dimension %d" % inv["ann1_dim"])
        lines.append("hilbert %r" % (inv["hilbert"],))
    if args.compare:
        Y = cube_from_json(load_json(args.compare), args.orient)
        inv = module_invariants(M, tcok(Y))
        report["compare"] = inv["compare"]
        lines.append("comparison: %s" % inv["compare"])
    if args.exactness is not None:
        C = total_complex(X)
        ex = check_exactness_truncated(C, args.exactness)
        report["exactness"] = {"graded": ex["graded"], "all_exact": ex["all_exact"]}
        lines.append("truncated exactness to degree %d: %s"
                     % (args.exactness,
                        "skipped (%s)" % ex.get("reason") if not ex["graded"]
                        else ("exact" if ex["all_exact"] else "INEXACT")))
    _emit(report, args.json, out)
    return 0


def cmd_analyze(args, out=None):
    out = out if out is not None else sys.stdout
    X = cube_from_json(load_json(args.path), args.orient)
    rep = verify_cube(X)
    if not rep.ok:
        _emit({"ok": False, "lines": ["cube does not verify: " + rep.failures[0][0]]},
              args.json, out)
        return 1
    lines = []
    report = {"ok": True, "lines": lines}
    status = 0
    if args.projective:
        verdict, witness = projective_test(X)
        report["projective"] = verdict
        lines.append("projective: %s (splits %d, reduced ranks %r)"
                     % (verdict, len(witness["splits"]), witness["reduced_ranks"]))
    if args.mf0:
        m = mf0_membership(X)
        report["mf0"] = m["member"]
        lines.append("distinguished-subcategory member: %s" % (m["member"],))
        for f in m["facets"]:
            lines.append("  facet d%d: %s" % (f["direction"], f["verdict"]))
    if args.homotopy:
        f = morphism_from_json(load_json(args.homotopy), args.orient)
        try:
            cert = homotopy_solve(f, args.degree)
        except UnsupportedConfiguration as exc:
            _emit({"ok": False, "lines": ["unsupported configuration: %s" % exc]},
                  args.json, out)
            return 1
        bound = args.degree if args.degree is not None else "default"
        if cert is None:
            report["homotopy"] = None
            lines.append("no certificate up to degree %s" % bound)
        else:
            report["homotopy"] = {"degree_bound": cert.degree_bound}
            lines.append("certificate found (degree bound %d)" % cert.degree_bound)
    if args.hmf:
        try:
            Z = extract_hmf(X)
        except UnsupportedConfiguration as exc:
            _emit({"ok": False, "lines": ["unsupported configuration: %s" % exc]},
                  args.json, out)
            return 1
        chk = check_hmf_conditions(Z)
        report["hmf"] = {"z0_blocks": Z.z0_blocks, "z1": Z.z1_rank,
                         "conditions_ok": chk["ok"],
                         "failures": ["%s stage %d" % f for f in chk["failures"]],
                         "module_dim": hmf_module_dim(Z)}
        lines.append("layered data: blocks %r over top rank %d" % (Z.z0_blocks, Z.z1_rank))
        lines.append("layered conditions: %s"
                     % ("pass" if chk["ok"] else
                        "FAIL " + ", ".join("%s stage %d" % f for f in chk["failures"])))
        lines.append("module dim %d (total cokernel %d)"
                     % (report["hmf"]["module_dim"], tcok(X).dim))
        if not chk["ok"]:
            status = 1
    _emit(report, args.json, out)
    return status


def build_parser():
    ap = argparse.ArgumentParser(prog="factoria",
                                 description="exact factorization-cube toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check type axioms and cube conditions")
    p.add_argument("path")
    p.add_argument("--orient", choices=["row", "column"])
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tcok", help="total cokernel of a cube")
    p.add_argument("path")
    p.add_argument("--orient", choices=["row", "column"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--invariants", action="store_true")
    p.add_argument("--compare", metavar="PATH2")
    p.add_argument("--exactness", type=int, metavar="D")
    p.set_defaults(func=cmd_tcok)

    p = sub.add_parser("example", help="emit a built-in example cube")
    p.add_argument("name", choices=["hypersurface", "ci2", "quantum2", "theta"])
    p.add_argument("--p", type=int, help="prime modulus (rationals when absent)")
    p.add_argument("--f", help="one-variable coefficients, constant first (ci2)")
    p.add_argument("--variant", choices=["displayed", "corrected"], default="displayed")
    p.add_argument("--l", type=int, nargs="*", help="exponents")
    p.add_argument("--split", type=int, default=1, help="hypersurface split")
    p.add_argument("--qval", type=int, help="commutation scalar")
    p.add_argument("--beta", help="profile bits, e.g. 11")
    p.add_argument("--rank", type=int, default=1)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("analyze", help="projectivity, membership, homotopy, layered data")
    p.add_argument("path")
    p.add_argument("--orient", choices=["row", "column"])
    p.add_argument("--json", action="store_true")
    p.add_argument("--projective", action="store_true")
    p.add_argument("--mf0", action="store_true")
    p.add_argument("--homotopy", metavar="MORPHISM_FILE")
    p.add_argument("--degree", type=int)
    p.add_argument("--hmf", action="store_true")
    p.set_defaults(func=cmd_analyze)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
