"""q-commuting polynomial arithmetic in normal form.

The algebra has n generators x_1..x_n subject to x_i x_j = q_ij x_j x_i,
with a fixed power relation per generator: omega_i is x_i^(l_i) by default,
or (commutative rings only) any monic univariate polynomial in x_i of
degree l_i.  Normal form writes every element on the ordered monomial
basis x_1^a1 ... x_n^an; the finite quotient by (omega_1..omega_n) has the
truncated monomials {x^a : a_i < l_i} as a basis, of size prod l_i.

Every polynomial is a dict from exponent tuple to a nonzero scalar; the
zero polynomial is the empty dict.  Ring is passed explicitly to every
operation that needs the commutation table.
"""

from __future__ import annotations

import itertools


class QPoly:
    """Sparse normal-form polynomial: {exponent tuple: nonzero scalar}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Max total degree, or -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def constant_term(self, field):
        n = len(next(iter(self.terms))) if self.terms else 0
        return self.terms.get((0,) * n, field.zero())

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            mono = "*".join("x%d^%d" % (i + 1, k) for i, k in enumerate(e) if k)
            bits.append("%s%s" % (self.terms[e], "*" + mono if mono else ""))
        return " + ".join(bits)


class Ring:
    """n q-commuting variables over an exact field, with power relations.

    q must satisfy q_ii = 1 and q_ij q_ji = 1.  omegas, when given, must be
    monic univariate polynomials (omega_i in x_i of degree l_i); a non-pure
    power is only allowed when the ring is commutative.
    """

    def __init__(self, n, field, q=None, l=None, omegas=None):
        self.n = n
        self.field = field
        one = field.one()
        if q is None:
            q = [[one] * n for _ in range(n)]
        self.q = q
        for i in range(n):
            if not field.is_one(q[i][i]):
                raise ValueError("q_ii must be 1")
            for j in range(n):
                if field.is_zero(q[i][j]):
                    raise ValueError("q entries must be nonzero")
                if not field.is_one(field.mul(q[i][j], q[j][i])):
                    raise ValueError("q_ij * q_ji must be 1")
        self.commutative = all(field.is_one(q[i][j]) for i in range(n) for j in range(n))
        if l is None:
            if omegas is None:
                raise ValueError("need l or omegas")
            l = [p.degree() for p in omegas]
        self.l = tuple(l)
        if any(li < 1 for li in self.l):
            raise ValueError("all exponents l_i must be >= 1")
        # tails[i]: coefficients {k: c} with x_i^(l_i) = -tail in the quotient
        self.tails = []
        if omegas is None:
            self.tails = [{} for _ in range(n)]
        else:
            for i, om in enumerate(omegas):
                tail = {}
                for e, c in om.terms.items():
                    if any(e[j] != 0 for j in range(n) if j != i):
                        raise ValueError("omega_%d must be univariate in x_%d" % (i + 1, i + 1))
                    if e[i] == self.l[i]:
                        if not field.is_one(c):
                            raise ValueError("omega_%d must be monic" % (i + 1,))
                    elif e[i] > self.l[i]:
                        raise ValueError("omega_%d degree exceeds l_%d" % (i + 1, i + 1))
                    else:
                        tail[e[i]] = c
                if tail and not self.commutative:
                    raise ValueError("non-monomial omegas need a commutative ring")
                self.tails.append(tail)
        self._pbw = None
        self._pbw_index = None

    def omega_poly(self, i):
        """omega_i as a QPoly: x_i^(l_i) plus the stored tail."""
        e = [0] * self.n
        e[i] = self.l[i]
        terms = {tuple(e): self.field.one()}
        for k, c in self.tails[i].items():
            ek = [0] * self.n
            ek[i] = k
            terms[tuple(ek)] = c
        return QPoly(terms)

    def pbw_basis(self):
        """Truncated monomial basis of the quotient, lexicographic order."""
        if self._pbw is None:
            self._pbw = sorted(itertools.product(*[range(li) for li in self.l]))
            self._pbw_index = {e: i for i, e in enumerate(self._pbw)}
        return self._pbw

    def pbw_index(self):
        self.pbw_basis()
        return self._pbw_index

    def quotient_dim(self):
        d = 1
        for li in self.l:
            d *= li
        return d

    def to_json(self):
        f = self.field
        out = {"n": self.n,
               "field": ({"kind": "rationals"} if f.p is None else {"kind": "fp", "p": f.p}),
               "q": [[f.show(c) for c in row] for row in self.q],
               "l": list(self.l)}
        if any(self.tails):
            out["omegas"] = [qp_to_json(self, self.omega_poly(i)) for i in range(self.n)]
        return out

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.n == other.n and self.field == other.field
                and self.q == other.q and self.l == other.l and self.tails == other.tails)

    def __hash__(self):
        return hash((self.n, self.field, self.l))


def commutative_ring(n, field, l=None, omegas=None):
    return Ring(n, field, q=None, l=l, omegas=omegas)


def quantum_ring(n, field, qval, l):
    """Ring with q_ij = qval for i < j (and inverses below the diagonal)."""
    qinv = field.inv(qval)
    one = field.one()
    q = [[one] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i < j:
                q[i][j] = qval
            elif i > j:
                q[i][j] = qinv
    return Ring(n, field, q=q, l=l)


# polynomial constructors

def qp_zero():
    return QPoly()

def qp_one(ring):
    return QPoly({(0,) * ring.n: ring.field.one()})

def qp_const(ring, c):
    return QPoly({(0,) * ring.n: c}) if not ring.field.is_zero(c) else QPoly()

def qp_monomial(ring, exps, c):
    if ring.field.is_zero(c):
        return QPoly()
    return QPoly({tuple(exps): c})

def qp_var(ring, i, power=1):
    e = [0] * ring.n
    e[i] = power
    return QPoly({tuple(e): ring.field.one()})


# arithmetic

def qp_add(ring, f, g):
    fld = ring.field
    out = dict(f.terms)
    for e, c in g.terms.items():
        s = fld.add(out.get(e, fld.zero()), c)
        if fld.is_zero(s):
            out.pop(e, None)
        else:
            out[e] = s
    return QPoly(out)

def qp_neg(ring, f):
    fld = ring.field
    return QPoly({e: fld.neg(c) for e, c in f.terms.items()})

def qp_sub(ring, f, g):
    return qp_add(ring, f, qp_neg(ring, g))

def qp_scale(ring, c, f):
    fld = ring.field
    if fld.is_zero(c):
        return QPoly()
    return QPoly({e: fld.mul(c, v) for e, v in f.terms.items()})


def monomial_swap_scalar(ring, ea, eb):
    """Scalar picked up normalizing x^ea * x^eb: prod over i>j of q_ij^(ea_i eb_j)."""
    fld = ring.field
    s = fld.one()
    for i in range(ring.n):
        ai = ea[i]
        if ai == 0:
            continue
        for j in range(i):
            bj = eb[j]
            if bj:
                s = fld.mul(s, fld.pow(ring.q[i][j], ai * bj))
    return s


def qp_mul(ring, f, g):
    """Normal-form product; x^a x^b = (prod_{i>j} q_ij^(a_i b_j)) x^(a+b)."""
    fld = ring.field
    out = {}
    commutative = ring.commutative
    for ea, ca in f.terms.items():
        for eb, cb in g.terms.items():
            c = fld.mul(ca, cb)
            if not commutative:
                c = fld.mul(c, monomial_swap_scalar(ring, ea, eb))
            e = tuple(a + b for a, b in zip(ea, eb))
            s = fld.add(out.get(e, fld.zero()), c)
            if fld.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
    return QPoly(out)


def qp_pow(ring, f, k):
    out = qp_one(ring)
    for _ in range(k):
        out = qp_mul(ring, out, f)
    return out


class DiagonalAut:
    """Variable-scaling automorphism: x_j -> c_j x_j."""

    __slots__ = ("c",)

    def __init__(self, c):
        self.c = list(c)

    def is_identity(self, field):
        return all(field.is_one(cj) for cj in self.c)

    def compose(self, other, field):
        return DiagonalAut([field.mul(a, b) for a, b in zip(self.c, other.c)])

    def inverse(self, field):
        return DiagonalAut([field.inv(a) for a in self.c])

    def __repr__(self):
        return "DiagonalAut(%r)" % (self.c,)


def qp_apply_aut(ring, aut, f):
    """Apply a diagonal automorphism: x^a scales by prod c_j^(a_j)."""
    fld = ring.field
    out = {}
    for e, coeff in f.terms.items():
        s = coeff
        for j, a in enumerate(e):
            if a:
                s = fld.mul(s, fld.pow(aut.c[j], a))
        out[e] = s
    return QPoly(out)


def identity_aut(ring):
    return DiagonalAut([ring.field.one()] * ring.n)


class TypeData:
    """The automorphisms sigma_i and scalars xi_ij attached to the power
    relations: sigma_i(x_j) = q_ij^(l_i) x_j and xi_ij = q_ij^(l_i l_j)."""

    def __init__(self, sigmas, xis):
        self.sigmas = sigmas          # list of DiagonalAut
        self.xis = xis                # {(i, j): scalar} for i < j

    def xi(self, field, i, j):
        if i == j:
            return field.one()
        if i < j:
            return self.xis[(i, j)]
        return field.inv(self.xis[(j, i)])


def canonical_type(ring):
    fld = ring.field
    sigmas = [DiagonalAut([fld.pow(ring.q[i][j], ring.l[i]) for j in range(ring.n)])
              for i in range(ring.n)]
    xis = {(i, j): fld.pow(ring.q[i][j], ring.l[i] * ring.l[j])
           for i in range(ring.n) for j in range(i + 1, ring.n)}
    return TypeData(sigmas, xis)


def random_qpoly(ring, rng, max_deg=3, terms=3):
    fld = ring.field
    out = QPoly()
    for _ in range(terms):
        e = [0] * ring.n
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(ring.n)] += 1
        out = qp_add(ring, out, qp_monomial(ring, e, fld.random(rng)))
    return out


def check_type_axioms(ring, tdata, rng=None, samples=5):
    """Verify the interaction laws between the power relations and their
    automorphisms, on generators and on random elements.

    Checked identities, for all i (and i < j):
      omega_i * a == sigma_i(a) * omega_i        (normality)
      sigma_i(omega_i) == omega_i
      sigma_i(omega_j) == xi_ij * omega_j
      sigma_j(omega_i) == xi_ij^-1 * omega_i
      sigma_i(sigma_j(a)) == xi_ij sigma_j(sigma_i(a)) xi_ij^-1

    Returns a report dict; the first violated identity is named.
    """
    fld = ring.field
    failures = []

    def check(label, lhs, rhs):
        if lhs != rhs:
            failures.append(label)
        return not failures

    probes = [qp_var(ring, j) for j in range(ring.n)]
    if rng is not None:
        probes += [random_qpoly(ring, rng) for _ in range(samples)]

    for i in range(ring.n):
        om = ring.omega_poly(i)
        sig = tdata.sigmas[i]
        for a in probes:
            if not check("T1: omega_%d normality" % (i + 1),
                         qp_mul(ring, om, a),
                         qp_mul(ring, qp_apply_aut(ring, sig, a), om)):
                break
        check("T1: sigma_%d fixes omega_%d" % (i + 1, i + 1),
              qp_apply_aut(ring, sig, om), om)
    for i in range(ring.n):
        for j in range(i + 1, ring.n):
            xi = tdata.xi(fld, i, j)
            check("T2: sigma_%d(omega_%d)" % (i + 1, j + 1),
                  qp_apply_aut(ring, tdata.sigmas[i], ring.omega_poly(j)),
                  qp_scale(ring, xi, ring.omega_poly(j)))
            check("T2: sigma_%d(omega_%d)" % (j + 1, i + 1),
                  qp_apply_aut(ring, tdata.sigmas[j], ring.omega_poly(i)),
                  qp_scale(ring, fld.inv(xi), ring.omega_poly(i)))
            for a in probes:
                lhs = qp_apply_aut(ring, tdata.sigmas[i], qp_apply_aut(ring, tdata.sigmas[j], a))
                rhs = qp_apply_aut(ring, tdata.sigmas[j], qp_apply_aut(ring, tdata.sigmas[i], a))
                # xi is a central scalar, so conjugation by it is trivial
                if not check("compat: sigma_%d sigma_%d" % (i + 1, j + 1), lhs, rhs):
                    break
    return {"ok": not failures, "failures": failures}


def quotient_normal_form(ring, f):
    """Reduce modulo (omega_1..omega_n) onto the truncated monomial basis.

    For pure-power omegas this drops every term with some a_i >= l_i; with
    a univariate tail (commutative rings) x_i^(l_i) is rewritten as -tail
    and the reduction is iterated.
    """
    fld = ring.field
    out = {}
    stack = list(f.terms.items())
    while stack:
        e, c = stack.pop()
        for i in range(ring.n):
            if e[i] >= ring.l[i]:
                tail = ring.tails[i]
                for k, tk in tail.items():
                    e2 = list(e)
                    e2[i] = e[i] - ring.l[i] + k
                    stack.append((tuple(e2), fld.mul(c, fld.neg(tk))))
                break
        else:
            s = fld.add(out.get(e, fld.zero()), c)
            if fld.is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
    return QPoly(out)


# serialization

def qp_to_json(ring, f):
    fld = ring.field
    return [{"c": fld.show(f.terms[e]), "e": list(e)} for e in sorted(f.terms)]


def qp_from_json(ring, data):
    out = QPoly()
    for term in data:
        out = qp_add(ring, out, qp_monomial(ring, term["e"], ring.field.parse(str(term["c"]))))
    return out
