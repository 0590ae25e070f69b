"""R-matrices: the q-side matrix, its contraction to the Jordanian one, the
universal element evaluated in representations, L-operators, and the QYBE /
intertwining / RLL checks."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .expressions import Expr, ParityOp, Representation, generators_for, scalar
from .hopf import coproduct_matrix, coproduct_representation, coproduct_rules
from .jordanian import DeformedTable, tensor_rep
from .labels import E, H, T, THALF, TINV, TINVHALF, Unsupported
from .report import FAIL, PASS, VARIANT_PASS, Check, CheckReport, witness_of
from .scalars import HPoly, HQPoly, PoleAtOne, QRat, q_factorial
from .superlinalg import (GradedMatrix, SuperSpace, graded_flip, graded_kron, nilpotency_index,
                          plain_flip, plain_kron, unipotent_series)

__all__ = [
    "deformed_exponential", "unipotent_inverse", "g_matrix", "rq_fundamental",
    "RQ_VARIANT", "contract", "contracted_rh", "universal_rh_eval", "koszul_dressing",
    "qybe_residual", "qybe_check", "intertwiner_check", "LOperator", "l_operator",
    "frt_check", "rmatrix_suite", "contraction_suite", "PRINTED_RH", "rq_perk_schultz",
    "printed_rh", "l_coproduct_check",
]

# (9,9) of the q-side matrix: the display has -q^-2, which does not solve the
# Yang-Baxter equation; -q^-1 does (and has the same q -> 1 limit)
RQ_VARIANT = "(9,9) = -q^-1 (printed -q^-2)"

_h = HPoly.gen()

# the contracted 9x9 matrix as displayed (1-based (row, col) -> entry)
PRINTED_RH = {
    (1, 1): HPoly.one(), (1, 2): _h, (1, 4): -_h, (1, 5): _h * _h,
    (2, 2): HPoly.one(), (2, 5): _h,
    (3, 3): HPoly.one(),
    (4, 4): HPoly.one(), (4, 5): -_h,
    (5, 5): HPoly.one(), (6, 6): HPoly.one(), (7, 7): HPoly.one(), (8, 8): HPoly.one(),
    (9, 9): -HPoly.one(),
}


# -- q side -------------------------------------------------------------------

def deformed_exponential(x: GradedMatrix, base: str = "q") -> GradedMatrix:
    """sum_n x^n / [n]_b!  with b = q or q^2, truncated at the nilpotency index."""
    b = {"q": QRat.q(), "q2": QRat.q() ** 2, "q^2": QRat.q() ** 2}[base]
    idx = nilpotency_index(x)
    one = x._one()
    out = GradedMatrix.identity(x.cols, one)
    power = GradedMatrix.identity(x.cols, one)
    for k in range(1, idx):
        power = power @ x
        out = out + power.scale(QRat.one() / q_factorial(k, b))
    return out.with_parity(0)


def unipotent_inverse(m: GradedMatrix) -> GradedMatrix:
    """(1 + x)^-1 = sum (-x)^k for nilpotent x."""
    one = m._one()
    x = m - GradedMatrix.identity(m.cols, one)
    idx = nilpotency_index(x)
    out = GradedMatrix.identity(m.cols, one)
    power = GradedMatrix.identity(m.cols, one)
    for _ in range(1, idx):
        power = power @ (-x)
        out = out + power
    return out.with_parity(0)


def g_matrix(n: int = 2) -> GradedMatrix:
    """G = E_q(h e_1N / (q - 1)) in the fundamental of the q-side algebra."""
    space = SuperSpace.fundamental(n)
    coeff = HQPoly([QRat.zero(), QRat.one() / (QRat.q() - 1)])
    x = GradedMatrix(space, {(0, n - 1): coeff}, 0)
    return deformed_exponential(x, "q")


def rq_perk_schultz(n: int) -> GradedMatrix:
    """Standard gl(N|1) R_q on fund (x) fund (plain embedding).

    q on even diagonal pairs, -q^-1 on the odd one, 1 on mixed pairs and
    q - q^-1 on e_ij (x) e_ji for i < j.  For N = 2 this is the displayed
    matrix with the corrected (9,9) entry; used as the oracle for N = 3.
    """
    space = SuperSpace.fundamental(n)
    d = space.dim
    q = QRat.q()
    qi = QRat.one() / q
    entries = {}
    for i in range(d):
        for j in range(d):
            k = i * d + j
            if i != j:
                entries[(k, k)] = QRat.one()
            else:
                entries[(k, k)] = -qi if space.parity[i] else q
            if i < j:
                entries[(k, j * d + i)] = q - qi
    return GradedMatrix(space.power(2), entries, 0)


def rq_fundamental(n: int = 2, variant: bool = False) -> GradedMatrix:
    """The 9x9 q-side R-matrix on fund (x) fund, entries in Q(q)."""
    if n != 2:
        raise Unsupported("the q-side R-matrix is displayed only for N = 2")
    space = SuperSpace.fundamental(2).power(2)
    q = QRat.q()
    qi = QRat.one() / q
    diag = [q, 1, 1, 1, q, 1, 1, 1, -(qi if variant else qi * qi)]
    entries = {(i, i): QRat.coerce(v) for i, v in enumerate(diag)}
    for r, c in ((2, 4), (3, 7), (6, 8)):
        entries[(r - 1, c - 1)] = q - qi
    return GradedMatrix(space, entries, 0)


def contract(rq: GradedMatrix, g: GradedMatrix) -> GradedMatrix:
    """lim_{q->1} (G^-1 (x) G^-1) R_q (G (x) G), h kept symbolic.

    G is even, so graded and plain Kronecker products agree.
    """
    lift = rq.map(lambda v: HQPoly([v]))
    gi = unipotent_inverse(g)
    conj = plain_kron(gi, gi) @ lift @ plain_kron(g, g)
    out = {}
    for (i, j), v in conj.entries.items():
        try:
            lim = v.limit_q1()
        except PoleAtOne:
            raise PoleAtOne(f"entry ({i + 1},{j + 1}) has a pole at q=1: {v}") from None
        if lim:
            out[(i, j)] = lim
    return GradedMatrix(rq.space, out, 0)


def contracted_rh(variant: bool = False, n: int = 2) -> GradedMatrix:
    if n == 2:
        return contract(rq_fundamental(2, variant), g_matrix(2))
    return contract(rq_perk_schultz(n), g_matrix(n))


def printed_rh() -> GradedMatrix:
    space = SuperSpace.fundamental(2).power(2)
    return GradedMatrix(space, {(r - 1, c - 1): v for (r, c), v in PRINTED_RH.items()}, 0)


# -- h side -----------------------------------------------------------------

def universal_rh_eval(dt: Representation, n: Optional[int] = None) -> GradedMatrix:
    """exp(-h X (x) T H_1N) exp(h T H_1N (x) X) on V (x) V, X = h^-1 ln T."""
    n = n if n is not None else dt.n
    t = dt.matrix(T)
    x = unipotent_series(t, "log").div_h(1).with_parity(0)
    th = (t @ dt.matrix(H(1, n))).with_parity(0)
    a = graded_kron(x, th).scale(-_h)
    b = graded_kron(th, x).scale(_h)
    return unipotent_series(a, "exp") @ unipotent_series(b, "exp")


def koszul_dressing(space: SuperSpace, one=None) -> GradedMatrix:
    """diag((-1)^{p_i p_k}) on V (x) V."""
    one = HPoly.one() if one is None else one
    vv = space.tensor(space)
    d = space.dim
    entries = {}
    for i in range(d):
        for k in range(d):
            sign = -1 if space.parity[i] and space.parity[k] else 1
            entries[(i * d + k, i * d + k)] = one * sign
    return GradedMatrix(vv, entries, 0)


def _factor_space(r: GradedMatrix) -> SuperSpace:
    dim = round(r.dim ** 0.5)
    par = r.space.parity
    # V (x) V with V's parity recovered from the (i, 0) block
    return SuperSpace(tuple(par[i * dim] for i in range(dim)))


def qybe_residual(r: GradedMatrix, graded: bool = False):
    """(R12 R13 R23, R23 R13 R12) on V (x) V (x) V."""
    v = _factor_space(r)
    one = r._one()
    i = GradedMatrix.identity(v, one)
    kron = graded_kron if graded else plain_kron
    flip = (graded_flip if graded else plain_flip)(v, v, one)
    r12 = kron(r, i)
    r23 = kron(i, r)
    p23 = kron(i, flip)
    r13 = p23 @ r12 @ p23
    return r12 @ r13 @ r23, r23 @ r13 @ r12


def qybe_check(r: GradedMatrix, check_id: str = "qybe", graded: bool = False) -> Check:
    lhs, rhs = qybe_residual(r, graded)
    w = witness_of(lhs, rhs)
    return Check(check_id, PASS if w is None else FAIL, None, w)


def _delta_op(m: GradedMatrix, v: SuperSpace) -> GradedMatrix:
    f = graded_flip(v, v)
    return f @ m @ f


def intertwiner_check(dt: DeformedTable, rmats: Optional[Dict[str, GradedMatrix]] = None) -> CheckReport:
    """R Delta(x) = Delta^op(x) R for every generator, over a grid of candidate R's.

    Which candidate should intertwine which coproduct is not fixed a priori,
    so every combination is tried; those that hold for all generators become
    passing checks and the rest are listed in the notes.
    """
    n = dt.n
    report = CheckReport("intertwiner", n, dt.name)
    if rmats is None:
        dress = koszul_dressing(dt.space)
        univ = universal_rh_eval(dt)
        rmats = {"universal": univ, "universal*dressing": dress @ univ}
        if dt.name == "fund":
            rh = contracted_rh(variant=True, n=n)
            rmats.update({"contracted": rh, "contracted*dressing": dress @ rh})
    rules = coproduct_rules(n)
    deltas = {lab: coproduct_matrix(lab, dt, rules) for lab in rules if lab in dt}
    held = 0
    for name in sorted(rmats):
        r = rmats[name]
        bad = []
        for lab, d in deltas.items():
            if witness_of(r @ d, _delta_op(d, dt.space) @ r) is not None:
                bad.append(str(lab))
        if bad:
            report.notes.append(f"{name}: fails for {len(bad)}/{len(deltas)} generators "
                                f"(first: {bad[0]})")
        else:
            held += 1
            report.add(Check(f"intertwine:{name}", PASS))
            report.notes.append(f"{name}: intertwines Delta and Delta^op for all generators")
    if not held:
        report.add(Check("intertwine:any", FAIL, note="no candidate R intertwines Delta"))
    return report


# -- L-operators ------------------------------------------------------------

class LOperator:
    """Upper-triangular aux x aux matrix with entries in the deformed algebra."""

    def __init__(self, n: int, entries: Dict[Tuple[int, int], Expr], name: str = "L"):
        self.n = n
        self.entries = entries  # 1-based (row, col) -> expression
        self.aux = SuperSpace.fundamental(n)
        self.name = name
        if any(e.parity for e in entries.values()):
            raise ValueError("L-operator entries must be even")

    @property
    def dim(self) -> int:
        return self.aux.dim

    def __getitem__(self, key) -> Expr:
        return self.entries.get(key, scalar(0))

    def with_entry(self, key, expr, name) -> "LOperator":
        ent = dict(self.entries)
        ent[key] = expr
        return LOperator(self.n, ent, name)


def l_operator(n: int, diagonal33: str = "T") -> LOperator:
    """The L-operators of the (fund (x) arbitrary) contraction.

    N=2: diag(T, T^-1, (-1)^F) with (1,2) = -h H_1 + (h/2)(T - T^-1).
    N=3: the 4x4 form; its (1,3) entry -(h/2)(T + T^-1) h_13 equals -h H_13.
    ``diagonal33`` picks T (as displayed) or T^-1 at (3,3) for N=3.
    """
    g = generators_for(n)
    t, ti = g(T), g(TINV)
    half_h = HPoly.monomial(1, Fraction(1, 2))
    if n == 2:
        ent = {
            (1, 1): t,
            (1, 2): -_h * g(H(1, 2)) + half_h * (t - ti),
            (2, 2): ti,
            (3, 3): ParityOp(),
        }
        return LOperator(2, ent, "L")
    if n == 3:
        d33 = {"T": t, "T^-1": ti}[diagonal33]
        ent = {
            (1, 1): t,
            (1, 2): (2 * _h) * (g(TINVHALF) * g(E(2, 3))),
            (1, 3): -_h * g(H(1, 3)) + half_h * (t - ti),
            (2, 2): scalar(1),
            (2, 3): (-2 * _h) * (g(THALF) * g(E(1, 2))),
            (3, 3): d33,
            (4, 4): ParityOp(),
        }
        return LOperator(3, ent, f"L[(3,3)={diagonal33}]")
    raise Unsupported("L-operators are displayed only for N = 2, 3")


def _unit(space: SuperSpace, a: int, b: int) -> GradedMatrix:
    return GradedMatrix(space, {(a, b): HPoly.one()}, None)


def l_full(l: LOperator, rep: Representation, slot: int, naux: int = 2) -> GradedMatrix:
    """L placed on aux slot ``slot`` (0-based) of aux^{naux} (x) V, plain embedding."""
    aux = l.aux
    i_aux = GradedMatrix.identity(aux)
    out = None
    for (a, b), expr in l.entries.items():
        m = rep.eval(expr)
        if m.is_zero():
            continue
        op = None
        for s in range(naux):
            f = _unit(aux, a - 1, b - 1) if s == slot else i_aux
            op = f if op is None else plain_kron(op, f)
        term = plain_kron(op, m)
        out = term if out is None else out + term
    return out


def frt_check(r: GradedMatrix, l: LOperator, rep: Representation, check_id: str = "rll") -> Check:
    """R12 L1 L2 = L2 L1 R12 on aux (x) aux (x) V."""
    l1 = l_full(l, rep, 0)
    l2 = l_full(l, rep, 1)
    r12 = plain_kron(r, GradedMatrix.identity(rep.space))
    w = witness_of(r12 @ l1 @ l2, l2 @ l1 @ r12)
    return Check(check_id, PASS if w is None else FAIL, None, w)


def l_coproduct_check(l: LOperator, dt: DeformedTable) -> List[Check]:
    """Delta(L_ab) against the matrix coproduct sum_c L_ac (x) L_cb, both orders."""
    delta = coproduct_representation(dt)
    out = []
    d = l.dim
    for a in range(1, d + 1):
        for b in range(a, d + 1):
            want = delta.eval(l[(a, b)])
            fwd = bwd = None
            for c in range(1, d + 1):
                x, y = dt.eval(l[(a, c)]), dt.eval(l[(c, b)])
                f = graded_kron(x, y)
                g = graded_kron(y, x)
                fwd = f if fwd is None else fwd + f
                bwd = g if bwd is None else bwd + g
            if witness_of(want, fwd) is None:
                out.append(Check(f"coproduct:{l.name}:L{a}{b}", PASS))
            elif witness_of(want, bwd) is None:
                out.append(Check(f"coproduct:{l.name}:L{a}{b}", VARIANT_PASS,
                                 "opposite matrix coproduct sum_c L_cb (x) L_ac"))
            else:
                out.append(Check(f"coproduct:{l.name}:L{a}{b}", FAIL, None,
                                 witness_of(want, fwd)))
    return out


# -- suites -----------------------------------------------------------------

def contraction_suite() -> CheckReport:
    """The contraction of the q-side matrix reproduces the displayed h-matrix."""
    report = CheckReport("contraction", 2, "fund2")
    report.notes.append("the q-side display is labelled R_h but has q-entries; read as R_q")
    got = contracted_rh()
    want = printed_rh()
    for i in range(9):
        for j in range(9):
            a = got.entries.get((i, j), HPoly.zero())
            b = want.entries.get((i, j), HPoly.zero())
            ok = a == b
            report.add(Check(f"entry({i + 1},{j + 1})", PASS if ok else FAIL, None,
                             None if ok else witness_of(got, want)))
    report.compare("limit of (9,9)-variant", contracted_rh(variant=True), want)
    return report


def rmatrix_suite(n: int, rep: str = "fund") -> CheckReport:
    """QYBE, universal-R evaluation, intertwining and RLL checks."""
    report = CheckReport("rmatrix", n, rep)
    dt = tensor_rep(n, rep)
    univ = universal_rh_eval(dt)
    dress = koszul_dressing(dt.space)
    if n == 2 and rep == "fund":
        # q side
        c = qybe_check(rq_fundamental(2), "qybe:R_q")
        if not c.passed:
            w = c.witness
            report.notes.append(f"R_q as displayed fails plain QYBE at ({w.row},{w.col})"
                                if w else "R_q as displayed fails plain QYBE")
            v = qybe_check(rq_fundamental(2, variant=True), "qybe:R_q")
            if v.passed:
                c = Check("qybe:R_q", VARIANT_PASS, RQ_VARIANT)
        report.add(c)
        for variant in (False, True):
            tag = "R_q(variant)" if variant else "R_q"
            g = qybe_check(rq_fundamental(2, variant), graded=True)
            report.notes.append(f"graded-embedding QYBE for {tag}: {g.status}")
        rh = contracted_rh()
        report.add(qybe_check(rh, "qybe:R_h(contracted)"))
        report.notes.append("graded-embedding QYBE for contracted R_h: "
                            + qybe_check(rh, graded=True).status)
        x = dt.classical
        e12 = x.matrix(E(1, 2)).eval_h0()
        h1 = x.matrix(H(1, 2)).eval_h0()
        one = GradedMatrix.identity(dt.space)
        closed = (graded_kron(one, one) + (graded_kron(h1, e12) - graded_kron(e12, h1)).scale(_h)
                  + graded_kron(e12, e12).scale(_h * _h))
        report.compare("universal:closed-form", univ, closed)
        report.compare("universal:dressing=contracted", dress @ univ, rh)
        report.add(frt_check(rh, l_operator(2), dt, "rll:L(N=2)"))
        report.checks.extend(l_coproduct_check(l_operator(2), dt))
    report.add(qybe_check(univ, "qybe:universal"))
    report.add(qybe_check(dress @ univ, "qybe:universal*dressing"))
    report.compare("universal:h=0", univ.eval_h0(), GradedMatrix.identity(univ.space))
    if rep == "fund":
        rhn = contracted_rh(variant=True, n=n)
        if n != 2:
            report.add(qybe_check(rhn, "qybe:R_h(contracted)"))
        report.compare("contracted:h=0", rhn.eval_h0(), koszul_dressing(dt.space).eval_h0())
    if n == 3 and rep == "fund":
        report.add(_frt_n3(dt, rhn))
        u = frt_check(dress @ univ, l_operator(3, "T^-1"), dt)
        report.notes.append("RLL of L(N=3) against the dressed universal R: " + u.status
                            + " (that R only involves e13, h13; the two differ by a twist)")
    report.extend(intertwiner_check(dt))
    return report


def _frt_n3(dt: DeformedTable, r: GradedMatrix) -> Check:
    """Both (3,3) readings of the N=3 L-operator; pass if either holds.

    r is the contraction of the gl(3|1) R_q, the matrix the L-operator is read from.
    """
    printed = frt_check(r, l_operator(3, "T"), dt, "rll:L(N=3)")
    if printed.passed:
        return printed
    alt = frt_check(r, l_operator(3, "T^-1"), dt, "rll:L(N=3)")
    if alt.passed:
        return Check("rll:L(N=3)", VARIANT_PASS, "(3,3) = T^-1 (printed T)")
    return printed
