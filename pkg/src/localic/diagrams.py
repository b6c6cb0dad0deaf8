"""Commuting squares of localic maps and the preservation theorems.

A :class:`DenseSquare` is the basic diagram: a top map g between two
locales, a bottom map f, and injective dense verticals pinning the top
row inside the bottom row.  A :class:`SquareChain` factors the square
through a middle layer; a :class:`Triangle` composes two squares that
share their middle vertical.

Each check follows the hypothesis-gated discipline: the hypotheses of a
statement are evaluated on the instance, and only when they hold is the
conclusion asserted; otherwise the verdict is "hypotheses-not-met".
"""

from __future__ import annotations

from typing import Callable, Optional

from .errors import InvalidSquare
from .frame import FiniteFrame
from .locmap import LocalicMap, compose
from .remoteness import RemoteContext, whole_context
from .result import CheckResult, PASS, HYPOTHESES_NOT_MET, FAIL
from .sublocale import (
    Sublocale, booleanization, enumerate_sublocales, join_is_whole,
    supplement, whole_subl as _whole,
)


class DenseSquare:
    """g : S -> T over f : L -> M, glued by injective dense verticals."""

    __slots__ = ("s_frame", "t_frame", "l_frame", "m_frame",
                 "g", "f", "alpha", "omega",
                 "alpha_image", "omega_image", "_ctx_l", "_ctx_m", "name")

    def __init__(self, g: LocalicMap, f: LocalicMap,
                 alpha: LocalicMap, omega: LocalicMap,
                 name: Optional[str] = None):
        self.s_frame = g.source
        self.t_frame = g.target
        self.l_frame = f.source
        self.m_frame = f.target
        if alpha.source is not self.s_frame or alpha.target is not self.l_frame:
            raise InvalidSquare("alpha must run from the top-left frame down")
        if omega.source is not self.t_frame or omega.target is not self.m_frame:
            raise InvalidSquare("omega must run from the top-right frame down")
        for v, lab in ((alpha, "alpha"), (omega, "omega")):
            if not v.is_injective():
                raise InvalidSquare(f"{lab} is not injective")
        self.g, self.f, self.alpha, self.omega = g, f, alpha, omega
        self.alpha_image = alpha.image_subl(_whole(self.s_frame))
        self.omega_image = omega.image_subl(_whole(self.t_frame))
        for img, lab in ((self.alpha_image, "alpha"),
                         (self.omega_image, "omega")):
            if not img.is_dense():
                raise InvalidSquare(f"image of {lab} is not dense")
        for x in range(self.s_frame.n):
            if f(alpha(x)) != omega(g(x)):
                raise InvalidSquare(
                    f"square does not commute at element {x}")
        self._ctx_l = None
        self._ctx_m = None
        self.name = name

    def ctx_l(self) -> RemoteContext:
        """The context (L, alpha[S]) on the source side."""
        if self._ctx_l is None:
            self._ctx_l = RemoteContext(self.l_frame, self.alpha_image)
        return self._ctx_l

    def ctx_m(self) -> RemoteContext:
        if self._ctx_m is None:
            self._ctx_m = RemoteContext(self.m_frame, self.omega_image)
        return self._ctx_m

    def adjoints_commute(self) -> bool:
        """f* after omega equals alpha after g* (elementwise on T)."""
        return all(
            self.f.adjoint(self.omega(t)) == self.alpha(self.g.adjoint(t))
            for t in range(self.t_frame.n))

    def subject(self) -> str:
        if self.name:
            return self.name
        sig = ".".join(str(v) for v in self.f.table)
        return (f"{self.l_frame.name or 'L'}->{self.m_frame.name or 'M'} "
                f"f={sig}; "
                f"S={{{','.join(sorted(self.alpha_image.labels()))}}} "
                f"T={{{','.join(sorted(self.omega_image.labels()))}}}")

    def __repr__(self) -> str:
        return f"DenseSquare({self.subject()})"


class SquareChain:
    """Diagram with a middle layer R -> U between the square's rows.

    Holds maps i: S->R, k: T->U, phi: R->U, theta: R->L, sigma: U->M with
    alpha = theta o i, omega = sigma o k, f o theta = sigma o phi and
    phi o i = k o g; every downward arrow is injective and dense.
    """

    __slots__ = ("outer", "i", "k", "phi", "theta", "sigma",
                 "r_frame", "u_frame", "i_image", "k_image",
                 "_ctx_r", "_ctx_u", "name")

    def __init__(self, outer: DenseSquare, i: LocalicMap, k: LocalicMap,
                 phi: LocalicMap, theta: LocalicMap, sigma: LocalicMap,
                 name: Optional[str] = None):
        self.outer = outer
        self.i, self.k, self.phi = i, k, phi
        self.theta, self.sigma = theta, sigma
        self.r_frame = phi.source
        self.u_frame = phi.target
        if i.source is not outer.s_frame or i.target is not self.r_frame:
            raise InvalidSquare("i must run S -> R")
        if k.source is not outer.t_frame or k.target is not self.u_frame:
            raise InvalidSquare("k must run T -> U")
        if theta.source is not self.r_frame or theta.target is not outer.l_frame:
            raise InvalidSquare("theta must run R -> L")
        if sigma.source is not self.u_frame or sigma.target is not outer.m_frame:
            raise InvalidSquare("sigma must run U -> M")
        for v, lab in ((i, "i"), (k, "k"), (theta, "theta"),
                       (sigma, "sigma")):
            if not v.is_injective():
                raise InvalidSquare(f"{lab} is not injective")
            if not v.image_subl(_whole(v.source)).is_dense():
                raise InvalidSquare(f"image of {lab} is not dense")
        for x in range(outer.s_frame.n):
            if theta(i(x)) != outer.alpha(x):
                raise InvalidSquare(f"alpha != theta o i at element {x}")
            if phi(i(x)) != k(outer.g(x)):
                raise InvalidSquare(f"phi o i != k o g at element {x}")
        for x in range(outer.t_frame.n):
            if sigma(k(x)) != outer.omega(x):
                raise InvalidSquare(f"omega != sigma o k at element {x}")
        for x in range(self.r_frame.n):
            if outer.f(theta(x)) != sigma(phi(x)):
                raise InvalidSquare(f"f o theta != sigma o phi at element {x}")
        self.i_image = i.image_subl(_whole(outer.s_frame))
        self.k_image = k.image_subl(_whole(outer.t_frame))
        self._ctx_r = None
        self._ctx_u = None
        self.name = name

    def ctx_r(self) -> RemoteContext:
        """The middle-layer context (R, i[S])."""
        if self._ctx_r is None:
            self._ctx_r = RemoteContext(self.r_frame, self.i_image)
        return self._ctx_r

    def ctx_u(self) -> RemoteContext:
        if self._ctx_u is None:
            self._ctx_u = RemoteContext(self.u_frame, self.k_image)
        return self._ctx_u

    def inner_square(self) -> DenseSquare:
        """The square g : S -> T over phi : R -> U."""
        return DenseSquare(self.outer.g, self.phi, self.i, self.k)

    def subject(self) -> str:
        if self.name:
            return self.name
        return (f"{self.outer.subject()} via "
                f"R={{{','.join(sorted(self.theta.image_subl(_whole(self.r_frame)).labels()))}}} "
                f"U={{{','.join(sorted(self.sigma.image_subl(_whole(self.u_frame)).labels()))}}}")

    def __repr__(self) -> str:
        return f"SquareChain({self.subject()})"


class Triangle:
    """Two horizontally composable squares plus their composite.

    sq1 carries a map between the first and second column, sq2 between
    the second and third; they share the middle vertical.  sq3 is the
    composite square whose bottom map is sq2.f after sq1.f.
    """

    __slots__ = ("sq1", "sq2", "sq3", "name")

    def __init__(self, sq1: DenseSquare, sq2: DenseSquare,
                 name: Optional[str] = None):
        if sq1.t_frame is not sq2.s_frame or sq1.m_frame is not sq2.l_frame:
            raise InvalidSquare("squares do not share the middle column")
        if sq1.omega.table != sq2.alpha.table:
            raise InvalidSquare("squares disagree on the middle vertical")
        self.sq1 = sq1
        self.sq2 = sq2
        self.sq3 = DenseSquare(compose(sq2.g, sq1.g), compose(sq2.f, sq1.f),
                               sq1.alpha, sq2.omega)
        self.name = name

    def subject(self) -> str:
        if self.name:
            return self.name
        return f"{self.sq1.subject()} | {self.sq2.subject()}"

    def __repr__(self) -> str:
        return f"Triangle({self.subject()})"


# ---------------------------------------------------------------------------
# Square-level predicates
# ---------------------------------------------------------------------------

def takes_remainder(sq: DenseSquare) -> bool:
    """f[L minus alpha[S]] sits inside M minus omega[T]."""
    rem_l = supplement(sq.l_frame, sq.alpha_image)
    rem_m = supplement(sq.m_frame, sq.omega_image)
    return sq.f.image_subl(rem_l) <= rem_m


def is_f_remote_preserving(sq: DenseSquare) -> bool:
    ctx_m = sq.ctx_m()
    return all(ctx_m.is_remote_from(sq.f.image_subl(a))
               for a in sq.ctx_l().remote_set())


def is_f_star_remote_preserving(sq: DenseSquare) -> bool:
    ctx_m = sq.ctx_m()
    return all(ctx_m.is_star_remote_from(sq.f.image_subl(a))
               for a in sq.ctx_l().star_remote_set())


def is_complemented_subl(frame: FiniteFrame, s: Sublocale) -> bool:
    """Whether s has a complement in the coframe S(frame)."""
    top_bit = 1 << frame.top
    return any(t.mask & s.mask == top_bit
               and join_is_whole(frame, t.mask, s.mask)
               for t in enumerate_sublocales(frame))


def _verdict(check_id: str, subject: str, hyp: bool,
             failure: Optional[str]) -> CheckResult:
    if not hyp:
        return CheckResult(check_id, subject, HYPOTHESES_NOT_MET)
    if failure is None:
        return CheckResult(check_id, subject, PASS)
    return CheckResult(check_id, subject, FAIL, failure)


# ---------------------------------------------------------------------------
# Preservation and reflection over one square
# ---------------------------------------------------------------------------

def check_beta(sq: DenseSquare) -> CheckResult:
    """g* skeletal and commuting adjoints force f to preserve remoteness."""
    hyp = sq.g.adjoint_is_skeletal() and sq.adjoints_commute()
    fail = None
    if hyp:
        ctx_m = sq.ctx_m()
        for a in sq.ctx_l().remote_set():
            if not ctx_m.is_remote_from(sq.f.image_subl(a)):
                fail = f"A={sorted(a.labels())}"
                break
        if fail is None and sq.f.is_weakly_closed_adjoint():
            rmt_m = sq.ctx_m().rmt_elements()
            for x in sq.ctx_l().rmt_elements():
                if sq.f(x) not in rmt_m:
                    fail = f"x={sq.l_frame.labels[x]} (Rmt part)"
                    break
    return _verdict("beta", sq.subject(), hyp, fail)


def check_betastar(sq: DenseSquare) -> CheckResult:
    hyp = (sq.g.adjoint_is_skeletal() and sq.adjoints_commute()
           and takes_remainder(sq))
    fail = None
    if hyp:
        ctx_m = sq.ctx_m()
        for a in sq.ctx_l().star_remote_set():
            if not ctx_m.is_star_remote_from(sq.f.image_subl(a)):
                fail = f"A={sorted(a.labels())}"
                break
        if fail is None and sq.f.is_weakly_closed_adjoint():
            star_m = sq.ctx_m().star_rmt_elements()
            for x in sq.ctx_l().star_rmt_elements():
                if sq.f(x) not in star_m:
                    fail = f"x={sq.l_frame.labels[x]} (*Rmt part)"
                    break
    return _verdict("betastar", sq.subject(), hyp, fail)


def check_beta1(sq: DenseSquare) -> CheckResult:
    """Skeletal g reflects remoteness through images under f."""
    hyp = sq.g.is_skeletal()
    fail = None
    if hyp:
        ctx_l, ctx_m = sq.ctx_l(), sq.ctx_m()
        for a in enumerate_sublocales(sq.l_frame):
            if ctx_m.is_remote_from(sq.f.image_subl(a)) \
                    and not ctx_l.is_remote_from(a):
                fail = f"A={sorted(a.labels())}"
                break
        if fail is None:
            rmt_l = ctx_l.rmt_elements()
            rmt_m = ctx_m.rmt_elements()
            for x in range(sq.l_frame.n):
                if sq.f(x) in rmt_m and x not in rmt_l:
                    fail = f"x={sq.l_frame.labels[x]} (Rmt part)"
                    break
    return _verdict("beta1", sq.subject(), hyp, fail)


def check_beta1star(sq: DenseSquare) -> CheckResult:
    hyp = (sq.g.is_skeletal()
           and is_complemented_subl(sq.m_frame, sq.omega_image)
           and sq.f.preimage_subl(sq.omega_image) == sq.alpha_image)
    fail = None
    if hyp:
        ctx_l, ctx_m = sq.ctx_l(), sq.ctx_m()
        for a in enumerate_sublocales(sq.l_frame):
            if ctx_m.is_star_remote_from(sq.f.image_subl(a)) \
                    and not ctx_l.is_star_remote_from(a):
                fail = f"A={sorted(a.labels())}"
                break
        if fail is None:
            star_l = ctx_l.star_rmt_elements()
            star_m = ctx_m.star_rmt_elements()
            for x in range(sq.l_frame.n):
                if sq.f(x) in star_m and x not in star_l:
                    fail = f"x={sq.l_frame.labels[x]} (*Rmt part)"
                    break
    return _verdict("beta1star", sq.subject(), hyp, fail)


def check_for(sq: DenseSquare) -> CheckResult:
    """Skeletal g pulls remote sublocales back to remote sublocales."""
    hyp = sq.g.is_skeletal()
    fail = None
    if hyp:
        ctx_l = sq.ctx_l()
        for a in sq.ctx_m().remote_set():
            if not ctx_l.is_remote_from(sq.f.preimage_subl(a)):
                fail = f"A={sorted(a.labels())}"
                break
        if fail is None:
            rmt_l = ctx_l.rmt_elements()
            for x in sq.ctx_m().rmt_elements():
                if sq.f.adjoint(x) not in rmt_l:
                    fail = f"x={sq.m_frame.labels[x]} (Rmt part)"
                    break
    return _verdict("for", sq.subject(), hyp, fail)


def check_forstar(sq: DenseSquare) -> CheckResult:
    hyp = (sq.g.is_skeletal()
           and sq.f.preimage_subl(sq.omega_image) == sq.alpha_image
           and is_complemented_subl(sq.m_frame, sq.omega_image))
    fail = None
    if hyp:
        ctx_l = sq.ctx_l()
        for a in sq.ctx_m().star_remote_set():
            if not ctx_l.is_star_remote_from(sq.f.preimage_subl(a)):
                fail = f"A={sorted(a.labels())}"
                break
        if fail is None:
            star_l = ctx_l.star_rmt_elements()
            for x in sq.ctx_m().star_rmt_elements():
                if sq.f.adjoint(x) not in star_l:
                    fail = f"x={sq.m_frame.labels[x]} (*Rmt part)"
                    break
    return _verdict("forstar", sq.subject(), hyp, fail)


def check_for1(sq: DenseSquare) -> CheckResult:
    """Surjective image function turns preimage-remoteness into remoteness."""
    hyp = (sq.g.adjoint_is_skeletal() and sq.adjoints_commute()
           and sq.f.image_is_surjective())
    fail = None
    if hyp:
        ctx_l, ctx_m = sq.ctx_l(), sq.ctx_m()
        for a in enumerate_sublocales(sq.m_frame):
            if ctx_l.is_remote_from(sq.f.preimage_subl(a)) \
                    and not ctx_m.is_remote_from(a):
                fail = f"A={sorted(a.labels())}"
                break
        if fail is None and takes_remainder(sq):
            for a in enumerate_sublocales(sq.m_frame):
                if ctx_l.is_star_remote_from(sq.f.preimage_subl(a)) \
                        and not ctx_m.is_star_remote_from(a):
                    fail = f"A={sorted(a.labels())} (star part)"
                    break
    return _verdict("for1", sq.subject(), hyp, fail)


def check_for1star(sq: DenseSquare) -> CheckResult:
    """f* reflects the Rmt condition under either closure-style hypothesis."""
    hyp = sq.g.adjoint_is_skeletal() and (
        (sq.f.is_weakly_closed_adjoint() and sq.g.is_surjective())
        or (sq.adjoints_commute() and sq.f.is_surjective()))
    fail = None
    if hyp:
        ctx_l, ctx_m = sq.ctx_l(), sq.ctx_m()
        rmt_l = ctx_l.rmt_elements()
        rmt_m = ctx_m.rmt_elements()
        for x in range(sq.m_frame.n):
            if sq.f.adjoint(x) in rmt_l and x not in rmt_m:
                fail = f"x={sq.m_frame.labels[x]}"
                break
        if fail is None and takes_remainder(sq):
            star_l = ctx_l.star_rmt_elements()
            star_m = ctx_m.star_rmt_elements()
            for x in range(sq.m_frame.n):
                if sq.f.adjoint(x) in star_l and x not in star_m:
                    fail = f"x={sq.m_frame.labels[x]} (star part)"
                    break
    return _verdict("for1star", sq.subject(), hyp, fail)


# ---------------------------------------------------------------------------
# Remote-preserving characterizations over one square
# ---------------------------------------------------------------------------

def check_gamma_remote_preserving(sq: DenseSquare) -> CheckResult:
    """Four equivalent faces of f-remote preservation."""
    hyp = sq.adjoints_commute()
    fail = None
    if hyp:
        ctx_m = sq.ctx_m()
        p1 = is_f_remote_preserving(sq)
        p2 = ctx_m.is_remote_from(
            sq.f.image_subl(booleanization(sq.l_frame)))
        img_rs = sq.f.image_subl(sq.ctx_l().rs())
        p3 = ctx_m.is_remote_from(img_rs)
        p4 = img_rs <= ctx_m.rs()
        if not p1 == p2 == p3 == p4:
            fail = f"faces={(p1, p2, p3, p4)}"
    return _verdict("gammaremotepreserving", sq.subject(), hyp, fail)


def check_star_gamma_remote_preserving(sq: DenseSquare) -> CheckResult:
    hyp = sq.adjoints_commute()
    fail = None
    if hyp:
        ctx_m = sq.ctx_m()
        p1 = is_f_star_remote_preserving(sq)
        img = sq.f.image_subl(sq.ctx_l().star_rs())
        p2 = ctx_m.is_star_remote_from(img)
        p3 = img <= ctx_m.star_rs()
        if not p1 == p2 == p3:
            fail = f"faces={(p1, p2, p3)}"
    return _verdict("stargammaremotepreserving", sq.subject(), hyp, fail)


def check_gamma_preservation_lemma(sq: DenseSquare) -> CheckResult:
    """Remoteness transfers along alpha between S and (L, alpha[S])."""
    s_ctx = whole_context(sq.s_frame)
    ctx_l = sq.ctx_l()
    for a in enumerate_sublocales(sq.s_frame):
        if s_ctx.is_remote_from(a) \
                != ctx_l.is_remote_from(sq.alpha.image_subl(a)):
            return _verdict("gammapreservationlemma", sq.subject(), True,
                            f"A={sorted(a.labels())} (part 1)")
    for a in ctx_l.remote_set():
        if not s_ctx.is_remote_from(sq.alpha.preimage_subl(a)):
            return _verdict("gammapreservationlemma", sq.subject(), True,
                            f"A={sorted(a.labels())} (part 2)")
    return _verdict("gammapreservationlemma", sq.subject(), True, None)


def check_remote_preservation(sq: DenseSquare) -> CheckResult:
    """f-remote preservation matches g preserving remote sublocales."""
    hyp = sq.adjoints_commute()
    fail = None
    if hyp:
        lhs = is_f_remote_preserving(sq)
        # g preserves remote sublocales iff g[BS] is remote in T
        rhs = whole_context(sq.t_frame).is_remote_from(
            sq.g.image_subl(booleanization(sq.s_frame)))
        if lhs != rhs:
            fail = f"f-remote-preserving={lhs} g-preserves-remote={rhs}"
    return _verdict("remotepreservation", sq.subject(), hyp, fail)


SQUARE_CHECKS: dict[str, Callable[[DenseSquare], CheckResult]] = {
    "beta": check_beta,
    "betastar": check_betastar,
    "beta1": check_beta1,
    "beta1star": check_beta1star,
    "for": check_for,
    "forstar": check_forstar,
    "for1": check_for1,
    "for1star": check_for1star,
    "gammaremotepreserving": check_gamma_remote_preserving,
    "stargammaremotepreserving": check_star_gamma_remote_preserving,
    "gammapreservationlemma": check_gamma_preservation_lemma,
    "remotepreservation": check_remote_preservation,
}


def check_section4(sq: DenseSquare) -> list[CheckResult]:
    """Run the preservation/reflection checks on one square."""
    ids = ("beta", "betastar", "beta1", "beta1star",
           "for", "forstar", "for1", "for1star")
    return [SQUARE_CHECKS[i](sq) for i in ids]


# ---------------------------------------------------------------------------
# Chain-level checks
# ---------------------------------------------------------------------------

def check_bvl(chain: SquareChain) -> CheckResult:
    """theta maps the middle layer's remote sublocales to remote ones."""
    ctx_l = chain.outer.ctx_l()
    for a in chain.ctx_r().remote_set():
        if not ctx_l.is_remote_from(chain.theta.image_subl(a)):
            return _verdict("bvl", chain.subject(), True,
                            f"A={sorted(a.labels())}")
    return _verdict("bvl", chain.subject(), True, None)


def check_starbvl(chain: SquareChain) -> CheckResult:
    ctx_l = chain.outer.ctx_l()
    for a in chain.ctx_r().star_remote_set():
        if not ctx_l.is_star_remote_from(chain.theta.image_subl(a)):
            return _verdict("starbvl", chain.subject(), True,
                            f"A={sorted(a.labels())}")
    return _verdict("starbvl", chain.subject(), True, None)


def _inner_preserving(chain: SquareChain) -> bool:
    """phi maps remote-from-i[S] sublocales to remote-from-k[T] ones."""
    ctx_u = chain.ctx_u()
    return all(ctx_u.is_remote_from(chain.phi.image_subl(a))
               for a in chain.ctx_r().remote_set())


def _inner_star_preserving(chain: SquareChain) -> bool:
    ctx_u = chain.ctx_u()
    return all(ctx_u.is_star_remote_from(chain.phi.image_subl(a))
               for a in chain.ctx_r().star_remote_set())


def check_gfremote(chain: SquareChain) -> CheckResult:
    """Outer f-remote preservation descends to the middle layer."""
    hyp = is_f_remote_preserving(chain.outer)
    fail = None
    if hyp and not _inner_preserving(chain):
        fail = "phi not remote preserving"
    return _verdict("gfremote", chain.subject(), hyp, fail)


def check_obsfremote(chain: SquareChain) -> CheckResult:
    """Converse of the descent when alpha is surjective."""
    hyp = chain.outer.alpha.is_surjective() and _inner_preserving(chain)
    fail = None
    if hyp and not is_f_remote_preserving(chain.outer):
        fail = "f not remote preserving"
    return _verdict("obsfremote", chain.subject(), hyp, fail)


def check_star_obs_gfremote(chain: SquareChain) -> CheckResult:
    """Star descent under the remainder-forcing side conditions."""
    hyp = (is_f_star_remote_preserving(chain.outer)
           and chain.phi.preimage_subl(chain.k_image) == chain.i_image
           and chain.phi.image_is_surjective())
    fail = None
    if hyp and not _inner_star_preserving(chain):
        fail = "phi not *remote preserving"
    return _verdict("starobsgfremote", chain.subject(), hyp, fail)


CHAIN_CHECKS: dict[str, Callable[[SquareChain], CheckResult]] = {
    "bvl": check_bvl,
    "starbvl": check_starbvl,
    "gfremote": check_gfremote,
    "obsfremote": check_obsfremote,
    "starobsgfremote": check_star_obs_gfremote,
}


# ---------------------------------------------------------------------------
# Triangle-level checks (composition of preservation)
# ---------------------------------------------------------------------------

def check_tfg1(tri: Triangle) -> CheckResult:
    """Preservation composes; the star case composes the same way."""
    hyp_plain = (is_f_remote_preserving(tri.sq1)
                 and is_f_remote_preserving(tri.sq2))
    hyp_star = (is_f_star_remote_preserving(tri.sq1)
                and is_f_star_remote_preserving(tri.sq2))
    if not (hyp_plain or hyp_star):
        return CheckResult("tfg-1", tri.subject(), HYPOTHESES_NOT_MET)
    fail = None
    if hyp_plain and not is_f_remote_preserving(tri.sq3):
        fail = "composite not remote preserving"
    if fail is None and hyp_star \
            and not is_f_star_remote_preserving(tri.sq3):
        fail = "composite not *remote preserving"
    return _verdict("tfg-1", tri.subject(), True, fail)


def check_tfg2(tri: Triangle) -> CheckResult:
    """Composite preservation plus a skeletal second leg recovers the first."""
    hyp = is_f_remote_preserving(tri.sq3) and tri.sq2.g.is_skeletal()
    fail = None
    if hyp and not is_f_remote_preserving(tri.sq1):
        fail = "first leg not remote preserving"
    return _verdict("tfg-2", tri.subject(), hyp, fail)


def check_tfg3(tri: Triangle) -> CheckResult:
    """Composite preservation recovers the second leg when the middle
    context's remote sublocales all sit inside the image of the first
    Booleanization."""
    hyp = is_f_remote_preserving(tri.sq3)
    if hyp:
        bound = tri.sq1.f.image_subl(booleanization(tri.sq1.l_frame))
        hyp = all(a <= bound for a in tri.sq2.ctx_l().remote_set())
    fail = None
    if hyp and not is_f_remote_preserving(tri.sq2):
        fail = "second leg not remote preserving"
    return _verdict("tfg-3", tri.subject(), hyp, fail)


TRIANGLE_CHECKS: dict[str, Callable[[Triangle], CheckResult]] = {
    "tfg-1": check_tfg1,
    "tfg-2": check_tfg2,
    "tfg-3": check_tfg3,
}


def check_section5(sq: DenseSquare,
                   chain: Optional[SquareChain] = None) -> list[CheckResult]:
    """Run the remote-preserving checks; chain checks only when supplied."""
    ids = ("gammaremotepreserving", "stargammaremotepreserving",
           "gammapreservationlemma", "remotepreservation")
    out = [SQUARE_CHECKS[i](sq) for i in ids]
    if chain is not None:
        out.extend(fn(chain) for _, fn in sorted(CHAIN_CHECKS.items()))
    return out
