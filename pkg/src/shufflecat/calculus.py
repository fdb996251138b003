"""Expression trees for categories, functors and 2-cells, plus a bounded
pointwise equality checker.

Category expressions are built from finite base categories with flat n-ary
products and the free symmetric monoidal construction; functor expressions
name the structural maps (projections, shuffles, eta, mu, strengths, the
interleavings) and compose in diagrammatic order; cell expressions paste
interchange cells with whiskering, vertical, and horizontal composition.

Equality of functors or 2-cells is decided pointwise over a deterministic
bounded enumeration of the domain: smallest inputs first, so the first
reported counterexample is a minimal one.  When the space is larger than
the point budget, a seeded uniform sample is checked and the report says
so.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .fincat import CommMonoid, FinCat, FunTable
from .freesmc import (
    BaseLevel,
    FreeLevel,
    Fun,
    Level,
    ProdLevel,
    SeqMor,
    SeqObj,
    eta,
    eta_mor,
    gamma_ij_component,
    mu,
    mu_mor,
    omega_n,
    omega_n_mor,
    seq,
    strength_ti,
    strength_ti_mor,
    tmap,
)
from .perms import Perm, all_perms, permute
from .perms import identity as perm_identity


class CalcError(Exception):
    pass


class TypecheckError(CalcError):
    pass


class BudgetError(CalcError):
    pass


# ------------------------------------------------------------- categories


@dataclass(frozen=True)
class CatBase:
    cat: FinCat


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Free:
    inner: "CatExpr"


CatExpr = Union[CatBase, Prod, Free]
UNIT = Prod(())


def free_depth(c: CatExpr) -> int:
    if isinstance(c, CatBase):
        return 0
    if isinstance(c, Prod):
        return max((free_depth(f) for f in c.factors), default=0)
    return 1 + free_depth(c.inner)


@lru_cache(maxsize=None)
def level_of(c: CatExpr) -> Level:
    if isinstance(c, CatBase):
        return BaseLevel(c.cat)
    if isinstance(c, Prod):
        return ProdLevel(tuple(level_of(f) for f in c.factors))
    if isinstance(c, Free):
        return FreeLevel(level_of(c.inner))
    raise TypecheckError(f"not a category expression: {c!r}")


# ------------------------------------------------------------- functors


@dataclass(frozen=True)
class Identity:
    cat: CatExpr


@dataclass(frozen=True)
class Compose:
    parts: tuple


@dataclass(frozen=True)
class Tuple:
    parts: tuple


@dataclass(frozen=True)
class Proj:
    prod: Prod
    k: int


@dataclass(frozen=True)
class Shuffle:
    prod: Prod
    perm: Perm


@dataclass(frozen=True)
class ApplyT:
    inner: "FunExpr"


@dataclass(frozen=True)
class Eta:
    cat: CatExpr


@dataclass(frozen=True)
class Mu:
    cat: CatExpr


@dataclass(frozen=True)
class Strength:
    slots: tuple
    i: int


@dataclass(frozen=True)
class Omega:
    inners: tuple


@dataclass(frozen=True)
class FunBase:
    table: FunTable


@dataclass(frozen=True)
class Const:
    dom: CatExpr
    cod: CatExpr
    obj: object


@dataclass(frozen=True)
class MonoidEval:
    monoid: CommMonoid


@dataclass(frozen=True)
class MonoidMult:
    monoid: CommMonoid
    n: int


FunExpr = Union[
    Identity, Compose, Tuple, Proj, Shuffle, ApplyT, Eta, Mu, Strength, Omega,
    FunBase, Const, MonoidEval, MonoidMult,
]


def fun_endpoints(f: FunExpr, path: str = "") -> tuple:
    """Domain and codomain category expressions; raises TypecheckError with
    the offending subexpression path on mismatch."""
    where = path or type(f).__name__
    if isinstance(f, Identity):
        return f.cat, f.cat
    if isinstance(f, Compose):
        if not f.parts:
            raise TypecheckError(f"{where}: empty composition")
        ends = [fun_endpoints(p, f"{where}[{k}]") for k, p in enumerate(f.parts)]
        for k in range(len(ends) - 1):
            if ends[k][1] != ends[k + 1][0]:
                raise TypecheckError(
                    f"{where}[{k + 1}]: composition endpoints do not meet"
                )
        return ends[0][0], ends[-1][1]
    if isinstance(f, Tuple):
        if not f.parts:
            raise TypecheckError(f"{where}: empty tuple has no domain")
        ends = [fun_endpoints(p, f"{where}[{k}]") for k, p in enumerate(f.parts)]
        dom = ends[0][0]
        for k, (d, _) in enumerate(ends):
            if d != dom:
                raise TypecheckError(f"{where}[{k}]: tuple factors need one domain")
        return dom, Prod(tuple(c for _, c in ends))
    if isinstance(f, Proj):
        if not isinstance(f.prod, Prod):
            raise TypecheckError(f"{where}: projection needs a product domain")
        if not 1 <= f.k <= len(f.prod.factors):
            raise TypecheckError(f"{where}: projection index out of range")
        return f.prod, f.prod.factors[f.k - 1]
    if isinstance(f, Shuffle):
        if not isinstance(f.prod, Prod):
            raise TypecheckError(f"{where}: shuffle needs a product domain")
        if f.perm.degree != len(f.prod.factors):
            raise TypecheckError(f"{where}: shuffle degree mismatch")
        return f.prod, Prod(permute(f.prod.factors, f.perm))
    if isinstance(f, ApplyT):
        d, c = fun_endpoints(f.inner, f"{where}.inner")
        return Free(d), Free(c)
    if isinstance(f, Eta):
        return f.cat, Free(f.cat)
    if isinstance(f, Mu):
        return Free(Free(f.cat)), Free(f.cat)
    if isinstance(f, Strength):
        n = len(f.slots)
        if not 1 <= f.i <= n:
            raise TypecheckError(f"{where}: strength slot out of range")
        dom = Prod(
            tuple(Free(s) if k == f.i - 1 else s for k, s in enumerate(f.slots))
        )
        return dom, Free(Prod(f.slots))
    if isinstance(f, Omega):
        return Prod(tuple(Free(a) for a in f.inners)), Free(Prod(f.inners))
    if isinstance(f, FunBase):
        return CatBase(f.table.domain), CatBase(f.table.codomain)
    if isinstance(f, Const):
        return f.dom, f.cod
    if isinstance(f, MonoidEval):
        base = CatBase(f.monoid.cat)
        return Free(base), base
    if isinstance(f, MonoidMult):
        if f.n < 0:
            raise TypecheckError(f"{where}: negative multiplication arity")
        base = CatBase(f.monoid.cat)
        return Prod((base,) * f.n), base
    raise TypecheckError(f"{where}: not a functor expression")


@lru_cache(maxsize=None)
def _fun_endpoints_cached(f: FunExpr) -> tuple:
    return fun_endpoints(f)


@lru_cache(maxsize=None)
def _cell_endpoints_cached(e) -> tuple:
    return cell_endpoints(e)


def fun_dom(f: FunExpr) -> CatExpr:
    return _fun_endpoints_cached(f)[0]


def fun_cod(f: FunExpr) -> CatExpr:
    return _fun_endpoints_cached(f)[1]


def prod_map(doms: tuple, funs: tuple) -> FunExpr:
    """The componentwise map on a product: factor k projects then applies
    funs[k]."""
    p = Prod(tuple(doms))
    return Tuple(tuple(Compose((Proj(p, k + 1), g)) for k, g in enumerate(funs)))


# ------------------------------------------------------------- cells


@dataclass(frozen=True)
class IdCell:
    fun: FunExpr


@dataclass(frozen=True)
class Gamma:
    slots: tuple
    i: int = 1
    j: int = 2
    partition: object = "canonical"


@dataclass(frozen=True)
class GammaInv:
    slots: tuple
    i: int = 1
    j: int = 2
    partition: object = "canonical"


@dataclass(frozen=True)
class VComp:
    parts: tuple


@dataclass(frozen=True)
class HComp:
    first: "CellExpr"
    second: "CellExpr"


@dataclass(frozen=True)
class WhiskerL:
    fun: FunExpr
    cell: "CellExpr"


@dataclass(frozen=True)
class WhiskerR:
    cell: "CellExpr"
    fun: FunExpr


@dataclass(frozen=True)
class ApplyTCell:
    cell: "CellExpr"


@dataclass(frozen=True)
class TupleCell:
    parts: tuple


CellExpr = Union[
    IdCell, Gamma, GammaInv, VComp, HComp, WhiskerL, WhiskerR, ApplyTCell, TupleCell
]

CELL_TYPES = (
    IdCell, Gamma, GammaInv, VComp, HComp, WhiskerL, WhiskerR, ApplyTCell, TupleCell
)


def gamma_source(slots: tuple, i: int, j: int) -> FunExpr:
    """The 1-cell that interleaves slot i before slot j: apply the strength
    at slot i with slot j still free, then the freed strength at slot j,
    then flatten."""
    with_free_j = tuple(Free(s) if k == j - 1 else s for k, s in enumerate(slots))
    return Compose(
        (
            Strength(with_free_j, i),
            ApplyT(Strength(tuple(slots), j)),
            Mu(Prod(tuple(slots))),
        )
    )


def gamma_target(slots: tuple, i: int, j: int) -> FunExpr:
    return gamma_source(slots, j, i)


def cell_endpoints(e: CellExpr, path: str = "") -> tuple:
    """Source and target functor expressions of a cell.

    Vertical composition only requires the meeting functors to share
    endpoint categories; whether the 1-cells themselves agree is checked
    extensionally by equal_cell, matching how pasting diagrams are read up
    to strictly commuting squares.
    """
    where = path or type(e).__name__
    if isinstance(e, IdCell):
        fun_endpoints(e.fun, f"{where}.fun")
        return e.fun, e.fun
    if isinstance(e, Gamma):
        _check_gamma(e, where)
        return (
            gamma_source(e.slots, e.i, e.j),
            gamma_target(e.slots, e.i, e.j),
        )
    if isinstance(e, GammaInv):
        _check_gamma(e, where)
        return (
            gamma_source(e.slots, e.j, e.i),
            gamma_target(e.slots, e.j, e.i),
        )
    if isinstance(e, VComp):
        if not e.parts:
            raise TypecheckError(f"{where}: empty vertical composition")
        ends = [cell_endpoints(p, f"{where}[{k}]") for k, p in enumerate(e.parts)]
        cats = [
            (fun_endpoints(s, f"{where}[{k}].src")) for k, (s, _) in enumerate(ends)
        ]
        for k in range(len(ends) - 1):
            if cats[k] != cats[k + 1]:
                raise TypecheckError(
                    f"{where}[{k + 1}]: vertical composition across different"
                    " hom-categories"
                )
        return ends[0][0], ends[-1][1]
    if isinstance(e, HComp):
        s1, t1 = cell_endpoints(e.first, f"{where}.first")
        s2, t2 = cell_endpoints(e.second, f"{where}.second")
        if fun_cod(s1) != fun_dom(s2):
            raise TypecheckError(f"{where}: horizontal composition endpoints")
        return Compose((s1, s2)), Compose((t1, t2))
    if isinstance(e, WhiskerL):
        s, t = cell_endpoints(e.cell, f"{where}.cell")
        if fun_cod(e.fun) != fun_dom(s):
            raise TypecheckError(f"{where}: left whisker endpoints")
        return Compose((e.fun, s)), Compose((e.fun, t))
    if isinstance(e, WhiskerR):
        s, t = cell_endpoints(e.cell, f"{where}.cell")
        if fun_cod(s) != fun_dom(e.fun):
            raise TypecheckError(f"{where}: right whisker endpoints")
        return Compose((s, e.fun)), Compose((t, e.fun))
    if isinstance(e, ApplyTCell):
        s, t = cell_endpoints(e.cell, f"{where}.cell")
        return ApplyT(s), ApplyT(t)
    if isinstance(e, TupleCell):
        if not e.parts:
            raise TypecheckError(f"{where}: empty tuple cell")
        ends = [cell_endpoints(p, f"{where}[{k}]") for k, p in enumerate(e.parts)]
        doms = [fun_dom(s) for s, _ in ends]
        if len(set(doms)) != 1:
            raise TypecheckError(f"{where}: tuple cell factors need one domain")
        return (
            Tuple(tuple(s for s, _ in ends)),
            Tuple(tuple(t for _, t in ends)),
        )
    raise TypecheckError(f"{where}: not a cell expression")


def _check_gamma(e, where):
    n = len(e.slots)
    if e.i == e.j or not (1 <= e.i <= n and 1 <= e.j <= n):
        raise TypecheckError(f"{where}: interchange slots out of range")
    if e.partition != "canonical":
        b1, b2, b3 = e.partition
        p, q = min(e.i, e.j), max(e.i, e.j)
        if not (0 <= b1 < p <= b2 < q <= b3 <= n):
            raise TypecheckError(f"{where}: partition does not isolate the slots")


def typecheck(e) -> tuple:
    """Endpoints of a functor or cell expression."""
    if isinstance(e, CELL_TYPES):
        return cell_endpoints(e)
    return fun_endpoints(e)


# ------------------------------------------------------------- budget


@dataclass(frozen=True)
class Budget:
    max_seq_len: int = 3
    max_nest: int = 2
    max_points: int = 20000
    seed: int = 0

    def __post_init__(self):
        if min(self.max_seq_len, self.max_points) < 1 or self.max_nest < 0:
            raise ValueError("budget fields must be positive")


def count_objects(c: CatExpr, bud: Budget) -> int:
    if isinstance(c, CatBase):
        return len(c.cat.objects)
    if isinstance(c, Prod):
        total = 1
        for f in c.factors:
            total *= count_objects(f, bud)
        return total
    s = count_objects(c.inner, bud)
    return sum(s**l for l in range(bud.max_seq_len + 1))


def count_morphisms(c: CatExpr, bud: Budget) -> int:
    if isinstance(c, CatBase):
        return len(c.cat.all_morphisms())
    if isinstance(c, Prod):
        total = 1
        for f in c.factors:
            total *= count_morphisms(f, bud)
        return total
    m = count_morphisms(c.inner, bud)
    return sum(math.factorial(l) * m**l for l in range(bud.max_seq_len + 1))


def _digits(index: int, base: int, width: int) -> list:
    out = [0] * width
    for k in range(width - 1, -1, -1):
        index, out[k] = divmod(index, base)
    return out


def object_at(c: CatExpr, bud: Budget, index: int):
    if isinstance(c, CatBase):
        return c.cat.objects[index]
    if isinstance(c, Prod):
        vals = []
        counts = [count_objects(f, bud) for f in c.factors]
        for k, f in enumerate(c.factors):
            rest = math.prod(counts[k + 1 :])
            d, index = divmod(index, rest)
            vals.append(object_at(f, bud, d))
        return tuple(vals)
    s = count_objects(c.inner, bud)
    for l in range(bud.max_seq_len + 1):
        blocksize = s**l
        if index < blocksize:
            digits = _digits(index, s, l) if l else []
            return seq(tuple(object_at(c.inner, bud, d) for d in digits))
        index -= blocksize
    raise IndexError("object index out of range")


def morphism_at(c: CatExpr, bud: Budget, index: int):
    if isinstance(c, CatBase):
        return c.cat.all_morphisms()[index]
    if isinstance(c, Prod):
        vals = []
        counts = [count_morphisms(f, bud) for f in c.factors]
        for k, f in enumerate(c.factors):
            rest = math.prod(counts[k + 1 :])
            d, index = divmod(index, rest)
            vals.append(morphism_at(f, bud, d))
        return tuple(vals)
    m = count_morphisms(c.inner, bud)
    lev = level_of(c.inner)
    for l in range(bud.max_seq_len + 1):
        blocksize = math.factorial(l) * m**l
        if index < blocksize:
            perm_idx, rest = divmod(index, m**l)
            perm = all_perms(l)[perm_idx]
            comps = tuple(
                morphism_at(c.inner, bud, d) for d in (_digits(rest, m, l) if l else [])
            )
            source = seq(tuple(lev.src(x) for x in comps))
            target = [None] * l
            for i in range(1, l + 1):
                target[perm(i) - 1] = lev.tgt(comps[i - 1])
            return SeqMor(source, seq(tuple(target)), perm, comps)
        index -= blocksize
    raise IndexError("morphism index out of range")


def _obj_size(v) -> int:
    if isinstance(v, SeqObj):
        return 1 + sum(_obj_size(e) for e in v.entries)
    if isinstance(v, tuple):
        return sum(_obj_size(e) for e in v)
    return 1


def _mor_size(m) -> int:
    if isinstance(m, SeqMor):
        return 1 + sum(_mor_size(c) for c in m.components)
    if isinstance(m, tuple):
        return sum(_mor_size(c) for c in m)
    return 1


def _indices(total: int, bud: Budget):
    if total <= bud.max_points:
        return range(total), False
    rng = random.Random(bud.seed)
    try:
        picked = rng.sample(range(total), bud.max_points)
    except OverflowError:
        # totals past ssize_t cannot back a range-based sample; with the
        # population that sparse, seeded draws collide rarely enough that
        # rejection sampling stays cheap
        seen: set = set()
        while len(seen) < bud.max_points:
            seen.add(rng.randrange(total))
        picked = list(seen)
    return sorted(picked), True


def _check_nest(c: CatExpr, bud: Budget):
    d = free_depth(c)
    if d > bud.max_nest:
        raise BudgetError(f"nesting depth {d} exceeds budget {bud.max_nest}")


def enumerate_objects(c: CatExpr, bud: Budget):
    """All objects (or a seeded sample when over budget), smallest first."""
    _check_nest(c, bud)
    idxs, truncated = _indices(count_objects(c, bud), bud)
    vals = [object_at(c, bud, i) for i in idxs]
    vals.sort(key=_obj_size)
    return vals, truncated


def enumerate_morphisms(c: CatExpr, bud: Budget):
    _check_nest(c, bud)
    idxs, truncated = _indices(count_morphisms(c, bud), bud)
    vals = [morphism_at(c, bud, i) for i in idxs]
    vals.sort(key=_mor_size)
    return vals, truncated


# ------------------------------------------------------------- evaluation


def eval_fun(f: FunExpr, x):
    """Apply a functor expression to an object of its domain."""
    if isinstance(f, Identity):
        return x
    if isinstance(f, Compose):
        for part in f.parts:
            x = eval_fun(part, x)
        return x
    if isinstance(f, Tuple):
        return tuple(eval_fun(p, x) for p in f.parts)
    if isinstance(f, Proj):
        return x[f.k - 1]
    if isinstance(f, Shuffle):
        return permute(x, f.perm)
    if isinstance(f, ApplyT):
        return tmap(_tfun(f.inner), x)
    if isinstance(f, Eta):
        return eta(x)
    if isinstance(f, Mu):
        return mu(x)
    if isinstance(f, Strength):
        return strength_ti(len(f.slots), f.i, x)
    if isinstance(f, Omega):
        return omega_n(x)
    if isinstance(f, FunBase):
        return f.table.on_obj(x)
    if isinstance(f, Const):
        return f.obj
    if isinstance(f, MonoidEval):
        return f.monoid.fold(x.entries)
    if isinstance(f, MonoidMult):
        return f.monoid.fold(x)
    raise TypecheckError(f"not a functor expression: {f!r}")


def eval_fun_mor(f: FunExpr, m):
    """Apply a functor expression to a morphism of its domain."""
    if isinstance(f, Identity):
        return m
    if isinstance(f, Compose):
        for part in f.parts:
            m = eval_fun_mor(part, m)
        return m
    if isinstance(f, Tuple):
        return tuple(eval_fun_mor(p, m) for p in f.parts)
    if isinstance(f, Proj):
        return m[f.k - 1]
    if isinstance(f, Shuffle):
        return permute(m, f.perm)
    if isinstance(f, ApplyT):
        return tmap(_tfun(f.inner), m)
    if isinstance(f, Eta):
        return eta_mor(level_of(f.cat), m)
    if isinstance(f, Mu):
        return mu_mor(m)
    if isinstance(f, Strength):
        dom = fun_dom(f)
        levels = tuple(level_of(c) for c in dom.factors)
        return strength_ti_mor(levels, len(f.slots), f.i, m)
    if isinstance(f, Omega):
        return omega_n_mor(m)
    if isinstance(f, FunBase):
        return f.table.on_mor(m)
    if isinstance(f, Const):
        return level_of(f.cod).identity(f.obj)
    if isinstance(f, MonoidEval):
        return f.monoid.cat.identity(f.monoid.fold(m.source.entries))
    if isinstance(f, MonoidMult):
        sources = tuple(f.monoid.cat.src(c) for c in m)
        return f.monoid.cat.identity(f.monoid.fold(sources))
    raise TypecheckError(f"not a functor expression: {f!r}")


def _tfun(inner: FunExpr) -> Fun:
    return Fun(lambda e: eval_fun(inner, e), lambda c: eval_fun_mor(inner, c))


def eval_cell(e: CellExpr, x, hcomp_order: int = 1):
    """Component of a 2-cell at an object of its source's domain."""
    if isinstance(e, IdCell):
        return level_of(fun_cod(e.fun)).identity(eval_fun(e.fun, x))
    if isinstance(e, Gamma):
        levels = tuple(level_of(s) for s in e.slots)
        return gamma_ij_component(levels, len(e.slots), e.i, e.j, x, e.partition)
    if isinstance(e, GammaInv):
        levels = tuple(level_of(s) for s in e.slots)
        return gamma_ij_component(levels, len(e.slots), e.j, e.i, x, e.partition)
    if isinstance(e, VComp):
        src, _ = _cell_endpoints_cached(e)
        lev = level_of(fun_cod(src))
        acc = eval_cell(e.parts[0], x, hcomp_order)
        for part in e.parts[1:]:
            acc = lev.comp(eval_cell(part, x, hcomp_order), acc)
        return acc
    if isinstance(e, HComp):
        sf, tf = _cell_endpoints_cached(e.first)
        ss, ts = _cell_endpoints_cached(e.second)
        lev = level_of(fun_cod(ss))
        left = eval_cell(e.first, x, hcomp_order)
        if hcomp_order == 1:
            return lev.comp(
                eval_cell(e.second, eval_fun(tf, x), hcomp_order),
                eval_fun_mor(ss, left),
            )
        return lev.comp(
            eval_fun_mor(ts, left),
            eval_cell(e.second, eval_fun(sf, x), hcomp_order),
        )
    if isinstance(e, WhiskerL):
        return eval_cell(e.cell, eval_fun(e.fun, x), hcomp_order)
    if isinstance(e, WhiskerR):
        return eval_fun_mor(e.fun, eval_cell(e.cell, x, hcomp_order))
    if isinstance(e, ApplyTCell):
        s, t = _cell_endpoints_cached(e.cell)
        comps = tuple(eval_cell(e.cell, v, hcomp_order) for v in x.entries)
        return SeqMor(
            eval_fun(ApplyT(s), x),
            eval_fun(ApplyT(t), x),
            perm_identity(len(comps)),
            comps,
        )
    if isinstance(e, TupleCell):
        return tuple(eval_cell(p, x, hcomp_order) for p in e.parts)
    raise TypecheckError(f"not a cell expression: {e!r}")


# ------------------------------------------------------------- reports


def show_value(v) -> str:
    if isinstance(v, SeqObj):
        return "(" + " ".join(show_value(e) for e in v.entries) + ")"
    if isinstance(v, SeqMor):
        perm = list(v.perm.images)
        comps = ", ".join(show_value(c) for c in v.components)
        return f"{{perm={perm}, components=[{comps}]}}"
    if isinstance(v, tuple):
        return "<" + ", ".join(show_value(e) for e in v) + ">"
    return str(v)


@dataclass
class Report:
    kind: str
    passed: bool
    points: int
    truncated: bool
    phase: str = "components"
    counterexample: Optional[dict] = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "points": self.points,
            "truncated": self.truncated,
            "phase": self.phase,
            "counterexample": self.counterexample,
            "detail": self.detail,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# Wrong values and type-shape breakage (a sequence where a plain object was
# expected, say) both count as observed failures at a point; harness misuse
# (TypecheckError, BudgetError) still propagates.
_EVAL_ERRORS = (ValueError, TypeError, AttributeError, KeyError, IndexError)


def _counterexample(point, left, right, note="") -> dict:
    out = {"point": show_value(point), "left": show_value(left), "right": show_value(right)}
    if note:
        out["note"] = note
    return out


def equal_fun(f: FunExpr, g: FunExpr, bud: Budget) -> Report:
    """Pointwise equality of two functor expressions on objects and
    morphisms of their shared domain."""
    df = fun_dom(f)
    dg = fun_dom(g)
    if df != dg:
        raise TypecheckError("cannot compare functors with different domains")
    objs, t1 = enumerate_objects(df, bud)
    mors, t2 = enumerate_morphisms(df, bud)
    truncated = t1 or t2
    points = 0
    for o in objs:
        points += 1
        try:
            a, b = eval_fun(f, o), eval_fun(g, o)
        except _EVAL_ERRORS as err:
            return Report(
                "equal-fun", False, points, truncated,
                counterexample={"point": show_value(o), "error": str(err)},
            )
        if a != b:
            return Report(
                "equal-fun", False, points, truncated,
                counterexample=_counterexample(o, a, b),
            )
    for m in mors:
        points += 1
        try:
            a, b = eval_fun_mor(f, m), eval_fun_mor(g, m)
        except _EVAL_ERRORS as err:
            return Report(
                "equal-fun", False, points, truncated,
                counterexample={"point": show_value(m), "error": str(err)},
            )
        if a != b:
            return Report(
                "equal-fun", False, points, truncated,
                counterexample=_counterexample(m, a, b, note="on a morphism"),
            )
    return Report("equal-fun", True, points, truncated)


def equal_cell(a: CellExpr, b: CellExpr, bud: Budget) -> Report:
    """Pointwise equality of two cells: first their source and target
    1-cells extensionally, then the components at every enumerated point."""
    sa, ta = cell_endpoints(a)
    sb, tb = cell_endpoints(b)
    src_report = equal_fun(sa, sb, bud)
    if not src_report.passed:
        return Report(
            "equal-cell", False, src_report.points, src_report.truncated,
            phase="endpoints-source", counterexample=src_report.counterexample,
            detail="source 1-cells disagree",
        )
    tgt_report = equal_fun(ta, tb, bud)
    if not tgt_report.passed:
        return Report(
            "equal-cell", False,
            src_report.points + tgt_report.points, tgt_report.truncated,
            phase="endpoints-target", counterexample=tgt_report.counterexample,
            detail="target 1-cells disagree",
        )
    dom = fun_dom(sa)
    cod_level = level_of(fun_cod(sa))
    objs, truncated = enumerate_objects(dom, bud)
    points = src_report.points + tgt_report.points
    for o in objs:
        points += 1
        try:
            left, right = eval_cell(a, o), eval_cell(b, o)
            drift = _endpoint_drift(cod_level, left, eval_fun(sa, o), eval_fun(ta, o))
        except _EVAL_ERRORS as err:
            return Report(
                "equal-cell", False, points, truncated,
                counterexample={"point": show_value(o), "error": str(err)},
            )
        if drift:
            return Report(
                "equal-cell", False, points, truncated,
                counterexample={"point": show_value(o), "left": show_value(left)},
                detail=f"component endpoints drift: {drift}",
            )
        if left != right:
            return Report(
                "equal-cell", False, points, truncated,
                counterexample=_counterexample(o, left, right),
            )
    return Report(
        "equal-cell", True, points,
        truncated or src_report.truncated or tgt_report.truncated,
    )


def _endpoint_drift(lev: Level, component, want_src, want_tgt) -> str:
    if lev.src(component) != want_src:
        return "source"
    if lev.tgt(component) != want_tgt:
        return "target"
    return ""


def check_naturality(alpha: CellExpr, bud: Budget) -> Report:
    """The components of a cell assemble into a natural transformation:
    both square routes agree on every enumerated morphism."""
    s, t = cell_endpoints(alpha)
    dom = fun_dom(s)
    dom_level = level_of(dom)
    cod_level = level_of(fun_cod(s))
    mors, truncated = enumerate_morphisms(dom, bud)
    points = 0
    for m in mors:
        points += 1
        x, y = dom_level.src(m), dom_level.tgt(m)
        try:
            left = cod_level.comp(eval_cell(alpha, y), eval_fun_mor(s, m))
            right = cod_level.comp(eval_fun_mor(t, m), eval_cell(alpha, x))
        except _EVAL_ERRORS as err:
            return Report(
                "naturality", False, points, truncated,
                counterexample={"point": show_value(m), "error": str(err)},
            )
        if left != right:
            return Report(
                "naturality", False, points, truncated,
                counterexample=_counterexample(m, left, right),
            )
    return Report("naturality", True, points, truncated)
