"""Label algebras: the monoids, commutative monoids and rigs that edges
carry as polarities.

Finite algebras are explicit multiplication tables over named elements and
are verified exhaustively.  A handful of infinite algebras (naturals,
integers, exact rationals) ship as builtins with exact arithmetic; their
declared properties are smoke-checked on randomized samples because an
exhaustive check is impossible.

Element values are small integers (indices into ``elements``) for table
algebras, and ``int`` / ``fractions.Fraction`` values for builtins.  Every
algebra exposes the same interface:

* ``mul(a, b)`` / ``one`` -- the monoid operation used to grade paths.  For
  additive builtins such as ``NatAdd`` this single operation *is* addition.
* ``add(a, b)`` / ``zero`` -- the commutative operation used for chain
  coefficients and additive morphisms.  Rigs have a genuinely separate
  addition; a plain commutative monoid reuses its one operation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional, Union

from .validation import AXIOM, STRUCTURE, ValidationReport

Element = Any


@dataclass(frozen=True)
class Flags:
    """Declared properties; `validate_algebra` / `is_cancellative` verify them."""

    commutative: bool = False
    cancellative: bool = False


@dataclass(frozen=True)
class TableAlgebra:
    """A finite monoid or rig given by explicit row-major operation tables.

    ``mul_table[a * n + b]`` is the index of the product of elements ``a``
    and ``b``.  Rigs additionally carry ``add_table`` and ``zero_index``.
    """

    elements: tuple[str, ...]
    mul_table: tuple[int, ...]
    unit: int
    add_table: Optional[tuple[int, ...]] = None
    zero_index: Optional[int] = None
    flags: Flags = Flags()

    kind = "finite-table"

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def is_rig(self) -> bool:
        return self.add_table is not None

    @property
    def one(self) -> int:
        return self.unit

    @property
    def zero(self) -> int:
        """Identity of the coefficient (additive) view."""
        if self.add_table is not None:
            return self.zero_index  # type: ignore[return-value]
        if not self.flags.commutative:
            raise ValueError("additive view requires a commutative operation")
        return self.unit

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a * len(self.elements) + b]

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a * len(self.elements) + b]
        if not self.flags.commutative:
            raise ValueError("additive view requires a commutative operation")
        return self.mul(a, b)

    def contains(self, x: Element) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.size

    def label_text(self, x: int) -> str:
        return self.elements[x]

    def parse_label(self, value: Any) -> int:
        if isinstance(value, str) and value in self.elements:
            return self.elements.index(value)
        raise KeyError(f"{value!r} is not an element (expected one of {list(self.elements)})")

    def iter_elements(self):
        return range(self.size)


@dataclass(frozen=True)
class _BuiltinOps:
    mul: Callable[[Element, Element], Element]
    one: Element
    contains: Callable[[Any], bool]
    parse: Callable[[Any], Element]
    sample: Callable[[random.Random], Element]
    add: Optional[Callable[[Element, Element], Element]] = None
    zero: Optional[Element] = None
    flags: Flags = Flags()
    cancellation_witness: Optional[tuple] = None  # (c, d, e) with c+e = d+e, c != d


def _int_only(v: Any) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise KeyError(f"{v!r} is not an integer label")
    return v


def _nat_only(v: Any) -> int:
    n = _int_only(v)
    if n < 0:
        raise KeyError(f"{v!r} is not a natural number label")
    return n


def _rat(v: Any) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str, Fraction)):
        raise KeyError(f"{v!r} is not an exact rational label (use int or 'p/q' string)")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise KeyError(f"{v!r} is not an exact rational label") from exc


def _is_nat(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _is_rat(x: Any) -> bool:
    return isinstance(x, Fraction) or _is_int(x)


_BUILTIN_OPS: dict[str, _BuiltinOps] = {
    "TrivialOne": _BuiltinOps(
        mul=lambda a, b: 1,
        one=1,
        contains=lambda x: x == 1 and not isinstance(x, bool),
        parse=lambda v: 1 if v in (1, "1") else _raise_unknown(v),
        sample=lambda rng: 1,
        add=lambda a, b: 1,
        zero=1,
        flags=Flags(commutative=True, cancellative=True),
    ),
    "NatAdd": _BuiltinOps(
        mul=lambda a, b: a + b,
        one=0,
        contains=_is_nat,
        parse=_nat_only,
        sample=lambda rng: rng.randrange(0, 10**6),
        add=lambda a, b: a + b,
        zero=0,
        flags=Flags(commutative=True, cancellative=True),
    ),
    "IntAdd": _BuiltinOps(
        mul=lambda a, b: a + b,
        one=0,
        contains=_is_int,
        parse=_int_only,
        sample=lambda rng: rng.randrange(-(10**6), 10**6),
        add=lambda a, b: a + b,
        zero=0,
        flags=Flags(commutative=True, cancellative=True),
    ),
    "RatAdd": _BuiltinOps(
        mul=lambda a, b: Fraction(a) + Fraction(b),
        one=Fraction(0),
        contains=_is_rat,
        parse=_rat,
        sample=lambda rng: Fraction(rng.randrange(-999, 1000), rng.randrange(1, 100)),
        add=lambda a, b: Fraction(a) + Fraction(b),
        zero=Fraction(0),
        flags=Flags(commutative=True, cancellative=True),
    ),
    "NatRig": _BuiltinOps(
        mul=lambda a, b: a * b,
        one=1,
        contains=_is_nat,
        parse=_nat_only,
        sample=lambda rng: rng.randrange(0, 1000),
        add=lambda a, b: a + b,
        zero=0,
        flags=Flags(commutative=True, cancellative=True),
    ),
    "RatMulMonoid": _BuiltinOps(
        mul=lambda a, b: Fraction(a) * Fraction(b),
        one=Fraction(1),
        contains=_is_rat,
        parse=_rat,
        sample=lambda rng: Fraction(rng.randrange(-999, 1000), rng.randrange(1, 100)),
        add=None,
        zero=None,
        flags=Flags(commutative=True, cancellative=False),
        cancellation_witness=(Fraction(1), Fraction(2), Fraction(0)),
    ),
}


def _raise_unknown(v: Any) -> Element:
    raise KeyError(f"{v!r} is not an element of this algebra")


@dataclass(frozen=True)
class BuiltinAlgebra:
    """An infinite algebra with exact arithmetic, referenced by name."""

    builtin_id: str

    kind = "builtin"

    def __post_init__(self):
        if self.builtin_id not in _BUILTIN_OPS:
            raise ValueError(f"unknown builtin algebra {self.builtin_id!r}")

    @property
    def _ops(self) -> _BuiltinOps:
        return _BUILTIN_OPS[self.builtin_id]

    @property
    def flags(self) -> Flags:
        return self._ops.flags

    @property
    def is_rig(self) -> bool:
        return self.builtin_id == "NatRig"

    @property
    def one(self) -> Element:
        return self._ops.one

    @property
    def zero(self) -> Element:
        ops = self._ops
        if ops.add is None:
            raise ValueError(f"{self.builtin_id} has no additive view")
        if self.is_rig:
            return ops.zero
        return ops.one

    def mul(self, a: Element, b: Element) -> Element:
        return self._ops.mul(a, b)

    def add(self, a: Element, b: Element) -> Element:
        ops = self._ops
        if ops.add is None:
            raise ValueError(f"{self.builtin_id} has no additive view")
        return ops.add(a, b)

    def contains(self, x: Element) -> bool:
        return self._ops.contains(x)

    def label_text(self, x: Element) -> str:
        f = Fraction(x) if isinstance(x, Fraction) else x
        return str(f)

    def parse_label(self, value: Any) -> Element:
        return self._ops.parse(value)

    def sample(self, rng: random.Random) -> Element:
        return self._ops.sample(rng)


LabelAlgebra = Union[TableAlgebra, BuiltinAlgebra]


def table_algebra(elements, mul, unit, add=None, zero=None, flags=Flags()) -> TableAlgebra:
    """Build a TableAlgebra from nested-list tables."""
    flat_mul = tuple(itertools.chain.from_iterable(mul)) if mul and isinstance(mul[0], (list, tuple)) else tuple(mul)
    flat_add = None
    if add is not None:
        flat_add = tuple(itertools.chain.from_iterable(add)) if add and isinstance(add[0], (list, tuple)) else tuple(add)
    return TableAlgebra(tuple(elements), flat_mul, unit, flat_add, zero, flags)


# Standard finite algebras, in the element order they are usually tabulated.
def _catalog() -> dict[str, TableAlgebra]:
    group = Flags(commutative=True, cancellative=True)
    comm = Flags(commutative=True, cancellative=False)
    sign = table_algebra(["+", "-"], [[0, 1], [1, 0]], unit=0, flags=group)
    sign0 = table_algebra(
        ["+", "0", "-"], [[0, 1, 2], [1, 1, 1], [2, 1, 0]], unit=0, flags=comm
    )
    signi = table_algebra(
        ["I", "+", "0", "-"],
        [[0, 1, 2, 3], [1, 1, 2, 3], [2, 2, 2, 2], [3, 3, 2, 1]],
        unit=0,
        flags=comm,
    )
    boolean = table_algebra(
        ["0", "1"],
        mul=[[0, 0], [0, 1]],
        unit=1,
        add=[[0, 1], [1, 1]],
        zero=0,
        flags=comm,
    )
    # The four-polarity rig {1, 0, -1, i}: i is an indeterminate effect,
    # absorbed by everything except multiplication by 0.
    s_rig = table_algebra(
        ["1", "0", "-1", "i"],
        mul=[[0, 1, 2, 3], [1, 1, 1, 1], [2, 1, 0, 3], [3, 1, 3, 3]],
        unit=0,
        add=[[0, 0, 3, 3], [0, 1, 2, 3], [3, 2, 2, 3], [3, 3, 3, 3]],
        zero=1,
        flags=comm,
    )
    return {"SIGN": sign, "SIGN0": sign0, "SIGNI": signi, "BOOL": boolean, "S": s_rig}


CATALOG: dict[str, TableAlgebra] = _catalog()
BUILTIN_NAMES = tuple(_BUILTIN_OPS)


def named_algebra(name: str) -> LabelAlgebra:
    """Resolve an algebra name: a builtin id or a catalog table."""
    if name in _BUILTIN_OPS:
        return BuiltinAlgebra(name)
    if name in CATALOG:
        return CATALOG[name]
    raise KeyError(f"unknown algebra name {name!r}")


def algebra_name(algebra: LabelAlgebra) -> Optional[str]:
    """Catalog or builtin name of `algebra`, if it has one."""
    if isinstance(algebra, BuiltinAlgebra):
        return algebra.builtin_id
    for name, entry in CATALOG.items():
        if entry == algebra:
            return name
    return None


def _fresh_name(taken, base: str) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def validate_algebra(algebra: LabelAlgebra, rng_seed: int = 0, samples: int = 50) -> ValidationReport:
    """Check every declared axiom; structural defects are reported separately.

    Finite tables are checked exhaustively.  Builtins get a randomized
    smoke check with exact arithmetic.
    """
    if isinstance(algebra, BuiltinAlgebra):
        return _validate_builtin(algebra, rng_seed, samples)
    return _validate_table(algebra)


def _validate_table(a: TableAlgebra) -> ValidationReport:
    report = ValidationReport(subject="finite-table algebra")
    n = a.size
    if n == 0:
        report.add(STRUCTURE, "empty", "algebra has no elements")
        return report
    if len(set(a.elements)) != n:
        report.add(STRUCTURE, "duplicate-names", "element names are not distinct")
    tables = [("mul", a.mul_table)]
    if a.add_table is not None:
        tables.append(("add", a.add_table))
    for label, table in tables:
        if len(table) != n * n:
            report.add(
                STRUCTURE,
                "non-square",
                f"{label} table has {len(table)} entries, expected {n * n}",
            )
        elif any(not isinstance(v, int) or not (0 <= v < n) for v in table):
            bad = next(v for v in table if not isinstance(v, int) or not (0 <= v < n))
            report.add(STRUCTURE, "out-of-range", f"{label} table entry {bad!r} is not an element index")
    if not isinstance(a.unit, int) or not (0 <= a.unit < n):
        report.add(STRUCTURE, "out-of-range", f"unit index {a.unit!r} is not an element index")
    if a.add_table is not None and (not isinstance(a.zero_index, int) or not (0 <= a.zero_index < n)):
        report.add(STRUCTURE, "out-of-range", f"zero index {a.zero_index!r} is not an element index")
    if a.add_table is None and a.zero_index is not None:
        report.add(STRUCTURE, "zero-without-add", "zero declared but no addition table")
    if not report.ok:
        return report  # axiom checks need a well-formed table

    names = a.elements
    elems = range(n)

    def check_monoid(op, unit, label):
        for x in elems:
            if op(unit, x) != x or op(x, unit) != x:
                report.add(
                    AXIOM, "unit", f"{label}: {names[unit]} is not a unit at {names[x]}", (x,)
                )
        for x, y, z in itertools.product(elems, repeat=3):
            if op(op(x, y), z) != op(x, op(y, z)):
                report.add(
                    AXIOM,
                    "associativity",
                    f"{label}: ({names[x]}*{names[y]})*{names[z]} != {names[x]}*({names[y]}*{names[z]})",
                    (x, y, z),
                )

    check_monoid(a.mul, a.unit, "mul")
    if a.flags.commutative:
        for x, y in itertools.combinations(elems, 2):
            if a.mul(x, y) != a.mul(y, x):
                report.add(
                    AXIOM,
                    "commutativity",
                    f"mul: {names[x]}*{names[y]} != {names[y]}*{names[x]}",
                    (x, y),
                )

    if a.add_table is not None:
        zero = a.zero_index
        check_monoid(a.add, zero, "add")
        # rig addition is commutative by definition, whatever the flags say
        for x, y in itertools.combinations(elems, 2):
            if a.add(x, y) != a.add(y, x):
                report.add(
                    AXIOM,
                    "commutativity",
                    f"add: {names[x]}+{names[y]} != {names[y]}+{names[x]}",
                    (x, y),
                )
        for r, s, t in itertools.product(elems, repeat=3):
            if a.mul(r, a.add(s, t)) != a.add(a.mul(r, s), a.mul(r, t)):
                report.add(
                    AXIOM,
                    "distributivity-left",
                    f"{names[r]}*({names[s]}+{names[t]}) != {names[r]}*{names[s]} + {names[r]}*{names[t]}",
                    (r, s, t),
                )
            if a.mul(a.add(r, s), t) != a.add(a.mul(r, t), a.mul(s, t)):
                report.add(
                    AXIOM,
                    "distributivity-right",
                    f"({names[r]}+{names[s]})*{names[t]} != {names[r]}*{names[t]} + {names[s]}*{names[t]}",
                    (r, s, t),
                )
        for x in elems:
            if a.mul(zero, x) != zero or a.mul(x, zero) != zero:
                report.add(AXIOM, "absorption", f"0*{names[x]} or {names[x]}*0 is not 0", (x,))

    if a.flags.cancellative:
        ok, witness = is_cancellative(a)
        if not ok:
            c, d, e = witness
            report.add(
                AXIOM,
                "cancellativity",
                f"{names[c]}+{names[e]} = {names[d]}+{names[e]} but {names[c]} != {names[d]}",
                witness,
            )
    return report


def _validate_builtin(a: BuiltinAlgebra, rng_seed: int, samples: int) -> ValidationReport:
    report = ValidationReport(subject=f"builtin algebra {a.builtin_id}")
    rng = random.Random(rng_seed)
    draws = [a.sample(rng) for _ in range(samples)]
    for x, y, z in zip(draws, draws[1:], draws[2:]):
        if a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z)):
            report.add(AXIOM, "associativity", f"failed on sample ({x}, {y}, {z})", (x, y, z))
        if a.flags.commutative and a.mul(x, y) != a.mul(y, x):
            report.add(AXIOM, "commutativity", f"failed on sample ({x}, {y})", (x, y))
    for x in draws:
        if a.mul(a.one, x) != x or a.mul(x, a.one) != x:
            report.add(AXIOM, "unit", f"failed on sample {x}", (x,))
    if a.is_rig:
        for x, y, z in zip(draws, draws[1:], draws[2:]):
            if a.mul(x, a.add(y, z)) != a.add(a.mul(x, y), a.mul(x, z)):
                report.add(AXIOM, "distributivity-left", f"failed on sample ({x}, {y}, {z})", (x, y, z))
        for x in draws:
            if a.mul(a.zero, x) != a.zero:
                report.add(AXIOM, "absorption", f"failed on sample {x}", (x,))
    return report


def is_cancellative(algebra: LabelAlgebra):
    """Decide c + e = d + e  =>  c = d for the coefficient view.

    Returns ``(True, None)`` or ``(False, (c, d, e))`` with a witness triple.
    Finite tables are searched exhaustively; builtins have known answers.
    """
    if isinstance(algebra, BuiltinAlgebra):
        witness = algebra._ops.cancellation_witness
        return (witness is None, witness)
    if algebra.add_table is None and not algebra.flags.commutative:
        raise ValueError("cancellativity is asked of a commutative (coefficient) monoid")
    n = algebra.size
    for e in range(n):
        seen: dict[int, int] = {}
        for c in range(n):
            value = algebra.add(c, e)
            if value in seen and seen[value] != c:
                return False, (seen[value], c, e)
            seen.setdefault(value, c)
    return True, None


def adjoin_zero(algebra: TableAlgebra) -> TableAlgebra:
    """Extend a finite monoid with a new absorbing element."""
    _require_plain_table(algebra, "adjoin_zero")
    n = algebra.size
    name = _fresh_name(algebra.elements, "0")
    table = []
    for a in range(n + 1):
        for b in range(n + 1):
            table.append(algebra.mul(a, b) if a < n and b < n else n)
    flags = Flags(commutative=algebra.flags.commutative, cancellative=False)
    return TableAlgebra(algebra.elements + (name,), tuple(table), algebra.unit, flags=flags)


def adjoin_identity(algebra: TableAlgebra) -> TableAlgebra:
    """Extend a finite monoid with a new identity; the old unit keeps its products."""
    _require_plain_table(algebra, "adjoin_identity")
    n = algebra.size
    name = _fresh_name(algebra.elements, "I")
    table = []
    for a in range(n + 1):
        for b in range(n + 1):
            if a == n:
                table.append(b if b < n else n)
            elif b == n:
                table.append(a)
            else:
                table.append(algebra.mul(a, b))
    flags = Flags(commutative=algebra.flags.commutative, cancellative=False)
    return TableAlgebra(algebra.elements + (name,), tuple(table), unit=n, flags=flags)


def product_algebra(left: TableAlgebra, right: TableAlgebra) -> TableAlgebra:
    """Componentwise product of two finite algebras; elements are named "(a,b)"."""
    if not isinstance(left, TableAlgebra) or not isinstance(right, TableAlgebra):
        raise ValueError("product_algebra needs two finite-table algebras")
    nl, nr = left.size, right.size
    names = tuple(f"({a},{b})" for a in left.elements for b in right.elements)

    def pair(i: int, j: int) -> int:
        return i * nr + j

    def componentwise(op_l, op_r):
        table = []
        for a in range(nl):
            for b in range(nr):
                for c in range(nl):
                    for d in range(nr):
                        table.append(pair(op_l(a, c), op_r(b, d)))
        return tuple(table)

    mul = componentwise(left.mul, right.mul)
    add = zero = None
    if left.is_rig and right.is_rig:
        add = componentwise(left.add, right.add)
        zero = pair(left.zero_index, right.zero_index)
    flags = Flags(
        commutative=left.flags.commutative and right.flags.commutative,
        cancellative=left.flags.cancellative and right.flags.cancellative,
    )
    return TableAlgebra(names, mul, pair(left.unit, right.unit), add, zero, flags)


POWER_RIG_LIMIT = 5


def power_rig(algebra: TableAlgebra) -> TableAlgebra:
    """The rig of subsets of a finite monoid: union as addition, elementwise
    products as multiplication.  Subsets are encoded as bitmasks over the
    element order, so the zero (empty set) is element 0.
    """
    _require_plain_table(algebra, "power_rig")
    n = algebra.size
    if n > POWER_RIG_LIMIT:
        raise ValueError(f"power_rig limited to {POWER_RIG_LIMIT} base elements, got {n}")
    subsets = range(1 << n)

    def members(mask: int):
        return [i for i in range(n) if mask >> i & 1]

    names = tuple("{" + ",".join(algebra.elements[i] for i in members(m)) + "}" for m in subsets)
    add = tuple(x | y for x in subsets for y in subsets)
    mul = []
    for x in subsets:
        mx = members(x)
        for y in subsets:
            out = 0
            for i in mx:
                for j in members(y):
                    out |= 1 << algebra.mul(i, j)
            mul.append(out)
    flags = Flags(commutative=algebra.flags.commutative, cancellative=False)
    return TableAlgebra(names, tuple(mul), unit=1 << algebra.unit, add_table=add, zero_index=0, flags=flags)


def _require_plain_table(algebra, op_name: str) -> None:
    if not isinstance(algebra, TableAlgebra):
        raise ValueError(f"{op_name} only supports finite-table algebras")
    if algebra.is_rig:
        raise ValueError(f"{op_name} acts on plain monoids, not rigs")


@dataclass(frozen=True)
class MonoidHom:
    """A map between label algebras, checkable as a homomorphism.

    ``mapping`` lists the image of every element of a finite source;
    ``fn`` implements maps out of a builtin source.  ``respects`` declares
    which structure the map preserves: "mul", "add", or both.
    """

    source: LabelAlgebra
    target: LabelAlgebra
    mapping: Optional[tuple] = None
    fn: Optional[Callable[[Element], Element]] = None
    name: str = ""
    respects: tuple[str, ...] = ("mul",)

    def __post_init__(self):
        if (self.mapping is None) == (self.fn is None):
            raise ValueError("exactly one of mapping/fn must be given")
        if self.mapping is not None and not isinstance(self.source, TableAlgebra):
            raise ValueError("element mappings need a finite source")


def apply_hom(hom: MonoidHom, x: Element) -> Element:
    if not hom.source.contains(x):
        raise KeyError(f"{x!r} is not in the hom's source algebra")
    if hom.mapping is not None:
        return hom.mapping[x]
    return hom.fn(x)


def validate_hom(hom: MonoidHom, rng_seed: int = 0, samples: int = 50) -> ValidationReport:
    """Check the homomorphism laws for every declared operation.

    Exhaustive over finite sources; randomized smoke check otherwise.
    """
    report = ValidationReport(subject=f"hom {hom.name or '(anonymous)'}")
    src, dst = hom.source, hom.target
    if isinstance(src, TableAlgebra):
        pairs = itertools.product(src.iter_elements(), repeat=2)
        singles = list(src.iter_elements())
    else:
        rng = random.Random(rng_seed)
        singles = [src.sample(rng) for _ in range(samples)]
        pairs = list(zip(singles, reversed(singles)))
    for x in singles:
        if not dst.contains(apply_hom(hom, x)):
            report.add(STRUCTURE, "out-of-target", f"image of {src.label_text(x)} is not in the target")
            return report
    if "mul" in hom.respects:
        if apply_hom(hom, src.one) != dst.one:
            report.add(AXIOM, "unit", "unit is not sent to the unit", (src.one,))
    if "add" in hom.respects:
        if apply_hom(hom, src.zero) != dst.zero:
            report.add(AXIOM, "zero", "zero is not sent to the zero", (src.zero,))
    for a, b in pairs:
        if "mul" in hom.respects:
            if apply_hom(hom, src.mul(a, b)) != dst.mul(apply_hom(hom, a), apply_hom(hom, b)):
                report.add(
                    AXIOM,
                    "multiplicativity",
                    f"image of {src.label_text(a)}*{src.label_text(b)} is not the product of images",
                    (a, b),
                )
        if "add" in hom.respects:
            if apply_hom(hom, src.add(a, b)) != dst.add(apply_hom(hom, a), apply_hom(hom, b)):
                report.add(
                    AXIOM,
                    "additivity",
                    f"image of {src.label_text(a)}+{src.label_text(b)} is not the sum of images",
                    (a, b),
                )
    return report


def compose_homs(outer: MonoidHom, inner: MonoidHom) -> MonoidHom:
    if inner.target != outer.source:
        raise ValueError("homs do not compose: target/source mismatch")
    respects = tuple(r for r in inner.respects if r in outer.respects)
    name = f"{outer.name or '?'} . {inner.name or '?'}"
    if inner.mapping is not None:
        mapping = tuple(apply_hom(outer, y) for y in inner.mapping)
        return MonoidHom(inner.source, outer.target, mapping=mapping, name=name, respects=respects)
    return MonoidHom(
        inner.source,
        outer.target,
        fn=lambda x: apply_hom(outer, apply_hom(inner, x)),
        name=name,
        respects=respects,
    )


def sign_hom() -> MonoidHom:
    """Exact rationals under multiplication to {+, 0, -}: keep only the sign."""
    sign0 = CATALOG["SIGN0"]

    def to_sign(q: Fraction) -> int:
        q = Fraction(q)
        if q > 0:
            return 0
        if q == 0:
            return 1
        return 2

    return MonoidHom(BuiltinAlgebra("RatMulMonoid"), sign0, fn=to_sign, name="sign")


def sign_section() -> MonoidHom:
    """Default quantitative reading of {+, 0, -}: a right inverse of `sign_hom`."""
    sign0 = CATALOG["SIGN0"]
    return MonoidHom(
        sign0,
        BuiltinAlgebra("RatMulMonoid"),
        mapping=(Fraction(1), Fraction(0), Fraction(-1)),
        name="sign-section",
    )


def collapse_hom(source: LabelAlgebra) -> MonoidHom:
    """The unique map to the one-element algebra; discards the labeling."""
    trivial = BuiltinAlgebra("TrivialOne")
    if isinstance(source, TableAlgebra):
        return MonoidHom(source, trivial, mapping=(1,) * source.size, name="collapse")
    return MonoidHom(source, trivial, fn=lambda x: 1, name="collapse")
