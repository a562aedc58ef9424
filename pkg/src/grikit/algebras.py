"""Finite-dimensional central simple algebras over an exact base field.

An algebra is described by an ordered basis whose first element is the
multiplicative identity, together with the structure-constant table of all
basis products.  Nothing is trusted: unitality and associativity are checked
on every basis triple at construction, anti-automorphism candidates are
checked on every basis pair, and centrality is detected by computing
commutators rather than declared.

Matrix algebras M_n(F_p) are not division rings, but they make faithful
desk-scale identity oracles; operations that require invertibility report
`NotInvertible` instead of assuming it.
"""

from __future__ import annotations

from fractions import Fraction

from . import _linalg
from .errors import (
    DescriptorMismatch,
    InvalidAlgebra,
    InvalidAntiAutomorphism,
    InvalidInput,
    NotInvertible,
    NoWitnessFound,
)
from .fields import PrimeField, RationalField, field_from_json


class AlgebraDescriptor:
    """Basis, structure constants, and base field of one algebra.

    `table[s][t]` holds the coordinates of `basis[s] * basis[t]`.
    Immutable after construction; safe to share between threads.
    """

    def __init__(self, kind, params, field, basis_labels, table,
                 basis_matrices=None):
        self.kind = kind
        self.params = dict(params)
        self.field = field
        self.basis_labels = tuple(basis_labels)
        self.dimension = len(self.basis_labels)
        self.table = tuple(tuple(tuple(row) for row in by_t) for by_t in table)
        self.basis_matrices = basis_matrices
        self._label_index = {lab: t for t, lab in enumerate(self.basis_labels)}
        self._check_shape()
        self._check_identity_first()
        self._check_associativity()
        if kind == "quaternion":
            self._check_quaternion_relations()

    # -- construction-time verification ------------------------------------

    def _check_shape(self):
        d = self.dimension
        if len(self._label_index) != d:
            raise InvalidAlgebra("duplicate basis labels")
        if len(self.table) != d or any(
                len(by_t) != d or any(len(row) != d for row in by_t)
                for by_t in self.table):
            raise InvalidAlgebra("structure table is not dimension^3")

    def _check_identity_first(self):
        d = self.dimension
        for t in range(d):
            e_t = tuple(self.field.one() if k == t else self.field.zero()
                        for k in range(d))
            if self.table[0][t] != e_t or self.table[t][0] != e_t:
                raise InvalidAlgebra(
                    f"basis[0]={self.basis_labels[0]!r} is not the identity")

    def _mul_coords(self, x, y):
        """Bilinear product of two coordinate tuples via the table."""
        zero = self.field.zero()
        out = [zero] * self.dimension
        for s, xs in enumerate(x):
            if self.field.is_zero(xs):
                continue
            for t, yt in enumerate(y):
                if self.field.is_zero(yt):
                    continue
                c = xs * yt
                for k, r in enumerate(self.table[s][t]):
                    if not self.field.is_zero(r):
                        out[k] = out[k] + c * r
        return tuple(out)

    def _check_associativity(self):
        d = self.dimension
        basis = [tuple(self.field.one() if k == t else self.field.zero()
                       for k in range(d)) for t in range(d)]
        for s in range(d):
            for t in range(d):
                st = self.table[s][t]
                for u in range(d):
                    left = self._mul_coords(st, basis[u])
                    right = self._mul_coords(basis[s], self.table[t][u])
                    if left != right:
                        raise InvalidAlgebra(
                            "structure constants are not associative at "
                            f"({self.basis_labels[s]}, {self.basis_labels[t]}, "
                            f"{self.basis_labels[u]})")

    def _check_quaternion_relations(self):
        a, b = self.params["a"], self.params["b"]
        i, j, k = (self.basis_element(t) for t in (1, 2, 3))
        if (i * i != self.from_scalar(a) or j * j != self.from_scalar(b)
                or i * j != k or j * i != -k):
            raise InvalidAlgebra("quaternion relations fail in the table")

    # -- element constructors ----------------------------------------------

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, (self.field.zero(),) * self.dimension)

    def one(self) -> "AlgebraElement":
        return self.basis_element(0)

    def basis_element(self, t: int) -> "AlgebraElement":
        coords = tuple(self.field.one() if k == t else self.field.zero()
                       for k in range(self.dimension))
        return AlgebraElement(self, coords)

    def from_scalar(self, c) -> "AlgebraElement":
        coords = (c,) + (self.field.zero(),) * (self.dimension - 1)
        return AlgebraElement(self, coords)

    def element(self, coeffs: dict) -> "AlgebraElement":
        """Build an element from a {label: coefficient} mapping."""
        coords = [self.field.zero()] * self.dimension
        for lab, c in coeffs.items():
            if lab not in self._label_index:
                raise InvalidInput(f"unknown basis label {lab!r}")
            coords[self._label_index[lab]] = self._as_scalar(c)
        return AlgebraElement(self, tuple(coords))

    def from_coords(self, coords) -> "AlgebraElement":
        coords = tuple(self._as_scalar(c) for c in coords)
        if len(coords) != self.dimension:
            raise InvalidInput("coordinate vector has wrong length")
        return AlgebraElement(self, coords)

    def _as_scalar(self, c):
        if isinstance(c, int):
            return self.field.of(c)
        if isinstance(c, str):
            return self.field.parse(c)
        return c

    def label_of(self, t: int) -> str:
        return self.basis_labels[t]

    def index_of_label(self, lab: str) -> int:
        if lab not in self._label_index:
            raise InvalidInput(f"unknown basis label {lab!r}")
        return self._label_index[lab]

    def basis_product(self, s: int, t: int):
        return self.table[s][t]

    # -- matrix-kind conversions --------------------------------------------

    def from_matrix(self, rows) -> "AlgebraElement":
        if self.basis_matrices is None:
            raise InvalidInput(f"{self.kind} algebra has no matrix form")
        n = self.params["n"]
        flat = [self._as_scalar(rows[i][j]) for i in range(n) for j in range(n)]
        cols = [[self.basis_matrices[t][i][j] for t in range(self.dimension)]
                for i in range(n) for j in range(n)]
        coords = _linalg.solve(cols, flat, self.field)
        if coords is None:  # cannot happen: basis spans
            raise InvalidAlgebra("matrix basis does not span")
        return AlgebraElement(self, tuple(coords))

    def to_matrix(self, x: "AlgebraElement"):
        if self.basis_matrices is None:
            raise InvalidInput(f"{self.kind} algebra has no matrix form")
        n = self.params["n"]
        zero = self.field.zero()
        rows = [[zero] * n for _ in range(n)]
        for t, c in enumerate(x.coords):
            if self.field.is_zero(c):
                continue
            for i in range(n):
                for j in range(n):
                    rows[i][j] = rows[i][j] + c * self.basis_matrices[t][i][j]
        return [tuple(r) for r in rows]

    # -- canonical enumeration (finite base fields) ---------------------------

    @property
    def element_count(self):
        if self.field.size is None:
            return None
        return self.field.size ** self.dimension

    def element_at(self, idx: int) -> "AlgebraElement":
        """idx-th element in canonical order: coordinate vectors sorted
        lexicographically with the first coordinate most significant."""
        p = self.field.size
        if p is None:
            raise InvalidInput("algebra over Q is not enumerable")
        coords = []
        for t in range(self.dimension):
            power = p ** (self.dimension - 1 - t)
            coords.append(self.field.of((idx // power) % p))
        return AlgebraElement(self, tuple(coords))

    def index_of(self, x: "AlgebraElement") -> int:
        p = self.field.size
        if p is None:
            raise InvalidInput("algebra over Q is not enumerable")
        idx = 0
        for c in x.coords:
            idx = idx * p + c.residue
        return idx

    def random_element(self, rng, lo: int = -9, hi: int = 9,
                       nonzero: bool = False) -> "AlgebraElement":
        while True:
            coords = tuple(self.field.random(rng, lo, hi)
                           for _ in range(self.dimension))
            x = AlgebraElement(self, coords)
            if not nonzero or not x.is_zero():
                return x

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, AlgebraDescriptor)
                and self.kind == other.kind
                and self.field == other.field
                and self.basis_labels == other.basis_labels
                and self.table == other.table)

    def __hash__(self):
        return hash((self.kind, self.field, self.basis_labels))

    def __repr__(self):
        if self.kind == "quaternion":
            a, b = self.params["a"], self.params["b"]
            return f"Quaternion({a},{b}; {self.field!r})"
        if self.kind == "matrix":
            return f"M{self.params['n']}({self.field!r})"
        return f"Algebra({self.kind}, dim {self.dimension})"

    def to_json(self):
        cfg = dict(self.field.to_json())
        cfg["kind"] = self.kind
        if self.kind == "quaternion":
            cfg["a"] = self.field.format(self.params["a"])
            cfg["b"] = self.field.format(self.params["b"])
        elif self.kind == "matrix":
            cfg["n"] = self.params["n"]
        return cfg


class AlgebraElement:
    """Coordinate vector over the descriptor's basis; immutable value."""

    __slots__ = ("descriptor", "coords")

    def __init__(self, descriptor: AlgebraDescriptor, coords: tuple):
        self.descriptor = descriptor
        self.coords = coords

    def _same(self, other):
        if not isinstance(other, AlgebraElement):
            raise DescriptorMismatch(f"expected AlgebraElement, got {other!r}")
        if not (self.descriptor is other.descriptor
                or self.descriptor == other.descriptor):
            raise DescriptorMismatch("elements of different algebras")

    def __add__(self, other):
        self._same(other)
        return AlgebraElement(self.descriptor, tuple(
            a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same(other)
        return AlgebraElement(self.descriptor, tuple(
            a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.descriptor, tuple(-a for a in self.coords))

    def __mul__(self, other):
        self._same(other)
        return AlgebraElement(
            self.descriptor,
            self.descriptor._mul_coords(self.coords, other.coords))

    def scale(self, c) -> "AlgebraElement":
        c = self.descriptor._as_scalar(c)
        return AlgebraElement(self.descriptor,
                              tuple(c * a for a in self.coords))

    def __rmul__(self, c):
        if isinstance(c, AlgebraElement):
            return NotImplemented
        return self.scale(c)

    def is_zero(self) -> bool:
        return all(self.descriptor.field.is_zero(a) for a in self.coords)

    def inv(self) -> "AlgebraElement":
        """Two-sided inverse, by solving x*y = 1 exactly over the base field.

        Raises `NotInvertible` when the left-multiplication operator is
        singular; in a finite-dimensional unital algebra a right inverse is
        automatically two-sided.
        """
        d = self.descriptor.dimension
        field = self.descriptor.field
        products = [self.descriptor._mul_coords(
            self.coords,
            tuple(field.one() if k == t else field.zero() for k in range(d)))
            for t in range(d)]
        cols = [[products[t][k] for t in range(d)] for k in range(d)]
        rhs = [field.one()] + [field.zero()] * (d - 1)
        sol = _linalg.solve(cols, rhs, field)
        if sol is None:
            raise NotInvertible(f"{self!r} has no inverse")
        return AlgebraElement(self.descriptor, tuple(sol))

    def is_invertible(self) -> bool:
        try:
            self.inv()
            return True
        except NotInvertible:
            return False

    def is_central(self) -> bool:
        """True iff the element commutes with every basis element."""
        for t in range(self.descriptor.dimension):
            e_t = self.descriptor.basis_element(t)
            if self * e_t != e_t * self:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.descriptor == other.descriptor
                and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        field = self.descriptor.field
        parts = []
        for t, c in enumerate(self.coords):
            if field.is_zero(c):
                continue
            lab = self.descriptor.basis_labels[t]
            cs = str(c.residue) if hasattr(c, "residue") else str(c)
            if t == 0:
                parts.append(cs)
            elif cs == "1":
                parts.append(lab)
            elif cs == "-1":
                parts.append(f"-{lab}")
            else:
                parts.append(f"{cs}*{lab}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def coord_strings(self):
        field = self.descriptor.field
        return [str(c.residue) if hasattr(c, "residue") else field.format(c)
                for c in self.coords]


# -- standard constructions --------------------------------------------------

def quaternion_algebra(field, a, b) -> AlgebraDescriptor:
    """The quaternion algebra (a, b / F): i^2 = a, j^2 = b, ij = k = -ji.

    `quaternion_algebra(RationalField(), -1, -1)` is the Hamilton algebra.
    """
    a = field.of(a) if isinstance(a, int) else a
    b = field.of(b) if isinstance(b, int) else b
    zero, one = field.zero(), field.one()

    def vec(c0=zero, c1=zero, c2=zero, c3=zero):
        return (c0, c1, c2, c3)

    ab = a * b
    table = [
        [vec(one), vec(c1=one), vec(c2=one), vec(c3=one)],
        [vec(c1=one), vec(a), vec(c3=one), vec(c2=a)],
        [vec(c2=one), vec(c3=-one), vec(b), vec(c1=-b)],
        [vec(c3=one), vec(c2=-a), vec(c1=b), vec(-ab)],
    ]
    return AlgebraDescriptor("quaternion", {"a": a, "b": b}, field,
                             ("1", "i", "j", "k"), table)


def hamilton_quaternions() -> AlgebraDescriptor:
    return quaternion_algebra(RationalField(), -1, -1)


def matrix_algebra(field, n: int) -> AlgebraDescriptor:
    """M_n over the base field, with basis [Id] + all E_ij except E_11.

    The identity must head the basis, so E_11 is traded for Id
    (E_11 = Id - E_22 - ... - E_nn in this basis).
    """
    if n < 2:
        raise InvalidInput("matrix algebra needs n >= 2")
    zero, one = field.zero(), field.one()

    def unit_matrix(i, j):
        return tuple(tuple(one if (r, c) == (i, j) else zero for c in range(n))
                     for r in range(n))

    ident = tuple(tuple(one if r == c else zero for c in range(n))
                  for r in range(n))
    mats = [ident]
    labels = ["1"]
    for i in range(n):
        for j in range(n):
            if (i, j) == (0, 0):
                continue
            mats.append(unit_matrix(i, j))
            labels.append(f"e{i + 1}{j + 1}")

    d = n * n

    def mat_mul(x, y):
        return tuple(tuple(
            sum((x[r][k] * y[k][c] for k in range(n)), zero)
            for c in range(n)) for r in range(n))

    # change of basis: columns are the basis matrices, flattened row-major
    cols = [[mats[t][i][j] for t in range(d)]
            for i in range(n) for j in range(n)]

    def coords_of(mat):
        flat = [mat[i][j] for i in range(n) for j in range(n)]
        return tuple(_linalg.solve(cols, flat, field))

    table = [[coords_of(mat_mul(mats[s], mats[t])) for t in range(d)]
             for s in range(d)]
    return AlgebraDescriptor("matrix", {"n": n}, field, labels, table,
                             basis_matrices=mats)


# -- anti-automorphisms -------------------------------------------------------

class AntiAutomorphism:
    """A base-field-fixing anti-multiplicative bijection, stored by its
    action on the basis.

    `verified_order_floor` is the largest m for which sigma^i != Id was
    checked (1 <= i <= m); construction fails if any check fails.
    """

    def __init__(self, descriptor: AlgebraDescriptor, images,
                 verified_order_floor: int = 1, name: str | None = None):
        self.descriptor = descriptor
        self.images = tuple(images)
        self.verified_order_floor = verified_order_floor
        self.name = name
        self._inverse_images = None
        self._verify()

    def _verify(self):
        desc = self.descriptor
        d = desc.dimension
        if len(self.images) != d:
            raise InvalidAntiAutomorphism("one image per basis element required")
        for img in self.images:
            if img.descriptor != desc:
                raise InvalidAntiAutomorphism("image from a different algebra")
        if self.images[0] != desc.one():
            raise InvalidAntiAutomorphism("sigma(1) != 1")
        rows = [list(img.coords) for img in self.images]
        if _linalg.rank(rows, desc.field) != d:
            raise InvalidAntiAutomorphism("sigma is not bijective")
        for s in range(d):
            es = desc.basis_element(s)
            for t in range(d):
                et = desc.basis_element(t)
                if self.apply(es * et) != self.apply(et) * self.apply(es):
                    raise InvalidAntiAutomorphism(
                        "sigma(xy) != sigma(y)sigma(x) at basis pair "
                        f"({desc.basis_labels[s]}, {desc.basis_labels[t]})")
        if self.verified_order_floor < 1:
            raise InvalidAntiAutomorphism("verified_order_floor must be >= 1")
        for i in range(1, self.verified_order_floor + 1):
            if all(self.apply(desc.basis_element(t), i) == desc.basis_element(t)
                   for t in range(d)):
                raise InvalidAntiAutomorphism(
                    f"sigma^{i} = Id, below the claimed order floor")

    def _inverse(self):
        if self._inverse_images is None:
            rows = [list(img.coords) for img in self.images]
            inv = _linalg.invert(rows, self.descriptor.field)
            self._inverse_images = tuple(
                AlgebraElement(self.descriptor, tuple(row)) for row in inv)
        return self._inverse_images

    def apply(self, x: AlgebraElement, power: int = 1) -> AlgebraElement:
        """sigma^power applied to x; negative powers use the inverse map."""
        if x.descriptor != self.descriptor:
            raise DescriptorMismatch("element from a different algebra")
        if power == 0:
            return x
        images = self.images if power > 0 else self._inverse()
        out = x
        for _ in range(abs(power)):
            field = self.descriptor.field
            acc = self.descriptor.zero()
            for t, c in enumerate(out.coords):
                if not field.is_zero(c):
                    acc = acc + images[t].scale(c)
            out = acc
        return out

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        return self.apply(x, 1)

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, AntiAutomorphism)
                and self.descriptor == other.descriptor
                and self.images == other.images)

    def __hash__(self):
        return hash((self.descriptor, tuple(img.coords for img in self.images)))

    def __repr__(self):
        return f"AntiAutomorphism({self.name or 'custom'})"

    def to_json(self):
        if self.name:
            return {"name": self.name}
        return {"matrix": [img.coord_strings() for img in self.images],
                "order_floor": self.verified_order_floor}


def conjugation(descriptor: AlgebraDescriptor) -> AntiAutomorphism:
    """Quaternion conjugation: fixes 1, negates i, j, k."""
    if descriptor.kind != "quaternion":
        raise InvalidInput("conjugation is the quaternion involution")
    images = [descriptor.basis_element(0)] + [
        -descriptor.basis_element(t) for t in (1, 2, 3)]
    return AntiAutomorphism(descriptor, images, 1, name="conjugation")


def transpose(descriptor: AlgebraDescriptor) -> AntiAutomorphism:
    """Matrix transpose on M_n."""
    if descriptor.kind != "matrix":
        raise InvalidInput("transpose needs a matrix algebra")
    n = descriptor.params["n"]
    images = []
    for t in range(descriptor.dimension):
        mat = descriptor.basis_matrices[t]
        tmat = tuple(tuple(mat[j][i] for j in range(n)) for i in range(n))
        images.append(descriptor.from_matrix(tmat))
    return AntiAutomorphism(descriptor, images, 1, name="transpose")


def compose_inner(sigma: AntiAutomorphism, u: AlgebraElement,
                  verified_order_floor: int = 1) -> AntiAutomorphism:
    """x -> u * sigma(x) * u^-1; anti-multiplicativity is re-verified."""
    if u.descriptor != sigma.descriptor:
        raise DescriptorMismatch("conjugator from a different algebra")
    u_inv = u.inv()
    desc = sigma.descriptor
    images = [u * sigma.apply(desc.basis_element(t)) * u_inv
              for t in range(desc.dimension)]
    return AntiAutomorphism(desc, images, verified_order_floor)


# -- F-linear algebra utilities -----------------------------------------------

def f_rank(vectors) -> int:
    """Rank over the base field of the coordinate matrix, by exact
    Gaussian elimination.  The empty list has rank 0."""
    vectors = list(vectors)
    if not vectors:
        return 0
    desc = vectors[0].descriptor
    for v in vectors[1:]:
        if v.descriptor != desc:
            raise DescriptorMismatch("vectors from different algebras")
    return _linalg.rank([list(v.coords) for v in vectors], desc.field)


def independence_witness(A, a: AlgebraElement, rng_seed: int = 0,
                         max_tries: int = 200) -> AlgebraElement:
    """Find r such that A together with {a*r*v : v in A} is F-linearly
    independent (rank 2|A|).

    Basis elements are tried first, then seeded random elements, so shipped
    fixtures are deterministic.  Raises `NoWitnessFound` when the algebra is
    too small for 2|A| independent elements or the budget runs out.
    """
    import random

    A = list(A)
    if not A:
        raise InvalidInput("A must be nonempty")
    desc = A[0].descriptor
    if a.is_zero():
        raise InvalidInput("a must be nonzero")
    if f_rank(A) != len(A):
        raise InvalidInput("A must be F-linearly independent")
    if 2 * len(A) > desc.dimension:
        raise NoWitnessFound(
            f"no room for {2 * len(A)} independent elements in dimension "
            f"{desc.dimension}")
    rng = random.Random(rng_seed)
    tried = 0
    candidates = (desc.basis_element(t) for t in range(desc.dimension))
    while tried < max_tries:
        for r in candidates:
            tried += 1
            if f_rank(A + [a * r * v for v in A]) == 2 * len(A):
                return r
            if tried >= max_tries:
                break
        candidates = iter([desc.random_element(rng, nonzero=True)])
    raise NoWitnessFound(f"no witness within {max_tries} tries")


# -- JSON configuration -------------------------------------------------------

def algebra_from_json(config: dict) -> AlgebraDescriptor:
    """Decode an algebra definition, e.g.
    {"kind": "quaternion", "a": "-1", "b": "-1", "field": "Q"} or
    {"kind": "matrix", "n": 2, "field": "Fp", "p": 2}."""
    field = field_from_json(config)
    kind = config.get("kind")
    if kind == "quaternion":
        return quaternion_algebra(field, field.parse(str(config["a"])),
                                  field.parse(str(config["b"])))
    if kind == "matrix":
        return matrix_algebra(field, int(config["n"]))
    raise InvalidInput(f"unknown algebra kind {kind!r}")


def sigma_from_json(descriptor: AlgebraDescriptor,
                    config: dict) -> AntiAutomorphism:
    """Decode an anti-automorphism: a built-in {"name": ...} or an explicit
    row-major matrix of field-element strings (row t = image of basis t)."""
    if "name" in config:
        name = config["name"]
        if name == "conjugation":
            return conjugation(descriptor)
        if name == "transpose":
            return transpose(descriptor)
        raise InvalidInput(f"unknown built-in anti-automorphism {name!r}")
    if "matrix" in config:
        rows = config["matrix"]
        images = [descriptor.from_coords([descriptor.field.parse(str(v))
                                          for v in row]) for row in rows]
        return AntiAutomorphism(descriptor, images,
                                int(config.get("order_floor", 1)))
    raise InvalidInput("anti-automorphism config needs 'name' or 'matrix'")
