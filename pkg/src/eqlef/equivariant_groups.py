"""Finite groups, Weyl quotients, split automorphism groups, and twisted classes.

The module supplies the group-theoretic layer used by the invariant
computations:

* :class:`FiniteGroup` -- multiplication-table groups with validated axioms
  and named builtins ("Z2", "Z2xZ2", "Zn:k", "Sym:n"),
* :class:`Subgroup`, :func:`conjugacy_classes_of_subgroups`,
  :func:`weyl_group` -- subgroup enumeration and normalizer quotients,
* :class:`AutGroup` -- split extensions ℤᵏ ⋊ W with an integral W-action,
* :class:`TwistData`, :class:`TwistedClassSet`, :func:`twisted_classes` --
  twisted conjugacy a ∼ θ(w)·a + (φ_π − I)·m with canonical representatives,
* :class:`GroupRingElement` / :class:`GroupRingMatrix` -- finitely supported
  integer combinations of automorphism-group elements and matrices of them,
* :func:`pi1_projection` -- the trace projection onto twisted classes of the
  translation subgroup.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable, Mapping, Sequence

from .exact_algebra import IntMatrix

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "WeylGroup",
    "AutGroup",
    "TwistData",
    "TwistedClassSet",
    "GroupRingElement",
    "GroupRingMatrix",
    "conjugacy_classes_of_subgroups",
    "weyl_group",
    "twisted_classes",
    "pi1_projection",
]

_MINUS = "−"
_MIDDLE_DOT = "·"
_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


class FiniteGroup:
    """A finite group given by labels and a multiplication table.

    ``table[i][j]`` is the index of ``labels[i] * labels[j]``.  The group
    axioms (associativity, identity, inverses) are validated on
    construction.

    >>> g = FiniteGroup.builtin("Z2")
    >>> g.labels
    ('1', 'g')
    >>> g.multiply(1, 1)
    0
    """

    __slots__ = ("labels", "table", "identity", "_inverses")

    def __init__(self, labels: Sequence[str], table: Sequence[Sequence[int]]) -> None:
        label_tuple = tuple(str(label) for label in labels)
        n = len(label_tuple)
        if n == 0:
            raise ValueError("a group must have at least one element.")
        if len(set(label_tuple)) != n:
            raise ValueError("group element labels must be distinct.")
        row_tuples = tuple(tuple(int(v) for v in row) for row in table)
        if len(row_tuples) != n or any(len(row) != n for row in row_tuples):
            raise ValueError(
                f"multiplication table must be {n}×{n} to match {n} labels."
            )
        for i, row in enumerate(row_tuples):
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise ValueError(
                        f"table entry at ({i}, {j}) is {v}, outside 0..{n - 1}."
                    )
        identity = None
        for e in range(n):
            if all(row_tuples[e][x] == x and row_tuples[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("multiplication table has no identity element.")
        inverses = []
        for x in range(n):
            inverse = next(
                (y for y in range(n) if row_tuples[x][y] == identity and row_tuples[y][x] == identity),
                None,
            )
            if inverse is None:
                raise ValueError(f"element '{label_tuple[x]}' has no inverse.")
            inverses.append(inverse)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if row_tuples[row_tuples[a][b]][c] != row_tuples[a][row_tuples[b][c]]:
                        raise ValueError(
                            "multiplication table is not associative at "
                            f"('{label_tuple[a]}', '{label_tuple[b]}', '{label_tuple[c]}')."
                        )
        self.labels = label_tuple
        self.table = row_tuples
        self.identity = identity
        self._inverses = tuple(inverses)

    # -- builtins -----------------------------------------------------

    @classmethod
    def builtin(cls, name: str) -> "FiniteGroup":
        """Named builtin groups: "Z2", "Z2xZ2", "Zn:k", "Sym:n", "trivial"."""
        if name == "trivial":
            return cls.builtin("Zn:1")
        if name == "Z2":
            return cls(("1", "g"), ((0, 1), (1, 0)))
        if name == "Z2xZ2":
            labels = ("1", "g", "h", "gh")
            bits = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}
            index = {v: k for k, v in bits.items()}
            table = tuple(
                tuple(
                    index[((bits[i][0] + bits[j][0]) % 2, (bits[i][1] + bits[j][1]) % 2)]
                    for j in range(4)
                )
                for i in range(4)
            )
            return cls(labels, table)
        if name.startswith("Zn:"):
            try:
                k = int(name.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"malformed cyclic group name '{name}'; expected 'Zn:k'.")
            if k < 1:
                raise ValueError(f"cyclic group order must be positive, got {k}.")
            labels = tuple("1" if i == 0 else f"r{i}" for i in range(k))
            table = tuple(tuple((i + j) % k for j in range(k)) for i in range(k))
            return cls(labels, table)
        if name.startswith("Sym:"):
            try:
                n = int(name.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"malformed symmetric group name '{name}'; expected 'Sym:n'.")
            if n < 1:
                raise ValueError(f"symmetric group degree must be positive, got {n}.")
            perms = sorted(itertools.permutations(range(n)))
            index = {p: i for i, p in enumerate(perms)}
            labels = tuple("".join(str(v) for v in p) for p in perms)
            table = tuple(
                tuple(index[tuple(p[q[i]] for i in range(n))] for q in perms)
                for p in perms
            )
            return cls(labels, table)
        raise ValueError(
            f"unknown builtin group '{name}'; expected one of "
            "'Z2', 'Z2xZ2', 'Zn:k', 'Sym:n', 'trivial'."
        )

    # -- structure ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.labels)

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self._inverses[i]

    def conjugate(self, g: int, x: int) -> int:
        """g · x · g⁻¹."""
        return self.table[self.table[g][x]][self._inverses[g]]

    def element_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(
                f"unknown group element label '{label}'; known labels: {list(self.labels)}."
            )

    def restricted_to(self, members: Sequence[int]) -> "FiniteGroup":
        """The subgroup on ``members`` as a standalone group (labels kept)."""
        member_list = sorted(set(members))
        position = {m: i for i, m in enumerate(member_list)}
        for a in member_list:
            for b in member_list:
                if self.table[a][b] not in position:
                    raise ValueError(
                        f"elements {[self.labels[m] for m in member_list]} are not closed "
                        "under multiplication."
                    )
        labels = tuple(self.labels[m] for m in member_list)
        table = tuple(
            tuple(position[self.table[a][b]] for b in member_list) for a in member_list
        )
        return FiniteGroup(labels, table)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.labels == other.labels and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.labels, self.table))

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, labels={self.labels})"


class Subgroup:
    """A validated subgroup of a :class:`FiniteGroup`, stored as sorted indices.

    >>> g = FiniteGroup.builtin("Z2xZ2")
    >>> h = Subgroup.from_labels(g, ["1", "h"])
    >>> h.order
    2
    """

    __slots__ = ("parent", "members")

    def __init__(self, parent: FiniteGroup, members: Iterable[int]) -> None:
        member_tuple = tuple(sorted(set(int(m) for m in members)))
        if not member_tuple:
            raise ValueError("a subgroup must contain the identity element.")
        for m in member_tuple:
            if not 0 <= m < parent.order:
                raise ValueError(f"subgroup member index {m} outside the group.")
        member_set = set(member_tuple)
        if parent.identity not in member_set:
            raise ValueError("subgroup does not contain the identity element.")
        for a in member_tuple:
            if parent.inverse(a) not in member_set:
                raise ValueError(
                    f"subgroup is not closed under inverses at '{parent.labels[a]}'."
                )
            for b in member_tuple:
                if parent.table[a][b] not in member_set:
                    raise ValueError(
                        "subgroup is not closed under multiplication at "
                        f"('{parent.labels[a]}', '{parent.labels[b]}')."
                    )
        self.parent = parent
        self.members = member_tuple

    @classmethod
    def from_labels(cls, parent: FiniteGroup, labels: Iterable[str]) -> "Subgroup":
        return cls(parent, (parent.element_index(label) for label in labels))

    @classmethod
    def trivial(cls, parent: FiniteGroup) -> "Subgroup":
        return cls(parent, (parent.identity,))

    @classmethod
    def full(cls, parent: FiniteGroup) -> "Subgroup":
        return cls(parent, range(parent.order))

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def member_labels(self) -> tuple[str, ...]:
        return tuple(self.parent.labels[m] for m in self.members)

    def contains(self, element: int) -> bool:
        return element in self.members

    def conjugate_by(self, g: int) -> "Subgroup":
        return Subgroup(self.parent, (self.parent.conjugate(g, m) for m in self.members))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent == other.parent and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.parent, self.members))

    def __repr__(self) -> str:
        return f"Subgroup({list(self.member_labels)})"


def _closure(group: FiniteGroup, seed: Iterable[int]) -> frozenset[int]:
    current = set(seed)
    current.add(group.identity)
    changed = True
    while changed:
        changed = False
        for a in list(current):
            inv = group.inverse(a)
            if inv not in current:
                current.add(inv)
                changed = True
            for b in list(current):
                p = group.table[a][b]
                if p not in current:
                    current.add(p)
                    changed = True
    return frozenset(current)


def all_subgroups(g: FiniteGroup) -> list[Subgroup]:
    """All subgroups, found by growing generating sets one element at a time."""
    found = {frozenset({g.identity})}
    frontier = [frozenset({g.identity})]
    while frontier:
        next_frontier = []
        for current in frontier:
            for x in range(g.order):
                if x in current:
                    continue
                grown = _closure(g, current | {x})
                if grown not in found:
                    found.add(grown)
                    next_frontier.append(grown)
        frontier = next_frontier
    return sorted(
        (Subgroup(g, members) for members in found),
        key=lambda s: (s.order, s.members),
    )


def conjugacy_classes_of_subgroups(
    g: FiniteGroup,
) -> list[tuple[Subgroup, tuple[Subgroup, ...]]]:
    """Conjugacy classes of subgroups with deterministic representatives.

    Returns a list of ``(representative, class_members)`` pairs; the
    representative is the member with the smallest index tuple, and classes
    are ordered by (order, representative indices).

    >>> [rep.member_labels for rep, _ in conjugacy_classes_of_subgroups(FiniteGroup.builtin("Z2"))]
    [('1',), ('1', 'g')]
    """
    remaining = {s.members: s for s in all_subgroups(g)}
    classes = []
    while remaining:
        members, subgroup = min(remaining.items())
        orbit = {}
        for x in range(g.order):
            conjugated = subgroup.conjugate_by(x)
            orbit[conjugated.members] = conjugated
        for key in orbit:
            remaining.pop(key, None)
        ordered = tuple(orbit[key] for key in sorted(orbit))
        classes.append((ordered[0], ordered))
    classes.sort(key=lambda pair: (pair[0].order, pair[0].members))
    return classes


@dataclasses.dataclass(frozen=True)
class WeylGroup:
    """The quotient N_G(H)/H together with coset representatives.

    ``group`` is the quotient as a standalone :class:`FiniteGroup` whose
    element labels are the parent labels of the coset representatives;
    ``coset_representatives[i]`` is the parent index representing quotient
    element ``i``; ``cosets[i]`` lists the parent indices in that coset.
    """

    group: FiniteGroup
    parent: FiniteGroup
    subgroup: Subgroup
    coset_representatives: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]

    def coset_index_of(self, parent_element: int) -> int:
        """Quotient index of the coset containing a normalizer element."""
        for i, coset in enumerate(self.cosets):
            if parent_element in coset:
                return i
        raise ValueError(
            f"element '{self.parent.labels[parent_element]}' does not normalize the subgroup."
        )


def weyl_group(g: FiniteGroup, h: Subgroup) -> WeylGroup:
    """The normalizer quotient N_G(H)/H with coset representatives.

    >>> g = FiniteGroup.builtin("Z2")
    >>> weyl_group(g, Subgroup.trivial(g)).group.order
    2
    >>> weyl_group(g, Subgroup.full(g)).group.order
    1
    """
    if h.parent != g:
        raise ValueError("subgroup does not belong to the given group.")
    member_set = set(h.members)
    normalizer = [
        n
        for n in range(g.order)
        if all(g.conjugate(n, m) in member_set for m in h.members)
    ]
    cosets: dict[tuple[int, ...], None] = {}
    for n in normalizer:
        coset = tuple(sorted(g.table[n][m] for m in h.members))
        cosets.setdefault(coset, None)
    ordered_cosets = sorted(cosets, key=lambda coset: coset[0])
    representatives = tuple(coset[0] for coset in ordered_cosets)
    position = {coset: i for i, coset in enumerate(ordered_cosets)}

    def coset_of(n: int) -> tuple[int, ...]:
        return tuple(sorted(g.table[n][m] for m in h.members))

    labels = tuple(g.labels[rep] for rep in representatives)
    table = tuple(
        tuple(position[coset_of(g.table[a][b])] for b in representatives)
        for a in representatives
    )
    quotient = FiniteGroup(labels, table)
    if quotient.order * h.order != len(normalizer):
        raise ValueError("normalizer does not partition into whole cosets.")
    return WeylGroup(
        group=quotient,
        parent=g,
        subgroup=h,
        coset_representatives=representatives,
        cosets=tuple(ordered_cosets),
    )


class AutGroup:
    """The split extension ℤᵏ ⋊ W with integral W-action θ.

    Elements are pairs ``(vector, w)`` with ``vector`` a length-k integer
    tuple and ``w`` an index into ``weyl``; the product is
    ``(v, w)·(v', w') = (v + θ(w)·v', w·w')``.  ``action[w]`` is the matrix
    θ(w), validated to be a homomorphism into GL_k(ℤ).

    >>> aut = AutGroup.trivial()
    >>> aut.identity
    ((), 0)
    """

    __slots__ = ("pi1_rank", "weyl", "action")

    def __init__(
        self,
        pi1_rank: int,
        weyl: FiniteGroup,
        action: Sequence[IntMatrix] | None = None,
    ) -> None:
        if pi1_rank < 0:
            raise ValueError(f"translation rank must be nonnegative, got {pi1_rank}.")
        if action is None:
            action = tuple(IntMatrix.identity(pi1_rank) for _ in range(weyl.order))
        action = tuple(action)
        if len(action) != weyl.order:
            raise ValueError(
                f"need one action matrix per Weyl element ({weyl.order}), got {len(action)}."
            )
        for w, matrix in enumerate(action):
            if matrix.rows != pi1_rank or matrix.cols != pi1_rank:
                raise ValueError(
                    f"action matrix for '{weyl.labels[w]}' must be "
                    f"{pi1_rank}×{pi1_rank}, got {matrix.rows}×{matrix.cols}."
                )
            if pi1_rank and abs(matrix.det()) != 1:
                raise ValueError(
                    f"action matrix for '{weyl.labels[w]}' is not invertible over ℤ "
                    f"(determinant {matrix.det()})."
                )
        if action and action[weyl.identity] != IntMatrix.identity(pi1_rank):
            raise ValueError("action of the identity Weyl element must be the identity matrix.")
        for w1 in range(weyl.order):
            for w2 in range(weyl.order):
                if action[w1] @ action[w2] != action[weyl.multiply(w1, w2)]:
                    raise ValueError(
                        "action is not a homomorphism at "
                        f"('{weyl.labels[w1]}', '{weyl.labels[w2]}')."
                    )
        self.pi1_rank = pi1_rank
        self.weyl = weyl
        self.action = action

    @classmethod
    def trivial(cls) -> "AutGroup":
        return cls(0, FiniteGroup.builtin("trivial"))

    @property
    def identity(self) -> tuple[tuple[int, ...], int]:
        return ((0,) * self.pi1_rank, self.weyl.identity)

    @property
    def is_trivial(self) -> bool:
        return self.pi1_rank == 0 and self.weyl.order == 1

    def act(self, w: int, vector: Sequence[int]) -> tuple[int, ...]:
        return self.action[w].apply_to_vector(tuple(vector))

    def multiply(
        self,
        a: tuple[tuple[int, ...], int],
        b: tuple[tuple[int, ...], int],
    ) -> tuple[tuple[int, ...], int]:
        (va, wa), (vb, wb) = a, b
        moved = self.act(wa, vb)
        return (
            tuple(x + y for x, y in zip(va, moved)),
            self.weyl.multiply(wa, wb),
        )

    def inverse(self, a: tuple[tuple[int, ...], int]) -> tuple[tuple[int, ...], int]:
        va, wa = a
        winv = self.weyl.inverse(wa)
        moved = self.act(winv, va)
        return (tuple(-x for x in moved), winv)

    def render_element(self, vector: Sequence[int], w: int) -> str:
        """Human-readable basis element: "1", "g", "t³", "t³·g", "t^(1,0)"."""
        vector = tuple(vector)
        translation = ""
        if any(vector):
            if self.pi1_rank == 1:
                translation = "t" + str(vector[0]).translate(_SUPERSCRIPTS) if vector[0] != 1 else "t"
            else:
                translation = "t^(" + ",".join(str(v) for v in vector) + ")"
        weyl_part = "" if w == self.weyl.identity else self.weyl.labels[w]
        if translation and weyl_part:
            return f"{translation}{_MIDDLE_DOT}{weyl_part}"
        if translation:
            return translation
        if weyl_part:
            return weyl_part
        return "1"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AutGroup):
            return NotImplemented
        return (
            self.pi1_rank == other.pi1_rank
            and self.weyl == other.weyl
            and self.action == other.action
        )

    def __hash__(self) -> int:
        return hash((self.pi1_rank, self.weyl, self.action))

    def __repr__(self) -> str:
        return f"AutGroup(pi1_rank={self.pi1_rank}, weyl_order={self.weyl.order})"


@dataclasses.dataclass(frozen=True)
class TwistData:
    """The translation-part matrix of a self-map's action on automorphisms.

    ``phi_pi`` is the k×k integer matrix through which the map acts on the
    translation subgroup ℤᵏ; the map is assumed to fix the Weyl component,
    which is what makes the twisted conjugacy relation well defined.
    """

    phi_pi: IntMatrix
    fixes_weyl_component: bool = True

    def __post_init__(self) -> None:
        if not self.phi_pi.is_square:
            raise ValueError(
                f"twist matrix must be square, got {self.phi_pi.rows}×{self.phi_pi.cols}."
            )
        if not self.fixes_weyl_component:
            raise ValueError(
                "only twists fixing the Weyl component are supported."
            )

    def validate_against(self, aut: AutGroup) -> None:
        """Check dimensions and compatibility with the Weyl action."""
        if self.phi_pi.rows != aut.pi1_rank:
            raise ValueError(
                f"twist matrix is {self.phi_pi.rows}×{self.phi_pi.cols} but the "
                f"translation rank is {aut.pi1_rank}."
            )
        for w in range(aut.weyl.order):
            theta = aut.action[w]
            if theta @ self.phi_pi != self.phi_pi @ theta:
                raise ValueError(
                    "twist matrix does not commute with the Weyl action at "
                    f"'{aut.weyl.labels[w]}'; the twisted relation would be ill defined."
                )


def _echelon_columns(
    k: int, columns: Iterable[Sequence[int]]
) -> list[tuple[int, tuple[int, ...]]]:
    """Column-echelon basis of the lattice spanned by ``columns`` in ℤᵏ.

    Returns ``(pivot_row, column)`` pairs with strictly increasing pivot
    rows, positive pivots, and zeros above each pivot.
    """
    cols = [list(c) for c in columns if any(c)]
    basis = []
    for row in range(k):
        while True:
            nonzero = sorted(
                (j for j in range(len(cols)) if cols[j][row]),
                key=lambda j: abs(cols[j][row]),
            )
            if len(nonzero) <= 1:
                break
            p = nonzero[0]
            for j in nonzero[1:]:
                q = cols[j][row] // cols[p][row]
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[p])]
            cols = [c for c in cols if any(c)]
        nonzero = [j for j in range(len(cols)) if cols[j][row]]
        if nonzero:
            pivot_column = cols.pop(nonzero[0])
            if pivot_column[row] < 0:
                pivot_column = [-x for x in pivot_column]
            basis.append((row, tuple(pivot_column)))
    return basis


class TwistedClassSet:
    """Canonical representatives for a ∼ θ(w)·a + (φ_π − I)·m.

    With ``use_weyl=False`` only the lattice moves a ∼ a + (φ_π − I)·m are
    used (the component-map Reidemeister relation); with ``use_weyl=True``
    the Weyl moves are included as well.  Representatives are computed by
    reducing top-down against a column-echelon basis of the image lattice
    of (φ_π − I), which picks the unique coset element whose pivot-row
    entries lie in ``[0, pivot)``; when Weyl moves are enabled the result
    is then minimized lexicographically over the Weyl orbit.

    >>> aut = AutGroup(1, FiniteGroup.builtin("trivial"))
    >>> classes = twisted_classes(aut, TwistData(IntMatrix.from_rows([[-1]])), use_weyl=False)
    >>> classes.enumerate_representatives()
    [(0,), (1,)]
    """

    __slots__ = ("aut", "twist", "use_weyl", "_basis")

    def __init__(self, aut: AutGroup, twist: TwistData, use_weyl: bool = True) -> None:
        twist.validate_against(aut)
        self.aut = aut
        self.twist = twist
        self.use_weyl = use_weyl
        k = aut.pi1_rank
        difference = twist.phi_pi - IntMatrix.identity(k)
        self._basis = _echelon_columns(k, (difference.column(j) for j in range(k)))

    @property
    def is_finite(self) -> bool:
        """True when the set of classes is finite (full-rank φ_π − I)."""
        return len(self._basis) == self.aut.pi1_rank

    def _lattice_reduce(self, vector: Sequence[int]) -> tuple[int, ...]:
        reduced = list(vector)
        for row, column in self._basis:
            q = reduced[row] // column[row]
            reduced = [a - q * b for a, b in zip(reduced, column)]
        return tuple(reduced)

    def representative(self, vector: Sequence[int]) -> tuple[int, ...]:
        """The canonical representative of the class of ``vector``."""
        vector = tuple(int(v) for v in vector)
        if len(vector) != self.aut.pi1_rank:
            raise ValueError(
                f"vector of length {len(vector)} does not match rank {self.aut.pi1_rank}."
            )
        reduced = self._lattice_reduce(vector)
        if not self.use_weyl or self.aut.weyl.order == 1:
            return reduced
        return min(
            self._lattice_reduce(self.aut.act(w, reduced))
            for w in range(self.aut.weyl.order)
        )

    def enumerate_representatives(self) -> list[tuple[int, ...]]:
        """All class representatives, sorted; only available when finite."""
        if not self.is_finite:
            raise ValueError(
                "the twisted class set is infinite (φ_π − I is singular); "
                "enumeration is unavailable."
            )
        seen = set()
        pivots = [column[row] for row, column in self._basis]
        for box in itertools.product(*(range(p) for p in pivots)):
            seen.add(self.representative(box))
        return sorted(seen)

    def count(self) -> int:
        return len(self.enumerate_representatives())


def twisted_classes(aut: AutGroup, twist: TwistData, use_weyl: bool = True) -> TwistedClassSet:
    """Build the twisted conjugacy class set for the given data.

    >>> classes = twisted_classes(AutGroup.trivial(), TwistData(IntMatrix.zeros(0, 0)))
    >>> classes.representative(())
    ()
    """
    return TwistedClassSet(aut, twist, use_weyl=use_weyl)


class GroupRingElement:
    """A finitely supported integer combination of automorphism-group elements.

    Terms are stored as sorted ``(vector, weyl_index, coefficient)`` triples
    with zero coefficients dropped.

    >>> aut = AutGroup(0, FiniteGroup.builtin("Z2"))
    >>> e = GroupRingElement.basis(aut, (), 1)
    >>> (e * e).identity_coefficient()
    1
    """

    __slots__ = ("aut", "terms")

    def __init__(
        self,
        aut: AutGroup,
        terms: Iterable[tuple[tuple[int, ...], int, int]],
    ) -> None:
        combined: dict[tuple[tuple[int, ...], int], int] = {}
        for vector, w, coefficient in terms:
            vector = tuple(int(v) for v in vector)
            if len(vector) != aut.pi1_rank:
                raise ValueError(
                    f"support vector of length {len(vector)} does not match "
                    f"rank {aut.pi1_rank}."
                )
            if not 0 <= w < aut.weyl.order:
                raise ValueError(f"Weyl index {w} outside 0..{aut.weyl.order - 1}.")
            if coefficient:
                key = (vector, int(w))
                combined[key] = combined.get(key, 0) + int(coefficient)
        self.aut = aut
        self.terms = tuple(
            sorted(
                ((vector, w, coefficient) for (vector, w), coefficient in combined.items() if coefficient),
                key=lambda term: (term[1], term[0]),
            )
        )

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, aut: AutGroup) -> "GroupRingElement":
        return cls(aut, ())

    @classmethod
    def identity(cls, aut: AutGroup) -> "GroupRingElement":
        vector, w = aut.identity
        return cls(aut, ((vector, w, 1),))

    @classmethod
    def basis(
        cls, aut: AutGroup, vector: Sequence[int], w: int, coefficient: int = 1
    ) -> "GroupRingElement":
        return cls(aut, ((tuple(vector), w, coefficient),))

    # -- queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        """Sum of all coefficients (every group element sent to 1)."""
        return sum(coefficient for _, _, coefficient in self.terms)

    def identity_coefficient(self) -> int:
        identity_vector, identity_w = self.aut.identity
        for vector, w, coefficient in self.terms:
            if vector == identity_vector and w == identity_w:
                return coefficient
        return 0

    # -- arithmetic ---------------------------------------------------

    def _require_same_aut(self, other: "GroupRingElement") -> None:
        if self.aut != other.aut:
            raise ValueError("cannot combine elements over different automorphism groups.")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._require_same_aut(other)
        return GroupRingElement(self.aut, self.terms + other.terms)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(
            self.aut, tuple((v, w, -c) for v, w, c in self.terms)
        )

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def scale(self, factor: int) -> "GroupRingElement":
        return GroupRingElement(
            self.aut, tuple((v, w, factor * c) for v, w, c in self.terms)
        )

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._require_same_aut(other)
        products = []
        for v1, w1, c1 in self.terms:
            for v2, w2, c2 in other.terms:
                vector, w = self.aut.multiply((v1, w1), (v2, w2))
                products.append((vector, w, c1 * c2))
        return GroupRingElement(self.aut, products)

    def apply_twist(self, twist: TwistData) -> "GroupRingElement":
        """Apply (v, w) ↦ (φ_π·v, w) to every support element."""
        return GroupRingElement(
            self.aut,
            tuple(
                (twist.phi_pi.apply_to_vector(v), w, c) for v, w, c in self.terms
            ),
        )

    def coset_reduce(self, stabilizer: Sequence[int]) -> "GroupRingElement":
        """Canonical form modulo right multiplication by a Weyl stabilizer.

        Each support element (v, w) is replaced by (v, min over s of w·s);
        the vector part is unchanged because the stabilizer acts trivially
        on translations.
        """
        reduced = []
        for vector, w, coefficient in self.terms:
            w_min = min(self.aut.weyl.multiply(w, s) for s in stabilizer)
            reduced.append((vector, w_min, coefficient))
        return GroupRingElement(self.aut, reduced)

    # -- rendering ----------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for vector, w, coefficient in self.terms:
            basis = self.aut.render_element(vector, w)
            sign = "+" if coefficient > 0 else _MINUS
            magnitude = abs(coefficient)
            body = basis if magnitude == 1 else f"{magnitude}{_MIDDLE_DOT}{basis}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        rendered = (first_sign if first_sign == _MINUS else "") + first_body
        for sign, body in parts[1:]:
            rendered += f" {sign} {body}"
        return rendered

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.aut == other.aut and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.aut, self.terms))

    def __repr__(self) -> str:
        return f"GroupRingElement({self})"


class GroupRingMatrix:
    """A matrix of :class:`GroupRingElement` entries, row-major.

    Row convention: ``entry(j, i)`` is the coefficient of target basis
    element ``i`` in the image of source basis element ``j``, so a map
    C → C' with source rank r and target rank r' is an r×r' matrix and
    composition "first M, then N with twist ψ" is ``ψ(M) @ N``.
    """

    __slots__ = ("aut", "rows", "cols", "entries")

    def __init__(
        self,
        aut: AutGroup,
        rows: int,
        cols: int,
        entries: Sequence[GroupRingElement],
    ) -> None:
        if rows < 0 or cols < 0:
            raise ValueError(f"matrix dimensions must be nonnegative, got {rows}×{cols}.")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for {rows}×{cols}, got {len(entries)}."
            )
        for entry in entries:
            if entry.aut != aut:
                raise ValueError("matrix entries must share the matrix's automorphism group.")
        self.aut = aut
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def zeros(cls, aut: AutGroup, rows: int, cols: int) -> "GroupRingMatrix":
        zero = GroupRingElement.zero(aut)
        return cls(aut, rows, cols, (zero,) * (rows * cols))

    @classmethod
    def identity(cls, aut: AutGroup, n: int) -> "GroupRingMatrix":
        zero = GroupRingElement.zero(aut)
        one = GroupRingElement.identity(aut)
        return cls(
            aut,
            n,
            n,
            tuple(one if i == j else zero for i in range(n) for j in range(n)),
        )

    @classmethod
    def from_rows(
        cls, aut: AutGroup, rows: Sequence[Sequence[GroupRingElement]]
    ) -> "GroupRingMatrix":
        row_list = [list(r) for r in rows]
        n = len(row_list)
        c = len(row_list[0]) if row_list else 0
        if any(len(r) != c for r in row_list):
            raise ValueError("ragged rows in group-ring matrix.")
        return cls(aut, n, c, tuple(e for row in row_list for e in row))

    def entry(self, i: int, j: int) -> GroupRingElement:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}×{self.cols} matrix.")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[GroupRingElement, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return all(entry.is_zero for entry in self.entries)

    def __add__(self, other: "GroupRingMatrix") -> "GroupRingMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(
                f"shape mismatch: {self.rows}×{self.cols} vs {other.rows}×{other.cols}."
            )
        return GroupRingMatrix(
            self.aut,
            self.rows,
            self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "GroupRingMatrix") -> "GroupRingMatrix":
        return self + (-other)

    def __neg__(self) -> "GroupRingMatrix":
        return GroupRingMatrix(
            self.aut, self.rows, self.cols, tuple(-e for e in self.entries)
        )

    def __matmul__(self, other: "GroupRingMatrix") -> "GroupRingMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}×{self.cols} by {other.rows}×{other.cols}."
            )
        zero = GroupRingElement.zero(self.aut)
        products = []
        for j in range(self.rows):
            for l in range(other.cols):
                total = zero
                for i in range(self.cols):
                    total = total + self.entry(j, i) * other.entry(i, l)
                products.append(total)
        return GroupRingMatrix(self.aut, self.rows, other.cols, tuple(products))

    def apply_twist(self, twist: TwistData) -> "GroupRingMatrix":
        return GroupRingMatrix(
            self.aut,
            self.rows,
            self.cols,
            tuple(entry.apply_twist(twist) for entry in self.entries),
        )

    def trace(self) -> GroupRingElement:
        if not self.is_square:
            raise ValueError(f"trace requires a square matrix, got {self.rows}×{self.cols}.")
        total = GroupRingElement.zero(self.aut)
        for i in range(self.rows):
            total = total + self.entry(i, i)
        return total

    def augmented(self) -> IntMatrix:
        """The integer matrix of entrywise augmentations."""
        return IntMatrix(
            self.rows,
            self.cols,
            tuple(entry.augmentation() for entry in self.entries),
        )

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "GroupRingMatrix":
        return GroupRingMatrix(
            self.aut,
            len(row_indices),
            len(col_indices),
            tuple(self.entry(i, j) for i in row_indices for j in col_indices),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingMatrix):
            return NotImplemented
        return (
            self.aut == other.aut
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.aut, self.rows, self.cols, self.entries))

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"[empty {self.rows}×{self.cols}]"
        body = "; ".join(
            ", ".join(str(self.entry(i, j)) for j in range(self.cols))
            for i in range(self.rows)
        )
        return f"[{body}]"

    def __repr__(self) -> str:
        return f"GroupRingMatrix({self.rows}×{self.cols} over {self.aut!r})"


def pi1_projection(
    element: GroupRingElement, classes: TwistedClassSet
) -> dict[tuple[int, ...], int]:
    """Project onto twisted classes of the translation subgroup.

    Support elements with a nontrivial Weyl component are dropped; the rest
    map to the canonical representative of their vector's twisted class.
    Returns a mapping from representatives to nonzero coefficients.

    >>> aut = AutGroup(0, FiniteGroup.builtin("Z2"))
    >>> classes = twisted_classes(aut, TwistData(IntMatrix.zeros(0, 0)))
    >>> pi1_projection(GroupRingElement.basis(aut, (), 1, -1), classes)
    {}
    >>> pi1_projection(GroupRingElement.basis(aut, (), 0, -1), classes)
    {(): -1}
    """
    if element.aut != classes.aut:
        raise ValueError("element and class set live over different automorphism groups.")
    identity_w = element.aut.weyl.identity
    projected: dict[tuple[int, ...], int] = {}
    for vector, w, coefficient in element.terms:
        if w != identity_w:
            continue
        representative = classes.representative(vector)
        projected[representative] = projected.get(representative, 0) + coefficient
    return {key: value for key, value in sorted(projected.items()) if value != 0}
