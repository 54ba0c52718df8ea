"""Invariants of twisted self-maps on equivariant complexes.

Computes, for a validated :class:`~eqlef.complex_model.EquivariantComplex`:

* :func:`universal_invariant` -- the universal class u, a per-isotropy-class
  formal sum of group-ring matrices in a Grothendieck-style normal form
  (block splitting, cancellation), with an integer-class image when the
  automorphism data is trivial,
* :func:`lambda_invariant` -- the generalized Lefschetz class λ, the
  projected alternating group-ring trace per isotropy class,
* :func:`reidemeister_trace` / :func:`reidemeister_from_fixed_points` --
  the component-level Reidemeister trace, from chains or from recorded
  fixed-point data,
* :func:`lefschetz_number` -- the classical Lefschetz number of the
  component self-map,
* :func:`klein_williams` -- the fixed-point-theoretic decomposition ℓ with
  one summand per subgroup conjugacy class,
* :func:`induce` -- induction of complexes and of ℓ along a subgroup
  embedding,
* :func:`vanishing_report` -- simultaneous-vanishing consistency of ℓ and λ,
* :func:`build_report` / :func:`render_report` -- deterministic JSON and
  human-readable summaries.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Any, Iterable, Mapping, Sequence

from .complex_model import (
    EquivariantComplex,
    FixedPointDatum,
    IsoClassData,
    _encode_group_ring_matrix,
    _encode_int,
    load_complex,
    serialize_complex,
)
from .equivariant_groups import (
    FiniteGroup,
    GroupRingMatrix,
    TwistData,
    TwistedClassSet,
    pi1_projection,
    twisted_classes,
)
from .uz import UZClass, class_of_matrix, uz_add, uz_neg

__all__ = [
    "ClassSum",
    "KClass",
    "UniversalEntry",
    "UniversalInvariant",
    "LambdaEntry",
    "LambdaVector",
    "EllContribution",
    "EllSlot",
    "EllInvariant",
    "universal_invariant",
    "lambda_invariant",
    "reidemeister_trace",
    "reidemeister_from_fixed_points",
    "lefschetz_number",
    "klein_williams",
    "induce",
    "vanishing_report",
    "build_report",
    "render_report",
]

_MINUS = "−"
_MIDDLE_DOT = "·"

_CANONICAL_BLOCK_LIMIT = 7


# ---------------------------------------------------------------------------
# finitely supported sums over twisted-class representatives


def _render_class_label(vector: tuple[int, ...]) -> str:
    if not vector:
        return "1"
    if len(vector) == 1:
        return str(vector[0]).replace("-", _MINUS)
    return "(" + ",".join(str(v) for v in vector).replace("-", _MINUS) + ")"


@dataclasses.dataclass(frozen=True)
class ClassSum:
    """A finitely supported integer sum over twisted-class representatives.

    Terms are ``(representative vector, coefficient)`` pairs, sorted, with
    zero coefficients dropped.  Vectors of different lengths may coexist
    (sums aggregated over components of different fundamental-group ranks).

    >>> str(ClassSum.from_mapping({(): 2}))
    '2[1]'
    >>> str(ClassSum.zero())
    '0'
    """

    terms: tuple[tuple[tuple[int, ...], int], ...] = ()

    def __post_init__(self) -> None:
        combined: dict[tuple[int, ...], int] = {}
        for vector, coefficient in self.terms:
            vector = tuple(int(v) for v in vector)
            combined[vector] = combined.get(vector, 0) + int(coefficient)
        normalized = tuple(
            sorted(
                ((v, c) for v, c in combined.items() if c != 0),
                key=lambda term: (len(term[0]), term[0]),
            )
        )
        object.__setattr__(self, "terms", normalized)

    @classmethod
    def zero(cls) -> "ClassSum":
        return cls()

    @classmethod
    def from_mapping(cls, mapping: Mapping[tuple[int, ...], int]) -> "ClassSum":
        return cls(tuple(mapping.items()))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total(self) -> int:
        """Sum of all coefficients (the augmentation)."""
        return sum(c for _, c in self.terms)

    def coefficient(self, vector: Sequence[int]) -> int:
        vector = tuple(vector)
        for v, c in self.terms:
            if v == vector:
                return c
        return 0

    def __add__(self, other: "ClassSum") -> "ClassSum":
        return ClassSum(self.terms + other.terms)

    def __neg__(self) -> "ClassSum":
        return ClassSum(tuple((v, -c) for v, c in self.terms))

    def __sub__(self, other: "ClassSum") -> "ClassSum":
        return self + (-other)

    def scale(self, factor: int) -> "ClassSum":
        return ClassSum(tuple((v, factor * c) for v, c in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        rendered = []
        for vector, coefficient in self.terms:
            coeff_str = str(coefficient).replace("-", _MINUS)
            rendered.append(f"{coeff_str}[{_render_class_label(vector)}]")
        return " ".join(rendered)


# ---------------------------------------------------------------------------
# the universal class and its normal form


def _strongly_connected_components(size: int, edges: dict[int, set[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative; returns components as sorted index lists."""
    index_counter = itertools.count()
    indices: dict[int, int] = {}
    lowlink: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    components: list[list[int]] = []

    for root in range(size):
        if root in indices:
            continue
        work = [(root, iter(sorted(edges[root])))]
        indices[root] = lowlink[root] = next(index_counter)
        stack.append(root)
        on_stack.add(root)
        while work:
            node, successors = work[-1]
            advanced = False
            for successor in successors:
                if successor not in indices:
                    indices[successor] = lowlink[successor] = next(index_counter)
                    stack.append(successor)
                    on_stack.add(successor)
                    work.append((successor, iter(sorted(edges[successor]))))
                    advanced = True
                    break
                if successor in on_stack:
                    lowlink[node] = min(lowlink[node], indices[successor])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == indices[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                components.append(sorted(component))
    return components


def _matrix_sort_key(matrix: GroupRingMatrix):
    return (
        matrix.rows,
        tuple(entry.terms for entry in matrix.entries),
    )


def _permuted_key(matrix: GroupRingMatrix, permutation: Sequence[int]):
    return tuple(
        matrix.entry(permutation[i], permutation[j]).terms
        for i in range(matrix.rows)
        for j in range(matrix.rows)
    )


def _canonical_block(matrix: GroupRingMatrix) -> tuple[GroupRingMatrix, bool]:
    """Return a permutation-canonical form of the block and an exactness flag.

    Blocks up to the size limit are canonicalized by minimizing over all
    simultaneous row/column permutations; larger blocks fall back to a
    deterministic signature ordering, which is stable but not guaranteed to
    identify all permutation-equivalent blocks (flag False).
    """
    n = matrix.rows
    if n <= 1:
        return matrix, True
    if n <= _CANONICAL_BLOCK_LIMIT:
        best_perm = min(
            itertools.permutations(range(n)), key=lambda p: _permuted_key(matrix, p)
        )
        entries = tuple(
            matrix.entry(best_perm[i], best_perm[j])
            for i in range(n)
            for j in range(n)
        )
        return GroupRingMatrix(matrix.aut, n, n, entries), True
    signatures: list[Any] = [matrix.entry(i, i).terms for i in range(n)]
    for _ in range(n):
        signatures = [
            (
                signatures[i],
                tuple(
                    sorted(
                        (signatures[j], matrix.entry(i, j).terms, matrix.entry(j, i).terms)
                        for j in range(n)
                        if j != i
                    )
                ),
            )
            for i in range(n)
        ]
    order = sorted(range(n), key=lambda i: (signatures[i], i))
    entries = tuple(
        matrix.entry(order[i], order[j]) for i in range(n) for j in range(n)
    )
    return GroupRingMatrix(matrix.aut, n, n, entries), False


def _split_blocks(matrix: GroupRingMatrix) -> list[GroupRingMatrix]:
    """Split along the strongly connected components of the support digraph.

    The class of a visibly block-triangular matrix is the sum of the classes
    of its diagonal blocks, so only the component submatrices survive.
    """
    n = matrix.rows
    edges = {
        j: {i for i in range(n) if i != j and not matrix.entry(j, i).is_zero}
        for j in range(n)
    }
    return [
        matrix.submatrix(component, component)
        for component in _strongly_connected_components(n, edges)
    ]


@dataclasses.dataclass(frozen=True)
class KClass:
    """A formal integer combination of square group-ring matrices.

    The normal form splits each matrix along the strongly connected
    components of its support digraph, canonicalizes each block by
    permutation, merges coefficients of identical blocks, and drops zero
    coefficients and empty matrices.  Equality of normal forms implies
    equality of classes; inequality of normal forms is inconclusive, so
    :meth:`compare` answers either ``"equal"`` or ``"not provably equal"``.
    """

    terms: tuple[tuple[GroupRingMatrix, int], ...] = ()
    exact: bool = True

    @classmethod
    def from_terms(
        cls, terms: Iterable[tuple[GroupRingMatrix, int]]
    ) -> "KClass":
        accumulated: dict[GroupRingMatrix, int] = {}
        exact = True
        for matrix, coefficient in terms:
            if not matrix.is_square:
                raise ValueError(
                    f"universal-class terms must be square matrices, got "
                    f"{matrix.rows}×{matrix.cols}."
                )
            for block in _split_blocks(matrix):
                canonical, block_exact = _canonical_block(block)
                exact = exact and block_exact
                accumulated[canonical] = accumulated.get(canonical, 0) + coefficient
        normalized = tuple(
            sorted(
                ((m, c) for m, c in accumulated.items() if c != 0),
                key=lambda term: _matrix_sort_key(term[0]),
            )
        )
        return cls(terms=normalized, exact=exact)

    @classmethod
    def zero(cls) -> "KClass":
        return cls()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "KClass") -> "KClass":
        combined = KClass.from_terms(self.terms + other.terms)
        return dataclasses.replace(combined, exact=combined.exact and self.exact and other.exact)

    def __neg__(self) -> "KClass":
        return KClass(tuple((m, -c) for m, c in self.terms), self.exact)

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def compare(self, other: "KClass") -> str:
        """``"equal"`` when normal forms match, else ``"not provably equal"``."""
        if self.terms == other.terms:
            return "equal"
        return "not provably equal"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        rendered = []
        for matrix, coefficient in self.terms:
            sign = "+" if coefficient > 0 else _MINUS
            magnitude = abs(coefficient)
            body = str(matrix) if magnitude == 1 else f"{magnitude}{_MIDDLE_DOT}{matrix}"
            rendered.append(f"{sign}{body}")
        return " ".join(rendered)


# ---------------------------------------------------------------------------
# per-class invariant computations


def _unmasked_submatrix(iso: IsoClassData, degree_index: int) -> GroupRingMatrix:
    entry = iso.degrees[degree_index]
    unmasked = entry.unmasked_indices
    return entry.chain_map.submatrix(unmasked, unmasked)


def _sign(degree: int) -> int:
    return -1 if degree % 2 else 1


@dataclasses.dataclass(frozen=True)
class UniversalEntry:
    """The universal-class term of one isotropy class."""

    subgroup_labels: tuple[str, ...]
    component: str
    kclass: KClass
    uz_image: UZClass | None


@dataclasses.dataclass(frozen=True)
class UniversalInvariant:
    """The universal class u: one formal matrix combination per isotropy class."""

    entries: tuple[UniversalEntry, ...]

    def entry_for(self, subgroup_labels: Sequence[str], component: str) -> UniversalEntry:
        key = (tuple(subgroup_labels), component)
        for entry in self.entries:
            if (entry.subgroup_labels, entry.component) == key:
                return entry
        raise ValueError(f"no universal-class entry for {key}.")

    @property
    def is_zero(self) -> bool:
        return all(entry.kclass.is_zero for entry in self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        lines = []
        for entry in self.entries:
            line = (
                f"(subgroup {{{', '.join(entry.subgroup_labels)}}}, "
                f"component '{entry.component}'): {entry.kclass}"
            )
            if entry.uz_image is not None:
                line += f"  [integer class: {entry.uz_image}]"
            lines.append(line)
        return "\n".join(lines)


def universal_invariant(c: EquivariantComplex) -> UniversalInvariant:
    """The universal class: Σ_p (−1)^p [relative chain map in degree p] per class.

    Only the non-masked (relative) rows and columns of each chain map enter.
    When a class has trivial automorphism data (no translations, trivial
    Weyl group) the entry also carries its image in the integer-matrix class
    group, computed through characteristic polynomials.
    """
    entries = []
    for iso in c.classes:
        kclass = KClass.from_terms(
            (_unmasked_submatrix(iso, i), _sign(entry.degree))
            for i, entry in enumerate(iso.degrees)
        )
        uz_image = None
        if iso.aut.is_trivial:
            uz_image = UZClass.zero()
            for i, entry in enumerate(iso.degrees):
                term = class_of_matrix(_unmasked_submatrix(iso, i).augmented())
                if _sign(entry.degree) < 0:
                    term = uz_neg(term)
                uz_image = uz_add(uz_image, term)
        entries.append(
            UniversalEntry(
                subgroup_labels=iso.subgroup.member_labels,
                component=iso.component,
                kclass=kclass,
                uz_image=uz_image,
            )
        )
    return UniversalInvariant(entries=tuple(entries))


@dataclasses.dataclass(frozen=True)
class LambdaEntry:
    """The λ-coordinate of one isotropy class."""

    subgroup_labels: tuple[str, ...]
    component: str
    value: ClassSum


@dataclasses.dataclass(frozen=True)
class LambdaVector:
    """The generalized Lefschetz class λ: one projected trace per isotropy class."""

    entries: tuple[LambdaEntry, ...]

    def entry_for(self, subgroup_labels: Sequence[str], component: str) -> LambdaEntry:
        key = (tuple(subgroup_labels), component)
        for entry in self.entries:
            if (entry.subgroup_labels, entry.component) == key:
                return entry
        raise ValueError(f"no λ entry for {key}.")

    def totals(self) -> tuple[int, ...]:
        """Per-class coefficient totals, in document order."""
        return tuple(entry.value.total() for entry in self.entries)

    @property
    def is_zero(self) -> bool:
        return all(entry.value.is_zero for entry in self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        return "\n".join(
            f"(subgroup {{{', '.join(entry.subgroup_labels)}}}, "
            f"component '{entry.component}'): {entry.value}"
            for entry in self.entries
        )


def lambda_invariant(c: EquivariantComplex) -> LambdaVector:
    """λ per isotropy class: alternating projected group-ring traces.

    In each degree the non-masked square part of the chain map contributes
    its group-ring trace; the trace is projected to twisted conjugacy
    classes (support elements with nontrivial Weyl part vanish), and degrees
    alternate in sign.
    """
    entries = []
    for iso in c.classes:
        classes = twisted_classes(iso.aut, iso.twist, use_weyl=True)
        accumulated: dict[tuple[int, ...], int] = {}
        for i, entry in enumerate(iso.degrees):
            trace = _unmasked_submatrix(iso, i).trace()
            for vector, coefficient in pi1_projection(trace, classes).items():
                accumulated[vector] = accumulated.get(vector, 0) + _sign(entry.degree) * coefficient
        entries.append(
            LambdaEntry(
                subgroup_labels=iso.subgroup.member_labels,
                component=iso.component,
                value=ClassSum.from_mapping(accumulated),
            )
        )
    return LambdaVector(entries=tuple(entries))


def _component_class_set(iso: IsoClassData) -> TwistedClassSet:
    """Twisted classes of the component map: lattice moves only, no Weyl moves."""
    return twisted_classes(
        iso.pi1_aut(), TwistData(iso.twist.phi_pi), use_weyl=False
    )


def reidemeister_trace(d: IsoClassData) -> ClassSum:
    """The Reidemeister trace of the component self-map, from chain data.

    The chain modules are restricted to the translation group ring along
    Weyl coset representatives (the expansion), and the alternating sum of
    diagonal coefficients is projected to the twisted classes of the
    translation subgroup (no Weyl identification).
    """
    classes = _component_class_set(d)
    accumulated: dict[tuple[int, ...], int] = {}
    for entry in d.degrees:
        expanded = d.expanded_chain_map(entry.degree)
        for vector, coefficient in pi1_projection(expanded.trace(), classes).items():
            accumulated[vector] = accumulated.get(vector, 0) + _sign(entry.degree) * coefficient
    return ClassSum.from_mapping(accumulated)


def reidemeister_from_fixed_points(
    data: Sequence[FixedPointDatum], classes: TwistedClassSet
) -> ClassSum:
    """Σ index·[twisted class of the point's path], merging equal classes.

    >>> reidemeister_from_fixed_points([], None).is_zero
    True
    """
    accumulated: dict[tuple[int, ...], int] = {}
    for point in data:
        if classes is None:
            raise ValueError("a twisted class set is required for nonempty fixed-point data.")
        representative = classes.representative(point.path)
        accumulated[representative] = accumulated.get(representative, 0) + point.index
    return ClassSum.from_mapping(accumulated)


def lefschetz_number(d: IsoClassData) -> int:
    """The Lefschetz number of the component self-map.

    Computed as the alternating trace of the integer chain matrices of the
    component: expand over Weyl cosets, apply the augmentation, and trace.

    >>> from .complex_model import load_builtin
    >>> lefschetz_number(load_builtin("example2").classes[0])
    2
    """
    total = 0
    for entry in d.degrees:
        expanded = d.expanded_chain_map(entry.degree)
        total += _sign(entry.degree) * expanded.augmented().trace()
    return total


# ---------------------------------------------------------------------------
# the Klein–Williams decomposition


@dataclasses.dataclass(frozen=True)
class EllContribution:
    """The contribution of one component orbit to its subgroup-class slot."""

    subgroup_labels: tuple[str, ...]
    component: str
    orbit_size: int
    value: ClassSum


@dataclasses.dataclass(frozen=True)
class EllSlot:
    """One subgroup-conjugacy-class summand of the decomposition."""

    subgroup_labels: tuple[str, ...]
    total: ClassSum
    contributions: tuple[EllContribution, ...]


class EllInvariant:
    """The decomposed fixed-point invariant ℓ: one summand per subgroup class.

    Equality compares slot subgroup labels and slot totals; the recorded
    per-component contributions are informational.
    """

    __slots__ = ("slots",)

    def __init__(self, slots: Sequence[EllSlot]) -> None:
        self.slots = tuple(slots)

    @property
    def is_zero(self) -> bool:
        return all(slot.total.is_zero for slot in self.slots)

    def slot_for(self, subgroup_labels: Sequence[str]) -> EllSlot:
        key = tuple(subgroup_labels)
        for slot in self.slots:
            if slot.subgroup_labels == key:
                return slot
        raise ValueError(f"no ℓ slot for subgroup class {list(key)}.")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EllInvariant):
            return NotImplemented
        mine = tuple((slot.subgroup_labels, slot.total.terms) for slot in self.slots)
        theirs = tuple((slot.subgroup_labels, slot.total.terms) for slot in other.slots)
        return mine == theirs

    def __hash__(self) -> int:
        return hash(tuple((slot.subgroup_labels, slot.total.terms) for slot in self.slots))

    def __str__(self) -> str:
        if not self.slots:
            return "0"
        return f" {chr(0x2295)} ".join(str(slot.total) for slot in self.slots)


def klein_williams(c: EquivariantComplex) -> EllInvariant:
    """The decomposition ℓ: per subgroup class, orbit-aggregated Reidemeister data.

    For each isotropy class (one representative component per Weyl orbit of
    components): compute the Reidemeister trace, identify twisted classes
    along the Weyl action of the component's stabilizer, multiply by the
    orbit size, and add into the slot of the subgroup conjugacy class.
    """
    slot_data: dict[tuple[int, ...], dict] = {}
    for iso in c.classes:
        trace = reidemeister_trace(iso)
        full_classes = twisted_classes(iso.aut, iso.twist, use_weyl=True)
        projected: dict[tuple[int, ...], int] = {}
        for vector, coefficient in trace.terms:
            representative = full_classes.representative(vector)
            projected[representative] = projected.get(representative, 0) + coefficient
        value = ClassSum.from_mapping(projected).scale(iso.orbit_size)
        slot = slot_data.setdefault(
            iso.subgroup.members,
            {"labels": iso.subgroup.member_labels, "total": ClassSum.zero(), "contributions": []},
        )
        slot["total"] = slot["total"] + value
        slot["contributions"].append(
            EllContribution(
                subgroup_labels=iso.subgroup.member_labels,
                component=iso.component,
                orbit_size=iso.orbit_size,
                value=value,
            )
        )
    ordered = sorted(slot_data.items(), key=lambda item: (len(item[0]), item[0]))
    return EllInvariant(
        [
            EllSlot(
                subgroup_labels=data["labels"],
                total=data["total"],
                contributions=tuple(data["contributions"]),
            )
            for _, data in ordered
        ]
    )


# ---------------------------------------------------------------------------
# induction


def _validate_embedding(
    h_group: FiniteGroup, g_group: FiniteGroup, embedding: Mapping[str, str]
) -> dict[str, str]:
    mapping = {str(k): str(v) for k, v in embedding.items()}
    if set(mapping) != set(h_group.labels):
        raise ValueError(
            "embedding must map every source group element; missing "
            f"{sorted(set(h_group.labels) - set(mapping))}."
        )
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("embedding is not injective.")
    image_indices = {}
    for label, target in mapping.items():
        image_indices[label] = g_group.element_index(target)
    for a in range(h_group.order):
        for b in range(h_group.order):
            left = image_indices[h_group.labels[h_group.multiply(a, b)]]
            right = g_group.multiply(
                image_indices[h_group.labels[a]], image_indices[h_group.labels[b]]
            )
            if left != right:
                raise ValueError(
                    "embedding does not preserve multiplication at "
                    f"('{h_group.labels[a]}', '{h_group.labels[b]}')."
                )
    return mapping


def _relabel_matrix(value: Any, mapping: Mapping[str, str]) -> Any:
    """Relabel ``weyl_elem`` fields inside an encoded matrix, row, or entry."""
    if isinstance(value, list):
        return [_relabel_matrix(v, mapping) for v in value]
    if isinstance(value, Mapping):
        relabeled = dict(value)
        if "weyl_elem" in relabeled:
            relabeled["weyl_elem"] = mapping[relabeled["weyl_elem"]]
        return relabeled
    return value


def _relabel_document(document: Mapping, mapping: Mapping[str, str]) -> dict:
    """Replace group element labels in the label-bearing document fields."""
    relabeled = dict(document)
    classes = []
    for raw_class in document.get("iso_classes", []):
        updated = dict(raw_class)
        updated["subgroup_class"] = [mapping[v] for v in raw_class["subgroup_class"]]
        if "weyl" in updated:
            updated["weyl"] = [mapping[v] for v in updated["weyl"]]
        if "action" in updated:
            updated["action"] = {
                mapping[label]: matrix for label, matrix in updated["action"].items()
            }
        chain = []
        for raw_degree in raw_class.get("chain", []):
            degree = dict(raw_degree)
            if "stabilizers" in degree:
                degree["stabilizers"] = [
                    [mapping[v] for v in stabilizer] for stabilizer in degree["stabilizers"]
                ]
            for key in ("map", "boundary"):
                if key in degree:
                    degree[key] = _relabel_matrix(degree[key], mapping)
            chain.append(degree)
        updated["chain"] = chain
        classes.append(updated)
    relabeled["iso_classes"] = classes
    if "fixed_points" in document:
        relabeled["fixed_points"] = [
            {**point, "subgroup_class": [mapping[v] for v in point["subgroup_class"]]}
            for point in document["fixed_points"]
        ]
    return relabeled


def induce(
    c: EquivariantComplex, g_group: FiniteGroup, embedding: Mapping[str, str]
) -> tuple[EquivariantComplex, EllInvariant]:
    """Induce a complex and its ℓ along a subgroup embedding.

    Supported regimes: the embedding is an isomorphism (relabeling), or the
    source group is trivial (free induction: each component acquires a free
    orbit of |G| copies).  The returned invariant is the induced image of
    the source's ℓ; it equals ``klein_williams`` of the induced complex.
    """
    mapping = _validate_embedding(c.group, g_group, embedding)
    ell = klein_williams(c)

    if c.group.order == g_group.order:
        document = serialize_complex(c)
        relabeled = _relabel_document(document, mapping)
        relabeled["group"] = {
            "labels": list(g_group.labels),
            "table": [list(row) for row in g_group.table],
        }
        induced = load_complex(relabeled)
        induced_ell = EllInvariant(
            [
                EllSlot(
                    subgroup_labels=tuple(mapping[label] for label in slot.subgroup_labels),
                    total=slot.total,
                    contributions=tuple(
                        EllContribution(
                            subgroup_labels=tuple(
                                mapping[label] for label in contribution.subgroup_labels
                            ),
                            component=contribution.component,
                            orbit_size=contribution.orbit_size,
                            value=contribution.value,
                        )
                        for contribution in slot.contributions
                    ),
                )
                for slot in ell.slots
            ]
        )
        return induced, induced_ell

    if c.group.order == 1:
        identity_label = g_group.labels[g_group.identity]
        document = serialize_complex(c)
        induced_doc = {
            "format_version": document["format_version"],
            "group": {
                "labels": list(g_group.labels),
                "table": [list(row) for row in g_group.table],
            },
            "iso_classes": [],
        }
        if c.name is not None:
            induced_doc["name"] = f"{c.name}-induced"
        for raw_class in document["iso_classes"]:
            induced_class = dict(raw_class)
            induced_class["subgroup_class"] = [identity_label]
            induced_class["weyl"] = [identity_label]
            induced_class.pop("action", None)
            induced_class["orbit_size"] = raw_class.get("orbit_size", 1) * g_group.order
            chain = []
            for raw_degree in raw_class["chain"]:
                degree = dict(raw_degree)
                degree.pop("stabilizers", None)
                chain.append(degree)
            induced_class["chain"] = chain
            induced_doc["iso_classes"].append(induced_class)
        induced = load_complex(induced_doc)
        factor = g_group.order
        induced_ell = EllInvariant(
            [
                EllSlot(
                    subgroup_labels=(identity_label,),
                    total=slot.total.scale(factor),
                    contributions=tuple(
                        EllContribution(
                            subgroup_labels=(identity_label,),
                            component=contribution.component,
                            orbit_size=contribution.orbit_size * factor,
                            value=contribution.value.scale(factor),
                        )
                        for contribution in slot.contributions
                    ),
                )
                for slot in ell.slots
            ]
        )
        return induced, induced_ell

    raise ValueError(
        "induction is supported for isomorphisms and for trivial source groups; "
        f"got source order {c.group.order} inside target order {g_group.order}."
    )


# ---------------------------------------------------------------------------
# vanishing consistency and reports


def vanishing_report(c: EquivariantComplex) -> dict:
    """Whether ℓ and λ vanish simultaneously on this complex.

    >>> from .complex_model import load_builtin
    >>> vanishing_report(load_builtin("example1"))
    {'ell_zero': True, 'lambda_zero': True, 'consistent': True}
    """
    ell = klein_williams(c)
    lam = lambda_invariant(c)
    ell_zero = ell.is_zero
    lambda_zero = lam.is_zero
    return {
        "ell_zero": ell_zero,
        "lambda_zero": lambda_zero,
        "consistent": ell_zero == lambda_zero,
    }


def _encode_class_sum(value: ClassSum) -> list[dict]:
    return [
        {"class": [_encode_int(v) for v in vector], "coeff": _encode_int(coefficient)}
        for vector, coefficient in value.terms
    ]


def _encode_uz(value: UZClass) -> dict:
    return {
        "rendered": str(value),
        "terms": [
            {
                "polynomial": str(polynomial),
                "coefficients": [_encode_int(v) for v in polynomial.coefficients],
                "coeff": _encode_int(coefficient),
            }
            for polynomial, coefficient in value.terms
        ],
    }


def build_report(c: EquivariantComplex) -> dict:
    """A deterministic JSON-ready report of every invariant of the complex."""
    universal = universal_invariant(c)
    lam = lambda_invariant(c)
    ell = klein_williams(c)
    classes = []
    for iso, u_entry, l_entry in zip(c.classes, universal.entries, lam.entries):
        trace = reidemeister_trace(iso)
        entry = {
            "subgroup_class": list(iso.subgroup.member_labels),
            "component": iso.component,
            "orbit_size": iso.orbit_size,
            "u": {
                "rendered": str(u_entry.kclass),
                "terms": [
                    {
                        "coeff": _encode_int(coefficient),
                        "matrix": _encode_group_ring_matrix(matrix),
                    }
                    for matrix, coefficient in u_entry.kclass.terms
                ],
            },
            "lambda": _encode_class_sum(l_entry.value),
            "reidemeister": _encode_class_sum(trace),
            "lefschetz": _encode_int(lefschetz_number(iso)),
        }
        if u_entry.uz_image is not None:
            entry["u"]["uz_image"] = _encode_uz(u_entry.uz_image)
        classes.append(entry)
    report = {
        "group": {"order": c.group.order, "labels": list(c.group.labels)},
        "classes": classes,
        "ell": {
            "rendered": str(ell),
            "slots": [
                {
                    "subgroup_class": list(slot.subgroup_labels),
                    "total": _encode_class_sum(slot.total),
                    "contributions": [
                        {
                            "component": contribution.component,
                            "orbit_size": contribution.orbit_size,
                            "value": _encode_class_sum(contribution.value),
                        }
                        for contribution in slot.contributions
                    ],
                }
                for slot in ell.slots
            ],
        },
        "vanishing": vanishing_report(c),
    }
    if c.name is not None:
        report["name"] = c.name
    return report


def render_report(c: EquivariantComplex) -> str:
    """A human-readable summary of every invariant of the complex."""
    universal = universal_invariant(c)
    lam = lambda_invariant(c)
    ell = klein_williams(c)
    vanishing = vanishing_report(c)
    lines = []
    title = c.name if c.name is not None else "complex"
    lines.append(f"{title} (group order {c.group.order})")
    for iso, u_entry, l_entry in zip(c.classes, universal.entries, lam.entries):
        trace = reidemeister_trace(iso)
        lines.append(f"  {iso.label}:")
        lines.append(f"    u = {u_entry.kclass}")
        if u_entry.uz_image is not None:
            lines.append(f"    u integer class = {u_entry.uz_image}")
        lines.append(f"    lambda = {l_entry.value}")
        lines.append(f"    R = {trace}")
        lines.append(f"    L = {lefschetz_number(iso)}")
    lines.append(f"  ell = {ell}")
    lines.append(
        "  vanishing: ell zero: {}; lambda zero: {}; consistent: {}".format(
            "yes" if vanishing["ell_zero"] else "no",
            "yes" if vanishing["lambda_zero"] else "no",
            "yes" if vanishing["consistent"] else "no",
        )
    )
    return "\n".join(lines)
