"""Loading, validation, and serialization of equivariant complex documents.

A document describes a finite symmetry group, one isotropy class per pair
(conjugacy class of subgroups, component of that fixed-point stratum), and
for each class the relative cellular data of a twisted self-map: ranks,
masks separating the singular sub-part, per-cell Weyl stabilizers, the
chain map, and optional boundary operators.  Everything is validated on
load; the loaded :class:`EquivariantComplex` is immutable.

Integers anywhere in a document may be written either as JSON numbers or
as decimal strings; values beyond the double-precision-safe range are
serialized back as strings.
"""

from __future__ import annotations

import dataclasses
from typing import Any, Mapping, Sequence

from .corpus import BUILTIN_COMPLEXES
from .exact_algebra import IntMatrix
from .equivariant_groups import (
    AutGroup,
    FiniteGroup,
    GroupRingElement,
    GroupRingMatrix,
    Subgroup,
    TwistData,
    WeylGroup,
    conjugacy_classes_of_subgroups,
    weyl_group,
)

__all__ = [
    "ChainDegree",
    "IsoClassData",
    "FixedPointDatum",
    "EquivariantComplex",
    "load_complex",
    "load_builtin",
    "serialize_complex",
]

FORMAT_VERSION = 1
_JSON_SAFE_BOUND = 2**53 - 1


# ---------------------------------------------------------------------------
# primitive decoding helpers


def _require_mapping(value: Any, where: str) -> Mapping:
    if not isinstance(value, Mapping):
        raise ValueError(f"expected an object at {where}, got {type(value).__name__}.")
    return value


def _require_list(value: Any, where: str) -> list:
    if not isinstance(value, (list, tuple)):
        raise ValueError(f"expected an array at {where}, got {type(value).__name__}.")
    return list(value)


def _check_allowed_keys(mapping: Mapping, allowed: set[str], where: str) -> None:
    for key in mapping:
        if key not in allowed:
            raise ValueError(
                f"unknown field '{key}' at {where}; allowed fields: {sorted(allowed)}."
            )


def _decode_int(value: Any, where: str) -> int:
    if isinstance(value, bool):
        raise ValueError(f"expected an integer at {where}, got a boolean.")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip(), 10)
        except ValueError:
            raise ValueError(f"expected an integer at {where}, got {value!r}.")
    raise ValueError(f"expected an integer at {where}, got {type(value).__name__}.")


def _encode_int(value: int) -> int | str:
    return value if abs(value) <= _JSON_SAFE_BOUND else str(value)


def _decode_int_matrix(value: Any, rows: int, cols: int, where: str) -> IntMatrix:
    raw_rows = _require_list(value, where)
    if len(raw_rows) != rows:
        raise ValueError(f"expected {rows} rows at {where}, got {len(raw_rows)}.")
    entries = []
    for i, raw_row in enumerate(raw_rows):
        row = _require_list(raw_row, f"{where}[{i}]")
        if len(row) != cols:
            raise ValueError(
                f"expected {cols} entries in row {i} at {where}, got {len(row)}."
            )
        entries.extend(_decode_int(v, f"{where}[{i}][{j}]") for j, v in enumerate(row))
    return IntMatrix(rows, cols, tuple(entries))


def _encode_int_matrix(matrix: IntMatrix) -> list[list[int | str]]:
    return [
        [_encode_int(matrix.entry(i, j)) for j in range(matrix.cols)]
        for i in range(matrix.rows)
    ]


# ---------------------------------------------------------------------------
# group-ring entry coding


def _decode_term(item: Any, aut: AutGroup, where: str) -> tuple[tuple[int, ...], int, int]:
    if isinstance(item, Mapping):
        _check_allowed_keys(item, {"coeff", "vector", "weyl_elem"}, where)
        coefficient = _decode_int(item.get("coeff", 1), f"{where}.coeff")
        raw_vector = item.get("vector")
        if raw_vector is None:
            vector = (0,) * aut.pi1_rank
        else:
            vector_list = _require_list(raw_vector, f"{where}.vector")
            if len(vector_list) != aut.pi1_rank:
                raise ValueError(
                    f"vector at {where} has length {len(vector_list)}; "
                    f"expected {aut.pi1_rank}."
                )
            vector = tuple(
                _decode_int(v, f"{where}.vector[{i}]") for i, v in enumerate(vector_list)
            )
        raw_weyl = item.get("weyl_elem")
        if raw_weyl is None:
            w = aut.weyl.identity
        elif isinstance(raw_weyl, str):
            w = aut.weyl.element_index(raw_weyl)
        else:
            raise ValueError(f"expected a Weyl element label at {where}.weyl_elem.")
        return (vector, w, coefficient)
    coefficient = _decode_int(item, where)
    return ((0,) * aut.pi1_rank, aut.weyl.identity, coefficient)


def _decode_entry(value: Any, aut: AutGroup, where: str) -> GroupRingElement:
    items = value if isinstance(value, (list, tuple)) else [value]
    terms = [
        _decode_term(item, aut, f"{where}[term {i}]") for i, item in enumerate(items)
    ]
    return GroupRingElement(aut, terms)


def _encode_term(
    vector: tuple[int, ...], w: int, coefficient: int, aut: AutGroup
) -> int | str | dict:
    if not any(vector) and w == aut.weyl.identity:
        return _encode_int(coefficient)
    encoded: dict[str, Any] = {"coeff": _encode_int(coefficient)}
    if any(vector):
        encoded["vector"] = [_encode_int(v) for v in vector]
    if w != aut.weyl.identity:
        encoded["weyl_elem"] = aut.weyl.labels[w]
    return encoded


def _encode_entry(element: GroupRingElement) -> Any:
    if element.is_zero:
        return 0
    encoded = [
        _encode_term(vector, w, coefficient, element.aut)
        for vector, w, coefficient in element.terms
    ]
    return encoded[0] if len(encoded) == 1 else encoded


def _decode_group_ring_matrix(
    value: Any, aut: AutGroup, rows: int, cols: int, where: str
) -> GroupRingMatrix:
    raw_rows = _require_list(value, where)
    if len(raw_rows) != rows:
        raise ValueError(f"expected {rows} rows at {where}, got {len(raw_rows)}.")
    entries = []
    for i, raw_row in enumerate(raw_rows):
        row = _require_list(raw_row, f"{where}[{i}]")
        if len(row) != cols:
            raise ValueError(
                f"expected {cols} entries in row {i} at {where}, got {len(row)}."
            )
        entries.extend(
            _decode_entry(v, aut, f"{where}[{i}][{j}]") for j, v in enumerate(row)
        )
    return GroupRingMatrix(aut, rows, cols, tuple(entries))


def _encode_group_ring_matrix(matrix: GroupRingMatrix) -> list[list[Any]]:
    return [
        [_encode_entry(matrix.entry(i, j)) for j in range(matrix.cols)]
        for i in range(matrix.rows)
    ]


# ---------------------------------------------------------------------------
# data model


@dataclasses.dataclass(frozen=True)
class ChainDegree:
    """One degree of the relative cellular data of a class."""

    degree: int
    rank: int
    relative_mask: tuple[bool, ...]
    stabilizers: tuple[tuple[int, ...], ...]
    chain_map: GroupRingMatrix
    boundary: GroupRingMatrix | None

    @property
    def unmasked_indices(self) -> tuple[int, ...]:
        return tuple(i for i, masked in enumerate(self.relative_mask) if not masked)

    @property
    def masked_indices(self) -> tuple[int, ...]:
        return tuple(i for i, masked in enumerate(self.relative_mask) if masked)


def _coset_representative(weyl: FiniteGroup, w: int, stabilizer: Sequence[int]) -> int:
    return min(weyl.multiply(w, s) for s in stabilizer)


def _coset_representatives(
    weyl: FiniteGroup, stabilizer: Sequence[int]
) -> tuple[int, ...]:
    return tuple(
        sorted({_coset_representative(weyl, w, stabilizer) for w in range(weyl.order)})
    )


@dataclasses.dataclass(frozen=True)
class IsoClassData:
    """The validated data of one isotropy class of a twisted self-map."""

    subgroup: Subgroup
    component: str
    full_weyl: WeylGroup
    aut: AutGroup
    twist: TwistData
    orbit_size: int
    degrees: tuple[ChainDegree, ...]

    @property
    def key(self) -> tuple[tuple[int, ...], str]:
        return (self.subgroup.members, self.component)

    @property
    def label(self) -> str:
        members = ", ".join(self.subgroup.member_labels)
        return f"(subgroup {{{members}}}, component '{self.component}')"

    @property
    def max_degree(self) -> int:
        return max((entry.degree for entry in self.degrees), default=-1)

    def entry_at(self, degree: int) -> ChainDegree | None:
        for entry in self.degrees:
            if entry.degree == degree:
                return entry
        return None

    def rank_at(self, degree: int) -> int:
        entry = self.entry_at(degree)
        return entry.rank if entry is not None else 0

    def pi1_aut(self) -> AutGroup:
        """The translation-only automorphism group used for expanded matrices."""
        return AutGroup(self.aut.pi1_rank, FiniteGroup.builtin("trivial"))

    def expanded_basis(self, entry: ChainDegree) -> list[tuple[int, int]]:
        """Pairs (row index, Weyl coset representative) indexing the expansion."""
        return [
            (j, r)
            for j in range(entry.rank)
            for r in _coset_representatives(self.aut.weyl, entry.stabilizers[j])
        ]

    def expand_matrix(
        self,
        matrix: GroupRingMatrix,
        source: ChainDegree,
        target: ChainDegree | None,
    ) -> GroupRingMatrix:
        """Expand a module matrix over the Weyl cosets to translation-ring form.

        Each source basis element splits into one element per coset
        representative r of its stabilizer; a term c·(v, w) of the entry at
        (j, i) contributes c·(θ(r)·v) at target coset representative of
        r·w modulo the target stabilizer.
        """
        pi1 = self.pi1_aut()
        source_basis = self.expanded_basis(source)
        target_basis = self.expanded_basis(target) if target is not None else []
        position = {key: p for p, key in enumerate(target_basis)}
        accumulated: dict[tuple[int, int], list] = {
            (a, b): [] for a in range(len(source_basis)) for b in range(len(target_basis))
        }
        for a, (j, r) in enumerate(source_basis):
            for i in range(matrix.cols):
                for vector, w, coefficient in matrix.entry(j, i).terms:
                    stabilizer = (
                        target.stabilizers[i] if target is not None else (self.aut.weyl.identity,)
                    )
                    rep = _coset_representative(
                        self.aut.weyl, self.aut.weyl.multiply(r, w), stabilizer
                    )
                    b = position.get((i, rep))
                    if b is None:
                        raise ValueError(
                            f"internal expansion error at {self.label}: "
                            f"missing target coset for row {i}."
                        )
                    accumulated[(a, b)].append((self.aut.act(r, vector), 0, coefficient))
        entries = tuple(
            GroupRingElement(pi1, accumulated[(a, b)])
            for a in range(len(source_basis))
            for b in range(len(target_basis))
        )
        return GroupRingMatrix(pi1, len(source_basis), len(target_basis), entries)

    def expanded_chain_map(self, degree: int) -> GroupRingMatrix:
        """The chain map at ``degree``, expanded over Weyl cosets."""
        entry = self.entry_at(degree)
        if entry is None:
            pi1 = self.pi1_aut()
            return GroupRingMatrix.zeros(pi1, 0, 0)
        return self.expand_matrix(entry.chain_map, entry, entry)

    def expanded_boundary(self, degree: int) -> GroupRingMatrix | None:
        """The boundary at ``degree`` expanded over Weyl cosets, if provided."""
        entry = self.entry_at(degree)
        if entry is None or entry.boundary is None:
            return None
        return self.expand_matrix(entry.boundary, entry, self.entry_at(degree - 1))


@dataclasses.dataclass(frozen=True)
class FixedPointDatum:
    """A recorded fixed point: its class, translation path, and local index."""

    subgroup: Subgroup
    component: str
    orbit: str | None
    index: int
    path: tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class EquivariantComplex:
    """A validated equivariant complex document with its twisted self-map."""

    group: FiniteGroup
    group_spec: Any
    name: str | None
    description: str | None
    classes: tuple[IsoClassData, ...]
    fixed_points: tuple[FixedPointDatum, ...]

    def class_for(
        self, subgroup_labels: Sequence[str], component: str
    ) -> IsoClassData:
        subgroup = Subgroup.from_labels(self.group, subgroup_labels)
        for iso in self.classes:
            if iso.key == (subgroup.members, component):
                return iso
        raise ValueError(
            f"no isotropy class (subgroup {{{', '.join(subgroup.member_labels)}}}, "
            f"component '{component}') in the complex."
        )

    def fixed_points_for(self, iso: IsoClassData) -> tuple[FixedPointDatum, ...]:
        return tuple(
            fp
            for fp in self.fixed_points
            if (fp.subgroup.members, fp.component) == iso.key
        )


# ---------------------------------------------------------------------------
# loading


def _load_group(spec: Any) -> FiniteGroup:
    spec = _require_mapping(spec, "group")
    if "builtin" in spec:
        _check_allowed_keys(spec, {"builtin"}, "group")
        if not isinstance(spec["builtin"], str):
            raise ValueError("group.builtin must be a string name.")
        return FiniteGroup.builtin(spec["builtin"])
    _check_allowed_keys(spec, {"labels", "table"}, "group")
    if "labels" not in spec or "table" not in spec:
        raise ValueError("group must give either 'builtin' or both 'labels' and 'table'.")
    labels = [str(v) for v in _require_list(spec["labels"], "group.labels")]
    table_rows = _require_list(spec["table"], "group.table")
    table = [
        [_decode_int(v, f"group.table[{i}][{j}]") for j, v in enumerate(_require_list(row, f"group.table[{i}]"))]
        for i, row in enumerate(table_rows)
    ]
    return FiniteGroup(labels, table)


def _load_stabilizer(
    raw: Any, weyl: FiniteGroup, where: str
) -> tuple[int, ...]:
    labels = _require_list(raw, where)
    indices = sorted({weyl.element_index(str(label)) for label in labels})
    subgroup = Subgroup(weyl, indices)  # validates closure and identity
    return subgroup.members


def _load_chain_degree(
    raw: Any,
    aut: AutGroup,
    previous: ChainDegree | None,
    where: str,
) -> ChainDegree:
    raw = _require_mapping(raw, where)
    _check_allowed_keys(
        raw,
        {"degree", "rank", "relative_mask", "stabilizers", "map", "boundary"},
        where,
    )
    if "degree" not in raw or "rank" not in raw:
        raise ValueError(f"chain entry at {where} needs 'degree' and 'rank'.")
    degree = _decode_int(raw["degree"], f"{where}.degree")
    rank = _decode_int(raw["rank"], f"{where}.rank")
    if degree < 0:
        raise ValueError(f"chain degree must be nonnegative at {where}, got {degree}.")
    if rank < 0:
        raise ValueError(f"chain rank must be nonnegative at {where}, got {rank}.")

    raw_mask = _require_list(raw.get("relative_mask", [False] * rank), f"{where}.relative_mask")
    if len(raw_mask) != rank:
        raise ValueError(
            f"relative_mask at {where} has length {len(raw_mask)}; expected {rank}."
        )
    for i, flag in enumerate(raw_mask):
        if not isinstance(flag, bool):
            raise ValueError(f"relative_mask[{i}] at {where} must be true or false.")
    mask = tuple(bool(v) for v in raw_mask)

    raw_stabilizers = raw.get("stabilizers")
    if raw_stabilizers is None:
        stabilizers = tuple((aut.weyl.identity,) for _ in range(rank))
    else:
        stabilizer_list = _require_list(raw_stabilizers, f"{where}.stabilizers")
        if len(stabilizer_list) != rank:
            raise ValueError(
                f"stabilizers at {where} has length {len(stabilizer_list)}; expected {rank}."
            )
        stabilizers = tuple(
            _load_stabilizer(s, aut.weyl, f"{where}.stabilizers[{i}]")
            for i, s in enumerate(stabilizer_list)
        )
    for i in range(rank):
        if not mask[i] and stabilizers[i] != (aut.weyl.identity,):
            raise ValueError(
                f"basis element {i} at {where} is unmasked but has a nontrivial "
                "stabilizer; relative basis elements must be free."
            )

    if "map" not in raw:
        raise ValueError(f"chain entry at {where} needs a 'map' matrix.")
    chain_map = _decode_group_ring_matrix(raw["map"], aut, rank, rank, f"{where}.map")

    boundary = None
    if "boundary" in raw:
        target_rank = previous.rank if previous is not None and previous.degree == degree - 1 else 0
        boundary = _decode_group_ring_matrix(
            raw["boundary"], aut, rank, target_rank, f"{where}.boundary"
        )

    return ChainDegree(
        degree=degree,
        rank=rank,
        relative_mask=mask,
        stabilizers=stabilizers,
        chain_map=chain_map,
        boundary=boundary,
    )


def _validate_row_invariance(iso: IsoClassData) -> None:
    """Rows with a stabilizer must be invariant under left translation by it."""
    weyl = iso.aut.weyl
    for entry in iso.degrees:
        matrices: list[tuple[str, GroupRingMatrix, ChainDegree | None]] = [
            ("map", entry.chain_map, entry)
        ]
        if entry.boundary is not None:
            matrices.append(("boundary", entry.boundary, iso.entry_at(entry.degree - 1)))
        for kind, matrix, target in matrices:
            if target is None:
                continue
            for j in range(entry.rank):
                stabilizer = entry.stabilizers[j]
                if stabilizer == (weyl.identity,):
                    continue
                for s in stabilizer:
                    if s == weyl.identity:
                        continue
                    translate = GroupRingElement.basis(iso.aut, (0,) * iso.aut.pi1_rank, s)
                    for i in range(matrix.cols):
                        original = matrix.entry(j, i).coset_reduce(target.stabilizers[i])
                        moved = (translate * matrix.entry(j, i)).coset_reduce(
                            target.stabilizers[i]
                        )
                        if original != moved:
                            raise ValueError(
                                f"{kind} row {j} in degree {entry.degree} of {iso.label} "
                                "is not invariant under its stabilizer; the module "
                                "structure is inconsistent."
                            )


def _validate_mask_closure(iso: IsoClassData) -> None:
    """Masked basis elements must map and bound into masked ones."""
    for entry in iso.degrees:
        for j in entry.masked_indices:
            for i in entry.unmasked_indices:
                if not entry.chain_map.entry(j, i).is_zero:
                    raise ValueError(
                        f"map row {j} in degree {entry.degree} of {iso.label} sends a "
                        "masked basis element to an unmasked one; the singular part "
                        "must be preserved."
                    )
        if entry.boundary is not None:
            target = iso.entry_at(entry.degree - 1)
            if target is None:
                continue
            for j in entry.masked_indices:
                for i in target.unmasked_indices:
                    if not entry.boundary.entry(j, i).is_zero:
                        raise ValueError(
                            f"boundary row {j} in degree {entry.degree} of {iso.label} "
                            "sends a masked basis element to an unmasked one; the "
                            "singular part must be a subcomplex."
                        )


def _validate_chain_algebra(iso: IsoClassData) -> None:
    """Expanded-level checks: boundaries compose to zero and commute with the map."""
    for entry in iso.degrees:
        expanded_boundary = iso.expanded_boundary(entry.degree)
        if expanded_boundary is None:
            continue
        below = iso.expanded_boundary(entry.degree - 1)
        if below is not None:
            if not (expanded_boundary @ below).is_zero:
                raise ValueError(
                    f"boundary composition is nonzero between degrees {entry.degree} "
                    f"and {entry.degree - 1} of {iso.label}."
                )
        map_here = iso.expanded_chain_map(entry.degree)
        map_below = iso.expanded_chain_map(entry.degree - 1)
        twisted = expanded_boundary.apply_twist(iso.twist)
        if twisted @ map_below != map_here @ expanded_boundary:
            raise ValueError(
                f"chain map does not commute with the boundary at degree "
                f"{entry.degree} of {iso.label}."
            )


def _load_iso_class(
    raw: Any,
    group: FiniteGroup,
    canonical_reps: dict[tuple[int, ...], Subgroup],
    where: str,
) -> IsoClassData:
    raw = _require_mapping(raw, where)
    _check_allowed_keys(
        raw,
        {
            "subgroup_class",
            "component",
            "pi1_rank",
            "weyl",
            "action",
            "phi_pi",
            "orbit_size",
            "chain",
        },
        where,
    )
    for required in ("subgroup_class", "component", "pi1_rank", "phi_pi", "chain"):
        if required not in raw:
            raise ValueError(f"isotropy class at {where} needs '{required}'.")

    subgroup = Subgroup.from_labels(
        group, [str(v) for v in _require_list(raw["subgroup_class"], f"{where}.subgroup_class")]
    )
    canonical = canonical_reps.get(subgroup.members)
    if canonical is None:
        raise ValueError(f"internal error: subgroup not found in conjugacy classes at {where}.")
    if canonical.members != subgroup.members:
        raise ValueError(
            f"subgroup_class {list(subgroup.member_labels)} at {where} is not the "
            f"canonical conjugacy representative; expected "
            f"{list(canonical.member_labels)}."
        )
    component = str(raw["component"])

    full_weyl = weyl_group(group, subgroup)
    quotient = full_weyl.group
    raw_weyl = raw.get("weyl")
    if raw_weyl is None:
        weyl = quotient
    else:
        labels = [str(v) for v in _require_list(raw_weyl, f"{where}.weyl")]
        indices = sorted({quotient.element_index(label) for label in labels})
        if quotient.identity not in indices:
            raise ValueError(
                f"weyl at {where} must contain the identity coset "
                f"'{quotient.labels[quotient.identity]}'."
            )
        weyl = quotient.restricted_to(indices)

    pi1_rank = _decode_int(raw["pi1_rank"], f"{where}.pi1_rank")
    if pi1_rank < 0:
        raise ValueError(f"pi1_rank at {where} must be nonnegative, got {pi1_rank}.")

    raw_action = raw.get("action", {})
    raw_action = _require_mapping(raw_action, f"{where}.action") if raw_action else {}
    action_matrices = []
    for w in range(weyl.order):
        label = weyl.labels[w]
        if label in raw_action:
            action_matrices.append(
                _decode_int_matrix(
                    raw_action[label], pi1_rank, pi1_rank, f"{where}.action['{label}']"
                )
            )
        else:
            action_matrices.append(IntMatrix.identity(pi1_rank))
    for label in raw_action:
        if label not in weyl.labels:
            raise ValueError(
                f"action at {where} names '{label}', which is not a Weyl element; "
                f"known: {list(weyl.labels)}."
            )
    aut = AutGroup(pi1_rank, weyl, tuple(action_matrices))

    phi_pi = _decode_int_matrix(raw["phi_pi"], pi1_rank, pi1_rank, f"{where}.phi_pi")
    twist = TwistData(phi_pi)
    twist.validate_against(aut)

    orbit_size = _decode_int(raw.get("orbit_size", 1), f"{where}.orbit_size")
    if orbit_size < 1:
        raise ValueError(f"orbit_size at {where} must be positive, got {orbit_size}.")

    raw_chain = _require_list(raw["chain"], f"{where}.chain")
    degrees: list[ChainDegree] = []
    for i, raw_degree in enumerate(raw_chain):
        previous = degrees[-1] if degrees else None
        entry = _load_chain_degree(raw_degree, aut, previous, f"{where}.chain[{i}]")
        if previous is not None and entry.degree <= previous.degree:
            raise ValueError(
                f"chain degrees at {where} must be strictly increasing; "
                f"{entry.degree} follows {previous.degree}."
            )
        degrees.append(entry)

    iso = IsoClassData(
        subgroup=subgroup,
        component=component,
        full_weyl=full_weyl,
        aut=aut,
        twist=twist,
        orbit_size=orbit_size,
        degrees=tuple(degrees),
    )
    _validate_row_invariance(iso)
    _validate_mask_closure(iso)
    _validate_chain_algebra(iso)
    return iso


def _load_fixed_point(
    raw: Any,
    complex_classes: dict[tuple[tuple[int, ...], str], IsoClassData],
    group: FiniteGroup,
    where: str,
) -> FixedPointDatum:
    raw = _require_mapping(raw, where)
    _check_allowed_keys(
        raw, {"subgroup_class", "component", "orbit", "index", "path"}, where
    )
    for required in ("subgroup_class", "component", "index", "path"):
        if required not in raw:
            raise ValueError(f"fixed point at {where} needs '{required}'.")
    subgroup = Subgroup.from_labels(
        group, [str(v) for v in _require_list(raw["subgroup_class"], f"{where}.subgroup_class")]
    )
    component = str(raw["component"])
    iso = complex_classes.get((subgroup.members, component))
    if iso is None:
        raise ValueError(
            f"fixed point at {where} references missing isotropy class "
            f"(subgroup {{{', '.join(subgroup.member_labels)}}}, component '{component}')."
        )
    orbit = raw.get("orbit")
    if orbit is not None and not isinstance(orbit, str):
        raise ValueError(f"orbit at {where} must be a string name.")
    index = _decode_int(raw["index"], f"{where}.index")
    path_list = _require_list(raw["path"], f"{where}.path")
    if len(path_list) != iso.aut.pi1_rank:
        raise ValueError(
            f"path at {where} has length {len(path_list)}; expected "
            f"{iso.aut.pi1_rank} for {iso.label}."
        )
    path = tuple(_decode_int(v, f"{where}.path[{i}]") for i, v in enumerate(path_list))
    return FixedPointDatum(
        subgroup=subgroup, component=component, orbit=orbit, index=index, path=path
    )


def load_complex(document: Mapping) -> EquivariantComplex:
    """Validate a parsed JSON document and build an :class:`EquivariantComplex`.

    Raises :class:`ValueError` with a location-specific message on the first
    violated constraint.

    >>> load_builtin("example1").classes[0].component
    'sphere'
    """
    document = _require_mapping(document, "document")
    _check_allowed_keys(
        document,
        {"format_version", "group", "name", "description", "iso_classes", "fixed_points"},
        "document",
    )
    if "format_version" not in document:
        raise ValueError("document needs 'format_version'.")
    version = _decode_int(document["format_version"], "format_version")
    if version != FORMAT_VERSION:
        raise ValueError(
            f"unsupported format_version {version}; this build reads version {FORMAT_VERSION}."
        )
    if "group" not in document:
        raise ValueError("document needs 'group'.")
    group = _load_group(document["group"])
    group_spec = document["group"]

    name = document.get("name")
    if name is not None and not isinstance(name, str):
        raise ValueError("name must be a string.")
    description = document.get("description")
    if description is not None and not isinstance(description, str):
        raise ValueError("description must be a string.")

    if "iso_classes" not in document:
        raise ValueError("document needs 'iso_classes' (possibly empty).")
    raw_classes = _require_list(document["iso_classes"], "iso_classes")

    canonical_reps: dict[tuple[int, ...], Subgroup] = {}
    for representative, members in conjugacy_classes_of_subgroups(group):
        for member in members:
            canonical_reps[member.members] = representative

    classes: list[IsoClassData] = []
    seen_keys: set[tuple[tuple[int, ...], str]] = set()
    for i, raw_class in enumerate(raw_classes):
        iso = _load_iso_class(raw_class, group, canonical_reps, f"iso_classes[{i}]")
        if iso.key in seen_keys:
            raise ValueError(f"duplicate isotropy class {iso.label} at iso_classes[{i}].")
        seen_keys.add(iso.key)
        classes.append(iso)

    class_by_key = {iso.key: iso for iso in classes}
    fixed_points: list[FixedPointDatum] = []
    raw_fixed = document.get("fixed_points", [])
    for i, raw_point in enumerate(_require_list(raw_fixed, "fixed_points")):
        fixed_points.append(
            _load_fixed_point(raw_point, class_by_key, group, f"fixed_points[{i}]")
        )

    orbit_indices: dict[tuple[tuple[int, ...], str, str], int] = {}
    for point in fixed_points:
        if point.orbit is None:
            continue
        key = (point.subgroup.members, point.component, point.orbit)
        if key in orbit_indices and orbit_indices[key] != point.index:
            raise ValueError(
                f"fixed point indices must be constant on each orbit; orbit "
                f"'{point.orbit}' of component '{point.component}' has indices "
                f"{orbit_indices[key]} and {point.index}."
            )
        orbit_indices[key] = point.index

    return EquivariantComplex(
        group=group,
        group_spec=group_spec,
        name=name,
        description=description,
        classes=tuple(classes),
        fixed_points=tuple(fixed_points),
    )


def load_builtin(name: str) -> EquivariantComplex:
    """Load one of the bundled example complexes by name.

    >>> sorted(BUILTIN_COMPLEXES)
    ['example1', 'example2', 'example3']
    """
    if name not in BUILTIN_COMPLEXES:
        raise ValueError(
            f"unknown builtin complex '{name}'; available: {sorted(BUILTIN_COMPLEXES)}."
        )
    return load_complex(BUILTIN_COMPLEXES[name])


# ---------------------------------------------------------------------------
# serialization


def _serialize_iso_class(iso: IsoClassData) -> dict:
    encoded: dict[str, Any] = {
        "subgroup_class": list(iso.subgroup.member_labels),
        "component": iso.component,
        "pi1_rank": iso.aut.pi1_rank,
        "weyl": list(iso.aut.weyl.labels),
    }
    action = {
        iso.aut.weyl.labels[w]: _encode_int_matrix(iso.aut.action[w])
        for w in range(iso.aut.weyl.order)
        if w != iso.aut.weyl.identity
    }
    if action:
        encoded["action"] = action
    encoded["phi_pi"] = _encode_int_matrix(iso.twist.phi_pi)
    encoded["orbit_size"] = iso.orbit_size
    chain = []
    for entry in iso.degrees:
        raw: dict[str, Any] = {
            "degree": entry.degree,
            "rank": entry.rank,
            "relative_mask": list(entry.relative_mask),
            "stabilizers": [
                [iso.aut.weyl.labels[s] for s in stabilizer]
                for stabilizer in entry.stabilizers
            ],
            "map": _encode_group_ring_matrix(entry.chain_map),
        }
        if entry.boundary is not None:
            raw["boundary"] = _encode_group_ring_matrix(entry.boundary)
        chain.append(raw)
    encoded["chain"] = chain
    return encoded


def _serialize_fixed_point(point: FixedPointDatum) -> dict:
    encoded: dict[str, Any] = {
        "subgroup_class": list(point.subgroup.member_labels),
        "component": point.component,
    }
    if point.orbit is not None:
        encoded["orbit"] = point.orbit
    encoded["index"] = _encode_int(point.index)
    encoded["path"] = [_encode_int(v) for v in point.path]
    return encoded


def serialize_complex(complex_data: EquivariantComplex) -> dict:
    """Encode a complex back into a document; ``load_complex`` inverts this.

    The encoding is canonical: loading a document and serializing it again
    always produces the same result as serializing once.
    """
    document: dict[str, Any] = {"format_version": FORMAT_VERSION}
    if isinstance(complex_data.group_spec, Mapping) and "builtin" in complex_data.group_spec:
        document["group"] = {"builtin": complex_data.group_spec["builtin"]}
    else:
        document["group"] = {
            "labels": list(complex_data.group.labels),
            "table": [list(row) for row in complex_data.group.table],
        }
    if complex_data.name is not None:
        document["name"] = complex_data.name
    if complex_data.description is not None:
        document["description"] = complex_data.description
    document["iso_classes"] = [_serialize_iso_class(iso) for iso in complex_data.classes]
    if complex_data.fixed_points:
        document["fixed_points"] = [
            _serialize_fixed_point(point) for point in complex_data.fixed_points
        ]
    return document
