"""The bundled example corpus and its coideal lattices.

Names, builders and the conductor needed to split each algebra:

    z2, z3, z6, s3    group algebras (conductors 1, 3, 3, 3)
    s3-dual           the commutative dual of s3 (conductor 3)
    d4, q8            dihedral and quaternion group algebras (conductor 4)
    d-z2, d-s3        Drinfeld doubles with their canonical R-matrices

The corpus also ships as data files under hopflab/data; loading a file and
rebuilding from the table must agree byte for byte.
"""

from __future__ import annotations

from importlib import resources

from .builders import (
    cyclic_group_table,
    dihedral8_table,
    drinfeld_double,
    group_algebra,
    quaternion_table,
    symmetric3_table,
)
from .coideal import coideal_closure, coideal_from_subspace, invariants_of
from .hopf import HopfAlgebra
from .linalg import Subspace
from .serialize import load_hopf


def _z2():
    table, labels = cyclic_group_table(2)
    return group_algebra(table, conductor=1, labels=labels, name="kZ2")


def _z3():
    table, labels = cyclic_group_table(3)
    return group_algebra(table, conductor=3, labels=labels, name="kZ3")


def _z6():
    table, labels = cyclic_group_table(6)
    return group_algebra(table, conductor=3, labels=labels, name="kZ6")


def _s3():
    table, labels = symmetric3_table()
    return group_algebra(table, conductor=3, labels=labels, name="kS3")


def _s3_dual():
    return _s3().dual()


def _d4():
    table, labels = dihedral8_table()
    return group_algebra(table, conductor=4, labels=labels, name="kD4")


def _q8():
    table, labels = quaternion_table()
    return group_algebra(table, conductor=4, labels=labels, name="kQ8")


def _d_z2():
    return drinfeld_double(_z2())


def _d_s3():
    return drinfeld_double(_s3())


CORPUS_BUILDERS = {
    "z2": _z2,
    "z3": _z3,
    "z6": _z6,
    "s3": _s3,
    "s3-dual": _s3_dual,
    "d4": _d4,
    "q8": _q8,
    "d-z2": _d_z2,
    "d-s3": _d_s3,
}

GROUP_TABLES = {
    "z2": lambda: cyclic_group_table(2),
    "z3": lambda: cyclic_group_table(3),
    "z6": lambda: cyclic_group_table(6),
    "s3": symmetric3_table,
    "d4": dihedral8_table,
    "q8": quaternion_table,
}


def corpus_names():
    return list(CORPUS_BUILDERS)


def build(name: str) -> HopfAlgebra:
    try:
        return CORPUS_BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown corpus algebra {name!r}; choose from {corpus_names()}") from None


def corpus_file(name: str):
    """Path to the bundled data file for a corpus algebra."""
    if name not in CORPUS_BUILDERS:
        raise KeyError(f"unknown corpus algebra {name!r}")
    return resources.files("hopflab").joinpath("data", f"{name}.hopf.json")


def load(name: str, verify=True):
    """Load a corpus algebra from its bundled data file."""
    return load_hopf(str(corpus_file(name)), verify=verify)


def subgroups_of_table(table):
    """All subgroups, as sorted element tuples (every group here is
    generated by at most two elements)."""
    n = len(table)
    identity = next(e for e in range(n) if all(table[e][x] == x for x in range(n)))

    def closure(elems):
        out = {identity} | set(elems)
        frontier = list(out)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(out):
                    for c in (table[a][b], table[b][a]):
                        if c not in out:
                            out.add(c)
                            nxt.append(c)
            frontier = nxt
        return tuple(sorted(out))

    found = {closure([])}
    for a in range(n):
        found.add(closure([a]))
        for b in range(a + 1, n):
            found.add(closure([a, b]))
    return sorted(found, key=lambda s: (len(s), s))


def coideal_lattice(name: str, hopf: HopfAlgebra | None = None):
    """The catalogued left coideal subalgebras of a corpus member, as
    (label, CoidealSubalgebra) pairs.

    Group algebras list their subgroup algebras; the dual of s3 lists the
    invariants of each subgroup algebra on the dual side (including the
    3-dimensional non-Hopf coideal); doubles of abelian groups list the
    subgroups of their grouplike group.
    """
    if hopf is None:
        hopf = build(name)
    out = []
    if name in GROUP_TABLES:
        table, labels = GROUP_TABLES[name]()
        for members in subgroups_of_table(table):
            gens = [hopf.basis(i) for i in members]
            label = "{" + ",".join(labels[i] for i in members) + "}"
            out.append((label, coideal_closure(hopf, gens)))
        return out
    if name == "s3-dual":
        table, labels = symmetric3_table()
        ks3 = hopf.dual()
        for members in subgroups_of_table(table):
            span = Subspace.from_vectors(
                hopf.field, hopf.dim, [ks3.basis(i) for i in members]
            )
            sub = invariants_of(hopf, span)
            label = "inv{" + ",".join(labels[i] for i in members) + "}"
            out.append((label, coideal_from_subspace(hopf, sub)))
        return out
    if name == "d-z2":
        groups = hopf.grouplikes()
        index = {tuple(g): i for i, g in enumerate(groups)}
        table = []
        for g in groups:
            row = []
            for h in groups:
                row.append(index[tuple(hopf.multiply(g, h))])
            table.append(row)
        for members in subgroups_of_table(table):
            gens = [groups[i] for i in members]
            out.append((f"grouplikes{tuple(members)}", coideal_closure(hopf, gens)))
        return out
    raise KeyError(f"no catalogued lattice for {name!r}")


def write_corpus_files(target_dir):
    """Regenerate the bundled data files (canonical serialization)."""
    import os

    from .serialize import save_hopf

    os.makedirs(target_dir, exist_ok=True)
    written = {}
    for name in corpus_names():
        path = os.path.join(target_dir, f"{name}.hopf.json")
        written[name] = save_hopf(build(name), path)
    return written
