"""Independent group-theoretic oracles computed straight from Cayley
tables, with no Hopf machinery, for cross-checking the solvability layer."""


def identity_of(table):
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x == table[x][e] for x in range(n)):
            return e
    raise ValueError("no identity")


def inverse_map(table):
    e = identity_of(table)
    inv = {}
    for x in range(len(table)):
        for y in range(len(table)):
            if table[x][y] == e:
                inv[x] = y
                break
    return inv


def subgroup_closure(table, elems):
    e = identity_of(table)
    out = {e} | set(elems)
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
    return frozenset(out)


def commutator_subgroup(table, members=None):
    inv = inverse_map(table)
    members = list(members) if members is not None else list(range(len(table)))
    comms = []
    for a in members:
        for b in members:
            comms.append(table[table[a][b]][table[inv[a]][inv[b]]])
    return subgroup_closure(table, comms)


def derived_series(table):
    current = frozenset(range(len(table)))
    series = [current]
    while True:
        nxt = commutator_subgroup(table, current)
        if nxt == current:
            return series
        series.append(nxt)
        current = nxt


def is_solvable_group(table):
    return len(derived_series(table)[-1]) == 1


def center_of_group(table):
    n = len(table)
    return frozenset(x for x in range(n) if all(table[x][y] == table[y][x] for y in range(n)))
