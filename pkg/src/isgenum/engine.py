"""Full enumeration driver, count ledger, fixed-parameters mode and output.

The main loop follows the nesting: for each order m of the idempotent
semilattice, for each semilattice E, for each block-size shape with an
admissible composition, run every (composition, D-partition, group
assignment, basis order) combination, keep one representative per
isomorphism class, and flush per (E, shape).  Work is parallelized one
task per semilattice; results are merged in generation order, so ledgers
and output files do not depend on the worker count.
"""

from __future__ import annotations

import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import groups as _groups
from .esn import esn
from .gposets import e_groupoid, g_posets
from .iso import invariants, is_isoc
from .orders import MeetSemilattice, format_cover_line, meet_semilattices
from .shapes import (
    admissible_compositions,
    d_partitions,
    group_maps,
    is_d_partition,
    partitions,
)

__all__ = [
    "EnumerationConfig",
    "CountLedger",
    "RunResult",
    "enumerate_semigroups",
    "enumerate_counts_only",
    "enumerate_fixed",
    "run_enumeration",
    "breakdown_csv",
    "write_cayley_files",
    "write_semilattice_file",
]


@dataclass(frozen=True)
class EnumerationConfig:
    """Knobs for one enumeration run."""
    order: int
    mode: str = "counts"            # "counts" or "full"
    threads: int = 1
    out_dir: str | None = None
    breakdown_path: str | None = None
    progress: bool = False

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.threads < 1:
            raise ValueError("thread count must be positive")
        if self.mode not in ("counts", "full"):
            raise ValueError(f"unknown mode {self.mode!r}")


class CountLedger:
    """Per-(idempotent count, shape) tallies plus run statistics.

    Each cell holds [isgs, commutative isgs, monoids, commutative monoids,
    contributing semilattices, contributing lattices].
    """

    __slots__ = ("cells", "generated", "immediate", "iso_tests")

    def __init__(self):
        self.cells = {}
        self.generated = 0
        self.immediate = 0
        self.iso_tests = 0

    def add_cell(self, m, shape, isgs, comm, is_lattice):
        if isgs == 0:
            return
        cell = self.cells.setdefault((m, tuple(shape)), [0, 0, 0, 0, 0, 0])
        cell[0] += isgs
        cell[1] += comm
        cell[4] += 1
        if is_lattice:
            cell[2] += isgs
            cell[3] += comm
            cell[5] += 1

    def add_stats(self, generated, immediate, iso_tests):
        self.generated += generated
        self.immediate += immediate
        self.iso_tests += iso_tests

    def merge(self, other: "CountLedger"):
        for key, vals in other.cells.items():
            cell = self.cells.setdefault(key, [0, 0, 0, 0, 0, 0])
            for i, v in enumerate(vals):
                cell[i] += v
        self.add_stats(other.generated, other.immediate, other.iso_tests)

    def totals(self):
        """(inverse semigroups, commutative, monoids, commutative monoids)."""
        out = [0, 0, 0, 0]
        for vals in self.cells.values():
            for i in range(4):
                out[i] += vals[i]
        return tuple(out)

    def cell(self, m, shape):
        return tuple(self.cells.get((m, tuple(shape)), (0, 0, 0, 0, 0, 0)))

    def sorted_cells(self):
        return sorted(
            self.cells.items(),
            key=lambda kv: (kv[0][0], tuple(-p for p in kv[0][1])),
        )

    def __eq__(self, other):
        return isinstance(other, CountLedger) and self.cells == other.cells

    def __repr__(self):
        t = self.totals()
        return f"CountLedger(isgs={t[0]}, comm={t[1]}, ims={t[2]}, cims={t[3]})"


@dataclass
class RunResult:
    order: int
    ledger: CountLedger
    tables: list = field(default_factory=list)  # (cayley rows, #idempotents)


# ---------------------------------------------------------------------------
# per-semilattice work


def _shapes_with_compositions(n, m):
    out = []
    for shape in partitions(m):
        comps = admissible_compositions(n, shape)
        if comps:
            out.append((shape, comps))
    return out


def _search_semilattice(E, n, catalog, shapes_with_comps, collect):
    """All accepted semigroups over one semilattice, flushed per shape.

    Returns a list of (shape, count, commutative count, tables, stats).
    """
    results = []
    for shape, comps in shapes_with_comps:
        dparts = d_partitions(E, shape)
        if not dparts:
            continue
        store = {}
        count = comm = 0
        generated = immediate = iso_tests = 0
        tables = [] if collect else None
        for C in comps:
            for P in dparts:
                for f in group_maps(P, C, catalog):
                    basis = e_groupoid(E, P, f)
                    for order in g_posets(basis):
                        S = esn(basis, order)
                        generated += 1
                        key = invariants(S)
                        bucket = store.get(key)
                        if bucket is None:
                            immediate += 1
                            store[key] = [S]
                        else:
                            new = True
                            for T in bucket:
                                iso_tests += 1
                                if is_isoc(S, T):
                                    new = False
                                    break
                            if not new:
                                continue
                            bucket.append(S)
                        count += 1
                        if S.is_commutative():
                            comm += 1
                        if collect:
                            tables.append((S.table, E.size))
        if count:
            results.append(
                (shape, count, comm, tables, (generated, immediate, iso_tests))
            )
    return results


# worker-side globals, set up once per process
_WORKER_STATE = {}


def _worker_init(n):
    _WORKER_STATE["n"] = n
    _WORKER_STATE["catalog"] = _groups.catalog(n)
    _WORKER_STATE["shapes"] = {}


def _worker_task(args):
    m, down, collect = args
    n = _WORKER_STATE["n"]
    shapes = _WORKER_STATE["shapes"].get(m)
    if shapes is None:
        shapes = _shapes_with_compositions(n, m)
        _WORKER_STATE["shapes"][m] = shapes
    E = MeetSemilattice(down)
    res = _search_semilattice(E, n, _WORKER_STATE["catalog"], shapes, collect)
    return E.has_maximum(), res


# ---------------------------------------------------------------------------
# drivers


def run_enumeration(config: EnumerationConfig) -> RunResult:
    """Run a full or counts-only enumeration per the config."""
    n = config.order
    collect = config.mode == "full"
    ledger = CountLedger()
    result = RunResult(order=n, ledger=ledger)
    m_top = n if collect else n - 1
    catalog = _groups.catalog(n)

    pool = None
    if config.threads > 1:
        pool = ProcessPoolExecutor(
            max_workers=config.threads,
            initializer=_worker_init,
            initargs=(n,),
        )
    try:
        for m in range(1, m_top + 1):
            shapes = _shapes_with_compositions(n, m)
            if not shapes:
                continue
            semis = list(meet_semilattices(m))
            if pool is not None:
                args = [(m, E.down, collect) for E in semis]
                outcomes = pool.map(_worker_task, args, chunksize=8)
            else:
                outcomes = (
                    (E.has_maximum(),
                     _search_semilattice(E, n, catalog, shapes, collect))
                    for E in semis
                )
            for i, (is_lattice, res) in enumerate(outcomes):
                for shape, count, comm, tables, stats in res:
                    ledger.add_cell(m, shape, count, comm, is_lattice)
                    ledger.add_stats(*stats)
                    if collect and tables:
                        result.tables.extend(tables)
                if config.progress:
                    print(
                        f"\rm={m}: {i + 1}/{len(semis)} semilattices",
                        end="", flush=True, file=sys.stderr,
                    )
            if config.progress:
                print(file=sys.stderr)
    finally:
        if pool is not None:
            pool.shutdown()

    if not collect:
        # pure-semilattice row: the only inverse semigroup of order n whose
        # idempotents exhaust it is the semilattice itself
        shape = (1,) * n
        for E in meet_semilattices(n):
            ledger.add_cell(n, shape, 1, 1, E.has_maximum())
    return result


def enumerate_counts_only(n: int, threads: int = 1,
                          progress: bool = False) -> CountLedger:
    """Count ledger for order n without materializing Cayley tables."""
    cfg = EnumerationConfig(order=n, mode="counts", threads=threads,
                            progress=progress)
    return run_enumeration(cfg).ledger


def enumerate_semigroups(n: int):
    """Stream one representative per isomorphism class of order n."""
    if n < 1:
        raise ValueError("order must be positive")
    catalog = _groups.catalog(n)
    for m in range(1, n + 1):
        shapes = _shapes_with_compositions(n, m)
        if not shapes:
            continue
        for E in meet_semilattices(m):
            for shape, comps in shapes:
                dparts = d_partitions(E, shape)
                if not dparts:
                    continue
                store = {}
                for C in comps:
                    for P in dparts:
                        for f in group_maps(P, C, catalog):
                            basis = e_groupoid(E, P, f)
                            for order in g_posets(basis):
                                S = esn(basis, order)
                                key = invariants(S)
                                bucket = store.get(key)
                                if bucket is None:
                                    store[key] = [S]
                                elif any(is_isoc(S, T) for T in bucket):
                                    continue
                                else:
                                    bucket.append(S)
                                yield S


def enumerate_fixed(E, P, f) -> list:
    """All inverse semigroups with idempotents E, D-restriction P and
    maximal subgroups f, one per isomorphism class."""
    P = tuple(tuple(X) for X in P)
    if sorted(x for X in P for x in X) != list(range(E.size)):
        raise ValueError("P must partition the elements of E")
    if any(len(P[i]) < len(P[i + 1]) for i in range(len(P) - 1)):
        raise ValueError("blocks of P must be weakly decreasing in size")
    if not is_d_partition(E, P):
        raise ValueError("P does not satisfy the D-partition condition")
    f = tuple(f)
    if len(f) != len(P):
        raise ValueError("one group per block required")
    basis = e_groupoid(E, P, f)
    store = {}
    accepted = []
    for order in g_posets(basis):
        S = esn(basis, order)
        key = invariants(S)
        bucket = store.get(key)
        if bucket is None:
            store[key] = [S]
        elif any(is_isoc(S, T) for T in bucket):
            continue
        else:
            bucket.append(S)
        accepted.append(S)
    return accepted


# ---------------------------------------------------------------------------
# output


CSV_HEADER = "n,idempotents,shape,isgs,comm_isgs,ims,comm_ims,semilattices,lattices"


def breakdown_csv(ledger: CountLedger, n: int) -> str:
    lines = [CSV_HEADER]
    for (m, shape), vals in ledger.sorted_cells():
        shape_txt = ".".join(str(p) for p in shape)
        lines.append(
            f"{n},{m},{shape_txt},{vals[0]},{vals[1]},{vals[2]},{vals[3]},"
            f"{vals[4]},{vals[5]}"
        )
    return "\n".join(lines) + "\n"


def write_cayley_files(result: RunResult, out_dir: str) -> int:
    """One text file per semigroup: `n=<size> e=<#idempotents>` then the table."""
    os.makedirs(out_dir, exist_ok=True)
    for seq, (table, n_idem) in enumerate(result.tables):
        path = os.path.join(out_dir, f"isg_n{result.order}_{seq:06d}.tbl")
        with open(path, "w", encoding="ascii") as fh:
            fh.write(f"n={len(table)} e={n_idem}\n")
            for row in table:
                fh.write(" ".join(str(v) for v in row) + "\n")
    return len(result.tables)


def write_semilattice_file(m: int, path: str) -> int:
    """Cover-relation lines for every semilattice of order m."""
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for E in meet_semilattices(m):
            fh.write(format_cover_line(E) + "\n")
            count += 1
    return count
