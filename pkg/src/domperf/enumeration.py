"""Exhaustive check of the three recognizers over small connected graphs.

Every labeled graph on ``n <= 7`` vertices is an edge mask over the pairs
``(0,1), (0,2), (1,2), (0,3), ...`` (graph6 column order). Masks are walked
in increasing numeric order, disconnected ones skipped, and each connected
graph classified by the structural and forbidden-configuration recognizers.
The definitional oracle runs on every graph up to ``oracle_max_n`` and on a
seeded uniform sample above it.
"""

from __future__ import annotations

import logging
import os
import random
import time
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional

from .graph_core import Graph, GraphError, component_mask, write_graph6
from .perfection import (
    CertificateError,
    RecognizerDisagreement,
    Verdict,
    classify_forbidden,
    classify_structural,
    is_perfect_oracle,
    verify_certificate,
)

__all__ = [
    "ENUMERATION_MAX_ORDER",
    "Disagreement",
    "OrderRecord",
    "VerificationReport",
    "enumerate_connected_graphs",
    "count_connected_labeled",
    "verify_theorem",
]

log = logging.getLogger(__name__)

ENUMERATION_MAX_ORDER = 7
_CHUNK_BITS = 7


def count_connected_labeled(n: int) -> int:
    """Number of connected labeled graphs on ``n`` vertices.

    Uses the recurrence that splits off the component containing vertex 0;
    it never touches the enumerator.
    """
    if not 1 <= n <= 16:
        raise ValueError(f"n must be in 1..16, got {n}")
    counts = [0, 1]
    for m in range(2, n + 1):
        total = 2 ** comb(m, 2)
        for k in range(1, m):
            total -= comb(m - 1, k - 1) * counts[k] * 2 ** comb(m - k, 2)
        counts.append(total)
    return counts[n]


def _edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _chunk_tables(n: int) -> list[list[int]]:
    # Each table maps a 7-bit slice of the edge mask to the adjacency rows it
    # contributes, packed as row v in bits 8v..8v+7.
    pairs = _edge_pairs(n)
    tables = []
    for start in range(0, len(pairs), _CHUNK_BITS):
        chunk = pairs[start:start + _CHUNK_BITS]
        table = []
        for value in range(1 << len(chunk)):
            packed = 0
            for bit, (i, j) in enumerate(chunk):
                if value >> bit & 1:
                    packed |= 1 << (8 * i + j) | 1 << (8 * j + i)
            table.append(packed)
        tables.append(table)
    return tables


def _check_order(n: int) -> None:
    if not 1 <= n <= ENUMERATION_MAX_ORDER:
        raise GraphError(f"exhaustive enumeration supports orders 1..{ENUMERATION_MAX_ORDER}, got {n}")


def _connected_rows(n: int, lo: int, hi: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """(mask, rows) for connected graphs with edge mask in ``[lo, hi)``."""
    if n == 1:
        if lo <= 0 < hi:
            yield 0, (0,)
        return
    tables = _chunk_tables(n)
    shifts = tuple(8 * v for v in range(n))
    full = (1 << n) - 1
    low_bits = (1 << _CHUNK_BITS) - 1
    for mask in range(lo, hi):
        packed = 0
        rest = mask
        for table in tables:
            packed |= table[rest & low_bits]
            rest >>= _CHUNK_BITS
        rows = tuple(packed >> s & 255 for s in shifts)
        if component_mask(rows, 0, full) == full:
            yield mask, rows


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on ``0..n-1``, in increasing edge-mask order."""
    _check_order(n)
    for _, rows in _connected_rows(n, 0, 1 << comb(n, 2)):
        yield Graph._trusted(rows)


# --- report -------------------------------------------------------------------


@dataclass(frozen=True)
class Disagreement:
    mask: int
    graph6: str
    structural: str
    forbidden: str
    oracle: str

    def line(self) -> str:
        return f"DISAGREE {self.graph6} structural={self.structural} forbidden={self.forbidden} oracle={self.oracle}"


@dataclass
class OrderRecord:
    n: int
    expected_connected: int
    oracle_mode: str
    scanned: int = 0
    connected: int = 0
    perfect: int = 0
    agree: int = 0
    oracle_checked: int = 0
    certificates_checked: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)
    bad_certificates: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return (
            not self.disagreements
            and not self.bad_certificates
            and self.agree == self.connected == self.expected_connected
        )

    def line(self, timing: bool = True) -> str:
        text = (
            f"n={self.n} connected={self.connected} perfect={self.perfect} agree={self.agree} "
            f"oracle_mode={self.oracle_mode} expected={self.expected_connected} scanned={self.scanned} "
            f"oracle_checked={self.oracle_checked} certificates={self.certificates_checked}"
        )
        if timing:
            text += f" seconds={self.seconds:.2f}"
        return text


@dataclass
class VerificationReport:
    max_n: int
    oracle_max_n: int
    sample: Optional[int]
    seed: Optional[int]
    orders: list[OrderRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(rec.ok for rec in self.orders)

    @property
    def disagreements(self) -> list[Disagreement]:
        return [d for rec in self.orders for d in rec.disagreements]

    def header(self) -> str:
        return (
            f"# domperf verify max_n={self.max_n} oracle_max_n={self.oracle_max_n} "
            f"sample={self.sample if self.sample is not None else 'none'} "
            f"seed={self.seed if self.seed is not None else 'none'}"
        )

    def to_text(self, timing: bool = True) -> str:
        lines = [self.header()]
        for rec in self.orders:
            lines.append(rec.line(timing))
            lines.extend(d.line() for d in rec.disagreements)
            lines.extend(f"BADCERT {b}" for b in rec.bad_certificates)
        lines.append(f"RESULT {'OK' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_dict(self, timing: bool = True) -> dict:
        orders = []
        for rec in self.orders:
            item = {
                "n": rec.n,
                "scanned": rec.scanned,
                "connected": rec.connected,
                "expected_connected": rec.expected_connected,
                "perfect": rec.perfect,
                "agree": rec.agree,
                "oracle_mode": rec.oracle_mode,
                "oracle_checked": rec.oracle_checked,
                "certificates_checked": rec.certificates_checked,
                "disagreements": [vars(d) for d in rec.disagreements],
                "bad_certificates": list(rec.bad_certificates),
            }
            if timing:
                item["seconds"] = round(rec.seconds, 3)
            orders.append(item)
        return {
            "max_n": self.max_n,
            "oracle_max_n": self.oracle_max_n,
            "sample": self.sample,
            "seed": self.seed,
            "orders": orders,
            "result": "OK" if self.ok else "FAIL",
        }


# --- workers ------------------------------------------------------------------


def _run(name: str, recognizer, g: Graph, bad: list[str]) -> Verdict:
    try:
        cert = recognizer(g)
    except RecognizerDisagreement as exc:
        return exc.verdicts[name]
    try:
        verify_certificate(g, cert)
    except CertificateError as exc:
        bad.append(f"{write_graph6(g)} {name} {exc}")
    return cert.verdict


@dataclass
class _Partial:
    scanned: int = 0
    connected: int = 0
    perfect: int = 0
    oracle_checked: int = 0
    certificates_checked: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)
    bad_certificates: list[str] = field(default_factory=list)


def _classify(g: Graph, mask: int, with_oracle: bool, part: _Partial) -> None:
    structural = _run("structural", classify_structural, g, part.bad_certificates)
    forbidden = _run("forbidden", classify_forbidden, g, part.bad_certificates)
    part.certificates_checked += 2
    oracle = None
    if with_oracle:
        oracle = _run("oracle", is_perfect_oracle, g, part.bad_certificates)
        part.oracle_checked += 1
        part.certificates_checked += 1
    if structural is Verdict.PERFECT:
        part.perfect += 1
    if structural is not forbidden or (oracle is not None and oracle is not structural):
        part.disagreements.append(
            Disagreement(mask, write_graph6(g), structural.value, forbidden.value, oracle.value if oracle else "-")
        )


def _scan_range(n: int, lo: int, hi: int, full_oracle: bool) -> _Partial:
    part = _Partial(scanned=hi - lo)
    for mask, rows in _connected_rows(n, lo, hi):
        part.connected += 1
        _classify(Graph._trusted(rows), mask, full_oracle, part)
    return part


def _scan_task(args: tuple[int, int, int, bool]) -> _Partial:
    return _scan_range(*args)


def _sample_masks(n: int, k: int, seed: int) -> list[int]:
    """``k`` distinct connected edge masks drawn uniformly by rejection."""
    total = count_connected_labeled(n)
    if k >= total:
        return [mask for mask, _ in _connected_rows(n, 0, 1 << comb(n, 2))]
    rng = random.Random(seed * 1000003 + n)
    tables = _chunk_tables(n)
    full = (1 << n) - 1
    nbits = comb(n, 2)
    chosen: set[int] = set()
    while len(chosen) < k:
        mask = rng.getrandbits(nbits)
        if mask in chosen:
            continue
        packed = 0
        rest = mask
        for table in tables:
            packed |= table[rest & ((1 << _CHUNK_BITS) - 1)]
            rest >>= _CHUNK_BITS
        rows = tuple(packed >> (8 * v) & 255 for v in range(n))
        if component_mask(rows, 0, full) == full:
            chosen.add(mask)
    return sorted(chosen)


def _rows_for_mask(n: int, mask: int) -> tuple[int, ...]:
    rows = [0] * n
    for bit, (i, j) in enumerate(_edge_pairs(n)):
        if mask >> bit & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return tuple(rows)


def _merge(rec: OrderRecord, part: _Partial) -> None:
    rec.scanned += part.scanned
    rec.connected += part.connected
    rec.perfect += part.perfect
    rec.oracle_checked += part.oracle_checked
    rec.certificates_checked += part.certificates_checked
    rec.disagreements.extend(part.disagreements)
    rec.bad_certificates.extend(part.bad_certificates)


def _ranges(total: int, pieces: int) -> list[tuple[int, int]]:
    step = -(-total // pieces)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def verify_theorem(
    max_n: int,
    oracle_max_n: Optional[int] = None,
    sample: Optional[int] = None,
    seed: int = 0,
    jobs: int = 1,
) -> VerificationReport:
    """Run all recognizers over every connected graph of order ``2..max_n``.

    The structural and forbidden-configuration recognizers run on every
    graph. The definitional oracle runs on every graph of order up to
    ``oracle_max_n`` (default ``min(max_n, 6)``) and, when ``sample`` is
    given, on ``sample`` uniformly drawn connected graphs of each larger
    order. ``jobs > 1`` splits each order's mask range across processes;
    the merged report is identical to a serial run apart from timings.
    """
    if not 2 <= max_n <= ENUMERATION_MAX_ORDER:
        raise GraphError(f"max_n must be in 2..{ENUMERATION_MAX_ORDER}, got {max_n}")
    if oracle_max_n is None:
        oracle_max_n = min(max_n, 6)
    if not 1 <= oracle_max_n <= max_n:
        raise GraphError(f"oracle_max_n must be in 1..max_n, got {oracle_max_n}")
    if sample is not None and sample < 1:
        raise GraphError(f"sample must be positive, got {sample}")
    if jobs < 1:
        raise GraphError(f"jobs must be positive, got {jobs}")

    report = VerificationReport(max_n, oracle_max_n, sample, seed if sample is not None else None)
    pool = None
    if jobs > 1:
        import multiprocessing

        pool = multiprocessing.get_context("fork" if os.name == "posix" else "spawn").Pool(jobs)
    try:
        for n in range(2, max_n + 1):
            started = time.perf_counter()
            full_oracle = n <= oracle_max_n
            if full_oracle:
                mode = "full"
            elif sample is not None:
                mode = f"sample:{sample}"
            else:
                mode = "off"
            rec = OrderRecord(n, count_connected_labeled(n), mode)
            total = 1 << comb(n, 2)
            if pool is not None and total >= 1 << 10:
                tasks = [(n, lo, hi, full_oracle) for lo, hi in _ranges(total, jobs * 8)]
                for part in pool.imap(_scan_task, tasks):
                    _merge(rec, part)
            else:
                _merge(rec, _scan_range(n, 0, total, full_oracle))

            if not full_oracle and sample is not None:
                extra = _Partial()
                for mask in _sample_masks(n, sample, seed):
                    _classify(Graph._trusted(_rows_for_mask(n, mask)), mask, True, extra)
                rec.oracle_checked += extra.oracle_checked
                rec.certificates_checked += extra.certificates_checked
                rec.bad_certificates.extend(extra.bad_certificates)
                known = {d.mask: i for i, d in enumerate(rec.disagreements)}
                for d in extra.disagreements:
                    if d.mask in known:
                        rec.disagreements[known[d.mask]] = d
                    else:
                        rec.disagreements.append(d)
                rec.disagreements.sort(key=lambda d: d.mask)

            rec.agree = rec.connected - len(rec.disagreements)
            rec.seconds = time.perf_counter() - started
            log.info(rec.line())
            report.orders.append(rec)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return report
