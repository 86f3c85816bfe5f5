"""Counterexample searches over edge colourings.

  NORINE  every antipodal colouring has a monochromatic path between
          some antipodal pair
  A       every antipodal colouring has a monochromatic geodesic between
          some antipodal pair
  B       every colouring has an antipodal geodesic changing colour at
          most once

Exhaustive mode enumerates the whole space (antipodal colourings for
NORINE/A, all colourings for B) and is capped at n = 4 resp. n = 3;
sample mode draws ``budget`` seeded colourings. The sweep halts at the
first counterexample and embeds the colouring. Work is blocked by
colouring index; blocks merge in order, so the report is identical for
any --jobs value.
"""

from __future__ import annotations

import multiprocessing
from fractions import Fraction

from ..colourings import (
    antipodal_colouring_from_index,
    antipodal_pair_count,
    colouring_from_index,
    edge_count,
    find_monochromatic_antipodal_geodesic,
    find_monochromatic_antipodal_path,
    find_one_change_antipodal_geodesic,
    min_colour_changes_antipodal,
    random_antipodal_colouring,
    random_colouring,
    validate_witness,
)
from .generators import subseed
from .serialize import Report, colouring_to_obj

__all__ = ["CONJECTURES", "run_search"]

CONJECTURES = ("NORINE", "A", "B")

#: Exhaustive spaces stay enumerable up to these dimensions
#: (2^16 antipodal colourings at n=4, 2^12 colourings at n=3).
EXHAUSTIVE_CAP_ANTIPODAL = 4
EXHAUSTIVE_CAP_GENERAL = 3

_BLOCK = 1024


def _checker(conjecture: str):
    if conjecture == "NORINE":
        return find_monochromatic_antipodal_path
    if conjecture == "A":
        return find_monochromatic_antipodal_geodesic
    if conjecture == "B":
        return find_one_change_antipodal_geodesic
    raise ValueError(f"unknown conjecture {conjecture!r}; expected one of {CONJECTURES}")


def _colouring_at(conjecture: str, mode: str, n: int, seed: int, index: int):
    antipodal = conjecture in ("NORINE", "A")
    if mode == "exhaustive":
        if antipodal:
            return antipodal_colouring_from_index(n, index)
        return colouring_from_index(n, index)
    if antipodal:
        return random_antipodal_colouring(n, subseed(seed, index))
    return random_colouring(n, subseed(seed, index))


def _search_block(params: tuple) -> dict:
    """Check colourings [start, stop); stop early inside the block at the
    first counterexample. Returns mergeable per-block results."""
    conjecture, mode, n, seed, start, stop, collect_changes = params
    check = _checker(conjecture)
    checked = 0
    fail = None
    kinds: dict[str, int] = {}
    ch_min = ch_max = None
    ch_sum = 0
    for index in range(start, stop):
        c = _colouring_at(conjecture, mode, n, seed, index)
        witness = check(c)
        checked += 1
        if witness is None:
            fail = {"index": index, "colouring": colouring_to_obj(c)}
            break
        validate_witness(witness, c)
        kinds[witness.kind] = kinds.get(witness.kind, 0) + 1
        if collect_changes:
            value = min_colour_changes_antipodal(c)[0]
            ch_sum += value
            ch_min = value if ch_min is None else min(ch_min, value)
            ch_max = value if ch_max is None else max(ch_max, value)
    return {
        "checked": checked,
        "fail": fail,
        "kinds": kinds,
        "ch_min": ch_min,
        "ch_max": ch_max,
        "ch_sum": ch_sum,
    }


def run_search(
    conjecture: str,
    mode: str,
    n: int,
    budget: int | None = None,
    seed: int = 0,
    jobs: int = 1,
) -> Report:
    """Sweep colourings of Q_n for a counterexample to one conjecture.

    Exhaustive mode ignores ``budget`` and covers the whole space; sample
    mode checks ``budget`` seeded random colourings. Sample mode (and
    exhaustive mode up to n = 3) also collects the distribution of the
    minimum-colour-change statistic.
    """
    _checker(conjecture)
    if mode not in ("exhaustive", "sample"):
        raise ValueError(f"unknown mode {mode!r}; expected 'exhaustive' or 'sample'")
    antipodal = conjecture in ("NORINE", "A")
    if mode == "exhaustive":
        cap = EXHAUSTIVE_CAP_ANTIPODAL if antipodal else EXHAUSTIVE_CAP_GENERAL
        if n > cap:
            space_kind = "antipodal colourings" if antipodal else "colourings"
            raise ValueError(
                f"exhaustive search over {space_kind} is capped at n <= {cap}; "
                f"n={n} needs sample mode"
            )
        if antipodal:
            total = 1 << antipodal_pair_count(n)
        else:
            total = 1 << edge_count(n)
        collect_changes = n <= 3
    else:
        if budget is None or budget < 1:
            raise ValueError("sample mode needs a positive --budget")
        total = budget
        collect_changes = True

    blocks = [
        (conjecture, mode, n, seed, start, min(start + _BLOCK, total), collect_changes)
        for start in range(0, total, _BLOCK)
    ]
    checked = 0
    fail = None
    kinds: dict[str, int] = {}
    ch_min = ch_max = None
    ch_sum = 0

    def consume(results) -> None:
        nonlocal checked, fail, ch_min, ch_max, ch_sum
        for res in results:
            checked += res["checked"]
            for kind, cnt in res["kinds"].items():
                kinds[kind] = kinds.get(kind, 0) + cnt
            if res["ch_min"] is not None:
                ch_min = res["ch_min"] if ch_min is None else min(ch_min, res["ch_min"])
                ch_max = res["ch_max"] if ch_max is None else max(ch_max, res["ch_max"])
                ch_sum += res["ch_sum"]
            if res["fail"] is not None:
                fail = res["fail"]
                return

    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            consume(pool.imap(_search_block, blocks))
    else:
        consume(_search_block(b) for b in blocks)

    aggregate = {
        "space": total,
        "checked": checked,
        "counterexamples": 0 if fail is None else 1,
        "witness_kinds": {k: kinds[k] for k in sorted(kinds)},
    }
    if collect_changes and checked:
        stat_count = checked if fail is None else checked - 1
        aggregate["min_changes"] = (
            {
                "min": ch_min,
                "max": ch_max,
                "mean": str(Fraction(ch_sum, stat_count)),
            }
            if stat_count
            else None
        )
    records = [] if fail is None else [fail]
    return Report(
        task="search",
        parameters={
            "conjecture": conjecture,
            "mode": mode,
            "n": n,
            "budget": budget if mode == "sample" else None,
        },
        seed=seed,
        records=records,
        aggregate=aggregate,
        passed=fail is None,
    )
