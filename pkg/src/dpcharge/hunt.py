"""Counterexample hunting: seeded adversarial covers against the solver.

For each admissible graph and each seed, build a full-matching random
cover and search for an order-constrained coloring.  A definitive
"none" would falsify the corresponding theorem, so each one is recorded
as a candidate with the full cover serialized for replay; the replay is
performed immediately and its verdict must match.  Budget exhaustions
are listed separately: they decide nothing.

Graphs that fail the profile's cycle conditions are skipped with a
note, since the theorems say nothing about them.

Set DPCHARGE_THREADS to evaluate (graph, seed) pairs concurrently;
report assembly stays deterministic regardless.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .cover import cover_from_json, cover_to_json, random_cover
from .planegraph import PlaneGraph
from .reporting import TOOL_VERSION, input_hash
from .rotfile import serialize_rotation_file
from .solver import BAOutcome, SearchStatus, find_ba
from .structure import Profile, check_profile


def default_thread_count() -> int:
    raw = os.environ.get("DPCHARGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass(frozen=True)
class HuntCandidate:
    graph_name: str
    seed: int
    cover_json: str
    replay_verdict: str


@dataclass
class HuntReport:
    version: str
    command: str
    profile: Profile
    k: int
    seeds: tuple[int, ...]
    graphs: tuple[tuple[str, str], ...]  # (name, input hash)
    skipped: list[tuple[str, str]] = field(default_factory=list)  # (name, reason)
    found: int = 0
    candidates: list[HuntCandidate] = field(default_factory=list)
    exhausted: list[tuple[str, int]] = field(default_factory=list)  # (name, seed)

    @property
    def clean(self) -> bool:
        return not self.candidates

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "command": self.command,
            "profile": self.profile.value,
            "k": self.k,
            "seeds": list(self.seeds),
            "graphs": [{"name": n, "hash": h} for n, h in self.graphs],
            "skipped": [{"name": n, "reason": r} for n, r in self.skipped],
            "found": self.found,
            "candidates": [
                {"graph": c.graph_name, "seed": c.seed,
                 "replay_verdict": c.replay_verdict, "cover": c.cover_json}
                for c in self.candidates
            ],
            "exhausted": [{"graph": n, "seed": s} for n, s in self.exhausted],
        }


def replay_cover(cover_json: str, node_limit: int = 2_000_000) -> BAOutcome:
    """Re-run the solver on a serialized cover."""
    return find_ba(cover_from_json(cover_json), node_limit=node_limit)


def hunt(profile: Profile, k: int, seeds: range | list[int],
         graphs: list[tuple[str, PlaneGraph]], node_limit: int = 2_000_000,
         threads: int | None = None, command: str | None = None) -> HuntReport:
    seed_list = tuple(seeds)
    if command is None:
        names = " ".join(name for name, _ in graphs)
        span = f"{seed_list[0]}..{seed_list[-1]}" if seed_list else ""
        command = f"hunt --profile {profile.value} --k {k} --seeds {span} {names}"
    admissible: list[tuple[str, PlaneGraph]] = []
    report = HuntReport(
        version=TOOL_VERSION,
        command=command,
        profile=profile,
        k=k,
        seeds=seed_list,
        graphs=tuple((name, input_hash(serialize_rotation_file(g, name)))
                     for name, g in graphs),
    )
    for name, g in graphs:
        hyp = check_profile(g, profile)
        if not hyp.cycles_ok:
            report.skipped.append((name, "; ".join(hyp.notes())))
        else:
            admissible.append((name, g))

    jobs = [(name, g, seed) for name, g in admissible for seed in seeds]

    def run(job):
        name, g, seed = job
        cover = random_cover(g, k, seed, full=True)
        outcome = find_ba(cover, node_limit=node_limit)
        return name, seed, cover, outcome

    n_threads = threads if threads is not None else default_thread_count()
    if n_threads > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]

    for name, seed, cover, outcome in results:
        if outcome.status is SearchStatus.FOUND:
            report.found += 1
        elif outcome.status is SearchStatus.EXHAUSTED:
            report.exhausted.append((name, seed))
        else:
            doc = cover_to_json(cover)
            replay = replay_cover(doc, node_limit=node_limit)
            report.candidates.append(HuntCandidate(
                graph_name=name, seed=seed, cover_json=doc,
                replay_verdict=replay.status.value))
    return report
