"""Verification and benchmark harnesses behind ``cclique verify`` / ``bench``."""

from __future__ import annotations

import json
import multiprocessing as mp
import time
from dataclasses import asdict, dataclass, field

from . import closure
from .driver import enumerate_cclosed
from .generators import generate
from .graph import read_edge_list
from .kernels import OracleLimitError, oracle_enumerate, oracle_limit, pivot_enumerate

SAMPLE = 5
DEFAULT_TIMEOUT = 60.0


def pipeline_matrix():
    """Every driver configuration ``verify`` exercises."""
    runs = []
    for order in ("identity", "auto"):
        for kernel in ("tomita", "outsens"):
            for flt in ("doublescan", "exact", "cure"):
                runs.append({"mode": "improved", "kernel": kernel, "filter": flt, "order": order})
        runs.append({"mode": "baseline", "kernel": "tomita", "filter": "cure", "order": order})
    return runs


def _run_config(g, cfg):
    order = None if cfg["order"] == "identity" else "auto"
    forest, metrics = enumerate_cclosed(
        g, order=order, mode=cfg["mode"], filter=cfg["filter"], kernel=cfg["kernel"]
    )
    return forest.cliques(), metrics


def verify(g, cross=False, configs=None):
    """Compare every pipeline's clique set against a reference.

    The reference is the subset oracle; with ``cross=True`` it is the pivot
    kernel on the whole graph instead, which lifts the size limit. Raises
    :class:`OracleLimitError` when the oracle is needed but the graph is too
    large.
    """
    if cross:
        ref = set(pivot_enumerate(g).cliques)
        source = "pivot"
    else:
        if g.n > oracle_limit():
            raise OracleLimitError(
                f"verify needs n <= {oracle_limit()} for the oracle (got {g.n}); "
                "use --cross or raise CCLIQUE_ORACLE_LIMIT"
            )
        ref = set(oracle_enumerate(g).cliques)
        source = "oracle"
    if g.n == 0:
        ref = set()
    runs = []
    ok = True
    for cfg in configs or pipeline_matrix():
        got, metrics = _run_config(g, cfg)
        gs = set(got)
        passed = gs == ref and len(got) == len(gs)
        ok &= passed
        entry = dict(cfg, alpha=len(got), passed=passed)
        if cfg["order"] == "auto":
            entry["bounds_hold"] = all(b.holds for b in metrics.bound_checks)
            ok &= entry["bounds_hold"]
        if not passed:
            entry["missing"] = [list(k) for k in sorted(ref - gs)[:SAMPLE]]
            entry["extra"] = [list(k) for k in sorted(gs - ref)[:SAMPLE]]
        runs.append(entry)
    return {"passed": ok, "reference": source, "n": g.n, "m": g.m, "alpha": len(ref), "runs": runs}


# benchmarks -------------------------------------------------------------------


@dataclass
class BenchRecord:
    instance: str
    n: int = 0
    m: int = 0
    closure_c: int | None = None
    weak_c: int | None = None
    mode: str = ""
    filter: str = ""
    kernel: str = ""
    order: str = ""
    c_used: int | None = None
    alpha: int = 0
    preprocess_us: int = 0
    enum_us: int = 0
    counters: dict = field(default_factory=dict)
    timed_out: bool = False
    error: str | None = None

    def to_json(self):
        return asdict(self)

    @classmethod
    def from_json(cls, d):
        return cls(**d)


def load_instance(inst):
    if "file" in inst:
        return inst.get("name", inst["file"]), read_edge_list(inst["file"])
    args = inst.get("args", [])
    name = inst.get("name") or f"{inst['kind']}({','.join(map(str, args))})"
    return name, generate(inst["kind"], *args)


def run_bench_task(task):
    """One (instance, configuration) measurement; runs inside a worker."""
    inst, cfg = task
    name, g = load_instance(inst)
    rec = BenchRecord(name, n=g.n, m=g.m, mode=cfg.get("mode", "improved"),
                      filter=cfg.get("filter") or "", kernel=cfg.get("kernel", "tomita"))
    try:
        rec.closure_c = closure.closure_number(g)
        order_arg = cfg.get("order", inst.get("order", "auto"))
        t0 = time.perf_counter_ns()
        if order_arg == "identity":
            order, c = None, None
        elif order_arg == "auto":
            c, order = closure.weak_closure_number(g)
            rec.weak_c = c
        else:
            c = int(order_arg)
            order = closure.weak_closure_order(g, c)
            if order is None:
                raise ValueError(f"graph is not weakly {c}-closed")
        order_us = (time.perf_counter_ns() - t0) // 1000
        rec.order = str(order_arg)
        rec.c_used = c
        forest, m = enumerate_cclosed(g, order=order, c=c, mode=rec.mode,
                                      filter=cfg.get("filter"), kernel=rec.kernel)
        rec.filter = m.filter_mode
        rec.alpha = m.alpha
        rec.preprocess_us = m.wedge_time + order_us
        rec.enum_us = m.enum_time
        beta = sum(m.beta_i)
        rec.counters = {
            "kernel_ops": m.kernel_ops,
            "filter_ops": m.filter_ops,
            "trie_ops": m.trie_ops,
            "curing_probes": m.curing_probes,
            "exact_ops": m.exact_ops,
            "candidates": beta,
            "kernel_calls": m.kernel_calls,
            "leaf_checks": m.leaf_checks,
            "completion_rejects": m.completion_rejects,
            "work_per_alpha": (m.work / m.alpha) if m.alpha else 0.0,
            "work_per_alpha_n": (m.work / (m.alpha * g.n)) if m.alpha else 0.0,
            "filter_ops_per_candidate": (m.filter_ops / beta) if beta else 0.0,
            "bounds_hold": all(b.holds for b in m.bound_checks),
        }
    except Exception as exc:  # recorded, the suite keeps going
        rec.error = f"{type(exc).__name__}: {exc}"
    return rec.to_json()


def expand_suite(suite):
    matrix = suite.get("matrix") or [{"mode": "improved"}]
    tasks = []
    for inst in suite.get("instances", []):
        for cfg in matrix:
            cfg = dict(cfg)
            if "order" in suite and "order" not in cfg:
                cfg["order"] = suite["order"]
            tasks.append((inst, cfg))
    return tasks


def _timeout_record(inst, cfg):
    name = inst.get("name") or inst.get("file") or inst.get("kind")
    return BenchRecord(str(name), mode=cfg.get("mode", "improved"), filter=cfg.get("filter") or "",
                       kernel=cfg.get("kernel", "tomita"), timed_out=True).to_json()


def bench(suite, workers=1, timeout=None, sink=None):
    """Run a suite; returns records (dicts) in task order.

    Tasks run in worker processes so one that exceeds ``timeout`` seconds can
    be abandoned and reported with ``timed_out=True``. ``sink`` receives each
    record as soon as it is final, in task order.
    """
    tasks = expand_suite(suite)
    if not tasks:
        return []
    if timeout is None:
        timeout = suite.get("timeout", DEFAULT_TIMEOUT)
    ctx = mp.get_context("fork")
    workers = max(1, workers)
    records = []
    pos = 0
    while pos < len(tasks):
        pool = ctx.Pool(processes=workers)
        try:
            futures = [pool.apply_async(run_bench_task, (t,)) for t in tasks[pos:]]
            for fut in futures:
                try:
                    rec = fut.get(timeout=timeout)
                except mp.TimeoutError:
                    rec = _timeout_record(*tasks[pos])
                    records.append(rec)
                    pos += 1
                    if sink:
                        sink(rec)
                    break  # the hung worker holds a slot; restart the pool
                records.append(rec)
                pos += 1
                if sink:
                    sink(rec)
        finally:
            pool.terminate()
            pool.join()
    return records


def dumps_record(rec):
    return json.dumps(rec, sort_keys=False)
