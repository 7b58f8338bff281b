"""Exact solvers ("oracles") for every instance kind, plus solution checkers.

Each solver tries a dynamic program first and falls back to brute force when
the table would exceed the budget; if both strategies are out of budget it
raises ResourceLimitError.  Every yes verdict carries a solution that has
been re-checked by the standalone checker before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import instances as I
from . import kernels, pathdecomp
from .errors import ConstructionError, ResourceLimitError, ValidationError


@dataclass(frozen=True)
class Budget:
    max_dp_cells: int = 4_000_000
    max_bruteforce_n: int = 25
    max_brute_states: int = 2_000_000
    max_ilp_brute_ops: int = 8_000_000
    max_schedule_perm_n: int = 8
    max_cm_states: int = 4_000_000
    max_coloring_brute_ops: int = 600_000
    max_coloring_states: int = 500_000
    max_sat_ops: int = 8_000_000


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class Verdict:
    answer: bool
    solution: object = None
    method: str = ""

    def __bool__(self) -> bool:
        return self.answer


def _yes(inst, solution, method: str) -> Verdict:
    if not check_solution(inst, solution):
        raise ConstructionError(
            f"solver produced an invalid solution for {inst!r}: {solution!r}")
    return Verdict(True, solution, method)


# ---------------------------------------------------------------------------
# Subset sum.

def solve_subset_sum(inst: I.SubsetSumInstance, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    if inst.modulus is not None:
        return _solve_subset_sum_mod(inst, budget)
    t = inst.target
    keep = [i for i, p in enumerate(inst.items) if 1 <= p <= t]
    vals = [inst.items[i] for i in keep]
    n = len(vals)
    if n * (t + 1) <= budget.max_dp_cells:
        got = kernels.subset_sum_solve(vals, t)
        if got is None:
            return Verdict(False, method="dp")
        return _yes(inst, tuple(keep[i] for i in got), "dp")
    if n <= budget.max_bruteforce_n:
        reach = {0: None}
        for i, p in enumerate(vals):
            for s in list(reach):
                ns = s + p
                if ns <= t and ns not in reach:
                    reach[ns] = (i, s)
            if len(reach) > budget.max_brute_states:
                raise ResourceLimitError("subset sum: reachable sums over budget")
        if t not in reach:
            return Verdict(False, method="brute")
        sol = []
        s = t
        while reach[s] is not None:
            i, s = reach[s]
            sol.append(keep[i])
        return _yes(inst, tuple(reversed(sol)), "brute")
    raise ResourceLimitError("subset sum: instance over budget")


def _solve_subset_sum_mod(inst, budget):
    q, t = inst.modulus, inst.target
    if not 0 <= t < q or not all(0 <= p < q for p in inst.items):
        raise ValidationError("modular instance out of range")
    if q <= budget.max_dp_cells:
        got = kernels.subset_sum_mod_solve(list(inst.items), q, t)
        if got is None:
            return Verdict(False, method="dp")
        return _yes(inst, tuple(got), "dp")
    if len(inst.items) <= budget.max_bruteforce_n:
        reach = {0: None}
        for i, p in enumerate(inst.items):
            for s in list(reach):
                ns = (s + p) % q
                if ns not in reach:
                    reach[ns] = (i, s)
            if len(reach) > budget.max_brute_states:
                raise ResourceLimitError("modular subset sum: states over budget")
        if t not in reach:
            return Verdict(False, method="brute")
        sol = []
        s = t
        while reach[s] is not None:
            i, s = reach[s]
            sol.append(i)
        return _yes(inst, tuple(reversed(sol)), "brute")
    raise ResourceLimitError("modular subset sum: instance over budget")


# ---------------------------------------------------------------------------
# Knapsack.

def solve_knapsack(inst: I.KnapsackInstance, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    t, w = inst.capacity, inst.demand
    keep = [i for i, (p, _) in enumerate(inst.items) if p <= t]
    items = [inst.items[i] for i in keep]
    n = len(items)
    if n * (t + 1) <= budget.max_dp_cells and t <= w:
        return _knapsack_dp_size(inst, keep, items, budget)
    if n * (w + 1) <= budget.max_dp_cells:
        return _knapsack_dp_weight(inst, keep, items)
    if n * (t + 1) <= budget.max_dp_cells:
        return _knapsack_dp_size(inst, keep, items, budget)
    if n <= budget.max_bruteforce_n:
        layers = [{0: 0}]  # size -> best weight, one layer per item
        total = 1
        for p, wt in items:
            prev = layers[-1]
            cur = dict(prev)
            for s, bw in prev.items():
                ns = s + p
                if ns <= t and cur.get(ns, -1) < bw + wt:
                    cur[ns] = bw + wt
            total += len(cur)
            if total > budget.max_brute_states:
                raise ResourceLimitError("knapsack: reachable sizes over budget")
            layers.append(cur)
        s, bw = max(layers[n].items(), key=lambda kv: kv[1])
        if bw < w:
            return Verdict(False, method="brute")
        sol = []
        for j in range(n, 0, -1):
            if layers[j - 1].get(s) == bw:
                continue
            p, wt = items[j - 1]
            sol.append(keep[j - 1])
            s -= p
            bw -= wt
        return _yes(inst, tuple(reversed(sol)), "brute")
    raise ResourceLimitError("knapsack: instance over budget")


def _knapsack_dp_size(inst, keep, items, budget):
    t, w = inst.capacity, inst.demand
    n = len(items)
    layers = [[0] * (t + 1)]
    for p, wt in items:
        prev = layers[-1]
        row = list(prev)
        for s in range(p, t + 1):
            cand = prev[s - p] + wt
            if cand > row[s]:
                row[s] = cand
        layers.append(row)
    if layers[n][t] < w:
        return Verdict(False, method="dp-size")
    sol = []
    s = t
    for j in range(n, 0, -1):
        if layers[j][s] == layers[j - 1][s]:
            continue
        p, wt = items[j - 1]
        sol.append(keep[j - 1])
        s -= p
    return _yes(inst, tuple(reversed(sol)), "dp-size")


def _knapsack_dp_weight(inst, keep, items):
    t, w = inst.capacity, inst.demand
    n = len(items)
    INF = float("inf")
    layers = [[INF] * (w + 1)]
    layers[0][0] = 0
    for p, wt in items:
        prev = layers[-1]
        row = list(prev)
        for v in range(w + 1):
            src = prev[max(0, v - wt)]
            if src + p < row[v]:
                row[v] = src + p
        layers.append(row)
    if layers[n][w] > t:
        return Verdict(False, method="dp-weight")
    sol = []
    v = w
    for j in range(n, 0, -1):
        p, wt = items[j - 1]
        if layers[j][v] == layers[j - 1][v]:
            continue
        sol.append(keep[j - 1])
        v = max(0, v - wt)
    return _yes(inst, tuple(reversed(sol)), "dp-weight")


# ---------------------------------------------------------------------------
# 0-1 ILP feasibility.

def solve_ilp(inst: I.IlpInstance, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    if inst.variant == "zero_sum":
        return _solve_zero_sum(inst, budget)
    m = inst.num_rows
    n = len(inst.columns)
    state_cap = budget.max_dp_cells // (m + 1)
    layers = [{tuple([0] * m): None}]
    total = 1
    feasible_dp = True
    for i, col in enumerate(inst.columns):
        prev = layers[-1]
        cur = dict(prev)
        for state in prev:
            ns = tuple(a + b for a, b in zip(state, col))
            if ns not in cur:
                cur[ns] = (i, state)
        total += len(cur)
        if total > state_cap:
            feasible_dp = False
            break
        layers.append(cur)
    if feasible_dp:
        final = layers[-1]
        if inst.rhs not in final:
            return Verdict(False, method="dp")
        x = [0] * n
        state = inst.rhs
        for j in range(n, 0, -1):
            back = layers[j][state]
            if back is not None and back[0] == j - 1:
                x[j - 1] = 1
                state = back[1]
        return _yes(inst, tuple(x), "dp")
    if (1 << n) * max(m, 1) <= budget.max_ilp_brute_ops:
        got = kernels.ilp01_brute([list(c) for c in inst.columns], list(inst.rhs))
        if got is None:
            return Verdict(False, method="brute")
        return _yes(inst, tuple(got), "brute")
    raise ResourceLimitError("ilp: instance over budget")


def _solve_zero_sum(inst, budget):
    # one standard feasibility call per candidate column forced to 1
    n = len(inst.columns)
    for i in range(n):
        cols = inst.columns[:i] + inst.columns[i + 1:]
        rhs = tuple(-a for a in inst.columns[i])
        sub = I.IlpInstance(cols, rhs, "standard")
        got = solve_ilp(sub, budget)
        if got.answer:
            x = list(got.solution)
            x.insert(i, 1)
            return _yes(inst, tuple(x), "observation")
    return Verdict(False, method="observation")


# ---------------------------------------------------------------------------
# Group subset sum.

def _group_reach(group, elements, cap):
    """Products of index-increasing subsequences, with back pointers."""
    reach = {group.identity(): None}
    for i, g in enumerate(elements):
        for prod in list(reach):
            np = group.mul(prod, g)
            if np not in reach:
                reach[np] = (i, prod)
        if len(reach) > cap:
            raise ResourceLimitError("group subset sum: products over budget")
    return reach


@lru_cache(maxsize=512)
def _group_reach_cached(group, elements):
    return _group_reach(group, elements, DEFAULT_BUDGET.max_brute_states)


def solve_group_ss(inst: I.GroupSubsetSumInstance, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    g = inst.group
    if isinstance(g, I.CyclicGroup) and g.q <= budget.max_dp_cells:
        got = kernels.subset_sum_mod_solve(list(inst.elements), g.q, inst.target % g.q)
        if got is None:
            return Verdict(False, method="dp")
        return _yes(inst, tuple(got), "dp")
    if len(inst.elements) > budget.max_bruteforce_n:
        raise ResourceLimitError("group subset sum: too many elements")
    if budget is DEFAULT_BUDGET:
        reach = _group_reach_cached(g, inst.elements)
    else:
        reach = _group_reach(g, inst.elements, budget.max_brute_states)
    if inst.target not in reach:
        return Verdict(False, method="reach")
    sol = []
    cur = inst.target
    while reach[cur] is not None:
        i, cur = reach[cur]
        sol.append(i)
    return _yes(inst, tuple(reversed(sol)), "reach")


# ---------------------------------------------------------------------------
# Counter machines.

def cm_masks(inst: I.CounterMachineInstance) -> tuple[list[int], list[int], list[int]]:
    incs, decs, req = [], [], []
    for v, f in zip(inst.vectors, inst.flags):
        inc = dec = 0
        for j, c in enumerate(v):
            if c == 1:
                inc |= 1 << j
            elif c == -1:
                dec |= 1 << j
        incs.append(inc)
        decs.append(dec)
        req.append(1 if f == I.REQUIRED else 0)
    return incs, decs, req


def solve_counter_machine(inst: I.CounterMachineInstance,
                          budget: Budget = DEFAULT_BUDGET) -> Verdict:
    if inst.dimension > 26:
        raise ResourceLimitError("counter machine: dimension over stamp-table cap")
    incs, decs, req = cm_masks(inst)
    try:
        got = kernels.counter_machine_solve(incs, decs, req, inst.dimension,
                                            budget.max_cm_states)
    except RuntimeError as exc:
        raise ResourceLimitError(str(exc)) from exc
    if got is None:
        return Verdict(False, method="frontier")
    return _yes(inst, tuple(got), "frontier")


# ---------------------------------------------------------------------------
# 3-coloring.

def solve_coloring(inst: I.ColoringInstance, budget: Budget = DEFAULT_BUDGET,
                   method: str = "auto") -> Verdict:
    n = inst.num_vertices
    m = len(inst.edges)
    brute_ok = n <= 12 and 3 ** n * (m + 1) <= budget.max_coloring_brute_ops
    if method == "brute" or (method == "auto" and brute_ok):
        return _coloring_brute(inst)
    return _coloring_dp(inst, budget)


def _coloring_brute(inst):
    n = inst.num_vertices
    colors = [0] * n
    for code in range(3 ** n):
        c = code
        for v in range(n):
            colors[v] = c % 3
            c //= 3
        if all(colors[u] != colors[v] for u, v in inst.edges):
            return _yes(inst, tuple(colors), "brute")
    return Verdict(False, method="brute")


def _coloring_dp(inst, budget):
    _, commands = pathdecomp.make_nice(inst.num_vertices, inst.edges, inst.bags)
    layers = [{(): None}]
    total = 1
    for cmd in commands:
        prev = layers[-1]
        cur = {}
        if cmd[0] == "introduce":
            v = cmd[1]
            for key in prev:
                for c in range(3):
                    nk = tuple(sorted(key + ((v, c),)))
                    cur[nk] = (key, (v, c))
        elif cmd[0] == "forget":
            v = cmd[1]
            for key in prev:
                nk = tuple(kv for kv in key if kv[0] != v)
                if nk not in cur:
                    cur[nk] = (key, None)
        else:
            _, u, v = cmd
            for key in prev:
                cmap = dict(key)
                if cmap[u] != cmap[v]:
                    cur[key] = (key, None)
        total += len(cur)
        if total > budget.max_coloring_states:
            raise ResourceLimitError("coloring: bag states over budget")
        layers.append(cur)
        if not cur:
            return Verdict(False, method="dp")
    if () not in layers[-1]:
        return Verdict(False, method="dp")
    assign = {}
    key = ()
    for j in range(len(layers) - 1, 0, -1):
        key, picked = layers[j][key]
        if picked is not None:
            assign[picked[0]] = picked[1]
    colors = tuple(assign[v] for v in range(inst.num_vertices))
    return _yes(inst, colors, "dp")


# ---------------------------------------------------------------------------
# Scheduling (minimize tardy weight against a budget).

def solve_scheduling(inst: I.SchedulingInstance, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    n = len(inst.jobs)
    dmax = max((d for _, _, d in inst.jobs), default=0)
    if n * (dmax + 1) <= budget.max_dp_cells:
        return _scheduling_dp(inst)
    if n <= budget.max_schedule_perm_n:
        return _scheduling_brute(inst)
    raise ResourceLimitError("scheduling: instance over budget")


def _scheduling_dp(inst):
    # max-weight on-time set; on-time jobs can always be run in due-date order
    n = len(inst.jobs)
    order = sorted(range(n), key=lambda i: (inst.jobs[i][2], i))
    dmax = max((d for _, _, d in inst.jobs), default=0)
    NEG = float("-inf")
    layers = [[0] + [NEG] * dmax]
    for idx in order:
        p, w, d = inst.jobs[idx]
        prev = layers[-1]
        row = list(prev)
        for s in range(min(d, dmax), p - 1, -1):
            cand = prev[s - p] + w
            if cand > row[s]:
                row[s] = cand
        layers.append(row)
    best_s = max(range(dmax + 1), key=lambda s: layers[n][s])
    best = layers[n][best_s]
    total = sum(w for _, w, _ in inst.jobs)
    if total - best > inst.tardy_budget:
        return Verdict(False, method="dp")
    on_time = []
    s = best_s
    for j in range(n, 0, -1):
        idx = order[j - 1]
        p, w, d = inst.jobs[idx]
        if layers[j][s] != layers[j - 1][s]:
            on_time.append(idx)
            s -= p
    on_time.reverse()
    tardy = [i for i in range(n) if i not in set(on_time)]
    sched = sorted(on_time, key=lambda i: (inst.jobs[i][2], i)) + tardy
    return _yes(inst, {"order": tuple(sched), "on_time": tuple(sorted(on_time))}, "dp")


def _scheduling_brute(inst):
    n = len(inst.jobs)
    jobs = inst.jobs
    budget = inst.tardy_budget
    best = None

    def dfs(remaining, time, tardy_w, prefix):
        nonlocal best
        if best is not None:
            return
        if tardy_w > budget:
            return
        if not remaining:
            best = list(prefix)
            return
        for i in list(remaining):
            p, w, d = jobs[i]
            remaining.remove(i)
            prefix.append(i)
            dfs(remaining, time + p, tardy_w + (w if time + p > d else 0), prefix)
            prefix.pop()
            remaining.add(i)

    dfs(set(range(n)), 0, 0, [])
    if best is None:
        return Verdict(False, method="brute")
    time = 0
    on_time = []
    for i in best:
        p, w, d = jobs[i]
        time += p
        if time <= d:
            on_time.append(i)
    return _yes(inst, {"order": tuple(best), "on_time": tuple(sorted(on_time))}, "brute")


# ---------------------------------------------------------------------------
# CNF satisfiability and AND-SAT.

def solve_cnf(inst: I.CnfInstance, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    k = inst.num_vars
    if k > budget.max_bruteforce_n or \
            (1 << k) * (len(inst.clauses) + 1) > budget.max_sat_ops:
        raise ResourceLimitError("cnf: instance over budget")
    pos, neg = [], []
    for cl in inst.clauses:
        pm = nm = 0
        for lit in cl:
            if lit > 0:
                pm |= 1 << (lit - 1)
            else:
                nm |= 1 << (-lit - 1)
        pos.append(pm)
        neg.append(nm)
    full = (1 << k) - 1
    for a in range(1 << k):
        if all(a & pm or ~a & full & nm for pm, nm in zip(pos, neg)):
            return _yes(inst, tuple(bool(a >> i & 1) for i in range(k)), "brute")
    return Verdict(False, method="brute")


def solve_and_sat(inst: I.AndSatInstance, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    sols = []
    for f in inst.formulas:
        got = solve_cnf(f, budget)
        if not got.answer:
            return Verdict(False, method="per-formula")
        sols.append(got.solution)
    return _yes(inst, tuple(sols), "per-formula")


# ---------------------------------------------------------------------------
# Unbounded subset sum.

def solve_unbounded_ss(inst: I.UnboundedSubsetSumInstance,
                       budget: Budget = DEFAULT_BUDGET) -> Verdict:
    t = inst.target
    n = len(inst.items)
    if (t + 1) * max(n, 1) <= budget.max_dp_cells:
        used = [-1] * (t + 1)
        used[0] = -2
        for s in range(1, t + 1):
            for i, p in enumerate(inst.items):
                if 1 <= p <= s and used[s - p] != -1:
                    used[s] = i
                    break
        if used[t] == -1:
            return Verdict(False, method="dp")
        counts: dict[int, int] = {}
        s = t
        while s:
            i = used[s]
            counts[i] = counts.get(i, 0) + 1
            s -= inst.items[i]
        return _yes(inst, counts, "dp")
    raise ResourceLimitError("unbounded subset sum: instance over budget")


# ---------------------------------------------------------------------------
# Dispatch and checking.

_SOLVERS = {
    "subset_sum": solve_subset_sum,
    "knapsack": solve_knapsack,
    "ilp": solve_ilp,
    "group_subset_sum": solve_group_ss,
    "counter_machine": solve_counter_machine,
    "coloring": solve_coloring,
    "scheduling": solve_scheduling,
    "cnf": solve_cnf,
    "and_sat": solve_and_sat,
    "unbounded_subset_sum": solve_unbounded_ss,
}


def solve(inst: I.ProblemInstance, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    try:
        solver = _SOLVERS[inst.kind]
    except KeyError:
        raise ValidationError(f"no solver for kind {inst.kind!r}") from None
    return solver(inst, budget)


def check_solution(inst: I.ProblemInstance, sol) -> bool:
    """Standalone re-check of a claimed solution; no solver state involved."""
    k = inst.kind
    try:
        if k == "subset_sum":
            idx = list(sol)
            if idx != sorted(set(idx)) or not all(0 <= i < len(inst.items) for i in idx):
                return False
            total = sum(inst.items[i] for i in idx)
            if inst.modulus is not None:
                return total % inst.modulus == inst.target % inst.modulus
            return total == inst.target
        if k == "knapsack":
            idx = list(sol)
            if idx != sorted(set(idx)) or not all(0 <= i < len(inst.items) for i in idx):
                return False
            return (sum(inst.items[i][0] for i in idx) <= inst.capacity and
                    sum(inst.items[i][1] for i in idx) >= inst.demand)
        if k == "ilp":
            x = list(sol)
            if len(x) != len(inst.columns) or any(v not in (0, 1) for v in x):
                return False
            for j in range(inst.num_rows):
                if sum(x[i] * inst.columns[i][j] for i in range(len(x))) != inst.rhs[j]:
                    return False
            if inst.variant == "zero_sum" and not any(x):
                return False
            return True
        if k == "group_subset_sum":
            idx = list(sol)
            if idx != sorted(set(idx)) or not all(0 <= i < len(inst.elements) for i in idx):
                return False
            acc = inst.group.identity()
            for i in idx:
                acc = inst.group.mul(acc, inst.elements[i])
            return acc == inst.target
        if k == "counter_machine":
            idx = sorted(set(sol))
            if list(sol) != idx or not all(0 <= i < len(inst.vectors) for i in idx):
                return False
            chosen = set(idx)
            required = {i for i, f in enumerate(inst.flags) if f == I.REQUIRED}
            if not required <= chosen:
                return False
            state = [0] * inst.dimension
            for i in idx:
                for j, c in enumerate(inst.vectors[i]):
                    state[j] += c
                    if state[j] not in (0, 1):
                        return False
            return all(c == 0 for c in state)
        if k == "coloring":
            cols = list(sol)
            if len(cols) != inst.num_vertices or any(c not in (0, 1, 2) for c in cols):
                return False
            return all(cols[u] != cols[v] for u, v in inst.edges)
        if k == "scheduling":
            order = list(sol["order"])
            on_time = set(sol["on_time"])
            if sorted(order) != list(range(len(inst.jobs))):
                return False
            time = 0
            for i in order:
                p, w, d = inst.jobs[i]
                time += p
                if i in on_time and time > d:
                    return False
            tardy_w = sum(inst.jobs[i][1] for i in range(len(inst.jobs))
                          if i not in on_time)
            return tardy_w <= inst.tardy_budget
        if k == "cnf":
            a = list(sol)
            if len(a) != inst.num_vars:
                return False
            return all(any((lit > 0) == bool(a[abs(lit) - 1]) for lit in cl)
                       for cl in inst.clauses)
        if k == "and_sat":
            sols = list(sol)
            if len(sols) != len(inst.formulas):
                return False
            return all(check_solution(f, s) for f, s in zip(inst.formulas, sols))
        if k == "unbounded_subset_sum":
            total = 0
            for i, c in dict(sol).items():
                i, c = int(i), int(c)
                if not (0 <= i < len(inst.items) and c >= 1):
                    return False
                total += c * inst.items[i]
            return total == inst.target
    except (TypeError, KeyError, IndexError, AttributeError):
        return False
    return False
