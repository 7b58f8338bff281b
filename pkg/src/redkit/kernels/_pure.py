"""Pure Python kernel backend; see the package docstring for the contract."""

from __future__ import annotations


def subset_sum_solve(items, target):
    """Table-filling exact subset sum with solution recovery.

    used[s] records the item that first reached sum s; walking back through
    strictly earlier items yields an ascending witness.
    """
    if target < 0:
        return None
    used = [-1] * (target + 1)
    used[0] = -2
    for i, p in enumerate(items):
        if p < 1 or p > target:
            continue
        for s in range(target, p - 1, -1):
            if used[s] == -1 and used[s - p] != -1:
                used[s] = i
    if used[target] == -1:
        return None
    out = []
    s = target
    while s:
        i = used[s]
        out.append(i)
        s -= items[i]
    out.reverse()
    return out


def subset_sum_mod_solve(items, q, target):
    """Exact subset sum over Z_q with solution recovery."""
    used = [-1] * q
    pred = [0] * q
    used[0] = -2
    reached = [0]
    for i, p in enumerate(items):
        p %= q
        # only extend residues reached before this item
        for j in range(len(reached)):
            s = reached[j]
            ns = s + p
            if ns >= q:
                ns -= q
            if used[ns] == -1:
                used[ns] = i
                pred[ns] = s
                reached.append(ns)
    if used[target] == -1:
        return None
    out = []
    s = target
    while used[s] != -2:
        out.append(used[s])
        s = pred[s]
    out.reverse()
    return out


def counter_machine_solve(incs, decs, required, dimension, limit):
    """Frontier reachability over counter states encoded as bitmasks.

    A vector applies to state s when its +1 coordinates are clear and its -1
    coordinates are set.  Stores each layer's frontier for the backward walk;
    raises RuntimeError when the stored states exceed ``limit``.
    """
    n = len(incs)
    cur = {0}
    layers = [cur]
    total = 1
    for i in range(n):
        inc, dec = incs[i], decs[i]
        nxt = set() if required[i] else set(cur)
        for s in cur:
            if not s & inc and s & dec == dec:
                nxt.add((s | inc) & ~dec)
        total += len(nxt)
        if total > limit:
            raise RuntimeError("counter machine state limit exceeded")
        layers.append(nxt)
        cur = nxt
        if not cur:
            return None
    if 0 not in cur:
        return None
    chosen = []
    s = 0
    for i in range(n - 1, -1, -1):
        if not required[i] and s in layers[i]:
            continue
        inc, dec = incs[i], decs[i]
        if s & inc == inc and not s & dec:
            prev = (s & ~inc) | dec
            if prev in layers[i]:
                chosen.append(i)
                s = prev
                continue
        raise RuntimeError("counter machine reconstruction failed")
    chosen.reverse()
    return chosen


def ilp01_brute(columns, rhs):
    """Exhaustive 0-1 search for A x = rhs over the given columns."""
    n = len(columns)
    m = len(rhs)
    if n > 30:
        raise ValueError("too many columns for brute force")
    for mask in range(1 << n):
        ok = True
        for j in range(m):
            acc = 0
            for i in range(n):
                if mask >> i & 1:
                    acc += columns[i][j]
            if acc != rhs[j]:
                ok = False
                break
        if ok:
            return [mask >> i & 1 for i in range(n)]
    return None
