# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend; see the package docstring for the contract."""

from libc.stdlib cimport malloc, free


def subset_sum_solve(items, long long target):
    """Table-filling exact subset sum with solution recovery."""
    cdef Py_ssize_t n = len(items)
    cdef Py_ssize_t i
    cdef long long s, p
    if target < 0:
        return None
    cdef int *used = <int *> malloc((target + 1) * sizeof(int))
    cdef long long *vals = <long long *> malloc((n if n else 1) * sizeof(long long))
    if used == NULL or vals == NULL:
        if used != NULL:
            free(used)
        if vals != NULL:
            free(vals)
        raise MemoryError()
    try:
        for s in range(target + 1):
            used[s] = -1
        used[0] = -2
        for i in range(n):
            vals[i] = items[i]
        for i in range(n):
            p = vals[i]
            if p < 1 or p > target:
                continue
            s = target
            while s >= p:
                if used[s] == -1 and used[s - p] != -1:
                    used[s] = <int> i
                s -= 1
        if used[target] == -1:
            return None
        out = []
        s = target
        while s:
            i = used[s]
            out.append(i)
            s -= vals[i]
        out.reverse()
        return out
    finally:
        free(used)
        free(vals)


def subset_sum_mod_solve(items, long long q, long long target):
    """Exact subset sum over Z_q with solution recovery."""
    cdef Py_ssize_t n = len(items)
    cdef Py_ssize_t i, j, base, count
    cdef long long s, ns, p
    cdef int *used = <int *> malloc(q * sizeof(int))
    cdef long long *pred = <long long *> malloc(q * sizeof(long long))
    cdef long long *reached = <long long *> malloc(q * sizeof(long long))
    if used == NULL or pred == NULL or reached == NULL:
        if used != NULL:
            free(used)
        if pred != NULL:
            free(pred)
        if reached != NULL:
            free(reached)
        raise MemoryError()
    try:
        for s in range(q):
            used[s] = -1
        used[0] = -2
        reached[0] = 0
        count = 1
        for i in range(n):
            p = items[i] % q
            base = count
            for j in range(base):
                s = reached[j]
                ns = s + p
                if ns >= q:
                    ns -= q
                if used[ns] == -1:
                    used[ns] = <int> i
                    pred[ns] = s
                    reached[count] = ns
                    count += 1
        if used[target] == -1:
            return None
        out = []
        s = target
        while used[s] != -2:
            out.append(used[s])
            s = pred[s]
        out.reverse()
        return out
    finally:
        free(used)
        free(pred)
        free(reached)


def counter_machine_solve(incs, decs, required, int dimension, long long limit):
    """Frontier reachability over counter states encoded as bitmasks."""
    cdef Py_ssize_t n = len(incs)
    cdef Py_ssize_t i, j
    cdef long long s, t, start, end, cap
    cdef long long inc, dec
    cdef int req
    if dimension > 26:
        raise ValueError("dimension too large for the dense stamp table")
    cdef long long size = (<long long> 1) << dimension
    cdef int *stamp = <int *> malloc(size * sizeof(int))
    cap = limit + n + 2
    cdef long long *buf = <long long *> malloc(cap * sizeof(long long))
    cdef long long *off = <long long *> malloc((n + 2) * sizeof(long long))
    cdef long long *vinc = <long long *> malloc((n if n else 1) * sizeof(long long))
    cdef long long *vdec = <long long *> malloc((n if n else 1) * sizeof(long long))
    cdef int *vreq = <int *> malloc((n if n else 1) * sizeof(int))
    if (stamp == NULL or buf == NULL or off == NULL or vinc == NULL
            or vdec == NULL or vreq == NULL):
        if stamp != NULL:
            free(stamp)
        if buf != NULL:
            free(buf)
        if off != NULL:
            free(off)
        if vinc != NULL:
            free(vinc)
        if vdec != NULL:
            free(vdec)
        if vreq != NULL:
            free(vreq)
        raise MemoryError()
    try:
        for s in range(size):
            stamp[s] = 0
        for i in range(n):
            vinc[i] = incs[i]
            vdec[i] = decs[i]
            vreq[i] = 1 if required[i] else 0
        buf[0] = 0
        off[0] = 0
        off[1] = 1
        stamp[0] = 1
        for i in range(n):
            inc = vinc[i]
            dec = vdec[i]
            req = vreq[i]
            start = off[i + 1]
            end = start
            if not req:
                j = off[i]
                while j < off[i + 1]:
                    s = buf[j]
                    if stamp[s] != i + 2:
                        stamp[s] = <int> (i + 2)
                        if end >= cap:
                            raise RuntimeError("counter machine state limit exceeded")
                        buf[end] = s
                        end += 1
                    j += 1
            j = off[i]
            while j < off[i + 1]:
                s = buf[j]
                if (s & inc) == 0 and (s & dec) == dec:
                    t = (s | inc) & ~dec
                    if stamp[t] != i + 2:
                        stamp[t] = <int> (i + 2)
                        if end >= cap:
                            raise RuntimeError("counter machine state limit exceeded")
                        buf[end] = t
                        end += 1
                j += 1
            off[i + 2] = end
            if end > limit:
                raise RuntimeError("counter machine state limit exceeded")
            if end == start:
                return None
        # is 0 in the final layer?
        t = -1
        j = off[n]
        while j < off[n + 1]:
            if buf[j] == 0:
                t = 0
                break
            j += 1
        if t != 0:
            return None
        chosen = []
        s = 0
        for i in range(n - 1, -1, -1):
            inc = vinc[i]
            dec = vdec[i]
            if not vreq[i]:
                # prefer skipping when the state was already reachable
                t = -1
                j = off[i]
                while j < off[i + 1]:
                    if buf[j] == s:
                        t = 0
                        break
                    j += 1
                if t == 0:
                    continue
            if (s & inc) == inc and (s & dec) == 0:
                t = (s & ~inc) | dec
                j = off[i]
                while j < off[i + 1]:
                    if buf[j] == t:
                        break
                    j += 1
                else:
                    raise RuntimeError("counter machine reconstruction failed")
                chosen.append(i)
                s = t
            else:
                raise RuntimeError("counter machine reconstruction failed")
        chosen.reverse()
        return chosen
    finally:
        free(stamp)
        free(buf)
        free(off)
        free(vinc)
        free(vdec)
        free(vreq)


def ilp01_brute(columns, rhs):
    """Exhaustive 0-1 search for A x = rhs over the given columns."""
    cdef Py_ssize_t n = len(columns)
    cdef Py_ssize_t m = len(rhs)
    cdef Py_ssize_t i, j
    cdef long long mask, acc
    cdef int ok
    if n > 30:
        raise ValueError("too many columns for brute force")
    cdef long long *flat = <long long *> malloc((n * m if n * m else 1) * sizeof(long long))
    cdef long long *rv = <long long *> malloc((m if m else 1) * sizeof(long long))
    if flat == NULL or rv == NULL:
        if flat != NULL:
            free(flat)
        if rv != NULL:
            free(rv)
        raise MemoryError()
    try:
        for i in range(n):
            col = columns[i]
            for j in range(m):
                flat[i * m + j] = col[j]
        for j in range(m):
            rv[j] = rhs[j]
        for mask in range((<long long> 1) << n):
            ok = 1
            for j in range(m):
                acc = 0
                for i in range(n):
                    if (mask >> i) & 1:
                        acc += flat[i * m + j]
                if acc != rv[j]:
                    ok = 0
                    break
            if ok:
                return [(mask >> i) & 1 for i in range(n)]
        return None
    finally:
        free(flat)
        free(rv)
