"""Certificate schemes with short witnesses, plus the generic harnesses that
machine-check reduction contracts and scheme soundness/completeness.

Certificates are fixed-width bit strings (``Witness`` values): a count field
followed by fixed slots, with unused trailing slots required to be zero.  A
verifier never raises on malformed input; it rejects.

The contract checker covers no-instances either by literal enumeration of all
``2^L`` witnesses (when small) or by a stratified-exact sweep: every witness
the reduction itself enumerates as structurally valid, plus random and corner
probes of the invalid stratum.  Reductions here map every structurally invalid
witness to a fixed trivial no-instance, so the invalid stratum collapses to a
handful of distinct targets and the sweep still visits every reachable target
class.  Reports record which strategy covered each instance; anything not
covered is listed as skipped, never silently passed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from random import Random
from typing import Callable, Iterable, Iterator

from . import instances as I
from .errors import (ConstructionError, RedkitError, ResourceLimitError,
                     ValidationError)
from .oracles import DEFAULT_BUDGET, Budget, Verdict, solve
from .reductions import Reduction
from .witness import Witness, all_witnesses, field_width, pack_fields, \
    unpack_fields


@dataclass(frozen=True)
class CertificateScheme:
    """Nondeterministic-bit certificate scheme for one problem kind.

    ``verify`` must accept some certificate iff the instance is a yes
    instance; ``synthesize`` produces an accepting certificate from a known
    solution.  ``valid_certificates`` enumerates a superset of every
    certificate that could possibly reach the accept comparison (used for
    stratified soundness sweeps); ``len_bound`` is the per-instance numeric
    bit-budget ceiling that ``cert_len`` is expected to satisfy.
    """

    name: str
    problem_kind: str
    cert_len: Callable[[I.ProblemInstance], int]
    verify: Callable[[I.ProblemInstance, Witness], bool]
    synthesize: Callable[[I.ProblemInstance, object], Witness]
    valid_certificates: Callable[[I.ProblemInstance], Iterator[Witness]] | None = None
    len_bound: Callable[[I.ProblemInstance], int] | None = None


# ---------------------------------------------------------------------------
# Unbounded subset sum: at most floor(log2(t+1)) (index, multiplicity) pairs.
#
# Any multiset solution can be rewritten onto that few distinct items: while
# the support has more, two disjoint sub-supports share a subset sum (2^len
# sums all land in [0, t]) and shifting the smallest multiplicity across the
# tie removes an item.


def _uss_shape(inst):
    t, n = inst.target, len(inst.items)
    pairs = (t + 1).bit_length() - 1
    return pairs, field_width(pairs), field_width(max(n - 1, 0)), \
        field_width(max(t - 1, 0))


def _uss_cert_len(inst):
    pairs, wc, wi, wm = _uss_shape(inst)
    return wc + pairs * (wi + wm)


def _uss_len_bound(inst):
    t, n = inst.target, len(inst.items)
    return (t.bit_length() + 1) * (n.bit_length() + t.bit_length() + 1)


def _uss_verify(inst, cert):
    pairs, wc, wi, wm = _uss_shape(inst)
    if cert.length != wc + pairs * (wi + wm):
        return False
    vals = unpack_fields(cert, [wc] + [wi, wm] * pairs)
    count = vals[0]
    if count > pairs:
        return False
    if any(v for v in vals[1 + 2 * count:]):
        return False
    idxs = vals[1:1 + 2 * count:2]
    mults = [m + 1 for m in vals[2:2 + 2 * count:2]]
    if any(i >= len(inst.items) for i in idxs):
        return False
    if any(a >= b for a, b in zip(idxs, idxs[1:])):
        return False
    if any(m > inst.target for m in mults):
        return False
    return sum(m * inst.items[i] for i, m in zip(idxs, mults)) == inst.target


def _uss_pack(inst, counts):
    pairs, wc, wi, wm = _uss_shape(inst)
    idxs = sorted(counts)
    vals = [len(idxs)]
    for i in idxs:
        vals += [i, counts[i] - 1]
    vals += [0, 0] * (pairs - len(idxs))
    return pack_fields(vals, [wc] + [wi, wm] * pairs)


def _shrink_support(items, counts, cap):
    while len(counts) > cap:
        idxs = sorted(counts)
        if len(idxs) > 22:
            raise ResourceLimitError("support too large to rewrite")
        seen = {0: 0}
        hit = None
        for mask in range(1, 1 << len(idxs)):
            s = sum(items[idxs[b]] for b in range(len(idxs)) if mask >> b & 1)
            if s in seen:
                hit = (seen[s], mask)
                break
            seen[s] = mask
        if hit is None:
            raise ConstructionError("no colliding sub-supports found")
        common = hit[0] & hit[1]
        sides = [[idxs[b] for b in range(len(idxs)) if (m & ~common) >> b & 1]
                 for m in hit]
        if not sides[0] or not sides[1]:
            raise ConstructionError("colliding sub-supports must be disjoint")
        low = min(sides[0] + sides[1], key=lambda i: counts[i])
        if low in sides[1]:
            sides.reverse()
        shift = counts[low]
        for i in sides[0]:
            counts[i] -= shift
            if not counts[i]:
                del counts[i]
        for i in sides[1]:
            counts[i] = counts.get(i, 0) + shift
    return counts


def _uss_synthesize(inst, solution):
    counts = {i: m for i, m in dict(solution).items()
              if m > 0 and inst.items[i] > 0}
    pairs = (inst.target + 1).bit_length() - 1
    return _uss_pack(inst, _shrink_support(inst.items, counts, pairs))


def _uss_valid(inst):
    pairs, _, _, _ = _uss_shape(inst)
    t, n = inst.target, len(inst.items)
    for c in range(min(pairs, n) + 1):
        for idxs in combinations(range(n), c):
            # prune: an accepting pair never exceeds the target on its own
            ranges = [range(1, (t // inst.items[i] if inst.items[i] else t) + 1)
                      for i in idxs]
            for mults in product(*ranges):
                yield _uss_pack(inst, dict(zip(idxs, mults)))


UNBOUNDED_SS_SCHEME = CertificateScheme(
    name="unbounded-ss",
    problem_kind="unbounded_subset_sum",
    cert_len=_uss_cert_len,
    verify=_uss_verify,
    synthesize=_uss_synthesize,
    valid_certificates=_uss_valid,
    len_bound=_uss_len_bound,
)


def cert_unbounded_ss(inst: I.UnboundedSubsetSumInstance) -> CertificateScheme:
    if inst.kind != "unbounded_subset_sum":
        raise ValidationError("scheme expects an unbounded subset sum instance")
    return UNBOUNDED_SS_SCHEME


# ---------------------------------------------------------------------------
# Z_k^k group subset sum: an index subsequence of length < s = ceil(k^2 lg k).


def zkk_bound(k: int) -> int:
    return max(1, math.ceil(k * k * math.log2(k))) if k > 1 else 1


def _zkk_k(inst):
    if not isinstance(inst.group, I.ProductGroup):
        raise ValidationError("scheme expects a Z_k^k instance")
    return inst.group.k


def _zkk_shape(inst):
    s = zkk_bound(_zkk_k(inst))
    return s, field_width(s - 1), field_width(max(len(inst.elements) - 1, 0))


def _zkk_cert_len(inst):
    s, wc, wi = _zkk_shape(inst)
    return wc + (s - 1) * wi


def _zkk_len_bound(inst):
    k = _zkk_k(inst)
    return max(k ** 3 * ((k - 1).bit_length() + 1) ** 2, 1)


def _zkk_verify(inst, cert):
    s, wc, wi = _zkk_shape(inst)
    if cert.length != wc + (s - 1) * wi:
        return False
    vals = unpack_fields(cert, [wc] + [wi] * (s - 1))
    count = vals[0]
    if count > s - 1:
        return False
    idxs = vals[1:1 + count]
    if any(v for v in vals[1 + count:]):
        return False
    if any(i >= len(inst.elements) for i in idxs):
        return False
    if any(a >= b for a, b in zip(idxs, idxs[1:])):
        return False
    k = _zkk_k(inst)
    acc = (0,) * k
    for i in idxs:
        acc = tuple((a + b) % k for a, b in zip(acc, inst.elements[i]))
    return acc == tuple(inst.target)


def find_zero_sum_subsequence(elements, k):
    """Indices (increasing) of a nonempty zero-sum subsequence, or None."""
    zero = (0,) * k
    reach = {}
    for j, g in enumerate(elements):
        g = tuple(x % k for x in g)
        fresh = {} if g in reach else {g: (None, j)}
        for s, _ in list(reach.items()):
            ns = tuple((a + b) % k for a, b in zip(s, g))
            if ns not in reach and ns not in fresh:
                fresh[ns] = (s, j)
        reach.update(fresh)
        if zero in reach:
            out = []
            cur = zero
            while cur is not None:
                prev, idx = reach[cur]
                out.append(idx)
                cur = prev
            return sorted(out)
    return None


def _zkk_synthesize(inst, solution):
    k = _zkk_k(inst)
    s, wc, wi = _zkk_shape(inst)
    chosen = sorted(solution)
    while len(chosen) >= s:
        hit = find_zero_sum_subsequence([inst.elements[i] for i in chosen], k)
        if hit is None:
            raise ConstructionError("no removable zero-sum subsequence")
        keep = set(range(len(chosen))) - set(hit)
        chosen = [chosen[p] for p in sorted(keep)]
    vals = [len(chosen)] + chosen + [0] * (s - 1 - len(chosen))
    return pack_fields(vals, [wc] + [wi] * (s - 1))


def _zkk_valid(inst):
    s, wc, wi = _zkk_shape(inst)
    n = len(inst.elements)
    for c in range(min(s - 1, n) + 1):
        for idxs in combinations(range(n), c):
            vals = [c] + list(idxs) + [0] * (s - 1 - c)
            yield pack_fields(vals, [wc] + [wi] * (s - 1))


ZKK_SCHEME = CertificateScheme(
    name="zkk",
    problem_kind="group_subset_sum",
    cert_len=_zkk_cert_len,
    verify=_zkk_verify,
    synthesize=_zkk_synthesize,
    valid_certificates=_zkk_valid,
    len_bound=_zkk_len_bound,
)


def cert_zkk(inst: I.GroupSubsetSumInstance) -> CertificateScheme:
    _zkk_k(inst)
    return ZKK_SCHEME


# ---------------------------------------------------------------------------
# Baseline scheme: the full selection mask, one bit per item.


def _fss_verify(inst, cert):
    n = len(inst.items)
    if cert.length != n:
        return False
    total = sum(p for p, b in zip(inst.items, cert.bits()) if b)
    if inst.modulus is not None:
        return total % inst.modulus == inst.target % inst.modulus
    return total == inst.target


def _fss_synthesize(inst, solution):
    n = len(inst.items)
    mask = 0
    for i in solution:
        mask |= 1 << (n - 1 - i)
    return Witness(mask, n)


FULL_SS_SCHEME = CertificateScheme(
    name="full-ss",
    problem_kind="subset_sum",
    cert_len=lambda inst: len(inst.items),
    verify=_fss_verify,
    synthesize=_fss_synthesize,
    valid_certificates=lambda inst: all_witnesses(len(inst.items)),
)


def cert_full_subset_sum(inst: I.SubsetSumInstance) -> CertificateScheme:
    if inst.kind != "subset_sum":
        raise ValidationError("scheme expects a subset sum instance")
    return FULL_SS_SCHEME


SCHEMES = {s.name: s for s in (UNBOUNDED_SS_SCHEME, ZKK_SCHEME,
                               FULL_SS_SCHEME)}


# ---------------------------------------------------------------------------
# Reduction contract checking.


@dataclass
class ContractReport:
    name: str
    checked: int = 0
    yes_instances: int = 0
    no_instances: int = 0
    witnesses_checked: int = 0
    exhaustive: int = 0
    stratified: int = 0
    violations: list = dc_field(default_factory=list)
    skipped: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.skipped

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "yes_instances": self.yes_instances,
            "no_instances": self.no_instances,
            "witnesses_checked": self.witnesses_checked,
            "exhaustive": self.exhaustive,
            "stratified": self.stratified,
            "violations": [
                {k: (v if isinstance(v, (str, int, bool)) else repr(v))
                 for k, v in viol.items()} for viol in self.violations],
            "skipped": [[repr(inst), why] for inst, why in self.skipped],
            "ok": self.ok,
        }


def _corner_witnesses(length, rng, samples):
    yield Witness.zero(length)
    if length:
        yield Witness((1 << length) - 1, length)
    for _ in range(samples):
        yield Witness(rng.getrandbits(length), length)


def nppt_contract_check(r: Reduction, family: Iterable[I.ProblemInstance],
                        budget: Budget | None = None, *,
                        exhaustive_cap: int = 4096,
                        valid_cap: int = 200_000,
                        invalid_samples: int = 16,
                        seed: int = 0,
                        cache: dict | None = None) -> ContractReport:
    """Check the reduction's yes/no contract against the oracles.

    Yes instances: the synthesized witness must map to a target yes instance.
    No instances: every witness must map to a target no instance, checked by
    full enumeration when ``2^L <= exhaustive_cap`` and otherwise by the
    stratified-exact sweep described in the module docstring.
    """
    budget = budget if budget is not None else DEFAULT_BUDGET
    rng = Random(seed)
    verdicts = {} if cache is None else cache
    rep = ContractReport(name=r.name)

    def target_yes(tgt):
        hit = verdicts.get(tgt)
        if hit is None:
            if len(verdicts) > 1_500_000:
                verdicts.clear()
            hit = verdicts[tgt] = solve(tgt, budget).answer
        return hit

    def sweep(inst, wits):
        seen = set()
        for wit in wits:
            rep.witnesses_checked += 1
            tgt = r.apply(inst, wit)
            if tgt in seen:
                continue
            seen.add(tgt)
            if target_yes(tgt):
                rep.violations.append({
                    "kind": "soundness", "instance": inst,
                    "witness": wit.to_hex(), "target": tgt})
                return
    for inst in family:
        rep.checked += 1
        try:
            src = solve(inst, budget)
        except ResourceLimitError as exc:
            rep.skipped.append((inst, f"source oracle: {exc}"))
            continue
        length = r.witness_len(inst)
        if src.answer:
            rep.yes_instances += 1
            try:
                wit = r.synthesize(inst, src.solution)
                tgt = r.apply(inst, wit)
                accepted = target_yes(tgt)
            except RedkitError as exc:
                rep.violations.append({
                    "kind": "completeness", "instance": inst,
                    "error": str(exc)})
                continue
            rep.witnesses_checked += 1
            if not accepted:
                rep.violations.append({
                    "kind": "completeness", "instance": inst,
                    "witness": wit.to_hex(), "target": tgt})
            continue
        rep.no_instances += 1
        try:
            if length <= 26 and (1 << length) <= exhaustive_cap:
                sweep(inst, all_witnesses(length))
                rep.exhaustive += 1
            elif r.valid_witnesses is not None:
                before = len(rep.violations)
                wits = []
                over = False
                for i, wit in enumerate(r.valid_witnesses(inst)):
                    if i >= valid_cap:
                        over = True
                        break
                    wits.append(wit)
                if over:
                    rep.skipped.append((inst, "valid witness family too large"))
                    continue
                sweep(inst, wits)
                if len(rep.violations) == before:
                    sweep(inst, _corner_witnesses(length, rng, invalid_samples))
                rep.stratified += 1
            else:
                rep.skipped.append((inst, f"witness space 2^{length} too large"))
        except ResourceLimitError as exc:
            rep.skipped.append((inst, f"target oracle: {exc}"))
        except RedkitError as exc:
            rep.violations.append({
                "kind": "transform-error", "instance": inst, "error": str(exc)})
    return rep


# ---------------------------------------------------------------------------
# Certificate scheme checking.


def certificate_scheme_check(scheme: CertificateScheme,
                             family: Iterable[I.ProblemInstance],
                             budget: Budget | None = None, *,
                             exhaustive_cap: int = 65536,
                             valid_cap: int = 200_000,
                             malformed_samples: int = 16,
                             seed: int = 0) -> ContractReport:
    """Soundness/completeness sweep for a certificate scheme.

    No instances must reject every certificate: full enumeration when the bit
    budget is small, otherwise every certificate the scheme lists as able to
    reach its accept comparison plus sampled/corner malformed ones.  Yes
    instances must accept the synthesized certificate, and reported bit
    budgets must stay within the scheme's numeric bound.
    """
    budget = budget if budget is not None else DEFAULT_BUDGET
    rng = Random(seed)
    rep = ContractReport(name=scheme.name)
    for inst in family:
        if inst.kind != scheme.problem_kind:
            raise ValidationError(
                f"scheme {scheme.name} cannot check kind {inst.kind}")
        rep.checked += 1
        length = scheme.cert_len(inst)
        if scheme.len_bound is not None and length > scheme.len_bound(inst):
            rep.violations.append({
                "kind": "bit-length-bound", "instance": inst,
                "cert_len": length, "bound": scheme.len_bound(inst)})
        try:
            src = solve(inst, budget)
        except ResourceLimitError as exc:
            rep.skipped.append((inst, f"oracle: {exc}"))
            continue
        if src.answer:
            rep.yes_instances += 1
            try:
                cert = scheme.synthesize(inst, src.solution)
                accepted = scheme.verify(inst, cert)
            except RedkitError as exc:
                rep.violations.append({
                    "kind": "completeness", "instance": inst, "error": str(exc)})
                continue
            rep.witnesses_checked += 1
            if not accepted:
                rep.violations.append({
                    "kind": "completeness", "instance": inst,
                    "certificate": cert.to_hex()})
            continue
        rep.no_instances += 1

        def reject_all(certs):
            for cert in certs:
                rep.witnesses_checked += 1
                if scheme.verify(inst, cert):
                    rep.violations.append({
                        "kind": "soundness", "instance": inst,
                        "certificate": cert.to_hex()})
                    return
        if length <= 26 and (1 << length) <= exhaustive_cap:
            reject_all(all_witnesses(length))
            rep.exhaustive += 1
        elif scheme.valid_certificates is not None:
            certs = []
            over = False
            for i, cert in enumerate(scheme.valid_certificates(inst)):
                if i >= valid_cap:
                    over = True
                    break
                certs.append(cert)
            if over:
                rep.skipped.append((inst, "valid certificate family too large"))
                continue
            before = len(rep.violations)
            reject_all(certs)
            if len(rep.violations) == before:
                reject_all(_corner_witnesses(length, rng, malformed_samples))
            rep.stratified += 1
        else:
            rep.skipped.append((inst, f"certificate space 2^{length} too large"))
    return rep


# ---------------------------------------------------------------------------
# Minimal-solution length bound and the zero-sum premise behind it.


@dataclass
class MinBoundReport:
    k: int
    s: int
    checked: int = 0
    solvable: int = 0
    max_min_length: int = 0
    sequences_checked: int = 0
    violations: list = dc_field(default_factory=list)
    skipped: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.skipped


def _min_solution_length(inst, k):
    n = len(inst.elements)
    target = tuple(inst.target)
    for size in range(n + 1):
        for idxs in combinations(range(n), size):
            acc = (0,) * k
            for i in idxs:
                acc = tuple((a + b) % k for a, b in zip(acc, inst.elements[i]))
            if acc == target:
                return size
    return None


def zero_sum_premise_check(k: int, *, samples: int = 200,
                           seed: int = 0) -> tuple[int, list]:
    """Every length-s sequence over Z_k^k must contain a nonempty zero-sum
    subsequence: exhaustive for k <= 2, seeded random sampling for k = 3."""
    if k > 3:
        raise ValidationError("zero-sum premise check is limited to k <= 3")
    s = zkk_bound(k)
    elems = [tuple(v) for v in product(range(k), repeat=k)]
    violations = []
    checked = 0
    if k <= 2:
        for seq in product(elems, repeat=s):
            checked += 1
            if find_zero_sum_subsequence(seq, k) is None:
                violations.append(seq)
    else:
        rng = Random(seed)
        for _ in range(samples):
            seq = tuple(elems[rng.randrange(len(elems))] for _ in range(s))
            checked += 1
            if find_zero_sum_subsequence(seq, k) is None:
                violations.append(seq)
    return checked, violations


def minimal_solution_bound_check(k: int,
                                 family: Iterable[I.GroupSubsetSumInstance],
                                 budget: Budget | None = None, *,
                                 samples: int = 200,
                                 seed: int = 0) -> MinBoundReport:
    if k > 3:
        raise ValidationError("brute-force regime is limited to k <= 3")
    budget = budget if budget is not None else DEFAULT_BUDGET
    s = zkk_bound(k)
    rep = MinBoundReport(k=k, s=s)
    for inst in family:
        if _zkk_k(inst) != k:
            raise ValidationError("family instance has a different k")
        rep.checked += 1
        if len(inst.elements) > 16:
            rep.skipped.append((inst, "too many elements for brute force"))
            continue
        try:
            src = solve(inst, budget)
        except ResourceLimitError as exc:
            rep.skipped.append((inst, f"oracle: {exc}"))
            continue
        if not src.answer:
            continue
        rep.solvable += 1
        best = _min_solution_length(inst, k)
        if best is None:
            rep.violations.append({"kind": "oracle-disagreement",
                                   "instance": inst})
            continue
        rep.max_min_length = max(rep.max_min_length, best)
        if best >= s:
            rep.violations.append({"kind": "minimal-length", "instance": inst,
                                   "min_length": best, "bound": s})
    checked, bad = zero_sum_premise_check(k, samples=samples, seed=seed)
    rep.sequences_checked = checked
    for seq in bad:
        rep.violations.append({"kind": "zero-sum-premise", "sequence": seq})
    return rep


# ---------------------------------------------------------------------------
# Certificate transfer along a reduction chain.


def certified_solve(inst: I.ProblemInstance, chain: Reduction,
                    scheme: CertificateScheme,
                    max_ops: int = 1 << 22) -> Verdict:
    """Decide ``inst`` by enumerating (chain witness, certificate) pairs."""
    if chain.source_kind != inst.kind:
        raise ValidationError("chain does not start at the instance kind")
    length = chain.witness_len(inst)
    if length > 26 or (1 << length) > max_ops:
        raise ResourceLimitError("chain witness space exceeds the budget")
    ops = 0
    for wit in all_witnesses(length):
        tgt = chain.apply(inst, wit)
        if tgt.kind != scheme.problem_kind:
            raise ValidationError("chain target kind does not match scheme")
        bits = scheme.cert_len(tgt)
        ops += 1 << min(bits, 60)
        if bits > 26 or ops > max_ops:
            raise ResourceLimitError("certificate enumeration exceeds budget")
        for cert in all_witnesses(bits):
            if scheme.verify(tgt, cert):
                return Verdict(True, (wit, cert), "certified")
    return Verdict(False, None, "certified")
