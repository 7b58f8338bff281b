"""Reductions between the arithmetic problem kinds.

Covers the equivalence chain: subset sum <-> knapsack, subset sum <->
monotone 0-1 ILP, monotone -> zero-sum ILP -> standard ILP -> monotone,
and subset sum <-> cyclic-group subset sum, plus the Graver-minimal
binary-counter vector sequence the zero-sum construction relies on.

Witness layouts use :mod:`redkit.witness` fixed-width fields; structurally
invalid witnesses map to fixed trivial no-instances so that exhaustive
contract checks can cover the invalid stratum with a single probe.
"""

from __future__ import annotations

from itertools import product

from . import instances as I
from .errors import ConstructionError, ReductionError
from .reductions import Reduction
from .witness import Witness, field_width, pack_fields, unpack_fields

# ---------------------------------------------------------------------------
# Base-w digit helpers.


def encode_base(digits, base: int) -> int:
    """Digits are least-significant first; values may reach base-1 at most."""
    acc = 0
    for d in reversed(list(digits)):
        if not 0 <= d < base:
            raise ConstructionError(f"digit {d} out of range for base {base}")
        acc = acc * base + d
    return acc


def decode_base(value: int, base: int, length: int) -> tuple[int, ...]:
    if value < 0:
        raise ConstructionError("cannot decode negative value")
    out = []
    for _ in range(length):
        out.append(value % base)
        value //= base
    if value:
        raise ConstructionError("value does not fit in the given digit count")
    return tuple(out)


# ---------------------------------------------------------------------------
# Graver-minimal vector sequence (binary counter construction).


def graver_sequence(k: int) -> tuple[tuple[int, ...], ...]:
    """Length-2^k sequence over {-1,0,1}^k: zero total sum, no proper
    nonempty subsequence summing to zero.  Coordinate 0 is the least
    significant counter bit.  Vectors 1..2^k-1 are the increment steps of a
    k-bit counter counting 0 -> 2^k - 1; the last vector is all minus-ones.
    """
    if k < 1:
        raise ConstructionError("graver_sequence requires k >= 1")
    out = []
    for c in range(1, 1 << k):
        prev, cur = c - 1, c
        vec = [0] * k
        for j in range(k):
            a, b = (prev >> j) & 1, (cur >> j) & 1
            if a != b:
                vec[j] = 1 if b else -1
        out.append(tuple(vec))
    out.append(tuple([-1] * k))
    return tuple(out)


def graver_check(vectors, k: int, subset_cap: int = 1 << 16) -> list[str]:
    """Exhaustively verify the three defining properties (entries in range
    and length are reported too).  Subset loops beyond ``subset_cap`` are
    refused rather than silently truncated."""
    violations = []
    n = len(vectors)
    if n != 1 << k:
        violations.append(f"length {n} != 2^{k}")
    for i, v in enumerate(vectors):
        if len(v) != k or any(c not in (-1, 0, 1) for c in v):
            violations.append(f"vector {i} outside {{-1,0,1}}^{k}")
    if any(sum(v[j] for v in vectors) != 0 for j in range(k)):
        violations.append("total sum is not zero")
    if 1 << n > subset_cap:
        raise ConstructionError("subset enumeration over cap")
    for mask in range(1, (1 << n) - 1):
        total = [0] * k
        for i in range(n):
            if mask >> i & 1:
                for j in range(k):
                    total[j] += vectors[i][j]
        if all(c == 0 for c in total):
            violations.append(f"proper nonempty zero subsequence mask={mask:#x}")
    return violations


# ---------------------------------------------------------------------------
# Subset sum -> knapsack (sizes equal weights).


def _ssk_transform(inst, wit):
    items = tuple((p, p) for p in inst.items if p >= 1)
    return I.KnapsackInstance(items, inst.target, inst.target)


def _ssk_synthesize(inst, sol):
    return Witness.zero(0)


red_ss_to_knapsack = Reduction(
    name="ss-to-knapsack",
    source_kind="subset_sum",
    target_kind="knapsack",
    witness_len=lambda inst: 0,
    transform=_ssk_transform,
    synthesize=_ssk_synthesize,
    valid_witnesses=lambda inst: iter([Witness.zero(0)]),
)


# ---------------------------------------------------------------------------
# Knapsack -> subset sum (two-track base-W encoding, guessed totals).


def _kss_case(inst):
    """Returns ("yes"|"no"|"main", kept original indices, W)."""
    t, w = inst.capacity, inst.demand
    if w == 0:
        return "yes", (), 0
    keep = [i for i, (p, wi) in enumerate(inst.items) if p <= t]
    if any(inst.items[i][1] > w for i in keep):
        return "yes", (), 0
    if sum(inst.items[i][1] for i in keep) < w:
        return "no", (), 0
    return "main", tuple(keep), len(keep) * w + 1


def _kss_widths(inst):
    _, _, W = _kss_case(inst)
    return (field_width(inst.capacity), field_width(W - 1 - inst.demand))


def _kss_witness_len(inst):
    case, _, _ = _kss_case(inst)
    if case != "main":
        return 0
    return sum(_kss_widths(inst))


def _kss_transform(inst, wit):
    case, keep, W = _kss_case(inst)
    if case == "yes":
        return I.trivial_instance("subset_sum", True)
    if case == "no":
        return I.trivial_instance("subset_sum", False)
    t_guess, w_off = unpack_fields(wit, _kss_widths(inst))
    w_guess = inst.demand + w_off
    if t_guess > inst.capacity or w_guess >= W:
        return I.trivial_instance("subset_sum", False)
    items = tuple(inst.items[i][0] * W + inst.items[i][1] for i in keep)
    return I.SubsetSumInstance(items, t_guess * W + w_guess)


def _kss_synthesize(inst, sol):
    case, keep, W = _kss_case(inst)
    if case == "yes":
        return Witness.zero(0)
    if case == "no":
        raise ReductionError("cannot synthesize for a no-instance")
    chosen = set(sol)
    t_sum = sum(inst.items[i][0] for i in chosen)
    w_sum = sum(inst.items[i][1] for i in chosen)
    return pack_fields((t_sum, w_sum - inst.demand), _kss_widths(inst))


def _kss_valid(inst):
    case, _, W = _kss_case(inst)
    if case != "main":
        yield Witness.zero(0)
        return
    widths = _kss_widths(inst)
    for t_guess in range(inst.capacity + 1):
        for w_guess in range(inst.demand, W):
            yield pack_fields((t_guess, w_guess - inst.demand), widths)


def _kss_canonical(inst):
    case, _, W = _kss_case(inst)
    if case != "main":
        return Witness.zero(0)
    return pack_fields((inst.capacity, W - 1 - inst.demand), _kss_widths(inst))


red_knapsack_to_ss = Reduction(
    name="knapsack-to-ss",
    source_kind="knapsack",
    target_kind="subset_sum",
    witness_len=_kss_witness_len,
    transform=_kss_transform,
    synthesize=_kss_synthesize,
    valid_witnesses=_kss_valid,
    canonical_witness=_kss_canonical,
)


# ---------------------------------------------------------------------------
# Subset sum -> monotone ILP (guessed digit sums of the target).


def _ssm_rows(inst):
    return inst.target.bit_length()


def _ssm_widths(inst):
    return [field_width(inst.target)] * _ssm_rows(inst)


def _ssm_transform(inst, wit):
    t = inst.target
    k = _ssm_rows(inst)
    b = unpack_fields(wit, _ssm_widths(inst)) if k else ()
    if any(d > t for d in b) or sum(d << j for j, d in enumerate(b)) != t:
        return I.trivial_instance("ilp", False, variant="monotone")
    cols = tuple(tuple((p >> j) & 1 for j in range(k))
                 for p in inst.items if p <= t)
    return I.IlpInstance(cols, b, "monotone")


def _ssm_synthesize(inst, sol):
    k = _ssm_rows(inst)
    chosen = [inst.items[i] for i in sol if inst.items[i] != 0]
    b = tuple(sum((p >> j) & 1 for p in chosen) for j in range(k))
    return pack_fields(b, _ssm_widths(inst))


def _ssm_valid(inst):
    t = inst.target
    k = _ssm_rows(inst)
    widths = _ssm_widths(inst)

    def rec(j, rem):
        # digit j contributes b_j * 2^j; higher digits cover the rest
        if j == k:
            if rem == 0:
                yield ()
            return
        step = 1 << j
        top = min(t, rem // step)
        for d in range(top + 1):
            for rest in rec(j + 1, rem - d * step):
                yield (d,) + rest

    for b in rec(0, t):
        yield pack_fields(b, widths)


def _ssm_canonical(inst):
    k = _ssm_rows(inst)
    b = tuple((inst.target >> j) & 1 for j in range(k))
    return pack_fields(b, _ssm_widths(inst))


red_ss_to_monotone = Reduction(
    name="ss-to-monotone",
    source_kind="subset_sum",
    target_kind="ilp",
    witness_len=lambda inst: _ssm_rows(inst) * field_width(inst.target),
    transform=_ssm_transform,
    synthesize=_ssm_synthesize,
    valid_witnesses=_ssm_valid,
    canonical_witness=_ssm_canonical,
)


# ---------------------------------------------------------------------------
# Monotone ILP -> subset sum (base n+1 positional encoding).


def _mss_transform(inst, wit):
    if inst.variant != "monotone":
        raise ReductionError("monotone-to-ss expects a monotone instance")
    n = len(inst.columns)
    if any(d > n for d in inst.rhs):
        return I.trivial_instance("subset_sum", False)
    base = n + 1
    items = tuple(encode_base(col, base) for col in inst.columns)
    return I.SubsetSumInstance(items, encode_base(inst.rhs, base))


red_monotone_to_ss = Reduction(
    name="monotone-to-ss",
    source_kind="ilp",
    target_kind="subset_sum",
    witness_len=lambda inst: 0,
    transform=_mss_transform,
    synthesize=lambda inst, sol: Witness.zero(0),
    valid_witnesses=lambda inst: iter([Witness.zero(0)]),
)


# ---------------------------------------------------------------------------
# Monotone ILP -> zero-sum ILP (Graver counter gadget).


def _mzs_transform(inst, wit):
    if inst.variant != "monotone":
        raise ReductionError("monotone-to-zerosum expects a monotone instance")
    m = inst.num_rows
    if all(d == 0 for d in inst.rhs):
        return I.trivial_instance("ilp", True, variant="zero_sum")
    cols = tuple(c for c in inst.columns if any(c))
    n = len(cols)
    if max(inst.rhs) > n:
        return I.trivial_instance("ilp", False, variant="zero_sum")
    kp = max(max(n, max(inst.rhs), 2) - 1, 1).bit_length()
    ell = 1 << kp
    gr = graver_sequence(kp)
    new_cols = [tuple(c) + (0,) * kp for c in cols]
    for i in range(1, ell + 1):
        b_i = tuple(-1 if i <= inst.rhs[j] else 0 for j in range(m))
        new_cols.append(b_i + gr[i - 1])
    return I.IlpInstance(tuple(new_cols), tuple([0] * (m + kp)), "zero_sum")


red_monotone_to_zerosum = Reduction(
    name="monotone-to-zerosum",
    source_kind="ilp",
    target_kind="ilp",
    witness_len=lambda inst: 0,
    transform=_mzs_transform,
    synthesize=lambda inst, sol: Witness.zero(0),
    valid_witnesses=lambda inst: iter([Witness.zero(0)]),
)


# ---------------------------------------------------------------------------
# Zero-sum ILP -> standard ILP (guess one support column).


def _zsi_witness_len(inst):
    n = len(inst.columns)
    return field_width(n - 1) if n else 0


def _zsi_transform(inst, wit):
    if inst.variant != "zero_sum":
        raise ReductionError("zerosum-to-ilp expects a zero-sum instance")
    n = len(inst.columns)
    if n == 0:
        return I.trivial_instance("ilp", False, variant="standard")
    (i,) = unpack_fields(wit, [_zsi_witness_len(inst)])
    if i >= n:
        return I.trivial_instance("ilp", False, variant="standard")
    cols = inst.columns[:i] + inst.columns[i + 1:]
    rhs = tuple(-a for a in inst.columns[i])
    return I.IlpInstance(cols, rhs, "standard")


def _zsi_synthesize(inst, sol):
    for i, x in enumerate(sol):
        if x:
            return pack_fields((i,), [_zsi_witness_len(inst)])
    raise ReductionError("zero-sum solution has empty support")


def _zsi_valid(inst):
    n = len(inst.columns)
    if n == 0:
        yield Witness.zero(0)
        return
    width = _zsi_witness_len(inst)
    for i in range(n):
        yield pack_fields((i,), [width])


red_zerosum_to_ilp = Reduction(
    name="zerosum-to-ilp",
    source_kind="ilp",
    target_kind="ilp",
    witness_len=_zsi_witness_len,
    transform=_zsi_transform,
    synthesize=_zsi_synthesize,
    valid_witnesses=_zsi_valid,
)


# ---------------------------------------------------------------------------
# Standard ILP -> monotone ILP (guess positive/negative row totals).


def _im_widths(inst):
    n = len(inst.columns)
    return [field_width(n)] * (2 * inst.num_rows)


def _im_transform(inst, wit):
    if inst.variant != "standard":
        raise ReductionError("ilp-to-monotone expects a standard instance")
    m = inst.num_rows
    n = len(inst.columns)
    fields = unpack_fields(wit, _im_widths(inst)) if m else ()
    b_pos, b_neg = fields[:m], fields[m:]
    if any(v > n for v in fields) or \
            any(bp - bn != b for bp, bn, b in zip(b_pos, b_neg, inst.rhs)):
        return I.trivial_instance("ilp", False, variant="monotone")
    cols = tuple(
        tuple(1 if a == 1 else 0 for a in col) +
        tuple(1 if a == -1 else 0 for a in col)
        for col in inst.columns)
    return I.IlpInstance(cols, tuple(b_pos) + tuple(b_neg), "monotone")


def _im_synthesize(inst, sol):
    m = inst.num_rows
    support = [i for i, x in enumerate(sol) if x]
    b_pos = tuple(sum(1 for i in support if inst.columns[i][j] == 1)
                  for j in range(m))
    b_neg = tuple(sum(1 for i in support if inst.columns[i][j] == -1)
                  for j in range(m))
    return pack_fields(b_pos + b_neg, _im_widths(inst))


def _im_valid(inst):
    m = inst.num_rows
    n = len(inst.columns)
    if m == 0:
        yield Witness.zero(0)
        return
    per_row = []
    for b in inst.rhs:
        opts = [(bp, bp - b) for bp in range(n + 1) if 0 <= bp - b <= n]
        if not opts:
            return
        per_row.append(opts)
    widths = _im_widths(inst)
    for combo in product(*per_row):
        b_pos = tuple(bp for bp, _ in combo)
        b_neg = tuple(bn for _, bn in combo)
        yield pack_fields(b_pos + b_neg, widths)


def _im_canonical(inst):
    m = inst.num_rows
    n = len(inst.columns)
    b_pos = tuple(min(max(b, 0), n) for b in inst.rhs)
    b_neg = tuple(min(max(-b, 0), n) for b in inst.rhs)
    return pack_fields(b_pos + b_neg, _im_widths(inst))


red_ilp_to_monotone = Reduction(
    name="ilp-to-monotone",
    source_kind="ilp",
    target_kind="ilp",
    witness_len=lambda inst: sum(_im_widths(inst)),
    transform=_im_transform,
    synthesize=_im_synthesize,
    valid_witnesses=_im_valid,
    canonical_witness=_im_canonical,
)


# ---------------------------------------------------------------------------
# Subset sum -> cyclic group subset sum (modulus n*t).


def _szq_case(inst):
    t = inst.target
    if t == 0 or any(p == t for p in inst.items):
        return "yes", ()
    keep = tuple(i for i, p in enumerate(inst.items) if 1 <= p < t)
    if len(keep) <= 1:
        return "no", ()
    return "main", keep


def _szq_transform(inst, wit):
    case, keep = _szq_case(inst)
    group = I.CyclicGroup(2)
    if case == "yes":
        return I.trivial_instance("group_subset_sum", True, group=group)
    if case == "no":
        return I.trivial_instance("group_subset_sum", False, group=group)
    t = inst.target
    q = len(keep) * t
    return I.GroupSubsetSumInstance(
        I.CyclicGroup(q), tuple(inst.items[i] for i in keep), t)


red_ss_to_zq = Reduction(
    name="ss-to-zq",
    source_kind="subset_sum",
    target_kind="group_subset_sum",
    witness_len=lambda inst: 0,
    transform=_szq_transform,
    synthesize=lambda inst, sol: Witness.zero(0),
    valid_witnesses=lambda inst: iter([Witness.zero(0)]),
)


# ---------------------------------------------------------------------------
# Cyclic group subset sum -> subset sum (guess the integer total).


def _zqs_q(inst):
    if not isinstance(inst.group, I.CyclicGroup):
        raise ReductionError("zq-to-ss expects a cyclic-group instance")
    return inst.group.q


def _zqs_witness_len(inst):
    return field_width(len(inst.elements) * _zqs_q(inst))


def _zqs_transform(inst, wit):
    q = _zqs_q(inst)
    n = len(inst.elements)
    (t_int,) = unpack_fields(wit, [_zqs_witness_len(inst)])
    if t_int > n * q or t_int % q != inst.target % q:
        return I.trivial_instance("subset_sum", False)
    return I.SubsetSumInstance(inst.elements, t_int)


def _zqs_synthesize(inst, sol):
    total = sum(inst.elements[i] for i in sol)
    return pack_fields((total,), [_zqs_witness_len(inst)])


def _zqs_valid(inst):
    q = _zqs_q(inst)
    n = len(inst.elements)
    width = _zqs_witness_len(inst)
    start = inst.target % q
    for t_int in range(start, n * q + 1, q):
        yield pack_fields((t_int,), [width])


def _zqs_canonical(inst):
    q = _zqs_q(inst)
    n = len(inst.elements)
    width = _zqs_witness_len(inst)
    start = inst.target % q
    if start > n * q:
        return Witness.zero(width)
    top = start + q * ((n * q - start) // q)
    return pack_fields((top,), [width])


red_zq_to_ss = Reduction(
    name="zq-to-ss",
    source_kind="group_subset_sum",
    target_kind="subset_sum",
    witness_len=_zqs_witness_len,
    transform=_zqs_transform,
    synthesize=_zqs_synthesize,
    valid_witnesses=_zqs_valid,
    canonical_witness=_zqs_canonical,
)


NUMERIC_REDUCTIONS = (
    red_ss_to_knapsack,
    red_knapsack_to_ss,
    red_ss_to_monotone,
    red_monotone_to_ss,
    red_monotone_to_zerosum,
    red_zerosum_to_ilp,
    red_ilp_to_monotone,
    red_ss_to_zq,
    red_zq_to_ss,
)
