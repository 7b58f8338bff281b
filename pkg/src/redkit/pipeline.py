"""The coloring pipeline: 3-coloring -> counter machine -> permutation
group subset sum.

Counter layout for a graph labelled with k labels: counters x_c for label
x in [k] and color c in [3] at index 3(x-1)+(c-1); a switch counter S at
index 3k; six counters Z_(c,d) for ordered distinct color pairs at
3k+1+rank(c,d) with pairs ranked lexicographically.  Total dimension
3k + 7.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import instances as I
from . import pathdecomp
from .errors import ReductionError, ValidationError
from .groups import Permutation, block_diagonal, identity, make_run_context
from .reductions import Reduction
from .witness import Witness, field_width, pack_fields, unpack_fields

COLOR_PAIRS = ((1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2))


@dataclass(frozen=True)
class CounterLayout:
    k: int

    @property
    def dimension(self) -> int:
        return 3 * self.k + 7

    def x(self, label: int, color: int) -> int:
        if not (1 <= label <= self.k and 1 <= color <= 3):
            raise ValidationError("label or color out of range")
        return 3 * (label - 1) + (color - 1)

    @property
    def s(self) -> int:
        return 3 * self.k

    def z(self, c: int, d: int) -> int:
        return 3 * self.k + 1 + COLOR_PAIRS.index((c, d))

    def vector(self, ups=(), downs=()) -> tuple[int, ...]:
        v = [0] * self.dimension
        for i in ups:
            v[i] = 1
        for i in downs:
            v[i] = -1
        return tuple(v)


def is_run(vectors) -> bool:
    """Every prefix sum in {0,1}^l and total sum zero."""
    vectors = list(vectors)
    if not vectors:
        return True
    ell = len(vectors[0])
    if any(len(v) != ell for v in vectors):
        raise ValidationError("run check requires uniform dimension")
    state = [0] * ell
    for v in vectors:
        for j in range(ell):
            state[j] += v[j]
            if state[j] not in (0, 1):
                return False
    return all(c == 0 for c in state)


# ---------------------------------------------------------------------------
# 3-coloring -> counter machine.


def coloring_blocks(inst: I.ColoringInstance):
    """Per-command vector blocks, for auditing the emitted structure.

    Returns (layout, list of (command, [(vector, flag), ...])).
    """
    bad = pathdecomp.check_path_decomposition(
        inst.num_vertices, inst.edges, inst.bags)
    if bad:
        raise ValidationError("; ".join(bad))
    width = pathdecomp.width(inst.bags)
    k = width + 1
    _, commands = pathdecomp.make_nice(inst.num_vertices, inst.edges, inst.bags)
    labels = pathdecomp.greedy_labels(commands, width)
    lay = CounterLayout(k)
    blocks = []
    for cmd in commands:
        block = []
        if cmd[0] == "introduce":
            x = labels[cmd[1]]
            for c in (1, 2, 3):
                block.append((lay.vector(ups=[lay.x(x, c), lay.s]), I.OPTIONAL))
            block.append((lay.vector(downs=[lay.s]), I.REQUIRED))
        elif cmd[0] == "forget":
            x = labels[cmd[1]]
            for c in (1, 2, 3):
                block.append((lay.vector(ups=[lay.s], downs=[lay.x(x, c)]),
                              I.OPTIONAL))
            block.append((lay.vector(downs=[lay.s]), I.REQUIRED))
        else:
            x, y = labels[cmd[1]], labels[cmd[2]]
            for c, d in COLOR_PAIRS:
                block.append((lay.vector(ups=[lay.z(c, d), lay.s],
                                         downs=[lay.x(x, c), lay.x(y, d)]),
                              I.OPTIONAL))
            block.append((lay.vector(downs=[lay.s]), I.REQUIRED))
            block.append((lay.vector(ups=[lay.s]), I.REQUIRED))
            for c, d in COLOR_PAIRS:
                block.append((lay.vector(ups=[lay.x(x, c), lay.x(y, d)],
                                         downs=[lay.z(c, d), lay.s]),
                              I.OPTIONAL))
            block.append((lay.vector(ups=[lay.s]), I.REQUIRED))
            block.append((lay.vector(downs=[lay.s]), I.REQUIRED))
        blocks.append((cmd, block))
    return lay, blocks


def _ccm_transform(inst, wit):
    lay, blocks = coloring_blocks(inst)
    vectors, flags = [], []
    for _, block in blocks:
        for vec, flag in block:
            vectors.append(vec)
            flags.append(flag)
    got = I.CounterMachineInstance(lay.dimension, tuple(vectors), tuple(flags))
    if got.dimension != 3 * lay.k + 7:
        raise ReductionError("dimension drifted from 3k+7")
    return got


red_coloring_to_cm = Reduction(
    name="coloring-to-cm",
    source_kind="coloring",
    target_kind="counter_machine",
    witness_len=lambda inst: 0,
    transform=_ccm_transform,
    synthesize=lambda inst, sol: Witness.zero(0),
    valid_witnesses=lambda inst: iter([Witness.zero(0)]),
)


# ---------------------------------------------------------------------------
# Counter machine -> symmetric group subset sum.


@lru_cache(maxsize=64)
def _pi_powers(n: int) -> tuple[Permutation, ...]:
    ctx = make_run_context(n)
    out = [identity(ctx.domain)]
    for _ in range(n):
        out.append(out[-1] * ctx.pi)
    return tuple(out)


@lru_cache(maxsize=4096)
def _cm_setup(inst: I.CounterMachineInstance):
    """(group, elements, f_C, degree); cached because witness loops rebuild
    targets against the same element list."""
    n = len(inst.vectors)
    ell = inst.dimension
    ctx = make_run_context(n)
    ident = identity(ctx.domain)
    f_c = sum(1 for f in inst.flags if f == I.REQUIRED)
    elements = []
    for vec, flag in zip(inst.vectors, inst.flags):
        parts = [ctx.gamma_hat(b) for b in vec]
        parts.append(ctx.pi if flag == I.REQUIRED else ident)
        elements.append(block_diagonal(parts))
    degree = (ell + 1) * ctx.domain
    return I.SymmetricGroup(degree), tuple(elements), f_c


def _cps_witness_len(inst):
    n = len(inst.vectors)
    if n == 0:
        return 0
    return inst.dimension * field_width(n)


def _cps_widths(inst):
    return [field_width(len(inst.vectors))] * inst.dimension


def _cps_transform(inst, wit):
    n = len(inst.vectors)
    if n == 0:
        return I.trivial_instance("group_subset_sum", True,
                                  group=I.SymmetricGroup(2))
    counts = unpack_fields(wit, _cps_widths(inst))
    if any(c > n for c in counts):
        return I.trivial_instance("group_subset_sum", False,
                                  group=I.SymmetricGroup(2))
    group, elements, f_c = _cm_setup(inst)
    pows = _pi_powers(n)
    parts = [pows[c] for c in counts]
    parts.append(pows[f_c])
    target = block_diagonal(parts)
    return I.GroupSubsetSumInstance(group, elements, target)


def _cps_synthesize(inst, sol):
    n = len(inst.vectors)
    if n == 0:
        return Witness.zero(0)
    chosen = set(sol)
    counts = tuple(
        sum(1 for i in chosen if inst.vectors[i][j] != 0)
        for j in range(inst.dimension))
    return pack_fields(counts, _cps_widths(inst))


def _cps_valid(inst):
    n = len(inst.vectors)
    if n == 0:
        yield Witness.zero(0)
        return
    widths = _cps_widths(inst)
    for counts in product(range(n + 1), repeat=inst.dimension):
        yield pack_fields(counts, widths)


red_cm_to_perm_ss = Reduction(
    name="cm-to-permss",
    source_kind="counter_machine",
    target_kind="group_subset_sum",
    witness_len=_cps_witness_len,
    transform=_cps_transform,
    synthesize=_cps_synthesize,
    valid_witnesses=_cps_valid,
)

PIPELINE_REDUCTIONS = (red_coloring_to_cm, red_cm_to_perm_ss)
