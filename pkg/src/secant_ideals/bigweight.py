"""Array-based relation systems for large weight spaces.

Same mathematics as the direct route in ``prolong``, different plumbing:
monomials are packed id-sequences in int64 scalars, the column-driven pair
expansion is vectorized, and the kernel dimension is obtained by staged
coefficient propagation (the elimination of the trace module, without step
recording): zero-forcing rounds run vectorized, the remaining coefficients are
determined as expressions in a handful of variables, and the kernel dimension
is the variable count minus the rank of the residual constraints.

Weight spaces beyond a couple million monomials are decomposed into sign
components under pairwise disjoint transpositions fixing the weight; each
component system is built chunk-wise at the orbit level so peak memory stays
bounded.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

import numpy as np

from .multiindex import exponents, monomials_of_weight, total
from . import linalg

# Above this, weights with repeated entries go through sign components.
COMPONENT_LIMIT = 1_500_000
# Edge-generation chunk: columns per pass in the chunked builder.
CHUNK_COLS = 800_000
FIELD_BITS = 6
MAX_VARS = 400


# ---------------------------------------------------------------------------
# Packed enumeration


def enumerate_ids(beta, d, e) -> np.ndarray:
    """(count x e) uint8 matrix of alpha-ids, rows in canonical (packed) order."""
    n = len(beta) - 1
    alphas = exponents(n, d)
    na = len(alphas)
    if na > (1 << FIELD_BITS):
        raise ValueError(f"{na} alphas exceed the packed field width")
    from .multiindex import count_monomials_of_weight

    count = count_monomials_of_weight(beta, d, e)
    out = np.empty((count, e), dtype=np.uint8)
    if count == 0:
        return out
    sufmax = [(0,) * (n + 1)] * (na + 1)
    run = [0] * (n + 1)
    for i in range(na - 1, -1, -1):
        run = [max(run[j], alphas[i][j]) for j in range(n + 1)]
        sufmax[i] = tuple(run)
    row = bytearray(e)
    idx = 0

    def rec(i, pos, residual):
        nonlocal idx
        rem_e = e - pos
        if rem_e == 0:
            if not any(residual):
                out[idx] = row
                idx += 1
            return
        if i == na:
            return
        sm = sufmax[i]
        for j in range(n + 1):
            if residual[j] > rem_e * sm[j]:
                return
        alpha = alphas[i]
        mx = rem_e
        for j in range(n + 1):
            if alpha[j]:
                q = residual[j] // alpha[j]
                if q < mx:
                    mx = q
        for mult in range(mx, 0, -1):
            for p in range(pos, pos + mult):
                row[p] = i
            rec(i + 1, pos + mult, tuple(residual[j] - mult * alpha[j] for j in range(n + 1)))
        rec(i + 1, pos, residual)

    rec(0, 0, tuple(beta))
    if idx != count:
        raise AssertionError(f"enumerated {idx} monomials, expected {count}")
    return out


def pack(ids: np.ndarray) -> np.ndarray:
    """Pack an (N x e) id matrix into int64 keys, first field highest."""
    e = ids.shape[1]
    out = np.zeros(len(ids), dtype=np.int64)
    for p in range(e):
        out <<= FIELD_BITS
        out |= ids[:, p].astype(np.int64)
    return out


def unpack(packed: np.ndarray, e: int) -> np.ndarray:
    out = np.empty((len(packed), e), dtype=np.uint8)
    mask = (1 << FIELD_BITS) - 1
    for p in range(e - 1, -1, -1):
        out[:, p] = (packed & mask).astype(np.uint8)
        packed = packed >> FIELD_BITS
    return out


def _pair_slots(e):
    """(p1, p2) slot pairs with removal shift constants."""
    out = []
    for p1 in range(e):
        for p2 in range(p1 + 1, e):
            out.append((p1, p2))
    return out


def _remove_two(packed, p1, p2, e):
    """Packed keys with fields p1 < p2 removed (rows stay sorted)."""
    b = FIELD_BITS
    low_len = e - 1 - p2
    mid_len = p2 - p1 - 1
    low = packed & ((np.int64(1) << (b * low_len)) - 1) if low_len else np.zeros_like(packed)
    mid = (packed >> (b * (low_len + 1))) & ((np.int64(1) << (b * mid_len)) - 1) if mid_len else np.zeros_like(packed)
    high = packed >> (b * (e - p1))
    return (high << (b * (mid_len + low_len))) | (mid << (b * low_len)) | low


def _canonical_pair_mask(ids, p1, p2):
    """Keep one slot pair per distinct degree-2 sub-monomial of each row."""
    ok1 = np.ones(len(ids), dtype=bool) if p1 == 0 else ids[:, p1 - 1] != ids[:, p1]
    ok2 = np.ones(len(ids), dtype=bool) if p2 == p1 + 1 else ids[:, p2 - 1] != ids[:, p2]
    return ok1 & ok2


# ---------------------------------------------------------------------------
# Relation system (array form) and staged propagation


class RelationSystem:
    """Relations grouped by row: rel_ptr/rel_cols/rel_vals plus column adjacency.

    rel_vals are integer coefficients of the relations after clearing halves
    (any common positive row scale is irrelevant for the kernel).
    """

    def __init__(self, ncols, rel_ptr, rel_cols, rel_vals):
        self.ncols = ncols
        self.rel_ptr = rel_ptr
        self.rel_cols = rel_cols
        self.rel_vals = rel_vals
        order = np.argsort(rel_cols, kind="stable")
        counts = np.bincount(rel_cols, minlength=ncols)
        self.col_ptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
        nrel = len(rel_ptr) - 1
        rel_ids = np.repeat(
            np.arange(nrel, dtype=np.int64), np.diff(rel_ptr).astype(np.int64)
        )
        self.col_rel = rel_ids[order]

    @property
    def nrels(self):
        return len(self.rel_ptr) - 1


def _zero_rounds(system: RelationSystem, status, consumed):
    """Vectorized zero-forcing: fire every undetermined-count-1 relation per round."""
    rel_ptr, rel_cols = system.rel_ptr, system.rel_cols
    starts = rel_ptr[:-1]
    while True:
        undet = (status[rel_cols] == 0).astype(np.int64)
        cnt = np.add.reduceat(undet, starts)
        empty = np.diff(rel_ptr) == 0
        cnt[empty] = 0
        fire = (cnt == 1) & ~consumed
        if not fire.any():
            return
        target_sum = np.add.reduceat(rel_cols * undet, starts)
        targets = target_sum[fire]
        status[targets] = 1
        consumed[fire] = True


def _combine(entries):
    """Integer accumulation of sum(v * expr_c) over (c, v, expr) triples.

    Expressions are (den, {var: num}) with den > 0; returns (den, nums) or None
    when the sum vanishes.
    """
    den = 1
    nums: dict = {}
    for c, v, e in entries:
        eden, enums = e
        if eden != den:
            g = gcd(den, eden)
            lift = eden // g
            if lift != 1:
                for var in nums:
                    nums[var] *= lift
                den *= lift
            scale = den // eden
        else:
            scale = 1
        vs = v * scale
        for var, num in enums.items():
            nv = nums.get(var, 0) + vs * num
            if nv:
                nums[var] = nv
            else:
                del nums[var]
    if not nums:
        return None
    return den, nums


def _normalized(den, nums):
    g = den
    for num in nums.values():
        g = gcd(g, num)
        if g == 1:
            return den, nums
    return den // g, {var: num // g for var, num in nums.items()}


def propagate_kappa(system: RelationSystem) -> int:
    """Kernel dimension by staged determination over the relation system."""
    ncols = system.ncols
    rel_ptr, rel_cols, rel_vals = system.rel_ptr, system.rel_cols, system.rel_vals
    col_ptr, col_rel = system.col_ptr, system.col_rel
    status = np.zeros(ncols, dtype=np.int8)
    consumed = np.zeros(system.nrels, dtype=bool)
    _zero_rounds(system, status, consumed)

    cnt = np.add.reduceat((status[rel_cols] == 0).astype(np.int64), rel_ptr[:-1])
    cnt[np.diff(rel_ptr) == 0] = 0
    exprs = {}  # col -> (den, {var: num}); absent means the zero expression
    nonzero_col = np.zeros(ncols, dtype=bool)
    nvars = 0
    heap = [int(r) for r in np.nonzero((cnt == 1) & ~consumed)[0]]
    heapq.heapify(heap)
    search_from = 0
    status_l = status.tolist()  # python-level mirror for the hot loop

    def determine(col, expression):
        status_l[col] = 1
        if expression:
            exprs[col] = expression
            nonzero_col[col] = True
        touched = col_rel[col_ptr[col] : col_ptr[col + 1]]
        cnt[touched] -= 1
        hits = touched[cnt[touched] == 1]
        for r in hits.tolist():
            if not consumed[r]:
                heapq.heappush(heap, r)

    undetermined = ncols - int(status.sum())
    while undetermined > 0:
        fired = False
        while heap:
            r = heapq.heappop(heap)
            if consumed[r] or cnt[r] != 1:
                continue
            consumed[r] = True
            lo, hi = int(rel_ptr[r]), int(rel_ptr[r + 1])
            target = -1
            target_v = 0
            entries = []
            cols_r = rel_cols[lo:hi].tolist()
            vals_r = rel_vals[lo:hi].tolist()
            for c, v in zip(cols_r, vals_r):
                if status_l[c] == 0:
                    target = c
                    target_v = v
                else:
                    e = exprs.get(c)
                    if e is not None:
                        entries.append((c, v, e))
            combined = _combine(entries) if entries else None
            if combined is None:
                expression = None
            else:
                den, nums = combined
                sign = -1 if target_v > 0 else 1
                expression = _normalized(
                    den * abs(target_v), {var: sign * num for var, num in nums.items()}
                )
            determine(target, expression)
            undetermined -= 1
            fired = True
        if undetermined == 0:
            break
        if not fired or not heap:
            while status_l[search_from]:
                search_from += 1
            var = nvars
            nvars += 1
            if nvars > MAX_VARS:
                raise RuntimeError("staged propagation introduced too many variables")
            determine(search_from, (1, {var: 1}))
            undetermined -= 1

    # residual constraints from unconsumed relations touching a nonzero column
    candidates = np.nonzero(~consumed)[0]
    if len(candidates):
        touches = np.add.reduceat(
            nonzero_col[rel_cols].astype(np.int8), rel_ptr[:-1]
        )
        touches[np.diff(rel_ptr) == 0] = 0
        candidates = candidates[touches[candidates] > 0]
    rows = _residual_rows(system, candidates, exprs, nvars)
    rank = linalg.sparse_rank(rows)
    return nvars - rank


def _residual_rows(system, candidates, exprs, nvars):
    """Nonzero residual constraint rows over the variables, exactly.

    Relations whose expressions all have denominator 1 and small magnitudes are
    evaluated vectorized in int64; the remainder go through exact big-int
    accumulation.
    """
    if not len(candidates) or nvars == 0:
        return []
    rel_ptr, rel_cols, rel_vals = system.rel_ptr, system.rel_cols, system.rel_vals
    bound = 1 << 38
    num_mat = np.zeros((system.ncols, nvars), dtype=np.int64)
    fast_col = np.ones(system.ncols, dtype=bool)
    for c, (den, nums) in exprs.items():
        if den != 1 or any(abs(num) > bound for num in nums.values()):
            fast_col[c] = False
            continue
        for var, num in nums.items():
            num_mat[c, var] = num
    max_val = int(np.abs(rel_vals).max()) if len(rel_vals) else 1
    # a relation is fast iff every column expression has denominator 1 and fits
    fast_rel = np.add.reduceat((~fast_col[rel_cols]).astype(np.int8), rel_ptr[:-1])
    empty = np.diff(rel_ptr) == 0
    fast_rel[empty] = 1
    cand_mask = np.zeros(system.nrels, dtype=bool)
    cand_mask[candidates] = True
    fast = cand_mask & (fast_rel == 0)
    slow = np.nonzero(cand_mask & (fast_rel > 0) & ~empty)[0]
    rows = []
    if fast.any() and max_val * bound * max(int(np.diff(rel_ptr).max()), 1) < (1 << 62):
        sel = np.nonzero(fast)[0]
        starts = rel_ptr[:-1]
        sums = np.zeros((len(sel), nvars), dtype=np.int64)
        for j in range(nvars):
            weighted = rel_vals * num_mat[rel_cols, j]
            colsum = np.add.reduceat(weighted, starts)
            colsum[empty] = 0
            sums[:, j] = colsum[sel]
        nz = np.nonzero(np.any(sums != 0, axis=1))[0]
        for i in nz.tolist():
            rows.append({j: int(v) for j, v in enumerate(sums[i]) if v})
    elif fast.any():
        slow = np.concatenate([slow, np.nonzero(fast)[0]])
    for r in slow.tolist():
        lo, hi = int(rel_ptr[r]), int(rel_ptr[r + 1])
        entries = []
        for c, v in zip(rel_cols[lo:hi].tolist(), rel_vals[lo:hi].tolist()):
            e = exprs.get(c)
            if e is not None:
                entries.append((c, v, e))
        if not entries:
            continue
        combined = _combine(entries)
        if combined is not None:
            rows.append(combined[1])
    return rows


# ---------------------------------------------------------------------------
# Monomial-level system (mode B)


def build_system(beta, d, k) -> RelationSystem:
    e = k + 1
    ids = enumerate_ids(beta, d, e)
    packed = pack(ids)
    ncols = len(packed)
    row_parts, col_parts, val_parts = [], [], []
    col_index = np.arange(ncols, dtype=np.int32)
    for p1, p2 in _pair_slots(e):
        mask = _canonical_pair_mask(ids, p1, p2)
        rows = _remove_two(packed[mask], p1, p2, e)
        vals = np.where(ids[mask, p1] == ids[mask, p2], 1, 2).astype(np.int8)
        row_parts.append(rows)
        col_parts.append(col_index[mask])
        val_parts.append(vals)
    row_keys = np.concatenate(row_parts)
    cols = np.concatenate(col_parts)
    vals = np.concatenate(val_parts)
    del row_parts, col_parts, val_parts
    uniq, rel_ids = np.unique(row_keys, return_inverse=True)
    del row_keys
    order = np.argsort(rel_ids, kind="stable")
    rel_ids = rel_ids[order]
    cols = cols[order]
    vals = vals[order]
    counts = np.bincount(rel_ids, minlength=len(uniq))
    rel_ptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
    return RelationSystem(ncols, rel_ptr, cols.astype(np.int64), vals.astype(np.int64))


# ---------------------------------------------------------------------------
# Sign-component systems (mode C)


def _alpha_perm_lut(n, d, perm):
    """uint8 LUT sending each alpha-id to the id of the coordinate-permuted alpha."""
    alphas = exponents(n, d)
    index = {a: i for i, a in enumerate(alphas)}
    lut = np.empty(len(alphas), dtype=np.uint8)
    for i, a in enumerate(alphas):
        lut[i] = index[tuple(a[p] for p in perm)]
    return lut


def _group_luts(beta, d, spec):
    """LUTs, masks and characters for all products of the spec's transpositions."""
    from .symmetry import group_elements

    n = len(beta) - 1
    elements = group_elements(spec, n)
    luts = []
    for mask, g, _chi in elements:
        luts.append((mask, _alpha_perm_lut(n, d, g)))
    return luts


def _column_classes(beta, d, k, spec):
    """Column orbit classes under the spec's group, orbit-contiguously ordered.

    Returns (ids, packed, class_of, chosen_mask, class_fixer, luts); the fixer
    bitset of a class records which group elements fix its representative.
    """
    e = k + 1
    luts = _group_luts(beta, d, spec)
    ids = enumerate_ids(beta, d, e)
    packed = pack(ids)
    canon_c = packed.copy()
    chosen_c = np.zeros(len(packed), dtype=np.uint8)
    fixer = np.zeros(len(packed), dtype=np.uint16)  # bitset over group masks
    for mask, lut in luts:
        if mask == 0:
            fixer |= 1
            continue
        img = np.sort(lut[ids], axis=1)
        keys = pack(img)
        fixer |= (keys == packed).astype(np.uint16) << mask
        better = keys < canon_c
        canon_c[better] = keys[better]
        chosen_c[better] = mask
        del img, keys
    reps_keys = np.unique(canon_c)
    class_of = np.searchsorted(reps_keys, canon_c).astype(np.int32)
    is_rep = canon_c == packed
    class_fixer = np.zeros(len(reps_keys), dtype=np.uint16)
    class_fixer[class_of[is_rep]] = fixer[is_rep]
    del is_rep, fixer
    # orbit-contiguous order: chunk-local reduction then collapses the |G|
    # duplicate contributions of each orbit immediately
    order = np.argsort(canon_c, kind="stable")
    del canon_c
    return ids[order], packed[order], class_of[order], chosen_c[order], class_fixer, luts


def _chunk_edges(ids_c, packed_c, class_c, hmask_c, e, luts):
    """(row_keys, cls, vals, xor_masks) of one column chunk, rows canonicalized."""
    r_parts, c_parts, v_parts, m_parts = [], [], [], []
    for p1, p2 in _pair_slots(e):
        mask = _canonical_pair_mask(ids_c, p1, p2)
        r_parts.append(_remove_two(packed_c[mask], p1, p2, e))
        c_parts.append(class_c[mask])
        v_parts.append(np.where(ids_c[mask, p1] == ids_c[mask, p2], 1, 2).astype(np.int8))
        m_parts.append(hmask_c[mask])
    rows = np.concatenate(r_parts)
    cls = np.concatenate(c_parts)
    vals = np.concatenate(v_parts)
    hmasks = np.concatenate(m_parts)
    del r_parts, c_parts, v_parts, m_parts
    uniq, inv = np.unique(rows, return_inverse=True)
    del rows
    u_ids = unpack(uniq, e - 2)
    canon_r = uniq.copy()
    chosen_r = np.zeros(len(uniq), dtype=np.uint8)
    for gmask, lut in luts:
        if gmask == 0:
            continue
        img = np.sort(lut[u_ids], axis=1)
        keys = pack(img)
        better = keys < canon_r
        canon_r[better] = keys[better]
        chosen_r[better] = gmask
        del img, keys
    row_keys = canon_r[inv]
    xor_masks = hmasks ^ chosen_r[inv]
    return row_keys, cls, vals, xor_masks


def _reduce_triples(row_keys, cls, vals, masks=None):
    """Sort and sum duplicate (row, cls[, mask]) entries."""
    if masks is None:
        order = np.lexsort((cls, row_keys))
    else:
        order = np.lexsort((masks, cls, row_keys))
    row_keys = row_keys[order]
    cls = cls[order]
    vals = vals[order]
    if masks is not None:
        masks = masks[order]
    del order
    if not len(row_keys):
        return (row_keys, cls, vals) if masks is None else (row_keys, cls, vals, masks)
    boundary = np.empty(len(row_keys), dtype=bool)
    boundary[0] = True
    boundary[1:] = (row_keys[1:] != row_keys[:-1]) | (cls[1:] != cls[:-1])
    if masks is not None:
        boundary[1:] |= masks[1:] != masks[:-1]
    starts = np.nonzero(boundary)[0]
    sums = np.add.reduceat(vals, starts)
    if masks is None:
        return row_keys[starts], cls[starts], sums
    return row_keys[starts], cls[starts], sums, masks[starts]


def build_component_store(beta, d, k, spec, chunk=CHUNK_COLS):
    """Orbit-level relation store shared by all sign components of one spec.

    Edges carry the XOR of the column-side and row-side translator masks so
    each component folds the store with its own character.
    """
    e = k + 1
    ids, packed, class_of, chosen_c, class_fixer, luts = _column_classes(beta, d, k, spec)
    store_rows, store_cols, store_vals, store_masks = [], [], [], []
    for lo in range(0, len(packed), chunk):
        hi = min(lo + chunk, len(packed))
        row_keys, cls, vals, xor_masks = _chunk_edges(
            ids[lo:hi], packed[lo:hi], class_of[lo:hi], chosen_c[lo:hi], e, luts
        )
        row_keys, cls, sums, xor_masks = _reduce_triples(
            row_keys, cls, vals.astype(np.int32), xor_masks
        )
        store_rows.append(row_keys)
        store_cols.append(cls)
        store_vals.append(sums)
        store_masks.append(xor_masks)
    rows = np.concatenate(store_rows)
    cls = np.concatenate(store_cols)
    vals = np.concatenate(store_vals)
    masks = np.concatenate(store_masks)
    del store_rows, store_cols, store_vals, store_masks
    rows, cls, vals, masks = _reduce_triples(rows, cls, vals, masks)
    return class_fixer, (rows, cls, vals, masks)


def build_component_system_folded(beta, d, k, spec, chunk=CHUNK_COLS) -> RelationSystem:
    """One sign component built directly with per-chunk character folding.

    Bounded memory for very large weights: the mask dimension never reaches the
    store; entries of classes invalid for the character are dropped on sight.
    """
    e = k + 1
    chi = _chi_table(spec)
    ids, packed, class_of, chosen_c, class_fixer, luts = _column_classes(beta, d, k, spec)
    valid = np.ones(len(class_fixer), dtype=bool)
    for gmask in range(len(chi)):
        if chi[gmask] == -1:
            valid &= (class_fixer & (1 << gmask)) == 0
    chi_arr = np.array(chi, dtype=np.int32)
    store_rows, store_cols, store_vals = [], [], []
    for lo in range(0, len(packed), chunk):
        hi = min(lo + chunk, len(packed))
        row_keys, cls, vals, xor_masks = _chunk_edges(
            ids[lo:hi], packed[lo:hi], class_of[lo:hi], chosen_c[lo:hi], e, luts
        )
        keep = valid[cls]
        row_keys = row_keys[keep]
        cls = cls[keep]
        signed = vals[keep].astype(np.int32) * chi_arr[xor_masks[keep]]
        del vals, xor_masks, keep
        row_keys, cls, sums = _reduce_triples(row_keys, cls, signed)
        nz = sums != 0
        store_rows.append(row_keys[nz])
        store_cols.append(cls[nz])
        store_vals.append(sums[nz])
    del ids, packed, class_of, chosen_c
    rows = np.concatenate(store_rows)
    cls = np.concatenate(store_cols)
    vals = np.concatenate(store_vals)
    del store_rows, store_cols, store_vals
    rows, cls, vals = _reduce_triples(rows, cls, vals)
    nz = vals != 0
    rows, cls, vals = rows[nz], cls[nz], vals[nz]
    class_map = np.full(len(class_fixer), -1, dtype=np.int64)
    class_map[valid] = np.arange(int(valid.sum()))
    return _assemble_system(int(valid.sum()), rows, class_map[cls], vals)


def _assemble_system(ncols, row_keys, cols, vals) -> RelationSystem:
    uniqr, rel_ids = np.unique(row_keys, return_inverse=True)
    order = np.argsort(rel_ids, kind="stable")
    rel_ids = rel_ids[order]
    cols = cols[order]
    vals = vals[order]
    counts = np.bincount(rel_ids, minlength=len(uniqr))
    rel_ptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
    return RelationSystem(ncols, rel_ptr, cols.astype(np.int64), vals.astype(np.int64))


def component_system(store, signs_mask_chi, class_fixer) -> RelationSystem:
    """Fold the shared store with one character; drop invalid classes and zero entries.

    signs_mask_chi maps a group mask to +1/-1 for this component.
    """
    reps_count = len(class_fixer)
    chi = signs_mask_chi
    # class validity: every fixing group element must act with character +1
    valid = np.ones(reps_count, dtype=bool)
    for gmask in range(len(chi)):
        if chi[gmask] == -1:
            valid &= (class_fixer & (1 << gmask)) == 0
    class_map = np.full(reps_count, -1, dtype=np.int64)
    class_map[valid] = np.arange(int(valid.sum()))
    rows, cls, vals, masks = store
    keep = valid[cls]
    r, c, v, m = rows[keep], cls[keep], vals[keep], masks[keep]
    signs = np.array(chi, dtype=np.int64)[m]
    sv = v.astype(np.int64) * signs
    order = np.lexsort((c, r))
    r, c, sv = r[order], c[order], sv[order]
    boundary = np.empty(len(r), dtype=bool)
    if len(r) == 0:
        return RelationSystem(int(valid.sum()), np.zeros(1, dtype=np.int64),
                              np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
    boundary[0] = True
    boundary[1:] = (r[1:] != r[:-1]) | (c[1:] != c[:-1])
    starts = np.nonzero(boundary)[0]
    r = r[starts]
    c = c[starts]
    sums = np.add.reduceat(sv, starts)
    nz = sums != 0
    r, c, sums = r[nz], class_map[c[nz]], sums[nz]
    return _assemble_system(int(valid.sum()), r, c, sums)


def _chi_table(spec):
    """chi[group mask] = product of the component's signs over participating swaps."""
    t = len(spec.transpositions)
    chi = []
    for gmask in range(1 << t):
        s = 1
        for bit in range(t):
            if gmask >> bit & 1:
                s *= spec.signs[bit]
        chi.append(s)
    return chi


# share the mask-labeled store across the sign components of moderate weights;
# gigantic weights rebuild per component with immediate folding instead
FOLD_LIMIT = 6_000_000


def component_kappa_large(beta, k, d, n, spec) -> int:
    from .multiindex import count_monomials_of_weight

    ncols = count_monomials_of_weight(beta, d, k + 1)
    if ncols > FOLD_LIMIT:
        system = build_component_system_folded(beta, d, k, spec)
        return propagate_kappa(system)
    store_key = (tuple(beta), k, d, n, spec.transpositions)
    cached = _STORE_CACHE.get(store_key)
    if cached is None:
        class_fixer, store = build_component_store(beta, d, k, spec)
        cached = (class_fixer, store)
        _STORE_CACHE.clear()
        _STORE_CACHE[store_key] = cached
    class_fixer, store = cached
    system = component_system(store, _chi_table(spec), class_fixer)
    return propagate_kappa(system)


_STORE_CACHE: dict = {}


def kappa_large(beta, k, d, n, split_limit=None):
    """Exact kappa for a large weight; returns (kappa, method string)."""
    from .multiindex import count_monomials_of_weight
    from .symmetry import SplitSpec, natural_transpositions

    ncols = count_monomials_of_weight(beta, d, k + 1)
    trans = natural_transpositions(beta)
    if ncols > COMPONENT_LIMIT and trans:
        from itertools import product as iproduct

        total_kappa = 0
        for signs in iproduct((1, -1), repeat=len(trans)):
            spec = SplitSpec(tuple(trans), tuple(signs))
            total_kappa += component_kappa_large(beta, k, d, n, spec)
        _STORE_CACHE.clear()
        return total_kappa, "relation-matrix"
    system = build_system(beta, d, k)
    return propagate_kappa(system), "relation-matrix"
