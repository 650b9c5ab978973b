"""Dense linear algebra over small Galois-field alphabets.

Matrices carry their symbol :class:`~cosetcodes.galois.Field` and a numpy
uint16 entry array.  Row reduction, nullspaces and Gram products run on
dense lookup tables, which is comfortably fast for the sizes this package
touches (at most a few hundred rows and columns).

The module also houses the exhaustive minimum-distance certifier, the
performance-critical piece of the package.  Messages are traversed in
q-ary modular Gray order, so consecutive messages differ in exactly one
symbol.  Two backends implement the same traversal:

* a packed backend for characteristic 2 that evaluates whole blocks of
  Gray codewords with vectorized table gathers over bit-packed words,
* a plain incremental backend (one scaled-row addition per step) that
  works for any characteristic and doubles as a cross-check oracle.

Certification can be partitioned over the first message symbol and run
on a process pool; results, including the reported witness, are
identical to the sequential traversal.
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import get_context

import numpy as np

from .galois import Field

DEFAULT_BUDGET = 1 << 26


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its budget."""


@dataclass(frozen=True, eq=False)
class GFMatrix:
    """A dense matrix over a small field, entries as uint16 symbols."""

    field: Field
    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.entries, dtype=np.uint16)
        if arr.ndim != 2:
            raise ValueError("entries must be a 2-D array")
        if arr.size and int(arr.max()) >= self.field.order:
            raise ValueError("entry outside the field's symbol range")
        object.__setattr__(self, "entries", arr)

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def to_lists(self) -> list[list[int]]:
        return self.entries.tolist()

    def __repr__(self) -> str:
        return f"GFMatrix(q={self.q}, {self.rows}x{self.cols})"


def gf_matrix(field: Field, rows, cols: int | None = None) -> GFMatrix:
    """Build a GFMatrix from nested lists (cols needed for empty matrices)."""
    arr = np.asarray(rows, dtype=np.uint16)
    if arr.size == 0:
        arr = arr.reshape(0, cols if cols is not None else 0)
    return GFMatrix(field, arr)


def identity(field: Field, k: int) -> GFMatrix:
    return GFMatrix(field, np.eye(k, dtype=np.uint16))


# ---------------------------------------------------------------------------
# Row reduction
# ---------------------------------------------------------------------------

def _sub_rows(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a - b entry-wise."""
    if field.p == 2:
        return a ^ b
    return field.add_table[a, field.neg_table[b]]


def rank_and_rref(m: GFMatrix) -> tuple[int, GFMatrix]:
    """Rank and the unique reduced row echelon form (canonical)."""
    field = m.field
    a = m.entries.copy()
    rows, cols = a.shape
    mul = field.mul_table
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pivot = None
        for i in range(r, rows):
            if a[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            a[[r, pivot]] = a[[pivot, r]]
        pv = int(a[r, c])
        if pv != 1:
            a[r] = mul[field.inv(pv)][a[r]]
        col_vals = a[:, c].copy()
        col_vals[r] = 0
        hit = np.nonzero(col_vals)[0]
        if hit.size:
            delta = mul[col_vals[hit][:, None], a[r][None, :]]
            a[hit] = _sub_rows(field, a[hit], delta)
        r += 1
    return r, GFMatrix(field, a[:r])


def rank(m: GFMatrix) -> int:
    return rank_and_rref(m)[0]


def row_space_equal(a: GFMatrix, b: GFMatrix) -> bool:
    """Equality of row spaces via canonical reduced forms."""
    if a.field is not b.field or a.cols != b.cols:
        return False
    ra, fa = rank_and_rref(a)
    rb, fb = rank_and_rref(b)
    return ra == rb and np.array_equal(fa.entries, fb.entries)


def nullspace(m: GFMatrix) -> GFMatrix:
    """Rows spanning {v : M v = 0} under the dot product."""
    field = m.field
    r, rref = rank_and_rref(m)
    cols = m.cols
    ent = rref.entries
    pivots = []
    j = 0
    for i in range(r):
        while j < cols and ent[i, j] == 0:
            j += 1
        pivots.append(j)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.uint16)
    neg = field.neg_table if field.p != 2 else None
    for row_idx, fc in enumerate(free):
        basis[row_idx, fc] = 1
        for i, pc in enumerate(pivots):
            v = int(ent[i, fc])
            if v:
                basis[row_idx, pc] = v if field.p == 2 else int(neg[v])
    return GFMatrix(field, basis)


def pow_entrywise(m: GFMatrix, k: int) -> GFMatrix:
    return GFMatrix(m.field, m.field.pow_table(k)[m.entries])


def _fold_add(field: Field, products: np.ndarray, axis: int) -> np.ndarray:
    if field.p == 2:
        return np.bitwise_xor.reduce(products, axis=axis)
    add = field.add_table
    out = np.take(products, 0, axis=axis)
    for i in range(1, products.shape[axis]):
        out = add[out, np.take(products, i, axis=axis)]
    return out


def field_matmul(a: GFMatrix, b: GFMatrix) -> GFMatrix:
    """Matrix product over the shared field."""
    if a.field is not b.field:
        raise ValueError("matrices use different field contexts")
    if a.cols != b.rows:
        raise ValueError("inner dimensions do not match")
    field = a.field
    mul = field.mul_table
    out = np.zeros((a.rows, b.cols), dtype=np.uint16)
    for i in range(a.rows):
        if a.cols == 0:
            continue
        products = mul[a.entries[i][:, None], b.entries]
        out[i] = _fold_add(field, products, axis=0)
    return GFMatrix(field, out)


def gram_is_zero(g1: GFMatrix, g2: GFMatrix, product: str = "euclidean",
                 ell: int | None = None) -> bool:
    """True iff every row pair is orthogonal under the chosen inner product.

    ``product="euclidean"`` uses the plain dot product.  For
    ``product="hermitian"`` the first argument's entries are raised to the
    ell-th power before the dot product; requires ell >= 2 and q = ell^2.
    """
    if g1.field is not g2.field:
        raise ValueError("matrices use different field contexts")
    if g1.cols != g2.cols:
        raise ValueError("matrices must have the same number of columns")
    if product == "hermitian":
        if ell is None or ell < 2:
            raise ValueError("hermitian product requires ell >= 2")
        if g1.q != ell * ell:
            raise ValueError(f"hermitian product requires q = ell^2, got q={g1.q}, ell={ell}")
        g1 = pow_entrywise(g1, ell)
    elif product != "euclidean":
        raise ValueError(f"unknown product {product!r}")
    if g1.rows == 0 or g2.rows == 0 or g1.cols == 0:
        return True
    field = g1.field
    mul = field.mul_table
    for i in range(g1.rows):
        products = mul[g1.entries[i][None, :], g2.entries]
        sums = _fold_add(field, products, axis=1)
        if np.any(sums):
            return False
    return True


# ---------------------------------------------------------------------------
# Exhaustive minimum distance
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistanceCertificate:
    """Result of a minimum-weight computation over a code's codewords."""

    method: str               # "exhaustive" or "sampled"
    value: int
    enumerated: int
    witness: tuple[int, ...] | None

    def as_dict(self) -> dict:
        return {
            "method": self.method,
            "value": self.value,
            "enumerated": self.enumerated,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def _gray_digits(t: int, k: int, q: int) -> list[int]:
    """Digits of the q-ary modular Gray code of t: g_i = (t_i - t_{i+1}) mod q."""
    base = []
    v = t
    for _ in range(k + 1):
        v, r = divmod(v, q)
        base.append(r)
    return [(base[i] - base[i + 1]) % q for i in range(k)]


def _codeword_for_message(field: Field, rows: np.ndarray, message) -> np.ndarray:
    out = np.zeros(rows.shape[1], dtype=np.uint16)
    mul = field.mul_table
    for sym, row in zip(message, rows):
        if sym:
            scaled = mul[int(sym)][row]
            out = out ^ scaled if field.p == 2 else field.add_table[out, scaled]
    return out


def _pack_rows(rows: np.ndarray, f: int) -> tuple[np.ndarray, int, int]:
    """Pack symbol rows into uint64 words, 64//f symbols per word.

    Symbols never straddle word boundaries, so per-word bit tricks can
    count nonzero symbols exactly.
    """
    n = rows.shape[1]
    sw = 64 // f
    nwords = -(-n // sw)
    packed = np.zeros((rows.shape[0], nwords), dtype=np.uint64)
    for j in range(n):
        word, slot = divmod(j, sw)
        packed[:, word] |= rows[:, j].astype(np.uint64) << np.uint64(slot * f)
    return packed, sw, nwords


def _packed_weights(cw: np.ndarray, f: int, lowbit_mask: np.uint64) -> np.ndarray:
    """Number of nonzero symbols per row of a packed (B, W) block."""
    y = cw.copy()
    for shift in range(1, f):
        y |= cw >> np.uint64(shift)
    y &= lowbit_mask
    return np.bitwise_count(y).sum(axis=1, dtype=np.int64)


def _enumerate_packed_range(scaled_packed: np.ndarray, k: int, q: int, f: int,
                            lowbit_mask: np.uint64, t_start: int, t_end: int,
                            block: int = 1 << 16) -> tuple[int, int]:
    """Scan Gray codewords for t in [t_start, t_end); returns (weight, t)."""
    best_w = np.iinfo(np.int64).max
    best_t = -1
    lo = max(t_start, 1)  # t = 0 is the zero codeword
    while lo < t_end:
        hi = min(lo + block, t_end)
        ts = np.arange(lo, hi, dtype=np.int64)
        digits = [(ts >> np.int64(f * i)) & np.int64(q - 1) for i in range(k + 1)]
        cw = None
        for i in range(k):
            g = (digits[i] - digits[i + 1]) & np.int64(q - 1)
            contrib = scaled_packed[i][g]
            cw = contrib.copy() if cw is None else cw ^ contrib
        weights = _packed_weights(cw, f, lowbit_mask)
        idx = int(np.argmin(weights))
        w = int(weights[idx])
        if w < best_w:
            best_w = w
            best_t = lo + idx
        lo = hi
    return best_w, best_t


def _packed_branch_worker(args) -> tuple[int, int]:
    scaled_packed, k, q, f, lowbit_mask, t_start, t_end = args
    return _enumerate_packed_range(scaled_packed, k, q, f,
                                   np.uint64(lowbit_mask), t_start, t_end)


def _min_distance_packed(g: GFMatrix, jobs: int) -> tuple[int, int]:
    field = g.field
    k, q, f = g.rows, g.q, field.e
    rows = g.entries
    mul = field.mul_table
    scaled = np.zeros((k, q, g.cols), dtype=np.uint16)
    for i in range(k):
        scaled[i] = mul[np.arange(q)[:, None], rows[i][None, :]]
    sw = 64 // f
    lowbit = np.uint64(0)
    for j in range(sw):
        lowbit |= np.uint64(1) << np.uint64(j * f)
    scaled_packed = np.zeros((k, q, -(-g.cols // sw)), dtype=np.uint64)
    for i in range(k):
        scaled_packed[i], _, _ = _pack_rows(scaled[i], f)
    total = q**k
    if jobs <= 1 or k == 1:
        return _enumerate_packed_range(scaled_packed, k, q, f, lowbit, 0, total)
    # partition on the first message symbol (the top Gray digit)
    stride = q ** (k - 1)
    tasks = [(scaled_packed, k, q, f, int(lowbit), c * stride, (c + 1) * stride)
             for c in range(q)]
    with get_context("fork").Pool(min(jobs, q)) as pool:
        results = pool.map(_packed_branch_worker, tasks)
    best = min(zip((w for w, _ in results), (t for _, t in results)))
    return best


def _min_distance_rowadd(g: GFMatrix) -> tuple[int, int]:
    """Reference backend: one scaled-row addition per Gray step (any p)."""
    field = g.field
    k, q, n = g.rows, g.q, g.cols
    add, mul = field.add, field.mul
    rows = [list(map(int, r)) for r in g.entries]
    # delta[i][v] = (sym(v+1 mod q) - sym(v)) * row_i
    delta = [[None] * q for _ in range(k)]
    for i in range(k):
        for v in range(q):
            c = field.sub((v + 1) % q, v)
            delta[i][v] = [mul(c, x) for x in rows[i]]
    digits = [0] * (k + 1)
    cw = [0] * n
    best_w, best_t = n + 1, -1
    for t in range(q**k - 1):
        # step t -> t+1 bumps Gray digit j, j = trailing (q-1)-digit count of t
        j = 0
        tt = t
        while tt % q == q - 1:
            j += 1
            tt //= q
        v = digits[j]
        d = delta[j][v]
        cw = [add(a, b) for a, b in zip(cw, d)]
        digits[j] = (v + 1) % q
        w = sum(1 for x in cw if x)
        if w < best_w:
            best_w, best_t = w, t + 1
    return best_w, best_t


def min_distance_exhaustive(g: GFMatrix, budget: int = DEFAULT_BUDGET,
                            jobs: int = 1) -> DistanceCertificate:
    """Exact minimum Hamming weight over all q^k - 1 nonzero codewords.

    Messages are traversed in q-ary modular Gray order; the witness is
    the first codeword attaining the minimum in that order.  Raises
    :class:`BudgetExceededError` when q^k - 1 exceeds ``budget`` and
    ValueError for rank-deficient input.
    """
    k = g.rows
    if k == 0:
        raise ValueError("cannot certify an empty code")
    total = g.q**k - 1
    if total > budget or total >= 1 << 62:  # message counters are int64
        raise BudgetExceededError(
            f"enumeration of {total} codewords exceeds budget {budget}")
    if rank(g) != k:
        raise ValueError("generator matrix is rank-deficient")
    if g.field.p == 2:
        best_w, best_t = _min_distance_packed(g, jobs)
    else:
        best_w, best_t = _min_distance_rowadd(g)
    message = _gray_digits(best_t, k, g.q)
    witness = _codeword_for_message(g.field, g.entries, message)
    w = int(np.count_nonzero(witness))
    if w != best_w:
        raise AssertionError("witness weight disagrees with enumerated minimum")
    return DistanceCertificate(method="exhaustive", value=best_w,
                               enumerated=total, witness=tuple(map(int, witness)))


def min_distance_sampled(g: GFMatrix, samples: int = 20000,
                         seed: int = 0) -> DistanceCertificate:
    """Random-message upper bound on the minimum distance (not exact)."""
    k = g.rows
    if k == 0:
        raise ValueError("cannot sample an empty code")
    rng = np.random.default_rng(seed)
    best_w = g.cols + 1
    best_cw = None
    checked = 0
    # all single-row multiples first, then random messages
    for i in range(k):
        for c in range(1, g.q):
            cw = _codeword_for_message(g.field, g.entries, [0] * i + [c] + [0] * (k - i - 1))
            checked += 1
            w = int(np.count_nonzero(cw))
            if w < best_w:
                best_w, best_cw = w, cw
    for _ in range(samples):
        msg = rng.integers(0, g.q, size=k)
        if not msg.any():
            continue
        cw = _codeword_for_message(g.field, g.entries, msg.tolist())
        checked += 1
        w = int(np.count_nonzero(cw))
        if 0 < w < best_w:
            best_w, best_cw = w, cw
    return DistanceCertificate(method="sampled", value=best_w, enumerated=checked,
                               witness=tuple(map(int, best_cw)) if best_cw is not None else None)
