"""Pure-Python versions of the hot loops.

Used when the compiled ``_kernels`` extension is unavailable. Both modules
expose the same two functions with identical results; see ``pcore._backend``.
"""
import numpy as np


def search_walks(p, max_len=-1):
    """Enumerate every restricted walk on the additive residue graph mod ``p``.

    A walk starts at 0, takes ``m[i-1]`` steps of ``+i`` for i = 1..p-1 in
    that order, and never returns to 0. Each walk is scored by the bead
    multiplicity size formula, accumulated per label: once the steps on
    label i are fixed, the i-th bead multiplicity equals the total number of
    steps taken so far.

    With ``max_len >= 0`` only walks of at most that many steps are visited.

    Returns ``(n_walks, best_size, n_best, best_m)`` where ``n_best`` counts
    the walks attaining ``best_size`` and ``best_m`` is the first of them.
    """
    last = p - 1
    m = [0] * last
    state = {"count": 0, "best": -1, "n_best": 0, "best_m": ()}

    def level(i, v, total, s0, s1, s2):
        x = 0
        w = v
        while True:
            t = total + x
            if 0 <= max_len < t:
                break
            m[i - 1] = x
            n0 = s0 + t
            n1 = s1 + i * t
            n2 = s2 + t * t
            if i == last:
                state["count"] += 1
                size = (n0 * (1 - n0 - p) + p * n2) // 2 + n1
                if size > state["best"]:
                    state["best"] = size
                    state["n_best"] = 1
                    state["best_m"] = tuple(m)
                elif size == state["best"]:
                    state["n_best"] += 1
            else:
                level(i + 1, w, t, n0, n1, n2)
            w = (w + i) % p
            x += 1
            if w == 0 or x >= p:
                break
        m[i - 1] = 0

    level(1, 0, 0, 0, 0, 0)
    return state["count"], state["best"], state["n_best"], state["best_m"]


def first_hook_multiple(beta, p):
    """Find the first hook length divisible by ``p``.

    ``beta`` lists bead positions (first-column hook lengths) in strictly
    decreasing order. The hooks in row k are ``beta[k] - g`` over the gaps
    ``g < beta[k]``, with column 1 at g = 0. Returns a 1-based ``(row, col)``
    or ``None``.
    """
    if len(beta) == 0:
        return None
    beta = np.asarray(beta, dtype=np.int64)
    occupied = np.zeros(int(beta[0]) + 1, dtype=bool)
    occupied[beta] = True
    gaps = np.flatnonzero(~occupied)
    n = len(beta)
    for k in range(n):
        b = int(beta[k])
        row_len = b - (n - 1 - k)
        hooks = b - gaps[:row_len]
        hits = np.flatnonzero(hooks % p == 0)
        if hits.size:
            return k + 1, int(hits[0]) + 1
    return None
