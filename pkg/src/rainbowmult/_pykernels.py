"""Pure-Python rainbow-clique enumeration kernels (fallback for ``_ckernels``)."""


def count_extensions(matrix, r, prefix, candidates, need, budget):
    """Count rainbow extensions of ``prefix`` by ``need`` vertices from ``candidates``.

    Returns ``(count, visits)``; ``visits > budget`` means the search was cut short.
    """
    col = [list(map(int, row)) for row in matrix]
    cand = [int(v) for v in candidates]
    chosen = [int(v) for v in prefix]
    used = [False] * (r + 1)
    for i, v in enumerate(chosen):
        for w in chosen[:i]:
            c = col[w][v]
            if used[c]:
                return 0, 0
            used[c] = True

    visits = 0
    ncand = len(cand)

    def dfs(start, need):
        nonlocal visits
        if need == 0:
            return 1
        total = 0
        for idx in range(start, ncand - need + 1):
            w = cand[idx]
            row = col[w]
            marked = []
            ok = True
            for s in chosen:
                c = row[s]
                if used[c]:
                    ok = False
                    break
                used[c] = True
                marked.append(c)
            if ok:
                visits += 1
                if visits <= budget:
                    chosen.append(w)
                    total += dfs(idx + 1, need - 1)
                    chosen.pop()
            for c in marked:
                used[c] = False
            if visits > budget:
                return total
        return total

    count = dfs(0, need)
    return count, visits
