"""Independent brute-force oracles used by the test suite.

Everything here recomputes quantities from first principles (cell walks,
rim-hook removal, exhaustive scans) so the library's fast paths are
checked against a second route.
"""

from __future__ import annotations

from emverify.partitions import Partition


def cells(lam: Partition) -> list[tuple[int, int]]:
    return [(i, j) for i, row in enumerate(lam) for j in range(row)]


def hook_by_cell_walk(lam: Partition, i: int, j: int) -> int:
    # arm: walk right along row i; leg: walk down column j.
    arm = sum(1 for jj in range(j + 1, lam[i]))
    leg = sum(1 for ii in range(i + 1, len(lam)) if lam[ii] > j)
    return arm + leg + 1


def hooks_by_cell_walk(lam: Partition) -> list[int]:
    return sorted(hook_by_cell_walk(lam, i, j) for i, j in cells(lam))


def remove_rim_hook(lam: Partition, length: int) -> Partition | None:
    """Remove one rim hook of the given length if possible (first found)."""
    if sum(lam) < length:
        return None
    border = _rim(lam)
    for start in range(len(border)):
        if start + length <= len(border):
            segment = border[start : start + length]
            result = _strip(lam, segment)
            if result is not None:
                return result
    return None


def _rim(lam: Partition) -> list[tuple[int, int]]:
    # Rim cells ordered from the end of the first row to the bottom of the
    # first column: step down when the cell below is in the diagram, else
    # step left.
    out = []
    rows = len(lam)
    i, j = 0, lam[0] - 1
    while True:
        out.append((i, j))
        if i + 1 < rows and lam[i + 1] > j:
            i += 1
        elif j > 0:
            j -= 1
        else:
            break
    return out


def _strip(lam: Partition, segment: list[tuple[int, int]]) -> Partition | None:
    cellset = set(cells(lam))
    remaining = cellset - set(segment)
    rows: dict[int, int] = {}
    for i, _ in remaining:
        rows[i] = rows.get(i, 0) + 1
    parts = [rows.get(i, 0) for i in range(len(lam))]
    for i, count in enumerate(parts):
        if set((i, j) for j in range(count)) != {c for c in remaining if c[0] == i}:
            return None
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        return None
    return tuple(x for x in parts if x > 0)


def core_by_rim_removal(lam: Partition, p: int) -> Partition:
    current = lam
    while True:
        nxt = remove_rim_hook(current, p)
        if nxt is None:
            return current
        current = nxt


def weight_by_rim_removal(lam: Partition, p: int) -> int:
    current, w = lam, 0
    while True:
        nxt = remove_rim_hook(current, p)
        if nxt is None:
            return w
        current, w = nxt, w + 1
