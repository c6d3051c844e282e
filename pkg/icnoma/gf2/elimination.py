"""
Gaussian elimination over GF(2) on rows packed into Python ints.

A row over n columns stores coordinate x_j at bit (n - j), so x1 is the most
significant bit and integer order on rows equals lexicographic order on the
coordinate tuples.
"""
from typing import Dict, Iterable, List, Optional, Tuple


def unit_row(j: int, n: int) -> int:
    """Row of e_j, 1-based"""
    return 1 << (n - j)


def reduce_row(basis: Dict[int, int], row: int) -> int:
    """Reduce `row` against a fully reduced `basis` (lead bit -> row)"""
    for lead, basis_row in basis.items():
        if row & lead:
            row ^= basis_row
    return row


def insert_row(basis: Dict[int, int], row: int) -> bool:
    """
    Add `row` to `basis` in place, keeping it fully reduced. Returns whether
    the rank grew.
    """
    row = reduce_row(basis, row)
    if not row:
        return False
    lead = 1 << (row.bit_length() - 1)
    for other_lead, other in basis.items():
        if other & lead:
            basis[other_lead] = other ^ row
    basis[lead] = row
    return True


def echelon(rows: Iterable[int]) -> Dict[int, int]:
    basis = dict()
    for row in rows:
        insert_row(basis, row)
    return basis


def rank_rows(rows: Iterable[int]) -> int:
    return len(echelon(rows))


def rref_rows(rows: Iterable[int]) -> List[int]:
    """Reduced row echelon form, zero rows dropped, leftmost pivot first"""
    return sorted(echelon(rows).values(), reverse=True)


def in_span(row: int, rows: Iterable[int]) -> bool:
    return reduce_row(echelon(rows), row) == 0


def pivot_columns(rows: Iterable[int], n: int) -> List[int]:
    """1-based pivot columns of the row space spanned by `rows`"""
    return sorted(n + 1 - lead.bit_length() for lead in echelon(rows))


def intersect_rows(a: Iterable[int], b: Iterable[int], n: int) -> List[int]:
    """
    Basis (rref) of rowspace(a) ∩ rowspace(b) by the Zassenhaus construction:
    eliminate [a | a] and [b | 0]; rows whose left half vanishes span the
    intersection in their right half.
    """
    mask = (1 << n) - 1
    stacked = [(row << n) | row for row in a] + [row << n for row in b]
    basis = echelon(stacked)
    return rref_rows(row & mask for lead, row in basis.items() if lead <= mask)


def solve_rows(target: int, rows: List[int]) -> Optional[Tuple[int, ...]]:
    """
    Indices of rows whose XOR equals `target`, or None if `target` lies
    outside the row space. Each row is tagged with its own index bit in the
    low part so the combination is tracked through elimination.
    """
    k = len(rows)
    tag_mask = (1 << k) - 1
    basis = dict()
    for i, row in enumerate(rows):
        tagged = reduce_row(basis, (row << k) | (1 << i))
        if tagged >> k:
            lead = 1 << (tagged.bit_length() - 1)
            for other_lead, other in basis.items():
                if other & lead:
                    basis[other_lead] = other ^ tagged
            basis[lead] = tagged
    residual = reduce_row(basis, target << k)
    if residual >> k:
        return None
    tags = residual & tag_mask
    return tuple(i for i in range(k) if (tags >> i) & 1)
