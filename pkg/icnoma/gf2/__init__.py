from icnoma.gf2.BitVector import BitVector
from icnoma.gf2.BitMatrix import BitMatrix
from icnoma.gf2.linalg import rank, in_row_space, rref, intersect, solve, stack, same_row_space
