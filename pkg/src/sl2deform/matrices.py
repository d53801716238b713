"""Small dense square matrices over exact scalars.

Just enough linear algebra for representation checking: ring operations, the
commutator, the scalar-multiple-of-identity test, and the coordinate block
decomposition used to split reducible representations.  No inversion, no
eigensolving; entries stay exact throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .scalars import Scalar, as_scalar, render_scalar, scalar_is_zero


class Matrix:
    """Immutable n x n matrix of exact scalars.

    Entries may live in different quadratic extensions; compatibility is
    enforced lazily, by the scalar arithmetic of whatever operation actually
    combines two entries.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls([[Fraction(0)] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls(
            [[as_scalar(entries[i]) if i == j else Fraction(0) for j in range(n)]
             for i in range(n)]
        )

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self.rows[i][j]

    def _check_dim(self, other: "Matrix"):
        if self.dimension != other.dimension:
            raise ValueError(
                f"dimension mismatch: {self.dimension} vs {other.dimension}"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.rows])

    def __mul__(self, scalar) -> "Matrix":
        s = as_scalar(scalar)
        return Matrix([[a * s for a in row] for row in self.rows])

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        n = self.dimension
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc: Scalar = Fraction(0)
                for k in range(n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if scalar_is_zero(a) or scalar_is_zero(b):
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(scalar_is_zero(a) for row in self.rows for a in row)

    def to_strings(self) -> list[list[str]]:
        """Row-major rendering for reports."""
        return [[render_scalar(a) for a in row] for row in self.rows]

    def __repr__(self):
        return f"Matrix({self.to_strings()})"


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """AB - BA, exactly."""
    return (a @ b) - (b @ a)


def is_scalar_multiple_of_identity(m: Matrix) -> Optional[Scalar]:
    """The scalar lambda with m == lambda * I, or None if m is not scalar."""
    lam = m.rows[0][0]
    for i, row in enumerate(m.rows):
        for j, entry in enumerate(row):
            if i == j:
                if entry != lam:
                    return None
            elif not scalar_is_zero(entry):
                return None
    return lam


@dataclass(frozen=True)
class BlockSplit:
    """Partition of basis indices into jointly invariant coordinate blocks."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = [i for block in self.blocks for i in block]
        if sorted(seen) != list(range(len(seen))) or not all(self.blocks):
            raise ValueError("blocks must be disjoint, nonempty and cover all indices")


def coordinate_block_split(ops: Sequence[Matrix]) -> BlockSplit:
    """Finest partition of {0..n-1} whose parts are invariant under every op.

    Computed as the connected components of the union of all off-diagonal
    nonzero patterns; order of ``ops`` is irrelevant.
    """
    if not ops:
        raise ValueError("need at least one matrix")
    n = ops[0].dimension
    for op in ops:
        if op.dimension != n:
            raise ValueError("all matrices must share one dimension")
    adj: dict[int, set[int]] = {i: set() for i in range(n)}
    for op in ops:
        for i in range(n):
            for j in range(n):
                if i != j and not scalar_is_zero(op.rows[i][j]):
                    adj[i].add(j)
                    adj[j].add(i)
    blocks = []
    unseen = set(range(n))
    while unseen:
        start = min(unseen)
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adj[v] - comp)
        unseen -= comp
        blocks.append(tuple(sorted(comp)))
    blocks.sort(key=lambda b: b[0])
    return BlockSplit(tuple(blocks))
