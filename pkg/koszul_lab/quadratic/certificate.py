"""
Finite-degree Koszulness certificate.

For every degree n ≤ n_max and split point a in 2..n-2 the triple

    X = ⋂_{i ≤ a-2} V^i R V^{n-2-i}     (= D_a ⊗ V^{n-a})
    Y = V^{a-1} R V^{n-a-1}
    Z = Σ_{i ≥ a} V^i R V^{n-2-i}       (= V^a ⊗ W_{n-a})

must be distributive. Slot-graded presentations are checked one weight vector
at a time. The result is a statement about degrees ≤ n_max only.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

from ..errors import PresentationError
from ..linear.lattice import median_pair
from ..utils.logger import emit
from .dual import convolution_vanishes, dual_dims, duality_convolution
from .presentation import K3_LIKE, Presentation
from .relations import RelationLattice, Weight, graded_dims

MODES = ("reduced", "decreasing", "full", "unrestricted")


@dataclass
class CellResult:
    """One (n, a, weight) triple and the dimensions of its median identity."""
    n: int
    a: int
    weight: Weight
    x: int
    y: int
    z: int
    median_left: int
    median_right: int
    passed: bool


@dataclass
class CertificateResult:
    presentation: str
    mode: str
    n_max: int
    cells: List[CellResult] = field(default_factory=list)
    primal_dims: List[int] = field(default_factory=list)
    dual_dims: List[int] = field(default_factory=list)
    convolution: List[int] = field(default_factory=list)

    @property
    def cells_pass(self) -> bool:
        return all(cell.passed for cell in self.cells)

    @property
    def convolution_pass(self) -> bool:
        return convolution_vanishes(self.convolution)

    @property
    def passed(self) -> bool:
        return self.cells_pass and self.convolution_pass

    def failures(self) -> List[CellResult]:
        return [cell for cell in self.cells if not cell.passed]

    def summary(self) -> str:
        if self.passed:
            return f"distributivity verified through degree {self.n_max}"
        return f"certificate failed: {len(self.failures())} triple(s), convolution {self.convolution}"


def default_mode(presentation: Presentation, lattice: RelationLattice) -> str:
    if not lattice.graded:
        return "unrestricted"
    if K3_LIKE in presentation.flags:
        return "reduced"
    return "full"


def cell_weights(lattice: RelationLattice, n: int, mode: str) -> List[Weight]:
    """Weight vectors tested in degree n."""
    if mode == "unrestricted":
        return [None]
    if not lattice.graded:
        raise PresentationError(f"mode {mode!r} needs a presentation graded by slot weights")
    weights = lattice.presentation.distinct_weights()
    if mode == "full":
        return list(product(weights, repeat=n))
    if mode == "decreasing":
        return [w for w in product(weights, repeat=n)
                if all(w[i] >= w[i + 1] for i in range(n - 1))]
    if mode == "reduced":
        top, bottom = weights[-1], weights[0]
        vectors = [(top,) * n]
        if bottom < top:
            vectors.append((top,) * (n - 1) + (bottom,))
        return vectors
    raise ValueError(f"unknown certificate mode {mode!r}; expected one of {MODES}")


def cell_positions(n: int, mode: str) -> List[int]:
    if n < 4:
        return []
    if mode == "reduced":
        return [2]
    return list(range(2, n - 1))


def check_cell(lattice: RelationLattice, n: int, a: int, weight: Weight = None) -> CellResult:
    x = lattice.prefix_dual(a, n, weight)
    y = lattice.piece(a - 1, n, weight)
    z = lattice.suffix_span(a, n, weight)
    pair = median_pair(x, y, z)
    return CellResult(n, a, weight, x.dim, y.dim, z.dim,
                      pair.left.dim, pair.right.dim, pair.distributive)


def koszul_certificate(presentation: Presentation, n_max: int, mode: Optional[str] = None,
                       lattice: Optional[RelationLattice] = None) -> CertificateResult:
    """
    Test every distributive triple through degree n_max and the Hilbert duality convolution.

    Failures are recorded in the result, never raised.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    lattice = lattice or RelationLattice(presentation)
    mode = mode or default_mode(presentation, lattice)
    if mode not in MODES:
        raise ValueError(f"unknown certificate mode {mode!r}; expected one of {MODES}")
    result = CertificateResult(presentation.name, mode, n_max)
    for n in range(4, n_max + 1):
        for weight in cell_weights(lattice, n, mode):
            for a in cell_positions(n, mode):
                cell = check_cell(lattice, n, a, weight)
                result.cells.append(cell)
                status = "pass" if cell.passed else "FAIL"
                emit("KOSZUL", f"n={n} a={a} weight={weight}: "
                               f"X={cell.x} Y={cell.y} Z={cell.z} "
                               f"median {cell.median_left}/{cell.median_right} {status}")
    result.primal_dims = graded_dims(presentation, n_max, lattice)
    result.dual_dims = dual_dims(presentation, n_max, lattice)
    result.convolution = duality_convolution(result.primal_dims, result.dual_dims)
    emit("KOSZUL", result.summary())
    return result


def cross_check_reduction(presentation: Presentation, degrees: Tuple[int, ...] = (4, 5),
                          lattice: Optional[RelationLattice] = None) -> Dict[int, Tuple[bool, bool]]:
    """
    Reduced-mode and full-mode verdicts per degree.

    The reduction is sound for a presentation when both verdicts agree in every degree.
    """
    lattice = lattice or RelationLattice(presentation)
    verdicts = {}
    for n in degrees:
        per_mode = []
        for mode in ("reduced", "full"):
            cells = [check_cell(lattice, n, a, w)
                     for w in cell_weights(lattice, n, mode)
                     for a in cell_positions(n, mode)]
            per_mode.append(all(c.passed for c in cells))
        verdicts[n] = (per_mode[0], per_mode[1])
    return verdicts
