"""Test-operator constructors: structured matrices and 1-D Schrödinger
discretizations with complex potentials.

The differential operators are second-order central finite differences on
[-L, L] with homogeneous Dirichlet truncation; potentials are evaluated at
the interior grid nodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadParameter
from .linalg import as_matrix

# grid defaults: confining potentials need little room, decaying potentials
# need a wide box so the truncation energy (pi/2L)^2 stays small
DEFAULT_HARMONIC_GRID = (12.0, 600)
DEFAULT_DECAYING_GRID = (40.0, 1200)


def jordan_block(n: int, lam: complex = 0.0) -> np.ndarray:
    if n < 1:
        raise BadParameter("jordan_block needs n >= 1")
    return lam * np.eye(n, dtype=complex) + np.diag(np.ones(n - 1, dtype=complex), 1)


def normal_from_eigs(eigs) -> np.ndarray:
    eigs = np.asarray(eigs, dtype=complex).ravel()
    if len(eigs) < 1:
        raise BadParameter("normal_from_eigs needs at least one eigenvalue")
    return np.diag(eigs)


def random_dense(seed: int, n: int) -> np.ndarray:
    """Seeded dense matrix with i.i.d. complex standard normal entries."""
    if n < 1:
        raise BadParameter("random_dense needs n >= 1")
    rng = np.random.default_rng(seed)
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)


def random_normal_matrix(seed: int, n: int) -> np.ndarray:
    """Seeded normal matrix: random eigenvalues conjugated by a random unitary."""
    rng = np.random.default_rng(seed)
    eigs = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, _ = np.linalg.qr(g)
    return q @ np.diag(eigs) @ q.conj().T


@dataclass(frozen=True)
class GridSpec:
    """Uniform Dirichlet grid on [-L, L] with N interior nodes."""

    L: float
    N: int
    bc: str = "dirichlet"

    def __post_init__(self):
        if self.L <= 0:
            raise BadParameter("grid half-width L must be positive")
        if self.N < 8:
            raise BadParameter("grid needs N >= 8 interior nodes")
        if self.bc != "dirichlet":
            raise BadParameter(f"unsupported boundary condition {self.bc!r}")

    @property
    def h(self) -> float:
        return 2 * self.L / (self.N + 1)

    def nodes(self) -> np.ndarray:
        return -self.L + self.h * np.arange(1, self.N + 1)


@dataclass(frozen=True)
class PotentialSpec:
    """A potential V(x) plus bookkeeping about its qualitative features.

    metadata holds documentation-only tags such as 'imag_nonconstant' (the
    imaginary part takes at least two values) and 'vanishing_at_infinity'.
    """

    kind: str
    params: tuple = ()
    metadata: tuple = ()

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "harmonic":
            (c,) = self.params
            return c * x**2
        if self.kind == "bump_scaled":
            (s,) = self.params
            return s * bump_profile(x)
        if self.kind == "gaussian":
            c, depth = self.params
            return c * depth * np.exp(-(x**2))
        if self.kind == "custom":
            xs, re, im = self.params
            return np.interp(x, xs, re) + 1j * np.interp(x, xs, im)
        raise BadParameter(f"unknown potential kind {self.kind!r}")


def bump_profile(x) -> np.ndarray:
    """Smooth compactly supported bump: exp(-1/(1-x^2)) on (-1, 1), else 0."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    inside = np.abs(x) < 1.0
    xi = x[inside]
    out[inside] = np.exp(-1.0 / (1.0 - xi**2))
    return out


def harmonic_potential(c: complex) -> PotentialSpec:
    c = complex(c)
    if c.real <= 0:
        raise BadParameter("harmonic potential needs Re(c) > 0")
    return PotentialSpec(kind="harmonic", params=(c,),
                         metadata=("imag_nonconstant",) if c.imag != 0 else ())


def bump_potential(s: complex) -> PotentialSpec:
    """Scaled smooth bump s * W, W = exp(-1/(1-x^2)) on (-1, 1)."""
    tags = ["vanishing_at_infinity"]
    if complex(s).imag != 0:
        tags.append("imag_nonconstant")
    return PotentialSpec(kind="bump_scaled", params=(complex(s),),
                         metadata=tuple(tags))


def gaussian_potential(c: complex, depth: float = 1.0) -> PotentialSpec:
    tags = ["vanishing_at_infinity"]
    if complex(c).imag != 0:
        tags.append("imag_nonconstant")
    return PotentialSpec(kind="gaussian", params=(complex(c), float(depth)),
                         metadata=tuple(tags))


def custom_potential(xs, values) -> PotentialSpec:
    xs = np.asarray(xs, dtype=float)
    vals = np.asarray(values, dtype=complex)
    if xs.ndim != 1 or xs.shape != vals.shape or len(xs) < 2:
        raise BadParameter("custom potential needs matching 1-D sample tables")
    if not np.all(np.isfinite(vals)):
        raise BadParameter("custom potential values must be finite")
    order = np.argsort(xs)
    return PotentialSpec(kind="custom",
                         params=(tuple(xs[order]), tuple(vals.real[order]),
                                 tuple(vals.imag[order])))


def schrodinger_1d(potential: PotentialSpec, grid: GridSpec) -> np.ndarray:
    """Finite-difference Dirichlet discretization of -d^2/dx^2 + V on [-L, L]."""
    x = grid.nodes()
    v = np.asarray(potential(x), dtype=complex)
    if not np.all(np.isfinite(v)):
        raise BadParameter("potential is not finite on the grid")
    h2 = grid.h**2
    n = grid.N
    a = np.zeros((n, n), dtype=complex)
    idx = np.arange(n)
    a[idx, idx] = 2.0 / h2 + v
    a[idx[:-1], idx[:-1] + 1] = -1.0 / h2
    a[idx[:-1] + 1, idx[:-1]] = -1.0 / h2
    return a


def free_laplacian_eigs(grid: GridSpec) -> np.ndarray:
    """Exact eigenvalues of the discretized -d^2/dx^2: (4/h^2) sin^2(k pi / (2(N+1)))."""
    k = np.arange(1, grid.N + 1)
    return (4.0 / grid.h**2) * np.sin(k * math.pi / (2 * (grid.N + 1))) ** 2


def harmonic_oscillator(c: complex, grid: GridSpec | None = None) -> np.ndarray:
    """Discretized -d^2/dx^2 + c x^2 with Re(c) > 0."""
    c = complex(c)
    if c.real <= 0:
        raise BadParameter("harmonic oscillator needs Re(c) > 0")
    if grid is None:
        grid = GridSpec(*DEFAULT_HARMONIC_GRID)
    return schrodinger_1d(harmonic_potential(c), grid)


def bump_schrodinger(s: complex, grid: GridSpec | None = None) -> np.ndarray:
    if grid is None:
        grid = GridSpec(*DEFAULT_DECAYING_GRID)
    return schrodinger_1d(bump_potential(s), grid)


# ----------------------------------------------------------------- registry

def _parse_complex(txt: str) -> complex:
    return complex(txt.replace(" ", "").replace("i", "j"))


def _build_jordan(arg: str) -> np.ndarray:
    parts = arg.split(",") if arg else ["2"]
    n = int(parts[0])
    lam = _parse_complex(parts[1]) if len(parts) > 1 else 0.0
    return jordan_block(n, lam)


def _build_normal(arg: str) -> np.ndarray:
    if not arg:
        raise BadParameter("normal:<e1>,<e2>,... needs eigenvalues")
    return normal_from_eigs([_parse_complex(p) for p in arg.split(",")])


def _build_random(arg: str) -> np.ndarray:
    parts = arg.split(",") if arg else ["0", "8"]
    seed = int(parts[0])
    n = int(parts[1]) if len(parts) > 1 else 8
    return random_dense(seed, n)


def _build_harmonic(arg: str) -> np.ndarray:
    parts = arg.split(",") if arg else ["1"]
    c = _parse_complex(parts[0])
    grid = GridSpec(float(parts[1]), int(parts[2])) if len(parts) > 2 else None
    return harmonic_oscillator(c, grid)


def _build_bump(arg: str) -> np.ndarray:
    parts = arg.split(",") if arg else ["1+1j"]
    s = _parse_complex(parts[0])
    grid = GridSpec(float(parts[1]), int(parts[2])) if len(parts) > 2 else None
    return bump_schrodinger(s, grid)


def _build_triangle(arg: str) -> np.ndarray:
    return normal_from_eigs([0.0, 1.0 + 1.0j, -1.0 + 1.0j])


def _build_tangent_disk(arg: str) -> np.ndarray:
    return np.array([[1j, 2.0], [0.0, 1j]], dtype=complex)


GALLERY = {
    "jordan": (_build_jordan,
               "jordan:N[,LAM] - Jordan block; numerical range is the disk "
               "of radius cos(pi/(N+1)) around LAM"),
    "normal": (_build_normal,
               "normal:E1,E2,... - diagonal matrix; range is the convex hull "
               "of the eigenvalues"),
    "random": (_build_random,
               "random:SEED[,N] - seeded dense complex Gaussian matrix"),
    "triangle": (_build_triangle,
                 "triangle - diag(0, 1+1j, -1+1j); a corner at the origin with "
                 "the lower edges meeting at slopes +-1"),
    "tangentdisk": (_build_tangent_disk,
                    "tangentdisk - disk of radius 1 centered at 1j, tangent to "
                    "the real axis at 0"),
    "harmonic": (_build_harmonic,
                 "harmonic:C[,L,N] - oscillator -d2/dx2 + C x^2, Re C > 0 "
                 f"(default grid L={DEFAULT_HARMONIC_GRID[0]}, "
                 f"N={DEFAULT_HARMONIC_GRID[1]})"),
    "bump": (_build_bump,
             "bump:S[,L,N] - -d2/dx2 + S W with a smooth compactly supported "
             f"bump W (default grid L={DEFAULT_DECAYING_GRID[0]}, "
             f"N={DEFAULT_DECAYING_GRID[1]})"),
}


def build_gallery(spec: str) -> np.ndarray:
    """Construct a gallery operator from 'name' or 'name:params'."""
    name, _, arg = spec.partition(":")
    name = name.strip().lower()
    if name not in GALLERY:
        raise BadParameter(
            f"unknown gallery operator {name!r}; known: {', '.join(sorted(GALLERY))}")
    try:
        return as_matrix(GALLERY[name][0](arg.strip()))
    except (ValueError, TypeError) as exc:
        raise BadParameter(f"bad gallery parameters in {spec!r}: {exc}")


def build_from_config(obj: dict) -> np.ndarray:
    """Construct an operator from a config mapping.

    Supported forms: {"operator": "schrodinger1d", "potential": {...},
    "grid": {"L": .., "N": ..}} and {"operator": "gallery", "spec": "name:args"}.
    """
    op = obj.get("operator", "")
    if op == "gallery":
        return build_gallery(obj["spec"])
    if op == "schrodinger1d":
        pot = obj.get("potential", {})
        kind = pot.get("kind")
        if kind == "harmonic":
            spec = harmonic_potential(_cplx(pot["c"]))
        elif kind == "bump_scaled":
            spec = bump_potential(_cplx(pot["s"]))
        elif kind == "gaussian":
            spec = gaussian_potential(_cplx(pot["c"]), float(pot.get("depth", 1.0)))
        elif kind == "custom":
            spec = custom_potential(pot["x"], [_cplx(v) for v in pot["values"]])
        else:
            raise BadParameter(f"unknown potential kind {kind!r}")
        g = obj.get("grid", {})
        grid = GridSpec(float(g.get("L", DEFAULT_DECAYING_GRID[0])),
                        int(g.get("N", DEFAULT_DECAYING_GRID[1])))
        return schrodinger_1d(spec, grid)
    raise BadParameter(f"unknown operator config {op!r}")


def _cplx(v) -> complex:
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, str):
        return _parse_complex(v)
    return complex(v)


def gallery_listing() -> list[str]:
    return [f"{name:12s} {desc}" for name, (_, desc) in sorted(GALLERY.items())]
