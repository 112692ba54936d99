"""Four-tensor formalism: field/excitation tensors and the Minkowski tensor.

The imaginary-time component convention (x4 = i c t) is mapped onto all-real
4x4 storage: an entry the complex convention writes with a single factor of i
is stored as the real value it multiplies, and every contraction carries the
resulting sign through the diagonal weight eta = diag(1, 1, 1, -1).  The
stored layouts are

    F[i][k] = B_l (cyclic),   F[3][k] = E_k / c,
    H[i][k] = H_l (cyclic),   H[3][k] = D_k / c,

both antisymmetric.  The energy-momentum contraction then reproduces the
3+1 quantities exactly: stress block, Poynting row S[3][k] = S_k / c,
momentum column S[k][3] = c g_k, energy element S[3][3] = w.

Units here are the reduced ones in which the vacuum permittivity and
permeability are 1; the consistent light speed is then c = 1, which is the
default everywhere (c is still carried explicitly in the formulas).  Use
:func:`normalized_from_si` to bring SI fields into these units; energy
density and stress are numerically unchanged by the rescaling, the Poynting
vector maps as S -> S/c_SI and momentum density as g -> c_SI g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import SI, FieldPoint, MomentumTag, PhysicalConstants

__all__ = [
    "ETA",
    "FourVelocity",
    "FieldTensor4",
    "ExcitationTensor4",
    "EMTensor4",
    "FourMomentum",
    "field_tensor_from_EB",
    "excitation_from_DH",
    "excitation_from_constitutive",
    "minkowski_tensor4",
    "divergence_residual",
    "classify_four_momentum",
    "plane_wave_sampler",
    "pulse_four_momentum",
    "normalized_from_si",
]

_REL_TOL = 1e-12

ETA = np.diag([1.0, 1.0, 1.0, -1.0])
ETA.flags.writeable = False


def _mat4(a) -> np.ndarray:
    m = np.array(a, dtype=float).reshape(4, 4)
    m.flags.writeable = False
    return m


def _check_antisymmetric(m: np.ndarray, what: str):
    if not np.array_equal(m, -m.T):
        raise ValueError(f"{what} must be antisymmetric")


def _spatial_axial(m: np.ndarray) -> np.ndarray:
    # inverse of the cyclic rule m[i][k] = v_l
    return np.array([m[1, 2], m[2, 0], m[0, 1]])


def _antisym_from_vectors(row4, spatial_axial, c: float) -> np.ndarray:
    m = np.zeros((4, 4))
    v = np.asarray(spatial_axial, dtype=float)
    m[0, 1], m[1, 2], m[2, 0] = v[2], v[0], v[1]
    m[1, 0], m[2, 1], m[0, 2] = -v[2], -v[0], -v[1]
    m[3, :3] = np.asarray(row4, dtype=float) / c
    m[:3, 3] = -m[3, :3]
    return m


@dataclass(frozen=True)
class FourVelocity:
    """Uniform medium four-velocity, normalized to V.eta.V = -c^2."""

    V: np.ndarray
    c: float = 1.0

    def __post_init__(self):
        v = np.array(self.V, dtype=float).reshape(4)
        v.flags.writeable = False
        object.__setattr__(self, "V", v)
        norm = float(v @ ETA @ v)
        if abs(norm + self.c**2) > _REL_TOL * self.c**2:
            raise ValueError(
                f"four-velocity norm is {norm}, expected {-self.c**2}"
            )

    @classmethod
    def rest(cls, c: float = 1.0) -> "FourVelocity":
        return cls(V=np.array([0.0, 0.0, 0.0, c]), c=c)

    @classmethod
    def from_three_velocity(cls, v3, c: float = 1.0) -> "FourVelocity":
        v3 = np.asarray(v3, dtype=float).reshape(3)
        beta2 = float(v3 @ v3) / c**2
        if beta2 >= 1.0:
            raise ValueError(f"|v| must be < c, got |v|^2/c^2 = {beta2}")
        gamma = 1.0 / math.sqrt(1.0 - beta2)
        return cls(V=np.concatenate([gamma * v3, [gamma * c]]), c=c)


@dataclass(frozen=True)
class FieldTensor4:
    """Antisymmetric field-strength tensor built from (E, B)."""

    M: np.ndarray
    c: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "M", _mat4(self.M))
        _check_antisymmetric(self.M, "field tensor")

    @property
    def E(self) -> np.ndarray:
        return self.c * self.M[3, :3]

    @property
    def B(self) -> np.ndarray:
        return _spatial_axial(self.M)


@dataclass(frozen=True)
class ExcitationTensor4:
    """Antisymmetric excitation tensor built from (D, H)."""

    M: np.ndarray
    c: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "M", _mat4(self.M))
        _check_antisymmetric(self.M, "excitation tensor")

    @property
    def D(self) -> np.ndarray:
        return self.c * self.M[3, :3]

    @property
    def H(self) -> np.ndarray:
        return _spatial_axial(self.M)


@dataclass(frozen=True)
class EMTensor4:
    """Energy-momentum tensor with 3+1 accessors.

    Non-symmetric between the Poynting row and the momentum column whenever
    n differs from 1: the stored entries satisfy S[k][3] / S[3][k] = n^2
    along the propagation direction of a plane wave.
    """

    M: np.ndarray
    c: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "M", _mat4(self.M))

    @property
    def stress(self) -> np.ndarray:
        return self.M[:3, :3]

    @property
    def poynting(self) -> np.ndarray:
        return self.c * self.M[3, :3]

    @property
    def momentum_density(self) -> np.ndarray:
        return self.M[:3, 3] / self.c

    @property
    def energy_density(self) -> float:
        return float(self.M[3, 3])


@dataclass(frozen=True)
class FourMomentum:
    """Momentum 3-vector and energy of a field region (consistent units)."""

    G: np.ndarray
    W: float

    def __post_init__(self):
        g = np.array(self.G, dtype=float).reshape(3)
        g.flags.writeable = False
        object.__setattr__(self, "G", g)


def field_tensor_from_EB(E, B, c: float = 1.0) -> FieldTensor4:
    """Pack E into the fourth row (scaled by 1/c) and B into the spatial block."""
    return FieldTensor4(M=_antisym_from_vectors(E, B, c), c=c)


def excitation_from_DH(D, H, c: float = 1.0) -> ExcitationTensor4:
    """Pack D into the fourth row (scaled by 1/c) and H into the spatial block."""
    return ExcitationTensor4(M=_antisym_from_vectors(D, H, c), c=c)


def excitation_from_constitutive(F: FieldTensor4, V: FourVelocity,
                                 n: float, mu_r: float) -> ExcitationTensor4:
    """Excitation tensor of a medium moving with four-velocity V.

    Solves mu_r H = F - ((n^2-1)/c^2) (F.V (x) V - V (x) F.V) for H, the
    covariant form of the linear constitutive relations.  In the rest frame
    this reduces exactly to D = (n^2/mu_r) E and H = B / mu_r.
    """
    if F.c != V.c:
        raise ValueError("field tensor and four-velocity use different c")
    c = F.c
    W = F.M @ ETA @ V.V  # F contracted once with the four-velocity
    term = np.outer(W, V.V) - np.outer(V.V, W)
    return ExcitationTensor4(M=(F.M - (n * n - 1.0) / c**2 * term) / mu_r, c=c)


def minkowski_tensor4(F: FieldTensor4, H: ExcitationTensor4) -> EMTensor4:
    """Contract field and excitation tensors into the energy-momentum tensor.

    S = F.eta.H^T - (1/4) eta tr(F.eta.H.eta), whose rest-frame pieces are
    the stress tensor, E x H, D x B and (E.D + H.B)/2.
    """
    if F.c != H.c:
        raise ValueError("field and excitation tensors use different c")
    contraction = F.M @ ETA @ H.M.T
    invariant = float(np.sum(F.M * (ETA @ H.M @ ETA)))
    return EMTensor4(M=contraction - 0.25 * ETA * invariant, c=F.c)


def divergence_residual(field_sampler, x, t: float, grid_step: float,
                        c: float = 1.0) -> np.ndarray:
    """Central-difference estimate of the four-divergence of the field tensor.

    ``field_sampler(x, t)`` must return a (FieldTensor4, ExcitationTensor4)
    pair.  The time stencil uses dt = grid_step / c so every direction is
    differenced over the same spacetime step.  For fields solving the
    source-free Maxwell equations in a homogeneous medium the residual
    vanishes; the estimate converges to it at second order in grid_step.
    """
    if grid_step <= 0.0:
        raise ValueError(f"grid_step must be > 0, got {grid_step}")
    x = np.asarray(x, dtype=float).reshape(3)

    def tensor(xx, tt):
        return minkowski_tensor4(*field_sampler(xx, tt)).M

    residual = np.zeros(4)
    for j in range(3):
        step = np.zeros(3)
        step[j] = grid_step
        residual += (tensor(x + step, t) - tensor(x - step, t))[:, j]
    dt = grid_step / c
    residual += (tensor(x, t + dt) - tensor(x, t - dt))[:, 3]
    return residual / (2.0 * grid_step)


def classify_four_momentum(p: FourMomentum, c: float = 1.0,
                           rel_tol: float = 1e-9) -> str:
    """Classify (G, W) as 'spacelike', 'timelike' or 'null'.

    The discriminant is c^2 |G|^2 - W^2, compared against rel_tol times the
    magnitude scale c^2 |G|^2 + W^2.
    """
    g2 = c**2 * float(p.G @ p.G)
    w2 = p.W**2
    disc = g2 - w2
    if abs(disc) <= rel_tol * (g2 + w2):
        return "null"
    return "spacelike" if disc > 0.0 else "timelike"


def plane_wave_sampler(n: float, mu_r: float, omega: float, E0: float,
                       direction=(1.0, 0.0, 0.0), polarization=(0.0, 1.0, 0.0),
                       c: float = 1.0, wavenumber: float | None = None):
    """Sampler for a plane wave in a homogeneous medium, for divergence checks.

    Returns ``sample(x, t) -> (FieldTensor4, ExcitationTensor4)``.  The
    default wavenumber n omega / c satisfies the medium dispersion relation;
    passing any other value produces fields that do not solve the wave
    equation (useful as a negative control).
    """
    d = np.asarray(direction, dtype=float)
    p = np.asarray(polarization, dtype=float)
    d = d / np.linalg.norm(d)
    p = p / np.linalg.norm(p)
    if abs(float(d @ p)) > _REL_TOL:
        raise ValueError("direction and polarization must be orthogonal")
    k = n * omega / c if wavenumber is None else wavenumber
    eps_r = n * n / mu_r
    b_hat = np.cross(d, p)

    def sample(x, t):
        phase = k * float(d @ np.asarray(x, dtype=float)) - omega * t
        E = E0 * math.cos(phase) * p
        B = (n / c) * E0 * math.cos(phase) * b_hat
        F = field_tensor_from_EB(E, B, c)
        Hx = excitation_from_DH(eps_r * E, B / mu_r, c)
        return F, Hx

    return sample


def pulse_four_momentum(S: EMTensor4, volume: float,
                        tag: MomentumTag) -> FourMomentum:
    """Four-momentum of a field-filled region of the given volume.

    Under the Minkowski tag G comes from the tensor's momentum column; the
    Abraham variant substitutes the Poynting vector over c^2 as density.
    """
    if tag is MomentumTag.MINKOWSKI:
        g = S.momentum_density
    else:
        g = S.poynting / S.c**2
    return FourMomentum(G=volume * g, W=volume * S.energy_density)


def normalized_from_si(fp: FieldPoint, constants: PhysicalConstants = SI):
    """Rescale SI fields into the reduced units used by this module.

    Returns (E, D, H, B) with E, H multiplied by sqrt(eps0), sqrt(mu0) and
    D, B divided by the same factors, so that D = eps_r E and B = mu_r H and
    the consistent light speed is 1.
    """
    se = math.sqrt(constants.eps0)
    sm = math.sqrt(constants.mu0)
    return se * fp.E, fp.D / se, sm * fp.H, fp.B / sm
