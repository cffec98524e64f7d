"""Kinematics of photons guided by a rectangular waveguide.

A mode (r, s) of a guide with transverse dimensions b1 > b2 carries the fixed
transverse wavenumbers k1 = r pi / b1, k2 = s pi / b2.  The cutoff frequency
omega_c = sqrt(k1^2 + k2^2) acts as a rest mass m for motion along the guide:

    E^2 = k3^2 + m^2

and the group/phase velocities, guide wavelength and boost behaviour all
follow the massive-particle pattern.  The null photon 4-momentum splits into
a time-like "active" part k_L = (E; p) and a space-like "frozen" part
k_T = m eta with eta.eta = -1 and k_L.k_T = 0.

Everything is in natural units internally; the SI helpers at the bottom take
guide dimensions in meters and return hertz / meters via the exact speed of
light.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import AtOrBelowCutoff, InvalidIndex, InvalidMode

C_LIGHT = 299_792_458.0  # m/s, exact

_METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class FourMomentum:
    """(t; x, y, z) with metric diag(1, -1, -1, -1)."""

    t: float
    x: float
    y: float
    z: float

    @classmethod
    def from_spatial(cls, t: float, spatial) -> "FourMomentum":
        spatial = np.asarray(spatial, dtype=float)
        return cls(float(t), float(spatial[0]), float(spatial[1]), float(spatial[2]))

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def as_array(self) -> np.ndarray:
        return np.array([self.t, self.x, self.y, self.z])

    def mdot(self, other: "FourMomentum") -> float:
        return float(self.as_array() @ _METRIC @ other.as_array())

    def norm2(self) -> float:
        return self.mdot(self)

    def __add__(self, other: "FourMomentum") -> "FourMomentum":
        return FourMomentum(self.t + other.t, self.x + other.x, self.y + other.y, self.z + other.z)


def boost(v: FourMomentum, chi: float) -> FourMomentum:
    """Boost by rapidity chi along the guide axis (the z components)."""
    ch, sh = math.cosh(chi), math.sinh(chi)
    return FourMomentum(v.t * ch - v.z * sh, v.x, v.y, v.z * ch - v.t * sh)


@dataclass(frozen=True)
class WaveguideSpec:
    """Transverse dimensions of a rectangular guide; b1 > b2 by convention."""

    b1: float
    b2: float

    def __post_init__(self):
        if not (self.b1 > 0.0 and self.b2 > 0.0):
            raise InvalidMode(f"guide dimensions must be positive, got b1={self.b1}, b2={self.b2}")
        if self.b1 < self.b2:
            warnings.warn("swapping b1 and b2 to keep b1 > b2", stacklevel=3)
            b1, b2 = self.b2, self.b1
            object.__setattr__(self, "b1", b1)
            object.__setattr__(self, "b2", b2)


@dataclass(frozen=True)
class WaveguideMode:
    """A (r, s) eigenmode of a guide; r >= 1, s >= 0."""

    spec: WaveguideSpec
    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 0:
            raise InvalidIndex(f"mode indices need r >= 1, s >= 0, got (r, s) = ({self.r}, {self.s})")

    @property
    def k1(self) -> float:
        return self.r * math.pi / self.spec.b1

    @property
    def k2(self) -> float:
        return self.s * math.pi / self.spec.b2

    @property
    def cutoff(self) -> float:
        return math.hypot(self.k1, self.k2)

    @property
    def mass(self) -> float:
        """Apparent rest mass of guided photons: equal to the cutoff frequency."""
        return self.cutoff

    @property
    def compton_wavelength(self) -> float:
        """Equivalent Compton wavelength 1/m: the localization precision bound."""
        return 1.0 / self.mass


def mode(spec: WaveguideSpec, r: int, s: int) -> WaveguideMode:
    return WaveguideMode(spec, r, s)


def dispersion(md: WaveguideMode, k3: float) -> tuple[float, float]:
    """(E, |p|) for axial wavenumber k3 >= 0: E = sqrt(k3^2 + m^2)."""
    if k3 < 0.0:
        raise InvalidMode(f"axial wavenumber must be >= 0, got {k3}")
    m = md.mass
    return math.hypot(k3, m), k3


@dataclass(frozen=True)
class Propagating:
    k3: float


@dataclass(frozen=True)
class Evanescent:
    """Below-cutoff outcome; decay_constant = sqrt(m^2 - E^2) is the axial
    exponential falloff rate of the evanescent field."""

    decay_constant: float


def axial_wavenumber(md: WaveguideMode, energy: float):
    """Invert the dispersion relation: Propagating(k3) or Evanescent(kappa)."""
    if energy < 0.0:
        raise InvalidMode(f"energy must be >= 0, got {energy}")
    m = md.mass
    if energy >= m:
        return Propagating(math.sqrt(energy * energy - m * m))
    return Evanescent(math.sqrt(m * m - energy * energy))


def velocities(md: WaveguideMode, w: float) -> tuple[float, float, float]:
    """(v_g, v_p, lambda_g) at frequency w > cutoff.

    v_g = sqrt(1 - (omega_c/w)^2), v_p = 1/v_g (so v_g v_p = 1), and the
    guide wavelength is the free-space wavelength stretched by 1/v_g.
    """
    wc = md.cutoff
    if w <= wc:
        raise AtOrBelowCutoff(f"frequency {w} is at or below cutoff {wc}")
    vg = math.sqrt(1.0 - (wc / w) ** 2)
    vp = 1.0 / vg
    lambda_g = (2.0 * math.pi / w) / vg
    return vg, vp, lambda_g


@dataclass(frozen=True)
class DecomposedMomentum:
    """Orthogonal split k = k_L + k_T of the null guided 4-momentum.

    k_L = (E; p) is time-like with k_L.k_L = m^2; k_T = (0; k_T) = m eta is
    space-like with eta.eta = -1 and k_L.k_T = 0.
    """

    k_mu: FourMomentum
    k_L: FourMomentum
    k_T: FourMomentum
    eta: FourMomentum


def decompose(md: WaveguideMode, k3: float, azimuth: float = 0.0) -> DecomposedMomentum:
    """Build the orthogonal 4-momentum decomposition in the guide-aligned frame.

    The guide axis is the z direction; ``azimuth`` orients the frozen
    transverse momentum within the x-y plane.  |k_T| = m exactly.
    """
    energy, p = dispersion(md, k3)
    m = md.mass
    n = np.array([math.cos(azimuth), math.sin(azimuth), 0.0])
    eta = FourMomentum.from_spatial(0.0, n)
    k_T = FourMomentum.from_spatial(0.0, m * n)
    k_L = FourMomentum(energy, 0.0, 0.0, p)
    return DecomposedMomentum(k_L + k_T, k_L, k_T, eta)


def plane_wave_pair(md: WaveguideMode, k3: float, azimuth: float = 0.0) -> tuple[FourMomentum, FourMomentum]:
    """The two null plane waves whose superposition is the guided field.

    Both share the frequency E of the guided photon; their spatial parts are
    +-k_T + p, so each is null and their sum squares to 4 m^2.
    """
    dec = decompose(md, k3, azimuth)
    energy = dec.k_L.t
    p_vec = dec.k_L.spatial
    t_vec = dec.k_T.spatial
    return (
        FourMomentum.from_spatial(energy, t_vec + p_vec),
        FourMomentum.from_spatial(energy, -t_vec + p_vec),
    )


def rest_frame_rapidity(md: WaveguideMode, k3: float) -> float:
    """Rapidity artanh(v_g) of the boost that brings the photon to E' = m."""
    energy, p = dispersion(md, k3)
    return math.atanh(p / energy)


@dataclass(frozen=True)
class TunnelingVerdict:
    propagates: bool
    apparent_mass: float
    new_cutoff: float
    critical_rapidity: float | None  # smallest |chi| with E'(chi) below the new cutoff


def tunneling_predicate(old_mode: WaveguideMode, k3: float, new_mode: WaveguideMode) -> TunnelingVerdict:
    """Can the photon always propagate in the new guide, in every inertial frame?

    The boosted frequency E'(chi) = E cosh(chi) - p sinh(chi) attains its
    minimum, the apparent mass m_old, at chi = artanh(v_g).  If the new
    guide's cutoff exceeds m_old there is a frame in which the photon is
    below cutoff and must tunnel; the critical rapidity is found by bisection
    on the monotone branch (tolerance 1e-12 in chi).
    """
    m_old = old_mode.mass
    wc_new = new_mode.cutoff
    energy, p = dispersion(old_mode, k3)
    if wc_new <= m_old:
        return TunnelingVerdict(True, m_old, wc_new, None)
    if energy < wc_new:
        return TunnelingVerdict(False, m_old, wc_new, 0.0)

    def boosted_energy(chi):
        return energy * math.cosh(chi) - p * math.sinh(chi)

    lo, hi = 0.0, rest_frame_rapidity(old_mode, k3)
    # E' decreases from E >= wc_new down to m_old < wc_new on [lo, hi].
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if boosted_energy(mid) > wc_new:
            lo = mid
        else:
            hi = mid
    return TunnelingVerdict(False, m_old, wc_new, 0.5 * (lo + hi))


# --- SI helpers -------------------------------------------------------------

def cutoff_frequency_hz(b1_m: float, b2_m: float, r: int, s: int) -> float:
    """Cutoff frequency in hertz for guide dimensions given in meters."""
    md = mode(WaveguideSpec(b1_m, b2_m), r, s)
    return md.cutoff * C_LIGHT / (2.0 * math.pi)


def compton_wavelength_m(b1_m: float, b2_m: float, r: int, s: int) -> float:
    """Equivalent Compton wavelength in meters for an SI-dimensioned guide."""
    return mode(WaveguideSpec(b1_m, b2_m), r, s).compton_wavelength
