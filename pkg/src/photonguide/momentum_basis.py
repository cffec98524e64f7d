"""Polarization frames and momentum-space photon wavefunctions.

Natural units (hbar = c = 1) throughout: a photon with wave vector k has
angular frequency omega = |k|.  The central object is the rotated orthonormal
triad e1(k), e2(k), e3(k) = k/|k|; the complex helicity polarization vectors
and the 6-component spinors are built on top of it.

Phase convention
----------------
The orthonormality/completeness relations fix the polarization vectors only
up to phases.  We adopt the convention

    eps(k, 0)  = k/|k|
    eps(k, +1) = -(e1 + i e2)/sqrt(2)
    eps(k, -1) = +(e1 - i e2)/sqrt(2)

which is smooth everywhere except on the negative k3 half-axis (the
"convention seam").  On the axis itself the triad is defined as the limit
along p = (d, 0, p3), d -> 0+: the identity triad for p3 > 0, and
e1 = (-1, 0, 0), e2 = (0, 1, 0), e3 = (0, 0, -1) for p3 < 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import MixedComponentCount, ZeroMomentum

HELICITIES = (-1, 0, +1)

SQRT2 = np.sqrt(2.0)


def omega(k: np.ndarray) -> float:
    """Photon frequency |k| in natural units."""
    return float(np.linalg.norm(k))


def rotated_triad(p) -> np.ndarray:
    """Right-handed orthonormal triad aligned with p, as rows (e1, e2, e3).

    The closed form is algebraically equivalent to the textbook quotient
    expression with denominators |p| (p1^2 + p2^2), but rewritten through
    q = 1 + p3/|p| so that it stays accurate arbitrarily close to the axis.
    For p3 < 0, q is computed as (p1^2 + p2^2)/(|p|^2 (1 - p3/|p|)) to avoid
    the cancellation in 1 + p3/|p|.
    """
    p = np.asarray(p, dtype=float)
    r = float(np.linalg.norm(p))
    if r == 0.0:
        raise ZeroMomentum("polarization triad undefined for p = 0")
    u1, u2, u3 = p / r
    rho2 = u1 * u1 + u2 * u2
    if rho2 == 0.0:
        s = 1.0 if u3 > 0.0 else -1.0
        # Axis value by the documented limit convention.
        return np.array([[s, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, s]])
    q = 1.0 + u3 if u3 >= 0.0 else rho2 / (1.0 - u3)
    e1 = np.array([1.0 - u1 * u1 / q, -u1 * u2 / q, -u1])
    e2 = np.array([-u1 * u2 / q, 1.0 - u2 * u2 / q, -u2])
    e3 = np.array([u1, u2, u3])
    return np.array([e1, e2, e3])


def helicity_polarization(k, lam: int) -> np.ndarray:
    """Unit polarization vector eps(k, lam) for lam in {-1, 0, +1}.

    Satisfies eps(k,0) = k/|k| and the curl eigenvector identity
    khat x eps(k, lam) = -i lam eps(k, lam) for lam = +-1.
    """
    if lam not in HELICITIES:
        raise ValueError(f"helicity must be -1, 0 or +1, got {lam}")
    e1, e2, e3 = rotated_triad(k)
    if lam == 0:
        return e3.astype(complex)
    return -lam * (e1 + 1j * lam * e2) / SQRT2


def polarization_triad(k) -> np.ndarray:
    """All three polarization vectors, rows ordered lam = -1, 0, +1."""
    return np.array([helicity_polarization(k, lam) for lam in HELICITIES])


def spinor_f(k, lam: int) -> np.ndarray:
    """6-component spinor (eps, lam*eps)/sqrt(1 + lam^2); unit norm."""
    eps = helicity_polarization(k, lam)
    return np.concatenate([eps, lam * eps]) / np.sqrt(1.0 + lam * lam)


def spinor_g(k, lam: int) -> np.ndarray:
    """6-component spinor (lam*eps, eps)/sqrt(1 + lam^2); unit norm."""
    eps = helicity_polarization(k, lam)
    return np.concatenate([lam * eps, eps]) / np.sqrt(1.0 + lam * lam)


@dataclass(frozen=True)
class MomentumWavefunction:
    """A momentum-space wavefunction k -> C^n with a declared component count.

    Evaluation must be deterministic and smooth away from k = 0 and the
    convention seam; that is the caller's responsibility for hand-rolled
    rules, and guaranteed for the factory functions in this module.
    """

    fn: Callable[[np.ndarray], np.ndarray]
    ncomponents: int

    def __call__(self, k: np.ndarray) -> np.ndarray:
        return np.asarray(self.fn(np.asarray(k, dtype=float)), dtype=complex)


def localized_wavefunction(x0, lam: int, amplitude: complex = 1.0) -> MomentumWavefunction:
    """3-component wavefunction sqrt(omega) eps(k, lam) exp(-i x0.k).

    This family is the eigenfunction family of the commuting-component
    position operator, with eigenvalue x0.  The overall dimensionless
    amplitude is fixed to 1 by default; eigenvalue properties do not
    depend on it.
    """
    x0 = np.asarray(x0, dtype=float)

    def fn(k):
        return amplitude * np.sqrt(omega(k)) * helicity_polarization(k, lam) * np.exp(-1j * x0 @ k)

    return MomentumWavefunction(fn, 3)


def localized_spinor_wavefunction(x0, lam: int, branch: str = "plus") -> MomentumWavefunction:
    """6-component analogue of :func:`localized_wavefunction`.

    branch "plus" uses sqrt(omega) f(k, lam); branch "minus" uses the
    reflected spinor sqrt(omega) g(-k, lam), matching the frame in which the
    negative-frequency position operator variant is flat.
    """
    x0 = np.asarray(x0, dtype=float)
    if branch not in ("plus", "minus"):
        raise ValueError(f"branch must be 'plus' or 'minus', got {branch!r}")

    def fn(k):
        u = spinor_f(k, lam) if branch == "plus" else spinor_g(-k, lam)
        return np.sqrt(omega(k)) * u * np.exp(-1j * x0 @ k)

    return MomentumWavefunction(fn, 6)


def scalar_product(phi1: MomentumWavefunction, phi2: MomentumWavefunction, points) -> complex:
    """Momentum-space scalar product sum_k (1/omega) phi1(k)^dag phi2(k).

    ``points`` is any iterable of nonzero k vectors (a discrete lattice).
    Conjugate-symmetric and positive definite on nonzero wavefunctions.
    """
    if phi1.ncomponents != phi2.ncomponents:
        raise MixedComponentCount(
            f"cannot pair {phi1.ncomponents}- and {phi2.ncomponents}-component wavefunctions"
        )
    total = 0.0 + 0.0j
    for k in points:
        k = np.asarray(k, dtype=float)
        w = omega(k)
        if w == 0.0:
            raise ZeroMomentum("scalar-product lattice must exclude k = 0")
        total += np.vdot(phi1(k), phi2(k)) / w
    return complex(total)
