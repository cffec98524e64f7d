"""First-quantized photon position operators as numerical differential operators.

The operator acting on a momentum-space wavefunction phi is

    (x_j phi)(k) = i (d/dk_j - k_j / (2 omega^2)) phi(k)
                   - i sum_lam (d/dk_j u(k, lam)) u(k, lam)^dag phi(k)

where u runs over an orthonormal frame: the polarization vectors for the
3-component variant, the f spinors for the positive-frequency 6-component
variant, and the reflected g spinors g(-k, lam) for the negative-frequency
one.  The "naive" variant is i d/dk_j alone.  All derivatives are central
differences; nothing here relies on a closed form for the frame gradient.

The -k/(2 omega^2) term compensates the k-gradient of the sqrt(omega)
normalization carried by the localized wavefunctions; dropping it (see the
``include_weight_term`` flag) breaks the eigenvalue property by a residual of
order |k|/(2 omega^2), which the verification suite uses as a negative
control.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from . import momentum_basis as mb
from .errors import ComponentMismatch, StencilCrossesSingularity


@dataclass(frozen=True)
class Scheme:
    """Central-difference scheme: step h > 0, accuracy order 2 or 4."""

    h: float = 1e-4
    order: int = 2

    def __post_init__(self):
        if not (self.h > 0.0 and math.isfinite(self.h)):
            raise ValueError(f"step must be positive and finite, got {self.h}")
        if self.order not in (2, 4):
            raise ValueError(f"order must be 2 or 4, got {self.order}")


class PositionKind(Enum):
    NAIVE = "naive"
    VECTOR = "vector"
    SPINOR_PLUS = "spinor_plus"
    SPINOR_MINUS = "spinor_minus"


_COMPONENTS = {
    PositionKind.NAIVE: None,  # acts on either component count
    PositionKind.VECTOR: 3,
    PositionKind.SPINOR_PLUS: 6,
    PositionKind.SPINOR_MINUS: 6,
}

_AXES = np.eye(3)


def singular_distance(k) -> float:
    """Distance from k to the singular set: the origin plus the seam half-axis
    {(0, 0, t) : t < 0} where the phase convention is discontinuous."""
    k = np.asarray(k, dtype=float)
    rho = math.hypot(k[0], k[1])
    return rho if k[2] <= 0.0 else float(np.linalg.norm(k))


def _check_stencil(k, scheme: Scheme) -> None:
    # Points closer than 10 h to the seam are rejected outright: a phase seam
    # inside the stencil corrupts the difference quotients invisibly.
    reach = scheme.h if scheme.order == 2 else 2.0 * scheme.h
    if singular_distance(k) < 10.0 * scheme.h + reach:
        raise StencilCrossesSingularity(
            f"stencil at k={np.asarray(k, float)} with h={scheme.h} reaches the k=0/seam region"
        )


def grad_k(fn: Callable[[np.ndarray], np.ndarray], k, scheme: Scheme) -> np.ndarray:
    """Central-difference gradient of a vector-valued function of k.

    Returns an array of shape (3, n): row j is d(fn)/dk_j.  Exact on linear
    functions; error O(h^2) or O(h^4) depending on the scheme order.
    """
    k = np.asarray(k, dtype=float)
    _check_stencil(k, scheme)
    h = scheme.h
    rows = []
    for j in range(3):
        e = _AXES[j]
        if scheme.order == 2:
            d = (np.asarray(fn(k + h * e)) - np.asarray(fn(k - h * e))) / (2.0 * h)
        else:
            d = (
                -np.asarray(fn(k + 2 * h * e))
                + 8.0 * np.asarray(fn(k + h * e))
                - 8.0 * np.asarray(fn(k - h * e))
                + np.asarray(fn(k - 2 * h * e))
            ) / (12.0 * h)
        rows.append(d)
    return np.array(rows)


def frame_functions(kind: PositionKind) -> Sequence[Callable[[np.ndarray], np.ndarray]]:
    """The orthonormal frame whose connection enters the given variant."""
    if kind is PositionKind.VECTOR:
        return [lambda k, l=l: mb.helicity_polarization(k, l) for l in mb.HELICITIES]
    if kind is PositionKind.SPINOR_PLUS:
        return [lambda k, l=l: mb.spinor_f(k, l) for l in mb.HELICITIES]
    if kind is PositionKind.SPINOR_MINUS:
        return [lambda k, l=l: mb.spinor_g(-k, l) for l in mb.HELICITIES]
    return []


def _as_callable(phi):
    return phi.fn if isinstance(phi, mb.MomentumWavefunction) else phi


def apply_position(
    kind: PositionKind,
    phi,
    k,
    scheme: Scheme,
    include_weight_term: bool = True,
) -> np.ndarray:
    """Apply the position operator variant to phi at k.

    phi may be a :class:`MomentumWavefunction` or a bare callable.  Returns an
    array of shape (3, n): row j is the j-th position component acting on
    phi, evaluated at k.
    """
    k = np.asarray(k, dtype=float)
    fn = _as_callable(phi)
    value = np.asarray(fn(k), dtype=complex)
    expected = _COMPONENTS[kind]
    if expected is not None and value.shape != (expected,):
        raise ComponentMismatch(
            f"{kind.value} variant acts on {expected}-component wavefunctions, got shape {value.shape}"
        )

    grad = grad_k(fn, k, scheme)
    result = 1j * grad
    if kind is not PositionKind.NAIVE and include_weight_term:
        w = mb.omega(k)
        result -= 1j * np.outer(k / (2.0 * w * w), value)
    for u in frame_functions(kind):
        du = grad_k(u, k, scheme)
        overlap = np.vdot(u(k), value)
        result -= 1j * du * overlap
    return result


def eigenvalue_residual(
    x0,
    lam: int,
    k_samples,
    scheme: Scheme,
    kind: PositionKind = PositionKind.VECTOR,
    include_weight_term: bool = True,
) -> float:
    """Max relative residual of the eigenvalue relation x phi = x0 phi.

    Uses the localized wavefunction family matching the operator variant.
    """
    x0 = np.asarray(x0, dtype=float)
    if kind in (PositionKind.VECTOR, PositionKind.NAIVE):
        phi = mb.localized_wavefunction(x0, lam)
    else:
        branch = "plus" if kind is PositionKind.SPINOR_PLUS else "minus"
        phi = mb.localized_spinor_wavefunction(x0, lam, branch)
    worst = 0.0
    for k in k_samples:
        k = np.asarray(k, dtype=float)
        value = phi(k)
        applied = apply_position(kind, phi, k, scheme, include_weight_term)
        residual = np.linalg.norm(applied - np.outer(x0, value)) / np.linalg.norm(value)
        worst = max(worst, float(residual))
    return worst


def position_component(kind: PositionKind, phi, component: int, scheme: Scheme):
    """The wavefunction k -> (x_component phi)(k), for nested application."""
    fn = _as_callable(phi)

    def applied(k):
        return apply_position(kind, fn, k, scheme)[component]

    return applied


def commutator_residual(kind: PositionKind, i: int, j: int, phi, k, scheme: Scheme) -> float:
    """||(x_i x_j - x_j x_i) phi(k)|| / ||phi(k)|| by nested stencils.

    For the spinor variants the flatness of the connection holds on the span
    of the corresponding frame, so phi should be drawn from that span (the
    localized families qualify).
    """
    k = np.asarray(k, dtype=float)
    fn = _as_callable(phi)
    if i == j:
        return 0.0
    xi_xj = apply_position(kind, position_component(kind, fn, j, scheme), k, scheme)[i]
    xj_xi = apply_position(kind, position_component(kind, fn, i, scheme), k, scheme)[j]
    return float(np.linalg.norm(xi_xj - xj_xi) / np.linalg.norm(fn(k)))


def connection_identity_residual(
    k,
    lam: int,
    scheme: Scheme,
    helicities: Sequence[int] = mb.HELICITIES,
) -> float:
    """Residual of grad eps(k,lam) = sum_l' eps(l') [eps(l')^dag grad eps(k,lam)].

    The right side is the completeness projector applied to the gradient, so
    with the full helicity sum it reproduces the left exactly and the
    residual is at rounding level.  Restricting ``helicities`` (e.g. dropping
    the longitudinal sector) removes the corresponding projection of the
    gradient and the residual becomes order one: the check detects a
    truncated frame.
    """
    k = np.asarray(k, dtype=float)
    lhs = grad_k(lambda q: mb.helicity_polarization(q, lam), k, scheme)
    rhs = np.zeros_like(lhs)
    for lp in helicities:
        eps_lp = mb.helicity_polarization(k, lp)
        for j in range(3):
            rhs[j] += eps_lp * np.vdot(eps_lp, lhs[j])
    return float(np.max(np.linalg.norm(lhs - rhs, axis=1)))
