"""
Reference route: tension and bitension from the composition formula.

Everything is computed from Phi = i o phi using only the intrinsic sphere
Laplacian L, the tangential part of dF and the target radius R^2:

    tau(Phi)   = -L[F]
    |dPhi|^2   = |dF|^2 - sum_b |r_b F|^2
    tau(phi)   = tau(Phi) + |dPhi|^2 / R^2 * Phi
    tau2(phi)  = tau2(Phi)
                 + (-L|dPhi|^2 / R^2 + 2 div(theta) / R^2 - |tau(Phi)|^2 / R^2
                    + 2 |dPhi|^4 / R^4) Phi
                 + 2 / R^2 |dPhi|^2 tau(Phi) + 2 / R^2 dPhi(grad |dPhi|^2)

with tau2(Phi) = L[L[F]], div(theta) = |tau(Phi)|^2 + <dF, dT> - sum_b <r_b F, r_b T>
for T = tau(Phi), and dPhi(grad h) = dF(grad h) - sum_b r_b(h) r_b F.
Here b runs over the sphere factors of the domain (one, or two for products).
"""

import logging
import time
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

from biharmonic.errors import WrongKind
from biharmonic.maps import (
    PolyMap,
    ProductMeta,
    SphereMapMeta,
    differential_inner,
    grad_norm_squared,
    push_gradient,
    radial_derivative,
    sphere_laplacian,
)
from biharmonic.polyalg import Polynomial, RadicalScalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BitensionWorksheet:
    """Every NF-reduced intermediate of the reference route."""

    tau: PolyMap
    tau_norm_sq: Polynomial
    dphi_norm_sq: Polynomial
    laplacian_energy: Polynomial
    div_theta: Polynomial
    push_grad: PolyMap
    bitension_of_inclusion: PolyMap

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tau": self.tau.to_strings(),
            "tau_norm_sq": str(self.tau_norm_sq),
            "dphi_norm_sq": str(self.dphi_norm_sq),
            "laplacian_energy": str(self.laplacian_energy),
            "div_theta": str(self.div_theta),
            "push_grad": self.push_grad.to_strings(),
            "bitension_of_inclusion": self.bitension_of_inclusion.to_strings(),
        }


@dataclass(frozen=True)
class GeneralRoute:
    tension: PolyMap
    bitension: PolyMap
    worksheet: BitensionWorksheet


def run_general_route(
    F: PolyMap, blocks: Sequence[int], target_radius_sq: RadicalScalar
) -> GeneralRoute:
    """Tension, bitension and worksheet of F on the product of spheres ``blocks``."""
    started = time.perf_counter()
    blocks = tuple(blocks)

    def nf(p: Polynomial) -> Polynomial:
        return p.normal_form(blocks)

    def laplace(p: Polynomial) -> Polynomial:
        return sphere_laplacian(p, blocks=blocks)

    inverse = RadicalScalar.coerce(target_radius_sq).inverse()
    factors = range(len(blocks))
    radial_images = [radial_derivative(F, blocks, b) for b in factors]

    tau = F.map(lambda c: -nf(laplace(c)))
    energy = grad_norm_squared(F)
    for image in radial_images:
        energy = energy - image.norm_squared()
    energy = nf(energy)

    tension = (tau + F.scale(energy * inverse)).normal_form(blocks)

    inclusion_bitension = F.map(lambda c: nf(laplace(nf(laplace(c)))))
    laplacian_energy = nf(laplace(energy))
    tau_norm_sq = nf(tau.norm_squared())
    tangential_inner = differential_inner(F, tau)
    for b, image in enumerate(radial_images):
        radial_tau = radial_derivative(tau, blocks, b)
        tangential_inner = tangential_inner - image.dot(radial_tau)
    div_theta = nf(tau_norm_sq + tangential_inner)

    push = push_gradient(F, energy)
    for b, image in enumerate(radial_images):
        push = push - image.scale(radial_derivative(energy, blocks, b))
    push = push.normal_form(blocks)

    coefficient = (
        (-laplacian_energy + div_theta * 2 - tau_norm_sq) * inverse
        + energy * energy * (inverse * inverse * 2)
    )
    bitension = (
        inclusion_bitension
        + F.scale(nf(coefficient))
        + tau.scale(energy * (inverse * 2))
        + push.scale(inverse * 2)
    ).normal_form(blocks)

    logger.debug(
        f"General route on blocks {blocks} took {time.perf_counter() - started:.3f}s"
    )
    worksheet = BitensionWorksheet(
        tau=tau,
        tau_norm_sq=tau_norm_sq,
        dphi_norm_sq=energy,
        laplacian_energy=laplacian_energy,
        div_theta=div_theta,
        push_grad=push,
        bitension_of_inclusion=inclusion_bitension,
    )
    return GeneralRoute(tension=tension, bitension=bitension, worksheet=worksheet)


def _single_sphere_route(F: PolyMap, meta: SphereMapMeta) -> GeneralRoute:
    if isinstance(meta, ProductMeta):
        raise WrongKind(
            "The single-sphere reference route does not take product domains",
            ["use tension_product_general / bitension_product_general"],
        )
    return run_general_route(F, meta.blocks, meta.target_radius_sq)


def _product_route(F: PolyMap, meta: SphereMapMeta) -> GeneralRoute:
    if not isinstance(meta, ProductMeta):
        raise WrongKind(f"Expected product metadata, got {meta.kind.value}")
    return run_general_route(F, meta.blocks, meta.target_radius_sq)


def tension_general(F: PolyMap, meta: SphereMapMeta) -> PolyMap:
    return _single_sphere_route(F, meta).tension


def bitension_general(
    F: PolyMap, meta: SphereMapMeta
) -> Tuple[PolyMap, BitensionWorksheet]:
    route = _single_sphere_route(F, meta)
    return route.bitension, route.worksheet


def tension_product_general(F: PolyMap, meta: SphereMapMeta) -> PolyMap:
    return _product_route(F, meta).tension


def bitension_product_general(
    F: PolyMap, meta: SphereMapMeta
) -> Tuple[PolyMap, BitensionWorksheet]:
    route = _product_route(F, meta)
    return route.bitension, route.worksheet


def general_route_for(F: PolyMap, meta: SphereMapMeta) -> GeneralRoute:
    """Reference route for any kind (single sphere or product domain)."""
    return run_general_route(F, meta.blocks, meta.target_radius_sq)
