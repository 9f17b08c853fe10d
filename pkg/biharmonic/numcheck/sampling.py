"""
Deterministic sample points on spheres and products of spheres.

Points come from numpy's PCG64 generator: uniforms are turned into Gaussians
with the Box-Muller transform, then each variable block is normalised to unit
length. The same seed always yields bit-identical points.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from biharmonic.errors import InvalidArgument
from biharmonic.maps import SphereMapMeta

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampleSet:
    seed: int
    points: np.ndarray
    blocks: Tuple[int, ...]

    @property
    def count(self) -> int:
        return int(self.points.shape[0])

    @property
    def nvars(self) -> int:
        return int(self.points.shape[1])

    def block_norms(self) -> np.ndarray:
        """(count, blocks) array of Euclidean norms, one column per sphere factor."""
        columns = []
        start = 0
        for size in self.blocks:
            columns.append(np.linalg.norm(self.points[:, start : start + size], axis=1))
            start += size
        return np.stack(columns, axis=1)


def box_muller(generator: np.random.Generator, size: int) -> np.ndarray:
    pairs = (size + 1) // 2
    # 1 - U lies in (0, 1], keeping the logarithm finite
    radius = np.sqrt(-2.0 * np.log(1.0 - generator.random(pairs)))
    angle = 2.0 * np.pi * generator.random(pairs)
    normals = np.empty(2 * pairs)
    normals[0::2] = radius * np.cos(angle)
    normals[1::2] = radius * np.sin(angle)
    return normals[:size]


def sample_sphere(
    m: int, count: int, seed: int, blocks: Optional[Sequence[int]] = None
) -> SampleSet:
    """
    Draw ``count`` points on S^m, or on the product of spheres given by ``blocks``.

    Args:
        m: Sphere dimension; ignored when ``blocks`` is given
        count: Number of points, at least 1
        seed: Generator seed
        blocks: Variable block sizes of a product domain

    Returns:
        SampleSet with a (count, nvars) float array
    """
    if count < 1:
        raise InvalidArgument(f"Need at least one sample point, got {count}")
    sizes = tuple(blocks) if blocks is not None else (m + 1,)
    if any(size < 2 for size in sizes):
        raise InvalidArgument(f"Every sphere factor needs 2 or more variables: {sizes}")
    nvars = sum(sizes)
    generator = np.random.Generator(np.random.PCG64(seed))
    points = box_muller(generator, count * nvars).reshape(count, nvars)
    start = 0
    for size in sizes:
        block = points[:, start : start + size]
        block /= np.linalg.norm(block, axis=1, keepdims=True)
        start += size
    logger.debug(f"Sampled {count} points on blocks {sizes} with seed {seed}")
    return SampleSet(seed=seed, points=points, blocks=sizes)


def sample_for(meta: SphereMapMeta, count: int, seed: int) -> SampleSet:
    return sample_sphere(meta.nvars - 1, count, seed, blocks=meta.blocks)
