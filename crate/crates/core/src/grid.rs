//! Voxel grids and scalar volumes.
//!
//! Linear indexing is x-fastest: `flat = i + dims[0] * (j + dims[1] * k)`
//! for voxel `(i, j, k)` with x lateral, y elevation, z depth.

use crate::error::{Error, Result};
use crate::geometry::Point3;
use serde::{Deserialize, Serialize};

/// A regular 3D reconstruction lattice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VoxelGrid {
    /// Center of voxel (0, 0, 0), meters.
    pub origin: Point3,
    /// Voxel spacing per axis, meters.
    pub spacing: Point3,
    /// Voxel counts per axis (x, y, z).
    pub dims: [usize; 3],
}

impl VoxelGrid {
    pub fn new(origin: Point3, spacing: Point3, dims: [usize; 3]) -> Result<Self> {
        if spacing.iter().any(|&s| s <= 0.0 || !s.is_finite()) {
            return Err(Error::invalid_argument(
                "voxel spacing must be strictly positive",
            ));
        }
        if dims.iter().any(|&d| d == 0) {
            return Err(Error::invalid_argument("voxel dims must be >= 1"));
        }
        Ok(VoxelGrid {
            origin,
            spacing,
            dims,
        })
    }

    /// Grid spanning `bounds[axis] = (min, max)` voxel centers inclusive,
    /// with uniform `spacing`. The number of voxels per axis is rounded so
    /// the last center does not overshoot `max` by more than half a voxel.
    pub fn from_bounds(bounds: [(f64, f64); 3], spacing: Point3) -> Result<Self> {
        let mut dims = [0usize; 3];
        for a in 0..3 {
            let (lo, hi) = bounds[a];
            if hi < lo {
                return Err(Error::invalid_argument("grid bounds must satisfy min <= max"));
            }
            dims[a] = ((hi - lo) / spacing[a] + 0.5).floor() as usize + 1;
        }
        VoxelGrid::new([bounds[0].0, bounds[1].0, bounds[2].0], spacing, dims)
    }

    #[inline]
    pub fn num_voxels(&self) -> usize {
        self.dims[0] * self.dims[1] * self.dims[2]
    }

    #[inline]
    pub fn flatten(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims[0] && j < self.dims[1] && k < self.dims[2]);
        i + self.dims[0] * (j + self.dims[1] * k)
    }

    #[inline]
    pub fn unflatten(&self, flat: usize) -> (usize, usize, usize) {
        let i = flat % self.dims[0];
        let rest = flat / self.dims[0];
        (i, rest % self.dims[1], rest / self.dims[1])
    }

    /// World position of the center of voxel `(i, j, k)`.
    #[inline]
    pub fn position(&self, i: usize, j: usize, k: usize) -> Point3 {
        [
            self.origin[0] + i as f64 * self.spacing[0],
            self.origin[1] + j as f64 * self.spacing[1],
            self.origin[2] + k as f64 * self.spacing[2],
        ]
    }

    /// Nearest voxel index to a world point, or None if outside the grid.
    pub fn voxel_at(&self, p: Point3) -> Option<(usize, usize, usize)> {
        let mut idx = [0usize; 3];
        for a in 0..3 {
            let f = (p[a] - self.origin[a]) / self.spacing[a];
            let r = f.round();
            if r < -0.5 || r > self.dims[a] as f64 - 0.5 {
                return None;
            }
            idx[a] = r.clamp(0.0, self.dims[a] as f64 - 1.0) as usize;
        }
        Some((idx[0], idx[1], idx[2]))
    }

    /// A grid covering the same extent with `factor`-times finer spacing,
    /// used for super-resolution density maps.
    pub fn refined(&self, factor: usize) -> VoxelGrid {
        let f = factor.max(1);
        VoxelGrid {
            origin: self.origin,
            spacing: [
                self.spacing[0] / f as f64,
                self.spacing[1] / f as f64,
                self.spacing[2] / f as f64,
            ],
            dims: [
                (self.dims[0] - 1) * f + 1,
                (self.dims[1] - 1) * f + 1,
                (self.dims[2] - 1) * f + 1,
            ],
        }
    }
}

/// A plain scalar field over a voxel grid (templates, coefficient maps).
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarVolume {
    pub grid: VoxelGrid,
    /// x-fastest values, length `grid.num_voxels()`.
    pub values: Vec<f64>,
}

impl ScalarVolume {
    pub fn zeros(grid: VoxelGrid) -> Self {
        let n = grid.num_voxels();
        ScalarVolume {
            grid,
            values: vec![0.0; n],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> f64 {
        self.values[self.grid.flatten(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: f64) {
        let idx = self.grid.flatten(i, j, k);
        self.values[idx] = v;
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Flat index of the maximum value (first occurrence).
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        let mut best_v = f64::NEG_INFINITY;
        for (i, &v) in self.values.iter().enumerate() {
            if v > best_v {
                best_v = v;
                best = i;
            }
        }
        best
    }
}
