//! Probe geometry and acquisition parameters.
//!
//! A 2D matrix array is a `rows x cols` lattice of rectangular elements on
//! the z = 0 plane, centered on the origin, radiating into z > 0. Element
//! indexing is row-major: element `n = r * cols + c`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Speed of sound default for soft tissue, m/s.
pub const DEFAULT_SPEED_OF_SOUND: f64 = 1540.0;

/// A point in 3D space, meters. Axes: x lateral, y elevation, z depth.
pub type Point3 = [f64; 3];

#[inline]
pub(crate) fn sub3(a: Point3, b: Point3) -> Point3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub(crate) fn norm3(v: Point3) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// Geometry of a 2D matrix array probe.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArrayGeometry {
    pub rows: usize,
    pub cols: usize,
    /// Element pitch along x (lateral), meters.
    pub pitch_x: f64,
    /// Element pitch along y (elevation), meters.
    pub pitch_y: f64,
    /// Element active width along x, meters.
    pub element_width: f64,
    /// Element active height along y, meters.
    pub element_height: f64,
    /// Probe center frequency, Hz.
    pub center_frequency: f64,
    /// Element centers, row-major, all on z = 0 and centered at the origin.
    pub element_positions: Vec<Point3>,
}

impl ArrayGeometry {
    /// Total element count.
    #[inline]
    pub fn num_elements(&self) -> usize {
        self.rows * self.cols
    }

    /// Aperture extents `(cols * pitch_x, rows * pitch_y)`, meters.
    pub fn aperture(&self) -> (f64, f64) {
        (
            self.cols as f64 * self.pitch_x,
            self.rows as f64 * self.pitch_y,
        )
    }

    /// Hard-baffle rectangular-element receive directivity for a unit
    /// `direction` from the element towards the field point, at frequency
    /// `f`. Product of per-axis sinc terms and the obliquity factor cos(theta),
    /// clipped to [0, 1].
    pub fn element_directivity(&self, direction: Point3, f: f64, speed_of_sound: f64) -> f64 {
        let k = std::f64::consts::PI * f / speed_of_sound;
        let dx = sinc(k * self.element_width * direction[0]);
        let dy = sinc(k * self.element_height * direction[1]);
        let cos_theta = direction[2];
        (dx * dy * cos_theta).clamp(0.0, 1.0)
    }
}

#[inline]
fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        1.0
    } else {
        x.sin() / x
    }
}

/// Build a uniform-pitch matrix array centered at the origin.
///
/// The position of element `(r, c)` is
/// `((c - (cols-1)/2) * pitch_x, (r - (rows-1)/2) * pitch_y, 0)`.
/// Element width/height default to the pitch (kerfless fill).
pub fn build_matrix_array(
    rows: usize,
    cols: usize,
    pitch_x: f64,
    pitch_y: f64,
    f0: f64,
) -> Result<ArrayGeometry> {
    if rows == 0 || cols == 0 {
        return Err(Error::invalid_argument("rows and cols must be >= 1"));
    }
    if pitch_x <= 0.0 || pitch_y <= 0.0 {
        return Err(Error::invalid_argument("pitch must be positive"));
    }
    if f0 <= 0.0 {
        return Err(Error::invalid_argument("center frequency must be positive"));
    }
    let cx = (cols as f64 - 1.0) / 2.0;
    let cy = (rows as f64 - 1.0) / 2.0;
    let mut element_positions = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            element_positions.push([(c as f64 - cx) * pitch_x, (r as f64 - cy) * pitch_y, 0.0]);
        }
    }
    Ok(ArrayGeometry {
        rows,
        cols,
        pitch_x,
        pitch_y,
        element_width: pitch_x,
        element_height: pitch_y,
        center_frequency: f0,
        element_positions,
    })
}

/// The 32x32, 7.8 MHz matrix probe used throughout the default configs.
/// Uniform pitch derived from a 9.3 mm x 10.2 mm aperture.
pub fn default_matrix_probe() -> ArrayGeometry {
    build_matrix_array(32, 32, 9.3e-3 / 32.0, 10.2e-3 / 32.0, 7.8e6)
        .expect("default probe parameters are valid")
}

/// Acquisition parameters shared by simulation and beamforming.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AcquisitionConfig {
    /// Medium speed of sound, m/s.
    pub speed_of_sound: f64,
    /// Channel sampling frequency, Hz.
    pub sampling_frequency: f64,
    /// Excitation pulse length in carrier cycles.
    pub pulse_cycles: usize,
    /// Transmit apodization weights over elements, row-major, in [0, 1].
    pub transmit_apodization: Vec<f64>,
    /// Acquisition frame rate, Hz.
    pub frame_rate: f64,
}

impl AcquisitionConfig {
    /// Standard configuration: 1540 m/s, fs = 4 * f0, two-cycle pulse,
    /// Tukey(0.5) transmit taper, 500 Hz frame rate.
    pub fn standard(geom: &ArrayGeometry) -> Self {
        AcquisitionConfig {
            speed_of_sound: DEFAULT_SPEED_OF_SOUND,
            sampling_frequency: 4.0 * geom.center_frequency,
            pulse_cycles: 2,
            transmit_apodization: tukey_2d(geom.rows, geom.cols, 0.5),
            frame_rate: 500.0,
        }
    }

    /// Check internal consistency against a probe geometry.
    pub fn validate(&self, geom: &ArrayGeometry) -> Result<()> {
        if self.speed_of_sound <= 0.0 {
            return Err(Error::invalid_configuration(
                "acquisition.speed_of_sound must be positive",
            ));
        }
        if self.sampling_frequency < 4.0 * geom.center_frequency {
            return Err(Error::invalid_configuration(format!(
                "acquisition.sampling_frequency {} Hz is below the 4 x f0 anti-alias margin ({} Hz)",
                self.sampling_frequency,
                4.0 * geom.center_frequency
            )));
        }
        if self.pulse_cycles == 0 {
            return Err(Error::invalid_configuration(
                "acquisition.pulse_cycles must be >= 1",
            ));
        }
        if self.transmit_apodization.len() != geom.num_elements() {
            return Err(Error::invalid_configuration(format!(
                "transmit apodization has {} weights for {} elements",
                self.transmit_apodization.len(),
                geom.num_elements()
            )));
        }
        if self
            .transmit_apodization
            .iter()
            .any(|&w| !(0.0..=1.0).contains(&w) || !w.is_finite())
        {
            return Err(Error::invalid_configuration(
                "transmit apodization weights must lie in [0, 1]",
            ));
        }
        if self.frame_rate <= 0.0 {
            return Err(Error::invalid_configuration(
                "acquisition.frame_rate must be positive",
            ));
        }
        Ok(())
    }
}

/// Tukey (tapered cosine) window of length `n` with taper fraction `alpha`.
pub fn tukey(n: usize, alpha: f64) -> Vec<f64> {
    if n == 1 {
        return vec![1.0];
    }
    let alpha = alpha.clamp(0.0, 1.0);
    let edge = alpha * (n as f64 - 1.0) / 2.0;
    (0..n)
        .map(|i| {
            let x = i as f64;
            let m = n as f64 - 1.0;
            if alpha == 0.0 {
                1.0
            } else if x < edge {
                0.5 * (1.0 + (std::f64::consts::PI * (2.0 * x / (alpha * m) - 1.0)).cos())
            } else if x > m - edge {
                0.5 * (1.0
                    + (std::f64::consts::PI * (2.0 * x / (alpha * m) - 2.0 / alpha + 1.0)).cos())
            } else {
                1.0
            }
        })
        .collect()
}

/// Separable 2D Tukey taper over a `rows x cols` aperture, row-major.
pub fn tukey_2d(rows: usize, cols: usize, alpha: f64) -> Vec<f64> {
    let wr = tukey(rows, alpha);
    let wc = tukey(cols, alpha);
    let mut out = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            out.push(wr[r] * wc[c]);
        }
    }
    out
}

/// Evaluate the separable Tukey aperture taper at a continuous aperture
/// coordinate `(x, y)` in meters. Points outside the aperture return 0.
pub fn tukey_taper_at(geom: &ArrayGeometry, alpha: f64, x: f64, y: f64) -> f64 {
    let (ax, ay) = geom.aperture();
    let tx = tukey_axis(x / ax + 0.5, alpha);
    let ty = tukey_axis(y / ay + 0.5, alpha);
    tx * ty
}

fn tukey_axis(u: f64, alpha: f64) -> f64 {
    if !(0.0..=1.0).contains(&u) {
        return 0.0;
    }
    let half = alpha / 2.0;
    if alpha > 0.0 && u < half {
        0.5 * (1.0 + (std::f64::consts::PI * (2.0 * u / alpha - 1.0)).cos())
    } else if alpha > 0.0 && u > 1.0 - half {
        0.5 * (1.0 + (std::f64::consts::PI * (2.0 * (1.0 - u) / alpha - 1.0)).cos())
    } else {
        1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn single_element_sits_at_origin() {
        let g = build_matrix_array(1, 1, 300e-6, 300e-6, 7.8e6).unwrap();
        assert_eq!(g.num_elements(), 1);
        assert_eq!(g.element_positions[0], [0.0, 0.0, 0.0]);
    }

    #[test]
    fn full_array_count_and_extent() {
        let g = build_matrix_array(32, 32, 300e-6, 300e-6, 7.8e6).unwrap();
        assert_eq!(g.num_elements(), 1024);
        let (ax, ay) = g.aperture();
        assert_relative_eq!(ax, 9.6e-3, max_relative = 1e-12);
        assert_relative_eq!(ay, 9.6e-3, max_relative = 1e-12);
    }

    #[test]
    fn two_by_two_symmetry() {
        let g = build_matrix_array(2, 2, 1e-3, 1e-3, 5e6).unwrap();
        let expected = [
            [-0.5e-3, -0.5e-3, 0.0],
            [0.5e-3, -0.5e-3, 0.0],
            [-0.5e-3, 0.5e-3, 0.0],
            [0.5e-3, 0.5e-3, 0.0],
        ];
        for (p, e) in g.element_positions.iter().zip(expected.iter()) {
            for a in 0..3 {
                assert_relative_eq!(p[a], e[a], epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn grid_symmetric_under_half_turn() {
        let g = build_matrix_array(4, 6, 250e-6, 300e-6, 5e6).unwrap();
        let n = g.num_elements();
        for i in 0..n {
            let p = g.element_positions[i];
            let q = g.element_positions[n - 1 - i];
            assert_relative_eq!(p[0], -q[0], epsilon = 1e-15);
            assert_relative_eq!(p[1], -q[1], epsilon = 1e-15);
        }
    }

    #[test]
    fn invalid_build_arguments() {
        assert!(build_matrix_array(0, 4, 1e-3, 1e-3, 5e6).is_err());
        assert!(build_matrix_array(4, 4, 0.0, 1e-3, 5e6).is_err());
        assert!(build_matrix_array(4, 4, 1e-3, -1e-3, 5e6).is_err());
    }

    #[test]
    fn directivity_limits() {
        let g = default_matrix_probe();
        let broadside = g.element_directivity([0.0, 0.0, 1.0], g.center_frequency, 1540.0);
        assert_relative_eq!(broadside, 1.0, epsilon = 1e-12);
        let grazing = g.element_directivity([1.0, 0.0, 0.0], g.center_frequency, 1540.0);
        assert_relative_eq!(grazing, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn directivity_monotone_over_main_lobe() {
        let g = default_matrix_probe();
        let mut prev = f64::INFINITY;
        for deg in 0..=30 {
            let th = (deg as f64).to_radians();
            let d = g.element_directivity([th.sin(), 0.0, th.cos()], g.center_frequency, 1540.0);
            assert!(
                d <= prev + 1e-12,
                "directivity not monotone at {deg} deg: {d} > {prev}"
            );
            prev = d;
        }
    }

    #[test]
    fn tukey_window_shape() {
        let w = tukey(32, 0.5);
        assert_relative_eq!(w[15], 1.0, epsilon = 1e-12);
        assert!(w[0] < 1e-12);
        // symmetric
        for i in 0..32 {
            assert_relative_eq!(w[i], w[31 - i], epsilon = 1e-12);
        }
    }

    #[test]
    fn taper_at_center_is_one() {
        let g = default_matrix_probe();
        assert_relative_eq!(tukey_taper_at(&g, 0.5, 0.0, 0.0), 1.0, epsilon = 1e-12);
        assert_eq!(tukey_taper_at(&g, 0.5, 20e-3, 0.0), 0.0);
    }

    #[test]
    fn standard_config_validates() {
        let g = default_matrix_probe();
        let acq = AcquisitionConfig::standard(&g);
        acq.validate(&g).unwrap();
        assert_relative_eq!(acq.sampling_frequency, 31.2e6, max_relative = 1e-12);

        let mut bad = acq.clone();
        bad.sampling_frequency = 2.0 * g.center_frequency;
        assert!(bad.validate(&g).is_err());
    }
}
