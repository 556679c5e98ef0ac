//! 3D plane-wave ultrasound beamforming and super-resolution localization.
//!
//! The crate covers the full desk-scale pipeline for volumetric imaging with a
//! 2D matrix array probe:
//!
//! 1. [`simulator`] — synthetic per-channel RF data for plane-wave
//!    insonification of point scatterers, including white-noise injection and
//!    a moving-bubble crossing-tube phantom.
//! 2. [`delayline`] — analytic-signal conversion, per-voxel round-trip delays,
//!    delay-cancelled sample gathering, and receive element-sensitivity
//!    apodization.
//! 3. [`beamformers`] — delay-and-sum plus adaptive weight-based coherence
//!    beamformers: p-th root compression (p-DAS), coherence factor (CF), and
//!    coherence-to-variance weights with and without inverse apodization
//!    (CV, CV_N).
//! 4. [`metrics`] — PSF quality metrics (FWHM, side-to-main lobe ratios,
//!    image SNR) and diagnostic exports (MIPs, profiles, channel histograms).
//! 5. [`srus`] — SVD clutter filtering, template matching by 3D normalized
//!    cross-correlation, sub-voxel localization, and density-map accumulation
//!    for super-resolution microbubble imaging.
//!
//! Geometry, scenes, voxel grids, and acquisition parameters live in
//! [`geometry`], [`scene`], and [`grid`]; file formats in [`io`]; the
//! config-file schema in [`config`].
//!
//! All lengths are meters, times seconds, frequencies hertz. Voxel grids are
//! indexed x-fastest (lateral), then y (elevation), then z (depth).

pub mod beamformers;
pub mod config;
pub mod delayline;
mod error;
pub mod geometry;
pub mod grid;
pub mod io;
pub mod metrics;
pub mod scene;
pub mod simulator;
pub mod srus;

pub use error::{Error, Result};
