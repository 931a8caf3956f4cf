//! Gramian angular field encoding: polar transform, pairwise trigonometric
//! sum matrix, and 8-bit quantization into multi-channel grayscale images.

use crate::error::{Error, Result};
use crate::timeseries::{rescale_with, ConstantPolicy, RescaledSeries, SensorSeries};

/// Tolerance for values that should be in `[-1, 1]` but drifted by rounding.
const DOMAIN_TOLERANCE: f64 = 1e-12;

/// Per-axis polar encoding of a rescaled series: angles `phi = arccos(v)`
/// in `[0, pi]` and radii proportional to elapsed time.
#[derive(Debug, Clone)]
pub struct PolarSeries {
    phi: Vec<Vec<f64>>,
    radii: Vec<f64>,
    axis_names: Vec<String>,
}

impl PolarSeries {
    pub fn phi(&self) -> &[Vec<f64>] {
        &self.phi
    }

    /// Radii `(t_i - t_1) / T`, shared by every axis since all channels are
    /// sampled on the same clock. Not consumed by the field computation;
    /// kept for completeness of the polar encoding.
    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn axis_names(&self) -> &[String] {
        &self.axis_names
    }

    pub fn len(&self) -> usize {
        self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radii.is_empty()
    }
}

/// Per-axis `n x n` field of pairwise angular sums, entries in `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GafMatrix {
    n: usize,
    planes: Vec<Vec<f64>>, // row-major n*n per axis
    axis_names: Vec<String>,
}

impl GafMatrix {
    pub fn side(&self) -> usize {
        self.n
    }

    pub fn planes(&self) -> &[Vec<f64>] {
        &self.planes
    }

    pub fn axis_names(&self) -> &[String] {
        &self.axis_names
    }

    #[inline]
    pub fn get(&self, axis: usize, i: usize, j: usize) -> f64 {
        self.planes[axis][i * self.n + j]
    }
}

/// Per-axis quantization record: the field range that was mapped to
/// `[0, 255]`, and whether it was degenerate (max == min).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantRange {
    pub g_min: f64,
    pub g_max: f64,
    pub degenerate: bool,
}

impl QuantRange {
    /// Map one field value to a pixel using this record.
    #[inline]
    pub fn pixel(&self, g: f64) -> u8 {
        if self.degenerate {
            return 0;
        }
        let scaled = ((g - self.g_min) / (self.g_max - self.g_min) * 256.0).floor();
        scaled.clamp(0.0, 255.0) as u8
    }
}

/// Quantized multi-channel grayscale image, one `n x n` channel per axis.
#[derive(Debug, Clone)]
pub struct GafImage {
    n: usize,
    channels: Vec<Vec<u8>>, // row-major n*n per axis
    quant: Vec<QuantRange>,
    axis_names: Vec<String>,
}

impl GafImage {
    pub fn from_parts(
        n: usize,
        channels: Vec<Vec<u8>>,
        quant: Vec<QuantRange>,
        axis_names: Vec<String>,
    ) -> Result<Self> {
        if channels.len() != quant.len() || channels.len() != axis_names.len() {
            return Err(Error::shape("channel/quant/name counts differ"));
        }
        for ch in &channels {
            if ch.len() != n * n {
                return Err(Error::shape(format!(
                    "channel has {} pixels, expected {n}x{n}",
                    ch.len()
                )));
            }
        }
        Ok(GafImage {
            n,
            channels,
            quant,
            axis_names,
        })
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn channel_count(&self) -> usize {
        self.channels.len()
    }

    pub fn channels(&self) -> &[Vec<u8>] {
        &self.channels
    }

    pub fn quant(&self) -> &[QuantRange] {
        &self.quant
    }

    pub fn axis_names(&self) -> &[String] {
        &self.axis_names
    }

    #[inline]
    pub fn pixel(&self, axis: usize, i: usize, j: usize) -> u8 {
        self.channels[axis][i * self.n + j]
    }
}

/// Encode a rescaled series into polar coordinates.
///
/// Values farther than `1e-12` outside `[-1, 1]` are a [`Error::Domain`];
/// values within tolerance are clamped before `arccos`.
pub fn to_polar(series: &RescaledSeries) -> Result<PolarSeries> {
    let t = series.timestamps();
    let t0 = t[0];
    let duration = t[t.len() - 1] - t0;
    let radii = t.iter().map(|&ti| (ti - t0) / duration).collect();

    let mut phi = Vec::with_capacity(series.values().len());
    for ch in series.values() {
        let mut angles = Vec::with_capacity(ch.len());
        for (i, &v) in ch.iter().enumerate() {
            if v < -1.0 - DOMAIN_TOLERANCE || v > 1.0 + DOMAIN_TOLERANCE {
                return Err(Error::Domain { value: v, index: i });
            }
            angles.push(v.clamp(-1.0, 1.0).acos());
        }
        phi.push(angles);
    }
    Ok(PolarSeries {
        phi,
        radii,
        axis_names: series.axis_names().to_vec(),
    })
}

/// Build the angular-sum field from a polar series.
///
/// Entry `(i, j)` is computed with the closed form
/// `v_i * v_j - sqrt(1 - v_i^2) * sqrt(1 - v_j^2)` where `v = cos(phi)`,
/// which equals `cos(phi_i + phi_j)` since every angle lies in `[0, pi]`.
pub fn gaf_matrix(polar: &PolarSeries) -> GafMatrix {
    let n = polar.len();
    let mut planes = Vec::with_capacity(polar.phi().len());
    for angles in polar.phi() {
        let values: Vec<f64> = angles.iter().map(|&p| p.cos()).collect();
        let complements: Vec<f64> = values
            .iter()
            .map(|&v| (1.0 - v * v).max(0.0).sqrt())
            .collect();
        let mut plane = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                plane[i * n + j] = values[i] * values[j] - complements[i] * complements[j];
            }
        }
        planes.push(plane);
    }
    GafMatrix {
        n,
        planes,
        axis_names: polar.axis_names().to_vec(),
    }
}

/// Quantize a field into 8-bit pixels, per axis independently.
///
/// `pixel = clamp(floor((g - g_min) / (g_max - g_min) * 256), 0, 255)`;
/// the multiply by 256 sends the maximum entry to 256, which the clamp
/// folds back to 255. A degenerate axis (max == min) maps to all zeros
/// with its `degenerate` flag set.
pub fn quantize(matrix: &GafMatrix) -> GafImage {
    let mut channels = Vec::with_capacity(matrix.planes().len());
    let mut quant = Vec::with_capacity(matrix.planes().len());
    for plane in matrix.planes() {
        let g_min = plane.iter().cloned().fold(f64::INFINITY, f64::min);
        let g_max = plane.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let range = QuantRange {
            g_min,
            g_max,
            degenerate: g_max == g_min,
        };
        channels.push(plane.iter().map(|&g| range.pixel(g)).collect());
        quant.push(range);
    }
    GafImage {
        n: matrix.side(),
        channels,
        quant,
        axis_names: matrix.axis_names().to_vec(),
    }
}

/// Full encoding of a raw sensor series: rescale, polar transform, field,
/// quantization. Output is one `n x n` channel per axis.
pub fn encode_sensor(series: &SensorSeries) -> Result<GafImage> {
    encode_sensor_with(series, ConstantPolicy::Error)
}

/// [`encode_sensor`] with an explicit constant-axis policy.
pub fn encode_sensor_with(series: &SensorSeries, policy: ConstantPolicy) -> Result<GafImage> {
    let rescaled = rescale_with(series, policy)?;
    let polar = to_polar(&rescaled)?;
    Ok(quantize(&gaf_matrix(&polar)))
}
