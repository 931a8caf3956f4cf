//! Raw sensor series ingestion, validation, and rescaling onto `[-1, 1]`.

use std::path::Path;

use crate::error::{Error, Result};

/// CSV column layout: one timestamp column followed by axis columns.
#[derive(Debug, Clone)]
pub struct ColumnSchema {
    /// Name of the timestamp column (seconds, decimal).
    pub timestamp: String,
    /// Axis columns to read, in order. `None` takes every non-timestamp
    /// column in header order.
    pub axes: Option<Vec<String>>,
}

impl Default for ColumnSchema {
    fn default() -> Self {
        ColumnSchema {
            timestamp: "t".to_string(),
            axes: None,
        }
    }
}

/// A validated multi-axis sensor recording.
///
/// All channels share one strictly increasing timestamp vector of length
/// `n >= 2`; values are immutable after construction.
#[derive(Debug, Clone)]
pub struct SensorSeries {
    sensor_id: String,
    timestamps: Vec<f64>,
    axis_names: Vec<String>,
    channels: Vec<Vec<f64>>,
}

impl SensorSeries {
    pub fn new(
        sensor_id: impl Into<String>,
        timestamps: Vec<f64>,
        axis_names: Vec<String>,
        channels: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let n = timestamps.len();
        if n < 2 {
            return Err(Error::TooFewSamples { n });
        }
        assert_eq!(axis_names.len(), channels.len(), "one name per channel");
        for (name, ch) in axis_names.iter().zip(&channels) {
            if ch.len() != n {
                return Err(Error::ChannelLengthMismatch {
                    axis: name.clone(),
                    len: ch.len(),
                    expected: n,
                });
            }
        }
        for (i, pair) in timestamps.windows(2).enumerate() {
            if pair[1] <= pair[0] {
                return Err(Error::NonMonotoneTimestamp { row: i + 2 });
            }
        }
        Ok(SensorSeries {
            sensor_id: sensor_id.into(),
            timestamps,
            axis_names,
            channels,
        })
    }

    pub fn len(&self) -> usize {
        self.timestamps.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires n >= 2
    }

    /// Total duration `T = t_n - t_1`, strictly positive.
    pub fn duration(&self) -> f64 {
        self.timestamps[self.timestamps.len() - 1] - self.timestamps[0]
    }

    pub fn timestamps(&self) -> &[f64] {
        &self.timestamps
    }

    pub fn axis_names(&self) -> &[String] {
        &self.axis_names
    }

    pub fn channels(&self) -> &[Vec<f64>] {
        &self.channels
    }

    pub fn sensor_id(&self) -> &str {
        &self.sensor_id
    }
}

/// Per-axis series rescaled onto `[-1, 1]`, with the affine parameters
/// recorded so the map can be inverted or reapplied.
#[derive(Debug, Clone)]
pub struct RescaledSeries {
    values: Vec<Vec<f64>>,
    source_min: Vec<f64>,
    source_max: Vec<f64>,
    timestamps: Vec<f64>,
    axis_names: Vec<String>,
}

impl RescaledSeries {
    /// Assemble directly from already-normalized values. Every value must
    /// lie in `[-1, 1]`.
    pub fn from_values(
        values: Vec<Vec<f64>>,
        timestamps: Vec<f64>,
        axis_names: Vec<String>,
    ) -> Result<Self> {
        for ch in &values {
            for (i, &v) in ch.iter().enumerate() {
                if !(-1.0..=1.0).contains(&v) {
                    return Err(Error::Domain { value: v, index: i });
                }
            }
        }
        let (source_min, source_max) = values
            .iter()
            .map(|ch| {
                let min = ch.iter().cloned().fold(f64::INFINITY, f64::min);
                let max = ch.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                (min, max)
            })
            .unzip();
        Ok(RescaledSeries {
            values,
            source_min,
            source_max,
            timestamps,
            axis_names,
        })
    }

    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn source_min(&self) -> &[f64] {
        &self.source_min
    }

    pub fn source_max(&self) -> &[f64] {
        &self.source_max
    }

    pub fn timestamps(&self) -> &[f64] {
        &self.timestamps
    }

    pub fn axis_names(&self) -> &[String] {
        &self.axis_names
    }

    pub fn len(&self) -> usize {
        self.timestamps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.timestamps.is_empty()
    }
}

/// What to do with an axis whose samples are all identical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConstantPolicy {
    /// Report [`Error::ConstantSeries`].
    #[default]
    Error,
    /// Map the axis to all zeros.
    Zero,
}

/// Load and validate a sensor series from a CSV file.
///
/// Expects UTF-8 comma-separated text with one header row and no missing
/// cells. Row numbers in errors are 1-based over data rows.
pub fn load_csv(path: &Path, schema: &ColumnSchema) -> Result<SensorSeries> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)
        .map_err(|e| csv_error(path, 0, e))?;

    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| csv_error(path, 0, e))?
        .iter()
        .map(|h| h.trim().to_string())
        .collect();

    let t_col = headers
        .iter()
        .position(|h| *h == schema.timestamp)
        .ok_or_else(|| Error::MissingColumn {
            column: schema.timestamp.clone(),
        })?;

    let axis_cols: Vec<(String, usize)> = match &schema.axes {
        Some(names) => names
            .iter()
            .map(|name| {
                headers
                    .iter()
                    .position(|h| h == name)
                    .map(|idx| (name.clone(), idx))
                    .ok_or_else(|| Error::MissingColumn {
                        column: name.clone(),
                    })
            })
            .collect::<Result<_>>()?,
        None => headers
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != t_col)
            .map(|(i, h)| (h.clone(), i))
            .collect(),
    };
    if axis_cols.is_empty() {
        return Err(Error::MissingColumn {
            column: "<at least one axis>".to_string(),
        });
    }

    let mut timestamps = Vec::new();
    let mut channels: Vec<Vec<f64>> = vec![Vec::new(); axis_cols.len()];
    for (idx, record) in reader.records().enumerate() {
        let row = idx + 1;
        let record = record.map_err(|e| csv_error(path, row, e))?;
        if record.len() != headers.len() {
            return Err(Error::MalformedRow {
                path: path.to_path_buf(),
                row,
                reason: format!("{} cells, expected {}", record.len(), headers.len()),
            });
        }
        let parse = |col: usize| -> Result<f64> {
            record[col].trim().parse().map_err(|_| Error::MalformedRow {
                path: path.to_path_buf(),
                row,
                reason: format!("cell {:?} is not a number", &record[col]),
            })
        };
        let t = parse(t_col)?;
        if let Some(&prev) = timestamps.last() {
            if t <= prev {
                return Err(Error::NonMonotoneTimestamp { row });
            }
        }
        timestamps.push(t);
        for (ch, (_, col)) in channels.iter_mut().zip(&axis_cols) {
            ch.push(parse(*col)?);
        }
    }

    let sensor_id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "sensor".to_string());
    let axis_names = axis_cols.into_iter().map(|(name, _)| name).collect();
    SensorSeries::new(sensor_id, timestamps, axis_names, channels)
}

fn csv_error(path: &Path, row: usize, e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::MalformedRow {
            path: path.to_path_buf(),
            row,
            reason: format!("{other:?}"),
        },
    }
}

/// Rescale every axis onto `[-1, 1]` with the axis-local affine map that
/// sends `[min, max]` to `[-1, 1]`. Constant axes are an error.
pub fn rescale(series: &SensorSeries) -> Result<RescaledSeries> {
    rescale_with(series, ConstantPolicy::Error)
}

/// [`rescale`] with an explicit constant-axis policy.
pub fn rescale_with(series: &SensorSeries, policy: ConstantPolicy) -> Result<RescaledSeries> {
    let mut values = Vec::with_capacity(series.channels().len());
    let mut source_min = Vec::new();
    let mut source_max = Vec::new();
    for (name, ch) in series.axis_names().iter().zip(series.channels()) {
        let min = ch.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = ch.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if max == min {
            match policy {
                ConstantPolicy::Error => {
                    return Err(Error::ConstantSeries { axis: name.clone() })
                }
                ConstantPolicy::Zero => {
                    values.push(vec![0.0; ch.len()]);
                    source_min.push(min);
                    source_max.push(max);
                    continue;
                }
            }
        }
        let range = max - min;
        // 2(s - min)/range - 1 maps min and max to exactly -1 and +1.
        values.push(ch.iter().map(|&s| 2.0 * (s - min) / range - 1.0).collect());
        source_min.push(min);
        source_max.push(max);
    }
    Ok(RescaledSeries {
        values,
        source_min,
        source_max,
        timestamps: series.timestamps().to_vec(),
        axis_names: series.axis_names().to_vec(),
    })
}
