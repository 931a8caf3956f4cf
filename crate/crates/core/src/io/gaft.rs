//! GAFT tensor files: a tiny self-describing binary container.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! magic    b"GAFT"
//! version  u32 = 1
//! dtype    u8   (0 = f32, 1 = u8)
//! ndim     u32
//! dims     u32 * ndim
//! payload  f32-LE row-major, or raw u8
//! ```
//!
//! Round trips are bit-exact: `write(read(file)) == file`.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"GAFT";
const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub enum GaftData {
    F32(Vec<f32>),
    U8(Vec<u8>),
}

impl GaftData {
    pub fn len(&self) -> usize {
        match self {
            GaftData::F32(v) => v.len(),
            GaftData::U8(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// An n-dimensional tensor with explicit dims and payload dtype.
#[derive(Debug, Clone, PartialEq)]
pub struct GaftTensor {
    pub dims: Vec<u32>,
    pub data: GaftData,
}

impl GaftTensor {
    pub fn f32(dims: Vec<u32>, data: Vec<f32>) -> Self {
        let t = GaftTensor {
            dims,
            data: GaftData::F32(data),
        };
        t.assert_consistent();
        t
    }

    pub fn u8(dims: Vec<u32>, data: Vec<u8>) -> Self {
        let t = GaftTensor {
            dims,
            data: GaftData::U8(data),
        };
        t.assert_consistent();
        t
    }

    /// Convenience: store f64 values as f32.
    pub fn from_f64(dims: Vec<u32>, data: &[f64]) -> Self {
        GaftTensor::f32(dims, data.iter().map(|&v| v as f32).collect())
    }

    pub fn element_count(&self) -> usize {
        self.dims.iter().map(|&d| d as usize).product()
    }

    fn assert_consistent(&self) {
        assert_eq!(
            self.element_count(),
            self.data.len(),
            "dims/payload mismatch"
        );
    }

    /// Serialize into the container byte layout.
    pub fn to_bytes(&self) -> Vec<u8> {
        let payload_len = match &self.data {
            GaftData::F32(v) => v.len() * 4,
            GaftData::U8(v) => v.len(),
        };
        let mut out = Vec::with_capacity(13 + 4 * self.dims.len() + payload_len);
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.push(match &self.data {
            GaftData::F32(_) => 0,
            GaftData::U8(_) => 1,
        });
        out.extend_from_slice(&(self.dims.len() as u32).to_le_bytes());
        for d in &self.dims {
            out.extend_from_slice(&d.to_le_bytes());
        }
        match &self.data {
            GaftData::F32(v) => {
                for x in v {
                    out.extend_from_slice(&x.to_le_bytes());
                }
            }
            GaftData::U8(v) => out.extend_from_slice(v),
        }
        out
    }

    /// Parse one tensor from `bytes`, returning it and the bytes consumed.
    pub fn from_bytes(bytes: &[u8]) -> std::result::Result<(Self, usize), String> {
        let mut pos = 0usize;
        let take = |pos: &mut usize, n: usize| -> std::result::Result<&[u8], String> {
            if *pos + n > bytes.len() {
                return Err(format!("truncated at byte {}", *pos));
            }
            let s = &bytes[*pos..*pos + n];
            *pos += n;
            Ok(s)
        };

        if take(&mut pos, 4)? != MAGIC {
            return Err("bad magic".into());
        }
        let version = u32::from_le_bytes(take(&mut pos, 4)?.try_into().unwrap());
        if version != VERSION {
            return Err(format!("unsupported version {version}"));
        }
        let dtype = take(&mut pos, 1)?[0];
        let ndim = u32::from_le_bytes(take(&mut pos, 4)?.try_into().unwrap()) as usize;
        let mut dims = Vec::with_capacity(ndim);
        for _ in 0..ndim {
            dims.push(u32::from_le_bytes(take(&mut pos, 4)?.try_into().unwrap()));
        }
        let count: usize = dims.iter().map(|&d| d as usize).product();
        let data = match dtype {
            0 => {
                let raw = take(&mut pos, count * 4)?;
                GaftData::F32(
                    raw.chunks_exact(4)
                        .map(|c| f32::from_le_bytes(c.try_into().unwrap()))
                        .collect(),
                )
            }
            1 => GaftData::U8(take(&mut pos, count)?.to_vec()),
            other => return Err(format!("unknown dtype byte {other}")),
        };
        Ok((GaftTensor { dims, data }, pos))
    }
}

/// Write one tensor to `path`.
pub fn write_gaft(path: &Path, tensor: &GaftTensor) -> Result<()> {
    fs::write(path, tensor.to_bytes()).map_err(|e| Error::io(path, e))
}

/// Read one tensor from `path`; trailing bytes are an error.
pub fn read_gaft(path: &Path) -> Result<GaftTensor> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let (tensor, used) =
        GaftTensor::from_bytes(&bytes).map_err(|reason| Error::format(path, reason))?;
    if used != bytes.len() {
        return Err(Error::format(
            path,
            format!("{} trailing bytes", bytes.len() - used),
        ));
    }
    Ok(tensor)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f32_round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.gaft");
        let t = GaftTensor::f32(vec![2, 3], vec![0.0, -1.5, 3.25, f32::MIN, f32::MAX, 1e-30]);
        write_gaft(&path, &t).unwrap();
        let back = read_gaft(&path).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_bytes(), std::fs::read(&path).unwrap());
    }

    #[test]
    fn u8_round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("u.gaft");
        let t = GaftTensor::u8(vec![3, 2, 2], (0..12).collect());
        write_gaft(&path, &t).unwrap();
        assert_eq!(read_gaft(&path).unwrap(), t);
    }

    #[test]
    fn corrupt_magic_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.gaft");
        std::fs::write(&path, b"NOPE\x01\x00\x00\x00").unwrap();
        assert!(matches!(read_gaft(&path), Err(Error::Format { .. })));
    }

    #[test]
    fn truncated_payload_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("short.gaft");
        let mut bytes = GaftTensor::f32(vec![4], vec![1.0; 4]).to_bytes();
        bytes.truncate(bytes.len() - 3);
        std::fs::write(&path, bytes).unwrap();
        assert!(matches!(read_gaft(&path), Err(Error::Format { .. })));
    }
}
