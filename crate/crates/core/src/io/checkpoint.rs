//! Parameter checkpoints: a text index followed by concatenated GAFT records.
//!
//! ```text
//! GAFTIDX 1
//! <name> <offset> <length>
//! ...
//! <empty line>
//! <binary GAFT records back to back>
//! ```
//!
//! Offsets are relative to the first byte after the empty line. Entry order
//! is preserved, so identical inputs produce byte-identical files.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::io::gaft::GaftTensor;

const HEADER: &str = "GAFTIDX 1";

pub fn write_checkpoint(path: &Path, entries: &[(String, GaftTensor)]) -> Result<()> {
    let blobs: Vec<Vec<u8>> = entries.iter().map(|(_, t)| t.to_bytes()).collect();
    let mut index = String::new();
    index.push_str(HEADER);
    index.push('\n');
    let mut offset = 0usize;
    for ((name, _), blob) in entries.iter().zip(&blobs) {
        assert!(
            !name.contains(char::is_whitespace),
            "tensor name {name:?} contains whitespace"
        );
        index.push_str(&format!("{name} {offset} {}\n", blob.len()));
        offset += blob.len();
    }
    index.push('\n');

    let mut out = Vec::with_capacity(index.len() + offset);
    out.write_all(index.as_bytes()).expect("write to vec");
    for blob in &blobs {
        out.extend_from_slice(blob);
    }
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

pub fn read_checkpoint(path: &Path) -> Result<Vec<(String, GaftTensor)>> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let sep = find_blank_line(&bytes)
        .ok_or_else(|| Error::format(path, "missing index terminator"))?;
    let index = std::str::from_utf8(&bytes[..sep])
        .map_err(|_| Error::format(path, "index is not UTF-8"))?;
    let blob = &bytes[sep + 2..];

    let mut lines = index.lines();
    if lines.next() != Some(HEADER) {
        return Err(Error::format(path, "bad index header"));
    }
    let mut entries = Vec::new();
    for line in lines {
        let mut parts = line.split(' ');
        let (name, off, len) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
            (Some(n), Some(o), Some(l), None) => (n, o, l),
            _ => return Err(Error::format(path, format!("bad index line {line:?}"))),
        };
        let off: usize = off
            .parse()
            .map_err(|_| Error::format(path, format!("bad offset in {line:?}")))?;
        let len: usize = len
            .parse()
            .map_err(|_| Error::format(path, format!("bad length in {line:?}")))?;
        if off + len > blob.len() {
            return Err(Error::format(path, format!("entry {name:?} out of bounds")));
        }
        let (tensor, used) = GaftTensor::from_bytes(&blob[off..off + len])
            .map_err(|reason| Error::format(path, format!("entry {name:?}: {reason}")))?;
        if used != len {
            return Err(Error::format(path, format!("entry {name:?}: length mismatch")));
        }
        entries.push((name.to_string(), tensor));
    }
    Ok(entries)
}

fn find_blank_line(bytes: &[u8]) -> Option<usize> {
    bytes.windows(2).position(|w| w == b"\n\n").map(|p| p + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::gaft::GaftData;

    #[test]
    fn round_trip_preserves_order_and_content() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("model.ckpt");
        let entries = vec![
            ("mod.imu.W1".to_string(), GaftTensor::f32(vec![2, 2], vec![1.0, 2.0, 3.0, 4.0])),
            ("mod.imu.b1".to_string(), GaftTensor::f32(vec![2], vec![-0.5, 0.5])),
            ("att.W".to_string(), GaftTensor::f32(vec![3], vec![0.1, 0.2, 0.3])),
        ];
        write_checkpoint(&path, &entries).unwrap();
        let back = read_checkpoint(&path).unwrap();
        assert_eq!(back, entries);
    }

    #[test]
    fn identical_entries_write_identical_bytes() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.ckpt");
        let b = dir.path().join("b.ckpt");
        let entries = vec![(
            "head.W2".to_string(),
            GaftTensor {
                dims: vec![4],
                data: GaftData::F32(vec![9.0, 8.0, 7.0, 6.0]),
            },
        )];
        write_checkpoint(&a, &entries).unwrap();
        write_checkpoint(&b, &entries).unwrap();
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    }

    #[test]
    fn garbage_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("junk.ckpt");
        std::fs::write(&path, b"not a checkpoint\n\nxxxx").unwrap();
        assert!(matches!(read_checkpoint(&path), Err(Error::Format { .. })));
    }
}
