//! Binary PGM (P5) reading and writing, maxval 255.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

/// Write `pixels` (row-major, `width * height` bytes) as a binary P5 file.
pub fn write_pgm(path: &Path, width: usize, height: usize, pixels: &[u8]) -> Result<()> {
    if pixels.len() != width * height {
        return Err(Error::shape(format!(
            "pgm payload {} bytes, expected {}x{}",
            pixels.len(),
            width,
            height
        )));
    }
    let mut buf = Vec::with_capacity(pixels.len() + 32);
    write!(buf, "P5\n{width} {height}\n255\n").expect("write to vec");
    buf.extend_from_slice(pixels);
    fs::write(path, buf).map_err(|e| Error::io(path, e))
}

/// Read a binary P5 file; returns `(width, height, pixels)`.
pub fn read_pgm(path: &Path) -> Result<(usize, usize, Vec<u8>)> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let mut pos = 0usize;

    let magic = take_token(&bytes, &mut pos)
        .ok_or_else(|| Error::format(path, "missing magic"))?;
    if magic != b"P5" {
        return Err(Error::format(path, "not a binary PGM (expected P5)"));
    }
    let width = parse_dim(&bytes, &mut pos, path, "width")?;
    let height = parse_dim(&bytes, &mut pos, path, "height")?;
    let maxval = parse_dim(&bytes, &mut pos, path, "maxval")?;
    if maxval != 255 {
        return Err(Error::format(path, format!("unsupported maxval {maxval}")));
    }
    // Exactly one whitespace byte separates the header from the payload.
    pos += 1;
    let expected = width * height;
    if bytes.len() < pos || bytes.len() - pos != expected {
        return Err(Error::format(
            path,
            format!(
                "payload is {} bytes, expected {}",
                bytes.len().saturating_sub(pos),
                expected
            ),
        ));
    }
    Ok((width, height, bytes[pos..].to_vec()))
}

fn parse_dim(bytes: &[u8], pos: &mut usize, path: &Path, what: &str) -> Result<usize> {
    let tok = take_token(bytes, pos)
        .ok_or_else(|| Error::format(path, format!("missing {what}")))?;
    std::str::from_utf8(tok)
        .ok()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::format(path, format!("bad {what}")))
}

/// Advance past whitespace and `#` comments, then return the next token.
/// Leaves `pos` at the whitespace byte terminating the token.
fn take_token<'a>(bytes: &'a [u8], pos: &mut usize) -> Option<&'a [u8]> {
    loop {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        if *pos < bytes.len() && bytes[*pos] == b'#' {
            while *pos < bytes.len() && bytes[*pos] != b'\n' {
                *pos += 1;
            }
            continue;
        }
        break;
    }
    let start = *pos;
    while *pos < bytes.len() && !bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
    (*pos > start).then(|| &bytes[start..*pos])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("img.pgm");
        let pixels: Vec<u8> = (0..12).map(|i| (i * 20) as u8).collect();
        write_pgm(&path, 4, 3, &pixels).unwrap();
        let (w, h, back) = read_pgm(&path).unwrap();
        assert_eq!((w, h), (4, 3));
        assert_eq!(back, pixels);

        // Rewriting the decoded image reproduces the file byte for byte.
        let original = std::fs::read(&path).unwrap();
        let path2 = dir.path().join("img2.pgm");
        write_pgm(&path2, w, h, &back).unwrap();
        assert_eq!(std::fs::read(&path2).unwrap(), original);
    }

    #[test]
    fn header_comments_are_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.pgm");
        std::fs::write(&path, b"P5\n# made elsewhere\n2 1\n255\n\xAA\xBB").unwrap();
        let (w, h, px) = read_pgm(&path).unwrap();
        assert_eq!((w, h), (2, 1));
        assert_eq!(px, vec![0xAA, 0xBB]);
    }

    #[test]
    fn truncated_payload_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.pgm");
        std::fs::write(&path, b"P5\n2 2\n255\n\x01\x02").unwrap();
        assert!(matches!(read_pgm(&path), Err(Error::Format { .. })));
    }
}
