//! On-disk persistence for the `h_k` / `q_k` series cache.
//!
//! Layout (little endian): magic `SQKC`, `u32` format version, `u32` entry
//! count, then per entry `u8` kind, `u32` weight, `u32` coefficient count and
//! for each coefficient a `u32` byte length followed by its UTF-8 text form.
//! A file with a different magic or version is ignored.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use super::{cached_series, insert_series, SeriesKind, SymSeries};
use crate::polyring::GradedPoly;

const MAGIC: &[u8; 4] = b"SQKC";
pub const FORMAT_VERSION: u32 = 1;
pub const CACHE_FILE: &str = "series-cache-v1.bin";

pub fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

pub fn encode<'a>(series: impl IntoIterator<Item = &'a SymSeries>) -> Vec<u8> {
    let series: Vec<&SymSeries> = series.into_iter().collect();
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.extend_from_slice(&(series.len() as u32).to_le_bytes());
    for s in series {
        out.push(match s.kind {
            SeriesKind::CompleteH => 0,
            SeriesKind::NeutralQ => 1,
        });
        out.extend_from_slice(&s.weight.to_le_bytes());
        out.extend_from_slice(&(s.coefficients.len() as u32).to_le_bytes());
        for c in &s.coefficients {
            let text = c.to_string();
            out.extend_from_slice(&(text.len() as u32).to_le_bytes());
            out.extend_from_slice(text.as_bytes());
        }
    }
    out
}

fn invalid(msg: &str) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg.to_string())
}

fn read_u32(r: &mut impl Read) -> io::Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

/// `Ok(None)` for a foreign magic or version.
pub fn decode(bytes: &[u8]) -> io::Result<Option<Vec<SymSeries>>> {
    let mut r = bytes;
    let mut magic = [0u8; 4];
    if r.read_exact(&mut magic).is_err() || &magic != MAGIC {
        return Ok(None);
    }
    if read_u32(&mut r)? != FORMAT_VERSION {
        return Ok(None);
    }
    let count = read_u32(&mut r)?;
    let mut out = Vec::new();
    for _ in 0..count {
        let mut kind = [0u8; 1];
        r.read_exact(&mut kind)?;
        let kind = match kind[0] {
            0 => SeriesKind::CompleteH,
            1 => SeriesKind::NeutralQ,
            _ => return Err(invalid("unknown series kind")),
        };
        let weight = read_u32(&mut r)?;
        let n = read_u32(&mut r)?;
        if n != weight + 1 {
            return Err(invalid("coefficient count does not match weight"));
        }
        let mut coefficients = Vec::with_capacity(n as usize);
        for _ in 0..n {
            let len = read_u32(&mut r)? as usize;
            if len > r.len() {
                return Err(invalid("truncated coefficient"));
            }
            let (text, rest) = r.split_at(len);
            r = rest;
            let text = std::str::from_utf8(text).map_err(|_| invalid("coefficient not UTF-8"))?;
            let poly: GradedPoly = text.parse().map_err(|_| invalid("coefficient does not parse"))?;
            coefficients.push(poly.with_cutoff(Some(weight)));
        }
        out.push(SymSeries { kind, weight, coefficients });
    }
    Ok(Some(out))
}

/// Loads `dir/series-cache-v1.bin` into the in-memory cache, if present.
/// Returns the number of series loaded.
pub fn load(dir: &Path) -> io::Result<usize> {
    let path = cache_path(dir);
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e),
    };
    let Some(series) = decode(&bytes)? else {
        return Ok(0);
    };
    let n = series.len();
    for s in series {
        insert_series(s);
    }
    Ok(n)
}

/// Writes every cached series to `dir/series-cache-v1.bin`.
pub fn save(dir: &Path) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let cached = cached_series();
    let bytes = encode(cached.iter().map(|s| s.as_ref()));
    let tmp = dir.join(format!("{CACHE_FILE}.tmp"));
    fs::File::create(&tmp)?.write_all(&bytes)?;
    fs::rename(tmp, cache_path(dir))
}
