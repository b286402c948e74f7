//! On-disk cache of Kazhdan–Lusztig tables.
//!
//! File layout, all integers little-endian:
//!
//! ```text
//! magic   b"KOSTKL\n\0"
//! version u32
//! n       u32
//! npolys  u32
//! polys   npolys × (len u32, len × i64)
//! rows    n! × (count u32, count × (x u16, id u16))
//! ```
//!
//! Row `w` lists every `x <= w` with the id of `P_{x,w}`. A file that fails
//! to parse or to validate is treated as missing and rebuilt.

use std::fs;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use kostant_core::hecke::kl::NOT_BELOW;
use kostant_core::hecke::KlTable;
use kostant_core::{Hecke, SymmetricGroup};

use crate::error::{Error, Result};

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "KOSTANT_CACHE_DIR";

/// Cache format version.
pub const CACHE_VERSION: u32 = 1;

const MAGIC: &[u8; 8] = b"KOSTKL\n\0";

/// Where a table came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    /// Read from the cache file.
    Hit,
    /// Computed and written to the cache file.
    Built,
    /// Computed without a cache directory.
    Uncached,
}

/// The cache directory: an explicit choice, else the environment variable.
pub fn resolve_cache_dir(explicit: Option<&Path>) -> Option<PathBuf> {
    explicit.map(Path::to_path_buf).or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
}

/// The cache file for `S_n` inside `dir`.
pub fn cache_file(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("kl-s{n}.v{CACHE_VERSION}.bin"))
}

/// Serialises a table.
pub fn encode(group: &SymmetricGroup, kl: &KlTable) -> Result<Vec<u8>> {
    let (table, polys) = kl.raw_parts();
    let size = group.order();
    if size > u16::MAX as usize || polys.len() > u16::MAX as usize {
        return Err(Error::Config(format!("S_{} is too large for the cache format", group.degree())));
    }
    let mut out = Vec::with_capacity(16 + table.len() / 2);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    out.extend_from_slice(&(group.degree() as u32).to_le_bytes());
    out.extend_from_slice(&(polys.len() as u32).to_le_bytes());
    for p in polys {
        out.extend_from_slice(&(p.len() as u32).to_le_bytes());
        for c in p {
            out.extend_from_slice(&c.to_le_bytes());
        }
    }
    for row in table.chunks(size) {
        let below: Vec<(usize, u32)> = row.iter().copied().enumerate().filter(|&(_, id)| id != NOT_BELOW).collect();
        out.extend_from_slice(&(below.len() as u32).to_le_bytes());
        for (x, id) in below {
            out.extend_from_slice(&(x as u16).to_le_bytes());
            out.extend_from_slice(&(id as u16).to_le_bytes());
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn take<const K: usize>(&mut self) -> Option<[u8; K]> {
        let b = self.bytes.get(self.pos..self.pos + K)?;
        self.pos += K;
        b.try_into().ok()
    }

    fn u16(&mut self) -> Option<u16> {
        self.take().map(u16::from_le_bytes)
    }

    fn u32(&mut self) -> Option<u32> {
        self.take().map(u32::from_le_bytes)
    }

    fn i64(&mut self) -> Option<i64> {
        self.take().map(i64::from_le_bytes)
    }
}

/// Deserialises a table for `group`; the error says why it was rejected.
pub fn decode(group: &SymmetricGroup, bytes: &[u8]) -> std::result::Result<KlTable, String> {
    let mut c = Cursor { bytes, pos: 0 };
    if c.take::<8>().as_ref() != Some(MAGIC) {
        return Err("bad magic".into());
    }
    let version = c.u32().ok_or("truncated header")?;
    if version != CACHE_VERSION {
        return Err(format!("version {version}, expected {CACHE_VERSION}"));
    }
    let n = c.u32().ok_or("truncated header")? as usize;
    if n != group.degree() {
        return Err(format!("degree {n}, expected {}", group.degree()));
    }
    let npolys = c.u32().ok_or("truncated header")? as usize;
    let mut polys = Vec::with_capacity(npolys);
    for _ in 0..npolys {
        let len = c.u32().ok_or("truncated polynomial")? as usize;
        let p: Option<Vec<i64>> = (0..len).map(|_| c.i64()).collect();
        polys.push(p.ok_or("truncated polynomial")?);
    }
    let size = group.order();
    let mut table = vec![NOT_BELOW; size * size];
    for w in 0..size {
        let count = c.u32().ok_or("truncated row")? as usize;
        for _ in 0..count {
            let x = c.u16().ok_or("truncated row")? as usize;
            let id = c.u16().ok_or("truncated row")? as u32;
            if x >= size {
                return Err(format!("element index {x} out of range"));
            }
            table[w * size + x] = id;
        }
    }
    if c.pos != bytes.len() {
        return Err("trailing bytes".into());
    }
    KlTable::from_raw_parts(group, table, polys).map_err(|e| e.to_string())
}

fn read_file(path: &Path) -> Result<Vec<u8>> {
    let f = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut bytes = Vec::new();
    BufReader::new(f).read_to_end(&mut bytes).map_err(|e| Error::io(path, e))?;
    Ok(bytes)
}

/// Writes through a temporary file and a rename, so readers never see a
/// partial file.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let f = fs::File::create(&tmp).map_err(|e| Error::io(&tmp, e))?;
        let mut w = BufWriter::new(f);
        w.write_all(bytes).map_err(|e| Error::io(&tmp, e))?;
        w.into_inner().map_err(|e| Error::io(&tmp, e.into_error()))?.sync_all().map_err(|e| Error::io(&tmp, e))?;
    }
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

/// Builds the Hecke context for `S_n`, reading and writing the table in
/// `dir` when given.
pub fn load_hecke(n: usize, dir: Option<&Path>) -> Result<(Hecke, CacheStatus)> {
    let group = SymmetricGroup::new(n)?;
    let Some(dir) = dir else {
        let kl = KlTable::build(&group)?;
        return Ok((Hecke::from_parts(group, kl)?, CacheStatus::Uncached));
    };
    let path = cache_file(dir, n);
    if path.exists() {
        if let Ok(kl) = decode(&group, &read_file(&path)?) {
            return Ok((Hecke::from_parts(group, kl)?, CacheStatus::Hit));
        }
    }
    let kl = KlTable::build(&group)?;
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    write_atomic(&path, &encode(&group, &kl)?)?;
    Ok((Hecke::from_parts(group, kl)?, CacheStatus::Built))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_s5() {
        let g = SymmetricGroup::new(5).unwrap();
        let kl = KlTable::build(&g).unwrap();
        let bytes = encode(&g, &kl).unwrap();
        let back = decode(&g, &bytes).unwrap();
        assert_eq!(back.raw_parts(), kl.raw_parts());
    }

    #[test]
    fn rejects_damage() {
        let g = SymmetricGroup::new(4).unwrap();
        let kl = KlTable::build(&g).unwrap();
        let bytes = encode(&g, &kl).unwrap();
        assert!(decode(&g, &bytes[..bytes.len() - 1]).is_err());
        let mut bad = bytes.clone();
        bad[8] = 9;
        assert!(decode(&g, &bad).unwrap_err().contains("version"));
        assert!(decode(&SymmetricGroup::new(3).unwrap(), &bytes).is_err());
    }
}
