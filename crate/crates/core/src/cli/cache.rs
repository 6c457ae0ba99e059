//! Persisted memo tables.
//!
//! Layout, all integers little-endian:
//! magic `DIAMEMO\0`, version `u32`, table count `u32`, then per table a
//! `u32`-prefixed UTF-8 name, a `u64` entry count, and per entry a sign byte
//! (`0` zero, `1` positive, `2` negative) followed by a `u32`-prefixed magnitude.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};
use std::path::Path;

use num_bigint::{BigInt, Sign};

use crate::error::{Error, Result};
use crate::exact::Integer;

const MAGIC: &[u8; 8] = b"DIAMEMO\0";
pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct MemoCache {
    tables: BTreeMap<String, Vec<Integer>>,
}

impl MemoCache {
    /// Reads `path`, or starts empty when it does not exist yet.
    pub fn load(path: &Path) -> Result<Self> {
        match fs::read(path) {
            Ok(bytes) => Self::decode(&bytes),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Self::default()),
            Err(e) => Err(e.into()),
        }
    }

    /// Writes to a sibling temporary file, then renames over `path`.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, self.encode())?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// The stored prefix for `name` when it covers indices `0..=to`.
    pub fn get(&self, name: &str, to: usize) -> Option<&[Integer]> {
        self.tables.get(name).filter(|t| t.len() > to).map(Vec::as_slice)
    }

    /// Keeps the longer of the stored and the offered table.
    pub fn insert(&mut self, name: &str, values: Vec<Integer>) {
        let slot = self.tables.entry(name.to_string()).or_default();
        if values.len() > slot.len() {
            *slot = values;
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.tables.keys().map(String::as_str)
    }

    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&CACHE_VERSION.to_le_bytes());
        out.extend_from_slice(&(self.tables.len() as u32).to_le_bytes());
        for (name, values) in &self.tables {
            out.extend_from_slice(&(name.len() as u32).to_le_bytes());
            out.extend_from_slice(name.as_bytes());
            out.extend_from_slice(&(values.len() as u64).to_le_bytes());
            for v in values {
                let (sign, mag) = v.to_bytes_le();
                out.push(match sign {
                    Sign::NoSign => 0,
                    Sign::Plus => 1,
                    Sign::Minus => 2,
                });
                let mag: &[u8] = if sign == Sign::NoSign { &[] } else { &mag };
                out.extend_from_slice(&(mag.len() as u32).to_le_bytes());
                out.extend_from_slice(mag);
            }
        }
        out
    }

    pub fn decode(mut bytes: &[u8]) -> Result<Self> {
        let r = &mut bytes;
        let mut magic = [0u8; 8];
        read_exact(r, &mut magic)?;
        if &magic != MAGIC {
            return Err(Error::Cache("not a memo file".into()));
        }
        let version = read_u32(r)?;
        if version != CACHE_VERSION {
            return Err(Error::Cache(format!("version {version}, expected {CACHE_VERSION}")));
        }
        let mut tables = BTreeMap::new();
        for _ in 0..read_u32(r)? {
            let mut name = vec![0u8; read_u32(r)? as usize];
            read_exact(r, &mut name)?;
            let name = String::from_utf8(name).map_err(|_| Error::Cache("table name is not UTF-8".into()))?;
            let count = read_u64(r)?;
            if count > r.len() as u64 {
                return Err(Error::Cache(format!("table {name} claims {count} entries")));
            }
            let mut values = Vec::with_capacity(count as usize);
            for _ in 0..count {
                let mut sign = [0u8; 1];
                read_exact(r, &mut sign)?;
                let sign = match sign[0] {
                    0 => Sign::NoSign,
                    1 => Sign::Plus,
                    2 => Sign::Minus,
                    s => return Err(Error::Cache(format!("bad sign byte {s}"))),
                };
                let len = read_u32(r)? as usize;
                if len > r.len() {
                    return Err(Error::Cache("truncated entry".into()));
                }
                let (mag, rest) = r.split_at(len);
                values.push(BigInt::from_bytes_le(sign, mag));
                *r = rest;
            }
            tables.insert(name, values);
        }
        if !r.is_empty() {
            return Err(Error::Cache(format!("{} trailing bytes", r.len())));
        }
        Ok(MemoCache { tables })
    }
}

fn read_exact(r: &mut &[u8], buf: &mut [u8]) -> Result<()> {
    r.read_exact(buf).map_err(|_| Error::Cache("truncated file".into()))
}

fn read_u32(r: &mut &[u8]) -> Result<u32> {
    let mut b = [0u8; 4];
    read_exact(r, &mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_u64(r: &mut &[u8]) -> Result<u64> {
    let mut b = [0u8; 8];
    read_exact(r, &mut b)?;
    Ok(u64::from_le_bytes(b))
}
