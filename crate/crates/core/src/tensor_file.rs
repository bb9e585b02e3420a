//! Binary tensor files.
//!
//! Layout (little-endian):
//!
//! ```text
//! b"SPSE1"     magic, 5 bytes
//! u8           dtype: 1 = u64 counts, 2 = f64 reals
//! u32 u32 u32  dims: n, n, K
//! payload      n*n*K 8-byte values, row-major, k fastest
//! ```
//!
//! A JSON sidecar `<file>.json` carries run metadata.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{PathCountTensor, Tensor3};

pub const MAGIC: &[u8; 5] = b"SPSE1";
pub const HEADER_LEN: usize = 5 + 1 + 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum DType {
    Counts = 1,
    Reals = 2,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TensorData {
    Counts(Tensor3<u64>),
    Reals(Tensor3<f64>),
}

impl TensorData {
    pub fn dtype(&self) -> DType {
        match self {
            TensorData::Counts(_) => DType::Counts,
            TensorData::Reals(_) => DType::Reals,
        }
    }

    /// Count tensor; the saturation flag is recovered from clamped entries.
    pub fn into_counts(self) -> Result<PathCountTensor> {
        match self {
            TensorData::Counts(t) => {
                let saturated = t.as_slice().contains(&u64::MAX);
                Ok(PathCountTensor::from_counts(t, saturated))
            }
            TensorData::Reals(_) => Err(Error::input("expected a count tensor (dtype 1), found reals (dtype 2)")),
        }
    }

    pub fn into_reals(self) -> Result<Tensor3<f64>> {
        match self {
            TensorData::Reals(t) => Ok(t),
            TensorData::Counts(_) => Err(Error::input("expected a real tensor (dtype 2), found counts (dtype 1)")),
        }
    }
}

pub fn encode(data: &TensorData) -> Vec<u8> {
    let (n, k) = match data {
        TensorData::Counts(t) => (t.n(), t.k_max()),
        TensorData::Reals(t) => (t.n(), t.k_max()),
    };
    let mut out = Vec::with_capacity(HEADER_LEN + n * n * k * 8);
    out.extend_from_slice(MAGIC);
    out.push(data.dtype() as u8);
    for d in [n, n, k] {
        out.extend_from_slice(&(d as u32).to_le_bytes());
    }
    match data {
        TensorData::Counts(t) => t.as_slice().iter().for_each(|v| out.extend_from_slice(&v.to_le_bytes())),
        TensorData::Reals(t) => t.as_slice().iter().for_each(|v| out.extend_from_slice(&v.to_le_bytes())),
    }
    out
}

pub fn decode(bytes: &[u8]) -> Result<TensorData> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::parse(format!("tensor file too short ({} bytes)", bytes.len())));
    }
    if &bytes[..5] != MAGIC {
        return Err(Error::parse("bad magic, not an SPSE1 tensor file"));
    }
    let dtype = bytes[5];
    let dim = |at: usize| u32::from_le_bytes(bytes[at..at + 4].try_into().unwrap()) as usize;
    let (n, n2, k) = (dim(6), dim(10), dim(14));
    if n != n2 {
        return Err(Error::parse(format!("non-square tensor {n}x{n2}x{k}")));
    }
    let payload = &bytes[HEADER_LEN..];
    let expected = n
        .checked_mul(n)
        .and_then(|x| x.checked_mul(k))
        .and_then(|x| x.checked_mul(8))
        .ok_or_else(|| Error::parse("tensor dimensions overflow"))?;
    if payload.len() != expected {
        return Err(Error::parse(format!(
            "payload has {} bytes, expected {expected} for {n}x{n}x{k}",
            payload.len()
        )));
    }
    let words = payload.chunks_exact(8).map(|c| c.try_into().unwrap());
    match dtype {
        1 => Ok(TensorData::Counts(Tensor3::from_vec(n, k, words.map(u64::from_le_bytes).collect())?)),
        2 => Ok(TensorData::Reals(Tensor3::from_vec(n, k, words.map(f64::from_le_bytes).collect())?)),
        other => Err(Error::parse(format!("unknown dtype tag {other}"))),
    }
}

pub fn write_tensor(path: &Path, data: &TensorData) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(&encode(data))?;
    Ok(())
}

pub fn read_tensor(path: &Path) -> Result<TensorData> {
    decode(&std::fs::read(path)?)
}

/// Run metadata stored next to a tensor file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sidecar {
    pub config: serde_json::Value,
    pub seed: u64,
    pub saturated: bool,
    pub wall_time_ms: f64,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dag_count: Option<usize>,
}

pub fn sidecar_path(tensor_path: &Path) -> PathBuf {
    let mut s = tensor_path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

pub fn write_sidecar(tensor_path: &Path, meta: &Sidecar) -> Result<()> {
    let text = serde_json::to_string_pretty(meta)?;
    std::fs::write(sidecar_path(tensor_path), text + "\n")?;
    Ok(())
}

pub fn read_sidecar(tensor_path: &Path) -> Result<Sidecar> {
    let text = std::fs::read_to_string(sidecar_path(tensor_path))?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn counts(n: usize, k: usize, data: Vec<u64>) -> TensorData {
        TensorData::Counts(Tensor3::from_vec(n, k, data).unwrap())
    }

    #[test]
    fn header_layout() {
        let bytes = encode(&counts(1, 2, vec![1, 258]));
        assert_eq!(&bytes[..6], b"SPSE1\x01");
        assert_eq!(&bytes[6..18], &[1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0]);
        assert_eq!(bytes.len(), HEADER_LEN + 16);
        assert_eq!(&bytes[26..28], &[2, 1]);
    }

    #[test]
    fn rejects_corruption() {
        let good = encode(&counts(2, 1, vec![0, 1, 1, 0]));
        let mut bad_magic = good.clone();
        bad_magic[0] = b'X';
        assert!(matches!(decode(&bad_magic), Err(Error::Parse(_))));
        assert!(matches!(decode(&good[..good.len() - 1]), Err(Error::Parse(_))));
        assert!(matches!(decode(&good[..10]), Err(Error::Parse(_))));
        let mut bad_dtype = good.clone();
        bad_dtype[5] = 9;
        assert!(matches!(decode(&bad_dtype), Err(Error::Parse(_))));
        let mut trailing = good;
        trailing.push(0);
        assert!(matches!(decode(&trailing), Err(Error::Parse(_))));
    }

    #[test]
    fn dtype_conversions() {
        assert!(counts(1, 1, vec![3]).into_reals().is_err());
        let t = counts(1, 1, vec![u64::MAX]).into_counts().unwrap();
        assert!(t.saturated());
    }

    proptest! {
        #[test]
        fn round_trip_counts(n in 0usize..5, k in 1usize..4, seed in any::<u64>()) {
            let data: Vec<u64> = (0..n * n * k).map(|i| seed.rotate_left(i as u32) ^ i as u64).collect();
            let t = counts(n, k, data);
            prop_assert_eq!(decode(&encode(&t)).unwrap(), t);
        }

        #[test]
        fn round_trip_reals_bit_exact(values in proptest::collection::vec(any::<f64>(), 8)) {
            let t = TensorData::Reals(Tensor3::from_vec(2, 2, values.clone()).unwrap());
            let back = decode(&encode(&t)).unwrap().into_reals().unwrap();
            let bits: Vec<u64> = back.as_slice().iter().map(|x| x.to_bits()).collect();
            let orig: Vec<u64> = values.iter().map(|x| x.to_bits()).collect();
            prop_assert_eq!(bits, orig);
        }
    }
}
