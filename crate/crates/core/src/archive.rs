//! Binary field archives and CSV export.
//!
//! Archive layout, all little-endian:
//!
//! ```text
//! magic   8 bytes   "DPSFLD01"
//! header  4 × u32   kind (1 = spinor, 2 = wigner, 3 = cross), n, 0, 0
//! params  4 × f64   x_min, x_max, hbar, mass
//! payload f64 ...   row-major; complex values interleaved as (re, im)
//! ```
//!
//! Spinor payloads are `n × 4` complex, Wigner payloads `n × n` real, cross
//! payloads `n × n` complex. Only ħ and m are persisted; c and e are restored
//! as 1 on load.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::field::{CrossWignerField, SpinorField, WignerField};
use crate::grid::{PhysicalConstants, SpatialGrid};
use crate::C64;

pub const MAGIC: &[u8; 8] = b"DPSFLD01";
pub const HEADER_LEN: usize = 8 + 4 * 4 + 4 * 8;

pub const KIND_SPINOR: u32 = 1;
pub const KIND_WIGNER: u32 = 2;
pub const KIND_CROSS: u32 = 3;

/// Any field that can be archived.
#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Spinor(SpinorField),
    Wigner(WignerField),
    Cross(CrossWignerField),
}

impl Field {
    pub fn kind(&self) -> u32 {
        match self {
            Field::Spinor(_) => KIND_SPINOR,
            Field::Wigner(_) => KIND_WIGNER,
            Field::Cross(_) => KIND_CROSS,
        }
    }

    fn meta(&self) -> (SpatialGrid, PhysicalConstants) {
        match self {
            Field::Spinor(f) => (f.grid, f.constants),
            Field::Wigner(f) => (f.grid, f.constants),
            Field::Cross(f) => (f.grid, f.constants),
        }
    }

    pub fn into_spinor(self) -> Result<SpinorField> {
        match self {
            Field::Spinor(f) => Ok(f),
            other => Err(Error::KindMismatch { expected: KIND_SPINOR, found: other.kind() }),
        }
    }

    pub fn into_wigner(self) -> Result<WignerField> {
        match self {
            Field::Wigner(f) => Ok(f),
            other => Err(Error::KindMismatch { expected: KIND_WIGNER, found: other.kind() }),
        }
    }

    pub fn into_cross(self) -> Result<CrossWignerField> {
        match self {
            Field::Cross(f) => Ok(f),
            other => Err(Error::KindMismatch { expected: KIND_CROSS, found: other.kind() }),
        }
    }
}

impl From<SpinorField> for Field {
    fn from(f: SpinorField) -> Self {
        Field::Spinor(f)
    }
}

impl From<WignerField> for Field {
    fn from(f: WignerField) -> Self {
        Field::Wigner(f)
    }
}

impl From<CrossWignerField> for Field {
    fn from(f: CrossWignerField) -> Self {
        Field::Cross(f)
    }
}

fn payload_len(kind: u32, n: usize) -> Result<usize> {
    match kind {
        KIND_SPINOR => Ok(n * 4 * 16),
        KIND_WIGNER => Ok(n * n * 8),
        KIND_CROSS => Ok(n * n * 16),
        k => Err(Error::UnknownKind(k)),
    }
}

/// Serializes a field into archive bytes.
pub fn encode(field: &Field) -> Vec<u8> {
    let (grid, constants) = field.meta();
    let n = grid.n;
    let mut out = Vec::with_capacity(HEADER_LEN + payload_len(field.kind(), n).unwrap_or(0));
    out.extend_from_slice(MAGIC);
    for w in [field.kind(), n as u32, 0, 0] {
        out.extend_from_slice(&w.to_le_bytes());
    }
    for v in [grid.x_min, grid.x_max, constants.hbar, constants.mass] {
        out.extend_from_slice(&v.to_le_bytes());
    }
    let mut push = |v: f64| out.extend_from_slice(&v.to_le_bytes());
    match field {
        Field::Spinor(f) => f.data.iter().for_each(|z| {
            push(z.re);
            push(z.im);
        }),
        Field::Wigner(f) => f.data.iter().for_each(|&v| push(v)),
        Field::Cross(f) => f.data.iter().for_each(|z| {
            push(z.re);
            push(z.im);
        }),
    }
    out
}

fn u32_at(bytes: &[u8], off: usize) -> u32 {
    u32::from_le_bytes(bytes[off..off + 4].try_into().unwrap())
}

fn f64_at(bytes: &[u8], off: usize) -> f64 {
    f64::from_le_bytes(bytes[off..off + 8].try_into().unwrap())
}

/// Parses archive bytes. `origin` only labels errors.
pub fn decode(bytes: &[u8], origin: &Path) -> Result<Field> {
    if bytes.len() < MAGIC.len() || &bytes[..8] != MAGIC {
        if bytes.len() < MAGIC.len() && MAGIC.starts_with(bytes) {
            return Err(Error::Truncated(format!("{} bytes, shorter than the magic", bytes.len())));
        }
        return Err(Error::BadMagic { path: origin.to_path_buf() });
    }
    if bytes.len() < HEADER_LEN {
        return Err(Error::Truncated(format!("{} bytes, header needs {HEADER_LEN}", bytes.len())));
    }
    let kind = u32_at(bytes, 8);
    let n_raw = u32_at(bytes, 12);
    let n = n_raw as usize;
    let expected = payload_len(kind, n)?;
    let payload = &bytes[HEADER_LEN..];
    if payload.len() < expected {
        return Err(Error::Truncated(format!("payload holds {} bytes, expected {expected}", payload.len())));
    }
    if payload.len() > expected {
        return Err(Error::DimensionMismatch { n: n_raw, payload: payload.len(), expected });
    }
    let x_min = f64_at(bytes, 24);
    let x_max = f64_at(bytes, 32);
    let hbar = f64_at(bytes, 40);
    let mass = f64_at(bytes, 48);
    let grid = SpatialGrid::new(x_min, x_max, n)?;
    let constants = PhysicalConstants::new(hbar, 1.0, mass, 1.0)?;

    let reals = payload.chunks_exact(8).map(|c| f64::from_le_bytes(c.try_into().unwrap()));
    Ok(match kind {
        KIND_SPINOR => {
            let v: Vec<f64> = reals.collect();
            let data = Array2::from_shape_fn((n, 4), |(i, c)| {
                let k = 2 * (4 * i + c);
                C64::new(v[k], v[k + 1])
            });
            Field::Spinor(SpinorField { grid, constants, data })
        }
        KIND_WIGNER => {
            let data = Array2::from_shape_vec((n, n), reals.collect()).expect("length checked");
            Field::Wigner(WignerField { grid, constants, data })
        }
        _ => {
            let v: Vec<f64> = reals.collect();
            let data = Array2::from_shape_fn((n, n), |(i, j)| {
                let k = 2 * (n * i + j);
                C64::new(v[k], v[k + 1])
            });
            Field::Cross(CrossWignerField { grid, constants, data })
        }
    })
}

pub fn save_field(field: &Field, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path.as_ref())?);
    w.write_all(&encode(field))?;
    w.flush()?;
    Ok(())
}

pub fn load_field(path: impl AsRef<Path>) -> Result<Field> {
    let mut bytes = Vec::new();
    File::open(path.as_ref())?.read_to_end(&mut bytes)?;
    decode(&bytes, path.as_ref())
}

/// One row per lattice point: `x,p,w` for Wigner fields, `x,p,re,im` for
/// cross fields and `x,re1,im1,…,re4,im4` for spinors.
pub fn write_csv(field: &Field, path: impl AsRef<Path>) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    match field {
        Field::Spinor(f) => {
            w.write_record(["x", "re1", "im1", "re2", "im2", "re3", "im3", "re4", "im4"])?;
            for i in 0..f.grid.n {
                let mut rec = vec![f.grid.x(i).to_string()];
                for z in f.at(i) {
                    rec.push(z.re.to_string());
                    rec.push(z.im.to_string());
                }
                w.write_record(&rec)?;
            }
        }
        Field::Wigner(f) => {
            let g = f.phase_grid();
            w.write_record(["x", "p", "w"])?;
            for ((i, j), v) in f.data.indexed_iter() {
                w.write_record([g.x(i).to_string(), g.p(j).to_string(), v.to_string()])?;
            }
        }
        Field::Cross(f) => {
            let g = f.phase_grid();
            w.write_record(["x", "p", "re", "im"])?;
            for ((i, j), z) in f.data.indexed_iter() {
                w.write_record([g.x(i).to_string(), g.p(j).to_string(), z.re.to_string(), z.im.to_string()])?;
            }
        }
    }
    w.flush()?;
    Ok(())
}
