//! Write-once cache of fundamental classes, keyed by a digest of the input
//! data. Optionally mirrored to `QTORIC_CACHE_DIR`.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use qtoric_core::quasitoric::{admissible_monomials, Monomial, Quasitoric, TopClass};
use qtoric_core::{BigInt, Error};
use sha2::{Digest, Sha256};

use crate::input::to_json;

const FORMAT: &str = "qtoric top class v1";

pub type Key = [u8; 32];

/// Digest of the canonical serialization plus the graded degree.
pub fn key(q: &Quasitoric, degree: usize) -> Key {
    let mut h = Sha256::new();
    h.update(FORMAT.as_bytes());
    h.update(to_json(q.data()).as_bytes());
    h.update(degree.to_le_bytes());
    h.finalize().into()
}

type Slot = Arc<OnceLock<Result<Arc<TopClass>, Error>>>;

#[derive(Default)]
pub struct TopClassCache {
    slots: Mutex<HashMap<Key, Slot>>,
    dir: Option<PathBuf>,
}

impl TopClassCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        Self { slots: Mutex::default(), dir: Some(dir.into()) }
    }

    /// Uses `QTORIC_CACHE_DIR` when it is set and non-empty.
    pub fn from_env() -> Self {
        match std::env::var_os("QTORIC_CACHE_DIR") {
            Some(d) if !d.is_empty() => Self::with_dir(d),
            _ => Self::new(),
        }
    }

    /// Every caller for the same data observes the same value; the class is
    /// computed at most once per process.
    pub fn top_class(&self, q: &Quasitoric) -> Result<Arc<TopClass>, Error> {
        let k = key(q, q.m());
        let slot = {
            let mut slots = self.slots.lock().unwrap_or_else(|e| e.into_inner());
            slots.entry(k).or_default().clone()
        };
        slot.get_or_init(|| self.load_or_compute(q, &k).map(Arc::new)).clone()
    }

    fn load_or_compute(&self, q: &Quasitoric, k: &Key) -> Result<TopClass, Error> {
        let path = self.dir.as_ref().map(|d| d.join(format!("{}.tsv", hex::encode(k))));
        if let Some(top) = path.as_deref().and_then(|p| load(p, q)) {
            return Ok(top);
        }
        let top = TopClass::new(q)?;
        if let Some(p) = path {
            // a failed write only costs a recomputation next time
            let _ = store(&p, &top);
        }
        Ok(top)
    }
}

fn store(path: &Path, top: &TopClass) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let mut text = format!("{FORMAT}\n");
    for (mono, v) in top.values() {
        let e: Vec<String> = mono.exponents().iter().map(u32::to_string).collect();
        text += &format!("{}\t{v}\n", e.join(","));
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

/// Accepts an entry only if it kills every relation `theta_j * mu` and gives
/// the base facet `+1`; those conditions determine the class uniquely.
fn load(path: &Path, q: &Quasitoric) -> Option<TopClass> {
    let text = fs::read_to_string(path).ok()?;
    let mut lines = text.lines();
    if lines.next()? != FORMAT {
        return None;
    }
    let mut values = BTreeMap::new();
    for line in lines {
        let (e, v) = line.split_once('\t')?;
        let e: Vec<u32> = e.split(',').map(|x| x.parse().ok()).collect::<Option<_>>()?;
        if e.len() != q.vertex_count() || e.iter().sum::<u32>() as usize != q.m() {
            return None;
        }
        values.insert(Monomial::from_exponents(e), v.parse::<BigInt>().ok()?);
    }
    let top = TopClass::from_values(q, values);
    let n = q.vertex_count();
    let base = Monomial::from_vertices(n, &q.data().facets[q.base_facet()]);
    if top.evaluate(&base).ok()? != BigInt::from(1) {
        return None;
    }
    for mu in admissible_monomials(q, q.m() as u32 - 1) {
        for j in 0..q.m() {
            let mut sum = BigInt::from(0);
            for (v, row) in q.data().lambda.iter().enumerate() {
                if row[j] != 0 {
                    let mut e = mu.exponents().to_vec();
                    e[v] += 1;
                    sum += top.evaluate(&Monomial::from_exponents(e)).ok()? * row[j];
                }
            }
            if sum != BigInt::from(0) {
                return None;
            }
        }
    }
    Some(top)
}
