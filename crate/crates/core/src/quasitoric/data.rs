use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{argument, Error};
use crate::linalg::{determinant, IntMatrix};

/// Vertex sets are stored as bitmasks.
pub const MAX_VERTICES: usize = 64;

/// Combinatorial model of an omnioriented quasitoric manifold of real
/// dimension `2m`: the dual simplicial sphere `K_P` on an ordered vertex set,
/// and the characteristic vector `lambda[i]` in `Z^m` of every vertex.
///
/// The vertex order is part of the data and is never canonicalized.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasitoricData {
    pub name: String,
    pub m: usize,
    pub vertices: Vec<String>,
    /// Maximal simplices as lists of vertex indices.
    pub facets: Vec<Vec<usize>>,
    pub lambda: Vec<Vec<i64>>,
    /// Index into `facets`; defaults to the lexicographically least facet.
    pub base_facet: Option<usize>,
}

/// One violated invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    ZeroDimension,
    NoVertices,
    TooManyVertices { count: usize },
    LambdaCount { vertices: usize, rows: usize },
    LambdaShape { vertex: usize, len: usize },
    FacetShape { facet: usize, size: usize },
    FacetRepeatsVertex { facet: usize },
    VertexOutOfRange { facet: usize, vertex: usize },
    DuplicateFacet { facet: usize, first: usize },
    UnusedVertex { vertex: usize },
    Degenerate { facet: usize, det: BigInt },
    Pseudomanifold { ridge: Vec<usize>, count: usize },
    EulerCharacteristic { expected: i64, found: i64 },
    BaseFacet { index: usize },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::ZeroDimension => f.write_str("m must be at least 1"),
            Issue::NoVertices => f.write_str("no vertices"),
            Issue::TooManyVertices { count } => {
                write!(f, "{count} vertices; at most {MAX_VERTICES} are supported")
            }
            Issue::LambdaCount { vertices, rows } => {
                write!(f, "{rows} lambda rows for {vertices} vertices")
            }
            Issue::LambdaShape { vertex, len } => {
                write!(f, "lambda row of vertex {vertex} has length {len}")
            }
            Issue::FacetShape { facet, size } => {
                write!(f, "shape error: facet {facet} has {size} vertices")
            }
            Issue::FacetRepeatsVertex { facet } => write!(f, "facet {facet} repeats a vertex"),
            Issue::VertexOutOfRange { facet, vertex } => {
                write!(f, "facet {facet} names vertex {vertex}, which does not exist")
            }
            Issue::DuplicateFacet { facet, first } => {
                write!(f, "facet {facet} duplicates facet {first}")
            }
            Issue::UnusedVertex { vertex } => write!(f, "vertex {vertex} lies in no facet"),
            Issue::Degenerate { facet, det } => {
                write!(f, "nondegeneracy fails at facet {facet}: det = {det}")
            }
            Issue::Pseudomanifold { ridge, count } => {
                write!(f, "ridge {ridge:?} lies in {count} facets, expected 2")
            }
            Issue::EulerCharacteristic { expected, found } => {
                write!(f, "Euler characteristic {found}, expected {expected} for a sphere")
            }
            Issue::BaseFacet { index } => write!(f, "base facet index {index} out of range"),
        }
    }
}

/// Result of [`QuasitoricData::validate`]; `dets[i]` is the determinant of
/// facet `i` (lambda columns in ascending vertex order) when it is defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
    pub dets: Vec<Option<BigInt>>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid; {} facets; dets [", self.dets.len())?;
            for (i, d) in self.dets.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                match d {
                    Some(d) => write!(f, "{d}")?,
                    None => f.write_str("?")?,
                }
            }
            f.write_str("]")
        } else {
            f.write_str("invalid")?;
            for issue in &self.issues {
                write!(f, "; {issue}")?;
            }
            Ok(())
        }
    }
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

fn lex_least(facets: &[Vec<usize>]) -> Option<usize> {
    let sorted: Vec<Vec<usize>> = facets
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f
        })
        .collect();
    (0..sorted.len()).min_by(|&a, &b| sorted[a].cmp(&sorted[b]))
}

impl QuasitoricData {
    /// `m x m` matrix whose columns are the lambda vectors of `vs`, in the
    /// order given.
    pub fn lambda_columns(&self, vs: &[usize]) -> IntMatrix {
        let rows = (0..self.m).map(|j| vs.iter().map(|&v| BigInt::from(self.lambda[v][j])).collect()).collect();
        IntMatrix::from_rows(vs.len(), rows)
    }

    /// Determinant of the lambda columns of facet `i` in ascending vertex order.
    pub fn facet_det(&self, i: usize) -> BigInt {
        let mut f = self.facets[i].clone();
        f.sort_unstable();
        determinant(&self.lambda_columns(&f))
    }

    /// The `m x |V|` characteristic matrix.
    pub fn lambda_matrix(&self) -> IntMatrix {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        self.lambda_columns(&all)
    }

    /// Base facet index (explicit or lexicographically least).
    pub fn resolved_base_facet(&self) -> Option<usize> {
        self.base_facet.or_else(|| lex_least(&self.facets))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut issues = Vec::new();
        let n = self.vertices.len();
        let m = self.m;
        if m == 0 {
            issues.push(Issue::ZeroDimension);
        }
        if n == 0 {
            issues.push(Issue::NoVertices);
        }
        if n > MAX_VERTICES {
            issues.push(Issue::TooManyVertices { count: n });
        }
        if self.lambda.len() != n {
            issues.push(Issue::LambdaCount { vertices: n, rows: self.lambda.len() });
        }
        let mut lambda_ok = self.lambda.len() == n;
        for (v, row) in self.lambda.iter().enumerate() {
            if row.len() != m {
                issues.push(Issue::LambdaShape { vertex: v, len: row.len() });
                lambda_ok = false;
            }
        }

        let mut shape_ok = alloc::vec![false; self.facets.len()];
        let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
        for (i, facet) in self.facets.iter().enumerate() {
            let mut ok = true;
            if facet.len() != m {
                issues.push(Issue::FacetShape { facet: i, size: facet.len() });
                ok = false;
            }
            if let Some(&v) = facet.iter().find(|&&v| v >= n) {
                issues.push(Issue::VertexOutOfRange { facet: i, vertex: v });
                ok = false;
            }
            let distinct: BTreeSet<usize> = facet.iter().copied().collect();
            if distinct.len() != facet.len() {
                issues.push(Issue::FacetRepeatsVertex { facet: i });
                ok = false;
            }
            if ok && n <= MAX_VERTICES {
                let mask = mask_of(facet);
                if let Some(&first) = seen.get(&mask) {
                    issues.push(Issue::DuplicateFacet { facet: i, first });
                } else {
                    seen.insert(mask, i);
                }
            }
            shape_ok[i] = ok;
        }

        let used: BTreeSet<usize> = self.facets.iter().flatten().copied().collect();
        for v in 0..n {
            if !used.contains(&v) {
                issues.push(Issue::UnusedVertex { vertex: v });
            }
        }

        let dets: Vec<Option<BigInt>> =
            (0..self.facets.len()).map(|i| (shape_ok[i] && lambda_ok).then(|| self.facet_det(i))).collect();
        for (i, d) in dets.iter().enumerate() {
            if let Some(d) = d {
                if !d.abs().is_one() {
                    issues.push(Issue::Degenerate { facet: i, det: d.clone() });
                }
            }
        }

        let all_shapes_ok = shape_ok.iter().all(|&b| b) && n <= MAX_VERTICES && m >= 1;
        if all_shapes_ok && !self.facets.is_empty() {
            issues.extend(sphere_issues(&self.facets, m));
        }

        match self.base_facet {
            Some(i) if i >= self.facets.len() => issues.push(Issue::BaseFacet { index: i }),
            _ => {}
        }
        ValidationReport { issues, dets }
    }

    /// Renumbers vertices so that new vertex `i` is old vertex `perm[i]`.
    /// The base facet is pinned to the same geometric facet.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<QuasitoricData, Error> {
        let n = self.vertices.len();
        let distinct: BTreeSet<usize> = perm.iter().copied().collect();
        if perm.len() != n || distinct.len() != n || perm.iter().any(|&p| p >= n) {
            return Err(argument(format!("not a permutation of 0..{n}")));
        }
        let mut inverse = alloc::vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut g: Vec<usize> = f.iter().map(|&v| inverse[v]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        Ok(QuasitoricData {
            name: self.name.clone(),
            m: self.m,
            vertices: perm.iter().map(|&p| self.vertices[p].clone()).collect(),
            facets,
            lambda: perm.iter().map(|&p| self.lambda[p].clone()).collect(),
            base_facet: self.resolved_base_facet(),
        })
    }
}

/// Pseudomanifold and Euler-characteristic checks for a pure complex whose
/// facets all have `m` distinct in-range vertices.
fn sphere_issues(facets: &[Vec<usize>], m: usize) -> Vec<Issue> {
    let mut issues = Vec::new();
    let mut ridges: BTreeMap<u64, usize> = BTreeMap::new();
    for f in facets {
        let mask = mask_of(f);
        for &v in f {
            *ridges.entry(mask & !(1u64 << v)).or_default() += 1;
        }
    }
    for (ridge, count) in ridges {
        if count != 2 {
            issues.push(Issue::Pseudomanifold { ridge: mask_vertices(ridge), count });
        }
    }
    let f = face_counts(facets, m);
    let euler: i64 = f.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
    let expected = if m % 2 == 1 { 2 } else { 0 };
    if euler != expected {
        issues.push(Issue::EulerCharacteristic { expected, found: euler });
    }
    issues
}

pub(crate) fn mask_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask & (1u64 << v) != 0).collect()
}

/// All nonempty faces of the complex generated by `facets`, as bitmasks.
pub(crate) fn all_faces(facets: &[Vec<usize>]) -> BTreeSet<u64> {
    let mut faces = BTreeSet::new();
    for f in facets {
        let k = f.len();
        for sub in 1u64..(1u64 << k) {
            let mut mask = 0u64;
            for (bit, &v) in f.iter().enumerate() {
                if sub & (1u64 << bit) != 0 {
                    mask |= 1u64 << v;
                }
            }
            faces.insert(mask);
        }
    }
    faces
}

/// `f_i` = number of faces with `i + 1` vertices, `i = 0..m-1`.
fn face_counts(facets: &[Vec<usize>], m: usize) -> Vec<u64> {
    let mut f = alloc::vec![0u64; m];
    for face in all_faces(facets) {
        let size = face.count_ones() as usize;
        if size <= m {
            f[size - 1] += 1;
        }
    }
    f
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// A validated [`QuasitoricData`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasitoric {
    data: QuasitoricData,
    facet_masks: Vec<u64>,
    base_facet: usize,
}

impl Quasitoric {
    pub fn new(data: QuasitoricData) -> Result<Self, Error> {
        let report = data.validate();
        if !report.is_valid() {
            return Err(Error::Invalid(report));
        }
        let facet_masks = data.facets.iter().map(|f| mask_of(f)).collect();
        let base_facet = data.resolved_base_facet().expect("validated data has facets");
        Ok(Self { data, facet_masks, base_facet })
    }

    pub fn data(&self) -> &QuasitoricData {
        &self.data
    }

    pub fn into_data(self) -> QuasitoricData {
        self.data
    }

    pub fn m(&self) -> usize {
        self.data.m
    }

    pub fn vertex_count(&self) -> usize {
        self.data.vertices.len()
    }

    pub fn facet_masks(&self) -> &[u64] {
        &self.facet_masks
    }

    pub fn base_facet(&self) -> usize {
        self.base_facet
    }

    pub fn is_face(&self, mask: u64) -> bool {
        self.facet_masks.iter().any(|&f| mask & !f == 0)
    }

    /// `(f_0, .., f_{m-1})` and `(h_0, .., h_m)`.
    pub fn f_h_vector(&self) -> (Vec<u64>, Vec<BigInt>) {
        f_h_vector(&self.data)
    }
}

/// Face numbers and h-vector, `sum_i h_i t^{m-i} = sum_i f_{i-1} (t-1)^{m-i}`.
pub fn f_h_vector(d: &QuasitoricData) -> (Vec<u64>, Vec<BigInt>) {
    let m = d.m;
    let f = face_counts(&d.facets, m);
    let f_ext = |i: usize| -> u64 {
        if i == 0 {
            1
        } else {
            f[i - 1]
        }
    }; // f_{i-1}
    let h = (0..=m)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let term = binomial((m - i) as u64, (k - i) as u64) * BigInt::from(f_ext(i));
                    if (k - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .fold(BigInt::zero(), |a, b| a + b)
        })
        .collect();
    (f, h)
}

/// Join of the two spheres with block-diagonal characteristic map; vertices
/// of `p` come first.
pub fn product(p: &QuasitoricData, q: &QuasitoricData) -> Result<QuasitoricData, Error> {
    let p = Quasitoric::new(p.clone())?;
    let q = Quasitoric::new(q.clone())?;
    let (pd, qd) = (p.data(), q.data());
    let shift = pd.vertices.len();
    let (mp, mq) = (pd.m, qd.m);

    let labels: BTreeSet<&String> = pd.vertices.iter().collect();
    let clash = qd.vertices.iter().any(|v| labels.contains(v));
    let label = |prefix: &str, v: &String| {
        if clash {
            format!("{prefix}.{v}")
        } else {
            v.clone()
        }
    };
    let vertices = pd.vertices.iter().map(|v| label("p", v)).chain(qd.vertices.iter().map(|v| label("q", v))).collect();

    let mut facets = Vec::with_capacity(pd.facets.len() * qd.facets.len());
    let mut base = 0;
    for (i, fp) in pd.facets.iter().enumerate() {
        for (j, fq) in qd.facets.iter().enumerate() {
            if i == p.base_facet() && j == q.base_facet() {
                base = facets.len();
            }
            let mut f: Vec<usize> = fp.clone();
            f.extend(fq.iter().map(|&v| v + shift));
            f.sort_unstable();
            facets.push(f);
        }
    }

    let lambda = pd
        .lambda
        .iter()
        .map(|row| {
            let mut r = row.clone();
            r.resize(mp + mq, 0);
            r
        })
        .chain(qd.lambda.iter().map(|row| {
            let mut r = alloc::vec![0i64; mp];
            r.extend_from_slice(row);
            r
        }))
        .collect();

    Ok(QuasitoricData {
        name: format!("{} x {}", pd.name, qd.name),
        m: mp + mq,
        vertices,
        facets,
        lambda,
        base_facet: Some(base),
    })
}

impl fmt::Display for QuasitoricData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (m = {}, {} vertices, {} facets)", self.name, self.m, self.vertices.len(), self.facets.len())
    }
}
