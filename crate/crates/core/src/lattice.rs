//! Integral lattices with a symmetric Gram matrix and an optional canonical
//! class: intersection pairings, adjunction genus, signature, short-vector
//! counts and the search for exceptional classes on blow-ups of ℙ².

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{isqrt_i128, Rational};
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("lattice has no canonical class")]
    NoCanonicalClass,
    #[error("β·β + K·β = {0} is odd")]
    ParityViolation(i64),
    #[error("form is degenerate")]
    DegenerateForm,
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("intermediate values exceed 128-bit range")]
    Overflow,
    #[error("cannot parse lattice vector {0:?}")]
    BadVector(String),
}

/// Integer coordinates of a lattice element in the host lattice's basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, k: i64) -> Self {
        LatticeVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn plus(&self, other: &Self) -> Self {
        LatticeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceLattice {
    gram: Vec<Vec<i64>>,
    labels: Vec<String>,
    canonical: Option<LatticeVector>,
    aliases: BTreeMap<String, LatticeVector>,
}

impl SurfaceLattice {
    pub fn new(
        gram: Vec<Vec<i64>>,
        labels: Vec<String>,
        canonical: Option<LatticeVector>,
    ) -> Result<Self, LatticeError> {
        let rank = gram.len();
        if rank == 0 {
            return Err(LatticeError::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        for row in &gram {
            if row.len() != rank {
                return Err(LatticeError::DimensionMismatch {
                    expected: rank,
                    found: row.len(),
                });
            }
        }
        if labels.len() != rank {
            return Err(LatticeError::DimensionMismatch {
                expected: rank,
                found: labels.len(),
            });
        }
        for i in 0..rank {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NotSymmetric);
                }
            }
        }
        let lattice = SurfaceLattice {
            gram,
            labels,
            canonical,
            aliases: BTreeMap::new(),
        };
        if let Some(k) = &lattice.canonical {
            lattice.check_len(k)?;
            for i in 0..rank {
                let e = LatticeVector::basis(rank, i);
                let s = lattice.gram[i][i] + lattice.pair(k, &e)?;
                if s.rem_euclid(2) != 0 {
                    return Err(LatticeError::ParityViolation(s));
                }
            }
        }
        Ok(lattice)
    }

    /// Diagonal lattice `diag(1, −1, …, −1)` of rank `k + 1` with basis
    /// `e0..ek` and canonical class `−3e0 + Σ e_i` (ℙ² blown up at `k` points).
    pub fn blowup_p2(k: usize) -> Self {
        let rank = k + 1;
        let gram = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| match (i == j, i) {
                        (false, _) => 0,
                        (true, 0) => 1,
                        (true, _) => -1,
                    })
                    .collect()
            })
            .collect();
        let labels = (0..rank).map(|i| format!("e{i}")).collect();
        let mut canonical = vec![1; rank];
        canonical[0] = -3;
        SurfaceLattice::new(gram, labels, Some(LatticeVector(canonical)))
            .expect("blow-up lattice is well formed")
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn canonical(&self) -> Option<&LatticeVector> {
        self.canonical.as_ref()
    }

    pub fn alias(&self, name: &str) -> Option<&LatticeVector> {
        self.aliases.get(name)
    }

    fn check_len(&self, v: &LatticeVector) -> Result<(), LatticeError> {
        if v.len() != self.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// `uᵀ·G·v`.
    pub fn pair(&self, u: &LatticeVector, v: &LatticeVector) -> Result<i64, LatticeError> {
        self.check_len(u)?;
        self.check_len(v)?;
        let mut acc = 0i64;
        for (i, ui) in u.0.iter().enumerate() {
            if *ui == 0 {
                continue;
            }
            for (j, vj) in v.0.iter().enumerate() {
                acc += ui * self.gram[i][j] * vj;
            }
        }
        Ok(acc)
    }

    /// Genus `1 + (β² + K·β)/2` of a smooth curve in class β.
    pub fn adjunction_genus(&self, beta: &LatticeVector) -> Result<i64, LatticeError> {
        let k = self.canonical.as_ref().ok_or(LatticeError::NoCanonicalClass)?;
        let s = self.pair(beta, beta)? + self.pair(k, beta)?;
        if s.rem_euclid(2) != 0 {
            return Err(LatticeError::ParityViolation(s));
        }
        Ok(1 + s / 2)
    }

    /// Inertia `(p, q)` of the Gram matrix.
    pub fn signature(&self) -> Result<(usize, usize), LatticeError> {
        let m: Vec<Vec<Rational>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        let d = linalg::congruence_diagonal(&m);
        if d.iter().any(Zero::is_zero) {
            return Err(LatticeError::DegenerateForm);
        }
        let p = d.iter().filter(|x| x.is_positive()).count();
        Ok((p, d.len() - p))
    }

    pub fn determinant(&self) -> BigInt {
        linalg::determinant(&self.gram)
    }

    /// Gram matrix of a list of vectors.
    pub fn gram_of(&self, vectors: &[LatticeVector]) -> Result<Vec<Vec<i64>>, LatticeError> {
        vectors
            .iter()
            .map(|u| vectors.iter().map(|v| self.pair(u, v)).collect())
            .collect()
    }

    /// Parses a vector: a JSON integer array, or a signed sum of basis labels
    /// and aliases such as `3e0-e1-e2` or `F+2B`.
    pub fn parse_vector(&self, text: &str) -> Result<LatticeVector, LatticeError> {
        let bad = || LatticeError::BadVector(text.to_string());
        let t = text.trim();
        if t.starts_with('[') {
            let v: Vec<i64> = serde_json::from_str(t).map_err(|_| bad())?;
            let v = LatticeVector(v);
            self.check_len(&v)?;
            return Ok(v);
        }
        let mut total = LatticeVector(vec![0; self.rank()]);
        let chars: Vec<char> = t.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad());
        }
        let mut i = 0;
        while i < chars.len() {
            let mut sign = 1;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: i64 = if i > start {
                chars[start..i].iter().collect::<String>().parse().map_err(|_| bad())?
            } else {
                1
            };
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            }
            let start = i;
            while i < chars.len() && chars[i] != '+' && chars[i] != '-' {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let term = self.named(&name).ok_or_else(bad)?;
            total = total.plus(&term.scaled(sign * coeff));
        }
        Ok(total)
    }

    fn named(&self, name: &str) -> Option<LatticeVector> {
        if name == "K" {
            return self.canonical.clone();
        }
        if let Some(v) = self.aliases.get(name) {
            return Some(v.clone());
        }
        self.labels
            .iter()
            .position(|l| l == name)
            .map(|i| LatticeVector::basis(self.rank(), i))
    }
}

/// `H₂(B9; ℤ) = Γ^{1,9}`: `diag(1, −1, …, −1)` on `e0..e9`, canonical class
/// `K = −F` with fibre `F = 3e0 − Σ e_i` and section `B = e9`.
pub fn make_gamma19() -> SurfaceLattice {
    let mut l = SurfaceLattice::blowup_p2(9);
    let fiber = fiber_class();
    l.canonical = Some(fiber.scaled(-1));
    l.aliases.insert("F".into(), fiber);
    l.aliases.insert("B".into(), LatticeVector::basis(10, 9));
    l
}

/// `F = 3e0 − e1 − … − e9` in Γ^{1,9}.
pub fn fiber_class() -> LatticeVector {
    let mut v = vec![-1; 10];
    v[0] = 3;
    LatticeVector(v)
}

pub fn section_class() -> LatticeVector {
    LatticeVector::basis(10, 9)
}

/// Γ^{1,1} in the basis `(F, B)`, with `K = −F`.
pub fn make_gamma11() -> SurfaceLattice {
    let mut l = SurfaceLattice::new(
        vec![vec![0, 1], vec![1, -1]],
        vec!["F".into(), "B".into()],
        Some(LatticeVector(vec![-1, 0])),
    )
    .expect("Γ^{1,1} is well formed");
    l.aliases.insert("F".into(), LatticeVector(vec![1, 0]));
    l.aliases.insert("B".into(), LatticeVector(vec![0, 1]));
    l
}

/// Generators of E8(−1) inside Γ^{1,9}: `−e0+e1+e2+e3`, then `e_i − e_{i+1}`
/// for `i = 1..7`.
pub fn e8_minus_basis() -> Vec<LatticeVector> {
    let mut out = Vec::with_capacity(8);
    let mut first = vec![0; 10];
    first[0] = -1;
    first[1] = 1;
    first[2] = 1;
    first[3] = 1;
    out.push(LatticeVector(first));
    for i in 1..=7 {
        let mut v = vec![0; 10];
        v[i] = 1;
        v[i + 1] = -1;
        out.push(LatticeVector(v));
    }
    out
}

/// The sublattice spanned by [`e8_minus_basis`], with its induced form.
pub fn make_e8_minus() -> SurfaceLattice {
    let g19 = make_gamma19();
    let gram = g19.gram_of(&e8_minus_basis()).expect("rank 10 vectors");
    let labels = (0..8).map(|i| format!("a{i}")).collect();
    SurfaceLattice::new(gram, labels, None).expect("E8(-1) is well formed")
}

/// The positive-definite E8 lattice (negated Gram of [`make_e8_minus`]).
pub fn make_e8() -> SurfaceLattice {
    let minus = make_e8_minus();
    let gram = minus
        .gram
        .iter()
        .map(|r| r.iter().map(|x| -x).collect())
        .collect();
    SurfaceLattice::new(gram, minus.labels.clone(), None).expect("E8 is well formed")
}

/// Counts lattice vectors by norm: `result[n] = #{v : v·v = n}` for every
/// `0 ≤ n ≤ norm_max` (entries with zero count are included).
///
/// Fincke–Pohst enumeration from the last coordinate down. At depth `i` the
/// coordinates `x_i..x_{n−1}` are fixed and the minimum of the form over
/// the remaining ones is the Schur complement `S_i`; scaling by its
/// denominator keeps each admissible range an exact integer computation.
pub fn enumerate_vectors(
    lattice: &SurfaceLattice,
    norm_max: i64,
) -> Result<BTreeMap<i64, u64>, LatticeError> {
    let tails = linalg::scaled_schur_tails(&lattice.gram).ok_or(LatticeError::NotPositiveDefinite)?;
    let n = lattice.rank();
    let mut counts: BTreeMap<i64, u64> = (0..=norm_max.max(0)).map(|k| (k, 0)).collect();
    if norm_max < 0 {
        return Ok(BTreeMap::new());
    }
    let r = norm_max as i128;
    let top = admissible_range(&tails[n - 1], &[], r).ok_or(LatticeError::Overflow)?;
    let partials: Vec<Result<BTreeMap<i64, u64>, LatticeError>> = top
        .into_par_iter()
        .map(|x_last| {
            let mut local = BTreeMap::new();
            let mut fixed = vec![0i128; n];
            fixed[n - 1] = x_last;
            descend(&tails, n - 1, &mut fixed, r, &mut local)?;
            Ok(local)
        })
        .collect();
    for p in partials {
        for (k, c) in p? {
            *counts.entry(k).or_insert(0) += c;
        }
    }
    Ok(counts)
}

/// Integer range of `x_i` given `rest = (x_{i+1}, …)`, or `None` on overflow.
fn admissible_range(
    tail: &(i128, Vec<Vec<i128>>),
    rest: &[i128],
    r: i128,
) -> Option<std::ops::RangeInclusive<i128>> {
    let (delta, t) = tail;
    let a = t[0][0];
    let mut b: i128 = 0;
    let mut c: i128 = 0;
    for (j, xj) in rest.iter().enumerate() {
        if *xj == 0 {
            continue;
        }
        b = b.checked_add(t[0][j + 1].checked_mul(*xj)?)?;
        for (k, xk) in rest.iter().enumerate() {
            c = c.checked_add(t[j + 1][k + 1].checked_mul(*xj)?.checked_mul(*xk)?)?;
        }
    }
    // a·x² + 2b·x + c ≤ δ·R  ⇔  (a·x + b)² ≤ b² − a·(c − δ·R)
    let bound = delta.checked_mul(r)?;
    let disc = b.checked_mul(b)?.checked_sub(a.checked_mul(c.checked_sub(bound)?)?)?;
    if disc < 0 {
        #[allow(clippy::reversed_empty_ranges)]
        return Some(1..=0);
    }
    let s = isqrt_i128(disc);
    let lo = div_ceil(-b - s, a);
    let hi = (-b + s).div_euclid(a);
    Some(lo..=hi)
}

fn div_ceil(num: i128, den: i128) -> i128 {
    -((-num).div_euclid(den))
}

fn descend(
    tails: &[(i128, Vec<Vec<i128>>)],
    level: usize,
    fixed: &mut [i128],
    r: i128,
    counts: &mut BTreeMap<i64, u64>,
) -> Result<(), LatticeError> {
    if level == 0 {
        let norm = quadratic(&tails[0].1, fixed).ok_or(LatticeError::Overflow)?;
        *counts.entry(norm as i64).or_insert(0) += 1;
        return Ok(());
    }
    let i = level - 1;
    let range = admissible_range(&tails[i], &fixed[level..], r).ok_or(LatticeError::Overflow)?;
    for x in range {
        fixed[i] = x;
        descend(tails, i, fixed, r, counts)?;
    }
    fixed[i] = 0;
    Ok(())
}

fn quadratic(gram: &[Vec<i128>], x: &[i128]) -> Option<i128> {
    let mut acc: i128 = 0;
    for (i, xi) in x.iter().enumerate() {
        if *xi == 0 {
            continue;
        }
        for (j, xj) in x.iter().enumerate() {
            acc = acc.checked_add(gram[i][j].checked_mul(*xi)?.checked_mul(*xj)?)?;
        }
    }
    Some(acc)
}

/// Classes `β` on ℙ² blown up at `k` points with `K·β = β·β = −1` and
/// `|β·e0| ≤ degree_bound`, sorted lexicographically by coordinates.
pub fn exceptional_classes(k: usize, degree_bound: i64) -> Vec<LatticeVector> {
    let lattice = SurfaceLattice::blowup_p2(k);
    let canonical = lattice.canonical().expect("blow-up has K").clone();
    let mut found = Vec::new();
    for d in -degree_bound.abs()..=degree_bound.abs() {
        // β = d·e0 + Σ c_i e_i:  Σ c_i² = d² + 1  and  Σ c_i = 1 − 3d
        let mut coords = vec![0i64; k];
        collect_tail(&mut coords, 0, d * d + 1, 1 - 3 * d, &mut |c| {
            let mut v = vec![d];
            v.extend_from_slice(c);
            found.push(LatticeVector(v));
        });
    }
    found.retain(|b| {
        lattice.pair(b, b) == Ok(-1) && lattice.pair(&canonical, b) == Ok(-1)
    });
    found.sort();
    found.dedup();
    found
}

fn collect_tail(
    coords: &mut [i64],
    pos: usize,
    squares_left: i64,
    sum_left: i64,
    emit: &mut impl FnMut(&[i64]),
) {
    let slots = (coords.len() - pos) as i64;
    if slots == 0 {
        if squares_left == 0 && sum_left == 0 {
            emit(coords);
        }
        return;
    }
    // Cauchy–Schwarz: the remaining sum is reachable only if sum² ≤ slots·squares
    if sum_left * sum_left > slots * squares_left {
        return;
    }
    let m = isqrt_i128(squares_left as i128) as i64;
    for c in -m..=m {
        coords[pos] = c;
        collect_tail(coords, pos + 1, squares_left - c * c, sum_left - c, emit);
    }
    coords[pos] = 0;
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    rank: usize,
    gram: Vec<i64>,
    labels: Vec<String>,
    canonical: Option<LatticeVector>,
}

impl Serialize for SurfaceLattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LatticeJson {
            rank: self.rank(),
            gram: self.gram.concat(),
            labels: self.labels.clone(),
            canonical: self.canonical.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SurfaceLattice {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = LatticeJson::deserialize(d)?;
        if j.gram.len() != j.rank * j.rank {
            return Err(D::Error::custom("gram length must be rank²"));
        }
        let gram = j.gram.chunks(j.rank.max(1)).map(<[i64]>::to_vec).collect();
        SurfaceLattice::new(gram, j.labels, j.canonical).map_err(D::Error::custom)
    }
}

/// The E8 Cartan matrix in the node order of [`e8_minus_basis`]: a chain
/// `a1 – a2 – … – a7` with `a0` attached to `a3`.
pub fn e8_cartan() -> Vec<Vec<i64>> {
    let edges = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 3)];
    let mut m = vec![vec![0i64; 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    m
}

/// Negated E8 Cartan matrix conjugated by `diag(−1, 1, …, 1)`: the Gram of
/// [`e8_minus_basis`] itself, whose first generator pairs to `−1` with `a3`.
/// Replacing that generator by its negative gives exactly `−Cartan`.
pub fn e8_minus_expected_gram() -> Vec<Vec<i64>> {
    let sign = |i: usize| if i == 0 { -1 } else { 1 };
    e8_cartan()
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, x)| -x * sign(i) * sign(j)).collect())
        .collect()
}

/// [`e8_minus_basis`] with the first generator negated, a simple-root basis
/// of E8(−1).
pub fn e8_minus_simple_roots() -> Vec<LatticeVector> {
    let mut b = e8_minus_basis();
    b[0] = b[0].scaled(-1);
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> LatticeVector {
        LatticeVector::basis(10, i)
    }

    #[test]
    fn gamma19_golden_pairings() {
        let l = make_gamma19();
        let (f, b) = (fiber_class(), section_class());
        assert_eq!(l.pair(&f, &b), Ok(1));
        assert_eq!(l.pair(&b, &b), Ok(-1));
        assert_eq!(l.pair(&f, &f), Ok(0));
        assert_eq!(l.determinant(), BigInt::from(-1));
        assert_eq!(l.rank(), 10);
        assert_eq!(l.labels()[9], "e9");
    }

    #[test]
    fn pair_examples() {
        let l = make_gamma19();
        assert_eq!(l.pair(&e(1), &e(1)), Ok(-1));
        assert_eq!(l.pair(&e(1), &e(2)), Ok(0));
        assert_eq!(l.pair(&e8_minus_basis()[0], &fiber_class()), Ok(0));
        assert!(matches!(
            l.pair(&LatticeVector(vec![1, 2]), &e(0)),
            Err(LatticeError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn adjunction_examples() {
        let l = make_gamma19();
        assert_eq!(l.adjunction_genus(&e(0)), Ok(0));
        assert_eq!(l.adjunction_genus(&section_class()), Ok(0));
        assert_eq!(l.adjunction_genus(&fiber_class()), Ok(1));
        let e8 = make_e8();
        assert_eq!(e8.adjunction_genus(&LatticeVector(vec![0; 8])), Err(LatticeError::NoCanonicalClass));
    }

    #[test]
    fn signatures() {
        assert_eq!(make_gamma19().signature(), Ok((1, 9)));
        assert_eq!(make_gamma11().signature(), Ok((1, 1)));
        assert_eq!(make_e8_minus().signature(), Ok((0, 8)));
        let degenerate = SurfaceLattice::new(vec![vec![0, 0], vec![0, 1]], vec!["x".into(), "y".into()], None).unwrap();
        assert_eq!(degenerate.signature(), Err(LatticeError::DegenerateForm));
    }

    #[test]
    fn e8_minus_is_negated_cartan() {
        let l = make_gamma19();
        let basis = e8_minus_basis();
        assert_eq!(basis.len(), 8);
        for v in &basis {
            assert_eq!(l.pair(v, v), Ok(-2));
            assert_eq!(l.pair(v, &fiber_class()), Ok(0));
            assert_eq!(l.pair(v, &section_class()), Ok(0));
        }
        let negated: Vec<Vec<i64>> = e8_cartan().iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        assert_eq!(l.gram_of(&basis).unwrap(), e8_minus_expected_gram());
        assert_eq!(l.gram_of(&e8_minus_simple_roots()).unwrap(), negated);
        assert_eq!(linalg::determinant(&e8_cartan()), BigInt::from(1));
    }

    #[test]
    fn orthogonal_decomposition_has_full_rank() {
        let l = make_gamma19();
        let mut all = vec![fiber_class(), section_class()];
        all.extend(e8_minus_basis());
        // Gram of the combined basis is block diagonal with determinant ±1
        let g = l.gram_of(&all).unwrap();
        assert_eq!(linalg::determinant(&g).abs(), BigInt::from(1));
        for i in 0..2 {
            for j in 2..10 {
                assert_eq!(g[i][j], 0);
            }
        }
    }

    #[test]
    fn small_enumerations() {
        let z2 = SurfaceLattice::new(vec![vec![1, 0], vec![0, 1]], vec!["x".into(), "y".into()], None).unwrap();
        let c = enumerate_vectors(&z2, 5).unwrap();
        // sums of two squares: r2(n)
        assert_eq!(c.values().copied().collect::<Vec<_>>(), vec![1, 4, 4, 0, 4, 8]);
        let a2 = SurfaceLattice::new(vec![vec![2, -1], vec![-1, 2]], vec!["x".into(), "y".into()], None).unwrap();
        let c = enumerate_vectors(&a2, 6).unwrap();
        assert_eq!(c[&0], 1);
        assert_eq!(c[&2], 6);
        assert_eq!(c[&6], 6);
        assert_eq!(enumerate_vectors(&make_gamma19(), 2), Err(LatticeError::NotPositiveDefinite));
    }

    #[test]
    fn e8_roots() {
        let c = enumerate_vectors(&make_e8(), 4).unwrap();
        assert_eq!(c[&0], 1);
        assert_eq!(c[&2], 240);
        assert_eq!(c[&4], 2160);
        assert_eq!(c[&1] + c[&3], 0);
    }

    #[test]
    fn exceptional_examples() {
        assert_eq!(exceptional_classes(1, 3), vec![LatticeVector(vec![0, 1])]);
        assert_eq!(
            exceptional_classes(2, 3),
            vec![
                LatticeVector(vec![0, 0, 1]),
                LatticeVector(vec![0, 1, 0]),
                LatticeVector(vec![1, -1, -1]),
            ]
        );
        assert_eq!(exceptional_classes(6, 3).len(), 27);
    }

    #[test]
    fn parse_vectors() {
        let l = make_gamma19();
        assert_eq!(l.parse_vector("F").unwrap(), fiber_class());
        assert_eq!(l.parse_vector("3e0-e1-e2-e3-e4-e5-e6-e7-e8-e9").unwrap(), fiber_class());
        assert_eq!(l.parse_vector("-K").unwrap(), fiber_class());
        assert_eq!(l.parse_vector("B+2F").unwrap(), section_class().plus(&fiber_class().scaled(2)));
        assert_eq!(l.parse_vector("[0,0,0,0,0,0,0,0,0,1]").unwrap(), section_class());
        assert!(l.parse_vector("e12").is_err());
        assert!(l.parse_vector("[1,2]").is_err());
    }

    #[test]
    fn json_round_trip() {
        let l = make_gamma19();
        let j = serde_json::to_value(&l).unwrap();
        assert_eq!(j["gram"].as_array().unwrap().len(), 100);
        let back: SurfaceLattice = serde_json::from_value(j).unwrap();
        assert_eq!(back.gram(), l.gram());
        assert_eq!(back.canonical(), l.canonical());
        let bad = serde_json::json!({"rank": 2, "gram": [1, 2, 3, 1], "labels": ["a", "b"], "canonical": null});
        assert!(serde_json::from_value::<SurfaceLattice>(bad).is_err());
    }

    #[test]
    fn parity_enforced_at_construction() {
        let r = SurfaceLattice::new(vec![vec![1]], vec!["h".into()], Some(LatticeVector(vec![0])));
        assert_eq!(r, Err(LatticeError::ParityViolation(1)));
    }
}
