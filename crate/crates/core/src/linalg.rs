//! Exact linear algebra over ℤ and ℚ.
//!
//! Systems are solved by fraction-free elimination: each row is scaled to
//! integers, eliminated with integer cross-multiplication and reduced by its
//! content, so intermediate entries never grow into large fractions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

/// Solution set of `A·x = b` over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    /// Some solution with every free variable set to zero, if consistent.
    pub particular: Option<Vec<Rational>>,
    /// Basis of the kernel of `A`.
    pub nullspace: Vec<Vec<Rational>>,
    pub rank: usize,
}

impl LinearSolution {
    pub fn consistent(&self) -> bool {
        self.particular.is_some()
    }
}

fn lcm_of_denominators(row: &[Rational]) -> BigInt {
    row.iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn content(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Integer reduced echelon form of an augmented integer matrix. Returns the
/// pivot columns in row order.
fn integer_rref(m: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let (piv, factor) = (m[r][c].clone(), m[i][c].clone());
            let pivot_row = m[r].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x = &*x * &piv - &factor * y;
            }
            let g = content(&m[i]);
            if !g.is_zero() && !g.is_one() {
                for x in m[i].iter_mut() {
                    *x /= &g;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `A·x = b` exactly. `a` is row-major with `b.len()` rows.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> LinearSolution {
    assert_eq!(a.len(), b.len());
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut full: Vec<Rational> = row.clone();
            full.push(rhs.clone());
            let l = lcm_of_denominators(&full);
            full.iter()
                .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    let pivots = integer_rref(&mut m, cols);
    let rank = pivots.len();
    let consistent = m[rank..].iter().all(|row| row[cols].is_zero());

    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let particular = consistent.then(|| {
        let mut x = vec![Rational::zero(); cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = Rational::new(m[r][cols].clone(), m[r][c].clone());
        }
        x
    });
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -Rational::new(m[r][f].clone(), m[r][c].clone());
            }
            v
        })
        .collect();
    LinearSolution {
        particular,
        nullspace,
        rank,
    }
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Exact LDLᵀ-style data for a positive-definite form: the Schur complements
/// of the leading principal blocks, scaled to integer matrices.
///
/// `tails[i]` is `δ_i · S_i` where `S_i` is the form on coordinates
/// `i..n` obtained by minimising over coordinates `0..i`, and `δ_i` the
/// denominator that makes it integral. `None` if a pivot is not positive.
pub fn scaled_schur_tails(gram: &[Vec<i64>]) -> Option<Vec<(i128, Vec<Vec<i128>>)>> {
    let n = gram.len();
    let mut current: Vec<Vec<Rational>> = gram
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let d = lcm_of_denominators(&current.concat());
        let scaled: Vec<Vec<i128>> = current
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| i128::try_from((x * Rational::from_integer(d.clone())).to_integer()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .ok()?;
        out.push((i128::try_from(d).ok()?, scaled));
        let pivot = current[0][0].clone();
        if !pivot.is_positive() {
            return None;
        }
        if i + 1 == n {
            break;
        }
        let next: Vec<Vec<Rational>> = (1..current.len())
            .map(|r| {
                (1..current.len())
                    .map(|c| &current[r][c] - &current[r][0] * &current[0][c] / &pivot)
                    .collect()
            })
            .collect();
        current = next;
    }
    Some(out)
}

/// Congruence diagonalisation of a symmetric rational matrix; returns the
/// diagonal entries. Zero pivots are repaired by adding a row/column with a
/// nonzero off-diagonal entry (or swapping in a nonzero diagonal entry).
pub fn congruence_diagonal(matrix: &[Vec<Rational>]) -> Vec<Rational> {
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    let mut diag = Vec::new();
    while !m.is_empty() {
        let n = m.len();
        if m[0][0].is_zero() {
            if let Some(j) = (1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(0, j);
                for row in m.iter_mut() {
                    row.swap(0, j);
                }
            } else if let Some(j) = (1..n).find(|&j| !m[0][j].is_zero()) {
                // e_0 ← e_0 + e_j gives m00 = 2·m0j ≠ 0 when every m_jj = 0
                for c in 0..n {
                    let add = m[j][c].clone();
                    m[0][c] += add;
                }
                for r in 0..n {
                    let add = m[r][j].clone();
                    m[r][0] += add;
                }
            } else {
                diag.push(Rational::zero());
                m = m[1..].iter().map(|r| r[1..].to_vec()).collect();
                continue;
            }
        }
        let p = m[0][0].clone();
        diag.push(p.clone());
        m = (1..n)
            .map(|r| {
                (1..n)
                    .map(|c| &m[r][c] - &m[r][0] * &m[0][c] / &p)
                    .collect()
            })
            .collect();
    }
    diag
}
