//! q-expansions of η, the Eisenstein series E2, E4, E6 and the E8 theta
//! series, and exact fitting of `η^e · P_w(E2, E4, E6)` against known
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, Rational};
use crate::lattice;
use crate::linalg;
use crate::series::{product_family, QSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModularError {
    #[error("Eisenstein weight must be 2, 4 or 6, got {0}")]
    UnsupportedWeight(i64),
    #[error("weight must be even and positive, got {0}")]
    OddOrNonpositiveWeight(i64),
    #[error("fit needs at least one target coefficient")]
    NoTargets,
    #[error("target exponent {0} is negative")]
    NegativeTargetExponent(i64),
    #[error("target exponent {0} listed twice")]
    DuplicateTarget(i64),
    #[error("lattice enumeration failed: {0}")]
    Lattice(#[from] lattice::LatticeError),
}

/// Weight of an Eisenstein series; only 2, 4 and 6 exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct EisensteinWeight(u8);

impl EisensteinWeight {
    pub const E2: Self = EisensteinWeight(2);
    pub const E4: Self = EisensteinWeight(4);
    pub const E6: Self = EisensteinWeight(6);

    pub fn new(weight: i64) -> Result<Self, ModularError> {
        match weight {
            2 | 4 | 6 => Ok(EisensteinWeight(weight as u8)),
            _ => Err(ModularError::UnsupportedWeight(weight)),
        }
    }

    pub fn weight(self) -> u8 {
        self.0
    }
}

/// `E_w = 1 + c_w Σ σ_{w−1}(n) qⁿ` with `c_2 = −24`, `c_4 = 240`, `c_6 = −504`.
pub fn eisenstein(w: EisensteinWeight, order: usize) -> QSeries {
    let (scale, power) = match w.0 {
        2 => (-24, 1),
        4 => (240, 3),
        _ => (-504, 5),
    };
    let mut coeffs = vec![BigInt::one()];
    coeffs.extend((1..=order as u64).map(|n| BigInt::from(scale) * arith::divisor_sigma(power, n)));
    QSeries::from_bigints("q", coeffs)
}

/// `η^e = q^{e/24} Π(1 − q^m)^e`; the prefactor is carried in the shift.
pub fn eta_quotient(e: i64, order: usize) -> QSeries {
    product_family(|_| e, order).with_shift(Rational::new(BigInt::from(e), BigInt::from(24)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaMethod {
    /// Count vectors of the E8 lattice by norm.
    Lattice,
    /// Use `θ_{E8} = E4`.
    Eisenstein,
}

/// `θ_{E8}(τ) = Σ_{v ∈ E8} q^{v·v/2}` at zero fugacities.
pub fn theta_e8(order: usize, method: ThetaMethod) -> Result<QSeries, ModularError> {
    match method {
        ThetaMethod::Eisenstein => Ok(eisenstein(EisensteinWeight::E4, order)),
        ThetaMethod::Lattice => {
            let counts = lattice::enumerate_vectors(&lattice::make_e8(), 2 * order as i64)?;
            let coeffs = (0..=order as i64)
                .map(|k| BigInt::from(counts.get(&(2 * k)).copied().unwrap_or(0)))
                .collect();
            Ok(QSeries::from_bigints("q", coeffs))
        }
    }
}

/// Exponent triple `(i, j, k)` standing for `E2^i E4^j E6^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub e2: u32,
    pub e4: u32,
    pub e6: u32,
}

impl Monomial {
    pub fn weight(&self) -> u32 {
        2 * self.e2 + 4 * self.e4 + 6 * self.e6
    }

    /// Key used in JSON output, e.g. `"(2,0,1)"`.
    pub fn key(&self) -> String {
        format!("({},{},{})", self.e2, self.e4, self.e6)
    }

    pub fn expand(&self, order: usize) -> QSeries {
        let mut acc = QSeries::one("q", order);
        for (w, p) in [
            (EisensteinWeight::E2, self.e2),
            (EisensteinWeight::E4, self.e4),
            (EisensteinWeight::E6, self.e6),
        ] {
            if p > 0 {
                let f = eisenstein(w, order).pow_int(p as i64).expect("non-negative power");
                acc = acc.mul(&f).expect("same variable");
            }
        }
        acc
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, p) in [("E2", self.e2), ("E4", self.e4), ("E6", self.e6)] {
            match p {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{p}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All monomials of a given weight, ordered lexicographically by exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    pub weight: u32,
    pub monomials: Vec<Monomial>,
}

pub fn weight_monomials(weight: i64) -> Result<MonomialBasis, ModularError> {
    if weight < 2 || weight % 2 != 0 {
        return Err(ModularError::OddOrNonpositiveWeight(weight));
    }
    let w = weight as u32;
    let mut monomials = Vec::new();
    for e2 in 0..=w / 2 {
        for e4 in 0..=w / 4 {
            let used = 2 * e2 + 4 * e4;
            if used > w || !(w - used).is_multiple_of(6) {
                continue;
            }
            monomials.push(Monomial {
                e2,
                e4,
                e6: (w - used) / 6,
            });
        }
    }
    monomials.sort();
    Ok(MonomialBasis {
        weight: w,
        monomials,
    })
}

/// Solution set of a quasi-homogeneous fit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitResult {
    pub basis: MonomialBasis,
    pub eta_exponent: i64,
    /// Solution with every free coefficient set to zero (zero vector when
    /// the system is inconsistent).
    pub particular: Vec<Rational>,
    pub nullspace: Vec<Vec<Rational>>,
    pub consistent: bool,
}

impl FitResult {
    /// Evaluates `Σ c_m · monomial_m · Π(1−q^n)^{eta_exponent}` (shift-stripped).
    pub fn series(&self, coefficients: &[Rational], order: usize) -> QSeries {
        combine(&self.basis, self.eta_exponent, coefficients, order)
    }
}

fn combine(basis: &MonomialBasis, eta_exponent: i64, coefficients: &[Rational], order: usize) -> QSeries {
    let eta = product_family(|_| eta_exponent, order);
    let mut acc = QSeries::zero("q", order);
    for (m, c) in basis.monomials.iter().zip(coefficients) {
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&m.expand(order).scale(c)).expect("compatible series");
    }
    acc.mul(&eta).expect("same variable")
}

/// Finds all `P = Σ c_m·m` of the given weight such that
/// `P(E2, E4, E6) · Π(1 − qⁿ)^{eta_exponent}` has the prescribed
/// coefficients. The `q^{eta_exponent/24}` prefactor of `η^{eta_exponent}`
/// is factored out: target exponents index the shift-stripped product.
pub fn fit_quasi_homogeneous(
    weight: i64,
    eta_exponent: i64,
    targets: &[(i64, Rational)],
) -> Result<FitResult, ModularError> {
    let basis = weight_monomials(weight)?;
    if targets.is_empty() {
        return Err(ModularError::NoTargets);
    }
    let mut seen = std::collections::BTreeSet::new();
    for (k, _) in targets {
        if *k < 0 {
            return Err(ModularError::NegativeTargetExponent(*k));
        }
        if !seen.insert(*k) {
            return Err(ModularError::DuplicateTarget(*k));
        }
    }
    let order = targets.iter().map(|(k, _)| *k as usize).max().unwrap_or(0);
    let eta = product_family(|_| eta_exponent, order);
    let columns: Vec<QSeries> = basis
        .monomials
        .iter()
        .map(|m| m.expand(order).mul(&eta).expect("same variable"))
        .collect();
    let a: Vec<Vec<Rational>> = targets
        .iter()
        .map(|(k, _)| columns.iter().map(|c| c.coeffs()[*k as usize].clone()).collect())
        .collect();
    let b: Vec<Rational> = targets.iter().map(|(_, v)| v.clone()).collect();
    let sol = linalg::solve(&a, &b);
    let consistent = sol.consistent();
    Ok(FitResult {
        particular: sol
            .particular
            .unwrap_or_else(|| vec![Rational::zero(); basis.monomials.len()]),
        nullspace: sol.nullspace,
        consistent,
        eta_exponent,
        basis,
    })
}

#[derive(Serialize, Deserialize)]
struct FitResultJson {
    weight: u32,
    eta_exponent: i64,
    consistent: bool,
    monomials: Vec<String>,
    particular: BTreeMap<String, [String; 2]>,
    nullspace: Vec<BTreeMap<String, [String; 2]>>,
}

impl Serialize for FitResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let keyed = |v: &[Rational]| -> BTreeMap<String, [String; 2]> {
            self.basis
                .monomials
                .iter()
                .zip(v)
                .map(|(m, c)| (m.key(), arith::rational_to_pair(c)))
                .collect()
        };
        FitResultJson {
            weight: self.basis.weight,
            eta_exponent: self.eta_exponent,
            consistent: self.consistent,
            monomials: self.basis.monomials.iter().map(Monomial::key).collect(),
            particular: keyed(&self.particular),
            nullspace: self.nullspace.iter().map(|v| keyed(v)).collect(),
        }
        .serialize(s)
    }
}

/// The four printed coefficients of `q·Z₂(0;τ)` for the half K3.
pub fn half_k3_z2_targets() -> Vec<(i64, Rational)> {
    vec![
        (0, arith::rat(-1, 8)),
        (1, arith::rat(18441, 2)),
        (2, arith::int(673760)),
        (3, arith::rat(82133595, 4)),
    ]
}
