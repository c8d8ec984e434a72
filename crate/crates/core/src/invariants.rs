//! Enumerative invariants of surfaces built on the series and lattice layers:
//! Hilbert-scheme Euler and Poincaré series, the trivial elliptic fibration
//! `E × S`, the half K3 surface, admissibility of curve classes and the
//! Seiberg–Witten side of the rank-two wall-crossing formula.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, Rational};
use crate::modular::{eisenstein, EisensteinWeight};
use crate::series::{poly_add_assign, product_family, product_family_in, BiSeries, QSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("β·β + K·β = {0} is odd")]
    ParityViolation(i64),
    #[error("Spin^c classes on P^2 are odd multiples of h, got {0}h")]
    EvenClass(i64),
    #[error("closed form needs p_g > 0, got {0}")]
    NonpositivePg(i64),
    #[error("dimension must be non-negative, got {0}")]
    NegativeDimension(i64),
    #[error("χ(v) = {0} is not an integer")]
    NonIntegerChiV(String),
    #[error("4n = {0} is not an integer")]
    NonIntegralCharge(String),
    #[error("decomposition {index}: {reason}")]
    InvalidDecomposition { index: usize, reason: String },
    #[error("inconsistent surface data: {0}")]
    InconsistentSurface(String),
}

/// Topological and holomorphic invariants of a compact complex surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceData {
    pub betti: [i64; 5],
    pub chi_top: i64,
    pub chi_o: i64,
    pub p_g: i64,
    pub b1_zero: bool,
}

impl SurfaceData {
    pub fn new(betti: [i64; 5], chi_o: i64, p_g: i64) -> Result<Self, InvariantError> {
        let chi_top = betti[0] - betti[1] + betti[2] - betti[3] + betti[4];
        let b1_zero = betti[1] == 0;
        if betti.iter().any(|b| *b < 0) || p_g < 0 {
            return Err(InvariantError::InconsistentSurface(
                "Betti numbers and p_g must be non-negative".into(),
            ));
        }
        if b1_zero && chi_o != 1 + p_g {
            return Err(InvariantError::InconsistentSurface(format!(
                "b1 = 0 requires χ(O) = 1 + p_g, got χ(O) = {chi_o}, p_g = {p_g}"
            )));
        }
        Ok(SurfaceData {
            betti,
            chi_top,
            chi_o,
            p_g,
            b1_zero,
        })
    }

    pub fn p2() -> Self {
        Self::new([1, 0, 1, 0, 1], 1, 0).expect("valid")
    }

    pub fn k3() -> Self {
        Self::new([1, 0, 22, 0, 1], 2, 1).expect("valid")
    }

    /// The half K3 `B9`, ℙ² blown up at nine points.
    pub fn b9() -> Self {
        Self::new([1, 0, 10, 0, 1], 1, 0).expect("valid")
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "p2" => Some(Self::p2()),
            "k3" => Some(Self::k3()),
            "b9" | "half-k3" => Some(Self::b9()),
            _ => None,
        }
    }

    /// Signature `b₂⁺ − b₂⁻ = (K² − 2χ)/3` is not derivable from Betti
    /// numbers alone; for `b1 = 0` Kähler surfaces `b₂⁺ = 2p_g + 1`.
    pub fn signature(&self) -> Option<i64> {
        self.b1_zero.then(|| {
            let plus = 2 * self.p_g + 1;
            plus - (self.betti[2] - plus)
        })
    }
}

/// Hodge diamond of B9, rows `h^{p,q}` with `p + q = 0..4`.
pub fn b9_hodge_diamond() -> Vec<Vec<i64>> {
    vec![vec![1], vec![0, 0], vec![0, 10, 0], vec![0, 0], vec![1]]
}

/// Euler number as the alternating sum of Hodge-diamond rows.
pub fn euler_from_hodge(diamond: &[Vec<i64>]) -> i64 {
    diamond
        .iter()
        .enumerate()
        .map(|(k, row)| if k % 2 == 0 { 1 } else { -1 } * row.iter().sum::<i64>())
        .sum()
}

/// Euler number of ℙ² blown up at `points` points: `χ(ℙ²) − points·χ(pt) + points·χ(ℙ¹)`.
pub fn euler_of_p2_blowup(points: i64) -> i64 {
    3 - points + 2 * points
}

/// `Σ χ(Hilb^k S) q^k = Π(1 − qⁿ)^{−χ(S)}`.
pub fn hilb_euler_series(s: &SurfaceData, order: usize) -> QSeries {
    hilb_euler_from_chi(s.chi_top, order)
}

pub fn hilb_euler_from_chi(chi: i64, order: usize) -> QSeries {
    product_family(|_| -chi, order)
}

/// Göttsche's generating function `Σ q^k P_t(Hilb^k S)`:
/// `Π_m Π_{i=0..4} (1 − (−t)^{2m−2+i} q^m)^{−(−1)^i b_i}`.
pub fn goettsche_series(s: &SurfaceData, order: usize) -> BiSeries {
    let mut acc = BiSeries::one("q", "t", order);
    for m in 1..=order {
        for (i, &b) in s.betti.iter().enumerate() {
            if b == 0 {
                continue;
            }
            let t_exp = 2 * m - 2 + i;
            // (1 − (−t)^e x)^{−(−1)^i b}: odd i gives (1 + t^e x)^b, even i gives (1 − t^e x)^{−b}
            let (power, sign) = if i % 2 == 1 { (b, 1) } else { (-b, -1) };
            let mut factor = vec![Vec::new(); order + 1];
            for j in 0..=(order / m) {
                let mut c = arith::binomial_signed(power, j as u64);
                if sign < 0 && j % 2 == 1 {
                    c = -c;
                }
                if c.is_zero() {
                    continue;
                }
                let mut poly = vec![BigInt::zero(); t_exp * j + 1];
                poly[t_exp * j] = c;
                poly_add_assign(&mut factor[m * j], &poly);
            }
            let factor = BiSeries::from_coeffs("q", "t", factor).expect("non-empty");
            acc = acc.mul(&factor).expect("same variables");
        }
    }
    acc
}

/// Poincaré polynomial `Σ b_i t^i` of the surface itself.
pub fn poincare_polynomial(s: &SurfaceData) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = s.betti.iter().map(|&b| BigInt::from(b)).collect();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Bryan–Leung generating function for genus `g` curves in `B + (g+n)F`:
/// `(Σ_{k≥1} k·σ(k)·q^{k−1})^g · Π(1 − q^m)^{−12}`.
pub fn bryan_leung_series(g: u32, order: usize) -> QSeries {
    let base = product_family(|_| -12, order);
    if g == 0 {
        return base;
    }
    let inner = QSeries::from_bigints(
        "q",
        (1..=order as u64 + 1)
            .map(|k| BigInt::from(k) * arith::divisor_sigma(1, k))
            .collect(),
    );
    inner.pow_int(g as i64).expect("non-negative").mul(&base).expect("same variable")
}

/// `N^E_{1,k}` for `k = 1..=order`, read off from
/// `exp(Σ N^E_{1,k} v^k) = Π(1 − v^m)^{−1}`.
pub fn elliptic_genus1_coeffs(order: usize) -> Vec<Rational> {
    let partitions = product_family_in("v", |_| -1, order);
    let log = partitions.log_series().expect("constant term 1");
    log.coeffs()[1..].to_vec()
}

/// Closed form `σ(k)/k` of the genus-one invariant of an elliptic curve.
pub fn elliptic_genus1_closed_form(k: u64) -> Rational {
    Rational::new(arith::divisor_sigma(1, k), BigInt::from(k))
}

/// `N_{1,k} = χ(S)·N^E_{1,k}` for `E × S`.
pub fn trivial_fibration_genus1(s: &SurfaceData, order: usize) -> Vec<Rational> {
    let chi = Rational::from_integer(BigInt::from(s.chi_top));
    elliptic_genus1_coeffs(order).into_iter().map(|c| c * &chi).collect()
}

/// DT generating series `Σ_k Ñ_{n,k} v^k` of `E × S` for fixed `n`.
#[derive(Debug, Clone, PartialEq)]
pub enum DtTrivialElliptic {
    /// `Ñ_{n,k} = 0` for every `k` (no fixed points of the `E`-action when `n ≠ 0`).
    Zero,
    Series(QSeries),
}

pub fn dt_trivial_elliptic(s: &SurfaceData, n: i64, order: usize) -> DtTrivialElliptic {
    if n != 0 {
        return DtTrivialElliptic::Zero;
    }
    DtTrivialElliptic::Series(product_family_in("v", |_| -s.chi_top, order))
}

/// `q^{1/2} Z₁(0;τ) = θ_{E8}(τ;0) q^{1/2} / η^{12} = E4 · Π(1 − q^m)^{−12}`.
pub fn half_k3_z1(order: usize) -> QSeries {
    eisenstein(EisensteinWeight::E4, order)
        .mul(&product_family(|_| -12, order))
        .expect("same variable")
}

/// The expansion printed alongside the half-K3 `Z₁` formula. It agrees with
/// neither `E4·Π(1−q^m)^{−1}` nor `E4·Π(1−q^m)^{−12}` and is kept only so the
/// discrepancy can be reported.
pub const HALF_K3_Z1_PRINTED: [i64; 6] = [1, 12, 330, 3400, 26295, 161628];

/// Admissibility data for a curve class from `β²` and `K·β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GromovCheck {
    pub beta_sq: i64,
    #[serde(rename = "K_beta")]
    pub k_beta: i64,
    pub genus: i64,
    pub n_points: i64,
    pub toroidal: bool,
    pub admissible: bool,
}

pub fn gromov_conditions(beta_sq: i64, k_beta: i64) -> Result<GromovCheck, InvariantError> {
    let s = beta_sq + k_beta;
    if s.rem_euclid(2) != 0 {
        return Err(InvariantError::ParityViolation(s));
    }
    let genus = 1 + s / 2;
    let n_points = (beta_sq - k_beta) / 2;
    let toroidal = beta_sq == 0 && k_beta == 0;
    Ok(GromovCheck {
        beta_sq,
        k_beta,
        genus,
        n_points,
        toroidal,
        admissible: n_points >= 0 && !toroidal,
    })
}

/// Chern data `(r, a, n)` reduced to the intersection numbers the rank-two
/// formulas need.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernVector {
    pub r: i64,
    pub a_h: i64,
    #[serde(rename = "a_K")]
    pub a_k: i64,
    pub a_sq: i64,
    #[serde(with = "arith::pair")]
    pub n: Rational,
}

/// Riemann–Roch `χ(v) = r·χ(O_S) − (a·K)/2 + n`.
pub fn chi_v(v: &ChernVector, chi_o: i64) -> Rational {
    Rational::from_integer(BigInt::from(v.r * chi_o)) - arith::rat(v.a_k, 2) + &v.n
}

/// `d = a² − 4n − 3χ(O_S)`.
pub fn virtual_dim(v: &ChernVector, chi_o: i64) -> Result<i64, InvariantError> {
    let four_n = &v.n * BigInt::from(4);
    if !four_n.is_integer() {
        return Err(InvariantError::NonIntegralCharge(arith::fmt_rational(&four_n)));
    }
    let four_n = i64::try_from(four_n.to_integer()).map_err(|_| {
        InvariantError::NonIntegralCharge(arith::fmt_rational(&four_n))
    })?;
    Ok(v.a_sq - four_n - 3 * chi_o)
}

/// `d_c = (c² − 2χ(S) − 3σ(S))/4`.
pub fn sw_dimension(c_sq: i64, chi_top: i64, sigma: i64) -> Rational {
    arith::rat(c_sq - 2 * chi_top - 3 * sigma, 4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chamber {
    Plus,
    Minus,
}

/// Seiberg–Witten invariant of ℙ² for `c = c_coeff·h` in the given chamber.
pub fn sw_p2(c_coeff: i64, chamber: Chamber) -> Result<i64, InvariantError> {
    if c_coeff.rem_euclid(2) == 0 {
        return Err(InvariantError::EvenClass(c_coeff));
    }
    Ok(match chamber {
        Chamber::Plus if c_coeff >= 3 => 1,
        Chamber::Minus if c_coeff <= -3 => -1,
        _ => 0,
    })
}

/// `SW(c) = (−1)^d · C(p_g − 1, d)` for surfaces with `p_g > 0`.
pub fn sw_closed_form(d: i64, p_g: i64) -> Result<BigInt, InvariantError> {
    if p_g <= 0 {
        return Err(InvariantError::NonpositivePg(p_g));
    }
    if d < 0 {
        return Err(InvariantError::NegativeDimension(d));
    }
    let b = arith::binomial(p_g - 1, d);
    Ok(if d % 2 == 0 { b } else { -b })
}

/// One term `a = a₁ + a₂` of the wall-crossing sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SWDecomposition {
    pub a1_h: i64,
    pub a2_h: i64,
    #[serde(rename = "sw")]
    pub sw_a1: i64,
    /// Caller-supplied value of the residue integral `A(a₁, a₂, v)`.
    #[serde(rename = "A", with = "arith::pair")]
    pub a_value: Rational,
}

/// Input of [`mochizuki_sum`]; also the schema of decomposition files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MochizukiInput {
    pub v: ChernVector,
    #[serde(with = "arith::pair")]
    pub chi_v: Rational,
    /// `K_S·h`, needed only to check the hypothesis `a·h > 2K_S·h`.
    #[serde(default, rename = "K_h", skip_serializing_if = "Option::is_none")]
    pub k_h: Option<i64>,
    pub decomps: Vec<SWDecomposition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisWarning {
    /// `χ(v) < 1`.
    ChiVBelowOne,
    /// `a·h ≤ 2K_S·h`.
    DegreeNotAboveTwiceKh,
    /// `K_S·h` not supplied, so `a·h > 2K_S·h` was not checked.
    KhUnchecked,
    /// The formula is stated for rank two.
    RankNotTwo,
    /// The formula is stated for odd `a·h`.
    EvenDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MochizukiOutcome {
    #[serde(with = "arith::pair")]
    pub value: Rational,
    pub warnings: Vec<HypothesisWarning>,
}

impl MochizukiOutcome {
    pub fn hypotheses_hold(&self) -> bool {
        self.warnings.is_empty()
    }
}

/// `−Σ SW(a₁) · 2^{1−χ(v)} · A(a₁, a₂, v)` over the supplied decompositions.
/// Unmet hypotheses are reported as warnings; the sum is returned regardless.
pub fn mochizuki_sum(input: &MochizukiInput) -> Result<MochizukiOutcome, InvariantError> {
    if !input.chi_v.is_integer() {
        return Err(InvariantError::NonIntegerChiV(arith::fmt_rational(&input.chi_v)));
    }
    for (index, d) in input.decomps.iter().enumerate() {
        if d.a1_h + d.a2_h != input.v.a_h {
            return Err(InvariantError::InvalidDecomposition {
                index,
                reason: format!("a1·h + a2·h = {} but a·h = {}", d.a1_h + d.a2_h, input.v.a_h),
            });
        }
        if d.a1_h >= d.a2_h {
            return Err(InvariantError::InvalidDecomposition {
                index,
                reason: format!("requires a1·h < a2·h, got {} ≥ {}", d.a1_h, d.a2_h),
            });
        }
    }
    let mut warnings = Vec::new();
    if input.v.r != 2 {
        warnings.push(HypothesisWarning::RankNotTwo);
    }
    if input.v.a_h.rem_euclid(2) == 0 {
        warnings.push(HypothesisWarning::EvenDegree);
    }
    match input.k_h {
        Some(kh) if input.v.a_h <= 2 * kh => warnings.push(HypothesisWarning::DegreeNotAboveTwiceKh),
        Some(_) => {}
        None => warnings.push(HypothesisWarning::KhUnchecked),
    }
    if input.chi_v < Rational::one() {
        warnings.push(HypothesisWarning::ChiVBelowOne);
    }
    let chi = i64::try_from(input.chi_v.to_integer())
        .map_err(|_| InvariantError::NonIntegerChiV(arith::fmt_rational(&input.chi_v)))?;
    let weight = arith::pow2(1 - chi);
    let total: Rational = input
        .decomps
        .iter()
        .map(|d| Rational::from_integer(BigInt::from(d.sw_a1)) * &d.a_value)
        .sum();
    Ok(MochizukiOutcome {
        value: -(total * weight),
        warnings,
    })
}

/// `DT̄(v) = (Mochizuki part) + DT̂_h(v)`, the latter supplied externally.
pub fn sw_dt_assemble(mochizuki_part: &Rational, dt_hat: &Rational) -> Rational {
    mochizuki_part + dt_hat
}
