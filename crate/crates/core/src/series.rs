//! Truncated formal power series with exact rational coefficients.
//!
//! A [`QSeries`] represents `q^s · (c_0 + c_1 q + … + c_N q^N + O(q^{N+1}))`
//! where the shift `s` is an exact rational. Fractional prefactors such as
//! `q^{1/24}` live only in the shift; the coefficient array is always an
//! honest power series in `q`.
//!
//! Binary operations truncate to the smaller of the two orders. Nothing is
//! ever silently extended.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, Rational};

/// Above this order multiplication switches from schoolbook to Karatsuba.
const KARATSUBA_ORDER: usize = 512;
/// Karatsuba recursion bottoms out at this operand length.
const KARATSUBA_BASE: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series variables differ: {left} vs {right}")]
    VariableMismatch { left: String, right: String },
    #[error("series shifts differ: {left} vs {right}")]
    ShiftMismatch { left: String, right: String },
    #[error("constant term is zero, series is not invertible")]
    NonUnitConstantTerm,
    #[error("exp requires a vanishing constant term")]
    NonzeroConstantTerm,
    #[error("log requires constant term 1")]
    ConstantTermNotOne,
    #[error("operation requires shift 0, found {0}")]
    NonzeroShift(String),
    #[error("coefficient {k} requested but series is only known to order {order}")]
    OrderExceeded { k: i64, order: usize },
    #[error("a series needs at least one coefficient")]
    EmptyCoefficients,
}

/// Truncated power series `q^shift · Σ_{k=0}^{order} c_k q^k`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "QSeriesJson", into = "QSeriesJson")]
pub struct QSeries {
    var: String,
    shift: Rational,
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn new(
        var: impl Into<String>,
        shift: Rational,
        coeffs: Vec<Rational>,
    ) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::EmptyCoefficients);
        }
        Ok(QSeries {
            var: var.into(),
            shift,
            coeffs,
        })
    }

    /// Series in `q` with integer coefficients and zero shift.
    /// Panics if `coeffs` is empty.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_bigints("q", coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub(crate) fn from_bigints(var: &str, coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty());
        QSeries {
            var: var.to_string(),
            shift: Rational::zero(),
            coeffs: coeffs.into_iter().map(Rational::from_integer).collect(),
        }
    }

    pub fn constant(var: impl Into<String>, c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        QSeries {
            var: var.into(),
            shift: Rational::zero(),
            coeffs,
        }
    }

    pub fn zero(var: impl Into<String>, order: usize) -> Self {
        Self::constant(var, Rational::zero(), order)
    }

    pub fn one(var: impl Into<String>, order: usize) -> Self {
        Self::constant(var, Rational::one(), order)
    }

    /// `q^k` truncated at `order` (zero if `k > order`).
    pub fn monomial(var: impl Into<String>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = Rational::one();
        }
        s
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Returns `c_k`.
    pub fn coefficient(&self, k: i64) -> Result<Rational, SeriesError> {
        if k < 0 || k as usize > self.order() {
            return Err(SeriesError::OrderExceeded {
                k,
                order: self.order(),
            });
        }
        Ok(self.coeffs[k as usize].clone())
    }

    /// Coefficients as integers, or `None` if any is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn with_shift(mut self, shift: Rational) -> Self {
        self.shift = shift;
        self
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }

    /// Drops coefficients above `order`. Orders larger than the current one
    /// are clamped: truncation never invents coefficients.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        QSeries {
            var: self.var.clone(),
            shift: self.shift.clone(),
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    fn check_var(&self, other: &Self) -> Result<(), SeriesError> {
        if self.var != other.var {
            return Err(SeriesError::VariableMismatch {
                left: self.var.clone(),
                right: other.var.clone(),
            });
        }
        Ok(())
    }

    fn check_shift(&self, other: &Self) -> Result<(), SeriesError> {
        if self.shift != other.shift {
            return Err(SeriesError::ShiftMismatch {
                left: arith::fmt_rational(&self.shift),
                right: arith::fmt_rational(&other.shift),
            });
        }
        Ok(())
    }

    fn require_zero_shift(&self) -> Result<(), SeriesError> {
        if !self.shift.is_zero() {
            return Err(SeriesError::NonzeroShift(arith::fmt_rational(&self.shift)));
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_var(other)?;
        self.check_shift(other)?;
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        Ok(QSeries {
            var: self.var.clone(),
            shift: self.shift.clone(),
            coeffs,
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add(&other.neg())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries {
            var: self.var.clone(),
            shift: self.shift.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order; shifts add.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_var(other)?;
        let n = self.order().min(other.order());
        let a = &self.coeffs[..=n];
        let b = &other.coeffs[..=n];
        let coeffs = if n > KARATSUBA_ORDER {
            let mut full = karatsuba(a, b);
            full.truncate(n + 1);
            full
        } else {
            schoolbook_truncated(a, b, n)
        };
        Ok(QSeries {
            var: self.var.clone(),
            shift: &self.shift + &other.shift,
            coeffs,
        })
    }

    /// Multiplicative inverse to the same order; the shift is negated.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut g: Vec<Rational> = Vec::with_capacity(n + 1);
        g.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &g[k - j];
                }
            }
            g.push(-acc * &inv0);
        }
        Ok(QSeries {
            var: self.var.clone(),
            shift: -&self.shift,
            coeffs: g,
        })
    }

    /// Integer power by repeated squaring. Negative exponents invert first.
    pub fn pow_int(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut result = QSeries::one(self.var.clone(), self.order());
        let mut square = base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&square)?;
            }
            exp >>= 1;
            if exp > 0 {
                square = square.mul(&square)?;
            }
        }
        result.shift = &self.shift * Rational::from_integer(BigInt::from(e));
        Ok(result)
    }

    /// `exp(f)` for `f` with zero constant term and zero shift.
    pub fn exp_series(&self) -> Result<Self, SeriesError> {
        self.require_zero_shift()?;
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        // k·g_k = Σ_{j=1..k} j·f_j·g_{k−j}
        let n = self.order();
        let mut g = vec![Rational::one()];
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &g[k - j] * BigInt::from(j);
                }
            }
            g.push(acc / BigInt::from(k));
        }
        Ok(QSeries {
            var: self.var.clone(),
            shift: Rational::zero(),
            coeffs: g,
        })
    }

    /// `log(f)` for `f` with constant term 1 and zero shift.
    pub fn log_series(&self) -> Result<Self, SeriesError> {
        self.require_zero_shift()?;
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        // q·g' = (q·f')/f
        let ratio = self.q_d_dq().mul(&self.invert()?)?;
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(
            ratio.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c / BigInt::from(i + 1)),
        );
        Ok(QSeries {
            var: self.var.clone(),
            shift: Rational::zero(),
            coeffs,
        })
    }

    /// The Euler operator `q·d/dq`. With a shift `s` the `k`-th coefficient
    /// becomes `(k + s)·c_k`, which reduces to `k·c_k` for `s = 0`.
    pub fn q_d_dq(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * (&self.shift + Rational::from_integer(BigInt::from(k))))
            .collect();
        QSeries {
            var: self.var.clone(),
            shift: self.shift.clone(),
            coeffs,
        }
    }

    /// `f(t)` for a series with zero shift, evaluated at an exact rational.
    pub fn substitute_value(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}

/// `Π_{m=1..order} (1 − q^m)^{exponent(m)}` truncated at `order`, in `q`.
pub fn product_family(exponent: impl Fn(u64) -> i64, order: usize) -> QSeries {
    product_family_in("q", exponent, order)
}

/// [`product_family`] in a named variable.
///
/// With `F = Π(1 − q^m)^{e(m)}` the logarithmic derivative gives
/// `n·F_n = −Σ_{k=1..n} b_k·F_{n−k}` where `b_k = Σ_{d|k} d·e(d)`; every
/// division is exact so the computation stays in the integers.
pub fn product_family_in(var: &str, exponent: impl Fn(u64) -> i64, order: usize) -> QSeries {
    let e: Vec<i64> = (0..=order as u64)
        .map(|m| if m == 0 { 0 } else { exponent(m) })
        .collect();
    let mut b = vec![BigInt::zero(); order + 1];
    for d in 1..=order {
        if e[d] == 0 {
            continue;
        }
        let w = BigInt::from(d as i64 * e[d]);
        for k in (d..=order).step_by(d) {
            b[k] += &w;
        }
    }
    let mut f: Vec<BigInt> = Vec::with_capacity(order + 1);
    f.push(BigInt::one());
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for k in 1..=n {
            if !b[k].is_zero() {
                acc += &b[k] * &f[n - k];
            }
        }
        let (q, r) = (-acc).div_rem(&BigInt::from(n));
        debug_assert!(r.is_zero());
        f.push(q);
    }
    QSeries::from_bigints(var, f)
}

fn schoolbook_truncated(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

fn schoolbook_full(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Full (untruncated) product of two equal-length coefficient slices.
pub(crate) fn karatsuba(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    if a.len().min(b.len()) <= KARATSUBA_BASE || a.len() != b.len() {
        return schoolbook_full(a, b);
    }
    let half = n / 2;
    let (a0, a1) = a.split_at(half);
    let (b0, b1) = b.split_at(half);
    let z0 = karatsuba(a0, b0);
    let z2 = karatsuba(a1, b1);
    let sum = |x: &[Rational], y: &[Rational]| -> Vec<Rational> {
        let len = x.len().max(y.len());
        (0..len)
            .map(|i| {
                let mut s = x.get(i).cloned().unwrap_or_else(Rational::zero);
                if let Some(v) = y.get(i) {
                    s += v;
                }
                s
            })
            .collect()
    };
    let sa = sum(a0, a1);
    let sb = sum(b0, b1);
    let z1 = karatsuba(&sa, &sb);
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.iter().enumerate() {
        out[i] += c;
        out[i + half] -= c;
    }
    for (i, c) in z2.iter().enumerate() {
        out[i + 2 * half] += c;
        out[i + half] -= c;
    }
    for (i, c) in z1.iter().enumerate() {
        out[i + half] += c;
    }
    out
}

#[cfg(test)]
pub(crate) fn schoolbook_for_tests(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    schoolbook_full(a, b)
}

/// Equality on the common truncation: same variable and shift, equal
/// coefficients up to the smaller order.
impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.var == other.var
            && self.shift == other.shift
            && self.coeffs[..=n] == other.coeffs[..=n]
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c_str = arith::fmt_rational(c);
            terms.push(match k {
                0 => c_str,
                1 => format!("{c_str}*{}", self.var),
                _ => format!("{c_str}*{}^{k}", self.var),
            });
        }
        let body = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        };
        if self.shift.is_zero() {
            write!(f, "{body} + O({}^{})", self.var, self.order() + 1)
        } else {
            write!(
                f,
                "{}^({}) * ({body} + O({}^{}))",
                self.var,
                arith::fmt_rational(&self.shift),
                self.var,
                self.order() + 1
            )
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QSeriesJson {
    var: String,
    #[serde(with = "arith::pair")]
    shift: Rational,
    order: usize,
    #[serde(with = "arith::pair::vec")]
    coeffs: Vec<Rational>,
}

impl From<QSeries> for QSeriesJson {
    fn from(s: QSeries) -> Self {
        QSeriesJson {
            order: s.order(),
            var: s.var,
            shift: s.shift,
            coeffs: s.coeffs,
        }
    }
}

impl TryFrom<QSeriesJson> for QSeries {
    type Error = String;

    fn try_from(j: QSeriesJson) -> Result<Self, String> {
        if j.coeffs.len() != j.order + 1 {
            return Err(format!(
                "order {} requires {} coefficients, found {}",
                j.order,
                j.order + 1,
                j.coeffs.len()
            ));
        }
        QSeries::new(j.var, j.shift, j.coeffs).map_err(|e| e.to_string())
    }
}

/// q-series whose coefficients are integer polynomials in a second
/// variable `t`, e.g. the Poincaré polynomials `P_t(Hilb^k S)`.
///
/// `coeffs[k]` lists the `t`-coefficients of the `q^k` term in ascending
/// degree, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BiSeriesJson", into = "BiSeriesJson")]
pub struct BiSeries {
    var_q: String,
    var_t: String,
    coeffs: Vec<Vec<BigInt>>,
}

impl BiSeries {
    pub fn one(var_q: &str, var_t: &str, order: usize) -> Self {
        let mut coeffs = vec![Vec::new(); order + 1];
        coeffs[0] = vec![BigInt::one()];
        BiSeries {
            var_q: var_q.to_string(),
            var_t: var_t.to_string(),
            coeffs,
        }
    }

    pub fn from_coeffs(var_q: &str, var_t: &str, coeffs: Vec<Vec<BigInt>>) -> Option<Self> {
        if coeffs.is_empty() {
            return None;
        }
        let coeffs = coeffs.into_iter().map(trim_poly).collect();
        Some(BiSeries {
            var_q: var_q.to_string(),
            var_t: var_t.to_string(),
            coeffs,
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn var_q(&self) -> &str {
        &self.var_q
    }

    pub fn var_t(&self) -> &str {
        &self.var_t
    }

    /// The `t`-polynomial multiplying `q^k`.
    pub fn coefficient(&self, k: usize) -> Result<&[BigInt], SeriesError> {
        self.coeffs
            .get(k)
            .map(Vec::as_slice)
            .ok_or(SeriesError::OrderExceeded {
                k: k as i64,
                order: self.order(),
            })
    }

    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.var_q != other.var_q || self.var_t != other.var_t {
            return Err(SeriesError::VariableMismatch {
                left: format!("{},{}", self.var_q, self.var_t),
                right: format!("{},{}", other.var_q, other.var_t),
            });
        }
        let n = self.order().min(other.order());
        let mut out = vec![Vec::new(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_empty() {
                continue;
            }
            for j in 0..=(n - i) {
                if other.coeffs[j].is_empty() {
                    continue;
                }
                let prod = poly_mul(&self.coeffs[i], &other.coeffs[j]);
                poly_add_assign(&mut out[i + j], &prod);
            }
        }
        Ok(BiSeries {
            var_q: self.var_q.clone(),
            var_t: self.var_t.clone(),
            coeffs: out.into_iter().map(trim_poly).collect(),
        })
    }

    /// Substitutes a value for `t`, giving an ordinary q-series.
    pub fn eval_t(&self, t: &Rational) -> QSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| {
                let mut acc = Rational::zero();
                for c in p.iter().rev() {
                    acc = acc * t + Rational::from_integer(c.clone());
                }
                acc
            })
            .collect();
        QSeries {
            var: self.var_q.clone(),
            shift: Rational::zero(),
            coeffs,
        }
    }

    /// Largest `t`-degree occurring at `q^k`, or `None` for a zero coefficient.
    pub fn degree_at(&self, k: usize) -> Option<usize> {
        let p = self.coeffs.get(k)?;
        if p.is_empty() {
            None
        } else {
            Some(p.len() - 1)
        }
    }
}

pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub(crate) fn poly_add_assign(acc: &mut Vec<BigInt>, p: &[BigInt]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += b;
    }
}

fn trim_poly(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.coeffs.iter().enumerate() {
            let poly: Vec<String> = p
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(d, c)| match d {
                    0 => c.to_string(),
                    1 => format!("{c}*{}", self.var_t),
                    _ => format!("{c}*{}^{d}", self.var_t),
                })
                .collect();
            let poly = if poly.is_empty() {
                "0".to_string()
            } else {
                poly.join(" + ").replace("+ -", "- ")
            };
            writeln!(f, "{}^{k}: {poly}", self.var_q)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct BiSeriesJson {
    var_q: String,
    var_t: String,
    order: usize,
    coeffs: Vec<Vec<String>>,
}

impl From<BiSeries> for BiSeriesJson {
    fn from(s: BiSeries) -> Self {
        BiSeriesJson {
            order: s.order(),
            var_q: s.var_q,
            var_t: s.var_t,
            coeffs: s
                .coeffs
                .iter()
                .map(|p| p.iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<BiSeriesJson> for BiSeries {
    type Error = String;

    fn try_from(j: BiSeriesJson) -> Result<Self, String> {
        if j.coeffs.len() != j.order + 1 {
            return Err(format!(
                "order {} requires {} coefficient polynomials, found {}",
                j.order,
                j.order + 1,
                j.coeffs.len()
            ));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|p| {
                p.iter()
                    .map(|c| c.trim().parse::<BigInt>().map_err(|e| e.to_string()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        BiSeries::from_coeffs(&j.var_q, &j.var_t, coeffs).ok_or_else(|| "empty series".into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn ints(s: &QSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn add_cancels_and_truncates() {
        let a = QSeries::from_ints(&[1, 1]);
        let b = QSeries::from_ints(&[1, -1]);
        assert_eq!(ints(&a.add(&b).unwrap()), vec![2, 0]);
        let z = QSeries::zero("q", 1);
        assert_eq!(a.add(&z).unwrap(), a);
        let c = QSeries::from_ints(&[1, 2, 3]);
        let s = c.add(&a).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(ints(&s), vec![2, 3]);
    }

    #[test]
    fn add_rejects_mismatches() {
        let a = QSeries::from_ints(&[1, 1]);
        let b = a.clone().with_var("v");
        assert!(matches!(a.add(&b), Err(SeriesError::VariableMismatch { .. })));
        let c = a.clone().with_shift(rat(1, 2));
        assert!(matches!(a.add(&c), Err(SeriesError::ShiftMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(SeriesError::VariableMismatch { .. })));
    }

    #[test]
    fn mul_examples() {
        let a = QSeries::from_ints(&[1, 1, 0]);
        let b = QSeries::from_ints(&[1, -1, 0]);
        assert_eq!(ints(&a.mul(&b).unwrap()), vec![1, 0, -1]);
        let one = QSeries::one("q", 2);
        assert_eq!(a.mul(&one).unwrap(), a);
        for n in [0usize, 1, 5, 40] {
            let geo = QSeries::from_ints(&vec![1; n + 1]);
            let mut lin = vec![0; n + 1];
            lin[0] = 1;
            if n >= 1 {
                lin[1] = -1;
            }
            let prod = geo.mul(&QSeries::from_ints(&lin)).unwrap();
            assert_eq!(prod, QSeries::one("q", n));
        }
    }

    #[test]
    fn mul_adds_shifts() {
        let a = QSeries::from_ints(&[1, 2]).with_shift(rat(1, 2));
        let b = QSeries::from_ints(&[3, 0]).with_shift(rat(-1, 24));
        assert_eq!(a.mul(&b).unwrap().shift(), &rat(11, 24));
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let a: Vec<Rational> = (0..700).map(|i| rat((i * 7919 % 113) - 56, 1 + i % 5)).collect();
        let b: Vec<Rational> = (0..700).map(|i| rat((i * 104729 % 97) - 48, 1 + i % 3)).collect();
        assert_eq!(karatsuba(&a, &b), schoolbook_for_tests(&a, &b));
        let fa = QSeries::new("q", int(0), a.clone()).unwrap();
        let fb = QSeries::new("q", int(0), b.clone()).unwrap();
        let big = fa.mul(&fb).unwrap();
        let small = fa.truncate(100).mul(&fb.truncate(100)).unwrap();
        assert_eq!(big.truncate(100), small);
        assert_eq!(big.order(), 699);
    }

    #[test]
    fn invert_examples() {
        let f = QSeries::from_ints(&[1, -1, 0, 0, 0]);
        assert_eq!(ints(&f.invert().unwrap()), vec![1, 1, 1, 1, 1]);
        let two = QSeries::constant("q", int(2), 3);
        assert_eq!(two.invert().unwrap().coefficient(0).unwrap(), rat(1, 2));
        let e = QSeries::new("q", int(0), vec![int(1), int(1), rat(1, 2), int(0)]).unwrap();
        let inv = e.invert().unwrap();
        assert_eq!(inv.coeffs()[..3], [int(1), int(-1), rat(1, 2)]);
        assert_eq!(e.mul(&inv).unwrap(), QSeries::one("q", 3));
        let s = f.clone().with_shift(rat(1, 3));
        assert_eq!(s.invert().unwrap().shift(), &rat(-1, 3));
        let z = QSeries::from_ints(&[0, 1]);
        assert_eq!(z.invert().unwrap_err(), SeriesError::NonUnitConstantTerm);
    }

    #[test]
    fn pow_examples() {
        // binomial-series oracle: (1−q)^{−12} has q^2 coefficient C(13,2)
        let f = QSeries::from_ints(&[1, -1, 0, 0]);
        let p = f.pow_int(-12).unwrap();
        for k in 0..=3 {
            assert_eq!(
                p.coefficient(k).unwrap(),
                Rational::from_integer(arith::binomial(11 + k, k))
            );
        }
        assert_eq!(p.coefficient(2).unwrap(), int(78));
        assert_eq!(f.pow_int(0).unwrap(), QSeries::one("q", 3));
        assert_eq!(ints(&f.pow_int(2).unwrap()), vec![1, -2, 1, 0]);
        let s = f.clone().with_shift(rat(-1, 24)).pow_int(-12).unwrap();
        assert_eq!(s.shift(), &rat(1, 2));
        let z = QSeries::from_ints(&[0, 1]);
        assert_eq!(z.pow_int(-1).unwrap_err(), SeriesError::NonUnitConstantTerm);
        assert_eq!(ints(&z.pow_int(1).unwrap()), vec![0, 1]);
    }

    #[test]
    fn exp_examples() {
        let q = QSeries::from_ints(&[0, 1, 0, 0]);
        let e = q.exp_series().unwrap();
        assert_eq!(e.coeffs(), &[int(1), int(1), rat(1, 2), rat(1, 6)]);
        assert_eq!(QSeries::zero("q", 4).exp_series().unwrap(), QSeries::one("q", 4));
        let geo = QSeries::from_ints(&[1; 10]);
        assert_eq!(geo.log_series().unwrap().exp_series().unwrap(), geo);
        assert_eq!(
            QSeries::from_ints(&[1, 1]).exp_series().unwrap_err(),
            SeriesError::NonzeroConstantTerm
        );
        assert!(matches!(
            q.clone().with_shift(rat(1, 2)).exp_series(),
            Err(SeriesError::NonzeroShift(_))
        ));
    }

    #[test]
    fn log_examples() {
        let geo = QSeries::from_ints(&[1; 4]);
        let l = geo.log_series().unwrap();
        assert_eq!(l.coeffs(), &[int(0), int(1), rat(1, 2), rat(1, 3)]);
        assert_eq!(QSeries::one("q", 5).log_series().unwrap(), QSeries::zero("q", 5));
        let f = QSeries::from_ints(&[0, 1, 1, 0, 0, 0]);
        assert_eq!(f.exp_series().unwrap().log_series().unwrap(), f);
        assert_eq!(
            QSeries::from_ints(&[2, 1]).log_series().unwrap_err(),
            SeriesError::ConstantTermNotOne
        );
    }

    #[test]
    fn euler_operator() {
        let q3 = QSeries::monomial("q", 3, 5);
        assert_eq!(q3.q_d_dq(), q3.scale(&int(3)));
        assert_eq!(QSeries::constant("q", int(7), 5).q_d_dq(), QSeries::zero("q", 5));
    }

    #[test]
    fn product_family_examples() {
        let p = product_family(|_| -12, 5);
        assert_eq!(ints(&p), vec![1, 12, 90, 520, 2535, 10908]);
        assert_eq!(product_family(|_| 0, 5), QSeries::one("q", 5));
        let p24 = product_family(|_| -24, 3);
        assert_eq!(ints(&p24), vec![1, 24, 324, 3200]);
        // (1−q)(1−q^2)... with e ≡ 1 is Euler's pentagonal series
        let euler = product_family(|_| 1, 12);
        assert_eq!(ints(&euler), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn coefficient_bounds() {
        let f = QSeries::from_ints(&[1, -1, 0, 0, 0, 0]).invert().unwrap();
        assert_eq!(f.coefficient(5).unwrap(), int(1));
        assert_eq!(
            f.coefficient(6).unwrap_err(),
            SeriesError::OrderExceeded { k: 6, order: 5 }
        );
        assert!(f.coefficient(-1).is_err());
        assert_eq!(product_family(|_| -12, 6).coefficient(4).unwrap(), int(2535));
    }

    #[test]
    fn json_shape() {
        let s = QSeries::new("q", rat(-1, 2), vec![int(1), rat(18441, 2)]).unwrap();
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(
            j,
            serde_json::json!({"var": "q", "shift": ["-1", "2"], "order": 1,
                               "coeffs": [["1", "1"], ["18441", "2"]]})
        );
        let back: QSeries = serde_json::from_value(j).unwrap();
        assert_eq!(back, s);
        let bad = serde_json::json!({"var": "q", "shift": ["0", "1"], "order": 3,
                                     "coeffs": [["1", "1"]]});
        assert!(serde_json::from_value::<QSeries>(bad).is_err());
    }

    #[test]
    fn biseries_eval_and_json() {
        let b = BiSeries::from_coeffs(
            "q",
            "t",
            vec![vec![BigInt::one()], vec![1, 0, 22, 0, 1].into_iter().map(BigInt::from).collect()],
        )
        .unwrap();
        assert_eq!(b.eval_t(&int(-1)).coeffs(), &[int(1), int(24)]);
        assert_eq!(b.degree_at(1), Some(4));
        let j = serde_json::to_string(&b).unwrap();
        let back: BiSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(back, b);
    }
}
