//! Number-theoretic helpers shared by the series and invariant modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// Builds `num/den` from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"a"`, `"-a"` or `"a/b"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Human-readable form: `3`, `-1/8`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sum of the `power`-th powers of the positive divisors of `n` (`n ≥ 1`).
pub fn divisor_sigma(power: u32, n: u64) -> BigInt {
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigInt::from(d).pow(power);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(power);
            }
        }
        d += 1;
    }
    total
}

/// Binomial coefficient `C(m, k)` for `m ≥ 0`; zero when `k < 0` or `k > m`.
pub fn binomial(m: i64, k: i64) -> BigInt {
    if k < 0 || m < 0 || k > m {
        return BigInt::zero();
    }
    let k = k.min(m - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalised binomial `C(m, k)` for any integer `m` and `k ≥ 0`, i.e. the
/// coefficient of `x^k` in `(1 + x)^m`.
pub fn binomial_signed(m: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

/// Serialises a rational as `["num", "den"]` with decimal-string components.
pub fn rational_to_pair(r: &Rational) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

pub fn rational_from_pair(pair: &[String; 2]) -> Option<Rational> {
    let n: BigInt = pair[0].trim().parse().ok()?;
    let d: BigInt = pair[1].trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Serde adapter for a single rational encoded as a `[num, den]` pair.
/// Numbers are accepted either as JSON strings or JSON integers on input.
pub mod pair {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Component {
        Str(String),
        Int(i64),
    }

    impl Component {
        fn into_bigint<E: serde::de::Error>(self) -> Result<BigInt, E> {
            match self {
                Component::Str(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| E::custom(format!("invalid integer {s:?}"))),
                Component::Int(i) => Ok(BigInt::from(i)),
            }
        }
    }

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        rational_to_pair(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let [n, den] = <[Component; 2]>::deserialize(d)?;
        let n = n.into_bigint::<D::Error>()?;
        let den = den.into_bigint::<D::Error>()?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rational::new(n, den))
    }

    /// Same encoding for a list of rationals.
    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let pairs: Vec<[String; 2]> = v.iter().map(rational_to_pair).collect();
            pairs.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            #[derive(Deserialize)]
            struct Wrapped(#[serde(with = "super")] Rational);
            let v = Vec::<Wrapped>::deserialize(d)?;
            Ok(v.into_iter().map(|w| w.0).collect())
        }
    }
}

/// `true` when `r` is a (possibly negative) integer.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// `2^e` as an exact rational for any integer exponent.
pub fn pow2(e: i64) -> Rational {
    let base = BigInt::from(2).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::one(), base)
    }
}

/// Integer square root: the largest `s ≥ 0` with `s² ≤ n` (`n ≥ 0`).
pub fn isqrt_i128(n: i128) -> i128 {
    debug_assert!(n >= 0);
    if n < 2 {
        return n;
    }
    let mut s = (n as f64).sqrt() as i128;
    while s * s > n {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    s
}
