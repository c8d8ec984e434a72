//! Golden verification suite: recomputes every checkable published number
//! and the structural identities behind them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{self, Rational};
use crate::invariants::{self, Chamber, SurfaceData};
use crate::lattice::{self, SurfaceLattice};
use crate::linalg;
use crate::modular::{self, EisensteinWeight, ThetaMethod};
use crate::series::{product_family, QSeries};

/// Highest q-power for which the E8 lattice count is cross-checked.
pub const THETA_CHECK_ORDER: usize = 10;
/// Exceptional classes are searched up to this e0-degree.
pub const EXCEPTIONAL_SEARCH_BOUND: i64 = 7;
/// Number of (−1)-classes on ℙ² blown up at k = 1..8 points.
pub const EXCEPTIONAL_COUNTS: [usize; 8] = [1, 3, 6, 10, 16, 27, 56, 240];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Compared against published digits known to be inconsistent.
    Flagged,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flagged => "FLAGGED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub citation: String,
}

impl VerificationReport {
    fn compare(name: &str, expected: String, actual: String, citation: &str) -> Self {
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            check_name: name.to_string(),
            status,
            expected,
            actual,
            citation: citation.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Series,
    Modular,
    Lattice,
    Invariants,
    Sw,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["all", "series", "modular", "lattice", "invariants", "sw"];

    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "all" => Suite::All,
            "series" => Suite::Series,
            "modular" => Suite::Modular,
            "lattice" => Suite::Lattice,
            "invariants" => Suite::Invariants,
            "sw" => Suite::Sw,
            _ => return None,
        })
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn series_str(s: &QSeries) -> String {
    join(s.coeffs().iter().map(arith::fmt_rational))
}

/// Runs the named suite at the given order (never below 5).
pub fn run_suite(suite: Suite, order: usize) -> Vec<VerificationReport> {
    let order = order.max(5);
    let mut out = Vec::new();
    if suite.includes(Suite::Series) {
        series_checks(order, &mut out);
    }
    if suite.includes(Suite::Modular) {
        modular_checks(order, &mut out);
    }
    if suite.includes(Suite::Lattice) {
        lattice_checks(&mut out);
    }
    if suite.includes(Suite::Invariants) {
        invariant_checks(order, &mut out);
    }
    if suite.includes(Suite::Sw) {
        sw_checks(&mut out);
    }
    out
}

fn series_checks(order: usize, out: &mut Vec<VerificationReport>) {
    out.push(VerificationReport::compare(
        "eta^-12 section-class series",
        "1, 12, 90, 520, 2535, 10908".into(),
        series_str(&product_family(|_| -12, 5)),
        "genus-0 invariants of the half K3 in classes B + kF: 1+12q+90q^2+520q^3+2535q^4+10908q^5",
    ));
    for chi in [1i64, 12, 24] {
        let direct = product_family(|_| -chi, order);
        let powered = product_family(|_| -1, order).pow_int(chi).expect("power");
        out.push(VerificationReport::compare(
            &format!("product family chi={chi} equals power of partition series"),
            series_str(&direct),
            series_str(&powered),
            "Euler numbers of Hilbert schemes as a product over n of (1-q^n)^(-chi)",
        ));
    }
}

fn modular_checks(order: usize, out: &mut Vec<VerificationReport>) {
    let n = order.max(30);
    let e2 = modular::eisenstein(EisensteinWeight::E2, n);
    let e4 = modular::eisenstein(EisensteinWeight::E4, n);
    let e6 = modular::eisenstein(EisensteinWeight::E6, n);
    let mul = |a: &QSeries, b: &QSeries| a.mul(b).expect("same variable");
    let sub = |a: &QSeries, b: &QSeries| a.sub(b).expect("same variable");
    let identities = [
        ("Ramanujan q dE2/dq = (E2^2 - E4)/12", e2.q_d_dq(), sub(&mul(&e2, &e2), &e4).scale(&arith::rat(1, 12))),
        ("Ramanujan q dE4/dq = (E2 E4 - E6)/3", e4.q_d_dq(), sub(&mul(&e2, &e4), &e6).scale(&arith::rat(1, 3))),
        ("Ramanujan q dE6/dq = (E2 E6 - E4^2)/2", e6.q_d_dq(), sub(&mul(&e2, &e6), &mul(&e4, &e4)).scale(&arith::rat(1, 2))),
    ];
    for (name, lhs, rhs) in identities {
        out.push(VerificationReport::compare(
            &format!("{name} to order {n}"),
            series_str(&rhs),
            series_str(&lhs),
            "classical quasi-modular derivative identities",
        ));
    }
    let disc = sub(&e4.pow_int(3).expect("power"), &e6.pow_int(2).expect("power"));
    let eta24 = product_family(|_| 24, n);
    let mut shifted = vec![Rational::zero()];
    shifted.extend(eta24.coeffs()[..n].iter().map(|c| c * BigInt::from(1728)));
    out.push(VerificationReport::compare(
        &format!("E4^3 - E6^2 = 1728 q prod(1-q^n)^24 to order {n}"),
        join(shifted.iter().map(arith::fmt_rational)),
        series_str(&disc),
        "discriminant identity",
    ));

    let t = THETA_CHECK_ORDER.min(order);
    let lattice_side = modular::theta_e8(t, ThetaMethod::Lattice).map(|s| series_str(&s));
    out.push(VerificationReport::compare(
        &format!("theta_E8 by lattice enumeration equals E4 to order {t}"),
        series_str(&modular::theta_e8(t, ThetaMethod::Eisenstein).expect("closed form")),
        lattice_side.unwrap_or_else(|e| format!("error: {e}")),
        "theta series of E8 at zero fugacity has leading coefficient 1 and equals E4",
    ));

    let z1 = invariants::half_k3_z1(5);
    out.push(VerificationReport {
        check_name: "half-K3 q^(1/2) Z_1(0) printed expansion".into(),
        status: Status::Flagged,
        expected: join(invariants::HALF_K3_Z1_PRINTED),
        actual: series_str(&z1),
        citation: "printed as E4/prod(1-q^m) = 1+12q+330q^2+3400q^3+26295q^4+161628q^5; \
                   those digits match neither E4/prod(1-q^m) (1, 241, ...) nor \
                   theta_E8 q^(1/2)/eta^12 = E4 prod(1-q^m)^(-12) (1, 252, 5130, ...); \
                   the derived series is reported and the printed digits left unverified"
            .into(),
    });

    let fit = modular::fit_quasi_homogeneous(10, -24, &modular::half_k3_z2_targets());
    let (status, actual) = match &fit {
        Ok(f) => {
            let reproduces = f.consistent
                && modular::half_k3_z2_targets().iter().all(|(k, v)| {
                    f.series(&f.particular, 3).coeffs()[*k as usize] == *v
                });
            (
                if reproduces { Status::Pass } else { Status::Fail },
                format!("consistent={}, nullspace_dim={}", f.consistent, f.nullspace.len()),
            )
        }
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    out.push(VerificationReport {
        check_name: "q Z_2(0) fit by eta^-24 P_10(E2,E4,E6)".into(),
        status,
        expected: "consistent=true".into(),
        actual,
        citation: "q Z_2(0) = -1/8 + 18441/2 q + 673760 q^2 + 82133595/4 q^3 + ...".into(),
    });
}

fn lattice_checks(out: &mut Vec<VerificationReport>) {
    let g = lattice::make_gamma19();
    let (f, b) = (lattice::fiber_class(), lattice::section_class());
    let pairs = [("F.B", &f, &b, 1), ("B.B", &b, &b, -1), ("F.F", &f, &f, 0)];
    for (name, u, v, want) in pairs {
        out.push(VerificationReport::compare(
            name,
            want.to_string(),
            g.pair(u, v).map_or_else(|e| e.to_string(), |x| x.to_string()),
            "F = 3e0 - e1 - ... - e9, B = e9 in diag(1,-1,...,-1)",
        ));
    }
    let sig = |l: &SurfaceLattice| l.signature().map_or_else(|e| e.to_string(), |(p, q)| format!("({p}, {q})"));
    out.push(VerificationReport::compare(
        "signature of Gamma^{1,9}",
        "(1, 9)".into(),
        sig(&g),
        "H2(B9) is the odd unimodular lattice of signature (1,9)",
    ));
    out.push(VerificationReport::compare(
        "determinant of Gamma^{1,9}",
        "-1".into(),
        g.determinant().to_string(),
        "unimodularity",
    ));
    out.push(VerificationReport::compare(
        "signature of Gamma^{1,1} = span(F, B)",
        "(1, 1)".into(),
        sig(&lattice::make_gamma11()),
        "span of F and B is odd unimodular of signature (1,1)",
    ));
    let negated: Vec<Vec<i64>> = lattice::e8_cartan()
        .iter()
        .map(|r| r.iter().map(|x| -x).collect())
        .collect();
    out.push(VerificationReport::compare(
        "E8(-1) simple roots e0-e1-e2-e3, e1-e2, ..., e7-e8 have Gram = -Cartan",
        format!("{negated:?}"),
        format!("{:?}", g.gram_of(&lattice::e8_minus_simple_roots()).expect("rank 10")),
        "E8(-1) generated by -e0+e1+e2+e3, e1-e2, ..., e7-e8",
    ));
    out.push(VerificationReport::compare(
        "E8(-1) generators -e0+e1+e2+e3, e1-e2, ..., e7-e8 have Gram = -D Cartan D, D = diag(-1,1,...,1)",
        format!("{:?}", lattice::e8_minus_expected_gram()),
        format!("{:?}", g.gram_of(&lattice::e8_minus_basis()).expect("rank 10")),
        "the first generator pairs to -1 with e3-e4, so the stated basis matches -Cartan up to its sign",
    ));
    let mut span = vec![f.clone(), b.clone()];
    span.extend(lattice::e8_minus_basis());
    let gram = g.gram_of(&span).expect("rank 10");
    let orthogonal = (0..2).all(|i| (2..10).all(|j| gram[i][j] == 0));
    out.push(VerificationReport::compare(
        "Gamma^{1,1} and E8(-1) are orthogonal and span Gamma^{1,9}",
        "orthogonal=true, |det|=1".into(),
        format!("orthogonal={orthogonal}, |det|={}", num_traits::Signed::abs(&linalg::determinant(&gram))),
        "orthogonal decomposition Gamma^{1,9} = Gamma^{1,1} + E8(-1)",
    ));
    out.push(VerificationReport::compare(
        "adjunction genus of F, B, e0",
        "1, 0, 0".into(),
        join(
            [f.clone(), b.clone(), lattice::LatticeVector::basis(10, 0)]
                .iter()
                .map(|v| g.adjunction_genus(v).map_or_else(|e| e.to_string(), |x| x.to_string())),
        ),
        "K = -F; E0 has E0.E0 = 1 and genus zero",
    ));
    let counts: Vec<usize> = (1..=8)
        .map(|k| lattice::exceptional_classes(k, EXCEPTIONAL_SEARCH_BOUND).len())
        .collect();
    out.push(VerificationReport::compare(
        &format!("exceptional classes on P^2 blown up at k = 1..8 points (degree <= {EXCEPTIONAL_SEARCH_BOUND})"),
        join(EXCEPTIONAL_COUNTS),
        join(counts),
        "classes with K.beta = beta.beta = -1",
    ));
    let margin: usize = (1..=8)
        .map(|k| {
            lattice::exceptional_classes(k, EXCEPTIONAL_SEARCH_BOUND)
                .iter()
                .filter(|v| v.0[0] > 6)
                .count()
        })
        .sum();
    out.push(VerificationReport::compare(
        "no exceptional classes of degree above 6",
        "0".into(),
        margin.to_string(),
        "search bound margin",
    ));
}

fn invariant_checks(order: usize, out: &mut Vec<VerificationReport>) {
    out.push(VerificationReport::compare(
        "chi(B9) from blow-up count",
        "12".into(),
        invariants::euler_of_p2_blowup(9).to_string(),
        "chi(B9) = chi(P2) - 9 chi(pt) + 9 chi(P1) = 3 - 9 + 18",
    ));
    out.push(VerificationReport::compare(
        "chi(B9) from Hodge diamond",
        "12".into(),
        invariants::euler_from_hodge(&invariants::b9_hodge_diamond()).to_string(),
        "Hodge diamond 1; 0 0; 0 10 0; 0 0; 1",
    ));
    for (name, s) in [("P2", SurfaceData::p2()), ("K3", SurfaceData::k3()), ("B9", SurfaceData::b9())] {
        let g = invariants::goettsche_series(&s, order).eval_t(&arith::int(-1));
        out.push(VerificationReport::compare(
            &format!("Goettsche series at t=-1 for {name} to order {order}"),
            series_str(&invariants::hilb_euler_series(&s, order)),
            series_str(&g),
            "sum chi(Hilb^k S) q^k = prod (1-q^n)^(-chi(S))",
        ));
    }
    out.push(VerificationReport::compare(
        "Bryan-Leung g=0 equals the eta^-12 series",
        series_str(&product_family(|_| -12, order)),
        series_str(&invariants::bryan_leung_series(0, order)),
        "the case g = 0 of the Bryan-Leung formula",
    ));
    let log_side = invariants::elliptic_genus1_coeffs(order);
    let closed: Vec<Rational> = (1..=order as u64).map(invariants::elliptic_genus1_closed_form).collect();
    out.push(VerificationReport::compare(
        "genus-one invariants of E are sigma(k)/k",
        join(closed.iter().map(arith::fmt_rational)),
        join(log_side.iter().map(arith::fmt_rational)),
        "exp(sum N_{1,k} v^k) = prod 1/(1-v^m)",
    ));
}

fn sw_checks(out: &mut Vec<VerificationReport>) {
    let table = [
        (3, Chamber::Plus, 1),
        (1, Chamber::Plus, 0),
        (-3, Chamber::Minus, -1),
        (-1, Chamber::Minus, 0),
    ];
    out.push(VerificationReport::compare(
        "SW of P2 chamber table",
        join(table.iter().map(|t| t.2)),
        join(table.iter().map(|(c, ch, _)| {
            invariants::sw_p2(*c, *ch).map_or_else(|e| e.to_string(), |x| x.to_string())
        })),
        "SW+(c) = 1 for c.h >= 3, 0 below; SW-(c) = -1 for c.h <= -3, 0 above",
    ));
    let cs = [3i64, 5, -3, -5];
    out.push(VerificationReport::compare(
        "SW wall crossing SW+ - SW- = 1 on P2",
        join(cs.iter().map(|_| 1)),
        join(cs.iter().map(|c| {
            invariants::sw_p2(*c, Chamber::Plus).unwrap_or(0) - invariants::sw_p2(*c, Chamber::Minus).unwrap_or(0)
        })),
        "wall-crossing jump for simply connected surfaces",
    ));
    out.push(VerificationReport::compare(
        "SW dimension of 3h and 5h on P2",
        "0, 4".into(),
        join([9, 25].iter().map(|c2| arith::fmt_rational(&invariants::sw_dimension(*c2, 3, 1)))),
        "d_c = (c^2 - 2 chi - 3 sigma)/4",
    ));
    let cases = [(0, 4), (1, 3), (5, 3)];
    out.push(VerificationReport::compare(
        "closed-form SW values",
        "1, -2, 0".into(),
        join(cases.iter().map(|(d, p)| {
            invariants::sw_closed_form(*d, *p).map_or_else(|e| e.to_string(), |x| x.to_string())
        })),
        "SW(c) = (-1)^d binom(p_g - 1, d)",
    ));
}

pub fn any_failed(reports: &[VerificationReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Fail)
}
