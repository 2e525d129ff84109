//! Executable checks of the binomial identity chain behind the minimal-orbit
//! numerator: Li Shan-lan's identity, the generating function
//!
//! `V_n(x) = -(1/n!) d^n/dz^n [ z^n / (z + x)^{n+1} ] at z = -1`
//!
//! in four independent representations, Legendre polynomials and their ODE,
//! and the Hurwitz formula. Suites sweep these (and the Hilbert-series
//! theorems) over parameter grids and report every point.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{narayana_ddim_a, Family, NarayanaRow};
use crate::error::{Error, Result};
use crate::exact::{
    binomial, exact_div, factorial, falling_factorial, int_rational, rational, sign_pow, Rational,
};
use crate::hilbert::{
    dim_adjoint_via_narayana, hilbert_grassmannian, hilbert_grassmannian_with,
    hilbert_min_orbit_with, operator_series, Mode,
};
use crate::series::{format_coeffs, geometric_pole, Polynomial, TruncatedSeries};
use crate::weights::DominantWeight;
use crate::weyl::{dim_grassmannian, weyl_dim};

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Both sides of a failed check, as exact decimal renderings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub left: String,
    pub right: String,
}

/// Outcome of one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, u64>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl VerificationReport {
    /// Compares two renderings; a mismatch keeps both as the witness.
    pub fn compare(identity: &str, params: &[(&str, u64)], left: String, right: String) -> Self {
        let passed = left == right;
        Self {
            identity: identity.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            status: if passed { Status::Pass } else { Status::Fail },
            witness: (!passed).then_some(Witness { left, right }),
        }
    }

    /// Compares two exact values of any displayable type.
    pub fn check<T: PartialEq + fmt::Display>(
        identity: &str,
        params: &[(&str, u64)],
        left: &T,
        right: &T,
    ) -> Self {
        let mut report = Self::compare(identity, params, String::new(), String::new());
        if left != right {
            report.status = Status::Fail;
            report.witness = Some(Witness {
                left: left.to_string(),
                right: right.to_string(),
            });
        }
        report
    }

    /// Turns an evaluation error into a failed report.
    fn from_result(identity: &str, params: &[(&str, u64)], r: Result<Self>) -> Self {
        r.unwrap_or_else(|e| {
            Self::compare(identity, params, format!("error: {e}"), "no error".into())
        })
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} {}", self.identity, params.join(" "))?;
        if let Some(w) = &self.witness {
            write!(f, ": {} != {}", w.left, w.right)?;
        }
        Ok(())
    }
}

fn series_repr(s: &TruncatedSeries<BigInt>) -> String {
    format_coeffs(s.coeffs())
}

// ---------------------------------------------------------------------------
// Li Shan-lan
// ---------------------------------------------------------------------------

/// `binom(m+n, n)^2 = sum_{i=0}^{n} binom(n,i)^2 binom(2n+m-i, 2n)`.
pub fn li_shanlan_check(n: u64, m: u64) -> VerificationReport {
    let (n_i, m_i) = (n as i64, m as i64);
    let lhs = binomial(m_i + n_i, n).pow(2);
    let rhs: BigInt = (0..=n)
        .map(|i| binomial(n_i, i).pow(2) * binomial(2 * n_i + m_i - i as i64, 2 * n))
        .sum();
    VerificationReport::check("li-shanlan", &[("n", n), ("m", m)], &lhs, &rhs)
}

// ---------------------------------------------------------------------------
// Legendre and Hurwitz
// ---------------------------------------------------------------------------

/// `P_n(t) = sum_k binom(n,k) binom(n+k,n) (-1)^{n-k} ((t+1)/2)^k`, monomial basis.
pub fn legendre_poly(n: usize) -> Polynomial<Rational> {
    let half_shift = Polynomial::linear(rational(1, 2), rational(1, 2));
    let n_i = n as i64;
    let mut power = Polynomial::one();
    let mut acc = Polynomial::zero();
    for k in 0..=n {
        let c =
            binomial(n_i, k as u64) * binomial(n_i + k as i64, n as u64) * sign_pow(n_i - k as i64);
        acc = &acc + &power.scale(&int_rational(c));
        power = &power * &half_shift;
    }
    acc
}

/// Checks `(1-t^2) P'' - 2t P' + n(n+1) P = 0` as a polynomial identity,
/// together with `P(-1) = (-1)^n` and `P'(-1) = (-1)^{n+1} n(n+1)/2`.
pub fn legendre_ode_check(n: usize) -> VerificationReport {
    let p = legendre_poly(n);
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let nn1 = int_rational(n * (n + 1));
    let one_minus_t2 = Polynomial::new(vec![Rational::one(), Rational::zero(), -Rational::one()]);
    let two_t = Polynomial::monomial(int_rational(2), 1);
    let residual = &(&(&one_minus_t2 * &d2) - &(&two_t * &d1)) + &p.scale(&nn1);
    let minus_one = -Rational::one();
    let left = format!(
        "residual={} P(-1)={} P'(-1)={}",
        format_coeffs(residual.coeffs()),
        p.eval(&minus_one),
        d1.eval(&minus_one)
    );
    let right = format!(
        "residual=[] P(-1)={} P'(-1)={}",
        int_rational(sign_pow(n as i64)),
        rational(sign_pow(n as i64 + 1) * (n * (n + 1)) as i64, 2)
    );
    VerificationReport::compare("legendre-ode", &[("n", n as u64)], left, right)
}

/// `(1-x)^n P_n((1+x)/(1-x))`, expanded as `sum_k c_k (1+x)^k (1-x)^{n-k}`
/// from the monomial coefficients `c_k` of `P_n`. No closed form is assumed.
pub fn hurwitz_lhs(n: usize) -> Result<Polynomial<BigInt>> {
    let p = legendre_poly(n);
    let one_plus = Polynomial::linear(Rational::one(), Rational::one());
    let one_minus = Polynomial::linear(Rational::one(), -Rational::one());
    let mut acc = Polynomial::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        let term = &one_plus.pow(k) * &one_minus.pow(n - k);
        acc = &acc + &term.scale(c);
    }
    acc.to_integer(&format!("(1-x)^{n} P_{n}((1+x)/(1-x))"))
}

/// Hurwitz's formula: the left side equals `sum_i binom(n,i)^2 x^i`.
pub fn hurwitz_poly(n: usize) -> Result<Polynomial<BigInt>> {
    let lhs = hurwitz_lhs(n)?;
    let row = NarayanaRow::new(Family::TypeB, n)?;
    if lhs.coeffs() != row.coefficients.as_slice() {
        return Err(Error::IdentityViolation {
            name: format!("hurwitz n={n}"),
            left: format_coeffs(lhs.coeffs()),
            right: format_coeffs(&row.coefficients),
        });
    }
    Ok(lhs)
}

pub fn hurwitz_check(n: usize) -> VerificationReport {
    let params = [("n", n as u64)];
    let report = hurwitz_lhs(n).and_then(|lhs| {
        let row = NarayanaRow::new(Family::TypeB, n)?;
        Ok(VerificationReport::compare(
            "hurwitz",
            &params,
            format_coeffs(lhs.coeffs()),
            format_coeffs(&row.coefficients),
        ))
    });
    VerificationReport::from_result("hurwitz", &params, report)
}

// ---------------------------------------------------------------------------
// V_n(x)
// ---------------------------------------------------------------------------

/// Which representation of `V_n(x)` to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VnMode {
    /// `sum_k binom(n+k, k)^2 x^k`.
    BinomSq,
    /// Expand `z^{-1} (1 + x/z)^{-n-1}` in `x`, differentiate each `z^{-k-1}` n times.
    Closed,
    /// Leibniz rule on `z^n * (z+x)^{-n-1}`, giving a sum of poles at `x = 1`.
    Leibniz,
    /// `(1-x)^n P_n((1+x)/(1-x)) * (1-x)^{-2n-1}`.
    Legendre,
}

impl VnMode {
    pub const ALL: [VnMode; 4] = [
        VnMode::BinomSq,
        VnMode::Closed,
        VnMode::Leibniz,
        VnMode::Legendre,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            VnMode::BinomSq => "binomsq",
            VnMode::Closed => "closed",
            VnMode::Leibniz => "leibniz",
            VnMode::Legendre => "legendre",
        }
    }
}

impl FromStr for VnMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VnMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown V_n mode `{s}`")))
    }
}

/// `(x - 1)^e` for `e < 0`, as `(-1)^e (1 - x)^e`. The only place the sign flip happens.
fn pole_at_one(e: i64, order: usize) -> TruncatedSeries<BigInt> {
    debug_assert!(e < 0);
    geometric_pole((-e) as usize, order).scale(&BigInt::from(sign_pow(e)))
}

/// `V_n(x)` to order `order` in the requested representation.
pub fn vn_series(n: usize, order: usize, mode: VnMode) -> Result<TruncatedSeries<BigInt>> {
    let n_i = n as i64;
    let n_fact = factorial(n as u64);
    match mode {
        VnMode::BinomSq => TruncatedSeries::new(
            (0..=order)
                .map(|k| binomial(n_i + k as i64, k as u64).pow(2))
                .collect(),
        ),
        VnMode::Closed => {
            // x^k coefficient: -(1/n!) binom(-n-1, k) * [d^n z^{-k-1}]_{z=-1}
            let coeffs = (0..=order as i64)
                .map(|k| {
                    let deriv = falling_factorial(-k - 1, n as u64) * sign_pow(-k - 1 - n_i);
                    let num = -(binomial(-n_i - 1, k as u64) * deriv);
                    exact_div(&num, &n_fact, &format!("V_{n} closed coefficient {k}"))
                })
                .collect::<Result<Vec<_>>>()?;
            TruncatedSeries::new(coeffs)
        }
        VnMode::Leibniz => {
            // d^n [z^n (z+x)^{-n-1}] = sum_k binom(n,k) (d^k z^n) (d^{n-k} (z+x)^{-n-1})
            let mut acc = TruncatedSeries::zero(order);
            for k in 0..=n_i {
                let z_part = falling_factorial(n_i, k as u64) * sign_pow(n_i - k);
                let pole_part = falling_factorial(-n_i - 1, (n_i - k) as u64);
                let num = -(binomial(n_i, k as u64) * z_part * pole_part);
                let c = exact_div(&num, &n_fact, &format!("V_{n} Leibniz term {k}"))?;
                acc = acc.add(&pole_at_one(k - 2 * n_i - 1, order).scale(&c));
            }
            Ok(acc)
        }
        VnMode::Legendre => Ok(geometric_pole(2 * n + 1, order).mul_poly(&hurwitz_lhs(n)?)),
    }
}

/// All four representations of `V_n` agree through `x^order`.
pub fn vn_check(n: usize, order: usize) -> VerificationReport {
    let params = [("n", n as u64), ("order", order as u64)];
    let report = (|| {
        let reference = vn_series(n, order, VnMode::BinomSq)?;
        for mode in &VnMode::ALL[1..] {
            let other = vn_series(n, order, *mode)?;
            if other != reference {
                return Ok(VerificationReport::compare(
                    &format!("vn-{}", mode.name()),
                    &params,
                    series_repr(&other),
                    series_repr(&reference),
                ));
            }
        }
        Ok(VerificationReport::compare(
            "vn",
            &params,
            String::new(),
            String::new(),
        ))
    })();
    VerificationReport::from_result("vn", &params, report)
}

// ---------------------------------------------------------------------------
// Hilbert-series checks
// ---------------------------------------------------------------------------

/// `dim V_{k omega_{n+1}} = sum_i N_A(d,n,i) binom(d(n+1)+k-i, d(n+1))`, both sides independent.
pub fn sulanke_check(d: usize, n: usize, k: u64) -> VerificationReport {
    let params = [("d", d as u64), ("n", n as u64), ("k", k)];
    let report = (|| {
        let lhs = dim_grassmannian(d, n, k)?;
        let dn1 = (d * (n + 1)) as i64;
        let top = ((d - 1) * n) as u64;
        let mut rhs = BigInt::zero();
        for i in 0..=k.min(top) {
            rhs += narayana_ddim_a(d, n, i as i64)? * binomial(dn1 + (k - i) as i64, dn1 as u64);
        }
        Ok(VerificationReport::check("sulanke", &params, &lhs, &rhs))
    })();
    VerificationReport::from_result("sulanke", &params, report)
}

/// `dim V_{k theta}` from the Weyl formula against `sum_i binom(n,i)^2 binom(k-i+2n-1, 2n-1)`.
pub fn dimrep2_check(n: usize, k: u64) -> VerificationReport {
    let params = [("n", n as u64), ("k", k)];
    let report = (|| {
        let theta = DominantWeight::highest_root(n)?;
        let lhs = weyl_dim(&theta.scaled(k))?;
        Ok(VerificationReport::check(
            "dimrep2",
            &params,
            &lhs,
            &dim_adjoint_via_narayana(n, k),
        ))
    })();
    VerificationReport::from_result("dimrep2", &params, report)
}

/// Operator formula against the expanded Grassmannian Hilbert series.
pub fn operator_check(d: usize, n: usize, order: usize) -> VerificationReport {
    let params = [("d", d as u64), ("n", n as u64), ("order", order as u64)];
    let report = (|| {
        let lhs = operator_series(d, n, order)?;
        let rhs = hilbert_grassmannian(d, n)?.expand(order);
        Ok(VerificationReport::compare(
            "operator",
            &params,
            series_repr(&lhs),
            series_repr(&rhs),
        ))
    })();
    VerificationReport::from_result("operator", &params, report)
}

/// Grassmannian numerator (Weyl dimensions + finite differences) against the
/// alternating-sum row `N_A(d,n,.)`, with pole order `d(n+1)+1`.
pub fn grassmannian_numerator_check(d: usize, n: usize) -> VerificationReport {
    let params = [("d", d as u64), ("n", n as u64)];
    let report = (|| {
        let h = hilbert_grassmannian_with(d, n, Mode::Fast)?;
        let row = NarayanaRow::new(Family::DimensionalA { d }, n)?;
        Ok(VerificationReport::compare(
            "grassmannian-numerator",
            &params,
            format!(
                "{} / (1-t)^{}",
                format_coeffs(h.numerator().coeffs()),
                h.pole_order()
            ),
            format!(
                "{} / (1-t)^{}",
                format_coeffs(&row.coefficients),
                d * (n + 1) + 1
            ),
        ))
    })();
    VerificationReport::from_result("grassmannian-numerator", &params, report)
}

/// Minimal-orbit numerator against `[binom(n,i)^2]`, pole order `2n`, and `P(1) = binom(2n,n)`.
pub fn min_orbit_numerator_check(n: usize) -> VerificationReport {
    let params = [("n", n as u64)];
    let report = (|| {
        let h = hilbert_min_orbit_with(n, Mode::Fast)?;
        let row: Vec<BigInt> = (0..=n as u64)
            .map(|i| binomial(n as i64, i).pow(2))
            .collect();
        Ok(VerificationReport::compare(
            "min-orbit-numerator",
            &params,
            format!(
                "{} / (1-t)^{} at1={}",
                format_coeffs(h.numerator().coeffs()),
                h.pole_order(),
                h.numerator_at_one()
            ),
            format!(
                "{} / (1-t)^{} at1={}",
                format_coeffs(&row),
                2 * n,
                binomial(2 * n as i64, n as u64)
            ),
        ))
    })();
    VerificationReport::from_result("min-orbit-numerator", &params, report)
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    LiShanlan,
    Sulanke,
    Dimrep2,
    Operator,
    Legendre,
    Hurwitz,
    Vn,
    NarayanaNumerators,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 8] = [
        Suite::LiShanlan,
        Suite::Sulanke,
        Suite::Dimrep2,
        Suite::Operator,
        Suite::Legendre,
        Suite::Hurwitz,
        Suite::Vn,
        Suite::NarayanaNumerators,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::LiShanlan => "li-shanlan",
            Suite::Sulanke => "sulanke",
            Suite::Dimrep2 => "dimrep2",
            Suite::Operator => "operator",
            Suite::Legendre => "legendre",
            Suite::Hurwitz => "hurwitz",
            Suite::Vn => "vn",
            Suite::NarayanaNumerators => "narayana-numerators",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Upper bounds of a verification grid; `None` means the suite's default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Grid {
    pub n_max: Option<usize>,
    pub m_max: Option<usize>,
    pub d_max: Option<usize>,
    pub k_max: Option<usize>,
    pub order: Option<usize>,
    /// Applied to every bound, explicit or default.
    pub cap: Option<usize>,
}

impl Grid {
    fn resolve(&self, suite: Suite) -> ResolvedGrid {
        // (n, m, d, k, order)
        let defaults = match suite {
            Suite::LiShanlan => (40, 40, 0, 0, 0),
            Suite::Sulanke => (6, 0, 4, 25, 0),
            Suite::Dimrep2 => (8, 0, 0, 25, 0),
            Suite::Operator => (4, 0, 3, 0, 60),
            Suite::Legendre | Suite::Hurwitz => (25, 0, 0, 0, 0),
            Suite::Vn => (10, 0, 0, 0, 40),
            Suite::NarayanaNumerators => (10, 0, 4, 0, 0),
            Suite::All => (0, 0, 0, 0, 0),
        };
        let cap = |v: usize| self.cap.map_or(v, |c| v.min(c));
        ResolvedGrid {
            n_max: cap(self.n_max.unwrap_or(defaults.0)),
            m_max: cap(self.m_max.unwrap_or(defaults.1)),
            d_max: cap(self.d_max.unwrap_or(defaults.2)),
            k_max: cap(self.k_max.unwrap_or(defaults.3)),
            order: cap(self.order.unwrap_or(defaults.4)),
        }
    }
}

struct ResolvedGrid {
    n_max: usize,
    m_max: usize,
    d_max: usize,
    k_max: usize,
    order: usize,
}

enum Point {
    LiShanlan(u64, u64),
    Sulanke(usize, usize, u64),
    Dimrep2(usize, u64),
    Operator(usize, usize, usize),
    Legendre(usize),
    Hurwitz(usize),
    Vn(usize, usize),
    Grassmannian(usize, usize),
    MinOrbit(usize),
}

impl Point {
    fn run(&self) -> VerificationReport {
        match *self {
            Point::LiShanlan(n, m) => li_shanlan_check(n, m),
            Point::Sulanke(d, n, k) => sulanke_check(d, n, k),
            Point::Dimrep2(n, k) => dimrep2_check(n, k),
            Point::Operator(d, n, order) => operator_check(d, n, order),
            Point::Legendre(n) => legendre_ode_check(n),
            Point::Hurwitz(n) => hurwitz_check(n),
            Point::Vn(n, order) => vn_check(n, order),
            Point::Grassmannian(d, n) => grassmannian_numerator_check(d, n),
            Point::MinOrbit(n) => min_orbit_numerator_check(n),
        }
    }
}

fn points(suite: Suite, grid: &Grid) -> Vec<Point> {
    let g = grid.resolve(suite);
    let mut pts = Vec::new();
    match suite {
        Suite::LiShanlan => {
            for n in 0..=g.n_max as u64 {
                for m in 0..=g.m_max as u64 {
                    pts.push(Point::LiShanlan(n, m));
                }
            }
        }
        Suite::Sulanke => {
            for d in 1..=g.d_max {
                for n in 0..=g.n_max {
                    for k in 0..=g.k_max as u64 {
                        pts.push(Point::Sulanke(d, n, k));
                    }
                }
            }
        }
        Suite::Dimrep2 => {
            for n in 1..=g.n_max {
                for k in 0..=g.k_max as u64 {
                    pts.push(Point::Dimrep2(n, k));
                }
            }
        }
        Suite::Operator => {
            for d in 1..=g.d_max {
                for n in 0..=g.n_max {
                    pts.push(Point::Operator(d, n, g.order));
                }
            }
        }
        Suite::Legendre => pts.extend((0..=g.n_max).map(Point::Legendre)),
        Suite::Hurwitz => pts.extend((0..=g.n_max).map(Point::Hurwitz)),
        Suite::Vn => pts.extend((0..=g.n_max).map(|n| Point::Vn(n, g.order))),
        Suite::NarayanaNumerators => {
            for d in 1..=g.d_max {
                for n in 0..=g.n_max {
                    pts.push(Point::Grassmannian(d, n));
                }
            }
            pts.extend((1..=g.n_max).map(Point::MinOrbit));
        }
        Suite::All => {
            for s in Suite::INDIVIDUAL {
                pts.extend(points(s, grid));
            }
        }
    }
    pts
}

/// Runs every grid point of `suite` (in parallel) and returns the reports in
/// grid order. Failures never stop the sweep.
pub fn run_suite(suite: Suite, grid: &Grid) -> Vec<VerificationReport> {
    points(suite, grid).par_iter().map(Point::run).collect()
}

/// [`run_suite`] by suite name.
pub fn run_suite_named(name: &str, grid: &Grid) -> Result<Vec<VerificationReport>> {
    Ok(run_suite(name.parse()?, grid))
}
