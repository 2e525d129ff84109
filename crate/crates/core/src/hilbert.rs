//! Hilbert series of highest weight varieties `X_w` in type A.
//!
//! The degree-`k` piece of the coordinate ring of `X_w` is the irreducible
//! module of highest weight `k * dual(w)`, so the Hilbert series is
//! `sum_k dim V_{k dual(w)} t^k`; the numerator is recovered from that stream
//! by finite differences against the root-support pole order.

use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::{Family, NarayanaRow};
use crate::error::{Error, Result};
use crate::exact::binomial;
use crate::series::{
    format_coeffs, geometric_pole, reconstruct_numerator, HilbertSeries, TruncatedSeries,
};
use crate::weights::{dual_weight, pole_order, DominantWeight};
use crate::weyl::weyl_dim;

/// Whether the Grassmannian / minimal-orbit wrappers check their result
/// against the Narayana closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Verify,
    /// Skip the closed-form post-checks (benchmarks).
    Fast,
}

/// Hilbert series of the coordinate ring of `X_w` for a nonzero dominant `w`.
pub fn hilbert_highest_weight(w: &DominantWeight) -> Result<HilbertSeries> {
    let pole = pole_order(w)?;
    let dual = dual_weight(w);
    reconstruct_numerator(|k| weyl_dim(&dual.scaled(k)), pole)
}

/// Affine cone over `Gr(d, n+d+1)`, i.e. `X_{omega_d}` for `sl_{n+d+1}`.
pub fn hilbert_grassmannian(d: usize, n: usize) -> Result<HilbertSeries> {
    hilbert_grassmannian_with(d, n, Mode::Verify)
}

pub fn hilbert_grassmannian_with(d: usize, n: usize, mode: Mode) -> Result<HilbertSeries> {
    if d == 0 {
        return Err(Error::range("d", "Grassmannians need d >= 1"));
    }
    let omega = DominantWeight::fundamental(n + d, d)?;
    let h = hilbert_highest_weight(&omega)?;
    if mode == Mode::Verify {
        let row = NarayanaRow::new(Family::DimensionalA { d }, n)?;
        check_against(&h, &row.coefficients, d * (n + 1) + 1, || {
            format!("Gr({d},{}) numerator = N_A({d},{n},.)", n + d + 1)
        })?;
    }
    Ok(h)
}

/// Closure of the minimal nilpotent orbit of `sl_{n+1}`, i.e. `X_theta`.
pub fn hilbert_min_orbit(n: usize) -> Result<HilbertSeries> {
    hilbert_min_orbit_with(n, Mode::Verify)
}

pub fn hilbert_min_orbit_with(n: usize, mode: Mode) -> Result<HilbertSeries> {
    if n == 0 {
        return Err(Error::range("n", "the minimal orbit needs n >= 1"));
    }
    let theta = DominantWeight::highest_root(n)?;
    let h = hilbert_highest_weight(&theta)?;
    if mode == Mode::Verify {
        let row = NarayanaRow::new(Family::TypeB, n)?;
        check_against(&h, &row.coefficients, 2 * n, || {
            format!("O_min(sl_{}) numerator = N_B({n},.)", n + 1)
        })?;
    }
    Ok(h)
}

fn check_against(
    h: &HilbertSeries,
    expected: &[BigInt],
    expected_pole: usize,
    name: impl Fn() -> String,
) -> Result<()> {
    if h.numerator().coeffs() != expected || h.pole_order() != expected_pole {
        return Err(Error::IdentityViolation {
            name: name(),
            left: format!(
                "{} / (1-t)^{}",
                format_coeffs(h.numerator().coeffs()),
                h.pole_order()
            ),
            right: format!("{} / (1-t)^{expected_pole}", format_coeffs(expected)),
        });
    }
    Ok(())
}

/// `(d/dt^d o t^{d-1})^n [(1-t)^{-(d+1)}] / prod_{i<=d, j<=n} (i+j)` to order `order`.
///
/// Each round multiplies by `t` exactly (`d-1` times) and differentiates
/// (`d` times); the start order is padded by `n * d` so the result is exact
/// through `t^order`.
pub fn operator_series(d: usize, n: usize, order: usize) -> Result<TruncatedSeries<BigInt>> {
    if d == 0 {
        return Err(Error::range("d", "the operator formula needs d >= 1"));
    }
    let mut s = geometric_pole(d + 1, order + n * d);
    for _ in 0..n {
        for _ in 0..d - 1 {
            s = s.shift_t();
        }
        for _ in 0..d {
            s = s.derive()?;
        }
    }
    if s.order() < order {
        return Err(Error::range(
            "order",
            format!(
                "working order {} fell below the requested {order}",
                s.order()
            ),
        ));
    }
    let den = (1..=d)
        .flat_map(|i| (1..=n).map(move |j| BigInt::from(i + j)))
        .fold(BigInt::one(), |acc, x| acc * x);
    s.truncate(order)?.exact_div(&den)
}

/// `sum_i binom(n,i)^2 binom(k-i+2n-1, 2n-1)`: the minimal-orbit dimension
/// written against the type-B Narayana numbers.
pub fn dim_adjoint_via_narayana(n: usize, k: u64) -> BigInt {
    let (n_i, k_i) = (n as i64, k as i64);
    (0..=n_i)
        .map(|i| {
            let b = binomial(n_i, i as u64);
            &b * &b * binomial(k_i - i + 2 * n_i - 1, (2 * n - 1) as u64)
        })
        .sum()
}
