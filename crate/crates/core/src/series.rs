//! Dense univariate polynomials, truncated power series, and Hilbert series
//! `P(t) / (1 - t)^D`.
//!
//! Everything is generic over an exact coefficient ring ([`Coefficient`]),
//! instantiated with `BigInt` and [`Rational`](crate::exact::Rational).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, exact_div, is_nonnegative, to_integer, Rational};

/// Exact coefficient ring usable in [`Polynomial`] and [`TruncatedSeries`].
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + From<BigInt>
{
    fn from_usize(n: usize) -> Self {
        Self::from(BigInt::from(n))
    }
}

impl Coefficient for BigInt {}
impl Coefficient for Rational {}

/// `"[c0, c1, ...]"`, used in diagnostics and verification witnesses.
pub fn format_coeffs<T: fmt::Display>(coeffs: &[T]) -> String {
    let parts: Vec<String> = coeffs.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(", "))
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

/// Dense polynomial; `coeffs[i]` is the coefficient of `t^i`.
///
/// Canonical form has no trailing zero, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c t^deg`.
    pub fn monomial(c: T, deg: usize) -> Self {
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// `a + b t`.
    pub fn linear(a: T, b: T) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Polynomial<BigInt> {
    pub fn to_rational(&self) -> Polynomial<Rational> {
        Polynomial::new(
            self.coeffs
                .iter()
                .cloned()
                .map(Rational::from_integer)
                .collect(),
        )
    }
}

impl Polynomial<Rational> {
    /// Fails unless every coefficient is an integer.
    pub fn to_integer(&self, context: &str) -> Result<Polynomial<BigInt>> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| to_integer(c, &format!("{context}, coefficient {i}")))
            .collect::<Result<_>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl<T: Coefficient> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coefficient> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coefficient> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }
}

impl<T: Coefficient> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

// ---------------------------------------------------------------------------
// Truncated power series
// ---------------------------------------------------------------------------

/// `c_0 + c_1 t + ... + c_K t^K + O(t^{K+1})`.
///
/// Always holds exactly `K + 1` coefficients; nothing past `K` is ever read.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> TruncatedSeries<T> {
    /// Builds a series of order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::range(
                "order",
                "a series needs at least one coefficient",
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_polynomial(&Polynomial::one(), order)
    }

    /// Truncates (or zero-pads) a polynomial to order `order`.
    pub fn from_polynomial(p: &Polynomial<T>, order: usize) -> Self {
        Self {
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Option<&T> {
        self.coeffs.get(j)
    }

    /// Drops coefficients above `order`; cannot extend.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::range(
                "order",
                format!(
                    "cannot extend a series of order {} to {order}",
                    self.order()
                ),
            ));
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// `d/dt`; the result has order one less.
    pub fn derive(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::range(
                "order",
                "cannot differentiate a series of order 0",
            ));
        }
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.clone() * T::from_usize(j))
                .collect(),
        })
    }

    /// Multiplication by `t`; the result has order one more, known exactly.
    pub fn shift_t(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Cauchy product, truncated to the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|j| {
                (0..=j).fold(T::zero(), |acc, i| {
                    acc + self.coeffs[i].clone() * rhs.coeffs[j - i].clone()
                })
            })
            .collect();
        Self { coeffs }
    }

    /// Product with a polynomial, keeping this series' order.
    pub fn mul_poly(&self, p: &Polynomial<T>) -> Self {
        self.mul(&Self::from_polynomial(p, self.order()))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self {
            coeffs: (0..=order)
                .map(|j| self.coeffs[j].clone() + rhs.coeffs[j].clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }
}

impl TruncatedSeries<BigInt> {
    /// Divides every coefficient by `den`, failing on any remainder.
    pub fn exact_div(&self, den: &BigInt) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| exact_div(c, den, &format!("series coefficient {j}")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }
}

/// Expansion of `(1 - t)^{-m}` to order `order`: coefficients `binom(m-1+j, j)`.
pub fn geometric_pole(m: usize, order: usize) -> TruncatedSeries<BigInt> {
    TruncatedSeries {
        coeffs: (0..=order)
            .map(|j| binomial(m as i64 - 1 + j as i64, j as u64))
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// Hilbert series
// ---------------------------------------------------------------------------

/// `numerator(t) / (1 - t)^pole_order` with `deg numerator < pole_order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: Polynomial<BigInt>,
    pole_order: usize,
}

impl HilbertSeries {
    pub fn new(numerator: Polynomial<BigInt>, pole_order: usize) -> Result<Self> {
        if pole_order == 0 {
            return Err(Error::range("pole order", "must be >= 1"));
        }
        if numerator.degree().is_some_and(|deg| deg >= pole_order) {
            return Err(Error::range(
                "numerator degree",
                format!(
                    "degree {:?} must be below the pole order {pole_order}",
                    numerator.degree()
                ),
            ));
        }
        Ok(Self {
            numerator,
            pole_order,
        })
    }

    pub fn numerator(&self) -> &Polynomial<BigInt> {
        &self.numerator
    }

    pub fn pole_order(&self) -> usize {
        self.pole_order
    }

    /// `P(1)`, the degree of the projective variety.
    pub fn numerator_at_one(&self) -> BigInt {
        self.numerator.coeffs().iter().sum()
    }

    /// Constant term 1 and nonnegative h-vector, as for a graded coordinate ring.
    pub fn is_coordinate_ring_shaped(&self) -> bool {
        self.numerator.coeff(0).is_one() && self.numerator.coeffs().iter().all(is_nonnegative)
    }

    /// `P(t) * (1 - t)^{-D}` to order `order`.
    pub fn expand(&self, order: usize) -> TruncatedSeries<BigInt> {
        geometric_pole(self.pole_order, order).mul_poly(&self.numerator)
    }
}

/// Recovers `P(t)` from the coefficients `s(k)` of `P(t) / (1 - t)^D`.
///
/// `p_i = sum_{j=0}^{min(i, D)} (-1)^j binom(D, j) s(i - j)` for `i = 0..=D+1`.
/// When `s` is a polynomial in `k` of degree below `D`, `p_D` and `p_{D+1}`
/// vanish; anything else means `D` is wrong and is reported as
/// [`Error::PoleOrderMismatch`].
pub fn reconstruct_numerator<F>(mut stream: F, pole_order: usize) -> Result<HilbertSeries>
where
    F: FnMut(u64) -> Result<BigInt>,
{
    if pole_order == 0 {
        return Err(Error::range("pole order", "must be >= 1"));
    }
    let d = pole_order;
    let values = (0..=(d + 1) as u64)
        .map(&mut stream)
        .collect::<Result<Vec<_>>>()?;
    let weights: Vec<BigInt> = (0..=d)
        .map(|j| {
            let b = binomial(d as i64, j as u64);
            if j % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    let p: Vec<BigInt> = (0..=d + 1)
        .map(|i| (0..=i.min(d)).map(|j| &weights[j] * &values[i - j]).sum())
        .collect();
    if !p[d].is_zero() || !p[d + 1].is_zero() {
        return Err(Error::PoleOrderMismatch {
            pole_order: d,
            p_d: p[d].to_string(),
            p_d1: p[d + 1].to_string(),
        });
    }
    HilbertSeries::new(Polynomial::new(p[..d].to_vec()), d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn bigs(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().copied().map(big).collect()
    }

    fn series(xs: &[i64]) -> TruncatedSeries<BigInt> {
        TruncatedSeries::new(bigs(xs)).unwrap()
    }

    fn poly(xs: &[i64]) -> Polynomial<BigInt> {
        Polynomial::new(bigs(xs))
    }

    #[test]
    fn polynomial_canonical_form() {
        assert_eq!(poly(&[1, 2, 0, 0]).coeffs(), bigs(&[1, 2]).as_slice());
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[0]).degree(), None);
        assert_eq!(poly(&[3, 0, 1]).degree(), Some(2));
    }

    #[test]
    fn polynomial_arithmetic() {
        assert_eq!(&poly(&[1, 1]) * &poly(&[1, -1]), poly(&[1, 0, -1]));
        assert_eq!(&poly(&[1, 1]) * &Polynomial::one(), poly(&[1, 1]));
        assert_eq!(&poly(&[1, 1]) - &poly(&[1, 1]), Polynomial::zero());
        assert_eq!(poly(&[1, 1]).pow(3), poly(&[1, 3, 3, 1]));
        assert_eq!(poly(&[5, 3, 2]).derivative(), poly(&[3, 4]));
        assert_eq!(poly(&[1, 3, 1]).eval(&big(1)), big(5));
        assert_eq!(-&poly(&[1, -2]), poly(&[-1, 2]));
    }

    #[test]
    fn geometric_pole_examples() {
        assert!(geometric_pole(1, 10).coeffs().iter().all(|c| c == &big(1)));
        assert_eq!(geometric_pole(2, 4), series(&[1, 2, 3, 4, 5]));
        assert_eq!(geometric_pole(4, 5).coeff(2), Some(&big(10)));
        assert_eq!(geometric_pole(0, 3), series(&[1, 0, 0, 0]));
    }

    #[test]
    fn derive_examples() {
        let k = 12;
        assert_eq!(
            geometric_pole(2, k).derive().unwrap(),
            geometric_pole(3, k - 1).scale(&big(2))
        );
        assert_eq!(series(&[7, 0, 0]).derive().unwrap(), series(&[0, 0]));
        assert_eq!(series(&[1, 3, 6]).derive().unwrap(), series(&[3, 12]));
        assert!(matches!(series(&[1]).derive(), Err(Error::Range { .. })));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(series(&[1]).shift_t(), series(&[0, 1]));
        assert_eq!(series(&[0, 0]).shift_t(), series(&[0, 0, 0]));
    }

    #[test]
    fn mul_examples() {
        let a = TruncatedSeries::from_polynomial(&poly(&[1, 1]), 4);
        let b = TruncatedSeries::from_polynomial(&poly(&[1, -1]), 4);
        assert_eq!(a.mul(&b), series(&[1, 0, -1, 0, 0]));
        assert_eq!(a.mul(&TruncatedSeries::one(4)), a);
        assert_eq!(
            geometric_pole(2, 5).mul_poly(&poly(&[1, 1])),
            series(&[1, 3, 5, 7, 9, 11])
        );
        // truncates to the smaller order
        assert_eq!(geometric_pole(1, 3).mul(&geometric_pole(1, 6)).order(), 3);
    }

    #[test]
    fn truncate_never_extends() {
        let s = geometric_pole(3, 5);
        assert_eq!(s.truncate(2).unwrap(), series(&[1, 3, 6]));
        assert!(s.truncate(6).is_err());
        assert!(TruncatedSeries::<BigInt>::new(vec![]).is_err());
    }

    #[test]
    fn reconstruct_examples() {
        let h = reconstruct_numerator(|_| Ok(big(1)), 1).unwrap();
        assert_eq!(h.numerator(), &poly(&[1]));
        let h = reconstruct_numerator(|k| Ok(BigInt::from(2 * k + 1)), 2).unwrap();
        assert_eq!(h.numerator(), &poly(&[1, 1]));
        let h = reconstruct_numerator(|k| Ok(binomial(k as i64 + 2, 2)), 3).unwrap();
        assert_eq!(h.numerator(), &poly(&[1]));
        assert_eq!(h.pole_order(), 3);
    }

    #[test]
    fn reconstruct_detects_wrong_pole_order() {
        // k^2 has degree 2, so D = 2 is too small
        let err = reconstruct_numerator(|k| Ok(BigInt::from(k * k)), 2).unwrap_err();
        assert!(matches!(
            err,
            Error::PoleOrderMismatch { pole_order: 2, .. }
        ));
        // a non-polynomial stream fails for every D
        for d in 1..8 {
            assert!(reconstruct_numerator(|k| Ok(BigInt::from(1u64 << k)), d).is_err());
        }
    }

    #[test]
    fn hilbert_series_expand() {
        let h = HilbertSeries::new(poly(&[1, 1]), 2).unwrap();
        assert_eq!(h.expand(3), series(&[1, 3, 5, 7]));
        for m in 1..6 {
            let h = HilbertSeries::new(poly(&[1]), m).unwrap();
            assert_eq!(h.expand(9), geometric_pole(m, 9));
        }
        assert!(HilbertSeries::new(poly(&[1, 1]), 1).is_err());
        assert!(HilbertSeries::new(poly(&[1]), 0).is_err());
    }

    fn coeffs_strategy(len: std::ops::Range<usize>) -> impl Strategy<Value = Vec<BigInt>> {
        prop::collection::vec((-1000i64..1000).prop_map(BigInt::from), len)
    }

    proptest! {
        #[test]
        fn derive_shift_commutator_is_identity(c in coeffs_strategy(51..52)) {
            let s = TruncatedSeries::new(c).unwrap();
            let lhs = s.shift_t().derive().unwrap().sub(&s.derive().unwrap().shift_t());
            prop_assert_eq!(lhs.order(), 50);
            prop_assert_eq!(lhs, s);
        }

        #[test]
        fn mul_is_commutative_and_associative(
            a in coeffs_strategy(1..20),
            b in coeffs_strategy(1..20),
            c in coeffs_strategy(1..20),
        ) {
            let (a, b, c) = (
                TruncatedSeries::new(a).unwrap(),
                TruncatedSeries::new(b).unwrap(),
                TruncatedSeries::new(c).unwrap(),
            );
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn expand_inverts_reconstruct(
            roots in prop::collection::vec(0i64..6, 0..6),
            extra in 1usize..3,
        ) {
            // s(k) = prod (k + r): a polynomial of degree roots.len()
            let stream = |k: u64| -> Result<BigInt> {
                Ok(roots.iter().map(|r| BigInt::from(k as i64 + r)).product())
            };
            let d = roots.len() + extra;
            let h = reconstruct_numerator(stream, d).unwrap();
            let expanded = h.expand(40);
            for (k, c) in expanded.coeffs().iter().enumerate() {
                prop_assert_eq!(c, &stream(k as u64).unwrap());
            }
        }
    }
}
