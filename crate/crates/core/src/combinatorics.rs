//! Catalan and Narayana families: classic, root-system (type A/B and general
//! Weyl type via exponents), and the d-dimensional generalizations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, exact_div, factorial, int_rational, rational, to_integer, Rational};

// ---------------------------------------------------------------------------
// Catalan numbers
// ---------------------------------------------------------------------------

/// `Cat_n = binom(2n, n) / (n + 1)`.
pub fn catalan_classic(n: usize) -> BigInt {
    let central = binomial(2 * n as i64, n as u64);
    // n + 1 always divides binom(2n, n)
    central / BigInt::from(n + 1)
}

/// d-dimensional Catalan number `(dn)! * prod_{i<d} i! / (n+i)!`.
pub fn catalan_ddim(d: usize, n: usize) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::range(
            "d",
            "d-dimensional Catalan numbers need d >= 1",
        ));
    }
    let mut num = factorial((d * n) as u64);
    let mut den = BigInt::one();
    for i in 0..d {
        num *= factorial(i as u64);
        den *= factorial((n + i) as u64);
    }
    exact_div(&num, &den, &format!("C_{{{d},{n}}}"))
}

/// Letter of an irreducible root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Letter::A),
            "B" => Ok(Letter::B),
            "C" => Ok(Letter::C),
            "D" => Ok(Letter::D),
            "E" => Ok(Letter::E),
            "F" => Ok(Letter::F),
            "G" => Ok(Letter::G),
            other => Err(Error::Domain(format!(
                "unknown root system letter `{other}`"
            ))),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An irreducible root system `X_r`.
///
/// Low-rank coincidences are accepted under every name they go by
/// (`B_1 = C_1 = A_1`, `C_2 = B_2`, `D_3 = A_3`); reducible or empty
/// diagrams (`D_1`, `D_2`, rank 0) and exceptional letters at the wrong rank
/// are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystemType {
    letter: Letter,
    rank: usize,
}

impl RootSystemType {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let ok = match letter {
            Letter::A | Letter::B | Letter::C => rank >= 1,
            Letter::D => rank >= 3,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        };
        if ok {
            Ok(Self { letter, rank })
        } else {
            Err(Error::InvalidType {
                letter: letter.to_string().chars().next().unwrap_or('?'),
                rank,
            })
        }
    }

    pub fn letter(&self) -> Letter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn exponents(&self) -> Vec<u64> {
        let r = self.rank as u64;
        match self.letter {
            Letter::A => (1..=r).collect(),
            Letter::B | Letter::C => (1..=r).map(|i| 2 * i - 1).collect(),
            Letter::D => {
                let mut e: Vec<u64> = (1..r).map(|i| 2 * i - 1).collect();
                e.push(r - 1);
                e.sort_unstable();
                e
            }
            Letter::E => match r {
                6 => vec![1, 4, 5, 7, 8, 11],
                7 => vec![1, 5, 7, 9, 11, 13, 17],
                _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
            },
            Letter::F => vec![1, 5, 7, 11],
            Letter::G => vec![1, 5],
        }
    }

    pub fn coxeter_number(&self) -> u64 {
        let r = self.rank as u64;
        match self.letter {
            Letter::A => r + 1,
            Letter::B | Letter::C => 2 * r,
            Letter::D => 2 * r - 2,
            Letter::E => match r {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Letter::F => 12,
            Letter::G => 6,
        }
    }

    /// Order of the Weyl group, from the classification (not from the exponents).
    pub fn weyl_group_order(&self) -> BigInt {
        let r = self.rank as u64;
        match self.letter {
            Letter::A => factorial(r + 1),
            Letter::B | Letter::C => (BigInt::one() << r) * factorial(r),
            Letter::D => (BigInt::one() << (r - 1)) * factorial(r),
            Letter::E => match r {
                6 => BigInt::from(51_840u64),
                7 => BigInt::from(2_903_040u64),
                _ => BigInt::from(696_729_600u64),
            },
            Letter::F => BigInt::from(1_152u64),
            Letter::G => BigInt::from(12u64),
        }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// `prod_i (e_i + h + 1) / (e_i + 1)` over the exponents of `ty`.
pub fn catalan_weyl(ty: RootSystemType) -> Result<BigInt> {
    let h = ty.coxeter_number();
    let product = ty
        .exponents()
        .into_iter()
        .fold(Rational::one(), |acc, e| acc * rational(e + h + 1, e + 1));
    to_integer(&product, &format!("Cat_{ty}"))
}

// ---------------------------------------------------------------------------
// Narayana numbers
// ---------------------------------------------------------------------------

/// `N_{n,k} = binom(n,k) binom(n,k+1) / n` for `n >= 1`, `0 <= k <= n`.
///
/// `k = n` is accepted and yields 0, so sums over `0..=n` are well defined.
pub fn narayana_classic(n: usize, k: i64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::range("n", "classic Narayana numbers need n >= 1"));
    }
    if k < 0 || k > n as i64 {
        return Err(Error::range("k", format!("k = {k} not in 0..={n}")));
    }
    let n_i = n as i64;
    let k = k as u64;
    let prod = binomial(n_i, k) * binomial(n_i, k + 1);
    exact_div(&prod, &BigInt::from(n), &format!("N_{{{n},{k}}}"))
}

/// Root-system flavour of the Narayana numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypedFamily {
    A,
    B,
}

/// `N_A(n,k) = N_{n+1,k}` and `N_B(n,k) = binom(n,k)^2`, for `0 <= k <= n`.
pub fn narayana_typed(family: TypedFamily, n: usize, k: i64) -> Result<BigInt> {
    if k < 0 || k > n as i64 {
        return Err(Error::range("k", format!("k = {k} not in 0..={n}")));
    }
    match family {
        TypedFamily::A => narayana_classic(n + 1, k),
        TypedFamily::B => {
            let b = binomial(n as i64, k as u64);
            Ok(&b * &b)
        }
    }
}

/// Largest admissible `k` for `N_{d,n,k}`.
fn ddim_top(d: usize, n: usize) -> usize {
    (d - 1) * (n - 1)
}

/// d-dimensional Narayana number via the alternating sum
///
/// `N_{d,n,k} = sum_{j=0}^{k} (-1)^{k-j} binom(dn+1, k-j) prod_{i<d} binom(n+i+j, n) / binom(n+i, n)`.
///
/// Evaluated in exact rationals; the result must come out a nonnegative integer.
/// `d = 1` is accepted (the only entry is `N_{1,n,0} = 1`).
pub fn narayana_ddim(d: usize, n: usize, k: i64) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::range(
            "d",
            "d-dimensional Narayana numbers need d >= 1",
        ));
    }
    if n == 0 {
        return Err(Error::range(
            "n",
            "d-dimensional Narayana numbers need n >= 1",
        ));
    }
    let top = ddim_top(d, n);
    if k < 0 || k > top as i64 {
        return Err(Error::range("k", format!("k = {k} not in 0..={top}")));
    }
    let (n_i, k_u) = (n as i64, k as u64);
    let mut sum = Rational::zero();
    for j in 0..=k_u {
        let sign = if (k_u - j) % 2 == 0 { 1 } else { -1 };
        let mut term = int_rational(binomial((d * n + 1) as i64, k_u - j) * sign);
        for i in 0..d as i64 {
            term *= Rational::new(
                binomial(n_i + i + j as i64, n as u64),
                binomial(n_i + i, n as u64),
            );
        }
        sum += term;
    }
    let value = to_integer(&sum, &format!("N_{{{d},{n},{k}}}"))?;
    if value.is_negative() {
        return Err(Error::IdentityViolation {
            name: format!("N_{{{d},{n},{k}}} >= 0"),
            left: value.to_string(),
            right: "0".into(),
        });
    }
    Ok(value)
}

/// A-normalized d-dimensional Narayana number `N_A(d,n,k) = N_{d,n+1,k}`, `0 <= k <= (d-1)n`.
pub fn narayana_ddim_a(d: usize, n: usize, k: i64) -> Result<BigInt> {
    narayana_ddim(d, n + 1, k)
}

/// Which Narayana triangle a row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `N_{n,k}`, `n >= 1`, `0 <= k <= n-1`.
    Classic,
    /// `N_A(n,k)`, `0 <= k <= n`.
    TypeA,
    /// `N_B(n,k)`, `0 <= k <= n`.
    TypeB,
    /// `N_{d,n,k}`, `n >= 1`, `0 <= k <= (d-1)(n-1)`.
    Dimensional { d: usize },
    /// `N_A(d,n,k)`, `0 <= k <= (d-1)n`.
    DimensionalA { d: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Classic => write!(f, "classic"),
            Family::TypeA => write!(f, "A"),
            Family::TypeB => write!(f, "B"),
            Family::Dimensional { d } => write!(f, "{d}-dimensional"),
            Family::DimensionalA { d } => write!(f, "{d}-dimensional A"),
        }
    }
}

/// One full row of a Narayana triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NarayanaRow {
    pub family: Family,
    pub n: usize,
    pub coefficients: Vec<BigInt>,
}

impl NarayanaRow {
    /// Generates the row and checks positivity of every entry and the row-sum law.
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let coefficients = match family {
            Family::Classic => {
                if n == 0 {
                    return Err(Error::range("n", "classic Narayana rows need n >= 1"));
                }
                (0..n as i64)
                    .map(|k| narayana_classic(n, k))
                    .collect::<Result<Vec<_>>>()?
            }
            Family::TypeA => (0..=n as i64)
                .map(|k| narayana_typed(TypedFamily::A, n, k))
                .collect::<Result<_>>()?,
            Family::TypeB => (0..=n as i64)
                .map(|k| narayana_typed(TypedFamily::B, n, k))
                .collect::<Result<_>>()?,
            Family::Dimensional { d } => {
                if d == 0 || n == 0 {
                    return Err(Error::range("d, n", "need d >= 1 and n >= 1"));
                }
                (0..=ddim_top(d, n) as i64)
                    .map(|k| narayana_ddim(d, n, k))
                    .collect::<Result<_>>()?
            }
            Family::DimensionalA { d } => {
                if d == 0 {
                    return Err(Error::range("d", "need d >= 1"));
                }
                (0..=((d - 1) * n) as i64)
                    .map(|k| narayana_ddim_a(d, n, k))
                    .collect::<Result<_>>()?
            }
        };
        let row = Self {
            family,
            n,
            coefficients,
        };
        if let Some(bad) = row.coefficients.iter().find(|c| !c.is_positive()) {
            return Err(Error::IdentityViolation {
                name: format!("{family} Narayana row {n} positivity"),
                left: bad.to_string(),
                right: "> 0".into(),
            });
        }
        let (sum, target) = (row.sum(), row.catalan_target()?);
        if sum != target {
            return Err(Error::IdentityViolation {
                name: format!("{family} Narayana row {n} sum"),
                left: sum.to_string(),
                right: target.to_string(),
            });
        }
        Ok(row)
    }

    pub fn sum(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    /// The Catalan number this row must sum to.
    pub fn catalan_target(&self) -> Result<BigInt> {
        let n = self.n;
        match self.family {
            Family::Classic => Ok(catalan_classic(n)),
            Family::TypeA => Ok(catalan_classic(n + 1)),
            Family::TypeB => Ok(binomial(2 * n as i64, n as u64)),
            Family::Dimensional { d } => catalan_ddim(d, n),
            Family::DimensionalA { d } => catalan_ddim(d, n + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn bigs(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().copied().map(big).collect()
    }

    #[test]
    fn classic_catalan_values() {
        assert_eq!(catalan_classic(0), big(1));
        assert_eq!(catalan_classic(5), big(42));
        assert_eq!(catalan_classic(6), big(132));
        assert_eq!(catalan_classic(8), big(1430));
        assert_eq!(catalan_classic(9), big(4862));
    }

    #[test]
    fn classic_narayana() {
        assert_eq!(narayana_classic(4, 1).unwrap(), big(6));
        for n in 1..10 {
            assert_eq!(narayana_classic(n, 0).unwrap(), big(1));
            assert_eq!(narayana_classic(n, n as i64).unwrap(), big(0));
        }
        let row = NarayanaRow::new(Family::Classic, 3).unwrap();
        assert_eq!(row.coefficients, bigs(&[1, 3, 1]));
        assert_eq!(row.sum(), big(5));
    }

    #[test]
    fn classic_narayana_range_errors() {
        assert!(matches!(narayana_classic(4, -1), Err(Error::Range { .. })));
        assert!(matches!(narayana_classic(4, 5), Err(Error::Range { .. })));
        assert!(matches!(narayana_classic(0, 0), Err(Error::Range { .. })));
    }

    #[test]
    fn typed_narayana() {
        assert_eq!(narayana_typed(TypedFamily::B, 2, 1).unwrap(), big(4));
        let row = NarayanaRow::new(Family::TypeA, 2).unwrap();
        assert_eq!(row.coefficients, bigs(&[1, 3, 1]));
        for n in 0..15 {
            let row = NarayanaRow::new(Family::TypeB, n).unwrap();
            assert_eq!(row.sum(), binomial(2 * n as i64, n as u64));
        }
        assert!(narayana_typed(TypedFamily::A, 3, 4).is_err());
        assert!(narayana_typed(TypedFamily::B, 3, -1).is_err());
    }

    #[test]
    fn weyl_catalan_named_cases() {
        for n in 1..=12 {
            let a = RootSystemType::new(Letter::A, n).unwrap();
            assert_eq!(catalan_weyl(a).unwrap(), catalan_classic(n + 1));
            let b = RootSystemType::new(Letter::B, n).unwrap();
            assert_eq!(catalan_weyl(b).unwrap(), binomial(2 * n as i64, n as u64));
        }
        let b2 = RootSystemType::new(Letter::B, 2).unwrap();
        assert_eq!(catalan_weyl(b2).unwrap(), big(6));
        // (1+6+1)/2 * (5+6+1)/6
        let g2 = RootSystemType::new(Letter::G, 2).unwrap();
        assert_eq!(catalan_weyl(g2).unwrap(), big(8));
        let d4 = RootSystemType::new(Letter::D, 4).unwrap();
        assert_eq!(catalan_weyl(d4).unwrap(), big(50));
        let e = |r| catalan_weyl(RootSystemType::new(Letter::E, r).unwrap()).unwrap();
        assert_eq!(e(6), big(833));
        assert_eq!(e(7), big(4160));
        assert_eq!(e(8), big(25080));
        let f4 = RootSystemType::new(Letter::F, 4).unwrap();
        assert_eq!(catalan_weyl(f4).unwrap(), big(105));
    }

    #[test]
    fn invalid_types() {
        for (l, r) in [
            (Letter::A, 0),
            (Letter::D, 2),
            (Letter::E, 5),
            (Letter::E, 9),
            (Letter::F, 3),
            (Letter::G, 3),
        ] {
            assert!(matches!(
                RootSystemType::new(l, r),
                Err(Error::InvalidType { .. })
            ));
        }
        assert!("X".parse::<Letter>().is_err());
        assert_eq!("e".parse::<Letter>().unwrap(), Letter::E);
    }

    #[test]
    fn exponent_table_matches_weyl_group_order() {
        let mut types = Vec::new();
        for r in 1..=12 {
            types.push(RootSystemType::new(Letter::A, r).unwrap());
            types.push(RootSystemType::new(Letter::B, r).unwrap());
            types.push(RootSystemType::new(Letter::C, r).unwrap());
            if r >= 3 {
                types.push(RootSystemType::new(Letter::D, r).unwrap());
            }
        }
        for r in 6..=8 {
            types.push(RootSystemType::new(Letter::E, r).unwrap());
        }
        types.push(RootSystemType::new(Letter::F, 4).unwrap());
        types.push(RootSystemType::new(Letter::G, 2).unwrap());
        for ty in types {
            let exps = ty.exponents();
            assert_eq!(exps.len(), ty.rank());
            let prod: BigInt = exps.iter().map(|e| BigInt::from(e + 1)).product();
            assert_eq!(prod, ty.weyl_group_order(), "{ty}");
            // the largest exponent is h - 1
            assert_eq!(*exps.iter().max().unwrap(), ty.coxeter_number() - 1, "{ty}");
        }
    }

    #[test]
    fn ddim_catalan() {
        for n in 0..15 {
            assert_eq!(catalan_ddim(2, n).unwrap(), catalan_classic(n));
        }
        // 6! * 0! 1! 2! / (2! 3! 4!)
        assert_eq!(catalan_ddim(3, 2).unwrap(), big(5));
        for d in 1..6 {
            assert_eq!(catalan_ddim(d, 0).unwrap(), big(1));
        }
    }

    #[test]
    fn ddim_narayana_hand_value() {
        // j = 0 term -10, j = 1 term 20
        assert_eq!(narayana_ddim(3, 3, 1).unwrap(), big(10));
        assert!(narayana_ddim(3, 3, 5).is_err());
        assert!(narayana_ddim(3, 3, -1).is_err());
    }

    #[test]
    fn ddim_narayana_reduces_to_classic() {
        for n in 1..=12 {
            for k in 0..n as i64 {
                assert_eq!(
                    narayana_ddim(2, n, k).unwrap(),
                    narayana_classic(n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn ddim_row_sums_and_symmetry() {
        for d in 1..=4 {
            for n in 1..=6 {
                let row = NarayanaRow::new(Family::Dimensional { d }, n).unwrap();
                assert_eq!(row.sum(), catalan_ddim(d, n).unwrap());
                let rev: Vec<_> = row.coefficients.iter().rev().cloned().collect();
                assert_eq!(row.coefficients, rev, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn type_a_agrees_with_two_dimensional() {
        for n in 0..=10 {
            for k in 0..=n as i64 {
                assert_eq!(
                    narayana_typed(TypedFamily::A, n, k).unwrap(),
                    narayana_ddim_a(2, n, k).unwrap()
                );
            }
        }
    }
}
