//! Weyl dimension formula for `sl_{m+1}` and two closed forms derived from it.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::exact::{binomial, exact_div, to_integer, Rational};
use crate::weights::DominantWeight;

/// `dim V_w = prod_{alpha > 0} <w + rho, alpha^vee> / <rho, alpha^vee>`.
///
/// Numerator and denominator are accumulated separately and divided once.
pub fn weyl_dim(w: &DominantWeight) -> Result<BigInt> {
    let m = w.rank();
    // prefix[i] = sum of (label + 1) over the first i labels
    let mut prefix = Vec::with_capacity(m + 1);
    prefix.push(BigInt::from(0u32));
    for &l in w.labels() {
        let next = prefix.last().unwrap() + BigInt::from(l) + 1u32;
        prefix.push(next);
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for a in 1..=m {
        for b in a..=m {
            num *= &prefix[b] - &prefix[a - 1];
            den *= BigInt::from(b - a + 1);
        }
    }
    exact_div(&num, &den, &format!("dim V_{w}"))
}

/// `dim V_{k omega_{n+1}}` for `sl_{n+d+1}` as
/// `prod_{i<d} binom(k+n+1+i, n+1) / binom(n+1+i, n+1)`.
pub fn dim_grassmannian(d: usize, n: usize, k: u64) -> Result<BigInt> {
    let (n1, k) = ((n + 1) as i64, k as i64);
    let product = (0..d as i64).fold(Rational::one(), |acc, i| {
        acc * Rational::new(binomial(k + n1 + i, n1 as u64), binomial(n1 + i, n1 as u64))
    });
    to_integer(&product, &format!("dim V_{{{k} omega_{n1}}} (d = {d})"))
}

/// `dim V_{k theta}` for `sl_{n+1}` as `binom(k+n, n)^2 - binom(k-1+n, n)^2`.
pub fn dim_adjoint_scaled(n: usize, k: u64) -> BigInt {
    let (n_i, k) = (n as i64, k as i64);
    let hi = binomial(k + n_i, n as u64);
    let lo = binomial(k - 1 + n_i, n as u64);
    &hi * &hi - &lo * &lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::narayana_ddim_a;
    use crate::weights::dual_weight;
    use proptest::prelude::*;

    fn w(labels: &[u64]) -> DominantWeight {
        DominantWeight::new(labels.to_vec()).unwrap()
    }

    /// Counts semistandard Young tableaux of the partition attached to `labels`
    /// with entries in `1..=rank+1`; for `sl_{m+1}` this is `dim V_w`.
    fn ssyt_count(labels: &[u64]) -> u64 {
        let m = labels.len();
        // row lengths lambda_i = l_i + ... + l_m
        let shape: Vec<usize> = (0..m)
            .map(|i| labels[i..].iter().sum::<u64>() as usize)
            .filter(|&r| r > 0)
            .collect();
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        let mut grid: Vec<Vec<u64>> = shape.iter().map(|&len| vec![0; len]).collect();
        fn fill(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u64>>, max: u64) -> u64 {
            if idx == cells.len() {
                return 1;
            }
            let (r, c) = cells[idx];
            let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
            let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=max {
                grid[r][c] = v;
                total += fill(idx + 1, cells, grid, max);
            }
            total
        }
        fill(0, &cells, &mut grid, m as u64 + 1)
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(weyl_dim(&w(&[1, 0])).unwrap(), BigInt::from(3));
        assert_eq!(weyl_dim(&w(&[1, 1])).unwrap(), BigInt::from(8));
        assert_eq!(weyl_dim(&w(&[0, 1, 0])).unwrap(), BigInt::from(6));
        assert_eq!(weyl_dim(&w(&[2, 2])).unwrap(), BigInt::from(27));
        assert_eq!(weyl_dim(&w(&[0, 0, 0])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn agrees_with_tableau_count() {
        let weights: &[&[u64]] = &[
            &[1],
            &[4],
            &[2, 1],
            &[0, 3],
            &[1, 0, 1],
            &[2, 0, 1],
            &[0, 2, 0],
            &[1, 1, 1],
            &[1, 0, 0, 1],
            &[0, 1, 1, 0],
        ];
        for &l in weights {
            assert_eq!(
                weyl_dim(&w(l)).unwrap(),
                BigInt::from(ssyt_count(l)),
                "{l:?}"
            );
        }
    }

    #[test]
    fn grassmannian_closed_form() {
        assert_eq!(dim_grassmannian(2, 1, 1).unwrap(), BigInt::from(6));
        for d in 1..=4 {
            for n in 0..=5 {
                assert_eq!(dim_grassmannian(d, n, 0).unwrap(), BigInt::from(1));
                let omega = DominantWeight::fundamental(n + d, n + 1).unwrap();
                for k in 0..=12 {
                    assert_eq!(
                        dim_grassmannian(d, n, k).unwrap(),
                        weyl_dim(&omega.scaled(k)).unwrap(),
                        "d={d} n={n} k={k}"
                    );
                }
            }
        }
        for n in 0..6 {
            for k in 0..10u64 {
                assert_eq!(
                    dim_grassmannian(1, n, k).unwrap(),
                    binomial(k as i64 + n as i64 + 1, n as u64 + 1)
                );
            }
        }
    }

    #[test]
    fn adjoint_closed_form() {
        assert_eq!(dim_adjoint_scaled(2, 1), BigInt::from(8));
        assert_eq!(dim_adjoint_scaled(2, 2), BigInt::from(27));
        for n in 1..=6 {
            assert_eq!(dim_adjoint_scaled(n, 0), BigInt::from(1));
            let theta = DominantWeight::highest_root(n).unwrap();
            for k in 0..=12 {
                assert_eq!(
                    dim_adjoint_scaled(n, k),
                    weyl_dim(&theta.scaled(k)).unwrap()
                );
            }
        }
    }

    #[test]
    fn sulanke_expansion_small_grid() {
        for d in 1..=3 {
            for n in 0..=3 {
                let top = (d - 1) * n;
                for k in 0..=10u64 {
                    let rhs: BigInt = (0..=k.min(top as u64))
                        .map(|i| {
                            narayana_ddim_a(d, n, i as i64).unwrap()
                                * binomial(
                                    (d * (n + 1)) as i64 + k as i64 - i as i64,
                                    (d * (n + 1)) as u64,
                                )
                        })
                        .sum();
                    assert_eq!(dim_grassmannian(d, n, k).unwrap(), rhs);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn dual_has_equal_dimension(labels in prop::collection::vec(0u64..4, 1..7)) {
            let w = DominantWeight::new(labels).unwrap();
            prop_assert_eq!(weyl_dim(&w).unwrap(), weyl_dim(&dual_weight(&w)).unwrap());
        }

        #[test]
        fn scaling_strictly_increases(labels in prop::collection::vec(0u64..3, 1..6)) {
            let w = DominantWeight::new(labels).unwrap();
            prop_assume!(!w.is_zero());
            let dims: Vec<BigInt> = (0..8).map(|k| weyl_dim(&w.scaled(k)).unwrap()).collect();
            prop_assert!(dims.windows(2).all(|p| p[0] < p[1]));
        }
    }
}
