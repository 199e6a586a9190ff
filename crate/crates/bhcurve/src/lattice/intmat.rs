//! Exact linear algebra over the integers and rationals: fraction-free
//! Bareiss determinants, inertia of symmetric matrices, and the Artin
//! invariant read off a determinant of the shape `-p^(2*sigma)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational with a positive denominator in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Rat {
    num: BigInt,
    den: BigInt,
}

impl Rat {
    fn new(num: BigInt, den: BigInt) -> Rat {
        assert!(!den.is_zero(), "zero denominator");
        let (mut num, mut den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Rat { num, den }
    }

    fn from_int(n: i64) -> Rat {
        Rat { num: BigInt::from(n), den: BigInt::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    fn add(&self, o: &Rat) -> Rat {
        Rat::new(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }

    fn sub(&self, o: &Rat) -> Rat {
        Rat::new(&self.num * &o.den - &o.num * &self.den, &self.den * &o.den)
    }

    fn mul(&self, o: &Rat) -> Rat {
        Rat::new(&self.num * &o.num, &self.den * &o.den)
    }

    fn div(&self, o: &Rat) -> Rat {
        assert!(!o.is_zero(), "division by zero rational");
        Rat::new(&self.num * &o.den, &self.den * &o.num)
    }
}

/// Determinant of a square integer matrix by the fraction-free Bareiss
/// algorithm. All intermediate divisions are exact, so the result is an
/// exact integer no matter how large the entries grow.
pub fn bareiss_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    for row in m {
        assert_eq!(row.len(), n, "square matrix required");
    }
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                None => return BigInt::zero(),
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Inertia `(n_plus, n_minus, n_zero)` of a symmetric integer matrix,
/// computed by exact symmetric reduction over the rationals. Diagonal
/// pivots are eliminated one at a time; when the remaining block has an
/// all-zero diagonal, a nonzero off-diagonal entry spans a hyperbolic
/// 2x2 block contributing one eigenvalue of each sign.
pub fn inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let full = m.len();
    for row in m {
        assert_eq!(row.len(), full, "square matrix required");
    }
    for i in 0..full {
        for j in 0..i {
            assert_eq!(m[i][j], m[j][i], "symmetric matrix required");
        }
    }
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rat::from_int(x)).collect())
        .collect();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    let mut n = full;
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
            if p != k {
                a.swap(k, p);
                for row in a.iter_mut() {
                    row.swap(k, p);
                }
            }
            let d = a[k][k].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].div(&d);
                for j in k + 1..n {
                    let delta = f.mul(&a[k][j]);
                    a[i][j] = a[i][j].sub(&delta);
                }
            }
            k += 1;
        } else {
            // the remaining diagonal vanishes entirely; hunt for a
            // hyperbolic pair
            let mut found = None;
            'scan: for i in k..n {
                for j in i + 1..n {
                    if !a[i][j].is_zero() {
                        found = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let Some((bi, bj)) = found else {
                zero += n - k;
                break;
            };
            pos += 1;
            neg += 1;
            let d = a[bi][bj].clone();
            let others: Vec<usize> = (k..n).filter(|&t| t != bi && t != bj).collect();
            // Schur complement of the 2x2 block [[0, d], [d, 0]]
            let mut next: Vec<Vec<Rat>> = Vec::with_capacity(others.len());
            for &mi in &others {
                let mut row = Vec::with_capacity(others.len());
                for &li in &others {
                    let corr = a[mi][bi]
                        .mul(&a[bj][li])
                        .add(&a[mi][bj].mul(&a[bi][li]))
                        .div(&d);
                    row.push(a[mi][li].sub(&corr));
                }
                next.push(row);
            }
            a = next;
            n = others.len();
            k = 0;
        }
    }
    (pos, neg, zero)
}

/// Read off the Artin invariant `sigma` from a determinant of the
/// supersingular shape `det = -p^(2*sigma)` with `sigma >= 1`.
pub fn artin_invariant(det: &BigInt, p: u32) -> Result<u32> {
    let fail = || Error::NotMinusPPower(i64::try_from(det).unwrap_or(i64::MAX));
    if !det.is_negative() {
        return Err(fail());
    }
    let mut mag = -det.clone();
    let base = BigInt::from(p);
    let mut e = 0u32;
    while (&mag % &base).is_zero() {
        mag /= &base;
        e += 1;
    }
    if !mag.is_one() || e == 0 || e % 2 != 0 {
        return Err(fail());
    }
    Ok(e / 2)
}

/// Convert a determinant to `i64` for reporting.
pub fn det_to_i64(det: &BigInt) -> Result<i64> {
    i64::try_from(det).map_err(|_| Error::DetOverflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_core::{RngCore, SeedableRng};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    /// Cofactor-expansion determinant, as an independent cross-check.
    fn naive_det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return m[0][0] as i128;
        }
        let mut total = 0i128;
        for (col, &top) in m[0].iter().enumerate() {
            if top == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let term = top as i128 * naive_det(&minor);
            if col % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn small_determinants() {
        assert_eq!(bareiss_det(&mat(&[&[2, 1], &[1, 2]])), BigInt::from(3));
        assert_eq!(bareiss_det(&mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss_det(&mat(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        // a zero leading pivot forces a row swap
        assert_eq!(
            bareiss_det(&mat(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 1]])),
            BigInt::from(-1)
        );
        // negated A_3 Cartan matrix has determinant -4
        assert_eq!(
            bareiss_det(&mat(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]])),
            BigInt::from(-4)
        );
        assert_eq!(bareiss_det(&[]), BigInt::from(1));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion_on_random_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260825);
        for trial in 0..40 {
            let n = 1 + (trial % 5);
            let m: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| (rng.next_u32() % 19) as i64 - 9).collect())
                .collect();
            assert_eq!(bareiss_det(&m), BigInt::from(naive_det(&m)));
        }
    }

    #[test]
    fn inertia_of_definite_and_indefinite_forms() {
        assert_eq!(inertia(&mat(&[&[2, 1], &[1, 2]])), (2, 0, 0));
        assert_eq!(
            inertia(&mat(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]])),
            (0, 3, 0)
        );
        // hyperbolic plane plus a radical direction
        assert_eq!(
            inertia(&mat(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]])),
            (1, 1, 1)
        );
        // zero diagonal but coupled off-diagonal entries
        assert_eq!(
            inertia(&mat(&[&[0, 2, 1], &[2, 0, 3], &[1, 3, 0]])),
            (1, 2, 0)
        );
        assert_eq!(inertia(&mat(&[&[0]])), (0, 0, 1));
        assert_eq!(inertia(&[]), (0, 0, 0));
    }

    #[test]
    fn inertia_counts_match_determinant_sign_on_random_symmetric_matrices() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..30 {
            let n = 1 + (trial % 5);
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in 0..=i {
                    let x = (rng.next_u32() % 11) as i64 - 5;
                    m[i][j] = x;
                    m[j][i] = x;
                }
            }
            let (p, q, z) = inertia(&m);
            assert_eq!(p + q + z, n);
            let det = bareiss_det(&m);
            if z > 0 {
                assert_eq!(det, BigInt::from(0));
            } else {
                assert!(!det.is_zero());
                let negative = det < BigInt::from(0);
                assert_eq!(negative, q % 2 == 1);
            }
        }
    }

    #[test]
    fn artin_invariant_from_determinant() {
        assert_eq!(artin_invariant(&BigInt::from(-9), 3).unwrap(), 1);
        assert_eq!(artin_invariant(&BigInt::from(-25), 5).unwrap(), 1);
        assert_eq!(artin_invariant(&BigInt::from(-81), 3).unwrap(), 2);
        assert_eq!(
            artin_invariant(&BigInt::from(9), 3),
            Err(Error::NotMinusPPower(9))
        );
        assert_eq!(
            artin_invariant(&BigInt::from(-27), 3),
            Err(Error::NotMinusPPower(-27))
        );
        assert_eq!(
            artin_invariant(&BigInt::from(-8), 3),
            Err(Error::NotMinusPPower(-8))
        );
        assert_eq!(
            artin_invariant(&BigInt::from(-1), 5),
            Err(Error::NotMinusPPower(-1))
        );
    }

    #[test]
    fn det_conversion() {
        assert_eq!(det_to_i64(&BigInt::from(-9)).unwrap(), -9);
        let huge = BigInt::from(i64::MAX) * 2;
        assert_eq!(det_to_i64(&huge), Err(Error::DetOverflow));
    }
}
