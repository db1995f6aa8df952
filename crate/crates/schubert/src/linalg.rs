//! Exact linear algebra over the rationals and over a large prime field.
//!
//! Matrices are dense row-major `Vec<Vec<_>>`; everything here is sized for
//! the desk-scale systems produced by the rest of the crate (tens of rows,
//! not thousands). Rational ranks go through fraction-free Bareiss
//! elimination on cleared denominators; solving uses exact Gauss-Jordan.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_int(mat: &[Vec<BigInt>]) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pivot) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pivot);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[r][c] = q;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix (denominators cleared row by row first).
pub fn rank_q(mat: &[Vec<BigRational>]) -> usize {
    let cleared: Vec<Vec<BigInt>> = mat
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();
    rank_int(&cleared)
}

/// Outcome of an exact multi-right-hand-side solve.
pub enum Solve {
    /// Unique solution matrix, one column per right-hand side.
    Unique(QMatrix),
    /// The coefficient matrix has full column rank but some right-hand side
    /// is outside its column span; the witness is the residual row index.
    Inconsistent(usize),
    /// The coefficient matrix does not have full column rank.
    RankDeficient,
}

/// Solves `A X = B` exactly for a matrix `A` with full column rank, where
/// `B` holds one right-hand side per column.
pub fn solve_multi_q(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Solve {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let nrhs = if rows == 0 { 0 } else { b[0].len() };
    debug_assert_eq!(b.len(), rows);
    // augmented matrix [A | B]
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| a[r].iter().chain(b[r].iter()).cloned().collect())
        .collect();
    let mut pivot_rows: Vec<usize> = Vec::with_capacity(cols);
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            return Solve::RankDeficient;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..cols + nrhs {
            let v = &m[row][c] * &inv;
            m[row][c] = v;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols + nrhs {
                    let v = &m[r][c] - &factor * &m[row][c];
                    m[r][c] = v;
                }
            }
        }
        pivot_rows.push(row);
        row += 1;
    }
    // rows below the pivot block must be zero on the RHS as well
    for r in row..rows {
        if m[r][cols..].iter().any(|v| !v.is_zero()) {
            return Solve::Inconsistent(r);
        }
    }
    let mut x = vec![vec![BigRational::zero(); nrhs]; cols];
    for (col, &pr) in pivot_rows.iter().enumerate() {
        for k in 0..nrhs {
            x[col][k] = m[pr][cols + k].clone();
        }
    }
    Solve::Unique(x)
}

/// Arithmetic in the prime field `F_p` for `p < 2^62`.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 62), "modulus out of range");
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat; `a` must be nonzero mod `p` (and `p` prime).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    /// Reduces a big integer into `[0, p)`.
    pub fn reduce_int(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = v % &p;
        if r.is_negative() {
            r += &p;
        }
        let digits = r.to_u64_digits().1;
        digits.first().copied().unwrap_or(0)
    }

    /// Reduces a rational into `F_p`; fails only if the denominator is
    /// divisible by `p`.
    pub fn reduce_rational(&self, v: &BigRational) -> Option<u64> {
        let num = self.reduce_int(v.numer());
        let den = self.reduce_int(v.denom());
        if den == 0 {
            return None;
        }
        Some(self.mul(num, self.inv(den)))
    }
}

/// Rank over `F_p` by standard elimination.
pub fn rank_fp(mat: &[Vec<u64>], field: Fp) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut a: Vec<Vec<u64>> = mat.to_vec();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, p);
        let inv = field.inv(a[row][col]);
        for c in col..cols {
            a[row][c] = field.mul(a[row][c], inv);
        }
        for r in row + 1..rows {
            if a[r][col] != 0 {
                let f = a[r][col];
                for c in col..cols {
                    let sub = field.mul(f, a[row][c]);
                    a[r][c] = field.sub(a[r][c], sub);
                }
            }
        }
        row += 1;
        rank += 1;
    }
    rank
}

/// Default prime modulus: the Mersenne prime `2^61 - 1`.
pub const DEFAULT_PRIME: u64 = (1 << 61) - 1;

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(rank_q(&m), 1);
        let m = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert_eq!(rank_q(&m), 2);
        let m: Vec<Vec<BigRational>> = vec![vec![q(0); 3]; 2];
        assert_eq!(rank_q(&m), 0);
    }

    #[test]
    fn rank_matches_fp_on_integer_matrix() {
        let field = Fp::new(DEFAULT_PRIME);
        let rows = 5;
        let cols = 4;
        let mut int_m = Vec::new();
        let mut fp_m = Vec::new();
        let mut state = 12345u64;
        for _ in 0..rows {
            let mut ri = Vec::new();
            let mut rf = Vec::new();
            for _ in 0..cols {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let v = (state >> 33) as i64 % 20 - 10;
                ri.push(q(v));
                rf.push(field.reduce_int(&BigInt::from(v)));
            }
            int_m.push(ri);
            fp_m.push(rf);
        }
        assert_eq!(rank_q(&int_m), rank_fp(&fp_m, field));
    }

    #[test]
    fn solve_and_consistency() {
        // A is 3x2 of rank 2
        let a = vec![vec![q(1), q(1)], vec![q(0), q(2)], vec![q(1), q(3)]];
        let b = vec![vec![q(3)], vec![q(4)], vec![q(7)]]; // x = (1, 2)
        match solve_multi_q(&a, &b) {
            Solve::Unique(x) => {
                assert_eq!(x, vec![vec![q(1)], vec![q(2)]]);
            }
            _ => panic!("expected a unique solution"),
        }
        let bad = vec![vec![q(1)], vec![q(0)], vec![q(0)]];
        assert!(matches!(solve_multi_q(&a, &bad), Solve::Inconsistent(_)));
        let deficient = vec![vec![q(1), q(2)], vec![q(2), q(4)], vec![q(3), q(6)]];
        assert!(matches!(solve_multi_q(&deficient, &b), Solve::RankDeficient));
    }

    #[test]
    fn fp_inverse() {
        let f = Fp::new(DEFAULT_PRIME);
        for a in [1u64, 2, 17, 123456789] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.reduce_rational(&(q(1) / q(3))).map(|v| f.mul(v, 3)), Some(1));
        assert_eq!(f.reduce_int(&BigInt::from(-5)), DEFAULT_PRIME - 5);
    }
}
