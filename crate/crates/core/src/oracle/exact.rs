//! Fraction-free exact linear algebra over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

/// Scales a rational row by the lcm of its denominators.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Row rank by integer elimination; each row is kept primitive.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let p = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(p.iter()) {
                *x = &*x * &p[col] - &factor * y;
            }
            primitive(row);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Exact row rank of a rational matrix.
pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    integer_rank(matrix.iter().map(|r| integer_row(r)).collect())
}

pub fn int_rank(matrix: &[Vec<i64>]) -> usize {
    integer_rank(
        matrix
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "square matrix required");
    if n == 0 {
        return BigInt::one();
    }
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = value / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

pub fn int_determinant(matrix: &[Vec<i64>]) -> BigInt {
    let big: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    determinant(&big)
}

pub fn is_unimodular(matrix: &[Vec<i64>]) -> bool {
    int_determinant(matrix).abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    #[test]
    fn ranks() {
        let id: Vec<Vec<i64>> = (0..4)
            .map(|i| (0..4).map(|j| i64::from(i == j)).collect())
            .collect();
        assert_eq!(int_rank(&id), 4);
        assert_eq!(int_rank(&[vec![0, 0, 0], vec![0, 0, 0]]), 0);
        // indicators of the two paths of the 2x2 grid
        assert_eq!(int_rank(&[vec![1, 1, 0, 1], vec![1, 0, 1, 1]]), 2);
        assert_eq!(int_rank(&[vec![1, 2], vec![2, 4], vec![3, 6]]), 1);
        let half = vec![
            vec![rational(1, 2), rational(1, 3)],
            vec![rational(3, 2), rational(1, 1)],
        ];
        assert_eq!(rank(&half), 1);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn determinants() {
        assert_eq!(int_determinant(&[vec![2, 1], vec![1, 1]]), BigInt::from(1));
        assert_eq!(int_determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(
            int_determinant(&[vec![2, -3, 1], vec![2, 0, -1], vec![1, 4, 5]]),
            BigInt::from(49)
        );
        assert_eq!(int_determinant(&[vec![1, 2], vec![2, 4]]), BigInt::from(0));
        assert_eq!(
            int_determinant(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]),
            BigInt::from(-1)
        );
    }
}
