//! Dense linear algebra over a generic scalar.

use crate::error::{LppError, Result};
use crate::scalar::Scalar;

/// Determinant by Gaussian elimination with largest-magnitude pivoting.
pub fn determinant<T: Scalar>(matrix: &[Vec<T>]) -> Result<T> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().find(|r| r.len() != n) {
        return Err(LppError::DimensionMismatch {
            expected: n,
            actual: row.len(),
        });
    }
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let mut det = T::one();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&x, &y| {
                a[x][col]
                    .abs()
                    .partial_cmp(&a[y][col].abs())
                    .expect("comparable entries")
            });
        let Some(p) = pivot else {
            return Ok(T::zero());
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det = det * pv.clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / pv.clone();
            for c in col..n {
                let sub = f.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - sub;
            }
        }
    }
    Ok(det)
}

pub fn mat_vec<T: Scalar>(matrix: &[Vec<T>], x: &[T]) -> Vec<T> {
    matrix
        .iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational, Rational};

    #[test]
    fn small_determinants() {
        let m: Vec<Vec<Rational>> = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(determinant(&m).unwrap(), int(-1));
        let m = vec![vec![2.0, 1.0], vec![4.0, 2.0]];
        assert_eq!(determinant(&m).unwrap(), 0.0);
        let m = vec![vec![rational(1, 2), int(3)], vec![int(1), int(4)]];
        assert_eq!(determinant(&m).unwrap(), int(-1));
        assert!(determinant(&[vec![1.0, 2.0]]).is_err());
        assert_eq!(determinant::<f64>(&[]).unwrap(), 1.0);
    }
}
