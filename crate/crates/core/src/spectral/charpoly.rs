//! Characteristic polynomials and determinants without fractions.

use super::matrix::Matrix;
use super::poly::Polynomial;
use crate::scalar::Scalar;

/// `det(xI - M)` by the Faddeev–LeVerrier trace recurrence.
///
/// With `M_0 = 0` and `c_s = 1`, each step forms `M_k = A M_{k-1} + c_{s-k+1} I`
/// and `c_{s-k} = -tr(A M_k) / k`. Over the integers every one of those
/// divisions is exact (Newton's identities), and that is asserted.
pub fn charpoly<T: Scalar>(a: &Matrix<T>) -> Polynomial<T> {
    assert!(
        a.is_square(),
        "characteristic polynomial of a non-square matrix"
    );
    let s = a.rows();
    let mut coeffs = vec![T::zero(); s + 1];
    coeffs[s] = T::one();
    // a_m holds A * M_k
    let mut a_m: Matrix<T> = Matrix::zeros(s, s);
    for k in 1..=s {
        let mut m = a_m;
        for i in 0..s {
            m[(i, i)] = m[(i, i)].clone() + coeffs[s - k + 1].clone();
        }
        a_m = a * &m;
        let tr = a_m.trace();
        let kk = T::from_usize_exact(k);
        assert!(
            tr.divisible_by(&kk),
            "trace recurrence division was not exact"
        );
        coeffs[s - k] = -(tr / kk);
    }
    Polynomial::new(coeffs)
}

/// Fraction-free (Bareiss) determinant with row pivoting.
pub fn determinant<T: Scalar>(a: &Matrix<T>) -> T {
    assert!(a.is_square());
    let s = a.rows();
    if s == 0 {
        return T::one();
    }
    let mut m = a.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..s - 1 {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..s).find(|&r| !m[(r, k)].is_zero()) else {
                return T::zero();
            };
            for j in 0..s {
                let tmp = m[(k, j)].clone();
                m[(k, j)] = m[(p, j)].clone();
                m[(p, j)] = tmp;
            }
            sign = -sign;
        }
        for i in k + 1..s {
            for j in k + 1..s {
                let num =
                    m[(i, j)].clone() * m[(k, k)].clone() - m[(i, k)].clone() * m[(k, j)].clone();
                debug_assert!(num.divisible_by(&prev));
                m[(i, j)] = num / prev.clone();
            }
            m[(i, k)] = T::zero();
        }
        prev = m[(k, k)].clone();
    }
    sign * m[(s - 1, s - 1)].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn big(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(rows).map(|&v: &i64| BigInt::from(v))
    }

    fn cofactor_det(m: &Matrix<i64>) -> i64 {
        let s = m.rows();
        if s == 0 {
            return 1;
        }
        (0..s)
            .map(|j| {
                let minor = Matrix::from_fn(s - 1, s - 1, |r, c| {
                    m[(r + 1, if c < j { c } else { c + 1 })]
                });
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[(0, j)] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn zero_matrix() {
        let p = charpoly(&Matrix::<BigInt>::zeros(2, 2));
        assert_eq!(p, Polynomial::monomial(2));
        assert_eq!(charpoly(&Matrix::<BigInt>::zeros(0, 0)), Polynomial::one());
    }

    #[test]
    fn two_by_two() {
        // [[1,2],[3,4]] -> x^2 - 5x - 2
        let p = charpoly(&big(vec![vec![1, 2], vec![3, 4]]));
        assert_eq!(
            p.coeffs(),
            &[BigInt::from(-2), BigInt::from(-5), BigInt::from(1)]
        );
    }

    #[test]
    fn generic_over_floats() {
        let m = Matrix::from_rows(vec![vec![2.0f64, 1.0], vec![1.0, 2.0]]);
        let p = charpoly(&m);
        assert!((p.eval(&1.0)).abs() < 1e-12);
        assert!((p.eval(&3.0)).abs() < 1e-12);
        assert!((determinant(&m) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn determinant_needs_pivot() {
        let m = Matrix::from_rows(vec![vec![0i64, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(determinant(&m), cofactor_det(&m));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<i64>> {
        (1usize..6).prop_flat_map(|s| {
            prop::collection::vec(-3i64..=3, s * s)
                .prop_map(move |v| Matrix::from_fn(s, s, |i, j| v[i * s + j]))
        })
    }

    proptest! {
        #[test]
        fn trace_and_determinant_coefficients(m in small_matrix()) {
            let s = m.rows();
            let p = charpoly(&m.map(|&v| BigInt::from(v)));
            prop_assert_eq!(p.degree(), Some(s));
            prop_assert!(p.is_monic());
            prop_assert_eq!(p.coeff(s - 1), BigInt::from(-m.trace()));
            let det = cofactor_det(&m);
            let sign = if s % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(p.coeff(0), BigInt::from(sign * det));
            prop_assert_eq!(determinant(&m), det);
        }
    }
}
