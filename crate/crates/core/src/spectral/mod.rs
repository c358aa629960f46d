//! Exact spectra of G and G*.
//!
//! With B the vertex–triangle incidence matrix of a locally linear G, one has
//! `B Bᵀ = A + D/2` and `Bᵀ B = A* + 3I`. Since `B Bᵀ` and `Bᵀ B` share their
//! nonzero eigenvalues,
//!
//! ```text
//! P_{A*}(x) = (x + 3)^(m - n) · P_{A + D/2}(x + 3)
//! ```
//!
//! and for a k-regular G the right side is `(x + 3)^(m - n) · P_A(x - k/2 + 3)`.
//! [`verify_theorem1`] checks this coefficient by coefficient, multiplying
//! through by `(x + 3)^(n - m)` when `m < n`.

mod charpoly;
mod matrix;
mod poly;
pub mod roots;

pub use charpoly::{charpoly, determinant};
pub use matrix::Matrix;
pub use poly::Polynomial;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linear::{require_locally_linear, triangle_incidence};
use crate::scalar::Scalar;
use crate::star::star_graph;
use crate::{IntMatrix, IntPolynomial};

pub fn charpoly_exact(m: &IntMatrix) -> IntPolynomial {
    charpoly(m)
}

/// `q(x) = p(x + c)`.
pub fn poly_shift(p: &IntPolynomial, c: i64) -> IntPolynomial {
    p.shift(&BigInt::from(c))
}

pub fn adjacency<T: Scalar>(g: &Graph) -> Matrix<T> {
    let n = g.vertex_count();
    Matrix::from_fn(n, n, |i, j| {
        if g.has_edge(i, j) {
            T::one()
        } else {
            T::zero()
        }
    })
}

pub fn incidence_matrix<T: Scalar>(g: &Graph) -> Result<Matrix<T>> {
    let b = triangle_incidence(g)?;
    Ok(Matrix::from_fn(b.rows(), b.cols(), |v, t| {
        if b.get(v, t) {
            T::one()
        } else {
            T::zero()
        }
    }))
}

/// `A + D/2`, checked against `B Bᵀ`.
pub fn half_laplacian_like(g: &Graph) -> Result<IntMatrix> {
    require_locally_linear(g)?;
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) % 2 == 1) {
        return Err(Error::OddDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let mut m: IntMatrix = adjacency(g);
    for v in 0..n {
        m[(v, v)] = BigInt::from(g.degree(v) / 2);
    }
    let b: IntMatrix = incidence_matrix(g)?;
    if &b * &b.transpose() != m {
        return Err(Error::IdentityFailure("B Bᵀ differs from A + D/2".into()));
    }
    Ok(m)
}

/// `Bᵀ B`, checked against `A* + 3I`.
#[allow(non_snake_case)]
pub fn star_adjacency_plus_3I(g: &Graph) -> Result<IntMatrix> {
    let b: IntMatrix = incidence_matrix(g)?;
    let btb = &b.transpose() * &b;
    let star = star_graph(g)?.star;
    let expected =
        &adjacency::<BigInt>(&star) + &Matrix::scalar(star.vertex_count(), BigInt::from(3));
    if btb != expected {
        return Err(Error::IdentityFailure("Bᵀ B differs from A* + 3I".into()));
    }
    Ok(btb)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularCase {
    pub valency: usize,
    pub alt_rhs: IntPolynomial,
    pub alt_holds: bool,
}

/// Both sides of the identity after clearing negative powers of `(x + 3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub n: usize,
    pub m: usize,
    /// `P_{A*}`, `P_{A+D/2}` and `P_A`, unshifted.
    pub star_poly: IntPolynomial,
    pub half_poly: IntPolynomial,
    pub base_poly: IntPolynomial,
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
    pub holds: bool,
    pub regular_case: Option<RegularCase>,
}

pub fn verify_theorem1(g: &Graph) -> Result<TheoremReport> {
    let half = half_laplacian_like(g)?;
    let star_plus = star_adjacency_plus_3I(g)?;
    let n = g.vertex_count();
    let m = star_plus.rows();

    let star_adj = &star_plus - &Matrix::scalar(m, BigInt::from(3));
    let star_poly = charpoly_exact(&star_adj);
    let half_poly = charpoly_exact(&half);
    let base_poly = charpoly_exact(&adjacency(g));

    let x_plus_3 = poly_shift(&Polynomial::monomial(1), 3);
    // (x+3)^(m-n) moves to whichever side keeps the exponent nonnegative
    let (lhs_factor, rhs_factor) = if m >= n {
        (Polynomial::one(), x_plus_3.pow(m - n))
    } else {
        (x_plus_3.pow(n - m), Polynomial::one())
    };
    let lhs = &lhs_factor * &star_poly;
    let rhs = &rhs_factor * &poly_shift(&half_poly, 3);

    let regular_case = match g.is_regular() {
        Some(k) if n > 0 => {
            if k % 2 == 1 {
                return Err(Error::OddDegree {
                    vertex: 0,
                    degree: k,
                });
            }
            let alt_rhs = &rhs_factor * &poly_shift(&base_poly, 3 - (k / 2) as i64);
            Some(RegularCase {
                valency: k,
                alt_holds: alt_rhs == lhs,
                alt_rhs,
            })
        }
        _ => None,
    };

    Ok(TheoremReport {
        n,
        m,
        holds: lhs == rhs,
        star_poly,
        half_poly,
        base_poly,
        lhs,
        rhs,
        regular_case,
    })
}

/// When `m < n`, `P_{A+D/2}(x+3)` must be divisible by `(x+3)^(n-m)`; that is,
/// `A + D/2` has eigenvalue 0 with multiplicity at least `n - m`.
pub fn zero_eigenvalue_deficit_holds(report: &TheoremReport) -> bool {
    if report.m >= report.n {
        return true;
    }
    report.half_poly.root_multiplicity(&BigInt::from(0)) >= report.n - report.m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{friendship, paley9, triangular_snake};

    fn p(c: &[i64]) -> IntPolynomial {
        Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn from_roots(r: &[i64]) -> IntPolynomial {
        let roots: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
        Polynomial::from_roots(&roots)
    }

    #[test]
    fn paley_adjacency_spectrum() {
        let expected = from_roots(&[4, 1, 1, 1, 1, -2, -2, -2, -2]);
        assert_eq!(charpoly_exact(&adjacency(&paley9())), expected);
    }

    #[test]
    fn k33_spectrum() {
        let k33 = adjacency(&Graph::complete_bipartite(3, 3));
        assert_eq!(charpoly_exact(&k33), from_roots(&[0, 0, 0, 0, 3, -3]));
    }

    #[test]
    fn shifted_paley_half_matrix() {
        let half = half_laplacian_like(&paley9()).unwrap();
        assert_eq!(
            half,
            &adjacency(&paley9()) + &Matrix::scalar(9, BigInt::from(2))
        );
        let shifted = poly_shift(&charpoly_exact(&half), 3);
        assert_eq!(shifted, from_roots(&[3, 0, 0, 0, 0, -3, -3, -3, -3]));
        assert_eq!(poly_shift(&p(&[0, 0, 1]), 3), p(&[9, 6, 1]));
    }

    #[test]
    fn triangle_matrices() {
        let k3 = Graph::complete(3);
        assert_eq!(
            half_laplacian_like(&k3).unwrap(),
            Matrix::from_fn(3, 3, |_, _| BigInt::from(1))
        );
        assert_eq!(
            star_adjacency_plus_3I(&k3).unwrap(),
            Matrix::scalar(1, BigInt::from(3))
        );
        let f2 = star_adjacency_plus_3I(&friendship(2).unwrap()).unwrap();
        assert_eq!(
            f2,
            Matrix::from_rows(vec![vec![3, 1], vec![1, 3]]).map(|&v: &i64| BigInt::from(v))
        );
    }

    #[test]
    fn paley_star_block() {
        let m = star_adjacency_plus_3I(&paley9()).unwrap();
        assert_eq!(m.rows(), 6);
        assert!((0..6).all(|i| m[(i, i)] == BigInt::from(3)));
        let adj = &m - &Matrix::scalar(6, BigInt::from(3));
        assert_eq!(charpoly_exact(&adj), from_roots(&[0, 0, 0, 0, 3, -3]));
    }

    #[test]
    fn snake_half_matrix() {
        let half = half_laplacian_like(&triangular_snake(5).unwrap()).unwrap();
        let expected = &from_roots(&[0, 0, 0, 0, 0, 0, 2, 3, 4]) * &p(&[6, -6, 1]);
        assert_eq!(charpoly_exact(&half), expected);
    }

    #[test]
    fn theorem_on_examples() {
        let r = verify_theorem1(&paley9()).unwrap();
        assert_eq!((r.n, r.m), (9, 6));
        assert!(r.holds);
        assert_eq!(r.star_poly, from_roots(&[0, 0, 0, 0, 3, -3]));
        assert_eq!(r.lhs, &r.star_poly * &from_roots(&[-3, -3, -3]));
        let reg = r.regular_case.unwrap();
        assert_eq!(reg.valency, 4);
        assert!(reg.alt_holds);
        assert_eq!(reg.alt_rhs, r.rhs);

        let r = verify_theorem1(&triangular_snake(5).unwrap()).unwrap();
        assert_eq!((r.n, r.m), (11, 5));
        assert!(r.holds);
        assert_eq!(r.star_poly, p(&[0, 3, 0, -4, 0, 1]));
        assert!(r.regular_case.is_none());
        assert!(zero_eigenvalue_deficit_holds(&r));

        let r = verify_theorem1(&Graph::complete(3)).unwrap();
        assert_eq!(r.star_poly, p(&[0, 1]));
        assert_eq!(r.lhs, &p(&[3, 1]).pow(2) * &p(&[0, 1]));
        assert!(r.holds);
        assert!(r.regular_case.unwrap().alt_holds);
    }

    #[test]
    fn requires_local_linearity() {
        assert!(matches!(
            verify_theorem1(&Graph::complete(4)),
            Err(Error::NotLocallyLinear(_))
        ));
        assert!(matches!(
            half_laplacian_like(&Graph::path(3)),
            Err(Error::NotLocallyLinear(_))
        ));
    }

    #[test]
    fn empty_graph_is_trivially_fine() {
        let r = verify_theorem1(&Graph::empty(0)).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, Polynomial::one());
    }
}
