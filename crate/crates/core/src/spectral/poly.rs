//! Dense univariate polynomials, coefficients in ascending degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Field, Scalar};

/// `coeffs[i]` multiplies `x^i`. Trailing zeros are never stored, so the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![T::zero(); k + 1];
        c[k] = T::one();
        Polynomial { coeffs: c }
    }

    /// `x - r`
    pub fn linear_root(r: T) -> Self {
        Self::new(vec![-r, T::one()])
    }

    pub fn from_roots<'a, I>(roots: I) -> Self
    where
        I: IntoIterator<Item = &'a T>,
        T: 'a,
    {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_root(r.clone()))
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `q(x) = p(x + c)`, by Horner's rule in the shifted variable.
    pub fn shift(&self, c: &T) -> Self {
        let step = Self::new(vec![c.clone(), T::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            &(&acc * &step) + &Self::constant(a.clone())
        })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize_exact(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Division by a monic polynomial; valid over any ring.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let q = rem[i + d].clone();
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * c.clone();
            }
            quot[i] = q;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Quotient if `divisor` (monic) divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_monic(divisor);
        r.is_zero().then_some(q)
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &T) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Self::linear_root(r.clone());
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.exact_div(&lin) {
            p = q;
            k += 1;
        }
        k
    }
}

impl<T: Field> Polynomial<T> {
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor
            .leading()
            .expect("division by zero polynomial")
            .clone();
        let monic = divisor.scale(&(T::one() / lead.clone()));
        let (q, r) = self.div_rem_monic(&monic);
        (q.scale(&(T::one() / lead)), r)
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&(T::one() / l.clone())),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Yun's square-free decomposition: `factors[i]` is the monic square-free
    /// product of the irreducible factors with multiplicity `i + 1`.
    pub fn squarefree_decomposition(&self) -> Vec<Self> {
        let f = self.make_monic();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            out.push(a.clone());
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
        }
        out
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
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

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Descending-degree display, e.g. `x^2 - 6x + 6`.
impl<T: Scalar + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial<BigInt> {
        Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn q(c: &[i64]) -> Polynomial<BigRational> {
        Polynomial::new(
            c.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn shift_of_square() {
        assert_eq!(p(&[0, 0, 1]).shift(&BigInt::from(3)), p(&[9, 6, 1]));
        let any = p(&[5, -3, 0, 2]);
        assert_eq!(any.shift(&BigInt::from(0)), any);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[6, -6, 1]).to_string(), "x^2 - 6x + 6");
        assert_eq!(p(&[0, 3, 0, -4, 0, 1]).to_string(), "x^5 - 4x^3 + 3x");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn monic_division_and_multiplicity() {
        let f = &p(&[3, 1]).pow(3) * &p(&[0, 1]);
        assert_eq!(f.root_multiplicity(&BigInt::from(-3)), 3);
        assert_eq!(f.root_multiplicity(&BigInt::from(0)), 1);
        assert_eq!(f.root_multiplicity(&BigInt::from(1)), 0);
        assert_eq!(f.exact_div(&p(&[3, 1]).pow(3)), Some(p(&[0, 1])));
        assert_eq!(f.exact_div(&p(&[1, 1])), None);
    }

    #[test]
    fn squarefree_parts() {
        // x^6 (x-2)(x-3)(x-4)(x^2-6x+6)
        let f = &(&(&q(&[0, 1]).pow(6) * &q(&[-2, 1])) * &(&q(&[-3, 1]) * &q(&[-4, 1])))
            * &q(&[6, -6, 1]);
        let parts = f.squarefree_decomposition();
        assert_eq!(parts.len(), 6);
        assert_eq!(parts[0].degree(), Some(5));
        assert!(parts[1..5].iter().all(|x| x.degree() == Some(0)));
        assert_eq!(parts[5], q(&[0, 1]));
        assert_eq!(q(&[2, 0, 1]).gcd(&q(&[4, 0, 2])), q(&[2, 0, 1]));
    }

    fn coeffs() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-20i64..20, 0..7)
    }

    proptest! {
        #[test]
        fn shift_composes(c in coeffs(), a in -5i64..5, b in -5i64..5) {
            let f = p(&c);
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            prop_assert_eq!(f.shift(&a).shift(&b), f.shift(&(a.clone() + b.clone())));
        }

        #[test]
        fn shift_agrees_with_evaluation(c in coeffs(), s in -5i64..5, x in -6i64..6) {
            let f = p(&c);
            let (s, x) = (BigInt::from(s), BigInt::from(x));
            prop_assert_eq!(f.shift(&s).eval(&x), f.eval(&(x.clone() + s.clone())));
        }

        #[test]
        fn division_reconstructs(c in coeffs(), d in prop::collection::vec(-4i64..4, 0..3)) {
            let f = p(&c);
            let mut dc = d.clone();
            dc.push(1);
            let g = p(&dc);
            let (quot, rem) = f.div_rem_monic(&g);
            prop_assert_eq!(&(&quot * &g) + &rem, f);
            prop_assert!(rem.degree().is_none_or(|r| r < g.degree().unwrap()));
        }
    }
}
