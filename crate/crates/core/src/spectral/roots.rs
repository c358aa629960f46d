//! Root extraction and isolation on exact integer polynomials.
//!
//! Only used for display. Integer roots come out exactly; the remaining real
//! roots are isolated with Sturm sequences over the rationals and bisected to
//! a fixed width, so the decimals printed never come from a floating point
//! eigensolver.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Polynomial;
use crate::{IntPolynomial, RatPolynomial};

/// Integer roots of a monic integer polynomial with their multiplicities,
/// descending. Non-monic input yields no roots.
pub fn integer_roots(p: &IntPolynomial) -> Vec<(BigInt, usize)> {
    if !p.is_monic() {
        return Vec::new();
    }
    let mut rest = p.clone();
    let mut out = Vec::new();
    let zero_mult = rest.root_multiplicity(&BigInt::zero());
    if zero_mult > 0 {
        rest = rest
            .exact_div(&Polynomial::monomial(zero_mult))
            .expect("x^k divides");
    }
    let bound = fujiwara_bound(&rest);
    let low = rest.coeff(0);
    let mut found: Vec<(BigInt, usize)> = Vec::new();
    for r in (1..=bound).flat_map(|r| [BigInt::from(r), BigInt::from(-r)]) {
        if low.is_zero() || !(low.clone() % r.clone()).is_zero() {
            continue;
        }
        let m = rest.root_multiplicity(&r);
        if m > 0 {
            rest = rest
                .exact_div(&Polynomial::linear_root(r.clone()).pow(m))
                .expect("root power divides");
            found.push((r, m));
        }
    }
    if zero_mult > 0 {
        found.push((BigInt::zero(), zero_mult));
    }
    found.sort_by(|a, b| b.0.cmp(&a.0));
    out.extend(found);
    out
}

/// Upper bound on root magnitudes of a monic polynomial:
/// `2 * max |a_{d-i}|^(1/i)`.
fn fujiwara_bound(p: &IntPolynomial) -> i64 {
    let Some(d) = p.degree() else { return 0 };
    let mut b = 0.0f64;
    for i in 1..=d {
        let a = p.coeff(d - i).abs().to_f64().unwrap_or(f64::MAX);
        b = b.max(a.powf(1.0 / i as f64));
    }
    (2.0 * b).ceil().min(i64::MAX as f64 / 4.0) as i64 + 1
}

/// Factored rendering: `x^k`, then integer linear factors by descending
/// root, then whatever remains, expanded.
pub fn factored_display(p: &IntPolynomial) -> String {
    if p.degree().unwrap_or(0) == 0 {
        return p.to_string();
    }
    let roots = integer_roots(p);
    let mut rest = p.clone();
    let mut parts = Vec::new();
    let mut zero_part = None;
    for (r, m) in &roots {
        rest = rest
            .exact_div(&Polynomial::linear_root(r.clone()).pow(*m))
            .expect("root power divides");
        let base = if r.is_zero() {
            "x".to_string()
        } else if r.is_negative() {
            format!("(x + {})", -r)
        } else {
            format!("(x - {r})")
        };
        let f = if *m == 1 { base } else { format!("{base}^{m}") };
        if r.is_zero() {
            zero_part = Some(f);
        } else {
            parts.push(f);
        }
    }
    if let Some(z) = zero_part {
        parts.insert(0, z);
    }
    if rest.degree().unwrap_or(0) > 0 {
        parts.push(format!("({rest})"));
    } else if parts.is_empty() || !rest.coeff(0).is_one() {
        parts.insert(0, rest.to_string());
    }
    parts.join("")
}

/// Real roots with multiplicity, descending. Each value is within `2^-40`
/// of a true root; integer roots are exact.
pub fn real_roots(p: &IntPolynomial) -> Vec<(f64, usize)> {
    let q: RatPolynomial = p.map(|c| BigRational::from_integer(c.clone()));
    let mut out = Vec::new();
    for (i, part) in q.squarefree_decomposition().iter().enumerate() {
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        for r in isolate(part) {
            out.push((r, i + 1));
        }
    }
    out.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    out
}

fn isolate(p: &RatPolynomial) -> Vec<f64> {
    let chain = sturm_chain(p);
    let lead = p.leading().unwrap().clone();
    let bound = p
        .coeffs()
        .iter()
        .map(|c| (c / lead.clone()).abs())
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a })
        + BigRational::one();
    let eps = BigRational::new(BigInt::one(), BigInt::one() << 40);
    let two = BigRational::from_integer(2.into());
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let count = sign_changes(&chain, &a) - sign_changes(&chain, &b);
        if count == 0 {
            continue;
        }
        if count == 1 {
            roots.push(snap(p, refine(p, a, b, &eps)));
            continue;
        }
        let mid = (&a + &b) / &two;
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    roots
}

/// Bisection on the sign of a square-free `p` over `(a, b]`, which holds
/// exactly one root.
fn refine(p: &RatPolynomial, mut a: BigRational, mut b: BigRational, eps: &BigRational) -> f64 {
    let two = BigRational::from_integer(2.into());
    let fb = p.eval(&b);
    if fb.is_zero() {
        return b.to_f64().unwrap();
    }
    let sb = fb.is_positive();
    while &b - &a >= *eps {
        let mid = (&a + &b) / &two;
        let fm = p.eval(&mid);
        if fm.is_zero() {
            return mid.to_f64().unwrap();
        }
        if fm.is_positive() == sb {
            b = mid;
        } else {
            a = mid;
        }
    }
    ((a + b) / two).to_f64().unwrap()
}

fn snap(p: &RatPolynomial, v: f64) -> f64 {
    let r = v.round();
    if (v - r).abs() < 1e-6 {
        let rr = BigRational::from_integer(BigInt::from(r as i64));
        if p.eval(&rr).is_zero() {
            return r;
        }
    }
    v
}

fn sturm_chain(p: &RatPolynomial) -> Vec<RatPolynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        chain.push(-&r);
    }
}

fn sign_changes(chain: &[RatPolynomial], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|q| q.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `4.732 4.000 0.000^6`-style rendering, three decimals.
pub fn decimal_spectrum(p: &IntPolynomial) -> String {
    real_roots(p)
        .iter()
        .map(|&(r, m)| {
            let s = format_decimal(r);
            if m == 1 {
                s
            } else {
                format!("{s}^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Three decimals, rounded; never prints `-0.000`.
pub fn format_decimal(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}
