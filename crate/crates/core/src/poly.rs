//! Univariate polynomials over the rationals, just enough for the cubics that
//! show up in the Zhu-algebra computations: exact equality, evaluation, products
//! of linear factors and rational root extraction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::rational::Rational;

/// Dense coefficient vector, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monic linear polynomial `x - root`.
    pub fn linear_factor(root: Rational) -> Self {
        Poly::new(vec![-root, Rational::ONE])
    }

    /// `lead * prod (x - r)` over `roots`.
    pub fn from_roots(lead: Rational, roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Poly::constant(lead), |acc, &r| acc * Poly::linear_factor(r))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().copied().unwrap_or(Rational::ZERO)
    }

    pub fn eval(&self, x: Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::ZERO, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, s: Rational) -> Self {
        Poly::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    /// Quotient of division by `x - root`; the remainder is dropped.
    fn deflate(&self, root: Rational) -> Self {
        let n = self.coeffs.len();
        if n <= 1 {
            return Poly::zero();
        }
        let mut out = vec![Rational::ZERO; n - 1];
        let mut carry = Rational::ZERO;
        for i in (1..n).rev() {
            carry = carry * root + self.coeffs[i];
            out[i - 1] = carry;
        }
        Poly::new(out)
    }

    /// Integer coefficients proportional to `self`.
    fn integer_coeffs(&self) -> Vec<i128> {
        let lcm = self.coeffs.iter().fold(1i128, |acc, c| acc.lcm(&c.denom()));
        self.coeffs
            .iter()
            .map(|c| (*c * lcm).to_integer().expect("cleared denominators"))
            .collect()
    }

    /// All distinct rational roots, ascending. The zero polynomial has none by
    /// convention.
    ///
    /// Linear and quadratic factors are solved exactly. For higher degree a
    /// real root is located numerically and snapped to the nearby fractions
    /// allowed by the rational root theorem; candidates are only accepted after
    /// exact evaluation, and the full divisor search runs when snapping fails.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots = Vec::new();
        let mut p = self.clone();
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        while p.coeffs.first().is_some_and(|c| c.is_zero()) {
            roots.push(Rational::ZERO);
            p = Poly::new(p.coeffs[1..].to_vec());
        }
        loop {
            match p.degree().unwrap_or(0) {
                0 => break,
                1 => {
                    roots.push(-p.coeffs[0] / p.coeffs[1]);
                    break;
                }
                2 => {
                    let (c, b, a) = (p.coeffs[0], p.coeffs[1], p.coeffs[2]);
                    if let Some(r) = (b * b - a * c * 4).sqrt() {
                        roots.push((-b + r) / (a * 2));
                        roots.push((-b - r) / (a * 2));
                    }
                    break;
                }
                _ => match p.snapped_root().or_else(|| p.divisor_root()) {
                    Some(r) => {
                        roots.push(r);
                        p = p.deflate(r);
                    }
                    None => break,
                },
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// A root found by bisection in floating point, for odd degree, rounded to
    /// each denominator dividing the leading coefficient.
    fn snapped_root(&self) -> Option<Rational> {
        if self.degree()? % 2 == 0 {
            return None;
        }
        let ints = self.integer_coeffs();
        let f: Vec<f64> = ints.iter().map(|&c| c as f64).collect();
        let eval = |x: f64| f.iter().rev().fold(0.0, |acc, &c| acc * x + c);
        let lead = *f.last()?;
        let bound = 1.0 + f.iter().map(|c| (c / lead).abs()).fold(0.0, f64::max);
        let (mut lo, mut hi) = (-bound, bound);
        let rising = lead > 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (eval(mid) < 0.0) == rising {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let x = 0.5 * (lo + hi);
        divisors(*ints.last()?).into_iter().find_map(|q| {
            let num = (x * q as f64).round();
            if !num.is_finite() || num.abs() > 1e30 {
                return None;
            }
            let r = Rational::new(num as i128, q);
            self.eval(r).is_zero().then_some(r)
        })
    }

    /// A root from the rational root theorem by exhaustive divisor search.
    fn divisor_root(&self) -> Option<Rational> {
        let ints = self.integer_coeffs();
        let a0 = ints[0];
        let an = *ints.last().unwrap();
        divisors(a0).into_iter().find_map(|num| {
            divisors(an).into_iter().find_map(|den| {
                [Rational::new(num, den), Rational::new(-num, den)]
                    .into_iter()
                    .find(|&r| self.eval(r).is_zero())
            })
        })
    }
}

/// Positive divisors of `|n|`, ascending. `n` must be nonzero.
fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    debug_assert!(n != 0);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1i128;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).copied().unwrap_or_default()
                        + rhs.coeffs.get(i).copied().unwrap_or_default()
                })
                .collect(),
        )
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
