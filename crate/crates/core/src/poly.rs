//! Exact integer polynomials: one-variable polynomials and the falling-factorial basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Polynomial with big-integer coefficients, `coeffs[i]` on `q^i`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        QPolynomial::new(coeffs)
    }

    /// `1 + q + ... + q^(k-1)`.
    pub fn q_integer(k: usize) -> Self {
        QPolynomial::new(vec![BigInt::one(); k])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `q^d · p(1/q)`; requires `d >= degree`.
    pub fn reverse(&self, d: usize) -> Self {
        assert!(self.degree().map_or(true, |deg| deg <= d));
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        QPolynomial::new(coeffs)
    }

    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QPolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division; errors if the remainder is nonzero or a quotient
    /// coefficient is not integral.
    pub fn div_exact(&self, d: &QPolynomial) -> Result<QPolynomial> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::InexactDivision("division by zero polynomial".into()))?;
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok(QPolynomial::zero());
        };
        if nd < dd {
            return Err(Error::InexactDivision(format!("{self} / {d}")));
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd];
            if c.is_zero() {
                continue;
            }
            let (qc, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("{self} / {d}")));
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("{self} / {d}")));
        }
        Ok(QPolynomial::new(quot))
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    /// Formats with the given variable name, e.g. `1+3q+2q^2`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let a = c.abs();
            if i == 0 || !a.is_one() {
                out.push_str(&a.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, o: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPolynomial::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, o: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPolynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, o: &QPolynomial) -> QPolynomial {
        if self.is_zero() || o.is_zero() {
            return QPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPolynomial::new(c)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $f(self, o: QPolynomial) -> QPolynomial {
                (&self).$f(&o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// `k(k-1)...(k-j+1)`.
pub fn falling_factorial(k: &BigInt, j: usize) -> BigInt {
    (0..j).fold(BigInt::one(), |acc, i| acc * (k - BigInt::from(i)))
}

/// Polynomial `Σ a_j (x)_j` stored by its falling-factorial coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FallingPolynomial {
    coeffs: Vec<BigInt>,
}

impl FallingPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FallingPolynomial { coeffs }
    }

    /// Coefficient `a_j` on `(x)_j`.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, k: u64) -> BigInt {
        let k = BigInt::from(k);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| a * falling_factorial(&k, j))
            .sum()
    }

    /// Expansion in powers of `x`.
    pub fn standard(&self) -> QPolynomial {
        let mut total = QPolynomial::zero();
        let mut basis = QPolynomial::one();
        for (j, a) in self.coeffs.iter().enumerate() {
            if j > 0 {
                basis = &basis * &QPolynomial::new(vec![BigInt::from(-(j as i64 - 1)), BigInt::one()]);
            }
            total = &total + &basis.scale(a);
        }
        total
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * i)
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |a, i| a * (n - i) / (i + 1))
}

/// `(2n-1)!! = 1·3·5···(2n-1)`, with `(-1)!! = 1`.
pub fn double_factorial_odd(n: i64) -> BigInt {
    if n <= 0 {
        return BigInt::one();
    }
    (1..=n).fold(BigInt::one(), |a, i| a * (2 * i - 1))
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = QPolynomial::from_i64(&[1, 1]);
        let b = QPolynomial::from_i64(&[1, 2]);
        let p = &a * &b;
        assert_eq!(p, QPolynomial::from_i64(&[1, 3, 2]));
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(p.div_exact(&QPolynomial::from_i64(&[1, 0, 1])).is_err());
        assert!(QPolynomial::from_i64(&[1, 3]).div_exact(&QPolynomial::from_i64(&[0, 2])).is_err());
        assert_eq!(p.to_string(), "1+3q+2q^2");
        assert_eq!(QPolynomial::from_i64(&[0, -1, 0, 1]).display_in("t"), "-t+t^3");
        assert_eq!(QPolynomial::from_i64(&[1, 1]).reverse(3), QPolynomial::from_i64(&[0, 0, 1, 1]));
        assert_eq!((&a - &a), QPolynomial::zero());
    }

    #[test]
    fn falling_basis() {
        // 3-tournament: a = (0, 1, 2) gives 2x^2 - x
        let p = FallingPolynomial::new(vec![0.into(), 1.into(), 2.into()]);
        assert_eq!(p.standard(), QPolynomial::from_i64(&[0, -1, 2]));
        assert_eq!(p.eval(2), BigInt::from(6));
        for k in 0..6 {
            assert_eq!(p.standard().eval_i64(k as i64), p.eval(k));
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(catalan(5), BigInt::from(42));
        assert_eq!(double_factorial_odd(3), BigInt::from(15));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
