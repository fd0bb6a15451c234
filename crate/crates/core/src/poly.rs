//! Polynomials in the formal symbol q.
//!
//! `IntPolyQ` is the public integer-coefficient type that carries Green
//! polynomials, class sizes and degrees. `QPoly` (rational
//! coefficients) backs intermediate computations where 1/z factors or
//! exact division show up, and the tiny expression parser that the
//! fixture sweep uses to read table entries like
//! `-1/12*(q^2-1)*(q^2+q+1)`.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Everything produced here stays well under degree 2n² = 50; the bound
/// catches runaway arithmetic early.
pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolyQ {
    coeffs: Vec<BigInt>, // ascending powers, trailing coefficient nonzero
}

impl IntPolyQ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        assert!(
            coeffs.len() <= MAX_DEGREE + 1,
            "polynomial degree {} exceeds bound {}",
            coeffs.len() - 1,
            MAX_DEGREE
        );
        IntPolyQ { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// q^k
    pub fn q_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self::new(coeffs)
    }

    /// q^k - 1
    pub fn q_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[k] = BigInt::one();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, q0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc
    }

    pub fn eval_u64(&self, q0: u64) -> BigInt {
        self.eval(&BigInt::from(q0))
    }

    /// P(q^d)
    pub fn subst_q_pow(&self, d: usize) -> IntPolyQ {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d] = c.clone();
        }
        IntPolyQ::new(coeffs)
    }

    pub fn scale(&self, k: &BigInt) -> IntPolyQ {
        IntPolyQ::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, den: &IntPolyQ) -> Option<IntPolyQ> {
        QPoly::from(self.clone())
            .div_exact(&QPoly::from(den.clone()))
            .and_then(|q| q.into_int_poly())
    }

    /// Ascending-power text form, e.g. `1 + q + q^2` or `1 - 2q^3`.
    pub fn to_ascending_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                s.push_str(&mag.to_string());
            }
            if i == 1 {
                s.push('q');
            } else if i > 1 {
                s.push_str(&format!("q^{i}"));
            }
        }
        s
    }
}

impl fmt::Display for IntPolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ascending_string())
    }
}

impl Add for &IntPolyQ {
    type Output = IntPolyQ;
    fn add(self, rhs: &IntPolyQ) -> IntPolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolyQ::new(coeffs)
    }
}

impl Sub for &IntPolyQ {
    type Output = IntPolyQ;
    fn sub(self, rhs: &IntPolyQ) -> IntPolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPolyQ::new(coeffs)
    }
}

impl Mul for &IntPolyQ {
    type Output = IntPolyQ;
    fn mul(self, rhs: &IntPolyQ) -> IntPolyQ {
        if self.is_zero() || rhs.is_zero() {
            return IntPolyQ::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolyQ::new(coeffs)
    }
}

impl Neg for &IntPolyQ {
    type Output = IntPolyQ;
    fn neg(self) -> IntPolyQ {
        IntPolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Ψ_n(q) = ∏_{i=1}^{n} (q^i − 1)
pub fn psi(n: usize) -> IntPolyQ {
    let mut p = IntPolyQ::one();
    for i in 1..=n {
        p = &p * &IntPolyQ::q_pow_minus_one(i);
    }
    p
}

/// Φ_n(q) = (−1)^n Ψ_n(q)
pub fn phi_signed(n: usize) -> IntPolyQ {
    let p = psi(n);
    if n % 2 == 1 {
        -&p
    } else {
        p
    }
}

/// |GL(n,q)| = q^{n(n−1)/2} Ψ_n(q) as a polynomial.
pub fn gl_order_poly(n: usize) -> IntPolyQ {
    &IntPolyQ::q_pow(n * (n - 1) / 2) * &psi(n)
}

// ---------------------------------------------------------------------------
// Rational-coefficient polynomials.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>, // ascending, trailing nonzero
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, k: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::new(coeffs)
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, den: &QPoly) -> Option<QPoly> {
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        if self.coeffs.len() < den.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = den.coeffs.len() - 1;
        let lead = den.coeffs.last().unwrap().clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = &rem[i] / &lead;
            if !c.is_zero() {
                quot[i - dd] = c.clone();
                for (j, d) in den.coeffs.iter().enumerate() {
                    let idx = i - dd + j;
                    let v = &rem[idx] - &c * d;
                    rem[idx] = v;
                }
            }
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(QPoly::new(quot))
        } else {
            None
        }
    }

    pub fn into_int_poly(self) -> Option<IntPolyQ> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        Some(IntPolyQ::new(coeffs))
    }

    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc
    }
}

impl From<IntPolyQ> for QPoly {
    fn from(p: IntPolyQ) -> QPoly {
        QPoly::new(
            p.coeffs
                .into_iter()
                .map(BigRational::from_integer)
                .collect(),
        )
    }
}

// ---------------------------------------------------------------------------
// Expression parser for fixture strings.

/// Parses expressions like `-1/12*(q^2-1)*(q^2+q+1)` or
/// `q^7*(q^3+q^2+q+1)*(q^4+q^3+q^2+q+1)` into a rational-coefficient
/// polynomial. Multiplication must be explicit (`*`); `/` is only
/// supported where the divisor is a constant or divides exactly.
pub fn parse_poly_expr(input: &str) -> Result<QPoly> {
    let tokens: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0usize;
    let p = parse_sum(&tokens, &mut pos)
        .ok_or_else(|| Error::Usage(format!("bad polynomial expression `{input}`")))?;
    if pos != tokens.len() {
        return Err(Error::Usage(format!(
            "trailing garbage in polynomial expression `{input}`"
        )));
    }
    Ok(p)
}

fn parse_sum(t: &[char], pos: &mut usize) -> Option<QPoly> {
    let mut acc = parse_product(t, pos)?;
    while let Some(&op) = t.get(*pos) {
        if op == '+' || op == '-' {
            *pos += 1;
            let rhs = parse_product(t, pos)?;
            acc = if op == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        } else {
            break;
        }
    }
    Some(acc)
}

fn parse_product(t: &[char], pos: &mut usize) -> Option<QPoly> {
    let mut acc = parse_power(t, pos)?;
    while let Some(&op) = t.get(*pos) {
        if op == '*' {
            *pos += 1;
            acc = acc.mul(&parse_power(t, pos)?);
        } else if op == '/' {
            *pos += 1;
            acc = acc.div_exact(&parse_power(t, pos)?)?;
        } else {
            break;
        }
    }
    Some(acc)
}

fn parse_power(t: &[char], pos: &mut usize) -> Option<QPoly> {
    let base = parse_atom(t, pos)?;
    if t.get(*pos) == Some(&'^') {
        *pos += 1;
        let e = parse_uint(t, pos)?;
        Some(base.pow(e))
    } else {
        Some(base)
    }
}

fn parse_atom(t: &[char], pos: &mut usize) -> Option<QPoly> {
    match t.get(*pos)? {
        '-' => {
            *pos += 1;
            Some(parse_power(t, pos)?.neg())
        }
        '(' => {
            *pos += 1;
            let inner = parse_sum(t, pos)?;
            if t.get(*pos) == Some(&')') {
                *pos += 1;
                Some(inner)
            } else {
                None
            }
        }
        'q' => {
            *pos += 1;
            Some(QPoly::new(vec![BigRational::zero(), BigRational::one()]))
        }
        c if c.is_ascii_digit() => {
            let v = parse_uint(t, pos)?;
            Some(QPoly::constant(BigRational::from_integer(BigInt::from(v))))
        }
        _ => None,
    }
}

fn parse_uint(t: &[char], pos: &mut usize) -> Option<u32> {
    let start = *pos;
    while t.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
        *pos += 1;
    }
    if *pos == start {
        None
    } else {
        t[start..*pos].iter().collect::<String>().parse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_class_count_poly() {
        // q^5 - q^2 - q + 1 at q = 2
        let p = IntPolyQ::from_i64(&[1, -1, -1, 0, 0, 1]);
        assert_eq!(p.eval_u64(2), BigInt::from(27));
        assert_eq!(IntPolyQ::zero().eval_u64(17), BigInt::zero());
    }

    #[test]
    fn gl5_order_at_2() {
        assert_eq!(gl_order_poly(5).eval_u64(2), BigInt::from(9999360u64));
    }

    #[test]
    fn div_exact_roundtrip() {
        let a = IntPolyQ::from_i64(&[-1, 0, 0, 1]); // q^3 - 1
        let b = IntPolyQ::from_i64(&[-1, 1]); // q - 1
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, IntPolyQ::from_i64(&[1, 1, 1]));
        assert!(a.div_exact(&IntPolyQ::from_i64(&[1, 1])).is_none());
    }

    #[test]
    fn subst_power() {
        let p = IntPolyQ::from_i64(&[1, 1]); // 1 + q
        assert_eq!(p.subst_q_pow(3), IntPolyQ::from_i64(&[1, 0, 0, 1]));
    }

    #[test]
    fn parse_table_cell() {
        let p = parse_poly_expr("-1/12*(q^2-1)*(q^2+q+1)").unwrap();
        let expect = QPoly::from(IntPolyQ::from_i64(&[-1, -1, 0, 1, 1]))
            .scale(&BigRational::new(BigInt::from(-1), BigInt::from(12)));
        assert_eq!(p, expect);
        let r = parse_poly_expr("1/120").unwrap();
        assert_eq!(
            r,
            QPoly::constant(BigRational::new(BigInt::from(1), BigInt::from(120)))
        );
    }

    #[test]
    fn ascending_display() {
        let p = IntPolyQ::from_i64(&[1, 1, 1]);
        assert_eq!(p.to_ascending_string(), "1 + q + q^2");
        let p2 = IntPolyQ::from_i64(&[1, -2, 0, 3]);
        assert_eq!(p2.to_ascending_string(), "1 - 2q + 3q^3");
    }
}
