//! Exact sums of roots of unity with rational coefficients.
//!
//! Every character value lives in Q(ζ_M) with M = lcm(q^i − 1, 1 ≤ i ≤ n),
//! so ε_s = ζ_M^{M/(q^s−1)} embeds every level of the root tower and the
//! compatibility relation ε_1 = ε_s^{(q^s−1)/(q−1)} holds by construction.
//!
//! A `CycloSum` is a sparse element of the group ring Q[Z/M]. Equality of
//! the algebraic numbers behind two sums is decided by `canonicalize`,
//! which rewrites the sum onto the tensor basis of Q(ζ_M): writing
//! M = ∏ l^a, the exponents t whose residue t mod l^a lies below
//! φ(l^a) = l^{a−1}(l−1) for every prime l form a Q-basis, and a bad
//! residue j ≥ φ(l^a) is eliminated with the relation
//! Σ_{i=0}^{l−1} ζ_{l^a}^{(j mod l^{a−1}) + i·l^{a−1}} = 0.
//! `ModularContext`/`certify_value` give an independent fast check by
//! evaluating both sides at an order-M element of a prime field with
//! p ≡ 1 (mod M).

use crate::error::{Error, Result};
use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

/// lcm(q^i − 1, 1 ≤ i ≤ n): the common root-of-unity order for GL(n,q).
pub fn tower_modulus(q: u64, n: u32) -> u64 {
    let mut m = 1u64;
    for i in 1..=n {
        m = m.lcm(&(q.pow(i) - 1));
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloSum {
    modulus: u64,
    terms: BTreeMap<u64, BigRational>,
}

impl CycloSum {
    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1);
        CycloSum {
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(modulus: u64) -> Self {
        Self::from_rational(modulus, BigRational::one())
    }

    pub fn from_rational(modulus: u64, c: BigRational) -> Self {
        let mut s = Self::zero(modulus);
        s.add_term(0, c);
        s
    }

    pub fn from_int(modulus: u64, c: i64) -> Self {
        Self::from_rational(modulus, BigRational::from_integer(BigInt::from(c)))
    }

    /// ζ_M^t
    pub fn zeta(modulus: u64, t: i64) -> Self {
        let mut s = Self::zero(modulus);
        let t = t.rem_euclid(modulus as i64) as u64;
        s.add_term(t, BigRational::one());
        s
    }

    /// ε_s = ζ_M^{M/(q^s−1)}; requires (q^s − 1) | M.
    pub fn epsilon(modulus: u64, q: u64, s: u32) -> Self {
        let ord = q.pow(s) - 1;
        assert_eq!(modulus % ord, 0, "q^s - 1 must divide the modulus");
        Self::zeta(modulus, (modulus / ord) as i64)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(&t, c)| (t, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when the stored representation has no terms. Use
    /// `is_zero_canonical` to decide algebraic vanishing.
    pub fn is_zero_repr(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, t: u64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let t = t % self.modulus;
        let entry = self.terms.entry(t).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&t);
        }
    }

    fn check_modulus(&self, other: &CycloSum) -> Result<()> {
        if self.modulus != other.modulus {
            Err(Error::ModulusMismatch(self.modulus, other.modulus))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &CycloSum) -> Result<CycloSum> {
        self.check_modulus(other)?;
        let mut out = self.clone();
        for (&t, c) in &other.terms {
            out.add_term(t, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CycloSum) -> Result<CycloSum> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycloSum {
        CycloSum {
            modulus: self.modulus,
            terms: self.terms.iter().map(|(&t, c)| (t, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> CycloSum {
        if k.is_zero() {
            return CycloSum::zero(self.modulus);
        }
        CycloSum {
            modulus: self.modulus,
            terms: self.terms.iter().map(|(&t, c)| (t, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &CycloSum) -> Result<CycloSum> {
        self.check_modulus(other)?;
        let mut out = CycloSum::zero(self.modulus);
        for (&t1, c1) in &self.terms {
            for (&t2, c2) in &other.terms {
                out.add_term((t1 + t2) % self.modulus, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<CycloSum> {
        let mut acc = CycloSum::one(self.modulus);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Complex conjugation: t ↦ (M − t) mod M.
    pub fn conj(&self) -> CycloSum {
        CycloSum {
            modulus: self.modulus,
            terms: self
                .terms
                .iter()
                .map(|(&t, c)| ((self.modulus - t) % self.modulus, c.clone()))
                .collect(),
        }
    }

    /// Rewrite onto the tensor basis of Q(ζ_M). Two sums represent the
    /// same algebraic number iff their canonical forms are equal, and a
    /// sum vanishes iff its canonical form has no terms.
    pub fn canonicalize(&self) -> CycloSum {
        let basis = CycloBasis::new(self.modulus);
        let mut terms = self.terms.clone();
        for comp in &basis.components {
            let mut next: BTreeMap<u64, BigRational> = BTreeMap::new();
            let mut push = |t: u64, c: BigRational| {
                if c.is_zero() {
                    return;
                }
                let e = next.entry(t).or_insert_with(BigRational::zero);
                *e += c;
                if e.is_zero() {
                    next.remove(&t);
                }
            };
            for (t, c) in terms {
                let j = t % comp.prime_pow;
                if j < comp.phi {
                    push(t, c);
                } else {
                    // ζ^j = -Σ_{i<l-1} ζ^{(j mod l^{a-1}) + i·l^{a-1}} in the
                    // l-component; shift the full exponent by multiples of
                    // the CRT unit so the other components stay fixed.
                    let rem = j % comp.sub_pow;
                    for i in 0..comp.prime - 1 {
                        let target = rem + i * comp.sub_pow;
                        let delta =
                            ((target + self.modulus - j) % self.modulus) as u128 * comp.unit as u128;
                        let t2 = ((t as u128 + delta) % self.modulus as u128) as u64;
                        push(t2, -c.clone());
                    }
                }
            }
            terms = next;
        }
        CycloSum {
            modulus: self.modulus,
            terms,
        }
    }

    pub fn is_zero_canonical(&self) -> bool {
        self.canonicalize().terms.is_empty()
    }

    pub fn eq_canonical(&self, other: &CycloSum) -> Result<bool> {
        Ok(self.sub(other)?.is_zero_canonical())
    }

    /// The rational this sum equals, if it is rational (canonical form
    /// supported on exponent 0 only).
    pub fn to_rational(&self) -> Option<BigRational> {
        let c = self.canonicalize();
        match c.terms.len() {
            0 => Some(BigRational::zero()),
            1 => c.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        let r = self.to_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// True when every coefficient of the canonical form is an integer,
    /// i.e. the sum is an algebraic integer exhibited with integral
    /// coordinates.
    pub fn has_integer_coeffs_canonical(&self) -> bool {
        self.canonicalize().terms.values().all(|c| c.is_integer())
    }

    /// Largest absolute numerator over all stored coefficients; used to
    /// size certification bounds.
    pub fn coeff_numerator_bound(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.numer().abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Display for CycloSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&t, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if t == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z^{t}")?;
            }
        }
        Ok(())
    }
}

struct BasisComponent {
    prime: u64,
    prime_pow: u64, // l^a
    sub_pow: u64,   // l^{a-1}
    phi: u64,       // (l-1)·l^{a-1}
    unit: u64,      // CRT unit: 1 mod l^a, 0 mod M/l^a
}

struct CycloBasis {
    components: Vec<BasisComponent>,
}

impl CycloBasis {
    fn new(modulus: u64) -> Self {
        let mut components = Vec::new();
        for (l, a) in factorize(modulus) {
            let la = l.pow(a);
            let rest = modulus / la;
            let inv = mod_inverse(rest % la, la);
            let unit = ((rest as u128 * inv as u128) % modulus as u128) as u64;
            components.push(BasisComponent {
                prime: l,
                prime_pow: la,
                sub_pow: la / l,
                phi: la / l * (l - 1),
                unit,
            });
        }
        CycloBasis { components }
    }
}

/// Canonical rewrite for sums with machine-integer coefficients. Bulk
/// inner products (orthogonality sums over a whole character table) stay
/// in i128 throughout, which is far cheaper than BigRational and exact:
/// the accumulated magnitudes are checked to stay below overflow.
pub struct IntReducer {
    basis: CycloBasis,
    modulus: u64,
}

impl IntReducer {
    pub fn new(modulus: u64) -> IntReducer {
        IntReducer {
            basis: CycloBasis::new(modulus),
            modulus,
        }
    }

    /// Same rewrite as `CycloSum::canonicalize`; the result is empty iff
    /// the sum is zero.
    pub fn reduce(&self, terms: &HashMap<u64, i128>) -> BTreeMap<u64, i128> {
        let mut cur: BTreeMap<u64, i128> = terms
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(&t, &c)| (t, c))
            .collect();
        for comp in &self.basis.components {
            let mut next: BTreeMap<u64, i128> = BTreeMap::new();
            let mut push = |t: u64, c: i128| {
                if c == 0 {
                    return;
                }
                let e = next.entry(t).or_insert(0);
                *e = e.checked_add(c).expect("coefficient overflow in reduce");
                if *e == 0 {
                    next.remove(&t);
                }
            };
            for (t, c) in cur {
                let j = t % comp.prime_pow;
                if j < comp.phi {
                    push(t, c);
                } else {
                    let rem = j % comp.sub_pow;
                    for i in 0..comp.prime - 1 {
                        let target = rem + i * comp.sub_pow;
                        let delta = ((target + self.modulus - j) % self.modulus) as u128
                            * comp.unit as u128;
                        let t2 = ((t as u128 + delta) % self.modulus as u128) as u64;
                        push(t2, -c);
                    }
                }
            }
            cur = next;
        }
        cur
    }
}

/// Prime factorization by trial division (inputs stay below 2^40 here).
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut a = 0;
            while n % d == 0 {
                n /= d;
                a += 1;
            }
            out.push((d, a));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid; a and m coprime by construction
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let qt = old_r / r;
        (old_r, r) = (r, old_r - qt * r);
        (old_s, s) = (s, old_s - qt * s);
    }
    assert_eq!(old_r, 1, "not invertible");
    old_s.rem_euclid(m as i128) as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A prime field with a designated element of exact multiplicative
/// order M; cyclotomic sums evaluate to residues here.
#[derive(Debug, Clone)]
pub struct ModularContext {
    pub prime: u64,
    pub zeta_image: u64,
    pub modulus: u64,
}

impl ModularContext {
    /// The `index`-th usable prime p = kM + 1 (k increasing from 1).
    pub fn new(modulus: u64, index: usize) -> Result<Self> {
        let m_factors: Vec<u64> = factorize(modulus).into_iter().map(|(l, _)| l).collect();
        let mut found = 0usize;
        let mut k = 1u64;
        loop {
            let p = match k.checked_mul(modulus).and_then(|v| v.checked_add(1)) {
                Some(p) => p,
                None => return Err(Error::NoPrime(modulus)),
            };
            if is_prime_u64(p) {
                if found == index {
                    let zeta_image = Self::order_m_element(p, modulus, &m_factors)?;
                    return Ok(ModularContext {
                        prime: p,
                        zeta_image,
                        modulus,
                    });
                }
                found += 1;
            }
            k += 1;
            if k > 1_000_000 {
                return Err(Error::NoPrime(modulus));
            }
        }
    }

    fn order_m_element(p: u64, m: u64, m_factors: &[u64]) -> Result<u64> {
        let cofactor = (p - 1) / m;
        for g in 2..p {
            let z = pow_mod(g, cofactor, p);
            if z == 1 {
                continue;
            }
            if m_factors.iter().all(|&l| pow_mod(z, m / l, p) != 1) {
                return Ok(z);
            }
        }
        Err(Error::NoPrime(m))
    }

    /// Σ c_t · zeta_image^t mod p, with rational coefficients mapped via
    /// modular inverse of the denominator.
    pub fn eval(&self, x: &CycloSum) -> Result<u64> {
        if x.modulus != self.modulus {
            return Err(Error::ModulusMismatch(x.modulus, self.modulus));
        }
        let p = self.prime;
        let pb = BigInt::from(p);
        let mut acc = 0u64;
        for (&t, c) in &x.terms {
            let num = c.numer().mod_floor(&pb).to_u64().unwrap();
            let den = c.denom().mod_floor(&pb).to_u64().unwrap();
            if den == 0 {
                return Err(Error::Invariant(format!(
                    "denominator divisible by certification prime {p}"
                )));
            }
            let coeff = mul_mod(num, pow_mod(den, p - 2, p), p);
            acc = (acc + mul_mod(coeff, pow_mod(self.zeta_image, t, p), p)) % p;
        }
        Ok(acc)
    }
}

/// Modular equality check of x and claim using enough independent primes
/// p ≡ 1 (mod M) to cover `bound`, an upper bound on the absolute
/// numerators appearing in x − claim. Agreement across the primes is a
/// strong probabilistic certificate; `CycloSum::eq_canonical` is the
/// unconditional route and the two are cross-checked in the test suite.
pub fn certify_value(x: &CycloSum, claim: &CycloSum, bound: &BigInt) -> Result<bool> {
    let diff = x.sub(claim)?;
    if diff.is_zero_repr() {
        return Ok(true);
    }
    let p_min = BigInt::from(diff.modulus + 1);
    let mut needed = 1usize;
    let mut cover = p_min.clone();
    while &cover <= bound {
        cover *= &p_min;
        needed += 1;
    }
    for i in 0..needed {
        let ctx = ModularContext::new(diff.modulus, i)?;
        if ctx.eval(&diff)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

// JSON form: {"modulus": M, "terms": [{"exp": t, "num": a, "den": b}, ...]},
// terms sorted by exp, coefficients as exact (arbitrary-precision) numbers.

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: u64,
    num: serde_json::Number,
    den: serde_json::Number,
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    modulus: u64,
    terms: Vec<TermJson>,
}

impl Serialize for CycloSum {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(&t, c)| {
                Ok(TermJson {
                    exp: t,
                    num: serde_json::Number::from_str(&c.numer().to_string())
                        .map_err(serde::ser::Error::custom)?,
                    den: serde_json::Number::from_str(&c.denom().to_string())
                        .map_err(serde::ser::Error::custom)?,
                })
            })
            .collect::<std::result::Result<Vec<_>, S::Error>>()?;
        CycloJson {
            modulus: self.modulus,
            terms,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CycloSum {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = CycloJson::deserialize(de)?;
        let mut out = CycloSum::zero(raw.modulus);
        for term in raw.terms {
            let num = BigInt::from_str(&raw_number_str(&term.num)).map_err(D::Error::custom)?;
            let den = BigInt::from_str(&raw_number_str(&term.den)).map_err(D::Error::custom)?;
            if den.sign() != Sign::Plus {
                return Err(D::Error::custom("denominator must be positive"));
            }
            out.add_term(term.exp, BigRational::new(num, den));
        }
        Ok(out)
    }
}

fn raw_number_str(n: &serde_json::Number) -> String {
    n.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tower_moduli() {
        assert_eq!(tower_modulus(2, 5), 3255);
        assert_eq!(tower_modulus(3, 5), 125840);
        assert_eq!(tower_modulus(7, 5), 383176800);
    }

    #[test]
    fn third_roots_sum_to_zero() {
        let m = 3255;
        let w = CycloSum::zeta(m, (m / 3) as i64);
        let s = CycloSum::one(m)
            .add(&w)
            .unwrap()
            .add(&w.pow(2).unwrap())
            .unwrap();
        assert!(s.is_zero_canonical());
        assert!(certify_value(&s, &CycloSum::zero(m), &BigInt::from(10)).unwrap());
    }

    #[test]
    fn full_orbit_sums_vanish() {
        // Σ_{t=0}^{r-1} ζ_r^t = 0 for each prime r | M, embedded in ζ_M.
        let m = tower_modulus(3, 5);
        for (r, _) in factorize(m) {
            let mut s = CycloSum::zero(m);
            for t in 0..r {
                s = s.add(&CycloSum::zeta(m, (t * (m / r)) as i64)).unwrap();
            }
            assert!(s.is_zero_canonical(), "prime {r}");
        }
    }

    #[test]
    fn epsilon_tower_identity() {
        for q in [2u64, 3, 5] {
            let m = tower_modulus(q, 5);
            let e1 = CycloSum::epsilon(m, q, 1);
            for s in 2..=5u32 {
                let es = CycloSum::epsilon(m, q, s);
                let e = ((q.pow(s) - 1) / (q - 1)) as u32;
                assert!(es.pow(e).unwrap().eq_canonical(&e1).unwrap(), "q={q} s={s}");
            }
        }
    }

    #[test]
    fn binomial_square() {
        // (ζ^a + ζ^{aq})² = ζ^{2a} + 2ζ^{a(1+q)} + ζ^{2aq}
        let m = 3255i64;
        let (a, q) = (7i64, 2i64);
        let x = CycloSum::zeta(m as u64, a)
            .add(&CycloSum::zeta(m as u64, a * q))
            .unwrap();
        let lhs = x.pow(2).unwrap();
        let rhs = CycloSum::zeta(m as u64, 2 * a)
            .add(&CycloSum::zeta(m as u64, a * (1 + q)).scale(&BigRational::from_integer(2.into())))
            .unwrap()
            .add(&CycloSum::zeta(m as u64, 2 * a * q))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn norm_constant_term() {
        // x·conj(x) for x with distinct unit terms has constant term = #terms
        let m = 3255u64;
        let x = CycloSum::zeta(m, 5)
            .add(&CycloSum::zeta(m, 19))
            .unwrap()
            .add(&CycloSum::zeta(m, 100))
            .unwrap();
        let n = x.mul(&x.conj()).unwrap();
        assert_eq!(
            n.terms.get(&0).cloned().unwrap(),
            BigRational::from_integer(3.into())
        );
    }

    #[test]
    fn modular_context_orders() {
        for m in [3255u64, 125840] {
            let ctx = ModularContext::new(m, 0).unwrap();
            assert_eq!((ctx.prime - 1) % m, 0);
            assert_eq!(pow_mod(ctx.zeta_image, m, ctx.prime), 1);
            for (l, _) in factorize(m) {
                assert_ne!(pow_mod(ctx.zeta_image, m / l, ctx.prime), 1);
            }
        }
    }

    #[test]
    fn canonical_agrees_with_modular() {
        let m = 3255u64;
        let x = CycloSum::zeta(m, 3)
            .add(&CycloSum::zeta(m, 1085))
            .unwrap()
            .mul(&CycloSum::zeta(m, 7).sub(&CycloSum::one(m)).unwrap())
            .unwrap();
        let c = x.canonicalize();
        let ctx = ModularContext::new(m, 0).unwrap();
        assert_eq!(ctx.eval(&x).unwrap(), ctx.eval(&c).unwrap());
        assert!(x.eq_canonical(&c).unwrap());
    }

    #[test]
    fn json_roundtrip() {
        let m = 3255u64;
        let x = CycloSum::zeta(m, 12)
            .scale(&BigRational::new(BigInt::from(-7), BigInt::from(3)))
            .add(&CycloSum::one(m))
            .unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.contains("\"modulus\":3255"));
        let y: CycloSum = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    proptest! {
        #[test]
        fn conj_is_ring_automorphism(
            e1 in 0i64..200, e2 in 0i64..200, c1 in -5i64..6, c2 in -5i64..6
        ) {
            let m = 3255u64;
            let x = CycloSum::zeta(m, e1).scale(&BigRational::from_integer(c1.into()));
            let y = CycloSum::zeta(m, e2).scale(&BigRational::from_integer(c2.into()));
            let xy = x.mul(&y).unwrap();
            prop_assert_eq!(xy.conj(), x.conj().mul(&y.conj()).unwrap());
            prop_assert_eq!(x.conj().conj(), x.clone());
            let sum = x.add(&y).unwrap();
            prop_assert_eq!(sum.conj(), x.conj().add(&y.conj()).unwrap());
        }

        #[test]
        fn int_reducer_matches_canonicalize(terms in proptest::collection::vec((0u64..3255, -50i128..50), 1..8)) {
            let m = 3255u64;
            let mut map: HashMap<u64, i128> = HashMap::new();
            let mut x = CycloSum::zero(m);
            for (e, c) in terms {
                *map.entry(e).or_insert(0) += c;
                x = x
                    .add(&CycloSum::zeta(m, e as i64).scale(&BigRational::from_integer(BigInt::from(c))))
                    .unwrap();
            }
            let red = IntReducer::new(m).reduce(&map);
            let canon = x.canonicalize();
            let as_big: BTreeMap<u64, BigRational> = red
                .into_iter()
                .map(|(t, c)| (t, BigRational::from_integer(BigInt::from(c))))
                .collect();
            prop_assert_eq!(as_big, canon.terms);
        }

        #[test]
        fn canonicalize_is_idempotent_and_faithful(exps in proptest::collection::vec(0u64..3255, 1..6)) {
            let m = 3255u64;
            let mut x = CycloSum::zero(m);
            for e in exps {
                x = x.add(&CycloSum::zeta(m, e as i64)).unwrap();
            }
            let c = x.canonicalize();
            prop_assert_eq!(c.canonicalize(), c.clone());
            let ctx = ModularContext::new(m, 0).unwrap();
            prop_assert_eq!(ctx.eval(&x).unwrap(), ctx.eval(&c).unwrap());
        }
    }
}
