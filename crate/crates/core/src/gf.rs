//! Small finite fields GF(p^k), compatible primitive-element towers, and
//! dense matrices over them.
//!
//! Fields are built once as exp/log tables over a generator found by an
//! explicit order test, so multiplication is exponent arithmetic and
//! addition is one table walk in the polynomial encoding. A
//! `FieldTower` carries GF(q^s) for s = 1..=n with designated primitive
//! elements ω_s satisfying ω_1 = ω_s^{(q^s−1)/(q−1)}, which is the
//! compatibility every root-of-unity exponent in the character formulas
//! relies on.

use crate::cyclo::factorize;
use crate::error::{Error, Result};

/// q = p^m with p prime, or an error.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let f = factorize(q);
    if f.len() == 1 {
        Ok(f[0])
    } else {
        Err(Error::NotPrimePower(q))
    }
}

/// GF(p^dim) with elements coded as 0 (zero) or 1 + log_g(x) for a fixed
/// generator g of the multiplicative group.
pub struct SmallField {
    p: u64,
    dim: u32,
    order: u64,
    exp: Vec<u64>, // exp[i] = base-p polynomial encoding of g^i
    log: Vec<u32>, // log[encoding] = i for nonzero encodings
}

pub type Elt = u32;

impl SmallField {
    pub fn new(p: u64, dim: u32) -> SmallField {
        assert!(dim >= 1);
        let order = p.checked_pow(dim).expect("field too large");
        assert!(order <= 1 << 21, "field too large for table construction");
        if dim == 1 {
            return Self::prime_field(p);
        }
        let modulus = find_irreducible(p, dim);
        let gen = find_primitive(p, dim, &modulus);
        let mut exp = Vec::with_capacity(order as usize - 1);
        let mut log = vec![u32::MAX; order as usize];
        let mut cur = vec![0u64; dim as usize];
        cur[0] = 1;
        for i in 0..order - 1 {
            let enc = encode(p, &cur);
            debug_assert_eq!(log[enc as usize], u32::MAX, "generator is not primitive");
            exp.push(enc);
            log[enc as usize] = i as u32;
            cur = poly_mul_mod(p, &cur, &gen, &modulus);
        }
        assert_eq!(encode(p, &cur), 1, "generator order check failed");
        SmallField { p, dim, order, exp, log }
    }

    fn prime_field(p: u64) -> SmallField {
        assert!(crate::cyclo::is_prime_u64(p), "{p} is not prime");
        let g = primitive_root(p);
        let mut exp = Vec::with_capacity(p as usize - 1);
        let mut log = vec![u32::MAX; p as usize];
        let mut cur = 1u64;
        for i in 0..p - 1 {
            exp.push(cur);
            log[cur as usize] = i as u32;
            cur = cur * g % p;
        }
        SmallField { p, dim: 1, order: p, exp, log }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn char_p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub const ZERO: Elt = 0;

    pub fn one(&self) -> Elt {
        1
    }

    /// g^e for the table generator g.
    pub fn from_log(&self, e: i64) -> Elt {
        let m = (self.order - 1) as i64;
        (e.rem_euclid(m) + 1) as Elt
    }

    pub fn log(&self, a: Elt) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some((a - 1) as u64)
        }
    }

    /// The prime-field element r·1.
    pub fn from_prime(&self, r: u64) -> Elt {
        let r = r % self.p;
        if r == 0 {
            0
        } else {
            self.log[r as usize] + 1
        }
    }

    /// Inverse of `from_prime` for prime-field elements.
    pub fn to_prime(&self, a: Elt) -> Option<u64> {
        if a == 0 {
            return Some(0);
        }
        let enc = self.exp[(a - 1) as usize];
        if enc < self.p {
            Some(enc)
        } else {
            None
        }
    }

    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let enc = self.enc_add(self.exp[(a - 1) as usize], self.exp[(b - 1) as usize]);
        if enc == 0 {
            0
        } else {
            self.log[enc as usize] + 1
        }
    }

    fn enc_add(&self, mut x: u64, mut y: u64) -> u64 {
        if self.p == 2 {
            return x ^ y;
        }
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.dim {
            out += (x % self.p + y % self.p) % self.p * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Elt) -> Elt {
        if a == 0 || self.p == 2 {
            return a;
        }
        // -1 = g^{(order-1)/2}
        let half = (self.order - 1) / 2;
        self.mul(a, (half + 1) as Elt)
    }

    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if a == 0 || b == 0 {
            return 0;
        }
        (((a as u64 - 1) + (b as u64 - 1)) % (self.order - 1)) as Elt + 1
    }

    pub fn inv(&self, a: Elt) -> Elt {
        assert_ne!(a, 0, "division by zero");
        let m = self.order - 1;
        ((m - (a as u64 - 1)) % m) as Elt + 1
    }

    pub fn pow(&self, a: Elt, e: i64) -> Elt {
        if a == 0 {
            assert!(e > 0, "0^e needs e > 0");
            return 0;
        }
        let m = (self.order - 1) as i64;
        let e = ((a as i64 - 1) * (e % m)).rem_euclid(m);
        (e + 1) as Elt
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        0..self.order as Elt
    }
}

fn encode(p: u64, poly: &[u64]) -> u64 {
    let mut out = 0u64;
    for &c in poly.iter().rev() {
        out = out * p + c;
    }
    out
}

fn decode(p: u64, mut enc: u64, dim: u32) -> Vec<u64> {
    let mut out = vec![0u64; dim as usize];
    for c in out.iter_mut() {
        *c = enc % p;
        enc /= p;
    }
    out
}

// Polynomial helpers over GF(p), coefficient vectors in ascending order.

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let c = r.last().copied().unwrap() * lead_inv % p;
        let shift = r.len() - 1 - dm;
        for (j, &mc) in m.iter().enumerate() {
            let idx = shift + j;
            r[idx] = (r[idx] + p - c * mc % p) % p;
        }
        poly_trim(&mut r);
    }
    r
}

/// a·b mod m, result padded/truncated to dim coefficients of m's degree.
fn poly_mul_mod(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r = poly_rem(p, &poly_mul(p, a, b), m);
    r.resize(m.len() - 1, 0);
    r
}

fn poly_pow_mod(p: u64, a: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let dim = m.len() - 1;
    let mut acc = vec![0u64; dim];
    acc[0] = 1;
    let mut base = a.to_vec();
    base.resize(dim, 0);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(p, &acc, &base, m);
        }
        base = poly_mul_mod(p, &base, &base, m);
        e >>= 1;
    }
    acc
}

fn poly_gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(p, &a, &b);
        a = b;
        b = r;
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    crate::cyclo::pow_mod(a, p - 2, p)
}

/// Monic irreducible of the given degree over GF(p), found by scanning
/// lower-coefficient encodings and testing with x^{p^d} ≡ x plus the
/// proper-subfield gcd conditions.
fn find_irreducible(p: u64, dim: u32) -> Vec<u64> {
    let x = vec![0u64, 1];
    let count = p.pow(dim);
    for enc in 0..count {
        let mut f = decode(p, enc, dim);
        if f[0] == 0 {
            continue;
        }
        f.push(1); // monic
        // x^{p^dim} == x mod f
        let mut xp = x.clone();
        xp.resize(dim as usize, 0);
        let mut distinct = true;
        for i in 1..=dim {
            xp = poly_pow_mod(p, &xp, p, &f);
            if i < dim && dim % i == 0 {
                // no roots in the degree-i subfield: gcd(x^{p^i} - x, f) = 1
                let mut diff = xp.clone();
                diff.resize(dim as usize, 0);
                diff[1] = (diff[1] + p - 1) % p;
                let g = poly_gcd(p, &diff, &f);
                if g.len() != 1 {
                    distinct = false;
                    break;
                }
            }
        }
        if !distinct {
            continue;
        }
        let mut target = vec![0u64; dim as usize];
        target[1] = 1;
        if xp == target {
            return f;
        }
    }
    unreachable!("no irreducible of degree {dim} over GF({p})");
}

/// Element of multiplicative order p^dim − 1, as a polynomial mod the
/// modulus.
fn find_primitive(p: u64, dim: u32, modulus: &[u64]) -> Vec<u64> {
    let order = p.pow(dim) - 1;
    let primes: Vec<u64> = factorize(order).into_iter().map(|(l, _)| l).collect();
    let count = p.pow(dim);
    for enc in 2..count {
        let cand = decode(p, enc, dim);
        let full = poly_pow_mod(p, &cand, order, modulus);
        if encode(p, &full) != 1 {
            continue;
        }
        if primes
            .iter()
            .all(|&l| encode(p, &poly_pow_mod(p, &cand, order / l, modulus)) != 1)
        {
            return cand;
        }
    }
    unreachable!("no primitive element found");
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let primes: Vec<u64> = factorize(p - 1).into_iter().map(|(l, _)| l).collect();
    for g in 2..p {
        if primes
            .iter()
            .all(|&l| crate::cyclo::pow_mod(g, (p - 1) / l, p) != 1)
        {
            return g;
        }
    }
    unreachable!("no primitive root mod {p}");
}

/// GF(q^s) for 1 ≤ s ≤ n with compatible designated primitive elements:
/// ω_1 = ω_s^{(q^s−1)/(q−1)} as subfield elements, and the map
/// ω_1^j ↦ ω_s^{j(q^s−1)/(q−1)} is a field embedding.
pub struct FieldTower {
    q: u64,
    levels: Vec<Level>,
}

struct Level {
    field: SmallField,
    omega_log: u64, // ω_s = g^{omega_log} in the level's table generator
}

impl FieldTower {
    pub fn new(q: u64, n: u32) -> Result<FieldTower> {
        let (p, m) = prime_power(q)?;
        let mut levels: Vec<Level> = Vec::new();
        for s in 1..=n {
            let field = SmallField::new(p, m * s);
            let omega_log = if s == 1 {
                1
            } else {
                Self::compatible_omega_log(q, &levels[0], &field, s)
            };
            levels.push(Level { field, omega_log });
        }
        let tower = FieldTower { q, levels };
        tower.check_compatibility()?;
        Ok(tower)
    }

    /// Exponent e with gcd(e, q^s−1) = 1 such that (g^e)^{(q^s−1)/(q−1)}
    /// is a root of the minimal polynomial of ω_1 over GF(p), making the
    /// tower embedding additive.
    fn compatible_omega_log(q: u64, base: &Level, field: &SmallField, s: u32) -> u64 {
        let qs1 = field.order() - 1;
        let e_s = qs1 / (q - 1);
        let minpoly = minimal_poly_over_prime(&base.field, base.field.from_log(base.omega_log as i64));
        let u = field.from_log(e_s as i64); // order q-1 element of the subfield
        for c in 0..q - 1 {
            if num::Integer::gcd(&c, &(q - 1)) != 1 && q > 2 {
                continue;
            }
            let cand = field.pow(u, c as i64);
            if eval_prime_poly(field, &minpoly, cand) == 0 {
                // lift c to an exponent coprime to q^s - 1
                let mut e = c;
                loop {
                    if e > 0 && num::Integer::gcd(&e, &qs1) == 1 {
                        return e;
                    }
                    e += q - 1;
                    assert!(e < qs1 * 2, "no coprime lift found");
                }
            }
        }
        unreachable!("no compatible primitive element at level {s}");
    }

    fn check_compatibility(&self) -> Result<()> {
        let q = self.q;
        let f1 = &self.levels[0].field;
        let w1 = f1.from_log(self.levels[0].omega_log as i64);
        let minpoly = minimal_poly_over_prime(f1, w1);
        for lv in &self.levels[1..] {
            let e_s = (lv.field.order() - 1) / (q - 1);
            let ws_to_e = lv.field.pow(
                lv.field.from_log(lv.omega_log as i64),
                e_s as i64,
            );
            if eval_prime_poly(&lv.field, &minpoly, ws_to_e) != 0 {
                return Err(Error::Invariant(
                    "field tower compatibility failed".to_string(),
                ));
            }
        }
        Ok(())
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn max_level(&self) -> u32 {
        self.levels.len() as u32
    }

    pub fn field(&self, s: u32) -> &SmallField {
        &self.levels[(s - 1) as usize].field
    }

    /// ω_s^a in the level-s field.
    pub fn omega_pow(&self, s: u32, a: i64) -> Elt {
        let lv = &self.levels[(s - 1) as usize];
        let m = (lv.field.order() - 1) as i64;
        lv.field
            .from_log((lv.omega_log as i64 % m) * (a.rem_euclid(m)) % m)
    }

    /// The exponent j with x = ω_1^j when x lies in the GF(q) subfield
    /// of level s; `None` for zero, error if x is outside the subfield.
    pub fn subfield_log(&self, s: u32, x: Elt) -> Result<Option<u64>> {
        if x == 0 {
            return Ok(None);
        }
        let q = self.q;
        let e_s = (self.field(s).order() - 1) / (q - 1);
        for j in 0..q - 1 {
            if self.omega_pow(s, (j * e_s) as i64) == x {
                return Ok(Some(j));
            }
        }
        Err(Error::Invariant(
            "element not in the base subfield".to_string(),
        ))
    }

    /// ω_1^j as an element of the level-s field (subfield embedding).
    pub fn embed_base(&self, s: u32, j: u64) -> Elt {
        let e_s = (self.field(s).order() - 1) / (self.q - 1);
        self.omega_pow(s, (j % (self.q - 1)) as i64 * e_s as i64)
    }
}

/// ∏_j (t − x^{p^j}) over the distinct Frobenius conjugates of x;
/// coefficients are prime-field residues.
pub fn minimal_poly_over_prime(f: &SmallField, x: Elt) -> Vec<u64> {
    let p = f.char_p();
    let mut conjugates = vec![x];
    let mut cur = f.pow(x, p as i64);
    while cur != x {
        conjugates.push(cur);
        cur = f.pow(cur, p as i64);
    }
    // multiply out (t - c) factors with coefficients in the field
    let mut coeffs: Vec<Elt> = vec![f.one()];
    for c in conjugates {
        let mut next = vec![SmallField::ZERO; coeffs.len() + 1];
        for (i, &a) in coeffs.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], a);
            next[i] = f.sub(next[i], f.mul(a, c));
        }
        coeffs = next;
    }
    coeffs
        .into_iter()
        .map(|c| f.to_prime(c).expect("minimal polynomial not over prime field"))
        .collect()
}

fn eval_prime_poly(f: &SmallField, coeffs: &[u64], x: Elt) -> Elt {
    let mut acc = SmallField::ZERO;
    for &c in coeffs.iter().rev() {
        acc = f.add(f.mul(acc, x), f.from_prime(c));
    }
    acc
}

/// Dense square matrix over a small field, entries in element codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<Elt>, // row-major
}

impl Mat {
    pub fn zero(n: usize) -> Mat {
        Mat { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize, f: &SmallField) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m[(i, i)] = f.one();
        }
        m
    }

    pub fn mul(&self, rhs: &Mat, f: &SmallField) -> Mat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self[(i, k)];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(x, rhs[(k, j)]));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat, f: &SmallField) -> Mat {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (o, &r) in out.a.iter_mut().zip(&rhs.a) {
            *o = f.add(*o, r);
        }
        out
    }

    pub fn scale(&self, c: Elt, f: &SmallField) -> Mat {
        let mut out = self.clone();
        for o in out.a.iter_mut() {
            *o = f.mul(*o, c);
        }
        out
    }

    pub fn pow(&self, e: u32, f: &SmallField) -> Mat {
        let mut acc = Mat::identity(self.n, f);
        for _ in 0..e {
            acc = acc.mul(self, f);
        }
        acc
    }

    pub fn rank(&self, f: &SmallField) -> usize {
        let n = self.n;
        let mut m = self.clone();
        let mut rank = 0usize;
        for col in 0..n {
            let pivot = (rank..n).find(|&r| m[(r, col)] != 0);
            let Some(pr) = pivot else { continue };
            for j in 0..n {
                let t = m[(rank, j)];
                m[(rank, j)] = m[(pr, j)];
                m[(pr, j)] = t;
            }
            let inv = f.inv(m[(rank, col)]);
            for j in 0..n {
                m[(rank, j)] = f.mul(m[(rank, j)], inv);
            }
            for r in 0..n {
                if r != rank && m[(r, col)] != 0 {
                    let c = m[(r, col)];
                    for j in 0..n {
                        m[(r, j)] = f.sub(m[(r, j)], f.mul(c, m[(rank, j)]));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// P(A) for a polynomial with field-element coefficients (ascending).
    pub fn apply_poly(&self, coeffs: &[Elt], f: &SmallField) -> Mat {
        let mut acc = Mat::zero(self.n);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self, f);
            if c != 0 {
                for i in 0..self.n {
                    acc[(i, i)] = f.add(acc[(i, i)], c);
                }
            }
        }
        acc
    }

    /// Block-diagonal concatenation.
    pub fn direct_sum(&self, rhs: &Mat) -> Mat {
        let n = self.n + rhs.n;
        let mut out = Mat::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..rhs.n {
            for j in 0..rhs.n {
                out[(self.n + i, self.n + j)] = rhs[(i, j)];
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Elt;
    fn index(&self, (i, j): (usize, usize)) -> &Elt {
        &self.a[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Elt {
        &mut self.a[i * self.n + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(8).unwrap(), (2, 3));
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(7).unwrap(), (7, 1));
        assert!(prime_power(6).is_err());
        assert!(prime_power(1).is_err());
    }

    fn check_field_axioms(f: &SmallField) {
        let q = f.order();
        assert!(q <= 16, "axiom sweep only for tiny fields");
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in f.elements() {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c)),
                        "distributivity"
                    );
                }
            }
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), f.one());
            }
        }
    }

    #[test]
    fn field_axioms_small() {
        for (p, d) in [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (13, 1)] {
            check_field_axioms(&SmallField::new(p, d));
        }
    }

    #[test]
    fn tower_compatibility() {
        for q in [2u64, 3, 4, 5, 7, 9] {
            let n = if q <= 4 { 5 } else { 3 };
            let t = FieldTower::new(q, n).unwrap();
            for s in 2..=n {
                let e_s = (t.field(s).order() - 1) / (q - 1);
                // multiplicative compatibility inside level s
                assert_eq!(
                    t.omega_pow(s, e_s as i64),
                    t.embed_base(s, 1),
                    "q={q} s={s}"
                );
            }
        }
    }

    #[test]
    fn tower_embedding_is_additive() {
        for q in [3u64, 4, 5, 9] {
            let t = FieldTower::new(q, 2).unwrap();
            let f1 = t.field(1);
            let f2 = t.field(2);
            let embed = |x: Elt| -> Elt {
                match t.subfield_log_of_level1(x) {
                    None => 0,
                    Some(j) => t.embed_base(2, j),
                }
            };
            for a in f1.elements() {
                for b in f1.elements() {
                    assert_eq!(
                        embed(f1.add(a, b)),
                        f2.add(embed(a), embed(b)),
                        "q={q} a={a} b={b}"
                    );
                    assert_eq!(embed(f1.mul(a, b)), f2.mul(embed(a), embed(b)));
                }
            }
        }
    }

    #[test]
    fn matrix_rank_and_pow() {
        let f = SmallField::new(2, 1);
        // nilpotent single Jordan block of size 3
        let mut j = Mat::zero(3);
        j[(1, 0)] = 1;
        j[(2, 1)] = 1;
        assert_eq!(j.rank(&f), 2);
        assert_eq!(j.pow(2, &f).rank(&f), 1);
        assert_eq!(j.pow(3, &f).rank(&f), 0);
        let id = Mat::identity(3, &f);
        assert_eq!(id.mul(&j, &f), j);
    }

    #[test]
    fn minimal_polys() {
        let t = FieldTower::new(2, 2).unwrap();
        let f2 = t.field(2);
        let w = t.omega_pow(2, 1);
        // ω generates GF(4): minimal polynomial t² + t + 1
        assert_eq!(minimal_poly_over_prime(f2, w), vec![1, 1, 1]);
        let one = f2.one();
        assert_eq!(minimal_poly_over_prime(f2, one), vec![1, 1]);
    }
}

impl FieldTower {
    /// The ω_1-exponent of a nonzero level-1 element (test helper).
    pub fn subfield_log_of_level1(&self, x: Elt) -> Option<u64> {
        if x == 0 {
            return None;
        }
        (0..self.q - 1).find(|&j| self.omega_pow(1, j as i64) == x)
    }
}
