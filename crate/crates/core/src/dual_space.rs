//! Dual classes: the labels of the irreducible characters, and their
//! degrees.
//!
//! A dual symbol assigns a nonempty partition ν(g) to each simplex g
//! (Frobenius orbit on the dual side) with Σ |ν(g)|·deg g = n — the
//! same combinatorics as class symbols, so enumeration and type
//! classification are shared. The degree of the character labelled e is
//!
//!   Ψ_n(q) · ∏_g (−1)^{|ν(g)|} {ν(g) : q^{deg g}}
//!
//! where, for λ = (ℓ_1 ≥ … ≥ ℓ_p),
//!
//!   {λ:q} = q^{ℓ_2+2ℓ_3+⋯} ∏_{r<s}(1 − q^{ℓ_r−ℓ_s−r+s}) / ∏_r Φ_{ℓ_r+p−r}(q)
//!
//! with Φ_m(q) = (−1)^m Ψ_m(q) and Ψ_m(q) = ∏_{i≤m}(q^i − 1).

use crate::class_space::{classify_type, enumerate_classes, ClassSymbol};
use crate::error::{Error, Result};
use crate::orbits::FrobOrbit;
use crate::partitions::Partition;
use crate::poly::{gl_order_poly, phi_signed, psi, IntPolyQ, QPoly};
use num::bigint::BigInt;
use num::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualSymbol(ClassSymbol);

impl DualSymbol {
    pub fn new(entries: Vec<(FrobOrbit, Partition)>) -> Result<DualSymbol> {
        Ok(DualSymbol(ClassSymbol::new(entries)?))
    }

    pub fn entries(&self) -> &[(FrobOrbit, Partition)] {
        self.0.entries()
    }

    pub fn partition_of(&self, orbit: &FrobOrbit) -> Partition {
        self.0.partition_of(orbit)
    }

    pub fn n(&self) -> u32 {
        self.0.n()
    }

    /// Σ |ν(g)| over the symbol (the exponent driving the global sign
    /// of character values).
    pub fn total_partition_size(&self) -> u32 {
        self.entries().iter().map(|(_, p)| p.size()).sum()
    }

    pub fn validate(&self, q: u64, n: u32) -> Result<()> {
        self.0.validate(q, n)
    }

    /// The principal dual symbol g^{1^n} at the trivial simplex; its
    /// character has degree q^{n(n−1)/2}.
    pub fn principal(n: u32) -> DualSymbol {
        DualSymbol(ClassSymbol::identity(n))
    }
}

impl fmt::Display for DualSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for DualSymbol {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut value = serde_json::to_value(&self.0).map_err(serde::ser::Error::custom)?;
        value
            .as_object_mut()
            .unwrap()
            .insert("dual".to_string(), serde_json::Value::Bool(true));
        value.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for DualSymbol {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let mut value = serde_json::Value::deserialize(de)?;
        if let Some(obj) = value.as_object_mut() {
            match obj.remove("dual") {
                Some(serde_json::Value::Bool(true)) => {}
                _ => return Err(serde::de::Error::custom("missing \"dual\": true marker")),
            }
        }
        let inner: ClassSymbol =
            serde_json::from_value(value).map_err(serde::de::Error::custom)?;
        Ok(DualSymbol(inner))
    }
}

/// One symbol per irreducible character of GL(n,q), sorted.
pub fn enumerate_duals(q: u64, n: u32) -> Result<Vec<DualSymbol>> {
    Ok(enumerate_classes(q, n)?.into_iter().map(DualSymbol).collect())
}

/// Dual type label (primed form of the class type), n = 5 only.
pub fn classify_dual_type(e: &DualSymbol) -> Result<String> {
    Ok(format!("{}'", classify_type(&e.0)?))
}

/// Character census per dual type, n = 5.
pub fn dual_census(q: u64) -> Result<BTreeMap<String, u64>> {
    let mut out = BTreeMap::new();
    for e in enumerate_duals(q, 5)? {
        *out.entry(classify_dual_type(&e)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// {λ:q} as an exact ratio (numerator, denominator) of polynomials.
pub fn brace_poly(lambda: &Partition) -> (IntPolyQ, IntPolyQ) {
    let l = lambda.parts(); // decreasing
    let p = l.len();
    let mut exp = 0usize;
    for (r, &lr) in l.iter().enumerate() {
        exp += r * lr as usize;
    }
    let mut num = IntPolyQ::q_pow(exp);
    for r in 0..p {
        for s in r + 1..p {
            let e = (l[r] - l[s]) as usize + (s - r);
            num = &num * &(&IntPolyQ::one() - &IntPolyQ::q_pow(e));
        }
    }
    let mut den = IntPolyQ::one();
    for (r, &lr) in l.iter().enumerate() {
        den = &den * &phi_signed(lr as usize + p - (r + 1));
    }
    (num, den)
}

/// Character degree as a polynomial in q.
pub fn degree_poly(e: &DualSymbol) -> Result<IntPolyQ> {
    let n = e.n() as usize;
    let mut num = QPoly::from(psi(n));
    let mut den = QPoly::one();
    for (orbit, p) in e.entries() {
        let (bn, bd) = brace_poly(p);
        let d = orbit.degree as usize;
        let mut bn = bn.subst_q_pow(d);
        if p.size() % 2 == 1 {
            bn = -&bn;
        }
        num = num.mul(&QPoly::from(bn));
        den = den.mul(&QPoly::from(bd.subst_q_pow(d)));
    }
    let poly = num
        .div_exact(&den)
        .and_then(QPoly::into_int_poly)
        .ok_or_else(|| Error::Invariant(format!("degree of {e} is not a polynomial")))?;
    if poly.coeffs().last().is_some_and(|c| c.is_negative()) {
        return Err(Error::Invariant(format!(
            "degree of {e} has negative leading coefficient"
        )));
    }
    Ok(poly)
}

/// Character degree at a concrete q; positive and dividing |GL(n,q)|.
pub fn degree(e: &DualSymbol, q: u64) -> Result<BigInt> {
    let value = degree_poly(e)?.eval_u64(q);
    if value <= BigInt::zero() {
        return Err(Error::Invariant(format!("degree of {e} at q={q} not positive")));
    }
    let order = gl_order_poly(e.n() as usize).eval_u64(q);
    if (&order % &value) != BigInt::zero() {
        return Err(Error::Invariant(format!(
            "degree of {e} at q={q} does not divide |G|"
        )));
    }
    Ok(value)
}
