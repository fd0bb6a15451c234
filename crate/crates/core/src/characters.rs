//! Character values: the sums S_d, the ρ-parts of basic characters,
//! basic-character values on classes, and the full irreducible table.
//!
//! For a variable of degree d whose class-side target is the orbit of
//! ω_s^a (s | d),
//!
//!   S_d(k : ξ) = Σ_{u=0}^{d−1} ε_s^{k·a·q^u}
//!
//! and the ρ-part of a basic character pairs the integer vector h (from
//! the dual-side mode) with the class-side targets through a sum over
//! degree-preserving permutations:
//!
//!   B_ρ(h : ξ) = ∏_d Σ_{σ∈Sym(r_d)} ∏_i S_d(h_{di} : ξ_{dσ(i)}).
//!
//! The value of the character labelled by the dual symbol e on the
//! class c is then
//!
//!   (−1)^{n−Σ|ν(g)|} Σ_{ρ,m_e} χ(m_e,e) Σ_{m_c} Q(m_c,c) B_ρ(h^ρ m_e : ξ^ρ m_c)
//!
//! and must reduce to a cyclotomic integer.

use crate::class_space::{class_size, enumerate_classes, ClassSymbol};
use crate::cyclo::{tower_modulus, CycloSum};
use crate::dual_space::{degree, enumerate_duals, DualSymbol};
use crate::error::{Error, Result};
use crate::hall_green::GreenTable;
use crate::modes::{
    chi_weight, h_vector_with_roots, modes_into_class, modes_into_dual, q_weight, HVector, Mode,
};
use crate::orbits::FrobOrbit;
use crate::partitions::{enumerate_partitions, Partition};
use num::bigint::BigInt;
use num::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Class-side targets per variable degree: d ↦ [(level s, root a)].
pub type XiMap = BTreeMap<u32, Vec<(u32, u64)>>;

/// The ξ data of a class-side mode.
pub fn xi_map(m: &Mode) -> XiMap {
    let mut out: XiMap = BTreeMap::new();
    for (orbit, shape) in m.targets() {
        for &i in shape.parts() {
            out.entry(i * orbit.degree)
                .or_default()
                .push((orbit.degree, orbit.root));
        }
    }
    out
}

/// S_d(k : ξ) for a target at level s with root a.
pub fn s_sum(modulus: u64, q: u64, d: u32, k: u64, s: u32, a: u64) -> CycloSum {
    let ms = q.pow(s) - 1;
    let step = modulus / ms;
    let mut out = CycloSum::zero(modulus);
    let mut pw: u128 = 1; // q^u mod ms
    let ka = (k as u128 % ms as u128) * (a as u128 % ms as u128) % ms as u128;
    for _ in 0..d {
        let e = (ka * pw % ms as u128) as u64;
        out = out
            .add(&CycloSum::zeta(modulus, (step * e) as i64))
            .expect("same modulus");
        pw = pw * q as u128 % ms as u128;
    }
    out
}

/// Permanent of a square matrix of CycloSums by subset dynamic
/// programming; this is the permutation sum in B_ρ.
fn permanent(s: &[Vec<CycloSum>], modulus: u64) -> Result<CycloSum> {
    let r = s.len();
    if r == 0 {
        return Ok(CycloSum::one(modulus));
    }
    let mut dp = vec![CycloSum::zero(modulus); 1usize << r];
    dp[0] = CycloSum::one(modulus);
    for mask in 1usize..(1 << r) {
        let i = (mask.count_ones() - 1) as usize;
        let mut acc = CycloSum::zero(modulus);
        for j in 0..r {
            if mask & (1 << j) != 0 {
                acc = acc.add(&dp[mask ^ (1 << j)].mul(&s[i][j])?)?;
            }
        }
        dp[mask] = acc;
    }
    Ok(dp[(1 << r) - 1].clone())
}

/// B_ρ(h : ξ): the h and ξ data must cover the same variable degrees
/// with the same multiplicities.
pub fn basic_rho_part(q: u64, modulus: u64, h: &HVector, xi: &XiMap) -> Result<CycloSum> {
    let mut out = CycloSum::one(modulus);
    for (&d, hs) in &h.per_degree {
        let ts = xi
            .get(&d)
            .filter(|ts| ts.len() == hs.len())
            .ok_or_else(|| Error::Invariant(format!("degree-{d} variable count mismatch")))?;
        let mat: Vec<Vec<CycloSum>> = hs
            .iter()
            .map(|&k| {
                ts.iter()
                    .map(|&(s, a)| s_sum(modulus, q, d, k, s, a))
                    .collect()
            })
            .collect();
        out = out.mul(&permanent(&mat, modulus)?)?;
    }
    Ok(out)
}

/// B^ρ(h)(c) = Σ_{m_c} Q(m_c,c) B_ρ(h : ξ^ρ m_c).
pub fn basic_value(
    table: &GreenTable,
    rho: &Partition,
    h: &HVector,
    c: &ClassSymbol,
    q: u64,
) -> Result<CycloSum> {
    let modulus = tower_modulus(q, c.n());
    let mut out = CycloSum::zero(modulus);
    for m in modes_into_class(rho, c) {
        let w = q_weight(table, &m, c, q)?;
        let b = basic_rho_part(q, modulus, h, &xi_map(&m))?;
        out = out.add(&b.scale(&w))?;
    }
    Ok(out)
}

/// Character value with an explicit root choice on the dual side.
pub fn char_value_with_roots(
    table: &GreenTable,
    e: &DualSymbol,
    c: &ClassSymbol,
    q: u64,
    root_of: &dyn Fn(&FrobOrbit) -> u64,
) -> Result<CycloSum> {
    let n = e.n();
    if n != c.n() {
        return Err(Error::SizeMismatch(format!("n={} vs n={}", n, c.n())));
    }
    let modulus = tower_modulus(q, n);
    let mut total = CycloSum::zero(modulus);
    for rho in enumerate_partitions(n) {
        let class_modes = modes_into_class(&rho, c);
        if class_modes.is_empty() {
            continue;
        }
        for m_e in modes_into_dual(&rho, e) {
            let w = chi_weight(table, &m_e, e)?;
            if w.is_zero() {
                continue;
            }
            let h = h_vector_with_roots(&m_e, q, root_of);
            for m_c in &class_modes {
                let qw = q_weight(table, m_c, c, q)?;
                let b = basic_rho_part(q, modulus, &h, &xi_map(m_c))?;
                total = total.add(&b.scale(&(&w * &qw)))?;
            }
        }
    }
    if (n - e.total_partition_size()) % 2 == 1 {
        total = total.neg();
    }
    let value = total.canonicalize();
    if !value.has_integer_coeffs_canonical() {
        return Err(Error::NonIntegralValue(e.to_string(), format!("{c} at q={q}")));
    }
    Ok(value)
}

/// Exact value of the irreducible character labelled e on the class c.
pub fn char_value(
    table: &GreenTable,
    e: &DualSymbol,
    c: &ClassSymbol,
    q: u64,
) -> Result<CycloSum> {
    char_value_with_roots(table, e, c, q, &|o: &FrobOrbit| o.root)
}

/// χ_e(identity) must equal the degree formula.
pub fn char_degree_check(table: &GreenTable, e: &DualSymbol, q: u64) -> Result<bool> {
    let id = ClassSymbol::identity(e.n());
    let v = char_value(table, e, &id, q)?;
    let d = degree(e, q)?;
    Ok(v.to_integer() == Some(d))
}

#[derive(Debug, Clone, Serialize)]
pub struct CharTable {
    pub q: u64,
    pub n: u32,
    pub classes: Vec<ClassSymbol>,
    pub chars: Vec<DualSymbol>,
    /// values[i][j] = χ_{chars[i]}(classes[j])
    pub values: Vec<Vec<CycloSum>>,
}

impl CharTable {
    pub fn class_sizes(&self) -> Result<Vec<BigInt>> {
        self.classes.iter().map(|c| class_size(c, self.q)).collect()
    }
}

/// The complete character table, rows indexed by dual symbols and
/// columns by class symbols in enumeration order.
pub fn full_table(table: &GreenTable, q: u64, n: u32) -> Result<CharTable> {
    let classes = enumerate_classes(q, n)?;
    let chars = enumerate_duals(q, n)?;
    let values: Result<Vec<Vec<CycloSum>>> = chars
        .par_iter()
        .map(|e| {
            classes
                .iter()
                .map(|c| char_value(table, e, c, q))
                .collect()
        })
        .collect();
    Ok(CharTable {
        q,
        n,
        classes,
        chars,
        values: values?,
    })
}

/// Degree as read off the table's identity column; the identity class
/// is the one of size 1.
pub fn table_degrees(t: &CharTable) -> Result<Vec<BigInt>> {
    let id = ClassSymbol::identity(t.n);
    let j = t
        .classes
        .iter()
        .position(|c| *c == id)
        .ok_or_else(|| Error::Invariant("identity class missing".into()))?;
    t.values
        .iter()
        .map(|row| {
            row[j]
                .to_integer()
                .filter(|d| d.is_positive())
                .ok_or_else(|| Error::Invariant("non-integral degree".into()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::gl_order_poly;
    use num::rational::BigRational;
    use num::One;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn orbit(d: u32, k: u64) -> FrobOrbit {
        FrobOrbit { degree: d, root: k }
    }

    fn eps1(modulus: u64, q: u64, e: u64) -> CycloSum {
        let m1 = q - 1;
        CycloSum::zeta(modulus, ((modulus / m1) * (e % m1)) as i64)
    }

    #[test]
    fn s_sum_basic() {
        let q = 5u64;
        let modulus = tower_modulus(q, 5);
        // d = 1: a single ε₁ term
        let s = s_sum(modulus, q, 1, 3, 1, 2);
        assert!(s.eq_canonical(&eps1(modulus, q, 6)).unwrap());
        // k = 0: the constant d
        let s = s_sum(modulus, q, 4, 0, 2, 7);
        assert_eq!(s.to_integer(), Some(BigInt::from(4)));
        // d=2 over a level-1 target with k = i(q+1): both exponents
        // collapse to 2ia mod (q−1)
        let (i, a) = (3u64, 2u64);
        let s = s_sum(modulus, q, 2, i * (q + 1), 1, a);
        assert!(s
            .eq_canonical(&eps1(modulus, q, 2 * i * a).scale(&BigRational::from_integer(2.into())))
            .unwrap());
    }

    #[test]
    fn rho_part_worked_example() {
        // ρ = 2².1, h from e = g_i⁴·g_j, every ξ on the level-1 root a:
        // the ρ-part is 8·ε₁^{(4i+j)a}
        let q = 5u64;
        let modulus = tower_modulus(q, 5);
        let (i, j, a) = (3u64, 1u64, 2u64);
        let e = DualSymbol::new(vec![(orbit(1, i), p("4")), (orbit(1, j), p("1"))]).unwrap();
        let m = modes_into_dual(&p("2^2.1"), &e).remove(0);
        let h = crate::modes::h_vector(&m, q);
        let mut xi: XiMap = BTreeMap::new();
        xi.insert(1, vec![(1, a)]);
        xi.insert(2, vec![(1, a), (1, a)]);
        let b = basic_rho_part(q, modulus, &h, &xi).unwrap();
        let expect = eps1(modulus, q, (4 * i + j) * a).scale(&BigRational::from_integer(8.into()));
        assert!(b.eq_canonical(&expect).unwrap());
    }

    #[test]
    fn linear_characters() {
        // g_{1,0}^n is the trivial character; g_{1i}^n has value
        // ε₁^{i·Σ a·mult} on every class, coefficient 1
        let table = GreenTable::new();
        let q = 3u64;
        for n in [2u32, 3] {
            let triv = DualSymbol::new(vec![(orbit(1, 0), p(&n.to_string()))]).unwrap();
            for c in enumerate_classes(q, n).unwrap() {
                let v = char_value(&table, &triv, &c, q).unwrap();
                assert_eq!(v.to_integer(), Some(BigInt::one()), "c={c}");
            }
        }
    }

    #[test]
    fn gl22_matches_sym3() {
        // GL(2,2) ≅ S₃: degrees {1,1,2}; value multisets per class
        let table = GreenTable::new();
        let t = full_table(&table, 2, 2).unwrap();
        assert_eq!(t.classes.len(), 3);
        let degrees: Vec<BigInt> = table_degrees(&t).unwrap();
        let mut sorted = degrees.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1.into(), 1.into(), 2.into()]);
        // all values are rational integers here and each row is one of
        // the S₃ rows {1,1,1}, {1,−1,1}, {2,0,−1}
        let mut rows: Vec<Vec<BigInt>> = t
            .values
            .iter()
            .map(|row| row.iter().map(|v| v.to_integer().unwrap()).collect())
            .collect();
        // order columns by class size: identity (1), 3-cycles (2),
        // transvections (3)
        let sizes = t.class_sizes().unwrap();
        let mut idx: Vec<usize> = (0..3).collect();
        idx.sort_by_key(|&j| sizes[j].clone());
        for row in &mut rows {
            *row = idx.iter().map(|&j| row[j].clone()).collect();
        }
        rows.sort();
        let expected: Vec<Vec<BigInt>> = vec![
            vec![1.into(), 1.into(), (-1).into()],
            vec![1.into(), 1.into(), 1.into()],
            vec![2.into(), (-1).into(), 0.into()],
        ];
        assert_eq!(rows, expected);
    }

    #[test]
    fn a1_prime_on_a1() {
        // χ_{g_{1i}^{1^5}}(f_{1a}^{1^5}) = q^{10}·ε₁^{5ia}
        let q = 4u64;
        let modulus = tower_modulus(q, 5);
        let table = GreenTable::new();
        let (i, a) = (1u64, 2u64);
        let e = DualSymbol::new(vec![(orbit(1, i), p("1^5"))]).unwrap();
        let c = ClassSymbol::new(vec![(orbit(1, a), p("1^5"))]).unwrap();
        let v = char_value(&table, &e, &c, q).unwrap();
        let expect =
            eps1(modulus, q, 5 * i * a).scale(&BigRational::from_integer(BigInt::from(4u64).pow(10)));
        assert!(v.eq_canonical(&expect).unwrap());
    }

    #[test]
    fn c1_prime_on_e2() {
        // χ_{C1'}(E2) = q·ε₁^{i(2a+b)+j(b+c)} + (q+1)·ε₁^{i(a+b+c)+j(a+b)}
        // with a the root carrying the 1² block and b the root carrying
        // the 2 block (checked against five independent parameter sets)
        let q = 5u64;
        let modulus = tower_modulus(q, 5);
        let table = GreenTable::new();
        let (i, j) = (1u64, 2u64);
        let (a, b, c) = (1u64, 2u64, 3u64);
        let e = DualSymbol::new(vec![(orbit(1, i), p("1^3")), (orbit(1, j), p("1^2"))]).unwrap();
        let cl = ClassSymbol::new(vec![
            (orbit(1, b), p("2")),
            (orbit(1, a), p("1^2")),
            (orbit(1, c), p("1")),
        ])
        .unwrap();
        let v = char_value(&table, &e, &cl, q).unwrap();
        let expect = eps1(modulus, q, i * (2 * a + b) + j * (b + c))
            .scale(&BigRational::from_integer(q.into()))
            .add(
                &eps1(modulus, q, i * (a + b + c) + j * (a + b))
                    .scale(&BigRational::from_integer((q + 1).into())),
            )
            .unwrap();
        assert!(v.eq_canonical(&expect).unwrap());
    }

    #[test]
    fn degree_checks() {
        let table = GreenTable::new();
        for q in [2u64, 3] {
            let e = DualSymbol::principal(5);
            assert!(char_degree_check(&table, &e, q).unwrap());
            let a7 = DualSymbol::new(vec![(orbit(1, 1), p("5"))]).unwrap();
            assert!(char_degree_check(&table, &a7, q).unwrap());
            let c1 =
                DualSymbol::new(vec![(orbit(1, 0), p("1^3")), (orbit(1, 1), p("1^2"))]).unwrap();
            assert!(char_degree_check(&table, &c1, q).unwrap());
        }
    }

    #[test]
    fn small_tables_orthogonal() {
        // row orthogonality over GL(n,q) for n ≤ 2, small q
        let table = GreenTable::new();
        for (n, q) in [(2u32, 2u64), (2, 3), (1, 4)] {
            let t = full_table(&table, q, n).unwrap();
            let sizes = t.class_sizes().unwrap();
            let order = gl_order_poly(n as usize).eval_u64(q);
            for (r1, row1) in t.values.iter().enumerate() {
                for (r2, row2) in t.values.iter().enumerate() {
                    let mut acc = CycloSum::zero(tower_modulus(q, n));
                    for (j, sz) in sizes.iter().enumerate() {
                        let term = row1[j].mul(&row2[j].conj()).unwrap();
                        acc = acc
                            .add(&term.scale(&BigRational::from_integer(sz.clone())))
                            .unwrap();
                    }
                    let expect = if r1 == r2 { order.clone() } else { BigInt::zero() };
                    assert_eq!(
                        acc.canonicalize().to_integer(),
                        Some(expect),
                        "n={n} q={q} rows {r1},{r2}"
                    );
                }
            }
        }
    }
}
