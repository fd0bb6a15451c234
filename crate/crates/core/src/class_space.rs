//! Conjugacy classes of GL(n,q): symbols, enumeration, sizes, the 42
//! type labels at n = 5, and canonical representative matrices.
//!
//! A class is the assignment f ↦ ν(f) of a nonempty partition to each
//! irreducible factor f of the characteristic polynomial (labelled by
//! its Frobenius orbit), with Σ |ν(f)|·deg f = n. The class size is
//! |GL(n,q)| / ∏_f a_{ν(f)}(q^{deg f}) with the standard centralizer
//! order a_λ(Q) = Q^{Σ(λ'_i)²} ∏_i ∏_{j≤m_i}(1 − Q^{−j}).

use crate::error::{Error, Result};
use crate::gf::{FieldTower, Mat};
use crate::orbits::{enumerate_orbits, min_poly, FrobOrbit};
use crate::partitions::{enumerate_partitions, Partition};
use crate::poly::{gl_order_poly, IntPolyQ};
use num::bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::LazyLock;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSymbol {
    entries: Vec<(FrobOrbit, Partition)>, // sorted by orbit, partitions nonempty
}

impl ClassSymbol {
    pub fn new(mut entries: Vec<(FrobOrbit, Partition)>) -> Result<ClassSymbol> {
        entries.sort();
        for (o, p) in &entries {
            if p.is_empty() {
                return Err(Error::BadSymbol(format!(
                    "empty partition on orbit {}",
                    o.to_text()
                )));
            }
        }
        for w in entries.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::BadSymbol(format!(
                    "orbit {} repeated",
                    w[0].0.to_text()
                )));
            }
        }
        Ok(ClassSymbol { entries })
    }

    pub fn entries(&self) -> &[(FrobOrbit, Partition)] {
        &self.entries
    }

    /// The partition attached to an orbit; empty if absent.
    pub fn partition_of(&self, orbit: &FrobOrbit) -> Partition {
        self.entries
            .iter()
            .find(|(o, _)| o == orbit)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(Partition::empty)
    }

    /// n = Σ |ν(f)|·deg f.
    pub fn n(&self) -> u32 {
        self.entries
            .iter()
            .map(|(o, p)| o.degree * p.size())
            .sum()
    }

    /// The identity class t−1 ↦ 1^n (root exponent 0).
    pub fn identity(n: u32) -> ClassSymbol {
        ClassSymbol {
            entries: vec![(
                FrobOrbit { degree: 1, root: 0 },
                Partition::new(vec![1; n as usize]),
            )],
        }
    }

    pub fn validate(&self, q: u64, n: u32) -> Result<()> {
        for (o, _) in &self.entries {
            o.validate(q)?;
        }
        if self.n() != n {
            return Err(Error::BadSymbol(format!(
                "symbol has weighted size {}, expected {n}",
                self.n()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ClassSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (o, p) in &self.entries {
            if !first {
                write!(f, ".")?;
            }
            first = false;
            write!(f, "[{}]^{{{p}}}", o.to_text())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct OrbitEntryJson {
    deg: u32,
    root: u64,
    partition: String,
}

#[derive(Serialize, Deserialize)]
struct SymbolJson {
    orbits: Vec<OrbitEntryJson>,
}

impl Serialize for ClassSymbol {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        SymbolJson {
            orbits: self
                .entries
                .iter()
                .map(|(o, p)| OrbitEntryJson {
                    deg: o.degree,
                    root: o.root,
                    partition: p.to_string(),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ClassSymbol {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = SymbolJson::deserialize(de)?;
        let entries = raw
            .orbits
            .into_iter()
            .map(|e| {
                Ok((
                    FrobOrbit {
                        degree: e.deg,
                        root: e.root,
                    },
                    Partition::parse(&e.partition).map_err(serde::de::Error::custom)?,
                ))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        ClassSymbol::new(entries).map_err(serde::de::Error::custom)
    }
}

/// Multisets of (degree, partition) with Σ deg·|ν| = n, i.e. the class
/// "types" before orbits are chosen.
fn enumerate_patterns(n: u32) -> Vec<Vec<(u32, Partition)>> {
    // all items (s, ν) with s·|ν| ≤ n, in a fixed order
    let mut items: Vec<(u32, Partition)> = Vec::new();
    for s in 1..=n {
        for size in 1..=n / s {
            for p in enumerate_partitions(size) {
                items.push((s, p));
            }
        }
    }
    items.sort();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(
        items: &[(u32, Partition)],
        n: u32,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<(u32, Partition)>>,
    ) {
        if n == 0 {
            out.push(cur.iter().map(|&i| items[i].clone()).collect());
            return;
        }
        for i in start..items.len() {
            let w = items[i].0 * items[i].1.size();
            if w <= n {
                cur.push(i);
                rec(items, n - w, i, cur, out);
                cur.pop();
            }
        }
    }
    rec(&items, n, 0, &mut cur, &mut out);
    out
}

/// One ClassSymbol per conjugacy class of GL(n,q), sorted.
pub fn enumerate_classes(q: u64, n: u32) -> Result<Vec<ClassSymbol>> {
    crate::gf::prime_power(q)?;
    let orbit_lists: Vec<Vec<FrobOrbit>> = (0..=n)
        .map(|s| if s == 0 { Vec::new() } else { enumerate_orbits(q, s) })
        .collect();
    let mut out = Vec::new();
    for pattern in enumerate_patterns(n) {
        // group the pattern by degree: degree -> list of (ν, multiplicity)
        let mut by_deg: BTreeMap<u32, Vec<(Partition, usize)>> = BTreeMap::new();
        for (s, p) in pattern {
            let groups = by_deg.entry(s).or_default();
            match groups.iter_mut().find(|(gp, _)| *gp == p) {
                Some((_, m)) => *m += 1,
                None => groups.push((p, 1)),
            }
        }
        // per degree: injectively assign orbits, unordered within a group
        let mut partial: Vec<Vec<(FrobOrbit, Partition)>> = vec![Vec::new()];
        for (s, groups) in &by_deg {
            let orbits = &orbit_lists[*s as usize];
            let mut assigns: Vec<Vec<(FrobOrbit, Partition)>> = Vec::new();
            assign_groups(orbits, groups, 0, &mut Vec::new(), &mut assigns);
            let mut next = Vec::with_capacity(partial.len() * assigns.len());
            for base in &partial {
                for a in &assigns {
                    let mut v = base.clone();
                    v.extend(a.iter().cloned());
                    next.push(v);
                }
            }
            partial = next;
        }
        for entries in partial {
            out.push(ClassSymbol::new(entries)?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Chooses disjoint orbit sets for each (ν, multiplicity) group of one
/// degree: a combination of orbits per group, later groups drawing from
/// the remaining orbits.
fn assign_groups(
    orbits: &[FrobOrbit],
    groups: &[(Partition, usize)],
    gi: usize,
    chosen: &mut Vec<(FrobOrbit, Partition)>,
    out: &mut Vec<Vec<(FrobOrbit, Partition)>>,
) {
    if gi == groups.len() {
        out.push(chosen.clone());
        return;
    }
    let (p, m) = &groups[gi];
    let available: Vec<FrobOrbit> = orbits
        .iter()
        .filter(|o| !chosen.iter().any(|(c, _)| c == *o))
        .copied()
        .collect();
    let mut comb: Vec<FrobOrbit> = Vec::new();
    fn combos(
        avail: &[FrobOrbit],
        m: usize,
        start: usize,
        comb: &mut Vec<FrobOrbit>,
        visit: &mut impl FnMut(&[FrobOrbit]),
    ) {
        if comb.len() == m {
            visit(comb);
            return;
        }
        for i in start..avail.len() {
            comb.push(avail[i]);
            combos(avail, m, i + 1, comb, visit);
            comb.pop();
        }
    }
    let mut results: Vec<Vec<FrobOrbit>> = Vec::new();
    combos(&available, *m, 0, &mut comb, &mut |c| {
        results.push(c.to_vec())
    });
    for c in results {
        let len0 = chosen.len();
        for o in &c {
            chosen.push((*o, p.clone()));
        }
        assign_groups(orbits, groups, gi + 1, chosen, out);
        chosen.truncate(len0);
    }
}

/// Centralizer order a_λ(Q) as a polynomial in Q:
/// Q^{Σ(λ'_i)² − T} ∏_i ∏_{j≤m_i}(Q^j − 1) with T = Σ_i Σ_{j≤m_i} j.
pub fn centralizer_poly(lambda: &Partition) -> IntPolyQ {
    let conj_sq: u32 = lambda.conjugate().parts().iter().map(|&c| c * c).sum();
    let mut t = 0u32;
    let mut prod = IntPolyQ::one();
    for (_, m) in lambda.multiplicities() {
        for j in 1..=m {
            t += j;
            prod = &prod * &IntPolyQ::q_pow_minus_one(j as usize);
        }
    }
    &IntPolyQ::q_pow((conj_sq - t) as usize) * &prod
}

/// |class| as a polynomial in q.
pub fn class_size_poly(c: &ClassSymbol) -> Result<IntPolyQ> {
    let n = c.n();
    let mut cent = IntPolyQ::one();
    for (o, p) in c.entries() {
        cent = &cent * &centralizer_poly(p).subst_q_pow(o.degree as usize);
    }
    gl_order_poly(n as usize)
        .div_exact(&cent)
        .ok_or_else(|| Error::Invariant(format!("centralizer does not divide |G| for {c}")))
}

/// |class| at a concrete q.
pub fn class_size(c: &ClassSymbol, q: u64) -> Result<BigInt> {
    Ok(class_size_poly(c)?.eval_u64(q))
}

/// The 42 class types of GL(5,q), keyed by the sorted multiset of
/// (degree, partition) pairs.
static TYPE_TABLE: LazyLock<HashMap<Vec<(u32, Partition)>, &'static str>> = LazyLock::new(|| {
    let rows: &[(&str, &[(u32, &str)])] = &[
        ("A1", &[(1, "1^5")]),
        ("A2", &[(1, "2.1^3")]),
        ("A3", &[(1, "2^2.1")]),
        ("A4", &[(1, "3.1^2")]),
        ("A5", &[(1, "3.2")]),
        ("A6", &[(1, "4.1")]),
        ("A7", &[(1, "5")]),
        ("B1", &[(1, "1^4"), (1, "1")]),
        ("B2", &[(1, "2.1^2"), (1, "1")]),
        ("B3", &[(1, "2^2"), (1, "1")]),
        ("B4", &[(1, "3.1"), (1, "1")]),
        ("B5", &[(1, "4"), (1, "1")]),
        ("C1", &[(1, "1^3"), (1, "1^2")]),
        ("C2", &[(1, "2.1"), (1, "1^2")]),
        ("C3", &[(1, "3"), (1, "1^2")]),
        ("C4", &[(1, "1^3"), (1, "2")]),
        ("C5", &[(1, "2.1"), (1, "2")]),
        ("C6", &[(1, "3"), (1, "2")]),
        ("D1", &[(1, "1^3"), (1, "1"), (1, "1")]),
        ("D2", &[(1, "2.1"), (1, "1"), (1, "1")]),
        ("D3", &[(1, "3"), (1, "1"), (1, "1")]),
        ("E1", &[(1, "1^2"), (1, "1^2"), (1, "1")]),
        ("E2", &[(1, "2"), (1, "1^2"), (1, "1")]),
        ("E3", &[(1, "2"), (1, "2"), (1, "1")]),
        ("F1", &[(1, "1^2"), (1, "1"), (1, "1"), (1, "1")]),
        ("F2", &[(1, "2"), (1, "1"), (1, "1"), (1, "1")]),
        ("G", &[(1, "1"), (1, "1"), (1, "1"), (1, "1"), (1, "1")]),
        ("H1", &[(1, "1^3"), (2, "1")]),
        ("H2", &[(1, "2.1"), (2, "1")]),
        ("H3", &[(1, "3"), (2, "1")]),
        ("I1", &[(1, "1^2"), (1, "1"), (2, "1")]),
        ("I2", &[(1, "2"), (1, "1"), (2, "1")]),
        ("J", &[(1, "1"), (1, "1"), (1, "1"), (2, "1")]),
        ("K1", &[(1, "1"), (2, "1^2")]),
        ("K2", &[(1, "1"), (2, "2")]),
        ("L", &[(1, "1"), (2, "1"), (2, "1")]),
        ("M1", &[(1, "1^2"), (3, "1")]),
        ("M2", &[(1, "2"), (3, "1")]),
        ("N", &[(1, "1"), (1, "1"), (3, "1")]),
        ("O", &[(2, "1"), (3, "1")]),
        ("P", &[(1, "1"), (4, "1")]),
        ("Q", &[(5, "1")]),
    ];
    let mut map = HashMap::new();
    for (label, pat) in rows {
        let mut key: Vec<(u32, Partition)> = pat
            .iter()
            .map(|&(d, p)| (d, Partition::parse(p).unwrap()))
            .collect();
        key.sort();
        map.insert(key, *label);
    }
    assert_eq!(map.len(), 42);
    map
});

/// The (degree, partition) multiset defining a type label.
pub fn type_shape(label: &str) -> Option<Vec<(u32, Partition)>> {
    TYPE_TABLE
        .iter()
        .find(|(_, l)| **l == label)
        .map(|(k, _)| k.clone())
}

/// All 42 type labels, in table order.
pub fn all_type_labels() -> Vec<&'static str> {
    let mut labels: Vec<&'static str> = TYPE_TABLE.values().copied().collect();
    labels.sort_by_key(|l| label_sort_key(l));
    labels
}

fn label_sort_key(l: &str) -> (u8, u8) {
    let mut chars = l.bytes();
    let letter = chars.next().unwrap();
    let digit = chars.next().map(|d| d - b'0').unwrap_or(0);
    (letter, digit)
}

pub fn classify_type(c: &ClassSymbol) -> Result<&'static str> {
    if c.n() != 5 {
        return Err(Error::Usage(format!(
            "type classification is defined for n = 5, got n = {}",
            c.n()
        )));
    }
    let mut key: Vec<(u32, Partition)> = c
        .entries
        .iter()
        .map(|(o, p)| (o.degree, p.clone()))
        .collect();
    key.sort();
    TYPE_TABLE
        .get(&key)
        .copied()
        .ok_or_else(|| Error::Invariant(format!("unclassifiable class symbol {c}")))
}

/// Number of classes of each type, n = 5.
pub fn census(q: u64) -> Result<BTreeMap<&'static str, u64>> {
    let mut out = BTreeMap::new();
    for c in enumerate_classes(q, 5)? {
        *out.entry(classify_type(&c)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// Block-diagonal representative: for each f and each part m of ν(f),
/// an m·s block with companion matrices of f on the diagonal and
/// identity blocks on the subdiagonal.
pub fn representative_matrix(c: &ClassSymbol, tower: &FieldTower) -> Result<Mat> {
    let f1 = tower.field(1);
    let mut acc = Mat::zero(0);
    for (orbit, p) in c.entries() {
        let coeffs = min_poly(orbit, tower)?;
        let s = orbit.degree as usize;
        let companion = companion_matrix(&coeffs, f1);
        for &part in p.parts() {
            let m = part as usize;
            let mut block = Mat::zero(m * s);
            for r in 0..m {
                for i in 0..s {
                    for j in 0..s {
                        block[(r * s + i, r * s + j)] = companion[(i, j)];
                    }
                }
                if r > 0 {
                    for i in 0..s {
                        block[(r * s + i, (r - 1) * s + i)] = f1.one();
                    }
                }
            }
            acc = acc.direct_sum(&block);
        }
    }
    Ok(acc)
}

/// Companion matrix of a monic polynomial (ascending coefficients over
/// the given field): subdiagonal 1s, last column −a_i.
fn companion_matrix(coeffs: &[crate::gf::Elt], f: &crate::gf::SmallField) -> Mat {
    let s = coeffs.len() - 1;
    assert_eq!(coeffs[s], f.one(), "companion matrix needs a monic polynomial");
    let mut m = Mat::zero(s);
    for i in 1..s {
        m[(i, i - 1)] = f.one();
    }
    for i in 0..s {
        m[(i, s - 1)] = f.neg(coeffs[i]);
    }
    m
}

/// Checks that the representative realizes the symbol: invertible, and
/// for each orbit f the rank sequence of f(A)^i recovers ν(f).
pub fn verify_representative(c: &ClassSymbol, tower: &FieldTower, a: &Mat) -> Result<()> {
    let f1 = tower.field(1);
    let n = c.n() as usize;
    if a.n != n {
        return Err(Error::Invariant("representative has wrong size".to_string()));
    }
    if a.rank(f1) != n {
        return Err(Error::Invariant(format!("representative of {c} is singular")));
    }
    for (orbit, p) in c.entries() {
        let coeffs = min_poly(orbit, tower)?;
        let b = a.apply_poly(&coeffs, f1);
        let s = orbit.degree as usize;
        // nullity_i = n − rank(B^i); conj part i of ν(f) is
        // (nullity_i − nullity_{i−1}) / s
        let mut conj_parts: Vec<u32> = Vec::new();
        let mut nullities = vec![0usize];
        let mut cur = Mat::identity(n, f1);
        loop {
            cur = cur.mul(&b, f1);
            let nul = n - cur.rank(f1);
            if nul == *nullities.last().unwrap() {
                break;
            }
            nullities.push(nul);
            if nullities.len() > n + 1 {
                break;
            }
        }
        for w in nullities.windows(2) {
            let diff = w[1] - w[0];
            if diff % s != 0 {
                return Err(Error::Invariant(format!(
                    "rank sequence of {c} not divisible by deg f"
                )));
            }
            conj_parts.push((diff / s) as u32);
        }
        let got = Partition::new(conj_parts).conjugate();
        if got != *p {
            return Err(Error::Invariant(format!(
                "representative of {c} realizes {got} on orbit {}, expected {p}",
                orbit.to_text()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::psi;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn class_counts_n5() {
        for q in [2u64, 3, 4, 5] {
            let classes = enumerate_classes(q, 5).unwrap();
            let expect = q.pow(5) - q.pow(2) - q + 1;
            assert_eq!(classes.len() as u64, expect, "q={q}");
        }
    }

    #[test]
    fn class_count_small() {
        assert_eq!(enumerate_classes(2, 2).unwrap().len(), 3);
        assert_eq!(enumerate_classes(3, 2).unwrap().len(), 8);
        assert_eq!(enumerate_classes(2, 1).unwrap().len(), 1);
    }

    #[test]
    fn census_type_counts() {
        for (q, types) in [(2u64, 17usize), (3, 32), (4, 39), (5, 41)] {
            let c = census(q).unwrap();
            assert_eq!(c.len(), types, "q={q}");
            assert!(c.values().all(|&v| v > 0));
        }
    }

    #[test]
    fn classify_examples() {
        let a1 = ClassSymbol::identity(5);
        assert_eq!(classify_type(&a1).unwrap(), "A1");
        let q_class = ClassSymbol::new(vec![(FrobOrbit { degree: 5, root: 1 }, p("1"))]).unwrap();
        assert_eq!(classify_type(&q_class).unwrap(), "Q");
        let h3 = ClassSymbol::new(vec![
            (FrobOrbit { degree: 1, root: 0 }, p("3")),
            (FrobOrbit { degree: 2, root: 1 }, p("1")),
        ])
        .unwrap();
        assert_eq!(classify_type(&h3).unwrap(), "H3");
    }

    #[test]
    fn sizes_sum_to_group_order() {
        for n in 1..=3u32 {
            for q in [2u64, 3, 4, 5] {
                let total: BigInt = enumerate_classes(q, n)
                    .unwrap()
                    .iter()
                    .map(|c| class_size(c, q).unwrap())
                    .sum();
                assert_eq!(total, gl_order_poly(n as usize).eval_u64(q), "n={n} q={q}");
            }
        }
        // n = 5 at q = 2
        let total: BigInt = enumerate_classes(2, 5)
            .unwrap()
            .iter()
            .map(|c| class_size(c, 2).unwrap())
            .sum();
        assert_eq!(total, BigInt::from(9999360u64));
    }

    #[test]
    fn size_formula_spot_checks() {
        // central element: size 1
        assert_eq!(class_size(&ClassSymbol::identity(5), 3).unwrap(), BigInt::from(1));
        // regular unipotent at n=5: q^6(q^2-1)(q^3-1)(q^4-1)(q^5-1)
        let a7 = ClassSymbol::new(vec![(FrobOrbit { degree: 1, root: 0 }, p("5"))]).unwrap();
        let expect = &IntPolyQ::q_pow(6)
            * &psi(5)
                .div_exact(&IntPolyQ::q_pow_minus_one(1))
                .unwrap();
        assert_eq!(class_size_poly(&a7).unwrap(), expect);
        // unipotent Jordan block in GL(2,2): 3 elements
        let u = ClassSymbol::new(vec![(FrobOrbit { degree: 1, root: 0 }, p("2"))]).unwrap();
        assert_eq!(class_size(&u, 2).unwrap(), BigInt::from(3));
    }

    #[test]
    fn representatives_realize_symbols() {
        for (q, n) in [(2u64, 3u32), (3, 3), (2, 4)] {
            let tower = FieldTower::new(q, n).unwrap();
            for c in enumerate_classes(q, n).unwrap() {
                let m = representative_matrix(&c, &tower).unwrap();
                verify_representative(&c, &tower, &m).unwrap();
            }
        }
    }

    #[test]
    fn identity_representative() {
        let tower = FieldTower::new(3, 5).unwrap();
        let id = ClassSymbol::identity(5);
        let m = representative_matrix(&id, &tower).unwrap();
        assert_eq!(m, Mat::identity(5, tower.field(1)));
    }

    #[test]
    fn json_roundtrip() {
        let c = ClassSymbol::new(vec![
            (FrobOrbit { degree: 1, root: 2 }, p("2.1")),
            (FrobOrbit { degree: 2, root: 1 }, p("1")),
        ])
        .unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"deg\":1"));
        assert!(s.contains("\"partition\":\"2.1\""));
        let back: ClassSymbol = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
