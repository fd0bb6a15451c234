//! Modes of substituting the variables X^ρ into a class or dual symbol,
//! and the weights Q(m,c) and χ(m,e).
//!
//! A variable of degree w may land on a target orbit of degree d only
//! when d | w, contributing a part w/d to the target's shape ρ(m,f).
//! A mode is the equivalence class of such substitutions recorded by
//! the map f ↦ ρ(m,f); it must satisfy |ρ(m,f)| = |ν(f)| for every f of
//! the symbol. The weights are
//!
//!   Q(m,c) = ∏_f (1/z_{ρ(m,f)}) Q^{ν_c(f)}_{ρ(m,f)}(q^{deg f})
//!   χ(m,e) = ∏_g (1/z_{ρ(m,g)}) χ^{ν_e(g)}_{ρ(m,g)}
//!
//! and the h-vector attaches to each degree-d variable landing on the
//! orbit with root k (degree s) the exponent k·(q^d−1)/(q^s−1) mod q^d−1.

use crate::class_space::ClassSymbol;
use crate::dual_space::DualSymbol;
use crate::error::{Error, Result};
use crate::hall_green::GreenTable;
use crate::orbits::FrobOrbit;
use crate::partitions::{enumerate_partitions, Partition};
use crate::poly::IntPolyQ;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mode {
    rho: Partition,
    targets: Vec<(FrobOrbit, Partition)>, // sorted by orbit; shapes ρ(m,f)
}

impl Mode {
    pub fn rho(&self) -> &Partition {
        &self.rho
    }

    pub fn targets(&self) -> &[(FrobOrbit, Partition)] {
        &self.targets
    }

    pub fn shape_of(&self, orbit: &FrobOrbit) -> Option<&Partition> {
        self.targets
            .iter()
            .find(|(o, _)| o == orbit)
            .map(|(_, p)| p)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> ", self.rho)?;
        let mut first = true;
        for (o, p) in &self.targets {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "[{}]:{p}", o.to_text())?;
        }
        Ok(())
    }
}

/// All modes of substituting X^ρ into the given symbol entries, in a
/// deterministic order.
pub fn modes_into(rho: &Partition, entries: &[(FrobOrbit, Partition)]) -> Vec<Mode> {
    let n: u32 = entries.iter().map(|(o, p)| o.degree * p.size()).sum();
    if rho.size() != n {
        return Vec::new();
    }
    // multiset of ρ parts to cover
    let mut need: BTreeMap<u32, i32> = BTreeMap::new();
    for &part in rho.parts() {
        *need.entry(part).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    let mut shapes: Vec<Partition> = Vec::new();
    fn rec(
        entries: &[(FrobOrbit, Partition)],
        idx: usize,
        need: &mut BTreeMap<u32, i32>,
        shapes: &mut Vec<Partition>,
        rho: &Partition,
        out: &mut Vec<Mode>,
    ) {
        if idx == entries.len() {
            if need.values().all(|&v| v == 0) {
                out.push(Mode {
                    rho: rho.clone(),
                    targets: entries
                        .iter()
                        .map(|(o, _)| *o)
                        .zip(shapes.iter().cloned())
                        .collect(),
                });
            }
            return;
        }
        let (orbit, nu) = &entries[idx];
        let d = orbit.degree;
        for shape in enumerate_partitions(nu.size()) {
            // this shape consumes a part i·d of ρ per part i of the shape
            let mut ok = true;
            for &i in shape.parts() {
                let e = need.entry(i * d).or_insert(0);
                *e -= 1;
                if *e < 0 {
                    ok = false;
                }
            }
            if ok {
                shapes.push(shape.clone());
                rec(entries, idx + 1, need, shapes, rho, out);
                shapes.pop();
            }
            for &i in shape.parts() {
                *need.entry(i * d).or_insert(0) += 1;
            }
        }
    }
    rec(entries, 0, &mut need, &mut shapes, rho, &mut out);
    out.sort();
    out
}

pub fn modes_into_class(rho: &Partition, c: &ClassSymbol) -> Vec<Mode> {
    modes_into(rho, c.entries())
}

pub fn modes_into_dual(rho: &Partition, e: &DualSymbol) -> Vec<Mode> {
    modes_into(rho, e.entries())
}

/// Q(m,c) in split form: a rational scalar ∏ 1/z and the polynomial
/// ∏ Q^{ν_c(f)}_{ρ(m,f)}(q^{deg f}).
pub fn q_weight_sym(
    table: &GreenTable,
    m: &Mode,
    c: &ClassSymbol,
) -> Result<(BigRational, IntPolyQ)> {
    let mut scalar = BigRational::one();
    let mut poly = IntPolyQ::one();
    for (orbit, nu) in c.entries() {
        let shape = m.shape_of(orbit).ok_or_else(|| {
            Error::Invariant(format!("mode misses orbit {}", orbit.to_text()))
        })?;
        scalar /= BigRational::from_integer(BigInt::from(shape.z_order()));
        let g = table.green_poly(nu, shape)?;
        poly = &poly * &g.subst_q_pow(orbit.degree as usize);
    }
    Ok((scalar, poly))
}

/// Q(m,c) evaluated at a concrete q.
pub fn q_weight(table: &GreenTable, m: &Mode, c: &ClassSymbol, q: u64) -> Result<BigRational> {
    let (scalar, poly) = q_weight_sym(table, m, c)?;
    Ok(scalar * BigRational::from_integer(poly.eval_u64(q)))
}

/// χ(m,e) = ∏_g (1/z_{ρ(m,g)}) χ^{ν_e(g)}_{ρ(m,g)}, a rational constant.
pub fn chi_weight(table: &GreenTable, m: &Mode, e: &DualSymbol) -> Result<BigRational> {
    let mut out = BigRational::one();
    for (orbit, nu) in e.entries() {
        let shape = m.shape_of(orbit).ok_or_else(|| {
            Error::Invariant(format!("mode misses orbit {}", orbit.to_text()))
        })?;
        let chi = table.sym_char(nu, shape)?;
        out *= BigRational::new(chi, BigInt::from(shape.z_order()));
    }
    Ok(out)
}

/// Per-degree exponents of a mode: for each variable degree d, the
/// multiset of values root·(q^d−1)/(q^s−1) mod (q^d−1) contributed by
/// the parts of the target shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    pub per_degree: BTreeMap<u32, Vec<u64>>,
}

pub fn h_vector(m: &Mode, q: u64) -> HVector {
    h_vector_with_roots(m, q, &|o: &FrobOrbit| o.root)
}

/// Same with an explicit choice of root within each orbit (the choice
/// must lie on the orbit; used to check root-irrelevance).
pub fn h_vector_with_roots(m: &Mode, q: u64, root_of: &dyn Fn(&FrobOrbit) -> u64) -> HVector {
    let mut per_degree: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
    for (orbit, shape) in m.targets() {
        let s = orbit.degree;
        let k = root_of(orbit);
        for &i in shape.parts() {
            let d = i * s;
            let md = q.pow(d) - 1;
            let h = (k as u128 * ((md / (q.pow(s) - 1)) as u128) % md as u128) as u64;
            per_degree.entry(d).or_default().push(h);
        }
    }
    for v in per_degree.values_mut() {
        v.sort_unstable();
    }
    HVector { per_degree }
}
