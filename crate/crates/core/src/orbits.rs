//! Orbits of multiplication by q on Z/(q^s − 1).
//!
//! An orbit {k, kq, …, kq^{s−1}} with s distinct elements labels, at the
//! same time, a monic irreducible degree-s polynomial over GF(q) with
//! nonzero constant term (via its root ω_s^k) and an s-simplex of dual
//! variables. The canonical representative is the minimum element; the
//! textual form is `s:k`.

use crate::error::{Error, Result};
use crate::gf::{Elt, FieldTower, SmallField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrobOrbit {
    pub degree: u32,
    pub root: u64, // canonical (minimal) representative in [0, q^degree - 1)
}

impl FrobOrbit {
    /// The orbit through k at level s; returns its canonical form and
    /// exact degree (which may be a proper divisor of s).
    pub fn through(q: u64, s: u32, k: u64) -> FrobOrbit {
        let m = q.pow(s) - 1;
        let k = k % m;
        let mut min = k;
        let mut len = 1u32;
        let mut cur = k * q % m;
        while cur != k {
            min = min.min(cur);
            len += 1;
            cur = cur * q % m;
        }
        // exact degree d: the orbit of k mod q^s-1 has size d | s, and k
        // is a multiple of (q^s-1)/(q^d-1); renormalize the root
        let d = len;
        if d == s {
            FrobOrbit { degree: d, root: min }
        } else {
            let scale = m / (q.pow(d) - 1);
            debug_assert_eq!(min % scale, 0);
            FrobOrbit {
                degree: d,
                root: min / scale,
            }
        }
    }

    /// Orbit elements at its own level, starting from the canonical root.
    pub fn elements(&self, q: u64) -> Vec<u64> {
        let m = q.pow(self.degree) - 1;
        let mut out = Vec::with_capacity(self.degree as usize);
        let mut cur = self.root;
        for _ in 0..self.degree {
            out.push(cur);
            cur = cur * q % m;
        }
        out
    }

    pub fn to_text(&self) -> String {
        format!("{}:{}", self.degree, self.root)
    }

    pub fn parse(s: &str) -> Result<FrobOrbit> {
        let (d, k) = s
            .split_once(':')
            .ok_or_else(|| Error::BadSymbol(format!("orbit `{s}`")))?;
        let degree: u32 = d
            .trim()
            .parse()
            .map_err(|_| Error::BadSymbol(format!("orbit `{s}`")))?;
        let root: u64 = k
            .trim()
            .parse()
            .map_err(|_| Error::BadSymbol(format!("orbit `{s}`")))?;
        Ok(FrobOrbit { degree, root })
    }

    /// Checks canonical form and exact degree at the given q.
    pub fn validate(&self, q: u64) -> Result<()> {
        let canon = FrobOrbit::through(q, self.degree, self.root);
        if canon != *self {
            return Err(Error::BadSymbol(format!(
                "orbit {} is not canonical of exact degree at q={q}",
                self.to_text()
            )));
        }
        Ok(())
    }
}

/// All exact-degree-s orbits, sorted by canonical root.
pub fn enumerate_orbits(q: u64, s: u32) -> Vec<FrobOrbit> {
    let m = q.pow(s) - 1;
    let mut seen = vec![false; m as usize];
    let mut out = Vec::new();
    for k in 0..m {
        if seen[k as usize] {
            continue;
        }
        let mut cur = k;
        let mut len = 0u32;
        loop {
            seen[cur as usize] = true;
            len += 1;
            cur = cur * q % m;
            if cur == k {
                break;
            }
        }
        if len == s {
            out.push(FrobOrbit { degree: s, root: k });
        }
    }
    out
}

/// ∏_{u<s}(t − ω_s^{k q^u}): the monic irreducible polynomial attached
/// to the orbit, with coefficients as elements of the level-1 field.
pub fn min_poly(orbit: &FrobOrbit, tower: &FieldTower) -> Result<Vec<Elt>> {
    let q = tower.q();
    orbit.validate(q)?;
    let s = orbit.degree;
    let f = tower.field(s);
    let mut coeffs: Vec<Elt> = vec![f.one()];
    for a in orbit.elements(q) {
        let root = tower.omega_pow(s, a as i64);
        let mut next = vec![SmallField::ZERO; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(c, root));
        }
        coeffs = next;
    }
    // push each coefficient down to the level-1 field
    let f1 = tower.field(1);
    coeffs
        .into_iter()
        .map(|c| {
            Ok(match tower.subfield_log(s, c)? {
                None => SmallField::ZERO,
                Some(j) => {
                    let m1 = (f1.order() - 1) as i64;
                    tower.omega_pow(1, (j as i64).rem_euclid(m1))
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_counts() {
        // s=1: every residue is a fixed point
        assert_eq!(enumerate_orbits(3, 1).len(), 2);
        assert_eq!(enumerate_orbits(2, 1).len(), 1);
        // q=2, s=2: single orbit {1,2} mod 3
        let o = enumerate_orbits(2, 2);
        assert_eq!(o.len(), 1);
        assert_eq!(o[0], FrobOrbit { degree: 2, root: 1 });
        assert_eq!(o[0].elements(2), vec![1, 2]);
        // q=2, s=5: six orbits, matching the irreducible quintic count
        assert_eq!(enumerate_orbits(2, 5).len(), 6);
    }

    #[test]
    fn orbit_count_identity() {
        // Σ_{d|s} d·#orbits(q,d) = q^s − 1
        for q in [2u64, 3, 4, 5, 7] {
            for s in 1..=5u32 {
                let total: u64 = (1..=s)
                    .filter(|d| s % d == 0)
                    .map(|d| d as u64 * enumerate_orbits(q, d).len() as u64)
                    .sum();
                assert_eq!(total, q.pow(s) - 1, "q={q} s={s}");
            }
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        for q in [2u64, 3, 5] {
            for s in 1..=4u32 {
                for k in 0..q.pow(s) - 1 {
                    let o = FrobOrbit::through(q, s, k);
                    let o2 = FrobOrbit::through(q, o.degree, o.root);
                    assert_eq!(o, o2);
                    let oq = FrobOrbit::through(q, s, k * q % (q.pow(s) - 1));
                    assert_eq!(o, oq, "q-multiplication invariance");
                }
            }
        }
    }

    #[test]
    fn degree_collapse() {
        // k = 0 at any level collapses to the degree-1 orbit {0}
        let o = FrobOrbit::through(2, 3, 0);
        assert_eq!(o, FrobOrbit { degree: 1, root: 0 });
        // q=2, s=2, k=0 likewise
        let o = FrobOrbit::through(3, 2, 4); // {4, 12 mod 8 = 4}: 4 = (9-1)/(3-1)*1
        assert_eq!(o, FrobOrbit { degree: 1, root: 1 });
    }

    #[test]
    fn min_polys_over_gf2() {
        let tower = FieldTower::new(2, 5).unwrap();
        // orbit {0} at s=1: t + 1
        let f = min_poly(&FrobOrbit { degree: 1, root: 0 }, &tower).unwrap();
        assert_eq!(f, vec![1, 1]);
        // orbit {1,2} at s=2: t^2 + t + 1
        let f = min_poly(&FrobOrbit { degree: 2, root: 1 }, &tower).unwrap();
        assert_eq!(f, vec![1, 1, 1]);
        // every degree-5 orbit gives a monic quintic with f(ω_5^k) = 0
        for o in enumerate_orbits(2, 5) {
            let f = min_poly(&o, &tower).unwrap();
            assert_eq!(f.len(), 6);
            assert_eq!(*f.last().unwrap(), tower.field(1).one());
            assert_ne!(f[0], 0, "constant term nonzero");
        }
    }

    #[test]
    fn min_polys_distinct_and_root_checked() {
        for q in [2u64, 3] {
            let tower = FieldTower::new(q, 3).unwrap();
            for s in 1..=3u32 {
                let orbits = enumerate_orbits(q, s);
                let mut polys = std::collections::HashSet::new();
                for o in &orbits {
                    let f = min_poly(o, &tower).unwrap();
                    assert!(polys.insert(f.clone()), "duplicate min poly");
                    // evaluate at ω_s^root inside level s
                    let fld = tower.field(s);
                    let x = tower.omega_pow(s, o.root as i64);
                    let mut acc = crate::gf::SmallField::ZERO;
                    for &c in f.iter().rev() {
                        // lift level-1 coefficient into level s
                        let cj = tower.subfield_log_of_level1(c);
                        let lifted = match cj {
                            None => 0,
                            Some(j) => tower.embed_base(s, j),
                        };
                        acc = fld.add(fld.mul(acc, x), lifted);
                    }
                    assert_eq!(acc, 0, "q={q} orbit {}", o.to_text());
                }
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        let o = FrobOrbit { degree: 3, root: 11 };
        assert_eq!(o.to_text(), "3:11");
        assert_eq!(FrobOrbit::parse("3:11").unwrap(), o);
        assert!(FrobOrbit::parse("3").is_err());
    }
}
