//! Integer partitions and the combinatorial statistics used throughout.
//!
//! Partitions are stored as weakly decreasing part lists. The textual
//! form is dot-separated parts in decreasing order with exponent
//! shorthand for repeats, e.g. `2.1^3`; the empty partition prints as
//! `0`. Enumeration order is reverse lexicographic on the part lists,
//! so the partitions of 5 come out as 1^5, 2.1^3, 2^2.1, 3.1^2, 3.2,
//! 4.1, 5.

use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ| = sum of parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// r_d = number of parts equal to d, indexed 1..=largest part.
    pub fn multiplicity(&self, d: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == d).count() as u32
    }

    /// Distinct part sizes in decreasing order with multiplicities.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((d, r)) if *d == p => *r += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Conjugate partition: part r of the conjugate counts the parts of
    /// `self` that are >= r.
    pub fn conjugate(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=max)
            .map(|r| self.parts.iter().filter(|&&p| p >= r).count() as u32)
            .collect();
        Partition { parts }
    }

    /// z_ρ = ∏_d d^{r_d} r_d!, the centralizer order in S_{|ρ|} of a
    /// permutation of cycle type ρ.
    pub fn z_order(&self) -> u64 {
        let mut z = 1u64;
        for (d, r) in self.multiplicities() {
            z *= (d as u64).pow(r);
            for i in 1..=r as u64 {
                z *= i;
            }
        }
        z
    }

    /// n_λ = ½ Σ λ̄_i (λ̄_i − 1) over the conjugate parts.
    pub fn n_stat(&self) -> u32 {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| c * (c.saturating_sub(1)) / 2)
            .sum()
    }

    /// Part-wise union: multiplicities add per part size.
    pub fn add(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split('.') {
            let (base, exp) = match piece.split_once('^') {
                Some((b, e)) => (b, e),
                None => (piece, "1"),
            };
            let base: u32 = base
                .trim()
                .parse()
                .map_err(|_| Error::BadPartition(s.to_string()))?;
            let exp: u32 = exp
                .trim()
                .parse()
                .map_err(|_| Error::BadPartition(s.to_string()))?;
            if base == 0 || exp == 0 {
                return Err(Error::BadPartition(s.to_string()));
            }
            for _ in 0..exp {
                parts.push(base);
            }
        }
        Ok(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, r) in self.multiplicities() {
            if !first {
                write!(f, ".")?;
            }
            first = false;
            if r == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{r}")?;
            }
        }
        Ok(())
    }
}

/// All partitions of n in reverse lexicographic order (1^n first, n last).
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        // Leading (largest) part ascending gives reverse lex overall.
        for part in 1..=max_part.min(remaining) {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("1^5").conjugate(), p("5"));
        assert_eq!(p("2.1^3").conjugate(), p("4.1"));
        assert_eq!(p("3.2").conjugate(), p("2.2.1"));
    }

    #[test]
    fn z_order_examples() {
        assert_eq!(p("1^5").z_order(), 120);
        assert_eq!(p("2.1^3").z_order(), 12);
        assert_eq!(p("5").z_order(), 5);
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("1^2").add(&p("2")), p("2.1^2"));
        assert_eq!(p("1").add(&p("1")), p("1^2"));
        assert_eq!(p("3").add(&p("2.1")), p("3.2.1"));
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p("1^5").n_stat(), 10);
        assert_eq!(p("5").n_stat(), 0);
        assert_eq!(p("2.1").n_stat(), 1);
    }

    #[test]
    fn enumeration_order() {
        let got: Vec<String> = enumerate_partitions(5).iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["1^5", "2.1^3", "2^2.1", "3.1^2", "3.2", "4.1", "5"]);
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let got2: Vec<String> = enumerate_partitions(2).iter().map(|x| x.to_string()).collect();
        assert_eq!(got2, ["1^2", "2"]);
    }

    #[test]
    fn class_equation_of_sn() {
        // Σ_{ρ ⊢ n} n!/z_ρ = n!
        for n in 1..=5u32 {
            let fact: u64 = (1..=n as u64).product();
            let total: u64 = enumerate_partitions(n).iter().map(|r| fact / r.z_order()).sum();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(parts in proptest::collection::vec(1u32..8, 0..8)) {
            let lam = Partition::new(parts);
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }

        #[test]
        fn display_roundtrip(parts in proptest::collection::vec(1u32..10, 0..10)) {
            let lam = Partition::new(parts);
            prop_assert_eq!(Partition::parse(&lam.to_string()).unwrap(), lam);
        }
    }
}
