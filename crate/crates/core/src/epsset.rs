//! Index sets on the dyadic mesh `ε_n = 2^{-n}`.
//!
//! A subset of the mesh is described by a periodic pattern (residues modulo a
//! modulus) together with finitely many exceptions below a threshold. The class
//! is closed under the Boolean operations, and every value is kept in a
//! canonical form (least modulus, least threshold, no redundant exceptions), so
//! derived equality is set equality.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    modulus: u64,
    residues: BTreeSet<u64>,
    threshold: u64,
    exceptions_in: BTreeSet<u64>,
    exceptions_out: BTreeSet<u64>,
}

impl IndexSet {
    /// Builds `{n : n mod m ∈ T}`, adds `ins`, removes `outs`.
    ///
    /// Exceptions must lie below `threshold`; from the threshold on the set is
    /// purely periodic.
    pub fn make_periodic(
        modulus: u64,
        residues: impl IntoIterator<Item = u64>,
        threshold: u64,
        ins: impl IntoIterator<Item = u64>,
        outs: impl IntoIterator<Item = u64>,
    ) -> Result<IndexSet> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let residues: BTreeSet<u64> = residues.into_iter().collect();
        if let Some(&r) = residues.iter().find(|&&r| r >= modulus) {
            return Err(Error::ResidueOutOfRange { residue: r, modulus });
        }
        let ins: BTreeSet<u64> = ins.into_iter().collect();
        let outs: BTreeSet<u64> = outs.into_iter().collect();
        if let Some(&n) = ins.iter().chain(outs.iter()).find(|&&n| n >= threshold) {
            return Err(Error::ExceptionAboveThreshold(n));
        }
        if let Some(&n) = ins.intersection(&outs).next() {
            return Err(Error::OverlappingExceptions(n));
        }
        Ok(IndexSet {
            modulus,
            residues,
            threshold,
            exceptions_in: ins,
            exceptions_out: outs,
        }
        .canonicalize())
    }

    /// `{n : n mod m ∈ T}` with no exceptions.
    pub fn periodic(modulus: u64, residues: impl IntoIterator<Item = u64>) -> Result<IndexSet> {
        IndexSet::make_periodic(modulus, residues, 0, [], [])
    }

    pub fn full() -> IndexSet {
        IndexSet::periodic(1, [0]).unwrap()
    }

    pub fn empty() -> IndexSet {
        IndexSet::periodic(1, []).unwrap()
    }

    pub fn evens() -> IndexSet {
        IndexSet::periodic(2, [0]).unwrap()
    }

    pub fn odds() -> IndexSet {
        IndexSet::periodic(2, [1]).unwrap()
    }

    /// A finite set of indices.
    pub fn finite(elements: impl IntoIterator<Item = u64>) -> IndexSet {
        let ins: BTreeSet<u64> = elements.into_iter().collect();
        let threshold = ins.iter().next_back().map_or(0, |&n| n + 1);
        IndexSet::make_periodic(1, [], threshold, ins, []).unwrap()
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn exceptions_in(&self) -> &BTreeSet<u64> {
        &self.exceptions_in
    }

    pub fn exceptions_out(&self) -> &BTreeSet<u64> {
        &self.exceptions_out
    }

    pub fn contains(&self, n: u64) -> bool {
        if self.exceptions_in.contains(&n) {
            return true;
        }
        !self.exceptions_out.contains(&n) && self.residues.contains(&(n % self.modulus))
    }

    fn canonicalize(self) -> IndexSet {
        let m = self.modulus;
        let period = divisors(m)
            .into_iter()
            .find(|&d| {
                (0..m).all(|r| self.residues.contains(&r) == self.residues.contains(&(r % d)))
            })
            .unwrap_or(m);
        let residues: BTreeSet<u64> = self.residues.iter().copied().filter(|&r| r < period).collect();
        let mut ins = BTreeSet::new();
        let mut outs = BTreeSet::new();
        for n in 0..self.threshold {
            let periodic = residues.contains(&(n % period));
            match (self.contains(n), periodic) {
                (true, false) => {
                    ins.insert(n);
                }
                (false, true) => {
                    outs.insert(n);
                }
                _ => {}
            }
        }
        let threshold = ins.iter().chain(outs.iter()).max().map_or(0, |&n| n + 1);
        IndexSet {
            modulus: period,
            residues,
            threshold,
            exceptions_in: ins,
            exceptions_out: outs,
        }
    }

    fn combine(&self, other: &IndexSet, op: impl Fn(bool, bool) -> bool) -> IndexSet {
        let modulus = self.modulus.lcm(&other.modulus);
        let threshold = self.threshold.max(other.threshold);
        let residues = (0..modulus)
            .filter(|&r| op(self.residues.contains(&(r % self.modulus)), other.residues.contains(&(r % other.modulus))))
            .collect::<BTreeSet<_>>();
        let mut ins = BTreeSet::new();
        let mut outs = BTreeSet::new();
        for n in 0..threshold {
            let actual = op(self.contains(n), other.contains(n));
            let periodic = residues.contains(&(n % modulus));
            if actual && !periodic {
                ins.insert(n);
            } else if !actual && periodic {
                outs.insert(n);
            }
        }
        IndexSet {
            modulus,
            residues,
            threshold,
            exceptions_in: ins,
            exceptions_out: outs,
        }
        .canonicalize()
    }

    pub fn complement(&self) -> IndexSet {
        IndexSet {
            modulus: self.modulus,
            residues: (0..self.modulus).filter(|r| !self.residues.contains(r)).collect(),
            threshold: self.threshold,
            exceptions_in: self.exceptions_out.clone(),
            exceptions_out: self.exceptions_in.clone(),
        }
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &IndexSet) -> IndexSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty() && self.exceptions_in.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.residues.len() as u64 == self.modulus && self.exceptions_out.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn is_cofinite(&self) -> bool {
        self.residues.len() as u64 == self.modulus
    }

    /// Both the set and its complement are infinite, i.e. the mesh points of
    /// each accumulate at zero. Exactly the supports of nontrivial idempotents.
    pub fn is_sharp(&self) -> bool {
        !self.is_finite() && !self.is_cofinite()
    }

    /// The set with its finitely many exceptions dropped. Two sets with the
    /// same periodic part differ only in finitely many indices.
    pub fn periodic_part(&self) -> IndexSet {
        IndexSet {
            modulus: self.modulus,
            residues: self.residues.clone(),
            threshold: 0,
            exceptions_in: BTreeSet::new(),
            exceptions_out: BTreeSet::new(),
        }
    }
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m % d == 0).collect()
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &BTreeSet<u64>) -> fmt::Result {
    f.write_str("[")?;
    for (i, n) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{n}")?;
    }
    f.write_str("]")
}

impl fmt::Display for IndexSet {
    /// Compact literal `chi{m=2;T=[0];N=0}`; `in`/`out` lists appear only when
    /// nonempty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{{m={};T=", self.modulus)?;
        write_list(f, &self.residues)?;
        write!(f, ";N={}", self.threshold)?;
        if !self.exceptions_in.is_empty() {
            f.write_str(";in=")?;
            write_list(f, &self.exceptions_in)?;
        }
        if !self.exceptions_out.is_empty() {
            f.write_str(";out=")?;
            write_list(f, &self.exceptions_out)?;
        }
        f.write_str("}")
    }
}

impl FromStr for IndexSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<IndexSet> {
        crate::expr::parse_index_set(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(m: u64, t: &[u64]) -> IndexSet {
        IndexSet::periodic(m, t.iter().copied()).unwrap()
    }

    fn members(s: &IndexSet, upto: u64) -> Vec<u64> {
        (0..=upto).filter(|&n| s.contains(n)).collect()
    }

    #[test]
    fn evens_are_canonical() {
        let e = set(2, &[0]);
        assert_eq!(e.modulus(), 2);
        assert_eq!(e.residues().iter().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(e.threshold(), 0);
    }

    #[test]
    fn modulus_is_reduced() {
        let s = set(4, &[0, 2]);
        let expected: Vec<u64> = (0..=16).filter(|n| n % 4 == 0 || n % 4 == 2).collect();
        assert_eq!(members(&s, 16), expected);
        assert_eq!(s, set(2, &[0]));
    }

    #[test]
    fn trivial_modulus_is_everything() {
        assert!(set(1, &[0]).is_full());
        assert_eq!(set(1, &[0]), IndexSet::full());
    }

    #[test]
    fn boolean_operations() {
        let evens = IndexSet::evens();
        let odds = IndexSet::odds();
        assert_eq!(evens.complement(), odds);
        assert_eq!(evens.union(&odds), IndexSet::full());
        let meet = set(3, &[0]).intersect(&set(2, &[0]));
        let expected: Vec<u64> = (0..=36).filter(|n| n % 3 == 0 && n % 2 == 0).collect();
        assert_eq!(members(&meet, 36), expected);
        assert_eq!(meet, set(6, &[0]));
    }

    #[test]
    fn sharpness_and_finiteness() {
        let f = IndexSet::finite([1, 5]);
        assert!(IndexSet::evens().is_sharp());
        assert!(!IndexSet::full().is_sharp());
        assert!(!f.is_sharp());
        assert!(f.is_finite() && !f.is_cofinite());
        assert!(f.complement().is_cofinite());
        assert!(!IndexSet::evens().is_finite() && !IndexSet::evens().is_cofinite());
        assert_eq!(members(&f, 20), vec![1, 5]);
    }

    #[test]
    fn exceptions_are_trimmed() {
        // 0 is already even, so listing it as an extra member is redundant.
        let s = IndexSet::make_periodic(2, [0], 4, [0, 3], [2]).unwrap();
        assert_eq!(s.exceptions_in().iter().copied().collect::<Vec<_>>(), vec![3]);
        assert_eq!(s.exceptions_out().iter().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(s.threshold(), 4);
        assert_eq!(members(&s, 8), vec![0, 3, 4, 6, 8]);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(IndexSet::make_periodic(2, [2], 0, [], []), Err(Error::ResidueOutOfRange { residue: 2, modulus: 2 }));
        assert_eq!(IndexSet::make_periodic(2, [0], 3, [1], [1]), Err(Error::OverlappingExceptions(1)));
        assert_eq!(IndexSet::make_periodic(2, [0], 3, [5], []), Err(Error::ExceptionAboveThreshold(5)));
        assert_eq!(IndexSet::make_periodic(0, [], 0, [], []), Err(Error::ZeroModulus));
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(IndexSet::odds().to_string(), "chi{m=2;T=[1];N=0}");
        assert_eq!(IndexSet::finite([1, 5]).to_string(), "chi{m=1;T=[];N=6;in=[1,5]}");
    }
}
