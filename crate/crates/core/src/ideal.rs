//! Ideals of a finite commutative semiring.
//!
//! An ideal is a subset containing zero, closed under addition and under
//! multiplication by arbitrary elements. Because there is no subtraction,
//! two properties that are automatic for rings become real dichotomies
//! here and drive the whole classification:
//!
//! * **subtractive** (k-ideal): `a + b in I` and `a in I` force `b in I`;
//! * primes need not be subtractive, and radicals need not be ideals of
//!   quotients in any usable sense.
//!
//! Ideal generation is a closure fixpoint; the full ideal lattice is
//! enumerated with Ganter-style next-closure so the cost scales with the
//! number of ideals rather than `2^|S|`.

use std::sync::Arc;

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::Error;
use crate::semiring::{same_ring, FiniteSemiring};

/// Closure of a seed set under addition and scalar multiplication, always
/// containing zero. This is the ideal generated by the seed.
pub(crate) fn close_mask(ring: &FiniteSemiring, seed: ElemSet) -> ElemSet {
    let n = ring.size();
    let mut members = seed.with(ring.zero());
    loop {
        let mut next = members;
        for a in members.iter() {
            for b in members.iter() {
                if b > a {
                    break;
                }
                next.insert(ring.plus(a, b));
            }
            for s in 0..n {
                next.insert(ring.times(s, a));
            }
        }
        if next == members {
            return members;
        }
        members = next;
    }
}

/// Ideal product: closure of the set of pairwise products.
pub(crate) fn product_mask(ring: &FiniteSemiring, a: ElemSet, b: ElemSet) -> ElemSet {
    let mut seed = ElemSet::empty();
    for x in a.iter() {
        for y in b.iter() {
            seed.insert(ring.times(x, y));
        }
    }
    close_mask(ring, seed)
}

/// Radical of a member set: elements with some positive power inside.
pub(crate) fn radical_mask(ring: &FiniteSemiring, members: ElemSet) -> ElemSet {
    (0..ring.size()).filter(|&s| ring.some_power_in(s, members)).collect()
}

/// `{s : s * x in members for every x in targets}`.
pub(crate) fn annihilator_mask(ring: &FiniteSemiring, targets: ElemSet) -> ElemSet {
    (0..ring.size())
        .filter(|&s| targets.iter().all(|x| ring.times(s, x) == ring.zero()))
        .collect()
}

pub(crate) fn is_prime_mask(ring: &FiniteSemiring, members: ElemSet) -> bool {
    let n = ring.size();
    if members.len() == n {
        return false; // primes are proper
    }
    for a in 0..n {
        if members.contains(a) {
            continue;
        }
        for b in a..n {
            if !members.contains(b) && members.contains(ring.times(a, b)) {
                return false;
            }
        }
    }
    true
}

/// Result of a subtractivity check, with a failing pair when negative.
/// The witness `(a, b)` satisfies `a in I`, `a + b in I`, `b not in I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubtractiveCheck {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

pub(crate) fn subtractive_mask(ring: &FiniteSemiring, members: ElemSet) -> SubtractiveCheck {
    for a in members.iter() {
        for b in 0..ring.size() {
            if !members.contains(b) && members.contains(ring.plus(a, b)) {
                return SubtractiveCheck { holds: false, witness: Some((a, b)) };
            }
        }
    }
    SubtractiveCheck { holds: true, witness: None }
}

/// An ideal of a specific semiring: a member bitset plus, when it was built
/// from generators, the generating set.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteSemiring>,
    members: ElemSet,
    generators: Option<Vec<usize>>,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal{{{}}}", self.labels().join(","))
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.members == other.members
    }
}
impl Eq for Ideal {}

impl Ideal {
    pub(crate) fn from_mask(ring: Arc<FiniteSemiring>, members: ElemSet) -> Ideal {
        Ideal { ring, members, generators: None }
    }

    pub fn ring(&self) -> &Arc<FiniteSemiring> {
        &self.ring
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_zero(&self) -> bool {
        self.members == ElemSet::singleton(self.ring.zero())
    }

    pub fn is_unit(&self) -> bool {
        self.members.len() == self.ring.size()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.members.is_subset_of(other.members)
    }

    /// Member labels in sorted order (the serialized form).
    pub fn labels(&self) -> Vec<String> {
        let mut ls: Vec<String> = self.members.iter().map(|i| self.ring.label(i).to_string()).collect();
        ls.sort();
        ls
    }

    fn check_same(&self, other: &Ideal) -> Result<(), Error> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::MixedSemirings)
        }
    }

    /// Smallest ideal containing both (closure of the union).
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, Error> {
        self.check_same(other)?;
        Ok(Ideal::from_mask(self.ring.clone(), close_mask(&self.ring, self.members.union(other.members))))
    }

    /// Ideal generated by pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal, Error> {
        self.check_same(other)?;
        Ok(Ideal::from_mask(self.ring.clone(), product_mask(&self.ring, self.members, other.members)))
    }

    /// Set intersection (always an ideal).
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, Error> {
        self.check_same(other)?;
        Ok(Ideal::from_mask(self.ring.clone(), self.members.intersect(other.members)))
    }

    /// `I^k`, with `I^0` the unit ideal.
    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = unit_ideal(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `{s : s^n in I for some n >= 1}`. Computed directly from power
    /// orbits; agrees with the intersection of primes over `I` (see the
    /// lattice-level regression tests).
    pub fn radical(&self) -> Ideal {
        Ideal::from_mask(self.ring.clone(), radical_mask(&self.ring, self.members))
    }

    pub fn is_subtractive(&self) -> SubtractiveCheck {
        subtractive_mask(&self.ring, self.members)
    }

    /// Proper, and `ab in I` implies `a in I` or `b in I`.
    pub fn is_prime(&self) -> bool {
        is_prime_mask(&self.ring, self.members)
    }
}

/// The ideal generated by a list of elements.
pub fn ideal_generated(ring: &Arc<FiniteSemiring>, gens: &[usize]) -> Ideal {
    let seed: ElemSet = gens.iter().copied().collect();
    let mut gen_list: Vec<usize> = seed.iter().collect();
    gen_list.sort_unstable();
    Ideal {
        ring: ring.clone(),
        members: close_mask(ring, seed),
        generators: Some(gen_list),
    }
}

pub fn zero_ideal(ring: &Arc<FiniteSemiring>) -> Ideal {
    Ideal::from_mask(ring.clone(), ElemSet::singleton(ring.zero()))
}

pub fn unit_ideal(ring: &Arc<FiniteSemiring>) -> Ideal {
    Ideal::from_mask(ring.clone(), ElemSet::full(ring.size()))
}

/// Annihilator of a set of elements. Annihilators are always subtractive,
/// which is what makes associated primes useful.
pub fn annihilator(ring: &Arc<FiniteSemiring>, targets: ElemSet) -> Ideal {
    Ideal::from_mask(ring.clone(), annihilator_mask(ring, targets))
}

/// Nilradical `{s : s^n = 0}`, computed from power orbits without
/// enumerating the lattice.
pub fn nil_radical(ring: &Arc<FiniteSemiring>) -> Ideal {
    zero_ideal(ring).radical()
}

/// Witness that a semiring is not subtractive: a 2-generated ideal and the
/// failing pair inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtractivityWitness {
    pub generators: (usize, usize),
    pub ideal: Ideal,
    /// `pair = (a, b)` with `a` and `a + b` in the ideal but `b` outside.
    pub pair: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtractivityReport {
    pub holds: bool,
    pub witness: Option<SubtractivityWitness>,
}

/// Whether every ideal is subtractive.
///
/// It suffices to scan 2-generated ideals: if `a, a + b in I` for an
/// arbitrary ideal `I`, the 2-generated ideal `(a, a + b)` sits inside `I`
/// and already exhibits the failure.
pub fn is_subtractive_semiring(ring: &Arc<FiniteSemiring>) -> SubtractivityReport {
    let n = ring.size();
    for x in 0..n {
        for y in x..n {
            let ideal = ideal_generated(ring, &[x, y]);
            let check = ideal.is_subtractive();
            if let Some(pair) = check.witness {
                return SubtractivityReport {
                    holds: false,
                    witness: Some(SubtractivityWitness { generators: (x, y), ideal, pair }),
                };
            }
        }
    }
    SubtractivityReport { holds: true, witness: None }
}

/// The complete ideal lattice of a semiring, sorted by (size, member mask).
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ring: Arc<FiniteSemiring>,
    ideals: Vec<Ideal>,
}

impl IdealLattice {
    pub fn ring(&self) -> &Arc<FiniteSemiring> {
        &self.ring
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn contains_members(&self, members: ElemSet) -> bool {
        self.ideals.iter().any(|i| i.members() == members)
    }

    /// All prime ideals.
    pub fn primes(&self) -> Vec<Ideal> {
        self.ideals.iter().filter(|i| i.is_prime()).cloned().collect()
    }

    /// Primes minimal under inclusion.
    pub fn minimal_primes(&self) -> Vec<Ideal> {
        let primes = self.primes();
        primes
            .iter()
            .filter(|p| !primes.iter().any(|q| q.members() != p.members() && q.is_subset_of(p)))
            .cloned()
            .collect()
    }

    /// Proper ideals maximal under inclusion.
    pub fn maximal_ideals(&self) -> Vec<Ideal> {
        let proper: Vec<&Ideal> = self.ideals.iter().filter(|i| !i.is_unit()).collect();
        proper
            .iter()
            .filter(|i| !proper.iter().any(|j| j.members() != i.members() && i.is_subset_of(j)))
            .map(|i| (*i).clone())
            .collect()
    }
}

/// Enumerate every ideal via next-closure.
///
/// The closure operator is ideal generation; closed sets are exactly the
/// ideals. Work is proportional to the number of ideals times `|S|`
/// closures, so carriers whose lattices are small stay cheap even near the
/// cap. The cap guards against carriers whose lattices explode.
pub fn enumerate_ideals(ring: &Arc<FiniteSemiring>, cap: usize) -> Result<IdealLattice, Error> {
    let n = ring.size();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let mut ideals: Vec<Ideal> = next_closure_masks(n, &|seed| close_mask(ring, seed))
        .into_iter()
        .map(|members| Ideal::from_mask(ring.clone(), members))
        .collect();
    ideals.sort_by_key(|i| (i.members().len(), i.members().mask()));
    Ok(IdealLattice { ring: ring.clone(), ideals })
}

/// Enumerates every closed set of an arbitrary closure operator on
/// `{0, .., n-1}` via next-closure.  The closure must be extensive,
/// monotone and idempotent; the caller picks what "closed" means (ideals,
/// subsemimodules, ...).
pub(crate) fn next_closure_masks(n: usize, close: &dyn Fn(ElemSet) -> ElemSet) -> Vec<ElemSet> {
    let mut out = Vec::new();
    let mut current = close(ElemSet::empty());
    loop {
        out.push(current);
        // Lectic successor: try flipping each absent element from the top,
        // keeping everything below it that is already present.
        let mut next: Option<ElemSet> = None;
        for i in (0..n).rev() {
            if current.contains(i) {
                continue;
            }
            let candidate = close(current.below(i).with(i));
            if candidate.below(i).is_subset_of(current.below(i)) {
                next = Some(candidate);
                break;
            }
        }
        match next {
            Some(c) => current = c,
            None => break,
        }
    }
    out
}
