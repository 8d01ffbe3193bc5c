//! Zero-divisor structure of finite semirings: the set `Z(S)`, associated
//! primes, very few zero-divisors, Property (A), primal semirings, the zd
//! degree, and the transfer of all of it to polynomial semirings.
//!
//! For finite semirings the headline theorem (every Noetherian semiring
//! has very few zero-divisors) is decidable outright: `Z(S)` is covered by
//! the associated primes `Ann(a)`.  The *zd degree* counts the maximal
//! primes of `Z(S)` in its unique irredundant prime cover; a semiring is
//! *primal* (`Z(S)` an ideal) exactly when that degree is one.

use serde::Serialize;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::Error;
use crate::ideal::{annihilator, enumerate_ideals, Ideal, IdealLattice};
use crate::poly::gaussian::is_weak_gaussian;
use crate::poly::Polynomial;
use crate::semiring::FiniteSemiring;
use crate::sweep::{checked_power, decode_base, SweepBudget};

/// `Z(S) = {s : ss' = 0 for some s' ≠ 0}`.  Contains `0` whenever the
/// semiring has a second element (`0·1 = 0` with `1 ≠ 0`).
pub fn zero_divisors(ring: &FiniteSemiring) -> ElemSet {
    let n = ring.size();
    let mut z = ElemSet::empty();
    for a in 0..n {
        for b in 0..n {
            if b != ring.zero() && ring.times(a, b) == ring.zero() {
                z.insert(a);
                break;
            }
        }
    }
    z
}

/// The associated primes: `{Ann(a) : a ≠ 0}` filtered to primes, without
/// duplicates, sorted by (size, mask).
pub fn ass_primes(ring: &Arc<FiniteSemiring>) -> Vec<Ideal> {
    let mut primes: Vec<Ideal> = Vec::new();
    for a in 0..ring.size() {
        if a == ring.zero() {
            continue;
        }
        let ann = annihilator(ring, ElemSet::singleton(a));
        if ann.is_prime() && !primes.contains(&ann) {
            primes.push(ann);
        }
    }
    primes.sort_by_key(|p| (p.members().len(), p.members().mask()));
    primes
}

/// `Z(S)` is the union of the associated primes.  (The reverse inclusion
/// is automatic: `a ≠ 0` and `s ∈ Ann(a)` make `s` a zero-divisor.)
pub fn very_few_zero_divisors(ring: &Arc<FiniteSemiring>) -> bool {
    let z = zero_divisors(ring);
    let mut union = ElemSet::empty();
    for p in ass_primes(ring) {
        union = union.union(p.members());
    }
    z.is_subset_of(union)
}

/// Outcome of [`property_a`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyAReport {
    pub holds: bool,
    pub subsets_checked: u64,
    /// Generators of an ideal inside `Z(S)` whose annihilator is zero.
    pub witness: Option<Vec<String>>,
}

/// Property (A): every finitely generated ideal inside `Z(S)` has a
/// nonzero annihilator.  Every ideal of a finite semiring is generated by
/// its own elements, so subsets of `Z(S)` exhaust the candidates; the
/// annihilator of the generated ideal is `∩ Ann(g)` over the generators.
pub fn property_a(ring: &Arc<FiniteSemiring>, cap: u32) -> Result<PropertyAReport, Error> {
    let z = zero_divisors(ring);
    if z.len() > cap as usize {
        return Err(Error::CapExceeded { size: z.len(), cap: cap as usize });
    }
    let members: Vec<usize> = z.iter().collect();
    let subsets = 1u64 << members.len();
    let full = ElemSet::full(ring.size());
    for pick in 1..subsets {
        let gens: Vec<usize> = members
            .iter()
            .enumerate()
            .filter(|(k, _)| pick >> k & 1 == 1)
            .map(|(_, &g)| g)
            .collect();
        // Ann(ideal(G)) = ∩ Ann(g): scalars kill the ideal exactly when
        // they kill each generator.
        let mut ann = full;
        for &g in &gens {
            ann = ann.intersect(annihilator(ring, ElemSet::singleton(g)).members());
        }
        if ann.len() > 1 {
            continue;
        }
        // Only ideals that stay inside Z(S) count as counterexamples.
        let ideal_mask = crate::ideal::close_mask(ring, gens.iter().copied().collect());
        if !ideal_mask.is_subset_of(z) {
            continue;
        }
        return Ok(PropertyAReport {
            holds: false,
            subsets_checked: pick,
            witness: Some(gens.iter().map(|&g| ring.label(g).to_string()).collect()),
        });
    }
    Ok(PropertyAReport { holds: true, subsets_checked: subsets - 1, witness: None })
}

/// Primal: `Z(S)` is an ideal.  Multiplicative absorption is automatic
/// (`(sz)z' = s(zz') = 0`), so additivity is the real content.
pub fn is_primal(ring: &FiniteSemiring) -> bool {
    let z = zero_divisors(ring);
    for a in z.iter() {
        for b in z.iter() {
            if !z.contains(ring.plus(a, b)) {
                return false;
            }
        }
        for s in 0..ring.size() {
            if !z.contains(ring.times(s, a)) {
                return false;
            }
        }
    }
    true
}

/// All primes of the lattice contained in `Z(S)`, and the maximal ones.
fn primes_in_z(lattice: &IdealLattice, z: ElemSet) -> (Vec<Ideal>, Vec<Ideal>) {
    let inside: Vec<Ideal> = lattice
        .primes()
        .into_iter()
        .filter(|p| p.members().is_subset_of(z))
        .collect();
    let maximal: Vec<Ideal> = inside
        .iter()
        .filter(|p| {
            !inside
                .iter()
                .any(|q| p.members() != q.members() && p.members().is_subset_of(q.members()))
        })
        .cloned()
        .collect();
    (inside, maximal)
}

/// Drops members covered by the union of the rest, in deterministic
/// order, until the cover is irredundant.
fn irredundant(mut cover: Vec<Ideal>) -> Vec<Ideal> {
    loop {
        let mut dropped = false;
        for k in 0..cover.len() {
            let mut rest = ElemSet::empty();
            for (j, p) in cover.iter().enumerate() {
                if j != k {
                    rest = rest.union(p.members());
                }
            }
            if cover[k].members().is_subset_of(rest) {
                cover.remove(k);
                dropped = true;
                break;
            }
        }
        if !dropped {
            return cover;
        }
    }
}

/// Outcome of [`zd_degree`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZdDegreeReport {
    /// `None` when `Z(S)` has no prime cover.
    pub degree: Option<u32>,
    /// Member labels of each prime in the irredundant cover.
    pub cover: Vec<Vec<String>>,
}

/// The zd degree: the size of the unique irredundant prime cover of
/// `Z(S)`, or `None` when no prime cover exists.  Defined (per the
/// uniqueness argument, which runs on subtractive primes) only for weak
/// Gaussian semirings; other inputs are refused.
pub fn zd_degree(
    ring: &Arc<FiniteSemiring>,
    lattice_cap: usize,
) -> Result<ZdDegreeReport, Error> {
    if !is_weak_gaussian(ring, lattice_cap)?.holds {
        return Err(Error::NotWeakGaussian);
    }
    let lattice = enumerate_ideals(ring, lattice_cap)?;
    let z = zero_divisors(ring);
    let (_, maximal) = primes_in_z(&lattice, z);
    let mut union = ElemSet::empty();
    for p in &maximal {
        union = union.union(p.members());
    }
    if union != z {
        // Any prime cover could be enlarged to the maximal ones, so no
        // cover exists at all.
        return Ok(ZdDegreeReport { degree: None, cover: Vec::new() });
    }
    let cover = irredundant(maximal);
    Ok(ZdDegreeReport {
        degree: Some(cover.len() as u32),
        cover: cover.iter().map(Ideal::labels).collect(),
    })
}

/// Everything the classification report needs about `Z(S)` in one pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorProfile {
    pub zset: Vec<String>,
    pub ass_primes: Vec<Vec<String>>,
    pub maximal_primes_of_z: Vec<Vec<String>>,
    pub very_few: bool,
    pub property_a: bool,
    pub primal: bool,
    /// A prime cover of `Z(S)` exists.
    pub few: bool,
    pub zd_degree: Option<u32>,
}

/// Assembles the full zero-divisor profile.  `zd_degree` is only
/// populated for weak Gaussian semirings (elsewhere the notion is
/// undefined); `few` records whether a prime cover exists either way.
pub fn zero_divisor_profile(
    ring: &Arc<FiniteSemiring>,
    lattice_cap: usize,
) -> Result<ZeroDivisorProfile, Error> {
    let z = zero_divisors(ring);
    let lattice = enumerate_ideals(ring, lattice_cap)?;
    let (_, maximal) = primes_in_z(&lattice, z);
    let mut union = ElemSet::empty();
    for p in &maximal {
        union = union.union(p.members());
    }
    let few = union == z;
    let zd = match zd_degree(ring, lattice_cap) {
        Ok(report) => report.degree,
        Err(Error::NotWeakGaussian) => None,
        Err(other) => return Err(other),
    };
    Ok(ZeroDivisorProfile {
        zset: z.iter().map(|i| ring.label(i).to_string()).collect(),
        ass_primes: ass_primes(ring).iter().map(Ideal::labels).collect(),
        maximal_primes_of_z: maximal.iter().map(Ideal::labels).collect(),
        very_few: very_few_zero_divisors(ring),
        property_a: property_a(ring, 16)?.holds,
        primal: is_primal(ring),
        few,
        zd_degree: zd,
    })
}

/// Outcome of [`poly_transfer_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyTransferReport {
    pub degree_bound: u32,
    pub polys: u64,
    /// Every bounded zero-divisor has its content inside some maximal
    /// prime of `Z(S)`.
    pub cover_holds: bool,
    /// Bounded zero-divisor status coincides with `c(f) ⊆ pᵢ for some i`
    /// in both directions.
    pub membership_agrees: bool,
    /// For primal Property-(A) semirings: the bounded zero-divisors are
    /// closed under addition and scalar multiples.
    pub closure_holds: Option<bool>,
    /// The irredundant cover of the bounded zero-divisors needs exactly
    /// `zd(S)` of the maximal primes.
    pub zd_matches: Option<bool>,
    pub witness: Option<String>,
}

/// Bounded transfer of the zero-divisor theory to `S[X]`: zero-divisors of
/// degree ≤ D are exactly the polynomials with content inside a maximal
/// prime of `Z(S)`, closure under the semimodule operations holds in the
/// primal Property-(A) case, and the zd degree is preserved.  Requires a
/// subtractive scalar semiring, where these are theorems; elsewhere the
/// bounded verdicts would not be meaningful.
pub fn poly_transfer_check(
    ring: &Arc<FiniteSemiring>,
    degree_bound: u32,
    lattice_cap: usize,
    budget: &SweepBudget,
) -> Result<PolyTransferReport, Error> {
    if !crate::ideal::is_subtractive_semiring(ring).holds {
        return Err(Error::Precondition(
            "polynomial transfer is checked over subtractive semirings only".into(),
        ));
    }
    let n = ring.size() as u64;
    let len = degree_bound as usize + 1;
    let polys = checked_power(n, len as u32)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    let pair_work = polys
        .checked_mul(polys)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    budget.admit(pair_work)?;

    let lattice = enumerate_ideals(ring, lattice_cap)?;
    let z = zero_divisors(ring);
    let (_, maximal) = primes_in_z(&lattice, z);
    let zero = ring.zero();

    let coeffs_of = |idx: u64| decode_base(idx, n, len);
    let is_zero_poly = |c: &[usize]| c.iter().all(|&x| x == zero);
    // f is a bounded zero-divisor: some nonzero g of degree ≤ D kills it.
    let bounded_zd = |fc: &[usize]| -> bool {
        (0..polys).any(|gi| {
            let gc = coeffs_of(gi);
            if is_zero_poly(&gc) {
                return false;
            }
            let mut conv = vec![zero; 2 * len - 1];
            for (i, &a) in fc.iter().enumerate() {
                for (j, &b) in gc.iter().enumerate() {
                    conv[i + j] = ring.plus(conv[i + j], ring.times(a, b));
                }
            }
            conv.iter().all(|&x| x == zero)
        })
    };
    let content_covered = |fc: &[usize]| -> Option<usize> {
        maximal.iter().position(|p| fc.iter().all(|&c| p.members().contains(c)))
    };

    let mut zd_flags = vec![false; polys as usize];
    let mut cover_holds = true;
    let mut membership_agrees = true;
    let mut witness = None;
    let mut used = vec![false; maximal.len()];
    for fi in 0..polys {
        let fc = coeffs_of(fi);
        let lhs = is_zero_poly(&fc) || bounded_zd(&fc);
        zd_flags[fi as usize] = lhs;
        let covered = content_covered(&fc);
        if lhs != covered.is_some() {
            membership_agrees = false;
            if lhs && covered.is_none() {
                cover_holds = false;
            }
            if witness.is_none() {
                witness =
                    Some(Polynomial::univariate(ring, "X", &fc).to_string());
            }
        }
        if lhs {
            if let Some(k) = covered {
                // Credit a prime only when it is the sole cover, so the
                // bounded count matches an irredundant cover.
                if maximal
                    .iter()
                    .enumerate()
                    .all(|(j, p)| j == k || !fc.iter().all(|&c| p.members().contains(c)))
                {
                    used[k] = true;
                }
            }
        }
    }

    let primal = is_primal(ring);
    // The closure leg needs Property (A) on top of primality; when the
    // zero-divisor set is too large to certify it, skip the leg rather
    // than fail the whole transfer check.
    let prop_a = primal
        && match property_a(ring, 16) {
            Ok(report) => report.holds,
            Err(Error::CapExceeded { .. }) => false,
            Err(e) => return Err(e),
        };
    let closure_holds = if primal && prop_a {
        let mut ok = true;
        'outer: for a in 0..polys {
            if !zd_flags[a as usize] {
                continue;
            }
            let ac = coeffs_of(a);
            for b in 0..polys {
                if !zd_flags[b as usize] {
                    continue;
                }
                let bc = coeffs_of(b);
                let sum: Vec<usize> =
                    ac.iter().zip(&bc).map(|(&x, &y)| ring.plus(x, y)).collect();
                let sum_idx: u64 =
                    sum.iter().rev().fold(0u64, |acc, &c| acc * n + c as u64);
                if !zd_flags[sum_idx as usize] {
                    ok = false;
                    break 'outer;
                }
            }
            for s in 0..ring.size() {
                let scaled: Vec<usize> = ac.iter().map(|&x| ring.times(s, x)).collect();
                let idx: u64 =
                    scaled.iter().rev().fold(0u64, |acc, &c| acc * n + c as u64);
                if !zd_flags[idx as usize] {
                    ok = false;
                    break 'outer;
                }
            }
        }
        Some(ok)
    } else {
        None
    };

    let zd_matches = match zd_degree(ring, lattice_cap) {
        Ok(ZdDegreeReport { degree: Some(d), .. }) => {
            Some(used.iter().filter(|&&u| u).count() as u32 == d)
        }
        Ok(ZdDegreeReport { degree: None, .. }) => None,
        Err(Error::NotWeakGaussian) => None,
        Err(other) => return Err(other),
    };

    Ok(PolyTransferReport {
        degree_bound,
        polys,
        cover_holds,
        membership_agrees,
        closure_holds,
        zd_matches,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_arc, standard_members, CatalogSpec};
    use crate::ideal::{ideal_generated, zero_ideal};

    fn labels(ring: &FiniteSemiring, mask: ElemSet) -> Vec<String> {
        mask.iter().map(|i| ring.label(i).to_string()).collect()
    }

    #[test]
    fn zero_divisor_sets_match_hand_values() {
        let boolean = build_arc(&CatalogSpec::Boolean).unwrap();
        assert_eq!(labels(&boolean, zero_divisors(&boolean)), vec!["0"]);

        let nil = build_arc(&CatalogSpec::NilChain { n: 4 }).unwrap();
        assert_eq!(labels(&nil, zero_divisors(&nil)), vec!["0", "a", "b"]);

        let pair =
            build_arc(&CatalogSpec::Product(vec![CatalogSpec::Boolean, CatalogSpec::Boolean]))
                .unwrap();
        assert_eq!(labels(&pair, zero_divisors(&pair)), vec!["(0,0)", "(0,1)", "(1,0)"]);
    }

    #[test]
    fn associated_primes_of_boolean_and_nil_chain() {
        let boolean = build_arc(&CatalogSpec::Boolean).unwrap();
        let primes = ass_primes(&boolean);
        assert_eq!(primes.len(), 1);
        assert!(primes[0].is_zero());

        let nil = build_arc(&CatalogSpec::NilChain { n: 4 }).unwrap();
        let primes = ass_primes(&nil);
        assert!(primes.iter().any(|p| p.labels() == vec!["0", "a", "b"]));
    }

    #[test]
    fn associated_primes_sit_inside_z_and_are_subtractive() {
        for (name, ring) in standard_members() {
            let z = zero_divisors(&ring);
            for p in ass_primes(&ring) {
                assert!(p.members().is_subset_of(z), "{name}");
                assert!(p.is_subtractive().holds, "{name}: Ann must be subtractive");
            }
        }
    }

    #[test]
    fn every_finite_member_has_very_few_zero_divisors() {
        for (name, ring) in standard_members() {
            assert!(very_few_zero_divisors(&ring), "{name}");
        }
    }

    #[test]
    fn very_few_implies_property_a_across_the_catalog() {
        for (name, ring) in standard_members() {
            if very_few_zero_divisors(&ring) {
                assert!(property_a(&ring, 16).unwrap().holds, "{name}");
            }
        }
    }

    #[test]
    fn property_a_on_a_nil_chain_square() {
        let ring =
            build_arc(&CatalogSpec::Product(vec![
                CatalogSpec::NilChain { n: 3 },
                CatalogSpec::NilChain { n: 3 },
            ]))
            .unwrap();
        let report = property_a(&ring, 16).unwrap();
        assert!(report.holds);
        assert!(report.subsets_checked > 0);
    }

    #[test]
    fn property_a_cap_guard() {
        let ring = build_arc(&CatalogSpec::PowerSetLattice { n: 3 }).unwrap();
        // Z = {∅} only (a lattice has no nonzero zero-divisors under ∪/∩
        // unless meets vanish); just force a tiny cap to see the error on
        // a bigger Z example instead.
        let nil_cube = build_arc(&CatalogSpec::Product(vec![
            CatalogSpec::NilChain { n: 3 },
            CatalogSpec::NilChain { n: 3 },
            CatalogSpec::NilChain { n: 3 },
        ]))
        .unwrap();
        let z = zero_divisors(&nil_cube);
        assert!(z.len() > 16);
        assert!(matches!(property_a(&nil_cube, 16), Err(Error::CapExceeded { .. })));
        assert!(property_a(&ring, 16).unwrap().holds);
    }

    #[test]
    fn primal_verdicts() {
        assert!(is_primal(&build_arc(&CatalogSpec::Boolean).unwrap()));
        assert!(is_primal(&build_arc(&CatalogSpec::NilChain { n: 4 }).unwrap()));
        let pair =
            build_arc(&CatalogSpec::Product(vec![CatalogSpec::Boolean, CatalogSpec::Boolean]))
                .unwrap();
        assert!(!is_primal(&pair), "(1,0)+(0,1)=(1,1) escapes Z");
    }

    #[test]
    fn zd_degree_counts_nil_chain_factors() {
        for copies in 1..=3usize {
            let ring = build_arc(&CatalogSpec::Product(vec![
                CatalogSpec::NilChain { n: 3 };
                copies
            ]))
            .unwrap();
            let report = zd_degree(&ring, 64).unwrap();
            assert_eq!(report.degree, Some(copies as u32), "{copies} factors");
            assert_eq!(report.cover.len(), copies);
        }
    }

    #[test]
    fn zd_degree_of_boolean_is_one() {
        let ring = build_arc(&CatalogSpec::Boolean).unwrap();
        let report = zd_degree(&ring, 8).unwrap();
        assert_eq!(report.degree, Some(1));
        assert_eq!(report.cover, vec![vec!["0"]]);
    }

    #[test]
    fn zd_degree_refuses_non_weak_gaussian_inputs() {
        let ring = build_arc(&CatalogSpec::Lagrassa).unwrap();
        assert!(matches!(zd_degree(&ring, 8), Err(Error::NotWeakGaussian)));
    }

    #[test]
    fn primal_iff_degree_one_where_defined() {
        for (name, ring) in standard_members() {
            if ring.size() > 9 {
                continue;
            }
            match zd_degree(&ring, 64) {
                Ok(report) => {
                    if let Some(d) = report.degree {
                        assert_eq!(is_primal(&ring), d == 1, "{name}");
                    }
                }
                Err(Error::NotWeakGaussian) => {}
                Err(other) => panic!("{name}: {other:?}"),
            }
        }
    }

    #[test]
    fn irredundant_prime_cover_is_unique() {
        // Cross-check by enumerating every irredundant prime cover of Z
        // and demanding a single one.
        for spec in [
            CatalogSpec::Boolean,
            CatalogSpec::NilChain { n: 3 },
            CatalogSpec::Product(vec![CatalogSpec::NilChain { n: 3 }, CatalogSpec::NilChain {
                n: 3,
            }]),
        ] {
            let ring = build_arc(&spec).unwrap();
            let lattice = enumerate_ideals(&ring, 64).unwrap();
            let z = zero_divisors(&ring);
            let (inside, _) = primes_in_z(&lattice, z);
            let mut covers = Vec::new();
            for pick in 1u32..1 << inside.len() {
                let chosen: Vec<&Ideal> = inside
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| pick >> k & 1 == 1)
                    .map(|(_, p)| p)
                    .collect();
                let mut union = ElemSet::empty();
                for p in &chosen {
                    union = union.union(p.members());
                }
                if union != z {
                    continue;
                }
                let irr = chosen.iter().all(|p| {
                    let mut rest = ElemSet::empty();
                    for q in &chosen {
                        if q.members() != p.members() {
                            rest = rest.union(q.members());
                        }
                    }
                    !p.members().is_subset_of(rest)
                });
                if irr {
                    let mut masks: Vec<u64> =
                        chosen.iter().map(|p| p.members().mask()).collect();
                    masks.sort_unstable();
                    if !covers.contains(&masks) {
                        covers.push(masks);
                    }
                }
            }
            assert_eq!(covers.len(), 1, "{:?}", spec.name());
        }
    }

    #[test]
    fn profile_of_the_nil_chain() {
        let ring = build_arc(&CatalogSpec::NilChain { n: 4 }).unwrap();
        let profile = zero_divisor_profile(&ring, 16).unwrap();
        assert_eq!(profile.zset, vec!["0", "a", "b"]);
        assert!(profile.very_few && profile.property_a && profile.primal && profile.few);
        assert_eq!(profile.zd_degree, Some(1));
        assert_eq!(profile.maximal_primes_of_z, vec![vec!["0", "a", "b"]]);
    }

    #[test]
    fn profile_handles_non_weak_gaussian_members() {
        let ring = build_arc(&CatalogSpec::Lagrassa).unwrap();
        let profile = zero_divisor_profile(&ring, 16).unwrap();
        // LaGrassa has no nonzero zero-divisors (u·u = u), so Z = {0}.
        assert_eq!(profile.zset, vec!["0"]);
        assert_eq!(profile.zd_degree, None, "zd is undefined off weak Gaussian ground");
        assert!(profile.few);
    }

    #[test]
    fn transfer_on_the_nil_chain() {
        let ring = build_arc(&CatalogSpec::NilChain { n: 3 }).unwrap();
        let report =
            poly_transfer_check(&ring, 2, 16, &SweepBudget::default()).unwrap();
        assert!(report.cover_holds);
        assert!(report.membership_agrees, "{:?}", report.witness);
        assert_eq!(report.closure_holds, Some(true));
        assert_eq!(report.zd_matches, Some(true));
    }

    #[test]
    fn transfer_on_boolean_is_vacuous() {
        let ring = build_arc(&CatalogSpec::Boolean).unwrap();
        let report =
            poly_transfer_check(&ring, 3, 16, &SweepBudget::default()).unwrap();
        assert!(report.membership_agrees);
        assert_eq!(report.zd_matches, Some(true));
    }

    #[test]
    fn transfer_preserves_the_degree_on_a_product() {
        let ring =
            build_arc(&CatalogSpec::Product(vec![
                CatalogSpec::NilChain { n: 3 },
                CatalogSpec::NilChain { n: 3 },
            ]))
            .unwrap();
        let report =
            poly_transfer_check(&ring, 2, 64, &SweepBudget::default()).unwrap();
        assert!(report.membership_agrees, "{:?}", report.witness);
        assert_eq!(report.zd_matches, Some(true));
        // Product rings are not primal, so the closure leg is skipped.
        assert_eq!(report.closure_holds, None);
    }

    #[test]
    fn transfer_refuses_non_subtractive_scalars() {
        let ring = build_arc(&CatalogSpec::Lagrassa).unwrap();
        assert!(matches!(
            poly_transfer_check(&ring, 2, 16, &SweepBudget::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn annihilator_of_ideal_is_intersection_of_generator_annihilators() {
        let ring = build_arc(&CatalogSpec::NilChain { n: 4 }).unwrap();
        let a = ring.index_of("a").unwrap();
        let b = ring.index_of("b").unwrap();
        let ideal = ideal_generated(&ring, &[a, b]);
        let direct = annihilator(&ring, ideal.members());
        let meet = annihilator(&ring, ElemSet::singleton(a))
            .members()
            .intersect(annihilator(&ring, ElemSet::singleton(b)).members());
        assert_eq!(direct.members(), meet);
        assert!(!zero_ideal(&ring).is_unit());
    }
}
