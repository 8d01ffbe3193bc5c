//! The Dedekind–Mertens content formula.
//!
//! For polynomials over a commutative ring one always has
//! `c(f)^(m+1) c(g) = c(f)^m c(fg)` once `m ≥ deg g`. Over a semiring the
//! formula holds for *every* pair exactly when the semiring is subtractive,
//! and the failure is sharp: any ideal `N` with `a ∈ N`, `a + b ∈ N`,
//! `b ∉ N` yields a probe pair `f = 1 + X`, `g = a + bX + aX²` for which no
//! exponent works at all. This module computes minimal exponents, decides
//! when no exponent can ever exist, and checks the equivalence by
//! exhaustive sweep plus the probe construction.

use std::sync::Arc;

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::Error;
use crate::ideal::{close_mask, ideal_generated, product_mask, unit_ideal};
use crate::poly::Polynomial;
use crate::semiring::FiniteSemiring;
use crate::sweep::{checked_power, decode_base, find_first, SweepBudget};

/// Outcome of a minimal-exponent search.
///
/// `lhs_chain[m]` and `rhs_chain[m]` are the member labels of
/// `c(f)^(m+1) c(g)` and `c(f)^m c(fg)`. Once the two sides agree at some
/// `m` they agree at every larger one (multiply both sides by `c(f)`), so
/// the first hit is the minimal exponent and the scan stops there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DmReport {
    /// Minimal `m ≤ bound` with `c(f)^(m+1) c(g) = c(f)^m c(fg)`.
    pub exponent: Option<u32>,
    pub bound: u32,
    /// Total degree of `g`, clamped to zero for the zero polynomial.
    pub degree_g: i64,
    pub lhs_chain: Vec<Vec<String>>,
    pub rhs_chain: Vec<Vec<String>>,
    /// True when the scan stopped because the powers of `c(f)` froze while
    /// the two sides still differed — then no exponent exists for *any*
    /// bound, not just the requested one.
    pub stabilized: bool,
}

/// Minimal Dedekind–Mertens exponent for a concrete pair.
///
/// Works for any number of variables (contents ignore the monomial
/// structure once the product is formed). The scan short-circuits as soon
/// as the descending chain of powers of `c(f)` stabilizes, which in a
/// finite semiring happens after at most `|S|` strict drops; a `None` with
/// `stabilized: true` is therefore a proof, not a bounded observation.
pub fn dm_exponent(f: &Polynomial, g: &Polynomial, bound: u32) -> Result<DmReport, Error> {
    let h = f.mul(g)?;
    let cf = f.content();
    let cg = g.content();
    let ch = h.content();
    let degree_g = g.total_degree().unwrap_or(0).max(0);
    let mut fpow = unit_ideal(f.ring());
    let mut lhs_chain = Vec::new();
    let mut rhs_chain = Vec::new();
    let mut exponent = None;
    let mut stabilized = false;
    for m in 0..=bound {
        let next = fpow.product(&cf)?;
        let lhs = next.product(&cg)?;
        let rhs = fpow.product(&ch)?;
        lhs_chain.push(lhs.labels());
        rhs_chain.push(rhs.labels());
        if lhs == rhs {
            exponent = Some(m);
            break;
        }
        if next == fpow {
            stabilized = true;
            break;
        }
        fpow = next;
    }
    Ok(DmReport { exponent, bound, degree_g, lhs_chain, rhs_chain, stabilized })
}

/// One pair for which the bounded formula fails, rendered for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DmFailure {
    pub f: String,
    pub g: String,
    pub report: DmReport,
}

/// Verdict of the subtractivity ⇔ Dedekind–Mertens equivalence check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DmEquivalenceReport {
    pub subtractive: bool,
    /// Every univariate pair of degree ≤ D admits an exponent ≤ deg g.
    pub bounded_exponent_for_all: bool,
    /// For non-subtractive carriers only: every probe pair built from a
    /// subtractivity failure admits no exponent at all.
    pub probes_all_unbounded: Option<bool>,
    /// The two sides of the equivalence agree.
    pub agrees: bool,
    pub pairs_swept: u64,
    pub witness: Option<DmFailure>,
}

/// Mask-level minimal-exponent test used by the sweep kernel: does some
/// `m ≤ deg_bound` satisfy the formula for contents `cf`, `cg`, `ch`?
pub(crate) fn bounded_exponent_exists(
    ring: &FiniteSemiring,
    cf: ElemSet,
    cg: ElemSet,
    ch: ElemSet,
    deg_bound: u32,
) -> bool {
    let mut fpow = ElemSet::full(ring.size());
    for _ in 0..=deg_bound {
        let next = product_mask(ring, fpow, cf);
        if product_mask(ring, next, cg) == product_mask(ring, fpow, ch) {
            return true;
        }
        if next == fpow {
            return false;
        }
        fpow = next;
    }
    false
}

pub(crate) fn content_of_coeffs(ring: &FiniteSemiring, coeffs: &[usize]) -> ElemSet {
    close_mask(ring, coeffs.iter().copied().collect())
}

pub(crate) fn convolve(ring: &FiniteSemiring, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ring.plus(out[i + j], ring.times(x, y));
        }
    }
    out
}

pub(crate) fn true_degree(coeffs: &[usize], zero: usize) -> u32 {
    coeffs.iter().rposition(|&c| c != zero).unwrap_or(0) as u32
}

/// All subtractivity failures `(a, b)` (with `a ∈ N`, `b ∉ N`, `a + b ∈ N`)
/// across every 2-generated ideal, deduplicated.
fn subtractivity_failures(ring: &Arc<FiniteSemiring>) -> Vec<(usize, usize)> {
    let n = ring.size();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x..n {
            let members = ideal_generated(ring, &[x, y]).members();
            for a in members.iter() {
                for b in 0..n {
                    if !members.contains(b)
                        && members.contains(ring.plus(a, b))
                        && !pairs.contains(&(a, b))
                    {
                        pairs.push((a, b));
                    }
                }
            }
        }
    }
    pairs
}

/// The probe pair attached to a subtractivity failure `(a, b)`:
/// `f = 1 + X` and `g = a + bX + aX²`. Then `c(fg) = (a, a+b) ⊆ N` misses
/// `b` while `c(f)c(g) = (a, b)` contains it, and multiplying by powers of
/// `c(f) = S` changes nothing, so no exponent exists.
pub fn dm_probe_pair(ring: &Arc<FiniteSemiring>, a: usize, b: usize) -> (Polynomial, Polynomial) {
    let f = Polynomial::univariate(ring, "X", &[ring.one(), ring.one()]);
    let g = Polynomial::univariate(ring, "X", &[a, b, a]);
    (f, g)
}

/// Check `S subtractive ⇔ every pair of degree ≤ D has an exponent ≤ deg g`
/// by exhaustive univariate sweep, plus probe pairs for the reverse
/// implication. The sweep enumerates all `n^(2(D+1))` coefficient pairs.
pub fn dm_semiring_equivalence(
    ring: &Arc<FiniteSemiring>,
    degree_bound: u32,
    budget: &SweepBudget,
) -> Result<DmEquivalenceReport, Error> {
    let n = ring.size() as u64;
    let len = degree_bound as usize + 1;
    let per_poly = checked_power(n, len as u32)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    let pairs = per_poly
        .checked_mul(per_poly)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    budget.admit(pairs)?;

    let zero = ring.zero();
    let fails_at = |idx: u64| {
        let fc = decode_base(idx / per_poly, n, len);
        let gc = decode_base(idx % per_poly, n, len);
        let cf = content_of_coeffs(ring, &fc);
        let cg = content_of_coeffs(ring, &gc);
        let ch = content_of_coeffs(ring, &convolve(ring, &fc, &gc));
        if bounded_exponent_exists(ring, cf, cg, ch, true_degree(&gc, zero)) {
            None
        } else {
            Some((fc, gc))
        }
    };
    let first_failure = find_first(pairs, budget.parallel, fails_at);
    let bounded_exponent_for_all = first_failure.is_none();

    let subtractive = crate::ideal::is_subtractive_semiring(ring).holds;
    let mut witness = None;
    if let Some((_, (fc, gc))) = first_failure {
        let f = Polynomial::univariate(ring, "X", &fc);
        let g = Polynomial::univariate(ring, "X", &gc);
        let report = dm_exponent(&f, &g, true_degree(&gc, zero))?;
        witness = Some(DmFailure { f: f.to_string(), g: g.to_string(), report });
    }

    let probes_all_unbounded = if subtractive {
        None
    } else {
        let mut all_unbounded = true;
        for (a, b) in subtractivity_failures(ring) {
            let (f, g) = dm_probe_pair(ring, a, b);
            let report = dm_exponent(&f, &g, ring.size() as u32 + 2)?;
            if report.exponent.is_some() {
                all_unbounded = false;
            }
        }
        Some(all_unbounded)
    };

    let agrees = if subtractive {
        bounded_exponent_for_all
    } else {
        !bounded_exponent_for_all && probes_all_unbounded == Some(true)
    };
    Ok(DmEquivalenceReport {
        subtractive,
        bounded_exponent_for_all,
        probes_all_unbounded,
        agrees,
        pairs_swept: pairs,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_arc, standard_members, CatalogSpec};
    use crate::poly::Monomial;

    fn nil4() -> Arc<FiniteSemiring> {
        build_arc(&CatalogSpec::NilChain { n: 4 }).unwrap()
    }

    #[test]
    fn nil_chain_probe_has_no_exponent() {
        let t = nil4();
        let a = t.index_of("a").unwrap();
        let b = t.index_of("b").unwrap();
        let f = Polynomial::univariate(&t, "X", &[t.one(), t.one()]);
        let g = Polynomial::univariate(&t, "X", &[b, a, b]);
        // The product collapses: (1+X)(b+aX+bX²) = b+bX+bX²+bX³.
        let h = f.mul(&g).unwrap();
        assert_eq!(h, Polynomial::univariate(&t, "X", &[b, b, b, b]));
        let report = dm_exponent(&f, &g, 10).unwrap();
        assert_eq!(report.exponent, None);
        assert!(report.stabilized);
        // c(f)^{m+1} c(g) = {0,a,b} while c(f)^m c(fg) = {0,b}.
        assert_eq!(report.lhs_chain[0], vec!["0", "a", "b"]);
        assert_eq!(report.rhs_chain[0], vec!["0", "b"]);
    }

    #[test]
    fn monomial_factor_gives_exponent_zero() {
        // If f is a monomial, c(fg) = c(f)c(g) on the nose.
        for (name, ring) in standard_members() {
            if ring.size() > 4 {
                continue;
            }
            let n = ring.size();
            for c in 0..n {
                for e in 0..3i64 {
                    let mut f = Polynomial::zero(&ring);
                    f.set_term(Monomial::from_pairs(&[("X", e)]), c).unwrap();
                    for k in 0..n * n {
                        let g = Polynomial::univariate(&ring, "X", &[k % n, k / n]);
                        let report = dm_exponent(&f, &g, 0).unwrap();
                        assert_eq!(report.exponent, Some(0), "{name}: f={f} g={g}");
                    }
                }
            }
        }
    }

    #[test]
    fn zero_polynomials_degenerate_to_exponent_zero() {
        let t = nil4();
        let z = Polynomial::zero(&t);
        let f = Polynomial::univariate(&t, "X", &[t.one(), t.one()]);
        assert_eq!(dm_exponent(&f, &z, 5).unwrap().exponent, Some(0));
        assert_eq!(dm_exponent(&z, &f, 5).unwrap().exponent, Some(0));
        assert_eq!(dm_exponent(&z, &z, 5).unwrap().degree_g, 0);
    }

    #[test]
    fn equality_persists_once_reached() {
        // Spot-check monotonicity: recompute the chains with a padded bound
        // and verify every index past the minimal exponent still agrees.
        let c = build_arc(&CatalogSpec::ChainC).unwrap();
        let u = c.index_of("u").unwrap();
        let n = c.size();
        for k in 0..n * n * n {
            let f = Polynomial::univariate(&c, "X", &[k % n, k / n % n, k / (n * n)]);
            let g = Polynomial::univariate(&c, "X", &[u, k % n, c.one()]);
            let cf = f.content();
            let cg = g.content();
            let ch = f.mul(&g).unwrap().content();
            let mut fpow = unit_ideal(&c);
            let mut seen_equal = false;
            for _ in 0..=6 {
                let next = fpow.product(&cf).unwrap();
                let equal = next.product(&cg).unwrap() == fpow.product(&ch).unwrap();
                assert!(!seen_equal || equal, "equality lost after being reached: f={f} g={g}");
                seen_equal = seen_equal || equal;
                fpow = next;
            }
        }
    }

    #[test]
    fn subtractive_members_meet_the_degree_bound() {
        let budget = SweepBudget::default();
        for name in ["boolean", "chain_c", "nil_chain(3)"] {
            let members = standard_members();
            let ring = &members.iter().find(|(n, _)| n == name).unwrap().1;
            let report = dm_semiring_equivalence(ring, 2, &budget).unwrap();
            assert!(report.subtractive, "{name}");
            assert!(report.bounded_exponent_for_all, "{name}");
            assert!(report.agrees, "{name}");
            assert_eq!(report.probes_all_unbounded, None, "{name}");
        }
    }

    #[test]
    fn nil_chain_equivalence_agrees_negatively() {
        let t = nil4();
        let report = dm_semiring_equivalence(&t, 2, &SweepBudget::default()).unwrap();
        assert!(!report.subtractive);
        assert!(!report.bounded_exponent_for_all);
        assert_eq!(report.probes_all_unbounded, Some(true));
        assert!(report.agrees);
        let witness = report.witness.unwrap();
        assert_eq!(witness.report.exponent, None);
    }

    #[test]
    fn lagrassa_equivalence_agrees_negatively() {
        let s = build_arc(&CatalogSpec::Lagrassa).unwrap();
        let report = dm_semiring_equivalence(&s, 2, &SweepBudget::default()).unwrap();
        assert!(!report.subtractive);
        assert!(report.agrees);
    }

    #[test]
    fn parallel_sweep_reports_identical_witness() {
        let t = nil4();
        let seq = dm_semiring_equivalence(&t, 2, &SweepBudget::default()).unwrap();
        let par =
            dm_semiring_equivalence(&t, 2, &SweepBudget { parallel: true, ..Default::default() })
                .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn budget_guard_trips() {
        let t = nil4();
        let tiny = SweepBudget { max_pairs: 10, parallel: false };
        assert!(matches!(
            dm_semiring_equivalence(&t, 2, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn multivariate_exponent_matches_folded_exponent() {
        // Bivariate pairs over chain_C, total degree <= 2: the minimal
        // exponent is invariant under folding to one variable because the
        // fold preserves all three contents and the product.
        let c = build_arc(&CatalogSpec::ChainC).unwrap();
        let n = c.size();
        let monos = [
            Monomial::one(),
            Monomial::var("X"),
            Monomial::var("Y"),
            Monomial::from_pairs(&[("X", 1), ("Y", 1)]),
        ];
        let mk = |k: usize| {
            let mut p = Polynomial::zero(&c);
            for (i, m) in monos.iter().enumerate() {
                p.set_term(m.clone(), k / n.pow(i as u32) % n).unwrap();
            }
            p
        };
        for fk in (0..n.pow(4)).step_by(5) {
            for gk in (0..n.pow(4)).step_by(13) {
                let f = mk(fk);
                let g = mk(gk);
                let direct = dm_exponent(&f, &g, 6).unwrap();
                let d = 5; // exceeds every exponent of fg
                let fstar = f.fold_to_univariate("T", d).unwrap();
                let gstar = g.fold_to_univariate("T", d).unwrap();
                let folded = dm_exponent(&fstar, &gstar, 6).unwrap();
                assert_eq!(direct.exponent, folded.exponent, "f={f} g={g}");
                // chain_C is subtractive: an exponent must exist.
                assert!(direct.exponent.is_some(), "f={f} g={g}");
            }
        }
    }

    #[test]
    fn mixed_rings_error() {
        let a = build_arc(&CatalogSpec::Boolean).unwrap();
        let b = build_arc(&CatalogSpec::ChainC).unwrap();
        let f = Polynomial::constant(&a, 1);
        let g = Polynomial::constant(&b, 1);
        assert!(matches!(dm_exponent(&f, &g, 3), Err(Error::MixedSemirings)));
    }
}
