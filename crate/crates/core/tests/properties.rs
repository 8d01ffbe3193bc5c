//! Property-based checks of the structural laws: table validation rejects
//! perturbations, closure operators are idempotent, content is
//! submultiplicative, and exponents stay below the degree bound on
//! subtractive carriers.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use semiring_lab::catalog::standard_members;
use semiring_lab::semimodule::{regular_semimodule, subsemimodule_generated, FiniteSemimodule};
use semiring_lab::{
    annihilator, dm_exponent, ideal_generated, is_subtractive_semiring, ps_mul, validate_semiring,
    ElemSet, Error, FiniteSemiring, Polynomial, TruncatedSeries,
};

fn members() -> &'static [(String, Arc<FiniteSemiring>)] {
    static CACHE: OnceLock<Vec<(String, Arc<FiniteSemiring>)>> = OnceLock::new();
    CACHE.get_or_init(standard_members)
}

fn small_members() -> &'static [(String, Arc<FiniteSemiring>)] {
    static CACHE: OnceLock<Vec<(String, Arc<FiniteSemiring>)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        members().iter().filter(|(_, r)| r.size() <= 4).cloned().collect()
    })
}

fn subtractive_members() -> &'static [(String, Arc<FiniteSemiring>)] {
    static CACHE: OnceLock<Vec<(String, Arc<FiniteSemiring>)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        small_members()
            .iter()
            .filter(|(_, r)| is_subtractive_semiring(r).holds)
            .cloned()
            .collect()
    })
}

/// Index into one of the cached rosters, paired with raw bytes the test
/// reduces modulo the carrier size.
fn any_member() -> impl Strategy<Value = usize> {
    0..members().len()
}

fn any_small() -> impl Strategy<Value = usize> {
    0..small_members().len()
}

fn poly_from(ring: &Arc<FiniteSemiring>, raw: &[u8]) -> Polynomial {
    let coeffs: Vec<usize> = raw.iter().map(|&c| c as usize % ring.size()).collect();
    Polynomial::univariate(ring, "X", &coeffs)
}

proptest! {
    /// Breaking one off-diagonal cell of the addition table always trips
    /// the validator: commutativity (or worse) fails, and the violation
    /// list pinpoints it.
    #[test]
    fn perturbed_addition_tables_fail_validation(
        idx in any_member(),
        i in 0usize..16,
        j in 0usize..16,
        v in 0usize..16,
    ) {
        let (_, ring) = &members()[idx];
        let n = ring.size();
        let i = i % n;
        let j = (i + 1 + j % (n - 1)) % n;
        let mut raw = ring.raw();
        let v = (raw.add[j][i] + 1 + v % (n - 1)) % n;
        raw.add[i][j] = v;
        match validate_semiring(raw) {
            Ok(_) => prop_assert!(false, "asymmetric table validated"),
            Err(Error::Axioms(violations)) => prop_assert!(!violations.is_empty()),
            Err(other) => prop_assert!(false, "unexpected error {other}"),
        }
    }

    /// Generated ideals are closure-stable: regenerating from the members
    /// changes nothing, and the members absorb addition and scaling.
    #[test]
    fn ideal_generation_is_idempotent_and_closed(
        idx in any_member(),
        gens in prop::collection::vec(0usize..32, 0..4),
    ) {
        let (_, ring) = &members()[idx];
        let gens: Vec<usize> = gens.iter().map(|&g| g % ring.size()).collect();
        let ideal = ideal_generated(ring, &gens);
        let mask = ideal.members();
        prop_assert!(mask.contains(ring.zero()));
        for &g in &gens {
            prop_assert!(mask.contains(g));
        }
        let regenerated = ideal_generated(ring, &mask.iter().collect::<Vec<_>>());
        prop_assert_eq!(regenerated.members(), mask);
        for a in mask.iter() {
            for b in mask.iter() {
                prop_assert!(mask.contains(ring.plus(a, b)));
            }
            for s in 0..ring.size() {
                prop_assert!(mask.contains(ring.times(s, a)));
            }
        }
    }

    /// `I ⊆ √I`, the radical is idempotent, and it is monotone in the
    /// generators.
    #[test]
    fn radicals_contain_monotonically_and_idempotently(
        idx in any_member(),
        gens in prop::collection::vec(0usize..32, 0..3),
        extra in 0usize..32,
    ) {
        let (_, ring) = &members()[idx];
        let gens: Vec<usize> = gens.iter().map(|&g| g % ring.size()).collect();
        let ideal = ideal_generated(ring, &gens);
        let radical = ideal.radical();
        prop_assert!(ideal.is_subset_of(&radical));
        prop_assert_eq!(radical.radical().members(), radical.members());

        let mut larger = gens.clone();
        larger.push(extra % ring.size());
        let bigger = ideal_generated(ring, &larger).radical();
        prop_assert!(radical.is_subset_of(&bigger));
    }

    /// Content is submultiplicative (`c(fg) ⊆ c(f)c(g)`), and ideal
    /// products land inside the intersection.
    #[test]
    fn content_is_submultiplicative(
        idx in any_small(),
        fraw in prop::collection::vec(any::<u8>(), 1..5),
        graw in prop::collection::vec(any::<u8>(), 1..5),
    ) {
        let (_, ring) = &small_members()[idx];
        let f = poly_from(ring, &fraw);
        let g = poly_from(ring, &graw);
        let h = f.mul(&g).unwrap();
        let cf = f.content();
        let cg = g.content();
        let product = cf.product(&cg).unwrap();
        prop_assert!(h.content().is_subset_of(&product));
        prop_assert!(product
            .members()
            .is_subset_of(cf.members().intersect(cg.members())));
    }

    /// The polynomial semiring laws hold for the dense arithmetic:
    /// commutativity, associativity, distributivity.
    #[test]
    fn polynomial_arithmetic_obeys_the_semiring_laws(
        idx in any_small(),
        fraw in prop::collection::vec(any::<u8>(), 1..4),
        graw in prop::collection::vec(any::<u8>(), 1..4),
        hraw in prop::collection::vec(any::<u8>(), 1..4),
    ) {
        let (_, ring) = &small_members()[idx];
        let f = poly_from(ring, &fraw);
        let g = poly_from(ring, &graw);
        let h = poly_from(ring, &hraw);
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.mul(&g).unwrap().mul(&h).unwrap(),
            f.mul(&g.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
        );
    }

    /// On subtractive carriers the content formula closes with exponent at
    /// most `deg g` for every pair.
    #[test]
    fn exponents_stay_below_the_degree_on_subtractive_members(
        idx in 0usize..64,
        fraw in prop::collection::vec(any::<u8>(), 1..5),
        graw in prop::collection::vec(any::<u8>(), 1..5),
    ) {
        let roster = subtractive_members();
        let (_, ring) = &roster[idx % roster.len()];
        let nonzero = |p: Polynomial| {
            if p.is_zero() { Polynomial::constant(ring, ring.one()) } else { p }
        };
        let f = nonzero(poly_from(ring, &fraw));
        let g = nonzero(poly_from(ring, &graw));
        let report = dm_exponent(&f, &g, 8).unwrap();
        let m = report.exponent.expect("subtractive members admit an exponent");
        prop_assert!(i64::from(m) <= report.degree_g, "m = {m}, deg g = {}", report.degree_g);
    }

    /// Serialization round-trips polynomials exactly.
    #[test]
    fn polynomial_json_round_trips(
        idx in any_member(),
        raw in prop::collection::vec(any::<u8>(), 0..6),
    ) {
        let (_, ring) = &members()[idx];
        let poly = poly_from(ring, &raw);
        let back = Polynomial::from_json(ring, &poly.to_json()).unwrap();
        prop_assert_eq!(poly, back);
    }

    /// Multiplying then truncating equals truncating then multiplying.
    #[test]
    fn series_multiplication_commutes_with_truncation(
        idx in any_small(),
        fraw in prop::collection::vec(any::<u8>(), 1..4),
        graw in prop::collection::vec(any::<u8>(), 1..4),
    ) {
        let (_, ring) = &small_members()[idx];
        let order = 4;
        let f = poly_from(ring, &fraw);
        let g = poly_from(ring, &graw);
        let sf = TruncatedSeries::new(f.clone(), order).unwrap();
        let sg = TruncatedSeries::new(g.clone(), order).unwrap();
        let product = ps_mul(&sf, &sg).unwrap();
        let direct = TruncatedSeries::new(f.mul(&g).unwrap(), order).unwrap();
        prop_assert_eq!(product, direct);
    }

    /// Subsemimodule generation is a closure operator on the regular
    /// module.
    #[test]
    fn subsemimodule_generation_is_idempotent(
        idx in any_small(),
        gens in prop::collection::vec(0usize..16, 0..3),
    ) {
        let (_, ring) = &small_members()[idx];
        let module: Arc<FiniteSemimodule> = Arc::new(regular_semimodule(ring));
        let gens: Vec<usize> = gens.iter().map(|&g| g % module.size()).collect();
        let sub = subsemimodule_generated(&module, &gens);
        let members: Vec<usize> = sub.members().iter().collect();
        let again = subsemimodule_generated(&module, &members);
        prop_assert_eq!(again.members(), sub.members());
    }

    /// Annihilators kill their targets and are closure-stable ideals.
    #[test]
    fn annihilators_kill_their_targets(
        idx in any_member(),
        targets in prop::collection::vec(0usize..32, 1..4),
    ) {
        let (_, ring) = &members()[idx];
        let targets: ElemSet = targets.iter().map(|&t| t % ring.size()).collect();
        let ann = annihilator(ring, targets);
        for a in ann.members().iter() {
            for t in targets.iter() {
                prop_assert_eq!(ring.times(a, t), ring.zero());
            }
        }
        let regenerated = ideal_generated(ring, &ann.members().iter().collect::<Vec<_>>());
        prop_assert_eq!(regenerated.members(), ann.members());
    }
}
