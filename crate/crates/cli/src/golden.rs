//! The golden verification suite behind `semiring-lab verify-paper`.
//!
//! Every row replays one published example or theorem instance against the
//! library and reports pass/fail. The rows are exhaustively computed — no
//! row samples unless it says so ("seeded") — so a pass is a proof at the
//! stated bounds and a failure always carries the offending values.

use std::sync::Arc;

use semiring_lab::catalog::{build_arc, diamond_monoid, standard_members, CatalogSpec};
use semiring_lab::poly::gaussian::Indet;
use semiring_lab::semimodule::{
    content_equivalences, content_transfer_check, direct_sum, dm_semimodule_equivalence,
    is_content_semimodule, regular_semimodule,
};
use semiring_lab::{
    arctic_radical_check, dm_exponent, dm_semiring_equivalence, enumerate_ideals,
    gaussian_sufficient, ideal_generated, interval_law_check, is_gaussian_up_to,
    is_subtractive_semiring, is_weak_gaussian, mccoy_check, min_prime_correspondence,
    naturals_prime_check, nil_extension_check, poly_transfer_check, prime_extension_check,
    property_a, ps_prime_extension_check, reduced_transfer_check, series_content_check,
    tropical_gaussian_sample, verify_content_semialgebra, very_few_zero_divisors,
    weak_gaussian_sweep, zd_degree, FiniteSemiring, GaussianCertificate, Polynomial, SweepBudget,
};

/// One verification row: a named check and its outcome.
#[derive(Debug)]
pub struct GoldenRow {
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

impl GoldenRow {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn member(rings: &[(String, Arc<FiniteSemiring>)], name: &str) -> Arc<FiniteSemiring> {
    rings
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, r)| r.clone())
        .unwrap_or_else(|| panic!("{name} is a standard catalog member"))
}

fn elem(ring: &Arc<FiniteSemiring>, label: &str) -> usize {
    ring.index_of(label).unwrap_or_else(|| panic!("element {label} exists"))
}

fn small(rings: &[(String, Arc<FiniteSemiring>)]) -> Vec<(String, Arc<FiniteSemiring>)> {
    rings.iter().filter(|(_, r)| r.size() <= 4).cloned().collect()
}

/// Runs every row. `seed` feeds the sampled tropical sweep only; all other
/// rows are exhaustive and deterministic.
pub fn run_all(parallel: bool, seed: u64) -> Vec<GoldenRow> {
    let budget = SweepBudget { parallel, ..SweepBudget::default() };
    let members = standard_members();
    let x = |name: &'static str, outcome: Result<(), String>| GoldenRow { name, outcome };

    vec![
        x("lagrassa: content of (1+uX)(u+X)", lagrassa_content(&members)),
        x("lagrassa: not weak Gaussian", lagrassa_weak(&members)),
        x("nil_chain(4): not subtractive, with witness", nil4_subtractive(&members)),
        x("nil_chain(4): weak Gaussian", nil4_weak(&members)),
        x(
            "nil_chain(4): content formula admits no exponent for 1+X vs b+aX+bX^2",
            nil4_dm_unbounded(&members),
        ),
        x("nil_chain(3): local-nil-max certificate, Gaussian to degree 3", nil3_gaussian(&members, &budget)),
        x("chain_C: subtractive, weak Gaussian, radical-fixed certificate", chain_c_profile(&members)),
        x("b_n_i(4,2): not weak Gaussian", bni42_weak(&members)),
        x("b_n_i(3,1): weak Gaussian", bni31_weak(&members)),
        x("truncation(3): not weak Gaussian", truncation3_weak(&members)),
        x(
            "weak Gaussian: prime route matches degree-3 sweep on |S| <= 4",
            weak_routes_agree(&members, &budget),
        ),
        x(
            "Dedekind-Mertens: bounded exponents iff subtractive on |S| <= 4",
            dm_equivalence_small(&members, &budget),
        ),
        x(
            "power_set_lattice(3): Gaussian to degree 2 via sum generation",
            bdl_gaussian(&budget),
        ),
        x(
            "truncation(3): radical of (1) is everything except 0, not subtractive",
            truncation3_radical(&members),
        ),
        x("tropical: min-coefficient additivity over 1000 seeded pairs", tropical_sample(seed)),
        x("tropical: interval ideal law on carriers <= 12", tropical_interval()),
        x("naturals: complement of {1} is a non-subtractive prime", naturals_prime()),
        x("arctic: radical of (5) contains 1 but not 0", arctic_radical()),
        x(
            "content semialgebra axioms hold iff subtractive on |S| <= 4",
            semialgebra_iff_subtractive(&members, &budget),
        ),
        x("minimal primes extend bijectively to polynomial primes", min_primes(&members)),
        x(
            "power series: truncated content check agrees with weak Gaussian",
            series_agreement(&members, &budget),
        ),
        x("power series: lagrassa content product escapes the radical", series_lagrassa(&members, &budget)),
        x("power series: prime extensions iff subtractive primes", series_primes(&members, &budget)),
        x("zero divisors: every member has very few and property A", zd_regression(&members)),
        x("zd degree of nil_chain(3)^n is n for n = 1,2,3", zd_degree_products()),
        x(
            "polynomial transfer: bounded zero-divisor cover matches zd degree",
            zd_poly_transfer(&budget),
        ),
        x("McCoy: annihilated products admit scalar annihilators (deg <= 2)", mccoy_small(&members, &budget)),
        x(
            "nil extension: nilpotent-coefficient polynomials are nilpotent",
            nil_extension_small(&members, &budget),
        ),
        x(
            "prime extension: P[X] prime iff P subtractive prime (deg <= 2)",
            prime_extension_small(&members, &budget),
        ),
        x("reduced transfer: S[X] reduced iff S reduced", reduced_small(&members, &budget)),
        x(
            "semimodule content formula equivalence on regular modules (deg <= 2)",
            module_dm_small(&members, &budget),
        ),
        x("content semimodule equivalences for S and S+S", module_content_small(&members)),
        x("module content transfer across submodules", module_transfer_small(&members)),
    ]
}

fn lagrassa_content(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    let s = member(members, "lagrassa");
    let (one, u) = (s.one(), elem(&s, "u"));
    let f = Polynomial::univariate(&s, "X", &[one, u]);
    let g = Polynomial::univariate(&s, "X", &[u, one]);
    let h = f.mul(&g).map_err(err)?;
    let expected = Polynomial::univariate(&s, "X", &[u, u, u]);
    ensure!(h == expected, "(1+uX)(u+X) = {h}, expected u+uX+uX^2");
    let c_h = h.content();
    let c_prod = f.content().product(&g.content()).map_err(err)?;
    ensure!(c_h.labels() == ["0", "u"], "c(fg) = {:?}", c_h.labels());
    ensure!(c_prod.labels() == ["0", "1", "u"], "c(f)c(g) = {:?}", c_prod.labels());
    ensure!(c_h.radical().labels() == ["0", "u"], "radical c(fg) = {:?}", c_h.radical().labels());
    Ok(())
}

fn lagrassa_weak(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    let report = is_weak_gaussian(&member(members, "lagrassa"), 12).map_err(err)?;
    ensure!(!report.holds, "expected weak Gaussian to fail");
    ensure!(report.witness.is_some(), "failure must carry a witness");
    Ok(())
}

fn nil4_subtractive(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    let report = is_subtractive_semiring(&member(members, "nil_chain(4)"));
    ensure!(!report.holds, "nil_chain(4) must not be subtractive");
    ensure!(report.witness.is_some(), "non-subtractivity must carry a witness");
    Ok(())
}

fn nil4_weak(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    let report = is_weak_gaussian(&member(members, "nil_chain(4)"), 12).map_err(err)?;
    ensure!(report.holds, "nil_chain(4) must be weak Gaussian");
    Ok(())
}

fn nil4_dm_unbounded(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    let s = member(members, "nil_chain(4)");
    let (a, b) = (elem(&s, "a"), elem(&s, "b"));
    let f = Polynomial::univariate(&s, "X", &[s.one(), s.one()]);
    let g = Polynomial::univariate(&s, "X", &[b, a, b]);
    let report = dm_exponent(&f, &g, 10).map_err(err)?;
    ensure!(report.exponent.is_none(), "expected no exponent, found {:?}", report.exponent);
    ensure!(report.stabilized, "the power chain must stabilize with sides unequal");
    let lhs = report.lhs_chain.last().ok_or("empty lhs chain")?;
    let rhs = report.rhs_chain.last().ok_or("empty rhs chain")?;
    ensure!(lhs == &["0", "a", "b"], "stable lhs ideal = {lhs:?}, expected {{0,a,b}}");
    ensure!(rhs == &["0", "b"], "stable rhs ideal = {rhs:?}, expected {{0,b}}");
    Ok(())
}

fn nil3_gaussian(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    let s = member(members, "nil_chain(3)");
    let lattice = enumerate_ideals(&s, 12).map_err(err)?;
    let cert = gaussian_sufficient(&s, Some(&lattice));
    ensure!(cert == GaussianCertificate::LocalNilMax, "certificate = {cert:?}");
    let sweep = is_gaussian_up_to(&s, 3, budget).map_err(err)?;
    ensure!(sweep.holds, "degree-3 sweep found {:?}", sweep.witness);
    Ok(())
}

fn chain_c_profile(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    let s = member(members, "chain_c");
    ensure!(is_subtractive_semiring(&s).holds, "chain_C must be subtractive");
    ensure!(is_weak_gaussian(&s, 12).map_err(err)?.holds, "chain_C must be weak Gaussian");
    let lattice = enumerate_ideals(&s, 12).map_err(err)?;
    let cert = gaussian_sufficient(&s, Some(&lattice));
    ensure!(cert == GaussianCertificate::RadicalFixed, "certificate = {cert:?}");
    Ok(())
}

fn weak_verdict(
    members: &[(String, Arc<FiniteSemiring>)],
    name: &str,
    expected: bool,
) -> Result<(), String> {
    let report = is_weak_gaussian(&member(members, name), 12).map_err(err)?;
    ensure!(report.holds == expected, "{name}: weak Gaussian = {}, expected {expected}", report.holds);
    Ok(())
}

fn bni42_weak(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    weak_verdict(members, "b_n_i(4,2)", false)
}

fn bni31_weak(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    weak_verdict(members, "b_n_i(3,1)", true)
}

fn truncation3_weak(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    weak_verdict(members, "truncation(3)", false)
}

fn weak_routes_agree(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    for (name, ring) in small(members) {
        let exact = is_weak_gaussian(&ring, 16).map_err(err)?.holds;
        let swept = weak_gaussian_sweep(&ring, 3, &[Indet::plain("X")], budget)
            .map_err(err)?
            .holds;
        ensure!(exact == swept, "{name}: prime route {exact} vs sweep {swept}");
    }
    Ok(())
}

fn dm_equivalence_small(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    for (name, ring) in small(members) {
        let report = dm_semiring_equivalence(&ring, 3, budget).map_err(err)?;
        ensure!(report.agrees, "{name}: equivalence broke: {report:?}");
        if report.subtractive {
            ensure!(
                report.bounded_exponent_for_all,
                "{name}: subtractive but some pair needs exponent above deg g"
            );
        }
    }
    Ok(())
}

fn bdl_gaussian(budget: &SweepBudget) -> Result<(), String> {
    let s = build_arc(&CatalogSpec::PowerSetLattice { n: 3 }).map_err(err)?;
    let sweep = is_gaussian_up_to(&s, 2, budget).map_err(err)?;
    ensure!(sweep.holds, "degree-2 sweep found {:?}", sweep.witness);
    let lattice = enumerate_ideals(&s, 64).map_err(err)?;
    let cert = gaussian_sufficient(&s, Some(&lattice));
    ensure!(cert == GaussianCertificate::SumGeneration, "certificate = {cert:?}");
    Ok(())
}

fn truncation3_radical(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    let s = member(members, "truncation(3)");
    let ideal = ideal_generated(&s, &[elem(&s, "1")]);
    let radical = ideal.radical();
    let expected: Vec<String> = s
        .labels()
        .iter()
        .filter(|l| l.as_str() != "0")
        .cloned()
        .collect();
    ensure!(
        radical.labels() == expected,
        "radical = {:?}, expected all elements except 0",
        radical.labels()
    );
    ensure!(!radical.is_subtractive().holds, "the radical must not be subtractive");
    Ok(())
}

fn tropical_sample(seed: u64) -> Result<(), String> {
    let report = tropical_gaussian_sample(1000, 20, 5, seed);
    ensure!(report.holds, "{} of {} pairs failed", report.failures, report.pairs);
    Ok(())
}

fn tropical_interval() -> Result<(), String> {
    let report = interval_law_check(12);
    ensure!(
        report.holds,
        "interval law failed on generators {:?}",
        report.witness
    );
    Ok(())
}

fn naturals_prime() -> Result<(), String> {
    let report = naturals_prime_check(60);
    ensure!(report.holds, "{report:?}");
    ensure!(report.ideal_closed && report.prime, "{report:?}");
    Ok(())
}

fn arctic_radical() -> Result<(), String> {
    let report = arctic_radical_check(5, 10);
    ensure!(report.one_in_radical, "1 must lie in the radical of (5)");
    ensure!(report.zero_outside_radical, "0 must stay outside the radical of (5)");
    ensure!(report.holds, "{report:?}");
    Ok(())
}

fn semialgebra_iff_subtractive(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    for (name, ring) in small(members) {
        let verdict = verify_content_semialgebra(&ring, 3, 16, budget).map_err(err)?;
        ensure!(verdict.agrees, "{name}: axioms {} vs subtractive {}", verdict.overall, verdict.subtractive);
    }
    Ok(())
}

fn min_primes(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    for (name, ring) in small(members) {
        if !is_subtractive_semiring(&ring).holds {
            continue;
        }
        let report = min_prime_correspondence(&ring, 16).map_err(err)?;
        ensure!(report.holds, "{name}: {report:?}");
    }
    Ok(())
}

fn series_agreement(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    for (name, ring) in small(members) {
        let report = series_content_check(&ring, 6, 2, budget).map_err(err)?;
        ensure!(report.agrees, "{name}: series radical law vs weak Gaussian disagree");
    }
    Ok(())
}

fn series_lagrassa(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    let report = series_content_check(&member(members, "lagrassa"), 6, 2, budget).map_err(err)?;
    ensure!(!report.radical_holds, "the radical containment must fail");
    let witness = report.witness.as_ref().ok_or("missing witness")?;
    ensure!(
        !witness.radical_of_product_content.contains(&"1".to_string()),
        "witness radical {:?} must omit 1",
        witness.radical_of_product_content
    );
    Ok(())
}

fn series_primes(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    for (name, ring) in small(members) {
        let lattice = enumerate_ideals(&ring, 16).map_err(err)?;
        for prime in lattice.primes() {
            let report = ps_prime_extension_check(&prime, 6, 2, budget).map_err(err)?;
            ensure!(
                report.agrees,
                "{name}, prime {:?}: extension {} vs subtractive {}",
                prime.labels(),
                report.extension_prime_bounded,
                report.prime && report.subtractive
            );
        }
    }
    Ok(())
}

fn zd_regression(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    for (name, ring) in members {
        ensure!(very_few_zero_divisors(ring), "{name}: expected very few zero-divisors");
        let report = property_a(ring, 16).map_err(err)?;
        ensure!(report.holds, "{name}: property A failed on {:?}", report.witness);
    }
    Ok(())
}

fn nil3_power(n: usize) -> Arc<FiniteSemiring> {
    let factors = vec![CatalogSpec::NilChain { n: 3 }; n];
    let spec = if n == 1 { CatalogSpec::NilChain { n: 3 } } else { CatalogSpec::Product(factors) };
    build_arc(&spec).expect("catalog members validate")
}

fn zd_degree_products() -> Result<(), String> {
    for n in 1..=3usize {
        let ring = nil3_power(n);
        let report = zd_degree(&ring, 64).map_err(err)?;
        ensure!(
            report.degree == Some(n as u32),
            "nil_chain(3)^{n}: zd degree = {:?}, expected {n}",
            report.degree
        );
    }
    Ok(())
}

fn zd_poly_transfer(budget: &SweepBudget) -> Result<(), String> {
    for n in 1..=3usize {
        let ring = nil3_power(n);
        let degree_bound = if n == 3 { 1 } else { 2 };
        let report = poly_transfer_check(&ring, degree_bound, 64, budget).map_err(err)?;
        ensure!(report.cover_holds, "nil_chain(3)^{n}: maximal primes fail to cover");
        ensure!(
            report.membership_agrees,
            "nil_chain(3)^{n}: membership mismatch {:?}",
            report.witness
        );
        ensure!(
            report.zd_matches == Some(true),
            "nil_chain(3)^{n}: bounded polynomial cover degree disagrees with zd degree"
        );
    }
    Ok(())
}

fn mccoy_small(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    for (name, ring) in small(members) {
        if !is_subtractive_semiring(&ring).holds {
            continue;
        }
        let report = mccoy_check(&ring, 2, budget).map_err(err)?;
        ensure!(report.holds, "{name}: {:?}", report.witness);
    }
    Ok(())
}

fn nil_extension_small(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    for (name, ring) in small(members) {
        let report = nil_extension_check(&ring, 2, 8, budget).map_err(err)?;
        ensure!(report.holds, "{name}: {report:?}");
    }
    Ok(())
}

fn prime_extension_small(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    let indets = [Indet::plain("X")];
    for (name, ring) in small(members) {
        let lattice = enumerate_ideals(&ring, 16).map_err(err)?;
        for prime in lattice.primes() {
            let report = prime_extension_check(&prime, 2, &indets, budget).map_err(err)?;
            ensure!(report.agrees, "{name}, prime {:?}: {report:?}", prime.labels());
        }
    }
    Ok(())
}

fn reduced_small(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    let mut roster = small(members);
    roster.push(("diamond".into(), build_arc(&diamond_monoid()).map_err(err)?));
    for (name, ring) in roster {
        let report = reduced_transfer_check(&ring, 2, 8, budget).map_err(err)?;
        ensure!(report.agrees, "{name}: {report:?}");
    }
    Ok(())
}

fn module_dm_small(
    members: &[(String, Arc<FiniteSemiring>)],
    budget: &SweepBudget,
) -> Result<(), String> {
    for (name, ring) in small(members) {
        let module = Arc::new(regular_semimodule(&ring));
        let report = dm_semimodule_equivalence(&module, 2, budget).map_err(err)?;
        ensure!(report.agrees, "{name}: module content equivalence broke: {report:?}");
    }
    Ok(())
}

fn module_content_small(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    for (name, ring) in small(members) {
        let lattice = enumerate_ideals(&ring, 16).map_err(err)?;
        let regular = Arc::new(regular_semimodule(&ring));
        let double = Arc::new(direct_sum(&[regular.clone(), regular.clone()]).map_err(err)?);
        for (kind, module) in [("S", regular), ("S+S", double)] {
            let report = content_equivalences(&module, &lattice).map_err(err)?;
            ensure!(report.agree, "{name} over {kind}: equivalences disagree: {report:?}");
        }
    }
    Ok(())
}

fn module_transfer_small(members: &[(String, Arc<FiniteSemiring>)]) -> Result<(), String> {
    for (name, ring) in small(members) {
        let lattice = enumerate_ideals(&ring, 16).map_err(err)?;
        let module = Arc::new(regular_semimodule(&ring));
        if !is_content_semimodule(&module, &lattice).map_err(err)?.holds {
            continue;
        }
        let report = content_transfer_check(&module, &lattice, 64).map_err(err)?;
        ensure!(report.holds, "{name}: transfer conditions split: {:?}", report.witness);
    }
    Ok(())
}
