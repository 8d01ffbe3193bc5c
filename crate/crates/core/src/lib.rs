//! Exact computer algebra for finite commutative semirings.
//!
//! The crate centers on content ideals of polynomials — the ideal generated
//! by a polynomial's coefficients — and on the classification questions that
//! make semirings genuinely different from rings: which carriers satisfy the
//! Dedekind–Mertens content formula, which are Gaussian
//! (`c(fg) = c(f)c(g)`), which are only weak Gaussian
//! (`sqrt(c(fg)) = sqrt(c(f)c(g))`), and how zero-divisors, primes, and
//! radicals mediate between those layers.
//!
//! Everything is exhaustive and deterministic: semirings are finite tables
//! validated axiom-by-axiom, ideals are bitsets, and polynomial sweeps
//! enumerate entire coefficient spaces up to a degree bound. A small
//! catalog of standard carriers (lattices, truncations, nilpotent chains,
//! …) exercises every boundary the theory has.

pub mod catalog;
pub mod elemset;
pub mod error;
pub mod ideal;
pub mod poly;
pub mod report;
pub mod semimodule;
pub mod semiring;
pub mod semialgebra;
pub mod series;
pub mod zerodiv;
pub mod sweep;
pub mod tropical;

pub use elemset::ElemSet;
pub use error::{Axiom, AxiomViolation, Error};
pub use ideal::{
    annihilator, enumerate_ideals, ideal_generated, is_subtractive_semiring, nil_radical,
    unit_ideal, zero_ideal, Ideal, IdealLattice, SubtractiveCheck, SubtractivityReport,
};
pub use poly::dm::{dm_exponent, dm_semiring_equivalence, DmEquivalenceReport, DmReport};
pub use report::{
    classify, classify_spec, ClassificationReport, Config, Field, GaussianSection,
    InputDescriptor, LatticeSummary, SubtractiveSection, SCHEMA_VERSION,
};
pub use poly::extension::{
    mccoy_check, nil_extension_check, prime_extension_check, McCoyReport, NilExtensionReport,
    PrimeExtensionReport,
};
pub use series::{
    ps_add, ps_mul, ps_power, ps_prime_extension_check, series_content, series_content_check,
    PsPrimeExtensionReport, SeriesContentReport, TruncatedSeries,
};
pub use semialgebra::{
    min_prime_correspondence, reduced_transfer_check, verify_content_semialgebra, AxiomCheck,
    MinPrimeReport, ReducedTransferReport, SemialgebraVerdict,
};
pub use zerodiv::{
    ass_primes, is_primal, poly_transfer_check, property_a, very_few_zero_divisors, zd_degree,
    zero_divisor_profile, zero_divisors, PolyTransferReport, PropertyAReport, ZdDegreeReport,
    ZeroDivisorProfile,
};
pub use semimodule::{
    content_cm, content_equivalences, content_transfer_check, direct_sum, dm_semimodule,
    dm_semimodule_equivalence, enumerate_subsemimodules, ideal_action, is_content_semimodule,
    is_subtractive_semimodule, regular_semimodule, scalar_poly_mul, subsemimodule_generated,
    validate_semimodule, zero_subsemimodule, ContentEquivalenceReport, ContentSemimoduleReport,
    ContentTransferReport, FiniteSemimodule, ModulePoly, ModuleSubtractivityReport,
    RawSemimodule, SemimoduleDmEquivalence, SemimoduleDmReport, Subsemimodule, SubmoduleLattice,
};
pub use poly::gaussian::{
    gaussian_sufficient, is_gaussian_up_to, is_weak_gaussian, weak_gaussian_sweep, ChainSweep,
    ContentCtx, GaussianCertificate, GaussianSweep, Indet, WeakGaussianReport,
};
pub use poly::{Monomial, Polynomial};
pub use tropical::{
    arctic_radical_check, interval_law_check, naturals_prime_check, tropical_gaussian_check,
    tropical_gaussian_sample, Arctic, Tropical, TropicalIdeal, TropicalPoly,
};
pub use semiring::{
    product_semiring, same_ring, structural_flags, validate_semiring, FiniteSemiring, RawSemiring,
    StructuralFlags,
};
pub use sweep::SweepBudget;
