//! Transfer of ideal-theoretic properties from a semiring `S` to its
//! polynomial extensions `S[X_1, ..., X_r]`.
//!
//! Three bounded checks live here, each sweeping every polynomial (or pair of
//! polynomials) of degree at most `D` over a finite carrier:
//!
//! * [`prime_extension_check`] — the extension `P[X_1, ..., X_r]` of an ideal
//!   `P` is prime exactly when `P` is a subtractive prime of `S`.  Primality
//!   alone is not enough: a prime that is not subtractive admits a product
//!   `fg` all of whose coefficients land in `P` while neither factor lies in
//!   the extension.
//! * [`mccoy_check`] — if `fg = 0` with `g != 0` then some nonzero scalar
//!   already annihilates `f` (the McCoy property, degree-bounded).
//! * [`nil_extension_check`] — a polynomial is nilpotent precisely when every
//!   coefficient is nilpotent, so `Nil(S[X]) = Nil(S)[X]`.
//!
//! Degree bounds make every sweep exhaustive and therefore a proof for the
//! stated fragment; witnesses are concrete polynomials.

use std::sync::Arc;

use serde::Serialize;

use crate::error::Error;
use crate::ideal::{radical_mask, Ideal};
use crate::poly::gaussian::{Grid, Indet};
use crate::poly::Polynomial;
use crate::semiring::FiniteSemiring;
use crate::sweep::{checked_power, decode_base, find_first, SweepBudget};

/// One offending pair `(f, g)` with `fg` inside the extension ideal while
/// neither factor is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeExtensionWitness {
    pub f: String,
    pub g: String,
    pub product: String,
}

/// Outcome of [`prime_extension_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeExtensionReport {
    /// `P` is a prime ideal of the base semiring.
    pub prime: bool,
    /// `P` is subtractive in the base semiring.
    pub subtractive: bool,
    /// No pair of degree-bounded polynomials violates primality of
    /// `P[X_1, ..., X_r]`, and the extension is proper.
    pub extension_prime_bounded: bool,
    /// The bounded verdict matches the structural criterion
    /// `prime && subtractive`.
    pub agrees: bool,
    /// Number of `(f, g)` pairs examined.
    pub pairs: u64,
    pub witness: Option<PrimeExtensionWitness>,
}

fn poly_in_ideal(members: &crate::ElemSet, coeffs: &[usize]) -> bool {
    coeffs.iter().all(|&c| members.contains(c))
}

/// Decides, for every pair of polynomials of degree at most `degree_bound` in
/// the given indeterminates, whether `fg ∈ P[X_1, ..., X_r]` forces one of the
/// factors into the extension, and compares the outcome with the structural
/// criterion: the extension of `P` is prime exactly when `P` is a subtractive
/// prime.  The improper case `P = S` is rejected outright since the extension
/// is then the whole polynomial semiring.
pub fn prime_extension_check(
    ideal: &Ideal,
    degree_bound: u32,
    indets: &[Indet],
    budget: &SweepBudget,
) -> Result<PrimeExtensionReport, Error> {
    if indets.is_empty() {
        return Err(Error::BadParams("at least one indeterminate is required".into()));
    }
    let ring = ideal.ring();
    let n = ring.size() as u64;
    let grid = Grid::new(indets, degree_bound);
    let per_poly = checked_power(n, grid.slots as u32)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    let total = per_poly
        .checked_mul(per_poly)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    budget.admit(total)?;

    let prime = ideal.is_prime();
    let subtractive = ideal.is_subtractive().holds;
    let members = ideal.members();
    let proper = !ideal.is_unit();

    let witness_raw = if proper {
        find_first(total, budget.parallel, |pair| {
            let f = decode_base(pair / per_poly, n, grid.slots);
            let g = decode_base(pair % per_poly, n, grid.slots);
            let product = grid.convolve(&ring, &f, &g);
            if poly_in_ideal(&members, &product)
                && !poly_in_ideal(&members, &f)
                && !poly_in_ideal(&members, &g)
            {
                Some((f, g, product))
            } else {
                None
            }
        })
    } else {
        None
    };

    let extension_prime_bounded = proper && witness_raw.is_none();
    let witness = witness_raw.map(|(_, (f, g, product))| {
        let wide = Grid::new(indets, 2 * degree_bound);
        PrimeExtensionWitness {
            f: grid.render(&ring, &f).to_string(),
            g: grid.render(&ring, &g).to_string(),
            product: wide.render(&ring, &product).to_string(),
        }
    });

    Ok(PrimeExtensionReport {
        prime,
        subtractive,
        extension_prime_bounded,
        agrees: extension_prime_bounded == (prime && subtractive && proper),
        pairs: if proper { total } else { 0 },
        witness,
    })
}

/// A polynomial `f` that is annihilated by a nonzero polynomial but by no
/// nonzero scalar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct McCoyWitness {
    pub f: String,
    pub g: String,
}

/// A sample annihilating pair: `f * g = 0` with `g != 0`, together with a
/// nonzero scalar `s` satisfying `s * f = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct McCoyExample {
    pub f: String,
    pub g: String,
    pub scalar: String,
}

/// Outcome of [`mccoy_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct McCoyReport {
    pub holds: bool,
    pub degree_bound: u32,
    /// Number of `(f, g)` pairs examined.
    pub pairs: u64,
    /// First nontrivial annihilating pair encountered, with its scalar.
    pub example: Option<McCoyExample>,
    pub witness: Option<McCoyWitness>,
}

/// Returns the first nonzero scalar annihilating every entry of `coeffs`,
/// if one exists.
fn scalar_annihilator(ring: &FiniteSemiring, coeffs: &[usize]) -> Option<usize> {
    let zero = ring.zero();
    (0..ring.size())
        .filter(|&s| s != zero)
        .find(|&s| coeffs.iter().all(|&c| ring.times(s, c) == zero))
}

/// Checks the degree-bounded McCoy property: whenever `f * g = 0` with
/// `g != 0` (degrees at most `degree_bound`), some nonzero scalar `s` already
/// satisfies `s * f = 0`.  Since a nonzero scalar annihilating `f` is itself
/// a nonzero annihilating polynomial, the property pins down exactly which
/// polynomials are zero divisors in `S[X]`.
pub fn mccoy_check(
    ring: &Arc<FiniteSemiring>,
    degree_bound: u32,
    budget: &SweepBudget,
) -> Result<McCoyReport, Error> {
    let n = ring.size() as u64;
    let slots = degree_bound as usize + 1;
    let per_poly = checked_power(n, slots as u32)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    let total = per_poly
        .checked_mul(per_poly)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    budget.admit(total)?;

    let zero = ring.zero();
    let zero_product = |f: &[usize], g: &[usize]| -> bool {
        // Univariate convolution, checked coefficient by coefficient.
        (0..2 * slots - 1).all(|k| {
            let mut acc = zero;
            for i in 0..slots {
                if k >= i && k - i < slots {
                    acc = ring.plus(acc, ring.times(f[i], g[k - i]));
                }
            }
            acc == zero
        })
    };

    let witness_raw = find_first(total, budget.parallel, |pair| {
        let f = decode_base(pair / per_poly, n, slots);
        let g = decode_base(pair % per_poly, n, slots);
        if g.iter().all(|&c| c == zero) || !zero_product(&f, &g) {
            return None;
        }
        if scalar_annihilator(ring, &f).is_none() {
            Some((f, g))
        } else {
            None
        }
    });

    // A deterministic illustrative pair: the first f * g = 0 with both
    // factors nonzero, reported alongside the scalar that kills f.
    let example = (0..total)
        .map(|pair| {
            (
                decode_base(pair / per_poly, n, slots),
                decode_base(pair % per_poly, n, slots),
            )
        })
        .find(|(f, g)| {
            f.iter().any(|&c| c != zero) && g.iter().any(|&c| c != zero) && zero_product(f, g)
        })
        .and_then(|(f, g)| {
            scalar_annihilator(ring, &f).map(|s| McCoyExample {
                f: Polynomial::univariate(ring, "X", &f).to_string(),
                g: Polynomial::univariate(ring, "X", &g).to_string(),
                scalar: ring.label(s).to_string(),
            })
        });

    let witness = witness_raw.map(|(_, (f, g))| McCoyWitness {
        f: Polynomial::univariate(ring, "X", &f).to_string(),
        g: Polynomial::univariate(ring, "X", &g).to_string(),
    });

    Ok(McCoyReport { holds: witness.is_none(), degree_bound, pairs: total, example, witness })
}

/// Which side of the nilradical transfer failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NilExtensionFailure {
    /// Every coefficient is nilpotent, yet no power up to the cap vanishes.
    NilpotentCoefficientsPowerNonzero,
    /// Some coefficient escapes the nilradical, yet a power vanishes.
    EscapingCoefficientPowerZero,
}

/// Outcome of [`nil_extension_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilExtensionReport {
    pub holds: bool,
    pub degree_bound: u32,
    pub power_cap: u32,
    /// Members of the nilradical of the base semiring.
    pub nil_labels: Vec<String>,
    /// Smallest `m` with `Nil(S)^m = (0)`; any polynomial with nilpotent
    /// coefficients satisfies `f^m = 0`, so `power_cap` must be at least
    /// this value for the sweep to be conclusive.
    pub nil_power_index: u32,
    /// Number of polynomials examined.
    pub polys: u64,
    pub witness: Option<String>,
    pub failure: Option<NilExtensionFailure>,
}

fn univariate_power(ring: &FiniteSemiring, f: &[usize], k: u32) -> Vec<usize> {
    let mut acc = vec![ring.one()];
    for _ in 0..k {
        let mut next = vec![ring.zero(); acc.len() + f.len() - 1];
        for (i, &a) in acc.iter().enumerate() {
            for (j, &b) in f.iter().enumerate() {
                next[i + j] = ring.plus(next[i + j], ring.times(a, b));
            }
        }
        acc = next;
    }
    acc
}

/// Verifies that the nilradical of `S[X]` consists exactly of the
/// polynomials with nilpotent coefficients, for degrees up to `degree_bound`
/// and powers up to `power_cap`:
///
/// * coefficients inside `Nil(S)` force `f^k = 0` for some `k <= power_cap`;
/// * any coefficient outside `Nil(S)` keeps `f^k != 0` for every such `k`.
///
/// `power_cap` must be at least the nilpotency index of `Nil(S)` (reported as
/// `nil_power_index`), otherwise the first clause could fail for want of
/// patience rather than substance; too small a cap is rejected.
pub fn nil_extension_check(
    ring: &Arc<FiniteSemiring>,
    degree_bound: u32,
    power_cap: u32,
    budget: &SweepBudget,
) -> Result<NilExtensionReport, Error> {
    let n = ring.size() as u64;
    let slots = degree_bound as usize + 1;
    let total = checked_power(n, slots as u32)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    budget.admit(total)?;

    let zero = ring.zero();
    let nil = radical_mask(ring, crate::ElemSet::singleton(zero));

    // Nilpotency index of the nilradical as an ideal: powers of a finite
    // ideal of nilpotents descend strictly to (0).
    let zero_mask = crate::ElemSet::singleton(zero);
    let mut nil_power_index = 1u32;
    let mut power = nil;
    while power != zero_mask {
        let next = crate::ideal::product_mask(ring, power, nil);
        assert_ne!(next, power, "an ideal of nilpotents has vanishing powers");
        power = next;
        nil_power_index += 1;
    }
    if power_cap < nil_power_index {
        return Err(Error::Precondition(format!(
            "power cap {power_cap} is below the nilpotency index {nil_power_index} of the nilradical"
        )));
    }

    let is_zero_poly = |p: &[usize]| p.iter().all(|&c| c == zero);
    let witness_raw = find_first(total, budget.parallel, |index| {
        let f = decode_base(index, n, slots);
        let nilpotent_coeffs = f.iter().all(|&c| nil.contains(c));
        let vanishing = (1..=power_cap).any(|k| is_zero_poly(&univariate_power(ring, &f, k)));
        match (nilpotent_coeffs, vanishing) {
            (true, false) => Some((f, NilExtensionFailure::NilpotentCoefficientsPowerNonzero)),
            (false, true) => Some((f, NilExtensionFailure::EscapingCoefficientPowerZero)),
            _ => None,
        }
    });

    let (witness, failure) = match witness_raw {
        Some((_, (f, kind))) => {
            (Some(Polynomial::univariate(ring, "X", &f).to_string()), Some(kind))
        }
        None => (None, None),
    };

    Ok(NilExtensionReport {
        holds: witness.is_none(),
        degree_bound,
        power_cap,
        nil_labels: nil.iter().map(|i| ring.label(i).to_string()).collect(),
        nil_power_index,
        polys: total,
        witness,
        failure,
    })
}
