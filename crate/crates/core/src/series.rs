//! Truncated formal power series over finite semirings.
//!
//! A series is represented modulo total degree `N`: the image of a
//! polynomial under the quotient map `S[X…] → S[X…]/(deg ≥ N)`.  The
//! content `A_f` is the ideal generated by the stored coefficients (a
//! truncation of the true series may of course have smaller content than
//! the series it came from — sweeps below avoid that by keeping supports
//! small enough that no product ever reaches the truncation degree).
//!
//! Two bounded theorems live here:
//!
//! * `A_{fg} ⊆ A_f A_g` always, and the reverse radical containment
//!   `A_f A_g ⊆ √A_{fg}` holds for all pairs exactly when the coefficient
//!   semiring is weak Gaussian (every prime subtractive);
//! * `P[[X]]` is prime iff `P` is a subtractive prime — checked here as a
//!   degree-bounded sweep against the exact criterion.

use serde::Serialize;
use serde_json::{json, Value};
use std::sync::Arc;

use crate::error::Error;
use crate::ideal::{close_mask, product_mask, radical_mask, Ideal};
use crate::poly::gaussian::is_weak_gaussian;
use crate::poly::Polynomial;
use crate::semiring::FiniteSemiring;
use crate::sweep::{checked_power, decode_base, find_first, SweepBudget};

/// A formal power series truncated at total degree `order` (exclusive):
/// an element of `S[X…]/(deg ≥ order)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: Polynomial,
    order: u32,
}

impl std::fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

impl std::fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + O(deg {})", self.poly, self.order)
    }
}

impl TruncatedSeries {
    /// Truncates a polynomial to total degree `< order`.  Laurent
    /// variables are rejected: negative exponents have no truncation
    /// degree.
    pub fn new(poly: Polynomial, order: u32) -> Result<TruncatedSeries, Error> {
        if order == 0 {
            return Err(Error::BadParams("truncation order must be at least 1".into()));
        }
        if poly.laurent_vars().next().is_some()
            || poly.terms().any(|(m, _)| m.exponents().any(|(_, e)| e < 0))
        {
            return Err(Error::BadParams(
                "power series do not admit negative exponents".into(),
            ));
        }
        let ring = poly.ring().clone();
        let mut truncated = Polynomial::zero(&ring);
        for (monomial, coeff) in poly.terms() {
            if monomial.total_degree() < order as i64 {
                truncated.set_term(monomial.clone(), coeff)?;
            }
        }
        Ok(TruncatedSeries { poly: truncated, order })
    }

    pub fn zero(ring: &Arc<FiniteSemiring>, order: u32) -> TruncatedSeries {
        TruncatedSeries::new(Polynomial::zero(ring), order).expect("zero fits any order")
    }

    pub fn constant(
        ring: &Arc<FiniteSemiring>,
        c: usize,
        order: u32,
    ) -> Result<TruncatedSeries, Error> {
        TruncatedSeries::new(Polynomial::constant(ring, c), order)
    }

    /// Univariate series from dense coefficients; degrees at or above the
    /// order are truncated away.
    pub fn univariate(
        ring: &Arc<FiniteSemiring>,
        var: &str,
        coeffs: &[usize],
        order: u32,
    ) -> Result<TruncatedSeries, Error> {
        TruncatedSeries::new(Polynomial::univariate(ring, var, coeffs), order)
    }

    pub fn ring(&self) -> &Arc<FiniteSemiring> {
        self.poly.ring()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// The stored polynomial part (total degree `< order`).
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Serialize as the polynomial JSON with an `"order"` field.
    pub fn to_json(&self) -> Value {
        let mut value = self.poly.to_json();
        value["order"] = json!(self.order);
        value
    }

    pub fn from_json(ring: &Arc<FiniteSemiring>, value: &Value) -> Result<TruncatedSeries, Error> {
        let order = value
            .get("order")
            .and_then(Value::as_u64)
            .ok_or(Error::BadParams("series JSON needs an \"order\" field".into()))?;
        let order =
            u32::try_from(order).map_err(|_| Error::BadParams("order out of range".into()))?;
        TruncatedSeries::new(Polynomial::from_json(ring, value)?, order)
    }
}

/// Cauchy product in `S[X…]/(deg ≥ order)`: convolution with all terms of
/// total degree at or above the order dropped.
pub fn ps_mul(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    if f.order != g.order {
        return Err(Error::MixedOrders);
    }
    TruncatedSeries::new(f.poly.mul(&g.poly)?, f.order)
}

/// Sum in the truncation (degrees never grow, so nothing is dropped).
pub fn ps_add(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    if f.order != g.order {
        return Err(Error::MixedOrders);
    }
    TruncatedSeries::new(f.poly.add(&g.poly)?, f.order)
}

/// `f^k` within the truncation; `f^0 = 1`.
pub fn ps_power(f: &TruncatedSeries, k: u32) -> Result<TruncatedSeries, Error> {
    let mut acc = TruncatedSeries::constant(f.ring(), f.ring().one(), f.order)?;
    for _ in 0..k {
        acc = ps_mul(&acc, f)?;
    }
    Ok(acc)
}

/// The content `A_f`: the ideal generated by the stored coefficients.
/// This is the content of the truncation; the untruncated series may
/// generate more.
pub fn series_content(f: &TruncatedSeries) -> Ideal {
    f.poly.content()
}

/// One series pair breaking the radical containment `A_f A_g ⊆ √A_{fg}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesPairWitness {
    pub f: String,
    pub g: String,
    pub content_product: Vec<String>,
    pub radical_of_product_content: Vec<String>,
}

/// Outcome of [`series_content_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesContentReport {
    pub order: u32,
    pub support_degree: u32,
    pub pairs: u64,
    /// `A_{fg} ⊆ A_f A_g` held for every pair (it always must).
    pub subset_holds: bool,
    /// `A_f A_g ⊆ √A_{fg}` held for every pair.
    pub radical_holds: bool,
    /// Exact weak-Gaussian verdict for the coefficient semiring.
    pub weak_gaussian: bool,
    /// `radical_holds` matched the exact verdict.
    pub agrees: bool,
    pub witness: Option<SeriesPairWitness>,
}

fn require_support(order: u32, support_degree: u32) -> Result<(), Error> {
    if support_degree == 0 || 2 * support_degree > order {
        return Err(Error::Precondition(format!(
            "support degree {support_degree} needs 1 ≤ D and 2D ≤ order {order} \
             so that products never reach the truncation degree"
        )));
    }
    Ok(())
}

/// Sweeps all univariate series pairs with support in degrees `< D`,
/// checking `A_{fg} ⊆ A_f A_g` and `A_f A_g ⊆ √A_{fg}`, and compares the
/// radical containment with the exact weak-Gaussian verdict.  The support
/// cap keeps every product inside the truncation, so the sweep sees exact
/// polynomial arithmetic and agreement is required, not heuristic.
pub fn series_content_check(
    ring: &Arc<FiniteSemiring>,
    order: u32,
    support_degree: u32,
    budget: &SweepBudget,
) -> Result<SeriesContentReport, Error> {
    require_support(order, support_degree)?;
    let n = ring.size() as u64;
    let len = support_degree as usize;
    let per_poly = checked_power(n, len as u32)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    let pairs = per_poly
        .checked_mul(per_poly)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    budget.admit(pairs)?;

    let zero = ring.zero();
    // (subset failed?, radical failed?) per pair; find the first failure.
    let violation = |idx: u64| -> Option<(bool, Vec<usize>, Vec<usize>)> {
        let fc = decode_base(idx / per_poly, n, len);
        let gc = decode_base(idx % per_poly, n, len);
        let mut conv = vec![zero; 2 * len - 1];
        for (i, &a) in fc.iter().enumerate() {
            for (j, &b) in gc.iter().enumerate() {
                conv[i + j] = ring.plus(conv[i + j], ring.times(a, b));
            }
        }
        let cf = close_mask(ring, fc.iter().copied().collect());
        let cg = close_mask(ring, gc.iter().copied().collect());
        let ch = close_mask(ring, conv.iter().copied().collect());
        let product = product_mask(ring, cf, cg);
        if !ch.is_subset_of(product) {
            return Some((true, fc, gc));
        }
        if !product.is_subset_of(radical_mask(ring, ch)) {
            return Some((false, fc, gc));
        }
        None
    };
    let first = find_first(pairs, budget.parallel, violation);

    let mut subset_holds = true;
    let mut radical_holds = true;
    let mut witness = None;
    if let Some((_, (subset_failure, fc, gc))) = first {
        if subset_failure {
            subset_holds = false;
        } else {
            radical_holds = false;
        }
        let f = TruncatedSeries::univariate(ring, "X", &fc, order)?;
        let g = TruncatedSeries::univariate(ring, "X", &gc, order)?;
        let h = ps_mul(&f, &g)?;
        let product = series_content(&f).product(&series_content(&g))?;
        witness = Some(SeriesPairWitness {
            f: f.to_string(),
            g: g.to_string(),
            content_product: product.labels(),
            radical_of_product_content: series_content(&h).radical().labels(),
        });
    }
    let weak_gaussian = is_weak_gaussian(ring, ring.size())?.holds;
    Ok(SeriesContentReport {
        order,
        support_degree,
        pairs,
        subset_holds,
        radical_holds,
        weak_gaussian,
        agrees: radical_holds == weak_gaussian,
        witness,
    })
}

/// Outcome of [`ps_prime_extension_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsPrimeExtensionReport {
    /// `P` is a prime ideal of `S`.
    pub prime: bool,
    /// `P` is subtractive — with primality, the exact criterion for
    /// `P[[X]]` prime.
    pub subtractive: bool,
    /// No bounded violation: every swept pair with `fg` over `P` had `f`
    /// or `g` over `P`, and `P` is proper.
    pub extension_prime_bounded: bool,
    pub agrees: bool,
    pub pairs: u64,
    pub order: u32,
    pub support_degree: u32,
    /// A pair with all coefficients of `fg` in `P` but neither factor's.
    pub witness: Option<(String, String)>,
}

/// Bounded check that `P[[X]]` is prime, against the exact subtractive-
/// prime criterion.  Sweeps univariate series pairs with support degree
/// `< D`, `2D ≤ order`, so products are truncation-exact; a bounded sweep
/// can only exhibit failures, the positive direction rests on the
/// criterion itself.
pub fn ps_prime_extension_check(
    ideal: &Ideal,
    order: u32,
    support_degree: u32,
    budget: &SweepBudget,
) -> Result<PsPrimeExtensionReport, Error> {
    require_support(order, support_degree)?;
    let ring = ideal.ring().clone();
    let prime = ideal.is_prime();
    let subtractive = ideal.is_subtractive().holds;
    if ideal.is_unit() {
        return Ok(PsPrimeExtensionReport {
            prime,
            subtractive,
            extension_prime_bounded: false,
            agrees: !(prime && subtractive),
            pairs: 0,
            order,
            support_degree,
            witness: None,
        });
    }
    let n = ring.size() as u64;
    let len = support_degree as usize;
    let per_poly = checked_power(n, len as u32)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    let pairs = per_poly
        .checked_mul(per_poly)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    budget.admit(pairs)?;

    let members = ideal.members();
    let zero = ring.zero();
    let violation = |idx: u64| -> Option<(Vec<usize>, Vec<usize>)> {
        let fc = decode_base(idx / per_poly, n, len);
        let gc = decode_base(idx % per_poly, n, len);
        let f_in = fc.iter().all(|&c| members.contains(c));
        let g_in = gc.iter().all(|&c| members.contains(c));
        if f_in || g_in {
            return None;
        }
        let mut conv = vec![zero; 2 * len - 1];
        for (i, &a) in fc.iter().enumerate() {
            for (j, &b) in gc.iter().enumerate() {
                conv[i + j] = ring.plus(conv[i + j], ring.times(a, b));
            }
        }
        if conv.iter().all(|&c| members.contains(c)) {
            Some((fc, gc))
        } else {
            None
        }
    };
    let first = find_first(pairs, budget.parallel, violation);
    let extension_prime_bounded = first.is_none();
    let witness = first.map(|(_, (fc, gc))| {
        let render = |coeffs: &[usize]| {
            TruncatedSeries::univariate(&ring, "X", coeffs, order)
                .expect("support fits the order")
                .to_string()
        };
        (render(&fc), render(&gc))
    });
    Ok(PsPrimeExtensionReport {
        prime,
        subtractive,
        extension_prime_bounded,
        agrees: extension_prime_bounded == (prime && subtractive),
        pairs,
        order,
        support_degree,
        witness,
    })
}
