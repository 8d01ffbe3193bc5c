//! The computable tier: min-plus (tropical) arithmetic with its closed-form
//! ideal law, plus bounded spot checks for two infinite semirings that fail
//! the weak Gaussian property.
//!
//! The tropical semiring `(ℕ₀ ∪ {+∞}, min, +)` has an infinite carrier, so
//! none of the exhaustive finite machinery applies.  What rescues it is a
//! closed form: every ideal is an upward interval, `(a_1, ..., a_n) =
//! [min a_i, +∞]`, so content ideals are determined by their least
//! coefficient and the Gaussian identity `c(fg) = c(f)c(g)` collapses to
//! additivity of minima, `min(coeffs(fg)) = min(coeffs(f)) + min(coeffs(g))`.
//! That identity holds for every pair — the tropical semiring is Gaussian —
//! and [`tropical_gaussian_check`] verifies it pair by pair, while
//! [`interval_law_check`] validates the interval description itself against
//! brute-force linear-combination membership on a bounded carrier.
//!
//! Two further infinite semirings are covered only by arithmetic spot
//! checks of their known failure witnesses:
//!
//! * `(ℕ₀, +, ·)`: the complement of `{1}` is a prime ideal that is not
//!   subtractive (`2` and `2 + 1` lie in it, `1` does not) —
//!   [`naturals_prime_check`];
//! * the Arctic semiring `(ℕ₀ ∪ {-∞}, max, +)`: the radical of any
//!   nontrivial ideal is `ℕ ∪ {-∞}`, which fails subtractivity against `0`
//!   — [`arctic_radical_check`].

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// An element of the tropical semiring `ℕ₀ ∪ {+∞}`; `None` encodes `+∞`,
/// the additive identity (and the coefficient value of absent terms).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Tropical(pub Option<u64>);

impl Tropical {
    pub const INFINITY: Tropical = Tropical(None);

    pub fn finite(n: u64) -> Tropical {
        Tropical(Some(n))
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_none()
    }

    /// Tropical addition: minimum, with `+∞` neutral.
    pub fn plus(self, other: Tropical) -> Tropical {
        match (self.0, other.0) {
            (Some(a), Some(b)) => Tropical(Some(a.min(b))),
            (Some(a), None) | (None, Some(a)) => Tropical(Some(a)),
            (None, None) => Tropical(None),
        }
    }

    /// Tropical multiplication: integer addition, with `+∞` absorbing.
    pub fn times(self, other: Tropical) -> Tropical {
        match (self.0, other.0) {
            (Some(a), Some(b)) => Tropical(Some(a.saturating_add(b))),
            _ => Tropical(None),
        }
    }

    /// Numeric comparison with `+∞` greatest.
    fn leq(self, other: Tropical) -> bool {
        match (self.0, other.0) {
            (Some(a), Some(b)) => a <= b,
            (Some(_), None) | (None, None) => true,
            (None, Some(_)) => false,
        }
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "inf"),
        }
    }
}

/// A univariate polynomial over the tropical semiring.  Only finite
/// coefficients are stored; an absent exponent has coefficient `+∞`.
/// Rendered with ordinary polynomial notation, where `+` between terms
/// means tropical addition (min) and coefficients act by integer addition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TropicalPoly {
    terms: BTreeMap<u32, u64>,
}

impl TropicalPoly {
    /// The zero polynomial (all coefficients `+∞`).
    pub fn zero() -> TropicalPoly {
        TropicalPoly { terms: BTreeMap::new() }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; duplicate
    /// exponents combine tropically (minimum wins).
    pub fn from_terms(terms: &[(u32, u64)]) -> TropicalPoly {
        let mut map = BTreeMap::new();
        for &(e, c) in terms {
            map.entry(e).and_modify(|v: &mut u64| *v = (*v).min(c)).or_insert(c);
        }
        TropicalPoly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: u32) -> Tropical {
        Tropical(self.terms.get(&exponent).copied())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Tropical sum: pointwise minimum of coefficients.
    pub fn plus(&self, other: &TropicalPoly) -> TropicalPoly {
        let mut terms = self.terms.clone();
        for (&e, &c) in &other.terms {
            terms.entry(e).and_modify(|v| *v = (*v).min(c)).or_insert(c);
        }
        TropicalPoly { terms }
    }

    /// Tropical product: min-plus convolution,
    /// `(fg)_k = min over i+j=k of (f_i + g_j)`.
    pub fn times(&self, other: &TropicalPoly) -> TropicalPoly {
        let mut terms: BTreeMap<u32, u64> = BTreeMap::new();
        for (&i, &a) in &self.terms {
            for (&j, &b) in &other.terms {
                let e = i + j;
                let c = a.saturating_add(b);
                terms.entry(e).and_modify(|v| *v = (*v).min(c)).or_insert(c);
            }
        }
        TropicalPoly { terms }
    }

    /// The least coefficient — the single generator of the content ideal.
    pub fn min_coeff(&self) -> Tropical {
        Tropical(self.terms.values().copied().min())
    }

    pub fn content(&self) -> TropicalIdeal {
        TropicalIdeal { lower: self.min_coeff() }
    }
}

impl fmt::Display for TropicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "inf");
        }
        let mut first = true;
        for (&e, &c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*X")?,
                _ => write!(f, "{c}*X^{e}")?,
            }
        }
        Ok(())
    }
}

/// An ideal of the tropical semiring: the upward interval
/// `[lower, +∞]` (together with `+∞` itself).  `lower = +∞` is the zero
/// ideal `{+∞}`; `lower = 0` is the whole semiring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TropicalIdeal {
    pub lower: Tropical,
}

impl TropicalIdeal {
    /// The ideal generated by the given elements: the interval from their
    /// minimum upward.
    pub fn generated(gens: &[Tropical]) -> TropicalIdeal {
        let lower = gens.iter().fold(Tropical::INFINITY, |acc, &g| acc.plus(g));
        TropicalIdeal { lower }
    }

    pub fn contains(&self, x: Tropical) -> bool {
        self.lower.leq(x)
    }

    /// Ideal product: lower bounds add (`[a, ∞] · [b, ∞] = [a + b, ∞]`).
    pub fn product(&self, other: &TropicalIdeal) -> TropicalIdeal {
        TropicalIdeal { lower: self.lower.times(other.lower) }
    }
}

/// Outcome of [`tropical_gaussian_check`], recording both sides of
/// `c(fg) = c(f)c(g)` by their interval lower bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TropicalGaussianReport {
    pub f: String,
    pub g: String,
    pub product: String,
    /// Lower bound of `c(fg)`.
    pub content_of_product: Tropical,
    /// Lower bound of `c(f)c(g)`.
    pub content_product: Tropical,
    pub holds: bool,
}

/// Verifies the Gaussian identity for one pair of tropical polynomials:
/// the least coefficient of `fg` equals the sum of the least coefficients
/// of `f` and `g` (interval form of `c(fg) = c(f)c(g)`).
pub fn tropical_gaussian_check(f: &TropicalPoly, g: &TropicalPoly) -> TropicalGaussianReport {
    let product = f.times(g);
    let lhs = product.min_coeff();
    let rhs = f.min_coeff().times(g.min_coeff());
    TropicalGaussianReport {
        f: f.to_string(),
        g: g.to_string(),
        product: product.to_string(),
        content_of_product: lhs,
        content_product: rhs,
        holds: lhs == rhs,
    }
}

/// Outcome of [`tropical_gaussian_sample`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TropicalSampleReport {
    pub pairs: u64,
    pub max_coeff: u64,
    pub max_degree: u32,
    pub seed: u64,
    pub failures: u64,
    pub holds: bool,
}

/// Samples random pairs of tropical polynomials (coefficients up to
/// `max_coeff`, degree up to `max_degree`, sparse terms allowed) from a
/// seeded generator and checks the Gaussian identity on each.
pub fn tropical_gaussian_sample(
    pairs: u64,
    max_coeff: u64,
    max_degree: u32,
    seed: u64,
) -> TropicalSampleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample_poly = |rng: &mut ChaCha8Rng| {
        let mut terms = Vec::new();
        for e in 0..=max_degree {
            // Roughly one slot in four is left at +∞ to exercise sparsity.
            if rng.gen_range(0..4) > 0 {
                terms.push((e, rng.gen_range(0..=max_coeff)));
            }
        }
        TropicalPoly::from_terms(&terms)
    };
    let mut failures = 0;
    for _ in 0..pairs {
        let f = sample_poly(&mut rng);
        let g = sample_poly(&mut rng);
        if !tropical_gaussian_check(&f, &g).holds {
            failures += 1;
        }
    }
    TropicalSampleReport { pairs, max_coeff, max_degree, seed, failures, holds: failures == 0 }
}

/// Outcome of [`interval_law_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalLawReport {
    pub carrier_bound: u64,
    pub generator_sets: u64,
    pub holds: bool,
    /// First generator set whose brute-force span disagrees with the
    /// interval description, if any.
    pub witness: Option<Vec<u64>>,
}

/// Validates the interval ideal law on a bounded carrier: for every
/// generator set drawn from `[0, carrier_bound]` (up to three generators),
/// the set of tropical linear combinations `min_i(s_i + a_i)` restricted to
/// the carrier equals `{x : x >= min a_i} ∪ {+∞}`.
pub fn interval_law_check(carrier_bound: u64) -> IntervalLawReport {
    let carrier: Vec<Tropical> = (0..=carrier_bound)
        .map(Tropical::finite)
        .chain(std::iter::once(Tropical::INFINITY))
        .collect();

    let mut generator_sets = 0u64;
    let mut witness = None;

    let mut gen_lists: Vec<Vec<u64>> = vec![vec![]];
    for a in 0..=carrier_bound {
        gen_lists.push(vec![a]);
        for b in a..=carrier_bound {
            gen_lists.push(vec![a, b]);
            for c in b..=carrier_bound {
                gen_lists.push(vec![a, b, c]);
            }
        }
    }

    'outer: for gens in &gen_lists {
        generator_sets += 1;
        let gen_elems: Vec<Tropical> = gens.iter().map(|&a| Tropical::finite(a)).collect();
        let ideal = TropicalIdeal::generated(&gen_elems);

        // Brute-force span: all values min_i(s_i + a_i) with scalars drawn
        // from the bounded carrier, plus the empty combination (+∞).
        let mut span: BTreeSet<Option<u64>> = BTreeSet::new();
        span.insert(None);
        let mut stack = vec![(0usize, Tropical::INFINITY)];
        while let Some((i, acc)) = stack.pop() {
            if i == gen_elems.len() {
                span.insert(acc.0);
                continue;
            }
            for &s in &carrier {
                stack.push((i + 1, s.times(gen_elems[i]).plus(acc)));
            }
        }

        for &x in &carrier {
            let brute = span.contains(&x.0);
            if brute != ideal.contains(x) {
                witness = Some(gens.clone());
                break 'outer;
            }
        }
    }

    IntervalLawReport { carrier_bound, generator_sets, holds: witness.is_none(), witness }
}

/// An element of the Arctic semiring `ℕ₀ ∪ {-∞}` under `(max, +)`;
/// `None` encodes `-∞`, the additive identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arctic(pub Option<u64>);

impl Arctic {
    pub const NEG_INFINITY: Arctic = Arctic(None);

    pub fn finite(n: u64) -> Arctic {
        Arctic(Some(n))
    }

    /// Arctic addition: maximum, with `-∞` neutral.
    pub fn plus(self, other: Arctic) -> Arctic {
        match (self.0, other.0) {
            (Some(a), Some(b)) => Arctic(Some(a.max(b))),
            (Some(a), None) | (None, Some(a)) => Arctic(Some(a)),
            (None, None) => Arctic(None),
        }
    }

    /// Arctic multiplication: integer addition, with `-∞` absorbing.
    pub fn times(self, other: Arctic) -> Arctic {
        match (self.0, other.0) {
            (Some(a), Some(b)) => Arctic(Some(a.saturating_add(b))),
            _ => Arctic(None),
        }
    }

    pub fn power(self, k: u32) -> Arctic {
        let mut acc = Arctic::finite(0); // multiplicative identity
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }
}

impl fmt::Display for Arctic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "-inf"),
        }
    }
}

/// Outcome of [`arctic_radical_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArcticRadicalReport {
    /// Generator of the principal ideal under scrutiny.
    pub k: u64,
    /// `1` lies in the radical of `(k)` (since `1` to the power `k` is `k`).
    pub one_in_radical: bool,
    /// `0` stays outside the radical for every power up to the cap.
    pub zero_outside_radical: bool,
    pub power_cap: u32,
    /// The subtractivity failure inside the radical: `a` in the radical,
    /// `a ⊕ b` in the radical, `b` outside.
    pub witness: (String, String, String),
    pub holds: bool,
}

/// Spot-checks why the Arctic semiring is not weak Gaussian: the radical of
/// the principal ideal `(k)` (for `k >= 1`) contains every positive natural
/// but not `0`, and `max(k, 0) = k` exhibits the subtractivity failure.
/// Membership in `(k)` uses the closed form `x ∈ (k) iff x = -∞ or x >= k`,
/// itself verified against tropical-style linear combinations in tests.
pub fn arctic_radical_check(k: u64, power_cap: u32) -> ArcticRadicalReport {
    assert!(k >= 1, "the ideal must be nontrivial");
    let in_ideal = |x: Arctic| match x.0 {
        None => true,
        Some(v) => v >= k,
    };
    // 1^k in arctic arithmetic is the integer k, landing in (k) exactly.
    let one_in_radical = (1..=power_cap).any(|m| in_ideal(Arctic::finite(1).power(m)));
    let zero_outside_radical = (1..=power_cap).all(|m| !in_ideal(Arctic::finite(0).power(m)));

    // a = k lies in the radical, b = 0 does not, yet a ⊕ b = max(k, 0) = k
    // lands back in the radical.
    let a = Arctic::finite(k);
    let b = Arctic::finite(0);
    let sum = a.plus(b);
    let sum_in_radical = (1..=power_cap).any(|m| in_ideal(sum.power(m)));

    ArcticRadicalReport {
        k,
        one_in_radical,
        zero_outside_radical,
        power_cap,
        witness: (a.to_string(), sum.to_string(), b.to_string()),
        holds: one_in_radical && zero_outside_radical && sum_in_radical,
    }
}

/// Outcome of [`naturals_prime_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NaturalsPrimeReport {
    pub bound: u64,
    /// `P = ℕ₀ \ {1}` is closed under addition and scalar multiplication on
    /// the sampled range.
    pub ideal_closed: bool,
    /// `ab ∈ P` forces `a ∈ P` or `b ∈ P` on the sampled range.
    pub prime: bool,
    /// The subtractivity failure: `a ∈ P`, `a + b ∈ P`, `b ∉ P`.
    pub witness: (u64, u64),
    pub holds: bool,
}

/// Spot-checks why `(ℕ₀, +, ·)` is not weak Gaussian: the complement of
/// `{1}` is a prime ideal, but `2 ∈ P` and `2 + 1 = 3 ∈ P` while `1 ∉ P`.
/// Ideal and primality properties are verified exhaustively on `[0, bound]`.
pub fn naturals_prime_check(bound: u64) -> NaturalsPrimeReport {
    let in_p = |x: u64| x != 1;
    let mut ideal_closed = true;
    let mut prime = true;
    for a in 0..=bound {
        for b in 0..=bound {
            if in_p(a) && in_p(b) && !in_p(a + b) {
                ideal_closed = false;
            }
            if in_p(a) && !in_p(a * b) {
                // Scalar multiples of ideal members must stay inside.
                ideal_closed = false;
            }
            if in_p(a * b) && !in_p(a) && !in_p(b) {
                prime = false;
            }
        }
    }
    let witness = (2u64, 1u64);
    let witness_valid = in_p(witness.0) && in_p(witness.0 + witness.1) && !in_p(witness.1);
    NaturalsPrimeReport {
        bound,
        ideal_closed,
        prime,
        witness,
        holds: ideal_closed && prime && witness_valid,
    }
}
