//! Polynomials and Laurent polynomials over a finite semiring.
//!
//! Coefficients are element indices of a shared [`FiniteSemiring`]; terms
//! live in a `BTreeMap` keyed by monomial so every traversal is
//! deterministic. The central invariant of the whole crate is the *content*
//! of a polynomial: the ideal generated by its coefficients. Containment
//! `c(fg) ⊆ c(f)c(g)` always holds; the classification machinery in the
//! sibling modules measures how far the reverse inclusion fails.
//!
//! Variables marked *Laurent* may carry negative exponents. That matters
//! mathematically: some carriers are Gaussian for ordinary polynomials yet
//! fail once inverses of variables are allowed, so sweeps can opt in.

pub mod dm;
pub mod extension;
pub mod gaussian;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::Error;
use crate::ideal::{ideal_generated, Ideal};
use crate::semiring::{same_ring, FiniteSemiring};

/// A monomial: a finite map from variable names to nonzero exponents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(BTreeMap<String, i64>);

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(name: &str) -> Monomial {
        Monomial::from_pairs(&[(name, 1)])
    }

    pub fn from_pairs(pairs: &[(&str, i64)]) -> Monomial {
        let mut map = BTreeMap::new();
        for &(v, e) in pairs {
            if e != 0 {
                *map.entry(v.to_string()).or_insert(0) += e;
            }
        }
        map.retain(|_, e| *e != 0);
        Monomial(map)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, var: &str) -> i64 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(v, &e)| (v.as_str(), e))
    }

    pub fn total_degree(&self) -> i64 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut map = self.0.clone();
        for (v, e) in &other.0 {
            *map.entry(v.clone()).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        Monomial(map)
    }

    /// First variable carrying a negative exponent, if any.
    pub fn negative_var(&self) -> Option<(&str, i64)> {
        self.0.iter().find(|(_, &e)| e < 0).map(|(v, &e)| (v.as_str(), e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A polynomial with coefficients in a fixed finite semiring.
///
/// Zero coefficients are never stored. Variables listed in the Laurent set
/// may appear with negative exponents; all others are checked at insertion
/// and parse time.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<FiniteSemiring>,
    laurent: BTreeSet<String>,
    terms: BTreeMap<Monomial, usize>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "{}", self.ring.label(self.ring.zero()));
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let label = self.ring.label(c);
                if m.is_one() {
                    label.to_string()
                } else if c == self.ring.one() {
                    m.to_string()
                } else {
                    format!("{label}*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<FiniteSemiring>) -> Polynomial {
        Polynomial { ring: ring.clone(), laurent: BTreeSet::new(), terms: BTreeMap::new() }
    }

    /// Zero polynomial whose named variables may carry negative exponents.
    pub fn zero_laurent(ring: &Arc<FiniteSemiring>, laurent: &[&str]) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            laurent: laurent.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<FiniteSemiring>, c: usize) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        p.set_term(Monomial::one(), c).expect("constant term");
        p
    }

    /// Dense univariate constructor: `coeffs[i]` is the coefficient of `var^i`.
    pub fn univariate(ring: &Arc<FiniteSemiring>, var: &str, coeffs: &[usize]) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        for (i, &c) in coeffs.iter().enumerate() {
            p.set_term(Monomial::from_pairs(&[(var, i as i64)]), c).expect("dense term");
        }
        p
    }

    /// Insert or overwrite one term. A zero coefficient deletes the term.
    pub fn set_term(&mut self, monomial: Monomial, coeff: usize) -> Result<(), Error> {
        if coeff >= self.ring.size() {
            return Err(Error::BadParams(format!("coefficient index {coeff} out of range")));
        }
        if let Some((v, e)) = monomial.exponents().find(|(v, e)| *e < 0 && !self.laurent.contains(*v)) {
            return Err(Error::NegativeExponent(format!("{v}^{e}")));
        }
        if coeff == self.ring.zero() {
            self.terms.remove(&monomial);
        } else {
            self.terms.insert(monomial, coeff);
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<FiniteSemiring> {
        &self.ring
    }

    pub fn laurent_vars(&self) -> impl Iterator<Item = &str> {
        self.laurent.iter().map(String::as_str)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, usize)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, monomial: &Monomial) -> usize {
        self.terms.get(monomial).copied().unwrap_or(self.ring.zero())
    }

    /// Coefficient indices in term order.
    pub fn coefficients(&self) -> Vec<usize> {
        self.terms.values().copied().collect()
    }

    /// Highest exponent of `var`, or `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    /// Lowest exponent of `var` (can be negative for Laurent variables).
    pub fn min_degree_in(&self, var: &str) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).min()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// All variables that occur, plus declared Laurent variables.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut vs: BTreeSet<String> =
            self.terms.keys().flat_map(|m| m.vars().map(str::to_string)).collect();
        vs.extend(self.laurent.iter().cloned());
        vs
    }

    fn check_same(&self, other: &Polynomial) -> Result<(), Error> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::MixedSemirings)
        }
    }

    fn merged_laurent(&self, other: &Polynomial) -> BTreeSet<String> {
        self.laurent.union(&other.laurent).cloned().collect()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_same(other)?;
        let mut out = Polynomial {
            ring: self.ring.clone(),
            laurent: self.merged_laurent(other),
            terms: self.terms.clone(),
        };
        for (m, &c) in &other.terms {
            let cur = out.coeff(m);
            out.set_term(m.clone(), self.ring.plus(cur, c))?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        self.check_same(other)?;
        let mut acc: BTreeMap<Monomial, usize> = BTreeMap::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m = ma.mul(mb);
                let c = self.ring.times(ca, cb);
                let entry = acc.entry(m).or_insert_with(|| self.ring.zero());
                *entry = self.ring.plus(*entry, c);
            }
        }
        acc.retain(|_, c| *c != self.ring.zero());
        Ok(Polynomial { ring: self.ring.clone(), laurent: self.merged_laurent(other), terms: acc })
    }

    /// The content ideal: the ideal generated by all coefficients.
    pub fn content(&self) -> Ideal {
        ideal_generated(&self.ring, &self.coefficients())
    }

    /// The one-variable-at-a-time substitution `folded ↦ target^multiplier`.
    ///
    /// On monomials this is additive, so the map is always multiplicative:
    /// `(fg)* = f* g*` holds for any multiplier. What the precondition buys
    /// is injectivity on this polynomial's support — the window of `target`
    /// exponents must fit strictly inside one `multiplier` step — so the
    /// support and the coefficient multiset (hence the content) survive the
    /// substitution. Too small a multiplier is rejected rather than
    /// silently merging terms.
    pub fn star_map(&self, target: &str, folded: &str, multiplier: i64) -> Result<Polynomial, Error> {
        if target == folded {
            return Err(Error::BadParams("star map needs distinct variables".into()));
        }
        let hi = self.degree_in(target).unwrap_or(0).max(0);
        let lo = self.min_degree_in(target).unwrap_or(0).min(0);
        let window = hi - lo;
        if multiplier <= window {
            return Err(Error::FoldTooSmall { multiplier, degree: window });
        }
        let mut laurent = self.laurent.clone();
        if laurent.remove(folded) {
            laurent.insert(target.to_string());
        }
        let mut out = Polynomial { ring: self.ring.clone(), laurent, terms: BTreeMap::new() };
        for (m, &c) in &self.terms {
            let mut pairs: Vec<(&str, i64)> = m
                .exponents()
                .filter(|(v, _)| *v != folded && *v != target)
                .collect();
            let e = m.exponent(target) + multiplier * m.exponent(folded);
            pairs.push((target, e));
            out.set_term(Monomial::from_pairs(&pairs), c)?;
        }
        assert_eq!(out.num_terms(), self.num_terms(), "star map merged support");
        Ok(out)
    }

    /// Fold every variable into `target` with weights `1, multiplier,
    /// multiplier², …` (target first, remaining variables in sorted order).
    ///
    /// Equivalent to iterating [`Polynomial::star_map`] once per variable
    /// with the same multiplier. Distinct monomials stay distinct whenever
    /// `multiplier` exceeds every exponent in absolute value — strictly, and
    /// by a factor of two once negative exponents participate, since digits
    /// then range over a balanced window. Under that bound the map preserves
    /// the coefficient multiset, hence the content, and it is multiplicative
    /// on any product whose result also satisfies it.
    pub fn fold_to_univariate(&self, target: &str, multiplier: i64) -> Result<Polynomial, Error> {
        let has_negative = self.terms.keys().any(|m| m.negative_var().is_some());
        let max_abs = self
            .terms
            .keys()
            .flat_map(|m| m.exponents().map(|(_, e)| e.abs()))
            .max()
            .unwrap_or(0);
        let needed = if has_negative { 2 * max_abs } else { max_abs };
        if multiplier <= needed {
            return Err(Error::FoldTooSmall { multiplier, degree: needed });
        }
        let mut ordered: Vec<String> = self.variables().into_iter().collect();
        if let Some(pos) = ordered.iter().position(|v| v == target) {
            // An existing target keeps weight 1; a fresh name takes none.
            ordered.remove(pos);
            ordered.insert(0, target.to_string());
        }
        let weight: BTreeMap<&str, i64> = {
            let mut w = BTreeMap::new();
            let mut p = 1i64;
            for v in &ordered {
                w.insert(v.as_str(), p);
                p = p.checked_mul(multiplier).ok_or_else(|| {
                    Error::BadParams("fold multiplier overflows exponent range".into())
                })?;
            }
            w
        };
        let laurent: BTreeSet<String> = if self.laurent.is_empty() {
            BTreeSet::new()
        } else {
            [target.to_string()].into_iter().collect()
        };
        let mut out = Polynomial { ring: self.ring.clone(), laurent, terms: BTreeMap::new() };
        for (m, &c) in &self.terms {
            let e: i64 = m.exponents().map(|(v, e)| e * weight[v]).sum();
            let folded = Monomial::from_pairs(&[(target, e)]);
            debug_assert!(!out.terms.contains_key(&folded), "fold collision");
            out.set_term(folded, c)?;
        }
        debug_assert_eq!(out.num_terms(), self.num_terms());
        Ok(out)
    }

    /// Serialize as `{"laurent": [...], "terms": [{"monomial": {...}, "coeff": "label"}]}`.
    /// The `laurent` key is omitted when empty.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let mono: serde_json::Map<String, Value> =
                    m.exponents().map(|(v, e)| (v.to_string(), json!(e))).collect();
                json!({"monomial": mono, "coeff": self.ring.label(c)})
            })
            .collect();
        if self.laurent.is_empty() {
            json!({ "terms": terms })
        } else {
            json!({"laurent": self.laurent, "terms": terms})
        }
    }

    pub fn from_json(ring: &Arc<FiniteSemiring>, value: &Value) -> Result<Polynomial, Error> {
        let obj = value.as_object().ok_or_else(|| Error::BadParams("polynomial must be an object".into()))?;
        let laurent: Vec<&str> = match obj.get("laurent") {
            None => Vec::new(),
            Some(Value::Array(vs)) => vs
                .iter()
                .map(|v| v.as_str().ok_or_else(|| Error::BadParams("laurent entries must be strings".into())))
                .collect::<Result<_, _>>()?,
            Some(_) => return Err(Error::BadParams("laurent must be an array".into())),
        };
        let mut poly = Polynomial::zero_laurent(ring, &laurent);
        let terms = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::BadParams("polynomial needs a terms array".into()))?;
        for term in terms {
            let mono_obj = term
                .get("monomial")
                .and_then(Value::as_object)
                .ok_or_else(|| Error::BadParams("term needs a monomial object".into()))?;
            let mut pairs: Vec<(&str, i64)> = Vec::new();
            for (v, e) in mono_obj {
                let e = e
                    .as_i64()
                    .ok_or_else(|| Error::BadParams(format!("exponent of {v} must be an integer")))?;
                pairs.push((v, e));
            }
            let label = term
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::BadParams("term needs a coeff label".into()))?;
            let coeff = ring
                .index_of(label)
                .ok_or_else(|| Error::BadParams(format!("unknown coefficient label {label:?}")))?;
            let monomial = Monomial::from_pairs(&pairs);
            let combined = ring.plus(poly.coeff(&monomial), coeff);
            poly.set_term(monomial, combined)?;
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_arc, standard_members, CatalogSpec};

    fn boolean() -> Arc<FiniteSemiring> {
        build_arc(&CatalogSpec::Boolean).unwrap()
    }

    fn chain_c() -> Arc<FiniteSemiring> {
        build_arc(&CatalogSpec::ChainC).unwrap()
    }

    #[test]
    fn monomial_arithmetic() {
        let m = Monomial::from_pairs(&[("X", 2), ("Y", 1)]);
        let n = Monomial::from_pairs(&[("X", -2), ("Z", 3)]);
        let p = m.mul(&n);
        assert_eq!(p, Monomial::from_pairs(&[("Y", 1), ("Z", 3)]));
        assert_eq!(p.exponent("X"), 0);
        assert_eq!(p.total_degree(), 4);
        assert_eq!(m.to_string(), "X^2*Y");
        assert_eq!(Monomial::one().to_string(), "1");
    }

    #[test]
    fn addition_and_display() {
        let b = boolean();
        let f = Polynomial::univariate(&b, "X", &[1, 0, 1]);
        let g = Polynomial::univariate(&b, "X", &[0, 1, 1]);
        let s = f.add(&g).unwrap();
        assert_eq!(s, Polynomial::univariate(&b, "X", &[1, 1, 1]));
        assert_eq!(s.to_string(), "1 + X + X^2");
        assert_eq!(s.degree_in("X"), Some(2));
    }

    #[test]
    fn multiplication_convolves() {
        let b = boolean();
        let f = Polynomial::univariate(&b, "X", &[1, 1]);
        let sq = f.mul(&f).unwrap();
        // (1 + X)^2 = 1 + X + X^2 over the Boolean semiring.
        assert_eq!(sq, Polynomial::univariate(&b, "X", &[1, 1, 1]));
    }

    #[test]
    fn zero_coefficients_vanish() {
        let b = boolean();
        let mut f = Polynomial::zero(&b);
        f.set_term(Monomial::var("X"), 1).unwrap();
        f.set_term(Monomial::var("X"), 0).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.to_string(), "0");
    }

    #[test]
    fn laurent_gatekeeping() {
        let b = boolean();
        let mut f = Polynomial::zero(&b);
        let err = f.set_term(Monomial::from_pairs(&[("X", -1)]), 1).unwrap_err();
        assert!(matches!(err, Error::NegativeExponent(_)));
        let mut g = Polynomial::zero_laurent(&b, &["X"]);
        g.set_term(Monomial::from_pairs(&[("X", -1)]), 1).unwrap();
        assert_eq!(g.min_degree_in("X"), Some(-1));
        // X^-1 * X = 1
        let x = Polynomial::univariate(&b, "X", &[0, 1]);
        assert_eq!(g.mul(&x).unwrap(), Polynomial::constant(&b, 1));
    }

    #[test]
    fn content_of_worked_example() {
        let c = chain_c();
        let u = c.index_of("u").unwrap();
        let f = Polynomial::univariate(&c, "X", &[c.one(), u]);
        assert_eq!(f.content().labels(), vec!["0", "1", "u"]);
        let g = Polynomial::univariate(&c, "X", &[u, u]);
        assert_eq!(g.content().labels(), vec!["0", "u"]);
    }

    #[test]
    fn content_of_product_contained_in_product_of_contents() {
        // Exhaustive over pairs of quadratics for every small member.
        for (name, ring) in standard_members() {
            if ring.size() > 3 {
                continue;
            }
            let n = ring.size();
            let polys: Vec<Polynomial> = (0..n * n * n)
                .map(|k| Polynomial::univariate(&ring, "X", &[k % n, k / n % n, k / (n * n)]))
                .collect();
            for f in &polys {
                for g in &polys {
                    let lhs = f.mul(g).unwrap().content();
                    let rhs = f.content().product(&g.content()).unwrap();
                    assert!(lhs.is_subset_of(&rhs), "{name}: f={f} g={g}");
                }
            }
        }
    }

    #[test]
    fn fold_preserves_content_and_products() {
        let c = chain_c();
        let u = c.index_of("u").unwrap();
        let mut f = Polynomial::zero(&c);
        f.set_term(Monomial::from_pairs(&[("X", 1), ("Y", 2)]), u).unwrap();
        f.set_term(Monomial::var("Y"), c.one()).unwrap();
        f.set_term(Monomial::one(), u).unwrap();
        let g = f.clone();
        let h = f.mul(&g).unwrap();
        let d = 5; // exceeds every exponent of h
        let fh = h.fold_to_univariate("T", d).unwrap();
        let ff = f.fold_to_univariate("T", d).unwrap();
        let fg = g.fold_to_univariate("T", d).unwrap();
        assert_eq!(fh, ff.mul(&fg).unwrap());
        assert_eq!(fh.content(), h.content());
        assert_eq!(ff.num_terms(), f.num_terms());
    }

    #[test]
    fn star_map_worked_example() {
        let b = boolean();
        // 1 + X·Y, folding Y into X with multiplier 2, becomes 1 + X^3.
        let mut h = Polynomial::zero(&b);
        h.set_term(Monomial::one(), 1).unwrap();
        h.set_term(Monomial::from_pairs(&[("X", 1), ("Y", 1)]), 1).unwrap();
        let star = h.star_map("X", "Y", 2).unwrap();
        let mut want = Polynomial::zero(&b);
        want.set_term(Monomial::one(), 1).unwrap();
        want.set_term(Monomial::from_pairs(&[("X", 3)]), 1).unwrap();
        assert_eq!(star, want);
        assert_eq!(star.num_terms(), h.num_terms());
        // Constants are unchanged.
        let c = Polynomial::constant(&b, 1);
        assert_eq!(c.star_map("X", "Y", 2).unwrap(), c);
        // Window precondition: degree 1 in X needs multiplier > 1.
        assert!(matches!(h.star_map("X", "Y", 1), Err(Error::FoldTooSmall { multiplier: 1, degree: 1 })));
    }

    #[test]
    fn star_map_is_multiplicative_at_safe_multiplier() {
        // (fg)* = f* g* with multiplier deg_X f + deg_X g + 1, exhaustively
        // over dense bivariate pairs with per-variable degree <= 1.
        let c = chain_c();
        let n = c.size();
        let monos = [
            Monomial::one(),
            Monomial::var("X"),
            Monomial::var("Y"),
            Monomial::from_pairs(&[("X", 1), ("Y", 1)]),
        ];
        let polys: Vec<Polynomial> = (0..n.pow(4)).map(|k| {
            let mut p = Polynomial::zero(&c);
            for (i, m) in monos.iter().enumerate() {
                p.set_term(m.clone(), k / n.pow(i as u32) % n).unwrap();
            }
            p
        }).collect();
        for f in polys.iter().step_by(7) {
            for g in polys.iter().step_by(11) {
                let m = f.degree_in("X").unwrap_or(0) + g.degree_in("X").unwrap_or(0) + 1;
                let h = f.mul(g).unwrap();
                let lhs = h.star_map("X", "Y", m).unwrap();
                let rhs = f.star_map("X", "Y", m).unwrap().mul(&g.star_map("X", "Y", m).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "f={f} g={g}");
                assert_eq!(lhs.num_terms(), h.num_terms(), "support changed: f={f} g={g}");
            }
        }
    }

    #[test]
    fn fold_agrees_with_iterated_star_map() {
        let c = chain_c();
        let u = c.index_of("u").unwrap();
        let mut h = Polynomial::zero(&c);
        h.set_term(Monomial::from_pairs(&[("X", 1), ("Y", 2), ("Z", 1)]), u).unwrap();
        h.set_term(Monomial::from_pairs(&[("Y", 1)]), c.one()).unwrap();
        h.set_term(Monomial::from_pairs(&[("Z", 2)]), u).unwrap();
        let d = 3;
        let folded = h.fold_to_univariate("X", d).unwrap();
        let steps = h.star_map("Y", "Z", d).unwrap().star_map("X", "Y", d).unwrap();
        assert_eq!(folded, steps);
    }

    #[test]
    fn fold_rejects_small_multiplier() {
        let b = boolean();
        let mut f = Polynomial::zero(&b);
        f.set_term(Monomial::from_pairs(&[("X", 3), ("Y", 1)]), 1).unwrap();
        f.set_term(Monomial::from_pairs(&[("Y", 2)]), 1).unwrap();
        let err = f.fold_to_univariate("T", 3).unwrap_err();
        assert!(matches!(err, Error::FoldTooSmall { multiplier: 3, degree: 3 }));
        assert!(f.fold_to_univariate("T", 4).is_ok());
    }

    #[test]
    fn fold_handles_laurent_windows() {
        let b = boolean();
        let mut f = Polynomial::zero_laurent(&b, &["X", "Y"]);
        f.set_term(Monomial::from_pairs(&[("X", -1), ("Y", 1)]), 1).unwrap();
        f.set_term(Monomial::from_pairs(&[("X", 1), ("Y", -1)]), 1).unwrap();
        // Needs multiplier > 2 * max|e| = 2.
        assert!(matches!(f.fold_to_univariate("T", 2), Err(Error::FoldTooSmall { .. })));
        let folded = f.fold_to_univariate("T", 3).unwrap();
        assert_eq!(folded.num_terms(), 2);
        assert_eq!(folded.min_degree_in("T"), Some(-2));
        assert_eq!(folded.degree_in("T"), Some(2));
    }

    #[test]
    fn json_round_trip() {
        let c = chain_c();
        let u = c.index_of("u").unwrap();
        let mut f = Polynomial::zero_laurent(&c, &["X"]);
        f.set_term(Monomial::from_pairs(&[("X", -1)]), u).unwrap();
        f.set_term(Monomial::from_pairs(&[("X", 2), ("Y", 1)]), c.one()).unwrap();
        let v = f.to_json();
        let back = Polynomial::from_json(&c, &v).unwrap();
        assert_eq!(back, f);
        assert_eq!(v["terms"][0]["coeff"], "u");
    }

    #[test]
    fn json_duplicate_monomials_accumulate() {
        let b = boolean();
        let v: Value = serde_json::from_str(
            r#"{"terms":[{"monomial":{"X":1},"coeff":"1"},{"monomial":{"X":1},"coeff":"1"}]}"#,
        )
        .unwrap();
        let f = Polynomial::from_json(&b, &v).unwrap();
        assert_eq!(f, Polynomial::univariate(&b, "X", &[0, 1]));
    }

    #[test]
    fn json_rejects_unknown_labels_and_negatives() {
        let b = boolean();
        let bad: Value =
            serde_json::from_str(r#"{"terms":[{"monomial":{"X":1},"coeff":"w"}]}"#).unwrap();
        assert!(matches!(Polynomial::from_json(&b, &bad), Err(Error::BadParams(_))));
        let neg: Value =
            serde_json::from_str(r#"{"terms":[{"monomial":{"X":-1},"coeff":"1"}]}"#).unwrap();
        assert!(matches!(Polynomial::from_json(&b, &neg), Err(Error::NegativeExponent(_))));
        let ok: Value =
            serde_json::from_str(r#"{"laurent":["X"],"terms":[{"monomial":{"X":-1},"coeff":"1"}]}"#)
                .unwrap();
        assert!(Polynomial::from_json(&b, &ok).is_ok());
    }
}
