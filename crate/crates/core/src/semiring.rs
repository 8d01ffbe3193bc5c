//! Finite commutative semirings presented by explicit operation tables.
//!
//! A semiring here is a carrier `{0, .., n-1}` with commutative monoid
//! structures `(add, zero)` and `(mul, one)`, multiplication distributing
//! over addition, an absorbing zero, and `one != zero`. Unlike rings there
//! is no subtraction, which is what makes the ideal theory downstream
//! (subtractive ideals, content formulas) nontrivial.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::elemset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Axiom, AxiomViolation, Error};

/// Raw operation tables in the on-disk JSON shape, prior to validation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawSemiring {
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

/// A validated finite commutative semiring.
///
/// Elements are dense indices with display labels; all structure queries go
/// through the operation tables. Instances are immutable and shared via
/// [`Arc`], so everything downstream is cheap to clone and safe to use from
/// parallel sweeps.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    elements: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

impl std::fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteSemiring({})", self.elements.join(", "))
    }
}

impl FiniteSemiring {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn plus(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn times(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|l| l == label)
    }

    pub fn element_indices(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    /// Sum of a slice of elements (zero for the empty slice).
    pub fn sum(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.zero, |acc, &x| self.plus(acc, x))
    }

    /// `x^k` for `k >= 1`.
    pub fn power(&self, x: usize, k: u32) -> usize {
        debug_assert!(k >= 1);
        let mut acc = x;
        for _ in 1..k {
            acc = self.times(acc, x);
        }
        acc
    }

    /// The set `{x, x^2, x^3, ...}` (finite: the power sequence cycles).
    pub fn power_orbit(&self, x: usize) -> ElemSet {
        let mut orbit = ElemSet::empty();
        let mut cur = x;
        while !orbit.contains(cur) {
            orbit.insert(cur);
            cur = self.times(cur, x);
        }
        orbit
    }

    /// `true` when some positive power of `x` lies in `members`.
    pub fn some_power_in(&self, x: usize, members: ElemSet) -> bool {
        !self.power_orbit(x).intersect(members).is_empty()
    }

    pub fn raw(&self) -> RawSemiring {
        RawSemiring {
            elements: self.elements.clone(),
            add: self.add.clone(),
            mul: self.mul.clone(),
            zero: self.zero,
            one: self.one,
        }
    }
}

/// Two handles denote the same semiring (pointer or structural equality).
pub fn same_ring(a: &Arc<FiniteSemiring>, b: &Arc<FiniteSemiring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn check_shape(raw: &RawSemiring) -> Result<(), Error> {
    let n = raw.elements.len();
    if n < 2 {
        return Err(Error::BadParams(format!(
            "carrier must have at least two elements, got {n}"
        )));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::BadParams(format!(
            "carrier size {n} exceeds the supported maximum of {MAX_ELEMENTS}"
        )));
    }
    for (name, table) in [("add", &raw.add), ("mul", &raw.mul)] {
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::BadParams(format!("{name} table is not {n}x{n}")));
        }
        if table.iter().flatten().any(|&e| e >= n) {
            return Err(Error::BadParams(format!("{name} table entry out of range")));
        }
    }
    if raw.zero >= n || raw.one >= n {
        return Err(Error::BadParams("zero/one index out of range".into()));
    }
    let mut sorted = raw.elements.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != n {
        return Err(Error::BadParams("element labels must be distinct".into()));
    }
    Ok(())
}

/// Validate raw tables against the semiring axioms.
///
/// Shape problems (non-square tables, out-of-range indices, duplicate
/// labels) are reported as [`Error::BadParams`]. Axiom failures are
/// collected exhaustively — one witness per violated axiom — and returned
/// as [`Error::Axioms`].
pub fn validate_semiring(raw: RawSemiring) -> Result<FiniteSemiring, Error> {
    check_shape(&raw)?;
    let n = raw.elements.len();
    let lbl = |i: usize| raw.elements[i].clone();
    let mut violations: Vec<AxiomViolation> = Vec::new();
    let mut report = |axiom: Axiom, witness: Vec<String>, seen: &mut Vec<Axiom>| {
        if !seen.contains(&axiom) {
            seen.push(axiom);
            violations.push(AxiomViolation { axiom, witness });
        }
    };
    let mut seen: Vec<Axiom> = Vec::new();

    if raw.zero == raw.one {
        report(Axiom::OneEqualsZero, vec![lbl(raw.zero)], &mut seen);
    }
    for a in 0..n {
        if raw.add[a][raw.zero] != a {
            report(Axiom::AddIdentity, vec![lbl(a)], &mut seen);
        }
        if raw.mul[a][raw.one] != a {
            report(Axiom::MulIdentity, vec![lbl(a)], &mut seen);
        }
        if raw.mul[a][raw.zero] != raw.zero {
            report(Axiom::AbsorbingZero, vec![lbl(a)], &mut seen);
        }
        for b in 0..n {
            if raw.add[a][b] != raw.add[b][a] {
                report(Axiom::AddCommutativity, vec![lbl(a), lbl(b)], &mut seen);
            }
            if raw.mul[a][b] != raw.mul[b][a] {
                report(Axiom::MulCommutativity, vec![lbl(a), lbl(b)], &mut seen);
            }
            for c in 0..n {
                if raw.add[raw.add[a][b]][c] != raw.add[a][raw.add[b][c]] {
                    report(Axiom::AddAssociativity, vec![lbl(a), lbl(b), lbl(c)], &mut seen);
                }
                if raw.mul[raw.mul[a][b]][c] != raw.mul[a][raw.mul[b][c]] {
                    report(Axiom::MulAssociativity, vec![lbl(a), lbl(b), lbl(c)], &mut seen);
                }
                if raw.mul[a][raw.add[b][c]] != raw.add[raw.mul[a][b]][raw.mul[a][c]] {
                    report(Axiom::Distributivity, vec![lbl(a), lbl(b), lbl(c)], &mut seen);
                }
            }
        }
    }

    if violations.is_empty() {
        Ok(FiniteSemiring {
            elements: raw.elements,
            add: raw.add,
            mul: raw.mul,
            zero: raw.zero,
            one: raw.one,
        })
    } else {
        Err(Error::Axioms(violations))
    }
}

/// Componentwise product of finitely many semirings.
///
/// Elements are tuples in row-major order with labels `(x,y,..)`. The
/// result is re-validated, which is cheap at these sizes and keeps the
/// constructor honest.
pub fn product_semiring(factors: &[Arc<FiniteSemiring>]) -> Result<FiniteSemiring, Error> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let total: usize = factors.iter().map(|f| f.size()).product();
    if total > MAX_ELEMENTS {
        return Err(Error::BadParams(format!(
            "product carrier size {total} exceeds the supported maximum of {MAX_ELEMENTS}"
        )));
    }
    // Decode a flat index into one coordinate per factor (row-major).
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut coords = vec![0; factors.len()];
        for (k, f) in factors.iter().enumerate().rev() {
            coords[k] = idx % f.size();
            idx /= f.size();
        }
        coords
    };
    let encode = |coords: &[usize]| -> usize {
        coords
            .iter()
            .zip(factors)
            .fold(0, |acc, (&c, f)| acc * f.size() + c)
    };

    let mut elements = Vec::with_capacity(total);
    for idx in 0..total {
        let coords = decode(idx);
        let label = coords
            .iter()
            .zip(factors)
            .map(|(&c, f)| f.label(c).to_string())
            .collect::<Vec<_>>()
            .join(",");
        elements.push(format!("({label})"));
    }
    let table = |op: fn(&FiniteSemiring, usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..total)
            .map(|a| {
                let ca = decode(a);
                (0..total)
                    .map(|b| {
                        let cb = decode(b);
                        let out: Vec<usize> = ca
                            .iter()
                            .zip(&cb)
                            .zip(factors)
                            .map(|((&x, &y), f)| op(f, x, y))
                            .collect();
                        encode(&out)
                    })
                    .collect()
            })
            .collect()
    };
    let zero = encode(&factors.iter().map(|f| f.zero()).collect::<Vec<_>>());
    let one = encode(&factors.iter().map(|f| f.one()).collect::<Vec<_>>());
    validate_semiring(RawSemiring {
        elements,
        add: table(FiniteSemiring::plus),
        mul: table(FiniteSemiring::times),
        zero,
        one,
    })
}

/// Quick structural facts about a semiring.
///
/// The lattice-dependent fields (`local`, `maximal_ideal_squared_zero`) are
/// `None` when the ideal lattice is not enumerable under `lattice_cap`, or
/// for `maximal_ideal_squared_zero` when the semiring is not local.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    pub zerosumfree: bool,
    pub additively_idempotent: bool,
    pub bounded_distributive_lattice: bool,
    pub local: Option<bool>,
    pub maximal_ideal_squared_zero: Option<bool>,
}

/// Compute [`StructuralFlags`].
///
/// `bounded_distributive_lattice` checks that both operations are
/// idempotent and that the two absorption laws `a + ab = a` and
/// `a(a + b) = a` hold; distributivity is already a semiring axiom and the
/// bounds are supplied by zero and one.
pub fn structural_flags(ring: &Arc<FiniteSemiring>, lattice_cap: usize) -> StructuralFlags {
    let n = ring.size();
    let zero = ring.zero();
    let mut zerosumfree = true;
    let mut add_idem = true;
    let mut lattice = true;
    for a in 0..n {
        if ring.plus(a, a) != a {
            add_idem = false;
            lattice = false;
        }
        if ring.times(a, a) != a {
            lattice = false;
        }
        for b in 0..n {
            if ring.plus(a, b) == zero && (a != zero || b != zero) {
                zerosumfree = false;
            }
            let ab = ring.times(a, b);
            if ring.plus(a, ab) != a || ring.times(a, ring.plus(a, b)) != a {
                lattice = false;
            }
        }
    }

    let (local, m_sq_zero) = match crate::ideal::enumerate_ideals(ring, lattice_cap) {
        Ok(lat) => {
            let maxes = lat.maximal_ideals();
            let local = maxes.len() == 1;
            let m_sq = if local {
                let m = &maxes[0];
                Some(m.product(m).expect("same ring").is_zero())
            } else {
                None
            };
            (Some(local), m_sq)
        }
        Err(_) => (None, None),
    };

    StructuralFlags {
        zerosumfree,
        additively_idempotent: add_idem,
        bounded_distributive_lattice: lattice,
        local,
        maximal_ideal_squared_zero: m_sq_zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, CatalogSpec};

    fn boolean_raw() -> RawSemiring {
        RawSemiring {
            elements: vec!["0".into(), "1".into()],
            add: vec![vec![0, 1], vec![1, 1]],
            mul: vec![vec![0, 0], vec![0, 1]],
            zero: 0,
            one: 1,
        }
    }

    #[test]
    fn boolean_tables_validate() {
        let ring = validate_semiring(boolean_raw()).unwrap();
        assert_eq!(ring.size(), 2);
        assert_eq!(ring.plus(1, 1), 1);
        assert_eq!(ring.times(1, 1), 1);
    }

    #[test]
    fn broken_mul_identity_is_reported() {
        let mut raw = boolean_raw();
        raw.mul[1][1] = 0;
        match validate_semiring(raw) {
            Err(Error::Axioms(vs)) => {
                assert!(vs.iter().any(|v| v.axiom == Axiom::MulIdentity && v.witness == vec!["1"]));
            }
            other => panic!("expected axiom violations, got {other:?}"),
        }
    }

    #[test]
    fn lagrassa_tables_validate() {
        let ring = build_catalog(&CatalogSpec::Lagrassa).unwrap();
        // 1 + u = u and u*u = u characterize this three-element semiring.
        let one = ring.one();
        let u = ring.index_of("u").unwrap();
        assert_eq!(ring.plus(one, u), u);
        assert_eq!(ring.times(u, u), u);
    }

    #[test]
    fn shape_errors_are_bad_params() {
        let mut raw = boolean_raw();
        raw.add.pop();
        assert!(matches!(validate_semiring(raw), Err(Error::BadParams(_))));
        let mut raw = boolean_raw();
        raw.elements[1] = "0".into();
        assert!(matches!(validate_semiring(raw), Err(Error::BadParams(_))));
    }

    #[test]
    fn product_of_booleans() {
        let b = Arc::new(build_catalog(&CatalogSpec::Boolean).unwrap());
        let p = product_semiring(&[b.clone(), b]).unwrap();
        assert_eq!(p.size(), 4);
        // Componentwise: (1,0) * (0,1) = (0,0).
        let x = p.index_of("(1,0)").unwrap();
        let y = p.index_of("(0,1)").unwrap();
        assert_eq!(p.times(x, y), p.zero());
        assert_eq!(p.plus(x, y), p.one());
    }

    #[test]
    fn empty_product_rejected() {
        assert!(matches!(product_semiring(&[]), Err(Error::EmptyProduct)));
    }

    #[test]
    fn boolean_flags() {
        let b = Arc::new(build_catalog(&CatalogSpec::Boolean).unwrap());
        let flags = structural_flags(&b, 12);
        assert!(flags.zerosumfree);
        assert!(flags.additively_idempotent);
        assert!(flags.bounded_distributive_lattice);
    }

    #[test]
    fn nil_chain_4_is_local_with_square_zero_maximal_ideal() {
        let t = Arc::new(build_catalog(&CatalogSpec::NilChain { n: 4 }).unwrap());
        let flags = structural_flags(&t, 12);
        assert_eq!(flags.local, Some(true));
        assert_eq!(flags.maximal_ideal_squared_zero, Some(true));
        assert!(!flags.bounded_distributive_lattice);
    }

    #[test]
    fn wraparound_family_is_not_a_lattice() {
        let b42 = Arc::new(build_catalog(&CatalogSpec::Bni { n: 4, i: 2 }).unwrap());
        let flags = structural_flags(&b42, 12);
        // 1 + 1 = 2 breaks additive idempotence.
        assert!(!flags.additively_idempotent);
        assert!(!flags.bounded_distributive_lattice);
    }

    #[test]
    fn power_orbit_cycles() {
        let t = Arc::new(build_catalog(&CatalogSpec::NilChain { n: 4 }).unwrap());
        let a = t.index_of("a").unwrap();
        // a^2 = 0, so the orbit is {a, 0}.
        assert_eq!(t.power_orbit(a), [t.zero(), a].into_iter().collect());
        assert!(t.some_power_in(a, ElemSet::singleton(t.zero())));
    }
}
