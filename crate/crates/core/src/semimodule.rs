//! Finite semimodules over finite semirings: subtractivity, content
//! semimodules and the semimodule form of the Dedekind–Mertens lemma.
//!
//! A semimodule is a commutative monoid `(M, +, 0)` with a scalar action of
//! the semiring that distributes on both sides, respects products and fixes
//! nothing it shouldn't (`1m = m`, `0m = s0 = 0`).  Two strands of theory
//! live here:
//!
//! * **Content.**  `c_M(x)` is the intersection of all ideals `I` with
//!   `x ∈ IM`; `M` is a *content semimodule* when `x ∈ c_M(x)M` for every
//!   `x`.  On a finite carrier this is decidable outright from the ideal
//!   lattice, along with the equivalent characterizations (a Galois-style
//!   adjunction `x ∈ IM ⇔ c_M(x) ⊆ I`, and distribution of the action over
//!   ideal intersections) and the transfer theorem for subsemimodules
//!   (`IM ∩ N = IN` for all `I`).
//! * **Dedekind–Mertens.**  For `f` over `S` and `g` over `M`,
//!   `c(f)^(m+1) c(g) = c(f)^m c(fg)` holds with `m = deg g` exactly when
//!   `M` is a subtractive semimodule; a subtractivity failure `a ∈ N`,
//!   `a + b ∈ N`, `b ∉ N` yields the probe pair `f = 1 + X`,
//!   `g = a + bX + aX²` for which no exponent works at all.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::elemset::{ElemSet, MAX_ELEMENTS};
use crate::error::{Axiom, AxiomViolation, Error};
use crate::ideal::{
    close_mask, next_closure_masks, product_mask, Ideal, IdealLattice, SubtractiveCheck,
};
use crate::poly::{Monomial, Polynomial};
use crate::semiring::{same_ring, FiniteSemiring};
use crate::sweep::{checked_power, decode_base, find_first, SweepBudget};

/// Raw semimodule tables in the on-disk JSON shape: the semiring format
/// plus a `|S| x |M|` scalar-action table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawSemimodule {
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    /// `scalar[s][m]` is the action of ring element `s` on module element `m`.
    pub scalar: Vec<Vec<usize>>,
    pub zero: usize,
}

/// A validated finite semimodule over a finite semiring.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemimodule {
    ring: Arc<FiniteSemiring>,
    elements: Vec<String>,
    add: Vec<Vec<usize>>,
    scalar: Vec<Vec<usize>>,
    zero: usize,
}

impl std::fmt::Debug for FiniteSemimodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteSemimodule({})", self.elements.join(", "))
    }
}

impl FiniteSemimodule {
    pub fn ring(&self) -> &Arc<FiniteSemiring> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn plus(&self, m: usize, n: usize) -> usize {
        self.add[m][n]
    }

    /// Scalar action `s · m`.
    pub fn act(&self, s: usize, m: usize) -> usize {
        self.scalar[s][m]
    }

    pub fn zero(&self) -> usize {
        self.zero
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

    /// Sum of a slice of module elements (zero for the empty slice).
    pub fn sum(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.zero, |acc, &x| self.plus(acc, x))
    }

    pub fn raw(&self) -> RawSemimodule {
        RawSemimodule {
            elements: self.elements.clone(),
            add: self.add.clone(),
            scalar: self.scalar.clone(),
            zero: self.zero,
        }
    }
}

/// Two handles denote the same semimodule (pointer or structural equality).
pub fn same_module(a: &Arc<FiniteSemimodule>, b: &Arc<FiniteSemimodule>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Validates raw tables against the semimodule axioms, reporting every
/// violation with witnesses.  Unlike semirings a one-element module (the
/// zero module) is legal.
pub fn validate_semimodule(
    ring: &Arc<FiniteSemiring>,
    raw: RawSemimodule,
) -> Result<FiniteSemimodule, Error> {
    let n = raw.elements.len();
    let s = ring.size();
    if n == 0 {
        return Err(Error::BadParams("module carrier must be nonempty".into()));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::BadParams(format!(
            "module carrier size {n} exceeds the supported maximum of {MAX_ELEMENTS}"
        )));
    }
    if raw.add.len() != n || raw.add.iter().any(|row| row.len() != n) {
        return Err(Error::BadParams(format!("add table is not {n}x{n}")));
    }
    if raw.scalar.len() != s || raw.scalar.iter().any(|row| row.len() != n) {
        return Err(Error::BadParams(format!("scalar table is not {s}x{n}")));
    }
    if raw.add.iter().flatten().chain(raw.scalar.iter().flatten()).any(|&e| e >= n) {
        return Err(Error::BadParams("table entry out of range".into()));
    }
    if raw.zero >= n {
        return Err(Error::BadParams("zero index out of range".into()));
    }

    let module = FiniteSemimodule {
        ring: ring.clone(),
        elements: raw.elements,
        add: raw.add,
        scalar: raw.scalar,
        zero: raw.zero,
    };
    let mut violations = Vec::new();
    let mut report = |axiom: Axiom, witness: &[&str]| {
        violations.push(AxiomViolation {
            axiom,
            witness: witness.iter().map(|w| w.to_string()).collect(),
        });
    };
    for a in 0..n {
        if module.plus(a, module.zero) != a {
            report(Axiom::AddIdentity, &[module.label(a)]);
        }
        if module.act(ring.one(), a) != a {
            report(Axiom::ScalarIdentity, &[module.label(a)]);
        }
        if module.act(ring.zero(), a) != module.zero {
            report(Axiom::ScalarZero, &[ring.label(ring.zero()), module.label(a)]);
        }
        for b in 0..n {
            if module.plus(a, b) != module.plus(b, a) {
                report(Axiom::AddCommutativity, &[module.label(a), module.label(b)]);
            }
            for c in 0..n {
                if module.plus(module.plus(a, b), c) != module.plus(a, module.plus(b, c)) {
                    report(
                        Axiom::AddAssociativity,
                        &[module.label(a), module.label(b), module.label(c)],
                    );
                }
            }
        }
    }
    for x in 0..s {
        if module.act(x, module.zero) != module.zero {
            report(Axiom::ScalarZero, &[ring.label(x), module.label(module.zero)]);
        }
        for a in 0..n {
            for b in 0..n {
                if module.act(x, module.plus(a, b))
                    != module.plus(module.act(x, a), module.act(x, b))
                {
                    report(
                        Axiom::ScalarAddDistributivity,
                        &[ring.label(x), module.label(a), module.label(b)],
                    );
                }
            }
            for y in 0..s {
                if module.act(ring.plus(x, y), a)
                    != module.plus(module.act(x, a), module.act(y, a))
                {
                    report(
                        Axiom::ScalarMulDistributivity,
                        &[ring.label(x), ring.label(y), module.label(a)],
                    );
                }
                if module.act(ring.times(x, y), a) != module.act(x, module.act(y, a)) {
                    report(
                        Axiom::ScalarAssociativity,
                        &[ring.label(x), ring.label(y), module.label(a)],
                    );
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(module)
    } else {
        violations.truncate(32);
        Err(Error::Axioms(violations))
    }
}

/// The semiring viewed as a module over itself; the scalar action is ring
/// multiplication, so subsemimodules are exactly the ideals.
pub fn regular_semimodule(ring: &Arc<FiniteSemiring>) -> FiniteSemimodule {
    let n = ring.size();
    let table = |op: fn(&FiniteSemiring, usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| op(ring, a, b)).collect()).collect()
    };
    validate_semimodule(
        ring,
        RawSemimodule {
            elements: ring.labels().to_vec(),
            add: table(FiniteSemiring::plus),
            scalar: table(FiniteSemiring::times),
            zero: ring.zero(),
        },
    )
    .expect("a semiring is a module over itself")
}

/// Direct sum of finitely many semimodules over one semiring, with
/// componentwise operations.
pub fn direct_sum(factors: &[Arc<FiniteSemimodule>]) -> Result<FiniteSemimodule, Error> {
    let first = factors.first().ok_or(Error::BadParams("empty direct sum".into()))?;
    let ring = first.ring().clone();
    if factors.iter().any(|m| !same_ring(m.ring(), &ring)) {
        return Err(Error::MixedSemirings);
    }
    let total: usize = factors.iter().map(|m| m.size()).product();
    if total > MAX_ELEMENTS {
        return Err(Error::BadParams(format!(
            "direct sum carrier size {total} exceeds the supported maximum of {MAX_ELEMENTS}"
        )));
    }
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut coords = vec![0; factors.len()];
        for (k, m) in factors.iter().enumerate().rev() {
            coords[k] = idx % m.size();
            idx /= m.size();
        }
        coords
    };
    let encode = |coords: &[usize]| -> usize {
        coords.iter().zip(factors).fold(0, |acc, (&c, m)| acc * m.size() + c)
    };
    let elements: Vec<String> = (0..total)
        .map(|idx| {
            let label = decode(idx)
                .iter()
                .zip(factors)
                .map(|(&c, m)| m.label(c).to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("({label})")
        })
        .collect();
    let add = (0..total)
        .map(|a| {
            let ca = decode(a);
            (0..total)
                .map(|b| {
                    let cb = decode(b);
                    let out: Vec<usize> = ca
                        .iter()
                        .zip(&cb)
                        .zip(factors)
                        .map(|((&x, &y), m)| m.plus(x, y))
                        .collect();
                    encode(&out)
                })
                .collect()
        })
        .collect();
    let scalar = (0..ring.size())
        .map(|s| {
            (0..total)
                .map(|a| {
                    let out: Vec<usize> = decode(a)
                        .iter()
                        .zip(factors)
                        .map(|(&x, m)| m.act(s, x))
                        .collect();
                    encode(&out)
                })
                .collect()
        })
        .collect();
    let zero = encode(&factors.iter().map(|m| m.zero()).collect::<Vec<_>>());
    validate_semimodule(&ring, RawSemimodule { elements, add, scalar, zero })
}

/// Closure of a seed set under addition and the scalar action, always
/// containing the module zero: the subsemimodule generated by the seed.
pub(crate) fn close_submodule_mask(module: &FiniteSemimodule, seed: ElemSet) -> ElemSet {
    let s = module.ring().size();
    let mut members = seed.with(module.zero());
    loop {
        let mut next = members;
        for a in members.iter() {
            for b in members.iter() {
                if b > a {
                    break;
                }
                next.insert(module.plus(a, b));
            }
            for x in 0..s {
                next.insert(module.act(x, a));
            }
        }
        if next == members {
            return members;
        }
        members = next;
    }
}

/// `I · N`: additive closure of the products `{a·n : a ∈ I, n ∈ N}`.  The
/// result is scalar-closed automatically (`s(an) = (sa)n` with `sa ∈ I`),
/// so only sums need closing.
pub(crate) fn action_mask(module: &FiniteSemimodule, ideal: ElemSet, sub: ElemSet) -> ElemSet {
    let mut members = ElemSet::singleton(module.zero());
    for a in ideal.iter() {
        for n in sub.iter() {
            members.insert(module.act(a, n));
        }
    }
    loop {
        let mut next = members;
        for a in members.iter() {
            for b in members.iter() {
                if b > a {
                    break;
                }
                next.insert(module.plus(a, b));
            }
        }
        if next == members {
            return members;
        }
        members = next;
    }
}

pub(crate) fn submodule_subtractive_mask(
    module: &FiniteSemimodule,
    members: ElemSet,
) -> SubtractiveCheck {
    for a in members.iter() {
        for b in 0..module.size() {
            if !members.contains(b) && members.contains(module.plus(a, b)) {
                return SubtractiveCheck { holds: false, witness: Some((a, b)) };
            }
        }
    }
    SubtractiveCheck { holds: true, witness: None }
}

/// A subsemimodule of a specific module: a member bitset plus, when built
/// from generators, the generating set.
#[derive(Clone)]
pub struct Subsemimodule {
    module: Arc<FiniteSemimodule>,
    members: ElemSet,
    generators: Option<Vec<usize>>,
}

impl std::fmt::Debug for Subsemimodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subsemimodule{{{}}}", self.labels().join(","))
    }
}

impl PartialEq for Subsemimodule {
    fn eq(&self, other: &Self) -> bool {
        same_module(&self.module, &other.module) && self.members == other.members
    }
}

impl Eq for Subsemimodule {}

impl Subsemimodule {
    pub(crate) fn from_mask(module: Arc<FiniteSemimodule>, members: ElemSet) -> Subsemimodule {
        Subsemimodule { module, members, generators: None }
    }

    pub fn module(&self) -> &Arc<FiniteSemimodule> {
        &self.module
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a subsemimodule always contains zero
    }

    pub fn is_subset_of(&self, other: &Subsemimodule) -> bool {
        self.members.is_subset_of(other.members)
    }

    /// Member labels in carrier order.
    pub fn labels(&self) -> Vec<String> {
        self.members.iter().map(|i| self.module.label(i).to_string()).collect()
    }

    pub fn is_subtractive(&self) -> SubtractiveCheck {
        submodule_subtractive_mask(&self.module, self.members)
    }
}

/// The subsemimodule generated by the given elements.
pub fn subsemimodule_generated(
    module: &Arc<FiniteSemimodule>,
    gens: &[usize],
) -> Subsemimodule {
    let seed: ElemSet = gens.iter().copied().collect();
    let mut gen_list: Vec<usize> = seed.iter().collect();
    gen_list.sort_unstable();
    Subsemimodule {
        module: module.clone(),
        members: close_submodule_mask(module, seed),
        generators: Some(gen_list),
    }
}

pub fn zero_subsemimodule(module: &Arc<FiniteSemimodule>) -> Subsemimodule {
    Subsemimodule::from_mask(module.clone(), ElemSet::singleton(module.zero()))
}

pub fn full_subsemimodule(module: &Arc<FiniteSemimodule>) -> Subsemimodule {
    Subsemimodule::from_mask(module.clone(), ElemSet::full(module.size()))
}

/// `I · N` as a [`Subsemimodule`].
pub fn ideal_action(ideal: &Ideal, sub: &Subsemimodule) -> Result<Subsemimodule, Error> {
    if !same_ring(ideal.ring(), sub.module().ring()) {
        return Err(Error::MixedSemirings);
    }
    Ok(Subsemimodule::from_mask(
        sub.module.clone(),
        action_mask(&sub.module, ideal.members(), sub.members),
    ))
}

/// Witness that a semimodule is not subtractive: a 2-generated
/// subsemimodule and a pair `a ∈ N`, `a + b ∈ N`, `b ∉ N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleSubtractivityWitness {
    pub generators: Vec<String>,
    pub submodule: Vec<String>,
    pub pair: (String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleSubtractivityReport {
    pub holds: bool,
    pub witness: Option<ModuleSubtractivityWitness>,
}

/// Scans all 2-generated subsemimodules for a subtractivity failure.  The
/// scan is complete: if any subsemimodule `N` has a failing pair `(a, b)`,
/// then the pair already fails inside the 2-generated `(a, a+b) ⊆ N`,
/// because `b ∉ N` keeps `b` outside the smaller module too.
pub fn is_subtractive_semimodule(module: &Arc<FiniteSemimodule>) -> ModuleSubtractivityReport {
    let n = module.size();
    for x in 0..n {
        for y in x..n {
            let sub = subsemimodule_generated(module, &[x, y]);
            let check = sub.is_subtractive();
            if let Some((a, b)) = check.witness {
                return ModuleSubtractivityReport {
                    holds: false,
                    witness: Some(ModuleSubtractivityWitness {
                        generators: vec![
                            module.label(x).to_string(),
                            module.label(y).to_string(),
                        ],
                        submodule: sub.labels(),
                        pair: (module.label(a).to_string(), module.label(b).to_string()),
                    }),
                };
            }
        }
    }
    ModuleSubtractivityReport { holds: true, witness: None }
}

/// Every subsemimodule of a module, enumerated by next-closure.
pub struct SubmoduleLattice {
    module: Arc<FiniteSemimodule>,
    submodules: Vec<Subsemimodule>,
}

impl SubmoduleLattice {
    pub fn module(&self) -> &Arc<FiniteSemimodule> {
        &self.module
    }

    pub fn submodules(&self) -> &[Subsemimodule] {
        &self.submodules
    }

    pub fn len(&self) -> usize {
        self.submodules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.submodules.is_empty()
    }

    pub fn contains_members(&self, members: ElemSet) -> bool {
        self.submodules.iter().any(|s| s.members() == members)
    }
}

pub fn enumerate_subsemimodules(
    module: &Arc<FiniteSemimodule>,
    cap: usize,
) -> Result<SubmoduleLattice, Error> {
    let n = module.size();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let mut submodules: Vec<Subsemimodule> =
        next_closure_masks(n, &|seed| close_submodule_mask(module, seed))
            .into_iter()
            .map(|members| Subsemimodule::from_mask(module.clone(), members))
            .collect();
    submodules.sort_by_key(|s| (s.members().len(), s.members().mask()));
    Ok(SubmoduleLattice { module: module.clone(), submodules })
}

fn require_same_ring(module: &FiniteSemimodule, lattice: &IdealLattice) -> Result<(), Error> {
    if same_ring(module.ring(), lattice.ring()) {
        Ok(())
    } else {
        Err(Error::MixedSemirings)
    }
}

/// `IM` for every ideal of the lattice, in lattice order.
fn action_on_full(module: &FiniteSemimodule, lattice: &IdealLattice) -> Vec<ElemSet> {
    let full = ElemSet::full(module.size());
    lattice.ideals().iter().map(|i| action_mask(module, i.members(), full)).collect()
}

/// The content `c_M(x)`: intersection of all ideals `I` with `x ∈ IM`.
pub fn content_cm(
    module: &Arc<FiniteSemimodule>,
    lattice: &IdealLattice,
    x: usize,
) -> Result<Ideal, Error> {
    require_same_ring(module, lattice)?;
    let actions = action_on_full(module, lattice);
    Ok(content_cm_precomputed(lattice, &actions, x))
}

fn content_cm_precomputed(lattice: &IdealLattice, actions: &[ElemSet], x: usize) -> Ideal {
    let ring = lattice.ring();
    let mut members = ElemSet::full(ring.size());
    for (ideal, action) in lattice.ideals().iter().zip(actions) {
        if action.contains(x) {
            members = members.intersect(ideal.members());
        }
    }
    // The intersection of ideals is an ideal; reuse the lattice entry.
    lattice
        .ideals()
        .iter()
        .find(|i| i.members() == members)
        .cloned()
        .expect("an intersection of ideals is an ideal")
}

/// Outcome of [`is_content_semimodule`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContentSemimoduleReport {
    pub holds: bool,
    /// `x ↦ c_M(x)` member labels for every module element.
    pub contents: BTreeMap<String, Vec<String>>,
    /// First element with `x ∉ c_M(x)M`, if any.
    pub witness: Option<String>,
}

/// Decides whether `x ∈ c_M(x)M` for every `x`.
pub fn is_content_semimodule(
    module: &Arc<FiniteSemimodule>,
    lattice: &IdealLattice,
) -> Result<ContentSemimoduleReport, Error> {
    require_same_ring(module, lattice)?;
    let actions = action_on_full(module, lattice);
    let full = ElemSet::full(module.size());
    let mut contents = BTreeMap::new();
    let mut witness = None;
    for x in 0..module.size() {
        let c = content_cm_precomputed(lattice, &actions, x);
        contents.insert(module.label(x).to_string(), c.labels());
        let cm = action_mask(module, c.members(), full);
        if !cm.contains(x) && witness.is_none() {
            witness = Some(module.label(x).to_string());
        }
    }
    Ok(ContentSemimoduleReport { holds: witness.is_none(), contents, witness })
}

/// Outcome of [`content_equivalences`]: the three equivalent formulations
/// of being a content semimodule, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContentEquivalenceReport {
    /// `x ∈ c_M(x)M` for all `x`.
    pub content: bool,
    /// The adjunction `x ∈ IM ⇔ c_M(x) ⊆ I` for all `x` and `I` (the
    /// defining property of the function the first formulation asks for;
    /// if any function works, `c_M` does).
    pub galois: bool,
    /// `IM ∩ JM = (I ∩ J)M` for all ideal pairs — pairwise intersections
    /// suffice on a finite lattice, where any family folds into pairs.
    pub intersections: bool,
    /// For content modules: the generators extracted from a concrete
    /// decomposition `x = Σ cᵢmᵢ` regenerate `c_M(x)` for every `x`.
    pub finitely_generated: Option<bool>,
    /// All evaluated formulations returned the same verdict.
    pub agree: bool,
}

/// Checks the three equivalent content-semimodule formulations separately
/// and confirms they agree; for content modules, additionally extracts a
/// finite generating set of each `c_M(x)` from a decomposition of `x`.
pub fn content_equivalences(
    module: &Arc<FiniteSemimodule>,
    lattice: &IdealLattice,
) -> Result<ContentEquivalenceReport, Error> {
    require_same_ring(module, lattice)?;
    let actions = action_on_full(module, lattice);
    let full = ElemSet::full(module.size());
    let contents: Vec<Ideal> = (0..module.size())
        .map(|x| content_cm_precomputed(lattice, &actions, x))
        .collect();

    let content = (0..module.size())
        .all(|x| action_mask(module, contents[x].members(), full).contains(x));

    let galois = (0..module.size()).all(|x| {
        lattice
            .ideals()
            .iter()
            .zip(&actions)
            .all(|(ideal, action)| action.contains(x) == contents[x].is_subset_of(ideal))
    });

    let mut intersections = true;
    'pairs: for (i, a) in lattice.ideals().iter().enumerate() {
        for b in &lattice.ideals()[i..] {
            let meet = a.members().intersect(b.members());
            let lhs = actions[i].intersect(action_mask(module, b.members(), full));
            if lhs != action_mask(module, meet, full) {
                intersections = false;
                break 'pairs;
            }
        }
    }

    let finitely_generated = if content {
        Some((0..module.size()).all(|x| {
            decomposition_scalars(module, contents[x].members(), x)
                .map(|scalars| {
                    crate::ideal::ideal_generated(lattice.ring(), &scalars).members()
                        == contents[x].members()
                })
                .unwrap_or(false)
        }))
    } else {
        None
    };

    let agree = content == galois && galois == intersections;
    Ok(ContentEquivalenceReport { content, galois, intersections, finitely_generated, agree })
}

/// Finds scalars `c_1, .., c_k` from `allowed` such that
/// `x = c_1 m_1 + ... + c_k m_k` for some module elements, by breadth-first
/// search over partial sums; returns the scalars of one decomposition.
fn decomposition_scalars(
    module: &FiniteSemimodule,
    allowed: ElemSet,
    x: usize,
) -> Option<Vec<usize>> {
    let zero = module.zero();
    // parent[v] = (previous sum, scalar used on the last step)
    let mut parent: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut frontier = vec![zero];
    let mut seen = ElemSet::singleton(zero);
    while let Some(v) = frontier.pop() {
        for c in allowed.iter() {
            for m in 0..module.size() {
                let next = module.plus(v, module.act(c, m));
                if !seen.contains(next) {
                    seen.insert(next);
                    parent.insert(next, (v, c));
                    frontier.push(next);
                }
            }
        }
    }
    if !seen.contains(x) {
        return None;
    }
    let mut scalars = Vec::new();
    let mut cur = x;
    while cur != zero {
        let (prev, c) = parent[&cur];
        scalars.push(c);
        cur = prev;
    }
    scalars.sort_unstable();
    scalars.dedup();
    Some(scalars)
}

/// Outcome of [`content_transfer_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContentTransferReport {
    pub submodules: u64,
    /// For every subsemimodule the three transfer conditions agreed.
    pub holds: bool,
    /// Members of the first subsemimodule where they disagreed.
    pub witness: Option<Vec<String>>,
}

/// For a content semimodule `M`, checks on every subsemimodule `N` that the
/// three conditions of the transfer theorem agree:
///
/// 1. `IM ∩ N = IN` for all ideals `I`;
/// 2. `x ∈ c_M(x)N` for all `x ∈ N`;
/// 3. `N` is itself a content semimodule and `c_N = c_M` on `N`.
pub fn content_transfer_check(
    module: &Arc<FiniteSemimodule>,
    lattice: &IdealLattice,
    cap: usize,
) -> Result<ContentTransferReport, Error> {
    require_same_ring(module, lattice)?;
    if !is_content_semimodule(module, lattice)?.holds {
        return Err(Error::Precondition(
            "the transfer theorem applies to content semimodules only".into(),
        ));
    }
    let actions = action_on_full(module, lattice);
    let contents: Vec<Ideal> = (0..module.size())
        .map(|x| content_cm_precomputed(lattice, &actions, x))
        .collect();
    let subs = enumerate_subsemimodules(module, cap)?;

    let mut witness = None;
    for sub in subs.submodules() {
        let n_mask = sub.members();
        let cond1 = lattice.ideals().iter().zip(&actions).all(|(ideal, action)| {
            action.intersect(n_mask) == action_mask(module, ideal.members(), n_mask)
        });
        let cond2 = n_mask
            .iter()
            .all(|x| action_mask(module, contents[x].members(), n_mask).contains(x));
        // c_N(x) = ∩ {I : x ∈ IN}, computed against N's own actions.
        let n_actions: Vec<ElemSet> = lattice
            .ideals()
            .iter()
            .map(|i| action_mask(module, i.members(), n_mask))
            .collect();
        let cond3 = n_mask.iter().all(|x| {
            let mut cn = ElemSet::full(lattice.ring().size());
            for (ideal, action) in lattice.ideals().iter().zip(&n_actions) {
                if action.contains(x) {
                    cn = cn.intersect(ideal.members());
                }
            }
            let content_in_n = action_mask(module, cn, n_mask).contains(x);
            content_in_n && cn == contents[x].members()
        });
        if !(cond1 == cond2 && cond2 == cond3) && witness.is_none() {
            witness = Some(sub.labels());
        }
    }
    Ok(ContentTransferReport {
        submodules: subs.len() as u64,
        holds: witness.is_none(),
        witness,
    })
}

/// A univariate polynomial with coefficients in a semimodule, stored
/// densely from the constant term up.
#[derive(Clone, PartialEq, Eq)]
pub struct ModulePoly {
    module: Arc<FiniteSemimodule>,
    coeffs: Vec<usize>,
}

impl std::fmt::Debug for ModulePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModulePoly({self})")
    }
}

impl std::fmt::Display for ModulePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let zero = self.module.zero();
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == zero {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", self.module.label(c))?,
                1 => write!(f, "{}*X", self.module.label(c))?,
                _ => write!(f, "{}*X^{}", self.module.label(c), k)?,
            }
        }
        if first {
            write!(f, "{}", self.module.label(zero))?;
        }
        Ok(())
    }
}

impl ModulePoly {
    pub fn new(module: &Arc<FiniteSemimodule>, coeffs: &[usize]) -> ModulePoly {
        let mut coeffs = coeffs.to_vec();
        while coeffs.last() == Some(&module.zero()) {
            coeffs.pop();
        }
        ModulePoly { module: module.clone(), coeffs }
    }

    pub fn zero(module: &Arc<FiniteSemimodule>) -> ModulePoly {
        ModulePoly { module: module.clone(), coeffs: Vec::new() }
    }

    pub fn module(&self) -> &Arc<FiniteSemimodule> {
        &self.module
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> usize {
        self.coeffs.get(k).copied().unwrap_or(self.module.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The subsemimodule generated by the coefficients.
    pub fn content(&self) -> Subsemimodule {
        subsemimodule_generated(&self.module, &self.coeffs)
    }
}

/// Dense coefficients of a univariate (or constant) ring polynomial with
/// no negative exponents.
fn univariate_coeffs(f: &Polynomial) -> Result<Vec<usize>, Error> {
    let vars = f.variables();
    match vars.len() {
        0 => Ok(vec![f.coeff(&Monomial::one())]),
        1 => {
            let var = vars.iter().next().expect("one variable");
            let lo = f.min_degree_in(var).unwrap_or(0);
            if lo < 0 {
                return Err(Error::Precondition(
                    "module polynomials do not admit negative exponents".into(),
                ));
            }
            let hi = f.degree_in(var).unwrap_or(0);
            Ok((0..=hi).map(|k| f.coeff(&Monomial::from_pairs(&[(var, k)]))).collect())
        }
        _ => Err(Error::Precondition("the scalar polynomial must be univariate".into())),
    }
}

/// `f · g` for `f` over the ring and `g` over the module: the convolution
/// `(fg)_k = Σ f_i · g_(k-i)` through the scalar action.
pub fn scalar_poly_mul(f: &Polynomial, g: &ModulePoly) -> Result<ModulePoly, Error> {
    if !same_ring(f.ring(), g.module().ring()) {
        return Err(Error::MixedSemirings);
    }
    let fc = univariate_coeffs(f)?;
    let module = g.module().clone();
    if g.is_zero() || fc.iter().all(|&c| c == module.ring().zero()) {
        return Ok(ModulePoly::zero(&module));
    }
    let mut out = vec![module.zero(); fc.len() + g.coeffs.len() - 1];
    for (i, &a) in fc.iter().enumerate() {
        for (j, &m) in g.coeffs.iter().enumerate() {
            out[i + j] = module.plus(out[i + j], module.act(a, m));
        }
    }
    Ok(ModulePoly::new(&module, &out))
}

/// Outcome of a minimal-exponent search over a semimodule; chains list the
/// member labels of `c(f)^(m+1) c(g)` and `c(f)^m c(fg)` per step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemimoduleDmReport {
    pub exponent: Option<u32>,
    pub bound: u32,
    pub degree_g: i64,
    pub lhs_chain: Vec<Vec<String>>,
    pub rhs_chain: Vec<Vec<String>>,
    /// The powers of `c(f)` froze while the sides still differed: no
    /// exponent exists at any bound.
    pub stabilized: bool,
}

/// Minimal Dedekind–Mertens exponent for `f` over `S` and `g` over `M`.
pub fn dm_semimodule(
    f: &Polynomial,
    g: &ModulePoly,
    bound: u32,
) -> Result<SemimoduleDmReport, Error> {
    if !same_ring(f.ring(), g.module().ring()) {
        return Err(Error::MixedSemirings);
    }
    let module = g.module();
    let ring = module.ring();
    let h = scalar_poly_mul(f, g)?;
    let cf = f.content().members();
    let cg = g.content().members();
    let ch = h.content().members();
    let degree_g = g.degree().unwrap_or(0) as i64;
    let labels =
        |mask: ElemSet| -> Vec<String> { mask.iter().map(|i| module.label(i).to_string()).collect() };

    let mut fpow = ElemSet::full(ring.size());
    let mut lhs_chain = Vec::new();
    let mut rhs_chain = Vec::new();
    let mut exponent = None;
    let mut stabilized = false;
    for m in 0..=bound {
        let next = product_mask(ring, fpow, cf);
        let lhs = action_mask(module, next, cg);
        let rhs = action_mask(module, fpow, ch);
        lhs_chain.push(labels(lhs));
        rhs_chain.push(labels(rhs));
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
    Ok(SemimoduleDmReport { exponent, bound, degree_g, lhs_chain, rhs_chain, stabilized })
}

/// One module pair for which the bounded formula fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemimoduleDmFailure {
    pub f: String,
    pub g: String,
    pub report: SemimoduleDmReport,
}

/// Verdict of the semimodule subtractivity ⇔ Dedekind–Mertens equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemimoduleDmEquivalence {
    pub subtractive: bool,
    pub bounded_exponent_for_all: bool,
    pub probes_all_unbounded: Option<bool>,
    pub agrees: bool,
    pub pairs_swept: u64,
    pub witness: Option<SemimoduleDmFailure>,
}

/// All subtractivity failures `(a, b)` across 2-generated subsemimodules.
fn module_subtractivity_failures(module: &Arc<FiniteSemimodule>) -> Vec<(usize, usize)> {
    let n = module.size();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x..n {
            let members = subsemimodule_generated(module, &[x, y]).members();
            for a in members.iter() {
                for b in 0..n {
                    if !members.contains(b)
                        && members.contains(module.plus(a, b))
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

/// The probe pair for a module subtractivity failure `(a, b)`: `f = 1 + X`
/// over the ring and `g = a + bX + aX²` over the module.  The product's
/// coefficients `a, a+b` stay inside the failing submodule while `b`
/// escapes, and `c(f) = S` makes the chains constant, so no exponent works.
pub fn dm_module_probe_pair(
    module: &Arc<FiniteSemimodule>,
    a: usize,
    b: usize,
) -> (Polynomial, ModulePoly) {
    let ring = module.ring();
    let f = Polynomial::univariate(ring, "X", &[ring.one(), ring.one()]);
    let g = ModulePoly::new(module, &[a, b, a]);
    (f, g)
}

/// Checks `M subtractive ⇔ bounded Dedekind–Mertens` by exhaustive sweep
/// over all pairs (`f` over `S`, `g` over `M`) of degree ≤ D, plus probe
/// pairs for the reverse implication.
pub fn dm_semimodule_equivalence(
    module: &Arc<FiniteSemimodule>,
    degree_bound: u32,
    budget: &SweepBudget,
) -> Result<SemimoduleDmEquivalence, Error> {
    let ring = module.ring().clone();
    let ns = ring.size() as u64;
    let nm = module.size() as u64;
    let len = degree_bound as usize + 1;
    let per_f = checked_power(ns, len as u32)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    let per_g = checked_power(nm, len as u32)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    let pairs = per_f
        .checked_mul(per_g)
        .ok_or(Error::BudgetExceeded { pairs: u64::MAX, budget: budget.max_pairs })?;
    budget.admit(pairs)?;

    let mzero = module.zero();
    let bounded_exists = |cf: ElemSet, cg: ElemSet, ch: ElemSet, deg: u32| -> bool {
        let mut fpow = ElemSet::full(ring.size());
        for _ in 0..=deg {
            let next = product_mask(&ring, fpow, cf);
            if action_mask(module, next, cg) == action_mask(module, fpow, ch) {
                return true;
            }
            if next == fpow {
                return false;
            }
            fpow = next;
        }
        false
    };
    let fails_at = |idx: u64| {
        let fc = decode_base(idx / per_g, ns, len);
        let gc = decode_base(idx % per_g, nm, len);
        let cf = close_mask(&ring, fc.iter().copied().collect());
        let cg = close_submodule_mask(module, gc.iter().copied().collect());
        let mut conv = vec![mzero; 2 * len - 1];
        for (i, &a) in fc.iter().enumerate() {
            for (j, &m) in gc.iter().enumerate() {
                conv[i + j] = module.plus(conv[i + j], module.act(a, m));
            }
        }
        let ch = close_submodule_mask(module, conv.iter().copied().collect());
        let deg = gc.iter().rposition(|&c| c != mzero).unwrap_or(0) as u32;
        if bounded_exists(cf, cg, ch, deg) {
            None
        } else {
            Some((fc, gc))
        }
    };
    let first_failure = find_first(pairs, budget.parallel, fails_at);
    let bounded_exponent_for_all = first_failure.is_none();

    let subtractive = is_subtractive_semimodule(module).holds;
    let mut witness = None;
    if let Some((_, (fc, gc))) = first_failure {
        let f = Polynomial::univariate(&ring, "X", &fc);
        let g = ModulePoly::new(module, &gc);
        let deg = g.degree().unwrap_or(0) as u32;
        let report = dm_semimodule(&f, &g, deg)?;
        witness = Some(SemimoduleDmFailure { f: f.to_string(), g: g.to_string(), report });
    }

    let probes_all_unbounded = if subtractive {
        None
    } else {
        let mut all_unbounded = true;
        for (a, b) in module_subtractivity_failures(module) {
            let (f, g) = dm_module_probe_pair(module, a, b);
            let report = dm_semimodule(&f, &g, ring.size() as u32 + 2)?;
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
    Ok(SemimoduleDmEquivalence {
        subtractive,
        bounded_exponent_for_all,
        probes_all_unbounded,
        agrees,
        pairs_swept: pairs,
        witness,
    })
}
