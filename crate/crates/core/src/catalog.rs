//! A catalog of small semirings with known classification behaviour.
//!
//! These families cover the interesting corners of the theory: bounded
//! distributive lattices (Gaussian), chains with deformed addition
//! (subtractive but not lattices), nilpotent chains (weak Gaussian but not
//! subtractive), wraparound arithmetic `B(n,i)` and truncated arithmetic
//! `T_k` (not weak Gaussian), and products. Every builder canonicalizes the
//! additive identity to index 0 and the multiplicative identity to index 1,
//! which keeps serialized reports stable.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::Error;
use crate::semiring::{product_semiring, validate_semiring, FiniteSemiring, RawSemiring};

/// Description of a catalog member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSpec {
    /// Two-element Boolean semiring `({0,1}, or, and)`.
    Boolean,
    /// Total order `0 < .. < 1` on `n` elements with `add = max`, `mul = min`.
    ChainLattice { n: usize },
    /// Subsets of `{1..n}` with union and intersection.
    PowerSetLattice { n: usize },
    /// Chain `0 < u < 1` where `1 + 1 = u` and otherwise `add = max`, `mul = min`.
    ChainC,
    /// Three-element semiring `{0, 1, u}` with `1 + u = u` and `u * u = u`.
    Lagrassa,
    /// `{0..n-1}` with addition and multiplication wrapping into `[i, n-1]`
    /// congruent mod `n - i`.
    Bni { n: usize, i: usize },
    /// `{-inf, 0, 1, .., k}` with `add = max` and `mul = min(a + b, k)`.
    Truncation { k: usize },
    /// Chain `0 < a < .. < 1` with `add = max` and `x * y = 0` whenever both
    /// factors are below 1.
    NilChain { n: usize },
    /// An idempotent commutative monoid `P` extended by a multiplicative
    /// identity: `a + 1 = 1` for all `a`, and `a * b = 0` on `P`.
    IdempotentMonoidExt { elements: Vec<String>, add: Vec<Vec<usize>> },
    /// Componentwise product of catalog members.
    Product(Vec<CatalogSpec>),
}

impl CatalogSpec {
    pub fn family(&self) -> &'static str {
        match self {
            CatalogSpec::Boolean => "boolean",
            CatalogSpec::ChainLattice { .. } => "chain_lattice",
            CatalogSpec::PowerSetLattice { .. } => "power_set_lattice",
            CatalogSpec::ChainC => "chain_c",
            CatalogSpec::Lagrassa => "lagrassa",
            CatalogSpec::Bni { .. } => "b_n_i",
            CatalogSpec::Truncation { .. } => "truncation",
            CatalogSpec::NilChain { .. } => "nil_chain",
            CatalogSpec::IdempotentMonoidExt { .. } => "idempotent_monoid_ext",
            CatalogSpec::Product(_) => "product",
        }
    }

    /// Human-readable name including parameters, e.g. `b_n_i(4,2)`.
    pub fn name(&self) -> String {
        match self {
            CatalogSpec::ChainLattice { n } => format!("chain_lattice({n})"),
            CatalogSpec::PowerSetLattice { n } => format!("power_set_lattice({n})"),
            CatalogSpec::Bni { n, i } => format!("b_n_i({n},{i})"),
            CatalogSpec::Truncation { k } => format!("truncation({k})"),
            CatalogSpec::NilChain { n } => format!("nil_chain({n})"),
            CatalogSpec::IdempotentMonoidExt { elements, .. } => {
                format!("idempotent_monoid_ext(|P|={})", elements.len())
            }
            CatalogSpec::Product(fs) => {
                let inner: Vec<String> = fs.iter().map(|f| f.name()).collect();
                format!("product([{}])", inner.join(", "))
            }
            other => other.family().to_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        let params = match self {
            CatalogSpec::ChainLattice { n }
            | CatalogSpec::PowerSetLattice { n }
            | CatalogSpec::NilChain { n } => json!({ "n": n }),
            CatalogSpec::Bni { n, i } => json!({ "n": n, "i": i }),
            CatalogSpec::Truncation { k } => json!({ "k": k }),
            CatalogSpec::IdempotentMonoidExt { elements, add } => {
                json!({ "elements": elements, "add": add })
            }
            CatalogSpec::Product(fs) => {
                json!({ "factors": fs.iter().map(|f| f.to_json()).collect::<Vec<_>>() })
            }
            _ => json!({}),
        };
        json!({ "family": self.family(), "params": params })
    }

    pub fn from_json(v: &Value) -> Result<CatalogSpec, Error> {
        let family = v
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::BadParams("catalog spec needs a \"family\" field".into()))?;
        let params = v.get("params").cloned().unwrap_or(json!({}));
        let get_usize = |key: &str| -> Result<usize, Error> {
            params
                .get(key)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| Error::BadParams(format!("family {family} needs integer param \"{key}\"")))
        };
        match family {
            "boolean" => Ok(CatalogSpec::Boolean),
            "chain_lattice" => Ok(CatalogSpec::ChainLattice { n: get_usize("n")? }),
            "power_set_lattice" => Ok(CatalogSpec::PowerSetLattice { n: get_usize("n")? }),
            "chain_c" => Ok(CatalogSpec::ChainC),
            "lagrassa" => Ok(CatalogSpec::Lagrassa),
            "b_n_i" => Ok(CatalogSpec::Bni { n: get_usize("n")?, i: get_usize("i")? }),
            "truncation" => Ok(CatalogSpec::Truncation { k: get_usize("k")? }),
            "nil_chain" => Ok(CatalogSpec::NilChain { n: get_usize("n")? }),
            "idempotent_monoid_ext" => {
                let elements: Vec<String> = params
                    .get("elements")
                    .and_then(Value::as_array)
                    .map(|a| a.iter().filter_map(Value::as_str).map(String::from).collect())
                    .ok_or_else(|| Error::BadParams("idempotent_monoid_ext needs \"elements\"".into()))?;
                let add: Vec<Vec<usize>> = params
                    .get("add")
                    .and_then(Value::as_array)
                    .map(|rows| {
                        rows.iter()
                            .map(|row| {
                                row.as_array()
                                    .map(|r| r.iter().filter_map(Value::as_u64).map(|x| x as usize).collect())
                                    .unwrap_or_default()
                            })
                            .collect()
                    })
                    .ok_or_else(|| Error::BadParams("idempotent_monoid_ext needs \"add\"".into()))?;
                Ok(CatalogSpec::IdempotentMonoidExt { elements, add })
            }
            "product" => {
                let factors = params
                    .get("factors")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::BadParams("product needs \"factors\"".into()))?;
                let specs = factors.iter().map(CatalogSpec::from_json).collect::<Result<Vec<_>, _>>()?;
                Ok(CatalogSpec::Product(specs))
            }
            other => Err(Error::BadParams(format!("unknown catalog family \"{other}\""))),
        }
    }

    /// Resolve a CLI-style family name plus numeric parameters.
    pub fn from_name(name: &str, params: &[(String, usize)]) -> Result<CatalogSpec, Error> {
        let get = |key: &str| -> Result<usize, Error> {
            params
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::BadParams(format!("family {name} needs --param {key}=<int>")))
        };
        match name.to_ascii_lowercase().as_str() {
            "boolean" => Ok(CatalogSpec::Boolean),
            "chain_lattice" => Ok(CatalogSpec::ChainLattice { n: get("n")? }),
            "power_set_lattice" => Ok(CatalogSpec::PowerSetLattice { n: get("n")? }),
            "chain_c" => Ok(CatalogSpec::ChainC),
            "lagrassa" => Ok(CatalogSpec::Lagrassa),
            "b_n_i" => Ok(CatalogSpec::Bni { n: get("n")?, i: get("i")? }),
            "truncation" => Ok(CatalogSpec::Truncation { k: get("k")? }),
            "nil_chain" => Ok(CatalogSpec::NilChain { n: get("n")? }),
            other => Err(Error::BadParams(format!(
                "unknown catalog family \"{other}\" (structured families need --input with a JSON spec)"
            ))),
        }
    }
}

/// Labels for the middle elements of a chain: a, b, c, ...
fn chain_labels(count: usize) -> Vec<String> {
    (0..count)
        .map(|k| {
            let c = (b'a' + (k % 26) as u8) as char;
            if k < 26 { c.to_string() } else { format!("{c}{}", k / 26) }
        })
        .collect()
}

/// Build a chain semiring on ranks `0..n` from rank-level operations.
///
/// Index 0 is the bottom (zero), index 1 the top (one), and indices `2..`
/// are the middle elements in ascending order.
fn chain_semiring(
    n: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
) -> Result<FiniteSemiring, Error> {
    let rank_of_index = |idx: usize| -> usize {
        match idx {
            0 => 0,
            1 => n - 1,
            k => k - 1,
        }
    };
    let index_of_rank = |r: usize| -> usize {
        if r == 0 {
            0
        } else if r == n - 1 {
            1
        } else {
            r + 1
        }
    };
    let mut elements = vec!["0".to_string(), "1".to_string()];
    elements.extend(chain_labels(n - 2));
    let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n)
            .map(|a| (0..n).map(|b| index_of_rank(op(rank_of_index(a), rank_of_index(b)))).collect())
            .collect()
    };
    validate_semiring(RawSemiring {
        elements,
        add: table(&add),
        mul: table(&mul),
        zero: 0,
        one: 1,
    })
}

/// Reorder elements so that zero sits at index 0 and one at index 1.
fn canonicalize_zero_one(ring: FiniteSemiring) -> FiniteSemiring {
    let raw = ring.raw();
    let n = raw.elements.len();
    if raw.zero == 0 && raw.one == 1 {
        return ring;
    }
    // old index -> new index: zero first, one second, rest in old order.
    let mut order: Vec<usize> = vec![raw.zero, raw.one];
    order.extend((0..n).filter(|&i| i != raw.zero && i != raw.one));
    let mut new_of_old = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        new_of_old[old] = new;
    }
    let remap = |t: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        (0..n)
            .map(|a| (0..n).map(|b| new_of_old[t[order[a]][order[b]]]).collect())
            .collect()
    };
    validate_semiring(RawSemiring {
        elements: order.iter().map(|&i| raw.elements[i].clone()).collect(),
        add: remap(&raw.add),
        mul: remap(&raw.mul),
        zero: 0,
        one: 1,
    })
    .expect("permuting a valid semiring preserves the axioms")
}

fn build_bni(n: usize, i: usize) -> Result<FiniteSemiring, Error> {
    if i == 0 || i >= n {
        return Err(Error::BadParams(format!("b_n_i requires 0 < i < n, got n={n}, i={i}")));
    }
    // Values above n-1 wrap into [i, n-1], congruent mod n - i.
    let wrap = |v: usize| -> usize {
        if v <= n - 1 {
            v
        } else {
            let m = n - i;
            i + (v - i) % m
        }
    };
    let elements = (0..n).map(|x| x.to_string()).collect();
    validate_semiring(RawSemiring {
        elements,
        add: (0..n).map(|a| (0..n).map(|b| wrap(a + b)).collect()).collect(),
        mul: (0..n).map(|a| (0..n).map(|b| wrap(a * b)).collect()).collect(),
        zero: 0,
        one: 1,
    })
}

fn build_truncation(k: usize) -> Result<FiniteSemiring, Error> {
    if k < 1 {
        return Err(Error::BadParams("truncation requires k >= 1".into()));
    }
    let n = k + 2; // -inf plus 0..=k
    // Index 0 is -inf, index j >= 1 holds the integer j - 1.
    let value = |idx: usize| -> Option<usize> { idx.checked_sub(1) };
    let mut elements = vec!["-inf".to_string()];
    elements.extend((0..=k).map(|v| v.to_string()));
    let add = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| match (value(a), value(b)) {
                    (None, _) => b,
                    (_, None) => a,
                    (Some(x), Some(y)) => x.max(y) + 1,
                })
                .collect()
        })
        .collect();
    let mul = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| match (value(a), value(b)) {
                    (None, _) | (_, None) => 0,
                    (Some(x), Some(y)) => (x + y).min(k) + 1,
                })
                .collect()
        })
        .collect();
    validate_semiring(RawSemiring { elements, add, mul, zero: 0, one: 1 })
}

fn build_idempotent_monoid_ext(p_elements: &[String], p_add: &[Vec<usize>]) -> Result<FiniteSemiring, Error> {
    let m = p_elements.len();
    if m < 1 {
        return Err(Error::BadParams("monoid must be nonempty".into()));
    }
    if p_add.len() != m || p_add.iter().any(|r| r.len() != m) || p_add.iter().flatten().any(|&e| e >= m) {
        return Err(Error::BadParams(format!("monoid add table is not a valid {m}x{m} table")));
    }
    // The extension construction needs (P, +, 0) to be an idempotent
    // commutative monoid with identity at index 0.
    for a in 0..m {
        if p_add[a][0] != a || p_add[a][a] != a {
            return Err(Error::BadParams("monoid must be idempotent with identity at index 0".into()));
        }
        for b in 0..m {
            if p_add[a][b] != p_add[b][a] {
                return Err(Error::BadParams("monoid must be commutative".into()));
            }
            for c in 0..m {
                if p_add[p_add[a][b]][c] != p_add[a][p_add[b][c]] {
                    return Err(Error::BadParams("monoid must be associative".into()));
                }
            }
        }
    }
    if p_elements.iter().any(|l| l == "1") {
        return Err(Error::BadParams("monoid labels may not include \"1\"".into()));
    }
    // S = P + {1}: index 0 is the monoid identity (the semiring zero),
    // index 1 the adjoined multiplicative identity, then the rest of P.
    let n = m + 1;
    let old_of_new = |idx: usize| -> Option<usize> {
        match idx {
            0 => Some(0),
            1 => None, // the adjoined 1
            k => Some(k - 1),
        }
    };
    let new_of_old = |p: usize| -> usize { if p == 0 { 0 } else { p + 1 } };
    let mut elements = vec![p_elements[0].clone(), "1".to_string()];
    elements.extend(p_elements[1..].iter().cloned());
    let add = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| match (old_of_new(a), old_of_new(b)) {
                    (None, _) | (_, None) => 1, // x + 1 = 1 for every x
                    (Some(x), Some(y)) => new_of_old(p_add[x][y]),
                })
                .collect()
        })
        .collect();
    let mul = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| match (old_of_new(a), old_of_new(b)) {
                    (None, _) => b, // 1 is the identity
                    (_, None) => a,
                    (Some(_), Some(_)) => 0, // products inside P vanish
                })
                .collect()
        })
        .collect();
    validate_semiring(RawSemiring { elements, add, mul, zero: 0, one: 1 })
}

/// Build a catalog member. Parameters are checked and the resulting tables
/// are run through full validation.
pub fn build_catalog(spec: &CatalogSpec) -> Result<FiniteSemiring, Error> {
    match spec {
        CatalogSpec::Boolean => chain_semiring(2, usize::max, usize::min),
        CatalogSpec::ChainLattice { n } => {
            if !(2..=28).contains(n) {
                return Err(Error::BadParams(format!("chain_lattice requires 2 <= n <= 28, got {n}")));
            }
            chain_semiring(*n, usize::max, usize::min)
        }
        CatalogSpec::PowerSetLattice { n } => {
            if !(1..=6).contains(n) {
                return Err(Error::BadParams(format!("power_set_lattice requires 1 <= n <= 6, got {n}")));
            }
            let full: u32 = (1u32 << n) - 1;
            // Subsets ordered: empty, full, then by (cardinality, mask).
            let mut masks: Vec<u32> = (0..=full).filter(|&m| m != 0 && m != full).collect();
            masks.sort_by_key(|m| (m.count_ones(), *m));
            let mut order = vec![0u32, full];
            order.extend(masks);
            let label = |m: u32| -> String {
                let items: Vec<String> = (0..*n).filter(|b| m >> b & 1 == 1).map(|b| (b + 1).to_string()).collect();
                format!("{{{}}}", items.join(","))
            };
            let pos = |m: u32| order.iter().position(|&x| x == m).unwrap();
            let nn = order.len();
            validate_semiring(RawSemiring {
                elements: order.iter().map(|&m| label(m)).collect(),
                add: (0..nn).map(|a| (0..nn).map(|b| pos(order[a] | order[b])).collect()).collect(),
                mul: (0..nn).map(|a| (0..nn).map(|b| pos(order[a] & order[b])).collect()).collect(),
                zero: 0,
                one: 1,
            })
        }
        CatalogSpec::ChainC => {
            // Ranks 0 < u < 1 on three elements; the only deformation is 1 + 1 = u.
            let top = 2;
            let mid = 1;
            chain_semiring(
                3,
                move |a, b| if a == top && b == top { mid } else { a.max(b) },
                usize::min,
            )
            .map(|ring| {
                // chain_semiring labels the middle element "a"; this member
                // traditionally calls it u.
                let mut raw = ring.raw();
                raw.elements[2] = "u".into();
                validate_semiring(raw).expect("relabeling preserves validity")
            })
        }
        CatalogSpec::Lagrassa => {
            // 0 < 1 < u with add = max, u * u = u, and zero absorbing.
            let elements = vec!["0".to_string(), "1".to_string(), "u".to_string()];
            let rank = [0usize, 1, 2];
            let of_rank = [0usize, 1, 2];
            let add = (0..3)
                .map(|a: usize| (0..3).map(|b: usize| of_rank[rank[a].max(rank[b])]).collect())
                .collect();
            let mul = (0..3)
                .map(|a: usize| {
                    (0..3)
                        .map(|b: usize| if a == 0 || b == 0 { 0 } else { of_rank[rank[a].max(rank[b])] })
                        .collect()
                })
                .collect();
            validate_semiring(RawSemiring { elements, add, mul, zero: 0, one: 1 })
        }
        CatalogSpec::Bni { n, i } => build_bni(*n, *i),
        CatalogSpec::Truncation { k } => build_truncation(*k),
        CatalogSpec::NilChain { n } => {
            if !(2..=28).contains(n) {
                return Err(Error::BadParams(format!("nil_chain requires 2 <= n <= 28, got {n}")));
            }
            let top = n - 1;
            chain_semiring(*n, usize::max, move |a, b| {
                if a == top {
                    b
                } else if b == top {
                    a
                } else {
                    0
                }
            })
        }
        CatalogSpec::IdempotentMonoidExt { elements, add } => build_idempotent_monoid_ext(elements, add),
        CatalogSpec::Product(specs) => {
            let factors = specs
                .iter()
                .map(|s| build_catalog(s).map(Arc::new))
                .collect::<Result<Vec<_>, _>>()?;
            product_semiring(&factors).map(canonicalize_zero_one)
        }
    }
}

/// Convenience: build and wrap in an [`Arc`].
pub fn build_arc(spec: &CatalogSpec) -> Result<Arc<FiniteSemiring>, Error> {
    build_catalog(spec).map(Arc::new)
}

/// The four-element join semilattice 0 < p, q < r used as a default
/// idempotent monoid example.
pub fn diamond_monoid() -> CatalogSpec {
    CatalogSpec::IdempotentMonoidExt {
        elements: vec!["0".into(), "p".into(), "q".into(), "r".into()],
        add: vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 2, 3],
            vec![3, 3, 3, 3],
        ],
    }
}

/// The fixed roster of members exercised by regression and acceptance
/// suites: every family is represented and sizes stay small enough for
/// exhaustive sweeps.
pub fn standard_members() -> Vec<(String, Arc<FiniteSemiring>)> {
    let specs = vec![
        CatalogSpec::Boolean,
        CatalogSpec::ChainLattice { n: 3 },
        CatalogSpec::ChainLattice { n: 4 },
        CatalogSpec::PowerSetLattice { n: 3 },
        CatalogSpec::ChainC,
        CatalogSpec::Lagrassa,
        CatalogSpec::Bni { n: 3, i: 1 },
        CatalogSpec::Bni { n: 4, i: 2 },
        CatalogSpec::Truncation { k: 1 },
        CatalogSpec::Truncation { k: 2 },
        CatalogSpec::Truncation { k: 3 },
        CatalogSpec::NilChain { n: 3 },
        CatalogSpec::NilChain { n: 4 },
        diamond_monoid(),
        CatalogSpec::Product(vec![CatalogSpec::Boolean, CatalogSpec::Boolean]),
        CatalogSpec::Product(vec![CatalogSpec::NilChain { n: 3 }, CatalogSpec::NilChain { n: 3 }]),
    ];
    specs
        .into_iter()
        .map(|s| {
            let name = s.name();
            let ring = build_arc(&s).expect("standard members are valid");
            (name, ring)
        })
        .collect()
}
