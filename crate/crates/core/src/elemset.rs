//! Dense bitsets over element indices.
//!
//! Every carrier handled by this crate is indexed `0..n` with `n <= 64`, so
//! sets of elements (ideal members, zero-divisors, supports) are single
//! machine words. All set algebra used by the closure fixpoints and the
//! sweep kernels reduces to word operations.

/// A set of element indices backed by a `u64` mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u64);

/// Hard upper bound on carrier size imposed by the bitset representation.
pub const MAX_ELEMENTS: usize = 64;

impl ElemSet {
    pub const fn empty() -> Self {
        ElemSet(0)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        ElemSet(1u64 << i)
    }

    pub fn from_mask(mask: u64) -> Self {
        ElemSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn with(self, i: usize) -> Self {
        ElemSet(self.0 | 1u64 << i)
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements strictly below index `i`.
    pub fn below(self, i: usize) -> Self {
        ElemSet(self.0 & ((1u64 << i) - 1))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = ElemSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
