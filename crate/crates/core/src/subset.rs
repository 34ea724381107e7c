use std::fmt;

/// A subset of the vertex universe [m] = {1, …, m}, stored as a bitmask with
/// vertex i on bit i−1. The universe bound m ≤ 32 covers everything in scope
/// (geometric models cap at m = 12, tubing complexes at a few dozen tubes).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u32);

pub const MAX_UNIVERSE: u32 = 32;

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u32) -> Self {
        VertexSet(mask)
    }

    /// Builds from 1-based vertex labels; rejects labels outside [1, m].
    pub fn from_vertices(vs: &[u32], m: u32) -> crate::Result<Self> {
        let mut mask = 0u32;
        for &v in vs {
            if v == 0 || v > m {
                return Err(crate::Error::input(format!(
                    "vertex {v} out of range 1..={m}"
                )));
            }
            mask |= 1 << (v - 1);
        }
        Ok(VertexSet(mask))
    }

    pub fn full(m: u32) -> Self {
        debug_assert!(m <= MAX_UNIVERSE);
        if m == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << m) - 1)
        }
    }

    pub fn singleton(v: u32) -> Self {
        VertexSet(1 << (v - 1))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        v >= 1 && self.0 >> (v - 1) & 1 == 1
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn symdiff(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ other.0)
    }

    pub fn insert(self, v: u32) -> VertexSet {
        VertexSet(self.0 | 1 << (v - 1))
    }

    pub fn remove(self, v: u32) -> VertexSet {
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    /// 1-based vertex labels in ascending order.
    pub fn vertices(self) -> impl Iterator<Item = u32> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let v = mask.trailing_zeros() + 1;
                mask &= mask - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.vertices().collect()
    }

    /// All subsets of self, ascending by submask pattern (∅ first, self last).
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut sub = 0u32;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = VertexSet(sub);
            if sub == full {
                done = true;
            } else {
                sub = (sub.wrapping_sub(full)) & full;
            }
            Some(cur)
        })
    }

    /// Number of elements of `self` strictly greater than v.
    pub fn count_above(self, v: u32) -> u32 {
        (self.0 >> v).count_ones()
    }

    /// Number of elements of `self` strictly less than v.
    pub fn count_below(self, v: u32) -> u32 {
        (self.0 & ((1u32 << (v - 1)) - 1)).count_ones()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.vertices())
    }
}

impl<'de> serde::Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs: Vec<u32> = Vec::deserialize(d)?;
        VertexSet::from_vertices(&vs, MAX_UNIVERSE).map_err(serde::de::Error::custom)
    }
}
