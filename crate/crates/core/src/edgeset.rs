use std::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::EdgeId;

/// A subset of the edges of one host graph.
///
/// The universe is the host's edge count; iteration is always in ascending
/// edge id order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    bits: FixedBitSet,
}

impl EdgeSet {
    pub fn empty(universe: usize) -> Self {
        EdgeSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        EdgeSet { bits }
    }

    /// Builds a set from edge ids. Panics on an id outside the universe.
    pub fn from_ids<I: IntoIterator<Item = EdgeId>>(universe: usize, ids: I) -> Self {
        let mut set = EdgeSet::empty(universe);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, id: EdgeId) -> bool {
        assert!(id < self.universe(), "edge id {id} out of range");
        !self.bits.put(id)
    }

    pub fn remove(&mut self, id: EdgeId) -> bool {
        let was = self.contains(id);
        if id < self.universe() {
            self.bits.set(id, false);
        }
        was
    }

    pub fn toggle(&mut self, id: EdgeId) {
        self.bits.toggle(id);
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.bits.contains(id)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    pub fn symmetric_difference(&self, other: &EdgeSet) -> EdgeSet {
        assert_eq!(
            self.universe(),
            other.universe(),
            "edge sets of different hosts"
        );
        let mut bits = self.bits.clone();
        bits.symmetric_difference_with(&other.bits);
        EdgeSet { bits }
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        assert_eq!(
            self.universe(),
            other.universe(),
            "edge sets of different hosts"
        );
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        EdgeSet { bits }
    }

    pub fn intersection_count(&self, other: &EdgeSet) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn complement(&self) -> EdgeSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        EdgeSet { bits }
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
