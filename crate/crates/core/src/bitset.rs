//! Small growable bitset used for vertex sets in clique search.

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct VertexSet {
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { blocks: Vec::new() }
    }

    pub fn with_capacity(max_value: usize) -> Self {
        VertexSet {
            blocks: vec![0; max_value / 64 + 1],
        }
    }

    pub fn insert(&mut self, v: usize) {
        let b = v / 64;
        if b >= self.blocks.len() {
            self.blocks.resize(b + 1, 0);
        }
        self.blocks[b] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        let b = v / 64;
        if b < self.blocks.len() {
            self.blocks[b] &= !(1u64 << (v % 64));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        let b = v / 64;
        b < self.blocks.len() && self.blocks[b] & (1u64 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let n = self.blocks.len().min(other.blocks.len());
        VertexSet {
            blocks: (0..n).map(|i| self.blocks[i] & other.blocks[i]).collect(),
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        let n = self.blocks.len().min(other.blocks.len());
        (0..n)
            .map(|i| (self.blocks[i] & other.blocks[i]).count_ones() as usize)
            .sum()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            blocks: self
                .blocks
                .iter()
                .enumerate()
                .map(|(i, &b)| b & !other.blocks.get(i).copied().unwrap_or(0))
                .collect(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .enumerate()
            .all(|(i, &b)| b & !other.blocks.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.intersection_len(other) == 0
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &b)| {
            let mut bits = b;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let t = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(bi * 64 + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn from_slice(vs: &[usize]) -> Self {
        let mut s = VertexSet::new();
        for &v in vs {
            s.insert(v);
        }
        s
    }

    /// Canonical form with trailing zero blocks trimmed, suitable as a
    /// deterministic map/set key.
    pub fn canonical(mut self) -> Self {
        while self.blocks.last() == Some(&0) {
            self.blocks.pop();
        }
        self
    }
}
