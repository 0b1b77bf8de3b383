use std::fmt;

/// Subset of the generators, as a bit mask over 0-based indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(rank: usize) -> Subset {
        if rank == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << rank) - 1)
        }
    }

    pub fn single(i: usize) -> Subset {
        Subset(1 << i)
    }

    /// From 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        Subset(it.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// From the 1-based generator labels used in words.
    pub fn from_labels(labels: &[usize]) -> Subset {
        Subset::from_indices(labels.iter().map(|&l| l - 1))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// 1-based labels.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Image under a permutation of the generators.
    pub fn map(self, perm: &[usize]) -> Subset {
        Subset::from_indices(self.iter().map(|i| perm[i]))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
