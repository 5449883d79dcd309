use super::{bit, VertexSet};

/// All `k`-subsets of a vertex set, in lexicographic order of their sorted
/// member lists.
#[derive(Debug, Clone)]
pub struct Subsets {
    pool: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Subsets {
    pub fn new(from: VertexSet, k: usize) -> Subsets {
        let pool = from.to_vec();
        let done = k > pool.len();
        Subsets {
            pool,
            idx: (0..k).collect(),
            done,
        }
    }
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let set = VertexSet::from_bits(self.idx.iter().fold(0, |s, &i| s | bit(self.pool[i])));

        // advance to the next combination
        let n = self.pool.len();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let got: Vec<Vec<usize>> = Subsets::new(VertexSet::range(0..4), 2)
            .map(|s| s.to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn edge_sizes() {
        assert_eq!(Subsets::new(VertexSet::range(0..5), 0).count(), 1);
        assert_eq!(Subsets::new(VertexSet::range(0..5), 5).count(), 1);
        assert_eq!(Subsets::new(VertexSet::range(0..5), 6).count(), 0);
        assert_eq!(Subsets::new(VertexSet::EMPTY, 0).count(), 1);
        let sparse: VertexSet = [1, 4, 9, 63].into_iter().collect();
        let got: Vec<_> = Subsets::new(sparse, 3).map(|s| s.to_vec()).collect();
        assert_eq!(got.len(), 4);
        assert_eq!(got[0], vec![1, 4, 9]);
        assert_eq!(got[3], vec![4, 9, 63]);
    }
}
