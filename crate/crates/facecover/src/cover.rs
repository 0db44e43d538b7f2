//! Exact minimum set cover by branch and bound with a greedy upper bound.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| i * 64 + b)
        })
    }
}

struct Search<'a> {
    sets: &'a [BitSet],
    best: Option<Vec<usize>>,
    bound: usize,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, uncovered: &BitSet) {
        if uncovered.is_empty() {
            if self.chosen.len() < self.bound {
                self.bound = self.chosen.len();
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        let remaining = uncovered.count();
        let widest = self
            .sets
            .iter()
            .map(|s| s.intersection_count(uncovered))
            .max()
            .unwrap_or(0);
        if widest == 0 {
            return;
        }
        let lower = remaining.div_ceil(widest);
        if self.chosen.len() + lower >= self.bound {
            return;
        }
        // branch on the element covered by the fewest sets
        let mut pick = None;
        let mut pick_count = usize::MAX;
        for e in uncovered.iter() {
            let c = self.sets.iter().filter(|s| s.contains(e)).count();
            if c < pick_count {
                pick_count = c;
                pick = Some(e);
            }
        }
        let e = pick.unwrap();
        let mut options: Vec<(usize, usize)> = self
            .sets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.contains(e))
            .map(|(i, s)| (s.intersection_count(uncovered), i))
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, i) in options {
            let mut next = uncovered.clone();
            next.difference_with(&self.sets[i]);
            self.chosen.push(i);
            self.run(&next);
            self.chosen.pop();
        }
    }
}

fn greedy(universe: &BitSet, sets: &[BitSet]) -> Option<Vec<usize>> {
    let mut uncovered = universe.clone();
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (gain, i) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.intersection_count(&uncovered), i))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))?;
        if gain == 0 {
            return None;
        }
        uncovered.difference_with(&sets[i]);
        chosen.push(i);
    }
    Some(chosen)
}

/// Minimum number of `sets` whose union contains `0..universe`.
/// Returns the chosen set indices, or `None` if no cover exists or every
/// cover needs more than `limit` sets.
pub fn min_set_cover(universe: usize, sets: &[Vec<usize>], limit: Option<usize>) -> Option<Vec<usize>> {
    let bits: Vec<BitSet> = sets
        .iter()
        .map(|s| {
            let mut b = BitSet::new(universe);
            for &x in s {
                b.insert(x);
            }
            b
        })
        .collect();
    let mut all = BitSet::new(universe);
    for i in 0..universe {
        all.insert(i);
    }
    let start = greedy(&all, &bits)?;
    let cap = limit.map(|l| l + 1).unwrap_or(usize::MAX);
    let bound = start.len().min(cap);
    let mut search = Search {
        sets: &bits,
        best: if start.len() < cap { Some(start) } else { None },
        bound,
        chosen: Vec::new(),
    };
    search.run(&all);
    let mut best = search.best?;
    best.sort_unstable();
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_universe_needs_nothing() {
        assert_eq!(min_set_cover(0, &[], None), Some(vec![]));
    }

    #[test]
    fn uncoverable_is_none() {
        assert_eq!(min_set_cover(2, &[vec![0]], None), None);
    }

    #[test]
    fn greedy_trap_is_solved_exactly() {
        // greedy picks the middle set first and needs three
        let sets = vec![vec![0, 1, 2], vec![3, 4, 5], vec![1, 2, 3, 4], vec![0], vec![5]];
        assert_eq!(min_set_cover(6, &sets, None).unwrap().len(), 2);
    }

    #[test]
    fn limit_cuts_search() {
        let sets = vec![vec![0], vec![1], vec![2]];
        assert_eq!(min_set_cover(3, &sets, Some(2)), None);
        assert_eq!(min_set_cover(3, &sets, Some(3)).unwrap().len(), 3);
    }

    #[test]
    fn bitset_ops() {
        let mut a = BitSet::new(130);
        a.insert(3);
        a.insert(129);
        assert_eq!(a.count(), 2);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![3, 129]);
        assert_eq!(a.first(), Some(3));
    }
}
