use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::young::YoungDiagram;

/// A permutation of `{0, …, n-1}`, stored by images: `σ(i) = images[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// `None` unless `images` is a bijection on `0..len`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    /// Transposition of `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The cycle `0 → 1 → … → n-1 → 0`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Cycle lengths, sorted into a partition of `n`.
    pub fn cycle_type(&self) -> YoungDiagram {
        let mut seen = vec![false; self.len()];
        let mut lengths = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lengths.push(len);
        }
        YoungDiagram::from_parts(lengths).expect("cycle lengths are positive")
    }

    /// Position of this permutation in lexicographic order of image lists
    /// (Lehmer code), matching the order of [`all_permutations`].
    pub fn rank(&self) -> usize {
        let n = self.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&x| x < self.images[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "({})", shown.join(" "))
    }
}

/// All `n!` permutations in lexicographic order; `all[k].rank() == k`.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation { images: cur.clone() });
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}
