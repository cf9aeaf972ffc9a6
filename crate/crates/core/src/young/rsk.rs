use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::YoungDiagram;

/// Shape of the insertion tableau of `word` under RSK row insertion.
///
/// Each letter bumps the leftmost entry strictly greater than it from the
/// current row into the next one. Empty words give the empty diagram.
pub fn rsk_shape(word: &[u32]) -> YoungDiagram {
    let mut tableau: Vec<Vec<u32>> = Vec::new();
    for &letter in word {
        let mut x = letter;
        let mut row = 0;
        loop {
            if row == tableau.len() {
                tableau.push(vec![x]);
                break;
            }
            let r = &mut tableau[row];
            let pos = r.partition_point(|&y| y <= x);
            if pos == r.len() {
                r.push(x);
                break;
            }
            x = std::mem::replace(&mut r[pos], x);
            row += 1;
        }
    }
    let rows: Vec<u32> = tableau.iter().map(|r| r.len() as u32).collect();
    YoungDiagram::from_rows_unchecked(rows, word.len() as u32)
}

/// The RNG used by every seeded sampler in this crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws a diagram of `n` boxes with probability `D² / n!`.
pub fn sample_plancherel(n: u32, seed: u64) -> YoungDiagram {
    sample_plancherel_with(&mut seeded_rng(seed), n)
}

/// Draws a diagram of `n` boxes with probability `m·D / d^n`.
pub fn sample_schur_weyl(n: u32, colors: u32, seed: u64) -> YoungDiagram {
    sample_schur_weyl_with(&mut seeded_rng(seed), n, colors)
}

pub fn sample_plancherel_with<R: Rng + ?Sized>(rng: &mut R, n: u32) -> YoungDiagram {
    let mut perm: Vec<u32> = (1..=n).collect();
    perm.shuffle(rng);
    rsk_shape(&perm)
}

pub fn sample_schur_weyl_with<R: Rng + ?Sized>(rng: &mut R, n: u32, colors: u32) -> YoungDiagram {
    assert!(colors >= 1, "need at least one color");
    let word: Vec<u32> = (0..n).map(|_| rng.random_range(1..=colors)).collect();
    rsk_shape(&word)
}
