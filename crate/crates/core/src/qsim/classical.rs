use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::coding::{balanced_split, CodingInstance};
use crate::error::{Error, Result};
use crate::young::seeded_rng;

use super::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClassicalMc {
    pub trials: u64,
    pub successes: u64,
    pub rate: f64,
    pub stderr: f64,
}

/// Simulates the classical scheme: boxes get the balanced coloring, the
/// channel applies a uniform permutation, and the receiver guesses uniformly
/// among the permutations that reproduce the received color sequence (the
/// maximum-likelihood decoder, since all are equally likely).
pub fn classical_channel_mc(n: u32, d: u32, trials: u64, seed: u64) -> Result<ClassicalMc> {
    if trials == 0 {
        return Err(Error::domain("trials must be >= 1"));
    }
    let instance = CodingInstance::new(n, d)?;
    let n = n as usize;
    let mut coloring = Vec::with_capacity(n);
    for (color, size) in balanced_split(&instance).into_iter().enumerate() {
        coloring.extend(std::iter::repeat_n(color, size as usize));
    }
    let colors = coloring.iter().max().map_or(0, |&c| c + 1);
    let mut rng = seeded_rng(seed);
    let mut successes = 0u64;
    for _ in 0..trials {
        let sigma = Permutation::random(n, &mut rng);
        // box b lands in slot σ(b)
        let mut received = vec![0usize; n];
        for b in 0..n {
            received[sigma.apply(b)] = coloring[b];
        }
        if decode(&coloring, &received, colors, &mut rng) == sigma {
            successes += 1;
        }
    }
    let rate = successes as f64 / trials as f64;
    let stderr = (rate * (1.0 - rate) / trials as f64).sqrt();
    Ok(ClassicalMc { trials, successes, rate, stderr })
}

/// Assigns the boxes of each color to the slots showing that color in a
/// uniformly random order.
fn decode<R: Rng + ?Sized>(coloring: &[usize], received: &[usize], colors: usize, rng: &mut R) -> Permutation {
    let mut guess = vec![0usize; coloring.len()];
    for color in 0..colors {
        let mut boxes: Vec<usize> = (0..coloring.len()).filter(|&b| coloring[b] == color).collect();
        let slots = (0..received.len()).filter(|&s| received[s] == color);
        boxes.shuffle(rng);
        for (b, s) in boxes.into_iter().zip(slots) {
            guess[b] = s;
        }
    }
    Permutation::from_images(guess).expect("color classes partition the slots")
}
