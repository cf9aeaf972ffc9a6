use std::collections::HashMap;

use super::YoungDiagram;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`character`].
pub const CHARACTER_CAP: u32 = 12;

/// Irreducible character `χ_λ` evaluated on the conjugacy class with the
/// given cycle type, by the Murnaghan–Nakayama rule.
///
/// Rim hooks are removed on the beta-set (abacus) of `λ`: removing a hook
/// of length `k` moves one bead from `b` to `b - k`, with sign
/// `(-1)^(beads strictly between)`.
pub fn character(diagram: &YoungDiagram, cycle_type: &YoungDiagram) -> Result<i64> {
    if diagram.n() != cycle_type.n() {
        return Err(Error::mismatch(format!(
            "character of {diagram} (n={}) at cycle type {cycle_type} (n={})",
            diagram.n(),
            cycle_type.n()
        )));
    }
    if diagram.n() > CHARACTER_CAP {
        return Err(Error::Capacity {
            what: "Murnaghan-Nakayama character",
            requested: diagram.n() as u64,
            cap: CHARACTER_CAP as u64,
        });
    }
    let len = diagram.rows().len();
    let beta: Vec<u32> = diagram
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &r)| r + (len - 1 - i) as u32)
        .collect();
    let mut memo = HashMap::new();
    Ok(mn(beta, cycle_type.rows(), &mut memo))
}

fn mn(beta: Vec<u32>, cycles: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let key = (beta, rest.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let beta = &key.0;
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(next, rest, memo);
    }
    memo.insert(key, total);
    total
}
