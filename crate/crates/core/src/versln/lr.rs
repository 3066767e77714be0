//! Littlewood–Richardson coefficients by enumerating LR tableaux.
//!
//! `c^ν_{λμ}` counts semistandard fillings of `ν/λ` with content `μ` whose
//! reverse reading word (rows top to bottom, each read right to left) is a
//! lattice word. The enumeration places all `1`s, then all `2`s, …, each
//! letter as a horizontal strip, pruning on the lattice condition as soon as
//! a letter is placed.

use std::collections::BTreeMap;

/// Expansion of `s_λ · s_μ`, restricted to partitions with at most
/// `max_rows` rows. Partitions are given without trailing zeros.
pub fn lr_product(lambda: &[u32], mu: &[u32], max_rows: usize) -> BTreeMap<Vec<u32>, u64> {
    let mut out = BTreeMap::new();
    if lambda.len() > max_rows || mu.len() > max_rows {
        return out;
    }
    let mut shape = vec![0u32; max_rows];
    shape[..lambda.len()].copy_from_slice(lambda);
    // counts[r][i] = number of letter i+1 in row r
    let mut counts = vec![vec![0u32; mu.len()]; max_rows];
    place_letter(0, mu, &mut shape, &mut counts, &mut out);
    out
}

/// The single coefficient `c^ν_{λμ}`.
pub fn lr_coefficient(lambda: &[u32], mu: &[u32], nu: &[u32]) -> u64 {
    let rows = nu.len().max(lambda.len()).max(mu.len());
    let key: Vec<u32> = nu.to_vec();
    lr_product(lambda, mu, rows).get(&key).copied().unwrap_or(0)
}

fn place_letter(
    letter: usize,
    mu: &[u32],
    shape: &mut Vec<u32>,
    counts: &mut Vec<Vec<u32>>,
    out: &mut BTreeMap<Vec<u32>, u64>,
) {
    if letter == mu.len() {
        let mut key = shape.clone();
        while key.last() == Some(&0) {
            key.pop();
        }
        *out.entry(key).or_insert(0) += 1;
        return;
    }
    let old = shape.clone();
    strip(letter, 0, mu[letter], mu, &old, shape, counts, 0, 0, out);
}

#[allow(clippy::too_many_arguments)]
fn strip(
    letter: usize,
    row: usize,
    remaining: u32,
    mu: &[u32],
    old: &[u32],
    shape: &mut Vec<u32>,
    counts: &mut Vec<Vec<u32>>,
    // running totals of `letter` and `letter - 1` in rows strictly above `row`
    seen_cur: u32,
    seen_prev: u32,
    out: &mut BTreeMap<Vec<u32>, u64>,
) {
    if remaining == 0 {
        place_letter(letter + 1, mu, shape, counts, out);
        return;
    }
    if row == shape.len() {
        return;
    }
    let cap = if row == 0 { remaining } else { (old[row - 1] - old[row]).min(remaining) };
    for add in (0..=cap).rev() {
        // Reading row `row` right to left meets this row's copies of
        // `letter` before its copies of `letter - 1`.
        if letter > 0 && seen_cur + add > seen_prev {
            continue;
        }
        shape[row] = old[row] + add;
        counts[row][letter] = add;
        let prev_here = if letter > 0 { counts[row][letter - 1] } else { 0 };
        strip(
            letter,
            row + 1,
            remaining - add,
            mu,
            old,
            shape,
            counts,
            seen_cur + add,
            seen_prev + prev_here,
            out,
        );
        counts[row][letter] = 0;
        shape[row] = old[row];
    }
}
