//! k-subsets as bit masks, with colexicographic ranking and unranking.
//!
//! A subset of `0..n` is a `u128` mask, which caps the base-graph order at
//! [`MAX_SUBSET_BASE`]. Ranks are dense indices `0..C(n,k)` in colex order:
//! for a subset `c_0 < c_1 < ... < c_{k-1}` the rank is `sum C(c_i, i+1)`.

use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Largest base-graph order whose subsets fit in a `u128` mask.
pub const MAX_SUBSET_BASE: usize = 128;

/// `C(n, k)` for all `n <= MAX_SUBSET_BASE`, built once. Every entry fits in
/// a `u128` exactly (the largest, `C(128, 64)`, is about 2.4e37).
fn binomial_table() -> &'static Vec<Vec<u128>> {
    static TABLE: OnceLock<Vec<Vec<u128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let size = MAX_SUBSET_BASE + 1;
        let mut t = vec![vec![0u128; size]; size];
        for n in 0..size {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1]
                    .checked_add(t[n - 1][k])
                    .expect("binomial overflow inside the supported range");
            }
        }
        t
    })
}

/// `C(n, k)`; zero when `k > n`. Errors when `n` exceeds the mask width.
pub fn binomial(n: usize, k: usize) -> Result<u128> {
    if n > MAX_SUBSET_BASE {
        return Err(Error::Capacity(format!(
            "binomial base {n} exceeds MAX_SUBSET_BASE={MAX_SUBSET_BASE}"
        )));
    }
    if k > n {
        return Ok(0);
    }
    Ok(binomial_table()[n][k])
}

/// Members of `mask` in increasing order.
pub fn mask_members(mask: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rem = mask;
    while rem != 0 {
        let v = rem.trailing_zeros() as usize;
        rem &= rem - 1;
        out.push(v);
    }
    out
}

pub fn mask_from_members(members: &[usize]) -> u128 {
    members.iter().fold(0u128, |m, &v| m | (1u128 << v))
}

/// Colex rank of a k-subset given as a mask.
pub fn rank_mask(mask: u128) -> usize {
    let mut rank: u128 = 0;
    let mut i = 0usize;
    let mut rem = mask;
    let table = binomial_table();
    while rem != 0 {
        let c = rem.trailing_zeros() as usize;
        rem &= rem - 1;
        i += 1;
        rank += table[c][i];
    }
    rank as usize
}

/// Inverse of [`rank_mask`] for subsets of size `k`.
pub fn unrank_mask(rank: usize, k: usize) -> u128 {
    let table = binomial_table();
    let mut mask = 0u128;
    let mut r = rank as u128;
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= r
        let mut c = i - 1;
        while c + 1 <= MAX_SUBSET_BASE && table[c + 1][i] <= r {
            c += 1;
        }
        r -= table[c][i];
        mask |= 1u128 << c;
    }
    debug_assert_eq!(r, 0);
    mask
}

/// All k-subset masks of `0..n` in colex (= rank) order.
pub fn all_masks(n: usize, k: usize) -> Result<Vec<u128>> {
    if n > MAX_SUBSET_BASE {
        return Err(Error::Capacity(format!(
            "subset base {n} exceeds MAX_SUBSET_BASE={MAX_SUBSET_BASE}"
        )));
    }
    let count = binomial(n, k)?;
    let count = usize::try_from(count)
        .map_err(|_| Error::Capacity(format!("C({n},{k}) does not fit in usize")))?;
    let mut out = Vec::with_capacity(count);
    if k == 0 {
        out.push(0);
        return Ok(out);
    }
    if k > n {
        return Ok(out);
    }
    // colex successor: members ascending, increment the lowest member that
    // can move, reset the ones below it
    let mut members: Vec<usize> = (0..k).collect();
    loop {
        out.push(mask_from_members(&members));
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { members[i + 1] } else { n };
            if members[i] + 1 < limit {
                members[i] += 1;
                for (j, slot) in members.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        if i == k {
            break;
        }
    }
    Ok(out)
}
