//! Closed-form counts of leaves and of Ruspini-type subforests.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest `n` for which [`count_weak_ruspini`] is evaluated. The result has
/// `L_n - 1` bits, and `L_9` is already above seven million.
pub const MAX_WEAK_RUSPINI_N: usize = 8;

/// Stirling numbers of the second kind `S(n, k)` for `k = 0..=n`.
pub fn stirling2_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            let stay = if k < m { &row[k] * BigUint::from(k) } else { BigUint::zero() };
            next[k] = stay + &row[k - 1];
        }
        row = next;
    }
    row
}

/// Ordered Bell (Fubini) number: weak orderings of `n` elements.
pub fn ordered_bell(n: usize) -> BigUint {
    let mut fact = BigUint::one();
    let mut total = BigUint::zero();
    for (k, s) in stirling2_row(n).iter().enumerate() {
        if k > 0 {
            fact *= BigUint::from(k);
        }
        total += s * &fact;
    }
    total
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroCount);
    }
    Ok(())
}

/// Number of leaves of the forest over `n` variables.
pub fn count_leaves(n: usize) -> Result<BigUint> {
    check_n(n)?;
    Ok(ordered_bell(n) * BigUint::from(2u8))
}

/// Number of Ruspini subforests: `2^(L_n - 1) - 1`.
pub fn count_weak_ruspini(n: usize) -> Result<BigUint> {
    check_n(n)?;
    if n > MAX_WEAK_RUSPINI_N {
        return Err(Error::CountTooLarge { n, max: MAX_WEAK_RUSPINI_N });
    }
    let leaves = count_leaves(n)?;
    let exp: u64 = (leaves - 1u8).try_into().expect("leaf count fits in u64");
    Ok((BigUint::one() << exp) - 1u8)
}

/// Number of Ruspini subforests of the 2-overlap forest:
/// `2^((3n^2 - n) / 2) - 1`.
pub fn count_2overlap_weak_ruspini(n: usize) -> Result<BigUint> {
    check_n(n)?;
    let exp = (3 * n * n - n) / 2;
    Ok((BigUint::one() << exp) - 1u8)
}
