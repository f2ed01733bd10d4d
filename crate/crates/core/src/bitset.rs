//! Square sets as `u128` bitsets over a board's canonical square order.

/// Maximum number of squares a board may have for face-level work.
pub const MAX_SQUARES: u64 = 128;

#[inline]
pub fn bit(i: usize) -> u128 {
    1u128 << i
}

/// Iterate set bit positions in ascending order.
#[inline]
pub fn iter(mut bits: u128) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        }
    })
}

/// Position of the highest set bit; `None` for the empty set.
#[inline]
pub fn max_bit(bits: u128) -> Option<usize> {
    if bits == 0 {
        None
    } else {
        Some(127 - bits.leading_zeros() as usize)
    }
}
