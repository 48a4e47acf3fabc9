//! Deterministic input builders shared by the benchmarks.

use num_bigint::BigInt;
use u21topo::LaurentPoly;

/// A dense polynomial with `len` coefficients drawn from a fixed linear
/// congruential generator, so benchmark inputs never depend on an external
/// randomness source.
pub fn dense_poly(seed: u64, len: usize) -> LaurentPoly {
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    let coeffs: Vec<BigInt> = (0..len)
        .map(|_| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let c = (state >> 33) as i64 - (1 << 30);
            BigInt::from(if c == 0 { 1 } else { c })
        })
        .collect();
    LaurentPoly::from_coeffs(0, coeffs)
}
