//! Decision-only chromatic number by inclusion-exclusion over independent
//! sets.
//!
//! `h` is `k`-colorable iff the number of `k`-tuples of independent sets
//! covering `V` is positive:
//!
//! ```text
//! sum over S ⊆ V of (-1)^(n - |S|) * i(S)^k  >  0
//! ```
//!
//! where `i(S)` counts independent subsets of `S` (the empty set included).
//! The sum is evaluated modulo `2^61 - 1` and modulo `2^64`; the graph is
//! declared `k`-colorable when either residue is nonzero.

use super::ExactError;
use crate::graph::Adjacency;

/// Largest vertex count accepted.
pub const MAX_VERTICES: usize = 24;

const MERSENNE_61: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(MERSENNE_61)) as u64
}

fn pow_mod(mut base: u64, mut exp: usize) -> u64 {
    let mut acc = 1;
    base %= MERSENNE_61;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

/// Chromatic number of `h` (no witness). Fails with
/// [`ExactError::TooLarge`] above [`MAX_VERTICES`] vertices.
pub fn chromatic_number_ie<A: Adjacency + ?Sized>(h: &A) -> Result<usize, ExactError> {
    let n = h.vertex_count();
    if n > MAX_VERTICES {
        return Err(ExactError::TooLarge {
            vertices: n,
            limit: MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let closed: Vec<u32> = (0..n)
        .map(|v| {
            h.neighbors(v)
                .iter()
                .fold(1u32 << v, |mask, &w| mask | (1 << w))
        })
        .collect();
    let full = (1usize << n) - 1;
    let mut indep = vec![0u32; full + 1];
    indep[0] = 1;
    for s in 1..=full {
        let v = s.trailing_zeros() as usize;
        let without = s & !(1 << v);
        indep[s] = indep[without] + indep[s & !(closed[v] as usize)];
    }

    for k in 1..=n {
        let mut mod_p = 0u64;
        let mut mod_2_64 = 0u64;
        for (s, &count) in indep.iter().enumerate() {
            let count = u64::from(count);
            let term_p = pow_mod(count, k);
            let term_w = count.wrapping_pow(k as u32);
            if (n - s.count_ones() as usize).is_multiple_of(2) {
                mod_p = (mod_p + term_p) % MERSENNE_61;
                mod_2_64 = mod_2_64.wrapping_add(term_w);
            } else {
                mod_p = (mod_p + MERSENNE_61 - term_p) % MERSENNE_61;
                mod_2_64 = mod_2_64.wrapping_sub(term_w);
            }
        }
        if mod_p != 0 || mod_2_64 != 0 {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    #[test]
    fn small_graphs() {
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(chromatic_number_ie(&c5).unwrap(), 3);
        assert_eq!(chromatic_number_ie(&SimpleGraph::empty(4)).unwrap(), 1);
        assert_eq!(
            chromatic_number_ie(&SimpleGraph::empty(6).complement()).unwrap(),
            6
        );
        assert_eq!(chromatic_number_ie(&SimpleGraph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn refuses_large_inputs() {
        assert!(matches!(
            chromatic_number_ie(&SimpleGraph::empty(25)),
            Err(ExactError::TooLarge {
                vertices: 25,
                limit: 24
            })
        ));
    }
}
