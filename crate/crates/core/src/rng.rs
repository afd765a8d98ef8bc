//! Deterministic random streams for reproducible trials.
//!
//! The stream contract is part of this tool's external interface: fixtures
//! and witnesses must be reproducible from a seed alone, in any
//! implementation, in any language. That is why the generator is pinned to
//! two published reference algorithms rather than to a library type whose
//! stream could change between versions:
//!
//! * state initialization: four consecutive outputs of **splitmix64**
//!   (Steele-Lea-Flood mixing constants) applied to the user seed;
//! * stream: **xoshiro256\*\*** (Blackman-Vigna), `rotl(s1 * 5, 7) * 9`.
//!
//! Draw mapping, also pinned:
//!
//! * integer in `[-r, r]`: `next_u64() % (2r + 1) - r`;
//! * real in `[-1, 1)`: `2 * ((next_u64() >> 11) * 2^-53) - 1`.
//!
//! Matrices consume the stream in lexicographic `(i, j, k)` order, real part
//! before imaginary part; element vectors consume it in basis order, same
//! component order. The stream is consumed continuously across the trials
//! of a run — trial `t+1` starts where trial `t` stopped.

use crate::cubic::Matrix3;
use crate::error::{Error, Result};
use crate::liealg::{Element, StructureAlgebra};
use crate::scalar::{ExactScalar, FloatScalar, Scalar};
use crate::supercubic::{SuperCubic, SuperStructure};

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The xoshiro256** stream, seeded via splitmix64.
#[derive(Debug, Clone)]
pub struct Stream {
    s: [u64; 4],
}

impl Stream {
    pub fn new(seed: u64) -> Self {
        let mut sm = seed;
        let s = [
            splitmix64(&mut sm),
            splitmix64(&mut sm),
            splitmix64(&mut sm),
            splitmix64(&mut sm),
        ];
        Stream { s }
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.s;
        let result = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        result
    }

    /// Integer uniform on `[-r, r]` by residue mapping.
    pub fn next_int(&mut self, r: i64) -> i64 {
        debug_assert!(r >= 0);
        (self.next_u64() % (2 * r as u64 + 1)) as i64 - r
    }

    /// Real uniform on `[-1, 1)` from the top 53 bits.
    pub fn next_unit(&mut self) -> f64 {
        let u = (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0);
        2.0 * u - 1.0
    }
}

/// One scalar draw, in the regime's pinned distribution. `range` is the
/// integer bound for the exact regime; the float regime ignores it and
/// draws from `[-1, 1)`.
pub trait DrawScalar: Scalar {
    fn draw(stream: &mut Stream, range: i64) -> Self;
}

impl DrawScalar for ExactScalar {
    fn draw(stream: &mut Stream, range: i64) -> Self {
        let re = stream.next_int(range);
        let im = stream.next_int(range);
        ExactScalar::new(re, im)
    }
}

impl DrawScalar for FloatScalar {
    fn draw(stream: &mut Stream, _range: i64) -> Self {
        let re = stream.next_unit();
        let im = stream.next_unit();
        FloatScalar::new(re, im)
    }
}

/// Random cubic matrix of order `n`, entries drawn in lexicographic
/// `(i, j, k)` order.
pub fn gen_random_cubic<S: DrawScalar>(n: usize, stream: &mut Stream, range: i64) -> Result<Matrix3<S>> {
    if n == 0 {
        return Err(Error::Shape("random cubic matrix needs order >= 1".into()));
    }
    let entries: Vec<S> = (0..n * n * n).map(|_| S::draw(stream, range)).collect();
    Matrix3::from_vec(n, n, n, entries)
}

/// Random cubic supermatrix: draw a full random cubic matrix (consuming the
/// stream exactly like [`gen_random_cubic`]), then zero out the blocks of
/// the opposite parity when a homogeneous degree is requested.
///
/// `want_odd = None` keeps the full draw (generically inhomogeneous);
/// `Some(false)` keeps only the even blocks, `Some(true)` only the odd ones.
pub fn gen_random_super<S: DrawScalar>(
    ss: SuperStructure,
    stream: &mut Stream,
    range: i64,
    want_odd: Option<bool>,
) -> Result<SuperCubic<S>> {
    let n = ss.order();
    let mut mat = gen_random_cubic::<S>(n, stream, range)?;
    if let Some(odd) = want_odd {
        let keep = u8::from(odd);
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if (ss.parity(i) + ss.parity(k)) % 2 != keep {
                        mat.set(i, j, k, S::zero());
                    }
                }
            }
        }
    }
    SuperCubic::attach_super(mat, ss)
}

/// Random algebra element, coefficients drawn in basis order.
pub fn gen_random_element<S: DrawScalar>(
    g: &StructureAlgebra<S>,
    stream: &mut Stream,
    range: i64,
) -> Element<S> {
    let coeffs: Vec<S> = (0..g.dim()).map(|_| S::draw(stream, range)).collect();
    Element::from_coeffs(coeffs)
}

/// Random homogeneous element: draw a full coefficient vector (same stream
/// consumption as [`gen_random_element`]), then zero the coefficients on
/// basis vectors of the opposite parity.
pub fn gen_random_homogeneous_element<S: DrawScalar>(
    g: &StructureAlgebra<S>,
    stream: &mut Stream,
    range: i64,
    odd: bool,
) -> Element<S> {
    let keep = u8::from(odd);
    let coeffs: Vec<S> = (1..=g.dim())
        .map(|a| {
            let v = S::draw(stream, range);
            if g.parity_of_basis(a) == keep {
                v
            } else {
                S::zero()
            }
        })
        .collect();
    Element::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Frozen reference outputs, computed independently from the published
    // algorithm descriptions. These pin the portability contract: any
    // reimplementation from the documented algorithm names must reproduce
    // these exact values.

    #[test]
    fn splitmix64_matches_the_published_vector() {
        let mut s = 0u64;
        assert_eq!(splitmix64(&mut s), 0xE220_A839_7B1D_CDAF);
        assert_eq!(splitmix64(&mut s), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(splitmix64(&mut s), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn stream_seed_42_matches_the_frozen_reference() {
        let mut g = Stream::new(42);
        let expect: [u64; 8] = [
            0x1578_0B2E_0C2E_C716,
            0x6104_D986_6D11_3A7E,
            0xAE17_5332_39E4_99A1,
            0xECB8_AD47_03B3_60A1,
            0xFDE6_DC7F_E2EC_5E64,
            0xC50D_A531_0179_5238,
            0xB821_5485_5A65_DDB2,
            0xD99A_2743_EBE6_0087,
        ];
        for e in expect {
            assert_eq!(g.next_u64(), e);
        }
    }

    #[test]
    fn stream_seed_7_matches_the_frozen_reference() {
        let mut g = Stream::new(7);
        assert_eq!(g.next_u64(), 0xB358_FAF7_4EF9_765A);
        assert_eq!(g.next_u64(), 0x475C_3D96_4F48_2CD2);
    }

    #[test]
    fn integer_draws_match_the_frozen_reference() {
        let mut g = Stream::new(42);
        let got: Vec<i64> = (0..12).map(|_| g.next_int(3)).collect();
        assert_eq!(got, vec![-1, -2, 2, 1, 1, -2, -1, -3, 2, 2, 3, 3]);
    }

    #[test]
    fn unit_draws_match_the_frozen_reference() {
        let mut g = Stream::new(42);
        let got: Vec<f64> = (0..4).map(|_| g.next_unit()).collect();
        let expect = [
            -0.83227405788023567,
            -0.24203949867466279,
            0.36008682205627873,
            0.84938589065077519,
        ];
        for (a, b) in got.iter().zip(expect.iter()) {
            assert_eq!(a, b, "unit draws must be bit-exact");
        }
    }

    #[test]
    fn random_cubic_consumes_lexicographically_re_then_im() {
        let mut g = Stream::new(42);
        let m = gen_random_cubic::<ExactScalar>(2, &mut g, 3).unwrap();
        // Same draws as `integer_draws_match_the_frozen_reference`, paired
        // (re, im) in (i, j, k) lexicographic order.
        assert_eq!(*m.get(1, 1, 1), ExactScalar::new(-1, -2));
        assert_eq!(*m.get(1, 1, 2), ExactScalar::new(2, 1));
        assert_eq!(*m.get(1, 2, 1), ExactScalar::new(1, -2));
        assert_eq!(*m.get(1, 2, 2), ExactScalar::new(-1, -3));
        assert_eq!(*m.get(2, 1, 1), ExactScalar::new(2, 2));
        assert_eq!(*m.get(2, 1, 2), ExactScalar::new(3, 3));
        assert_eq!(*m.get(2, 2, 1), ExactScalar::new(-1, 2));
        assert_eq!(*m.get(2, 2, 2), ExactScalar::new(2, -1));
    }

    #[test]
    fn distinct_seeds_give_distinct_matrices() {
        let mut g1 = Stream::new(42);
        let mut g2 = Stream::new(43);
        let a = gen_random_cubic::<ExactScalar>(3, &mut g1, 3).unwrap();
        let b = gen_random_cubic::<ExactScalar>(3, &mut g2, 3).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn equal_seeds_reproduce_the_matrix() {
        let mut g1 = Stream::new(9001);
        let mut g2 = Stream::new(9001);
        let a = gen_random_cubic::<FloatScalar>(3, &mut g1, 0).unwrap();
        let b = gen_random_cubic::<FloatScalar>(3, &mut g2, 0).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_order_is_a_shape_error() {
        let mut g = Stream::new(1);
        assert!(matches!(
            gen_random_cubic::<ExactScalar>(0, &mut g, 3),
            Err(Error::Shape(_))
        ));
    }
}
