//! Exact rationals and seeded sampling helpers.

use alloc::format;
use alloc::string::String;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// The RNG used everywhere randomness is needed. Always caller-seeded.
pub type Rng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q2(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// `p/q`, or `p` when the denominator is 1.
pub fn to_string(x: &Q) -> String {
    format!("{x}")
}

/// Parse `p/q` or a bare integer `p`.
pub fn parse(s: &str) -> Result<Q> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(n, d))
}

/// Uniform integer in `[-r, r]`.
pub fn rand_int(rng: &mut Rng, r: i64) -> i64 {
    let span = (2 * r + 1) as u64;
    (rng.next_u64() % span) as i64 - r
}

/// Uniform integer in `[0, n)`.
pub fn rand_below(rng: &mut Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// Small random rational: numerator in `[-r, r]`, denominator in `{1, 2, 3}`.
pub fn rand_q(rng: &mut Rng, r: i64) -> Q {
    let n = rand_int(rng, r);
    let d = 1 + rand_below(rng, 3) as i64;
    q2(n, d)
}

pub fn sign(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
