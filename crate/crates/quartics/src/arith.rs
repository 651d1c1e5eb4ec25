//! Arbitrary-precision integers and rationals, plus the number-theoretic
//! helpers everything else consumes.
//!
//! [`Int`] and [`Rat`] alias [`num_bigint::BigInt`] and
//! [`num_rational::BigRational`]. Rationals reduce eagerly on construction
//! and keep a positive denominator, so equality is structural throughout the
//! crate. All functions here are pure; values are immutable and freely
//! shareable across threads.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

/// Parses a decimal integer literal; reserved for embedded catalog data.
pub fn parse_int(s: &str) -> Int {
    s.parse()
        .unwrap_or_else(|_| panic!("bad integer literal: {s}"))
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rat(s: &str) -> Rat {
    s.parse()
        .unwrap_or_else(|_| panic!("bad rational literal: {s}"))
}

/// Decimal digit count of `|n|`; zero counts one digit.
pub fn decimal_digits(n: &Int) -> usize {
    if n.is_zero() {
        1
    } else {
        n.abs().to_str_radix(10).len()
    }
}

/// Nonnegative gcd of every entry; `gcd_all(&[0, n]) == |n|`.
/// Panics on an empty slice.
pub fn gcd_all(values: &[Int]) -> Int {
    assert!(!values.is_empty(), "gcd_all: empty input");
    values.iter().fold(Int::zero(), |acc, v| acc.gcd(v))
}

pub fn lcm_all(values: &[Int]) -> Int {
    assert!(!values.is_empty(), "lcm_all: empty input");
    values.iter().fold(Int::one(), |acc, v| acc.lcm(v))
}

/// Exact square root: `Some(m)` iff `m·m == n`. Panics when `n < 0`.
pub fn isqrt_exact(n: &Int) -> Option<Int> {
    assert!(!n.is_negative(), "isqrt_exact: negative input {n}");
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a rational; `None` for negatives and non-squares.
pub fn rat_sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = isqrt_exact(r.numer())?;
    let d = isqrt_exact(r.denom())?;
    Some(Rat::new(n, d))
}

const TRIAL_DIVISION_BOUND: u32 = 1_000_000;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_DIVISION_BOUND as usize;
        let mut sieve = vec![true; n + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut p = 2usize;
        while p * p <= n {
            if sieve[p] {
                let mut q = p * p;
                while q <= n {
                    sieve[q] = false;
                    q += p;
                }
            }
            p += 1;
        }
        (2..=n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
    })
}

/// Trial division by primes below 10⁶. Returns the factor table and the
/// unfactored cofactor (1 when the input splits completely). A leftover
/// cofactor below 10¹² is necessarily prime and is folded into the table.
pub(crate) fn factor_smooth(n: &Int) -> (Vec<(u64, u32)>, Int) {
    assert!(n.is_positive(), "factor_smooth: input must be positive");
    let mut rest = n.clone();
    let mut out = Vec::new();
    for &p in small_primes() {
        let pb = Int::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if r.is_zero() {
                rest = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            out.push((u64::from(p), e));
        }
    }
    if !rest.is_one() {
        if let Some(r64) = rest.to_u64() {
            if u128::from(r64) < u128::from(TRIAL_DIVISION_BOUND).pow(2) {
                out.push((r64, 1));
                rest = Int::one();
            }
        }
    }
    (out, rest)
}

pub(crate) fn valuation(n: &Int, p: u64) -> u32 {
    let pb = Int::from(p);
    let mut rest = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = rest.div_rem(&pb);
        if r.is_zero() {
            rest = q;
            v += 1;
        } else {
            break;
        }
    }
    v
}

/// Splits `n > 0` into `(c, m)` with `n == c·m²`, `c` squarefree and `m > 0`.
///
/// Factoring is trial division below 10⁶; the cofactor is classified by an
/// exact-square test, which covers every value this domain produces.
pub fn squarefree_split(n: &Int) -> (Int, Int) {
    assert!(
        n.is_positive(),
        "squarefree_split: input must be positive, got {n}"
    );
    let (factors, cofactor) = factor_smooth(n);
    let mut c = Int::one();
    let mut m = Int::one();
    for (p, e) in factors {
        let pb = Int::from(p);
        if e % 2 == 1 {
            c *= &pb;
        }
        m *= pb.pow(e / 2);
    }
    if !cofactor.is_one() {
        match isqrt_exact(&cofactor) {
            Some(s) => m *= s,
            None => c *= cofactor,
        }
    }
    (c, m)
}

/// Largest `λ ≥ 1` with `λ⁴ | a` and `λ⁶ | b`. Divisibility against a zero
/// coefficient is vacuous; panics when both are zero.
///
/// `λ` is assembled per prime of the first nonzero argument, so a coefficient
/// would need the fourth power of a prime above 10⁶ (i.e. exceed 10²⁴) to
/// escape the search. Nothing in this domain comes close.
pub fn lambda_reduce(a: &Int, b: &Int) -> Int {
    assert!(
        !(a.is_zero() && b.is_zero()),
        "lambda_reduce: (0, 0) has no reducer"
    );
    let base = if a.is_zero() { b } else { a };
    let (factors, _) = factor_smooth(&base.abs());
    let mut lambda = Int::one();
    for (p, _) in factors {
        let cap_a = if a.is_zero() {
            u32::MAX
        } else {
            valuation(a, p) / 4
        };
        let cap_b = if b.is_zero() {
            u32::MAX
        } else {
            valuation(b, p) / 6
        };
        let e = cap_a.min(cap_b);
        if e > 0 {
            lambda *= Int::from(p).pow(e);
        }
    }
    lambda
}

/// Clears denominators jointly and divides out the collective gcd. Signs are
/// kept; an all-zero input comes back unchanged.
pub fn primitive_from_rationals(values: &[Rat]) -> Vec<Int> {
    if values.is_empty() {
        return Vec::new();
    }
    let dens: Vec<Int> = values.iter().map(|v| v.denom().clone()).collect();
    let l = lcm_all(&dens);
    let ints: Vec<Int> = values
        .iter()
        .map(|v| v.numer() * (&l / v.denom()))
        .collect();
    let g = gcd_all(&ints);
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}
