//! Dense univariate polynomials over the rationals, and the square-form
//! extraction that powers every solution family.

use crate::arith::{factor_smooth, gcd_all, isqrt_exact, lcm_all, Int, Rat};
use crate::Error;
use num_traits::{One, Pow, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients indexed by degree, trailing zeros trimmed. The empty list is
/// the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Low-to-high integer coefficients: `&[4, 0, 3]` is `3x² + 4`.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(Int::from(c)))
                .collect(),
        )
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::from_int_coeffs(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::from_int_coeffs(&[1]);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Horner evaluation, exact.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn all_integer(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Splits a positive integer as `c·u²` following the catalog display
/// convention: even prime exponents move wholly into `u`, an odd exponent of
/// at least three keeps its cube in `c`, a bare exponent stays in `c`.
fn display_split(n: &Int) -> (Int, Int) {
    let (factors, cofactor) = factor_smooth(n);
    let mut c = Int::one();
    let mut u = Int::one();
    for (p, e) in factors {
        let pb = Int::from(p);
        let ce = if e % 2 == 0 {
            0
        } else if e >= 3 {
            3
        } else {
            1
        };
        c *= pb.clone().pow(ce);
        u *= pb.pow((e - ce) / 2);
    }
    if !cofactor.is_one() {
        match isqrt_exact(&cofactor) {
            Some(s) => u *= s,
            None => c *= cofactor,
        }
    }
    (c, u)
}

/// Recovers `p = content · q²` exactly, or reports [`Error::NotASquareForm`].
///
/// The monic square root is found by matching coefficients from the top
/// degree downward and verifying the remainder; the pair is then normalized
/// so `q` has a positive leading coefficient and integer coefficients
/// whenever `p` itself is integral.
pub fn extract_square(p: &UniPoly) -> Result<(Rat, UniPoly), Error> {
    let Some(deg) = p.degree() else {
        return Err(Error::NotASquareForm);
    };
    if deg % 2 != 0 {
        return Err(Error::NotASquareForm);
    }
    let lead = p.leading().expect("nonzero").clone();
    if !lead.is_positive() {
        return Err(Error::NotASquareForm);
    }
    let m = deg / 2;

    // monic candidate root of p/lead, top degree down
    let phat = p.scale(&lead.clone().recip());
    let mut q = vec![Rat::zero(); m + 1];
    q[m] = Rat::one();
    for j in 1..=m {
        let mut acc = Rat::zero();
        for i in (m - j + 1)..m {
            let k = 2 * m - j - i;
            if k <= m {
                acc += &q[i] * &q[k];
            }
        }
        q[m - j] = (phat.coeff(2 * m - j) - acc) / Rat::from_integer(Int::from(2));
    }
    let qhat = UniPoly::from_coeffs(q);
    if (&qhat * &qhat) != phat {
        return Err(Error::NotASquareForm);
    }

    // primitive integer root q0 with q = (g/t)·q0
    let dens: Vec<Int> = qhat.coeffs.iter().map(|c| c.denom().clone()).collect();
    let t = lcm_all(&dens);
    let q_int = qhat.scale(&Rat::from_integer(t.clone()));
    let nums: Vec<Int> = q_int.coeffs.iter().map(|c| c.numer().clone()).collect();
    let g = gcd_all(&nums);
    let q0 = q_int.scale(&Rat::new(Int::one(), g.clone()));
    debug_assert!(q0.all_integer());

    // p = c0·q0² with c0 = lead·(g/t)²
    let c0 = &lead * Rat::new(&g * &g, &t * &t);
    debug_assert!(c0.is_positive());
    let (cn, un) = display_split(c0.numer());
    let (cd, ud) = display_split(c0.denom());
    let content = Rat::new(cn, cd);
    let q_final = q0.scale(&Rat::new(un, ud));
    Ok((content, q_final))
}
