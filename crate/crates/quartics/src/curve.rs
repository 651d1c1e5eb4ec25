//! Short Weierstrass curves `Y² = X³ + AX + B` over ℚ with the exact
//! chord–tangent group law.
//!
//! Points are affine rational pairs or the point at infinity, and every
//! operation is exact. Torsion is decided by the multiples ladder: a rational
//! torsion point has order at most 12, so `2P..12P` settle the question
//! unconditionally. A point with a non-integral coordinate is torsion-free
//! outright and skips the ladder.

use crate::arith::{parse_rat, Int, Rat};
use crate::Error;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    a: Int,
    b: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Rat, y: Rat },
}

impl CurvePoint {
    pub fn affine(x: Rat, y: Rat) -> Self {
        CurvePoint::Affine { x, y }
    }

    /// Builds an affine point from `"n"` / `"n/d"` coordinate literals.
    pub fn parse(x: &str, y: &str) -> Self {
        Self::affine(parse_rat(x), parse_rat(y))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn xy(&self) -> Option<(&Rat, &Rat)> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "infinity"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y^2 = X^3 + ({})X + ({})", self.a, self.b)
    }
}

impl Curve {
    /// Rejects singular coefficient pairs.
    pub fn new(a: Int, b: Int) -> Result<Self, Error> {
        let c = Curve { a, b };
        if c.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    pub fn a(&self) -> &Int {
        &self.a
    }

    pub fn b(&self) -> &Int {
        &self.b
    }

    /// `−16(4A³ + 27B²)`
    pub fn discriminant(&self) -> Int {
        let four_a3 = Int::from(4) * &self.a * &self.a * &self.a;
        let twenty_seven_b2 = Int::from(27) * &self.b * &self.b;
        Int::from(-16) * (four_a3 + twenty_seven_b2)
    }

    /// Exact membership test; infinity is always on the curve.
    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let rhs = x * x * x
                    + Rat::from_integer(self.a.clone()) * x
                    + Rat::from_integer(self.b.clone());
                y * y == rhs
            }
        }
    }

    pub fn negate(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::affine(x.clone(), -y),
        }
    }

    /// Chord–tangent addition. Both inputs must lie on the curve.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint, Error> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::InputOffCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    pub fn double(&self, p: &CurvePoint) -> Result<CurvePoint, Error> {
        self.add(p, p)
    }

    pub(crate) fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let ((x1, y1), (x2, y2)) = match (p.xy(), q.xy()) {
            (None, _) => return q.clone(),
            (_, None) => return p.clone(),
            (Some(a), Some(b)) => (a, b),
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                // vertical chord, including the tangent at y = 0
                return CurvePoint::Infinity;
            }
            let three = Rat::from_integer(Int::from(3));
            let two = Rat::from_integer(Int::from(2));
            (three * x1 * x1 + Rat::from_integer(self.a.clone())) / (two * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &slope * &slope - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        CurvePoint::affine(x3, y3)
    }

    /// `n`-fold sum by double-and-add; `n` must be positive.
    pub fn scalar_mul(&self, n: u64, p: &CurvePoint) -> Result<CurvePoint, Error> {
        assert!(n >= 1, "scalar_mul: n must be positive");
        if !self.contains(p) {
            return Err(Error::InputOffCurve);
        }
        let mut acc = CurvePoint::Infinity;
        for i in (0..64).rev() {
            if !acc.is_infinity() {
                acc = self.add_unchecked(&acc, &acc);
            }
            if (n >> i) & 1 == 1 {
                acc = self.add_unchecked(&acc, p);
            }
        }
        Ok(acc)
    }

    /// Certifies that an affine point on the curve has infinite order.
    ///
    /// Returns `false` exactly when some multiple `nP`, `n ≤ 12`, is the
    /// point at infinity.
    pub fn is_infinite_order(&self, p: &CurvePoint) -> Result<bool, Error> {
        let (x, y) = p.xy().ok_or(Error::PointAtInfinity)?;
        if !self.contains(p) {
            return Err(Error::InputOffCurve);
        }
        if !x.is_integer() || !y.is_integer() {
            // torsion points have integral coordinates
            return Ok(true);
        }
        let mut acc = p.clone();
        for _ in 2..=12u32 {
            acc = self.add_unchecked(&acc, p);
            if acc.is_infinity() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, rat_int};

    fn curve(a: i64, b: i64) -> Curve {
        Curve::new(int(a), int(b)).unwrap()
    }

    fn pt(x: &str, y: &str) -> CurvePoint {
        CurvePoint::parse(x, y)
    }

    #[test]
    fn contains_examples() {
        assert!(curve(4, 16).contains(&pt("1/4", "-33/8")));
        assert!(curve(4, 16).contains(&CurvePoint::Infinity));
        // 34³ + 900·34 + 54000 = 123904 = 352²
        assert_eq!(int(352) * int(352), int(34 * 34 * 34 + 900 * 34 + 54000));
        assert!(curve(900, 54000).contains(&pt("34", "352")));
        assert!(!curve(900, 54000).contains(&pt("34", "353")));
    }

    #[test]
    fn singular_coefficients_rejected() {
        assert_eq!(
            Curve::new(int(-3), int(2)).map(|_| ()),
            Err(Error::SingularCurve)
        );
        assert_eq!(
            Curve::new(int(0), int(0)).map(|_| ()),
            Err(Error::SingularCurve)
        );
    }

    #[test]
    fn identity_and_inverse() {
        let c = curve(144, 3456);
        let p = pt("4", "-64");
        assert_eq!(c.add(&p, &CurvePoint::Infinity).unwrap(), p);
        assert_eq!(c.add(&CurvePoint::Infinity, &p).unwrap(), p);
        assert_eq!(c.add(&p, &c.negate(&p)).unwrap(), CurvePoint::Infinity);
    }

    #[test]
    fn tangent_doubling() {
        // slope (3·144 − 36)/72 = 11/2; x₃ = 121/4 − 24 = 25/4;
        // y₃ = (11/2)(12 − 25/4) − 36 = −35/8
        let c = curve(-36, 0);
        let p = pt("12", "36");
        let d = c.double(&p).unwrap();
        assert_eq!(d, CurvePoint::affine(rat(25, 4), rat(-35, 8)));
        assert!(c.contains(&d));
    }

    #[test]
    fn off_curve_inputs_rejected() {
        let c = curve(-36, 0);
        let bogus = pt("5", "5");
        assert_eq!(c.add(&bogus, &bogus), Err(Error::InputOffCurve));
        assert_eq!(c.scalar_mul(2, &bogus), Err(Error::InputOffCurve));
        assert_eq!(c.is_infinite_order(&bogus), Err(Error::InputOffCurve));
    }

    #[test]
    fn scalar_mul_ladder() {
        let c = curve(-36, 0);
        let p = pt("12", "36");
        assert_eq!(c.scalar_mul(1, &p).unwrap(), p);
        assert_eq!(c.scalar_mul(2, &p).unwrap(), c.double(&p).unwrap());

        let k7 = curve(144, 3456);
        let seed = pt("4", "-64");
        let four = k7.scalar_mul(4, &seed).unwrap();
        let dd = k7.double(&k7.double(&seed).unwrap()).unwrap();
        assert_eq!(four, dd);
    }

    #[test]
    fn scalar_mul_additive() {
        let c = curve(144, 3456);
        let p = pt("4", "-64");
        for m in 1..=5u64 {
            for n in 1..=5u64 {
                let lhs = c.scalar_mul(m + n, &p).unwrap();
                let rhs = c
                    .add(&c.scalar_mul(m, &p).unwrap(), &c.scalar_mul(n, &p).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn torsion_ladder() {
        assert!(curve(4, 16).is_infinite_order(&pt("1/4", "-33/8")).unwrap());
        // y = 0 is 2-torsion
        assert!(!curve(-36, 0).is_infinite_order(&pt("6", "0")).unwrap());
        assert!(curve(228484, 218430704)
            .is_infinite_order(&pt("580", "23368"))
            .unwrap());
        assert_eq!(
            curve(-36, 0).is_infinite_order(&CurvePoint::Infinity),
            Err(Error::PointAtInfinity)
        );
    }

    #[test]
    fn full_two_torsion_detected() {
        // X(X² − 36) has 2-torsion at X = 0, ±6
        let c = curve(-36, 0);
        for x in [0i64, 6, -6] {
            let p = CurvePoint::affine(rat_int(x), rat_int(0));
            assert!(c.contains(&p));
            assert!(!c.is_infinite_order(&p).unwrap());
        }
    }
}
