//! Cubic models `d·r² = a₃x³ + a₁x + a₀` and the exact change of variables
//! onto a short Weierstrass curve.
//!
//! Multiplying the relation by `a₃²d³` gives
//! `(a₃d²r)² = (a₃dx)³ + a₁a₃d²·(a₃dx) + a₀a₃²d³`, so with
//! `A₀ = a₁a₃d²` and `B₀ = a₀a₃²d³` the model lands on `Y² = X³ + A₀X + B₀`
//! under `X = a₃dx`, `Y = a₃d²r`. The coefficients are then reduced by the
//! largest `λ` with `λ⁴ | A₀`, `λ⁶ | B₀`, `λ² | a₃d` and `λ³ | a₃d²`; the two
//! extra conditions keep the substitution scales `sx = a₃d/λ²` and
//! `sy = a₃d²/λ³` integral, which is the form every catalog curve is stated
//! in. The unconstrained reducer lives in [`crate::arith::lambda_reduce`].

use crate::arith::{factor_smooth, valuation, Int, Rat};
use crate::curve::{Curve, CurvePoint};
use crate::poly::UniPoly;
use crate::Error;
use num_traits::{One, Pow, Signed, Zero};
use std::fmt;

/// The relation `d·r² = a₃x³ + a₁x + a₀` with `d ≠ 0`, `a₃ ≠ 0`. The
/// quadratic term is structurally absent: every model in this domain is
/// depressed, and [`CubicModel::from_cubic`] rejects attempts to smuggle one
/// in rather than completing the cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicModel {
    d: Int,
    a3: Int,
    a1: Int,
    a0: Int,
}

impl fmt::Display for CubicModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}r^2 = {}",
            self.d,
            UniPoly::from_coeffs(
                [&self.a0, &self.a1, &Int::zero(), &self.a3]
                    .iter()
                    .map(|c| Rat::from_integer((*c).clone()))
                    .collect()
            )
        )
    }
}

impl CubicModel {
    pub fn new(d: Int, a3: Int, a1: Int, a0: Int) -> Result<Self, Error> {
        if d.is_zero() {
            return Err(Error::InvalidModel("d must be nonzero".into()));
        }
        if a3.is_zero() {
            return Err(Error::InvalidModel(
                "cubic coefficient must be nonzero".into(),
            ));
        }
        Ok(CubicModel { d, a3, a1, a0 })
    }

    /// Accepts a full coefficient row `[a₃, a₂, a₁, a₀]` and rejects a
    /// nonzero quadratic term.
    pub fn from_cubic(d: Int, coeffs: [Int; 4]) -> Result<Self, Error> {
        let [a3, a2, a1, a0] = coeffs;
        if !a2.is_zero() {
            return Err(Error::InvalidModel("quadratic term must be zero".into()));
        }
        Self::new(d, a3, a1, a0)
    }

    pub fn d(&self) -> &Int {
        &self.d
    }

    pub fn a3(&self) -> &Int {
        &self.a3
    }

    pub fn a1(&self) -> &Int {
        &self.a1
    }

    pub fn a0(&self) -> &Int {
        &self.a0
    }

    /// The opposite branch `d·r² = −(a₃x³ + a₁x + a₀)`.
    pub fn negated(&self) -> CubicModel {
        CubicModel {
            d: self.d.clone(),
            a3: -&self.a3,
            a1: -&self.a1,
            a0: -&self.a0,
        }
    }

    pub fn rhs(&self) -> UniPoly {
        UniPoly::from_coeffs(
            [&self.a0, &self.a1, &Int::zero(), &self.a3]
                .iter()
                .map(|c| Rat::from_integer((*c).clone()))
                .collect(),
        )
    }

    /// Exact check of `d·r² = a₃x³ + a₁x + a₀`.
    pub fn holds(&self, x: &Rat, r: &Rat) -> bool {
        Rat::from_integer(self.d.clone()) * r * r == self.rhs().eval(x)
    }

    /// Transforms the model to its reduced curve and substitution map.
    pub fn to_weierstrass(&self) -> Result<ModelMap, Error> {
        if self.a1.is_zero() && self.a0.is_zero() {
            return Err(Error::SingularCurve);
        }
        let a0_can = &self.a1 * &self.a3 * &self.d * &self.d;
        let b0_can = &self.a0 * &self.a3 * &self.a3 * &self.d * &self.d * &self.d;
        let sx0 = &self.a3 * &self.d;
        let sy0 = &self.a3 * &self.d * &self.d;

        let base = if a0_can.is_zero() { &b0_can } else { &a0_can };
        let (factors, _) = factor_smooth(&base.abs());
        let mut lambda = Int::one();
        for (p, _) in factors {
            let cap_a = if a0_can.is_zero() {
                u32::MAX
            } else {
                valuation(&a0_can, p) / 4
            };
            let cap_b = if b0_can.is_zero() {
                u32::MAX
            } else {
                valuation(&b0_can, p) / 6
            };
            let cap_x = valuation(&sx0, p) / 2;
            let cap_y = valuation(&sy0, p) / 3;
            let e = cap_a.min(cap_b).min(cap_x).min(cap_y);
            if e > 0 {
                lambda *= Int::from(p).pow(e);
            }
        }

        let l4 = lambda.clone().pow(4u32);
        let l6 = lambda.clone().pow(6u32);
        let curve = Curve::new(a0_can / &l4, b0_can / &l6)?;
        let sx = Rat::new(sx0, lambda.clone().pow(2u32));
        let sy = Rat::new(sy0, lambda.clone().pow(3u32));
        Ok(ModelMap {
            model: self.clone(),
            curve,
            lambda,
            sx,
            sy,
        })
    }
}

/// The invertible substitution `x = X/sx`, `r = Y/sy` between a cubic model
/// and its reduced curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelMap {
    model: CubicModel,
    curve: Curve,
    lambda: Int,
    sx: Rat,
    sy: Rat,
}

impl ModelMap {
    pub fn model(&self) -> &CubicModel {
        &self.model
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn lambda(&self) -> &Int {
        &self.lambda
    }

    pub fn sx(&self) -> &Rat {
        &self.sx
    }

    pub fn sy(&self) -> &Rat {
        &self.sy
    }

    /// Carries an affine curve point to its model solution.
    pub fn point_to_xr(&self, p: &CurvePoint) -> Result<(Rat, Rat), Error> {
        let (px, py) = p.xy().ok_or(Error::PointAtInfinity)?;
        if !self.curve.contains(p) {
            return Err(Error::InputOffCurve);
        }
        let x = px / &self.sx;
        let r = py / &self.sy;
        debug_assert!(self.model.holds(&x, &r));
        Ok((x, r))
    }

    /// Carries a model solution to its curve point.
    pub fn xr_to_point(&self, x: &Rat, r: &Rat) -> Result<CurvePoint, Error> {
        if !self.model.holds(x, r) {
            return Err(Error::ModelRelationViolated);
        }
        let p = CurvePoint::affine(x * &self.sx, r * &self.sy);
        debug_assert!(self.curve.contains(&p));
        Ok(p)
    }
}
