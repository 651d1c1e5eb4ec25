//! The per-k configuration registry: coefficient sextuples, multiplier
//! tuples, the square identity each family rides on, and construction of the
//! cubic model that feeds the curve machinery.
//!
//! A sextuple `[a, b, c, d, e, f]` fixes the substitution `G = ax² + b`,
//! `A = cx² + d`, `B = ex + f`. For the three sextuples used here the
//! difference `G⁴ − A⁴ − B⁴` collapses to `content · Q(x)²` with `Q` cubic,
//! so demanding `r⁴·M = G⁴ − A⁴ − B⁴` with `M = Σ multᵢ⁴ + k` factors as a
//! difference of squares and leaves the single relation `m·r² = ±Q(x)`,
//! `m = √(M/content)`.

use crate::arith::{gcd_all, parse_rat, rat_sqrt_exact, Int, Rat};
use crate::curve::CurvePoint;
use crate::model::CubicModel;
use crate::poly::{extract_square, UniPoly};
use crate::Error;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Which of the two equation shapes a configuration solves: five unit-weight
/// fourth powers plus `k·f⁴`, or three plus `k·d⁴`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    FivePlus,
    ThreePlus,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::FivePlus => "five_plus",
            Variant::ThreePlus => "three_plus",
        }
    }

    pub fn from_name(s: &str) -> Option<Variant> {
        match s {
            "five_plus" => Some(Variant::FivePlus),
            "three_plus" => Some(Variant::ThreePlus),
            _ => None,
        }
    }

    /// Number of unit-weight terms.
    pub fn term_count(self) -> usize {
        match self {
            Variant::FivePlus => 5,
            Variant::ThreePlus => 3,
        }
    }

    /// Number of `r`-multipliers carried by a configuration.
    pub fn multiplier_count(self) -> usize {
        self.term_count() - 2
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Substitution coefficients `[a, b, c, d, e, f]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sextuple {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
    pub e: Int,
    pub f: Int,
}

impl Sextuple {
    pub fn new(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> Self {
        Sextuple {
            a: Int::from(a),
            b: Int::from(b),
            c: Int::from(c),
            d: Int::from(d),
            e: Int::from(e),
            f: Int::from(f),
        }
    }

    pub fn coeffs(&self) -> [&Int; 6] {
        [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f]
    }

    fn quad(hi: &Int, lo: &Int) -> UniPoly {
        UniPoly::from_coeffs(vec![
            Rat::from_integer(lo.clone()),
            Rat::zero(),
            Rat::from_integer(hi.clone()),
        ])
    }

    fn lin(hi: &Int, lo: &Int) -> UniPoly {
        UniPoly::from_coeffs(vec![
            Rat::from_integer(lo.clone()),
            Rat::from_integer(hi.clone()),
        ])
    }

    /// `(ax²+b)⁴ − (cx²+d)⁴ − (ex+f)⁴`
    pub fn difference_poly(&self) -> UniPoly {
        let g = Self::quad(&self.a, &self.b).pow(4);
        let a = Self::quad(&self.c, &self.d).pow(4);
        let b = Self::lin(&self.e, &self.f).pow(4);
        &(&g - &a) - &b
    }
}

/// Decomposes the sextuple difference as `content · Q(x)²`.
pub fn derive_identity(s: &Sextuple) -> Result<(Rat, UniPoly), Error> {
    extract_square(&s.difference_poly())
}

/// One solvable (variant, k) configuration: the sextuple, the fixed
/// `r`-multipliers, the branch sign of the satisfied relation and the seed
/// point on the reduced curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyConfig {
    pub variant: Variant,
    pub k: i64,
    pub sextuple: Sextuple,
    pub multipliers: Vec<Rat>,
    pub branch: i8,
    pub seed: CurvePoint,
}

impl FamilyConfig {
    pub fn id(&self) -> String {
        format!("{}_k{}", self.variant.as_str(), self.k)
    }

    /// `M = Σ multᵢ⁴ + k`
    pub fn multiplier_sum_plus_k(&self) -> Rat {
        let mut m = Rat::from_integer(Int::from(self.k));
        for s in &self.multipliers {
            m += s * s * s * s;
        }
        m
    }
}

/// Builds the integer cubic model `d·r² = a₃x³ + a₁x + a₀` for a
/// configuration: `m = √(M/content)`, relation `m·r² = branch·Q(x)`, cleared
/// of denominators and reduced to collectively coprime coefficients.
pub fn build_model(cfg: &FamilyConfig) -> Result<CubicModel, Error> {
    let (content, q) = derive_identity(&cfg.sextuple)?;
    let m_sq = cfg.multiplier_sum_plus_k() / content;
    let m = rat_sqrt_exact(&m_sq).ok_or(Error::NotASquare)?;

    let branch = Rat::from_integer(Int::from(i64::from(cfg.branch)));
    let scale = Rat::from_integer(m.denom().clone()) * branch;
    let coeff = |i: usize| -> Int {
        let v = q.coeff(i) * &scale;
        debug_assert!(v.is_integer());
        v.to_integer()
    };
    let mut row = [m.numer().clone(), coeff(3), coeff(2), coeff(1), coeff(0)];
    let g = gcd_all(&row);
    if !g.is_one() && !g.is_zero() {
        for v in &mut row {
            *v = &*v / &g;
        }
    }
    let [d, a3, a2, a1, a0] = row;
    CubicModel::from_cubic(d, [a3, a2, a1, a0])
}

fn sextuple_std() -> Sextuple {
    Sextuple::new(4, 3, 4, -1, 4, -2)
}

fn sextuple_even() -> Sextuple {
    Sextuple::new(4, 1, 4, -1, 4, 0)
}

fn sextuple_flip() -> Sextuple {
    Sextuple::new(4, 3, 4, -1, 4, 2)
}

fn entry(
    variant: Variant,
    k: i64,
    sextuple: Sextuple,
    multipliers: &[&str],
    seed: (&str, &str),
) -> FamilyConfig {
    FamilyConfig {
        variant,
        k,
        sextuple,
        multipliers: multipliers.iter().map(|s| parse_rat(s)).collect(),
        branch: 1,
        seed: CurvePoint::parse(seed.0, seed.1),
    }
}

/// The thirteen built-in configurations. Every multiplier tuple and seed
/// point is catalog data; all thirteen sit on the positive branch after sign
/// normalization.
pub fn registry() -> Vec<FamilyConfig> {
    use Variant::*;
    vec![
        entry(
            FivePlus,
            1,
            sextuple_std(),
            &["19", "17", "11"],
            ("580", "23368"),
        ),
        entry(
            FivePlus,
            2,
            sextuple_std(),
            &["7", "3", "2"],
            ("1/4", "-33/8"),
        ),
        entry(
            FivePlus,
            3,
            sextuple_std(),
            &["5", "4", "2"],
            ("34", "-352"),
        ),
        entry(
            FivePlus,
            4,
            sextuple_std(),
            &["70", "30", "20"],
            ("474", "10656"),
        ),
        entry(
            FivePlus,
            5,
            sextuple_even(),
            &["11", "7", "5"],
            ("684407232/2289169", "17682275119320/3463512697"),
        ),
        entry(
            FivePlus,
            6,
            sextuple_std(),
            &["37", "31", "11"],
            ("1720", "828352"),
        ),
        entry(FivePlus, 7, sextuple_std(), &["5", "3", "2"], ("4", "-64")),
        entry(
            FivePlus,
            8,
            sextuple_std(),
            &["4", "3", "2"],
            ("-16316/225", "-941248/3375"),
        ),
        entry(
            FivePlus,
            9,
            sextuple_flip(),
            &["12", "10", "6"],
            (
                "569670529240635121336/10878607024914721",
                "13598002320735074871580564215680/1134644815597146377458481",
            ),
        ),
        entry(ThreePlus, 3, sextuple_flip(), &["1/2"], ("36", "176")),
        entry(
            ThreePlus,
            7,
            sextuple_even(),
            &["47"],
            (
                "-2876843001196439/4324112302500",
                "-94873842643707990383059/8991775327433625000",
            ),
        ),
        entry(
            ThreePlus,
            8,
            sextuple_std(),
            &["239/13"],
            ("2088556756/1369", "697479284591232/50653"),
        ),
        entry(ThreePlus, 9, sextuple_flip(), &["2"], ("164", "-2112")),
    ]
}

/// Looks up the built-in configuration for `(variant, k)` on the positive
/// branch.
pub fn lookup(variant: Variant, k: i64) -> Option<FamilyConfig> {
    registry()
        .into_iter()
        .find(|c| c.variant == variant && c.k == k)
}

/// A multiplier tuple found by [`search_multipliers`], together with the
/// identity content it pairs with and `m = √(M/content)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierHit {
    pub multipliers: Vec<Int>,
    pub content: Rat,
    pub m: Rat,
}

fn distinct_contents() -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    for s in [sextuple_std(), sextuple_even(), sextuple_flip()] {
        let (c, _) = derive_identity(&s).expect("built-in sextuples decompose");
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out.sort();
    out
}

/// Enumerates strictly decreasing integer multiplier tuples
/// (`s > t > u ≥ 1` for the five-term shape, a single `s ≥ 1` for the
/// three-term shape) up to `bound` whose `M = Σᵢ multᵢ⁴ + k` is an exact
/// rational square over one of the built-in identity contents. Output is in
/// ascending lexicographic order.
pub fn search_multipliers(variant: Variant, k: i64, bound: u32) -> Vec<MultiplierHit> {
    let contents = distinct_contents();
    let mut out = Vec::new();
    let mut push = |mults: Vec<Int>| {
        let mut m_val = Rat::from_integer(Int::from(k));
        for s in &mults {
            let sr = Rat::from_integer(s.clone());
            m_val += &sr * &sr * &sr * &sr;
        }
        if !m_val.is_positive() {
            return;
        }
        for content in &contents {
            if let Some(m) = rat_sqrt_exact(&(&m_val / content)) {
                out.push(MultiplierHit {
                    multipliers: mults,
                    content: content.clone(),
                    m,
                });
                break;
            }
        }
    };
    match variant {
        Variant::FivePlus => {
            for s in 1..=i64::from(bound) {
                for t in 1..s {
                    for u in 1..t {
                        push(vec![Int::from(s), Int::from(t), Int::from(u)]);
                    }
                }
            }
        }
        Variant::ThreePlus => {
            for s in 1..=i64::from(bound) {
                push(vec![Int::from(s)]);
            }
        }
    }
    out
}
