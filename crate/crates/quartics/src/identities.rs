//! Identity-based constructions: the `a + b = c` three-quartic collapse, the
//! dedicated three-term `k = 2` engine, the repaired parametric families and
//! the grid-checked bivariate identities.

use crate::arith::{int, isqrt_exact, Int, Rat};
use crate::curve::CurvePoint;
use crate::families::Variant;
use crate::model::{CubicModel, ModelMap};
use crate::pipeline::{Provenance, QuarticSolution};
use crate::poly::UniPoly;
use crate::Error;
use num_traits::{One, Signed, Zero};

/// `a⁴ + b⁴ + (a+b)⁴ = 2(a² + ab + b²)²`, returned as the right-hand side.
/// The equality is asserted on every call; it is an identity, not a search.
pub fn three_quartic_square(a: &Int, b: &Int) -> Int {
    let s = a * a + a * b + b * b;
    let rhs = Int::from(2) * &s * &s;
    let fourth = |v: &Int| v * v * v * v;
    let c = a + b;
    assert_eq!(
        fourth(a) + fourth(b) + fourth(&c),
        rhs,
        "three-quartic identity must close"
    );
    rhs
}

/// The cubic model behind the three-term `k = 2` construction with `q`
/// pinned to 1: `3r² = 2x³ − 2x`, which lands on `Y² = X(X² − 36)` under
/// `x = X/6`, `r = Y/18`. General `q` is recovered by homogeneity.
pub fn k2_model_map() -> ModelMap {
    CubicModel::new(int(3), int(2), int(-2), int(0))
        .expect("valid model")
        .to_weierstrass()
        .expect("nonsingular")
}

/// Seed point `(12, 36)`, i.e. `(p, q, r, s) = (2, 1, 2, 4)`.
pub fn k2_seed() -> CurvePoint {
    CurvePoint::parse("12", "36")
}

/// Back-substitutes a point of `Y² = X(X² − 36)` into a three-term `k = 2`
/// solution `(p²−q²)⁴ + (2pq)⁴ + (2r)⁴ + 2r⁴ = (p²+q²)⁴`.
pub fn k2_point_to_solution(pt: &CurvePoint) -> Result<QuarticSolution, Error> {
    let map = k2_model_map();
    let (p, r) = map.point_to_xr(pt)?;
    let one = Rat::one();
    let vals = [&p * &p - &one, &p + &p, &r + &r, r.clone(), &p * &p + &one];
    let sol = QuarticSolution::from_rationals(Variant::ThreePlus, 2, &vals)?;
    assert!(sol.verify(), "k=2 back-substitution must verify: {sol}");
    Ok(sol)
}

/// Multiples of the `k = 2` seed, mirroring [`crate::pipeline::Generator::generate`].
pub fn k2_generate(
    count: usize,
    max_digits: usize,
) -> Result<Vec<(QuarticSolution, Provenance)>, Error> {
    assert!(count >= 1, "k2_generate: count must be positive");
    let map = k2_model_map();
    let curve = map.curve().clone();
    let seed = k2_seed();
    let mut out = Vec::new();
    let mut point = seed.clone();
    let mut n: u64 = 1;
    loop {
        if point.is_infinity() {
            break;
        }
        match k2_point_to_solution(&point) {
            Ok(sol) => {
                if crate::arith::decimal_digits(&sol.g) > max_digits {
                    break;
                }
                out.push((
                    sol,
                    Provenance {
                        config: "three_plus_k2".into(),
                        multiple: n,
                        point: point.clone(),
                        branch: 1,
                        repaired_from_paper: false,
                    },
                ));
                if out.len() == count {
                    break;
                }
            }
            Err(Error::DegenerateSolution) => {}
            Err(e) => return Err(e),
        }
        point = curve
            .add(&point, &seed)
            .expect("seed multiples stay on curve");
        n += 1;
    }
    if out.is_empty() {
        return Err(Error::DigitBudgetExhausted);
    }
    Ok(out)
}

/// A one-parameter family built on the three-quartic collapse: three
/// quadratics in `n` summing to zero, fixed multiplier terms scaled by
/// `u(n) = n² + n + 1`, and `f`/`g` multipliers on the same scale.
///
/// Evaluated at any integer `n`, `Σ |qᵢ(n)|⁴ + Σ (fixedᵢ·u)⁴ + k·(f_mult·u)⁴ =
/// (g_mult·u)⁴` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamFamily {
    pub k: i64,
    pub variant: Variant,
    /// `[a, b, c]` rows for `a·n² + b·n + c`.
    pub quadratics: [[i64; 3]; 3],
    pub fixed_multipliers: Vec<i64>,
    pub f_mult: i64,
    pub g_mult: i64,
    /// True when the stored coefficients correct misprints in the family's
    /// published source.
    pub repaired_from_paper: bool,
}

fn quad_poly(row: &[i64; 3]) -> UniPoly {
    UniPoly::from_int_coeffs(&[row[2], row[1], row[0]])
}

fn quad_eval(row: &[i64; 3], n: i64) -> Int {
    int(row[0]) * int(n) * int(n) + int(row[1]) * int(n) + int(row[2])
}

/// The repaired `k = 2` and `k = 5` five-term families.
pub fn param_families() -> Vec<ParamFamily> {
    vec![
        ParamFamily {
            k: 2,
            variant: Variant::FivePlus,
            // second quadratic's constant sign flipped relative to the
            // circulated form; f carries the factor 12 the witness demands
            quadratics: [[6, -20, -16], [-16, -12, 10], [10, 32, 6]],
            fixed_multipliers: vec![32, 29],
            f_mult: 12,
            g_mult: 37,
            repaired_from_paper: true,
        },
        ParamFamily {
            k: 5,
            variant: Variant::FivePlus,
            // quadratics as circulated; the 7/28 fixed terms and the factor
            // 14 on f are reconstructed from the witness
            quadratics: [[-26, -44, 4], [22, -8, -26], [4, 52, 22]],
            fixed_multipliers: vec![7, 28],
            f_mult: 14,
            g_mult: 35,
            repaired_from_paper: true,
        },
    ]
}

/// The `k = 2` family with its coefficients exactly as circulated, kept as a
/// regression lock: it fails [`verify_family`] and its evaluations fail
/// [`QuarticSolution::verify`].
pub fn k2_family_uncorrected() -> ParamFamily {
    ParamFamily {
        k: 2,
        variant: Variant::FivePlus,
        quadratics: [[6, -20, -16], [-16, -12, -10], [-10, -32, -6]],
        fixed_multipliers: vec![32, 29],
        f_mult: 1,
        g_mult: 37,
        repaired_from_paper: false,
    }
}

/// Evaluates a family at integer `n` and reduces to a primitive tuple.
/// Zero entries are permitted: a vanishing quadratic just drops one fourth
/// power from an identity that still closes exactly.
pub fn family_eval(fam: &ParamFamily, n: i64) -> QuarticSolution {
    let u = int(n) * int(n) + int(n) + Int::one();
    let mut vals: Vec<Int> = fam.quadratics.iter().map(|q| quad_eval(q, n)).collect();
    for m in &fam.fixed_multipliers {
        vals.push(int(*m) * &u);
    }
    vals.push(int(fam.f_mult) * &u);
    vals.push(int(fam.g_mult) * &u);
    QuarticSolution::from_integers(fam.variant, fam.k, &vals)
}

/// Polynomial-level validity: the quadratics sum to zero and
/// `q₁² + q₁q₂ + q₂² = m_f·u(n)²` with `2m_f² = g⁴ − Σ fixed⁴ − k·f⁴`.
pub fn verify_family(fam: &ParamFamily) -> bool {
    let [q1, q2, q3] = &fam.quadratics;
    let (p1, p2, p3) = (quad_poly(q1), quad_poly(q2), quad_poly(q3));
    if !(&(&p1 + &p2) + &p3).is_zero() {
        return false;
    }
    let fourth = |v: i64| int(v) * int(v) * int(v) * int(v);
    let residual = fourth(fam.g_mult)
        - fam
            .fixed_multipliers
            .iter()
            .map(|m| fourth(*m))
            .sum::<Int>()
        - int(fam.k) * fourth(fam.f_mult);
    if residual.is_negative() || !(&residual % int(2)).is_zero() {
        return false;
    }
    let Some(m_f) = isqrt_exact(&(residual / int(2))) else {
        return false;
    };
    let u = UniPoly::from_int_coeffs(&[1, 1, 1]);
    let lhs = &(&(&p1 * &p1) + &(&p1 * &p2)) + &(&p2 * &p2);
    let rhs = (&u * &u).scale(&Rat::from_integer(m_f));
    lhs == rhs
}

/// The two bivariate identities checked on signed evaluation grids. Both
/// have degree at most eight per variable, so agreement on a 9×9 grid is a
/// proof of the polynomial identity, not a sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridIdentity {
    /// `(a⁴−2b⁴)⁴ + (2a³b)⁴ + 4(2ab³)⁴ = (a⁴+2b⁴)⁴`
    Carmichael,
    /// `(2p²−2q²)⁴ + (2q²+4pq)⁴ + (2p²+4pq)⁴ + 4(p²+pq+q²)⁴ = [6(p²+pq+q²)²]²`
    K4SumCondition,
}

pub fn grid_identity_check(which: GridIdentity, span: u32) -> bool {
    assert!(span >= 9, "grid span must cover the degree");
    let fourth = |v: &Int| v * v * v * v;
    let span = i64::from(span);
    for a in 0..span {
        for b in 0..span {
            for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let (x, y) = (int(sa * a), int(sb * b));
                let ok = match which {
                    GridIdentity::Carmichael => {
                        let t1 = fourth(&x) - int(2) * fourth(&y);
                        let t2 = int(2) * &x * &x * &x * &y;
                        let t3 = int(2) * &x * &y * &y * &y;
                        let t4 = fourth(&x) + int(2) * fourth(&y);
                        fourth(&t1) + fourth(&t2) + int(4) * fourth(&t3) == fourth(&t4)
                    }
                    GridIdentity::K4SumCondition => {
                        let s = &x * &x + &x * &y + &y * &y;
                        let t1 = int(2) * &x * &x - int(2) * &y * &y;
                        let t2 = int(2) * &y * &y + int(4) * &x * &y;
                        let t3 = int(2) * &x * &x + int(4) * &x * &y;
                        let rhs = int(6) * &s * &s;
                        fourth(&t1) + fourth(&t2) + fourth(&t3) + int(4) * fourth(&s) == &rhs * &rhs
                    }
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// The fixed three-term `k = 14` witness `(4, 11, 15)⁴ + 14·1⁴ = 16⁴`, with
/// its `a + b = c` consistency checks.
pub fn k14_witness() -> QuarticSolution {
    let (a, b) = (int(4), int(11));
    assert_eq!(&a + &b, int(15));
    // 2(a² + ab + b²)² = 16⁴ − 14
    let sq = three_quartic_square(&a, &b);
    let g4 = int(16) * int(16) * int(16) * int(16);
    assert_eq!(sq, &g4 - int(14));
    let sol = QuarticSolution {
        variant: Variant::ThreePlus,
        k: 14,
        terms: vec![int(4), int(11), int(15)],
        f: int(1),
        g: int(16),
    };
    assert!(sol.verify());
    sol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn ints(vals: &[i64]) -> Vec<Int> {
        vals.iter().copied().map(int).collect()
    }

    #[test]
    fn three_quartic_examples() {
        assert_eq!(three_quartic_square(&int(6), &int(10)), int(76832)); // 2·196²
        assert_eq!(three_quartic_square(&int(0), &int(5)), int(1250)); // 2b⁴
        assert_eq!(three_quartic_square(&int(4), &int(22)), int(691488)); // 2·588²
    }

    #[test]
    fn three_quartic_full_range() {
        for a in -50..=50i64 {
            for b in -50..=50i64 {
                three_quartic_square(&int(a), &int(b)); // asserts internally
            }
        }
    }

    #[test]
    fn k2_map_lands_on_the_catalog_curve() {
        let map = k2_model_map();
        assert_eq!(map.curve().a(), &int(-36));
        assert_eq!(map.curve().b(), &int(0));
        assert_eq!(map.sx(), &rat(6, 1));
        assert_eq!(map.sy(), &rat(18, 1));
        assert!(map.curve().contains(&k2_seed()));
        assert!(map.curve().is_infinite_order(&k2_seed()).unwrap());
    }

    #[test]
    fn k2_solutions() {
        let sol = k2_point_to_solution(&k2_seed()).unwrap();
        assert_eq!(sol.terms, ints(&[3, 4, 4]));
        assert_eq!((sol.f.clone(), sol.g.clone()), (int(2), int(5)));

        let sol = k2_point_to_solution(&CurvePoint::parse("25/4", "35/8")).unwrap();
        assert_eq!(sol.terms, ints(&[49, 1200, 280]));
        assert_eq!((sol.f.clone(), sol.g.clone()), (int(140), int(1201)));

        // torsion points degenerate
        assert_eq!(
            k2_point_to_solution(&CurvePoint::parse("6", "0")),
            Err(Error::DegenerateSolution)
        );
        assert_eq!(
            k2_point_to_solution(&CurvePoint::parse("5", "5")),
            Err(Error::InputOffCurve)
        );
    }

    #[test]
    fn k2_s_equals_2r_after_scaling() {
        for n in 1..=5 {
            let map = k2_model_map();
            let p = map.curve().scalar_mul(n, &k2_seed()).unwrap();
            if let Ok(sol) = k2_point_to_solution(&p) {
                // third term is 2r, f is r, both after one joint scaling
                assert_eq!(sol.terms[2], int(2) * &sol.f);
                assert!(sol.verify());
            }
        }
    }

    #[test]
    fn families_verify_and_match_witnesses() {
        let fams = param_families();
        assert!(fams.iter().all(verify_family));

        let k2 = &fams[0];
        let sol = family_eval(k2, 0);
        assert_eq!(sol.terms, ints(&[16, 10, 6, 32, 29]));
        assert_eq!((sol.f.clone(), sol.g.clone()), (int(12), int(37)));

        // at n = 1 the raw tuple (30, 18, 48, 96, 87; 36; 111) satisfies the
        // equation but carries a collective factor 3; reduction lands back on
        // the witness
        let fourth = |v: i64| int(v) * int(v) * int(v) * int(v);
        let raw =
            fourth(30) + fourth(18) + fourth(48) + fourth(96) + fourth(87) + int(2) * fourth(36);
        assert_eq!(raw, fourth(111));
        let sol = family_eval(k2, 1);
        assert_eq!(sol.terms, ints(&[10, 6, 16, 32, 29]));
        assert_eq!((sol.f.clone(), sol.g.clone()), (int(12), int(37)));
        assert!(sol.verify());

        let k5 = &fams[1];
        let sol = family_eval(k5, 0);
        assert_eq!(sol.terms, ints(&[4, 26, 22, 7, 28]));
        assert_eq!((sol.f.clone(), sol.g.clone()), (int(14), int(35)));
    }

    #[test]
    fn families_verify_across_range() {
        for fam in param_families() {
            for n in -10..=10 {
                let sol = family_eval(&fam, n);
                assert!(sol.verify(), "k={} n={n}: {sol}", fam.k);
            }
        }
    }

    #[test]
    fn vanishing_quadratic_still_verifies() {
        // first quadratic of the k=2 family vanishes at n = 4
        let k2 = &param_families()[0];
        let sol = family_eval(k2, 4);
        assert_eq!(sol.terms, ints(&[0, 14, 14, 32, 29]));
        assert!(sol.verify());
    }

    #[test]
    fn uncorrected_k2_family_fails() {
        let fam = k2_family_uncorrected();
        assert!(!verify_family(&fam));
        assert!(!family_eval(&fam, 1).verify());
    }

    #[test]
    fn grid_identities() {
        assert!(grid_identity_check(GridIdentity::Carmichael, 9));
        assert!(grid_identity_check(GridIdentity::K4SumCondition, 9));
        // spot values: (1,1) gives 1 + 16 + 64 = 81 = 3⁴; (1,0) gives 36 = 6²·1
        assert_eq!(int(1) + int(16) + int(64), int(81));
    }

    #[test]
    fn k14_witness_closes() {
        let sol = k14_witness();
        assert_eq!(sol.terms, ints(&[4, 11, 15]));
        assert_eq!((sol.f.clone(), sol.g.clone()), (int(1), int(16)));
        assert_eq!(int(2) * int(181) * int(181), int(65522)); // 65536 − 14
        assert!(sol.verify());
    }

    #[test]
    fn k2_generate_streams() {
        let run = k2_generate(2, 120).unwrap();
        assert_eq!(run[0].0.terms, ints(&[3, 4, 4]));
        assert_eq!(run[1].0.terms, ints(&[49, 1200, 280]));
        assert_eq!(run[1].1.multiple, 2);
    }
}
