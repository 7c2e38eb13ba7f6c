//! Brill-Noether number calculators (plain, ramified, multivanishing),
//! feasibility predicates for limit linear series, vanishing-sequence
//! constraint solvers, declarative test-curve pairings, the Nikulin pencil
//! pairing, and the genus-14 two-pointed Kodaira-dimension slope check.

use crate::divisors::{solve_prym_class, DivisorClass, DivisorError, PicGen};
use crate::exactnum::{binomial_int, rat_int, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AppError {
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("case {case} expects {expected}, got g={g} with {n} profile(s)")]
    ShapeMismatch {
        case: FeasibilityCase,
        expected: String,
        g: u32,
        n: usize,
    },
    #[error("expected exactly one solution, found {found}")]
    NonUniqueSolution { found: usize },
    #[error(transparent)]
    Divisor(#[from] DivisorError),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("computed value disagrees with the pinned one: {0}")]
    ValueMismatch(String),
}

/// Vanishing orders `0 <= a_0 < a_1 < ... < a_r` of a linear series at a
/// point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationProfile {
    pub orders: Vec<u32>,
}

impl RamificationProfile {
    pub fn new(orders: Vec<u32>) -> Result<Self, AppError> {
        if orders.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AppError::InvalidProfile(
                "orders must be strictly increasing".into(),
            ));
        }
        Ok(RamificationProfile { orders })
    }

    /// The minimal profile `(0, 1, ..., r)`, which contributes nothing.
    pub fn minimal(r: u32) -> Self {
        RamificationProfile {
            orders: (0..=r).collect(),
        }
    }

    fn validate(&self, r: u32, d: u32) -> Result<(), AppError> {
        if self.orders.len() != r as usize + 1 {
            return Err(AppError::InvalidProfile(format!(
                "profile has {} orders, expected r+1 = {}",
                self.orders.len(),
                r + 1
            )));
        }
        if let Some(&last) = self.orders.last() {
            if last > d {
                return Err(AppError::InvalidProfile(format!(
                    "top order {last} exceeds degree {d}"
                )));
            }
        }
        Ok(())
    }
}

/// Multivanishing orders against a chain of effective divisors
/// `0 = D_0 < D_1 < ...` with the listed positive degrees. Each order is 0 or
/// one of the degrees; the multiplicity of a level is capped by the gap to
/// the next degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultivanishingProfile {
    pub orders: Vec<u32>,
    pub divisor_degrees: Vec<u32>,
}

impl MultivanishingProfile {
    pub fn new(orders: Vec<u32>, divisor_degrees: Vec<u32>) -> Result<Self, AppError> {
        let profile = MultivanishingProfile {
            orders,
            divisor_degrees,
        };
        profile.validate_structure()?;
        Ok(profile)
    }

    /// The chain `x+y, 2(x+y), ...` with orders `(0, 2, ..., 2r)`.
    pub fn stacked_pairs(r: u32) -> Self {
        MultivanishingProfile {
            orders: (0..=r).map(|i| 2 * i).collect(),
            divisor_degrees: (1..=r + 1).map(|i| 2 * i).collect(),
        }
    }

    fn validate_structure(&self) -> Result<(), AppError> {
        if self.orders.windows(2).any(|w| w[0] > w[1]) {
            return Err(AppError::InvalidProfile(
                "orders must be weakly increasing".into(),
            ));
        }
        if self
            .divisor_degrees
            .windows(2)
            .any(|w| w[0] >= w[1])
        {
            return Err(AppError::InvalidProfile(
                "divisor degrees must be strictly increasing".into(),
            ));
        }
        if self.divisor_degrees.first().is_some_and(|&d| d == 0) {
            return Err(AppError::InvalidProfile(
                "divisor degrees start above the empty divisor".into(),
            ));
        }
        for &a in &self.orders {
            if a != 0 && !self.divisor_degrees.contains(&a) {
                return Err(AppError::InvalidProfile(format!(
                    "order {a} is neither 0 nor a divisor degree"
                )));
            }
        }
        Ok(())
    }

    fn validate_caps(&self, d: u32) -> Result<(), AppError> {
        for (&value, &count) in &self.level_multiplicities() {
            let next = self
                .divisor_degrees
                .iter()
                .copied()
                .find(|&deg| deg > value)
                .unwrap_or(d + 1);
            if count > next - value {
                return Err(AppError::InvalidProfile(format!(
                    "level {value} repeated {count} times, cap is {}",
                    next - value
                )));
            }
        }
        Ok(())
    }

    /// Multiplicity `r_l` of every level that actually occurs.
    pub fn level_multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut counts = BTreeMap::new();
        for &a in &self.orders {
            *counts.entry(a).or_insert(0) += 1;
        }
        counts
    }
}

/// Plain Brill-Noether number `rho(g, r, d) = g - (r+1)(g - d + r)`.
pub fn rho(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// Ramified Brill-Noether number
/// `rho(g,r,d) - sum_j sum_i a^j_i + n r(r+1)/2` for `n` marked points.
pub fn rho_ramified(
    g: u32,
    r: u32,
    d: u32,
    profiles: &[RamificationProfile],
) -> Result<i64, AppError> {
    let mut value = rho(g as i64, r as i64, d as i64);
    for profile in profiles {
        profile.validate(r, d)?;
        value -= profile.orders.iter().map(|&a| a as i64).sum::<i64>();
        value += (r as i64) * (r as i64 + 1) / 2;
    }
    Ok(value)
}

/// Multivanishing Brill-Noether number
/// `g - (r+1)(g-d+r) - sum_j (a_j - j) - sum_l C(r_l, 2)`.
///
/// The second factor is `(g - d + r)`: the variant with `d` and `r` swapped
/// fails the dimensional sanity checks (the canonical stacked-pairs profile
/// must come out at -1), so the swapped printing is treated as a typo and
/// flagged in the CLI output.
pub fn rho_multivanishing(
    g: u32,
    r: u32,
    d: u32,
    profile: &MultivanishingProfile,
) -> Result<i64, AppError> {
    if profile.orders.len() != r as usize + 1 {
        return Err(AppError::InvalidProfile(format!(
            "profile has {} orders, expected r+1 = {}",
            profile.orders.len(),
            r + 1
        )));
    }
    if profile.orders.iter().any(|&a| a > d) {
        return Err(AppError::InvalidProfile("order exceeds degree".into()));
    }
    profile.validate_structure()?;
    profile.validate_caps(d)?;
    let mut value = rho(g as i64, r as i64, d as i64);
    for (j, &a) in profile.orders.iter().enumerate() {
        value -= a as i64 - j as i64;
    }
    for &count in profile.level_multiplicities().values() {
        let pairs: i64 = (binomial_int(count as i64, 2)).try_into().unwrap_or(0);
        value -= pairs;
    }
    Ok(value)
}

/// The six feasibility predicates for pointed limit linear series: each case
/// bounds the ramified Brill-Noether number from below on a specific genus
/// and marking shape. Necessary conditions only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FeasibilityCase {
    /// Genus 0, any number of marked points: `rho >= 0`.
    I,
    /// Genus 1, one marked point: `rho >= 0`.
    II,
    /// Genus 1, two marked points: `rho >= -r`.
    III,
    /// Genus 2, one non-Weierstrass marked point: `rho >= 0`.
    IV,
    /// Genus 2, one marked point, generic in a boundary component: `rho >= 0`.
    V,
    /// Generic pointed curve of any genus: `rho >= 0`.
    VI,
}

impl std::fmt::Display for FeasibilityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FeasibilityCase::I => "I",
            FeasibilityCase::II => "II",
            FeasibilityCase::III => "III",
            FeasibilityCase::IV => "IV",
            FeasibilityCase::V => "V",
            FeasibilityCase::VI => "VI",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug)]
pub struct FeasibilityData {
    pub g: u32,
    pub r: u32,
    pub d: u32,
    pub profiles: Vec<RamificationProfile>,
}

pub fn feasibility_checks(case: FeasibilityCase, data: &FeasibilityData) -> Result<bool, AppError> {
    let n = data.profiles.len();
    let shape_ok = match case {
        FeasibilityCase::I => data.g == 0,
        FeasibilityCase::II => data.g == 1 && n == 1,
        FeasibilityCase::III => data.g == 1 && n == 2,
        FeasibilityCase::IV | FeasibilityCase::V => data.g == 2 && n == 1,
        FeasibilityCase::VI => true,
    };
    if !shape_ok {
        let expected = match case {
            FeasibilityCase::I => "g = 0".to_string(),
            FeasibilityCase::II => "g = 1 with 1 profile".to_string(),
            FeasibilityCase::III => "g = 1 with 2 profiles".to_string(),
            FeasibilityCase::IV | FeasibilityCase::V => "g = 2 with 1 profile".to_string(),
            FeasibilityCase::VI => unreachable!(),
        };
        return Err(AppError::ShapeMismatch {
            case,
            expected,
            g: data.g,
            n,
        });
    }
    let value = rho_ramified(data.g, data.r, data.d, &data.profiles)?;
    let bound = match case {
        FeasibilityCase::III => -(data.r as i64),
        _ => 0,
    };
    Ok(value >= bound)
}

/// The two constraint families whose unique solutions are the forced
/// vanishing sequences at `g = r(r+1)/2`.
///
/// Both families demand strictly increasing orders with gaps of at least 2;
/// the odd family is bounded by `a_0 >= g-r-1`, `a_r <= g+r-1` (forced
/// solution `a_i = g-r-1+2i`), the even family by `a_0 >= g-r-2`,
/// `a_r <= g+r-2` (forced solution `a_i = g-r-2+2i`). Which family applies
/// to the node-smoothing analysis depends on the parity of `g - r`; see
/// [`parity_case_applies`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityCase {
    Even,
    Odd,
}

/// The even family describes concentrated multidegree `(2g-3, 1)`, which is
/// consistent only when `g - r` is even; the odd family covers `(2g-2, 0)`.
pub fn parity_case_applies(r: u32, case: ParityCase) -> bool {
    let g = r * (r + 1) / 2;
    match case {
        ParityCase::Even => (g - r) % 2 == 0,
        ParityCase::Odd => (g - r) % 2 == 1,
    }
}

/// Enumerates every sequence satisfying the chosen constraint family and
/// asserts there is exactly one, returning it.
pub fn vanishing_sequence_solver(
    r: u32,
    case: ParityCase,
) -> Result<RamificationProfile, AppError> {
    if r < 3 {
        return Err(AppError::InvalidProfile("solver needs r >= 3".into()));
    }
    let g = (r * (r + 1) / 2) as i64;
    let (lo, hi) = match case {
        ParityCase::Odd => (g - r as i64 - 1, g + r as i64 - 1),
        ParityCase::Even => (g - r as i64 - 2, g + r as i64 - 2),
    };
    let mut solutions = Vec::new();
    let mut current = Vec::with_capacity(r as usize + 1);
    enumerate_gapped(lo, hi, r as usize + 1, &mut current, &mut solutions);
    if solutions.len() != 1 {
        return Err(AppError::NonUniqueSolution {
            found: solutions.len(),
        });
    }
    let orders = solutions.pop().unwrap();
    RamificationProfile::new(orders.into_iter().map(|a| a as u32).collect())
}

fn enumerate_gapped(
    lo: i64,
    hi: i64,
    remaining: usize,
    current: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    let start = current.last().map(|&a| a + 2).unwrap_or(lo);
    // remaining - 1 further entries need at least 2(remaining - 1) headroom
    for a in start..=(hi - 2 * (remaining as i64 - 1)) {
        current.push(a);
        enumerate_gapped(lo, hi, remaining - 1, current, out);
        current.pop();
    }
}

/// Declarative intersection table of a one-parameter test family against the
/// Picard generators; unlisted generators pair to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestCurveProfile {
    pub name: &'static str,
    pub pairings: Vec<(PicGen, Rational)>,
}

impl TestCurveProfile {
    /// Elliptic pencil glued at a point of a genus g-1 curve, lifted into the
    /// boundary component where the pencil side carries the torsion:
    /// pairs 1 with lambda, 12 with delta_0', -1 with delta_{g-1}.
    pub fn a_g_minus_1(g: u32) -> Self {
        TestCurveProfile {
            name: "A_{g-1}",
            pairings: vec![
                (PicGen::Lambda, rat_int(1)),
                (PicGen::Delta0Prime, rat_int(12)),
                (PicGen::Delta(g - 1), rat_int(-1)),
            ],
        }
    }

    /// Same pencil lifted into the component where the large side carries the
    /// torsion: pairs 1 with lambda, 4 with each of delta_0'' and
    /// delta_0^ram, -1 with delta_1.
    pub fn a_1(_g: u32) -> Self {
        TestCurveProfile {
            name: "A_1",
            pairings: vec![
                (PicGen::Lambda, rat_int(1)),
                (PicGen::Delta0DoublePrime, rat_int(4)),
                (PicGen::Delta0Ram, rat_int(4)),
                (PicGen::Delta(1), rat_int(-1)),
            ],
        }
    }

    /// Pencil of curves on a Nikulin surface:
    /// `lambda -> g+1`, `delta_0' -> 6g+2`, `delta_0^ram -> 8`.
    pub fn xi(g: u32) -> Self {
        TestCurveProfile {
            name: "Xi_g",
            pairings: vec![
                (PicGen::Lambda, rat_int(g as i64 + 1)),
                (PicGen::Delta0Prime, rat_int(6 * g as i64 + 2)),
                (PicGen::Delta0Ram, rat_int(8)),
            ],
        }
    }

    /// Two-pointed family moving the first point along a fixed curve:
    /// `psi_1 -> 2g-1`, `psi_2 -> 1`, `delta_{0,{1,2}} -> 1`.
    pub fn a_pointed(g: u32) -> Self {
        TestCurveProfile {
            name: "A_pointed",
            pairings: vec![
                (PicGen::Psi1, rat_int(2 * g as i64 - 1)),
                (PicGen::Psi2, rat_int(1)),
                (PicGen::DeltaJoint(0), rat_int(1)),
            ],
        }
    }
}

/// Bilinear pairing of a test family with a divisor class; boundary
/// coefficients enter with the sign of the class display. Errors when the
/// class has an undetermined coefficient inside the family's support.
pub fn test_curve_pairing<C: DivisorClass>(
    curve: &TestCurveProfile,
    class: &C,
) -> Result<Rational, AppError> {
    let mut total = Rational::zero();
    for (gen, value) in &curve.pairings {
        total += value * class.coefficient(gen)?;
    }
    Ok(total)
}

/// Pairing of the Nikulin pencil with the solved Prym divisor class
/// (normalized to `a = g+1`); equals `1 - g/3` and is negative for `r >= 3`.
pub fn nikulin_pairing(r: u32) -> Result<Rational, AppError> {
    let class = solve_prym_class(r)?;
    test_curve_pairing(&TestCurveProfile::xi(class.g), &class)
}

/// One divisor class restricted to the `(psi, lambda, delta_0', delta_0^ram)`
/// coordinates used by the genus-14 slope argument. Coefficients are signed
/// as displayed; elided boundary terms are simply absent from the check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeCoordinates {
    pub psi: Rational,
    pub lambda: Rational,
    pub d0p: Rational,
    pub d0ram: Rational,
}

/// The three pinned input classes of the genus-14 check: the genus-14
/// Brill-Noether divisor, the pulled-back Gieseker-Petri divisor, and the
/// pulled-back genus-15 Prym-Brill-Noether divisor.
pub fn kodaira_inputs() -> [SlopeCoordinates; 3] {
    [
        SlopeCoordinates {
            psi: rat_int(0),
            lambda: rat_int(34),
            d0p: rat_int(-5),
            d0ram: rat_int(-10),
        },
        SlopeCoordinates {
            psi: rat_int(19289),
            lambda: rat_int(308624),
            d0p: rat_int(-47784),
            d0ram: rat_int(-62470),
        },
        SlopeCoordinates {
            psi: rat_int(15),
            lambda: rat_int(128),
            d0p: rat_int(-20),
            d0ram: rat_int(-30),
        },
    ]
}

/// Result of the genus-14 two-pointed slope check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaReport {
    /// Combination coefficients of the three input classes.
    pub coefficients: [Rational; 3],
    /// Resulting psi coefficient, which must be strictly below 1.
    pub psi_coefficient: Rational,
    pub psi_below_one: bool,
    /// The (lambda, delta_0', delta_0^ram) target that was hit exactly.
    pub target: (Rational, Rational, Rational),
}

/// Solves for the combination of the three input classes hitting
/// `13 lambda - 2 delta_0' - 3 delta_0^ram`, pins the solution to
/// `(4603/63570, 1/50856, 683/19560)`, and checks that the resulting psi
/// coefficient equals `22963/25428 < 1`.
pub fn kodaira_r14_2() -> Result<KodairaReport, AppError> {
    let inputs = kodaira_inputs();
    let target = (rat_int(13), rat_int(-2), rat_int(-3));
    let matrix: Vec<Vec<Rational>> = vec![
        inputs.iter().map(|c| c.lambda.clone()).collect(),
        inputs.iter().map(|c| c.d0p.clone()).collect(),
        inputs.iter().map(|c| c.d0ram.clone()).collect(),
    ];
    let rhs = vec![target.0.clone(), target.1.clone(), target.2.clone()];
    let solution = solve_linear(&matrix, &rhs).ok_or(AppError::SingularSystem)?;

    let expected = [
        Rational::new(4603.into(), 63570.into()),
        Rational::new(1.into(), 50856.into()),
        Rational::new(683.into(), 19560.into()),
    ];
    for (got, want) in solution.iter().zip(&expected) {
        if got != want {
            return Err(AppError::ValueMismatch(format!(
                "combination coefficient {got} != {want}"
            )));
        }
    }

    let psi: Rational = inputs
        .iter()
        .zip(&solution)
        .map(|(c, x)| c.psi.clone() * x)
        .sum();
    let pinned_psi = Rational::new(22963.into(), 25428.into());
    if psi != pinned_psi {
        return Err(AppError::ValueMismatch(format!(
            "psi coefficient {psi} != {pinned_psi}"
        )));
    }
    let coefficients = [
        solution[0].clone(),
        solution[1].clone(),
        solution[2].clone(),
    ];
    Ok(KodairaReport {
        coefficients,
        psi_below_one: psi < rat_int(1),
        psi_coefficient: psi,
        target,
    })
}

/// Exact Gaussian elimination for a small square system; `None` when
/// singular.
pub fn solve_linear(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Rational>> = matrix.to_vec();
    let mut b: Vec<Rational> = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&row| !a[row][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].clone().recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        b[col] *= &inv;
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let factor = a[row][col].clone();
                for k in 0..n {
                    let delta = &a[col][k] * &factor;
                    a[row][k] -= delta;
                }
                let delta = &b[col] * &factor;
                b[row] -= delta;
            }
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisors::strongly_bn_class;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    #[test]
    fn rho_examples() {
        // d = g + r makes the correction term vanish
        assert_eq!(rho(9, 2, 11), 9);
        // prym numerology: rho(2g-1, r, 2g-2) = -r - 2
        for r in 2..=20i64 {
            let g = r * (r + 1) / 2;
            assert_eq!(rho(2 * g - 1, r, 2 * g - 2), -r - 2);
        }
        // r = 5 instance spelled out
        assert_eq!(rho(29, 5, 28), -7);
    }

    #[test]
    fn rho_ramified_examples() {
        assert_eq!(rho_ramified(7, 2, 9, &[]).unwrap(), rho(7, 2, 9));
        let minimal = RamificationProfile::minimal(2);
        assert_eq!(
            rho_ramified(7, 2, 9, &[minimal]).unwrap(),
            rho(7, 2, 9)
        );
        // forced vanishing sequence on the degree 2g-2 aspect: rho = -1
        let g = 6u32;
        let profile = RamificationProfile::new(vec![2, 4, 6, 8]).unwrap();
        assert_eq!(rho_ramified(g - 1, 3, 2 * g - 2, &[profile]).unwrap(), -1);
        // same series with the base locus removed
        let profile = RamificationProfile::new(vec![0, 2, 4, 6]).unwrap();
        assert_eq!(rho_ramified(g - 1, 3, g + 3 - 1, &[profile]).unwrap(), -1);
    }

    #[test]
    fn rho_ramified_rejects_bad_profiles() {
        assert!(RamificationProfile::new(vec![0, 0, 1]).is_err());
        let too_short = RamificationProfile::new(vec![0, 1]).unwrap();
        assert!(rho_ramified(5, 2, 6, &[too_short]).is_err());
        let too_deep = RamificationProfile::new(vec![0, 1, 9]).unwrap();
        assert!(rho_ramified(5, 2, 6, &[too_deep]).is_err());
    }

    #[test]
    fn rho_multivanishing_examples() {
        for r in 2..=20u32 {
            let g = r * (r + 1) / 2 - 1;
            let profile = MultivanishingProfile::stacked_pairs(r);
            assert_eq!(rho_multivanishing(g, r, g + r, &profile).unwrap(), -1);
        }
        // distinct minimal levels reduce to the plain count
        let profile = MultivanishingProfile::new(vec![0, 1, 2], vec![1, 2, 3]).unwrap();
        assert_eq!(
            rho_multivanishing(4, 2, 5, &profile).unwrap(),
            rho(4, 2, 5)
        );
        // a doubled level costs exactly C(2,2) = 1 beyond the order sum
        let doubled = MultivanishingProfile::new(vec![0, 2, 2], vec![2, 4, 6]).unwrap();
        let order_sum: i64 = doubled
            .orders
            .iter()
            .enumerate()
            .map(|(j, &a)| a as i64 - j as i64)
            .sum();
        assert_eq!(
            rho_multivanishing(4, 2, 6, &doubled).unwrap(),
            rho(4, 2, 6) - order_sum - 1
        );
    }

    #[test]
    fn multivanishing_validation() {
        // order not a level
        assert!(MultivanishingProfile::new(vec![0, 3], vec![2, 4]).is_err());
        // multiplicity above the gap cap
        let profile = MultivanishingProfile::new(vec![2, 2, 2], vec![2, 4]).unwrap();
        assert!(rho_multivanishing(4, 2, 5, &profile).is_err());
    }

    #[test]
    fn feasibility_examples() {
        // case III boundary and violation
        let data = FeasibilityData {
            g: 1,
            r: 2,
            d: 4,
            profiles: vec![
                RamificationProfile::minimal(2),
                RamificationProfile::minimal(2),
            ],
        };
        // rho(1,2,4) = 1 - 3*(-1) = 4 >= -2
        assert!(feasibility_checks(FeasibilityCase::III, &data).unwrap());
        // case I at the boundary rho = 0
        let data = FeasibilityData {
            g: 0,
            r: 1,
            d: 1,
            profiles: vec![],
        };
        assert_eq!(rho(0, 1, 1), 0);
        assert!(feasibility_checks(FeasibilityCase::I, &data).unwrap());
        // case VI with the prym numerology is infeasible
        let r = 3u32;
        let g = r * (r + 1) / 2;
        let data = FeasibilityData {
            g: 2 * g - 1,
            r,
            d: 2 * g - 2,
            profiles: vec![],
        };
        assert!(!feasibility_checks(FeasibilityCase::VI, &data).unwrap());
        // shape mismatch
        let data = FeasibilityData {
            g: 3,
            r: 1,
            d: 2,
            profiles: vec![],
        };
        assert!(matches!(
            feasibility_checks(FeasibilityCase::II, &data),
            Err(AppError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn vanishing_solver_odd_case() {
        // r = 3 (g = 6): unique solution (2, 4, 6, 8)
        let profile = vanishing_sequence_solver(3, ParityCase::Odd).unwrap();
        assert_eq!(profile.orders, vec![2, 4, 6, 8]);
        for r in 3..=10 {
            let g = r * (r + 1) / 2;
            let profile = vanishing_sequence_solver(r, ParityCase::Odd).unwrap();
            assert_eq!(profile.orders[0], g - r - 1);
            assert_eq!(profile.orders[r as usize], g + r - 1);
            for (i, &a) in profile.orders.iter().enumerate() {
                assert_eq!(a, g - r - 1 + 2 * i as u32);
            }
        }
    }

    #[test]
    fn vanishing_solver_even_case() {
        // r = 4 (g = 10): a_0 = g - r - 2 = 4, so the half-order is 2
        let profile = vanishing_sequence_solver(4, ParityCase::Even).unwrap();
        assert_eq!(profile.orders[0], 4);
        assert_eq!(profile.orders[0] / 2, 2);
        for r in 3..=10 {
            let g = r * (r + 1) / 2;
            let profile = vanishing_sequence_solver(r, ParityCase::Even).unwrap();
            for (i, &a) in profile.orders.iter().enumerate() {
                assert_eq!(a, g - r - 2 + 2 * i as u32);
            }
        }
        // the applicable family alternates with the parity of g - r
        assert!(parity_case_applies(4, ParityCase::Even));
        assert!(!parity_case_applies(3, ParityCase::Even));
        assert!(parity_case_applies(3, ParityCase::Odd));
    }

    #[test]
    fn elliptic_pencil_pairings_vanish_on_solved_class() {
        for r in 3..=6 {
            let class = solve_prym_class(r).unwrap();
            let a_top = TestCurveProfile::a_g_minus_1(class.g);
            let a_1 = TestCurveProfile::a_1(class.g);
            assert_eq!(test_curve_pairing(&a_top, &class).unwrap(), rat_int(0));
            assert_eq!(test_curve_pairing(&a_1, &class).unwrap(), rat_int(0));
        }
    }

    #[test]
    fn nikulin_pairing_values() {
        // r = 3, g = 6: 1 - g/3 = -1
        assert_eq!(nikulin_pairing(3).unwrap(), rat_int(-1));
        for r in 3..=8 {
            let g = (r * (r + 1) / 2) as i64;
            let pairing = nikulin_pairing(r).unwrap();
            assert_eq!(pairing, rat_int(1) - rat_int(g) / rat_int(3));
            assert!(pairing < Rational::zero());
        }
    }

    #[test]
    fn pointed_test_curve_against_strongly_bn() {
        let class = strongly_bn_class(3).unwrap();
        let curve = TestCurveProfile::a_pointed(class.g);
        // (2g-1) a_1 + a_2 - b_{0,{1,2}} = 36 + 4 - 15
        assert_eq!(test_curve_pairing(&curve, &class).unwrap(), rat_int(25));
    }

    #[test]
    fn kodaira_check_passes_exactly() {
        let report = kodaira_r14_2().unwrap();
        assert_eq!(
            report.coefficients,
            [
                rat(4603, 63570),
                rat(1, 50856),
                rat(683, 19560),
            ]
        );
        assert_eq!(report.psi_coefficient, rat(22963, 25428));
        assert!(report.psi_below_one);
        // the pinned psi value is the displayed sum 19289/50856 + 15*683/19560
        assert_eq!(
            rat(19289, 50856) + rat(15 * 683, 19560),
            rat(22963, 25428)
        );
    }

    #[test]
    fn kodaira_perturbation_breaks_target() {
        let inputs = kodaira_inputs();
        let report = kodaira_r14_2().unwrap();
        let [x, y, z] = report.coefficients;
        let z_off = z + rat(1, 1_000_000);
        let d0ram: Rational = inputs
            .iter()
            .zip([&x, &y, &z_off])
            .map(|(c, v)| c.d0ram.clone() * v)
            .sum();
        assert_ne!(d0ram, rat_int(-3));
    }

    #[test]
    fn linear_solver_detects_singularity() {
        let matrix = vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ];
        assert!(solve_linear(&matrix, &[rat_int(1), rat_int(2)]).is_none());
    }

    proptest! {
        #[test]
        fn minimal_profiles_do_not_change_rho(
            g in 0u32..30, r in 0u32..6, extra in 0u32..20, n in 0usize..3
        ) {
            let d = r + extra; // keep profiles within degree
            let profiles: Vec<_> = (0..n).map(|_| RamificationProfile::minimal(r)).collect();
            prop_assert_eq!(
                rho_ramified(g, r, d, &profiles).unwrap(),
                rho(g as i64, r as i64, d as i64)
            );
        }
    }
}
