//! Divisor classes on the compactified Prym moduli space and on the 1- and
//! 2-pointed moduli spaces of curves, together with the exact relation
//! systems that pin their coefficients.
//!
//! Coefficients are stored as they appear in the class displays: the lambda
//! and psi coefficients enter positively, every boundary coefficient `b`
//! enters as `-b delta`. Coefficients the computation leaves undetermined are
//! stored as an explicit `None`, never as zero; any operation that needs one
//! fails naming the missing slot.

use crate::exactnum::{factorial, rat_int, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisorError {
    #[error("coefficient of {0} is undetermined")]
    Unknown(String),
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: u32, lo: u32, hi: u32 },
    #[error("slope denominator {0} is zero")]
    ZeroDenominator(String),
    #[error("relation system inconsistent: {0}")]
    Inconsistent(String),
    #[error("generator {0} does not live on this moduli space")]
    UnsupportedGenerator(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Picard-group generators of the moduli spaces handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PicGen {
    /// Hodge class.
    Lambda,
    /// Cotangent class at the first / second marked point.
    Psi1,
    Psi2,
    /// Prym boundary pieces over delta_0.
    Delta0Prime,
    Delta0DoublePrime,
    Delta0Ram,
    /// Prym boundary delta_i.
    Delta(u32),
    /// Prym boundary delta_{i:g-i}.
    DeltaMixed(u32),
    /// 2-pointed boundary delta_0.
    Delta0,
    /// 2-pointed boundary delta_{i,{1,2}} (both points on the genus-i piece).
    DeltaJoint(u32),
    /// 2-pointed boundary delta_{i,1} (only the first point on it).
    DeltaFirst(u32),
}

impl fmt::Display for PicGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PicGen::Lambda => write!(f, "lambda"),
            PicGen::Psi1 => write!(f, "psi_1"),
            PicGen::Psi2 => write!(f, "psi_2"),
            PicGen::Delta0Prime => write!(f, "delta_0'"),
            PicGen::Delta0DoublePrime => write!(f, "delta_0''"),
            PicGen::Delta0Ram => write!(f, "delta_0^ram"),
            PicGen::Delta(i) => write!(f, "delta_{i}"),
            PicGen::DeltaMixed(i) => write!(f, "delta_{{i:g-i}} at i={i}"),
            PicGen::Delta0 => write!(f, "delta_0"),
            PicGen::DeltaJoint(i) => write!(f, "delta_{{{i},{{1,2}}}}"),
            PicGen::DeltaFirst(i) => write!(f, "delta_{{{i},1}}"),
        }
    }
}

/// Signed coefficient lookup shared by every divisor-class type; used by the
/// test-curve pairings.
pub trait DivisorClass {
    fn coefficient(&self, gen: &PicGen) -> Result<Rational, DivisorError>;
}

/// Class `a lambda - b_0' delta_0' - b_0'' delta_0'' - b_0^ram delta_0^ram
/// - sum b_i delta_i - sum b_{i:g-i} delta_{i:g-i}` on the compactified Prym
/// moduli space, stored via the positive `b` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrymDivisorClass {
    pub g: u32,
    pub a: Rational,
    pub b0p: Rational,
    pub b0pp: Rational,
    pub b0ram: Rational,
    /// `b_i` for `1 <= i <= g-1`.
    pub b: BTreeMap<u32, Rational>,
    /// `b_{i:g-i}` for `1 <= i <= floor(g/2)`; `None` = undetermined.
    pub b_mixed: BTreeMap<u32, Option<Rational>>,
}

impl PrymDivisorClass {
    pub fn zero(g: u32) -> Self {
        PrymDivisorClass {
            g,
            a: Rational::zero(),
            b0p: Rational::zero(),
            b0pp: Rational::zero(),
            b0ram: Rational::zero(),
            b: (1..g).map(|i| (i, Rational::zero())).collect(),
            b_mixed: (1..=g / 2).map(|i| (i, Some(Rational::zero()))).collect(),
        }
    }

    /// The class equal to a single generator with coefficient +1.
    pub fn pure(g: u32, gen: PicGen) -> Result<Self, DivisorError> {
        let mut out = Self::zero(g);
        match gen {
            PicGen::Lambda => out.a = rat_int(1),
            PicGen::Delta0Prime => out.b0p = rat_int(-1),
            PicGen::Delta0DoublePrime => out.b0pp = rat_int(-1),
            PicGen::Delta0Ram => out.b0ram = rat_int(-1),
            PicGen::Delta(i) => {
                let slot = out.b.get_mut(&i).ok_or(DivisorError::IndexOutOfRange {
                    index: i,
                    lo: 1,
                    hi: g - 1,
                })?;
                *slot = rat_int(-1);
            }
            PicGen::DeltaMixed(i) => {
                let slot = out
                    .b_mixed
                    .get_mut(&i)
                    .ok_or(DivisorError::IndexOutOfRange {
                        index: i,
                        lo: 1,
                        hi: g / 2,
                    })?;
                *slot = Some(rat_int(-1));
            }
            other => return Err(DivisorError::UnsupportedGenerator(other.to_string())),
        }
        Ok(out)
    }
}

impl DivisorClass for PrymDivisorClass {
    fn coefficient(&self, gen: &PicGen) -> Result<Rational, DivisorError> {
        match gen {
            PicGen::Lambda => Ok(self.a.clone()),
            PicGen::Delta0Prime => Ok(-self.b0p.clone()),
            PicGen::Delta0DoublePrime => Ok(-self.b0pp.clone()),
            PicGen::Delta0Ram => Ok(-self.b0ram.clone()),
            PicGen::Delta(i) => self
                .b
                .get(i)
                .map(|v| -v.clone())
                .ok_or(DivisorError::IndexOutOfRange {
                    index: *i,
                    lo: 1,
                    hi: self.g - 1,
                }),
            PicGen::DeltaMixed(i) => match self.b_mixed.get(i) {
                None => Err(DivisorError::IndexOutOfRange {
                    index: *i,
                    lo: 1,
                    hi: self.g / 2,
                }),
                Some(None) => Err(DivisorError::Unknown(gen.to_string())),
                Some(Some(v)) => Ok(-v.clone()),
            },
            other => Err(DivisorError::UnsupportedGenerator(other.to_string())),
        }
    }
}

/// Class `c (a_1 psi_1 + a_2 psi_2 + a lambda - b_0 delta_0
/// - sum b_{i,{1,2}} delta_{i,{1,2}} - sum b_{i,1} delta_{i,1})` on the
/// 2-pointed moduli space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedDivisorClass2 {
    pub g: u32,
    pub a1: Rational,
    pub a2: Rational,
    pub a: Rational,
    pub b0: Rational,
    /// `b_{i,{1,2}}` for `0 <= i <= g-1`.
    pub b_12: BTreeMap<u32, Rational>,
    /// `b_{i,1}` for `1 <= i <= g-1`; `None` = undetermined.
    pub b_1: BTreeMap<u32, Option<Rational>>,
    /// Global scale when known.
    pub c_scale: Option<Rational>,
}

impl DivisorClass for PointedDivisorClass2 {
    fn coefficient(&self, gen: &PicGen) -> Result<Rational, DivisorError> {
        match gen {
            PicGen::Psi1 => Ok(self.a1.clone()),
            PicGen::Psi2 => Ok(self.a2.clone()),
            PicGen::Lambda => Ok(self.a.clone()),
            PicGen::Delta0 => Ok(-self.b0.clone()),
            PicGen::DeltaJoint(i) => {
                self.b_12
                    .get(i)
                    .map(|v| -v.clone())
                    .ok_or(DivisorError::IndexOutOfRange {
                        index: *i,
                        lo: 0,
                        hi: self.g - 1,
                    })
            }
            PicGen::DeltaFirst(i) => match self.b_1.get(i) {
                None => Err(DivisorError::IndexOutOfRange {
                    index: *i,
                    lo: 1,
                    hi: self.g - 1,
                }),
                Some(None) => Err(DivisorError::Unknown(gen.to_string())),
                Some(Some(v)) => Ok(-v.clone()),
            },
            other => Err(DivisorError::UnsupportedGenerator(other.to_string())),
        }
    }
}

/// Class `psi * psi + lambda * lambda + sum delta_i * delta_i` on the
/// 1-pointed space of genus-`h` curves; `delta` holds signed coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePointedClass {
    pub h: u32,
    pub psi: Rational,
    pub lambda: Rational,
    /// Signed coefficients of `delta_i` for `0 <= i <= h-1`.
    pub delta: BTreeMap<u32, Rational>,
}

/// Coefficient vector over the boundary classes `eps_2, ..., eps_{g-2}` of
/// the unordered-marking genus-0 space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eps0Class {
    pub g: u32,
    pub eps: BTreeMap<u32, Rational>,
}

/// Pullback of a Prym divisor class along the flag-elliptic-tails embedding
/// of the unordered genus-0 space:
/// `delta_i -> eps_i` for `2 <= i <= g-2`,
/// `delta_{g-1} -> -sum (i-1)(g-i)/(g-2) eps_i`,
/// `delta_1 -> -sum (g-i-1)(g-i)/((g-2)(g-1)) eps_i`,
/// and `lambda`, the three `delta_0` pieces and every `delta_{i:g-i}`
/// pull back to zero.
pub fn pullback_to_genus0(x: &PrymDivisorClass) -> Result<Eps0Class, DivisorError> {
    let g = x.g;
    if g < 4 {
        return Err(DivisorError::InvalidParameter(
            "pullback needs genus at least 4".into(),
        ));
    }
    let b = |i: u32| -> Result<Rational, DivisorError> {
        x.b.get(&i).cloned().ok_or(DivisorError::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: g - 1,
        })
    };
    let b1 = b(1)?;
    let b_top = b(g - 1)?;
    let mut eps = BTreeMap::new();
    for i in 2..=(g - 2) {
        let gi = g as i64;
        let ii = i as i64;
        let from_top = b_top.clone() * rat_int((ii - 1) * (gi - ii)) / rat_int(gi - 2);
        let from_b1 =
            b1.clone() * rat_int((gi - ii - 1) * (gi - ii)) / rat_int((gi - 2) * (gi - 1));
        eps.insert(i, -b(i)? + from_top + from_b1);
    }
    Ok(Eps0Class { g, eps })
}

/// Solves the full relation system for the Prym divisor class at
/// `g = r(r+1)/2`, normalized to `a = g+1`:
///
/// ```text
///   a - 12 b_0' + b_{g-1} = 0
///   a - 4 b_0'' - 4 b_0^ram + b_1 = 0
///   b_i = (i-1)(g-i)/(g-2) b_{g-1} + (g-i-1)(g-i)/((g-1)(g-2)) b_1
///   b_{g-2} = 30 b_0' - 3a
///   a/b_0' = 6 + 6/g          a/b_0'' = (8g+8)/(g^2-g+2)
/// ```
///
/// The two slopes fix `b_0'` and `b_0''`, the first relation fixes
/// `b_{g-1}`, interpolation at `i = g-2` fixes `b_1`, the second relation
/// fixes `b_0^ram`; everything left over is asserted, not imposed. The
/// `b_{i:g-i}` slots stay undetermined.
pub fn solve_prym_class(r: u32) -> Result<PrymDivisorClass, DivisorError> {
    if r < 3 {
        return Err(DivisorError::InvalidParameter("needs r >= 3".into()));
    }
    let g = r * (r + 1) / 2;
    let gi = g as i64;
    let a = rat_int(gi + 1);
    let b0p = a.clone() * rat_int(gi) / rat_int(6 * gi + 6);
    let b0pp = a.clone() * rat_int(gi * gi - gi + 2) / rat_int(8 * gi + 8);
    let b_top = rat_int(12) * b0p.clone() - a.clone();
    // interpolation at i = g-2 combined with b_{g-2} = 30 b_0' - 3a
    let interp_top = |i: i64, top: &Rational| top.clone() * rat_int((i - 1) * (gi - i)) / rat_int(gi - 2);
    let interp_b1 = |i: i64, b1: &Rational| {
        b1.clone() * rat_int((gi - i - 1) * (gi - i)) / rat_int((gi - 1) * (gi - 2))
    };
    let target = rat_int(30) * b0p.clone() - rat_int(3) * a.clone();
    let b1 = (target.clone() - interp_top(gi - 2, &b_top)) * rat_int((gi - 1) * (gi - 2))
        / rat_int(2);
    let b0ram = (a.clone() + b1.clone() - rat_int(4) * b0pp.clone()) / rat_int(4);

    let mut b = BTreeMap::new();
    for i in 1..g {
        b.insert(i, interp_top(i as i64, &b_top) + interp_b1(i as i64, &b1));
    }

    let class = PrymDivisorClass {
        g,
        a,
        b0p,
        b0pp,
        b0ram,
        b,
        b_mixed: (1..=g / 2).map(|i| (i, None)).collect(),
    };
    assert_prym_relations(&class)?;
    Ok(class)
}

/// Checks every relation of the system on an already-built class.
pub fn assert_prym_relations(x: &PrymDivisorClass) -> Result<(), DivisorError> {
    let g = x.g as i64;
    let b = |i: i64| x.b[&(i as u32)].clone();
    let fail = |what: &str| Err(DivisorError::Inconsistent(what.to_string()));

    if &x.a - rat_int(12) * &x.b0p + b(g - 1) != Rational::zero() {
        return fail("a - 12 b_0' + b_{g-1} = 0");
    }
    if &x.a - rat_int(4) * &x.b0pp - rat_int(4) * &x.b0ram + b(1) != Rational::zero() {
        return fail("a - 4 b_0'' - 4 b_0^ram + b_1 = 0");
    }
    for i in 1..g {
        let interp = b(g - 1) * rat_int((i - 1) * (g - i)) / rat_int(g - 2)
            + b(1) * rat_int((g - i - 1) * (g - i)) / rat_int((g - 1) * (g - 2));
        if b(i) != interp {
            return fail("b_i interpolation");
        }
    }
    if b(g - 2) != rat_int(30) * &x.b0p - rat_int(3) * &x.a {
        return fail("b_{g-2} = 30 b_0' - 3a");
    }
    if &x.a / &x.b0p != rat_int(6) + rat_int(6) / rat_int(g) {
        return fail("slope a/b_0' = 6 + 6/g");
    }
    if &x.a / &x.b0pp != rat_int(8 * g + 8) / rat_int(g * g - g + 2) {
        return fail("slope a/b_0'' = (8g+8)/(g^2-g+2)");
    }
    if &x.a / &x.b0ram != rat_int(4) + rat_int(4) / rat_int(g) {
        return fail("slope a/b_0^ram = 4 + 4/g");
    }
    // closed forms
    if x.b0p != rat_int(g) / rat_int(6)
        || x.b0pp != rat_int(g * g - g + 2) / rat_int(8)
        || x.b0ram != rat_int(g) / rat_int(4)
    {
        return fail("delta_0 closed forms");
    }
    for i in 1..g {
        if b(i) != rat_int((g - i) * (g + i - 1)) / rat_int(2) {
            return fail("b_i = (g-i)(g+i-1)/2");
        }
    }
    Ok(())
}

/// The three slopes `(a/b_0', a/b_0'', a/b_0^ram)`.
pub fn slopes(
    x: &PrymDivisorClass,
) -> Result<(Rational, Rational, Rational), DivisorError> {
    for (name, denom) in [("b_0'", &x.b0p), ("b_0''", &x.b0pp), ("b_0^ram", &x.b0ram)] {
        if denom.is_zero() {
            return Err(DivisorError::ZeroDenominator(name.to_string()));
        }
    }
    Ok((&x.a / &x.b0p, &x.a / &x.b0pp, &x.a / &x.b0ram))
}

/// Exact data behind the `mu`/`nu` decomposition of the 1-pointed
/// Brill-Noether divisor with vanishing sequence `(0, 2, ..., 2r)` at the
/// marked point (`g = r(r+1)/2`, classes on genus `g-1` curves).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuNuData {
    pub g: u32,
    pub n: Rational,
    pub sigma: Rational,
    pub mu: Rational,
    pub nu: Rational,
}

/// Computes `n`, `Sigma`, `mu`, `nu` from their displayed closed forms:
///
/// ```text
///   n     = (g-1)! 2^{r(r+1)/2} (r-1)r^2(r+1)^2(r+2)/16 prod_i i!/(2i)!
///   Sigma = (g-2)! 2^{r(r+1)/2} prod_j j!/(2j)! 2^{1-2r}
///              sum_i (2i)!(2r-2i+1)! / ((r-i)!^2 i! (i-1)!) P(r,i)
///   mu    = -n/(2g(g-2)) + Sigma/(2(g-2)(g-3))
///   nu    = n/((g-2)(g-1)g)
/// ```
pub fn mu_nu_data(r: u32) -> MuNuData {
    assert!(r >= 3, "mu/nu need r >= 3");
    let g = r * (r + 1) / 2;
    let gi = g as i64;
    let ri = r as i64;

    let mut shared = rat_int(BigInt::from(2).pow((r * (r + 1) / 2) as u32));
    for i in 1..=ri {
        shared *= rat_int(factorial(i));
        shared /= rat_int(factorial(2 * i));
    }

    let n = rat_int(factorial(gi - 1))
        * shared.clone()
        * rat_int((ri - 1) * ri * ri * (ri + 1) * (ri + 1) * (ri + 2))
        / rat_int(16);

    let mut inner = Rational::zero();
    for i in 1..=ri {
        let weight = rat_int(factorial(2 * i) * factorial(2 * ri - 2 * i + 1))
            / rat_int(
                factorial(ri - i) * factorial(ri - i) * factorial(i) * factorial(i - 1),
            );
        inner += weight * crate::exactnum::p_polynomial(ri, i);
    }
    let sigma = rat_int(factorial(gi - 2)) * shared
        / rat_int(BigInt::from(2).pow((2 * r - 1) as u32))
        * inner;

    let mu = -n.clone() / rat_int(2 * gi * (gi - 2))
        + sigma.clone() / rat_int(2 * (gi - 2) * (gi - 3));
    let nu = n.clone() / rat_int((gi - 2) * (gi - 1) * gi);
    MuNuData {
        g,
        n,
        sigma,
        mu,
        nu,
    }
}

/// `(mu, nu)` only.
pub fn mu_nu(r: u32) -> (Rational, Rational) {
    let data = mu_nu_data(r);
    (data.mu, data.nu)
}

/// The 1-pointed Brill-Noether divisor class `mu BN_{g-1} + nu W_{g-1}` on
/// genus `g-1` curves, with
/// `BN = (g+2) lambda - g/6 delta_0 - sum i(g-i-1) delta_i` and
/// `W = g(g-1)/2 psi - lambda - sum C(g-i, 2) delta_i`.
pub fn pointed_bn_class(r: u32) -> OnePointedClass {
    let data = mu_nu_data(r);
    let g = data.g as i64;
    let h = data.g - 1;
    let psi = data.nu.clone() * rat_int(g * (g - 1)) / rat_int(2);
    let lambda = data.mu.clone() * rat_int(g + 2) - data.nu.clone();
    let mut delta = BTreeMap::new();
    delta.insert(0, -(data.mu.clone() * rat_int(g) / rat_int(6)));
    for i in 1..=(h - 1) {
        let ii = i as i64;
        let bn = data.mu.clone() * rat_int(ii * (g - ii - 1));
        let w = data.nu.clone() * crate::exactnum::binomial(g - ii, 2);
        delta.insert(i, -(bn + w));
    }
    OnePointedClass {
        h,
        psi,
        lambda,
        delta,
    }
}

/// Closed-form scale of the 2-pointed strongly Brill-Noether divisor:
/// `(g+1)!/(g-1) * 2^{g-1} prod_i i!/(2i)!`.
pub fn strongly_bn_scale(r: u32) -> Rational {
    let g = (r * (r + 1) / 2 - 1) as i64;
    let mut c = rat_int(factorial(g + 1)) / rat_int(g - 1)
        * rat_int(BigInt::from(2).pow((g - 1) as u32));
    for i in 1..=(r as i64) {
        c *= rat_int(factorial(i));
        c /= rat_int(factorial(2 * i));
    }
    c
}

/// The 2-pointed strongly Brill-Noether divisor class at `g = r(r+1)/2 - 1`:
/// `a_1 = a_2 = (g^2+g+2)/8`, `a = g+2`, `b_0 = (g+1)/6`,
/// `b_{i,{1,2}} = (g-i)(g+i+1)/2`, `b_{i,1}` undetermined, scale from
/// [`strongly_bn_scale`]. Also asserts the internal identity
/// `a_1 = (g^2+g+2)/(4g(g+1)) b_{0,{1,2}}`.
pub fn strongly_bn_class(r: u32) -> Result<PointedDivisorClass2, DivisorError> {
    if r < 3 {
        return Err(DivisorError::InvalidParameter("needs r >= 3".into()));
    }
    let g = r * (r + 1) / 2 - 1;
    let gi = g as i64;
    let a1 = rat_int(gi * gi + gi + 2) / rat_int(8);
    let b_12: BTreeMap<u32, Rational> = (0..g)
        .map(|i| {
            let ii = i as i64;
            (i, rat_int((gi - ii) * (gi + ii + 1)) / rat_int(2))
        })
        .collect();
    let ratio = rat_int(gi * gi + gi + 2) / rat_int(4 * gi * (gi + 1));
    if a1 != ratio * b_12[&0].clone() {
        return Err(DivisorError::Inconsistent(
            "a_1 = (g^2+g+2)/(4g(g+1)) b_{0,{1,2}}".into(),
        ));
    }
    Ok(PointedDivisorClass2 {
        g,
        a1: a1.clone(),
        a2: a1,
        a: rat_int(gi + 2),
        b0: rat_int(gi + 1) / rat_int(6),
        b_12,
        b_1: (1..g).map(|i| (i, None)).collect(),
        c_scale: Some(strongly_bn_scale(r)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn prym_class_r3_matches_known_coefficients() {
        let q = solve_prym_class(3).unwrap();
        assert_eq!(q.g, 6);
        assert_eq!(q.a, rat_int(7));
        assert_eq!(q.b0p, rat_int(1));
        assert_eq!(q.b0pp, rat_int(4));
        assert_eq!(q.b0ram, rat(3, 2));
        let expected = [15, 14, 12, 9, 5];
        for (i, want) in (1..=5).zip(expected) {
            assert_eq!(q.b[&i], rat_int(want), "b_{i}");
        }
        assert!(q.b_mixed.values().all(|v| v.is_none()));
    }

    #[test]
    fn prym_closed_forms_hold() {
        for r in 3..=10 {
            let class = solve_prym_class(r).unwrap();
            let g = class.g as i64;
            assert_eq!(class.a, rat_int(g + 1));
            assert_eq!(class.b0p, rat_int(g) / rat_int(6));
            assert_eq!(class.b0ram, rat_int(g) / rat_int(4));
            assert_eq!(class.b0pp, rat_int(g * g - g + 2) / rat_int(8));
            for i in 1..g {
                assert_eq!(class.b[&(i as u32)], rat_int((g - i) * (g + i - 1)) / rat_int(2));
            }
            assert!(assert_prym_relations(&class).is_ok());
        }
    }

    #[test]
    fn slope_values() {
        let q3 = solve_prym_class(3).unwrap();
        assert_eq!(slopes(&q3).unwrap(), (rat_int(7), rat(7, 4), rat(14, 3)));
        let q4 = solve_prym_class(4).unwrap();
        assert_eq!(
            slopes(&q4).unwrap(),
            (rat(33, 5), rat(22, 23), rat(22, 5))
        );
        // a/b_0' - a/b_0^ram = 2 + 2/g
        for r in 3..=8 {
            let class = solve_prym_class(r).unwrap();
            let (s1, _, s3) = slopes(&class).unwrap();
            let g = class.g as i64;
            assert_eq!(s1 - s3, rat_int(2) + rat_int(2) / rat_int(g));
        }
    }

    #[test]
    fn slope_zero_denominator() {
        let zero = PrymDivisorClass::zero(6);
        assert!(matches!(
            slopes(&zero),
            Err(DivisorError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn pullback_examples() {
        let g = 6;
        let pure2 = PrymDivisorClass::pure(g, PicGen::Delta(2)).unwrap();
        let pulled = pullback_to_genus0(&pure2).unwrap();
        assert_eq!(pulled.eps[&2], rat_int(1));
        assert!(pulled.eps.iter().filter(|(i, _)| **i != 2).all(|(_, v)| v.is_zero()));

        let lam = PrymDivisorClass::pure(g, PicGen::Lambda).unwrap();
        assert!(pullback_to_genus0(&lam)
            .unwrap()
            .eps
            .values()
            .all(|v| v.is_zero()));

        let top = PrymDivisorClass::pure(g, PicGen::Delta(g - 1)).unwrap();
        let pulled = pullback_to_genus0(&top).unwrap();
        assert_eq!(pulled.eps[&2], rat_int(-1));
    }

    #[test]
    fn solved_class_pulls_back_to_zero() {
        // the interpolation relation is exactly the vanishing of this pullback
        for r in 3..=6 {
            let class = solve_prym_class(r).unwrap();
            let pulled = pullback_to_genus0(&class).unwrap();
            assert!(pulled.eps.values().all(|v| v.is_zero()), "r={r}");
        }
    }

    #[test]
    fn mu_nu_r3_values() {
        let data = mu_nu_data(3);
        assert_eq!(data.n, rat_int(240));
        assert_eq!(data.sigma, rat_int(168));
        assert_eq!(data.mu, rat_int(2));
        assert_eq!(data.nu, rat_int(2));
    }

    #[test]
    fn mu_equals_nu_and_sigma_relation() {
        for r in 3..=8 {
            let data = mu_nu_data(r);
            assert_eq!(data.mu, data.nu, "r={r}");
            let g = data.g as i64;
            assert_eq!(
                data.sigma,
                rat_int((g + 1) * (g - 3)) / rat_int(g * (g - 1)) * data.n.clone(),
                "r={r}"
            );
        }
    }

    #[test]
    fn pointed_bn_coefficients() {
        for r in 3..=6 {
            let data = mu_nu_data(r);
            let class = pointed_bn_class(r);
            let g = data.g as i64;
            assert_eq!(class.h, data.g - 1);
            // lambda = mu(g+2) - nu = mu(g+1) because mu = nu
            assert_eq!(class.lambda, data.mu.clone() * rat_int(g + 1));
            assert_eq!(class.psi, data.nu.clone() * rat_int(g * (g - 1)) / rat_int(2));
            assert_eq!(class.delta[&0], -(data.mu.clone() * rat_int(g) / rat_int(6)));
        }
    }

    #[test]
    fn strongly_bn_r3_values() {
        let class = strongly_bn_class(3).unwrap();
        assert_eq!(class.g, 5);
        assert_eq!(class.a1, rat_int(4));
        assert_eq!(class.a2, rat_int(4));
        assert_eq!(class.a, rat_int(7));
        assert_eq!(class.b0, rat_int(1));
        assert_eq!(class.b_12[&0], rat_int(15));
        assert_eq!(class.c_scale, Some(rat_int(1)));
        assert!(class.b_1.values().all(|v| v.is_none()));
    }

    #[test]
    fn strongly_bn_closed_forms() {
        for r in 3..=10 {
            let class = strongly_bn_class(r).unwrap();
            let g = class.g as i64;
            assert_eq!(class.a1, rat_int(g * g + g + 2) / rat_int(8));
            assert_eq!(class.a, rat_int(g + 2));
            assert_eq!(class.b0, rat_int(g + 1) / rat_int(6));
            for (i, v) in &class.b_12 {
                let ii = *i as i64;
                assert_eq!(*v, rat_int((g - ii) * (g + ii + 1)) / rat_int(2));
            }
        }
    }

    #[test]
    fn unknown_coefficients_fail_loudly() {
        let class = solve_prym_class(3).unwrap();
        assert!(matches!(
            class.coefficient(&PicGen::DeltaMixed(1)),
            Err(DivisorError::Unknown(_))
        ));
        let sb = strongly_bn_class(3).unwrap();
        assert!(matches!(
            sb.coefficient(&PicGen::DeltaFirst(1)),
            Err(DivisorError::Unknown(_))
        ));
    }
}
