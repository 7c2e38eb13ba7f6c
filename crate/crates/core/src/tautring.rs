//! Model of the even-degree tautological subring of the cohomology of
//! `C x C x Pic` and `C x C x C x Pic` for a smooth curve `C` of genus `g`.
//!
//! Generators are the point classes `eta_i` on the curve factors, the cross
//! classes `gamma_ij` (one index a curve factor, the other a curve factor or
//! the Picard factor), and the polarization class `theta` on the Picard
//! factor. Every class is stored as an exact-rational combination of
//! normal-form monomials. The rewrite system is:
//!
//! ```text
//!   eta_i^2           = 0
//!   eta_i gamma_il    = 0
//!   gamma_ij^2        = -2g eta_i eta_j      (both indices curve factors)
//!   gamma_iP^2        = -2  eta_i theta      (P the Picard factor)
//!   gamma_ij gamma_il = eta_i gamma_jl       (shared curve index i)
//! ```
//!
//! with `theta` commuting freely. Rewrites are applied in a fixed order:
//! curve-index-sharing gamma pairs first, then gamma squares, then eta-gamma
//! annihilations, then eta squares. Each sharing step lowers the gamma count
//! and each square removes two gammas, so the loop terminates; confluence is
//! checked exhaustively over generator triples in the test suite.
//!
//! Signs are anchored twice: the diagonal class `eta_2 + gamma_23 + eta_3`
//! must square to `(2-2g) eta_2 eta_3`, and the degree-1 piece of the
//! pushed-forward twisted Chern character must come out as
//! `i(r+1+ig-2i)(eta_2+eta_3) + i(gamma_24+gamma_34) - i^2 gamma_23`. Both
//! anchors are enforced by tests.

use crate::exactnum::{factorial, rat_int, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Display index of the Picard factor (the paper-style label `4`, kept for
/// both the three-curve-factor ring and its factor-1 pushforward image).
pub const PIC_INDEX: u8 = 4;

/// Index pairs a `gamma` can carry, in canonical order.
const PAIRS: [(u8, u8); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(RingSignature, RingSignature),
    #[error("invalid signature: curve factor count must be 2 or 3, got {0}")]
    InvalidFactorCount(u8),
    #[error("index {0} is not a curve factor of {1}")]
    InvalidCurveIndex(u8, RingSignature),
    #[error("invalid gamma pair ({0},{1}) for {2}")]
    InvalidGammaPair(u8, u8, RingSignature),
    #[error("exponential argument has a degree-0 part")]
    DegreeZeroPart,
    #[error("exponential argument contains theta")]
    ThetaInExponent,
}

/// Ambient ring: `k` curve factors (2 or 3) times the Picard factor, genus `g`.
///
/// The three-factor ring uses curve indices 1, 2, 3; its factor-1 pushforward
/// image keeps the labels 2, 3 (and the Picard label 4) fixed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RingSignature {
    curve_factors: u8,
    genus: u32,
}

impl RingSignature {
    pub fn new(curve_factors: u8, genus: u32) -> Result<Self, RingError> {
        if curve_factors != 2 && curve_factors != 3 {
            return Err(RingError::InvalidFactorCount(curve_factors));
        }
        Ok(RingSignature {
            curve_factors,
            genus,
        })
    }

    pub fn curve_factors(&self) -> u8 {
        self.curve_factors
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Curve factor labels: `1, 2, 3` for the three-factor ring, `2, 3` for
    /// the two-factor ring.
    pub fn curve_indices(&self) -> &'static [u8] {
        match self.curve_factors {
            3 => &[1, 2, 3],
            _ => &[2, 3],
        }
    }

    pub fn has_curve_index(&self, i: u8) -> bool {
        self.curve_indices().contains(&i)
    }

    /// Complex dimension of the ambient variety, `k + g`.
    pub fn dimension(&self) -> u32 {
        self.curve_factors as u32 + self.genus
    }
}

impl fmt::Display for RingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^{} x Pic (genus {})", self.curve_factors, self.genus)
    }
}

/// Normal-form monomial `eta_S * gamma_T * theta^t`.
///
/// `etas` is a bitmask over curve indices 1..=3, `gammas` a bitmask over
/// [`PAIRS`]. Normal form guarantees: no repeated factor, no gamma sharing an
/// index with a present eta, and no two gammas sharing a curve index (two
/// gammas may share the Picard index).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TautMonomial {
    theta: u16,
    etas: u8,
    gammas: u8,
}

impl TautMonomial {
    pub const ONE: TautMonomial = TautMonomial {
        theta: 0,
        etas: 0,
        gammas: 0,
    };

    /// Half the cohomological degree (every generator sits in H^2).
    pub fn weight(&self) -> u32 {
        self.theta as u32 + self.etas.count_ones() + self.gammas.count_ones()
    }

    pub fn theta_power(&self) -> u16 {
        self.theta
    }

    fn has_eta(&self, i: u8) -> bool {
        self.etas & (1 << (i - 1)) != 0
    }

    fn gamma_pairs(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        PAIRS
            .iter()
            .enumerate()
            .filter(|(idx, _)| self.gammas & (1 << idx) != 0)
            .map(|(_, &p)| p)
    }

    /// The pure theta-power monomial `theta^t`.
    pub fn theta_pure(t: u16) -> TautMonomial {
        TautMonomial {
            theta: t,
            etas: 0,
            gammas: 0,
        }
    }

    fn render(&self) -> String {
        let mut parts = Vec::new();
        for i in 1..=3u8 {
            if self.has_eta(i) {
                parts.push(format!("eta{i}"));
            }
        }
        for (i, j) in self.gamma_pairs() {
            parts.push(format!("gamma{i}{j}"));
        }
        match self.theta {
            0 => {}
            1 => parts.push("theta".to_string()),
            t => parts.push(format!("theta^{t}")),
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn pair_index(i: u8, j: u8) -> usize {
    let key = if i < j { (i, j) } else { (j, i) };
    PAIRS.iter().position(|&p| p == key).expect("valid pair")
}

/// Multiset product of two normal monomials, rewritten back to normal form.
/// Returns `None` when the product is zero.
fn monomial_mul(a: &TautMonomial, b: &TautMonomial, genus: u32) -> Option<(BigInt, TautMonomial)> {
    let mut theta = a.theta as u32 + b.theta as u32;
    let mut coeff = BigInt::one();
    let mut eta = [0u8; 3];
    for i in 1..=3u8 {
        eta[(i - 1) as usize] = a.has_eta(i) as u8 + b.has_eta(i) as u8;
    }
    let mut gam = [0u8; 6];
    for idx in 0..6 {
        gam[idx] = ((a.gammas >> idx) & 1) + ((b.gammas >> idx) & 1);
    }

    // Shared curve index of two (possibly equal) pairs, if any.
    let shared_curve = |p: usize, q: usize| -> Option<u8> {
        let (pi, pj) = PAIRS[p];
        let (qi, qj) = PAIRS[q];
        for c in [pi, pj] {
            if c != PIC_INDEX && (c == qi || c == qj) {
                return Some(c);
            }
        }
        None
    };

    loop {
        // distinct gamma pairs sharing a curve index: gamma_ij gamma_il = eta_i gamma_jl
        let mut applied = false;
        'sharing: for p in 0..6 {
            if gam[p] == 0 {
                continue;
            }
            for q in (p + 1)..6 {
                if gam[q] == 0 {
                    continue;
                }
                if let Some(c) = shared_curve(p, q) {
                    gam[p] -= 1;
                    gam[q] -= 1;
                    eta[(c - 1) as usize] += 1;
                    let rest: Vec<u8> = [PAIRS[p].0, PAIRS[p].1, PAIRS[q].0, PAIRS[q].1]
                        .into_iter()
                        .filter(|&x| x != c)
                        .collect();
                    debug_assert_eq!(rest.len(), 2);
                    gam[pair_index(rest[0], rest[1])] += 1;
                    applied = true;
                    break 'sharing;
                }
            }
        }
        if applied {
            continue;
        }
        // gamma squares
        if let Some(p) = (0..6).find(|&p| gam[p] >= 2) {
            gam[p] -= 2;
            let (i, j) = PAIRS[p];
            eta[(i - 1) as usize] += 1;
            if j == PIC_INDEX {
                coeff *= -2;
                theta += 1;
            } else {
                coeff *= BigInt::from(-2i64 * genus as i64);
                eta[(j - 1) as usize] += 1;
            }
            continue;
        }
        break;
    }

    // eta-gamma annihilation
    for p in 0..6 {
        if gam[p] == 0 {
            continue;
        }
        let (i, j) = PAIRS[p];
        if eta[(i - 1) as usize] > 0 || (j != PIC_INDEX && eta[(j - 1) as usize] > 0) {
            return None;
        }
    }
    // eta squares
    if eta.iter().any(|&c| c >= 2) {
        return None;
    }

    let etas = eta
        .iter()
        .enumerate()
        .fold(0u8, |m, (i, &c)| if c == 1 { m | (1 << i) } else { m });
    let gammas = (0..6).fold(0u8, |m, p| if gam[p] == 1 { m | (1 << p) } else { m });
    Some((
        coeff,
        TautMonomial {
            theta: theta as u16,
            etas,
            gammas,
        },
    ))
}

/// Finite exact-rational combination of normal-form monomials.
///
/// Values are immutable after construction; all operations are pure, so
/// classes can be shared freely across threads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TautClass {
    signature: RingSignature,
    terms: BTreeMap<TautMonomial, Rational>,
}

impl TautClass {
    pub fn zero(signature: RingSignature) -> Self {
        TautClass {
            signature,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(signature: RingSignature) -> Self {
        Self::scalar(signature, Rational::one())
    }

    pub fn scalar(signature: RingSignature, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(TautMonomial::ONE, value);
        }
        TautClass { signature, terms }
    }

    /// The point class on curve factor `i`.
    pub fn eta(signature: RingSignature, i: u8) -> Result<Self, RingError> {
        if !signature.has_curve_index(i) {
            return Err(RingError::InvalidCurveIndex(i, signature));
        }
        let m = TautMonomial {
            theta: 0,
            etas: 1 << (i - 1),
            gammas: 0,
        };
        Ok(Self::monomial(signature, m))
    }

    /// The cross class `gamma_ij`; `j` may be a curve factor or [`PIC_INDEX`].
    pub fn gamma(signature: RingSignature, i: u8, j: u8) -> Result<Self, RingError> {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let lo_ok = signature.has_curve_index(lo);
        let hi_ok = hi == PIC_INDEX || signature.has_curve_index(hi);
        if !lo_ok || !hi_ok || lo == hi {
            return Err(RingError::InvalidGammaPair(i, j, signature));
        }
        let m = TautMonomial {
            theta: 0,
            etas: 0,
            gammas: 1 << pair_index(lo, hi),
        };
        Ok(Self::monomial(signature, m))
    }

    /// The polarization class on the Picard factor.
    pub fn theta(signature: RingSignature) -> Self {
        Self::monomial(signature, TautMonomial::theta_pure(1))
    }

    /// `theta^t` as a class.
    pub fn theta_power(signature: RingSignature, t: u16) -> Self {
        Self::monomial(signature, TautMonomial::theta_pure(t))
    }

    fn monomial(signature: RingSignature, m: TautMonomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, Rational::one());
        TautClass { signature, terms }
    }

    /// Single-term class from a monomial already in normal form (e.g. one
    /// obtained from [`TautClass::terms`]).
    pub fn from_monomial(signature: RingSignature, m: TautMonomial, coeff: Rational) -> Self {
        let mut out = Self::zero(signature);
        out.insert(m, coeff);
        out
    }

    pub fn signature(&self) -> RingSignature {
        self.signature
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TautMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &TautMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the pure power `theta^t`.
    pub fn theta_coefficient(&self, t: u16) -> Rational {
        self.coefficient(&TautMonomial::theta_pure(t))
    }

    fn insert(&mut self, m: TautMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.signature);
        }
        TautClass {
            signature: self.signature,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c * factor))
                .collect(),
        }
    }

    /// Exact product; errors when the operands live in different rings.
    pub fn multiply(&self, other: &TautClass) -> Result<TautClass, RingError> {
        if self.signature != other.signature {
            return Err(RingError::SignatureMismatch(
                self.signature,
                other.signature,
            ));
        }
        let genus = self.signature.genus;
        let mut out = TautClass::zero(self.signature);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((k, m)) = monomial_mul(ma, mb, genus) {
                    out.insert(m, ca * cb * rat_int(k));
                }
            }
        }
        Ok(out)
    }

    /// Piece of homogeneous weight `w` (cohomological degree `2w`).
    pub fn weight_part(&self, w: u32) -> Self {
        TautClass {
            signature: self.signature,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == w)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|m| m.weight()).max().unwrap_or(0)
    }

    /// Drops every monomial of weight strictly above `cap`.
    pub fn truncate_above(&self, cap: u32) -> Self {
        TautClass {
            signature: self.signature,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() <= cap)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of_weight(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    /// `exp(x) = sum x^n / n!`, truncated at weight `degree_cap`.
    ///
    /// The argument must have no degree-0 part and must be theta-free; both
    /// conditions are what make the sum finite before the cap is reached.
    pub fn exp_nilpotent(&self, degree_cap: u32) -> Result<TautClass, RingError> {
        if self.terms.contains_key(&TautMonomial::ONE) {
            return Err(RingError::DegreeZeroPart);
        }
        if self.terms.keys().any(|m| m.theta > 0) {
            return Err(RingError::ThetaInExponent);
        }
        let mut sum = TautClass::one(self.signature);
        let mut term = TautClass::one(self.signature);
        let mut n: i64 = 1;
        loop {
            term = term
                .multiply(self)?
                .truncate_above(degree_cap)
                .scale(&rat(1, n));
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
            n += 1;
            // theta-free arguments are nilpotent; the cap is a second fence
            if n as u32 > degree_cap + 1 {
                break;
            }
        }
        Ok(sum)
    }

    /// Integrates out the first curve factor of the three-factor ring:
    /// monomials containing `eta_1` lose it, everything else dies. Labels
    /// 2, 3 and the Picard label stay fixed.
    pub fn pushforward_factor1(&self) -> TautClass {
        assert_eq!(
            self.signature.curve_factors, 3,
            "pushforward_factor1 needs the three-curve-factor ring"
        );
        let sig = RingSignature::new(2, self.signature.genus).expect("valid");
        let mut out = TautClass::zero(sig);
        for (m, c) in &self.terms {
            if m.has_eta(1) {
                let stripped = TautMonomial {
                    theta: m.theta,
                    etas: m.etas & !1,
                    gammas: m.gammas,
                };
                out.insert(stripped, c.clone());
            }
        }
        out
    }

    /// Reinterprets a two-factor class inside the three-factor ring (the
    /// section of the factor-1 projection on classes free of factor-1 data).
    pub fn lift_to_three_factors(&self) -> TautClass {
        assert_eq!(self.signature.curve_factors, 2, "lift starts from k = 2");
        let sig = RingSignature::new(3, self.signature.genus).expect("valid");
        TautClass {
            signature: sig,
            terms: self.terms.clone(),
        }
    }

    /// Integral over `C x C x Pic`: `g!` times the coefficient of
    /// `eta_2 eta_3 theta^g`. Every other monomial pairs an odd class with
    /// nothing and integrates to zero.
    pub fn integrate(&self) -> Rational {
        assert_eq!(
            self.signature.curve_factors, 2,
            "integrate needs the two-curve-factor ring"
        );
        let g = self.signature.genus;
        let top = TautMonomial {
            theta: g as u16,
            etas: 0b110,
            gammas: 0,
        };
        self.coefficient(&top) * rat_int(factorial(g as i64))
    }

    /// Sorted `(monomial, coefficient)` string pairs, e.g.
    /// `("eta2*eta3*theta^5", "7/2")`. Used by golden-file tests and the
    /// debug emitters.
    pub fn debug_pairs(&self) -> Vec<(String, String)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.render(), c.to_string()))
            .collect()
    }
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl fmt::Display for TautClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == TautMonomial::ONE {
                    c.to_string()
                } else if c.is_one() {
                    m.render()
                } else {
                    format!("{c}*{}", m.render())
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

impl Add for &TautClass {
    type Output = TautClass;
    fn add(self, rhs: &TautClass) -> TautClass {
        assert_eq!(self.signature, rhs.signature, "signature mismatch in +");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(*m, c.clone());
        }
        out
    }
}

impl Sub for &TautClass {
    type Output = TautClass;
    fn sub(self, rhs: &TautClass) -> TautClass {
        assert_eq!(self.signature, rhs.signature, "signature mismatch in -");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(*m, -c.clone());
        }
        out
    }
}

impl Neg for &TautClass {
    type Output = TautClass;
    fn neg(self) -> TautClass {
        self.scale(&-Rational::one())
    }
}

impl Mul for &TautClass {
    type Output = TautClass;
    fn mul(self, rhs: &TautClass) -> TautClass {
        self.multiply(rhs).expect("signature mismatch in *")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_int;
    use proptest::prelude::*;

    fn k3(g: u32) -> RingSignature {
        RingSignature::new(3, g).unwrap()
    }

    fn k2(g: u32) -> RingSignature {
        RingSignature::new(2, g).unwrap()
    }

    /// All ten generator classes of the three-factor ring.
    fn generators(sig: RingSignature) -> Vec<TautClass> {
        let mut gens = Vec::new();
        for &i in sig.curve_indices() {
            gens.push(TautClass::eta(sig, i).unwrap());
        }
        let idx = sig.curve_indices();
        for a in 0..idx.len() {
            for b in (a + 1)..idx.len() {
                gens.push(TautClass::gamma(sig, idx[a], idx[b]).unwrap());
            }
        }
        for &i in idx {
            gens.push(TautClass::gamma(sig, i, PIC_INDEX).unwrap());
        }
        gens.push(TautClass::theta(sig));
        gens
    }

    #[test]
    fn gamma_sq_curve_curve() {
        let g = 7;
        let sig = k2(g);
        let g23 = TautClass::gamma(sig, 2, 3).unwrap();
        let e2 = TautClass::eta(sig, 2).unwrap();
        let e3 = TautClass::eta(sig, 3).unwrap();
        let expected = (&e2 * &e3).scale(&rat_int(-2 * g as i64));
        assert_eq!(&g23 * &g23, expected);
    }

    #[test]
    fn diagonal_square_matches_self_intersection() {
        // [Delta] = eta2 + gamma23 + eta3 and Delta^2 = (2-2g) * point
        for g in [2u32, 5, 9] {
            let sig = k2(g);
            let diag = &(&TautClass::eta(sig, 2).unwrap() + &TautClass::gamma(sig, 2, 3).unwrap())
                + &TautClass::eta(sig, 3).unwrap();
            let point =
                &TautClass::eta(sig, 2).unwrap() * &TautClass::eta(sig, 3).unwrap();
            assert_eq!(&diag * &diag, point.scale(&rat_int(2 - 2 * g as i64)));
        }
    }

    #[test]
    fn gamma_products_examples() {
        let sig = k2(5);
        let g24 = TautClass::gamma(sig, 2, PIC_INDEX).unwrap();
        let g34 = TautClass::gamma(sig, 3, PIC_INDEX).unwrap();
        let g23 = TautClass::gamma(sig, 2, 3).unwrap();
        // gamma24 * gamma34 is already normal
        let prod = &g24 * &g34;
        assert_eq!(prod.term_count(), 1);
        assert_eq!(prod.debug_pairs(), vec![("gamma24*gamma34".into(), "1".into())]);
        // gamma23 * (gamma24 gamma34) = -2 eta2 eta3 theta
        let triple = &g23 * &prod;
        assert_eq!(
            triple.debug_pairs(),
            vec![("eta2*eta3*theta".into(), "-2".into())]
        );
    }

    #[test]
    fn eta_annihilations() {
        let sig = k3(4);
        let e1 = TautClass::eta(sig, 1).unwrap();
        let g12 = TautClass::gamma(sig, 1, 2).unwrap();
        assert!((&e1 * &e1).is_zero());
        assert!((&e1 * &g12).is_zero());
    }

    #[test]
    fn exp_examples() {
        let sig = k3(6);
        let e1 = TautClass::eta(sig, 1).unwrap();
        let exp = e1.exp_nilpotent(10).unwrap();
        assert_eq!(&exp, &(&TautClass::one(sig) + &e1));

        // exp(c (eta2+eta3)) = 1 + c(eta2+eta3) + c^2 eta2 eta3
        let c = rat_int(3);
        let arg = (&TautClass::eta(sig, 2).unwrap() + &TautClass::eta(sig, 3).unwrap()).scale(&c);
        let exp = arg.exp_nilpotent(10).unwrap();
        let expected = &(&TautClass::one(sig) + &arg)
            + &(&TautClass::eta(sig, 2).unwrap() * &TautClass::eta(sig, 3).unwrap())
                .scale(&(c.clone() * c));
        assert_eq!(exp, expected);
    }

    #[test]
    fn exp_rejects_bad_arguments() {
        let sig = k3(6);
        assert_eq!(
            TautClass::one(sig).exp_nilpotent(5),
            Err(RingError::DegreeZeroPart)
        );
        assert_eq!(
            TautClass::theta(sig).exp_nilpotent(5),
            Err(RingError::ThetaInExponent)
        );
    }

    #[test]
    fn pushforward_examples() {
        let sig = k3(5);
        let theta3 = &(&TautClass::theta(sig) * &TautClass::theta(sig)) * &TautClass::theta(sig);
        let e1 = TautClass::eta(sig, 1).unwrap();
        // eta1 theta^3 -> theta^3
        let pushed = (&e1 * &theta3).pushforward_factor1();
        assert_eq!(pushed.theta_coefficient(3), rat_int(1));
        assert_eq!(pushed.term_count(), 1);
        // theta^3 -> 0
        assert!(theta3.pushforward_factor1().is_zero());
        // gamma12 gamma13 theta -> gamma23 theta
        let prod = &(&TautClass::gamma(sig, 1, 2).unwrap() * &TautClass::gamma(sig, 1, 3).unwrap())
            * &TautClass::theta(sig);
        let pushed = prod.pushforward_factor1();
        let expected = &TautClass::gamma(k2(5), 2, 3).unwrap() * &TautClass::theta(k2(5));
        assert_eq!(pushed, expected);
    }

    #[test]
    fn integrate_examples() {
        let g = 5u32;
        let sig = k2(g);
        let mut top = &TautClass::eta(sig, 2).unwrap() * &TautClass::eta(sig, 3).unwrap();
        for _ in 0..g {
            top = &top * &TautClass::theta(sig);
        }
        assert_eq!(top.integrate(), rat_int(120));
        // missing eta3
        let mut partial = TautClass::eta(sig, 2).unwrap();
        for _ in 0..g {
            partial = &partial * &TautClass::theta(sig);
        }
        assert_eq!(partial.integrate(), rat_int(0));
        // residual gammas integrate to zero
        let gam = &TautClass::gamma(sig, 2, PIC_INDEX).unwrap()
            * &TautClass::gamma(sig, 3, PIC_INDEX).unwrap();
        assert_eq!(gam.integrate(), rat_int(0));
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = TautClass::theta(k2(5));
        let b = TautClass::theta(k3(5));
        assert!(matches!(
            a.multiply(&b),
            Err(RingError::SignatureMismatch(_, _))
        ));
    }

    #[test]
    fn rewriting_is_confluent_on_generator_triples() {
        for g in [2u32, 5, 9] {
            let sig = k3(g);
            let gens = generators(sig);
            for x in &gens {
                for y in &gens {
                    for z in &gens {
                        let left = &(x * y) * z;
                        let right = x * &(y * z);
                        assert_eq!(left, right, "association orders differ (g={g})");
                    }
                }
            }
        }
    }

    /// Random classes built as sums of generator products, so every monomial
    /// reaches the map through the rewrite system itself.
    fn arb_class(sig: RingSignature) -> impl Strategy<Value = TautClass> {
        let gens = generators(sig);
        let n = gens.len();
        proptest::collection::vec((proptest::collection::vec(0..n, 0..3), -4i64..=4), 0..4)
            .prop_map(move |terms| {
                let mut acc = TautClass::zero(sig);
                for (word, coeff) in terms {
                    let mut prod = TautClass::one(sig);
                    for gi in word {
                        prod = &prod * &gens[gi];
                    }
                    acc = &acc + &prod.scale(&rat_int(coeff));
                }
                acc
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn multiply_commutative_associative(
            x in arb_class(RingSignature::new(3, 5).unwrap()),
            y in arb_class(RingSignature::new(3, 5).unwrap()),
            z in arb_class(RingSignature::new(3, 5).unwrap()),
        ) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn integrate_is_symmetric(
            x in arb_class(RingSignature::new(2, 4).unwrap()),
            y in arb_class(RingSignature::new(2, 4).unwrap()),
        ) {
            prop_assert_eq!((&x * &y).integrate(), (&y * &x).integrate());
        }

        #[test]
        fn projection_formula(
            x in arb_class(RingSignature::new(3, 4).unwrap()),
            y in arb_class(RingSignature::new(2, 4).unwrap()),
        ) {
            let lhs = (&x * &y.lift_to_three_factors()).pushforward_factor1();
            let rhs = &x.pushforward_factor1() * &y;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn exp_of_negation_is_inverse(
            x in arb_class(RingSignature::new(3, 5).unwrap()),
        ) {
            // strip the degree-0 and theta parts to land in the valid domain
            let sig = x.signature();
            let mut arg = TautClass::zero(sig);
            for (m, c) in x.terms() {
                if m.weight() > 0 && m.theta_power() == 0 {
                    arg = &arg + &TautClass { signature: sig, terms: [(*m, c.clone())].into_iter().collect() };
                }
            }
            let cap = 8;
            let e = arg.exp_nilpotent(cap).unwrap();
            let einv = (-&arg).exp_nilpotent(cap).unwrap();
            prop_assert_eq!((&e * &einv).truncate_above(cap), TautClass::one(sig));
        }
    }
}
