//! Degeneracy-locus computation on `C x C x Pic^{g+r}(C)`.
//!
//! For `g = r(r+1)/2 - 1` the locus of triples `(x, y, L)` with
//! `h^0(L(-i(x+y))) >= r+1-i` for all `i` is one-dimensional and arises as a
//! flag degeneracy locus of a bundle map filtered through surjections. Its
//! class is the determinant `det(c^(i)_{2i-j})` over the two-factor
//! tautological ring, where `c^(i)` is the total Chern class of `M_i` twisted
//! by `e^{t theta}`. This module builds the sheaf data from first principles
//! (divisor classes, twisted Chern characters via the pushforward formula,
//! Newton conversion to Chern classes), expands the determinant exactly, and
//! intersects with the diagonal and point-slice cycles. The combinatorial
//! Vandermonde expressions for the same numbers act as independent oracles.

use crate::exactnum::{factorial, inv_factorial, rat_int, vandermonde_v, Rational};
use crate::tautring::{RingSignature, TautClass, PIC_INDEX};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegenError {
    #[error("sheaf index {i} out of range 0..={r}")]
    IndexOutOfRange { i: i64, r: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Graded sequence of homogeneous pieces of a Chern character or total
/// Chern class; piece `j` has pure weight `j` (cohomological degree `2j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernSeries {
    signature: RingSignature,
    pieces: Vec<TautClass>,
}

impl ChernSeries {
    /// Splits a class into its homogeneous pieces.
    pub fn from_class(x: &TautClass) -> Self {
        let top = x.max_weight();
        let pieces = (0..=top).map(|w| x.weight_part(w)).collect();
        ChernSeries {
            signature: x.signature(),
            pieces,
        }
    }

    pub fn from_pieces(signature: RingSignature, pieces: Vec<TautClass>) -> Self {
        for (j, p) in pieces.iter().enumerate() {
            assert!(
                p.is_homogeneous_of_weight(j as u32),
                "piece {j} is not homogeneous of weight {j}"
            );
        }
        ChernSeries { signature, pieces }
    }

    pub fn signature(&self) -> RingSignature {
        self.signature
    }

    /// Piece of weight `j`; zero beyond the stored range.
    pub fn piece(&self, j: u32) -> TautClass {
        self.pieces
            .get(j as usize)
            .cloned()
            .unwrap_or_else(|| TautClass::zero(self.signature))
    }

    /// The degree-0 piece (`ch_0` or `c_0`) as a scalar.
    pub fn rank_part(&self) -> Rational {
        self.piece(0).theta_coefficient(0)
    }

    /// Largest stored weight.
    pub fn top(&self) -> u32 {
        self.pieces.len().saturating_sub(1) as u32
    }
}

/// Numerical frame of the degeneracy computation: `g = r(r+1)/2 - 1`,
/// `d = g + r`, and an auxiliary twist `m > g - 1 - r` that must drop out of
/// every intersection number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegeneracyProblem {
    pub r: u32,
    pub g: u32,
    pub d: u32,
    pub m: i64,
}

impl DegeneracyProblem {
    /// `m = None` picks the smallest admissible twist `g - r`.
    pub fn new(r: u32, m: Option<i64>) -> Result<Self, DegenError> {
        if r < 2 {
            return Err(DegenError::InvalidParameters(
                "r must be at least 2".into(),
            ));
        }
        let g = r * (r + 1) / 2 - 1;
        let m = m.unwrap_or((g as i64) - (r as i64));
        if m <= (g as i64) - 1 - (r as i64) {
            return Err(DegenError::InvalidParameters(format!(
                "m = {m} violates the stability bound m > {}",
                g as i64 - 1 - r as i64
            )));
        }
        Ok(DegeneracyProblem {
            r,
            g,
            d: g + r,
            m,
        })
    }

    pub fn sig3(&self) -> RingSignature {
        RingSignature::new(3, self.g).expect("valid")
    }

    pub fn sig2(&self) -> RingSignature {
        RingSignature::new(2, self.g).expect("valid")
    }

    /// Ambient top weight; ring arithmetic inside the determinant discards
    /// anything above it.
    pub fn weight_cap(&self) -> u32 {
        self.g + 2
    }
}

/// The divisor `[D_i] = (m+2i) eta_1 + i eta_2 + i eta_3 + i gamma_12 + i gamma_13`
/// in the three-factor ring.
pub fn divisor_class_d(i: u32, prob: &DegeneracyProblem) -> Result<TautClass, DegenError> {
    if i > prob.r {
        return Err(DegenError::IndexOutOfRange {
            i: i as i64,
            r: prob.r,
        });
    }
    let sig = prob.sig3();
    let i = i as i64;
    let eta = |n: u8| TautClass::eta(sig, n).expect("curve index");
    let gam = |a: u8, b: u8| TautClass::gamma(sig, a, b).expect("gamma pair");
    let mut d = eta(1).scale(&rat_int(prob.m + 2 * i));
    for part in [eta(2), eta(3), gam(1, 2), gam(1, 3)] {
        d = &d + &part.scale(&rat_int(i));
    }
    Ok(d)
}

/// Chern character of `M_i = mu_*(nu^* L (x) O_{D_i})`, computed through the
/// pushforward formula `ch(M_i) = mu_*((1 + (1-g) eta_1) ch(nu^*L) ch(O_{D_i}))`
/// with `ch(nu^*L) = 1 + (g+r+m) eta_1 + gamma_14 - eta_1 theta` and
/// `ch(O_{D_i}) = 1 - e^{-[D_i]}`.
pub fn chern_character_mi(i: u32, prob: &DegeneracyProblem) -> Result<ChernSeries, DegenError> {
    let sig = prob.sig3();
    let eta1 = TautClass::eta(sig, 1).expect("curve index");
    let g = prob.g as i64;

    let ch_l = &(&TautClass::one(sig) + &eta1.scale(&rat_int(g + prob.r as i64 + prob.m)))
        + &(&TautClass::gamma(sig, 1, PIC_INDEX).expect("gamma")
            - &(&eta1 * &TautClass::theta(sig)));

    let d = divisor_class_d(i, prob)?;
    let ch_od = &TautClass::one(sig)
        - &(-&d)
            .exp_nilpotent(8)
            .expect("divisor class is theta-free with no scalar part");

    let grr_twist = &TautClass::one(sig) + &eta1.scale(&rat_int(1 - g));
    let total = &(&grr_twist * &ch_l) * &ch_od;
    Ok(ChernSeries::from_class(&total.pushforward_factor1()))
}

/// Total Chern class pieces `c_1..=c_top` obtained from a Chern character by
/// the Newton-identity recursion `c_n = (1/n) sum_{j<=n} (-1)^{j-1} c_{n-j} (j! ch_j)`.
pub fn chern_classes_from_character(ch: &ChernSeries, top: u32) -> ChernSeries {
    let sig = ch.signature();
    let mut c: Vec<TautClass> = vec![TautClass::one(sig)];
    for n in 1..=top {
        let mut acc = TautClass::zero(sig);
        for j in 1..=n {
            let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
            let power_sum = ch
                .piece(j)
                .scale(&rat_int(BigInt::from(sign) * factorial(j as i64)));
            acc = &acc + &(&c[(n - j) as usize] * &power_sum);
        }
        c.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(n))));
    }
    ChernSeries::from_pieces(sig, c)
}

/// Chern classes of `M_i`, up to weight `2r` (the largest determinant index).
pub fn chern_classes_mi(i: u32, prob: &DegeneracyProblem) -> Result<ChernSeries, DegenError> {
    let ch = chern_character_mi(i, prob)?;
    Ok(chern_classes_from_character(&ch, 2 * prob.r))
}

/// Entry generator of the degeneracy determinant:
/// `c^(i)_n = sum_k c_k(M_i) theta^{n-k} / (n-k)!`, the total Chern class of
/// `M_i` twisted by `e^{t theta}`. Negative `n` gives 0.
pub fn twisted_entry(i: u32, n: i64, prob: &DegeneracyProblem) -> Result<TautClass, DegenError> {
    let c = chern_classes_mi(i, prob)?;
    Ok(twisted_class(&c, n))
}

fn twisted_class(c: &ChernSeries, n: i64) -> TautClass {
    let sig = c.signature();
    if n < 0 {
        return TautClass::zero(sig);
    }
    let mut acc = TautClass::zero(sig);
    for k in 0..=(n.min(c.top() as i64)) {
        let theta_pow = TautClass::theta_power(sig, (n - k) as u16);
        let scaled = theta_pow.scale(&inv_factorial(n - k));
        acc = &acc + &(&c.piece(k as u32) * &scaled);
    }
    acc
}

/// Options for the determinant expansion.
#[derive(Clone, Copy, Debug, Default)]
pub struct FpOptions {
    /// Drop, from every entry, the monomials annihilated by all three of
    /// `eta_2`, `eta_3`, `gamma_23`; sound for the diagonal intersection and
    /// kept off by default.
    pub annihilator_reduction: bool,
    /// Expand subsets of each size in parallel on the global rayon pool.
    pub parallel: bool,
    /// Override of the weight cap used to prune ring products; defaults to
    /// the ambient top weight `g + 2`.
    pub weight_cap: Option<u32>,
}

/// The `(r+1) x (r+1)` matrix with entry `(i, j) = c^(i)_{2i-j}`.
pub fn fp_matrix(prob: &DegeneracyProblem) -> Result<Vec<Vec<TautClass>>, DegenError> {
    let r = prob.r as i64;
    let mut rows = Vec::with_capacity(prob.r as usize + 1);
    for i in 0..=prob.r {
        let c = chern_classes_mi(i, prob)?;
        let row: Vec<TautClass> = (0..=r).map(|j| twisted_class(&c, 2 * i as i64 - j)).collect();
        rows.push(row);
    }
    Ok(rows)
}

/// Fulton-Pragacz determinant `det(c^(i)_{2i-j})` expanded exactly over the
/// two-factor ring.
pub fn fp_determinant(prob: &DegeneracyProblem) -> Result<TautClass, DegenError> {
    fp_determinant_with(prob, FpOptions::default())
}

pub fn fp_determinant_with(
    prob: &DegeneracyProblem,
    opts: FpOptions,
) -> Result<TautClass, DegenError> {
    let mut entries = fp_matrix(prob)?;
    if opts.annihilator_reduction {
        for row in &mut entries {
            for e in row.iter_mut() {
                *e = annihilator_reduce(e);
            }
        }
    }
    Ok(ring_determinant(
        &entries,
        prob.sig2(),
        opts.weight_cap.unwrap_or_else(|| prob.weight_cap()),
        opts.parallel,
    ))
}

/// Keeps only the monomials not annihilated by every one of `eta_2`, `eta_3`,
/// `gamma_23`. A dropped monomial kills any product it appears in once the
/// diagonal class is multiplied on, so the diagonal intersection is unchanged.
pub fn annihilator_reduce(entry: &TautClass) -> TautClass {
    let sig = entry.signature();
    let eta2 = TautClass::eta(sig, 2).expect("curve index");
    let eta3 = TautClass::eta(sig, 3).expect("curve index");
    let g23 = TautClass::gamma(sig, 2, 3).expect("gamma pair");
    let mut kept = TautClass::zero(sig);
    for (m, c) in entry.terms() {
        let single = TautClass::from_monomial(sig, *m, c.clone());
        let killed = [&eta2, &eta3, &g23]
            .iter()
            .all(|gen| single.multiply(gen).expect("same signature").is_zero());
        if !killed {
            kept = &kept + &single;
        }
    }
    kept
}

/// Memoized Laplace expansion over column subsets. `table[S]` holds the
/// minor of the last `|S|` rows on column set `S`; values depend only on `S`,
/// so concurrent computation is deterministic.
fn ring_determinant(
    entries: &[Vec<TautClass>],
    sig: RingSignature,
    cap: u32,
    parallel: bool,
) -> TautClass {
    let n = entries.len();
    assert!(n > 0 && n <= 16, "determinant size out of range");
    let full: u32 = (1u32 << n) - 1;
    let mut table: Vec<Option<TautClass>> = vec![None; 1 << n];
    table[0] = Some(TautClass::one(sig));
    for size in 1..=n {
        let row = n - size;
        let subsets: Vec<u32> = (1..=full)
            .filter(|s| s.count_ones() as usize == size)
            .collect();
        let compute = |s: u32| -> (u32, TautClass) {
            let mut acc = TautClass::zero(sig);
            let mut pos = 0u32;
            for j in 0..n {
                if s & (1 << j) != 0 {
                    let minor = table[(s ^ (1 << j)) as usize]
                        .as_ref()
                        .expect("smaller subsets already computed");
                    let term = entries[row][j]
                        .multiply(minor)
                        .expect("same signature")
                        .truncate_above(cap);
                    acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
                    pos += 1;
                }
            }
            (s, acc)
        };
        let results: Vec<(u32, TautClass)> = if parallel {
            subsets.par_iter().map(|&s| compute(s)).collect()
        } else {
            subsets.iter().map(|&s| compute(s)).collect()
        };
        for (s, v) in results {
            table[s as usize] = Some(v);
        }
    }
    table[full as usize].take().expect("full subset computed")
}

/// Plain Leibniz expansion (sum over permutations); exponential in the
/// matrix size, kept as an independent oracle for the memoized expansion.
pub fn leibniz_determinant(entries: &[Vec<TautClass>], sig: RingSignature, cap: u32) -> TautClass {
    let n = entries.len();
    let mut acc = TautClass::zero(sig);
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |perm, sign| {
        let mut prod = TautClass::one(sig);
        for (row, &col) in perm.iter().enumerate() {
            prod = prod
                .multiply(&entries[row][col])
                .expect("same signature")
                .truncate_above(cap);
        }
        acc = if sign > 0 { &acc + &prod } else { &acc - &prod };
    });
    acc
}

fn permutations(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize], i32)) {
    let n = perm.len();
    if k == n {
        let mut sign = 1;
        for i in 0..n {
            for j in (i + 1)..n {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        visit(perm, sign);
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permutations(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// `integrate((eta_2 + gamma_23 + eta_3) * det)`: the degeneracy class paired
/// with the diagonal cycle.
pub fn intersect_diagonal(det: &TautClass) -> Rational {
    let sig = det.signature();
    let diag = &(&TautClass::eta(sig, 2).expect("curve index")
        + &TautClass::gamma(sig, 2, 3).expect("gamma pair"))
        + &TautClass::eta(sig, 3).expect("curve index");
    det.multiply(&diag).expect("same signature").integrate()
}

/// `integrate(eta_2 * det)`: the degeneracy class paired with a point slice.
pub fn intersect_point_slice(det: &TautClass) -> Rational {
    let sig = det.signature();
    det.multiply(&TautClass::eta(sig, 2).expect("curve index"))
        .expect("same signature")
        .integrate()
}

/// Vandermonde argument with `2k` in slot `k` except `2k - 1` in the marked
/// slots.
fn marked_sequence(r: u32, marked: &[u32]) -> Vec<i64> {
    (0..=r as i64)
        .map(|k| {
            if marked.contains(&(k as u32)) {
                2 * k - 1
            } else {
                2 * k
            }
        })
        .collect()
}

/// Combinatorial value of the diagonal intersection:
/// `g! * (2 sum_i [i^2(g-2) + i(r+1) + i^2 g] V(..., 2i-1, ...)
///        - 8 sum_{i1<i2} i1 i2 V(..., 2i1-1, ..., 2i2-1, ...))`.
pub fn n_combinatorial(prob: &DegeneracyProblem) -> Rational {
    let r = prob.r as i64;
    let g = prob.g as i64;
    let mut total = Rational::zero();
    for i in 0..=r {
        let coeff = i * i * (g - 2) + i * (r + 1) + i * i * g;
        if coeff != 0 {
            total += rat_int(2 * coeff) * vandermonde_v(&marked_sequence(prob.r, &[i as u32]));
        }
    }
    for i1 in 0..=r {
        for i2 in (i1 + 1)..=r {
            if i1 * i2 != 0 {
                total -= rat_int(8 * i1 * i2)
                    * vandermonde_v(&marked_sequence(prob.r, &[i1 as u32, i2 as u32]));
            }
        }
    }
    rat_int(factorial(g)) * total
}

/// Combinatorial value of the point-slice intersection (half the eta route of
/// the diagonal, no gamma_23 route).
pub fn point_slice_combinatorial(prob: &DegeneracyProblem) -> Rational {
    let r = prob.r as i64;
    let g = prob.g as i64;
    let mut total = Rational::zero();
    for i in 0..=r {
        let coeff = i * i * (g - 2) + i * (r + 1);
        if coeff != 0 {
            total += rat_int(coeff) * vandermonde_v(&marked_sequence(prob.r, &[i as u32]));
        }
    }
    for i1 in 0..=r {
        for i2 in (i1 + 1)..=r {
            if i1 * i2 != 0 {
                total -= rat_int(2 * i1 * i2)
                    * vandermonde_v(&marked_sequence(prob.r, &[i1 as u32, i2 as u32]));
            }
        }
    }
    rat_int(factorial(g)) * total
}

/// Closed form of the diagonal intersection number:
/// `g! 2^{r(r+1)/2} prod_i i!/(2i)! * (r-1) r^2 (r+1)^2 (r+2) / 16`.
pub fn n_closed_form(prob: &DegeneracyProblem) -> Rational {
    let r = prob.r as i64;
    let g = prob.g as i64;
    let mut value = rat_int(factorial(g));
    value *= rat_int(BigInt::from(2).pow((r * (r + 1) / 2) as u32));
    for i in 1..=r {
        value *= rat_int(factorial(i));
        value /= rat_int(factorial(2 * i));
    }
    value * rat_int((r - 1) * r * r * (r + 1) * (r + 1) * (r + 2)) / rat_int(16)
}

/// Determinant of the theta-pure coefficient matrix `(1/(2i-j)!)`, which must
/// equal `V(0, 2, ..., 2r)`.
pub fn theta_pure_determinant(r: u32) -> Rational {
    let n = r as usize + 1;
    let entries: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| inv_factorial(2 * i as i64 - j as i64))
                .collect()
        })
        .collect();
    scalar_determinant(&entries)
}

/// Exact determinant of a small rational matrix by the same subset expansion
/// used for ring entries.
pub fn scalar_determinant(entries: &[Vec<Rational>]) -> Rational {
    let n = entries.len();
    assert!(n > 0 && n <= 16);
    let full: u32 = (1u32 << n) - 1;
    let mut table: Vec<Option<Rational>> = vec![None; 1 << n];
    table[0] = Some(Rational::one());
    for size in 1..=n {
        let row = n - size;
        for s in 1..=full {
            if s.count_ones() as usize != size {
                continue;
            }
            let mut acc = Rational::zero();
            let mut pos = 0u32;
            for j in 0..n {
                if s & (1 << j) != 0 {
                    let minor = table[(s ^ (1 << j)) as usize].as_ref().unwrap();
                    let term = &entries[row][j] * minor;
                    if pos % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                    pos += 1;
                }
            }
            table[s as usize] = Some(acc);
        }
    }
    table[full as usize].take().unwrap()
}

/// Reference Chern character pieces (the displayed closed forms), used by the
/// cross-check suite.
pub fn reference_chern_character(i: u32, prob: &DegeneracyProblem) -> ChernSeries {
    let sig = prob.sig2();
    let i = i as i64;
    let g = prob.g as i64;
    let r = prob.r as i64;
    let eta = |n: u8| TautClass::eta(sig, n).expect("curve index");
    let gam = |a: u8, b: u8| TautClass::gamma(sig, a, b).expect("gamma pair");
    let theta = TautClass::theta(sig);

    let ch0 = TautClass::scalar(sig, rat_int(prob.m + 2 * i));
    let eta_sum = &eta(2) + &eta(3);
    let gamma_sum = &gam(2, PIC_INDEX) + &gam(3, PIC_INDEX);
    let ch1 = &(&eta_sum.scale(&rat_int(i * (r + 1 + i * g - 2 * i)))
        + &gamma_sum.scale(&rat_int(i)))
        - &gam(2, 3).scale(&rat_int(i * i));
    let cross = &(&eta(2) * &gam(3, PIC_INDEX)) + &(&eta(3) * &gam(2, PIC_INDEX));
    let ch2 = &(&(&eta_sum * &theta).scale(&rat_int(-i))
        + &(&eta(2) * &eta(3)).scale(&rat_int(i * i * (2 * i - r - 1 - 2 * i * g))))
        - &cross.scale(&rat_int(i * i));
    let ch3 = (&(&eta(2) * &eta(3)) * &theta).scale(&rat_int(i * i));
    ChernSeries::from_pieces(sig, vec![ch0, ch1, ch2, ch3])
}

/// Reference `c_2(M_i)` closed form. The eta2-eta3 coefficient is
/// `i^2 (r+1+ig-2i)^2 - g i^4 + i^2 (2ig + r + 1 - 2i)` (the `- g i^4` term is
/// a total term, not scaled by the leading `i^2`).
pub fn reference_c2(i: u32, prob: &DegeneracyProblem) -> TautClass {
    let sig = prob.sig2();
    let i = i as i64;
    let g = prob.g as i64;
    let r = prob.r as i64;
    let eta = |n: u8| TautClass::eta(sig, n).expect("curve index");
    let gam = |a: u8, b: u8| TautClass::gamma(sig, a, b).expect("gamma pair");
    let theta = TautClass::theta(sig);

    let v = r + 1 + i * g - 2 * i;
    let eta23_coeff = i * i * v * v - g * i * i * i * i + i * i * (2 * i * g + r + 1 - 2 * i);
    let cross = &(&eta(2) * &gam(3, PIC_INDEX)) + &(&eta(3) * &gam(2, PIC_INDEX));
    let mut c2 = (&eta(2) * &eta(3)).scale(&rat_int(eta23_coeff));
    c2 = &c2 + &cross.scale(&rat_int(i * i * (r + 2 + i * g - 3 * i)));
    c2 = &c2 + &(&(&eta(2) + &eta(3)) * &theta).scale(&rat_int(i - i * i));
    c2 = &c2 + &(&gam(2, PIC_INDEX) * &gam(3, PIC_INDEX)).scale(&rat_int(i * i));
    c2
}

/// Reference `c_3(M_i)`: the Newton recursion applied to the displayed
/// character gives
/// `i^2 [2(1-i)(r+1+ig-2i) - 4i + 2i^2 + 2] eta2 eta3 theta
///   + (i^2 - i^3)(eta2 gamma34 + eta3 gamma24) theta`.
/// Both pieces are annihilated by the diagonal and point-slice cycles, so
/// they never reach an intersection number.
pub fn reference_c3(i: u32, prob: &DegeneracyProblem) -> TautClass {
    let sig = prob.sig2();
    let i = i as i64;
    let g = prob.g as i64;
    let r = prob.r as i64;
    let eta = |n: u8| TautClass::eta(sig, n).expect("curve index");
    let gam = |a: u8, b: u8| TautClass::gamma(sig, a, b).expect("gamma pair");
    let theta = TautClass::theta(sig);
    let v = r + 1 + i * g - 2 * i;
    let coeff = i * i * (2 * (1 - i) * v - 4 * i + 2 * i * i + 2);
    let eta23 = (&(&eta(2) * &eta(3)) * &theta).scale(&rat_int(coeff));
    let cross = &(&eta(2) * &gam(3, PIC_INDEX)) + &(&eta(3) * &gam(2, PIC_INDEX));
    &eta23 + &(&cross * &theta).scale(&rat_int(i * i - i * i * i))
}

/// Compares engine Chern data against the reference closed forms for every
/// sheaf index. Returns the list of mismatching descriptions (empty = pass).
pub fn chern_cross_check(prob: &DegeneracyProblem) -> Result<Vec<String>, DegenError> {
    let mut failures = Vec::new();
    for i in 0..=prob.r {
        let ch = chern_character_mi(i, prob)?;
        let reference = reference_chern_character(i, prob);
        for j in 0..=3u32 {
            if ch.piece(j) != reference.piece(j) {
                failures.push(format!("ch_{j}(M_{i}) mismatch at r={}, m={}", prob.r, prob.m));
            }
        }
        for j in 4..=ch.top() {
            if !ch.piece(j).is_zero() {
                failures.push(format!("unexpected ch_{j}(M_{i}) != 0"));
            }
        }
        let c = chern_classes_mi(i, prob)?;
        if c.piece(2) != reference_c2(i, prob) {
            failures.push(format!("c_2(M_{i}) mismatch at r={}, m={}", prob.r, prob.m));
        }
        if c.piece(3) != reference_c3(i, prob) {
            failures.push(format!("c_3(M_{i}) mismatch at r={}, m={}", prob.r, prob.m));
        }
    }
    Ok(failures)
}
