//! Exact arbitrary-precision rational arithmetic and the closed-form
//! combinatorial identities used by the divisor-class pipeline.
//!
//! Everything here is pure and exact: no floating point, no tolerances.
//! The scalar type [`Rational`] is an arbitrary-precision fraction kept in
//! lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat_int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn rat<T: Into<BigInt>, U: Into<BigInt>>(n: T, d: U) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `n!` as a big integer; panics on negative input.
pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative integer");
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// `1/k!`, with the convention `1/k! = 0` for `k < 0`.
///
/// The convention is what makes the factorial matrices below total: their
/// sub-diagonal indices go negative and those entries must vanish.
pub fn inv_factorial(k: i64) -> Rational {
    if k < 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::one(), factorial(k))
    }
}

/// Binomial coefficient `C(n, k)` as an exact rational.
///
/// Total function: returns 0 when `k < 0`, when `n >= 0` and `k > n`, and
/// when `n < 0`.
pub fn binomial(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial_int(n, k))
}

/// Integer-valued binomial coefficient with the same conventions as
/// [`binomial`].
pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k {
        num *= n - t;
        den *= t + 1;
    }
    num / den
}

/// Vandermonde value `V(b_0, …, b_r) = prod_{l<k}(b_k - b_l) / prod_j b_j!`.
///
/// Evaluates to 0 whenever two entries coincide (the numerator vanishes) or
/// an entry is negative (the `1/k! = 0` convention). Entries need not be
/// sorted; swapping two entries flips the sign.
pub fn vandermonde_v(entries: &[i64]) -> Rational {
    let mut num = BigInt::one();
    for k in 1..entries.len() {
        for l in 0..k {
            num *= entries[k] - entries[l];
        }
    }
    if num.is_zero() {
        return Rational::zero();
    }
    let mut value = Rational::from_integer(num);
    for &b in entries {
        let f = inv_factorial(b);
        if f.is_zero() {
            return Rational::zero();
        }
        value *= f;
    }
    value
}

/// Shared summand of the power-sum identities:
/// `i^power * C(2i-1, i) * (r-i+1) * C(2r-2i+1, r-i)`.
fn power_sum_lhs(r: i64, power: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 1..=r {
        let mut term = BigInt::from(i).pow(power);
        term *= binomial_int(2 * i - 1, i);
        term *= r - i + 1;
        term *= binomial_int(2 * r - 2 * i + 1, r - i);
        acc += term;
    }
    acc
}

/// Checks one of the three power-sum identities
/// `sum_{i=1}^r i^power C(2i-1,i)(r-i+1)C(2r-2i+1,r-i) = <closed form>`
/// for `power` in 1..=3, by direct exact evaluation of both sides.
pub fn check_identity_power_sum(r: i64, power: u32) -> bool {
    assert!(r >= 1, "power-sum identity needs r >= 1");
    assert!((1..=3).contains(&power), "power must be 1, 2 or 3");
    let lhs = power_sum_lhs(r, power);
    let two = BigInt::from(2);
    let rhs: Rational = match power {
        1 => binomial(r + 1, 2) * rat_int(two.pow((2 * r - 2) as u32)),
        2 => {
            rat_int(two.pow((2 * r - 2) as u32)) * binomial(r + 2, 3)
                + rat_int(pow2((2 * r - 3) as i64)) * binomial(r + 1, 3)
        }
        3 => {
            rat_int(two.pow((2 * r - 2) as u32)) * binomial(r + 3, 4)
                + rat_int(5) * rat_int(pow2((2 * r - 3) as i64)) * binomial(r + 2, 4)
                + rat_int(pow2((2 * r - 4) as i64)) * binomial(r + 1, 4)
        }
        _ => unreachable!(),
    };
    rat_int(lhs) == rhs
}

// 2^e for e possibly negative in the small-r corner cases (r = 1 makes the
// exponent 2r-4 negative; the matching binomial factor is 0 there, so any
// finite value works -- we use 0 to stay in integers).
fn pow2(e: i64) -> BigInt {
    if e < 0 {
        BigInt::zero()
    } else {
        BigInt::from(2).pow(e as u32)
    }
}

/// The polynomial `P(r, i)` entering the master identity:
/// `(r^6+3r^5-21r^4-71r^3-100r^2-68r)/16 + i(6r^3+12r^2+10r+4) - i^2(6r^2+6r+4)`.
pub fn p_polynomial(r: i64, i: i64) -> Rational {
    let r6 = |e: u32| BigInt::from(r).pow(e);
    let constant = rat_int(
        r6(6) + 3 * r6(5) - 21 * r6(4) - 71 * r6(3) - 100 * r6(2) - BigInt::from(68 * r),
    ) / rat_int(16);
    let linear = rat_int(i) * rat_int(6 * r * r * r + 12 * r * r + 10 * r + 4);
    let quadratic = rat_int(i * i) * rat_int(6 * r * r + 6 * r + 4);
    constant + linear - quadratic
}

/// Checks the master identity
/// `2^{2r-6} [r(r+1)+2](r-2)(r-1)r(r+1)(r+2)(r+3)
///   = 2 sum_{i=1}^r i C(2i-1,i)(r-i+1)C(2r-2i+1,r-i) P(r,i)`
/// by direct summation of the right-hand side.
pub fn check_master_identity_sigma(r: i64) -> bool {
    assert!(r >= 3, "master identity needs r >= 3");
    let lhs = rat_int(BigInt::from(2).pow((2 * r - 6) as u32))
        * rat_int(r * (r + 1) + 2)
        * rat_int((r - 2) * (r - 1) * r * (r + 1) * (r + 2) * (r + 3));
    let mut rhs = Rational::zero();
    for i in 1..=r {
        let weight = rat_int(i)
            * binomial(2 * i - 1, i)
            * rat_int(r - i + 1)
            * binomial(2 * r - 2 * i + 1, r - i);
        rhs += weight * p_polynomial(r, i);
    }
    lhs == rat_int(2) * rhs
}

/// Checks the closing identity of the two-pointed coefficient computation:
/// `(r-1)r(r+1)(r+2)/16 * 2^{2r-1}
///   = sum_{i=0}^r [4i^3 - 2i^2(r+1)] C(2i-1,i)(r-i+1)C(2r-2i+1,r-i)`.
pub fn check_final_identity(r: i64) -> bool {
    assert!(r >= 1, "final identity needs r >= 1");
    let lhs = rat_int((r - 1) * r * (r + 1) * (r + 2)) / rat_int(16)
        * rat_int(BigInt::from(2).pow((2 * r - 1) as u32));
    let mut rhs = Rational::zero();
    for i in 0..=r {
        let weight = rat_int(4 * i * i * i - 2 * i * i * (r + 1));
        rhs += weight
            * binomial(2 * i - 1, i)
            * rat_int(r - i + 1)
            * binomial(2 * r - 2 * i + 1, r - i);
    }
    lhs == rhs
}

/// Coefficients 0..=degree of the truncated power series
/// `(1 - (1-4x)^{1/2}) / (2x)`, computed from the binomial series for
/// `(1-4x)^{1/2}` with exact rational coefficients.
pub fn catalan_series(degree: usize) -> Vec<Rational> {
    // sqrt coefficients: s_k = C(1/2, k) (-4)^k, via the recurrence
    // s_k = s_{k-1} * (1/2 - (k-1)) / k * (-4).
    let mut s = Rational::one();
    let mut out = Vec::with_capacity(degree + 1);
    for k in 1..=(degree + 1) {
        let step = (rat(1, 2) - rat_int((k - 1) as i64)) / rat_int(k as i64) * rat_int(-4);
        s *= step;
        // (1 - sqrt)/(2x): coefficient of x^{k-1} is -s_k / 2.
        out.push(-s.clone() / rat_int(2));
    }
    out
}

/// True iff the first `degree + 1` coefficients of `(1-(1-4x)^{1/2})/(2x)`
/// equal the Catalan numbers `(2i)!/(i! (i+1)!)`.
pub fn catalan_series_check(degree: usize) -> bool {
    let series = catalan_series(degree);
    series.iter().enumerate().all(|(i, coeff)| {
        let i = i as i64;
        let catalan = rat_int(factorial(2 * i)) / rat_int(factorial(i) * factorial(i + 1));
        *coeff == catalan
    })
}
