//! Python bindings: the tautological ring type plus the headline
//! computations, with every rational passed as an exact `"p/q"` string.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::collections::BTreeMap;
use std::str::FromStr;

use tautcalc::applications::{
    self, kodaira_r14_2, nikulin_pairing, MultivanishingProfile, ParityCase, RamificationProfile,
};
use tautcalc::degeneracy::{
    chern_cross_check, fp_determinant, intersect_diagonal, intersect_point_slice, n_closed_form,
    n_combinatorial, DegeneracyProblem,
};
use tautcalc::divisors;
use tautcalc::exactnum::{self, Rational};
use tautcalc::tautring::{RingSignature, TautClass as CoreClass};
use tautcalc::verify::{run_all, VerifyConfig};

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_rational(text: &str) -> PyResult<Rational> {
    Rational::from_str(text).map_err(|e| value_err(format!("bad rational {text:?}: {e}")))
}

/// Element of the model tautological ring of `C^k x Pic`.
#[pyclass(name = "TautClass", from_py_object)]
#[derive(Clone)]
struct PyTautClass {
    inner: CoreClass,
}

#[pymethods]
impl PyTautClass {
    /// The multiplicative unit of the ring with `curve_factors` in {2, 3}.
    #[staticmethod]
    fn one(curve_factors: u8, genus: u32) -> PyResult<Self> {
        let sig = RingSignature::new(curve_factors, genus).map_err(value_err)?;
        Ok(PyTautClass {
            inner: CoreClass::one(sig),
        })
    }

    /// Point class on curve factor `i`.
    #[staticmethod]
    fn eta(curve_factors: u8, genus: u32, i: u8) -> PyResult<Self> {
        let sig = RingSignature::new(curve_factors, genus).map_err(value_err)?;
        Ok(PyTautClass {
            inner: CoreClass::eta(sig, i).map_err(value_err)?,
        })
    }

    /// Cross class `gamma_ij` (`j = 4` is the Picard factor).
    #[staticmethod]
    fn gamma(curve_factors: u8, genus: u32, i: u8, j: u8) -> PyResult<Self> {
        let sig = RingSignature::new(curve_factors, genus).map_err(value_err)?;
        Ok(PyTautClass {
            inner: CoreClass::gamma(sig, i, j).map_err(value_err)?,
        })
    }

    /// Polarization class on the Picard factor.
    #[staticmethod]
    fn theta(curve_factors: u8, genus: u32) -> PyResult<Self> {
        let sig = RingSignature::new(curve_factors, genus).map_err(value_err)?;
        Ok(PyTautClass {
            inner: CoreClass::theta(sig),
        })
    }

    fn __add__(&self, other: &Self) -> Self {
        PyTautClass {
            inner: &self.inner + &other.inner,
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyTautClass {
            inner: &self.inner - &other.inner,
        }
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyTautClass {
            inner: self.inner.multiply(&other.inner).map_err(value_err)?,
        })
    }

    fn __neg__(&self) -> Self {
        PyTautClass {
            inner: -&self.inner,
        }
    }

    fn __richcmp__(&self, other: &Self, op: pyo3::basic::CompareOp) -> PyResult<bool> {
        match op {
            pyo3::basic::CompareOp::Eq => Ok(self.inner == other.inner),
            pyo3::basic::CompareOp::Ne => Ok(self.inner != other.inner),
            _ => Err(PyValueError::new_err("ring classes are not ordered")),
        }
    }

    /// Multiply by the exact rational given as `"p/q"` (or `"n"`).
    fn scale(&self, factor: &str) -> PyResult<Self> {
        Ok(PyTautClass {
            inner: self.inner.scale(&parse_rational(factor)?),
        })
    }

    /// `exp(x)` truncated above `degree_cap`; `x` must be theta-free with no
    /// scalar part.
    fn exp(&self, degree_cap: u32) -> PyResult<Self> {
        Ok(PyTautClass {
            inner: self.inner.exp_nilpotent(degree_cap).map_err(value_err)?,
        })
    }

    /// Integrate out the first curve factor (three-factor classes only).
    fn pushforward_factor1(&self) -> PyResult<Self> {
        if self.inner.signature().curve_factors() != 3 {
            return Err(PyValueError::new_err("needs a three-factor class"));
        }
        Ok(PyTautClass {
            inner: self.inner.pushforward_factor1(),
        })
    }

    /// Integral over `C x C x Pic` as an exact rational string.
    fn integrate(&self) -> PyResult<String> {
        if self.inner.signature().curve_factors() != 2 {
            return Err(PyValueError::new_err("needs a two-factor class"));
        }
        Ok(self.inner.integrate().to_string())
    }

    /// Sorted `(monomial, coefficient)` string pairs.
    fn terms(&self) -> Vec<(String, String)> {
        self.inner.debug_pairs()
    }

    fn __repr__(&self) -> String {
        format!("TautClass({})", self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyfunction]
fn binomial(n: i64, k: i64) -> String {
    exactnum::binomial(n, k).to_string()
}

#[pyfunction]
fn vandermonde(entries: Vec<i64>) -> String {
    exactnum::vandermonde_v(&entries).to_string()
}

#[pyfunction]
fn p_polynomial(r: i64, i: i64) -> String {
    exactnum::p_polynomial(r, i).to_string()
}

#[pyfunction]
fn check_identity_power_sum(r: i64, power: u32) -> bool {
    exactnum::check_identity_power_sum(r, power)
}

#[pyfunction]
fn check_master_identity_sigma(r: i64) -> bool {
    exactnum::check_master_identity_sigma(r)
}

#[pyfunction]
fn check_final_identity(r: i64) -> bool {
    exactnum::check_final_identity(r)
}

#[pyfunction]
fn catalan_series_check(degree: usize) -> bool {
    exactnum::catalan_series_check(degree)
}

#[pyfunction]
fn rho(g: i64, r: i64, d: i64) -> i64 {
    applications::rho(g, r, d)
}

#[pyfunction]
fn rho_ramified(g: u32, r: u32, d: u32, profiles: Vec<Vec<u32>>) -> PyResult<i64> {
    let profiles: Result<Vec<_>, _> = profiles
        .into_iter()
        .map(RamificationProfile::new)
        .collect();
    applications::rho_ramified(g, r, d, &profiles.map_err(value_err)?).map_err(value_err)
}

#[pyfunction]
fn rho_multivanishing(
    g: u32,
    r: u32,
    d: u32,
    orders: Vec<u32>,
    divisor_degrees: Vec<u32>,
) -> PyResult<i64> {
    let profile = MultivanishingProfile::new(orders, divisor_degrees).map_err(value_err)?;
    applications::rho_multivanishing(g, r, d, &profile).map_err(value_err)
}

/// Forced vanishing sequence for `case` in {"even", "odd"}.
#[pyfunction]
fn vanishing_sequence(r: u32, case: &str) -> PyResult<Vec<u32>> {
    let case = match case {
        "even" => ParityCase::Even,
        "odd" => ParityCase::Odd,
        other => return Err(value_err(format!("unknown parity case {other:?}"))),
    };
    Ok(applications::vanishing_sequence_solver(r, case)
        .map_err(value_err)?
        .orders)
}

#[pyfunction]
fn prym_class(r: u32) -> PyResult<BTreeMap<String, String>> {
    let class = divisors::solve_prym_class(r).map_err(value_err)?;
    let mut out = BTreeMap::new();
    out.insert("g".to_string(), class.g.to_string());
    out.insert("lambda".to_string(), class.a.to_string());
    out.insert("delta_0p".to_string(), class.b0p.to_string());
    out.insert("delta_0pp".to_string(), class.b0pp.to_string());
    out.insert("delta_0ram".to_string(), class.b0ram.to_string());
    for (i, v) in &class.b {
        out.insert(format!("delta_{i}"), v.to_string());
    }
    let unknown: Vec<String> = class
        .b_mixed
        .iter()
        .filter(|(_, v)| v.is_none())
        .map(|(i, _)| format!("{}:{}", i, class.g - i))
        .collect();
    out.insert("unknown".to_string(), unknown.join(","));
    Ok(out)
}

#[pyfunction]
fn prym_slopes(r: u32) -> PyResult<(String, String, String)> {
    let class = divisors::solve_prym_class(r).map_err(value_err)?;
    let (s1, s2, s3) = divisors::slopes(&class).map_err(value_err)?;
    Ok((s1.to_string(), s2.to_string(), s3.to_string()))
}

#[pyfunction]
fn strongly_bn_class(r: u32) -> PyResult<BTreeMap<String, String>> {
    let class = divisors::strongly_bn_class(r).map_err(value_err)?;
    let mut out = BTreeMap::new();
    out.insert("g".to_string(), class.g.to_string());
    out.insert("psi1".to_string(), class.a1.to_string());
    out.insert("psi2".to_string(), class.a2.to_string());
    out.insert("lambda".to_string(), class.a.to_string());
    out.insert("delta_0".to_string(), class.b0.to_string());
    for (i, v) in &class.b_12 {
        out.insert(format!("delta_{i}_12"), v.to_string());
    }
    if let Some(c) = &class.c_scale {
        out.insert("c_scale".to_string(), c.to_string());
    }
    Ok(out)
}

#[pyfunction]
fn mu_nu(r: u32) -> PyResult<(String, String)> {
    if r < 3 {
        return Err(value_err("mu/nu need r >= 3"));
    }
    let (mu, nu) = divisors::mu_nu(r);
    Ok((mu.to_string(), nu.to_string()))
}

#[pyfunction]
fn nikulin(r: u32) -> PyResult<String> {
    Ok(nikulin_pairing(r).map_err(value_err)?.to_string())
}

#[pyfunction]
fn kodaira(py: Python<'_>) -> PyResult<Py<pyo3::types::PyDict>> {
    let report = kodaira_r14_2().map_err(value_err)?;
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item(
        "coefficients",
        report
            .coefficients
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>(),
    )?;
    dict.set_item("psi", report.psi_coefficient.to_string())?;
    dict.set_item("psi_below_one", report.psi_below_one)?;
    Ok(dict.into())
}

/// Degeneracy determinant summary: cross-check status plus the diagonal and
/// point-slice intersection numbers and the combinatorial comparisons.
#[pyfunction]
#[pyo3(signature = (r, m=None))]
fn fp_verify(py: Python<'_>, r: u32, m: Option<i64>) -> PyResult<Py<pyo3::types::PyDict>> {
    let prob = DegeneracyProblem::new(r, m).map_err(value_err)?;
    let cross = chern_cross_check(&prob).map_err(value_err)?;
    let det = fp_determinant(&prob).map_err(value_err)?;
    let diagonal = intersect_diagonal(&det);
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("r", prob.r)?;
    dict.set_item("m", prob.m)?;
    dict.set_item("g", prob.g)?;
    dict.set_item("cross_check_ok", cross.is_empty())?;
    dict.set_item("diagonal", diagonal.to_string())?;
    dict.set_item("point_slice", intersect_point_slice(&det).to_string())?;
    dict.set_item("double_sum", n_combinatorial(&prob).to_string())?;
    dict.set_item("closed_form", n_closed_form(&prob).to_string())?;
    Ok(dict.into())
}

/// Runs the whole verification suite; returns `(name, passed)` pairs.
#[pyfunction]
#[pyo3(signature = (r_max=4))]
fn verify_all(r_max: u32) -> Vec<(String, bool)> {
    run_all(&VerifyConfig {
        r_max,
        parallel: false,
    })
    .into_iter()
    .map(|c| (c.name.to_string(), c.passed))
    .collect()
}

#[pymodule]
fn tautcalc_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTautClass>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(vandermonde, m)?)?;
    m.add_function(wrap_pyfunction!(p_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(check_identity_power_sum, m)?)?;
    m.add_function(wrap_pyfunction!(check_master_identity_sigma, m)?)?;
    m.add_function(wrap_pyfunction!(check_final_identity, m)?)?;
    m.add_function(wrap_pyfunction!(catalan_series_check, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(rho_ramified, m)?)?;
    m.add_function(wrap_pyfunction!(rho_multivanishing, m)?)?;
    m.add_function(wrap_pyfunction!(vanishing_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(prym_class, m)?)?;
    m.add_function(wrap_pyfunction!(prym_slopes, m)?)?;
    m.add_function(wrap_pyfunction!(strongly_bn_class, m)?)?;
    m.add_function(wrap_pyfunction!(mu_nu, m)?)?;
    m.add_function(wrap_pyfunction!(nikulin, m)?)?;
    m.add_function(wrap_pyfunction!(kodaira, m)?)?;
    m.add_function(wrap_pyfunction!(fp_verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
