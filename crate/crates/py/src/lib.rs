//! Python bindings.

use diagalg::coeff::AbelianInvariants;
use diagalg_cli::{registry, AlgebraArgs, CliError};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl Into<CliError>) -> PyErr {
    PyValueError::new_err(e.into().to_string())
}

type Invariants = (usize, Vec<u64>);

fn plain(gs: &[AbelianInvariants]) -> Vec<Invariants> {
    gs.iter()
        .map(|g| (g.free_rank, g.torsion.clone()))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn args(
    family: Option<String>,
    n: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    delta: Option<String>,
    epsilon: Option<String>,
    gamma: Option<String>,
    ring: Option<String>,
) -> AlgebraArgs {
    AlgebraArgs {
        family,
        n,
        r,
        s,
        delta,
        epsilon,
        gamma,
        ring,
    }
}

/// Basis diagrams of a family as strings.
#[pyfunction]
#[pyo3(signature = (family, n=None, r=None, s=None))]
fn enumerate(
    family: String,
    n: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
) -> PyResult<Vec<String>> {
    let fam = diagalg::diagram::FamilyTag::from_name(&family, r, s).map_err(err)?;
    let n = match fam {
        diagalg::diagram::FamilyTag::WalledBrauer { r, s } => r + s,
        _ => n.ok_or_else(|| PyValueError::new_err("n is required"))?,
    };
    let basis = diagalg::diagram::enumerate(fam, n).map_err(err)?;
    Ok(basis.iter().map(|d| d.to_string()).collect())
}

/// `left * right` as a list of `(coefficient, diagram)` pairs.
#[pyfunction]
#[pyo3(signature = (family, left, right, n=None, r=None, s=None, delta=None, epsilon=None, gamma=None, ring=None))]
#[allow(clippy::too_many_arguments)]
fn multiply(
    family: String,
    left: &str,
    right: &str,
    n: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    delta: Option<String>,
    epsilon: Option<String>,
    gamma: Option<String>,
    ring: Option<String>,
) -> PyResult<Vec<(String, String)>> {
    use diagalg::algebra::{multiply, AlgebraElement};
    use diagalg::diagram::Diagram;
    let spec = args(Some(family), n, r, s, delta, epsilon, gamma, ring)
        .spec()
        .map_err(err)?;
    let x =
        AlgebraElement::basis(&spec, Diagram::parse(spec.n(), left).map_err(err)?).map_err(err)?;
    let y =
        AlgebraElement::basis(&spec, Diagram::parse(spec.n(), right).map_err(err)?).map_err(err)?;
    let p = multiply(&x, &y).map_err(err)?;
    Ok(p.terms()
        .iter()
        .map(|(d, c)| (c.to_string(), d.to_string()))
        .collect())
}

/// Tor and Ext through degree `D`, each a list of `(free_rank, torsion)`.
/// Give either a diagram family or a group such as `"s3"`.
#[pyfunction]
#[pyo3(signature = (family=None, n=None, r=None, s=None, delta=None, epsilon=None, gamma=None, ring=None, group=None, quotient=None, D=3))]
#[allow(clippy::too_many_arguments, non_snake_case)]
fn homology(
    family: Option<String>,
    n: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    delta: Option<String>,
    epsilon: Option<String>,
    gamma: Option<String>,
    ring: Option<String>,
    group: Option<String>,
    quotient: Option<i64>,
    D: usize,
) -> PyResult<(Vec<Invariants>, Vec<Invariants>)> {
    use diagalg::algebra::{GroupSpec, QuotientSpec};
    use diagalg::homology::{tor_ext, AugmentedAlgebra, DEFAULT_BUDGET};
    let a = match group {
        Some(g) => {
            let g: GroupSpec = g.parse().map_err(err)?;
            let ring = ring.as_deref().unwrap_or("z").parse().map_err(err)?;
            AugmentedAlgebra::group(g, ring).map_err(err)?
        }
        None => {
            let spec = args(family, n, r, s, delta, epsilon, gamma, ring)
                .spec()
                .map_err(err)?;
            match quotient {
                Some(level) => {
                    AugmentedAlgebra::from_quotient(&QuotientSpec::new(spec, level).map_err(err)?)
                        .map_err(err)?
                }
                None => AugmentedAlgebra::from_spec(&spec).map_err(err)?,
            }
        }
    };
    let (t, e) = tor_ext(&a, D, DEFAULT_BUDGET).map_err(err)?;
    Ok((plain(&t.degrees), plain(&e.degrees)))
}

/// Tate table of a group as `{degree: (free_rank, torsion)}`.
#[pyfunction]
#[pyo3(signature = (group, D=3, ring="z"))]
#[allow(non_snake_case)]
fn tate_group(
    group: &str,
    D: usize,
    ring: &str,
) -> PyResult<std::collections::BTreeMap<i64, Invariants>> {
    let g = group.parse().map_err(err)?;
    let t = diagalg::tate::tate_group(g, D, ring.parse().map_err(err)?).map_err(err)?;
    Ok(t.groups
        .into_iter()
        .map(|(p, h)| (p, (h.free_rank, h.torsion)))
        .collect())
}

/// Runs a registry check with its defaults; returns whether it passed.
#[pyfunction]
#[pyo3(signature = (id, D=None))]
#[allow(non_snake_case)]
fn verify(id: &str, D: Option<usize>) -> PyResult<bool> {
    let entry = registry::lookup(id)
        .ok_or_else(|| PyValueError::new_err(format!("unknown check {id:?}")))?;
    let spec = registry::default_spec(entry).map_err(err)?;
    let v = registry::run(entry, &spec, D.unwrap_or(entry.defaults.degree), false).map_err(err)?;
    Ok(v.pass)
}

/// Ids of all registry checks.
#[pyfunction]
fn checks() -> Vec<&'static str> {
    registry::REGISTRY.iter().map(|e| e.id).collect()
}

#[pymodule]
fn pydiagalg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(multiply, m)?)?;
    m.add_function(wrap_pyfunction!(homology, m)?)?;
    m.add_function(wrap_pyfunction!(tate_group, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(checks, m)?)?;
    Ok(())
}
