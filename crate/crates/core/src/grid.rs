//! Sweeps over parameter grids, computing each contribution by both routes
//! (strata sum and closed form) and recording whether they agree.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::catalog::SingularitySpec;
use crate::closedform::{contribution_closed, TableChoice};
use crate::exactalg::RationalFunction;
use crate::stringy::{contribution_strata, stringy_euler};

/// Outcome of evaluating one grid cell by both routes.
#[derive(Debug, Clone)]
pub struct GridRow {
    pub spec: SingularitySpec,
    pub strata: RationalFunction,
    pub closed: RationalFunction,
    pub euler: crate::exactalg::RationalNumber,
    pub routes_agree: bool,
    pub is_polynomial: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum GridError {
    #[error("{spec}: {message}")]
    Cell { spec: String, message: String },
}

/// Evaluates one cell: both routes, canonical comparison, Euler number.
pub fn evaluate_cell(spec: &SingularitySpec) -> Result<GridRow, GridError> {
    let wrap = |e: String| GridError::Cell { spec: spec.label(), message: e };
    let strata = contribution_strata(spec).map_err(|e| wrap(e.to_string()))?;
    let closed =
        contribution_closed(spec, TableChoice::General).map_err(|e| wrap(e.to_string()))?;
    let euler = stringy_euler(&strata).map_err(|e| wrap(e.to_string()))?;
    let routes_agree = strata == closed;
    let is_polynomial = strata.as_polynomial().is_some();
    Ok(GridRow { spec: spec.clone(), strata, closed, euler, routes_agree, is_polynomial })
}

/// Evaluates all cells sequentially, preserving input order.
pub fn sweep_sequential(specs: &[SingularitySpec]) -> Result<Vec<GridRow>, GridError> {
    specs.iter().map(evaluate_cell).collect()
}

/// Evaluates all cells, in parallel when the `parallel` feature is on.
/// Output order matches input order either way.
pub fn sweep(specs: &[SingularitySpec]) -> Result<Vec<GridRow>, GridError> {
    #[cfg(feature = "parallel")]
    {
        specs.par_iter().map(evaluate_cell).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(specs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Family;

    fn small_grid() -> Vec<SingularitySpec> {
        let mut specs = Vec::new();
        for m in 3..=6 {
            for n in 1..=6 {
                specs.push(SingularitySpec::new(Family::A, n, m).unwrap());
            }
            for n in 4..=7 {
                specs.push(SingularitySpec::new(Family::D, n, m).unwrap());
            }
            for (f, n) in [(Family::E6, 6), (Family::E7, 7), (Family::E8, 8)] {
                specs.push(SingularitySpec::new(f, n, m).unwrap());
            }
        }
        specs
    }

    #[test]
    fn routes_agree_on_small_grid() {
        for row in sweep(&small_grid()).unwrap() {
            assert!(row.routes_agree, "{}", row.spec.label());
        }
    }

    #[test]
    fn sweep_matches_sequential() {
        let specs = small_grid();
        let par = sweep(&specs).unwrap();
        let seq = sweep_sequential(&specs).unwrap();
        assert_eq!(par.len(), seq.len());
        for (a, b) in par.iter().zip(&seq) {
            assert_eq!(a.spec, b.spec);
            assert_eq!(a.strata, b.strata);
            assert_eq!(a.euler, b.euler);
        }
    }
}
