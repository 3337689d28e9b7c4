//! Exact computation of local contributions of A-D-E hypersurface
//! singularities to the stringy E-function, by two independent routes:
//! a sum over the strata of an explicit resolution, and closed-form
//! rational-function tables. The two routes are compared coefficient by
//! coefficient in canonical form.

pub mod catalog;
pub mod closedform;
pub mod exactalg;
pub mod grid;
pub mod quadrics;
pub mod stringy;

pub use catalog::{
    build_resolution, discrepancy_of, Diagnostic, Divisor, Family, RawResolution,
    SingularitySpec, StratifiedResolution, Stratum,
};
pub use closedform::{closed_form_parts, contribution_closed, is_polynomial_case, TableChoice};
pub use exactalg::{geom_sum, ExactError, Polynomial, RationalFunction, RationalNumber};
pub use grid::{evaluate_cell, sweep, sweep_sequential, GridRow};
pub use quadrics::{quadric_hodge, QuadricKind};
pub use stringy::{
    assemble_global, contribution_from_strata, contribution_strata, duality_holds,
    hodge_numbers, parse_rational, render_rational, stringy_euler, stringy_euler_direct,
    CheckStatus, StringyReport,
};
