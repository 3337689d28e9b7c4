//! Stringy E-function contributions computed directly from a stratified
//! resolution, global assembly over several singular points, stringy Euler
//! numbers, and stringy Hodge numbers with the duality check.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::{build_resolution, CatalogError, SingularitySpec, StratifiedResolution};
use crate::exactalg::{ExactError, Polynomial, RationalFunction, RationalNumber};

#[derive(Debug, thiserror::Error)]
pub enum StringyError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Contribution of one singular point computed as the sum over the strata
/// of the exceptional fiber:
///
///   sum_S  H(S; w) * prod_{j in S} (w - 1) / (w^(a_j + 1) - 1)
///
/// where a_j is the discrepancy of the j-th divisor through the stratum.
pub fn contribution_from_strata(
    res: &StratifiedResolution,
) -> Result<RationalFunction, StringyError> {
    // Sum all terms over the product of (w^(a_j + 1) - 1) for every divisor,
    // then cancel cyclotomic factors once at the end.
    let w_minus_1 = Polynomial::from_coeffs(&[-1, 1]);
    let binomial = |order: u64| -> Polynomial {
        &Polynomial::monomial(BigInt::one(), order as usize) - &Polynomial::one()
    };
    let orders: Vec<u64> = res.divisors.iter().map(|d| d.discrepancy + 1).collect();
    let mut common = Polynomial::one();
    for o in &orders {
        common = &common * &binomial(*o);
    }
    let mut num = Polynomial::zero();
    for stratum in &res.strata {
        let mut term = &common * &stratum.hodge;
        for id in &stratum.divisor_ids {
            term = term
                .div_exact(&binomial(orders[*id as usize]))
                .expect("factor of the common denominator");
            term = &term * &w_minus_1;
        }
        num = &num + &term;
    }
    Ok(RationalFunction::over_root_of_unity_factors(num, &orders)?)
}

/// Contribution for a catalogued singularity via its built-in resolution.
pub fn contribution_strata(spec: &SingularitySpec) -> Result<RationalFunction, StringyError> {
    let res = build_resolution(spec)?;
    contribution_from_strata(&res)
}

/// Stringy Euler number: the limit of the contribution (or of a full
/// stringy E-function) at w = 1.
pub fn stringy_euler(f: &RationalFunction) -> Result<RationalNumber, ExactError> {
    f.limit_at_one()
}

/// Stringy Euler number straight from a stratified resolution, without
/// rational-function arithmetic: sum over strata of the topological Euler
/// characteristic H(S; 1) times prod_j 1/(a_j + 1), the w -> 1 limit of
/// each (w - 1)/(w^(a_j + 1) - 1) factor.
pub fn stringy_euler_direct(res: &StratifiedResolution) -> RationalNumber {
    let mut total = BigRational::zero();
    for stratum in &res.strata {
        let mut term = BigRational::from(stratum.hodge.eval_at_one());
        for id in &stratum.divisor_ids {
            let a = res.divisors[*id as usize].discrepancy;
            term /= BigRational::from(BigInt::from(a + 1));
        }
        total += term;
    }
    total
}

/// Stringy E-function of a variety whose singular locus consists of
/// isolated catalogued points: the Hodge-Deligne polynomial of the smooth
/// part plus one contribution per point.
pub fn assemble_global(
    smooth_part: &Polynomial,
    contributions: &[RationalFunction],
) -> RationalFunction {
    let mut total = RationalFunction::from_polynomial(smooth_part.clone());
    for c in contributions {
        total = total.add(c);
    }
    total
}

/// Checks Poincare duality for a stringy E-function of a projective
/// variety of dimension d: w^d E(1/w) = E(w).
pub fn duality_holds(e: &RationalFunction, dim: usize) -> bool {
    e.dual(dim) == *e
}

/// Stringy Hodge numbers read off a polynomial stringy E-function of a
/// d-dimensional variety. Returns None when E is not a polynomial, has
/// degree above d, or has a negative coefficient.
pub fn hodge_numbers(e: &RationalFunction, dim: usize) -> Option<Vec<BigInt>> {
    let p = e.as_polynomial()?;
    if let Some(deg) = p.degree() {
        if deg > dim {
            return None;
        }
    }
    if !p.is_nonnegative() {
        return None;
    }
    let mut h = Vec::with_capacity(dim + 1);
    for i in 0..=dim {
        h.push(p.coeff(i));
    }
    Some(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl CheckStatus {
    pub fn from_bool(b: bool) -> Self {
        if b { CheckStatus::Pass } else { CheckStatus::Fail }
    }
}

/// Machine-readable result of one computation, shared by the library and
/// the command-line tool.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StringyReport {
    pub source: String,
    pub contribution: RationalFunction,
    /// Stringy Euler number rendered as "p/q" (or "p" when integral).
    pub euler: String,
    pub is_polynomial: bool,
    pub hodge_numbers: Option<Vec<u64>>,
    pub checks: BTreeMap<String, CheckStatus>,
}

impl StringyReport {
    pub fn new(source: impl Into<String>, contribution: RationalFunction) -> Result<Self, ExactError> {
        let euler = stringy_euler(&contribution)?;
        let is_polynomial = contribution.as_polynomial().is_some();
        Ok(StringyReport {
            source: source.into(),
            contribution,
            euler: render_rational(&euler),
            is_polynomial,
            hodge_numbers: None,
            checks: BTreeMap::new(),
        })
    }

    pub fn with_check(mut self, name: &str, status: CheckStatus) -> Self {
        self.checks.insert(name.to_string(), status);
        self
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|s| *s != CheckStatus::Fail)
    }
}

/// "p/q", or just "p" when the denominator is 1.
pub fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses "p" or "p/q".
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() || d.is_negative() {
        return None;
    }
    Some(BigRational::new(n, d))
}
