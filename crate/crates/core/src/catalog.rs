//! Built-in log resolutions of the A-D-E singularities.
//!
//! For each (family, index n, ambient variable count m) this module
//! produces the divisor list with integer discrepancies together with all
//! nonempty strata and their Hodge-Deligne polynomials, ready for the
//! defining sum of the stringy E-function. The intersection diagrams and
//! the stratum polynomials are encoded as static rules (the output of the
//! blow-up computations), valid uniformly for m >= 3 thanks to the
//! rank-one quadric conventions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::Polynomial;
use crate::quadrics::{quadric_hodge, QuadricKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "A" | "a" => Some(Family::A),
            "D" | "d" => Some(Family::D),
            "E6" | "e6" => Some(Family::E6),
            "E7" | "e7" => Some(Family::E7),
            "E8" | "e8" => Some(Family::E8),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::A => "A",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("index n = {n} is out of range for family {family} ({bound})")]
    IndexOutOfRange {
        family: &'static str,
        n: i64,
        bound: &'static str,
    },
    #[error("ambient variable count m must be >= 3, got {0}")]
    AmbientTooSmall(i64),
    #[error("unknown divisor label `{0}` for this singularity")]
    UnknownLabel(String),
}

/// One A-D-E singularity of dimension m - 1: (family, index n, ambient m).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SingularitySpec {
    pub family: Family,
    pub n: i64,
    pub m: i64,
}

impl SingularitySpec {
    pub fn new(family: Family, n: i64, m: i64) -> Result<Self, CatalogError> {
        match family {
            Family::A if n < 1 => {
                return Err(CatalogError::IndexOutOfRange {
                    family: "A",
                    n,
                    bound: "requires n >= 1",
                })
            }
            Family::D if n < 4 => {
                return Err(CatalogError::IndexOutOfRange {
                    family: "D",
                    n,
                    bound: "requires n >= 4",
                })
            }
            Family::E6 if n != 6 => {
                return Err(CatalogError::IndexOutOfRange {
                    family: "E6",
                    n,
                    bound: "index is fixed to 6",
                })
            }
            Family::E7 if n != 7 => {
                return Err(CatalogError::IndexOutOfRange {
                    family: "E7",
                    n,
                    bound: "index is fixed to 7",
                })
            }
            Family::E8 if n != 8 => {
                return Err(CatalogError::IndexOutOfRange {
                    family: "E8",
                    n,
                    bound: "index is fixed to 8",
                })
            }
            _ => {}
        }
        if m < 3 {
            return Err(CatalogError::AmbientTooSmall(m));
        }
        Ok(SingularitySpec { family, n, m })
    }

    /// Singularity dimension d = m - 1.
    pub fn dim(&self) -> i64 {
        self.m - 1
    }

    /// The chain-length parameter k: A odd n = 2k-1, A even n = 2k,
    /// D even n = 2k, D odd n = 2k+1. Unused for the E families.
    pub fn k(&self) -> i64 {
        match self.family {
            Family::A => (self.n + 1) / 2,
            Family::D => self.n / 2,
            _ => 0,
        }
    }

    pub fn label(&self) -> String {
        match self.family {
            Family::A | Family::D => format!("{}{}", self.family.as_str(), self.n),
            _ => self.family.as_str().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisor {
    pub id: u32,
    pub label: String,
    pub discrepancy: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    /// Sorted, duplicate-free divisor ids; nonempty.
    pub divisor_ids: Vec<u32>,
    pub hodge: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratifiedResolution {
    pub divisors: Vec<Divisor>,
    pub strata: Vec<Stratum>,
}

/// Structured invariant violation, with a JSON-pointer-style path into the
/// serialized form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub path: String,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

impl StratifiedResolution {
    pub fn divisor_by_label(&self, label: &str) -> Option<&Divisor> {
        self.divisors.iter().find(|d| d.label == label)
    }

    /// Checks all structural invariants; violations come back as values.
    /// `max_stratum_size` is enforced when given (the built-in catalog has
    /// no quadruple intersections, so it uses 3).
    pub fn validate(&self, max_stratum_size: Option<usize>) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let mut ids = BTreeSet::new();
        let mut labels = BTreeSet::new();
        for (i, d) in self.divisors.iter().enumerate() {
            if !ids.insert(d.id) {
                out.push(Diagnostic {
                    path: format!("/divisors/{i}"),
                    message: format!("duplicate divisor id {}", d.id),
                });
            }
            if !labels.insert(d.label.clone()) {
                out.push(Diagnostic {
                    path: format!("/divisors/{i}/label"),
                    message: format!("duplicate divisor label `{}`", d.label),
                });
            }
        }
        let mut seen_sets = BTreeSet::new();
        for (i, s) in self.strata.iter().enumerate() {
            if s.divisor_ids.is_empty() {
                out.push(Diagnostic {
                    path: format!("/strata/{i}/divisors"),
                    message: "stratum divisor set is empty".to_string(),
                });
                continue;
            }
            if s.divisor_ids.windows(2).any(|p| p[0] >= p[1]) {
                out.push(Diagnostic {
                    path: format!("/strata/{i}/divisors"),
                    message: "stratum divisor ids are not strictly increasing".to_string(),
                });
            }
            for (j, id) in s.divisor_ids.iter().enumerate() {
                if !ids.contains(id) {
                    out.push(Diagnostic {
                        path: format!("/strata/{i}/divisors/{j}"),
                        message: format!("dangling divisor id {id}"),
                    });
                }
            }
            if !seen_sets.insert(s.divisor_ids.clone()) {
                out.push(Diagnostic {
                    path: format!("/strata/{i}/divisors"),
                    message: "duplicated stratum divisor set".to_string(),
                });
            }
            if let Some(max) = max_stratum_size {
                if s.divisor_ids.len() > max {
                    out.push(Diagnostic {
                        path: format!("/strata/{i}/divisors"),
                        message: format!(
                            "stratum has {} divisors, more than the allowed {max}",
                            s.divisor_ids.len()
                        ),
                    });
                }
            }
        }
        out
    }
}

/// Discrepancy of the named divisor in the resolution of `spec`.
pub fn discrepancy_of(spec: &SingularitySpec, label: &str) -> Result<u64, CatalogError> {
    let res = build_resolution(spec)?;
    res.divisor_by_label(label)
        .map(|d| d.discrepancy)
        .ok_or_else(|| CatalogError::UnknownLabel(label.to_string()))
}

/// Scratch pad of quadric polynomials at a fixed ambient count m.
struct Quadrics {
    a_m2: Polynomial,
    b_m2: Polynomial,
    c_m2: Polynomial,
    b_m1: Polynomial,
    c_m1: Polynomial,
    c_m: Polynomial,
    /// 1 + w + ... + w^(m-3)
    geom_m2: Polynomial,
    /// 1 + w + ... + w^(m-2)
    geom_m1: Polynomial,
}

impl Quadrics {
    fn at(m: i64) -> Self {
        let q = |kind, r| quadric_hodge(kind, r).expect("ranks >= 1 for m >= 3");
        Quadrics {
            a_m2: q(QuadricKind::A, m - 2),
            b_m2: q(QuadricKind::B, m - 2),
            c_m2: q(QuadricKind::C, m - 2),
            b_m1: q(QuadricKind::B, m - 1),
            c_m1: q(QuadricKind::C, m - 1),
            c_m: q(QuadricKind::C, m),
            geom_m2: Polynomial::new(vec![num_bigint::BigInt::from(1); (m - 2) as usize]),
            geom_m1: Polynomial::new(vec![num_bigint::BigInt::from(1); (m - 1) as usize]),
        }
    }
}

fn w() -> Polynomial {
    Polynomial::monomial(1, 1)
}

fn w_minus(c: i64) -> Polynomial {
    Polynomial::from_coeffs(&[-c, 1])
}

/// Builder that keeps labels, ids and strata in sync.
struct ResolutionBuilder {
    divisors: Vec<Divisor>,
    strata: Vec<Stratum>,
}

impl ResolutionBuilder {
    fn new() -> Self {
        ResolutionBuilder {
            divisors: Vec::new(),
            strata: Vec::new(),
        }
    }

    fn divisor(&mut self, label: String, discrepancy: i64) -> u32 {
        assert!(discrepancy >= 0, "Gorenstein canonical discrepancies are >= 0");
        let id = self.divisors.len() as u32;
        self.divisors.push(Divisor {
            id,
            label,
            discrepancy: discrepancy as u64,
        });
        id
    }

    fn id_of(&self, label: &str) -> u32 {
        self.divisors
            .iter()
            .find(|d| d.label == label)
            .unwrap_or_else(|| panic!("no divisor labelled {label}"))
            .id
    }

    fn stratum(&mut self, labels: &[&str], hodge: Polynomial) {
        let mut ids: Vec<u32> = labels.iter().map(|l| self.id_of(l)).collect();
        ids.sort_unstable();
        assert!(ids.windows(2).all(|p| p[0] < p[1]), "duplicate divisor in stratum");
        self.strata.push(Stratum {
            divisor_ids: ids,
            hodge,
        });
    }

    /// Replaces the Hodge-Deligne polynomial of an existing stratum.
    fn replace(&mut self, labels: &[&str], hodge: Polynomial) {
        let mut ids: Vec<u32> = labels.iter().map(|l| self.id_of(l)).collect();
        ids.sort_unstable();
        let s = self
            .strata
            .iter_mut()
            .find(|s| s.divisor_ids == ids)
            .unwrap_or_else(|| panic!("no stratum {labels:?} to replace"));
        s.hodge = hodge;
    }

    fn finish(self) -> StratifiedResolution {
        StratifiedResolution {
            divisors: self.divisors,
            strata: self.strata,
        }
    }
}

/// Builds the stratified log resolution for `spec`.
pub fn build_resolution(spec: &SingularitySpec) -> Result<StratifiedResolution, CatalogError> {
    // Re-validate so hand-built specs cannot sneak past the constructor.
    let spec = SingularitySpec::new(spec.family, spec.n, spec.m)?;
    let m = spec.m;
    let q = Quadrics::at(m);
    let mut b = ResolutionBuilder::new();
    match spec.family {
        Family::A => build_a(&mut b, &spec, &q),
        Family::D => build_d(&mut b, spec.k(), spec.n % 2 == 0, m, &q, &d_labels_plain()),
        Family::E6 => build_e6(&mut b, m, &q),
        Family::E7 => build_e78(&mut b, m, &q, false),
        Family::E8 => build_e78(&mut b, m, &q, true),
    }
    Ok(b.finish())
}

fn build_a(b: &mut ResolutionBuilder, spec: &SingularitySpec, q: &Quadrics) {
    let m = spec.m;
    let k = spec.k();
    let even = spec.n % 2 == 0;
    // Chain of point blow-ups: D_i has discrepancy i(m-3); for even n the
    // extra divisor D_(k+1) gets (n+1)(m-3)+1.
    for i in 1..=k {
        b.divisor(format!("D{i}"), i * (m - 3));
    }
    if even {
        b.divisor(format!("D{}", k + 1), (spec.n + 1) * (m - 3) + 1);
    }
    let last = if even { k + 1 } else { k };
    let mid_hodge = &(&q.b_m1 - &q.c_m1) - &Polynomial::one();
    if even {
        for i in 1..=k {
            let h = if i == 1 {
                &q.b_m1 - &Polynomial::one()
            } else {
                mid_hodge.clone()
            };
            b.stratum(&[&format!("D{i}")], h);
        }
        b.stratum(&[&format!("D{last}")], &q.geom_m1 - &q.c_m1);
    } else if k == 1 {
        // Single smooth quadric, first and last at once.
        b.stratum(&["D1"], q.c_m.clone());
    } else {
        b.stratum(&["D1"], &q.b_m1 - &Polynomial::one());
        for i in 2..k {
            b.stratum(&[&format!("D{i}")], mid_hodge.clone());
        }
        b.stratum(&[&format!("D{k}")], &q.c_m - &q.c_m1);
    }
    for i in 1..last {
        b.stratum(&[&format!("D{i}"), &format!("D{}", i + 1)], q.c_m1.clone());
    }
}

/// Label scheme for the D-family diagram, parameterized so the E7/E8
/// builders can reuse the D-even strata over their own divisor names.
struct DLabels {
    d: fn(i64) -> String,
    e: fn(i64) -> String,
    f: fn(i64) -> String,
    g: fn(i64) -> String,
}

fn d_labels_plain() -> DLabels {
    DLabels {
        d: |i| format!("D{i}"),
        e: |i| format!("E{i}"),
        f: |i| format!("F{i}"),
        g: |i| format!("G{i}"),
    }
}

/// D-family resolution: divisors D_1..D_(k-1), E_1..E_(k-1), F_1, F_2,
/// G_1..G_(k-1) with the section-3 stratum table. `even` distinguishes
/// n = 2k from n = 2k+1. When `emit_divisors` is false the divisors are
/// assumed present already (E7/E8 reuse).
fn build_d(
    b: &mut ResolutionBuilder,
    k: i64,
    even: bool,
    m: i64,
    q: &Quadrics,
    lb: &DLabels,
) {
    debug_assert!(k >= 2);
    for i in 1..k {
        b.divisor((lb.d)(i), i * (m - 3));
    }
    for i in 1..k {
        b.divisor((lb.e)(i), 2 * i * (m - 3));
    }
    b.divisor((lb.f)(1), k * (m - 3));
    b.divisor((lb.f)(2), if even { k * (m - 3) } else { 2 * k * (m - 3) });
    for i in 1..k {
        // Line blow-up over D_i: twice its discrepancy plus (m-3).
        b.divisor((lb.g)(i), (2 * i + 1) * (m - 3));
    }
    d_strata(b, k, even, m, q, lb);
}

fn d_strata(b: &mut ResolutionBuilder, k: i64, even: bool, m: i64, q: &Quadrics, lb: &DLabels) {
    let one = Polynomial::one();
    let d_first = &q.a_m2 - &Polynomial::from_coeffs(&[1, 1]);
    let d_mid = &(&d_first - &q.b_m2) + &one;
    let e_first = &q.c_m - &q.b_m2;
    let e_mid = &(&q.c_m - &q.b_m2.scale(&2.into())) + &q.c_m2;
    let g_mid = &(&Polynomial::monomial(1, (m - 2) as usize) - &one) - &(&w_minus(1) * &q.c_m2);
    let geom_minus_c = &q.geom_m2 - &q.c_m2;
    let b_minus_1 = &q.b_m2 - &one;
    let b_minus_c_1 = &(&q.b_m2 - &q.c_m2) - &one;

    // Single-divisor strata.
    b.stratum(&[&(lb.d)(1)], d_first.clone());
    for i in 2..k {
        b.stratum(&[&(lb.d)(i)], d_mid.clone());
    }
    b.stratum(&[&(lb.e)(1)], e_first.clone());
    for i in 2..k {
        b.stratum(&[&(lb.e)(i)], e_mid.clone());
    }
    if even {
        b.stratum(&[&(lb.f)(1)], e_first.clone());
        b.stratum(&[&(lb.f)(2)], e_first.clone());
    } else {
        b.stratum(&[&(lb.f)(1)], &q.b_m1 - &q.b_m2);
        b.stratum(&[&(lb.f)(2)], &(&(&q.c_m - &q.c_m1) - &q.b_m2) + &q.c_m2);
    }
    for i in 1..k - 1 {
        b.stratum(&[&(lb.g)(i)], g_mid.clone());
    }
    if even {
        b.stratum(&[&(lb.g)(k - 1)], &w_minus(2) * &geom_minus_c);
    } else {
        b.stratum(&[&(lb.g)(k - 1)], g_mid.clone());
    }

    // Two-divisor strata.
    b.stratum(&[&(lb.d)(1), &(lb.e)(1)], b_minus_1.clone());
    for i in 2..k {
        b.stratum(&[&(lb.d)(i - 1), &(lb.d)(i)], b_minus_1.clone());
        b.stratum(&[&(lb.d)(i - 1), &(lb.e)(i)], b_minus_c_1.clone());
        b.stratum(&[&(lb.d)(i), &(lb.e)(i)], b_minus_c_1.clone());
    }
    b.stratum(&[&(lb.d)(k - 1), &(lb.f)(1)], b_minus_1.clone());
    if even {
        b.stratum(&[&(lb.d)(k - 1), &(lb.f)(2)], b_minus_1.clone());
    } else {
        b.stratum(&[&(lb.d)(k - 1), &(lb.f)(2)], b_minus_c_1.clone());
    }
    for i in 1..k - 1 {
        b.stratum(&[&(lb.d)(i), &(lb.g)(i)], &w_minus(1) * &q.c_m2);
        b.stratum(&[&(lb.e)(i), &(lb.g)(i)], geom_minus_c.clone());
        b.stratum(&[&(lb.e)(i + 1), &(lb.g)(i)], geom_minus_c.clone());
    }
    if even {
        b.stratum(&[&(lb.d)(k - 1), &(lb.g)(k - 1)], &w_minus(2) * &q.c_m2);
        b.stratum(&[&(lb.f)(1), &(lb.g)(k - 1)], geom_minus_c.clone());
    } else {
        b.stratum(&[&(lb.d)(k - 1), &(lb.g)(k - 1)], &w_minus(1) * &q.c_m2);
        b.stratum(&[&(lb.f)(1), &(lb.f)(2)], &q.c_m1 - &q.c_m2);
    }
    b.stratum(&[&(lb.e)(k - 1), &(lb.g)(k - 1)], geom_minus_c.clone());
    b.stratum(&[&(lb.f)(2), &(lb.g)(k - 1)], geom_minus_c.clone());

    // Three-divisor strata.
    for i in 2..k {
        b.stratum(
            &[&(lb.d)(i - 1), &(lb.d)(i), &(lb.e)(i)],
            q.c_m2.clone(),
        );
    }
    for i in 1..k - 1 {
        b.stratum(&[&(lb.d)(i), &(lb.e)(i), &(lb.g)(i)], q.c_m2.clone());
        b.stratum(&[&(lb.d)(i), &(lb.e)(i + 1), &(lb.g)(i)], q.c_m2.clone());
    }
    b.stratum(
        &[&(lb.d)(k - 1), &(lb.e)(k - 1), &(lb.g)(k - 1)],
        q.c_m2.clone(),
    );
    if even {
        b.stratum(
            &[&(lb.d)(k - 1), &(lb.f)(1), &(lb.g)(k - 1)],
            q.c_m2.clone(),
        );
    } else {
        b.stratum(
            &[&(lb.d)(k - 1), &(lb.f)(1), &(lb.f)(2)],
            q.c_m2.clone(),
        );
    }
    b.stratum(
        &[&(lb.d)(k - 1), &(lb.f)(2), &(lb.g)(k - 1)],
        q.c_m2.clone(),
    );
}

/// On-disk form of a resolution: divisors keyed by label, strata referring
/// to labels, Hodge-Deligne coefficients as decimal strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawResolution {
    pub divisors: Vec<RawDivisor>,
    pub strata: Vec<RawStratum>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawDivisor {
    pub label: String,
    pub discrepancy: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawStratum {
    pub divisors: Vec<String>,
    pub hodge: Polynomial,
}

impl StratifiedResolution {
    pub fn to_raw(&self) -> RawResolution {
        RawResolution {
            divisors: self
                .divisors
                .iter()
                .map(|d| RawDivisor {
                    label: d.label.clone(),
                    discrepancy: d.discrepancy as i64,
                })
                .collect(),
            strata: self
                .strata
                .iter()
                .map(|s| RawStratum {
                    divisors: s
                        .divisor_ids
                        .iter()
                        .map(|id| self.divisors[*id as usize].label.clone())
                        .collect(),
                    hodge: s.hodge.clone(),
                })
                .collect(),
        }
    }

    /// Validates and resolves a raw file into a StratifiedResolution.
    /// All violations are collected with JSON-pointer paths.
    pub fn from_raw(raw: &RawResolution) -> Result<Self, Vec<Diagnostic>> {
        let mut diags = Vec::new();
        let mut divisors = Vec::new();
        let mut by_label = std::collections::BTreeMap::new();
        for (i, d) in raw.divisors.iter().enumerate() {
            if d.discrepancy < 0 {
                diags.push(Diagnostic {
                    path: format!("/divisors/{i}/discrepancy"),
                    message: format!("discrepancy must be >= 0, got {}", d.discrepancy),
                });
                continue;
            }
            if by_label.insert(d.label.clone(), i as u32).is_some() {
                diags.push(Diagnostic {
                    path: format!("/divisors/{i}/label"),
                    message: format!("duplicate divisor label `{}`", d.label),
                });
                continue;
            }
            divisors.push(Divisor {
                id: i as u32,
                label: d.label.clone(),
                discrepancy: d.discrepancy as u64,
            });
        }
        let mut strata = Vec::new();
        for (i, s) in raw.strata.iter().enumerate() {
            let mut ids = Vec::new();
            let mut ok = true;
            for (j, label) in s.divisors.iter().enumerate() {
                match by_label.get(label) {
                    Some(id) => ids.push(*id),
                    None => {
                        diags.push(Diagnostic {
                            path: format!("/strata/{i}/divisors/{j}"),
                            message: format!("unknown divisor label `{label}`"),
                        });
                        ok = false;
                    }
                }
            }
            if !ok {
                continue;
            }
            ids.sort_unstable();
            strata.push(Stratum {
                divisor_ids: ids,
                hodge: s.hodge.clone(),
            });
        }
        let res = StratifiedResolution { divisors, strata };
        diags.extend(res.validate(None));
        if diags.is_empty() {
            Ok(res)
        } else {
            Err(diags)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("resolution serializes")
    }
}

fn build_e6(b: &mut ResolutionBuilder, m: i64, q: &Quadrics) {
    let one = Polynomial::one();
    for (i, coeff) in [(1, 1), (2, 2), (3, 4), (4, 6)] {
        b.divisor(format!("D{i}"), coeff * (m - 3));
    }
    // D5 blows up the singular line on D1.
    b.divisor("D5".to_string(), 3 * (m - 3));

    b.stratum(&["D1"], &q.a_m2 - &Polynomial::from_coeffs(&[1, 1]));
    b.stratum(&["D2"], &q.b_m1 - &q.b_m2);
    b.stratum(&["D3"], &(&(&q.b_m1 - &q.b_m2) - &q.c_m1) + &q.c_m2);
    b.stratum(&["D4"], &(&(&q.c_m - &q.b_m2) - &q.c_m1) + &q.c_m2);
    b.stratum(&["D5"], &w() * &(&q.geom_m2 - &q.c_m2));
    b.stratum(&["D1", "D2"], &q.b_m2 - &one);
    b.stratum(&["D1", "D3"], &(&q.b_m2 - &q.c_m2) - &one);
    b.stratum(&["D1", "D4"], &(&q.b_m2 - &q.c_m2) - &one);
    b.stratum(&["D1", "D5"], &w() * &q.c_m2);
    b.stratum(&["D2", "D3"], &q.c_m1 - &q.c_m2);
    b.stratum(&["D3", "D4"], &q.c_m1 - &q.c_m2);
    b.stratum(&["D4", "D5"], &q.geom_m2 - &q.c_m2);
    b.stratum(&["D1", "D2", "D3"], q.c_m2.clone());
    b.stratum(&["D1", "D3", "D4"], q.c_m2.clone());
    b.stratum(&["D1", "D4", "D5"], q.c_m2.clone());
}

/// E7 and E8 share the "D6 part" of the diagram: the D-even (k = 3)
/// strata are generated by the same builder and then patched where the
/// extra divisors C1 (and B1 for E8) change the open pieces.
fn build_e78(b: &mut ResolutionBuilder, m: i64, q: &Quadrics, e8: bool) {
    let one = Polynomial::one();
    // Point blow-up coefficients from the three-dimensional table, times
    // (m-3); line blow-ups get 2*(underlying discrepancy) + (m-3).
    if e8 {
        b.divisor("B1".to_string(), m - 3);
        b.divisor("C1".to_string(), 2 * (m - 3));
        b.divisor("D1".to_string(), 4 * (m - 3));
        b.divisor("D2".to_string(), 7 * (m - 3));
        b.divisor("E1".to_string(), 6 * (m - 3));
        b.divisor("E2".to_string(), 12 * (m - 3));
        b.divisor("F1".to_string(), 10 * (m - 3));
        b.divisor("F2".to_string(), 8 * (m - 3));
        b.divisor("G1".to_string(), 9 * (m - 3)); // over D1
        b.divisor("G2".to_string(), 15 * (m - 3)); // over D2
        b.divisor("H1".to_string(), 5 * (m - 3)); // over C1
        b.divisor("I1".to_string(), 3 * (m - 3)); // over B1
    } else {
        b.divisor("C1".to_string(), m - 3);
        b.divisor("D1".to_string(), 2 * (m - 3));
        b.divisor("D2".to_string(), 4 * (m - 3));
        b.divisor("E1".to_string(), 3 * (m - 3));
        b.divisor("E2".to_string(), 7 * (m - 3));
        b.divisor("F1".to_string(), 6 * (m - 3));
        b.divisor("F2".to_string(), 5 * (m - 3));
        b.divisor("G1".to_string(), 5 * (m - 3)); // over D1
        b.divisor("G2".to_string(), 9 * (m - 3)); // over D2
        b.divisor("H1".to_string(), 3 * (m - 3)); // over C1
    }

    // The 27 strata of the embedded D6 resolution (k = 3, n even).
    d_strata(b, 3, true, m, q, &d_labels_plain());

    let a_w1 = &q.a_m2 - &Polynomial::from_coeffs(&[1, 1]);
    let b_minus_1 = &q.b_m2 - &one;
    let b_minus_c_1 = &(&q.b_m2 - &q.c_m2) - &one;
    let c_2b_c = &(&q.c_m - &q.b_m2.scale(&2.into())) + &q.c_m2;
    let dd_open =
        &(&(&(&q.a_m2 - &q.b_m2.scale(&2.into())) + &q.c_m2) - &w()) + &one;
    let wc = &w() * &q.c_m2;
    let line_bundle = &w() * &(&q.geom_m2 - &q.c_m2);
    let geom_minus_c = &q.geom_m2 - &q.c_m2;

    // Pieces changed by the attachment of C1 (and B1 for E8).
    if e8 {
        b.replace(&["D1"], dd_open.clone());
        b.replace(&["D2"], dd_open.clone());
        b.replace(&["E1"], c_2b_c.clone());
        b.replace(&["F1"], c_2b_c.clone());
        b.replace(&["D1", "D2"], b_minus_c_1.clone());
        b.replace(&["D1", "E1"], b_minus_c_1.clone());
        b.replace(&["D2", "F1"], b_minus_c_1.clone());
    } else {
        b.replace(&["D1"], &(&q.a_m2 - &q.b_m2) - &w());
        b.replace(&["D2"], dd_open.clone());
        b.replace(&["F1"], c_2b_c.clone());
        b.replace(&["D1", "D2"], b_minus_c_1.clone());
        b.replace(&["D2", "F1"], b_minus_c_1.clone());
        // E1 and {D1,E1} keep their D6-part values.
    }

    if e8 {
        b.stratum(&["B1"], a_w1.clone());
        b.stratum(&["C1"], &(&q.a_m2 - &q.b_m2) - &w());
        b.stratum(&["H1"], line_bundle.clone());
        b.stratum(&["I1"], line_bundle.clone());
        b.stratum(&["B1", "C1"], wc.clone());
        b.stratum(&["B1", "I1"], wc.clone());
        b.stratum(&["C1", "H1"], wc.clone());
        b.stratum(&["B1", "D1"], b_minus_c_1.clone());
        b.stratum(&["B1", "E1"], b_minus_c_1.clone());
        b.stratum(&["C1", "D1"], b_minus_c_1.clone());
        b.stratum(&["C1", "D2"], b_minus_c_1.clone());
        b.stratum(&["C1", "F1"], b_minus_c_1.clone());
        b.stratum(&["E1", "I1"], geom_minus_c.clone());
        b.stratum(&["F1", "H1"], geom_minus_c.clone());
        b.stratum(&["B1", "C1", "D1"], q.c_m2.clone());
        b.stratum(&["B1", "D1", "E1"], q.c_m2.clone());
        b.stratum(&["B1", "E1", "I1"], q.c_m2.clone());
        b.stratum(&["C1", "D1", "D2"], q.c_m2.clone());
        b.stratum(&["C1", "D2", "F1"], q.c_m2.clone());
        b.stratum(&["C1", "F1", "H1"], q.c_m2.clone());
    } else {
        // E7: everything involving B1/I1 is dropped and five expressions
        // change (C1, D1, E1 pieces and the {C1,D1}, {D1,E1} intersections).
        b.stratum(&["C1"], a_w1.clone());
        b.stratum(&["H1"], line_bundle.clone());
        b.stratum(&["C1", "H1"], wc.clone());
        b.stratum(&["C1", "D1"], b_minus_1.clone());
        b.stratum(&["C1", "D2"], b_minus_c_1.clone());
        b.stratum(&["C1", "F1"], b_minus_c_1.clone());
        b.stratum(&["F1", "H1"], geom_minus_c.clone());
        b.stratum(&["C1", "D1", "D2"], q.c_m2.clone());
        b.stratum(&["C1", "D2", "F1"], q.c_m2.clone());
        b.stratum(&["C1", "F1", "H1"], q.c_m2.clone());
    }
}
