//! Normalized-Laplacian spectra and the multiplicity-`n-3` classification.
//!
//! The normalized Laplacian `D^{-1/2} (D - A) D^{-1/2}` has irrational
//! entries, but it is similar (via `D^{1/2}`) to the random-walk Laplacian
//! `I - D^{-1} A`, whose entries are rational. Every exact computation here
//! runs on the random-walk form; the symmetric float form exists only to
//! cross-check the exact roots.

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{self, diameter, independence_number, induced_p4s, is_connected, Graph, GraphError};
use crate::poly::{
    int, multiplicity_at, rat, squarefree_decomposition, PolyError, Polynomial, Rational, RationalMatrix,
    SquarefreeDecomposition, SturmSequence,
};

/// Smallest order for which the classification is defined.
pub const MIN_CLASSIFY_ORDER: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("classification needs order >= {MIN_CLASSIFY_ORDER}, got {0}")]
    TooSmall(usize),
    #[error("graph {0} is not in the restricted multiplicity class")]
    NotInRestrictedClass(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `I - D^{-1} A`: ones on the diagonal and `-1/d_u` at `(u, v)` for each edge.
pub fn random_walk_laplacian(g: &Graph) -> Result<RationalMatrix, SpectralError> {
    let n = g.order();
    let mut m = RationalMatrix::identity(n);
    for u in 0..n {
        let d = g.degree(u);
        if d == 0 {
            return Err(SpectralError::IsolatedVertex(u));
        }
        let w = rat(-1, d as i64);
        for v in graph::bits(g.neighbors(u)) {
            m[(u, v)] = w.clone();
        }
    }
    Ok(m)
}

/// Symmetric normalized Laplacian in floating point, `-1/sqrt(d_u d_v)` on edges.
pub fn normalized_laplacian_float(g: &Graph) -> Result<DMatrix<f64>, SpectralError> {
    let n = g.order();
    let deg = g.degrees();
    if let Some(u) = deg.iter().position(|&d| d == 0) {
        return Err(SpectralError::IsolatedVertex(u));
    }
    Ok(DMatrix::from_fn(n, n, |u, v| {
        if u == v {
            1.0
        } else if g.has_edge(u, v) {
            -1.0 / ((deg[u] * deg[v]) as f64).sqrt()
        } else {
            0.0
        }
    }))
}

/// Eigenvalues of [`normalized_laplacian_float`], ascending.
pub fn float_spectrum(g: &Graph) -> Result<Vec<f64>, SpectralError> {
    let eig = SymmetricEigen::new(normalized_laplacian_float(g)?);
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Exact multiplicity profile of a connected graph's spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralSummary {
    pub n: usize,
    pub charpoly: Polynomial,
    pub decomposition: SquarefreeDecomposition,
    pub mult_at_zero: usize,
    pub mult_at_one: usize,
    /// Distinct eigenvalues strictly between 0 and 1.
    pub count_in_0_1: usize,
}

impl SpectralSummary {
    /// `(multiplicity, number of distinct eigenvalues with it)`, ascending.
    pub fn profile(&self) -> Vec<(usize, usize)> {
        self.decomposition.profile()
    }

    /// Square-free polynomial whose roots are the eigenvalues of multiplicity `m`.
    pub fn component_at(&self, m: usize) -> Option<&Polynomial> {
        self.decomposition.at_level(m)
    }

    pub fn has_mult(&self, m: usize) -> bool {
        self.component_at(m).is_some_and(|c| c.deg() >= 1)
    }

    /// Whether the second smallest eigenvalue is exactly 1: 1 is an
    /// eigenvalue and nothing lies strictly between 0 and 1.
    pub fn rho_second_smallest_is_one(&self) -> bool {
        self.mult_at_one >= 1 && self.count_in_0_1 == 0
    }

    /// The characteristic polynomial as a product of its square-free
    /// components, with the factor `x` pulled out front, e.g.
    /// `x*(x^2 - 7/3*x + 7/6)*(x - 4/3)^2`.
    pub fn factored(&self) -> String {
        let d = &self.decomposition;
        let mut parts = Vec::new();
        if !d.unit.is_one() {
            parts.push(d.unit.to_string());
        }
        let mut zero_power = 0;
        let mut rest = Vec::new();
        for f in &d.factors {
            let mut c = f.component.clone();
            if c.coeff(0).is_zero() {
                zero_power = f.level;
                c = c.exact_div(&Polynomial::x()).expect("x divides a component vanishing at 0");
            }
            if c.deg() >= 1 {
                rest.push(if f.level == 1 { format!("({c})") } else { format!("({c})^{}", f.level) });
            }
        }
        match zero_power {
            0 => {}
            1 => parts.push("x".to_string()),
            k => parts.push(format!("x^{k}")),
        }
        parts.extend(rest);
        if parts.is_empty() {
            return "1".to_string();
        }
        parts.join("*")
    }

    /// All eigenvalues with multiplicity, ascending, located by Sturm
    /// bisection to within `2^-40`.
    pub fn approximate_eigenvalues(&self) -> Result<Vec<f64>, SpectralError> {
        let width = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 40));
        let mut out = Vec::with_capacity(self.n);
        for f in &self.decomposition.factors {
            let roots = SturmSequence::new(&f.component)?.isolate(&int(-1), &int(3), &width)?;
            for (a, b) in roots {
                let mid = ((a + b) / int(2)).to_f64().unwrap_or(f64::NAN);
                out.extend(std::iter::repeat_n(mid, f.level));
            }
        }
        out.sort_by(f64::total_cmp);
        Ok(out)
    }
}

pub fn spectral_summary(g: &Graph) -> Result<SpectralSummary, SpectralError> {
    if !is_connected(g) {
        return Err(GraphError::Disconnected.into());
    }
    let charpoly = random_walk_laplacian(g)?.char_poly();
    summarize(g.order(), charpoly)
}

pub(crate) fn summarize(n: usize, charpoly: Polynomial) -> Result<SpectralSummary, SpectralError> {
    let decomposition = squarefree_decomposition(&charpoly)?;
    let mult_at_zero = multiplicity_at(&charpoly, &Rational::zero());
    let mult_at_one = multiplicity_at(&charpoly, &Rational::one());
    let count_in_0_1 = SturmSequence::new(&charpoly)?.count(&Rational::zero(), &Rational::one())?;
    Ok(SpectralSummary { n, charpoly, decomposition, mult_at_zero, mult_at_one, count_in_0_1 })
}

pub fn rho_second_smallest_is_one(g: &Graph) -> Result<bool, SpectralError> {
    Ok(spectral_summary(g)?.rho_second_smallest_is_one())
}

/// One classified graph. Serializes with the report column names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub graph6: String,
    pub n: usize,
    /// Some eigenvalue has multiplicity exactly `n - 3`.
    #[serde(rename = "in_Gn3")]
    pub in_gn3: bool,
    /// The square-free component at level `n - 3`, when present.
    pub theta_component: Option<Polynomial>,
    #[serde(rename = "rho_is_1")]
    pub rho_is_1: bool,
    pub nu: usize,
    pub diam: usize,
    pub cograph: bool,
    /// `in_Gn3`, second smallest eigenvalue not 1, and independence number 2.
    #[serde(rename = "in_G1")]
    pub in_g1: bool,
}

impl ClassRecord {
    pub const CSV_COLUMNS: [&'static str; 9] =
        ["graph6", "n", "in_Gn3", "theta_component", "rho_is_1", "nu", "diam", "cograph", "in_G1"];
}

pub fn classify(g: &Graph) -> Result<ClassRecord, SpectralError> {
    let summary = spectral_summary(g)?;
    classify_with_summary(g, &summary)
}

pub fn classify_with_summary(g: &Graph, summary: &SpectralSummary) -> Result<ClassRecord, SpectralError> {
    let n = g.order();
    if n < MIN_CLASSIFY_ORDER {
        return Err(SpectralError::TooSmall(n));
    }
    let theta_component = summary.component_at(n - 3).filter(|c| c.deg() >= 1).cloned();
    let in_gn3 = theta_component.is_some();
    let rho_is_1 = summary.rho_second_smallest_is_one();
    let nu = independence_number(g);
    let (diam, _) = diameter(g)?;
    let cograph = graph::is_cograph(g);
    let in_g1 = in_gn3 && !rho_is_1 && nu == 2;

    // an eigenvalue of multiplicity n-3 cannot be 1 once the second smallest
    // eigenvalue differs from 1
    if in_g1 {
        if let Some(c) = &theta_component {
            if c.eval(&Rational::one()).is_zero() {
                return Err(SpectralError::Invariant(format!("{g}: eigenvalue 1 has multiplicity n-3")));
            }
        }
    }

    Ok(ClassRecord { graph6: graph::write_graph6(g), n, in_gn3, theta_component, rho_is_1, nu, diam, cograph, in_g1 })
}

/// Residual of the degree quartic for an induced path `v1 v2 v3 v4` with
/// degrees `d1..d4` at eigenvalue `theta`:
/// `(1-θ)^4 d1 d2 d3 d4 - (d1 d2 + d3 d4 + d1 d4)(1-θ)^2 + 1`.
pub fn p4_quartic_residual(theta: &Rational, d1: u64, d2: u64, d3: u64, d4: u64) -> Rational {
    let s = Rational::one() - theta;
    let s2 = &s * &s;
    let r = |v: u64| Rational::from_integer(v.into());
    &s2 * &s2 * r(d1 * d2 * d3 * d4) - r(d1 * d2 + d3 * d4 + d1 * d4) * &s2 + Rational::one()
}

/// A vertex that swaps into an induced P4 while having a different degree
/// from the vertex it replaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct P4DegreeViolation {
    pub path: [usize; 4],
    /// Path position that was swapped out: 0 for the end, 1 for its neighbor.
    pub position: usize,
    pub replacement: usize,
}

/// For every induced P4 `v1 v2 v3 v4` (both orientations): any `u1` with
/// `u1 v2 v3 v4` induced has the degree of `v1`, and any `u2` with
/// `v1 u2 v3 v4` induced has the degree of `v2`. Returns the violations.
pub fn p4_degree_violations(g: &Graph) -> Vec<P4DegreeViolation> {
    let mut out = Vec::new();
    for path @ [v1, v2, v3, v4] in induced_p4s(g) {
        let off_path = g.vertex_mask() & !(graph_bit(v1) | graph_bit(v2) | graph_bit(v3) | graph_bit(v4));
        for u in graph::bits(off_path) {
            let ends = g.has_edge(u, v2) && !g.has_edge(u, v3) && !g.has_edge(u, v4);
            if ends && g.degree(u) != g.degree(v1) {
                out.push(P4DegreeViolation { path, position: 0, replacement: u });
            }
            let inner = g.has_edge(u, v1) && g.has_edge(u, v3) && !g.has_edge(u, v4);
            if inner && g.degree(u) != g.degree(v2) {
                out.push(P4DegreeViolation { path, position: 1, replacement: u });
            }
        }
    }
    out
}

/// [`p4_degree_violations`] restricted to members of the restricted class,
/// where the degree rule is expected to hold.
pub fn check_p4_degree_rule(g: &Graph) -> Result<Vec<P4DegreeViolation>, SpectralError> {
    if !classify(g)?.in_g1 {
        return Err(SpectralError::NotInRestrictedClass(graph::write_graph6(g)));
    }
    Ok(p4_degree_violations(g))
}

#[inline]
fn graph_bit(v: usize) -> u32 {
    1 << v
}
