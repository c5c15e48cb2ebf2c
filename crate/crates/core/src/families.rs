//! Named graph families with fixed vertex numbering, their closed-form
//! spectra and their natural vertex partitions.
//!
//! Numbering conventions (0-based):
//!
//! * `G1(a, b)`: vertex 0 is the left end, `1..=a+1` the left clique,
//!   `a+2..=a+b+2` the right clique, `a+b+3` the right end. The two cliques
//!   are completely joined; each end sees only its own clique.
//! * `G2(n)`: vertices `1..n` form a clique and vertex 0 hangs off vertex 1.
//! * `H3`, `H4`, `H5`: vertices 0, 1, 2 are the three base vertices, followed
//!   by the extra blocks in parameter order (`a`, then `b`, then `c`).

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::partitions::Partition;
use crate::poly::{int, rat, Polynomial, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: FamilyId, reason: String },
    #[error("unknown family '{0}' (expected one of g1, g2, h1, h2, h3, h4, h5, kn, kn-e)")]
    UnknownFamily(String),
    #[error("{0} has no closed-form spectrum")]
    NoClosedForm(FamilyId),
    #[error("{0} has no canonical partition")]
    NoCanonicalPartition(FamilyId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    G1,
    G2,
    H1,
    H2,
    H3,
    H4,
    H5,
    Complete,
    CompleteMinusEdge,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::G1,
        FamilyId::G2,
        FamilyId::H1,
        FamilyId::H2,
        FamilyId::H3,
        FamilyId::H4,
        FamilyId::H5,
        FamilyId::Complete,
        FamilyId::CompleteMinusEdge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::G1 => "g1",
            FamilyId::G2 => "g2",
            FamilyId::H1 => "h1",
            FamilyId::H2 => "h2",
            FamilyId::H3 => "h3",
            FamilyId::H4 => "h4",
            FamilyId::H5 => "h5",
            FamilyId::Complete => "kn",
            FamilyId::CompleteMinusEdge => "kn-e",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let lower = s.to_ascii_lowercase();
        FamilyId::ALL.into_iter().find(|id| id.name() == lower).ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// Parameters as they arrive from a command line; unused ones must be absent.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub c: Option<usize>,
    pub n: Option<usize>,
}

/// A fully parameterized family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    G1 { a: usize, b: usize },
    G2 { n: usize },
    H1,
    H2,
    H3 { a: usize, b: usize, c: usize },
    H4 { a: usize, c: usize },
    H5 { a: usize, b: usize },
    Complete { n: usize },
    CompleteMinusEdge { n: usize },
}

impl FamilySpec {
    pub fn id(&self) -> FamilyId {
        match self {
            FamilySpec::G1 { .. } => FamilyId::G1,
            FamilySpec::G2 { .. } => FamilyId::G2,
            FamilySpec::H1 => FamilyId::H1,
            FamilySpec::H2 => FamilyId::H2,
            FamilySpec::H3 { .. } => FamilyId::H3,
            FamilySpec::H4 { .. } => FamilyId::H4,
            FamilySpec::H5 { .. } => FamilyId::H5,
            FamilySpec::Complete { .. } => FamilyId::Complete,
            FamilySpec::CompleteMinusEdge { .. } => FamilyId::CompleteMinusEdge,
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::G1 { a, b } => a + b + 4,
            FamilySpec::H1 | FamilySpec::H2 => 5,
            FamilySpec::H3 { a, b, c } => a + b + c + 3,
            FamilySpec::H4 { a, c } => a + c + 3,
            FamilySpec::H5 { a, b } => a + b + 3,
            FamilySpec::G2 { n } | FamilySpec::Complete { n } | FamilySpec::CompleteMinusEdge { n } => n,
        }
    }

    /// Builds a spec from loose parameters. `n`, when given alongside block
    /// sizes, must agree with the order they imply.
    pub fn from_params(id: FamilyId, p: FamilyParams) -> Result<Self, FamilyError> {
        let bad = |reason: String| FamilyError::InvalidParameters { family: id, reason };
        let need = |v: Option<usize>, name: &str| v.ok_or_else(|| bad(format!("--{name} is required")));
        let allowed: &[&str] = match id {
            FamilyId::G1 | FamilyId::H5 => &["a", "b", "n"],
            FamilyId::H3 => &["a", "b", "c", "n"],
            FamilyId::H4 => &["a", "c", "n"],
            FamilyId::H1 | FamilyId::H2 => &["n"],
            FamilyId::G2 | FamilyId::Complete | FamilyId::CompleteMinusEdge => &["n"],
        };
        for (name, value) in [("a", p.a), ("b", p.b), ("c", p.c)] {
            if value.is_some() && !allowed.contains(&name) {
                return Err(bad(format!("--{name} does not apply")));
            }
        }
        let spec = match id {
            FamilyId::G1 => FamilySpec::G1 { a: need(p.a, "a")?, b: need(p.b, "b")? },
            FamilyId::G2 => FamilySpec::G2 { n: need(p.n, "n")? },
            FamilyId::H1 => FamilySpec::H1,
            FamilyId::H2 => FamilySpec::H2,
            FamilyId::H3 => FamilySpec::H3 { a: need(p.a, "a")?, b: need(p.b, "b")?, c: need(p.c, "c")? },
            FamilyId::H4 => FamilySpec::H4 { a: need(p.a, "a")?, c: need(p.c, "c")? },
            FamilyId::H5 => FamilySpec::H5 { a: need(p.a, "a")?, b: need(p.b, "b")? },
            FamilyId::Complete => FamilySpec::Complete { n: need(p.n, "n")? },
            FamilyId::CompleteMinusEdge => FamilySpec::CompleteMinusEdge { n: need(p.n, "n")? },
        };
        if let Some(n) = p.n {
            if n != spec.order() {
                return Err(bad(format!("--n {n} disagrees with the implied order {}", spec.order())));
            }
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |reason: &str| Err(FamilyError::InvalidParameters { family: self.id(), reason: reason.into() });
        match *self {
            FamilySpec::G1 { a, b } if a + b + 4 < 5 => bad("a + b + 4 must be at least 5"),
            FamilySpec::G2 { n } if n < 5 => bad("n must be at least 5"),
            FamilySpec::H3 { a, b, c } if a == 0 || b == 0 || c == 0 => bad("a, b, c must be at least 1"),
            FamilySpec::H4 { a, c } if a == 0 || c == 0 => bad("a, c must be at least 1"),
            FamilySpec::H5 { a, b } if a == 0 || b == 0 => bad("a, b must be at least 1"),
            FamilySpec::Complete { n } if n < 2 => bad("n must be at least 2"),
            FamilySpec::CompleteMinusEdge { n } if n < 3 => bad("n must be at least 3"),
            _ if self.order() > crate::graph::MAX_ORDER => bad("order exceeds 32"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::G1 { a, b } => write!(f, "g1(a={a}, b={b})"),
            FamilySpec::G2 { n } => write!(f, "g2(n={n})"),
            FamilySpec::H1 => write!(f, "h1"),
            FamilySpec::H2 => write!(f, "h2"),
            FamilySpec::H3 { a, b, c } => write!(f, "h3(a={a}, b={b}, c={c})"),
            FamilySpec::H4 { a, c } => write!(f, "h4(a={a}, c={c})"),
            FamilySpec::H5 { a, b } => write!(f, "h5(a={a}, b={b})"),
            FamilySpec::Complete { n } => write!(f, "kn(n={n})"),
            FamilySpec::CompleteMinusEdge { n } => write!(f, "kn-e(n={n})"),
        }
    }
}

/// Vertex blocks of a family member in construction order.
fn blocks(spec: &FamilySpec) -> Vec<Vec<usize>> {
    let mut next = 0;
    let mut take = |k: usize| {
        let block: Vec<usize> = (next..next + k).collect();
        next += k;
        block
    };
    match *spec {
        FamilySpec::G1 { a, b } => vec![take(1), take(a + 1), take(b + 1), take(1)],
        FamilySpec::G2 { n } => vec![take(1), take(1), take(n - 2)],
        FamilySpec::H3 { a, b, c } => {
            let (v1, v2, v3) = (take(1), take(1), take(1));
            let (s12, s23, s123) = (take(a), take(b), take(c));
            vec![cat(&v1, &s12), cat(&v3, &s23), cat(&v2, &s123)]
        }
        FamilySpec::H4 { a, c } => {
            let (v1, v2, v3) = (take(1), take(1), take(1));
            let (s12, s123) = (take(a), take(c));
            vec![cat(&v1, &s12), cat(&v2, &s123), v3]
        }
        FamilySpec::H5 { a, b } => {
            let (v1, v2, v3) = (take(1), take(1), take(1));
            let (s12, s23) = (take(a), take(b));
            vec![cat(&v1, &s12), v2, cat(&v3, &s23)]
        }
        FamilySpec::Complete { n } => vec![take(n)],
        FamilySpec::CompleteMinusEdge { n } => vec![take(2), take(n - 2)],
        FamilySpec::H1 | FamilySpec::H2 => vec![],
    }
}

fn cat(x: &[usize], y: &[usize]) -> Vec<usize> {
    x.iter().chain(y).copied().collect()
}

fn clique(g: &mut Graph, block: &[usize]) {
    for (i, &u) in block.iter().enumerate() {
        for &v in &block[i + 1..] {
            g.add_edge(u, v);
        }
    }
}

fn join(g: &mut Graph, x: &[usize], y: &[usize]) {
    for &u in x {
        for &v in y {
            g.add_edge(u, v);
        }
    }
}

pub fn make_family(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let n = spec.order();
    let mut g = Graph::empty(n)?;
    let b = blocks(spec);
    match spec {
        FamilySpec::G1 { .. } => {
            let (v1, left, right, vn) = (&b[0], &b[1], &b[2], &b[3]);
            clique(&mut g, left);
            clique(&mut g, right);
            join(&mut g, v1, left);
            join(&mut g, left, right);
            join(&mut g, right, vn);
        }
        FamilySpec::G2 { .. } => {
            clique(&mut g, &cat(&b[1], &b[2]));
            join(&mut g, &b[0], &b[1]);
        }
        FamilySpec::H1 => {
            return Ok(Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (1, 3), (0, 4), (2, 4), (3, 4)])?);
        }
        FamilySpec::H2 => {
            return Ok(Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (2, 4), (3, 4)])?);
        }
        FamilySpec::H3 { .. } => {
            let (a, bb, c) = (&b[0], &b[1], &b[2]);
            clique(&mut g, a);
            clique(&mut g, bb);
            clique(&mut g, c);
            join(&mut g, a, c);
            join(&mut g, bb, c);
        }
        FamilySpec::H4 { .. } => {
            let (a, c, v3) = (&b[0], &b[1], &b[2]);
            clique(&mut g, &cat(a, c));
            join(&mut g, v3, c);
        }
        FamilySpec::H5 { .. } => {
            let (a, v2, bb) = (&b[0], &b[1], &b[2]);
            clique(&mut g, a);
            clique(&mut g, bb);
            join(&mut g, v2, a);
            join(&mut g, v2, bb);
        }
        FamilySpec::Complete { .. } => clique(&mut g, &b[0]),
        FamilySpec::CompleteMinusEdge { .. } => {
            clique(&mut g, &cat(&b[0], &b[1]));
            g.remove_edge(b[0][0], b[0][1]);
        }
    }
    Ok(g)
}

/// The natural block decomposition of a family member, in the row order
/// used for its quotient matrix.
pub fn canonical_partition(spec: &FamilySpec) -> Result<Partition, FamilyError> {
    spec.validate()?;
    if matches!(spec, FamilySpec::H1 | FamilySpec::H2) {
        return Err(FamilyError::NoCanonicalPartition(spec.id()));
    }
    Ok(Partition::new(spec.order(), blocks(spec)).expect("blocks cover the vertex set"))
}

/// `x (x - theta)^(n-3) q(x)` with `q` a monic quadratic whose roots are
/// the two remaining nonzero eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredSpectrum {
    pub n: usize,
    pub theta: Rational,
    pub theta_multiplicity: usize,
    pub quadratic: Polynomial,
}

impl FactoredSpectrum {
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::x() * Polynomial::linear(&self.theta).pow(self.theta_multiplicity) * self.quadratic.clone()
    }

    /// Sum of all eigenvalues with multiplicity.
    pub fn trace(&self) -> Rational {
        &self.theta * int(self.theta_multiplicity as i64) - self.quadratic.coeff(1)
    }

    /// Product of the two quadratic roots.
    pub fn quadratic_product(&self) -> Rational {
        self.quadratic.coeff(0)
    }
}

impl fmt::Display for FactoredSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x*({})*({})^{}", self.quadratic, Polynomial::linear(&self.theta), self.theta_multiplicity)
    }
}

/// Closed-form characteristic polynomial for the two extremal families.
pub fn closed_form_spectrum(id: FamilyId, n: usize) -> Result<FactoredSpectrum, FamilyError> {
    if !matches!(id, FamilyId::G1 | FamilyId::G2) {
        return Err(FamilyError::NoClosedForm(id));
    }
    if n < 5 {
        return Err(FamilyError::InvalidParameters { family: id, reason: "n must be at least 5".into() });
    }
    let k = n as i64;
    let theta = rat(k - 1, k - 2);
    let linear = -rat(2 * k - 3, k - 2);
    let constant = match id {
        FamilyId::G1 => Rational::one(),
        _ => rat(k * k - 3 * k + 4, k * k - 3 * k + 2),
    };
    Ok(FactoredSpectrum {
        n,
        theta,
        theta_multiplicity: n - 3,
        quadratic: Polynomial::new(vec![constant, linear, Rational::one()]),
    })
}
