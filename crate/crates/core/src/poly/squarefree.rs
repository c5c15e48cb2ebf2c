use super::{PolyError, Polynomial, Rational};

/// One square-free component and the multiplicity shared by its roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeFactor {
    pub component: Polynomial,
    pub level: usize,
}

/// `p = unit * prod(component_i ^ level_i)` with monic, square-free,
/// pairwise coprime components and strictly increasing levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    pub factors: Vec<SquarefreeFactor>,
}

impl SquarefreeDecomposition {
    pub fn expand(&self) -> Polynomial {
        self.factors.iter().fold(Polynomial::constant(self.unit.clone()), |acc, f| &acc * &f.component.pow(f.level))
    }

    /// Component whose roots have exactly multiplicity `level`.
    pub fn at_level(&self, level: usize) -> Option<&Polynomial> {
        self.factors.iter().find(|f| f.level == level).map(|f| &f.component)
    }

    /// `(level, degree of component)` pairs.
    pub fn profile(&self) -> Vec<(usize, usize)> {
        self.factors.iter().map(|f| (f.level, f.component.deg())).collect()
    }

    /// Number of distinct roots over the complex numbers.
    pub fn distinct_roots(&self) -> usize {
        self.factors.iter().map(|f| f.component.deg()).sum()
    }
}

/// Yun's square-free decomposition over the rationals.
pub fn squarefree_decomposition(p: &Polynomial) -> Result<SquarefreeDecomposition, PolyError> {
    let unit = p.leading().cloned().ok_or(PolyError::ZeroPolynomial)?;
    let f = p.monic();
    let mut factors = Vec::new();
    if f.deg() == 0 {
        return Ok(SquarefreeDecomposition { unit, factors });
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let mut c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut level = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            factors.push(SquarefreeFactor { component: a.clone(), level });
        }
        b = b.exact_div(&a).expect("a divides b");
        c = d.exact_div(&a).expect("a divides d");
        d = &c - &b.derivative();
        level += 1;
    }
    Ok(SquarefreeDecomposition { unit, factors })
}

/// Monic polynomial with the same roots as `p`, each simple.
pub fn squarefree_part(p: &Polynomial) -> Result<Polynomial, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(p.exact_div(&g).expect("gcd divides p").monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn pure_power() {
        let d = squarefree_decomposition(&p("x - 1").pow(3)).unwrap();
        assert_eq!(d.factors, vec![SquarefreeFactor { component: p("x - 1"), level: 3 }]);
    }

    #[test]
    fn squarefree_input_is_one_factor() {
        let q = p("x^3 - 2*x + 5");
        let d = squarefree_decomposition(&q).unwrap();
        assert_eq!(d.factors, vec![SquarefreeFactor { component: q, level: 1 }]);
    }

    #[test]
    fn mixed_levels_with_unit() {
        // 3 (x - 2) (x + 1)^2 x^4
        let q = p("3*x - 6") * p("x + 1").pow(2) * p("x").pow(4);
        let d = squarefree_decomposition(&q).unwrap();
        assert_eq!(d.unit, int(3));
        assert_eq!(d.profile(), vec![(1, 1), (2, 1), (4, 1)]);
        assert_eq!(d.at_level(4), Some(&p("x")));
        assert_eq!(d.expand(), q);
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(squarefree_decomposition(&Polynomial::zero()), Err(PolyError::ZeroPolynomial));
        assert_eq!(squarefree_part(&Polynomial::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn constant_has_no_factors() {
        let d = squarefree_decomposition(&p("5")).unwrap();
        assert!(d.factors.is_empty());
        assert_eq!(d.expand(), p("5"));
    }

    #[test]
    fn part() {
        assert_eq!(squarefree_part(&(p("x - 1").pow(3) * p("2*x"))).unwrap(), p("x^2 - x"));
    }
}
