use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{PolyError, Polynomial, Rational};

/// Dense square matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    order: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(order: usize) -> Self {
        Self { order, entries: vec![Rational::zero(); order * order] }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, PolyError> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(PolyError::Ragged);
        }
        Ok(Self { order, entries: rows.into_iter().flatten().collect() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn trace(&self) -> Rational {
        (0..self.order).map(|i| self[(i, i)].clone()).sum()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.order {
            self.entries.swap(a * self.order + j, b * self.order + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.order {
            self.entries.swap(i * self.order + a, i * self.order + b);
        }
    }

    /// Characteristic polynomial `det(xI - M)`.
    ///
    /// Reduces to upper Hessenberg form by similarity (Gaussian elimination
    /// below the subdiagonal) and then expands the Hessenberg determinant
    /// with the usual three-term recurrence. `O(m^3)` field operations.
    pub fn char_poly(&self) -> Polynomial {
        let n = self.order;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let pivot = (m..n).find(|&i| !h[(i, m - 1)].is_zero());
            let Some(i) = pivot else { continue };
            if i != m {
                h.swap_rows(i, m);
                h.swap_cols(i, m);
            }
            let t = h[(m, m - 1)].recip();
            for i in m + 1..n {
                if h[(i, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(i, m - 1)] * &t;
                for j in 0..n {
                    let d = &u * &h[(m, j)];
                    h[(i, j)] -= d;
                }
                for j in 0..n {
                    let d = &u * &h[(j, i)];
                    h[(j, m)] += d;
                }
            }
        }

        // p[k] is the characteristic polynomial of the leading k x k block
        let x = Polynomial::x();
        let mut p: Vec<Polynomial> = Vec::with_capacity(n + 1);
        p.push(Polynomial::one());
        for m in 0..n {
            let mut next = &p[m] * &(&x - &Polynomial::constant(h[(m, m)].clone()));
            let mut t = Rational::one();
            for i in 1..=m {
                t *= &h[(m - i + 1, m - i)];
                if t.is_zero() {
                    break;
                }
                let c = &t * &h[(m - i, m)];
                if !c.is_zero() {
                    next = &next - &p[m - i].scale(&c);
                }
            }
            p.push(next);
        }
        p.pop().expect("nonempty")
    }

    /// Characteristic polynomial by the Faddeev-LeVerrier recurrence,
    /// `O(m^4)`. Kept as an independent route for cross-checking.
    pub fn char_poly_faddeev_leverrier(&self) -> Polynomial {
        let n = self.order;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        // M_k = A * M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
        let mut mk = Self::zeros(n);
        for k in 1..=n {
            let mut next = self.mul(&mk);
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            mk = next;
            let am = self.mul(&mk);
            coeffs[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
        }
        Polynomial::new(coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order;
        assert_eq!(n, rhs.order, "order mismatch");
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let d = a * &rhs[(k, j)];
                    out[(i, j)] += d;
                }
            }
        }
        out
    }

    /// Determinant by Gaussian elimination over the rationals.
    pub fn determinant(&self) -> Rational {
        let n = self.order;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let inv = a[(col, col)].recip();
            det *= &a[(col, col)];
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] * &inv;
                for j in col..n {
                    let d = &f * &a[(col, j)];
                    a[(r, j)] -= d;
                }
            }
        }
        det
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.order + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.order + j]
    }
}

/// Right-aligned ASCII grid, one row per line.
impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|j| format!("{:>width$}", cells[i * self.order + j])).collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix(\n{self})")
    }
}
