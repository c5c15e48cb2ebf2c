use num_traits::{Signed, Zero};

use super::{squarefree_part, PolyError, Polynomial, Rational};

/// Sturm chain of the square-free part of a polynomial.
///
/// Every member after the first two is the negated remainder of its two
/// predecessors, rescaled by a positive constant to keep coefficients small.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<Polynomial>,
}

impl SturmSequence {
    pub fn new(p: &Polynomial) -> Result<Self, PolyError> {
        let s = squarefree_part(p)?;
        let mut chain = vec![s.clone(), s.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[k - 2].div_rem(&chain[k - 1])?;
            if r.is_zero() {
                break;
            }
            let lc = r.leading().expect("nonzero").abs();
            chain.push((-&r).scale(&lc.recip()));
        }
        Ok(Self { chain })
    }

    /// The square-free polynomial the chain was built from.
    pub fn base(&self) -> &Polynomial {
        &self.chain[0]
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let v = p.eval(x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                continue;
            };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the open interval `(lo, hi)`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> Result<usize, PolyError> {
        if lo >= hi {
            return Err(PolyError::EmptyInterval { lo: lo.to_string(), hi: hi.to_string() });
        }
        // V(lo) - V(hi) counts roots in the half-open (lo, hi]
        let half_open = self.variations(lo) - self.variations(hi);
        let at_hi = usize::from(self.base().eval(hi).is_zero());
        Ok(half_open - at_hi)
    }

    /// Isolates every distinct real root in `(lo, hi)` to an interval of
    /// width at most `width`. Exact rational roots hit by a bisection point
    /// come back as degenerate intervals.
    pub fn isolate(
        &self,
        lo: &Rational,
        hi: &Rational,
        width: &Rational,
    ) -> Result<Vec<(Rational, Rational)>, PolyError> {
        let mut out = Vec::new();
        let mut stack = vec![(lo.clone(), hi.clone(), self.count(lo, hi)?)];
        let two = Rational::from_integer(2.into());
        while let Some((a, b, k)) = stack.pop() {
            if k == 0 {
                continue;
            }
            if k == 1 {
                if let Some(root) = self.narrow(a.clone(), b.clone(), width) {
                    out.push(root);
                    continue;
                }
                if &(&b - &a) <= width {
                    out.push((a, b));
                    continue;
                }
            }
            let mid = (&a + &b) / &two;
            if self.base().eval(&mid).is_zero() {
                out.push((mid.clone(), mid.clone()));
            }
            let left = self.count(&a, &mid)?;
            let right = self.count(&mid, &b)?;
            stack.push((mid.clone(), b, right));
            stack.push((a, mid, left));
        }
        out.sort();
        Ok(out)
    }

    /// Plain sign bisection for an interval holding one simple root. Gives
    /// up (returns `None`) when an endpoint is itself a root, since the sign
    /// change is then not visible.
    fn narrow(&self, mut a: Rational, mut b: Rational, width: &Rational) -> Option<(Rational, Rational)> {
        let p = self.base();
        let sa = p.eval(&a);
        if sa.is_zero() || p.eval(&b).is_zero() {
            return None;
        }
        let two = Rational::from_integer(2.into());
        while &(&b - &a) > width {
            let mid = (&a + &b) / &two;
            let sm = p.eval(&mid);
            if sm.is_zero() {
                return Some((mid.clone(), mid));
            }
            if sm.is_positive() == sa.is_positive() {
                a = mid;
            } else {
                b = mid;
            }
        }
        Some((a, b))
    }
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<usize, PolyError> {
    if lo >= hi {
        return Err(PolyError::EmptyInterval { lo: lo.to_string(), hi: hi.to_string() });
    }
    SturmSequence::new(p)?.count(lo, hi)
}

/// Largest `k` with `(x - r)^k` dividing `p`. The zero polynomial yields 0.
pub fn multiplicity_at(p: &Polynomial, r: &Rational) -> usize {
    let mut k = 0;
    let mut q = p.clone();
    while !q.is_zero() {
        let (next, rem) = q.deflate(r);
        if !rem.is_zero() {
            break;
        }
        k += 1;
        q = next;
    }
    k
}
