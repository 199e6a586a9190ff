//! Dense univariate polynomials over a [`Field`].

use crate::field::{Field, FieldElem};
use crate::{Error, Result};

/// A univariate polynomial, coefficients low degree first, trailing zeros
/// trimmed; the zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElem>) -> UniPoly {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: vec![] }
    }

    pub fn from_ints(field: &Field, cs: &[i64]) -> UniPoly {
        UniPoly::new(field, cs.iter().map(|&c| field.from_int(c)).collect())
    }

    /// `c * t^d`
    pub fn monomial(field: &Field, c: &FieldElem, d: usize) -> UniPoly {
        let mut coeffs = vec![field.zero(); d + 1];
        coeffs[d] = c.clone();
        UniPoly::new(field, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, field: &Field, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn add(&self, field: &Field, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.add(&self.coeff(field, i), &other.coeff(field, i)))
            .collect();
        UniPoly::new(field, coeffs)
    }

    pub fn neg(&self, field: &Field) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect() }
    }

    pub fn sub(&self, field: &Field, other: &UniPoly) -> UniPoly {
        self.add(field, &other.neg(field))
    }

    pub fn mul(&self, field: &Field, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(&coeffs[i + j], &field.mul(a, b));
            }
        }
        UniPoly::new(field, coeffs)
    }

    pub fn scale(&self, field: &Field, c: &FieldElem) -> UniPoly {
        UniPoly::new(field, self.coeffs.iter().map(|a| field.mul(a, c)).collect())
    }

    pub fn pow(&self, field: &Field, e: usize) -> UniPoly {
        let mut acc = UniPoly::from_ints(field, &[1]);
        for _ in 0..e {
            acc = acc.mul(field, self);
        }
        acc
    }

    pub fn eval(&self, field: &Field, x: &FieldElem) -> FieldElem {
        let mut acc = field.zero();
        for c in self.coeffs.iter().rev() {
            acc = field.add(&field.mul(&acc, x), c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self, field: &Field) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| field.scale(i as i64 + 1, c))
            .collect();
        UniPoly::new(field, coeffs)
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, field: &Field, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = field.inv(divisor.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        while rem.len() > dd {
            let lead = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dd;
            if !field.is_zero(&lead) {
                let q = field.mul(&lead, &lead_inv);
                for (k, c) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] = field.sub(&rem[shift + k], &field.mul(&q, c));
                }
                quot[shift] = q;
            }
            rem.pop();
            while rem.last().is_some_and(|c| field.is_zero(c)) {
                rem.pop();
            }
        }
        Ok((UniPoly::new(field, quot), UniPoly { coeffs: rem }))
    }

    /// Multiplicity of the root `a` (0 when `a` is not a root). Rejects the
    /// zero polynomial, whose vanishing order is undefined.
    pub fn vanishing_order(&self, field: &Field, a: &FieldElem) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let linear = UniPoly::new(field, vec![field.neg(a), field.one()]);
        let mut order = 0;
        let mut cur = self.clone();
        loop {
            if !field.is_zero(&cur.eval(field, a)) {
                return Ok(order);
            }
            let (q, r) = cur.div_rem(field, &linear)?;
            debug_assert!(r.is_zero());
            cur = q;
            order += 1;
        }
    }

    /// `self(inner(t))`.
    pub fn compose(&self, field: &Field, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(field, inner);
            acc = acc.add(field, &UniPoly::new(field, vec![c.clone()]));
        }
        acc
    }

    /// Render with the given variable letter, highest power first.
    pub fn format(&self, field: &Field, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let cs = field.format(c);
            let needs_parens = cs.contains('+') || cs.contains('-');
            let cs = if needs_parens { format!("({cs})") } else { cs };
            let part = match i {
                0 => cs,
                _ => {
                    let v = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                    if field.is_one(c) {
                        v
                    } else {
                        format!("{cs}*{v}")
                    }
                }
            };
            parts.push(part);
        }
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_invariants_exhaustive_small() {
        let f = Field::new(3, 1).unwrap();
        // all polynomials of degree <= 2 over F_3
        let polys: Vec<UniPoly> = (0..27)
            .map(|k| UniPoly::from_ints(&f, &[k % 3, (k / 3) % 3, (k / 9) % 3]))
            .collect();
        for a in &polys {
            for b in &polys {
                if b.is_zero() {
                    assert!(a.div_rem(&f, b).is_err());
                    continue;
                }
                let (q, r) = a.div_rem(&f, b).unwrap();
                assert_eq!(&q.mul(&f, b).add(&f, &r), a);
                assert!(r.degree() < b.degree() || r.is_zero());
            }
        }
    }

    #[test]
    fn vanishing_order_counts_linear_factors() {
        let f = Field::new(7, 1).unwrap();
        let two = f.from_int(2);
        let one = f.from_int(1);
        // (t - 2)^3 (t - 1)
        let lin2 = UniPoly::from_ints(&f, &[-2, 1]);
        let lin1 = UniPoly::from_ints(&f, &[-1, 1]);
        let p = lin2.pow(&f, 3).mul(&f, &lin1);
        assert_eq!(p.vanishing_order(&f, &two).unwrap(), 3);
        assert_eq!(p.vanishing_order(&f, &one).unwrap(), 1);
        assert_eq!(p.vanishing_order(&f, &f.from_int(3)).unwrap(), 0);
        assert_eq!(
            UniPoly::zero().vanishing_order(&f, &two),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn derivative_kills_p_th_powers() {
        let f = Field::new(5, 1).unwrap();
        let t5 = UniPoly::from_ints(&f, &[0, 0, 0, 0, 0, 1]);
        assert!(t5.derivative(&f).is_zero());
        let p = UniPoly::from_ints(&f, &[1, 2, 0, 3]);
        assert_eq!(p.derivative(&f), UniPoly::from_ints(&f, &[2, 0, 9]));
    }

    #[test]
    fn compose_is_evaluation_compatible() {
        let f = Field::new(5, 2).unwrap();
        let outer = UniPoly::from_ints(&f, &[3, 0, 1, 2]);
        let inner = UniPoly::from_ints(&f, &[1, 4, 2]);
        let comp = outer.compose(&f, &inner);
        for x in f.elements() {
            assert_eq!(
                comp.eval(&f, &x),
                outer.eval(&f, &inner.eval(&f, &x))
            );
        }
    }

    #[test]
    fn format_readable() {
        let f = Field::new(3, 2).unwrap();
        let p = UniPoly::new(&f, vec![f.from_int(2), f.gen(), f.one()]);
        assert_eq!(p.format(&f, "t"), "t^2+a*t+2");
        assert_eq!(UniPoly::zero().format(&f, "t"), "0");
    }
}
