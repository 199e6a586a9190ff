//! Homogeneous binary forms in `(s, t)` and points of `P^1`.

use crate::field::{Field, FieldElem};
use crate::poly::UniPoly;
use crate::{Error, Result};

/// A point of `P^1`: either `[1 : t]` or `[0 : 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P1Point {
    Finite(FieldElem),
    Infinity,
}

impl P1Point {
    /// Homogeneous coordinates `(s, t)`.
    pub fn coords(&self, field: &Field) -> (FieldElem, FieldElem) {
        match self {
            P1Point::Finite(t) => (field.one(), t.clone()),
            P1Point::Infinity => (field.zero(), field.one()),
        }
    }

    /// All points of `P^1` over the field, finite points first in field
    /// enumeration order, then infinity.
    pub fn all(field: &Field) -> Vec<P1Point> {
        let mut pts: Vec<P1Point> = field.elements().map(P1Point::Finite).collect();
        pts.push(P1Point::Infinity);
        pts
    }

    /// All points with both coordinates in the subfield `F_{p^d}`.
    pub fn all_in_subfield(field: &Field, d: usize) -> Result<Vec<P1Point>> {
        let mut pts: Vec<P1Point> = field
            .subfield_elements(d)?
            .into_iter()
            .map(P1Point::Finite)
            .collect();
        pts.push(P1Point::Infinity);
        Ok(pts)
    }

    pub fn format(&self, field: &Field) -> String {
        match self {
            P1Point::Finite(t) => format!("[1:{}]", field.format(t)),
            P1Point::Infinity => "[0:1]".to_string(),
        }
    }
}

/// A homogeneous binary form of declared degree `deg`; `coeffs[i]` is the
/// coefficient of `s^(deg-i) t^i`. The zero form of each degree is allowed
/// (all coefficients zero) and keeps its declared degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinForm {
    deg: usize,
    coeffs: Vec<FieldElem>,
}

impl BinForm {
    pub fn new(deg: usize, coeffs: Vec<FieldElem>) -> BinForm {
        assert_eq!(coeffs.len(), deg + 1, "binary form needs deg+1 coefficients");
        BinForm { deg, coeffs }
    }

    pub fn zero(field: &Field, deg: usize) -> BinForm {
        BinForm { deg, coeffs: vec![field.zero(); deg + 1] }
    }

    /// The linear form `a*s + b*t`.
    pub fn linear(a: FieldElem, b: FieldElem) -> BinForm {
        BinForm { deg: 1, coeffs: vec![a, b] }
    }

    /// `s^(deg-k) t^k` scaled by `c`.
    pub fn monomial(field: &Field, deg: usize, k: usize, c: FieldElem) -> BinForm {
        assert!(k <= deg);
        let mut coeffs = vec![field.zero(); deg + 1];
        coeffs[k] = c;
        BinForm { deg, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self, field: &Field) -> bool {
        self.coeffs.iter().all(|c| field.is_zero(c))
    }

    pub fn add(&self, field: &Field, other: &BinForm) -> BinForm {
        assert_eq!(self.deg, other.deg, "cannot add forms of different degrees");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| field.add(a, b))
            .collect();
        BinForm { deg: self.deg, coeffs }
    }

    pub fn neg(&self, field: &Field) -> BinForm {
        BinForm { deg: self.deg, coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect() }
    }

    pub fn sub(&self, field: &Field, other: &BinForm) -> BinForm {
        self.add(field, &other.neg(field))
    }

    pub fn mul(&self, field: &Field, other: &BinForm) -> BinForm {
        let deg = self.deg + other.deg;
        let mut coeffs = vec![field.zero(); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(&coeffs[i + j], &field.mul(a, b));
            }
        }
        BinForm { deg, coeffs }
    }

    pub fn scale(&self, field: &Field, c: &FieldElem) -> BinForm {
        BinForm { deg: self.deg, coeffs: self.coeffs.iter().map(|a| field.mul(a, c)).collect() }
    }

    pub fn pow(&self, field: &Field, e: usize) -> BinForm {
        let mut acc = BinForm::new(0, vec![field.one()]);
        for _ in 0..e {
            acc = acc.mul(field, self);
        }
        acc
    }

    pub fn eval(&self, field: &Field, s: &FieldElem, t: &FieldElem) -> FieldElem {
        let mut acc = field.zero();
        // sum coeffs[i] s^(deg-i) t^i via two running powers
        let mut spow = vec![field.one()];
        let mut tpow = vec![field.one()];
        for _ in 0..self.deg {
            spow.push(field.mul(spow.last().unwrap(), s));
            tpow.push(field.mul(tpow.last().unwrap(), t));
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let term = field.mul(c, &field.mul(&spow[self.deg - i], &tpow[i]));
            acc = field.add(&acc, &term);
        }
        acc
    }

    pub fn eval_p1(&self, field: &Field, p: &P1Point) -> FieldElem {
        let (s, t) = p.coords(field);
        self.eval(field, &s, &t)
    }

    /// Vanishing order at a point of `P^1`. At a finite point this is the
    /// multiplicity of the root in the dehomogenization `f(1, t)`; at
    /// infinity it is the multiplicity of `s = 0`, i.e. the number of
    /// leading zero coefficients from the `t^deg` end.
    pub fn vanishing_order(&self, field: &Field, p: &P1Point) -> Result<usize> {
        if self.is_zero(field) {
            return Err(Error::ZeroPolynomial);
        }
        match p {
            P1Point::Finite(a) => {
                // f(1, t) may drop degree; count (t - a) factors
                let uni = UniPoly::new(field, self.coeffs.clone());
                uni.vanishing_order(field, a)
            }
            P1Point::Infinity => {
                let top = self
                    .coeffs
                    .iter()
                    .rposition(|c| !field.is_zero(c))
                    .expect("nonzero form");
                Ok(self.deg - top)
            }
        }
    }

    /// Substitute `s -> a*s + b*t`, `t -> c*s + d*t`.
    pub fn subst_linear(&self, field: &Field, m: &[[FieldElem; 2]; 2]) -> BinForm {
        let snew = BinForm::linear(m[0][0].clone(), m[0][1].clone());
        let tnew = BinForm::linear(m[1][0].clone(), m[1][1].clone());
        let mut acc = BinForm::zero(field, self.deg);
        // powers of the two linear forms
        let mut sp: Vec<BinForm> = vec![BinForm::new(0, vec![field.one()])];
        let mut tp = sp.clone();
        for _ in 0..self.deg {
            sp.push(sp.last().unwrap().mul(field, &snew));
            tp.push(tp.last().unwrap().mul(field, &tnew));
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let term = sp[self.deg - i].mul(field, &tp[i]).scale(field, c);
            acc = acc.add(field, &term);
        }
        acc
    }

    /// Homogenize a univariate polynomial in `t` to the given degree.
    pub fn from_uni(field: &Field, deg: usize, p: &UniPoly) -> BinForm {
        assert!(p.degree().is_none_or(|d| d <= deg), "degree too large to homogenize");
        let coeffs = (0..=deg).map(|i| p.coeff(field, i)).collect();
        BinForm { deg, coeffs }
    }

    /// Dehomogenize by `s = 1`: the polynomial `f(1, t)`.
    pub fn restrict_s1(&self, field: &Field) -> UniPoly {
        UniPoly::new(field, self.coeffs.clone())
    }

    /// If `other == lambda * self` for a (unique, nonzero) scalar, return it.
    /// `self` must be nonzero.
    pub fn proportional(&self, field: &Field, other: &BinForm) -> Option<FieldElem> {
        if self.deg != other.deg || self.is_zero(field) {
            return None;
        }
        let pivot = self.coeffs.iter().position(|c| !field.is_zero(c)).unwrap();
        let lambda = field
            .div(&other.coeffs[pivot], &self.coeffs[pivot])
            .expect("pivot nonzero");
        if field.is_zero(&lambda) {
            return None;
        }
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            if field.mul(a, &lambda) != *b {
                return None;
            }
        }
        Some(lambda)
    }

    pub fn format(&self, field: &Field, s: &str, t: &str) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let cs = field.format(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            let mut factors = Vec::new();
            let se = self.deg - i;
            if se == 1 {
                factors.push(s.to_string());
            } else if se > 1 {
                factors.push(format!("{s}^{se}"));
            }
            if i == 1 {
                factors.push(t.to_string());
            } else if i > 1 {
                factors.push(format!("{t}^{i}"));
            }
            if !field.is_one(c) || factors.is_empty() {
                factors.insert(0, cs);
            }
            parts.push(factors.join("*"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_of_s_plus_t() {
        let f = Field::new(5, 1).unwrap();
        let l = BinForm::linear(f.one(), f.one());
        let c = l.pow(&f, 3);
        // (s+t)^3 = s^3 + 3s^2 t + 3s t^2 + t^3
        let expect: Vec<FieldElem> = [1, 3, 3, 1].iter().map(|&k| f.from_int(k)).collect();
        assert_eq!(c.coeffs(), &expect[..]);
    }

    #[test]
    fn vanishing_orders_at_both_charts() {
        let f = Field::new(3, 2).unwrap();
        // s^2 * t * (t - s)^3: order 2 at infinity, 1 at t=0, 3 at t=1
        let s2 = BinForm::monomial(&f, 2, 0, f.one());
        let t = BinForm::monomial(&f, 1, 1, f.one());
        let tms = BinForm::linear(f.from_int(-1), f.one());
        let form = s2.mul(&f, &t).mul(&f, &tms.pow(&f, 3));
        assert_eq!(form.vanishing_order(&f, &P1Point::Infinity).unwrap(), 2);
        assert_eq!(
            form.vanishing_order(&f, &P1Point::Finite(f.zero())).unwrap(),
            1
        );
        assert_eq!(
            form.vanishing_order(&f, &P1Point::Finite(f.one())).unwrap(),
            3
        );
        assert_eq!(
            form.vanishing_order(&f, &P1Point::Finite(f.gen())).unwrap(),
            0
        );
        // orders sum to the degree when the form splits
        let total: usize = P1Point::all(&f)
            .iter()
            .map(|p| form.vanishing_order(&f, p).unwrap())
            .sum();
        assert_eq!(total, form.degree());
    }

    #[test]
    fn linear_substitution_composes() {
        let f = Field::new(7, 1).unwrap();
        let form = BinForm::new(
            2,
            vec![f.from_int(1), f.from_int(3), f.from_int(5)],
        );
        let m = [
            [f.from_int(2), f.from_int(1)],
            [f.from_int(1), f.from_int(1)],
        ];
        let sub = form.subst_linear(&f, &m);
        for s in f.elements() {
            for t in f.elements() {
                let snew = f.add(&f.mul(&m[0][0], &s), &f.mul(&m[0][1], &t));
                let tnew = f.add(&f.mul(&m[1][0], &s), &f.mul(&m[1][1], &t));
                assert_eq!(sub.eval(&f, &s, &t), form.eval(&f, &snew, &tnew));
            }
        }
    }

    #[test]
    fn proportionality_detection() {
        let f = Field::new(3, 2).unwrap();
        let a = BinForm::new(1, vec![f.one(), f.gen()]);
        let b = a.scale(&f, &f.from_int(2));
        assert_eq!(a.proportional(&f, &b), Some(f.from_int(2)));
        let c = BinForm::new(1, vec![f.one(), f.one()]);
        assert_eq!(a.proportional(&f, &c), None);
        let z = BinForm::zero(&f, 1);
        assert_eq!(a.proportional(&f, &z), None);
    }
}
