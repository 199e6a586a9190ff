//! Sparse multivariate polynomials, weighted-homogeneous forms, and
//! rational expressions verified by cross-multiplication.

use std::collections::BTreeMap;

use crate::field::{Field, FieldElem};
use crate::poly::{BinForm, UniPoly};
use crate::{Error, Result};

/// A sparse multivariate polynomial: exponent vector -> nonzero coefficient.
/// The `BTreeMap` keeps term order deterministic everywhere (printing,
/// iteration, serialization).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, FieldElem>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: &Field, nvars: usize, c: &FieldElem) -> MPoly {
        let mut m = MPoly::zero(nvars);
        if !field.is_zero(c) {
            m.terms.insert(vec![0; nvars], c.clone());
        }
        m
    }

    pub fn var(field: &Field, nvars: usize, i: usize) -> MPoly {
        assert!(i < nvars);
        let mut exps = vec![0u16; nvars];
        exps[i] = 1;
        let mut m = MPoly::zero(nvars);
        m.terms.insert(exps, field.one());
        m
    }

    /// Build from (exponents, coefficient) pairs; repeated exponents add up.
    pub fn from_terms(
        field: &Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u16>, FieldElem)>,
    ) -> MPoly {
        let mut m = MPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            m.add_term(field, e, c);
        }
        m
    }

    fn add_term(&mut self, field: &Field, exps: Vec<u16>, c: FieldElem) {
        if field.is_zero(&c) {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = field.add(o.get(), &c);
                if field.is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &FieldElem)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, field: &Field, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(field, e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, field: &Field) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), field.neg(c))).collect(),
        }
    }

    pub fn sub(&self, field: &Field, other: &MPoly) -> MPoly {
        self.add(field, &other.neg(field))
    }

    pub fn mul(&self, field: &Field, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u16> = ea.iter().zip(eb).map(|(&x, &y)| x + y).collect();
                out.add_term(field, exps, field.mul(ca, cb));
            }
        }
        out
    }

    pub fn scale(&self, field: &Field, c: &FieldElem) -> MPoly {
        if field.is_zero(c) {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), field.mul(a, c))).collect(),
        }
    }

    pub fn scale_int(&self, field: &Field, k: i64) -> MPoly {
        self.scale(field, &field.from_int(k))
    }

    pub fn pow(&self, field: &Field, e: usize) -> MPoly {
        let mut acc = MPoly::constant(field, self.nvars, &field.one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(field, &base);
            }
        }
        acc
    }

    pub fn eval(&self, field: &Field, vals: &[FieldElem]) -> FieldElem {
        assert_eq!(vals.len(), self.nvars);
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (exp, v) in e.iter().zip(vals) {
                if *exp > 0 {
                    term = field.mul(&term, &field.pow(v, *exp as u64));
                }
            }
            acc = field.add(&acc, &term);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, field: &Field, i: usize) -> MPoly {
        assert!(i < self.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[i] -= 1;
            out.add_term(field, exps, field.scale(e[i] as i64, c));
        }
        out
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum())
            .max()
    }

    /// Weighted degree if the polynomial is homogeneous for the weights;
    /// the zero polynomial reports degree 0.
    pub fn weighted_degree(&self, weights: &[u32]) -> Result<u64> {
        assert_eq!(weights.len(), self.nvars);
        let mut deg: Option<u64> = None;
        for e in self.terms.keys() {
            let d: u64 = e.iter().zip(weights).map(|(&x, &w)| x as u64 * w as u64).sum();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(deg.unwrap_or(0))
    }

    /// Substitute multivariate polynomials for the variables.
    pub fn subst(&self, field: &Field, subs: &[MPoly]) -> Result<MPoly> {
        if subs.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: subs.len() });
        }
        let out_vars = subs.first().map_or(0, MPoly::nvars);
        assert!(subs.iter().all(|s| s.nvars == out_vars));
        let pows = self.power_tables(field, subs, |f| {
            MPoly::constant(f, out_vars, &f.one())
        }, MPoly::mul);
        let mut acc = MPoly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(field, out_vars, c);
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(field, &pows[i][exp as usize]);
                }
            }
            acc = acc.add(field, &term);
        }
        Ok(acc)
    }

    /// Substitute univariate polynomials for the variables.
    pub fn subst_uni(&self, field: &Field, subs: &[UniPoly]) -> Result<UniPoly> {
        if subs.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: subs.len() });
        }
        let pows = self.power_tables(field, subs, |f| UniPoly::from_ints(f, &[1]), UniPoly::mul);
        let mut acc = UniPoly::zero();
        for (e, c) in &self.terms {
            let mut term = UniPoly::new(field, vec![c.clone()]);
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(field, &pows[i][exp as usize]);
                }
            }
            acc = acc.add(field, &term);
        }
        Ok(acc)
    }

    /// Substitute rational expressions for the variables. The result is the
    /// exact rational function obtained by clearing denominators term by
    /// term; no cancellation is performed.
    pub fn subst_rational(&self, field: &Field, subs: &[RationalExpr]) -> Result<RationalExpr> {
        if subs.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: subs.len() });
        }
        let out_vars = subs.first().map_or(0, |r| r.num().nvars());
        assert!(subs.iter().all(|s| s.num().nvars() == out_vars));
        let one = MPoly::constant(field, out_vars, &field.one());
        let pows = self.power_tables(
            field,
            subs,
            |f| RationalExpr::from_poly(f, MPoly::constant(f, out_vars, &f.one())),
            RationalExpr::mul,
        );
        let mut acc = RationalExpr::from_poly(field, MPoly::zero(out_vars));
        for (e, c) in &self.terms {
            let mut term =
                RationalExpr::new(MPoly::constant(field, out_vars, c), one.clone()).unwrap();
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(field, &pows[i][exp as usize]);
                }
            }
            acc = acc.add(field, &term);
        }
        Ok(acc)
    }

    /// Substitute binary forms for the variables. The form must be
    /// homogeneous for `weights` and every substituent must satisfy
    /// `deg(subs[i]) = k * weights[i]` for one common `k >= 1`, so the result
    /// is again homogeneous, of degree `weighted_degree * k`.
    pub fn subst_bin(&self, field: &Field, subs: &[BinForm], weights: &[u32]) -> Result<BinForm> {
        if subs.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: subs.len() });
        }
        let wdeg = self.weighted_degree(weights)?;
        let k = subs
            .iter()
            .zip(weights)
            .find(|(_, &w)| w > 0)
            .map(|(s, &w)| s.degree() / w as usize)
            .unwrap_or(1)
            .max(1);
        for (s, &w) in subs.iter().zip(weights) {
            if s.degree() != k * w as usize {
                return Err(Error::WeightMismatch);
            }
        }
        let out_deg = (wdeg as usize) * k;
        let pows = self.power_tables(field, subs, |f| BinForm::new(0, vec![f.one()]), BinForm::mul);
        let mut acc = BinForm::zero(field, out_deg);
        for (e, c) in &self.terms {
            let mut term = BinForm::new(0, vec![c.clone()]);
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(field, &pows[i][exp as usize]);
                }
            }
            debug_assert_eq!(term.degree(), out_deg);
            acc = acc.add(field, &term);
        }
        Ok(acc)
    }

    /// Per-variable power tables up to the maximal exponent used.
    fn power_tables<T: Clone>(
        &self,
        field: &Field,
        subs: &[T],
        one: impl Fn(&Field) -> T,
        mul: impl Fn(&T, &Field, &T) -> T,
    ) -> Vec<Vec<T>> {
        let mut max_exp = vec![0u16; self.nvars];
        for e in self.terms.keys() {
            for (m, &x) in max_exp.iter_mut().zip(e) {
                *m = (*m).max(x);
            }
        }
        subs.iter()
            .enumerate()
            .map(|(i, s)| {
                let mut tab = vec![one(field)];
                for _ in 0..max_exp[i] {
                    tab.push(mul(tab.last().unwrap(), field, s));
                }
                tab
            })
            .collect()
    }

    /// Render with the given variable names, graded-lex descending.
    pub fn format(&self, field: &Field, vars: &[&str]) -> String {
        assert_eq!(vars.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u16>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u64 = a.iter().map(|&x| x as u64).sum();
            let db: u64 = b.iter().map(|&x| x as u64).sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut parts = Vec::new();
        for e in keys {
            let c = &self.terms[e];
            let cs = field.format(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            let mut factors = Vec::new();
            for (v, &exp) in vars.iter().zip(e) {
                match exp {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{exp}")),
                }
            }
            if !field.is_one(c) || factors.is_empty() {
                factors.insert(0, cs);
            }
            parts.push(factors.join("*"));
        }
        parts.join("+")
    }
}

/// A weighted-homogeneous form: an [`MPoly`] that is checked, once, to be
/// homogeneous for its weight vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogForm {
    poly: MPoly,
    weights: Vec<u32>,
    wdeg: u64,
}

impl HomogForm {
    pub fn new(poly: MPoly, weights: Vec<u32>) -> Result<HomogForm> {
        assert_eq!(weights.len(), poly.nvars());
        let wdeg = poly.weighted_degree(&weights)?;
        Ok(HomogForm { poly, weights, wdeg })
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weighted_degree(&self) -> u64 {
        self.wdeg
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn eval(&self, field: &Field, vals: &[FieldElem]) -> FieldElem {
        self.poly.eval(field, vals)
    }

    pub fn partial(&self, field: &Field, i: usize) -> MPoly {
        self.poly.partial(field, i)
    }

    pub fn subst_bin(&self, field: &Field, subs: &[BinForm]) -> Result<BinForm> {
        self.poly.subst_bin(field, subs, &self.weights)
    }

    pub fn format(&self, field: &Field, vars: &[&str]) -> String {
        self.poly.format(field, vars)
    }
}

/// A formal fraction of multivariate polynomials. No reduction is ever
/// performed; identities are decided by exact cross-multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalExpr {
    num: MPoly,
    den: MPoly,
}

impl RationalExpr {
    pub fn new(num: MPoly, den: MPoly) -> Result<RationalExpr> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        assert_eq!(num.nvars(), den.nvars());
        Ok(RationalExpr { num, den })
    }

    pub fn from_poly(field: &Field, p: MPoly) -> RationalExpr {
        let den = MPoly::constant(field, p.nvars(), &field.one());
        RationalExpr { num: p, den }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn add(&self, field: &Field, other: &RationalExpr) -> RationalExpr {
        RationalExpr {
            num: self
                .num
                .mul(field, &other.den)
                .add(field, &other.num.mul(field, &self.den)),
            den: self.den.mul(field, &other.den),
        }
    }

    pub fn neg(&self, field: &Field) -> RationalExpr {
        RationalExpr { num: self.num.neg(field), den: self.den.clone() }
    }

    pub fn sub(&self, field: &Field, other: &RationalExpr) -> RationalExpr {
        self.add(field, &other.neg(field))
    }

    pub fn mul(&self, field: &Field, other: &RationalExpr) -> RationalExpr {
        RationalExpr {
            num: self.num.mul(field, &other.num),
            den: self.den.mul(field, &other.den),
        }
    }

    pub fn pow(&self, field: &Field, e: usize) -> RationalExpr {
        RationalExpr { num: self.num.pow(field, e), den: self.den.pow(field, e) }
    }

    /// Exact equality as rational functions: `a/b == c/d  iff  a*d == c*b`.
    pub fn identical(&self, field: &Field, other: &RationalExpr) -> bool {
        self.num
            .mul(field, &other.den)
            .sub(field, &other.num.mul(field, &self.den))
            .is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::new(5, 1).unwrap()
    }

    #[test]
    fn arithmetic_matches_evaluation() {
        let f = f5();
        let x = MPoly::var(&f, 2, 0);
        let y = MPoly::var(&f, 2, 1);
        // p = (x + 2y)^3 - x*y
        let p = x
            .add(&f, &y.scale_int(&f, 2))
            .pow(&f, 3)
            .sub(&f, &x.mul(&f, &y));
        for a in f.elements() {
            for b in f.elements() {
                let direct = {
                    let s = f.add(&a, &f.scale(2, &b));
                    f.sub(&f.mul(&s, &f.mul(&s, &s)), &f.mul(&a, &b))
                };
                assert_eq!(p.eval(&f, &[a.clone(), b.clone()]), direct);
            }
        }
    }

    #[test]
    fn zero_terms_collapse() {
        let f = f5();
        let x = MPoly::var(&f, 1, 0);
        let p = x.add(&f, &x.scale_int(&f, 4)); // x + 4x = 5x = 0
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn weighted_homogeneity() {
        let f = f5();
        // w^2 - x^6 in vars (w, x) with weights (3, 1): homogeneous of degree 6
        let w = MPoly::var(&f, 2, 0);
        let x = MPoly::var(&f, 2, 1);
        let p = w.pow(&f, 2).sub(&f, &x.pow(&f, 6));
        assert_eq!(p.weighted_degree(&[3, 1]).unwrap(), 6);
        assert_eq!(p.weighted_degree(&[1, 1]), Err(Error::NotHomogeneous));
        let h = HomogForm::new(p, vec![3, 1]).unwrap();
        assert_eq!(h.weighted_degree(), 6);
    }

    #[test]
    fn partial_derivatives() {
        let f = f5();
        let x = MPoly::var(&f, 2, 0);
        let y = MPoly::var(&f, 2, 1);
        let p = x.pow(&f, 5).add(&f, &x.pow(&f, 2).mul(&f, &y)); // x^5 + x^2 y
        // d/dx = 5x^4 + 2xy = 2xy in char 5
        let px = p.partial(&f, 0);
        let expect = x.mul(&f, &y).scale_int(&f, 2);
        assert_eq!(px, expect);
        assert_eq!(p.partial(&f, 1), x.pow(&f, 2));
    }

    #[test]
    fn substitution_commutes_with_evaluation() {
        let f = Field::new(3, 2).unwrap();
        let x = MPoly::var(&f, 2, 0);
        let y = MPoly::var(&f, 2, 1);
        let p = x.pow(&f, 2).add(&f, &x.mul(&f, &y).scale_int(&f, 2));
        let sx = UniPoly::from_ints(&f, &[1, 0, 1]); // 1 + t^2
        let sy = UniPoly::from_ints(&f, &[0, 2]); // 2t
        let composed = p.subst_uni(&f, &[sx.clone(), sy.clone()]).unwrap();
        for t in f.elements() {
            let vx = sx.eval(&f, &t);
            let vy = sy.eval(&f, &t);
            assert_eq!(composed.eval(&f, &t), p.eval(&f, &[vx, vy]));
        }
        assert_eq!(
            p.subst_uni(&f, &[sx]).err(),
            Some(Error::ArityMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn binform_substitution_respects_weights() {
        let f = f5();
        // w^2 - x^6, weights (3,1); substitute w -> cubic form, x -> linear form
        let w = MPoly::var(&f, 2, 0);
        let x = MPoly::var(&f, 2, 1);
        let p = w.pow(&f, 2).sub(&f, &x.pow(&f, 6));
        let cube = BinForm::linear(f.one(), f.one()).pow(&f, 3); // (s+t)^3
        let lin = BinForm::linear(f.one(), f.one());
        let r = p.subst_bin(&f, &[cube, lin.clone()], &[3, 1]).unwrap();
        // ((s+t)^3)^2 - (s+t)^6 = 0
        assert!(r.is_zero(&f));
        assert_eq!(r.degree(), 6);
        // degree mismatch is rejected
        let quad = BinForm::linear(f.one(), f.one()).pow(&f, 2);
        assert_eq!(
            p.subst_bin(&f, &[quad, lin], &[3, 1]).err(),
            Some(Error::WeightMismatch)
        );
    }

    #[test]
    fn rational_identity_by_cross_multiplication() {
        let f = f5();
        let x = MPoly::var(&f, 1, 0);
        let one = MPoly::constant(&f, 1, &f.one());
        // (x^2 - 1)/(x - 1) == (x + 1)/1
        let num = x.pow(&f, 2).sub(&f, &one);
        let den = x.sub(&f, &one);
        let lhs = RationalExpr::new(num, den).unwrap();
        let rhs = RationalExpr::from_poly(&f, x.add(&f, &one));
        assert!(lhs.identical(&f, &rhs));
        // and a genuinely different pair
        let bad = RationalExpr::from_poly(&f, x.add(&f, &one.scale_int(&f, 2)));
        assert!(!lhs.identical(&f, &bad));
        assert_eq!(
            RationalExpr::new(MPoly::var(&f, 1, 0), MPoly::zero(1)).err(),
            Some(Error::ZeroDenominator)
        );
    }

    #[test]
    fn rational_substitution() {
        // g(x, y) = x^2 + y at x = t/(t+1), y = 1/(t+1) over F_3:
        // g = (t^2 + t + 1)/(t + 1)^2
        let f = Field::new(3, 1).unwrap();
        let g = MPoly::var(&f, 2, 0)
            .pow(&f, 2)
            .add(&f, &MPoly::var(&f, 2, 1));
        let t = MPoly::var(&f, 1, 0);
        let tp1 = t.add(&f, &MPoly::constant(&f, 1, &f.one()));
        let xs = RationalExpr::new(t.clone(), tp1.clone()).unwrap();
        let ys = RationalExpr::new(MPoly::constant(&f, 1, &f.one()), tp1.clone()).unwrap();
        let got = g.subst_rational(&f, &[xs, ys]).unwrap();
        let num = t
            .pow(&f, 2)
            .add(&f, &t)
            .add(&f, &MPoly::constant(&f, 1, &f.one()));
        let expect = RationalExpr::new(num, tp1.pow(&f, 2)).unwrap();
        assert!(got.identical(&f, &expect));
        assert_eq!(
            g.subst_rational(&f, &[]).err(),
            Some(Error::ArityMismatch { expected: 2, got: 0 })
        );
    }

    #[test]
    fn formatting_is_graded_lex() {
        let f = f5();
        let x = MPoly::var(&f, 2, 0);
        let y = MPoly::var(&f, 2, 1);
        let p = y
            .pow(&f, 2)
            .add(&f, &x.mul(&f, &y).scale_int(&f, 3))
            .add(&f, &MPoly::constant(&f, 2, &f.from_int(4)));
        assert_eq!(p.format(&f, &["x", "y"]), "3*x*y+y^2+4");
    }

    #[test]
    fn ring_laws_on_random_polynomials() {
        use rand_core::{RngCore, SeedableRng};
        let f = Field::new(3, 2).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260825);
        let pick_elem = |rng: &mut rand_chacha::ChaCha8Rng, f: &Field| {
            let mut idx = rng.next_u64() % f.order();
            let mut coords = Vec::new();
            for _ in 0..f.degree() {
                coords.push((idx % f.p() as u64) as i64);
                idx /= f.p() as u64;
            }
            f.from_coords(&coords).unwrap()
        };
        let pick_poly = |rng: &mut rand_chacha::ChaCha8Rng, f: &Field| {
            let terms: Vec<(Vec<u16>, FieldElem)> = (0..4)
                .map(|_| {
                    let e = vec![
                        (rng.next_u64() % 3) as u16,
                        (rng.next_u64() % 3) as u16,
                        (rng.next_u64() % 3) as u16,
                    ];
                    (e, pick_elem(rng, f))
                })
                .collect();
            MPoly::from_terms(f, 3, terms)
        };
        for _ in 0..100 {
            let (a, b, c) = (
                pick_poly(&mut rng, &f),
                pick_poly(&mut rng, &f),
                pick_poly(&mut rng, &f),
            );
            assert_eq!(a.add(&f, &b), b.add(&f, &a));
            assert_eq!(a.mul(&f, &b), b.mul(&f, &a));
            assert_eq!(
                a.mul(&f, &b.add(&f, &c)),
                a.mul(&f, &b).add(&f, &a.mul(&f, &c))
            );
            assert_eq!(a.sub(&f, &a), MPoly::zero(3));
            // evaluation is a ring homomorphism
            let pt = [
                pick_elem(&mut rng, &f),
                pick_elem(&mut rng, &f),
                pick_elem(&mut rng, &f),
            ];
            assert_eq!(
                a.mul(&f, &b).eval(&f, &pt),
                f.mul(&a.eval(&f, &pt), &b.eval(&f, &pt))
            );
            assert_eq!(
                a.add(&f, &b).eval(&f, &pt),
                f.add(&a.eval(&f, &pt), &b.eval(&f, &pt))
            );
        }
    }
}
