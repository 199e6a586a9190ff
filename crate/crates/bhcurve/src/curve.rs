//! The Ballico-Hefez curve `B` of degree `q + 1`: parametrization, defining
//! forms, nodes, tangent lines, inflection points, the dual conic, and the
//! Coxeter plane model.
//!
//! Throughout, `phi` is the morphism
//! `[s : t] |-> [s^(q+1) : t^(q+1) : s t^q + s^q t]`, and the plane has
//! homogeneous coordinates `[x0 : x1 : x2]`. Affine charts use `x = x1/x0`,
//! `y = x2/x0`, so `phi(t) = (t^(q+1), t^q + t)` away from infinity.

use crate::field::{Field, FieldElem, PrimePower};
use crate::poly::{BinForm, HomogForm, MPoly, P1Point, UniPoly};
use crate::{Error, Result};

/// A projective point with normalized coordinates (first nonzero = 1), so
/// structural equality is projective equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<FieldElem>,
}

impl ProjPoint {
    pub fn new(field: &Field, coords: Vec<FieldElem>) -> Result<ProjPoint> {
        let pivot = coords
            .iter()
            .position(|c| !field.is_zero(c))
            .ok_or(Error::ZeroVector)?;
        let inv = field.inv(&coords[pivot])?;
        Ok(ProjPoint { coords: coords.iter().map(|c| field.mul(c, &inv)).collect() })
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn format(&self, field: &Field) -> String {
        let parts: Vec<String> = self.coords.iter().map(|c| field.format(c)).collect();
        format!("[{}]", parts.join(":"))
    }
}

/// A line in `P^2`, stored as normalized coefficients of
/// `c0*x0 + c1*x1 + c2*x2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    c: [FieldElem; 3],
}

impl Line {
    pub fn new(field: &Field, c: [FieldElem; 3]) -> Result<Line> {
        let pivot = c.iter().position(|x| !field.is_zero(x)).ok_or(Error::ZeroLine)?;
        let inv = field.inv(&c[pivot])?;
        Ok(Line {
            c: [
                field.mul(&c[0], &inv),
                field.mul(&c[1], &inv),
                field.mul(&c[2], &inv),
            ],
        })
    }

    pub fn coeffs(&self) -> &[FieldElem; 3] {
        &self.c
    }

    pub fn eval(&self, field: &Field, p: &ProjPoint) -> FieldElem {
        assert_eq!(p.coords().len(), 3);
        let mut acc = field.zero();
        for (c, x) in self.c.iter().zip(p.coords()) {
            acc = field.add(&acc, &field.mul(c, x));
        }
        acc
    }

    pub fn contains(&self, field: &Field, p: &ProjPoint) -> bool {
        field.is_zero(&self.eval(field, p))
    }

    /// Two independent points spanning the line, computed from the
    /// normalized coefficients: with the pivot at position `k`, the vectors
    /// are `e_i - c_i e_k` for the two non-pivot positions `i`.
    pub fn spanning_points(&self, field: &Field) -> [Vec<FieldElem>; 2] {
        let k = self
            .c
            .iter()
            .position(|x| field.is_one(x))
            .expect("normalized line has a unit pivot");
        let mut out: Vec<Vec<FieldElem>> = Vec::new();
        for i in (0..3).filter(|i| *i != k) {
            let mut v = vec![field.zero(), field.zero(), field.zero()];
            v[i] = field.one();
            v[k] = field.neg(&self.c[i]);
            out.push(v);
        }
        [out[0].clone(), out[1].clone()]
    }

    /// Pull the line back along a parametrized curve in `P^2`.
    pub fn pullback(&self, field: &Field, curve: &ParamCurve) -> BinForm {
        let mut acc = BinForm::zero(field, curve.degree());
        for (c, coord) in self.c.iter().zip(&curve.coords) {
            acc = acc.add(field, &coord.scale(field, c));
        }
        acc
    }

    pub fn format(&self, field: &Field) -> String {
        let poly = MPoly::from_terms(
            field,
            3,
            [
                (vec![1, 0, 0], self.c[0].clone()),
                (vec![0, 1, 0], self.c[1].clone()),
                (vec![0, 0, 1], self.c[2].clone()),
            ],
        );
        format!("{} = 0", poly.format(field, &["x0", "x1", "x2"]))
    }
}

/// The parametrization `phi` as a triple of binary forms of degree `q + 1`.
#[derive(Debug, Clone)]
pub struct ParamCurve {
    pub coords: [BinForm; 3],
}

impl ParamCurve {
    pub fn degree(&self) -> usize {
        self.coords[0].degree()
    }

    pub fn eval(&self, field: &Field, p: &P1Point) -> ProjPoint {
        let (s, t) = p.coords(field);
        let coords = self.coords.iter().map(|f| f.eval(field, &s, &t)).collect();
        ProjPoint::new(field, coords).expect("phi never vanishes on P^1")
    }
}

/// `phi = [s^(q+1) : t^(q+1) : s t^q + s^q t]` over the given field.
pub fn bh_parametrization(q: &PrimePower, field: &Field) -> ParamCurve {
    let d = q.q as usize + 1;
    let one = field.one();
    let mut middle = BinForm::monomial(field, d, q.q as usize, one.clone());
    middle = middle.add(field, &BinForm::monomial(field, d, 1, one.clone()));
    ParamCurve {
        coords: [
            BinForm::monomial(field, d, 0, one.clone()),
            BinForm::monomial(field, d, d, one),
            middle,
        ],
    }
}

/// The defining form of the image curve `B` in `P^2`, of degree `q + 1`.
///
/// For odd `p`:
/// `2 (x0^q x1 + x0 x1^q) - x2^(q+1) - (x2^2 - 4 x0 x1)^((q+1)/2)`;
/// for `p = 2` (with `q = 2^nu`):
/// `x0^q x1 + x0 x1^q + x2^(q+1) + sum_{i=0}^(nu-1) (x0 x1)^(2^i) x2^(q+1-2^(i+1))`.
pub fn defining_form(q: &PrimePower, field: &Field) -> HomogForm {
    let qe = q.q as u16;
    let poly = if q.p == 2 {
        let mut terms = vec![
            (vec![qe, 1, 0], field.one()),
            (vec![1, qe, 0], field.one()),
            (vec![0, 0, qe + 1], field.one()),
        ];
        for i in 0..q.nu {
            let e = 1u16 << i;
            terms.push((vec![e, e, qe + 1 - 2 * e], field.one()));
        }
        MPoly::from_terms(field, 3, terms)
    } else {
        let x0 = MPoly::var(field, 3, 0);
        let x1 = MPoly::var(field, 3, 1);
        let x2 = MPoly::var(field, 3, 2);
        let x0q = x0.pow(field, q.q as usize);
        let x1q = x1.pow(field, q.q as usize);
        let head = x0q
            .mul(field, &x1)
            .add(field, &x0.mul(field, &x1q))
            .scale_int(field, 2);
        let x2sq = x2.pow(field, 2);
        let tail = x2sq
            .sub(field, &x0.mul(field, &x1).scale_int(field, 4))
            .pow(field, (q.q as usize + 1) / 2);
        head.sub(field, &x2.pow(field, q.q as usize + 1))
            .sub(field, &tail)
    };
    HomogForm::new(poly, vec![1, 1, 1]).expect("defining form is homogeneous")
}

/// Substitute the parametrization into a candidate plane form and test for
/// the zero binary form. With the true defining form this certifies the
/// polynomial identity `F(phi(s, t)) = 0`.
pub fn form_vanishes_on_curve(q: &PrimePower, field: &Field, form: &HomogForm) -> bool {
    let phi = bh_parametrization(q, field);
    form.subst_bin(field, &phi.coords)
        .map(|f| f.is_zero(field))
        .unwrap_or(false)
}

/// `F(phi(s, t)) = 0` for the canonical defining form.
pub fn verify_on_curve(q: &PrimePower, field: &Field) -> bool {
    form_vanishes_on_curve(q, field, &defining_form(q, field))
}

/// The defining form with a single coefficient flipped (the `x2^(q+1)` term
/// gains 1). Used by fault-injection paths to show failures propagate.
pub fn perturbed_form(q: &PrimePower, field: &Field) -> HomogForm {
    let bump = MPoly::from_terms(field, 3, [(vec![0, 0, q.q as u16 + 1], field.one())]);
    let poly = defining_form(q, field).poly().add(field, &bump);
    HomogForm::new(poly, vec![1, 1, 1]).expect("still homogeneous")
}

/// One node of `B`: the image point where the parameters `tau` and `tau^q`
/// collide, with the two branch tangent directions in the affine chart.
#[derive(Debug, Clone)]
pub struct NodeRecord {
    pub tau: FieldElem,
    pub tau_conj: FieldElem,
    pub image: ProjPoint,
    /// Direction vectors `(dx, dy)` of the branches through `tau` and
    /// `tau^q` respectively: `(tau^q, 1)` and `(tau, 1)`.
    pub branch_dirs: [(FieldElem, FieldElem); 2],
}

/// All nodes of `B`, enumerated deterministically: `tau` runs over
/// `F_{q^2} \ F_q` in field order, keeping each conjugate pair once (the
/// first member seen). The ambient field must contain `F_{q^2}`.
pub fn nodes(q: &PrimePower, field: &Field) -> Result<Vec<NodeRecord>> {
    let phi = bh_parametrization(q, field);
    let ext = field.subfield_elements(2 * q.nu as usize)?;
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for tau in ext {
        if field.in_subfield(&tau, q.nu as usize).unwrap_or(false) {
            continue;
        }
        let conj = field.frobenius(&tau, q.nu);
        if seen.contains(&tau) || seen.contains(&conj) {
            continue;
        }
        seen.insert(tau.clone());
        let image = phi.eval(field, &P1Point::Finite(tau.clone()));
        debug_assert_eq!(image, phi.eval(field, &P1Point::Finite(conj.clone())));
        let dirs = [(conj.clone(), field.one()), (tau.clone(), field.one())];
        out.push(NodeRecord { tau, tau_conj: conj, image, branch_dirs: dirs });
    }
    let expected = (q.q as usize * q.q as usize - q.q as usize) / 2;
    assert_eq!(out.len(), expected, "node count must be (q^2 - q)/2");
    Ok(out)
}

/// Full verification report for the node structure.
#[derive(Debug, Clone)]
pub struct NodesReport {
    pub records: Vec<NodeRecord>,
    pub count_ok: bool,
    pub images_singular: bool,
    pub images_distinct: bool,
    pub branch_dirs_distinct: bool,
    pub smooth_elsewhere: bool,
}

impl NodesReport {
    pub fn all_ok(&self) -> bool {
        self.count_ok
            && self.images_singular
            && self.images_distinct
            && self.branch_dirs_distinct
            && self.smooth_elsewhere
    }
}

/// Compute the nodes and verify every claim about them: the count is
/// `(q^2 - q)/2`, the images are exactly the singular points of the defining
/// form, they are pairwise distinct, the two branch directions at each node
/// differ, and `phi` is unramified-immersive at every parameter of
/// `P^1(F_{q^2})` outside the node parameters (gradient nonzero there).
pub fn nodes_verified(q: &PrimePower, field: &Field) -> Result<NodesReport> {
    let records = nodes(q, field)?;
    let expected = (q.q as usize * q.q as usize - q.q as usize) / 2;
    let form = defining_form(q, field);
    let partials: Vec<MPoly> = (0..3).map(|i| form.partial(field, i)).collect();
    let grad_zero = |p: &ProjPoint| {
        partials
            .iter()
            .all(|d| field.is_zero(&d.eval(field, p.coords())))
    };
    let images_singular = records.iter().all(|r| grad_zero(&r.image));
    let image_set: std::collections::BTreeSet<&ProjPoint> =
        records.iter().map(|r| &r.image).collect();
    let images_distinct = image_set.len() == records.len();
    let branch_dirs_distinct = records.iter().all(|r| {
        // (tau^q, 1) vs (tau, 1): distinct iff tau not fixed by Frobenius
        r.branch_dirs[0].0 != r.branch_dirs[1].0
    });
    let phi = bh_parametrization(q, field);
    let node_params: std::collections::BTreeSet<FieldElem> = records
        .iter()
        .flat_map(|r| [r.tau.clone(), r.tau_conj.clone()])
        .collect();
    let mut smooth_elsewhere = true;
    for p in P1Point::all_in_subfield(field, 2 * q.nu as usize)? {
        if let P1Point::Finite(t) = &p {
            if node_params.contains(t) {
                continue;
            }
        }
        let img = phi.eval(field, &p);
        if grad_zero(&img) {
            smooth_elsewhere = false;
        }
    }
    Ok(NodesReport {
        count_ok: records.len() == expected,
        records,
        images_singular,
        images_distinct,
        branch_dirs_distinct,
        smooth_elsewhere,
    })
}

/// The tangent line of `B` at `phi(P)`: for `P = [1 : t]` it is
/// `t^(2q) x0 + x1 - t^q x2 = 0`; for `P = [0 : 1]` it is `x0 = 0`.
pub fn tangent_line(q: &PrimePower, field: &Field, p: &P1Point) -> Line {
    match p {
        P1Point::Finite(t) => {
            let tq = field.pow(t, q.q as u64);
            let t2q = field.mul(&tq, &tq);
            Line::new(field, [t2q, field.one(), field.neg(&tq)])
                .expect("coefficient of x1 is 1")
        }
        P1Point::Infinity => {
            Line::new(field, [field.one(), field.zero(), field.zero()]).unwrap()
        }
    }
}

/// How a line meets the curve at one image point.
#[derive(Debug, Clone)]
pub struct LineMeeting {
    pub point: ProjPoint,
    /// Parameters above the point with their local intersection orders.
    pub branches: Vec<(P1Point, usize)>,
    pub total: usize,
}

/// Intersect a line with `B` by pulling it back to `P^1` and locating all
/// roots over the given search field. Errors with `SearchFieldTooSmall`
/// when the multiplicities found do not sum to `q + 1` (the pullback then
/// has roots only visible over a bigger field).
pub fn line_meet_curve(q: &PrimePower, field: &Field, line: &Line) -> Result<Vec<LineMeeting>> {
    let phi = bh_parametrization(q, field);
    let pull = line.pullback(field, &phi);
    if pull.is_zero(field) {
        return Err(Error::ZeroPolynomial);
    }
    let mut by_point: std::collections::BTreeMap<ProjPoint, Vec<(P1Point, usize)>> =
        std::collections::BTreeMap::new();
    let mut total = 0usize;
    for p in P1Point::all(field) {
        let ord = pull.vanishing_order(field, &p)?;
        if ord > 0 {
            total += ord;
            by_point.entry(phi.eval(field, &p)).or_default().push((p, ord));
        }
    }
    if total != q.q as usize + 1 {
        return Err(Error::SearchFieldTooSmall);
    }
    Ok(by_point
        .into_iter()
        .map(|(point, branches)| {
            let total = branches.iter().map(|(_, o)| o).sum();
            LineMeeting { point, branches, total }
        })
        .collect())
}

/// The three shapes of the tangent-line intersection `l_P . B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TangentClass {
    /// `P` rational over `F_q`: single contact of order `q + 1` at `phi(P)`.
    RationalContact,
    /// `P` in `P^1(F_{q^2}) \ P^1(F_q)`: the tangent passes through the node
    /// `phi(P) = phi(P^q)` with branch orders `q` and `1`.
    NodeTangent,
    /// All other `P`: order `q` at `phi(P)` plus a transversal second point
    /// `phi(P^q) = [1 : t^(q^2+q) : t^(q^2) + t^q]`.
    Split,
}

/// Classification of one tangent line, with the verified contact data.
#[derive(Debug, Clone)]
pub struct TangentReport {
    pub class: TangentClass,
    pub line: Line,
    /// `(parameter, image, order)` for each contact, highest order first.
    pub contacts: Vec<(P1Point, ProjPoint, usize)>,
}

/// Classify the tangent line at `P` and verify the trichotomy exactly. The
/// orders at the predicted parameters `P` and `P^q` are computed by repeated
/// synthetic division and must sum to `q + 1 = deg`; since the total
/// multiplicity over the algebraic closure equals the degree, this also
/// proves there is no further intersection anywhere.
pub fn tangent_trichotomy(q: &PrimePower, field: &Field, p: &P1Point) -> Result<TangentReport> {
    let phi = bh_parametrization(q, field);
    let line = tangent_line(q, field, p);
    let pull = line.pullback(field, &phi);
    let d = q.q as usize + 1;
    let conj = match p {
        P1Point::Finite(t) => P1Point::Finite(field.frobenius(t, q.nu)),
        P1Point::Infinity => P1Point::Infinity,
    };
    let ord_p = pull.vanishing_order(field, p)?;
    let (class, contacts) = if conj == *p {
        // P rational over F_q
        assert_eq!(ord_p, d, "rational tangent must have full contact order");
        (
            TangentClass::RationalContact,
            vec![(p.clone(), phi.eval(field, p), ord_p)],
        )
    } else {
        let ord_c = pull.vanishing_order(field, &conj)?;
        assert_eq!(ord_p, q.q as usize, "tangent contact order must be q");
        assert_eq!(ord_c, 1, "residual intersection must be transversal");
        let img_p = phi.eval(field, p);
        let img_c = phi.eval(field, &conj);
        if img_p == img_c {
            // node: P in F_{q^2} \ F_q
            (
                TangentClass::NodeTangent,
                vec![(p.clone(), img_p, ord_p), (conj.clone(), img_c, ord_c)],
            )
        } else {
            // verify the closed form of the second point
            if let P1Point::Finite(t) = p {
                let tq = field.pow(t, q.q as u64);
                let tq2 = field.pow(&tq, q.q as u64);
                let expect = ProjPoint::new(
                    field,
                    vec![
                        field.one(),
                        field.mul(&tq2, &tq),
                        field.add(&tq2, &tq),
                    ],
                )
                .unwrap();
                assert_eq!(img_c, expect, "second intersection point formula");
            }
            (
                TangentClass::Split,
                vec![(p.clone(), img_p, ord_p), (conj.clone(), img_c, ord_c)],
            )
        }
    };
    debug_assert_eq!(contacts.iter().map(|c| c.2).sum::<usize>(), d);
    Ok(TangentReport { class, line, contacts })
}

/// The inflection points of `B`: exactly the `q + 1` unibranch points with
/// contact order `q + 1`, i.e. the images of `P^1(F_q)`. Each returned entry
/// is verified: the image is a smooth point of the defining form and the
/// tangent pullback vanishes to order exactly `q + 1`.
pub fn inflection_points(q: &PrimePower, field: &Field) -> Result<Vec<(P1Point, ProjPoint)>> {
    let phi = bh_parametrization(q, field);
    let form = defining_form(q, field);
    let partials: Vec<MPoly> = (0..3).map(|i| form.partial(field, i)).collect();
    let mut out = Vec::new();
    for p in P1Point::all_in_subfield(field, q.nu as usize)? {
        let report = tangent_trichotomy(q, field, &p)?;
        assert_eq!(report.class, TangentClass::RationalContact);
        let image = phi.eval(field, &p);
        let smooth = partials
            .iter()
            .any(|d| !field.is_zero(&d.eval(field, image.coords())));
        assert!(smooth, "inflection points are smooth points of B");
        out.push((p, image));
    }
    assert_eq!(out.len(), q.q as usize + 1);
    Ok(out)
}

/// Structure of the dual curve: the tangent-coefficient map
/// `t |-> [t^(2q) : 1 : -t^q]` lies on the conic `X0*X1 = X2^2` and factors
/// as (separable conic parametrization) o (q-th power Frobenius).
#[derive(Debug, Clone, Copy)]
pub struct DualConicReport {
    /// The coefficient map satisfies the conic equation identically.
    pub on_conic: bool,
    /// Every exponent in the coefficient map is divisible by q, so the map
    /// factors through `t |-> t^q`.
    pub factors_through_frobenius: bool,
    /// The residual map `u |-> [u^2 : 1 : -u]` is separable (its derivative
    /// vector is nonzero - true in every characteristic thanks to the third
    /// coordinate).
    pub residual_separable: bool,
}

impl DualConicReport {
    pub fn all_ok(&self) -> bool {
        self.on_conic && self.factors_through_frobenius && self.residual_separable
    }
}

pub fn dual_conic_check(q: &PrimePower, field: &Field) -> DualConicReport {
    let qe = q.q as usize;
    // coefficient polynomials of the tangent line in t
    let c0 = UniPoly::monomial(field, &field.one(), 2 * qe);
    let c1 = UniPoly::from_ints(field, &[1]);
    let c2 = UniPoly::monomial(field, &field.from_int(-1), qe);
    let conic = c0
        .mul(field, &c1)
        .sub(field, &c2.mul(field, &c2));
    let on_conic = conic.is_zero();
    let factors = [&c0, &c1, &c2].iter().all(|c| {
        c.coeffs()
            .iter()
            .enumerate()
            .all(|(i, a)| field.is_zero(a) || i % qe == 0)
    });
    // residual map u -> [u^2 : 1 : -u]
    let u0 = UniPoly::from_ints(field, &[0, 0, 1]);
    let u1 = UniPoly::from_ints(field, &[1]);
    let u2 = UniPoly::from_ints(field, &[0, -1]);
    let residual_separable = [&u0, &u1, &u2]
        .iter()
        .any(|c| !c.derivative(field).is_zero());
    // consistency: substituting u = t^q recovers the coefficient map
    let tq = UniPoly::monomial(field, &field.one(), qe);
    debug_assert_eq!(u0.compose(field, &tq), c0);
    debug_assert_eq!(u2.compose(field, &tq), c2);
    let _ = u1;
    DualConicReport { on_conic, factors_through_frobenius: factors, residual_separable }
}

/// The Coxeter model: pushing the line `x0 + x1 + x2 = 0` through the
/// `(q+1)`-power map `[x0 : x1 : x2] |-> [x0^(q+1) : x1^(q+1) : x2^(q+1)]`
/// and the linear change `[y0 : y1 : y2] |-> [y0 : y1 : y2 - y0 - y1]`
/// reproduces `phi` exactly (scalar 1), because
/// `(s + t)^(q+1) - s^(q+1) - t^(q+1) = s t^q + s^q t`.
pub fn coxeter_model_check(q: &PrimePower, field: &Field) -> bool {
    let d = q.q as usize + 1;
    // parametrize the line by [s : t : -s - t]
    let minus_one = field.from_int(-1);
    let ell = BinForm::linear(minus_one.clone(), minus_one);
    let y0 = BinForm::linear(field.one(), field.zero()).pow(field, d);
    let y1 = BinForm::linear(field.zero(), field.one()).pow(field, d);
    let y2 = ell.pow(field, d);
    let z2 = y2.sub(field, &y0).sub(field, &y1);
    let phi = bh_parametrization(q, field);
    y0 == phi.coords[0] && y1 == phi.coords[1] && z2 == phi.coords[2]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(q: u32) -> PrimePower {
        PrimePower::new(q).unwrap()
    }

    #[test]
    fn q2_defining_form_is_the_classical_cubic() {
        // x0^2 x1 + x0 x1^2 + x2^3 + x0 x1 x2
        let q = pp(2);
        let f = Field::new(2, 1).unwrap();
        let form = defining_form(&q, &f);
        let expect = MPoly::from_terms(
            &f,
            3,
            [
                (vec![2, 1, 0], f.one()),
                (vec![1, 2, 0], f.one()),
                (vec![0, 0, 3], f.one()),
                (vec![1, 1, 1], f.one()),
            ],
        );
        assert_eq!(form.poly(), &expect);
    }

    #[test]
    fn parametrization_satisfies_defining_form() {
        for qv in [2u32, 3, 4, 5, 8, 9] {
            let q = pp(qv);
            let f = Field::of_order(&q);
            assert!(verify_on_curve(&q, &f), "q = {qv}");
            assert!(!form_vanishes_on_curve(&q, &f, &perturbed_form(&q, &f)));
        }
    }

    #[test]
    fn verification_against_pointwise_oracle() {
        // independent oracle: evaluate F(phi(t)) at every t in a field larger
        // than the degree, which forces the zero polynomial
        let q = pp(3);
        let f = Field::new(3, 4).unwrap(); // 81 > (q+1)^2
        let form = defining_form(&q, &f);
        let phi = bh_parametrization(&q, &f);
        for p in P1Point::all(&f) {
            let img = phi.eval(&f, &p);
            assert!(f.is_zero(&form.eval(&f, img.coords())));
        }
    }

    #[test]
    fn q3_nodes_frozen() {
        let q = pp(3);
        let f = Field::new(3, 2).unwrap();
        let report = nodes_verified(&q, &f).unwrap();
        assert!(report.all_ok());
        let images: std::collections::BTreeSet<String> =
            report.records.iter().map(|r| r.image.format(&f)).collect();
        let expect: std::collections::BTreeSet<String> =
            ["[1:1:0]", "[1:2:1]", "[1:2:2]"].iter().map(|s| s.to_string()).collect();
        assert_eq!(images, expect);
    }

    #[test]
    fn q2_single_node() {
        let q = pp(2);
        let f = Field::new(2, 2).unwrap();
        let report = nodes_verified(&q, &f).unwrap();
        assert!(report.all_ok());
        assert_eq!(report.records.len(), 1);
        assert_eq!(report.records[0].image.format(&f), "[1:1:1]");
    }

    #[test]
    fn node_preimages_are_the_quadratic_points() {
        for qv in [2u32, 3, 4, 5] {
            let q = pp(qv);
            let f = Field::new(q.p, 2 * q.nu as usize).unwrap();
            let recs = nodes(&q, &f).unwrap();
            let mut params = std::collections::BTreeSet::new();
            for r in &recs {
                params.insert(r.tau.clone());
                params.insert(r.tau_conj.clone());
            }
            let expect: std::collections::BTreeSet<FieldElem> = f
                .subfield_elements(2 * q.nu as usize)
                .unwrap()
                .into_iter()
                .filter(|e| !f.in_subfield(e, q.nu as usize).unwrap())
                .collect();
            assert_eq!(params, expect, "q = {qv}");
        }
    }

    #[test]
    fn tangent_line_at_alpha_q3() {
        let q = pp(3);
        let f = Field::new(3, 2).unwrap();
        let a = f.gen();
        let line = tangent_line(&q, &f, &P1Point::Finite(a.clone()));
        // t^(2q) x0 + x1 - t^q x2 at t = alpha: alpha^6 = -1, alpha^3 = -alpha,
        // so (2, 1, alpha) ~ (1, 2, 2*alpha) after normalization
        let expect = Line::new(
            &f,
            [f.from_int(2), f.one(), a.clone()],
        )
        .unwrap();
        assert_eq!(line, expect);
        assert_eq!(line.coeffs()[0], f.one());
        assert_eq!(line.coeffs()[1], f.from_int(2));
        assert_eq!(line.coeffs()[2], f.scale(2, &a));
    }

    #[test]
    fn tangent_at_infinity() {
        let q = pp(3);
        let f = Field::new(3, 2).unwrap();
        let line = tangent_line(&q, &f, &P1Point::Infinity);
        assert_eq!(line.coeffs()[0], f.one());
        assert!(f.is_zero(&line.coeffs()[1]));
        assert!(f.is_zero(&line.coeffs()[2]));
        // contact order q+1 at [0:1]: pullback is s^(q+1)
        let phi = bh_parametrization(&q, &f);
        let pull = line.pullback(&f, &phi);
        assert_eq!(pull.vanishing_order(&f, &P1Point::Infinity).unwrap(), 4);
    }

    #[test]
    fn trichotomy_q2_examples() {
        let q = pp(2);
        // node tangent: omega in F_4 \ F_2
        let f4 = Field::new(2, 2).unwrap();
        let omega = f4.gen();
        let rep = tangent_trichotomy(&q, &f4, &P1Point::Finite(omega)).unwrap();
        assert_eq!(rep.class, TangentClass::NodeTangent);
        assert_eq!(rep.contacts.len(), 2);
        assert_eq!(rep.contacts[0].1, rep.contacts[1].1);
        assert_eq!(rep.contacts[0].2, 2);
        assert_eq!(rep.contacts[1].2, 1);
        // split tangent: generator of F_8 (not in F_2 or F_4)
        let f8 = Field::new(2, 3).unwrap();
        let w = f8.gen(); // w^3 = w + 1
        let rep = tangent_trichotomy(&q, &f8, &P1Point::Finite(w.clone())).unwrap();
        assert_eq!(rep.class, TangentClass::Split);
        // second point [1 : w^6 : w^4 + w^2] = [1 : w^2+1 : w]
        let second = &rep.contacts[1].1;
        let expect = ProjPoint::new(
            &f8,
            vec![
                f8.one(),
                f8.add(&f8.mul(&w, &w), &f8.one()),
                w.clone(),
            ],
        )
        .unwrap();
        assert_eq!(second, &expect);
        // rational contact
        let rep = tangent_trichotomy(&q, &f4, &P1Point::Finite(f4.one())).unwrap();
        assert_eq!(rep.class, TangentClass::RationalContact);
        assert_eq!(rep.contacts[0].2, 3);
    }

    #[test]
    fn line_meet_with_node_and_search_field_error() {
        let q = pp(3);
        // the line x2 = 0 pulls back to s t (t - alpha s)(t + alpha s)
        let f9 = Field::new(3, 2).unwrap();
        let line = Line::new(&f9, [f9.zero(), f9.zero(), f9.one()]).unwrap();
        let meetings = line_meet_curve(&q, &f9, &line).unwrap();
        // points: [1:0:0] (t=0), [0:1:0] (infinity), node [1:1:0] (t = +-alpha)
        assert_eq!(meetings.len(), 3);
        let total: usize = meetings.iter().map(|m| m.total).sum();
        assert_eq!(total, 4);
        let node = meetings
            .iter()
            .find(|m| m.point.format(&f9) == "[1:1:0]")
            .expect("node meeting");
        assert_eq!(node.total, 2);
        assert_eq!(node.branches.len(), 2);
        // over F_3 the same line misses the +-alpha roots
        let f3 = Field::new(3, 1).unwrap();
        let line3 = Line::new(&f3, [f3.zero(), f3.zero(), f3.one()]).unwrap();
        assert_eq!(
            line_meet_curve(&q, &f3, &line3).err(),
            Some(Error::SearchFieldTooSmall)
        );
    }

    #[test]
    fn inflections_q3() {
        let q = pp(3);
        let f = Field::new(3, 2).unwrap();
        let pts = inflection_points(&q, &f).unwrap();
        assert_eq!(pts.len(), 4);
        let images: Vec<String> = pts.iter().map(|(_, img)| img.format(&f)).collect();
        assert!(images.contains(&"[1:0:0]".to_string())); // t = 0
        assert!(images.contains(&"[0:1:0]".to_string())); // t = infinity
        assert!(images.contains(&"[1:1:2]".to_string())); // t = 1
        assert!(images.contains(&"[1:1:1]".to_string())); // t = 2
    }

    #[test]
    fn dual_conic_all_small_q() {
        for qv in [2u32, 3, 4, 5, 7, 8, 9] {
            let q = pp(qv);
            let f = Field::of_order(&q);
            let rep = dual_conic_check(&q, &f);
            assert!(rep.all_ok(), "q = {qv}");
        }
    }

    #[test]
    fn coxeter_model_all_small_q() {
        for qv in [2u32, 3, 4, 5, 7, 8, 9] {
            let q = pp(qv);
            let f = Field::of_order(&q);
            assert!(coxeter_model_check(&q, &f), "q = {qv}");
        }
    }

    #[test]
    fn line_and_point_normalization() {
        let f = Field::new(3, 2).unwrap();
        let p1 = ProjPoint::new(&f, vec![f.from_int(2), f.from_int(1), f.zero()]).unwrap();
        let p2 = ProjPoint::new(&f, vec![f.from_int(1), f.from_int(2), f.zero()]).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(p1.format(&f), "[1:2:0]");
        assert!(ProjPoint::new(&f, vec![f.zero(), f.zero()]).is_err());
        assert!(Line::new(&f, [f.zero(), f.zero(), f.zero()]).is_err());
    }
}
