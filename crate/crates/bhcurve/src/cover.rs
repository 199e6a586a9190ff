//! Cyclic covers of the plane branched along the Ballico-Hefez curve.
//!
//! For every divisor `d >= 2` of `q + 1` the surface
//!
//! ```text
//! S_d : w^d = F(x0, x1, x2)
//! ```
//!
//! lives in the weighted projective space `P(c, 1, 1, 1)` with
//! `c = (q + 1)/d`. This module certifies its singular locus (one `A_(d-1)`
//! point over each node of the branch curve), the quadratic structure of the
//! normalization of the curve over the `x`-line, the explicit unirationality
//! of `S_d`, and the splitting of tangent-line preimages into `d` components.

use crate::curve::{bh_parametrization, defining_form, nodes, tangent_line, Line, NodeRecord, ProjPoint};
use crate::field::{Field, FieldElem, PrimePower};
use crate::poly::{BinForm, HomogForm, MPoly, P1Point, RationalExpr, UniPoly};
use crate::{Error, Result};

fn check_divisor(q: &PrimePower, d: u32) -> Result<u32> {
    let qp1 = q.q + 1;
    if d < 2 || qp1 % d != 0 {
        return Err(Error::NotADivisor { d, qp1 });
    }
    Ok(qp1 / d)
}

/// The cover surface `w^d = F` as a weighted-homogeneous form in
/// `(w, x0, x1, x2)` with weights `(c, 1, 1, 1)`.
#[derive(Debug, Clone)]
pub struct CoverSurface {
    pub d: u32,
    /// Weight of `w`: `c = (q + 1)/d`.
    pub weight: u32,
    /// `w^d - F(x0, x1, x2)`, weighted-homogeneous of degree `q + 1`.
    pub form: HomogForm,
}

pub fn cover_surface(q: &PrimePower, d: u32, field: &Field) -> Result<CoverSurface> {
    let c = check_divisor(q, d)?;
    let promoted = defining_form(q, field).poly().subst(
        field,
        &[
            MPoly::var(field, 4, 1),
            MPoly::var(field, 4, 2),
            MPoly::var(field, 4, 3),
        ],
    )?;
    let wd = MPoly::var(field, 4, 0).pow(field, d as usize);
    let form = HomogForm::new(wd.sub(field, &promoted), vec![c, 1, 1, 1])?;
    debug_assert_eq!(form.weighted_degree(), q.q as u64 + 1);
    Ok(CoverSurface { d, weight: c, form })
}

/// The terms of `p` of total degree exactly `k`.
fn degree_part(field: &Field, p: &MPoly, k: u64) -> MPoly {
    MPoly::from_terms(
        field,
        p.nvars(),
        p.terms().filter_map(|(e, c)| {
            if e.iter().map(|&x| x as u64).sum::<u64>() == k {
                Some((e.to_vec(), c.clone()))
            } else {
                None
            }
        }),
    )
}

/// If `b == lambda * a` for a scalar `lambda != 0`, return it (`a` nonzero).
fn mpoly_proportional(field: &Field, a: &MPoly, b: &MPoly) -> Option<FieldElem> {
    let (e, c) = a.terms().next()?;
    let bc = b.terms().find(|(eb, _)| *eb == e)?.1;
    let lambda = field.div(bc, c).ok()?;
    if a.scale(field, &lambda) == *b {
        Some(lambda)
    } else {
        None
    }
}

/// Certification that the point of `S_d` over one node is an `A_(d-1)`
/// singularity: the branch curve has an ordinary node there (nonzero
/// quadratic part equal to the product of the two distinct branch tangents),
/// so `w^d = (unit) * u * v` after a formal change of coordinates.
#[derive(Debug, Clone)]
pub struct NodeSingularity {
    pub node: NodeRecord,
    pub quad_nonzero: bool,
    pub dirs_distinct: bool,
    pub dirs_annihilate_quad: bool,
    pub quad_is_product_of_tangents: bool,
    /// Index of the resulting rational double point: `d - 1`.
    pub a_index: u32,
}

impl NodeSingularity {
    pub fn all_ok(&self) -> bool {
        self.quad_nonzero
            && self.dirs_distinct
            && self.dirs_annihilate_quad
            && self.quad_is_product_of_tangents
    }
}

/// Analyze the point of `S_d` above every node. The field must contain
/// `F_{q^2}`. All node images lie in the chart `x0 = 1`, where the branch
/// curve is `f(x, y) = F(1, x, y)`.
pub fn node_singularities(q: &PrimePower, d: u32, field: &Field) -> Result<Vec<NodeSingularity>> {
    check_divisor(q, d)?;
    let one2 = MPoly::constant(field, 2, &field.one());
    let f = defining_form(q, field).poly().subst(
        field,
        &[one2, MPoly::var(field, 2, 0), MPoly::var(field, 2, 1)],
    )?;
    let mut out = Vec::new();
    for node in nodes(q, field)? {
        let img = node.image.coords();
        assert!(field.is_one(&img[0]), "node images lie in the affine chart x0 = 1");
        let shift = |i: usize| {
            MPoly::var(field, 2, i).add(field, &MPoly::constant(field, 2, &img[i + 1]))
        };
        let g = f.subst(field, &[shift(0), shift(1)])?;
        assert!(degree_part(field, &g, 0).is_zero(), "node image lies on the curve");
        assert!(degree_part(field, &g, 1).is_zero(), "node image is a singular point");
        let quad = degree_part(field, &g, 2);
        let quad_nonzero = !quad.is_zero();
        let [(dx1, dy1), (dx2, dy2)] = &node.branch_dirs;
        let dirs_distinct = field.mul(dx1, dy2) != field.mul(dx2, dy1);
        let dirs_annihilate_quad = field
            .is_zero(&quad.eval(field, &[dx1.clone(), dy1.clone()]))
            && field.is_zero(&quad.eval(field, &[dx2.clone(), dy2.clone()]));
        // product of the two tangent lines dy*u - dx*v
        let tangent = |dx: &FieldElem, dy: &FieldElem| {
            MPoly::from_terms(
                field,
                2,
                [(vec![1, 0], dy.clone()), (vec![0, 1], field.neg(dx))],
            )
        };
        let prod = tangent(dx1, dy1).mul(field, &tangent(dx2, dy2));
        let quad_is_product_of_tangents =
            mpoly_proportional(field, &prod, &quad).is_some();
        out.push(NodeSingularity {
            node,
            quad_nonzero,
            dirs_distinct,
            dirs_annihilate_quad,
            quad_is_product_of_tangents,
            a_index: d - 1,
        });
    }
    Ok(out)
}

/// The degree-2 structure of the curve over the `x`-line: with
/// `x = t^(q+1)`, `y = t^q + t`, the element `T = t^q` satisfies
/// `T^2 - y T + x = 0`, and so does `t` itself. For odd `p` the discriminant
/// is `y^2 - 4x = (t^q - t)^2`; for `p = 2` the quadratic is separable in `T`
/// because its formal derivative is `y != 0`.
#[derive(Debug, Clone)]
pub struct ProjectionReport {
    /// `(t^q)^2 - y(t) t^q + x(t) = 0` and `t^2 - y(t) t + x(t) = 0` in `k[t]`.
    pub satisfies_quadratic: bool,
    /// Odd `p` only: `y^2 - 4x = (t^q - t)^2` identically.
    pub discriminant_is_square: Option<bool>,
    /// `p = 2` only: the derivative `y` of `T^2 + yT + x` is not the zero
    /// polynomial, so the quadratic is separable.
    pub separable_char_two: Option<bool>,
}

impl ProjectionReport {
    pub fn all_ok(&self) -> bool {
        self.satisfies_quadratic
            && self.discriminant_is_square.unwrap_or(true)
            && self.separable_char_two.unwrap_or(true)
    }
}

pub fn projection_quadratic_check(q: &PrimePower, field: &Field) -> ProjectionReport {
    let qe = q.q as usize;
    let one = field.one();
    let x = UniPoly::monomial(field, &one, qe + 1);
    let y = UniPoly::monomial(field, &one, qe).add(field, &UniPoly::monomial(field, &one, 1));
    let check_root = |r: &UniPoly| {
        r.mul(field, r)
            .sub(field, &y.mul(field, r))
            .add(field, &x)
            .is_zero()
    };
    let tq = UniPoly::monomial(field, &one, qe);
    let t = UniPoly::monomial(field, &one, 1);
    let satisfies_quadratic = check_root(&tq) && check_root(&t);
    let (disc, sep) = if q.p == 2 {
        (None, Some(!y.is_zero()))
    } else {
        let lhs = y
            .mul(field, &y)
            .sub(field, &x.scale(field, &field.from_int(4)));
        let diff = tq.sub(field, &t);
        (Some(lhs == diff.mul(field, &diff)), None)
    };
    ProjectionReport {
        satisfies_quadratic,
        discriminant_is_square: disc,
        separable_char_two: sep,
    }
}

/// Verification of the explicit unirationality of `S_d`. All identities are
/// formal in two variables `(z, t)` with prime-field coefficients, so any
/// field of the right characteristic works.
#[derive(Debug, Clone)]
pub struct UnirationalityReport {
    /// `y - (t^q + t) = D` and `y - (t^(q^2) + t^q) = z^d D`, where
    /// `D = (t - t^(q^2))/(z^d - 1)`.
    pub telescoping_ok: bool,
    /// `(y - t^q - t)^q (y - t^(q^2) - t^q) = z^d D^(q+1)`.
    pub main_identity_ok: bool,
    /// `F(1, T^q Y - T^(2q), Y) = c (Y - T^q - T)^q (Y - T^(q^2) - T^q)`.
    pub pullback_identity_ok: bool,
    /// The constant `c` above: `-2` for odd `p`, `1` for `p = 2`.
    pub pullback_constant: FieldElem,
    /// The composite: `F` pulled back to the `(z, t)`-plane equals
    /// `c z^d D^(q+1)`.
    pub composition_ok: bool,
    /// `(z D^((q+1)/d))^d = z^d D^(q+1)`, so `w = u z D^((q+1)/d)` solves
    /// `w^d = F` once `u^d = c`.
    pub power_step_ok: bool,
    /// Smallest `m` with `c` a `d`-th power in `F_(q^(2m))`.
    pub unit_extension: Option<u32>,
    /// Explicit `u` with `u^d = c`, searched in `F_(q^2)` when `m = 1`.
    pub unit_root: Option<FieldElem>,
}

impl UnirationalityReport {
    pub fn all_ok(&self) -> bool {
        self.telescoping_ok
            && self.main_identity_ok
            && self.pullback_identity_ok
            && self.composition_ok
            && self.power_step_ok
            && self.unit_extension.is_some()
    }
}

/// Smallest `m >= 1` such that `e` (a unit of `field = F_(q^2)`) is a `d`-th
/// power in `F_(q^(2m))`. The criterion is `e^((q^(2m)-1)/d) = 1`; the
/// exponent is reduced modulo `ord = q^2 - 1` by computing `q^(2m) - 1`
/// modulo `d * ord` first (valid because `d` divides both).
fn splitting_degree(field: &Field, e: &FieldElem, q: &PrimePower, d: u32) -> u32 {
    let ord = field.order() - 1;
    let modulus = d as u128 * ord as u128;
    let base = (q.q as u128 * q.q as u128) % modulus;
    let mut acc = 1u128; // q^(2m) mod (d * ord)
    for m in 1..=64u32 {
        acc = acc * base % modulus;
        let r = (acc + modulus - 1) % modulus;
        debug_assert_eq!(r % d as u128, 0);
        let exp = ((r / d as u128) % ord as u128) as u64;
        if field.is_one(&field.pow(e, exp)) {
            return m;
        }
    }
    unreachable!("every unit becomes a d-th power in a bounded extension tower");
}

/// Run the whole unirationality verification. With `mutate` the sign of one
/// term of `y(z, t)` is flipped, which must break the identities.
pub fn unirationality_check(
    q: &PrimePower,
    d: u32,
    field: &Field,
    mutate: bool,
) -> Result<UnirationalityReport> {
    check_divisor(q, d)?;
    let qe = q.q as usize;
    let z = MPoly::var(field, 2, 0);
    let t = MPoly::var(field, 2, 1);
    let one = MPoly::constant(field, 2, &field.one());
    let zd = z.pow(field, d as usize);
    let den = zd.sub(field, &one);
    let tq = t.pow(field, qe);
    let tq2 = t.pow(field, qe * qe);
    let trace1 = tq.add(field, &t); // t^q + t
    let trace2 = tq2.add(field, &tq); // t^(q^2) + t^q
    let ynum = {
        let head = zd.mul(field, &trace1);
        if mutate {
            head.add(field, &trace2)
        } else {
            head.sub(field, &trace2)
        }
    };
    let y = RationalExpr::new(ynum, den.clone())?;
    let dd = RationalExpr::new(t.sub(field, &tq2), den.clone())?;
    let rp = |p: &MPoly| RationalExpr::from_poly(field, p.clone());

    let e1 = y.sub(field, &rp(&trace1));
    let e2 = y.sub(field, &rp(&trace2));
    let telescoping_ok =
        e1.identical(field, &dd) && e2.identical(field, &dd.mul(field, &rp(&zd)));

    let lhs = e1.pow(field, qe).mul(field, &e2);
    let rhs = rp(&zd).mul(field, &dd.pow(field, qe + 1));
    let main_identity_ok = lhs.identical(field, &rhs);

    // pullback identity in fresh variables (T, Y)
    let tv = MPoly::var(field, 2, 0);
    let yv = MPoly::var(field, 2, 1);
    let one2 = MPoly::constant(field, 2, &field.one());
    let x_sub = tv
        .pow(field, qe)
        .mul(field, &yv)
        .sub(field, &tv.pow(field, 2 * qe));
    let g = defining_form(q, field)
        .poly()
        .subst(field, &[one2, x_sub, yv.clone()])?;
    let p_form = yv
        .sub(field, &tv.pow(field, qe))
        .sub(field, &tv)
        .pow(field, qe)
        .mul(
            field,
            &yv.sub(field, &tv.pow(field, qe * qe))
                .sub(field, &tv.pow(field, qe)),
        );
    let (pullback_identity_ok, pullback_constant) =
        match mpoly_proportional(field, &p_form, &g) {
            Some(c) => (true, c),
            None => (false, field.zero()),
        };

    // composition: substitute t and y(z, t) into G(T, Y)
    let comp = g.subst_rational(field, &[rp(&t), y.clone()])?;
    let composition_ok =
        comp.identical(field, &rhs.mul(field, &rp(&MPoly::constant(field, 2, &pullback_constant))));

    // d-th power step
    let c_exp = (qe + 1) / d as usize;
    let w = rp(&z).mul(field, &dd.pow(field, c_exp));
    let power_step_ok = w.pow(field, d as usize).identical(field, &rhs);

    // the unit u with u^d = c lives in a bounded extension; search F_(q^2)
    // explicitly when it is enough
    let (unit_extension, unit_root) = if pullback_identity_ok {
        let f2 = Field::extension_of(q, 2);
        let c2 = lift_to(field, &pullback_constant, &f2);
        let m = splitting_degree(&f2, &c2, q, d);
        let root = if m == 1 {
            f2.elements().find(|u| f2.pow(u, d as u64) == c2)
        } else {
            None
        };
        (Some(m), root)
    } else {
        (None, None)
    };

    Ok(UnirationalityReport {
        telescoping_ok,
        main_identity_ok,
        pullback_identity_ok,
        pullback_constant,
        composition_ok,
        power_step_ok,
        unit_extension,
        unit_root,
    })
}

/// Move a prime-subfield constant from one field to another.
fn lift_to(src: &Field, e: &FieldElem, dst: &Field) -> FieldElem {
    assert_eq!(src.p(), dst.p());
    assert!(
        e.coords().iter().skip(1).all(|&c| c == 0),
        "constant must lie in the prime subfield"
    );
    dst.from_int(e.coords()[0] as i64)
}

/// Splitting of the preimage of one tangent line on `S_d`.
#[derive(Debug, Clone)]
pub struct SplitReport {
    pub param: P1Point,
    /// Whether the parameter is rational over `F_q` (inflection tangent) or
    /// quadratic (node tangent).
    pub rational: bool,
    pub line: Line,
    pub contact_point: ProjPoint,
    /// `F` restricted to the line is `unit * ell^(q+1)` for a linear form
    /// `ell` vanishing at the contact point.
    pub unit: FieldElem,
    pub full_contact: bool,
    /// Smallest `m` with the preimage splitting into `d` components over
    /// `F_(q^(2m))`.
    pub splitting_extension: u32,
    /// When `m = 1`: the `d` scalars `zeta_d^j u0`, so the components are
    /// `w = (scalar) * ell^((q+1)/d)` over `F_(q^2)`.
    pub component_scalars: Option<Vec<FieldElem>>,
}

impl SplitReport {
    pub fn components(&self) -> usize {
        self.component_scalars.as_ref().map_or(0, Vec::len)
    }
}

/// Restrict `F` to the tangent line at `P` (a parameter in `P^1(F_{q^2})`;
/// the ambient field must be exactly `F_{q^2}`) and describe how the
/// preimage on `S_d` splits. The restriction must be `unit * ell^(q+1)`,
/// i.e. full `q+1`-fold contact at a single point, which happens exactly
/// for rational and node parameters.
pub fn fiber_splitting(
    q: &PrimePower,
    d: u32,
    field: &Field,
    param: &P1Point,
) -> Result<SplitReport> {
    check_divisor(q, d)?;
    if field.order() != (q.q as u64) * (q.q as u64) {
        return Err(Error::WrongFieldOrder((q.q as u64) * (q.q as u64)));
    }
    let rational = match param {
        P1Point::Infinity => true,
        P1Point::Finite(t) => field.in_subfield(t, q.nu as usize)?,
    };
    let line = tangent_line(q, field, param);
    let phi = bh_parametrization(q, field);
    let contact_point = phi.eval(field, param);

    let basis = line.spanning_points(field);
    let (a, b) = (&basis[0], &basis[1]);
    let subs: Vec<BinForm> = (0..3)
        .map(|i| BinForm::linear(a[i].clone(), b[i].clone()))
        .collect();
    let restriction = defining_form(q, field).subst_bin(field, &subs)?;

    // locate the unique root of multiplicity q + 1
    let mut root = None;
    let mut total = 0usize;
    for p in P1Point::all(field) {
        let ord = restriction.vanishing_order(field, &p)?;
        if ord > 0 {
            total += ord;
            root = Some((p, ord));
        }
    }
    let (root, ord) = root.ok_or(Error::SearchFieldTooSmall)?;
    let full_contact = total == q.q as usize + 1 && ord == total;
    if !full_contact {
        // a split tangent (parameter outside F_{q^2}) cannot reach here when
        // the field really is F_{q^2}, but keep the report honest
        return Err(Error::SearchFieldTooSmall);
    }
    // the root corresponds to the contact point on the curve
    let (rs, rt) = root.coords(field);
    debug_assert_eq!(
        {
            let coords: Vec<FieldElem> = (0..3)
                .map(|i| field.add(&field.mul(&a[i], &rs), &field.mul(&b[i], &rt)))
                .collect();
            ProjPoint::new(field, coords).unwrap()
        },
        contact_point
    );
    let ell = BinForm::linear(rt.clone(), field.neg(&rs));
    let unit = ell
        .pow(field, q.q as usize + 1)
        .proportional(field, &restriction)
        .expect("restriction is unit * ell^(q+1)");
    let m = splitting_degree(field, &unit, q, d);
    let component_scalars = if m == 1 {
        let u0 = field
            .elements()
            .find(|u| field.pow(u, d as u64) == unit)
            .expect("unit is a d-th power in F_(q^2) when m = 1");
        let zeta = field
            .elements()
            .find(|e| {
                !field.is_zero(e)
                    && field.is_one(&field.pow(e, d as u64))
                    && (1..d as u64).all(|k| !field.is_one(&field.pow(e, k)))
            })
            .expect("mu_d is contained in F_(q^2) because d divides q^2 - 1");
        let mut scalars = Vec::new();
        let mut cur = u0;
        for _ in 0..d {
            scalars.push(cur.clone());
            cur = field.mul(&cur, &zeta);
        }
        scalars.sort();
        Some(scalars)
    } else {
        None
    };
    Ok(SplitReport {
        param: param.clone(),
        rational,
        line,
        contact_point,
        unit,
        full_contact,
        splitting_extension: m,
        component_scalars,
    })
}

/// [`fiber_splitting`] over every parameter in `P^1(F_{q^2})`.
pub fn fiber_splitting_all(q: &PrimePower, d: u32, field: &Field) -> Result<Vec<SplitReport>> {
    P1Point::all(field)
        .into_iter()
        .map(|p| fiber_splitting(q, d, field, &p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(q: u32) -> PrimePower {
        PrimePower::new(q).unwrap()
    }

    #[test]
    fn surface_weights_and_divisors() {
        let q = pp(3);
        let f = Field::new(3, 1).unwrap();
        let s4 = cover_surface(&q, 4, &f).unwrap();
        assert_eq!(s4.weight, 1);
        assert_eq!(s4.form.weighted_degree(), 4);
        let s2 = cover_surface(&q, 2, &f).unwrap();
        assert_eq!(s2.weight, 2);
        assert_eq!(s2.form.weighted_degree(), 4);
        assert_eq!(
            cover_surface(&q, 3, &f).err(),
            Some(Error::NotADivisor { d: 3, qp1: 4 })
        );
        assert_eq!(
            cover_surface(&q, 1, &f).err(),
            Some(Error::NotADivisor { d: 1, qp1: 4 })
        );
    }

    #[test]
    fn quartic_surface_equation_frozen() {
        // w^4 = 2(x0^3 x1 + x0 x1^3) - x2^4 - (x2^2 - x0 x1)^2 over F_3
        let q = pp(3);
        let f = Field::new(3, 1).unwrap();
        let s = cover_surface(&q, 4, &f).unwrap();
        let m = |e: Vec<u16>, c: i64| (e, f.from_int(c));
        // expand: -(x2^2 - 4 x0 x1)^2 = -x2^4 + 8 x0 x1 x2^2 - 16 x0^2 x1^2
        //       = -x2^4 + 2 x0 x1 x2^2 + 2 x0^2 x1^2 (mod 3)
        let expect = MPoly::from_terms(
            &f,
            4,
            [
                m(vec![4, 0, 0, 0], 1),
                m(vec![0, 3, 1, 0], -2),
                m(vec![0, 1, 3, 0], -2),
                m(vec![0, 0, 0, 4], 2), // -(-x2^4 - x2^4) = 2 x2^4
                m(vec![0, 1, 1, 2], -2),
                m(vec![0, 2, 2, 0], -2),
            ],
        );
        assert_eq!(s.form.poly(), &expect);
    }

    #[test]
    fn node_singularities_k3_cases() {
        for (qv, d, count) in [(3u32, 4u32, 3usize), (5, 2, 10), (2, 3, 1)] {
            let q = pp(qv);
            let f = Field::new(q.p, 2 * q.nu as usize).unwrap();
            let reports = node_singularities(&q, d, &f).unwrap();
            assert_eq!(reports.len(), count, "q = {qv}");
            for r in &reports {
                assert!(r.all_ok(), "q = {qv}");
                assert_eq!(r.a_index, d - 1);
            }
        }
    }

    #[test]
    fn projection_quadratic_all_small_q() {
        for qv in [2u32, 3, 4, 5, 7, 8, 9] {
            let q = pp(qv);
            let f = Field::of_order(&q);
            let rep = projection_quadratic_check(&q, &f);
            assert!(rep.all_ok(), "q = {qv}");
            if q.p == 2 {
                assert_eq!(rep.discriminant_is_square, None);
                assert_eq!(rep.separable_char_two, Some(true));
            } else {
                assert_eq!(rep.discriminant_is_square, Some(true));
                assert_eq!(rep.separable_char_two, None);
            }
        }
    }

    #[test]
    fn unirationality_k3_quartic() {
        let q = pp(3);
        let f = Field::new(3, 1).unwrap();
        let rep = unirationality_check(&q, 4, &f, false).unwrap();
        assert!(rep.all_ok());
        // c = -2 = 1 in F_3, already a 4th power of 1
        assert_eq!(rep.pullback_constant, f.one());
        assert_eq!(rep.unit_extension, Some(1));
        let f9 = Field::extension_of(&q, 2);
        assert_eq!(rep.unit_root, Some(f9.one()));
    }

    #[test]
    fn unirationality_k3_double_plane() {
        let q = pp(5);
        let f = Field::new(5, 1).unwrap();
        let rep = unirationality_check(&q, 2, &f, false).unwrap();
        assert!(rep.all_ok());
        // c = -2 = 3 in F_5; 3 = a^2 for the default F_25 modulus x^2 + 2
        assert_eq!(rep.pullback_constant, f.from_int(3));
        assert_eq!(rep.unit_extension, Some(1));
        let f25 = Field::extension_of(&q, 2);
        assert_eq!(rep.unit_root, Some(f25.gen()));
    }

    #[test]
    fn unirationality_char_two_and_all_divisors() {
        for (qv, d) in [(2u32, 3u32), (4, 5), (3, 2), (7, 2), (7, 4), (7, 8), (8, 3), (8, 9), (9, 2), (9, 5), (9, 10), (5, 3), (5, 6), (4, 50)] {
            let q = pp(qv);
            let f = Field::new(q.p, 1).unwrap();
            let rep = unirationality_check(&q, d, &f, false);
            if (q.q + 1) % d != 0 || d < 2 {
                assert!(rep.is_err(), "q = {qv}, d = {d}");
                continue;
            }
            let rep = rep.unwrap();
            assert!(rep.all_ok(), "q = {qv}, d = {d}");
            if q.p == 2 {
                assert!(f.is_one(&rep.pullback_constant));
            } else {
                assert_eq!(rep.pullback_constant, f.from_int(-2));
            }
        }
    }

    #[test]
    fn mutated_unirationality_fails() {
        let q = pp(3);
        let f = Field::new(3, 1).unwrap();
        let rep = unirationality_check(&q, 4, &f, true).unwrap();
        assert!(!rep.telescoping_ok);
        assert!(!rep.main_identity_ok);
        assert!(!rep.all_ok());
    }

    #[test]
    fn fiber_splitting_quartic_40_lines() {
        let q = pp(3);
        let f9 = Field::new(3, 2).unwrap();
        let reports = fiber_splitting_all(&q, 4, &f9).unwrap();
        assert_eq!(reports.len(), 10); // |P^1(F_9)|
        assert_eq!(reports.iter().filter(|r| r.rational).count(), 4);
        for r in &reports {
            assert!(r.full_contact);
            assert_eq!(r.splitting_extension, 1);
            assert_eq!(r.components(), 4);
        }
        let total: usize = reports.iter().map(SplitReport::components).sum();
        assert_eq!(total, 40);
    }

    #[test]
    fn fiber_splitting_double_plane_52_curves() {
        let q = pp(5);
        let f25 = Field::new(5, 2).unwrap();
        let reports = fiber_splitting_all(&q, 2, &f25).unwrap();
        assert_eq!(reports.len(), 26);
        for r in &reports {
            assert!(r.full_contact);
            assert_eq!(r.splitting_extension, 1, "param {}", r.param.format(&f25));
            assert_eq!(r.components(), 2);
        }
        let total: usize = reports.iter().map(SplitReport::components).sum();
        assert_eq!(total, 52);
    }

    #[test]
    fn fiber_splitting_requires_the_quadratic_field() {
        let q = pp(3);
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(
            fiber_splitting(&q, 4, &f3, &P1Point::Infinity).err(),
            Some(Error::WrongFieldOrder(9))
        );
    }
}
