//! Neron-Severi basis for the sextic case q = 5, d = 2: the minimal
//! resolution of the double plane w^2 = F(x0, x1, x2) over F_25.
//!
//! The twenty-two classes are eight of the ten A_1 exceptional curves
//! over the nodes of the branch sextic, plus fourteen sheet curves
//! w = h(x) over tangent lines, where h = s * 2*alpha * M^3 with M the
//! contact form of the line, s a sign, and alpha a square root of 2.
//! Every sheet is certified symbolically by (h restricted)^2 =
//! F restricted; intersections over a node are decided by lifting both
//! sheets to the exceptional conic w'^2 = Q(u', v') of the resolved
//! A_1 point and comparing first-order data.

use super::{cross_point, spec_label, Spec};
use crate::curve::{bh_parametrization, defining_form, tangent_line, Line, ProjPoint};
use crate::field::{Field, FieldElem, PrimePower};
use crate::poly::{BinForm, MPoly, P1Point};
use crate::{Error, Result};

/// The eight exceptional curves chosen for the basis, keyed by the node
/// under tau = a + b*alpha (conjugate representatives use b in {1, 2}).
const E_KEYS: [(i64, i64); 8] = [
    (0, 1),
    (0, 2),
    (1, 1),
    (1, 2),
    (2, 1),
    (3, 2),
    (4, 1),
    (4, 2),
];

/// Sheet curves over tangent lines: (tangency parameter a + b*alpha, sign).
const C_SPECS: [((i64, i64), i64); 14] = [
    ((0, 0), 1),
    ((0, 0), -1),
    ((1, 0), -1),
    ((0, 3), 1),
    ((0, 4), -1),
    ((0, 2), 1),
    ((1, 1), -1),
    ((1, 2), -1),
    ((2, 3), 1),
    ((2, 1), 1),
    ((3, 4), 1),
    ((3, 2), -1),
    ((4, 4), 1),
    ((4, 2), 1),
];

struct NodeData {
    key: (i64, i64),
    pt: ProjPoint,
    /// quadratic part of the dehomogenized branch equation at the node
    quad: MPoly,
}

struct CurveData {
    spec: (i64, i64),
    sign: i64,
    line: Line,
    basis: [Vec<FieldElem>; 2],
    h: MPoly,
}

/// First-order jet (value, derivative) along a parametrized arc.
#[derive(Clone)]
struct Dual {
    v: FieldElem,
    d: FieldElem,
}

fn dmul(field: &Field, a: &Dual, b: &Dual) -> Dual {
    Dual {
        v: field.mul(&a.v, &b.v),
        d: field.add(&field.mul(&a.v, &b.d), &field.mul(&a.d, &b.v)),
    }
}

fn ddiv(field: &Field, a: &Dual, b: &Dual) -> Result<Dual> {
    let inv = field.inv(&b.v)?;
    let v = field.mul(&a.v, &inv);
    let num = field.sub(&field.mul(&a.d, &b.v), &field.mul(&a.v, &b.d));
    let d = field.mul(&num, &field.mul(&inv, &inv));
    Ok(Dual { v, d })
}

fn deval(field: &Field, p: &MPoly, vals: &[Dual; 3]) -> Dual {
    let mut acc = Dual {
        v: field.zero(),
        d: field.zero(),
    };
    for (exps, c) in p.terms() {
        let mut term = Dual {
            v: c.clone(),
            d: field.zero(),
        };
        for (k, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                term = dmul(field, &term, &vals[k]);
            }
        }
        acc.v = field.add(&acc.v, &term.v);
        acc.d = field.add(&acc.d, &term.d);
    }
    acc
}

fn degree_part(field: &Field, p: &MPoly, k: u64) -> MPoly {
    MPoly::from_terms(
        field,
        p.nvars(),
        p.terms()
            .filter(|(e, _)| e.iter().map(|&x| x as u64).sum::<u64>() == k)
            .map(|(e, c)| (e.to_vec(), c.clone())),
    )
}

fn proportional3(field: &Field, u: &[FieldElem], v: &[FieldElem]) -> bool {
    for i in 0..3 {
        for j in i + 1..3 {
            if field.mul(&u[i], &v[j]) != field.mul(&u[j], &v[i]) {
                return false;
            }
        }
    }
    true
}

/// Lift a sheet curve through a node to the exceptional conic of the
/// resolved A_1 point: returns the projectivized first-order data
/// [w'(0) : u'(0) : v'(0)], certified to satisfy w'^2 = Q(u', v').
fn tangent_lift(field: &Field, cur: &CurveData, node: &NodeData) -> Result<[FieldElem; 3]> {
    let p = node.pt.coords();
    assert!(field.is_one(&p[0]), "nodes lie in the affine chart x0 = 1");
    let b = cur
        .basis
        .iter()
        .find(|v| !proportional3(field, v, p))
        .expect("a spanning point independent of the node");
    let jets: [Dual; 3] = std::array::from_fn(|k| Dual {
        v: p[k].clone(),
        d: b[k].clone(),
    });
    let u = ddiv(field, &jets[1], &jets[0])?;
    let v = ddiv(field, &jets[2], &jets[0])?;
    let hval = deval(field, &cur.h, &jets);
    let x0cube = dmul(field, &jets[0], &dmul(field, &jets[0], &jets[0]));
    let w = ddiv(field, &hval, &x0cube)?;
    assert!(
        field.is_zero(&w.v),
        "sheet through a node must hit the singular point"
    );
    let lhs = field.mul(&w.d, &w.d);
    let rhs = node.quad.eval(field, &[u.d.clone(), v.d.clone()]);
    assert_eq!(lhs, rhs, "tangent lift must land on the exceptional conic");
    Ok([w.d, u.d, v.d])
}

/// Intersection number of two distinct sheet curves.
fn meet(
    field: &Field,
    nodes: &[NodeData],
    ci: &CurveData,
    cj: &CurveData,
) -> Result<i64> {
    let node_at = |pt: &ProjPoint| nodes.iter().position(|n| &n.pt == pt);
    if ci.spec == cj.spec {
        if ci.sign == cj.sign {
            return Err(Error::IdenticalCurves);
        }
        // same line, opposite sheets: they meet where h_i - h_j vanishes
        // along the line
        let diff = ci.h.sub(field, &cj.h);
        let subs: Vec<BinForm> = (0..3)
            .map(|k| BinForm::linear(ci.basis[0][k].clone(), ci.basis[1][k].clone()))
            .collect();
        let restr = diff.subst_bin(field, &subs, &[1, 1, 1])?;
        let mut total = 0usize;
        let mut value = 0i64;
        for p in P1Point::all(field) {
            let ord = restr.vanishing_order(field, &p)?;
            if ord == 0 {
                continue;
            }
            total += ord;
            let (s, t) = p.coords(field);
            let coords: Vec<FieldElem> = (0..3)
                .map(|k| {
                    field.add(
                        &field.mul(&s, &ci.basis[0][k]),
                        &field.mul(&t, &ci.basis[1][k]),
                    )
                })
                .collect();
            let pt = ProjPoint::new(field, coords)?;
            match node_at(&pt) {
                Some(n) => {
                    let li = tangent_lift(field, ci, &nodes[n])?;
                    let lj = tangent_lift(field, cj, &nodes[n])?;
                    if proportional3(field, &li, &lj) {
                        return Err(Error::UnresolvedNodeIntersection);
                    }
                }
                None => value += ord as i64,
            }
        }
        if total != 3 {
            return Err(Error::SearchFieldTooSmall);
        }
        Ok(value)
    } else {
        // distinct tangent lines cross exactly once
        let pt = cross_point(field, ci.line.coeffs(), cj.line.coeffs())?;
        match node_at(&pt) {
            Some(n) => {
                let li = tangent_lift(field, ci, &nodes[n])?;
                let lj = tangent_lift(field, cj, &nodes[n])?;
                if proportional3(field, &li, &lj) {
                    Err(Error::UnresolvedNodeIntersection)
                } else {
                    Ok(0)
                }
            }
            None => {
                let wi = ci.h.eval(field, pt.coords());
                let wj = cj.h.eval(field, pt.coords());
                Ok(i64::from(wi == wj))
            }
        }
    }
}

/// Assemble the labels and the 22x22 Gram matrix of the chosen basis.
/// `field` must have twenty-five elements; any irreducible modulus gives
/// the same matrix because all data is expressed through a square root
/// of 2.
pub fn build(field: &Field) -> Result<(Vec<String>, Vec<Vec<i64>>)> {
    if field.order() != 25 {
        return Err(Error::WrongFieldOrder(25));
    }
    let q = PrimePower::new(5).expect("5 is prime");
    let alpha = field.element_with_square(2)?;
    let phi = bh_parametrization(&q, field);
    let form = defining_form(&q, field);

    let tau_of = |a: i64, b: i64| field.add(&field.from_int(a), &field.scale(b, &alpha));

    // dehomogenized branch equation f(x, y) = F(1, x, y)
    let one2 = MPoly::constant(field, 2, &field.one());
    let xv = MPoly::var(field, 2, 0);
    let yv = MPoly::var(field, 2, 1);
    let f_dehom = form.poly().subst(field, &[one2, xv.clone(), yv.clone()])?;

    // all ten nodes, with the quadratic part of f at each
    let mut nodes: Vec<NodeData> = Vec::new();
    for a in 0..5 {
        for b in 1..=2 {
            let pt = phi.eval(field, &P1Point::Finite(tau_of(a, b)));
            let c = pt.coords();
            assert!(field.is_one(&c[0]));
            let shift_x = MPoly::constant(field, 2, &c[1]).add(field, &xv);
            let shift_y = MPoly::constant(field, 2, &c[2]).add(field, &yv);
            let local = f_dehom.subst(field, &[shift_x, shift_y])?;
            debug_assert!(degree_part(field, &local, 0).is_zero());
            debug_assert!(degree_part(field, &local, 1).is_zero());
            let quad = degree_part(field, &local, 2);
            assert!(!quad.is_zero(), "node must have a nonzero quadratic part");
            nodes.push(NodeData { key: (a, b), pt, quad });
        }
    }

    let two_alpha = field.scale(2, &alpha);
    let mut curves: Vec<CurveData> = Vec::new();
    for ((a, b), sign) in C_SPECS {
        let tau = tau_of(a, b);
        let param = P1Point::Finite(tau.clone());
        let line = tangent_line(&q, field, &param);
        // contact form M = x2 - y(tau) x0 with y(tau) = tau^5 + tau
        let y = field.add(&field.pow(&tau, 5), &tau);
        let m = MPoly::var(field, 3, 2).sub(field, &MPoly::var(field, 3, 0).scale(field, &y));
        let h = m
            .pow(field, 3)
            .scale(field, &field.scale(sign, &two_alpha));
        let basis = line.spanning_points(field);
        // sheet certificate: h^2 agrees with F on the line
        let subs: Vec<BinForm> = (0..3)
            .map(|k| BinForm::linear(basis[0][k].clone(), basis[1][k].clone()))
            .collect();
        let restriction = form.subst_bin(field, &subs)?;
        let h_restr = h.subst_bin(field, &subs, &[1, 1, 1])?;
        assert_eq!(
            h_restr.pow(field, 2),
            restriction,
            "sheet certificate failed for a tangent line"
        );
        curves.push(CurveData {
            spec: (a, b),
            sign,
            line,
            basis,
            h,
        });
    }

    let mut labels: Vec<String> = Vec::new();
    for (a, b) in E_KEYS {
        labels.push(format!("E({})", spec_label(Spec::Fin(a, b))));
    }
    for ((a, b), sign) in C_SPECS {
        let s = if sign > 0 { '+' } else { '-' };
        labels.push(format!("C({};{})", spec_label(Spec::Fin(a, b)), s));
    }

    let n = 22;
    let mut gram = vec![vec![0i64; n]; n];
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] = -2;
    }

    // disjoint A_1 curves: the E block is diagonal; a sheet curve meets
    // the exceptional curve over a node exactly when its line passes
    // through the node
    for (ci, cur) in curves.iter().enumerate() {
        for (ei, (a, b)) in E_KEYS.iter().enumerate() {
            let node = nodes
                .iter()
                .find(|nd| nd.key == (*a, *b))
                .expect("all ten nodes computed");
            if cur.line.contains(field, &node.pt) {
                gram[8 + ci][ei] = 1;
                gram[ei][8 + ci] = 1;
            }
        }
    }

    for i in 0..14 {
        for j in i + 1..14 {
            let v = meet(field, &nodes, &curves[i], &curves[j])?;
            gram[8 + i][8 + j] = v;
            gram[8 + j][8 + i] = v;
        }
    }

    Ok((labels, gram))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wrong_field() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(build(&f5).unwrap_err(), Error::WrongFieldOrder(25));
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(build(&f9).unwrap_err(), Error::WrongFieldOrder(25));
    }

    #[test]
    fn structural_entries() {
        let f25 = Field::new(5, 2).unwrap();
        let (labels, gram) = build(&f25).unwrap();
        assert_eq!(labels.len(), 22);
        assert_eq!(labels[0], "E(A)");
        assert_eq!(labels[5], "E(3+2A)");
        assert_eq!(labels[8], "C(0;+)");
        assert_eq!(labels[9], "C(0;-)");
        assert_eq!(labels[21], "C(4+2A;+)");
        // exceptional curves over distinct nodes are disjoint
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(gram[i][j], if i == j { -2 } else { 0 });
            }
        }
        // opposite sheets over the same rational tangent line meet with
        // multiplicity three at the contact point
        assert_eq!(gram[8][9], 3);
        // the two branch tangents at a node cross exactly there, and
        // their sheets separate on the resolution
        assert_eq!(gram[11][13], 0);
        // every sheet over an imaginary tangency meets exactly one
        // exceptional curve; rational tangencies meet none
        for (ci, ((a, b), _)) in C_SPECS.iter().enumerate() {
            let hits: i64 = (0..8).map(|e| gram[8 + ci][e]).sum();
            if *b == 0 {
                assert_eq!(hits, 0);
            } else {
                let node_key = (*a, std::cmp::min(*b, 5 - *b));
                let chosen = E_KEYS.contains(&node_key);
                assert_eq!(hits, i64::from(chosen));
            }
        }
    }
}
