//! Neron-Severi basis for the quartic case q = 3, d = 4: the minimal
//! resolution of the quartic surface w^4 = F(x0, x1, x2) over F_9.
//!
//! The twenty-two classes are the nine components of the three A_3 chains
//! resolving the cover over the nodes of the branch curve, plus thirteen
//! components of pullbacks of tangent lines. Over a tangent line the
//! surface splits into four sheets w = alpha^nu * M where M is the linear
//! contact form of the line and alpha^4 = 1; each sheet is certified
//! symbolically by (M restricted)^4 = F restricted before any
//! intersection number is computed.

use super::{cross_point, dot, spec_label, Spec};
use crate::curve::{bh_parametrization, defining_form, tangent_line, Line, ProjPoint};
use crate::field::{Field, FieldElem, PrimePower};
use crate::poly::{BinForm, P1Point};
use crate::{Error, Result};

use Spec::{Fin, Inf};

/// Components of the A_3 chains, keyed by node index `a` (the node under
/// tau = a + alpha) and position `b`: the ends b = 1, 2 meet the branch
/// with tangency parameter a + b*alpha, and b = 0 is the middle curve.
const E_KEYS: [(i64, i64); 9] = [
    (0, 2),
    (0, 0),
    (0, 1),
    (1, 2),
    (1, 0),
    (1, 1),
    (2, 2),
    (2, 0),
    (2, 1),
];

/// Tangent-line sheet classes (tangency parameter, sheet exponent nu).
const L_KEYS: [(Spec, u32); 13] = [
    (Fin(0, 0), 0),
    (Fin(0, 0), 1),
    (Fin(0, 0), 2),
    (Fin(0, 0), 3),
    (Fin(1, 0), 0),
    (Fin(1, 0), 1),
    (Fin(2, 0), 0),
    (Fin(2, 0), 1),
    (Inf, 1),
    (Fin(0, 2), 0),
    (Fin(0, 2), 1),
    (Fin(1, 2), 2),
    (Fin(2, 2), 0),
];

struct LineData {
    spec: Spec,
    line: Line,
    m: [FieldElem; 3],
    contact: ProjPoint,
}

/// Assemble the labels and the 22x22 Gram matrix of the chosen basis.
/// `field` must have nine elements; any irreducible modulus produces the
/// same matrix because every ingredient is written in terms of a square
/// root of -1.
pub fn build(field: &Field) -> Result<(Vec<String>, Vec<Vec<i64>>)> {
    if field.order() != 9 {
        return Err(Error::WrongFieldOrder(9));
    }
    let q = PrimePower::new(3).expect("3 is prime");
    let alpha = field.element_with_square(-1)?;
    let phi = bh_parametrization(&q, field);
    let form = defining_form(&q, field);

    let tau_of = |a: i64, b: i64| field.add(&field.from_int(a), &field.scale(b, &alpha));

    // node a is the common image of a + alpha and a - alpha
    let node_pts: Vec<ProjPoint> = (0..3)
        .map(|a| phi.eval(field, &P1Point::Finite(tau_of(a, 1))))
        .collect();
    let node_at = |pt: &ProjPoint| node_pts.iter().position(|n| n == pt);

    let mut lines: Vec<LineData> = Vec::new();
    for (spec, _) in L_KEYS {
        if lines.iter().any(|l| l.spec == spec) {
            continue;
        }
        let param = match spec {
            Fin(a, b) => P1Point::Finite(tau_of(a, b)),
            Inf => P1Point::Infinity,
        };
        let line = tangent_line(&q, field, &param);
        let contact = phi.eval(field, &param);
        // contact form M = x2 - y(tau) x0 where y(tau) = tau^3 + tau is
        // the affine x2-coordinate of the contact point; at infinity the
        // contact form degenerates to x2
        let m: [FieldElem; 3] = match &param {
            P1Point::Infinity => [field.zero(), field.zero(), field.one()],
            P1Point::Finite(tau) => {
                let y = field.add(&field.pow(tau, 3), tau);
                [field.neg(&y), field.zero(), field.one()]
            }
        };
        // sheet certificate: M^4 agrees with F on the line, so the four
        // sheets over it are exactly w = alpha^nu M
        let basis = line.spanning_points(field);
        let subs: Vec<BinForm> = (0..3)
            .map(|i| BinForm::linear(basis[0][i].clone(), basis[1][i].clone()))
            .collect();
        let restriction = form.subst_bin(field, &subs)?;
        let m_restr = BinForm::linear(dot(field, &m, &basis[0]), dot(field, &m, &basis[1]));
        assert_eq!(
            m_restr.pow(field, 4),
            restriction,
            "sheet certificate failed for a tangent line"
        );
        lines.push(LineData {
            spec,
            line,
            m,
            contact,
        });
    }
    let line_of = |spec: Spec| {
        lines
            .iter()
            .find(|l| l.spec == spec)
            .expect("line data built for every key")
    };

    let mut labels: Vec<String> = Vec::new();
    for (a, b) in E_KEYS {
        if b == 0 {
            labels.push(format!("E({};mid)", spec_label(Fin(a, 1))));
        } else {
            labels.push(format!("E({})", spec_label(Fin(a, b))));
        }
    }
    for (spec, nu) in L_KEYS {
        labels.push(format!("L({};{})", spec_label(spec), nu));
    }

    let n = 22;
    let mut gram = vec![vec![0i64; n]; n];
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] = -2;
    }

    // each A_3 chain: the middle component meets both ends
    for i in 0..9 {
        for j in i + 1..9 {
            let (a1, b1) = E_KEYS[i];
            let (a2, b2) = E_KEYS[j];
            if a1 == a2 && (b1 == 0 || b2 == 0) {
                gram[i][j] = 1;
                gram[j][i] = 1;
            }
        }
    }

    // a line tangent at the imaginary parameter a + b*alpha passes
    // through node a, and its strict transform meets the chain end
    // matching its branch; rational tangent lines avoid the nodes
    for (li, &(spec, _)) in L_KEYS.iter().enumerate() {
        for (ei, &(a, b)) in E_KEYS.iter().enumerate() {
            if b != 0 && spec == Fin(a, b) {
                gram[9 + li][ei] = 1;
                gram[ei][9 + li] = 1;
            }
        }
    }

    for i in 0..13 {
        for j in i + 1..13 {
            let (si, ni) = L_KEYS[i];
            let (sj, nj) = L_KEYS[j];
            let di = line_of(si);
            let dj = line_of(sj);
            let v = if si == sj {
                // two sheets over the same line agree exactly where the
                // contact form vanishes, i.e. at the contact point; over
                // a node the resolved sheets separate
                debug_assert_ne!(ni, nj);
                if node_at(&di.contact).is_some() {
                    0
                } else {
                    1
                }
            } else {
                let pt = cross_point(field, di.line.coeffs(), dj.line.coeffs())?;
                if node_at(&pt).is_some() {
                    // the two branch tangents at a node cross exactly
                    // there, and their strict transforms separate
                    0
                } else {
                    let wi = field.mul(&field.pow(&alpha, ni as u64), &dot(field, &di.m, pt.coords()));
                    let wj = field.mul(&field.pow(&alpha, nj as u64), &dot(field, &dj.m, pt.coords()));
                    debug_assert!(!field.is_zero(&wi) && !field.is_zero(&wj));
                    i64::from(wi == wj)
                }
            };
            gram[9 + i][9 + j] = v;
            gram[9 + j][9 + i] = v;
        }
    }

    Ok((labels, gram))
}
