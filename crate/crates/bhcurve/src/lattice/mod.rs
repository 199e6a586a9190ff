//! Neron-Severi lattices of the two supersingular K3 surfaces arising
//! from cyclic covers branched along the degree q + 1 curve: the quartic
//! surface for q = 3, d = 4 and the double plane for q = 5, d = 2.
//!
//! For each case the module assembles an explicit rank-22 basis of
//! divisor classes (exceptional curves of the resolved cover plus sheet
//! components over tangent lines), computes the 22x22 Gram matrix from
//! scratch by exact intersection theory, and reads off the determinant,
//! the inertia, and the Artin invariant.

mod intmat;
mod quartic;
mod sextic;
mod tables;

pub use intmat::{artin_invariant, bareiss_det, det_to_i64, inertia};
pub use tables::{QUARTIC_REFERENCE, SEXTIC_REFERENCE};

use crate::curve::ProjPoint;
use crate::field::{Field, FieldElem};
use crate::Result;

/// Tangency parameter written as integer data `a + b*alpha`, with
/// `alpha` the fixed quadratic generator of the case (a square root of
/// -1 over F_9, of 2 over F_25), or the point at infinity. Keying the
/// basis this way keeps it independent of the modulus presenting the
/// field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Spec {
    Fin(i64, i64),
    Inf,
}

pub(crate) fn spec_label(s: Spec) -> String {
    let alpha_part = |b: i64| {
        if b == 1 {
            "A".to_string()
        } else {
            format!("{b}A")
        }
    };
    match s {
        Spec::Inf => "inf".to_string(),
        Spec::Fin(a, 0) => format!("{a}"),
        Spec::Fin(0, b) => alpha_part(b),
        Spec::Fin(a, b) => format!("{}+{}", a, alpha_part(b)),
    }
}

pub(crate) fn dot(field: &Field, m: &[FieldElem; 3], v: &[FieldElem]) -> FieldElem {
    let mut acc = field.zero();
    for k in 0..3 {
        acc = field.add(&acc, &field.mul(&m[k], &v[k]));
    }
    acc
}

/// Intersection point of two distinct lines, as the cross product of
/// their coefficient vectors.
pub(crate) fn cross_point(
    field: &Field,
    u: &[FieldElem; 3],
    v: &[FieldElem; 3],
) -> Result<ProjPoint> {
    let c = vec![
        field.sub(&field.mul(&u[1], &v[2]), &field.mul(&u[2], &v[1])),
        field.sub(&field.mul(&u[2], &v[0]), &field.mul(&u[0], &v[2])),
        field.sub(&field.mul(&u[0], &v[1]), &field.mul(&u[1], &v[0])),
    ];
    ProjPoint::new(field, c)
}

/// Everything computed for one K3 case.
#[derive(Clone, Debug)]
pub struct K3Report {
    pub case_name: &'static str,
    pub q: u32,
    pub d: u32,
    pub labels: Vec<String>,
    pub gram: Vec<Vec<i64>>,
    pub det: i64,
    pub inertia: (usize, usize, usize),
    pub artin_invariant: u32,
    pub matches_reference: bool,
}

impl K3Report {
    pub fn all_ok(&self) -> bool {
        self.matches_reference
            && self.inertia == (1, 21, 0)
            && self.artin_invariant == 1
    }
}

/// Field with nine elements used when no explicit modulus is requested.
pub fn default_quartic_field() -> Field {
    Field::new(3, 2).expect("F_9 exists")
}

/// Field with twenty-five elements used when no explicit modulus is
/// requested.
pub fn default_sextic_field() -> Field {
    Field::new(5, 2).expect("F_25 exists")
}

/// Gram matrix and invariants for the quartic case q = 3, d = 4.
/// `field` must have nine elements.
pub fn k3_quartic(field: &Field) -> Result<K3Report> {
    let (labels, gram) = quartic::build(field)?;
    finish("quartic", 3, 4, labels, gram, &QUARTIC_REFERENCE)
}

/// Gram matrix and invariants for the sextic double-plane case q = 5,
/// d = 2. `field` must have twenty-five elements.
pub fn k3_sextic(field: &Field) -> Result<K3Report> {
    let (labels, gram) = sextic::build(field)?;
    finish("sextic", 5, 2, labels, gram, &SEXTIC_REFERENCE)
}

fn finish(
    case_name: &'static str,
    q: u32,
    d: u32,
    labels: Vec<String>,
    gram: Vec<Vec<i64>>,
    reference: &[[i64; 22]; 22],
) -> Result<K3Report> {
    let det_big = bareiss_det(&gram);
    let det = det_to_i64(&det_big)?;
    let inertia = inertia(&gram);
    let artin = artin_invariant(&det_big, q)?;
    let matches_reference = gram.len() == 22
        && gram
            .iter()
            .zip(reference.iter())
            .all(|(row, want)| row.as_slice() == want.as_slice());
    Ok(K3Report {
        case_name,
        q,
        d,
        labels,
        gram,
        det,
        inertia,
        artin_invariant: artin,
        matches_reference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn quartic_case_reproduces_the_reference_lattice() {
        let report = k3_quartic(&default_quartic_field()).unwrap();
        assert_eq!(report.det, -9);
        assert_eq!(report.inertia, (1, 21, 0));
        assert_eq!(report.artin_invariant, 1);
        assert!(report.matches_reference);
        assert!(report.all_ok());
        assert_eq!(report.labels.len(), 22);
    }

    #[test]
    fn sextic_case_reproduces_the_reference_lattice() {
        let report = k3_sextic(&default_sextic_field()).unwrap();
        assert_eq!(report.det, -25);
        assert_eq!(report.inertia, (1, 21, 0));
        assert_eq!(report.artin_invariant, 1);
        assert!(report.matches_reference);
        assert!(report.all_ok());
    }

    #[test]
    fn quartic_gram_is_independent_of_the_modulus() {
        let base = k3_quartic(&default_quartic_field()).unwrap();
        // x^2 + x + 2 is irreducible over F_3
        let other_field = Field::with_modulus(3, &[2, 1, 1]).unwrap();
        let other = k3_quartic(&other_field).unwrap();
        assert_eq!(base.gram, other.gram);
        assert_eq!(base.labels, other.labels);
    }

    #[test]
    fn sextic_gram_is_independent_of_the_modulus() {
        let base = k3_sextic(&default_sextic_field()).unwrap();
        // x^2 - 2 is irreducible over F_5
        let other_field = Field::with_modulus(5, &[-2, 0, 1]).unwrap();
        let other = k3_sextic(&other_field).unwrap();
        assert_eq!(base.gram, other.gram);
        assert_eq!(base.labels, other.labels);
    }

    #[test]
    fn wrong_fields_are_rejected() {
        assert_eq!(
            k3_quartic(&default_sextic_field()).unwrap_err(),
            Error::WrongFieldOrder(9)
        );
        assert_eq!(
            k3_sextic(&default_quartic_field()).unwrap_err(),
            Error::WrongFieldOrder(25)
        );
    }

    #[test]
    fn reference_tables_are_symmetric_with_even_diagonal() {
        for table in [&QUARTIC_REFERENCE, &SEXTIC_REFERENCE] {
            for i in 0..22 {
                assert_eq!(table[i][i] % 2, 0);
                for j in 0..22 {
                    assert_eq!(table[i][j], table[j][i]);
                }
            }
        }
    }
}
