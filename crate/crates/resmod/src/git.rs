//! GIT stability of Weierstrass data and of its discriminant divisor.
//!
//! Two quotients see the same surface differently. The first acts on the
//! coefficient space of `(A, B)`: minimal data with only reduced fibers
//! (`I_n`, `II`, `III`, `IV`) is stable, an `I_N^*` fiber is the strictly
//! semistable wall (the orbit closure remembers only the j-coordinate of
//! that fiber), and the nonreduced types `II^*`, `III^*`, `IV^*`, as well
//! as non-minimal data, are unstable. The second is the classical binary
//! form quotient on the degree-12 discriminant divisor: stability there is
//! a pure multiplicity cutoff at half the degree.
//!
//! The two classes are independent. A surface with an `I_7` fiber keeps
//! every fiber reduced, so the coefficient quotient is stable, yet seven
//! of the twelve discriminant points collide and the divisor quotient
//! is unstable:
//!
//! ```
//! use resmod::git::{discriminant_image, miranda_class, MirandaClass, PointsClass};
//! use resmod::parse::parse_coefficients;
//! use resmod::weierstrass::data_from_affine;
//!
//! let (a, b) = parse_coefficients(
//!     "A = 3t^4 + 6t^3 + 6t^2 - 3; B = 7t^6 + 6t^5 - 6t^3 - 6t^2 + 2",
//! )?;
//! let data = data_from_affine(&a, &b)?;
//! assert_eq!(miranda_class(&data)?, MirandaClass::Stable);
//!
//! let (divisor, class) = discriminant_image(&data);
//! assert_eq!(class, PointsClass::Unstable);
//! assert!(divisor.iter().any(|(place, mult)| place.to_string() == "0" && *mult == 7));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

use crate::binform::{BinaryForm, Place};
use crate::weierstrass::{JValue, WeierstrassData, WeierstrassError};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Stability of Weierstrass data under the coefficient-space action.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum MirandaClass {
    Stable,
    StrictlySemistable { coordinate: JValue },
    Unstable,
}

/// Stability of a degree-12 divisor on the line under the Möbius action.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointsClass {
    Stable,
    StrictlySemistable,
    Unstable,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GitError {
    #[error("divisor has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("no single j-coordinate at an irreducible place of degree {degree}")]
    UnsupportedCoordinate { degree: usize },
    #[error(transparent)]
    Weierstrass(#[from] WeierstrassError),
}

/// Stability class of valid Weierstrass data.
///
/// Non-minimal data is unstable outright. Otherwise the fiber types decide:
/// all reduced gives stable; an `I_N^*` fiber gives strictly semistable with
/// the j-value at that fiber as the orbit coordinate, which is finite for
/// `N = 0` and infinite for `N >= 1` because the discriminant then vanishes
/// to higher order than `A^3`.
pub fn miranda_class(w: &WeierstrassData) -> Result<MirandaClass, GitError> {
    if !w.is_minimal_everywhere() {
        return Ok(MirandaClass::Unstable);
    }
    let config = w
        .fiber_configuration()
        .expect("minimal data classifies at every place");
    let mut starred_place: Option<Place> = None;
    for report in &config {
        use crate::fiber::FiberType::*;
        match report.kodaira {
            I(_) | II | III | IV => {}
            IStar(_) => {
                if starred_place.is_none() {
                    starred_place = Some(report.place.clone());
                }
            }
            IIStar | IIIStar | IVStar => return Ok(MirandaClass::Unstable),
            N0 | N1 | N2 => unreachable!("order table never yields germ types"),
        }
    }
    match starred_place {
        None => Ok(MirandaClass::Stable),
        Some(p) => {
            let coordinate = w
                .j_at(&p)
                .map_err(|e| GitError::UnsupportedCoordinate { degree: e.degree })?;
            Ok(MirandaClass::StrictlySemistable { coordinate })
        }
    }
}

/// [`miranda_class`] straight from the forms. An identically vanishing
/// discriminant is the deepest semistable degeneration and lands on the
/// `j = inf` orbit rather than being rejected; other invalid inputs error.
pub fn miranda_class_of(a: BinaryForm, b: BinaryForm) -> Result<MirandaClass, GitError> {
    match WeierstrassData::new(a, b) {
        Ok(w) => miranda_class(&w),
        Err(WeierstrassError::ZeroDiscriminant) => Ok(MirandaClass::StrictlySemistable {
            coordinate: JValue::Infinity,
        }),
        Err(e) => Err(e.into()),
    }
}

/// Stability of an effective degree-12 divisor, given as places with
/// multiplicities. Each irreducible place of degree k spreads over k
/// conjugate points of the same multiplicity, so only the multiplicities
/// matter: stable below 6, strictly semistable at exactly 6, unstable at 7
/// or more.
pub fn points_class(divisor: &[(Place, u32)]) -> Result<PointsClass, GitError> {
    let got: usize = divisor
        .iter()
        .map(|(p, m)| p.degree() * *m as usize)
        .sum();
    if got != 12 {
        return Err(GitError::DegreeMismatch { expected: 12, got });
    }
    let max = divisor.iter().map(|(_, m)| *m).max().unwrap_or(0);
    Ok(if max >= 7 {
        PointsClass::Unstable
    } else if max == 6 {
        PointsClass::StrictlySemistable
    } else {
        PointsClass::Stable
    })
}

/// The discriminant divisor of valid Weierstrass data together with its
/// stability class. The division of the degree-12 budget among the places
/// guarantees the class is defined.
pub fn discriminant_image(w: &WeierstrassData) -> (Vec<(Place, u32)>, PointsClass) {
    let divisor = w
        .discriminant()
        .factor()
        .expect("discriminant is nonzero")
        .factors;
    let class = points_class(&divisor).expect("discriminant divisor has degree 12");
    (divisor, class)
}

impl fmt::Display for MirandaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MirandaClass::Stable => write!(f, "stable"),
            MirandaClass::StrictlySemistable { coordinate } => {
                write!(f, "strictly semistable at j = {coordinate}")
            }
            MirandaClass::Unstable => write!(f, "unstable"),
        }
    }
}

impl fmt::Display for PointsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointsClass::Stable => write!(f, "stable"),
            PointsClass::StrictlySemistable => write!(f, "strictly semistable"),
            PointsClass::Unstable => write!(f, "unstable"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binform::QPoly;
    use crate::rational::Q;
    use crate::weierstrass::data_from_affine;

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::new(coeffs.iter().map(|&c| Q::int(c)).collect())
    }

    fn surface(a: &[i64], b: &[i64]) -> WeierstrassData {
        data_from_affine(&qp(a), &qp(b)).unwrap()
    }

    #[test]
    fn two_i0_star_fibers_are_strictly_semistable() {
        let w = surface(&[0, 0, 1], &[0, 0, 0, 1]);
        assert_eq!(
            miranda_class(&w).unwrap(),
            MirandaClass::StrictlySemistable {
                coordinate: JValue::Finite(Q::new(6912, 31))
            }
        );
        let (divisor, class) = discriminant_image(&w);
        assert_eq!(
            divisor,
            vec![(Place::Finite(Q::zero()), 6), (Place::Infinity, 6)]
        );
        assert_eq!(class, PointsClass::StrictlySemistable);
    }

    #[test]
    fn nonreduced_fibers_are_unstable() {
        // II at 0 plus II* at infinity
        assert_eq!(
            miranda_class(&surface(&[], &[0, 1])).unwrap(),
            MirandaClass::Unstable
        );
        // III* at infinity
        assert_eq!(
            miranda_class(&surface(&[0, 1], &[1])).unwrap(),
            MirandaClass::Unstable
        );
    }

    #[test]
    fn non_minimal_data_is_unstable() {
        let w = surface(&[], &[1]);
        assert!(!w.is_minimal_everywhere());
        assert_eq!(miranda_class(&w).unwrap(), MirandaClass::Unstable);
    }

    #[test]
    fn zero_discriminant_routes_to_the_infinite_orbit() {
        let a = BinaryForm::from_affine(
            4,
            &QPoly::new(vec![Q::zero(), Q::zero(), Q::new(-1, 3)]),
        )
        .unwrap();
        let b = BinaryForm::from_affine(
            6,
            &QPoly::new(vec![Q::zero(), Q::zero(), Q::zero(), Q::new(-2, 27)]),
        )
        .unwrap();
        assert_eq!(
            miranda_class_of(a, b).unwrap(),
            MirandaClass::StrictlySemistable {
                coordinate: JValue::Infinity
            }
        );
        let zero4 = BinaryForm::zero(4);
        let zero6 = BinaryForm::zero(6);
        assert_eq!(
            miranda_class_of(zero4, zero6).unwrap_err(),
            GitError::Weierstrass(WeierstrassError::BothZero)
        );
    }

    #[test]
    fn point_multiplicity_cutoffs() {
        let pt = |v: i64| Place::Finite(Q::int(v));
        assert_eq!(
            points_class(&[(pt(0), 5), (pt(1), 5), (pt(2), 2)]).unwrap(),
            PointsClass::Stable
        );
        assert_eq!(
            points_class(&[(pt(0), 6), (Place::Infinity, 6)]).unwrap(),
            PointsClass::StrictlySemistable
        );
        assert_eq!(
            points_class(&[(pt(0), 7), (pt(1), 5)]).unwrap(),
            PointsClass::Unstable
        );
        // an irreducible place counts once per conjugate point
        let quad = Place::irreducible(QPoly::new(vec![Q::int(1), Q::int(1), Q::int(1)]));
        assert_eq!(
            points_class(&[(quad.clone(), 6)]).unwrap(),
            PointsClass::StrictlySemistable
        );
        assert_eq!(
            points_class(&[(quad, 5)]).unwrap_err(),
            GitError::DegreeMismatch { expected: 12, got: 10 }
        );
    }

    #[test]
    fn starred_fiber_with_tail_has_infinite_coordinate() {
        // A = -3t^2, B = 2t^3 + t^4: the t^6 terms of 4A^3 and 27B^2 cancel
        // and D = 27 t^7 (4 + t), so the fiber at 0 is I_1* and the
        // orbit coordinate is the j-pole there. The rest of the budget is
        // IV at infinity and I_1 at t = -4.
        let w = surface(&[0, 0, -3], &[0, 0, 0, 2, 1]);
        use crate::fiber::FiberType::*;
        let types: Vec<_> = w
            .fiber_configuration()
            .unwrap()
            .iter()
            .map(|r| r.kodaira)
            .collect();
        assert_eq!(types, vec![I(1), IStar(1), IV]);
        assert_eq!(
            miranda_class(&w).unwrap(),
            MirandaClass::StrictlySemistable {
                coordinate: JValue::Infinity
            }
        );
    }
}
