//! Weierstrass data on the projective line and its fiber analysis.
//!
//! A surface `y^2 = x^3 + A x + B` with `deg A = 4`, `deg B = 6` is encoded
//! by the pair of forms; the discriminant `D = 4A^3 + 27B^2` has degree 12
//! and its vanishing orders, together with those of A and B, classify every
//! singular fiber through the characteristic-zero short-form order table.
//! The j-invariant is kept as a reduced fraction of forms and only evaluated
//! at places where that is well defined.

use crate::binform::{BinaryForm, FormError, Order, Place, QPoly};
use crate::fiber::FiberType;
use crate::rational::Q;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors from assembling Weierstrass data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeierstrassError {
    #[error("A must be a binary form of degree 4, got degree {0}")]
    BadDegreeA(usize),
    #[error("B must be a binary form of degree 6, got degree {0}")]
    BadDegreeB(usize),
    #[error("A and B are both zero")]
    BothZero,
    #[error("discriminant 4A^3 + 27B^2 vanishes identically")]
    ZeroDiscriminant,
}

/// Errors from fiber classification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KodairaError {
    #[error("Weierstrass data is not minimal at place {place}")]
    NotMinimal { place: Place },
    #[error("order triple (vA = {v_a}, vB = {v_b}, vD = {v_d}) at place {place} matches no classification row; this is a bug")]
    InconsistentOrders { place: Place, v_a: Order, v_b: Order, v_d: u32 },
}

/// A j-invariant value: a rational number or the point at infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum JValue {
    Finite(Q),
    Infinity,
}

impl fmt::Display for JValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JValue::Finite(v) => write!(f, "{v}"),
            JValue::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for JValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for JValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<JValue, D::Error> {
        let s = String::deserialize(d)?;
        if s == "inf" {
            Ok(JValue::Infinity)
        } else {
            Ok(JValue::Finite(s.parse().map_err(serde::de::Error::custom)?))
        }
    }
}

/// Error from asking for a j-value where none is defined.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("j is non-constant at an irreducible place of degree {degree}; no single coordinate exists")]
pub struct UnsupportedCoordinate {
    pub degree: usize,
}

/// The pair (A, B) with its degree-12 discriminant, valid by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeierstrassData {
    a: BinaryForm,
    b: BinaryForm,
    disc: BinaryForm,
}

/// Fiber classification at one place of the vanishing discriminant.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FiberReport {
    pub place: Place,
    #[serde(rename = "vA")]
    pub v_a: Order,
    #[serde(rename = "vB")]
    pub v_b: Order,
    #[serde(rename = "vD")]
    pub v_d: u32,
    #[serde(rename = "type")]
    pub kodaira: FiberType,
    pub minimal: bool,
}

impl WeierstrassData {
    /// Validates degrees, rejects the all-zero pair and identically
    /// vanishing discriminant, and caches `D = 4A^3 + 27B^2`.
    pub fn new(a: BinaryForm, b: BinaryForm) -> Result<WeierstrassData, WeierstrassError> {
        if a.degree() != 4 {
            return Err(WeierstrassError::BadDegreeA(a.degree()));
        }
        if b.degree() != 6 {
            return Err(WeierstrassError::BadDegreeB(b.degree()));
        }
        if a.is_zero() && b.is_zero() {
            return Err(WeierstrassError::BothZero);
        }
        let disc = a.pow(3).scale(&Q::int(4)).add(&b.pow(2).scale(&Q::int(27)));
        if disc.is_zero() {
            return Err(WeierstrassError::ZeroDiscriminant);
        }
        Ok(WeierstrassData { a, b, disc })
    }

    pub fn a(&self) -> &BinaryForm {
        &self.a
    }

    pub fn b(&self) -> &BinaryForm {
        &self.b
    }

    /// The degree-12 form `4A^3 + 27B^2`, never zero.
    pub fn discriminant(&self) -> &BinaryForm {
        &self.disc
    }

    /// True iff `v_p(A) <= 3` or `v_p(B) <= 5`.
    pub fn is_minimal(&self, p: &Place) -> bool {
        self.a.vanishing_order(p).at_most(3) || self.b.vanishing_order(p).at_most(5)
    }

    /// Minimality at every place. Non-minimality forces `v_p(D) >= 12`, so
    /// only places of the discriminant need checking.
    pub fn is_minimal_everywhere(&self) -> bool {
        let fac = self.disc.factor().expect("discriminant is nonzero");
        fac.factors.iter().all(|(p, _)| self.is_minimal(p))
    }

    /// Kodaira type at `p` from the order triple `(v(A), v(B), v(D))`.
    pub fn kodaira_type(&self, p: &Place) -> Result<FiberType, KodairaError> {
        let v_a = self.a.vanishing_order(p);
        let v_b = self.b.vanishing_order(p);
        let v_d = self
            .disc
            .vanishing_order(p)
            .as_finite()
            .expect("discriminant is nonzero");
        if v_d == 0 {
            return Ok(FiberType::I(0));
        }
        if !self.is_minimal(p) {
            return Err(KodairaError::NotMinimal { place: p.clone() });
        }
        if v_a == Order::Finite(0) {
            return Ok(FiberType::I(v_d));
        }
        let ty = match (v_a, v_b, v_d) {
            (_, Order::Finite(1), 2) => FiberType::II,
            (Order::Finite(1), b, 3) if b.at_least(2) => FiberType::III,
            (a, Order::Finite(2), 4) if a.at_least(2) => FiberType::IV,
            (a, b, 6) if a.at_least(2) && b.at_least(3) => FiberType::IStar(0),
            (Order::Finite(2), Order::Finite(3), n) if n >= 7 => FiberType::IStar(n - 6),
            (a, Order::Finite(4), 8) if a.at_least(3) => FiberType::IVStar,
            (Order::Finite(3), b, 9) if b.at_least(5) => FiberType::IIIStar,
            (a, Order::Finite(5), 10) if a.at_least(4) => FiberType::IIStar,
            _ => {
                return Err(KodairaError::InconsistentOrders {
                    place: p.clone(),
                    v_a,
                    v_b,
                    v_d,
                })
            }
        };
        Ok(ty)
    }

    /// One report per place of the vanishing discriminant, sorted; the
    /// degrees weighted by `v(D)` always sum to 12.
    pub fn fiber_configuration(&self) -> Result<Vec<FiberReport>, KodairaError> {
        let fac = self.disc.factor().expect("discriminant is nonzero");
        let mut out = Vec::with_capacity(fac.factors.len());
        for (place, mult) in fac.factors {
            let kodaira = self.kodaira_type(&place)?;
            out.push(FiberReport {
                v_a: self.a.vanishing_order(&place),
                v_b: self.b.vanishing_order(&place),
                v_d: mult,
                kodaira,
                minimal: self.is_minimal(&place),
                place,
            });
        }
        Ok(out)
    }

    /// The reduced j-invariant `1728 * 4A^3 / (4A^3 + 27B^2)` as a pair of
    /// forms of equal degree with no common factor. Constant exactly for
    /// isotrivial surfaces.
    ///
    /// ```
    /// # use resmod::parse::parse_coefficients;
    /// # use resmod::weierstrass::data_from_affine;
    /// let (a, b) = parse_coefficients("A = t^2; B = t^3")?;
    /// let data = data_from_affine(&a, &b)?;
    /// let j = data.j_function();
    /// assert!(j.is_constant());
    /// # Ok::<(), Box<dyn std::error::Error>>(())
    /// ```
    pub fn j_function(&self) -> JFunction {
        let num = self.a.pow(3).scale(&Q::int(4 * 1728));
        if num.is_zero() {
            return JFunction {
                num: BinaryForm::zero(0),
                den: BinaryForm::new(0, vec![Q::one()]).expect("constant form"),
            };
        }
        let n_aff = num.affine();
        let d_aff = self.disc.affine();
        let g = n_aff.gcd(&d_aff);
        let n_red = n_aff.div_exact(&g).expect("gcd divides");
        let d_red = d_aff.div_exact(&g).expect("gcd divides");
        // normalize so the denominator is primitive with positive leading
        // coefficient; this pins the fraction down among its rescalings
        let (c, d_prim) = d_red.content_primitive();
        let n_red = n_red.scale(&c.recip());
        let d_red = d_prim.to_qpoly();
        let n_inf = 12 - n_aff.degree();
        let d_inf = 12 - d_aff.degree();
        let m = n_inf.min(d_inf);
        let degree = 12 - g.degree() - m;
        JFunction {
            num: BinaryForm::from_affine(degree, &n_red).expect("degree fits"),
            den: BinaryForm::from_affine(degree, &d_red).expect("degree fits"),
        }
    }

    /// Value of the reduced j-invariant at a place: `Infinity` exactly where
    /// the reduced denominator vanishes. At an irreducible place this is
    /// defined only when j is constant; otherwise the coordinate is refused.
    pub fn j_at(&self, p: &Place) -> Result<JValue, UnsupportedCoordinate> {
        let j = self.j_function();
        if j.den.vanishing_order(p).at_least(1) {
            return Ok(JValue::Infinity);
        }
        if let Some(c) = j.constant_value() {
            return Ok(JValue::Finite(c));
        }
        match p {
            Place::Irreducible(q) => Err(UnsupportedCoordinate { degree: q.degree() }),
            _ => {
                let n = j.num.evaluate(p).expect("rational point");
                let d = j.den.evaluate(p).expect("rational point");
                Ok(JValue::Finite(n / d))
            }
        }
    }
}

/// A reduced fraction of binary forms of equal degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct JFunction {
    pub num: BinaryForm,
    pub den: BinaryForm,
}

impl JFunction {
    pub fn is_constant(&self) -> bool {
        self.num.degree() == 0
    }

    /// The constant value when the fraction has degree 0.
    pub fn constant_value(&self) -> Option<Q> {
        self.is_constant()
            .then(|| self.num.coeff(0) / self.den.coeff(0))
    }
}

impl fmt::Display for JFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.constant_value() {
            write!(f, "{c}")
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Convenience constructor from affine polynomials in t.
pub fn data_from_affine(a: &QPoly, b: &QPoly) -> Result<WeierstrassData, WeierstrassError> {
    let a4 = BinaryForm::from_affine(4, a).map_err(|e| match e {
        FormError::AffineDegree { affine, .. } => WeierstrassError::BadDegreeA(affine),
        _ => WeierstrassError::BadDegreeA(usize::MAX),
    })?;
    let b6 = BinaryForm::from_affine(6, b).map_err(|e| match e {
        FormError::AffineDegree { affine, .. } => WeierstrassError::BadDegreeB(affine),
        _ => WeierstrassError::BadDegreeB(usize::MAX),
    })?;
    WeierstrassData::new(a4, b6)
}
