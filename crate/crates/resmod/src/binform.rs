//! Binary forms on the projective line and the places they vanish at.
//!
//! A binary form of degree `d` is a homogeneous polynomial
//! `f(s, t) = sum_i c_i s^(d-i) t^i`; the coefficient list is exactly the
//! affine polynomial `f(1, t)` padded to length `d + 1`, so the form is the
//! degree-`d` homogenization of its affine part. Points of the line are
//! written in the affine coordinate `t`, with `inf` (the zero locus of `s`)
//! for the point at infinity; closed points that are not rational appear as
//! monic irreducible polynomials over Q, each standing for its full orbit of
//! conjugate geometric points.

mod poly;

pub use poly::QPoly;

use crate::rational::Q;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Errors from constructing or interrogating binary forms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("coefficient list has length {got}, expected degree + 1 = {expected}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("affine polynomial of degree {affine} does not fit in a form of degree {degree}")]
    AffineDegree { degree: usize, affine: usize },
    #[error("the zero form has no factorization")]
    ZeroForm,
    #[error("evaluation needs a rational point, got an irreducible place of degree {degree}")]
    IrreduciblePoint { degree: usize },
}

/// A closed point of the projective line over Q.
///
/// `Finite(v)` is the affine point `t = v`, `Infinity` is the zero of `s`
/// (printed `inf`, and as the pair `[1 : 0]` in projective notation
/// `[numerator : denominator]`), and `Irreducible(q)` is the orbit of
/// conjugate points cut out by a monic irreducible polynomial of degree at
/// least 2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    Finite(Q),
    Infinity,
    Irreducible(QPoly),
}

impl Place {
    pub fn finite(v: Q) -> Place {
        Place::Finite(v)
    }

    /// Wraps a monic polynomial of degree >= 2 as a place. Irreducibility
    /// over Q is the caller's contract; factorization output satisfies it.
    pub fn irreducible(q: QPoly) -> Place {
        assert!(q.degree() >= 2, "irreducible places have degree >= 2");
        assert!(q.lc().is_one(), "irreducible places are monic");
        Place::Irreducible(q)
    }

    /// Degree of the residue field extension: 1 for rational points.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(_) | Place::Infinity => 1,
            Place::Irreducible(q) => q.degree(),
        }
    }

    pub fn is_rational_point(&self) -> bool {
        !matches!(self, Place::Irreducible(_))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Place) -> Ordering {
        use Place::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), _) => Ordering::Less,
            (_, Finite(_)) => Ordering::Greater,
            (Infinity, Infinity) => Ordering::Equal,
            (Infinity, _) => Ordering::Less,
            (_, Infinity) => Ordering::Greater,
            (Irreducible(a), Irreducible(b)) => poly::cmp_poly(a, b),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Place) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(v) => write!(f, "{v}"),
            Place::Infinity => write!(f, "inf"),
            Place::Irreducible(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawPlace {
    Point { point: String },
    Irreducible { irreducible: Vec<Q> },
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = match self {
            Place::Finite(v) => RawPlace::Point { point: v.to_string() },
            Place::Infinity => RawPlace::Point { point: "inf".to_owned() },
            Place::Irreducible(q) => RawPlace::Irreducible { irreducible: q.coeffs().to_vec() },
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Place, D::Error> {
        use serde::de::Error;
        match RawPlace::deserialize(deserializer)? {
            RawPlace::Point { point } => {
                if point == "inf" {
                    Ok(Place::Infinity)
                } else {
                    Ok(Place::Finite(point.parse().map_err(Error::custom)?))
                }
            }
            RawPlace::Irreducible { irreducible } => {
                let q = QPoly::new(irreducible);
                if q.degree() < 2 {
                    return Err(Error::custom("irreducible place needs degree >= 2"));
                }
                if !q.lc().is_one() {
                    return Err(Error::custom("irreducible place must be monic"));
                }
                Ok(Place::Irreducible(q))
            }
        }
    }
}

/// A vanishing order: finite, or infinite exactly on the zero form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn as_finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    pub fn at_least(self, n: u32) -> bool {
        self >= Order::Finite(n)
    }

    pub fn at_most(self, n: u32) -> bool {
        self <= Order::Finite(n)
    }
}

impl From<u32> for Order {
    fn from(n: u32) -> Order {
        Order::Finite(n)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => serializer.serialize_u32(*n),
            Order::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Order, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u32),
            S(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::N(n) => Ok(Order::Finite(n)),
            Raw::S(s) if s == "inf" => Ok(Order::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad order {s:?}"))),
        }
    }
}

/// A binary form of fixed degree, possibly zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawForm")]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Q>,
}

#[derive(Deserialize)]
struct RawForm {
    degree: usize,
    coeffs: Vec<Q>,
}

impl TryFrom<RawForm> for BinaryForm {
    type Error = FormError;
    fn try_from(raw: RawForm) -> Result<BinaryForm, FormError> {
        BinaryForm::new(raw.degree, raw.coeffs)
    }
}

impl BinaryForm {
    /// Builds a form from its full coefficient list (index `i` holds the
    /// coefficient of `s^(d-i) t^i`).
    pub fn new(degree: usize, coeffs: Vec<Q>) -> Result<BinaryForm, FormError> {
        if coeffs.len() != degree + 1 {
            return Err(FormError::CoefficientCount { expected: degree + 1, got: coeffs.len() });
        }
        Ok(BinaryForm { degree, coeffs })
    }

    /// Homogenizes an affine polynomial to the given degree.
    pub fn from_affine(degree: usize, affine: &QPoly) -> Result<BinaryForm, FormError> {
        if !affine.is_zero() && affine.degree() > degree {
            return Err(FormError::AffineDegree { degree, affine: affine.degree() });
        }
        let mut coeffs = affine.coeffs().to_vec();
        coeffs.resize(degree + 1, Q::zero());
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn zero(degree: usize) -> BinaryForm {
        BinaryForm { degree, coeffs: vec![Q::zero(); degree + 1] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Q {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Q::is_zero)
    }

    /// The affine part `f(1, t)`.
    pub fn affine(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    /// Degree of the affine part; `None` for the zero form.
    pub fn affine_degree(&self) -> Option<usize> {
        let a = self.affine();
        (!a.is_zero()).then(|| a.degree())
    }

    /// Value of `f` at the normalized integer representative of a rational
    /// point: at `t = p/q` in lowest terms this is `f(q, p)`, and at
    /// infinity it is `f(0, 1)`, the top coefficient. Irreducible places
    /// have no single value and are rejected.
    pub fn evaluate(&self, p: &Place) -> Result<Q, FormError> {
        match p {
            Place::Finite(v) => {
                let num = Q::from_big(v.numer().clone(), 1.into());
                let den = Q::from_big(v.denom().clone(), 1.into());
                let mut total = Q::zero();
                let mut num_pow = Q::one();
                for (i, c) in self.coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        let s_pow = den.pow((self.degree - i) as u32);
                        total += &(&(c * &s_pow) * &num_pow);
                    }
                    num_pow = num_pow * &num;
                }
                Ok(total)
            }
            Place::Infinity => Ok(self.coeffs[self.degree].clone()),
            Place::Irreducible(q) => Err(FormError::IrreduciblePoint { degree: q.degree() }),
        }
    }

    /// Vanishing order of `f` at a place; infinite exactly on the zero form.
    /// At infinity the order is `degree - affine degree`.
    pub fn vanishing_order(&self, p: &Place) -> Order {
        let affine = self.affine();
        if affine.is_zero() {
            return Order::Infinite;
        }
        let n = match p {
            Place::Finite(v) => {
                let root = QPoly::new(vec![-v, Q::one()]);
                affine.multiplicity_of_factor(&root)
            }
            Place::Infinity => (self.degree - affine.degree()) as u32,
            Place::Irreducible(q) => affine.multiplicity_of_factor(q),
        };
        Order::Finite(n)
    }

    /// Complete factorization into places with multiplicity. The unit is the
    /// leading affine coefficient; re-homogenizing `unit` times the product
    /// of factors reproduces the form exactly, and degrees weighted by
    /// multiplicity always sum to the degree of the form.
    pub fn factor(&self) -> Result<Factorization, FormError> {
        if self.is_zero() {
            return Err(FormError::ZeroForm);
        }
        let affine = self.affine();
        let mut factors: Vec<(Place, u32)> = Vec::new();
        let inf = self.degree - affine.degree();
        let (unit, parts) = affine.factor();
        for (q, m) in parts {
            let place = if q.degree() == 1 {
                Place::Finite(-q.coeff(0))
            } else {
                Place::Irreducible(q)
            };
            factors.push((place, m));
        }
        if inf > 0 {
            factors.push((Place::Infinity, inf as u32));
        }
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Factorization { unit, factors })
    }

    pub fn scale(&self, c: &Q) -> BinaryForm {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Sum of two forms of the same degree. Panics on degree mismatch.
    pub fn add(&self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, rhs.degree, "form degrees must match");
        BinaryForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Product of forms; degrees add.
    pub fn mul(&self, rhs: &BinaryForm) -> BinaryForm {
        let degree = self.degree + rhs.degree;
        let mut coeffs = vec![Q::zero(); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        BinaryForm { degree, coeffs }
    }

    pub fn pow(&self, e: u32) -> BinaryForm {
        let mut acc = BinaryForm::new(0, vec![Q::one()]).expect("constant form");
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitution by an invertible integral matrix:
    /// `(s, t) -> (a s + b t, c s + d t)`. Panics on a singular matrix.
    pub fn substitute(&self, m: &[[Q; 2]; 2]) -> BinaryForm {
        let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
        assert!(!det.is_zero(), "substitution matrix must be invertible");
        // homogeneous degree-k vectors indexed by the power of t
        let lin_s = [m[0][0].clone(), m[0][1].clone()];
        let lin_t = [m[1][0].clone(), m[1][1].clone()];
        let mut out = vec![Q::zero(); self.degree + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = convolve(
                &homog_pow(&lin_s, self.degree - i),
                &homog_pow(&lin_t, i),
            );
            for (k, v) in term.iter().enumerate() {
                out[k] += &(c * v);
            }
        }
        BinaryForm { degree: self.degree, coeffs: out }
    }
}

/// `(alpha s + beta t)^k` as a degree-k homogeneous coefficient vector
/// indexed by the power of t.
fn homog_pow(lin: &[Q; 2], k: usize) -> Vec<Q> {
    let mut acc = vec![Q::one()];
    for _ in 0..k {
        let mut next = vec![Q::zero(); acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j] += &(c * &lin[0]);
            next[j + 1] += &(c * &lin[1]);
        }
        acc = next;
    }
    acc
}

fn convolve(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

impl fmt::Display for BinaryForm {
    /// Prints the affine part; the degree determines the implicit power of s.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.affine())
    }
}

/// Factorization of a nonzero form into places.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub unit: Q,
    pub factors: Vec<(Place, u32)>,
}

impl Factorization {
    /// Sum of place degrees weighted by multiplicity; always equals the
    /// degree of the factored form.
    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|(p, m)| p.degree() * *m as usize).sum()
    }

    /// Multiplicity of one place (zero when absent).
    pub fn multiplicity(&self, place: &Place) -> u32 {
        self.factors
            .iter()
            .find(|(p, _)| p == place)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    /// Rebuilds the degree-`degree` form `unit * prod factors`.
    pub fn re_expand(&self, degree: usize) -> Result<BinaryForm, FormError> {
        let mut affine = QPoly::constant(self.unit.clone());
        for (place, mult) in &self.factors {
            let base = match place {
                Place::Finite(v) => QPoly::new(vec![-v, Q::one()]),
                Place::Infinity => continue,
                Place::Irreducible(q) => q.clone(),
            };
            for _ in 0..*mult {
                affine = affine.mul(&base);
            }
        }
        BinaryForm::from_affine(degree, &affine)
    }
}
