//! The singular fiber dictionary.
//!
//! Fiber symbols follow Kodaira's notation (`I0`, `I7`, `II`, `I2*`, `III*`,
//! ...) extended by the non-fibered germs `N0`, `N1`, `N2` with local normal
//! form `y^2 = x^2 (x - t^k)`: `N0` is a stable nodal degeneration, `N1` the
//! twisted-model germ appearing along double loci of j = infinity
//! components, and `N2` is outside the supported range of every operation
//! here.
//!
//! Three per-type quantities drive everything downstream: the log canonical
//! threshold of the fiber in its ambient surface (which walls of type W_I
//! and W_III are built from), the local degree of the discriminant, and the
//! birational model (Weierstrass, intermediate, twisted) the fiber takes at
//! a given marking weight.

use crate::rational::Q;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A singular fiber type (or non-fibered germ) in the extended Kodaira list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FiberType {
    /// `I_n`: smooth for n = 0, a cycle of n rational curves for n >= 1.
    I(u32),
    II,
    III,
    IV,
    /// `I_n^*`.
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
    N0,
    N1,
    N2,
}

/// Errors from the fiber dictionary.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiberError {
    #[error("fiber type N2 is outside the supported range")]
    Unsupported,
}

/// The birational model a fiber takes at a given marking weight.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FiberModel {
    Weierstrass,
    Intermediate,
    Twisted,
}

impl FiberType {
    /// Log canonical threshold of the fiber. Types `I_n` and `N0` stay in
    /// Weierstrass form for every admissible weight, reported as the
    /// sentinel value 1.
    pub fn lct(&self) -> Result<Q, FiberError> {
        use FiberType::*;
        Ok(match self {
            I(_) | N0 => Q::one(),
            II => Q::new(5, 6),
            III => Q::new(3, 4),
            IV => Q::new(2, 3),
            IStar(_) | N1 => Q::new(1, 2),
            IVStar => Q::new(1, 3),
            IIIStar => Q::new(1, 4),
            IIStar => Q::new(1, 6),
            N2 => return Err(FiberError::Unsupported),
        })
    }

    /// Local vanishing order of the discriminant. `N0` carries no
    /// discriminant degree of its own: a surface acquires `N0` germs only
    /// through markings, which are budgeted globally, never through the
    /// degree-12 fiber budget.
    pub fn disc_degree(&self) -> Result<u32, FiberError> {
        use FiberType::*;
        Ok(match self {
            I(n) => *n,
            II => 2,
            III => 3,
            IV => 4,
            IStar(n) => 6 + n,
            IVStar => 8,
            IIIStar => 9,
            IIStar => 10,
            N1 => 3,
            N0 => 0,
            N2 => return Err(FiberError::Unsupported),
        })
    }

    /// Model of a marked fiber of this type at weight `a`. The fiber is in
    /// Weierstrass form for `a <= lct`, twisted exactly at `a = 1` when the
    /// threshold sits below 1, and intermediate in between. Walking `a`
    /// downward the model moves monotonically
    /// twisted -> intermediate -> Weierstrass.
    ///
    /// Panics outside the admissible range `1/12 < a <= 1`.
    pub fn model_at_weight(&self, a: &Q) -> Result<FiberModel, FiberError> {
        assert!(
            *a > Q::new(1, 12) && *a <= Q::one(),
            "weight out of range (1/12, 1]"
        );
        let lct = self.lct()?;
        Ok(if *a <= lct {
            FiberModel::Weierstrass
        } else if *a == Q::one() {
            FiberModel::Twisted
        } else {
            FiberModel::Intermediate
        })
    }

    /// Whether two fiber types can be glued along a double locus: both
    /// stable nodal (`I_n` with n >= 1, or `N0`), both starred
    /// (`I_n^*` or `N1`), or a dual pair `II/II*`, `III/III*`, `IV/IV*`.
    /// Symmetric; `N2` matches nothing.
    pub fn tsm_compatible(&self, other: &FiberType) -> bool {
        use FiberType::*;
        if self.is_stable_nodal() && other.is_stable_nodal() {
            return true;
        }
        if self.is_starred() && other.is_starred() {
            return true;
        }
        matches!(
            (self, other),
            (II, IIStar) | (IIStar, II) | (III, IIIStar) | (IIIStar, III) | (IV, IVStar) | (IVStar, IV)
        )
    }

    pub fn is_starred(&self) -> bool {
        matches!(self, FiberType::IStar(_) | FiberType::N1)
    }

    /// `I_n` with n >= 1, or the nodal germ `N0`: the types that may sit in
    /// a double locus with their Weierstrass model.
    pub fn is_stable_nodal(&self) -> bool {
        matches!(self, FiberType::I(n) if *n >= 1) || matches!(self, FiberType::N0)
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FiberType::*;
        match self {
            I(n) => write!(f, "I{n}"),
            II => write!(f, "II"),
            III => write!(f, "III"),
            IV => write!(f, "IV"),
            IStar(n) => write!(f, "I{n}*"),
            IVStar => write!(f, "IV*"),
            IIIStar => write!(f, "III*"),
            IIStar => write!(f, "II*"),
            N0 => write!(f, "N0"),
            N1 => write!(f, "N1"),
            N2 => write!(f, "N2"),
        }
    }
}

/// Error from parsing a fiber symbol.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown fiber symbol {input:?}")]
pub struct ParseFiberError {
    pub input: String,
}

impl FromStr for FiberType {
    type Err = ParseFiberError;

    fn from_str(s: &str) -> Result<FiberType, ParseFiberError> {
        use FiberType::*;
        let bad = || ParseFiberError { input: s.to_owned() };
        Ok(match s {
            "II" => II,
            "III" => III,
            "IV" => IV,
            "II*" => IIStar,
            "III*" => IIIStar,
            "IV*" => IVStar,
            "N0" => N0,
            "N1" => N1,
            "N2" => N2,
            _ => {
                let body = s.strip_prefix('I').ok_or_else(bad)?;
                let (digits, star) = match body.strip_suffix('*') {
                    Some(d) => (d, true),
                    None => (body, false),
                };
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let n: u32 = digits.parse().map_err(|_| bad())?;
                if star {
                    IStar(n)
                } else {
                    I(n)
                }
            }
        })
    }
}

impl Serialize for FiberType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FiberType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<FiberType, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for FiberModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FiberModel::Weierstrass => "weierstrass",
            FiberModel::Intermediate => "intermediate",
            FiberModel::Twisted => "twisted",
        };
        write!(f, "{s}")
    }
}

impl FromStr for FiberModel {
    type Err = ParseFiberError;

    fn from_str(s: &str) -> Result<FiberModel, ParseFiberError> {
        match s {
            "weierstrass" => Ok(FiberModel::Weierstrass),
            "intermediate" => Ok(FiberModel::Intermediate),
            "twisted" => Ok(FiberModel::Twisted),
            _ => Err(ParseFiberError { input: s.to_owned() }),
        }
    }
}

impl Serialize for FiberModel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FiberModel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<FiberModel, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use FiberType::*;

    #[test]
    fn threshold_table() {
        assert_eq!(II.lct().unwrap(), Q::new(5, 6));
        assert_eq!(III.lct().unwrap(), Q::new(3, 4));
        assert_eq!(IV.lct().unwrap(), Q::new(2, 3));
        assert_eq!(N1.lct().unwrap(), Q::new(1, 2));
        assert_eq!(IStar(0).lct().unwrap(), Q::new(1, 2));
        assert_eq!(IStar(4).lct().unwrap(), Q::new(1, 2));
        assert_eq!(IVStar.lct().unwrap(), Q::new(1, 3));
        assert_eq!(IIIStar.lct().unwrap(), Q::new(1, 4));
        assert_eq!(IIStar.lct().unwrap(), Q::new(1, 6));
        assert_eq!(I(0).lct().unwrap(), Q::one());
        assert_eq!(I(9).lct().unwrap(), Q::one());
        assert_eq!(N0.lct().unwrap(), Q::one());
        assert_eq!(N2.lct(), Err(FiberError::Unsupported));
    }

    #[test]
    fn discriminant_degrees() {
        assert_eq!(I(0).disc_degree().unwrap(), 0);
        assert_eq!(I(7).disc_degree().unwrap(), 7);
        assert_eq!(II.disc_degree().unwrap(), 2);
        assert_eq!(III.disc_degree().unwrap(), 3);
        assert_eq!(IV.disc_degree().unwrap(), 4);
        assert_eq!(IStar(0).disc_degree().unwrap(), 6);
        assert_eq!(IStar(3).disc_degree().unwrap(), 9);
        assert_eq!(IVStar.disc_degree().unwrap(), 8);
        assert_eq!(IIIStar.disc_degree().unwrap(), 9);
        assert_eq!(IIStar.disc_degree().unwrap(), 10);
        assert_eq!(N1.disc_degree().unwrap(), 3);
        assert_eq!(N0.disc_degree().unwrap(), 0);
        assert_eq!(N2.disc_degree(), Err(FiberError::Unsupported));
    }

    #[test]
    fn model_moves_monotonically() {
        let one = Q::one();
        assert_eq!(IIStar.model_at_weight(&one).unwrap(), FiberModel::Twisted);
        assert_eq!(
            IIStar.model_at_weight(&Q::new(1, 2)).unwrap(),
            FiberModel::Intermediate
        );
        assert_eq!(
            IIStar.model_at_weight(&Q::new(1, 6)).unwrap(),
            FiberModel::Weierstrass
        );
        assert_eq!(
            IIStar.model_at_weight(&Q::new(1, 7)).unwrap(),
            FiberModel::Weierstrass
        );
        assert_eq!(I(5).model_at_weight(&one).unwrap(), FiberModel::Weierstrass);
        assert_eq!(N0.model_at_weight(&one).unwrap(), FiberModel::Weierstrass);
        assert_eq!(
            II.model_at_weight(&Q::new(5, 6)).unwrap(),
            FiberModel::Weierstrass
        );
        assert_eq!(
            II.model_at_weight(&Q::new(9, 10)).unwrap(),
            FiberModel::Intermediate
        );
    }

    #[test]
    fn gluing_compatibility() {
        assert!(I(3).tsm_compatible(&I(7)));
        assert!(I(1).tsm_compatible(&N0));
        assert!(N0.tsm_compatible(&N0));
        assert!(!I(0).tsm_compatible(&I(3)));
        assert!(IStar(0).tsm_compatible(&IStar(4)));
        assert!(IStar(3).tsm_compatible(&N1));
        assert!(N1.tsm_compatible(&N1));
        assert!(II.tsm_compatible(&IIStar));
        assert!(IIStar.tsm_compatible(&II));
        assert!(III.tsm_compatible(&IIIStar));
        assert!(IV.tsm_compatible(&IVStar));
        assert!(!II.tsm_compatible(&IIIStar));
        assert!(!I(2).tsm_compatible(&IStar(0)));
        assert!(!N2.tsm_compatible(&N2));
        assert!(!II.tsm_compatible(&II));
    }

    #[test]
    fn symbols_round_trip() {
        for s in ["I0", "I7", "I12", "II", "III", "IV", "I0*", "I2*", "II*", "III*", "IV*", "N0", "N1", "N2"] {
            let t: FiberType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!("I".parse::<FiberType>().is_err());
        assert!("V".parse::<FiberType>().is_err());
        assert!("I-3".parse::<FiberType>().is_err());
        assert_eq!(serde_json::to_string(&IStar(2)).unwrap(), "\"I2*\"");
    }
}
