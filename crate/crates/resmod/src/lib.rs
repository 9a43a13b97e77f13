//! Exact models of rational elliptic surfaces and their degenerations.
//!
//! The crate works with surfaces `y^2 = x^3 + A x + B` where `A` and `B` are
//! binary forms of degrees 4 and 6 on the projective line. Everything is
//! computed over the rationals with no floating point: singular fiber types
//! and their vanishing orders, GIT stability of the Weierstrass data and of
//! the degree-12 discriminant divisor, weighted stability of marked base
//! curves, the wall-and-chamber structure on the weight interval (1/12, 1],
//! and the wall-by-wall reduction of broken surfaces down to the boundary
//! models at the small-weight end.
//!
//! Start with [`weierstrass::WeierstrassData`] for fiber analysis, or with
//! [`broken::BrokenSurface`] and [`reduce::run`] for wall crossing. The
//! `resmod` command line tool in this workspace exposes the same operations
//! on JSON inputs.
//!
//! ```
//! use resmod::git::{miranda_class, MirandaClass};
//! use resmod::parse::parse_coefficients;
//! use resmod::rational::Q;
//! use resmod::weierstrass::data_from_affine;
//!
//! let (a, b) = parse_coefficients("A = t^2; B = t^3")?;
//! let data = data_from_affine(&a, &b)?;
//!
//! let fibers = data.fiber_configuration()?;
//! assert_eq!(fibers.len(), 2);
//! assert!(fibers.iter().all(|f| f.kodaira.to_string() == "I0*"));
//!
//! assert_eq!(data.j_function().constant_value(), Some(Q::new(6912, 31)));
//! assert!(matches!(
//!     miranda_class(&data)?,
//!     MirandaClass::StrictlySemistable { .. }
//! ));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod binform;
pub mod broken;
pub mod fiber;
pub mod git;
pub mod hassett;
pub mod parse;
pub mod reduce;
pub mod walls;
pub mod rational;
pub mod weierstrass;
