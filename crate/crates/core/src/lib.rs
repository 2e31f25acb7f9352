//! Friezes of type `Λ_4` and `Λ_6` built from polygon dissections, their
//! associated triangulations and Conway–Coxeter friezes, all in exact
//! arithmetic over `Q(√2)` and `Q(√3)`.
//!
//! The odd rows of a `Λ_p` frieze coincide with the Conway–Coxeter frieze of
//! the associated triangulation; [`verify`] checks that claim, the vertex
//! incidence identity behind it and the even-row scaling, one dissection at
//! a time or exhaustively over all p-angulations up to a size bound.
//!
//! ```
//! use lambda_friezes::{bijection, frieze, polygon::Dissection};
//!
//! let d = Dissection::new(10, [(1, 4), (4, 9), (5, 8)]).unwrap();
//! let lambda = frieze::lambda_frieze(&d, 4).unwrap();
//! let cc = frieze::cc_frieze(&bijection::associated_triangulation_p4(&d).unwrap()).unwrap();
//! assert_eq!(lambda.width(), 7);
//! assert!(lambda_friezes::verify::odd_row_mismatch(&lambda, &cc).is_none());
//! ```

pub mod bijection;
#[cfg(feature = "cli")]
pub mod cli;
pub mod exact;
pub mod frieze;
pub mod polygon;
pub mod verify;

pub use bijection::{NoncrossingTree, Triangulation};
pub use exact::{QuadNum, Radicand};
pub use frieze::Frieze;
pub use polygon::{Dissection, Face};
