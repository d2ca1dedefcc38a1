//! Finite ultragraphs and their Leavitt path algebras.
//!
//! * [`model`] — ultragraphs, vertex sets and the lattice `𝒢⁰`.
//! * [`paths`] — paths, cycles up to rotation, exits, connectivity.
//! * [`ideals`] — hereditary and saturated sets, graded simplicity.
//! * [`gf`] — the finite graphs `G_F`, acyclicity, matricial block sizes.
//! * [`algebra`] — exact arithmetic in `L_K(𝒢)` over `ℚ` and the cycle
//!   corner isomorphism `I(v) ≅ M_Λ(K[x, x⁻¹])`.
//! * [`classify`] — regularity, purely infinite simplicity, trichotomy.
//! * [`dsl`] — the `.ug` format, expressions, JSON reports.
//!
//! ```
//! use ultra_lpa_core::{classify::{trichotomy, Caps}, dsl::parse_ultragraph};
//!
//! let ug = parse_ultragraph("ultragraph T\nvertices u v\nedge e : u -> { v }\nedge c : v -> { v }").unwrap();
//! let class = trichotomy(&ug, Caps::default()).unwrap();
//! assert_eq!(class.class_name(), "matrix_laurent");
//! ```

pub mod algebra;
pub mod classify;
pub mod dsl;
pub mod error;
pub mod fixtures;
pub mod gf;
pub mod ideals;
pub mod model;
pub mod paths;
pub mod random;

pub use algebra::{Element, LaurentMatrix, LaurentPoly, LeavittAlgebra, Monomial, Scalar};
pub use classify::{Caps, Classification, PisCertificates};
pub use error::{Error, Result};
pub use model::{EdgeId, Ultragraph, UltragraphDoc, VertexId, VertexSet};
pub use paths::{CycleClass, Exit, Path};
