//! Planarity of pentanomials `f(x) = E x^2 + A x^{q+1} + B x^{q^2+1} + C x^{2q} + D x^{2q^2}`
//! over `F_{q^3}` with coefficients in `F_q`.
//!
//! The crate builds the tower `F_p ⊂ F_q ⊂ F_{q^3}`, decides planarity three
//! independent ways, and constructs and verifies the known planar families.

pub mod cli;
pub mod error;
pub mod families;
pub mod field;
pub mod linearized;
pub mod planarity;
pub mod report;

pub use error::{Error, Result};
pub use families::{FactorTriple, Family, SystemParams};
pub use field::{Element, FieldTower, Fq, Fq3, Level, MidField, Moduli, TopField};
pub use linearized::{DicksonMatrix, QPolynomial};
pub use planarity::{check_planarity, is_planar, Method, Pentanomial, Verdict};
