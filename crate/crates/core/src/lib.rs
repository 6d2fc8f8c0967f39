pub mod algebra;
pub mod cacti;
pub mod cobar;
pub mod error;
pub mod hochschild;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod module_algebra;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use report::{AxiomReport, CheckResult};
pub use scalar::{Field, FieldSpec, Fp, Rational};
