//! Polyhedral geometry of last passage percolation on finite posets.
//!
//! Weights `ω ≥ 0` on the vertices of a connected poset induce passage
//! times `G(v) = ω(v) + max_{u ⋖ v} G(u)`. This crate describes the cones
//! `C(π)` of weights for which a maximal chain `π` is a longest path (their
//! extreme rays, facets and two-dimensional faces), the simplicial
//! refinement of weight space indexed by linear extensions, and the path
//! probabilities that follow for exponential and uniform weights.
//!
//! Exact computations use [`Rational`]; simulation uses `f64`. Everything
//! numerical is generic over [`Scalar`].
//!
//! ```
//! use lpp_cones::{argmax_path, describe_cone, locate_cell, ExactWeights, Poset};
//! use lpp_cones::scalar::rational;
//!
//! # fn main() -> lpp_cones::Result<()> {
//! let grid = Poset::grid(2, 2)?; // vertices (1,1), (2,1), (1,2), (2,2)
//! let w = ExactWeights::new(vec![rational(1, 1), rational(1, 2), rational(2, 1), rational(1, 1)]);
//!
//! let best = argmax_path(&grid, &w)?;
//! assert_eq!(best.path.vertices(), &[0, 2, 3]);
//! assert_eq!(best.length, rational(4, 1));
//!
//! let cone = describe_cone(&grid, &best.path)?;
//! assert_eq!((cone.extreme_rays.len(), cone.facets.facet_count()), (4, 4));
//!
//! let (cell, lambda) = locate_cell(&grid, &w)?;
//! assert_eq!(lambda.sum(), rational(4, 1));
//! assert_eq!(cell.schutzenberger_path(), &best.path);
//! # Ok(())
//! # }
//! ```

pub mod cone;
pub mod error;
pub mod io;
pub mod limits;
pub mod linalg;
pub mod lpp;
pub mod oracle;
pub mod poset;
pub mod probability;
pub mod random;
pub mod scalar;
pub mod simplicial;
pub mod verify;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use cone::{describe_cone, extreme_rays, facets, inequality_system, ConeDescription};
pub use error::{LppError, Result};
pub use limits::Limits;
pub use lpp::{argmax_path, passage_times, path_length, weights_from_passage_times, ArgmaxPath, PassageTimes, WeightVector};
pub use poset::{Antichain, LinearExtension, Path, Poset, Relation};
pub use scalar::{Rational, Scalar};
pub use simplicial::{cell_from_extension, eu_determinant, locate_cell, LambdaVector, SimplicialCell};

pub type Weights = WeightVector<f64>;
pub type ExactWeights = WeightVector<Rational>;
pub type Times = PassageTimes<f64>;
pub type ExactTimes = PassageTimes<Rational>;
pub type Lambda = LambdaVector<f64>;
pub type ExactLambda = LambdaVector<Rational>;
