//! Finite families of fuzzy sets analysed in Gödel logic.
//!
//! The crate is organised bottom-up:
//!
//! - [`truth`] and [`formula`]: exact truth values, the formula AST, its
//!   parser, printer and Gödel evaluation.
//! - [`class`] and [`forest`]: assignment classes, the forest they form under
//!   the collapse order, and the Gödel algebra of its subforests.
//! - [`semantics`]: the subforest `F_α` of a formula and tautology checking in
//!   infinite- and finite-valued Gödel logic.
//! - [`partition`]: exact piecewise-linear fuzzy sets and the classes a family
//!   of them realizes.
//! - [`synthesis`], [`analysis`] and [`counting`]: chain normal forms,
//!   axiomatization, the three characterisation theorems, partition synthesis
//!   and the leaf-counting formulas.
//! - [`io`]: JSON and DOT formats shared by the CLI and the browser demo.

pub mod analysis;
pub mod class;
pub mod counting;
mod error;
pub mod forest;
pub mod formula;
pub mod io;
mod parser;
pub mod partition;
pub mod semantics;
pub mod synthesis;
pub mod truth;

pub use analysis::{analyze, AnalysisReport, TheoremVerdicts};
pub use class::AssignmentClass;
pub use error::{Error, Result};
pub use forest::{Forest, Subforest, MAX_FOREST_VARS};
pub use formula::Formula;
pub use parser::parse_formula;
pub use partition::{Partition, PiecewiseLinearFuzzySet};
pub use semantics::Logic;
pub use truth::{Assignment, Rational, TruthValue};
