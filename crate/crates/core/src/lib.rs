//! Interval-posets of the Tamari lattice, the statistic-exchanging bijection
//! `beta`, flows on ordered forests, and exhaustive checks of the related
//! enumerative identities.

pub mod bijection;
pub mod catalan;
pub mod dot;
pub mod flows;
pub mod format;
pub mod interval;
pub mod poly;
pub mod verify;

pub use bijection::{beta, beta_inverse, DecompError, IrTriple, LcTriple};
pub use catalan::{BinaryTree, DyckPath, PlanarForest};
pub use flows::{Flow, FlowError, FlowStats};
pub use format::{parse_object, render_object, FormatError, Kind, Object, ParseError};
pub use interval::{IntervalPoset, IntervalStats, PosetError};
pub use poly::{TriPoly, UniPoly};
