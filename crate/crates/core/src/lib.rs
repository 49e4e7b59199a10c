pub mod annular;
mod assignment;
pub mod braid;
pub mod burau;
mod compact;
pub mod dynnikov;
pub mod error;
mod json;
pub mod laurent;
pub mod linalg;
pub mod loops;
pub mod props;
pub mod render;
pub mod spectra;
pub mod trajectory;

pub use annular::AnnularBraid;
pub use braid::Braid;
pub use dynnikov::{act, CycleMode, CycleResult, LinearAction};
pub use error::{Error, Result};
pub use loops::{IntersectionNumbers, Loop, LoopBatch};
pub use trajectory::{ClosureMethod, DataBraid, LoopNorm, TrajectorySet};
