//! Random generators, the sweep runner and the worked-example reproduction.

pub mod demo;
pub mod generators;
pub mod sweep;

pub use demo::{demo_paper, DemoReport, DemoRow};
pub use generators::{GeneratorKind, GeneratorSpec};
pub use sweep::{run_sweep, SweepConfig, SweepReport};
