//! Deterministic pointer-trace replay over the demo scene catalog.

mod catalog;
mod fuzz;
mod run;
mod trace;

pub use catalog::{build as build_scene, keypad, SCENES};
pub use fuzz::{fuzz, fuzz_scene, FuzzReport, RIGIDITY_TOLERANCE};
pub use run::{run_on, run_trace, AssertionOutcome, Report, RunError};
pub use trace::{format_trace, parse_trace, Field, TraceError, TraceLine};
