//! Scenario parsing, execution, and deterministic emitters behind the
//! `minkroll` binary, exposed as a library so the pieces are testable.

pub mod emit;
pub mod run;
pub mod scenario;
