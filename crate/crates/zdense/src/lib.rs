//! Discrete Zariski-dense subgroups of linear-algebraic groups over
//! local fields: a decision engine for the classification results, a
//! number-field construction emitting explicit generators, numerical and
//! combinatorial verification, and an exact-arithmetic gallery for the
//! positive-characteristic examples.

pub mod bigdec;
pub mod cli;
pub mod decision;
pub mod exact;
pub mod group_spec;
pub mod laurent_witt;
pub mod number_construct;
pub mod verify;

/// Binary entry point: parse argv and dispatch.
pub fn run() -> i32 {
    cli::run(std::env::args_os())
}
