//! Core library for a SPARK 2014 annotation-synthesis benchmark harness.
//!
//! The pipeline mutates verified SPARK projects by deleting annotation
//! pragmas, asks a language model to regenerate them, checks that candidate
//! files differ from the input only by legal annotation insertions, and runs
//! GNATprove (live or replayed from a cassette) to decide whether the
//! regenerated annotations complete the proof again.

pub mod ada_lex;
pub mod benchgen;
pub mod digest;
pub mod prover;
