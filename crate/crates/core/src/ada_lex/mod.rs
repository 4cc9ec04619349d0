//! Lossless tokenization and structural scanning of SPARK/Ada sources.
//!
//! The scanner is lexical, not grammatical: it recognizes only what the
//! removal schemata need — `pragma` statements, `loop` / `end loop` nesting,
//! comments and string/character literals (so no pragma is ever detected
//! inside them). Tokenization is total and round-trips byte-for-byte:
//! `render(tokenize(s)) == s` for any input.

mod removal;
mod scan;
mod token;

pub use removal::{remove_sites, restore, Deletion, Mutation};
pub use scan::{scan_structure, ByteRange, LoopRegion, PragmaKind, PragmaSite, StructureMap};
pub use token::{render, tokenize, Span, Token, TokenKind};

use thiserror::Error;

/// Errors from structural scanning and site removal.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScanError {
    /// A `loop` without `end loop;` or an `end loop` without an open loop.
    /// The file is outside the supported subset.
    #[error("unbalanced loop structure near line {line}")]
    UnbalancedLoop { line: u32 },

    /// A `pragma` whose argument list never closes or that has no name.
    #[error("malformed pragma near line {line}")]
    MalformedPragma { line: u32 },

    /// The sites handed to `remove_sites` were scanned from a different
    /// version of the source (content digest mismatch).
    #[error("pragma sites do not match this source (stale scan)")]
    StaleSites,
}
