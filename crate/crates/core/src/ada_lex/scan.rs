use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::token::{tokenize, Token, TokenKind};
use super::ScanError;
use crate::digest::sha256_hex;

/// Annotation pragma classification. Anything that is not one of the three
/// schema targets (including `Assume`, `Assert_And_Cut`, `SPARK_Mode`, ...)
/// is `Other` and never removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PragmaKind {
    LoopInvariant,
    LoopVariant,
    Assert,
    Other,
}

/// Half-open byte range `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ByteRange {
    pub start: usize,
    pub end: usize,
}

impl ByteRange {
    pub fn contains(&self, other: &ByteRange) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }
}

/// A located pragma statement: the span runs from the `pragma` keyword to
/// its statement terminator, parentheses balanced in between.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PragmaSite {
    pub kind: PragmaKind,
    pub span: ByteRange,
    /// Indices into [`StructureMap::loops`] of every enclosing loop,
    /// outermost first. Empty when the site is outside any loop.
    pub loop_path: Vec<usize>,
    /// 0-based position among same-kind sites in the innermost enclosing
    /// loop (or at file scope when `loop_path` is empty).
    pub ordinal_in_loop: usize,
}

impl PragmaSite {
    /// Index of the innermost enclosing loop, if any.
    pub fn innermost_loop(&self) -> Option<usize> {
        self.loop_path.last().copied()
    }
}

/// One `loop ... end loop;` region. The span starts at the `for`/`while`
/// header when there is one, else at the `loop` keyword itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopRegion {
    pub index: usize,
    pub span: ByteRange,
    pub depth: usize,
    /// `Loop_Invariant` sites directly inside this loop (not in nested loops).
    pub invariant_count: usize,
}

/// Everything the removal schemata need to know about one source file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureMap {
    pub sites: Vec<PragmaSite>,
    pub loops: Vec<LoopRegion>,
    /// SHA-256 of the scanned source, so stale site lists are rejected.
    pub source_digest: String,
}

impl StructureMap {
    pub fn sites_of_kind(&self, kind: PragmaKind) -> impl Iterator<Item = &PragmaSite> {
        self.sites.iter().filter(move |s| s.kind == kind)
    }

    /// `Loop_Invariant` sites whose innermost enclosing loop is `loop_index`,
    /// in document order.
    pub fn invariants_directly_in(&self, loop_index: usize) -> Vec<&PragmaSite> {
        self.sites
            .iter()
            .filter(|s| s.kind == PragmaKind::LoopInvariant && s.innermost_loop() == Some(loop_index))
            .collect()
    }
}

/// Boundary keywords for the backward scan that finds a loop header start.
/// Anything that can immediately precede a statement.
const HEADER_BOUNDARY_KEYWORDS: &[&str] = &[
    "begin", "declare", "do", "else", "exception", "is", "loop", "record", "select", "then",
];

/// Scan a source file for pragma sites and loop regions.
///
/// Every `pragma` keyword outside comments and string literals yields
/// exactly one site; its kind comes from the identifier that follows
/// (case-insensitive). Loops are enumerated in document order of their
/// headers.
pub fn scan_structure(source: &str) -> Result<StructureMap, ScanError> {
    let tokens = tokenize(source);
    let sig: Vec<usize> = tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_significant())
        .map(|(i, _)| i)
        .collect();

    let mut loops: Vec<LoopRegion> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    let mut sites: Vec<PragmaSite> = Vec::new();

    let mut s = 0usize;
    while s < sig.len() {
        let tok = &tokens[sig[s]];
        if tok.is_keyword("pragma") {
            let (site, next) = scan_pragma(&tokens, &sig, s, &open)?;
            sites.push(site);
            s = next;
            continue;
        }
        if tok.is_keyword("loop") {
            let after_end = s > 0 && tokens[sig[s - 1]].is_keyword("end");
            if after_end {
                let Some(region) = open.pop() else {
                    return Err(ScanError::UnbalancedLoop { line: tok.span.line });
                };
                // optional loop name, then the statement terminator
                let mut t = s + 1;
                if t < sig.len() && tokens[sig[t]].kind == TokenKind::Identifier {
                    t += 1;
                }
                if t >= sig.len() || !tokens[sig[t]].is_punct(";") {
                    return Err(ScanError::UnbalancedLoop { line: tok.span.line });
                }
                loops[region].span.end = tokens[sig[t]].span.end;
                s = t + 1;
                continue;
            }
            let start = header_start(&tokens, &sig, s);
            let index = loops.len();
            loops.push(LoopRegion {
                index,
                span: ByteRange { start, end: 0 },
                depth: open.len(),
                invariant_count: 0,
            });
            open.push(index);
        }
        s += 1;
    }

    if let Some(&region) = open.last() {
        return Err(ScanError::UnbalancedLoop {
            line: line_of_offset(source, loops[region].span.start),
        });
    }

    assign_ordinals(&mut sites, &mut loops);

    Ok(StructureMap { sites, loops, source_digest: sha256_hex(source.as_bytes()) })
}

/// Walk backward from the `loop` keyword to the start of its statement;
/// the header begins at the first `for`/`while` in that segment, else at
/// the `loop` keyword itself (a bare loop).
fn header_start(tokens: &[Token], sig: &[usize], loop_s: usize) -> usize {
    let mut b = loop_s;
    while b > 0 {
        let t = &tokens[sig[b - 1]];
        let boundary = t.is_punct(";")
            || (t.kind == TokenKind::Keyword
                && HEADER_BOUNDARY_KEYWORDS
                    .iter()
                    .any(|k| t.text.eq_ignore_ascii_case(k)));
        if boundary {
            break;
        }
        b -= 1;
    }
    for i in b..loop_s {
        let t = &tokens[sig[i]];
        if t.is_keyword("for") || t.is_keyword("while") {
            return t.span.start;
        }
    }
    tokens[sig[loop_s]].span.start
}

fn scan_pragma(
    tokens: &[Token],
    sig: &[usize],
    pragma_s: usize,
    open: &[usize],
) -> Result<(PragmaSite, usize), ScanError> {
    let pragma_tok = &tokens[sig[pragma_s]];
    let line = pragma_tok.span.line;

    let name_s = pragma_s + 1;
    if name_s >= sig.len() || tokens[sig[name_s]].kind != TokenKind::Identifier {
        return Err(ScanError::MalformedPragma { line });
    }
    let name = &tokens[sig[name_s]].text;
    let kind = if name.eq_ignore_ascii_case("loop_invariant") {
        PragmaKind::LoopInvariant
    } else if name.eq_ignore_ascii_case("loop_variant") {
        PragmaKind::LoopVariant
    } else if name.eq_ignore_ascii_case("assert") {
        PragmaKind::Assert
    } else {
        PragmaKind::Other
    };

    let mut depth = 0i64;
    let mut t = name_s + 1;
    loop {
        if t >= sig.len() {
            return Err(ScanError::MalformedPragma { line });
        }
        let tok = &tokens[sig[t]];
        if tok.kind == TokenKind::Punctuation {
            match tok.text.as_str() {
                "(" => depth += 1,
                ")" => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(ScanError::MalformedPragma { line });
                    }
                }
                ";" if depth == 0 => {
                    let site = PragmaSite {
                        kind,
                        span: ByteRange { start: pragma_tok.span.start, end: tok.span.end },
                        loop_path: open.to_vec(),
                        ordinal_in_loop: 0, // assigned in a later pass
                    };
                    return Ok((site, t + 1));
                }
                _ => {}
            }
        }
        t += 1;
    }
}

fn assign_ordinals(sites: &mut [PragmaSite], loops: &mut [LoopRegion]) {
    let mut counters: HashMap<(Option<usize>, PragmaKind), usize> = HashMap::new();
    for site in sites.iter_mut() {
        let slot = counters.entry((site.innermost_loop(), site.kind)).or_insert(0);
        site.ordinal_in_loop = *slot;
        *slot += 1;
        if site.kind == PragmaKind::LoopInvariant {
            if let Some(l) = site.innermost_loop() {
                loops[l].invariant_count += 1;
            }
        }
    }
}

fn line_of_offset(source: &str, offset: usize) -> u32 {
    source[..offset.min(source.len())].bytes().filter(|b| *b == b'\n').count() as u32 + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOUBLE_NUMBER: &str = include_str!("../../../../fixtures/corpus/double_number/double_number.adb");
    const MATRIX_SUM: &str = include_str!("../../../../fixtures/corpus/matrix_sum/matrix_sum.adb");

    #[test]
    fn double_number_structure() {
        let map = scan_structure(DOUBLE_NUMBER).unwrap();
        assert_eq!(map.loops.len(), 1);
        assert_eq!(map.loops[0].invariant_count, 2);
        assert_eq!(map.loops[0].depth, 0);
        assert!(DOUBLE_NUMBER[map.loops[0].span.start..].starts_with("while"));
        assert!(DOUBLE_NUMBER[..map.loops[0].span.end].ends_with("end loop;"));

        assert_eq!(map.sites.len(), 2);
        for (i, site) in map.sites.iter().enumerate() {
            assert_eq!(site.kind, PragmaKind::LoopInvariant);
            assert_eq!(site.loop_path, vec![0]);
            assert_eq!(site.ordinal_in_loop, i);
        }
        let first = &map.sites[0];
        assert_eq!(
            &DOUBLE_NUMBER[first.span.start..first.span.end],
            "pragma Loop_Invariant (Result = Count * 2);"
        );
        let second = &map.sites[1];
        assert_eq!(
            &DOUBLE_NUMBER[second.span.start..second.span.end],
            "pragma Loop_Invariant (Count < X);"
        );
    }

    #[test]
    fn commented_pragma_yields_nothing() {
        let map = scan_structure("-- pragma Assert (X);\n").unwrap();
        assert!(map.sites.is_empty());
        assert!(map.loops.is_empty());
    }

    #[test]
    fn string_pragma_yields_nothing() {
        let map = scan_structure("S : constant String := \"pragma Assert (X);\";\n").unwrap();
        assert!(map.sites.is_empty());
    }

    #[test]
    fn nested_loops_have_nested_paths() {
        let map = scan_structure(MATRIX_SUM).unwrap();
        assert_eq!(map.loops.len(), 2);
        assert_eq!(map.loops[0].depth, 0);
        assert_eq!(map.loops[1].depth, 1);
        assert_eq!(map.loops[0].invariant_count, 1);
        assert_eq!(map.loops[1].invariant_count, 2);
        assert!(map.loops[0].span.contains(&map.loops[1].span));

        // kinds in document order
        let kinds: Vec<_> = map.sites.iter().map(|s| s.kind).collect();
        assert_eq!(
            kinds,
            vec![
                PragmaKind::LoopInvariant,
                PragmaKind::LoopInvariant,
                PragmaKind::LoopInvariant,
                PragmaKind::LoopVariant,
                PragmaKind::Assert,
            ]
        );
        assert_eq!(map.sites[0].loop_path, vec![0]);
        assert_eq!(map.sites[1].loop_path, vec![0, 1]);
        assert_eq!(map.sites[2].loop_path, vec![0, 1]);
        assert_eq!(map.sites[3].loop_path, vec![0, 1]);
        assert_eq!(map.sites[4].loop_path, Vec::<usize>::new());
        assert_eq!(map.sites[1].ordinal_in_loop, 0);
        assert_eq!(map.sites[2].ordinal_in_loop, 1);
        assert_eq!(map.sites[3].ordinal_in_loop, 0);
    }

    #[test]
    fn multi_line_pragma_span_is_balanced() {
        let map = scan_structure(MATRIX_SUM).unwrap();
        let text = &MATRIX_SUM[map.sites[1].span.start..map.sites[1].span.end];
        assert!(text.starts_with("pragma Loop_Invariant"));
        assert!(text.ends_with(";"));
        assert_eq!(text.lines().count(), 3);
    }

    #[test]
    fn for_loop_header_starts_at_for() {
        let src = "begin\n   for I in 1 .. 10 loop\n      null;\n   end loop;\nend;\n";
        let map = scan_structure(src).unwrap();
        assert_eq!(map.loops.len(), 1);
        assert!(src[map.loops[0].span.start..].starts_with("for I"));
    }

    #[test]
    fn named_loop_header() {
        let src = "begin\n   Search : while X loop\n      null;\n   end loop Search;\nend;\n";
        let map = scan_structure(src).unwrap();
        assert_eq!(map.loops.len(), 1);
        assert!(src[map.loops[0].span.start..].starts_with("while X"));
        assert!(src[..map.loops[0].span.end].ends_with("end loop Search;"));
    }

    #[test]
    fn bare_loop() {
        let src = "begin\n   loop\n      exit;\n   end loop;\nend;\n";
        let map = scan_structure(src).unwrap();
        assert!(src[map.loops[0].span.start..].starts_with("loop"));
    }

    #[test]
    fn unbalanced_loops_are_rejected() {
        assert!(matches!(
            scan_structure("begin\n   while X loop\n      null;\nend;\n"),
            Err(ScanError::UnbalancedLoop { .. })
        ));
        assert!(matches!(
            scan_structure("begin\n   end loop;\nend;\n"),
            Err(ScanError::UnbalancedLoop { .. })
        ));
    }

    #[test]
    fn malformed_pragmas_are_rejected() {
        assert!(matches!(
            scan_structure("pragma Assert (X;\n"),
            Err(ScanError::MalformedPragma { .. })
        ));
        assert!(matches!(
            scan_structure("pragma ;\n"),
            Err(ScanError::MalformedPragma { .. })
        ));
        assert!(matches!(
            scan_structure("pragma Assert (X))\n;"),
            Err(ScanError::MalformedPragma { .. })
        ));
    }

    #[test]
    fn pragma_with_nested_parens_and_quantifier() {
        let src = "pragma Loop_Invariant (for all J in 1 .. I => (A (J) = 0));\n";
        let map = scan_structure(src).unwrap();
        assert_eq!(map.sites.len(), 1);
        assert_eq!(map.sites[0].kind, PragmaKind::LoopInvariant);
        assert_eq!(map.sites[0].span.end, src.trim_end().len());
        // the quantifier keyword inside the argument is not a loop header
        assert!(map.loops.is_empty());
    }

    #[test]
    fn assume_classifies_as_other() {
        let map = scan_structure("pragma Assume (X > 0);\npragma Assert_And_Cut (Y);\n").unwrap();
        assert_eq!(map.sites.len(), 2);
        assert!(map.sites.iter().all(|s| s.kind == PragmaKind::Other));
    }
}
