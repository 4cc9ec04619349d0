use serde::{Deserialize, Serialize};

use super::scan::{ByteRange, PragmaSite, StructureMap};
use super::ScanError;
use crate::digest::sha256_hex;

/// One contiguous byte range deleted from the original source, with the
/// deleted text so the mutation can be spliced back exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deletion {
    /// Range in the *original* source.
    pub range: ByteRange,
    pub text: String,
}

/// Result of [`remove_sites`]: the mutated text plus the exact deletions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mutation {
    pub text: String,
    pub deletions: Vec<Deletion>,
}

/// Delete the given pragma sites from `source`.
///
/// Each site's span is deleted; when the deletion leaves a line holding
/// only whitespace, the whole line goes (so mutated files look hand-edited
/// rather than leaving blank gaps). All other bytes are untouched.
///
/// The sites must come from a [`StructureMap`] scanned from this exact
/// source; anything else is [`ScanError::StaleSites`].
pub fn remove_sites(
    source: &str,
    map: &StructureMap,
    sites: &[PragmaSite],
) -> Result<Mutation, ScanError> {
    if sha256_hex(source.as_bytes()) != map.source_digest {
        return Err(ScanError::StaleSites);
    }
    for site in sites {
        if !map.sites.contains(site) {
            return Err(ScanError::StaleSites);
        }
    }

    let mut spans: Vec<ByteRange> = sites.iter().map(|s| s.span).collect();
    spans.sort();
    spans.dedup();

    // Group spans whose surrounding line windows touch, so several
    // deletions on one line are judged together.
    struct Group {
        window_start: usize,
        content_end: usize,
        delete_end: usize,
        spans: Vec<ByteRange>,
    }
    let mut groups: Vec<Group> = Vec::new();
    for span in spans {
        let line_start = source[..span.start].rfind('\n').map(|i| i + 1).unwrap_or(0);
        let (content_end, delete_end) = match source[span.end..].find('\n') {
            Some(i) => (span.end + i, span.end + i + 1),
            None => (source.len(), source.len()),
        };
        if let Some(g) = groups.last_mut() {
            if line_start <= g.content_end {
                g.content_end = g.content_end.max(content_end);
                g.delete_end = g.delete_end.max(delete_end);
                g.spans.push(span);
                continue;
            }
        }
        groups.push(Group { window_start: line_start, content_end, delete_end, spans: vec![span] });
    }

    let is_blank = |s: &str| s.bytes().all(|b| matches!(b, b' ' | b'\t' | b'\r'));

    let mut ranges: Vec<ByteRange> = Vec::new();
    for g in &groups {
        let mut remnant_blank = true;
        let mut cursor = g.window_start;
        for span in &g.spans {
            if !is_blank(&source[cursor..span.start]) {
                remnant_blank = false;
            }
            cursor = span.end;
        }
        if !is_blank(&source[cursor..g.content_end]) {
            remnant_blank = false;
        }
        if remnant_blank {
            ranges.push(ByteRange { start: g.window_start, end: g.delete_end });
        } else {
            ranges.extend(g.spans.iter().copied());
        }
    }

    let mut text = String::with_capacity(source.len());
    let mut deletions = Vec::with_capacity(ranges.len());
    let mut cursor = 0usize;
    for range in ranges {
        text.push_str(&source[cursor..range.start]);
        deletions.push(Deletion { range, text: source[range.start..range.end].to_string() });
        cursor = range.end;
    }
    text.push_str(&source[cursor..]);

    Ok(Mutation { text, deletions })
}

/// Splice deleted ranges back into a mutated text, reconstructing the
/// original byte-for-byte. Inverse of [`remove_sites`].
pub fn restore(mutated: &str, deletions: &[Deletion]) -> String {
    let mut out = String::with_capacity(mutated.len() + deletions.iter().map(|d| d.text.len()).sum::<usize>());
    let mut removed = 0usize;
    let mut cursor = 0usize;
    for d in deletions {
        let pos = d.range.start - removed;
        out.push_str(&mutated[cursor..pos]);
        out.push_str(&d.text);
        removed += d.range.len();
        cursor = pos;
    }
    out.push_str(&mutated[cursor..]);
    out
}
