use serde::{Deserialize, Serialize};

/// Lexical class of a [`Token`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    Identifier,
    Keyword,
    StringLiteral,
    CharacterLiteral,
    NumericLiteral,
    Comment,
    Punctuation,
    Whitespace,
    Newline,
}

/// Byte offsets of a token plus the 1-based line/column of its first byte.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: u32,
    pub column: u32,
}

/// One lexical token. `text` is the exact source slice, so concatenating
/// the `text` of all tokens in order reproduces the input byte-for-byte.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub span: Span,
}

impl Token {
    /// Whitespace, newlines and comments carry no structure.
    pub fn is_significant(&self) -> bool {
        !matches!(
            self.kind,
            TokenKind::Whitespace | TokenKind::Newline | TokenKind::Comment
        )
    }

    pub fn is_keyword(&self, word: &str) -> bool {
        self.kind == TokenKind::Keyword && self.text.eq_ignore_ascii_case(word)
    }

    pub fn is_punct(&self, text: &str) -> bool {
        self.kind == TokenKind::Punctuation && self.text == text
    }
}

/// Ada 2012 reserved words.
const KEYWORDS: &[&str] = &[
    "abort", "abs", "abstract", "accept", "access", "aliased", "all", "and", "array", "at",
    "begin", "body", "case", "constant", "declare", "delay", "delta", "digits", "do", "else",
    "elsif", "end", "entry", "exception", "exit", "for", "function", "generic", "goto", "if",
    "in", "interface", "is", "limited", "loop", "mod", "new", "not", "null", "of", "or",
    "others", "out", "overriding", "package", "pragma", "private", "procedure", "protected",
    "raise", "range", "record", "rem", "renames", "requeue", "return", "reverse", "select",
    "separate", "some", "subtype", "synchronized", "tagged", "task", "terminate", "then",
    "type", "until", "use", "when", "while", "with", "xor",
];

fn is_keyword_text(text: &str) -> bool {
    let lower = text.to_ascii_lowercase();
    KEYWORDS.binary_search(&lower.as_str()).is_ok()
}

/// Two-character compound delimiters, tried before single characters.
const COMPOUND: &[&str] = &["=>", "..", "**", ":=", "/=", ">=", "<=", "<<", ">>", "<>"];

/// Concatenation of token texts in order.
pub fn render(tokens: &[Token]) -> String {
    let mut out = String::with_capacity(tokens.iter().map(|t| t.text.len()).sum());
    for t in tokens {
        out.push_str(&t.text);
    }
    out
}

/// Lossless tokenization. Total: unknown characters become punctuation
/// tokens of one character, so any UTF-8 input round-trips exactly.
pub fn tokenize(source: &str) -> Vec<Token> {
    let bytes = source.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0usize;
    let mut line = 1u32;
    let mut column = 1u32;
    // Last significant token, for tick vs character-literal disambiguation.
    let mut prev_sig: Option<(TokenKind, String)> = None;

    while pos < bytes.len() {
        let start = pos;
        let kind = match bytes[pos] {
            b'\n' => {
                pos += 1;
                TokenKind::Newline
            }
            b'\r' => {
                pos += 1;
                if bytes.get(pos) == Some(&b'\n') {
                    pos += 1;
                }
                TokenKind::Newline
            }
            b' ' | b'\t' => {
                while matches!(bytes.get(pos), Some(b' ') | Some(b'\t')) {
                    pos += 1;
                }
                TokenKind::Whitespace
            }
            b'-' if bytes.get(pos + 1) == Some(&b'-') => {
                pos += 2;
                while pos < bytes.len() && bytes[pos] != b'\n' && bytes[pos] != b'\r' {
                    pos += 1;
                }
                TokenKind::Comment
            }
            b'"' => {
                pos += 1;
                loop {
                    match bytes.get(pos) {
                        None | Some(b'\n') | Some(b'\r') => break, // unterminated: stop at EOL
                        Some(b'"') => {
                            if bytes.get(pos + 1) == Some(&b'"') {
                                pos += 2; // doubled quote stays inside the literal
                            } else {
                                pos += 1;
                                break;
                            }
                        }
                        Some(_) => pos += 1,
                    }
                }
                TokenKind::StringLiteral
            }
            b'\'' => {
                // After a name-like token a tick introduces an attribute or
                // qualified expression; otherwise try a character literal.
                let attribute_position = match &prev_sig {
                    Some((TokenKind::Identifier, _))
                    | Some((TokenKind::StringLiteral, _))
                    | Some((TokenKind::CharacterLiteral, _))
                    | Some((TokenKind::NumericLiteral, _)) => true,
                    Some((TokenKind::Keyword, t)) => {
                        matches!(t.to_ascii_lowercase().as_str(), "all" | "access" | "delta" | "digits" | "range")
                    }
                    Some((TokenKind::Punctuation, t)) => t == ")" || t == "]",
                    _ => false,
                };
                let mut kind = TokenKind::Punctuation;
                if !attribute_position {
                    if let Some(c) = source[pos + 1..].chars().next() {
                        let close = pos + 1 + c.len_utf8();
                        if bytes.get(close) == Some(&b'\'') {
                            pos = close + 1;
                            kind = TokenKind::CharacterLiteral;
                        }
                    }
                }
                if kind == TokenKind::Punctuation {
                    pos += 1;
                }
                kind
            }
            b'0'..=b'9' => {
                while matches!(bytes.get(pos), Some(c) if c.is_ascii_digit() || *c == b'_') {
                    pos += 1;
                }
                if bytes.get(pos) == Some(&b'#') {
                    // based literal: 16#FF.8#E+2
                    pos += 1;
                    while matches!(bytes.get(pos), Some(c) if c.is_ascii_alphanumeric() || *c == b'_' || *c == b'.')
                    {
                        pos += 1;
                    }
                    if bytes.get(pos) == Some(&b'#') {
                        pos += 1;
                    }
                } else if bytes.get(pos) == Some(&b'.')
                    && matches!(bytes.get(pos + 1), Some(c) if c.is_ascii_digit())
                {
                    pos += 1;
                    while matches!(bytes.get(pos), Some(c) if c.is_ascii_digit() || *c == b'_') {
                        pos += 1;
                    }
                }
                if matches!(bytes.get(pos), Some(b'e') | Some(b'E')) {
                    let mut probe = pos + 1;
                    if matches!(bytes.get(probe), Some(b'+') | Some(b'-')) {
                        probe += 1;
                    }
                    if matches!(bytes.get(probe), Some(c) if c.is_ascii_digit()) {
                        pos = probe;
                        while matches!(bytes.get(pos), Some(c) if c.is_ascii_digit() || *c == b'_') {
                            pos += 1;
                        }
                    }
                }
                TokenKind::NumericLiteral
            }
            _ => {
                let c = source[pos..].chars().next().expect("pos is a char boundary");
                if c.is_alphabetic() {
                    for ch in source[pos..].chars() {
                        if ch.is_alphanumeric() || ch == '_' {
                            pos += ch.len_utf8();
                        } else {
                            break;
                        }
                    }
                    if is_keyword_text(&source[start..pos]) {
                        TokenKind::Keyword
                    } else {
                        TokenKind::Identifier
                    }
                } else if c.is_ascii()
                    && matches!(bytes.get(pos + 1), Some(b) if b.is_ascii())
                    && COMPOUND.contains(&&source[pos..pos + 2])
                {
                    pos += 2;
                    TokenKind::Punctuation
                } else {
                    pos += c.len_utf8();
                    TokenKind::Punctuation
                }
            }
        };

        let text = &source[start..pos];
        let span = Span { start, end: pos, line, column };
        advance_position(text, &mut line, &mut column);
        let token = Token { kind, text: text.to_string(), span };
        if token.is_significant() {
            prev_sig = Some((token.kind, token.text.clone()));
        }
        tokens.push(token);
    }
    tokens
}

fn advance_position(text: &str, line: &mut u32, column: &mut u32) {
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\n' => {
                *line += 1;
                *column = 1;
            }
            '\r' => {
                if chars.peek() == Some(&'\n') {
                    chars.next();
                }
                *line += 1;
                *column = 1;
            }
            _ => *column += 1,
        }
    }
}
