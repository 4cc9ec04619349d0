//! SHA-256 content digests, hex encoded. Used for manifest integrity checks
//! and as cassette lookup keys.

use sha2::{Digest, Sha256};

/// Hex-encoded SHA-256 of a byte slice.
pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Incremental digest over labelled fields, so composite cassette keys
/// cannot collide via concatenation ambiguity.
pub struct KeyDigest {
    hasher: Sha256,
}

impl KeyDigest {
    pub fn new() -> Self {
        Self { hasher: Sha256::new() }
    }

    pub fn field(&mut self, label: &str, value: &str) -> &mut Self {
        self.hasher.update(label.as_bytes());
        self.hasher.update([0u8]);
        self.hasher.update(value.len().to_le_bytes());
        self.hasher.update(value.as_bytes());
        self.hasher.update([0u8]);
        self
    }

    pub fn finish(self) -> String {
        hex::encode(self.hasher.finalize())
    }
}

impl Default for KeyDigest {
    fn default() -> Self {
        Self::new()
    }
}
