use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed word at byte {position}: {reason}")]
    Parse { position: usize, reason: String },

    #[error("exponent must be positive")]
    ZeroExponent,

    #[error("letter id {id} is outside an alphabet of size {alphabet_size}")]
    LetterOutOfRange { id: u8, alphabet_size: u8 },

    #[error("alphabet size {0} is not supported (1..=26)")]
    AlphabetSize(usize),

    #[error("the empty word has no run-length encoding")]
    EmptyRle,

    #[error("operation requires a non-empty word")]
    EmptyWord,

    #[error("complement is only defined over a binary alphabet (got {0} letters)")]
    NotBinary(u8),

    #[error("fractional exponent {numerator}/{denominator} is below 1")]
    ExponentBelowOne { numerator: u64, denominator: u64 },

    #[error("denominator must be positive")]
    ZeroDenominator,

    #[error("partition of a length-{partition} word applied to a length-{word} word")]
    LengthMismatch { partition: usize, word: usize },

    #[error("cut positions must be strictly increasing inside (0, {0})")]
    InvalidCuts(usize),

    #[error("word length {length} exceeds the limit {limit} (mask space 2^{mask_bits})")]
    LengthLimit {
        length: usize,
        limit: usize,
        mask_bits: usize,
    },

    #[error("run length {0} is outside the tabulated range 3..=8")]
    RunLengthOutOfRange(usize),
}
