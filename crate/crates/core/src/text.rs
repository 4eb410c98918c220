//! Text to integer: concatenated decimal ASCII codes, then the `G_{m,.}` digits.
//!
//! Codes have two or three decimal digits, so the concatenation cannot be
//! split back into characters in general; this direction only.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::mixed_radix::{encode, MixedRadixNumber};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextEncoding {
    /// Decimal codes of the characters, concatenated.
    pub codes: String,
    pub integer: BigUint,
    pub digits: MixedRadixNumber,
}

/// Concatenates the decimal ASCII codes of `text`.
pub fn ascii_code_string(text: &str) -> Result<String> {
    if text.is_empty() {
        return Err(Error::parse(text, "empty text"));
    }
    if let Some(c) = text.chars().find(|c| !c.is_ascii()) {
        return Err(Error::parse(
            c.to_string(),
            "only ASCII characters are accepted",
        ));
    }
    Ok(text.bytes().map(|b| b.to_string()).collect())
}

pub fn encode_text(text: &str, m: usize) -> Result<TextEncoding> {
    let codes = ascii_code_string(text)?;
    let integer: BigUint = codes.parse().expect("decimal code string");
    let digits = encode(&integer, m)?;
    Ok(TextEncoding {
        codes,
        integer,
        digits,
    })
}
