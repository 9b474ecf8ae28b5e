use std::fmt;

use crate::error::{Error, Result};
use crate::perm_core::Permutation;

/// A length-`n` string over the alphabet `{0, ..., d-1}`.
///
/// Strings map to base-`d` integers with position 0 as the most significant
/// digit, so numeric order on indices is lexicographic order on strings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredString {
    symbols: Vec<u8>,
    d: usize,
}

impl ColoredString {
    pub fn new(symbols: Vec<u8>, d: usize) -> Result<Self> {
        if d == 0 || d > 256 {
            return Err(Error::InvalidParameter(format!(
                "alphabet size must be in 1..=256, got {d}"
            )));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s as usize >= d) {
            return Err(Error::SymbolOutOfRange {
                symbol: bad as usize,
                d,
            });
        }
        Ok(ColoredString { symbols, d })
    }

    /// Parses a digit string such as `"0101"`. Symbols above 9 are not supported.
    pub fn parse(text: &str, d: usize) -> Result<Self> {
        let symbols = text
            .chars()
            .map(|c| {
                c.to_digit(10).map(|v| v as u8).ok_or_else(|| {
                    Error::InvalidParameter(format!("non-digit symbol {c:?} in {text:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ColoredString::new(symbols, d)
    }

    pub fn from_index(index: u64, n: usize, d: usize) -> Self {
        let mut symbols = vec![0u8; n];
        let mut rest = index;
        for slot in symbols.iter_mut().rev() {
            *slot = (rest % d as u64) as u8;
            rest /= d as u64;
        }
        debug_assert_eq!(rest, 0, "index out of range for d^n");
        ColoredString { symbols, d }
    }

    pub fn index(&self) -> u64 {
        self.symbols
            .iter()
            .fold(0u64, |acc, &s| acc * self.d as u64 + s as u64)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet(&self) -> usize {
        self.d
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// `σ·x` with `(σ·x)[σ(i)] = x[i]`, equivalently `(σ·x)[i] = x[σ⁻¹(i)]`.
    pub fn permuted(&self, sigma: &Permutation) -> Result<ColoredString> {
        if sigma.degree() != self.len() {
            return Err(Error::DegreeMismatch {
                expected: self.len(),
                found: sigma.degree(),
            });
        }
        let mut symbols = vec![0u8; self.len()];
        for (i, &s) in self.symbols.iter().enumerate() {
            symbols[sigma.apply(i)] = s;
        }
        Ok(ColoredString { symbols, d: self.d })
    }
}

/// Digits without separators when `d <= 10`, otherwise space-separated.
impl fmt::Display for ColoredString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(u8::to_string).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for ColoredString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredString({self}; d={})", self.d)
    }
}

/// Applies `σ` to a base-`d` string index without materializing the string.
pub(crate) fn permute_index(sigma: &Permutation, index: u64, n: usize, d: u64) -> u64 {
    let mut digits = [0u64; 64];
    let mut rest = index;
    for i in (0..n).rev() {
        digits[i] = rest % d;
        rest /= d;
    }
    let mut out = [0u64; 64];
    for (i, &digit) in digits.iter().enumerate().take(n) {
        out[sigma.apply(i)] = digit;
    }
    out[..n].iter().fold(0, |acc, &v| acc * d + v)
}

/// `d^n` if it fits under `limit`.
pub(crate) fn checked_state_count(n: usize, d: usize, limit: u64) -> Result<u64> {
    let too_large = Error::StateSpaceTooLarge { n, d, limit };
    if n > 64 {
        return Err(too_large);
    }
    let count = (d as u64)
        .checked_pow(n as u32)
        .ok_or_else(|| too_large.clone())?;
    if count > limit {
        return Err(too_large);
    }
    Ok(count)
}
