//! Fredricksen–Kessler–Maiorana generation of necklace representatives.

use crate::counting::count_cyclic;
use crate::error::{Error, Result};
use crate::perm_core::{ColoredString, DEFAULT_STATE_LIMIT};

/// Lexicographically minimal rotation representatives of length-`n` strings over
/// `d` symbols, in increasing order.
///
/// Walks prenecklaces: increment the last non-maximal symbol at position `i`,
/// extend periodically with period `i + 1`, and emit when the period divides `n`.
#[derive(Debug, Clone)]
pub struct Necklaces {
    word: Vec<u8>,
    d: u8,
    started: bool,
    done: bool,
}

impl Necklaces {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n == 0 || d == 0 || d > 256 {
            return Err(Error::InvalidParameter(format!(
                "need n >= 1 and 1 <= d <= 256, got n = {n}, d = {d}"
            )));
        }
        Ok(Necklaces {
            word: vec![0; n],
            d: (d - 1) as u8,
            started: false,
            done: false,
        })
    }
}

impl Iterator for Necklaces {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.word.clone());
        }
        let n = self.word.len();
        loop {
            let Some(i) = self.word.iter().rposition(|&s| s < self.d) else {
                self.done = true;
                return None;
            };
            self.word[i] += 1;
            let period = i + 1;
            for j in period..n {
                self.word[j] = self.word[j - period];
            }
            if n.is_multiple_of(period) {
                return Some(self.word.clone());
            }
        }
    }
}

pub fn fkm_representatives(n: usize, d: usize) -> Result<Vec<ColoredString>> {
    fkm_representatives_bounded(n, d, DEFAULT_STATE_LIMIT)
}

/// As [`fkm_representatives`], failing if the number of necklaces exceeds `limit`.
pub fn fkm_representatives_bounded(n: usize, d: usize, limit: u64) -> Result<Vec<ColoredString>> {
    let count = count_cyclic(n, d)?.classical.value;
    if count > limit.into() {
        return Err(Error::StateSpaceTooLarge { n, d, limit });
    }
    Necklaces::new(n, d)?
        .map(|word| ColoredString::new(word, d))
        .collect()
}
