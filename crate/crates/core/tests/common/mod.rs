//! Shared fixtures for integration tests.

use std::collections::BTreeMap;

use num_complex::Complex64;
use permchan_core::encoding::StateVector;
use permchan_core::perm_core::ColoredString;

/// Unnormalized encoding states for n = 4, d = 2 as `(μ, α, terms)`, with `μ`
/// the exponent of the eigenphase `i^μ` under one rotation.
pub const GOLDEN_C4: [(usize, usize, &str); 16] = [
    (0, 0, "|0000>"),
    (0, 1, "|0001>+|1000>+|0100>+|0010>"),
    (0, 2, "|0011>+|1001>+|1100>+|0110>"),
    (0, 3, "|0101>+|1010>"),
    (0, 4, "|0111>+|1011>+|1101>+|1110>"),
    (0, 5, "|1111>"),
    (1, 0, "|0001>-i|1000>-|0100>+i|0010>"),
    (1, 1, "|0011>-i|1001>-|1100>+i|0110>"),
    (1, 2, "|0111>-i|1011>-|1101>+i|1110>"),
    (2, 0, "|0001>-|1000>+|0100>-|0010>"),
    (2, 1, "|0011>-|1001>+|1100>-|0110>"),
    (2, 2, "|0101>-|1010>"),
    (2, 3, "|0111>-|1011>+|1101>-|1110>"),
    (3, 0, "|0001>+i|1000>-|0100>-i|0010>"),
    (3, 1, "|0011>+i|1001>-|1100>-i|0110>"),
    (3, 2, "|0111>+i|1011>-|1101>-i|1110>"),
];

/// Parses `|x>` terms with coefficients from {1, −1, i, −i} and normalizes.
pub fn parse_ket_sum(text: &str) -> StateVector {
    let mut amplitudes = BTreeMap::new();
    for term in text.split_inclusive('>') {
        let (coeff, ket) = term.split_once('|').unwrap();
        let bits = ket.trim_end_matches('>');
        let c = match coeff {
            "" | "+" => Complex64::new(1.0, 0.0),
            "-" => Complex64::new(-1.0, 0.0),
            "i" | "+i" => Complex64::i(),
            "-i" => -Complex64::i(),
            other => panic!("unexpected coefficient {other:?}"),
        };
        amplitudes.insert(ColoredString::parse(bits, 2).unwrap().index(), c);
    }
    let n = text
        .split('|')
        .nth(1)
        .unwrap()
        .split('>')
        .next()
        .unwrap()
        .len();
    StateVector::from_amplitudes(n, 2, amplitudes)
        .normalized()
        .unwrap()
}
