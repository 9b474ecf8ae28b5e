use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::counting::formulas::count_named;
use crate::error::{Error, Result};
use crate::perm_core::GroupKind;

/// The leading-order large-`n` laws for the three counts under each named group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AsymptoticLaw {
    CyclicNc,
    CyclicNa,
    DihedralNc,
    DihedralNq,
    DihedralNa,
    SymmetricNc,
    SymmetricNq,
    SymmetricNa,
}

impl AsymptoticLaw {
    pub const ALL: [AsymptoticLaw; 8] = [
        AsymptoticLaw::CyclicNc,
        AsymptoticLaw::CyclicNa,
        AsymptoticLaw::DihedralNc,
        AsymptoticLaw::DihedralNq,
        AsymptoticLaw::DihedralNa,
        AsymptoticLaw::SymmetricNc,
        AsymptoticLaw::SymmetricNq,
        AsymptoticLaw::SymmetricNa,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AsymptoticLaw::CyclicNc => "cyclic_Nc",
            AsymptoticLaw::CyclicNa => "cyclic_Na",
            AsymptoticLaw::DihedralNc => "dihedral_Nc",
            AsymptoticLaw::DihedralNq => "dihedral_Nq",
            AsymptoticLaw::DihedralNa => "dihedral_Na",
            AsymptoticLaw::SymmetricNc => "symmetric_Nc",
            AsymptoticLaw::SymmetricNq => "symmetric_Nq",
            AsymptoticLaw::SymmetricNa => "symmetric_Na",
        }
    }

    pub fn kind(self) -> GroupKind {
        match self {
            AsymptoticLaw::CyclicNc | AsymptoticLaw::CyclicNa => GroupKind::Cyclic,
            AsymptoticLaw::DihedralNc | AsymptoticLaw::DihedralNq | AsymptoticLaw::DihedralNa => {
                GroupKind::Dihedral
            }
            _ => GroupKind::Symmetric,
        }
    }
}

impl fmt::Display for AsymptoticLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AsymptoticLaw {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AsymptoticLaw::ALL
            .into_iter()
            .find(|law| law.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "asymptotic law",
                name: s.to_string(),
            })
    }
}

/// Leading asymptotic value, kept exact: every tabulated law is rational in `n`, `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticEstimate {
    pub law: AsymptoticLaw,
    pub leading_value: BigRational,
}

impl AsymptoticEstimate {
    pub fn to_f64(&self) -> f64 {
        self.leading_value.to_f64().unwrap_or(f64::NAN)
    }
}

fn rational(numer: BigUint, denom: BigUint) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn asymptotic_estimate(law: AsymptoticLaw, n: usize, d: usize) -> Result<AsymptoticEstimate> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter("n and d must be >= 1".into()));
    }
    let dn = BigUint::from(d).pow(n as u32);
    let nn = BigUint::from(n);
    let leading_value = match law {
        AsymptoticLaw::CyclicNc => rational(dn, nn),
        AsymptoticLaw::CyclicNa => rational(&dn * &dn, nn),
        AsymptoticLaw::DihedralNc => rational(dn, nn * 2u32),
        AsymptoticLaw::DihedralNq => rational(dn, BigUint::from(2u32)),
        AsymptoticLaw::DihedralNa => rational(&dn * &dn, nn * 2u32),
        AsymptoticLaw::SymmetricNc => rational(nn.pow((d - 1) as u32), factorial(d - 1)),
        AsymptoticLaw::SymmetricNq => {
            let a = d * (d + 1) / 2;
            let b = d * (d - 1) / 2;
            rational(
                nn.pow((a - 1) as u32),
                BigUint::from(2u32).pow(b as u32) * factorial(a - 1),
            )
        }
        AsymptoticLaw::SymmetricNa => rational(nn.pow((d * d - 1) as u32), factorial(d * d - 1)),
    };
    debug_assert!(leading_value > BigRational::zero());
    Ok(AsymptoticEstimate { law, leading_value })
}

/// The exact count the law approximates.
pub fn exact_count(law: AsymptoticLaw, n: usize, d: usize) -> Result<BigUint> {
    let report = count_named(law.kind(), n, d)?;
    Ok(match law {
        AsymptoticLaw::CyclicNc | AsymptoticLaw::DihedralNc | AsymptoticLaw::SymmetricNc => {
            report.classical.value
        }
        AsymptoticLaw::DihedralNq | AsymptoticLaw::SymmetricNq => {
            report
                .quantum
                .expect("named groups always define N_q")
                .value
        }
        AsymptoticLaw::CyclicNa | AsymptoticLaw::DihedralNa | AsymptoticLaw::SymmetricNa => {
            report.ancilla.value
        }
    })
}

/// `exact / estimate`, exactly.
pub fn exact_to_asymptotic_ratio(law: AsymptoticLaw, n: usize, d: usize) -> Result<BigRational> {
    let exact = BigRational::from_integer(BigInt::from(exact_count(law, n, d)?));
    Ok(exact / asymptotic_estimate(law, n, d)?.leading_value)
}
