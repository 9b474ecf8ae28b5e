use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::perm_core::{partitions, PermutationGroup};

/// `Z_{S_n}(a_1, ..., a_n)`, summed over partitions `λ ⊢ n` with weight `1/z_λ`.
/// `a[k-1]` is the value substituted for `a_k`.
pub fn cycle_index_symmetric(n: usize, a: &[BigRational]) -> Result<BigRational> {
    if a.len() < n {
        return Err(Error::InvalidParameter(format!(
            "cycle index of S_{n} needs {n} variables, got {}",
            a.len()
        )));
    }
    let mut total = BigRational::zero();
    for lambda in partitions(n) {
        let mut term = BigRational::one();
        for &(len, mult) in lambda.parts() {
            term *= num_traits::pow(a[len - 1].clone(), mult);
        }
        let z = BigInt::from(lambda.centralizer_order());
        total += term / BigRational::from_integer(z);
    }
    Ok(total)
}

/// `Z_G(a_1, ..., a_n) = (1/|G|) Σ_σ Π_k a_k^{c_k(σ)}` by direct summation over
/// the elements of `G`.
pub fn cycle_index_of_group(group: &PermutationGroup, a: &[BigRational]) -> Result<BigRational> {
    let n = group.degree();
    if a.len() < n {
        return Err(Error::InvalidParameter(format!(
            "cycle index of a degree-{n} group needs {n} variables, got {}",
            a.len()
        )));
    }
    let mut total = BigRational::zero();
    for sigma in group.elements() {
        let mut term = BigRational::one();
        for (&len, &count) in &sigma.cycle_decomposition().cycle_counts {
            term *= num_traits::pow(a[len - 1].clone(), count);
        }
        total += term;
    }
    Ok(total / BigRational::from_integer(BigInt::from(group.order())))
}

/// The substitution `a_k = d` for odd `k`, `a_k = d²` for even `k`.
pub fn alternating_substitution(n: usize, d: usize) -> Vec<BigRational> {
    let d = BigInt::from(d);
    (1..=n)
        .map(|k| {
            let v = if k % 2 == 1 { d.clone() } else { &d * &d };
            BigRational::from_integer(v)
        })
        .collect()
}

/// `[x^n] (1−x)^{−d(d+1)/2} (1+x)^{−d(d−1)/2}`, by exact convolution of the two
/// binomial series.
pub fn series_coefficient_nq(n: usize, d: usize) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::InvalidParameter("alphabet size must be >= 1".into()));
    }
    let a = d * (d + 1) / 2;
    let b = d * (d - 1) / 2;
    // [x^k](1−x)^{−a} = C(k+a−1, k); [x^k](1+x)^{−b} = (−1)^k C(k+b−1, k)
    let pole = |k: usize| -> BigInt { generalized_binomial(k, a) };
    let alternating = |k: usize| -> BigInt {
        let c = generalized_binomial(k, b);
        if k.is_multiple_of(2) {
            c
        } else {
            -c
        }
    };
    let coefficient: BigInt = (0..=n).map(|k| pole(n - k) * alternating(k)).sum();
    if coefficient.is_negative() {
        return Err(Error::InvalidParameter(format!(
            "negative series coefficient {coefficient}"
        )));
    }
    Ok(coefficient.magnitude().clone())
}

/// `[x^k] (1−x)^{−e} = C(k+e−1, k)`, with the `e = 0` series equal to 1.
fn generalized_binomial(k: usize, e: usize) -> BigInt {
    if e == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    BigInt::from(binomial(k + e - 1, k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm_core::{make_named_group, GroupKind};

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn s3_at_alternating_two() {
        let z = cycle_index_symmetric(3, &alternating_substitution(3, 2)).unwrap();
        assert_eq!(z, int(6));
    }

    #[test]
    fn all_ones_gives_one() {
        for n in 0..=20 {
            let ones = vec![int(1); n];
            assert_eq!(cycle_index_symmetric(n, &ones).unwrap(), int(1), "n = {n}");
        }
    }

    #[test]
    fn s2_is_half_of_square_plus_a2() {
        for (a1, a2) in [(3, 5), (-2, 7), (0, 1)] {
            let z = cycle_index_symmetric(2, &[int(a1), int(a2)]).unwrap();
            assert_eq!(
                z,
                BigRational::new(BigInt::from(a1 * a1 + a2), BigInt::from(2))
            );
        }
    }

    #[test]
    fn too_few_variables() {
        assert!(cycle_index_symmetric(3, &[int(1), int(1)]).is_err());
    }

    #[test]
    fn partition_sum_matches_element_sum() {
        let a: Vec<BigRational> = (1..=6)
            .map(|k| BigRational::new(BigInt::from(k * k + 1), BigInt::from(k)))
            .collect();
        for n in 1..=6 {
            let sn = make_named_group(GroupKind::Symmetric, n).unwrap();
            assert_eq!(
                cycle_index_symmetric(n, &a).unwrap(),
                cycle_index_of_group(&sn, &a).unwrap()
            );
        }
    }

    #[test]
    fn series_coefficients() {
        assert_eq!(series_coefficient_nq(0, 3).unwrap(), BigUint::one());
        assert_eq!(series_coefficient_nq(3, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(series_coefficient_nq(4, 2).unwrap(), BigUint::from(9u32));
        // d = 1: (1−x)^{−1}, every coefficient is 1
        for n in 0..10 {
            assert_eq!(series_coefficient_nq(n, 1).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigUint::from(20u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }
}
