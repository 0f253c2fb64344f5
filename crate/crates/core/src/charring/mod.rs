//! Character rings.
//!
//! * [`SchurVector`] — one alphabet, Littlewood-Richardson product.
//! * [`PairVector`] — two alphabets, free product (no contractions), with
//!   Adams operations and exterior/symmetric powers.
//! * [`StableCharacter`] — the contraction-aware ring modeling tensor
//!   products of algebraic `GL(n,Z)`-irreducibles.
//! * [`LaurentCharacter`] — the finite-rank oracle every stable claim is
//!   checked against.

mod laurent;
mod pair;
mod schur;
mod stable;

pub use laurent::{free_eval, irrep_character, LaurentCharacter};
pub use pair::PairVector;
pub use schur::SchurVector;
pub use stable::{product_at, stable_product_basis, StableCharacter};

use crate::error::Error;
use crate::hilbert::HilbertSeries;
use crate::Result;

use pair::{lambda_powers, PowerKind};

/// A degree-truncated graded character with [`PairVector`] coefficients.
///
/// Degree 0 is always the unit. Used for the graded-symmetric algebras `W`
/// and `W^O` and anything else graded by cohomological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    coeffs: Vec<PairVector>,
}

impl GradedCharacter {
    /// The constant character `1`, truncated at `max_degree`.
    pub fn unit(max_degree: u32) -> Self {
        let mut coeffs = vec![PairVector::zero(); max_degree as usize + 1];
        coeffs[0] = PairVector::unit();
        GradedCharacter { coeffs }
    }

    pub fn from_coefficients(coeffs: Vec<PairVector>) -> Self {
        assert!(!coeffs.is_empty(), "need at least degree 0");
        GradedCharacter { coeffs }
    }

    pub fn max_degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// The coefficient of degree `d` (zero beyond the truncation).
    pub fn coefficient(&self, d: u32) -> &PairVector {
        static ZERO: std::sync::OnceLock<PairVector> = std::sync::OnceLock::new();
        self.coeffs
            .get(d as usize)
            .unwrap_or_else(|| ZERO.get_or_init(PairVector::zero))
    }

    pub fn coefficients(&self) -> &[PairVector] {
        &self.coeffs
    }

    /// Degreewise dual (alphabet swap).
    pub fn dual(&self) -> GradedCharacter {
        GradedCharacter {
            coeffs: self.coeffs.iter().map(|v| v.dual()).collect(),
        }
    }

    /// The series of free dimensions at rank `n`.
    pub fn free_dim_series(&self, n: u32) -> HilbertSeries {
        HilbertSeries::from_coefficients(
            self.coeffs
                .iter()
                .map(|v| {
                    i64::try_from(&v.free_dim(n)).expect("graded free dimension exceeds i64")
                })
                .collect(),
        )
    }
}

/// The graded-symmetric algebra on homogeneous `pieces`, truncated at
/// `max_degree`.
///
/// Odd-degree pieces contribute exterior powers, even-degree pieces
/// symmetric powers; the degree-`d` coefficient is the sum over multi-indices
/// `(k_i)` with `Σ i·k_i = d` of the free products `Π P^{k_i}(v_i)`.
/// Duplicate degrees are rejected.
pub fn graded_symmetric_algebra(
    pieces: &[(u32, PairVector)],
    max_degree: u32,
) -> Result<GradedCharacter> {
    let mut seen = std::collections::BTreeSet::new();
    for (d, _) in pieces {
        if *d == 0 {
            return Err(Error::InvalidInput(
                "graded-symmetric algebra pieces must have degree ≥ 1".into(),
            ));
        }
        if !seen.insert(*d) {
            return Err(Error::InvalidInput(format!(
                "duplicate degree {d} among graded-symmetric algebra pieces"
            )));
        }
    }

    let mut acc = vec![PairVector::zero(); max_degree as usize + 1];
    acc[0] = PairVector::unit();
    for (d, v) in pieces {
        if *d > max_degree {
            continue;
        }
        let kmax = max_degree / d;
        let kind = if d % 2 == 1 {
            PowerKind::Exterior
        } else {
            PowerKind::Symmetric
        };
        let powers = lambda_powers(v, kmax, kind)?;
        let mut next = vec![PairVector::zero(); max_degree as usize + 1];
        for (deg, current) in acc.iter().enumerate() {
            if current.is_zero() {
                continue;
            }
            for (k, power) in powers.iter().enumerate() {
                let total = deg + k * (*d as usize);
                if total > max_degree as usize {
                    break;
                }
                if power.is_zero() {
                    continue;
                }
                next[total] = next[total].add(&current.mul(power));
            }
        }
        acc = next;
    }
    Ok(GradedCharacter::from_coefficients(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{Bipartition, Partition};
    use num::bigint::BigInt;

    fn bp(cov: &[u32], contra: &[u32]) -> Bipartition {
        Bipartition::new(
            Partition::new(cov.to_vec()).unwrap(),
            Partition::new(contra.to_vec()).unwrap(),
        )
    }

    #[test]
    fn single_odd_piece_gives_exterior_powers() {
        let v = PairVector::basis(bp(&[1], &[])).add(&PairVector::basis(bp(&[], &[1])));
        let alg = graded_symmetric_algebra(&[(1, v.clone())], 4).unwrap();
        for d in 0..=4u32 {
            assert_eq!(
                alg.coefficient(d),
                &v.exterior_power(d).unwrap(),
                "degree {d}"
            );
        }
    }

    #[test]
    fn degree_two_bookkeeping() {
        // Pieces in degrees 1 and 2: the degree-2 coefficient is Λ²(v₁) + v₂.
        let v1 = PairVector::basis(bp(&[1, 1], &[1])).add(&PairVector::basis(bp(&[1], &[])));
        let v2 = PairVector::basis(bp(&[1, 1, 1], &[1])).add(&PairVector::basis(bp(&[1, 1], &[])));
        let alg = graded_symmetric_algebra(&[(1, v1.clone()), (2, v2.clone())], 2).unwrap();
        assert_eq!(alg.coefficient(0), &PairVector::unit());
        assert_eq!(alg.coefficient(1), &v1);
        assert_eq!(
            alg.coefficient(2),
            &v1.exterior_power(2).unwrap().add(&v2)
        );
    }

    #[test]
    fn duplicate_degrees_rejected() {
        let v = PairVector::basis(bp(&[1], &[]));
        assert!(graded_symmetric_algebra(&[(1, v.clone()), (1, v)], 3).is_err());
    }

    #[test]
    fn hilbert_specialization_matches_product_formula() {
        // Free dimensions of the output match
        // Π_odd (1+t^i)^{dim} · Π_even (1−t^i)^{−dim}.
        let n = 4u32;
        let v1 = PairVector::basis(bp(&[1, 1], &[1])).add(&PairVector::basis(bp(&[1], &[])));
        let v2 = PairVector::basis(bp(&[1, 1], &[]));
        let max = 5u32;
        let alg = graded_symmetric_algebra(&[(1, v1.clone()), (2, v2.clone())], max).unwrap();
        let got = alg.free_dim_series(n);

        let d1 = u64::try_from(&v1.free_dim(n)).unwrap();
        let d2 = u64::try_from(&v2.free_dim(n)).unwrap();
        let expected = HilbertSeries::one(max)
            .mul_generator_power(1, d1, true, max)
            .mul_generator_power(2, d2, false, max);
        assert_eq!(got, expected);
        // Sanity: exterior degree-1 piece contributes C(d1, k) at degree k.
        assert_eq!(
            BigInt::from(got.coefficient(2)),
            BigInt::from(
                crate::partitions::binomial(d1, 2) + d2
            )
        );
    }

    #[test]
    fn dual_is_an_involution() {
        let v1 = PairVector::basis(bp(&[1, 1], &[1])).add(&PairVector::basis(bp(&[1], &[])));
        let alg = graded_symmetric_algebra(&[(1, v1)], 3).unwrap();
        assert_eq!(alg.dual().dual(), alg);
    }
}
