//! Degree-truncated Hilbert series with exact integer coefficients.

/// A truncated power series `Σ c_d t^d`, `0 ≤ d ≤ max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    coeffs: Vec<i64>,
}

impl HilbertSeries {
    /// The constant series `1` truncated at `max_degree`.
    pub fn one(max_degree: u32) -> Self {
        let mut coeffs = vec![0; max_degree as usize + 1];
        coeffs[0] = 1;
        HilbertSeries { coeffs }
    }

    pub fn from_coefficients(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least degree 0");
        HilbertSeries { coeffs }
    }

    pub fn max_degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// Coefficient of `t^d` (zero beyond the truncation).
    pub fn coefficient(&self, d: u32) -> i64 {
        self.coeffs.get(d as usize).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    /// Truncated product of two series.
    pub fn mul(&self, other: &HilbertSeries, max_degree: u32) -> HilbertSeries {
        let mut coeffs = vec![0i64; max_degree as usize + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 || i > max_degree as usize {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j > max_degree as usize {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        HilbertSeries { coeffs }
    }

    /// Multiply by `(1 + t^d)^m` (exterior) or `(1 − t^d)^{−m}` (polynomial).
    pub fn mul_generator_power(
        &self,
        degree: u32,
        multiplicity: u64,
        exterior: bool,
        max_degree: u32,
    ) -> HilbertSeries {
        assert!(degree >= 1, "generators must have positive degree");
        let d = degree as usize;
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(max_degree as usize + 1, 0);
        for _ in 0..multiplicity {
            if exterior {
                for j in (d..coeffs.len()).rev() {
                    coeffs[j] += coeffs[j - d];
                }
            } else {
                for j in d..coeffs.len() {
                    coeffs[j] += coeffs[j - d];
                }
            }
        }
        HilbertSeries { coeffs }
    }

    /// The series of a free graded-commutative algebra on the given
    /// generators `(degree, multiplicity, exterior?)`.
    pub fn from_generators(generators: &[(u32, u64, bool)], max_degree: u32) -> HilbertSeries {
        let mut s = HilbertSeries::one(max_degree);
        for &(degree, multiplicity, exterior) in generators {
            if degree > max_degree {
                continue;
            }
            s = s.mul_generator_power(degree, multiplicity, exterior, max_degree);
        }
        s
    }
}
