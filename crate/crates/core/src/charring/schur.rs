//! Integer linear combinations of Schur functions in one alphabet.

use std::collections::BTreeMap;

use crate::partitions::{lr_expand, Partition};

/// A finitely supported integer combination of Schur functions `s_λ`.
///
/// Multiplication is the Littlewood-Richardson rule. No zero coefficients
/// are ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurVector {
    terms: BTreeMap<Partition, i64>,
}

impl SchurVector {
    pub fn zero() -> Self {
        SchurVector::default()
    }

    /// The unit `s_∅ = 1`.
    pub fn unit() -> Self {
        SchurVector::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut v = SchurVector::zero();
        v.add_term(lambda, 1);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> i64 {
        *self.terms.get(lambda).unwrap_or(&0)
    }

    /// Iterate terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(lambda).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            // remove the key we just zeroed
            let zero_key = self
                .terms
                .iter()
                .find(|(_, &v)| v == 0)
                .map(|(k, _)| k.clone());
            if let Some(k) = zero_key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &SchurVector) -> SchurVector {
        let mut out = self.clone();
        for (lam, c) in other.iter() {
            out.add_term(lam.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> SchurVector {
        let mut out = SchurVector::zero();
        if k != 0 {
            for (lam, c) in self.iter() {
                out.add_term(lam.clone(), k * c);
            }
        }
        out
    }

    /// Product via the Littlewood-Richardson rule.
    pub fn mul(&self, other: &SchurVector) -> SchurVector {
        let mut out = SchurVector::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                for (nu, c) in lr_expand(a, b) {
                    out.add_term(nu, ca * cb * c as i64);
                }
            }
        }
        out
    }
}
