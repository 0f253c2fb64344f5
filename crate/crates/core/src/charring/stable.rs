//! The stable character ring: contraction-aware products of irreducible
//! algebraic `GL(n,Z)`-representations.
//!
//! A [`StableCharacter`] is an integer combination of bipartitions whose
//! product models the tensor product of the irreducibles `V_λ̄`. On basis
//! elements the product is computed through the finite-rank oracle: multiply
//! the Laurent characters at `n = |λ̄| + |μ̄|` and peel the result back into
//! irreducibles. The stability hypothesis `n > p + q − 1` makes that single
//! rank sufficient; rank-independence is *tested* (at `n`, `n+1`, `n+2`)
//! rather than assumed, via [`product_at`]. Products of basis pairs are
//! cached.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::Zero;

use crate::charring::laurent::irrep_character;
use crate::charring::PairVector;
use crate::partitions::{dim_irrep, Bipartition};
use crate::Result;

/// An integer combination of bipartitions with the contraction-aware
/// product. Evaluation at any rank `n` at least the total size involved is
/// multiplicative.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StableCharacter {
    terms: BTreeMap<Bipartition, i64>,
}

impl StableCharacter {
    pub fn zero() -> Self {
        StableCharacter::default()
    }

    /// The unit `(∅;∅)`.
    pub fn unit() -> Self {
        StableCharacter::basis(Bipartition::trivial())
    }

    pub fn basis(bp: Bipartition) -> Self {
        let mut v = StableCharacter::zero();
        v.add_term(bp, 1);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, bp: &Bipartition) -> i64 {
        *self.terms.get(bp).unwrap_or(&0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Bipartition, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn add_term(&mut self, bp: Bipartition, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(bp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
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

    pub fn add(&self, other: &StableCharacter) -> StableCharacter {
        let mut out = self.clone();
        for (bp, c) in other.iter() {
            out.add_term(bp.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> StableCharacter {
        let mut out = StableCharacter::zero();
        if k != 0 {
            for (bp, c) in self.iter() {
                out.add_term(bp.clone(), k * c);
            }
        }
        out
    }

    pub fn dual(&self) -> StableCharacter {
        let mut out = StableCharacter::zero();
        for (bp, c) in self.iter() {
            out.add_term(bp.dual(), c);
        }
        out
    }

    /// Reinterpret a free-ring vector as a stable character (same terms,
    /// different product).
    pub fn from_pair(v: &PairVector) -> StableCharacter {
        let mut out = StableCharacter::zero();
        for (bp, c) in v.iter() {
            out.add_term(bp.clone(), c);
        }
        out
    }

    /// Forget the product structure and view the terms in the free ring.
    pub fn to_pair(&self) -> PairVector {
        let mut out = PairVector::zero();
        for (bp, c) in self.iter() {
            out.add_term(bp.clone(), c);
        }
        out
    }

    /// The stable (tensor) product, extended bilinearly from cached basis
    /// products.
    pub fn mul(&self, other: &StableCharacter) -> Result<StableCharacter> {
        let mut out = StableCharacter::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                for (t, c) in stable_product_basis(a, b)? {
                    out.add_term(t, ca * cb * c);
                }
            }
        }
        Ok(out)
    }

    /// Evaluate at rank `n`: `Σ mult(λ̄) · dim V_λ̄(n)` (terms of length
    /// greater than `n` contribute zero).
    pub fn evaluate(&self, n: u32) -> BigInt {
        let mut total = BigInt::zero();
        for (bp, c) in self.iter() {
            total += BigInt::from(c) * BigInt::from(dim_irrep(bp, n));
        }
        total
    }
}

/// Decompose `V_λ̄ ⊗ V_μ̄` at an explicit rank `n ≥ |λ̄| + |μ̄|` by
/// multiplying the two Laurent characters and peeling.
///
/// Exposed so the rank-independence of [`StableCharacter::mul`] can be
/// verified at `n`, `n+1`, `n+2` instead of trusted.
pub fn product_at(a: &Bipartition, b: &Bipartition, n: u32) -> Result<BTreeMap<Bipartition, i64>> {
    let n = n.max(1);
    let ca = irrep_character(a, n)?;
    let cb = irrep_character(b, n)?;
    ca.mul(&cb).peel()
}

/// Cached decomposition of a product of two basis elements, computed at the
/// stable rank `n = |λ̄| + |μ̄|`.
pub fn stable_product_basis(a: &Bipartition, b: &Bipartition) -> Result<Vec<(Bipartition, i64)>> {
    static CACHE: OnceLock<Mutex<HashMap<(Bipartition, Bipartition), Vec<(Bipartition, i64)>>>> =
        OnceLock::new();

    // The unit needs no oracle.
    if a.is_trivial() {
        return Ok(vec![(b.clone(), 1)]);
    }
    if b.is_trivial() {
        return Ok(vec![(a.clone(), 1)]);
    }

    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (a.clone(), b.clone());
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }

    let n = a.size() + b.size();
    let terms: Vec<(Bipartition, i64)> = product_at(a, b, n)?.into_iter().collect();
    cache.lock().unwrap().insert(key, terms.clone());
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{bipartitions_of, Partition};

    fn bp(cov: &[u32], contra: &[u32]) -> Bipartition {
        Bipartition::new(
            Partition::new(cov.to_vec()).unwrap(),
            Partition::new(contra.to_vec()).unwrap(),
        )
    }

    fn basis(cov: &[u32], contra: &[u32]) -> StableCharacter {
        StableCharacter::basis(bp(cov, contra))
    }

    #[test]
    fn unit_is_neutral() {
        let v = basis(&[2], &[1]).add(&basis(&[1], &[]).scale(3));
        assert_eq!(StableCharacter::unit().mul(&v).unwrap(), v);
        assert_eq!(v.mul(&StableCharacter::unit()).unwrap(), v);
    }

    #[test]
    fn h_times_hdual() {
        // H ⊗ H* = V_{(1);(1)} ⊕ trivial.
        let prod = basis(&[1], &[]).mul(&basis(&[], &[1])).unwrap();
        assert_eq!(prod.coefficient(&bp(&[1], &[1])), 1);
        assert_eq!(prod.coefficient(&Bipartition::trivial()), 1);
        assert_eq!(prod.len(), 2);
    }

    #[test]
    fn h_squared_pieri() {
        // No contractions possible: H ⊗ H = S²H ⊕ Λ²H.
        let prod = basis(&[1], &[]).mul(&basis(&[1], &[])).unwrap();
        assert_eq!(prod.coefficient(&bp(&[2], &[])), 1);
        assert_eq!(prod.coefficient(&bp(&[1, 1], &[])), 1);
        assert_eq!(prod.len(), 2);
    }

    #[test]
    fn evaluation_is_multiplicative() {
        for a in bipartitions_of(2) {
            for b in bipartitions_of(2) {
                let prod = StableCharacter::basis(a.clone())
                    .mul(&StableCharacter::basis(b.clone()))
                    .unwrap();
                for n in 4..=6u32 {
                    assert_eq!(
                        prod.evaluate(n),
                        BigInt::from(dim_irrep(&a, n)) * BigInt::from(dim_irrep(&b, n)),
                        "{a}·{b} at n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn product_terms_respect_size_and_degree() {
        let a = bp(&[2], &[1]);
        let b = bp(&[1], &[1, 1]);
        let prod = StableCharacter::basis(a.clone())
            .mul(&StableCharacter::basis(b.clone()))
            .unwrap();
        for (t, c) in prod.iter() {
            assert!(c > 0);
            assert!(t.size() <= a.size() + b.size());
            assert_eq!((t.size() + a.size() + b.size()) % 2, 0, "size parity");
            assert_eq!(t.degree(), a.degree() + b.degree(), "degree additivity");
        }
    }

    #[test]
    fn top_size_part_is_free_product() {
        // Contraction terms have strictly smaller size; the top layer is the
        // free LR product.
        for a in bipartitions_of(3) {
            for b in bipartitions_of(2) {
                let stable = StableCharacter::basis(a.clone())
                    .mul(&StableCharacter::basis(b.clone()))
                    .unwrap();
                let free = PairVector::basis(a.clone()).mul(&PairVector::basis(b.clone()));
                let top = a.size() + b.size();
                for (t, c) in free.iter() {
                    assert_eq!(stable.coefficient(t), c, "{a}·{b} at {t}");
                }
                for (t, c) in stable.iter() {
                    if t.size() == top {
                        assert_eq!(free.coefficient(t), c, "{a}·{b} at {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn rank_independence_small() {
        let a = bp(&[1], &[1]);
        let b = bp(&[1], &[]);
        let n0 = a.size() + b.size();
        let base = product_at(&a, &b, n0).unwrap();
        for extra in 1..=2u32 {
            assert_eq!(base, product_at(&a, &b, n0 + extra).unwrap());
        }
    }

    #[test]
    fn commutative_and_associative_sample() {
        let a = basis(&[1], &[1]);
        let b = basis(&[1, 1], &[]);
        let c = basis(&[], &[1]);
        assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
    }
}
