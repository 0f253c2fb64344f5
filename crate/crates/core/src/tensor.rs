//! Decomposition of the mixed tensor spaces `H^{p,q}` into irreducibles.
//!
//! The traceless part `H^⟨p,q⟩` (joint kernel of all contraction maps)
//! decomposes with multiplicities `dim S^λ · dim S^{λ'}` over bipartitions
//! with `|λ| = p`, `|λ'| = q`. The full tensor space is rebuilt from the
//! contraction filtration: level `l` contributes
//! `C(p,l)·C(q,l)·l!` copies of `H^⟨p−l,q−l⟩`. The stable multiplicities are
//! valid at ranks `n > p + q − 1`; below that, decomposition delegates
//! entirely to the finite-rank oracle (the stable formula is never
//! extrapolated under its hypothesis).

use std::collections::BTreeMap;

use num::bigint::BigInt;

use crate::charring::{LaurentCharacter, StableCharacter};
use crate::error::Error;
use crate::partitions::{binomial, factorial, partitions_of, specht_dim, Bipartition};
use crate::Result;

/// The mixed tensor space `H^{p,q} = H^{⊗p} ⊗ (H*)^{⊗q}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    pub p: u32,
    pub q: u32,
}

impl TensorSpace {
    pub fn new(p: u32, q: u32) -> Self {
        TensorSpace { p, q }
    }

    /// `dim H^{p,q}(n) = n^{p+q}`.
    pub fn dimension(&self, n: u32) -> BigInt {
        BigInt::from(n).pow(self.p + self.q)
    }
}

/// The evaluation context of a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    /// Multiplicities valid for every rank `n > p + q − 1`.
    Stable,
    /// Multiplicities at one explicit rank.
    Rank(u32),
}

/// A multiset of bipartitions with non-negative multiplicities, together
/// with the context it is valid in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    terms: BTreeMap<Bipartition, u64>,
    context: Context,
}

impl Decomposition {
    pub fn context(&self) -> Context {
        self.context
    }

    pub fn multiplicity(&self, bp: &Bipartition) -> u64 {
        *self.terms.get(bp).unwrap_or(&0)
    }

    /// Iterate terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Bipartition, u64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ mult(λ̄) · dim V_λ̄(n)`.
    pub fn dimension_at(&self, n: u32) -> BigInt {
        let mut total = BigInt::from(0);
        for (bp, c) in self.iter() {
            total += BigInt::from(c) * BigInt::from(crate::partitions::dim_irrep(bp, n));
        }
        total
    }

    /// Termwise dual.
    pub fn dual(&self) -> Decomposition {
        Decomposition {
            terms: self
                .terms
                .iter()
                .map(|(bp, &c)| (bp.dual(), c))
                .collect(),
            context: self.context,
        }
    }

    /// View as a stable character (for products and invariant
    /// multiplicities).
    pub fn to_stable(&self) -> StableCharacter {
        let mut out = StableCharacter::zero();
        for (bp, c) in self.iter() {
            out.add_term(
                bp.clone(),
                i64::try_from(c).expect("multiplicity exceeds i64"),
            );
        }
        out
    }

    fn add(&mut self, bp: Bipartition, c: u64) {
        if c > 0 {
            *self.terms.entry(bp).or_insert(0) += c;
        }
    }
}

/// Decomposition of the traceless part `H^⟨p,q⟩`: multiplicity
/// `dim S^λ · dim S^{λ'}` on every bipartition with `|λ| = p`, `|λ'| = q`.
pub fn traceless_decompose(p: u32, q: u32) -> Decomposition {
    let mut out = Decomposition {
        terms: BTreeMap::new(),
        context: Context::Stable,
    };
    for lam in partitions_of(p) {
        let d1 = specht_dim(&lam);
        for mu in partitions_of(q) {
            let d2 = specht_dim(&mu);
            out.add(Bipartition::new(lam.clone(), mu), d1 * d2);
        }
    }
    out
}

/// Decomposition of the full tensor space `H^{p,q}`.
///
/// In the stable context (or at ranks `n > p + q − 1`) this expands the
/// contraction filtration through [`traceless_decompose`]:
/// `H^{p,q} = ⊕_l (H^⟨p−l,q−l⟩)^{⊕ C(p,l)C(q,l)l!}`. At smaller ranks the
/// result is obtained by peeling the explicit product character
/// `(Σx)^p (Σx⁻¹)^q` instead.
pub fn full_decompose(p: u32, q: u32, context: Context) -> Result<Decomposition> {
    match context {
        Context::Stable => Ok(stable_full_decompose(p, q, None)),
        Context::Rank(n) => {
            if n == 0 {
                return Err(Error::InvalidInput("rank must be at least 1".into()));
            }
            if n + 1 > p + q {
                Ok(stable_full_decompose(p, q, Some(n)))
            } else {
                oracle_decompose(p, q, n)
            }
        }
    }
}

fn stable_full_decompose(p: u32, q: u32, truncate_at: Option<u32>) -> Decomposition {
    let mut out = Decomposition {
        terms: BTreeMap::new(),
        context: truncate_at.map_or(Context::Stable, Context::Rank),
    };
    for l in 0..=p.min(q) {
        let copies = binomial(p as u64, l as u64)
            * binomial(q as u64, l as u64)
            * u64::try_from(factorial(l as u64)).expect("l! fits in u64");
        for (bp, c) in traceless_decompose(p - l, q - l).iter() {
            if let Some(n) = truncate_at {
                if bp.length() > n {
                    continue;
                }
            }
            out.add(bp.clone(), copies * c);
        }
    }
    out
}

/// Direct oracle decomposition at a given rank: peel the character of
/// `H^{⊗p} ⊗ (H*)^{⊗q}`.
pub fn oracle_decompose(p: u32, q: u32, n: u32) -> Result<Decomposition> {
    let chi = LaurentCharacter::standard(n)
        .pow(p)
        .mul(&LaurentCharacter::dual_standard(n).pow(q));
    let peeled = chi.peel()?;
    let mut out = Decomposition {
        terms: BTreeMap::new(),
        context: Context::Rank(n),
    };
    for (bp, c) in peeled {
        if c < 0 {
            return Err(Error::Internal(format!(
                "tensor character produced negative multiplicity {c} at {bp}"
            )));
        }
        out.add(bp, c as u64);
    }
    Ok(out)
}

/// The stable multiplicity of `λ̄` in `H^{p,q}`.
pub fn multiplicity(p: u32, q: u32, bp: &Bipartition) -> u64 {
    full_decompose(p, q, Context::Stable)
        .expect("stable decomposition cannot fail")
        .multiplicity(bp)
}
