//! Symmetric Laurent polynomials at finite rank: the independent oracle.
//!
//! A [`LaurentCharacter`] is a symmetric Laurent polynomial in `n` variables,
//! stored as one weakly decreasing exponent vector per `𝔖_n`-orbit together
//! with the coefficient carried by every monomial of the orbit. This keeps
//! rank-8, degree-8 computations tractable: characters are handled through
//! their dominant weights, never through full monomial expansions, except
//! transiently on the smaller factor of a product.
//!
//! Irreducible characters are computed with Freudenthal's multiplicity
//! formula, which is a different algorithm from everything in the
//! combinatorial code paths (hook lengths, tableau enumeration), so agreement
//! between the two is a genuine cross-check rather than a tautology.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::Zero;

use crate::error::Error;
use crate::partitions::{factorial, Bipartition, Partition};
use crate::Result;

/// A symmetric Laurent polynomial in `n` variables with integer coefficients.
///
/// Keys are weakly decreasing exponent vectors (orbit representatives); the
/// stored value is the coefficient of each monomial in the orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentCharacter {
    n: usize,
    terms: HashMap<Vec<i32>, i64>,
}

impl LaurentCharacter {
    /// The zero polynomial in `n` variables.
    pub fn zero(n: u32) -> Self {
        LaurentCharacter {
            n: n as usize,
            terms: HashMap::new(),
        }
    }

    /// The constant `1`.
    pub fn unit(n: u32) -> Self {
        let mut c = Self::zero(n);
        c.add_orbit(vec![0; n as usize], 1);
        c
    }

    /// `x_1 + … + x_n`, the character of the standard representation.
    pub fn standard(n: u32) -> Self {
        let mut c = Self::zero(n);
        let mut key = vec![0; n as usize];
        key[0] = 1;
        c.add_orbit(key, 1);
        c
    }

    /// `x_1^{-1} + … + x_n^{-1}`, the character of the dual standard
    /// representation.
    pub fn dual_standard(n: u32) -> Self {
        let mut c = Self::zero(n);
        let mut key = vec![0; n as usize];
        key[n as usize - 1] = -1;
        c.add_orbit(key, 1);
        c
    }

    pub fn rank(&self) -> u32 {
        self.n as u32
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored orbits.
    pub fn orbit_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of an arbitrary monomial (symmetry makes any reordering
    /// equivalent).
    pub fn coefficient(&self, exponents: &[i32]) -> i64 {
        let mut key = exponents.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        *self.terms.get(&key).unwrap_or(&0)
    }

    fn add_orbit(&mut self, key: Vec<i32>, coeff: i64) {
        debug_assert_eq!(key.len(), self.n);
        debug_assert!(key.windows(2).all(|w| w[0] >= w[1]), "orbit key not sorted");
        if coeff == 0 {
            return;
        }
        match self.terms.entry(key) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    /// `self + k·other`.
    pub fn add_scaled(&mut self, other: &LaurentCharacter, k: i64) {
        assert_eq!(self.n, other.n, "rank mismatch");
        for (key, &c) in &other.terms {
            self.add_orbit(key.clone(), k * c);
        }
    }

    /// Size of the `𝔖_n`-orbit of a sorted exponent vector.
    fn orbit_size(&self, key: &[i32]) -> BigInt {
        let mut num = BigInt::from(factorial(self.n as u64));
        let mut run = 1u64;
        for i in 1..key.len() {
            if key[i] == key[i - 1] {
                run += 1;
            } else {
                num /= BigInt::from(factorial(run));
                run = 1;
            }
        }
        num /= BigInt::from(factorial(run));
        num
    }

    /// Evaluate at `x_1 = … = x_n = 1`: the (virtual) dimension.
    pub fn dimension(&self) -> BigInt {
        let mut total = BigInt::zero();
        for (key, &c) in &self.terms {
            total += self.orbit_size(key) * BigInt::from(c);
        }
        total
    }

    /// The Adams operation `ψ^k`: substitute `x_i ↦ x_i^k`.
    pub fn adams(&self, k: u32) -> LaurentCharacter {
        assert!(k >= 1);
        let mut out = Self::zero(self.n as u32);
        for (key, &c) in &self.terms {
            let new_key: Vec<i32> = key.iter().map(|&e| e * k as i32).collect();
            out.add_orbit(new_key, c);
        }
        out
    }

    /// Expand the orbit of a sorted exponent vector into the distinct
    /// permutations it contains.
    fn expand_orbit(key: &[i32]) -> Vec<Vec<i32>> {
        // Iterate multiset permutations in lexicographic order starting from
        // the ascending arrangement.
        let mut cur: Vec<i32> = key.to_vec();
        cur.sort_unstable();
        let mut out = Vec::new();
        loop {
            out.push(cur.clone());
            // next_permutation
            let Some(i) = (0..cur.len().saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Full monomial count (sum of orbit sizes), used to pick the cheaper
    /// factor to expand during multiplication.
    fn full_size(&self) -> BigInt {
        let mut total = BigInt::zero();
        for key in self.terms.keys() {
            total += self.orbit_size(key);
        }
        total
    }

    /// Product of two symmetric Laurent polynomials.
    ///
    /// The smaller factor is expanded into full monomials `a`; every
    /// candidate orbit representative `m = sorted(a + b)` (for `b` ranging
    /// over the larger factor's representatives) then receives the
    /// coefficient `Σ_a f[a]·g[m − a]`, which is exact because both factors
    /// are symmetric.
    pub fn mul(&self, other: &LaurentCharacter) -> LaurentCharacter {
        assert_eq!(self.n, other.n, "rank mismatch");
        let n = self.n;
        let (small, big) = if self.full_size() <= other.full_size() {
            (self, other)
        } else {
            (other, self)
        };

        let mut full_small: Vec<(Vec<i32>, i64)> = Vec::new();
        for (key, &c) in &small.terms {
            for perm in Self::expand_orbit(key) {
                full_small.push((perm, c));
            }
        }

        let mut candidates: std::collections::HashSet<Vec<i32>> =
            std::collections::HashSet::new();
        for (a, _) in &full_small {
            for b in big.terms.keys() {
                let mut m: Vec<i32> = (0..n).map(|i| a[i] + b[i]).collect();
                m.sort_unstable_by(|x, y| y.cmp(x));
                candidates.insert(m);
            }
        }

        let mut out = Self::zero(n as u32);
        let mut scratch = vec![0i32; n];
        for m in candidates {
            let mut coeff = 0i64;
            for (a, ca) in &full_small {
                for i in 0..n {
                    scratch[i] = m[i] - a[i];
                }
                scratch.sort_unstable_by(|x, y| y.cmp(x));
                if let Some(&cb) = big.terms.get(&scratch) {
                    coeff += ca * cb;
                }
            }
            out.add_orbit(m, coeff);
        }
        out
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> LaurentCharacter {
        let mut acc = Self::unit(self.n as u32);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The lexicographically greatest orbit representative, if any.
    fn max_weight(&self) -> Option<Vec<i32>> {
        self.terms.keys().max().cloned()
    }

    /// Decompose into irreducible characters by repeated highest-weight
    /// subtraction.
    ///
    /// Works on virtual characters too (multiplicities may then be
    /// negative). Each step strictly decreases the support in the sorted-lex
    /// order, so the loop terminates. The reconstruction
    /// `Σ mult(λ̄)·irrep_character(λ̄, n) = χ` is exact.
    pub fn peel(&self) -> Result<std::collections::BTreeMap<Bipartition, i64>> {
        let mut rest = self.clone();
        let mut out = std::collections::BTreeMap::new();
        let mut last: Option<Vec<i32>> = None;
        while let Some(w) = rest.max_weight() {
            if let Some(prev) = &last {
                if w >= *prev {
                    return Err(Error::Internal(format!(
                        "peeling failed to make progress at weight {w:?}"
                    )));
                }
            }
            let bp = bipartition_from_sorted_weight(&w)?;
            let mult = rest.terms[&w];
            let chi = irrep_character(&bp, self.n as u32)?;
            rest.add_scaled(&chi, -mult);
            out.insert(bp, mult);
            last = Some(w);
        }
        Ok(out)
    }
}

/// Convert a sorted (descending, negatives trailing) weight into the
/// bipartition with that highest weight.
fn bipartition_from_sorted_weight(w: &[i32]) -> Result<Bipartition> {
    if w.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::InvalidInput(format!(
            "candidate highest weight {w:?} is not weakly decreasing"
        )));
    }
    let cov: Vec<u32> = w.iter().filter(|&&e| e > 0).map(|&e| e as u32).collect();
    let contra: Vec<u32> = w
        .iter()
        .rev()
        .filter(|&&e| e < 0)
        .map(|&e| (-e) as u32)
        .collect();
    Ok(Bipartition::new(
        Partition::from_sorted_unchecked(cov),
        Partition::from_sorted_unchecked(contra),
    ))
}

/// The character of the irreducible `V_λ̄(n)` as a symmetric Laurent
/// polynomial, by Freudenthal's recursion on dominant weights.
///
/// Rejects `l(λ̄) > n` (the representation is zero there, which has no
/// well-formed character). Results are cached per `(λ̄, n)`.
pub fn irrep_character(bp: &Bipartition, n: u32) -> Result<Arc<LaurentCharacter>> {
    if bp.length() > n {
        return Err(Error::InvalidInput(format!(
            "bipartition {bp} has length {} > rank {n}",
            bp.length()
        )));
    }
    static CACHE: OnceLock<Mutex<HashMap<(Bipartition, u32), Arc<LaurentCharacter>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (bp.clone(), n);
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(Arc::clone(hit));
    }
    let computed = Arc::new(freudenthal_character(bp, n));
    cache
        .lock()
        .unwrap()
        .insert(key, Arc::clone(&computed));
    Ok(computed)
}

fn freudenthal_character(bp: &Bipartition, n: u32) -> LaurentCharacter {
    let lam: Vec<i64> = bp.weight(n).expect("length checked by caller");
    let nn = n as usize;
    let rho: Vec<i64> = (0..nn).map(|i| (nn - 1 - i) as i64).collect();

    let dominant = dominant_weights_below(&lam);
    // Process in descending lex order; every weight reachable by adding a
    // positive root is strictly above in dominance, hence already done.
    let mut order = dominant;
    order.sort_unstable_by(|a, b| b.cmp(a));

    let norm = |v: &[i64]| -> i64 { v.iter().map(|&x| x * x).sum() };
    let lam_rho: Vec<i64> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let top_norm = norm(&lam_rho);

    let mut mult: HashMap<Vec<i64>, i64> = HashMap::new();
    mult.insert(lam.clone(), 1);

    for mu in order.iter().skip(1) {
        let mu_rho: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let denom = top_norm - norm(&mu_rho);
        debug_assert!(denom > 0, "Freudenthal denominator must be positive");
        let mut acc: i64 = 0;
        for i in 0..nn {
            for j in (i + 1)..nn {
                // Positive root e_i − e_j; walk μ + tα while it can still be
                // dominated by λ after sorting.
                let t_max = (lam[0] - mu[i]).min(mu[j] - lam[nn - 1]);
                let mut nu = mu.clone();
                for _t in 1..=t_max.max(0) {
                    nu[i] += 1;
                    nu[j] -= 1;
                    let mut sorted = nu.clone();
                    sorted.sort_unstable_by(|a, b| b.cmp(a));
                    if let Some(&m) = mult.get(&sorted) {
                        acc += m * (nu[i] - nu[j]);
                    }
                }
            }
        }
        let value = 2 * acc / denom;
        debug_assert_eq!(2 * acc % denom, 0, "Freudenthal division must be exact");
        if value != 0 {
            mult.insert(mu.clone(), value);
        }
    }

    let mut out = LaurentCharacter::zero(n);
    for (w, m) in mult {
        let key: Vec<i32> = w.iter().map(|&x| x as i32).collect();
        out.add_orbit(key, m);
    }
    out
}

/// All weakly decreasing integer vectors `μ` with `μ ⊴ λ` in dominance
/// order (equal total, partial sums bounded by λ's).
fn dominant_weights_below(lam: &[i64]) -> Vec<Vec<i64>> {
    let n = lam.len();
    let total: i64 = lam.iter().sum();
    let prefix: Vec<i64> = lam
        .iter()
        .scan(0i64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur: Vec<i64> = Vec::with_capacity(n);
    fn rec(
        pos: usize,
        partial: i64,
        n: usize,
        total: i64,
        prefix: &[i64],
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if pos == n {
            if partial == total {
                out.push(cur.clone());
            }
            return;
        }
        let remaining = total - partial;
        let slots = (n - pos) as i64;
        // Entries after this position are ≤ this one, so it must carry at
        // least the average of what remains.
        let lower = remaining.div_euclid(slots)
            + if remaining.rem_euclid(slots) != 0 { 1 } else { 0 };
        let mut upper = prefix[pos] - partial;
        if pos > 0 {
            upper = upper.min(cur[pos - 1]);
        }
        let mut v = upper;
        while v >= lower {
            cur.push(v);
            rec(pos + 1, partial + v, n, total, prefix, cur, out);
            cur.pop();
            v -= 1;
        }
    }
    rec(0, 0, n, total, &prefix, &mut cur, &mut out);
    out
}

/// Evaluate a free-ring bipartition as the product character
/// `s_λ(x) · s_{λ'}(x^{-1})` at rank `n`.
///
/// This map is a ring homomorphism for the *free* pair product and commutes
/// with Adams operations, which makes it the right oracle for the
/// lambda-ring code. (It differs from the traceless character of `V_λ̄`,
/// the oracle for the *stable* product.)
pub fn free_eval(bp: &Bipartition, n: u32) -> Result<LaurentCharacter> {
    let cov = irrep_character(
        &Bipartition::new(bp.covariant.clone(), Partition::empty()),
        n,
    )?;
    let contra = irrep_character(
        &Bipartition::new(Partition::empty(), bp.contravariant.clone()),
        n,
    )?;
    Ok(cov.mul(&contra))
}
