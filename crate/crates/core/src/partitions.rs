//! Partitions, bipartitions, and the exact combinatorics built on them.
//!
//! Everything downstream of this module is indexed by [`Partition`]s
//! (irreducible representations of symmetric groups) and [`Bipartition`]s
//! (irreducible algebraic `GL(n)`-representations). The operations here are
//! the number-theoretic kernels: Specht dimensions via hook lengths,
//! Littlewood-Richardson coefficients via direct tableau enumeration, Weyl
//! dimensions of rational irreducibles, and the Schur-to-power-sum
//! transition used by the lambda-ring machinery.
//!
//! Canonical ordering: partitions sort by decreasing size, then
//! reverse-lexicographically on parts (`[3]` before `[2,1]` before
//! `[1,1,1]`); the empty partition sorts last. Bipartitions sort by
//! decreasing size, then by covariant part, then by contravariant part.
//! All serialized output iterates in this order, so results are
//! byte-deterministic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::Error;
use crate::Result;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty sequence is the empty partition `∅`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Build a partition, validating that parts are positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidInput(format!(
                    "parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidInput(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Internal constructor for parts already known to be sorted and positive.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    /// The parts, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `l(λ)`, the number of parts.
    pub fn length(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut parts = vec![0u32; cols];
        for &row in &self.0 {
            for c in 0..row as usize {
                parts[c] += 1;
            }
        }
        Partition(parts)
    }

    /// Whether `self` is contained in `other` as Young diagrams.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.0.len() <= other.0.len()
            && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// A single row `(k)`; `k = 0` gives the empty partition.
    pub fn row(k: u32) -> Partition {
        if k == 0 {
            Partition::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// A single column `(1^k)`.
    pub fn column(k: u32) -> Partition {
        Partition(vec![1; k as usize])
    }
}

impl Ord for Partition {
    /// Canonical output order: decreasing size, then reverse-lexicographic
    /// on parts, so `[3] < [2,1] < [1,1,1] < []` as map keys iterate
    /// front-to-back in display order.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parse the text format `"[3,1]"`; the empty partition is `"[]"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                kind: "partition",
                token: s.to_string(),
            })?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let n: u32 = piece.trim().parse().map_err(|_| Error::Parse {
                kind: "partition",
                token: piece.trim().to_string(),
            })?;
            parts.push(n);
        }
        Partition::new(parts).map_err(|_| Error::Parse {
            kind: "partition",
            token: s.to_string(),
        })
    }
}

/// A bipartition `(λ; λ')`: the index of an irreducible algebraic
/// `GL(n)`-representation.
///
/// The covariant part acts on tensor factors of the standard representation
/// `H`, the contravariant part on factors of its dual `H*`. The paper-style
/// index `V_{a,b}` (e.g. `V_{1,0} = H`, `V_{0,1} = H*`) corresponds to
/// `Bipartition { covariant: a, contravariant: b }`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bipartition {
    pub covariant: Partition,
    pub contravariant: Partition,
}

impl Bipartition {
    pub fn new(covariant: Partition, contravariant: Partition) -> Self {
        Bipartition {
            covariant,
            contravariant,
        }
    }

    /// The trivial bipartition `(∅; ∅)`.
    pub fn trivial() -> Self {
        Bipartition::default()
    }

    /// `|λ| + |λ'|`.
    pub fn size(&self) -> u32 {
        self.covariant.size() + self.contravariant.size()
    }

    /// `l(λ) + l(λ')`. The irreducible vanishes at ranks below this.
    pub fn length(&self) -> u32 {
        self.covariant.length() + self.contravariant.length()
    }

    /// `deg = |λ| − |λ'|`.
    pub fn degree(&self) -> i64 {
        self.covariant.size() as i64 - self.contravariant.size() as i64
    }

    /// The dual bipartition `(λ'; λ)`, indexing the dual representation.
    pub fn dual(&self) -> Bipartition {
        Bipartition {
            covariant: self.contravariant.clone(),
            contravariant: self.covariant.clone(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.covariant.is_empty() && self.contravariant.is_empty()
    }

    /// The highest weight `(λ_1, …, 0, …, −λ'_1)` as a length-`n` vector,
    /// or `None` if `l(λ) + l(λ') > n`.
    pub fn weight(&self, n: u32) -> Option<Vec<i64>> {
        if self.length() > n {
            return None;
        }
        let mut w = vec![0i64; n as usize];
        for (i, &p) in self.covariant.parts().iter().enumerate() {
            w[i] = p as i64;
        }
        let contra = self.contravariant.parts();
        for (i, &p) in contra.iter().enumerate() {
            w[n as usize - 1 - i] = -(p as i64);
        }
        Some(w)
    }
}

impl Ord for Bipartition {
    /// Decreasing size, then covariant part, then contravariant part, each
    /// in canonical partition order.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| self.covariant.cmp(&other.covariant))
            .then_with(|| self.contravariant.cmp(&other.contravariant))
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.covariant, self.contravariant)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// Parse the text format `"[3,1]|[1]"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once('|').ok_or_else(|| Error::Parse {
            kind: "bipartition",
            token: s.to_string(),
        })?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

/// All partitions of `n`, in canonical order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<Partition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&n) {
        return v.clone();
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(current.clone()));
            return;
        }
        let top = max.min(remaining);
        for next in (1..=top).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out.sort();
    cache.lock().unwrap().insert(n, out.clone());
    out
}

/// All bipartitions of total size `n`, in canonical order.
pub fn bipartitions_of(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for p in 0..=n {
        for cov in partitions_of(p) {
            for contra in partitions_of(n - p) {
                out.push(Bipartition::new(cov.clone(), contra));
            }
        }
    }
    out.sort();
    out
}

/// `n!` as an exact big integer.
pub fn factorial(n: u64) -> BigUint {
    let mut f = BigUint::one();
    for k in 2..=n {
        f *= k;
    }
    f
}

/// Binomial coefficient `C(n, k)`, exact.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    u64::try_from(num / den).expect("binomial exceeds u64")
}

/// Dimension of the Specht module `S^λ` via the hook length formula.
///
/// `dim S^∅ = 1`.
pub fn specht_dim(lambda: &Partition) -> u64 {
    let n = lambda.size() as u64;
    if n == 0 {
        return 1;
    }
    let conj = lambda.conjugate();
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let hook = (row as u64 - j as u64) + (conj.parts()[j] as u64 - i as u64) - 1;
            den *= hook;
        }
    }
    u64::try_from(factorial(n) / den).expect("Specht dimension exceeds u64")
}

/// Littlewood-Richardson coefficient `c^ν_{λμ}`.
///
/// Computed by direct enumeration of Littlewood-Richardson skew tableaux of
/// shape `ν/λ` and content `μ` (column-strict fillings whose reverse reading
/// word is a lattice word). That keeps this routine independent of the
/// character-theoretic code paths it is used to cross-check. Results are
/// memoized on `(λ, μ, ν)`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    if !lambda.contained_in(nu) || !mu.contained_in(nu) {
        return 0;
    }
    if mu.is_empty() {
        return u64::from(lambda == nu);
    }

    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition, Partition), u64>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }

    let count = count_lr_tableaux(lambda, mu, nu);
    cache.lock().unwrap().insert(key, count);
    count
}

/// Backtracking enumeration of LR skew tableaux.
///
/// Cells of `ν/λ` are visited in reverse reading order (rows top to bottom,
/// right to left within a row), which makes the lattice-word condition a
/// running prefix check: value `v ≥ 2` may be placed only while
/// `count[v] < count[v−1]`.
fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let rows = nu.length() as usize;
    let nu_parts: Vec<usize> = nu.parts().iter().map(|&p| p as usize).collect();
    let mut lam_parts: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    lam_parts.resize(rows, 0);
    let values = mu.length() as usize;
    let mu_parts: Vec<u32> = mu.parts().to_vec();

    // grid[r][c] = value in cell (r, c), 0 = not yet filled / in λ region.
    let mut grid: Vec<Vec<u32>> = nu_parts.iter().map(|&w| vec![0u32; w]).collect();
    let mut counts = vec![0u32; values + 1];

    fn rec(
        r: usize,
        c_plus_one: usize,
        rows: usize,
        nu_parts: &[usize],
        lam_parts: &[usize],
        mu_parts: &[u32],
        values: usize,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
    ) -> u64 {
        if r == rows {
            return 1;
        }
        if c_plus_one == lam_parts[r] {
            // Row finished; move to the rightmost cell of the next row.
            let nr = r + 1;
            let start = if nr < rows { nu_parts[nr] } else { 0 };
            return rec(
                nr, start, rows, nu_parts, lam_parts, mu_parts, values, grid, counts,
            );
        }
        let c = c_plus_one - 1;
        // Weakly increasing along rows: bounded above by the right neighbor.
        let right_bound = if c + 1 < nu_parts[r] && grid[r][c + 1] > 0 {
            grid[r][c + 1]
        } else {
            values as u32
        };
        // Strictly increasing down columns: bounded below by the cell above
        // (which is unconstrained when it lies in the λ region).
        let above = if r > 0 && c < nu_parts[r - 1] && c >= lam_parts[r - 1] {
            grid[r - 1][c]
        } else {
            0
        };
        let mut total = 0;
        for v in (above + 1)..=right_bound {
            let vi = v as usize;
            if counts[vi] >= mu_parts[vi - 1] {
                continue;
            }
            if vi >= 2 && counts[vi] >= counts[vi - 1] {
                continue; // would break the lattice-word condition
            }
            counts[vi] += 1;
            grid[r][c] = v;
            total += rec(
                r, c, rows, nu_parts, lam_parts, mu_parts, values, grid, counts,
            );
            grid[r][c] = 0;
            counts[vi] -= 1;
        }
        total
    }

    let start = nu_parts[0];
    rec(
        0,
        start,
        rows,
        &nu_parts,
        &lam_parts,
        &mu_parts,
        values,
        &mut grid,
        &mut counts,
    )
}

/// Expand the product `s_λ · s_μ` as `Σ_ν c^ν_{λμ} s_ν`.
pub fn lr_expand(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    let n = lambda.size() + mu.size();
    let mut out = Vec::new();
    for nu in partitions_of(n) {
        let c = lr_coeff(lambda, mu, &nu);
        if c > 0 {
            out.push((nu, c));
        }
    }
    out
}

/// Dimension of the irreducible algebraic `GL(n)`-representation `V_λ̄`.
///
/// Evaluates the Weyl dimension formula on the rational highest weight
/// `(λ_1, …, 0, …, −λ'_1)` with exact big-integer arithmetic (intermediate
/// products overflow 64 bits well inside the supported range). Returns `0`
/// when `l(λ̄) > n`.
pub fn dim_irrep(bp: &Bipartition, n: u32) -> u64 {
    assert!(n >= 1, "rank must be positive");
    let Some(w) = bp.weight(n) else {
        return 0;
    };
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let n = n as usize;
    for i in 0..n {
        for j in (i + 1)..n {
            let diff = (w[i] - w[j]) as u64 + (j - i) as u64;
            num *= diff;
            den *= (j - i) as u64;
        }
    }
    u64::try_from(num / den).expect("irreducible dimension exceeds u64")
}

/// `z_μ = Π r^{m_r} m_r!`, the centralizer order of the conjugacy class `μ`.
pub fn centralizer_order(mu: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
    for &p in mu.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (r, m) in mult {
        for _ in 0..m {
            z *= r as u64;
        }
        z *= factorial(m);
    }
    z
}

/// Irreducible symmetric group character `χ^λ(μ)` by Murnaghan-Nakayama,
/// implemented on beta-sets and memoized.
pub fn symmetric_group_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(
        lambda.size(),
        mu.size(),
        "character requires |λ| = |μ|, got {lambda} and {mu}"
    );
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = cache.lock().unwrap().get(&key) {
        return v;
    }
    let v = mn_character(lambda, mu);
    cache.lock().unwrap().insert(key, v);
    v
}

fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let strip = mu.parts()[0];
    let rest = Partition::from_sorted_unchecked(mu.parts()[1..].to_vec());

    // Beta-set of λ: distinct values λ_i + (l − 1 − i). Removing a border
    // strip of length `strip` replaces some b by b − strip; the height of the
    // strip is the number of beta values strictly between the two.
    let l = lambda.length() as usize;
    let mut beta: Vec<i64> = (0..l)
        .map(|i| lambda.parts()[i] as i64 + (l - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for idx in 0..l {
        let b = beta[idx];
        let t = b - strip as i64;
        if t < 0 || beta.contains(&t) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > t && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        beta[idx] = t;
        let reduced = partition_from_beta(&beta);
        beta[idx] = b;
        total += sign * symmetric_group_character(&reduced, &rest);
    }
    total
}

fn partition_from_beta(beta: &[i64]) -> Partition {
    let l = beta.len();
    let mut sorted = beta.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts = Vec::new();
    for (i, &b) in sorted.iter().enumerate() {
        let p = b - (l - 1 - i) as i64;
        debug_assert!(p >= 0);
        if p > 0 {
            parts.push(p as u32);
        }
    }
    Partition::from_sorted_unchecked(parts)
}

/// Expansion of `s_λ` in the power-sum basis: the map `μ ↦ χ^λ(μ)/z_μ`.
///
/// Reconstructing through the inverse transition (`p_μ = Σ_λ χ^λ(μ) s_λ`)
/// is the identity; the lambda-ring code in [`crate::charring`] relies on
/// this transition in both directions.
pub fn power_sum_expand(lambda: &Partition) -> BTreeMap<Partition, BigRational> {
    let mut out = BTreeMap::new();
    for mu in partitions_of(lambda.size()) {
        let chi = symmetric_group_character(lambda, &mu);
        if chi == 0 {
            continue;
        }
        let z = BigInt::from(centralizer_order(&mu));
        let coeff = BigRational::new(BigInt::from(chi), z);
        if !coeff.is_zero() {
            out.insert(mu, coeff);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bp(cov: &[u32], contra: &[u32]) -> Bipartition {
        Bipartition::new(p(cov), p(contra))
    }

    #[test]
    fn partition_basics() {
        let lam = p(&[3, 1]);
        assert_eq!(lam.size(), 4);
        assert_eq!(lam.length(), 2);
        assert_eq!(Partition::empty().size(), 0);
        assert_eq!(Partition::empty().length(), 0);
        assert_eq!(lam.conjugate(), p(&[2, 1, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn partition_text_format() {
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());

        let b: Bipartition = "[3,1]|[1]".parse().unwrap();
        assert_eq!(b, bp(&[3, 1], &[1]));
        assert_eq!(b.to_string(), "[3,1]|[1]");
        assert!("[3,1]".parse::<Bipartition>().is_err());
    }

    #[test]
    fn bipartition_invariants() {
        let b = bp(&[2, 1], &[1, 1]);
        assert_eq!(b.size(), 5);
        assert_eq!(b.length(), 4);
        assert_eq!(b.degree(), 1);
        assert_eq!(b.dual(), bp(&[1, 1], &[2, 1]));
        assert_eq!(b.dual().dual(), b);
        assert_eq!(b.weight(4), Some(vec![2, 1, -1, -1]));
        assert_eq!(b.weight(3), None);
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![p(&[1, 1, 1]), Partition::empty(), p(&[3]), p(&[2, 1]), p(&[1])];
        v.sort();
        assert_eq!(
            v,
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1]), p(&[1]), Partition::empty()]
        );

        let mut b = vec![Bipartition::trivial(), bp(&[1, 1], &[1]), bp(&[2], &[1])];
        b.sort();
        assert_eq!(
            b,
            vec![bp(&[2], &[1]), bp(&[1, 1], &[1]), Bipartition::trivial()]
        );
    }

    #[test]
    fn specht_dims() {
        assert_eq!(specht_dim(&Partition::empty()), 1);
        assert_eq!(specht_dim(&p(&[5])), 1); // trivial representation
        assert_eq!(specht_dim(&p(&[2, 1])), 2); // hooks {3,1,1}: 3!/3
        assert_eq!(specht_dim(&p(&[2, 2])), 2); // hooks {3,2,2,1}: 4!/12
        assert_eq!(specht_dim(&p(&[3, 2])), 5);
        assert_eq!(specht_dim(&p(&[1, 1, 1, 1])), 1); // sign representation
    }

    #[test]
    fn specht_squares_sum_to_factorial() {
        for k in 0..=8u32 {
            let total: u64 = partitions_of(k)
                .iter()
                .map(|lam| specht_dim(lam).pow(2))
                .sum();
            assert_eq!(
                BigUint::from(total),
                factorial(k as u64),
                "Σ dim² ≠ {k}!"
            );
        }
    }

    #[test]
    fn lr_unit_and_pieri() {
        let lam = p(&[2, 1]);
        assert_eq!(lr_coeff(&lam, &Partition::empty(), &lam), 1);
        assert_eq!(lr_coeff(&Partition::empty(), &lam, &lam), 1);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[3])), 0);
    }

    #[test]
    fn lr_multiplicity_two() {
        // The classical smallest coefficient above 1.
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn lr_expand_matches_dimension() {
        // Σ_ν c^ν_{λμ} dim V_ν(n) = dim V_λ(n) · dim V_μ(n) at any rank.
        let lam = p(&[2, 1]);
        let mu = p(&[2]);
        for n in 1..=5u32 {
            let lhs: u64 = lr_expand(&lam, &mu)
                .iter()
                .map(|(nu, c)| c * dim_irrep(&Bipartition::new(nu.clone(), Partition::empty()), n))
                .sum();
            let rhs = dim_irrep(&Bipartition::new(lam.clone(), Partition::empty()), n)
                * dim_irrep(&Bipartition::new(mu.clone(), Partition::empty()), n);
            assert_eq!(lhs, rhs, "rank {n}");
        }
    }

    #[test]
    fn induction_dimension_identity() {
        // Σ_ν c^ν_{λμ} dim S^ν = C(|λ|+|μ|, |λ|) dim S^λ dim S^μ.
        for total in 0..=6u32 {
            for a in 0..=total {
                for lam in partitions_of(a) {
                    for mu in partitions_of(total - a) {
                        let lhs: u64 = lr_expand(&lam, &mu)
                            .iter()
                            .map(|(nu, c)| c * specht_dim(nu))
                            .sum();
                        let rhs = binomial(total as u64, a as u64)
                            * specht_dim(&lam)
                            * specht_dim(&mu);
                        assert_eq!(lhs, rhs, "λ={lam}, μ={mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn dim_irrep_small_cases() {
        for n in 1..=6 {
            assert_eq!(dim_irrep(&bp(&[1], &[]), n), n as u64); // standard rep
        }
        for n in 2..=6u32 {
            assert_eq!(dim_irrep(&bp(&[1], &[1]), n), (n * n - 1) as u64);
        }
        assert_eq!(dim_irrep(&bp(&[1, 1], &[1]), 3), 6);
        assert_eq!(dim_irrep(&bp(&[1, 1], &[1]), 2), 0); // length 3 > 2
        assert_eq!(dim_irrep(&Bipartition::trivial(), 1), 1);
    }

    #[test]
    fn dim_irrep_dual_invariance() {
        for size in 0..=4u32 {
            for b in bipartitions_of(size) {
                for n in 1..=6u32 {
                    assert_eq!(dim_irrep(&b, n), dim_irrep(&b.dual(), n), "{b} at n={n}");
                }
            }
        }
    }

    #[test]
    fn characters_of_s3() {
        // Standard character table of 𝔖₃.
        let classes = [(p(&[1, 1, 1]), 1i64), (p(&[2, 1]), 0), (p(&[3]), 0)];
        for (mu, _) in &classes {
            assert_eq!(symmetric_group_character(&p(&[3]), mu), 1);
        }
        assert_eq!(symmetric_group_character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(symmetric_group_character(&p(&[2, 1]), &p(&[2, 1])), 0);
        assert_eq!(symmetric_group_character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(symmetric_group_character(&p(&[1, 1, 1]), &p(&[2, 1])), -1);
        assert_eq!(symmetric_group_character(&p(&[1, 1, 1]), &p(&[3])), 1);
    }

    #[test]
    fn power_sum_expansion_examples() {
        let one_half = BigRational::new(BigInt::from(1), BigInt::from(2));

        let e = power_sum_expand(&p(&[1]));
        assert_eq!(e.len(), 1);
        assert_eq!(e[&p(&[1])], BigRational::one());

        let e = power_sum_expand(&p(&[2]));
        assert_eq!(e[&p(&[2])], one_half);
        assert_eq!(e[&p(&[1, 1])], one_half);

        let e = power_sum_expand(&p(&[1, 1]));
        assert_eq!(e[&p(&[2])], -one_half.clone());
        assert_eq!(e[&p(&[1, 1])], one_half);
    }

    #[test]
    fn power_sum_round_trip() {
        // p-expansion followed by p_μ = Σ_λ χ^λ(μ) s_λ recovers s_λ.
        for size in 1..=6u32 {
            for lam in partitions_of(size) {
                let mut schur: BTreeMap<Partition, BigRational> = BTreeMap::new();
                for (mu, coeff) in power_sum_expand(&lam) {
                    for target in partitions_of(size) {
                        let chi = symmetric_group_character(&target, &mu);
                        if chi != 0 {
                            let entry = schur
                                .entry(target.clone())
                                .or_insert_with(BigRational::zero);
                            *entry += coeff.clone() * BigRational::from(BigInt::from(chi));
                        }
                    }
                }
                schur.retain(|_, v| !v.is_zero());
                assert_eq!(schur.len(), 1, "λ={lam}");
                assert_eq!(schur[&lam], BigRational::one(), "λ={lam}");
            }
        }
    }
}
