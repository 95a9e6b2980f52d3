//! Integer partitions and the beta-set machinery behind cores, quotients and
//! the permutation signs that appear in the factorization theorems.
//!
//! Partitions are stored in canonical form (weakly decreasing, no trailing
//! zeros). A beta set `β(λ, m)` is the strictly decreasing `m`-tuple
//! `λ_i + m - i`; residue classes of its entries modulo `t` carry the
//! `t`-core and `t`-quotient.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the input is not
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but panics on invalid input. Meant for literals.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// First part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Frobenius rank: the largest `k` with `λ_k ≥ k`.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let r = self.rank();
        let conj = self.conjugate();
        FrobeniusCoords {
            alpha: (0..r).map(|i| self.parts[i] - i - 1).collect(),
            beta: (0..r).map(|i| conj.parts[i] - i - 1).collect(),
        }
    }

    /// Hook length and content of every cell, row by row.
    pub fn hook_content(&self) -> Vec<Vec<HookCell>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| HookCell {
                        hook: row - j + conj.parts[j] - i - 1,
                        content: j as i64 - i as i64,
                    })
                    .collect()
            })
            .collect()
    }

    /// `β(λ, m)`.
    pub fn beta_set(&self, m: usize) -> Result<BetaSet> {
        if m < self.len() {
            return Err(Error::PaddingTooShort {
                length: self.len(),
                padding: m,
            });
        }
        let entries = (0..m).map(|i| self.part(i) + m - 1 - i).collect();
        Ok(BetaSet { entries })
    }

    /// Counts `n_i(λ, m)` of beta entries in each residue class modulo `t`.
    pub fn residue_counts(&self, t: usize, m: usize) -> Result<ResidueProfile> {
        check_modulus(t)?;
        let beta = self.beta_set(m)?;
        let mut counts = vec![0; t];
        for &b in &beta.entries {
            counts[b % t] += 1;
        }
        Ok(ResidueProfile { t, m, counts })
    }

    /// The `t`-core, via the beta set: class `i` entries are replaced by
    /// `i, t + i, t·2 + i, …`.
    pub fn t_core(&self, t: usize) -> Partition {
        assert!(t >= 2, "t-core needs t >= 2");
        let m = self.len();
        let profile = self
            .residue_counts(t, m)
            .expect("padding equals the length");
        let mut entries: Vec<usize> = (0..t)
            .flat_map(|i| (0..profile.counts[i]).map(move |j| t * j + i))
            .collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        BetaSet { entries }.to_partition()
    }

    /// The `t`-core by repeatedly removing rim hooks of length `t` from the
    /// Young diagram. Independent of the beta-set route in [`Partition::t_core`].
    pub fn t_core_strips(&self, t: usize) -> Partition {
        assert!(t >= 2, "t-core needs t >= 2");
        let mut current = self.clone();
        while let Some(next) = current.remove_one_rim_hook(t) {
            current = next;
        }
        current
    }

    fn remove_one_rim_hook(&self, t: usize) -> Option<Partition> {
        let conj = self.conjugate();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = row - j + conj.parts[j] - i - 1;
                if hook != t {
                    continue;
                }
                // The rim hook runs from the end of row i down to the foot of
                // column j; rows i..foot shift up by one and lose a cell.
                let foot = conj.parts[j] - 1;
                let mut parts = self.parts.clone();
                for r in i..foot {
                    parts[r] = self.parts[r + 1] - 1;
                }
                parts[foot] = j;
                return Some(Partition::new(parts).expect("rim hook removal keeps shape"));
            }
        }
        None
    }

    /// The `t`-quotient read off `β(λ, m)`: component `i` comes from the
    /// entries `t·b + i`. Changing `m` by one rotates the tuple cyclically.
    pub fn t_quotient(&self, t: usize, m: usize) -> Result<Vec<Partition>> {
        check_modulus(t)?;
        let beta = self.beta_set(m)?;
        Ok((0..t)
            .map(|i| {
                let entries = beta
                    .entries
                    .iter()
                    .filter(|&&b| b % t == i)
                    .map(|&b| (b - i) / t)
                    .collect();
                BetaSet { entries }.to_partition()
            })
            .collect())
    }

    /// `λ = (α | α + z)` in Frobenius coordinates. `z = -1` is admitted.
    pub fn is_z_asymmetric(&self, z: i64) -> bool {
        let f = self.frobenius();
        f.alpha
            .iter()
            .zip(&f.beta)
            .all(|(&a, &b)| b as i64 == a as i64 + z)
    }

    pub fn is_t_core(&self, t: usize) -> bool {
        self.t_core(t) == *self
    }

    /// Reversed parts, `rev(λ)`.
    pub fn reversed(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated parts; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookCell {
    pub hook: usize,
    pub content: i64,
}

/// Strictly decreasing nonnegative integers; `m` is the number of entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidBetaSet(format!(
                "{entries:?} is not strictly decreasing"
            )));
        }
        Ok(BetaSet { entries })
    }

    /// Accepts signed input so that negative entries are rejected rather than
    /// unrepresentable.
    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        if let Some(&e) = entries.iter().find(|&&e| e < 0) {
            return Err(Error::InvalidBetaSet(format!("negative entry {e}")));
        }
        Self::new(entries.iter().map(|&e| e as usize).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    /// Inverse of [`Partition::beta_set`]: `λ_i = b_i - m + i`.
    pub fn to_partition(&self) -> Partition {
        let m = self.m();
        let parts = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &b)| b + i + 1 - m)
            .collect();
        Partition::new(parts).expect("strictly decreasing entries give a partition")
    }
}

/// Frobenius coordinates `(α | β)`, both strict and of length `rk(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusCoords {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    /// Rebuilds the partition from arms and legs.
    pub fn to_partition(&self) -> Result<Partition> {
        let r = self.rank();
        if self.beta.len() != r {
            return Err(Error::InvalidPartition(
                "arm and leg vectors differ in length".into(),
            ));
        }
        if r == 0 {
            return Ok(Partition::empty());
        }
        let rows = self.beta[0] + 1;
        let mut parts = vec![0; rows];
        for (i, &a) in self.alpha.iter().enumerate() {
            parts[i] = a + i + 1;
        }
        // Below the diagonal: row k (k >= r) has as many cells as there are
        // diagonal legs reaching it.
        for (k, part) in parts.iter_mut().enumerate().skip(r) {
            *part = self.beta.iter().enumerate().filter(|&(j, &b)| b + j >= k).count();
        }
        for k in 0..r {
            let legs = self.beta.iter().enumerate().filter(|&(j, &b)| j < k && b + j >= k).count();
            if legs != k {
                return Err(Error::InvalidPartition("inconsistent Frobenius coordinates".into()));
            }
        }
        let lambda = Partition::new(parts)?;
        if lambda.frobenius() != *self {
            return Err(Error::InvalidPartition("inconsistent Frobenius coordinates".into()));
        }
        Ok(lambda)
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", join(&self.alpha), join(&self.beta))
    }
}

/// Residue counts `n_0, …, n_{t-1}` of `β(λ, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueProfile {
    pub t: usize,
    pub m: usize,
    pub counts: Vec<usize>,
}

impl ResidueProfile {
    pub fn count(&self, i: usize) -> usize {
        self.counts[i % self.t]
    }
}

/// The `t`-core of a partition together with every classification the
/// factorization theorems branch on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreClass {
    pub core: Partition,
    pub rank: usize,
    pub empty: bool,
    /// `Some(c)` when the core is the one-row partition `(c)`, `0 ≤ c < t`
    /// (the empty core counts as `c = 0`).
    pub single_row: Option<usize>,
    pub symplectic: bool,
    pub orthogonal: bool,
    pub self_conjugate: bool,
}

/// Classifies `core_t(λ)` from the residue counts of `β(λ, tn)` alone.
///
/// The one-row test uses padding `tn + 1`, where `core = (c)` is equivalent
/// to `n_c = n + 1` with every other class equal to `n`.
pub fn classify_core(lambda: &Partition, t: usize, n: usize) -> Result<CoreClass> {
    check_modulus(t)?;
    if lambda.len() > t * n {
        return Err(Error::LengthOverflow {
            length: lambda.len(),
            capacity: t * n,
        });
    }
    let c = lambda.residue_counts(t, t * n)?.counts;
    let c1 = lambda.residue_counts(t, t * n + 1)?.counts;

    let empty = c.iter().all(|&x| x == n);
    let single_row = (0..t).find(|&ci| {
        (0..t).all(|i| c1[i] == if i == ci { n + 1 } else { n })
    });
    let symplectic = c[t - 1] == n && (0..t - 1).all(|i| c[i] + c[t - 2 - i] == 2 * n);
    let orthogonal = c[0] == n && (1..t).all(|i| c[i] + c[t - i] == 2 * n);
    let self_conjugate = (0..t).all(|i| c[i] + c[t - 1 - i] == 2 * n);
    let rank = c.iter().map(|&x| x.saturating_sub(n)).sum();

    let core = lambda.t_core(t);
    debug_assert_eq!(core.rank(), rank);
    debug_assert_eq!(empty, core.is_empty());
    debug_assert_eq!(symplectic, core.is_z_asymmetric(1));
    debug_assert_eq!(orthogonal, core.is_z_asymmetric(-1));
    debug_assert_eq!(self_conjugate, core.is_z_asymmetric(0));

    Ok(CoreClass {
        core,
        rank,
        empty,
        single_row,
        symplectic,
        orthogonal,
        self_conjugate,
    })
}

/// A permutation sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(exponent: i64) -> Sign {
        if exponent.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Sign of a permutation given in one-line notation (any distinct keys).
pub fn permutation_sign(one_line: &[usize]) -> Sign {
    let mut v = one_line.to_vec();
    let mut buf = vec![0; v.len()];
    Sign::from_parity((count_inversions(&mut v, &mut buf) % 2) as i64)
}

fn count_inversions(v: &mut [usize], buf: &mut [usize]) -> u64 {
    let len = v.len();
    if len < 2 {
        return 0;
    }
    let mid = len / 2;
    let mut inv = count_inversions(&mut v[..mid], &mut buf[..mid])
        + count_inversions(&mut v[mid..], &mut buf[mid..]);
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < len {
        if v[i] <= v[j] {
            buf[k] = v[i];
            i += 1;
        } else {
            buf[k] = v[j];
            inv += (mid - i) as u64;
            j += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&v[i..mid]);
    k += mid - i;
    buf[k..k + len - j].copy_from_slice(&v[j..len]);
    v.copy_from_slice(&buf[..len]);
    inv
}

/// Positions (1-based) of `β(λ, m)` grouped by residue class in the given
/// class order, each block in decreasing order of entries.
fn blocked_positions(beta: &BetaSet, t: usize, classes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut one_line = Vec::with_capacity(beta.m());
    for q in classes {
        one_line.extend(
            beta.entries
                .iter()
                .enumerate()
                .filter(|&(_, &b)| b % t == q)
                .map(|(j, _)| j + 1),
        );
    }
    one_line
}

/// `sgn(σ_λ)`: the sign of the permutation sorting `β(λ, tn)` into residue
/// blocks `0, 1, …, t-1`.
pub fn sigma_sign(lambda: &Partition, t: usize, n: usize) -> Result<Sign> {
    check_modulus(t)?;
    if lambda.len() > t * n {
        return Err(Error::LengthOverflow {
            length: lambda.len(),
            capacity: t * n,
        });
    }
    let beta = lambda.beta_set(t * n)?;
    Ok(permutation_sign(&blocked_positions(&beta, t, 0..t)))
}

/// `sgn(σ^c_λ)` on `β(λ, tn + 1)`: class `c` first, then the remaining
/// classes in increasing order.
pub fn sigma_c_sign(lambda: &Partition, t: usize, n: usize, c: usize) -> Result<Sign> {
    check_modulus(t)?;
    if c >= t {
        return Err(Error::ResidueOutOfRange { residue: c, t });
    }
    if lambda.len() > t * n + 1 {
        return Err(Error::LengthOverflow {
            length: lambda.len(),
            capacity: t * n + 1,
        });
    }
    let beta = lambda.beta_set(t * n + 1)?;
    let order = std::iter::once(c).chain((0..t).filter(move |&i| i != c));
    Ok(permutation_sign(&blocked_positions(&beta, t, order)))
}

/// `back_1 + (front, 0, …, 0, -rev(back))`, padded to exactly `2n` entries.
pub fn mu_padded(front: &Partition, back: &Partition, n: usize) -> Result<Partition> {
    let total = 2 * n;
    if front.len() + back.len() > total {
        return Err(Error::LengthOverflow {
            length: front.len() + back.len(),
            capacity: total,
        });
    }
    let shift = back.first();
    let mut parts = Vec::with_capacity(total);
    parts.extend(front.parts().iter().map(|&p| p + shift));
    parts.resize(total - back.len(), shift);
    parts.extend(back.reversed().iter().map(|&p| shift - p));
    Partition::new(parts)
}

/// All partitions of `size` with at most `max_len` parts, in ascending
/// lexicographic order of their parts.
pub fn partitions_of(size: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(size, size, max_len, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    // The first part must be large enough for the rest to fit in the slots.
    let lo = remaining.div_ceil(slots).max(1);
    for p in lo..=max_part.min(remaining) {
        current.push(p);
        fill(remaining - p, p, slots - 1, current, out);
        current.pop();
    }
}

/// Every partition with `|λ| ≤ max_size` and `ℓ(λ) ≤ max_len`, ordered by
/// size and then lexicographically.
pub fn partitions_up_to(max_size: usize, max_len: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|s| partitions_of(s, max_len))
        .collect()
}

/// Elements of `β(λ, m)` as a set, handy for membership tests.
pub fn beta_entry_set(lambda: &Partition, m: usize) -> Result<BTreeSet<usize>> {
    Ok(lambda.beta_set(m)?.entries.into_iter().collect())
}

pub(crate) fn check_modulus(t: usize) -> Result<()> {
    if t < 2 {
        Err(Error::InvalidModulus(t))
    } else {
        Ok(())
    }
}
