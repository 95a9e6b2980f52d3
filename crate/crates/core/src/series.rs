//! Truncated power series for counting `z`-asymmetric partitions and
//! `z`-asymmetric `t`-cores, and the lattice parameterization of the cores.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{check_modulus, partitions_of, BetaSet, Partition};

/// Integer power series in `q` truncated after `q^order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesZ {
    coeffs: Vec<i64>,
}

impl SeriesZ {
    pub fn zero(order: usize) -> Self {
        SeriesZ {
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = 1;
        s
    }

    /// Pads or truncates `coeffs` to `order + 1` terms.
    pub fn from_coeffs(mut coeffs: Vec<i64>, order: usize) -> Self {
        coeffs.resize(order + 1, 0);
        SeriesZ { coeffs }
    }

    /// `1 + q^k`, truncated.
    pub fn one_plus_monomial(k: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if k <= order {
            s.coeffs[k] += 1;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `q^k`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Exponents with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&k| self.coeffs[k] != 0).collect()
    }

    pub fn add(&self, other: &SeriesZ) -> SeriesZ {
        let order = self.order().min(other.order());
        SeriesZ {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].checked_add(other.coeffs[k]).expect("coefficient overflow"))
                .collect(),
        }
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &SeriesZ) -> SeriesZ {
        let order = self.order().min(other.order());
        let mut out = vec![0i64; order + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                let term = a.checked_mul(b).expect("coefficient overflow");
                out[i + j] = out[i + j].checked_add(term).expect("coefficient overflow");
            }
        }
        SeriesZ { coeffs: out }
    }

    pub fn truncate(&self, order: usize) -> SeriesZ {
        SeriesZ::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    /// Counts partitions by size.
    pub fn counting<'a>(items: impl IntoIterator<Item = &'a Partition>, order: usize) -> SeriesZ {
        let mut s = Self::zero(order);
        for p in items {
            if p.size() <= order {
                s.coeffs[p.size()] += 1;
            }
        }
        s
    }
}

impl fmt::Display for SeriesZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// Number of `z`-asymmetric partitions of each size, by brute-force
/// enumeration.
pub fn enum_z_asymmetric(z: i64, order: usize) -> SeriesZ {
    let coeffs = (0..=order)
        .map(|m| {
            partitions_of(m, m)
                .iter()
                .filter(|p| p.is_z_asymmetric(z))
                .count() as i64
        })
        .collect();
    SeriesZ { coeffs }
}

/// `∏ (1 + q^{z+1+2k})` over `k ≥ 0` with `z + 1 + 2k ≥ 1`.
///
/// A `z`-asymmetric partition `(α | α + z)` corresponds to the distinct parts
/// `2α_i + z + 1`; for `z = -1` the leg `α_i - 1 ≥ 0` rules out the part 0.
pub fn gf_z_asymmetric(z: i64, order: usize) -> SeriesZ {
    let mut s = SeriesZ::one(order);
    let mut part = z + 1;
    while part <= order as i64 {
        if part >= 1 {
            s = s.mul(&SeriesZ::one_plus_monomial(part as usize, order));
        }
        part += 2;
    }
    s
}

/// The distinct parts `2α_i + z + 1` attached to a `z`-asymmetric partition.
pub fn distinct_parts_image(lambda: &Partition, z: i64) -> Option<Vec<i64>> {
    if !lambda.is_z_asymmetric(z) {
        return None;
    }
    Some(
        lambda
            .frobenius()
            .alpha
            .iter()
            .map(|&a| 2 * a as i64 + z + 1)
            .collect(),
    )
}

/// The theta function `f(q^a, q^b) = Σ_{n∈Z} q^{a·n(n+1)/2 + b·n(n-1)/2}`.
pub fn theta_f(a: i64, b: i64, order: usize) -> Result<SeriesZ> {
    if a + b <= 0 {
        return Err(Error::NonpositiveGrowth(a + b));
    }
    if a < 0 || b < 0 {
        return Err(Error::NegativeThetaExponent(a, b));
    }
    let exponent = |n: i64| ((a + b) * n * n + (a - b) * n) / 2;
    let mut s = SeriesZ::zero(order);
    // The exponent is nondecreasing in |n| on each side when a, b ≥ 0.
    for dir in [1i64, -1] {
        let mut k = if dir == 1 { 0 } else { -1 };
        loop {
            let e = exponent(k);
            if e > order as i64 {
                break;
            }
            s.coeffs[e as usize] += 1;
            k += dir;
        }
    }
    Ok(s)
}

fn check_z_range(z: i64, t: usize) -> Result<()> {
    check_modulus(t)?;
    if z < 0 || z > t as i64 - 2 {
        return Err(Error::Unsupported(format!(
            "lattice formulas need 0 <= z <= t - 2 (got z = {z}, t = {t}); \
             z = -1 is handled through conjugation of z = 1"
        )));
    }
    Ok(())
}

/// `∏_{i=0}^{⌊(t-z-2)/2⌋} f(q^{2i+z+1}, q^{2t-2i-z-1})`, the generating
/// function of `z`-asymmetric `t`-cores for `0 ≤ z ≤ t - 2`.
pub fn gf_z_cores(z: i64, t: usize, order: usize) -> Result<SeriesZ> {
    check_z_range(z, t)?;
    let ti = t as i64;
    let mut s = SeriesZ::one(order);
    for i in 0..=(ti - z - 2) / 2 {
        s = s.mul(&theta_f(2 * i + z + 1, 2 * ti - 2 * i - z - 1, order)?);
    }
    Ok(s)
}

/// A point of the lattice `Z^{⌊(t-z)/2⌋}` parameterizing `z`-asymmetric
/// `t`-cores.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticeVec {
    pub components: Vec<i64>,
}

impl LatticeVec {
    pub fn dimension(z: i64, t: usize) -> usize {
        ((t as i64 - z) / 2) as usize
    }

    /// `b_i = t - z - 1 - 2i`.
    pub fn weights(z: i64, t: usize) -> Vec<i64> {
        (0..Self::dimension(z, t) as i64)
            .map(|i| t as i64 - z - 1 - 2 * i)
            .collect()
    }

    /// `t‖v‖² - b·v`, the size of the core this vector parameterizes.
    pub fn size(&self, z: i64, t: usize) -> i64 {
        let b = Self::weights(z, t);
        self.components
            .iter()
            .zip(&b)
            .map(|(&v, &bi)| t as i64 * v * v - bi * v)
            .sum()
    }

    pub fn sup_norm(&self) -> i64 {
        self.components.iter().map(|v| v.abs()).max().unwrap_or(0)
    }
}

/// `(n_i(λ, tn) - n)_{0 ≤ i ≤ ⌊(t-z-2)/2⌋}` for a `z`-asymmetric `t`-core.
pub fn phi(lambda: &Partition, z: i64, t: usize) -> Result<LatticeVec> {
    check_z_range(z, t)?;
    if !lambda.is_z_asymmetric(z) || !lambda.is_t_core(t) {
        return Err(Error::NotAZCore {
            partition: lambda.to_string(),
            z,
            t,
        });
    }
    let n = lambda.len().div_ceil(t);
    let counts = lambda.residue_counts(t, t * n)?.counts;
    Ok(LatticeVec {
        components: (0..LatticeVec::dimension(z, t))
            .map(|i| counts[i] as i64 - n as i64)
            .collect(),
    })
}

/// Inverse of [`phi`]: fills residue class `i` with `m_i` entries
/// `i, t + i, …` where `m_i = n + v_i` on the low classes, `n - v_{t-z-1-i}`
/// on their partners and `n` elsewhere, `n = max |v_i|`.
pub fn phi_inverse(v: &LatticeVec, z: i64, t: usize) -> Result<Partition> {
    check_z_range(z, t)?;
    let dim = LatticeVec::dimension(z, t);
    if v.components.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "lattice vector of length {} for dimension {dim}",
            v.components.len()
        )));
    }
    let n = v.sup_norm();
    let ti = t as i64;
    let low_max = (ti - z - 2).div_euclid(2);
    let high_min = (ti - z + 1).div_euclid(2);
    let mut entries = Vec::new();
    for i in 0..ti {
        let m_i = if i <= low_max {
            n + v.components[i as usize]
        } else if i >= high_min && i <= ti - z - 1 {
            n - v.components[(ti - z - 1 - i) as usize]
        } else {
            n
        };
        entries.extend((0..m_i).map(|j| (ti * j + i) as usize));
    }
    entries.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BetaSet::new(entries)?.to_partition())
}

/// Every lattice vector of the given dimension whose size is at most `max_size`.
pub fn lattice_ball(z: i64, t: usize, max_size: usize) -> Vec<LatticeVec> {
    let b = LatticeVec::weights(z, t);
    let ti = t as i64;
    let budget = max_size as i64;
    // Each coordinate contributes t v² - b v ≥ 0 since 1 ≤ b ≤ t - 1.
    let ranges: Vec<Vec<(i64, i64)>> = b
        .iter()
        .map(|&bi| {
            let cost = |v: i64| ti * v * v - bi * v;
            let mut bound = 0;
            while cost(bound + 1) <= budget || cost(-bound - 1) <= budget {
                bound += 1;
            }
            (-bound..=bound)
                .map(|v| (v, ti * v * v - bi * v))
                .filter(|&(_, c)| c <= budget)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(b.len());
    fn rec(ranges: &[Vec<(i64, i64)>], left: i64, current: &mut Vec<i64>, out: &mut Vec<LatticeVec>) {
        let Some((first, rest)) = ranges.split_first() else {
            out.push(LatticeVec {
                components: current.clone(),
            });
            return;
        };
        for &(v, c) in first {
            if c <= left {
                current.push(v);
                rec(rest, left - c, current, out);
                current.pop();
            }
        }
    }
    rec(&ranges, budget, &mut current, &mut out);
    out
}

/// All `z`-asymmetric `t`-cores of size at most `max_size`, sorted by size and
/// then lexicographically.
///
/// For `0 ≤ z ≤ t - 2` these are the images of the lattice ball under
/// [`phi_inverse`]; `z = -1` takes conjugates of the `z = 1` cores; for
/// `z > t - 2` only the empty partition qualifies.
pub fn enum_z_cores(z: i64, t: usize, max_size: usize) -> Result<Vec<Partition>> {
    check_modulus(t)?;
    let mut cores = if z == -1 {
        enum_z_cores(1, t, max_size)?
            .iter()
            .map(Partition::conjugate)
            .collect()
    } else if z > t as i64 - 2 {
        vec![Partition::empty()]
    } else if z < -1 {
        return Err(Error::Unsupported(format!("z = {z} is below -1")));
    } else {
        lattice_ball(z, t, max_size)
            .iter()
            .map(|v| phi_inverse(v, z, t))
            .collect::<Result<Vec<_>>>()?
    };
    cores.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    cores.dedup();
    Ok(cores)
}
