//! Weyl characters of `GL_n`, `Sp_{2n}`, `O_{2n+1}` and `O_{2n}` as ratios of
//! alternants, evaluated at points of a cyclotomic field.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cyclotomic::{CycloElem, CycloField};
use crate::error::{Error, Result};
use crate::linalg::{determinant, DetStrategy};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupType {
    /// General linear group, Schur polynomial `s_λ`.
    GL,
    /// Symplectic group, `sp_λ`.
    SP,
    /// Odd orthogonal group, `oo_λ`.
    OO,
    /// Even orthogonal group, `oe_λ`.
    OE,
}

impl GroupType {
    pub const ALL: [GroupType; 4] = [GroupType::GL, GroupType::SP, GroupType::OO, GroupType::OE];

    /// Column entry `f(x, k)` of the alternant for exponent `k`.
    fn entry(self, powers: &PowerCache, k: usize) -> CycloElem {
        let k = k as i64;
        match self {
            GroupType::GL => powers.get(k),
            GroupType::SP => &powers.get(k + 1) - &powers.get(-k - 1),
            GroupType::OO => &powers.get(k + 1) - &powers.get(-k),
            GroupType::OE => &powers.get(k) + &powers.get(-k),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::GL => "gl",
            GroupType::SP => "sp",
            GroupType::OO => "oo",
            GroupType::OE => "oe",
        })
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(GroupType::GL),
            "sp" => Ok(GroupType::SP),
            "oo" => Ok(GroupType::OO),
            "oe" => Ok(GroupType::OE),
            other => Err(Error::Unsupported(format!("unknown group {other:?}"))),
        }
    }
}

/// Nonzero points `x_1, …, x_n` of one cyclotomic field.
#[derive(Clone, Debug, PartialEq)]
pub struct PointTuple {
    values: Vec<CycloElem>,
}

impl PointTuple {
    pub fn new(values: Vec<CycloElem>) -> Result<Self> {
        if values.iter().any(CycloElem::is_zero) {
            return Err(Error::DegeneratePoint("point"));
        }
        if let Some(w) = values.windows(2).find(|w| w[0].field().t() != w[1].field().t()) {
            return Err(Error::FieldMismatch(w[0].field().t(), w[1].field().t()));
        }
        Ok(PointTuple { values })
    }

    /// Embeds positive or negative rationals into `Q(ω_t)`.
    pub fn from_rationals(field: &Arc<CycloField>, values: &[BigRational]) -> Result<Self> {
        Self::new(values.iter().map(|v| field.from_rational(v.clone())).collect())
    }

    pub fn values(&self) -> &[CycloElem] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `X^k` entrywise (negative `k` inverts).
    pub fn powers(&self, k: i64) -> PointTuple {
        PointTuple {
            values: self
                .values
                .iter()
                .map(|x| x.pow(k).expect("points are nonzero"))
                .collect(),
        }
    }

    /// `X̄ = (x_1⁻¹, …, x_n⁻¹)`.
    pub fn inverses(&self) -> PointTuple {
        self.powers(-1)
    }

    /// `-X`.
    pub fn negated(&self) -> PointTuple {
        PointTuple {
            values: self.values.iter().map(|x| -x).collect(),
        }
    }

    pub fn scaled(&self, a: &CycloElem) -> Result<PointTuple> {
        PointTuple::new(self.values.iter().map(|x| x * a).collect())
    }

    /// Concatenation `(X, Y)`.
    pub fn concat(&self, other: &PointTuple) -> PointTuple {
        let mut values = self.values.clone();
        values.extend(other.values.iter().cloned());
        PointTuple { values }
    }

    pub fn with(&self, extra: CycloElem) -> Result<PointTuple> {
        let mut values = self.values.clone();
        values.push(extra);
        PointTuple::new(values)
    }
}

/// `(X, ωX, …, ω^{t-1}X)` in block order. The points' field must contain the
/// `t`-th roots of unity.
pub fn twisted_points(pts: &PointTuple, t: usize) -> Result<PointTuple> {
    let Some(first) = pts.values.first() else {
        return Ok(pts.clone());
    };
    let field = Arc::clone(first.field());
    if t == 0 || field.t() % t != 0 {
        return Err(Error::Unsupported(format!(
            "Q(ω_{}) does not contain the {t}-th roots of unity",
            field.t()
        )));
    }
    let step = (field.t() / t) as i64;
    let mut values = Vec::with_capacity(t * pts.n());
    for k in 0..t as i64 {
        let w = field.omega_pow(k * step);
        values.extend(pts.values.iter().map(|x| &w * x));
    }
    Ok(PointTuple { values })
}

/// Positive and negative powers of one point, filled on demand.
struct PowerCache {
    pos: Vec<CycloElem>,
    neg: Vec<CycloElem>,
}

impl PowerCache {
    fn new(x: &CycloElem, max_exp: usize) -> Self {
        let inv = x.inverse().expect("points are nonzero");
        let mut pos = vec![x.field().one()];
        let mut neg = vec![x.field().one()];
        for k in 1..=max_exp {
            pos.push(&pos[k - 1] * x);
            neg.push(&neg[k - 1] * &inv);
        }
        PowerCache { pos, neg }
    }

    fn get(&self, k: i64) -> CycloElem {
        if k >= 0 {
            self.pos[k as usize].clone()
        } else {
            self.neg[k.unsigned_abs() as usize].clone()
        }
    }
}

fn alternant(g: GroupType, exps: &[usize], caches: &[PowerCache]) -> Vec<Vec<CycloElem>> {
    caches
        .iter()
        .map(|c| exps.iter().map(|&k| g.entry(c, k)).collect())
        .collect()
}

/// The Weyl denominator of `g` at `pts`, i.e. the alternant of `λ = ∅`.
pub fn weyl_denominator(g: GroupType, pts: &PointTuple) -> Result<CycloElem> {
    let unit = unit_of(pts)?;
    let n = pts.n();
    let exps: Vec<usize> = (0..n).rev().collect();
    let caches: Vec<PowerCache> = pts.values.iter().map(|x| PowerCache::new(x, n + 1)).collect();
    determinant(alternant(g, &exps, &caches), &unit, DetStrategy::Gauss)
}

fn unit_of(pts: &PointTuple) -> Result<CycloElem> {
    pts.values
        .first()
        .map(|x| x.field().one())
        .ok_or_else(|| Error::DimensionMismatch("empty point tuple".into()))
}

/// `s_λ`, `sp_λ`, `oo_λ` or `oe_λ` at `pts` as a ratio of alternants.
///
/// Fails with [`Error::LengthExceedsVariables`] when `ℓ(λ) > n`, where the
/// character is zero by convention.
pub fn weyl_character(g: GroupType, lambda: &Partition, pts: &PointTuple) -> Result<CycloElem> {
    weyl_character_with(g, lambda, pts, DetStrategy::Gauss)
}

pub fn weyl_character_with(
    g: GroupType,
    lambda: &Partition,
    pts: &PointTuple,
    strategy: DetStrategy,
) -> Result<CycloElem> {
    let n = pts.n();
    if lambda.len() > n {
        return Err(Error::LengthExceedsVariables {
            length: lambda.len(),
            variables: n,
        });
    }
    let unit = unit_of(pts)?;
    let beta = lambda.beta_set(n)?;
    let exps = beta.entries();
    let caches: Vec<PowerCache> = pts
        .values
        .iter()
        .map(|x| PowerCache::new(x, exps[0] + 1))
        .collect();
    let delta: Vec<usize> = (0..n).rev().collect();
    let den = determinant(alternant(g, &delta, &caches), &unit, strategy)?;
    if den.is_zero() {
        return Err(Error::DegeneratePoint("Weyl"));
    }
    let num = determinant(alternant(g, exps, &caches), &unit, strategy)?;
    let mut value = num.checked_div(&den)?;
    if g == GroupType::OE && lambda.part(n - 1) == 0 {
        value = value.scale(&BigRational::new(1.into(), 2.into()));
    }
    Ok(value)
}

/// Like [`weyl_character`] but maps the `ℓ(λ) > n` convention to zero.
pub fn weyl_character_or_zero(
    g: GroupType,
    lambda: &Partition,
    pts: &PointTuple,
) -> Result<CycloElem> {
    match weyl_character(g, lambda, pts) {
        Err(Error::LengthExceedsVariables { .. }) => Ok(unit_of(pts)?.field().zero()),
        other => other,
    }
}

/// Default retry budget of [`sample_points`].
pub const SAMPLE_ATTEMPTS: usize = 1000;

/// Distinct positive rationals `x_i ≠ 1` with `x_i x_j ≠ 1`, embedded in
/// `Q(ω_t)`. For positive reals these rule out every vanishing denominator
/// met by the verifications: twisted points `ω^a x_i` only collide or pair to
/// `1` when the moduli do.
pub fn sample_points(n: usize, t: usize, seed: u64) -> Result<PointTuple> {
    sample_points_with(n, t, seed, SAMPLE_ATTEMPTS)
}

pub fn sample_points_with(n: usize, t: usize, seed: u64, attempts: usize) -> Result<PointTuple> {
    if t < 1 {
        return Err(Error::InvalidModulus(t));
    }
    let field = CycloField::new(t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: Vec<BigRational> = Vec::with_capacity(n);
    let mut tries = 0;
    while chosen.len() < n {
        if tries == attempts {
            return Err(Error::SamplingExhausted(attempts));
        }
        tries += 1;
        let num: i64 = rng.gen_range(1..=13);
        let den: i64 = rng.gen_range(1..=7);
        let x = BigRational::new(num.into(), den.into());
        if admissible(&x, &chosen) {
            chosen.push(x);
        }
    }
    PointTuple::from_rationals(&field, &chosen)
}

fn admissible(x: &BigRational, chosen: &[BigRational]) -> bool {
    !x.is_zero()
        && !x.is_one()
        && chosen.iter().all(|y| y != x && !(x * y).is_one())
}
