//! Both sides of the factorization theorems for characters evaluated at
//! `(X, ωX, …, ω^{t-1}X)`, and an exact comparison harness.
//!
//! Left-hand sides are computed directly as Weyl characters in `tn` (or
//! `tn + 1`) variables. Right-hand sides are assembled from the `t`-quotient
//! read off `β(λ, tn)` (or `β(λ, tn + 1)`), the permutation sign of the
//! residue sort, and characters of smaller groups at `X^t` and `X̄^t`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::characters::{sample_points, twisted_points, weyl_character, GroupType, PointTuple};
use crate::cyclotomic::CycloElem;
use crate::error::{Error, Result};
use crate::linalg::{determinant, DetStrategy};
use crate::partitions::{
    check_modulus, classify_core, mu_padded, partitions_up_to, sigma_c_sign, sigma_sign,
    Partition, Sign,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `s_λ` in `tn` twisted variables.
    SchurFac,
    /// `s_λ` in `tn` twisted variables and the extra variable `1`.
    SchurOne,
    /// `sp_λ` in `tn` twisted variables.
    Symplectic,
    /// `oe_λ` in `tn` twisted variables.
    EvenOrth,
    /// `oo_λ` in `tn` twisted variables.
    OddOrth,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [
        TheoremId::SchurFac,
        TheoremId::SchurOne,
        TheoremId::Symplectic,
        TheoremId::EvenOrth,
        TheoremId::OddOrth,
    ];

    pub fn group(self) -> GroupType {
        match self {
            TheoremId::SchurFac | TheoremId::SchurOne => GroupType::GL,
            TheoremId::Symplectic => GroupType::SP,
            TheoremId::EvenOrth => GroupType::OE,
            TheoremId::OddOrth => GroupType::OO,
        }
    }

    /// Padding of the beta set the theorem reads its quotient from; also the
    /// largest admissible `ℓ(λ)`.
    pub fn padding(self, t: usize, n: usize) -> usize {
        match self {
            TheoremId::SchurOne => t * n + 1,
            _ => t * n,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::SchurFac => "schurfac",
            TheoremId::SchurOne => "schur1",
            TheoremId::Symplectic => "sympfact",
            TheoremId::EvenOrth => "eorthfact",
            TheoremId::OddOrth => "oorthfact",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "schurfac" | "schur" => Ok(TheoremId::SchurFac),
            "schur1" | "schurone" => Ok(TheoremId::SchurOne),
            "sympfact" | "symplectic" | "sp" => Ok(TheoremId::Symplectic),
            "eorthfact" | "evenorth" | "oe" => Ok(TheoremId::EvenOrth),
            "oorthfact" | "oddorth" | "oo" => Ok(TheoremId::OddOrth),
            other => Err(Error::Unsupported(format!("unknown theorem {other:?}"))),
        }
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn check_length(th: TheoremId, lambda: &Partition, t: usize, n: usize) -> Result<()> {
    check_modulus(t)?;
    if n == 0 {
        return Err(Error::Unsupported("n must be at least 1".into()));
    }
    let cap = th.padding(t, n);
    if lambda.len() > cap {
        return Err(Error::LengthOverflow {
            length: lambda.len(),
            capacity: cap,
        });
    }
    Ok(())
}

/// Whether the theorem predicts `LHS = 0`, read off the `t`-core.
pub fn predicted_vanishing(th: TheoremId, lambda: &Partition, t: usize, n: usize) -> Result<bool> {
    check_length(th, lambda, t, n)?;
    if th == TheoremId::SchurOne {
        return Ok(lambda.t_core(t).len() > 1);
    }
    let class = classify_core(lambda, t, n)?;
    Ok(match th {
        TheoremId::SchurFac => !class.empty,
        TheoremId::Symplectic => !class.symplectic,
        TheoremId::EvenOrth => !class.orthogonal,
        TheoremId::OddOrth => !class.self_conjugate,
        TheoremId::SchurOne => unreachable!(),
    })
}

fn binom2(a: i64) -> i64 {
    a * (a - 1) / 2
}

/// The exponent `ε` of the global sign `(-1)^ε`, excluding the sign of the
/// residue-sorting permutation. Only its parity matters.
///
/// For the two Schur cases this is `t(t-1)/2 · n(n+1)/2` (minus `cn` when the
/// core is the row `(c)`).
pub fn epsilon(th: TheoremId, lambda: &Partition, t: usize, n: usize) -> Result<i64> {
    if predicted_vanishing(th, lambda, t, n)? {
        return Err(Error::EpsilonUndefined(format!(
            "{th}: core of {lambda} is outside the nonvanishing class for t = {t}"
        )));
    }
    let (ti, ni) = (t as i64, n as i64);
    let base = (ti * (ti - 1) / 2) * (ni * (ni + 1) / 2);
    if th == TheoremId::SchurFac {
        return Ok(base);
    }
    if th == TheoremId::SchurOne {
        let c = lambda.t_core(t).first() as i64;
        return Ok(base - c * ni);
    }
    let counts: Vec<i64> = lambda
        .residue_counts(t, t * n)?
        .counts
        .iter()
        .map(|&c| c as i64)
        .collect();
    let r = lambda.t_core(t).rank() as i64;
    let even = t % 2 == 0;
    Ok(match th {
        TheoremId::Symplectic => {
            let s: i64 = (t / 2..t - 1).map(|i| binom2(counts[i] + 1)).sum();
            -s + if even { ni * (ni + 1) / 2 + ni * r } else { 0 }
        }
        TheoremId::EvenOrth => {
            let s: i64 = ((t + 2) / 2..t).map(|i| binom2(counts[i])).sum();
            -s + if even {
                ni * (ni + ti - 1) / 2 + ni * r
            } else {
                (ti - 1) * ni / 2
            }
        }
        TheoremId::OddOrth => {
            let s: i64 = (t / 2..t).map(|i| binom2(counts[i] + 1)).sum();
            -s + if even { 0 } else { ni * r + ni * (ni + 1) / 2 }
        }
        TheoremId::SchurFac | TheoremId::SchurOne => unreachable!(),
    })
}

/// The permutation sign that multiplies `(-1)^ε`.
pub fn theorem_sigma(th: TheoremId, lambda: &Partition, t: usize, n: usize) -> Result<Sign> {
    match th {
        TheoremId::SchurOne => {
            let c = lambda.t_core(t).first();
            if c >= t {
                return Err(Error::EpsilonUndefined(format!("core ({c}) is not a {t}-core row")));
            }
            sigma_c_sign(lambda, t, n, c)
        }
        _ => sigma_sign(lambda, t, n),
    }
}

/// Evaluation points shared by every factor on the right-hand side.
struct RhsPoints {
    xt: PointTuple,
    xt_bar: PointTuple,
}

impl RhsPoints {
    fn new(pts: &PointTuple, t: usize) -> Self {
        RhsPoints {
            xt: pts.powers(t as i64),
            xt_bar: pts.powers(-(t as i64)),
        }
    }

    /// `(X^t, X̄^t)`.
    fn both(&self) -> PointTuple {
        self.xt.concat(&self.xt_bar)
    }
}

/// The right-hand side of the theorem at `X = pts`; zero when the theorem
/// predicts vanishing.
pub fn rhs_value(th: TheoremId, lambda: &Partition, t: usize, n: usize, pts: &PointTuple) -> Result<CycloElem> {
    check_length(th, lambda, t, n)?;
    if pts.n() != n {
        return Err(Error::DimensionMismatch(format!("{} points for n = {n}", pts.n())));
    }
    let field = pts.values()[0].field().clone();
    if predicted_vanishing(th, lambda, t, n)? {
        return Ok(field.zero());
    }
    let m = th.padding(t, n);
    let quo = lambda.t_quotient(t, m)?;
    let p = RhsPoints::new(pts, t);
    let sign = Sign::from_parity(epsilon(th, lambda, t, n)?) * theorem_sigma(th, lambda, t, n)?;

    let gl = |mu: &Partition, at: &PointTuple| weyl_character(GroupType::GL, mu, at);
    let mut factors: Vec<CycloElem> = Vec::new();
    match th {
        TheoremId::SchurFac => {
            for q in &quo {
                factors.push(gl(q, &p.xt)?);
            }
        }
        TheoremId::SchurOne => {
            let c = lambda.t_core(t).first();
            for (i, q) in quo.iter().enumerate() {
                if i == c {
                    factors.push(gl(q, &p.xt.with(field.one())?)?);
                } else {
                    factors.push(gl(q, &p.xt)?);
                }
            }
        }
        TheoremId::Symplectic => {
            factors.push(weyl_character(GroupType::SP, &quo[t - 1], &p.xt)?);
            let both = p.both();
            for i in 0..(t - 1) / 2 {
                factors.push(gl(&mu_padded(&quo[i], &quo[t - 2 - i], n)?, &both)?);
            }
            if t % 2 == 0 {
                factors.push(weyl_character(GroupType::OO, &quo[t / 2 - 1], &p.xt)?);
            }
        }
        TheoremId::EvenOrth => {
            factors.push(weyl_character(GroupType::OE, &quo[0], &p.xt)?);
            let both = p.both();
            for i in 1..=(t - 1) / 2 {
                factors.push(gl(&mu_padded(&quo[i], &quo[t - i], n)?, &both)?);
            }
            if t % 2 == 0 {
                let half = &quo[t / 2];
                let mut oo = weyl_character(GroupType::OO, half, &p.xt.negated())?;
                if half.size() % 2 == 1 {
                    oo = -oo;
                }
                factors.push(oo);
            }
        }
        TheoremId::OddOrth => {
            let both = p.both();
            for i in 0..=(t - 2) / 2 {
                factors.push(gl(&mu_padded(&quo[i], &quo[t - 1 - i], n)?, &both)?);
            }
            if t % 2 == 1 {
                factors.push(weyl_character(GroupType::OO, &quo[(t - 1) / 2], &p.xt)?);
            }
        }
    }
    let product = factors.iter().fold(field.one(), |acc, f| &acc * f);
    Ok(if sign.is_minus() { -product } else { product })
}

/// The left-hand side: the character of the theorem's group at the twisted
/// points (with `1` appended for the Schur-one case).
pub fn lhs_value(th: TheoremId, lambda: &Partition, t: usize, n: usize, pts: &PointTuple) -> Result<CycloElem> {
    check_length(th, lambda, t, n)?;
    if pts.n() != n {
        return Err(Error::DimensionMismatch(format!("{} points for n = {n}", pts.n())));
    }
    let mut tw = twisted_points(pts, t)?;
    if th == TheoremId::SchurOne {
        let one = tw.values()[0].field().one();
        tw = tw.with(one)?;
    }
    weyl_character(th.group(), lambda, &tw)
}

/// Outcome at one sample point.
#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub points: Vec<String>,
    pub lhs: CycloElem,
    pub rhs: CycloElem,
    #[serde(rename = "match")]
    pub matched: bool,
}

/// One theorem checked for one `(λ, t, n, seed)` over several sample points.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub lambda: Partition,
    pub t: usize,
    pub n: usize,
    pub seed: u64,
    pub predicted_vanishing: bool,
    /// `LHS = 0` at every trial.
    pub observed_vanishing: bool,
    /// Parity of `ε`; absent when the theorem predicts vanishing.
    pub sign_exponent: Option<i64>,
    pub sigma_sign: Option<Sign>,
    /// Values at the first trial.
    pub lhs: CycloElem,
    pub rhs: CycloElem,
    #[serde(rename = "match")]
    pub matched: bool,
    pub trials: Vec<TrialRecord>,
}

impl VerificationReport {
    /// LHS equals RHS at every trial and the vanishing prediction agrees with
    /// what was observed.
    pub fn passed(&self) -> bool {
        self.matched && self.predicted_vanishing == self.observed_vanishing
    }
}

/// Seed of the `k`-th trial derived from the user seed.
pub fn trial_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k as u64)
}

/// Compares both sides exactly at `trials` sampled point tuples.
pub fn verify(th: TheoremId, lambda: &Partition, t: usize, n: usize, seed: u64, trials: usize) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let predicted = predicted_vanishing(th, lambda, t, n)?;
    let (sign_exponent, sigma) = if predicted {
        (None, None)
    } else {
        (
            Some(epsilon(th, lambda, t, n)?.rem_euclid(2)),
            Some(theorem_sigma(th, lambda, t, n)?),
        )
    };
    let mut records = Vec::with_capacity(trials);
    for k in 0..trials {
        let pts = sample_points(n, t, trial_seed(seed, k))?;
        let lhs = lhs_value(th, lambda, t, n, &pts)?;
        let rhs = rhs_value(th, lambda, t, n, &pts)?;
        records.push(TrialRecord {
            points: pts.values().iter().map(|v| v.to_string()).collect(),
            matched: lhs == rhs,
            lhs,
            rhs,
        });
    }
    Ok(VerificationReport {
        theorem: th,
        lambda: lambda.clone(),
        t,
        n,
        seed,
        predicted_vanishing: predicted,
        observed_vanishing: records.iter().all(|r| r.lhs.is_zero()),
        sign_exponent,
        sigma_sign: sigma,
        lhs: records[0].lhs.clone(),
        rhs: records[0].rhs.clone(),
        matched: records.iter().all(|r| r.matched),
        trials: records,
    })
}

/// One `(theorem, t, n, λ, seed)` work item of a scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanCase {
    pub theorem: TheoremId,
    pub t: usize,
    pub n: usize,
    pub lambda: Partition,
    pub seed: u64,
}

/// All cases with `|λ| ≤ max_size` and `ℓ(λ)` within each theorem's bound,
/// ordered by theorem, `t`, `n`, `|λ|`, `λ` (lexicographic), seed.
pub fn scan_cases(theorems: &[TheoremId], ts: &[usize], ns: &[usize], max_size: usize, seeds: &[u64]) -> Vec<ScanCase> {
    let mut cases = Vec::new();
    for &theorem in theorems {
        for &t in ts {
            for &n in ns {
                for lambda in partitions_up_to(max_size, theorem.padding(t, n)) {
                    for &seed in seeds {
                        cases.push(ScanCase {
                            theorem,
                            t,
                            n,
                            lambda: lambda.clone(),
                            seed,
                        });
                    }
                }
            }
        }
    }
    cases
}

/// Verifies every case in parallel; results come back in input order.
pub fn scan(cases: &[ScanCase], trials: usize) -> Vec<Result<VerificationReport>> {
    cases
        .par_iter()
        .map(|c| verify(c.theorem, &c.lambda, c.t, c.n, c.seed, trials))
        .collect()
}

/// Tallies of a finished scan.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub cases: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub vanish_confirmed: usize,
    pub vanish_disagreements: usize,
    pub errors: usize,
}

impl ScanSummary {
    pub fn tally<'a>(results: impl IntoIterator<Item = &'a Result<VerificationReport>>) -> Self {
        let mut s = ScanSummary::default();
        for r in results {
            s.cases += 1;
            match r {
                Ok(rep) => {
                    if rep.matched {
                        s.matches += 1;
                    } else {
                        s.mismatches += 1;
                    }
                    if rep.predicted_vanishing != rep.observed_vanishing {
                        s.vanish_disagreements += 1;
                    } else if rep.predicted_vanishing {
                        s.vanish_confirmed += 1;
                    }
                }
                Err(_) => s.errors += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.mismatches == 0 && self.vanish_disagreements == 0 && self.errors == 0
    }
}

/// Data and result of one randomized block-determinant check.
#[derive(Clone, Debug)]
pub struct BlockLemmaOutcome {
    pub balanced: bool,
    pub det_pi: BigRational,
    pub predicted: BigRational,
    /// Diagonal and antidiagonal arrangements of the `W` blocks obey the
    /// block-matrix determinant rules.
    pub matrix_rules_hold: bool,
}

impl BlockLemmaOutcome {
    pub fn holds(&self) -> bool {
        self.det_pi == self.predicted && self.matrix_rules_hold
    }
}

type Mat = Vec<Vec<BigRational>>;

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Mat {
    (0..rows)
        .map(|_| (0..cols).map(|_| random_rational(rng)).collect())
        .collect()
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-5..=5);
    let den: i64 = rng.gen_range(1..=3);
    BigRational::new(num.into(), den.into())
}

fn lin_comb(a: &BigRational, u: &Mat, b: &BigRational, v: &Mat) -> Mat {
    u.iter()
        .zip(v)
        .map(|(ru, rv)| ru.iter().zip(rv).map(|(x, y)| a * x - b * y).collect())
        .collect()
}

fn hstack(blocks: &[&Mat]) -> Mat {
    let rows = blocks[0].len();
    (0..rows)
        .map(|i| blocks.iter().flat_map(|b| b[i].iter().cloned()).collect())
        .collect()
}

fn scaled(m: &Mat, c: i64) -> Mat {
    let c = BigRational::from_integer(c.into());
    m.iter().map(|r| r.iter().map(|x| x * &c).collect()).collect()
}

fn det(m: Mat) -> BigRational {
    let one = BigRational::from_integer(1.into());
    if m.first().is_some_and(|r| r.len() != m.len()) {
        return BigRational::from_integer(0.into());
    }
    determinant(m, &one, DetStrategy::Gauss).expect("square rational matrix")
}

/// Places blocks `T_i` (`ℓ_i × m_i`) along the diagonal, or along the
/// antidiagonal with `T_1` in the top-right corner.
pub fn block_arrangement(blocks: &[Mat], col_widths: &[usize], anti: bool) -> Mat {
    let total_cols: usize = col_widths.iter().sum();
    let zero = BigRational::from_integer(0.into());
    let mut out = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let offset: usize = if anti {
            col_widths[i + 1..].iter().sum()
        } else {
            col_widths[..i].iter().sum()
        };
        for row in b {
            let mut r = vec![zero.clone(); total_cols];
            r[offset..offset + row.len()].clone_from_slice(row);
            out.push(r);
        }
    }
    out
}

/// Checks the diagonal/antidiagonal block rules on `blocks`: both vanish
/// unless every block is square, and otherwise
/// `det(diag) = ∏ det T_i = (-1)^{Σ_{i<j} m_i m_j} det(antidiag)`.
pub fn check_block_arrangements(blocks: &[Mat], col_widths: &[usize]) -> bool {
    let square = blocks
        .iter()
        .zip(col_widths)
        .all(|(b, &w)| b.len() == w);
    let total_rows: usize = blocks.iter().map(Vec::len).sum();
    let total_cols: usize = col_widths.iter().sum();
    if total_rows != total_cols {
        return false;
    }
    let d_diag = det(block_arrangement(blocks, col_widths, false));
    let d_anti = det(block_arrangement(blocks, col_widths, true));
    if !square {
        return d_diag == BigRational::from_integer(0.into()) && d_anti == d_diag;
    }
    let prod = blocks
        .iter()
        .fold(BigRational::from_integer(1.into()), |acc, b| acc * det(b.clone()));
    let cross: usize = (0..col_widths.len())
        .flat_map(|i| (i + 1..col_widths.len()).map(move |j| (i, j)))
        .map(|(i, j)| col_widths[i] * col_widths[j])
        .sum();
    let anti_signed = if cross % 2 == 0 { d_anti } else { -d_anti };
    d_diag == prod && anti_signed == prod
}

/// The block determinant `Π` built from random `U_j`, `V_j` (`n × u_j`) and a
/// random `γ` with its last column repeated, checked against the predicted
/// closed form (zero unless `u_p + u_{k+1-p} = 2n` for all `p`).
pub fn check_block_det_lemma(k: usize, n: usize, dims: &[usize], seed: u64) -> Result<bool> {
    Ok(block_det_lemma_outcome(k, n, dims, seed, false)?.holds())
}

/// As [`check_block_det_lemma`]; `equal_uv` forces `U_j = V_j`.
pub fn block_det_lemma_outcome(k: usize, n: usize, dims: &[usize], seed: u64, equal_uv: bool) -> Result<BlockLemmaOutcome> {
    if k == 0 || n == 0 || dims.len() != k || dims.contains(&0) || dims.iter().sum::<usize>() != k * n {
        return Err(Error::DimensionMismatch(format!(
            "need {k} positive block widths summing to {}, got {dims:?}",
            k * n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u: Vec<Mat> = dims.iter().map(|&w| random_matrix(&mut rng, n, w)).collect();
    let v: Vec<Mat> = if equal_uv {
        u.clone()
    } else {
        dims.iter().map(|&w| random_matrix(&mut rng, n, w)).collect()
    };
    let mut gamma: Vec<Vec<BigRational>> = (0..k)
        .map(|_| (0..k).map(|_| random_rational(&mut rng)).collect())
        .collect();
    for row in gamma.iter_mut() {
        let last = row[k - 1].clone();
        row.push(last);
    }
    // 1-based accessor γ_{i,j}.
    let g = |i: usize, j: usize| &gamma[i - 1][j - 1];

    let mut pi: Mat = Vec::with_capacity(k * n);
    for i in 1..=k {
        let blocks: Vec<Mat> = (1..=k)
            .map(|j| {
                let (a, b) = if j <= (k + 1) / 2 {
                    (g(i, 2 * j - 1), g(i, 2 * j))
                } else {
                    (g(i, 2 * k + 2 - 2 * j), g(i, 2 * k + 1 - 2 * j))
                };
                lin_comb(a, &u[j - 1], b, &v[j - 1])
            })
            .collect();
        let refs: Vec<&Mat> = blocks.iter().collect();
        pi.extend(hstack(&refs));
    }
    let det_pi = det(pi);

    // W_i = [[U_i, -V_{k+1-i}], [-V_i, U_{k+1-i}]], and U_mid - V_mid for odd k.
    let mut w_blocks: Vec<Mat> = Vec::new();
    let mut w_widths: Vec<usize> = Vec::new();
    for i in 1..=k / 2 {
        let j = k + 1 - i;
        let mut w = hstack(&[&u[i - 1], &scaled(&v[j - 1], -1)]);
        w.extend(hstack(&[&scaled(&v[i - 1], -1), &u[j - 1]]));
        w_blocks.push(w);
        w_widths.push(dims[i - 1] + dims[j - 1]);
    }
    if k % 2 == 1 {
        let mid = (k + 1) / 2 - 1;
        let one = BigRational::from_integer(1.into());
        w_blocks.push(lin_comb(&one, &u[mid], &one, &v[mid]));
        w_widths.push(dims[mid]);
    }

    let balanced = (0..k).all(|p| dims[p] + dims[k - 1 - p] == 2 * n);
    let predicted = if balanced {
        let gamma_sq: Mat = gamma.iter().map(|r| r[..k].to_vec()).collect();
        let det_gamma = det(gamma_sq);
        let mut value = (0..n).fold(BigRational::from_integer(1.into()), |acc, _| acc * &det_gamma);
        for w in &w_blocks {
            value *= det(w.clone());
        }
        let sigma: usize = if k % 2 == 1 {
            n * dims[..(k - 1) / 2].iter().sum::<usize>()
        } else {
            0
        };
        if sigma % 2 == 1 {
            -value
        } else {
            value
        }
    } else {
        BigRational::from_integer(0.into())
    };

    Ok(BlockLemmaOutcome {
        balanced,
        det_pi,
        predicted,
        matrix_rules_hold: check_block_arrangements(&w_blocks, &w_widths),
    })
}
