//! Oracles shared by the integration tests. Everything here is computed by a
//! route different from the library's: Jacobi–Trudi determinants instead of
//! bialternants, diagram rim hooks instead of beta sets, explicit products
//! instead of determinant evaluations.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::BigRational;
use twistfact::characters::{weyl_character, GroupType, PointTuple};
use twistfact::cyclotomic::{CycloElem, CycloField};
use twistfact::linalg::{determinant, DetStrategy};
use twistfact::partitions::{mu_padded, partitions_up_to, Partition};

pub fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

pub fn field_q() -> Arc<CycloField> {
    CycloField::new(1).unwrap()
}

pub fn pts(field: &Arc<CycloField>, vals: &[BigRational]) -> PointTuple {
    PointTuple::from_rationals(field, vals).unwrap()
}

pub fn det(m: Vec<Vec<CycloElem>>, field: &Arc<CycloField>) -> CycloElem {
    determinant(m, &field.one(), DetStrategy::Bareiss).unwrap()
}

pub fn pw(x: &CycloElem, k: i64) -> CycloElem {
    x.pow(k).unwrap()
}

/// `h_0, …, h_kmax` in the given variables.
pub fn complete_homogeneous(vars: &[CycloElem], kmax: usize, field: &Arc<CycloField>) -> Vec<CycloElem> {
    let mut h = vec![field.zero(); kmax + 1];
    h[0] = field.one();
    for x in vars {
        for k in 1..=kmax {
            let prev = &h[k - 1] * x;
            h[k] = &h[k] + &prev;
        }
    }
    h
}

/// Jacobi–Trudi type determinants: GL with `h_{λ_i-i+j}`, Sp with the
/// `h_{λ_i-i+j} + h_{λ_i-i-j+2}` columns over `X ∪ X̄`, odd orthogonal with
/// `h_{λ_i-i+j} - h_{λ_i-i-j}` over `X ∪ X̄ ∪ {1}`, and even orthogonal as half
/// the same determinant over `X ∪ X̄`.
pub fn jacobi_trudi(g: GroupType, lambda: &Partition, p: &PointTuple) -> CycloElem {
    let field = Arc::clone(p.values()[0].field());
    let mut vars: Vec<CycloElem> = p.values().to_vec();
    if g != GroupType::GL {
        vars.extend(p.inverses().values().iter().cloned());
    }
    if g == GroupType::OO {
        vars.push(field.one());
    }
    let l = lambda.len();
    let kmax = lambda.first() + l + 2;
    let h = complete_homogeneous(&vars, kmax, &field);
    let hk = |k: i64| -> CycloElem {
        if k < 0 {
            field.zero()
        } else {
            h[k as usize].clone()
        }
    };
    let m: Vec<Vec<CycloElem>> = (1..=l)
        .map(|i| {
            let a = lambda.part(i - 1) as i64 - i as i64;
            (1..=l as i64)
                .map(|j| match g {
                    GroupType::GL => hk(a + j),
                    GroupType::SP if j == 1 => hk(a + 1),
                    GroupType::SP => &hk(a + j) + &hk(a - j + 2),
                    GroupType::OO | GroupType::OE => &hk(a + j) - &hk(a - j),
                })
                .collect()
        })
        .collect();
    let d = det(m, &field);
    if g == GroupType::OE {
        d.scale(&rat(1, 2))
    } else {
        d
    }
}

/// `∏_{i<j} (x_i + x̄_i - x_j - x̄_j)`.
pub fn symmetric_vandermonde(p: &PointTuple) -> CycloElem {
    let field = p.values()[0].field();
    let s: Vec<CycloElem> = p
        .values()
        .iter()
        .map(|x| x + &pw(x, -1))
        .collect();
    let mut out = field.one();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            out = &out * &(&s[i] - &s[j]);
        }
    }
    out
}

pub fn vandermonde(p: &PointTuple) -> CycloElem {
    let v = p.values();
    let mut out = v[0].field().one();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            out = &out * &(&v[i] - &v[j]);
        }
    }
    out
}

/// Alternant `det(f(x_i, j))` for `j = 1..n`.
pub fn alternant(p: &PointTuple, f: impl Fn(&CycloElem, i64) -> CycloElem) -> CycloElem {
    let n = p.n() as i64;
    let field = p.values()[0].field().clone();
    let m = p
        .values()
        .iter()
        .map(|x| (1..=n).map(|j| f(x, j)).collect())
        .collect();
    det(m, &field)
}

// ---------------------------------------------------------------------------
// Partition-side helpers.

pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `β(λ, m)` written out directly from the parts.
pub fn beta(lambda: &Partition, m: usize) -> Vec<i64> {
    (0..m)
        .map(|i| lambda.part(i) as i64 + m as i64 - 1 - i as i64)
        .collect()
}

pub fn counts(lambda: &Partition, t: usize, m: usize) -> Vec<i64> {
    let mut c = vec![0i64; t];
    for b in beta(lambda, m) {
        c[(b as usize) % t] += 1;
    }
    c
}

pub fn is_core(lambda: &Partition, t: usize) -> bool {
    lambda.t_core_strips(t) == *lambda
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Padding multiples `n` worth trying for a partition of this length.
fn paddings(len: usize, t: usize) -> [usize; 2] {
    let n = ceil_div(len, t).max(1);
    [n, n + 1]
}

/// Complementation of beta sets under conjugation, and its converse among
/// partitions of equal size.
pub fn lemma_perm(max_size: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let all = partitions_up_to(max_size, max_size);
    for lambda in &all {
        let conj = lambda.conjugate();
        for m1 in lambda.len()..=lambda.len() + 2 {
            for m2 in lambda.first()..=lambda.first() + 2 {
                if !forms_permutation(lambda, &conj, m1, m2) {
                    bad.push(format!("perm: {lambda} m1={m1} m2={m2}"));
                }
            }
        }
        for mu in all.iter().filter(|mu| mu.size() == lambda.size() && **mu != conj) {
            let m1 = lambda.len();
            let m2 = lambda.first().max(mu.len());
            if forms_permutation(lambda, mu, m1, m2) {
                bad.push(format!("perm converse: {lambda} {mu}"));
            }
        }
    }
    bad
}

fn forms_permutation(lambda: &Partition, mu: &Partition, m1: usize, m2: usize) -> bool {
    let total = (m1 + m2) as i64;
    let mut seen: BTreeSet<i64> = beta(lambda, m1).into_iter().collect();
    for b in beta(mu, m2) {
        seen.insert(total - 1 - b);
    }
    seen.len() == m1 + m2 && seen.iter().all(|&v| (0..total).contains(&v))
}

/// `n_i(λ, t m_1) + n_{t-1-i}(λ', t m_2) = m_1 + m_2`, and among `t`-cores
/// this forces the second partition to be the conjugate.
pub fn lemma_beta_conjugate(max_size: usize, t: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let all = partitions_up_to(max_size, max_size);
    let balanced = |a: &Partition, b: &Partition, m1: usize, m2: usize| {
        let ca = counts(a, t, t * m1);
        let cb = counts(b, t, t * m2);
        (0..t).all(|i| ca[i] + cb[t - 1 - i] == (m1 + m2) as i64)
    };
    for lambda in &all {
        let conj = lambda.conjugate();
        for m1 in paddings(lambda.len(), t) {
            for m2 in paddings(conj.len(), t) {
                if !balanced(lambda, &conj, m1, m2) {
                    bad.push(format!("beta-conj t={t}: {lambda} m1={m1} m2={m2}"));
                }
            }
        }
    }
    let cores: Vec<&Partition> = all.iter().filter(|p| is_core(p, t)).collect();
    for lambda in &cores {
        for mu in &cores {
            for m1 in paddings(lambda.len(), t) {
                for m2 in paddings(mu.len(), t) {
                    if balanced(lambda, mu, m1, m2) && lambda.conjugate() != **mu {
                        bad.push(format!("beta-conj converse t={t}: {lambda} {mu}"));
                    }
                }
            }
        }
    }
    bad
}

/// Statement (2) of the beta-set characterization of `z`-asymmetry.
fn complement_condition(lambda: &Partition, z: i64, m: usize) -> bool {
    let b: BTreeSet<i64> = beta(lambda, m).into_iter().collect();
    let m = m as i64;
    (0..=m - z - 1).all(|xi| b.contains(&xi) != b.contains(&(2 * m - z - 1 - xi)))
}

/// Statement (3): the beta set built from the arms alone.
fn arm_construction(lambda: &Partition, z: i64, m: usize) -> Vec<i64> {
    let arms = lambda.frobenius().alpha;
    let m = m as i64;
    let deleted: BTreeSet<i64> = arms
        .iter()
        .map(|&a| m - z - 1 - a as i64)
        .filter(|v| (0..m).contains(v))
        .collect();
    let mut out: Vec<i64> = arms.iter().map(|&a| a as i64 + m).collect();
    out.extend((0..m).rev().filter(|v| !deleted.contains(v)));
    out
}

/// The three equivalent descriptions of `z`-asymmetry through `β(λ, m)`.
/// With `strict_padding` the padding must also satisfy `m ≥ λ_1 + z`;
/// without it only `m ≥ ℓ(λ)` is imposed.
pub fn lemma_cond(max_size: usize, z: i64, strict_padding: bool) -> Vec<String> {
    let mut bad = Vec::new();
    for lambda in partitions_up_to(max_size, max_size) {
        let lo = if strict_padding {
            lambda.len().max((lambda.first() as i64 + z).max(0) as usize)
        } else {
            lambda.len()
        };
        for m in [lo, lo + 1, lo + 2, lo + 5] {
            let asym = lambda.is_z_asymmetric(z);
            if asym != complement_condition(&lambda, z, m) {
                bad.push(format!("cond z={z}: {lambda} m={m} asym={asym}"));
            }
            if asym && arm_construction(&lambda, z, m) != beta(&lambda, m) {
                bad.push(format!("cond construction z={z}: {lambda} m={m}"));
            }
        }
    }
    bad
}

/// For `2 ≤ t ≤ z + 1` no nonempty `t`-core is `z`-asymmetric.
pub fn lemma_z_large(max_size: usize, max_t: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let all = partitions_up_to(max_size, max_size);
    for z in 1..=(max_t as i64 + 1) {
        for t in 2..=((z + 1) as usize).min(max_t) {
            for lambda in all.iter().filter(|p| !p.is_empty()) {
                if lambda.is_z_asymmetric(z) && is_core(lambda, t) {
                    bad.push(format!("z-large z={z} t={t}: {lambda}"));
                }
            }
        }
    }
    bad
}

/// Residue-count characterization of `z`-asymmetric `t`-cores.
pub fn lemma_converse_sym(max_size: usize, t: usize) -> Vec<String> {
    let mut bad = Vec::new();
    for lambda in partitions_up_to(max_size, max_size).iter().filter(|p| is_core(p, t)) {
        for n in paddings(lambda.len(), t) {
            let c = counts(lambda, t, t * n);
            let n = n as i64;
            for z in 0..=(t as i64 - 2) {
                let top = t as i64 - z - 1;
                let predicted = (0..=top).all(|i| c[i as usize] + c[(top - i) as usize] == 2 * n)
                    && (t as i64 - z..t as i64).all(|i| c[i as usize] == n);
                if predicted != lambda.is_z_asymmetric(z) {
                    bad.push(format!("converse-sym t={t} z={z}: {lambda} n={n}"));
                }
            }
        }
    }
    bad
}

/// `rk(core_t λ) = Σ (n_i - n)_+`.
pub fn lemma_rank_core(max_size: usize, t: usize) -> Vec<String> {
    let mut bad = Vec::new();
    for lambda in partitions_up_to(max_size, max_size) {
        let core = lambda.t_core_strips(t);
        for n in paddings(lambda.len(), t) {
            let c = counts(&lambda, t, t * n);
            let r: i64 = c.iter().map(|&k| (k - n as i64).max(0)).sum();
            if r != core.rank() as i64 {
                bad.push(format!("rank-core t={t}: {lambda} n={n}"));
            }
        }
    }
    bad
}

/// Rank of symplectic, orthogonal and self-conjugate cores as sums of
/// `|n_i - n|` over half the residues.
pub fn lemma_rank_classes(max_size: usize, t: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let ti = t as i64;
    for lambda in partitions_up_to(max_size, max_size) {
        let core = lambda.t_core_strips(t);
        let rank = core.rank() as i64;
        for n in paddings(lambda.len(), t) {
            let c = counts(&lambda, t, t * n);
            let dev = |lo: i64, hi: i64| -> i64 { (lo..=hi).map(|i| (c[i as usize] - n as i64).abs()).sum() };
            if core.is_z_asymmetric(1)
                && (dev(0, floor_div(ti - 3, 2)) != rank || dev(floor_div(ti - 1, 2), ti - 2) != rank)
            {
                bad.push(format!("rank symplectic t={t}: {lambda} n={n}"));
            }
            if core.is_z_asymmetric(-1) && dev(1, floor_div(ti - 1, 2)) != rank {
                bad.push(format!("rank orthogonal t={t}: {lambda} n={n}"));
            }
            if core.is_z_asymmetric(0) && dev(0, floor_div(ti - 2, 2)) != rank {
                bad.push(format!("rank self-conjugate t={t}: {lambda} n={n}"));
            }
        }
    }
    bad
}

/// Orthogonal `0`-th quotient, orthogonal core and conjugate-paired
/// quotients together force an orthogonal partition.
pub fn prop_sym_iff(max_size: usize, t: usize) -> Vec<String> {
    let mut bad = Vec::new();
    for lambda in partitions_up_to(max_size, max_size) {
        let core = lambda.t_core_strips(t);
        for n in paddings(lambda.len(), t) {
            let quo = lambda.t_quotient(t, t * n).unwrap();
            let hypotheses = quo[0].is_z_asymmetric(-1)
                && core.is_z_asymmetric(-1)
                && (1..=t / 2).all(|i| quo[i].conjugate() == quo[t - i]);
            if hypotheses && !lambda.is_z_asymmetric(-1) {
                bad.push(format!("sym-iff t={t}: {lambda} n={n}"));
            }
        }
    }
    bad
}

// ---------------------------------------------------------------------------
// Block determinant identity for the Schur factor of a residue pair.

/// Checks `s_{ρ}(X^t, X̄^t)` against the ratio of two `2n × 2n` block
/// determinants built from the residue classes `p` and `q` of `β(λ, tn)`,
/// where `ρ = λ^{(p)}_1 + (λ^{(q)}, 0, …, 0, -rev λ^{(p)})`. Returns `None`
/// when `n_p + n_q ≠ 2n`.
pub fn snew_identity(lambda: &Partition, t: usize, n: usize, p: usize, q: usize, x: &PointTuple) -> Option<bool> {
    let m = t * n;
    let b = beta(lambda, m);
    let class = |r: usize| -> Vec<i64> { b.iter().copied().filter(|v| (*v as usize) % t == r).collect() };
    let (bp, bq) = (class(p), class(q));
    if bp.len() + bq.len() != 2 * n {
        return None;
    }
    let field = Arc::clone(x.values()[0].field());
    let (ti, pi, qi) = (t as i64, p as i64, q as i64);
    let block = |exps_q: &[i64], exps_p: &[i64]| -> CycloElem {
        let mut rows = Vec::with_capacity(2 * n);
        for xv in x.values() {
            let mut r: Vec<CycloElem> = exps_q.iter().map(|e| pw(xv, e - qi)).collect();
            r.extend(exps_p.iter().map(|e| pw(xv, -(e - pi + ti))));
            rows.push(r);
        }
        for xv in x.values() {
            let mut r: Vec<CycloElem> = exps_q.iter().map(|e| pw(xv, -(e - qi))).collect();
            r.extend(exps_p.iter().map(|e| pw(xv, e - pi + ti)));
            rows.push(r);
        }
        det(rows, &field)
    };
    let num = block(&bq, &bp);
    let empty_q: Vec<i64> = (1..=n as i64).map(|j| ti * (n as i64 - j) + qi).collect();
    let empty_p: Vec<i64> = (1..=n as i64).map(|j| ti * (n as i64 - j) + pi).collect();
    let den = block(&empty_q, &empty_p);
    let sign_exp = bp.len() * bp.len().saturating_sub(1) / 2 + n * (n - 1) / 2;
    let mut rhs = num.checked_div(&den).unwrap();
    if sign_exp % 2 == 1 {
        rhs = -rhs;
    }

    let quo = lambda.t_quotient(t, m).unwrap();
    let rho = mu_padded(&quo[q], &quo[p], n).unwrap();
    let xt = x.powers(t as i64);
    let lhs = weyl_character(GroupType::GL, &rho, &xt.concat(&xt.inverses())).unwrap();
    Some(lhs == rhs)
}

// ---------------------------------------------------------------------------
// Closed forms for t = 2, one variable, evaluated at (x, -x).

pub struct FamilyCheck {
    pub cases: usize,
    pub failures: Vec<String>,
}

fn single(v: &CycloElem) -> PointTuple {
    PointTuple::new(vec![v.clone()]).unwrap()
}

fn ch(g: GroupType, parts: &[usize], p: &PointTuple) -> CycloElem {
    weyl_character(g, &Partition::new(parts.to_vec()).unwrap(), p).unwrap()
}

/// `±x` as a tuple in `Q`.
pub fn plus_minus(x: &BigRational) -> PointTuple {
    let f = field_q();
    pts(&f, &[x.clone(), -x.clone()])
}

/// The `GL`, `Sp`, even-orthogonal and odd-orthogonal closed forms for
/// `(a, b)`, `0 ≤ b ≤ a ≤ max`. The odd-orthogonal form is read with the
/// arguments `(x², x̄²)`.
pub fn t2_families(g: GroupType, max: usize, xs: &[BigRational]) -> FamilyCheck {
    let f = field_q();
    let mut failures = Vec::new();
    let mut cases = 0;
    for x in xs {
        let xv = f.from_rational(x.clone());
        let x2 = single(&(&xv * &xv));
        let neg_x2 = x2.negated();
        let pm = plus_minus(x);
        for a in 0..=max {
            for b in 0..=a {
                cases += 1;
                let lhs = ch(g, &[a, b], &pm);
                let same = a % 2 == b % 2;
                let expected = match (g, same, a % 2) {
                    (GroupType::GL, true, 1) => -(ch(GroupType::GL, &[(a + 1) / 2], &x2) * ch(GroupType::GL, &[(b - 1) / 2], &x2)),
                    (GroupType::GL, true, _) => ch(GroupType::GL, &[b / 2], &x2) * ch(GroupType::GL, &[a / 2], &x2),
                    (GroupType::SP, true, 1) => -(ch(GroupType::SP, &[(b - 1) / 2], &x2) * ch(GroupType::OO, &[(a + 1) / 2], &x2)),
                    (GroupType::SP, true, _) => ch(GroupType::SP, &[a / 2], &x2) * ch(GroupType::OO, &[b / 2], &x2),
                    (GroupType::OE, true, 1) => {
                        let s = if ((b + 1) / 2) % 2 == 1 { -f.one() } else { f.one() };
                        s * ch(GroupType::OO, &[(b - 1) / 2], &neg_x2) * ch(GroupType::OE, &[(a + 1) / 2], &x2)
                    }
                    (GroupType::OE, true, _) => {
                        let s = if (a / 2) % 2 == 1 { -f.one() } else { f.one() };
                        s * ch(GroupType::OO, &[a / 2], &neg_x2) * ch(GroupType::OE, &[b / 2], &x2)
                    }
                    (GroupType::OO, true, _) => {
                        let s = if a % 2 == 1 { -f.one() } else { f.one() };
                        s * ch(GroupType::GL, &[(a + b) / 2], &x2.concat(&x2.inverses()))
                    }
                    (GroupType::OO, false, _) => {
                        // No closed form offered; all 2-cores are self-conjugate,
                        // so the value must not vanish.
                        if lhs.is_zero() {
                            failures.push(format!("oo ({a},{b}) vanishes at x={x}"));
                        }
                        continue;
                    }
                    (_, false, _) => f.zero(),
                };
                if lhs != expected {
                    failures.push(format!("{g} ({a},{b}) at x={x}: lhs {lhs} expected {expected}"));
                }
            }
        }
    }
    FamilyCheck { cases, failures }
}

/// The printed odd-orthogonal reading with arguments `(x², -x²)`.
pub fn oo_printed_reading_holds(a: usize, b: usize, x: &BigRational) -> bool {
    let f = field_q();
    let xv = f.from_rational(x.clone());
    let x2 = single(&(&xv * &xv));
    let lhs = ch(GroupType::OO, &[a, b], &plus_minus(x));
    let s = if a % 2 == 1 { -f.one() } else { f.one() };
    lhs == s * ch(GroupType::GL, &[(a + b) / 2], &x2.concat(&x2.negated()))
}

/// `s_{(a,b,c)}(x, -x, 1)` next to the tabulated product for its parity
/// pattern, as printed (`None` for the two vanishing patterns).
pub fn schur_one_case(a: usize, b: usize, c: usize, x: &BigRational) -> (CycloElem, Option<CycloElem>) {
    let f = field_q();
    let xv = f.from_rational(x.clone());
    let x2v = &xv * &xv;
    let x2 = single(&x2v);
    let x2_one = PointTuple::new(vec![x2v.clone(), f.one()]).unwrap();
    let lhs = ch(GroupType::GL, &[a, b, c], &pts(&f, &[x.clone(), -x.clone(), rat(1, 1)]));
    let two = |p: usize, q: usize| ch(GroupType::GL, &[p, q], &x2_one);
    let one = |p: usize| ch(GroupType::GL, &[p], &x2);
    let printed = match (a % 2, b % 2, c % 2) {
        (0, 1, 1) => Some(-(two(a / 2, (b + 1) / 2) * one((c - 1) / 2))),
        (0, 0, 0) => Some(-(two(a / 2, c / 2) * one(b / 2))),
        (1, 1, 0) => Some(two((b - 1) / 2, c / 2) * one((a + 1) / 2)),
        (1, 0, 0) => Some(two((a - 1) / 2, b / 2) * one(c / 2)),
        (1, 1, 1) => Some(two((a - 1) / 2, (c - 1) / 2) * one((b + 1) / 2)),
        (0, 0, 1) => Some(-(two((b - 2) / 2, (c - 1) / 2) * one((a + 2) / 2))),
        _ => None,
    };
    (lhs, printed)
}

/// A few sample rationals avoiding `0, ±1`.
pub fn sample_xs() -> Vec<BigRational> {
    vec![rat(3, 2), rat(5, 7), rat(11, 3)]
}
