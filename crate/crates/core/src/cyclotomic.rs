//! The cyclotomic field `Q(ω_t)`: elements are rational coefficient vectors
//! of length `φ(t)` in the power basis `1, ω, …, ω^{φ(t)-1}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::poly::Poly;

/// `Φ_t` with integer coefficients, constant term first. Built by dividing
/// `x^t - 1` by `Φ_d` for every proper divisor `d` of `t`.
pub fn cyclotomic_poly(t: i64) -> Result<Vec<BigInt>> {
    if t <= 0 {
        return Err(Error::NonPositiveOrder(t));
    }
    let p = cyclotomic_rational(t as usize);
    Ok(p.coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect())
}

fn cyclotomic_rational(t: usize) -> Poly {
    let mut p = Poly::monomial(t).sub(&Poly::one());
    for d in (1..t).filter(|d| t % d == 0) {
        let (q, r) = p.div_rem(&cyclotomic_rational(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

/// `Q(ω_t)` together with the reduction table `x^k mod Φ_t`.
#[derive(Debug)]
pub struct CycloField {
    t: usize,
    phi: Poly,
    degree: usize,
    /// `x^k mod Φ_t` as dense vectors, for `0 ≤ k < max(t, 2·degree - 1)`.
    powers: Vec<Vec<BigRational>>,
}

impl CycloField {
    pub fn new(t: usize) -> Result<Arc<CycloField>> {
        if t == 0 {
            return Err(Error::NonPositiveOrder(0));
        }
        let phi = cyclotomic_rational(t);
        let degree = phi.degree().expect("cyclotomic polynomials are nonzero");
        let table_len = t.max(2 * degree);
        let powers = (0..table_len)
            .map(|k| {
                let r = Poly::monomial(k).div_rem(&phi).1;
                dense(r.into_coeffs(), degree)
            })
            .collect();
        Ok(Arc::new(CycloField {
            t,
            phi,
            degree,
            powers,
        }))
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `φ(t)`, the dimension over the rationals.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn phi(&self) -> &Poly {
        &self.phi
    }

    pub fn zero(self: &Arc<Self>) -> CycloElem {
        CycloElem {
            field: Arc::clone(self),
            coeffs: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycloElem {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: BigRational) -> CycloElem {
        let mut e = self.zero();
        e.coeffs[0] = r;
        e
    }

    pub fn from_int(self: &Arc<Self>, k: i64) -> CycloElem {
        self.from_rational(BigRational::from_integer(k.into()))
    }

    /// Reduces an arbitrary coefficient vector (constant term first).
    pub fn from_coeffs(self: &Arc<Self>, coeffs: Vec<BigRational>) -> CycloElem {
        let mut out = vec![BigRational::zero(); self.degree];
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.powers.len() {
                for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                    if !p.is_zero() {
                        *o += &c * p;
                    }
                }
            } else {
                let r = Poly::monomial(k).div_rem(&self.phi).1;
                for (o, p) in out.iter_mut().zip(dense(r.into_coeffs(), self.degree)) {
                    *o += &c * p;
                }
            }
        }
        CycloElem {
            field: Arc::clone(self),
            coeffs: out,
        }
    }

    /// `ω^k` with `k` reduced modulo `t`.
    pub fn omega_pow(self: &Arc<Self>, k: i64) -> CycloElem {
        let k = k.rem_euclid(self.t as i64) as usize;
        CycloElem {
            field: Arc::clone(self),
            coeffs: self.powers[k].clone(),
        }
    }
}

fn dense(mut v: Vec<BigRational>, len: usize) -> Vec<BigRational> {
    v.resize(len, BigRational::zero());
    v
}

/// An element of `Q(ω_t)`, always fully reduced.
#[derive(Clone)]
pub struct CycloElem {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl CycloElem {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn same_field(&self, other: &CycloElem) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field.t == other.field.t,
            "{}",
            Error::FieldMismatch(self.field.t, other.field.t)
        );
    }

    pub fn scale(&self, r: &BigRational) -> CycloElem {
        CycloElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against `Φ_t`.
    pub fn inverse(&self) -> Result<CycloElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(self.field.from_rational(r.recip()));
        }
        let a = Poly::new(self.coeffs.clone());
        let (g, s) = a.gcd_inverse_part(&self.field.phi);
        // Φ_t is irreducible, so any nonzero element is coprime to it.
        debug_assert_eq!(g, Poly::one());
        Ok(CycloElem {
            field: Arc::clone(&self.field),
            coeffs: dense(s.into_coeffs(), self.field.degree),
        })
    }

    pub fn checked_div(&self, other: &CycloElem) -> Result<CycloElem> {
        Ok(self * &other.inverse()?)
    }

    /// Integer power; negative exponents go through [`CycloElem::inverse`].
    pub fn pow(&self, k: i64) -> Result<CycloElem> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Evaluates an integer polynomial (constant term first) at this element.
    pub fn eval_int_poly(&self, coeffs: &[BigInt]) -> CycloElem {
        coeffs.iter().rev().fold(self.field.zero(), |acc, c| {
            &(&acc * self) + &self.field.from_rational(BigRational::from_integer(c.clone()))
        })
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.field.t == other.field.t && self.coeffs == other.coeffs
    }
}

impl Eq for CycloElem {}

impl<'a> Add<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;

    fn add(self, rhs: &CycloElem) -> CycloElem {
        self.same_field(rhs);
        CycloElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;

    fn sub(self, rhs: &CycloElem) -> CycloElem {
        self.same_field(rhs);
        CycloElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;

    fn mul(self, rhs: &CycloElem) -> CycloElem {
        self.same_field(rhs);
        let d = self.field.degree;
        if d == 1 {
            return CycloElem {
                field: Arc::clone(&self.field),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<BigRational> = prod[..d].to_vec();
        for (k, c) in prod.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.field.powers[k]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        CycloElem {
            field: Arc::clone(&self.field),
            coeffs: out,
        }
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;

    fn neg(self) -> CycloElem {
        CycloElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: CycloElem) -> CycloElem {
        &self + &rhs
    }
}

impl Sub for CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: CycloElem) -> CycloElem {
        &self - &rhs
    }
}

impl Mul for CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: CycloElem) -> CycloElem {
        &self * &rhs
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem(t={}, {})", self.field.t, self)
    }
}

/// Renders as a polynomial in `ω`, e.g. `-1 - ω` or `3/2`.
impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}·")?;
                    }
                    if k == 1 {
                        write!(f, "ω")?;
                    } else {
                        write!(f, "ω^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Serializes as the coefficient vector, each entry a reduced fraction string.
impl Serialize for CycloElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}
