//! Exact determinants over a field.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::CycloElem;
use crate::error::{Error, Result};

/// The field operations the determinant kernels need.
pub trait Scalar: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_scalar(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn div_ref(&self, other: &Self) -> Result<Self>;
}

impl Scalar for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_scalar(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_ref(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / other)
        }
    }
}

impl Scalar for CycloElem {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn is_zero_scalar(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_ref(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DetStrategy {
    /// Gaussian elimination with the first nonzero entry as pivot.
    #[default]
    Gauss,
    /// Fraction-free Bareiss elimination.
    Bareiss,
}

/// Determinant of a square matrix. `unit` supplies the value of the empty
/// determinant and fixes the field.
pub fn determinant<S: Scalar>(matrix: Vec<Vec<S>>, unit: &S, strategy: DetStrategy) -> Result<S> {
    let n = matrix.len();
    if let Some(row) = matrix.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "row of length {} in a {n}x{n} matrix",
            row.len()
        )));
    }
    match strategy {
        DetStrategy::Gauss => gauss(matrix, unit),
        DetStrategy::Bareiss => bareiss(matrix, unit),
    }
}

fn find_pivot<S: Scalar>(a: &[Vec<S>], col: usize) -> Option<usize> {
    (col..a.len()).find(|&r| !a[r][col].is_zero_scalar())
}

fn gauss<S: Scalar>(mut a: Vec<Vec<S>>, unit: &S) -> Result<S> {
    let n = a.len();
    let mut det = unit.one_like();
    for c in 0..n {
        let Some(p) = find_pivot(&a, c) else {
            return Ok(unit.zero_like());
        };
        if p != c {
            a.swap(p, c);
            det = det.neg_ref();
        }
        det = det.mul_ref(&a[c][c]);
        let (top, bottom) = a.split_at_mut(c + 1);
        let pivot_row = &top[c];
        for row in bottom.iter_mut() {
            if row[c].is_zero_scalar() {
                continue;
            }
            let f = row[c].div_ref(&pivot_row[c])?;
            for k in c + 1..n {
                row[k] = row[k].sub_ref(&f.mul_ref(&pivot_row[k]));
            }
        }
    }
    Ok(det)
}

fn bareiss<S: Scalar>(mut a: Vec<Vec<S>>, unit: &S) -> Result<S> {
    let n = a.len();
    if n == 0 {
        return Ok(unit.one_like());
    }
    let mut negate = false;
    let mut prev = unit.one_like();
    for c in 0..n - 1 {
        let Some(p) = find_pivot(&a, c) else {
            return Ok(unit.zero_like());
        };
        if p != c {
            a.swap(p, c);
            negate = !negate;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let num = a[i][j].mul_ref(&a[c][c]).sub_ref(&a[i][c].mul_ref(&a[c][j]));
                a[i][j] = num.div_ref(&prev)?;
            }
        }
        prev = a[c][c].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.neg_ref() } else { d })
}
