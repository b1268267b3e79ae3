use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Integer polynomial in `q`, coefficients in increasing degree, no trailing zeros.
///
/// Arithmetic is checked: overflow panics instead of wrapping.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<i128>", from = "Vec<i128>")]
pub struct IntPoly(Vec<i128>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn constant(c: i128) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        IntPoly(c)
    }

    pub fn from_coeffs(mut c: Vec<i128>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        IntPoly(c)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [1]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, q: i128) -> i128 {
        self.0
            .iter()
            .rev()
            .fold(0i128, |acc, &c| checked(acc.checked_mul(q).and_then(|x| x.checked_add(c))))
    }

    /// `self * q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.0);
        IntPoly(c)
    }

    pub fn scale(&self, s: i128) -> Self {
        Self::from_coeffs(self.0.iter().map(|&c| checked(c.checked_mul(s))).collect())
    }

    /// `self += other * q^k`.
    pub fn add_shifted(&mut self, other: &IntPoly, k: usize) {
        if other.is_zero() {
            return;
        }
        if self.0.len() < other.0.len() + k {
            self.0.resize(other.0.len() + k, 0);
        }
        for (i, &c) in other.0.iter().enumerate() {
            self.0[i + k] = checked(self.0[i + k].checked_add(c));
        }
        self.trim();
    }

    /// Exact division by a monic divisor; `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let d = divisor.degree().expect("division by zero polynomial");
        assert_eq!(divisor.0[d], 1, "divisor must be monic");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.degree().unwrap();
        if n < d {
            return None;
        }
        let mut rem = self.0.clone();
        let mut quot = vec![0i128; n - d + 1];
        for k in (0..=n - d).rev() {
            let c = rem[k + d];
            quot[k] = c;
            if c != 0 {
                for (i, &dc) in divisor.0.iter().enumerate() {
                    rem[k + i] = checked(rem[k + i].checked_sub(checked(c.checked_mul(dc))));
                }
            }
        }
        rem.iter().all(|&r| r == 0).then(|| Self::from_coeffs(quot))
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }
}

fn checked(x: Option<i128>) -> i128 {
    x.expect("polynomial coefficient overflow")
}

impl From<IntPoly> for Vec<i128> {
    fn from(p: IntPoly) -> Self {
        p.0
    }
}

impl From<Vec<i128>> for IntPoly {
    fn from(c: Vec<i128>) -> Self {
        IntPoly::from_coeffs(c)
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        self.add_shifted(rhs, 0);
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(-1)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![0i128; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in rhs.0.iter().enumerate() {
                c[i + j] = checked(c[i + j].checked_add(checked(a.checked_mul(b))));
            }
        }
        IntPoly::from_coeffs(c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{sign}")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{a}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i128]) -> IntPoly {
        IntPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn normalization_and_display() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs(), &[1, 2]);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[-1, 1]).to_string(), "q-1");
        assert_eq!(p(&[1, 2, 1]).to_string(), "q^2+2q+1");
        assert_eq!(p(&[0, 0, 3]).to_string(), "3q^2");
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 1]);
        let b = p(&[1, 2, 2, 1]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(p(&[1, 0, 1]).div_exact(&a), None);
        assert_eq!(p(&[3]).div_exact(&a), None);
        assert_eq!(IntPoly::zero().div_exact(&a), Some(IntPoly::zero()));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!((&a * &a).coeffs(), &[1, 2, 1]);
        assert_eq!((&a - &a), IntPoly::zero());
        assert_eq!(a.shift(2).coeffs(), &[0, 0, 1, 1]);
        assert_eq!(a.eval(3), 4);
        assert_eq!(p(&[1, 2, 1]).eval(-1), 0);
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_loud() {
        let big = IntPoly::constant(i128::MAX);
        let _ = &big + &IntPoly::one();
    }
}
