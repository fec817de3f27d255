use core::ops::Index;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exps = SmallVec<[u16; 24]>;

/// Exponent vector of a monomial. Length always equals the number of ring
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) Exps);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = e;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        let mut out = Exps::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            let e = a
                .checked_add(*b)
                .filter(|e| *e < 1 << 15)
                .ok_or(Error::ExponentOverflow)?;
            out.push(e);
        }
        Ok(Monomial(out))
    }

    /// Product; panics on exponent overflow, which cannot happen for the
    /// degrees reachable under a degree budget.
    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub(crate) fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e != 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    /// Monomial with one extra trailing variable of exponent `e`.
    pub(crate) fn extended(&self, e: u16) -> Monomial {
        let mut v = self.0.clone();
        v.push(e);
        Monomial(v)
    }

    /// Drop the trailing variable.
    pub(crate) fn truncated(&self, len: usize) -> Monomial {
        Monomial(SmallVec::from_slice(&self.0[..len]))
    }
}

impl Index<usize> for Monomial {
    type Output = u16;
    fn index(&self, i: usize) -> &u16 {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::from_exponents(&[2, 0, 1]);
        let b = Monomial::from_exponents(&[1, 3, 0]);
        assert_eq!(a.mul(&b).exponents(), &[3, 3, 1]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 3, 1]);
        assert_eq!(a.gcd(&b).exponents(), &[1, 0, 0]);
        assert!(Monomial::from_exponents(&[1, 0, 1]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(
            Monomial::from_exponents(&[1, 0, 0])
                .quotient_of(&a)
                .exponents(),
            &[1, 0, 1]
        );
        assert!(!a.is_coprime(&b));
        assert!(Monomial::from_exponents(&[0, 0, 1]).is_coprime(&b));
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn overflow_is_reported() {
        let a = Monomial::from_exponents(&[1 << 14]);
        assert_eq!(a.checked_mul(&a), Err(Error::ExponentOverflow));
        let short = Monomial::from_exponents(&[1]);
        assert!(matches!(
            short.checked_mul(&Monomial::one(2)),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
