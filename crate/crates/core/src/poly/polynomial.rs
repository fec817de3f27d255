use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;
use crate::poly::order::TermOrder;
use crate::poly::ring::{Bidegree, Ring, RingRef, VarKind};

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted in decreasing order for the ring's default order,
/// with no zero coefficients, so two polynomials are equal iff their term
/// lists are equal.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl core::hash::Hash for Polynomial {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.nvars()), c));
        }
        p
    }

    pub fn from_int(ring: &RingRef, c: i64) -> Self {
        Self::constant(ring, Coeff::from_integer(BigInt::from(c)))
    }

    /// The variable at index `i`.
    pub fn var_at(ring: &RingRef, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i, 1), Coeff::one())],
        }
    }

    pub fn var(ring: &RingRef, name: &str) -> Result<Self> {
        Ok(Self::var_at(ring, ring.var(name)?))
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: Coeff) -> Result<Self> {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Build from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(ring: &RingRef, terms: Vec<(Monomial, Coeff)>) -> Result<Self> {
        for (m, _) in &terms {
            if m.len() != ring.nvars() {
                return Err(Error::LengthMismatch {
                    expected: ring.nvars(),
                    got: m.len(),
                });
            }
        }
        Ok(Self::canonical(ring, terms))
    }

    pub(crate) fn canonical(ring: &RingRef, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        let order = ring.default_order();
        terms.sort_by(|a, b| order.cmp(b.0.exponents(), a.0.exponents()));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c))
                }
            }
        }
        if matches!(out.last(), Some((_, c)) if c.is_zero()) {
            out.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Leading term under the ring's default order (O(1)).
    pub fn leading(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    /// Leading term under an arbitrary order.
    pub fn leading_term(&self, order: &TermOrder) -> Option<&(Monomial, Coeff)> {
        let order = order.resolve(&self.ring);
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0.exponents(), b.0.exponents()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Homogeneous for the standard grading (all variables degree one).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree with respect to the x-variables only, if all terms agree.
    pub fn x_degree(&self) -> Option<u32> {
        self.bidegree().map(|b| b.dx)
    }

    /// Bidegree when every term has the same one; `None` means the
    /// polynomial is not bihomogeneous (zero counts as bihomogeneous of
    /// bidegree (0,0)).
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut out: Option<Bidegree> = None;
        for (m, _) in &self.terms {
            let b = monomial_bidegree(&self.ring, m);
            match out {
                None => out = Some(b),
                Some(prev) if prev != b => return None,
                _ => {}
            }
        }
        Some(out.unwrap_or_default())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, true))
    }

    fn combine(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.default_order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => order.cmp(a.0.exponents(), b.0.exponents()),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Exact product; errors when the rings differ.
    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.checked_mul(mb)?, ca * cb));
            }
        }
        Ok(Self::canonical(&self.ring, terms))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Result<Polynomial> {
        // Multiplying by a monomial preserves any monomial order.
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.checked_mul(mono)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Formal partial derivative with respect to the variable at `var`.
    pub fn partial_derivative_at(&self, var: usize) -> Polynomial {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m[var];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[var] -= 1;
            terms.push((dm, c * Coeff::from_integer(BigInt::from(e))));
        }
        Self::canonical(&self.ring, terms)
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial> {
        Ok(self.partial_derivative_at(self.ring.var(var)?))
    }

    /// Replace the variable at `var` by `value`.
    pub fn substitute(&self, var: usize, value: &Polynomial) -> Result<Polynomial> {
        self.check_ring(value)?;
        let maxe = self.terms.iter().map(|(m, _)| m[var]).max().unwrap_or(0);
        let mut powers = vec![Polynomial::one(&self.ring)];
        for k in 1..=maxe as usize {
            let next = powers[k - 1].multiply(value)?;
            powers.push(next);
        }
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m[var] as usize;
            let mut rest = m.clone();
            rest.0[var] = 0;
            let t = powers[e].mul_monomial(&rest)?.scale(c);
            acc = acc.combine(&t, false);
        }
        Ok(acc)
    }

    /// Move into another ring that contains every variable this polynomial uses.
    pub fn embed(&self, target: &RingRef) -> Result<Polynomial> {
        if Ring::same(&self.ring, target) {
            return Ok(self.clone());
        }
        let map = (0..self.ring.nvars())
            .map(|i| target.index_of(self.ring.name(i)))
            .collect::<Vec<_>>();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = Monomial::one(target.nvars());
            for (i, &ei) in m.exponents().iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                let j = map[i]
                    .ok_or_else(|| Error::UnknownVariable(String::from(self.ring.name(i))))?;
                e.0[j] = ei;
            }
            terms.push((e, c.clone()));
        }
        Ok(Self::canonical(target, terms))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(d)?;
        let Some((dm, dc)) = d.leading().cloned() else {
            return Err(Error::invalid("division by zero polynomial"));
        };
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            if !dm.divides(&m) {
                return Ok(None);
            }
            let qm = dm.quotient_of(&m);
            let qc = c / &dc;
            let t = d.mul_monomial(&qm)?.scale(&qc);
            rem = rem.combine(&t, true);
            quot.push((qm, qc));
        }
        Ok(Some(Self::canonical(&self.ring, quot)))
    }

    /// Scalar multiple with coprime integer coefficients and positive
    /// leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut factor = Coeff::new(den, num);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Monic rescaling (leading coefficient one under the default order).
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Variables (indices) that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, u)| **u)
            .map(|(i, _)| i)
            .collect()
    }

    /// True if only x-variables occur.
    pub fn is_x_only(&self) -> bool {
        self.support()
            .iter()
            .all(|&i| self.ring.kind(i) == VarKind::X)
    }

    /// Evaluate at a point given as one rational per ring variable.
    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }
}

pub(crate) fn monomial_bidegree(ring: &Ring, m: &Monomial) -> Bidegree {
    let mut b = Bidegree::default();
    for (i, &e) in m.exponents().iter().enumerate() {
        match ring.kind(i) {
            VarKind::X => b.dx += e as u32,
            VarKind::S => b.ds += e as u32,
            VarKind::Aux => {}
        }
    }
    b
}

macro_rules! binop {
    ($tr:ident, $f:ident, $via:ident) => {
        impl core::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings.
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                self.$via(rhs).expect("polynomials from different rings")
            }
        }
        impl core::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self)
                    .$via(&rhs)
                    .expect("polynomials from different rings")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, multiply);

impl core::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    /// Terms in decreasing default order; coefficients as `n` or `n/d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = abs.is_one();
            if !unit || m.is_one() {
                write!(f, "{}", abs.numer())?;
                if !abs.denom().is_one() {
                    write!(f, "/{}", abs.denom())?;
                }
            }
            let mut first = unit;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(self.ring.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use alloc::string::ToString;

    fn ring() -> RingRef {
        Ring::with_x(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn products() {
        let r = ring();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert!((&p("x-y") * &Polynomial::zero(&r)).is_zero());
        assert_eq!(&p("x-y") * &p("x+y"), p("x^2-y^2"));
        assert_eq!(
            &p("x^2*y-3*z+1/2") * &Polynomial::one(&r),
            p("x^2*y-3*z+1/2")
        );
        assert_eq!((&p("x-y") * &p("x-z")).to_string(), "x^2 - x*y - x*z + y*z");
    }

    #[test]
    fn ring_mismatch() {
        let r = ring();
        let other = Ring::with_x(&["u"]).unwrap();
        let a = Polynomial::var(&r, "x").unwrap();
        let b = Polynomial::var(&other, "u").unwrap();
        assert_eq!(a.multiply(&b), Err(Error::RingMismatch));
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn derivatives() {
        let r = ring();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert_eq!(p("x-y").partial_derivative("x").unwrap(), p("1"));
        assert_eq!(
            p("x^3+y^3+x*y*z").partial_derivative("z").unwrap(),
            p("x*y")
        );
        assert!(p("7").partial_derivative("x").unwrap().is_zero());
        assert!(p("x").partial_derivative("w").is_err());
    }

    #[test]
    fn bidegrees() {
        let r = Ring::new(&["x", "y", "z"], &["s1", "s2", "s3", "s4"]).unwrap();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert_eq!(p("s1+s2+s3+3*s4").bidegree(), Some(Bidegree::new(0, 1)));
        assert_eq!(
            p("x*z*s2 - (3*y^2+x*z)*s3").bidegree(),
            Some(Bidegree::new(2, 1))
        );
        assert_eq!(p("x + s1").bidegree(), None);
    }

    #[test]
    fn exact_division_and_substitution() {
        let r = ring();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert_eq!(p("x^2-y^2").div_exact(&p("x-y")).unwrap(), Some(p("x+y")));
        assert_eq!(p("x^2+y^2").div_exact(&p("x-y")).unwrap(), None);
        assert_eq!(
            p("x^2*z + z").substitute(0, &p("y+1")).unwrap(),
            p("y^2*z+2*y*z+2*z")
        );
    }

    #[test]
    fn primitive_normalization() {
        let r = ring();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert_eq!(p("-2/3*x + 4/9*y").primitive(), p("3*x - 2*y"));
        assert_eq!(p("6*x*y - 4").primitive(), p("3*x*y - 2"));
    }
}
