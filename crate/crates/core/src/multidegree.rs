//! Multidegrees of bihomogeneous ideals in `R[s]` and ML degrees.
//!
//! The class of `V(I)` in the Chow ring `Z[p, u]/(p^n, u^m)` of
//! `P^{n-1} × P^{m-1}` is read off the bigraded Hilbert numerator of an
//! initial ideal: substitute `t1 = 1 - p`, `t2 = 1 - u` and keep the lowest
//! degree part.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{codim_of_monomials, hilbert_numerator, Budget, HilbertNumerator, Ideal};
use crate::poly::{TermOrder, VarKind};

/// The binary form `c_d p^d + c_{d-1} p^{d-1} u + ... + c_0 u^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultidegreeForm {
    d: usize,
    /// `coeffs[i]` is `c_i`, the coefficient of `p^i u^(d-i)`.
    coeffs: Vec<BigInt>,
    n: usize,
    m: usize,
}

impl MultidegreeForm {
    /// `coeffs` lists `c_d, ..., c_0`.
    pub fn new(n: usize, m: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("a form needs at least one coefficient"));
        }
        let d = coeffs.len() - 1;
        let mut c = coeffs;
        c.reverse();
        Ok(MultidegreeForm { d, coeffs: c, n, m })
    }

    /// The codimension.
    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `c_i`, before truncation.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `c_d, ..., c_0`, before truncation.
    pub fn coeffs_descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// `c_i`, or zero when `p^i u^(d-i)` vanishes in the Chow ring.
    pub fn truncated_coeff(&self, i: usize) -> BigInt {
        if i >= self.n || self.d - i >= self.m || i > self.d {
            BigInt::zero()
        } else {
            self.coeff(i)
        }
    }

    pub fn is_zero(&self) -> bool {
        (0..=self.d).all(|i| self.truncated_coeff(i).is_zero())
    }
}

impl fmt::Display for MultidegreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..=self.d).rev() {
            let c = self.truncated_coeff(i);
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            for (v, e) in [("p", i), ("u", self.d - i)] {
                match e {
                    0 => {}
                    1 => parts.push(v.into()),
                    _ => parts.push(format!("{v}^{e}")),
                }
            }
            if parts.is_empty() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                f.write_str(&parts.join("*"))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Multidegree of `R[s]/I` using the ring's bigraded order.
pub fn multidegree(ideal: &Ideal, budget: Budget) -> Result<MultidegreeForm> {
    multidegree_with_order(ideal, &TermOrder::Bigraded, budget)
}

/// Multidegree computed from the initial ideal for `order`. Every term
/// order gives the same answer on bihomogeneous input.
pub fn multidegree_with_order(
    ideal: &Ideal,
    order: &TermOrder,
    budget: Budget,
) -> Result<MultidegreeForm> {
    let ring = ideal.ring();
    if ring.kinds().contains(&VarKind::Aux) {
        return Err(Error::invalid(
            "multidegree needs a ring of x- and s-variables",
        ));
    }
    if !ideal.is_bihomogeneous() {
        return Err(Error::invalid("multidegree needs a bihomogeneous ideal"));
    }
    let gb = ideal.groebner(order, budget)?;
    if gb.is_unit() {
        return Err(Error::invalid("multidegree of the unit ideal"));
    }
    let lead = gb.leading_monomials();
    let d = codim_of_monomials(&lead, ring.nvars())?;
    let k = hilbert_numerator(ring, &lead)?;
    let coeffs = lowest_part(&k, d)?;
    Ok(MultidegreeForm {
        d,
        coeffs,
        n: ring.num_x(),
        m: ring.num_s(),
    })
}

/// Degree-`d` part of `K(1 - p, 1 - u)` as `c_0..c_d` indexed by the power
/// of `p`, after checking all lower parts vanish.
fn lowest_part(k: &HilbertNumerator, d: usize) -> Result<Vec<BigInt>> {
    // table[a][b] = coefficient of p^a u^b for a + b <= d
    let mut table = vec![vec![BigInt::zero(); d + 1]; d + 1];
    for (&(i, j), c) in k.coeffs() {
        for a in 0..=d.min(i as usize) {
            let ca = binomial(BigInt::from(i), BigInt::from(a));
            for b in 0..=(d - a).min(j as usize) {
                let cb = binomial(BigInt::from(j), BigInt::from(b));
                let term = c * &ca * cb;
                if (a + b) % 2 == 1 {
                    table[a][b] -= term;
                } else {
                    table[a][b] += term;
                }
            }
        }
    }
    for (a, row) in table.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            if a + b < d && !c.is_zero() {
                return Err(Error::consistency(format!(
                    "Hilbert numerator has a nonzero part in degree {} below the codimension {d}",
                    a + b
                )));
            }
        }
    }
    let coeffs: Vec<BigInt> = (0..=d).map(|a| table[a][d - a].clone()).collect();
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(Error::consistency(
            "multidegree vanishes in the codimension",
        ));
    }
    Ok(coeffs)
}

/// `c_i` for the largest `i` with `c_i > 0`, after truncation.
pub fn ml_degree(form: &MultidegreeForm) -> Result<BigInt> {
    (0..=form.d)
        .rev()
        .map(|i| form.truncated_coeff(i))
        .find(|c| c.is_positive())
        .ok_or_else(|| Error::invalid("the form has no positive coefficient"))
}

/// Product of the positive column degrees of `A`, the ML degree of a free
/// and gentle arrangement.
pub fn ci_ml_degree(column_degrees: &[u32]) -> Result<BigInt> {
    if column_degrees.is_empty() {
        return Err(Error::invalid("no column degrees"));
    }
    Ok(column_degrees
        .iter()
        .filter(|&&d| d > 0)
        .map(|&d| BigInt::from(d))
        .product())
}
