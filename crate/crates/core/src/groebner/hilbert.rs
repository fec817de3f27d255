use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{monomial_bidegree, Monomial, Ring, VarKind};

/// Numerator `K(t1, t2)` of the bigraded Hilbert series of `R[s]/M` over
/// the denominator `(1 - t1)^n (1 - t2)^m`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HilbertNumerator {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl HilbertNumerator {
    pub fn one() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), BigInt::one());
        HilbertNumerator { coeffs }
    }

    /// Coefficient of `t1^i t2^j`.
    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients keyed by exponent pair.
    pub fn coeffs(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.coeffs
    }

    /// `K(1, 1)`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    fn add_shifted(&mut self, other: &HilbertNumerator, di: u32, dj: u32, sign: i32) {
        for (&(i, j), c) in &other.coeffs {
            let e = self.coeffs.entry((i + di, j + dj)).or_default();
            if sign > 0 {
                *e += c;
            } else {
                *e -= c;
            }
        }
        self.coeffs.retain(|_, c| !c.is_zero());
    }

    pub(crate) fn mul(&self, other: &HilbertNumerator) -> HilbertNumerator {
        let mut out = HilbertNumerator::default();
        for (&(i, j), c) in &self.coeffs {
            for (&(k, l), d) in &other.coeffs {
                *out.coeffs.entry((i + k, j + l)).or_default() += c * d;
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    /// `1 - t1^i t2^j`.
    pub(crate) fn binomial(i: u32, j: u32) -> HilbertNumerator {
        let mut k = HilbertNumerator::one();
        k.add_shifted(&HilbertNumerator::one(), i, j, -1);
        k
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (&(i, j), c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let a = c.abs();
            let mut parts: Vec<alloc::string::String> = Vec::new();
            for (v, e) in [("t1", i), ("t2", j)] {
                match e {
                    0 => {}
                    1 => parts.push(v.into()),
                    _ => parts.push(alloc::format!("{v}^{e}")),
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
        Ok(())
    }
}

/// Hilbert numerator of the monomial ideal generated by `gens` in `ring`,
/// where x-variables have bidegree (1,0) and s-variables (0,1).
pub fn hilbert_numerator(ring: &Ring, gens: &[Monomial]) -> Result<HilbertNumerator> {
    if ring.kinds().contains(&VarKind::Aux) {
        return Err(Error::invalid(
            "Hilbert series needs a ring without auxiliary variables",
        ));
    }
    for g in gens {
        if g.len() != ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: ring.nvars(),
                got: g.len(),
            });
        }
    }
    Ok(numerator(ring, minimalize(gens.to_vec())))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Pivot recursion: `K(M) = K(M + <p>) + t^deg(p) K(M : p)` for a pure
/// power `p` of a frequently occurring variable.
fn numerator(ring: &Ring, gens: Vec<Monomial>) -> HilbertNumerator {
    if gens.is_empty() {
        return HilbertNumerator::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return HilbertNumerator::default();
    }
    let nv = ring.nvars();
    let mut count = alloc::vec![0usize; nv];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                count[i] += 1;
            }
        }
    }
    let (var, &most) = count
        .iter()
        .enumerate()
        .max_by_key(|(i, c)| (**c, core::cmp::Reverse(*i)))
        .unwrap();
    if most <= 1 {
        // pairwise coprime generators form a regular sequence
        let mut k = HilbertNumerator::one();
        for g in &gens {
            let b = monomial_bidegree(ring, g);
            k = k.mul(&HilbertNumerator::binomial(b.dx, b.ds));
        }
        return k;
    }
    let mut exps: Vec<u16> = gens.iter().map(|g| g[var]).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let pivot = Monomial::var(nv, var, e);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut m = g.clone();
            m.0[var] = m.0[var].saturating_sub(e);
            m
        })
        .collect();
    let b = monomial_bidegree(ring, &pivot);
    let mut k = numerator(ring, minimalize(plus));
    k.add_shifted(&numerator(ring, minimalize(colon)), b.dx, b.ds, 1);
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn small_cases() {
        let r = Ring::new(&["x1", "x2"], &["s1", "s2"]).unwrap();
        assert_eq!(hilbert_numerator(&r, &[]).unwrap(), HilbertNumerator::one());
        assert_eq!(
            hilbert_numerator(&r, &[m(&[1, 0, 0, 0])])
                .unwrap()
                .to_string(),
            "1 - t1"
        );
        assert_eq!(
            hilbert_numerator(&r, &[m(&[1, 0, 1, 0])])
                .unwrap()
                .to_string(),
            "1 - t1*t2"
        );
    }

    #[test]
    fn inclusion_exclusion() {
        // <x*y, x*z> = x <y, z>: 1 - 2 t^2 + t^3
        let r = Ring::with_x(&["x", "y", "z"]).unwrap();
        let k = hilbert_numerator(&r, &[m(&[1, 1, 0]), m(&[1, 0, 1])]).unwrap();
        assert_eq!(k.to_string(), "1 - 2*t1^2 + t1^3");
        // K(1,1) = 0 for any nonzero proper ideal
        assert!(k.at_one().is_zero());
        let k = hilbert_numerator(
            &r,
            &[m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 3, 1]), m(&[1, 0, 2])],
        )
        .unwrap();
        assert!(k.at_one().is_zero());
    }
}
