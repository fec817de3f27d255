use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::poly::monomial::{Exps, Monomial};

/// A monomial order. Every variant is a total order compatible with
/// multiplication in which `1` is the smallest monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Pure lexicographic with the first ring variable largest.
    Lex,
    /// Graded reverse lexicographic.
    Grevlex,
    /// Weighted degree first, ties broken reverse lexicographically.
    /// Weights must be positive.
    WeightedGrevlex(Vec<u32>),
    /// Block elimination order: compare the variables flagged in `elim`
    /// with `first`, then the remaining variables with `second`.
    Block {
        elim: Vec<bool>,
        first: Box<TermOrder>,
        second: Box<TermOrder>,
    },
    /// x-degree, then s-degree, then grevlex. The x-block is taken from the
    /// ring the monomials live in: x-variables first, then `ns` s-variables.
    BigradedWith { nx: usize, ns: usize },
    /// Shorthand resolved against a ring by [`TermOrder::resolve`].
    Bigraded,
}

impl TermOrder {
    /// Block order eliminating the flagged variables, grevlex inside both blocks.
    pub fn elimination(elim: Vec<bool>) -> TermOrder {
        TermOrder::Block {
            elim,
            first: Box::new(TermOrder::Grevlex),
            second: Box::new(TermOrder::Grevlex),
        }
    }

    /// Replace the ring-relative shorthand by concrete block sizes.
    pub fn resolve(&self, ring: &crate::poly::Ring) -> TermOrder {
        match self {
            TermOrder::Bigraded => TermOrder::BigradedWith {
                nx: ring.num_x(),
                ns: ring.num_s(),
            },
            TermOrder::Block {
                elim,
                first,
                second,
            } => TermOrder::Block {
                elim: elim.clone(),
                first: Box::new(first.resolve(ring)),
                second: Box::new(second.resolve(ring)),
            },
            o => o.clone(),
        }
    }

    /// Checked comparison of two monomials of the same length.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        if let TermOrder::WeightedGrevlex(w) = self {
            if w.len() != a.len() {
                return Err(Error::LengthMismatch {
                    expected: w.len(),
                    got: a.len(),
                });
            }
        }
        Ok(self.cmp(a.exponents(), b.exponents()))
    }

    pub(crate) fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            TermOrder::Lex => lex(a, b),
            TermOrder::Grevlex => {
                let (da, db) = (deg(a), deg(b));
                da.cmp(&db).then_with(|| revlex(a, b))
            }
            TermOrder::WeightedGrevlex(w) => {
                let (da, db) = (wdeg(a, w), wdeg(b, w));
                da.cmp(&db).then_with(|| revlex(a, b))
            }
            TermOrder::Block {
                elim,
                first,
                second,
            } => {
                let (ea, eb) = (masked(a, elim, true), masked(b, elim, true));
                first.cmp(&ea, &eb).then_with(|| {
                    let (ra, rb) = (masked(a, elim, false), masked(b, elim, false));
                    second.cmp(&ra, &rb)
                })
            }
            TermOrder::BigradedWith { nx, ns } => {
                let split = (*nx).min(a.len());
                let end = (nx + ns).min(a.len());
                let (xa, xb) = (deg(&a[..split]), deg(&b[..split]));
                xa.cmp(&xb)
                    .then_with(|| deg(&a[split..end]).cmp(&deg(&b[split..end])))
                    .then_with(|| deg(a).cmp(&deg(b)))
                    .then_with(|| revlex(a, b))
            }
            TermOrder::Bigraded => {
                // Unresolved shorthand: behave like grevlex.
                deg(a).cmp(&deg(b)).then_with(|| revlex(a, b))
            }
        }
    }

    /// Positive grading weights the order is compatible with, if it is a
    /// degree order (used for sugar degrees and homogeneity checks).
    pub(crate) fn weights(&self, nvars: usize) -> Vec<u32> {
        match self {
            TermOrder::WeightedGrevlex(w) => w.clone(),
            _ => alloc::vec![1; nvars],
        }
    }
}

fn deg(a: &[u16]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

fn wdeg(a: &[u16], w: &[u32]) -> u64 {
    a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum()
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn masked(a: &[u16], mask: &[bool], keep: bool) -> Exps {
    a.iter()
        .enumerate()
        .map(|(i, &e)| {
            if mask.get(i).copied().unwrap_or(false) == keep {
                e
            } else {
                0
            }
        })
        .collect()
}
