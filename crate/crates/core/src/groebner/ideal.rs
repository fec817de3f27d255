use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::engine::{self, Budget, EPoly, ETerm, ModOrder, Reducers, Stats};
use crate::poly::{Coeff, Monomial, Polynomial, Ring, RingRef, TermOrder};

/// Integer-coefficient copy of `p` sorted for `order`, at position `pos`.
pub(crate) fn to_epoly(p: &Polynomial, order: &ModOrder, pos: u32) -> EPoly {
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
    }
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| ETerm {
            m: m.clone(),
            pos,
            c: c.numer() * (&den / c.denom()),
        })
        .collect();
    let terms = order.canonical(terms);
    let sugar = order.sugar_of(&terms);
    let mut e = EPoly { terms, sugar };
    e.make_primitive();
    e
}

/// Polynomial from the terms of `e` at position `pos`.
pub(crate) fn from_epoly(ring: &RingRef, e: &EPoly, pos: u32) -> Polynomial {
    let terms = e
        .terms
        .iter()
        .filter(|t| t.pos == pos)
        .map(|t| (t.m.clone(), Coeff::from_integer(t.c.clone())))
        .collect();
    Polynomial::canonical(ring, terms)
}

/// A reduced Gröbner basis: content-one integer generators with positive
/// leading coefficients, sorted increasingly by leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: RingRef,
    order: TermOrder,
    mord: ModOrder,
    elems: Vec<EPoly>,
    polys: Vec<Polynomial>,
    stats: Stats,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.polys == other.polys
    }
}

impl GroebnerBasis {
    pub(crate) fn compute(
        ring: &RingRef,
        gens: &[Polynomial],
        order: &TermOrder,
        budget: Budget,
    ) -> Result<Self> {
        let order = order.resolve(ring);
        if let TermOrder::WeightedGrevlex(w) = &order {
            if w.len() != ring.nvars() || w.contains(&0) {
                return Err(Error::invalid("weights must be positive, one per variable"));
            }
        }
        let mord = ModOrder::ideal(order.clone(), ring.nvars());
        let epolys = gens.iter().map(|g| to_epoly(g, &mord, 0)).collect();
        let (elems, stats) = engine::groebner(&mord, epolys, budget)?;
        let polys = elems.iter().map(|e| from_epoly(ring, e, 0)).collect();
        Ok(GroebnerBasis {
            ring: ring.clone(),
            order,
            mord,
            elems,
            polys,
            stats,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn stats(&self) -> Stats {
        self.stats
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0].lead().m.is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lead().m.clone()).collect()
    }

    /// Normal form of `f`. The result is exact: `f - nf` lies in the ideal.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if !Ring::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(normal_form(&self.ring, f, &self.elems, &self.mord))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !Ring::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let e = to_epoly(f, &self.mord, 0);
        Ok(engine::reduce(
            &self.mord,
            e,
            &Reducers::new(self.elems.iter().collect()),
            None,
            false,
        )
        .poly
        .is_zero())
    }

    /// Recheck Buchberger's criterion on the stored basis.
    pub fn verify(&self) -> Result<()> {
        engine::check_criterion(&self.mord, &self.elems).map_err(Error::Consistency)
    }
}

fn normal_form(ring: &RingRef, f: &Polynomial, basis: &[EPoly], mord: &ModOrder) -> Polynomial {
    if f.is_zero() {
        return f.clone();
    }
    // to_epoly scales f by a positive rational; undo it at the end
    let e = to_epoly(f, mord, 0);
    let scale = f.leading_term(&mord.mono).expect("nonzero").1.clone()
        / Coeff::from_integer(e.lead().c.clone());
    let r = engine::reduce(mord, e, &Reducers::new(basis.iter().collect()), None, false);
    let back = Coeff::new(r.mult_den, r.mult_num) * scale;
    from_epoly(ring, &r.poly, 0).scale(&back)
}

/// Normal form of `f` with respect to an arbitrary list (not necessarily a
/// Gröbner basis) under `order`.
pub fn reduce(f: &Polynomial, g: &[Polynomial], order: &TermOrder) -> Result<Polynomial> {
    let ring = f.ring();
    if g.iter().any(|p| !Ring::same(p.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    let mord = ModOrder::ideal(order.resolve(ring), ring.nvars());
    let basis: Vec<EPoly> = g
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| to_epoly(p, &mord, 0))
        .collect();
    Ok(normal_form(ring, f, &basis, &mord))
}

/// An ideal given by generators, optionally carrying a cached reduced
/// Gröbner basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    cache: Option<Arc<GroebnerBasis>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !Ring::same(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            cache: None,
        })
    }

    pub fn parse(ring: &RingRef, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| crate::poly::parse_poly(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            cache: None,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn cached(&self) -> Option<&Arc<GroebnerBasis>> {
        self.cache.as_ref()
    }

    /// Homogeneous in the standard grading (every variable of degree one).
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_bihomogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.bidegree().is_some())
    }

    /// Reduced Gröbner basis for `order`, reusing the cache when it matches.
    pub fn groebner(&self, order: &TermOrder, budget: Budget) -> Result<Arc<GroebnerBasis>> {
        let order = order.resolve(&self.ring);
        if let Some(c) = &self.cache {
            if c.order == order {
                return Ok(c.clone());
            }
        }
        Ok(Arc::new(GroebnerBasis::compute(
            &self.ring, &self.gens, &order, budget,
        )?))
    }

    /// Basis for the ring's default order.
    pub fn default_groebner(&self, budget: Budget) -> Result<Arc<GroebnerBasis>> {
        self.groebner(&self.ring.default_order(), budget)
    }

    /// This ideal with its basis for `order` cached.
    pub fn with_groebner(mut self, order: &TermOrder, budget: Budget) -> Result<Self> {
        let gb = self.groebner(order, budget)?;
        self.cache = Some(gb);
        Ok(self)
    }

    /// The ideal generated by a basis, with that basis cached.
    pub fn from_groebner(gb: GroebnerBasis) -> Self {
        Ideal {
            ring: gb.ring.clone(),
            gens: gb.polys.clone(),
            cache: Some(Arc::new(gb)),
        }
    }

    /// Generators replaced by the reduced basis for the default order.
    pub fn interreduced(&self, budget: Budget) -> Result<Self> {
        let gb = self.default_groebner(budget)?;
        Ok(Ideal {
            ring: self.ring.clone(),
            gens: gb.polys.clone(),
            cache: Some(gb),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn exact_normal_forms() {
        let r = Ring::with_x(&["x", "y"]).unwrap();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        assert!(reduce(&p("x^2"), &[p("x")], &TermOrder::Grevlex)
            .unwrap()
            .is_zero());
        assert_eq!(
            reduce(&p("x^2+y"), &[p("x")], &TermOrder::Grevlex).unwrap(),
            p("y")
        );
        assert_eq!(
            reduce(&p("3/2*x^2 + 5/7*y"), &[p("2*x - 3*y")], &TermOrder::Lex).unwrap(),
            p("27/8*y^2 + 5/7*y")
        );
    }
}
