use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::engine::Budget;
use crate::groebner::hilbert::{hilbert_numerator, HilbertNumerator};
use crate::groebner::ideal::{GroebnerBasis, Ideal};
use crate::poly::{Monomial, Polynomial, Ring, RingRef, TermOrder};

/// Reduced Gröbner basis of `ideal` for `order`.
pub fn groebner_basis(ideal: &Ideal, order: &TermOrder, budget: Budget) -> Result<Vec<Polynomial>> {
    Ok(ideal.groebner(order, budget)?.polys().to_vec())
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal, budget: Budget) -> Result<bool> {
    ideal.default_groebner(budget)?.contains(f)
}

/// `I ⊆ J`.
pub fn ideal_contained(i: &Ideal, j: &Ideal, budget: Budget) -> Result<bool> {
    if !Ring::same(i.ring(), j.ring()) {
        return Err(Error::RingMismatch);
    }
    let gb = j.default_groebner(budget)?;
    for g in i.gens() {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of ideals by comparing reduced bases for the default order.
pub fn ideal_equal(i: &Ideal, j: &Ideal, budget: Budget) -> Result<bool> {
    if !Ring::same(i.ring(), j.ring()) {
        return Err(Error::RingMismatch);
    }
    let a = i.default_groebner(budget)?;
    let b = j.default_groebner(budget)?;
    Ok(a.polys() == b.polys())
}

/// Generators of `I ∩ k[remaining variables]`, as an ideal of the same ring.
pub fn eliminate(ideal: &Ideal, vars: &[&str], budget: Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut mask = vec![false; ring.nvars()];
    for v in vars {
        mask[ring.var(v)?] = true;
    }
    let gb = ideal.groebner(&TermOrder::elimination(mask.clone()), budget)?;
    let keep = gb
        .polys()
        .iter()
        .filter(|p| p.support().iter().all(|&i| !mask[i]))
        .cloned()
        .collect();
    Ideal::new(ring, keep)
}

fn check_witness(ideal: &Ideal, f: &Polynomial) -> Result<()> {
    if !Ring::same(ideal.ring(), f.ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::invalid("cannot divide by the zero polynomial"));
    }
    Ok(())
}

/// Ideal generated by `gens` moved into `ring` extended by one trailing
/// auxiliary variable.
fn extend(gens: &[Polynomial], ext: &RingRef) -> Vec<Polynomial> {
    gens.iter()
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (m.extended(0), c.clone()))
                .collect();
            Polynomial::canonical(ext, terms)
        })
        .collect()
}

/// Drop the trailing auxiliary variable (which must not occur).
fn contract(p: &Polynomial, ring: &RingRef) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| (m.truncated(ring.nvars()), c.clone()))
        .collect();
    Polynomial::canonical(ring, terms)
}

/// Outcome of a colon or saturation computation.
#[derive(Debug, Clone)]
pub struct Colon {
    pub ideal: Ideal,
    /// False when the result is provably equal to the input ideal.
    pub changed: bool,
}

/// `I : f` (`saturate == false`) or `I : f^∞` for homogeneous `I` and `f`.
///
/// Works in `R[y]` with `J = I + <y - f>` and a weighted grevlex order in
/// which `y` is the last variable and has weight `deg f`. Then `y` divides
/// the leading term of a homogeneous element only if it divides the
/// element, so dividing basis elements by `y` (once, or as often as
/// possible) gives a basis of `J : y` (or `J : y^∞`). Substituting `y = f`
/// maps that back to `I : f` (or `I : f^∞`). The input is unchanged exactly
/// when no basis element is divisible by `y`.
fn colon_homogeneous(
    ideal: &Ideal,
    f: &Polynomial,
    saturate: bool,
    budget: Budget,
) -> Result<Colon> {
    let ring = ideal.ring();
    let d = f.total_degree().unwrap_or(0);
    if d == 0 {
        return Ok(Colon {
            ideal: ideal.clone(),
            changed: false,
        });
    }
    let ext = ring.with_aux("y");
    let yi = ring.nvars();
    let mut gens = extend(ideal.gens(), &ext);
    let fx = extend(core::slice::from_ref(f), &ext).pop().unwrap();
    gens.push(Polynomial::var_at(&ext, yi).try_sub(&fx)?);
    let mut weights = vec![1u32; ext.nvars()];
    weights[yi] = d;
    let order = TermOrder::WeightedGrevlex(weights);
    let gb = GroebnerBasis::compute(&ext, &gens, &order, budget)?;
    let mut changed = false;
    let mut out = Vec::with_capacity(gb.len());
    for g in gb.polys() {
        let k = g.terms().iter().map(|(m, _)| m[yi]).min().unwrap_or(0);
        let k = if saturate { k } else { k.min(1) };
        let g = if k > 0 {
            changed = true;
            let shift = Monomial::var(ext.nvars(), yi, k);
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (shift.quotient_of(m), c.clone()))
                .collect();
            Polynomial::canonical(&ext, terms)
        } else {
            g.clone()
        };
        if g.support().contains(&yi) {
            let sub = g.substitute(yi, &fx)?;
            out.push(contract(&sub, ring));
        } else {
            out.push(contract(&g, ring));
        }
    }
    if !changed {
        return Ok(Colon {
            ideal: ideal.clone(),
            changed,
        });
    }
    Ok(Colon {
        ideal: Ideal::new(ring, out)?,
        changed,
    })
}

fn homogeneous_case(ideal: &Ideal, f: &Polynomial) -> bool {
    ideal.is_homogeneous() && f.is_homogeneous()
}

/// `I : f = { g : g f ∈ I }`.
pub fn quotient(ideal: &Ideal, f: &Polynomial, budget: Budget) -> Result<Ideal> {
    quotient_detailed(ideal, f, budget).map(|c| c.ideal)
}

pub fn quotient_detailed(ideal: &Ideal, f: &Polynomial, budget: Budget) -> Result<Colon> {
    check_witness(ideal, f)?;
    if homogeneous_case(ideal, f) {
        colon_homogeneous(ideal, f, false, budget)
    } else {
        let q = quotient_by_intersection(ideal, f, budget)?;
        let changed = !ideal_contained(&q, ideal, budget)?;
        Ok(Colon { ideal: q, changed })
    }
}

/// `I : f` computed as `(I ∩ <f>) / f`, with the intersection obtained by
/// eliminating `t` from `t I + (1 - t) <f>`. Valid for any input.
pub fn quotient_by_intersection(ideal: &Ideal, f: &Polynomial, budget: Budget) -> Result<Ideal> {
    check_witness(ideal, f)?;
    let ring = ideal.ring();
    let ext = ring.with_aux("t");
    let ti = ring.nvars();
    let t = Polynomial::var_at(&ext, ti);
    let one_minus_t = Polynomial::one(&ext).try_sub(&t)?;
    let fx = extend(core::slice::from_ref(f), &ext).pop().unwrap();
    let mut gens: Vec<Polynomial> = extend(ideal.gens(), &ext)
        .iter()
        .map(|g| t.multiply(g))
        .collect::<Result<_>>()?;
    gens.push(one_minus_t.multiply(&fx)?);
    let mut mask = vec![false; ext.nvars()];
    mask[ti] = true;
    let gb = GroebnerBasis::compute(&ext, &gens, &TermOrder::elimination(mask), budget)?;
    let mut out = Vec::new();
    for g in gb.polys().iter().filter(|g| !g.support().contains(&ti)) {
        let g = contract(g, ring);
        let q = g.div_exact(f)?.ok_or_else(|| {
            Error::consistency(format!("intersection element {g} not divisible by {f}"))
        })?;
        out.push(q);
    }
    Ideal::new(ring, out)
}

/// `I : f^∞`.
pub fn saturate(ideal: &Ideal, f: &Polynomial, budget: Budget) -> Result<Ideal> {
    saturate_detailed(ideal, f, budget).map(|c| c.ideal)
}

pub fn saturate_detailed(ideal: &Ideal, f: &Polynomial, budget: Budget) -> Result<Colon> {
    check_witness(ideal, f)?;
    if homogeneous_case(ideal, f) {
        colon_homogeneous(ideal, f, true, budget)
    } else {
        let s = saturate_rabinowitsch(ideal, f, budget)?;
        let changed = !ideal_contained(&s, ideal, budget)?;
        Ok(Colon { ideal: s, changed })
    }
}

/// `I : f^∞` by eliminating `t` from `I + <1 - t f>`. Valid for any input.
pub fn saturate_rabinowitsch(ideal: &Ideal, f: &Polynomial, budget: Budget) -> Result<Ideal> {
    check_witness(ideal, f)?;
    let ring = ideal.ring();
    let ext = ring.with_aux("t");
    let ti = ring.nvars();
    let t = Polynomial::var_at(&ext, ti);
    let fx = extend(core::slice::from_ref(f), &ext).pop().unwrap();
    let mut gens = extend(ideal.gens(), &ext);
    gens.push(Polynomial::one(&ext).try_sub(&t.multiply(&fx)?)?);
    let mut mask = vec![false; ext.nvars()];
    mask[ti] = true;
    let gb = GroebnerBasis::compute(&ext, &gens, &TermOrder::elimination(mask), budget)?;
    let out = gb
        .polys()
        .iter()
        .filter(|g| !g.support().contains(&ti))
        .map(|g| contract(g, ring))
        .collect();
    Ideal::new(ring, out)
}

/// Whether `f` is a nonzerodivisor modulo `I`, i.e. `I : f = I`, for
/// bihomogeneous `I` and `f`. Uses the exact sequence
/// `0 -> (I:f)/I -> R/I(-deg f) -> R/I -> R/(I + <f>) -> 0`: the Hilbert
/// numerators satisfy `K(I + <f>) = (1 - t^deg f) K(I)` exactly when the
/// kernel vanishes. Needs one basis of `I` and one of `I + <f>`.
pub fn is_nonzerodivisor(ideal: &Ideal, f: &Polynomial, budget: Budget) -> Result<bool> {
    check_witness(ideal, f)?;
    let ring = ideal.ring();
    if ring.has_aux() {
        return Err(Error::invalid(
            "nonzerodivisor test needs a ring without auxiliary variables",
        ));
    }
    let Some(b) = f.bidegree() else {
        return Err(Error::invalid(
            "nonzerodivisor test needs a bihomogeneous element",
        ));
    };
    if !ideal.is_bihomogeneous() {
        return Err(Error::invalid(
            "nonzerodivisor test needs a bihomogeneous ideal",
        ));
    }
    let gb = ideal.default_groebner(budget)?;
    if gb.is_unit() {
        return Ok(true);
    }
    let mut gens = gb.polys().to_vec();
    gens.push(f.clone());
    let with_f = GroebnerBasis::compute(ring, &gens, &ring.default_order(), budget)?;
    let k = hilbert_numerator(ring, &gb.leading_monomials())?;
    let kf = hilbert_numerator(ring, &with_f.leading_monomials())?;
    Ok(kf == k.mul(&HilbertNumerator::binomial(b.dx, b.ds)))
}

/// Saturate by each factor in turn (smallest total degree first) until a
/// full pass changes nothing. Equals `I : (f_1 ⋯ f_k)^∞`.
pub fn saturate_product(ideal: &Ideal, factors: &[Polynomial], budget: Budget) -> Result<Ideal> {
    let mut fs: Vec<&Polynomial> = factors.iter().collect();
    fs.sort_by_key(|f| f.total_degree().unwrap_or(0));
    let mut cur = ideal.clone();
    loop {
        let mut any = false;
        for f in &fs {
            let c = saturate_detailed(&cur, f, budget)?;
            if c.changed {
                any = true;
                cur = c.ideal;
            }
        }
        if !any {
            return Ok(cur);
        }
    }
}

/// A minimal generating set of a homogeneous ideal.
///
/// Generators are scanned by increasing total degree and kept only when
/// they are not already in the ideal of those kept before. By the graded
/// Nakayama lemma the number kept is the minimal number of generators.
pub fn minimal_generators(ideal: &Ideal, budget: Budget) -> Result<Ideal> {
    if !ideal.is_homogeneous() {
        return Err(Error::invalid(
            "minimal generators need a homogeneous ideal",
        ));
    }
    let mut cands: Vec<&Polynomial> = ideal.gens().iter().collect();
    cands.sort_by_key(|g| (g.total_degree().unwrap_or(0), g.len()));
    let ring = ideal.ring();
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut gb = Ideal::zero(ring).default_groebner(budget)?;
    for g in cands {
        if !gb.contains(g)? {
            kept.push(g.clone());
            gb = Ideal::new(ring, kept.clone())?.default_groebner(budget)?;
        }
    }
    Ideal::new(ring, kept)
}

/// Leading monomials of the reduced basis for `order`.
pub fn initial_ideal(ideal: &Ideal, order: &TermOrder, budget: Budget) -> Result<Vec<Monomial>> {
    Ok(ideal.groebner(order, budget)?.leading_monomials())
}

/// Codimension of `V(I)` in the affine space of all ring variables.
pub fn codim(ideal: &Ideal, budget: Budget) -> Result<usize> {
    let gb = ideal.default_groebner(budget)?;
    if gb.is_unit() {
        return Err(Error::invalid("codimension of the unit ideal is undefined"));
    }
    codim_of_monomials(&gb.leading_monomials(), ideal.ring().nvars())
}

/// Codimension of a monomial ideal: the smallest set of variables meeting
/// the support of every generator.
pub fn codim_of_monomials(gens: &[Monomial], nvars: usize) -> Result<usize> {
    if nvars > 128 {
        return Err(Error::invalid(
            "too many variables for the codimension search",
        ));
    }
    let mut sets: Vec<u128> = gens
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u128, |a, (i, _)| a | 1 << i)
        })
        .collect();
    if sets.contains(&0) {
        return Err(Error::invalid("codimension of the unit ideal is undefined"));
    }
    sets.sort_by_key(|s| s.count_ones());
    sets.dedup();
    // drop supersets, which are hit whenever a subset is
    let mut minimal: Vec<u128> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|&t| t & s == t) {
            minimal.push(s);
        }
    }
    let mut best = nvars + 1;
    hitting_set(&minimal, 0, 0, &mut best);
    Ok(best.min(nvars))
}

fn hitting_set(sets: &[u128], chosen: u128, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    // the uncovered set with fewest variables gives the narrowest branching
    let Some(&s) = sets
        .iter()
        .filter(|&&s| s & chosen == 0)
        .min_by_key(|s| s.count_ones())
    else {
        *best = size;
        return;
    };
    // disjoint uncovered sets need distinct variables: a cheap lower bound
    let mut used = chosen;
    let mut lower = 0;
    for &t in sets {
        if t & used == 0 {
            used |= t;
            lower += 1;
        }
    }
    if size + lower >= *best {
        return;
    }
    let mut bits = s;
    while bits != 0 {
        let b = bits & bits.wrapping_neg();
        hitting_set(sets, chosen | b, size + 1, best);
        bits &= bits - 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn setup(vars: &[&str]) -> RingRef {
        Ring::with_x(vars).unwrap()
    }

    #[test]
    fn spec_groebner_examples() {
        let r = setup(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let gb = groebner_basis(&i, &TermOrder::Grevlex, Budget::default()).unwrap();
        assert_eq!(
            gb,
            vec![
                parse_poly("x*y", &r).unwrap(),
                parse_poly("x^2", &r).unwrap()
            ]
        );
        let i = Ideal::parse(&r, &["x-y", "y-z"]).unwrap();
        let gb = groebner_basis(&i, &TermOrder::Lex, Budget::default()).unwrap();
        assert_eq!(
            gb,
            vec![
                parse_poly("y-z", &r).unwrap(),
                parse_poly("x-z", &r).unwrap()
            ]
        );
        let i = Ideal::parse(&r, &["1", "x"]).unwrap();
        assert_eq!(
            groebner_basis(&i, &TermOrder::Grevlex, Budget::default()).unwrap(),
            vec![Polynomial::one(&r)]
        );
    }

    #[test]
    fn membership_and_equality() {
        let r = setup(&["x", "y"]);
        let i = Ideal::parse(&r, &["x"]).unwrap();
        assert!(!ideal_member(&Polynomial::one(&r), &i, Budget::default()).unwrap());
        let a = Ideal::parse(&r, &["x", "y"]).unwrap();
        let b = Ideal::parse(&r, &["y", "x+y"]).unwrap();
        assert!(ideal_equal(&a, &b, Budget::default()).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = setup(&["t", "x", "y"]);
        let i = Ideal::parse(&r, &["t-x", "t-y"]).unwrap();
        let e = eliminate(&i, &["t"], Budget::default()).unwrap();
        assert!(ideal_equal(&e, &Ideal::parse(&r, &["x-y"]).unwrap(), Budget::default()).unwrap());
        let i = Ideal::parse(&r, &["x"]).unwrap();
        let e = eliminate(&i, &["y"], Budget::default()).unwrap();
        assert!(ideal_equal(&e, &i, Budget::default()).unwrap());
        let i = Ideal::parse(&r, &["1-t*x"]).unwrap();
        assert!(eliminate(&i, &["t"], Budget::default())
            .unwrap()
            .gens()
            .is_empty());
    }

    #[test]
    fn minimal_generating_sets() {
        let r = setup(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x^2*y", "x", "x*y", "y^2", "x*z+y^2", "z^3"]).unwrap();
        let m = minimal_generators(&i, Budget::default()).unwrap();
        assert_eq!(m.gens().len(), 3);
        assert!(ideal_equal(&m, &i, Budget::default()).unwrap());
        assert!(
            minimal_generators(&Ideal::parse(&r, &["x+1"]).unwrap(), Budget::default()).is_err()
        );
    }

    #[test]
    fn colon_examples() {
        let r = setup(&["x", "y", "z"]);
        let b = Budget::default();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        let id = |g: &[&str]| Ideal::parse(&r, g).unwrap();
        assert!(ideal_equal(
            &quotient(&id(&["x*y"]), &p("x"), b).unwrap(),
            &id(&["y"]),
            b
        )
        .unwrap());
        assert!(ideal_equal(&quotient(&id(&["x"]), &p("y"), b).unwrap(), &id(&["x"]), b).unwrap());
        assert!(ideal_equal(
            &saturate(&id(&["x^2*y", "x^2*z"]), &p("x"), b).unwrap(),
            &id(&["y", "z"]),
            b
        )
        .unwrap());
        assert!(ideal_equal(&saturate(&id(&["x"]), &p("y"), b).unwrap(), &id(&["x"]), b).unwrap());
        // both routes agree, also for non-variable witnesses
        let i = id(&["x^2*y - x*y*z", "y^3 - x*z^2"]);
        for f in ["x", "y", "x-z", "x*y+z^2"] {
            let a = saturate(&i, &p(f), b).unwrap();
            let c = saturate_rabinowitsch(&i, &p(f), b).unwrap();
            assert!(ideal_equal(&a, &c, b).unwrap(), "saturation by {f}");
            let a = quotient(&i, &p(f), b).unwrap();
            let c = quotient_by_intersection(&i, &p(f), b).unwrap();
            assert!(ideal_equal(&a, &c, b).unwrap(), "quotient by {f}");
        }
    }

    #[test]
    fn codimensions() {
        let r = setup(&["x", "y", "z"]);
        let b = Budget::default();
        assert_eq!(
            codim(&Ideal::parse(&r, &["x", "y"]).unwrap(), b).unwrap(),
            2
        );
        assert_eq!(codim(&Ideal::zero(&r), b).unwrap(), 0);
        assert_eq!(
            codim(&Ideal::parse(&r, &["x*y", "x*z"]).unwrap(), b).unwrap(),
            1
        );
        assert!(codim(&Ideal::parse(&r, &["x", "1+y"]).unwrap(), b).is_ok());
        assert!(codim(&Ideal::parse(&r, &["x", "1"]).unwrap(), b).is_err());
    }

    #[test]
    fn nonzerodivisor_agrees_with_quotient() {
        let r = Ring::new(&["x", "y", "z"], &["s1", "s2"]).unwrap();
        let b = Budget::default();
        let cases: [(&[&str], &str); 5] = [
            (&["x*y"], "x"),
            (&["x*s1", "y*s2"], "z"),
            (&["x*s1 - y*s2", "x^2"], "x"),
            (&["x*s1 - y*s2", "x*s2"], "y"),
            (&["s1 + s2", "x*s1 + y*s2"], "x - y"),
        ];
        for (gens, f) in cases {
            let i = Ideal::parse(&r, gens).unwrap();
            let f = parse_poly(f, &r).unwrap();
            let q = quotient_detailed(&i, &f, b).unwrap();
            assert_eq!(
                is_nonzerodivisor(&i, &f, b).unwrap(),
                !q.changed,
                "{gens:?} : {f}"
            );
        }
    }
}
