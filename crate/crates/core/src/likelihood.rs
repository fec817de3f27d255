//! Arrangements of hypersurfaces, their pre-likelihood and likelihood
//! ideals, and the gentleness test.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groebner::{
    ideal_contained, is_nonzerodivisor, saturate_detailed, Budget, Colon, Ideal,
};
use crate::poly::{Coeff, Polynomial, Ring, RingRef, VarKind};
use crate::syzygy::{kernel, module_member, split_kernel, ModuleVector, PolyMatrix};

/// Homogeneous polynomials `f_1, ..., f_m` in `x_1, ..., x_n`.
#[derive(Debug, Clone)]
pub struct Arrangement {
    ring: RingRef,
    sring: RingRef,
    polys: Vec<Polynomial>,
    degrees: Vec<u32>,
}

impl Arrangement {
    /// Data variables are named `s1, ..., sm`.
    pub fn new(ring: &RingRef, polys: Vec<Polynomial>) -> Result<Self> {
        let names: Vec<String> = (1..=polys.len()).map(|i| format!("s{i}")).collect();
        Self::with_s_names(ring, polys, &names)
    }

    pub fn with_s_names<S: AsRef<str>>(
        ring: &RingRef,
        polys: Vec<Polynomial>,
        s_names: &[S],
    ) -> Result<Self> {
        Self::build(ring, polys, s_names, true)
    }

    /// Like [`Arrangement::new`] but only warns when two polynomials share
    /// a factor. The algebra still runs; the structural results about the
    /// likelihood module assume coprime input.
    pub fn new_unchecked(ring: &RingRef, polys: Vec<Polynomial>) -> Result<Self> {
        let names: Vec<String> = (1..=polys.len()).map(|i| format!("s{i}")).collect();
        Self::build(ring, polys, &names, false)
    }

    pub fn with_s_names_unchecked<S: AsRef<str>>(
        ring: &RingRef,
        polys: Vec<Polynomial>,
        s_names: &[S],
    ) -> Result<Self> {
        Self::build(ring, polys, s_names, false)
    }

    fn build<S: AsRef<str>>(
        ring: &RingRef,
        polys: Vec<Polynomial>,
        s_names: &[S],
        reject_common: bool,
    ) -> Result<Self> {
        if ring.kinds().iter().any(|k| *k != VarKind::X) {
            return Err(Error::invalid(
                "an arrangement lives in a ring of x-variables only",
            ));
        }
        if polys.is_empty() {
            return Err(Error::invalid(
                "an arrangement needs at least one polynomial",
            ));
        }
        if s_names.len() != polys.len() {
            return Err(Error::LengthMismatch {
                expected: polys.len(),
                got: s_names.len(),
            });
        }
        let mut degrees = Vec::with_capacity(polys.len());
        for (i, f) in polys.iter().enumerate() {
            if !Ring::same(f.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if f.is_zero() {
                return Err(Error::invalid(format!("f{} is zero", i + 1)));
            }
            if !f.is_homogeneous() {
                return Err(Error::invalid(format!(
                    "f{} = {f} is not homogeneous",
                    i + 1
                )));
            }
            let d = f.total_degree().unwrap();
            if d == 0 {
                return Err(Error::invalid(format!("f{} is a constant", i + 1)));
            }
            degrees.push(d);
        }
        if polys.len() <= ring.nvars() {
            log::warn!(
                "arrangement has m = {} <= n = {}; continuing anyway",
                polys.len(),
                ring.nvars()
            );
        }
        if let Some((i, j)) = common_factor(&polys)? {
            let msg = format!("f{} and f{} share a common factor", i + 1, j + 1);
            if reject_common {
                return Err(Error::invalid(msg));
            }
            log::warn!("{msg}; continuing anyway");
        }
        let sring = ring.with_s_vars(s_names)?;
        Ok(Arrangement {
            ring: ring.clone(),
            sring,
            polys,
            degrees,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// The ring `R[s]` with the data variables appended.
    pub fn s_ring(&self) -> &RingRef {
        &self.sring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn m(&self) -> usize {
        self.polys.len()
    }

    pub fn n(&self) -> usize {
        self.ring.nvars()
    }

    /// `f` moved into `R[s]`.
    pub fn lift(&self, f: &Polynomial) -> Result<Polynomial> {
        f.embed(&self.sring)
    }

    /// The Euler vector `(d_1, ..., d_m; -x_1, ..., -x_n)`.
    pub fn euler_vector(&self) -> ModuleVector {
        let mut v: ModuleVector = self
            .degrees
            .iter()
            .map(|&d| Polynomial::from_int(&self.ring, d as i64))
            .collect();
        v.extend((0..self.n()).map(|j| Polynomial::var_at(&self.ring, j).neg()));
        v
    }
}

/// Restrict to two pseudo-random affine lines and look for a pair whose
/// univariate restrictions share a root on both. Coprime polynomials pass
/// except on a measure-zero set of lines.
fn common_factor(polys: &[Polynomial]) -> Result<Option<(usize, usize)>> {
    let ring = polys[0].ring();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut lines = Vec::new();
    for _ in 0..2 {
        let a: Vec<i64> = (0..ring.nvars()).map(|_| rng.gen_range(-97..=97)).collect();
        let b: Vec<i64> = (0..ring.nvars()).map(|_| rng.gen_range(-97..=97)).collect();
        let restricted: Vec<Vec<Coeff>> = polys.iter().map(|f| restrict(f, &a, &b)).collect();
        lines.push(restricted);
    }
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            if lines
                .iter()
                .all(|r| upoly_degree(&upoly_gcd(&r[i], &r[j])) > 0)
            {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Coefficients (constant first) of `f(a + t b)`.
fn restrict(f: &Polynomial, a: &[i64], b: &[i64]) -> Vec<Coeff> {
    let mut acc: Vec<Coeff> = vec![Coeff::zero()];
    for (m, c) in f.terms() {
        let mut term = vec![c.clone()];
        for (j, &e) in m.exponents().iter().enumerate() {
            let lin = vec![
                Coeff::from_integer(BigInt::from(a[j])),
                Coeff::from_integer(BigInt::from(b[j])),
            ];
            for _ in 0..e {
                term = upoly_mul(&term, &lin);
            }
        }
        if term.len() > acc.len() {
            acc.resize(term.len(), Coeff::zero());
        }
        for (k, c) in term.into_iter().enumerate() {
            acc[k] += c;
        }
    }
    trim(acc)
}

fn trim(mut p: Vec<Coeff>) -> Vec<Coeff> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

fn upoly_mul(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    let mut out = vec![Coeff::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn upoly_degree(p: &[Coeff]) -> usize {
    p.len() - 1
}

fn upoly_gcd(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !(b.len() == 1 && b[0].is_zero()) {
        // a mod b
        let mut r = a.clone();
        let lb = b.last().unwrap().clone();
        while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
            let q = r.last().unwrap() / &lb;
            let shift = r.len() - b.len();
            for (k, c) in b.iter().enumerate() {
                r[shift + k] -= &q * c;
            }
            r.pop();
            r = trim(r);
            if r.is_empty() {
                r.push(Coeff::zero());
            }
        }
        a = b;
        b = trim(r);
    }
    a
}

/// `Q = [diag(f) | Jac(F)]`, an `m × (m + n)` matrix.
pub fn build_q(arr: &Arrangement) -> PolyMatrix {
    let (m, n) = (arr.m(), arr.n());
    let mut q = PolyMatrix::zeros(&arr.ring, m, m + n);
    for (i, f) in arr.polys.iter().enumerate() {
        q.set(i, i, f.clone());
        for j in 0..n {
            q.set(i, m + j, f.partial_derivative_at(j));
        }
    }
    q
}

/// The Jacobian matrix of `(f_1, ..., f_m)`, `m × n`.
pub fn jacobian(arr: &Arrangement) -> PolyMatrix {
    let mut jac = PolyMatrix::zeros(&arr.ring, arr.m(), arr.n());
    for (i, f) in arr.polys.iter().enumerate() {
        for j in 0..arr.n() {
            jac.set(i, j, f.partial_derivative_at(j));
        }
    }
    jac
}

/// `Q` together with kernel generators split as `[A; B]`.
#[derive(Debug, Clone)]
pub struct LikelihoodPresentation {
    pub q: PolyMatrix,
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    pub l: usize,
}

impl LikelihoodPresentation {
    /// Degree of each column of `A` (`None` for zero columns).
    pub fn column_degrees(&self) -> Vec<Option<u32>> {
        (0..self.a.ncols())
            .map(|j| {
                (0..self.a.nrows())
                    .filter_map(|i| self.a.get(i, j).total_degree())
                    .next()
            })
            .collect()
    }
}

/// Kernel of `Q`, checked to annihilate `Q` and to contain the Euler vector.
pub fn presentation(arr: &Arrangement, budget: Budget) -> Result<LikelihoodPresentation> {
    let q = build_q(arr);
    let euler = PolyMatrix::from_columns(&arr.ring, arr.m() + arr.n(), &[arr.euler_vector()])?;
    if !q.multiply(&euler)?.is_zero() {
        return Err(Error::consistency("Euler vector is not a syzygy of Q"));
    }
    let k = kernel(&q, budget)?;
    let (a, b) = split_kernel(&k, arr.m(), arr.n())?;
    Ok(LikelihoodPresentation {
        l: k.ncols(),
        q,
        a,
        b,
    })
}

/// `s^T · col` for a column of `A`.
fn s_dot(arr: &Arrangement, col: &[Polynomial]) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(&arr.sring);
    for (i, a) in col.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let s = Polynomial::var_at(&arr.sring, arr.n() + i);
        acc = acc.try_add(&s.multiply(&a.embed(&arr.sring)?)?)?;
    }
    Ok(acc)
}

/// The ideal `<s^T A>` in `R[s]`, one generator per nonzero column of `A`.
pub fn pre_likelihood_ideal(arr: &Arrangement, pres: &LikelihoodPresentation) -> Result<Ideal> {
    let mut gens = Vec::new();
    for col in pres.a.columns() {
        let g = s_dot(arr, &col)?;
        if !g.is_zero() {
            gens.push(g);
        }
    }
    Ideal::new(&arr.sring, gens)
}

/// `θ(ℓ) = Σ s_i a_i` for a derivation with `θ(f_i) = a_i f_i` (up to the
/// global sign fixed by the kernel). `col` must lie in the span of the
/// columns of `A`.
pub fn evaluate_derivation(
    arr: &Arrangement,
    pres: &LikelihoodPresentation,
    col: &[Polynomial],
    budget: Budget,
) -> Result<Polynomial> {
    if col.len() != arr.m() {
        return Err(Error::LengthMismatch {
            expected: arr.m(),
            got: col.len(),
        });
    }
    if !module_member(&arr.ring, col, &pres.a.columns(), budget)? {
        return Err(Error::invalid(
            "column is not a logarithmic derivation of the arrangement",
        ));
    }
    s_dot(arr, col)
}

/// Options for [`likelihood_ideal`].
#[derive(Debug, Clone, Default)]
pub struct LikelihoodOptions {
    pub budget: Budget,
    /// Tried before the automatic candidates.
    pub witness: Option<Polynomial>,
    /// Use only the `f_i` (and the user witness) as candidates.
    pub skip_minors: bool,
}

/// Candidate saturating polynomials: an optional user witness, then the
/// `f_i` by ascending degree, then the nonconstant nonzero minors of the
/// Jacobian of size equal to its rank, by ascending degree. Scalar
/// multiples are removed.
pub fn saturation_witnesses(
    arr: &Arrangement,
    opts: &LikelihoodOptions,
) -> Result<Vec<Polynomial>> {
    Ok(witnesses_and_cap(arr, opts)?.0)
}

/// The witnesses, and whether the minor cap cut the list short.
fn witnesses_and_cap(
    arr: &Arrangement,
    opts: &LikelihoodOptions,
) -> Result<(Vec<Polynomial>, bool)> {
    let mut capped = false;
    let mut out: Vec<Polynomial> = Vec::new();
    let push = |p: Polynomial, out: &mut Vec<Polynomial>| {
        let p = p.primitive();
        if !p.is_zero() && !p.is_constant() && !out.contains(&p) {
            out.push(p);
        }
    };
    if let Some(w) = &opts.witness {
        if !Ring::same(w.ring(), &arr.ring) {
            return Err(Error::RingMismatch);
        }
        push(w.clone(), &mut out);
    }
    let mut fs: Vec<&Polynomial> = arr.polys.iter().collect();
    fs.sort_by_key(|f| f.total_degree());
    for f in fs {
        push(f.clone(), &mut out);
    }
    if !opts.skip_minors {
        let (mut minors, cut) = rank_minors(&jacobian(arr))?;
        capped = cut;
        minors.sort_by_key(|f| f.total_degree());
        for f in minors {
            push(f, &mut out);
        }
    }
    Ok((out, capped))
}

/// Upper bound on the number of minors examined.
const MAX_MINORS: usize = 5000;

/// Nonzero minors of size `rank(jac)`, and whether the cap was hit.
fn rank_minors(jac: &PolyMatrix) -> Result<(Vec<Polynomial>, bool)> {
    let r = generic_rank(jac);
    if r == 0 {
        return Ok((Vec::new(), false));
    }
    let rows = subsets(jac.nrows(), r);
    let cols = subsets(jac.ncols(), r);
    let capped = rows.len().saturating_mul(cols.len()) > MAX_MINORS;
    if capped {
        log::warn!(
            "{} minors of size {r}; only the first {MAX_MINORS} are used",
            rows.len() * cols.len()
        );
    }
    let mut out = Vec::new();
    'outer: for rs in &rows {
        for cs in &cols {
            if out.len() >= MAX_MINORS {
                break 'outer;
            }
            let sub: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| jac.get(i, j).clone()).collect())
                .collect();
            let d = determinant(sub)?;
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok((out, capped))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Rank over the fraction field, read off at two pseudo-random points.
fn generic_rank(jac: &PolyMatrix) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc0);
    let mut best = 0;
    for _ in 0..2 {
        let pt: Vec<Coeff> = (0..jac.ring().nvars())
            .map(|_| Coeff::from_integer(BigInt::from(rng.gen_range(-1000i64..=1000))))
            .collect();
        let mut mat: Vec<Vec<Coeff>> = (0..jac.nrows())
            .map(|i| {
                (0..jac.ncols())
                    .map(|j| jac.get(i, j).evaluate(&pt))
                    .collect()
            })
            .collect();
        best = best.max(rational_rank(&mut mat));
    }
    best
}

fn rational_rank(mat: &mut [Vec<Coeff>]) -> usize {
    let rows = mat.len();
    let cols = mat.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !mat[r][c].is_zero()) else {
            continue;
        };
        mat.swap(rank, p);
        for r in 0..rows {
            if r != rank && !mat[r][c].is_zero() {
                let factor = &mat[r][c] / &mat[rank][c];
                for k in c..cols {
                    let v = &factor * &mat[rank][k];
                    mat[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(mut a: Vec<Vec<Polynomial>>) -> Result<Polynomial> {
    let n = a.len();
    if n == 0 {
        return Err(Error::invalid("empty matrix"));
    }
    let ring = a[0][0].ring().clone();
    let mut sign = false;
    let mut prev = Polynomial::one(&ring);
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(Polynomial::zero(&ring));
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .multiply(&a[k][k])?
                    .try_sub(&a[i][k].multiply(&a[k][j])?)?;
                a[i][j] = num.div_exact(&prev)?.ok_or_else(|| {
                    Error::consistency("inexact division in fraction-free elimination")
                })?;
            }
            a[i][k] = Polynomial::zero(&ring);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { d.neg() } else { d })
}

/// Outcome of the gentleness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GentleStatus {
    Gentle,
    NotGentle,
    /// A budget ran out before the answer was known.
    Inconclusive,
}

impl core::fmt::Display for GentleStatus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            GentleStatus::Gentle => "Gentle",
            GentleStatus::NotGentle => "NotGentle",
            GentleStatus::Inconclusive => "Inconclusive",
        })
    }
}

/// Result of saturating the pre-likelihood ideal.
#[derive(Debug, Clone)]
pub struct GentleVerdict {
    pub status: GentleStatus,
    /// First witness that strictly enlarged the ideal (NotGentle only).
    pub witness: Option<Polynomial>,
    pub pre_likelihood: Ideal,
    /// The likelihood ideal, or the partial result when inconclusive.
    pub likelihood: Ideal,
    /// Why the computation stopped early.
    pub reason: Option<String>,
    pub witnesses_tried: usize,
}

/// Saturate `I_0` by the witnesses in turn until a full pass of
/// consecutive witnesses leaves the ideal unchanged.
pub fn likelihood_ideal(
    arr: &Arrangement,
    pre: &Ideal,
    opts: &LikelihoodOptions,
) -> Result<GentleVerdict> {
    let (witnesses, capped) = witnesses_and_cap(arr, opts)?;
    let lifted = witnesses
        .iter()
        .map(|w| arr.lift(w))
        .collect::<Result<Vec<_>>>()?;
    let mut cur = match pre
        .clone()
        .with_groebner(&arr.sring.default_order(), opts.budget)
    {
        Ok(i) => i,
        Err(e) if e.is_budget() => {
            return Ok(GentleVerdict {
                status: GentleStatus::Inconclusive,
                witness: None,
                pre_likelihood: pre.clone(),
                likelihood: pre.clone(),
                reason: Some(e.to_string()),
                witnesses_tried: 0,
            })
        }
        Err(e) => return Err(e),
    };
    let mut first: Option<Polynomial> = None;
    let mut quiet = 0usize;
    let mut k = 0usize;
    let mut tried = 0usize;
    while quiet < lifted.len() {
        let w = &lifted[k];
        tried += 1;
        match saturate_step(&cur, w, opts.budget) {
            Ok(c) if c.changed => {
                log::info!("saturation by {} enlarged the ideal", witnesses[k]);
                if first.is_none() {
                    first = Some(witnesses[k].clone());
                }
                cur = c.ideal;
                quiet = 1;
            }
            Ok(_) => quiet += 1,
            Err(e) if e.is_budget() => {
                return Ok(GentleVerdict {
                    status: GentleStatus::Inconclusive,
                    witness: first,
                    pre_likelihood: pre.clone(),
                    likelihood: cur,
                    reason: Some(e.to_string()),
                    witnesses_tried: tried,
                });
            }
            Err(e) => return Err(e),
        }
        k = (k + 1) % lifted.len();
    }
    // with minors missing, an unchanged ideal proves nothing
    if capped && first.is_none() {
        return Ok(GentleVerdict {
            status: GentleStatus::Inconclusive,
            witness: None,
            pre_likelihood: pre.clone(),
            likelihood: cur,
            reason: Some(format!(
                "only the first {MAX_MINORS} Jacobian minors were tried"
            )),
            witnesses_tried: tried,
        });
    }
    let status = if first.is_some() {
        GentleStatus::NotGentle
    } else {
        GentleStatus::Gentle
    };
    let likelihood = if first.is_some() {
        cur.interreduced(opts.budget)?
    } else {
        cur
    };
    if likelihood.cached().is_some_and(|g| g.is_unit()) {
        return Err(Error::consistency("likelihood ideal became the unit ideal"));
    }
    Ok(GentleVerdict {
        status,
        witness: first,
        pre_likelihood: pre.clone(),
        likelihood,
        reason: None,
        witnesses_tried: tried,
    })
}

/// `I : w^∞`, skipping the saturation when a Hilbert series comparison
/// already shows `w` is a nonzerodivisor.
fn saturate_step(cur: &Ideal, w: &Polynomial, budget: Budget) -> Result<Colon> {
    if !(cur.is_bihomogeneous() && w.bidegree().is_some()) {
        return saturate_detailed(cur, w, budget);
    }
    if is_nonzerodivisor(cur, w, budget)? {
        return Ok(Colon {
            ideal: cur.clone(),
            changed: false,
        });
    }
    let c = saturate_detailed(cur, w, budget)?;
    if !c.changed {
        return Err(Error::consistency(format!(
            "{w} is a zerodivisor but saturation left the ideal unchanged"
        )));
    }
    Ok(c)
}

/// Presentation, pre-likelihood ideal and gentleness verdict in one call.
pub fn is_gentle(arr: &Arrangement, opts: &LikelihoodOptions) -> Result<GentleVerdict> {
    let pres = match presentation(arr, opts.budget) {
        Ok(p) => p,
        Err(e) if e.is_budget() => {
            let zero = Ideal::zero(&arr.sring);
            return Ok(GentleVerdict {
                status: GentleStatus::Inconclusive,
                witness: None,
                pre_likelihood: zero.clone(),
                likelihood: zero,
                reason: Some(e.to_string()),
                witnesses_tried: 0,
            });
        }
        Err(e) => return Err(e),
    };
    let pre = pre_likelihood_ideal(arr, &pres)?;
    likelihood_ideal(arr, &pre, opts)
}

/// `Σ d_i s_i`, which lies in every pre-likelihood ideal.
pub fn euler_generator(arr: &Arrangement) -> Polynomial {
    let mut acc = Polynomial::zero(&arr.sring);
    for (i, &d) in arr.degrees.iter().enumerate() {
        let s = Polynomial::var_at(&arr.sring, arr.n() + i)
            .scale(&Coeff::from_integer(BigInt::from(d)));
        acc = acc.try_add(&s).expect("same ring");
    }
    acc
}

/// Checks `I_0 ⊆ I` for a finished verdict.
pub fn check_verdict(verdict: &GentleVerdict, budget: Budget) -> Result<()> {
    if !ideal_contained(&verdict.pre_likelihood, &verdict.likelihood, budget)? {
        return Err(Error::consistency(
            "pre-likelihood ideal is not contained in the likelihood ideal",
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{ideal_equal, ideal_member};
    use crate::poly::parse_poly;

    fn arrangement(vars: &[&str], polys: &[&str]) -> Arrangement {
        let r = Ring::with_x(vars).unwrap();
        let ps = polys.iter().map(|p| parse_poly(p, &r).unwrap()).collect();
        Arrangement::new(&r, ps).unwrap()
    }

    #[test]
    fn q_matrix_shapes() {
        let a = arrangement(&["x"], &["x"]);
        let q = build_q(&a);
        assert_eq!(q.to_string(), "[x, 1]\n");
        let a = arrangement(&["x", "y"], &["x", "y"]);
        assert_eq!(build_q(&a).to_string(), "[x, 0, 1, 0]\n[0, y, 0, 1]\n");
    }

    #[test]
    fn single_hyperplane() {
        let a = arrangement(&["x"], &["x"]);
        let b = Budget::default();
        let pres = presentation(&a, b).unwrap();
        assert_eq!(pres.a.to_string(), "[1]\n");
        assert_eq!(pres.b.to_string(), "[-x]\n");
        let i0 = pre_likelihood_ideal(&a, &pres).unwrap();
        assert_eq!(i0.gens().len(), 1);
        assert_eq!(i0.gens()[0].to_string(), "s1");
        let w = saturation_witnesses(&a, &LikelihoodOptions::default()).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].to_string(), "x");
    }

    #[test]
    fn coordinate_lines_are_gentle() {
        let a = arrangement(&["x", "y"], &["x", "y"]);
        let v = is_gentle(&a, &LikelihoodOptions::default()).unwrap();
        assert_eq!(v.status, GentleStatus::Gentle);
        assert!(ideal_member(&euler_generator(&a), &v.pre_likelihood, Budget::default()).unwrap());
        check_verdict(&v, Budget::default()).unwrap();
    }

    #[test]
    fn common_factors_are_rejected() {
        let r = Ring::with_x(&["x", "y", "z"]).unwrap();
        let ps = ["x*y", "x*z", "y+z"]
            .iter()
            .map(|p| parse_poly(p, &r).unwrap())
            .collect();
        assert!(Arrangement::new(&r, ps).is_err());
        let ps = ["x", "y", "x^2+y^2+z^2"]
            .iter()
            .map(|p| parse_poly(p, &r).unwrap())
            .collect();
        assert!(Arrangement::new(&r, ps).is_ok());
    }

    #[test]
    fn bareiss_determinant() {
        let r = Ring::with_x(&["x", "y"]).unwrap();
        let p = |s: &str| parse_poly(s, &r).unwrap();
        let m = vec![
            vec![p("x"), p("y"), p("1")],
            vec![p("1"), p("x"), p("y")],
            vec![p("y"), p("1"), p("x")],
        ];
        assert_eq!(determinant(m).unwrap(), p("x^3 + y^3 + 1 - 3*x*y"));
        let m = vec![vec![p("0"), p("1")], vec![p("1"), p("0")]];
        assert_eq!(determinant(m).unwrap(), p("-1"));
    }

    #[test]
    fn n3m4_not_gentle() {
        let a = arrangement(&["x", "y", "z"], &["x", "y", "z", "x^3+y^3+x*y*z"]);
        let v = is_gentle(&a, &LikelihoodOptions::default()).unwrap();
        assert_eq!(v.status, GentleStatus::NotGentle);
        let s = a.s_ring();
        let want = Ideal::parse(
            s,
            &[
                "s1+s2+s3+3*s4",
                "x*z*s2 - (3*y^2+x*z)*s3",
                "y*z*s2 + (3*x^2+2*y*z)*s3 + 3*y*z*s4",
                "(x^3+y^3)*s2 + (3*y^3+x*y*z)*s3 + (3*y^3+x*y*z)*s4",
            ],
        )
        .unwrap();
        let b = Budget::default();
        assert!(ideal_equal(&v.pre_likelihood, &want, b).unwrap());
        let q = parse_poly(
            "z^2*s2^2 + z^2*s2*s3 + 9*x*y*s3^2 - 2*z^2*s3^2 + 3*z^2*s2*s4 - 3*z^2*s3*s4",
            s,
        )
        .unwrap();
        assert!(ideal_member(&q, &v.likelihood, b).unwrap());
        assert!(!ideal_member(&q, &v.pre_likelihood, b).unwrap());
        let mut with_q = want.gens().to_vec();
        with_q.push(q);
        assert!(ideal_equal(&v.likelihood, &Ideal::new(s, with_q).unwrap(), b).unwrap());
    }

    #[test]
    fn braid_k4_is_gentle() {
        let a = arrangement(
            &["x1", "x2", "x3", "x4"],
            &["x1-x2", "x1-x3", "x1-x4", "x2-x3", "x2-x4", "x3-x4"],
        );
        let b = Budget::default();
        let pres = presentation(&a, b).unwrap();
        assert_eq!(pres.l, 4);
        assert_eq!(pres.column_degrees(), vec![None, Some(0), Some(1), Some(2)]);
        let i0 = pre_likelihood_ideal(&a, &pres).unwrap();
        let mut bidegs: Vec<_> = i0
            .gens()
            .iter()
            .map(|g| g.bidegree().unwrap())
            .map(|d| (d.dx, d.ds))
            .collect();
        bidegs.sort();
        assert_eq!(bidegs, vec![(0, 1), (1, 1), (2, 1)]);
        let v = likelihood_ideal(&a, &i0, &LikelihoodOptions::default()).unwrap();
        assert_eq!(v.status, GentleStatus::Gentle);
        assert!(v.witness.is_none());
    }
}
