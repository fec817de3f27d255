//! Buchberger's algorithm over integer coefficients for ideals and
//! submodules of free modules.
//!
//! Terms carry a position so one implementation serves both cases; an
//! ideal is a submodule of rank one. Coefficients are kept integral by
//! fraction-free reduction and periodic content removal.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::mem;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, TermOrder};

/// Limits on a Gröbner basis computation. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: Option<usize>,
    /// Maximum sugar degree of a processed pair.
    pub max_degree: Option<u32>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: Some(500_000),
            max_degree: None,
        }
    }
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_pairs: None,
        max_degree: None,
    };
}

/// Counters from one run, reported through `log`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub pairs: usize,
    pub zero_reductions: usize,
    pub max_sugar: i64,
    pub basis_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ETerm {
    pub m: Monomial,
    pub pos: u32,
    pub c: BigInt,
}

/// Sparse vector with terms sorted decreasingly for the engine's order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct EPoly {
    pub terms: Vec<ETerm>,
    pub sugar: i64,
}

impl EPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &ETerm {
        &self.terms[0]
    }

    /// Divide by the content and make the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for t in &self.terms {
            g = g.gcd(&t.c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].c.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for t in &mut self.terms {
                t.c /= &g;
            }
        }
    }
}

/// Monomial order extended to module terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ModOrder {
    pub mono: TermOrder,
    /// Variable weights for degrees and sugar.
    pub weights: Vec<u32>,
    /// Degree shift per position; empty means all zero and no degree
    /// comparison beyond what `mono` does.
    pub shifts: Vec<i64>,
    /// Block label per position; a larger label is a larger term.
    pub blocks: Vec<u8>,
    /// Position over term instead of term over position.
    pub pot: bool,
}

impl ModOrder {
    pub fn ideal(mono: TermOrder, nvars: usize) -> Self {
        let weights = mono.weights(nvars);
        ModOrder {
            mono,
            weights,
            shifts: Vec::new(),
            blocks: Vec::new(),
            pot: false,
        }
    }

    pub fn wdeg(&self, m: &Monomial) -> i64 {
        m.exponents()
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn deg(&self, m: &Monomial, pos: u32) -> i64 {
        self.wdeg(m) + self.shifts.get(pos as usize).copied().unwrap_or(0)
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ap: u32, bm: &Monomial, bp: u32) -> Ordering {
        if !self.blocks.is_empty() {
            let o = self.blocks[ap as usize].cmp(&self.blocks[bp as usize]);
            if o != Ordering::Equal {
                return o;
            }
        }
        if self.pot {
            return bp
                .cmp(&ap)
                .then_with(|| self.mono.cmp(am.exponents(), bm.exponents()));
        }
        if !self.shifts.is_empty() {
            let o = self.deg(am, ap).cmp(&self.deg(bm, bp));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.mono
            .cmp(am.exponents(), bm.exponents())
            .then_with(|| bp.cmp(&ap))
    }

    pub fn sort(&self, terms: &mut [ETerm]) {
        terms.sort_by(|a, b| self.cmp(&b.m, b.pos, &a.m, a.pos));
    }

    /// Sort, merge equal terms and drop zeros.
    pub fn canonical(&self, mut terms: Vec<ETerm>) -> Vec<ETerm> {
        self.sort(&mut terms);
        let mut out: Vec<ETerm> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.pos == t.pos && last.m == t.m {
                    last.c += t.c;
                    continue;
                }
                if last.c.is_zero() {
                    out.pop();
                }
            }
            out.push(t);
        }
        if matches!(out.last(), Some(t) if t.c.is_zero()) {
            out.pop();
        }
        out
    }

    pub fn sugar_of(&self, terms: &[ETerm]) -> i64 {
        terms
            .iter()
            .map(|t| self.deg(&t.m, t.pos))
            .max()
            .unwrap_or(0)
    }
}

/// `ca * a - cb * t * b`, both inputs sorted, result sorted without zeros.
fn merge_sub(
    order: &ModOrder,
    a: &[ETerm],
    ca: &BigInt,
    b: &[ETerm],
    t: &Monomial,
    cb: &BigInt,
) -> Vec<ETerm> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let ca_one = ca.is_one();
    let mut bt: Option<ETerm> = None;
    loop {
        if bt.is_none() && j < b.len() {
            let x = &b[j];
            bt = Some(ETerm {
                m: x.m.mul(t),
                pos: x.pos,
                c: &x.c * cb,
            });
            j += 1;
        }
        match (a.get(i), bt.as_ref()) {
            (None, None) => break,
            (Some(x), None) => {
                out.push(ETerm {
                    m: x.m.clone(),
                    pos: x.pos,
                    c: if ca_one { x.c.clone() } else { &x.c * ca },
                });
                i += 1;
            }
            (None, Some(_)) => {
                let mut y = bt.take().unwrap();
                y.c = -y.c;
                out.push(y);
            }
            (Some(x), Some(y)) => match order.cmp(&x.m, x.pos, &y.m, y.pos) {
                Ordering::Greater => {
                    out.push(ETerm {
                        m: x.m.clone(),
                        pos: x.pos,
                        c: if ca_one { x.c.clone() } else { &x.c * ca },
                    });
                    i += 1;
                }
                Ordering::Less => {
                    let mut y = bt.take().unwrap();
                    y.c = -y.c;
                    out.push(y);
                }
                Ordering::Equal => {
                    let y = bt.take().unwrap();
                    let c = if ca_one { &x.c - y.c } else { &x.c * ca - y.c };
                    if !c.is_zero() {
                        out.push(ETerm {
                            m: y.m,
                            pos: y.pos,
                            c,
                        });
                    }
                    i += 1;
                }
            },
        }
    }
    out
}

/// Reducers: basis elements with precomputed lead masks.
pub(crate) struct Reducers<'a> {
    pub polys: Vec<&'a EPoly>,
    masks: Vec<u64>,
}

impl<'a> Reducers<'a> {
    pub fn new(polys: Vec<&'a EPoly>) -> Self {
        let masks = polys.iter().map(|p| p.lead().m.support_mask()).collect();
        Reducers { polys, masks }
    }

    fn find(&self, t: &ETerm, skip: Option<usize>) -> Option<usize> {
        let tm = t.m.support_mask();
        for (k, p) in self.polys.iter().enumerate() {
            if Some(k) == skip || self.masks[k] & !tm != 0 {
                continue;
            }
            let l = p.lead();
            if l.pos == t.pos && l.m.divides(&t.m) {
                return Some(k);
            }
        }
        None
    }
}

/// Outcome of a reduction: `mult * f ≡ result` modulo the reducers, with
/// `mult` a nonzero rational given as (numerator, denominator).
pub(crate) struct Reduced {
    pub poly: EPoly,
    pub mult_num: BigInt,
    pub mult_den: BigInt,
}

/// A polynomial kept as a few sorted buckets of geometrically growing
/// size, each with a lazy scalar factor. Adding a short multiple of a
/// reducer only touches a small bucket, and scaling the whole sum only
/// touches the factors.
struct Geobucket<'o> {
    order: &'o ModOrder,
    /// Each bucket sorted increasingly, so the leading term is last.
    buckets: Vec<Vec<ETerm>>,
    scales: Vec<BigInt>,
}

impl<'o> Geobucket<'o> {
    fn new(order: &'o ModOrder) -> Self {
        Geobucket {
            order,
            buckets: Vec::new(),
            scales: Vec::new(),
        }
    }

    fn capacity(level: usize) -> usize {
        8usize << (2 * level)
    }

    /// Add terms already sorted increasingly.
    fn add(&mut self, mut p: Vec<ETerm>) {
        if p.is_empty() {
            return;
        }
        let mut level = 0;
        while Self::capacity(level) < p.len() {
            level += 1;
        }
        loop {
            while level >= self.buckets.len() {
                self.buckets.push(Vec::new());
                self.scales.push(BigInt::one());
            }
            if self.buckets[level].is_empty() {
                self.buckets[level] = p;
                self.scales[level] = BigInt::one();
                return;
            }
            let mut b = mem::take(&mut self.buckets[level]);
            let sc = mem::replace(&mut self.scales[level], BigInt::one());
            if !sc.is_one() {
                for t in &mut b {
                    t.c *= &sc;
                }
            }
            p = merge_ascending(self.order, b, p);
            if p.len() <= Self::capacity(level) {
                self.buckets[level] = p;
                return;
            }
            level += 1;
        }
    }

    fn scale(&mut self, f: &BigInt) {
        for (b, s) in self.buckets.iter().zip(self.scales.iter_mut()) {
            if !b.is_empty() {
                *s *= f;
            }
        }
    }

    /// Remove and return the leading term with its true coefficient.
    fn pop_leading(&mut self) -> Option<ETerm> {
        loop {
            let mut best: Option<usize> = None;
            for (k, b) in self.buckets.iter().enumerate() {
                let Some(h) = b.last() else { continue };
                best = match best {
                    Some(j) => {
                        let g = self.buckets[j].last().unwrap();
                        if self.order.cmp(&h.m, h.pos, &g.m, g.pos) == Ordering::Greater {
                            Some(k)
                        } else {
                            Some(j)
                        }
                    }
                    None => Some(k),
                };
            }
            let j = best?;
            let head = self.buckets[j].pop().unwrap();
            let mut c = head.c * &self.scales[j];
            for k in 0..self.buckets.len() {
                if k == j {
                    continue;
                }
                if matches!(self.buckets[k].last(), Some(h) if h.pos == head.pos && h.m == head.m) {
                    let h = self.buckets[k].pop().unwrap();
                    c += h.c * &self.scales[k];
                }
            }
            if !c.is_zero() {
                return Some(ETerm {
                    m: head.m,
                    pos: head.pos,
                    c,
                });
            }
        }
    }

    /// Move all scale factors into the coefficients.
    fn flatten_scales(&mut self) {
        for (b, s) in self.buckets.iter_mut().zip(self.scales.iter_mut()) {
            if !s.is_one() {
                for t in b.iter_mut() {
                    t.c *= &*s;
                }
                *s = BigInt::one();
            }
        }
    }
}

/// Merge two increasingly sorted term lists, adding equal terms.
fn merge_ascending(order: &ModOrder, a: Vec<ETerm>, b: Vec<ETerm>) -> Vec<ETerm> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let o = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some(x), Some(y)) => order.cmp(&x.m, x.pos, &y.m, y.pos),
        };
        match o {
            Ordering::Less => out.push(a.next().unwrap()),
            Ordering::Greater => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let mut x = a.next().unwrap();
                let y = b.next().unwrap();
                x.c += y.c;
                if !x.c.is_zero() {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// Irreducible terms collected so far, in chunks that share a lazy factor.
struct Remainder {
    chunks: Vec<(BigInt, Vec<ETerm>)>,
}

impl Remainder {
    fn push(&mut self, t: ETerm) {
        match self.chunks.last_mut() {
            Some((s, v)) if s.is_one() => v.push(t),
            _ => self.chunks.push((BigInt::one(), alloc::vec![t])),
        }
    }

    fn scale(&mut self, f: &BigInt) {
        for (s, _) in &mut self.chunks {
            *s *= f;
        }
        if self.chunks.len() > 32 {
            self.flatten();
        }
    }

    fn flatten(&mut self) {
        let mut all = Vec::new();
        for (s, v) in self.chunks.drain(..) {
            for mut t in v {
                if !s.is_one() {
                    t.c *= &s;
                }
                all.push(t);
            }
        }
        self.chunks.push((BigInt::one(), all));
    }

    fn into_terms(mut self) -> Vec<ETerm> {
        self.flatten();
        self.chunks.pop().map(|(_, v)| v).unwrap_or_default()
    }
}

/// Fully reduce `f`. With `top_only` stop once the leading term is irreducible.
pub(crate) fn reduce(
    order: &ModOrder,
    f: EPoly,
    red: &Reducers<'_>,
    skip: Option<usize>,
    top_only: bool,
) -> Reduced {
    let mut sugar = f.sugar;
    let mut terms = f.terms;
    terms.reverse();
    let mut gb = Geobucket::new(order);
    gb.add(terms);
    let mut out = Remainder { chunks: Vec::new() };
    let mut mult_num = BigInt::one();
    let mut mult_den = BigInt::one();
    let mut steps = 0usize;
    let mut bits_mark = 0u64;
    while let Some(lt) = gb.pop_leading() {
        let Some(k) = red.find(&lt, skip) else {
            out.push(lt);
            if top_only {
                while let Some(t) = gb.pop_leading() {
                    out.push(t);
                }
                break;
            }
            continue;
        };
        let g = red.polys[k];
        let lg = g.lead();
        let t = lg.m.quotient_of(&lt.m);
        let gg = lg.c.gcd(&lt.c);
        let mut ca = &lg.c / &gg;
        let mut cb = &lt.c / &gg;
        if ca.is_negative() {
            ca = -ca;
            cb = -cb;
        }
        sugar = sugar.max(g.sugar + order.wdeg(&t));
        if !ca.is_one() {
            gb.scale(&ca);
            out.scale(&ca);
            mult_num *= &ca;
        }
        let neg_cb = -cb;
        let shifted: Vec<ETerm> = g.terms[1..]
            .iter()
            .rev()
            .map(|x| ETerm {
                m: x.m.mul(&t),
                pos: x.pos,
                c: &x.c * &neg_cb,
            })
            .collect();
        gb.add(shifted);
        steps += 1;
        if steps % 8 == 0 {
            // common factor of the lazy scales
            let mut d = BigInt::zero();
            for (b, s) in gb.buckets.iter().zip(&gb.scales) {
                if !b.is_empty() {
                    d = d.gcd(s);
                }
            }
            for (s, v) in &out.chunks {
                if !v.is_empty() {
                    d = d.gcd(s);
                }
            }
            if !d.is_zero() && !d.is_one() {
                for s in gb.scales.iter_mut() {
                    *s /= &d;
                }
                for (s, _) in out.chunks.iter_mut() {
                    *s /= &d;
                }
                mult_den *= d;
            }
        }
        let bits = lt.c.bits();
        if bits > 2 * bits_mark + 64 {
            // coefficients have grown: divide out the full content
            gb.flatten_scales();
            out.flatten();
            let c = content(
                gb.buckets
                    .iter()
                    .flatten()
                    .chain(out.chunks.iter().flat_map(|(_, v)| v.iter())),
            );
            if !c.is_zero() && !c.is_one() {
                for t in gb
                    .buckets
                    .iter_mut()
                    .flatten()
                    .chain(out.chunks.iter_mut().flat_map(|(_, v)| v.iter_mut()))
                {
                    t.c /= &c;
                }
                mult_den *= c;
            }
            bits_mark = gb
                .buckets
                .iter()
                .flatten()
                .map(|t| t.c.bits())
                .max()
                .unwrap_or(0);
        }
    }
    let mut poly = EPoly {
        terms: out.into_terms(),
        sugar,
    };
    let c = content(poly.terms.iter());
    if !c.is_one() && !c.is_zero() {
        for o in &mut poly.terms {
            o.c /= &c;
        }
        mult_den *= c;
    }
    Reduced {
        poly,
        mult_num,
        mult_den,
    }
}

fn content<'a>(it: impl Iterator<Item = &'a ETerm>) -> BigInt {
    let mut g = BigInt::zero();
    for t in it {
        g = g.gcd(&t.c);
        if g.is_one() {
            break;
        }
    }
    g
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: u32,
    sugar: i64,
}

struct Engine<'a> {
    order: &'a ModOrder,
    budget: Budget,
    polys: Vec<EPoly>,
    active: Vec<usize>,
    /// Pairs sorted so that the next one to process is last.
    pairs: Vec<Pair>,
    rank_one: bool,
    stats: Stats,
}

/// S-vector of basis elements `i` and `j`.
fn spoly(order: &ModOrder, a: &EPoly, b: &EPoly, lcm: &Monomial) -> EPoly {
    let la = a.lead();
    let lb = b.lead();
    let ta = la.m.quotient_of(lcm);
    let tb = lb.m.quotient_of(lcm);
    let g = la.c.gcd(&lb.c);
    let ca = &lb.c / &g;
    let cb = &la.c / &g;
    let shifted: Vec<ETerm> = a.terms[1..]
        .iter()
        .map(|x| ETerm {
            m: x.m.mul(&ta),
            pos: x.pos,
            c: x.c.clone(),
        })
        .collect();
    let terms = merge_sub(order, &shifted, &ca, &b.terms[1..], &tb, &cb);
    let sugar = (a.sugar + order.wdeg(&ta)).max(b.sugar + order.wdeg(&tb));
    EPoly { terms, sugar }
}

impl<'a> Engine<'a> {
    fn cmp_pairs(&self, a: &Pair, b: &Pair) -> Ordering {
        a.sugar
            .cmp(&b.sugar)
            .then_with(|| self.order.cmp(&a.lcm, a.pos, &b.lcm, b.pos))
            .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
    }

    fn reducers(&self) -> Reducers<'_> {
        Reducers::new(self.active.iter().map(|&k| &self.polys[k]).collect())
    }

    /// Gebauer–Möller update with the new element `h`.
    fn update(&mut self, h: EPoly) {
        let hi = self.polys.len();
        let hl = h.lead().clone();
        self.polys.push(h);
        let mut cand: Vec<(usize, Monomial, bool)> = Vec::new();
        for &g in &self.active {
            let gl = self.polys[g].lead();
            if gl.pos != hl.pos {
                continue;
            }
            let coprime = self.rank_one && gl.m.is_coprime(&hl.m);
            cand.push((g, gl.m.lcm(&hl.m), coprime));
        }
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for idx in 0..cand.len() {
            let (g, ref l, coprime) = cand[idx];
            if coprime
                || !(cand[idx + 1..].iter().any(|x| x.1.divides(l))
                    || kept.iter().any(|x| x.1.divides(l)))
            {
                kept.push((g, l.clone(), coprime));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(p.pos == hl.pos
                && hl.m.divides(&p.lcm)
                && polys[p.i].lead().m.lcm(&hl.m) != p.lcm
                && polys[p.j].lead().m.lcm(&hl.m) != p.lcm)
        });
        for (g, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            let a = &self.polys[g];
            let b = &self.polys[hi];
            let sugar = (a.sugar + self.order.wdeg(&a.lead().m.quotient_of(&lcm)))
                .max(b.sugar + self.order.wdeg(&b.lead().m.quotient_of(&lcm)));
            self.pairs.push(Pair {
                i: g,
                j: hi,
                lcm,
                pos: hl.pos,
                sugar,
            });
        }
        let polys = &self.polys;
        self.active.retain(|&g| {
            let gl = polys[g].lead();
            !(gl.pos == hl.pos && hl.m.divides(&gl.m))
        });
        self.active.push(hi);
        let mut pairs = mem::take(&mut self.pairs);
        pairs.sort_by(|a, b| self.cmp_pairs(b, a));
        self.pairs = pairs;
    }

    fn run(&mut self) -> Result<()> {
        while let Some(p) = self.pairs.pop() {
            self.stats.pairs += 1;
            if let Some(max) = self.budget.max_pairs {
                if self.stats.pairs > max {
                    return Err(Error::BudgetExceeded(alloc::format!(
                        "more than {max} S-pairs"
                    )));
                }
            }
            if let Some(max) = self.budget.max_degree {
                if p.sugar > max as i64 {
                    return Err(Error::BudgetExceeded(alloc::format!(
                        "S-pair of degree {} exceeds {max}",
                        p.sugar
                    )));
                }
            }
            self.stats.max_sugar = self.stats.max_sugar.max(p.sugar);
            let s = spoly(self.order, &self.polys[p.i], &self.polys[p.j], &p.lcm);
            let s = EPoly {
                sugar: p.sugar,
                ..s
            };
            let mut h = reduce(self.order, s, &self.reducers(), None, false).poly;
            if h.is_zero() {
                self.stats.zero_reductions += 1;
                continue;
            }
            h.make_primitive();
            self.update(h);
            if self.stats.pairs % 2000 == 0 {
                log::debug!(
                    "groebner: {} pairs, {} queued, basis {}",
                    self.stats.pairs,
                    self.pairs.len(),
                    self.active.len()
                );
            }
        }
        Ok(())
    }

    /// Reduced basis from the active elements, sorted increasingly by lead.
    fn finish(mut self) -> (Vec<EPoly>, Stats) {
        let active = mem::take(&mut self.active);
        let mut min: Vec<EPoly> = active
            .into_iter()
            .map(|k| mem::take(&mut self.polys[k]))
            .collect();
        min.sort_by(|a, b| {
            self.order
                .cmp(&a.lead().m, a.lead().pos, &b.lead().m, b.lead().pos)
        });
        let mut out = Vec::with_capacity(min.len());
        for k in 0..min.len() {
            let red = Reducers::new(min.iter().collect());
            let f = min[k].clone();
            let lead = f.terms[0].clone();
            let tail = EPoly {
                terms: f.terms[1..].to_vec(),
                sugar: f.sugar,
            };
            let r = reduce(self.order, tail, &red, Some(k), false);
            let mut terms = Vec::with_capacity(r.poly.terms.len() + 1);
            // num/den * tail ≡ poly, so num * f ≡ num * lead + den * poly
            let lc = lead.c * &r.mult_num;
            let mut tail_terms = r.poly.terms;
            for t in &mut tail_terms {
                t.c *= &r.mult_den;
            }
            terms.push(ETerm {
                m: lead.m,
                pos: lead.pos,
                c: lc,
            });
            terms.extend(tail_terms);
            let mut p = EPoly {
                terms,
                sugar: f.sugar,
            };
            p.make_primitive();
            out.push(p);
        }
        self.stats.basis_size = out.len();
        (out, self.stats)
    }
}

/// Reduced Gröbner basis of the given generators.
pub(crate) fn groebner(
    order: &ModOrder,
    gens: Vec<EPoly>,
    budget: Budget,
) -> Result<(Vec<EPoly>, Stats)> {
    let positions: Vec<u32> = gens
        .iter()
        .flat_map(|g| g.terms.iter().map(|t| t.pos))
        .collect();
    let rank_one = order.shifts.len() <= 1 && positions.iter().all(|&p| p == 0);
    let mut eng = Engine {
        order,
        budget,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        rank_one,
        stats: Stats::default(),
    };
    let mut gens: Vec<EPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    gens.sort_by(|a, b| {
        a.sugar
            .cmp(&b.sugar)
            .then_with(|| order.cmp(&a.lead().m, a.lead().pos, &b.lead().m, b.lead().pos))
    });
    for g in gens {
        let mut h = reduce(order, g, &eng.reducers(), None, false).poly;
        if h.is_zero() {
            continue;
        }
        h.make_primitive();
        eng.update(h);
    }
    eng.run()?;
    let (basis, stats) = eng.finish();
    log::debug!(
        "groebner: done, {} pairs ({} zero), max sugar {}, basis {}",
        stats.pairs,
        stats.zero_reductions,
        stats.max_sugar,
        stats.basis_size
    );
    Ok((basis, stats))
}

/// Check Buchberger's criterion directly: every S-vector of `basis`
/// reduces to zero. Returns a description of the first failure.
pub(crate) fn check_criterion(
    order: &ModOrder,
    basis: &[EPoly],
) -> core::result::Result<(), String> {
    let red = Reducers::new(basis.iter().collect());
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (a, b) = (basis[i].lead(), basis[j].lead());
            if a.pos != b.pos {
                continue;
            }
            let lcm = a.m.lcm(&b.m);
            let s = spoly(order, &basis[i], &basis[j], &lcm);
            if !reduce(order, s, &red, None, false).poly.is_zero() {
                return Err(alloc::format!("S-pair ({i},{j}) does not reduce to zero"));
            }
        }
    }
    Ok(())
}
