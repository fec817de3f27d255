//! Graphic arrangements `{x_i - x_j : ij ∈ E}` and their combinatorial
//! generators.

mod combinatorics;
mod graph;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use combinatorics::{
    canonical_form, connected_graphs, inclusion_minimal_separators, is_chordal, is_isomorphic,
    minimal_separators, minimal_separators_bounded, octahedron_obstruction,
    octahedron_obstruction_bounded, separators, Separator, OBSTRUCTION_BOUND, SEPARATOR_BOUND,
};
pub use graph::{Graph, MAX_VERTICES};

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::likelihood::Arrangement;
use crate::poly::{Coeff, Monomial, Polynomial, Ring};
use crate::syzygy::{module_member, ModuleVector};
use graph::vertices_to_mask;

/// The arrangement of a graph together with the bookkeeping that links
/// edges to data variables.
#[derive(Debug, Clone)]
pub struct GraphicArrangement {
    graph: Graph,
    arrangement: Arrangement,
    reduced: bool,
}

/// Name of the data variable of edge `{i, j}`.
pub fn edge_variable(n: usize, i: usize, j: usize) -> String {
    if n >= 10 {
        format!("s{i}_{j}")
    } else {
        format!("s{i}{j}")
    }
}

impl GraphicArrangement {
    /// Forms `x_i - x_j` for `i < j` in lexicographic edge order, in
    /// `P^{n-1}`.
    pub fn new(graph: &Graph) -> Result<Self> {
        Self::build(graph, false)
    }

    /// The same arrangement in `P^{n-2}`, with `x_n` set to zero.
    pub fn reduced(graph: &Graph) -> Result<Self> {
        Self::build(graph, true)
    }

    fn build(graph: &Graph, reduced: bool) -> Result<Self> {
        if graph.num_edges() == 0 {
            return Err(Error::invalid("graph has no edges"));
        }
        if !graph.is_connected() {
            log::warn!("graph is not connected");
        }
        let n = graph.n();
        let nx = if reduced { n - 1 } else { n };
        if nx == 0 {
            return Err(Error::invalid(
                "reduced coordinates need at least two vertices",
            ));
        }
        let names: Vec<String> = (1..=nx).map(|i| format!("x{i}")).collect();
        let ring = Ring::with_x(&names)?;
        let coord = |i: usize| {
            if reduced && i == n {
                Polynomial::zero(&ring)
            } else {
                Polynomial::var_at(&ring, i - 1)
            }
        };
        let edges = graph.edges();
        let forms: Vec<Polynomial> = edges.iter().map(|&(i, j)| &coord(i) - &coord(j)).collect();
        let snames: Vec<String> = edges.iter().map(|&(i, j)| edge_variable(n, i, j)).collect();
        let arrangement = Arrangement::with_s_names(&ring, forms, &snames)?;
        Ok(GraphicArrangement {
            graph: graph.clone(),
            arrangement,
            reduced,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// `x_i` in `R[s]`, or zero for the anchored coordinate.
    fn coord(&self, i: usize) -> Polynomial {
        let s = self.arrangement.s_ring();
        if self.reduced && i == self.graph.n() {
            Polynomial::zero(s)
        } else {
            Polynomial::var_at(s, i - 1)
        }
    }

    fn s_var(&self, edge: usize) -> Polynomial {
        Polynomial::var_at(self.arrangement.s_ring(), self.arrangement.n() + edge)
    }

    /// `θ_k(ℓ) = Σ_{ij ∈ E} h_{k-1}(x_i, x_j) s_ij`, zero for `k = 0`.
    pub fn saito_evaluation(&self, k: usize) -> Result<Polynomial> {
        let n = self.graph.n();
        if k >= n.max(1) {
            return Err(Error::invalid(format!("k = {k} outside 0..{}", n - 1)));
        }
        let sring = self.arrangement.s_ring();
        let mut acc = Polynomial::zero(sring);
        if k == 0 {
            return Ok(acc);
        }
        for (e, (i, j)) in self.graph.edges().into_iter().enumerate() {
            let (xi, xj) = (self.coord(i), self.coord(j));
            let mut h = Polynomial::zero(sring);
            for l in 0..k as u32 {
                h = &h + &(&xi.pow(l)? * &xj.pow(k as u32 - 1 - l)?);
            }
            acc = &acc + &(&h * &self.s_var(e));
        }
        Ok(acc)
    }

    /// `θ_C^T(ℓ)` for `θ_C^T = Σ_{i ∈ C} Π_{t ∈ T} (x_i - x_t) ∂_i`.
    pub fn separator_evaluation(&self, t: &[usize], c: &[usize]) -> Result<Polynomial> {
        let g = &self.graph;
        let tm = vertices_to_mask(g.n(), t)?;
        let cm = vertices_to_mask(g.n(), c)?;
        let comps = g.components_mask(g.all_mask() & !tm);
        if comps.len() < 2 {
            return Err(Error::invalid("T does not separate the graph"));
        }
        if !comps.contains(&cm) {
            return Err(Error::invalid("C is not a connected component of G \\ T"));
        }
        let sring = self.arrangement.s_ring();
        let coef = |i: usize| -> Result<Polynomial> {
            if cm >> (i - 1) & 1 == 0 {
                return Ok(Polynomial::zero(sring));
            }
            let mut p = Polynomial::one(sring);
            for &v in t {
                p = p.multiply(&(&self.coord(i) - &self.coord(v)))?;
            }
            Ok(p)
        };
        let mut acc = Polynomial::zero(sring);
        for (e, (i, j)) in g.edges().into_iter().enumerate() {
            let num = coef(i)?.try_sub(&coef(j)?)?;
            if num.is_zero() {
                continue;
            }
            let den = &self.coord(i) - &self.coord(j);
            let q = num.div_exact(&den)?.ok_or_else(|| {
                Error::consistency(format!("x{i} - x{j} does not divide the derivation image"))
            })?;
            acc = &acc + &(&q * &self.s_var(e));
        }
        Ok(acc)
    }

    /// `θ_1, ..., θ_{n-1}`, then `θ_C^T` for every separator `T` and every
    /// component `C` of `G \ T` whose neighbourhood is all of `T`, before
    /// pruning. Minimal separators alone do not always suffice.
    pub fn candidate_generators(&self) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        for k in 1..self.graph.n() {
            out.push(self.saito_evaluation(k)?);
        }
        for sep in separators(&self.graph)? {
            for c in sep.full_components(&self.graph) {
                out.push(self.separator_evaluation(&sep.vertices, &c)?);
            }
        }
        Ok(out)
    }

    /// Candidate generators with redundant ones dropped: separator
    /// derivations (later components first), then `θ_k` for decreasing
    /// `k`, each removed when it lies in the ideal of those that remain.
    /// The result generates the same ideal but need not be minimal.
    ///
    /// Every candidate is linear in `s`, so ideal membership among them is
    /// membership of coefficient vectors in a submodule of `R^m`.
    pub fn generators(&self, budget: Budget) -> Result<Vec<Polynomial>> {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in self.candidate_generators()? {
            let p = g.primitive();
            if !g.is_zero()
                && !gens
                    .iter()
                    .any(|h| h.primitive() == p || h.primitive() == p.neg())
            {
                gens.push(g);
            }
        }
        let vecs = gens
            .iter()
            .map(|g| self.coefficient_vector(g))
            .collect::<Result<Vec<_>>>()?;
        let mut keep = vec![true; gens.len()];
        for idx in (0..gens.len()).rev() {
            let others: Vec<ModuleVector> = vecs
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != idx && keep[k])
                .map(|(_, v)| v.clone())
                .collect();
            if !others.is_empty()
                && module_member(self.arrangement.ring(), &vecs[idx], &others, budget)?
            {
                keep[idx] = false;
            }
        }
        Ok(gens
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(p, _)| p)
            .collect())
    }

    /// `(a_1, ..., a_m)` over `R` for `Σ a_e s_e`.
    pub fn coefficient_vector(&self, g: &Polynomial) -> Result<ModuleVector> {
        let arr = &self.arrangement;
        let (nx, m) = (arr.n(), arr.m());
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); m];
        for (mono, c) in g.terms() {
            let e = mono.exponents();
            let s: Vec<usize> = (0..m).filter(|&k| e[nx + k] > 0).collect();
            if s.len() != 1 || e[nx + s[0]] != 1 {
                return Err(Error::invalid(format!(
                    "{g} is not linear in the data variables"
                )));
            }
            parts[s[0]].push((Monomial::from_exponents(&e[..nx]), c.clone()));
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_terms(arr.ring(), t))
            .collect()
    }
}
