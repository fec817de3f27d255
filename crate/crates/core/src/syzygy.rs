//! Submodules of free modules and kernels of polynomial matrices.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::groebner::engine::{self, Budget, EPoly, ETerm, ModOrder, Reducers};
use crate::groebner::from_epoly;
use crate::poly::{Polynomial, Ring, RingRef};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

/// Element of a free module `R^k`, one polynomial per component.
pub type ModuleVector = Vec<Polynomial>;

/// Dense matrix of polynomials over one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(ring: &RingRef, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    /// Row-major entries.
    pub fn new(ring: &RingRef, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| !Ring::same(e.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_columns(ring: &RingRef, rows: usize, columns: &[ModuleVector]) -> Result<Self> {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::LengthMismatch {
                    expected: rows,
                    got: c.len(),
                });
            }
            for (i, e) in c.iter().enumerate() {
                if !Ring::same(e.ring(), ring) {
                    return Err(Error::RingMismatch);
                }
                m.entries[i * m.cols + j] = e.clone();
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> ModuleVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<ModuleVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn multiply(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.try_add(&a.multiply(b)?)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// `self` on top of `below`.
    pub fn stack(&self, below: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != below.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: below.cols,
            });
        }
        if !Ring::same(&self.ring, &below.ring) {
            return Err(Error::RingMismatch);
        }
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows + below.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_block(&self, start: usize, end: usize) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: end - start,
            cols: self.cols,
            entries: self.entries[start * self.cols..end * self.cols].to_vec(),
        }
    }
}

impl fmt::Display for PolyMatrix {
    /// One row per line, entries separated by `, ` inside brackets.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Module orders on `R^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModuleOrder {
    /// Compare terms first, positions break ties (earlier position larger).
    #[default]
    TermOverPosition,
    /// Compare positions first (earlier position larger).
    PositionOverTerm,
}

fn vec_to_epoly(v: &[Polynomial], order: &ModOrder) -> EPoly {
    let mut den = BigInt::one();
    for p in v {
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
    }
    let mut terms: Vec<ETerm> = Vec::new();
    for (pos, p) in v.iter().enumerate() {
        for (m, c) in p.terms() {
            terms.push(ETerm {
                m: m.clone(),
                pos: pos as u32,
                c: c.numer() * (&den / c.denom()),
            });
        }
    }
    let terms = order.canonical(terms);
    let sugar = order.sugar_of(&terms);
    let mut e = EPoly { terms, sugar };
    e.make_primitive();
    e
}

fn epoly_to_vec(ring: &RingRef, e: &EPoly, offset: u32, len: usize) -> ModuleVector {
    (0..len)
        .map(|k| from_epoly(ring, e, offset + k as u32))
        .collect()
}

fn check_vectors(ring: &RingRef, gens: &[ModuleVector]) -> Result<usize> {
    let rank = gens.first().map(|g| g.len()).unwrap_or(0);
    for g in gens {
        if g.len() != rank {
            return Err(Error::LengthMismatch {
                expected: rank,
                got: g.len(),
            });
        }
        if g.iter().any(|p| !Ring::same(p.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
    }
    Ok(rank)
}

/// A Gröbner basis of a submodule of `R^k`.
#[derive(Debug, Clone)]
pub struct ModuleBasis {
    ring: RingRef,
    rank: usize,
    order: ModOrder,
    elems: Vec<EPoly>,
}

impl ModuleBasis {
    fn compute(
        ring: &RingRef,
        rank: usize,
        gens: &[ModuleVector],
        order: ModOrder,
        budget: Budget,
    ) -> Result<Self> {
        let eps = gens.iter().map(|g| vec_to_epoly(g, &order)).collect();
        let (elems, _) = engine::groebner(&order, eps, budget)?;
        Ok(ModuleBasis {
            ring: ring.clone(),
            rank,
            order,
            elems,
        })
    }

    pub fn vectors(&self) -> Vec<ModuleVector> {
        self.elems
            .iter()
            .map(|e| epoly_to_vec(&self.ring, e, 0, self.rank))
            .collect()
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        if v.len() != self.rank {
            return Err(Error::LengthMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        let e = vec_to_epoly(v, &self.order);
        if e.is_zero() {
            return Ok(true);
        }
        Ok(engine::reduce(
            &self.order,
            e,
            &Reducers::new(self.elems.iter().collect()),
            None,
            false,
        )
        .poly
        .is_zero())
    }

    pub fn verify(&self) -> Result<()> {
        engine::check_criterion(&self.order, &self.elems).map_err(Error::Consistency)
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`, with grevlex
/// (or the ring's default order) on terms.
pub fn module_gb(
    ring: &RingRef,
    gens: &[ModuleVector],
    order: ModuleOrder,
    budget: Budget,
) -> Result<Vec<ModuleVector>> {
    Ok(module_basis(ring, gens, order, budget)?.vectors())
}

pub fn module_basis(
    ring: &RingRef,
    gens: &[ModuleVector],
    order: ModuleOrder,
    budget: Budget,
) -> Result<ModuleBasis> {
    let rank = check_vectors(ring, gens)?;
    let mut mord = ModOrder::ideal(ring.default_order(), ring.nvars());
    mord.pot = order == ModuleOrder::PositionOverTerm;
    ModuleBasis::compute(ring, rank, gens, mord, budget)
}

/// Row degrees `r` and column weights `w` with every nonzero entry
/// homogeneous of degree `r_i - w_j`, normalized so the smallest value in
/// each connected block is zero for rows. `None` if no such grading exists.
fn infer_grading(q: &PolyMatrix) -> Option<(Vec<i64>, Vec<i64>)> {
    let (m, c) = (q.nrows(), q.ncols());
    let mut row: Vec<Option<i64>> = vec![None; m];
    let mut col: Vec<Option<i64>> = vec![None; c];
    let deg = |i: usize, j: usize| -> Option<Option<i64>> {
        let e = q.get(i, j);
        if e.is_zero() {
            Some(None)
        } else if e.is_homogeneous() {
            Some(Some(e.total_degree().unwrap() as i64))
        } else {
            None
        }
    };
    for i in 0..m {
        for j in 0..c {
            deg(i, j)?;
        }
    }
    for start in 0..m {
        if row[start].is_some() {
            continue;
        }
        row[start] = Some(0);
        let mut queue = VecDeque::from([(true, start)]);
        while let Some((is_row, k)) = queue.pop_front() {
            if is_row {
                let r = row[k].unwrap();
                for j in 0..c {
                    if let Some(d) = deg(k, j).unwrap() {
                        match col[j] {
                            None => {
                                col[j] = Some(r - d);
                                queue.push_back((false, j));
                            }
                            Some(w) if w != r - d => return None,
                            _ => {}
                        }
                    }
                }
            } else {
                let w = col[k].unwrap();
                for i in 0..m {
                    if let Some(d) = deg(i, k).unwrap() {
                        match row[i] {
                            None => {
                                row[i] = Some(w + d);
                                queue.push_back((true, i));
                            }
                            Some(r) if r != w + d => return None,
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    Some((
        row.into_iter().map(|r| r.unwrap_or(0)).collect(),
        col.into_iter().map(|w| w.unwrap_or(0)).collect(),
    ))
}

/// Columns generating the kernel `{ v : Q v = 0 }`.
///
/// Each column `q_j` is stacked over the unit vector `e_j`; a Gröbner basis
/// for an order that ranks the top block above the tracking block has, as
/// its elements led by tracking terms, vectors `(0; v)` whose `v` generate
/// the kernel. When `Q` admits a grading the result is pruned to a minimal
/// homogeneous generating set. Columns are sorted by degree and then by
/// their printed form, and signed so the first nonzero entry has a positive
/// leading coefficient. `Q · K = 0` is checked before returning.
pub fn kernel(q: &PolyMatrix, budget: Budget) -> Result<PolyMatrix> {
    let ring = q.ring();
    let (m, c) = (q.nrows(), q.ncols());
    let grading = infer_grading(q);
    let (rows, cols) = grading.clone().unwrap_or_else(|| (vec![0; m], vec![0; c]));
    let mut order = ModOrder::ideal(ring.default_order(), ring.nvars());
    order.weights = vec![1; ring.nvars()];
    order.shifts = rows
        .iter()
        .map(|r| -r)
        .chain(cols.iter().map(|w| -w))
        .collect();
    order.blocks = vec![1u8; m].into_iter().chain(vec![0u8; c]).collect();
    let gens: Vec<ModuleVector> = (0..c)
        .map(|j| {
            let mut v = q.column(j);
            v.extend((0..c).map(|k| {
                if k == j {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                }
            }));
            v
        })
        .collect();
    let eps = gens.iter().map(|g| vec_to_epoly(g, &order)).collect();
    let (basis, stats) = engine::groebner(&order, eps, budget)?;
    log::debug!(
        "kernel: {m}x{c} matrix, {} pairs, basis {}",
        stats.pairs,
        basis.len()
    );
    let mut syz: Vec<(i64, ModuleVector)> = basis
        .iter()
        .filter(|e| e.lead().pos as usize >= m)
        .map(|e| (order.sugar_of(&e.terms), epoly_to_vec(ring, e, m as u32, c)))
        .collect();

    // the tracking part inherits the order restricted to its positions
    let mut sub = ModOrder::ideal(ring.default_order(), ring.nvars());
    sub.weights = vec![1; ring.nvars()];
    sub.shifts = cols.iter().map(|w| -w).collect();
    if grading.is_some() {
        syz.sort_by_key(|(d, _)| *d);
        let mut kept: Vec<(i64, ModuleVector)> = Vec::new();
        for (d, v) in syz {
            if !kept.is_empty() {
                let gens: Vec<ModuleVector> = kept.iter().map(|(_, v)| v.clone()).collect();
                let mb = ModuleBasis::compute(ring, c, &gens, sub.clone(), budget)?;
                if mb.contains(&v)? {
                    continue;
                }
            }
            kept.push((d, v));
        }
        syz = kept;
    }
    let mut keyed: Vec<(i64, String, ModuleVector)> = syz
        .into_iter()
        .map(|(d, v)| {
            let v = normalize_sign(v);
            (d, format!("{}", VectorDisplay(&v)), v)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let columns: Vec<ModuleVector> = keyed.into_iter().map(|(_, _, v)| v).collect();
    let k = PolyMatrix::from_columns(ring, c, &columns)?;
    if !q.multiply(&k)?.is_zero() {
        return Err(Error::consistency(
            "computed kernel does not annihilate the matrix",
        ));
    }
    Ok(k)
}

/// Negate `v` if its first nonzero entry has a negative leading coefficient.
fn normalize_sign(v: ModuleVector) -> ModuleVector {
    match v.iter().find(|p| !p.is_zero()) {
        Some(p) if p.leading().unwrap().1.is_negative() => v.iter().map(|p| p.neg()).collect(),
        _ => v,
    }
}

/// Top `m` rows and bottom `n` rows of a kernel matrix.
pub fn split_kernel(k: &PolyMatrix, m: usize, n: usize) -> Result<(PolyMatrix, PolyMatrix)> {
    if k.nrows() != m + n {
        return Err(Error::LengthMismatch {
            expected: m + n,
            got: k.nrows(),
        });
    }
    Ok((k.row_block(0, m), k.row_block(m, m + n)))
}

/// Whether `v` lies in the submodule generated by `gens`.
pub fn module_member(
    ring: &RingRef,
    v: &[Polynomial],
    gens: &[ModuleVector],
    budget: Budget,
) -> Result<bool> {
    if gens.is_empty() {
        return Ok(v.iter().all(|p| p.is_zero()));
    }
    let mb = module_basis(ring, gens, ModuleOrder::TermOverPosition, budget)?;
    mb.contains(v)
}

struct VectorDisplay<'a>(&'a [Polynomial]);

impl fmt::Display for VectorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Render a vector as `(p1, p2, ...)`.
pub fn format_vector(v: &[Polynomial]) -> String {
    VectorDisplay(v).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ring(v: &[&str]) -> RingRef {
        Ring::with_x(v).unwrap()
    }

    fn vecs(r: &RingRef, v: &[&[&str]]) -> Vec<ModuleVector> {
        v.iter()
            .map(|c| c.iter().map(|s| parse_poly(s, r).unwrap()).collect())
            .collect()
    }

    #[test]
    fn module_gb_examples() {
        let r = ring(&["x", "y"]);
        let b = Budget::default();
        let g = vecs(&r, &[&["x", "0"], &["0", "x"]]);
        assert_eq!(
            module_gb(&r, &g, ModuleOrder::TermOverPosition, b)
                .unwrap()
                .len(),
            2
        );
        let g = vecs(&r, &[&["x", "y"], &["y", "x"]]);
        let gb = module_gb(&r, &g, ModuleOrder::PositionOverTerm, b).unwrap();
        let want = vecs(&r, &[&["x", "y"], &["y", "x"], &["0", "x^2-y^2"]]);
        assert_eq!(gb.len(), 3);
        for w in &want {
            assert!(gb.contains(w), "missing {}", format_vector(w));
        }
        assert!(module_gb(&r, &[], ModuleOrder::TermOverPosition, b)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn kernel_examples() {
        let r = ring(&["x"]);
        let b = Budget::default();
        let q = PolyMatrix::new(
            &r,
            1,
            2,
            vec![parse_poly("x", &r).unwrap(), Polynomial::one(&r)],
        )
        .unwrap();
        let k = kernel(&q, b).unwrap();
        assert_eq!(k.ncols(), 1);
        let (a, bb) = split_kernel(&k, 1, 1).unwrap();
        assert_eq!(a.get(0, 0), &Polynomial::one(&r));
        assert_eq!(bb.get(0, 0), &parse_poly("-x", &r).unwrap());
        let z = PolyMatrix::zeros(&r, 1, 2);
        let k = kernel(&z, b).unwrap();
        let cols = k.columns();
        assert_eq!(cols.len(), 2);
        assert!(cols.contains(&vec![Polynomial::one(&r), Polynomial::zero(&r)]));
        assert!(cols.contains(&vec![Polynomial::zero(&r), Polynomial::one(&r)]));
    }

    #[test]
    fn koszul_syzygies_are_found() {
        let r = ring(&["x", "y", "z"]);
        let b = Budget::default();
        let f: Vec<Polynomial> = ["x*y", "y*z", "x^2+z^2"]
            .iter()
            .map(|s| parse_poly(s, &r).unwrap())
            .collect();
        let q = PolyMatrix::new(&r, 1, 3, f.clone()).unwrap();
        let k = kernel(&q, b).unwrap();
        let cols = k.columns();
        for i in 0..3 {
            for j in i + 1..3 {
                let mut v = vec![Polynomial::zero(&r); 3];
                v[i] = f[j].clone();
                v[j] = f[i].neg();
                assert!(module_member(&r, &v, &cols, b).unwrap());
            }
        }
    }
}
