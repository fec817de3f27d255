use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::order::TermOrder;

/// Role of a ring variable in the bigrading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    /// Model coordinate, bidegree (1,0).
    X,
    /// Data coordinate, bidegree (0,1).
    S,
    /// Helper variable introduced by elimination routines, bidegree (0,0).
    Aux,
}

/// Bidegree `(dx, ds)` of a bihomogeneous polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bidegree {
    pub dx: u32,
    pub ds: u32,
}

impl Bidegree {
    pub const fn new(dx: u32, ds: u32) -> Self {
        Bidegree { dx, ds }
    }
}

impl core::ops::Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.dx + rhs.dx, self.ds + rhs.ds)
    }
}

impl core::fmt::Display for Bidegree {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{})", self.dx, self.ds)
    }
}

/// An ordered list of named variables: the x-variables, then the
/// s-variables, then any auxiliary variables.
///
/// Rings are immutable once built and are shared through [`Arc`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    kinds: Vec<VarKind>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(x_vars: &[S], s_vars: &[S]) -> Result<RingRef> {
        let mut names = Vec::with_capacity(x_vars.len() + s_vars.len());
        let mut kinds = Vec::with_capacity(names.capacity());
        for v in x_vars {
            names.push(v.as_ref().to_string());
            kinds.push(VarKind::X);
        }
        for v in s_vars {
            names.push(v.as_ref().to_string());
            kinds.push(VarKind::S);
        }
        Self::from_parts(names, kinds)
    }

    /// Ring with x-variables only.
    pub fn with_x<S: AsRef<str>>(x_vars: &[S]) -> Result<RingRef> {
        Self::new::<S>(x_vars, &[])
    }

    fn from_parts(names: Vec<String>, kinds: Vec<VarKind>) -> Result<RingRef> {
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::invalid(format!(
                    "`{n}` is not a valid variable name"
                )));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        let ring = Ring { names, kinds };
        let mut seen_s = false;
        let mut seen_aux = false;
        for k in &ring.kinds {
            match k {
                VarKind::X if seen_s || seen_aux => {
                    return Err(Error::invalid("x-variables must precede s-variables"))
                }
                VarKind::S if seen_aux => {
                    return Err(Error::invalid(
                        "s-variables must precede auxiliary variables",
                    ))
                }
                VarKind::S => seen_s = true,
                VarKind::Aux => seen_aux = true,
                VarKind::X => {}
            }
        }
        Ok(Arc::new(ring))
    }

    /// This ring with fresh s-variables appended.
    pub fn with_s_vars<S: AsRef<str>>(&self, s_vars: &[S]) -> Result<RingRef> {
        if self.kinds.iter().any(|k| *k != VarKind::X) {
            return Err(Error::invalid(
                "s-variables can only be added to a pure x-ring",
            ));
        }
        let mut names = self.names.clone();
        let mut kinds = self.kinds.clone();
        for v in s_vars {
            names.push(v.as_ref().to_string());
            kinds.push(VarKind::S);
        }
        Self::from_parts(names, kinds)
    }

    /// This ring with one auxiliary variable appended (name chosen to avoid clashes).
    pub(crate) fn with_aux(&self, base: &str) -> RingRef {
        let mut name = base.to_string();
        while self.names.contains(&name) {
            name.push('_');
        }
        let mut names = self.names.clone();
        let mut kinds = self.kinds.clone();
        names.push(name);
        kinds.push(VarKind::Aux);
        Arc::new(Ring { names, kinds })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn kind(&self, i: usize) -> VarKind {
        self.kinds[i]
    }

    pub fn kinds(&self) -> &[VarKind] {
        &self.kinds
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn num_x(&self) -> usize {
        self.kinds.iter().filter(|k| **k == VarKind::X).count()
    }

    pub fn num_s(&self) -> usize {
        self.kinds.iter().filter(|k| **k == VarKind::S).count()
    }

    pub fn x_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.kinds
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == VarKind::X)
            .map(|(i, _)| i)
    }

    pub fn s_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.kinds
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == VarKind::S)
            .map(|(i, _)| i)
    }

    pub fn has_aux(&self) -> bool {
        self.kinds.contains(&VarKind::Aux)
    }

    /// Order used for canonical storage and printing: grevlex on pure
    /// x-rings, x-degree-first bigraded grevlex once s-variables exist.
    pub fn default_order(&self) -> TermOrder {
        if self.num_s() == 0 {
            TermOrder::Grevlex
        } else {
            TermOrder::BigradedWith {
                nx: self.num_x(),
                ns: self.num_s(),
            }
        }
    }

    pub(crate) fn same(a: &RingRef, b: &RingRef) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
