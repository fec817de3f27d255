//! Command results, rendered as text or JSON.
//!
//! The text form of an ideal is itself a valid ideal file: metadata goes
//! into `#` comment lines, followed by `vars`, `svars` and one generator
//! per line with its bidegree as a trailing comment.

use std::fmt::Write as _;

use arrlik_core::graphic::Separator;
use arrlik_core::groebner::Ideal;
use arrlik_core::Polynomial;
use serde::Serialize;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Generator {
    pub polynomial: String,
    /// `[x-degree, s-degree]`, absent for inhomogeneous polynomials.
    pub bidegree: Option<[u32; 2]>,
}

impl Generator {
    pub fn new(p: &Polynomial) -> Self {
        Generator {
            polynomial: p.to_string(),
            bidegree: p.bidegree().map(|b| [b.dx, b.ds]),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SeparatorReport {
    pub vertices: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl From<&Separator> for SeparatorReport {
    fn from(s: &Separator) -> Self {
        SeparatorReport {
            vertices: s.vertices.clone(),
            components: s.components.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MultidegreeReport {
    /// Rendered like `2*p^2*u + 3*p*u^2 + u^3`.
    pub form: String,
    pub codim: usize,
    /// `c_d, ..., c_0` as decimal strings, before truncation.
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BudgetReport {
    pub max_pairs: Option<usize>,
    pub max_degree: Option<u32>,
    /// S-pairs processed for the basis of the reported ideal.
    pub pairs: Option<usize>,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vars: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub svars: Vec<String>,
    /// Generators of the reported ideal, sorted by bidegree then text.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Generator>>,
    /// Whether `generators` is a minimal generating set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal: Option<bool>,
    /// Number of kernel generators of the presentation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_generators: Option<usize>,
    /// Degrees of the columns of `A`; `null` marks a zero column.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column_degrees: Option<Vec<Option<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multidegree: Option<MultidegreeReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ml_degree: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chordal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separators: Option<Vec<SeparatorReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<bool>,
    /// Arrangement polynomials, for `graphic arrangement`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomials: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<BudgetReport>,
}

impl Report {
    pub fn new(command: &str, input: &str) -> Self {
        Report {
            command: command.to_string(),
            input: input.to_string(),
            ..Report::default()
        }
    }

    /// Fills `vars`, `svars` and `generators` from an ideal.
    pub fn set_ideal(&mut self, ideal: &Ideal) {
        let ring = ideal.ring();
        self.vars = ring.x_indices().map(|i| ring.name(i).to_string()).collect();
        self.svars = ring.s_indices().map(|i| ring.name(i).to_string()).collect();
        let mut gens: Vec<Generator> = ideal
            .gens()
            .iter()
            .map(|g| Generator::new(&g.primitive()))
            .collect();
        gens.sort_by(|a, b| {
            let key = |g: &Generator| g.bidegree.map(|[x, s]| (x + s, x));
            key(a)
                .cmp(&key(b))
                .then_with(|| a.polynomial.len().cmp(&b.polynomial.len()))
                .then_with(|| a.polynomial.cmp(&b.polynomial))
        });
        self.generators = Some(gens);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "# {} {}", self.command, self.input);
        if let Some(v) = &self.verdict {
            let _ = writeln!(w, "# verdict: {v}");
        }
        if let Some(x) = &self.witness {
            let _ = writeln!(w, "# witness: {x}");
        }
        if let Some(r) = &self.reason {
            let _ = writeln!(w, "# stopped: {r}");
        }
        if let Some(l) = self.kernel_generators {
            let _ = writeln!(w, "# kernel generators: {l}");
        }
        if let Some(cd) = &self.column_degrees {
            let shown: Vec<String> = cd
                .iter()
                .map(|d| d.map_or("zero".to_string(), |d| d.to_string()))
                .collect();
            let _ = writeln!(w, "# column degrees: {}", shown.join(" "));
        }
        if let Some(md) = &self.multidegree {
            let _ = writeln!(w, "# codim: {}", md.codim);
            let _ = writeln!(w, "# multidegree: {}", md.form);
        }
        if let Some(ml) = &self.ml_degree {
            let _ = writeln!(w, "# ml degree: {ml}");
        }
        if let Some(c) = self.chordal {
            let _ = writeln!(w, "chordal {c}");
        }
        if let Some(o) = self.obstruction {
            let _ = writeln!(w, "obstruction {o}");
        }
        if let Some(seps) = &self.separators {
            let plural = if seps.len() == 1 { "" } else { "s" };
            let _ = writeln!(w, "# {} separator{plural}", seps.len());
            for s in seps {
                let comps: Vec<String> = s.components.iter().map(|c| join(c, " ")).collect();
                let _ = writeln!(w, "{{{}}} | {}", join(&s.vertices, ","), comps.join(" | "));
            }
        }
        if let Some(polys) = &self.polynomials {
            let _ = writeln!(w, "vars {}", self.vars.join(" "));
            for p in polys {
                let _ = writeln!(w, "{p}");
            }
        }
        if let Some(gens) = &self.generators {
            let minimal = if self.minimal == Some(true) {
                " minimal"
            } else {
                ""
            };
            let plural = if gens.len() == 1 { "" } else { "s" };
            let _ = writeln!(w, "# {}{minimal} generator{plural}", gens.len());
            let _ = writeln!(w, "vars {}", self.vars.join(" "));
            if !self.svars.is_empty() {
                let _ = writeln!(w, "svars {}", self.svars.join(" "));
            }
            for g in gens {
                match g.bidegree {
                    Some([x, s]) => {
                        let _ = writeln!(w, "{}  # ({x},{s})", g.polynomial);
                    }
                    None => {
                        let _ = writeln!(w, "{}", g.polynomial);
                    }
                }
            }
        }
        out
    }
}

fn join(v: &[usize], sep: &str) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}
