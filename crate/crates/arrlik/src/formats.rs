//! Text formats for arrangements, ideals and graphs.
//!
//! Arrangement and ideal files:
//!
//! ```text
//! # comment
//! vars x y z
//! svars s1 s2 s3 s4      (optional: names of the data variables)
//! x
//! y
//! x^3 + y^3 + x*y*z
//! ```
//!
//! Graph files: `n <count>` followed by one edge `i j` per line.

use arrlik_core::graphic::Graph;
use arrlik_core::groebner::Ideal;
use arrlik_core::likelihood::Arrangement;
use arrlik_core::{parse_poly, Polynomial, Ring, RingRef};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Algebra {
        line: usize,
        source: arrlik_core::Error,
    },
    #[error(transparent)]
    Invalid(#[from] arrlik_core::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// The parsed contents of an arrangement or ideal file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFile {
    pub vars: Vec<String>,
    pub svars: Vec<String>,
    /// Polynomial text with its line number.
    pub polys: Vec<(usize, String)>,
}

impl PolyFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut lines = content_lines(text).peekable();
        let (ln, head) = lines.next().ok_or_else(|| syntax(0, "empty file"))?;
        let vars = declaration(ln, head, "vars")?;
        let mut svars = Vec::new();
        if let Some(&(ln, l)) = lines.peek() {
            if l.split_whitespace().next() == Some("svars") {
                svars = declaration(ln, l, "svars")?;
                lines.next();
            }
        }
        let polys: Vec<(usize, String)> = lines.map(|(n, l)| (n, l.to_string())).collect();
        if polys.is_empty() {
            return Err(syntax(ln, "no polynomials after the declaration"));
        }
        Ok(PolyFile { vars, svars, polys })
    }

    fn parse_in(&self, ring: &RingRef) -> Result<Vec<Polynomial>, FormatError> {
        self.polys
            .iter()
            .map(|(ln, t)| {
                parse_poly(t, ring).map_err(|source| FormatError::Algebra { line: *ln, source })
            })
            .collect()
    }

    /// Reads the file as an arrangement. An `svars` line names the data
    /// variables, one per polynomial; the default is `s1, ..., sm`.
    /// `allow_common_factors` turns the coprimality rejection into a warning.
    pub fn arrangement(&self, allow_common_factors: bool) -> Result<Arrangement, FormatError> {
        let ring = Ring::with_x(&self.vars)?;
        let polys = self.parse_in(&ring)?;
        let names: Vec<String> = if self.svars.is_empty() {
            (1..=polys.len()).map(|i| format!("s{i}")).collect()
        } else if self.svars.len() == polys.len() {
            self.svars.clone()
        } else {
            return Err(syntax(
                2,
                format!(
                    "{} svars declared for {} polynomials",
                    self.svars.len(),
                    polys.len()
                ),
            ));
        };
        let arr = if allow_common_factors {
            Arrangement::with_s_names_unchecked(&ring, polys, &names)?
        } else {
            Arrangement::with_s_names(&ring, polys, &names)?
        };
        Ok(arr)
    }

    /// Reads the file as an ideal in the ring of `vars` and `svars`.
    pub fn ideal(&self) -> Result<Ideal, FormatError> {
        let ring = Ring::new(&self.vars, &self.svars)?;
        let gens = self.parse_in(&ring)?;
        Ok(Ideal::new(&ring, gens)?)
    }

    /// Reads the file as an ideal in a given ring, checking the declared
    /// variables against it.
    pub fn ideal_in(&self, ring: &RingRef) -> Result<Ideal, FormatError> {
        let declared: Vec<&str> = self
            .vars
            .iter()
            .chain(&self.svars)
            .map(String::as_str)
            .collect();
        let names: Vec<&str> = ring.names().iter().map(String::as_str).collect();
        if declared != names {
            return Err(syntax(
                1,
                format!("declared variables {declared:?} differ from {names:?}"),
            ));
        }
        let gens = self.parse_in(ring)?;
        Ok(Ideal::new(ring, gens)?)
    }
}

fn declaration(ln: usize, line: &str, keyword: &str) -> Result<Vec<String>, FormatError> {
    let mut words = line.split_whitespace();
    if words.next() != Some(keyword) {
        return Err(syntax(ln, format!("expected `{keyword} ...`")));
    }
    let names: Vec<String> = words.map(str::to_string).collect();
    if names.is_empty() {
        return Err(syntax(ln, format!("`{keyword}` declares no variables")));
    }
    Ok(names)
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (ln, head) = lines.next().ok_or_else(|| syntax(0, "empty file"))?;
    let n = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| syntax(ln, format!("bad vertex count `{count}`")))?,
        _ => return Err(syntax(ln, "expected `n <count>`")),
    };
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let nums: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = nums.as_slice() else {
            return Err(syntax(ln, "expected an edge `i j`"));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| syntax(ln, format!("bad vertex `{s}`")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Graph::new(n, &edges).map_err(|source| FormatError::Algebra { line: ln, source })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangement_file() {
        let f =
            PolyFile::parse("# cubic\nvars x y z\nx\ny  # a line\n\nz\nx^3+y^3+x*y*z\n").unwrap();
        assert_eq!(f.vars, ["x", "y", "z"]);
        assert_eq!(f.polys.len(), 4);
        assert_eq!(f.polys[1], (4, "y".to_string()));
        let a = f.arrangement(false).unwrap();
        assert_eq!(a.degrees(), &[1, 1, 1, 3]);
        assert_eq!(a.s_ring().name(3), "s1");
        let named = PolyFile::parse("vars x y\nsvars a b\nx\ny\n").unwrap();
        assert_eq!(named.arrangement(false).unwrap().s_ring().name(3), "b");
        let short = PolyFile::parse("vars x y\nsvars a\nx\ny\n").unwrap();
        assert!(short.arrangement(false).is_err());
    }

    #[test]
    fn ideal_file() {
        let f = PolyFile::parse("vars x\nsvars s1 s2\ns1+s2\nx*s1\n").unwrap();
        let i = f.ideal().unwrap();
        assert_eq!(i.ring().num_s(), 2);
        assert_eq!(i.gens().len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = PolyFile::parse("vars x y\nx+\n")
            .unwrap()
            .arrangement(false);
        assert!(matches!(e, Err(FormatError::Algebra { line: 2, .. })));
        assert!(matches!(
            PolyFile::parse("x y\nx\n"),
            Err(FormatError::Syntax { line: 1, .. })
        ));
        assert!(PolyFile::parse("vars x\n").is_err());
        assert!(PolyFile::parse("").is_err());
    }

    #[test]
    fn graph_file() {
        let g = parse_graph("n 4\n# square\n1 2\n2 3\n3 4\n1 4\n").unwrap();
        assert_eq!(g.num_edges(), 4);
        assert_eq!(g.to_string(), "n 4\n1 2\n1 4\n2 3\n3 4\n");
        assert!(parse_graph("n 3\n1 4\n").is_err());
        assert!(parse_graph("m 3\n").is_err());
        assert!(parse_graph("n 3\n1 2 3\n").is_err());
    }
}
