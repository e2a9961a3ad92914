//! The `.scx` text interchange format.
//!
//! Line-oriented ASCII. `#` starts a comment that runs to the end of the
//! line; blank lines are skipped. The first significant line is the header
//! `scx <d> <n>`; every following line is one weighted top simplex, `d + 1`
//! vertex ids and a decimal weight separated by spaces. Serialization emits
//! simplices in lexicographic order and weights as shortest round-trip
//! decimals, so parsing a serialized complex reproduces it exactly.

use crate::complex::WeightedComplex;
use crate::error::Error;
use crate::simplex::Simplex;

fn fail(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse { line, reason: reason.into() }
}

/// Parses a complex from `.scx` text.
///
/// Vertex order within a line is canonicalized; a repeated simplex is an
/// error rather than last-wins.
pub fn parse(input: &str) -> Result<WeightedComplex, Error> {
    let mut header: Option<(usize, u32)> = None;
    let mut entries: Vec<(Simplex, f64)> = Vec::new();
    let mut line_count = 0usize;

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        line_count = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();

        let Some((d, n)) = header else {
            if tokens.len() != 3 || tokens[0] != "scx" {
                return Err(fail(line_no, "expected header `scx <d> <n>`"));
            }
            let d: usize = tokens[1]
                .parse()
                .map_err(|_| fail(line_no, format!("bad dimension `{}`", tokens[1])))?;
            let n: u32 = tokens[2]
                .parse()
                .map_err(|_| fail(line_no, format!("bad vertex count `{}`", tokens[2])))?;
            if d == 0 {
                return Err(fail(line_no, "dimension must be at least 1"));
            }
            if n == 0 {
                return Err(fail(line_no, "vertex count must be at least 1"));
            }
            header = Some((d, n));
            continue;
        };

        if tokens.len() != d + 2 {
            return Err(fail(
                line_no,
                format!(
                    "expected {} vertex ids and a weight, found {} fields",
                    d + 1,
                    tokens.len()
                ),
            ));
        }
        let mut vertices = Vec::with_capacity(d + 1);
        for tok in &tokens[..d + 1] {
            let v: u32 = tok
                .parse()
                .map_err(|_| fail(line_no, format!("bad vertex id `{tok}`")))?;
            vertices.push(v);
        }
        let weight_tok = tokens[d + 1];
        let weight: f64 = weight_tok
            .parse()
            .map_err(|_| fail(line_no, format!("bad weight `{weight_tok}`")))?;
        if !weight.is_finite() {
            return Err(fail(line_no, format!("non-finite weight `{weight_tok}`")));
        }
        let simplex = Simplex::new(vertices).map_err(|e| fail(line_no, e.to_string()))?;
        if simplex.max_vertex() > n {
            return Err(fail(
                line_no,
                format!("vertex {} out of range 1..={n}", simplex.max_vertex()),
            ));
        }
        if entries.iter().any(|(s, _)| *s == simplex) {
            return Err(fail(line_no, format!("duplicate simplex {simplex:?}")));
        }
        entries.push((simplex, weight));
    }

    let Some((d, n)) = header else {
        return Err(fail(line_count + 1, "missing `scx <d> <n>` header"));
    };
    WeightedComplex::new(d, n, entries)
}

/// Serializes a complex in canonical form.
pub fn serialize(cx: &WeightedComplex) -> String {
    let mut out = format!("scx {} {}\n", cx.dim(), cx.vertex_count());
    for (s, w) in cx.entries() {
        for v in s.vertices() {
            out.push_str(&v.to_string());
            out.push(' ');
        }
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}
