//! Text formats for quivers and representations, orientation specs, and DOT output.
//!
//! Quiver file:
//! ```text
//! quiver
//! v 1
//! v 2
//! a a1 2 1
//! ```
//! Representation file: a header `rep <ref>` where ref is a standard name (`A5`, `D6`,
//! `E8`) optionally followed by an orientation spec, or `-` for a quiver given earlier in
//! the same file; then `d <vertex> <dim>` lines and `m <arrow>` blocks with one line of
//! rationals per row. Blocks of empty matrices are omitted. `#` starts a comment.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, Matrix};
use crate::quiver::{self, Arrow, Quiver};
use crate::rep::Representation;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let l = l.split('#').next().unwrap_or("");
            let toks: Vec<&str> = l.split_whitespace().collect();
            (!toks.is_empty()).then_some((i + 1, toks))
        })
        .collect()
}

pub fn render_quiver(q: &Quiver) -> String {
    let mut s = String::from("quiver\n");
    for l in q.labels() {
        let _ = writeln!(s, "v {l}");
    }
    for a in q.arrows() {
        let _ = writeln!(s, "a {} {} {}", a.id, q.label(a.source), q.label(a.target));
    }
    s
}

fn parse_quiver_lines(lines: &[(usize, Vec<&str>)]) -> Result<Quiver> {
    let mut labels: Vec<String> = Vec::new();
    let mut raw: Vec<(usize, String, String, String)> = Vec::new();
    for (ln, toks) in lines {
        match toks[0] {
            "v" if toks.len() == 2 => {
                if labels.iter().any(|l| l == toks[1]) {
                    return Err(perr(*ln, format!("duplicate vertex '{}'", toks[1])));
                }
                labels.push(toks[1].to_string());
            }
            "a" if toks.len() == 4 => raw.push((*ln, toks[1].into(), toks[2].into(), toks[3].into())),
            "v" | "a" => return Err(perr(*ln, "wrong number of fields")),
            other => return Err(perr(*ln, format!("unexpected '{other}' in quiver section"))),
        }
    }
    let mut arrows = Vec::new();
    for (ln, id, s, t) in raw {
        let find = |l: &str| {
            labels.iter().position(|x| x == l).ok_or_else(|| perr(ln, format!("unknown vertex '{l}'")))
        };
        arrows.push(Arrow { id, source: find(&s)?, target: find(&t)? });
    }
    if labels.is_empty() {
        return Err(Error::EmptyQuiver);
    }
    Quiver::new(labels, arrows).map_err(|e| perr(lines.first().map_or(1, |l| l.0), e.to_string()))
}

pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let lines = content_lines(text);
    let Some((ln, head)) = lines.first() else {
        return Err(perr(1, "empty input"));
    };
    if head != &["quiver"] {
        return Err(perr(*ln, "expected header 'quiver'"));
    }
    parse_quiver_lines(&lines[1..])
}

/// Applies an orientation spec: `toward:<label>`, `away:<label>`, `flip:<id>,<id>,...`
/// or `opposite`; specs may be chained with `+`.
pub fn apply_orientation(q: &Quiver, spec: &str) -> Result<Quiver> {
    let mut cur = q.clone();
    for part in spec.split('+').filter(|p| !p.is_empty()) {
        let (kind, arg) = part.split_once(':').unwrap_or((part, ""));
        cur = match kind {
            "toward" => cur.oriented_toward(cur.vertex_or_err(arg)?),
            "away" => cur.oriented_toward(cur.vertex_or_err(arg)?).opposite(),
            "opposite" => cur.opposite(),
            "flip" => {
                let mut flags = vec![false; cur.arrow_count()];
                for id in arg.split(',').filter(|s| !s.is_empty()) {
                    let a = cur
                        .arrow_index(id)
                        .ok_or_else(|| Error::Precondition(format!("unknown arrow '{id}'")))?;
                    flags[a] = true;
                }
                cur.with_reversed(&flags)
            }
            _ => return Err(Error::Precondition(format!("unknown orientation spec '{part}'"))),
        };
    }
    Ok(cur)
}

/// Resolves `<name> [orientation]` to a standard quiver.
pub fn resolve_quiver_ref(toks: &[&str]) -> Result<Quiver> {
    let name = toks.first().ok_or_else(|| Error::Precondition("missing quiver name".into()))?;
    let q = quiver::standard(name).ok_or_else(|| Error::Precondition(format!("unknown quiver '{name}'")))?;
    match toks.get(1) {
        Some(spec) => apply_orientation(&q, spec),
        None => Ok(q),
    }
}

pub fn render_rep(m: &Representation, quiver_ref: &str) -> String {
    let q = m.quiver();
    let mut s = String::new();
    if quiver_ref == "-" {
        s.push_str(&render_quiver(q));
    }
    let _ = writeln!(s, "rep {quiver_ref}");
    for v in 0..q.vertex_count() {
        let _ = writeln!(s, "d {} {}", q.label(v), m.dim(v));
    }
    for (k, a) in q.arrows().iter().enumerate() {
        let mat = m.map(k);
        if mat.rows() == 0 || mat.cols() == 0 {
            continue;
        }
        let _ = writeln!(s, "m {}", a.id);
        for i in 0..mat.rows() {
            let row: Vec<String> = mat.row(i).iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{}", row.join(" "));
        }
    }
    s
}

/// Renders a representation of its own quiver inline.
pub fn render_rep_inline(m: &Representation) -> String {
    render_rep(m, "-")
}

/// Parses a representation file; returns the representation and the quiver reference
/// tokens from the header.
pub fn parse_rep(text: &str) -> Result<(Representation, String)> {
    let lines = content_lines(text);
    let Some(rep_at) = lines.iter().position(|(_, t)| t[0] == "rep") else {
        return Err(perr(lines.first().map_or(1, |l| l.0), "missing 'rep' header"));
    };
    let (hl, head) = &lines[rep_at];
    let reference = head[1..].join(" ");
    let q = if head.get(1) == Some(&"-") {
        if rep_at == 0 || lines[0].1 != ["quiver"] {
            return Err(perr(*hl, "'rep -' needs a preceding quiver section"));
        }
        parse_quiver_lines(&lines[1..rep_at])?
    } else {
        if rep_at != 0 {
            return Err(perr(lines[0].0, "unexpected lines before 'rep' header"));
        }
        resolve_quiver_ref(&head[1..]).map_err(|e| perr(*hl, e.to_string()))?
    };
    let q = Arc::new(q);
    let n = q.vertex_count();
    let mut dims = vec![0usize; n];
    let mut seen_dim = vec![false; n];
    let body = &lines[rep_at + 1..];
    let mut i = 0;
    while i < body.len() && body[i].1[0] == "d" {
        let (ln, t) = &body[i];
        if t.len() != 3 {
            return Err(perr(*ln, "expected 'd <vertex> <dim>'"));
        }
        let v = q.vertex(t[1]).ok_or_else(|| perr(*ln, format!("unknown vertex '{}'", t[1])))?;
        if seen_dim[v] {
            return Err(perr(*ln, format!("dimension of '{}' given twice", t[1])));
        }
        seen_dim[v] = true;
        dims[v] = t[2].parse().map_err(|_| perr(*ln, format!("bad dimension '{}'", t[2])))?;
        i += 1;
    }
    let mut maps: Vec<Option<Matrix>> = vec![None; q.arrow_count()];
    while i < body.len() {
        let (ln, t) = &body[i];
        if t[0] != "m" || t.len() != 2 {
            return Err(perr(*ln, "expected 'm <arrow>'"));
        }
        let a = q.arrow_index(t[1]).ok_or_else(|| perr(*ln, format!("unknown arrow '{}'", t[1])))?;
        if maps[a].is_some() {
            return Err(perr(*ln, format!("matrix for '{}' given twice", t[1])));
        }
        let arrow = q.arrow(a);
        let (r, c) = (dims[arrow.target], dims[arrow.source]);
        let mut data = Vec::with_capacity(r * c);
        for k in 0..r {
            let Some((rl, row)) = body.get(i + 1 + k) else {
                return Err(perr(*ln, format!("matrix '{}' needs {r} rows", t[1])));
            };
            if row.len() != c {
                return Err(perr(*rl, format!("expected {c} entries, found {}", row.len())));
            }
            for tok in row {
                data.push(parse_rational(tok).map_err(|_| perr(*rl, format!("bad rational '{tok}'")))?);
            }
        }
        maps[a] = Some(Matrix::from_data(r, c, data)?);
        i += 1 + r;
    }
    let maps = q
        .arrows()
        .iter()
        .zip(maps)
        .map(|(ar, m)| m.unwrap_or_else(|| Matrix::zeros(dims[ar.target], dims[ar.source])))
        .collect();
    Ok((Representation::new(q, dims, maps)?, reference))
}

// ---------------------------------------------------------------------------
// DOT

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A directed graph for DOT output; node attributes are raw DOT attribute strings.
pub struct DotGraph {
    pub name: String,
    pub nodes: Vec<(String, String, String)>,
    pub edges: Vec<(String, String, String)>,
}

impl DotGraph {
    pub fn new(name: &str) -> Self {
        DotGraph { name: name.to_string(), nodes: Vec::new(), edges: Vec::new() }
    }

    pub fn node(&mut self, id: &str, label: &str, attrs: &str) {
        self.nodes.push((id.to_string(), label.to_string(), attrs.to_string()));
    }

    pub fn edge(&mut self, from: &str, to: &str, label: &str) {
        self.edges.push((from.to_string(), to.to_string(), label.to_string()));
    }

    pub fn render(&self) -> String {
        let mut s = format!("digraph \"{}\" {{\n  rankdir=LR;\n", dot_escape(&self.name));
        for (id, label, attrs) in &self.nodes {
            let extra = if attrs.is_empty() { String::new() } else { format!(", {attrs}") };
            let _ = writeln!(s, "  \"{}\" [label=\"{}\"{}];", dot_escape(id), dot_escape(label), extra);
        }
        for (a, b, label) in &self.edges {
            if label.is_empty() {
                let _ = writeln!(s, "  \"{}\" -> \"{}\";", dot_escape(a), dot_escape(b));
            } else {
                let _ = writeln!(s, "  \"{}\" -> \"{}\" [label=\"{}\"];", dot_escape(a), dot_escape(b), dot_escape(label));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// DOT for a quiver; exceptional vertices of connected Dynkin quivers are marked ⋆.
pub fn quiver_dot(q: &Quiver) -> String {
    let star = if q.is_connected() && quiver::is_dynkin(q) {
        quiver::exceptional_vertices(q).unwrap_or_default()
    } else {
        Vec::new()
    };
    let mut g = DotGraph::new("quiver");
    for v in 0..q.vertex_count() {
        let l = q.label(v);
        if star.contains(&v) {
            g.node(l, &format!("{l} ⋆"), "shape=doublecircle");
        } else {
            g.node(l, l, "shape=circle");
        }
    }
    for a in q.arrows() {
        g.edge(q.label(a.source), q.label(a.target), &a.id);
    }
    g.render()
}

pub fn format_dim_vector(d: &[i64]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use crate::quiver::type_d;

    #[test]
    fn quiver_round_trip() {
        let q = type_d(5);
        let text = render_quiver(&q);
        assert_eq!(parse_quiver(&text).unwrap(), q);
        assert_eq!(render_quiver(&parse_quiver(&text).unwrap()), text);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let e = parse_quiver("quiver\nv 1\n\na x 1 2\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 4, msg: "unknown vertex '2'".into() });
        let e = parse_quiver("# c\nquivr\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn rep_round_trip() {
        let q = Arc::new(quiver::type_a(3));
        let m = Representation::new(
            q,
            vec![1, 2, 0],
            vec![
                Matrix::from_rows(vec![vec![ratio(1, 2), ratio(-3, 1)]], 2).unwrap(),
                Matrix::zeros(2, 0),
            ],
        )
        .unwrap();
        let text = render_rep(&m, "A3");
        assert_eq!(text, "rep A3\nd 1 1\nd 2 2\nd 3 0\nm a1\n1/2 -3\n");
        let (back, r) = parse_rep(&text).unwrap();
        assert_eq!(r, "A3");
        assert_eq!(back, m);
        let inline = render_rep_inline(&m);
        let (back2, _) = parse_rep(&inline).unwrap();
        assert_eq!(back2, m);
        assert_eq!(render_rep_inline(&back2), inline);
    }

    #[test]
    fn rep_shape_errors() {
        let e = parse_rep("rep A2\nd 1 2\nd 2 1\nm a1\n1 0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }));
        let e = parse_rep("rep A2\nd 1 1\nd 2 1\nm a1\nx\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 5, .. }));
    }

    #[test]
    fn orientation_specs() {
        let q = quiver::type_a(3);
        let t = apply_orientation(&q, "toward:3").unwrap();
        assert!(t.is_sink(2));
        let f = apply_orientation(&q, "flip:a1").unwrap();
        assert_eq!(f.arrow(0).source, 0);
        assert!(apply_orientation(&q, "sideways").is_err());
    }

    #[test]
    fn dot_marks_star() {
        let d = quiver_dot(&quiver::type_e(6));
        assert!(d.contains("\"6\" [label=\"6 ⋆\""));
    }
}
