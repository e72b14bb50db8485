//! Plain-text and LaTeX renderings.

use std::fmt::Write;

use billey_core::grassmann::MarkedDiagram;
use billey_core::{BruhatGraph, Polynomial, RootSystem, RootVector, TPolynomial, Word};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

fn sub(i: usize) -> String {
    if i < 10 {
        format!("_{}", i)
    } else {
        format!("_{{{}}}", i)
    }
}

pub fn alpha_latex(i: usize) -> String {
    format!("\\alpha{}", sub(i))
}

/// `1,2,1`; the identity is `e`.
pub fn word_text(w: &Word) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.to_string()
    }
}

/// `s_1s_2s_1`; the identity is `e`.
pub fn word_latex(w: &Word) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.letters().iter().map(|&i| format!("s{}", sub(i))).collect()
}

pub fn root_latex(r: &RootVector) -> String {
    Polynomial::from_root(r).render(&|i| alpha_latex(i), "", &|k| format!("^{{{}}}", k))
}

/// Polynomial in named variables, e.g. `t1-t3`.
pub fn poly_text_vars(p: &Polynomial, prefix: &str) -> String {
    p.render(&|i| format!("{}{}", prefix, i), "*", &|k| format!("^{}", k))
}

fn expanded_latex(p: &Polynomial, name: &dyn Fn(usize) -> String) -> String {
    p.render(name, "", &|k| format!("^{{{}}}", k))
}

/// Writes `p` as a product of positive roots when it splits, otherwise
/// expanded: `\alpha_1\alpha_2(\alpha_1+\alpha_2)`.
pub fn poly_latex(rs: &RootSystem, p: &Polynomial) -> String {
    let factored = p.factor_over(rs.positive_roots());
    let Some((c, factors)) = factored else {
        return expanded_latex(p, &|i| alpha_latex(i));
    };
    if factors.is_empty() {
        return c.to_string();
    }
    let many = factors.len() > 1 || factors[0].1 > 1 || !c.abs().is_one();
    let mut s = String::new();
    if c == -BigInt::one() {
        s.push('-');
    } else if !c.is_one() {
        write!(s, "{}", c).unwrap();
    }
    for (k, m) in factors {
        let r = &rs.positive_roots()[k];
        let body = root_latex(r);
        if many && r.height() > 1 {
            write!(s, "({})", body).unwrap();
        } else {
            s.push_str(&body);
        }
        if m > 1 {
            write!(s, "^{{{}}}", m).unwrap();
        }
    }
    s
}

pub fn tvars_latex(p: &Polynomial) -> String {
    expanded_latex(p, &|i| format!("t{}", sub(i)))
}

pub fn tpoly_latex(p: &TPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for d in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[d];
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        let mag = c.abs();
        if d == 0 || !mag.is_one() {
            write!(s, "{}", mag).unwrap();
        }
        match d {
            0 => {}
            1 => s.push('t'),
            _ => write!(s, "t^{{{}}}", d).unwrap(),
        }
    }
    s
}

/// A tikz picture of the Bruhat graph with elements placed by length,
/// each vertex labelled by `label(index)`.
pub fn bruhat_tikz(graph: &BruhatGraph, label: &dyn Fn(usize) -> String) -> String {
    let g = &graph.group;
    let max_len = g.lengths.iter().copied().max().unwrap_or(0);
    let mut s = String::from("\\begin{tikzpicture}[scale=1.5]\n");
    for len in 0..=max_len {
        let level: Vec<usize> = (0..g.len()).filter(|&k| g.lengths[k] == len).collect();
        let width = level.len() as f64 - 1.0;
        for (pos, &k) in level.iter().enumerate() {
            let x = 2.0 * (pos as f64 - width / 2.0);
            writeln!(
                s,
                "  \\node (v{}) at ({}, {}) {{${}$}};",
                k,
                fmt_coord(x),
                len,
                label(k)
            )
            .unwrap();
        }
    }
    for e in &graph.edges {
        writeln!(s, "  \\draw (v{}) -- (v{});", e.lower, e.upper).unwrap();
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

fn fmt_coord(x: f64) -> String {
    if x.fract() == 0.0 {
        format!("{}", x as i64)
    } else {
        format!("{:.1}", x)
    }
}

/// Marked boxes as `\ast`, empty boxes as `\cdot`.
pub fn diagram_latex(d: &MarkedDiagram) -> String {
    let width = d.shape.part(1).max(1);
    let mut s = format!("\\begin{{array}}{{{}}}\n", "c".repeat(width));
    for r in 1..=d.shape.num_rows() {
        let cells: Vec<&str> = (1..=d.shape.part(r))
            .map(|c| if d.is_marked((r, c)) { "\\ast" } else { "\\cdot" })
            .collect();
        writeln!(s, "{} \\\\", cells.join(" & ")).unwrap();
    }
    s.push_str("\\end{array}");
    s
}
