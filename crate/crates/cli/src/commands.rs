//! Subcommand bodies. Each builds its text, JSON and LaTeX forms and the
//! caller picks one.

use std::fmt::Write as _;

use billey_core::billey::{self, class_table, gkm_check, kumar_smooth, schubert_class, GKMClass};
use billey_core::grassmann::{
    compare_eyd_with_billey, enumerate_eyd, eyd_polynomial_in, Partition,
};
use billey_core::pinball::{
    chevalley_monk_expand, giambelli_check, pinball_search, verify_assignment, Mode, PetersonTable,
};
use billey_core::subvariety::{
    hessenberg_fixed_points, peterson_fixed_points, springer_fixed_points, FixedPointSet,
    HessenbergFunction, JordanType,
};
use billey_core::{
    BruhatGraph, Family, Polynomial, RootSystem, TPolynomial, WeylElement, WeylGroup, Word,
};
use serde_json::{json, Value};

use crate::json::{
    class_from_json, class_to_json, poly_to_json, root_poly_to_json, tpoly_to_json, var_names,
    ClassEntryJson, CartanJson,
};
use crate::render::{
    bruhat_tikz, diagram_latex, poly_latex, poly_text_vars, root_latex, tpoly_latex, tvars_latex,
    word_latex, word_text,
};
use crate::{
    CliError, Command, Format, GlobalArgs, GroupArgs, PetersonCheck, SearchMode, Specialize,
    Variety, VarietyArgs,
};

type Res<T> = Result<T, CliError>;

struct Out {
    text: String,
    json: Value,
    latex: Option<String>,
}

impl Out {
    fn pick(self, f: Format) -> String {
        match f {
            Format::Text => self.text,
            Format::Json => serde_json::to_string_pretty(&self.json).expect("values serialize"),
            Format::Latex => self.latex.unwrap_or(self.text),
        }
    }
}

pub fn execute(cmd: &Command, g: &GlobalArgs) -> Res<String> {
    let cap = g.max_group_size;
    let out = match cmd {
        Command::Roots { group } => roots(&load(group, None)?),
        Command::Group { group } => group_cmd(&load(group, None)?, cap)?,
        Command::Word { group, w, all } => word_cmd(&load(group, None)?, w, *all)?,
        Command::Bruhat { group, v, w } => bruhat_cmd(&load(group, None)?, v.as_deref(), w.as_deref(), cap)?,
        Command::Billey {
            group,
            v,
            w,
            specialize,
        } => billey_cmd(&load(group, None)?, v, w, *specialize)?,
        Command::ClassTable { group, v } => class_table_cmd(&load(group, None)?, v.as_deref(), cap)?,
        Command::GkmCheck { group, v, class } => gkm_cmd(&load(group, None)?, v.as_deref(), class.as_deref(), cap)?,
        Command::Kumar { group, v, w } => kumar_cmd(&load(group, None)?, v, w)?,
        Command::Eyd { lambda, mu, k, n } => eyd_cmd(lambda, mu, *k, *n)?,
        Command::EydVerify { lambda, mu, k, n } => eyd_verify_cmd(lambda, mu, *k, *n)?,
        Command::FixedPoints { variety } => {
            let (rs, fps) = fixed_points(variety, cap)?;
            fixed_points_out(&rs, &fps)
        }
        Command::Pinball { variety, mode } => pinball_cmd(variety, *mode, cap)?,
        Command::Peterson { group, check, i, a } => {
            peterson_cmd(&load(group, Some((Family::A, 2)))?, *check, *i, a.as_deref())?
        }
    };
    Ok(out.pick(g.format))
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn domain(msg: impl Into<String>) -> CliError {
    CliError::Domain(msg.into())
}

/// Comma-separated nonnegative integers; empty (or `e`) is the empty list.
pub fn parse_list(s: &str) -> Res<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("{:?} is not a comma-separated list of integers", s)))
        })
        .collect()
}

fn load(g: &GroupArgs, default: Option<(Family, usize)>) -> Res<RootSystem> {
    let spec = if let Some(path) = &g.cartan {
        let text = std::fs::read_to_string(path)
            .map_err(|e| domain(format!("cannot read {}: {}", path.display(), e)))?;
        let cj: CartanJson = serde_json::from_str(&text)
            .map_err(|e| usage(format!("{} is not a Cartan file: {}", path.display(), e)))?;
        cj.to_spec().map_err(usage)?
    } else {
        match (&g.family, g.rank, default) {
            (Some(f), Some(r), _) => {
                let fam = Family::from_letter(f).ok_or_else(|| usage(format!("unknown family {:?}", f)))?;
                billey_core::CartanSpec::family(fam, r)
            }
            (None, None, Some((f, r))) => billey_core::CartanSpec::family(f, r),
            _ => return Err(usage("give --type and --rank, or --cartan FILE")),
        }
    };
    Ok(RootSystem::new(spec)?)
}

fn element(rs: &RootSystem, s: &str) -> Res<WeylElement> {
    Ok(rs.element_from_letters(&parse_list(s)?)?)
}

fn word_of(rs: &RootSystem, w: &WeylElement) -> Word {
    rs.one_reduced_word(w)
}

fn roots(rs: &RootSystem) -> Out {
    let roots = rs.positive_roots();
    Out {
        text: roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"),
        json: json!({
            "cartan": rs.cartan(),
            "positive_roots": roots.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(),
        }),
        latex: Some(roots.iter().map(root_latex).collect::<Vec<_>>().join("\n")),
    }
}

fn group_cmd(rs: &RootSystem, cap: usize) -> Res<Out> {
    let g = WeylGroup::enumerate(rs, cap)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (k, w) in g.elements.iter().enumerate() {
        let one_line = rs.to_one_line(w).ok();
        write!(text, "{}\t{}", g.lengths[k], word_text(&g.words[k])).unwrap();
        if let Some(p) = &one_line {
            write!(text, "\t{:?}", p).unwrap();
        }
        text.push('\n');
        let mut row = json!({"word": g.words[k].0, "length": g.lengths[k]});
        if let Some(p) = one_line {
            row["one_line"] = json!(p);
        }
        rows.push(row);
    }
    Ok(Out {
        text,
        json: Value::Array(rows),
        latex: Some(g.words.iter().map(word_latex).collect::<Vec<_>>().join("\n")),
    })
}

fn word_cmd(rs: &RootSystem, w: &str, all: bool) -> Res<Out> {
    let letters = parse_list(w)?;
    let x = rs.element_from_letters(&letters)?;
    let reduced = rs.is_reduced(&Word(letters.clone()))?;
    let len = rs.length(&x);
    let one = word_of(rs, &x);
    let mut text = format!("length {}\nreduced {}\nreduced word {}\n", len, reduced, word_text(&one));
    let mut j = json!({"input": letters, "reduced": reduced, "length": len, "reduced_word": one.0});
    let mut latex = word_latex(&one);
    if all {
        let words = rs.all_reduced_words(&x);
        text.push_str(&format!("{} reduced words\n", words.len()));
        for word in &words {
            text.push_str(&word_text(word));
            text.push('\n');
        }
        j["reduced_words"] = json!(words.iter().map(|w| w.0.clone()).collect::<Vec<_>>());
        latex = words.iter().map(word_latex).collect::<Vec<_>>().join("\n");
    }
    Ok(Out {
        text,
        json: j,
        latex: Some(latex),
    })
}

fn bruhat_cmd(rs: &RootSystem, v: Option<&str>, w: Option<&str>, cap: usize) -> Res<Out> {
    if let (Some(v), Some(w)) = (v, w) {
        let (x, y) = (element(rs, v)?, element(rs, w)?);
        let leq = rs.bruhat_leq(&x, &y);
        return Ok(Out {
            text: leq.to_string(),
            json: json!({"v": word_of(rs, &x).0, "w": word_of(rs, &y).0, "leq": leq}),
            latex: Some(format!(
                "{} {} {}",
                word_latex(&word_of(rs, &x)),
                if leq { "\\leq" } else { "\\not\\leq" },
                word_latex(&word_of(rs, &y))
            )),
        });
    }
    let graph = BruhatGraph::new(rs, cap)?;
    let g = &graph.group;
    let mut text = String::new();
    let mut edges = Vec::new();
    for e in &graph.edges {
        let root = &rs.positive_roots()[e.root];
        writeln!(text, "{} -- {} : {}", word_text(&g.words[e.lower]), word_text(&g.words[e.upper]), root).unwrap();
        edges.push(json!({"lower": g.words[e.lower].0, "upper": g.words[e.upper].0, "root": root.coords()}));
    }
    let vertices: Vec<Value> = (0..g.len())
        .map(|k| json!({"word": g.words[k].0, "length": g.lengths[k]}))
        .collect();
    Ok(Out {
        text,
        json: json!({"vertices": vertices, "edges": edges}),
        latex: Some(bruhat_tikz(&graph, &|k| word_latex(&g.words[k]))),
    })
}

fn billey_cmd(rs: &RootSystem, v: &str, w: &str, spec: Option<Specialize>) -> Res<Out> {
    let x = element(rs, v)?;
    let letters = parse_list(w)?;
    let word = Word(letters);
    let y = rs.element_from_word(&word)?;
    // the given word is used when reduced; any word names an element
    let word = if rs.is_reduced(&word)? { word } else { word_of(rs, &y) };
    let p = billey::billey_all_with_word(rs, &word)?
        .remove(&x)
        .unwrap_or_else(|| Polynomial::zero(rs.rank()));
    Ok(match spec {
        None => Out {
            text: p.to_string(),
            json: json!(root_poly_to_json(&p)),
            latex: Some(poly_latex(rs, &p)),
        },
        Some(Specialize::Line) => {
            let t = p.specialize_line();
            Out {
                text: t.to_string(),
                json: json!(tpoly_to_json(&t)),
                latex: Some(tpoly_latex(&t)),
            }
        }
        Some(Specialize::Tvars) => {
            if !rs.is_type_a() {
                return Err(domain("--specialize tvars needs a type A group"));
            }
            let n = rs.rank() + 1;
            let t = p.specialize_tvars(n)?;
            Out {
                text: poly_text_vars(&t, "t"),
                json: json!(poly_to_json(&t, var_names("t", n))),
                latex: Some(tvars_latex(&t)),
            }
        }
    })
}

fn class_text(rs: &RootSystem, g: &WeylGroup, v: &WeylElement, class: &GKMClass) -> String {
    let mut s = format!("sigma_{}\n", word_text(&word_of(rs, v)));
    for (k, w) in g.elements.iter().enumerate() {
        writeln!(s, "  {}: {}", word_text(&g.words[k]), class.value(w)).unwrap();
    }
    s
}

fn class_latex(rs: &RootSystem, graph: &BruhatGraph, v: &WeylElement, class: &GKMClass) -> String {
    let g = &graph.group;
    format!(
        "% class sigma_{{{}}}\n{}",
        word_latex(&word_of(rs, v)),
        bruhat_tikz(graph, &|k| poly_latex(rs, &class.value(&g.elements[k])))
    )
}

fn class_table_cmd(rs: &RootSystem, v: Option<&str>, cap: usize) -> Res<Out> {
    let graph = BruhatGraph::new(rs, cap)?;
    let g = &graph.group;
    if let Some(v) = v {
        let x = element(rs, v)?;
        let class = schubert_class(rs, g, &x);
        return Ok(Out {
            text: class_text(rs, g, &x, &class),
            json: serde_json::to_value(class_to_json(rs, &class, &g.elements)).expect("serializable"),
            latex: Some(class_latex(rs, &graph, &x, &class)),
        });
    }
    let table = class_table(rs, g);
    let mut text = String::new();
    let mut latex = String::new();
    let mut rows = Vec::new();
    for (k, class) in table.iter().enumerate() {
        let v = &g.elements[k];
        text.push_str(&class_text(rs, g, v, class));
        if k > 0 {
            latex.push('\n');
        }
        latex.push_str(&class_latex(rs, &graph, v, class));
        rows.push(json!({"class": g.words[k].0, "values": class_to_json(rs, class, &g.elements)}));
    }
    Ok(Out {
        text,
        json: Value::Array(rows),
        latex: Some(latex),
    })
}

fn gkm_cmd(rs: &RootSystem, v: Option<&str>, file: Option<&std::path::Path>, cap: usize) -> Res<Out> {
    let graph = BruhatGraph::new(rs, cap)?;
    let g = &graph.group;
    let mut classes: Vec<(String, Value, GKMClass)> = Vec::new();
    if let Some(path) = file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| domain(format!("cannot read {}: {}", path.display(), e)))?;
        let entries: Vec<ClassEntryJson> = serde_json::from_str(&text)
            .map_err(|e| usage(format!("{} is not a class file: {}", path.display(), e)))?;
        let class = class_from_json(rs, &entries).map_err(domain)?;
        classes.push((path.display().to_string(), Value::String(path.display().to_string()), class));
    } else if let Some(v) = v {
        let x = element(rs, v)?;
        let w = word_of(rs, &x);
        classes.push((format!("sigma_{}", word_text(&w)), json!(w.0), schubert_class(rs, g, &x)));
    } else {
        for (k, class) in class_table(rs, g).into_iter().enumerate() {
            classes.push((format!("sigma_{}", word_text(&g.words[k])), json!(g.words[k].0), class));
        }
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut all_ok = true;
    for (name, key, class) in &classes {
        let report = gkm_check(rs, &graph, class);
        all_ok &= report.ok;
        writeln!(text, "{}: {}", name, if report.ok { "ok" } else { "FAILED" }).unwrap();
        let mut bad = Vec::new();
        for e in &report.violations {
            let root = &rs.positive_roots()[e.root];
            writeln!(text, "  {} -- {} : {}", word_text(&g.words[e.lower]), word_text(&g.words[e.upper]), root).unwrap();
            bad.push(json!({"lower": g.words[e.lower].0, "upper": g.words[e.upper].0, "root": root.coords()}));
        }
        rows.push(json!({"class": key, "ok": report.ok, "violations": bad}));
    }
    Ok(Out {
        text,
        json: json!({"ok": all_ok, "classes": rows}),
        latex: None,
    })
}

fn kumar_cmd(rs: &RootSystem, v: &str, w: &str) -> Res<Out> {
    let (x, y) = (element(rs, v)?, element(rs, w)?);
    let k = kumar_smooth(rs, &x, &y)?;
    let roots: Vec<Vec<i64>> = k.roots.iter().map(|&i| rs.positive_roots()[i].coords().to_vec()).collect();
    Ok(Out {
        text: format!("smooth: {}\nlhs: {}\nrhs: {}", k.smooth, k.lhs, k.rhs),
        json: json!({
            "smooth": k.smooth,
            "lhs": root_poly_to_json(&k.lhs),
            "rhs": root_poly_to_json(&k.rhs),
            "roots": roots,
        }),
        latex: Some(format!(
            "{} {} {}",
            poly_latex(rs, &k.lhs),
            if k.smooth { "=" } else { "\\neq" },
            poly_latex(rs, &k.rhs)
        )),
    })
}

fn partition(s: &str) -> Res<Partition> {
    Partition::new(parse_list(s)?).map_err(|e| usage(e.to_string()))
}

fn eyd_cmd(lambda: &str, mu: &str, k: Option<usize>, n: Option<usize>) -> Res<Out> {
    let (l, m) = (partition(lambda)?, partition(mu)?);
    let k = k.unwrap_or(m.num_rows());
    let n = n.unwrap_or(k + m.part(1));
    let diagrams = enumerate_eyd(&l, &m)?;
    let p = eyd_polynomial_in(&l, &m, k, n)?;
    let mut text = String::new();
    for d in &diagrams {
        text.push_str(&d.to_ascii());
        text.push('\n');
    }
    write!(text, "{} diagrams\npolynomial: {}", diagrams.len(), poly_text_vars(&p, "t")).unwrap();
    let latex = format!(
        "{}\n{}",
        diagrams.iter().map(diagram_latex).collect::<Vec<_>>().join("\n\\quad\n"),
        tvars_latex(&p)
    );
    Ok(Out {
        text,
        json: json!({
            "lambda": l.parts(),
            "mu": m.parts(),
            "k": k,
            "n": n,
            "diagrams": diagrams.iter().map(|d| json!({"marks": d.marks.iter().map(|&(r, c)| [r, c]).collect::<Vec<_>>()})).collect::<Vec<_>>(),
            "polynomial": poly_to_json(&p, var_names("t", n)),
        }),
        latex: Some(latex),
    })
}

fn eyd_verify_cmd(lambda: &str, mu: &str, k: usize, n: usize) -> Res<Out> {
    let (l, m) = (partition(lambda)?, partition(mu)?);
    let c = compare_eyd_with_billey(&l, &m, k, n)?;
    Ok(Out {
        text: format!(
            "equal: {}\nbilley: {}\neyd: {}",
            c.equal,
            poly_text_vars(&c.billey, "t"),
            poly_text_vars(&c.eyd, "t")
        ),
        json: json!({
            "equal": c.equal,
            "billey": poly_to_json(&c.billey, var_names("t", n)),
            "eyd": poly_to_json(&c.eyd, var_names("t", n)),
        }),
        latex: Some(format!(
            "{} {} {}",
            tvars_latex(&c.billey),
            if c.equal { "=" } else { "\\neq" },
            tvars_latex(&c.eyd)
        )),
    })
}

fn fixed_points(a: &VarietyArgs, cap: usize) -> Res<(RootSystem, FixedPointSet)> {
    let type_a = |n: usize| -> Res<RootSystem> {
        if n < 2 {
            return Err(usage("n must be at least 2"));
        }
        Ok(RootSystem::of_family(Family::A, n - 1)?)
    };
    match a.variety {
        Variety::Springer => {
            let blocks = parse_list(a.jordan.as_deref().ok_or_else(|| usage("springer needs --jordan"))?)?;
            let j = JordanType::new(blocks).map_err(|e| usage(e.to_string()))?;
            let n = a.n.unwrap_or(j.n());
            if n != j.n() {
                return Err(domain(format!("Jordan blocks sum to {}, not {}", j.n(), n)));
            }
            let rs = type_a(n)?;
            let fps = springer_fixed_points(&rs, &j, cap)?;
            Ok((rs, fps))
        }
        Variety::Hessenberg => {
            let hv = match &a.h {
                Some(h) => parse_list(h)?,
                None => return Err(usage("hessenberg needs --h")),
            };
            let n = a.n.unwrap_or(hv.len());
            let h = HessenbergFunction::new(hv).map_err(|e| domain(e.to_string()))?;
            let j = match &a.jordan {
                Some(s) => JordanType::new(parse_list(s)?).map_err(|e| usage(e.to_string()))?,
                None => JordanType::regular(n),
            };
            if j.n() != n {
                return Err(domain(format!("Jordan blocks sum to {}, not {}", j.n(), n)));
            }
            let rs = type_a(n)?;
            let fps = hessenberg_fixed_points(&rs, &j, &h, cap)?;
            Ok((rs, fps))
        }
        Variety::Peterson => {
            let rs = if a.group.family.is_none() && a.group.cartan.is_none() {
                match a.n {
                    Some(n) => type_a(n)?,
                    None => load(&a.group, Some((Family::A, 2)))?,
                }
            } else {
                load(&a.group, None)?
            };
            let fps = peterson_fixed_points(&rs)?;
            Ok((rs, fps))
        }
    }
}

fn member_json(rs: &RootSystem, w: &WeylElement) -> Value {
    let mut j = json!({"word": word_of(rs, w).0});
    if let Ok(p) = rs.to_one_line(w) {
        j["one_line"] = json!(p);
    }
    j
}

fn fixed_points_out(rs: &RootSystem, fps: &FixedPointSet) -> Out {
    let mut text = format!("{} fixed points ({})\n", fps.len(), fps.origin);
    for w in &fps.members {
        text.push_str(&word_text(&word_of(rs, w)));
        if let Ok(p) = rs.to_one_line(w) {
            write!(text, "\t{:?}", p).unwrap();
        }
        text.push('\n');
    }
    Out {
        text,
        json: json!({
            "variety": fps.origin.to_string(),
            "members": fps.members.iter().map(|w| member_json(rs, w)).collect::<Vec<_>>(),
        }),
        latex: Some(
            fps.members
                .iter()
                .map(|w| word_latex(&word_of(rs, w)))
                .collect::<Vec<_>>()
                .join(", "),
        ),
    }
}

fn tmatrix_text(m: &[Vec<TPolynomial>]) -> String {
    m.iter()
        .map(|row| format!("  [{}]", row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join("\n")
}

fn tmatrix_latex(m: &[Vec<TPolynomial>]) -> String {
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let rows: Vec<String> = m
        .iter()
        .map(|row| row.iter().map(tpoly_latex).collect::<Vec<_>>().join(" & "))
        .collect();
    format!(
        "\\left(\\begin{{array}}{{{}}}\n{}\n\\end{{array}}\\right)",
        "c".repeat(cols),
        rows.join(" \\\\\n")
    )
}

fn tmatrix_json(m: &[Vec<TPolynomial>]) -> Value {
    json!(m.iter().map(|r| r.iter().map(tpoly_to_json).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn pinball_cmd(a: &VarietyArgs, mode: SearchMode, cap: usize) -> Res<Out> {
    let (rs, fps) = fixed_points(a, cap)?;
    let mode = match mode {
        SearchMode::First => Mode::First,
        SearchMode::All => Mode::All,
    };
    let found = pinball_search(&rs, &fps, mode);
    if found.is_empty() {
        return Err(domain(format!(
            "no acceptable roll-down for the {} fixed points",
            fps.len()
        )));
    }
    let mut text = format!("{} assignment(s)\n", found.len());
    let mut latex = String::new();
    let mut rows = Vec::new();
    for (k, asg) in found.iter().enumerate() {
        let valid = verify_assignment(&rs, asg);
        writeln!(text, "assignment {}", k + 1).unwrap();
        for (v, r) in asg.order.iter().zip(&asg.rolldown) {
            writeln!(text, "  {} -> {}", word_text(&word_of(&rs, v)), word_text(&word_of(&rs, r))).unwrap();
        }
        writeln!(text, "matrix\n{}\ndeterminant {}\nvalid {}", tmatrix_text(&asg.matrix), asg.determinant, valid).unwrap();
        writeln!(
            latex,
            "% assignment {}: {}\n{}\n\\det = {}",
            k + 1,
            asg.rolldown
                .iter()
                .map(|r| format!("\\sigma_{{{}}}", word_latex(&word_of(&rs, r))))
                .collect::<Vec<_>>()
                .join(", "),
            tmatrix_latex(&asg.matrix),
            tpoly_latex(&asg.determinant)
        )
        .unwrap();
        rows.push(json!({
            "order": asg.order.iter().map(|w| word_of(&rs, w).0).collect::<Vec<_>>(),
            "rolldown": asg.rolldown.iter().map(|w| word_of(&rs, w).0).collect::<Vec<_>>(),
            "matrix": tmatrix_json(&asg.matrix),
            "determinant": tpoly_to_json(&asg.determinant),
            "valid": valid,
        }));
    }
    Ok(Out {
        text,
        json: json!({"variety": fps.origin.to_string(), "count": found.len(), "assignments": rows}),
        latex: Some(latex),
    })
}

fn subset_text(a: &[usize]) -> String {
    format!("{{{}}}", a.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
}

fn peterson_cmd(rs: &RootSystem, check: PetersonCheck, i: Option<usize>, a: Option<&str>) -> Res<Out> {
    let table = PetersonTable::new(rs)?;
    let chosen: Option<Vec<usize>> = a.map(parse_list).transpose()?;
    match check {
        PetersonCheck::Matrix => {
            let det = table.determinant();
            Ok(Out {
                text: format!(
                    "subsets {}\nmatrix\n{}\ndeterminant {}",
                    table.subsets.iter().map(|s| subset_text(s)).collect::<Vec<_>>().join(" "),
                    tmatrix_text(&table.values),
                    det
                ),
                json: json!({
                    "subsets": table.subsets,
                    "matrix": tmatrix_json(&table.values),
                    "determinant": tpoly_to_json(&det),
                }),
                latex: Some(format!("{}\n\\det = {}", tmatrix_latex(&table.values), tpoly_latex(&det))),
            })
        }
        PetersonCheck::Cm => {
            let i = i.ok_or_else(|| usage("--check cm needs --i"))?;
            let sets = match chosen {
                Some(s) => vec![s],
                None => table.subsets.clone(),
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            for s in &sets {
                let cm = chevalley_monk_expand(rs, &table, i, s)?;
                let mut rhs = Vec::new();
                if !num_traits::Zero::is_zero(&cm.diagonal) {
                    rhs.push(format!("{}t p_{}", cm.diagonal, subset_text(s)));
                }
                rhs.extend(cm.terms.iter().filter(|(_, c)| !num_traits::Zero::is_zero(c)).map(|(b, c)| format!("{} p_{}", c, subset_text(b))));
                if rhs.is_empty() {
                    rhs.push("0".into());
                }
                writeln!(text, "p_{{{}}} p_{} = {}", i, subset_text(s), rhs.join(" + ")).unwrap();
                rows.push(json!({
                    "i": i,
                    "A": s,
                    "diagonal": crate::json::coeff_to_json(&cm.diagonal),
                    "terms": cm.terms.iter().filter(|(_, c)| !num_traits::Zero::is_zero(c)).map(|(b, c)| json!({"B": b, "coeff": crate::json::coeff_to_json(c)})).collect::<Vec<_>>(),
                }));
            }
            let json = if rows.len() == 1 { rows.pop().expect("one row") } else { Value::Array(rows) };
            Ok(Out {
                text,
                json,
                latex: None,
            })
        }
        PetersonCheck::Giambelli => {
            let sets: Vec<Vec<usize>> = match chosen {
                Some(s) => vec![s],
                None => table.subsets.iter().filter(|s| !s.is_empty()).cloned().collect(),
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            for s in &sets {
                let c = giambelli_check(rs, &table, s)?;
                writeln!(text, "A = {}: c = {}", subset_text(s), c).unwrap();
                rows.push(json!({"A": s, "c": crate::json::coeff_to_json(&c)}));
            }
            let json = if rows.len() == 1 { rows.pop().expect("one row") } else { Value::Array(rows) };
            Ok(Out {
                text,
                json,
                latex: None,
            })
        }
    }
}
