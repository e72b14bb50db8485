//! JSON shapes for polynomials, classes and group specifications.
//!
//! A polynomial is `{"vars": ["a1", "a2"], "terms": [{"coeff": 1, "exp": [1, 0]}]}`.
//! Coefficients that do not fit in an `i64` are written as decimal strings.
//! A class is an array of `{"element": [word], "value": polynomial}`.

use std::str::FromStr;

use billey_core::billey::GKMClass;
use billey_core::{CartanSpec, Family, Polynomial, RootSystem, TPolynomial};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: Value,
    pub exp: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassEntryJson {
    pub element: Vec<usize>,
    pub value: PolyJson,
}

/// `{"family": "A", "rank": 2}` or `{"matrix": [[2, -1], [-1, 2]]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CartanJson {
    Family { family: String, rank: usize },
    Matrix { matrix: Vec<Vec<i64>> },
}

impl CartanJson {
    pub fn to_spec(&self) -> Result<CartanSpec, String> {
        match self {
            CartanJson::Family { family, rank } => {
                let f = Family::from_letter(family).ok_or_else(|| format!("unknown family {:?}", family))?;
                Ok(CartanSpec::family(f, *rank))
            }
            CartanJson::Matrix { matrix } => Ok(CartanSpec::Matrix(matrix.clone())),
        }
    }
}

pub fn coeff_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(c.to_string()),
    }
}

fn coeff_from_json(v: &Value) -> Result<BigInt, String> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("coefficient {} is not an integer", n)),
        Value::String(s) => BigInt::from_str(s).map_err(|_| format!("coefficient {:?} is not an integer", s)),
        other => Err(format!("coefficient {} is not an integer", other)),
    }
}

pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{}{}", prefix, i)).collect()
}

/// Terms in display order, so output is deterministic.
pub fn poly_to_json(p: &Polynomial, vars: Vec<String>) -> PolyJson {
    PolyJson {
        vars,
        terms: p
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| TermJson {
                coeff: coeff_to_json(c),
                exp: e.clone(),
            })
            .collect(),
    }
}

pub fn root_poly_to_json(p: &Polynomial) -> PolyJson {
    poly_to_json(p, var_names("a", p.nvars()))
}

pub fn poly_from_json(j: &PolyJson) -> Result<Polynomial, String> {
    let terms = j
        .terms
        .iter()
        .map(|t| Ok((coeff_from_json(&t.coeff)?, t.exp.clone())))
        .collect::<Result<Vec<_>, String>>()?;
    Polynomial::from_terms(j.vars.len(), terms).map_err(|e| e.to_string())
}

pub fn tpoly_to_json(p: &TPolynomial) -> PolyJson {
    PolyJson {
        vars: vec!["t".into()],
        terms: p
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(d, c)| TermJson {
                coeff: coeff_to_json(c),
                exp: vec![d as u32],
            })
            .collect(),
    }
}

pub fn tpoly_from_json(j: &PolyJson) -> Result<TPolynomial, String> {
    if j.vars.len() != 1 {
        return Err(format!("expected one variable, found {}", j.vars.len()));
    }
    let p = poly_from_json(j)?;
    let mut coeffs = Vec::new();
    for (e, c) in p.terms() {
        let d = e[0] as usize;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, BigInt::from(0));
        }
        coeffs[d] = c.clone();
    }
    Ok(TPolynomial::from_coeffs(coeffs))
}

/// Entries in the order of `elements`, each keyed by its smallest reduced
/// word.
pub fn class_to_json(rs: &RootSystem, class: &GKMClass, elements: &[billey_core::WeylElement]) -> Vec<ClassEntryJson> {
    elements
        .iter()
        .map(|w| ClassEntryJson {
            element: rs.one_reduced_word(w).0,
            value: root_poly_to_json(&class.value(w)),
        })
        .collect()
}

pub fn class_from_json(rs: &RootSystem, entries: &[ClassEntryJson]) -> Result<GKMClass, String> {
    let mut class = GKMClass::new(rs.rank());
    for e in entries {
        let w = rs.element_from_letters(&e.element).map_err(|err| err.to_string())?;
        let p = poly_from_json(&e.value)?;
        if p.nvars() != rs.rank() {
            return Err(format!(
                "value at {:?} has {} variables, expected {}",
                e.element,
                p.nvars(),
                rs.rank()
            ));
        }
        class.set(w, p);
    }
    Ok(class)
}
