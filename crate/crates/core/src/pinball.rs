//! Poset pinball: choosing one Schubert class per fixed point so that the
//! restricted classes form a module basis, plus the Chevalley-Monk and
//! Giambelli checks for Peterson varieties.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::billey::billey_all;
use crate::error::{Error, Result};
use crate::poly::TPolynomial;
use crate::rootsys::RootSystem;
use crate::subvariety::{subsets, FixedPointSet};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Stop at the first acceptable assignment.
    First,
    /// Every acceptable assignment the search reaches.
    All,
}

/// `r(order[k]) = rolldown[k]`, with `matrix[a][b] = sigma_{rolldown[a]}(order[b])`
/// specialized to the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RolldownAssignment {
    pub order: Vec<WeylElement>,
    pub rolldown: Vec<WeylElement>,
    pub matrix: Vec<Vec<TPolynomial>>,
    pub determinant: TPolynomial,
}

impl RolldownAssignment {
    pub fn is_invertible(&self) -> bool {
        !self.determinant.is_zero()
    }
}

/// Determinant over `Z[t]` by fraction-free Bareiss elimination.
pub fn determinant(m: &[Vec<TPolynomial>]) -> TPolynomial {
    let n = m.len();
    if n == 0 {
        return TPolynomial::one();
    }
    let mut a: Vec<Vec<TPolynomial>> = m.to_vec();
    let mut prev = TPolynomial::one();
    let mut negate = false;
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return TPolynomial::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
            a[i][k] = TPolynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// `M[a][b] = sigma_{classes[a]}(points[b])` along `alpha_i -> t`.
pub fn restriction_matrix(rs: &RootSystem, classes: &[WeylElement], points: &[WeylElement]) -> Vec<Vec<TPolynomial>> {
    let cols: Vec<BTreeMap<WeylElement, TPolynomial>> = points.iter().map(|w| line_values(rs, w)).collect();
    classes
        .iter()
        .map(|v| {
            cols.iter()
                .map(|col| col.get(v).cloned().unwrap_or_default())
                .collect()
        })
        .collect()
}

fn line_values(rs: &RootSystem, w: &WeylElement) -> BTreeMap<WeylElement, TPolynomial> {
    billey_all(rs, w)
        .into_iter()
        .map(|(u, p)| (u, p.specialize_line()))
        .collect()
}

/// Builds the assignment record for a given roll-down, computing its matrix
/// and determinant.
pub fn module_basis_matrix(rs: &RootSystem, order: &[WeylElement], rolldown: &[WeylElement]) -> RolldownAssignment {
    let matrix = restriction_matrix(rs, rolldown, order);
    let determinant = determinant(&matrix);
    RolldownAssignment {
        order: order.to_vec(),
        rolldown: rolldown.to_vec(),
        matrix,
        determinant,
    }
}

/// Drops one ball per fixed point, lowest first. Each ball lands on an
/// unoccupied `u <= v`; the lowest available length is tried first and a
/// higher one only when nothing below completes. A finished placement is
/// kept when its restriction matrix is invertible.
pub fn pinball_search(rs: &RootSystem, fps: &FixedPointSet, mode: Mode) -> Vec<RolldownAssignment> {
    let order = fps.members.clone();
    let cols: Vec<BTreeMap<WeylElement, TPolynomial>> = order.iter().map(|w| line_values(rs, w)).collect();
    // candidate landings per ball, grouped by length, words ascending
    let levels: Vec<Vec<Vec<WeylElement>>> = cols
        .iter()
        .map(|col| {
            let mut by_len: BTreeMap<usize, Vec<(crate::weyl::Word, WeylElement)>> = BTreeMap::new();
            for u in col.keys() {
                by_len
                    .entry(rs.length(u))
                    .or_default()
                    .push((rs.one_reduced_word(u), u.clone()));
            }
            by_len
                .into_values()
                .map(|mut v| {
                    v.sort();
                    v.into_iter().map(|x| x.1).collect()
                })
                .collect()
        })
        .collect();
    let mut search = Search {
        order: &order,
        cols: &cols,
        levels: &levels,
        mode,
        occupied: BTreeSet::new(),
        current: Vec::new(),
        found: Vec::new(),
    };
    search.descend(0);
    search.found
}

struct Search<'a> {
    order: &'a [WeylElement],
    cols: &'a [BTreeMap<WeylElement, TPolynomial>],
    levels: &'a [Vec<Vec<WeylElement>>],
    mode: Mode,
    occupied: BTreeSet<WeylElement>,
    current: Vec<WeylElement>,
    found: Vec<RolldownAssignment>,
}

impl Search<'_> {
    /// Returns whether some acceptable completion was found below.
    fn descend(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return self.accept_leaf();
        }
        for level in &self.levels[k] {
            let mut any = false;
            for u in level {
                if self.occupied.contains(u) {
                    continue;
                }
                self.occupied.insert(u.clone());
                self.current.push(u.clone());
                any |= self.descend(k + 1);
                self.current.pop();
                self.occupied.remove(u);
                if any && self.mode == Mode::First {
                    return true;
                }
            }
            if any {
                return true;
            }
        }
        false
    }

    fn accept_leaf(&mut self) -> bool {
        let matrix: Vec<Vec<TPolynomial>> = self
            .current
            .iter()
            .map(|v| {
                self.cols
                    .iter()
                    .map(|col| col.get(v).cloned().unwrap_or_default())
                    .collect()
            })
            .collect();
        let det = determinant(&matrix);
        if det.is_zero() {
            return false;
        }
        self.found.push(RolldownAssignment {
            order: self.order.to_vec(),
            rolldown: self.current.clone(),
            matrix,
            determinant: det,
        });
        true
    }
}

/// Re-derives every invariant of an assignment from scratch: injectivity,
/// `r(v) <= v`, the stored matrix, vanishing below the diagonal support and
/// a nonzero determinant.
pub fn verify_assignment(rs: &RootSystem, a: &RolldownAssignment) -> bool {
    let n = a.order.len();
    if a.rolldown.len() != n {
        return false;
    }
    let distinct: BTreeSet<&WeylElement> = a.rolldown.iter().collect();
    if distinct.len() != n {
        return false;
    }
    if !a.order.iter().zip(&a.rolldown).all(|(v, r)| rs.bruhat_leq(r, v)) {
        return false;
    }
    let fresh = module_basis_matrix(rs, &a.order, &a.rolldown);
    if fresh.matrix != a.matrix || fresh.determinant != a.determinant {
        return false;
    }
    for (r, row) in a.rolldown.iter().zip(&a.matrix) {
        for (w, cell) in a.order.iter().zip(row) {
            if !rs.bruhat_leq(r, w) && !cell.is_zero() {
                return false;
            }
        }
    }
    !a.determinant.is_zero()
}

fn check_subset(rs: &RootSystem, a: &[usize]) -> Result<()> {
    if a.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSubset(format!("{:?} must be strictly increasing", a)));
    }
    if let Some(&bad) = a.iter().find(|&&i| i == 0 || i > rs.rank()) {
        return Err(Error::InvalidSubset(format!(
            "index {} outside 1..={}",
            bad,
            rs.rank()
        )));
    }
    Ok(())
}

/// `v_A`: the product of `s_i` over `A` in increasing order.
pub fn peterson_v_a(rs: &RootSystem, a: &[usize]) -> Result<WeylElement> {
    check_subset(rs, a)?;
    rs.element_from_letters(a)
}

/// The Peterson classes `p_A` restricted to the fixed points `w_B`, both
/// indexed by the subsets of `1..=n` in size-then-lexicographic order.
#[derive(Debug, Clone)]
pub struct PetersonTable {
    pub subsets: Vec<Vec<usize>>,
    pub points: Vec<WeylElement>,
    /// `values[a][b] = p_{A_a}(w_{B_b})`.
    pub values: Vec<Vec<TPolynomial>>,
}

impl PetersonTable {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let subsets = subsets(rs.rank());
        let points = subsets
            .iter()
            .map(|b| rs.parabolic_longest(b))
            .collect::<Result<Vec<_>>>()?;
        let classes = subsets
            .iter()
            .map(|a| peterson_v_a(rs, a))
            .collect::<Result<Vec<_>>>()?;
        let values = restriction_matrix(rs, &classes, &points);
        Ok(PetersonTable {
            subsets,
            points,
            values,
        })
    }

    pub fn index_of(&self, a: &[usize]) -> Option<usize> {
        self.subsets.iter().position(|s| s == a)
    }

    fn row(&self, a: &[usize]) -> Result<&[TPolynomial]> {
        self.index_of(a)
            .map(|k| self.values[k].as_slice())
            .ok_or_else(|| Error::InvalidSubset(format!("{:?}", a)))
    }

    pub fn determinant(&self) -> TPolynomial {
        determinant(&self.values)
    }
}

/// Coefficients of `p_{s_i} p_A = t c_A p_A + sum_B c_B p_B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChevalleyMonk {
    pub i: usize,
    pub a: Vec<usize>,
    /// The integer `c` in the diagonal term `t c p_A`.
    pub diagonal: BigInt,
    /// `(B, c_B)` for every `B ⊇ A` with one more element, including zeros.
    pub terms: Vec<(Vec<usize>, BigInt)>,
}

pub fn chevalley_monk_expand(rs: &RootSystem, table: &PetersonTable, i: usize, a: &[usize]) -> Result<ChevalleyMonk> {
    check_subset(rs, a)?;
    check_subset(rs, &[i])?;
    let ps = table.row(&[i])?;
    let pa = table.row(a)?;
    let lhs: Vec<TPolynomial> = ps.iter().zip(pa).map(|(x, y)| x * y).collect();
    // p_X vanishes at w_B unless X ⊆ B, so the system is triangular in the
    // subset order
    let m = table.subsets.len();
    let mut coeff: Vec<TPolynomial> = vec![TPolynomial::zero(); m];
    for x in 0..m {
        let mut rest = lhs[x].clone();
        for (y, c) in coeff.iter().enumerate().take(x) {
            if !c.is_zero() {
                rest = &rest - &(c * &table.values[y][x]);
            }
        }
        let pivot = &table.values[x][x];
        if pivot.is_zero() {
            return Err(Error::Unsolvable(format!(
                "p_{:?} vanishes at its own fixed point",
                table.subsets[x]
            )));
        }
        coeff[x] = rest.div_exact(pivot).ok_or_else(|| {
            Error::Unsolvable(format!(
                "coefficient of p_{:?} is not a polynomial in t",
                table.subsets[x]
            ))
        })?;
    }
    let mut diagonal = BigInt::zero();
    let mut terms = Vec::new();
    for (x, c) in coeff.iter().enumerate() {
        let s = &table.subsets[x];
        if s.as_slice() == a {
            match c.as_monomial() {
                Some((k, 1)) if !k.is_negative() => diagonal = k,
                Some((k, _)) if k.is_zero() => {}
                _ => {
                    return Err(Error::Unsolvable(format!(
                        "diagonal coefficient {} is not a nonnegative multiple of t",
                        c
                    )))
                }
            }
        } else if s.len() == a.len() + 1 && a.iter().all(|j| s.contains(j)) {
            let k = c.coeff(0);
            if c.degree().unwrap_or(0) > 0 || k.is_negative() {
                return Err(Error::Unsolvable(format!(
                    "coefficient {} of p_{:?} is not a nonnegative integer",
                    c, s
                )));
            }
            terms.push((s.clone(), k));
        } else if !c.is_zero() {
            return Err(Error::Unsolvable(format!(
                "unexpected term {} p_{:?}",
                c, s
            )));
        }
    }
    Ok(ChevalleyMonk {
        i,
        a: a.to_vec(),
        diagonal,
        terms,
    })
}

/// Solves `prod_{i in A} p_{s_i} = c p_{v_A}` pointwise for a constant
/// positive integer `c`.
pub fn giambelli_check(rs: &RootSystem, table: &PetersonTable, a: &[usize]) -> Result<BigInt> {
    check_subset(rs, a)?;
    if a.is_empty() {
        return Err(Error::InvalidSubset("A must be nonempty".into()));
    }
    let mut prod: Vec<TPolynomial> = vec![TPolynomial::one(); table.points.len()];
    for &i in a {
        let row = table.row(&[i])?;
        prod = prod.iter().zip(row).map(|(x, y)| x * y).collect();
    }
    let pa = table.row(a)?;
    let mut c: Option<BigInt> = None;
    for (lhs, rhs) in prod.iter().zip(pa) {
        if rhs.is_zero() {
            if !lhs.is_zero() {
                return Err(Error::Unsolvable(format!(
                    "product {} is nonzero where p_A vanishes",
                    lhs
                )));
            }
            continue;
        }
        let q = lhs.div_exact(rhs).ok_or_else(|| {
            Error::Unsolvable(format!("{} is not a multiple of {}", lhs, rhs))
        })?;
        let k = match q.as_monomial() {
            Some((k, 0)) => k,
            _ => return Err(Error::Unsolvable(format!("quotient {} is not constant", q))),
        };
        match &c {
            None => c = Some(k),
            Some(prev) if *prev == k => {}
            Some(prev) => {
                return Err(Error::Unsolvable(format!(
                    "quotient changes from {} to {}",
                    prev, k
                )))
            }
        }
    }
    match c {
        Some(k) if k.is_positive() => Ok(k),
        Some(k) => Err(Error::Unsolvable(format!("constant {} is not positive", k))),
        None => Err(Error::Unsolvable("p_A vanishes at every fixed point".into())),
    }
}
