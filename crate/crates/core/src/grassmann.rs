//! Partitions, excited Young diagrams and their comparison with Billey's
//! formula on Grassmannians.
//!
//! Boxes are `(row, col)`, 1-based, English notation.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::billey::billey;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rootsys::{Family, RootSystem};
use crate::weyl::WeylElement;

pub type BoxPos = (usize, usize);

/// Weakly decreasing parts; trailing zeros are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {:?} are not weakly decreasing",
                parts
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `parts[r-1]`, zero past the last row.
    pub fn part(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// Height of column `c`.
    pub fn column_height(&self, c: usize) -> usize {
        self.parts.iter().filter(|&&p| p >= c).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition {
            parts: (1..=width).map(|c| self.column_height(c)).collect(),
        }
    }

    pub fn contains_box(&self, (r, c): BoxPos) -> bool {
        r >= 1 && c >= 1 && c <= self.part(r)
    }

    /// `self ⊆ other` as diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.num_rows() <= rows && self.part(1) <= cols
    }

    pub fn boxes(&self) -> impl Iterator<Item = BoxPos> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
    }

    /// All partitions inside the `rows x cols` rectangle, by size and then
    /// lexicographically.
    pub fn all_in_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str(")")
    }
}

/// A set of marked boxes inside the shape `mu`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedDiagram {
    pub shape: Partition,
    pub marks: BTreeSet<BoxPos>,
}

impl MarkedDiagram {
    pub fn is_marked(&self, b: BoxPos) -> bool {
        self.marks.contains(&b)
    }

    /// Sum of `row + col` over the marks; every excitation raises it by 2.
    pub fn weight_sum(&self) -> usize {
        self.marks.iter().map(|(r, c)| r + c).sum()
    }

    /// Rows of `*` (marked) and `.` (empty) boxes.
    pub fn to_ascii(&self) -> String {
        let mut s = String::new();
        for r in 1..=self.shape.num_rows() {
            for c in 1..=self.shape.part(r) {
                s.push(if self.is_marked((r, c)) { '*' } else { '.' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

pub fn initial_marking(lambda: &Partition, mu: &Partition) -> Result<MarkedDiagram> {
    if !lambda.is_contained_in(mu) {
        return Err(Error::InvalidPartition(format!("{} is not contained in {}", lambda, mu)));
    }
    Ok(MarkedDiagram {
        shape: mu.clone(),
        marks: lambda.boxes().collect(),
    })
}

/// One successor per excitable mark: a mark whose east, south and
/// southeast neighbours are empty boxes of the shape moves southeast.
pub fn excite_moves(d: &MarkedDiagram) -> Vec<MarkedDiagram> {
    let mut out = Vec::new();
    for &(r, c) in &d.marks {
        let nbrs = [(r, c + 1), (r + 1, c), (r + 1, c + 1)];
        if nbrs
            .iter()
            .all(|&b| d.shape.contains_box(b) && !d.is_marked(b))
        {
            let mut next = d.clone();
            next.marks.remove(&(r, c));
            next.marks.insert((r + 1, c + 1));
            out.push(next);
        }
    }
    out
}

/// All excited Young diagrams of `lambda` in `mu`, sorted by mark set.
pub fn enumerate_eyd(lambda: &Partition, mu: &Partition) -> Result<Vec<MarkedDiagram>> {
    let start = initial_marking(lambda, mu)?;
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        for e in excite_moves(&d) {
            debug_assert!(e.weight_sum() > d.weight_sum());
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Torus weight `(i, j)` of a box of `mu`, taking the ambient Grassmannian
/// to have `k` rows.
///
/// The box in row `r`, column `c` corresponds to the inversion
/// `t_i - t_j` of the Grassmannian permutation of `mu` with
/// `i = c + (k - mu'_c)` and `j = (k + 1 - r) + mu_r`.
pub fn box_weight_in(mu: &Partition, b: BoxPos, k: usize) -> Result<(usize, usize)> {
    let (r, c) = b;
    if !mu.contains_box(b) {
        return Err(Error::BoxOutsideShape { row: r, col: c });
    }
    if k < mu.num_rows() {
        return Err(Error::InvalidPartition(format!(
            "{} has more than {} rows",
            mu, k
        )));
    }
    Ok((c + (k - mu.column_height(c)), (k + 1 - r) + mu.part(r)))
}

/// [`box_weight_in`] with `k` the number of rows of `mu`.
pub fn box_weight(mu: &Partition, b: BoxPos) -> Result<(usize, usize)> {
    box_weight_in(mu, b, mu.num_rows())
}

/// Sum over excited diagrams of the product of `t_i - t_j` over marked
/// boxes, as a polynomial in `t_1..t_n` for the ambient `G(k, n)`.
pub fn eyd_polynomial_in(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<Polynomial> {
    if !mu.fits_in(k, n.saturating_sub(k)) {
        return Err(Error::InvalidPartition(format!(
            "{} does not fit in a {} x {} rectangle",
            mu,
            k,
            n.saturating_sub(k)
        )));
    }
    let mut total = Polynomial::zero(n);
    for d in enumerate_eyd(lambda, mu)? {
        let mut term = Polynomial::one(n);
        for &b in &d.marks {
            let (i, j) = box_weight_in(mu, b, k)?;
            term = &term * &(&Polynomial::var(n, i) - &Polynomial::var(n, j));
        }
        total = &total + &term;
    }
    Ok(total)
}

/// [`eyd_polynomial_in`] in the smallest Grassmannian holding `mu`.
pub fn eyd_polynomial(lambda: &Partition, mu: &Partition) -> Result<Polynomial> {
    let k = mu.num_rows();
    eyd_polynomial_in(lambda, mu, k, k + mu.part(1))
}

/// One-line notation of the Grassmannian permutation of `lambda` in
/// `S_n`: `w(i) = i + lambda_{k+1-i}` for `i <= k`, the other values
/// increasing.
pub fn grassmannian_one_line(lambda: &Partition, k: usize, n: usize) -> Result<Vec<usize>> {
    if k > n || !lambda.fits_in(k, n - k) {
        return Err(Error::InvalidPartition(format!(
            "{} does not fit in a {} x {} rectangle",
            lambda,
            k,
            n.saturating_sub(k)
        )));
    }
    let mut perm: Vec<usize> = (1..=k).map(|i| i + lambda.part(k + 1 - i)).collect();
    let head: BTreeSet<usize> = perm.iter().copied().collect();
    perm.extend((1..=n).filter(|x| !head.contains(x)));
    let inversions = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| perm[a] > perm[b])
        .count();
    let descents: Vec<usize> = (1..n).filter(|&i| perm[i - 1] > perm[i]).collect();
    if inversions != lambda.size() || !(descents.is_empty() || descents == [k]) {
        return Err(Error::InvalidPartition(format!(
            "{} has no Grassmannian permutation with descent at {}",
            lambda, k
        )));
    }
    Ok(perm)
}

/// The Grassmannian permutation as an element of `rs`, which must be of
/// type `A_{n-1}`.
pub fn grassmannian_permutation(rs: &RootSystem, lambda: &Partition, k: usize) -> Result<WeylElement> {
    if !rs.is_type_a() {
        return Err(Error::NotTypeA);
    }
    rs.from_one_line(&grassmannian_one_line(lambda, k, rs.rank() + 1)?)
}

/// Both sides of the excited-diagram formula in `G(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EydComparison {
    pub billey: Polynomial,
    pub eyd: Polynomial,
    pub equal: bool,
}

pub fn compare_eyd_with_billey(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<EydComparison> {
    if n < 2 {
        return Err(Error::InvalidPartition(format!("n = {} is too small", n)));
    }
    if !lambda.is_contained_in(mu) {
        return Err(Error::InvalidPartition(format!("{} is not contained in {}", lambda, mu)));
    }
    let rs = RootSystem::of_family(Family::A, n - 1)?;
    let v = grassmannian_permutation(&rs, lambda, k)?;
    let w = grassmannian_permutation(&rs, mu, k)?;
    let b = billey(&rs, &v, &w).specialize_tvars(n)?;
    let e = eyd_polynomial_in(lambda, mu, k, n)?;
    Ok(EydComparison {
        equal: b == e,
        billey: b,
        eyd: e,
    })
}

pub fn verify_eyd_equals_billey(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<bool> {
    Ok(compare_eyd_with_billey(lambda, mu, k, n)?.equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn marks(m: &[BoxPos]) -> BTreeSet<BoxPos> {
        m.iter().copied().collect()
    }

    fn t(n: usize, i: usize, j: usize) -> Polynomial {
        &Polynomial::var(n, i) - &Polynomial::var(n, j)
    }

    #[test]
    fn partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 0]).parts(), &[2, 1]);
        assert_eq!(p(&[4, 3]).conjugate(), p(&[2, 2, 2, 1]));
        assert!(p(&[2]).is_contained_in(&p(&[4, 3])));
        assert!(!p(&[1, 1, 1]).is_contained_in(&p(&[4, 3])));
        assert_eq!(Partition::all_in_rectangle(2, 2).len(), 6);
        assert_eq!(Partition::all_in_rectangle(3, 3).len(), 20);
        assert_eq!(p(&[2, 1]).to_string(), "(2,1)");
    }

    #[test]
    fn initial_markings() {
        assert_eq!(initial_marking(&p(&[2]), &p(&[4, 3])).unwrap().marks, marks(&[(1, 1), (1, 2)]));
        assert!(initial_marking(&p(&[]), &p(&[4, 3])).unwrap().marks.is_empty());
        assert_eq!(initial_marking(&p(&[2, 1]), &p(&[2, 1])).unwrap().marks.len(), 3);
        assert!(initial_marking(&p(&[3]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn excitation() {
        let d = initial_marking(&p(&[2]), &p(&[4, 3])).unwrap();
        let m = excite_moves(&d);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].marks, marks(&[(1, 1), (2, 3)]));
        let m2 = excite_moves(&m[0]);
        assert_eq!(m2.len(), 1);
        assert_eq!(m2[0].marks, marks(&[(2, 2), (2, 3)]));
        assert!(excite_moves(&m2[0]).is_empty());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_eyd(&p(&[2]), &p(&[4, 3])).unwrap().len(), 3);
        assert_eq!(enumerate_eyd(&p(&[2, 1]), &p(&[2, 1])).unwrap().len(), 1);
        let ds = enumerate_eyd(&p(&[1]), &p(&[2, 2])).unwrap();
        let got: Vec<_> = ds.iter().map(|d| d.marks.clone()).collect();
        assert_eq!(got, vec![marks(&[(1, 1)]), marks(&[(2, 2)])]);
    }

    #[test]
    fn box_weights() {
        let mu = p(&[4, 3]);
        assert_eq!(box_weight(&mu, (1, 1)).unwrap(), (1, 6));
        assert_eq!(box_weight(&mu, (2, 3)).unwrap(), (3, 4));
        assert_eq!(box_weight(&mu, (1, 2)).unwrap(), (2, 6));
        assert_eq!(box_weight(&mu, (2, 4)), Err(Error::BoxOutsideShape { row: 2, col: 4 }));
        // short column 4 sits one step to the right in the ambient G(2, n)
        assert_eq!(box_weight(&mu, (1, 4)).unwrap(), (5, 6));
        assert_eq!(box_weight_in(&p(&[1]), (1, 1), 2).unwrap(), (2, 3));
    }

    #[test]
    fn eyd_polynomials() {
        let got = eyd_polynomial(&p(&[2]), &p(&[4, 3])).unwrap();
        let n = 6;
        let want = &(&(&t(n, 1, 6) * &t(n, 2, 6)) + &(&t(n, 1, 6) * &t(n, 3, 4))) + &(&t(n, 2, 4) * &t(n, 3, 4));
        assert_eq!(got, want);
        assert_eq!(eyd_polynomial(&p(&[]), &p(&[2, 1])).unwrap(), Polynomial::one(4));
        assert_eq!(eyd_polynomial(&p(&[1]), &p(&[1])).unwrap(), t(2, 1, 2));
    }

    #[test]
    fn grassmannian_permutations() {
        assert_eq!(grassmannian_one_line(&p(&[]), 2, 4).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(grassmannian_one_line(&p(&[1]), 1, 2).unwrap(), vec![2, 1]);
        assert_eq!(grassmannian_one_line(&p(&[2, 1]), 2, 4).unwrap(), vec![2, 4, 1, 3]);
        assert!(grassmannian_one_line(&p(&[3]), 2, 4).is_err());
        let a3 = RootSystem::of_family(Family::A, 3).unwrap();
        let w = grassmannian_permutation(&a3, &p(&[2, 1]), 2).unwrap();
        assert_eq!(a3.length(&w), 3);
    }

    #[test]
    fn small_equivalences() {
        assert!(verify_eyd_equals_billey(&p(&[]), &p(&[2, 2]), 2, 4).unwrap());
        assert!(verify_eyd_equals_billey(&p(&[1]), &p(&[2, 2]), 2, 4).unwrap());
        assert!(verify_eyd_equals_billey(&p(&[2, 1]), &p(&[2, 1]), 2, 4).unwrap());
        assert!(verify_eyd_equals_billey(&p(&[2]), &p(&[4, 3]), 2, 6).unwrap());
    }

    #[test]
    fn all_of_g24() {
        let shapes = Partition::all_in_rectangle(2, 2);
        for mu in &shapes {
            for lambda in shapes.iter().filter(|l| l.is_contained_in(mu)) {
                assert!(verify_eyd_equals_billey(lambda, mu, 2, 4).unwrap(), "{} in {}", lambda, mu);
            }
        }
    }

    /// Closure by depth-first search with moves taken in a permuted order.
    fn closure_shuffled(lambda: &Partition, mu: &Partition, seed: u64) -> usize {
        let mut seen = BTreeSet::new();
        let start = initial_marking(lambda, mu).unwrap();
        let mut stack = vec![start.clone()];
        seen.insert(start);
        let mut state = seed | 1;
        while let Some(d) = stack.pop() {
            let mut moves = excite_moves(&d);
            for i in (1..moves.len()).rev() {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                moves.swap(i, (state % (i as u64 + 1)) as usize);
            }
            for e in moves {
                if seen.insert(e.clone()) {
                    stack.push(e);
                }
            }
        }
        seen.len()
    }

    proptest! {
        #[test]
        fn closure_is_order_independent(seed in any::<u64>()) {
            let shapes = Partition::all_in_rectangle(3, 3);
            for mu in &shapes {
                for lambda in shapes.iter().filter(|l| l.is_contained_in(mu)) {
                    let n = enumerate_eyd(lambda, mu).unwrap().len();
                    prop_assert_eq!(closure_shuffled(lambda, mu, seed), n);
                }
            }
        }
    }
}
