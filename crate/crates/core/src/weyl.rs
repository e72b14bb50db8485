//! Weyl group elements as integer matrices on the root lattice.
//!
//! An element stores its action (column `j` is the image of `alpha_j`) and
//! the inverse action, so left and right descents are both a column sign
//! test. Equality, ordering and hashing only look at the action.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootVector};

/// Default cap on group enumeration.
pub const DEFAULT_GROUP_CAP: usize = 50_000;

/// A word in the simple reflections, letters 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<&[usize]> for Word {
    fn from(s: &[usize]) -> Self {
        Word(s.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    action: Vec<i64>,
    inverse: Vec<i64>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.action.cmp(&other.action)
    }
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[k * n + c];
            }
        }
    }
    out
}

fn column_is_negative(n: usize, m: &[i64], j: usize) -> bool {
    for r in 0..n {
        let x = m[r * n + j];
        if x != 0 {
            return x < 0;
        }
    }
    false
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut m = vec![0; rank * rank];
        for i in 0..rank {
            m[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            action: m.clone(),
            inverse: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Row-major action matrix; column `j` is `w(alpha_{j+1})`.
    pub fn matrix(&self) -> &[i64] {
        &self.action
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            rank: self.rank,
            action: self.inverse.clone(),
            inverse: self.action.clone(),
        }
    }

    /// The product `self * other` (apply `other` first).
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        WeylElement {
            rank: n,
            action: mat_mul(n, &self.action, &other.action),
            inverse: mat_mul(n, &other.inverse, &self.inverse),
        }
    }

    pub fn apply(&self, v: &RootVector) -> RootVector {
        apply_matrix(self.rank, &self.action, v)
    }

    pub fn apply_inverse(&self, v: &RootVector) -> RootVector {
        apply_matrix(self.rank, &self.inverse, v)
    }

    /// `l(w s_i) < l(w)`, i.e. `w(alpha_i) < 0`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        column_is_negative(self.rank, &self.action, i - 1)
    }

    /// `l(s_i w) < l(w)`, i.e. `w^{-1}(alpha_i) < 0`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        column_is_negative(self.rank, &self.inverse, i - 1)
    }

    pub fn first_left_descent(&self) -> Option<usize> {
        (1..=self.rank).find(|&i| self.has_left_descent(i))
    }
}

fn apply_matrix(n: usize, m: &[i64], v: &RootVector) -> RootVector {
    let mut out = vec![0; n];
    for (r, o) in out.iter_mut().enumerate() {
        *o = (0..n).map(|c| m[r * n + c] * v.0[c]).sum();
    }
    RootVector(out)
}

impl RootSystem {
    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    /// Matrix of `s_i`: column `j` is `alpha_j - a_ij alpha_i`.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(Error::LetterOutOfRange { letter: i, rank: n });
        }
        let mut m = vec![0; n * n];
        for j in 0..n {
            m[j * n + j] = 1;
            m[(i - 1) * n + j] -= self.cartan()[i - 1][j];
        }
        Ok(WeylElement {
            rank: n,
            action: m.clone(),
            inverse: m,
        })
    }

    fn simple_unchecked(&self, i: usize) -> WeylElement {
        self.simple_reflection(i).expect("letter in range")
    }

    pub fn element_from_word(&self, word: &Word) -> Result<WeylElement> {
        let mut w = self.identity();
        for &i in word.letters() {
            w = w.mul(&self.simple_reflection(i)?);
        }
        Ok(w)
    }

    pub fn element_from_letters(&self, letters: &[usize]) -> Result<WeylElement> {
        self.element_from_word(&Word::from(letters))
    }

    /// `s_i w`.
    pub fn left_mul_simple(&self, i: usize, w: &WeylElement) -> WeylElement {
        self.simple_unchecked(i).mul(w)
    }

    /// `w s_i`.
    pub fn right_mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        w.mul(&self.simple_unchecked(i))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots()
            .iter()
            .filter(|b| w.apply(b).is_negative())
            .count()
    }

    /// Reduced word by stripping the smallest left descent each step.
    pub fn one_reduced_word(&self, w: &WeylElement) -> Word {
        let mut letters = Vec::new();
        let mut cur = w.clone();
        while let Some(i) = cur.first_left_descent() {
            letters.push(i);
            cur = self.left_mul_simple(i, &cur);
        }
        Word(letters)
    }

    /// Every reduced word of `w`, by recursion over left descents.
    pub fn all_reduced_words(&self, w: &WeylElement) -> BTreeSet<Word> {
        let mut memo = BTreeMap::new();
        self.reduced_words_memo(w, &mut memo)
    }

    fn reduced_words_memo(
        &self,
        w: &WeylElement,
        memo: &mut BTreeMap<WeylElement, BTreeSet<Word>>,
    ) -> BTreeSet<Word> {
        if let Some(s) = memo.get(w) {
            return s.clone();
        }
        let mut out = BTreeSet::new();
        let mut any = false;
        for i in 1..=self.rank() {
            if w.has_left_descent(i) {
                any = true;
                let rest = self.left_mul_simple(i, w);
                for tail in self.reduced_words_memo(&rest, memo) {
                    let mut letters = Vec::with_capacity(tail.len() + 1);
                    letters.push(i);
                    letters.extend_from_slice(tail.letters());
                    out.insert(Word(letters));
                }
            }
        }
        if !any {
            out.insert(Word::empty());
        }
        memo.insert(w.clone(), out.clone());
        out
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        let w = self.element_from_word(word)?;
        Ok(self.length(&w) == word.len())
    }

    /// `N(w) = { alpha > 0 : w^{-1}(alpha) < 0 }` in canonical root order.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<RootVector> {
        self.positive_roots()
            .iter()
            .filter(|a| w.apply_inverse(a).is_negative())
            .cloned()
            .collect()
    }

    /// Bruhat order by the lifting recursion: peel a left descent `s` of
    /// `w`; if `s` is also a left descent of `v` peel it from both.
    pub fn bruhat_leq(&self, v: &WeylElement, w: &WeylElement) -> bool {
        let mut v = v.clone();
        let mut w = w.clone();
        loop {
            if v.is_identity() {
                return true;
            }
            let Some(s) = w.first_left_descent() else {
                return false;
            };
            if v.has_left_descent(s) {
                v = self.left_mul_simple(s, &v);
            }
            w = self.left_mul_simple(s, &w);
        }
    }

    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        'grow: loop {
            for i in 1..=self.rank() {
                if !w.has_right_descent(i) {
                    w = self.right_mul_simple(&w, i);
                    continue 'grow;
                }
            }
            return w;
        }
    }

    /// Longest element of the parabolic subgroup generated by `indices`.
    pub fn parabolic_longest(&self, indices: &[usize]) -> Result<WeylElement> {
        for &i in indices {
            if i == 0 || i > self.rank() {
                return Err(Error::LetterOutOfRange {
                    letter: i,
                    rank: self.rank(),
                });
            }
        }
        let mut w = self.identity();
        'grow: loop {
            for &i in indices {
                if !w.has_right_descent(i) {
                    w = self.right_mul_simple(&w, i);
                    continue 'grow;
                }
            }
            return Ok(w);
        }
    }

    /// The reflection `s_alpha` for a root `alpha`, conjugated from the simple
    /// reflection recorded when `alpha` was enumerated.
    pub fn reflection_of_root(&self, alpha: &RootVector) -> Result<WeylElement> {
        let pos = if alpha.is_negative() {
            alpha.negated()
        } else {
            alpha.clone()
        };
        let k = self
            .positive_index(&pos)
            .ok_or_else(|| Error::NotARoot(alpha.0.clone()))?;
        Ok(self.reflection_by_index(k))
    }

    pub fn reflection_by_index(&self, k: usize) -> WeylElement {
        let (word, s) = self.root_witness(k);
        let x = self
            .element_from_letters(word)
            .expect("witness letters are in range");
        x.mul(&self.simple_unchecked(s)).mul(&x.inverse())
    }

    pub fn enumerate_group(&self, cap: usize) -> Result<Vec<WeylElement>> {
        Ok(WeylGroup::enumerate(self, cap)?.elements)
    }

    pub fn bruhat_graph(&self, cap: usize) -> Result<BruhatGraph> {
        BruhatGraph::new(self, cap)
    }

    /// One-line notation of a type `A_{n-1}` element, `P_w e_j = e_{w(j)}`.
    pub fn to_one_line(&self, w: &WeylElement) -> Result<Vec<usize>> {
        if !self.is_type_a() {
            return Err(Error::NotTypeA);
        }
        let mut perm: Vec<usize> = (1..=self.rank() + 1).collect();
        for &i in self.one_reduced_word(w).letters() {
            perm.swap(i - 1, i);
        }
        Ok(perm)
    }

    pub fn from_one_line(&self, perm: &[usize]) -> Result<WeylElement> {
        if !self.is_type_a() {
            return Err(Error::NotTypeA);
        }
        let n = self.rank();
        if perm.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &x in perm {
            if x == 0 || x > n + 1 || seen[x - 1] {
                return Err(Error::InvalidSubset(alloc::format!(
                    "{:?} is not a permutation of 1..={}",
                    perm,
                    n + 1
                )));
            }
            seen[x - 1] = true;
        }
        let mut inv = vec![0; n + 1];
        for (j, &x) in perm.iter().enumerate() {
            inv[x - 1] = j + 1;
        }
        Ok(WeylElement {
            rank: n,
            action: perm_matrix(n, perm),
            inverse: perm_matrix(n, &inv),
        })
    }
}

// Column i is e_{p(i)} - e_{p(i+1)} in the simple-root basis.
fn perm_matrix(n: usize, p: &[usize]) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        let (a, b) = (p[i], p[i + 1]);
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        for r in lo..hi {
            m[(r - 1) * n + i] = sign;
        }
    }
    m
}

/// The enumerated group, sorted by length and then by smallest reduced word.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    pub words: Vec<Word>,
    pub lengths: Vec<usize>,
    index: BTreeMap<WeylElement, usize>,
}

impl WeylGroup {
    pub fn enumerate(rs: &RootSystem, cap: usize) -> Result<Self> {
        let id = rs.identity();
        let mut seen = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        let gens: Vec<WeylElement> = (1..=rs.rank()).map(|i| rs.simple_unchecked(i)).collect();
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let x = w.mul(g);
                if !seen.contains(&x) {
                    if seen.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    seen.insert(x.clone());
                    queue.push_back(x);
                }
            }
        }
        let mut rows: Vec<(usize, Word, WeylElement)> = seen
            .into_iter()
            .map(|w| {
                let word = rs.one_reduced_word(&w);
                (word.len(), word, w)
            })
            .collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        let mut elements = Vec::with_capacity(rows.len());
        let mut words = Vec::with_capacity(rows.len());
        let mut lengths = Vec::with_capacity(rows.len());
        let mut index = BTreeMap::new();
        for (k, (len, word, w)) in rows.into_iter().enumerate() {
            index.insert(w.clone(), k);
            elements.push(w);
            words.push(word);
            lengths.push(len);
        }
        Ok(WeylGroup {
            elements,
            words,
            lengths,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BruhatEdge {
    /// Index of the shorter endpoint.
    pub lower: usize,
    pub upper: usize,
    /// Index of the label in `positive_roots()`.
    pub root: usize,
}

/// Vertices are the group elements; an edge `{w, s_alpha w}` for each
/// positive root `alpha`, labelled by `alpha`.
#[derive(Debug, Clone)]
pub struct BruhatGraph {
    pub group: WeylGroup,
    pub edges: Vec<BruhatEdge>,
}

impl BruhatGraph {
    pub fn new(rs: &RootSystem, cap: usize) -> Result<Self> {
        let group = WeylGroup::enumerate(rs, cap)?;
        Ok(Self::from_group(rs, group))
    }

    pub fn from_group(rs: &RootSystem, group: WeylGroup) -> Self {
        let reflections: Vec<WeylElement> = (0..rs.num_positive_roots())
            .map(|k| rs.reflection_by_index(k))
            .collect();
        let mut edges = Vec::new();
        for (a, w) in group.elements.iter().enumerate() {
            for (k, s) in reflections.iter().enumerate() {
                let b = group
                    .index_of(&s.mul(w))
                    .expect("group is closed under reflections");
                // each edge is met once from either end
                if group.lengths[a] < group.lengths[b] {
                    edges.push(BruhatEdge {
                        lower: a,
                        upper: b,
                        root: k,
                    });
                }
            }
        }
        edges.sort();
        BruhatGraph { group, edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.group.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn a(n: usize) -> RootSystem {
        RootSystem::of_family(Family::A, n).unwrap()
    }

    fn w(letters: &[usize]) -> Word {
        Word(letters.to_vec())
    }

    #[test]
    fn words_to_elements() {
        let rs = a(2);
        assert!(rs.element_from_word(&w(&[])).unwrap().is_identity());
        assert_eq!(
            rs.element_from_word(&w(&[2, 1, 2])).unwrap(),
            rs.element_from_word(&w(&[1, 2, 1])).unwrap()
        );
        assert!(rs.element_from_word(&w(&[1, 1])).unwrap().is_identity());
        assert_eq!(
            rs.element_from_word(&w(&[3])),
            Err(Error::LetterOutOfRange { letter: 3, rank: 2 })
        );
    }

    #[test]
    fn lengths() {
        assert_eq!(a(2).length(&a(2).identity()), 0);
        assert_eq!(a(2).length(&a(2).longest_element()), 3);
        assert_eq!(a(3).length(&a(3).longest_element()), 6);
    }

    #[test]
    fn reduced_words() {
        let rs = a(2);
        let w0 = rs.longest_element();
        assert_eq!(rs.one_reduced_word(&w0), w(&[1, 2, 1]));
        assert_eq!(rs.one_reduced_word(&rs.identity()), w(&[]));
        let s2 = rs.simple_reflection(2).unwrap();
        assert_eq!(rs.one_reduced_word(&s2), w(&[2]));
        let all: Vec<Word> = rs.all_reduced_words(&w0).into_iter().collect();
        assert_eq!(all, vec![w(&[1, 2, 1]), w(&[2, 1, 2])]);
        let s1 = rs.simple_reflection(1).unwrap();
        assert_eq!(rs.all_reduced_words(&s1).len(), 1);
        let rs3 = a(3);
        assert_eq!(rs3.all_reduced_words(&rs3.longest_element()).len(), 16);
    }

    #[test]
    fn inversion_sets() {
        let rs = a(2);
        assert!(rs.inversion_set(&rs.identity()).is_empty());
        assert_eq!(
            rs.inversion_set(&rs.longest_element()),
            rs.positive_roots().to_vec()
        );
        let s2s1 = rs.element_from_word(&w(&[2, 1])).unwrap();
        assert_eq!(
            rs.inversion_set(&s2s1),
            vec![RootVector(vec![0, 1]), RootVector(vec![1, 1])]
        );
    }

    #[test]
    fn bruhat_examples() {
        let rs = a(2);
        let e = rs.identity();
        for x in rs.enumerate_group(100).unwrap() {
            assert!(rs.bruhat_leq(&e, &x));
        }
        let s1 = rs.element_from_word(&w(&[1])).unwrap();
        let s2s1s2 = rs.element_from_word(&w(&[2, 1, 2])).unwrap();
        assert!(rs.bruhat_leq(&s1, &s2s1s2));
        let s1s2 = rs.element_from_word(&w(&[1, 2])).unwrap();
        let s2s1 = rs.element_from_word(&w(&[2, 1])).unwrap();
        assert!(!rs.bruhat_leq(&s1s2, &s2s1));
        assert!(!rs.bruhat_leq(&s2s1, &s1s2));
    }

    #[test]
    fn group_sizes() {
        assert_eq!(a(2).enumerate_group(100).unwrap().len(), 6);
        assert_eq!(a(1).enumerate_group(100).unwrap().len(), 2);
        let b2 = RootSystem::of_family(Family::B, 2).unwrap();
        assert_eq!(b2.enumerate_group(100).unwrap().len(), 8);
        let g2 = RootSystem::of_family(Family::G, 2).unwrap();
        assert_eq!(g2.enumerate_group(100).unwrap().len(), 12);
        assert_eq!(
            a(3).enumerate_group(10),
            Err(Error::GroupTooLarge { cap: 10 })
        );
    }

    #[test]
    fn group_order_is_by_length_then_word() {
        let rs = a(2);
        let g = WeylGroup::enumerate(&rs, 100).unwrap();
        let words: Vec<Word> = g.words.clone();
        assert_eq!(
            words,
            vec![
                w(&[]),
                w(&[1]),
                w(&[2]),
                w(&[1, 2]),
                w(&[2, 1]),
                w(&[1, 2, 1])
            ]
        );
    }

    #[test]
    fn longest_elements() {
        let rs = a(2);
        assert_eq!(
            rs.longest_element(),
            rs.element_from_word(&w(&[1, 2, 1])).unwrap()
        );
        assert_eq!(
            a(1).longest_element(),
            a(1).simple_reflection(1).unwrap()
        );
        let g = a(3).enumerate_group(100).unwrap();
        let max = g.iter().map(|x| a(3).length(x)).max().unwrap();
        assert_eq!(max, 6);
        assert_eq!(a(3).length(&a(3).longest_element()), 6);
    }

    #[test]
    fn reflections_of_roots() {
        let rs = a(2);
        let r1 = rs.reflection_of_root(&RootVector(vec![1, 0])).unwrap();
        assert_eq!(r1, rs.element_from_word(&w(&[1])).unwrap());
        let r12 = rs.reflection_of_root(&RootVector(vec![1, 1])).unwrap();
        assert_eq!(r12, rs.element_from_word(&w(&[1, 2, 1])).unwrap());
        let s2 = rs.reflection_of_root(&RootVector(vec![0, 1])).unwrap();
        assert_eq!(s2.apply(&RootVector(vec![1, 1])), RootVector(vec![1, 0]));
        assert!(rs.reflection_of_root(&RootVector(vec![1, -1])).is_err());
        for k in 0..rs.num_positive_roots() {
            let s = rs.reflection_by_index(k);
            assert!(s.mul(&s).is_identity());
            let alpha = &rs.positive_roots()[k];
            assert_eq!(s.apply(alpha), alpha.negated());
        }
    }

    #[test]
    fn bruhat_graph_counts() {
        let g = a(2).bruhat_graph(100).unwrap();
        assert_eq!(g.num_vertices(), 6);
        assert_eq!(g.edges.len(), 9);
        let top = g.group.len() - 1;
        assert!(g
            .edges
            .iter()
            .any(|e| e.lower == 0 && e.upper == top && e.root == 2));
        let g1 = a(1).bruhat_graph(100).unwrap();
        assert_eq!((g1.num_vertices(), g1.edges.len()), (2, 1));
    }

    #[test]
    fn one_line_round_trip() {
        let rs = a(3);
        for x in rs.enumerate_group(100).unwrap() {
            let p = rs.to_one_line(&x).unwrap();
            assert_eq!(rs.from_one_line(&p).unwrap(), x);
        }
        let s1 = rs.simple_reflection(1).unwrap();
        assert_eq!(rs.to_one_line(&s1).unwrap(), vec![2, 1, 3, 4]);
        let b2 = RootSystem::of_family(Family::B, 2).unwrap();
        assert_eq!(b2.to_one_line(&b2.identity()), Err(Error::NotTypeA));
    }

    #[test]
    fn element_acts_on_roots_by_permutation() {
        for (fam, n) in [(Family::A, 3), (Family::B, 2), (Family::G, 2)] {
            let rs = RootSystem::of_family(fam, n).unwrap();
            for x in rs.enumerate_group(1000).unwrap() {
                for beta in rs.positive_roots() {
                    assert!(rs.is_root(&x.apply(beta)));
                }
                assert_eq!(rs.length(&x), rs.inversion_set(&x).len());
            }
        }
    }
}
