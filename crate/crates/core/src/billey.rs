//! Billey's restriction formula, Schubert class tables, the GKM edge check
//! and Kumar's smoothness criterion.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rootsys::{RootSystem, RootVector};
use crate::weyl::{BruhatEdge, BruhatGraph, WeylElement, WeylGroup, Word};

/// The roots `r_j = b_1 ... b_{j-1}(alpha_{b_j})` of a reduced word.
pub fn roots_of_word(rs: &RootSystem, word: &Word) -> Result<Vec<RootVector>> {
    let mut prefix = rs.identity();
    let mut out = Vec::with_capacity(word.len());
    for &b in word.letters() {
        rs.simple_reflection(b)?;
        let r = prefix.apply(&rs.simple_root(b));
        if !r.is_positive() {
            return Err(Error::NotReduced(word.0.clone()));
        }
        out.push(r);
        prefix = rs.right_mul_simple(&prefix, b);
    }
    Ok(out)
}

/// `sigma_v(w)` for every `v <= w`, read off one reduced word of `w`.
///
/// Walks the word once, keeping the partial sums over reduced subwords
/// grouped by the element they multiply to.
pub fn billey_all_with_word(rs: &RootSystem, word: &Word) -> Result<BTreeMap<WeylElement, Polynomial>> {
    let roots = roots_of_word(rs, word)?;
    let n = rs.rank();
    let mut state: BTreeMap<WeylElement, Polynomial> = BTreeMap::new();
    state.insert(rs.identity(), Polynomial::one(n));
    for (&b, r) in word.letters().iter().zip(&roots) {
        let rj = Polynomial::from_root(r);
        let mut next = state.clone();
        for (u, p) in &state {
            if u.has_right_descent(b) {
                continue;
            }
            let ub = rs.right_mul_simple(u, b);
            let add = p * &rj;
            let slot = next.entry(ub).or_insert_with(|| Polynomial::zero(n));
            *slot = &*slot + &add;
        }
        state = next;
    }
    Ok(state)
}

pub fn billey_all(rs: &RootSystem, w: &WeylElement) -> BTreeMap<WeylElement, Polynomial> {
    billey_all_with_word(rs, &rs.one_reduced_word(w)).expect("one_reduced_word is reduced")
}

/// `sigma_v(w)`; zero unless `v <= w`.
pub fn billey(rs: &RootSystem, v: &WeylElement, w: &WeylElement) -> Polynomial {
    billey_all(rs, w)
        .remove(v)
        .unwrap_or_else(|| Polynomial::zero(rs.rank()))
}

/// Reference enumerator: tries all `2^m` subwords of `word` and keeps the
/// reduced ones whose product is `v`. Exponential; meant for testing.
pub fn billey_naive(rs: &RootSystem, v: &WeylElement, word: &Word) -> Result<Polynomial> {
    let roots = roots_of_word(rs, word)?;
    let m = word.len();
    let target_len = rs.length(v);
    let mut total = Polynomial::zero(rs.rank());
    for mask in 0u64..(1u64 << m) {
        if mask.count_ones() as usize != target_len {
            continue;
        }
        let sub: Vec<usize> = (0..m).filter(|j| mask >> j & 1 == 1).collect();
        let letters: Vec<usize> = sub.iter().map(|&j| word.0[j]).collect();
        let x = rs.element_from_letters(&letters)?;
        if &x != v || rs.length(&x) != letters.len() {
            continue;
        }
        let mut term = Polynomial::one(rs.rank());
        for &j in &sub {
            term = &term * &Polynomial::from_root(&roots[j]);
        }
        total = &total + &term;
    }
    Ok(total)
}

/// A class in the GKM presentation: one polynomial per Weyl group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GKMClass {
    pub rank: usize,
    pub values: BTreeMap<WeylElement, Polynomial>,
}

impl GKMClass {
    pub fn new(rank: usize) -> Self {
        GKMClass {
            rank,
            values: BTreeMap::new(),
        }
    }

    /// The value at `w`; missing entries read as zero.
    pub fn value(&self, w: &WeylElement) -> Polynomial {
        self.values
            .get(w)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.rank))
    }

    pub fn set(&mut self, w: WeylElement, p: Polynomial) {
        self.values.insert(w, p);
    }
}

/// The Schubert class of `v`: `w -> sigma_v(w)` over all of `group`.
pub fn schubert_class(rs: &RootSystem, group: &WeylGroup, v: &WeylElement) -> GKMClass {
    let mut c = GKMClass::new(rs.rank());
    for w in &group.elements {
        c.set(w.clone(), billey(rs, v, w));
    }
    c
}

/// Every Schubert class, in the order of `group.elements`. Runs one pass of
/// [`billey_all`] per `w` and transposes.
pub fn class_table(rs: &RootSystem, group: &WeylGroup) -> Vec<GKMClass> {
    let mut table: Vec<GKMClass> = group.elements.iter().map(|_| GKMClass::new(rs.rank())).collect();
    for w in &group.elements {
        let row = billey_all(rs, w);
        for (k, v) in group.elements.iter().enumerate() {
            let p = row
                .get(v)
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(rs.rank()));
            table[k].set(w.clone(), p);
        }
    }
    table
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkmReport {
    pub ok: bool,
    pub violations: Vec<BruhatEdge>,
}

/// Checks that `class(w) - class(s_alpha w)` is divisible by `alpha` on
/// every edge of the Bruhat graph.
pub fn gkm_check(rs: &RootSystem, graph: &BruhatGraph, class: &GKMClass) -> GkmReport {
    let mut violations = Vec::new();
    for e in &graph.edges {
        let lo = class.value(&graph.group.elements[e.lower]);
        let hi = class.value(&graph.group.elements[e.upper]);
        let diff = &hi - &lo;
        if !diff.divisible_by_linear(&rs.positive_roots()[e.root]) {
            violations.push(*e);
        }
    }
    GkmReport {
        ok: violations.is_empty(),
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KumarResult {
    pub smooth: bool,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
    /// Indices into `positive_roots()` making up the right-hand product.
    pub roots: Vec<usize>,
}

/// Kumar's criterion at `wB` for the opposite Schubert variety of `v`:
/// compares `sigma_v(w)` with the product of the positive roots `alpha`
/// for which `v` is not below `s_alpha w`.
pub fn kumar_smooth(rs: &RootSystem, v: &WeylElement, w: &WeylElement) -> Result<KumarResult> {
    if !rs.bruhat_leq(v, w) {
        return Err(Error::NotBelow {
            v: rs.one_reduced_word(v).0,
            w: rs.one_reduced_word(w).0,
        });
    }
    let lhs = billey(rs, v, w);
    let mut rhs = Polynomial::one(rs.rank());
    let mut roots = Vec::new();
    for (k, alpha) in rs.positive_roots().iter().enumerate() {
        let sw = rs.reflection_by_index(k).mul(w);
        if !rs.bruhat_leq(v, &sw) {
            rhs = &rhs * &Polynomial::from_root(alpha);
            roots.push(k);
        }
    }
    Ok(KumarResult {
        smooth: lhs == rhs,
        lhs,
        rhs,
        roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;
    use crate::weyl::DEFAULT_GROUP_CAP;
    use alloc::string::ToString;
    use alloc::vec;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::of_family(f, n).unwrap()
    }

    fn el(rs: &RootSystem, w: &[usize]) -> WeylElement {
        rs.element_from_letters(w).unwrap()
    }

    fn rv(c: &[i64]) -> RootVector {
        RootVector(c.to_vec())
    }

    #[test]
    fn roots_of_words() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            roots_of_word(&a2, &Word(vec![2, 1, 2])).unwrap(),
            vec![rv(&[0, 1]), rv(&[1, 1]), rv(&[1, 0])]
        );
        assert_eq!(
            roots_of_word(&a2, &Word(vec![1, 2, 1])).unwrap(),
            vec![rv(&[1, 0]), rv(&[1, 1]), rv(&[0, 1])]
        );
        assert_eq!(roots_of_word(&a2, &Word(vec![1])).unwrap(), vec![rv(&[1, 0])]);
        assert_eq!(
            roots_of_word(&a2, &Word(vec![1, 1])),
            Err(Error::NotReduced(vec![1, 1]))
        );
        assert!(roots_of_word(&a2, &Word(vec![3])).is_err());
    }

    #[test]
    fn roots_of_word_match_inversions() {
        let b3 = rs(Family::B, 3);
        let w0 = b3.longest_element();
        let word = b3.one_reduced_word(&w0);
        let mut a = roots_of_word(&b3, &word).unwrap();
        let mut b = b3.inversion_set(&w0);
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn worked_examples() {
        let a2 = rs(Family::A, 2);
        let w = el(&a2, &[2, 1, 2]);
        assert_eq!(billey(&a2, &el(&a2, &[1]), &w).to_string(), "a1+a2");
        assert_eq!(billey(&a2, &a2.identity(), &w), Polynomial::one(2));
        assert_eq!(
            billey(&a2, &w, &w).to_string(),
            "a1^2*a2+a1*a2^2"
        );
        assert!(billey(&a2, &el(&a2, &[1, 2]), &el(&a2, &[1])).is_zero());
        let all = billey_all(&a2, &a2.identity());
        assert_eq!(all.len(), 1);
        assert_eq!(all[&a2.identity()], Polynomial::one(2));
        assert_eq!(billey_all(&a2, &w).len(), 6);
    }

    #[test]
    fn figure_one_class() {
        let a2 = rs(Family::A, 2);
        let g = WeylGroup::enumerate(&a2, DEFAULT_GROUP_CAP).unwrap();
        let c = schubert_class(&a2, &g, &el(&a2, &[1]));
        let expect = [
            (vec![], "0"),
            (vec![1], "a1"),
            (vec![2], "0"),
            (vec![1, 2], "a1"),
            (vec![2, 1], "a1+a2"),
            (vec![1, 2, 1], "a1+a2"),
        ];
        for (w, s) in expect {
            assert_eq!(c.value(&el(&a2, &w)).to_string(), s, "at {:?}", w);
        }
        let graph = BruhatGraph::from_group(&a2, g);
        assert!(gkm_check(&a2, &graph, &c).ok);
    }

    #[test]
    fn class_table_matches_single_classes() {
        let b2 = rs(Family::B, 2);
        let g = WeylGroup::enumerate(&b2, DEFAULT_GROUP_CAP).unwrap();
        let table = class_table(&b2, &g);
        for (k, v) in g.elements.iter().enumerate() {
            assert_eq!(table[k], schubert_class(&b2, &g, v));
        }
    }

    #[test]
    fn gkm_detects_bad_class() {
        let a2 = rs(Family::A, 2);
        let graph = BruhatGraph::new(&a2, DEFAULT_GROUP_CAP).unwrap();
        let mut bad = GKMClass::new(2);
        bad.set(a2.identity(), Polynomial::var(2, 1));
        let report = gkm_check(&a2, &graph, &bad);
        assert!(!report.ok);
        let s2 = graph.group.index_of(&el(&a2, &[2])).unwrap();
        assert!(report.violations.iter().any(|e| e.lower == 0 && e.upper == s2));
        let mut one = GKMClass::new(2);
        for w in &graph.group.elements {
            one.set(w.clone(), Polynomial::one(2));
        }
        assert!(gkm_check(&a2, &graph, &one).ok);
    }

    #[test]
    fn dp_matches_naive_in_a3() {
        let a3 = rs(Family::A, 3);
        let g = WeylGroup::enumerate(&a3, DEFAULT_GROUP_CAP).unwrap();
        for (w, word) in g.elements.iter().zip(&g.words) {
            let all = billey_all_with_word(&a3, word).unwrap();
            for v in &g.elements {
                let dp = all.get(v).cloned().unwrap_or_else(|| Polynomial::zero(3));
                assert_eq!(dp, billey_naive(&a3, v, word).unwrap());
                assert_eq!(dp.is_zero(), !a3.bruhat_leq(v, w));
            }
        }
    }

    #[test]
    fn word_independence_b2() {
        let b2 = rs(Family::B, 2);
        let g = WeylGroup::enumerate(&b2, DEFAULT_GROUP_CAP).unwrap();
        for w in &g.elements {
            let words = b2.all_reduced_words(w);
            let mut it = words.iter();
            let first = billey_all_with_word(&b2, it.next().unwrap()).unwrap();
            for word in it {
                assert_eq!(billey_all_with_word(&b2, word).unwrap(), first);
            }
        }
    }

    #[test]
    fn longest_element_is_product_of_positive_roots() {
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::G, 2), (Family::A, 3)] {
            let r = rs(f, n);
            let w0 = r.longest_element();
            let mut prod = Polynomial::one(n);
            for a in r.positive_roots() {
                prod = &prod * &Polynomial::from_root(a);
            }
            let got = billey(&r, &w0, &w0);
            assert_eq!(got, prod);
            assert!(got.is_homogeneous() && got.all_coefficients_nonnegative());
        }
    }

    #[test]
    fn kumar_cases() {
        let a2 = rs(Family::A, 2);
        let s1 = el(&a2, &[1]);
        let k = kumar_smooth(&a2, &s1, &s1).unwrap();
        assert!(k.smooth);
        assert_eq!(k.rhs, Polynomial::var(2, 1));
        assert_eq!(k.roots, vec![0]);
        let w0 = a2.longest_element();
        let k = kumar_smooth(&a2, &a2.identity(), &w0).unwrap();
        assert!(k.smooth && k.lhs == Polynomial::one(2));
        assert!(matches!(
            kumar_smooth(&a2, &w0, &s1),
            Err(Error::NotBelow { .. })
        ));
    }
}
