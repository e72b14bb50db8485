//! Finite root systems built from Cartan data.
//!
//! Roots are integer vectors in the basis of simple roots. The Cartan matrix
//! is stored with the convention `a[i][j] = <alpha_j, alpha_i^vee>`, so the
//! simple reflection acts by `s_i(v) = v - (sum_j a[i][j] v_j) alpha_i`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Default cap on the number of positive roots enumerated before a Cartan
/// matrix is declared not of finite type.
pub const DEFAULT_ROOT_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    F,
    G,
}

impl Family {
    pub fn from_letter(s: &str) -> Option<Family> {
        match s {
            "A" | "a" => Some(Family::A),
            "B" | "b" => Some(Family::B),
            "C" | "c" => Some(Family::C),
            "D" | "d" => Some(Family::D),
            "F" | "f" => Some(Family::F),
            "G" | "g" => Some(Family::G),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// Input describing a root system: a named family or an explicit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CartanSpec {
    Family { family: Family, rank: usize },
    Matrix(Vec<Vec<i64>>),
}

impl CartanSpec {
    pub fn family(family: Family, rank: usize) -> Self {
        CartanSpec::Family { family, rank }
    }

    /// Expands the spec to a validated square matrix (row-major).
    pub fn to_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let m = match self {
            CartanSpec::Family { family, rank } => family_matrix(*family, *rank)?,
            CartanSpec::Matrix(m) => m.clone(),
        };
        validate_matrix(&m)?;
        Ok(m)
    }
}

fn family_matrix(family: Family, n: usize) -> Result<Vec<Vec<i64>>> {
    let min_rank = match family {
        Family::A => 1,
        Family::B | Family::C => 2,
        Family::D => 4,
        Family::F => 4,
        Family::G => 2,
    };
    let max_rank = match family {
        Family::F => 4,
        Family::G => 2,
        _ => usize::MAX,
    };
    if n < min_rank || n > max_rank {
        return Err(Error::InvalidCartan(format!(
            "rank {} is not valid for family {}",
            n,
            family.letter()
        )));
    }
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
    }
    match family {
        Family::B => m[n - 1][n - 2] = -2,
        Family::C => m[n - 2][n - 1] = -2,
        Family::F => m[2][1] = -2,
        Family::G => m[1][0] = -3,
        _ => {}
    }
    Ok(m)
}

fn validate_matrix(m: &[Vec<i64>]) -> Result<()> {
    let n = m.len();
    if n == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan(format!(
                "row {} has length {}, expected {}",
                i + 1,
                row.len(),
                n
            )));
        }
        for (j, &a) in row.iter().enumerate() {
            if i == j {
                if a != 2 {
                    return Err(Error::InvalidCartan(format!(
                        "diagonal entry ({}, {}) is {}, expected 2",
                        i + 1,
                        j + 1,
                        a
                    )));
                }
            } else {
                if a > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({}, {}) is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if (a == 0) != (m[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({}, {}) and ({}, {}) must vanish together",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

/// A vector in the root lattice, written in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector(coords)
    }

    /// The simple root `alpha_i` (1-based) in rank `n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coordinates nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn negated(&self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Canonical order on positive roots: by height, then with larger
/// coordinate vectors first, so that `alpha_1, alpha_2, ...` come out in
/// index order.
pub fn canonical_root_order(a: &RootVector, b: &RootVector) -> Ordering {
    a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0))
}

/// A finite root system with its positive roots enumerated.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: CartanSpec,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive: Vec<RootVector>,
    index: BTreeMap<RootVector, usize>,
    // positive[k] = s_{word[0]} ... s_{word[last]} (alpha_simple)
    witness: Vec<(Vec<usize>, usize)>,
}

impl RootSystem {
    pub fn new(spec: CartanSpec) -> Result<Self> {
        Self::with_cap(spec, DEFAULT_ROOT_CAP)
    }

    pub fn of_family(family: Family, rank: usize) -> Result<Self> {
        Self::new(CartanSpec::family(family, rank))
    }

    /// Builds the root system, enumerating positive roots by breadth-first
    /// closure of the simple roots under simple reflections.
    pub fn with_cap(spec: CartanSpec, cap: usize) -> Result<Self> {
        let cartan = spec.to_matrix()?;
        let n = cartan.len();
        let mut found: BTreeMap<RootVector, (Vec<usize>, usize)> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for i in 1..=n {
            let a = RootVector::simple(n, i);
            found.insert(a.clone(), (Vec::new(), i));
            queue.push_back(a);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 1..=n {
                let gamma = reflect(&cartan, i, &beta);
                // finite types never need a coefficient above 6
                if gamma.0.iter().any(|c| c.abs() > MAX_FINITE_COEFF) {
                    return Err(Error::NotFiniteType { cap });
                }
                if gamma.is_negative() {
                    continue;
                }
                if !gamma.is_positive() {
                    return Err(Error::InvalidCartan(format!(
                        "reflection produced the mixed-sign vector {:?}",
                        gamma.0
                    )));
                }
                if !found.contains_key(&gamma) {
                    if found.len() >= cap {
                        return Err(Error::NotFiniteType { cap });
                    }
                    let (word, simple) = &found[&beta];
                    let mut w = Vec::with_capacity(word.len() + 1);
                    w.push(i);
                    w.extend_from_slice(word);
                    let entry = (w, *simple);
                    found.insert(gamma.clone(), entry);
                    queue.push_back(gamma);
                }
            }
        }
        let mut entries: Vec<(RootVector, (Vec<usize>, usize))> = found.into_iter().collect();
        entries.sort_by(|a, b| canonical_root_order(&a.0, &b.0));
        let mut positive = Vec::with_capacity(entries.len());
        let mut witness = Vec::with_capacity(entries.len());
        let mut index = BTreeMap::new();
        for (k, (root, wit)) in entries.into_iter().enumerate() {
            index.insert(root.clone(), k);
            positive.push(root);
            witness.push(wit);
        }
        Ok(RootSystem {
            spec,
            rank: n,
            cartan,
            positive,
            index,
            witness,
        })
    }

    pub fn spec(&self) -> &CartanSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        RootVector::simple(self.rank, i)
    }

    /// Index of a positive root in the canonical order.
    pub fn positive_index(&self, v: &RootVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &RootVector) -> bool {
        self.index.contains_key(v) || self.index.contains_key(&v.negated())
    }

    /// Word and simple index with `positive_roots()[k] = s_word(alpha_simple)`.
    pub fn root_witness(&self, k: usize) -> (&[usize], usize) {
        let (w, s) = &self.witness[k];
        (w, *s)
    }

    /// `<v, alpha_i^vee>` for 1-based `i`.
    pub fn pairing(&self, v: &[i64], i: usize) -> i64 {
        self.cartan[i - 1].iter().zip(v).map(|(a, x)| a * x).sum()
    }

    /// The simple reflection `s_i(v) = v - <v, alpha_i^vee> alpha_i`.
    pub fn reflect_simple(&self, i: usize, v: &RootVector) -> Result<RootVector> {
        if i == 0 || i > self.rank {
            return Err(Error::LetterOutOfRange {
                letter: i,
                rank: self.rank,
            });
        }
        if v.dim() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: v.dim(),
            });
        }
        Ok(reflect(&self.cartan, i, v))
    }

    /// True when the Cartan matrix is exactly the type `A_n` matrix.
    pub fn is_type_a(&self) -> bool {
        family_matrix(Family::A, self.rank)
            .map(|m| m == self.cartan)
            .unwrap_or(false)
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }
}

const MAX_FINITE_COEFF: i64 = 64;

fn reflect(cartan: &[Vec<i64>], i: usize, v: &RootVector) -> RootVector {
    let p: i64 = cartan[i - 1].iter().zip(&v.0).map(|(a, x)| a * x).sum();
    let mut out = v.0.clone();
    out[i - 1] -= p;
    RootVector(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(c: &[i64]) -> RootVector {
        RootVector(c.to_vec())
    }

    #[test]
    fn a2_positive_roots() {
        let rs = RootSystem::of_family(Family::A, 2).unwrap();
        assert_eq!(
            rs.positive_roots(),
            &[rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])]
        );
    }

    #[test]
    fn a1_positive_roots() {
        let rs = RootSystem::of_family(Family::A, 1).unwrap();
        assert_eq!(rs.positive_roots(), &[rv(&[1])]);
    }

    #[test]
    fn classical_counts() {
        let table = [
            (Family::A, 1, 1),
            (Family::A, 2, 3),
            (Family::A, 3, 6),
            (Family::A, 4, 10),
            (Family::A, 5, 15),
            (Family::B, 2, 4),
            (Family::B, 3, 9),
            (Family::B, 4, 16),
            (Family::C, 3, 9),
            (Family::D, 4, 12),
            (Family::G, 2, 6),
            (Family::F, 4, 24),
        ];
        for (fam, n, count) in table {
            let rs = RootSystem::of_family(fam, n).unwrap();
            assert_eq!(rs.num_positive_roots(), count, "{:?}{}", fam, n);
        }
    }

    #[test]
    fn e8_through_matrix_path() {
        // E_8, Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
        let mut m = vec![vec![0i64; 8]; 8];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)] {
            m[a - 1][b - 1] = -1;
            m[b - 1][a - 1] = -1;
        }
        let rs = RootSystem::new(CartanSpec::Matrix(m)).unwrap();
        assert_eq!(rs.num_positive_roots(), 120);
    }

    #[test]
    fn reflections_in_a2() {
        let rs = RootSystem::of_family(Family::A, 2).unwrap();
        assert_eq!(rs.reflect_simple(1, &rv(&[1, 0])).unwrap(), rv(&[-1, 0]));
        assert_eq!(rs.reflect_simple(2, &rv(&[1, 0])).unwrap(), rv(&[1, 1]));
        assert_eq!(rs.reflect_simple(1, &rv(&[0, 1])).unwrap(), rv(&[1, 1]));
        assert!(rs.reflect_simple(3, &rv(&[0, 1])).is_err());
    }

    #[test]
    fn simple_reflection_permutes_other_positive_roots() {
        for (fam, n) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
            (Family::F, 4),
        ] {
            let rs = RootSystem::of_family(fam, n).unwrap();
            for i in 1..=n {
                let ai = rs.simple_root(i);
                for beta in rs.positive_roots() {
                    let img = rs.reflect_simple(i, beta).unwrap();
                    if *beta == ai {
                        assert_eq!(img, ai.negated());
                    } else {
                        assert!(rs.positive_index(&img).is_some());
                    }
                    assert_eq!(rs.reflect_simple(i, &img).unwrap(), *beta);
                    let neg = rs.reflect_simple(i, &beta.negated()).unwrap();
                    assert_eq!(rs.reflect_simple(i, &neg).unwrap(), beta.negated());
                }
            }
        }
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(matches!(
            RootSystem::new(CartanSpec::Matrix(vec![vec![2, -1], vec![0, 2]])),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            RootSystem::new(CartanSpec::Matrix(vec![vec![3]])),
            Err(Error::InvalidCartan(_))
        ));
        assert!(matches!(
            RootSystem::new(CartanSpec::Matrix(vec![vec![2, 1], vec![1, 2]])),
            Err(Error::InvalidCartan(_))
        ));
        // affine A_1^(1)
        assert!(matches!(
            RootSystem::new(CartanSpec::Matrix(vec![vec![2, -2], vec![-2, 2]])),
            Err(Error::NotFiniteType { .. })
        ));
        // hyperbolic
        assert!(matches!(
            RootSystem::with_cap(CartanSpec::Matrix(vec![vec![2, -3], vec![-3, 2]]), 500),
            Err(Error::NotFiniteType { cap: 500 })
        ));
        assert!(RootSystem::of_family(Family::G, 3).is_err());
        assert!(RootSystem::of_family(Family::D, 3).is_err());
    }

    #[test]
    fn witnesses_reproduce_roots() {
        let rs = RootSystem::of_family(Family::B, 3).unwrap();
        for (k, root) in rs.positive_roots().iter().enumerate() {
            let (word, s) = rs.root_witness(k);
            let mut v = rs.simple_root(s);
            for &i in word.iter().rev() {
                v = rs.reflect_simple(i, &v).unwrap();
            }
            assert_eq!(&v, root);
        }
    }

    #[test]
    fn root_display() {
        assert_eq!(alloc::format!("{}", rv(&[1, 2])), "a1+2a2");
        assert_eq!(alloc::format!("{}", rv(&[0, -1])), "-a2");
    }
}
