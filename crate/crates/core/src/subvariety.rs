//! Torus fixed points of Springer, Hessenberg and Peterson varieties, and
//! restriction of Schubert classes to them along `alpha_i -> t`.
//!
//! In type `A_{n-1}` the nilpotent `X` is put in Jordan form with ones on
//! the subdiagonal of each block, i.e. entries `(a+1, a)`. Conjugating by
//! the permutation matrix of `w` moves entry `(a, b)` to
//! `(w^-1(a), w^-1(b))`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::billey::GKMClass;
use crate::error::{Error, Result};
use crate::grassmann::Partition;
use crate::poly::TPolynomial;
use crate::rootsys::RootSystem;
use crate::weyl::{WeylElement, WeylGroup};

/// Block sizes of a nilpotent matrix, a partition of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanType(Partition);

impl JordanType {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        let mut blocks = blocks;
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(JordanType(Partition::new(blocks)?))
    }

    /// A single block of size `n`.
    pub fn regular(n: usize) -> Self {
        JordanType(Partition::new(alloc::vec![n]).expect("one part"))
    }

    pub fn zero(n: usize) -> Self {
        JordanType(Partition::new(alloc::vec![1; n]).expect("equal parts"))
    }

    pub fn blocks(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn n(&self) -> usize {
        self.0.size()
    }

    /// Nonzero entries `(row, col)` of `X`, 1-based.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 1;
        for &b in self.blocks() {
            for a in start..start + b - 1 {
                out.push((a + 1, a));
            }
            start += b;
        }
        out
    }
}

/// `h : {1..n} -> {1..n}` with `h(i) >= i`, weakly increasing. Encodes the
/// Hessenberg space `{M : M_ab = 0 whenever a > h(b)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessenbergFunction(Vec<usize>);

impl HessenbergFunction {
    pub fn new(h: Vec<usize>) -> Result<Self> {
        let n = h.len();
        for (i, &x) in h.iter().enumerate() {
            if x < i + 1 || x > n {
                return Err(Error::InvalidHessenberg(format!(
                    "h({}) = {} must lie in {}..={}",
                    i + 1,
                    x,
                    i + 1,
                    n
                )));
            }
        }
        if h.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidHessenberg(format!("{:?} is not weakly increasing", h)));
        }
        Ok(HessenbergFunction(h))
    }

    /// `h(i) = i`: the Borel subalgebra.
    pub fn identity(n: usize) -> Self {
        HessenbergFunction((1..=n).collect())
    }

    /// `h(i) = n`: everything.
    pub fn full(n: usize) -> Self {
        HessenbergFunction(alloc::vec![n; n])
    }

    /// `h(i) = min(i + 1, n)`, the Peterson case.
    pub fn peterson(n: usize) -> Self {
        HessenbergFunction((1..=n).map(|i| (i + 1).min(n)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `h(i)`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Springer,
    Hessenberg,
    Peterson,
    Custom,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Origin::Springer => "springer",
            Origin::Hessenberg => "hessenberg",
            Origin::Peterson => "peterson",
            Origin::Custom => "custom",
        })
    }
}

/// Fixed points, sorted by length and then by smallest reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointSet {
    pub origin: Origin,
    pub members: Vec<WeylElement>,
}

impl FixedPointSet {
    /// A set from arbitrary elements; duplicates are dropped.
    pub fn custom(rs: &RootSystem, members: Vec<WeylElement>) -> Self {
        Self::sorted(rs, Origin::Custom, members)
    }

    fn sorted(rs: &RootSystem, origin: Origin, members: Vec<WeylElement>) -> Self {
        let mut keyed: Vec<_> = members
            .into_iter()
            .map(|w| (rs.length(&w), rs.one_reduced_word(&w), w))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        keyed.dedup_by(|a, b| a.2 == b.2);
        FixedPointSet {
            origin,
            members: keyed.into_iter().map(|k| k.2).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.members.contains(w)
    }

    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.members.iter().position(|x| x == w)
    }
}

fn check_type_a(rs: &RootSystem, n: usize) -> Result<()> {
    if !rs.is_type_a() {
        return Err(Error::NotTypeA);
    }
    if rs.rank() + 1 != n {
        return Err(Error::DimensionMismatch {
            expected: rs.rank() + 1,
            found: n,
        });
    }
    Ok(())
}

/// Permutations `w` such that every conjugated entry `(w^-1(a), w^-1(b))`
/// of `X` passes `keep`.
fn scan(rs: &RootSystem, jordan: &JordanType, cap: usize, keep: &dyn Fn(usize, usize) -> bool) -> Result<Vec<WeylElement>> {
    let group = WeylGroup::enumerate(rs, cap)?;
    let entries = jordan.nonzero_entries();
    let mut out = Vec::new();
    for w in &group.elements {
        let perm = rs.to_one_line(w)?;
        let mut pos = alloc::vec![0; perm.len() + 1];
        for (i, &x) in perm.iter().enumerate() {
            pos[x] = i + 1;
        }
        if entries.iter().all(|&(a, b)| keep(pos[a], pos[b])) {
            out.push(w.clone());
        }
    }
    Ok(out)
}

/// Flags `wB` with `w^-1 X w` strictly upper triangular.
pub fn springer_fixed_points(rs: &RootSystem, jordan: &JordanType, cap: usize) -> Result<FixedPointSet> {
    check_type_a(rs, jordan.n())?;
    let members = scan(rs, jordan, cap, &|a, b| a < b)?;
    Ok(FixedPointSet::sorted(rs, Origin::Springer, members))
}

/// Flags `wB` with `w^-1 X w` in the Hessenberg space of `h`.
pub fn hessenberg_fixed_points(rs: &RootSystem, jordan: &JordanType, h: &HessenbergFunction, cap: usize) -> Result<FixedPointSet> {
    check_type_a(rs, jordan.n())?;
    if h.n() != jordan.n() {
        return Err(Error::InvalidHessenberg(format!(
            "h has {} values but X is {} x {}",
            h.n(),
            jordan.n(),
            jordan.n()
        )));
    }
    let members = scan(rs, jordan, cap, &|a, b| a <= h.at(b))?;
    Ok(FixedPointSet::sorted(rs, Origin::Hessenberg, members))
}

/// All subsets of `1..=n` as sorted index lists, by size and then
/// lexicographically.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u64..(1u64 << n))
        .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// The longest elements `w_A` of the standard parabolic subgroups, one per
/// subset `A` of the simple reflections.
pub fn peterson_fixed_points(rs: &RootSystem) -> Result<FixedPointSet> {
    let members = subsets(rs.rank())
        .iter()
        .map(|a| rs.parabolic_longest(a))
        .collect::<Result<Vec<_>>>()?;
    Ok(FixedPointSet::sorted(rs, Origin::Peterson, members))
}

/// `w -> specialize_line(class(w))` for the members of `fps`, in order.
pub fn restrict_class(rs: &RootSystem, class: &GKMClass, fps: &FixedPointSet) -> Result<Vec<TPolynomial>> {
    fps.members
        .iter()
        .map(|w| {
            class
                .values
                .get(w)
                .map(|p| p.specialize_line())
                .ok_or_else(|| Error::UnknownElement(rs.one_reduced_word(w).0))
        })
        .collect()
}
