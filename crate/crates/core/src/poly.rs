//! Exact polynomials with arbitrary-precision integer coefficients.
//!
//! [`Polynomial`] is sparse and multivariate; it carries Billey values in the
//! simple-root variables `a1..an` and, after [`Polynomial::specialize_tvars`],
//! type-A torus weights in `t1..tN`. [`TPolynomial`] is the dense univariate
//! ring `Z[t]` reached by sending every simple root to `t`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::RootVector;

pub type Exponent = Vec<u32>;

/// Sparse polynomial: exponent vector -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

/// Values in the simple-root variables.
pub type RootPolynomial = Polynomial;
/// Values in the type-A torus variables `t_1..t_N`.
pub type TVarsPolynomial = Polynomial;

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, BigInt::one());
        p
    }

    /// The linear form `sum_i c_i x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn from_root(r: &RootVector) -> Self {
        Self::linear(r.coords())
    }

    /// Builds from `(coefficient, exponent)` pairs, combining repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BigInt, Exponent)>,
    {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Same polynomial in `m >= nvars` variables (new ones unused).
    pub fn with_nvars(&self, m: usize) -> Result<Self> {
        if m < self.nvars && self.terms.keys().any(|e| e[m..].iter().any(|&x| x != 0)) {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: m,
            });
        }
        let mut p = Self::zero(m);
        for (e, c) in &self.terms {
            let mut f = vec![0; m];
            for (i, &x) in e.iter().enumerate().take(m) {
                f[i] = x;
            }
            p.add_term(f, c.clone());
        }
        Ok(p)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            nvars: self.nvars,
            terms: acc,
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Ring homomorphism sending `x_i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term = term.checked_mul(&images[i])?;
                }
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Sends every variable to the single variable `t`.
    pub fn specialize_line(&self) -> TPolynomial {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in &self.terms {
            let d = e.iter().sum::<u32>() as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::zero());
            }
            coeffs[d] += c;
        }
        TPolynomial::from_coeffs(coeffs)
    }

    /// Substitutes `alpha_i = t_i - t_{i+1}`, mapping the `A_{N-1}` root
    /// variables to `t_1..t_N`.
    pub fn specialize_tvars(&self, n_t: usize) -> Result<Polynomial> {
        if n_t != self.nvars + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.nvars + 1,
                found: n_t,
            });
        }
        let images: Vec<Polynomial> = (1..=self.nvars)
            .map(|i| {
                Polynomial::var(n_t, i)
                    .checked_sub(&Polynomial::var(n_t, i + 1))
                    .expect("same variable count")
            })
            .collect();
        if images.is_empty() {
            // rank zero never occurs for a root system; keep constants intact
            return self.with_nvars(n_t);
        }
        self.substitute(&images)
    }

    /// Exact division by the linear form `alpha`, or `None` if it does not
    /// divide. Uses the monomial order that compares the exponent of the
    /// pivot variable first, so the leading term of `alpha` is `c x_k`.
    pub fn div_linear(&self, alpha: &RootVector) -> Option<Polynomial> {
        let coords = alpha.coords();
        if coords.len() != self.nvars {
            return None;
        }
        let k = coords.iter().position(|&c| c != 0)?;
        let lead = BigInt::from(coords[k]);
        let divisor = Polynomial::from_root(alpha);
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while !rem.is_zero() {
            let (e, c) = rem
                .terms
                .iter()
                .max_by(|a, b| a.0[k].cmp(&b.0[k]).then_with(|| a.0.cmp(b.0)))
                .map(|(e, c)| (e.clone(), c.clone()))
                .expect("nonzero");
            if e[k] == 0 {
                return None;
            }
            let (q, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let mut qe = e;
            qe[k] -= 1;
            let mut mono = Polynomial::zero(self.nvars);
            mono.add_term(qe, q);
            rem = rem
                .checked_sub(&mono.checked_mul(&divisor).expect("same nvars"))
                .expect("same nvars");
            quot = quot.checked_add(&mono).expect("same nvars");
        }
        Some(quot)
    }

    pub fn divisible_by_linear(&self, alpha: &RootVector) -> bool {
        !alpha.is_zero() && self.div_linear(alpha).is_some()
    }

    /// Writes the polynomial as `c * prod roots[k]^m` when it splits
    /// completely over the given linear forms.
    pub fn factor_over(&self, roots: &[RootVector]) -> Option<(BigInt, Vec<(usize, u32)>)> {
        if self.is_zero() {
            return None;
        }
        let mut rest = self.clone();
        let mut factors = Vec::new();
        for (k, r) in roots.iter().enumerate() {
            let mut m = 0;
            while rest.degree().unwrap_or(0) > 0 {
                match rest.div_linear(r) {
                    Some(q) => {
                        rest = q;
                        m += 1;
                    }
                    None => break,
                }
            }
            if m > 0 {
                factors.push((k, m));
            }
        }
        if rest.degree() == Some(0) {
            Some((rest.coefficient(&vec![0; self.nvars]), factors))
        } else {
            None
        }
    }

    /// Terms in display order: higher degree first, then larger exponents
    /// of earlier variables first.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }

    /// Renders with caller-supplied variable names, e.g. `a1^2*a2+a2`.
    pub fn render(&self, name: &dyn Fn(usize) -> String, sep: &str, pow: &dyn Fn(u32) -> String) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let is_const = e.iter().all(|&x| x == 0);
            if c.is_negative() {
                s.push('-');
            } else if k > 0 {
                s.push('+');
            }
            let mag = c.abs();
            let mut need_sep = false;
            if is_const || !mag.is_one() {
                let _ = write!(s, "{}", mag);
                need_sep = true;
            }
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if need_sep {
                    s.push_str(sep);
                }
                s.push_str(&name(i + 1));
                if x > 1 {
                    s.push_str(&pow(x));
                }
                need_sep = true;
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(
            &|i| alloc::format!("a{}", i),
            "*",
            &|k| alloc::format!("^{}", k),
        ))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the variable counts differ.
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials in different rings")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Dense polynomial in one variable `t`, coefficients from degree 0 up.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TPolynomial {
    coeffs: Vec<BigInt>,
}

impl TPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        TPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c t^d`.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut v = vec![BigInt::zero(); d + 1];
        v[d] = c;
        Self::from_coeffs(v)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `Some(c)` if this is `c t^d` for a single `d` (or zero).
    pub fn as_monomial(&self) -> Option<(BigInt, usize)> {
        let nz: Vec<usize> = (0..self.coeffs.len())
            .filter(|&d| !self.coeffs[d].is_zero())
            .collect();
        match nz.as_slice() {
            [] => Some((BigInt::zero(), 0)),
            [d] => Some((self.coeffs[*d].clone(), *d)),
            _ => None,
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact quotient in `Z[t]`, or `None` when the division leaves a
    /// remainder or needs fractions.
    pub fn div_exact(&self, divisor: &TPolynomial) -> Option<TPolynomial> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return if self.is_zero() { Some(Self::zero()) } else { None };
        }
        let mut q = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let (qk, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            q[k] = qk;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}

impl Add<&TPolynomial> for &TPolynomial {
    type Output = TPolynomial;
    fn add(self, rhs: &TPolynomial) -> TPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPolynomial::from_coeffs((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub<&TPolynomial> for &TPolynomial {
    type Output = TPolynomial;
    fn sub(self, rhs: &TPolynomial) -> TPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        TPolynomial::from_coeffs((0..n).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul<&TPolynomial> for &TPolynomial {
    type Output = TPolynomial;
    fn mul(self, rhs: &TPolynomial) -> TPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return TPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPolynomial::from_coeffs(out)
    }
}

impl Neg for &TPolynomial {
    type Output = TPolynomial;
    fn neg(self) -> TPolynomial {
        TPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<TPolynomial> for TPolynomial {
            type Output = TPolynomial;
            fn $m(self, rhs: TPolynomial) -> TPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if d == 0 || !mag.is_one() {
                write!(f, "{}", mag)?;
            }
            match d {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{}", d)?,
            }
            first = false;
        }
        Ok(())
    }
}
