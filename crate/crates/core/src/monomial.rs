//! Monomials and monomial ideals with exact generator arithmetic.
//!
//! Every value is immutable after construction and every operation is a
//! pure function. Ideals always store their unique minimal generating
//! set, sorted in graded lexicographic order, so equality of ideals is
//! equality of the stored generators.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x_0^{e_0} * ... * x_{n-1}^{e_{n-1}}` in a fixed ambient
/// ring with `n` variables. The constant monomial `1` has all exponents
/// zero; there is no representation of the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i` in `n` variables.
    pub fn var(i: usize, n: usize) -> Self {
        assert!(i < n, "variable index out of range");
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// `x_i^e` in `n` variables.
    pub fn var_pow(i: usize, e: u32, n: usize) -> Self {
        assert!(i < n, "variable index out of range");
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn ambient_n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::AmbientMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                a.checked_add(b).ok_or(Error::ExponentOverflow {
                    context: "multiplying monomials",
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Exact quotient `self / divisor`, or `None` when it does not divide.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&divisor.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial { exps }
    }

    /// `self / gcd(self, m)`, the generator-wise colon image.
    pub fn colon_by(&self, m: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&m.exps)
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        Monomial { exps }
    }

    /// Re-index variables into a new ambient ring; `map[i]` is the image of
    /// old variable `i`, `None` meaning the variable must not occur.
    pub fn reindex(&self, map: &[Option<usize>], new_n: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; new_n];
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match map.get(i).copied().flatten() {
                Some(j) if j < new_n => exps[j] += e,
                _ => {
                    return Err(Error::Input(format!(
                        "variable x{i} has no image in the target ring"
                    )))
                }
            }
        }
        Ok(Monomial { exps })
    }
}

/// Graded lexicographic order: first by total degree, then lexicographic
/// on the exponent vector. This is the deterministic generator order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal, stored by its unique minimal generating set.
///
/// The zero ideal has an empty generator list; the unit ideal is
/// generated by the single monomial `1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// Builds an ideal from any generating set, pruning divisible
    /// generators. Idempotent on already-minimal sets.
    pub fn minimalize(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.ambient_n() != n {
                return Err(Error::AmbientMismatch {
                    left: n,
                    right: g.ambient_n(),
                });
            }
        }
        let mut sorted = gens;
        sorted.sort();
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        // graded order guarantees divisors come before their multiples
        for g in sorted {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { n, gens: minimal })
    }

    pub fn ambient_n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper means neither the zero nor the unit ideal.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        MonomialIdeal::minimalize(self.n, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        MonomialIdeal::minimalize(self.n, gens)
    }

    pub fn power(&self, t: u32) -> Result<MonomialIdeal> {
        if t == 0 {
            return Err(Error::Input("power exponent must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// The colon ideal `(I : m)`, computed generator-wise as
    /// `g -> g / gcd(g, m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.ambient_n() != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: m.ambient_n(),
            });
        }
        let gens = self.gens.iter().map(|g| g.colon_by(m)).collect();
        MonomialIdeal::minimalize(self.n, gens)
    }

    /// Pairwise lcms of the generators, minimalized.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::minimalize(self.n, gens)
    }

    /// Membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.ambient_n() != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: m.ambient_n(),
            });
        }
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Re-index every generator into a new ambient ring (explicit ring
    /// change; nothing is coerced implicitly).
    pub fn reindex(&self, map: &[Option<usize>], new_n: usize) -> Result<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.reindex(map, new_n))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(new_n, gens)
    }
}
