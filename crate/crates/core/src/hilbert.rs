//! Hilbert series numerators of monomial quotients, with dimension,
//! codimension, multiplicity and h-vector, plus multiplicity extraction
//! from an arbitrary Betti table via alternating power sums.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poly::IntPoly;

/// Hilbert series data of `R/I`: the series is
/// `numerator(t) / (1-t)^ambient_n`, and factoring the numerator as
/// `h(t) * (1-t)^codim` yields the h-vector with `h(1) = multiplicity`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HilbertData {
    pub numerator: IntPoly,
    pub ambient_n: usize,
    pub dim: usize,
    pub codim: usize,
    pub multiplicity: BigInt,
    pub h_vector: Vec<BigInt>,
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

/// Numerator of the Hilbert series of `R/I` by the pivot recursion
///
///   N(I) = N(I \ {g}) - t^{deg g} * N((I \ {g}) : g)
///
/// with base cases N(0) = 1 and N((m)) = 1 - t^{deg m}. The pivot
/// generator is the grlex-largest one carrying the highest power of the
/// most frequent variable; the value is independent of that choice.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Result<HilbertData> {
    if ideal.is_unit() {
        return Err(Error::Domain(
            "unit ideal: R/I is the zero module (numerator 0)".into(),
        ));
    }
    let numerator = numerator_rec(ideal);
    let codim = numerator.vanishing_order_at_one();
    let mut h = numerator.clone();
    for _ in 0..codim {
        h = h.div_one_minus_t().expect("vanishing order counts exact divisions");
    }
    let multiplicity = h.eval_at_one();
    debug_assert!(multiplicity.is_positive());
    Ok(HilbertData {
        numerator,
        ambient_n: ideal.ambient_n(),
        dim: ideal.ambient_n() - codim,
        codim,
        multiplicity,
        h_vector: h.coeffs().to_vec(),
    })
}

/// Recursion entry point on a raw generating set (minimalized first).
pub fn numerator_from_generators(n: usize, gens: &[Monomial]) -> Result<IntPoly> {
    let ideal = MonomialIdeal::minimalize(n, gens.to_vec())?;
    if ideal.is_unit() {
        return Ok(IntPoly::zero());
    }
    Ok(numerator_rec(&ideal))
}

fn numerator_rec(ideal: &MonomialIdeal) -> IntPoly {
    let gens = ideal.generators();
    match gens.len() {
        0 => IntPoly::one(),
        1 => IntPoly::one().sub(&IntPoly::term(BigInt::one(), gens[0].total_degree() as usize)),
        _ => {
            let g = &gens[pivot_index(ideal)];
            let rest: Vec<Monomial> = gens.iter().filter(|&h| h != g).cloned().collect();
            let without = MonomialIdeal::minimalize(ideal.ambient_n(), rest)
                .expect("subset of a valid generating set");
            let colon = without
                .colon_monomial(g)
                .expect("same ambient ring by construction");
            let shifted = numerator_rec(&colon).shift(g.total_degree() as usize);
            numerator_rec(&without).sub(&shifted)
        }
    }
}

/// Pivot heuristic: pick the most frequent variable, then the generator
/// with its highest power (grlex-largest on ties).
fn pivot_index(ideal: &MonomialIdeal) -> usize {
    let n = ideal.ambient_n();
    let gens = ideal.generators();
    let freq: Vec<usize> = (0..n)
        .map(|v| gens.iter().filter(|g| g.exponent(v) > 0).count())
        .collect();
    let v = (0..n).max_by_key(|&v| freq[v]).unwrap_or(0);
    gens.iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| {
            a.exponent(v)
                .cmp(&b.exponent(v))
                .then_with(|| a.cmp(b))
        })
        .map(|(k, _)| k)
        .expect("at least two generators")
}

/// `dim_k (R/I)_d` by counting standard monomials of degree `d`.
pub fn hilbert_function(ideal: &MonomialIdeal, d: i64) -> BigInt {
    if d < 0 || ideal.is_unit() {
        return BigInt::zero();
    }
    let n = ideal.ambient_n();
    if n == 0 {
        return if d == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let mut count = BigInt::zero();
    let mut prefix = vec![0u32; n];
    count_standard(ideal, d as u32, 0, &mut prefix, &mut count);
    count
}

fn count_standard(
    ideal: &MonomialIdeal,
    remaining: u32,
    var: usize,
    prefix: &mut Vec<u32>,
    count: &mut BigInt,
) {
    let n = ideal.ambient_n();
    // prune: if the partial monomial already lies in I, so do all completions
    if ideal
        .contains(&Monomial::new(prefix.clone()))
        .expect("same ambient")
    {
        return;
    }
    if var + 1 == n {
        prefix[var] = remaining;
        if !ideal
            .contains(&Monomial::new(prefix.clone()))
            .expect("same ambient")
        {
            *count += 1;
        }
        prefix[var] = 0;
        return;
    }
    for e in 0..=remaining {
        prefix[var] = e;
        count_standard(ideal, remaining - e, var + 1, prefix, count);
    }
    prefix[var] = 0;
}

/// Codimension and multiplicity of a rank-zero module from its Betti
/// table, via the alternating power sums
///
///   P_k = sum_i (-1)^i sum_j beta_{ij} j^k.
///
/// The least `k >= 1` with `P_k != 0` is the codimension `c`, and
/// `e = (-1)^c P_c / c!` must come out a positive integer.
pub fn multiplicity_from_betti(table: &BettiTable, n: usize) -> Result<(usize, BigRational)> {
    let rank = table.alternating_rank();
    if !rank.is_zero() {
        return Err(Error::Domain(format!(
            "table has rank {rank}; only torsion (rank 0) modules have a power-sum multiplicity"
        )));
    }
    for k in 1..=n {
        let mut p = BigInt::zero();
        for (i, j, beta) in table.entries() {
            let term = BigInt::from(beta) * BigInt::from(j).pow(k as u32);
            if i % 2 == 0 {
                p += term;
            } else {
                p -= term;
            }
        }
        if !p.is_zero() {
            let signed = if k % 2 == 0 { p } else { -p };
            let e = BigRational::new(signed, factorial(k));
            if !e.is_integer() || !e.is_positive() {
                return Err(Error::Inconsistent(format!(
                    "power sum at k = {k} gives non-positive-integer multiplicity {e}"
                )));
            }
            return Ok((k, e));
        }
    }
    Err(Error::Inconsistent(format!(
        "all power sums vanish through k = {n}; degenerate table"
    )))
}
