//! Seeded random corpora and the cross-check invariants run on them.
//!
//! Every generator draws from a caller-supplied `ChaCha20Rng`, so equal
//! seeds give byte-identical instances and verdicts.

use num::{BigRational, One};
use rand::Rng;
use rand_chacha::ChaCha20Rng;
use serde_json::{json, Value};

use crate::betti::{betti_koszul, betti_taylor_guarded, stats, TAYLOR_MAX_GENERATORS};
use crate::checker::{check_cyclic, check_module, check_quasipure, vandermonde_identity};
use crate::cone::{bdl_hypotheses, cancel_splittings, cone_basic_double_link, cone_hypersurface, ResolutionShape};
use crate::determinantal::{
    degree_nested, degree_recursive, det_check_conjecture, en_betti_table, en_extremal_shifts,
    DegreeMatrix,
};
use crate::error::Result;
use crate::hilbert::{hilbert_function, hilbert_numerator, multiplicity_from_betti};
use crate::io::monomial_str;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poly::IntPoly;

#[derive(Clone, Copy, Debug)]
pub struct CorpusLimits {
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_deg: u32,
}

impl Default for CorpusLimits {
    fn default() -> Self {
        CorpusLimits {
            max_vars: 4,
            max_gens: 8,
            max_deg: 6,
        }
    }
}

fn random_monomial(rng: &mut ChaCha20Rng, n: usize, max_deg: u32) -> Monomial {
    let deg = rng.gen_range(1..=max_deg);
    let mut exps = vec![0u32; n];
    for _ in 0..deg {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// A random proper nonzero monomial ideal within the limits.
pub fn random_ideal(rng: &mut ChaCha20Rng, limits: &CorpusLimits) -> MonomialIdeal {
    loop {
        let n = rng.gen_range(2..=limits.max_vars);
        let count = rng.gen_range(1..=limits.max_gens);
        let gens: Vec<Monomial> = (0..count).map(|_| random_monomial(rng, n, limits.max_deg)).collect();
        let ideal = MonomialIdeal::minimalize(n, gens).expect("same ambient by construction");
        if ideal.is_proper_nonzero() {
            return ideal;
        }
    }
}

/// A random valid degree matrix with `t <= max_t`, `c <= max_c`, and
/// entries bounded by `max_entry`.
pub fn random_degree_matrix(
    rng: &mut ChaCha20Rng,
    max_t: usize,
    max_c: usize,
    max_entry: i64,
) -> DegreeMatrix {
    loop {
        let t = rng.gen_range(1..=max_t);
        let c = rng.gen_range(1..=max_c);
        let b: Vec<i64> = (0..t).map(|_| rng.gen_range(0..=2)).collect();
        let hi = 3 + max_entry;
        let d: Vec<i64> = (0..t + c - 1).map(|_| rng.gen_range(3..=hi)).collect();
        if let Ok(dm) = DegreeMatrix::from_twists(b, d) {
            let max = dm.grid().iter().flatten().copied().max().unwrap();
            if max <= max_entry {
                return dm;
            }
        }
    }
}

/// A monomial basic double link `J_1 = I + L * J` with `L = x_v^d`, the
/// variable `v` avoiding the support of `I`, `codim I + 1 = codim J =
/// codim J_1`, and generator counts small enough for direct computation.
#[derive(Clone, Debug)]
pub struct BdlInstance {
    pub i: MonomialIdeal,
    pub j: MonomialIdeal,
    pub j1: MonomialIdeal,
    pub d: u32,
    pub codim_i: usize,
}

pub fn random_bdl(rng: &mut ChaCha20Rng, limits: &CorpusLimits) -> BdlInstance {
    loop {
        let n = rng.gen_range(3..=limits.max_vars.max(3));
        let v = rng.gen_range(0..n);
        // I lives in the variables other than v
        let gi = rng.gen_range(1..=3);
        let gens_i: Vec<Monomial> = (0..gi)
            .map(|_| {
                let mut m = random_monomial(rng, n, limits.max_deg.min(4));
                while m.exponent(v) > 0 {
                    m = random_monomial(rng, n, limits.max_deg.min(4));
                }
                m
            })
            .collect();
        let Ok(ideal_i) = MonomialIdeal::minimalize(n, gens_i) else { continue };
        if !ideal_i.is_proper_nonzero() {
            continue;
        }
        let Ok(h_i) = hilbert_numerator(&ideal_i) else { continue };
        let c = h_i.codim;
        if c == 0 || c + 1 > n {
            continue;
        }
        // J adds one or two more generators, often involving x_v
        let extra = rng.gen_range(1..=2);
        let extras: Vec<Monomial> = (0..extra)
            .map(|_| random_monomial(rng, n, limits.max_deg.min(4)))
            .collect();
        let Ok(extra_ideal) = MonomialIdeal::minimalize(n, extras) else { continue };
        let Ok(ideal_j) = ideal_i.sum(&extra_ideal) else { continue };
        if !ideal_j.is_proper_nonzero() {
            continue;
        }
        // keep the generators of I minimal inside J, so that shift
        // coincidences between the twisted blocks are genuine splits
        if !ideal_i
            .generators()
            .iter()
            .all(|g| ideal_j.generators().contains(g))
        {
            continue;
        }
        let Ok(h_j) = hilbert_numerator(&ideal_j) else { continue };
        if h_j.codim != c + 1 {
            continue;
        }
        let d = rng.gen_range(1..=3u32);
        let link = MonomialIdeal::minimalize(n, vec![Monomial::var_pow(v, d, n)])
            .expect("one generator");
        let Ok(lj) = link.product(&ideal_j) else { continue };
        let Ok(j1) = ideal_i.sum(&lj) else { continue };
        let Ok(h_j1) = hilbert_numerator(&j1) else { continue };
        if h_j1.codim != c + 1 || j1.num_generators() > 10 {
            continue;
        }
        return BdlInstance {
            i: ideal_i,
            j: ideal_j,
            j1,
            d,
            codim_i: c,
        };
    }
}

/// A hypersurface section `J_1 = I + (F)` with `I : F = I`.
#[derive(Clone, Debug)]
pub struct HypersurfaceInstance {
    pub i: MonomialIdeal,
    pub f: Monomial,
    pub j1: MonomialIdeal,
}

pub fn random_hypersurface(rng: &mut ChaCha20Rng, limits: &CorpusLimits) -> HypersurfaceInstance {
    loop {
        let ideal_i = random_ideal(rng, &CorpusLimits {
            max_gens: limits.max_gens.min(5),
            ..*limits
        });
        let n = ideal_i.ambient_n();
        let Ok(h) = hilbert_numerator(&ideal_i) else { continue };
        if h.codim >= n {
            continue;
        }
        let f = random_monomial(rng, n, limits.max_deg.min(4));
        let Ok(colon) = ideal_i.colon_monomial(&f) else { continue };
        if colon != ideal_i {
            continue;
        }
        let Ok(fi) = MonomialIdeal::minimalize(n, vec![f.clone()]) else { continue };
        let Ok(j1) = ideal_i.sum(&fi) else { continue };
        if !j1.is_proper_nonzero() || j1.num_generators() > 10 {
            continue;
        }
        return HypersurfaceInstance { i: ideal_i, f, j1 };
    }
}

/// Per-instance verdict: the JSON line plus an overall pass flag.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub ok: bool,
    pub json: Value,
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn gens_json(ideal: &MonomialIdeal) -> Value {
    let names = default_names(ideal.ambient_n());
    Value::Array(
        ideal
            .generators()
            .iter()
            .map(|g| Value::String(monomial_str(g, &names)))
            .collect(),
    )
}

/// Runs every ideal-level cross-check: the two Betti algorithms agree,
/// the alternating table polynomial equals the Hilbert numerator, the
/// power sums reproduce codimension and multiplicity, the Hilbert
/// function matches the series expansion, and the bound reports behave.
pub fn check_ideal_instance(ideal: &MonomialIdeal) -> Result<Verdict> {
    let n = ideal.ambient_n();
    let h = hilbert_numerator(ideal)?;
    let table = betti_koszul(ideal)?;
    let st = stats(&table);

    let euler_ok = table.alternating_numerator()? == h.numerator;

    let taylor_ok = if ideal.num_generators() <= TAYLOR_MAX_GENERATORS {
        Some(betti_taylor_guarded(ideal, TAYLOR_MAX_GENERATORS)? == table)
    } else {
        None
    };

    let (psum_codim, psum_e) = multiplicity_from_betti(&table, n)?;
    let power_sums_ok =
        psum_codim == h.codim && psum_e == BigRational::from(h.multiplicity.clone());

    let depth = (st.regularity.max(0) as usize) + n;
    let series = h.numerator.series_div_geom(n, depth + 1);
    let hf_ok = (0..=depth).all(|d| hilbert_function(ideal, d as i64) == series[d]);

    let cyclic = check_cyclic(&table, &h)?;
    let cm = table.pd() as usize == h.codim;
    // the upper bound is expected unconditionally; the lower only for CM
    let bounds_ok = cyclic.upper_holds && (!cm || cyclic.lower_holds) && cyclic.findings.is_empty();

    let module = check_module(&table, n)?;
    let module_matches_cyclic = module.upper_value == cyclic.upper_value;

    let vandermonde = if cm {
        Some(vandermonde_identity(&table, &cyclic.e_value)?)
    } else {
        None
    };
    let quasipure_ok = if cm && st.is_quasi_pure {
        let qp = check_quasipure(&table, n)?;
        Some(qp.lower_holds && qp.upper_holds && qp.findings.is_empty())
    } else {
        None
    };

    let ok = euler_ok
        && taylor_ok.unwrap_or(true)
        && power_sums_ok
        && hf_ok
        && bounds_ok
        && module_matches_cyclic
        && vandermonde.unwrap_or(true)
        && quasipure_ok.unwrap_or(true);

    Ok(Verdict {
        ok,
        json: json!({
            "kind": "ideal",
            "vars": n,
            "gens": gens_json(ideal),
            "codim": h.codim,
            "e": h.multiplicity.to_string(),
            "pd": table.pd(),
            "cohen_macaulay": cm,
            "euler_matches_hilbert": euler_ok,
            "koszul_eq_taylor": taylor_ok,
            "power_sums_ok": power_sums_ok,
            "hilbert_function_ok": hf_ok,
            "upper_holds": cyclic.upper_holds,
            "lower_holds": cyclic.lower_holds,
            "vandermonde_ok": vandermonde,
            "quasipure_ok": quasipure_ok,
            "ok": ok,
        }),
    })
}

/// Degree-matrix cross-checks: the two degree evaluations agree with
/// the table multiplicity, the shift recursions match the table, the
/// table numerator carries the full codimension factor, and sharpness
/// classifies by grid constancy.
pub fn check_matrix_instance(dm: &DegreeMatrix) -> Result<Verdict> {
    let nested = degree_nested(dm);
    let recursive = degree_recursive(dm);
    let table = en_betti_table(dm)?;
    let n = dm.rows() + dm.codim() + 2;
    let (codim, e) = multiplicity_from_betti(&table, n)?;
    let three_way = nested == recursive
        && codim == dm.codim()
        && e == BigRational::from(nested.clone());

    let st = stats(&table);
    let (m, cap) = en_extremal_shifts(dm);
    let shifts_ok = st.min_shifts == m && st.max_shifts == cap;

    let numerator = table.alternating_numerator()?;
    let codim_factor_ok = numerator.vanishing_order_at_one() == dm.codim();

    let report = det_check_conjecture(dm);
    let bounds_ok = report.lower_holds && report.upper_holds && report.findings.is_empty();

    let ok = three_way && shifts_ok && codim_factor_ok && bounds_ok;
    Ok(Verdict {
        ok,
        json: json!({
            "kind": "degree_matrix",
            "t": dm.rows(),
            "c": dm.codim(),
            "b": dm.row_twists(),
            "d": dm.col_twists(),
            "degree": nested.to_string(),
            "three_way_ok": three_way,
            "shifts_match_table": shifts_ok,
            "codim_factor_ok": codim_factor_ok,
            "bounds_ok": bounds_ok,
            "sharp": report.lower_sharp && report.upper_sharp,
            "ok": ok,
        }),
    })
}

/// Basic-double-link cross-checks: the cancelled cone reproduces the
/// direct table, the Hilbert numerators satisfy the additivity identity
/// `num(J_1) = t^d num(J) + (1 - t^d) num(I)`, the multiplicities add
/// as `e(J_1) = d e(I) + e(J)`, and the shift comparisons with `I` hold.
pub fn check_bdl_instance(inst: &BdlInstance) -> Result<Verdict> {
    let shape_i = ResolutionShape::from_betti(&betti_koszul(&inst.i)?);
    let shape_j = ResolutionShape::from_betti(&betti_koszul(&inst.j)?);
    let direct = betti_koszul(&inst.j1)?;
    let cone = cone_basic_double_link(&shape_i, &shape_j, inst.d)?;
    let cancelled = cancel_splittings(&cone)?;
    let cone_matches = cancelled.shape.to_betti()? == direct;

    let num_i = hilbert_numerator(&inst.i)?;
    let num_j = hilbert_numerator(&inst.j)?;
    let num_j1 = hilbert_numerator(&inst.j1)?;
    let td = IntPoly::term(num::BigInt::one(), inst.d as usize);
    let additive = td
        .mul(&num_j.numerator)
        .add(&num_i.numerator)
        .sub(&td.mul(&num_i.numerator));
    let hilbert_additivity_ok = additive == num_j1.numerator;

    let mult_additivity_ok = num_j1.multiplicity
        == num::BigInt::from(inst.d) * &num_i.multiplicity + &num_j.multiplicity;

    let st_i = stats(&betti_koszul(&inst.i)?);
    let st_j = stats(&betti_koszul(&inst.j)?);
    let st_j1 = stats(&direct);
    let c = inst.codim_i;
    // no summand of the untwisted block splits off, so per column
    // 1..=c the link can only lower minima and raise maxima
    let within = |k: usize, v: &[i64]| k < v.len();
    let shift_facts_ok = (1..=c).all(|k| {
        within(k, &st_j1.min_shifts)
            && within(k, &st_i.min_shifts)
            && st_j1.min_shifts[k] <= st_i.min_shifts[k]
            && st_j1.max_shifts[k] >= st_i.max_shifts[k]
    });

    let hyp = bdl_hypotheses(&st_i, &st_j, &st_j1, inst.d, c).ok();
    let upper_from_i_all = hyp.as_ref().map(|h| h.upper_from_i.iter().all(|&b| b));

    // cancellation is only claimed to reach the minimal table when it
    // was unambiguous; ambiguous cones may over-cancel
    let cone_ok = !cancelled.unambiguous || cone_matches;
    let ok = cone_ok && hilbert_additivity_ok && mult_additivity_ok && shift_facts_ok;
    Ok(Verdict {
        ok,
        json: json!({
            "kind": "basic_double_link",
            "vars": inst.i.ambient_n(),
            "i_gens": gens_json(&inst.i),
            "j_gens": gens_json(&inst.j),
            "j1_gens": gens_json(&inst.j1),
            "d": inst.d,
            "codim_i": c,
            "cone_matches_direct": cone_matches,
            "cancellation_unambiguous": cancelled.unambiguous,
            "hilbert_additivity_ok": hilbert_additivity_ok,
            "multiplicity_additivity_ok": mult_additivity_ok,
            "shift_facts_ok": shift_facts_ok,
            "upper_from_i_all_hold": upper_from_i_all,
            "ok": ok,
        }),
    })
}

/// Hypersurface-section cross-checks: the cone is already minimal and
/// equals the direct table, and `e(J_1) = d * e(I)` when `I` has
/// positive dimension.
pub fn check_hypersurface_instance(inst: &HypersurfaceInstance) -> Result<Verdict> {
    let shape_i = ResolutionShape::from_betti(&betti_koszul(&inst.i)?);
    let d = inst.f.total_degree() as u32;
    let cone = cone_hypersurface(&shape_i, d)?;
    let direct = betti_koszul(&inst.j1)?;
    let cone_matches = cone.to_betti()? == direct;

    let e_i = hilbert_numerator(&inst.i)?.multiplicity;
    let e_j1 = hilbert_numerator(&inst.j1)?.multiplicity;
    let mult_ok = e_j1 == num::BigInt::from(d) * &e_i;

    let ok = cone_matches && mult_ok;
    Ok(Verdict {
        ok,
        json: json!({
            "kind": "hypersurface",
            "vars": inst.i.ambient_n(),
            "i_gens": gens_json(&inst.i),
            "f": monomial_str(&inst.f, &default_names(inst.i.ambient_n())),
            "j1_gens": gens_json(&inst.j1),
            "cone_matches_direct": cone_matches,
            "multiplicity_scales": mult_ok,
            "ok": ok,
        }),
    })
}

/// One corpus instance per index, cycling through the four kinds.
pub fn run_instance(rng: &mut ChaCha20Rng, index: u64, limits: &CorpusLimits) -> Result<Verdict> {
    let mut verdict = match index % 4 {
        0 => check_ideal_instance(&random_ideal(rng, limits))?,
        1 => check_matrix_instance(&random_degree_matrix(rng, 4, 4, 4))?,
        2 => check_bdl_instance(&random_bdl(rng, limits))?,
        _ => check_hypersurface_instance(&random_hypersurface(rng, limits))?,
    };
    if let Value::Object(map) = &mut verdict.json {
        map.insert("index".to_string(), json!(index));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generators_are_deterministic() {
        let limits = CorpusLimits::default();
        let mut a = ChaCha20Rng::seed_from_u64(7);
        let mut b = ChaCha20Rng::seed_from_u64(7);
        for _ in 0..5 {
            assert_eq!(random_ideal(&mut a, &limits), random_ideal(&mut b, &limits));
        }
        let mut a = ChaCha20Rng::seed_from_u64(9);
        let mut b = ChaCha20Rng::seed_from_u64(9);
        assert_eq!(
            random_degree_matrix(&mut a, 4, 4, 4),
            random_degree_matrix(&mut b, 4, 4, 4)
        );
    }

    #[test]
    fn small_corpus_passes() {
        let limits = CorpusLimits::default();
        let mut rng = ChaCha20Rng::seed_from_u64(42);
        for index in 0..12 {
            let v = run_instance(&mut rng, index, &limits).unwrap();
            assert!(v.ok, "instance {index} failed: {}", v.json);
        }
    }

    #[test]
    fn bdl_instances_satisfy_preconditions() {
        let limits = CorpusLimits::default();
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        for _ in 0..5 {
            let inst = random_bdl(&mut rng, &limits);
            let hi = hilbert_numerator(&inst.i).unwrap();
            let hj = hilbert_numerator(&inst.j).unwrap();
            let hj1 = hilbert_numerator(&inst.j1).unwrap();
            assert_eq!(hi.codim + 1, hj.codim);
            assert_eq!(hj.codim, hj1.codim);
        }
    }

    #[test]
    fn hypersurface_instances_satisfy_colon_condition() {
        let limits = CorpusLimits::default();
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for _ in 0..5 {
            let inst = random_hypersurface(&mut rng, &limits);
            assert_eq!(inst.i.colon_monomial(&inst.f).unwrap(), inst.i);
        }
    }
}
