//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test -p multcheck-cli --test acceptance -- --nocapture`
//! to see the lines.

use std::io::Write;
use std::process::Command;

use num::{BigInt, BigRational};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use multcheck::corpus::{
    check_bdl_instance, check_hypersurface_instance, random_bdl, random_degree_matrix,
    random_hypersurface, random_ideal, BdlInstance, CorpusLimits,
};
use multcheck::{
    bdl_hypotheses, betti_koszul, betti_taylor_guarded, cancel_splittings, check_curve,
    check_cyclic, check_dubreil, check_quasipure, cone_basic_double_link, degree_nested,
    degree_recursive, en_betti_table, hilbert_numerator, multiplicity_from_betti, sharp_family,
    stats, vandermonde_identity, CurveData, DegreeMatrix, IntPoly, Monomial, MonomialIdeal,
    ResolutionShape,
};

fn pass(number: u32, name: &str) {
    println!("acceptance criterion {number:02} ({name}): PASS");
}

fn mon(n: usize, pairs: &[(usize, u32)]) -> Monomial {
    let mut exps = vec![0; n];
    for &(i, e) in pairs {
        exps[i] += e;
    }
    Monomial::new(exps)
}

fn ideal(n: usize, gens: &[&[(usize, u32)]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(n, gens.iter().map(|g| mon(n, g)).collect()).unwrap()
}

fn skew_lines() -> MonomialIdeal {
    ideal(
        4,
        &[&[(0, 1), (1, 1)], &[(0, 1), (3, 1)], &[(1, 1), (2, 1)], &[(2, 1), (3, 1)]],
    )
}

fn corpus_ideals(count: usize) -> Vec<MonomialIdeal> {
    let limits = CorpusLimits {
        max_vars: 4,
        max_gens: 8,
        max_deg: 6,
    };
    let mut rng = ChaCha20Rng::seed_from_u64(0x6d63_0001);
    (0..count).map(|_| random_ideal(&mut rng, &limits)).collect()
}

#[test]
fn criterion_01_skew_lines_regression() {
    let i = skew_lines();
    let h = hilbert_numerator(&i).unwrap();
    assert_eq!(h.multiplicity, BigInt::from(2));
    let table = betti_koszul(&i).unwrap();
    let st = stats(&table);
    assert_eq!(st.min_shifts[1], 2);
    assert_eq!(st.min_shifts[2], 3);
    let report = check_cyclic(&table, &h).unwrap();
    assert!(!report.lower_holds, "lower bound must be violated");
    assert_eq!(report.lower_value, Some(BigRational::from(BigInt::from(3))));
    assert_eq!(report.e_value, BigRational::from(BigInt::from(2)));

    // the CLI reports the violation with exit code 1 and exact strings
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("skew.ideal");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "ring x0 x1 x2 x3\nx0*x1\nx0*x3\nx1*x2\nx2*x3").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_multcheck"))
        .args(["check-conj1", "--ideal"])
        .arg(&path)
        .arg("--json")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["lower"], "3");
    assert_eq!(v["e"], "2");
    assert_eq!(v["lower_holds"], false);
    pass(1, "skew-lines regression");
}

#[test]
fn criterion_02_link_example_table() {
    let i = ideal(3, &[&[(1, 9)], &[(2, 6)]]);
    let j = ideal(3, &[&[(0, 1)], &[(1, 9)], &[(2, 6)]]);
    let j1 = ideal(3, &[&[(0, 2)], &[(1, 9)], &[(2, 6)]]);
    let st_i = stats(&betti_koszul(&i).unwrap());
    let st_j = stats(&betti_koszul(&j).unwrap());
    let st_j1 = stats(&betti_koszul(&j1).unwrap());
    assert_eq!(&st_j.max_shifts[1..], &[9, 15, 16]);
    assert_eq!(&st_i.max_shifts[1..], &[9, 15]);
    assert_eq!(&st_j1.max_shifts[1..], &[9, 15, 17]);
    let hyp = bdl_hypotheses(&st_i, &st_j, &st_j1, 1, 2).unwrap();
    assert_eq!(hyp.upper_from_j, vec![false, false, true]);
    pass(2, "basic double link example table");
}

#[test]
fn criterion_03_sharp_family() {
    let out = Command::new(env!("CARGO_BIN_EXE_multcheck"))
        .args(["sharp-family", "--t", "12", "--d", "15"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("deg C = 12"));
    assert!(text.contains("dim K_A = 66"));
    assert!(text.contains("78 = 12 + 66"));

    for t in 2..=50u32 {
        let r = sharp_family(t, t + 1).unwrap();
        assert!(r.identity_holds, "identity fails at t = {t}");
        // m1 m2 / 2 = t (t + 1) / 2 = t + binom(t, 2), exactly
        let binom_t2 = BigInt::from(t) * BigInt::from(t - 1) / BigInt::from(2);
        assert_eq!(r.dim_ka, binom_t2);
    }
    pass(3, "sharp family pipeline");
}

#[test]
fn criterion_04_porteous() {
    let binom = |n: u64, k: u64| -> BigInt {
        let mut acc = BigInt::from(1);
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        acc
    };
    let mut cases = 0;
    for t in 1..=8usize {
        for c in 1..=8usize {
            let dm = DegreeMatrix::from_grid(vec![vec![1; c]; t]).unwrap();
            assert_eq!(
                degree_nested(&dm),
                binom((t + c - 1) as u64, c as u64),
                "t={t} c={c}"
            );
            cases += 1;
        }
    }
    assert_eq!(cases, 64);
    pass(4, "Porteous specialization");
}

#[test]
fn criterion_05_determinantal_three_way() {
    let mut rng = ChaCha20Rng::seed_from_u64(0x6d63_0005);
    for k in 0..200 {
        let dm = random_degree_matrix(&mut rng, 5, 5, 4);
        let nested = degree_nested(&dm);
        let recursive = degree_recursive(&dm);
        assert_eq!(nested, recursive, "instance {k}");
        let table = en_betti_table(&dm).unwrap();
        let n = dm.rows() + dm.codim() + 2;
        let (codim, e) = multiplicity_from_betti(&table, n).unwrap();
        assert_eq!(codim, dm.codim(), "instance {k}");
        assert_eq!(e, BigRational::from(nested), "instance {k}");
    }
    pass(5, "determinantal three-way degree agreement");
}

#[test]
fn criterion_06_power_sum_multiplicities() {
    for (k, ideal) in corpus_ideals(200).iter().enumerate() {
        let h = hilbert_numerator(ideal).unwrap();
        let table = betti_koszul(ideal).unwrap();
        let (codim, e) = multiplicity_from_betti(&table, ideal.ambient_n()).unwrap();
        assert_eq!(codim, h.codim, "instance {k}");
        assert_eq!(e, BigRational::from(h.multiplicity.clone()), "instance {k}");
    }
    pass(6, "power-sum multiplicity extraction");
}

#[test]
fn criterion_07_betti_oracle_equivalence() {
    for (k, ideal) in corpus_ideals(200).iter().enumerate() {
        assert!(ideal.num_generators() <= 10);
        let koszul = betti_koszul(ideal).unwrap();
        let taylor = betti_taylor_guarded(ideal, 12).unwrap();
        assert_eq!(koszul, taylor, "instance {k}");
    }
    pass(7, "Betti algorithm oracle equivalence");
}

#[test]
fn criterion_08_mapping_cone_fidelity() {
    let limits = CorpusLimits {
        max_vars: 4,
        max_gens: 8,
        max_deg: 6,
    };
    let mut rng = ChaCha20Rng::seed_from_u64(0x6d63_0008);
    for k in 0..50 {
        let inst = random_hypersurface(&mut rng, &limits);
        let v = check_hypersurface_instance(&inst).unwrap();
        assert!(v.ok, "hypersurface instance {k}: {}", v.json);
    }

    // the worked link example, then random monomial links restricted to
    // unambiguous cancellation, where the cone must reach the minimal table
    let example = BdlInstance {
        i: ideal(3, &[&[(1, 9)], &[(2, 6)]]),
        j: ideal(3, &[&[(0, 1)], &[(1, 9)], &[(2, 6)]]),
        j1: ideal(3, &[&[(0, 2)], &[(1, 9)], &[(2, 6)]]),
        d: 1,
        codim_i: 2,
    };
    let mut verdicts = vec![(example.clone(), check_bdl_instance(&example).unwrap())];
    let mut attempts = 0;
    while verdicts.len() < 50 {
        attempts += 1;
        assert!(attempts < 2000, "could not collect 50 unambiguous links");
        let inst = random_bdl(&mut rng, &limits);
        let v = check_bdl_instance(&inst).unwrap();
        if v.json["cancellation_unambiguous"] == true {
            verdicts.push((inst, v));
        }
    }
    for (k, (inst, v)) in verdicts.iter().enumerate() {
        // direct-table fidelity and both additivity identities
        assert!(v.ok, "link instance {k}: {}", v.json);
        assert_eq!(v.json["cone_matches_direct"], true, "link instance {k}");
        assert_eq!(v.json["hilbert_additivity_ok"], true, "link instance {k}");

        // spelled out: num(J1) = t^d num(J) + (1 - t^d) num(I)
        let num_i = hilbert_numerator(&inst.i).unwrap().numerator;
        let num_j = hilbert_numerator(&inst.j).unwrap().numerator;
        let num_j1 = hilbert_numerator(&inst.j1).unwrap().numerator;
        let td = IntPoly::term(BigInt::from(1), inst.d as usize);
        let expected = td.mul(&num_j).add(&num_i).sub(&td.mul(&num_i));
        assert_eq!(num_j1, expected, "link instance {k}");
    }

    // the cancelled example cone reproduces the direct table exactly
    let example = &verdicts[0].0;
    let cone = cone_basic_double_link(
        &ResolutionShape::from_betti(&betti_koszul(&example.i).unwrap()),
        &ResolutionShape::from_betti(&betti_koszul(&example.j).unwrap()),
        1,
    )
    .unwrap();
    let cancelled = cancel_splittings(&cone).unwrap();
    assert_eq!(
        cancelled.shape.to_betti().unwrap(),
        betti_koszul(&example.j1).unwrap()
    );
    pass(8, "mapping-cone fidelity");
}

#[test]
fn criterion_09_quasipure_and_vandermonde() {
    let mut cm_count = 0;
    for (k, ideal) in corpus_ideals(200).iter().enumerate() {
        let h = hilbert_numerator(ideal).unwrap();
        let table = betti_koszul(ideal).unwrap();
        if table.pd() as usize != h.codim {
            continue;
        }
        cm_count += 1;
        let e = BigRational::from(h.multiplicity.clone());
        assert!(
            vandermonde_identity(&table, &e).unwrap(),
            "vandermonde fails on instance {k}"
        );
        // both bounds, evaluated directly from the extremal shifts
        let st = stats(&table);
        let c = h.codim;
        let fact: BigInt = (1..=c as u64).map(BigInt::from).product();
        let lower = BigRational::new(
            (1..=c).map(|i| BigInt::from(st.min_shifts[i] - st.max_shifts[0])).product(),
            fact.clone(),
        );
        let upper = BigRational::new(
            (1..=c).map(|i| BigInt::from(st.max_shifts[i] - st.min_shifts[0])).product(),
            fact,
        );
        assert!(lower <= e && e <= upper, "bounds fail on instance {k}");
        assert_eq!(lower == e, st.is_pure, "lower sharpness vs purity, instance {k}");
        assert_eq!(upper == e, st.is_pure, "upper sharpness vs purity, instance {k}");
        if st.is_quasi_pure {
            let qp = check_quasipure(&table, ideal.ambient_n()).unwrap();
            assert!(qp.lower_holds && qp.upper_holds, "instance {k}");
            assert_eq!(qp.vandermonde_ok, Some(true), "instance {k}");
        }
    }
    assert!(cm_count > 0, "corpus produced no Cohen-Macaulay tables");

    // Huneke-Miller on equigenerated complete intersections
    for a in 1..=6u32 {
        let i = ideal(3, &[&[(0, a)], &[(1, a)], &[(2, a)]]);
        let h = hilbert_numerator(&i).unwrap();
        let st = stats(&betti_koszul(&i).unwrap());
        assert!(st.is_pure);
        let product: BigInt = (1..=3usize)
            .map(|k| BigInt::from(st.min_shifts[k] - st.min_shifts[0]))
            .product();
        assert_eq!(product / BigInt::from(6), h.multiplicity, "a = {a}");
    }
    pass(9, "quasi-pure bounds and Vandermonde identity");
}

#[test]
fn criterion_10_curve_bounds_arithmetic() {
    let skew = check_curve(&CurveData {
        deg: 2,
        m1: 2,
        m2: 3,
        cap_m1: 2,
        cap_m2: 3,
        dim_ka: 1,
    });
    assert!(skew.lower_holds && skew.upper_holds);
    assert!(skew.upper_sharp);

    let family = check_curve(&CurveData {
        deg: 12,
        m1: 12,
        m2: 13,
        cap_m1: 15,
        cap_m2: 26,
        dim_ka: 66,
    });
    assert!(family.lower_holds && family.upper_holds);
    let (strong, strong_holds) = family.strong_lower.unwrap();
    assert_eq!(strong, BigRational::from(BigInt::from(12)));
    assert!(strong_holds);

    assert!(check_dubreil(4, 2, 1));
    pass(10, "curve bounds arithmetic");
}
