//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Everything is exact arithmetic; there are no tolerances anywhere.

use std::collections::HashMap;
use std::time::Instant;

use num::{BigRational, One, Signed, Zero};

use linkhom::hall::{d_k, q_power, wedge_poly};
use linkhom::labeled::labeled_gf;
use linkhom::laurent::{poly_t_minus_one, rat_int, LaurentPoly, Mono, Var};
use linkhom::operators::{char_fn, VElement};
use linkhom::partition::{partitions_of, Partition};
use linkhom::paths::{enumerate_tuples, schroeder_path, VWPair};
use linkhom::ratfun::RationalFunction;
use linkhom::recursion::{
    check_conjecture, l_enum_with_cache, realizable_pairs, verify_corollary, verify_labeled_sum,
    Engine,
};
use linkhom::symfunc::{gen_e, SymFunc};

fn report(criterion: &str, ok: bool) {
    println!(
        "ACCEPTANCE {criterion}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion failed: {criterion}");
}

/// Criterion 1: the worked example end to end, in under a second.
#[test]
fn acceptance_1_golden_example() {
    let start = Instant::now();
    let vw = VWPair::parse("000110", "0110").unwrap();
    let tuples = enumerate_tuples(&vw, 4);
    let mut ok = tuples.len() == 2;
    ok &= tuples[0].area() == 0 && tuples[1].area() == 1;
    ok &= tuples.iter().all(|t| t.pdinv() == 4);
    let words: Vec<String> = tuples
        .iter()
        .map(|t| schroeder_path(t).unwrap().word())
        .collect();
    ok &= words == ["VDEEE", "DDEE"];
    let mut engine = Engine::new(4);
    let l = engine.l_rec(&vw).unwrap();
    ok &= l.to_string() == "-1*t^-2*y1*p[1] + 1*q*t^-3*y1*y2";
    let elapsed = start.elapsed();
    ok &= elapsed.as_secs_f64() < 1.0;
    report(
        &format!("1 golden example ({} ms)", elapsed.as_millis()),
        ok,
    );
}

/// Criterion 2: recursion vs enumeration for every realizable pair with
/// M + N <= 8, q-truncated at order 4.
#[test]
fn acceptance_2_oracle_equivalence() {
    let start = Instant::now();
    let mut pairs_checked = 0usize;
    let mut ok = true;
    for total in 2..=8usize {
        for m in 1..total {
            let n = total - m;
            let bound = n as u32;
            let mut engine = Engine::new(bound);
            let mut chi_cache = HashMap::new();
            for vw in realizable_pairs(m, n) {
                let exact = engine.l_rec(&vw).unwrap();
                let truncated = exact.q_truncate(4).unwrap();
                let by_sum = l_enum_with_cache(&vw, 4, bound, &mut chi_cache).unwrap();
                if truncated != by_sum {
                    eprintln!("oracle mismatch at {vw}");
                    ok = false;
                }
                pairs_checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ok &= pairs_checked > 400;
    ok &= elapsed.as_secs_f64() < 300.0;
    report(
        &format!(
            "2 oracle equivalence ({pairs_checked} pairs, {:.1} s)",
            elapsed.as_secs_f64()
        ),
        ok,
    );
}

/// Criterion 3: the specialization bridge on every realizable pair with
/// M, N <= 4.
#[test]
fn acceptance_3_corollary_bridge() {
    let start = Instant::now();
    let mut engine = Engine::new(4);
    let mut pairs_checked = 0usize;
    let mut ok = true;
    for m in 1..=4usize {
        for n in 1..=4usize {
            for vw in realizable_pairs(m, n) {
                if !verify_corollary(&mut engine, &vw).unwrap() {
                    eprintln!("bridge failed at {vw}");
                    ok = false;
                }
                pairs_checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ok &= pairs_checked > 100;
    ok &= elapsed.as_secs_f64() < 120.0;
    report(
        &format!(
            "3 specialization bridge ({pairs_checked} pairs, {:.1} s)",
            elapsed.as_secs_f64()
        ),
        ok,
    );
}

/// Criterion 4: labeled sums match the recursion in N variables at q-order 3.
#[test]
fn acceptance_4_labeled_sums() {
    let mut ok = true;
    for (m, n) in [(1usize, 1usize), (2, 2), (2, 3), (3, 2), (2, 4)] {
        if !verify_labeled_sum(m, n, 3).unwrap() {
            eprintln!("labeled sum mismatch at ({m}, {n})");
            ok = false;
        }
    }
    report("4 labeled generating function", ok);
}

/// Criterion 5: the operator side matches +-(1-q)^k t^C times the path side
/// for the listed torus parameters, with the hand-derived sign and constant
/// at (1, 1). A mismatch anywhere must localize its first offending
/// coefficient.
#[test]
fn acceptance_5_conjecture_checks() {
    let mut ok = true;
    for (m, n) in [(1usize, 1usize), (1, 2), (2, 1), (2, 3), (3, 2), (2, 2), (2, 4)] {
        let report_ = check_conjecture(m, n, 4).unwrap();
        if !report_.matched {
            let loc = report_
                .mismatch
                .as_ref()
                .map(|mm| format!("first differing coefficient at p{}", mm.partition))
                .unwrap_or_else(|| "no localization".into());
            eprintln!("conjecture mismatch at ({m}, {n}): {loc}");
            ok = false;
            continue;
        }
        if (m, n) == (1, 1) && (report_.ratio_sign != -1 || report_.ratio_c != 0) {
            eprintln!(
                "(1,1) expects sign - and C = 0, got sign {} C {}",
                report_.ratio_sign, report_.ratio_c
            );
            ok = false;
        }
    }
    report("5 operator-vs-paths comparison", ok);
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// A random level-3 element of total degree at most 3 with small integer
/// coefficients on y-monomials times power sums.
fn random_level3(rng: &mut XorShift, bound: u32) -> VElement {
    let mut inner = SymFunc::zero(bound);
    for _ in 0..4 {
        let e1 = rng.below(3) as i64;
        let e2 = rng.below(3) as i64;
        let e3 = rng.below(2) as i64;
        let ydeg = (e1 + e2 + e3) as u32;
        if ydeg > 3 {
            continue;
        }
        let lam_budget = 3 - ydeg;
        let lam = match rng.below(4) {
            0 => Partition::empty(),
            1 if lam_budget >= 1 => Partition::single(1),
            2 if lam_budget >= 2 => Partition::single(2),
            3 if lam_budget >= 2 => Partition::from_parts(vec![1, 1]),
            _ => Partition::empty(),
        };
        let coeff = rng.below(9) as i64 - 4;
        let mono = Mono::from_pairs(&[
            (Var::Y(1), e1),
            (Var::Y(2), e2),
            (Var::Y(3), e3),
            (Var::T, rng.below(2) as i64),
        ]);
        inner.add_term(lam, RationalFunction::from_mono(mono, rat_int(coeff)));
    }
    VElement::from_symfunc(inner, 3).unwrap()
}

/// Criterion 6: the operator identity suite.
#[test]
fn acceptance_6_operator_identities() {
    let bound = 6;
    let mut rng = XorShift(0x517cc1b727220a95);
    let mut ok = true;

    for sample in 0..50 {
        let f = random_level3(&mut rng, bound);

        // Quadratic relation (T_i - 1)(T_i + t) = 0 for i = 1, 2.
        for i in 1..=2u32 {
            let tf = f.hecke_t(i).unwrap();
            let ttf = tf.hecke_t(i).unwrap();
            let lhs = &(&ttf + &tf.scale(&RationalFunction::from_poly(poly_t_minus_one())))
                - &f.scale(&RationalFunction::from_poly(LaurentPoly::var(Var::T)));
            if !lhs.is_zero() {
                eprintln!("quadratic relation failed at sample {sample}, i = {i}");
                ok = false;
            }
        }

        // Braid relation T_1 T_2 T_1 = T_2 T_1 T_2.
        let t1t2t1 = f
            .hecke_t(1)
            .unwrap()
            .hecke_t(2)
            .unwrap()
            .hecke_t(1)
            .unwrap();
        let t2t1t2 = f
            .hecke_t(2)
            .unwrap()
            .hecke_t(1)
            .unwrap()
            .hecke_t(2)
            .unwrap();
        if t1t2t1 != t2t1t2 {
            eprintln!("braid relation failed at sample {sample}");
            ok = false;
        }

        // T_i fixes elements symmetric under the swap.
        let sym = &f + &f.swap_y(1);
        if sym.hecke_t(1).unwrap() != sym {
            eprintln!("swap-symmetric element moved at sample {sample}");
            ok = false;
        }

        // (t-1) d_= f = d_- d_+ f - d_+ d_- f, exactly.
        let deq = f.d_eq().unwrap();
        let lhs = deq.scale(&RationalFunction::from_poly(poly_t_minus_one()));
        let rhs = &f.d_plus().unwrap().d_minus().unwrap()
            - &f.d_minus().unwrap().d_plus().unwrap();
        if lhs != rhs {
            eprintln!("mixing-operator identity failed at sample {sample}");
            ok = false;
        }
    }

    // D_n(1) = (-1)^n e_n for n <= 4.
    for n in 1..=4u32 {
        let out = d_k(&SymFunc::one(4), n).unwrap();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        if out != gen_e(n, 4).unwrap().scale(&RationalFunction::from_int(sign)) {
            eprintln!("Macdonald operator value failed at n = {n}");
            ok = false;
        }
    }

    // Commutator numerators divide exactly by (1-q)(1-t): re-multiply and
    // compare for the first nontrivial splittings.
    let d = 3;
    let one = SymFunc::one(d);
    let comm23 = &d_k(&d_k(&one, 1).unwrap(), 2).unwrap() - &d_k(&d_k(&one, 2).unwrap(), 1).unwrap();
    let q23 = q_power(2, 3, 1, d).unwrap();
    if q23.scale_poly(&wedge_poly()) != comm23 {
        eprintln!("commutator division was not exact at (2, 3)");
        ok = false;
    }
    for (m, n) in [(3u32, 2u32), (5, 2), (3, 4), (5, 3)] {
        if q_power(m, n, 1, n).is_err() {
            eprintln!("commutator division failed at ({m}, {n})");
            ok = false;
        }
    }

    report("6 operator identity suite", ok);
}

/// Criterion 7: p(0^M, 0^N) expands with non-negative integer coefficients
/// in q up to order 6, Laurent in t, polynomial in a.
#[test]
fn acceptance_7_ring_membership() {
    let mut ok = true;
    for m in 1..=4usize {
        for n in 1..=4usize {
            let mut engine = Engine::new(n as u32);
            let p = engine.p_rec(&VWPair::zeros(m, n)).unwrap();
            let series = p.q_truncate(6).unwrap();
            for (mono, coeff) in series.terms() {
                let nonneg_int = coeff.denom().is_one() && !coeff.is_negative();
                let q_exp = mono.exp_of(Var::Q);
                let a_exp = mono.exp_of(Var::A);
                let z_used = mono.exp_of(Var::Z) != 0
                    || mono.exps().iter().any(|&(v, _)| matches!(v, Var::Y(_)));
                if !nonneg_int || q_exp < 0 || q_exp > 6 || a_exp < 0 || z_used {
                    eprintln!("ring membership violated at ({m}, {n}): {mono} -> {coeff}");
                    ok = false;
                }
            }
            // Sanity: the series is not trivially empty.
            if series.is_zero() {
                eprintln!("empty expansion at ({m}, {n})");
                ok = false;
            }
        }
    }
    report("7 p-recursion ring membership", ok);
}

/// Supporting check for criterion 2's pair census: the realizable-pair
/// generator agrees with brute-force realizability on small shapes.
#[test]
fn realizable_pair_counts_are_sane() {
    let pairs = realizable_pairs(2, 2);
    assert!(pairs.iter().all(|p| p.is_realizable()));
    assert!(pairs.len() >= 5);
    // and ell is consistent between v and w by construction
    for p in &pairs {
        let _ = p.ell();
    }
}

/// Exactness guard used throughout: clearing denominators in a q-expansion
/// reproduces the rational function (spot check on a p-value).
#[test]
fn q_expansion_consistency_spot_check() {
    let mut engine = Engine::new(2);
    let p = engine.p_rec(&VWPair::zeros(2, 2)).unwrap();
    // (1-q)^2 p(00,00) is a Laurent polynomial; its truncated q-expansion
    // must match the truncation of p times (1-q)^2.
    let cleared = p.scale_poly(&linkhom::laurent::poly_one_minus_q().pow(2));
    assert!(cleared.is_polynomial());
    let direct = cleared.q_truncate(6).unwrap();
    let via_series = {
        let series = p.q_truncate(8).unwrap();
        let prod = &series * &linkhom::laurent::poly_one_minus_q().pow(2);
        prod.truncate_var(Var::Q, 6)
    };
    assert_eq!(direct, via_series);
}

// keep BigRational helpers referenced
#[allow(dead_code)]
fn unused_helpers() {
    let _ = BigRational::one();
    let _ = BigRational::zero();
}
