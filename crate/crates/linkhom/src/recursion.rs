//! The two memoized recursions — the graded rank p(v, w) and its symmetric
//! function lift L(v, w) — together with the enumeration oracle for L, the
//! specialization bridge between them, the labeled-sum comparison, and the
//! operator-vs-paths conjecture checker.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::hall::q_power;
use crate::labeled::labeled_gf;
use crate::laurent::{rat_int, LaurentPoly, Mono, Var};
use crate::operators::{char_fn, VElement};
use crate::partition::Partition;
use crate::paths::{enumerate_tuples, schroeder_path, Symbol, VWPair};
use crate::ratfun::{DenomAtom, RationalFunction};
use crate::symfunc::{psi, SymFunc};
use crate::xpoly::XPoly;

const DEFAULT_MEMO_LIMIT: usize = 1 << 20;

/// Memoized evaluator for the two recursions. One engine carries one degree
/// bound; every cached value shares it.
pub struct Engine {
    degree_bound: u32,
    memo_limit: usize,
    p_memo: HashMap<String, RationalFunction>,
    l_memo: HashMap<String, VElement>,
    p_active: HashSet<String>,
    l_active: HashSet<String>,
}

impl Engine {
    pub fn new(degree_bound: u32) -> Self {
        Engine::with_memo_limit(degree_bound, DEFAULT_MEMO_LIMIT)
    }

    pub fn with_memo_limit(degree_bound: u32, memo_limit: usize) -> Self {
        Engine {
            degree_bound,
            memo_limit,
            p_memo: HashMap::new(),
            l_memo: HashMap::new(),
            p_active: HashSet::new(),
            l_active: HashSet::new(),
        }
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// The graded rank recursion. Values live in N[q, t^{+-1}, a, (1-q)^{-1}].
    pub fn p_rec(&mut self, vw: &VWPair) -> Result<RationalFunction> {
        let key = vw.key();
        if let Some(v) = self.p_memo.get(&key) {
            return Ok(v.clone());
        }
        if !self.p_active.insert(key.clone()) {
            return Err(Error::RecursionCycle {
                v: key.clone(),
                w: String::new(),
            });
        }
        let result = self.p_rec_inner(vw);
        self.p_active.remove(&key);
        let value = result?;
        if self.p_memo.len() >= self.memo_limit {
            return Err(Error::MemoLimit(self.memo_limit));
        }
        self.p_memo.insert(key, value.clone());
        Ok(value)
    }

    fn p_rec_inner(&mut self, vw: &VWPair) -> Result<RationalFunction> {
        if vw.is_all_dots() {
            return Ok(RationalFunction::one());
        }
        match vw.fronts() {
            (Symbol::Dot, Symbol::Dot) => self.p_rec(&vw.advance(Symbol::Dot, Symbol::Dot)),
            (Symbol::Zero, Symbol::Zero) => {
                let ell = vw.tail_ones();
                let on_ones = self.p_rec(&vw.advance(Symbol::One, Symbol::One))?;
                if ell == 0 {
                    Ok(on_ones.atom_inv(DenomAtom::OneMinusQ, 1))
                } else {
                    let t_pow = Mono::var_pow(Var::T, -(ell as i64));
                    let on_zeros = self.p_rec(&vw.advance(Symbol::Zero, Symbol::Zero))?;
                    let first = on_ones.scale_mono(&t_pow);
                    let second = on_zeros
                        .scale_mono(&t_pow.mul(&Mono::var(Var::Q)));
                    Ok(&first + &second)
                }
            }
            (Symbol::One, Symbol::Zero) => self.p_rec(&vw.advance(Symbol::One, Symbol::Dot)),
            (Symbol::Zero, Symbol::One) => self.p_rec(&vw.advance(Symbol::Dot, Symbol::One)),
            (Symbol::One, Symbol::One) => {
                let ell = vw.tail_ones();
                let rest = self.p_rec(&vw.advance(Symbol::Dot, Symbol::Dot))?;
                let mut factor = LaurentPoly::var(Var::A);
                factor.add_term(Mono::var_pow(Var::T, ell as i64), rat_int(1));
                Ok(rest.scale_poly(&factor))
            }
            _ => Err(Error::UncoveredFront {
                v: vw.v().iter().map(|s| s.to_char()).collect(),
                w: vw.w().iter().map(|s| s.to_char()).collect(),
            }),
        }
    }

    /// The symmetric-function recursion; the value lives in V_ell with
    /// ell = |v|.
    pub fn l_rec(&mut self, vw: &VWPair) -> Result<VElement> {
        let key = vw.key();
        if let Some(v) = self.l_memo.get(&key) {
            return Ok(v.clone());
        }
        if !self.l_active.insert(key.clone()) {
            return Err(Error::RecursionCycle {
                v: key.clone(),
                w: String::new(),
            });
        }
        let result = self.l_rec_inner(vw);
        self.l_active.remove(&key);
        let value = result?;
        debug_assert_eq!(value.level(), vw.ell() as u32);
        if self.l_memo.len() >= self.memo_limit {
            return Err(Error::MemoLimit(self.memo_limit));
        }
        self.l_memo.insert(key, value.clone());
        Ok(value)
    }

    fn l_rec_inner(&mut self, vw: &VWPair) -> Result<VElement> {
        let bound = self.degree_bound;
        if vw.is_all_dots() {
            return Ok(VElement::one(0, bound));
        }
        match vw.fronts() {
            (Symbol::Dot, Symbol::Dot) => self.l_rec(&vw.advance(Symbol::Dot, Symbol::Dot)),
            (Symbol::Zero, Symbol::Zero) => {
                let ell = vw.tail_ones();
                let on_ones = self.l_rec(&vw.advance(Symbol::One, Symbol::One))?;
                let lowered = on_ones.d_minus()?;
                if ell == 0 {
                    Ok(lowered.scale(
                        &RationalFunction::one().atom_inv(DenomAtom::OneMinusQ, 1),
                    ))
                } else {
                    let t_pow = Mono::var_pow(Var::T, -(ell as i64));
                    let on_zeros = self.l_rec(&vw.advance(Symbol::Zero, Symbol::Zero))?;
                    let first = lowered.scale_mono(&t_pow);
                    let second = on_zeros.scale_mono(&t_pow.mul(&Mono::var(Var::Q)));
                    Ok(&first + &second)
                }
            }
            (Symbol::One, Symbol::Zero) => {
                let ell = vw.tail_ones();
                let inner = self.l_rec(&vw.advance(Symbol::One, Symbol::Dot))?;
                let mixed = inner.d_eq()?;
                Ok(mixed.scale_mono(&Mono::var_pow(Var::T, -(ell as i64))))
            }
            (Symbol::Zero, Symbol::One) => self.l_rec(&vw.advance(Symbol::Dot, Symbol::One)),
            (Symbol::One, Symbol::One) => {
                let rest = self.l_rec(&vw.advance(Symbol::Dot, Symbol::Dot))?;
                rest.d_plus()
            }
            _ => Err(Error::UncoveredFront {
                v: vw.v().iter().map(|s| s.to_char()).collect(),
                w: vw.w().iter().map(|s| s.to_char()).collect(),
            }),
        }
    }
}

/// The defining sum for L(v, w), restricted to tuples of area at most
/// `q_trunc`: an oracle independent of the recursion.
pub fn l_enum(vw: &VWPair, q_trunc: u64, degree_bound: u32) -> Result<VElement> {
    l_enum_with_cache(vw, q_trunc, degree_bound, &mut HashMap::new())
}

/// As [`l_enum`], reusing characteristic functions across calls. Cache keys
/// are Schroeder words; the caller must keep one cache per degree bound.
pub fn l_enum_with_cache(
    vw: &VWPair,
    q_trunc: u64,
    degree_bound: u32,
    chi_cache: &mut HashMap<String, VElement>,
) -> Result<VElement> {
    let mut total = VElement::zero(vw.ell() as u32, degree_bound);
    for tuple in enumerate_tuples(vw, q_trunc) {
        let path = schroeder_path(&tuple)?;
        let chi = match chi_cache.get(&path.word()) {
            Some(chi) => chi.clone(),
            None => {
                let chi = char_fn(&path, degree_bound)?;
                chi_cache.insert(path.word(), chi.clone());
                chi
            }
        };
        let weight = Mono::from_pairs(&[
            (Var::T, -(tuple.pdinv() as i64)),
            (Var::Q, tuple.area() as i64),
        ]);
        total = &total + &chi.scale_mono(&weight);
    }
    Ok(total)
}

/// psi(d_-^ell L(v, w)) == p(v, w), checked exactly.
pub fn verify_corollary(engine: &mut Engine, vw: &VWPair) -> Result<bool> {
    let mut el = engine.l_rec(vw)?;
    for _ in 0..vw.ell() {
        el = el.d_minus()?;
    }
    let lhs = psi(&el.as_symfunc()?);
    let rhs = engine.p_rec(vw)?;
    Ok(lhs == rhs)
}

/// The labeled generating function agrees with L(0^M, 0^N) evaluated in N
/// variables, up to the given q-order.
pub fn verify_labeled_sum(m: usize, n: usize, q_trunc: u64) -> Result<bool> {
    let lhs = labeled_gf(m, n, n as u32, q_trunc);
    let mut engine = Engine::new(n as u32);
    let l = engine.l_rec(&VWPair::zeros(m, n))?;
    let truncated = l.q_truncate(q_trunc as i64)?.as_symfunc()?;
    let rhs: XPoly = truncated.evaluate_in_x(n);
    Ok(lhs == rhs)
}

/// Everything the conjecture checker reports: the two sides, the extracted
/// constant (when the ratio is a signed power of t), a localized mismatch
/// otherwise, and the empirical pdinv maximum.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub big_m: usize,
    pub big_n: usize,
    pub k: u32,
    pub m: u32,
    pub n: u32,
    pub lhs: SymFunc,
    pub rhs_base: SymFunc,
    pub matched: bool,
    pub ratio_sign: i64,
    pub ratio_c: i64,
    pub mismatch: Option<Mismatch>,
    pub empirical_max_pdinv: u64,
    pub pdinv_stabilized: bool,
}

/// The first partition (in the canonical order) whose coefficients break
/// the expected relation.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub partition: Partition,
    pub lhs_coeff: RationalFunction,
    pub rhs_scaled_coeff: RationalFunction,
}

impl ConjectureReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "M": self.big_m,
            "N": self.big_n,
            "k": self.k,
            "m": self.m,
            "n": self.n,
            "lhs": self.lhs.to_json(),
            "rhs_base": self.rhs_base.to_json(),
            "matched": self.matched,
            "ratio_sign": if self.matched { Some(self.ratio_sign) } else { None },
            "ratio_C": if self.matched { Some(self.ratio_c) } else { None },
            "mismatch": self.mismatch.as_ref().map(|m| serde_json::json!({
                "partition": m.partition.parts(),
                "lhs_coeff": m.lhs_coeff.to_string(),
                "rhs_scaled_coeff": m.rhs_scaled_coeff.to_string(),
            })),
            "empirical_max_pdinv": self.empirical_max_pdinv,
            "pdinv_stabilized": self.pdinv_stabilized,
        })
    }
}

/// Decide whether lhs == sign * t^C * (1-q)^k * rhs holds for a single
/// (sign, C), reporting the first offending partition otherwise.
pub fn signed_t_power_ratio(
    lhs: &SymFunc,
    rhs: &SymFunc,
    k: u32,
) -> (bool, i64, i64, Option<Mismatch>) {
    let one_minus_q_k = crate::laurent::poly_one_minus_q().pow(k);
    let mut sign = 0i64;
    let mut c = 0i64;
    let mut seen = false;
    let mut partitions: Vec<Partition> = lhs.terms().map(|(l, _)| l.clone()).collect();
    for (l, _) in rhs.terms() {
        if !partitions.contains(l) {
            partitions.push(l.clone());
        }
    }
    partitions.sort();
    for l in partitions {
        let lc = lhs.coeff(&l);
        let rc = rhs.coeff(&l).scale_poly(&one_minus_q_k);
        let fail = |lc: RationalFunction, rc: RationalFunction| Mismatch {
            partition: l.clone(),
            lhs_coeff: lc,
            rhs_scaled_coeff: rc,
        };
        if lc.is_zero() || rc.is_zero() {
            if lc.is_zero() && rc.is_zero() {
                continue;
            }
            return (false, 0, 0, Some(fail(lc, rc)));
        }
        // ratio = (lc.num * rc.den) / (rc.num * lc.den) must be a monomial
        // +-t^C, the same for every partition.
        let top = &lc.numerator().clone() * &rc.den_poly();
        let bot = &rc.numerator().clone() * &lc.den_poly();
        let ratio = match top.exact_div(&bot) {
            Some(r) => r,
            None => return (false, 0, 0, Some(fail(lc, rc))),
        };
        let (mono, coeff) = match ratio.single_term() {
            Some(p) => p,
            None => return (false, 0, 0, Some(fail(lc, rc))),
        };
        let this_sign = if *coeff == rat_int(1) {
            1
        } else if *coeff == rat_int(-1) {
            -1
        } else {
            return (false, 0, 0, Some(fail(lc, rc)));
        };
        let only_t = mono.exps().iter().all(|&(v, _)| v == Var::T);
        if !only_t {
            return (false, 0, 0, Some(fail(lc, rc)));
        }
        let this_c = mono.exp_of(Var::T);
        if seen && (this_sign != sign || this_c != c) {
            return (false, 0, 0, Some(fail(lc, rc)));
        }
        sign = this_sign;
        c = this_c;
        seen = true;
    }
    (seen, sign, c, None)
}

/// Compare Q_{m,n}^k(1) against (1-q)^k t^C L(0^M, 0^N) and measure the
/// pdinv maximum over tuples of area up to `area_bound`.
pub fn check_conjecture(big_m: usize, big_n: usize, area_bound: u64) -> Result<ConjectureReport> {
    let k = gcd(big_m, big_n) as u32;
    let m = big_m as u32 / k;
    let n = big_n as u32 / k;
    let degree = big_n as u32;
    let lhs = q_power(m, n, k, degree)?;
    let mut engine = Engine::new(degree);
    let rhs_base = engine.l_rec(&VWPair::zeros(big_m, big_n))?.as_symfunc()?;
    if rhs_base.is_zero() {
        return Err(Error::Precondition(
            "the path-side generating function vanished".into(),
        ));
    }
    let (matched, ratio_sign, ratio_c, mismatch) = signed_t_power_ratio(&lhs, &rhs_base, k);

    // Empirical pdinv maximum with a stabilization flag: unchanged over the
    // last two area increments.
    let tuples = enumerate_tuples(&VWPair::zeros(big_m, big_n), area_bound);
    let max_at = |bound: u64| -> u64 {
        tuples
            .iter()
            .filter(|t| t.area() <= bound)
            .map(|t| t.pdinv())
            .max()
            .unwrap_or(0)
    };
    let empirical_max_pdinv = max_at(area_bound);
    let pdinv_stabilized = area_bound >= 2
        && empirical_max_pdinv == max_at(area_bound - 1)
        && empirical_max_pdinv == max_at(area_bound - 2);

    Ok(ConjectureReport {
        big_m,
        big_n,
        k,
        m,
        n,
        lhs,
        rhs_base,
        matched,
        ratio_sign,
        ratio_c,
        mismatch,
        empirical_max_pdinv,
        pdinv_stabilized,
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All realizable pairs with the given lengths, in a deterministic order.
pub fn realizable_pairs(m: usize, n: usize) -> Vec<VWPair> {
    let mut out = Vec::new();
    let symbols = [Symbol::Zero, Symbol::One, Symbol::Dot];
    let mut v_idx = vec![0usize; m];
    loop {
        let v: Vec<Symbol> = v_idx.iter().map(|&i| symbols[i]).collect();
        let mut w_idx = vec![0usize; n];
        loop {
            let w: Vec<Symbol> = w_idx.iter().map(|&i| symbols[i]).collect();
            if let Ok(vw) = VWPair::new(v.clone(), w.clone()) {
                if vw.is_realizable() {
                    out.push(vw);
                }
            }
            if !increment(&mut w_idx) {
                break;
            }
        }
        if !increment(&mut v_idx) {
            break;
        }
    }
    out
}

fn increment(digits: &mut [usize]) -> bool {
    for d in digits.iter_mut() {
        if *d < 2 {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{poly_a, poly_q};
    use crate::symfunc::gen_e;

    fn pair(v: &str, w: &str) -> VWPair {
        VWPair::parse(v, w).unwrap()
    }

    #[test]
    fn p_base_and_small_values() {
        let mut engine = Engine::new(4);
        assert_eq!(
            engine.p_rec(&pair("...", "..")).unwrap(),
            RationalFunction::one()
        );

        // p(0, 0) = (1+a)/(1-q)
        let expect = RationalFunction::from_poly(&LaurentPoly::one() + &poly_a())
            .atom_inv(DenomAtom::OneMinusQ, 1);
        assert_eq!(engine.p_rec(&pair("0", "0")).unwrap(), expect);
    }

    #[test]
    fn p_two_by_two_hand_trace() {
        // p(00, 00) = (1-q)^{-1} [ t^{-1}(t+a)(1+a) + q t^{-1} (1+a)^2/(1-q) ]
        let mut engine = Engine::new(4);
        let got = engine.p_rec(&pair("00", "00")).unwrap();
        let one_plus_a = &LaurentPoly::one() + &poly_a();
        let t_plus_a = &crate::laurent::poly_t() + &poly_a();
        let tinv = Mono::var_pow(Var::T, -1);
        let first = RationalFunction::from_poly((&t_plus_a * &one_plus_a).scale_mono(&tinv));
        let second = RationalFunction::from_poly(
            (&(&one_plus_a * &one_plus_a) * &poly_q()).scale_mono(&tinv),
        )
        .atom_inv(DenomAtom::OneMinusQ, 1);
        let expect = (&first + &second).atom_inv(DenomAtom::OneMinusQ, 1);
        assert_eq!(got, expect);
    }

    #[test]
    fn p_uncovered_front_errors() {
        let mut engine = Engine::new(4);
        let err = engine.p_rec(&pair(".", "0")).unwrap_err();
        assert!(matches!(err, Error::UncoveredFront { .. }));
    }

    #[test]
    fn l_base_and_small_values() {
        let mut engine = Engine::new(4);
        assert_eq!(
            engine.l_rec(&pair("..", "..")).unwrap(),
            VElement::one(0, 4)
        );

        // L(0, 0) = e_1/(1-q)
        let expect = VElement::from_symfunc(
            gen_e(1, 4)
                .unwrap()
                .scale(&RationalFunction::one().atom_inv(DenomAtom::OneMinusQ, 1)),
            0,
        )
        .unwrap();
        assert_eq!(engine.l_rec(&pair("0", "0")).unwrap(), expect);
    }

    #[test]
    fn l_of_the_worked_example() {
        // L(000110, 0110) = -t^{-2} y_1 p_1 + t^{-3} q y_1 y_2
        let mut engine = Engine::new(4);
        let got = engine.l_rec(&pair("000110", "0110")).unwrap();
        assert_eq!(got.to_string(), "-1*t^-2*y1*p[1] + 1*q*t^-3*y1*y2");
        assert_eq!(got.level(), 2);

        // And the enumeration side agrees on the nose (the sum is finite).
        for q_trunc in [1, 3] {
            let by_sum = l_enum(&pair("000110", "0110"), q_trunc, 4).unwrap();
            assert_eq!(by_sum, got);
        }
    }

    #[test]
    fn l_enum_matches_recursion_after_truncation() {
        let mut engine = Engine::new(3);
        for (v, w) in [("0", "0"), ("00", "00"), ("0", "00"), ("00", "0")] {
            let vw = pair(v, w);
            let exact = engine.l_rec(&vw).unwrap();
            let trunc = exact.q_truncate(3).unwrap();
            let by_sum = l_enum(&vw, 3, 3).unwrap();
            assert_eq!(trunc, by_sum, "mismatch at {vw}");
        }
    }

    #[test]
    fn l_enum_one_one_geometric_series() {
        // (1 + q + q^2) e_1 for v = w = 0 truncated at 2.
        let by_sum = l_enum(&pair("0", "0"), 2, 2).unwrap();
        let mut series = LaurentPoly::zero();
        for i in 0..=2 {
            series.add_term(Mono::var_pow(Var::Q, i), rat_int(1));
        }
        let expect = VElement::from_symfunc(
            gen_e(1, 2).unwrap().scale(&RationalFunction::from_poly(series)),
            0,
        )
        .unwrap();
        assert_eq!(by_sum, expect);
    }

    #[test]
    fn rotation_matches_enumeration_on_both_forms() {
        // L(.v, .w) = L(v., w.) by the rotation case; both sides also agree
        // with their own enumerations.
        let mut engine = Engine::new(3);
        for (v, w, rv, rw) in [(".1", ".1", "1.", "1."), (".0", ".0", "0.", "0.")] {
            let lhs = engine.l_rec(&pair(v, w)).unwrap();
            let rhs = engine.l_rec(&pair(rv, rw)).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(
                l_enum(&pair(v, w), 4, 3).unwrap(),
                l_enum(&pair(rv, rw), 4, 3).unwrap()
            );
            assert_eq!(lhs.q_truncate(4).unwrap(), l_enum(&pair(v, w), 4, 3).unwrap());
        }
    }

    #[test]
    fn corollary_small_cases() {
        let mut engine = Engine::new(4);
        assert!(verify_corollary(&mut engine, &pair(".", ".")).unwrap());
        assert!(verify_corollary(&mut engine, &pair("0", "0")).unwrap());
        assert!(verify_corollary(&mut engine, &pair("000110", "0110")).unwrap());
    }

    #[test]
    fn labeled_sum_small_cases() {
        assert!(verify_labeled_sum(1, 1, 3).unwrap());
        assert!(verify_labeled_sum(2, 2, 2).unwrap());
        assert!(verify_labeled_sum(3, 2, 2).unwrap());
    }

    #[test]
    fn all_zero_values_are_symmetric_of_full_degree() {
        // L(0^M, 0^N) lands in V_0 and is a symmetric function of total
        // degree N.
        for (m, n) in [(1usize, 1usize), (2, 2), (2, 3), (3, 2)] {
            let mut engine = Engine::new(n as u32);
            let l = engine.l_rec(&VWPair::zeros(m, n)).unwrap();
            assert_eq!(l.level(), 0);
            let f = l.as_symfunc().unwrap();
            assert_eq!(f.max_degree(), n as u32);
            assert_eq!(l.total_degree(), n as i64);
        }
    }

    #[test]
    fn conjecture_one_one() {
        let report = check_conjecture(1, 1, 4).unwrap();
        assert!(report.matched);
        assert_eq!(report.ratio_sign, -1);
        assert_eq!(report.ratio_c, 0);
        assert_eq!(report.empirical_max_pdinv, 0);
        assert!(report.pdinv_stabilized);
    }

    #[test]
    fn conjecture_two_two() {
        let report = check_conjecture(2, 2, 4).unwrap();
        assert!(report.matched);
        // lhs = e_1^2 - (1-q)(1-t) e_2 against (1-q)^2 t^C L(00,00).
        assert_eq!(report.ratio_sign, 1);
        assert_eq!(report.ratio_c, 1);
        assert_eq!(report.empirical_max_pdinv, 1);
        assert!(report.pdinv_stabilized);
    }

    #[test]
    fn ratio_mismatch_is_localized() {
        // Deliberately compare against the wrong path side.
        let lhs = q_power(1, 1, 1, 2).unwrap();
        let mut engine = Engine::new(2);
        let rhs = engine
            .l_rec(&VWPair::zeros(2, 2))
            .unwrap()
            .as_symfunc()
            .unwrap();
        let (matched, _, _, mismatch) = signed_t_power_ratio(&lhs, &rhs, 1);
        assert!(!matched);
        let mm = mismatch.expect("mismatch must be localized");
        assert_eq!(mm.partition, Partition::single(1));
    }

    #[test]
    fn realizable_pairs_enumeration() {
        let pairs = realizable_pairs(1, 1);
        // (0,0), (1,1), (.,.) all realizable; mixed fronts are not.
        assert_eq!(pairs.len(), 3);
        for vw in realizable_pairs(2, 2) {
            assert!(vw.is_realizable());
        }
    }

    #[test]
    fn memo_guard_trips() {
        let mut engine = Engine::with_memo_limit(4, 2);
        let err = engine.p_rec(&pair("00", "00")).unwrap_err();
        assert!(matches!(err, Error::MemoLimit(_)));
    }
}
