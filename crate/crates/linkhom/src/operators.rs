//! The spaces V_ell = Q[y_1..y_ell] (x) Lambda and the raising, lowering and
//! mixing operators acting on them, plus characteristic functions of partial
//! Schroeder paths.
//!
//! Elements are stored flat: a symmetric function whose coefficients carry
//! the y-variables. The y-grouped view (y-monomial times symmetric function)
//! is recovered for printing and serialization. Stored y-exponents are
//! always non-negative; the lowering operator extracts the relevant
//! y-coefficients directly, so no negative powers ever materialize.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::laurent::{poly_t_minus_one, rat_int, LaurentPoly, Mono, Var};
use crate::partition::Partition;
use crate::paths::SchroederPath;
use crate::ratfun::RationalFunction;
use crate::symfunc::{fmt_coeff_inline, gen_e, plethysm, AlphabetExpr, SymFunc};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VElement {
    level: u32,
    inner: SymFunc,
}

impl VElement {
    pub fn one(level: u32, degree_bound: u32) -> Self {
        VElement {
            level,
            inner: SymFunc::one(degree_bound),
        }
    }

    pub fn zero(level: u32, degree_bound: u32) -> Self {
        VElement {
            level,
            inner: SymFunc::zero(degree_bound),
        }
    }

    pub fn from_symfunc(inner: SymFunc, level: u32) -> Result<Self> {
        let el = VElement { level, inner };
        el.validate()?;
        Ok(el)
    }

    fn validate(&self) -> Result<()> {
        for (_, c) in self.inner.terms() {
            for (m, _) in c.numerator().terms() {
                for &(v, e) in m.exps() {
                    if let Var::Y(i) = v {
                        if i > self.level || e < 0 {
                            return Err(Error::Precondition(format!(
                                "y{} with exponent {} is invalid at level {}",
                                i, e, self.level
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn degree_bound(&self) -> u32 {
        self.inner.degree_bound()
    }

    pub fn inner(&self) -> &SymFunc {
        &self.inner
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// y-degree plus Lambda-degree, maximized over terms.
    pub fn total_degree(&self) -> i64 {
        let mut best = i64::MIN;
        for (l, c) in self.inner.terms() {
            for (m, _) in c.numerator().terms() {
                let ydeg: i64 = m
                    .exps()
                    .iter()
                    .filter(|&&(v, _)| matches!(v, Var::Y(_)))
                    .map(|&(_, e)| e)
                    .sum();
                best = best.max(ydeg + l.size() as i64);
            }
        }
        if best == i64::MIN {
            0
        } else {
            best
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        VElement {
            level: self.level,
            inner: self.inner.scale(c),
        }
    }

    pub fn scale_mono(&self, m: &Mono) -> Self {
        VElement {
            level: self.level,
            inner: self.inner.scale_mono(m),
        }
    }

    /// A pure symmetric function: only defined at level 0.
    pub fn as_symfunc(&self) -> Result<SymFunc> {
        if self.level != 0 {
            return Err(Error::NotSymmetric(self.level));
        }
        Ok(self.inner.clone())
    }

    /// Swap y_i and y_{i+1} in every coefficient.
    pub fn swap_y(&self, i: u32) -> Self {
        let a = Var::Y(i);
        let b = Var::Y(i + 1);
        let mut inner = SymFunc::zero(self.degree_bound());
        for (l, c) in self.inner.terms() {
            inner.add_term(l.clone(), c.swap_vars(a, b));
        }
        VElement {
            level: self.level,
            inner,
        }
    }

    /// The Demazure-Lusztig-type operator
    /// T_i f = ((t-1) y_i f + (y_{i+1} - t y_i) s_i f) / (y_{i+1} - y_i).
    /// The numerator is always exactly divisible; failure is a modeling bug.
    pub fn hecke_t(&self, i: u32) -> Result<Self> {
        if self.level < 2 || i == 0 || i > self.level - 1 {
            return Err(Error::HeckeIndex {
                index: i,
                level: self.level,
            });
        }
        let yi = Var::Y(i);
        let yj = Var::Y(i + 1);
        let t_minus_1_yi = poly_t_minus_one().scale_mono(&Mono::var(yi));
        let yj_minus_t_yi = &LaurentPoly::var(yj)
            - &LaurentPoly::mono(Mono::from_pairs(&[(Var::T, 1), (yi, 1)]), rat_int(1));
        let div = &LaurentPoly::var(yj) - &LaurentPoly::var(yi);
        let mut inner = SymFunc::zero(self.degree_bound());
        for (l, c) in self.inner.terms() {
            let num = &(c.numerator() * &t_minus_1_yi)
                + &(&c.numerator().swap_vars(yi, yj) * &yj_minus_t_yi);
            let quot = num
                .exact_div(&div)
                .ok_or_else(|| Error::NotDivisible(div.to_string()))?;
            inner.add_term(l.clone(), RationalFunction::new(quot, c.den_counts()));
        }
        Ok(VElement {
            level: self.level,
            inner,
        })
    }

    /// Raising operator V_ell -> V_{ell+1}:
    /// d_+ f = T_1 T_2 ... T_ell f[X + (t-1) y_{ell+1}].
    pub fn d_plus(&self) -> Result<Self> {
        let ell = self.level;
        let shifted = plethysm(&self.inner, &AlphabetExpr::x_shifted_by_y(ell + 1, true));
        let mut out = VElement {
            level: ell + 1,
            inner: shifted,
        };
        for i in (1..=ell).rev() {
            out = out.hecke_t(i)?;
        }
        Ok(out)
    }

    /// Lowering operator V_ell -> V_{ell-1}: multiply f[X - (t-1) y_ell] by
    /// -y_ell sum_i h_i[-X/y_ell] and take the y_ell^0 coefficient. Since
    /// h_i[-X/y_ell] = (-1)^i e_i y_ell^{-i}, the y_ell^j coefficient of the
    /// shifted element contributes (-1)^j e_{j+1} directly.
    pub fn d_minus(&self) -> Result<Self> {
        if self.level == 0 {
            return Err(Error::LevelUnderflow("d_minus"));
        }
        let ell = self.level;
        let bound = self.degree_bound();
        let yl = Var::Y(ell);
        let shifted = plethysm(&self.inner, &AlphabetExpr::x_shifted_by_y(ell, false));
        let mut inner = SymFunc::zero(bound);
        for (l, c) in shifted.terms() {
            for (j, part) in c.numerator().split_by_var(yl) {
                debug_assert!(j >= 0, "stored y-exponents are non-negative");
                let i = (j + 1) as u32;
                if l.size() + i > bound {
                    return Err(Error::DegreeBound {
                        degree: (l.size() + i) as i64,
                        bound: bound as i64,
                    });
                }
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let coeff = RationalFunction::new(part.scale(&rat_int(sign)), c.den_counts());
                let mut term = SymFunc::zero(bound);
                term.add_term(l.clone(), coeff);
                inner = &inner + &(&gen_e(i, bound)? * &term);
            }
        }
        Ok(VElement {
            level: ell - 1,
            inner,
        })
    }

    /// d_= f = (d_- d_+ f - d_+ d_- f) / (t-1), with the division checked
    /// exact in every coefficient.
    pub fn d_eq(&self) -> Result<Self> {
        if self.level == 0 {
            return Err(Error::LevelUnderflow("d_eq"));
        }
        let lhs = self.d_plus()?.d_minus()?;
        let rhs = self.d_minus()?.d_plus()?;
        let diff = &lhs - &rhs;
        let inner = diff.inner.div_exact_poly(&poly_t_minus_one())?;
        Ok(VElement {
            level: self.level,
            inner,
        })
    }

    /// Coefficient-wise q-series truncation.
    pub fn q_truncate(&self, max: i64) -> Result<Self> {
        Ok(VElement {
            level: self.level,
            inner: self.inner.q_truncate(max)?,
        })
    }

    /// The y-grouped view: (y-monomial, partition) -> scalar coefficient,
    /// in the display order.
    pub fn grouped(&self) -> BTreeMap<(Vec<i64>, Partition), RationalFunction> {
        let mut out: BTreeMap<(Vec<i64>, Partition), RationalFunction> = BTreeMap::new();
        for (l, c) in self.inner.terms() {
            for (m, coeff) in c.numerator().terms() {
                let (ypart, rest) = m.split(|v| matches!(v, Var::Y(_)));
                let mut exps = vec![0i64; self.level as usize];
                for &(v, e) in ypart.exps() {
                    if let Var::Y(i) = v {
                        exps[(i - 1) as usize] = e;
                    }
                }
                let piece =
                    RationalFunction::new(LaurentPoly::mono(rest, coeff.clone()), c.den_counts());
                let entry = out
                    .entry((exps, l.clone()))
                    .or_insert_with(RationalFunction::zero);
                *entry = &*entry + &piece;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .grouped()
            .iter()
            .map(|((y, l), c)| {
                serde_json::json!({
                    "y": y,
                    "partition": l.parts(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "level": self.level, "terms": terms })
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .grouped()
            .iter()
            .map(|((y, l), c)| {
                let mut s = format!("\\left({}\\right)", c.to_latex());
                for (i, &e) in y.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if e == 1 {
                        s.push_str(&format!(" y_{{{}}}", i + 1));
                    } else {
                        s.push_str(&format!(" y_{{{}}}^{{{}}}", i + 1, e));
                    }
                }
                if !l.is_empty() {
                    let idx: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
                    s.push_str(&format!(" p_{{{}}}", idx.join(",")));
                }
                s
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for VElement {
    /// Canonical form: one term per (y-monomial, partition) pair, e.g.
    /// `-1*t^-2*y1*p[1] + 1*q*t^-3*y1*y2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grouped = self.grouped();
        if grouped.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = grouped
            .iter()
            .map(|((y, l), c)| {
                let mut ymono = Mono::one();
                for (i, &e) in y.iter().enumerate() {
                    ymono = ymono.mul(&Mono::var_pow(Var::Y(i as u32 + 1), e));
                }
                let mut s = if ymono.is_one() {
                    fmt_coeff_inline(c)
                } else {
                    match c.as_single_term() {
                        Some((m, coeff)) => {
                            let joint =
                                LaurentPoly::mono(m.mul(&ymono), coeff.clone());
                            format!("{joint}")
                        }
                        None => format!("({c})*{ymono}"),
                    }
                };
                if !l.is_empty() {
                    s.push_str(&format!("*p{l}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &VElement {
    type Output = VElement;
    fn add(self, rhs: &VElement) -> VElement {
        assert_eq!(self.level, rhs.level, "levels differ");
        VElement {
            level: self.level,
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl Sub for &VElement {
    type Output = VElement;
    fn sub(self, rhs: &VElement) -> VElement {
        assert_eq!(self.level, rhs.level, "levels differ");
        VElement {
            level: self.level,
            inner: &self.inner - &rhs.inner,
        }
    }
}

impl Neg for &VElement {
    type Output = VElement;
    fn neg(self) -> VElement {
        VElement {
            level: self.level,
            inner: -&self.inner,
        }
    }
}

impl Mul for &VElement {
    type Output = VElement;
    fn mul(self, rhs: &VElement) -> VElement {
        assert_eq!(self.level, rhs.level, "levels differ");
        VElement {
            level: self.level,
            inner: &self.inner * &rhs.inner,
        }
    }
}

/// The characteristic function of a partial Schroeder path: start from
/// 1 in V_0 and read the path right to left, applying the raising operator
/// for E, the lowering operator for V, and the mixing operator for D.
pub fn char_fn(path: &SchroederPath, degree_bound: u32) -> Result<VElement> {
    let mut el = VElement::one(0, degree_bound);
    for &step in path.steps().iter().rev() {
        el = match step {
            'E' => el.d_plus()?,
            'V' => el.d_minus()?,
            'D' => el.d_eq()?,
            other => {
                return Err(Error::InconsistentSchroeder(format!(
                    "invalid step {other:?}"
                )))
            }
        };
    }
    debug_assert_eq!(el.level(), path.ell() as u32);
    Ok(el)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::poly_t;

    fn y(i: u32) -> LaurentPoly {
        LaurentPoly::var(Var::Y(i))
    }

    fn velem_from_poly(level: u32, bound: u32, p: LaurentPoly) -> VElement {
        VElement::from_symfunc(SymFunc::constant(bound, RationalFunction::from_poly(p)), level)
            .unwrap()
    }

    #[test]
    fn hecke_on_symmetric_input_is_identity() {
        let el = VElement::one(2, 3);
        assert_eq!(el.hecke_t(1).unwrap(), el);
        let sym = velem_from_poly(2, 3, &y(1) * &y(2));
        assert_eq!(sym.hecke_t(1).unwrap(), sym);
    }

    #[test]
    fn hecke_on_y1_and_y2() {
        // T_1 y_1 = (1-t) y_1 + y_2 and T_1 y_2 = t y_1
        let e1 = velem_from_poly(2, 3, y(1));
        let out = e1.hecke_t(1).unwrap();
        let expect = &(&y(1) - &(&poly_t() * &y(1))) + &y(2);
        assert_eq!(out, velem_from_poly(2, 3, expect));

        let e2 = velem_from_poly(2, 3, y(2));
        let out = e2.hecke_t(1).unwrap();
        assert_eq!(out, velem_from_poly(2, 3, &poly_t() * &y(1)));
    }

    #[test]
    fn d_plus_on_constants() {
        let one0 = VElement::one(0, 4);
        assert_eq!(one0.d_plus().unwrap(), VElement::one(1, 4));

        // d_+ p_1 = p_1 + (t-1) y_1 at level 0 -> 1
        let p1 = VElement::from_symfunc(SymFunc::p(1, 4), 0).unwrap();
        let out = p1.d_plus().unwrap();
        let mut expect = SymFunc::p(1, 4);
        expect.add_term(
            Partition::empty(),
            RationalFunction::from_poly(
                poly_t_minus_one().scale_mono(&Mono::var(Var::Y(1))),
            ),
        );
        assert_eq!(out, VElement::from_symfunc(expect, 1).unwrap());
    }

    #[test]
    fn d_minus_examples() {
        // d_-(1 in V_1) = p_1
        let one1 = VElement::one(1, 4);
        let out = one1.d_minus().unwrap();
        assert_eq!(out, VElement::from_symfunc(SymFunc::p(1, 4), 0).unwrap());

        // d_- d_+ (1 in V_0) = e_1
        let comp = VElement::one(0, 4).d_plus().unwrap().d_minus().unwrap();
        assert_eq!(comp, VElement::from_symfunc(gen_e(1, 4).unwrap(), 0).unwrap());
    }

    #[test]
    fn level_checks() {
        assert!(VElement::one(0, 3).d_minus().is_err());
        assert!(VElement::one(0, 3).d_eq().is_err());
        assert!(VElement::one(1, 3).hecke_t(1).is_err());
    }

    #[test]
    fn d_eq_level_preservation_and_degree() {
        let el = velem_from_poly(2, 4, y(1));
        let out = el.d_eq().unwrap();
        assert_eq!(out.level(), 2);
        assert_eq!(out.total_degree(), el.total_degree() + 1);
        let plus = el.d_plus().unwrap();
        assert_eq!(plus.level(), 3);
        assert_eq!(plus.total_degree(), el.total_degree());
        let minus = el.d_minus().unwrap();
        assert_eq!(minus.level(), 1);
        assert_eq!(minus.total_degree(), el.total_degree() + 1);
    }

    #[test]
    fn characteristic_functions_of_the_example_paths() {
        // chi(VDEEE) = -t^2 y_1 p_1 in V_2
        let s = SchroederPath::parse(2, "VDEEE").unwrap();
        let chi = char_fn(&s, 4).unwrap();
        let t2 = LaurentPoly::mono(Mono::from_pairs(&[(Var::T, 2), (Var::Y(1), 1)]), rat_int(-1));
        let mut expect = SymFunc::zero(4);
        expect.add_term(Partition::single(1), RationalFunction::from_poly(t2));
        assert_eq!(chi, VElement::from_symfunc(expect, 2).unwrap());
        assert_eq!(chi.to_string(), "-1*t^2*y1*p[1]");

        // chi(DDEE) = t y_1 y_2 in V_2
        let s = SchroederPath::parse(2, "DDEE").unwrap();
        let chi = char_fn(&s, 4).unwrap();
        let ty = LaurentPoly::mono(
            Mono::from_pairs(&[(Var::T, 1), (Var::Y(1), 1), (Var::Y(2), 1)]),
            rat_int(1),
        );
        let mut expect = SymFunc::zero(4);
        expect.add_term(Partition::empty(), RationalFunction::from_poly(ty));
        assert_eq!(chi, VElement::from_symfunc(expect, 2).unwrap());
        assert_eq!(chi.to_string(), "1*t*y1*y2");

        // chi(E) = 1 in V_1
        let s = SchroederPath::parse(1, "E").unwrap();
        assert_eq!(char_fn(&s, 4).unwrap(), VElement::one(1, 4));

        // The empty path gives 1 in V_0.
        let s = SchroederPath::parse(0, "").unwrap();
        assert_eq!(char_fn(&s, 4).unwrap(), VElement::one(0, 4));
    }

    #[test]
    fn char_fn_degree_bookkeeping() {
        for (ell, word) in [(2usize, "VDEEE"), (2, "DDEE"), (0, "VE"), (1, "VDEE")] {
            let s = SchroederPath::parse(ell, word).unwrap();
            let chi = char_fn(&s, 6).unwrap();
            let vs = word.chars().filter(|&c| c == 'V').count();
            let ds = word.chars().filter(|&c| c == 'D').count();
            assert_eq!(chi.total_degree(), (vs + ds) as i64);
            assert_eq!(chi.level(), ell as u32);
        }
    }
}
