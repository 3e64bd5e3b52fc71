//! Sparse multivariate Laurent polynomials over arbitrary-precision rationals.
//!
//! Variables come from the fixed ordered set q < t < a < z < y1 < y2 < ...
//! Exponents may be negative. Terms are kept in a canonical order (ascending
//! exponent vectors, most significant variable first), which makes printing,
//! hashing and equality deterministic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// A variable of the coefficient ring. The derived `Ord` is the global
/// variable order used everywhere.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Q,
    T,
    A,
    Z,
    Y(u32),
}

impl Var {
    pub fn name(self) -> String {
        match self {
            Var::Q => "q".into(),
            Var::T => "t".into(),
            Var::A => "a".into(),
            Var::Z => "z".into(),
            Var::Y(i) => format!("y{i}"),
        }
    }

    pub fn latex(self) -> String {
        match self {
            Var::Y(i) => format!("y_{{{i}}}"),
            v => v.name(),
        }
    }
}

/// A monomial: a finite set of (variable, non-zero exponent) pairs sorted by
/// variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono {
    exps: Vec<(Var, i64)>,
}

impl Mono {
    pub fn one() -> Self {
        Mono { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Mono::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        if e == 0 {
            Mono::one()
        } else {
            Mono { exps: vec![(v, e)] }
        }
    }

    pub fn from_pairs(pairs: &[(Var, i64)]) -> Self {
        let mut map: BTreeMap<Var, i64> = BTreeMap::new();
        for &(v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Mono {
            exps: map.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exp_of(&self, v: Var) -> i64 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn exps(&self) -> &[(Var, i64)] {
        &self.exps
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut pairs = self.exps.clone();
        pairs.extend_from_slice(&other.exps);
        Mono::from_pairs(&pairs)
    }

    pub fn div(&self, other: &Mono) -> Mono {
        let mut pairs = self.exps.clone();
        pairs.extend(other.exps.iter().map(|&(v, e)| (v, -e)));
        Mono::from_pairs(&pairs)
    }

    /// Raise every exponent by the factor `k` (used both for monomial powers
    /// and for the k-th plethystic power of an alphabet monomial).
    pub fn pow(&self, k: i64) -> Mono {
        if k == 0 {
            return Mono::one();
        }
        Mono {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    /// Componentwise `<=`; only meaningful when both sides have non-negative
    /// exponents.
    pub fn divides(&self, other: &Mono) -> bool {
        self.exps.iter().all(|&(v, e)| e <= other.exp_of(v))
    }

    /// Split into the part whose variables satisfy `pred` and the rest.
    pub fn split<F: Fn(Var) -> bool>(&self, pred: F) -> (Mono, Mono) {
        let (a, b): (Vec<_>, Vec<_>) = self.exps.iter().partition(|&&(v, _)| pred(v));
        (Mono { exps: a }, Mono { exps: b })
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> Mono {
        let pairs: Vec<(Var, i64)> = self
            .exps
            .iter()
            .map(|&(v, e)| {
                if v == a {
                    (b, e)
                } else if v == b {
                    (a, e)
                } else {
                    (v, e)
                }
            })
            .collect();
        Mono::from_pairs(&pairs)
    }

    fn cmp_global(&self, other: &Mono) -> Ordering {
        let mut i = 0;
        let mut j = 0;
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va == vb {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    } else if va < vb {
                        return ea.cmp(&0);
                    } else {
                        return 0.cmp(&eb);
                    }
                }
            }
        }
    }

    /// Graded order used for exact division: total degree first, then the
    /// global lexicographic comparison. On non-negative exponent vectors this
    /// is a term order.
    fn cmp_grlex(&self, other: &Mono) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.cmp_global(other))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_global(other)
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.name()
                } else {
                    format!("{}^{}", v.name(), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A sparse Laurent polynomial. Stored zero coefficients are never kept.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Mono, BigRational>,
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        LaurentPoly::constant(rat_int(n))
    }

    pub fn constant(c: BigRational) -> Self {
        LaurentPoly::mono(Mono::one(), c)
    }

    pub fn var(v: Var) -> Self {
        LaurentPoly::mono(Mono::var(v), BigRational::one())
    }

    pub fn mono(m: Mono, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(list: Vec<(Mono, BigRational)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in list {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn single_term(&self) -> Option<(&Mono, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let (m, c) = self.single_term()?;
        if m.is_one() {
            Some(c.clone())
        } else {
            None
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn scale_mono(&self, m: &Mono) -> Self {
        if m.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap_vars(a, b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Power with possibly negative exponent. A negative exponent is only
    /// defined for single-term operands (monomials are units here).
    pub fn checked_pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        match self.single_term() {
            Some((m, c)) => {
                let inv = BigRational::one() / c;
                let mut acc = LaurentPoly::one();
                let base = LaurentPoly::mono(m.pow(-1), inv);
                for _ in 0..(-e) {
                    acc = &acc * &base;
                }
                Ok(acc)
            }
            None => Err(Error::NegativePower),
        }
    }

    pub fn exp_range(&self, v: Var) -> Option<(i64, i64)> {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        if self.is_zero() {
            return None;
        }
        for m in self.terms.keys() {
            let e = m.exp_of(v);
            lo = lo.min(e);
            hi = hi.max(e);
        }
        Some((lo, hi))
    }

    pub fn uses_var<F: Fn(Var) -> bool>(&self, pred: F) -> bool {
        self.terms
            .keys()
            .any(|m| m.exps().iter().any(|&(v, _)| pred(v)))
    }

    /// Group terms by the exponent of `v`, removing `v` from the monomials.
    pub fn split_by_var(&self, v: Var) -> BTreeMap<i64, LaurentPoly> {
        let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp_of(v);
            let rest = m.div(&Mono::var_pow(v, e));
            out.entry(e)
                .or_insert_with(LaurentPoly::zero)
                .add_term(rest, c.clone());
        }
        out
    }

    /// Drop every term whose exponent of `v` exceeds `max`.
    pub fn truncate_var(&self, v: Var, max: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp_of(v) <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.exps().iter().map(|&(v, _)| v))
            .collect()
    }

    /// Monomial of per-variable minimum exponents (absent = 0).
    fn min_exp_mono(&self) -> Mono {
        let vars = self.vars();
        let mut pairs = Vec::new();
        for v in vars {
            let mut lo = i64::MAX;
            for m in self.terms.keys() {
                lo = lo.min(m.exp_of(v));
            }
            if lo != 0 {
                pairs.push((v, lo));
            }
        }
        Mono::from_pairs(&pairs)
    }

    fn leading_grlex(&self) -> Option<(&Mono, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.cmp_grlex(b))
    }

    /// Exact division: returns `Some(q)` with `q * div == self`, or `None`
    /// when no such Laurent polynomial exists.
    pub fn exact_div(&self, div: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!div.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Shift both operands to non-negative exponents, then do ordinary
        // polynomial division with a zero-remainder requirement.
        let shift_n = self.min_exp_mono();
        let shift_d = div.min_exp_mono();
        let n = self.scale_mono(&shift_n.pow(-1));
        let d = div.scale_mono(&shift_d.pow(-1));
        let (lm, lc) = d.leading_grlex().expect("non-zero divisor");
        let lm = lm.clone();
        let lc = lc.clone();
        let mut rem = n;
        let mut quot = LaurentPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_grlex().expect("non-zero remainder");
            if !lm.divides(rm) {
                return None;
            }
            let qm = rm.div(&lm);
            let qc = rc / &lc;
            let qterm = LaurentPoly::mono(qm, qc);
            rem = &rem - &(&qterm * &d);
            quot = &quot + &qterm;
        }
        // Undo the shifts.
        Some(quot.scale_mono(&shift_n.mul(&shift_d.pow(-1))))
    }

    pub fn max_y_index(&self) -> Option<u32> {
        self.terms
            .keys()
            .flat_map(|m| m.exps().iter())
            .filter_map(|&(v, _)| match v {
                Var::Y(i) => Some(i),
                _ => None,
            })
            .max()
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = fmt_rat_latex(&abs);
            if m.is_one() {
                out.push_str(&coeff);
            } else {
                if !abs.is_one() {
                    out.push_str(&coeff);
                }
                for (k, &(v, e)) in m.exps().iter().enumerate() {
                    if k > 0 || !abs.is_one() {
                        out.push(' ');
                    }
                    if e == 1 {
                        out.push_str(&v.latex());
                    } else {
                        out.push_str(&format!("{}^{{{}}}", v.latex(), e));
                    }
                }
            }
        }
        out
    }
}

pub fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_rat_latex(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: terms in the global monomial order, every
    /// coefficient printed explicitly, e.g. `-1*t^-2*y1 + 1*q*t^-3*y1*y2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_one() {
                    fmt_rat(c)
                } else {
                    format!("{}*{}", fmt_rat(c), m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Convenience constructors for the fixed ring elements.
pub fn poly_q() -> LaurentPoly {
    LaurentPoly::var(Var::Q)
}

pub fn poly_t() -> LaurentPoly {
    LaurentPoly::var(Var::T)
}

pub fn poly_a() -> LaurentPoly {
    LaurentPoly::var(Var::A)
}

/// 1 - q
pub fn poly_one_minus_q() -> LaurentPoly {
    &LaurentPoly::one() - &poly_q()
}

/// 1 - t
pub fn poly_one_minus_t() -> LaurentPoly {
    &LaurentPoly::one() - &poly_t()
}

/// qt - 1
pub fn poly_qt_minus_one() -> LaurentPoly {
    &(&poly_q() * &poly_t()) - &LaurentPoly::one()
}

/// t - 1
pub fn poly_t_minus_one() -> LaurentPoly {
    &poly_t() - &LaurentPoly::one()
}
