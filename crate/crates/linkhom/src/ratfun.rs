//! Normalized fractions over the fixed multiplicative denominator set
//! {1-q, 1-t, qt-1}. Every scalar coefficient in the library is one of these.
//!
//! The denominator is a multiset of atoms stored as exponent counts. A value
//! is kept reduced: no atom present in the denominator divides the numerator.
//! Reduced forms are unique, so derived equality and hashing are semantic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{
    poly_one_minus_q, poly_one_minus_t, poly_qt_minus_one, rat_int, LaurentPoly, Mono, Var,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DenomAtom {
    OneMinusQ,
    OneMinusT,
    QtMinusOne,
}

pub const ATOMS: [DenomAtom; 3] = [
    DenomAtom::OneMinusQ,
    DenomAtom::OneMinusT,
    DenomAtom::QtMinusOne,
];

impl DenomAtom {
    pub fn poly(self) -> LaurentPoly {
        match self {
            DenomAtom::OneMinusQ => poly_one_minus_q(),
            DenomAtom::OneMinusT => poly_one_minus_t(),
            DenomAtom::QtMinusOne => poly_qt_minus_one(),
        }
    }

    pub fn index(self) -> usize {
        match self {
            DenomAtom::OneMinusQ => 0,
            DenomAtom::OneMinusT => 1,
            DenomAtom::QtMinusOne => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DenomAtom::OneMinusQ => "(1-q)",
            DenomAtom::OneMinusT => "(1-t)",
            DenomAtom::QtMinusOne => "(qt-1)",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: [u32; 3],
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: LaurentPoly::zero(),
            den: [0; 3],
        }
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RationalFunction { num, den: [0; 3] }
    }

    pub fn from_mono(m: Mono, c: BigRational) -> Self {
        RationalFunction::from_poly(LaurentPoly::mono(m, c))
    }

    pub fn from_int(n: i64) -> Self {
        RationalFunction::from_poly(LaurentPoly::int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RationalFunction::from_poly(LaurentPoly::constant(c))
    }

    pub fn new(num: LaurentPoly, den: [u32; 3]) -> Self {
        let mut f = RationalFunction { num, den };
        f.normalize();
        f
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = [0; 3];
            return;
        }
        for atom in ATOMS {
            let i = atom.index();
            while self.den[i] > 0 {
                match self.num.exact_div(&atom.poly()) {
                    Some(q) => {
                        self.num = q;
                        self.den[i] -= 1;
                    }
                    None => break,
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den_counts(&self) -> [u32; 3] {
        self.den
    }

    pub fn den_poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::one();
        for atom in ATOMS {
            for _ in 0..self.den[atom.index()] {
                p = &p * &atom.poly();
            }
        }
        p
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == [0; 3]
    }

    /// Multiply by atom^(-k).
    pub fn atom_inv(&self, atom: DenomAtom, k: u32) -> Self {
        let mut den = self.den;
        den[atom.index()] += k;
        RationalFunction::new(self.num.clone(), den)
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        RationalFunction::new(&self.num * p, self.den)
    }

    pub fn scale_mono(&self, m: &Mono) -> Self {
        // Monomials are units; no renormalization needed.
        RationalFunction {
            num: self.num.scale_mono(m),
            den: self.den,
        }
    }

    pub fn scale_rat(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den,
        }
    }

    /// Exact division of the numerator by `p`, keeping the denominator.
    /// Fails loudly when the numerator is not divisible.
    pub fn div_exact_poly(&self, p: &LaurentPoly) -> Result<Self> {
        if self.num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        match self.num.exact_div(p) {
            Some(q) => Ok(RationalFunction::new(q, self.den)),
            None => Err(Error::NotDivisible(p.to_string())),
        }
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        // Atoms involve only q and t, never swapped here.
        RationalFunction {
            num: self.num.swap_vars(a, b),
            den: self.den,
        }
    }

    /// Expand the (1-q)-part of the denominator as a geometric series and
    /// truncate at q-degree `max`. Errors when the denominator contains
    /// (1-t) or (qt-1).
    pub fn q_truncate(&self, max: i64) -> Result<LaurentPoly> {
        if self.den[DenomAtom::OneMinusT.index()] > 0 {
            return Err(Error::QSeriesDenominator("(1-t)".into()));
        }
        if self.den[DenomAtom::QtMinusOne.index()] > 0 {
            return Err(Error::QSeriesDenominator("(qt-1)".into()));
        }
        let e = self.den[DenomAtom::OneMinusQ.index()] as i64;
        if self.num.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if e == 0 {
            return Ok(self.num.truncate_var(Var::Q, max));
        }
        let qmin = self.num.exp_range(Var::Q).map(|(lo, _)| lo).unwrap_or(0);
        let len = max - qmin;
        if len < 0 {
            return Ok(LaurentPoly::zero());
        }
        // (1-q)^(-e) = sum_i C(i+e-1, e-1) q^i
        let mut series = LaurentPoly::zero();
        let mut coeff = BigRational::one();
        for i in 0..=len {
            if i > 0 {
                coeff = coeff * rat_int(i + e - 1) / rat_int(i);
            }
            series.add_term(Mono::var_pow(Var::Q, i), coeff.clone());
        }
        Ok((&self.num * &series).truncate_var(Var::Q, max))
    }

    pub fn to_latex(&self) -> String {
        if self.is_polynomial() {
            return self.num.to_latex();
        }
        let mut den = String::new();
        for atom in ATOMS {
            let k = self.den[atom.index()];
            if k == 1 {
                den.push_str(atom.name());
            } else if k > 1 {
                den.push_str(&format!("{}^{{{}}}", atom.name(), k));
            }
        }
        format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), den)
    }

    fn den_string(&self) -> String {
        let mut parts = Vec::new();
        for atom in ATOMS {
            let k = self.den[atom.index()];
            if k == 1 {
                parts.push(atom.name().to_string());
            } else if k > 1 {
                parts.push(format!("{}^{}", atom.name(), k));
            }
        }
        parts.join("*")
    }

    /// A single-term numerator with an empty denominator, if that is what
    /// this value is. Used for inline printing of coefficients.
    pub fn as_single_term(&self) -> Option<(&Mono, &BigRational)> {
        if self.is_polynomial() {
            self.num.single_term()
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_negative_term(&self) -> bool {
        self.as_single_term()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/{}", self.num, self.den_string())
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let mut den = [0u32; 3];
        for i in 0..3 {
            den[i] = self.den[i].max(rhs.den[i]);
        }
        let mut lhs_num = self.num.clone();
        let mut rhs_num = rhs.num.clone();
        for atom in ATOMS {
            let i = atom.index();
            for _ in 0..(den[i] - self.den[i]) {
                lhs_num = &lhs_num * &atom.poly();
            }
            for _ in 0..(den[i] - rhs.den[i]) {
                rhs_num = &rhs_num * &atom.poly();
            }
        }
        RationalFunction::new(&lhs_num + &rhs_num, den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        let mut den = [0u32; 3];
        for i in 0..3 {
            den[i] = self.den[i] + rhs.den[i];
        }
        RationalFunction::new(&self.num * &rhs.num, den)
    }
}
