//! Polynomials in x_1..x_r with scalar coefficients, used to evaluate
//! symmetric functions in finitely many variables and to collect labeled
//! path-tuple generating functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::ratfun::RationalFunction;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, RationalFunction>,
}

impl XPoly {
    pub fn zero(nvars: usize) -> Self {
        XPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: RationalFunction) -> Self {
        let mut p = XPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        XPoly::constant(nvars, RationalFunction::one())
    }

    /// x_1^k + ... + x_r^k
    pub fn power_sum(k: u32, nvars: usize) -> Self {
        let mut p = XPoly::zero(nvars);
        for i in 0..nvars {
            let mut exps = vec![0; nvars];
            exps[i] = k;
            p.add_term(exps, RationalFunction::one());
        }
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: RationalFunction) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = XPoly::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    /// Apply a permutation of the variables: new exponent of x_{perm[i]} is
    /// the old exponent of x_i.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = XPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                ne[perm[i]] = x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = XPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut vars = String::new();
                for (i, &exp) in e.iter().enumerate() {
                    if exp == 0 {
                        continue;
                    }
                    vars.push('*');
                    if exp == 1 {
                        vars.push_str(&format!("x{}", i + 1));
                    } else {
                        vars.push_str(&format!("x{}^{}", i + 1, exp));
                    }
                }
                let coeff = if c.as_single_term().is_some() || c.is_zero() {
                    c.to_string()
                } else {
                    format!("({c})")
                };
                format!("{coeff}{vars}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_sum_shape() {
        let p = XPoly::power_sum(2, 3);
        assert_eq!(p.terms().count(), 3);
        let sq = &p * &p;
        assert!(!sq.is_zero());
    }

    #[test]
    fn permutation_fixes_symmetric() {
        let p = XPoly::power_sum(1, 3);
        assert_eq!(p.permute_vars(&[2, 0, 1]), p);
    }
}
