//! Truncated symmetric functions in the power-sum basis.
//!
//! The internal basis is exclusively power sums: elementary and homogeneous
//! data are derived views. Plethystic substitution is a monomial substitution
//! in this basis, which is why every alphabet used here reduces to the
//! `pleth_power` rule. Coefficients are [`RationalFunction`]s and may carry
//! the auxiliary variables z and y_i.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{rat_int, LaurentPoly, Mono, Var};
use crate::partition::Partition;
use crate::ratfun::RationalFunction;
use crate::xpoly::XPoly;

/// A symmetric function truncated above total degree `degree_bound`,
/// expressed in the power-sum basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    degree_bound: u32,
    terms: BTreeMap<Partition, RationalFunction>,
}

impl SymFunc {
    pub fn zero(degree_bound: u32) -> Self {
        SymFunc {
            degree_bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree_bound: u32) -> Self {
        SymFunc::constant(degree_bound, RationalFunction::one())
    }

    pub fn constant(degree_bound: u32, c: RationalFunction) -> Self {
        let mut f = SymFunc::zero(degree_bound);
        f.add_term(Partition::empty(), c);
        f
    }

    /// The power sum p_k.
    pub fn p(k: u32, degree_bound: u32) -> Self {
        assert!(k <= degree_bound, "p_{k} exceeds the degree bound");
        let mut f = SymFunc::zero(degree_bound);
        f.add_term(Partition::single(k), RationalFunction::one());
        f
    }

    pub fn p_lambda(lambda: Partition, degree_bound: u32) -> Self {
        assert!(lambda.size() <= degree_bound);
        let mut f = SymFunc::zero(degree_bound);
        f.add_term(lambda, RationalFunction::one());
        f
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn add_term(&mut self, lambda: Partition, c: RationalFunction) {
        if c.is_zero() || lambda.size() > self.degree_bound {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> RationalFunction {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = SymFunc::zero(self.degree_bound);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), x * c);
        }
        out
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        let mut out = SymFunc::zero(self.degree_bound);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), x.scale_poly(p));
        }
        out
    }

    pub fn scale_mono(&self, m: &Mono) -> Self {
        let mut out = SymFunc::zero(self.degree_bound);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), x.scale_mono(m));
        }
        out
    }

    /// Exact coefficient-wise division of numerators by `p`.
    pub fn div_exact_poly(&self, p: &LaurentPoly) -> Result<Self> {
        let mut out = SymFunc::zero(self.degree_bound);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), x.div_exact_poly(p)?);
        }
        Ok(out)
    }

    /// Maximum partition size with a non-zero coefficient.
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|l| l.size()).max().unwrap_or(0)
    }

    pub fn homogeneous_component(&self, d: u32) -> SymFunc {
        let mut out = SymFunc::zero(self.degree_bound);
        for (l, c) in &self.terms {
            if l.size() == d {
                out.add_term(l.clone(), c.clone());
            }
        }
        out
    }

    /// Coefficient-wise q-series truncation; see
    /// [`RationalFunction::q_truncate`].
    pub fn q_truncate(&self, max: i64) -> Result<SymFunc> {
        let mut out = SymFunc::zero(self.degree_bound);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), RationalFunction::from_poly(c.q_truncate(max)?));
        }
        Ok(out)
    }

    /// Substitute p_k -> x_1^k + ... + x_r^k.
    pub fn evaluate_in_x(&self, r: usize) -> XPoly {
        let mut out = XPoly::zero(r);
        for (l, c) in &self.terms {
            let mut prod = XPoly::one(r);
            for &part in l.parts() {
                prod = &prod * &XPoly::power_sum(part, r);
            }
            out = &out + &prod.scale(c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(l, c)| {
                serde_json::json!({
                    "partition": l.parts(),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "p_basis": items })
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                let coeff = format!("\\left({}\\right)", c.to_latex());
                if l.is_empty() {
                    coeff
                } else {
                    let idx: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
                    format!("{} p_{{{}}}", coeff, idx.join(","))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

pub fn fmt_coeff_inline(c: &RationalFunction) -> String {
    match c.as_single_term() {
        Some(_) => c.to_string(),
        None => format!("({c})"),
    }
}

impl fmt::Display for SymFunc {
    /// Canonical form `c*p[l1,l2,...]` joined by ` + `, partitions in the
    /// (size, reverse-lex) order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                let coeff = fmt_coeff_inline(c);
                if l.is_empty() {
                    coeff
                } else {
                    format!("{}*p{}", coeff, l)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        assert_eq!(self.degree_bound, rhs.degree_bound, "degree bounds differ");
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        let mut out = SymFunc::zero(self.degree_bound);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), -c);
        }
        out
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    /// Product in the p-basis; partitions merge. Terms above the degree
    /// bound are truncated away.
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        assert_eq!(self.degree_bound, rhs.degree_bound, "degree bounds differ");
        let mut out = SymFunc::zero(self.degree_bound);
        for (la, ca) in &self.terms {
            for (lb, cb) in &rhs.terms {
                if la.size() + lb.size() > self.degree_bound {
                    continue;
                }
                out.add_term(la.union(lb), ca * cb);
            }
        }
        out
    }
}

/// The elementary symmetric function e_n in the p-basis, via Newton's
/// identity n e_n = sum_{i=1..n} (-1)^{i-1} p_i e_{n-i}.
pub fn gen_e(n: u32, degree_bound: u32) -> Result<SymFunc> {
    if n > degree_bound {
        return Err(Error::DegreeBound {
            degree: n as i64,
            bound: degree_bound as i64,
        });
    }
    let mut es: Vec<SymFunc> = vec![SymFunc::one(degree_bound)];
    for m in 1..=n {
        let mut acc = SymFunc::zero(degree_bound);
        for i in 1..=m {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            let term = (&SymFunc::p(i, degree_bound) * &es[(m - i) as usize])
                .scale(&RationalFunction::from_int(sign));
            acc = &acc + &term;
        }
        let inv_m = BigRational::one() / rat_int(m as i64);
        es.push(acc.scale(&RationalFunction::from_rational(inv_m)));
    }
    Ok(es.pop().unwrap())
}

/// The complete homogeneous symmetric function h_n in the p-basis, via
/// n h_n = sum_{i=1..n} p_i h_{n-i}.
pub fn gen_h(n: u32, degree_bound: u32) -> Result<SymFunc> {
    if n > degree_bound {
        return Err(Error::DegreeBound {
            degree: n as i64,
            bound: degree_bound as i64,
        });
    }
    let mut hs: Vec<SymFunc> = vec![SymFunc::one(degree_bound)];
    for m in 1..=n {
        let mut acc = SymFunc::zero(degree_bound);
        for i in 1..=m {
            acc = &acc + &(&SymFunc::p(i, degree_bound) * &hs[(m - i) as usize]);
        }
        let inv_m = BigRational::one() / rat_int(m as i64);
        hs.push(acc.scale(&RationalFunction::from_rational(inv_m)));
    }
    Ok(hs.pop().unwrap())
}

/// Hall inner product: <p_lambda, p_mu> = delta * z_lambda, extended
/// bilinearly.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> RationalFunction {
    assert_eq!(f.degree_bound, g.degree_bound, "degree bounds differ");
    let mut out = RationalFunction::zero();
    for (l, cf) in &f.terms {
        if let Some(cg) = g.terms.get(l) {
            let z = RationalFunction::from_rational(l.z_value());
            out = &out + &(&(cf * cg) * &z);
        }
    }
    out
}

/// Coefficients in the elementary basis: partitions index e_lambda.
pub type EBasis = BTreeMap<Partition, RationalFunction>;

/// Expansions of p_n in the e-basis, degrees 1..=max, with rational
/// coefficients. p_n = (-1)^(n-1) n e_n + sum_{i<n} (-1)^(n+i-1) e_{n-i} p_i.
fn p_in_e_table(max: u32) -> Vec<BTreeMap<Partition, BigRational>> {
    let mut table: Vec<BTreeMap<Partition, BigRational>> = Vec::new();
    for n in 1..=max {
        let mut exp: BTreeMap<Partition, BigRational> = BTreeMap::new();
        let lead = if n % 2 == 1 {
            rat_int(n as i64)
        } else {
            rat_int(-(n as i64))
        };
        exp.insert(Partition::single(n), lead);
        for i in 1..n {
            let sign = if (n + i) % 2 == 1 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            let prev = table[(i - 1) as usize].clone();
            for (mu, c) in prev {
                let entry = exp.entry(mu.with_part(n - i)).or_insert_with(BigRational::zero);
                *entry += &sign * &c;
                if entry.is_zero() {
                    exp.remove(&mu.with_part(n - i));
                }
            }
        }
        table.push(exp);
    }
    table
}

/// Convert to the elementary basis. Exact: round-trips with
/// [`from_e_basis`].
pub fn to_e_basis(f: &SymFunc) -> EBasis {
    let max = f.max_degree();
    let table = p_in_e_table(max);
    let mut out: EBasis = BTreeMap::new();
    for (l, c) in &f.terms {
        // Expand p_lambda = prod p_{l_i} in the e-basis.
        let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
        acc.insert(Partition::empty(), BigRational::one());
        for &part in l.parts() {
            let factor = &table[(part - 1) as usize];
            let mut next: BTreeMap<Partition, BigRational> = BTreeMap::new();
            for (mu, cm) in &acc {
                for (nu, cn) in factor {
                    let entry = next.entry(mu.union(nu)).or_insert_with(BigRational::zero);
                    *entry += cm * cn;
                }
            }
            next.retain(|_, v| !v.is_zero());
            acc = next;
        }
        for (mu, cm) in acc {
            let add = c.scale_rat(&cm);
            let entry = out.entry(mu).or_insert_with(RationalFunction::zero);
            *entry = &*entry + &add;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

pub fn from_e_basis(coeffs: &EBasis, degree_bound: u32) -> Result<SymFunc> {
    let mut out = SymFunc::zero(degree_bound);
    for (mu, c) in coeffs {
        let mut prod = SymFunc::one(degree_bound);
        for &part in mu.parts() {
            prod = &prod * &gen_e(part, degree_bound)?;
        }
        out = &out + &prod.scale(c);
    }
    Ok(out)
}

/// The specialization sending every e_i to 1+a.
pub fn psi(f: &SymFunc) -> RationalFunction {
    let one_plus_a = &LaurentPoly::one() + &LaurentPoly::var(Var::A);
    let ebasis = to_e_basis(f);
    let mut out = RationalFunction::zero();
    for (mu, c) in ebasis {
        out = &out + &c.scale_poly(&one_plus_a.pow(mu.len() as u32));
    }
    out
}

/// The same specialization through the Hall pairing: for homogeneous f of
/// degree n this is sum_i <f, h_i e_{n-i}> a^i; non-homogeneous input is
/// handled degree by degree.
pub fn psi_via_inner(f: &SymFunc) -> Result<RationalFunction> {
    let mut out = RationalFunction::zero();
    for d in 0..=f.max_degree() {
        let comp = f.homogeneous_component(d);
        if comp.is_zero() {
            continue;
        }
        for i in 0..=d {
            let he = &gen_h(i, f.degree_bound)? * &gen_e(d - i, f.degree_bound)?;
            let pairing = hall_inner(&comp, &he);
            out = &out + &pairing.scale_mono(&Mono::var_pow(Var::A, i as i64));
        }
    }
    Ok(out)
}

/// A plethystic alphabet: a sum of terms `scalar * monomial * X` or
/// `scalar * monomial`, with rational scalars and monomials over q, t, z and
/// the y_i (never the variable a).
#[derive(Clone, Debug)]
pub struct AlphabetExpr {
    terms: Vec<(BigRational, Mono, bool)>,
}

impl AlphabetExpr {
    pub fn new(terms: Vec<(BigRational, Mono, bool)>) -> Self {
        for (_, m, _) in &terms {
            assert!(
                m.exps().iter().all(|&(v, _)| v != Var::A),
                "alphabet monomials must not involve a"
            );
        }
        AlphabetExpr { terms }
    }

    /// X itself.
    pub fn identity() -> Self {
        AlphabetExpr::new(vec![(BigRational::one(), Mono::one(), true)])
    }

    /// X + (t-1) y_j  (the sign flips for minus).
    pub fn x_shifted_by_y(j: u32, plus: bool) -> Self {
        let s = if plus { 1 } else { -1 };
        AlphabetExpr::new(vec![
            (BigRational::one(), Mono::one(), true),
            (rat_int(s), Mono::from_pairs(&[(Var::T, 1), (Var::Y(j), 1)]), false),
            (rat_int(-s), Mono::var(Var::Y(j)), false),
        ])
    }

    /// -X / y_j
    pub fn neg_x_over_y(j: u32) -> Self {
        AlphabetExpr::new(vec![(rat_int(-1), Mono::var_pow(Var::Y(j), -1), true)])
    }

    /// X + (1-q)(1-t)/z
    pub fn x_plus_wedge_over_z() -> Self {
        let zi = |pairs: &[(Var, i64)]| {
            let mut v = vec![(Var::Z, -1)];
            v.extend_from_slice(pairs);
            Mono::from_pairs(&v)
        };
        AlphabetExpr::new(vec![
            (BigRational::one(), Mono::one(), true),
            (rat_int(1), zi(&[]), false),
            (rat_int(-1), zi(&[(Var::Q, 1)]), false),
            (rat_int(-1), zi(&[(Var::T, 1)]), false),
            (rat_int(1), zi(&[(Var::Q, 1), (Var::T, 1)]), false),
        ])
    }

    /// (1-qt) X / (qt)
    pub fn x_scaled_by_qt() -> Self {
        AlphabetExpr::new(vec![
            (
                BigRational::one(),
                Mono::from_pairs(&[(Var::Q, -1), (Var::T, -1)]),
                true,
            ),
            (rat_int(-1), Mono::one(), true),
        ])
    }
}

/// p_k[A]: every term (c, m, with_X) contributes c * m^(k) * (p_k or 1).
/// Returns (coefficient of p_k, constant part).
pub fn pleth_power(k: u32, alphabet: &AlphabetExpr) -> (LaurentPoly, LaurentPoly) {
    assert!(k >= 1);
    let mut with_x = LaurentPoly::zero();
    let mut without = LaurentPoly::zero();
    for (c, m, has_x) in &alphabet.terms {
        let mk = m.pow(k as i64);
        if *has_x {
            with_x.add_term(mk, c.clone());
        } else {
            without.add_term(mk, c.clone());
        }
    }
    (with_x, without)
}

/// Plethystic substitution f[A], expanding multiplicatively over
/// p_lambda = prod p_{lambda_i} and truncating at the degree bound.
pub fn plethysm(f: &SymFunc, alphabet: &AlphabetExpr) -> SymFunc {
    let bound = f.degree_bound;
    let mut cache: BTreeMap<u32, (LaurentPoly, LaurentPoly)> = BTreeMap::new();
    let mut out = SymFunc::zero(bound);
    for (l, c) in &f.terms {
        let mut acc = SymFunc::constant(bound, c.clone());
        for &part in l.parts() {
            let (alpha, beta) = cache
                .entry(part)
                .or_insert_with(|| pleth_power(part, alphabet))
                .clone();
            let mut next = SymFunc::zero(bound);
            if !alpha.is_zero() {
                for (mu, cm) in &acc.terms {
                    if mu.size() + part <= bound {
                        next.add_term(mu.with_part(part), cm.scale_poly(&alpha));
                    }
                }
            }
            if !beta.is_zero() {
                next = &next + &acc.scale_poly(&beta);
            }
            acc = next;
        }
        out = &out + &acc;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{poly_a, poly_q, poly_t};
    use crate::partition::partitions_of;

    fn rf(n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }

    #[test]
    fn newton_small_cases() {
        let d = 4;
        assert_eq!(gen_e(1, d).unwrap(), SymFunc::p(1, d));
        assert_eq!(gen_h(1, d).unwrap(), SymFunc::p(1, d));

        // e2 = (p1^2 - p2)/2, h2 = (p1^2 + p2)/2
        let half = RationalFunction::from_rational(BigRational::new(1.into(), 2.into()));
        let p11 = SymFunc::p_lambda(Partition::from_parts(vec![1, 1]), d);
        let p2 = SymFunc::p(2, d);
        assert_eq!(gen_e(2, d).unwrap(), (&p11 - &p2).scale(&half));
        assert_eq!(gen_h(2, d).unwrap(), (&p11 + &p2).scale(&half));
        assert!(gen_e(5, d).is_err());
    }

    #[test]
    fn hall_inner_examples() {
        let d = 4;
        let p1 = SymFunc::p(1, d);
        assert_eq!(hall_inner(&p1, &p1), rf(1));
        let p2 = SymFunc::p(2, d);
        let p11 = SymFunc::p_lambda(Partition::from_parts(vec![1, 1]), d);
        assert!(hall_inner(&p2, &p11).is_zero());
        let p22 = SymFunc::p_lambda(Partition::from_parts(vec![2, 2]), d);
        assert_eq!(hall_inner(&p22, &p22), rf(8));
    }

    #[test]
    fn e_basis_identities() {
        let d = 4;
        // p2 = e1^2 - 2 e2
        let eb = to_e_basis(&SymFunc::p(2, d));
        assert_eq!(eb.len(), 2);
        assert_eq!(eb[&Partition::from_parts(vec![1, 1])], rf(1));
        assert_eq!(eb[&Partition::single(2)], rf(-2));

        // h2 = e1^2 - e2
        let eb = to_e_basis(&gen_h(2, d).unwrap());
        assert_eq!(eb[&Partition::from_parts(vec![1, 1])], rf(1));
        assert_eq!(eb[&Partition::single(2)], rf(-1));

        // p1 -> e1
        let eb = to_e_basis(&SymFunc::p(1, d));
        assert_eq!(eb.len(), 1);
        assert_eq!(eb[&Partition::single(1)], rf(1));
    }

    #[test]
    fn e_basis_roundtrip() {
        let d = 5;
        let mut f = SymFunc::zero(d);
        f.add_term(Partition::from_parts(vec![3, 1]), rf(2));
        f.add_term(Partition::from_parts(vec![2, 2, 1]), rf(-1));
        f.add_term(Partition::single(1), RationalFunction::from_poly(poly_q()));
        let back = from_e_basis(&to_e_basis(&f), d).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn psi_examples() {
        let d = 4;
        let one_plus_a = RationalFunction::from_poly(&LaurentPoly::one() + &poly_a());
        assert_eq!(psi(&gen_e(1, d).unwrap()), one_plus_a);
        assert_eq!(psi(&SymFunc::one(d)), RationalFunction::one());

        // psi(p2) = a^2 - 1
        let a2 = LaurentPoly::mono(Mono::var_pow(Var::A, 2), rat_int(1));
        let expect = RationalFunction::from_poly(&a2 - &LaurentPoly::one());
        assert_eq!(psi(&SymFunc::p(2, d)), expect);
        assert_eq!(psi_via_inner(&SymFunc::p(2, d)).unwrap(), expect);
    }

    #[test]
    fn psi_h2_both_routes() {
        let d = 4;
        let h2 = gen_h(2, d).unwrap();
        // a + a^2 by either route
        let mut expect = LaurentPoly::zero();
        expect.add_term(Mono::var_pow(Var::A, 1), rat_int(1));
        expect.add_term(Mono::var_pow(Var::A, 2), rat_int(1));
        let expect = RationalFunction::from_poly(expect);
        assert_eq!(psi(&h2), expect);
        assert_eq!(psi_via_inner(&h2).unwrap(), expect);
        // and e2 gives 1 + a
        let e2 = gen_e(2, d).unwrap();
        let onea = RationalFunction::from_poly(&LaurentPoly::one() + &poly_a());
        assert_eq!(psi(&e2), onea);
        assert_eq!(psi_via_inner(&e2).unwrap(), onea);
    }

    #[test]
    fn psi_routes_agree_on_random_inputs() {
        let d = 6;
        // deterministic pseudo-random coefficients over several partitions
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 11) as i64 - 5
        };
        for _ in 0..10 {
            let mut f = SymFunc::zero(d);
            for deg in 1..=d {
                for l in partitions_of(deg) {
                    f.add_term(l, rf(next()));
                }
            }
            assert_eq!(psi(&f), psi_via_inner(&f).unwrap());
        }
    }

    #[test]
    fn pleth_power_rules() {
        // p_k[X + (t-1)y] = p_k + (t^k - 1) y^k
        let k = 3;
        let (alpha, beta) = pleth_power(k, &AlphabetExpr::x_shifted_by_y(1, true));
        assert!(alpha.is_one());
        let mut expect = LaurentPoly::zero();
        expect.add_term(Mono::from_pairs(&[(Var::T, 3), (Var::Y(1), 3)]), rat_int(1));
        expect.add_term(Mono::var_pow(Var::Y(1), 3), rat_int(-1));
        assert_eq!(beta, expect);

        // p_k[(1-qt)X/(qt)] = ((qt)^{-k} - 1) p_k
        let (alpha, beta) = pleth_power(k, &AlphabetExpr::x_scaled_by_qt());
        assert!(beta.is_zero());
        let mut expect = LaurentPoly::zero();
        expect.add_term(Mono::from_pairs(&[(Var::Q, -3), (Var::T, -3)]), rat_int(1));
        expect.add_term(Mono::one(), rat_int(-1));
        assert_eq!(alpha, expect);

        // p_k[-X/y] = -p_k y^{-k}
        let (alpha, beta) = pleth_power(k, &AlphabetExpr::neg_x_over_y(1));
        assert!(beta.is_zero());
        assert_eq!(
            alpha,
            LaurentPoly::mono(Mono::var_pow(Var::Y(1), -3), rat_int(-1))
        );
    }

    #[test]
    fn plethysm_identity_alphabet() {
        let d = 5;
        let mut f = SymFunc::zero(d);
        f.add_term(Partition::from_parts(vec![2, 1]), rf(3));
        f.add_term(Partition::single(4), RationalFunction::from_poly(poly_t()));
        assert_eq!(plethysm(&f, &AlphabetExpr::identity()), f);
    }

    #[test]
    fn plethysm_p1_wedge_alphabet() {
        // p1[X + (1-q)(1-t)/z] = p1 + (1-q)(1-t) z^{-1}
        let d = 3;
        let out = plethysm(&SymFunc::p(1, d), &AlphabetExpr::x_plus_wedge_over_z());
        let mut expect = SymFunc::p(1, d);
        let wedge = &(&LaurentPoly::one() - &poly_q()) * &(&LaurentPoly::one() - &poly_t());
        expect.add_term(
            Partition::empty(),
            RationalFunction::from_poly(wedge.scale_mono(&Mono::var_pow(Var::Z, -1))),
        );
        assert_eq!(out, expect);
    }

    #[test]
    fn plethysm_e2_negated_scaled_alphabet() {
        // e2[-X/y] = h2 * y^{-2}; oracle: evaluate both sides in 3 variables.
        let d = 4;
        let e2 = gen_e(2, d).unwrap();
        let out = plethysm(&e2, &AlphabetExpr::neg_x_over_y(1));
        let h2 = gen_h(2, d).unwrap().scale_mono(&Mono::var_pow(Var::Y(1), -2));
        assert_eq!(out, h2);
        assert_eq!(out.evaluate_in_x(3), h2.evaluate_in_x(3));
    }

    #[test]
    fn evaluate_in_x_examples() {
        let d = 3;
        let e1 = gen_e(1, d).unwrap();
        let mut expect = XPoly::zero(2);
        expect.add_term(vec![1, 0], RationalFunction::one());
        expect.add_term(vec![0, 1], RationalFunction::one());
        assert_eq!(e1.evaluate_in_x(2), expect);

        let e2 = gen_e(2, d).unwrap();
        let mut expect = XPoly::zero(2);
        expect.add_term(vec![1, 1], RationalFunction::one());
        assert_eq!(e2.evaluate_in_x(2), expect);

        let p2 = SymFunc::p(2, d);
        let mut expect = XPoly::zero(3);
        expect.add_term(vec![2, 0, 0], RationalFunction::one());
        expect.add_term(vec![0, 2, 0], RationalFunction::one());
        expect.add_term(vec![0, 0, 2], RationalFunction::one());
        assert_eq!(p2.evaluate_in_x(3), expect);
    }

    #[test]
    fn gen_e_in_n_vars_is_product() {
        for n in 1..=4u32 {
            let e = gen_e(n, n).unwrap();
            let mut expect = XPoly::zero(n as usize);
            expect.add_term(vec![1; n as usize], RationalFunction::one());
            assert_eq!(e.evaluate_in_x(n as usize), expect);
        }
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let d = 6;
        let f = &gen_e(2, d).unwrap() + &SymFunc::p(1, d);
        let g = &gen_h(3, d).unwrap() - &SymFunc::p(3, d).scale(&rf(2));
        let prod = (&f * &g).evaluate_in_x(3);
        let sep = &f.evaluate_in_x(3) * &g.evaluate_in_x(3);
        assert_eq!(prod, sep);
    }
}
