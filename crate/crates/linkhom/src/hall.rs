//! Elliptic Hall operators on symmetric functions: the Macdonald operators
//! D_k, the multiplication operators for the m = 0 column, and the Q_{m,n}
//! family built by iterated commutators along a coprime splitting.

use std::collections::HashMap;
use std::rc::Rc;

use num::{BigRational, One};

use crate::error::{Error, Result};
use crate::laurent::{poly_one_minus_q, poly_one_minus_t, rat_int, LaurentPoly, Mono, Var};

use crate::ratfun::{DenomAtom, RationalFunction};
use crate::symfunc::{gen_e, gen_h, plethysm, AlphabetExpr, SymFunc};

/// (1-q)(1-t)
pub fn wedge_poly() -> LaurentPoly {
    &poly_one_minus_q() * &poly_one_minus_t()
}

/// D_k f = f[X + (1-q)(1-t)/z] * sum_i (-z)^i e_i[X], coefficient of z^k.
pub fn d_k(f: &SymFunc, k: u32) -> Result<SymFunc> {
    let bound = f.degree_bound();
    if f.max_degree() + k > bound {
        return Err(Error::DegreeBound {
            degree: (f.max_degree() + k) as i64,
            bound: bound as i64,
        });
    }
    assert!(
        !f.terms().any(|(_, c)| c.numerator().uses_var(|v| v == Var::Z)),
        "operand must be free of the series variable z"
    );
    let shifted = plethysm(f, &AlphabetExpr::x_plus_wedge_over_z());
    let mut series = SymFunc::zero(bound);
    for i in 0..=bound {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let zi = Mono::var_pow(Var::Z, i as i64);
        series = &series
            + &gen_e(i, bound)?
                .scale(&RationalFunction::from_mono(zi, rat_int(sign)));
    }
    let product = &shifted * &series;
    // Extract the z^k coefficient of every scalar.
    let mut out = SymFunc::zero(bound);
    for (l, c) in product.terms() {
        let parts = c.numerator().split_by_var(Var::Z);
        if let Some(part) = parts.get(&(k as i64)) {
            out.add_term(l.clone(), RationalFunction::new(part.clone(), c.den_counts()));
        }
    }
    Ok(out)
}

/// Multiplication by (qt/(qt-1)) h_n[(1-qt)X/(qt)].
pub fn q_0n(f: &SymFunc, n: u32) -> Result<SymFunc> {
    let bound = f.degree_bound();
    if f.max_degree() + n > bound {
        return Err(Error::DegreeBound {
            degree: (f.max_degree() + n) as i64,
            bound: bound as i64,
        });
    }
    let hn = plethysm(&gen_h(n, bound)?, &AlphabetExpr::x_scaled_by_qt());
    let prefactor = RationalFunction::from_mono(
        Mono::from_pairs(&[(Var::Q, 1), (Var::T, 1)]),
        BigRational::one(),
    )
    .atom_inv(DenomAtom::QtMinusOne, 1);
    Ok(&f.clone() * &hn.scale(&prefactor))
}

/// The unique splitting (a, b) with n*a - m*b = 1, 1 <= a < m and
/// 0 <= b < n. For n = 1 this degenerates to (1, 0).
pub fn split_coprime(m: u32, n: u32) -> Result<(u32, u32)> {
    if m < 2 {
        return Err(Error::SplitRange(m));
    }
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    for a in 1..m {
        let na = n as i64 * a as i64;
        if (na - 1) % m as i64 == 0 {
            let b = (na - 1) / m as i64;
            debug_assert!(b >= 0 && (b as u32) < n.max(1));
            return Ok((a, b as u32));
        }
    }
    // n*a runs over all residues mod m since gcd(m, n) = 1.
    unreachable!("coprime splitting always exists");
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The operator Q_{m,n} as a tree: base cases are the column operator and
/// the Macdonald operator, and otherwise a commutator of smaller operators
/// divided exactly by (1-q)(1-t).
#[derive(Debug)]
pub enum QOperator {
    Column(u32),
    Macdonald(u32),
    Commutator(Rc<QOperator>, Rc<QOperator>),
}

impl QOperator {
    /// Build the operator tree for coprime (m, n), sharing subtrees.
    pub fn build(m: u32, n: u32) -> Result<Rc<QOperator>> {
        fn rec(m: u32, n: u32, memo: &mut HashMap<(u32, u32), Rc<QOperator>>) -> Result<Rc<QOperator>> {
            if let Some(op) = memo.get(&(m, n)) {
                return Ok(op.clone());
            }
            let op = match m {
                0 => Rc::new(QOperator::Column(n)),
                1 => Rc::new(QOperator::Macdonald(n)),
                _ => {
                    if gcd(m, n) != 1 {
                        return Err(Error::NotCoprime(m, n));
                    }
                    let (a, b) = split_coprime(m, n)?;
                    let left = rec(m - a, n - b, memo)?;
                    let right = rec(a, b, memo)?;
                    Rc::new(QOperator::Commutator(left, right))
                }
            };
            memo.insert((m, n), op.clone());
            Ok(op)
        }
        rec(m, n, &mut HashMap::new())
    }

    /// Apply to a symmetric function. Every commutator numerator must be
    /// exactly divisible by (1-q)(1-t); a failure is surfaced, never
    /// absorbed into a denominator.
    pub fn apply(&self, f: &SymFunc) -> Result<SymFunc> {
        match self {
            QOperator::Column(n) => q_0n(f, *n),
            QOperator::Macdonald(n) => d_k(f, *n),
            QOperator::Commutator(a, b) => {
                let ab = a.apply(&b.apply(f)?)?;
                let ba = b.apply(&a.apply(f)?)?;
                (&ab - &ba).div_exact_poly(&wedge_poly())
            }
        }
    }
}

/// Q_{m,n} f for coprime (m, n).
pub fn q_apply(m: u32, n: u32, f: &SymFunc) -> Result<SymFunc> {
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    QOperator::build(m, n)?.apply(f)
}

/// Q_{m,n}^k (1) at the given degree bound (which must be at least k*n).
pub fn q_power(m: u32, n: u32, k: u32, degree_bound: u32) -> Result<SymFunc> {
    if gcd(m, n) != 1 {
        return Err(Error::NotCoprime(m, n));
    }
    if k * n > degree_bound {
        return Err(Error::DegreeBound {
            degree: (k * n) as i64,
            bound: degree_bound as i64,
        });
    }
    let op = QOperator::build(m, n)?;
    let mut f = SymFunc::one(degree_bound);
    for _ in 0..k {
        f = op.apply(&f)?;
    }
    Ok(f)
}
