//! Sparse integer Laurent polynomials in one variable `t`, matrices over
//! them, specialization at `t = ±1`, and reduction modulo `t^2 - 1`.
//!
//! The quotient `Z[t^±]/(t^2 - 1)` is identified with `Z·1 ⊕ Z·t` in that
//! basis order everywhere; a polynomial `f ≡ b + a·t` acts on it by the block
//! `[[b, a], [a, b]]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::IntMatrix;

/// A specialization point `t = +1` or `t = -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitPoint {
    Plus,
    Minus,
}

impl UnitPoint {
    pub fn value(self) -> i64 {
        match self {
            UnitPoint::Plus => 1,
            UnitPoint::Minus => -1,
        }
    }
}

/// Laurent polynomial with integer coefficients. No stored coefficient is zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

/// The class `b + a·t` in `Z[t^±]/(t^2 - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueLinear {
    pub b: BigInt,
    pub a: BigInt,
}

impl ResidueLinear {
    /// Product in the residue ring: `(b + at)(b' + a't) = (bb' + aa') + (ab' + a'b)t`.
    pub fn mul(&self, other: &ResidueLinear) -> ResidueLinear {
        ResidueLinear {
            b: &self.b * &other.b + &self.a * &other.a,
            a: &self.a * &other.b + &other.a * &self.b,
        }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff · t^exp`
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `±t^k` for some `k`: the units of `Z[t^±]`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// Inverse of a unit `±t^k`.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.clone(), -e))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn eval_at_unit(&self, u: UnitPoint) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if u == UnitPoint::Minus && e % 2 != 0 { -c } else { c.clone() })
            .sum()
    }

    /// Reduction modulo `t^2 - 1`: even exponents collect into `b`, odd
    /// exponents into `a`.
    pub fn reduce_mod_t2(&self) -> ResidueLinear {
        let mut b = BigInt::zero();
        let mut a = BigInt::zero();
        for (e, c) in &self.terms {
            if e % 2 == 0 {
                b += c;
            } else {
                a += c;
            }
        }
        ResidueLinear { b, a }
    }

    /// Matrix of multiplication by `self` on `Z·1 ⊕ Z·t`.
    pub fn mult_block(&self) -> IntMatrix {
        let ResidueLinear { b, a } = self.reduce_mod_t2();
        IntMatrix::from_rows(&[vec![b.clone(), a.clone()], vec![a, b]], 2)
    }

    /// Whether `t - 1` divides `self`, via the value at `t = 1`.
    pub fn divisible_by_t_minus_one(&self) -> bool {
        self.eval_at_unit(UnitPoint::Plus).is_zero()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Dense matrix over `Z[t^±]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, data: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        LaurentMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged row");
            data.extend(row);
        }
        LaurentMatrix { rows: n, cols, data }
    }

    /// Lifts an integer matrix to constant polynomials.
    pub fn from_int(m: &IntMatrix) -> Self {
        Self::from_fn(m.rows(), m.cols(), |i, j| LaurentPoly::constant(m[(i, j)].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        let cols = self.cols.max(1);
        self.data.iter().enumerate().map(move |(k, v)| (k / cols, k % cols, v))
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        LaurentMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map(|v| v * c)
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.cols, rhs.rows, "incompatible shapes for product");
        let mut out = LaurentMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let cell = &mut out.data[i * rhs.cols + j];
                        *cell = &*cell + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data.iter().position(|v| !v.is_zero()).map(|k| (k / self.cols, k % self.cols))
    }

    /// Entrywise value at `t = u`.
    pub fn specialize(&self, u: UnitPoint) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].eval_at_unit(u))
    }

    /// The integer matrix of `self` acting on `(Z[t^±]/(t^2 - 1))^n`, with
    /// generator `j` expanded to the pair `(e_j, t·e_j)` at positions
    /// `2j, 2j + 1`.
    pub fn companion_embed(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(2 * self.rows, 2 * self.cols);
        for (i, j, f) in self.entries() {
            let ResidueLinear { b, a } = f.reduce_mod_t2();
            out[(2 * i, 2 * j)] = b.clone();
            out[(2 * i + 1, 2 * j + 1)] = b;
            out[(2 * i, 2 * j + 1)] = a.clone();
            out[(2 * i + 1, 2 * j)] = a;
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &LaurentPoly) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * factor;
            let cell = &mut self.data[dst * self.cols + j];
            *cell = &*cell + &v;
        }
    }

    /// `col[dst] += factor * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &LaurentPoly) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * factor;
            let cell = &mut self.data[i * self.cols + dst];
            *cell = &*cell + &v;
        }
    }

    pub fn scale_row(&mut self, i: usize, factor: &LaurentPoly) {
        for j in 0..self.cols {
            let cell = &mut self.data[i * self.cols + j];
            *cell = &*cell * factor;
        }
    }

    pub fn scale_col(&mut self, j: usize, factor: &LaurentPoly) {
        for i in 0..self.rows {
            let cell = &mut self.data[i * self.cols + j];
            *cell = &*cell * factor;
        }
    }

    /// Copy without row `r` and column `c` (either may be `None`).
    pub fn without(&self, r: Option<usize>, c: Option<usize>) -> Self {
        let keep_rows: Vec<usize> = (0..self.rows).filter(|&i| Some(i) != r).collect();
        let keep_cols: Vec<usize> = (0..self.cols).filter(|&j| Some(j) != c).collect();
        Self::from_fn(keep_rows.len(), keep_cols.len(), |i, j| self[(keep_rows[i], keep_cols[j])].clone())
    }

    /// Block-diagonal sum.
    pub fn block_diag(a: &LaurentMatrix, b: &LaurentMatrix) -> LaurentMatrix {
        let mut out = LaurentMatrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for (i, j, v) in a.entries() {
            out[(i, j)] = v.clone();
        }
        for (i, j, v) in b.entries() {
            out[(a.rows + i, a.cols + j)] = v.clone();
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for LaurentMatrix {
    type Output = LaurentPoly;

    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for LaurentMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn t_minus_one() -> LaurentPoly {
        p(&[(1, 1), (0, -1)])
    }

    #[test]
    fn ring_examples() {
        let t_plus_one = p(&[(1, 1), (0, 1)]);
        assert_eq!(&t_minus_one() * &t_plus_one, p(&[(2, 1), (0, -1)]));
        let f = p(&[(3, 2), (-1, 5)]);
        assert!((&f + &(-&f)).is_zero());
        assert_eq!(t_minus_one().shift(-1), p(&[(0, 1), (-1, -1)]));
        assert_eq!(t_minus_one().shift(-1).to_string(), "1 - t^-1");
    }

    #[test]
    fn evaluation() {
        assert_eq!(t_minus_one().eval_at_unit(UnitPoint::Plus), BigInt::from(0));
        assert_eq!(t_minus_one().eval_at_unit(UnitPoint::Minus), BigInt::from(-2));
        assert_eq!(p(&[(2, 1)]).eval_at_unit(UnitPoint::Minus), BigInt::from(1));
        assert_eq!(p(&[(-3, 1)]).eval_at_unit(UnitPoint::Minus), BigInt::from(-1));
    }

    #[test]
    fn residues() {
        let f = p(&[(3, 1), (1, 2), (0, 5)]);
        assert_eq!(f.reduce_mod_t2(), ResidueLinear { b: 5.into(), a: 3.into() });
        assert_eq!(p(&[(2, 1)]).reduce_mod_t2(), ResidueLinear { b: 1.into(), a: 0.into() });
        assert_eq!(t_minus_one().reduce_mod_t2(), ResidueLinear { b: (-1).into(), a: 1.into() });
    }

    #[test]
    fn blocks() {
        assert_eq!(t_minus_one().mult_block(), IntMatrix::from_i64(&[&[-1, 1], &[1, -1]]));
        assert_eq!(LaurentPoly::one().mult_block(), IntMatrix::identity(2));
        assert_eq!(
            p(&[(3, 1), (1, 2), (0, 5)]).mult_block(),
            IntMatrix::from_i64(&[&[5, 3], &[3, 5]])
        );
    }

    #[test]
    fn companion_examples() {
        let m = LaurentMatrix::from_rows(vec![vec![t_minus_one()]], 1);
        assert_eq!(m.companion_embed(), IntMatrix::from_i64(&[&[-1, 1], &[1, -1]]));
        assert_eq!(LaurentMatrix::identity(3).companion_embed(), IntMatrix::identity(6));
        let row = LaurentMatrix::from_rows(vec![vec![LaurentPoly::t(), LaurentPoly::one()]], 2);
        assert_eq!(row.companion_embed(), IntMatrix::from_i64(&[&[0, 1, 1, 0], &[1, 0, 0, 1]]));
    }

    #[test]
    fn specialization_examples() {
        let m = LaurentMatrix::from_rows(vec![vec![t_minus_one()]], 1);
        assert_eq!(m.specialize(UnitPoint::Plus), IntMatrix::from_i64(&[&[0]]));
        assert_eq!(m.specialize(UnitPoint::Minus), IntMatrix::from_i64(&[&[-2]]));
        assert!(LaurentMatrix::zeros(2, 3).specialize(UnitPoint::Minus).is_zero());
    }

    #[test]
    fn units() {
        assert!(p(&[(-4, -1)]).is_unit());
        assert!(!p(&[(0, 2)]).is_unit());
        assert!(!t_minus_one().is_unit());
        let u = p(&[(3, -1)]);
        assert_eq!(&u * &u.unit_inverse().unwrap(), LaurentPoly::one());
    }

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..5, -6i64..7), 0..5).prop_map(LaurentPoly::from_terms)
    }

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = LaurentMatrix> {
        prop::collection::vec(poly(), rows * cols).prop_map(move |v| {
            let mut it = v.into_iter();
            LaurentMatrix::from_fn(rows, cols, |_, _| it.next().unwrap())
        })
    }

    /// Synthetic division by `t - 1`, accepted only if quotient times divisor
    /// reproduces the input.
    fn divides_by_t_minus_one(f: &LaurentPoly) -> bool {
        let Some((low, _)) = f.terms().next() else {
            return true;
        };
        let g = f.shift(-low);
        let top = g.terms().last().map_or(0, |(e, _)| e);
        let coeff = |e: i64| g.terms().find(|(k, _)| *k == e).map_or_else(BigInt::zero, |(_, c)| c.clone());
        let mut quotient = Vec::new();
        let mut carry = BigInt::zero();
        for e in (1..=top).rev() {
            carry = &carry + &coeff(e);
            quotient.push((e - 1, carry.clone()));
        }
        let q = LaurentPoly::from_terms(quotient);
        &q * &t_minus_one() == g
    }

    proptest! {
        #[test]
        fn ring_laws(f in poly(), g in poly(), h in poly()) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f + &g, &g + &f);
        }

        #[test]
        fn evaluation_is_multiplicative(f in poly(), g in poly()) {
            for u in [UnitPoint::Plus, UnitPoint::Minus] {
                prop_assert_eq!((&f * &g).eval_at_unit(u), f.eval_at_unit(u) * g.eval_at_unit(u));
            }
        }

        #[test]
        fn residue_respects_products(f in poly(), g in poly()) {
            prop_assert_eq!((&f * &g).reduce_mod_t2(), f.reduce_mod_t2().mul(&g.reduce_mod_t2()));
            let r = f.reduce_mod_t2();
            prop_assert_eq!(f.eval_at_unit(UnitPoint::Plus), &r.b + &r.a);
            prop_assert_eq!(f.eval_at_unit(UnitPoint::Minus), &r.b - &r.a);
        }

        #[test]
        fn companion_is_functorial(a in matrix(2, 3), b in matrix(3, 2)) {
            prop_assert_eq!(a.mul(&b).companion_embed(), &a.companion_embed() * &b.companion_embed());
        }

        #[test]
        fn vanishing_at_one_iff_divisible(f in poly()) {
            prop_assert_eq!(f.divisible_by_t_minus_one(), divides_by_t_minus_one(&f));
            let multiple = &f * &t_minus_one();
            prop_assert!(multiple.divisible_by_t_minus_one());
        }
    }
}
