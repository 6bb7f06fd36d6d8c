use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The affine line `a·x + b·y + c = 0` with coprime integer coefficients and
/// positive leading nonzero coefficient. Its positive side is where
/// `a·x + b·y + c > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl Line {
    /// Normalizes rational coefficients. Returns `None` when `a = b = 0`.
    pub fn new(a: BigRational, b: BigRational, c: BigRational) -> Option<Line> {
        if a.is_zero() && b.is_zero() {
            return None;
        }
        let denom = [&a, &b, &c].iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let scale = |q: &BigRational| (q * BigRational::from_integer(denom.clone())).to_integer();
        let (mut a, mut b, mut c) = (scale(&a), scale(&b), scale(&c));
        let g = a.gcd(&b).gcd(&c);
        a /= &g;
        b /= &g;
        c /= &g;
        let lead = if !a.is_zero() { &a } else { &b };
        if lead.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        Some(Line { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Option<Line> {
        let q = |v: i64| BigRational::from_integer(v.into());
        Line::new(q(a), q(b), q(c))
    }

    pub fn eval(&self, p: &Point) -> BigRational {
        &p.x * BigRational::from_integer(self.a.clone())
            + &p.y * BigRational::from_integer(self.b.clone())
            + BigRational::from_integer(self.c.clone())
    }

    pub fn side(&self, p: &Point) -> i8 {
        sign(&self.eval(p))
    }

    /// Sign of the normal `(a, b)` against a direction vector.
    pub fn side_of_direction(&self, d: &Point) -> i8 {
        let v = &d.x * BigRational::from_integer(self.a.clone()) + &d.y * BigRational::from_integer(self.b.clone());
        sign(&v)
    }

    /// Direction `(-b, a)` along the line.
    pub fn direction(&self) -> Point {
        Point { x: BigRational::from_integer(-&self.b), y: BigRational::from_integer(self.a.clone()) }
    }

    /// Some point on the line.
    pub fn anchor(&self) -> Point {
        let q = |v: &BigInt| BigRational::from_integer(v.clone());
        if !self.b.is_zero() {
            Point { x: BigRational::zero(), y: -q(&self.c) / q(&self.b) }
        } else {
            Point { x: -q(&self.c) / q(&self.a), y: BigRational::zero() }
        }
    }

    pub fn intersection(&self, other: &Line) -> Option<Point> {
        let det = &self.a * &other.b - &other.a * &self.b;
        if det.is_zero() {
            return None;
        }
        let x = &self.b * &other.c - &other.b * &self.c;
        let y = &other.a * &self.c - &self.a * &other.c;
        let det = BigRational::from_integer(det);
        Some(Point { x: BigRational::from_integer(x) / &det, y: BigRational::from_integer(y) / &det })
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

pub(crate) fn sign(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// A point (or direction) of the rational plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn add(&self, o: &Point) -> Point {
        Point { x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point { x: &self.x - &o.x, y: &self.y - &o.y }
    }

    pub fn midpoint(&self, o: &Point) -> Point {
        let two = BigRational::from_integer(2.into());
        Point { x: (&self.x + &o.x) / &two, y: (&self.y + &o.y) / &two }
    }

    pub fn dot(&self, o: &Point) -> BigRational {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &Point) -> BigRational {
        &self.x * &o.y - &self.y * &o.x
    }
}

/// Finitely many distinct affine lines in the real plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineArrangement {
    lines: Vec<Line>,
}

impl LineArrangement {
    /// Rejects degenerate lines and lines that coincide after normalization.
    pub fn new(lines: Vec<Option<Line>>) -> Result<Self> {
        let mut out = Vec::with_capacity(lines.len());
        for (i, l) in lines.into_iter().enumerate() {
            let l = l.ok_or(Error::DegenerateLine(i))?;
            if let Some(first) = out.iter().position(|m| *m == l) {
                return Err(Error::DuplicateLine { first, second: i });
            }
            out.push(l);
        }
        Ok(LineArrangement { lines: out })
    }

    pub fn from_ints(lines: &[[i64; 3]]) -> Result<Self> {
        Self::new(lines.iter().map(|&[a, b, c]| Line::from_ints(a, b, c)).collect())
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn sign_vector(&self, p: &Point) -> Vec<i8> {
        self.lines.iter().map(|l| l.side(p)).collect()
    }
}

/// A nonempty set of line indices; `ω` is the sum of the meridian duals of
/// these lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaSubset {
    indices: BTreeSet<usize>,
}

impl OmegaSubset {
    pub fn new(indices: impl IntoIterator<Item = usize>, lines: usize) -> Result<Self> {
        let indices: BTreeSet<usize> = indices.into_iter().collect();
        if indices.is_empty() {
            return Err(Error::EmptyOmega);
        }
        if let Some(&index) = indices.iter().find(|&&i| i >= lines) {
            return Err(Error::OmegaIndex { index, lines });
        }
        Ok(OmegaSubset { indices })
    }

    pub fn all(lines: usize) -> Result<Self> {
        Self::new(0..lines, lines)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }
}
