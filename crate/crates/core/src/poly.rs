//! Sparse polynomials in the two formal variables λ and x.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::rational::Rational;

/// Exponent pair `(deg_lambda, deg_x)`.
pub type Exponents = (u32, u32);

/// A polynomial in λ and x over the rationals.
///
/// Terms are stored in a map keyed by `(deg_lambda, deg_x)`. No stored
/// coefficient is ever zero, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BivarPoly::monomial(0, 0, c)
    }

    pub fn from_int(n: i64) -> Self {
        BivarPoly::constant(Rational::from(n))
    }

    /// The formal variable λ.
    pub fn lambda() -> Self {
        BivarPoly::monomial(1, 0, Rational::one())
    }

    /// The formal variable x.
    pub fn x() -> Self {
        BivarPoly::monomial(0, 1, Rational::one())
    }

    pub fn monomial(deg_lambda: u32, deg_x: u32, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((deg_lambda, deg_x), coeff);
        }
        BivarPoly { terms }
    }

    /// Collects terms, merging repeated exponents and dropping zeros.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut terms: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e, c) in iter {
            *terms.entry(e).or_default() += &c;
        }
        terms.retain(|_, c| !c.is_zero());
        BivarPoly { terms }
    }

    /// Terms in lexicographic `(deg_lambda, deg_x)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, deg_lambda: u32, deg_x: u32) -> Rational {
        self.terms
            .get(&(deg_lambda, deg_x))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(0, 0))
    }

    /// The value of a constant polynomial with an integer coefficient.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_constant().and_then(|c| c.to_integer())
    }

    pub fn degree_lambda(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = BivarPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces λ and/or x by rational values. Variables given as `None`
    /// stay formal.
    pub fn substitute(&self, lambda: Option<&Rational>, x: Option<&Rational>) -> Self {
        BivarPoly::from_terms(self.terms.iter().map(|(&(dl, dx), c)| {
            let mut c = c.clone();
            let mut e = (dl, dx);
            if let Some(l) = lambda {
                c *= &l.pow(dl);
                e.0 = 0;
            }
            if let Some(v) = x {
                c *= &v.pow(dx);
                e.1 = 0;
            }
            (e, c)
        }))
    }

    fn mul_ref(&self, rhs: &BivarPoly) -> BivarPoly {
        let mut terms: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (&(al, ax), a) in &self.terms {
            for (&(bl, bx), b) in &rhs.terms {
                *terms.entry((al + bl, ax + bx)).or_default() += &(a * b);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BivarPoly { terms }
    }

    fn add_ref(&self, rhs: &BivarPoly, negate: bool) -> BivarPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let slot = terms.entry(*e).or_default();
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BivarPoly { terms }
    }
}

impl From<Rational> for BivarPoly {
    fn from(c: Rational) -> Self {
        BivarPoly::constant(c)
    }
}

impl From<i64> for BivarPoly {
    fn from(n: i64) -> Self {
        BivarPoly::from_int(n)
    }
}

macro_rules! poly_binop {
    ($imp:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a> $imp<&'a BivarPoly> for &'a BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: &'a BivarPoly) -> BivarPoly {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $imp<BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: BivarPoly) -> BivarPoly {
                let ($a, $b) = (&self, &rhs);
                $body
            }
        }
        impl<'a> $imp<&'a BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $method(self, rhs: &'a BivarPoly) -> BivarPoly {
                let ($a, $b) = (&self, rhs);
                $body
            }
        }
    };
}

poly_binop!(Add, add, |a, b| a.add_ref(b, false));
poly_binop!(Sub, sub, |a, b| a.add_ref(b, true));
poly_binop!(Mul, mul, |a, b| a.mul_ref(b));

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl std::iter::Sum for BivarPoly {
    fn sum<I: Iterator<Item = BivarPoly>>(iter: I) -> Self {
        iter.fold(BivarPoly::zero(), |acc, p| acc + p)
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, deg: u32) -> fmt::Result {
    match deg {
        0 => Ok(()),
        1 => f.write_str(name),
        d => write!(f, "{name}^{d}"),
    }
}

/// Human rendering: terms ordered by descending x-degree, then ascending
/// λ-degree. Coefficients other than positive integers are parenthesised,
/// e.g. `x + (-1/2) + (1/2)λ`.
impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        for (i, (&(dl, dx), c)) in ordered.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let bare = c.is_integer() && !c.is_negative();
            if (dl, dx) == (0, 0) {
                if bare {
                    write!(f, "{c}")?;
                } else {
                    write!(f, "({c})")?;
                }
                continue;
            }
            if !c.is_one() {
                if bare {
                    write!(f, "{c}")?;
                } else {
                    write!(f, "({c})")?;
                }
            }
            write_var(f, "λ", dl)?;
            write_var(f, "x", dx)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    dl: u32,
    dx: u32,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

/// `{"terms":[{"dl":..,"dx":..,"num":"..","den":".."}]}` sorted by `(dl,dx)`,
/// with integers as decimal strings.
impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            terms: self
                .terms
                .iter()
                .map(|(&(dl, dx), c)| TermRepr {
                    dl,
                    dx,
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let c: Rational = format!("{}/{}", t.num, t.den)
                .parse()
                .map_err(|e: Error| serde::de::Error::custom(e.to_string()))?;
            terms.push(((t.dl, t.dx), c));
        }
        Ok(BivarPoly::from_terms(terms))
    }
}
