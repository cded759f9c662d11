//! Sparse multivariate polynomials and rational functions over `Q`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::rational::{rand_q, Rng};
use crate::Q;

/// Exponent vector with trailing zeros trimmed; `Vec` order is lex with variable 0 most
/// significant, so the last key of a [`Poly`] is its leading monomial.
pub type Monomial = Vec<u32>;

pub const HBAR: usize = 0;
pub const U: usize = 1;
pub const V: usize = 2;
pub const W: usize = 3;

/// Index of `a_k` (1-based as in `a₁, a₂, …`).
pub fn a_var(k: usize) -> usize {
    3 + k
}

pub fn var_name(i: usize) -> String {
    match i {
        HBAR => "ħ".into(),
        U => "u".into(),
        V => "v".into(),
        W => "w".into(),
        k => alloc::format!("a{}", k - 3),
    }
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

fn mono_div(a: &[u32], b: &[u32]) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = a.to_vec();
    for (i, x) in b.iter().enumerate() {
        out[i] = out[i].checked_sub(*x)?;
    }
    Some(trim(out))
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(Q::from_integer(n.into()))
    }

    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        let mut p = Poly::zero();
        p.terms.insert(m, Q::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Q) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut acc: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                *acc.entry(mono_mul(m1, m2)).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { terms: acc }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    /// `self / d` when the division is exact.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = mono_div(rm, &dm)?;
            let c = rc / &dc;
            let mut t = Poly::zero();
            t.terms.insert(m, c);
            rem = rem.sub(&t.mul(d));
            quo = quo.add(&t);
        }
        Some(quo)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Vec::new() };
        let mut g = first.clone();
        for m in it {
            g.truncate(m.len());
            for (i, x) in g.iter_mut().enumerate() {
                *x = (*x).min(m[i]);
            }
        }
        trim(g)
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        let mut s = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            s += t;
        }
        s
    }

    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// Replace variable `i` by the polynomial `by`.
    pub fn substitute(&self, i: usize, by: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.get(i).copied().unwrap_or(0);
            let mut rest = m.clone();
            if i < rest.len() {
                rest[i] = 0;
            }
            let mut t = Poly::zero();
            t.terms.insert(trim(rest), c.clone());
            for _ in 0..e {
                t = t.mul(by);
            }
            out = out.add(&t);
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { var_name(i) } else { alloc::format!("{}^{}", var_name(i), e) })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `num / den`, with `den ≠ 0`, monic leading coefficient and no common monomial factor.
#[derive(Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(RatFunc { num, den }.reduced())
    }

    pub fn poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        RatFunc::poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFunc::poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduced(self) -> Self {
        let RatFunc { mut num, mut den } = self;
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(q) = num.div_exact(&den) {
            return RatFunc::poly(q);
        }
        let g = den.monomial_content();
        let gn = num.monomial_content();
        let common: Monomial = trim(g.iter().zip(gn.iter().chain(core::iter::repeat(&0))).map(|(a, b)| *a.min(b)).collect());
        if !common.is_empty() {
            let mut t = Poly::zero();
            t.terms.insert(common, Q::one());
            num = num.div_exact(&t).expect("monomial content divides");
            den = den.div_exact(&t).expect("monomial content divides");
        }
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap_or_else(Q::one);
        if !lc.is_one() {
            let inv = Q::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc { num: self.num.add(&o.num), den: self.den.clone() }.reduced();
        }
        if let Some(k) = o.den.div_exact(&self.den) {
            return RatFunc { num: self.num.mul(&k).add(&o.num), den: o.den.clone() }.reduced();
        }
        if let Some(k) = self.den.div_exact(&o.den) {
            return RatFunc { num: o.num.mul(&k).add(&self.num), den: self.den.clone() }.reduced();
        }
        RatFunc { num: self.num.mul(&o.den).add(&o.num.mul(&self.den)), den: self.den.mul(&o.den) }.reduced()
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        // cancel cross factors first to keep sizes down
        let (mut n1, mut d2) = (self.num.clone(), o.den.clone());
        if let Some(k) = n1.div_exact(&d2) {
            n1 = k;
            d2 = Poly::one();
        }
        let (mut n2, mut d1) = (o.num.clone(), self.den.clone());
        if let Some(k) = n2.div_exact(&d1) {
            n2 = k;
            d1 = Poly::one();
        }
        RatFunc { num: n1.mul(&n2), den: d1.mul(&d2) }.reduced()
    }

    pub fn inv(&self) -> Option<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> Option<RatFunc> {
        Some(self.mul(&o.inv()?))
    }

    /// Exact equality by cross-multiplication.
    pub fn equals(&self, o: &RatFunc) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// `None` when the denominator vanishes at the point.
    pub fn eval(&self, point: &[Q]) -> Option<Q> {
        let d = self.den.eval(point);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(point) / d)
        }
    }

    pub fn substitute(&self, i: usize, by: &Poly) -> Option<RatFunc> {
        RatFunc::new(self.num.substitute(i, by), self.den.substitute(i, by))
    }

    pub fn num_vars(&self) -> usize {
        self.num.num_vars().max(self.den.num_vars())
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// A random rational point with `nvars` coordinates in `[-r, r]`.
pub fn random_point(nvars: usize, rng: &mut Rng, r: i64) -> Vec<Q> {
    (0..nvars).map(|_| rand_q(rng, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_and_cancel() {
        let x = Poly::var(U);
        let h = Poly::var(HBAR);
        let p = x.sub(&h).mul(&x.add(&h));
        assert_eq!(p.div_exact(&x.sub(&h)), Some(x.add(&h)));
        assert_eq!(p.div_exact(&x.mul(&h)), None);
        let r = RatFunc::new(p.clone(), x.sub(&h)).unwrap();
        assert_eq!(r.den(), &Poly::one());
        let s = RatFunc::new(Poly::one(), x.clone()).unwrap();
        let t = s.add(&s.neg());
        assert!(t.is_zero());
    }

    #[test]
    fn cross_multiplied_equality() {
        let x = Poly::var(U);
        let h = Poly::var(HBAR);
        let a = RatFunc::new(x.clone(), x.sub(&h)).unwrap();
        let b = RatFunc::new(x.scale(&Q::from_integer(2.into())), x.sub(&h).scale(&Q::from_integer(2.into()))).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::one());
    }
}
