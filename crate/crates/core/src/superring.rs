//! Graded super-polynomial rings on jet variables.
//!
//! A base variable `x` of doubled weight `w` gives jet variables
//! `x(-w/2 - i)` for `i >= 0`; all degrees are stored doubled so that
//! half-integer weights stay integral. Monomials are kept in a canonical
//! factor order and every product is renormalized with the Koszul sign
//! coming from the odd factors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableSpec {
    pub name: String,
    pub parity: Parity,
    /// Twice the conformal weight.
    pub weight2: u32,
}

impl VariableSpec {
    pub fn even(name: &str, weight2: u32) -> Self {
        VariableSpec { name: name.to_string(), parity: Parity::Even, weight2 }
    }

    pub fn odd(name: &str, weight2: u32) -> Self {
        VariableSpec { name: name.to_string(), parity: Parity::Odd, weight2 }
    }
}

/// The jet variable `x_base(-weight/2 - shift)`.
///
/// Field order gives the canonical factor order: ascending degree, then
/// base index, then shift. `odd` is determined by `base` and only cached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JetVariable {
    pub degree2: u32,
    pub base: u32,
    pub shift: u32,
    pub odd: bool,
}

impl JetVariable {
    pub fn new(vars: &[VariableSpec], base: usize, shift: u32) -> Self {
        let v = &vars[base];
        JetVariable {
            degree2: v.weight2 + 2 * shift,
            base: base as u32,
            shift,
            odd: v.parity.is_odd(),
        }
    }

    pub fn weight2(&self) -> u32 {
        self.degree2 - 2 * self.shift
    }

    /// The next jet variable, `x(-w/2 - shift - 1)`.
    pub fn next(&self) -> Self {
        JetVariable { degree2: self.degree2 + 2, shift: self.shift + 1, ..*self }
    }

    /// Mode label such as `-3/2` or `-2`.
    pub fn mode_label(&self) -> String {
        if self.degree2 % 2 == 0 {
            format!("-{}", self.degree2 / 2)
        } else {
            format!("-{}/2", self.degree2)
        }
    }
}

/// A canonical monomial: factors ascending, exponents positive, odd
/// factors with exponent one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    factors: Vec<(JetVariable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: JetVariable) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    /// Builds a monomial from factors already in canonical form.
    ///
    /// Panics if the input is not canonical.
    pub fn from_canonical(factors: Vec<(JetVariable, u32)>) -> Self {
        for w in factors.windows(2) {
            assert!(w[0].0 < w[1].0, "factors not strictly ascending");
        }
        for (v, e) in &factors {
            assert!(*e > 0, "zero exponent");
            assert!(!v.odd || *e == 1, "odd factor with exponent > 1");
        }
        Monomial { factors }
    }

    pub fn factors(&self) -> &[(JetVariable, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree2(&self) -> u32 {
        self.factors.iter().map(|(v, e)| v.degree2 * e).sum()
    }

    /// Total number of factors counted with multiplicity.
    pub fn multiplicity(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn parity(&self) -> Parity {
        let odd = self.factors.iter().filter(|(v, _)| v.odd).count();
        if odd % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Exponent of `v`, zero if absent.
    pub fn exponent(&self, v: &JetVariable) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Per-base exponent totals, indexed by base variable.
    pub fn content(&self, nvars: usize) -> Vec<i64> {
        let mut c = vec![0i64; nvars];
        for (v, e) in &self.factors {
            c[v.base as usize] += *e as i64;
        }
        c
    }

    /// Factors expanded with multiplicity, in canonical order.
    pub fn expanded(&self) -> Vec<JetVariable> {
        let mut out = Vec::with_capacity(self.multiplicity() as usize);
        for (v, e) in &self.factors {
            for _ in 0..*e {
                out.push(*v);
            }
        }
        out
    }

    /// Product `self * other` with its sign, or `None` if it vanishes.
    pub fn mul(&self, other: &Monomial) -> Option<(i8, Monomial)> {
        let a = &self.factors;
        let b = &other.factors;
        // odd factors of `a` at or after each position
        let mut odd_suffix = vec![0u32; a.len() + 1];
        for i in (0..a.len()).rev() {
            odd_suffix[i] = odd_suffix[i + 1] + a[i].0.odd as u32;
        }
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut swaps = 0u32;
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.push(a[i]);
                i += 1;
                continue;
            }
            if i == a.len() {
                out.push(b[j]);
                j += 1;
                continue;
            }
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    if b[j].0.odd {
                        swaps += odd_suffix[i];
                    }
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    if a[i].0.odd {
                        return None;
                    }
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((sign, Monomial { factors: out }))
    }
}

/// Sorts a product of jet variables into canonical form.
///
/// Returns the Koszul sign of the sorting permutation, or `None` when an
/// odd variable occurs twice.
pub fn normalize(factors: &[JetVariable]) -> Option<(i8, Monomial)> {
    let mut inversions = 0usize;
    for i in 0..factors.len() {
        if !factors[i].odd {
            continue;
        }
        for j in (i + 1)..factors.len() {
            if !factors[j].odd {
                continue;
            }
            match factors[i].cmp(&factors[j]) {
                Ordering::Greater => inversions += 1,
                Ordering::Equal => return None,
                Ordering::Less => {}
            }
        }
    }
    let mut sorted = factors.to_vec();
    sorted.sort();
    let mut out: Vec<(JetVariable, u32)> = Vec::new();
    for v in sorted {
        match out.last_mut() {
            Some((w, e)) if *w == v => *e += 1,
            _ => out.push((v, 1)),
        }
    }
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Some((sign, Monomial { factors: out }))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("polynomial is not homogeneous in degree")]
    Inhomogeneous,
    #[error("polynomial is not homogeneous in parity")]
    MixedParity,
    #[error("relation {0} uses a jet variable with nonzero shift")]
    ShiftedRelation(usize),
    #[error("variable {0} has weight2 0")]
    ZeroWeight(String),
    #[error("duplicate variable name {0}")]
    DuplicateName(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A finite linear combination of canonical monomials.
#[derive(Clone, PartialEq, Default)]
pub struct Polynomial<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: F, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: JetVariable) -> Self {
        Self::term(F::one(), Monomial::var(v))
    }

    /// The product of the given factors, in the order given.
    pub fn product_of(factors: &[JetVariable]) -> Self {
        match normalize(factors) {
            None => Self::zero(),
            Some((s, m)) => Self::term(sign_of::<F>(s), m),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((s, m)) = m1.mul(m2) {
                    let c = c1.clone() * c2.clone();
                    out.add_term(m, if s < 0 { -c } else { c });
                }
            }
        }
        out
    }

    /// Multiplies by a single monomial on the left.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let mut out = Self::zero();
        for (m2, c) in &self.terms {
            if let Some((s, prod)) = m.mul(m2) {
                out.add_term(prod, if s < 0 { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The common degree of all terms; `None` for the zero polynomial.
    pub fn degree2(&self) -> Result<Option<u32>, RingError> {
        let mut degs = self.terms.keys().map(Monomial::degree2);
        let Some(d) = degs.next() else { return Ok(None) };
        if degs.all(|e| e == d) {
            Ok(Some(d))
        } else {
            Err(RingError::Inhomogeneous)
        }
    }

    pub fn parity(&self) -> Result<Parity, RingError> {
        let mut ps = self.terms.keys().map(Monomial::parity);
        let Some(p) = ps.next() else { return Ok(Parity::Even) };
        if ps.all(|q| q == p) {
            Ok(p)
        } else {
            Err(RingError::MixedParity)
        }
    }

    /// Applies the even derivation determined by its values on jet variables.
    pub fn apply_derivation<D>(&self, image: D) -> Self
    where
        D: Fn(&JetVariable) -> Polynomial<F>,
    {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let seq = m.expanded();
            let mut pos = 0;
            for (v, e) in m.factors() {
                let img = image(v);
                let mult = c.clone() * F::from_ratio(*e as i64, 1);
                for (im, ic) in img.terms() {
                    let mut factors = Vec::with_capacity(seq.len() + im.multiplicity() as usize);
                    factors.extend_from_slice(&seq[..pos]);
                    factors.extend(im.expanded());
                    factors.extend_from_slice(&seq[pos + 1..]);
                    if let Some((s, nm)) = normalize(&factors) {
                        let coeff = mult.clone() * ic.clone();
                        out.add_term(nm, if s < 0 { -coeff } else { coeff });
                    }
                }
                pos += *e as usize;
            }
        }
        out
    }

    /// The derivation `T(x(-Δ-i)) = (-Δ-i) x(-Δ-i-1)`, extended by Leibniz.
    ///
    /// Rescaling each jet variable by a nonzero constant turns this into
    /// the plain shift, so graded dimensions never depend on the sign.
    pub fn derive(&self) -> Self {
        self.apply_derivation(|v| {
            Polynomial::term(F::from_ratio(-(v.degree2 as i64), 2), Monomial::var(v.next()))
        })
    }

    /// `T` applied `j` times.
    pub fn derive_n(&self, j: u32) -> Self {
        let mut p = self.clone();
        for _ in 0..j {
            p = p.derive();
        }
        p
    }

    pub fn map_coefficients<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Largest shift of any jet variable in the polynomial.
    pub fn max_shift(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| v.shift))
            .max()
            .unwrap_or(0)
    }
}

impl Polynomial<BigRational> {
    /// Image in another field.
    pub fn to_field<G: Field>(&self) -> Polynomial<G> {
        self.map_coefficients(G::from_rational)
    }
}

fn sign_of<F: Field>(s: i8) -> F {
    if s < 0 {
        -F::one()
    } else {
        F::one()
    }
}

impl<F: fmt::Debug> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// A graded super-polynomial ring with relations and extra generators.
#[derive(Clone, Debug)]
pub struct RingSpec<F> {
    pub variables: Vec<VariableSpec>,
    /// Relations in shift-zero variables.
    pub relations: Vec<Polynomial<F>>,
    /// Further generators of the differential ideal, in any jet variables.
    pub extra_generators: Vec<Polynomial<F>>,
}

impl<F: Field> RingSpec<F> {
    pub fn new(variables: Vec<VariableSpec>, relations: Vec<Polynomial<F>>) -> Self {
        RingSpec { variables, relations, extra_generators: Vec::new() }
    }

    pub fn with_extras(mut self, extras: Vec<Polynomial<F>>) -> Self {
        self.extra_generators.extend(extras);
        self
    }

    pub fn jet(&self, base: usize, shift: u32) -> JetVariable {
        JetVariable::new(&self.variables, base, shift)
    }

    /// The shift-zero jet variable of the named base variable.
    pub fn named(&self, name: &str) -> Option<JetVariable> {
        self.index_of(name).map(|i| self.jet(i, 0))
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    /// All relations followed by all extra generators.
    pub fn generators(&self) -> impl Iterator<Item = &Polynomial<F>> {
        self.relations.iter().chain(self.extra_generators.iter())
    }

    pub fn validate(&self) -> Result<(), RingError> {
        for (i, v) in self.variables.iter().enumerate() {
            if v.weight2 == 0 {
                return Err(RingError::ZeroWeight(v.name.clone()));
            }
            if self.variables[..i].iter().any(|w| w.name == v.name) {
                return Err(RingError::DuplicateName(v.name.clone()));
            }
        }
        for (i, r) in self.relations.iter().enumerate() {
            r.degree2()?;
            r.parity()?;
            if r.max_shift() > 0 {
                return Err(RingError::ShiftedRelation(i));
            }
        }
        for g in &self.extra_generators {
            g.degree2()?;
        }
        Ok(())
    }

    /// Renders a polynomial in mode notation, e.g. `-1/3 * h(-3) * Gm(-3/2)`.
    pub fn display(&self, p: &Polynomial<F>) -> String
    where
        F: fmt::Display,
    {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().enumerate() {
            let mut c_str = c.to_string();
            if k > 0 {
                if let Some(rest) = c_str.strip_prefix('-') {
                    out.push_str(" - ");
                    c_str = rest.to_string();
                } else {
                    out.push_str(" + ");
                }
            }
            let mut parts = Vec::new();
            if c_str != "1" || m.is_one() {
                parts.push(c_str);
            }
            for (v, e) in m.factors() {
                let name = &self.variables[v.base as usize].name;
                if *e == 1 {
                    parts.push(format!("{}({})", name, v.mode_label()));
                } else {
                    parts.push(format!("{}({})^{}", name, v.mode_label(), e));
                }
            }
            out.push_str(&parts.join(" * "));
        }
        out
    }
}

/// Parses a polynomial written in mode notation.
///
/// Terms are separated by `+` or `-`; factors inside a term by `*`. A
/// factor is a rational constant, a mode `name(-a/b)` with optional
/// `^e`, or a bare `name` (shift zero) with optional `^e`. Factors are
/// multiplied in the order written, so odd factors pick up Koszul signs.
pub fn parse_polynomial(vars: &[VariableSpec], src: &str) -> Result<Polynomial<BigRational>, RingError> {
    let mut p = Parser { s: src.as_bytes(), i: 0, vars };
    let poly = p.polynomial()?;
    p.skip_ws();
    if p.i != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    vars: &'a [VariableSpec],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> RingError {
        RingError::Parse(format!("{} at byte {}", msg, self.i))
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn polynomial(&mut self) -> Result<Polynomial<BigRational>, RingError> {
        let mut acc = Polynomial::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    false
                }
                Some(b'-') => {
                    self.i += 1;
                    true
                }
                Some(_) if first => false,
                _ => break,
            };
            let t = self.term()?;
            acc = if negative { acc.sub(&t) } else { acc.add(&t) };
            first = false;
        }
        if first {
            return Err(self.err("empty polynomial"));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<BigRational>, RingError> {
        let mut coeff = BigRational::one();
        let mut seq: Vec<JetVariable> = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.rational()?,
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let (v, e) = self.factor()?;
                    for _ in 0..e {
                        seq.push(v);
                    }
                }
                _ => return Err(self.err("expected factor")),
            }
            if self.peek() == Some(b'*') {
                self.i += 1;
            } else {
                break;
            }
        }
        Ok(Polynomial::product_of(&seq).scale(&coeff))
    }

    fn number(&mut self) -> Result<BigInt, RingError> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.i]).expect("ascii digits");
        Ok(txt.parse().expect("digits parse"))
    }

    fn rational(&mut self) -> Result<BigRational, RingError> {
        let n = self.number()?;
        if self.peek() == Some(b'/') {
            self.i += 1;
            let d = self.number()?;
            if d.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }

    fn factor(&mut self) -> Result<(JetVariable, u32), RingError> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
            self.i += 1;
        }
        let name = std::str::from_utf8(&self.s[start..self.i]).expect("ascii name");
        let base = self
            .vars
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| RingError::Parse(format!("unknown variable {name}")))?;
        let w = self.vars[base].weight2;
        let mut shift = 0;
        if self.s.get(self.i) == Some(&b'(') {
            self.i += 1;
            if self.peek() != Some(b'-') {
                return Err(self.err("expected negative mode"));
            }
            self.i += 1;
            let mode = self.rational()?;
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.i += 1;
            let twice = mode * BigRational::from_integer(BigInt::from(2));
            if !twice.is_integer() || twice.is_negative() {
                return Err(RingError::Parse(format!("mode of {name} is not a half-integer")));
            }
            let d: i64 = twice.to_integer().try_into().map_err(|_| self.err("mode too large"))?;
            if d < w as i64 || (d - w as i64) % 2 != 0 {
                return Err(RingError::Parse(format!("mode -{d}/2 is not a jet mode of {name}")));
            }
            shift = ((d - w as i64) / 2) as u32;
        }
        let mut e = 1;
        if self.peek() == Some(b'^') {
            self.i += 1;
            e = self.number()?.try_into().map_err(|_| self.err("exponent too large"))?;
        }
        Ok((JetVariable::new(self.vars, base, shift), e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn thetas() -> Vec<VariableSpec> {
        vec![VariableSpec::odd("t", 1), VariableSpec::even("x", 2)]
    }

    #[test]
    fn odd_square_vanishes() {
        let v = thetas();
        let t = JetVariable::new(&v, 0, 0);
        assert!(normalize(&[t, t]).is_none());
    }

    #[test]
    fn odd_swap_gives_sign() {
        let v = thetas();
        let t1 = JetVariable::new(&v, 0, 0);
        let t2 = JetVariable::new(&v, 0, 1);
        let (s, m) = normalize(&[t2, t1]).unwrap();
        assert_eq!(s, -1);
        assert_eq!(m, Monomial::from_canonical(vec![(t1, 1), (t2, 1)]));
    }

    #[test]
    fn even_square_collects() {
        let v = thetas();
        let x = JetVariable::new(&v, 1, 0);
        let (s, m) = normalize(&[x, x]).unwrap();
        assert_eq!(s, 1);
        assert_eq!(m.factors(), &[(x, 2)]);
        let (s2, m2) = normalize(&m.expanded()).unwrap();
        assert_eq!((s2, m2), (1, m));
    }

    #[test]
    fn binomial_square() {
        let v = thetas();
        let x1 = JetVariable::new(&v, 1, 0);
        let x2 = JetVariable::new(&v, 1, 1);
        let p = Polynomial::<Rational>::var(x1).add(&Polynomial::var(x2));
        let sq = p.mul(&p);
        assert_eq!(sq.coefficient(&Monomial::from_canonical(vec![(x1, 2)])), q(1, 1));
        assert_eq!(sq.coefficient(&Monomial::from_canonical(vec![(x1, 1), (x2, 1)])), q(2, 1));
        assert_eq!(sq.coefficient(&Monomial::from_canonical(vec![(x2, 2)])), q(1, 1));
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn derivation_examples() {
        let v = vec![VariableSpec::even("x", 2)];
        let x1 = JetVariable::new(&v, 0, 0);
        let x2 = x1.next();
        let t = Polynomial::<Rational>::var(x1).derive();
        assert_eq!(t, Polynomial::term(q(-1, 1), Monomial::var(x2)));
        assert!(Polynomial::<Rational>::one().derive().is_zero());
        let t2 = Polynomial::<Rational>::var(x1).pow(2).derive();
        let want = Polynomial::term(q(-2, 1), Monomial::from_canonical(vec![(x1, 1), (x2, 1)]));
        assert_eq!(t2, want);
    }

    #[test]
    fn degrees() {
        let v = vec![VariableSpec::odd("Gp", 3), VariableSpec::even("l", 2)];
        assert_eq!(JetVariable::new(&v, 0, 0).degree2, 3);
        assert_eq!(JetVariable::new(&v, 1, 1).degree2, 4);
        assert_eq!(Monomial::one().degree2(), 0);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let v = vec![VariableSpec::odd("Gm", 3), VariableSpec::even("h", 2)];
        let spec = RingSpec::<Rational>::new(v.clone(), vec![]);
        let p = parse_polynomial(&v, "Gm(-9/2) - 1/3 * h(-3) * Gm(-3/2) - Gm(-7/2)*h(-1) + 1/3*Gm(-5/2)*h(-1)^2").unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.degree2().unwrap(), Some(9));
        let shown = spec.display(&p);
        assert_eq!(parse_polynomial(&v, &shown).unwrap(), p);
    }

    #[test]
    fn parse_respects_koszul_order() {
        let v = vec![VariableSpec::odd("a", 1)];
        let p = parse_polynomial(&v, "a(-3/2) * a(-1/2)").unwrap();
        let r = parse_polynomial(&v, "a(-1/2) * a(-3/2)").unwrap();
        assert_eq!(p, r.neg());
        assert!(parse_polynomial(&v, "a(-1) ").is_err());
        assert!(parse_polynomial(&v, "b").is_err());
    }

    #[test]
    fn validate_rejects_shifted_relations() {
        let v = vec![VariableSpec::even("x", 2)];
        let r = parse_polynomial(&v, "x(-2)^2").unwrap();
        assert_eq!(RingSpec::new(v, vec![r]).validate(), Err(RingError::ShiftedRelation(0)));
    }
}
