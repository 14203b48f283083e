//! Truncated power series in `q^{1/2}` with exact integer coefficients.
//!
//! Index `k` of a series holds the coefficient of `q^{k/2}`, and a series
//! truncated at `maxdeg2` knows exactly the indices `0..=maxdeg2`. Binary
//! operations truncate to the shorter operand.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

/// Integer-like coefficient ring of a series.
pub trait Coefficient:
    Clone + fmt::Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync
{
}

impl<T> Coefficient for T where
    T: Clone + fmt::Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync
{
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("constant term is not a unit")]
    NotAUnit,
    #[error("cannot divide by q^{0}/2: low coefficients are nonzero")]
    NotDivisible(u32),
    #[error("fermionic sum does not terminate: {0}")]
    NonTerminating(String),
    #[error("malformed fermionic form: {0}")]
    Malformed(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series<C = BigInt> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Series<C> {
    pub fn zero(maxdeg2: u32) -> Self {
        Series { coeffs: vec![C::zero(); maxdeg2 as usize + 1] }
    }

    pub fn one(maxdeg2: u32) -> Self {
        Self::monomial(C::one(), 0, maxdeg2)
    }

    /// `c q^{e2/2}` truncated at `maxdeg2`.
    pub fn monomial(c: C, e2: u32, maxdeg2: u32) -> Self {
        let mut s = Self::zero(maxdeg2);
        if e2 <= maxdeg2 {
            s.coeffs[e2 as usize] = c;
        }
        s
    }

    /// Panics on an empty vector: a series always knows its constant term.
    pub fn from_coefficients(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        Series { coeffs }
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        Self::from_coefficients(v.iter().map(|&x| C::from_i64(x).expect("representable")).collect())
    }

    pub fn maxdeg2(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coefficients(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `q^{k/2}`. Panics beyond the truncation.
    pub fn coeff(&self, k: u32) -> C {
        assert!(k <= self.maxdeg2(), "index {k} beyond truncation {}", self.maxdeg2());
        self.coeffs[k as usize].clone()
    }

    /// Coefficient of the integer power `q^n`.
    pub fn coeff_q(&self, n: u32) -> C {
        self.coeff(2 * n)
    }

    pub fn truncate(&self, maxdeg2: u32) -> Self {
        let n = (maxdeg2 as usize + 1).min(self.coeffs.len());
        Series { coeffs: self.coeffs[..n].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        Series { coeffs: (0..n).map(|i| self.coeffs[i].clone() + other.coeffs[i].clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        Series { coeffs: (0..n).map(|i| self.coeffs[i].clone() - other.coeffs[i].clone()).collect() }
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn scale(&self, k: &C) -> Self {
        Series { coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        self.mul_to(other, (n - 1) as u32)
    }

    /// Product truncated at `maxdeg2`, which must not exceed either operand.
    pub fn mul_to(&self, other: &Self, maxdeg2: u32) -> Self {
        let n = maxdeg2 as usize + 1;
        assert!(n <= self.coeffs.len() && n <= other.coeffs.len());
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.maxdeg2());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a series whose constant term is `1` or `-1`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0].clone();
        if !(c0.is_one() || (-c0.clone()).is_one()) {
            return Err(SeriesError::NotAUnit);
        }
        let n = self.coeffs.len();
        let mut out = vec![C::zero(); n];
        out[0] = c0.clone();
        for k in 1..n {
            let mut s = C::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    s = s + self.coeffs[i].clone() * out[k - i].clone();
                }
            }
            // c0 is its own inverse
            out[k] = -(s * c0.clone());
        }
        Ok(Series { coeffs: out })
    }

    /// Multiplication by `q^{k/2}`, keeping the same truncation.
    pub fn shift_up(&self, k: u32) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![C::zero(); n];
        for i in (k as usize)..n {
            out[i] = self.coeffs[i - k as usize].clone();
        }
        Series { coeffs: out }
    }

    /// Division by `q^{k/2}`; the truncation drops by `k`.
    pub fn shift_down(&self, k: u32) -> Result<Self, SeriesError> {
        let k = k as usize;
        if k >= self.coeffs.len() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible(k as u32));
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiplies in place by `1/(1 - q^{e2/2})`.
    fn mul_geometric(&mut self, e2: usize) {
        for k in e2..self.coeffs.len() {
            let v = self.coeffs[k - e2].clone();
            self.coeffs[k] = self.coeffs[k].clone() + v;
        }
    }

    /// Multiplies in place by `1 + s q^{e2/2}` with `s = ±1`.
    fn mul_binomial(&mut self, e2: usize, negative: bool) {
        for k in (e2..self.coeffs.len()).rev() {
            let v = self.coeffs[k - e2].clone();
            self.coeffs[k] = if negative { self.coeffs[k].clone() - v } else { self.coeffs[k].clone() + v };
        }
    }

    /// `Π 1/(1 - q^{e/2})` over the given doubled exponents.
    pub fn inverse_product(exponents: impl IntoIterator<Item = u32>, maxdeg2: u32) -> Self {
        let mut s = Self::one(maxdeg2);
        for e in exponents {
            assert!(e > 0, "zero exponent in product");
            if e <= maxdeg2 {
                s.mul_geometric(e as usize);
            }
        }
        s
    }

    /// `1/(1 - q^{e2/2})`.
    pub fn geometric(e2: u32, maxdeg2: u32) -> Self {
        Self::inverse_product([e2], maxdeg2)
    }

    /// `(q^a; q)_n = Π_{i<n} (1 - q^{a+i})`, with `n = None` for infinity.
    pub fn shifted_pochhammer(a: u32, n: Option<u32>, maxdeg2: u32) -> Self {
        let mut s = Self::one(maxdeg2);
        let mut i = 0;
        while n.map_or(true, |n| i < n) {
            let e = 2 * (a + i);
            if e == 0 {
                return Self::zero(maxdeg2);
            }
            if e > maxdeg2 {
                break;
            }
            s.mul_binomial(e as usize, true);
            i += 1;
        }
        s
    }

    /// `(q; q)_n`, with `n = None` for `(q; q)_∞`.
    pub fn pochhammer(n: Option<u32>, maxdeg2: u32) -> Self {
        Self::shifted_pochhammer(1, n, maxdeg2)
    }

    /// `(-q^{1/2}; q)_n = Π_{i<n} (1 + q^{i + 1/2})`.
    pub fn neg_half_pochhammer(n: u32, maxdeg2: u32) -> Self {
        let mut s = Self::one(maxdeg2);
        for i in 0..n as usize {
            let e = 2 * i + 1;
            if e > maxdeg2 as usize {
                break;
            }
            s.mul_binomial(e, false);
        }
        s
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ if k % 2 == 0 => write!(f, "{c}q^{}", k / 2)?,
                _ => write!(f, "{c}q^{{{k}/2}}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{{{}/2}})", self.coeffs.len())
    }
}

impl<C: fmt::Debug> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// A fermionic sum
/// `Σ_n q^{E2(n)/2} Π_i [(-q^{1/2};q)_{n_i}] / (q;q)_{n_i}`
/// with doubled exponent `E2(n) = n^T Q n + L . n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermionicForm {
    /// Symmetric matrix `Q`.
    pub quad2: Vec<Vec<i64>>,
    /// Linear part `L`.
    pub linear2: Vec<i64>,
    /// Whether variable `i` carries a `(-q^{1/2};q)_{n_i}` numerator.
    pub numerators: Vec<bool>,
}

impl FermionicForm {
    pub fn new(quad2: Vec<Vec<i64>>, linear2: Vec<i64>) -> Self {
        let k = linear2.len();
        FermionicForm { quad2, linear2, numerators: vec![false; k] }
    }

    pub fn rank(&self) -> usize {
        self.linear2.len()
    }

    pub fn exponent2(&self, n: &[i64]) -> i64 {
        let k = self.rank();
        let mut e = 0;
        for i in 0..k {
            e += self.linear2[i] * n[i];
            for j in 0..k {
                e += self.quad2[i][j] * n[i] * n[j];
            }
        }
        e
    }

    fn check(&self) -> Result<(), SeriesError> {
        let k = self.rank();
        if self.quad2.len() != k || self.quad2.iter().any(|r| r.len() != k) || self.numerators.len() != k {
            return Err(SeriesError::Malformed("dimension mismatch".into()));
        }
        for i in 0..k {
            for j in 0..k {
                if self.quad2[i][j] != self.quad2[j][i] {
                    return Err(SeriesError::Malformed("quadratic part not symmetric".into()));
                }
            }
        }
        Ok(())
    }

    fn monotone(&self) -> bool {
        self.quad2.iter().flatten().all(|&x| x >= 0)
            && self.linear2.iter().all(|&x| x >= 0)
            && (0..self.rank()).all(|i| self.quad2[i][i] > 0 || self.linear2[i] > 0)
    }

    /// Exact positive-definiteness test by leading principal minors.
    fn positive_definite(&self) -> bool {
        let k = self.rank();
        let mut m: Vec<Vec<BigRational>> = self
            .quad2
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        for c in 0..k {
            if !m[c][c].is_positive() {
                return false;
            }
            for i in (c + 1)..k {
                let f = m[i][c].clone() / m[c][c].clone();
                for j in c..k {
                    let v = f.clone() * m[c][j].clone();
                    m[i][j] = m[i][j].clone() - v;
                }
            }
        }
        true
    }

    /// Box bound `n_i <= sqrt(maxdeg2 (Q^{-1})_{ii})` for definite `Q`.
    fn box_bounds(&self, maxdeg2: u32) -> Vec<i64> {
        let k = self.rank();
        // Gauss-Jordan inverse over Q
        let mut a: Vec<Vec<BigRational>> = (0..k)
            .map(|i| {
                let mut row: Vec<BigRational> =
                    self.quad2[i].iter().map(|&x| BigRational::from_integer(x.into())).collect();
                row.extend((0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                row
            })
            .collect();
        for c in 0..k {
            let p = (c..k).find(|&i| !a[i][c].is_zero()).expect("definite matrix is invertible");
            a.swap(c, p);
            let inv = BigRational::one() / a[c][c].clone();
            for x in a[c].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for i in 0..k {
                if i != c && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..2 * k {
                        let v = f.clone() * a[c][j].clone();
                        a[i][j] = a[i][j].clone() - v;
                    }
                }
            }
        }
        (0..k)
            .map(|i| {
                let bound = a[i][k + i].clone() * BigRational::from_integer(maxdeg2.into());
                let f = bound.to_f64().unwrap_or(0.0).max(0.0);
                // integer square root with a safety margin, then trimmed exactly
                let mut n = f.sqrt().floor() as i64 + 1;
                while n > 0 && BigRational::from_integer((n * n).into()) > bound {
                    n -= 1;
                }
                n
            })
            .collect()
    }
}

/// Expands a fermionic sum through `maxdeg2`.
///
/// Terminates in two situations: every coefficient is nonnegative and each
/// variable has a positive diagonal or linear entry (the exponent is then
/// monotone in every variable), or `Q` is positive definite with `L >= 0`
/// (the lattice points of bounded exponent lie in a computable box).
pub fn fermionic_sum(form: &FermionicForm, maxdeg2: u32) -> Result<Series, SeriesError> {
    form.check()?;
    let k = form.rank();
    let mut points: Vec<(Vec<i64>, i64)> = Vec::new();
    if form.monotone() {
        let mut n = vec![0i64; k];
        monotone_points(form, 0, &mut n, maxdeg2 as i64, &mut points);
    } else if form.linear2.iter().all(|&x| x >= 0) && form.positive_definite() {
        let bounds = form.box_bounds(maxdeg2);
        let mut n = vec![0i64; k];
        box_points(form, &bounds, 0, &mut n, maxdeg2 as i64, &mut points);
    } else {
        return Err(SeriesError::NonTerminating(
            "exponent is neither monotone nor bounded below by a definite form".into(),
        ));
    }
    let max_n = points.iter().flat_map(|(n, _)| n.iter().copied()).max().unwrap_or(0) as u32;
    let inv_poch: Vec<Series> = (0..=max_n)
        .map(|n| Series::pochhammer(Some(n), maxdeg2).invert().expect("unit"))
        .collect();
    let numer: Vec<Series> = if form.numerators.iter().any(|&b| b) {
        (0..=max_n).map(|n| Series::neg_half_pochhammer(n, maxdeg2)).collect()
    } else {
        Vec::new()
    };
    let term = |(n, e2): &(Vec<i64>, i64)| -> Series {
        let room = maxdeg2 - *e2 as u32;
        let mut t: Series = Series::one(room);
        for (i, &ni) in n.iter().enumerate() {
            if ni == 0 {
                continue;
            }
            t = t.mul_to(&inv_poch[ni as usize], room);
            if form.numerators[i] {
                t = t.mul_to(&numer[ni as usize], room);
            }
        }
        t
    };
    let parts: Vec<(u32, Series)> = points.par_iter().map(|p| (p.1 as u32, term(p))).collect();
    let mut acc = vec![BigInt::zero(); maxdeg2 as usize + 1];
    for (e2, t) in parts {
        for (i, c) in t.coefficients().iter().enumerate() {
            acc[e2 as usize + i] += c;
        }
    }
    Ok(Series::from_coefficients(acc))
}

fn monotone_points(form: &FermionicForm, i: usize, n: &mut Vec<i64>, max: i64, out: &mut Vec<(Vec<i64>, i64)>) {
    if i == form.rank() {
        out.push((n.clone(), form.exponent2(n)));
        return;
    }
    loop {
        if form.exponent2(n) > max {
            break;
        }
        monotone_points(form, i + 1, n, max, out);
        n[i] += 1;
    }
    n[i] = 0;
}

fn box_points(
    form: &FermionicForm,
    bounds: &[i64],
    i: usize,
    n: &mut Vec<i64>,
    max: i64,
    out: &mut Vec<(Vec<i64>, i64)>,
) {
    if i == form.rank() {
        let e = form.exponent2(n);
        if (0..=max).contains(&e) {
            out.push((n.clone(), e));
        }
        return;
    }
    for v in 0..=bounds[i] {
        n[i] = v;
        box_points(form, bounds, i + 1, n, max, out);
    }
    n[i] = 0;
}

/// `Σ_{n∈Z} q^{p n²/2} / (q)_∞`.
pub fn theta_over_eta(p: u32, maxdeg2: u32) -> Series {
    assert!(p >= 1, "lattice parameter must be positive");
    let mut theta = vec![BigInt::zero(); maxdeg2 as usize + 1];
    theta[0] = BigInt::one();
    let mut n: u64 = 1;
    while (p as u64) * n * n <= maxdeg2 as u64 {
        theta[(p as u64 * n * n) as usize] += 2;
        n += 1;
    }
    let eta_inv = Series::inverse_product((1..).map(|i| 2 * i).take_while(|&e| e <= maxdeg2), maxdeg2);
    Series::from_coefficients(theta).mul(&eta_inv)
}

/// `Π 1/(1 - q^{n/2})` over `n ≢ 2 (mod 4)` and `n ≢ 0, ±1 (mod 4k)`.
pub fn n1_product(k: u32, maxdeg2: u32) -> Series {
    assert!(k >= 1);
    let m = 4 * k;
    let admissible = (1..=maxdeg2.max(1)).filter(|&n| n % 4 != 2 && ![0, 1, m - 1].contains(&(n % m)));
    Series::inverse_product(admissible.filter(|&n| n <= maxdeg2), maxdeg2)
}

/// `Π 1/(1 - q^n)` over `n ≢ 0, ±i (mod modulus)`.
pub fn gordon_product(modulus: u32, i: u32, maxdeg2: u32) -> Series {
    let ok = |n: u32| {
        let r = n % modulus;
        r != 0 && r != i % modulus && r != (modulus - i % modulus) % modulus
    };
    Series::inverse_product((1..=maxdeg2 / 2).filter(|&n| ok(n)).map(|n| 2 * n), maxdeg2)
}

/// Statistics on ordinary partitions, computed by brute force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionStat {
    /// Number of partitions of `n`.
    P,
    /// `n p(n)`, the sum of all parts of all partitions of `n`.
    Np,
    /// Total number of parts over all partitions of `n`.
    TotalParts,
    /// Sum over partitions of `n` of the multiplicity of the largest part.
    LargestPartMultSum,
    /// Two-colored partitions of `n` using the first color at least once.
    TwoColored,
    /// Partitions of `2n` with every part even or equal to one.
    EvenOrOne,
    /// Partitions of `n` whose least part, doubled, exceeds the greatest.
    LeastVsGreatest,
}

impl PartitionStat {
    pub const ALL: [PartitionStat; 7] = [
        PartitionStat::P,
        PartitionStat::Np,
        PartitionStat::TotalParts,
        PartitionStat::LargestPartMultSum,
        PartitionStat::TwoColored,
        PartitionStat::EvenOrOne,
        PartitionStat::LeastVsGreatest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PartitionStat::P => "p",
            PartitionStat::Np => "np",
            PartitionStat::TotalParts => "total_parts",
            PartitionStat::LargestPartMultSum => "largest_part_mult_sum",
            PartitionStat::TwoColored => "two_colored",
            PartitionStat::EvenOrOne => "even_or_one",
            PartitionStat::LeastVsGreatest => "least_vs_greatest",
        }
    }
}

/// All partitions of `n` as weakly decreasing part lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rem)).rev() {
            cur.push(part);
            rec(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn partition_stats(kind: PartitionStat, n: u32) -> u64 {
    let parts = || partitions(n).into_iter();
    match kind {
        PartitionStat::P => parts().count() as u64,
        PartitionStat::Np => parts().map(|p| p.iter().map(|&x| x as u64).sum::<u64>()).sum(),
        PartitionStat::TotalParts => parts().map(|p| p.len() as u64).sum(),
        PartitionStat::LargestPartMultSum => {
            parts().map(|p| p.iter().filter(|&&x| Some(&x) == p.first()).count() as u64).sum()
        }
        PartitionStat::TwoColored => {
            // split n between the first colour (nonempty) and the second
            (1..=n)
                .map(|a| partition_stats(PartitionStat::P, a) * partition_stats(PartitionStat::P, n - a))
                .sum()
        }
        PartitionStat::EvenOrOne => partitions(2 * n)
            .into_iter()
            .filter(|p| p.iter().all(|&x| x == 1 || x % 2 == 0))
            .count() as u64,
        PartitionStat::LeastVsGreatest => parts()
            .filter(|p| match (p.first(), p.last()) {
                (Some(&g), Some(&l)) => 2 * l > g,
                _ => true,
            })
            .count() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> Series {
        Series::from_i64s(v)
    }

    #[test]
    fn geometric_inverts_one_minus_q() {
        let one_minus_q = s(&[1, 0, -1, 0, 0, 0, 0]);
        assert_eq!(one_minus_q.mul(&Series::geometric(2, 6)), Series::one(6));
        assert_eq!(one_minus_q.invert().unwrap(), s(&[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(Series::<BigInt>::one(4).invert().unwrap(), Series::one(4));
        assert!(s(&[2, 1]).invert().is_err());
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(Series::<BigInt>::pochhammer(Some(0), 6), Series::one(6));
        assert_eq!(Series::<BigInt>::pochhammer(Some(2), 6), s(&[1, 0, -1, 0, -1, 0, 1]));
        let inf = Series::<BigInt>::pochhammer(None, 14);
        let evens: Vec<BigInt> = (0..8).map(|n| inf.coeff_q(n)).collect();
        assert_eq!(evens, [1, -1, -1, 0, 0, 1, 0, 1].map(BigInt::from));
        let p1 = Series::<BigInt>::pochhammer(Some(1), 6);
        assert_eq!(p1.mul(&s(&[1, 0, 0, 0, -1, 0, 0])), Series::pochhammer(Some(2), 6));
    }

    #[test]
    fn partitions_from_eta() {
        let inv = Series::<BigInt>::pochhammer(None, 12).invert().unwrap();
        let evens: Vec<BigInt> = (0..7).map(|n| inv.coeff_q(n)).collect();
        assert_eq!(evens, [1, 1, 2, 3, 5, 7, 11].map(BigInt::from));
    }

    #[test]
    fn shifts() {
        let a = s(&[0, 0, 1, 2, 3]);
        assert_eq!(a.shift_down(2).unwrap(), s(&[1, 2, 3]));
        assert!(a.shift_down(3).is_err());
        assert_eq!(s(&[1, 2, 3]).shift_up(1), s(&[0, 1, 2]));
    }

    #[test]
    fn rogers_ramanujan_fermionic() {
        let f = FermionicForm::new(vec![vec![2]], vec![0]);
        let rr = fermionic_sum(&f, 12).unwrap();
        let evens: Vec<BigInt> = (0..7).map(|n| rr.coeff_q(n)).collect();
        assert_eq!(evens, [1, 1, 1, 1, 2, 2, 3].map(BigInt::from));
        assert_eq!(fermionic_sum(&FermionicForm::new(vec![], vec![]), 5).unwrap(), Series::one(5));
    }

    #[test]
    fn definite_forms_use_the_box() {
        // q^{k1^2 - k1 k2 + k2^2}: Cartan matrix of A2
        let f = FermionicForm::new(vec![vec![2, -1], vec![-1, 2]], vec![0, 0]);
        let s1 = fermionic_sum(&f, 16).unwrap();
        assert_eq!(s1.coeff(0), BigInt::one());
        let bad = FermionicForm::new(vec![vec![1, -2], vec![-2, 1]], vec![0, 0]);
        assert!(matches!(fermionic_sum(&bad, 8), Err(SeriesError::NonTerminating(_))));
    }

    #[test]
    fn theta_three() {
        let t = theta_over_eta(3, 10);
        assert_eq!(t, s(&[1, 0, 1, 2, 2, 2, 3, 4, 5, 6, 7]));
    }

    #[test]
    fn n1_product_trivial_level() {
        assert_eq!(n1_product(1, 20), Series::one(20));
        assert_eq!(n1_product(3, 10).coeff(0), BigInt::one());
    }

    #[test]
    fn partition_stat_values() {
        assert_eq!(partition_stats(PartitionStat::TotalParts, 4), 12);
        assert_eq!(partition_stats(PartitionStat::Np, 4), 20);
        assert_eq!(partition_stats(PartitionStat::P, 0), 1);
        assert_eq!(partition_stats(PartitionStat::LeastVsGreatest, 3), 2);
        assert_eq!(partition_stats(PartitionStat::LeastVsGreatest, 0), 1);
        assert_eq!(partition_stats(PartitionStat::TwoColored, 2), 3);
    }
}
