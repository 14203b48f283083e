//! Truncated differential ideals and Hilbert series of jet quotients.
//!
//! The degree-`d` piece of the differential ideal is spanned by the
//! products `m * T^j g` over generators `g`, derivative orders `j` and
//! multiplier monomials `m` of complementary degree. Its rank is found by
//! exact elimination.
//!
//! Every generator is homogeneous for a coarser grading than the full
//! per-variable content: the one given by any integer functional that is
//! constant on the content vectors of the generator's terms. Such
//! functionals are found once per ring as an integer kernel, and each degree
//! piece then splits into independent blocks that are eliminated
//! separately (and in parallel).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::echelon::{rank_of, Echelon, SparseRow};
use crate::qseries::Series;
use crate::scalar::Field;
use crate::superring::{JetVariable, Monomial, Polynomial, RingError, RingSpec};

/// Default bound on the number of monomials in a single degree.
pub const DEFAULT_MONOMIAL_CAP: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JetError {
    #[error("degree2 {degree2} has {count} monomials, above the cap of {cap}")]
    ResourceLimit { degree2: u32, count: u128, cap: usize },
    #[error("degree2 {degree2} exceeds the truncation {maxdeg2}")]
    OutOfRange { degree2: u32, maxdeg2: u32 },
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JetOptions {
    pub monomial_cap: usize,
    pub parallel: bool,
}

impl Default for JetOptions {
    fn default() -> Self {
        JetOptions { monomial_cap: DEFAULT_MONOMIAL_CAP, parallel: true }
    }
}

/// One graded piece of the jet quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeComponent {
    pub degree2: u32,
    pub monomials: Vec<Monomial>,
    pub ideal_rank: usize,
    pub quotient_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeriesResult {
    pub maxdeg2: u32,
    /// Quotient dimension at each doubled degree `0..=maxdeg2`.
    pub coefficients: Vec<u64>,
}

impl HilbertSeriesResult {
    pub fn to_series(&self) -> Series {
        Series::from_coefficients(self.coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }
}

/// All jet variables of degree at most `max_degree2`, in canonical order.
pub fn jet_variables<F: Field>(spec: &RingSpec<F>, max_degree2: u32) -> Vec<JetVariable> {
    let mut out = Vec::new();
    for (b, v) in spec.variables.iter().enumerate() {
        let mut s = 0;
        while v.weight2 + 2 * s <= max_degree2 {
            out.push(spec.jet(b, s));
            s += 1;
        }
    }
    out.sort();
    out
}

/// Number of monomials of each degree `0..=maxdeg2` (saturating).
pub fn monomial_counts<F: Field>(spec: &RingSpec<F>, maxdeg2: u32) -> Vec<u128> {
    let n = maxdeg2 as usize;
    let mut c = vec![0u128; n + 1];
    c[0] = 1;
    for v in jet_variables(spec, maxdeg2) {
        let d = v.degree2 as usize;
        if v.odd {
            for k in (d..=n).rev() {
                c[k] = c[k].saturating_add(c[k - d]);
            }
        } else {
            for k in d..=n {
                c[k] = c[k].saturating_add(c[k - d]);
            }
        }
    }
    c
}

/// All canonical monomials of exactly the given degree, sorted.
pub fn enumerate_monomials<F: Field>(spec: &RingSpec<F>, degree2: u32) -> Vec<Monomial> {
    let vars = jet_variables(spec, degree2);
    let mut out = Vec::new();
    let mut cur: Vec<(JetVariable, u32)> = Vec::new();
    enumerate_rec(&vars, 0, degree2, &mut cur, &mut out);
    out.sort();
    out
}

fn enumerate_rec(
    vars: &[JetVariable],
    k: usize,
    rem: u32,
    cur: &mut Vec<(JetVariable, u32)>,
    out: &mut Vec<Monomial>,
) {
    if rem == 0 {
        out.push(Monomial::from_canonical(cur.clone()));
        return;
    }
    if k == vars.len() {
        return;
    }
    let v = vars[k];
    if v.degree2 > rem {
        return;
    }
    let max_e = if v.odd { 1 } else { rem / v.degree2 };
    for e in (1..=max_e).rev() {
        cur.push((v, e));
        enumerate_rec(vars, k + 1, rem - e * v.degree2, cur, out);
        cur.pop();
    }
    enumerate_rec(vars, k + 1, rem, cur, out);
}

fn check_cap<F: Field>(spec: &RingSpec<F>, maxdeg2: u32, cap: usize) -> Result<(), JetError> {
    for (d, &count) in monomial_counts(spec, maxdeg2).iter().enumerate() {
        if count > cap as u128 {
            return Err(JetError::ResourceLimit { degree2: d as u32, count, cap });
        }
    }
    Ok(())
}

/// Integer basis of `{w : w . v = 0 for all rows v}`.
fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..n {
                    let v = m[r][k].clone() * f.clone();
                    m[i][k] = m[i][k].clone() - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut w = vec![BigRational::zero(); n];
        w[free] = BigRational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            w[pc] = -m[i][free].clone();
        }
        let lcm = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = w.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        basis.push(ints.iter().map(|x| (x / &g).to_i64().expect("small kernel entry")).collect());
    }
    basis
}

/// The grading used to split each degree piece into blocks.
#[derive(Debug, Clone)]
struct BlockGrading {
    nvars: usize,
    functionals: Vec<Vec<i64>>,
}

impl BlockGrading {
    fn for_spec<F: Field>(spec: &RingSpec<F>) -> Self {
        let nvars = spec.variables.len();
        let mut diffs = Vec::new();
        for g in spec.generators() {
            let contents: Vec<Vec<i64>> = g.terms().map(|(m, _)| m.content(nvars)).collect();
            for c in contents.iter().skip(1) {
                diffs.push(c.iter().zip(&contents[0]).map(|(a, b)| a - b).collect());
            }
        }
        BlockGrading { nvars, functionals: integer_kernel(&diffs, nvars) }
    }

    fn key(&self, m: &Monomial) -> Vec<i64> {
        let c = m.content(self.nvars);
        self.functionals.iter().map(|w| w.iter().zip(&c).map(|(a, b)| a * b).sum()).collect()
    }

    fn poly_key<F: Field>(&self, p: &Polynomial<F>) -> Option<Vec<i64>> {
        p.terms().next().map(|(m, _)| self.key(m))
    }
}

/// Everything needed to generate ideal rows up to a fixed truncation.
struct IdealContext<F> {
    grading: BlockGrading,
    /// `(degree, block key, T^j g)` for every generator and order `j`.
    derived: Vec<(u32, Vec<i64>, Polynomial<F>)>,
    /// Monomials of each degree with their block keys.
    monomials: Vec<Vec<(Monomial, Vec<i64>)>>,
}

impl<F: Field> IdealContext<F> {
    fn new(spec: &RingSpec<F>, maxdeg2: u32, opts: &JetOptions) -> Result<Self, JetError> {
        spec.validate()?;
        check_cap(spec, maxdeg2, opts.monomial_cap)?;
        let grading = BlockGrading::for_spec(spec);
        let mut derived = Vec::new();
        for g in spec.generators() {
            let Some(d0) = g.degree2()? else { continue };
            let mut p = g.clone();
            let mut d = d0;
            while d <= maxdeg2 && !p.is_zero() {
                let key = grading.poly_key(&p).expect("nonzero");
                let next = p.derive();
                derived.push((d, key, p));
                p = next;
                d += 2;
            }
        }
        let build = |d: u32| -> Vec<(Monomial, Vec<i64>)> {
            enumerate_monomials(spec, d).into_iter().map(|m| {
                let k = grading.key(&m);
                (m, k)
            }).collect()
        };
        let monomials = if opts.parallel {
            (0..=maxdeg2).into_par_iter().map(build).collect()
        } else {
            (0..=maxdeg2).map(build).collect()
        };
        Ok(IdealContext { grading, derived, monomials })
    }

    /// Columns of degree `d`, grouped by block.
    fn blocks(&self, d: u32) -> HashMap<Vec<i64>, Vec<&Monomial>> {
        let mut blocks: HashMap<Vec<i64>, Vec<&Monomial>> = HashMap::new();
        for (m, k) in &self.monomials[d as usize] {
            blocks.entry(k.clone()).or_default().push(m);
        }
        blocks
    }

    /// All rows `m * T^j g` of degree `d` in the given block.
    fn rows(&self, d: u32, key: &[i64], columns: &HashMap<&Monomial, u32>) -> Vec<SparseRow<F>> {
        let mut rows = Vec::new();
        for (dg, gkey, p) in &self.derived {
            if *dg > d {
                continue;
            }
            for (m, mkey) in &self.monomials[(d - dg) as usize] {
                if mkey.iter().zip(gkey).map(|(a, b)| a + b).ne(key.iter().copied()) {
                    continue;
                }
                let mut row: SparseRow<F> = Vec::with_capacity(p.len());
                for (t, c) in p.terms() {
                    if let Some((s, prod)) = m.mul(t) {
                        let col = columns[&prod];
                        row.push((col, if s < 0 { -c.clone() } else { c.clone() }));
                    }
                }
                if !row.is_empty() {
                    row.sort_by_key(|(c, _)| *c);
                    rows.push(row);
                }
            }
        }
        rows
    }

    fn block_echelon(&self, d: u32, key: &[i64], cols: &[&Monomial]) -> Echelon<F> {
        let columns: HashMap<&Monomial, u32> = cols.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
        let mut rows = self.rows(d, key, &columns);
        rows.sort_by_key(|r| (r.len(), r[0].0));
        let mut e = Echelon::new(cols.len());
        for r in rows {
            e.insert(r);
            if e.is_full() {
                break;
            }
        }
        e
    }

    fn rank(&self, d: u32, parallel: bool) -> (usize, usize) {
        let blocks: Vec<(Vec<i64>, Vec<&Monomial>)> = self.blocks(d).into_iter().collect();
        let total = self.monomials[d as usize].len();
        let rank_block = |(key, cols): &(Vec<i64>, Vec<&Monomial>)| -> usize {
            let columns: HashMap<&Monomial, u32> =
                cols.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
            rank_of(cols.len(), self.rows(d, key, &columns))
        };
        let rank = if parallel {
            blocks.par_iter().map(rank_block).sum()
        } else {
            blocks.iter().map(rank_block).sum()
        };
        (total, rank)
    }
}

/// The echelonized degree piece of the differential ideal.
pub fn ideal_basis<F: Field>(spec: &RingSpec<F>, degree2: u32, maxdeg2: u32) -> Result<Vec<Polynomial<F>>, JetError> {
    if degree2 > maxdeg2 {
        return Err(JetError::OutOfRange { degree2, maxdeg2 });
    }
    let opts = JetOptions { parallel: false, ..JetOptions::default() };
    let ctx = IdealContext::new(spec, degree2, &opts)?;
    let mut blocks: Vec<(Vec<i64>, Vec<&Monomial>)> = ctx.blocks(degree2).into_iter().collect();
    blocks.sort();
    let mut out = Vec::new();
    for (key, cols) in &blocks {
        let e = ctx.block_echelon(degree2, key, cols);
        for row in e.rows() {
            let mut p = Polynomial::zero();
            for (c, a) in row {
                p.add_term(cols[*c as usize].clone(), a.clone());
            }
            out.push(p);
        }
    }
    Ok(out)
}

/// Monomials, ideal rank and quotient dimension in one degree.
pub fn degree_component<F: Field>(spec: &RingSpec<F>, degree2: u32, opts: &JetOptions) -> Result<DegreeComponent, JetError> {
    let ctx = IdealContext::new(spec, degree2, opts)?;
    let (total, rank) = ctx.rank(degree2, opts.parallel);
    Ok(DegreeComponent {
        degree2,
        monomials: ctx.monomials[degree2 as usize].iter().map(|(m, _)| m.clone()).collect(),
        ideal_rank: rank,
        quotient_dim: total - rank,
    })
}

/// Hilbert series of the jet quotient through `maxdeg2`, default options.
pub fn hilbert_series<F: Field>(spec: &RingSpec<F>, maxdeg2: u32) -> Result<HilbertSeriesResult, JetError> {
    hilbert_series_with(spec, maxdeg2, &JetOptions::default())
}

pub fn hilbert_series_with<F: Field>(
    spec: &RingSpec<F>,
    maxdeg2: u32,
    opts: &JetOptions,
) -> Result<HilbertSeriesResult, JetError> {
    let ctx = IdealContext::new(spec, maxdeg2, opts)?;
    let dim = |d: u32| {
        let (total, rank) = ctx.rank(d, opts.parallel);
        (total - rank) as u64
    };
    let coefficients = if opts.parallel {
        (0..=maxdeg2).into_par_iter().map(dim).collect()
    } else {
        (0..=maxdeg2).map(dim).collect()
    };
    Ok(HilbertSeriesResult { maxdeg2, coefficients })
}

/// Whether a homogeneous polynomial lies in the differential ideal.
pub fn contains<F: Field>(spec: &RingSpec<F>, p: &Polynomial<F>, maxdeg2: u32) -> Result<bool, JetError> {
    let Some(d) = p.degree2()? else { return Ok(true) };
    if d > maxdeg2 {
        return Err(JetError::OutOfRange { degree2: d, maxdeg2 });
    }
    let opts = JetOptions { parallel: false, ..JetOptions::default() };
    let ctx = IdealContext::new(spec, d, &opts)?;
    let blocks = ctx.blocks(d);
    let mut parts: HashMap<Vec<i64>, Vec<(&Monomial, &F)>> = HashMap::new();
    for (m, c) in p.terms() {
        parts.entry(ctx.grading.key(m)).or_default().push((m, c));
    }
    for (key, terms) in parts {
        let cols = &blocks[&key];
        let e = ctx.block_echelon(d, &key, cols);
        let index: HashMap<&Monomial, u32> = cols.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
        let mut row: SparseRow<F> = terms.iter().map(|(m, c)| (index[*m], (*c).clone())).collect();
        row.sort_by_key(|(c, _)| *c);
        if !e.contains(row) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-degree comparison of the jet Hilbert series with a character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub maxdeg2: u32,
    /// `(degree2, jet dimension, character coefficient)`.
    pub rows: Vec<(u32, u64, BigInt)>,
    pub differing: Vec<u32>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.differing.is_empty()
    }
}

pub fn conjecture_check<F: Field>(
    spec: &RingSpec<F>,
    character: &Series,
    maxdeg2: u32,
) -> Result<ConjectureReport, JetError> {
    let hs = hilbert_series(spec, maxdeg2)?;
    let mut rows = Vec::new();
    let mut differing = Vec::new();
    for (d, &dim) in hs.coefficients.iter().enumerate() {
        let ch = character.coeff(d as u32);
        if BigInt::from(dim) != ch {
            differing.push(d as u32);
        }
        rows.push((d as u32, dim, ch));
    }
    Ok(ConjectureReport { maxdeg2, rows, differing })
}

#[cfg(test)]
fn kernel_annihilates(rows: &[Vec<i64>], basis: &[Vec<i64>]) -> bool {
    basis.iter().all(|w| rows.iter().all(|r| r.iter().zip(w).map(|(a, b)| a * b).sum::<i64>() == 0))
}
