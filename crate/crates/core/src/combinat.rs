//! Monomial orderings, leading terms and constrained monomial counts.
//!
//! Spanning-set arguments discard every ordered monomial containing a
//! leading term of an ideal element. What is left is described by
//! difference and boundary conditions on the parts of each variable, and
//! the counts here enumerate exactly those monomials.

use std::cmp::Ordering;

use num_bigint::BigInt;
use thiserror::Error;

use crate::qseries::Series;
use crate::scalar::Field;
use crate::superring::{JetVariable, Monomial, Polynomial, RingSpec, VariableSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatError {
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("D(k,1) conditions need k >= 2, got {0}")]
    LevelTooSmall(u32),
}

/// The complete lexicographic ordering.
///
/// Jet variables are listed by shift first and then by base in the order
/// given here. Monomials with more factors are greater; with equally many
/// factors, the first listed variable on which the exponents differ decides,
/// and the monomial with the larger exponent there is the smaller one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingSpec {
    rank: Vec<usize>,
}

impl OrderingSpec {
    /// `order[0]` is the first base variable, and so on.
    pub fn new(order: &[usize]) -> Self {
        let mut rank = vec![usize::MAX; order.len()];
        for (r, &b) in order.iter().enumerate() {
            rank[b] = r;
        }
        assert!(rank.iter().all(|&r| r != usize::MAX), "order must be a permutation");
        OrderingSpec { rank }
    }

    /// Bases in their index order.
    pub fn natural(nvars: usize) -> Self {
        Self::new(&(0..nvars).collect::<Vec<_>>())
    }

    fn position(&self, v: &JetVariable) -> (u32, usize) {
        (v.shift, self.rank[v.base as usize])
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match u.multiplicity().cmp(&v.multiplicity()) {
            Ordering::Equal => {}
            other => return other,
        }
        let keyed = |m: &Monomial| {
            let mut k: Vec<((u32, usize), u32)> = m.factors().iter().map(|(x, e)| (self.position(x), *e)).collect();
            k.sort();
            k
        };
        let (a, b) = (keyed(u), keyed(v));
        let (mut i, mut j) = (0, 0);
        loop {
            let ka = a.get(i).map(|x| x.0);
            let kb = b.get(j).map(|x| x.0);
            let (ea, eb) = match (ka, kb) {
                (None, None) => return Ordering::Equal,
                (Some(x), Some(y)) if x == y => {
                    i += 1;
                    j += 1;
                    (a[i - 1].1, b[j - 1].1)
                }
                (Some(x), Some(y)) if x < y => {
                    i += 1;
                    (a[i - 1].1, 0)
                }
                (Some(_), None) => {
                    i += 1;
                    (a[i - 1].1, 0)
                }
                _ => {
                    j += 1;
                    (0, b[j - 1].1)
                }
            };
            if ea != eb {
                // a smaller exponent makes the monomial greater
                return eb.cmp(&ea);
            }
        }
    }

    /// The greatest monomial of a nonzero polynomial.
    pub fn leading_term<F: Field>(&self, p: &Polynomial<F>) -> Result<Monomial, CombinatError> {
        p.terms()
            .map(|(m, _)| m)
            .max_by(|a, b| self.compare(a, b))
            .cloned()
            .ok_or(CombinatError::ZeroPolynomial)
    }
}

/// Free-function form of [`OrderingSpec::compare`].
pub fn compare(u: &Monomial, v: &Monomial, ord: &OrderingSpec) -> Ordering {
    ord.compare(u, v)
}

/// Free-function form of [`OrderingSpec::leading_term`].
pub fn leading_term<F: Field>(p: &Polynomial<F>, ord: &OrderingSpec) -> Result<Monomial, CombinatError> {
    ord.leading_term(p)
}

/// A condition on ordered monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// Shifts `s_1 >= s_2 >= ...` of one variable satisfy
    /// `s_j - s_{j+distance} >= gap`.
    DifferenceAtDistance { var: usize, distance: usize, gap: u32 },
    /// If `var` occurs, its smallest shift is at least the total number of
    /// factors of the variables in `others`.
    Boundary { var: usize, others: Vec<usize> },
    /// The conditions defining Gh-monomials, for the bases carrying `G^+`,
    /// `h` and `G^-`.
    Gh { plus: usize, h: usize, minus: usize },
    /// The D(k,1) conditions on the doubled degrees of all factors.
    Dk1 { k: u32 },
}

/// Shifts of each base variable, weakly decreasing, with multiplicity.
struct PartView {
    shifts: Vec<Vec<u32>>,
    degrees: Vec<u32>,
}

impl PartView {
    fn new(m: &Monomial, nvars: usize) -> Self {
        let mut shifts = vec![Vec::new(); nvars];
        let mut degrees = Vec::new();
        for (v, e) in m.factors() {
            for _ in 0..*e {
                shifts[v.base as usize].push(v.shift);
                degrees.push(v.degree2);
            }
        }
        for s in shifts.iter_mut() {
            s.sort_unstable_by(|a, b| b.cmp(a));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        PartView { shifts, degrees }
    }

    fn count_at(&self, var: usize, shift: u32) -> u32 {
        self.shifts[var].iter().filter(|&&s| s == shift).count() as u32
    }
}

impl Constraint {
    fn holds(&self, pv: &PartView) -> bool {
        match self {
            Constraint::DifferenceAtDistance { var, distance, gap } => {
                let s = &pv.shifts[*var];
                s.len() <= *distance || s.windows(distance + 1).all(|w| w[0] - w[*distance] >= *gap)
            }
            Constraint::Boundary { var, others } => match pv.shifts[*var].last() {
                None => true,
                Some(&min) => min as usize >= others.iter().map(|o| pv.shifts[*o].len()).sum::<usize>(),
            },
            Constraint::Gh { plus, h, minus } => gh_holds(pv, *plus, *h, *minus),
            Constraint::Dk1 { k } => {
                let b = &pv.degrees;
                let span = *k as usize - 1;
                (0..b.len()).all(|j| {
                    if j + span >= b.len() {
                        return true;
                    }
                    let d = b[j] - b[j + span];
                    if b[j] % 2 == 1 {
                        d >= 2
                    } else {
                        d > 2
                    }
                })
            }
        }
    }
}

/// Gh conditions in shift coordinates: `c[s]`, `b[s]`, `a[s]` count
/// `G^+`, `h`, `G^-` at shift `s`.
///
/// Clause (iii) is read as `a[s] + c[s+1] <= 1` for every `s`,
/// `a[s] + c[s] <= 1` for `s >= 1`, and `b[0] <= 2`.
fn gh_holds(pv: &PartView, plus: usize, h: usize, minus: usize) -> bool {
    let top = [plus, h, minus]
        .iter()
        .filter_map(|&v| pv.shifts[v].first().copied())
        .max()
        .unwrap_or(0);
    let c = |s: u32| pv.count_at(plus, s);
    let b = |s: u32| pv.count_at(h, s);
    let a = |s: u32| pv.count_at(minus, s);
    if b(0) > 2 {
        return false;
    }
    for s in 0..=top {
        if b(s) * c(s) != 0 || b(s) * c(s + 1) != 0 {
            return false;
        }
        if a(s) * b(s) != 0 || a(s) * b(s + 1) != 0 {
            return false;
        }
        if a(s) + c(s + 1) > 1 || (s >= 1 && a(s) + c(s) > 1) {
            return false;
        }
        if c(s) + c(s + 1) + c(s + 2) > 1 || a(s) + a(s + 1) + a(s + 2) > 1 {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstraintSet {
    pub constraints: Vec<Constraint>,
}

impl ConstraintSet {
    pub fn new(constraints: Vec<Constraint>) -> Self {
        ConstraintSet { constraints }
    }

    pub fn admits(&self, m: &Monomial, nvars: usize) -> bool {
        let pv = PartView::new(m, nvars);
        self.constraints.iter().all(|c| c.holds(&pv))
    }
}

/// The D(k,1) conditions: parts of `l` (integers) and `g` (half-odd
/// integers) in one weakly decreasing list, odd parts distinct, with
/// `b_j - b_{j+k-1} >= 1` for half-odd `b_j` and `> 1` for integer `b_j`.
pub fn dk1_conditions(k: u32) -> Result<ConstraintSet, CombinatError> {
    if k < 2 {
        return Err(CombinatError::LevelTooSmall(k));
    }
    Ok(ConstraintSet::new(vec![Constraint::Dk1 { k }]))
}

/// Number of admitted monomials in each degree `0..=maxdeg2`.
///
/// Exhaustive: every monomial up to the truncation is generated and tested.
pub fn count_constrained(vars: &[VariableSpec], cs: &ConstraintSet, maxdeg2: u32) -> Series {
    let spec = RingSpec::<crate::Rational>::new(vars.to_vec(), Vec::new());
    let jets = crate::jetquot::jet_variables(&spec, maxdeg2);
    let mut counts = vec![0u64; maxdeg2 as usize + 1];
    let mut cur = Vec::new();
    walk(&jets, 0, 0, maxdeg2, &mut cur, &mut |m: &Monomial| {
        if cs.admits(m, vars.len()) {
            counts[m.degree2() as usize] += 1;
        }
    });
    Series::from_coefficients(counts.into_iter().map(BigInt::from).collect())
}

fn walk(
    jets: &[JetVariable],
    k: usize,
    deg: u32,
    max: u32,
    cur: &mut Vec<(JetVariable, u32)>,
    visit: &mut dyn FnMut(&Monomial),
) {
    if k == jets.len() || jets[k].degree2 + deg > max {
        visit(&Monomial::from_canonical(cur.clone()));
        return;
    }
    walk(jets, k + 1, deg, max, cur, visit);
    let v = jets[k];
    let max_e = if v.odd { 1 } else { (max - deg) / v.degree2 };
    for e in 1..=max_e {
        cur.push((v, e));
        walk(jets, k + 1, deg + e * v.degree2, max, cur, visit);
        cur.pop();
    }
}
