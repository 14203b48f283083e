//! Named q-series: characters, fermionic sums and their bosonic closed forms.
//!
//! Keys look like `theta:3`, `jm:A4`, `ml:sl3:rhs` or `poch:5`; see
//! [`FORMULA_KEYS`] for the full list.

use num_bigint::BigInt;

use super::ModelError;
use crate::qseries::{fermionic_sum, gordon_product, n1_product, theta_over_eta, FermionicForm, Series};

/// Key patterns accepted by [`expand`], with a one-line description each.
pub const FORMULA_KEYS: &[(&str, &str)] = &[
    ("theta:<p>", "sum_n q^{p n^2/2} / (q)_inf"),
    ("n1product:<k>", "product over n != 2 mod 4, n != 0,+-1 mod 4k of 1/(1-q^{n/2})"),
    ("gordon:<m>,<i>", "product over n != 0,+-i mod m of 1/(1-q^n)"),
    ("vir:<k>", "vacuum character of the (2,2k+1) Virasoro minimal model"),
    ("ns:<p>,<p'>", "vacuum character of the N=1 (p,p') minimal model"),
    ("sl2p:<k>", "sum q^{N_1^2+...+N_k^2} / (q)_{n_1}...(q)_{n_k}"),
    ("master:A<k>", "fermionic sum for the path graph with k vertices"),
    ("master2:C<k>", "fermionic sum for the cycle graph with k vertices"),
    ("graphsum:<rows>", "fermionic sum of a graph given by 0/1 adjacency rows, e.g. graphsum:01,10"),
    ("jm:A<k>", "closed form for the path graph, k = 2..6"),
    ("jm2:C<k>", "closed form for the cycle graph, k = 3 or 5"),
    ("ml:sl<n>:lhs", "sum over positive roots of q^{B(n)} / prod (q)_{n_ij}"),
    ("ml:sl<n>:rhs", "sum q^{k A k^T / 2} / prod (q)_{k_i} with A the Cartan matrix"),
    ("fs:<n>", "sum q^{sum l_i^2 + sum_{i<j} l_i l_j} / prod (q)_{l_i}"),
    ("extvir:pair", "sum q^{n1^2+n2^2+n1+n2} / (q)_{n1} (q)_{n2}"),
    ("extvir:triple", "the three-index extended Virasoro sum"),
    ("poslat:<a>", "sum q^{a n^2/2} / (q)_n"),
    ("poch:<n>", "(q;q)_n, or (q;q)_inf for poch:inf"),
];

fn bad(key: &str) -> ModelError {
    ModelError::UnknownFormula(key.to_string())
}

fn num(s: &str, key: &str) -> Result<u32, ModelError> {
    s.trim().parse().map_err(|_| bad(key))
}

fn pair(s: &str, key: &str) -> Result<(u32, u32), ModelError> {
    let (a, b) = s.split_once(',').ok_or_else(|| bad(key))?;
    Ok((num(a, key)?, num(b, key)?))
}

fn fermionic(quad2: Vec<Vec<i64>>, linear2: Vec<i64>, maxdeg2: u32) -> Result<Series, ModelError> {
    Ok(fermionic_sum(&FermionicForm::new(quad2, linear2), maxdeg2)?)
}

fn euler_inverse(power: u32, maxdeg2: u32) -> Series {
    let e = Series::<BigInt>::pochhammer(None, maxdeg2).invert().expect("unit constant term");
    (1..power).fold(e.clone(), |acc, _| acc.mul(&e))
}

/// Evaluates `f(maxdeg2 + 2) / q`.
fn over_q(maxdeg2: u32, f: impl Fn(u32) -> Series) -> Result<Series, ModelError> {
    Ok(f(maxdeg2 + 2).shift_down(2)?)
}

/// Doubled quadratic form of a graph: the adjacency matrix, loops on the
/// diagonal.
pub fn graph_form(adjacency: &[Vec<bool>]) -> FermionicForm {
    let q = adjacency.iter().map(|r| r.iter().map(|&b| b as i64).collect()).collect();
    FermionicForm::new(q, vec![2; adjacency.len()])
}

pub fn path_adjacency(k: usize) -> Vec<Vec<bool>> {
    (0..k).map(|i| (0..k).map(|j| i.abs_diff(j) == 1).collect()).collect()
}

pub fn cycle_adjacency(k: usize) -> Vec<Vec<bool>> {
    (0..k).map(|i| (0..k).map(|j| i != j && (i.abs_diff(j) == 1 || i.abs_diff(j) == k - 1)).collect()).collect()
}

/// Positive roots `(i, j)`, `i < j`, in the order `E12, E13, ..., E1n, E23, ...`.
pub fn positive_roots(n: u32) -> Vec<(u32, u32)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Whether `(a, b)` is a pair counted in `B(n)`: `i1 <= i2`, `j1 <= j2`,
/// `j1 > i2`.
pub fn roots_interact(a: (u32, u32), b: (u32, u32)) -> bool {
    let ((i1, j1), (i2, j2)) = if a.0 < b.0 || (a.0 == b.0 && a.1 <= b.1) { (a, b) } else { (b, a) };
    i1 <= i2 && j1 <= j2 && j1 > i2
}

fn ml_lhs(n: u32, maxdeg2: u32) -> Result<Series, ModelError> {
    let roots = positive_roots(n);
    let q = roots
        .iter()
        .map(|&a| roots.iter().map(|&b| if a == b { 2 } else { roots_interact(a, b) as i64 }).collect())
        .collect();
    fermionic(q, vec![0; roots.len()], maxdeg2)
}

fn cartan_a(r: usize) -> Vec<Vec<i64>> {
    (0..r).map(|i| (0..r).map(|j| if i == j { 2 } else if i.abs_diff(j) == 1 { -1 } else { 0 }).collect()).collect()
}

fn ns_vacuum(p: u32, pp: u32, maxdeg2: u32) -> Series {
    let (p, pp, max) = (p as i64, pp as i64, maxdeg2 as i64);
    let mut theta = vec![BigInt::from(0); maxdeg2 as usize + 1];
    for k in -(max + 1)..=max + 1 {
        let plus = p * pp * k * k + k * (pp - p);
        let minus = (p * k + 1) * (pp * k + 1);
        if (0..=max).contains(&plus) {
            theta[plus as usize] += 1;
        }
        if (0..=max).contains(&minus) {
            theta[minus as usize] -= 1;
        }
    }
    let ns = Series::neg_half_pochhammer(maxdeg2 + 1, maxdeg2).mul(&euler_inverse(1, maxdeg2));
    Series::from_coefficients(theta).mul(&ns)
}

fn jm(k: u32, maxdeg2: u32) -> Result<Series, ModelError> {
    let top = maxdeg2 / 2 + 2;
    match k {
        2 => Ok(Series::geometric(2, maxdeg2).mul(&euler_inverse(1, maxdeg2))),
        3 => over_q(maxdeg2, |m| euler_inverse(2, m).sub(&euler_inverse(1, m))),
        4 => over_q(maxdeg2, |m| {
            let lambert = (1..=top).fold(Series::zero(m), |acc, n| {
                acc.add(&Series::monomial(BigInt::from(1), 2 * n, m).mul(&Series::geometric(2 * n, m)))
            });
            lambert.mul(&euler_inverse(2, m))
        }),
        5 => {
            let mut s = Series::zero(maxdeg2);
            for n in 0..=top {
                let g = Series::geometric(2 * (n + 1), maxdeg2);
                let den = Series::pochhammer(Some(n), maxdeg2).invert()?;
                s = s.add(&Series::monomial(BigInt::from(1), 2 * n, maxdeg2).mul(&den).mul(&g).mul(&g));
            }
            Ok(s.mul(&euler_inverse(2, maxdeg2)))
        }
        6 => {
            let mut s = Series::zero(maxdeg2);
            let inv: Vec<Series> =
                (0..=top + 1).map(|n| Series::pochhammer(Some(n), maxdeg2).invert().expect("unit")).collect();
            for n in 0..=top {
                for m in 0..=top {
                    let e = n + m + n * m;
                    if 2 * e > maxdeg2 {
                        continue;
                    }
                    let t = Series::monomial(BigInt::from(1), 2 * e, maxdeg2);
                    s = s.add(&t.mul(&inv[n as usize + 1]).mul(&inv[m as usize + 1]));
                }
            }
            Ok(s.mul(&euler_inverse(2, maxdeg2)))
        }
        _ => Err(ModelError::UnknownFormula(format!("jm:A{k}"))),
    }
}

fn jm2(k: u32, maxdeg2: u32) -> Result<Series, ModelError> {
    let top = maxdeg2 / 2 + 2;
    match k {
        3 => {
            let mut s = Series::zero(maxdeg2);
            for n in 0..=top {
                let den = Series::shifted_pochhammer(n + 1, Some(n + 1), maxdeg2).invert()?;
                s = s.add(&Series::monomial(BigInt::from(1), 2 * n, maxdeg2).mul(&den));
            }
            Ok(s.mul(&euler_inverse(1, maxdeg2)))
        }
        5 => over_q(maxdeg2, |m| {
            let lambert = (1..=top).fold(Series::zero(m), |acc, n| {
                acc.add(&Series::monomial(BigInt::from(n), 2 * n, m).mul(&Series::geometric(2 * n, m)))
            });
            lambert.mul(&euler_inverse(2, m))
        }),
        _ => Err(ModelError::UnknownFormula(format!("jm2:C{k}"))),
    }
}

/// Expands a named formula through `maxdeg2`.
pub fn expand(key: &str, maxdeg2: u32) -> Result<Series, ModelError> {
    let (head, arg) = key.split_once(':').ok_or_else(|| bad(key))?;
    match head {
        "theta" => {
            let p = num(arg, key)?;
            if p == 0 {
                return Err(bad(key));
            }
            Ok(theta_over_eta(p, maxdeg2))
        }
        "n1product" => match num(arg, key)? {
            0 => Err(bad(key)),
            k => Ok(n1_product(k, maxdeg2)),
        },
        "gordon" => match pair(arg, key)? {
            (m, i) if m >= 1 => Ok(gordon_product(m, i, maxdeg2)),
            _ => Err(bad(key)),
        },
        "vir" => match num(arg, key)? {
            0 => Err(bad(key)),
            k => Ok(gordon_product(2 * k + 1, 1, maxdeg2)),
        },
        "ns" => match pair(arg, key)? {
            (p, pp) if pp > p && p >= 2 && (pp - p) % 2 == 0 => Ok(ns_vacuum(p, pp, maxdeg2)),
            _ => Err(bad(key)),
        },
        "sl2p" => {
            let k = num(arg, key)? as usize;
            if k == 0 {
                return Err(bad(key));
            }
            let q = (0..k).map(|a| (0..k).map(|b| 2 * (a.min(b) as i64 + 1)).collect()).collect();
            fermionic(q, vec![0; k], maxdeg2)
        }
        "master" | "master2" => {
            let (prefix, min) = if head == "master" { ('A', 1) } else { ('C', 3) };
            let k = arg.strip_prefix(prefix).ok_or_else(|| bad(key)).and_then(|s| num(s, key))? as usize;
            if k < min {
                return Err(bad(key));
            }
            let adj = if head == "master" { path_adjacency(k) } else { cycle_adjacency(k) };
            Ok(fermionic_sum(&graph_form(&adj), maxdeg2)?)
        }
        "graphsum" => {
            let rows: Vec<Vec<bool>> = arg.split(',').map(|r| r.chars().map(|c| c == '1').collect()).collect();
            let k = rows.len();
            let ok = arg.split(',').all(|r| r.len() == k && r.chars().all(|c| c == '0' || c == '1'));
            if !ok || (0..k).any(|i| (0..k).any(|j| rows[i][j] != rows[j][i])) {
                return Err(bad(key));
            }
            Ok(fermionic_sum(&graph_form(&rows), maxdeg2)?)
        }
        "jm" => jm(arg.strip_prefix('A').ok_or_else(|| bad(key)).and_then(|s| num(s, key))?, maxdeg2),
        "jm2" => jm2(arg.strip_prefix('C').ok_or_else(|| bad(key)).and_then(|s| num(s, key))?, maxdeg2),
        "ml" => {
            let (alg, side) = arg.split_once(':').ok_or_else(|| bad(key))?;
            let n = alg.strip_prefix("sl").ok_or_else(|| bad(key)).and_then(|s| num(s, key))?;
            if n < 2 {
                return Err(bad(key));
            }
            match side {
                "lhs" => ml_lhs(n, maxdeg2),
                "rhs" => fermionic(cartan_a(n as usize - 1), vec![0; n as usize - 1], maxdeg2),
                _ => Err(bad(key)),
            }
        }
        "fs" => {
            let n = num(arg, key)? as usize;
            if n == 0 {
                return Err(bad(key));
            }
            let q = (0..n).map(|i| (0..n).map(|j| if i == j { 2 } else { 1 }).collect()).collect();
            fermionic(q, vec![0; n], maxdeg2)
        }
        "extvir" => match arg {
            "pair" => fermionic(vec![vec![2, 0], vec![0, 2]], vec![2, 2], maxdeg2),
            "triple" => fermionic(vec![vec![2, 2, 1], vec![2, 4, 2], vec![1, 2, 2]], vec![2, 4, 2], maxdeg2),
            _ => Err(bad(key)),
        },
        "poslat" => match num(arg, key)? {
            0 => Err(bad(key)),
            a => fermionic(vec![vec![a as i64]], vec![0], maxdeg2),
        },
        "poch" => match arg {
            "inf" => Ok(Series::pochhammer(None, maxdeg2)),
            _ => Ok(Series::pochhammer(Some(num(arg, key)?), maxdeg2)),
        },
        _ => Err(bad(key)),
    }
}
