//! The model registry: presentations, characters, expected verdicts and
//! spanning-set conditions for each example, plus verification.

pub mod formulas;
pub mod registry_file;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinat::{count_constrained, dk1_conditions, Constraint, ConstraintSet};
use crate::jetquot::{hilbert_series_with, JetError, JetOptions};
use crate::qseries::{Series, SeriesError};
use crate::superring::{parse_polynomial, Polynomial, RingError, RingSpec, VariableSpec};
use crate::Rational;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("unknown model key `{0}`")]
    UnknownModel(String),
    #[error("unknown formula key `{0}`")]
    UnknownFormula(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("model `{0}` has no registered character")]
    NoCharacter(String),
    #[error("registry line {line}: {message}")]
    Registry { line: usize, message: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Jet(#[from] JetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum N2Variant {
    Bare,
    Ab,
    Abc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtVirKind {
    /// `<x^2, y^2>`
    Xy,
    /// `<uv, u^2 + v^2, u^3, v^3>`
    UvSum,
    /// `<u^2, v^3, uv>`
    UvMixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphShape {
    Path(u32),
    Cycle(u32),
    /// Symmetric 0/1 adjacency; a diagonal entry is a loop.
    Adjacency(Vec<Vec<bool>>),
}

impl GraphShape {
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        match self {
            GraphShape::Path(k) => formulas::path_adjacency(*k as usize),
            GraphShape::Cycle(k) => formulas::cycle_adjacency(*k as usize),
            GraphShape::Adjacency(a) => a.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModelId {
    /// `C[x,y,z]/<x^2, y^2, xy - z^p, xz, yz>`.
    Lattice(u32),
    N2C1(N2Variant),
    /// `C[x]/<x^{k+1}>`, weight 1.
    Sl2Principal(u32),
    /// `C[x]/<x^k>`, weight 2.
    Virasoro(u32),
    /// `C[l,g]/<l^k, l^{k-1} g>`.
    N1Minimal(u32),
    /// `C[l,g]/<l^{|c|}>` for `p, p'` both odd.
    N1Odd(u32, u32),
    Graph(GraphShape),
    SlnPrincipal(u32),
    FsType(u32),
    Sl2Affine(u32),
    ExtVir(ExtVirKind),
    /// Rank one lattice `Z alpha` with `<alpha, alpha> = a`.
    PositiveLattice(u32),
    FreeFermion,
    /// A model loaded from a registry file.
    Custom(String),
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelId::Lattice(p) => write!(f, "lattice:{p}"),
            ModelId::N2C1(v) => {
                let s = match v {
                    N2Variant::Bare => "bare",
                    N2Variant::Ab => "ab",
                    N2Variant::Abc => "abc",
                };
                write!(f, "n2_c1:{s}")
            }
            ModelId::Sl2Principal(k) => write!(f, "sl2p:{k}"),
            ModelId::Virasoro(k) => write!(f, "vir:{k}"),
            ModelId::N1Minimal(k) => write!(f, "n1:{k}"),
            ModelId::N1Odd(p, q) => write!(f, "n1odd:{p},{q}"),
            ModelId::Graph(GraphShape::Path(k)) => write!(f, "graph:A{k}"),
            ModelId::Graph(GraphShape::Cycle(k)) => write!(f, "graph:C{k}"),
            ModelId::Graph(GraphShape::Adjacency(a)) if a == &[vec![true]] => write!(f, "graph:loop"),
            ModelId::Graph(GraphShape::Adjacency(a)) => {
                let rows: Vec<String> =
                    a.iter().map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect()).collect();
                write!(f, "graph:{}", rows.join(","))
            }
            ModelId::SlnPrincipal(n) => write!(f, "sln:{n}"),
            ModelId::FsType(n) => write!(f, "fs:{n}"),
            ModelId::Sl2Affine(k) => write!(f, "sl2aff:{k}"),
            ModelId::ExtVir(kind) => {
                let s = match kind {
                    ExtVirKind::Xy => "xy",
                    ExtVirKind::UvSum => "uv_sum",
                    ExtVirKind::UvMixed => "uv_mixed",
                };
                write!(f, "extvir:{s}")
            }
            ModelId::PositiveLattice(a) => write!(f, "poslat:{a}"),
            ModelId::FreeFermion => write!(f, "fermion"),
            ModelId::Custom(k) => write!(f, "{k}"),
        }
    }
}

fn range(ok: bool, what: impl FnOnce() -> String) -> Result<(), ModelError> {
    if ok {
        Ok(())
    } else {
        Err(ModelError::OutOfRange(what()))
    }
}

impl FromStr for ModelId {
    type Err = ModelError;

    /// Parses built-in keys; anything else is an unknown model. Range
    /// checks happen in [`presentation`].
    fn from_str(key: &str) -> Result<Self, ModelError> {
        let unknown = || ModelError::UnknownModel(key.to_string());
        if key == "fermion" {
            return Ok(ModelId::FreeFermion);
        }
        let (head, arg) = key.split_once(':').ok_or_else(unknown)?;
        let n = |s: &str| s.parse::<u32>().map_err(|_| unknown());
        Ok(match head {
            "lattice" => ModelId::Lattice(n(arg)?),
            "n2_c1" => ModelId::N2C1(match arg {
                "bare" => N2Variant::Bare,
                "ab" => N2Variant::Ab,
                "abc" => N2Variant::Abc,
                _ => return Err(unknown()),
            }),
            "sl2p" => ModelId::Sl2Principal(n(arg)?),
            "vir" => ModelId::Virasoro(n(arg)?),
            "n1" => ModelId::N1Minimal(n(arg)?),
            "n1odd" => {
                let (p, q) = arg.split_once(',').ok_or_else(unknown)?;
                ModelId::N1Odd(n(p)?, n(q)?)
            }
            "graph" => ModelId::Graph(if arg == "loop" {
                GraphShape::Adjacency(vec![vec![true]])
            } else if let Some(k) = arg.strip_prefix('A') {
                GraphShape::Path(n(k)?)
            } else if let Some(k) = arg.strip_prefix('C') {
                GraphShape::Cycle(n(k)?)
            } else {
                let rows: Vec<Vec<bool>> = arg
                    .split(',')
                    .map(|r| r.chars().map(|c| matches!(c, '1')).collect::<Vec<_>>())
                    .collect();
                let k = rows.len();
                let well_formed = !arg.is_empty()
                    && arg.split(',').all(|r| r.len() == k && r.chars().all(|c| c == '0' || c == '1'))
                    && (0..k).all(|i| (0..k).all(|j| rows[i][j] == rows[j][i]));
                if !well_formed {
                    return Err(unknown());
                }
                GraphShape::Adjacency(rows)
            }),
            "sln" => ModelId::SlnPrincipal(n(arg)?),
            "fs" => ModelId::FsType(n(arg)?),
            "sl2aff" => ModelId::Sl2Affine(n(arg)?),
            "extvir" => ModelId::ExtVir(match arg {
                "xy" => ExtVirKind::Xy,
                "uv_sum" => ExtVirKind::UvSum,
                "uv_mixed" => ExtVirKind::UvMixed,
                _ => return Err(unknown()),
            }),
            "poslat" => ModelId::PositiveLattice(n(arg)?),
            _ => return Err(unknown()),
        })
    }
}

/// What the source asserts about a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Expectation {
    IsoConsistent,
    Mismatch,
    HsOnly,
    /// No assertion; any verdict is accepted.
    Unstated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    IsoConsistent,
    Mismatch,
    HsOnly,
}

impl Verdict {
    pub fn satisfies(self, e: Expectation) -> bool {
        match e {
            Expectation::Unstated => true,
            Expectation::IsoConsistent => self == Verdict::IsoConsistent,
            Expectation::Mismatch => self == Verdict::Mismatch,
            Expectation::HsOnly => self == Verdict::HsOnly,
        }
    }
}

/// A registry entry.
#[derive(Debug, Clone)]
pub struct Model {
    pub key: String,
    pub topic: String,
    pub summary: String,
    pub spec: RingSpec<Rational>,
    /// Formula key understood by [`formulas::expand`].
    pub character: Option<String>,
    pub expected: Expectation,
    pub default_maxdeg2: u32,
    pub spanning: Option<ConstraintSet>,
}

impl Model {
    pub fn character(&self, maxdeg2: u32) -> Result<Series, ModelError> {
        match &self.character {
            Some(k) => formulas::expand(k, maxdeg2),
            None => Err(ModelError::NoCharacter(self.key.clone())),
        }
    }

    pub fn spanning_count(&self, maxdeg2: u32) -> Option<Series> {
        self.spanning.as_ref().map(|cs| count_constrained(&self.spec.variables, cs, maxdeg2))
    }
}

fn vars_and_rels(vars: Vec<VariableSpec>, rels: &[&str]) -> Result<RingSpec<Rational>, ModelError> {
    let relations = rels.iter().map(|r| parse_polynomial(&vars, r)).collect::<Result<Vec<_>, _>>()?;
    let spec = RingSpec::new(vars, relations);
    spec.validate()?;
    Ok(spec)
}

fn lattice_vars(p: u32) -> Vec<VariableSpec> {
    let v = |name: &str| if p % 2 == 1 { VariableSpec::odd(name, p) } else { VariableSpec::even(name, p) };
    vec![v("x"), v("y"), VariableSpec::even("z", 2)]
}

pub const N2_EXTRA_A: &str = "Gp(-5/2) * Gp(-3/2)";
pub const N2_EXTRA_B: &str = "Gm(-5/2) * Gm(-3/2)";
pub const N2_EXTRA_C: &str = "Gm(-9/2) - 1/3 * h(-3) * Gm(-3/2) - Gm(-7/2) * h(-1) + 1/3 * Gm(-5/2) * h(-1)^2";

/// Variables `G+`, `h`, `G-` (named `Gp`, `h`, `Gm`) in ordering position.
pub fn n2_variables() -> Vec<VariableSpec> {
    vec![VariableSpec::odd("Gp", 3), VariableSpec::even("h", 2), VariableSpec::odd("Gm", 3)]
}

/// `|c_{p,p'}|` for the N=1 minimal models.
pub fn n1_central_index(p: u32, pp: u32) -> u32 {
    let sign = if (p * pp) % 2 == 0 { 2 } else { 0 };
    ((p - 1) * (pp - 1) * 2 + sign) / 8
}

/// Names `E{i}_{j}` of the positive root vectors, in ordering position.
pub fn sln_variables(n: u32) -> Vec<VariableSpec> {
    formulas::positive_roots(n).iter().map(|(i, j)| VariableSpec::even(&format!("E{i}_{j}"), 2)).collect()
}

fn sln_relations(n: u32) -> Vec<String> {
    let mut out = Vec::new();
    for (i1, j1) in formulas::positive_roots(n) {
        for (i2, j2) in formulas::positive_roots(n) {
            if i1 <= i2 && j1 <= j2 && j1 > i2 {
                out.push(format!("E{i1}_{j1} * E{i2}_{j2} + E{i1}_{j2} * E{i2}_{j1}"));
            }
        }
    }
    out
}

/// `ad_f^i (e^{k+1})` for `i = 0..=2k+2` in `C[e, f, h]`, with
/// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn adjoint_generators_sl2(k: u32) -> Vec<Polynomial<Rational>> {
    let vars = sl2_variables();
    let at = |name: &str| parse_polynomial(&vars, name).expect("sl2 variable");
    let (f, h) = (at("f"), at("h"));
    let two = Rational::from_integer(2.into());
    let ad_f = |p: &Polynomial<Rational>| {
        p.apply_derivation(|v| {
            assert_eq!(v.shift, 0, "adjoint action on shift-zero variables only");
            match v.base {
                0 => h.neg(),
                2 => f.scale(&two),
                _ => Polynomial::zero(),
            }
        })
    };
    let mut out = vec![at("e").pow(k + 1)];
    for _ in 0..2 * k + 2 {
        let next = ad_f(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

pub fn sl2_variables() -> Vec<VariableSpec> {
    vec![VariableSpec::even("e", 2), VariableSpec::even("f", 2), VariableSpec::even("h", 2)]
}

fn diff2(var: usize, distance: usize) -> Constraint {
    Constraint::DifferenceAtDistance { var, distance, gap: 2 }
}

/// Resolves a built-in model.
pub fn resolve(id: &ModelId) -> Result<Model, ModelError> {
    let key = id.to_string();
    let model = |topic: &str, summary: String, spec, character: Option<String>, expected, maxdeg2, spanning| Model {
        key: key.clone(),
        topic: topic.to_string(),
        summary,
        spec,
        character,
        expected,
        default_maxdeg2: maxdeg2,
        spanning,
    };
    use Expectation::*;
    Ok(match id {
        ModelId::Lattice(p) => {
            let p = *p;
            range(p >= 1, || format!("lattice needs p >= 1, got {p}"))?;
            let zp = format!("x * y - z^{p}");
            let spec = vars_and_rels(lattice_vars(p), &["x^2", "y^2", &zp, "x * z", "y * z"])?;
            let expected = match p {
                1 | 2 => IsoConsistent,
                3 => Mismatch,
                _ => Unstated,
            };
            model(
                "lattice",
                format!("C[x,y,z]/<x^2, y^2, xy - z^{p}, xz, yz>, lattice sqrt({p})Z"),
                spec,
                Some(format!("theta:{p}")),
                expected,
                20,
                None,
            )
        }
        ModelId::N2C1(v) => {
            let vars = n2_variables();
            let mut spec = vars_and_rels(vars.clone(), &["Gp^2", "Gm^2", "Gp * Gm - h^3", "Gp * h", "Gm * h"])?;
            let extras: &[&str] = match v {
                N2Variant::Bare => &[],
                N2Variant::Ab => &[N2_EXTRA_A, N2_EXTRA_B],
                N2Variant::Abc => &[N2_EXTRA_A, N2_EXTRA_B, N2_EXTRA_C],
            };
            let extras = extras.iter().map(|s| parse_polynomial(&vars, s)).collect::<Result<Vec<_>, _>>()?;
            spec = spec.with_extras(extras);
            let (summary, expected, spanning) = match v {
                N2Variant::Bare => ("N=2, c=1: C[G+,G-,h]/<G+^2, G-^2, G+G- - h^3, G+h, G-h>", Mismatch, None),
                N2Variant::Ab => (
                    "N=2, c=1 with the null vectors a, b added",
                    Mismatch,
                    Some(ConstraintSet::new(vec![Constraint::Gh { plus: 0, h: 1, minus: 2 }])),
                ),
                N2Variant::Abc => ("N=2, c=1 with a, b and the kernel witness c added", IsoConsistent, None),
            };
            model("n2", summary.to_string(), spec, Some("theta:3".into()), expected, 14, spanning)
        }
        ModelId::Sl2Principal(k) => {
            let k = *k;
            range(k >= 1, || format!("sl2p needs k >= 1, got {k}"))?;
            let spec = vars_and_rels(vec![VariableSpec::even("x", 2)], &[&format!("x^{}", k + 1)])?;
            model(
                "principal",
                format!("sl2 principal subspace, level {k}: C[x]/<x^{}>", k + 1),
                spec,
                Some(format!("sl2p:{k}")),
                IsoConsistent,
                40,
                Some(ConstraintSet::new(vec![diff2(0, k as usize)])),
            )
        }
        ModelId::Virasoro(k) => {
            let k = *k;
            range(k >= 2, || format!("vir needs k >= 2, got {k}"))?;
            let spec = vars_and_rels(vec![VariableSpec::even("x", 4)], &[&format!("x^{k}")])?;
            model(
                "virasoro",
                format!("Virasoro (2,{}) minimal model: C[x]/<x^{k}>", 2 * k + 1),
                spec,
                Some(format!("vir:{k}")),
                IsoConsistent,
                40,
                Some(ConstraintSet::new(vec![diff2(0, k as usize - 1)])),
            )
        }
        ModelId::N1Minimal(k) => {
            let k = *k;
            range(k >= 2, || format!("n1 needs k >= 2, got {k}"))?;
            let vars = vec![VariableSpec::even("l", 4), VariableSpec::odd("g", 3)];
            let spec = vars_and_rels(vars, &[&format!("l^{k}"), &format!("l^{} * g", k - 1)])?;
            model(
                "n1",
                format!("N=1 (2,{}) minimal model: C[l,g]/<l^{k}, l^{} g>", 4 * k, k - 1),
                spec,
                Some(format!("n1product:{k}")),
                IsoConsistent,
                24,
                Some(dk1_conditions(k).expect("k >= 2")),
            )
        }
        ModelId::N1Odd(p, pp) => {
            let (p, pp) = (*p, *pp);
            range(p >= 3 && pp > p && p % 2 == 1 && pp % 2 == 1, || format!("n1odd needs odd p' > p >= 3, got {p},{pp}"))?;
            range(((pp - p) / 2).gcd(&p) == 1, || format!("n1odd needs gcd((p'-p)/2, p) = 1, got {p},{pp}"))?;
            let c = n1_central_index(p, pp);
            let vars = vec![VariableSpec::even("l", 4), VariableSpec::odd("g", 3)];
            let spec = vars_and_rels(vars, &[&format!("l^{c}")])?;
            model(
                "n1",
                format!("N=1 ({p},{pp}) minimal model: C[l,g]/<l^{c}>"),
                spec,
                Some(format!("ns:{p},{pp}")),
                Mismatch,
                24,
                None,
            )
        }
        ModelId::Graph(shape) => graph_model(&key, shape)?,
        ModelId::SlnPrincipal(n) => {
            let n = *n;
            range(n >= 2, || format!("sln needs n >= 2, got {n}"))?;
            let rels = sln_relations(n);
            let rel_refs: Vec<&str> = rels.iter().map(String::as_str).collect();
            let spec = vars_and_rels(sln_variables(n), &rel_refs)?;
            let roots = formulas::positive_roots(n);
            let mut cs: Vec<Constraint> = (0..roots.len()).map(|s| diff2(s, 1)).collect();
            for (s, &(_, js)) in roots.iter().enumerate() {
                let others: Vec<usize> =
                    (s + 1..roots.len()).filter(|&t| roots[t].0 < js && js <= roots[t].1).collect();
                if !others.is_empty() {
                    cs.push(Constraint::Boundary { var: s, others });
                }
            }
            let maxdeg2 = match n {
                2 => 40,
                3 => 24,
                _ => 14,
            };
            model(
                "principal",
                format!("principal subspace of sl{n} at level 1"),
                spec,
                Some(format!("ml:sl{n}:rhs")),
                IsoConsistent,
                maxdeg2,
                Some(ConstraintSet::new(cs)),
            )
        }
        ModelId::FsType(n) => {
            let n = *n;
            range(n >= 1, || format!("fs needs n >= 1, got {n}"))?;
            let vars: Vec<VariableSpec> = (1..=n).map(|i| VariableSpec::even(&format!("x{i}"), 2)).collect();
            let rels: Vec<String> =
                (1..=n).flat_map(|i| (i..=n).map(move |j| format!("x{i} * x{j}"))).collect();
            let rel_refs: Vec<&str> = rels.iter().map(String::as_str).collect();
            let spec = vars_and_rels(vars, &rel_refs)?;
            let n = n as usize;
            let mut cs: Vec<Constraint> = (0..n).map(|s| diff2(s, 1)).collect();
            cs.extend((0..n - 1).map(|s| Constraint::Boundary { var: s, others: (s + 1..n).collect() }));
            model(
                "fs",
                format!("Feigin-Stoyanovsky type subspace, A{n} level 1, omega_1"),
                spec,
                Some(format!("fs:{n}")),
                IsoConsistent,
                if n <= 2 { 24 } else { 20 },
                Some(ConstraintSet::new(cs)),
            )
        }
        ModelId::Sl2Affine(k) => {
            let k = *k;
            range(k >= 1, || format!("sl2aff needs k >= 1, got {k}"))?;
            let spec = RingSpec::new(sl2_variables(), adjoint_generators_sl2(k));
            spec.validate()?;
            let (character, expected) = if k == 1 { (Some("theta:2".to_string()), IsoConsistent) } else { (None, HsOnly) };
            model(
                "affine",
                format!("affine sl2 at level {k}: adjoint orbit of e^{}", k + 1),
                spec,
                character,
                expected,
                if k == 1 { 20 } else { 16 },
                None,
            )
        }
        ModelId::ExtVir(kind) => {
            let (spec, spanning, character, summary) = match kind {
                ExtVirKind::Xy => (
                    vars_and_rels(vec![VariableSpec::even("x", 4), VariableSpec::even("y", 4)], &["x^2", "y^2"])?,
                    Some(ConstraintSet::new(vec![diff2(0, 1), diff2(1, 1)])),
                    "extvir:pair",
                    "Vir(2,5) x Vir(2,5): C[x,y]/<x^2, y^2>",
                ),
                ExtVirKind::UvSum => (
                    vars_and_rels(
                        vec![VariableSpec::even("u", 4), VariableSpec::even("v", 4)],
                        &["u * v", "u^2 + v^2", "u^3", "v^3"],
                    )?,
                    None,
                    "extvir:pair",
                    "Vir(3,10) extended by weight 2: C[u,v]/<uv, u^2 + v^2, u^3, v^3>",
                ),
                ExtVirKind::UvMixed => (
                    vars_and_rels(
                        vec![VariableSpec::even("u", 4), VariableSpec::even("v", 4)],
                        &["u^2", "v^3", "u * v"],
                    )?,
                    Some(ConstraintSet::new(vec![
                        diff2(0, 1),
                        diff2(1, 2),
                        Constraint::Boundary { var: 0, others: vec![1] },
                    ])),
                    "extvir:triple",
                    "C[u,v]/<u^2, v^3, uv>",
                ),
            };
            model("extended-virasoro", summary.to_string(), spec, Some(character.into()), IsoConsistent, 32, spanning)
        }
        ModelId::PositiveLattice(a) => {
            let a = *a;
            range(a >= 1, || format!("poslat needs a >= 1, got {a}"))?;
            let x = if a % 2 == 1 { VariableSpec::odd("x", a) } else { VariableSpec::even("x", a) };
            let spec = vars_and_rels(vec![x], &["x^2"])?;
            let spanning = if a % 2 == 0 { vec![diff2(0, 1)] } else { vec![] };
            model(
                "positive-lattice",
                format!("principal subspace of Z alpha with <alpha,alpha> = {a}"),
                spec,
                Some(format!("poslat:{a}")),
                if a <= 2 { IsoConsistent } else { Mismatch },
                if a <= 2 { 40 } else { 24 },
                Some(ConstraintSet::new(spanning)),
            )
        }
        ModelId::FreeFermion => model(
            "fermion",
            "free fermion: C[psi], psi odd of weight 1/2".to_string(),
            vars_and_rels(vec![VariableSpec::odd("psi", 1)], &[])?,
            Some("poslat:1".into()),
            IsoConsistent,
            40,
            Some(ConstraintSet::default()),
        ),
        ModelId::Custom(k) => return Err(ModelError::UnknownModel(k.clone())),
    })
}

fn graph_model(key: &str, shape: &GraphShape) -> Result<Model, ModelError> {
    match shape {
        GraphShape::Path(k) => range(*k >= 1, || format!("path graphs need k >= 1, got {k}"))?,
        GraphShape::Cycle(k) => range(*k >= 3, || format!("cycle graphs need k >= 3, got {k}"))?,
        GraphShape::Adjacency(_) => {}
    }
    let adj = shape.adjacency();
    let k = adj.len();
    range(k >= 1 && adj.iter().all(|r| r.len() == k), || "adjacency must be square and nonempty".into())?;
    range((0..k).all(|i| (0..k).all(|j| adj[i][j] == adj[j][i])), || "adjacency must be symmetric".into())?;
    let vars: Vec<VariableSpec> = (0..k)
        .map(|i| {
            let name = format!("x{}", i + 1);
            if adj[i][i] {
                VariableSpec::odd(&name, 3)
            } else {
                VariableSpec::even(&name, 2)
            }
        })
        .collect();
    let mut rels = Vec::new();
    for i in 0..k {
        for j in i..k {
            if adj[i][j] {
                rels.push(format!("x{} * x{}", i + 1, j + 1));
            }
        }
    }
    let rel_refs: Vec<&str> = rels.iter().map(String::as_str).collect();
    let spec = vars_and_rels(vars, &rel_refs)?;
    let mut cs = Vec::new();
    for i in 0..k {
        let others: Vec<usize> = (i + 1..k).filter(|&j| adj[i][j]).collect();
        if !others.is_empty() {
            cs.push(Constraint::Boundary { var: i, others });
        }
    }
    let character = match shape {
        GraphShape::Path(k) => format!("master:A{k}"),
        GraphShape::Cycle(k) => format!("master2:C{k}"),
        GraphShape::Adjacency(a) => {
            let rows: Vec<String> = a.iter().map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect()).collect();
            format!("graphsum:{}", rows.join(","))
        }
    };
    let maxdeg2 = match k {
        1..=2 => 30,
        3..=4 => 20,
        _ => 16,
    };
    Ok(Model {
        key: key.to_string(),
        topic: "graph".into(),
        summary: format!("graph algebra with {k} vertices and {} edges", rels.len()),
        spec,
        character: Some(character),
        expected: Expectation::IsoConsistent,
        default_maxdeg2: maxdeg2,
        spanning: Some(ConstraintSet::new(cs)),
    })
}

/// Keys of every built-in model, in listing order.
pub fn builtin_keys() -> Vec<String> {
    let mut keys: Vec<String> = vec![
        "lattice:1", "lattice:2", "lattice:3", "n2_c1:bare", "n2_c1:ab", "n2_c1:abc", "sl2p:1", "sl2p:2", "sl2p:3",
        "vir:2", "vir:3", "n1:2", "n1:3", "n1odd:3,5", "n1odd:3,7", "graph:A1", "graph:A2", "graph:A3", "graph:A4",
        "graph:A5", "graph:A6", "graph:C3", "graph:C5", "graph:loop", "sln:2", "sln:3", "sln:4", "fs:2", "fs:3",
        "sl2aff:1", "sl2aff:2", "extvir:xy", "extvir:uv_sum", "extvir:uv_mixed", "poslat:1", "poslat:2", "poslat:3",
        "poslat:4", "fermion",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    keys.sort();
    keys
}

/// All built-in models.
pub fn registry() -> Vec<Model> {
    builtin_keys().iter().map(|k| lookup(k).expect("built-in models resolve")).collect()
}

pub fn lookup(key: &str) -> Result<Model, ModelError> {
    resolve(&key.parse()?)
}

pub fn presentation(id: &ModelId) -> Result<RingSpec<Rational>, ModelError> {
    Ok(resolve(id)?.spec)
}

pub fn character(id: &ModelId, maxdeg2: u32) -> Result<Series, ModelError> {
    resolve(id)?.character(maxdeg2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub degree2: u32,
    pub spanning: Option<String>,
    pub jet_dim: String,
    pub character: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub model: String,
    pub maxdeg2: u32,
    pub rows: Vec<ReportRow>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch_degree2: Option<u32>,
    pub expected: Expectation,
    pub matches_expectation: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Computes the jet Hilbert series and compares it with the character and
/// the spanning-set count.
pub fn verify(model: &Model, maxdeg2: u32, opts: &JetOptions) -> Result<VerificationReport, ModelError> {
    let jet = hilbert_series_with(&model.spec, maxdeg2, opts)?.coefficients;
    let character = match &model.character {
        Some(_) => Some(model.character(maxdeg2)?),
        None => None,
    };
    let spanning = model.spanning_count(maxdeg2);
    let mut notes = Vec::new();
    let mut rows = Vec::new();
    let mut mismatch = None;
    for (d, &j) in jet.iter().enumerate() {
        let d32 = d as u32;
        let jb = BigInt::from(j);
        let ch = character.as_ref().map(|c| c.coeff(d32));
        let sp = spanning.as_ref().map(|s| s.coeff(d32));
        if let Some(c) = &ch {
            if *c != jb && mismatch.is_none() {
                mismatch = Some(d32);
            }
            if *c > jb {
                notes.push(format!("character exceeds jet dimension at degree2 {d}"));
            }
        }
        if let Some(s) = &sp {
            if *s < jb {
                notes.push(format!("spanning count below jet dimension at degree2 {d}"));
            }
        }
        rows.push(ReportRow {
            degree2: d32,
            spanning: sp.map(|v| v.to_string()),
            jet_dim: j.to_string(),
            character: ch.map(|v| v.to_string()),
        });
    }
    let verdict = match (&character, mismatch) {
        (None, _) => Verdict::HsOnly,
        (Some(_), None) => Verdict::IsoConsistent,
        (Some(_), Some(_)) => Verdict::Mismatch,
    };
    Ok(VerificationReport {
        model: model.key.clone(),
        maxdeg2,
        rows,
        verdict,
        mismatch_degree2: mismatch,
        expected: model.expected,
        matches_expectation: verdict.satisfies(model.expected),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip() {
        for k in builtin_keys() {
            let id: ModelId = k.parse().unwrap();
            assert_eq!(id.to_string(), k);
        }
        assert_eq!("graph:1".parse::<ModelId>().unwrap().to_string(), "graph:loop");
        assert!("graph:0x".parse::<ModelId>().is_err());
        assert!("nope:1".parse::<ModelId>().is_err());
    }

    #[test]
    fn lattice_three_shape() {
        let spec = presentation(&ModelId::Lattice(3)).unwrap();
        assert_eq!(spec.variables.len(), 3);
        assert_eq!(spec.relations.len(), 5);
        assert!(spec.variables[0].parity.is_odd() && spec.variables[1].parity.is_odd());
        assert_eq!((spec.variables[0].weight2, spec.variables[2].weight2), (3, 2));
    }

    #[test]
    fn small_presentations() {
        let spec = presentation(&ModelId::Graph(GraphShape::Path(3))).unwrap();
        let shown: Vec<String> = spec.relations.iter().map(|r| spec.display(r)).collect();
        assert_eq!(shown, ["x1(-1) * x2(-1)", "x2(-1) * x3(-1)"]);
        let spec = presentation(&ModelId::FsType(2)).unwrap();
        let shown: Vec<String> = spec.relations.iter().map(|r| spec.display(r)).collect();
        assert_eq!(shown, ["x1(-1)^2", "x1(-1) * x2(-1)", "x2(-1)^2"]);
    }

    #[test]
    fn out_of_range_parameters() {
        assert!(matches!(lookup("vir:1"), Err(ModelError::OutOfRange(_))));
        assert!(matches!(lookup("n1:1"), Err(ModelError::OutOfRange(_))));
        assert!(matches!(lookup("n1odd:3,9"), Err(ModelError::OutOfRange(_))));
        assert!(matches!(lookup("graph:01,00"), Err(ModelError::UnknownModel(_))));
        assert!(matches!(lookup("sln:1"), Err(ModelError::OutOfRange(_))));
    }

    #[test]
    fn adjoint_orbit_ends_at_f_squared() {
        let gens = adjoint_generators_sl2(1);
        assert_eq!(gens.len(), 5);
        let spec = RingSpec::new(sl2_variables(), vec![]);
        assert_eq!(spec.display(&gens[0]), "e(-1)^2");
        assert_eq!(spec.display(&gens[4]), "24 * f(-1)^2");
        for g in &gens {
            assert_eq!(g.degree2().unwrap(), Some(4));
        }
    }

    #[test]
    fn central_index() {
        assert_eq!(n1_central_index(2, 8), 2);
        assert_eq!(n1_central_index(3, 5), 2);
        assert_eq!(n1_central_index(3, 7), 3);
    }
}
