//! Symbolic data model for the groups under study and the structural
//! computations every decision rule consumes: derived series, the
//! commutator-closed collection C(G), unimodularity and the
//! split/anisotropic/unipotent decomposition of commutative groups.
//!
//! Solvable groups are modelled as a torus acting on a unipotent part
//! through integer weights, with the unipotent bracket given by rational
//! structure constants on a fixed basis. Subgroups are only ever spans of
//! subsets of that basis; a commutator space that is not basis-graded is
//! reported as such instead of being approximated.

use crate::exact::{format_rational, parse_rational, rational_rank};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("commutator subspace is not a span of basis vectors: {0}")]
    NotBasisGraded(String),
    #[error("operation requires a commutative spec")]
    NotCommutative,
    #[error("operation requires variant {0}")]
    WrongVariant(&'static str),
    #[error("spec fails validation: {0:?}")]
    InvalidSpec(Vec<String>),
    #[error("malformed spec document: {0}")]
    Malformed(String),
}

/// Local-field descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDesc {
    ArchReal,
    ArchComplex,
    PAdic { p: u64 },
    LaurentFF { p: u64, n: u32 },
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldDesc {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDesc::ArchReal | FieldDesc::ArchComplex | FieldDesc::PAdic { .. } => 0,
            FieldDesc::LaurentFF { p, .. } => *p,
        }
    }

    pub fn is_archimedean(&self) -> bool {
        matches!(self, FieldDesc::ArchReal | FieldDesc::ArchComplex)
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        match self {
            FieldDesc::PAdic { p } if !is_prime(*p) => {
                Err(SpecError::Malformed(format!("{p} is not prime")))
            }
            FieldDesc::LaurentFF { p, n } => {
                if !is_prime(*p) {
                    Err(SpecError::Malformed(format!("{p} is not prime")))
                } else if *n == 0 {
                    Err(SpecError::Malformed("q = p^n needs n >= 1".into()))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Accepts "R", "C", "Q<p>" (e.g. "Q5" or "Q_5") and "F<p>" /
    /// "F<p>^<n>" (Laurent series field over F_q), with an optional
    /// "((t))" suffix on the latter.
    pub fn parse(s: &str) -> Result<FieldDesc, SpecError> {
        let t = s.trim();
        let desc = match t {
            "R" | "real" => FieldDesc::ArchReal,
            "C" | "complex" => FieldDesc::ArchComplex,
            _ => {
                if let Some(p) = t.strip_prefix('Q') {
                    let p = p.strip_prefix('_').unwrap_or(p);
                    let p: u64 = p
                        .parse()
                        .map_err(|_| SpecError::Malformed(format!("bad field {t}")))?;
                    FieldDesc::PAdic { p }
                } else if let Some(rest) = t.strip_prefix('F') {
                    let rest = rest.strip_prefix('_').unwrap_or(rest);
                    let rest = rest.trim_end_matches("((t))");
                    let (p_str, n_str) = rest.split_once('^').unwrap_or((rest, "1"));
                    let p: u64 = p_str
                        .parse()
                        .map_err(|_| SpecError::Malformed(format!("bad field {t}")))?;
                    let n: u32 = n_str
                        .parse()
                        .map_err(|_| SpecError::Malformed(format!("bad field {t}")))?;
                    FieldDesc::LaurentFF { p, n }
                } else {
                    return Err(SpecError::Malformed(format!("unknown field {t}")));
                }
            }
        };
        desc.validate()?;
        Ok(desc)
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::ArchReal => write!(f, "R"),
            FieldDesc::ArchComplex => write!(f, "C"),
            FieldDesc::PAdic { p } => write!(f, "Q{p}"),
            FieldDesc::LaurentFF { p, n } => {
                if *n == 1 {
                    write!(f, "F{p}((t))")
                } else {
                    write!(f, "F{p}^{n}((t))")
                }
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusPart {
    pub split_rank: usize,
    pub anisotropic_rank: usize,
}

/// One structure constant `[e_i, e_j] ∋ c * e_k` (1-based indices in the
/// serialized form, 0-based here).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: BigRational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnipotentPart {
    pub dim: usize,
    pub brackets: Vec<Bracket>,
    pub over_q: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightAction {
    pub weights: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemisimpleFlags {
    pub isotropic: bool,
    pub anisotropic_factor_present: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolvableData {
    pub torus: TorusPart,
    pub unipotent: UnipotentPart,
    pub action: WeightAction,
    pub commutator_over_q: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BorelAmbient {
    Simple,
    ProductOfSimples { count: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Semisimple(SemisimpleFlags),
    Solvable(SolvableData),
    Levi {
        semisimple: SemisimpleFlags,
        radical: SolvableData,
        is_semidirect_over_k: bool,
    },
    BorelOf(BorelAmbient),
}

impl SolvableData {
    pub fn total_dim(&self) -> usize {
        self.torus.split_rank + self.torus.anisotropic_rank + self.unipotent.dim
    }

    pub fn weight(&self, i: usize) -> &[i64] {
        &self.action.weights[i]
    }

    pub fn weight_is_zero(&self, i: usize) -> bool {
        self.action.weights[i].iter().all(|&w| w == 0)
    }

    pub fn has_zero_bracket(&self) -> bool {
        self.unipotent.brackets.iter().all(|b| b.coeff.is_zero())
    }

    pub fn is_commutative(&self) -> bool {
        self.has_zero_bracket() && (0..self.unipotent.dim).all(|i| self.weight_is_zero(i))
    }

    pub fn is_purely_unipotent(&self) -> bool {
        self.torus.split_rank == 0 && self.torus.anisotropic_rank == 0
    }

    /// Dense structure-constant table: `c[i][j][k]`, antisymmetrized from
    /// the stored bracket list. Conflicting duplicate entries are reported
    /// by `validate`; here the last one wins.
    pub fn bracket_table(&self) -> Vec<Vec<Vec<BigRational>>> {
        let n = self.unipotent.dim;
        let mut c = vec![vec![vec![BigRational::zero(); n]; n]; n];
        for b in &self.unipotent.brackets {
            if b.i < n && b.j < n && b.k < n {
                c[b.i][b.j][b.k] = b.coeff.clone();
                c[b.j][b.i][b.k] = -b.coeff.clone();
            }
        }
        c
    }
}

/// A subgroup presented as a basis span (of the unipotent part) or one of
/// the structural tags.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HandleKind {
    Whole,
    Torus,
    Span { basis: BTreeSet<usize> },
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubgroupHandle {
    pub kind: HandleKind,
    pub dim: usize,
}

impl SubgroupHandle {
    pub fn trivial() -> Self {
        SubgroupHandle {
            kind: HandleKind::Trivial,
            dim: 0,
        }
    }

    pub fn span(basis: BTreeSet<usize>) -> Self {
        let dim = basis.len();
        if dim == 0 {
            Self::trivial()
        } else {
            SubgroupHandle {
                kind: HandleKind::Span { basis },
                dim,
            }
        }
    }

    pub fn whole(spec: &SolvableData) -> Self {
        SubgroupHandle {
            kind: HandleKind::Whole,
            dim: spec.total_dim(),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn validate_solvable(s: &SolvableData, out: &mut Vec<String>) {
    let n = s.unipotent.dim;
    let m = s.torus.split_rank;
    if s.action.weights.len() != n {
        out.push(format!(
            "weight list length {} does not match unipotent dim {}",
            s.action.weights.len(),
            n
        ));
        return;
    }
    for (i, w) in s.action.weights.iter().enumerate() {
        if w.len() != m {
            out.push(format!(
                "weight vector for e_{} has length {}, split rank is {}",
                i + 1,
                w.len(),
                m
            ));
            return;
        }
    }
    for b in &s.unipotent.brackets {
        if b.i >= n || b.j >= n || b.k >= n {
            out.push(format!(
                "bracket index out of range: [{},{},{}] with dim {}",
                b.i + 1,
                b.j + 1,
                b.k + 1,
                n
            ));
            return;
        }
        if b.i == b.j && !b.coeff.is_zero() {
            out.push(format!("antisymmetry: c_{{{0}{0}}} must vanish", b.i + 1));
        }
    }
    // duplicate / conflicting entries
    for a in &s.unipotent.brackets {
        for b in &s.unipotent.brackets {
            if a.i == b.j && a.j == b.i && a.k == b.k && a.coeff != -b.coeff.clone() {
                out.push(format!(
                    "antisymmetry: c_{{{},{}}}^{} = {} but c_{{{},{}}}^{} = {}",
                    a.i + 1,
                    a.j + 1,
                    a.k + 1,
                    format_rational(&a.coeff),
                    b.i + 1,
                    b.j + 1,
                    b.k + 1,
                    format_rational(&b.coeff)
                ));
            }
        }
    }
    let c = s.bracket_table();
    // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in 0..n {
                    let mut sum = BigRational::zero();
                    for mm in 0..n {
                        sum += &c[i][j][mm] * &c[mm][k][l];
                        sum += &c[j][k][mm] * &c[mm][i][l];
                        sum += &c[k][i][mm] * &c[mm][j][l];
                    }
                    if !sum.is_zero() {
                        out.push(format!(
                            "Jacobi identity fails on (e_{},e_{},e_{}) in coordinate e_{}",
                            i + 1,
                            j + 1,
                            k + 1,
                            l + 1
                        ));
                    }
                }
            }
        }
    }
    // nilpotency of the bracket: lower central series must reach zero
    'nilpotency: {
        let mut current: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut v = vec![BigRational::zero(); n];
                v[i] = BigRational::from_integer(1.into());
                v
            })
            .collect();
        let mut dim = rational_rank(&current);
        let mut steps = 0;
        while dim > 0 && steps <= n {
            let mut next: Vec<Vec<BigRational>> = Vec::new();
            for v in &current {
                for j in 0..n {
                    // [v, e_j]
                    let mut w = vec![BigRational::zero(); n];
                    let mut nonzero = false;
                    for i in 0..n {
                        if v[i].is_zero() {
                            continue;
                        }
                        for (kk, wk) in w.iter_mut().enumerate() {
                            if !c[i][j][kk].is_zero() {
                                *wk += &v[i] * &c[i][j][kk];
                                nonzero = true;
                            }
                        }
                    }
                    if nonzero {
                        next.push(w);
                    }
                }
            }
            let next_dim = rational_rank(&next);
            if next_dim == 0 {
                break 'nilpotency; // nilpotent within budget
            }
            if next_dim >= dim {
                out.push("bracket is not nilpotent: lower central series stalls".into());
                break 'nilpotency;
            }
            current = next;
            dim = next_dim;
            steps += 1;
        }
        if dim > 0 && steps > n {
            out.push("bracket is not nilpotent within dim steps".into());
        }
    }
    // equivariance: nonzero c_{ij}^k forces w_k = w_i + w_j
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if c[i][j][k].is_zero() {
                    continue;
                }
                let sum: Vec<i64> = s
                    .weight(i)
                    .iter()
                    .zip(s.weight(j))
                    .map(|(a, b)| a + b)
                    .collect();
                if sum != s.weight(k) {
                    out.push(format!(
                        "equivariance: w_{} = {:?} but w_{} + w_{} = {:?}",
                        k + 1,
                        s.weight(k),
                        i + 1,
                        j + 1,
                        sum
                    ));
                }
            }
        }
    }
}

/// Reports every violated invariant; an empty report means well-formed.
pub fn validate_spec(spec: &GroupSpec) -> ValidationReport {
    let mut violations = Vec::new();
    match spec {
        GroupSpec::Solvable(s) => validate_solvable(s, &mut violations),
        GroupSpec::Levi { radical, .. } => validate_solvable(radical, &mut violations),
        GroupSpec::Semisimple(_) | GroupSpec::BorelOf(_) => {}
    }
    ValidationReport { violations }
}

/// Commutator space of two handles inside a solvable spec, as a basis
/// span. Fails when the space spanned by the generating vectors is not a
/// coordinate subspace.
fn commutator_handle(
    s: &SolvableData,
    a: &SubgroupHandle,
    b: &SubgroupHandle,
) -> Result<SubgroupHandle, SpecError> {
    let n = s.unipotent.dim;
    let c = s.bracket_table();
    let indices = |h: &SubgroupHandle| -> Option<BTreeSet<usize>> {
        match &h.kind {
            HandleKind::Whole => Some((0..n).collect()),
            HandleKind::Torus => Some(BTreeSet::new()),
            HandleKind::Span { basis } => Some(basis.clone()),
            HandleKind::Trivial => None,
        }
    };
    let (Some(ia), Some(ib)) = (indices(a), indices(b)) else {
        return Ok(SubgroupHandle::trivial());
    };
    let torus_in_a = matches!(a.kind, HandleKind::Whole | HandleKind::Torus)
        && s.torus.split_rank > 0;
    let torus_in_b = matches!(b.kind, HandleKind::Whole | HandleKind::Torus)
        && s.torus.split_rank > 0;

    let mut vectors: Vec<Vec<BigRational>> = Vec::new();
    // torus conjugation contributes every basis vector of nonzero weight
    if torus_in_a {
        for &j in &ib {
            if !s.weight_is_zero(j) {
                let mut v = vec![BigRational::zero(); n];
                v[j] = BigRational::from_integer(1.into());
                vectors.push(v);
            }
        }
    }
    if torus_in_b {
        for &i in &ia {
            if !s.weight_is_zero(i) {
                let mut v = vec![BigRational::zero(); n];
                v[i] = BigRational::from_integer(1.into());
                vectors.push(v);
            }
        }
    }
    for &i in &ia {
        for &j in &ib {
            let mut v = vec![BigRational::zero(); n];
            let mut nonzero = false;
            for (kk, vk) in v.iter_mut().enumerate() {
                if !c[i][j][kk].is_zero() {
                    *vk = c[i][j][kk].clone();
                    nonzero = true;
                }
            }
            if nonzero {
                vectors.push(v);
            }
        }
    }
    if vectors.is_empty() {
        return Ok(SubgroupHandle::trivial());
    }
    let support: BTreeSet<usize> = vectors
        .iter()
        .flat_map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, _)| i)
        })
        .collect();
    let rank = rational_rank(&vectors);
    if rank != support.len() {
        return Err(SpecError::NotBasisGraded(format!(
            "commutator span has rank {} on support of size {}",
            rank,
            support.len()
        )));
    }
    Ok(SubgroupHandle::span(support))
}

/// Derived series G ⊇ G' ⊇ G'' ⊇ … down to the trivial group.
pub fn derived_series(spec: &GroupSpec) -> Result<Vec<SubgroupHandle>, SpecError> {
    let s = solvable_of(spec)?;
    let mut series = vec![SubgroupHandle::whole(s)];
    let mut guard = 0;
    loop {
        let prev = series.last().unwrap().clone();
        if prev.kind == HandleKind::Trivial {
            break;
        }
        let next = commutator_handle(s, &prev, &prev)?;
        if next == prev {
            // stalls above zero only on malformed input; report rather than loop
            return Err(SpecError::InvalidSpec(vec![
                "derived series does not terminate".into(),
            ]));
        }
        series.push(next);
        guard += 1;
        if guard > s.total_dim() + 2 {
            return Err(SpecError::InvalidSpec(vec![
                "derived series exceeds dimension budget".into(),
            ]));
        }
    }
    Ok(series)
}

/// Smallest collection of subgroups containing G and closed under mutual
/// commutators.
pub fn cgroups_closure(spec: &GroupSpec) -> Result<BTreeSet<SubgroupHandle>, SpecError> {
    let s = solvable_of(spec)?;
    let mut set: BTreeSet<SubgroupHandle> = BTreeSet::new();
    set.insert(SubgroupHandle::whole(s));
    loop {
        let mut added = false;
        let snapshot: Vec<SubgroupHandle> = set.iter().cloned().collect();
        for a in &snapshot {
            for b in &snapshot {
                let com = commutator_handle(s, a, b)?;
                if set.insert(com) {
                    added = true;
                }
            }
        }
        if !added {
            return Ok(set);
        }
    }
}

/// Trace of the adjoint torus action vanishes identically: for each torus
/// coordinate the weights sum to zero.
pub fn is_unimodular(spec: &GroupSpec) -> Result<bool, SpecError> {
    let s = solvable_of(spec)?;
    let m = s.torus.split_rank;
    for coord in 0..m {
        let sum: i64 = s.action.weights.iter().map(|w| w[coord]).sum();
        if sum != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// (dim G_i, dim G_c, dim G_u) for a commutative solvable spec.
pub fn decomposition_dims(spec: &GroupSpec) -> Result<(usize, usize, usize), SpecError> {
    let s = solvable_of(spec)?;
    if !s.is_commutative() {
        return Err(SpecError::NotCommutative);
    }
    Ok((s.torus.split_rank, s.torus.anisotropic_rank, s.unipotent.dim))
}

pub fn solvable_of(spec: &GroupSpec) -> Result<&SolvableData, SpecError> {
    match spec {
        GroupSpec::Solvable(s) => Ok(s),
        GroupSpec::Levi { radical, .. } => Ok(radical),
        _ => Err(SpecError::WrongVariant("solvable")),
    }
}

// ---------------------------------------------------------------------------
// JSON document form
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct UnipotentDoc {
    dim: usize,
    #[serde(default)]
    brackets: Vec<(usize, usize, usize, String)>,
    #[serde(rename = "over_Q", default)]
    over_q: bool,
}

#[derive(Serialize, Deserialize, Default)]
struct FlagsDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    isotropic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    anisotropic_factor_present: Option<bool>,
    #[serde(rename = "commutator_over_Q", skip_serializing_if = "Option::is_none")]
    commutator_over_q: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    is_semidirect_over_k: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ambient: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ambient_count: Option<u32>,
}

/// On-disk shape of a group spec; see `schemas/group_spec.schema.json`.
#[derive(Serialize, Deserialize)]
pub struct SpecDoc {
    variant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    torus: Option<TorusPart>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unipotent: Option<UnipotentDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    flags: FlagsDoc,
}

fn solvable_to_doc(s: &SolvableData) -> (TorusPart, UnipotentDoc, Vec<Vec<i64>>) {
    let brackets = s
        .unipotent
        .brackets
        .iter()
        .map(|b| (b.i + 1, b.j + 1, b.k + 1, format_rational(&b.coeff)))
        .collect();
    (
        s.torus.clone(),
        UnipotentDoc {
            dim: s.unipotent.dim,
            brackets,
            over_q: s.unipotent.over_q,
        },
        s.action.weights.clone(),
    )
}

fn solvable_from_doc(
    torus: Option<TorusPart>,
    unip: Option<UnipotentDoc>,
    weights: Option<Vec<Vec<i64>>>,
    commutator_over_q: bool,
) -> Result<SolvableData, SpecError> {
    let torus = torus.unwrap_or_default();
    let unip = unip.unwrap_or(UnipotentDoc {
        dim: 0,
        brackets: vec![],
        over_q: true,
    });
    let mut brackets = Vec::new();
    for (i, j, k, coeff) in &unip.brackets {
        if *i == 0 || *j == 0 || *k == 0 {
            return Err(SpecError::Malformed(
                "bracket indices are 1-based, got 0".into(),
            ));
        }
        let coeff = parse_rational(coeff)
            .ok_or_else(|| SpecError::Malformed(format!("bad rational {coeff:?}")))?;
        brackets.push(Bracket {
            i: i - 1,
            j: j - 1,
            k: k - 1,
            coeff,
        });
    }
    let dim = unip.dim;
    let weights = weights.unwrap_or_else(|| vec![vec![0; torus.split_rank]; dim]);
    Ok(SolvableData {
        torus,
        unipotent: UnipotentPart {
            dim,
            brackets,
            over_q: unip.over_q,
        },
        action: WeightAction { weights },
        commutator_over_q,
    })
}

impl GroupSpec {
    pub fn to_doc(&self) -> SpecDoc {
        match self {
            GroupSpec::Semisimple(f) => SpecDoc {
                variant: "semisimple".into(),
                torus: None,
                unipotent: None,
                weights: None,
                flags: FlagsDoc {
                    isotropic: Some(f.isotropic),
                    anisotropic_factor_present: Some(f.anisotropic_factor_present),
                    ..Default::default()
                },
            },
            GroupSpec::Solvable(s) => {
                let (torus, unip, weights) = solvable_to_doc(s);
                SpecDoc {
                    variant: "solvable".into(),
                    torus: Some(torus),
                    unipotent: Some(unip),
                    weights: Some(weights),
                    flags: FlagsDoc {
                        commutator_over_q: Some(s.commutator_over_q),
                        ..Default::default()
                    },
                }
            }
            GroupSpec::Levi {
                semisimple,
                radical,
                is_semidirect_over_k,
            } => {
                let (torus, unip, weights) = solvable_to_doc(radical);
                SpecDoc {
                    variant: "levi".into(),
                    torus: Some(torus),
                    unipotent: Some(unip),
                    weights: Some(weights),
                    flags: FlagsDoc {
                        isotropic: Some(semisimple.isotropic),
                        anisotropic_factor_present: Some(semisimple.anisotropic_factor_present),
                        commutator_over_q: Some(radical.commutator_over_q),
                        is_semidirect_over_k: Some(*is_semidirect_over_k),
                        ..Default::default()
                    },
                }
            }
            GroupSpec::BorelOf(ambient) => {
                let (name, count) = match ambient {
                    BorelAmbient::Simple => ("simple", None),
                    BorelAmbient::ProductOfSimples { count } => {
                        ("product_of_simples", Some(*count))
                    }
                };
                SpecDoc {
                    variant: "borel_of".into(),
                    torus: None,
                    unipotent: None,
                    weights: None,
                    flags: FlagsDoc {
                        ambient: Some(name.into()),
                        ambient_count: count,
                        ..Default::default()
                    },
                }
            }
        }
    }

    pub fn from_doc(doc: SpecDoc) -> Result<GroupSpec, SpecError> {
        match doc.variant.as_str() {
            "semisimple" => Ok(GroupSpec::Semisimple(SemisimpleFlags {
                isotropic: doc.flags.isotropic.unwrap_or(false),
                anisotropic_factor_present: doc
                    .flags
                    .anisotropic_factor_present
                    .unwrap_or(false),
            })),
            "solvable" => Ok(GroupSpec::Solvable(solvable_from_doc(
                doc.torus,
                doc.unipotent,
                doc.weights,
                doc.flags.commutator_over_q.unwrap_or(true),
            )?)),
            "levi" => Ok(GroupSpec::Levi {
                semisimple: SemisimpleFlags {
                    isotropic: doc.flags.isotropic.unwrap_or(false),
                    anisotropic_factor_present: doc
                        .flags
                        .anisotropic_factor_present
                        .unwrap_or(false),
                },
                radical: solvable_from_doc(
                    doc.torus,
                    doc.unipotent,
                    doc.weights,
                    doc.flags.commutator_over_q.unwrap_or(true),
                )?,
                is_semidirect_over_k: doc.flags.is_semidirect_over_k.unwrap_or(false),
            }),
            "borel_of" => {
                let ambient = match doc.flags.ambient.as_deref() {
                    Some("simple") | None => BorelAmbient::Simple,
                    Some("product_of_simples") => BorelAmbient::ProductOfSimples {
                        count: doc.flags.ambient_count.unwrap_or(2),
                    },
                    Some(other) => {
                        return Err(SpecError::Malformed(format!("unknown ambient {other}")))
                    }
                };
                Ok(GroupSpec::BorelOf(ambient))
            }
            other => Err(SpecError::Malformed(format!("unknown variant {other}"))),
        }
    }

    /// Parse a spec document, checking the JSON shape against the shipped
    /// schema's constraints before structural deserialization.
    pub fn from_json(text: &str) -> Result<GroupSpec, SpecError> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| SpecError::Malformed(format!("not valid JSON: {e}")))?;
        check_doc_shape(&value)?;
        let doc: SpecDoc = serde_json::from_value(value)
            .map_err(|e| SpecError::Malformed(e.to_string()))?;
        GroupSpec::from_doc(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("spec serialization")
    }
}

/// Structural checks mirroring `schemas/group_spec.schema.json`.
fn check_doc_shape(v: &serde_json::Value) -> Result<(), SpecError> {
    let obj = v
        .as_object()
        .ok_or_else(|| SpecError::Malformed("spec document must be an object".into()))?;
    let variant = obj
        .get("variant")
        .and_then(|x| x.as_str())
        .ok_or_else(|| SpecError::Malformed("missing string field 'variant'".into()))?;
    if !["semisimple", "solvable", "levi", "borel_of"].contains(&variant) {
        return Err(SpecError::Malformed(format!("unknown variant {variant}")));
    }
    if let Some(u) = obj.get("unipotent") {
        let u = u
            .as_object()
            .ok_or_else(|| SpecError::Malformed("'unipotent' must be an object".into()))?;
        if !u.get("dim").map(|d| d.is_u64()).unwrap_or(false) {
            return Err(SpecError::Malformed(
                "'unipotent.dim' must be a non-negative integer".into(),
            ));
        }
        if let Some(br) = u.get("brackets") {
            let arr = br
                .as_array()
                .ok_or_else(|| SpecError::Malformed("'brackets' must be an array".into()))?;
            for entry in arr {
                let tuple = entry.as_array().filter(|t| t.len() == 4).ok_or_else(|| {
                    SpecError::Malformed("each bracket must be [i,j,k,\"num/den\"]".into())
                })?;
                if !(tuple[0].is_u64() && tuple[1].is_u64() && tuple[2].is_u64()) {
                    return Err(SpecError::Malformed("bracket indices must be integers".into()));
                }
                if !tuple[3].is_string() {
                    return Err(SpecError::Malformed(
                        "bracket coefficient must be a \"num/den\" string".into(),
                    ));
                }
            }
        }
    }
    if let Some(w) = obj.get("weights") {
        let arr = w
            .as_array()
            .ok_or_else(|| SpecError::Malformed("'weights' must be an array".into()))?;
        for row in arr {
            let row = row
                .as_array()
                .ok_or_else(|| SpecError::Malformed("each weight must be an array".into()))?;
            if row.iter().any(|x| !x.is_i64()) {
                return Err(SpecError::Malformed("weights must be integers".into()));
            }
        }
    }
    Ok(())
}

/// Ready-made specs for the worked examples; used by the gallery, the
/// shipped `specs/` files and the test suites.
pub mod fixtures {
    use super::*;
    use crate::exact::rat_int;

    /// Heisenberg with [e1,e2] = e3 and weights w1, w2, w3 (one torus
    /// coordinate).
    pub fn heisenberg(w1: i64, w2: i64, w3: i64) -> GroupSpec {
        GroupSpec::Solvable(SolvableData {
            torus: TorusPart {
                split_rank: 1,
                anisotropic_rank: 0,
            },
            unipotent: UnipotentPart {
                dim: 3,
                brackets: vec![Bracket {
                    i: 0,
                    j: 1,
                    k: 2,
                    coeff: rat_int(1),
                }],
                over_q: true,
            },
            action: WeightAction {
                weights: vec![vec![w1], vec![w2], vec![w3]],
            },
            commutator_over_q: true,
        })
    }

    /// Heisenberg as a purely unipotent group (no torus factor).
    pub fn heisenberg_unipotent() -> GroupSpec {
        GroupSpec::Solvable(SolvableData {
            torus: TorusPart {
                split_rank: 0,
                anisotropic_rank: 0,
            },
            unipotent: UnipotentPart {
                dim: 3,
                brackets: vec![Bracket {
                    i: 0,
                    j: 1,
                    k: 2,
                    coeff: rat_int(1),
                }],
                over_q: true,
            },
            action: WeightAction {
                weights: vec![vec![], vec![], vec![]],
            },
            commutator_over_q: true,
        })
    }

    /// The 5x5 upper-triangular counterexample: weights (-4, 1, 2, 1) on
    /// (w, x, z, y) with [x, y] = z.
    pub fn sec8_spec() -> GroupSpec {
        GroupSpec::Solvable(SolvableData {
            torus: TorusPart {
                split_rank: 1,
                anisotropic_rank: 0,
            },
            unipotent: UnipotentPart {
                dim: 4,
                // basis order: e1=w, e2=x, e3=z, e4=y ; [x,y]=z
                brackets: vec![Bracket {
                    i: 1,
                    j: 3,
                    k: 2,
                    coeff: rat_int(1),
                }],
                over_q: true,
            },
            action: WeightAction {
                weights: vec![vec![-4], vec![1], vec![2], vec![1]],
            },
            commutator_over_q: true,
        })
    }

    pub fn abelian(split: usize, aniso: usize, unip: usize) -> GroupSpec {
        GroupSpec::Solvable(SolvableData {
            torus: TorusPart {
                split_rank: split,
                anisotropic_rank: aniso,
            },
            unipotent: UnipotentPart {
                dim: unip,
                brackets: vec![],
                over_q: true,
            },
            action: WeightAction {
                weights: vec![vec![0; split]; unip],
            },
            commutator_over_q: true,
        })
    }

    /// Torus-on-vector-group spec (zero bracket) with the given weights
    /// (single torus coordinate).
    pub fn metabelian(weights: &[i64]) -> GroupSpec {
        GroupSpec::Solvable(SolvableData {
            torus: TorusPart {
                split_rank: 1,
                anisotropic_rank: 0,
            },
            unipotent: UnipotentPart {
                dim: weights.len(),
                brackets: vec![],
                over_q: true,
            },
            action: WeightAction {
                weights: weights.iter().map(|&w| vec![w]).collect(),
            },
            commutator_over_q: true,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::exact::rat_int;

    fn span_of(handles: &[SubgroupHandle], idx: &[usize]) -> bool {
        let want: BTreeSet<usize> = idx.iter().copied().collect();
        handles
            .iter()
            .any(|h| matches!(&h.kind, HandleKind::Span { basis } if *basis == want))
    }

    #[test]
    fn abelian_spec_is_valid() {
        assert!(validate_spec(&abelian(2, 0, 3)).is_valid());
    }

    #[test]
    fn heisenberg_valid_and_graded() {
        let spec = heisenberg(1, 1, 2);
        assert!(validate_spec(&spec).is_valid());
        let series = derived_series(&spec).unwrap();
        // G, G' = span{e1,e2,e3}, G'' = span{e3}, trivial
        assert_eq!(series.len(), 4);
        assert_eq!(series[1].dim, 3);
        assert_eq!(series[2].dim, 1);
        assert!(span_of(&series, &[2]));
        assert_eq!(series[3].kind, HandleKind::Trivial);
    }

    #[test]
    fn heisenberg_bad_weight_fails_equivariance() {
        let spec = heisenberg(1, 1, 3);
        let report = validate_spec(&spec);
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.contains("equivariance")));
    }

    #[test]
    fn sec8_derived_series_matches_paper() {
        let spec = sec8_spec();
        assert!(validate_spec(&spec).is_valid());
        let series = derived_series(&spec).unwrap();
        assert_eq!(series[1].dim, 4); // G' is the full unipotent radical
        assert_eq!(series[2].dim, 1); // G'' = span{z}
        assert!(span_of(&series, &[2]));
        assert_eq!(series.last().unwrap().kind, HandleKind::Trivial);
    }

    #[test]
    fn sec8_closure_contains_onedim_noncentral() {
        let spec = sec8_spec();
        let closure = cgroups_closure(&spec).unwrap();
        let z: BTreeSet<usize> = [2].into_iter().collect();
        assert!(closure
            .iter()
            .any(|h| matches!(&h.kind, HandleKind::Span { basis } if *basis == z)));
    }

    #[test]
    fn abelian_closure_is_minimal() {
        let spec = abelian(0, 0, 3);
        let closure = cgroups_closure(&spec).unwrap();
        assert_eq!(closure.len(), 2); // G and trivial
        let series = derived_series(&spec).unwrap();
        assert_eq!(series.len(), 2);
        assert_eq!(series[1].kind, HandleKind::Trivial);
    }

    #[test]
    fn heisenberg_closure() {
        let closure = cgroups_closure(&heisenberg(1, 1, 2)).unwrap();
        // {G, span{e1,e2,e3}, span{e3}, trivial}
        assert_eq!(closure.len(), 4);
    }

    #[test]
    fn unimodularity_examples() {
        assert!(is_unimodular(&metabelian(&[2, -1, -1])).unwrap());
        assert!(is_unimodular(&sec8_spec()).unwrap());
        assert!(!is_unimodular(&metabelian(&[1, 1])).unwrap());
    }

    #[test]
    fn unimodularity_invariances() {
        // permutation and global negation of weights
        assert!(is_unimodular(&metabelian(&[-1, 2, -1])).unwrap());
        assert!(is_unimodular(&metabelian(&[-2, 1, 1])).unwrap());
        assert!(!is_unimodular(&metabelian(&[-1, -1])).unwrap());
    }

    #[test]
    fn decomposition_requires_commutative() {
        assert_eq!(decomposition_dims(&abelian(2, 0, 1)).unwrap(), (2, 0, 1));
        assert_eq!(decomposition_dims(&abelian(0, 1, 0)).unwrap(), (0, 1, 0));
        assert!(matches!(
            decomposition_dims(&heisenberg(1, 1, 2)),
            Err(SpecError::NotCommutative)
        ));
    }

    #[test]
    fn closure_contains_derived_series() {
        for spec in [sec8_spec(), heisenberg(1, 1, 2), abelian(1, 0, 2)] {
            let closure = cgroups_closure(&spec).unwrap();
            for term in derived_series(&spec).unwrap() {
                assert!(closure.contains(&term), "missing {term:?}");
            }
        }
    }

    #[test]
    fn antisymmetry_violation_reported() {
        let mut spec = heisenberg(1, 1, 2);
        if let GroupSpec::Solvable(s) = &mut spec {
            s.unipotent.brackets.push(Bracket {
                i: 1,
                j: 0,
                k: 2,
                coeff: rat_int(1), // should be -1
            });
        }
        let report = validate_spec(&spec);
        assert!(report.violations.iter().any(|v| v.contains("antisymmetry")));
    }

    #[test]
    fn json_roundtrip() {
        let spec = sec8_spec();
        let text = spec.to_json();
        let back = GroupSpec::from_json(&text).unwrap();
        assert_eq!(spec, back);
    }

    #[test]
    fn json_shape_rejected() {
        assert!(GroupSpec::from_json("{\"variant\": 7}").is_err());
        assert!(GroupSpec::from_json(
            "{\"variant\":\"solvable\",\"unipotent\":{\"dim\":1,\"brackets\":[[1,1,1,5]]}}"
        )
        .is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!(FieldDesc::parse("R").unwrap(), FieldDesc::ArchReal);
        assert_eq!(FieldDesc::parse("Q5").unwrap(), FieldDesc::PAdic { p: 5 });
        assert_eq!(
            FieldDesc::parse("F2((t))").unwrap(),
            FieldDesc::LaurentFF { p: 2, n: 1 }
        );
        assert!(FieldDesc::parse("Q4").is_err());
        assert_eq!(FieldDesc::LaurentFF { p: 3, n: 2 }.characteristic(), 3);
    }
}
