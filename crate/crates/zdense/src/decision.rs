//! The decision engine: maps a (GroupSpec, FieldDesc) pair to a
//! three-valued Verdict by running the classification results as ordered
//! rules. Obstructions run before constructive rules; every definite
//! answer carries at least one citation, and necessary conditions are
//! never silently upgraded to sufficient ones.

use crate::group_spec::{
    cgroups_closure, is_unimodular, validate_spec, BorelAmbient, FieldDesc, GroupSpec, HandleKind,
    SolvableData, SpecError, UnipotentPart,
};
use crate::number_construct::construct::match_constructible_pattern;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Exists,
    NotExists,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition {
    pub name: String,
    pub pass: bool,
}

/// Constructive follow-up attached to an Exists verdict: what to feed
/// the construction/verification pipeline to materialize generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessRecipe {
    /// Run the number-field construction on this polynomial.
    NumberField { poly: String, cocompact: bool },
    /// Powers of a uniformizer-scaled diagonal element, one exponent per
    /// torus coordinate, translations from the unipotent coordinates.
    UniformizerPowers {
        split_rank: usize,
        unipotent_dim: usize,
    },
    /// The integer lattice in the rational structure-constant chart.
    IntegerLattice { dim: usize },
    /// Gaussian-integer lattice spanning the complex vector group.
    GaussianLattice { dim: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub citations: Vec<String>,
    pub conditions: Vec<Condition>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecipe>,
}

impl Verdict {
    fn exists(citations: &[&str]) -> Self {
        Verdict {
            status: Status::Exists,
            citations: citations.iter().map(|s| s.to_string()).collect(),
            conditions: vec![],
            notes: vec![],
            witness: None,
        }
    }

    fn not_exists(citations: &[&str]) -> Self {
        Verdict {
            status: Status::NotExists,
            citations: citations.iter().map(|s| s.to_string()).collect(),
            conditions: vec![],
            notes: vec![],
            witness: None,
        }
    }

    fn unknown() -> Self {
        Verdict {
            status: Status::Unknown,
            citations: vec![],
            conditions: vec![],
            notes: vec![],
            witness: None,
        }
    }

    fn cite(mut self, c: &str) -> Self {
        self.citations.push(c.to_string());
        self
    }

    fn cond(mut self, name: &str, pass: bool) -> Self {
        self.conditions.push(Condition {
            name: name.to_string(),
            pass,
        });
        self
    }

    fn note(mut self, n: &str) -> Self {
        self.notes.push(n.to_string());
        self
    }

    fn witness(mut self, w: WitnessRecipe) -> Self {
        self.witness = Some(w);
        self
    }

    /// CLI convention: 0 = Exists, 1 = NotExists, 2 = Unknown.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Exists => 0,
            Status::NotExists => 1,
            Status::Unknown => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DecisionConfig {
    /// Disable the repeated-weight generalization of the Example-5
    /// argument; only its exact (2,-1,-1) instance then yields NotExists.
    pub strict_paper: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ternary {
    True,
    False,
    Unknown,
}

/// Structural amenability (Lemma 1 equivalences): solvable groups and
/// groups with compact semisimple quotient are amenable; isotropic
/// semisimple quotients are not. Positive characteristic gets a definite
/// answer only in the solvable case.
pub fn is_amenable(spec: &GroupSpec, field: &FieldDesc) -> Ternary {
    let solvable = matches!(spec, GroupSpec::Solvable(_) | GroupSpec::BorelOf(_));
    if solvable {
        return Ternary::True;
    }
    if field.characteristic() != 0 {
        return Ternary::Unknown;
    }
    match spec {
        GroupSpec::Semisimple(f) => {
            if f.isotropic {
                Ternary::False
            } else {
                Ternary::True
            }
        }
        GroupSpec::Levi { semisimple, .. } => {
            if semisimple.isotropic {
                Ternary::False
            } else {
                Ternary::True
            }
        }
        _ => unreachable!("solvable variants handled above"),
    }
}

/// Top-level dispatch.
pub fn decide(
    spec: &GroupSpec,
    field: &FieldDesc,
    cfg: &DecisionConfig,
) -> Result<Verdict, SpecError> {
    field.validate()?;
    let report = validate_spec(spec);
    if !report.is_valid() {
        return Err(SpecError::InvalidSpec(report.violations));
    }
    if field.characteristic() != 0 {
        return Ok(Verdict::unknown()
            .cite("char>0 partial results")
            .cond("characteristic zero (general theory applies)", false)
            .cond("well-formed spec", true)
            .note(
                "positive characteristic is covered only by the worked examples \
                 (see the gallery subcommand); no general rule is stated",
            ));
    }
    match spec {
        GroupSpec::Semisimple(_) | GroupSpec::Levi { .. } => {
            decide_nonsolvable_char0(spec, field)
        }
        GroupSpec::BorelOf(ambient) => Ok(decide_borel(ambient, field)),
        GroupSpec::Solvable(sd) => decide_solvable(sd, field, cfg),
    }
}

/// Semisimple and Levi specs in characteristic zero: existence is
/// equivalent to the semisimple quotient being k-isotropic.
pub fn decide_nonsolvable_char0(
    spec: &GroupSpec,
    field: &FieldDesc,
) -> Result<Verdict, SpecError> {
    if field.characteristic() != 0 {
        return Err(SpecError::WrongVariant(
            "decide_nonsolvable_char0 requires characteristic zero".into(),
        ));
    }
    let (flags, has_radical) = match spec {
        GroupSpec::Semisimple(f) => (f, false),
        GroupSpec::Levi { semisimple, radical, .. } => (semisimple, radical.total_dim() > 0),
        _ => {
            return Err(SpecError::WrongVariant(
                "expected a Semisimple or Levi spec".into(),
            ))
        }
    };
    if flags.isotropic {
        Ok(Verdict::exists(&["Thm1", "ThmA"])
            .cond("G/R k-isotropic", true)
            .note("non-constructive: cites a pure existence theorem (arithmetic lattice)"))
    } else if has_radical {
        Ok(Verdict::not_exists(&["Thm1", "§5 Corollary"])
            .cond("G/R k-isotropic", false)
            .note("semisimple quotient compact but the group is not solvable"))
    } else {
        Ok(Verdict::not_exists(&["Thm1", "Lemma1"])
            .cond("G/R k-isotropic", false)
            .note("anisotropic semisimple: the k-points are compact, so discrete subgroups are finite"))
    }
}

fn decide_borel(ambient: &BorelAmbient, field: &FieldDesc) -> Verdict {
    match ambient {
        BorelAmbient::Simple => Verdict::not_exists(&["§6 Corollary", "Prop3"])
            .cond("ambient group simple", true)
            .note(
                "the maximal-root unipotent line is one-dimensional, noncentral, and lies in \
                 the commutator closure",
            ),
        BorelAmbient::ProductOfSimples { count: 2 } if *field == FieldDesc::ArchComplex => {
            Verdict::exists(&["§11"])
                .cond("ambient is a product of two simple factors", true)
                .witness(WitnessRecipe::NumberField {
                    poly: "x^3-x-1".into(),
                    cocompact: false,
                })
                .note(
                    "realized as the Borel group in SL2(C) x SL2(C) via the unit group of a \
                     cubic field with one real and one complex place (m = 2)",
                )
        }
        BorelAmbient::ProductOfSimples { count } => Verdict::unknown()
            .cond("ambient group simple (obstruction applies)", false)
            .note(&format!(
                "no rule for a Borel group in a product of {count} simple factors over {field}; \
                 only the two-factor complex case is worked out"
            )),
    }
}

fn decide_solvable(
    sd: &SolvableData,
    field: &FieldDesc,
    cfg: &DecisionConfig,
) -> Result<Verdict, SpecError> {
    match field {
        FieldDesc::PAdic { .. } => decide_padic_solvable(sd, field),
        FieldDesc::ArchReal => {
            if sd.is_commutative() {
                Ok(decide_commutative_arch(sd, false))
            } else if sd.is_purely_unipotent() {
                decide_unipotent_real(sd)
            } else {
                necessary_real_solvable(sd)
            }
        }
        FieldDesc::ArchComplex => {
            if sd.is_commutative() {
                Ok(decide_commutative_arch(sd, true))
            } else if sd.is_purely_unipotent() {
                decide_unipotent_complex_whole(sd)
            } else if is_metabelian_shape(sd) {
                decide_metabelian_complex(sd, cfg)
            } else {
                // the commutator-closure obstruction applies over any
                // local field of characteristic zero
                if let Some((idx, reason)) = obstruction_one_dim_noncentral_inner(sd)? {
                    return Ok(Verdict::not_exists(&["Prop3"])
                        .cond("no one-dimensional noncentral commutator subgroup", false)
                        .note(&format!(
                            "basis vector e{} spans a one-dimensional noncentral member of the \
                             commutator closure ({reason})",
                            idx + 1
                        )));
                }
                Ok(Verdict::unknown()
                    .cond("no one-dimensional noncentral commutator subgroup", true)
                    .note("no sufficient rule for this complex solvable shape"))
            }
        }
        FieldDesc::LaurentFF { .. } => Err(SpecError::WrongVariant(
            "solvable decision rules require characteristic zero".into(),
        )),
    }
}

/// Commutative groups over R or C: existence holds unless the group is
/// entirely an anisotropic (compact) torus.
fn decide_commutative_arch(sd: &SolvableData, complex: bool) -> Verdict {
    let not_all_compact = sd.torus.split_rank > 0 || sd.unipotent.dim > 0;
    if sd.total_dim() == 0 {
        return Verdict::not_exists(&["Thm2"])
            .cond("positive dimension", false)
            .note("zero-dimensional group");
    }
    if not_all_compact {
        let dim = sd.unipotent.dim;
        let v = Verdict::exists(&["Thm2"])
            .cond("G differs from its anisotropic part", true)
            .note("commutative case: integer powers in the split torus, a lattice in the vector part");
        if dim > 0 {
            if complex {
                v.witness(WitnessRecipe::GaussianLattice { dim })
            } else {
                v.witness(WitnessRecipe::IntegerLattice { dim })
            }
        } else {
            v
        }
    } else {
        Verdict::not_exists(&["Lemma1"])
            .cond("G differs from its anisotropic part", false)
            .note("compact torus: discrete subgroups are finite, never Zariski-dense")
    }
}

/// Solvable groups over Q_p: discrete subgroups are commutative, and in
/// the commutative case existence is the exact dimension predicate of
/// the p-adic classification.
pub fn decide_padic_solvable(sd: &SolvableData, field: &FieldDesc) -> Result<Verdict, SpecError> {
    if !matches!(field, FieldDesc::PAdic { .. }) {
        return Err(SpecError::WrongVariant(
            "decide_padic_solvable requires a p-adic field".into(),
        ));
    }
    if !sd.is_commutative() {
        return Ok(Verdict::not_exists(&["Prop5"])
            .cond("commutative", false)
            .note("any discrete subgroup of a p-adic solvable group is commutative, so a \
                   noncommutative group has no Zariski-dense one"));
    }
    let split = sd.torus.split_rank;
    let unip = sd.unipotent.dim;
    let not_compact = split > 0 || unip > 0;
    let dims_ok = split >= 1.max(unip);
    if not_compact && dims_ok {
        Ok(Verdict::exists(&["Prop8", "Thm4"])
            .cond("G differs from its anisotropic part", true)
            .cond("split rank >= max(1, dim U)", true)
            .witness(WitnessRecipe::UniformizerPowers {
                split_rank: split,
                unipotent_dim: unip,
            })
            .note("witness: powers of a single element with uniformizer-valued split-torus \
                   coordinates and unipotent translation coordinates"))
    } else {
        let mut verdict = Verdict::not_exists(&["Prop8"])
            .cond("G differs from its anisotropic part", not_compact)
            .cond("split rank >= max(1, dim U)", dims_ok);
        if split == 0 && unip > 0 {
            verdict = verdict.cite("Cor3").note(
                "a p-adic vector group contains no discrete subgroup other than the identity",
            );
        }
        Ok(verdict)
    }
}

/// Real unipotent groups: existence is equivalent to the group being
/// defined over Q; with rational structure constants this is the over_Q
/// flag on the group itself.
pub fn decide_unipotent_real(sd: &SolvableData) -> Result<Verdict, SpecError> {
    if !sd.is_purely_unipotent() {
        return Err(SpecError::WrongVariant(
            "decide_unipotent_real requires a purely unipotent spec".into(),
        ));
    }
    if sd.unipotent.over_q {
        Ok(Verdict::exists(&["Malcev"])
            .cond("defined over Q", true)
            .witness(WitnessRecipe::IntegerLattice {
                dim: sd.unipotent.dim,
            })
            .note("every such discrete Zariski-dense subgroup is cocompact"))
    } else {
        Ok(Verdict::unknown()
            .cond("rational structure constants", true)
            .cond("defined over Q", false)
            .note("the data model stores rational constants, so the group itself not being \
                   Q-defined cannot be expressed exactly; no rule fires"))
    }
}

fn decide_unipotent_complex_whole(sd: &SolvableData) -> Result<Verdict, SpecError> {
    if sd.unipotent.over_q {
        Ok(Verdict::exists(&["Malcev", "§7 Corollary"])
            .cond("Q-defined real form spans the complex Lie algebra", true)
            .witness(WitnessRecipe::IntegerLattice {
                dim: sd.unipotent.dim,
            })
            .note("the rational real form spans the complex Lie algebra, so its lattice is \
                   Zariski-dense"))
    } else {
        Ok(Verdict::unknown()
            .cond("rational structure constants", true)
            .cond("defined over Q", false)
            .note("no witnessing Q-defined real subgroup supplied"))
    }
}

/// The per-subgroup complex-unipotent criterion: a real form with
/// rational constants witnesses existence when its inclusion image spans
/// the ambient complex Lie algebra. Failure is never a proof of
/// non-existence (some other real form might work), so the negative
/// branch is Unknown.
pub fn decide_unipotent_complex(
    real_form: &UnipotentPart,
    inclusion: &[Vec<(BigRational, BigRational)>],
    ambient_dim: usize,
) -> Result<Verdict, SpecError> {
    if inclusion.len() != real_form.dim {
        return Err(SpecError::Malformed(format!(
            "inclusion has {} rows for a real form of dimension {}",
            inclusion.len(),
            real_form.dim
        )));
    }
    for row in inclusion {
        if row.len() != ambient_dim {
            return Err(SpecError::Malformed(format!(
                "inclusion row has length {} but ambient dimension is {ambient_dim}",
                row.len()
            )));
        }
    }
    let rows: Vec<Vec<crate::exact::QGauss>> = inclusion
        .iter()
        .map(|row| {
            row.iter()
                .map(|(re, im)| crate::exact::QGauss::new(re.clone(), im.clone()))
                .collect()
        })
        .collect();
    let rank = crate::exact::gaussian_rank(&rows);
    if rank == ambient_dim {
        Ok(Verdict::exists(&["Malcev", "§7 Corollary"])
            .cond("complex span of the real form is the whole Lie algebra", true)
            .note("rank computed exactly over the Gaussian rationals"))
    } else {
        Ok(Verdict::unknown()
            .cond("rational structure constants", true)
            .cond(
                "complex span of the real form is the whole Lie algebra",
                false,
            )
            .note(&format!(
                "this real form spans only a {rank}-dimensional complex subspace of the \
                 {ambient_dim}-dimensional ambient algebra; another real form might still work"
            )))
    }
}

/// Scan the commutator closure for a one-dimensional noncentral member;
/// such a subgroup obstructs discrete Zariski-dense subgroups.
pub fn obstruction_one_dim_noncentral(spec: &GroupSpec) -> Result<Option<String>, SpecError> {
    let sd = crate::group_spec::solvable_of(spec)?;
    Ok(obstruction_one_dim_noncentral_inner(sd)?
        .map(|(idx, reason)| format!("Prop3: span{{e{}}} is noncentral ({reason})", idx + 1)))
}

fn obstruction_one_dim_noncentral_inner(
    sd: &SolvableData,
) -> Result<Option<(usize, String)>, SpecError> {
    let closure = cgroups_closure(&GroupSpec::Solvable(sd.clone()))?;
    let table = sd.bracket_table();
    let n = sd.unipotent.dim;
    for handle in &closure {
        if handle.dim != 1 {
            continue;
        }
        let HandleKind::Span { basis } = &handle.kind else {
            continue;
        };
        let &b = basis.iter().next().expect("dim-1 span has one element");
        if !sd.weight_is_zero(b) {
            return Ok(Some((b, format!("torus weight {:?} is nonzero", sd.weight(b)))));
        }
        for j in 0..n {
            if table[b][j].iter().any(|c| !c.is_zero()) {
                return Ok(Some((b, format!("nonzero bracket with e{}", j + 1))));
            }
        }
    }
    Ok(None)
}

/// Necessary conditions for real solvable groups, cheapest first:
/// unimodularity, Q-definability of the commutator group, then the
/// commutator-closure obstruction. Passing all of them is not
/// sufficient, so the fall-through is Unknown.
pub fn necessary_real_solvable(sd: &SolvableData) -> Result<Verdict, SpecError> {
    let spec = GroupSpec::Solvable(sd.clone());
    let unimod = is_unimodular(&spec)?;
    if !unimod {
        return Ok(Verdict::not_exists(&["Prop7"])
            .cond("unimodular", false)
            .note("the adjoint weights do not sum to zero"));
    }
    if !sd.commutator_over_q {
        return Ok(Verdict::not_exists(&["Prop7"])
            .cond("unimodular", true)
            .cond("commutator group defined over Q", false));
    }
    if let Some((idx, reason)) = obstruction_one_dim_noncentral_inner(sd)? {
        return Ok(Verdict::not_exists(&["Prop3"])
            .cond("unimodular", true)
            .cond("commutator group defined over Q", true)
            .cond("no one-dimensional noncentral commutator subgroup", false)
            .note(&format!(
                "basis vector e{} spans a one-dimensional noncentral member of the commutator \
                 closure ({reason})",
                idx + 1
            )));
    }
    Ok(Verdict::unknown()
        .cond("unimodular", true)
        .cond("commutator group defined over Q", true)
        .cond("no one-dimensional noncentral commutator subgroup", true)
        .note("all necessary conditions pass, but they are not sufficient in general"))
}

fn is_metabelian_shape(sd: &SolvableData) -> bool {
    sd.torus.split_rank >= 1
        && sd.has_zero_bracket()
        && sd.unipotent.dim > 0
        && (0..sd.unipotent.dim).all(|i| !sd.weight_is_zero(i))
}

/// Torus-by-vector-group specs over C with split rank 1: the weight
/// arithmetic rules, the Example-5 argument (and its opt-out
/// generalization), and the constructible-pattern delegation.
pub fn decide_metabelian_complex(
    sd: &SolvableData,
    cfg: &DecisionConfig,
) -> Result<Verdict, SpecError> {
    if !is_metabelian_shape(sd) {
        return Err(SpecError::WrongVariant(
            "decide_metabelian_complex requires split rank >= 1, a zero bracket, and nonzero \
             weights"
                .into(),
        ));
    }
    if sd.torus.split_rank != 1 {
        return Ok(Verdict::unknown()
            .cond("split rank 1 (rules implemented)", false)
            .cond("nonzero weights", true)
            .note("only the rank-one weight rules are implemented"));
    }
    let weights: Vec<i64> = (0..sd.unipotent.dim).map(|i| sd.weight(i)[0]).collect();
    let mut distinct = weights.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let all_distinct = distinct.len() == weights.len();
    let sum: i64 = weights.iter().sum();
    let distinct_sum: i64 = distinct.iter().sum();
    let unimodular = sum == 0;

    // (a) distinct weights with nonzero trace: unimodularity fails where
    // it is provably necessary
    if all_distinct && sum != 0 {
        return Ok(Verdict::not_exists(&["Prop9"])
            .cond("unimodular", false)
            .cond("weights distinct and nonzero", true));
    }
    // (a') repeated weights, nonzero trace: unimodularity is still
    // necessary for C* acting on a vector group
    if !unimodular {
        return Ok(Verdict::not_exists(&["Thm2(i)"])
            .cond("unimodular", false)
            .note("unimodularity is necessary for any C*-by-vector-group semidirect product"));
    }
    // (b) sum of distinct weight values: the Example-5 argument
    if distinct_sum != 0 {
        let mut sorted = weights.clone();
        sorted.sort_unstable();
        let exact_paper_instance = sorted == vec![-1, -1, 2];
        if exact_paper_instance {
            return Ok(Verdict::not_exists(&["Ex5-rule"])
                .cond("unimodular", true)
                .cond("sum of distinct weight values is zero", false)
                .note("exact worked instance: weights (2,-1,-1)"));
        }
        if !cfg.strict_paper {
            return Ok(Verdict::not_exists(&["Ex5-rule (extension)"])
                .cond("unimodular", true)
                .cond("sum of distinct weight values is zero", false)
                .note("generalization of the (2,-1,-1) argument; disable with --strict-paper"));
        }
        return Ok(Verdict::unknown()
            .cond("unimodular", true)
            .cond("sum of distinct weight values is zero", false)
            .note("strict mode: the repeated-weight generalization is disabled and no other \
                   rule fires"));
    }
    // (c) constructible pattern
    if let Some(poly) = match_constructible_pattern(&weights) {
        return Ok(Verdict::exists(&["§11"])
            .cond("unimodular", true)
            .cond("matches a number-field construction pattern", true)
            .witness(WitnessRecipe::NumberField {
                poly: poly.to_string(),
                cocompact: true,
            })
            .note("totally real quadratic field: units acting on the embedded integer lattice"));
    }
    Ok(Verdict::unknown()
        .cond("unimodular", true)
        .cond("matches a number-field construction pattern", false)
        .note("unimodularity passes but no sufficient rule fires"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use crate::group_spec::fixtures;
    use crate::group_spec::{Bracket, TorusPart, WeightAction};

    fn cfg() -> DecisionConfig {
        DecisionConfig::default()
    }

    fn strict() -> DecisionConfig {
        DecisionConfig { strict_paper: true }
    }

    fn semisimple(isotropic: bool) -> GroupSpec {
        GroupSpec::Semisimple(crate::group_spec::SemisimpleFlags {
            isotropic,
            anisotropic_factor_present: !isotropic,
        })
    }

    #[test]
    fn semisimple_isotropic_exists() {
        let v = decide(&semisimple(true), &FieldDesc::ArchComplex, &cfg()).unwrap();
        assert_eq!(v.status, Status::Exists);
        assert!(v.citations.contains(&"ThmA".to_string()));
        let v = decide(&semisimple(false), &FieldDesc::ArchReal, &cfg()).unwrap();
        assert_eq!(v.status, Status::NotExists);
    }

    #[test]
    fn levi_branches() {
        let radical = match fixtures::abelian(1, 0, 1) {
            GroupSpec::Solvable(sd) => sd,
            _ => unreachable!(),
        };
        let iso = GroupSpec::Levi {
            semisimple: crate::group_spec::SemisimpleFlags {
                isotropic: true,
                anisotropic_factor_present: false,
            },
            radical: radical.clone(),
            is_semidirect_over_k: true,
        };
        let v = decide(&iso, &FieldDesc::ArchComplex, &cfg()).unwrap();
        assert_eq!(v.status, Status::Exists);
        let aniso = GroupSpec::Levi {
            semisimple: crate::group_spec::SemisimpleFlags {
                isotropic: false,
                anisotropic_factor_present: true,
            },
            radical,
            is_semidirect_over_k: true,
        };
        let v = decide(&aniso, &FieldDesc::ArchReal, &cfg()).unwrap();
        assert_eq!(v.status, Status::NotExists);
        assert!(v.citations.contains(&"§5 Corollary".to_string()));
    }

    #[test]
    fn borel_rules() {
        let v = decide(
            &GroupSpec::BorelOf(BorelAmbient::Simple),
            &FieldDesc::ArchComplex,
            &cfg(),
        )
        .unwrap();
        assert_eq!(v.status, Status::NotExists);
        assert!(v.citations.contains(&"§6 Corollary".to_string()));
        let v = decide(
            &GroupSpec::BorelOf(BorelAmbient::ProductOfSimples { count: 2 }),
            &FieldDesc::ArchComplex,
            &cfg(),
        )
        .unwrap();
        assert_eq!(v.status, Status::Exists);
        assert_eq!(
            v.witness,
            Some(WitnessRecipe::NumberField {
                poly: "x^3-x-1".into(),
                cocompact: false
            })
        );
        let v = decide(
            &GroupSpec::BorelOf(BorelAmbient::ProductOfSimples { count: 3 }),
            &FieldDesc::ArchComplex,
            &cfg(),
        )
        .unwrap();
        assert_eq!(v.status, Status::Unknown);
    }

    #[test]
    fn sec8_real_not_exists_via_obstruction() {
        let v = decide(&fixtures::sec8_spec(), &FieldDesc::ArchReal, &cfg()).unwrap();
        assert_eq!(v.status, Status::NotExists);
        assert_eq!(v.citations, vec!["Prop3".to_string()]);
        // the earlier necessary conditions passed
        assert!(v
            .conditions
            .iter()
            .any(|c| c.name == "unimodular" && c.pass));
    }

    #[test]
    fn padic_rules() {
        let field = FieldDesc::PAdic { p: 5 };
        // commutative (2,0,1): split 2 >= max(1,1)
        let v = decide(&fixtures::abelian(2, 0, 1), &field, &cfg()).unwrap();
        assert_eq!(v.status, Status::Exists);
        assert!(v.citations.contains(&"Prop8".to_string()));
        assert!(matches!(
            v.witness,
            Some(WitnessRecipe::UniformizerPowers { .. })
        ));
        // pure vector group: no discrete subgroups beyond identity
        let v = decide(&fixtures::abelian(0, 0, 1), &field, &cfg()).unwrap();
        assert_eq!(v.status, Status::NotExists);
        assert!(v.citations.contains(&"Cor3".to_string()));
        // noncommutative: Heisenberg
        let v = decide(&fixtures::heisenberg(0, 0, 0), &field, &cfg()).unwrap();
        assert_eq!(v.status, Status::NotExists);
        assert_eq!(v.citations, vec!["Prop5".to_string()]);
    }

    #[test]
    fn padic_exact_predicate_on_dimension_grid() {
        let field = FieldDesc::PAdic { p: 5 };
        for split in 0..3usize {
            for aniso in 0..3usize {
                for unip in 0..3usize {
                    if split + aniso + unip == 0 {
                        continue;
                    }
                    let v = decide(&fixtures::abelian(split, aniso, unip), &field, &cfg()).unwrap();
                    let expect = (split > 0 || unip > 0) && split >= 1.max(unip);
                    assert_eq!(
                        v.status == Status::Exists,
                        expect,
                        "split={split} aniso={aniso} unip={unip}"
                    );
                    assert_ne!(v.status, Status::Unknown);
                }
            }
        }
    }

    #[test]
    fn padic_monotone_in_anisotropic_rank() {
        let field = FieldDesc::PAdic { p: 7 };
        for split in 0..3usize {
            for unip in 0..3usize {
                if split + unip == 0 {
                    continue;
                }
                let base = decide(&fixtures::abelian(split, 0, unip), &field, &cfg())
                    .unwrap()
                    .status;
                for aniso in 1..4usize {
                    let with = decide(&fixtures::abelian(split, aniso, unip), &field, &cfg())
                        .unwrap()
                        .status;
                    assert_eq!(base, with);
                }
            }
        }
    }

    #[test]
    fn malcev_real_unipotent() {
        let v = decide(
            &fixtures::heisenberg_unipotent(),
            &FieldDesc::ArchReal,
            &cfg(),
        )
        .unwrap();
        assert_eq!(v.status, Status::Exists);
        assert_eq!(v.citations, vec!["Malcev".to_string()]);
        // over_Q = false: the model cannot witness either way
        let mut spec = fixtures::heisenberg_unipotent();
        if let GroupSpec::Solvable(sd) = &mut spec {
            sd.unipotent.over_q = false;
        }
        let v = decide(&spec, &FieldDesc::ArchReal, &cfg()).unwrap();
        assert_eq!(v.status, Status::Unknown);
    }

    #[test]
    fn metabelian_rules() {
        // Example 5 weights: unimodular yet NotExists
        let spec = fixtures::metabelian(&[2, -1, -1]);
        let sd = match &spec {
            GroupSpec::Solvable(sd) => sd,
            _ => unreachable!(),
        };
        assert!(is_unimodular(&spec).unwrap());
        let v = decide(&spec, &FieldDesc::ArchComplex, &cfg()).unwrap();
        assert_eq!(v.status, Status::NotExists);
        assert!(v.citations[0].starts_with("Ex5-rule"));
        // exact paper instance fires even in strict mode
        let v = decide_metabelian_complex(sd, &strict()).unwrap();
        assert_eq!(v.status, Status::NotExists);

        // distinct weights, nonzero sum: Prop 9
        let v = decide(&fixtures::metabelian(&[3, -1]), &FieldDesc::ArchComplex, &cfg()).unwrap();
        assert_eq!(v.status, Status::NotExists);
        assert_eq!(v.citations, vec!["Prop9".to_string()]);

        // constructible pattern (1,-1)
        let v = decide(&fixtures::metabelian(&[1, -1]), &FieldDesc::ArchComplex, &cfg()).unwrap();
        assert_eq!(v.status, Status::Exists);
        assert_eq!(v.citations, vec!["§11".to_string()]);
        assert_eq!(
            v.witness,
            Some(WitnessRecipe::NumberField {
                poly: "x^2-2".into(),
                cocompact: true
            })
        );

        // unimodular but unmatched: Unknown
        let v = decide(&fixtures::metabelian(&[2, -2]), &FieldDesc::ArchComplex, &cfg()).unwrap();
        assert_eq!(v.status, Status::Unknown);

        // strict mode turns a generalized Ex5 instance into Unknown
        let gen5 = fixtures::metabelian(&[3, -1, -1, -1]);
        let v = decide(&gen5, &FieldDesc::ArchComplex, &cfg()).unwrap();
        assert_eq!(v.status, Status::NotExists);
        assert_eq!(v.citations, vec!["Ex5-rule (extension)".to_string()]);
        let v = decide(&gen5, &FieldDesc::ArchComplex, &strict()).unwrap();
        assert_eq!(v.status, Status::Unknown);
    }

    #[test]
    fn metabelian_weight_negation_invariance() {
        let cases: Vec<Vec<i64>> = vec![
            vec![2, -1, -1],
            vec![3, -1],
            vec![1, -1],
            vec![2, -2],
            vec![1, 2, -3],
            vec![5, -5, 1, -1],
        ];
        for ws in cases {
            let neg: Vec<i64> = ws.iter().map(|w| -w).collect();
            let a = decide(&fixtures::metabelian(&ws), &FieldDesc::ArchComplex, &cfg()).unwrap();
            let b = decide(&fixtures::metabelian(&neg), &FieldDesc::ArchComplex, &cfg()).unwrap();
            assert_eq!(a.status, b.status, "weights {ws:?}");
        }
    }

    #[test]
    fn obstruction_scan_examples() {
        assert!(obstruction_one_dim_noncentral(&fixtures::sec8_spec())
            .unwrap()
            .is_some());
        assert!(obstruction_one_dim_noncentral(&fixtures::abelian(1, 0, 2))
            .unwrap()
            .is_none());
        // Heisenberg with zero torus: the center is central, no trigger
        assert!(
            obstruction_one_dim_noncentral(&fixtures::heisenberg_unipotent())
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn necessary_conditions_order() {
        // non-unimodular fails first
        let v = decide(&fixtures::metabelian(&[1, 1]), &FieldDesc::ArchReal, &cfg()).unwrap();
        assert_eq!(v.status, Status::NotExists);
        assert_eq!(v.citations, vec!["Prop7".to_string()]);
        // commutator not over Q
        let mut spec = fixtures::metabelian(&[1, -1]);
        if let GroupSpec::Solvable(sd) = &mut spec {
            sd.commutator_over_q = false;
        }
        let v = decide(&spec, &FieldDesc::ArchReal, &cfg()).unwrap();
        assert_eq!(v.status, Status::NotExists);
        assert!(v.conditions.iter().any(|c| c.name.contains("over Q") && !c.pass));
        // all pass: Unknown
        let v = decide(&fixtures::metabelian(&[1, -1]), &FieldDesc::ArchReal, &cfg()).unwrap();
        assert_eq!(v.status, Status::Unknown);
        assert!(v.conditions.iter().all(|c| c.pass));
    }

    #[test]
    fn unipotent_complex_examples() {
        let vgroup = UnipotentPart {
            dim: 2,
            brackets: vec![],
            over_q: true,
        };
        // real axis only: complex span is still everything
        let axis: Vec<Vec<(BigRational, BigRational)>> = vec![
            vec![(rat_int(1), rat_int(0)), (rat_int(0), rat_int(0))],
            vec![(rat_int(0), rat_int(0)), (rat_int(1), rat_int(0))],
        ];
        let v = decide_unipotent_complex(&vgroup, &axis, 2).unwrap();
        assert_eq!(v.status, Status::Exists);

        // Gaussian lattice of C^1 seen as a 2-dimensional real form
        let gauss = UnipotentPart {
            dim: 2,
            brackets: vec![],
            over_q: true,
        };
        let rows: Vec<Vec<(BigRational, BigRational)>> = vec![
            vec![(rat_int(1), rat_int(0))],
            vec![(rat_int(0), rat_int(1))],
        ];
        let v = decide_unipotent_complex(&gauss, &rows, 1).unwrap();
        assert_eq!(v.status, Status::Exists);

        // span-deficient: R^{n-1} x {0} in C^n
        let thin = UnipotentPart {
            dim: 1,
            brackets: vec![],
            over_q: true,
        };
        let rows: Vec<Vec<(BigRational, BigRational)>> =
            vec![vec![(rat_int(1), rat_int(0)), (rat_int(0), rat_int(0))]];
        let v = decide_unipotent_complex(&thin, &rows, 2).unwrap();
        assert_eq!(v.status, Status::Unknown);

        // shape mismatch
        assert!(decide_unipotent_complex(&thin, &[], 2).is_err());
    }

    #[test]
    fn char_p_is_unknown() {
        let field = FieldDesc::LaurentFF { p: 2, n: 1 };
        for spec in [
            semisimple(true),
            fixtures::heisenberg(0, 0, 0),
            GroupSpec::BorelOf(BorelAmbient::Simple),
            fixtures::abelian(2, 0, 1),
        ] {
            let v = decide(&spec, &field, &cfg()).unwrap();
            assert_eq!(v.status, Status::Unknown);
            assert!(v.citations.contains(&"char>0 partial results".to_string()));
        }
    }

    #[test]
    fn amenability_table() {
        assert_eq!(
            is_amenable(&fixtures::heisenberg(0, 0, 0), &FieldDesc::PAdic { p: 3 }),
            Ternary::True
        );
        assert_eq!(
            is_amenable(&semisimple(true), &FieldDesc::ArchReal),
            Ternary::False
        );
        assert_eq!(
            is_amenable(&semisimple(false), &FieldDesc::ArchReal),
            Ternary::True
        );
        assert_eq!(
            is_amenable(&semisimple(true), &FieldDesc::LaurentFF { p: 2, n: 1 }),
            Ternary::Unknown
        );
    }

    #[test]
    fn totality_over_fixture_grid() {
        let fields = [
            FieldDesc::ArchReal,
            FieldDesc::ArchComplex,
            FieldDesc::PAdic { p: 5 },
            FieldDesc::LaurentFF { p: 3, n: 1 },
        ];
        let specs = [
            semisimple(true),
            semisimple(false),
            GroupSpec::BorelOf(BorelAmbient::Simple),
            GroupSpec::BorelOf(BorelAmbient::ProductOfSimples { count: 2 }),
            fixtures::heisenberg(0, 0, 0),
            fixtures::heisenberg(1, 1, 2),
            fixtures::sec8_spec(),
            fixtures::abelian(2, 1, 1),
            fixtures::metabelian(&[2, -1, -1]),
            fixtures::metabelian(&[1, -1]),
        ];
        for field in &fields {
            for spec in &specs {
                let v = decide(spec, field, &cfg()).unwrap();
                if v.status != Status::Unknown {
                    assert!(!v.citations.is_empty(), "{spec:?} over {field}");
                } else {
                    assert!(
                        !v.conditions.is_empty() || !v.notes.is_empty(),
                        "Unknown without explanation: {spec:?} over {field}"
                    );
                }
            }
        }
    }

    #[test]
    fn invalid_spec_rejected() {
        let bad = GroupSpec::Solvable(SolvableData {
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
                    coeff: rat(1, 1),
                }],
                over_q: true,
            },
            action: WeightAction {
                weights: vec![vec![1], vec![1], vec![3]], // equivariance broken
            },
            commutator_over_q: true,
        });
        assert!(matches!(
            decide(&bad, &FieldDesc::ArchComplex, &cfg()),
            Err(SpecError::InvalidSpec(_))
        ));
    }
}
