//! One full analysis of a scheme over GF(p), with every structural identity
//! asserted along the way.

use serde::Serialize;
use thiserror::Error;

use crate::characterize::{check_corollary, check_equivalences, Artifacts, CharError, CharReport, CorollaryReport};
use crate::ffmat::{FieldCtx, GfpMatrix, Subspace};
use crate::primary::{
    build_primary, closure_digraph, composition_factors, factor_duality, filtration, is_selfcontragredient,
    uniserial_check, verify_ml_iso, CompositionReport, PrimaryError, SelfContraVerdict,
};
use crate::scheme::{strata, SchemeData, SchemeError, Strata};
use crate::talg::{
    annihilator_w0, b0_b1, build_context, generate_algebra, radical, square_witness, AlgebraBasis,
    RadicalCertificate, TalgError,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("base point {x} outside [0, {n})")]
    BasePoint { x: usize, n: usize },
}

impl AnalysisError {
    /// Whether the error reveals disagreement between computations rather
    /// than bad input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, AnalysisError::Inconsistent(_))
    }
}

impl From<TalgError> for AnalysisError {
    fn from(e: TalgError) -> Self {
        match e {
            TalgError::BasePointOutOfRange { x, n } => AnalysisError::BasePoint { x, n },
            other => AnalysisError::Inconsistent(other.to_string()),
        }
    }
}

impl From<PrimaryError> for AnalysisError {
    fn from(e: PrimaryError) -> Self {
        match e {
            PrimaryError::Talg(t) => t.into(),
            other => AnalysisError::Inconsistent(other.to_string()),
        }
    }
}

impl From<CharError> for AnalysisError {
    fn from(e: CharError) -> Self {
        match e {
            CharError::Talg(t) => t.into(),
            other => AnalysisError::Inconsistent(other.to_string()),
        }
    }
}

impl From<crate::ffmat::FfError> for AnalysisError {
    fn from(e: crate::ffmat::FfError) -> Self {
        AnalysisError::Inconsistent(e.to_string())
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), AnalysisError> {
    if cond {
        Ok(())
    } else {
        Err(AnalysisError::Inconsistent(what()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BasePointReport {
    pub base_point: usize,
    #[serde(rename = "dim_T")]
    pub dim_t: usize,
    pub dim_rad: usize,
    pub dim_ann: usize,
    pub radical: RadicalCertificate,
    pub uniserial: bool,
    pub characterization: CharReport,
    pub corollary: CorollaryReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub scheme_id: String,
    pub field: String,
    pub n: usize,
    pub d: usize,
    pub valencies: Vec<u64>,
    pub converse: Vec<usize>,
    pub prime: u32,
    pub strata: Strata,
    pub filtration_dims: Vec<usize>,
    pub composition: CompositionReport,
    pub composition_length: usize,
    pub uniserial: bool,
    #[serde(rename = "self_contragredient_W0")]
    pub self_contragredient_w0: SelfContraVerdict,
    #[serde(rename = "dim_B0")]
    pub dim_b0: usize,
    #[serde(rename = "dim_B1")]
    pub dim_b1: usize,
    pub base_points: Vec<BasePointReport>,
    pub checks: Vec<String>,
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    pub fn primary(&self) -> &BasePointReport {
        &self.base_points[0]
    }

    pub fn characterization(&self) -> &CharReport {
        &self.primary().characterization
    }
}

/// Shared per-scheme data that does not depend on the base point.
struct SchemeLevel {
    strata: Strata,
    composition: CompositionReport,
    filtration: Vec<Subspace>,
    self_contra: SelfContraVerdict,
}

/// Everything computed at one base point, kept for callers that want the
/// algebras themselves.
pub struct BasePointArtifacts {
    pub ctx: crate::talg::TalgContext,
    pub t: AlgebraBasis,
    pub b0: AlgebraBasis,
    pub b1: AlgebraBasis,
    pub rad: AlgebraBasis,
    pub ann: AlgebraBasis,
    pub primary: crate::primary::PrimaryModule,
    pub report: BasePointReport,
}

fn is_product_zero(a: &[GfpMatrix], f: &FieldCtx) -> bool {
    a.iter()
        .all(|x| a.iter().all(|y| { let xy = x.mul(y, f); a.iter().all(|z| xy.mul(z, f).is_zero()) }))
}

/// Runs the base-point dependent part and every assertion that touches
/// `T(x)`.
pub fn analyze_base_point(
    s: &SchemeData,
    f: &FieldCtx,
    x: usize,
    checks: &mut Vec<String>,
) -> Result<BasePointArtifacts, AnalysisError> {
    let level = scheme_level(s, f, checks)?;
    analyze_at(s, f, x, &level, checks)
}

fn scheme_level(s: &SchemeData, f: &FieldCtx, checks: &mut Vec<String>) -> Result<SchemeLevel, AnalysisError> {
    let st = strata(s, f);
    ensure(s.triangle_violation().is_none(), || "triangle identity".into())?;
    checks.push("triangle identity".into());

    // W_0 and its factors only involve intersection numbers
    let ctx = build_context(s, f, 0)?;
    let m = build_primary(&ctx)?;
    ensure(m.dim() == s.rank(), || "dim W_0 != d + 1".into())?;
    let w = filtration(&m, &st, f)?;
    let g = closure_digraph(s, f);
    let composition = composition_factors(&m, &st, &g, &w, f)?;
    checks.push("dim W_n/W_{n+1} = |S_n|".into());
    ensure(composition.levels[0].classes == vec![st.sets[0].clone()], || "Q_0 != {S_0}".into())?;
    let mut seen = std::collections::BTreeSet::new();
    for c in &composition.factors {
        ensure(seen.insert((c.level, c.class.clone())), || "repeated composition factor".into())?;
        factor_duality(s, c, &m.action, f)?;
    }
    checks.push("factors multiplicity free".into());
    checks.push("factor duality maps intertwine".into());
    let e0 = &m.action.gens[s.rank()];
    let e0_top = Subspace::span(s.rank(), [e0.column(0)], f)?;
    ensure(e0_top.sum(&w[1], f)?.dim() - w[1].dim() == 1, || "dim E_0*(W_0/W_1) != 1".into())?;
    let self_contra = is_selfcontragredient(&m.action, f);
    ensure(self_contra.isomorphic == st.p_prime_valenced, || {
        format!(
            "W_0 self-contragredient = {} but p'-valenced = {}",
            self_contra.isomorphic, st.p_prime_valenced
        )
    })?;
    Ok(SchemeLevel {
        strata: st,
        composition,
        filtration: w,
        self_contra,
    })
}

fn analyze_at(
    s: &SchemeData,
    f: &FieldCtx,
    x: usize,
    level: &SchemeLevel,
    checks: &mut Vec<String>,
) -> Result<BasePointArtifacts, AnalysisError> {
    let ctx = build_context(s, f, x)?;
    let m = build_primary(&ctx)?;
    let t = generate_algebra(&ctx);
    let r = s.rank();
    ensure(t.dim() >= r * r, || "dim T < (d+1)^2".into())?;
    let (b0, b1) = b0_b1(&ctx, &t)?;
    let (rad, cert) = radical(&t, f)?;
    let ann = annihilator_w0(&ctx, &t)?;

    ensure(is_product_zero(b1.elements(), f), || "B1^3 != O".into())?;
    ensure(rad.subspace().contains(b1.subspace(), f)?, || "B1 not inside Rad(T)".into())?;
    if !level.strata.p_prime_valenced {
        ensure(square_witness(&ctx).is_some(), || "no i with (E_i*JE_0* + E_0*JE_i*)^2 = E_i*JE_i*".into())?;
    }
    ensure(rad.dim() > 0 || level.strata.p_prime_valenced, || "Rad(T) = O without p'-valence".into())?;
    for &i in &level.strata.thin {
        ensure(ann.elements().iter().all(|z| z.mul(ctx.estar(i), f).is_zero()), || {
            format!("Ann element not killed on the right by E*_{i}")
        })?;
    }
    for l in 0..r {
        ensure(verify_ml_iso(&ctx, &m, l)?, || format!("M_{l} not isomorphic to W_0"))?;
    }
    if level.composition.levels[0].classes.len() == 1 && level.filtration.len() > 1 {
        let single_top = crate::primary::CompositionReport {
            levels: level.composition.levels[..1].to_vec(),
            ..level.composition.clone()
        };
        let top_unique = uniserial_check(&ctx, &m, &single_top, &level.filtration, &rad)?;
        ensure(top_unique, || "Rad(T) W_0 != W_1".into())?;
    }
    checks.extend(
        [
            "B1^3 = O",
            "B1 in Rad(T)",
            "square remark",
            "Rad(T) = O implies p'-valenced",
            "Ann right-killed by thin idempotents",
            "M_l isomorphic to W_0",
            "Rad(T) W_0 = W_1 when |Q_0| = 1",
            "radical postconditions",
        ]
        .map(String::from),
    );
    checks.sort();
    checks.dedup();
    let uniserial = uniserial_check(&ctx, &m, &level.composition, &level.filtration, &rad)?;

    let art = Artifacts {
        ctx: &ctx,
        strata: &level.strata,
        t: &t,
        b0: &b0,
        b1: &b1,
        rad: &rad,
        ann: &ann,
        primary: &m,
        self_contra: &level.self_contra,
    };
    let characterization = check_equivalences(&art)?;
    let corollary = check_corollary(&art, &characterization)?;
    let report = BasePointReport {
        base_point: x,
        dim_t: t.dim(),
        dim_rad: rad.dim(),
        dim_ann: ann.dim(),
        radical: cert,
        uniserial,
        characterization,
        corollary,
    };
    Ok(BasePointArtifacts {
        ctx,
        t,
        b0,
        b1,
        rad,
        ann,
        primary: m,
        report,
    })
}

/// Full analysis at the given base points; the first one is the primary
/// base point for scheme-level fields such as `uniserial`.
pub fn analyze(
    scheme_id: &str,
    s: &SchemeData,
    f: &FieldCtx,
    base_points: &[usize],
) -> Result<AnalysisReport, AnalysisError> {
    assert!(!base_points.is_empty(), "at least one base point");
    let mut checks = Vec::new();
    let level = scheme_level(s, f, &mut checks)?;
    let mut reports = Vec::with_capacity(base_points.len());
    let (mut dim_b0, mut dim_b1) = (0, 0);
    for &x in base_points {
        let a = analyze_at(s, f, x, &level, &mut checks)?;
        dim_b0 = a.b0.dim();
        dim_b1 = a.b1.dim();
        reports.push(a.report);
    }
    ensure(dim_b0 == s.rank() * s.rank(), || "dim B0 != (d+1)^2".into())?;
    let first = &reports[0];
    let verdicts: Vec<bool> = reports.iter().map(|r| r.characterization.i_pprime).collect();
    ensure(verdicts.iter().all(|&v| v == first.characterization.i_pprime), || {
        "characterization depends on the base point".into()
    })?;
    let mut warnings = Vec::new();
    if !level.self_contra.exhaustive {
        warnings.push("self-contragredient search was sampled; the negative verdict is probable, not proven".into());
    }
    let dims: Vec<usize> = reports.iter().map(|r| r.dim_t).collect();
    if dims.iter().any(|&d| d != dims[0]) {
        warnings.push("dim T(x) depends on the base point".into());
    }
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        scheme_id: scheme_id.to_string(),
        field: format!("GF({}); all dimensions are over the prime field", f.p()),
        n: s.n(),
        d: s.d(),
        valencies: s.valencies().to_vec(),
        converse: s.converses().to_vec(),
        prime: f.p(),
        filtration_dims: level.filtration.iter().map(Subspace::dim).collect(),
        composition_length: level.composition.composition_length,
        uniserial: first.uniserial,
        composition: level.composition,
        strata: level.strata,
        self_contragredient_w0: level.self_contra,
        dim_b0,
        dim_b1,
        base_points: reports,
        checks,
        warnings,
    })
}
