//! The p'-valenced criteria, each decided by its own computation, and their
//! mutual agreement.

use serde::Serialize;
use thiserror::Error;

use crate::ffmat::{kernel, GfpMatrix, Subspace};
use crate::primary::{PrimaryModule, SelfContraVerdict};
use crate::scheme::Strata;
use crate::talg::{b0_identity, radical, AlgebraBasis, TalgContext, TalgError};

pub const IMPLIED: &str = "implied by item (i) through the theorem equivalence";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("internal inconsistency: {detail}")]
    InternalInconsistency { detail: String },
    #[error(transparent)]
    Talg(#[from] TalgError),
}

/// Everything computed at one base point that the criteria read.
pub struct Artifacts<'a> {
    pub ctx: &'a TalgContext,
    pub strata: &'a Strata,
    pub t: &'a AlgebraBasis,
    pub b0: &'a AlgebraBasis,
    pub b1: &'a AlgebraBasis,
    pub rad: &'a AlgebraBasis,
    pub ann: &'a AlgebraBasis,
    pub primary: &'a PrimaryModule,
    pub self_contra: &'a SelfContraVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImpliedItem {
    pub value: bool,
    pub provenance: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharReport {
    pub i_pprime: bool,
    pub ii_b0_unital_central: bool,
    pub iii_complement_ideal: bool,
    pub iv_b0_simple: bool,
    pub v_ann_thin_kills: bool,
    pub vi_rad_thin_kills: bool,
    pub vii: ImpliedItem,
    pub viii_w0_irreducible: bool,
    pub ix_w0_selfcontra: bool,
    pub x: ImpliedItem,
    pub xi: ImpliedItem,
    pub consistent: bool,
}

impl CharReport {
    pub fn computed(&self) -> [(&'static str, bool); 8] {
        [
            ("i", self.i_pprime),
            ("ii", self.ii_b0_unital_central),
            ("iii", self.iii_complement_ideal),
            ("iv", self.iv_b0_simple),
            ("v", self.v_ann_thin_kills),
            ("vi", self.vi_rad_thin_kills),
            ("viii", self.viii_w0_irreducible),
            ("ix", self.ix_w0_selfcontra),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub b0_simple_unital: bool,
    pub rad_thin_kills: bool,
    pub iii: ImpliedItem,
    pub consistent: bool,
}

/// Kernel over the coefficients of `a` of a linear map given per basis
/// element, returned as matrices.
fn solve_in(a: &AlgebraBasis, images: impl Fn(&GfpMatrix) -> Vec<u32>, ctx: &TalgContext) -> Vec<GfpMatrix> {
    let f = ctx.field();
    let cols: Vec<Vec<u32>> = a.elements().iter().map(&images).collect();
    let rows = cols.first().map_or(0, Vec::len);
    let mut m = GfpMatrix::zeros(rows, a.dim());
    for (c, col) in cols.iter().enumerate() {
        for (r, &v) in col.iter().enumerate() {
            m.set(r, c, v);
        }
    }
    kernel(&m, f).basis().iter().map(|c| a.combine(c, f)).collect()
}

/// Two-sided identity of `b`, found by solving `u b_s = b_s u = b_s`.
fn solve_identity(b: &AlgebraBasis, ctx: &TalgContext) -> Option<GfpMatrix> {
    let f = ctx.field();
    let m = b.dim();
    if m == 0 {
        return None;
    }
    let nn = ctx.n() * ctx.n();
    let mut sys = GfpMatrix::zeros(2 * m * nn, m + 1);
    for (s, bs) in b.elements().iter().enumerate() {
        for (r, br) in b.elements().iter().enumerate() {
            let left = br.mul(bs, f);
            let right = bs.mul(br, f);
            for k in 0..nn {
                sys.set(2 * s * nn + k, r, left.as_slice()[k]);
                sys.set((2 * s + 1) * nn + k, r, right.as_slice()[k]);
            }
        }
        for k in 0..nn {
            let neg = f.neg(bs.as_slice()[k]);
            sys.set(2 * s * nn + k, m, neg);
            sys.set((2 * s + 1) * nn + k, m, neg);
        }
    }
    let ker = kernel(&sys, f);
    let v = ker.basis().iter().find(|v| v[m] != 0)?;
    let inv = f.inv(v[m]).expect("nonzero");
    let c: Vec<u32> = v[..m].iter().map(|&x| f.mul(x, inv)).collect();
    Some(b.combine(&c, f))
}

fn thin_kills(ctx: &TalgContext, strata: &Strata, elems: &[GfpMatrix]) -> bool {
    let f = ctx.field();
    strata.thin.iter().all(|&i| {
        let e = ctx.estar(i);
        elems.iter().all(|z| e.mul(z, f).is_zero() && z.mul(e, f).is_zero())
    })
}

fn item_ii(a: &Artifacts) -> Result<bool, CharError> {
    match b0_identity(a.ctx, a.t, a.b0) {
        Ok(_) => Ok(true),
        Err(TalgError::NotPPrimeValenced { .. }) => Ok(false),
        Err(TalgError::IdentityElement(detail)) => Err(CharError::InternalInconsistency { detail }),
        Err(e) => Err(e.into()),
    }
}

/// `T = B_0 + D` with `D` an ideal exactly when the two-sided annihilator
/// `N` of `B_0` in `T` is a complement of `B_0`.
fn item_iii(a: &Artifacts) -> Result<bool, CharError> {
    let f = a.ctx.field();
    let n_ann = solve_in(
        a.t,
        |t| {
            a.b0.elements()
                .iter()
                .flat_map(|b| {
                    let mut v = t.mul(b, f).into_vec();
                    v.extend(b.mul(t, f).into_vec());
                    v
                })
                .collect()
        },
        a.ctx,
    );
    let nn = a.ctx.n() * a.ctx.n();
    let n_space = Subspace::span(nn, n_ann.iter().map(|m| m.as_slice()), f).map_err(TalgError::from)?;
    let meet = n_space.intersect(a.b0.subspace(), f).map_err(TalgError::from)?;
    let holds = meet.is_zero() && n_space.dim() + a.b0.dim() == a.t.dim();
    if let Ok(e) = b0_identity(a.ctx, a.t, a.b0) {
        let complement = GfpMatrix::identity(a.ctx.n()).sub(&e, f);
        let d = Subspace::span(nn, a.t.elements().iter().map(|t| complement.mul(t, f).into_vec()), f)
            .map_err(TalgError::from)?;
        if d != n_space {
            return Err(CharError::InternalInconsistency {
                detail: "(I - e) T differs from the annihilator of B0".into(),
            });
        }
    }
    Ok(holds)
}

/// `B_0` is a full matrix algebra over GF(p) iff it is unital, semisimple and
/// its centre is one-dimensional.
fn item_iv(a: &Artifacts) -> Result<bool, CharError> {
    let f = a.ctx.field();
    if solve_identity(a.b0, a.ctx).is_none() {
        return Ok(false);
    }
    let (rad_b0, _) = radical(a.b0, f)?;
    if rad_b0.dim() != 0 {
        return Ok(false);
    }
    let centre = solve_in(
        a.b0,
        |z| {
            a.b0.elements()
                .iter()
                .flat_map(|b| z.mul(b, f).sub(&b.mul(z, f), f).into_vec())
                .collect()
        },
        a.ctx,
    );
    Ok(centre.len() == 1)
}

/// Decides the eight computable items independently and requires them to
/// agree.
pub fn check_equivalences(a: &Artifacts) -> Result<CharReport, CharError> {
    let i = a.strata.p_prime_valenced;
    let implied = ImpliedItem {
        value: i,
        provenance: IMPLIED,
    };
    let mut report = CharReport {
        i_pprime: i,
        ii_b0_unital_central: item_ii(a)?,
        iii_complement_ideal: item_iii(a)?,
        iv_b0_simple: item_iv(a)?,
        v_ann_thin_kills: thin_kills(a.ctx, a.strata, a.ann.elements()),
        vi_rad_thin_kills: thin_kills(a.ctx, a.strata, a.rad.elements()),
        vii: implied.clone(),
        viii_w0_irreducible: a.primary.action.coordinate_irreducible(a.ctx.field()),
        ix_w0_selfcontra: a.self_contra.isomorphic,
        x: implied.clone(),
        xi: implied,
        consistent: false,
    };
    let items = report.computed();
    report.consistent = items.iter().all(|&(_, v)| v == i);
    if !report.consistent {
        let listing: Vec<String> = items.iter().map(|(k, v)| format!("{k}={v}")).collect();
        return Err(CharError::InternalInconsistency {
            detail: format!("criteria disagree at base point {}: {}", a.ctx.base_point(), listing.join(" ")),
        });
    }
    Ok(report)
}

/// `B_0` simple unital and `Rad(T)` killed by the thin idempotents, checked
/// against each other and the theorem verdict.
pub fn check_corollary(a: &Artifacts, theorem: &CharReport) -> Result<CorollaryReport, CharError> {
    let b0_simple_unital = item_iv(a)?;
    let rad_thin_kills = thin_kills(a.ctx, a.strata, a.rad.elements());
    let consistent = b0_simple_unital == rad_thin_kills && rad_thin_kills == theorem.i_pprime;
    if !consistent {
        return Err(CharError::InternalInconsistency {
            detail: format!(
                "corollary disagrees: simple unital {b0_simple_unital}, radical {rad_thin_kills}, p'-valenced {}",
                theorem.i_pprime
            ),
        });
    }
    Ok(CorollaryReport {
        b0_simple_unital,
        rad_thin_kills,
        iii: ImpliedItem {
            value: theorem.i_pprime,
            provenance: IMPLIED,
        },
        consistent,
    })
}
