use serde::Serialize;

use super::{ClosureDigraph, PrimaryError, PrimaryModule};
use crate::ffmat::{FieldCtx, Subspace};
use crate::scheme::Strata;
use crate::talg::{AlgebraBasis, TalgContext};

/// The factor `Irr_n(C)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionFactor {
    pub level: usize,
    pub class: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Level {
    pub n: usize,
    pub stratum: Vec<usize>,
    pub w_dim: usize,
    pub classes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionReport {
    pub epsilon: usize,
    pub levels: Vec<Level>,
    pub factors: Vec<CompositionFactor>,
    pub composition_length: usize,
}

impl CompositionReport {
    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(|c| c.dim).collect()
    }
}

/// `Q_n` from the global components restricted to `S_n`, with every
/// `Irr_n(C)` checked to be a submodule of `W_n / W_{n+1}` and irreducible.
pub fn composition_factors(
    m: &PrimaryModule,
    st: &Strata,
    g: &ClosureDigraph,
    w: &[Subspace],
    f: &FieldCtx,
) -> Result<CompositionReport, PrimaryError> {
    let mut levels = Vec::new();
    let mut factors = Vec::new();
    for (n, stratum) in st.sets.iter().enumerate() {
        if w[n].dim() - w[n + 1].dim() != stratum.len() {
            return Err(PrimaryError::Invariant(format!("dim W_{n}/W_{} != |S_{n}|", n + 1)));
        }
        let classes = g.restrict(stratum);
        for class in &classes {
            for (gi, a) in m.action.gens.iter().enumerate() {
                for &i in class {
                    for h in 0..m.dim() {
                        let leaks_up = st.level(h) < n;
                        let leaks_sideways = st.level(h) == n && !class.contains(&h);
                        if (leaks_up || leaks_sideways) && a.get(h, i) != 0 {
                            return Err(PrimaryError::Invariant(format!(
                                "generator {gi} moves E*_{i} 1 outside Irr_{n}({class:?})"
                            )));
                        }
                    }
                }
            }
            if !m.action.restrict(class).coordinate_irreducible(f) {
                return Err(PrimaryError::Invariant(format!("Irr_{n}({class:?}) is reducible")));
            }
            factors.push(CompositionFactor {
                level: n,
                class: class.clone(),
                dim: class.len(),
            });
        }
        levels.push(Level {
            n,
            stratum: stratum.clone(),
            w_dim: w[n].dim(),
            classes,
        });
    }
    Ok(CompositionReport {
        epsilon: st.epsilon,
        composition_length: factors.len(),
        levels,
        factors,
    })
}

/// `Rad(T) W_n` in coordinates.
fn rad_image(ctx: &TalgContext, m: &PrimaryModule, rad: &AlgebraBasis, wn: &Subspace) -> Result<Subspace, PrimaryError> {
    let f = ctx.field();
    let mut out = Subspace::zero(m.dim());
    for v in wn.basis() {
        let point: Vec<u32> = (0..ctx.n())
            .map(|z| v[ctx.scheme().relation(ctx.base_point(), z)])
            .collect();
        for z in rad.elements() {
            let image = z.mul_vec(&point, f);
            let c = m
                .coords(ctx, &image)
                .ok_or_else(|| PrimaryError::Invariant("radical image leaves W_0".into()))?;
            out.insert(&c, f)?;
        }
    }
    Ok(out)
}

/// `W_0` is uniserial iff at each nontrivial step `|Q_n| = 1` and
/// `Rad(T) W_n = W_{n+1}`.
pub fn uniserial_check(
    ctx: &TalgContext,
    m: &PrimaryModule,
    report: &CompositionReport,
    w: &[Subspace],
    rad: &AlgebraBasis,
) -> Result<bool, PrimaryError> {
    for level in &report.levels {
        let n = level.n;
        if w[n] == w[n + 1] {
            continue;
        }
        if level.classes.len() != 1 || rad_image(ctx, m, rad, &w[n])? != w[n + 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that `E_i* 1 -> E_i* J E_l*` intertwines every generator, so that
/// `M_l = span{E_i* J E_l*}` is isomorphic to `W_0`.
pub fn verify_ml_iso(ctx: &TalgContext, m: &PrimaryModule, l: usize) -> Result<bool, PrimaryError> {
    let r = ctx.rank();
    if l >= r {
        return Err(PrimaryError::IndexOutOfRange { index: l, d: r - 1 });
    }
    let f = ctx.field();
    let images: Vec<_> = (0..r).map(|i| ctx.ejej(i, l)).collect();
    if Subspace::span(ctx.n() * ctx.n(), images.iter().map(|x| x.as_slice()), f)?.dim() != r {
        return Ok(false);
    }
    for (gi, g) in ctx.generators().iter().enumerate() {
        for h in 0..r {
            let lhs = (0..r).fold(crate::GfpMatrix::zeros(ctx.n(), ctx.n()), |acc, i| {
                acc.add(&images[i].scale(m.action.gens[gi].get(i, h), f), f)
            });
            if lhs != g.mul(&images[h], f) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
