//! Catalogue of symmetric pairs, their matrix models and restricted roots.

mod model;
mod restricted;
mod spec;
mod table;

pub use model::{
    diag_g_basis, flatten, gl_basis, i_mn, matrix_span, omega, sl_basis, so_basis, sp_basis, unflatten, FieldTag,
    Involution, MatrixModel, M,
};
pub use restricted::{joint_eigenbasis, restricted_root_system as restricted_roots_of_model, RestrictedRootSystem};
pub use spec::{DiagKind, GroupKind, PairSpec, EXCEPTIONAL_LABELS};
pub use table::{exceptional_labels, group_type, known_alias, table_row, TableRow, EXCEPTIONAL_ROWS};

use crate::error::{Error, Result};
use crate::rootsys::{build_from_label, limit_for_rank_guard, weyl_group, DEFAULT_RANK_GUARD};
use alloc::format;
use alloc::string::String;

/// A catalogued pair with its model (absent for exceptional rows).
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    pub spec: PairSpec,
    pub model: Option<MatrixModel>,
    pub rank_theta: usize,
}

impl SymmetricPair {
    pub fn model(&self) -> Result<&MatrixModel> {
        self.model.as_ref().ok_or_else(|| Error::ModelMissing(format!("{}", self.spec)))
    }
}

pub fn catalog_pair(spec: &PairSpec) -> Result<SymmetricPair> {
    spec.validate()?;
    match spec {
        PairSpec::EXC { .. } => {
            let row = table_row(spec)?;
            Ok(SymmetricPair { spec: spec.clone(), model: None, rank_theta: row.restricted_type.rank() })
        }
        _ => {
            let model = MatrixModel::build(spec)?;
            let rank_theta = model.rank_theta();
            Ok(SymmetricPair { spec: spec.clone(), model: Some(model), rank_theta })
        }
    }
}

/// Restricted roots computed from the model; exceptional rows return the
/// tabulated type with no multiplicities.
pub fn restricted_root_system(pair: &SymmetricPair) -> Result<RestrictedRootSystem> {
    restricted_root_system_with_limit(pair, limit_for_rank_guard(DEFAULT_RANK_GUARD))
}

pub fn restricted_root_system_with_limit(pair: &SymmetricPair, limit: u128) -> Result<RestrictedRootSystem> {
    match &pair.model {
        Some(m) => restricted_roots_of_model(m, limit),
        None => {
            let row = table_row(&pair.spec)?;
            let base = build_from_label(&row.restricted_type)?;
            let little_weyl = weyl_group(&base, limit);
            Ok(RestrictedRootSystem {
                multiplicities: alloc::vec![0; base.len()],
                base,
                zero_fiber_size: if row.quasi_split { 0 } else { 1 },
                dim_centralizer: 0,
                imaginary_stripped: false,
                little_weyl,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiSplitReport {
    pub computed: bool,
    pub tabulated: bool,
    pub zero_fiber_size: usize,
    pub method: String,
}

/// Quasi-splitness from `|r⁻¹(0)|` on the model, checked against the table.
pub fn is_quasisplit(pair: &SymmetricPair) -> Result<QuasiSplitReport> {
    let row = table_row(&pair.spec)?;
    match &pair.model {
        None => Ok(QuasiSplitReport {
            computed: row.quasi_split,
            tabulated: row.quasi_split,
            zero_fiber_size: 0,
            method: String::from("table only (no matrix model)"),
        }),
        Some(m) => {
            let rr = restricted_roots_of_model(m, 0)?;
            let computed = rr.zero_fiber_size == 0;
            if computed != row.quasi_split {
                return Err(Error::TableModelMismatch(format!("{}", pair.spec)));
            }
            Ok(QuasiSplitReport {
                computed,
                tabulated: row.quasi_split,
                zero_fiber_size: rr.zero_fiber_size,
                method: format!("zero fiber = dim z_g(a) - rank g = {} - {}", rr.dim_centralizer, m.rank_g),
            })
        }
    }
}

/// `dim k − dim p == dim c_k(a) − dim a`, all four computed independently.
pub fn dimension_identity_check(pair: &SymmetricPair) -> Result<bool> {
    let m = pair.model()?;
    let lhs = m.k_basis.len() as i64 - m.p_basis.len() as i64;
    let rhs = m.centralizer_of_cartan_in_k().len() as i64 - crate::matrix::rank_of(
        &m.cartan.iter().map(flatten).collect::<alloc::vec::Vec<_>>(),
    ) as i64;
    Ok(lhs == rhs)
}
