//! Data from the classification table of simple symmetric pairs.

use super::spec::{DiagKind, PairSpec};
use crate::error::Result;
use crate::rootsys::{Component, Family, TypeLabel};
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    /// Type of the restricted root system as tabulated.
    pub restricted_type: TypeLabel,
    pub quasi_split: bool,
    pub split: bool,
}

fn label(f: Family, r: usize) -> TypeLabel {
    if r == 0 {
        TypeLabel::default()
    } else {
        TypeLabel::new(alloc::vec![Component { family: f, rank: r }])
    }
}

/// Exceptional row: (label, group type, restricted type, quasi-split, split).
pub const EXCEPTIONAL_ROWS: [(&str, &str, &str, bool, bool); 12] = [
    ("EII", "E6", "F4", true, false),
    ("EIII", "E6", "BC2", false, false),
    ("EI", "E6", "E6", true, true),
    ("EIV", "E6", "A2", false, false),
    ("EV", "E7", "E7", true, true),
    ("EVI", "E7", "F4", false, false),
    ("EVII", "E7", "C3", false, false),
    ("EVIII", "E8", "E8", true, true),
    ("EIX", "E8", "F4", false, false),
    ("FII", "F4", "BC1", false, false),
    ("FI", "F4", "F4", true, true),
    ("G", "G2", "G2", true, true),
];

/// Tabulated type of the group `G` of the pair (simple factor for DIAG).
pub fn group_type(spec: &PairSpec) -> TypeLabel {
    match *spec {
        PairSpec::AI { n, .. } | PairSpec::AIII { n, .. } => label(Family::A, n - 1),
        PairSpec::AII { n } => label(Family::A, 2 * n - 1),
        PairSpec::CI { n } | PairSpec::CII { n, .. } => label(Family::C, n),
        PairSpec::BDI { n, .. } => so_type(n),
        PairSpec::DIII { n } => label(Family::D, n),
        PairSpec::DIAG { g, n } => diag_type(g, n),
        PairSpec::EXC { ref label } => {
            let row = EXCEPTIONAL_ROWS.iter().find(|r| r.0 == label).expect("validated label");
            TypeLabel::parse(row.1).expect("table entry")
        }
    }
}

fn so_type(n: usize) -> TypeLabel {
    if n % 2 == 1 {
        label(Family::B, (n - 1) / 2)
    } else {
        label(Family::D, n / 2)
    }
}

fn diag_type(g: DiagKind, n: usize) -> TypeLabel {
    match g {
        DiagKind::Gl | DiagKind::Sl => label(Family::A, n - 1),
        DiagKind::Sp => label(Family::C, n),
        DiagKind::So => so_type(n),
    }
}

pub fn table_row(spec: &PairSpec) -> Result<TableRow> {
    spec.validate()?;
    let row = |t: TypeLabel, qs: bool, sp: bool| TableRow { restricted_type: t, quasi_split: qs, split: sp };
    Ok(match *spec {
        PairSpec::AIII { n, m, .. } => row(label(Family::C, m), n == 2 * m || n == 2 * m + 1, false),
        PairSpec::AII { n } => row(label(Family::A, n - 1), false, false),
        PairSpec::AI { n, .. } => row(label(Family::A, n - 1), true, true),
        PairSpec::CII { n, m } => row(label(if 2 * m < n { Family::BC } else { Family::C }, m), false, false),
        PairSpec::CI { n } => row(label(Family::C, n), true, true),
        PairSpec::BDI { n, m } => {
            let t = if n == 2 * m { label(Family::D, m) } else { label(Family::B, m) };
            row(t, n <= 2 * m + 2, n <= 2 * m + 1)
        }
        PairSpec::DIII { n } => {
            let t = if n % 2 == 0 { label(Family::C, n / 2) } else { label(Family::BC, n / 2) };
            row(t, false, false)
        }
        PairSpec::DIAG { g, n } => row(diag_type(g, n), true, false),
        PairSpec::EXC { ref label } => {
            let r = EXCEPTIONAL_ROWS.iter().find(|r| r.0 == label).expect("validated label");
            row(TypeLabel::parse(r.2).expect("table entry"), r.3, r.4)
        }
    })
}

/// Labels in the table that differ from the computed type only by a known
/// notational alias, recorded rather than hidden.
pub fn known_alias(spec: &PairSpec, computed: &TypeLabel) -> Option<&'static str> {
    match *spec {
        PairSpec::AIII { n, m, .. } if n > 2 * m && *computed == label(Family::BC, m) => {
            Some("table lists C_m; the model's restricted roots contain both δ and 2δ, i.e. BC_m")
        }
        _ => None,
    }
}

pub fn exceptional_labels() -> Vec<&'static str> {
    EXCEPTIONAL_ROWS.iter().map(|r| r.0).collect()
}
