//! Strata of `a ⫽ W_a`, their descendant pairs, and the gluing pattern of the
//! regular quotient.

mod table;

pub use table::{orbit_count, orbit_count_of_pair};

use crate::error::{Error, Result};
use crate::field::Ring;
use crate::rootsys::{flat_lattice, limit_for_rank_guard, vanishing_set, Flat, FlatLattice, QVec, TypeLabel, DEFAULT_RANK_GUARD};
use crate::sympair::{catalog_pair, restricted_root_system_with_limit, DiagKind, GroupKind, PairSpec, RestrictedRootSystem, SymmetricPair};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorKind {
    Pair(PairSpec),
    /// Diagonal pair on a Levi of the given root type.
    Diag(TypeLabel),
    Torus(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorDescriptor {
    pub kind: FactorKind,
    /// Coordinates of `a` the factor comes from.
    pub provenance: Vec<usize>,
}

/// How `π₀(H_L)` couples the factors of a descendant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coupling {
    None,
    /// `S(O_{n_1} × ⋯ × O_{n_l})`.
    SDet,
    /// Independent `O_{n_j}` on each block.
    OFree,
    /// The intersection of two `S(…)` conditions in `SO_m × SO_m`.
    SoSoSplit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Known(u32),
    Unresolved,
}

impl Count {
    pub fn known(self) -> Option<u32> {
        match self {
            Count::Known(k) => Some(k),
            Count::Unresolved => None,
        }
    }
}

/// Coordinates vanishing on a flat and the classes of coordinates equal up
/// to sign (or equal, for type A families).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinatePattern {
    pub zero: Vec<usize>,
    /// Each block lists `(coordinate, sign relative to the first)`.
    pub blocks: Vec<Vec<(usize, i8)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descendant {
    pub factors: Vec<FactorDescriptor>,
    pub coupling: Coupling,
    pub pattern: CoordinatePattern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    AiiiEven,
    AiiiOdd,
    Ai,
    Ci,
    BdiSplit,
    Diag(DiagKind),
}

impl Family {
    fn of(spec: &PairSpec) -> Result<Family> {
        Ok(match *spec {
            PairSpec::AIII { n, m, .. } if n == 2 * m => Family::AiiiEven,
            PairSpec::AIII { n, m, .. } if n == 2 * m + 1 => Family::AiiiOdd,
            PairSpec::AI { group: GroupKind::SL, .. } => Family::Ai,
            PairSpec::CI { .. } => Family::Ci,
            PairSpec::BDI { n, m } if n == 2 * m => Family::BdiSplit,
            PairSpec::DIAG { g, .. } => Family::Diag(g),
            _ => return Err(Error::UnsupportedFamily(format!("no gluing rules catalogued for {spec}"))),
        })
    }

    /// Roots of the form `ε_i − ε_j` on a sum-zero span.
    fn type_a(self) -> bool {
        matches!(self, Family::Ai | Family::Diag(DiagKind::Gl) | Family::Diag(DiagKind::Sl))
    }
}

fn column(basis: &[QVec], i: usize) -> Vec<crate::Q> {
    basis.iter().map(|b| b[i].clone()).collect()
}

/// Coordinate structure of a flat. Fails when the flat is not cut out by
/// its coordinate equalities alone.
pub fn coordinate_pattern(flat: &Flat, dim: usize, signed: bool, type_a: bool) -> Result<CoordinatePattern> {
    let cols: Vec<Vec<crate::Q>> = (0..dim).map(|i| column(&flat.subspace_basis, i)).collect();
    let mut zero = Vec::new();
    let mut blocks: Vec<Vec<(usize, i8)>> = Vec::new();
    for i in 0..dim {
        if !type_a && cols[i].iter().all(|x| x.is_zero()) {
            zero.push(i);
            continue;
        }
        let neg: Vec<crate::Q> = cols[i].iter().map(|x| -x.clone()).collect();
        let home = blocks.iter_mut().find_map(|b| {
            let head = &cols[b[0].0];
            if *head == cols[i] {
                Some((b, 1))
            } else if signed && *head == neg {
                Some((b, -1))
            } else {
                None
            }
        });
        match home {
            Some((b, s)) => b.push((i, s)),
            None => blocks.push(vec![(i, 1)]),
        }
    }
    let expected = if type_a { blocks.len() - 1 } else { blocks.len() };
    if expected != flat.dim() {
        return Err(Error::UnrecognizedComponent(format!(
            "flat {:?} is not determined by coordinate equalities",
            flat.vanishing_roots
        )));
    }
    Ok(CoordinatePattern { zero, blocks })
}

#[derive(Clone, Debug)]
pub struct Stratum {
    pub flat: Flat,
    pub codim: usize,
    pub s_type: TypeLabel,
    pub descendant: Descendant,
    pub sheet_count: Count,
}

#[derive(Clone, Debug)]
pub struct GluedComponent {
    /// Index into `GluingPattern::strata`.
    pub stratum: usize,
    pub equations: String,
}

#[derive(Clone, Debug)]
pub struct GluingPattern {
    pub spec: PairSpec,
    pub strata: Vec<Stratum>,
    /// Maximal strata with at least two sheets; `Z` is the union of their
    /// `W_a`-images.
    pub glued_locus: Vec<GluedComponent>,
    pub summary: String,
    pub unresolved: Vec<String>,
}

impl GluingPattern {
    pub fn max_sheets(&self) -> u32 {
        self.strata.iter().filter_map(|s| s.sheet_count.known()).max().unwrap_or(1)
    }

    pub fn has_unresolved(&self) -> bool {
        !self.unresolved.is_empty() || self.strata.iter().any(|s| s.sheet_count == Count::Unresolved)
    }
}

/// Flats of the restricted arrangement of a supported pair, with the rules
/// that turn them into descendants.
#[derive(Clone, Debug)]
pub struct RegularQuotient {
    pub pair: SymmetricPair,
    pub roots: RestrictedRootSystem,
    pub lattice: FlatLattice,
    family: Family,
}

impl RegularQuotient {
    pub fn new(spec: &PairSpec) -> Result<Self> {
        Self::with_limit(spec, limit_for_rank_guard(DEFAULT_RANK_GUARD))
    }

    /// As [`RegularQuotient::new`] with an explicit Weyl enumeration limit.
    pub fn with_limit(spec: &PairSpec, limit: u128) -> Result<Self> {
        let family = Family::of(spec)?;
        let pair = catalog_pair(spec)?;
        let roots = restricted_root_system_with_limit(&pair, limit)?;
        let lattice = flat_lattice(&roots.base, &roots.little_weyl)?;
        Ok(RegularQuotient { pair, roots, lattice, family })
    }

    pub fn dim(&self) -> usize {
        self.roots.base.ambient_dim
    }

    pub fn pattern(&self, flat: &Flat) -> Result<CoordinatePattern> {
        coordinate_pattern(flat, self.dim(), !self.family.type_a(), self.family.type_a())
    }

    pub fn descendant(&self, flat: &Flat) -> Result<Descendant> {
        let pattern = self.pattern(flat)?;
        let spec = &self.pair.spec;
        if let Family::Diag(g) = self.family {
            if g != DiagKind::Gl {
                // the Levi is read off the vanishing roots
                let mut factors = Vec::new();
                let s = self.roots.base.subsystem(&flat.vanishing_roots)?;
                if !s.is_empty() {
                    factors.push(FactorDescriptor { kind: FactorKind::Diag(s.type_label.clone()), provenance: Vec::new() });
                }
                factors.push(FactorDescriptor { kind: FactorKind::Torus(flat.dim()), provenance: Vec::new() });
                return Ok(Descendant { factors, coupling: Coupling::None, pattern });
            }
        }
        let mut factors = Vec::new();
        let pair_factor = |s: PairSpec, prov: Vec<usize>| FactorDescriptor { kind: FactorKind::Pair(s), provenance: prov };
        let m0 = pattern.zero.len();
        if m0 > 0 {
            let zero_pair = match (spec, self.family) {
                (&PairSpec::AIII { group, .. }, Family::AiiiEven) => PairSpec::AIII { group, n: 2 * m0, m: m0 },
                (&PairSpec::AIII { group, .. }, Family::AiiiOdd) => PairSpec::AIII { group, n: 2 * m0 + 1, m: m0 },
                (_, Family::Ci) => PairSpec::CI { n: m0 },
                (_, Family::BdiSplit) => PairSpec::BDI { n: 2 * m0, m: m0 },
                _ => return Err(Error::UnrecognizedComponent(format!("zero coordinates for {spec}"))),
            };
            zero_pair.validate().map_err(|_| Error::UnrecognizedComponent(format!("zero block of size {m0} for {spec}")))?;
            factors.push(pair_factor(zero_pair, pattern.zero.clone()));
        }
        let mut singletons = Vec::new();
        for b in &pattern.blocks {
            let prov: Vec<usize> = b.iter().map(|&(i, _)| i).collect();
            let k = b.len();
            if k == 1 {
                singletons.extend(prov);
                continue;
            }
            let kind = match self.family {
                Family::AiiiEven | Family::AiiiOdd | Family::Diag(DiagKind::Gl) => FactorKind::Pair(PairSpec::DIAG { g: DiagKind::Gl, n: k }),
                Family::Ai | Family::Ci | Family::BdiSplit => FactorKind::Pair(PairSpec::AI { group: GroupKind::GL, n: k }),
                Family::Diag(_) => unreachable!("handled above"),
            };
            factors.push(FactorDescriptor { kind, provenance: prov });
        }
        if !singletons.is_empty() {
            factors.push(FactorDescriptor { kind: FactorKind::Torus(singletons.len()), provenance: singletons });
        }
        if factors.is_empty() {
            factors.push(FactorDescriptor { kind: FactorKind::Torus(0), provenance: Vec::new() });
        }
        let coupling = match self.family {
            Family::Ai => Coupling::SDet,
            Family::Ci => Coupling::OFree,
            Family::BdiSplit => Coupling::SoSoSplit,
            _ => Coupling::None,
        };
        Ok(Descendant { factors, coupling, pattern })
    }

    /// Number of regular nilpotent `H_L`-orbits of the descendant.
    pub fn sheet_count(&self, d: &Descendant) -> Count {
        let p = &d.pattern;
        let all_even = p.blocks.iter().all(|b| b.len() % 2 == 0);
        let m0 = p.zero.len();
        Count::Known(match self.family {
            Family::AiiiEven | Family::Ci => 1 + u32::from(m0 > 0),
            Family::AiiiOdd | Family::Diag(_) => 1,
            Family::Ai => 1 + u32::from(all_even),
            Family::BdiSplit => match (m0, all_even) {
                (0, e) => 1 + u32::from(e),
                (m, true) if m % 2 == 0 => 4,
                _ => 2,
            },
        })
    }

    pub fn sheets_of_flat(&self, flat: &Flat) -> Result<Count> {
        Ok(self.sheet_count(&self.descendant(flat)?))
    }

    /// Flat through a point of `a` (in root coordinates).
    pub fn flat_at(&self, u: &[crate::Q]) -> Result<&Flat> {
        let s = vanishing_set_at(&self.roots, u);
        let i = self.lattice.find(&s).ok_or_else(|| Error::UnrecognizedComponent(format!("no flat with vanishing set {s:?}")))?;
        Ok(&self.lattice.flats[i])
    }

    pub fn sheets_at(&self, u: &[crate::Q]) -> Result<Count> {
        self.sheets_of_flat(self.flat_at(u)?)
    }

    pub fn equations(&self, p: &CoordinatePattern) -> String {
        let var = |i: usize| if self.family.type_a() { format!("e{}", i + 1) } else { format!("d{}", i + 1) };
        let mut parts: Vec<String> = p.zero.iter().map(|&i| format!("{} = 0", var(i))).collect();
        for b in p.blocks.iter().filter(|b| b.len() > 1) {
            let terms: Vec<String> = b.iter().map(|&(i, s)| if s < 0 { format!("-{}", var(i)) } else { var(i) }).collect();
            parts.push(terms.join(" = "));
        }
        if parts.is_empty() {
            "generic".to_string()
        } else {
            parts.join(", ")
        }
    }

    pub fn gluing_pattern(&self) -> Result<GluingPattern> {
        let mut strata = Vec::new();
        for &i in &self.lattice.representatives {
            let flat = self.lattice.flats[i].clone();
            let descendant = self.descendant(&flat)?;
            let sheet_count = self.sheet_count(&descendant);
            let s_type = self.roots.base.subsystem(&flat.vanishing_roots)?.type_label;
            strata.push(Stratum { codim: self.lattice.codim(&flat), flat, s_type, descendant, sheet_count });
        }
        // all flats, to test containment in W-translates
        let counts: Vec<Count> = self.lattice.flats.iter().map(|f| self.sheets_of_flat(f)).collect::<Result<_>>()?;
        let multi = |c: &Count| c.known().is_some_and(|k| k >= 2);
        let mut glued_locus = Vec::new();
        for (si, s) in strata.iter().enumerate() {
            if !multi(&s.sheet_count) {
                continue;
            }
            let v = &s.flat.vanishing_roots;
            let dominated = self.lattice.flats.iter().zip(&counts).any(|(g, c)| {
                multi(c) && g.vanishing_roots.len() < v.len() && g.vanishing_roots.iter().all(|r| v.binary_search(r).is_ok())
            });
            if !dominated {
                glued_locus.push(GluedComponent { stratum: si, equations: self.equations(&s.descendant.pattern) });
            }
        }
        let max = strata.iter().filter_map(|s| s.sheet_count.known()).max().unwrap_or(1);
        let mut unresolved = Vec::new();
        let summary = match max {
            1 => "regular quotient equals the GIT quotient".to_string(),
            2 if self.roots.base.rank() == 1 && glued_locus.len() == 1 && glued_locus[0].equations != "generic" => {
                "c ⊔_U c with U = complement of Z; Z is the origin: affine line with doubled origin".to_string()
            }
            2 => "c ⊔_U c with U = complement of Z".to_string(),
            _ => {
                unresolved.push("gluing of the four sheets over the 4-sheet strata".to_string());
                "per-stratum sheet table".to_string()
            }
        };
        Ok(GluingPattern { spec: self.pair.spec.clone(), strata, glued_locus, summary, unresolved })
    }
}

fn vanishing_set_at(rs: &RestrictedRootSystem, u: &[crate::Q]) -> Vec<usize> {
    vanishing_set(&rs.base, &[u.to_vec()])
        .into_iter()
        .collect()
}

pub fn gluing_pattern(spec: &PairSpec) -> Result<GluingPattern> {
    RegularQuotient::new(spec)?.gluing_pattern()
}

pub fn descendant(spec: &PairSpec, flat: &Flat) -> Result<Descendant> {
    RegularQuotient::new(spec)?.descendant(flat)
}
