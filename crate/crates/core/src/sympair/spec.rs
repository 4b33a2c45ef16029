use crate::error::{Error, Result};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum GroupKind {
    GL,
    SL,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum DiagKind {
    Gl,
    Sl,
    Sp,
    So,
}

/// Exceptional rows of the classification table.
pub const EXCEPTIONAL_LABELS: [&str; 12] =
    ["EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G"];

/// A catalogued symmetric pair.
///
/// Conventions: `AI` is `(SL_n, SO_n)` (or `GL_n, O_n`); `AII` is
/// `(SL_{2n}, Sp_{2n})`; `AIII` is `(SL_n, S(GL_m × GL_{n−m}))` or its `GL`
/// version; `CI` is `(Sp_{2n}, GL_n)`; `CII` is `(Sp_{2n}, Sp_{2m} × Sp_{2(n−m)})`;
/// `BDI` is `(SO_n, SO_m × SO_{n−m})`; `DIII` is `(SO_{2n}, GL_n)`; `DIAG`
/// is `(G₁ × G₁, ΔG₁)` where `n` is the matrix size for `gl, sl, so` and the
/// rank for `sp`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum PairSpec {
    AI { group: GroupKind, n: usize },
    AII { n: usize },
    AIII { group: GroupKind, n: usize, m: usize },
    CI { n: usize },
    CII { n: usize, m: usize },
    BDI { n: usize, m: usize },
    DIII { n: usize },
    DIAG { g: DiagKind, n: usize },
    EXC { label: String },
}

impl GroupKind {
    fn parse(s: &str) -> Result<Self> {
        match s {
            "GL" | "gl" => Ok(GroupKind::GL),
            "SL" | "sl" => Ok(GroupKind::SL),
            _ => Err(Error::Parse(format!("group must be GL or SL, got {s}"))),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::GL => "GL",
            GroupKind::SL => "SL",
        })
    }
}

impl DiagKind {
    fn parse(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(DiagKind::Gl),
            "sl" => Ok(DiagKind::Sl),
            "sp" => Ok(DiagKind::Sp),
            "so" => Ok(DiagKind::So),
            _ => Err(Error::Parse(format!("g must be one of gl, sl, sp, so, got {s}"))),
        }
    }
}

impl fmt::Display for DiagKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagKind::Gl => "gl",
            DiagKind::Sl => "sl",
            DiagKind::Sp => "sp",
            DiagKind::So => "so",
        })
    }
}

fn bad(s: String) -> Error {
    Error::BadParameters(s)
}

impl PairSpec {
    /// Parse `FAMILY:key=value,...`, e.g. `AIII:group=GL,n=4,m=2`.
    pub fn parse(s: &str) -> Result<PairSpec> {
        let (fam, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let mut kv: BTreeMap<&str, &str> = BTreeMap::new();
        for item in rest.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {item}")))?;
            if kv.insert(k.trim(), v.trim()).is_some() {
                return Err(Error::Parse(format!("duplicate key {k}")));
            }
        }
        let num = |kv: &mut BTreeMap<&str, &str>, k: &str| -> Result<usize> {
            let v = kv.remove(k).ok_or_else(|| Error::Parse(format!("{fam} needs {k}=")))?;
            v.parse().map_err(|_| Error::Parse(format!("{k} must be a nonnegative integer, got {v}")))
        };
        let group = |kv: &mut BTreeMap<&str, &str>| -> Result<GroupKind> {
            kv.remove("group").map_or(Ok(GroupKind::SL), GroupKind::parse)
        };
        let spec = match fam {
            "AI" => PairSpec::AI { group: group(&mut kv)?, n: num(&mut kv, "n")? },
            "AII" => PairSpec::AII { n: num(&mut kv, "n")? },
            "AIII" => PairSpec::AIII { group: group(&mut kv)?, n: num(&mut kv, "n")?, m: num(&mut kv, "m")? },
            "CI" => PairSpec::CI { n: num(&mut kv, "n")? },
            "CII" => PairSpec::CII { n: num(&mut kv, "n")?, m: num(&mut kv, "m")? },
            "BDI" => PairSpec::BDI { n: num(&mut kv, "n")?, m: num(&mut kv, "m")? },
            "DIII" => PairSpec::DIII { n: num(&mut kv, "n")? },
            "DIAG" => {
                let g = DiagKind::parse(kv.remove("g").ok_or_else(|| Error::Parse("DIAG needs g=".to_string()))?)?;
                PairSpec::DIAG { g, n: num(&mut kv, "n")? }
            }
            "EXC" => {
                let label = kv.remove("label").ok_or_else(|| Error::Parse("EXC needs label=".to_string()))?;
                PairSpec::EXC { label: label.to_string() }
            }
            _ => return Err(Error::Parse(format!("unknown family {fam}"))),
        };
        if let Some(k) = kv.keys().next() {
            return Err(Error::Parse(format!("unexpected key {k} for {fam}")));
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            PairSpec::AI { n, .. } if *n < 2 => Err(bad("AI needs n >= 2".to_string())),
            PairSpec::AII { n } if *n < 2 => Err(bad("AII needs n >= 2".to_string())),
            PairSpec::AIII { n, m, .. } if *m < 1 || 2 * m > *n => Err(bad("AIII needs 1 <= m <= n-m".to_string())),
            PairSpec::CI { n } if *n < 1 => Err(bad("CI needs n >= 1".to_string())),
            PairSpec::CII { n, m } if *m < 1 || 2 * m > *n => Err(bad("CII needs 1 <= m <= n-m".to_string())),
            PairSpec::BDI { n, m } if *n < 3 || *m < 1 || 2 * m > *n => Err(bad("BDI needs n >= 3 and 1 <= m <= n-m".to_string())),
            PairSpec::DIII { n } if *n < 2 => Err(bad("DIII needs n >= 2".to_string())),
            PairSpec::DIAG { g, n } => {
                let min = match g {
                    DiagKind::Gl | DiagKind::Sp => 1,
                    DiagKind::Sl => 2,
                    DiagKind::So => 3,
                };
                if *n < min {
                    Err(bad(format!("DIAG {g} needs n >= {min}")))
                } else {
                    Ok(())
                }
            }
            PairSpec::EXC { label } if !EXCEPTIONAL_LABELS.contains(&label.as_str()) => {
                Err(Error::Parse(format!("unknown exceptional label {label}")))
            }
            _ => Ok(()),
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            PairSpec::AI { .. } => "AI",
            PairSpec::AII { .. } => "AII",
            PairSpec::AIII { .. } => "AIII",
            PairSpec::CI { .. } => "CI",
            PairSpec::CII { .. } => "CII",
            PairSpec::BDI { .. } => "BDI",
            PairSpec::DIII { .. } => "DIII",
            PairSpec::DIAG { .. } => "DIAG",
            PairSpec::EXC { .. } => "EXC",
        }
    }

    /// Every classical spec with the size parameter at most `max_n`.
    pub fn sweep(max_n: usize) -> Vec<PairSpec> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for group in [GroupKind::SL, GroupKind::GL] {
                out.push(PairSpec::AI { group, n });
                for m in 1..=n / 2 {
                    out.push(PairSpec::AIII { group, n, m });
                }
            }
            out.push(PairSpec::AII { n });
            out.push(PairSpec::CI { n });
            for m in 1..=n / 2 {
                out.push(PairSpec::CII { n, m });
                out.push(PairSpec::BDI { n, m });
            }
            out.push(PairSpec::DIII { n });
            for g in [DiagKind::Gl, DiagKind::Sl, DiagKind::Sp, DiagKind::So] {
                out.push(PairSpec::DIAG { g, n });
            }
        }
        out.retain(|s| s.validate().is_ok());
        out
    }
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairSpec::AI { group, n } => write!(f, "AI:group={group},n={n}"),
            PairSpec::AII { n } => write!(f, "AII:n={n}"),
            PairSpec::AIII { group, n, m } => write!(f, "AIII:group={group},n={n},m={m}"),
            PairSpec::CI { n } => write!(f, "CI:n={n}"),
            PairSpec::CII { n, m } => write!(f, "CII:n={n},m={m}"),
            PairSpec::BDI { n, m } => write!(f, "BDI:n={n},m={m}"),
            PairSpec::DIII { n } => write!(f, "DIII:n={n}"),
            PairSpec::DIAG { g, n } => write!(f, "DIAG:g={g},n={n}"),
            PairSpec::EXC { label } => write!(f, "EXC:label={label}"),
        }
    }
}

impl core::str::FromStr for PairSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PairSpec::parse(s)
    }
}
