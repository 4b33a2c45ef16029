use crate::error::{Error, Result};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
    E,
    F,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        Ok(match s {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "BC" => Family::BC,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        })
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC => "BC",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        }
    }
}

/// An irreducible finite type such as `C2` or `E7`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C | Family::BC => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Component { family, rank })
        } else {
            Err(Error::RankOutOfRange { ty: family.symbol().to_string(), rank })
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C | Family::BC => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Number of roots, counting both `α` and `2α` for BC.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::BC => 2 * n * n + 2 * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Fundamental degrees of the invariant polynomials.
    pub fn degrees(&self) -> Vec<u32> {
        let n = self.rank as u32;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C | Family::BC => (1..=n).map(|k| 2 * k).collect(),
            Family::D => {
                let mut v: Vec<u32> = (1..n).map(|k| 2 * k).collect();
                v.push(n);
                v
            }
            Family::E => match n {
                6 => [2, 5, 6, 8, 9, 12].to_vec(),
                7 => [2, 6, 8, 10, 12, 14, 18].to_vec(),
                _ => [2, 8, 12, 14, 18, 20, 24, 30].to_vec(),
            },
            Family::F => [2, 6, 8, 12].to_vec(),
            Family::G => [2, 6].to_vec(),
        }
    }

    /// Canonical member of the isomorphism class: the low-rank coincidences
    /// `B1 = C1 = A1`, `B2 = C2`, `D2 = A1xA1`, `D3 = A3` are folded.
    fn normalize(self) -> Vec<Component> {
        use Family::*;
        match (self.family, self.rank) {
            (B, 1) | (C, 1) => [Component { family: A, rank: 1 }].to_vec(),
            (B, 2) => [Component { family: C, rank: 2 }].to_vec(),
            (D, 2) => [Component { family: A, rank: 1 }; 2].to_vec(),
            (D, 3) => [Component { family: A, rank: 3 }].to_vec(),
            _ => [self].to_vec(),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.symbol(), self.rank)
    }
}

/// Product of irreducible types; empty for the rank-zero system.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Default)]
pub struct TypeLabel(pub Vec<Component>);

impl TypeLabel {
    pub fn new(mut comps: Vec<Component>) -> Self {
        comps.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.family.cmp(&b.family)));
        TypeLabel(comps)
    }

    pub fn single(family: Family, rank: usize) -> Result<Self> {
        Ok(TypeLabel(alloc::vec![Component::new(family, rank)?]))
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|c| c.rank).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weyl_order(&self) -> u128 {
        self.0.iter().map(|c| c.weyl_order()).product()
    }

    pub fn root_count(&self) -> usize {
        self.0.iter().map(|c| c.root_count()).sum()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.0.iter().flat_map(|c| c.degrees()).collect()
    }

    pub fn normalized(&self) -> TypeLabel {
        TypeLabel::new(self.0.iter().flat_map(|c| c.normalize()).collect())
    }

    /// Equal up to the low-rank isomorphisms of abstract root systems.
    pub fn is_alias_of(&self, other: &TypeLabel) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn parse(s: &str) -> Result<TypeLabel> {
        let s = s.trim();
        if s == "trivial" || s.is_empty() {
            return Ok(TypeLabel::default());
        }
        let mut comps = Vec::new();
        for part in s.split(['x', '×']) {
            let part = part.trim();
            let split = part.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::UnknownType(part.to_string()))?;
            let fam = Family::parse(&part[..split])?;
            let rank: usize = part[split..].parse().map_err(|_| Error::UnknownType(part.to_string()))?;
            comps.push(Component::new(fam, rank)?);
        }
        Ok(TypeLabel::new(comps))
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.0.iter().map(|c| format!("{c}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_roundtrip() {
        for s in ["C2", "A1xA1", "BC3", "E6", "trivial", "D4xA2xG2"] {
            let t = TypeLabel::parse(s).unwrap();
            assert_eq!(TypeLabel::parse(&format!("{t}")).unwrap(), t);
        }
        assert!(TypeLabel::parse("D1").is_err());
        assert!(TypeLabel::parse("Q3").is_err());
    }

    #[test]
    fn aliases() {
        let d2 = TypeLabel::parse("D2").unwrap();
        assert!(d2.is_alias_of(&TypeLabel::parse("A1xA1").unwrap()));
        assert!(TypeLabel::parse("B2").unwrap().is_alias_of(&TypeLabel::parse("C2").unwrap()));
        assert!(!TypeLabel::parse("B3").unwrap().is_alias_of(&TypeLabel::parse("C3").unwrap()));
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(TypeLabel::parse("C2").unwrap().weyl_order(), 8);
        assert_eq!(TypeLabel::parse("A2").unwrap().weyl_order(), 6);
        assert_eq!(TypeLabel::parse("D4").unwrap().weyl_order(), 192);
    }
}
