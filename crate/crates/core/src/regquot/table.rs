use super::{Count, FactorDescriptor, FactorKind};
use crate::sympair::PairSpec;

/// Regular nilpotent orbits of a simple pair with `H = K`, up to isogeny.
pub fn orbit_count_of_pair(spec: &PairSpec) -> Count {
    Count::Known(match *spec {
        PairSpec::AI { n, .. } => 1 + u32::from(n % 2 == 0),
        PairSpec::AIII { n, m, .. } => 1 + u32::from(n == 2 * m),
        PairSpec::CI { .. } => 2,
        PairSpec::AII { .. } | PairSpec::CII { .. } => 1,
        // (SO_3, SO_2) is isogenous to (SL_2, SO_2)
        PairSpec::BDI { n: 3, m: 1 } => 2,
        PairSpec::BDI { n, m } if n == 2 * m => {
            if m % 2 == 0 {
                4
            } else {
                2
            }
        }
        // with m ≤ n − m, odd n lists only the even factor as the smaller one
        PairSpec::BDI { m, .. } => 1 + u32::from(m % 2 == 0),
        PairSpec::DIII { n } => 1 + u32::from(n % 2 == 0),
        PairSpec::DIAG { .. } => 1,
        PairSpec::EXC { ref label } => match label.as_str() {
            "EV" | "EVII" => 2,
            _ => 1,
        },
    })
}

pub fn orbit_count(d: &FactorDescriptor) -> Count {
    match &d.kind {
        FactorKind::Pair(s) => orbit_count_of_pair(s),
        FactorKind::Diag(_) | FactorKind::Torus(_) => Count::Known(1),
    }
}
