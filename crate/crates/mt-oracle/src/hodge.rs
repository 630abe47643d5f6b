//! Hodge numbers of the adjoint representation.
//!
//! A cocharacter of the adjoint torus grades the complexified Lie algebra:
//! each root space sits in degree equal to its pairing with the cocharacter
//! and the Cartan subalgebra sits in degree zero. The histogram of degrees
//! is the list of Hodge numbers h^{p,-p} of the weight-zero structure the
//! cocharacter defines, computed by direct enumeration of the roots.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Int, Rat};
use crate::error::Result;
use crate::lifting::Ambient;
use crate::root_datum::{Cocharacter, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeNumbers {
    counts: BTreeMap<Int, u64>,
}

impl HodgeNumbers {
    fn from_levels(levels: impl Iterator<Item = Int>, cartan_rank: u64) -> HodgeNumbers {
        let mut counts: BTreeMap<Int, u64> = BTreeMap::new();
        for p in levels {
            *counts.entry(p).or_insert(0) += 1;
        }
        if cartan_rank > 0 {
            *counts.entry(Int::from(0)).or_insert(0) += cartan_rank;
        }
        HodgeNumbers { counts }
    }

    pub fn get(&self, p: i64) -> u64 {
        self.counts.get(&Int::from(p)).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.counts.values().sum()
    }

    /// (degree, count) pairs in increasing degree, zero counts omitted.
    pub fn levels(&self) -> Vec<(Int, u64)> {
        self.counts.iter().filter(|(_, &c)| c > 0).map(|(p, &c)| (p.clone(), c)).collect()
    }

    /// Hodge symmetry h^{p,-p} = h^{-p,p}; holds because roots come in
    /// opposite pairs.
    pub fn is_symmetric(&self) -> bool {
        self.counts.iter().all(|(p, &c)| {
            let neg = -p.clone();
            self.counts.get(&neg).copied().unwrap_or(0) == c
        })
    }
}

impl fmt::Display for HodgeNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.levels().into_iter().rev() {
            if !first {
                write!(f, "  ")?;
            }
            first = false;
            write!(f, "h^({},{}) = {}", p, -p.clone(), c)?;
        }
        Ok(())
    }
}

/// Hodge numbers of the adjoint representation of a single factor.
pub fn adjoint_hodge_numbers(rs: &RootSystem, mu: &Cocharacter) -> Result<HodgeNumbers> {
    let levels = rs
        .roots()
        .iter()
        .map(|root| rs.pairing_int(mu.coords(), root))
        .collect::<Result<Vec<_>>>()?;
    Ok(HodgeNumbers::from_levels(levels.into_iter(), rs.rank() as u64))
}

/// Hodge numbers of the adjoint representation of a product.
pub fn product_adjoint_hodge_numbers(ambient: &Ambient, mu: &Cocharacter) -> Result<HodgeNumbers> {
    let coords: &[Rat] = mu.coords();
    let mut levels = Vec::new();
    for root in ambient.all_roots() {
        let p = crate::arith::dot_rat_int(coords, &root);
        levels.push(crate::arith::rat_to_int(&p)?);
    }
    Ok(HodgeNumbers::from_levels(levels.into_iter(), ambient.total_rank() as u64))
}
