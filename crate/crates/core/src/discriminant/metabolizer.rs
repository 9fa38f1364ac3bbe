//! Exhaustive search for metabolizers of a linking form.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Roots;

use super::{DiscriminantError, DiscriminantForm, SmallForm};

/// A subgroup `H ≤ G` with `|H|² = |G|` on which `λ` vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metabolizer {
    /// Generators as coefficient vectors over the cyclic factors of `G`.
    pub generators: Vec<Vec<u64>>,
    pub order: u64,
}

impl DiscriminantForm {
    /// Depth-first search over isotropic subgroups, each grown one generator
    /// at a time in increasing element order; every subgroup is visited once.
    /// A metabolizer needs at most `rank()` generators, and any isotropic
    /// subgroup whose order does not divide `√|G|` is pruned.
    ///
    /// Returns `Ok(None)` when `|G|` is not a square or no subgroup qualifies.
    pub fn find_metabolizer(&self, bound: u64) -> Result<Option<Metabolizer>, DiscriminantError> {
        let order = self.order();
        let too_large = || DiscriminantError::GroupTooLarge { order: order.clone(), bound };
        if order > BigInt::from(bound) {
            return Err(too_large());
        }
        let small = self.small().ok_or_else(too_large)?;
        let size = small.size();
        let root = size.sqrt();
        if root * root != size {
            return Ok(None);
        }
        if size == 1 {
            return Ok(Some(Metabolizer { generators: Vec::new(), order: 1 }));
        }
        let search = Search::new(&small, root);
        Ok(search.run())
    }
}

struct Search<'a> {
    small: &'a SmallForm,
    target: u64,
    /// Indices of nonzero elements with `λ(x, x) = 0`, ascending.
    isotropic: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(small: &'a SmallForm, target: u64) -> Self {
        let isotropic = (1..small.size())
            .filter(|&i| {
                let x = small.decode(i);
                small.linking(&x, &x) == 0
            })
            .collect();
        Self { small, target, isotropic }
    }

    fn run(&self) -> Option<Metabolizer> {
        let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut gens = Vec::new();
        let subgroup = vec![0u64];
        self.extend(&subgroup, &mut gens, &mut seen)
    }

    fn extend(
        &self,
        subgroup: &[u64],
        gens: &mut Vec<u64>,
        seen: &mut BTreeSet<Vec<u64>>,
    ) -> Option<Metabolizer> {
        for &g in &self.isotropic {
            if subgroup.binary_search(&g).is_ok() {
                continue;
            }
            let gv = self.small.decode(g);
            let orthogonal = gens.iter().all(|&h| self.small.linking(&gv, &self.small.decode(h)) == 0);
            if !orthogonal {
                continue;
            }
            let Some(next) = self.span_with(subgroup, &gv) else {
                continue;
            };
            if !seen.insert(next.clone()) {
                continue;
            }
            gens.push(g);
            if next.len() as u64 == self.target {
                let generators = gens.iter().map(|&i| self.small.decode(i)).collect();
                return Some(Metabolizer { generators, order: self.target });
            }
            if let Some(found) = self.extend(&next, gens, seen) {
                return Some(found);
            }
            gens.pop();
        }
        None
    }

    /// Sorted element indices of `⟨subgroup, g⟩`, or `None` once its order can
    /// no longer divide the target.
    fn span_with(&self, subgroup: &[u64], g: &[u64]) -> Option<Vec<u64>> {
        let mut out: BTreeSet<u64> = BTreeSet::new();
        let mut multiple = vec![0u64; g.len()];
        loop {
            for &h in subgroup {
                let v = self.small.add(&self.small.decode(h), &multiple);
                out.insert(self.small.encode(&v));
            }
            if out.len() as u64 > self.target {
                return None;
            }
            multiple = self.small.add(&multiple, g);
            if subgroup.binary_search(&self.small.encode(&multiple)).is_ok() {
                break;
            }
        }
        let n = out.len() as u64;
        (self.target % n == 0).then(|| out.into_iter().collect())
    }
}
