use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// Automorphism of a [`FiniteGroup`] as a permutation of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAutomorphism {
    perm: Vec<usize>,
}

impl FiniteAutomorphism {
    /// Validates bijectivity and `σ(xy) = σ(x)σ(y)` on all pairs.
    pub fn new(g: &FiniteGroup, perm: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if perm.len() != n {
            return Err(Error::InvalidAutomorphism(format!(
                "{} images for a group of order {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &y in &perm {
            if y >= n || std::mem::replace(&mut seen[y], true) {
                return Err(Error::InvalidAutomorphism("not a bijection".into()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if perm[g.mul(x, y)] != g.mul(perm[x], perm[y]) {
                    return Err(Error::InvalidAutomorphism(format!(
                        "σ({}·{}) ≠ σ({})·σ({})",
                        x + 1,
                        y + 1,
                        x + 1,
                        y + 1
                    )));
                }
            }
        }
        Ok(FiniteAutomorphism { perm })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        FiniteAutomorphism {
            perm: (0..g.order()).collect(),
        }
    }

    /// `i_h : x ↦ h x h⁻¹`.
    pub fn inner(g: &FiniteGroup, h: usize) -> Self {
        FiniteAutomorphism {
            perm: (0..g.order()).map(|x| g.conjugate(h, x)).collect(),
        }
    }

    /// The homomorphism determined by images of the group's recorded
    /// generators, extended along words and then validated.
    pub fn from_generator_images(g: &FiniteGroup, images: &[usize]) -> Result<Self> {
        let gens = g.generators();
        if images.len() != gens.len() {
            return Err(Error::InvalidAutomorphism(format!(
                "{} generator images for {} generators",
                images.len(),
                gens.len()
            )));
        }
        if images.iter().any(|&y| y >= g.order()) {
            return Err(Error::InvalidAutomorphism("image out of range".into()));
        }
        let perm = extend(g, gens, images).ok_or_else(|| {
            Error::InvalidAutomorphism("generator images do not define a homomorphism".into())
        })?;
        FiniteAutomorphism::new(g, perm)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        FiniteAutomorphism {
            perm: other.perm.iter().map(|&x| self.perm[x]).collect(),
        }
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.perm.len())
            .filter(|&x| self.perm[x] == x)
            .collect()
    }

    /// `φ(h) = h` as a set.
    pub fn preserves(&self, h: &[usize]) -> bool {
        h.iter().all(|&x| h.binary_search(&self.perm[x]).is_ok())
    }

    /// Restriction to a `φ`-invariant subgroup `h`, indexed as in
    /// [`FiniteGroup::subgroup_group`].
    pub fn restrict(
        &self,
        g: &FiniteGroup,
        h: &[usize],
    ) -> Result<(FiniteGroup, FiniteAutomorphism)> {
        let h = g.subgroup(h)?;
        if !self.preserves(&h) {
            return Err(Error::NotInvariant);
        }
        let sub = g.subgroup_group(&h)?;
        let perm = h
            .iter()
            .map(|&x| h.binary_search(&self.perm[x]).expect("invariant"))
            .collect();
        let restricted = FiniteAutomorphism::new(&sub, perm)?;
        Ok((sub, restricted))
    }

    /// Induced automorphism of `g / h`, with the quotient and projection.
    pub fn induce(
        &self,
        g: &FiniteGroup,
        h: &[usize],
    ) -> Result<(FiniteGroup, Vec<usize>, FiniteAutomorphism)> {
        let (q, proj) = g.quotient(h)?;
        if !self.preserves(&g.subgroup(h)?) {
            return Err(Error::NotInvariant);
        }
        let mut perm = vec![usize::MAX; q.order()];
        for x in 0..g.order() {
            perm[proj[x]] = proj[self.perm[x]];
        }
        let induced = FiniteAutomorphism::new(&q, perm)?;
        Ok((q, proj, induced))
    }
}

/// Extends generator images along words; `None` on a conflict.
fn extend(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[g.identity()] = g.identity();
    let mut queue = vec![g.identity()];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let image = g.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = image;
                queue.push(y);
            } else if map[y] != image {
                return None;
            }
        }
        k += 1;
    }
    (queue.len() == n).then_some(map)
}

/// Every automorphism of `g`, found by trying all generator images of
/// matching element orders and keeping those that extend to bijective
/// homomorphisms. Since an automorphism is determined by the images of a
/// generating set, this is exhaustive.
pub fn all_automorphisms(g: &FiniteGroup) -> Vec<FiniteAutomorphism> {
    let gens = g.generators().to_vec();
    let orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..g.order()).filter(|&y| orders[y] == orders[s]).collect())
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = choice
            .iter()
            .zip(&candidates)
            .map(|(&c, cand)| cand[c])
            .collect();
        if let Some(perm) = extend(g, &gens, &images) {
            if let Ok(a) = FiniteAutomorphism::new(g, perm) {
                out.push(a);
            }
        }
        // Odometer increment over the candidate lists.
        let mut k = 0;
        loop {
            if k == gens.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}
