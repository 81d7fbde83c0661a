//! Twisted conjugacy classes by full enumeration, and exact checks of the
//! counting statements relating `R(φ)` to subgroups and quotients.

use std::fmt;

use super::automorphism::FiniteAutomorphism;
use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// Orbits of the action `g · x = g x φ(g)⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedClassDecomposition {
    /// Smallest element of each class, in increasing order.
    pub representatives: Vec<usize>,
    /// Class index of every element.
    pub class_of: Vec<usize>,
    /// Number of classes, `R(φ)`.
    pub r: usize,
    /// `|Fix(φ)|`.
    pub fix_count: usize,
}

impl TwistedClassDecomposition {
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.r];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.r];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Union-find over every pair `(g, x)`.
pub fn twisted_classes(g: &FiniteGroup, phi: &FiniteAutomorphism) -> TwistedClassDecomposition {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    for h in 0..n {
        let right = g.inv(phi.apply(h));
        for x in 0..n {
            let y = g.mul(g.mul(h, x), right);
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in 0..n {
        let root = find(&mut parent, x);
        if class_of[root] == usize::MAX {
            class_of[root] = representatives.len();
            representatives.push(x);
        }
        class_of[x] = class_of[root];
    }
    TwistedClassDecomposition {
        r: representatives.len(),
        representatives,
        class_of,
        fix_count: phi.fixed_points().len(),
    }
}

/// `R(i_h ∘ φ)` for every `h`, which must all equal `R(φ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerTwistReport {
    pub r: usize,
    pub r_twisted_by_inner: Vec<usize>,
}

impl InnerTwistReport {
    pub fn holds(&self) -> bool {
        self.r_twisted_by_inner.iter().all(|&r| r == self.r)
    }
}

pub fn check_inner_twist_invariance(g: &FiniteGroup, phi: &FiniteAutomorphism) -> InnerTwistReport {
    InnerTwistReport {
        r: twisted_classes(g, phi).r,
        r_twisted_by_inner: (0..g.order())
            .map(|h| twisted_classes(g, &FiniteAutomorphism::inner(g, h).compose(phi)).r)
            .collect(),
    }
}

/// `R(φ) ≥ R(φ̄)` for the automorphism induced on `G/H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBoundReport {
    pub r: usize,
    pub r_quotient: usize,
}

impl QuotientBoundReport {
    pub fn holds(&self) -> bool {
        self.r >= self.r_quotient
    }
}

/// Requires `H` normal and `φ(H) = H`.
pub fn check_quotient_bound(
    g: &FiniteGroup,
    phi: &FiniteAutomorphism,
    h: &[usize],
) -> Result<QuotientBoundReport> {
    let (q, _, induced) = phi.induce(g, h)?;
    Ok(QuotientBoundReport {
        r: twisted_classes(g, phi).r,
        r_quotient: twisted_classes(&q, &induced).r,
    })
}

/// Outcome of one implication: skipped when its hypothesis fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ItemOutcome {
    NotApplicable(String),
    Holds,
    Fails(String),
}

impl ItemOutcome {
    pub fn is_failure(&self) -> bool {
        matches!(self, ItemOutcome::Fails(_))
    }

    fn check(hypothesis: Option<&str>, conclusion: bool, failure: impl FnOnce() -> String) -> Self {
        match hypothesis {
            Some(why) => ItemOutcome::NotApplicable(why.to_string()),
            None if conclusion => ItemOutcome::Holds,
            None => ItemOutcome::Fails(failure()),
        }
    }
}

impl fmt::Display for ItemOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ItemOutcome::NotApplicable(why) => write!(f, "not applicable ({why})"),
            ItemOutcome::Holds => f.write_str("holds"),
            ItemOutcome::Fails(what) => write!(f, "FAILS: {what}"),
        }
    }
}

/// The three finite-checkable implications for `H ⊴ G` with `φ(H) = H`,
/// `φ' = φ|_H` and `φ̄` induced on `G/H`:
///
/// * `R(φ') = 1 ⟹ |Fix(φ̄)| ≤ |Fix(φ)|`, and in fact `π(Fix φ) = Fix φ̄`;
/// * `R(φ̄) = 1 ⟹ R(φ) ≤ R(φ')`;
/// * `H` central `⟹ R(φ) ≤ R(φ')·R(φ̄)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupBoundsReport {
    pub r: usize,
    pub r_sub: usize,
    pub r_quotient: usize,
    pub fix: usize,
    pub fix_quotient: usize,
    pub central: bool,
    pub fix_bound: ItemOutcome,
    pub trivial_quotient_bound: ItemOutcome,
    pub central_product_bound: ItemOutcome,
}

impl SubgroupBoundsReport {
    pub fn holds(&self) -> bool {
        ![
            &self.fix_bound,
            &self.trivial_quotient_bound,
            &self.central_product_bound,
        ]
        .iter()
        .any(|o| o.is_failure())
    }
}

pub fn check_invariant_subgroup_bounds(
    g: &FiniteGroup,
    phi: &FiniteAutomorphism,
    h: &[usize],
) -> Result<SubgroupBoundsReport> {
    let h = g.subgroup(h)?;
    if !g.is_normal(&h) {
        return Err(Error::NotNormal);
    }
    let (sub, restricted) = phi.restrict(g, &h)?;
    let (q, proj, induced) = phi.induce(g, &h)?;
    let r = twisted_classes(g, phi).r;
    let r_sub = twisted_classes(&sub, &restricted).r;
    let r_quotient = twisted_classes(&q, &induced).r;
    let fix_points = phi.fixed_points();
    let fix = fix_points.len();
    let fix_quotient = induced.fixed_points().len();
    let central = g.is_central(&h);

    let mut projected: Vec<usize> = fix_points.iter().map(|&x| proj[x]).collect();
    projected.sort_unstable();
    projected.dedup();
    let fix_bound = ItemOutcome::check(
        (r_sub != 1).then_some("R(φ|H) ≠ 1"),
        fix_quotient <= fix && projected == induced.fixed_points(),
        || {
            format!(
                "|Fix(φ̄)| = {fix_quotient}, |Fix(φ)| = {fix}, |π(Fix φ)| = {}",
                projected.len()
            )
        },
    );
    let trivial_quotient_bound = ItemOutcome::check(
        (r_quotient != 1).then_some("R(φ̄) ≠ 1"),
        r <= r_sub,
        || format!("R(φ) = {r} > R(φ|H) = {r_sub}"),
    );
    let central_product_bound = ItemOutcome::check(
        (!central).then_some("H not central"),
        r <= r_sub * r_quotient,
        || format!("R(φ) = {r} > {r_sub}·{r_quotient}"),
    );
    Ok(SubgroupBoundsReport {
        r,
        r_sub,
        r_quotient,
        fix,
        fix_quotient,
        central,
        fix_bound,
        trivial_quotient_bound,
        central_product_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::builtins::{cyclic, dihedral, s3};

    fn negation(g: &FiniteGroup) -> FiniteAutomorphism {
        FiniteAutomorphism::new(g, (0..g.order()).map(|x| g.inv(x)).collect()).unwrap()
    }

    #[test]
    fn s3_identity_gives_conjugacy_classes() {
        let g = s3();
        let d = twisted_classes(&g, &FiniteAutomorphism::identity(&g));
        assert_eq!(d.r, 3);
        let mut sizes = d.class_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(d.fix_count, 6);
    }

    #[test]
    fn z4_negation() {
        let g = cyclic(4).unwrap();
        let d = twisted_classes(&g, &negation(&g));
        assert_eq!(d.r, 2);
        assert_eq!(d.fix_count, 2);
        // Elements are 0, 1, 2, 3 in generation order: x ~ x + 2g.
        assert_eq!(d.classes(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn abelian_identity_gives_order() {
        for n in 1..=8 {
            let g = cyclic(n).unwrap();
            assert_eq!(twisted_classes(&g, &FiniteAutomorphism::identity(&g)).r, n);
        }
    }

    #[test]
    fn inner_twist_examples() {
        let g = s3();
        let report = check_inner_twist_invariance(&g, &FiniteAutomorphism::identity(&g));
        assert!(report.holds());
        assert_eq!(report.r_twisted_by_inner, vec![3; 6]);
        let d10 = dihedral(5).unwrap();
        assert!(check_inner_twist_invariance(&d10, &FiniteAutomorphism::identity(&d10)).holds());
        let trivial = cyclic(1).unwrap();
        assert!(
            check_inner_twist_invariance(&trivial, &FiniteAutomorphism::identity(&trivial)).holds()
        );
    }

    #[test]
    fn quotient_bound_examples() {
        let g = s3();
        let id = FiniteAutomorphism::identity(&g);
        let a3: Vec<usize> = (0..6).filter(|&x| g.element_order(x) != 2).collect();
        let report = check_quotient_bound(&g, &id, &a3).unwrap();
        assert_eq!((report.r, report.r_quotient), (3, 2));
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(check_quotient_bound(&g, &id, &all).unwrap().r_quotient, 1);
        let trivial = check_quotient_bound(&g, &id, &[g.identity()]).unwrap();
        assert_eq!(trivial.r, trivial.r_quotient);
        let order2: Vec<usize> = g.generated(&[(0..6).find(|&x| g.element_order(x) == 2).unwrap()]);
        assert!(matches!(
            check_quotient_bound(&g, &id, &order2),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn subgroup_bounds_on_z6() {
        let g = cyclic(6).unwrap();
        let neg = negation(&g);
        let z3 = g.generated(&[2]);
        let report = check_invariant_subgroup_bounds(&g, &neg, &z3).unwrap();
        assert!(report.holds());
        assert!(report.central);
        // R(−1 on Z6) = |Z6 / 2Z6| = 2; on Z3 it is 1; on Z2 it is 2.
        assert_eq!((report.r, report.r_sub, report.r_quotient), (2, 1, 2));
        assert_eq!(report.fix_bound, ItemOutcome::Holds);
        assert!(matches!(
            report.trivial_quotient_bound,
            ItemOutcome::NotApplicable(_)
        ));
        assert_eq!(report.central_product_bound, ItemOutcome::Holds);
    }

    #[test]
    fn subgroup_bounds_trivial_subgroup_is_equality() {
        let g = s3();
        let id = FiniteAutomorphism::identity(&g);
        let report = check_invariant_subgroup_bounds(&g, &id, &[g.identity()]).unwrap();
        assert_eq!(report.r, report.r_quotient);
        assert_eq!(report.fix, report.fix_quotient);
        assert!(report.holds());
    }

    #[test]
    fn non_invariant_subgroup_rejected() {
        // Z2 × Z2 with a swap of two factors does not preserve either factor.
        let g = FiniteGroup::from_generators((0u8, 0u8), &[(1, 0), (0, 1)], |a, b| {
            ((a.0 + b.0) % 2, (a.1 + b.1) % 2)
        })
        .unwrap();
        let (x, y) = (g.generators()[0], g.generators()[1]);
        let swap = FiniteAutomorphism::from_generator_images(&g, &[y, x]).unwrap();
        let h = g.generated(&[x]);
        assert!(matches!(
            check_quotient_bound(&g, &swap, &h),
            Err(Error::NotInvariant)
        ));
        assert!(matches!(
            check_invariant_subgroup_bounds(&g, &swap, &h),
            Err(Error::NotInvariant)
        ));
    }
}
