use std::collections::HashMap;
use std::hash::Hash;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

/// Largest order accepted, so that `n × n` tables stay small.
pub const MAX_ORDER: usize = 1024;

/// Associativity is checked on every triple up to this order and on random
/// triples above it.
const FULL_ASSOCIATIVITY_LIMIT: usize = 64;
const RANDOM_TRIPLES: usize = 20_000;

/// Finite group given by its multiplication table over indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a table where `table[x][y]` is the index of `x·y`.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::InvalidGroup(format!(
                "order {n} exceeds {MAX_ORDER}"
            )));
        }
        if let Some(x) = table.iter().position(|row| row.len() != n) {
            return Err(Error::InvalidGroup(format!(
                "row {} has {} entries, expected {n}",
                x + 1,
                table[x].len()
            )));
        }
        if table.iter().flatten().any(|&z| z >= n) {
            return Err(Error::InvalidGroup("entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {} has no inverse", x + 1)))?;
            inverse.push(y);
        }
        let assoc = |x: usize, y: usize, z: usize| table[table[x][y]][z] == table[x][table[y][z]];
        let violation = if n <= FULL_ASSOCIATIVITY_LIMIT {
            (0..n)
                .flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
                .find(|&(x, y, z)| !assoc(x, y, z))
        } else {
            let mut rng = StdRng::seed_from_u64(n as u64);
            (0..RANDOM_TRIPLES)
                .map(|_| {
                    (
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                        rng.gen_range(0..n),
                    )
                })
                .find(|&(x, y, z)| !assoc(x, y, z))
        };
        if let Some((x, y, z)) = violation {
            return Err(Error::InvalidGroup(format!(
                "not associative at ({}, {}, {})",
                x + 1,
                y + 1,
                z + 1
            )));
        }
        let mut g = FiniteGroup {
            name: format!("group of order {n}"),
            table,
            identity,
            inverse,
            generators: Vec::new(),
        };
        g.generators = g.find_generators();
        Ok(g)
    }

    /// Enumerates the group generated by `generators` under `mul`, with the
    /// identity at index 0 and the generators recorded.
    pub fn from_generators<T, M>(identity: T, generators: &[T], mul: M) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        M: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut next = 0;
        while next < elements.len() {
            for s in generators {
                let y = mul(&elements[next], s);
                if !index.contains_key(&y) {
                    if elements.len() == MAX_ORDER {
                        return Err(Error::BadParameter(format!(
                            "group order exceeds {MAX_ORDER}"
                        )));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            next += 1;
        }
        let table = elements
            .iter()
            .map(|x| elements.iter().map(|y| index[&mul(x, y)]).collect())
            .collect();
        let mut g = FiniteGroup::from_table(table)?;
        g.generators = generators.iter().map(|s| index[s]).collect();
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|x| self.mul(x, z) == self.mul(z, x)))
            .collect()
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = vec![self.identity];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
            k += 1;
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }

    /// A small generating set, chosen greedily by decreasing element order.
    fn find_generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.order()).filter(|&x| x != self.identity).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut current = vec![self.identity];
        for x in by_order {
            if current.len() == self.order() {
                break;
            }
            if current.binary_search(&x).is_err() {
                gens.push(x);
                current = self.generated(&gens);
            }
        }
        gens
    }

    /// Checks that a set of indices is a subgroup; returns it sorted.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Vec<usize>> {
        let mut set: Vec<usize> = elements.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.is_empty() || set.iter().any(|&x| x >= self.order()) {
            return Err(Error::NotSubgroup);
        }
        let closed = set.iter().all(|&x| {
            set.binary_search(&self.inv(x)).is_ok()
                && set
                    .iter()
                    .all(|&y| set.binary_search(&self.mul(x, y)).is_ok())
        });
        if closed {
            Ok(set)
        } else {
            Err(Error::NotSubgroup)
        }
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn is_normal(&self, h: &[usize]) -> bool {
        h.iter()
            .all(|&x| (0..self.order()).all(|g| h.binary_search(&self.conjugate(g, x)).is_ok()))
    }

    pub fn is_central(&self, h: &[usize]) -> bool {
        h.iter()
            .all(|&x| (0..self.order()).all(|g| self.mul(g, x) == self.mul(x, g)))
    }

    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let conjugates: Vec<usize> = gens
            .iter()
            .flat_map(|&x| (0..self.order()).map(move |g| (g, x)))
            .map(|(g, x)| self.conjugate(g, x))
            .collect();
        self.generated(&conjugates)
    }

    /// Every normal subgroup, as sorted element lists: the joins of normal
    /// closures of single elements.
    pub fn normal_subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = vec![vec![self.identity]];
        let minimal: Vec<Vec<usize>> = {
            let mut v: Vec<Vec<usize>> = (0..self.order())
                .map(|x| self.normal_closure(&[x]))
                .collect();
            v.sort();
            v.dedup();
            v
        };
        let mut k = 0;
        while k < found.len() {
            for m in &minimal {
                let mut gens = found[k].clone();
                gens.extend(m);
                let join = self.generated(&gens);
                if !found.contains(&join) {
                    found.push(join);
                }
            }
            k += 1;
        }
        found.sort_by_key(|h| (h.len(), h.clone()));
        found
    }

    /// The subgroup `h` as a group in its own right; element `k` of the
    /// result is `h[k]`.
    pub fn subgroup_group(&self, h: &[usize]) -> Result<FiniteGroup> {
        let h = self.subgroup(h)?;
        let pos = |x: usize| h.binary_search(&x).expect("closed under multiplication");
        let table = h
            .iter()
            .map(|&x| h.iter().map(|&y| pos(self.mul(x, y))).collect())
            .collect();
        Ok(FiniteGroup::from_table(table)?.with_name(format!("subgroup of {}", self.name)))
    }

    /// The quotient by a normal subgroup, and the projection sending each
    /// element to its coset index. Cosets are numbered by their smallest
    /// element.
    pub fn quotient(&self, h: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let h = self.subgroup(h)?;
        if !self.is_normal(&h) {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut coset = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x] == usize::MAX {
                for &y in &h {
                    coset[self.mul(x, y)] = reps.len();
                }
                reps.push(x);
            }
        }
        let table = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset[self.mul(a, b)]).collect())
            .collect();
        let q = FiniteGroup::from_table(table)?.with_name(format!("quotient of {}", self.name));
        Ok((q, coset))
    }
}
