//! Permutation groups on `0..n`: a deterministic incremental Schreier–Sims.
//!
//! Permutations are stored as image arrays, `p[x]` is the image of `x`.
//! `compose(a, b)` applies `a` first, then `b`.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// `x -> b[a[x]]`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    a.iter().map(|&x| b[x]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps `base` to `b`.
    transversal: Vec<Option<Perm>>,
}

/// Base and strong generating set of a permutation group.
pub struct StabChain {
    n: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(n: usize, generators: &[Perm]) -> StabChain {
        let mut chain = StabChain { n, levels: Vec::new() };
        for g in generators {
            chain.extend(0, g.clone());
        }
        chain
    }

    fn strip(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g[level.base];
            match &level.transversal[beta] {
                Some(u) => g = compose(&g, &inverse(u)),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    fn extend(&mut self, i: usize, g: Perm) {
        let (residue, _) = self.strip(g.clone(), i);
        if is_identity(&residue) {
            return;
        }
        if i == self.levels.len() {
            let base = g.iter().enumerate().find(|&(x, &y)| x != y).map(|(x, _)| x).expect("non-identity");
            let mut transversal = vec![None; self.n];
            transversal[base] = Some(identity(self.n));
            self.levels.push(Level { base, gens: Vec::new(), orbit: vec![base], transversal });
        }
        self.levels[i].gens.push(g.clone());
        let new_gen = self.levels[i].gens.len() - 1;
        let old_orbit_len = self.levels[i].orbit.len();

        // Pairs (b, s): every old orbit point with the new generator, then
        // every newly discovered point with all generators.
        let mut pending: Vec<(usize, usize)> =
            (0..old_orbit_len).map(|k| (self.levels[i].orbit[k], new_gen)).collect();
        let mut cursor = 0;
        loop {
            if cursor == pending.len() {
                break;
            }
            let (b, s_idx) = pending[cursor];
            cursor += 1;
            let (c, schreier) = {
                let level = &self.levels[i];
                let s = &level.gens[s_idx];
                let ub = level.transversal[b].as_ref().expect("orbit point");
                let c = s[b];
                let us = compose(ub, s);
                match &level.transversal[c] {
                    None => (c, Err(us)),
                    Some(uc) => (c, Ok(compose(&us, &inverse(uc)))),
                }
            };
            match schreier {
                Err(uc) => {
                    let level = &mut self.levels[i];
                    level.transversal[c] = Some(uc);
                    level.orbit.push(c);
                    for s in 0..level.gens.len() {
                        pending.push((c, s));
                    }
                }
                Ok(sg) => {
                    if !is_identity(&sg) {
                        self.extend(i + 1, sg);
                    }
                }
            }
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn contains(&self, g: &[usize]) -> bool {
        let (residue, _) = self.strip(g.to_vec(), 0);
        is_identity(&residue)
    }
}

/// Order of the group generated by `generators` acting on `0..n`.
pub fn group_order(n: usize, generators: &[Perm]) -> BigUint {
    StabChain::new(n, generators).order()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_and_cyclic_orders() {
        let cycle: Perm = (0..6).map(|i| (i + 1) % 6).collect();
        let swap: Perm = [1, 0, 2, 3, 4, 5].to_vec();
        assert_eq!(group_order(6, core::slice::from_ref(&cycle)), BigUint::from(6u32));
        assert_eq!(group_order(6, &[cycle, swap]), BigUint::from(720u32));
        assert_eq!(group_order(4, &[]), BigUint::from(1u32));
    }

    #[test]
    fn dihedral_of_hexagon() {
        let rot: Perm = (0..6).map(|i| (i + 1) % 6).collect();
        let refl: Perm = (0..6).map(|i| (6 - i) % 6).collect();
        let chain = StabChain::new(6, &[rot.clone(), refl]);
        assert_eq!(chain.order(), BigUint::from(12u32));
        assert!(chain.contains(&compose(&rot, &rot)));
        assert!(!chain.contains(&[1, 0, 2, 3, 4, 5]));
    }
}
