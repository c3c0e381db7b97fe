use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{Region, Tri};
use crate::error::{Error, Result};
use crate::exactnum::Count;

/// Limits for brute-force work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest vertex count the matching counter accepts.
    pub triangles: usize,
    /// Largest number of tilings an enumeration may produce.
    pub enum_cap: usize,
    /// Largest number of induced paths a separation check may visit.
    pub paths: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            triangles: 64,
            enum_cap: 1_000_000,
            paths: 1_000_000,
        }
    }
}

impl Budget {
    pub fn with_triangles(triangles: usize) -> Self {
        Budget {
            triangles,
            ..Budget::default()
        }
    }
}

/// Dual graph of a region, or an abstract graph with free vertices.
///
/// Vertex ids are stable under deletion: deleted vertices are only marked
/// dead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    adj: Vec<Vec<usize>>,
    free: Vec<bool>,
    alive: Vec<bool>,
    tris: Option<Vec<Tri>>,
}

impl DualGraph {
    /// Vertices are the triangles in row-major order.
    pub fn from_region(region: &Region) -> DualGraph {
        let tris: Vec<Tri> = region.triangles().iter().copied().collect();
        let index: HashMap<Tri, usize> = tris.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let adj = tris
            .iter()
            .map(|t| {
                let mut n: Vec<usize> = t.neighbors().iter().filter_map(|s| index.get(s).copied()).collect();
                n.sort_unstable();
                n
            })
            .collect();
        let free = tris.iter().map(|t| region.is_free(t)).collect();
        DualGraph {
            adj,
            free,
            alive: vec![true; tris.len()],
            tris: Some(tris),
        }
    }

    /// An abstract graph on `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], free: &[usize]) -> Result<DualGraph> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::Parameter(format!("bad edge ({a},{b}) on {n} vertices")));
            }
            if !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj.iter_mut().for_each(|v| v.sort_unstable());
        let mut is_free = vec![false; n];
        for &f in free {
            *is_free
                .get_mut(f)
                .ok_or_else(|| Error::Parameter(format!("free vertex {f} out of range")))? = true;
        }
        Ok(DualGraph {
            adj,
            free: is_free,
            alive: vec![true; n],
            tris: None,
        })
    }

    /// Total number of vertex ids, dead ones included.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn alive_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn is_free(&self, v: usize) -> bool {
        self.free[v]
    }

    /// Alive neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied().filter(|&w| self.alive[w])
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.alive[a] && self.alive[b] && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn triangle(&self, v: usize) -> Option<Tri> {
        self.tris.as_ref().map(|t| t[v])
    }

    pub fn index_of(&self, t: &Tri) -> Option<usize> {
        let tris = self.tris.as_ref()?;
        tris.binary_search(t).ok().filter(|&i| self.alive[i])
    }

    /// The graph with the given vertices deleted.
    pub fn delete(&self, vertices: &[usize]) -> DualGraph {
        let mut g = self.clone();
        for &v in vertices {
            g.alive[v] = false;
        }
        g
    }

    pub fn free_vertices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.alive[v] && self.free[v]).collect()
    }

    /// Compact relabelling of the alive vertices, preserving order.
    pub(crate) fn compact(&self) -> Compact {
        let ids: Vec<usize> = (0..self.order()).filter(|&v| self.alive[v]).collect();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in ids.iter().enumerate() {
            pos[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| self.neighbors(v).map(|w| pos[w]).collect())
            .collect();
        let free = ids.iter().map(|&v| self.free[v]).collect();
        Compact { ids, adj, free }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Compact {
    pub ids: Vec<usize>,
    pub adj: Vec<Vec<usize>>,
    pub free: Vec<bool>,
}

impl Compact {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    fn bandwidth(&self) -> usize {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, n)| n.iter().map(move |&j| j.abs_diff(i)))
            .max()
            .unwrap_or(0)
    }
}

/// Memoised count over subsets of at most 64 vertices; a set bit means the
/// vertex still needs a decision.
pub(crate) struct MaskCounter {
    g: Compact,
    adj_mask: Vec<u64>,
    memo: HashMap<u64, BigUint>,
}

impl MaskCounter {
    pub fn new(g: Compact) -> Self {
        debug_assert!(g.len() <= 64);
        let adj_mask = g.adj.iter().map(|n| n.iter().fold(0u64, |m, &j| m | 1 << j)).collect();
        MaskCounter {
            g,
            adj_mask,
            memo: HashMap::new(),
        }
    }

    pub fn full_mask(&self) -> u64 {
        if self.g.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.g.len()) - 1
        }
    }

    pub fn count(&mut self, mask: u64) -> BigUint {
        if mask == 0 {
            return BigUint::one();
        }
        if let Some(c) = self.memo.get(&mask) {
            return c.clone();
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1u64 << i);
        let mut total = BigUint::zero();
        if self.g.free[i] {
            total += self.count(rest);
        }
        let mut options = self.adj_mask[i] & rest;
        while options != 0 {
            let j = options.trailing_zeros();
            options &= options - 1;
            total += self.count(rest & !(1u64 << j));
        }
        self.memo.insert(mask, total.clone());
        total
    }
}

/// Sweep over vertices in order; the state records which of the next
/// `bandwidth` vertices are already matched.
fn profile_count(g: &Compact) -> Result<BigUint> {
    let w = g.bandwidth();
    if w >= 128 {
        return Err(Error::Resource {
            what: "profile width",
            needed: w,
            budget: 127,
        });
    }
    let mut states: HashMap<u128, BigUint> = HashMap::new();
    states.insert(0, BigUint::one());
    for i in 0..g.len() {
        let mut next: HashMap<u128, BigUint> = HashMap::with_capacity(states.len());
        for (mask, c) in states {
            if mask & 1 == 1 {
                *next.entry(mask >> 1).or_default() += c;
                continue;
            }
            if g.free[i] {
                *next.entry(mask >> 1).or_default() += &c;
            }
            for &j in g.adj[i].iter().filter(|&&j| j > i) {
                let bit = 1u128 << (j - i);
                if mask & bit == 0 {
                    *next.entry((mask | bit) >> 1).or_default() += &c;
                }
            }
        }
        states = next;
    }
    Ok(states.remove(&0).unwrap_or_default())
}

/// Number of matchings covering every non-free vertex.
///
/// Up to 64 vertices a subset memo is used; above that a profile sweep,
/// still capped by `budget.triangles`.
pub fn count_matchings_free(g: &DualGraph, budget: &Budget) -> Result<Count> {
    let c = g.compact();
    if c.len() > budget.triangles {
        return Err(Error::Resource {
            what: "triangles",
            needed: c.len(),
            budget: budget.triangles,
        });
    }
    if c.len() <= 64 {
        let mut counter = MaskCounter::new(c);
        let full = counter.full_mask();
        Ok(Count::from(counter.count(full)))
    } else {
        profile_count(&c).map(Count::from)
    }
}

/// The profile sweep on its own, with no vertex cap; fails only when the
/// ordering's bandwidth exceeds 127.
pub fn count_matchings_profile(g: &DualGraph) -> Result<Count> {
    profile_count(&g.compact()).map(Count::from)
}

/// Repeatedly matches each non-free vertex that has a single neighbour with
/// that neighbour. The matching count is unchanged.
pub fn reduce_forced(g: &DualGraph) -> DualGraph {
    let mut g = g.clone();
    loop {
        let forced = (0..g.order()).find_map(|v| {
            if !g.alive[v] || g.free[v] {
                return None;
            }
            let mut n = g.neighbors(v);
            match (n.next(), n.next()) {
                (Some(w), None) => Some((v, w)),
                _ => None,
            }
        });
        match forced {
            Some((v, w)) => {
                g.alive[v] = false;
                g.alive[w] = false;
            }
            None => return g,
        }
    }
}

impl Region {
    pub fn dual_graph(&self) -> DualGraph {
        DualGraph::from_region(self)
    }

    /// Number of free-boundary tilings.
    pub fn count(&self, budget: &Budget) -> Result<Count> {
        count_matchings_free(&self.dual_graph(), budget)
    }
}
