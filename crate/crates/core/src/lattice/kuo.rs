use std::collections::VecDeque;

use super::{build_flashlight, count_matchings_free, Budget, DualGraph, Tri};
use crate::error::{param, Error, Result};
use crate::exactnum::Count;
use crate::formulas::{
    count_flashlight_formula, count_quartered_hexagon, count_shifted_staircase, recurrence_holds,
    FlashlightParams,
};

/// Four vertices of a dual graph, in cyclic order around the face carrying
/// the free vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KuoVertices {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub s: usize,
}

impl KuoVertices {
    fn named(&self, names: &str) -> Vec<usize> {
        names
            .chars()
            .map(|c| match c {
                'u' => self.u,
                'v' => self.v,
                'w' => self.w,
                _ => self.s,
            })
            .collect()
    }
}

/// The `u, v, w, s` triangles of `F_{x,y,z,t}`: `u` in the lower corner at
/// the foot of the t-side, `v` and `w` just inside the two ends of the top
/// line, `s` where the t-side meets the slanted side.
pub fn flashlight_kuo_triangles(p: &FlashlightParams) -> Result<[Tri; 4]> {
    if p.x < 2 || p.z < 1 {
        return Err(param(format!("Kuo vertices need x >= 2 and z >= 1, got {p}")));
    }
    let (x, y, z, t) = (p.x as i64, p.y as i64, p.z as i64, p.t as i64);
    let left = -(y + 2 * z) - 2 * t;
    Ok([
        Tri::new(y + 2 * z - 1, left),
        Tri::new(0, 2 * x - 2),
        Tri::new(0, 2 - 2 * y - 2 * z),
        Tri::new(y, left),
    ])
}

/// Kuo vertices as ids of `build_flashlight(p).dual_graph()`.
pub fn flashlight_kuo_vertices(p: &FlashlightParams) -> Result<KuoVertices> {
    let g = build_flashlight(p).dual_graph();
    let ids: Vec<usize> = flashlight_kuo_triangles(p)?
        .iter()
        .map(|t| {
            g.index_of(t)
                .ok_or_else(|| Error::Structure(format!("triangle {t} is missing from {p}")))
        })
        .collect::<Result<_>>()?;
    Ok(KuoVertices {
        u: ids[0],
        v: ids[1],
        w: ids[2],
        s: ids[3],
    })
}

/// One deletion identity `M_f(G - deleted) = M(F_target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conversion {
    pub name: &'static str,
    pub deleted: &'static str,
    pub target: FlashlightParams,
}

/// The deletion identities used for `F_{x,y,z,t}`; at `z = 1` the `uvws`
/// and `us` targets change shape.
pub fn conversions(p: &FlashlightParams) -> Result<Vec<Conversion>> {
    let FlashlightParams { x, y, z, t } = *p;
    if x < 2 || z < 1 {
        return Err(param(format!("conversions need x >= 2 and z >= 1, got {p}")));
    }
    let f = FlashlightParams::new;
    let c = |name, deleted, target| Conversion { name, deleted, target };
    let mut out = vec![c("convert1", "", *p)];
    if z >= 2 {
        out.push(c("convert2", "uvws", f(x - 2, y + 2, z - 2, t + 2)));
    } else {
        out.push(c("convert2b", "uvws", f(x - 2, y + 1, 0, t + 2)));
    }
    out.push(c("convert3", "vs", f(x - 2, y + 2, z - 1, t + 1)));
    out.push(c("convert4", "uw", f(x, y, z - 1, t + 1)));
    out.push(c("convert5", "uv", f(x, y, z - 1, t)));
    out.push(c("convert6", "ws", f(x - 2, y + 2, z - 1, t + 2)));
    if z >= 2 {
        out.push(c("convert7", "us", f(x, y + 2, z - 2, t + 1)));
    } else {
        out.push(c("convert7b", "us", f(x, y + 1, 0, t + 1)));
    }
    out.push(c("convert8", "vw", f(x - 2, y, z, t + 1)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConversionCheck {
    pub conversion: Conversion,
    pub deletion_count: Count,
    /// Brute-force count of the target region, when it fits the budget.
    pub target_count: Option<Count>,
    pub formula: Count,
    pub holds: bool,
}

pub fn verify_conversions(p: &FlashlightParams, budget: &Budget) -> Result<Vec<ConversionCheck>> {
    let g = build_flashlight(p).dual_graph();
    let k = flashlight_kuo_vertices(p)?;
    conversions(p)?
        .into_iter()
        .map(|conversion| {
            let deletion_count = count_matchings_free(&g.delete(&k.named(conversion.deleted)), budget)?;
            let target = build_flashlight(&conversion.target);
            let target_count = if target.len() <= budget.triangles {
                Some(target.count(budget)?)
            } else {
                None
            };
            let formula = count_flashlight_formula(&conversion.target)?;
            let holds = deletion_count == formula && target_count.as_ref().map_or(true, |c| *c == deletion_count);
            Ok(ConversionCheck {
                conversion,
                deletion_count,
                target_count,
                formula,
                holds,
            })
        })
        .collect()
}

/// Unit-capacity vertex-disjoint flow from `sources` to `sinks` avoiding
/// `blocked`; stops once `want` paths are found.
fn disjoint_paths(g: &DualGraph, sources: &[usize], sinks: &[bool], blocked: &[bool], want: usize) -> usize {
    let n = g.order();
    // node 2a = in(a), 2a+1 = out(a), 2n = source, 2n+1 = sink
    let (src, snk) = (2 * n, 2 * n + 1);
    let mut head: Vec<Vec<usize>> = vec![Vec::new(); 2 * n + 2];
    let mut to = Vec::new();
    let mut cap = Vec::new();
    let mut add = |a: usize, b: usize, head: &mut Vec<Vec<usize>>| {
        head[a].push(to.len());
        to.push(b);
        cap.push(1i32);
        head[b].push(to.len());
        to.push(a);
        cap.push(0i32);
    };
    let usable = |a: usize| g.is_alive(a) && !blocked[a];
    for a in (0..n).filter(|&a| usable(a)) {
        add(2 * a, 2 * a + 1, &mut head);
        for b in g.neighbors(a).filter(|&b| usable(b)) {
            add(2 * a + 1, 2 * b, &mut head);
        }
        if sinks[a] {
            add(2 * a + 1, snk, &mut head);
        }
    }
    for &s in sources.iter().filter(|&&s| usable(s)) {
        add(src, 2 * s, &mut head);
    }
    let mut flow = 0;
    while flow < want {
        let mut prev = vec![usize::MAX; 2 * n + 2];
        let mut queue = VecDeque::from([src]);
        while let Some(a) = queue.pop_front() {
            for &e in &head[a] {
                let b = to[e];
                if cap[e] > 0 && prev[b] == usize::MAX && b != src {
                    prev[b] = e;
                    queue.push_back(b);
                }
            }
        }
        if prev[snk] == usize::MAX {
            break;
        }
        let mut b = snk;
        while b != src {
            let e = prev[b];
            cap[e] -= 1;
            cap[e ^ 1] += 1;
            b = to[e ^ 1];
        }
        flow += 1;
    }
    flow
}

struct PathSearch<'a> {
    g: &'a DualGraph,
    target: usize,
    others: [usize; 2],
    sinks: Vec<bool>,
    on_path: Vec<bool>,
    visited: usize,
    cap: usize,
    found: bool,
}

impl PathSearch<'_> {
    /// Extends the induced path ending at `c`: a new vertex may touch no
    /// path vertex except `c`.
    fn extend(&mut self, c: usize) -> Result<()> {
        if c == self.target {
            self.visited += 1;
            if self.visited > self.cap {
                return Err(Error::Resource {
                    what: "separating paths",
                    needed: self.visited,
                    budget: self.cap,
                });
            }
            self.found = disjoint_paths(self.g, &self.others, &self.sinks, &self.on_path, 2) >= 2;
            return Ok(());
        }
        let g = self.g;
        let next: Vec<usize> = g
            .neighbors(c)
            .filter(|&n| !self.on_path[n] && !g.neighbors(n).any(|m| m != c && self.on_path[m]))
            .collect();
        for n in next {
            self.on_path[n] = true;
            self.extend(n)?;
            self.on_path[n] = false;
            if self.found {
                break;
            }
        }
        Ok(())
    }
}

/// Whether every induced `a → b` path leaves fewer than two disjoint paths
/// from `others` to distinct free vertices.
fn separated(g: &DualGraph, a: usize, b: usize, others: [usize; 2], budget: &Budget) -> Result<bool> {
    let sinks: Vec<bool> = (0..g.order()).map(|i| g.is_alive(i) && g.is_free(i)).collect();
    if !sinks.iter().any(|&s| s) {
        return Ok(true);
    }
    let mut search = PathSearch {
        g,
        target: b,
        others,
        sinks,
        on_path: vec![false; g.order()],
        visited: 0,
        cap: budget.paths,
        found: false,
    };
    search.on_path[a] = true;
    search.extend(a)?;
    Ok(!search.found)
}

/// `(u,w-separated, v,s-separated)`.
pub fn separation_check(g: &DualGraph, k: &KuoVertices, budget: &Budget) -> Result<(bool, bool)> {
    let n = g.alive_count();
    if n > budget.triangles {
        return Err(Error::Resource {
            what: "triangles",
            needed: n,
            budget: budget.triangles,
        });
    }
    Ok((
        separated(g, k.u, k.w, [k.v, k.s], budget)?,
        separated(g, k.v, k.s, [k.u, k.w], budget)?,
    ))
}

/// Evaluates both sides of the free-boundary condensation identity.
pub fn kuo_verify(g: &DualGraph, k: &KuoVertices, budget: &Budget) -> Result<bool> {
    let m = |names: &str| count_matchings_free(&g.delete(&k.named(names)), budget);
    Ok(m("")? * m("uvws")? + m("uw")? * m("vs")? == m("us")? * m("vw")? + m("uv")? * m("ws")?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceMode {
    Formula,
    Brute,
}

pub fn recurrence_verify(p: &FlashlightParams, mode: RecurrenceMode, budget: &Budget) -> Result<bool> {
    match mode {
        RecurrenceMode::Formula => recurrence_holds(p, count_flashlight_formula),
        RecurrenceMode::Brute => recurrence_holds(p, |q| build_flashlight(q).count(budget)),
    }
}

/// `M(F_{1,y,z,t}) = M(H_s) · Σ_L M(Q_{t+1}(t+l_1, ..., t+l_z))` over the
/// `z`-subsets `L` of `[z+1]`, with `M(H_s) = 2^y`.
pub fn x1_decomposition_check(y: u64, z: u64, t: u64) -> Result<bool> {
    if y < 1 {
        return Err(param("the x = 1 decomposition needs y >= 1"));
    }
    let hs = count_shifted_staircase(y, 1)?;
    let mut sum = Count::zero();
    for omitted in 1..=z + 1 {
        let s: Vec<u64> = (1..=z + 1).filter(|&l| l != omitted).map(|l| t + l).collect();
        sum += &count_quartered_hexagon(t + 1, &s)?;
    }
    Ok(hs * sum == count_flashlight_formula(&FlashlightParams::new(1, y, z, t))?)
}

/// Brute force against the product formula at `y = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Y0Report {
    pub params: FlashlightParams,
    pub lhs: Count,
    pub rhs: Count,
    pub equal: bool,
}

pub fn conjecture_y0_check(x: u64, z: u64, t: u64, budget: &Budget) -> Result<Y0Report> {
    let params = FlashlightParams::new(x, 0, z, t);
    let lhs = build_flashlight(&params).count(budget)?;
    let rhs = count_flashlight_formula(&params)?;
    let equal = lhs == rhs;
    Ok(Y0Report { params, lhs, rhs, equal })
}
