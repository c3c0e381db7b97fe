use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::graph::{count_matchings_free, Compact, MaskCounter};
use super::{Budget, DualGraph, Provenance, Region, Tri};
use crate::error::{Error, Result};
use crate::ppcore::PlanePartition;
use crate::shapes::{make_shape, Partition, Shape, ShapeFamily, StrictPartition};

/// A free-boundary tiling: lozenges as ordered triangle pairs plus the free
/// triangles left uncovered.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    pub edges: BTreeSet<(Tri, Tri)>,
    pub uncovered: BTreeSet<Tri>,
}

impl Tiling {
    fn lozenge(a: Tri, b: Tri) -> (Tri, Tri) {
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn contains_lozenge(&self, a: Tri, b: Tri) -> bool {
        self.edges.contains(&Tiling::lozenge(a, b))
    }

    /// Checks the tiling against a region: lozenges are adjacent pairs, each
    /// triangle is used once, and only free triangles are left over.
    pub fn validate(&self, region: &Region) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.edges {
            if !region.contains(&a) || !region.contains(&b) || !a.neighbors().contains(&b) {
                return Err(Error::Structure(format!("{a}-{b} is not a lozenge of the region")));
            }
            if !seen.insert(a) || !seen.insert(b) {
                return Err(Error::Structure(format!("lozenge {a}-{b} overlaps another")));
            }
        }
        for t in &self.uncovered {
            if !region.is_free(t) || !seen.insert(*t) {
                return Err(Error::Structure(format!("{t} cannot be left uncovered")));
            }
        }
        if seen.len() != region.len() {
            return Err(Error::Structure("tiling does not cover the region".into()));
        }
        Ok(())
    }
}

struct Frame {
    vertex: usize,
    options: Vec<Option<usize>>,
    next: usize,
}

/// Depth-first stream of tilings. At each step the lowest open triangle is
/// matched with its neighbours in increasing order, then (if free) skipped.
pub struct TilingIter {
    graph: Compact,
    tris: Vec<Tri>,
    open: Vec<bool>,
    counter: Option<MaskCounter>,
    stack: Vec<Frame>,
    descend: bool,
    done: bool,
}

impl TilingIter {
    fn open_mask(&self) -> u64 {
        self.open
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, &o)| if o { m | 1 << i } else { m })
    }

    fn viable(&mut self, vertex: usize, option: Option<usize>) -> bool {
        let Some(mask) = self.counter.as_ref().map(|_| self.open_mask()) else {
            return true;
        };
        let mut m = mask & !(1u64 << vertex);
        if let Some(j) = option {
            m &= !(1u64 << j);
        }
        self.counter.as_mut().is_some_and(|c| !c.count(m).is_zero())
    }

    fn set(&mut self, frame: usize, open: bool) {
        let f = &self.stack[frame];
        let (v, opt) = (f.vertex, f.options[f.next - 1]);
        self.open[v] = open;
        if let Some(j) = opt {
            self.open[j] = open;
        }
    }

    fn current(&self) -> Tiling {
        let mut t = Tiling {
            edges: BTreeSet::new(),
            uncovered: BTreeSet::new(),
        };
        for f in &self.stack {
            let a = self.tris[f.vertex];
            match f.options[f.next - 1] {
                Some(j) => {
                    t.edges.insert(Tiling::lozenge(a, self.tris[j]));
                }
                None => {
                    t.uncovered.insert(a);
                }
            }
        }
        t
    }
}

impl Iterator for TilingIter {
    type Item = Tiling;

    fn next(&mut self) -> Option<Tiling> {
        if self.done {
            return None;
        }
        loop {
            if self.descend {
                self.descend = false;
                let Some(i) = self.open.iter().position(|&o| o) else {
                    return Some(self.current());
                };
                let mut options: Vec<Option<usize>> = self.graph.adj[i]
                    .iter()
                    .filter(|&&j| self.open[j])
                    .map(|&j| Some(j))
                    .collect();
                if self.graph.free[i] {
                    options.push(None);
                }
                options.retain(|&o| self.viable(i, o));
                self.stack.push(Frame {
                    vertex: i,
                    options,
                    next: 0,
                });
            }
            let Some(top) = self.stack.len().checked_sub(1) else {
                self.done = true;
                return None;
            };
            if self.stack[top].next > 0 {
                self.set(top, true);
            }
            if self.stack[top].next < self.stack[top].options.len() {
                self.stack[top].next += 1;
                self.set(top, false);
                self.descend = true;
            } else {
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                    return None;
                }
            }
        }
    }
}

/// All tilings of a region, after checking the count against
/// `budget.enum_cap`.
pub fn enumerate_tilings(region: &Region, budget: &Budget) -> Result<TilingIter> {
    let g = DualGraph::from_region(region);
    let total = count_matchings_free(&g, budget)?;
    let cap = budget.enum_cap;
    if total.to_u64().map_or(true, |n| n > cap as u64) {
        return Err(Error::Resource {
            what: "tilings",
            needed: total.to_u64().map_or(usize::MAX, |n| n as usize),
            budget: cap,
        });
    }
    let compact = g.compact();
    let tris = compact.ids.iter().map(|&i| g.triangle(i).expect("region graph")).collect();
    let n = compact.len();
    let counter = (n <= 64).then(|| MaskCounter::new(compact.clone()));
    Ok(TilingIter {
        graph: compact,
        tris,
        open: vec![true; n],
        counter,
        stack: Vec::new(),
        descend: true,
        done: false,
    })
}

/// The lozenge recording height `h` at 0-based cell `(i, j)`.
fn height_lozenge(i: i64, j: i64, h: i64) -> (Tri, Tri) {
    let (r, x) = (j - i, 2 * h - i - j);
    (Tri::new(r - 1, x - 1), Tri::new(r, x - 1))
}

fn pp_frame(region: &Region) -> Result<(Partition, u64)> {
    match region.provenance() {
        Provenance::Hexagon { a, b, c } => Ok((Partition::rectangle(*a as usize, *b as usize), *c)),
        Provenance::Shape { lambda, m } => Ok((lambda.clone(), *m)),
        _ => Err(Error::Usage(format!(
            "region {} was not built from a shape",
            region.label()
        ))),
    }
}

fn spp_frame(region: &Region) -> Result<(StrictPartition, u64)> {
    match region.provenance() {
        Provenance::Shifted { lambda, m } => Ok((lambda.clone(), *m)),
        Provenance::Flashlight(p) => {
            if p.t > 0 {
                return Err(Error::Usage(format!(
                    "flashlight {p} has t > 0 and no plane-partition reading"
                )));
            }
            let family = ShapeFamily::ShiftedDoubleStaircase {
                n: (p.y + p.z) as usize,
                k: p.z as usize,
            };
            Ok((make_shape(&family)?.to_strict()?, p.x))
        }
        _ => Err(Error::Usage(format!(
            "region {} was not built from a strict shape",
            region.label()
        ))),
    }
}

/// Reads cell heights diagonal by diagonal. The cells with `j - i = r`
/// leave one vertical lozenge each between rows `r-1` and `r`, at position
/// `2h - i - j - 1` (0-based `i, j`); these strictly decrease along the
/// diagonal, so they are matched to the cells from right to left. On the main
/// diagonal of a shifted shape only the free lower half of that lozenge is
/// in the region, and it shows up as an uncovered triangle of row 0.
fn read_heights(
    tiling: &Tiling,
    cells: &[(usize, usize)],
    m: u64,
    shifted: bool,
) -> Result<BTreeMap<(usize, usize), u64>> {
    let mut diagonals: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for &(i, j) in cells {
        diagonals.entry(j as i64 - i as i64).or_default().push((i, j));
    }
    let mut out = BTreeMap::new();
    for (r, diagonal) in diagonals {
        let mut marks: Vec<i64> = if shifted && r == 0 {
            tiling.uncovered.iter().filter(|t| t.u == 0).map(|t| t.v).collect()
        } else {
            tiling
                .edges
                .iter()
                .filter(|(a, b)| a.u == r - 1 && b.u == r && a.v == b.v)
                .map(|(a, _)| a.v)
                .collect()
        };
        if marks.len() != diagonal.len() {
            return Err(Error::Structure(format!(
                "diagonal {r} has {} cells but {} height lozenges",
                diagonal.len(),
                marks.len()
            )));
        }
        marks.sort_unstable_by(|a, b| b.cmp(a));
        for ((i, j), v) in diagonal.into_iter().zip(marks) {
            let twice = v + 1 + i as i64 + j as i64 - 2;
            if twice.rem_euclid(2) != 0 || !(0..=2 * m as i64).contains(&twice) {
                return Err(Error::Structure(format!("no height fits cell ({i},{j})")));
            }
            out.insert((i, j), (twice / 2) as u64);
        }
    }
    Ok(out)
}

fn rows_of(shape: &Shape, heights: &BTreeMap<(usize, usize), u64>) -> Vec<Vec<u64>> {
    let mut rows = vec![Vec::new(); shape.parts().len()];
    for (&(i, _), &h) in heights {
        rows[i - 1].push(h);
    }
    rows
}

pub fn tiling_to_pp(region: &Region, tiling: &Tiling) -> Result<PlanePartition> {
    let (lambda, m) = pp_frame(region)?;
    tiling.validate(region)?;
    let heights = read_heights(tiling, &lambda.cells(), m, false)?;
    let shape = Shape::Ordinary(lambda);
    let rows = rows_of(&shape, &heights);
    PlanePartition::new(shape, m, rows)
}

pub fn tiling_to_spp(region: &Region, tiling: &Tiling) -> Result<PlanePartition> {
    let (lambda, m) = spp_frame(region)?;
    tiling.validate(region)?;
    let heights = read_heights(tiling, &lambda.shifted_cells(), m, true)?;
    let shape = Shape::Shifted(lambda);
    let rows = rows_of(&shape, &heights);
    PlanePartition::new(shape, m, rows)
}

/// Places the height lozenges, then pairs what is left of each row from left
/// to right.
fn complete_tiling(region: &Region, mut tiling: Tiling) -> Result<Tiling> {
    let mut used: BTreeSet<Tri> = tiling.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    used.extend(tiling.uncovered.iter().copied());
    let mut rest = region.triangles().iter().filter(|t| !used.contains(t)).peekable();
    while let Some(&a) = rest.next() {
        match rest.next() {
            Some(&b) if b.u == a.u && b.v == a.v + 1 => {
                tiling.edges.insert((a, b));
            }
            _ => return Err(Error::Structure(format!("triangle {a} cannot be paired"))),
        }
    }
    tiling.validate(region)?;
    Ok(tiling)
}

fn check_shape(pi: &PlanePartition, shape: &Shape, m: u64) -> Result<()> {
    if pi.shape() != shape || pi.bound() != m {
        return Err(Error::Shape(format!(
            "plane partition of {} bounded by {} does not fit {shape} bounded by {m}",
            pi.shape(),
            pi.bound()
        )));
    }
    Ok(())
}

pub fn pp_to_tiling(region: &Region, pi: &PlanePartition) -> Result<Tiling> {
    let (lambda, m) = pp_frame(region)?;
    check_shape(pi, &Shape::Ordinary(lambda), m)?;
    let mut t = Tiling {
        edges: BTreeSet::new(),
        uncovered: BTreeSet::new(),
    };
    for (i, j) in pi.shape().cells() {
        let h = pi.entry(i, j).expect("cell of the shape");
        let (a, b) = height_lozenge(i as i64 - 1, j as i64 - 1, h as i64);
        t.edges.insert(Tiling::lozenge(a, b));
    }
    complete_tiling(region, t)
}

pub fn spp_to_tiling(region: &Region, pi: &PlanePartition) -> Result<Tiling> {
    let (lambda, m) = spp_frame(region)?;
    check_shape(pi, &Shape::Shifted(lambda), m)?;
    let mut t = Tiling {
        edges: BTreeSet::new(),
        uncovered: BTreeSet::new(),
    };
    for (i, j) in pi.shape().cells() {
        let h = pi.entry(i, j).expect("cell of the shape");
        let (a, b) = height_lozenge(i as i64 - 1, j as i64 - 1, h as i64);
        if i == j {
            t.uncovered.insert(b);
        } else {
            t.edges.insert(Tiling::lozenge(a, b));
        }
    }
    complete_tiling(region, t)
}
