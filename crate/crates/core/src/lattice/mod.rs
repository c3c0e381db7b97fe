//! Triangular-lattice regions with free boundaries, their dual graphs, exact
//! matching counts, condensation checks, tiling bijections and rendering.
//!
//! A unit triangle is `(u, v)`: `u` is the row (increasing downward), `v` the
//! position in the row, and the triangle points up iff `u + v` is even. An up
//! triangle `(u, v)` has apex at lattice point `(u, v)` and base points
//! `(u+1, v±1)`; a down triangle has top points `(u, v±1)` and bottom point
//! `(u+1, v)`. All shape regions are built in the frame where a free
//! boundary runs along a horizontal lattice line.

mod graph;
mod kuo;
mod render;
mod tilings;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{param, Error, Result};
use crate::formulas::FlashlightParams;
use crate::shapes::{double_shape, Partition, StrictPartition};

pub use graph::{count_matchings_free, count_matchings_profile, reduce_forced, Budget, DualGraph};
pub use kuo::{
    conjecture_y0_check, conversions, flashlight_kuo_triangles, flashlight_kuo_vertices,
    kuo_verify, recurrence_verify, separation_check, verify_conversions, x1_decomposition_check,
    Conversion, ConversionCheck, KuoVertices, RecurrenceMode, Y0Report,
};
pub use render::{render_svg, render_svg_string};
pub use tilings::{
    enumerate_tilings, pp_to_tiling, spp_to_tiling, tiling_to_pp, tiling_to_spp, Tiling,
    TilingIter,
};

/// A unit triangle of the lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tri {
    pub u: i64,
    pub v: i64,
}

impl Tri {
    pub const fn new(u: i64, v: i64) -> Self {
        Tri { u, v }
    }

    pub fn is_up(&self) -> bool {
        (self.u + self.v).rem_euclid(2) == 0
    }

    /// The three edge-adjacent triangles (present or not).
    pub fn neighbors(&self) -> [Tri; 3] {
        let vertical = if self.is_up() {
            Tri::new(self.u + 1, self.v)
        } else {
            Tri::new(self.u - 1, self.v)
        };
        [Tri::new(self.u, self.v - 1), Tri::new(self.u, self.v + 1), vertical]
    }

    /// Corner lattice points `(row, x)`.
    pub fn corners(&self) -> [(i64, i64); 3] {
        let Tri { u, v } = *self;
        if self.is_up() {
            [(u, v), (u + 1, v - 1), (u + 1, v + 1)]
        } else {
            [(u, v - 1), (u, v + 1), (u + 1, v)]
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// How a region was built; bijections and reports dispatch on this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Hexagon { a: u64, b: u64, c: u64 },
    Shape { lambda: Partition, m: u64 },
    Shifted { lambda: StrictPartition, m: u64 },
    Flashlight(FlashlightParams),
    QuarteredHexagon { x: u64, s: Vec<u64> },
    Custom,
}

/// A finite set of unit triangles with a marked free subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    tris: BTreeSet<Tri>,
    free: BTreeSet<Tri>,
    label: String,
    provenance: Provenance,
}

impl Region {
    pub fn new(tris: BTreeSet<Tri>, free: BTreeSet<Tri>, label: impl Into<String>) -> Result<Self> {
        if let Some(t) = free.iter().find(|t| !tris.contains(t)) {
            return Err(param(format!("free triangle {t} is not in the region")));
        }
        Ok(Region {
            tris,
            free,
            label: label.into(),
            provenance: Provenance::Custom,
        })
    }

    pub fn triangles(&self) -> &BTreeSet<Tri> {
        &self.tris
    }

    pub fn free(&self) -> &BTreeSet<Tri> {
        &self.free
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.tris.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tris.is_empty()
    }

    pub fn contains(&self, t: &Tri) -> bool {
        self.tris.contains(t)
    }

    pub fn is_free(&self, t: &Tri) -> bool {
        self.free.contains(t)
    }

    /// `(up, down)` triangle counts.
    pub fn orientation_counts(&self) -> (usize, usize) {
        let up = self.tris.iter().filter(|t| t.is_up()).count();
        (up, self.tris.len() - up)
    }

    /// Line-oriented dump: a `#` label line, then `u v U|D 0|1` per triangle.
    pub fn dump(&self) -> String {
        let mut out = format!("# {}\n", self.label);
        for t in &self.tris {
            let o = if t.is_up() { 'U' } else { 'D' };
            let f = u8::from(self.free.contains(t));
            out.push_str(&format!("{} {} {o} {f}\n", t.u, t.v));
        }
        out
    }

    /// Inverse of [`Region::dump`]; the orientation column is checked.
    pub fn parse_dump(text: &str) -> Result<Region> {
        let mut tris = BTreeSet::new();
        let mut free = BTreeSet::new();
        let mut label = String::new();
        for line in text.lines() {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix('#') {
                label = rest.trim().to_string();
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let cols: Vec<&str> = line.split_whitespace().collect();
            let bad = || param(format!("bad region line {line:?}"));
            if cols.len() != 4 {
                return Err(bad());
            }
            let u: i64 = cols[0].parse().map_err(|_| bad())?;
            let v: i64 = cols[1].parse().map_err(|_| bad())?;
            let t = Tri::new(u, v);
            let expected = if t.is_up() { "U" } else { "D" };
            if cols[2] != expected {
                return Err(bad());
            }
            tris.insert(t);
            match cols[3] {
                "1" => {
                    free.insert(t);
                }
                "0" => {}
                _ => return Err(bad()),
            }
        }
        Region::new(tris, free, label)
    }

    /// The region with the given triangles removed.
    pub fn without(&self, removed: &[Tri]) -> Region {
        let mut r = self.clone();
        for t in removed {
            r.tris.remove(t);
            r.free.remove(t);
        }
        r.provenance = Provenance::Custom;
        r
    }
}

fn point(i: i64, j: i64, k: i64) -> (i64, i64) {
    (j - i, 2 * k - i - j)
}

/// The two triangles under the unit square with the given corners.
fn face_triangles(corners: [(i64, i64, i64); 4], out: &mut BTreeSet<Tri>) {
    let pts: Vec<(i64, i64)> = corners.iter().map(|&(i, j, k)| point(i, j, k)).collect();
    let (r0, x0) = (pts.iter().map(|p| p.0).min().unwrap(), pts.iter().map(|p| p.1).min().unwrap());
    let (r1, x1) = (pts.iter().map(|p| p.0).max().unwrap(), pts.iter().map(|p| p.1).max().unwrap());
    for u in r0..r1 {
        for v in x0..=x1 {
            let t = Tri::new(u, v);
            if t.corners().iter().all(|c| pts.contains(c)) {
                out.insert(t);
            }
        }
    }
}

/// Shadow of the solid `λ × [0, m]`: the floor under `λ` plus the two back
/// walls. Degenerate solids keep whatever faces they have.
fn prism(lambda: &Partition, m: u64) -> BTreeSet<Tri> {
    let mut tris = BTreeSet::new();
    let m = m as i64;
    for (i, j) in lambda.cells() {
        let (i, j) = (i as i64 - 1, j as i64 - 1);
        face_triangles([(i, j, 0), (i + 1, j, 0), (i, j + 1, 0), (i + 1, j + 1, 0)], &mut tris);
    }
    for k in 0..m {
        for j in 0..lambda.cols() as i64 {
            face_triangles([(0, j, k), (0, j + 1, k), (0, j, k + 1), (0, j + 1, k + 1)], &mut tris);
        }
        for i in 0..lambda.rows() as i64 {
            face_triangles([(i, 0, k), (i + 1, 0, k), (i, 0, k + 1), (i + 1, 0, k + 1)], &mut tris);
        }
    }
    tris
}

/// Shadow of the box `[0,a] × [0,b] × [0,c]`.
fn box_shadow(a: u64, b: u64, c: u64) -> BTreeSet<Tri> {
    let mut tris = prism(&Partition::rectangle(a as usize, b as usize), c);
    let c = c as i64;
    // an empty base still leaves one wall standing
    for k in 0..c {
        if a == 0 {
            for j in 0..b as i64 {
                face_triangles([(0, j, k), (0, j + 1, k), (0, j, k + 1), (0, j + 1, k + 1)], &mut tris);
            }
        }
        if b == 0 {
            for i in 0..a as i64 {
                face_triangles([(i, 0, k), (i + 1, 0, k), (i, 0, k + 1), (i + 1, 0, k + 1)], &mut tris);
            }
        }
    }
    tris
}

/// Hexagon with side lengths `a, b, c, a, b, c`.
pub fn build_hexagon(a: u64, b: u64, c: u64) -> Region {
    Region {
        tris: box_shadow(a, b, c),
        free: BTreeSet::new(),
        label: format!("hex:{a},{b},{c}"),
        provenance: Provenance::Hexagon { a, b, c },
    }
}

/// The region whose tilings are the plane partitions in `PP^m(λ)`.
pub fn build_shape_region(lambda: &Partition, m: u64) -> Region {
    Region {
        tris: prism(lambda, m),
        free: BTreeSet::new(),
        label: format!("shape:{lambda};{m}"),
        provenance: Provenance::Shape {
            lambda: lambda.clone(),
            m,
        },
    }
}

/// Half of the symmetric region for `λ^D`: rows `u >= 0`, with the down
/// triangles of row 0 (those on the former symmetry axis) free.
pub fn build_shifted_region(lambda: &StrictPartition, m: u64) -> Region {
    let full = prism(&double_shape(lambda), m);
    let tris: BTreeSet<Tri> = full.into_iter().filter(|t| t.u >= 0).collect();
    let free = tris.iter().filter(|t| t.u == 0 && !t.is_up()).copied().collect();
    Region {
        tris,
        free,
        label: format!("shifted:{lambda};{m}"),
        provenance: Provenance::Shifted {
            lambda: lambda.clone(),
            m,
        },
    }
}

/// The flashlight region `F_{x,y,z,t}`, as rows `u = 0 .. y+2z-1`.
///
/// Row `u` spans `v ∈ [a_u, 2x-1-u]` with `a_u = u - (2y+2z-1)` for `u < y`
/// and `a_u = -(y+2z) - 2t` below. The free boundary is the down triangles of
/// row 0 from `-(2y+2z-1)` on (from `-(2z-1)` when `y = 0`).
pub fn build_flashlight(p: &FlashlightParams) -> Region {
    let (x, y, z, t) = (p.x as i64, p.y as i64, p.z as i64, p.t as i64);
    let mut tris = BTreeSet::new();
    for u in 0..y + 2 * z {
        let right = 2 * x - 1 - u;
        let left = if u < y { u - (2 * y + 2 * z - 1) } else { -(y + 2 * z) - 2 * t };
        for v in left..=right {
            tris.insert(Tri::new(u, v));
        }
    }
    let start = if y >= 1 { -(2 * y + 2 * z - 1) } else { -(2 * z - 1) };
    let free = tris
        .iter()
        .filter(|tr| tr.u == 0 && !tr.is_up() && tr.v >= start)
        .copied()
        .collect();
    Region {
        tris,
        free,
        label: format!("flashlight:{p}"),
        provenance: Provenance::Flashlight(*p),
    }
}

/// The quartered hexagon `Q_x(s_1, ..., s_k)`: rows `u = 0 .. 2k-1` spanning
/// `v ∈ [0, 2x+2k-1-u]`, with the down triangles `(0, 2s_i - 1)` removed.
pub fn build_quartered_hexagon(x: u64, s: &[u64]) -> Result<Region> {
    let k = s.len() as u64;
    if s.windows(2).any(|w| w[0] >= w[1]) || s.first().is_some_and(|&v| v < 1) || s.last().is_some_and(|&v| v > x + k) {
        return Err(param(format!(
            "quartered hexagon needs 1 <= s_1 < ... < s_k <= x+k = {}, got {s:?}",
            x + k
        )));
    }
    let (xi, ki) = (x as i64, k as i64);
    let mut tris = BTreeSet::new();
    for u in 0..2 * ki {
        for v in 0..=2 * xi + 2 * ki - 1 - u {
            tris.insert(Tri::new(u, v));
        }
    }
    for &si in s {
        tris.remove(&Tri::new(0, 2 * si as i64 - 1));
    }
    let list: Vec<String> = s.iter().map(u64::to_string).collect();
    Ok(Region {
        tris,
        free: BTreeSet::new(),
        label: format!("qhex:{x};{}", list.join(",")),
        provenance: Provenance::QuarteredHexagon { x, s: s.to_vec() },
    })
}

/// Parses the region syntax shared by the CLI: `hex:a,b,c`,
/// `flashlight:x,y,z,t`, `qhex:x,s1,...,sk`, `shape:<shape>;m` and
/// `shifted:<parts>;m`.
pub fn parse_region(spec: &str) -> Result<Region> {
    let (tag, rest) = spec
        .split_once(':')
        .ok_or_else(|| param(format!("region {spec:?} must look like kind:params")))?;
    let nums = || crate::shapes::parse_numbers(rest);
    match tag {
        "hex" => match nums()?[..] {
            [a, b, c] => Ok(build_hexagon(a as u64, b as u64, c as u64)),
            _ => Err(param("hex takes a,b,c")),
        },
        "flashlight" => Ok(build_flashlight(&rest.parse()?)),
        "qhex" => {
            let n = nums()?;
            let (&x, s) = n.split_first().ok_or_else(|| param("qhex takes x,s1,...,sk"))?;
            let s: Vec<u64> = s.iter().map(|&v| v as u64).collect();
            build_quartered_hexagon(x as u64, &s)
        }
        "shape" | "shifted" => {
            let (shape, m) = rest
                .rsplit_once(';')
                .ok_or_else(|| param(format!("{tag} region takes <shape>;m")))?;
            let m: u64 = m.trim().parse().map_err(|_| param(format!("bad bound {m:?}")))?;
            let shape = crate::shapes::make_shape(&shape.parse()?)?;
            if tag == "shape" {
                Ok(build_shape_region(shape.as_ordinary()?, m))
            } else {
                Ok(build_shifted_region(&shape.to_strict()?, m))
            }
        }
        other => Err(Error::Usage(format!("unknown region kind {other:?}"))),
    }
}
