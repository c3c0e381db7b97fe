//! Partitions, strict partitions, shifted diagrams and the named shape families.
//!
//! Cell coordinates are 1-based `(row, column)` throughout.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{param, Error, Result};

/// A partition: weakly decreasing positive parts, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates the parts. Trailing zeros are dropped; any other zero or an
    /// increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!(
                "{parts:?} is not a weakly decreasing sequence of positive integers"
            )));
        }
        Ok(Partition { parts })
    }

    /// `a` rows of length `b`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        let parts = if b == 0 { Vec::new() } else { vec![b; a] };
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of row `i` (1-based); 0 past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.parts.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.row_len(i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(k, &len)| (1..=len).map(move |j| (k + 1, j)))
            .collect()
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.cols())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// `Some((a, b))` when every row has the same length.
    pub fn rectangle_dims(&self) -> Option<(usize, usize)> {
        let b = self.cols();
        self.parts
            .iter()
            .all(|&p| p == b)
            .then_some((self.rows(), b))
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// A strict partition: strictly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Shape(format!(
                "{parts:?} is not a strictly decreasing sequence of positive integers"
            )));
        }
        Ok(StrictPartition { parts })
    }

    /// `δ_n = (n, n-1, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        StrictPartition {
            parts: (1..=n).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn row_len(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.parts.get(k))
            .copied()
            .unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Whether `(i, j)` lies in the shifted diagram (row `i` spans columns
    /// `i ..= i + λ_i - 1`).
    pub fn contains(&self, i: usize, j: usize) -> bool {
        let len = self.row_len(i);
        len > 0 && j >= i && j < i + len
    }

    /// Shifted-diagram cells in row-major order.
    pub fn shifted_cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(k, &len)| (k + 1..k + 1 + len).map(move |j| (k + 1, j)))
            .collect()
    }

    pub fn as_partition(&self) -> Partition {
        Partition {
            parts: self.parts.clone(),
        }
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl TryFrom<&Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: &Partition) -> Result<Self> {
        StrictPartition::new(p.parts.clone())
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// The named shape families, with their parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ShapeFamily {
    /// `a` rows of length `b`.
    Rectangle { a: usize, b: usize },
    /// `(b, b-1, ..., b-a+1)`.
    Staircase { a: usize, b: usize },
    /// `δ_n`, shifted.
    ShiftedStaircase { n: usize },
    /// `(n, n-2, ..., n-2(k-1))`, shifted.
    ShiftedTrapezoid { n: usize, k: usize },
    /// `δ_n + δ_k`, shifted.
    ShiftedDoubleStaircase { n: usize, k: usize },
    /// `(M-d, M-2d, ..., M-ℓd)`.
    ArithmeticProgression { top: usize, d: usize, len: usize },
    Custom(Vec<usize>),
}

/// A shape together with whether it is read as a shifted diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Ordinary(Partition),
    Shifted(StrictPartition),
}

impl Shape {
    pub fn parts(&self) -> &[usize] {
        match self {
            Shape::Ordinary(p) => p.parts(),
            Shape::Shifted(p) => p.parts(),
        }
    }

    pub fn is_shifted(&self) -> bool {
        matches!(self, Shape::Shifted(_))
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        match self {
            Shape::Ordinary(p) => p.contains(i, j),
            Shape::Shifted(p) => p.contains(i, j),
        }
    }

    /// Cells in row-major order (shifted coordinates for shifted shapes).
    pub fn cells(&self) -> Vec<(usize, usize)> {
        match self {
            Shape::Ordinary(p) => p.cells(),
            Shape::Shifted(p) => p.shifted_cells(),
        }
    }

    /// First column of row `i`.
    pub fn row_start(&self, i: usize) -> usize {
        match self {
            Shape::Ordinary(_) => 1,
            Shape::Shifted(_) => i,
        }
    }

    pub fn as_ordinary(&self) -> Result<&Partition> {
        match self {
            Shape::Ordinary(p) => Ok(p),
            Shape::Shifted(p) => Err(Error::Shape(format!("{p} is a shifted shape"))),
        }
    }

    /// The shape read as a strict partition; ordinary shapes qualify when
    /// their parts are distinct.
    pub fn to_strict(&self) -> Result<StrictPartition> {
        match self {
            Shape::Shifted(p) => Ok(p.clone()),
            Shape::Ordinary(p) => StrictPartition::try_from(p),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Ordinary(p) => write!(f, "{p}"),
            Shape::Shifted(p) => write!(f, "shifted {p}"),
        }
    }
}

pub fn make_shape(family: &ShapeFamily) -> Result<Shape> {
    use ShapeFamily::*;
    Ok(match *family {
        Rectangle { a, b } => Shape::Ordinary(Partition::rectangle(a, b)),
        Staircase { a, b } => {
            if a > b {
                return Err(param(format!("staircase needs a <= b, got a={a}, b={b}")));
            }
            Shape::Ordinary(Partition::new((b - a + 1..=b).rev().collect())?)
        }
        ShiftedStaircase { n } => Shape::Shifted(StrictPartition::staircase(n)),
        ShiftedTrapezoid { n, k } => {
            if k > 0 && n < 2 * k - 1 {
                return Err(param(format!(
                    "shifted trapezoid needs n - 2(k-1) >= 1, got n={n}, k={k}"
                )));
            }
            Shape::Shifted(StrictPartition::new(
                (0..k).map(|i| n - 2 * i).collect(),
            )?)
        }
        ShiftedDoubleStaircase { n, k } => {
            if k > n {
                return Err(param(format!(
                    "shifted double staircase needs k <= n, got n={n}, k={k}"
                )));
            }
            Shape::Shifted(StrictPartition::new(
                (0..n).map(|i| (n - i) + k.saturating_sub(i)).collect(),
            )?)
        }
        ArithmeticProgression { top, d, len } => {
            if len > 0 && top < len * d + 1 {
                return Err(param(format!(
                    "arithmetic progression needs M - ℓd >= 1, got M={top}, d={d}, ℓ={len}"
                )));
            }
            Shape::Ordinary(Partition::new((1..=len).map(|i| top - i * d).collect())?)
        }
        Custom(ref parts) => Shape::Ordinary(Partition::new(parts.clone())?),
    })
}

/// The self-conjugate partition whose cells on or above the diagonal form the
/// shifted diagram of `λ`.
pub fn double_shape(lambda: &StrictPartition) -> Partition {
    let cells: BTreeSet<(usize, usize)> = lambda
        .shifted_cells()
        .into_iter()
        .flat_map(|(i, j)| [(i, j), (j, i)])
        .collect();
    let rows = cells.iter().map(|&(i, _)| i).max().unwrap_or(0);
    let parts = (1..=rows)
        .map(|i| cells.iter().filter(|&&(r, _)| r == i).count())
        .collect();
    Partition { parts }
}

/// Content `c(i, j) = j - i`.
pub fn content(i: usize, j: usize) -> i64 {
    j as i64 - i as i64
}

impl fmt::Display for ShapeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ShapeFamily::*;
        match self {
            Rectangle { a, b } => write!(f, "rect:{a},{b}"),
            Staircase { a, b } => write!(f, "stair:{a},{b}"),
            ShiftedStaircase { n } => write!(f, "sstair:{n}"),
            ShiftedTrapezoid { n, k } => write!(f, "trap:{n},{k}"),
            ShiftedDoubleStaircase { n, k } => write!(f, "sds:{n},{k}"),
            ArithmeticProgression { top, d, len } => write!(f, "ap:{top},{d},{len}"),
            Custom(parts) => {
                f.write_str("custom:")?;
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

pub(crate) fn parse_numbers(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| param(format!("bad number {t:?}: {e}")))
        })
        .collect()
}

impl FromStr for ShapeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, rest) = s
            .split_once(':')
            .ok_or_else(|| param(format!("shape {s:?} must look like family:params")))?;
        let nums = parse_numbers(rest)?;
        let want = |n: usize| -> Result<()> {
            if nums.len() == n {
                Ok(())
            } else {
                Err(param(format!(
                    "shape family {tag:?} takes {n} parameters, got {}",
                    nums.len()
                )))
            }
        };
        use ShapeFamily::*;
        let family = match tag {
            "rect" => {
                want(2)?;
                Rectangle { a: nums[0], b: nums[1] }
            }
            "stair" => {
                want(2)?;
                Staircase { a: nums[0], b: nums[1] }
            }
            "sstair" => {
                want(1)?;
                ShiftedStaircase { n: nums[0] }
            }
            "trap" => {
                want(2)?;
                ShiftedTrapezoid { n: nums[0], k: nums[1] }
            }
            "sds" => {
                want(2)?;
                ShiftedDoubleStaircase { n: nums[0], k: nums[1] }
            }
            "ap" => {
                want(3)?;
                ArithmeticProgression {
                    top: nums[0],
                    d: nums[1],
                    len: nums[2],
                }
            }
            "custom" => Custom(nums),
            other => return Err(param(format!("unknown shape family {other:?}"))),
        };
        make_shape(&family)?;
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strict(parts: &[usize]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn family_examples() {
        let sds = |n, k| make_shape(&ShapeFamily::ShiftedDoubleStaircase { n, k }).unwrap();
        assert_eq!(sds(2, 1).parts(), &[3, 1]);
        assert_eq!(sds(6, 3).parts(), &[9, 7, 5, 3, 2, 1]);
        let ap = make_shape(&ShapeFamily::ArithmeticProgression { top: 3, d: 1, len: 2 }).unwrap();
        assert_eq!(ap.parts(), &[2, 1]);
        let trap = make_shape(&ShapeFamily::ShiftedTrapezoid { n: 7, k: 3 }).unwrap();
        assert_eq!(trap.parts(), &[7, 5, 3]);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(make_shape(&ShapeFamily::ShiftedDoubleStaircase { n: 1, k: 2 }).is_err());
        assert!(make_shape(&ShapeFamily::ShiftedTrapezoid { n: 3, k: 3 }).is_err());
        assert!(make_shape(&ShapeFamily::Staircase { a: 3, b: 2 }).is_err());
        assert!(make_shape(&ShapeFamily::ArithmeticProgression { top: 3, d: 1, len: 3 }).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(StrictPartition::new(vec![2, 2]).is_err());
    }

    #[test]
    fn family_coincidences() {
        for n in 0..6 {
            assert_eq!(
                make_shape(&ShapeFamily::ShiftedDoubleStaircase { n, k: 0 }).unwrap(),
                make_shape(&ShapeFamily::ShiftedStaircase { n }).unwrap()
            );
        }
        for top in 1..6 {
            for len in 0..5 {
                assert_eq!(
                    make_shape(&ShapeFamily::ArithmeticProgression { top, d: 0, len })
                        .unwrap(),
                    make_shape(&ShapeFamily::Rectangle { a: len, b: top }).unwrap()
                );
                if len < top {
                    assert_eq!(
                        make_shape(&ShapeFamily::ArithmeticProgression { top, d: 1, len })
                            .unwrap(),
                        make_shape(&ShapeFamily::Staircase { a: len, b: top - 1 }).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn doubling() {
        assert_eq!(double_shape(&strict(&[1])).parts(), &[1]);
        assert_eq!(double_shape(&strict(&[2, 1])).parts(), &[2, 2]);
        assert_eq!(double_shape(&strict(&[3, 1])).parts(), &[3, 2, 1]);
    }

    #[test]
    fn doubled_shapes_are_self_conjugate() {
        // every strict partition with parts <= 8 and at most 6 rows
        for mask in 0u32..(1 << 8) {
            let parts: Vec<usize> = (1..=8).rev().filter(|p| mask >> (p - 1) & 1 == 1).collect();
            if parts.len() > 6 {
                continue;
            }
            let lambda = strict(&parts);
            let d = double_shape(&lambda);
            assert!(d.is_self_conjugate(), "{lambda}");
            assert_eq!(d.size(), 2 * lambda.size() - lambda.rows(), "{lambda}");
        }
    }

    #[test]
    fn contents() {
        assert_eq!(content(1, 1), 0);
        assert_eq!(content(1, 3), 2);
        assert_eq!(content(3, 1), -2);
    }

    #[test]
    fn shape_syntax_round_trips() {
        for s in ["rect:2,3", "sds:6,3", "trap:5,2", "stair:2,4", "sstair:3", "ap:7,2,3", "custom:4,2,2"] {
            let f: ShapeFamily = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("rect:2".parse::<ShapeFamily>().is_err());
        assert!("blob:1".parse::<ShapeFamily>().is_err());
        assert!("sds:1,2".parse::<ShapeFamily>().is_err());
    }

    #[test]
    fn shifted_cells_layout() {
        assert_eq!(
            strict(&[3, 1]).shifted_cells(),
            vec![(1, 1), (1, 2), (1, 3), (2, 2)]
        );
        assert!(strict(&[3, 1]).contains(2, 2));
        assert!(!strict(&[3, 1]).contains(2, 1));
    }
}
