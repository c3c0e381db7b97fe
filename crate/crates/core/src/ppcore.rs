//! Brute-force enumeration of (shifted) plane partitions with bounded entries,
//! their statistics, and the transposition/complementation symmetries.

use crate::error::{Error, Result};
use crate::exactnum::{Count, QPoly};
use crate::shapes::{Partition, Shape, StrictPartition};
use num_bigint::BigInt;
use num_traits::One;

/// A filling of a shape with entries in `[0, bound]`, weakly decreasing along
/// rows and down columns.
///
/// `rows[i-1][k]` is the entry of cell `(i, row_start(i) + k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    shape: Shape,
    bound: u64,
    rows: Vec<Vec<u64>>,
}

impl PlanePartition {
    /// Validates shape agreement, the bound and monotonicity.
    pub fn new(shape: Shape, bound: u64, rows: Vec<Vec<u64>>) -> Result<Self> {
        let parts = shape.parts();
        if rows.len() != parts.len() || rows.iter().zip(parts).any(|(r, &p)| r.len() != p) {
            return Err(Error::Shape(format!("entries do not fill {shape}")));
        }
        let pp = PlanePartition { shape, bound, rows };
        for (i, j) in pp.shape.cells() {
            let v = pp.entry(i, j).unwrap();
            let left = pp.entry(i, j.wrapping_sub(1));
            let above = pp.entry(i.wrapping_sub(1), j);
            if v > bound || left.is_some_and(|l| l < v) || above.is_some_and(|a| a < v) {
                return Err(Error::Shape(format!(
                    "entry {v} at ({i},{j}) breaks the bound or monotonicity"
                )));
            }
        }
        Ok(pp)
    }

    pub fn zero(shape: Shape, bound: u64) -> Self {
        let rows = shape.parts().iter().map(|&p| vec![0; p]).collect();
        PlanePartition { shape, bound, rows }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Entry at 1-based cell `(i, j)`, or `None` outside the shape.
    pub fn entry(&self, i: usize, j: usize) -> Option<u64> {
        if !self.shape.contains(i, j) {
            return None;
        }
        Some(self.rows[i - 1][j - self.shape.row_start(i)])
    }

    /// Row-major reading word.
    pub fn reading_word(&self) -> Vec<u64> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn size(&self) -> u64 {
        self.rows.iter().flatten().sum()
    }
}

/// Cell-by-cell odometer over all fillings of a shape in lexicographic order
/// of the reading word.
#[derive(Clone, Debug)]
pub struct Fillings {
    shape: Shape,
    bound: u64,
    /// For each cell in reading order, the earlier cells bounding it.
    deps: Vec<(Option<usize>, Option<usize>)>,
    word: Vec<u64>,
    started: bool,
    done: bool,
}

impl Fillings {
    fn new(shape: Shape, bound: u64) -> Self {
        let cells = shape.cells();
        let index_of = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
        let deps = cells
            .iter()
            .map(|&(i, j)| {
                let left = if j > 1 { index_of(i, j - 1) } else { None };
                let above = if i > 1 { index_of(i - 1, j) } else { None };
                (left, above)
            })
            .collect();
        Fillings {
            word: vec![0; cells.len()],
            shape,
            bound,
            deps,
            started: false,
            done: false,
        }
    }

    fn cap(&self, k: usize) -> u64 {
        let (left, above) = self.deps[k];
        let mut c = self.bound;
        if let Some(l) = left {
            c = c.min(self.word[l]);
        }
        if let Some(a) = above {
            c = c.min(self.word[a]);
        }
        c
    }

    fn current(&self) -> PlanePartition {
        let mut rows = Vec::with_capacity(self.shape.parts().len());
        let mut it = self.word.iter().copied();
        for &p in self.shape.parts() {
            rows.push(it.by_ref().take(p).collect());
        }
        PlanePartition {
            shape: self.shape.clone(),
            bound: self.bound,
            rows,
        }
    }
}

impl Fillings {
    /// Moves to the next word; false once the last one has been passed.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            return true;
        }
        // Later cells only carry upper bounds from earlier ones, so resetting
        // the suffix to zero is always valid.
        for k in (0..self.word.len()).rev() {
            if self.word[k] < self.cap(k) {
                self.word[k] += 1;
                self.word[k + 1..].iter_mut().for_each(|w| *w = 0);
                return true;
            }
        }
        self.done = true;
        false
    }
}

impl Iterator for Fillings {
    type Item = PlanePartition;

    fn next(&mut self) -> Option<PlanePartition> {
        self.advance().then(|| self.current())
    }

    /// Steps through the remaining fillings without building them.
    fn count(mut self) -> usize {
        let mut n = 0;
        while self.advance() {
            n += 1;
        }
        n
    }
}

/// Every element of `PP^m(λ)`, lexicographic in the reading word.
pub fn enumerate_pp(lambda: &Partition, m: u64) -> Fillings {
    Fillings::new(Shape::Ordinary(lambda.clone()), m)
}

/// Every element of `SPP^m(λ)`, lexicographic in the reading word.
pub fn enumerate_spp(lambda: &StrictPartition, m: u64) -> Fillings {
    Fillings::new(Shape::Shifted(lambda.clone()), m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PpStatistics {
    pub size: u64,
    /// Sum of the entries on or above the diagonal; square shapes only.
    pub half_size: Option<u64>,
}

pub fn pp_statistics(pi: &PlanePartition) -> PpStatistics {
    let square = match &pi.shape {
        Shape::Ordinary(p) => p.rectangle_dims().is_some_and(|(a, b)| a == b),
        Shape::Shifted(p) => p.is_empty(),
    };
    let half_size = square.then(|| {
        pi.shape
            .cells()
            .into_iter()
            .filter(|&(i, j)| i <= j)
            .map(|(i, j)| pi.entry(i, j).unwrap())
            .sum()
    });
    PpStatistics {
        size: pi.size(),
        half_size,
    }
}

/// Reflection across the main diagonal; the shape must be self-conjugate.
pub fn transpose(pi: &PlanePartition) -> Result<PlanePartition> {
    let lambda = pi.shape.as_ordinary()?;
    if !lambda.is_self_conjugate() {
        return Err(Error::Shape(format!("{lambda} is not self-conjugate")));
    }
    let rows = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| (1..=len).map(|j| pi.entry(j, r + 1).unwrap()).collect())
        .collect();
    Ok(PlanePartition {
        shape: pi.shape.clone(),
        bound: pi.bound,
        rows,
    })
}

/// `Co(π)_{i,j} = m - π_{a+1-i, b+1-j}`; the shape must be a rectangle.
pub fn complement(pi: &PlanePartition) -> Result<PlanePartition> {
    let lambda = pi.shape.as_ordinary()?;
    let (a, b) = lambda
        .rectangle_dims()
        .ok_or_else(|| Error::Shape(format!("{lambda} is not a rectangle")))?;
    let rows = (1..=a)
        .map(|i| {
            (1..=b)
                .map(|j| pi.bound - pi.entry(a + 1 - i, b + 1 - j).unwrap())
                .collect()
        })
        .collect();
    Ok(PlanePartition {
        shape: pi.shape.clone(),
        bound: pi.bound,
        rows,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetryClass {
    All,
    Symmetric,
    TransposeComplementary,
    SymmetricSelfComplementary,
}

impl SymmetryClass {
    pub fn contains(self, pi: &PlanePartition) -> Result<bool> {
        Ok(match self {
            SymmetryClass::All => true,
            SymmetryClass::Symmetric => transpose(pi)? == *pi,
            SymmetryClass::TransposeComplementary => transpose(pi)? == complement(pi)?,
            SymmetryClass::SymmetricSelfComplementary => {
                transpose(pi)? == *pi && complement(pi)? == *pi
            }
        })
    }
}

/// Brute-force size of a symmetry class inside `PP^m(n × n)`.
pub fn count_symmetry_class(class: SymmetryClass, n: usize, m: u64) -> Count {
    let square = Partition::rectangle(n, n);
    let mut total = 0u64;
    for pi in enumerate_pp(&square, m) {
        if class.contains(&pi).expect("square shapes support both symmetries") {
            total += 1;
        }
    }
    Count::from(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    Size,
    HalfSize,
}

/// `Σ q^{weight(π)}` over a finite stream.
pub fn gen_function<'a, I>(stream: I, weight: Weight) -> Result<QPoly>
where
    I: IntoIterator<Item = &'a PlanePartition>,
{
    let mut poly = QPoly::zero();
    let one = BigInt::one();
    for pi in stream {
        let stats = pp_statistics(pi);
        let e = match weight {
            Weight::Size => stats.size,
            Weight::HalfSize => stats.half_size.ok_or_else(|| {
                Error::Shape(format!("half-size needs a square shape, got {}", pi.shape))
            })?,
        };
        poly.add_term(e as usize, &one);
    }
    Ok(poly)
}
