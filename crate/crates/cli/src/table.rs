//! The `table` command: counts over a grid of shape-family parameters.

use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::Serialize;
use tilecount::{Budget, Error, Result, ShapeFamily};

use crate::cache::CountCache;
use crate::count::{self, Answer, Kind, Method, Target};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Rect,
    Stair,
    Sstair,
    Trap,
    Sds,
    Ap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Family {
    /// Parameter names, the bound `m` last.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            Family::Rect | Family::Stair => &["a", "b", "m"],
            Family::Sstair => &["n", "m"],
            Family::Trap | Family::Sds => &["n", "k", "m"],
            Family::Ap => &["top", "d", "len", "m"],
        }
    }

    fn kind(self) -> Kind {
        match self {
            Family::Rect | Family::Stair | Family::Ap => Kind::Pp,
            Family::Sstair | Family::Trap | Family::Sds => Kind::Spp,
        }
    }

    fn shape(self, v: &[u64]) -> ShapeFamily {
        let u = |i: usize| v[i] as usize;
        match self {
            Family::Rect => ShapeFamily::Rectangle { a: u(0), b: u(1) },
            Family::Stair => ShapeFamily::Staircase { a: u(0), b: u(1) },
            Family::Sstair => ShapeFamily::ShiftedStaircase { n: u(0) },
            Family::Trap => ShapeFamily::ShiftedTrapezoid { n: u(0), k: u(1) },
            Family::Sds => ShapeFamily::ShiftedDoubleStaircase { n: u(0), k: u(1) },
            Family::Ap => ShapeFamily::ArithmeticProgression { top: u(0), d: u(1), len: u(2) },
        }
    }
}

/// Largest number of rows a table may have.
const MAX_ROWS: usize = 100_000;

/// One end of a range: a number, or an earlier parameter plus an offset.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Bound {
    Value(u64),
    Param(String, i64),
}

impl Bound {
    fn parse(s: &str) -> Result<Bound> {
        let s = s.trim();
        if let Ok(v) = s.parse() {
            return Ok(Bound::Value(v));
        }
        let (name, offset) = match s.find(['+', '-']) {
            Some(i) => {
                let off: i64 = s[i + 1..]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Usage(format!("bad range bound {s:?}")))?;
                (&s[..i], if &s[i..=i] == "-" { -off } else { off })
            }
            None => (s, 0),
        };
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphabetic()) {
            return Err(Error::Usage(format!("bad range bound {s:?}")));
        }
        Ok(Bound::Param(name.to_string(), offset))
    }

    fn eval(&self, known: &BTreeMap<&str, u64>) -> Result<i64> {
        match self {
            Bound::Value(v) => Ok(*v as i64),
            Bound::Param(name, off) => known
                .get(name.as_str())
                .map(|v| *v as i64 + off)
                .ok_or_else(|| Error::Usage(format!("range refers to {name:?}, which is not an earlier parameter"))),
        }
    }
}

/// An inclusive range `lo..hi`, or a single value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeSpec {
    lo: Bound,
    hi: Bound,
}

impl std::str::FromStr for RangeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once("..") {
            Some((lo, hi)) => Ok(RangeSpec {
                lo: Bound::parse(lo)?,
                hi: Bound::parse(hi.trim_start_matches('=')).map_err(|_| Error::Usage(format!("bad range {s:?}")))?,
            }),
            None => {
                let b = Bound::parse(s)?;
                Ok(RangeSpec { lo: b.clone(), hi: b })
            }
        }
    }
}

#[derive(Debug)]
pub struct Row {
    pub names: &'static [&'static str],
    pub params: Vec<u64>,
    pub count: String,
}

#[derive(Debug, Serialize)]
pub struct Table {
    pub schema: u32,
    pub family: String,
    pub method: String,
    pub columns: Vec<String>,
    #[serde(serialize_with = "rows_as_objects")]
    pub rows: Vec<Row>,
    pub skipped: usize,
}

/// Rows need the column names, so they are written by the table.
fn rows_as_objects<S: serde::Serializer>(rows: &[Row], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::{SerializeMap, SerializeSeq};
    struct Named<'a>(&'a Row);
    impl Serialize for Named<'_> {
        fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut map = s.serialize_map(Some(self.0.params.len() + 1))?;
            for (name, v) in self.0.names.iter().zip(&self.0.params) {
                map.serialize_entry(name, v)?;
            }
            map.serialize_entry("count", &self.0.count)?;
            map.end()
        }
    }
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for r in rows {
        seq.serialize_element(&Named(r))?;
    }
    seq.end()
}

/// Expands the ranges in parameter order. Later ranges may refer to earlier
/// parameters by name.
fn expand(names: &[&'static str], ranges: &[RangeSpec]) -> Result<Vec<Vec<u64>>> {
    fn go<'a>(
        names: &[&'a str],
        ranges: &[RangeSpec],
        known: &mut BTreeMap<&'a str, u64>,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) -> Result<()> {
        let Some((name, rest)) = names.split_first() else {
            if out.len() >= MAX_ROWS {
                return Err(Error::Usage(format!("table would exceed {MAX_ROWS} rows")));
            }
            out.push(cur.clone());
            return Ok(());
        };
        let r = &ranges[0];
        let (lo, hi) = (r.lo.eval(known)?.max(0), r.hi.eval(known)?);
        for v in lo..=hi {
            let v = v as u64;
            known.insert(name, v);
            cur.push(v);
            go(rest, &ranges[1..], known, cur, out)?;
            cur.pop();
        }
        known.remove(name);
        Ok(())
    }
    let mut out = Vec::new();
    go(names, ranges, &mut BTreeMap::new(), &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// Builds the table. Parameter combinations outside a family's domain
/// (e.g. `k > n` for `sds`) are skipped and counted.
pub fn build(family: Family, ranges: &[RangeSpec], method: Method, budget: &Budget, cache: &CountCache) -> Result<Table> {
    let names = family.params();
    let mut rows = Vec::new();
    let mut skipped = 0;
    for v in expand(names, ranges)? {
        let m = *v.last().expect("every family has m");
        let shape = family.shape(&v);
        if tilecount::shapes::make_shape(&shape).is_err() {
            skipped += 1;
            continue;
        }
        let target = Target::Shape { kind: family.kind(), family: shape, m };
        let (answer, _) = count::run(&target, method, false, budget, cache)?;
        let Answer::Count(c) = answer else { unreachable!("plain counts") };
        rows.push(Row { names, params: v, count: c.to_string() });
    }
    let family_name = family.to_possible_value().expect("named").get_name().to_string();
    Ok(Table {
        schema: crate::report::SCHEMA,
        family: family_name,
        method: method.to_string(),
        columns: names.iter().map(|s| s.to_string()).collect(),
        rows,
        skipped,
    })
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push_str(",count\n");
        for r in &self.rows {
            for p in &r.params {
                out.push_str(&p.to_string());
                out.push(',');
            }
            out.push_str(&r.count);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranges(specs: &[&str]) -> Vec<RangeSpec> {
        specs.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn table(family: Family, specs: &[&str]) -> Table {
        build(family, &ranges(specs), Method::Formula, &Budget::default(), &CountCache::disabled()).unwrap()
    }

    #[test]
    fn dependent_ranges() {
        let t = table(Family::Sds, &["1..3", "0..n", "1..2"]);
        assert_eq!(t.rows.len(), (2 + 3 + 4) * 2);
        assert_eq!(t.rows[0].params, [1, 0, 1]);
        let t = table(Family::Rect, &["1..2", "1..2", "1"]);
        assert_eq!(t.rows.len(), 4);
        assert_eq!(t.to_csv().lines().next(), Some("a,b,m,count"));
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["rows"][0], serde_json::json!({"a": 1, "b": 1, "m": 1, "count": "2"}));
    }

    #[test]
    fn invalid_combinations_are_skipped() {
        let t = table(Family::Trap, &["2..4", "1..2", "1"]);
        assert_eq!(t.skipped, 1);
        assert_eq!(t.rows.len(), 5);
    }

    #[test]
    fn offsets_and_errors() {
        let r: RangeSpec = "0..n-1".parse().unwrap();
        assert_eq!(r.hi, Bound::Param("n".into(), -1));
        assert!("1..x!".parse::<RangeSpec>().is_err());
        let e = build(Family::Sds, &ranges(&["0..k", "0", "1"]), Method::Formula, &Budget::default(), &CountCache::disabled());
        assert!(matches!(e, Err(Error::Usage(_))));
    }
}
