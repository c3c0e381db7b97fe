//! The `count` command: one quantity by one method.

use std::fmt;

use clap::ValueEnum;
use tilecount::exactlinalg::{count_spp_pf, pp_det_count, pp_det_qpoly};
use tilecount::formulas::{
    count_arith_progression, count_flashlight_formula, count_quartered_hexagon, count_rectangle,
    count_sds, count_shifted_staircase, count_shifted_trapezoid, count_staircase, q_count_rectangle,
};
use tilecount::lattice::parse_region;
use tilecount::ppcore::{enumerate_pp, enumerate_spp, gen_function, Fillings, Weight};
use tilecount::shapes::make_shape;
use tilecount::{
    Budget, Count, Error, FlashlightParams, Partition, PlanePartition, Provenance, QPoly, Region,
    Result, ShapeFamily, StrictPartition,
};

use crate::cache::CountCache;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Pp,
    Spp,
    Tilings,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Det,
    Pfaffian,
    Brute,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Det => "det",
            Method::Pfaffian => "pfaffian",
            Method::Brute => "brute",
        })
    }
}

/// What is being counted.
#[derive(Clone, Debug)]
pub enum Target {
    Shape { kind: Kind, family: ShapeFamily, m: u64 },
    Region(Region),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Count(Count),
    Poly(QPoly),
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Count(c) => write!(f, "{c}"),
            Answer::Poly(p) => {
                let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
                write!(f, "[{}]", coeffs.join(", "))
            }
        }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

impl Target {
    /// Builds the target from the command-line pieces.
    pub fn parse(kind: Kind, shape: Option<&str>, region: Option<&str>, m: Option<u64>) -> Result<Target> {
        match (kind, shape, region) {
            (Kind::Tilings, None, Some(r)) => {
                if m.is_some() {
                    return Err(usage("--max does not apply to regions"));
                }
                Ok(Target::Region(parse_region(r)?))
            }
            (Kind::Tilings, _, _) => Err(usage("count tilings takes --region")),
            (_, Some(s), None) => {
                let m = m.ok_or_else(|| usage("--max is required with --shape"))?;
                Ok(Target::Shape { kind, family: s.parse()?, m })
            }
            _ => Err(usage("count pp|spp takes --shape")),
        }
    }

    /// Stable descriptor used as the cache key prefix.
    pub fn descriptor(&self) -> Result<String> {
        Ok(match self {
            Target::Shape { kind, family, m } => {
                let shape = make_shape(family)?;
                let kind = if *kind == Kind::Pp { "pp" } else { "spp" };
                format!("{kind} {shape} m={m}")
            }
            Target::Region(r) => format!("tilings {}", r.label()),
        })
    }
}

fn ordinary(family: &ShapeFamily) -> Result<Partition> {
    Ok(make_shape(family)?.as_ordinary()?.clone())
}

fn strict(family: &ShapeFamily) -> Result<StrictPartition> {
    make_shape(family)?.to_strict()
}

fn sds(n: u64, k: u64) -> Result<StrictPartition> {
    strict(&ShapeFamily::ShiftedDoubleStaircase { n: n as usize, k: k as usize })
}

/// Counts a stream of fillings, refusing to go past the enumeration cap.
fn capped(fillings: Fillings, budget: &Budget) -> Result<Count> {
    let seen = fillings.take(budget.enum_cap.saturating_add(1)).count();
    if seen > budget.enum_cap {
        return Err(Error::Resource { what: "fillings", needed: seen, budget: budget.enum_cap });
    }
    Ok(Count::from(seen as u64))
}

fn capped_poly(fillings: Fillings, budget: &Budget) -> Result<QPoly> {
    let all: Vec<PlanePartition> = fillings.take(budget.enum_cap.saturating_add(1)).collect();
    if all.len() > budget.enum_cap {
        return Err(Error::Resource { what: "fillings", needed: all.len(), budget: budget.enum_cap });
    }
    gen_function(&all, Weight::Size)
}

fn pp_formula(family: &ShapeFamily, m: u64) -> Result<(Count, &'static str)> {
    use ShapeFamily::*;
    let u = |v: usize| v as u64;
    match family {
        Rectangle { a, b } => Ok((count_rectangle(u(*a), u(*b), m)?, "MacMahon box product")),
        Staircase { a, b } => Ok((count_staircase(u(*a), u(*b), m)?, "staircase product")),
        ArithmeticProgression { top, d, len } => {
            Ok((count_arith_progression(u(*top), u(*d), u(*len), m)?, "arithmetic progression product"))
        }
        Custom(_) => match ordinary(family)?.rectangle_dims() {
            Some((a, b)) => Ok((count_rectangle(u(a), u(b), m)?, "MacMahon box product")),
            None => Err(usage("no product formula for this shape; try --method det")),
        },
        _ => Err(usage("shifted shape families are counted with `count spp`")),
    }
}

fn spp_formula(family: &ShapeFamily, m: u64) -> Result<(Count, &'static str)> {
    use ShapeFamily::*;
    let u = |v: usize| v as u64;
    match family {
        ShiftedStaircase { n } => Ok((count_shifted_staircase(u(*n), m)?, "shifted staircase product")),
        ShiftedTrapezoid { n, k } => Ok((count_shifted_trapezoid(u(*n), u(*k), m)?, "shifted trapezoid product")),
        ShiftedDoubleStaircase { n, k } => Ok((count_sds(u(*n), u(*k), m)?, "shifted double staircase product")),
        _ => Err(usage("no product formula for this shape; try --method pfaffian")),
    }
}

fn region_formula(region: &Region) -> Result<(Count, &'static str)> {
    match region.provenance() {
        Provenance::Hexagon { a, b, c } => Ok((count_rectangle(*a, *b, *c)?, "MacMahon box product")),
        Provenance::Shape { lambda, m } => match lambda.rectangle_dims() {
            Some((a, b)) => Ok((count_rectangle(a as u64, b as u64, *m)?, "MacMahon box product")),
            None => Err(usage("no product formula for this region; try --method det")),
        },
        Provenance::Flashlight(p) => Ok((count_flashlight_formula(p)?, "flashlight product")),
        Provenance::QuarteredHexagon { x, s } => {
            Ok((count_quartered_hexagon(*x, s)?, "quartered hexagon product"))
        }
        Provenance::Shifted { .. } => Err(usage("no product formula for this region; try --method pfaffian")),
        Provenance::Custom => Err(usage("custom regions can only be counted by brute force")),
    }
}

fn region_det(region: &Region) -> Result<Count> {
    match region.provenance() {
        Provenance::Hexagon { a, b, c } => pp_det_count(&Partition::rectangle(*a as usize, *b as usize), *c),
        Provenance::Shape { lambda, m } => pp_det_count(lambda, *m),
        _ => Err(usage("the determinant applies to hex: and shape: regions")),
    }
}

fn region_pfaffian(region: &Region) -> Result<Count> {
    match region.provenance() {
        Provenance::Shifted { lambda, m } => count_spp_pf(lambda, *m),
        Provenance::Flashlight(FlashlightParams { x, y, z, t: 0 }) => count_spp_pf(&sds(y + z, *z)?, *x),
        _ => Err(usage("the Pfaffian applies to shifted: regions and flashlights with t = 0")),
    }
}

/// Computes `target` by `method`, returning the answer and a one-line
/// description of the route taken. Plain counts go through `cache`.
pub fn run(target: &Target, method: Method, q: bool, budget: &Budget, cache: &CountCache) -> Result<(Answer, String)> {
    if q {
        return run_q(target, method, budget);
    }
    let mut route = String::new();
    let key = format!("{}|{method}", target.descriptor()?);
    let value = cache.get_or_compute(&key, || {
        let (count, how) = compute(target, method, budget)?;
        route = how.to_string();
        Ok(count)
    })?;
    if route.is_empty() {
        route = "cached".to_string();
    }
    Ok((Answer::Count(value), format!("{method}: {route}")))
}

fn compute(target: &Target, method: Method, budget: &Budget) -> Result<(Count, &'static str)> {
    match (target, method) {
        (Target::Shape { kind: Kind::Pp, family, m }, Method::Formula) => pp_formula(family, *m),
        (Target::Shape { kind: Kind::Pp, family, m }, Method::Det) => {
            Ok((pp_det_count(&ordinary(family)?, *m)?, "MacMahon determinant"))
        }
        (Target::Shape { kind: Kind::Pp, family, m }, Method::Brute) => {
            Ok((capped(enumerate_pp(&ordinary(family)?, *m), budget)?, "enumeration of fillings"))
        }
        (Target::Shape { kind: Kind::Spp, family, m }, Method::Formula) => spp_formula(family, *m),
        (Target::Shape { kind: Kind::Spp, family, m }, Method::Pfaffian) => {
            Ok((count_spp_pf(&strict(family)?, *m)?, "Stembridge Pfaffian"))
        }
        (Target::Shape { kind: Kind::Spp, family, m }, Method::Brute) => {
            Ok((capped(enumerate_spp(&strict(family)?, *m), budget)?, "enumeration of fillings"))
        }
        (Target::Region(r), Method::Formula) => region_formula(r),
        (Target::Region(r), Method::Det) => Ok((region_det(r)?, "MacMahon determinant")),
        (Target::Region(r), Method::Pfaffian) => Ok((region_pfaffian(r)?, "Stembridge Pfaffian")),
        (Target::Region(r), Method::Brute) => Ok((r.count(budget)?, "free-boundary matching count")),
        (Target::Shape { kind: Kind::Pp, .. }, Method::Pfaffian) => {
            Err(usage("the Pfaffian counts shifted plane partitions; use `count spp`"))
        }
        (Target::Shape { kind: Kind::Spp, .. }, Method::Det) => {
            Err(usage("the determinant counts plane partitions; use `count pp`"))
        }
        (Target::Shape { kind: Kind::Tilings, .. }, _) => Err(usage("count tilings takes --region")),
    }
}

fn run_q(target: &Target, method: Method, budget: &Budget) -> Result<(Answer, String)> {
    let (poly, how) = match (target, method) {
        (Target::Shape { kind: Kind::Pp, family, m }, Method::Formula) => match ordinary(family)?.rectangle_dims() {
            Some((a, b)) => (q_count_rectangle(a, b, *m as usize), "q-MacMahon box product"),
            None => return Err(usage("the q-formula is available for rectangles only")),
        },
        (Target::Shape { kind: Kind::Pp, family, m }, Method::Det) => {
            (pp_det_qpoly(&ordinary(family)?, *m), "MacMahon q-determinant")
        }
        (Target::Shape { kind: Kind::Pp, family, m }, Method::Brute) => {
            (capped_poly(enumerate_pp(&ordinary(family)?, *m), budget)?, "enumeration of fillings")
        }
        (Target::Shape { kind: Kind::Spp, family, m }, Method::Brute) => {
            (capped_poly(enumerate_spp(&strict(family)?, *m), budget)?, "enumeration of fillings")
        }
        _ => return Err(usage("--q supports pp by formula, det or brute, and spp by brute")),
    };
    Ok((Answer::Poly(poly), format!("{method}: {how}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(kind: Kind, shape: Option<&str>, region: Option<&str>, m: Option<u64>, method: Method) -> Result<String> {
        let t = Target::parse(kind, shape, region, m)?;
        Ok(run(&t, method, false, &Budget::default(), &CountCache::disabled())?.0.to_string())
    }

    #[test]
    fn documented_examples() {
        assert_eq!(count(Kind::Spp, Some("sds:2,1"), None, Some(1), Method::Formula).unwrap(), "6");
        assert_eq!(count(Kind::Tilings, None, Some("flashlight:1,1,1,0"), None, Method::Brute).unwrap(), "6");
        assert_eq!(count(Kind::Pp, Some("rect:1,1"), None, Some(1), Method::Det).unwrap(), "2");
    }

    #[test]
    fn methods_agree() {
        for method in [Method::Formula, Method::Pfaffian, Method::Brute] {
            assert_eq!(count(Kind::Spp, Some("sds:3,2"), None, Some(2), method).unwrap(), "175", "{method}");
        }
        for method in [Method::Formula, Method::Det, Method::Brute] {
            assert_eq!(count(Kind::Pp, Some("rect:2,3"), None, Some(2), method).unwrap(), "50", "{method}");
            assert_eq!(count(Kind::Tilings, None, Some("hex:2,3,2"), None, method).unwrap(), "50", "{method}");
        }
        for method in [Method::Formula, Method::Pfaffian, Method::Brute] {
            assert_eq!(count(Kind::Tilings, None, Some("flashlight:2,1,1,0"), None, method).unwrap(), "20", "{method}");
        }
    }

    #[test]
    fn mismatched_method_is_usage() {
        let e = count(Kind::Pp, Some("rect:2,2"), None, Some(1), Method::Pfaffian).unwrap_err();
        assert!(matches!(e, Error::Usage(_)));
        let e = count(Kind::Tilings, None, Some("qhex:2,1"), None, Method::Det).unwrap_err();
        assert!(matches!(e, Error::Usage(_)));
    }

    #[test]
    fn q_counts() {
        let t = Target::parse(Kind::Pp, Some("rect:1,1"), None, Some(2)).unwrap();
        for method in [Method::Formula, Method::Det, Method::Brute] {
            let (a, _) = run(&t, method, true, &Budget::default(), &CountCache::disabled()).unwrap();
            assert_eq!(a.to_string(), "[1, 1, 1]");
        }
    }

    #[test]
    fn enumeration_cap_is_a_resource_error() {
        let t = Target::parse(Kind::Pp, Some("rect:3,3"), None, Some(3)).unwrap();
        let budget = Budget { enum_cap: 10, ..Budget::default() };
        let e = run(&t, Method::Brute, false, &budget, &CountCache::disabled()).unwrap_err();
        assert!(matches!(e, Error::Resource { .. }));
    }
}
