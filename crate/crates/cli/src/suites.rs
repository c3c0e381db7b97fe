//! Verification suites. Each one expands a parameter grid into instances,
//! runs them on the rayon pool and assembles a sorted report.

use std::collections::BTreeSet;

use clap::ValueEnum;
use rayon::prelude::*;
use tilecount::exactlinalg::{count_spp_pf, pp_det_count, pp_det_qpoly};
use tilecount::formulas::{
    count_flashlight_formula, count_rectangle, count_sds, count_shifted_staircase,
    count_shifted_trapezoid, count_staircase, eval_identity1a, eval_identity1b, eval_identity2a,
    eval_identity2b, kummer_closed_sum, p_identity_check, p_identity_check_z1, q_count_rectangle,
    q_symmetric_bender_knuth, q_symmetric_macmahon, recurrence_terms,
};
use tilecount::lattice::{
    build_flashlight, build_shape_region, conjecture_y0_check, enumerate_tilings,
    flashlight_kuo_vertices, kuo_verify, pp_to_tiling, recurrence_verify, separation_check,
    spp_to_tiling, tiling_to_pp, tiling_to_spp, verify_conversions, x1_decomposition_check,
    RecurrenceMode,
};
use tilecount::ppcore::{enumerate_pp, enumerate_spp, gen_function, SymmetryClass, Weight};
use tilecount::shapes::make_shape;
use tilecount::{
    Budget, Count, Error, FlashlightParams, Partition, PlanePartition, Region, Result, ShapeFamily,
    StrictPartition,
};

use crate::cache::CountCache;
use crate::report::{Instance, Params, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Formulas,
    Det,
    Pfaffian,
    Flashlight,
    Kuo,
    Recurrences,
    Identities,
    Qanalogs,
    Bijections,
    Y0Experiment,
    All,
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

/// Optional overrides of a suite's default ranges.
#[derive(Clone, Copy, Debug, Default)]
pub struct GridArgs {
    pub xmax: Option<u64>,
    pub ymax: Option<u64>,
    pub zmax: Option<u64>,
    pub tmax: Option<u64>,
    pub nmax: Option<u64>,
    pub mmax: Option<u64>,
}

pub struct Ctx<'a> {
    pub budget: Budget,
    pub cache: &'a CountCache,
    pub strict: bool,
}

impl Ctx<'_> {
    fn region_count(&self, region: &Region) -> Result<Count> {
        let key = format!("tilings {}|brute", region.label());
        self.cache.get_or_compute(&key, || region.count(&self.budget))
    }

    fn fillings_count(&self, kind: &str, shape: &dyn std::fmt::Display, m: u64, run: impl FnOnce() -> usize) -> Result<Count> {
        let key = format!("{kind} {shape} m={m}|brute");
        self.cache.get_or_compute(&key, || Ok(Count::from(run() as u64)))
    }

    fn pp_count(&self, lambda: &Partition, m: u64) -> Result<Count> {
        self.fillings_count("pp", lambda, m, || enumerate_pp(lambda, m).count())
    }

    fn spp_count(&self, lambda: &StrictPartition, m: u64) -> Result<Count> {
        let shape = format!("shifted {lambda}");
        self.fillings_count("spp", &shape, m, || enumerate_spp(lambda, m).count())
    }

    fn fits(&self, p: &FlashlightParams) -> bool {
        build_flashlight(p).len() <= self.budget.triangles
    }
}

fn fl(x: u64, y: u64, z: u64, t: u64) -> FlashlightParams {
    FlashlightParams::new(x, y, z, t)
}

fn fl_params(p: &FlashlightParams) -> Params {
    Params::new().with("x", p.x).with("y", p.y).with("z", p.z).with("t", p.t)
}

fn pair(method: &str, value: impl ToString) -> (String, String) {
    (method.to_string(), value.to_string())
}

fn family(f: ShapeFamily) -> Result<tilecount::Shape> {
    make_shape(&f)
}

fn sds(n: u64, k: u64) -> Result<StrictPartition> {
    family(ShapeFamily::ShiftedDoubleStaircase { n: n as usize, k: k as usize })?.to_strict()
}

fn parts_value(parts: &[usize]) -> serde_json::Value {
    serde_json::Value::from(parts.to_vec())
}

pub fn partitions_in_box(a: usize, b: usize) -> Vec<Partition> {
    fn go(rows_left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("weakly decreasing"));
        if rows_left > 0 {
            for p in 1..=max {
                cur.push(p);
                go(rows_left - 1, p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(a, b, &mut Vec::new(), &mut out);
    out
}

pub fn strict_partitions(max_parts: usize, max_part: usize) -> Vec<StrictPartition> {
    fn go(rows_left: usize, below: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        out.push(StrictPartition::new(cur.clone()).expect("strictly decreasing"));
        if rows_left > 0 {
            for p in 1..below {
                cur.push(p);
                go(rows_left - 1, p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(max_parts, max_part + 1, &mut Vec::new(), &mut out);
    out
}

/// Values of one parameter from `from` upwards while the region stays in
/// budget; stops early when the size has stalled (an inert parameter).
fn grow(from: u64, budget: usize, size: impl Fn(u64) -> usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut prev = None;
    let mut flat = 0;
    for v in from.. {
        let s = size(v);
        if s > budget {
            break;
        }
        flat = if prev == Some(s) { flat + 1 } else { 0 };
        if flat > 2 {
            break;
        }
        prev = Some(s);
        out.push(v);
    }
    out
}

fn in_budget(ctx: &Ctx, min_x: u64, ys: std::ops::RangeInclusive<u64>, min_z: u64) -> Vec<FlashlightParams> {
    let b = ctx.budget.triangles;
    let size = |p: FlashlightParams| build_flashlight(&p).len();
    let mut out = Vec::new();
    for y in ys {
        for z in grow(min_z, b, |z| size(fl(min_x, y, z, 0))) {
            for x in grow(min_x, b, |x| size(fl(x, y, z, 0))) {
                for t in grow(0, b, |t| size(fl(x, y, z, t))) {
                    out.push(fl(x, y, z, t));
                }
            }
        }
    }
    out
}

fn grid4(g: &GridArgs, x: u64, y: u64, z: u64, t: u64) -> (u64, u64, u64, u64) {
    (g.xmax.unwrap_or(x), g.ymax.unwrap_or(y), g.zmax.unwrap_or(z), g.tmax.unwrap_or(t))
}

fn grid_params(names: &[(&str, u64)]) -> Params {
    names.iter().fold(Params::new(), |p, (n, v)| p.with(&format!("{n}max"), *v))
}

/// Runs `suite`; `All` nests one report per suite.
pub fn run(suite: Suite, grid: &GridArgs, ctx: &Ctx) -> VerificationReport {
    let one = |s: Suite| -> VerificationReport {
        let (grid, instances) = match s {
            Suite::Formulas => formulas(grid, ctx),
            Suite::Det => det(grid, ctx),
            Suite::Pfaffian => pfaffian(grid, ctx),
            Suite::Flashlight => flashlight(grid, ctx),
            Suite::Kuo => kuo(grid, ctx),
            Suite::Recurrences => recurrences(grid, ctx),
            Suite::Identities => identities(grid),
            Suite::Qanalogs => qanalogs(grid),
            Suite::Bijections => bijections(grid, ctx),
            Suite::Y0Experiment => y0(grid, ctx),
            Suite::All => unreachable!(),
        };
        VerificationReport::new(&s.name(), grid, instances, ctx.strict)
    };
    match suite {
        Suite::All => {
            let parts = Suite::value_variants()
                .iter()
                .filter(|s| **s != Suite::All)
                .map(|s| one(*s))
                .collect();
            VerificationReport::combine("all", parts, ctx.strict)
        }
        s => one(s),
    }
}

type Job<'a> = Box<dyn Fn() -> Instance + Send + Sync + 'a>;

fn par(jobs: Vec<Job>) -> Vec<Instance> {
    jobs.par_iter().map(|j| j()).collect()
}

fn formulas(g: &GridArgs, ctx: &Ctx) -> (Params, Vec<Instance>) {
    let n_max = g.nmax.unwrap_or(4);
    let m_max = g.mmax.unwrap_or(3);
    let mut jobs: Vec<Job> = Vec::new();
    for n in 0..=n_max {
        for m in 0..=m_max {
            for k in 0..=n {
                jobs.push(Box::new(move || {
                    Instance::compare("sds", Params::new().with("n", n).with("k", k).with("m", m), || {
                        let lambda = sds(n, k)?;
                        Ok(vec![
                            pair("formula", count_sds(n, k, m)?),
                            pair("pfaffian", count_spp_pf(&lambda, m)?),
                            pair("brute", ctx.spp_count(&lambda, m)?),
                        ])
                    })
                }));
                if 2 * k <= n + 1 {
                    jobs.push(Box::new(move || {
                        Instance::compare("trapezoid", Params::new().with("n", n).with("k", k).with("m", m), || {
                            let lambda = family(ShapeFamily::ShiftedTrapezoid { n: n as usize, k: k as usize })?.to_strict()?;
                            Ok(vec![
                                pair("formula", count_shifted_trapezoid(n, k, m)?),
                                pair("brute", ctx.spp_count(&lambda, m)?),
                            ])
                        })
                    }));
                }
                jobs.push(Box::new(move || {
                    Instance::compare("staircase", Params::new().with("a", k).with("b", n).with("m", m), || {
                        let shape = family(ShapeFamily::Staircase { a: k as usize, b: n as usize })?;
                        Ok(vec![
                            pair("formula", count_staircase(k, n, m)?),
                            pair("brute", ctx.pp_count(shape.as_ordinary()?, m)?),
                        ])
                    })
                }));
            }
            jobs.push(Box::new(move || {
                Instance::compare("shifted-staircase", Params::new().with("n", n).with("m", m), || {
                    let lambda = StrictPartition::staircase(n as usize);
                    Ok(vec![
                        pair("formula", count_shifted_staircase(n, m)?),
                        pair("brute", ctx.spp_count(&lambda, m)?),
                    ])
                })
            }));
        }
    }
    (grid_params(&[("n", n_max), ("m", m_max)]), par(jobs))
}

fn det(g: &GridArgs, ctx: &Ctx) -> (Params, Vec<Instance>) {
    let n_max = g.nmax.unwrap_or(3) as usize;
    let m_max = g.mmax.unwrap_or(3);
    let mut jobs: Vec<Job> = Vec::new();
    for lambda in partitions_in_box(n_max, n_max) {
        for m in 0..=m_max {
            let l = lambda.clone();
            jobs.push(Box::new(move || {
                let lambda = &l;
                let params = Params::new().with("lambda", parts_value(lambda.parts())).with("m", m);
                Instance::compare("det", params, || {
                    let mut out = vec![
                        pair("det", pp_det_count(lambda, m)?),
                        pair("brute", ctx.pp_count(lambda, m)?),
                    ];
                    if let Some((a, b)) = lambda.rectangle_dims() {
                        out.push(pair("formula", count_rectangle(a as u64, b as u64, m)?));
                    }
                    Ok(out)
                })
            }));
            let lambda = lambda.clone();
            jobs.push(Box::new(move || {
                let params = Params::new().with("lambda", parts_value(lambda.parts())).with("m", m);
                Instance::compare("q-det", params, || {
                    let all: Vec<PlanePartition> = enumerate_pp(&lambda, m).collect();
                    Ok(vec![
                        pair("det", pp_det_qpoly(&lambda, m)),
                        pair("brute", gen_function(&all, Weight::Size)?),
                    ])
                })
            }));
        }
    }
    (grid_params(&[("n", n_max as u64), ("m", m_max)]), par(jobs))
}

fn pfaffian(g: &GridArgs, ctx: &Ctx) -> (Params, Vec<Instance>) {
    let n_max = g.nmax.unwrap_or(4) as usize;
    let m_max = g.mmax.unwrap_or(3);
    let mut jobs: Vec<Job> = Vec::new();
    for lambda in strict_partitions(n_max, 5) {
        for m in 0..=m_max {
            let lambda = lambda.clone();
            jobs.push(Box::new(move || {
                let params = Params::new().with("lambda", parts_value(lambda.parts())).with("m", m);
                Instance::compare("pfaffian", params, || {
                    Ok(vec![
                        pair("pfaffian", count_spp_pf(&lambda, m)?),
                        pair("brute", ctx.spp_count(&lambda, m)?),
                    ])
                })
            }));
        }
    }
    (grid_params(&[("n", n_max as u64), ("m", m_max)]), par(jobs))
}

fn flashlight(g: &GridArgs, ctx: &Ctx) -> (Params, Vec<Instance>) {
    let (xm, ym, zm, tm) = grid4(g, 2, 2, 2, 1);
    let mut jobs: Vec<Job> = Vec::new();
    for x in 0..=xm {
        for y in 1..=ym.max(1) {
            for z in 0..=zm {
                for t in 0..=tm {
                    let p = fl(x, y, z, t);
                    jobs.push(Box::new(move || {
                        Instance::compare("flashlight", fl_params(&p), || {
                            Ok(vec![
                                pair("brute", ctx.region_count(&build_flashlight(&p))?),
                                pair("formula", count_flashlight_formula(&p)?),
                            ])
                        })
                    }));
                }
            }
        }
    }
    (grid_params(&[("x", xm), ("y", ym), ("z", zm), ("t", tm)]), par(jobs))
}

fn kuo(g: &GridArgs, ctx: &Ctx) -> (Params, Vec<Instance>) {
    let (xm, ym, zm, tm) = grid4(g, 3, 2, 2, 1);
    let points: Vec<FlashlightParams> = (2..=xm)
        .flat_map(|x| (1..=ym).flat_map(move |y| (1..=zm).flat_map(move |z| (0..=tm).map(move |t| fl(x, y, z, t)))))
        .collect();
    let instances = points
        .par_iter()
        .flat_map_iter(|p| kuo_instances(p, ctx))
        .collect();
    (grid_params(&[("x", xm), ("y", ym), ("z", zm), ("t", tm)]), instances)
}

fn kuo_instances(p: &FlashlightParams, ctx: &Ctx) -> Vec<Instance> {
    let b = &ctx.budget;
    if !ctx.fits(p) {
        let over = Error::Resource { what: "triangles", needed: build_flashlight(p).len(), budget: b.triangles };
        return vec![Instance::flag("condensation", fl_params(p), || Err(over))];
    }
    let g = build_flashlight(p).dual_graph();
    let mut out = vec![
        Instance::flag("condensation", fl_params(p), || kuo_verify(&g, &flashlight_kuo_vertices(p)?, b)),
        Instance::compare("separation", fl_params(p), || {
            let (a, c) = separation_check(&g, &flashlight_kuo_vertices(p)?, b)?;
            Ok(vec![pair("check", format!("{a},{c}")), pair("expected", "true,true")])
        }),
    ];
    match verify_conversions(p, b) {
        Ok(checks) => {
            for c in checks {
                let params = fl_params(p).with("deleted", c.conversion.deleted);
                out.push(Instance::compare(c.conversion.name, params, || {
                    Ok(vec![pair("deletion", &c.deletion_count), pair("formula", &c.formula)])
                }));
            }
        }
        Err(e) => out.push(Instance::flag("conversions", fl_params(p), || Err(e))),
    }
    out
}

fn recurrences(g: &GridArgs, ctx: &Ctx) -> (Params, Vec<Instance>) {
    let (xm, ym, zm, tm) = grid4(g, 8, 5, 5, 5);
    let mut jobs: Vec<Job> = Vec::new();
    for x in 2..=xm {
        for y in 1..=ym {
            for z in 1..=zm {
                for t in 0..=tm {
                    let p = fl(x, y, z, t);
                    jobs.push(Box::new(move || {
                        Instance::flag("recurrence-formula", fl_params(&p), || {
                            recurrence_verify(&p, RecurrenceMode::Formula, &ctx.budget)
                        })
                    }));
                }
            }
        }
    }
    for p in in_budget(ctx, 2, 1..=ym, 1) {
        let (x, z, t) = (p.x, p.z, p.t);
        if x > xm || z > zm || t > tm {
            continue;
        }
        let all_fit = recurrence_terms(&p).map(|ts| ts.iter().all(|q| ctx.fits(q))).unwrap_or(false);
        if all_fit {
            jobs.push(Box::new(move || {
                Instance::flag("recurrence-brute", fl_params(&p), || {
                    recurrence_verify(&p, RecurrenceMode::Brute, &ctx.budget)
                })
            }));
        }
    }
    (grid_params(&[("x", xm), ("y", ym), ("z", zm), ("t", tm)]), par(jobs))
}

fn identities(g: &GridArgs) -> (Params, Vec<Instance>) {
    let (xm, ym, zm, tm) = grid4(g, 10, 6, 6, 6);
    let mut jobs: Vec<Job> = Vec::new();
    for x in 2..=xm {
        for y in 0..=ym {
            for z in 1..=zm {
                for t in 0..=tm {
                    let p = fl(x, y, z, t);
                    jobs.push(Box::new(move || {
                        Instance::flag("p-identity", fl_params(&p), || {
                            if z == 1 {
                                let (a, b) = p_identity_check_z1(x, y, t)?;
                                Ok(a && b && p_identity_check(x, y, z, t)?.1)
                            } else {
                                let (a, b) = p_identity_check(x, y, z, t)?;
                                Ok(a == Some(true) && b)
                            }
                        })
                    }));
                }
            }
        }
    }
    for z in 0..=12 {
        for t in 0..=12 {
            jobs.push(Box::new(move || {
                Instance::compare("identity1a=1b", Params::new().with("z", z).with("t", t), || {
                    Ok(vec![
                        pair("identity1a", eval_identity1a(z, t)?),
                        pair("identity1b", eval_identity1b(z, t)?),
                        pair("formula-x0", count_flashlight_formula(&fl(0, 1, z, t))?),
                        pair("staircase", count_staircase(z, z, t)?),
                    ])
                })
            }));
            for y in 1..=12 {
                jobs.push(Box::new(move || {
                    Instance::compare("identity2a=2b", Params::new().with("y", y).with("z", z).with("t", t), || {
                        Ok(vec![
                            pair("identity2a", eval_identity2a(y, z, t)?),
                            pair("identity2b", eval_identity2b(y, z, t)?),
                            pair("formula-x1", count_flashlight_formula(&fl(1, y, z, t))?),
                        ])
                    })
                }));
            }
        }
    }
    for z in 0..=40 {
        for t in 0..=40 {
            jobs.push(Box::new(move || {
                Instance::compare("kummer", Params::new().with("z", z).with("t", t), || {
                    let k = kummer_closed_sum(z, t);
                    Ok(vec![pair("flag", k.holds), pair("expected", true)])
                })
            }));
        }
    }
    for y in 1..=4 {
        for z in 0..=4 {
            for t in 0..=4 {
                jobs.push(Box::new(move || {
                    Instance::flag("x1-decomposition", Params::new().with("y", y).with("z", z).with("t", t), || {
                        x1_decomposition_check(y, z, t)
                    })
                }));
            }
        }
    }
    (grid_params(&[("x", xm), ("y", ym), ("z", zm), ("t", tm)]), par(jobs))
}

fn qanalogs(g: &GridArgs) -> (Params, Vec<Instance>) {
    let n_max = g.nmax.unwrap_or(3) as usize;
    let m_max = g.mmax.unwrap_or(3) as usize;
    let mut jobs: Vec<Job> = Vec::new();
    for a in 0..=n_max {
        for b in 0..=n_max {
            for m in 0..=m_max {
                jobs.push(Box::new(move || {
                    Instance::compare("q-rectangle", Params::new().with("a", a).with("b", b).with("m", m), || {
                        let all: Vec<PlanePartition> = enumerate_pp(&Partition::rectangle(a, b), m as u64).collect();
                        Ok(vec![
                            pair("formula", q_count_rectangle(a, b, m)),
                            pair("brute", gen_function(&all, Weight::Size)?),
                        ])
                    })
                }));
            }
        }
    }
    for n in 0..=n_max {
        for m in 0..=m_max {
            let symmetric = move || -> Result<Vec<PlanePartition>> {
                let mut out = Vec::new();
                for pi in enumerate_pp(&Partition::rectangle(n, n), m as u64) {
                    if SymmetryClass::Symmetric.contains(&pi)? {
                        out.push(pi);
                    }
                }
                Ok(out)
            };
            jobs.push(Box::new(move || {
                Instance::compare("q-symmetric-size", Params::new().with("n", n).with("m", m), || {
                    Ok(vec![
                        pair("formula", q_symmetric_macmahon(n, m)),
                        pair("brute", gen_function(&symmetric()?, Weight::Size)?),
                    ])
                })
            }));
            jobs.push(Box::new(move || {
                Instance::compare("q-symmetric-half-size", Params::new().with("n", n).with("m", m), || {
                    Ok(vec![
                        pair("formula", q_symmetric_bender_knuth(n, m)),
                        pair("brute", gen_function(&symmetric()?, Weight::HalfSize)?),
                    ])
                })
            }));
        }
    }
    (grid_params(&[("n", n_max as u64), ("m", m_max as u64)]), par(jobs))
}

/// Round trips both ways plus equality of the image with the enumerated set.
fn bijection_check<F, G, E>(region: &Region, budget: &Budget, to: F, from: G, expected: E) -> Result<bool>
where
    F: Fn(&Region, &tilecount::Tiling) -> Result<PlanePartition>,
    G: Fn(&Region, &PlanePartition) -> Result<tilecount::Tiling>,
    E: FnOnce() -> BTreeSet<PlanePartition>,
{
    let mut images = BTreeSet::new();
    for t in enumerate_tilings(region, budget)? {
        let pi = to(region, &t)?;
        if from(region, &pi)? != t {
            return Ok(false);
        }
        images.insert(pi);
    }
    let all = expected();
    for pi in &all {
        if to(region, &from(region, pi)?)? != *pi {
            return Ok(false);
        }
    }
    Ok(images == all)
}

fn bijections(g: &GridArgs, ctx: &Ctx) -> (Params, Vec<Instance>) {
    let n_max = g.nmax.unwrap_or(3);
    let m_max = g.mmax.unwrap_or(2);
    let b = &ctx.budget;
    let mut jobs: Vec<Job> = Vec::new();
    for lambda in partitions_in_box(n_max as usize, n_max as usize) {
        for m in 0..=m_max {
            let lambda = lambda.clone();
            jobs.push(Box::new(move || {
                let params = Params::new().with("lambda", parts_value(lambda.parts())).with("m", m);
                Instance::flag("pp-bijection", params, || {
                    let region = build_shape_region(&lambda, m);
                    bijection_check(&region, b, tiling_to_pp, pp_to_tiling, || enumerate_pp(&lambda, m).collect())
                })
            }));
        }
    }
    for n in 0..=n_max {
        for k in 0..=n {
            for x in 0..=m_max {
                let p = fl(x, n - k, k, 0);
                jobs.push(Box::new(move || {
                    let params = Params::new().with("n", n).with("k", k).with("m", x);
                    Instance::flag("spp-bijection", params, || {
                        let lambda = sds(n, k)?;
                        let region = build_flashlight(&p);
                        bijection_check(&region, b, tiling_to_spp, spp_to_tiling, || enumerate_spp(&lambda, x).collect())
                    })
                }));
            }
        }
    }
    (grid_params(&[("n", n_max), ("m", m_max)]), par(jobs))
}

fn y0(g: &GridArgs, ctx: &Ctx) -> (Params, Vec<Instance>) {
    let points: Vec<FlashlightParams> = in_budget(ctx, 0, 0..=0, 0)
        .into_iter()
        .filter(|p| g.xmax.map_or(true, |m| p.x <= m) && g.zmax.map_or(true, |m| p.z <= m) && g.tmax.map_or(true, |m| p.t <= m))
        .collect();
    let instances = points
        .par_iter()
        .map(|p| {
            Instance::compare("y0", fl_params(p), || {
                let r = conjecture_y0_check(p.x, p.z, p.t, &ctx.budget)?;
                Ok(vec![pair("brute", r.lhs), pair("formula", r.rhs)])
            })
            .experimental()
        })
        .collect();
    let mut grid = Params::new().with("triangles", ctx.budget.triangles as u64);
    for (n, v) in [("xmax", g.xmax), ("zmax", g.zmax), ("tmax", g.tmax)] {
        if let Some(v) = v {
            grid = grid.with(n, v);
        }
    }
    (grid, instances)
}
