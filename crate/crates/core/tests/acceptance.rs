//! End-to-end acceptance checks. Each criterion prints one line; all but the
//! last are gating.

use std::io::Write;
use std::time::Instant;

use tilecount::exactlinalg::{count_spp_pf, pp_det_count, pp_det_qpoly};
use tilecount::formulas::{
    count_flashlight_formula, count_quartered_hexagon, count_sds, count_shifted_staircase,
    count_shifted_trapezoid, count_staircase, eval_identity1a, eval_identity1b, eval_identity2a,
    eval_identity2b, kummer_closed_sum, p_identity_check, p_identity_check_z1,
    q_count_rectangle, q_symmetric_bender_knuth, q_symmetric_macmahon, recurrence_terms,
};
use tilecount::lattice::{
    build_flashlight, build_quartered_hexagon, build_shape_region, conjecture_y0_check,
    enumerate_tilings, flashlight_kuo_vertices, kuo_verify, pp_to_tiling, recurrence_verify,
    separation_check, spp_to_tiling, tiling_to_pp, tiling_to_spp, verify_conversions,
    x1_decomposition_check, RecurrenceMode,
};
use tilecount::ppcore::{
    count_symmetry_class, enumerate_pp, enumerate_spp, gen_function, SymmetryClass, Weight,
};
use tilecount::shapes::{make_shape, ShapeFamily};
use tilecount::{Budget, Count, FlashlightParams, Partition, PlanePartition, Result, StrictPartition};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: Vec<String>, checked: usize, what: &str) -> Self {
        let pass = failures.is_empty() && checked > 0;
        let detail = if failures.is_empty() {
            format!("{checked} {what}")
        } else {
            format!(
                "{} of {checked} {what} failed, first: {}",
                failures.len(),
                failures[0]
            )
        };
        Outcome { pass, detail }
    }
}

fn sds(n: usize, k: usize) -> StrictPartition {
    make_shape(&ShapeFamily::ShiftedDoubleStaircase { n, k })
        .unwrap()
        .to_strict()
        .unwrap()
}

fn fl(x: u64, y: u64, z: u64, t: u64) -> FlashlightParams {
    FlashlightParams::new(x, y, z, t)
}

fn partitions_in_box(a: usize, b: usize) -> Vec<Partition> {
    fn go(rows_left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).unwrap());
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

fn strict_partitions(max_parts: usize, max_part: usize) -> Vec<StrictPartition> {
    fn go(rows_left: usize, below: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        out.push(StrictPartition::new(cur.clone()).unwrap());
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

fn region_size(p: &FlashlightParams) -> usize {
    build_flashlight(p).len()
}

/// Values `0..` of one parameter, stopping once the region leaves the budget
/// or has not grown for a few steps (some parameters are inert, e.g. `t`
/// when `z = 0`).
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

/// Every flashlight with `y` in the given range and `x >= min_x`,
/// `z >= min_z` whose region fits the budget.
fn in_budget_flashlights(min_x: u64, ys: std::ops::RangeInclusive<u64>, min_z: u64, budget: usize) -> Vec<FlashlightParams> {
    let mut out = Vec::new();
    for y in ys {
        for z in grow(min_z, budget, |z| region_size(&fl(min_x, y, z, 0))) {
            for x in grow(min_x, budget, |x| region_size(&fl(x, y, z, 0))) {
                for t in grow(0, budget, |t| region_size(&fl(x, y, z, t))) {
                    out.push(fl(x, y, z, t));
                }
            }
        }
    }
    out
}

fn criterion1() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 0..=5 {
        for k in 0..=n {
            for m in 0..=4u64 {
                let brute = Count::from(enumerate_spp(&sds(n, k), m).count() as u64);
                let formula = count_sds(n as u64, k as u64, m).unwrap();
                if brute != formula {
                    failures.push(format!("n={n} k={k} m={m}: {brute} vs {formula}"));
                }
                checked += 1;
            }
        }
    }
    Outcome::new(failures, checked, "(n,k,m) triples")
}

fn criterion2(budget: &Budget) -> Outcome {
    let grid = in_budget_flashlights(0, 1..=64, 0, budget.triangles);
    let mut failures = Vec::new();
    for x in 0..=2 {
        for y in 1..=2 {
            for z in 0..=2 {
                for t in 0..=1 {
                    if !grid.contains(&fl(x, y, z, t)) {
                        failures.push(format!("{} is outside the budget", fl(x, y, z, t)));
                    }
                }
            }
        }
    }
    for p in &grid {
        let brute = build_flashlight(p).count(budget).unwrap();
        let formula = count_flashlight_formula(p).unwrap();
        if brute != formula {
            failures.push(format!("{p}: {brute} vs {formula}"));
        }
    }
    Outcome::new(failures, grid.len(), "flashlight regions")
}

fn criterion3() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for lambda in partitions_in_box(4, 4) {
        for m in 0..=4 {
            let brute = Count::from(enumerate_pp(&lambda, m).count() as u64);
            let det = pp_det_count(&lambda, m).unwrap();
            if brute != det {
                failures.push(format!("{lambda} m={m}: {brute} vs {det}"));
            }
            checked += 1;
        }
    }
    for lambda in partitions_in_box(3, 3) {
        for m in 0..=3 {
            let all: Vec<PlanePartition> = enumerate_pp(&lambda, m).collect();
            let brute = gen_function(&all, Weight::Size).unwrap();
            let det = pp_det_qpoly(&lambda, m);
            if brute != det {
                failures.push(format!("q {lambda} m={m}: {brute} vs {det}"));
            }
            checked += 1;
        }
    }
    Outcome::new(failures, checked, "shape/bound pairs")
}

fn criterion4() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for lambda in strict_partitions(4, 5) {
        for m in 0..=3 {
            let brute = Count::from(enumerate_spp(&lambda, m).count() as u64);
            let pf = count_spp_pf(&lambda, m).unwrap();
            if brute != pf {
                failures.push(format!("{lambda} m={m}: {brute} vs {pf}"));
            }
            checked += 1;
        }
    }
    Outcome::new(failures, checked, "strict shape/bound pairs")
}

fn subsets(n: u64, k: usize) -> Vec<Vec<u64>> {
    fn go(start: u64, n: u64, k: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn criterion5(budget: &Budget) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for total in 0..=5u64 {
        for k in 0..=total {
            let x = total - k;
            for s in subsets(total, k as usize) {
                let region = build_quartered_hexagon(x, &s).unwrap();
                let brute = region.count(budget);
                let formula = count_quartered_hexagon(x, &s).unwrap();
                match brute {
                    Ok(b) if b == formula => {}
                    other => failures.push(format!("Q_{x}{s:?}: {other:?} vs {formula}")),
                }
                checked += 1;
            }
        }
    }
    Outcome::new(failures, checked, "quartered hexagons")
}

fn kuo_failures(p: &FlashlightParams, budget: &Budget) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let g = build_flashlight(p).dual_graph();
    let k = flashlight_kuo_vertices(p)?;
    let sep = separation_check(&g, &k, budget)?;
    if sep != (true, true) {
        out.push(format!("{p}: separation {sep:?}"));
    }
    if !kuo_verify(&g, &k, budget)? {
        out.push(format!("{p}: condensation identity fails"));
    }
    for c in verify_conversions(p, budget)? {
        if !c.holds {
            out.push(format!(
                "{p}: {} gives {} but the target has {}",
                c.conversion.name, c.deletion_count, c.formula
            ));
        }
    }
    Ok(out)
}

fn criterion6(budget: &Budget) -> Outcome {
    let grid = in_budget_flashlights(2, 1..=64, 1, budget.triangles);
    let mut failures = Vec::new();
    for p in &grid {
        match kuo_failures(p, budget) {
            Ok(f) => failures.extend(f),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    Outcome::new(failures, grid.len(), "flashlight graphs")
}

fn criterion7(budget: &Budget) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for x in 2..=8 {
        for y in 1..=5 {
            for z in 1..=5 {
                for t in 0..=5 {
                    let p = fl(x, y, z, t);
                    if !recurrence_verify(&p, RecurrenceMode::Formula, budget).unwrap() {
                        failures.push(format!("{p} (formula)"));
                    }
                    checked += 1;
                }
            }
        }
    }
    let mut brute = 0;
    for p in in_budget_flashlights(2, 1..=64, 1, budget.triangles) {
        let terms = recurrence_terms(&p).unwrap();
        if terms.iter().any(|q| region_size(q) > budget.triangles) {
            continue;
        }
        match recurrence_verify(&p, RecurrenceMode::Brute, budget) {
            Ok(true) => {}
            other => failures.push(format!("{p} (brute): {other:?}")),
        }
        brute += 1;
    }
    let mut outcome = Outcome::new(failures, checked + brute, "recurrence instances");
    outcome.detail.push_str(&format!(" ({brute} by brute force)"));
    outcome
}

fn criterion8() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut check = |ok: Result<bool>, what: String| {
        checked += 1;
        if !matches!(ok, Ok(true)) {
            failures.push(format!("{what}: {ok:?}"));
        }
    };
    for x in 0..=10 {
        for y in 0..=6 {
            for z in 0..=6 {
                for t in 0..=6 {
                    if x >= 2 && z >= 2 {
                        let r = p_identity_check(x, y, z, t).map(|(a, b)| a == Some(true) && b);
                        check(r, format!("P-identities at {x},{y},{z},{t}"));
                    }
                    if x >= 2 && z == 1 {
                        let r = p_identity_check(x, y, z, t).map(|(a, b)| a.is_none() && b);
                        check(r, format!("P-identity at {x},{y},1,{t}"));
                        let r = p_identity_check_z1(x, y, t).map(|(a, b)| a && b);
                        check(r, format!("z=1 P-identities at {x},{y},{t}"));
                    }
                }
            }
        }
    }
    for z in 0..=12 {
        for t in 0..=12 {
            let r = eval_identity1a(z, t).and_then(|v| {
                Ok(v == count_flashlight_formula(&fl(0, 1, z, t))?
                    && v == count_staircase(z, z, t)?
                    && v == eval_identity1b(z, t)?)
            });
            check(r, format!("x=0 identities at z={z} t={t}"));
        }
    }
    for y in 1..=12 {
        for z in 0..=12 {
            for t in 0..=12 {
                let r = eval_identity2a(y, z, t).and_then(|v| {
                    Ok(v == count_flashlight_formula(&fl(1, y, z, t))? && v == eval_identity2b(y, z, t)?)
                });
                check(r, format!("x=1 identities at {y},{z},{t}"));
            }
        }
    }
    for z in 0..=40 {
        for t in 0..=40 {
            check(Ok(kummer_closed_sum(z, t).holds), format!("Kummer sum at z={z} t={t}"));
        }
    }
    for y in 1..=4 {
        for z in 0..=4 {
            for t in 0..=4 {
                check(x1_decomposition_check(y, z, t), format!("x=1 decomposition at {y},{z},{t}"));
            }
        }
    }
    Outcome::new(failures, checked, "identity evaluations")
}

fn criterion9() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for a in 0..=3 {
        for b in 0..=3 {
            for m in 0..=3 {
                let all: Vec<PlanePartition> = enumerate_pp(&Partition::rectangle(a, b), m as u64).collect();
                let brute = gen_function(&all, Weight::Size).unwrap();
                if brute != q_count_rectangle(a, b, m) {
                    failures.push(format!("rectangle {a}x{b} m={m}"));
                }
                checked += 1;
            }
        }
    }
    for n in 0..=3 {
        for m in 0..=3 {
            let symmetric: Vec<PlanePartition> = enumerate_pp(&Partition::rectangle(n, n), m as u64)
                .filter(|pi| SymmetryClass::Symmetric.contains(pi).unwrap())
                .collect();
            if gen_function(&symmetric, Weight::Size).unwrap() != q_symmetric_macmahon(n, m) {
                failures.push(format!("symmetric size n={n} m={m}"));
            }
            if gen_function(&symmetric, Weight::HalfSize).unwrap() != q_symmetric_bender_knuth(n, m) {
                failures.push(format!("symmetric half size n={n} m={m}"));
            }
            checked += 2;
        }
    }
    Outcome::new(failures, checked, "generating functions")
}

fn criterion10() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut check = |lhs: Count, rhs: Result<Count>, what: String| {
        checked += 1;
        if rhs.as_ref() != Ok(&lhs) {
            failures.push(format!("{what}: {lhs} vs {rhs:?}"));
        }
    };
    for n in 0..=4 {
        for m in 0..=3 {
            let lhs = count_symmetry_class(SymmetryClass::Symmetric, n, m);
            check(lhs, count_shifted_staircase(n as u64, m), format!("symmetric n={n} m={m}"));
        }
    }
    for n in 0..=3u64 {
        for m in 0..=2 {
            let lhs = count_symmetry_class(SymmetryClass::TransposeComplementary, n as usize + 1, 2 * m);
            check(lhs, count_staircase(n, n, m), format!("transpose-complementary n={n} m={m}"));
            let lhs = count_symmetry_class(SymmetryClass::SymmetricSelfComplementary, n as usize + 1, 2 * m);
            check(
                lhs,
                count_shifted_trapezoid(n, n.div_ceil(2), m),
                format!("symmetric self-complementary n={n} m={m}"),
            );
        }
    }
    Outcome::new(failures, checked, "class counts")
}

fn criterion11(budget: &Budget) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for lambda in partitions_in_box(3, 3) {
        for m in 0..=2 {
            let region = build_shape_region(&lambda, m);
            let mut images = std::collections::BTreeSet::new();
            for t in enumerate_tilings(&region, budget).unwrap() {
                match tiling_to_pp(&region, &t) {
                    Ok(pi) => {
                        if pp_to_tiling(&region, &pi).as_ref() != Ok(&t) {
                            failures.push(format!("{lambda} m={m}: tiling round trip"));
                        }
                        images.insert(pi);
                    }
                    Err(e) => failures.push(format!("{lambda} m={m}: {e}")),
                }
            }
            let all: std::collections::BTreeSet<PlanePartition> = enumerate_pp(&lambda, m).collect();
            for pi in &all {
                let back = pp_to_tiling(&region, pi).and_then(|t| tiling_to_pp(&region, &t));
                if back.as_ref() != Ok(pi) {
                    failures.push(format!("{lambda} m={m}: partition round trip"));
                }
            }
            if images != all {
                failures.push(format!("{lambda} m={m}: image set differs"));
            }
            checked += 1;
        }
    }
    for n in 0..=3usize {
        for k in 0..=n {
            for x in 0..=2 {
                let p = fl(x, (n - k) as u64, k as u64, 0);
                let region = build_flashlight(&p);
                let mut images = std::collections::BTreeSet::new();
                for t in enumerate_tilings(&region, budget).unwrap() {
                    match tiling_to_spp(&region, &t) {
                        Ok(pi) => {
                            if spp_to_tiling(&region, &pi).as_ref() != Ok(&t) {
                                failures.push(format!("{p}: tiling round trip"));
                            }
                            images.insert(pi);
                        }
                        Err(e) => failures.push(format!("{p}: {e}")),
                    }
                }
                let all: std::collections::BTreeSet<PlanePartition> = enumerate_spp(&sds(n, k), x).collect();
                for pi in &all {
                    let back = spp_to_tiling(&region, pi).and_then(|t| tiling_to_spp(&region, &t));
                    if back.as_ref() != Ok(pi) {
                        failures.push(format!("{p}: partition round trip"));
                    }
                }
                if images != all {
                    failures.push(format!("{p}: image set differs"));
                }
                checked += 1;
            }
        }
    }
    Outcome::new(failures, checked, "regions")
}

fn criterion12(budget: &Budget) -> Outcome {
    let mut failures = Vec::new();
    let grid = in_budget_flashlights(0, 0..=0, 0, budget.triangles);
    for p in &grid {
        match conjecture_y0_check(p.x, p.z, p.t, budget) {
            Ok(r) if r.equal => {}
            Ok(r) => failures.push(format!("{}: brute {} vs formula {}", r.params, r.lhs, r.rhs)),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    Outcome::new(failures, grid.len(), "y=0 regions")
}

type Run<'a> = (usize, bool, Box<dyn Fn() -> Outcome + 'a>);

#[test]
fn acceptance() {
    let budget = Budget::default();
    let runs: Vec<Run> = vec![
        (1, true, Box::new(criterion1)),
        (2, true, Box::new(|| criterion2(&budget))),
        (3, true, Box::new(criterion3)),
        (4, true, Box::new(criterion4)),
        (5, true, Box::new(|| criterion5(&budget))),
        (6, true, Box::new(|| criterion6(&budget))),
        (7, true, Box::new(|| criterion7(&budget))),
        (8, true, Box::new(criterion8)),
        (9, true, Box::new(criterion9)),
        (10, true, Box::new(criterion10)),
        (11, true, Box::new(|| criterion11(&budget))),
        (12, false, Box::new(|| criterion12(&budget))),
    ];
    let mut gating_failures = Vec::new();
    for (n, gating, run) in runs {
        let start = Instant::now();
        let outcome = run();
        let status = match (outcome.pass, gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FINDING",
        };
        let kind = if gating { "" } else { " (non-gating)" };
        // Written to the process stdout so the lines survive output capture.
        writeln!(
            std::io::stdout(),
            "criterion {n:>2}{kind}: {status} {} [{:.1}s]",
            outcome.detail,
            start.elapsed().as_secs_f64()
        )
        .unwrap();
        if gating && !outcome.pass {
            gating_failures.push(n);
        }
    }
    assert!(gating_failures.is_empty(), "failing criteria: {gating_failures:?}");
}
