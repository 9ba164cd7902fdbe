//! Acceptance run: one line per criterion with its verdict and wall time
//! against the stated limit. Lines go straight to stdout so they show up
//! without `--nocapture`.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{canonical, golden_cases, golden_path};
use curvereg::curves::no_secant_curve;
use curvereg::geometry::is_extremal_secant;
use curvereg::resolution::{min_free_resolution, regularity, regularity_crosscheck, ModuleKind};
use curvereg::verify::*;
use curvereg::PrimeField;

const SEED: u64 = 20_261_016;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passing(r: &CheckReport) -> Result<(), String> {
    ensure(r.is_consistent(), || format!("{} / {}: stored verdict disagrees with its assertions", r.check, r.instance))?;
    ensure(r.verdict == Verdict::Pass, || {
        let failed: Vec<String> = r.failed_assertions().map(|a| format!("{} ({} {} {})", a.name, a.lhs, a.rel.symbol(), a.rhs)).collect();
        format!("{} / {}: {:?} {} {}", r.check, r.instance, r.verdict, failed.join("; "), r.notes.join("; "))
    })
}

fn int(r: &CheckReport, key: &str) -> Result<i64, String> {
    r.int(key).ok_or_else(|| format!("{}: missing quantity {key}", r.check))
}

fn field() -> PrimeField {
    PrimeField::default()
}

fn c1_construction_invariants() -> Outcome {
    let mut times = Vec::new();
    for m in 4..=6usize {
        let t = Instant::now();
        let g = no_secant_curve(field(), m).map_err(|e| e.to_string())?;
        let x = g.curve.xi().map_err(|e| e.to_string())?;
        let table = min_free_resolution(g.curve.ideal(), ModuleKind::Ideal).map_err(|e| e.to_string())?.betti_table();
        let reg = regularity(g.curve.ideal()).map_err(|e| e.to_string())?;
        let mi = m as i64;
        ensure(x.degree == mi + 2, || format!("m={m}: degree {}", x.degree))?;
        ensure(x.span_dim == 4, || format!("m={m}: span dim {}", x.span_dim))?;
        ensure(x.xi == mi, || format!("m={m}: xi {}", x.xi))?;
        ensure(reg == mi && table.regularity() == mi, || format!("m={m}: reg {reg}"))?;
        ensure(table.get(0, mi) >= 1, || format!("m={m}: no minimal generator of degree m"))?;
        let secs = t.elapsed().as_secs_f64();
        ensure(secs <= 120.0, || format!("m={m}: {secs:.1} s over the 120 s limit"))?;
        times.push(format!("m={m} {secs:.2}s"));
    }
    Ok(times.join(", "))
}

fn c2_secant_table() -> Outcome {
    let r = check_construction(field(), 4, SEED, 50).map_err(|e| e.to_string())?;
    passing(&r)?;
    let find = |name: &str| r.assertions.iter().find(|a| a.name == name).ok_or_else(|| format!("missing assertion {name}"));
    let h = find("deg(C ∩ line(P, e2)) = m - 1")?;
    ensure(h.lhs == 3, || format!("H has secant degree {}", h.lhs))?;
    let g = find("deg(C ∩ V(x3, x4, x2 - x0 - 2x1)) = m - 2")?;
    ensure(g.lhs == 2, || format!("line avoiding P, Q has secant degree {}", g.lhs))?;
    let off = int(&r, "lines off L, M, N: tested")?;
    let max = int(&r, "lines off L, M, N: max secant degree")?;
    ensure(off == 50 && max <= 3, || format!("{off} lines, max degree {max}"))?;
    let ext = find("extremal secant lines found")?;
    ensure(ext.lhs == 0, || format!("{} extremal lines", ext.lhs))?;
    Ok(format!("H: 3, avoiding P,Q: 2, 50 lines max {max}, extremal 0"))
}

fn c3_twisted() -> Outcome {
    let r = check_twisted_config(field()).map_err(|e| e.to_string())?;
    passing(&r)?;
    let t = curvereg::curves::twisted_config(field()).map_err(|e| e.to_string())?;
    let el = is_extremal_secant(&t.curve, &t.l).map_err(|e| e.to_string())?;
    let em = is_extremal_secant(&t.curve, &t.m).map_err(|e| e.to_string())?;
    ensure(el.secant_degree == Some(3) && el.extremal, || format!("L: {el:?}"))?;
    ensure(em.secant_degree == Some(2) && !em.extremal, || format!("M: {em:?}"))?;
    Ok(format!("xi {} reg {}", int(&r, "xi")?, int(&r, "reg")?))
}

fn c4_trees() -> Outcome {
    let mut lines = 0;
    for i in 0..20 {
        let s = mix_seed(SEED, 400 + i);
        let c = random_tree(field(), s).map_err(|e| format!("seed {s}: {e}"))?;
        ensure(c.components().len() <= 4 && c.ring().nvars() <= 9, || format!("seed {s}: tree too large"))?;
        let x = c.xi().map_err(|e| e.to_string())?;
        let reg = regularity(c.ideal()).map_err(|e| e.to_string())?;
        let single_line = c.components().len() == 1 && x.degree == 1;
        lines += single_line as usize;
        ensure(x.xi == 2, || format!("seed {s}: xi {}", x.xi))?;
        ensure(reg == 1 || reg == 2, || format!("seed {s}: reg {reg}"))?;
        ensure(reg != 1 || single_line, || format!("seed {s}: reg 1 but not a single line"))?;
        passing(&check_mincur("tree", &c).map_err(|e| e.to_string())?)?;
    }
    Ok(format!("20 trees, {lines} single lines"))
}

fn c5_caviglia() -> Outcome {
    let (mut applicable, mut tried) = (0, 0u64);
    while applicable < 50 {
        ensure(tried < 500, || format!("only {applicable} applicable pairs in {tried} seeds"))?;
        let s = mix_seed(SEED, 5000 + tried);
        tried += 1;
        let (i, j) = caviglia_pair(field(), s).map_err(|e| e.to_string())?;
        let r = check_caviglia("caviglia", &i, &j).map_err(|e| format!("seed {s}: {e}"))?;
        if r.verdict == Verdict::Inapplicable {
            continue;
        }
        passing(&r)?;
        applicable += 1;
    }
    Ok(format!("50 applicable pairs from {tried} seeds"))
}

fn c6_main_theorem() -> Outcome {
    let mut maximal = 0;
    for i in 0..25 {
        let s = mix_seed(SEED, 600 + i);
        let rc = random_curve(field(), s).map_err(|e| format!("seed {s}: {e}"))?;
        let c = rc.curve;
        ensure(c.ring().nvars() <= 7, || format!("seed {s}: ambient too large"))?;
        let deg: i64 = c.components().iter().map(|k| k.degree()).sum();
        ensure(deg <= 8, || format!("seed {s}: total degree {deg}"))?;
        let r = check_main_theorem("random", &c).map_err(|e| format!("seed {s}: {e}"))?;
        passing(&r)?;
        maximal += r.flag("maximal").unwrap_or(false) as usize;
    }
    Ok(format!("25 curves, {maximal} of maximal regularity"))
}

fn c7_intadd() -> Outcome {
    for i in 0..30 {
        let s = mix_seed(SEED, 700 + i);
        let (x, y) = finite_pair(field(), s).map_err(|e| e.to_string())?;
        passing(&check_intadd("pair", &x, &y).map_err(|e| format!("seed {s}: {e}"))?)?;
    }
    Ok("30 pairs".into())
}

fn planar_instances() -> Vec<(String, PlanarFamily, u64)> {
    let mut v = Vec::new();
    for d in 1..=7 {
        v.push((format!("collinear d={d}"), PlanarFamily::Collinear(d), mix_seed(SEED, 800 + d as u64)));
    }
    for d in 2..=7 {
        v.push((format!("collinear+1 d={d}"), PlanarFamily::CollinearPlusOne(d), mix_seed(SEED, 820 + d as u64)));
    }
    v.push(("four general".into(), PlanarFamily::FourGeneral, SEED));
    for i in 0..6 {
        v.push((format!("random #{i}"), PlanarFamily::Random, mix_seed(SEED, 840 + i)));
    }
    v
}

fn c8_finite_in_plane() -> Outcome {
    let mut found_lines = 0;
    for (name, fam, s) in planar_instances() {
        let x = planar_points(field(), fam, s).map_err(|e| e.to_string())?;
        let r = check_finite_in_plane(&name, &x).map_err(|e| format!("{name}: {e}"))?;
        passing(&r)?;
        let d = int(&r, "degree")?;
        ensure(d <= 6 || !matches!(fam, PlanarFamily::Random), || format!("{name}: {d} points"))?;
        if int(&r, "reg")? == d - 1 && d != 4 {
            found_lines += 1;
        }
        if fam == PlanarFamily::FourGeneral {
            ensure(int(&r, "reg")? == 3, || format!("four general points: reg {:?}", r.int("reg")))?;
            ensure(int(&r, "best_pair_line_degree")? == 2, || "four general points have a 3-secant".into())?;
        }
    }
    Ok(format!("{} instances, {found_lines} with an extremal line required", planar_instances().len()))
}

fn c9_hilbert_burch() -> Outcome {
    let mut n = 0;
    let mut idx = 0u64;
    while n < 20 {
        let fam = match idx % 4 {
            0 => PlanarFamily::Collinear(2 + (idx / 4 % 6) as usize),
            1 => PlanarFamily::CollinearPlusOne(3 + (idx / 4 % 5) as usize),
            2 => PlanarFamily::Random,
            _ => PlanarFamily::FourGeneral,
        };
        let s = mix_seed(SEED, 900 + idx);
        idx += 1;
        let x = planar_points(field(), fam, s).map_err(|e| e.to_string())?;
        passing(&check_hilbert_burch(&format!("{fam:?}"), &x, 0).map_err(|e| format!("{fam:?}: {e}"))?)?;
        n += 1;
    }
    for i in 0..10 {
        let s = mix_seed(SEED, 950 + i);
        let (form, y) = curve_plus_points(field(), s).map_err(|e| e.to_string())?;
        let d = form.degree().unwrap_or(0) as i64;
        let union = curvereg::Ideal::new(y.ring(), vec![form.clone()]).and_then(|dd| dd.intersect(&y)).map_err(|e| e.to_string())?;
        passing(&check_hilbert_burch("curve plus points", &union, d).map_err(|e| format!("seed {s}: {e}"))?)?;
        passing(&check_not_so_finite("curve plus points", &form, &y).map_err(|e| format!("seed {s}: {e}"))?)?;
    }
    Ok("20 finite schemes, 10 curve-plus-points".into())
}

fn c10_saturation() -> Outcome {
    let mut nonsat = 0;
    for i in 0..30 {
        let s = mix_seed(SEED, 1000 + i);
        let ideal = nonsaturated_ideal(field(), s).map_err(|e| e.to_string())?;
        let reg = regularity(&ideal).map_err(|e| format!("seed {s}: {e}"))?;
        let cross = regularity_crosscheck(&ideal).map_err(|e| format!("seed {s}: {e}"))?;
        ensure(reg == cross, || format!("seed {s}: reg {reg} vs crosscheck {cross}"))?;
        let sat = ideal.saturate().map_err(|e| e.to_string())?;
        nonsat += !sat.same_ideal(&ideal).map_err(|e| e.to_string())? as usize;
    }
    Ok(format!("30 ideals, {nonsat} not saturated"))
}

fn c11_golden() -> Outcome {
    for (name, i) in golden_cases() {
        let betti = min_free_resolution(&i, ModuleKind::Quotient).map_err(|e| e.to_string())?.betti_table();
        let text = canonical(name, &i, &betti);
        let stored = std::fs::read_to_string(golden_path(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure(text == stored, || format!("{name} differs from its golden file"))?;
    }
    Ok("4 cases byte-identical".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u32, &str, f64, fn() -> Outcome); 11] = [
        (1, "construction invariants m=4,5,6", 360.0, c1_construction_invariants),
        (2, "construction secant table m=4", 120.0, c2_secant_table),
        (3, "twisted cubic configuration", 30.0, c3_twisted),
        (4, "trees", 120.0, c4_trees),
        (5, "Caviglia bounds", 300.0, c5_caviglia),
        (6, "regularity bound on random curves", 600.0, c6_main_theorem),
        (7, "degree additivity of finite schemes", 60.0, c7_intadd),
        (8, "finite schemes in the plane", 120.0, c8_finite_in_plane),
        (9, "Hilbert-Burch identities", 180.0, c9_hilbert_burch),
        (10, "regularity from saturation", 120.0, c10_saturation),
        (11, "kernel golden outputs", 30.0, c11_golden),
    ];
    let mut failures = Vec::new();
    let out = std::io::stdout();
    for (n, name, limit, run) in criteria {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        let outcome = outcome.and_then(|d| if secs <= limit { Ok(d) } else { Err(format!("{secs:.1} s over the {limit} s limit")) });
        let (verdict, detail) = match &outcome {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        let _ = writeln!(out.lock(), "criterion {n:>2} {verdict} {name} [{secs:.2} s / {limit} s] {detail}");
        if outcome.is_err() {
            failures.push(n);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
