//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and fails the process if any criterion fails.
//!
//! `cargo test -p hookkron --test acceptance`

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use hookkron::blasiak::{decompose_hook_rect, enumerate_yamanouchi, hook_kronecker, CoefficientQuery};
use hookkron::conversion::{to_natural, to_small_bar};
use hookkron::fixtures;
use hookkron::oracle::{character, dimension, kronecker_oracle, CharacterCache};
use hookkron::partitions::{factorial, make_hook, make_rectangle, partitions_of, z_of, Partition};
use hookkron::stability::{
    diagnose, natural_family, phi, phi_inverse, psi, small_bar_family, stable_range, verify_stability,
    Verdict,
};
use hookkron::tableaux::{barred_subtableau, build_composite, sw_corner_unbarred, ColoredTableau};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every (m, t) with m·t <= n_max.
fn rectangles(n_max: usize) -> Vec<(usize, usize)> {
    (1..=n_max).flat_map(|m| (1..=n_max / m).map(move |t| (m, t))).collect()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn golden_values() -> Outcome {
    let start = Instant::now();
    let cache = CharacterCache::new();
    let goldens = fixtures::golden_values();
    ensure(goldens.len() == 2, || format!("expected 2 golden rows, found {}", goldens.len()))?;
    for gv in &goldens {
        let q = CoefficientQuery::new(gv.lambda.clone(), gv.d, gv.nu.clone()).map_err(|e| e.to_string())?;
        let tableaux = hook_kronecker(&q).map_err(|e| e.to_string())?;
        let listed = enumerate_yamanouchi(&gv.nu, &gv.lambda, gv.d, true).map_err(|e| e.to_string())?;
        let oracle = kronecker_oracle(&gv.lambda, &q.hook(), &gv.nu, &cache).map_err(|e| e.to_string())?;
        ensure(tableaux == gv.g && listed.len() as u64 == gv.g && oracle == gv.g, || {
            format!(
                "g({}; d={}; {}) expected {}, tableaux {tableaux}, listed {}, oracle {oracle}",
                gv.lambda,
                gv.d,
                gv.nu,
                gv.g,
                listed.len()
            )
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("2 values, both routes, {} ms", elapsed.as_millis()))
}

fn oracle_sweep() -> Outcome {
    let cache = CharacterCache::new();
    let mut cases = 0;
    for (m, t) in rectangles(10) {
        let rect = make_rectangle(m, t).unwrap();
        for d in 0..m * t {
            let hook = make_hook(m * t, d).unwrap();
            let expansion = decompose_hook_rect(m, t, d).map_err(|e| e.to_string())?;
            for nu in partitions_of(m * t, None, None) {
                let oracle = kronecker_oracle(&rect, &hook, &nu, &cache).map_err(|e| e.to_string())?;
                let count = expansion.coefficient(&nu);
                ensure(count == oracle, || {
                    format!("m={m} t={t} d={d} nu={nu}: tableaux {count}, oracle {oracle}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases agree"))
}

fn fig5_chain() -> Outcome {
    let (right, trace) = to_natural(&fixtures::fig5_left()).map_err(|e| e.to_string())?;
    let forward: Vec<String> = trace.steps.iter().map(ColoredTableau::to_text).collect();
    ensure(forward == fixtures::FIG5_CHAIN, || format!("forward chain differs:\n{}", trace.to_text()))?;
    ensure(right.to_text() == fixtures::FIG5_CHAIN[5], || "right tableau differs".into())?;

    let (left, trace) = to_small_bar(&fixtures::fig5_right()).map_err(|e| e.to_string())?;
    let mut backward: Vec<String> = trace.steps.iter().map(ColoredTableau::to_text).collect();
    backward.reverse();
    ensure(backward == fixtures::FIG5_CHAIN, || format!("backward chain differs:\n{}", trace.to_text()))?;
    ensure(left.to_text() == fixtures::FIG5_CHAIN[0], || "left tableau differs".into())?;
    Ok("all 6 snapshots match in both directions".into())
}

fn fig6_tableaux() -> Outcome {
    let (small, _) = to_small_bar(&fixtures::fig6_natural()).map_err(|e| e.to_string())?;
    ensure(small.to_text() == fixtures::FIG6_SMALL_BAR, || format!("small-bar form:\n{}", small.to_text()))?;
    let barred = barred_subtableau(&small).map_err(|e| e.to_string())?;
    ensure(barred.to_text() == fixtures::FIG6_BARRED, || format!("barred part:\n{}", barred.to_text()))?;
    ensure(*barred.shape() == p(&[3, 3, 1]), || format!("barred shape {}", barred.shape()))?;
    let composite = build_composite(&small).map_err(|e| e.to_string())?;
    ensure(composite.to_text() == fixtures::FIG6_COMPOSITE, || {
        format!("composite:\n{}", composite.to_text())
    })?;
    Ok("small-bar form, barred part (3,3,1) and composite match".into())
}

fn stability_range() -> Outcome {
    let range = stable_range(12);
    for &(m, d, t) in &range {
        let report = verify_stability(m, d, t).map_err(|e| e.to_string())?;
        ensure(report.verdict == Verdict::Stable, || format!("(m,d,t)=({m},{d},{t}):\n{}", report.to_text()))?;
        ensure(report.pairs.iter().all(|x| x.g_t == x.g_t1), || format!("({m},{d},{t}) coefficient mismatch"))?;
        let lifted: BTreeSet<&Partition> = report.lifted.terms().map(|(g, _)| g).collect();
        let expected: BTreeSet<&Partition> = report.pairs.iter().map(|x| &x.nu_tilde).collect();
        ensure(lifted == expected, || format!("({m},{d},{t}) lifted support differs"))?;
    }
    let report = verify_stability(3, 4, 3).map_err(|e| e.to_string())?;
    let pair = report.pairs.iter().find(|x| x.nu == p(&[5, 2, 1, 1]));
    ensure(
        report.verdict == Verdict::Unstable
            && pair.is_some_and(|x| x.g_t == 2 && x.g_t1 == 3 && x.nu_tilde == p(&[5, 3, 2, 1, 1])),
        || format!("(3,4,3) should show 2 -> 3:\n{}", report.to_text()),
    )?;
    Ok(format!("{} triples stable; (3,4,3) shows 2 -> 3", range.len()))
}

fn bijections() -> Outcome {
    let mut phi_checked = 0;
    let mut psi_checked = 0;
    for (m, t) in rectangles(10) {
        for d in 0..t.min(m * t) {
            let w = t - d;
            let base = small_bar_family(m, t, d).map_err(|e| e.to_string())?;
            let lifted: BTreeSet<String> = small_bar_family(m, t + 1, d)
                .map_err(|e| e.to_string())?
                .iter()
                .map(ColoredTableau::to_text)
                .collect();
            let mut images = BTreeSet::new();
            for tab in &base {
                let image = phi(tab, m, d).map_err(|e| format!("phi (m={m} t={t} d={d}): {e}"))?;
                let back = phi_inverse(&image, m, d).map_err(|e| e.to_string())?;
                ensure(&back == tab, || format!("round trip fails on\n{}", tab.to_text()))?;
                images.insert(image.to_text());
                phi_checked += 1;
            }
            ensure(images == lifted, || format!("m={m} t={t} d={d}: image is not all of the lifted family"))?;

            if w >= 2 {
                for tab in natural_family(m, t, d).map_err(|e| e.to_string())? {
                    let image = psi(&tab, m, d).map_err(|e| e.to_string())?;
                    let before = sw_corner_unbarred(&tab).map_err(|e| e.to_string())?;
                    let after = sw_corner_unbarred(&image).map_err(|e| e.to_string())?;
                    ensure(before == after, || format!("psi flips the SW corner of\n{}", tab.to_text()))?;
                    psi_checked += 1;
                }
            }
        }
    }
    Ok(format!("phi round trip on {phi_checked} tableaux, psi on {psi_checked}"))
}

fn structure() -> Outcome {
    let mut checked = 0;
    for (m, t) in rectangles(10) {
        for d in 0..m * t {
            for tab in natural_family(m, t, d).map_err(|e| e.to_string())? {
                let diag = diagnose(&tab, m, t, d).map_err(|e| e.to_string())?;
                ensure(diag.is_clean(), || {
                    format!("m={m} t={t} d={d}: {:?}\n{}", diag.violations, tab.to_text())
                })?;
                checked += 1;
            }
        }
    }
    let diag = diagnose(&fixtures::negative_control(), 2, 3, 1).map_err(|e| e.to_string())?;
    ensure(!diag.is_clean(), || "negative control reported no violation".into())?;
    let checks: Vec<&str> = diag.violations.iter().map(|v| v.check).collect();
    Ok(format!("{checked} tableaux clean; negative control flags {checks:?}"))
}

fn oracle_consistency() -> Outcome {
    let cache = CharacterCache::new();
    for n in 0..=10 {
        let total: u128 = partitions_of(n, None, None)
            .map(|l| (dimension(&l, &cache) as u128).pow(2))
            .sum();
        ensure(total == factorial(n), || format!("n={n}: sum of squared dimensions {total}"))?;
    }
    for n in 1..=8 {
        for rho in partitions_of(n, None, None) {
            let mut total: i128 = 0;
            for lambda in partitions_of(n, None, None) {
                total += (character(&lambda, &rho, &cache).map_err(|e| e.to_string())? as i128).pow(2);
            }
            ensure(total as u128 == z_of(&rho), || format!("rho={rho}: column sum {total}"))?;
        }
    }
    let mut triples = 0;
    for n in 1..=7 {
        let shapes: Vec<Partition> = partitions_of(n, None, None).collect();
        for a in &shapes {
            for b in &shapes {
                for c in &shapes {
                    let g = |x, y, z| kronecker_oracle(x, y, z, &cache).map_err(|e| e.to_string());
                    let base = g(a, b, c)?;
                    for other in [g(a, c, b)?, g(b, a, c)?, g(b, c, a)?, g(c, a, b)?, g(c, b, a)?] {
                        ensure(other == base, || format!("g({a}; {b}; {c}) is not symmetric"))?;
                    }
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("dimensions n<=10, columns n<=8, symmetry on {triples} triples"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("golden values", golden_values),
        ("oracle equivalence sweep", oracle_sweep),
        ("conversion chain", fig5_chain),
        ("small-bar form, barred part and composite", fig6_tableaux),
        ("stability range", stability_range),
        ("bijections", bijections),
        ("structural diagnostics", structure),
        ("oracle self-consistency", oracle_consistency),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{ms} ms]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} [{ms} ms]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
