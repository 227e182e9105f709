//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.
//!
//! Run with `cargo test -p bipyr-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use bipyr::builtin::{self, builtin_examples};
use bipyr::decomposition::{crossing_signature, cyclic_gap_sum, dual_consistency_check, signature_sizes};
use bipyr::diagram::{Crossing, MulticrossingDiagram};
use bipyr::enumeration::{admissible_sequences_up_to_sum, verify_classification};
use bipyr::realization::realize;
use bipyr::volume::{crossing_mccb, lobachevsky, maxvol, mccb, mfcb, table1, v_oct};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:.0?}"))
}

fn close(got: f64, want: f64, tol: f64) -> bool {
    (got - want).abs() <= tol
}

fn table_values() -> Outcome {
    const PUBLISHED: [(usize, f64, f64, f64); 5] = [
        (3, 7.32772, 7.32772, 10.9916),
        (4, 10.9916, 15.1827, 21.9832),
        (5, 14.6554, 23.0377, 36.6386),
        (10, 32.9748, 81.6888, 164.874),
        (100, 362.722, 2183.09, 18136.1),
    ];
    let start = Instant::now();
    let rows = table1(&PUBLISHED.map(|r| r.0)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut worst: f64 = 0.0;
    for (row, &(n, best, worst_case, oct)) in rows.iter().zip(&PUBLISHED) {
        ensure(row.n == n, || format!("row order {} vs {n}", row.n))?;
        for (got, want) in [(row.best_mccb, best), (row.worst_mccb, worst_case), (row.octahedral, oct)] {
            let rel = (got - want).abs() / want;
            worst = worst.max(rel);
            ensure(rel <= 1e-3, || format!("n = {n}: {got} vs {want}"))?;
        }
    }
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("15 values, worst relative error {worst:.1e}, {elapsed:.2?}"))
}

fn regular_octahedron() -> Outcome {
    let v = 8.0 * lobachevsky(PI / 4.0).map_err(|e| e.to_string())?;
    ensure(close(v, 3.6639, 1e-4), || format!("8Λ(π/4) = {v}"))?;
    ensure(v == v_oct(), || format!("v_oct() = {} differs", v_oct()))?;
    Ok(format!("8Λ(π/4) = {v:.10}"))
}

fn weaves() -> Outcome {
    let start = Instant::now();
    let cases: [(MulticrossingDiagram, Vec<usize>); 3] = [
        (builtin::square_weave(), vec![1, 1, 1, 1]),
        (builtin::triple_weave(), vec![2, 2]),
        (builtin::right_triangle_weave(), vec![3, 1]),
    ];
    let mut parts = Vec::new();
    for (d, octahedra) in &cases {
        let (c, f) = (mccb(d), mfcb(d));
        ensure(close(c, 14.6554, 1e-3) && close(f, 14.6554, 1e-3), || {
            format!("{}: mccb {c}, mfcb {f}", d.name())
        })?;
        let got: Vec<usize> = d.crossings().iter().map(|x| crossing_signature(x).octahedra()).collect();
        ensure(&got == octahedra, || format!("{}: octahedra per crossing {got:?}", d.name()))?;
        parts.push(format!("{} {got:?}", d.name()));
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("mccb = mfcb = 4·v_oct; {}", parts.join(", ")))
}

fn classification() -> Outcome {
    let start = Instant::now();
    for n in 2..=8 {
        let report = verify_classification(n).map_err(|e| e.to_string())?;
        let oracle_achieved: BTreeSet<Vec<u32>> = common::canonical_perms(n)
            .iter()
            .map(|l| common::brute_signature(l))
            .collect();
        let oracle_admissible: BTreeSet<Vec<u32>> = common::brute_admissible(n - 1).into_iter().collect();
        ensure(oracle_achieved == oracle_admissible, || format!("n = {n}: oracle sets differ"))?;
        let achieved: BTreeSet<Vec<u32>> = report.achieved.into_iter().collect();
        ensure(achieved == oracle_achieved, || format!("n = {n}: census disagrees with oracle"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("achieved = admissible for n ≤ 8, {elapsed:.2?}"))
}

fn realize_round_trip() -> Outcome {
    let start = Instant::now();
    let sequences = admissible_sequences_up_to_sum(40);
    for s in &sequences {
        let c = realize(s).map_err(|e| format!("{s:?}: {e}"))?;
        ensure(c.size() == s.len() + 1, || format!("{s:?}: {} strands", c.size()))?;
        ensure(&common::brute_signature(c.levels()) == s, || format!("{s:?}: wrong signature"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("{} sequences with Σ ≤ 40, {elapsed:.2?}", sequences.len()))
}

fn conservation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut diagrams = builtin_examples();
    diagrams.extend((0..100).map(|_| common::random_diagram(&mut rng, 8, 6)));
    for d in &diagrams {
        let report = dual_consistency_check(d).map_err(|e| format!("{}: {e}", d.name()))?;
        let expected: u64 = d.crossings().iter().map(|c| 2 * cyclic_gap_sum(c.levels())).sum();
        ensure(report.face_total == expected && report.crossing_total == expected, || {
            format!("{}: {} / {} / {expected}", d.name(), report.face_total, report.crossing_total)
        })?;
    }
    Ok(format!("{} diagrams, face total = crossing total", diagrams.len()))
}

fn five_crossing_example() -> Outcome {
    let c = Crossing::from_levels(&[1, 3, 5, 2, 4]);
    let sig = signature_sizes(c.levels());
    ensure(sig == [4, 8, 8, 4], || format!("signature {sig:?}"))?;
    let v = crossing_mccb(&c);
    ensure(close(v, 23.0377, 1e-2), || format!("mccb {v}"))?;
    ensure(close(v, 2.0 * v_oct() + 2.0 * maxvol(8), 1e-12), || format!("mccb {v} vs maxvol sum"))?;
    Ok(format!("13524 → {sig:?}, mccb {v:.6}"))
}

fn two_crossing_diagrams() -> Outcome {
    let mut diagrams = vec![builtin::trefoil(), builtin::figure_eight(), builtin::square_weave()];
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    diagrams.extend((0..100).map(|_| common::random_diagram(&mut rng, 8, 2)));
    for d in &diagrams {
        // each 2-crossing is exactly one octahedron; the total is a float sum
        for c in d.crossings() {
            ensure(signature_sizes(c.levels()) == [4] && crossing_mccb(c) == v_oct(), || {
                format!("{}: crossing {} contributes {}", d.name(), c.id(), crossing_mccb(c))
            })?;
        }
        let want = d.crossing_count() as f64 * v_oct();
        ensure(close(mccb(d), want, 1e-12 * want), || format!("{}: {} vs {want}", d.name(), mccb(d)))?;
    }
    Ok(format!("{} diagrams, each crossing exactly v_oct", diagrams.len()))
}

fn log_growth() -> Outcome {
    let bound = |m: u32| 2.0 * PI * (m as f64 / 2.0).ln();
    let mut checked = 0;
    let mut check = |m: u32| {
        checked += 1;
        ensure(maxvol(m) < bound(m), || format!("m = {m}: {} ≥ {}", maxvol(m), bound(m)))
    };
    for m in 3..=1000 {
        check(m)?;
    }
    let mut x = 1000.0f64;
    while x < 1e6 {
        check(x.round() as u32)?;
        x *= 1.01;
    }
    check(1_000_000)?;
    let ratio = maxvol(1_000_000) / bound(1_000_000);
    ensure(ratio > 0.98, || format!("ratio at 10^6 is {ratio}"))?;
    Ok(format!("{checked} values of m, ratio at 10^6 = {ratio:.5}"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("table of single-crossing bounds", table_values),
        ("regular ideal octahedron volume", regular_octahedron),
        ("weaves reach 4 octahedra", weaves),
        ("signature classification n ≤ 8", classification),
        ("realization round trip Σ ≤ 40", realize_round_trip),
        ("tetrahedron conservation", conservation),
        ("five-crossing example", five_crossing_example),
        ("two-crossing diagrams", two_crossing_diagrams),
        ("logarithmic growth of maxvol", log_growth),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
