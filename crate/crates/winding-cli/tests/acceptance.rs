//! End-to-end acceptance suite. Runs ten numbered criteria covering the
//! realizer sweep, the fuzz harnesses, the spiral turning/winding
//! tables, the finger-move delta, the float/exact winding oracle pair,
//! the turning-number laws, and serialization round-trips. One PASS/FAIL
//! line is printed per criterion (visible with `--nocapture`); the test
//! fails if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use winding_cli::format::{parse_drawing, serialize_drawing};
use winding_cli::verify::winding_oracle;
use winding_core::constructor::{base_embedding, finger_move, realize, spiral_pair};
use winding_core::graph_drawing::{sample_random, SamplerParams};
use winding_core::polyline::{turning_open, winding_closed};
use winding_core::{Cycle, Drawing, Graph, Polyline, Pt};

/// Shared tally: every drawing produced by criteria 1-7 is round-tripped
/// through the JSON format on the spot; criterion 10 reports the total.
struct Ctx {
    round_trips: AtomicU64,
}

fn round_trip(ctx: &Ctx, d: &Drawing) {
    let text = serialize_drawing(d);
    let back = parse_drawing(&text).expect("serialized drawing must parse");
    assert_eq!(&back, d, "parsed drawing must equal the original");
    assert_eq!(
        serialize_drawing(&back),
        text,
        "re-serialization must be byte-identical"
    );
    ctx.round_trips.fetch_add(1, Ordering::Relaxed);
}

fn rng_range(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64
}

/// Random closed polyline with integer coordinates: 3-11 vertices,
/// consecutive points distinct, first != last.
fn random_cycle(rng: &mut ChaCha8Rng) -> Cycle {
    loop {
        let len = rng_range(rng, 3, 11) as usize;
        let mut pts: Vec<Pt> = Vec::with_capacity(len);
        for _ in 0..len {
            let p = Pt::int(rng_range(rng, -50, 50), rng_range(rng, -50, 50));
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        if pts.len() >= 3 && pts.first() != pts.last() {
            if let Ok(c) = Cycle::new(pts) {
                return c;
            }
        }
    }
}

/// Random open polyline with at least `min_pts` vertices.
fn random_polyline(rng: &mut ChaCha8Rng, min_pts: usize) -> Polyline {
    loop {
        let len = rng_range(rng, min_pts as i64, 10) as usize;
        let mut pts: Vec<Pt> = Vec::with_capacity(len);
        for _ in 0..len {
            let p = Pt::int(rng_range(rng, -50, 50), rng_range(rng, -50, 50));
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        if pts.len() >= min_pts {
            return Polyline::new(pts).unwrap();
        }
    }
}

fn random_point_off<F: Fn(&Pt) -> bool>(rng: &mut ChaCha8Rng, on_curve: F) -> Pt {
    loop {
        let p = Pt::int(rng_range(rng, -60, 60), rng_range(rng, -60, 60));
        if !on_curve(&p) {
            return p;
        }
    }
}

/// Float turning number of a polyline given directly in f64 coordinates.
fn turning_f64(pts: &[(f64, f64)], p: (f64, f64)) -> f64 {
    let mut sum = 0.0;
    for w in pts.windows(2) {
        let (ux, uy) = (w[0].0 - p.0, w[0].1 - p.1);
        let (vx, vy) = (w[1].0 - p.0, w[1].1 - p.1);
        sum += f64::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
    }
    sum / std::f64::consts::TAU
}

fn odd_sum_tuples(bound: i64) -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for n1 in -bound..=bound {
        for n2 in -bound..=bound {
            for n3 in -bound..=bound {
                for n4 in -bound..=bound {
                    if (n1 + n2 + n3 + n4).rem_euclid(2) == 1 {
                        out.push((n1, n2, n3, n4));
                    }
                }
            }
        }
    }
    out
}

fn realize_checked(ctx: &Ctx, t: (i64, i64, i64, i64)) -> Drawing {
    let (n1, n2, n3, n4) = t;
    let d = realize(n1, n2, n3, n4).unwrap_or_else(|e| panic!("realize{t:?} failed: {e}"));
    let report = d.is_almost_embedding();
    assert!(
        report.is_almost_embedding,
        "realize{t:?} is not an almost embedding: {:?}",
        report.violations
    );
    let w = d.winding_vector_k4().unwrap().as_array();
    assert_eq!(w, [n1, n2, n3, n4], "realize{t:?} winding vector mismatch");
    round_trip(ctx, &d);
    d
}

// 1: every odd-sum 4-tuple with |ni| <= 3 is realized exactly as an
// almost embedding.
fn criterion_realizer_sweep(ctx: &Ctx) -> String {
    let tuples = odd_sum_tuples(3);
    assert_eq!(tuples.len(), 1200);
    let start = Instant::now();
    tuples.par_iter().for_each(|&t| {
        realize_checked(ctx, t);
    });
    let secs = start.elapsed().as_secs_f64();
    // Budget: one minute parallel, five minutes on a single core.
    let budget = if rayon::current_num_threads() > 1 { 60.0 } else { 300.0 };
    assert!(secs < budget, "sweep took {secs:.1}s, budget {budget}s");
    format!("1200/1200 odd-sum tuples |n|<=3 realized exactly in {secs:.1}s")
}

// 2: large-magnitude spot checks, each under 5 seconds.
fn criterion_large_tuples(ctx: &Ctx) -> String {
    let tuples = [(10, -7, 3, 5), (0, 25, 0, -24), (-9, -9, -9, 28)];
    let mut times = Vec::new();
    for t in tuples {
        let start = Instant::now();
        realize_checked(ctx, t);
        let secs = start.elapsed().as_secs_f64();
        assert!(secs < 5.0, "realize{t:?} took {secs:.2}s, budget 5s");
        times.push(format!("{t:?} in {secs:.2}s"));
    }
    times.join(", ")
}

// 3: 10,000 accepted random K4 almost embeddings all have odd
// winding-vector sum.
fn criterion_k4_parity_fuzz(ctx: &Ctx) -> String {
    let start = Instant::now();
    let graph = Graph::k4();
    let params = SamplerParams::default();
    (0u64..10_000).into_par_iter().for_each(|i| {
        let seed = 42u64.wrapping_add(i);
        let d = sample_random(&graph, seed, &params).unwrap();
        let sum = d.winding_vector_k4().unwrap().sum();
        assert!(sum % 2 != 0, "seed {seed}: even winding sum {sum}");
        round_trip(ctx, &d);
    });
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 120.0, "fuzz took {secs:.1}s, budget 120s");
    format!("10000/10000 accepted K4 samples have odd winding sum in {secs:.1}s")
}

// 4: 1,000 accepted random K5-minus-45 almost embeddings all have
// winding difference +-1.
fn criterion_k5_difference_fuzz(ctx: &Ctx) -> String {
    let start = Instant::now();
    let graph = Graph::k5_minus_45();
    let params = SamplerParams::default();
    (0u64..1_000).into_par_iter().for_each(|i| {
        let seed = 42u64.wrapping_add(i);
        let d = sample_random(&graph, seed, &params).unwrap();
        let diff = d.k5_difference().unwrap();
        assert!(
            diff == 1 || diff == -1,
            "seed {seed}: winding difference {diff}"
        );
        round_trip(ctx, &d);
    });
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 120.0, "fuzz took {secs:.1}s, budget 120s");
    format!("1000/1000 accepted K5\\45 samples have difference +-1 in {secs:.1}s")
}

// 5: in the exactly equilateral float triangle, the spiral pair's
// turning numbers match the closed-form table within 1e-9.
fn criterion_equilateral_turning_table(_ctx: &Ctx) -> String {
    let mut worst = 0.0f64;
    for m in -5i64..=5 {
        let scale = 6 * m.abs().max(1);
        let pair = spiral_pair(
            &Pt::int(0, 0),
            &Pt::int(scale, 0),
            &Pt::int(0, scale),
            m,
        )
        .unwrap();
        // Affine map sending the rational surrogate triangle onto the
        // unit equilateral one A=(0,0), B=(1,0), C=(1/2, sqrt(3)/2).
        let map = |p: &Pt| {
            let (x, y) = p.to_f64();
            let (sx, sy) = (x / scale as f64, y / scale as f64);
            (sx + 0.5 * sy, (3.0f64.sqrt() / 2.0) * sy)
        };
        let gamma: Vec<(f64, f64)> = pair.gamma.points().iter().map(&map).collect();
        let lambda: Vec<(f64, f64)> = pair.lambda.points().iter().map(&map).collect();
        let a = (0.0, 0.0);
        let b = (1.0, 0.0);
        let c = (0.5, 3.0f64.sqrt() / 2.0);
        let o = (0.5, 3.0f64.sqrt() / 6.0);
        let table = [
            (turning_f64(&lambda, a), 1.0 / 6.0),
            (turning_f64(&gamma, b), -1.0 / 12.0 + m as f64),
            (turning_f64(&gamma, c), 1.0 / 12.0),
            (turning_f64(&lambda, o), 1.0 / 3.0 - m as f64),
        ];
        for (got, want) in table {
            let err = (got - want).abs();
            worst = worst.max(err);
            assert!(err < 1e-9, "m={m}: turning {got} expected {want}");
        }
    }
    format!("4 turning values match for m in [-5,5], worst error {worst:.2e}")
}

// 6: spiral-pair closed-winding identities, exact.
fn criterion_spiral_winding_identities(_ctx: &Ctx) -> String {
    for m in -5i64..=5 {
        let a = Pt::int(0, 0);
        let b = Pt::int(6, 0);
        let c = Pt::int(0, 6);
        let pair = spiral_pair(&a, &b, &c, m).unwrap();
        assert!(pair.gamma.is_simple() && pair.lambda.is_simple());
        assert!(winding_core::polyline::disjoint(&pair.gamma, &pair.lambda));
        if m == 0 {
            // Straight segments: closing them retraces the segment, a
            // degenerate loop with winding 0 everywhere, as required.
            assert_eq!(pair.gamma.points().len(), 2);
            assert_eq!(pair.lambda.points().len(), 2);
            continue;
        }
        // Closing gamma with the segment back to its start (and likewise
        // lambda) yields closed curves with exactly prescribed windings.
        let gamma_loop = Cycle::new(pair.gamma.points().to_vec()).unwrap();
        let lambda_loop = Cycle::new(pair.lambda.points().to_vec()).unwrap();
        let o = winding_core::exact_geom::centroid(&a, &b, &c);
        assert_eq!(winding_closed(&gamma_loop, &b), Ok(m));
        assert_eq!(winding_closed(&gamma_loop, &c), Ok(0));
        assert_eq!(winding_closed(&lambda_loop, &o), Ok(-m));
        assert_eq!(winding_closed(&lambda_loop, &a), Ok(0));
    }
    "4 exact identities hold for m in [-5,5]".to_string()
}

// 7: the finger move shifts the winding vector by exactly (0,+n,0,-n).
fn criterion_finger_move_delta(ctx: &Ctx) -> String {
    let start = Instant::now();
    let mut cases = Vec::new();
    for m1 in -2i64..=2 {
        for m2 in -2i64..=2 {
            for m3 in -2i64..=2 {
                for n in -5i64..=5 {
                    cases.push((m1, m2, m3, n));
                }
            }
        }
    }
    let total = cases.len();
    cases.par_iter().for_each(|&(m1, m2, m3, n)| {
        let g = base_embedding(m1, m2, m3);
        let wg = g.winding_vector_k4().unwrap().as_array();
        let f = finger_move(&g, n).unwrap();
        let wf = f.winding_vector_k4().unwrap().as_array();
        assert_eq!(
            [wf[0] - wg[0], wf[1] - wg[1], wf[2] - wg[2], wf[3] - wg[3]],
            [0, n, 0, -n],
            "base ({m1},{m2},{m3}), n={n}"
        );
        round_trip(ctx, &f);
    });
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 180.0, "finger-move sweep took {secs:.1}s, budget 180s");
    format!("{total} moves over bases [-2,2]^3, n in [-5,5], delta exact in {secs:.1}s")
}

// 8: the float angle-sum winding rounds to the exact crossing-count
// winding on 10,000 random (closed polyline, point) pairs.
fn criterion_oracle_equivalence(_ctx: &Ctx) -> String {
    let start = Instant::now();
    let worst = (0u64..10_000)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x8ac1e ^ i);
            let c = random_cycle(&mut rng);
            let p = random_point_off(&mut rng, |p| c.contains_point(p));
            let exact = winding_closed(&c, &p).unwrap();
            let float = winding_oracle(&c, &p).unwrap();
            let err = (float - exact as f64).abs();
            assert!(
                float.round() as i64 == exact && err < 1e-6,
                "pair {i}: float {float} vs exact {exact}"
            );
            err
        })
        .reduce(|| 0.0, f64::max);
    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "oracle sweep took {secs:.1}s, budget 60s");
    format!("10000 pairs agree, worst |float-exact| {worst:.2e}, in {secs:.1}s")
}

// 9: turning-number laws - additivity under splitting, negation under
// reversal, closure rounding to the exact winding, and the per-vertex
// decomposition of a K4 winding into three edge turnings - on 1,000
// random instances each.
fn criterion_turning_laws(_ctx: &Ctx) -> String {
    let start = Instant::now();

    (0u64..1_000).into_par_iter().for_each(|i| {
        let mut rng = ChaCha8Rng::seed_from_u64(0xadd ^ i);
        // Additivity.
        let l = random_polyline(&mut rng, 3);
        let p = random_point_off(&mut rng, |p| l.contains_point(p));
        let k = 1 + (rng.next_u64() as usize) % (l.points().len() - 2);
        let prefix = Polyline::new(l.points()[..=k].to_vec()).unwrap();
        let suffix = Polyline::new(l.points()[k..].to_vec()).unwrap();
        let whole = turning_open(&l, &p).unwrap();
        let split = turning_open(&prefix, &p).unwrap() + turning_open(&suffix, &p).unwrap();
        assert!((whole - split).abs() < 1e-9, "additivity failed at {i}");
        // Reversal.
        let back = turning_open(&l.reverse(), &p).unwrap();
        assert!((whole + back).abs() < 1e-9, "reversal failed at {i}");
        // Closure.
        let c = random_cycle(&mut rng);
        let q = random_point_off(&mut rng, |p| c.contains_point(p));
        let exact = winding_closed(&c, &q).unwrap();
        let float = turning_open(&c.to_open(0), &q).unwrap();
        assert!(
            float.round() as i64 == exact && (float - exact as f64).abs() < 1e-6,
            "closure failed at {i}"
        );
    });

    // Decomposition: w_f(j) equals the sum of the turnings of the three
    // oriented edges of the opposite cycle around f(j). 250 sampled
    // drawings x 4 vertices = 1,000 instances.
    let graph = Graph::k4();
    let params = SamplerParams::default();
    (0u64..250).into_par_iter().for_each(|seed| {
        let d = sample_random(&graph, 7_000 + seed, &params).unwrap();
        let w = d.winding_vector_k4().unwrap().as_array();
        for j in 1u32..=4 {
            let others: Vec<u32> = (1..=4).filter(|&v| v != j).collect();
            let p = d.vertex_pos(j);
            let mut sum = 0.0;
            for i in 0..3 {
                let (u, v) = (others[i], others[(i + 1) % 3]);
                sum += turning_open(&d.edge_oriented(u, v), p).unwrap();
            }
            let expect = w[(j - 1) as usize] as f64;
            assert!(
                (sum - expect).abs() < 1e-6,
                "decomposition failed: seed {seed}, vertex {j}: {sum} vs {expect}"
            );
        }
    });

    let secs = start.elapsed().as_secs_f64();
    assert!(secs < 60.0, "turning laws took {secs:.1}s, budget 60s");
    format!("additivity/reversal/closure/decomposition x 1000 instances in {secs:.1}s")
}

// 10: every drawing produced above round-tripped exactly through the
// JSON format (checked inline as the drawings were produced).
fn criterion_round_trips(ctx: &Ctx) -> String {
    let n = ctx.round_trips.load(Ordering::Relaxed);
    assert!(n >= 12_000, "only {n} drawings were round-tripped");
    format!("{n} drawings serialized and re-parsed exactly")
}

#[test]
fn acceptance() {
    let ctx = Ctx {
        round_trips: AtomicU64::new(0),
    };
    let criteria: [(&str, fn(&Ctx) -> String); 10] = [
        ("realizer sweep", criterion_realizer_sweep),
        ("large tuples", criterion_large_tuples),
        ("K4 parity fuzz", criterion_k4_parity_fuzz),
        ("K5\\45 difference fuzz", criterion_k5_difference_fuzz),
        ("equilateral turning table", criterion_equilateral_turning_table),
        ("spiral winding identities", criterion_spiral_winding_identities),
        ("finger-move delta", criterion_finger_move_delta),
        ("oracle equivalence", criterion_oracle_equivalence),
        ("turning-number laws", criterion_turning_laws),
        ("serialization round-trip", criterion_round_trips),
    ];

    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(|| run(&ctx))) {
            Ok(summary) => println!("criterion {:2}/10 {name}: PASS — {summary}", i + 1),
            Err(payload) => {
                let msg = payload
                    .downcast_ref::<String>()
                    .map(String::as_str)
                    .or_else(|| payload.downcast_ref::<&str>().copied())
                    .unwrap_or("panic");
                println!("criterion {:2}/10 {name}: FAIL — {msg}", i + 1);
                failed += 1;
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
