//! The ten acceptance criteria. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use majority::adversary::{cut_balanced_edges, eventrees_coloring, Lefogo2Adversary, TreeLemmaAdversary};
use majority::bounds::{b, certify_lower_bound, count_balanced, dectree_bound, mu, Source, Valuation};
use majority::constructions::{build_minedge_graph, verify_querier, MinedgeQuerier};
use majority::generate::{free_trees, gnp, random_connected, random_tree, union};
use majority::graph::{Color, Coloring};
use majority::nondet::{cert, certify, m_nd, nondet_hard_coloring, nondet_query_set, path_cert};
use majority::solver::{forced_search, solve_graph, GraphSolver, KeyMode};
use majority::strategy::{explore, play, Adversary, RandomQuerier};
use majority::weighted::{partitions, relevance_violations, relevant_count, weighted_terminal, WeightedSolver};
use majority::{solve_weighted, Graph, QueryState, WeightVector};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn c1() -> Outcome {
    let start = Instant::now();
    for k in 1..=18 {
        let m = solve_weighted(&WeightVector::ones(k));
        ensure(m == k as u32 - b(k as u64), || format!("m(1^{k}) = {m}"))?;
    }
    for n in 2..=10 {
        let m = solve_graph(&Graph::complete(n)).map_err(|e| e.to_string())?;
        ensure(m == n as u32 - b(n as u64), || format!("m(K{n}) = {m}"))?;
        let w = solve_weighted(&WeightVector::ones(n));
        ensure(m == w, || format!("K{n} and 1^{n} disagree"))?;
    }
    within(start, Duration::from_secs(10), "criterion 1")?;
    Ok(format!("all-ones k <= 18 and K_n n <= 10 match n - b(n) in {:?}", start.elapsed()))
}

fn c2() -> Outcome {
    let start = Instant::now();
    for n in 2..=14 {
        let m = solve_graph(&Graph::path(n)).map_err(|e| e.to_string())?;
        let want = if n % 2 == 0 { n as u32 - 1 } else { n as u32 - b(n as u64) };
        ensure(m == want, || format!("m(P{n}) = {m}, want {want}"))?;
    }
    let small = start.elapsed();
    let mut s = GraphSolver::with_mode(&Graph::path(15), KeyMode::Path).map_err(|e| e.to_string())?;
    let m15 = s.solve();
    ensure(m15 == 12, || format!("m(P15) = {m15}"))?;
    within(start, Duration::from_secs(15 * 60), "criterion 2")?;
    Ok(format!("P2..P14 in {small:?}, m(P15) = 12 in {:?}", start.elapsed() - small))
}

fn c3() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in [4, 6, 8, 10] {
        let trees = free_trees(n);
        counts.push(trees.len());
        let bad: Vec<String> = trees
            .par_iter()
            .filter_map(|t| match solve_graph(t) {
                Ok(m) if m as usize == n - 1 => None,
                r => Some(format!("{} -> {r:?}", t.to_text().replace('\n', " "))),
            })
            .collect();
        ensure(bad.is_empty(), || format!("n={n}: {bad:?}"))?;
    }
    ensure(counts == [2, 6, 23, 106], || format!("tree counts {counts:?}"))?;
    within(start, Duration::from_secs(120), "criterion 3")?;
    Ok(format!("{counts:?} trees all need n-1 ({:?})", start.elapsed()))
}

fn c4() -> Outcome {
    let w = |s: &[u64]| WeightVector::new(s.iter().copied());
    let a = w(&[1, 2, 3, 4, 5, 6, 7]);
    ensure(solve_weighted(&a) == 5, || "m(1..7) != 5".into())?;
    ensure(count_balanced(&a) == 8u32.into(), || "count_balanced(1..7) != 8".into())?;
    let v = w(&[3, 3, 7, 8, 9]);
    ensure(solve_weighted(&v) == 4, || "m(3,3,7,8,9) != 4".into())?;
    let u = w(&[3, 3, 5, 5, 5]);
    ensure(solve_weighted(&u) >= 3, || "m(3,3,5,5,5) < 3".into())?;
    let has = |x: &WeightVector, src: Source, bound: u32| {
        certify_lower_bound(x).iter().any(|c| c.source == src && c.bound == bound)
    };
    ensure(has(&v, Source::Suly1formaI, 4), || "no certificate 4 for 3,3,7,8,9".into())?;
    ensure(has(&u, Source::Suly1formaIi, 3), || "no certificate 3 for 3,3,5,5,5".into())?;
    Ok("m(1..7)=5 with 8 balanced colorings, m(3,3,7,8,9)=4, m(3,3,5,5,5)>=3, both certified".into())
}

fn c5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut solver = WeightedSolver::new();
    let mut exact = 0;
    for _ in 0..500 {
        let k = rng.gen_range(1..=8);
        let w = WeightVector::new((0..k).map(|_| rng.gen_range(0..=10)));
        let m = solver.value(&w);
        let d = dectree_bound(&w);
        ensure(d.bound <= m, || format!("{w}: counting bound {} > {m}", d.bound))?;
        for c in certify_lower_bound(&w) {
            ensure(c.bound <= m, || format!("{w}: {} gives {} > {m}", c.source, c.bound))?;
        }
        if let Valuation::Finite(e) = mu(&count_balanced(&w)) {
            if e <= 2 {
                exact += 1;
                ensure(m == w.len() as u32 - e, || format!("{w}: m = {m} but mu = {e}"))?;
            }
        }
    }
    ensure(exact > 0, || "no vector with mu <= 2 sampled".into())?;
    Ok(format!("500 vectors sound, {exact} with mu <= 2 exact"))
}

fn c6() -> Outcome {
    let mut n = 0;
    for total in 0..=12 {
        for w in partitions(total) {
            for w in [w.clone(), WeightVector::new(w.as_slice().iter().copied().chain([0]))] {
                n += 1;
                let term = weighted_terminal(&w).is_some();
                ensure(term == (relevant_count(&w) <= 1), || format!("{w}: terminal {term}"))?;
                let v = relevance_violations(&w);
                ensure(v.is_empty(), || format!("{w}: {v:?}"))?;
            }
        }
    }
    Ok(format!("{n} vectors with total <= 12"))
}

fn c7() -> Outcome {
    let start = Instant::now();
    let mut states = 0;
    for n in 1..=10 {
        for t in free_trees(n) {
            let mut bad = None;
            let r = explore(&t, &TreeLemmaAdversary::new(&t), &mut |s: &QueryState| {
                if bad.is_none() && !TreeLemmaAdversary::conditions_hold(&t, s) {
                    bad = Some(s.labels());
                }
            })
            .map_err(|e| e.to_string())?;
            ensure(bad.is_none() && r.violations.is_empty(), || format!("{t}: {bad:?} {:?}", r.violations))?;
            states += r.states;
            if n % 2 == 0 {
                let f = forced_search(&t, &TreeLemmaAdversary::new(&t)).map_err(|e| e.to_string())?;
                ensure(f.value as usize == n - 1, || format!("{t}: forced {}", f.value))?;
            }
        }
    }
    let mut even = 0;
    for n in (2..=12).step_by(2) {
        for t in free_trees(n) {
            even += 1;
            let c = eventrees_coloring(&t).map_err(|e| e.to_string())?;
            ensure(c.is_balanced() && cut_balanced_edges(&t, &c).is_empty(), || format!("{t}: {c}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..100 {
        let n = 2 * rng.gen_range(1..=15) + 1;
        let t = random_tree(n, rng.gen());
        for p in [32, 4] {
            let mut a = Lefogo2Adversary::with_p(&t, p).map_err(|e| e.to_string())?;
            play(&t, &mut RandomQuerier::new(&t, rng.gen()), &mut a).map_err(|e| e.to_string())?;
            ensure(a.violations().is_empty(), || format!("{t} p={p}: {:?}", a.violations()))?;
        }
    }
    within(start, Duration::from_secs(300), "criterion 7")?;
    Ok(format!(
        "{states} tree-adversary states, {even} even-tree colorings, 100 odd-tree plays ({:?})",
        start.elapsed()
    ))
}

fn c8() -> Outcome {
    let start = Instant::now();
    for n in 4..=16 {
        let c = build_minedge_graph(n).map_err(|e| e.to_string())?;
        let cap = n * (1 + b(n as u64) as usize);
        ensure(c.graph.edge_count() <= cap, || format!("n={n}: {} edges", c.graph.edge_count()))?;
        let budget = n - b(n as u64) as usize;
        let r = verify_querier(&c.graph, &MinedgeQuerier::new(&c), budget).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("n={n}: {:?}", r.failure))?;
        if n <= 12 {
            let m = solve_graph(&c.graph).map_err(|e| e.to_string())?;
            ensure(m as usize == budget, || format!("n={n}: m = {m}"))?;
        }
    }
    within(start, Duration::from_secs(300), "criterion 8")?;
    Ok(format!("n = 4..16 verified, values exact for n <= 12 ({:?})", start.elapsed()))
}

fn c9() -> Outcome {
    for n in (2..=12).step_by(2) {
        let v = m_nd(&Graph::path(n)).map_err(|e| e.to_string())?;
        ensure(v == n - 1, || format!("m_nd(P{n}) = {v}"))?;
    }
    for n in 1..=11 {
        let g = Graph::path(n);
        for mask in 0..1u64 << n {
            let c = Coloring::from_mask(n, mask);
            let a = cert(&g, &c).map_err(|e| e.to_string())?.size;
            let p = path_cert(&c).map_err(|e| e.to_string())?.size;
            ensure(a == p, || format!("{c}: subsets {a}, intervals {p}"))?;
        }
    }
    let hard = nondet_hard_coloring(4).map_err(|e| e.to_string())?;
    let h = cert(&Graph::path(17), &hard).map_err(|e| e.to_string())?.size;
    ensure(h >= 8, || format!("hard coloring certificate {h}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..1000 {
        let n = 2 * rng.gen_range(1..=100) + 1;
        let c = Coloring((0..n).map(|_| if rng.gen_bool(0.5) { Color::Red } else { Color::Blue }).collect());
        let q = nondet_query_set(&c).map_err(|e| e.to_string())?;
        certify(&Graph::path(n), &c, q).map_err(|e| format!("{c}: {e}"))?;
    }
    Ok(format!("even m_nd, DP = brute force n <= 11, hard P17 certificate {h}, 1000 query sets certify"))
}

fn c10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let g = random_connected(n, rng.gen_range(0.0..0.5), rng.gen());
        let h = union(&g, &gnp(n, 0.3, rng.gen()));
        let (mg, mh) = (solve_graph(&g).map_err(|e| e.to_string())?, solve_graph(&h).map_err(|e| e.to_string())?);
        ensure(mh <= mg, || format!("{g} -> {mg}, {h} -> {mh}"))?;
        let lo = n as u32 - b(n as u64);
        ensure(lo <= mh && mg < n as u32, || format!("{g}: {mg} outside the window"))?;
    }
    let mut solver = WeightedSolver::new();
    let mut n = 0;
    for total in 1..=12 {
        for w in partitions(total) {
            n += 1;
            let m = solver.value(&w);
            for c in [2, 3, 5] {
                ensure(solver.value(&w.scaled(c)) == m, || format!("{w} scaled by {c}"))?;
            }
            let padded = WeightVector::new(w.as_slice().iter().copied().chain([0, 0]));
            ensure(solver.value(&padded) == m && padded.without_zeros() == w, || format!("{w} with zeros"))?;
        }
    }
    Ok(format!("200 graph pairs monotone, {n} vectors scale and zero invariant"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("complete graphs and all-ones vectors", c1),
        ("paths", c2),
        ("even trees", c3),
        ("weighted values", c4),
        ("bound soundness", c5),
        ("terminal and relevance", c6),
        ("adversary strategies", c7),
        ("sparse construction", c8),
        ("non-deterministic complexity", c9),
        ("monotonicity", c10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
