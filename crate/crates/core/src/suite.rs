//! Named batches of checks. Every case carries a command that reruns it.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::adversary::{
    cut_balanced_edges, eventrees_coloring, CoveringAdversary, Lefogo2Adversary, TreeLemmaAdversary,
};
use crate::bounds::{b, certify_lower_bound, count_balanced, dectree_bound, mu, Source, Valuation};
use crate::constructions::{
    algorithm_a, build_f, build_minedge_graph, verify_querier, MinedgeQuerier,
};
use crate::error::Result;
use crate::generate::{free_trees, gnp, random_connected, random_tree, union};
use crate::graph::{Color, Coloring, Graph};
use crate::nondet::{cert, m_nd, nondet_certificate, nondet_hard_coloring, path_cert};
use crate::solver::{forced_search, solve_graph};
use crate::state::Answer;
use crate::strategy::{explore, play, ConstantAdversary, OrderQuerier, RandomQuerier};
use crate::weighted::{
    partitions, relevance_violations, solve_weighted, WeightVector, WeightedSolver,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    PaperValues,
    Properties,
    Adversaries,
    Constructions,
    Nondet,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::PaperValues,
        Suite::Properties,
        Suite::Adversaries,
        Suite::Constructions,
        Suite::Nondet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperValues => "paper-values",
            Suite::Properties => "properties",
            Suite::Adversaries => "adversaries",
            Suite::Constructions => "constructions",
            Suite::Nondet => "nondet",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| crate::Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub suite: Suite,
    pub case: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub repro: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// Aligned text table; failing rows are followed by their command.
    pub fn table(&self) -> String {
        let w_case = self
            .cases
            .iter()
            .map(|c| c.case.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let w_exp = self
            .cases
            .iter()
            .map(|c| c.expected.len())
            .max()
            .unwrap_or(8)
            .max(8);
        let mut out = format!("suite {} (seed {})\n", self.suite, self.seed);
        out += &format!(
            "{:<4}  {:<w_case$}  {:<w_exp$}  actual\n",
            "", "case", "expected"
        );
        for c in &self.cases {
            let mark = if c.pass { "ok" } else { "FAIL" };
            out += &format!(
                "{mark:<4}  {:<w_case$}  {:<w_exp$}  {}\n",
                c.case, c.expected, c.actual
            );
            if !c.pass {
                out += &format!("      repro: {}\n", c.repro);
            }
        }
        out += &format!("{} passed, {} failed\n", self.passed, self.failed);
        out
    }

    /// One JSON object per case, then a summary object.
    pub fn json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out += &serde_json::to_string(c).expect("plain data");
            out.push('\n');
        }
        out += &serde_json::json!({
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "failed": self.failed,
        })
        .to_string();
        out.push('\n');
        out
    }
}

struct Check {
    expected: String,
    actual: String,
    pass: bool,
}

fn equal<T: PartialEq + fmt::Display>(expected: T, actual: T) -> Check {
    Check {
        pass: expected == actual,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

fn at_least<T: PartialOrd + fmt::Display>(floor: T, actual: T) -> Check {
    Check {
        pass: actual >= floor,
        expected: format!(">= {floor}"),
        actual: actual.to_string(),
    }
}

/// Passes when `failures` is empty after `checked` trials.
fn clean(checked: usize, failures: Vec<String>) -> Check {
    Check {
        expected: "no failures".into(),
        actual: match failures.first() {
            None => format!("{checked} checked"),
            Some(f) => format!("{} of {checked} failed, first: {f}", failures.len()),
        },
        pass: failures.is_empty(),
    }
}

type Run = Box<dyn Fn() -> Result<Check> + Send + Sync>;

struct Case {
    name: String,
    repro: String,
    run: Run,
}

fn case(
    name: impl Into<String>,
    repro: impl Into<String>,
    run: impl Fn() -> Result<Check> + Send + Sync + 'static,
) -> Case {
    Case {
        name: name.into(),
        repro: repro.into(),
        run: Box::new(run),
    }
}

fn weights_arg(w: &[u64]) -> String {
    w.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Runs every case of `suite`; cases run in parallel, results keep their order.
pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let cases = match suite {
        Suite::PaperValues => value_cases(),
        Suite::Properties => properties(seed),
        Suite::Adversaries => adversaries(seed),
        Suite::Constructions => constructions(),
        Suite::Nondet => nondet(seed),
    };
    let cases: Vec<CaseResult> = cases
        .into_par_iter()
        .map(|c| {
            let (expected, actual, pass) = match (c.run)() {
                Ok(r) => (r.expected, r.actual, r.pass),
                Err(e) => ("no error".into(), format!("error: {e}"), false),
            };
            CaseResult {
                suite,
                case: c.name,
                expected,
                actual,
                pass,
                repro: c.repro,
            }
        })
        .collect();
    let passed = cases.iter().filter(|c| c.pass).count();
    SuiteReport {
        suite,
        seed,
        passed,
        failed: cases.len() - passed,
        cases,
    }
}

fn value_cases() -> Vec<Case> {
    let mut v = Vec::new();
    for k in 1..=18usize {
        let w = vec![1u64; k];
        v.push(case(
            format!("all-ones k={k}"),
            format!("majq solve-weighted {}", weights_arg(&w)),
            move || {
                Ok(equal(
                    k as u32 - b(k as u64),
                    solve_weighted(&WeightVector::ones(k)),
                ))
            },
        ));
    }
    for n in 2..=10usize {
        v.push(case(
            format!("complete n={n}"),
            format!("majq solve-graph complete:{n}"),
            move || {
                Ok(equal(
                    n as u32 - b(n as u64),
                    solve_graph(&Graph::complete(n))?,
                ))
            },
        ));
    }
    for n in 2..=15usize {
        let expected = match n {
            15 => 12,
            _ if n % 2 == 0 => n as u32 - 1,
            _ => n as u32 - b(n as u64),
        };
        v.push(case(
            format!("path n={n}"),
            format!("majq solve-graph path:{n}"),
            move || Ok(equal(expected, solve_graph(&Graph::path(n))?)),
        ));
    }
    for (n, count) in [(4usize, 2usize), (6, 6), (8, 23), (10, 106)] {
        v.push(case(
            format!("even free trees n={n}"),
            format!("majq solve-graph free-trees:{n}"),
            move || {
                let trees = free_trees(n);
                let mut values: Vec<u32> = trees.iter().map(solve_graph).collect::<Result<_>>()?;
                values.sort_unstable();
                values.dedup();
                let values: Vec<String> = values.iter().map(u32::to_string).collect();
                Ok(equal(
                    format!("{count} trees, all {}", n - 1),
                    format!("{} trees, all {}", trees.len(), values.join("/")),
                ))
            },
        ));
    }
    let weighted: [(&[u64], u32); 3] = [
        (&[1, 2, 3, 4, 5, 6, 7], 5),
        (&[3, 3, 7, 8, 9], 4),
        (&[2, 1, 1], 2),
    ];
    for (w, m) in weighted {
        v.push(case(
            format!("m({})", weights_arg(w)),
            format!("majq solve-weighted {}", weights_arg(w)),
            move || {
                Ok(equal(
                    m,
                    solve_weighted(&WeightVector::new(w.iter().copied())),
                ))
            },
        ));
    }
    v.push(case(
        "balanced colorings of 1..7",
        "majq bounds 1,2,3,4,5,6,7",
        || {
            Ok(equal(
                "8".to_string(),
                count_balanced(&WeightVector::new(1..=7)).to_string(),
            ))
        },
    ));
    v.push(case(
        "m(3,3,5,5,5)",
        "majq solve-weighted 3,3,5,5,5",
        || {
            Ok(at_least(
                3,
                solve_weighted(&WeightVector::new([3, 3, 5, 5, 5])),
            ))
        },
    ));
    for (w, source, bound) in [
        ([3u64, 3, 7, 8, 9], Source::Suly1formaI, 4u32),
        ([3, 3, 5, 5, 5], Source::Suly1formaIi, 3),
    ] {
        v.push(case(
            format!("{source} certificate for {}", weights_arg(&w)),
            format!("majq certify {}", weights_arg(&w)),
            move || {
                let got = certify_lower_bound(&WeightVector::new(w))
                    .into_iter()
                    .filter(|c| c.source == source)
                    .map(|c| c.bound)
                    .max();
                Ok(equal(
                    format!("{source} bound {bound}"),
                    match got {
                        Some(g) => format!("{source} bound {g}"),
                        None => format!("no {source} certificate"),
                    },
                ))
            },
        ));
    }
    v
}

fn random_vector(rng: &mut ChaCha8Rng) -> WeightVector {
    let k = rng.gen_range(1..=8);
    WeightVector::new((0..k).map(|_| rng.gen_range(0..=10)))
}

fn properties(seed: u64) -> Vec<Case> {
    let repro = format!("majq run-suite properties --seed {seed}");
    let mut v = Vec::new();
    v.push(case(
        "certificates never exceed m (500 vectors)",
        repro.clone(),
        move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut solver = WeightedSolver::new();
            let mut fails = Vec::new();
            for _ in 0..500 {
                let w = random_vector(&mut rng);
                let m = solver.value(&w);
                let d = dectree_bound(&w);
                if d.bound > m {
                    fails.push(format!("{w}: counting bound {} > {m}", d.bound));
                }
                for c in certify_lower_bound(&w) {
                    if c.bound > m {
                        fails.push(format!("{w}: {} bound {} > {m}", c.source, c.bound));
                    }
                }
            }
            Ok(clean(500, fails))
        },
    ));
    v.push(case(
        "m = k - mu(p) when mu(p) <= 2 (500 vectors)",
        repro.clone(),
        move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut solver = WeightedSolver::new();
            let (mut seen, mut fails) = (0, Vec::new());
            for _ in 0..500 {
                let w = random_vector(&mut rng);
                if let Valuation::Finite(e) = mu(&count_balanced(&w)) {
                    if e <= 2 {
                        seen += 1;
                        let m = solver.value(&w);
                        if m != w.len() as u32 - e {
                            fails.push(format!("{w}: m = {m}, mu = {e}"));
                        }
                    }
                }
            }
            Ok(clean(seen, fails))
        },
    ));
    v.push(case(
        "relevance facts, totals <= 12",
        "majq run-suite properties",
        || {
            let mut n = 0;
            let mut fails = Vec::new();
            for total in 0..=12 {
                for w in partitions(total) {
                    n += 1;
                    fails.extend(relevance_violations(&w));
                }
            }
            Ok(clean(n, fails))
        },
    ));
    v.push(case(
        "scaling and zero balls keep m, totals <= 12",
        "majq run-suite properties",
        || {
            let mut solver = WeightedSolver::new();
            let (mut n, mut fails) = (0, Vec::new());
            for total in 1..=12 {
                for w in partitions(total) {
                    n += 1;
                    let m = solver.value(&w);
                    for c in [2, 3] {
                        if solver.value(&w.scaled(c)) != m {
                            fails.push(format!("{w} scaled by {c}"));
                        }
                    }
                    let mut padded = w.as_slice().to_vec();
                    padded.extend([0, 0]);
                    if solver.value(&WeightVector::new(padded)) != m {
                        fails.push(format!("{w} with zeros"));
                    }
                    let k = w.len() as u32;
                    let cap = if total % 2 == 1 && k >= 2 {
                        k - 2
                    } else {
                        k.saturating_sub(1)
                    };
                    if m > cap {
                        fails.push(format!("{w}: {m} above {cap}"));
                    }
                }
            }
            Ok(clean(n, fails))
        },
    ));
    v.push(case(
        "adding edges never raises m (200 pairs, n <= 8)",
        repro.clone(),
        move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut fails = Vec::new();
            for _ in 0..200 {
                let n = rng.gen_range(2..=8);
                let g = random_connected(n, rng.gen_range(0.0..0.5), rng.gen());
                let h = union(&g, &gnp(n, 0.3, rng.gen()));
                let (mg, mh) = (solve_graph(&g)?, solve_graph(&h)?);
                let floor = n as u32 - b(n as u64);
                if mh > mg || mg > n as u32 - 1 || mh < floor {
                    fails.push(format!("{g} ({mg}) inside {h} ({mh})"));
                }
            }
            Ok(clean(200, fails))
        },
    ));
    v
}

fn random_coloring(n: usize, rng: &mut ChaCha8Rng) -> Coloring {
    Coloring(
        (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Color::Red
                } else {
                    Color::Blue
                }
            })
            .collect(),
    )
}

fn adversaries(seed: u64) -> Vec<Case> {
    let repro = format!("majq run-suite adversaries --seed {seed}");
    let mut v = Vec::new();
    for n in [2usize, 4, 6, 8, 10] {
        v.push(case(
            format!("tree-lemma forces n-1 on even trees n={n}"),
            format!("majq adversary treelemma free-trees:{n} --forced"),
            move || {
                let mut fails = Vec::new();
                let trees = free_trees(n);
                for t in &trees {
                    let r = forced_search(t, &TreeLemmaAdversary::new(t))?;
                    if r.value as usize != n - 1 || !r.violations.is_empty() {
                        fails.push(format!(
                            "{} forced {}",
                            t.to_text().replace('\n', " "),
                            r.value
                        ));
                    }
                }
                Ok(clean(trees.len(), fails))
            },
        ));
    }
    v.push(case(
        "tree-lemma conditions in every reachable state, trees n <= 8",
        "majq run-suite adversaries",
        || {
            let (mut states, mut fails) = (0, Vec::new());
            for n in 2..=8 {
                for t in free_trees(n) {
                    let r = explore(&t, &TreeLemmaAdversary::new(&t), &mut |s| {
                        if !TreeLemmaAdversary::conditions_hold(&t, s) {
                            fails.push(format!("{t}: {:?}", s.labels()));
                        }
                    })?;
                    states += r.states;
                    fails.extend(r.violations);
                }
            }
            Ok(clean(states, fails))
        },
    ));
    v.push(case(
        "tree-lemma conditions on random plays, n <= 14",
        repro.clone(),
        move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut fails = Vec::new();
            for _ in 0..200 {
                let t = random_tree(rng.gen_range(2..=14), rng.gen());
                let mut q = RandomQuerier::new(&t, rng.gen());
                let mut a = TreeLemmaAdversary::new(&t);
                let tr = play(&t, &mut q, &mut a)?;
                let mut s = crate::state::QueryState::new(t.n());
                for &(e, ans) in &tr.steps {
                    s = s.apply_query(&t, e, ans)?;
                    if !TreeLemmaAdversary::conditions_hold(&t, &s) {
                        fails.push(format!("{t} after {e:?}"));
                    }
                }
                fails.extend(crate::strategy::Adversary::violations(&a).iter().cloned());
            }
            Ok(clean(200, fails))
        },
    ));
    v.push(case(
        "even-tree colorings have no balanced cut, n <= 12",
        "majq run-suite adversaries",
        || {
            let (mut n_trees, mut fails) = (0, Vec::new());
            for n in (2..=12).step_by(2) {
                for t in free_trees(n) {
                    n_trees += 1;
                    let c = eventrees_coloring(&t)?;
                    if !c.is_balanced() || !cut_balanced_edges(&t, &c).is_empty() {
                        fails.push(format!("{t} colored {c}"));
                    }
                }
            }
            Ok(clean(n_trees, fails))
        },
    ));
    for p in [32usize, 4] {
        v.push(case(
            format!("odd-tree adversary invariants, p={p}, 100 random trees"),
            format!("{repro}"),
            move || {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p as u64);
                let mut fails = Vec::new();
                for _ in 0..100 {
                    let n = 2 * rng.gen_range(2..=15) + 1;
                    let t = random_tree(n, rng.gen());
                    let mut a = Lefogo2Adversary::with_p(&t, p)?;
                    let tr = play(&t, &mut RandomQuerier::new(&t, rng.gen()), &mut a)?;
                    let got = crate::strategy::Adversary::violations(&a);
                    if let Some(f) = got.first() {
                        fails.push(format!(
                            "{}: {f}",
                            crate::generate::InstanceSpec::RandomTree { n, seed: 0 }
                        ));
                    }
                    if tr.len() + 2 < n.saturating_sub(b(n as u64) as usize) {
                        fails.push(format!("n={n} ended after {}", tr.len()));
                    }
                }
                Ok(clean(100, fails))
            },
        ));
    }
    v.push(case(
        "cover adversary on hub graphs reaches the hard value",
        "majq run-suite adversaries",
        || {
            let mut fails = Vec::new();
            let sizes = [4usize, 5, 8, 9, 10, 11];
            for n in sizes {
                let g = Graph::new(n, (1..n).map(|x| (0, x))).expect("star");
                let r = forced_search(&g, &CoveringAdversary::lefogo1(&g, &[0])?)?;
                let hard = if n % 2 == 0 { n - 1 } else { n - 2 };
                if r.value as usize != hard || !r.violations.is_empty() {
                    fails.push(format!("star n={n}: {}", r.value));
                }
            }
            Ok(clean(sizes.len(), fails))
        },
    ));
    for n in [5usize, 7, 9, 11, 13] {
        v.push(case(
            format!("odd path adversary n={n}"),
            format!("majq adversary oddpath path:{n} --forced"),
            move || {
                let g = Graph::path(n);
                let m = solve_graph(&g)?;
                let mut parts = Vec::new();
                let mut pass = true;
                for stride in [8, 9] {
                    let r = forced_search(&g, &CoveringAdversary::oddpath(n, stride)?)?;
                    pass &= r.value as usize + 6 >= n && r.value <= m && r.violations.is_empty();
                    parts.push(format!("stride {stride}: {}", r.value));
                }
                Ok(Check {
                    expected: format!("between {} and {m}", n.saturating_sub(6)),
                    actual: parts.join(", "),
                    pass,
                })
            },
        ));
    }
    v
}

fn constructions() -> Vec<Case> {
    let mut v = Vec::new();
    for n in 4..=16usize {
        v.push(case(
            format!("sparse graph n={n}"),
            format!("majq construct minedge {n} --emit verify"),
            move || {
                let c = build_minedge_graph(n)?;
                let budget = n - b(n as u64) as usize;
                let r = verify_querier(&c.graph, &MinedgeQuerier::new(&c), budget)?;
                let cap = n * (1 + b(n as u64) as usize);
                Ok(Check {
                    expected: format!("<= {cap} edges, <= {budget} queries"),
                    actual: format!(
                        "{} edges, {} queries over {} leaves",
                        c.graph.edge_count(),
                        r.max_queries,
                        r.leaves_checked
                    ),
                    pass: r.pass && c.graph.edge_count() <= cap,
                })
            },
        ));
    }
    for n in 4..=12usize {
        v.push(case(
            format!("sparse graph value n={n}"),
            format!("majq solve-graph minedge:{n}"),
            move || {
                Ok(equal(
                    n as u32 - b(n as u64),
                    solve_graph(&build_minedge_graph(n)?.graph)?,
                ))
            },
        ));
    }
    v.push(case(
        "doubling order on F_8, all SAME",
        "majq run-suite constructions",
        || {
            let f = build_f(8);
            let copy: Vec<(usize, usize)> = (0..8).map(|i| (i, 8 + i)).collect();
            let order = algorithm_a(&copy)?;
            let t = play(
                &f,
                &mut OrderQuerier::new(order),
                &mut ConstantAdversary(Answer::Same),
            )?;
            Ok(equal(
                "15 queries".to_string(),
                format!("{} queries", t.len()),
            ))
        },
    ));
    v
}

fn nondet(seed: u64) -> Vec<Case> {
    let mut v = Vec::new();
    for n in (2..=12usize).step_by(2) {
        v.push(case(
            format!("m_nd of even path n={n}"),
            format!("majq nondet mnd path:{n}"),
            move || Ok(equal(n - 1, m_nd(&Graph::path(n))?)),
        ));
    }
    for n in [4usize, 6, 8, 10] {
        v.push(case(
            format!("m_nd of even trees n={n}"),
            format!("majq nondet mnd free-trees:{n}"),
            move || {
                let trees = free_trees(n);
                let mut fails = Vec::new();
                for t in &trees {
                    let got = m_nd(t)?;
                    if got != n - 1 {
                        fails.push(format!("{t} gives {got}"));
                    }
                }
                Ok(clean(trees.len(), fails))
            },
        ));
    }
    for n in 1..=11usize {
        v.push(case(
            format!("interval search equals subset search n={n}"),
            "majq run-suite nondet",
            move || {
                let g = Graph::path(n);
                let mut fails = Vec::new();
                for mask in 0..1u64 << n {
                    let c = Coloring::from_mask(n, mask);
                    let (a, p) = (cert(&g, &c)?.size, path_cert(&c)?.size);
                    if a != p {
                        fails.push(format!("{c}: {a} vs {p}"));
                    }
                }
                Ok(clean(1 << n, fails))
            },
        ));
    }
    for k in [2usize, 4] {
        let n = k * k + 1;
        v.push(case(
            format!("batch coloring k={k}"),
            format!("majq nondet path-cert {}", "batch"),
            move || {
                let c = nondet_hard_coloring(k)?;
                Ok(at_least(n - 2 * k - 1, cert(&Graph::path(n), &c)?.size))
            },
        ));
    }
    v.push(case(
        "query sets certify 1000 random odd paths",
        format!("majq run-suite nondet --seed {seed}"),
        move || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut fails = Vec::new();
            for _ in 0..1000 {
                let n = 2 * rng.gen_range(1..=100) + 1;
                let c = random_coloring(n, &mut rng);
                match nondet_certificate(&c) {
                    Ok(r) if 5 * r.size + isqrt(n) <= 5 * n => {}
                    Ok(r) => fails.push(format!("{c}: {} queries", r.size)),
                    Err(e) => fails.push(format!("{c}: {e}")),
                }
            }
            Ok(clean(1000, fails))
        },
    ));
    for n in (3..=13usize).step_by(2) {
        v.push(case(
            format!("odd path m_nd n={n}"),
            "majq nondet path-table --odd-n 3..13",
            move || {
                let g = Graph::path(n);
                let (nd, m) = (m_nd(&g)?, solve_graph(&g)? as usize);
                Ok(Check {
                    expected: format!("<= m = {m}"),
                    actual: format!("{nd} (gap {})", n - nd),
                    pass: nd <= m,
                })
            },
        ));
    }
    v
}

fn isqrt(n: usize) -> usize {
    (0..=n).take_while(|r| r * r <= n).last().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn constructions_suite_passes_and_is_deterministic() {
        let a = run_suite(Suite::Constructions, 0);
        assert!(a.ok(), "{}", a.table());
        let b = run_suite(Suite::Constructions, 0);
        assert_eq!(a.json_lines(), b.json_lines());
        assert!(a.table().contains("passed"));
    }

    #[test]
    fn failing_cases_print_their_command() {
        let report = SuiteReport {
            suite: Suite::Nondet,
            seed: 3,
            passed: 0,
            failed: 1,
            cases: vec![CaseResult {
                suite: Suite::Nondet,
                case: "x".into(),
                expected: "1".into(),
                actual: "2".into(),
                pass: false,
                repro: "majq nondet mnd path:4".into(),
            }],
        };
        assert!(report.table().contains("repro: majq nondet mnd path:4"));
        assert!(report.json_lines().lines().count() == 2);
    }
}
