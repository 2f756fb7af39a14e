//! Named batch suites. Each suite builds its instances deterministically
//! from a seed, checks every instance against an independent oracle in
//! parallel, and reports one row per instance.

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use vsrc_core::bounds::{
    chordal_coloring, clique_partition_exact, coloring_from_clique_partition,
    k_perfectly_groupable, vsrc_bounds,
};
use vsrc_core::cactus::color_cactus;
use vsrc_core::conflict::{edges_conflict, enumerate_shortest_paths, verify_coloring};
use vsrc_core::exact::{chromatic_number, decide_vsrc2, max_clique, vsrc_exact, DEFAULT_BUDGET};
use vsrc_core::graph::{all_pairs_distances, blocks};
use vsrc_core::instances::{
    generate, planted_3colorable, planted_k4, random_interval, reduce_3col, Family, GenSpec,
    SeededRng,
};
use vsrc_core::{Graph, SimpleGraph};

use crate::commands::{compute, Method};
use crate::{digest, exit, Outcome, RunRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// P_n for n in 2..=50 through `compute --method cactus`: k = n - 1.
    Paths,
    /// C_2m for m in 2..=25: k = m, and equal to exact up to 12 vertices.
    EvenCycles,
    /// C_2m+1 for m in 1..=25: k = m + 1 (C3: k = 1), equal to exact up to 11 vertices.
    OddCycles,
    /// Random cacti with at most 18 edges: cactus k equals exact k.
    CactusVsExact,
    /// Random connected graphs with n <= 8: conflict test equals path enumeration.
    ConflictOracle,
    /// Same pool: vsrc <= 2 iff the conflict graph is bipartite.
    TwoVsrc,
    /// Random graphs with cp <= 4: clique-partition coloring within r(r+1)/2.
    CliquePartition,
    /// Random interval and chordal graphs: coloring within n - omega + 1.
    Chordal,
    /// Planted 3-colorable and K4-containing graphs through the reduction.
    Reduction,
    /// Same pool as conflict-oracle: every graph is vsrc-perfectly groupable.
    Groupable,
    /// Every instance above: lower <= exact <= upper.
    Sandwich,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Paths,
        Suite::EvenCycles,
        Suite::OddCycles,
        Suite::CactusVsExact,
        Suite::ConflictOracle,
        Suite::TwoVsrc,
        Suite::CliquePartition,
        Suite::Chordal,
        Suite::Reduction,
        Suite::Groupable,
        Suite::Sandwich,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Paths => "paths",
            Suite::EvenCycles => "even-cycles",
            Suite::OddCycles => "odd-cycles",
            Suite::CactusVsExact => "cactus-vs-exact",
            Suite::ConflictOracle => "conflict-oracle",
            Suite::TwoVsrc => "two-vsrc",
            Suite::CliquePartition => "clique-partition",
            Suite::Chordal => "chordal",
            Suite::Reduction => "reduction",
            Suite::Groupable => "groupable",
            Suite::Sandwich => "sandwich",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides the default pool size of randomized suites.
    pub count: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            count: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub instance: String,
    pub detail: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub rows: Vec<Row>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

fn instance(name: String, graph: Graph) -> Instance {
    Instance { name, graph }
}

fn path(n: usize) -> Graph {
    generate(&GenSpec {
        family: Family::Path { n },
        seed: 0,
    })
    .expect("n >= 1")
}

fn cycle(n: usize) -> Graph {
    generate(&GenSpec {
        family: Family::Cycle { n },
        seed: 0,
    })
    .expect("n >= 3")
}

fn connected(n: usize, p: f64, seed: u64) -> Graph {
    generate(&GenSpec {
        family: Family::RandomConnected { n, p },
        seed,
    })
    .expect("valid parameters")
}

pub fn path_family() -> Vec<Instance> {
    (2..=50)
        .map(|n| instance(format!("P{n}"), path(n)))
        .collect()
}

pub fn even_cycle_family() -> Vec<Instance> {
    (2..=25)
        .map(|m| instance(format!("C{}", 2 * m), cycle(2 * m)))
        .collect()
}

pub fn odd_cycle_family() -> Vec<Instance> {
    (1..=25)
        .map(|m| instance(format!("C{}", 2 * m + 1), cycle(2 * m + 1)))
        .collect()
}

/// Random cacti with at most 18 edges.
pub fn cactus_pool(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = SeededRng::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let blocks = 1 + rng.below(6);
        let max_len = 3 + rng.below(6);
        let s = rng.next_u64();
        let g = generate(&GenSpec {
            family: Family::RandomCactus {
                blocks,
                max_len,
                kinds: None,
            },
            seed: s,
        })
        .expect("valid parameters");
        if g.m() <= 18 {
            out.push(instance(
                format!("cactus blocks={blocks} max_len={max_len} seed={s}"),
                g,
            ));
        }
    }
    out
}

const DENSITIES: [f64; 4] = [0.15, 0.3, 0.45, 0.6];

/// Random connected graphs on 2 to 8 vertices.
pub fn small_pool(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = SeededRng::new(seed);
    (0..count)
        .map(|_| {
            let n = 2 + rng.below(7);
            let p = DENSITIES[rng.below(DENSITIES.len())];
            let s = rng.next_u64();
            instance(
                format!("connected n={n} p={p} seed={s}"),
                connected(n, p, s),
            )
        })
        .collect()
}

/// Dense random graphs on 4 to 10 vertices whose clique partition number is
/// at most 4, paired with that number.
pub fn clique_partition_pool(seed: u64, count: usize) -> Vec<(Instance, usize)> {
    let mut rng = SeededRng::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = 4 + rng.below(7);
        let p = 0.5 + 0.1 * rng.below(5) as f64;
        let s = rng.next_u64();
        let g = connected(n, p, s);
        let r = clique_partition_exact(&g, DEFAULT_BUDGET)
            .expect("10 vertices fit the budget")
            .parts
            .len();
        if r <= 4 {
            out.push((instance(format!("connected n={n} p={p:.1} seed={s}"), g), r));
        }
    }
    out
}

/// Alternating random interval and random chordal graphs on 2 to 12 vertices.
pub fn chordal_pool(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = SeededRng::new(seed);
    (0..count)
        .map(|i| {
            let n = 2 + rng.below(11);
            let s = rng.next_u64();
            if i % 2 == 0 {
                let g = random_interval(n, s).expect("n >= 1").graph;
                instance(format!("interval n={n} seed={s}"), g)
            } else {
                let g = generate(&GenSpec {
                    family: Family::RandomChordal { n },
                    seed: s,
                })
                .expect("n >= 1");
                instance(format!("chordal n={n} seed={s}"), g)
            }
        })
        .collect()
}

/// Reduction inputs: the first half planted 3-colorable (3 to 8 vertices),
/// the second half containing a planted K4 (4 to 8 vertices).
pub fn reduction_pool(seed: u64, count: usize) -> Vec<(String, SimpleGraph)> {
    let mut rng = SeededRng::new(seed);
    (0..count)
        .map(|i| {
            let p = 0.3 + 0.1 * rng.below(6) as f64;
            let s = rng.next_u64();
            if i < count / 2 {
                let n = 3 + rng.below(6);
                let g = planted_3colorable(n, p, s).expect("n >= 3");
                (format!("planted-3col n={n} p={p:.1} seed={s}"), g)
            } else {
                let n = 4 + rng.below(5);
                let g = planted_k4(n, p, s).expect("n >= 4");
                (format!("planted-k4 n={n} p={p:.1} seed={s}"), g)
            }
        })
        .collect()
}

fn default_count(suite: Suite) -> usize {
    match suite {
        Suite::CactusVsExact => 100,
        Suite::ConflictOracle | Suite::TwoVsrc | Suite::Groupable => 500,
        Suite::CliquePartition | Suite::Chordal => 50,
        Suite::Reduction => 100,
        _ => 0,
    }
}

fn exact_k(g: &Graph) -> Result<usize, String> {
    vsrc_exact(g, DEFAULT_BUDGET)
        .map(|s| s.k)
        .map_err(|e| e.to_string())
}

fn row(instance: &str, pass: bool, detail: String) -> Row {
    Row {
        instance: instance.to_owned(),
        detail,
        pass,
    }
}

fn compute_cactus_k(g: &Graph) -> Result<usize, String> {
    let out =
        compute(&g.to_edge_list(), Method::Cactus, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    match (out.exit_code, out.record.k) {
        (exit::OK, Some(k)) if out.record.valid => Ok(k),
        _ => Err(out.text),
    }
}

fn cycle_row(inst: &Instance, expected: usize, exact_up_to: usize) -> Row {
    let k = match compute_cactus_k(&inst.graph) {
        Ok(k) => k,
        Err(e) => return row(&inst.name, false, e),
    };
    if inst.graph.n() > exact_up_to {
        return row(
            &inst.name,
            k == expected,
            format!("cactus k={k} expected {expected}"),
        );
    }
    match exact_k(&inst.graph) {
        Ok(x) => row(
            &inst.name,
            k == expected && k == x,
            format!("cactus k={k} exact k={x} expected {expected}"),
        ),
        Err(e) => row(&inst.name, false, e),
    }
}

/// Pairs `(e, f)` lying together on some shortest path, by enumerating all
/// shortest paths.
fn conflicts_by_enumeration(g: &Graph) -> Result<Vec<Vec<bool>>, String> {
    let mut together = vec![vec![false; g.m()]; g.m()];
    for s in 0..g.n() {
        for t in s + 1..g.n() {
            for p in enumerate_shortest_paths(g, s, t, 1_000_000).map_err(|e| e.to_string())? {
                let es: Vec<usize> = p
                    .windows(2)
                    .map(|w| g.edge_id(w[0], w[1]).expect("path edge"))
                    .collect();
                for &e in &es {
                    for &f in &es {
                        together[e][f] |= e != f;
                    }
                }
            }
        }
    }
    Ok(together)
}

fn conflict_row(inst: &Instance) -> Row {
    let g = &inst.graph;
    let oracle = match conflicts_by_enumeration(g) {
        Ok(o) => o,
        Err(e) => return row(&inst.name, false, e),
    };
    let d = all_pairs_distances(g);
    let mut pairs = 0;
    for e in 0..g.m() {
        for f in e + 1..g.m() {
            pairs += 1;
            if edges_conflict(g, &d, e, f) != oracle[e][f] || oracle[e][f] != oracle[f][e] {
                return row(&inst.name, false, format!("edges {e} and {f} disagree"));
            }
        }
    }
    row(&inst.name, true, format!("{pairs} edge pairs agree"))
}

fn two_vsrc_row(inst: &Instance) -> Row {
    match exact_k(&inst.graph) {
        Ok(k) => {
            let decided = decide_vsrc2(&inst.graph);
            row(
                &inst.name,
                decided == (k <= 2),
                format!("decide_vsrc2={decided} exact k={k}"),
            )
        }
        Err(e) => row(&inst.name, false, e),
    }
}

fn cactus_row(inst: &Instance) -> Row {
    let g = &inst.graph;
    let sol = match color_cactus(g) {
        Ok(s) => s,
        Err(e) => return row(&inst.name, false, e.to_string()),
    };
    let exact = match vsrc_exact(g, DEFAULT_BUDGET) {
        Ok(s) => s,
        Err(e) => return row(&inst.name, false, e.to_string()),
    };
    let both_valid = [&sol.coloring, &exact.coloring]
        .iter()
        .all(|c| verify_coloring(g, c).is_ok_and(|r| r.valid));
    row(
        &inst.name,
        sol.k == exact.k && both_valid,
        format!(
            "cactus k={} exact k={} verified={both_valid}",
            sol.k, exact.k
        ),
    )
}

fn clique_partition_row(inst: &Instance, r: usize) -> Row {
    let g = &inst.graph;
    let result = clique_partition_exact(g, DEFAULT_BUDGET)
        .map_err(|e| e.to_string())
        .and_then(|p| coloring_from_clique_partition(g, &p).map_err(|e| e.to_string()));
    match result {
        Ok(c) => {
            let valid = verify_coloring(g, &c).is_ok_and(|v| v.valid);
            let cap = r * (r + 1) / 2;
            row(
                &inst.name,
                valid && c.k() <= cap,
                format!("r={r} colors={} cap={cap} verified={valid}", c.k()),
            )
        }
        Err(e) => row(&inst.name, false, e),
    }
}

fn chordal_row(inst: &Instance) -> Row {
    let g = &inst.graph;
    let c = match chordal_coloring(g) {
        Ok(c) => c,
        Err(e) => return row(&inst.name, false, e.to_string()),
    };
    let omega = max_clique(g, u64::MAX).clique.len();
    let chi = match chromatic_number(g, DEFAULT_BUDGET) {
        Ok(r) => r.chi,
        Err(e) => return row(&inst.name, false, e.to_string()),
    };
    let n = g.n();
    let k = c.coloring.k();
    let valid = verify_coloring(g, &c.coloring).is_ok_and(|v| v.valid);
    let pass = valid && chi == omega && k + omega <= n + 1 && k + chi <= n + 1;
    row(
        &inst.name,
        pass,
        format!("n={n} omega={omega} chi={chi} colors={k} verified={valid}"),
    )
}

fn reduction_row(name: &str, g: &SimpleGraph) -> Row {
    let three_colorable = match chromatic_number(g, DEFAULT_BUDGET) {
        Ok(r) => r.chi <= 3,
        Err(e) => return row(name, false, e.to_string()),
    };
    let planted = name.starts_with("planted-3col");
    let h = reduce_3col(g);
    match exact_k(&h) {
        Ok(k) => row(
            name,
            (k <= 3) == three_colorable && planted == three_colorable,
            format!("3-colorable={three_colorable} vsrc(reduced)={k}"),
        ),
        Err(e) => row(name, false, e),
    }
}

fn groupable_row(inst: &Instance) -> Row {
    let k = match exact_k(&inst.graph) {
        Ok(k) => k,
        Err(e) => return row(&inst.name, false, e),
    };
    match k_perfectly_groupable(&inst.graph, k, DEFAULT_BUDGET) {
        Ok(r) => row(
            &inst.name,
            r.groupable,
            format!("k={k} groupable={}", r.groupable),
        ),
        Err(e) => row(&inst.name, false, e.to_string()),
    }
}

fn sandwich_row(inst: &Instance) -> Row {
    let g = &inst.graph;
    let k = match exact_k(g) {
        Ok(k) => k,
        Err(e) => return row(&inst.name, false, e),
    };
    let r = vsrc_bounds(g);
    let floor = (all_pairs_distances(g).diameter() as usize)
        .max(blocks(g).iter().filter(|b| b.is_bridge()).count());
    let colorings_valid = r
        .upper_bounds
        .iter()
        .all(|b| verify_coloring(g, &b.coloring).is_ok_and(|v| v.valid));
    row(
        &inst.name,
        r.lower <= k && k <= r.upper && r.lower >= floor && colorings_valid,
        format!(
            "{} <= {k} <= {} (diameter/bridges {floor})",
            r.lower, r.upper
        ),
    )
}

/// Every instance used by the other suites, with the reduction pool mapped
/// through the reduction.
pub fn all_instances(cfg: SuiteConfig) -> Vec<Instance> {
    let count = |s| cfg.count.unwrap_or(default_count(s));
    let mut out = path_family();
    out.extend(even_cycle_family());
    out.extend(odd_cycle_family());
    out.extend(cactus_pool(cfg.seed, count(Suite::CactusVsExact)));
    out.extend(small_pool(cfg.seed, count(Suite::ConflictOracle)));
    out.extend(
        clique_partition_pool(cfg.seed, count(Suite::CliquePartition))
            .into_iter()
            .map(|(i, _)| i),
    );
    out.extend(chordal_pool(cfg.seed, count(Suite::Chordal)));
    out.extend(
        reduction_pool(cfg.seed, count(Suite::Reduction))
            .into_iter()
            .map(|(name, g)| instance(format!("reduced {name}"), reduce_3col(&g))),
    );
    out
}

pub fn run_suite(suite: Suite, cfg: SuiteConfig) -> SuiteReport {
    let count = cfg.count.unwrap_or(default_count(suite));
    let rows: Vec<Row> = match suite {
        Suite::Paths => path_family()
            .par_iter()
            .map(|i| match compute_cactus_k(&i.graph) {
                Ok(k) => row(&i.name, k + 1 == i.graph.n(), format!("cactus k={k}")),
                Err(e) => row(&i.name, false, e),
            })
            .collect(),
        Suite::EvenCycles => even_cycle_family()
            .par_iter()
            .map(|i| cycle_row(i, i.graph.n() / 2, 12))
            .collect(),
        Suite::OddCycles => odd_cycle_family()
            .par_iter()
            .map(|i| {
                // no two edges of a triangle conflict, so C3 needs one color
                let expected = if i.graph.n() == 3 {
                    1
                } else {
                    i.graph.n() / 2 + 1
                };
                cycle_row(i, expected, 11)
            })
            .collect(),
        Suite::CactusVsExact => cactus_pool(cfg.seed, count)
            .par_iter()
            .map(cactus_row)
            .collect(),
        Suite::ConflictOracle => small_pool(cfg.seed, count)
            .par_iter()
            .map(conflict_row)
            .collect(),
        Suite::TwoVsrc => small_pool(cfg.seed, count)
            .par_iter()
            .map(two_vsrc_row)
            .collect(),
        Suite::CliquePartition => clique_partition_pool(cfg.seed, count)
            .par_iter()
            .map(|(i, r)| clique_partition_row(i, *r))
            .collect(),
        Suite::Chordal => chordal_pool(cfg.seed, count)
            .par_iter()
            .map(chordal_row)
            .collect(),
        Suite::Reduction => reduction_pool(cfg.seed, count)
            .par_iter()
            .map(|(name, g)| reduction_row(name, g))
            .collect(),
        Suite::Groupable => small_pool(cfg.seed, count)
            .par_iter()
            .map(groupable_row)
            .collect(),
        Suite::Sandwich => all_instances(cfg).par_iter().map(sandwich_row).collect(),
    };
    SuiteReport { suite, rows }
}

/// Runs a suite and renders its table; exit 0 iff every row passes.
pub fn experiment(suite: Suite, cfg: SuiteConfig) -> Outcome {
    let report = run_suite(suite, cfg);
    let failed = report.failures().count();
    let width = report
        .rows
        .iter()
        .map(|r| r.instance.len())
        .max()
        .unwrap_or(0);
    let mut text = String::new();
    for r in &report.rows {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        text.push_str(&format!(
            "{verdict}  {:<width$}  {}\n",
            r.instance, r.detail
        ));
    }
    text.push_str(&format!(
        "{}: {} rows, {} passed, {failed} failed\n",
        suite.name(),
        report.rows.len(),
        report.rows.len() - failed
    ));
    let params = json!({ "suite": suite, "seed": cfg.seed, "count": cfg.count });
    Outcome {
        record: RunRecord {
            command: "experiment",
            input_digest: digest(params.to_string().as_bytes()),
            method: Some(suite.name().into()),
            k: None,
            runtime_ms: None,
            valid: failed == 0,
            certificates: json!({ "rows": report.rows, "failed": failed }),
        },
        text,
        exit_code: if failed == 0 {
            exit::OK
        } else {
            exit::SEMANTIC
        },
    }
}
