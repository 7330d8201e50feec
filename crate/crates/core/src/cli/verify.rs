//! The sweep over all labeled graphs comparing κ and λ at the graph, space,
//! map and group levels.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{Format, EXIT_FAIL, EXIT_OK};
use crate::altspace::{
    delta_space, full_block_space, is_fully_connected, kappa_gt_lambda_instance, kappa_space, lambda_space,
    random_space, AltMatrixSpace,
};
use crate::bilinear::{kappa_map, lambda_map, AltBilinearMap};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::graph::{all_pairs, edge_connectivity, min_degree, vertex_connectivity, Graph};
use crate::group::{kappa_group, kappa_group_fast, lambda_group, lambda_group_fast, BaerGroup};
use crate::limits::Limits;

/// Hard cap on the swept vertex count, not lifted by `--force`.
pub const MAX_SWEEP_N: usize = 6;
const CHUNK: usize = 128;

/// Which levels are compared against the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Graph,
    Space,
    Map,
    Group,
    All,
}

impl Level {
    fn space(self) -> bool {
        matches!(self, Level::Space | Level::All)
    }
    fn map(self) -> bool {
        matches!(self, Level::Map | Level::All)
    }
    fn group(self) -> bool {
        matches!(self, Level::Group | Level::All)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub q: u32,
    pub p: u32,
    pub level: Level,
    pub limits: Limits,
    pub seed: u64,
    /// Seeded random spaces appended after the graphs.
    pub random: usize,
}

impl VerifyConfig {
    pub fn new(max_n: usize, q: u32, p: u32) -> VerifyConfig {
        VerifyConfig {
            max_n,
            q,
            p,
            level: Level::All,
            limits: Limits::default(),
            seed: 0,
            random: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(2..=MAX_SWEEP_N).contains(&self.max_n) {
            return Err(Error::InvalidArgument(format!(
                "--max-n must be between 2 and {MAX_SWEEP_N}, got {}",
                self.max_n
            )));
        }
        Field::new(self.q)?;
        Field::new(self.p)?;
        Ok(())
    }
}

/// One instance. Blank cells were out of the guards or not requested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub q: u32,
    pub p: u32,
    #[serde(rename = "kappa_G")]
    pub kappa_g: Option<usize>,
    #[serde(rename = "lambda_G")]
    pub lambda_g: Option<usize>,
    #[serde(rename = "delta_G")]
    pub delta_g: Option<usize>,
    #[serde(rename = "kappa_A")]
    pub kappa_a: Option<usize>,
    #[serde(rename = "lambda_A")]
    pub lambda_a: Option<usize>,
    #[serde(rename = "delta_A")]
    pub delta_a: Option<usize>,
    pub kappa_phi: Option<usize>,
    pub lambda_phi: Option<usize>,
    #[serde(rename = "kappa_P")]
    pub kappa_p: Option<usize>,
    #[serde(rename = "lambda_P")]
    pub lambda_p: Option<usize>,
    pub status: String,
}

impl VerifyRow {
    pub fn passed(&self) -> bool {
        self.status == "PASS"
    }

    fn kappas(&self) -> [Option<usize>; 4] {
        [self.kappa_g, self.kappa_a, self.kappa_phi, self.kappa_p]
    }

    fn lambdas(&self) -> [Option<usize>; 4] {
        [self.lambda_g, self.lambda_a, self.lambda_phi, self.lambda_p]
    }
}

fn all_equal(cells: &[Option<usize>]) -> bool {
    let mut vals = cells.iter().flatten();
    match vals.next() {
        Some(first) => vals.all(|v| v == first),
        None => true,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub rows: usize,
    pub pass: usize,
    pub fail: usize,
    /// Non-blank cells per column, in column order.
    pub computed: serde_json::Map<String, serde_json::Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub max_n: usize,
    pub q: u32,
    pub p: u32,
    pub level: Level,
    pub seed: u64,
    pub random: usize,
    pub forced: bool,
}

/// Everything written to the report files. Wall-clock times are kept out
/// so that reports are reproducible byte for byte.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub config: ConfigEcho,
    pub summary: VerifySummary,
    pub rows: Vec<VerifyRow>,
    #[serde(skip)]
    pub stage_times: [Duration; 4],
}

#[derive(Clone, Copy, Debug)]
enum Job {
    Graph(usize, u64),
    Random(usize),
}

/// Outcome of one solver call: a value, a guard blank, or a genuine error.
fn cell(r: Result<usize>, broken: &mut bool) -> Option<usize> {
    match r {
        Ok(v) => Some(v),
        Err(Error::GuardExceeded(_)) => None,
        Err(_) => {
            *broken = true;
            None
        }
    }
}

fn timed<T>(slot: &mut Duration, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    *slot += start.elapsed();
    out
}

fn fill_algebraic(
    row: &mut VerifyRow,
    space: &AltMatrixSpace,
    cfg: &VerifyConfig,
    times: &mut [Duration; 4],
    broken: &mut bool,
) {
    let l = &cfg.limits;
    if cfg.level.space() {
        timed(&mut times[1], || {
            row.kappa_a = cell(kappa_space(space, l).map(|r| r.kappa), broken);
            row.lambda_a = cell(lambda_space(space, l).map(|r| r.lambda), broken);
            row.delta_a = cell(l.check_n("delta", space.n()).map(|_| delta_space(space)), broken);
        });
    }
    if space.is_zero() {
        return;
    }
    let phi = AltBilinearMap::from_space(space, None).expect("nonzero space");
    if cfg.level.map() {
        timed(&mut times[2], || {
            row.kappa_phi = cell(kappa_map(&phi, l).map(|r| r.0), broken);
            row.lambda_phi = cell(lambda_map(&phi, l).map(|r| r.0), broken);
        });
    }
}

fn fill_group(
    row: &mut VerifyRow,
    group: Result<BaerGroup>,
    cfg: &VerifyConfig,
    times: &mut [Duration; 4],
    broken: &mut bool,
) {
    if !cfg.level.group() {
        return;
    }
    timed(&mut times[3], || match group {
        Ok(g) => {
            if cfg.limits.check_group("group", g.p(), g.order_exp()).is_ok() {
                row.kappa_p = cell(kappa_group(&g, &cfg.limits).map(|r| r.0), broken);
                row.lambda_p = cell(lambda_group(&g, &cfg.limits).map(|r| r.0), broken);
            }
        }
        Err(_) => *broken = true,
    });
}

fn finish(mut row: VerifyRow, broken: bool) -> VerifyRow {
    let ok = !broken && all_equal(&row.kappas()) && all_equal(&row.lambdas());
    row.status = if ok { "PASS" } else { "FAIL" }.into();
    row
}

fn empty_row(id: String, n: usize, m: usize, cfg: &VerifyConfig) -> VerifyRow {
    VerifyRow {
        graph_id: id,
        n,
        m,
        q: cfg.q,
        p: cfg.p,
        kappa_g: None,
        lambda_g: None,
        delta_g: None,
        kappa_a: None,
        lambda_a: None,
        delta_a: None,
        kappa_phi: None,
        lambda_phi: None,
        kappa_p: None,
        lambda_p: None,
        status: String::new(),
    }
}

/// One row for `g` with id `n{n}e{mask}`.
pub fn verify_graph(g: &Graph, cfg: &VerifyConfig) -> VerifyRow {
    verify_graph_timed(g, cfg, &mut [Duration::ZERO; 4])
}

fn verify_graph_timed(g: &Graph, cfg: &VerifyConfig, times: &mut [Duration; 4]) -> VerifyRow {
    let mut row = empty_row(format!("n{}e{}", g.n(), g.mask()), g.n(), g.m(), cfg);
    let mut broken = false;
    timed(&mut times[0], || {
        row.kappa_g = Some(vertex_connectivity(g).kappa);
        row.lambda_g = Some(edge_connectivity(g).lambda);
        row.delta_g = Some(min_degree(g));
    });
    let q = Field::new(cfg.q).expect("validated");
    fill_algebraic(&mut row, &AltMatrixSpace::from_graph(g, q), cfg, times, &mut broken);
    fill_group(&mut row, BaerGroup::from_graph(g, cfg.p), cfg, times, &mut broken);
    finish(row, broken)
}

fn random_instance(cfg: &VerifyConfig, i: usize) -> AltMatrixSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(i as u64 + 1);
    let field = Field::new(cfg.q).expect("validated");
    let n = rng.gen_range(2..=cfg.max_n);
    let m = rng.gen_range(1..=(n * (n - 1) / 2).min(6));
    random_space(field, n, m, &mut rng).expect("m fits")
}

fn verify_random(cfg: &VerifyConfig, i: usize, times: &mut [Duration; 4]) -> VerifyRow {
    let space = random_instance(cfg, i);
    let mut row = empty_row(format!("r{i}"), space.n(), space.dim(), cfg);
    let mut broken = false;
    fill_algebraic(&mut row, &space, cfg, times, &mut broken);
    if cfg.p == cfg.q {
        let group = AltBilinearMap::from_space(&space, None).and_then(|phi| BaerGroup::new(phi, cfg.p));
        fill_group(&mut row, group, cfg, times, &mut broken);
    }
    finish(row, broken)
}

fn jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let mut out = Vec::new();
    for n in 2..=cfg.max_n {
        let pairs = all_pairs(n).len();
        out.extend((1u64..1 << pairs).map(|mask| Job::Graph(n, mask)));
    }
    out.extend((0..cfg.random).map(Job::Random));
    out
}

const COLUMNS: [&str; 10] = [
    "kappa_G",
    "lambda_G",
    "delta_G",
    "kappa_A",
    "lambda_A",
    "delta_A",
    "kappa_phi",
    "lambda_phi",
    "kappa_P",
    "lambda_P",
];

fn summarize(rows: &[VerifyRow]) -> VerifySummary {
    let pass = rows.iter().filter(|r| r.passed()).count();
    let counts = |f: fn(&VerifyRow) -> Option<usize>| rows.iter().filter(|r| f(r).is_some()).count();
    let getters: [fn(&VerifyRow) -> Option<usize>; 10] = [
        |r| r.kappa_g,
        |r| r.lambda_g,
        |r| r.delta_g,
        |r| r.kappa_a,
        |r| r.lambda_a,
        |r| r.delta_a,
        |r| r.kappa_phi,
        |r| r.lambda_phi,
        |r| r.kappa_p,
        |r| r.lambda_p,
    ];
    VerifySummary {
        rows: rows.len(),
        pass,
        fail: rows.len() - pass,
        computed: COLUMNS
            .iter()
            .zip(getters)
            .map(|(c, f)| (c.to_string(), counts(f).into()))
            .collect(),
    }
}

/// Runs the sweep on the current rayon pool. `sink` sees each row in id
/// order as soon as its chunk completes.
pub fn run_verify(cfg: &VerifyConfig, mut sink: impl FnMut(&VerifyRow) -> Result<()>) -> Result<VerifyReport> {
    cfg.validate()?;
    let mut rows = Vec::new();
    let mut stage_times = [Duration::ZERO; 4];
    for chunk in jobs(cfg).chunks(CHUNK) {
        let done: Vec<(VerifyRow, [Duration; 4])> = chunk
            .par_iter()
            .map(|job| {
                let mut t = [Duration::ZERO; 4];
                let row = match *job {
                    Job::Graph(n, mask) => {
                        verify_graph_timed(&Graph::from_mask(n, mask).expect("nonzero mask"), cfg, &mut t)
                    }
                    Job::Random(i) => verify_random(cfg, i, &mut t),
                };
                (row, t)
            })
            .collect();
        for (row, t) in done {
            for (acc, d) in stage_times.iter_mut().zip(t) {
                *acc += d;
            }
            sink(&row)?;
            rows.push(row);
        }
    }
    Ok(VerifyReport {
        config: ConfigEcho {
            max_n: cfg.max_n,
            q: cfg.q,
            p: cfg.p,
            level: cfg.level,
            seed: cfg.seed,
            random: cfg.random,
            forced: cfg.limits != Limits::default(),
        },
        summary: summarize(&rows),
        rows,
        stage_times,
    })
}

fn io_err(path: &Path) -> impl Fn(io::Error) -> Error + '_ {
    move |e| Error::Io(format!("{}: {e}", path.display()))
}

fn json_path(out: &Path) -> PathBuf {
    let j = out.with_extension("json");
    if j == out {
        PathBuf::from(format!("{}.report.json", out.display()))
    } else {
        j
    }
}

/// `verify` as run from the command line: CSV rows stream to `--out` (or
/// stdout for `--format csv`), the JSON report goes next to the CSV, stage
/// times go to stderr.
pub(crate) fn run_verify_cli(cfg: &VerifyConfig, format: Format, out: Option<&Path>) -> Result<i32> {
    cfg.validate()?;
    let csv_target: Option<Box<dyn Write>> = match out {
        Some(path) => Some(Box::new(File::create(path).map_err(io_err(path))?)),
        None if format == Format::Csv => Some(Box::new(io::stdout())),
        None => None,
    };
    let mut csv = csv_target.map(csv::Writer::from_writer);
    let text_stream = out.is_none() && format == Format::Text;
    let report = run_verify(cfg, |row| {
        if let Some(w) = csv.as_mut() {
            w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
            w.flush().map_err(|e| Error::Io(e.to_string()))?;
        }
        if text_stream && !row.passed() {
            println!("FAIL {row:?}");
        }
        Ok(())
    })?;
    let json = serde_json::to_string_pretty(&report)? + "\n";
    match out {
        Some(path) => {
            let jp = json_path(path);
            std::fs::write(&jp, &json).map_err(io_err(&jp))?;
        }
        None if format == Format::Json => print!("{json}"),
        None => {}
    }
    if format == Format::Text || out.is_some() {
        let s = &report.summary;
        println!("rows {} pass {} fail {}", s.rows, s.pass, s.fail);
    }
    let names = ["graph", "space", "map", "group"];
    let times: Vec<String> = names
        .iter()
        .zip(report.stage_times)
        .map(|(n, d)| format!("{n} {:.2}s", d.as_secs_f64()))
        .collect();
    eprintln!("stage times: {}", times.join(", "));
    Ok(if report.summary.fail == 0 { EXIT_OK } else { EXIT_FAIL })
}

/// Group-level values of the κ > λ instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSeparation {
    pub p: u32,
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    pub lambda: usize,
    pub separation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub s: usize,
    pub t: usize,
    pub q: u32,
    pub n: usize,
    /// Dimension of the fully connected block space, an upper bound on λ.
    pub block_dim: usize,
    pub dim: usize,
    pub fully_connected: bool,
    pub kappa: usize,
    pub lambda: usize,
    pub separation: bool,
    pub group: GroupSeparation,
}

/// Builds the κ > λ instance for blocks `s`, `t` over `F_q`, reports κ and
/// the exact λ, and pushes the same construction over `F_p` to a group.
pub fn counterexample_report(s: usize, t: usize, q: u32, p: u32, limits: &Limits) -> Result<CounterexampleReport> {
    let field = Field::new(q)?;
    let space = kappa_gt_lambda_instance(s, t, field)?;
    limits.check_n("counterexample", space.n())?;
    let block_dim = full_block_space(s, t, field)?.dim();
    let kappa = kappa_space(&space, limits)?.kappa;
    let lambda = lambda_space(&space, limits)?.lambda;
    let fully_connected = is_fully_connected(&space);

    let gspace = kappa_gt_lambda_instance(s, t, Field::new(p)?)?;
    let g = BaerGroup::new(AltBilinearMap::from_space(&gspace, None)?, p)?;
    let (gk, gl) = (kappa_group_fast(&g, limits)?, lambda_group_fast(&g, limits)?);
    let group = GroupSeparation {
        p,
        n: g.n(),
        m: g.m(),
        kappa: gk,
        lambda: gl,
        separation: gl < gk,
    };
    let n = space.n();
    Ok(CounterexampleReport {
        s,
        t,
        q,
        n,
        block_dim,
        dim: space.dim(),
        fully_connected,
        kappa,
        lambda,
        separation: fully_connected && kappa == n - 1 && lambda <= block_dim && lambda < kappa && group.separation,
        group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_sweep_passes() {
        let report = run_verify(&VerifyConfig::new(3, 3, 3), |_| Ok(())).unwrap();
        assert_eq!(report.summary.rows, 1 + 7);
        assert_eq!(report.summary.fail, 0);
        assert!(report.rows.iter().all(|r| r.kappa_p.is_some() && r.lambda_p.is_some()));
        assert_eq!(report.rows[0].graph_id, "n2e1");
    }

    #[test]
    fn mismatch_marks_fail() {
        let row = finish(
            VerifyRow {
                kappa_g: Some(1),
                kappa_a: Some(2),
                ..empty_row("x".into(), 2, 1, &VerifyConfig::new(2, 3, 3))
            },
            false,
        );
        assert!(!row.passed());
    }

    #[test]
    fn rejects_large_sweeps() {
        assert!(run_verify(&VerifyConfig::new(7, 3, 3), |_| Ok(())).is_err());
        assert!(run_verify(&VerifyConfig::new(3, 4, 3), |_| Ok(())).is_err());
    }

    #[test]
    fn csv_header() {
        let mut w = csv::Writer::from_writer(Vec::new());
        let row = verify_graph(&Graph::complete(2), &VerifyConfig::new(2, 3, 3));
        w.serialize(&row).unwrap();
        let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            "graph_id,n,m,q,p,kappa_G,lambda_G,delta_G,kappa_A,lambda_A,delta_A,kappa_phi,lambda_phi,kappa_P,lambda_P,status"
        );
        assert_eq!(text.lines().nth(1).unwrap(), "n2e1,2,1,3,3,1,1,1,1,1,1,1,1,1,1,PASS");
    }

    #[test]
    fn counterexample_2_2() {
        let r = counterexample_report(2, 2, 3, 3, &Limits::default()).unwrap();
        assert_eq!((r.n, r.kappa), (4, 3));
        assert!(r.lambda <= 2 && r.fully_connected && r.separation);
        assert!(r.group.lambda < r.group.kappa);
    }
}
