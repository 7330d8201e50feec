//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! ```text
//! cargo test --release --test acceptance          # all criteria
//! cargo test --release --test acceptance -- 3 6   # a subset
//! ```

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use blt::altspace::{
    degree_vector, delta_space, field_ext_full_space, is_orth_decomposable_naive, kappa_space, lambda_space,
    lambda_space_naive, lambda_space_oracle, random_isometry, random_space, AltMatrixSpace,
};
use blt::bilinear::{kappa_map, lambda_map, AltBilinearMap};
use blt::cli::counterexample_report;
use blt::gf::{all_subspaces, Field, Matrix};
use blt::graph::{
    all_labeled_graphs, edge_connectivity, edge_connectivity_brute, min_degree, vertex_connectivity,
    vertex_connectivity_brute, Graph,
};
use blt::group::{
    center, deg_element, deg_element_scan, delta_group, kappa_group, lambda_group, literal_kappa_lambda, sanity_check,
    BaerGroup,
};
use blt::Limits;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: &[String], checked: usize, what: &str) -> Outcome {
    let mut detail = format!("{checked} {what}, {} failures", failures.len());
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first: {first}"));
    }
    Outcome {
        ok: failures.is_empty() && checked > 0,
        detail,
    }
}

fn f(q: u32) -> Field {
    Field::new(q).unwrap()
}

fn graphs(lo: usize, hi: usize) -> impl Iterator<Item = Graph> {
    (lo..=hi).flat_map(all_labeled_graphs)
}

/// κ of a space from the definition, with pairwise decomposability.
fn kappa_oracle(space: &AltMatrixSpace) -> usize {
    let n = space.n();
    let subs = all_subspaces(space.field(), n);
    for c in 0..n - 1 {
        let hit = subs
            .iter()
            .filter(|w| w.dim() == n - c)
            .any(|w| is_orth_decomposable_naive(&space.restrict(w).unwrap()));
        if hit {
            return c;
        }
    }
    n - 1
}

/// κ of a map from restrictions `φ|_W`, independent of the space solver.
fn kappa_map_oracle(phi: &AltBilinearMap) -> usize {
    let n = phi.n();
    let subs = all_subspaces(phi.field(), n);
    for c in 0..n - 1 {
        let hit = subs
            .iter()
            .filter(|w| w.dim() == n - c)
            .any(|w| is_orth_decomposable_naive(&phi.restrict(w).unwrap().space()));
        if hit {
            return c;
        }
    }
    n - 1
}

fn c1_graph_space() -> Outcome {
    let q = f(3);
    let l = Limits::default();
    let mut fails = Vec::new();
    let mut count = 0;
    for g in graphs(2, 5) {
        count += 1;
        let (kg, lg) = (vertex_connectivity(&g).kappa, edge_connectivity(&g).lambda);
        if g.n() <= 4 && (kg != vertex_connectivity_brute(&g).kappa || lg != edge_connectivity_brute(&g).lambda) {
            fails.push(format!("{g:?}: flow and brute force disagree"));
        }
        let s = AltMatrixSpace::from_graph(&g, q);
        let ka = kappa_space(&s, &l).unwrap().kappa;
        let la = lambda_space(&s, &l).unwrap().lambda;
        if (ka, la) != (kg, lg) {
            fails.push(format!("{g:?}: graph ({kg}, {lg}) space ({ka}, {la})"));
        }
        if g.n() <= 4 && ka != kappa_oracle(&s) {
            fails.push(format!("{g:?}: kappa solver {ka}, definition {}", kappa_oracle(&s)));
        }
    }
    outcome(&fails, count, "graphs on 2..5 vertices")
}

fn random_spaces(count: usize, seed: u64) -> Vec<AltMatrixSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let q = if rng.gen_bool(0.5) { 3 } else { 5 };
            let n = rng.gen_range(2..=4);
            let m = rng.gen_range(1..=(n * (n - 1) / 2).min(4));
            random_space(f(q), n, m, &mut rng).unwrap()
        })
        .collect()
}

fn c2_space_map() -> Outcome {
    let l = Limits::default();
    let mut spaces: Vec<AltMatrixSpace> = graphs(2, 4).map(|g| AltMatrixSpace::from_graph(&g, f(3))).collect();
    spaces.extend(random_spaces(50, 2));
    let mut fails = Vec::new();
    for s in &spaces {
        let phi = AltBilinearMap::from_space(s, None).unwrap();
        let ka = kappa_space(s, &l).unwrap().kappa;
        let la = lambda_space(s, &l).unwrap().lambda;
        let kp = kappa_map(&phi, &l).unwrap().0;
        let lp = lambda_map(&phi, &l).unwrap().0;
        let kp_oracle = kappa_map_oracle(&phi);
        if ka != kp || la != lp || kp != kp_oracle {
            fails.push(format!(
                "{s:?}: space ({ka}, {la}) map ({kp}, {lp}) map oracle kappa {kp_oracle}"
            ));
        }
    }
    outcome(&fails, spaces.len(), "spaces")
}

fn c3_map_group() -> Outcome {
    let l = Limits::default();
    let mut fails = Vec::new();
    let mut count = 0;
    for g in graphs(2, 3) {
        count += 1;
        let p = BaerGroup::from_graph(&g, 3).unwrap();
        let (kg, lg) = (vertex_connectivity(&g).kappa, edge_connectivity(&g).lambda);
        let kp = kappa_group(&p, &l).unwrap().0;
        let lp = lambda_group(&p, &l).unwrap().0;
        if (kp, lp) != (kg, lg) {
            fails.push(format!("{g:?}: graph ({kg}, {lg}) group ({kp}, {lp})"));
        }
        if p.order_exp() <= 4 {
            let lat = literal_kappa_lambda(&p, &l).unwrap();
            if (lat.kappa, lat.lambda, lat.lambda_derived) != (kg, lg, lg) {
                fails.push(format!("{g:?}: subgroup lattice gives {lat:?}"));
            }
        }
    }
    outcome(&fails, count, "graphs on 2..3 vertices at p = 3")
}

fn c4_lambda_dual() -> Outcome {
    let l = Limits::default();
    let q = f(3);
    let mut spaces: Vec<AltMatrixSpace> = Vec::new();
    // Every subspace of Λ(3) over F_3.
    for c in all_subspaces(q, 3) {
        let mats: Vec<Matrix> = c
            .basis()
            .iter()
            .map(|u| Matrix::alternating_from_upper(q, 3, u))
            .collect();
        spaces.push(AltMatrixSpace::span(q, 3, &mats).unwrap());
    }
    spaces.extend(
        graphs(2, 4)
            .filter(|g| g.m() <= 4)
            .map(|g| AltMatrixSpace::from_graph(&g, q)),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..40 {
        let m = rng.gen_range(1..=4);
        spaces.push(random_space(q, 4, m, &mut rng).unwrap());
    }
    let mut fails = Vec::new();
    for s in &spaces {
        let a = lambda_space(s, &l).unwrap().lambda;
        let b = lambda_space_oracle(s, &l).unwrap();
        let naive = (s.n() <= 3).then(|| lambda_space_naive(s));
        if a != b || naive.is_some_and(|c| c != a) {
            fails.push(format!("{s:?}: cut search {a}, subspace oracle {b}, naive {naive:?}"));
        }
    }
    outcome(&fails, spaces.len(), "instances")
}

fn c5_degree_bounds() -> Outcome {
    let l = Limits::default();
    let mut fails = Vec::new();
    let mut count = 0;
    let mut spaces: Vec<AltMatrixSpace> = graphs(2, 5).map(|g| AltMatrixSpace::from_graph(&g, f(3))).collect();
    spaces.extend(random_spaces(50, 2));
    for s in &spaces {
        count += 1;
        let d = delta_space(s);
        let k = kappa_space(s, &l).unwrap().kappa;
        let la = lambda_space(s, &l).unwrap().lambda;
        if k > d || la > d {
            fails.push(format!("{s:?}: kappa {k} lambda {la} delta {d}"));
        }
        if s.n() <= 4 {
            let field = s.field();
            let total = (field.q() as u64).pow(s.n() as u32);
            for idx in 1..total {
                let v = field_vector(field, s.n(), idx);
                if degree_vector(s, &v).unwrap() > s.n() - 1 {
                    fails.push(format!("{s:?}: deg({v:?}) > n - 1"));
                }
            }
        }
    }
    for g in graphs(2, 3) {
        count += 1;
        let p = BaerGroup::from_graph(&g, 3).unwrap();
        let d = delta_group(&p);
        let (k, la) = (kappa_group(&p, &l).unwrap().0, lambda_group(&p, &l).unwrap().0);
        if k > d || la > d || d != min_degree(&g) {
            fails.push(format!("{g:?}: group kappa {k} lambda {la} delta {d}"));
        }
        let z = center(&p);
        for h in p.elements(&l).unwrap() {
            let scan = deg_element_scan(&p, &h, &l).unwrap();
            if scan != deg_element(&p, &h) || scan > p.n() - 1 || (scan == 0) != z.contains(&h) {
                fails.push(format!("{g:?}: deg({h}) = {scan}"));
            }
        }
    }
    outcome(&fails, count, "spaces and groups")
}

fn field_vector(field: Field, n: usize, mut idx: u64) -> Vec<u8> {
    let q = field.q() as u64;
    (0..n)
        .map(|_| {
            let d = (idx % q) as u8;
            idx /= q;
            d
        })
        .collect()
}

fn c6_separation() -> Outcome {
    let r = counterexample_report(2, 2, 3, 3, &Limits::default()).unwrap();
    let ok = r.n == 4 && r.fully_connected && r.kappa == 3 && r.lambda <= 2 && r.group.lambda < r.group.kappa;
    Outcome {
        ok,
        detail: format!(
            "n = {}, fully connected {}, kappa = {}, lambda = {}; group kappa = {}, lambda = {}",
            r.n, r.fully_connected, r.kappa, r.lambda, r.group.kappa, r.group.lambda
        ),
    }
}

fn c7_fully_connected() -> Outcome {
    let mut fails = Vec::new();
    for (s, q) in [(2, 3), (3, 3), (2, 5)] {
        let field = f(q);
        let ext = field_ext_full_space(s, field).unwrap();
        let total = (q as u64).pow(s as u32);
        for idx in 1..total {
            let c = field_vector(field, s, idx);
            if Matrix::combination(field, s, s, &c, &ext.regular).rank() != s {
                fails.push(format!("(s, q) = ({s}, {q}): member {c:?} is singular"));
            }
        }
        // Every pair of nonzero vectors is seen by some B_i.
        let seen_all = (1..total).all(|a| {
            let u = field_vector(field, s, a);
            (1..total).all(|b| {
                let v = field_vector(field, s, b);
                ext.space.basis().iter().any(|m| m.bilinear(&u, &v) != 0)
            })
        });
        if !seen_all || !ext.space.is_fully_connected() {
            fails.push(format!("(s, q) = ({s}, {q}): B not fully connected"));
        }
    }
    outcome(&fails, 3, "(s, q) pairs")
}

fn c8_group_sanity() -> Outcome {
    let l = Limits::default();
    let mut fails = Vec::new();
    let mut groups: Vec<BaerGroup> = graphs(2, 4)
        .filter(|g| g.n() + g.m() <= 5)
        .map(|g| BaerGroup::from_graph(&g, 3).unwrap())
        .collect();
    groups.push(BaerGroup::from_graph(&Graph::complete(2), 5).unwrap());
    groups.push(BaerGroup::from_graph(&Graph::path(3), 5).unwrap());
    for (i, g) in groups.iter().enumerate() {
        let r = sanity_check(g, &l, 81, 100_000, i as u64).unwrap();
        let exhaustive_expected = g.order().unwrap() <= 81;
        if !r.holds(g) || r.associative_exhaustive.is_some() != exhaustive_expected {
            fails.push(format!("{:?}: {r:?}", g.phi().space()));
        }
    }
    outcome(&fails, groups.len(), "groups")
}

fn c9_isometry() -> Outcome {
    let l = Limits::default();
    let mut spaces: Vec<AltMatrixSpace> = all_labeled_graphs(4)
        .map(|g| AltMatrixSpace::from_graph(&g, f(3)))
        .collect();
    spaces.push(blt::altspace::kappa_gt_lambda_instance(2, 2, f(3)).unwrap());
    spaces.extend(random_spaces(10, 9));
    let mut fails = Vec::new();
    for (i, s) in spaces.iter().enumerate() {
        let base = (
            kappa_space(s, &l).unwrap().kappa,
            lambda_space(s, &l).unwrap().lambda,
            delta_space(s),
        );
        for k in 0..20 {
            let (img, _) = random_isometry(s, (i * 100 + k) as u64);
            let got = (
                kappa_space(&img, &l).unwrap().kappa,
                lambda_space(&img, &l).unwrap().lambda,
                delta_space(&img),
            );
            if got != base {
                fails.push(format!("{s:?} seed {k}: {base:?} became {got:?}"));
            }
        }
    }
    outcome(&fails, spaces.len() * 20, "isometric images")
}

fn c10_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str| {
        let out = dir.path().join(format!("t{threads}.csv"));
        let status = Command::new(env!("CARGO_BIN_EXE_blt"))
            .args([
                "verify",
                "--max-n",
                "4",
                "--seed",
                "17",
                "--random",
                "6",
                "--threads",
                threads,
                "--out",
            ])
            .arg(&out)
            .output()
            .unwrap();
        let csv = std::fs::read(&out).unwrap();
        let json = std::fs::read(out.with_extension("json")).unwrap();
        (status.status.code(), csv, json)
    };
    let (c1, csv1, json1) = run("1");
    let (c8, csv8, json8) = run("8");
    let ok = c1 == Some(0) && c8 == Some(0) && csv1 == csv8 && json1 == json8;
    Outcome {
        ok,
        detail: format!(
            "exit codes {c1:?}/{c8:?}, CSV {} bytes identical {}, JSON {} bytes identical {}",
            csv1.len(),
            csv1 == csv8,
            json1.len(),
            json1 == json8
        ),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("graph = space (kappa, lambda), n <= 5", c1_graph_space),
        ("space = map", c2_space_map),
        ("map = group, literal group path", c3_map_group),
        ("lambda by cuts = lambda by subspaces", c4_lambda_dual),
        ("degree bounds", c5_degree_bounds),
        ("kappa > lambda construction", c6_separation),
        ("fully connected constructor", c7_fully_connected),
        ("group sanity", c8_group_sanity),
        ("isometry invariance", c9_isometry),
        ("determinism across thread counts", c10_determinism),
    ];
    let selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let number = i + 1;
        if !selected.is_empty() && !selected.contains(&number) {
            continue;
        }
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| Outcome {
            ok: false,
            detail: format!(
                "panicked: {}",
                e.downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default()
            ),
        });
        if !result.ok {
            failed += 1;
        }
        println!(
            "criterion {number:2} {}: {name} ({}; {:.1}s)",
            if result.ok { "PASS" } else { "FAIL" },
            result.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
