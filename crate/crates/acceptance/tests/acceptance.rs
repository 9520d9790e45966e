//! Acceptance suite. Prints one PASS or FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! `cargo test -p congestion-acceptance --test acceptance`

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::f64::consts::PI;
use std::process::ExitCode;

use common::{random_connected_graph, random_demand, seeded, BruteForce};
use congestion::continuum::{
    continuum_inertia, lambda_ball, mc_transit, mu_density, mu_density_whole_sphere, BallConfig, SpaceSpec,
};
use congestion::experiments::{run_scaling, ExperimentConfig, ScalingFit};
use congestion::generators::{lattice, ring_growth, LatticeSpec, RingGrowthSpec};
use congestion::geometry::{congestion_inertia_report, graph_inertia, vertex_curvature};
use congestion::graph::{compute_geodesics, star, subgraph_load, vertex_traffic, Demand, WeightedGraph};
use rand::Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

type Criterion = fn() -> Outcome;

/// Oracle equivalence on 200 random connected graphs.
fn c1_oracle() -> Outcome {
    let mut rng = seeded(1);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let n = rng.random_range(2..=10);
        let extra = rng.random_range(0..=n + 2);
        let g = random_connected_graph(&mut rng, n, extra, 0.1, 2.0);
        let dem = random_demand(&mut rng, n);
        let bf = BruteForce::new(&g);
        let gd = compute_geodesics(&g).unwrap();
        let got = vertex_traffic(&gd, &dem).unwrap();
        let rel = |a: f64, b: f64| (a - b).abs() / 1f64.max(a.abs()).max(b.abs());
        for (a, b) in got.edge_rate.iter().zip(bf.edge_rates(&g, &dem)) {
            worst = worst.max(rel(*a, b));
        }
        let uniform = vertex_traffic(&gd, &Demand::Uniform).unwrap();
        for (a, b) in uniform.betweenness.iter().zip(bf.betweenness(&Demand::Uniform)) {
            worst = worst.max(rel(*a, b));
        }
        for (a, b) in got.betweenness.iter().zip(bf.betweenness(&dem)) {
            worst = worst.max(rel(*a, b));
        }
        // Lambda_t over a random half of the edges.
        let x: Vec<(usize, usize)> =
            g.edges().iter().filter(|_| rng.random_bool(0.5)).map(|e| (e.u, e.v)).collect();
        worst = worst.max(rel(subgraph_load(&gd, &dem, &x).unwrap(), bf.load(&g, &dem, &x)));
    }
    outcome(worst <= 1e-9, format!("200 graphs, max relative deviation {worst:.2e} (tol 1e-9)"))
}

fn test_graphs() -> Vec<WeightedGraph> {
    let mut rng = seeded(2);
    let mut out: Vec<WeightedGraph> = (0..100)
        .map(|_| {
            let n = rng.random_range(2..=25);
            random_connected_graph(&mut rng, n, n, 0.1, 2.0)
        })
        .collect();
    for valence in [5, 6, 7, 8] {
        out.push(ring_growth(RingGrowthSpec { valence, layers: 3 }).unwrap().graph);
    }
    out.push(lattice(LatticeSpec { dim: 2, side: 10 }).unwrap());
    out.push(lattice(LatticeSpec { dim: 3, side: 4 }).unwrap());
    out
}

/// Vertex identity, star inequality and conservation of total load.
fn c2_identities() -> Outcome {
    let mut rng = seeded(3);
    let graphs = test_graphs();
    let (mut identity, mut star_excess, mut conservation): (f64, f64, f64) = (0.0, f64::NEG_INFINITY, 0.0);
    for g in &graphs {
        let n = g.vertex_count();
        let gd = compute_geodesics(g).unwrap();
        let uniform = vertex_traffic(&gd, &Demand::Uniform).unwrap();
        for v in 0..n {
            let expected = 2.0 * uniform.betweenness[v] - 2.0 * (n as f64 - 1.0);
            identity = identity.max((uniform.vertex_rate[v] - expected).abs() / expected.abs().max(1.0));
        }
        for dem in [Demand::Uniform, random_demand(&mut rng, n)] {
            let r = vertex_traffic(&gd, &dem).unwrap();
            for v in 0..n {
                let s = star(g, v).unwrap();
                let bound = s.length * r.vertex_rate[v];
                let load = subgraph_load(&gd, &dem, &s.endpoints(g)).unwrap();
                star_excess = star_excess.max((load - bound) / bound.max(1.0));
            }
            let carried: f64 = g.edges().iter().zip(&r.edge_rate).map(|(e, t)| e.weight * t).sum();
            let demanded: f64 =
                (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).map(|(s, t)| dem.get(s, t) * gd.distance(s, t)).sum();
            conservation = conservation.max((carried - demanded).abs() / demanded.max(1.0));
        }
    }
    let pass = identity <= 1e-9 && star_excess <= 1e-12 && conservation <= 1e-9;
    outcome(
        pass,
        format!(
            "{} graphs; identity residual {identity:.1e}, star bound excess {star_excess:.1e}, conservation residual {conservation:.1e}",
            graphs.len(),
        ),
    )
}

/// Curvature signs and values on unit-weight ring-growth graphs.
fn c3_curvature() -> Outcome {
    let kappas = |valence: usize, layers: usize| -> Vec<f64> {
        let r = ring_growth(RingGrowthSpec { valence, layers }).unwrap();
        (0..r.graph.vertex_count()).filter_map(|v| vertex_curvature(&r.graph, &r.embedding, v).ok()).map(|c| c.kappa).collect()
    };
    let k7 = kappas(7, 3);
    let k6 = kappas(6, 3);
    let wheel = kappas(5, 1);
    let ok7 = k7.iter().all(|k| (k + 0.345486).abs() <= 1e-6);
    let ok6 = k6.iter().all(|k| k.abs() < 1e-12);
    let ok5 = wheel.len() == 1 && (wheel[0] - 0.483680).abs() <= 1e-6;
    outcome(
        ok7 && ok6 && ok5 && !k7.is_empty() && !k6.is_empty(),
        format!(
            "d=7 kappa {:.6} over {} interior vertices, d=6 max |kappa| {:.1e} over {}, d=5 wheel kappa {:.6}",
            k7[0],
            k7.len(),
            k6.iter().fold(0.0f64, |m, k| m.max(k.abs())),
            k6.len(),
            wheel.first().copied().unwrap_or(f64::NAN)
        ),
    )
}

fn fit(json: &str) -> ScalingFit {
    run_scaling(&ExperimentConfig::from_json(json).unwrap()).unwrap()
}

/// Discrete scaling of the maximum betweenness.
fn c4_discrete_scaling() -> Outcome {
    let ring = fit(r#"{"family": "ring_growth", "params": {"valence": 7}, "sweep": [3, 4, 5, 6], "metric": "max_betweenness"}"#);
    let grid = fit(
        r#"{"family": "lattice", "params": {"dim": 2}, "sweep": [8, 12, 16, 20, 24, 28, 32], "metric": "max_betweenness"}"#,
    );
    let pass = (1.7..=2.3).contains(&ring.slope) && (1.35..=1.65).contains(&grid.slope);
    outcome(
        pass,
        format!("ring growth d=7 slope {:.4} (want [1.7, 2.3]), lattice slope {:.4} (want [1.35, 1.65])", ring.slope, grid.slope),
    )
}

fn continuum_fit(space: &str, n: usize, k: f64, sweep: &[f64]) -> ScalingFit {
    let json = serde_json::json!({
        "family": "continuum",
        "params": {"space": space, "n": n, "k": k, "r": 1.0},
        "sweep": sweep,
        "metric": "lambda",
    });
    fit(&json.to_string())
}

fn c5a_hyperbolic() -> Outcome {
    let f = continuum_fit("negative", 2, 1.0, &[6.0, 8.0, 10.0, 12.0]);
    outcome(f.slope.abs() <= 0.05, format!("hyperbolic n=2, R in 6..12: slope {:+.4} (want 0 +- 0.05)", f.slope))
}

fn c5b_euclidean_plane() -> Outcome {
    let f = continuum_fit("zero", 2, 1.0, &[10.0, 20.0, 40.0, 80.0]);
    outcome((f.slope + 1.0).abs() <= 0.1, format!("euclidean n=2, R in 10..80: slope {:+.4} (want -1 +- 0.1)", f.slope))
}

fn c5c_euclidean_space() -> Outcome {
    let f = continuum_fit("zero", 3, 1.0, &[10.0, 20.0, 40.0]);
    outcome((f.slope + 2.0).abs() <= 0.1, format!("euclidean n=3, R in 10..40: slope {:+.4} (want -2 +- 0.1)", f.slope))
}

fn c5d_spherical() -> Outcome {
    let k = 0.1;
    let sweep: Vec<f64> = [0.2, 0.3, 0.4, 0.45].iter().map(|x| x * PI / k).collect();
    let f = continuum_fit("positive", 2, k, &sweep);
    outcome(
        (f.slope + 2.0).abs() <= 0.1,
        format!("spherical n=2, k=0.1, R in 0.2..0.45 pi/k: slope {:+.4} (want -2 +- 0.1)", f.slope),
    )
}

/// Density closed forms, monotonicity and the large-radius limit.
fn c6_density() -> Outcome {
    let hyp = SpaceSpec::hyperbolic(2, 1.0);
    let mut worst: f64 = 0.0;
    for r in [0.5, 1.0, 3.0, 6.0] {
        let vol = 2.0 * PI * (f64::cosh(r) - 1.0);
        let exact = 2.0 * PI * ((2.0 * r).sinh() - 2.0 * r.sinh()) / (vol * vol);
        worst = worst.max((mu_density(hyp, r, 0.0).unwrap().value / exact - 1.0).abs());
    }
    let euc = SpaceSpec::euclidean(2);
    for r in [0.5, 1.0, 10.0] {
        worst = worst.max((mu_density(euc, r, 0.0).unwrap().value / (2.0 / (PI * r)) - 1.0).abs());
    }
    let at_three = mu_density(hyp, 3.0, 0.0).unwrap().value;
    let profile: Vec<f64> = (0..10).map(|i| mu_density(hyp, 3.0, 0.3 * i as f64).unwrap().value).collect();
    let decreasing = profile.windows(2).all(|w| w[1] < w[0]);
    let limit = mu_density(hyp, 12.0, 0.0).unwrap().value;
    let pass = worst <= 1e-6 && decreasing && (limit - 1.0 / PI).abs() <= 1e-4;
    outcome(
        pass,
        format!(
            "closed forms to {worst:.1e} (mu(0) = {at_three:.7} at R=3), strictly decreasing on 10 radii: {decreasing}, |mu(0) - 1/pi| at R=12 = {:.1e}",
            (limit - 1.0 / PI).abs()
        ),
    )
}

/// Quadrature against Monte Carlo across all three curvature classes.
fn c7_quadrature_vs_mc() -> Outcome {
    let configs = [
        BallConfig::concentric(SpaceSpec::euclidean(2), 10.0, 1.0),
        BallConfig { space: SpaceSpec::euclidean(2), outer: 3.0, r: 1.0, rho: 1.5 },
        BallConfig::concentric(SpaceSpec::hyperbolic(2, 1.0), 5.0, 1.0),
        BallConfig { space: SpaceSpec::hyperbolic(2, 1.0), outer: 5.0, r: 0.5, rho: 2.0 },
        BallConfig { space: SpaceSpec::hyperbolic(2, 1.0), outer: 3.0, r: 1.0, rho: 0.5 },
        BallConfig::concentric(SpaceSpec::spherical(2, 1.0), 1.4, 0.5),
        BallConfig { space: SpaceSpec::spherical(2, 1.0), outer: 1.5, r: 0.4, rho: 0.9 },
        BallConfig { space: SpaceSpec::spherical(2, 0.5), outer: 3.0, r: 1.0, rho: 1.0 },
    ];
    let mut agree = 0;
    let mut worst_z: f64 = 0.0;
    for (i, cfg) in configs.iter().enumerate() {
        let q = lambda_ball(*cfg).unwrap().value;
        let mc = mc_transit(*cfg, 1_000_000, 100 + i as u64).unwrap();
        let z = ((mc.mean - q) / mc.stderr).abs();
        worst_z = worst_z.max(z);
        if z <= 3.0 {
            agree += 1;
        }
    }
    let disk = mc_transit(BallConfig::concentric(SpaceSpec::euclidean(2), 1.0, 1.0), 1_000_000, 7).unwrap();
    let disk_z = (disk.mean - 128.0 / (45.0 * PI)).abs() / disk.stderr;
    outcome(
        agree >= 6 && agree == configs.len() && disk_z <= 3.0,
        format!(
            "{agree}/{} configs within 3 sigma (max |z| {worst_z:.2}), unit-disk mean distance {:.5} |z| {disk_z:.2}",
            configs.len(),
            disk.mean
        ),
    )
}

/// Inertia minima and the uniform spherical density.
fn c8_inertia() -> Outcome {
    let cases = [(SpaceSpec::hyperbolic(2, 1.0), 3.0), (SpaceSpec::euclidean(2), 2.0), (SpaceSpec::spherical(2, 1.0), 1.4)];
    let continuum_ok = cases.iter().all(|&(space, r)| {
        let phi: Vec<f64> = (0..10).map(|i| continuum_inertia(space, r, r * i as f64 / 10.0, 2.0).unwrap().value).collect();
        phi[1..].iter().all(|&p| p > phi[0])
    });
    let discrete_ok = [(6, 4), (7, 3), (8, 3)].iter().all(|&(valence, layers)| {
        let g = ring_growth(RingGrowthSpec { valence, layers }).unwrap().graph;
        let gd = compute_geodesics(&g).unwrap();
        let r = congestion_inertia_report(&vertex_traffic(&gd, &Demand::Uniform).unwrap(), &graph_inertia(&gd, 2.0), &gd);
        r.distance == 0.0
    });
    let sphere = SpaceSpec::spherical(2, 1.0);
    let mus: Vec<f64> = [0.0, 0.4, 1.0, 1.6, 2.5, 3.0].iter().map(|&a| mu_density_whole_sphere(sphere, a).unwrap().value).collect();
    let spread = mus.iter().fold(f64::NEG_INFINITY, |m, &x| m.max(x)) - mus.iter().fold(f64::INFINITY, |m, &x| m.min(x));
    outcome(
        continuum_ok && discrete_ok && spread < 1e-6,
        format!(
            "continuum minimum at a=0 in all classes: {continuum_ok}, discrete centroid at argmax tau: {discrete_ok}, whole-sphere mu spread {spread:.1e}"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("1", c1_oracle),
        ("2", c2_identities),
        ("3", c3_curvature),
        ("4", c4_discrete_scaling),
        ("5a", c5a_hyperbolic),
        ("5b", c5b_euclidean_plane),
        ("5c", c5c_euclidean_space),
        ("5d", c5d_spherical),
        ("6", c6_density),
        ("7", c7_quadrature_vs_mc),
        ("8", c8_inertia),
    ];
    let mut failed = Vec::new();
    let mut seven = false;
    for (id, check) in criteria {
        let o = check();
        println!("{} criterion {id}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if id == "7" {
            seven = o.pass;
        }
        if !o.pass {
            failed.push(id);
        }
    }
    // No absolute constant is asserted; absolute loads are trusted only
    // through the independent sampling check.
    let large = lambda_ball(BallConfig::concentric(SpaceSpec::hyperbolic(2, 1.0), 40.0, 1.0)).unwrap().value;
    println!(
        "{} criterion 9: absolute constants not asserted, hyperbolic lambda(B_1) at R=40 is {large:.6}; relies on criterion 7",
        if seven { "PASS" } else { "FAIL" }
    );
    if !seven {
        failed.push("9");
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
