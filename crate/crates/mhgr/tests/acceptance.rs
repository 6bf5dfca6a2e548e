//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria with a command-line surface drive the `mhgr` binary through its
//! exit codes and JSON output; criteria 2 and 8 probe library internals that
//! have no command.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use mhgr::formats::{to_edgelist, GroupTable};
use mhgr_core::aut::{automorphisms, verify_matrix};
use mhgr_core::catalog::{GroupClass, Kind, ENTRIES};
use mhgr_core::construct::{sigma3, sigma4};
use mhgr_core::lift::parts_with_triangles;
use mhgr_core::{ConnectionMatrix, ElemSet, Graph, Group};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_mhgr");

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn mhgr(args: &[&str]) -> Run {
    let out = Command::new(BIN).args(args).env_remove("MHGR_VERTEX_CAP").output().expect("spawn mhgr");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

fn json(run: &Run) -> Result<Value, String> {
    serde_json::from_str(&run.stdout).map_err(|e| format!("bad JSON ({e}); stderr: {}", run.stderr.trim()))
}

fn expect_code(run: &Run, want: i32, what: &str) -> Result<(), String> {
    if run.code == want {
        Ok(())
    } else {
        Err(format!("{what}: exit {} (want {want}); stderr: {}", run.code, run.stderr.trim()))
    }
}

fn tmp() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mhgr-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn class_groups(class: &str) -> Vec<String> {
    match class {
        "rank<=2" => vec!["Q8".into(), "C7".into(), "D8".into(), "C4xC2".into()],
        "rank3" => vec!["C2^2xC4".into(), "C3^3".into()],
        members => members.split('/').map(str::to_string).collect(),
    }
}

fn u64_field(v: &Value, path: &[&str]) -> Option<u64> {
    let mut cur = v;
    for k in path {
        cur = cur.get(k)?;
    }
    cur.as_u64()
}

/// Synthesizes through the binary and checks route and |Aut|; returns the
/// certificate path.
fn synth_check(group: &str, m: usize, route: &str, aut: u64, dir: &Path) -> Result<PathBuf, String> {
    let out = dir.join(format!("{}-{m}.json", group.replace(['^', '@', '/'], "_")));
    let r = mhgr(&["synthesize", "--group", group, "-m", &m.to_string(), "--verify", "--out", p(&out)]);
    expect_code(&r, 0, &format!("synthesize {group} m={m}"))?;
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).map_err(|e| e.to_string())?;
    let got_route = cert["route"].as_str().unwrap_or("");
    let got_aut = u64_field(&cert, &["evidence", "aut_order"]);
    if got_route != route || got_aut != Some(aut) || cert["kind"] != "HGR" {
        return Err(format!("{group} m={m}: route {got_route}, aut {got_aut:?}, kind {}", cert["kind"]));
    }
    Ok(out)
}

fn criterion1(dir: &Path) -> Result<String, String> {
    let list = json(&mhgr(&["catalog", "list", "--json"]))?;
    let mut checked = 0;
    let mut entries = 0;
    let mut slowest = Duration::ZERO;
    for e in list.as_array().unwrap().iter().filter(|e| e["kind"] == "direct-HGR") {
        entries += 1;
        let idx = e["index"].as_u64().unwrap().to_string();
        for g in class_groups(e["groups"].as_str().unwrap()) {
            let start = Instant::now();
            let file = dir.join(format!("c1-{idx}-{}.json", g.replace('^', "_")));
            expect_code(&mhgr(&["catalog", "export", &idx, "--group", &g, "--out", p(&file)]), 0, "export")?;
            let v = mhgr(&["verify", p(&file), "--json"]);
            expect_code(&v, 0, &format!("verify entry {idx} over {g}"))?;
            let cert = json(&v)?;
            let aut = u64_field(&cert, &["evidence", "aut_order"]);
            let order = u64_field(&cert, &["evidence", "group_order"]);
            if cert["kind"] != "HGR" || aut.is_none() || aut != order {
                return Err(format!("entry {idx} ({}) over {g}: kind {}, aut {aut:?}", e["key"], cert["kind"]));
            }
            slowest = slowest.max(start.elapsed());
            checked += 1;
        }
    }
    if slowest > Duration::from_secs(1) {
        return Err(format!("slowest entry took {slowest:?} (limit 1 s)"));
    }
    Ok(format!("{entries} direct entries, {checked} (entry, group) checks, |Aut| = |G| exactly; slowest {slowest:.2?}"))
}

struct LiftShape {
    pattern: bool,
    triangles: bool,
    k: usize,
}

fn lift_shape(cm: &ConnectionMatrix) -> LiftShape {
    let vals = cm.part_valencies();
    let b = vals.len();
    let k = vals[b - 1];
    let pattern = vals[..b - 2].iter().all(|&v| v == k + 1) && vals[b - 2..].iter().all(|&v| v == k);
    let triangles = parts_with_triangles(cm).len() == b;
    LiftShape { pattern, triangles, k }
}

fn criterion2(notes: &mut Vec<String>) -> Result<String, String> {
    let mut checked = 0;
    let mut slowest = Duration::ZERO;
    let mut oversized = Vec::new();
    let mut check = |label: String, cm: ConnectionMatrix, published: bool| -> Result<(), String> {
        let start = Instant::now();
        let v = verify_matrix(&cm).map_err(|e| e.to_string())?;
        let shape = lift_shape(&cm);
        if !v.is_pgsr() || !shape.pattern || !shape.triangles {
            return Err(format!(
                "{label}: pgsr {} pattern {} triangles {} valencies {:?}",
                v.is_pgsr(),
                shape.pattern,
                shape.triangles,
                cm.part_valencies()
            ));
        }
        if shape.k > cm.group().order() {
            if !published {
                return Err(format!("{label}: k = {} exceeds |G| = {}", shape.k, cm.group().order()));
            }
            oversized.push(format!("{label} (k = {} > |G| = {})", shape.k, cm.group().order()));
        }
        slowest = slowest.max(start.elapsed());
        checked += 1;
        Ok(())
    };
    for e in ENTRIES.iter().filter(|e| e.kind != Kind::DirectHgr) {
        let groups: Vec<Group> =
            class_groups(&e.class.to_string()).iter().map(|s| mhgr::parse_group(s).unwrap()).collect();
        for g in groups {
            let g = Arc::new(g);
            let cm = e.matrix(&g).map_err(|err| err.to_string())?;
            let published = e.origin == mhgr_core::catalog::Origin::Published;
            check(format!("{} [{}] over {}", e.key(), e.origin, g.descriptor()), cm, published)?;
        }
    }
    for spec in ["C2^4", "C2^5", "C3^4", "C2^4xC3"] {
        let g = Arc::new(mhgr::parse_group(spec).map_err(|e| e.to_string())?);
        check(format!("Sigma3({spec})"), sigma3(&g).map_err(|e| e.to_string())?, false)?;
        check(format!("Sigma4({spec})"), sigma4(&g).map_err(|e| e.to_string())?, false)?;
    }
    if slowest > Duration::from_secs(5) {
        return Err(format!("slowest check took {slowest:?} (limit 5 s)"));
    }
    notes.push(format!(
        "criterion 2 k-bound: {} published base(s) have k > |G| so the fillers M, N cannot exist; \
         lifting uses the search-derived replacements: {}",
        oversized.len(),
        oversized.join("; ")
    ));
    Ok(format!("{checked} bases are PGSRs with the valency pattern and a triangle through every vertex; slowest {slowest:.2?}"))
}

const NONEXISTENCE: &[(&str, usize)] = &[
    ("C2", 3),
    ("C2", 4),
    ("C2", 5),
    ("C3", 3),
    ("C3", 4),
    ("C4", 3),
    ("C5", 3),
    ("C2^2", 3),
    ("D6", 3),
    ("C1", 3),
    ("C1", 4),
    ("C1", 5),
    ("C1", 6),
    ("C1", 7),
    ("C1", 8),
    ("C1", 9),
];

fn criterion3() -> Result<String, String> {
    let mut times = Vec::new();
    for workers in ["1", "8"] {
        let start = Instant::now();
        for &(g, m) in NONEXISTENCE {
            let r = mhgr(&["search", "--group", g, "-m", &m.to_string(), "--mode", "exhaustive", "--workers", workers]);
            expect_code(&r, 3, &format!("search {g} m={m}"))?;
            let doc = json(&r)?;
            if doc["verdict"] != "no witness" || doc["candidates_examined"] != doc["regular_candidates"] {
                return Err(format!("{g} m={m}: {}", r.stdout));
            }
        }
        times.push(start.elapsed());
    }
    if times[0] > Duration::from_secs(600) || times[1] > Duration::from_secs(120) {
        return Err(format!("too slow: {:?} single, {:?} with 8 workers", times[0], times[1]));
    }
    Ok(format!(
        "{} pairs, no witness, full enumeration; {:.2?} single-threaded, {:.2?} with 8 workers",
        NONEXISTENCE.len(),
        times[0],
        times[1]
    ))
}

fn criterion4(dir: &Path) -> Result<String, String> {
    let mut slowest = Duration::ZERO;
    for (spec, order) in [("C2^4", 16), ("C2^5", 32), ("C3^4", 81), ("C2^4xC3", 48)] {
        let start = Instant::now();
        synth_check(spec, 3, "gamma3", order, dir)?;
        synth_check(spec, 4, "gamma4", order, dir)?;
        let t = start.elapsed();
        if t > Duration::from_secs(60) {
            return Err(format!("{spec} took {t:?} (limit 60 s)"));
        }
        slowest = slowest.max(t);
    }
    Ok(format!("Gamma3 and Gamma4 are HGRs with |Aut| = |G| for C2^4, C2^5, C3^4, C2^4xC3; slowest group {slowest:.2?}"))
}

fn criterion5(dir: &Path) -> Result<String, String> {
    let start = Instant::now();
    for m in [5, 7, 9] {
        synth_check("C6", m, "lift3", 6, dir)?;
    }
    for m in [6, 8] {
        synth_check("C2^3", m, "lift4", 8, dir)?;
    }
    synth_check("C3", 7, "lift5", 3, dir)?;
    let t = start.elapsed();
    if t > Duration::from_secs(30) {
        return Err(format!("took {t:?} (limit 30 s)"));
    }
    Ok(format!("C6 lift3 m=5,7,9 |Aut|=6; C2^3 lift4 m=6,8 |Aut|=8; C3 lift5 m=7 |Aut|=3; {t:.2?}"))
}

fn dicyclic12() -> Group {
    // C3 x| C4 with the generator of C4 inverting C3; element (a, b) at 4a + b.
    let mul = |x: usize, y: usize| {
        let (a1, b1, a2, b2) = (x / 4, x % 4, y / 4, y % 4);
        let a2 = if b1 % 2 == 1 { (3 - a2) % 3 } else { a2 };
        ((a1 + a2) % 3) * 4 + (b1 + b2) % 4
    };
    let table: Vec<Vec<usize>> = (0..12).map(|x| (0..12).map(|y| mul(x, y)).collect()).collect();
    Group::from_table(&table, None).unwrap()
}

/// The table of `g` with its non-identity elements shuffled.
fn relabeled_table(g: &Group, rng: &mut ChaCha8Rng) -> GroupTable {
    let n = g.order();
    let mut perm: Vec<usize> = (1..n).collect();
    perm.shuffle(rng);
    perm.insert(0, 0);
    let mut table = vec![vec![0; n]; n];
    let mut names = vec![String::new(); n];
    for a in 0..n {
        names[perm[a]] = g.name(a).to_string();
        for b in 0..n {
            table[perm[a]][perm[b]] = perm[g.mul(a, b)];
        }
    }
    GroupTable { order: n, table, names: Some(names) }
}

fn criterion6(dir: &Path) -> Result<String, String> {
    let start = Instant::now();
    let specs = [
        "C1", "C2", "C3", "C4", "C2^2", "C5", "C6", "D6", "C7", "C8", "C4xC2", "C2^3", "D8", "Q8", "C9", "C3^2", "C10",
        "D10", "C11", "C12", "C6xC2", "D12", "A4",
    ];
    let mut groups: Vec<(String, Group)> =
        specs.iter().map(|s| (s.to_string(), mhgr::parse_group(s).unwrap())).collect();
    groups.push(("Dic12".into(), dicyclic12()));
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut witnesses, mut nonexist) = (0, 0);
    for (name, g) in &groups {
        let file = dir.join(format!("table-{}.json", name.replace('^', "_")));
        std::fs::write(&file, serde_json::to_string(&relabeled_table(g, &mut rng)).unwrap()).unwrap();
        let spec = format!("@{}", p(&file));
        for m in 3..=9 {
            if m * g.order() > 120 {
                continue;
            }
            let expected_none = NONEXISTENCE.iter().any(|&(s, mm)| s == name && mm == m);
            let cert = dir.join(format!("sweep-{}-{m}.json", name.replace('^', "_")));
            let r = mhgr(&["synthesize", "--group", &spec, "-m", &m.to_string(), "--out", p(&cert)]);
            if expected_none {
                expect_code(&r, 3, &format!("{name} m={m} (nonexistence expected)"))?;
                nonexist += 1;
            } else {
                expect_code(&r, 0, &format!("{name} m={m} (witness expected)"))?;
                witnesses += 1;
            }
            let v = mhgr(&["verify", p(&cert)]);
            expect_code(&v, 0, &format!("reverify {name} m={m}"))?;
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(900) {
        return Err(format!("took {t:?} (limit 15 min)"));
    }
    Ok(format!(
        "{} groups of order <= 12 ingested as shuffled tables; {witnesses} witnesses reverified, {nonexist} classified nonexistences; {t:.2?}",
        groups.len()
    ))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let density = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn criterion7(dir: &Path) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut graphs: Vec<(String, Graph)> =
        (0..500)
            .map(|i| {
                let n = rng.gen_range(1..=8);
                (format!("random #{i}"), random_graph(&mut rng, n))
            })
            .collect();
    let mut catalog = 0;
    for e in ENTRIES {
        if let GroupClass::Members(list) = e.class {
            for g0 in list {
                if g0.order() * e.m <= 8 {
                    let cm = e.matrix(&Arc::new(g0.build())).unwrap();
                    graphs.push((format!("{} over {g0}", e.key()), cm.build_graph().graph));
                    catalog += 1;
                }
            }
        }
    }
    let file = dir.join("oracle.edges");
    for (label, g) in &graphs {
        std::fs::write(&file, to_edgelist(g)).unwrap();
        let r = mhgr(&["oracle-aut", p(&file), "--json"]);
        expect_code(&r, 0, label)?;
        let doc = json(&r)?;
        if doc["brute_force"] != doc["engine"] {
            return Err(format!("{label}: brute force {} vs engine {}", doc["brute_force"], doc["engine"]));
        }
    }
    Ok(format!("{} graphs (500 random, {catalog} catalog graphs with <= 8 vertices): engine order = brute-force order", graphs.len()))
}

fn criterion8() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let pool: Vec<Arc<Group>> = ["C1", "C2", "C3", "C4", "C2^2", "C5", "C6", "D6", "C8", "Q8", "D8", "C3^2", "D10", "A4", "D12", "C6xC2"]
        .iter()
        .map(|s| Arc::new(mhgr::parse_group(s).unwrap()))
        .collect();
    for trial in 0..200 {
        let g = pool.choose(&mut rng).unwrap().clone();
        let n = g.order();
        let m = rng.gen_range(1..=4);
        let mut cm = ConnectionMatrix::empty(g.clone(), m).unwrap();
        for i in 0..m {
            for j in i..m {
                let mut set: ElemSet = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
                if i == j {
                    set.remove(0);
                    set = set.union(&g.inverse_set(&set));
                }
                cm.set_block(i, j, set).unwrap();
            }
        }
        let lg = cm.build_graph();
        for x in 0..n {
            if !lg.graph.is_automorphism(&lg.right_translation(&g, x)) {
                return Err(format!("trial {trial}: right translation by {} over {} is not an automorphism", g.name(x), g.descriptor()));
            }
        }
        let aut = automorphisms(&lg.graph).map_err(|e| e.to_string())?;
        if aut.order.clone() % n as u64 != 0u64.into() {
            return Err(format!("trial {trial}: |Aut| = {} not divisible by |G| = {n}", aut.order));
        }
    }
    Ok("200 random matrices (|G| <= 12, m <= 4): every right translation is an automorphism and |G| divides |Aut|".into())
}

fn criterion9(dir: &Path) -> Result<String, String> {
    let start = Instant::now();
    synth_check("C2", 10, "large-m-asymmetric", 2, dir)?;
    synth_check("C1", 12, "large-m-asymmetric", 1, dir)?;
    let t = start.elapsed();
    if t > Duration::from_secs(60) {
        return Err(format!("took {t:?} (limit 60 s)"));
    }
    Ok(format!("(C2, 10) |Aut| = 2 and (C1, 12) |Aut| = 1 under the default seed; {t:.2?}"))
}

fn main() {
    let dir = tmp();
    let mut notes = Vec::new();
    let results: Vec<(usize, &str, Result<String, String>)> = vec![
        (1, "catalog direct HGRs", criterion1(&dir)),
        (2, "PGSR bases and lift preconditions", criterion2(&mut notes)),
        (3, "nonexistence reproduction", criterion3()),
        (4, "Gamma3 / Gamma4 constructions", criterion4(&dir)),
        (5, "lift end-to-end", criterion5(&dir)),
        (6, "classification sweep, order <= 12", criterion6(&dir)),
        (7, "automorphism engine vs brute force", criterion7(&dir)),
        (8, "right translations", criterion8()),
        (9, "large-m routes", criterion9(&dir)),
    ];
    let mut failed = 0;
    for (n, name, r) in &results {
        match r {
            Ok(detail) => println!("[PASS] criterion {n}: {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {n}: {name}: {why}");
            }
        }
    }
    for note in &notes {
        println!("[NOTE] {note}");
    }
    let _ = std::fs::remove_dir_all(&dir);
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
