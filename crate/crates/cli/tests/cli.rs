use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tempeuler")).args(args).output().expect("run cli")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

struct Scratch(tempfile::TempDir);

impl Scratch {
    fn new() -> Self {
        Scratch(tempfile::tempdir().unwrap())
    }
    fn file(&self, name: &str, text: &str) -> String {
        let p = self.path(name);
        fs::write(&p, text).unwrap();
        p
    }
    fn path(&self, name: &str) -> String {
        let p: PathBuf = self.0.path().join(name);
        p.to_string_lossy().into_owned()
    }
}

#[test]
fn dynamic_walk_uses_connectivity() {
    let s = Scratch::new();
    let g = s.file("star.tg", "tg 4 3 3\n0 1 *\n0 2 *\n0 3 *\n");
    let wit = s.path("star.wit");
    let out = cli(&["solve", "--problem", "walk", "--method", "auto", &g, "--witness", &wit]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("dynamic-walk"));
    assert_eq!(code(&cli(&["verify", "--problem", "walk", &g, &wit])), 0);
    assert_eq!(code(&cli(&["verify", "--problem", "trail", &g, &wit])), 65);
}

#[test]
fn unsat_walk_reduction_is_infeasible() {
    let s = Scratch::new();
    let out_tg = s.path("u.tg");
    assert_eq!(code(&cli(&["reduce", "--construction", "3sat-walk", &fixture("unsat4.cnf"), &out_tg])), 0);
    assert!(Path::new(&s.path("u.names.jsonl")).exists());
    assert_eq!(code(&cli(&["solve", "--problem", "walk", "--method", "exact", &out_tg])), 1);
    assert_eq!(code(&cli(&["solve", "--problem", "walk", "--method", "poly", &out_tg])), 1);
}

#[test]
fn orlin_exit_codes() {
    assert_eq!(code(&cli(&["orlin", &fixture("two_cycle.ddg")])), 0);
    let s = Scratch::new();
    let bad = s.file("bad.ddg", "ddg 2 2\n0 1 1\n1 0 -1\n");
    let out = cli(&["--json", "orlin", &bad]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["condition"], 3);
}

#[test]
fn exit_code_contract() {
    let s = Scratch::new();
    let path = fixture("path_abc.tg");
    assert_eq!(code(&cli(&["solve", "--problem", "walk", &path])), 0);
    assert_eq!(code(&cli(&["solve", "--problem", "tour", &path])), 1);
    let big = s.path("big.tg");
    assert_eq!(code(&cli(&["gen", "--n", "9", "--m", "30", "--tau", "2", "--seed", "1", "-o", &big])), 0);
    assert_eq!(code(&cli(&["solve", "--problem", "trail", "--method", "exact", &big])), 2);
    assert_eq!(code(&cli(&["solve", "--problem", "walk"])), 64);
    assert_eq!(code(&cli(&["frobnicate"])), 64);
    assert_eq!(code(&cli(&["solve", "--problem", "trail", "--method", "poly", &path])), 65);
    let broken = s.file("broken.tg", "tg 2 1 2\n0 0 1\n");
    let out = cli(&["solve", "--problem", "walk", &broken]);
    assert_eq!(code(&out), 65);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&cli(&["gen", "--n", "3", "--m", "4", "--tau", "1"])), 65);
    assert_eq!(code(&cli(&["reduce", "--construction", "nae3sat-trail", &fixture("one_clause.cnf"), &s.path("x.tg")])), 64);
}

#[test]
fn json_schema() {
    let out = cli(&["--json", "solve", "--problem", "walk", "--method", "exact", &fixture("path_abc.tg")]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["v"], 1);
    assert_eq!(v["status"], "feasible");
    assert_eq!(v["method"], "exact");
    assert!(v["stats"]["nodes"].as_u64().unwrap() > 0);
    assert!(v["stats"]["time_ms"].is_number());
    assert!(v["witness"]["steps"].as_array().unwrap().len() >= 2);
}

#[test]
fn poly_and_exact_agree() {
    let s = Scratch::new();
    for seed in 0..30 {
        for density in ["0.5", "1"] {
            let g = s.path(&format!("g{seed}-{density}.tg"));
            let seed = seed.to_string();
            cli(&["gen", "--n", "6", "--m", "8", "--tau", "3", "--density", density, "--seed", &seed, "-o", &g]);
            for problem in ["walk", "closed-walk", "trail", "tour"] {
                let poly = code(&cli(&["solve", "--problem", problem, "--method", "poly", &g]));
                if poly == 65 {
                    continue;
                }
                let exact = code(&cli(&["solve", "--problem", problem, "--method", "exact", &g]));
                assert_eq!(poly, exact, "{problem} on seed {seed} density {density}");
            }
        }
    }
}

#[test]
fn witnesses_from_solve_verify() {
    let s = Scratch::new();
    let g = fixture("random_n6_m10_t3_s42.tg");
    for problem in ["walk", "closed-walk", "local-trail", "local-tour", "trail", "tour"] {
        for strict in [false, true] {
            let wit = s.path(&format!("{problem}{strict}.wit"));
            let mut args = vec!["solve", "--problem", problem, "--budget", "30", &g, "--witness", &wit];
            if strict {
                args.push("--strict");
            }
            if code(&cli(&args)) == 0 {
                let mut v = vec!["verify", "--problem", problem, &g, &wit];
                if strict {
                    v.push("--strict");
                }
                assert_eq!(code(&cli(&v)), 0, "{problem} strict={strict}");
            }
        }
    }
}

#[test]
fn start_pinning() {
    let path = fixture("path_abc.tg");
    assert_eq!(code(&cli(&["solve", "--problem", "walk", "--start", "2", &path])), 0);
    assert_eq!(code(&cli(&["solve", "--problem", "walk", "--start", "0", &path])), 1);
    assert_eq!(code(&cli(&["solve", "--problem", "walk", "--start", "9", &path])), 65);
}

#[test]
fn reductions_from_cli() {
    let s = Scratch::new();
    let cnf = fixture("nae_pair.cnf");
    let cases: [&[&str]; 5] = [
        &["--construction", "nae3sat-localtour"],
        &["--construction", "nae3sat-localtrail", "--tau", "3", "--pin", "s_1"],
        &["--construction", "nae3sat-trail", "--tau", "4", "--closed"],
        &["--construction", "two-trail-cover"],
        &["--construction", "3sat-walk", "--forest"],
    ];
    for (i, case) in cases.iter().enumerate() {
        let out = s.path(&format!("r{i}.tg"));
        let mut args = vec!["reduce"];
        args.extend_from_slice(case);
        args.push(&cnf);
        args.push(&out);
        assert_eq!(code(&cli(&args)), 0, "{case:?}");
        let g = tempeuler::io::parse_tg(&fs::read_to_string(&out).unwrap()).unwrap();
        let names = tempeuler::io::parse_names_jsonl(&fs::read_to_string(s.path(&format!("r{i}.names.jsonl"))).unwrap()).unwrap();
        assert_eq!(names.len(), g.vertex_count());
    }
    let lifted = tempeuler::io::parse_tg(&fs::read_to_string(s.path("r1.tg")).unwrap()).unwrap();
    assert_eq!(lifted.lifetime(), 3);
}

#[test]
fn fixture_and_cover() {
    let s = Scratch::new();
    let ring = s.path("ring.tg");
    assert_eq!(code(&cli(&["fixture", "hexring", "4", "-o", &ring])), 0);
    let doc = tempeuler::io::parse_tg_document(&fs::read_to_string(&ring).unwrap()).unwrap();
    assert_eq!((doc.graph.vertex_count(), doc.graph.edge_count()), (16, 20));
    assert_eq!(doc.names.unwrap()[0], "A_1");
    assert_eq!(code(&cli(&["fixture", "hexring", "2"])), 64);

    let k14 = s.file("k14.tg", "tg 5 4 1\n0 1 1\n0 2 1\n0 3 1\n0 4 1\n");
    let k16 = s.file("k16.tg", "tg 7 6 1\n0 1 1\n0 2 1\n0 3 1\n0 4 1\n0 5 1\n0 6 1\n");
    assert_eq!(code(&cli(&["cover", &k14])), 0);
    assert_eq!(code(&cli(&["cover", &k16])), 1);
}
