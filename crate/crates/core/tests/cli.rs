use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubecross"))
        .args(args)
        .current_dir(dir)
        .env_remove("CUBECROSS_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gen(dir: &Path, fam: &str, n: &str, variant: &str, file: &str) {
    let o = run(&["gen", fam, n, "--variant", variant, "-o", file], dir);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn gen_counts_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["gen", "CQ", "4"], dir.path());
    assert_eq!(code(&o), 0);
    let g = cubecross::io::parse_graph(&stdout(&o)).unwrap();
    assert_eq!((g.n(), g.m()), (16, 32));
    assert!(g.labels().is_some());

    let o = run(&["gen", "MQ", "3", "--variant", "1"], dir.path());
    let g = cubecross::io::parse_graph(&stdout(&o)).unwrap();
    assert_eq!((g.n(), g.m()), (8, 12));

    assert_eq!(code(&run(&["gen", "LTQ", "1"], dir.path())), 2);
}

#[test]
fn iso_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    gen(p, "CQ", "3", "0", "cq3.txt");
    gen(p, "MQ", "3", "1", "mq3.txt");
    gen(p, "CQ", "4", "0", "cq4.txt");
    gen(p, "LTQ", "4", "0", "ltq4.txt");
    let o = run(&["iso", "cq3.txt", "mq3.txt"], p);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("isomorphic"));
    assert_eq!(code(&run(&["iso", "cq4.txt", "ltq4.txt"], p)), 1);
    let o = run(&["iso", "cq4.txt", "cq4.txt"], p);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o)
        .lines()
        .skip(1)
        .enumerate()
        .all(|(i, l)| l == format!("{i} -> {i}")));
    assert_eq!(code(&run(&["iso", "cq4.txt", "missing.txt"], p)), 2);
}

#[test]
fn lemma_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(code(&run(&["lemmas", "CQ", "3"], p)), 0);
    std::fs::write(
        p.join("k4.txt"),
        "p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n",
    )
    .unwrap();
    let o = run(&["lemmas", "--file", "k4.txt", "--lemma", "2.4"], p);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness"));
    let o = run(&["lemmas", "LTQ", "4", "--lemma", "obs4.4"], p);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("paths"));
    assert_eq!(
        code(&run(&["lemmas", "CQ", "3", "--lemma", "obs4.4"], p)),
        2
    );
}

#[test]
fn cr_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    gen(p, "CQ", "3", "0", "CQ3.txt");
    let o = run(
        &[
            "cr",
            "CQ3.txt",
            "--exact",
            "-o",
            "rec.json",
            "--drawing",
            "d.json",
            "--svg",
            "d.svg",
        ],
        p,
    );
    assert_eq!(code(&o), 0);
    let rec = cubecross::io::ResultRecord::from_json(
        &std::fs::read_to_string(p.join("rec.json")).unwrap(),
    )
    .unwrap();
    assert!(rec.exact);
    assert_eq!(rec.upper, 1);
    assert!(std::fs::read_to_string(p.join("d.svg"))
        .unwrap()
        .contains("<svg"));

    assert_eq!(
        code(&run(&["verify", "rec.json", "--graph", "CQ3.txt"], p)),
        0
    );
    assert_eq!(
        code(&run(&["verify", "d.json", "--graph", "CQ3.txt"], p)),
        0
    );

    let text = std::fs::read_to_string(p.join("d.json")).unwrap();
    let mut d = cubecross::io::DrawingFile::from_json(&text).unwrap();
    d.claimed_crossings = Some(2);
    std::fs::write(p.join("wrong.json"), d.to_json()).unwrap();
    assert_ne!(code(&run(&["verify", "wrong.json"], p)), 0);
}

#[test]
fn cr_upper_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    gen(p, "CQ", "4", "0", "CQ4.txt");
    let o = run(
        &[
            "cr",
            "CQ4.txt",
            "--upper",
            "--effort",
            "64",
            "--drawing",
            "d.json",
        ],
        p,
    );
    assert_eq!(code(&o), 0);
    let rec = cubecross::io::ResultRecord::from_json(&stdout(&o)).unwrap();
    assert!(rec.upper <= 8);
    assert!(rec.verify(None).is_ok());
    assert_eq!(code(&run(&["verify", "d.json"], p)), 0);

    gen(p, "LTQ", "4", "0", "LTQ4.txt");
    let o = run(&["cr", "LTQ4.txt", "--bounds", "--budget", "2s"], p);
    assert_eq!(code(&o), 0);
    let rec = cubecross::io::ResultRecord::from_json(&stdout(&o)).unwrap();
    assert!(
        rec.lower >= 4 && rec.upper <= 10,
        "[{}, {}]",
        rec.lower,
        rec.upper
    );

    // exact mode on an unfinished search is a negative answer
    let o = run(
        &[
            "cr", "LTQ4.txt", "--exact", "--budget", "1s", "--effort", "4",
        ],
        p,
    );
    assert_eq!(code(&o), 1);
}
