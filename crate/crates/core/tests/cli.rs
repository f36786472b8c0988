use std::path::PathBuf;

use raagkit::cli::{run, Outcome};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn raagkit(args: &[&str]) -> Outcome {
    run(std::iter::once("raagkit").chain(args.iter().copied()))
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(data(&format!("golden/{name}"))).unwrap()
}

fn check_golden(args: &[&str], name: &str) {
    let first = raagkit(args);
    assert_eq!(first.code, 0, "{args:?}: {}", first.stderr);
    assert!(first.stderr.is_empty());
    assert_eq!(first.stdout, golden(name), "{args:?} differs from {name}");
    let second = raagkit(args);
    assert_eq!(first, second, "{args:?} is not deterministic");
}

#[test]
fn golden_outputs() {
    let oct = data("octahedron.txt");
    let c4 = data("c4.txt");
    let k3 = data("k3.txt");
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["report", &oct], "report_octahedron.txt"),
        (vec!["report", "--json", &oct], "report_octahedron.json"),
        (vec!["report", &c4], "report_c4.txt"),
        (vec!["homology", &c4], "homology_c4.txt"),
        (vec!["homology", "--json", &c4], "homology_c4.json"),
        (vec!["info", &oct], "info_octahedron.txt"),
        (vec!["hilbert", &oct], "hilbert_octahedron.txt"),
        (vec!["euler", &oct], "euler_octahedron.txt"),
        (vec!["present", "--kind", "bb-finite", &k3], "present_bb_finite_k3.txt"),
        (
            vec!["present", "--kind", "bb-truncated", "--max-len", "4", "--max-exp", "2", &c4],
            "present_bb_truncated_c4.txt",
        ),
        (vec!["present", "--kind", "pi1", &oct], "present_pi1_octahedron.txt"),
        (vec!["express", &c4, "a b c^-1 d^-1"], "express_c4.txt"),
        (vec!["reduce", &c4, "a c a^-1 b c^-1"], "reduce_c4.txt"),
    ];
    for (args, name) in cases {
        check_golden(&args, name);
    }
    let two = data("two_points.txt");
    check_golden(&["report", &two], "report_two_points.txt");
}

#[test]
fn json_and_text_carry_the_same_report() {
    let oct = data("octahedron.txt");
    let text = raagkit(&["report", &oct]).stdout;
    let json: serde_json::Value = serde_json::from_str(&raagkit(&["report", "--json", &oct]).stdout).unwrap();
    assert_eq!(json["chi_delta"], 2);
    assert_eq!(json["chi_group"], -1);
    assert_eq!(json["corollary7_applies"], true);
    for r in json["reasons"].as_array().unwrap() {
        assert!(text.contains(r.as_str().unwrap()));
    }
}

#[test]
fn emitted_presentations_verify() {
    let dir = std::env::temp_dir().join(format!("raagkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (complex, extra) in [("k3.txt", vec![]), ("octahedron.txt", vec![]), ("c4.txt", vec!["--cycle", "a,b,c,d"])] {
        for kind in ["bb-finite", "bb-truncated"] {
            let mut args = vec!["present", "--kind", kind, "--max-len", "4"];
            let path = data(complex);
            if kind == "bb-finite" {
                args.extend(extra.iter().copied());
            }
            args.push(&path);
            let out = raagkit(&args);
            assert_eq!(out.code, 0, "{}", out.stderr);
            let file = dir.join(format!("{complex}.{kind}.pres"));
            std::fs::write(&file, &out.stdout).unwrap();
            let v = raagkit(&["verify", &path, file.to_str().unwrap()]);
            assert_eq!(v.code, 0, "{complex} {kind}: {}", v.stdout);
            assert!(v.stdout.ends_with(&format!("verified: {n}/{n}\n", n = v.stdout.lines().count() - 1)));
        }
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_graph_input_matches_text() {
    assert_eq!(raagkit(&["info", &data("k3.json")]).stdout, raagkit(&["info", &data("k3.txt")]).stdout);
}

#[test]
fn simplified_pi1_of_octahedron_is_empty() {
    let out = raagkit(&["present", "--kind", "pi1", "--simplify", &data("octahedron.txt")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("\ngens:\n"));
    assert!(!out.stdout.contains("rel:"));
}

#[test]
fn failing_relator_exits_one() {
    let out = raagkit(&["verify", &data("k3.txt"), &data("bad_relator.txt")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAIL"));
}

#[test]
fn domain_errors_exit_one_without_stdout() {
    let cases: Vec<Vec<String>> = vec![
        vec!["present".into(), "--kind".into(), "bb-finite".into(), data("two_points.txt")],
        vec!["express".into(), data("c4.txt"), "a b".into()],
        vec!["hilbert".into(), "--dim-cap".into(), "1".into(), data("k3.txt")],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = raagkit(&args);
        assert_eq!(out.code, 1, "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(out.stderr.starts_with("error: "));
    }
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let out = raagkit(&["frobnicate", "x"]);
    assert_eq!(out.code, 2);
    let out = raagkit(&["present", &data("k3.txt")]);
    assert_eq!(out.code, 2, "missing --kind");
    let out = raagkit(&["present", "--kind", "bogus", &data("k3.txt")]);
    assert_eq!(out.code, 2);
    let bad = data("bad_graph.txt");
    let out = raagkit(&["info", &bad]);
    assert_eq!(out.code, 2);
    assert_eq!(out.stderr, format!("error: {bad}:2:14: edge mentions unknown vertex `c`\n"));
    let out = raagkit(&["reduce", &data("c4.txt"), "a zz"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("1:3"), "{}", out.stderr);
    let out = raagkit(&["present", "--kind", "bb-finite", "--cycle", "a,c", &data("c4.txt")]);
    assert_eq!(out.code, 2);
}

#[test]
fn help_goes_to_stdout() {
    let out = raagkit(&["--help"]);
    assert_eq!(out.code, 0);
    for verb in ["info", "homology", "present", "verify", "express", "reduce", "report", "hilbert", "euler"] {
        assert!(out.stdout.contains(verb));
    }
}
