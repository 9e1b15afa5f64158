use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use geoquest_cli::invoke;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> geoquest_cli::Invocation {
    invoke(std::iter::once("geoquest").chain(args.iter().copied()))
}

fn run_in(dir: &Path, args: &[&str]) -> geoquest_cli::Invocation {
    let out = dir.display().to_string();
    let mut all = args.to_vec();
    all.extend(["--out", out.as_str()]);
    run(&all)
}

fn report(dir: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(dir.join("report.json")).unwrap()).unwrap()
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_geoquest");
    let ok = Command::new(bin)
        .args(["tiling", "verify", "--tiles", &data("seven.tiles"), "--layout", &data("seven.json")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "valid\n");

    let no = Command::new(bin)
        .args(["fairpart", "disc", "--ratio", "1:3", "--samples", "90"])
        .output()
        .unwrap();
    assert_eq!(no.status.code(), Some(1));

    let bad = Command::new(bin).args(["tiling", "frobnicate"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn expect_infeasible_turns_no_into_success() {
    let args = ["shapes", "maxdiam", "--area", "1", "--perimeter", "3"];
    assert_eq!(run(&args).code, 1);
    let mut relaxed = args.to_vec();
    relaxed.push("--expect-infeasible");
    assert_eq!(run(&relaxed).code, 0);
}

#[test]
fn seven_tile_svg_is_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let inv = run_in(
        dir.path(),
        &["tiling", "verify", "--tiles", &data("seven.tiles"), "--layout", &data("seven.json"), "--svg"],
    );
    assert_eq!(inv.code, 0, "{}", inv.stderr);
    let text = fs::read_to_string(dir.path().join("layout.svg")).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.attribute("width"), Some("480"));
    assert_eq!(root.attribute("height"), Some("360"));
    let rects = root.children().filter(|n| n.has_tag_name("rect")).count();
    assert_eq!(rects, 7);
    assert_eq!(report(dir.path())["result"]["verdict"]["verdict"], "valid");
}

#[test]
fn partition_and_shape_svgs_parse() {
    let cases: [&[&str]; 4] = [
        &["fairpart", "solve", "--shape", "rect:1x4", "--ratio", "1:3", "--svg"],
        &["fairpart", "band", "--rect", "1x1", "--ratio", "1:3", "--svg"],
        &["shapes", "maxdiam", "--area", "0.5", "--svg"],
        &["shapes", "interp", "--t", "0.25", "--svg"],
    ];
    for args in cases {
        let dir = tempfile::tempdir().unwrap();
        let inv = run_in(dir.path(), args);
        assert_eq!(inv.code, 0, "{args:?}: {}", inv.stderr);
        let svg = fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap().path())
            .find(|p| p.extension().is_some_and(|e| e == "svg"))
            .unwrap();
        let text = fs::read_to_string(&svg).unwrap();
        let doc = roxmltree::Document::parse(&text).unwrap();
        assert!(doc.root_element().children().any(|n| n.has_tag_name("path")));
    }
}

#[test]
fn cube_obj_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let inv = run_in(dir.path(), &["poly", "build", "--solid", "cube", "--obj"]);
    assert_eq!(inv.code, 0);
    let obj: PathBuf = dir.path().join("cube_1.obj");
    let text = fs::read_to_string(&obj).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 8);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 6);

    let cmp = run(&["poly", "compare", "--solid", "cube", "--mesh", &obj.display().to_string(), "--json"]);
    assert_eq!(cmp.code, 0, "{}", cmp.stderr);
    let v: serde_json::Value = serde_json::from_str(&cmp.stdout).unwrap();
    assert_eq!(v["result"]["congruence_classes"], 1);
}

#[test]
fn tile_parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tiles");
    fs::write(&bad, "1 2\n# fine\n3 x\n").unwrap();
    let inv = run(&["tiling", "enumerate", "--tiles", &bad.display().to_string()]);
    assert_eq!(inv.code, 2);
    assert!(inv.stderr.contains("line 3"), "{}", inv.stderr);
}

#[test]
fn missing_file_and_bad_flags_are_usage_errors() {
    assert_eq!(run(&["tiling", "verify", "--tiles", "/nonexistent", "--layout", "/nonexistent"]).code, 2);
    assert_eq!(run(&["fairpart", "solve", "--shape", "blob", "--ratio", "1:3"]).code, 2);
    assert_eq!(run(&["shapes", "interp", "--t", "0.5", "--tol", "-1"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn json_numbers_are_strings_and_keys_sorted() {
    let inv = run(&["shapes", "interp", "--t", "0.5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&inv.stdout).unwrap();
    let area = v["result"]["metrics"]["area"].as_str().unwrap();
    let parsed: f64 = area.parse().unwrap();
    assert!((parsed - 0.7652).abs() < 1e-3);
    assert_eq!(area.split(['e', 'E']).next().unwrap().replace(['.', '-'], "").len(), 17);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["command", "result", "seed", "status", "tol"]);

    let t = run(&["tiling", "hcn", "--h", "60", "--i", "5", "--length", "118", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&t.stdout).unwrap();
    assert_eq!(v["result"]["context"]["length"], "118");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let cases: [&[&str]; 4] = [
        &["tiling", "search-iso", "--rooms", "4", "--json"],
        &["fairpart", "profile", "--shape", "rect:1x4", "--ratio", "1:3", "--samples", "16", "--json"],
        &["shapes", "crossover", "--json"],
        &["poly", "compare", "--solid", "rhombi", "--solid", "pseudo-rhombi", "--json"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a, b, "{args:?}");
    }
}
