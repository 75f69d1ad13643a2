//! End-to-end CLI tests: golden reports pin the wire schema, renders must
//! be byte-stable, and the process exit codes follow the 0/2/3 contract.

use std::process::Command as Process;

use taxicurves_cli::{execute, parse_cli_from};

fn run_case(args: &[&str]) -> String {
    let cli = parse_cli_from(std::iter::once("taxicurves").chain(args.iter().copied()))
        .expect("arguments parse");
    execute(&cli.command).expect("command succeeds").text
}

fn value(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("report parses as JSON")
}

#[test]
fn golden_classify_reports() {
    assert_eq!(
        run_case(&["classify", "--family", "ellipse", "--foci", "0,0;2,0", "--gamma", "-4"]),
        include_str!("golden/classify_e1.json")
    );
    assert_eq!(
        run_case(&["classify", "--family", "hyperbola", "--foci", "0,0;4,2", "--gamma", "-4"]),
        include_str!("golden/classify_h3.json")
    );
    assert_eq!(
        run_case(&[
            "classify",
            "--family",
            "parabola",
            "--foci",
            "0,0",
            "--line",
            "1,0,-2",
            "--eccentricity",
            "0.5"
        ]),
        include_str!("golden/classify_p4.json")
    );
}

#[test]
fn golden_measure_reports() {
    assert_eq!(
        run_case(&["measure", "--family", "trifocal", "--sum", "3"]),
        include_str!("golden/measure_trifocal_s3.json")
    );
    assert_eq!(
        run_case(&["measure", "--family", "circle", "--radius", "1"]),
        include_str!("golden/measure_circle_r1.json")
    );
}

#[test]
fn golden_scan_reports() {
    assert_eq!(
        run_case(&["scan", "--foci", "-1,0;1,0;0,0", "--sum", "3", "--step", "0.25"]),
        include_str!("golden/scan_trifocal.json")
    );
    assert_eq!(
        run_case(&["scan", "--foci", "0,0", "--sum", "1", "--step", "0.25", "--format", "csv"]),
        include_str!("golden/scan_circle.csv")
    );
}

#[test]
fn golden_fermat_report() {
    assert_eq!(
        run_case(&["fermat", "--foci", "0,0;2,1"]),
        include_str!("golden/fermat_rectangle.json")
    );
}

#[test]
fn golden_renders_and_byte_stability() {
    let circle = &["render", "--family", "circle", "--radius", "1"];
    let first = run_case(circle);
    let second = run_case(circle);
    assert_eq!(first, second, "identical requests must render identical bytes");
    assert_eq!(first, include_str!("golden/render_circle.svg"));

    let hyperbola = &[
        "render",
        "--family",
        "hyperbola",
        "--foci",
        "0,0;4,2",
        "--gamma",
        "-4",
        "--bbox",
        "-2,-2,6,4",
        "--resolution",
        "48",
    ];
    let first = run_case(hyperbola);
    assert_eq!(first, run_case(hyperbola));
    assert_eq!(first, include_str!("golden/render_hyperbola.svg"));
    // An open hyperbola branch renders as a non-closed polyline.
    assert!(first.contains("<path"));
}

#[test]
fn render_trifocal_octagon_has_eight_vertices_and_three_markers() {
    let svg = run_case(&["render", "--family", "trifocal", "--sum", "4"]);
    let path = svg.lines().find(|l| l.starts_with("<path")).expect("curve path present");
    // Eight vertices: one M plus seven L commands, closed with Z.
    assert_eq!(path.matches("L").count(), 7);
    assert!(path.contains('Z'));
    assert_eq!(svg.matches("#d62728").count(), 3);
}

#[test]
fn classify_and_measure_agree_on_the_class() {
    for (foci, gamma) in [("0,0;2,0", "-4"), ("0,0;2,1", "-5"), ("0,0;2,1", "-3")] {
        let classified = value(&run_case(&[
            "classify", "--family", "ellipse", "--foci", foci, "--gamma", gamma,
        ]));
        let measured =
            value(&run_case(&["measure", "--family", "ellipse", "--foci", foci, "--gamma", gamma]));
        assert_eq!(classified["class"], measured["class"], "foci {foci} gamma {gamma}");
        assert_eq!(classified["regime"], measured["regime"]);
    }
}

#[test]
fn reports_carry_the_documented_keys() {
    let report = value(include_str!("golden/measure_trifocal_s3.json"));
    for key in [
        "command",
        "family",
        "foci",
        "sum",
        "formula",
        "formula_exact",
        "oracle",
        "reconciliation",
        "warnings",
    ] {
        assert!(report.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(report["formula_exact"]["area"], "4/3");
    assert_eq!(report["formula_exact"]["perimeter"], "16/3");
    assert_eq!(report["reconciliation"]["area_agrees"], false);
    assert_eq!(report["reconciliation"]["perimeter_agrees"], true);

    let report = value(include_str!("golden/classify_e1.json"));
    assert_eq!(report["class"], "hexagon");
    assert_eq!(report["regime"], "E.1");
    assert_eq!(report["delta"], 2.0);
}

#[test]
fn csv_rows_match_the_column_count() {
    let json = value(&run_case(&["scan", "--foci", "0,0", "--sum", "1", "--step", "0.25"]));
    let csv =
        run_case(&["scan", "--foci", "0,0", "--sum", "1", "--step", "0.25", "--format", "csv"]);
    let rows = csv.lines().count();
    assert_eq!(csv.lines().next(), Some("x,min_y,max_y"));
    assert_eq!(rows as u64 - 1, json["columns_hit"].as_u64().unwrap());
}

// -- process-level exit codes -------------------------------------------------

fn exit_code(args: &[&str]) -> i32 {
    Process::new(env!("CARGO_BIN_EXE_taxicurves"))
        .args(args)
        .output()
        .expect("binary runs")
        .status
        .code()
        .expect("exit code")
}

#[test]
fn extrapolated_classes_carry_warnings() {
    let report = value(&run_case(&[
        "classify", "--family", "ellipse", "--foci", "0,0;2,1", "--gamma", "-1",
    ]));
    assert_eq!(report["class"], "empty");
    assert_eq!(report["extrapolated"], true);
    assert!(report.get("regime").is_none());
    assert_eq!(report["warnings"].as_array().unwrap().len(), 1);

    let report = value(&run_case(&[
        "classify",
        "--family",
        "hyperbola",
        "--foci",
        "0,0;4,2",
        "--gamma",
        "-8",
    ]));
    assert_eq!(report["class"], "degenerate");
    assert_eq!(report["extrapolated"], true);
}

#[test]
fn format_misuse_is_rejected() {
    let cli =
        parse_cli_from(["taxicurves", "scan", "--foci", "0,0", "--sum", "1", "--format", "svg"])
            .unwrap();
    let err = execute(&cli.command).unwrap_err();
    assert_eq!(err.code, 2);

    let cli = parse_cli_from([
        "taxicurves",
        "measure",
        "--family",
        "circle",
        "--radius",
        "1",
        "--format",
        "csv",
    ])
    .unwrap();
    let err = execute(&cli.command).unwrap_err();
    assert_eq!(err.code, 2);

    let cli = parse_cli_from([
        "taxicurves",
        "render",
        "--family",
        "circle",
        "--radius",
        "1",
        "--format",
        "json",
    ])
    .unwrap();
    let err = execute(&cli.command).unwrap_err();
    assert_eq!(err.code, 2);
}

#[test]
fn scan_accepts_fractional_sum() {
    let report =
        value(&run_case(&["scan", "--foci", "-1,0;1,0;0,0", "--sum", "5/2", "--step", "0.05"]));
    assert_eq!(report["sum"], 2.5);
    // Default window is the exact extent of the region.
    assert_eq!(report["start_x"], -0.5);
    assert_eq!(report["end_x"], 0.5);
}

#[test]
fn process_exit_codes() {
    // Success.
    assert_eq!(exit_code(&["measure", "--family", "circle", "--radius", "1"]), 0);
    // Invalid input, including argument errors and unwritable outputs.
    assert_eq!(exit_code(&["classify", "--family", "circle"]), 2);
    assert_eq!(exit_code(&["scan", "--foci", "abc", "--sum", "1"]), 2);
    assert_eq!(exit_code(&["classify", "--family", "nonsense"]), 2);
    assert_eq!(
        exit_code(&["render", "--family", "hyperbola", "--foci", "0,0;4,2", "--gamma", "-4"]),
        2
    );
    assert_eq!(
        exit_code(&[
            "measure",
            "--family",
            "circle",
            "--radius",
            "1",
            "--out",
            "/no/such/dir/r.json",
        ]),
        2
    );
    // Empty or degenerate regions.
    assert_eq!(exit_code(&["scan", "--foci", "0,0", "--sum", "-1"]), 3);
    assert_eq!(
        exit_code(&["measure", "--family", "ellipse", "--foci", "0,0;2,1", "--gamma", "-1"]),
        3
    );
    assert_eq!(exit_code(&["measure", "--family", "trifocal", "--sum", "2"]), 3);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = std::env::temp_dir().join("taxicurves-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let code = exit_code(&[
        "measure",
        "--family",
        "circle",
        "--radius",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, include_str!("golden/measure_circle_r1.json"));
    std::fs::remove_file(&path).ok();
}
