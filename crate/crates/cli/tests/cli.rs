use std::process::Command;

use circulant_cli::records::{AsymptoticRow, ConvergenceRow, EnergyRow, ScanRow, SpectrumRow};
use serde::de::DeserializeOwned;

struct Output {
    code: u8,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Output {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("circulant").chain(args.iter().copied());
    let code = circulant_cli::run(argv, &mut stdout, &mut stderr);
    Output {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn csv_rows<T: DeserializeOwned>(text: &str) -> Vec<T> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap()
}

fn json_rows<T: DeserializeOwned>(text: &str) -> Vec<T> {
    serde_json::from_str(text).unwrap()
}

/// csv and json for the same command decode to the same records.
fn both_formats<T>(args: &[&str]) -> Vec<T>
where
    T: DeserializeOwned + PartialEq + std::fmt::Debug,
{
    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let from_csv: Vec<T> = csv_rows(&ok(&csv_args));
    let from_json: Vec<T> = json_rows(&ok(&json_args));
    assert_eq!(from_csv, from_json, "{args:?}");
    from_csv
}

#[test]
fn spectrum_of_k5() {
    let text = ok(&["spectrum", "-r", "2", "-N", "5", "--format", "csv"]);
    assert!(text.starts_with("k,eigenvalue\n"));
    assert!(!text.contains('\r'));
    let rows: Vec<SpectrumRow> = csv_rows(&text);
    let values: Vec<f64> = rows.iter().map(|r| r.eigenvalue).collect();
    assert_eq!(values, vec![4.0, -1.0, -1.0, -1.0, -1.0]);
}

#[test]
fn spectrum_of_4_cycle() {
    let rows: Vec<SpectrumRow> = both_formats(&["spectrum", "-r", "1", "-N", "4"]);
    let values: Vec<f64> = rows.iter().map(|r| r.eigenvalue).collect();
    assert_eq!(values[0], 2.0);
    assert_eq!(values[2], -2.0);
    assert!(values[1].abs() < 1e-14 && values[3].abs() < 1e-14);
    let plain = ok(&["spectrum", "-r", "1", "-N", "4"]);
    assert_eq!(plain.lines().count(), 5);
}

#[test]
fn spectrum_rejects_n_below_2r_plus_1() {
    let out = run(&["spectrum", "-r", "2", "-N", "4"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("2r + 1"));
    assert_eq!(run(&["spectrum", "-r", "0", "-N", "4"]).code, 2);
}

#[test]
fn energy_examples() {
    let rows: Vec<EnergyRow> = both_formats(&["energy", "-r", "3", "-N", "7"]);
    assert_eq!(rows[0].energy, 12.0);
    assert_eq!(rows[0].method, "closed_complete");
    assert_eq!(rows[0].ratio, 2.0);

    let rows: Vec<EnergyRow> =
        both_formats(&["energy", "-r", "4", "-N", "10", "--method", "oracle"]);
    assert!((rows[0].energy - 16.0).abs() < 1e-6);
    assert_eq!(rows[0].method, "oracle");

    let rows: Vec<EnergyRow> =
        both_formats(&["energy", "-r", "2", "-N", "7", "--method", "direct"]);
    assert!((rows[0].energy - 11.20776).abs() < 1e-5);
    assert_eq!(rows[0].method, "direct");

    let rows: Vec<EnergyRow> =
        both_formats(&["energy", "-r", "2", "-N", "7", "--method", "closed"]);
    assert_eq!(rows[0].method, "closed_r2");
}

#[test]
fn energy_error_codes() {
    assert_eq!(
        run(&["energy", "-r", "3", "-N", "20", "--method", "closed"]).code,
        2
    );
    let capped = run(&["energy", "-r", "1", "-N", "600", "--method", "oracle"]);
    assert_eq!(capped.code, 3);
    assert!(capped.stderr.contains("cap"));
    assert_eq!(
        run(&[
            "energy",
            "-r",
            "1",
            "-N",
            "30",
            "--method",
            "oracle",
            "--oracle-cap",
            "10"
        ])
        .code,
        3
    );
    assert_eq!(run(&["energy", "-r", "1"]).code, 2);
    assert_eq!(
        run(&["energy", "-r", "1", "-N", "5", "--method", "magic"]).code,
        2
    );
}

#[test]
fn asymptotic_examples() {
    let rows: Vec<AsymptoticRow> = both_formats(&["asymptotic", "-r", "2"]);
    let row = &rows[0];
    for v in [row.ir_quadrature, row.ir_double_sum, row.ir_closed] {
        assert!((v - 1.65399).abs() < 1e-5);
    }
    let five: Vec<AsymptoticRow> = both_formats(&["asymptotic", "-r", "5"]);
    assert!((five[0].ir_closed - 2.087).abs() < 1e-3);
    let one: Vec<AsymptoticRow> = both_formats(&["asymptotic", "-r", "1"]);
    assert!((one[0].lebesgue - 1.43599).abs() < 1e-5);
    assert!(one[0].bound_low <= one[0].ir_closed && one[0].ir_closed <= one[0].bound_high);
    assert_eq!(run(&["asymptotic", "-r", "0"]).code, 2);
}

#[test]
fn scan_r3_only_hyper() {
    let rows: Vec<ScanRow> = both_formats(&[
        "scan",
        "-r",
        "3",
        "--min",
        "7",
        "--max",
        "100",
        "--only-hyper",
    ]);
    let ns: Vec<u64> = rows.iter().map(|r| r.n).collect();
    assert_eq!(ns, vec![10, 11, 12, 13, 14]);
    assert!(rows
        .iter()
        .all(|r| r.classification == "hyperenergetic" && r.margin > 0.0));
}

#[test]
fn scan_r1_has_no_hyperenergetic_graphs() {
    let out = run(&[
        "scan",
        "-r",
        "1",
        "--min",
        "3",
        "--max",
        "1000",
        "--only-hyper",
        "--format",
        "csv",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "r,N,energy,threshold,margin,classification\n");
    assert!(out.stderr.contains("hyperenergetic = 0"));
}

#[test]
fn scan_r5_exceptions() {
    let rows: Vec<ScanRow> = both_formats(&["scan", "-r", "5", "--min", "11", "--max", "100"]);
    assert_eq!(rows.len(), 90);
    let exceptions: Vec<(u64, &str)> = rows
        .iter()
        .filter(|r| r.classification != "hyperenergetic")
        .map(|r| (r.n, r.classification.as_str()))
        .collect();
    assert_eq!(
        exceptions,
        vec![(11, "boundary"), (12, "non_hyperenergetic")]
    );
    assert!(rows.windows(2).all(|w| w[0].n < w[1].n));
}

#[test]
fn scan_plain_has_summary_footer() {
    let text = ok(&["scan", "-r", "3", "--min", "7", "--max", "20"]);
    assert!(text.contains("# hyperenergetic = 5, non_hyperenergetic = 9 (of which boundary = 1)"));
    assert!(text.contains("no claim is made for N > 20"));
}

#[test]
fn scan_argument_errors() {
    assert_eq!(
        run(&["scan", "-r", "3", "--min", "50", "--max", "20"]).code,
        2
    );
    assert_eq!(run(&["scan", "-r", "3", "--max", "6"]).code, 2);
    assert_eq!(run(&["scan", "-r", "0", "--max", "20"]).code, 2);
    assert_eq!(
        run(&["scan", "-r", "3", "--max", "20", "--tol", "0"]).code,
        2
    );
    let capped = run(&["scan", "-r", "1", "--max", "20000"]);
    assert_eq!(capped.code, 2);
    assert!(capped.stderr.contains("--no-cap"));
}

#[test]
fn figure_series() {
    let left: Vec<ConvergenceRow> = both_formats(&["figure", "--id", "fig2_left"]);
    assert_eq!(left.len(), 201);
    assert!(left.iter().all(|p| (1.277..=1.287).contains(&p.ratio)));

    let right: Vec<ConvergenceRow> = both_formats(&["figure", "--id", "fig2_right"]);
    assert!(right.iter().all(|p| (1.659..=1.672).contains(&p.ratio)));

    let fig3: Vec<ConvergenceRow> = both_formats(&["figure", "--id", "fig3_left"]);
    assert_eq!(fig3.first().unwrap().n, 7);
    assert_eq!(fig3.last().unwrap().n, 60);
    assert_eq!(fig3.iter().filter(|p| p.ratio > 2.0).count(), 5);

    let fig4: Vec<ConvergenceRow> = both_formats(&["figure", "--id", "fig3_right"]);
    assert_eq!(fig4.len(), 292);
    assert!(fig4.iter().all(|p| (1.77..=2.26).contains(&p.ratio)));

    assert_eq!(run(&["figure", "--id", "fig9"]).code, 2);
}

#[test]
fn figure_output_is_byte_identical() {
    for format in ["csv", "json", "plain"] {
        let a = ok(&["figure", "--id", "fig3_right", "--format", format]);
        let b = ok(&["figure", "--id", "fig3_right", "--format", format]);
        assert_eq!(a, b);
    }
}

#[test]
fn output_file_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.csv");
    let path_str = path.to_str().unwrap();
    let out = run(&[
        "figure",
        "--id",
        "fig2_left",
        "--format",
        "csv",
        "--output",
        path_str,
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        written,
        ok(&["figure", "--id", "fig2_left", "--format", "csv"])
    );

    let missing = dir.path().join("no/such/dir/out.csv");
    let out = run(&[
        "spectrum",
        "-r",
        "1",
        "-N",
        "5",
        "--output",
        missing.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 1);
}

#[test]
fn json_numbers_are_numbers() {
    let value: serde_json::Value =
        serde_json::from_str(&ok(&["energy", "-r", "2", "-N", "7", "--format", "json"])).unwrap();
    let record = &value.as_array().unwrap()[0];
    assert!(record["energy"].is_f64());
    assert!(record["N"].is_u64());
    assert_eq!(record["method"], "closed_r2");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_circulant");
    let status = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(status(&["spectrum", "-r", "2", "-N", "5"]), 0);
    assert_eq!(status(&["spectrum", "-r", "2", "-N", "4"]), 2);
    assert_eq!(
        status(&["energy", "-r", "1", "-N", "513", "--method", "oracle"]),
        3
    );
    assert_eq!(status(&["--help"]), 0);
    let out = Command::new(bin)
        .args(["energy", "-r", "3", "-N", "7", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "r,N,energy,method,ratio\n3,7,12.0,closed_complete,2.0\n"
    );
}
