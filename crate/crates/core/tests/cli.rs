use std::process::{Command, Output};

fn spinorpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinorpow")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn mult_small_case() {
    let out = spinorpow(&["mult", "--n", "1", "--N", "4", "--s", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s_1,lambda_1,multiplicity_exact,multiplicity_asymptotic,ratio"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..3], &["1", "2", "3"]);
    assert_eq!(row[3].parse::<f64>().unwrap(), 4.0);
    assert_eq!(text.lines().last(), Some("# config: mult --n 1 --N 4 --s 1"));
}

#[test]
fn measure_normalizes_exactly() {
    let out = spinorpow(&["measure", "--n", "1", "--N", "2", "--y", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\n0,2,1,21,25,"));
    assert!(text.contains("\n1,0,1,4,25,"));
    assert!(text.contains("# normalization: 1\n"));
}

#[test]
fn plancherel_json_keeps_column_order() {
    let out = spinorpow(&["plancherel", "--n", "1", "--N", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let keys: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
    assert_eq!(keys.first().map(|k| k.as_str()), Some("s_1"));
    assert_eq!(rows[0]["probability_num"], 3);
    assert_eq!(rows[0]["probability_den"], 4);
}

#[test]
fn limit_rank_one_is_poisson() {
    let out = spinorpow(&["limit", "--n", "1", "--theta", "1.5", "--s-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut factorial = 1.0;
    for (s, line) in text.lines().skip(1).filter(|l| !l.starts_with('#')).enumerate() {
        if s > 0 {
            factorial *= s as f64;
        }
        let p: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        let poisson = 1.5f64.powi(s as i32) * (-1.5f64).exp() / factorial;
        assert!((p - poisson).abs() < 1e-12, "s={s}: {p} vs {poisson}");
    }
}

#[test]
fn converge_accepts_repeated_offsets() {
    let out = spinorpow(&["converge", "--n", "2", "--theta", "1,2", "--s", "0,0", "--s", "0,1", "--N", "64,128"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "N,s_1,s_2,theta_1,theta_2,p_exact,p_limit,rel_err");
    assert_eq!(rows.len(), 5);
    assert!(rows[1].starts_with("64,0,0,") && rows[2].starts_with("128,0,0,"));
}

#[test]
fn sample_is_byte_identical_across_runs() {
    let args = ["sample", "--n", "2", "--N", "8", "--y", "3/2,5/4", "--seed", "11", "--count", "2000"];
    let a = spinorpow(&args);
    let b = spinorpow(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = spinorpow(&["sample", "--n", "2", "--N", "8", "--y", "3/2,5/4", "--seed", "12", "--count", "2000"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("spinorpow-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mult.csv");
    let out = spinorpow(&["mult", "--n", "2", "--N", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("s_1,s_2,"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        vec!["mult", "--n", "2", "--N", "4", "--s", "2,1"],
        vec!["mult", "--n", "2", "--N", "4", "--s", "0,3"],
        vec!["mult", "--n", "0", "--N", "4"],
        vec!["char", "--n", "2", "--lambda", "2,1", "--y", "2,3"],
        vec!["measure", "--n", "1", "--N", "2", "--y", "-1"],
        vec!["measure", "--n", "1", "--N", "2", "--theta", "1"],
        vec!["limit", "--n", "2", "--theta", "1,0", "--s-max", "3"],
        vec!["bogus"],
    ] {
        let out = spinorpow(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn singular_point_exits_3() {
    let out = spinorpow(&["char", "--n", "2", "--lambda", "2,0", "--y", "2,2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = spinorpow(&["measure", "--n", "2", "--N", "4", "--y", "1,3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn scale_guard_exits_4_unless_forced() {
    let out = spinorpow(&["measure", "--n", "1", "--N", "100", "--y", "2"]);
    assert_eq!(out.status.code(), Some(4));
    let out = spinorpow(&["mult", "--n", "5", "--N", "2"]);
    assert_eq!(out.status.code(), Some(4));
    let out = spinorpow(&["measure", "--n", "2", "--N", "4096", "--theta", "1,2", "--mode", "float"]);
    assert_eq!(out.status.code(), Some(4));
    let out = spinorpow(&["measure", "--n", "1", "--N", "100", "--y", "2", "--force"]);
    assert_eq!(out.status.code(), Some(0));
}
