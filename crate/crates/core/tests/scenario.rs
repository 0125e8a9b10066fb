use proptest::prelude::*;
use quadtorque::angular::HalfInt;
use quadtorque::exec::Execution;
use quadtorque::fibermodes::ModeId;
use quadtorque::scenario::*;
use quadtorque::Error;

fn preset_config() -> SweepConfig {
    load_config(PAPER_FIG2_FIG4).unwrap()
}

fn csv_bytes(table: &SweepTable) -> Vec<u8> {
    let mut out = Vec::new();
    write_csv(table, &mut out).unwrap();
    out
}

#[test]
fn preset_sweep_has_full_cardinality() {
    let cfg = preset_config();
    let table = run_sweep(&cfg).unwrap();
    assert_eq!(table.rows.len(), 4 * 5 * 56);
    // ordering: drive, then M', then ascending r
    let first = &table.rows[..56];
    assert!(first
        .iter()
        .all(|r| r.mode == ModeId::HE11 && r.m_prime == HalfInt::int(0)));
    assert!(first.windows(2).all(|w| w[0].r < w[1].r));
    assert_eq!(table.rows[56].m_prime, HalfInt::int(1));
    assert_eq!(table.rows.last().unwrap().mode, ModeId::HE21);
}

#[test]
fn preset_sweep_reproduces_structural_zeros() {
    let table = run_sweep(&preset_config()).unwrap();
    let te_pi: Vec<_> = table
        .rows
        .iter()
        .filter(|r| r.mode == ModeId::TE01 && r.m_prime == HalfInt::int(2))
        .collect();
    assert_eq!(te_pi.len(), 56);
    assert!(te_pi.iter().all(|r| r.abs_omega == 0.0 && r.torque_z == 0.0));
    let he21_q2: Vec<_> = table
        .rows
        .iter()
        .filter(|r| r.mode == ModeId::HE21 && r.m_prime == HalfInt::int(4))
        .collect();
    assert!(he21_q2.iter().all(|r| r.torque_z == 0.0 && r.abs_omega > 0.0));
}

#[test]
fn csv_is_byte_identical_across_runs_and_schedulers() {
    let cfg = preset_config();
    let a = csv_bytes(&run_sweep_with(&cfg, Execution::Sequential).unwrap());
    let b = csv_bytes(&run_sweep_with(&cfg, Execution::Sequential).unwrap());
    assert_eq!(a, b);
    assert_eq!(a, csv_bytes(&run_sweep(&cfg).unwrap()));
    #[cfg(feature = "parallel")]
    assert_eq!(a, csv_bytes(&run_sweep_with(&cfg, Execution::Parallel).unwrap()));
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with(&format!("{CSV_HEADER}\n")));
    assert!(!text.contains('\r'));
    assert_eq!(text.lines().count(), 1 + 4 * 5 * 56);
}

#[test]
fn emit_csv_writes_file() {
    let mut cfg = preset_config();
    cfg.n_points = 3;
    let table = run_sweep(&cfg).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    emit_csv(&table, &path).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), csv_bytes(&table));
}

#[test]
fn unguided_mode_reports_v_number() {
    let text = PAPER_FIG2_FIG4.replacen("mode = \"HE21\"", "mode = \"EH11\"", 1);
    let cfg = load_config(&text).unwrap();
    match run_sweep(&cfg) {
        Err(Error::ModeNotGuided { mode, v_number }) => {
            assert_eq!(mode, "EH11");
            assert!((v_number - 3.6304).abs() < 1e-4);
        }
        other => panic!("expected ModeNotGuided, got {other:?}"),
    }
}

#[test]
fn config_errors_carry_line_numbers() {
    let text = PAPER_FIG2_FIG4.replace("r_min = \"290 nm\"", "r_min = \"250 nm\"");
    let err = load_config(&text).unwrap_err();
    let line = text.lines().position(|l| l.starts_with("r_min")).unwrap() + 1;
    assert_eq!(err.line, Some(line));
    assert!(err.key.contains("r_min"));

    let err = load_config(&PAPER_FIG2_FIG4.replace("\"280 nm\"", "\"280 furlongs\"")).unwrap_err();
    assert!(err.key.contains("radius"));
    assert!(load_config(&PAPER_FIG2_FIG4.replace("\"280 nm\"", "280")).is_err());
    assert!(load_config(&format!("{PAPER_FIG2_FIG4}\n[extra]\nx = 1\n")).is_err());
}

#[test]
fn config_round_trips_through_text() {
    let cfg = preset_config();
    let again = load_config(&to_config_text(&cfg)).unwrap();
    assert_eq!(cfg, again);
}

fn with_units(radius: &str, power: &str) -> SweepConfig {
    let text = PAPER_FIG2_FIG4
        .replace("radius = \"280 nm\"", &format!("radius = \"{radius}\""))
        .replace("power = \"1 nW\"", &format!("power = \"{power}\""));
    load_config(&text).unwrap()
}

proptest! {
    #[test]
    fn unit_prefixes_are_equivalent(radius_nm in 200u32..290, power_nw in 1u32..5000) {
        let a = with_units(&format!("{radius_nm} nm"), &format!("{power_nw} nW"));
        let b = with_units(&format!("{radius_nm}e-9 m"), &format!("{power_nw}e-9 W"));
        let c = with_units(&format!("{}e-3 um", radius_nm), &format!("{}e-3 uW", power_nw));
        prop_assert_eq!(a.fiber, b.fiber);
        prop_assert_eq!(&a.drives, &b.drives);
        prop_assert_eq!(a.fiber, c.fiber);
        prop_assert_eq!(&a.drives, &c.drives);
    }
}

#[test]
fn radii_are_inclusive_and_even() {
    let rs = radii(290e-9, 840e-9, 56);
    assert_eq!(rs.len(), 56);
    assert_eq!(rs[0], 290e-9);
    assert_eq!(rs[55], 840e-9);
    assert!((rs[1] - rs[0] - 10e-9).abs() < 1e-20);
    assert!(radii(1.0, 2.0, 0).is_empty());
    assert_eq!(radii(1.0, 2.0, 1), vec![1.0]);
}

#[test]
fn presets_are_listed() {
    for name in PRESETS {
        assert!(load_config(preset(name).unwrap()).is_ok());
    }
    assert!(preset("nope").is_none());
}
