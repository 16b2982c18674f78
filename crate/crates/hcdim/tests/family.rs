use std::fs;

use hcdim::family::{default_a_grid, rerun_witness, LevelValue, VerifyConfig, WitnessKind};
use hcdim::formats::{parse_algebra, parse_lie, parse_module};
use hcdim::report::{parse_json_report, render_report, CSV_HEADER};
use hcdim::{parse_presentation, psi_profile_compare, verify_paper, Error, ReportFormat};
use hcdim_core::lie::{ce_cohomology_dims, LieAlgebra};
use hcdim_core::linalg::rat;
use hcdim_core::ncalg::{family_presentation, NcError};
use hcdim_core::{parse_rational, Rational};
use tempfile::TempDir;

const A1_JSON: &str = r#"{ "generators": ["x","y"], "relations": [ { "terms": [ {"coeff": "1", "word": ["x","y"]}, {"coeff": "-1", "word": ["y","x"]}, {"coeff": "-1", "word": ["x"]} ] } ] }"#;

fn write(dir: &TempDir, name: &str, text: &str) -> std::path::PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn config(grid: &[Rational]) -> VerifyConfig {
    VerifyConfig {
        a_grid: grid.to_vec(),
        ..VerifyConfig::default()
    }
}

#[test]
fn presentation_files() {
    let dir = TempDir::new().unwrap();
    let p = parse_presentation(&write(&dir, "a1.json", A1_JSON)).unwrap();
    assert_eq!(p.generator_count(), 2);
    assert_eq!(p.relations().len(), 1);
    assert_eq!(p, family_presentation(&rat(1, 1)));

    let free = parse_presentation(&write(&dir, "free.json", r#"{"generators":["x"],"relations":[]}"#)).unwrap();
    assert!(free.relations().is_empty());

    let bad = A1_JSON.replacen("\"1\"", "\"1/0\"", 1);
    match parse_presentation(&write(&dir, "bad.json", &bad)) {
        Err(Error::Field { field, .. }) => assert_eq!(field, "relations[0].terms[0].coeff"),
        other => panic!("{other:?}"),
    }
    let dup = r#"{"generators":["x","x"],"relations":[]}"#;
    assert!(matches!(
        parse_presentation(&write(&dir, "dup.json", dup)),
        Err(Error::Nc(NcError::DuplicateGenerator(_)))
    ));
    let zero =
        r#"{"generators":["x"],"relations":[{"terms":[{"coeff":"1","word":["x"]},{"coeff":"-1","word":["x"]}]}]}"#;
    assert!(matches!(
        parse_presentation(&write(&dir, "zero.json", zero)),
        Err(Error::Nc(NcError::ZeroRelation(0)))
    ));
    match parse_presentation(&write(&dir, "broken.json", "{\n  \"generators\": [\"x\",\n}")) {
        Err(Error::Json { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
    let unknown = r#"{"generators":["x"],"relations":[{"terms":[{"coeff":"1","word":["z"]}]}]}"#;
    assert!(matches!(
        parse_presentation(&write(&dir, "u.json", unknown)),
        Err(Error::Field { .. })
    ));
}

#[test]
fn lie_module_and_algebra_files() {
    let dir = TempDir::new().unwrap();
    let lie = r#"{"structure_constants": [[["0","0"],["1","0"]],[["-1","0"],["0","0"]]],
                 "module": {"dimension": 1, "actions": [[], [[0,0,"-1"]]]}}"#;
    let (g, v) = parse_lie(&write(&dir, "lie.json", lie)).unwrap();
    assert_eq!(ce_cohomology_dims(&g, &v, 2).unwrap(), vec![0, 1, 1]);
    let trivial = r#"{"structure_constants": [[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}"#;
    let (g, v) = parse_lie(&write(&dir, "ab.json", trivial)).unwrap();
    assert_eq!(ce_cohomology_dims(&g, &v, 2).unwrap(), vec![1, 2, 1]);

    let module = r#"{"dimension": 1, "actions": [[[0,0,"1"]], []]}"#;
    assert!(parse_module(&write(&dir, "m.json", module), &LieAlgebra::nonabelian_2d()).is_err());

    let dual = r#"{"dimension": 2, "unit": ["1","0"], "multiplication": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]]}"#;
    let (alg, m) = parse_algebra(&write(&dir, "dual.json", dual)).unwrap();
    assert_eq!(
        hcdim_core::hochschild::bar_hh_dims(&alg, &m, 3).unwrap(),
        vec![2, 1, 1, 1]
    );
}

#[test]
fn small_grids() {
    let report = verify_paper(&config(&[rat(0, 1), rat(1, 1)])).unwrap();
    let verdicts: Vec<_> = report
        .rows
        .iter()
        .map(|r| (r.verdict.lower, r.verdict.upper, r.verdict.exact))
        .collect();
    assert_eq!(verdicts, vec![(1, 1, true), (2, 2, true)]);

    let grid = [rat(-1, 1), rat(0, 1), rat(1, 1), rat(2, 1)];
    let report = verify_paper(&config(&grid)).unwrap();
    let column: Vec<_> = report.rows.iter().map(|r| r.verdict.lower).collect();
    assert_eq!(column, vec![2, 1, 2, 2]);
    assert!(report.rows.iter().all(|r| r.verdict.exact));
}

#[test]
fn row_contents() {
    let report = verify_paper(&config(&[rat(0, 1), rat(1, 1)])).unwrap();
    let zero = &report.rows[0];
    assert_eq!(zero.profile.structural_vanishing_above, 1);
    for level in &zero.profile.levels[..2] {
        assert_eq!(level.value, LevelValue::Degreewise { dims: vec![1; 11] });
    }
    let one = &report.rows[1];
    let w = one.witness.as_ref().unwrap();
    assert_eq!(w.level, 2);
    assert_eq!(
        w.kind,
        WitnessKind::Character {
            values: vec!["0".into(), "-1".into()]
        }
    );
    assert_eq!(one.profile.structural_vanishing_above, 2);
}

#[test]
fn witnesses_reproduce_their_lower_bounds() {
    let report = verify_paper(&VerifyConfig::default()).unwrap();
    for row in &report.rows {
        let a = parse_rational(&row.a).unwrap();
        let w = row.witness.as_ref().unwrap();
        assert!(rerun_witness(&a, w).unwrap() > 0, "a = {}", row.a);
        assert_eq!(w.level, row.verdict.lower);
    }
}

#[test]
fn narrow_scan_is_inconclusive_not_an_error() {
    let cfg = VerifyConfig {
        a_grid: vec![rat(1, 1)],
        character_grid: vec![rat(0, 1), rat(3, 1)],
        ..VerifyConfig::default()
    };
    let row = &verify_paper(&cfg).unwrap().rows[0];
    assert_eq!((row.verdict.lower, row.verdict.upper, row.verdict.exact), (1, 2, false));
    assert_eq!(row.verdict.status, "inconclusive");
}

#[test]
fn preconditions() {
    let cfg = VerifyConfig {
        truncation: 1,
        ..VerifyConfig::default()
    };
    assert!(verify_paper(&cfg).unwrap_err().is_usage());
    let cfg = VerifyConfig {
        n_max: 2,
        ..VerifyConfig::default()
    };
    assert!(verify_paper(&cfg).unwrap_err().is_usage());
    assert!(matches!(
        psi_profile_compare(&rat(0, 1), 4),
        Err(Error::Nc(NcError::ZeroParameter))
    ));
}

#[test]
fn psi_examples() {
    for a in [rat(2, 1), rat(1, 1), rat(-3, 1)] {
        assert!(psi_profile_compare(&a, 6).unwrap(), "a = {a}");
    }
}

#[test]
fn reports_round_trip_and_are_stable() {
    let report = verify_paper(&config(&default_a_grid())).unwrap();
    let json = render_report(&report, ReportFormat::Json).unwrap();
    assert_eq!(parse_json_report(&json).unwrap(), report);
    let again = verify_paper(&config(&default_a_grid())).unwrap();
    assert_eq!(render_report(&again, ReportFormat::Json).unwrap(), json);

    let csv = render_report(&report, ReportFormat::Csv).unwrap();
    assert_eq!(csv.lines().next().unwrap(), CSV_HEADER.join(","));
    assert_eq!(csv.lines().count(), 1 + 7 * 5);
    assert_eq!(render_report(&again, ReportFormat::Csv).unwrap(), csv);

    let dir = TempDir::new().unwrap();
    let path = dir.path().join("r.json");
    hcdim::emit_report(&report, ReportFormat::Json, Some(&path)).unwrap();
    assert_eq!(fs::read_to_string(&path).unwrap(), json);
}

#[test]
fn json_keys_are_sorted() {
    let report = verify_paper(&config(&[rat(1, 1)])).unwrap();
    let json = render_report(&report, ReportFormat::Json).unwrap();
    let top: Vec<&str> = json
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    assert_eq!(top, vec!["character_grid", "n_max", "rows", "truncation"]);
}
