use accretive::harness::{run_sweep, SweepConfig};
use accretive::Tolerance;

// instances pushed close to the edge of the disk should make the bound nearly tight
#[test]
fn tightness_near_the_disk_edge() {
    let config = SweepConfig {
        master_seed: 11,
        trials: 2_000,
        case_filter: Some("thm.abs_real.a".into()),
        fill: 0.999,
        ..SweepConfig::default()
    };
    let report = run_sweep(&config).unwrap();
    let case = report.case("thm.abs_real.a").unwrap();
    assert_eq!(case.fail, 0);
    assert_eq!(case.hyp_met, config.trials);
    let slack = case.min_slack.unwrap();
    assert!(slack >= -config.tol.rel && slack <= 0.05, "min slack {slack}");
}

// exactly on the disk boundary nothing may fail at a looser tolerance
#[test]
fn boundary_suite() {
    for prefix in ["thm.", "cor.", "prop."] {
        let config = SweepConfig {
            master_seed: 12,
            trials: 300,
            case_filter: Some(prefix.into()),
            fill: 1.0,
            tol: Tolerance::new(1e-6).unwrap(),
            ..SweepConfig::default()
        };
        let report = run_sweep(&config).unwrap();
        for c in &report.cases {
            assert_eq!(c.fail, 0, "{} failed on the boundary", c.case_id);
        }
    }
}
