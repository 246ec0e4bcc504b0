use supersemi::verify::{self, replay, run, run_suite, trial_seed, RunConfig, Suite};

fn lines(config: &RunConfig) -> Vec<String> {
    run(config).unwrap().iter().map(|r| r.to_json_line()).collect()
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let base = RunConfig {
        trials: 60,
        ..RunConfig::default()
    };
    let one = lines(&RunConfig { jobs: Some(1), ..base.clone() });
    let four = lines(&RunConfig { jobs: Some(4), ..base.clone() });
    assert_eq!(one, four);
    assert_eq!(one.len(), Suite::ALL.len());
}

#[test]
fn different_seeds_give_different_samples() {
    let a = run_suite(Suite::Tsg, 4, 1, 50);
    let b = run_suite(Suite::Tsg, 4, 2, 50);
    assert_ne!(a.observations, b.observations);
}

#[test]
fn replay_reproduces_a_refutation() {
    let full = run_suite(Suite::Tables, 4, verify::DEFAULT_SEED, 200);
    let obs = full.observation("S*T in S or T").unwrap();
    let first = obs.refutations.first().expect("some S*T products leave S and T");
    let again = replay(Suite::Tables, 4, verify::DEFAULT_SEED, first.trial).unwrap();
    let obs2 = again.observation("S*T in S or T").unwrap();
    assert_eq!(obs2.refutations, vec![first.clone()]);
    assert_eq!(first.seed, trial_seed(verify::DEFAULT_SEED, "tables", first.trial));
}

#[test]
fn replay_matches_per_trial_tallies() {
    let r = replay(Suite::Kernel, 4, 42, 0).unwrap();
    assert_eq!(r.trials, 1);
    assert!(r.passed());
    assert_eq!(r.law("generator-square").unwrap().checks, 4);
    let r = replay(Suite::Kernel, 4, 42, 5).unwrap();
    assert!(r.law("generator-square").is_none());
    assert!(replay(Suite::Kernel, 0, 42, 0).is_err());
}

#[test]
fn report_json_shape() {
    let r = run_suite(Suite::Star, 3, 9, 5);
    let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["suite", "trials", "failures", "gens", "seed", "laws", "counterexamples", "observations"]
    );
    assert_eq!(v["suite"], "star");
    assert_eq!(v["trials"], 5);
    assert_eq!(v["failures"], 0);
}

#[test]
fn band_alphas_are_distinct() {
    for gens in 2..=6 {
        let a = verify::band_alphas(gens, 42);
        assert_eq!(a.len(), 3);
        assert!(a[0] != a[1] && a[1] != a[2] && a[0] != a[2]);
        assert!(a.iter().all(|x| x.is_odd() && !x.is_zero()));
    }
}
