use std::f64::consts::PI;

use unclab_core::campaign::{recheck, run_campaign, validity_map, MapCell};
use unclab_core::{Campaign, ClaimId, ClaimReport, Params};

fn campaign(claim: ClaimId, trials: u64, seed: u64, params: Params) -> Campaign {
    Campaign {
        claim_id: claim,
        trials,
        seed,
        hypothesis_override: false,
        tol: 1e-10,
        params,
    }
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let c = campaign(
        ClaimId::ThmFiniteContinuous,
        40,
        9,
        Params {
            bandwidth: Some([0.5, 1.5]),
            wt: Some([0.3, 1.0]),
            r_max: Some(3),
            nodes: Some(96),
            structured: true,
            ..Params::default()
        },
    );
    let one = in_pool(1, || {
        serde_json::to_string(&run_campaign(&c).unwrap()).unwrap()
    });
    let many = in_pool(4, || {
        serde_json::to_string(&run_campaign(&c).unwrap()).unwrap()
    });
    assert_eq!(one, many);
}

#[test]
fn every_violation_rechecks() {
    let cases = [
        campaign(
            ClaimId::ThmDiscrete,
            300,
            1,
            Params {
                degree: Some([1, 8]),
                delta: Some([0.05, 0.39]),
                r_max: Some(4),
                structured: true,
                ..Params::default()
            },
        ),
        campaign(
            ClaimId::LemmaHBound,
            300,
            2,
            Params {
                r: Some([1, 5]),
                length: Some([0.1, 6.0]),
                structured: true,
                ..Params::default()
            },
        ),
        campaign(
            ClaimId::ThmMainContinuous,
            30,
            3,
            Params {
                bandwidth: Some([0.5, 0.5]),
                wt: Some([0.5, 1.0]),
                r_max: Some(2),
                nodes: Some(200),
                structured: true,
                ..Params::default()
            },
        ),
    ];
    for c in cases {
        let rep = run_campaign(&c).unwrap();
        assert!(!rep.violations.is_empty(), "{} found nothing", c.claim_id);
        for v in &rep.violations {
            assert!(v.margin > c.tol);
            let back: ClaimReport =
                serde_json::from_str(&serde_json::to_string(v).unwrap()).unwrap();
            assert!(recheck(&back).unwrap());
        }
    }
}

#[test]
fn single_pair_h_campaign_is_clean() {
    let c = campaign(
        ClaimId::LemmaHBound,
        1000,
        4,
        Params {
            r: Some([1, 1]),
            length: Some([0.0, 2.0 * PI]),
            structured: true,
            ..Params::default()
        },
    );
    let rep = run_campaign(&c).unwrap();
    assert!(rep.violations.is_empty());
    assert!(rep.worst_margin.abs() < 1e-12);
}

#[test]
fn interval_only_maps_are_clean() {
    let template = campaign(
        ClaimId::ThmDiscrete,
        50,
        5,
        Params {
            r_max: Some(1),
            ..Params::default()
        },
    );
    let cells: Vec<MapCell> = (1..=6)
        .flat_map(|n| [0.25, 0.5, 1.0].map(|f| MapCell(n as f64, f * PI / n as f64)))
        .collect();
    let rows = validity_map(&template, &cells, false).unwrap();
    assert!(rows.iter().all(|r| r.violations == 0), "{rows:?}");

    let continuous = campaign(
        ClaimId::ThmMainContinuous,
        10,
        6,
        Params {
            r_max: Some(1),
            nodes: Some(64),
            structured: true,
            ..Params::default()
        },
    );
    let rows = validity_map(
        &continuous,
        &[MapCell(0.5, 1.0), MapCell(1.0, 0.5), MapCell(2.0, 0.25)],
        false,
    )
    .unwrap();
    assert!(rows.iter().all(|r| r.violations == 0), "{rows:?}");
}

#[test]
fn report_json_layout() {
    let c = campaign(
        ClaimId::LemmaSinCluster,
        3,
        7,
        Params {
            vars: Some([2, 3]),
            length: Some([0.0, 1.0]),
            grid: Some(200),
            ..Params::default()
        },
    );
    let js = serde_json::to_string(&run_campaign(&c).unwrap()).unwrap();
    assert!(js.starts_with(r#"{"campaign":{"claim_id":"lemma_sin_cluster","trials":3,"seed":7,"hypothesis_override":false,"tol":1e-10,"params":{"length":[0.0,1.0],"vars":[2,3],"grid":200}},"violations":[],"worst_margin":"#));
    assert!(js.ends_with(r#""runtime_ms":0}"#));
    let back: Campaign = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
    assert_eq!(back, c);
}

#[test]
fn hypothesis_gate_needs_override() {
    let mut c = campaign(
        ClaimId::ThmDiscrete,
        20,
        8,
        Params {
            degree: Some([4, 4]),
            delta: Some([1.0, 1.0]),
            r_max: Some(2),
            ..Params::default()
        },
    );
    assert!(run_campaign(&c).is_err());
    c.hypothesis_override = true;
    let rep = run_campaign(&c).unwrap();
    for v in &rep.violations {
        assert!(recheck(v).unwrap());
    }
}
