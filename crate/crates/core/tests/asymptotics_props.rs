mod common;

use common::*;
use vnum_core::asymptotics::*;
use vnum_core::engine::{v_oracle, SearchConfig, DEFAULT_BUDGET};
use vnum_core::Graph;

const CFG: SearchConfig = SearchConfig {
    budget: DEFAULT_BUDGET,
};

#[test]
fn power_sequences_respect_alpha_lower_bound() {
    let mut ideals = m_primary_corpus(81, 15);
    ideals.extend(general_corpus(82, 15));
    ideals.push(Graph::cycle(5).unwrap().edge_ideal().unwrap());
    for i in ideals {
        let seq = power_sequence(&i, 3, &CFG).unwrap();
        let alpha = seq.alpha;
        for e in &seq.values {
            assert_eq!(e.alpha, e.n as u64 * alpha);
            assert!(e.alpha - 1 <= e.v.value, "{i} ^ {}", e.n);
            assert!(e.v.is_valid_for(&i.power(e.n).unwrap()));
        }
    }
}

#[test]
fn default_certificates_hold() {
    let mut ideals = m_primary_corpus(91, 10);
    ideals.push(Graph::cycle(5).unwrap().edge_ideal().unwrap());
    ideals.push(Graph::path(5).unwrap().edge_ideal().unwrap());
    for i in ideals {
        let f = default_min_degree_generator(&i).unwrap();
        match linear_bound_certificate(&i, &f, 8, 3, &CFG) {
            Ok(cert) => assert!(cert.holds(), "{i}: {cert:?}"),
            Err(vnum_core::Error::NoStabilization { .. }) => {}
            Err(e) => panic!("{i}: {e}"),
        }
    }
}

#[test]
fn v_le_reg_on_corpus() {
    for i in m_primary_corpus(101, 100) {
        let r = check_v_le_reg(&i, &CFG).unwrap();
        assert!(r.holds, "{i}");
        assert_eq!(r.v, v_oracle(&i, &CFG).unwrap().value);
    }
}

#[test]
fn reg_gap_family_matches_closed_forms() {
    for t in 2..=3usize {
        for a1 in 2..=6u64 {
            for a2 in 3..=7u64 {
                for u in 1..a1 {
                    for n in 1..a2.saturating_sub(u) {
                        let mut a = vec![a1, a2];
                        if t == 3 {
                            a.push(3);
                        }
                        let r = reg_gap_family(&a, u, n, &CFG).unwrap();
                        assert!(r.holds(), "{a:?} u={u} n={n}: {r:?}");
                        assert_eq!(r.gap, n);
                    }
                }
            }
        }
    }
}

#[test]
fn power_lower_bound_past_threshold() {
    for i in m_primary_corpus(111, 30) {
        let probe = check_power_lower_vs_base(&i, 1, &CFG).unwrap();
        let r = check_power_lower_vs_base(&i, probe.threshold_s, &CFG).unwrap();
        assert!(r.guaranteed() && r.holds, "{i}: {r:?}");
    }
}
