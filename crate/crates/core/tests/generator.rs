//! Generator soundness against a half-edge pairing oracle and between the two
//! augmentation strategies.

mod oracles;

use std::collections::BTreeSet;

use hcolor::generate::{cubic_graphs, GenFilter, Strategy};
use hcolor::graph::{canonical_form, Multigraph};
use oracles::{filters, generated_codes, pairing_codes};

#[test]
fn pairing_oracle_agrees_up_to_six() {
    for n in [2, 4, 6] {
        for f in filters(n) {
            let expected = pairing_codes(n, &f);
            for strategy in [Strategy::EdgeInsertion, Strategy::VertexInsertion] {
                let got = generated_codes(n, &f, strategy).expect("isomorphic duplicates");
                assert_eq!(got, expected, "{f:?} {strategy:?}");
            }
        }
    }
}

#[test]
fn strategies_agree_on_form_sets_up_to_eight() {
    for n in [2, 4, 6, 8] {
        for f in filters(n) {
            let a = cubic_graphs(n, &f, Strategy::EdgeInsertion).unwrap();
            let b = cubic_graphs(n, &f, Strategy::VertexInsertion).unwrap();
            let fa: BTreeSet<_> = a.iter().map(|g| canonical_form(g).unwrap()).collect();
            let fb: BTreeSet<_> = b.iter().map(|g| canonical_form(g).unwrap()).collect();
            assert_eq!(fa.len(), a.len());
            assert_eq!(fa, fb, "{f:?}");
        }
    }
}

#[test]
fn strategies_agree_on_counts_at_ten() {
    // Generation depends only on simplicity; the other flags filter its output.
    for simple in [false, true] {
        let base = GenFilter {
            simple_only: simple,
            ..GenFilter::new(10)
        };
        let a = cubic_graphs(10, &base, Strategy::EdgeInsertion).unwrap();
        let b = cubic_graphs(10, &base, Strategy::VertexInsertion).unwrap();
        assert_eq!(a.len(), b.len());
        for f in filters(10).into_iter().filter(|f| f.simple_only == simple) {
            let ca = a.iter().filter(|g| f.accepts(g)).count();
            let cb = b.iter().filter(|g| f.accepts(g)).count();
            assert_eq!(ca, cb, "{f:?}");
        }
    }
}

#[test]
fn emitted_graphs_are_cubic_distinct_and_filtered() {
    for f in filters(10) {
        let all = cubic_graphs(10, &f, Strategy::VertexInsertion).unwrap();
        let forms: BTreeSet<_> = all.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), all.len());
        for g in &all {
            assert!(g.is_cubic());
            assert_eq!(g.n(), 10);
            assert!(f.accepts(g));
            assert!(Multigraph::cubic(g.n(), &g.edge_list().collect::<Vec<_>>()).is_ok());
        }
    }
}

#[test]
fn counts_per_order() {
    let count = |n, f: GenFilter| cubic_graphs(n, &f, Strategy::default()).unwrap().len();
    let orders = [2, 4, 6, 8, 10];
    let connected: Vec<_> = orders
        .iter()
        .map(|&n| count(n, GenFilter::new(n).connected()))
        .collect();
    assert_eq!(connected, [1, 2, 6, 20, 91]);
    let bridgeless: Vec<_> = orders
        .iter()
        .map(|&n| count(n, GenFilter::new(n).connected().bridgeless()))
        .collect();
    assert_eq!(bridgeless, [1, 2, 5, 16, 66]);
    let simple: Vec<_> = orders[1..]
        .iter()
        .map(|&n| count(n, GenFilter::new(n).connected().simple_only()))
        .collect();
    assert_eq!(simple, [1, 2, 5, 19]);
}
