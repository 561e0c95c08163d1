use torbord::bordism::{bordant_unitary, decompose, is_polynomial_generator};
use torbord::complex::fixtures::{e3, e5a, e5b, k};
use torbord::enumerate::{all_complexes, canonical_form, enumerate, read_jsonl, write_jsonl};
use torbord::enumerate::{EnumerateOptions, Find, Hit, Source};
use torbord::oracle::{oracle_chern_equal, verify};
use torbord::SimplicialComplex;

fn pairs(m: usize, source: Source) -> Vec<(SimplicialComplex, SimplicialComplex)> {
    enumerate(&EnumerateOptions { m, find: Find::BordantPairs, source })
        .unwrap()
        .into_iter()
        .map(|h| match h {
            Hit::Pair(p) => (
                SimplicialComplex::from_text(&p.left).unwrap(),
                SimplicialComplex::from_text(&p.right).unwrap(),
            ),
            Hit::Complex(_) => panic!("expected pairs"),
        })
        .collect()
}

fn contains_pair(found: &[(SimplicialComplex, SimplicialComplex)], a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    let (a, b) = (canonical_form(a), canonical_form(b));
    found.iter().any(|(x, y)| (*x == a && *y == b) || (*x == b && *y == a))
}

#[test]
fn bordism_matches_oracle_at_m4() {
    let all = all_complexes(4).unwrap();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            assert_eq!(bordant_unitary(a, b).unwrap(), oracle_chern_equal(a, b).unwrap(), "{a} / {b}");
        }
    }
}

#[test]
fn oracle_sweep_m5() {
    for k in all_complexes(5).unwrap() {
        let r = verify(&k).unwrap();
        assert!(r.passed(), "{k}: {:?}", r.mismatches);
    }
}

#[test]
fn decomposition_and_generators_m5() {
    for k in all_complexes(5).unwrap() {
        let class = decompose(&k).unwrap();
        assert_eq!(class.reduced.len(), 3);
        is_polynomial_generator(&k).unwrap();
    }
}

#[test]
fn known_pairs_are_enumerated() {
    let three_points = k(4, &[&[1], &[2], &[3]]);
    let e1 = k(4, &[&[1, 2, 3], &[4]]);
    assert!(contains_pair(&pairs(4, Source::Exhaustive), &three_points, &e1));
    assert!(contains_pair(&pairs(5, Source::Exhaustive), &e5a(), &e5b()));
}

#[test]
fn seeded_pairs_at_m5() {
    let found = pairs(5, Source::Sample { count: 400, seed: 1 });
    for (a, b) in &found {
        assert!(bordant_unitary(a, b).unwrap());
    }
    let hits = enumerate(&EnumerateOptions {
        m: 5,
        find: Find::All,
        source: Source::Sample { count: 400, seed: 1 },
    })
    .unwrap();
    let sampled: Vec<String> = hits
        .iter()
        .filter_map(|h| match h {
            Hit::Complex(r) => Some(r.complex.clone()),
            Hit::Pair(_) => None,
        })
        .collect();
    let (a, b) = (e5a().to_text(), e5b().to_text());
    if sampled.contains(&a) && sampled.contains(&b) {
        assert!(found.iter().any(|(x, y)| x.to_text() == a && y.to_text() == b || x.to_text() == b && y.to_text() == a));
    }
}

#[test]
fn generators_at_m3() {
    let hits = enumerate(&EnumerateOptions { m: 3, find: Find::Generators, source: Source::Exhaustive }).unwrap();
    let e3 = canonical_form(&e3()).to_text();
    assert!(hits.iter().any(|h| matches!(h, Hit::Complex(r) if r.complex == e3)));
}

#[test]
fn records_survive_jsonl() {
    let hits = enumerate(&EnumerateOptions { m: 4, find: Find::All, source: Source::Exhaustive }).unwrap();
    assert_eq!(hits.len(), 28);
    let mut buf = Vec::new();
    write_jsonl(&hits, &mut buf).unwrap();
    let back = read_jsonl(std::str::from_utf8(&buf).unwrap()).unwrap();
    assert_eq!(back, hits);
    for h in back {
        if let Hit::Complex(r) = h {
            assert!(r.verify().unwrap());
        }
    }
}
