use std::sync::Arc;
use std::thread;

use qtoric::{charnums, parse_input, to_json, ParseError, TopClassCache};
use qtoric_core::quasitoric::{char_function, preset_cpn, preset_hirzebruch, product, Quasitoric, TopClass};
use qtoric_core::{compositions_of, BigInt};

#[test]
fn canonical_json_round_trips() {
    let c1 = preset_cpn(1).unwrap();
    for d in [preset_cpn(3).unwrap(), preset_hirzebruch(-2), product(&c1, &preset_cpn(2).unwrap()).unwrap()] {
        let text = to_json(&d);
        assert_eq!(parse_input(&text).unwrap(), d);
        assert_eq!(to_json(&parse_input(&text).unwrap()), text);
    }
}

#[test]
fn parse_errors() {
    let ok = r#"{"name": "x", "m": 1, "vertices": ["a", "b"], "facets": [[0], [1]], "lambda": [[1], [-1]]}"#;
    assert!(parse_input(ok).is_ok());
    let cases = [
        ok.replace(r#""m": 1, "#, ""),
        ok.replace("[[1], [-1]]", "[[1], [-1, 0]]"),
        ok.replace("[[1], [-1]]", "[[1]]"),
        ok.replace("[[0], [1]]", "[[0], [2]]"),
        ok.replace("[[1], [-1]]", "[[1], [-1.5]]"),
        ok.replace("[[1], [-1]]", "[[1], [99999999999999999999]]"),
        ok.replace('}', r#", "base_facet": 2}"#),
        "[]".to_string(),
    ];
    for text in cases {
        assert!(matches!(parse_input(&text), Err(ParseError::Json(_) | ParseError::Shape(_))), "{text}");
    }
}

#[test]
fn cache_computes_once_under_contention() {
    let cache = TopClassCache::new();
    let q = Quasitoric::new(preset_cpn(3).unwrap()).unwrap();
    let tops: Vec<Arc<TopClass>> = thread::scope(|s| {
        let hs: Vec<_> = (0..8).map(|_| s.spawn(|| cache.top_class(&q).unwrap())).collect();
        hs.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert!(tops.iter().all(|t| Arc::ptr_eq(t, &tops[0])));
    assert_eq!(*tops[0], TopClass::new(&q).unwrap());

    let other = Quasitoric::new(preset_cpn(2).unwrap()).unwrap();
    assert!(!Arc::ptr_eq(&cache.top_class(&other).unwrap(), &tops[0]));
}

#[test]
fn evaluation_is_independent_of_thread_count() {
    let c1 = preset_cpn(1).unwrap();
    let q = Quasitoric::new(product(&product(&c1, &c1).unwrap(), &preset_hirzebruch(2)).unwrap()).unwrap();
    let top = TopClass::new(&q).unwrap();
    let comps = compositions_of(4);
    let serial = charnums::evaluate(&top, &comps, 1).unwrap();
    for threads in [2, 3, 5, 16, 64] {
        assert_eq!(charnums::evaluate(&top, &comps, threads).unwrap(), serial);
    }
    let mut reversed = comps.clone();
    reversed.reverse();
    assert_eq!(charnums::evaluate(&top, &reversed, 4).unwrap(), serial);
    assert_eq!(serial, char_function(&q).unwrap().values);
}

#[test]
fn json_values_are_exact() {
    let mut table = charnums::Table::new();
    let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
    table.insert("1,1".parse().unwrap(), huge.clone());
    table.insert("2".parse().unwrap(), -huge.clone());
    let text = charnums::to_json("big", 2, &table);
    assert!(text.contains("123456789012345678901234567890"));
    assert_eq!(charnums::from_json(&text).unwrap(), table);
}
