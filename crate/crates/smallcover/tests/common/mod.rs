//! Shared fixtures: the test corpus of polytopes and corpus-file helpers.
#![allow(dead_code)] // each test binary uses its own subset

use std::path::PathBuf;

use smallcover::format;
use smallcover::polytope::SimplePolytope;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn load_corpus_file(name: &str) -> SimplePolytope {
    let path = corpus_dir().join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    format::polytope_from_json(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn prism() -> SimplePolytope {
    SimplePolytope::simplex(2)
        .unwrap()
        .product(&SimplePolytope::simplex(1).unwrap())
        .unwrap()
}

pub fn pentagonal_prism() -> SimplePolytope {
    SimplePolytope::polygon(5)
        .unwrap()
        .product(&SimplePolytope::simplex(1).unwrap())
        .unwrap()
}

/// The standard desk-scale corpus exercised by the property suites.
pub fn corpus() -> Vec<(String, SimplePolytope)> {
    let mut list: Vec<(String, SimplePolytope)> = Vec::new();
    for n in 1..=4 {
        list.push((format!("simplex({n})"), SimplePolytope::simplex(n).unwrap()));
    }
    for n in 1..=5 {
        list.push((format!("cube({n})"), SimplePolytope::cube(n).unwrap()));
    }
    for m in 3..=10 {
        list.push((format!("polygon({m})"), SimplePolytope::polygon(m).unwrap()));
    }
    list.push(("prism".into(), prism()));
    list.push(("pentagonal_prism".into(), pentagonal_prism()));
    list.push((
        "simplex(2)^2".into(),
        SimplePolytope::simplex(2)
            .unwrap()
            .product(&SimplePolytope::simplex(2).unwrap())
            .unwrap(),
    ));
    for k in 5..=8 {
        list.push((
            format!("dual_cyclic({k},4)"),
            SimplePolytope::dual_cyclic(k, 4).unwrap(),
        ));
    }
    list.push(("dodecahedron".into(), load_corpus_file("dodecahedron.json")));
    list
}
