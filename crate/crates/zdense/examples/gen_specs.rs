//! Regenerate the JSON spec fixtures in `specs/` from the library's
//! built-in example groups. Run from the repository root:
//! `cargo run -p zdense --example gen_specs`

use std::fs;
use zdense::group_spec::{fixtures, BorelAmbient, GroupSpec};

fn main() {
    let entries: Vec<(&str, GroupSpec)> = vec![
        // four-dimensional solvable counterexample with weights (-4,1,2,1)
        ("sec8", fixtures::sec8_spec()),
        // unimodular weight pattern (2,-1,-1) with no dense discrete subgroup
        ("ex5", fixtures::metabelian(&[2, -1, -1])),
        ("borel_simple", GroupSpec::BorelOf(BorelAmbient::Simple)),
        (
            "borel_product2",
            GroupSpec::BorelOf(BorelAmbient::ProductOfSimples { count: 2 }),
        ),
        // three-dimensional unipotent group with one nonzero bracket
        ("heisenberg", fixtures::heisenberg_unipotent()),
        // the constructible weight pattern (1,-1) realized by a real
        // quadratic unit
        ("q_sqrt2", fixtures::metabelian(&[1, -1])),
        // commutative p-adic shapes spanning the classification predicate
        ("abelian_split1_unip1", fixtures::abelian(1, 0, 1)),
        ("abelian_split2_unip1", fixtures::abelian(2, 0, 1)),
        ("abelian_vector2", fixtures::abelian(0, 0, 2)),
        ("abelian_aniso1", fixtures::abelian(0, 1, 0)),
        ("abelian_split1", fixtures::abelian(1, 0, 0)),
    ];
    fs::create_dir_all("specs").expect("create specs/");
    for (name, spec) in entries {
        let path = format!("specs/{name}.json");
        fs::write(&path, spec.to_json() + "\n").expect("write fixture");
        println!("wrote {path}");
    }
}
