//! Checks candidate operation tables against cBCK1-4 and reports witnesses.

use cbck::{check_axioms, FiniteCbckAlgebra};

fn main() {
    let tables = [
        ("C2", vec![vec![0, 0, 0], vec![1, 0, 0], vec![2, 1, 0]]),
        ("two atoms", vec![vec![0, 0, 0], vec![1, 0, 1], vec![2, 2, 0]]),
        ("broken", vec![vec![0, 0, 0], vec![1, 0, 0], vec![2, 2, 0]]),
    ];
    for (name, t) in tables {
        let report = check_axioms(&t).expect("square table");
        println!("{name}: {report}");
        if let Ok(a) = FiniteCbckAlgebra::from_table(&t) {
            println!(
                "  size {}, bounded {:?}, chain {}, directed {}",
                a.size(),
                a.top(),
                a.is_chain(),
                a.is_directed()
            );
        }
    }
}
