//! Exact chromatic and clique numbers, with the witnesses that certify them.
//!
//! ```text
//! cargo run --release --example invariants
//! ```

use chibound::harness::generators::{kneser, mycielski};
use chibound::invariants::{check_coloring, chi, max_stable, omega};
use chibound::Graph;

fn report(name: &str, g: &Graph) -> chibound::Result<()> {
    let all = g.vertices();
    let (c, coloring) = chi(g, &all)?;
    let (w, clique) = omega(g, &all)?;
    let (a, stable) = max_stable(g, &all)?;
    check_coloring(g, &all, &coloring)?;
    assert!(clique.verify(g) && stable.verify(g));
    let sizes: Vec<usize> = coloring.classes().iter().map(|c| c.len()).collect();
    println!("{name:<14} n={:<3} chi={c} omega={w} alpha={a} colour classes {sizes:?}", g.n());
    println!("{:<14} clique {:?}", "", clique.0.to_vec());
    Ok(())
}

fn main() -> chibound::Result<()> {
    report("C7", &Graph::cycle(7)?)?;
    report("K5", &Graph::complete(5)?)?;
    report("Petersen", &kneser(5, 2)?)?;
    report("Kneser(7,3)", &kneser(7, 3)?)?;
    for depth in 0..=3 {
        report(&format!("Mycielski({depth})"), &mycielski(depth)?)?;
    }
    Ok(())
}
