//! Induced pattern search: 2P4, brooms and arbitrary small graphs.

use chibound::graph::parse_g6;
use chibound::harness::generators::gnp;
use chibound::patterns::{find_induced, is_free, verify_witness, PatternSpec};
use chibound::Graph;

fn main() -> chibound::Result<()> {
    let two_p4: PatternSpec = "2P4".parse()?;
    for n in [8, 9] {
        let p = Graph::path(n)?;
        match find_induced(&p, &two_p4)? {
            Some(w) => println!("P{n} contains 2P4 at {:?}", w.map),
            None => println!("P{n} is 2P4-free"),
        }
    }

    let broom = PatternSpec::Broom { k: 3, d: 2 };
    let g = chibound::harness::generators::mycielski(3)?;
    if let Some(w) = find_induced(&g, &broom)? {
        println!("broom(3,2) in Mycielski(3): {:?}", w.map);
    }

    let claw = PatternSpec::Bad(chibound::patterns::Recipe::Leaf(parse_g6("Cs")?));
    let mut free = 0;
    for seed in 0..200 {
        let g = gnp(9, 0.5, seed)?;
        if let Some(w) = find_induced(&g, &claw)? {
            assert!(verify_witness(&g, &claw, &w)?);
        } else {
            free += 1;
        }
    }
    println!("{free} of 200 G(9, 1/2) samples are claw-free");
    println!("Petersen is 2P4-free: {}", is_free(&chibound::harness::generators::kneser(5, 2)?, &two_p4)?);
    Ok(())
}
