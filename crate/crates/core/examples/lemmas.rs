//! The individual constructions, each returning a witness its verifier accepts.

use chibound::harness::generators::mycielski;
use chibound::lemmas::{self, LemmaOptions, RamseyOutcome};
use chibound::structures::{verify_nondominating, verify_partition};
use chibound::{Graph, Polynomial, VertexSet};

fn main() -> chibound::Result<()> {
    let checked = LemmaOptions::default();

    let petersen = chibound::harness::generators::kneser(5, 2)?;
    match lemmas::ramsey_witness(&petersen, 2, 3)? {
        RamseyOutcome::Clique(c) => println!("ramsey: triangle {:?}", c.0.to_vec()),
        RamseyOutcome::Stable(s) => println!("ramsey: stable set {:?}", s.0.to_vec()),
    }

    let m3 = mycielski(2)?;
    let h = VertexSet::from_members(m3.n(), 1..m3.n())?;
    let h = m3.components_within(&h).remove(0);
    let path = lemmas::gyarfas_path(&m3, 0, &h, 3, 2, &checked)?;
    println!("gyarfas path from 0 in Grötzsch: {:?}", path.0);

    let far = Graph::cycle(5)?.disjoint_union(&Graph::cycle(5)?)?;
    let (p, w) = lemmas::nondominating_path(&far, 2, 1, &Polynomial::zero(), &checked)?;
    assert!(verify_nondominating(&far, &w, &Polynomial::zero())?);
    println!("nondominating 2-path {:?}, anticomplete set {:?}", p.0, w.x.to_vec());

    let g = Graph::cycle(5)?.disjoint_union(&Graph::complete(4)?)?;
    let parts = lemmas::split_partition(&g, 1, 0, &checked)?;
    assert!(verify_partition(&g, &parts, 1, 0)?);
    let blocks: Vec<Vec<usize>> = parts.blocks.iter().map(VertexSet::to_vec).collect();
    println!("(1,0)-unsplittable partition of C5+K4: {blocks:?}");

    let m4 = mycielski(4)?;
    let broom = lemmas::broom_finder(&m4, 1, 1, 1, &checked)?;
    println!("broom(1,1) in Mycielski(4): {:?}", broom.map);
    Ok(())
}
