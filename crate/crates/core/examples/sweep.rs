//! End-to-end sweep on a triangle-free graph with χ above ω³.
//!
//! ```text
//! cargo run --release --example sweep
//! ```

use chibound::harness::generators::mycielski;
use chibound::lemmas::{sweep, LemmaOptions, SweepOutcome};
use chibound::patterns::{verify_witness, PatternSpec};
use chibound::polynomial::SweepParameters;
use chibound::structures::verify_nondominating;

fn main() -> chibound::Result<()> {
    let params: SweepParameters = SweepParameters::new(1, 1, 0, "0".parse()?, "0".parse()?)?;
    let g = mycielski(7)?;
    println!("Mycielski(7): n = {}, m = {}, chi = 9, omega = 2", g.n(), g.edge_count());
    let report = sweep(&g, &params, &LemmaOptions::assuming())?;
    println!("c = {}, started from a horn: {}, lift rounds: {}", report.c, report.via_horn, report.lift_rounds);
    match report.outcome {
        SweepOutcome::Found { broom, path, nondomination } => {
            let ok = verify_witness(&g, &PatternSpec::Broom { k: params.k, d: params.s }, &broom)?
                && path.verify(&g, params.k)
                && verify_nondominating(&g, &nondomination, &params.sigma)?;
            println!("broom {:?}, path {:?}, |X| = {}, verified: {ok}", broom.map, path.0, nondomination.x.len());
        }
        SweepOutcome::Scattering(s) => println!("scattering at {} with |P| = {}", s.v, s.p.len()),
    }
    Ok(())
}
