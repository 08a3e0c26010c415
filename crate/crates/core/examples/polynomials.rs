//! The sweep polynomials and the smallest exponent their inequalities allow.

use chibound::polynomial::{choose_c, sweep_polys, SweepParameters};
use chibound::Polynomial;

fn show(params: &SweepParameters) -> chibound::Result<()> {
    let table = sweep_polys(params)?;
    println!("k={} s={} q={} psi={} sigma={}", params.k, params.s, params.q, params.psi, params.sigma);
    for i in (1..=params.k).rev() {
        println!("  zeta_{i} = {}    delta_{i} = {}", table.zeta(i), table.delta(i));
    }
    let choice = choose_c(params, &table)?;
    for (b, cert) in choice.bounds.iter().zip(&choice.certificates) {
        println!("  {b}    checked to x = {}, then {:?}", cert.x0, cert.tail);
    }
    assert!(choice.first_violation(2000).is_none());
    println!("  c = {}", choice.c);
    Ok(())
}

fn main() -> chibound::Result<()> {
    show(&SweepParameters::two_p4())?;
    show(&SweepParameters::new(1, 1, 0, Polynomial::zero(), Polynomial::zero())?)?;
    show(&SweepParameters::new(3, 2, 1, "x^2".parse()?, Polynomial::constant(1))?)?;
    Ok(())
}
