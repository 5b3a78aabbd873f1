// A circuit turned into a single local-complementation query.

use lcomp::circuit::{levelize, normalize, parse_netlist, InputAssignment};
use lcomp::gss::{compile, write_gss};

const MAJORITY: &str = "
input a
input b
input c
and ab a b
and bc b c
and ac a c
or t ab bc
or m t ac
output m
";

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = normalize(&parse_netlist(MAJORITY)?);
    let layered = levelize(&c)?;
    println!(
        "{} gates after normalization, depth {}, {} pass nodes",
        c.gates().len(),
        layered.depth(),
        layered.pass_count()
    );

    for x in InputAssignment::all(3) {
        let gss = compile(&c, &x)?;
        let got = gss.simulate()?;
        assert_eq!(got, c.evaluate(&x)?);
        println!(
            "{:?}: {} vertices, {} steps, output {}",
            x.bits(),
            gss.graph().n(),
            gss.sequence().len(),
            got
        );
    }

    let text = write_gss(&compile(&c, &InputAssignment::from_bits("110").unwrap())?);
    println!("{}", text.lines().take(3).collect::<Vec<_>>().join("\n"));
    Ok(())
}
