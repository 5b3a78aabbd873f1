// Truth tables of the four gadgets, and a chord diagram for each.

use lcomp::circuit::InputAssignment;
use lcomp::gadgets::{is_circle_graph, GadgetKind};

fn bits(b: &[bool]) -> String {
    b.iter().map(|&x| if x { '1' } else { '0' }).collect()
}

pub fn main() -> Result<(), Box<dyn std::error::Error>> {
    for kind in GadgetKind::ALL {
        let g = kind.gadget();
        println!(
            "{kind}: sequence {}, outputs {:?}",
            g.sequence(),
            g.outputs()
        );
        for x in InputAssignment::all(g.inputs().len()) {
            let out = g.run(x.bits())?;
            assert_eq!(out, kind.truth(x.bits()));
            println!("  {} -> {}", bits(x.bits()), bits(&out));
        }
        let word = is_circle_graph(g.graph())?.expect("every gadget is a circle graph");
        println!("  chords {word}");
    }
    Ok(())
}
