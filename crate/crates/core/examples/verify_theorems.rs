//! Runs every enumerated theorem check at a small size and prints the
//! reports.

use signed_colouring::verify::{EnumerationSpec, TheoremId, Verifier};

fn main() -> signed_colouring::Result<()> {
    let spec = EnumerationSpec::new(4);
    for id in TheoremId::ALL {
        if id == TheoremId::PlanarConjecture {
            continue;
        }
        let report = Verifier::new(spec).run(id)?;
        print!("{}", report.render_text());
    }
    let multi = Verifier::new(EnumerationSpec::multigraphs(4, 2)).run(TheoremId::Bound2Chi)?;
    println!("multigraphs: {} instances, passed {}", multi.instances_checked, multi.passed);
    Ok(())
}
