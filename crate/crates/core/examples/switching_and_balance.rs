//! Switching a signed graph, testing balance and antibalance, and
//! comparing switching classes.

use signed_colouring::{check_proper, switch_colouring, BalanceReport, Sign, SignedGraph, SwitchSet};

fn main() -> signed_colouring::Result<()> {
    use Sign::{Negative as N, Positive as P};
    let k4 = SignedGraph::new(4, [(0, 1, N), (0, 2, N), (0, 3, N), (1, 2, P), (1, 3, P), (2, 3, P)])?;

    match k4.balance() {
        BalanceReport::Balanced { switch } => {
            let all_positive = k4.switch(&switch)?;
            println!("balanced; switching at {:?} gives {} positive edges", switch.iter().collect::<Vec<_>>(),
                all_positive.edges().iter().filter(|e| e.sign.is_positive()).count());
        }
        BalanceReport::Unbalanced { circuit } => println!("unbalanced circuit {:?}", circuit.vertices),
    }

    let c4 = SignedGraph::new(4, [(0, 1, N), (1, 2, P), (2, 3, P), (3, 0, P)])?;
    if let BalanceReport::Unbalanced { circuit } = c4.balance() {
        println!("c4 has negative circuit through {:?}", circuit.vertices);
    }
    println!("c4 antibalanced: {:?}", c4.antibalance_partition());

    let s: SwitchSet = [1, 2].into_iter().collect();
    let switched = c4.switch(&s)?;
    println!("c4 ~ c4 switched at {{1, 2}}: {}", c4.switching_equivalent(&switched)?);

    let phi = vec![1, 0, -1, 0].into();
    let psi = switch_colouring(&phi, &s);
    println!(
        "colouring {:?} proper on c4: {}; {:?} proper on switched: {}",
        phi.values(),
        check_proper(&c4, &phi).is_ok(),
        psi.values(),
        check_proper(&switched, &psi).is_ok()
    );
    Ok(())
}
