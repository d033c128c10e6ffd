//! Strict total positivity from initial minors and k-positivity from
//! consecutive minors, compared with brute force.
use signcert::certify::{hankel_k_positivity, k_positivity_bruteforce, k_positivity_consecutive, strict_total_positivity_initial};
use signcert::exact::{int, ratio};
use signcert::matrix::build_vandermonde;
use signcert::SequenceWindow;

fn main() -> signcert::Result<()> {
    let v = build_vandermonde(&[int(1), int(2), int(3), int(5)], 4)?;
    let initial = strict_total_positivity_initial(&v)?;
    let brute = k_positivity_bruteforce(&v, 4, true)?;
    println!("Vandermonde: initial {} ({} minors), brute force {} ({} minors)",
        initial.verdict, initial.minors_evaluated, brute.verdict, brute.minors_evaluated);

    let consecutive = k_positivity_consecutive(&v, 2, true)?;
    println!("2-positive by consecutive minors: {}", consecutive.verdict);

    // Moments of a measure with three atoms: strictly 3-positive, and 4×4 minors
    // vanish, so only non-strict 4-positivity holds.
    let g = SequenceWindow::from_fn(1, 9, |t| ratio(1, 2).pow(t as i32) + int(1) + int(3).pow(t as i32));
    for (k, strict) in [(3, true), (4, true), (4, false)] {
        let r = hankel_k_positivity(&g, 1, 4, 4, k, strict)?;
        println!("moment Hankel {k}-positive (strict: {strict}): {:?}", r.outcome);
    }
    Ok(())
}
