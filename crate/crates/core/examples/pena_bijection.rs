//! The Peña transform: sign consistency of order n of an m×n matrix is read
//! off from ordinary positivity of a smaller matrix.
use signcert::certify::{n_sign_consistency_via_pena, pena_k, pena_transform, sign_consistency_bruteforce};
use signcert::exact::int;
use signcert::ExactMatrix;

fn main() -> signcert::Result<()> {
    println!("K_3 =\n{}", pena_k(3));

    // Columns of a Vandermonde matrix, reversed: all 2×2 minors negative.
    let x = ExactMatrix::from_fn(5, 2, |i, j| int((i as i64 + 1).pow(1 - j as u32)));
    println!("X =\n{x}");
    println!("C =\n{}", pena_transform(&x)?);

    let via = n_sign_consistency_via_pena(&x, true)?;
    let brute = sign_consistency_bruteforce(&x, 2, true)?;
    println!("via transform: {:?} ({} minors)", via.outcome, via.minors_evaluated);
    println!("brute force:   {:?} ({} minors)", brute.outcome, brute.minors_evaluated);
    Ok(())
}
