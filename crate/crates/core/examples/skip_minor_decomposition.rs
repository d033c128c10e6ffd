//! Expands a minor with skipped rows into row-consecutive minors weighted by
//! Kostka numbers, then recombines it.
use signcert::decomp::{lambda_from_rows, recombine, skip_minor_decomposition};
use signcert::matrix::minor;
use signcert::{ExactMatrix, IndexTuple};

fn main() -> signcert::Result<()> {
    let a = ExactMatrix::from_i64(&[
        &[3, 1, 4, 1],
        &[5, 9, 2, 6],
        &[5, 3, 5, 8],
        &[9, 7, 9, 3],
        &[2, 3, 8, 4],
        &[6, 2, 6, 4],
    ])?;
    let s = IndexTuple::new(vec![1, 3, 6])?;
    let cols = IndexTuple::new(vec![1, 2, 4])?;
    println!("λ = {:?}", lambda_from_rows(&s).parts());

    let terms = skip_minor_decomposition(&a, &s, &cols)?;
    for term in &terms {
        println!("  {} × D{:?} = {}", term.coefficient, term.weight.parts(), term.value);
    }
    println!("recombined {} / direct {}", recombine(&terms), minor(&a, &s, &cols)?);
    Ok(())
}
