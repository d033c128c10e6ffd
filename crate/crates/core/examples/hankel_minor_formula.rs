//! Writes an arbitrary Hankel minor as a nonnegative combination of minors of
//! consecutive rows, and shows both coefficient routes agree.
use signcert::decomp::{
    enumerate_v_star, formula_coefficients, hankel_minor_formula, lambda_from_rows, recombine_formula, CoefficientCache,
    CoefficientRoute,
};
use signcert::exact::int;
use signcert::matrix::{build_hankel, minor};
use signcert::{IndexTuple, Limits, SequenceWindow};

fn main() -> signcert::Result<()> {
    let g = SequenceWindow::from_one([3, 1, 4, 1, 5, 9, 2, 6, 5, 3].map(int).to_vec());
    let s = IndexTuple::new(vec![1, 3, 7])?;
    let r = IndexTuple::new(vec![1, 2, 4])?;

    let lambda = lambda_from_rows(&s);
    let vstars = enumerate_v_star(&lambda, &r)?;
    println!("{} candidate column sets", vstars.len());
    let (mut cache, limits) = (CoefficientCache::new(), Limits::default());
    let lr = formula_coefficients(&lambda, &r, CoefficientRoute::LittlewoodRichardson, &mut cache, &limits)?;
    let signed = formula_coefficients(&lambda, &r, CoefficientRoute::SignedKostka, &mut cache, &limits)?;
    println!("routes agree: {}", lr == signed);

    let terms = hankel_minor_formula(&g, &s, &r)?;
    for t in &terms {
        println!("  {} × H{:?} = {}", t.coefficient, t.vstar.indices(), t.minor_value);
    }
    let h = build_hankel(&g, 1, 7, 4)?;
    println!("formula {} / direct {}", recombine_formula(&terms), minor(&h, &s, &r)?);
    Ok(())
}
