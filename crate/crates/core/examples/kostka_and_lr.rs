//! Kostka numbers, Littlewood–Richardson coefficients and the Schur expansion
//! they feed.
use signcert::exact::{int, Partition};
use signcert::tableaux::{kostka, lr_coefficient, monomial_symmetric_eval, schur_eval, weight_class};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn main() -> signcert::Result<()> {
    let lambda = p(&[2, 1, 0]);
    println!("weight class of {:?}:", lambda.parts());
    for mu in weight_class(&lambda) {
        println!("  K({:?}, {:?}) = {}", lambda.parts(), mu.parts(), kostka(&lambda, &mu)?);
    }

    // s_λ = Σ_μ K_{λμ} m_μ, checked at a rational point.
    let x = [int(2), int(-3), int(5)];
    let mut expanded = int(0);
    for mu in weight_class(&lambda) {
        expanded += monomial_symmetric_eval(&mu, &x)? * int(kostka(&lambda, &mu)? as i64);
    }
    println!("s(x) = {} via Kostka, {} direct", expanded, schur_eval(&lambda, &x)?);

    for (l, m, g) in [([2, 1, 0], [3, 2, 1], [4, 3, 2]), ([4, 1, 0], [2, 1, 1], [5, 3, 1]), ([2, 1, 0], [2, 1, 0], [3, 2, 1])] {
        println!("c^{:?}_{{{:?},{:?}}} = {}", g, l, m, lr_coefficient(&p(&l), &p(&m), &p(&g)));
    }
    Ok(())
}
