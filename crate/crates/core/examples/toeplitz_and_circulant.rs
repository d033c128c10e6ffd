//! Toeplitz certificates and the row test for circulants.
use signcert::certify::{certify_circulant_k_sign, certify_toeplitz_k_sign, sign_consistency_bruteforce};
use signcert::exact::{int, ratio};
use signcert::matrix::build_circulant;
use signcert::{PeriodicSequence, SequenceWindow};

fn main() -> signcert::Result<()> {
    let g = SequenceWindow::from_fn(-6, 13, |t| ratio(1, 2).pow(t.abs() as i32));
    for k in 1..=3 {
        let report = certify_toeplitz_k_sign(&g, 0, 4, 4, k, false)?;
        println!("Toeplitz k={k}: {:?} via {}", report.outcome, report.method);
    }

    let c = PeriodicSequence::new([4, 1, 0, 1, 2].map(int).to_vec())?;
    for k in [3, 5] {
        let rows = certify_circulant_k_sign(&c, k, false)?;
        let full = sign_consistency_bruteforce(&build_circulant(&c), k, false)?;
        println!(
            "circulant k={k}: rows {} ({} minors) / full {} ({} minors)",
            rows.verdict, rows.minors_evaluated, full.verdict, full.minors_evaluated
        );
    }
    Ok(())
}
