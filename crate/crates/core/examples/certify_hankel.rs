//! Sign-consistency certificates for Hankel matrices built from a sum of
//! geometric sequences.
use signcert::certify::{certify_hankel_k_sign, certify_hankel_operator, sign_consistency_bruteforce};
use signcert::exact::ratio;
use signcert::matrix::build_hankel;
use signcert::{Certifier, CertifyOptions, SequenceWindow};

fn main() -> signcert::Result<()> {
    // g_t = 2^{1-t} - 3 has rank two: entries and 2×2 minors are negative, 3×3
    // minors vanish.
    let g = SequenceWindow::from_fn(1, 7, |t| ratio(2, 1) * ratio(1, 2).pow((t - 1) as i32) - ratio(3, 1));

    for k in 1..=3 {
        let report = certify_hankel_k_sign(&g, 4, 4, k, true)?;
        println!("k={k}: {:?} via {} ({} minors)", report.outcome, report.method, report.minors_evaluated);
        for w in &report.witnesses {
            println!("    witness rows {:?} cols {:?} = {}", w.rows.indices(), w.cols.indices(), w.value);
        }
    }

    // Brute force on the full matrix agrees with the reshaped certificate.
    let h = build_hankel(&g, 1, 4, 4)?;
    println!("brute force k=2: {}", sign_consistency_bruteforce(&h, 2, true)?.verdict);

    let confirming = Certifier::new(CertifyOptions { confirm_with_target: true, ..CertifyOptions::default() });
    println!("confirmed k=2: {:?}", confirming.certify_hankel_k_sign(&g, 4, 4, 2, true)?.outcome);

    let op = certify_hankel_operator(&g, 2, 4, true)?;
    println!("operator: {:?}, truncated at {:?}", op.outcome, op.truncated_at);
    Ok(())
}
