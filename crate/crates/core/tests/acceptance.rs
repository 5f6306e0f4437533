//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run alone with `cargo test -p spinorpow --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{Discrete, Poisson};

use spinorpow::characters::{
    character_an_at_tau, character_bn, dim_weyl, freudenthal_weights, ln_character_bn,
};
use spinorpow::exactalg::{big_ln, BigRat, TorusPoint};
use spinorpow::limitlaw::{
    convergence_table, gamma_from_s, limit_density, limit_normalization, t_from_theta,
    tau_from_theta, ThetaVector,
};
use spinorpow::measure::{normalization_check, support, EvalPoint, MeasureTable};
use spinorpow::multiplicities::{
    ln_multiplicity_asymptotic, multiplicity_exact, tensor_decompose_oracle,
};
use spinorpow::rootsys::{lambda_from_s, RescaledWeight, SVector};

type Outcome = Result<String, String>;

fn sv(s: &[u64]) -> SVector {
    SVector::new(s.to_vec()).unwrap()
}

fn theta(v: &[f64]) -> ThetaVector {
    ThetaVector::new(v.to_vec()).unwrap()
}

/// Random rational point away from the walls of B_n: all `y_i ≠ 1`,
/// `y_i ≠ y_j` and `y_i y_j ≠ 1`.
fn generic_point(rng: &mut ChaCha8Rng, n: usize) -> TorusPoint {
    loop {
        let y: Vec<BigRat> = (0..n)
            .map(|_| BigRat::new(rng.gen_range(1..=13i64).into(), rng.gen_range(1..=11i64).into()))
            .collect();
        let one = BigRat::one();
        let mut ok = y.iter().all(|v| *v != one);
        for i in 0..n {
            for j in i + 1..n {
                ok &= y[i] != y[j] && &y[i] * &y[j] != one;
            }
        }
        if ok {
            return TorusPoint::new(y).unwrap();
        }
    }
}

/// `err(2N)/err(N)` must lie in `[0.3, 0.7]` for consecutive pairs.
fn halving(errors: &[f64]) -> Result<Vec<f64>, Vec<f64>> {
    let ratios: Vec<f64> = errors.windows(2).map(|w| w[1] / w[0]).collect();
    if ratios.iter().all(|r| (0.3..=0.7).contains(r)) {
        Ok(ratios)
    } else {
        Err(ratios)
    }
}

fn exact_normalization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    for n in 1..=3usize {
        let max_power = if n == 3 { 8 } else { 12 };
        for power in 0..=max_power {
            for _ in 0..5 {
                let pt = generic_point(&mut rng, n);
                let total = normalization_check(n, power, EvalPoint::Exact(pt.clone()))
                    .map_err(|e| e.to_string())?;
                if total != BigRat::one() {
                    return Err(format!("n={n} N={power} y=({pt}): total {total}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} tables sum to exactly 1"))
}

fn oracle_equivalence() -> Outcome {
    let mut points = 0;
    for n in 1..=3usize {
        for power in 0..=12u64 {
            let oracle = tensor_decompose_oracle(n, power).map_err(|e| e.to_string())?;
            let supp = support(n, power);
            if supp.len() != oracle.len() {
                return Err(format!("n={n} N={power}: support {} vs oracle {}", supp.len(), oracle.len()));
            }
            for s in &supp {
                let m = multiplicity_exact(power, s).unwrap();
                if m != oracle.get(s) {
                    return Err(format!("n={n} N={power} s={s:?}: {m} vs {}", oracle.get(s)));
                }
                points += 1;
            }
            let dim_total: BigUint = supp
                .iter()
                .map(|s| multiplicity_exact(power, s).unwrap() * dim_weyl(&lambda_from_s(power, s).unwrap()).unwrap())
                .sum();
            let expected = BigUint::one() << (n as u64 * power) as usize;
            if dim_total != expected || oracle.total_dimension() != expected {
                return Err(format!("n={n} N={power}: dimension sum {dim_total} != 2^{}", n as u64 * power));
            }
        }
    }
    Ok(format!("{points} multiplicities match; dimension identity holds"))
}

fn poisson_reduction() -> Outcome {
    let mut worst = 0.0f64;
    for th in [0.5, 1.0, 5.0] {
        let pois = Poisson::new(th).unwrap();
        for s in 0..=20u64 {
            let got = limit_density(&sv(&[s]), &theta(&[th])).map_err(|e| e.to_string())?;
            let diff = (got - pois.pmf(s)).abs();
            worst = worst.max(diff);
            if diff > 1e-12 {
                return Err(format!("Θ={th} s={s}: {got} vs {}", pois.pmf(s)));
            }
        }
    }
    Ok(format!("max |diff| = {worst:.2e} (tol 1e-12)"))
}

fn pointwise_convergence() -> Outcome {
    let th = theta(&[1.0, 2.0]);
    let s_list = [sv(&[0, 0]), sv(&[0, 1]), sv(&[1, 1]), sv(&[0, 2])];
    let records = convergence_table(&th, &s_list, &[128, 256, 512]).map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for (s, chunk) in s_list.iter().zip(records.chunks(3)) {
        let errs: Vec<f64> = chunk.iter().map(|r| r.rel_err.expect("non-zero limit")).collect();
        if errs[2] >= 0.05 {
            return Err(format!("s={s:?}: err(512) = {:.4}", errs[2]));
        }
        let ratios = halving(&errs).map_err(|r| format!("s={s:?}: ratios {r:.3?}"))?;
        summary.push(format!("{:?}: err512={:.4} ratios={:.3?}", s.as_slice(), errs[2], ratios));
    }
    Ok(summary.join("; "))
}

fn asymptotic_multiplicity() -> Outcome {
    let cases = [sv(&[1]), sv(&[2]), sv(&[3]), sv(&[0, 1]), sv(&[1, 1]), sv(&[0, 2]), sv(&[1, 2])];
    let mut summary = Vec::new();
    for s in &cases {
        let errs: Vec<f64> = [128u64, 256, 512]
            .iter()
            .map(|&p| {
                let exact = big_ln(&multiplicity_exact(p, s).unwrap());
                (exact - ln_multiplicity_asymptotic(p, s).unwrap()).exp_m1().abs()
            })
            .collect();
        let ratios = halving(&errs).map_err(|r| format!("s={s:?}: ratios {r:.3?}"))?;
        summary.push(format!("{:?}:{:.3?}", s.as_slice(), ratios));
    }
    Ok(summary.join(" "))
}

fn dominant_weights(n: usize, max_sum: i64) -> Vec<RescaledWeight> {
    fn rec(n: usize, max_sum: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let used: i64 = prefix.iter().sum();
        let upper = prefix.last().copied().unwrap_or(max_sum);
        for c in 0..=upper.min(max_sum - used) {
            prefix.push(c);
            rec(n, max_sum, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n, max_sum, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .filter(|w| w.iter().all(|c| c % 2 == 0) || w.iter().all(|c| c % 2 == 1))
        .map(|w| RescaledWeight::new(w).unwrap())
        .collect()
}

fn character_cross_validation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut weights = 0;
    for n in 1..=3usize {
        // Σ λ̃_i ≤ 6 in doubled coordinates
        for lam in dominant_weights(n, 12) {
            let poly = freudenthal_weights(&lam).map_err(|e| e.to_string())?.to_poly();
            for _ in 0..20 {
                let pt = generic_point(&mut rng, n);
                let alt = character_bn(&lam, &pt).map_err(|e| e.to_string())?;
                let sum = poly.eval(&pt).unwrap();
                if alt != sum {
                    return Err(format!("λ={:?} y=({pt}): {alt} vs {sum}", lam.coords()));
                }
            }
            weights += 1;
        }
    }
    for n in 1..=6 {
        if dim_weyl(&RescaledWeight::spinor(n)).unwrap() != BigUint::from(1u64 << n) {
            return Err(format!("dim of the spinor of B_{n} is not 2^{n}"));
        }
    }
    Ok(format!("{weights} highest weights x 20 points agree; spinor dims 2^n for n<=6"))
}

fn slice_factorization() -> Outcome {
    let s = sv(&[0, 1]);
    let th = theta(&[1.0, 2.0]);
    let gamma = gamma_from_s(&s);
    let chi_gamma = character_an_at_tau(&gamma, &tau_from_theta(&th)).unwrap();
    let errs: Vec<f64> = [128u64, 256, 512]
        .iter()
        .map(|&p| {
            let t = t_from_theta(p, &th).unwrap();
            let lam = lambda_from_s(p, &s).unwrap();
            let shift = (p - s.sum()) as f64 * t.iter().sum::<f64>();
            let ln_ratio = ln_character_bn(&lam, &t).unwrap() - chi_gamma.ln() - shift;
            ln_ratio.exp_m1().abs()
        })
        .collect();
    let ratios = halving(&errs).map_err(|r| format!("errors {errs:.3?} ratios {r:.3?}"))?;
    Ok(format!("errors {errs:.3?}, ratios {ratios:.3?}"))
}

fn sampler_fidelity() -> Outcome {
    let pt = TorusPoint::from_ratios(&[(7, 2), (5, 2)]).unwrap();
    let table = MeasureTable::build(2, 20, EvalPoint::Exact(pt)).map_err(|e| e.to_string())?;
    let draws = table.sample(20_240_601, 100_000);
    let tv = table.total_variation(&draws);
    if tv > 0.02 {
        return Err(format!("total variation {tv:.4} > 0.02"));
    }
    if draws != table.sample(20_240_601, 100_000) {
        return Err("sampler is not reproducible".into());
    }
    let args = ["spinorpow", "sample", "--n", "2", "--N", "20", "--y", "7/2,5/2", "--seed", "7", "--count", "100000"];
    let run = || {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = spinorpow::cli::run_with(args, &mut out, &mut err);
        (code, out)
    };
    let (a, b) = (run(), run());
    if a.0 != 0 || a != b {
        return Err("CLI sample output is not byte-identical across reruns".into());
    }
    Ok(format!("TV = {tv:.4} over {} support points; reruns byte-identical", table.rows().len()))
}

fn limit_truncated_normalization() -> Outcome {
    let mut summary = Vec::new();
    for th in [vec![1.0], vec![5.0], vec![1.0, 1.0], vec![1.0, 2.0]] {
        let total = limit_normalization(&theta(&th), 40).map_err(|e| e.to_string())?;
        if (total - 1.0).abs() > 1e-3 {
            return Err(format!("Θ={th:?}: truncated sum {total}"));
        }
        summary.push(format!("Θ={th:?}: {total:.12}"));
    }
    Ok(summary.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 exact normalization", exact_normalization),
        ("2 oracle equivalence + dimension identity", oracle_equivalence),
        ("3 Poisson reduction", poisson_reduction),
        ("4 pointwise convergence with O(1/N) rate", pointwise_convergence),
        ("5 asymptotic multiplicity O(1/N)", asymptotic_multiplicity),
        ("6 character cross-validation", character_cross_validation),
        ("7 boundary-slice factorization", slice_factorization),
        ("8 sampler fidelity", sampler_fidelity),
        ("9 limit truncated normalization", limit_truncated_normalization),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name} ({secs:.2}s): {detail}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
