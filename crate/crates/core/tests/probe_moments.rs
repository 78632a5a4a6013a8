use covertrace::analysis::*;
use covertrace::group::Character;
use covertrace::moments::*;
use covertrace::quad::QuadratureConfig;
use covertrace::spectrum::*;

#[test]
fn probe_variance_trend() {
    let model = FuchsianModel::bolza();
    let spec = TestFunctionSpec::default();
    let quad = QuadratureConfig::default();
    let chi = Character::trivial(2);
    let sigma = sigma_goe_sq(&spec, &quad).unwrap();
    let s10 = enumerate_spectrum(&model, 10.0, &BallParams::default()).unwrap();
    for alpha in [0.5, 1.0, 2.0, 3.0, 5.0, 8.0] {
        let mut line = format!("alpha={alpha}: ");
        for l in [5.0, 6.0, 8.0, 10.0] {
            let w = WindowParams::new(alpha, l, 64.0);
            let ctx = WeightContext { spec: &spec, window: &w, chi: &chi };
            let mut t = MomentTable::new();
            let v2 = central_moment_limit(2, &s10, &ctx, &mut t).unwrap();
            line += &format!("L={l}: {:.4} ", v2 / sigma);
        }
        println!("{line}");
    }
}

#[test]
fn probe_odd_moment() {
    let model = FuchsianModel::bolza();
    let spec = TestFunctionSpec::default();
    let chi = Character::trivial(2);
    let s10 = enumerate_spectrum(&model, 10.0, &BallParams::default()).unwrap();
    for alpha in [1.0, 2.0, 5.0] {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for l in [5.0, 8.0, 10.0] {
            let w = WindowParams::new(alpha, l, 64.0);
            let ctx = WeightContext { spec: &spec, window: &w, chi: &chi };
            let mut t = MomentTable::new();
            let v3 = central_moment_limit(3, &s10, &ctx, &mut t).unwrap();
            println!("alpha={alpha} L={l}: V3 = {v3:.3e}");
            xs.push(l.ln());
            ys.push(v3.abs().max(1e-300).ln());
        }
        // least squares slope
        let n = xs.len() as f64;
        let sx: f64 = xs.iter().sum();
        let sy: f64 = ys.iter().sum();
        let sxy: f64 = xs.iter().zip(&ys).map(|(a, b)| a * b).sum();
        let sxx: f64 = xs.iter().map(|a| a * a).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        println!("alpha={alpha}: fitted exponent {slope:.2}");
    }
}

#[test]
fn probe_b22_and_k4() {
    let model = FuchsianModel::bolza();
    let spec = TestFunctionSpec::default();
    let chi = Character::trivial(2);
    let quad = QuadratureConfig::default();
    let sigma = sigma_goe_sq(&spec, &quad).unwrap();
    let s10 = enumerate_spectrum(&model, 10.0, &BallParams::default()).unwrap();
    for l in [6.0, 8.0, 10.0] {
        let w = WindowParams::new(5.0, l, 64.0);
        let ctx = WeightContext { spec: &spec, window: &w, chi: &chi };
        let mut t = MomentTable::new();
        let v2 = central_moment_limit(2, &s10, &ctx, &mut t).unwrap();
        let v4 = central_moment_limit(4, &s10, &ctx, &mut t).unwrap();
        println!("L={l}: v2={v2:.5} v4={v4:.5} v4/(3 v2^2)={:.4} v2/sigma={:.4}", v4 / (3.0 * v2 * v2), v2 / sigma);
    }
    // brute force vs factorized B((2,2)) on a short spectrum
    let mut short = enumerate_spectrum(&model, 6.0, &BallParams::default()).unwrap();
    short.classes.truncate(5);
    short.cutoff = 6.0;
    let w = WindowParams::new(5.0, 6.0, 64.0);
    let ctx = WeightContext { spec: &spec, window: &w, chi: &chi };
    let mut t = MomentTable::new();
    let fac = b_eval(&[2, 2], &short, &ctx, &mut t).unwrap();
    let brute = b_eval_brute(&[2, 2], &short, &ctx, &mut t).unwrap();
    println!("B((2,2)) factorized={fac:.12e} brute={brute:.12e} rel={:.2e}", ((fac - brute) / brute).abs());
    let fac33 = b_eval(&[3, 3], &short, &ctx, &mut t).unwrap();
    let brute33 = b_eval_brute(&[3, 3], &short, &ctx, &mut t).unwrap();
    println!("B((3,3)) factorized={fac33:.12e} brute={brute33:.12e}");
}
