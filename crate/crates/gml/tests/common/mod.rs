use gml::PowerSeriesFunction;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random polynomial of degree ≤ max_degree with coefficients uniform in
/// the complex square [-2, 2]².
pub fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> PowerSeriesFunction {
    let degree = rng.gen_range(0..=max_degree);
    let coeffs: Vec<Complex64> = (0..=degree)
        .map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
        .collect();
    PowerSeriesFunction::new(coeffs)
}
