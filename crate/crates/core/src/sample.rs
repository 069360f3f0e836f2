//! Seeded random quivers and representations for property checks.

use std::sync::Arc;

use rand::Rng;

use crate::linalg::Matrix;
use crate::quiver::Quiver;
use crate::rep::Representation;

/// Random dims in 0..=max_dim and integer matrices with entries in −2..=2, 40% zeros.
pub fn random_rep<R: Rng>(q: &Arc<Quiver>, max_dim: usize, rng: &mut R) -> Representation {
    let dims: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..=max_dim)).collect();
    random_rep_with_dims(q, &dims, rng)
}

pub fn random_rep_with_dims<R: Rng>(q: &Arc<Quiver>, dims: &[usize], rng: &mut R) -> Representation {
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let (t, s) = (dims[a.target], dims[a.source]);
            let data: Vec<i64> =
                (0..t * s).map(|_| if rng.gen_bool(0.4) { 0 } else { rng.gen_range(-2..=2) }).collect();
            Matrix::from_ints(t, s, &data)
        })
        .collect();
    Representation::new(q.clone(), dims.to_vec(), maps).expect("shapes follow dims")
}

/// Reverses each arrow independently with probability 1/2.
pub fn random_orientation<R: Rng>(q: &Quiver, rng: &mut R) -> Quiver {
    let flags: Vec<bool> = (0..q.arrow_count()).map(|_| rng.gen_bool(0.5)).collect();
    q.with_reversed(&flags)
}
