use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::HiggsParams;
use crate::error::{Error, Result};

/// One summand `E_l` of a critical point `E = E_0 + ... + E_m`, listed in the
/// order the Higgs field maps them (`E_l -> E_{l+1} K(D)`).
///
/// `weights[p]` holds the parabolic weights `E_l` carries at point `p`;
/// there are `rank` of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub rank: i64,
    pub degree: i64,
    pub weights: Vec<Vec<BigRational>>,
}

/// Complex dimension of the moduli space of rank-`r` parabolic Higgs bundles
/// with full flags at `n` points: `r^2 (2g - 2) + 2 + n (r^2 - r)`.
pub fn moduli_dim(r: i64, g: u32, n: usize) -> i64 {
    r * r * (2 * i64::from(g) - 2) + 2 + n as i64 * (r * r - r)
}

/// `dim P_p(E_l, E_l)`: pairs `(a, b)` of weights of the piece with `a <= b`.
fn dim_p(ws: &[BigRational]) -> i64 {
    let mut k = 0;
    for a in ws {
        for b in ws {
            k += i64::from(a <= b);
        }
    }
    k
}

/// `dim N_p(E_l, E_{l+1})`: pairs with the `E_l` weight strictly below the
/// `E_{l+1}` weight.
fn dim_n(lower: &[BigRational], upper: &[BigRational]) -> i64 {
    let mut k = 0;
    for a in lower {
        for b in upper {
            k += i64::from(a < b);
        }
    }
    k
}

/// Morse index of the Hitchin functional at a fixed point with the given
/// decomposition, from the Euler characteristics of the deformation complex.
pub fn morse_index(pieces: &[Piece], params: &HiggsParams) -> Result<i64> {
    let n = params.n();
    let g = i64::from(params.g);
    let r: i64 = pieces.iter().map(|p| p.rank).sum();
    let deg: i64 = pieces.iter().map(|p| p.degree).sum();
    if r != 3 || deg != params.delta {
        return Err(Error::RankDegreeMismatch(format!(
            "ranks sum to {r} and degrees to {deg}; expected 3 and {}",
            params.delta
        )));
    }
    for (l, piece) in pieces.iter().enumerate() {
        if piece.rank < 1
            || piece.weights.len() != n
            || piece.weights.iter().any(|w| w.len() as i64 != piece.rank)
        {
            return Err(Error::RankDegreeMismatch(format!(
                "piece {l} of rank {} does not carry {} weights at each of {n} points",
                piece.rank, piece.rank
            )));
        }
    }
    let n_i = n as i64;
    let flags = n_i * (r * r - r) / 2;
    let mut lambda = r * r * (2 * g - 2) + 2 * flags;
    for piece in pieces {
        let p: i64 = piece.weights.iter().map(|w| dim_p(w)).sum();
        lambda += 2 * ((1 - g - n_i) * piece.rank * piece.rank + p);
    }
    for pair in pieces.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let nn: i64 = a.weights.iter().zip(&b.weights).map(|(x, y)| dim_n(x, y)).sum();
        lambda += 2 * ((1 - g) * a.rank * b.rank - a.rank * b.degree + b.rank * a.degree - nn);
    }
    Ok(lambda)
}
