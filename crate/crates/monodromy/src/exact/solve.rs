//! Solver for invariant antisymmetric bilinear forms.
//!
//! Given generators G, the antisymmetric matrices X with G^t X G = X for
//! every G form a linear space; its basis is computed by parameterizing the
//! strictly-upper-triangular entries and taking an exact kernel.

use num_traits::Zero;

use super::matrix::{primitive_integer_entries, ExactMatrix, ExactVector};
use super::{BigRat, ExactError};

/// Basis of the space of antisymmetric `n x n` matrices `X` satisfying
/// `G^t X G = X` for every generator. Basis elements are canonicalized to
/// primitive integer matrices whose first nonzero upper-triangular entry
/// (row-major order) is positive. An empty basis is a valid outcome.
pub fn invariant_antisymmetric_space(
    generators: &[&ExactMatrix],
) -> Result<Vec<ExactMatrix>, ExactError> {
    let n = match generators.first() {
        Some(g) => g.rows(),
        None => return Err(ExactError::BadShape("no generators".into())),
    };
    for g in generators {
        if !g.is_square() || g.rows() != n {
            return Err(ExactError::BadShape(format!(
                "generators must all be {n}x{n}"
            )));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let unknowns = pairs.len();

    // Row for each generator and each strictly-upper position (p, q):
    // the (p, q) entry of G^t E_ij G - E_ij, where E_ij = e_i e_j^t - e_j e_i^t.
    // (G^t E_ij G)[p][q] = G[i][p] G[j][q] - G[j][p] G[i][q].
    let mut rows = Vec::with_capacity(generators.len() * unknowns);
    for g in generators {
        for &(p, q) in &pairs {
            let mut row = Vec::with_capacity(unknowns);
            for &(i, j) in &pairs {
                let mut value = g.at(i, p) * g.at(j, q) - g.at(j, p) * g.at(i, q);
                if (i, j) == (p, q) {
                    value -= BigRat::from_integer(1.into());
                }
                row.push(value);
            }
            rows.push(row);
        }
    }
    let constraint =
        ExactMatrix::new(rows.len(), unknowns, rows.into_iter().flatten().collect())?;
    let kernel = constraint.kernel_basis();

    let mut basis = Vec::with_capacity(kernel.len());
    for v in kernel {
        basis.push(antisymmetric_from_upper(n, &pairs, &v));
    }
    Ok(basis)
}

/// Rebuilds the antisymmetric matrix from its upper-triangular entries,
/// scaled to a primitive integer matrix with the first nonzero
/// upper-triangular entry positive.
fn antisymmetric_from_upper(n: usize, pairs: &[(usize, usize)], v: &ExactVector) -> ExactMatrix {
    let ints = primitive_integer_entries(v.entries());
    let flip = ints
        .iter()
        .find(|e| !e.is_zero())
        .map(|e| e < &&num_bigint::BigInt::zero())
        .unwrap_or(false);
    let mut m = ExactMatrix::zeros(n, n);
    for (k, &(i, j)) in pairs.iter().enumerate() {
        let mut e = BigRat::from_integer(ints[k].clone());
        if flip {
            e = -e;
        }
        m.set(i, j, e.clone());
        m.set(j, i, -e);
    }
    m
}
