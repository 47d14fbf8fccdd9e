//! Brute-force referee for the Fourier formulas.
//!
//! Builds the explicit 0/1 adjacency matrix of `G(r, N)` and diagonalizes it
//! with the cyclic Jacobi method. Nothing here uses the circulant structure,
//! so agreement with [`crate::spectrum`] and [`crate::energy`] is an
//! end-to-end check of those modules.

use crate::spectrum::GraphSpec;
use crate::sum::compensated_sum;
use crate::{Error, Result};

/// Largest matrix order the oracle accepts by default.
pub const DEFAULT_ORACLE_CAP: usize = 512;

/// Dense symmetric matrix stored row-major, both triangles kept in sync.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseSymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        assert!(order >= 1);
        Self {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * m.order + i] = d;
        }
        m
    }

    /// Builds a matrix from its rows; `None` unless the rows form a square
    /// symmetric matrix.
    pub fn from_rows(rows: &[Vec<f64>]) -> Option<Self> {
        let order = rows.len();
        if order == 0 || rows.iter().any(|row| row.len() != order) {
            return None;
        }
        let entries: Vec<f64> = rows.iter().flatten().copied().collect();
        let m = Self { order, entries };
        m.is_symmetric().then_some(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    /// Sets entries `(i, j)` and `(j, i)`.
    pub fn set_symmetric(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.order).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> f64 {
        compensated_sum(self.diagonal())
    }

    pub fn frobenius_norm(&self) -> f64 {
        compensated_sum(self.entries.iter().map(|x| x * x)).sqrt()
    }

    /// `sqrt(Σ_{i≠j} a_ij²)`.
    pub fn off_diagonal_norm(&self) -> f64 {
        let upper = (0..self.order)
            .flat_map(|i| ((i + 1)..self.order).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).powi(2));
        (2.0 * compensated_sum(upper)).sqrt()
    }
}

/// Adjacency matrix of `G(r, N)`: `a_ij = 1` iff the circular distance
/// `min(|i − j|, N − |i − j|)` lies in `1..=r`.
pub fn adjacency_matrix(spec: GraphSpec) -> DenseSymmetricMatrix {
    let n = spec.n() as usize;
    let r = spec.r() as usize;
    let mut m = DenseSymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = j - i;
            let distance = gap.min(n - gap);
            if (1..=r).contains(&distance) {
                m.set_symmetric(i, j, 1.0);
            }
        }
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiConfig {
    /// Convergence is declared once the off-diagonal Frobenius norm drops
    /// below this value.
    pub off_diag_tol: f64,
    pub max_sweeps: usize,
}

impl JacobiConfig {
    /// `off_diag_tol = 1e-12 · order`, 64 sweeps.
    pub fn for_order(order: usize) -> Self {
        Self {
            off_diag_tol: 1e-12 * order as f64,
            max_sweeps: 64,
        }
    }
}

/// One cyclic-by-row sweep over all `(p, q)` pairs with `p < q`.
///
/// Pivots with `|a_pq| < skip` are left alone, and pivots negligible next to
/// both diagonal entries are zeroed without rotating.
pub(crate) fn jacobi_sweep(a: &mut DenseSymmetricMatrix, skip: f64) {
    let n = a.order;
    let mut scratch = vec![0.0; 2 * n];
    for p in 0..n {
        for q in (p + 1)..n {
            let apq = a.entries[p * n + q];
            if apq.abs() <= skip {
                continue;
            }
            let app = a.entries[p * n + p];
            let aqq = a.entries[q * n + q];
            if apq.abs() < 1e-18 * (app.abs() + aqq.abs()) {
                a.set_symmetric(p, q, 0.0);
                continue;
            }
            let theta = (aqq - app) / (2.0 * apq);
            let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
            let c = 1.0 / t.hypot(1.0);
            let s = t * c;
            rotate(a, p, q, c, s, &mut scratch);
            a.entries[p * n + p] = app - t * apq;
            a.entries[q * n + q] = aqq + t * apq;
            a.set_symmetric(p, q, 0.0);
        }
    }
}

/// Applies the plane rotation to rows `p` and `q`, then mirrors them into the
/// corresponding columns. The 2×2 block at `(p, q)` is fixed up by the caller.
fn rotate(a: &mut DenseSymmetricMatrix, p: usize, q: usize, c: f64, s: f64, scratch: &mut [f64]) {
    let n = a.order;
    debug_assert!(p < q);
    let (head, tail) = a.entries.split_at_mut(q * n);
    let row_p = &mut head[p * n..(p + 1) * n];
    let row_q = &mut tail[..n];
    for (x, y) in row_p.iter_mut().zip(row_q.iter_mut()) {
        let (xp, yq) = (*x, *y);
        *x = c * xp - s * yq;
        *y = s * xp + c * yq;
    }
    let (new_p, new_q) = scratch.split_at_mut(n);
    new_p.copy_from_slice(row_p);
    new_q.copy_from_slice(row_q);
    for (row, (&vp, &vq)) in a
        .entries
        .chunks_exact_mut(n)
        .zip(new_p.iter().zip(new_q.iter()))
    {
        row[p] = vp;
        row[q] = vq;
    }
}

/// Eigenvalues of `m` in ascending order, by cyclic Jacobi rotations on a
/// private copy.
pub fn jacobi_eigenvalues(
    m: &DenseSymmetricMatrix,
    off_diag_tol: f64,
    max_sweeps: usize,
) -> Result<Vec<f64>> {
    assert!(off_diag_tol > 0.0 && max_sweeps >= 1);
    let mut a = m.clone();
    let n = a.order as f64;
    // Entries below this bound add at most off_diag_tol/2 to the final
    // off-diagonal norm, so they never need rotating.
    let floor = 0.5 * off_diag_tol / n;
    let mut off = a.off_diagonal_norm();
    let mut sweeps = 0;
    while off >= off_diag_tol {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        // Early sweeps only chase the large pivots (Rutishauser's threshold).
        let skip = if sweeps < 3 {
            floor.max(0.2 * off / (n * n))
        } else {
            floor
        };
        jacobi_sweep(&mut a, skip);
        sweeps += 1;
        off = a.off_diagonal_norm();
    }
    let mut eig = a.diagonal();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Energy `Σ |λ|` of `G(r, N)` from the Jacobi eigenvalues of its adjacency
/// matrix, refusing graphs with more than `cap` vertices.
pub fn energy_oracle_capped(spec: GraphSpec, cap: usize) -> Result<f64> {
    if spec.n() > cap as u64 {
        return Err(Error::OracleTooLarge { n: spec.n(), cap });
    }
    let adjacency = adjacency_matrix(spec);
    let config = JacobiConfig::for_order(adjacency.order());
    let eig = jacobi_eigenvalues(&adjacency, config.off_diag_tol, config.max_sweeps)?;
    Ok(compensated_sum(eig.iter().map(|x| x.abs())))
}

/// [`energy_oracle_capped`] with [`DEFAULT_ORACLE_CAP`].
pub fn energy_oracle(spec: GraphSpec) -> Result<f64> {
    energy_oracle_capped(spec, DEFAULT_ORACLE_CAP)
}
