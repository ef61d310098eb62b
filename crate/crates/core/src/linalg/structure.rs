//! Tensor-product structure: Kronecker products, partial traces, partial
//! transposes and local isometries.
//!
//! Subsystem 0 is the leftmost factor and the most significant digit of a
//! row-major basis index.

use num_complex::Complex64;

use super::{ComplexMatrix, RectMatrix};
use crate::error::{Error, Result};

/// Local dimensions of a composite system, leftmost first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsystemDims(Vec<usize>);

impl SubsystemDims {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidDims(dims));
        }
        Ok(Self(dims))
    }

    /// `n` qubits.
    pub fn qubits(n: usize) -> Self {
        Self(vec![2; n.max(1)])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().product()
    }

    /// Dims with subsystem `index` removed.
    pub fn without(&self, index: usize) -> Result<Self> {
        self.check_index(index)?;
        let mut rest = self.0.clone();
        rest.remove(index);
        if rest.is_empty() {
            rest.push(1);
        }
        Ok(Self(rest))
    }

    /// Dims with subsystem `index` replaced by `parts`.
    pub fn splice(&self, index: usize, parts: &[usize]) -> Result<Self> {
        self.check_index(index)?;
        let mut dims = self.0.clone();
        dims.splice(index..=index, parts.iter().copied());
        Self::new(dims)
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.0.len() {
            Ok(())
        } else {
            Err(Error::SubsystemIndex {
                index,
                count: self.0.len(),
            })
        }
    }

    /// `(left, local, right)` block sizes around subsystem `index`, after
    /// checking that `matrix_dim` matches.
    fn split_at(&self, index: usize, matrix_dim: usize) -> Result<(usize, usize, usize)> {
        self.check_index(index)?;
        if self.total() != matrix_dim {
            return Err(Error::DimensionMismatch {
                expected: self.total(),
                found: matrix_dim,
            });
        }
        let left = self.0[..index].iter().product();
        let right = self.0[index + 1..].iter().product();
        Ok((left, self.0[index], right))
    }
}

/// Kronecker product `A ⊗ B`.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let db = b.dim();
    ComplexMatrix::from_fn(a.dim() * db, |r, c| {
        a[(r / db, c / db)] * b[(r % db, c % db)]
    })
}

/// Traces out subsystem `traced_index`.
pub fn partial_trace(
    rho: &ComplexMatrix,
    dims: &SubsystemDims,
    traced_index: usize,
) -> Result<ComplexMatrix> {
    let (left, local, right) = dims.split_at(traced_index, rho.dim())?;
    let idx = |l: usize, k: usize, r: usize| (l * local + k) * right + r;
    Ok(ComplexMatrix::from_fn(left * right, |row, col| {
        let (l, r) = (row / right, row % right);
        let (lp, rp) = (col / right, col % right);
        (0..local)
            .map(|k| rho[(idx(l, k, r), idx(lp, k, rp))])
            .sum()
    }))
}

/// Keeps only subsystem `kept_index`, tracing out everything else.
pub fn reduce_to(
    rho: &ComplexMatrix,
    dims: &SubsystemDims,
    kept_index: usize,
) -> Result<ComplexMatrix> {
    let (left, local, right) = dims.split_at(kept_index, rho.dim())?;
    let idx = |l: usize, k: usize, r: usize| (l * local + k) * right + r;
    Ok(ComplexMatrix::from_fn(local, |k, kp| {
        let mut acc = Complex64::new(0.0, 0.0);
        for l in 0..left {
            for r in 0..right {
                acc += rho[(idx(l, k, r), idx(l, kp, r))];
            }
        }
        acc
    }))
}

/// Keeps the subsystems listed in `kept` (in their original order), tracing
/// out the rest.
pub fn reduce_to_many(
    rho: &ComplexMatrix,
    dims: &SubsystemDims,
    kept: &[usize],
) -> Result<ComplexMatrix> {
    if dims.total() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: dims.total(),
            found: rho.dim(),
        });
    }
    for &k in kept {
        dims.check_index(k)?;
    }
    let d = dims.as_slice();
    let kept_dim: usize = (0..d.len())
        .filter(|i| kept.contains(i))
        .map(|i| d[i])
        .product();
    let traced_dim = rho.dim() / kept_dim;

    // global[a * traced_dim + t] = basis index with kept digits `a` and
    // traced digits `t`.
    let mut global = vec![0usize; rho.dim()];
    for (index, digits) in MixedRadix::new(d).enumerate() {
        let (mut a, mut t) = (0, 0);
        for (sub, &digit) in digits.iter().enumerate() {
            if kept.contains(&sub) {
                a = a * d[sub] + digit;
            } else {
                t = t * d[sub] + digit;
            }
        }
        global[a * traced_dim + t] = index;
    }
    Ok(ComplexMatrix::from_fn(kept_dim, |a, b| {
        (0..traced_dim)
            .map(|t| rho[(global[a * traced_dim + t], global[b * traced_dim + t])])
            .sum()
    }))
}

/// Row-major enumeration of multi-indices for the given radices.
struct MixedRadix<'a> {
    radices: &'a [usize],
    current: Option<Vec<usize>>,
}

impl<'a> MixedRadix<'a> {
    fn new(radices: &'a [usize]) -> Self {
        Self {
            radices,
            current: Some(vec![0; radices.len()]),
        }
    }
}

impl Iterator for MixedRadix<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let item = self.current.clone()?;
        let mut next = item.clone();
        let mut pos = next.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            next[pos] += 1;
            if next[pos] < self.radices[pos] {
                self.current = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(item)
    }
}

/// Transposes subsystem `transposed_index` in place of the full matrix.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    dims: &SubsystemDims,
    transposed_index: usize,
) -> Result<ComplexMatrix> {
    let (_, local, right) = dims.split_at(transposed_index, rho.dim())?;
    Ok(ComplexMatrix::from_fn(rho.dim(), |row, col| {
        let (row_hi, k, row_lo) = (row / (local * right), (row / right) % local, row % right);
        let (col_hi, kp, col_lo) = (col / (local * right), (col / right) % local, col % right);
        let r = (row_hi * local + kp) * right + row_lo;
        let c = (col_hi * local + k) * right + col_lo;
        rho[(r, c)]
    }))
}

/// Applies `op` (an `out x in` map) to subsystem `index` and returns
/// `(op ⊗ 1) rho (op ⊗ 1)^dagger`, whose subsystem `index` now has dimension
/// `op.rows()`.
pub fn conjugate_subsystem(
    rho: &ComplexMatrix,
    dims: &SubsystemDims,
    index: usize,
    op: &RectMatrix,
) -> Result<ComplexMatrix> {
    let (left, local, right) = dims.split_at(index, rho.dim())?;
    if op.cols() != local {
        return Err(Error::SubsystemDim {
            index,
            expected: op.cols(),
            found: local,
        });
    }
    let out = op.rows();
    let zero = Complex64::new(0.0, 0.0);
    // Nonzero entries of each column of `op`: input basis k -> [(o, op[o][k])].
    let columns: Vec<Vec<(usize, Complex64)>> = (0..local)
        .map(|k| {
            (0..out)
                .filter_map(|o| {
                    let z = op[(o, k)];
                    (z != zero).then_some((o, z))
                })
                .collect()
        })
        .collect();

    let dim_out = left * out * right;
    let mut result = ComplexMatrix::zeros(dim_out);
    let out_idx = |l: usize, o: usize, r: usize| (l * out + o) * right + r;
    for row in 0..rho.dim() {
        let (l, i, r) = (row / (local * right), (row / right) % local, row % right);
        for col in 0..rho.dim() {
            let value = rho[(row, col)];
            if value == zero {
                continue;
            }
            let (lp, j, rp) = (col / (local * right), (col / right) % local, col % right);
            for &(o, vo) in &columns[i] {
                let scaled = vo * value;
                let out_row = out_idx(l, o, r);
                for &(op_, vop) in &columns[j] {
                    result[(out_row, out_idx(lp, op_, rp))] += scaled * vop.conj();
                }
            }
        }
    }
    Ok(result)
}
