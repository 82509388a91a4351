use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense matrix over arbitrary-precision integers.
///
/// Boundary matrices of desk-scale complexes are tiny, but Smith normal form
/// intermediates can grow well past machine integers, so entries are `BigInt`
/// throughout. No floating point is used anywhere in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged row in matrix literal");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in multiply");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }
}

/// Result of Smith normal form reduction: the invariant factors
/// `d1 | d2 | ... | dr` (all positive) and the rank `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than 1, i.e. the torsion a cokernel would
    /// contribute.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| **d > BigInt::from(1))
            .cloned()
            .collect()
    }
}

/// Smith normal form over the integers.
///
/// Classic row/column reduction with the smallest-nonzero-magnitude pivot at
/// each step to limit coefficient growth, followed by the divisibility fixup
/// that folds any entry not divisible by the pivot back into the working
/// block. Only the diagonal is returned; callers here never need the
/// unimodular transforms.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut factors: Vec<BigInt> = Vec::new();
    let mut k = 0usize;

    while k < rows.min(cols) {
        // Find the smallest-magnitude nonzero entry in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                let v = m.get(i, j);
                if !v.is_zero()
                    && pivot.is_none_or(|(pi, pj)| v.abs() < m.get(pi, pj).abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut m, k, pi);
        swap_cols(&mut m, k, pj);

        // Eliminate column k and row k; a nonzero remainder becomes the new
        // (smaller) pivot, so this loop terminates.
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if !m.get(i, k).is_zero() {
                    let q = m.get(i, k) / m.get(k, k);
                    row_axpy(&mut m, i, k, &q, k);
                    if !m.get(i, k).is_zero() {
                        swap_rows(&mut m, i, k);
                        clean = false;
                    }
                }
            }
            for j in k + 1..cols {
                if !m.get(k, j).is_zero() {
                    let q = m.get(k, j) / m.get(k, k);
                    col_axpy(&mut m, j, k, &q, k);
                    if !m.get(k, j).is_zero() {
                        swap_cols(&mut m, j, k);
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }

        // Divisibility fixup: if some trailing entry is not divisible by the
        // pivot, fold its row in and redo the elimination for this k.
        let mut redo = false;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(m.get(i, j) % m.get(k, k)).is_zero() {
                    for jj in k..cols {
                        let v = m.get(k, jj) + m.get(i, jj);
                        m.set(k, jj, v);
                    }
                    redo = true;
                    break 'scan;
                }
            }
        }
        if redo {
            continue;
        }

        let d = m.get(k, k).abs();
        factors.push(d);
        k += 1;
    }

    let rank = factors.len();
    SmithForm {
        invariant_factors: factors,
        rank,
    }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols {
        let x = m.get(a, j).clone();
        let y = m.get(b, j).clone();
        m.set(a, j, y);
        m.set(b, j, x);
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows {
        let x = m.get(i, a).clone();
        let y = m.get(i, b).clone();
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

/// row[i] -= q * row[k], columns from `from` on.
fn row_axpy(m: &mut IntMatrix, i: usize, k: usize, q: &BigInt, from: usize) {
    if q.is_zero() {
        return;
    }
    for j in from..m.cols {
        let v = m.get(i, j) - q * m.get(k, j);
        m.set(i, j, v);
    }
}

/// col[j] -= q * col[k], rows from `from` on.
fn col_axpy(m: &mut IntMatrix, j: usize, k: usize, q: &BigInt, from: usize) {
    if q.is_zero() {
        return;
    }
    for i in from..m.rows {
        let v = m.get(i, j) - q * m.get(i, k);
        m.set(i, j, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors_i64(sf: &SmithForm) -> Vec<i64> {
        sf.invariant_factors
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn zero_matrix() {
        let sf = smith_normal_form(&IntMatrix::zero(3, 4));
        assert_eq!(sf.rank, 0);
        assert!(sf.invariant_factors.is_empty());
    }

    #[test]
    fn identity() {
        let sf = smith_normal_form(&IntMatrix::identity(4));
        assert_eq!(sf.rank, 4);
        assert_eq!(factors_i64(&sf), vec![1, 1, 1, 1]);
    }

    // diag(2,3) ~ diag(1,6): hand row/column reduction.
    #[test]
    fn diag_2_3() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let sf = smith_normal_form(&m);
        assert_eq!(factors_i64(&sf), vec![1, 6]);
    }

    #[test]
    fn known_4x4() {
        // Matrix with invariant factors (1, 3, 21) — checked against an
        // independent reduction by hand.
        let m = IntMatrix::from_rows(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let sf = smith_normal_form(&m);
        assert_eq!(factors_i64(&sf), vec![1, 3, 21]);
    }

    #[test]
    fn divisibility_chain() {
        let m = IntMatrix::from_rows(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]);
        let sf = smith_normal_form(&m);
        let f = factors_i64(&sf);
        assert_eq!(f.iter().product::<i64>(), 240);
        for w in f.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        assert_eq!(f, vec![2, 2, 60]);
    }
}
