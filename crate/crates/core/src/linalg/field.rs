use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact field of coefficients, passed around as a small context value.
///
/// The element type is field-specific (`BigRational` for ℚ, a reduced `u64`
/// for 𝔽_p); all arithmetic goes through the context so a runtime modulus
/// does not have to live inside every element.
pub trait Field: Copy + Send + Sync + 'static {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; must not be called on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn characteristic(&self) -> u64;
    /// Canonical display form, used for serialization.
    fn elem_str(&self, a: &Self::Elem) -> String;

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }
}

/// The rationals ℚ with arbitrary-precision numerator and denominator.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        debug_assert!(!a.is_zero());
        a.recip()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn elem_str(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

/// The prime field 𝔽_p, elements reduced to `0..p`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        // Fermat: a^(p-2) mod p.
        let mut base = *a as u128;
        let mut exp = self.p - 2;
        let m = self.p as u128;
        let mut acc: u128 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc as u64
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn elem_str(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Dense matrix over an exact field.
#[derive(Clone, Debug)]
pub struct FieldMatrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> FieldMatrix<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> FieldMatrix<F> {
        FieldMatrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_columns(field: F, rows: usize, cols: &[Vec<F::Elem>]) -> FieldMatrix<F> {
        let mut m = FieldMatrix::zero(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for i in 0..rows {
                m.set(i, j, col[i].clone());
            }
        }
        m
    }

    pub fn from_int_rows(field: F, rows: &[Vec<i64>]) -> FieldMatrix<F> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = FieldMatrix::zero(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(*v));
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mat_vec(&self, field: F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![field.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = field.zero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !field.is_zero(a) && !field.is_zero(&v[j]) {
                    acc = field.add(&acc, &field.mul(a, &v[j]));
                }
            }
            out[i] = acc;
        }
        out
    }

    /// Row-reduce a copy; returns (rref, pivot columns).
    fn rref(&self, field: F) -> (FieldMatrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !field.is_zero(m.get(i, col))) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let a = m.get(p, j).clone();
                    let b = m.get(row, j).clone();
                    m.set(p, j, b);
                    m.set(row, j, a);
                }
            }
            let inv = field.inv(m.get(row, col));
            for j in col..m.cols {
                let v = field.mul(m.get(row, j), &inv);
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i != row && !field.is_zero(m.get(i, col)) {
                    let c = m.get(i, col).clone();
                    for j in col..m.cols {
                        let v = field.sub(m.get(i, j), &field.mul(&c, m.get(row, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, field: F) -> usize {
        self.rref(field).1.len()
    }

    /// Basis of the null space, as column vectors of length `cols`.
    pub fn kernel_basis(&self, field: F) -> Vec<Vec<F::Elem>> {
        let (r, pivots) = self.rref(field);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![field.zero(); self.cols];
            v[free] = field.one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = field.neg(r.get(prow, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the column space: the original columns at pivot positions.
    pub fn image_basis(&self, field: F) -> Vec<Vec<F::Elem>> {
        let (_, pivots) = self.rref(field);
        pivots.iter().map(|&j| self.column(j)).collect()
    }

    /// Solves `self * x = rhs` for one solution.
    pub fn solve(&self, field: F, rhs: &[F::Elem]) -> Result<Vec<F::Elem>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = FieldMatrix::zero(field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref(field);
        if pivots.contains(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![field.zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r.get(prow, self.cols).clone();
        }
        Ok(x)
    }

    /// Inverse of a square matrix, or None if singular.
    pub fn inverse(&self, field: F) -> Option<FieldMatrix<F>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = FieldMatrix::zero(field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, field.one());
        }
        let (r, pivots) = aug.rref(field);
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        let mut out = FieldMatrix::zero(field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(out)
    }
}

/// Coordinates in a quotient `span(Z) / span(B)`.
///
/// `rep_indices` select columns of the original `Z` whose classes form a
/// basis; `proj` is an `r x n` matrix with `proj * b = 0` for `b` in
/// `span(B)` and `proj * z_rep_i = e_i`, so applying it to any vector of
/// `span(Z)` yields its coordinates modulo the subspace.
pub struct QuotientSpace<F: Field> {
    pub rep_indices: Vec<usize>,
    pub proj: FieldMatrix<F>,
}

impl<F: Field> QuotientSpace<F> {
    pub fn dim(&self) -> usize {
        self.rep_indices.len()
    }

    pub fn coordinates(&self, field: F, v: &[F::Elem]) -> Vec<F::Elem> {
        self.proj.mat_vec(field, v)
    }
}

/// Builds quotient coordinates for `span(space) / span(subspace)` inside an
/// ambient space of dimension `n`. Requires `span(subspace) ⊆ span(space)`
/// (not checked; callers pass boundaries inside cycles).
pub fn quotient_coordinates<F: Field>(
    field: F,
    n: usize,
    subspace: &[Vec<F::Elem>],
    space: &[Vec<F::Elem>],
) -> QuotientSpace<F> {
    // Greedily pick an independent spanning sequence: subspace columns
    // first, then representative columns from `space`, then standard basis
    // vectors to complete to all of k^n.
    let mut acc = RankAccumulator::new(field);
    let mut b_cols: Vec<Vec<F::Elem>> = Vec::new();
    for col in subspace {
        let sparse = to_sparse(field, col);
        if acc.add(sparse) {
            b_cols.push(col.clone());
        }
    }
    let mut rep_indices = Vec::new();
    let mut r_cols: Vec<Vec<F::Elem>> = Vec::new();
    for (idx, col) in space.iter().enumerate() {
        let sparse = to_sparse(field, col);
        if acc.add(sparse) {
            rep_indices.push(idx);
            r_cols.push(col.clone());
        }
    }
    let mut e_cols: Vec<Vec<F::Elem>> = Vec::new();
    for i in 0..n {
        if acc.rank() == n {
            break;
        }
        if acc.add(vec![(i, field.one())]) {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            e_cols.push(v);
        }
    }
    let b = b_cols.len();
    let r = r_cols.len();
    let mut all = b_cols;
    all.extend(r_cols);
    all.extend(e_cols);
    let m = FieldMatrix::from_columns(field, n, &all);
    let inv = m
        .inverse(field)
        .expect("independent spanning columns form an invertible matrix");
    let mut proj = FieldMatrix::zero(field, r, n);
    for i in 0..r {
        for j in 0..n {
            proj.set(i, j, inv.get(b + i, j).clone());
        }
    }
    QuotientSpace { rep_indices, proj }
}

fn to_sparse<F: Field>(field: F, v: &[F::Elem]) -> Vec<(usize, F::Elem)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !field.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Incremental rank of a growing set of sparse column vectors.
///
/// Columns are reduced against stored pivot columns keyed by leading index;
/// fingerprinting feeds hundreds of thousands of near-block-diagonal product
/// columns through this, so sparsity matters more than asymptotics here.
pub struct RankAccumulator<F: Field> {
    field: F,
    // leading index -> reduced column with that leading index, scaled to
    // leading coefficient 1; entries sorted by index
    pivots: std::collections::HashMap<usize, Vec<(usize, F::Elem)>>,
}

impl<F: Field> RankAccumulator<F> {
    pub fn new(field: F) -> RankAccumulator<F> {
        RankAccumulator {
            field,
            pivots: std::collections::HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Does `col` already lie in the span of the accumulated columns?
    pub fn in_span(&self, mut col: Vec<(usize, F::Elem)>) -> bool {
        let f = self.field;
        col.sort_by_key(|(i, _)| *i);
        col.retain(|(_, v)| !f.is_zero(v));
        loop {
            let Some((lead, lead_val)) = col.first().cloned() else {
                return true;
            };
            match self.pivots.get(&lead) {
                None => return false,
                Some(pivot) => {
                    col = sparse_axpy(f, &col, &f.neg(&lead_val), pivot);
                }
            }
        }
    }

    /// Sorted leading indices of the accumulated pivot columns.
    pub fn pivot_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = self.pivots.keys().copied().collect();
        idx.sort_unstable();
        idx
    }

    /// The canonical representative of `col` modulo the accumulated span:
    /// the unique equivalent vector supported away from all pivot indices.
    pub fn reduce_fully(&self, mut col: Vec<(usize, F::Elem)>) -> Vec<(usize, F::Elem)> {
        let f = self.field;
        col.sort_by_key(|(i, _)| *i);
        col.retain(|(_, v)| !f.is_zero(v));
        loop {
            // eliminating the smallest pivot-indexed entry only introduces
            // entries at larger indices, so this terminates
            let Some((i, v)) = col
                .iter()
                .find(|(i, _)| self.pivots.contains_key(i))
                .cloned()
            else {
                return col;
            };
            col = sparse_axpy(f, &col, &f.neg(&v), &self.pivots[&i]);
        }
    }

    /// Reduces `col` (sparse, any order) and returns true iff it increased
    /// the rank.
    pub fn add(&mut self, mut col: Vec<(usize, F::Elem)>) -> bool {
        let f = self.field;
        col.sort_by_key(|(i, _)| *i);
        col.retain(|(_, v)| !f.is_zero(v));
        loop {
            let Some((lead, lead_val)) = col.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    let inv = f.inv(&lead_val);
                    for (_, v) in col.iter_mut() {
                        *v = f.mul(v, &inv);
                    }
                    self.pivots.insert(lead, col);
                    return true;
                }
                Some(pivot) => {
                    // col -= lead_val * pivot (pivot has leading coeff 1)
                    col = sparse_axpy(f, &col, &f.neg(&lead_val), pivot);
                }
            }
        }
    }
}

/// a + c*b for sorted sparse vectors.
fn sparse_axpy<F: Field>(
    f: F,
    a: &[(usize, F::Elem)],
    c: &F::Elem,
    b: &[(usize, F::Elem)],
) -> Vec<(usize, F::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = f.mul(c, &b[j].1);
            if !f.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = f.add(&a[i].1, &f.mul(c, &b[j].1));
            if !f.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduce a BigRational vector to a primitive integer vector (clear
/// denominators, divide by content). Used to turn rational kernel vectors
/// into integer cycles.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() || gcd.is_one() {
        ints
    } else {
        ints.iter().map(|x| x / &gcd).collect()
    }
}
