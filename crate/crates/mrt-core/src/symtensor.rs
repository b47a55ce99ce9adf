//! Symmetric tensors in compressed multi-index storage.
//!
//! A rank-`m` symmetric tensor in dimension `n` is stored with one scalar per
//! sorted multi-index (axes `0..n`, non-decreasing), enumerated
//! lexicographically. That order is part of the public contract: component
//! `k` of every rank-`m` tensor corresponds to `IndexTable::new(n, m)`
//! entry `k`. Inner products weight each component by the multiplicity of its
//! index, so they agree with the full `n^m`-term sums over unsorted indices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::comb::{binomial, factorial};
use crate::scalar::Scalar;

/// Error type for rank/range violations that are data-dependent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A moment or Saint Venant order lies outside `0..=max`.
    OrderOutOfRange { name: &'static str, value: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderOutOfRange { name, value, max } => {
                write!(f, "{name} = {value} out of range 0..={max}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

/// Sorted multi-index: `m` axes in `0..n`, non-decreasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymIndex {
    axes: Vec<u8>,
}

impl SymIndex {
    /// Builds from an arbitrary (possibly unsorted) list of axes.
    pub fn new(axes: &[u8]) -> Self {
        let mut axes = axes.to_vec();
        axes.sort_unstable();
        SymIndex { axes }
    }

    pub fn rank(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[u8] {
        &self.axes
    }

    /// Number of distinct full index tuples collapsing to this sorted index:
    /// `m! / prod_v count(v)!`.
    pub fn multiplicity(&self) -> u128 {
        let mut mult = factorial(self.axes.len() as u32);
        let mut i = 0;
        while i < self.axes.len() {
            let mut j = i;
            while j < self.axes.len() && self.axes[j] == self.axes[i] {
                j += 1;
            }
            mult /= factorial((j - i) as u32);
            i = j;
        }
        mult
    }
}

impl fmt::Debug for SymIndex {
    fmt_debug_as_tuple!();
}

macro_rules! fmt_debug_as_tuple {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "(")?;
            for (i, a) in self.axes.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")
        }
    };
}
use fmt_debug_as_tuple;

/// Lexicographic enumeration of all sorted multi-indices for fixed `(n, m)`.
pub fn enumerate_indices(n: usize, m: usize) -> Vec<SymIndex> {
    assert!(n >= 1 && n <= u8::MAX as usize, "dimension out of range");
    let mut out = Vec::with_capacity(index_count(n, m));
    let mut cur = vec![0u8; m];
    loop {
        out.push(SymIndex { axes: cur.clone() });
        // advance to the next non-decreasing tuple
        let mut pos = m;
        while pos > 0 {
            if (cur[pos - 1] as usize) < n - 1 {
                let v = cur[pos - 1] + 1;
                for slot in &mut cur[pos - 1..] {
                    *slot = v;
                }
                break;
            }
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
    }
}

/// `binomial(n + m - 1, m)`: the number of sorted multi-indices.
pub fn index_count(n: usize, m: usize) -> usize {
    binomial((n + m - 1) as u32, m as u32) as usize
}

/// Cached enumeration for one `(n, m)` pair with positional lookup.
#[derive(Clone)]
pub struct IndexTable {
    n: usize,
    m: usize,
    indices: Vec<SymIndex>,
}

impl IndexTable {
    pub fn new(n: usize, m: usize) -> Self {
        IndexTable { n, m, indices: enumerate_indices(n, m) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[SymIndex] {
        &self.indices
    }

    pub fn index(&self, pos: usize) -> &SymIndex {
        &self.indices[pos]
    }

    /// Lexicographic rank of a sorted multi-index (combinatorial number
    /// system; no search).
    pub fn position_sorted(&self, axes: &[u8]) -> usize {
        debug_assert_eq!(axes.len(), self.m);
        debug_assert!(axes.windows(2).all(|w| w[0] <= w[1]));
        let n = self.n;
        let mut rank = 0usize;
        let mut lo = 0u8;
        for (j, &a) in axes.iter().enumerate() {
            let remaining = self.m - 1 - j;
            for v in lo..a {
                // tuples of length `remaining` with values in [v, n)
                rank += binomial((n - v as usize + remaining - 1) as u32, remaining as u32)
                    as usize;
            }
            lo = a;
        }
        rank
    }

    /// Positional lookup for an arbitrary (unsorted) index tuple.
    pub fn position(&self, axes: &[u8]) -> usize {
        let mut sorted = axes.to_vec();
        sorted.sort_unstable();
        self.position_sorted(&sorted)
    }

    /// Multiplicities of all indices in enumeration order.
    pub fn multiplicities(&self) -> Vec<u128> {
        self.indices.iter().map(SymIndex::multiplicity).collect()
    }
}

/// One way of splitting a sorted multi-index into a sub-multiset and its
/// complement, together with the number of position choices realizing it.
#[derive(Clone, Debug)]
pub struct Split {
    pub taken: Vec<u8>,
    pub rest: Vec<u8>,
    pub ways: u64,
}

/// Enumerates every sub-multiset of `axes` (all sizes), with the count of
/// position subsets realizing each split: `prod_v C(count(v), taken(v))`.
pub fn multiset_splits(axes: &[u8]) -> Vec<Split> {
    // group into (value, count) runs
    let mut runs: Vec<(u8, usize)> = Vec::new();
    for &a in axes {
        match runs.last_mut() {
            Some((v, c)) if *v == a => *c += 1,
            _ => runs.push((a, 1)),
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; runs.len()];
    loop {
        let mut taken = Vec::new();
        let mut rest = Vec::new();
        let mut ways = 1u64;
        for (slot, &(v, c)) in runs.iter().enumerate() {
            let k = choice[slot];
            taken.extend(core::iter::repeat(v).take(k));
            rest.extend(core::iter::repeat(v).take(c - k));
            ways *= binomial(c as u32, k as u32) as u64;
        }
        out.push(Split { taken, rest, ways });
        let mut slot = runs.len();
        loop {
            if slot == 0 {
                return out;
            }
            slot -= 1;
            if choice[slot] < runs[slot].1 {
                choice[slot] += 1;
                for c in &mut choice[slot + 1..] {
                    *c = 0;
                }
                break;
            }
        }
    }
}

fn merge_sorted(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Dense symmetric tensor of rank `m` in dimension `n`.
#[derive(Clone, PartialEq)]
pub struct SymTensor<S> {
    n: usize,
    m: usize,
    comps: Vec<S>,
}

impl<S: Scalar> SymTensor<S> {
    pub fn zeros(n: usize, m: usize) -> Self {
        SymTensor { n, m, comps: vec![S::zero(); index_count(n, m)] }
    }

    /// Rank-0 tensor holding one scalar.
    pub fn scalar(n: usize, value: S) -> Self {
        SymTensor { n, m: 0, comps: vec![value] }
    }

    /// Rank-1 basis vector `e_axis`.
    pub fn basis(n: usize, axis: usize) -> Self {
        let mut t = SymTensor::zeros(n, 1);
        t.comps[axis] = S::one();
        t
    }

    /// Rank-1 tensor with the given components.
    pub fn vector(comps: &[S]) -> Self {
        SymTensor { n: comps.len(), m: 1, comps: comps.to_vec() }
    }

    /// Kronecker tensor: rank 2, ones on the diagonal.
    pub fn delta(n: usize) -> Self {
        let table = IndexTable::new(n, 2);
        let mut t = SymTensor::zeros(n, 2);
        for v in 0..n as u8 {
            t.comps[table.position_sorted(&[v, v])] = S::one();
        }
        t
    }

    /// Symmetric power `y^m`: component at index `I` is `prod_{a in I} y_a`.
    pub fn power(y: &[S], m: usize) -> Self {
        let n = y.len();
        let table = IndexTable::new(n, m);
        let comps = table
            .indices()
            .iter()
            .map(|idx| {
                let mut p = S::one();
                for &a in idx.axes() {
                    p *= y[a as usize].clone();
                }
                p
            })
            .collect();
        SymTensor { n, m, comps }
    }

    pub fn from_components(n: usize, m: usize, comps: Vec<S>) -> Self {
        assert_eq!(comps.len(), index_count(n, m), "component count mismatch");
        SymTensor { n, m, comps }
    }

    pub fn from_fn(n: usize, m: usize, mut f: impl FnMut(&SymIndex) -> S) -> Self {
        let comps = enumerate_indices(n, m).iter().map(|idx| f(idx)).collect();
        SymTensor { n, m, comps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn components(&self) -> &[S] {
        &self.comps
    }

    pub fn component(&self, pos: usize) -> &S {
        &self.comps[pos]
    }

    pub fn component_mut(&mut self, pos: usize) -> &mut S {
        &mut self.comps[pos]
    }

    /// Component at an arbitrary (unsorted) index tuple.
    pub fn get(&self, axes: &[u8]) -> &S {
        assert_eq!(axes.len(), self.m, "index rank mismatch");
        &self.comps[IndexTable::new(self.n, self.m).position(axes)]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SymTensor<T> {
        SymTensor { n: self.n, m: self.m, comps: self.comps.iter().map(f).collect() }
    }

    pub fn scale(&self, factor: &S) -> Self {
        let mut out = self.clone();
        for c in &mut out.comps {
            *c *= factor.clone();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.m), (other.n, other.m), "tensor shape mismatch");
        let mut out = self.clone();
        for (c, o) in out.comps.iter_mut().zip(&other.comps) {
            *c += o.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.m), (other.n, other.m), "tensor shape mismatch");
        let mut out = self.clone();
        for (c, o) in out.comps.iter_mut().zip(&other.comps) {
            *c -= o.clone();
        }
        out
    }

    /// Multiplicity-weighted inner product; agrees with the full-index sum.
    pub fn inner(&self, other: &Self) -> S {
        assert_eq!((self.n, self.m), (other.n, other.m), "tensor shape mismatch");
        let mut acc = S::zero();
        for (idx, (a, b)) in enumerate_indices(self.n, self.m).iter().zip(
            self.comps.iter().zip(&other.comps),
        ) {
            let w = S::from_int(idx.multiplicity() as i64);
            acc += w * a.clone() * b.clone();
        }
        acc
    }

    /// Symmetric product: full symmetrization of the tensor product.
    pub fn sym_product(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let (p, q) = (self.m, other.m);
        let out_table = IndexTable::new(self.n, p + q);
        let left_table = IndexTable::new(self.n, p);
        let right_table = IndexTable::new(self.n, q);
        let norm = S::from_int(binomial((p + q) as u32, p as u32) as i64);
        let mut comps = Vec::with_capacity(out_table.len());
        for idx in out_table.indices() {
            let mut acc = S::zero();
            for split in multiset_splits(idx.axes()) {
                if split.taken.len() != p {
                    continue;
                }
                let u = &self.comps[left_table.position_sorted(&split.taken)];
                if u.is_zero() {
                    continue;
                }
                let v = &other.comps[right_table.position_sorted(&split.rest)];
                let w = S::from_int(split.ways as i64) * u.clone();
                acc.mul_add_assign(&w, v);
            }
            comps.push(acc / norm.clone());
        }
        SymTensor { n: self.n, m: p + q, comps }
    }

    /// Contraction of the last `rank(u)` slots with `u` (the adjoint of
    /// symmetric multiplication by `u`).
    ///
    /// Panics if `rank(u) > rank(self)`.
    pub fn contract_with(&self, u: &Self) -> Self {
        assert_eq!(self.n, u.n, "dimension mismatch");
        assert!(u.m <= self.m, "contraction rank {} exceeds tensor rank {}", u.m, self.m);
        let out_rank = self.m - u.m;
        let out_table = IndexTable::new(self.n, out_rank);
        let self_table = IndexTable::new(self.n, self.m);
        let u_table = IndexTable::new(self.n, u.m);
        let mut comps = vec![S::zero(); out_table.len()];
        for (u_idx, u_val) in u_table.indices().iter().zip(&u.comps) {
            if u_val.is_zero() {
                continue;
            }
            let weighted = S::from_int(u_idx.multiplicity() as i64) * u_val.clone();
            for (out_idx, acc) in out_table.indices().iter().zip(comps.iter_mut()) {
                let merged = merge_sorted(out_idx.axes(), u_idx.axes());
                acc.mul_add_assign(&weighted, &self.comps[self_table.position_sorted(&merged)]);
            }
        }
        SymTensor { n: self.n, m: out_rank, comps }
    }
}

/// Symmetric multiplication by a vector: `i_y u = y u`.
pub fn i_vec<S: Scalar>(y: &[S], u: &SymTensor<S>) -> SymTensor<S> {
    SymTensor::vector(y).sym_product(u)
}

/// Contraction with a vector: `(j_y w)_I = w_{I j} y^j`.
///
/// Panics on rank-0 input.
pub fn j_vec<S: Scalar>(y: &[S], w: &SymTensor<S>) -> SymTensor<S> {
    assert!(w.rank() >= 1, "j_vec needs rank >= 1");
    w.contract_with(&SymTensor::vector(y))
}

/// Symmetric multiplication by the Kronecker tensor.
pub fn i_delta<S: Scalar>(u: &SymTensor<S>) -> SymTensor<S> {
    SymTensor::delta(u.n()).sym_product(u)
}

/// Double contraction with the Kronecker tensor: `(j w)_I = w_{I j k} δ^{jk}`.
///
/// Panics on rank < 2 input.
pub fn j_delta<S: Scalar>(w: &SymTensor<S>) -> SymTensor<S> {
    assert!(w.rank() >= 2, "j_delta needs rank >= 2");
    w.contract_with(&SymTensor::delta(w.n()))
}

/// Tensor with two separately symmetric index blocks (an element of
/// `S^{left_rank} ⊗ S^{right_rank}`), stored left-block-major.
#[derive(Clone, PartialEq)]
pub struct BiSymTensor<S> {
    n: usize,
    left_rank: usize,
    right_rank: usize,
    comps: Vec<S>,
}

impl<S: Scalar> BiSymTensor<S> {
    pub fn zeros(n: usize, left_rank: usize, right_rank: usize) -> Self {
        let len = index_count(n, left_rank) * index_count(n, right_rank);
        BiSymTensor { n, left_rank, right_rank, comps: vec![S::zero(); len] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ranks(&self) -> (usize, usize) {
        (self.left_rank, self.right_rank)
    }

    pub fn components(&self) -> &[S] {
        &self.comps
    }

    pub fn component(&self, left_pos: usize, right_pos: usize) -> &S {
        &self.comps[left_pos * index_count(self.n, self.right_rank) + right_pos]
    }

    pub fn component_mut(&mut self, left_pos: usize, right_pos: usize) -> &mut S {
        let stride = index_count(self.n, self.right_rank);
        &mut self.comps[left_pos * stride + right_pos]
    }

    /// Component at arbitrary (unsorted) index tuples for both blocks.
    pub fn get(&self, left: &[u8], right: &[u8]) -> &S {
        let lp = IndexTable::new(self.n, self.left_rank).position(left);
        let rp = IndexTable::new(self.n, self.right_rank).position(right);
        self.component(lp, rp)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Largest absolute numerator witnessed, for reporting. Uses the scalar's
    /// `Debug` only through the caller; here we just expose the raw slice.
    pub fn iter(&self) -> impl Iterator<Item = &S> {
        self.comps.iter()
    }

    /// Bilinear pairing `<T, u ⊗ v>` with multiplicity weights on both blocks.
    pub fn pair(&self, u: &SymTensor<S>, v: &SymTensor<S>) -> S {
        assert_eq!(u.rank(), self.left_rank, "left rank mismatch");
        assert_eq!(v.rank(), self.right_rank, "right rank mismatch");
        let left = IndexTable::new(self.n, self.left_rank);
        let right = IndexTable::new(self.n, self.right_rank);
        let mut acc = S::zero();
        for (lp, l_idx) in left.indices().iter().enumerate() {
            let lu = S::from_int(l_idx.multiplicity() as i64) * u.components()[lp].clone();
            if lu.is_zero() {
                continue;
            }
            for (rp, r_idx) in right.indices().iter().enumerate() {
                let rv = S::from_int(r_idx.multiplicity() as i64) * v.components()[rp].clone();
                let t = self.component(lp, rp);
                acc += lu.clone() * rv * t.clone();
            }
        }
        acc
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BiSymTensor<T> {
        BiSymTensor {
            n: self.n,
            left_rank: self.left_rank,
            right_rank: self.right_rank,
            comps: self.comps.iter().map(f).collect(),
        }
    }
}

/// One term of the Saint Venant assembly: output block `(left, right)`
/// accumulates `num/den` times the `comp`-th tensor component acted on by
/// the order-`(m-r)` multi-derivative (or frequency power) `deriv`.
#[derive(Clone, Debug)]
pub struct SvTerm {
    pub left: usize,
    pub right: usize,
    pub comp: usize,
    pub deriv: usize,
    pub num: i64,
    pub den: i64,
}

/// Precomputed index bookkeeping for the Saint Venant operator at fixed
/// `(n, m, r)`.
///
/// The same term list drives the purely algebraic symbol (powers of a
/// frequency vector), the exact polynomial operator (partial derivatives) and
/// the grid operator (spectral derivatives): only the interpretation of
/// `deriv` changes.
pub struct SvPlan {
    n: usize,
    m: usize,
    r: usize,
    left: IndexTable,
    right: IndexTable,
    deriv: IndexTable,
    terms: Vec<SvTerm>,
}

impl SvPlan {
    pub fn new(n: usize, m: usize, r: usize) -> Result<Self, Error> {
        if r > m {
            return Err(Error::OrderOutOfRange { name: "r", value: r, max: m });
        }
        let left = IndexTable::new(n, m - r);
        let right = IndexTable::new(n, m);
        let deriv = IndexTable::new(n, m - r);
        let comp = IndexTable::new(n, m);
        let mut terms = Vec::new();
        for (lp, l_idx) in left.indices().iter().enumerate() {
            let left_splits = multiset_splits(l_idx.axes());
            for (rp, r_idx) in right.indices().iter().enumerate() {
                let right_splits = multiset_splits(r_idx.axes());
                for a in &left_splits {
                    // the alternating index: how many left slots carry a derivative
                    let l = (m - r) - a.taken.len();
                    let b_size = r + l;
                    let sign = if l % 2 == 0 { 1i64 } else { -1i64 };
                    let den = binomial(m as u32, b_size as u32) as i64;
                    for b in &right_splits {
                        if b.taken.len() != b_size {
                            continue;
                        }
                        let comp_axes = merge_sorted(&a.taken, &b.taken);
                        let deriv_axes = merge_sorted(&a.rest, &b.rest);
                        terms.push(SvTerm {
                            left: lp,
                            right: rp,
                            comp: comp.position_sorted(&comp_axes),
                            deriv: deriv.position_sorted(&deriv_axes),
                            num: sign * (a.ways * b.ways) as i64,
                            den,
                        });
                    }
                }
            }
        }
        Ok(SvPlan { n, m, r, left, right, deriv, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tensor_rank(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.r
    }

    pub fn left_table(&self) -> &IndexTable {
        &self.left
    }

    pub fn right_table(&self) -> &IndexTable {
        &self.right
    }

    /// Table for the order-`(m-r)` derivative multi-indices.
    pub fn deriv_table(&self) -> &IndexTable {
        &self.deriv
    }

    pub fn terms(&self) -> &[SvTerm] {
        &self.terms
    }

    /// Applies the algebraic symbol to `h`: derivative slots become powers of
    /// the frequency vector `y`.
    pub fn apply_symbol<S: Scalar>(&self, y: &[S], h: &SymTensor<S>) -> BiSymTensor<S> {
        assert_eq!(y.len(), self.n, "frequency vector dimension mismatch");
        assert_eq!(h.rank(), self.m, "tensor rank mismatch");
        let y_pow: Vec<S> = self
            .deriv
            .indices()
            .iter()
            .map(|idx| {
                let mut p = S::one();
                for &a in idx.axes() {
                    p *= y[a as usize].clone();
                }
                p
            })
            .collect();
        let mut out = BiSymTensor::zeros(self.n, self.m - self.r, self.m);
        let stride = self.right.len();
        for t in &self.terms {
            let hv = &h.components()[t.comp];
            if hv.is_zero() {
                continue;
            }
            let w = S::from_ratio(t.num, t.den) * y_pow[t.deriv].clone();
            out.comps[t.left * stride + t.right].mul_add_assign(&w, hv);
        }
        out
    }
}

/// Fourier-domain Saint Venant symbol applied to `h` at frequency `y`.
pub fn saint_venant_symbol<S: Scalar>(
    y: &[S],
    h: &SymTensor<S>,
    r: usize,
) -> Result<BiSymTensor<S>, Error> {
    Ok(SvPlan::new(y.len(), h.rank(), r)?.apply_symbol(y, h))
}

/// Coordinate-free pairing form of the Saint Venant symbol:
/// `<W h, u ⊗ v> = sum_l (-1)^l C(m-r, l) <h, (j_y^l u)(j_y^{m-r-l} v)>`.
///
/// Retained as an independent oracle for [`saint_venant_symbol`].
pub fn saint_venant_symbol_pairing<S: Scalar>(
    y: &[S],
    h: &SymTensor<S>,
    r: usize,
    u: &SymTensor<S>,
    v: &SymTensor<S>,
) -> Result<S, Error> {
    let m = h.rank();
    if r > m {
        return Err(Error::OrderOutOfRange { name: "r", value: r, max: m });
    }
    assert_eq!(u.rank(), m - r, "u must have rank m - r");
    assert_eq!(v.rank(), m, "v must have rank m");
    let mut acc = S::zero();
    for l in 0..=(m - r) {
        let yl = SymTensor::power(y, l);
        let ym = SymTensor::power(y, m - r - l);
        let ju = u.contract_with(&yl);
        let jv = v.contract_with(&ym);
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let c = S::from_int(sign * binomial((m - r) as u32, l as u32) as i64);
        acc += c * h.inner(&ju.sym_product(&jv));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(num: i64, den: i64) -> Rational {
        Rational::from_ratio(num, den)
    }

    #[test]
    fn enumeration_examples() {
        let idx = enumerate_indices(2, 2);
        let axes: Vec<&[u8]> = idx.iter().map(|i| i.axes()).collect();
        assert_eq!(axes, [&[0u8, 0][..], &[0, 1], &[1, 1]]);

        assert_eq!(enumerate_indices(3, 0).len(), 1);
        assert_eq!(enumerate_indices(3, 0)[0].rank(), 0);
        assert_eq!(enumerate_indices(3, 2).len(), 6);
    }

    #[test]
    fn enumeration_counts_and_multiplicities() {
        for n in 1..=4usize {
            for m in 0..=6usize {
                let idx = enumerate_indices(n, m);
                assert_eq!(idx.len(), index_count(n, m));
                let total: u128 = idx.iter().map(SymIndex::multiplicity).sum();
                assert_eq!(total, (n as u128).pow(m as u32));
            }
        }
    }

    #[test]
    fn position_is_enumeration_rank() {
        let table = IndexTable::new(4, 5);
        for (pos, idx) in table.indices().iter().enumerate() {
            assert_eq!(table.position_sorted(idx.axes()), pos);
        }
    }

    #[test]
    fn sym_product_basis_examples() {
        // e1 * e1 -> component 1 at (0,0)
        let e1 = SymTensor::<Rational>::basis(2, 0);
        let sq = e1.sym_product(&e1);
        assert_eq!(*sq.get(&[0, 0]), q(1, 1));
        assert_eq!(*sq.get(&[0, 1]), q(0, 1));

        // e1 * e2 -> component 1/2 at (0,1)
        let e2 = SymTensor::<Rational>::basis(2, 1);
        let mixed = e1.sym_product(&e2);
        assert_eq!(*mixed.get(&[0, 1]), q(1, 2));
        assert_eq!(*mixed.get(&[0, 0]), q(0, 1));

        // scalar times tensor
        let c = SymTensor::scalar(2, q(3, 1));
        assert_eq!(c.sym_product(&mixed), mixed.scale(&q(3, 1)));
    }

    #[test]
    fn j_vec_examples() {
        let y = [q(2, 1), q(3, 1)];
        // j_y y^m = |y|^2 y^{m-1}
        let y3 = SymTensor::power(&y, 3);
        let contracted = j_vec(&y, &y3);
        let norm2 = q(13, 1);
        assert_eq!(contracted, SymTensor::power(&y, 2).scale(&norm2));

        // j_{e1}(e1 e2) = e2 / 2
        let e1 = SymTensor::<Rational>::basis(2, 0);
        let e2 = SymTensor::<Rational>::basis(2, 1);
        let out = j_vec(&[q(1, 1), q(0, 1)], &e1.sym_product(&e2));
        assert_eq!(out, e2.scale(&q(1, 2)));

        // contraction of a power orthogonal to y vanishes
        let w = SymTensor::power(&[q(-3, 1), q(2, 1)], 3);
        assert!(j_vec(&y, &w).is_zero());
    }

    #[test]
    fn delta_contraction_examples() {
        for n in 2..=4usize {
            let one = SymTensor::<Rational>::scalar(n, q(1, 1));
            let trace = j_delta(&i_delta(&one));
            assert_eq!(*trace.component(0), q(n as i64, 1));
        }

        // j_delta(y^{m+2}) = |y|^2 y^m
        let y = [q(1, 2), q(-2, 3)];
        let norm2 = q(1, 4) + q(4, 9);
        assert_eq!(j_delta(&SymTensor::power(&y, 4)), SymTensor::power(&y, 2).scale(&norm2));
    }

    #[test]
    #[should_panic]
    fn j_delta_rank_underflow_panics() {
        j_delta(&SymTensor::<Rational>::basis(2, 0));
    }

    #[test]
    fn inner_product_weights() {
        // <e1 e2, e1 e2> = 1/2: components (1/2) at (0,1) with multiplicity 2
        let e1 = SymTensor::<Rational>::basis(2, 0);
        let e2 = SymTensor::<Rational>::basis(2, 1);
        let t = e1.sym_product(&e2);
        assert_eq!(t.inner(&t), q(1, 2));
    }

    #[test]
    fn symbol_is_identity_like_for_r_equal_m() {
        // r = m: single l = 0 term; pairing <W h, 1 ⊗ v> = <h, v>
        let h = SymTensor::from_components(
            2,
            2,
            vec![q(1, 2), q(-3, 1), q(5, 3)],
        );
        let w = saint_venant_symbol(&[q(7, 1), q(-1, 2)], &h, 2).unwrap();
        let one = SymTensor::scalar(2, q(1, 1));
        for v in [
            SymTensor::power(&[q(1, 1), q(2, 1)], 2),
            SymTensor::power(&[q(-1, 3), q(1, 1)], 2),
        ] {
            assert_eq!(w.pair(&one, &v), h.inner(&v));
        }
    }

    #[test]
    fn symbol_matches_hand_example() {
        // m = 1, r = 0: entry[(i),(j)] = y_j h_i - y_i h_j
        let y = [q(1, 1), q(0, 1)];
        let h = SymTensor::<Rational>::basis(2, 0);
        let w = saint_venant_symbol(&y, &h, 0).unwrap();
        assert!(w.is_zero());

        let h2 = SymTensor::<Rational>::basis(2, 1);
        let w2 = saint_venant_symbol(&y, &h2, 0).unwrap();
        assert_eq!(*w2.get(&[0], &[1]), q(1, 1));
        assert_eq!(*w2.get(&[1], &[0]), q(-1, 1));
        assert_eq!(*w2.get(&[0], &[0]), q(0, 1));
        assert_eq!(*w2.get(&[1], &[1]), q(0, 1));
    }

    #[test]
    fn symbol_rejects_r_out_of_range() {
        let h = SymTensor::<Rational>::basis(2, 0);
        assert!(saint_venant_symbol(&[q(1, 1), q(0, 1)], &h, 2).is_err());
    }
}
