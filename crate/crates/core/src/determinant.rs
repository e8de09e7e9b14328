//! Division-free determinants over a commutative ring.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

pub trait CommRing: Clone {
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
}

macro_rules! num_ring {
    ($t:ty) => {
        impl CommRing for $t {
            fn ring_add(&self, other: &Self) -> Self {
                self + other
            }
            fn ring_mul(&self, other: &Self) -> Self {
                self * other
            }
            fn ring_neg(&self) -> Self {
                -self
            }
            fn ring_is_zero(&self) -> bool {
                num_traits::Zero::is_zero(self)
            }
        }
    };
}

num_ring!(BigInt);
num_ring!(BigRational);

/// Permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i8)>) {
        let n = used.len();
        if cur.len() == n {
            let inversions =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| cur[i] > cur[j]).count();
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Leibniz expansion up to size 6, memoized Laplace expansion along rows
/// beyond that. `one` fixes the ring's unit for the empty determinant.
pub fn determinant<T: CommRing>(m: &[Vec<T>], one: &T) -> T {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return one.clone();
    }
    if n <= 6 {
        leibniz(m, one)
    } else {
        let mut memo = HashMap::new();
        laplace(m, 0, (1u64 << n) - 1, one, &mut memo)
    }
}

fn leibniz<T: CommRing>(m: &[Vec<T>], one: &T) -> T {
    let zero = one.ring_add(&one.ring_neg());
    let mut acc = zero;
    'perm: for (p, sign) in permutations(m.len()) {
        let mut term = one.clone();
        for (i, &j) in p.iter().enumerate() {
            if m[i][j].ring_is_zero() {
                continue 'perm;
            }
            term = term.ring_mul(&m[i][j]);
        }
        acc = if sign > 0 { acc.ring_add(&term) } else { acc.ring_add(&term.ring_neg()) };
    }
    acc
}

/// Determinant of rows `row..` against the column set `cols`.
fn laplace<T: CommRing>(m: &[Vec<T>], row: usize, cols: u64, one: &T, memo: &mut HashMap<u64, T>) -> T {
    if row == m.len() {
        return one.clone();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = one.ring_add(&one.ring_neg());
    let mut position = 0;
    for j in 0..m.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        if !m[row][j].ring_is_zero() {
            let minor = laplace(m, row + 1, cols & !(1 << j), one, memo);
            let term = m[row][j].ring_mul(&minor);
            acc = if position % 2 == 0 { acc.ring_add(&term) } else { acc.ring_add(&term.ring_neg()) };
        }
        position += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}
